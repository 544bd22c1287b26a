//! Small eigenvalues of the Lichnerowicz Laplacian on tt-tensors.
//!
//! A tt-eigentensor with `Δ_L h = (10 − ε)h` corresponds to a solution of a
//! coupled system in a primitive (1,1)-form and a 3-form; its solution space is
//! assembled from the eigenspaces `E(μ)` of `Δ` on coclosed primitive
//! (1,1)-forms, and those come from Casimir constants and `ker δ`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::branching::{hom_dim, restrict, EmbeddingMap};
use crate::error::Result;
use crate::field::rat;
use crate::forms::lambda11_0;
use crate::lie::ReductiveSpaceData;
use crate::linalg::Matrix;
use crate::proto::coclosed_dim;
use crate::rep::{Group, IrrepLabel};

/// Which case of the solution-space description applies at a given `ε`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectralCase {
    /// `0 < ε < 25/4`, `ε ≠ 6`: `E(μ₁) ⊕ E(μ₂) ⊕ E(μ₃)`.
    Generic,
    /// `ε = 6`: `E(2) ⊕ ker Δ|Ω³`.
    Eps6,
    /// `ε = 25/4`: `E(3/4)`.
    Eps25Over4,
    /// `ε > 25/4`: no solutions.
    Empty,
}

pub fn spectral_case(eps: &BigRational) -> SpectralCase {
    let limit = rat(25, 4);
    if *eps > limit {
        SpectralCase::Empty
    } else if *eps == limit {
        SpectralCase::Eps25Over4
    } else if *eps == rat(6, 1) {
        SpectralCase::Eps6
    } else {
        SpectralCase::Generic
    }
}

/// `A = [[4−ε, −1], [−4(4−ε), 10−ε]]`.
pub fn matrix_a(eps: &BigRational) -> Matrix<BigRational> {
    let four = rat(4, 1) - eps;
    Matrix::from_rows(vec![
        vec![four.clone(), -BigRational::one()],
        vec![rat(-4, 1) * &four, rat(10, 1) - eps],
    ])
}

/// Exact square root of a non-negative rational, if it is a square.
pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(BigRational::new(root(x.numer())?, root(x.denom())?))
}

/// `μ₁,₂ = 7 − ε ± √(25 − 4ε)` and `μ₃ = 6 − ε`.
#[derive(Clone, Debug, PartialEq)]
pub struct MuValues {
    /// `None` when `25 − 4ε` is not a rational square.
    pub mu1: Option<BigRational>,
    pub mu2: Option<BigRational>,
    pub mu3: BigRational,
}

impl MuValues {
    pub fn is_exact(&self) -> bool {
        self.mu1.is_some()
    }
}

/// `None` for `ε > 25/4`, where `μ₁,₂` are not real.
pub fn mu_values(eps: &BigRational) -> Option<MuValues> {
    let disc = rat(25, 1) - rat(4, 1) * eps;
    if disc.is_negative() {
        return None;
    }
    let base = rat(7, 1) - eps;
    let s = rational_sqrt(&disc);
    Some(MuValues {
        mu1: s.as_ref().map(|s| &base + s),
        mu2: s.as_ref().map(|s| &base - s),
        mu3: rat(6, 1) - eps,
    })
}

/// All `ε ∈ (0, 25/4]` with `μᵢ(ε) = μ` for some `i`.
pub fn eps_roots(mu: &BigRational) -> Vec<BigRational> {
    let mut out = vec![rat(6, 1) - mu];
    if let Some(s) = rational_sqrt(&(rat(1, 1) + rat(4, 1) * mu)) {
        let base = rat(5, 1) - mu;
        out.push(&base + &s);
        out.push(&base - &s);
    }
    out.retain(|e| e.is_positive() && *e <= rat(25, 4));
    out.retain(|e| {
        let m = mu_values(e).expect("ε ≤ 25/4");
        [m.mu1, m.mu2, Some(m.mu3)].iter().flatten().any(|x| x == mu)
    });
    out.sort();
    out.dedup();
    out
}

/// Origin of a family of tt-eigentensors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Source {
    #[serde(rename = "harmonic-2-forms")]
    Harmonic2,
    #[serde(rename = "harmonic-3-forms")]
    Harmonic3,
    #[serde(rename = "E(mu) eigenforms")]
    Eigenforms,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Harmonic2 => "harmonic-2-forms",
            Source::Harmonic3 => "harmonic-3-forms",
            Source::Eigenforms => "E(mu) eigenforms",
        })
    }
}

fn source_of(mu: &BigRational) -> Source {
    if mu.is_zero() {
        Source::Harmonic2
    } else {
        Source::Eigenforms
    }
}

/// Dimensions `dim E(μ)` keyed by `μ`; absent keys are zero.
pub type EigenDims = BTreeMap<BigRational, u64>;

/// The summands of the solution space at `ε`, with their sources.
pub fn solution_parts(eps: &BigRational, e: &EigenDims, b3: u64) -> Vec<(Source, u64)> {
    let dim = |mu: &BigRational| e.get(mu).copied().unwrap_or(0);
    let mut parts = Vec::new();
    match spectral_case(eps) {
        SpectralCase::Empty => {}
        SpectralCase::Eps25Over4 => {
            let mu = rat(3, 4);
            parts.push((source_of(&mu), dim(&mu)));
        }
        SpectralCase::Eps6 => {
            parts.push((Source::Eigenforms, dim(&rat(2, 1))));
            parts.push((Source::Harmonic3, b3));
        }
        SpectralCase::Generic => {
            let m = mu_values(eps).expect("ε < 25/4");
            let mut mus: Vec<BigRational> = m.mu1.into_iter().chain(m.mu2).collect();
            if m.mu3 >= BigRational::zero() {
                mus.push(m.mu3);
            }
            for mu in mus {
                parts.push((source_of(&mu), dim(&mu)));
            }
        }
    }
    parts.retain(|(_, d)| *d > 0);
    parts
}

/// Dimension of the `(10 − ε)`-eigenspace of `Δ_L` on tt-tensors.
pub fn solution_dim(eps: &BigRational, e: &EigenDims, b3: u64) -> u64 {
    solution_parts(eps, e, b3).iter().map(|(_, d)| d).sum()
}

/// A rational rendered as a JSON integer when integral and as `"p/q"` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExactNumber(pub BigRational);

impl Serialize for ExactNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match (self.0.is_integer(), i64::try_from(self.0.to_integer())) {
            (true, Ok(n)) => s.serialize_i64(n),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl fmt::Display for ExactNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Destabilizing {
    pub lambda: ExactNumber,
    pub mult: u64,
    pub source: Source,
}

/// Per-`γ` data entering `E(μ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub gamma: String,
    pub casimir: ExactNumber,
    pub dim: u64,
    pub hom_dim: u64,
    pub coclosed_dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub space: String,
    pub coindex: u64,
    pub destabilizing: Vec<Destabilizing>,
    pub ied_dim: u64,
    #[serde(skip)]
    pub spectrum: Vec<SpectrumEntry>,
}

/// Casimir threshold: every `μ` entering an unstable or neutral direction is at most 12.
pub fn casimir_threshold() -> BigRational {
    rat(12, 1)
}

/// Spectrum data for every `γ` with `Cas_γ ≤ 12`, in the given order.
pub fn spectrum(space: &ReductiveSpaceData, labels: &[(IrrepLabel, BigRational)]) -> Result<Vec<SpectrumEntry>> {
    let group = Group::from_space(space);
    let emb = EmbeddingMap::from_space(space)?;
    let target = lambda11_0(space)?.decomposition;
    labels
        .par_iter()
        .map(|(gamma, cas)| {
            let h = hom_dim(&restrict(&group, gamma, &emb)?, &target)?;
            let c = if h == 0 { 0 } else { coclosed_dim(space, gamma)? as u64 };
            Ok(SpectrumEntry {
                gamma: gamma.to_string(),
                casimir: ExactNumber(cas.clone()),
                dim: group.dim(gamma)?,
                hom_dim: h,
                coclosed_dim: c,
            })
        })
        .collect()
}

/// `dim E(μ) = Σ dim V_γ · dim ker δ` over `γ` with `Cas_γ = μ`.
pub fn eigen_dims(spectrum: &[SpectrumEntry]) -> EigenDims {
    let mut e = EigenDims::new();
    for s in spectrum.iter().filter(|s| s.coclosed_dim > 0) {
        *e.entry(s.casimir.0.clone()).or_insert(0) += s.dim * s.coclosed_dim;
    }
    e
}

/// Assembles the destabilizing directions from `E(μ)` and `b₃`.
pub fn assemble(space: &str, e: &EigenDims, b3: u64, spectrum: Vec<SpectrumEntry>) -> StabilityReport {
    let mut candidates: Vec<BigRational> = e
        .iter()
        .filter(|(mu, d)| **d > 0 && **mu < casimir_threshold())
        .flat_map(|(mu, _)| eps_roots(mu))
        .collect();
    if b3 > 0 {
        candidates.push(rat(6, 1));
    }
    candidates.sort();
    candidates.dedup();
    let mut by_key: BTreeMap<(std::cmp::Reverse<BigRational>, Source), u64> = BTreeMap::new();
    for eps in &candidates {
        for (source, d) in solution_parts(eps, e, b3) {
            *by_key.entry((std::cmp::Reverse(eps.clone()), source)).or_insert(0) += d;
        }
    }
    let destabilizing: Vec<Destabilizing> = by_key
        .into_iter()
        .map(|((eps, source), mult)| Destabilizing {
            lambda: ExactNumber(rat(10, 1) - eps.0),
            mult,
            source,
        })
        .collect();
    let ied_dim = [rat(2, 1), rat(6, 1), rat(12, 1)]
        .iter()
        .map(|mu| e.get(mu).copied().unwrap_or(0))
        .sum();
    StabilityReport {
        space: space.to_string(),
        coindex: destabilizing.iter().map(|d| d.mult).sum(),
        destabilizing,
        ied_dim,
        spectrum,
    }
}

/// The coindex report of a catalog space.
pub fn coindex(space: &ReductiveSpaceData) -> Result<StabilityReport> {
    let labels = Group::from_space(space).labels_up_to(&casimir_threshold());
    let spectrum = spectrum(space, &labels)?;
    let e = eigen_dims(&spectrum);
    Ok(assemble(space.name.as_str(), &e, space.betti.1, spectrum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{build_space, SpaceName};
    use proptest::prelude::*;

    fn eigenvalues(m: &Matrix<BigRational>) -> Option<(BigRational, BigRational)> {
        let tr = &m[(0, 0)] + &m[(1, 1)];
        let det = m.det();
        let s = rational_sqrt(&(&tr * &tr - rat(4, 1) * det))?;
        let two = rat(2, 1);
        Some(((&tr + &s) / &two, (&tr - &s) / &two))
    }

    #[test]
    fn matrix_a_examples() {
        let a0 = matrix_a(&rat(0, 1));
        assert_eq!(a0, Matrix::from_rows(vec![vec![rat(4, 1), rat(-1, 1)], vec![rat(-16, 1), rat(10, 1)]]));
        assert_eq!(eigenvalues(&a0), Some((rat(12, 1), rat(2, 1))));
        assert_eq!(eigenvalues(&matrix_a(&rat(4, 1))), Some((rat(6, 1), rat(0, 1))));
        let a = matrix_a(&rat(25, 4));
        assert_eq!(eigenvalues(&a), Some((rat(3, 4), rat(3, 4))));
        let shifted = a.sub(&Matrix::identity(2).scale(&rat(3, 4)));
        assert_eq!(shifted.rank(), 1);
    }

    #[test]
    fn mu_examples() {
        let m = mu_values(&rat(4, 1)).unwrap();
        assert_eq!((m.mu1, m.mu2, m.mu3), (Some(rat(6, 1)), Some(rat(0, 1)), rat(2, 1)));
        let m = mu_values(&rat(0, 1)).unwrap();
        assert_eq!((m.mu1, m.mu2, m.mu3), (Some(rat(12, 1)), Some(rat(2, 1)), rat(6, 1)));
        assert_eq!(mu_values(&rat(6, 1)).unwrap().mu3, rat(0, 1));
        assert!(!mu_values(&rat(1, 1)).unwrap().is_exact());
        assert!(mu_values(&rat(7, 1)).is_none());
        assert_eq!(spectral_case(&rat(7, 1)), SpectralCase::Empty);
        assert_eq!(spectral_case(&rat(25, 4)), SpectralCase::Eps25Over4);
        assert_eq!(spectral_case(&rat(6, 1)), SpectralCase::Eps6);
    }

    #[test]
    fn eps_roots_of_zero() {
        assert_eq!(eps_roots(&rat(0, 1)), vec![rat(4, 1), rat(6, 1)]);
        assert_eq!(eps_roots(&rat(3, 4)), vec![rat(9, 4), rat(21, 4), rat(25, 4)]);
        assert!(eps_roots(&rat(12, 1)).is_empty());
    }

    #[test]
    fn solution_dim_examples() {
        let b = |pairs: &[(BigRational, u64)]| pairs.iter().cloned().collect::<EigenDims>();
        assert_eq!(solution_dim(&rat(6, 1), &b(&[(rat(2, 1), 0)]), 2), 2);
        assert_eq!(solution_dim(&rat(4, 1), &b(&[(rat(0, 1), 1)]), 0), 1);
        assert_eq!(solution_dim(&rat(7, 1), &b(&[(rat(0, 1), 5), (rat(2, 1), 5)]), 5), 0);
        assert_eq!(solution_dim(&rat(6, 1), &b(&[(rat(0, 1), 2)]), 0), 0);
        assert_eq!(solution_dim(&rat(25, 4), &b(&[(rat(3, 4), 3)]), 0), 3);
        assert_eq!(solution_dim(&rat(49, 8), &b(&[(rat(-1, 8), 3)]), 0), 0);
    }

    #[test]
    fn catalog_reports() {
        let expect = [
            (SpaceName::S3xS3, 2, 4, Source::Harmonic3, 0),
            (SpaceName::Cp3, 1, 6, Source::Harmonic2, 0),
            (SpaceName::Flag, 2, 6, Source::Harmonic2, 8),
        ];
        for (name, coindex_, lambda, source, ied) in expect {
            let s = build_space(name);
            let r = coindex(&s).unwrap();
            assert_eq!(r.coindex, coindex_, "{name}");
            assert_eq!(
                r.destabilizing,
                vec![Destabilizing {
                    lambda: ExactNumber(rat(lambda, 1)),
                    mult: coindex_,
                    source
                }]
            );
            assert_eq!(r.ied_dim, ied);
            let e = eigen_dims(&r.spectrum);
            assert_eq!(e.get(&rat(0, 1)).copied().unwrap_or(0), s.betti.0);
        }
    }

    #[test]
    fn flag_json_shape() {
        let r = coindex(&build_space(SpaceName::Flag)).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"space":"flag","coindex":2,"destabilizing":[{"lambda":6,"mult":2,"source":"harmonic-2-forms"}],"ied_dim":8}"#
        );
    }

    #[test]
    fn enumeration_order_is_irrelevant() {
        let s = build_space(SpaceName::Cp3);
        let mut labels = Group::from_space(&s).labels_up_to(&casimir_threshold());
        let base = assemble("cp3", &eigen_dims(&spectrum(&s, &labels).unwrap()), 0, vec![]);
        labels.reverse();
        let rev = assemble("cp3", &eigen_dims(&spectrum(&s, &labels).unwrap()), 0, vec![]);
        assert_eq!(base, rev);
    }

    proptest! {
        #[test]
        fn a_eigenvalues_match_mu(n in 1i64..100, d in 1i64..16) {
            let eps = rat(n, d);
            prop_assume!(eps < rat(25, 4));
            let m = mu_values(&eps).unwrap();
            if let (Some(mu1), Some(mu2)) = (m.mu1, m.mu2) {
                prop_assert_eq!(eigenvalues(&matrix_a(&eps)), Some((mu1, mu2)));
            } else {
                prop_assert!(eigenvalues(&matrix_a(&eps)).is_none());
            }
        }

        #[test]
        fn empty_case_has_no_solutions(n in 26i64..400, d in 1i64..4, dims in proptest::collection::vec(0u64..5, 4), b3 in 0u64..5) {
            let eps = rat(n, 4) + rat(1, 4 * d);
            prop_assume!(eps > rat(25, 4));
            let e: EigenDims = [rat(0, 1), rat(2, 1), rat(3, 4), rat(6, 1)].into_iter().zip(dims).collect();
            prop_assert_eq!(solution_dim(&eps, &e, b3), 0);
            prop_assert_eq!(solution_dim(&rat(n, d).min(rat(25, 4)), &EigenDims::new(), 0), 0);
        }
    }
}
