//! Lie algebras realized by explicit matrices, and the catalog of homogeneous spaces.
//!
//! Every algebra carries an invariant inner product `Q(X, Y) = c·tr(XY)`; the
//! structure constants are read off from commutators of the realizing
//! matrices, so all sign conventions are fixed by the matrices themselves.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::{basis_kvector, induced_derivation, wedge_vectors, Grade};
use crate::field::{rat, Field};
use crate::linalg::{dot, is_zero_vec, span_rank, vec_add, vec_scale, vec_sub, Matrix};
use crate::scalar::ScalarTower;
use crate::{Mat, Scalar};

/// A finite-dimensional Lie algebra with basis, structure constants and invariant form.
#[derive(Clone, Debug)]
pub struct LieAlgebraData {
    pub name: String,
    pub labels: Vec<String>,
    pub matrices: Vec<Mat>,
    /// `Q(X, Y) = trace_scale · tr(XY)` on the matrix realization.
    pub trace_scale: BigRational,
    /// `structure[a][b]` holds the coordinates of `[b_a, b_b]`.
    pub structure: Vec<Vec<Vec<Scalar>>>,
    pub gram: Mat,
    gram_inv: Mat,
}

impl LieAlgebraData {
    /// Builds the algebra spanned by `matrices`, which must be closed under commutators.
    pub fn from_matrices(name: &str, labels: &[&str], matrices: Vec<Mat>, trace_scale: BigRational) -> Result<Self> {
        let n = matrices.len();
        let c = Scalar::rational(trace_scale.clone());
        let gram = Matrix::from_fn(n, n, |a, b| matrices[a].mul(&matrices[b]).trace().mul_ref(&c));
        let gram_inv = gram.inverse()?;
        let mut alg = LieAlgebraData {
            name: name.to_string(),
            labels: labels.iter().map(|s| s.to_string()).collect(),
            matrices,
            trace_scale,
            structure: Vec::new(),
            gram,
            gram_inv,
        };
        let mut structure = vec![vec![Vec::new(); n]; n];
        for a in 0..n {
            for b in 0..n {
                let comm = alg.matrices[a].commutator(&alg.matrices[b]);
                structure[a][b] = alg
                    .coords_of(&comm)
                    .ok_or_else(|| Error::Inconsistent(format!("{name}: [{a},{b}] leaves the span")))?;
            }
        }
        alg.structure = structure;
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn basis_vector(&self, a: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[a] = Scalar::one();
        v
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn check_dim(&self, v: &[Scalar]) -> Result<()> {
        if v.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            })
        }
    }

    /// Lie bracket from the structure constants.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let mut out = vec![Scalar::zero(); self.dim()];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let f = xa * yb;
                for (o, c) in out.iter_mut().zip(&self.structure[a][b]) {
                    if !c.is_zero() {
                        *o += &(&f * c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Bilinear extension of `Q`.
    pub fn q(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot(x, &self.gram.mul_vec(y))
    }

    pub fn gram_inverse(&self) -> &Mat {
        &self.gram_inv
    }

    /// Matrix of `ad(x)` in the basis; column `b` is `[x, b_b]`.
    pub fn ad(&self, x: &[Scalar]) -> Mat {
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|b| self.bracket(x, &self.basis_vector(b)).expect("dimension"))
            .collect();
        Matrix::from_cols(&cols, self.dim())
    }

    /// The realizing matrix `Σ xₐ Mₐ`.
    pub fn matrix_of(&self, x: &[Scalar]) -> Mat {
        let (r, c) = (self.matrices[0].nrows(), self.matrices[0].ncols());
        x.iter()
            .zip(&self.matrices)
            .filter(|(s, _)| !s.is_zero())
            .fold(Matrix::zeros(r, c), |acc, (s, m)| acc.add(&m.scale(s)))
    }

    /// Coordinates of a matrix in the basis, if it lies in the span.
    pub fn coords_of(&self, m: &Mat) -> Option<Vec<Scalar>> {
        let c = Scalar::rational(self.trace_scale.clone());
        let pairings: Vec<Scalar> = self.matrices.iter().map(|b| b.mul(m).trace().mul_ref(&c)).collect();
        let coords = self.gram_inv.mul_vec(&pairings);
        (self.matrix_of(&coords) == *m).then_some(coords)
    }

    pub fn check_antisymmetry(&self) -> bool {
        let n = self.dim();
        (0..n).all(|a| (0..n).all(|b| vec_add(&self.structure[a][b], &self.structure[b][a]).iter().all(Zero::is_zero)))
    }

    pub fn check_jacobi(&self) -> bool {
        let n = self.dim();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let (x, y, z) = (self.basis_vector(a), self.basis_vector(b), self.basis_vector(c));
                    let t1 = self.bracket(&x, &self.bracket(&y, &z).unwrap()).unwrap();
                    let t2 = self.bracket(&y, &self.bracket(&z, &x).unwrap()).unwrap();
                    let t3 = self.bracket(&z, &self.bracket(&x, &y).unwrap()).unwrap();
                    if !is_zero_vec(&vec_add(&vec_add(&t1, &t2), &t3)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `Q([x,y],z) + Q(y,[x,z]) = 0` on all basis triples.
    pub fn check_invariance(&self) -> bool {
        let n = self.dim();
        for a in 0..n {
            let ad = self.ad(&self.basis_vector(a));
            let lhs = ad.transpose().mul(&self.gram).add(&self.gram.mul(&ad));
            if !lhs.is_zero() {
                return false;
            }
        }
        true
    }
}

/// The three catalog spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SpaceName {
    #[serde(rename = "s3xs3")]
    S3xS3,
    #[serde(rename = "cp3")]
    Cp3,
    #[serde(rename = "flag")]
    Flag,
}

impl SpaceName {
    pub const ALL: [SpaceName; 3] = [SpaceName::S3xS3, SpaceName::Cp3, SpaceName::Flag];

    pub fn as_str(&self) -> &'static str {
        match self {
            SpaceName::S3xS3 => "s3xs3",
            SpaceName::Cp3 => "cp3",
            SpaceName::Flag => "flag",
        }
    }
}

impl fmt::Display for SpaceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SpaceName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "s3xs3" => Ok(SpaceName::S3xS3),
            "cp3" => Ok(SpaceName::Cp3),
            "flag" => Ok(SpaceName::Flag),
            other => Err(Error::UnknownSpace(other.to_string())),
        }
    }
}

/// The compact groups `G` of the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    /// `SU(2)×SU(2)×SU(2)`.
    K3,
    So5,
    Su3,
}

impl GroupKind {
    pub fn name(&self) -> &'static str {
        match self {
            GroupKind::K3 => "SU(2)^3",
            GroupKind::So5 => "SO(5)",
            GroupKind::Su3 => "SU(3)",
        }
    }
}

/// The isotropy groups `H` of the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SubgroupKind {
    DiagSu2,
    U2,
    T2,
}

impl SubgroupKind {
    pub fn name(&self) -> &'static str {
        match self {
            SubgroupKind::DiagSu2 => "ΔSU(2)",
            SubgroupKind::U2 => "U(2)",
            SubgroupKind::T2 => "T^2",
        }
    }
}

/// A reductive homogeneous space `G/H` with a Q-orthonormal basis of `m = h^⊥`.
///
/// Vectors of `m` are stored in m-basis coordinates; vectors of `g` in
/// `g`-basis coordinates. Two-vectors use [`Grade`] ordering on the m-basis.
#[derive(Clone, Debug)]
pub struct ReductiveSpaceData {
    pub name: SpaceName,
    pub group: GroupKind,
    pub subgroup: SubgroupKind,
    pub g: LieAlgebraData,
    pub h_labels: Vec<String>,
    pub h_basis: Vec<Vec<Scalar>>,
    /// Torus of `G`; weights are eigenvalues divided by `i`.
    pub g_torus: Vec<Vec<Scalar>>,
    /// Torus of `H`.
    pub h_torus: Vec<Vec<Scalar>>,
    pub m_labels: Vec<String>,
    pub m_basis: Vec<Vec<Scalar>>,
    pub m_plus: Vec<Vec<Scalar>>,
    pub m_minus: Vec<Vec<Scalar>>,
    pub kahler: Vec<Scalar>,
    pub psi_minus: Option<Vec<Scalar>>,
    pub einstein: i64,
    pub scal: i64,
    pub betti: (u64, u64),
    /// The unnormalized frame vectors are `frame_scale[k] · m̂_k`.
    pub frame_scale: Vec<Scalar>,
}

impl ReductiveSpaceData {
    pub fn m_dim(&self) -> usize {
        self.m_basis.len()
    }

    /// Embeds m-coordinates into `g`.
    pub fn m_to_g(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.g.dim()];
        for (c, b) in v.iter().zip(&self.m_basis) {
            if !c.is_zero() {
                out = vec_add(&out, &vec_scale(b, c));
            }
        }
        out
    }

    /// Orthogonal projection of a `g`-vector onto m, in m-coordinates.
    pub fn project_m(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.m_basis.iter().map(|b| self.g.q(b, x)).collect()
    }

    /// `ad(x)` restricted to m, as a matrix in the m-basis.
    pub fn ad_m(&self, x: &[Scalar]) -> Mat {
        let cols: Vec<Vec<Scalar>> = self
            .m_basis
            .iter()
            .map(|b| self.project_m(&self.g.bracket(x, b).expect("dimension")))
            .collect();
        Matrix::from_cols(&cols, self.m_dim())
    }

    /// The h-action on `Λ²m`.
    pub fn lambda2_action(&self, x: &[Scalar]) -> Mat {
        induced_derivation(&Grade::new(self.m_dim(), 2), &self.ad_m(x))
    }

    /// The almost complex structure: `+i` on `m⁺`, `−i` on `m⁻`.
    pub fn complex_structure(&self) -> Mat {
        let n = self.m_dim();
        let mut cols = self.m_plus.clone();
        cols.extend(self.m_minus.iter().cloned());
        let p = Matrix::from_cols(&cols, n);
        let d = Matrix::from_fn(n, n, |a, b| {
            if a != b {
                Scalar::zero()
            } else if a < n / 2 {
                Scalar::i()
            } else {
                -Scalar::i()
            }
        });
        p.mul(&d).mul(&p.inverse().expect("m⁺ ⊕ m⁻ spans m"))
    }

    /// `½ Σ e_k ∧ J e_k` computed from `m^±`.
    pub fn kahler_from_j(&self) -> Vec<Scalar> {
        let n = self.m_dim();
        let j = self.complex_structure();
        let half = Scalar::frac(1, 2);
        let mut out = vec![Scalar::zero(); Grade::new(n, 2).dim()];
        for k in 0..n {
            let mut e = vec![Scalar::zero(); n];
            e[k] = Scalar::one();
            out = vec_add(&out, &wedge_vectors(n, &e, &j.col(k)));
        }
        vec_scale(&out, &half)
    }

    /// Two-vector from terms `(coefficient, i, j)` on the unnormalized frame (1-based indices).
    pub fn frame_bivector(&self, terms: &[(i64, usize, usize)]) -> Vec<Scalar> {
        let g2 = Grade::new(self.m_dim(), 2);
        let mut out = vec![Scalar::zero(); g2.dim()];
        for &(c, a, b) in terms {
            let s = &(&Scalar::from_int(c) * &self.frame_scale[a - 1]) * &self.frame_scale[b - 1];
            out = vec_add(&out, &basis_kvector(&g2, &[a - 1, b - 1], s));
        }
        out
    }

    /// Integer matrix `M` with `H-weight = M · G-weight`.
    pub fn embedding_matrix(&self) -> Result<Vec<Vec<i64>>> {
        let cols: Vec<Vec<Scalar>> = self.g_torus.clone();
        let a = Matrix::from_cols(&cols, self.g.dim());
        let mut out = Vec::new();
        for t in &self.h_torus {
            let c = a
                .solve(t)
                .ok_or_else(|| Error::Inconsistent("H torus not inside G torus".into()))?;
            let row = c
                .iter()
                .map(|x| {
                    x.to_rational()
                        .filter(|q| q.is_integer())
                        .and_then(|q| num_traits::ToPrimitive::to_i64(&q.to_integer()))
                        .ok_or_else(|| Error::Inconsistent("non-integral torus embedding".into()))
                })
                .collect::<Result<Vec<i64>>>()?;
            out.push(row);
        }
        Ok(out)
    }

    /// Serializable dump of all catalog data.
    pub fn to_json(&self) -> serde_json::Value {
        let g2 = Grade::new(self.m_dim(), 2);
        let mut structure = Vec::new();
        for a in 0..self.g.dim() {
            for b in a + 1..self.g.dim() {
                for (c, v) in self.g.structure[a][b].iter().enumerate() {
                    if !v.is_zero() {
                        structure.push(serde_json::json!({
                            "a": self.g.labels[a], "b": self.g.labels[b], "c": self.g.labels[c], "value": v
                        }));
                    }
                }
            }
        }
        let kahler: Vec<_> = (0..g2.dim())
            .filter(|&i| !self.kahler[i].is_zero())
            .map(|i| serde_json::json!({"term": g2.name(i), "coeff": self.kahler[i]}))
            .collect();
        serde_json::json!({
            "name": self.name,
            "group": self.g.name,
            "basis": self.g.labels,
            "trace_scale": self.g.trace_scale.to_string(),
            "gram": self.g.gram,
            "structure_constants": structure,
            "h_basis": self.h_basis,
            "m_labels": self.m_labels,
            "m_basis": self.m_basis,
            "m_plus": self.m_plus,
            "m_minus": self.m_minus,
            "kahler": kahler,
            "einstein": self.einstein,
            "scal": self.scal,
            "betti": [self.betti.0, self.betti.1],
        })
    }
}

/// Outcome of one named consistency check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub space: String,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Runs every structural invariant of a catalog space.
pub fn validate(space: &ReductiveSpaceData) -> ValidationReport {
    let mut checks = Vec::new();
    let mut push = |name: &str, pass: bool| checks.push(Check { name: name.to_string(), pass });
    let g = &space.g;
    push("antisymmetry", g.check_antisymmetry());
    push("jacobi", g.check_jacobi());
    push("ad-invariance of Q", g.check_invariance());

    let h_closed = space.h_basis.iter().all(|x| {
        space.h_basis.iter().all(|y| {
            let z = g.bracket(x, y).unwrap();
            span_rank(&[space.h_basis.clone(), vec![z]].concat()) == space.h_basis.len()
        })
    });
    push("h is a subalgebra", h_closed);

    let n = space.m_dim();
    let orthonormal = (0..n).all(|a| {
        (0..n).all(|b| {
            let expected = if a == b { Scalar::one() } else { Scalar::zero() };
            g.q(&space.m_basis[a], &space.m_basis[b]) == expected
        })
    });
    push("m-basis is Q-orthonormal", orthonormal);
    let perpendicular = space.h_basis.iter().all(|x| space.m_basis.iter().all(|y| g.q(x, y).is_zero()));
    push("m is Q-orthogonal to h", perpendicular && space.h_basis.len() + n == g.dim());

    let reductive = space.h_basis.iter().all(|x| {
        space.m_basis.iter().all(|y| {
            let z = g.bracket(x, y).unwrap();
            space.m_to_g(&space.project_m(&z)) == z
        })
    });
    push("[h, m] ⊆ m", reductive);

    let swapped = space.m_plus.len() == n / 2
        && space.m_plus.iter().zip(&space.m_minus).all(|(p, m)| p.iter().map(Scalar::conjugate).collect::<Vec<_>>() == *m);
    let spans = span_rank(&[space.m_plus.clone(), space.m_minus.clone()].concat()) == n;
    push("m⁺ ⊕ m⁻ = m^C, swapped by conjugation", swapped && spans);

    let plus_invariant = space.h_basis.iter().all(|x| {
        let ad = space.ad_m(x);
        space.m_plus.iter().all(|v| {
            let w = ad.mul_vec(v);
            span_rank(&[space.m_plus.clone(), vec![w]].concat()) == space.m_plus.len()
        })
    });
    push("m⁺ is h-invariant", plus_invariant);

    push("kähler form matches J", space.kahler_from_j() == space.kahler);
    let kahler_invariant = space
        .h_basis
        .iter()
        .all(|x| is_zero_vec(&space.lambda2_action(x).mul_vec(&space.kahler)));
    push("kähler form is h-invariant", kahler_invariant);

    if let Some(psi) = &space.psi_minus {
        let g3 = Grade::new(n, 3);
        let inv = space
            .h_basis
            .iter()
            .all(|x| is_zero_vec(&induced_derivation(&g3, &space.ad_m(x)).mul_vec(psi)));
        push("Ψ⁻ is h-invariant", inv);
    }

    let torus_ok = space.embedding_matrix().is_ok()
        && space.g_torus.iter().all(|x| space.g_torus.iter().all(|y| is_zero_vec(&g.bracket(x, y).unwrap())));
    push("torus data consistent", torus_ok);

    ValidationReport {
        space: space.name.to_string(),
        checks,
    }
}

fn unit(n: usize, i: usize, j: usize, c: Scalar) -> Mat {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = c;
    m
}

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn coord(dim: usize, entries: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    for (k, c) in entries {
        v[*k] = &v[*k] + c;
    }
    v
}

/// The three `su(2)` generators `Y₁, Y₂, Y₃` with `Q(Yₐ, Y_b) = δ_ab/12` under `Q = −⅓ tr`.
pub fn su2_generators() -> [Mat; 3] {
    let k = (&s(2) * &ScalarTower::sqrt2()).inv().unwrap();
    let i = Scalar::i();
    let y1 = Matrix::from_rows(vec![vec![s(0), i.clone()], vec![i.clone(), s(0)]]).scale(&k);
    let y2 = Matrix::from_rows(vec![vec![s(0), s(-1)], vec![s(1), s(0)]]).scale(&k);
    let y3 = Matrix::from_rows(vec![vec![i.clone(), s(0)], vec![s(0), -i]]).scale(&k);
    [y1, y2, y3]
}

fn block_diag(blocks: &[Mat]) -> Mat {
    let n: usize = blocks.iter().map(Matrix::nrows).sum();
    let mut out = Matrix::zeros(n, n);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.nrows() {
            for j in 0..b.ncols() {
                out[(off + i, off + j)] = b[(i, j)].clone();
            }
        }
        off += b.nrows();
    }
    out
}

/// `su(2)³` realized block-diagonally; basis index `3f + a` is `Y_{a+1}` in factor `f`.
pub fn k3_algebra() -> LieAlgebraData {
    let ys = su2_generators();
    let zero = Matrix::zeros(2, 2);
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for f in 0..3 {
        for (a, y) in ys.iter().enumerate() {
            let mut blocks = vec![zero.clone(), zero.clone(), zero.clone()];
            blocks[f] = y.clone();
            mats.push(block_diag(&blocks));
            labels.push(format!("Y{}^{}", a + 1, f + 1));
        }
    }
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    LieAlgebraData::from_matrices("su(2)+su(2)+su(2)", &refs, mats, rat(-1, 3)).expect("su(2)^3")
}

/// `so(5)` in the basis `H₁, H₂, k₁, k₂, e₁, …, e₄, f₁, f₂` with `Q = −¼ tr`.
pub fn so5_algebra() -> LieAlgebraData {
    let l = |a: usize, b: usize| unit(5, a - 1, b - 1, s(1)).sub(&unit(5, b - 1, a - 1, s(1)));
    let mats = vec![
        l(1, 2).scale(&s(-1)),
        l(3, 4).scale(&s(-1)),
        l(1, 3).add(&l(2, 4)),
        l(1, 4).sub(&l(2, 3)),
        l(1, 5),
        l(2, 5),
        l(3, 5),
        l(4, 5),
        l(1, 3).sub(&l(2, 4)),
        l(1, 4).add(&l(2, 3)),
    ];
    let labels = ["H1", "H2", "k1", "k2", "e1", "e2", "e3", "e4", "f1", "f2"];
    LieAlgebraData::from_matrices("so(5)", &labels, mats, rat(-1, 4)).expect("so(5)")
}

fn su3_offdiagonal() -> Vec<Mat> {
    let e = |a: usize, b: usize| unit(3, a - 1, b - 1, s(1));
    let i = Scalar::i();
    vec![
        e(1, 2).sub(&e(2, 1)),
        e(1, 2).add(&e(2, 1)).scale(&i),
        e(1, 3).sub(&e(3, 1)),
        e(1, 3).add(&e(3, 1)).scale(&i),
        e(2, 3).sub(&e(3, 2)),
        e(2, 3).add(&e(3, 2)).scale(&i),
    ]
}

/// `su(3)` in the basis `τ₁ = diag(i,0,−i)`, `τ₂ = diag(0,i,−i)`, `e₁, …, e₆` with `Q = −½ tr`.
pub fn su3_algebra() -> LieAlgebraData {
    let i = Scalar::i();
    let tau1 = unit(3, 0, 0, i.clone()).add(&unit(3, 2, 2, -i.clone()));
    let tau2 = unit(3, 1, 1, i.clone()).add(&unit(3, 2, 2, -i));
    let mut mats = vec![tau1, tau2];
    mats.extend(su3_offdiagonal());
    let labels = ["t1", "t2", "e1", "e2", "e3", "e4", "e5", "e6"];
    LieAlgebraData::from_matrices("su(3)", &labels, mats, rat(-1, 2)).expect("su(3)")
}

/// `u(3)` in the basis `h₁, h₂, h₃, e₁, …, e₆` with `h_k = iE_kk` and `Q = −½ tr`.
pub fn u3_algebra() -> LieAlgebraData {
    let mut mats: Vec<Mat> = (0..3).map(|k| unit(3, k, k, Scalar::i())).collect();
    mats.extend(su3_offdiagonal());
    let labels = ["h1", "h2", "h3", "e1", "e2", "e3", "e4", "e5", "e6"];
    LieAlgebraData::from_matrices("u(3)", &labels, mats, rat(-1, 2)).expect("u(3)")
}

fn conj_vec(v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(Scalar::conjugate).collect()
}

fn psi_minus_flag() -> Vec<Scalar> {
    let g3 = Grade::new(6, 3);
    let terms: [(i64, [usize; 3]); 4] = [(1, [2, 3, 6]), (-1, [1, 4, 6]), (-1, [1, 3, 5]), (-1, [2, 4, 5])];
    terms.iter().fold(vec![Scalar::zero(); g3.dim()], |acc, (c, idx)| {
        let zero_based: Vec<usize> = idx.iter().map(|k| k - 1).collect();
        vec_add(&acc, &basis_kvector(&g3, &zero_based, s(*c)))
    })
}

fn build_s3xs3() -> ReductiveSpaceData {
    let g = k3_algebra();
    let r2 = ScalarTower::sqrt2();
    let r6 = ScalarTower::sqrt6();
    let inv_r2 = r2.inv().unwrap();
    let h_basis: Vec<Vec<Scalar>> = (0..3).map(|a| coord(9, &[(a, s(1)), (3 + a, s(1)), (6 + a, s(1))])).collect();
    let two_r2 = &s(2) * &r2;
    let g_torus: Vec<Vec<Scalar>> = (0..3).map(|f| coord(9, &[(3 * f + 2, two_r2.clone())])).collect();
    let h_torus = vec![coord(9, &[(2, two_r2.clone()), (5, two_r2.clone()), (8, two_r2)])];
    let mut m_basis = Vec::new();
    for a in 0..3 {
        m_basis.push(coord(9, &[(a, &s(2) * &r2), (3 + a, -r2.clone()), (6 + a, -r2.clone())]));
    }
    for a in 0..3 {
        m_basis.push(coord(9, &[(3 + a, r6.clone()), (6 + a, -r6.clone())]));
    }
    let m_plus: Vec<Vec<Scalar>> = (0..3)
        .map(|a| coord(6, &[(a, inv_r2.clone()), (3 + a, &Scalar::i() * &inv_r2)]))
        .collect();
    let m_minus = m_plus.iter().map(|v| conj_vec(v)).collect();
    let mut space = ReductiveSpaceData {
        name: SpaceName::S3xS3,
        group: GroupKind::K3,
        subgroup: SubgroupKind::DiagSu2,
        g,
        h_labels: vec!["Y1".into(), "Y2".into(), "Y3".into()],
        h_basis,
        g_torus,
        h_torus,
        m_labels: ["a1", "a2", "a3", "b1", "b2", "b3"].map(String::from).to_vec(),
        m_basis,
        m_plus,
        m_minus,
        kahler: Vec::new(),
        psi_minus: None,
        einstein: 5,
        scal: 30,
        betti: (0, 2),
        frame_scale: vec![s(1); 6],
    };
    space.kahler = space.frame_bivector(&[(-1, 1, 4), (-1, 2, 5), (-1, 3, 6)]);
    space
}

fn build_cp3() -> ReductiveSpaceData {
    let g = so5_algebra();
    let r2 = ScalarTower::sqrt2();
    let inv_r2 = r2.inv().unwrap();
    let i = Scalar::i();
    let h_basis: Vec<Vec<Scalar>> = (0..4).map(|k| g.basis_vector(k)).collect();
    let g_torus = vec![g.basis_vector(0), g.basis_vector(1)];
    let h_torus = vec![
        vec_sub(&g.basis_vector(0), &g.basis_vector(1)),
        vec_add(&g.basis_vector(0), &g.basis_vector(1)),
    ];
    let mut m_basis: Vec<Vec<Scalar>> = (4..8).map(|k| vec_scale(&g.basis_vector(k), &r2)).collect();
    m_basis.push(g.basis_vector(8));
    m_basis.push(g.basis_vector(9));
    let m_plus = vec![
        coord(6, &[(0, inv_r2.clone()), (1, -(&i * &inv_r2))]),
        coord(6, &[(2, inv_r2.clone()), (3, -(&i * &inv_r2))]),
        coord(6, &[(4, inv_r2.clone()), (5, &i * &inv_r2)]),
    ];
    let m_minus = m_plus.iter().map(|v| conj_vec(v)).collect();
    let mut space = ReductiveSpaceData {
        name: SpaceName::Cp3,
        group: GroupKind::So5,
        subgroup: SubgroupKind::U2,
        h_labels: ["H1", "H2", "k1", "k2"].map(String::from).to_vec(),
        g,
        h_basis,
        g_torus,
        h_torus,
        m_labels: ["√2e1", "√2e2", "√2e3", "√2e4", "f1", "f2"].map(String::from).to_vec(),
        m_basis,
        m_plus,
        m_minus,
        kahler: Vec::new(),
        psi_minus: None,
        einstein: 5,
        scal: 30,
        betti: (1, 0),
        frame_scale: vec![inv_r2.clone(), inv_r2.clone(), inv_r2.clone(), inv_r2, s(1), s(1)],
    };
    space.kahler = space.frame_bivector(&[(2, 1, 2), (2, 3, 4), (-1, 5, 6)]);
    space
}

fn build_flag() -> ReductiveSpaceData {
    let g = su3_algebra();
    let inv_r2 = ScalarTower::sqrt2().inv().unwrap();
    let i = Scalar::i();
    let torus = vec![g.basis_vector(0), g.basis_vector(1)];
    let m_basis: Vec<Vec<Scalar>> = (2..8).map(|k| g.basis_vector(k)).collect();
    let m_plus = vec![
        coord(6, &[(0, inv_r2.clone()), (1, -(&i * &inv_r2))]),
        coord(6, &[(2, inv_r2.clone()), (3, &i * &inv_r2)]),
        coord(6, &[(4, inv_r2.clone()), (5, -(&i * &inv_r2))]),
    ];
    let m_minus = m_plus.iter().map(|v| conj_vec(v)).collect();
    let mut space = ReductiveSpaceData {
        name: SpaceName::Flag,
        group: GroupKind::Su3,
        subgroup: SubgroupKind::T2,
        h_labels: vec!["t1".into(), "t2".into()],
        g,
        h_basis: torus.clone(),
        g_torus: torus.clone(),
        h_torus: torus,
        m_labels: ["e1", "e2", "e3", "e4", "e5", "e6"].map(String::from).to_vec(),
        m_basis,
        m_plus,
        m_minus,
        kahler: Vec::new(),
        psi_minus: Some(psi_minus_flag()),
        einstein: 5,
        scal: 30,
        betti: (2, 0),
        frame_scale: vec![s(1); 6],
    };
    space.kahler = space.frame_bivector(&[(1, 1, 2), (-1, 3, 4), (1, 5, 6)]);
    space
}

/// Catalog lookup.
pub fn build_space(name: SpaceName) -> ReductiveSpaceData {
    match name {
        SpaceName::S3xS3 => build_s3xs3(),
        SpaceName::Cp3 => build_cp3(),
        SpaceName::Flag => build_flag(),
    }
}

/// Catalog lookup by string name.
pub fn build_space_named(name: &str) -> Result<ReductiveSpaceData> {
    Ok(build_space(name.parse()?))
}

/// The flag manifold written as `U(3)/T³`, sharing the m-basis `e₁, …, e₆` with [`build_space`]`(Flag)`.
pub fn flag_u3() -> ReductiveSpaceData {
    let mut space = build_flag();
    let g = u3_algebra();
    space.h_basis = (0..3).map(|k| g.basis_vector(k)).collect();
    space.h_labels = vec!["h1".into(), "h2".into(), "h3".into()];
    space.g_torus = space.h_basis.clone();
    space.h_torus = space.h_basis.clone();
    space.m_basis = (3..9).map(|k| g.basis_vector(k)).collect();
    space.g = g;
    space
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_spaces_validate() {
        for name in SpaceName::ALL {
            let report = validate(&build_space(name));
            for c in &report.checks {
                assert!(c.pass, "{name}: {}", c.name);
            }
        }
        let report = validate(&flag_u3());
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn u3_brackets() {
        let g = u3_algebra();
        let (h1, h2) = (g.basis_vector(0), g.basis_vector(1));
        assert!(is_zero_vec(&g.bracket(&h1, &h2).unwrap()));
        let e1 = g.basis_vector(3);
        assert_eq!(g.bracket(&e1, &h2).unwrap(), g.basis_vector(4));
        assert!(is_zero_vec(&g.bracket(&e1, &e1).unwrap()));
        assert!(g.bracket(&e1, &[Scalar::one()]).is_err());
    }

    #[test]
    fn flag_metric_from_killing_form() {
        let g = su3_algebra();
        // B(X, Y) = 6 tr(XY) on su(3); −B/12 gives −½ tr.
        let e1 = &g.matrices[2];
        let b = e1.mul(e1).trace().mul_ref(&s(6));
        assert_eq!(b.mul_ref(&Scalar::frac(-1, 12)), Scalar::one());
        assert_eq!(g.gram[(2, 2)], Scalar::one());
    }

    #[test]
    fn kahler_forms() {
        let flag = build_space(SpaceName::Flag);
        let g2 = Grade::new(6, 2);
        let expected = vec_add(
            &vec_add(&basis_kvector(&g2, &[0, 1], s(1)), &basis_kvector(&g2, &[2, 3], s(-1))),
            &basis_kvector(&g2, &[4, 5], s(1)),
        );
        assert_eq!(flag.kahler_from_j(), expected);
        let cp3 = build_space(SpaceName::Cp3);
        let orthonormal = vec_add(
            &vec_add(&basis_kvector(&g2, &[0, 1], s(1)), &basis_kvector(&g2, &[2, 3], s(1))),
            &basis_kvector(&g2, &[4, 5], s(-1)),
        );
        assert_eq!(cp3.kahler_from_j(), orthonormal);
        assert_eq!(build_space(SpaceName::S3xS3).betti, (0, 2));
    }

    #[test]
    fn corrupted_structure_constant_breaks_jacobi() {
        let mut g = su3_algebra();
        let bump = Scalar::one();
        g.structure[2][3][0] = &g.structure[2][3][0] + &bump;
        g.structure[3][2][0] = &g.structure[3][2][0] - &bump;
        assert!(g.check_antisymmetry());
        assert!(!g.check_jacobi());
    }

    #[test]
    fn s3xs3_plus_vectors_are_the_cube_root_combinations() {
        let space = build_space(SpaceName::S3xS3);
        let j = ScalarTower::j();
        let x1 = space.m_to_g(&space.m_plus[0]);
        let expected = coord(9, &[(0, s(2)), (3, &s(2) * &j), (6, &(&s(2) * &j) * &j)]);
        assert_eq!(x1, expected);
    }

    #[test]
    fn embedding_matrices() {
        assert_eq!(build_space(SpaceName::S3xS3).embedding_matrix().unwrap(), vec![vec![1, 1, 1]]);
        assert_eq!(build_space(SpaceName::Cp3).embedding_matrix().unwrap(), vec![vec![1, -1], vec![1, 1]]);
        assert_eq!(build_space(SpaceName::Flag).embedding_matrix().unwrap(), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn unknown_space() {
        assert!(matches!(build_space_named("s6"), Err(Error::UnknownSpace(_))));
    }
}
