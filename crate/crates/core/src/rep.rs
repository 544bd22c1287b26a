//! Highest-weight theory for the catalog groups: weight systems, dimensions,
//! Casimir constants and explicit representation matrices.
//!
//! Weights are recorded in torus-eigenvalue coordinates: for the torus
//! generators `T₁, …, T_r` of a catalog space, a weight vector `v` has weight
//! `(n₁, …, n_r)` when `ρ(T_k)v = i·n_k·v`. The inner product on weights is
//! the inverse of the Gram matrix of `Q` on the torus generators.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{rat, Field};
use crate::lie::{GroupKind, LieAlgebraData, ReductiveSpaceData};
use crate::linalg::{vec_scale, Matrix};
use crate::{Mat, Scalar};

/// Weight multiplicities.
pub type WeightSystem = BTreeMap<Vec<i64>, u64>;

/// A highest-weight label for one of the catalog groups.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IrrepLabel {
    pub group: GroupKind,
    pub label: Vec<u32>,
}

impl IrrepLabel {
    pub fn new(group: GroupKind, label: &[u32]) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidLabel {
            group: group.name().to_string(),
            label: format!("{label:?}"),
            reason: reason.to_string(),
        };
        let rank = match group {
            GroupKind::K3 => 3,
            GroupKind::So5 | GroupKind::Su3 => 2,
        };
        if label.len() != rank {
            return Err(invalid("wrong number of entries"));
        }
        if group == GroupKind::So5 && label[0] < label[1] {
            return Err(invalid("SO(5) labels need a ≥ b"));
        }
        Ok(IrrepLabel {
            group,
            label: label.to_vec(),
        })
    }

    pub fn trivial(group: GroupKind) -> Self {
        let rank = if group == GroupKind::K3 { 3 } else { 2 };
        IrrepLabel {
            group,
            label: vec![0; rank],
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.label.iter().all(|&x| x == 0)
    }

    /// Parses `"1,1,0"` (parentheses optional).
    pub fn parse(group: GroupKind, text: &str) -> Result<Self> {
        let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = trimmed
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{text}: {e}"))))
            .collect::<Result<Vec<u32>>>()?;
        Self::new(group, &parts)
    }

    /// Highest weight in torus-eigenvalue coordinates.
    pub fn highest_weight(&self) -> Vec<i64> {
        let l: Vec<i64> = self.label.iter().map(|&x| x as i64).collect();
        match self.group {
            GroupKind::K3 | GroupKind::So5 => l,
            GroupKind::Su3 => vec![l[0] + l[1], l[1]],
        }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.label.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Root data in torus-eigenvalue coordinates.
#[derive(Clone, Debug)]
pub struct RootData {
    pub positive: Vec<Vec<i64>>,
    pub simple: Vec<Vec<i64>>,
}

impl RootData {
    pub fn of(kind: GroupKind) -> Self {
        match kind {
            GroupKind::K3 => {
                let simple = vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]];
                RootData {
                    positive: simple.clone(),
                    simple,
                }
            }
            GroupKind::So5 => RootData {
                positive: vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, -1]],
                simple: vec![vec![1, -1], vec![0, 1]],
            },
            GroupKind::Su3 => RootData {
                positive: vec![vec![1, -1], vec![2, 1], vec![1, 2]],
                simple: vec![vec![1, -1], vec![1, 2]],
            },
        }
    }
}

/// A catalog group: its Lie algebra, torus and root data.
#[derive(Clone, Debug)]
pub struct Group {
    pub kind: GroupKind,
    pub algebra: LieAlgebraData,
    pub torus: Vec<Vec<Scalar>>,
    pub roots: RootData,
    /// Inverse Gram matrix of `Q` on the torus generators.
    pub dual_gram: Matrix<BigRational>,
}

fn to_q(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
}

impl Group {
    pub fn from_space(space: &ReductiveSpaceData) -> Self {
        let alg = space.g.clone();
        let torus = space.g_torus.clone();
        let r = torus.len();
        let gram = Matrix::from_fn(r, r, |a, b| {
            alg.q(&torus[a], &torus[b])
                .to_rational()
                .expect("torus Gram matrix is rational")
        });
        let dual_gram = gram.inverse().expect("torus Gram matrix is nondegenerate");
        Group {
            kind: space.group,
            algebra: alg,
            torus,
            roots: RootData::of(space.group),
            dual_gram,
        }
    }

    pub fn rank(&self) -> usize {
        self.torus.len()
    }

    pub fn ip(&self, a: &[BigRational], b: &[BigRational]) -> BigRational {
        crate::linalg::dot(a, &self.dual_gram.mul_vec(b))
    }

    fn ip_int(&self, a: &[i64], b: &[i64]) -> BigRational {
        self.ip(&to_q(a), &to_q(b))
    }

    /// `2δ`, the sum of the positive roots.
    pub fn two_delta(&self) -> Vec<i64> {
        let mut out = vec![0; self.rank()];
        for a in &self.roots.positive {
            for (o, x) in out.iter_mut().zip(a) {
                *o += x;
            }
        }
        out
    }

    fn check_group(&self, gamma: &IrrepLabel) -> Result<()> {
        if gamma.group == self.kind {
            Ok(())
        } else {
            Err(Error::SubgroupMismatch(gamma.group.name().into(), self.kind.name().into()))
        }
    }

    /// Freudenthal's constant `⟨γ, γ + 2δ⟩`.
    pub fn casimir(&self, gamma: &IrrepLabel) -> Result<BigRational> {
        self.check_group(gamma)?;
        let l = gamma.highest_weight();
        let shifted: Vec<i64> = l.iter().zip(self.two_delta()).map(|(a, b)| a + b).collect();
        Ok(self.ip_int(&l, &shifted))
    }

    /// Weyl dimension formula.
    pub fn dim(&self, gamma: &IrrepLabel) -> Result<u64> {
        self.check_group(gamma)?;
        let l = to_q(&gamma.highest_weight());
        let delta: Vec<BigRational> = to_q(&self.two_delta()).into_iter().map(|x| x / BigInt::from(2)).collect();
        let shifted: Vec<BigRational> = l.iter().zip(&delta).map(|(a, b)| a + b).collect();
        let mut d = BigRational::one();
        for alpha in &self.roots.positive {
            let a = to_q(alpha);
            d = d * self.ip(&shifted, &a) / self.ip(&delta, &a);
        }
        d.to_integer()
            .to_u64()
            .filter(|_| d.is_integer())
            .ok_or_else(|| Error::Inconsistent("non-integral Weyl dimension".into()))
    }

    /// Coordinates of a weight in the basis of simple roots.
    fn simple_coords(&self, w: &[i64]) -> Vec<BigRational> {
        let s: Vec<Vec<BigRational>> = self.roots.simple.iter().map(|a| to_q(a)).collect();
        Matrix::from_cols(&s, self.rank())
            .solve(&to_q(w))
            .expect("simple roots span the weight space")
    }

    /// Full weight multiset via Freudenthal's recursion.
    pub fn weight_system(&self, gamma: &IrrepLabel) -> Result<WeightSystem> {
        self.check_group(gamma)?;
        let lam = gamma.highest_weight();
        let r = self.rank();
        let two_lam: Vec<i64> = lam.iter().map(|x| 2 * x).collect();
        let spread: BigRational = self.simple_coords(&two_lam).iter().map(|c| c.abs()).sum();
        let bound = spread.ceil().to_integer().to_i64().unwrap_or(0) + 1;

        let delta: Vec<BigRational> = to_q(&self.two_delta()).into_iter().map(|x| x / BigInt::from(2)).collect();
        let plus_delta = |w: &[i64]| -> Vec<BigRational> { to_q(w).iter().zip(&delta).map(|(a, b)| a + b).collect() };
        let top = {
            let v = plus_delta(&lam);
            self.ip(&v, &v)
        };
        let lam_norm = self.ip_int(&lam, &lam);

        let mut depths: Vec<Vec<i64>> = vec![vec![]];
        for _ in 0..r {
            depths = depths
                .into_iter()
                .flat_map(|p| (0..=bound).map(move |k| [p.clone(), vec![k]].concat()))
                .collect();
        }
        depths.sort_by_key(|n| (n.iter().sum::<i64>(), n.clone()));

        let mut mult: WeightSystem = BTreeMap::new();
        for n in depths {
            let mut mu = lam.clone();
            for (k, a) in n.iter().zip(&self.roots.simple) {
                for (m, x) in mu.iter_mut().zip(a) {
                    *m -= k * x;
                }
            }
            if self.ip_int(&mu, &mu) > lam_norm {
                continue;
            }
            if n.iter().all(|&k| k == 0) {
                mult.insert(mu, 1);
                continue;
            }
            let mut num = BigRational::zero();
            for alpha in &self.roots.positive {
                for k in 1..=(2 * bound + 2) {
                    let higher: Vec<i64> = mu.iter().zip(alpha).map(|(m, a)| m + k * a).collect();
                    if let Some(&m) = mult.get(&higher) {
                        num += self.ip_int(&higher, alpha) * BigInt::from(m);
                    }
                }
            }
            num *= BigInt::from(2);
            let here = plus_delta(&mu);
            let den = &top - self.ip(&here, &here);
            let m = if den.is_zero() {
                if !num.is_zero() {
                    return Err(Error::Inconsistent("Freudenthal recursion degenerate".into()));
                }
                BigRational::zero()
            } else {
                num / den
            };
            if !m.is_integer() || m.is_negative() {
                return Err(Error::Inconsistent(format!("multiplicity {m} at {mu:?}")));
            }
            let m = m.to_integer().to_u64().unwrap_or(0);
            if m > 0 {
                mult.insert(mu, m);
            }
        }
        Ok(mult)
    }

    /// Reflection of a weight in a root.
    pub fn reflect(&self, alpha: &[i64], mu: &[i64]) -> Vec<i64> {
        let c = self.ip_int(mu, alpha) * BigInt::from(2) / self.ip_int(alpha, alpha);
        let c = c.to_integer().to_i64().expect("integral reflection");
        mu.iter().zip(alpha).map(|(m, a)| m - c * a).collect()
    }

    /// Whether a weight is dominant.
    pub fn is_dominant(&self, w: &[i64]) -> bool {
        self.roots.simple.iter().all(|a| !self.ip_int(w, a).is_negative())
    }

    /// All labels with Casimir constant at most `max`, sorted by `(Casimir, label)`.
    pub fn labels_up_to(&self, max: &BigRational) -> Vec<(IrrepLabel, BigRational)> {
        let start = IrrepLabel::trivial(self.kind);
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        let mut out = Vec::new();
        while let Some(l) = queue.pop_front() {
            if !seen.insert(l.clone()) {
                continue;
            }
            let c = self.casimir(&l).expect("same group");
            if &c > max {
                continue;
            }
            out.push((l.clone(), c));
            for k in 0..l.label.len() {
                let mut next = l.label.clone();
                next[k] += 1;
                if let Ok(n) = IrrepLabel::new(self.kind, &next) {
                    queue.push_back(n);
                }
            }
        }
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        out
    }
}

/// Matrices of `ρ_*` on every basis vector of `g`.
#[derive(Clone, Debug)]
pub struct ExplicitRep {
    pub label: IrrepLabel,
    pub basis_labels: Vec<String>,
    pub matrices: Vec<Mat>,
}

impl ExplicitRep {
    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    /// `ρ_*(x)` for `x` in `g`-coordinates.
    pub fn action(&self, x: &[Scalar]) -> Mat {
        let n = self.dim();
        x.iter()
            .zip(&self.matrices)
            .filter(|(c, _)| !c.is_zero())
            .fold(Matrix::zeros(n, n), |acc, (c, m)| acc.add(&m.scale(c)))
    }

    /// `ρ_*([x,y]) = [ρ_*(x), ρ_*(y)]` on all basis pairs.
    pub fn check_homomorphism(&self, g: &LieAlgebraData) -> bool {
        let n = g.dim();
        (0..n).all(|a| {
            (a + 1..n).all(|b| self.action(&g.structure[a][b]) == self.matrices[a].commutator(&self.matrices[b]))
        })
    }
}

fn kron(a: &Mat, b: &Mat) -> Mat {
    let (ra, ca, rb, cb) = (a.nrows(), a.ncols(), b.nrows(), b.ncols());
    Matrix::from_fn(ra * rb, ca * cb, |i, j| a[(i / rb, j / cb)].mul_ref(&b[(i % rb, j % cb)]))
}

fn adjoint_block(g: &LieAlgebraData, indices: &[usize]) -> Vec<Mat> {
    let k = indices.len();
    (0..g.dim())
        .map(|a| {
            if !indices.contains(&a) {
                return Matrix::zeros(k, k);
            }
            Matrix::from_fn(k, k, |r, c| g.structure[a][indices[c]][indices[r]].clone())
        })
        .collect()
}

/// Explicit matrices for the irreps used in the computations.
///
/// Supported: the trivial rep of every group; for `SU(2)³` every label with
/// entries in `{0, 1}` and the three adjoint labels `(2,0,0)`, `(0,2,0)`,
/// `(0,0,2)`; for `SO(5)` the labels `(1,0)` and `(1,1)`; for `SU(3)` the labels
/// `(1,0)`, `(0,1)` and `(1,1)`.
pub fn explicit_rep(space: &ReductiveSpaceData, gamma: &IrrepLabel) -> Result<ExplicitRep> {
    let g = &space.g;
    if gamma.group != space.group {
        return Err(Error::SubgroupMismatch(gamma.group.name().into(), space.group.name().into()));
    }
    let unsupported = || Error::UnsupportedLabel(format!("{} {}", gamma.group.name(), gamma));
    if gamma.is_trivial() {
        return Ok(ExplicitRep {
            label: gamma.clone(),
            basis_labels: vec!["1".into()],
            matrices: vec![Matrix::zeros(1, 1); g.dim()],
        });
    }
    let adjoint = |labels: Vec<String>| ExplicitRep {
        label: gamma.clone(),
        basis_labels: labels,
        matrices: (0..g.dim()).map(|a| g.ad(&g.basis_vector(a))).collect(),
    };
    let defining = |labels: &[&str], dual: bool| ExplicitRep {
        label: gamma.clone(),
        basis_labels: labels.iter().map(|s| s.to_string()).collect(),
        matrices: g
            .matrices
            .iter()
            .map(|m| if dual { m.transpose().scale(&Scalar::from_int(-1)) } else { m.clone() })
            .collect(),
    };
    match (gamma.group, gamma.label.as_slice()) {
        (GroupKind::K3, l) if l.iter().all(|&x| x <= 1) => {
            let active: Vec<usize> = (0..3).filter(|&f| l[f] == 1).collect();
            let blocks = crate::lie::su2_generators();
            let id = Matrix::<Scalar>::identity(2);
            let matrices = (0..g.dim())
                .map(|idx| {
                    let (f, a) = (idx / 3, idx % 3);
                    let dim = 1 << active.len();
                    if !active.contains(&f) {
                        return Matrix::zeros(dim, dim);
                    }
                    active.iter().fold(Matrix::identity(1), |acc, &h| {
                        kron(&acc, if h == f { &blocks[a] } else { &id })
                    })
                })
                .collect();
            let mut labels = vec![String::new()];
            for _ in &active {
                labels = labels
                    .iter()
                    .flat_map(|p| ["z1", "z2"].map(|z| if p.is_empty() { z.to_string() } else { format!("{p}⊗{z}") }))
                    .collect();
            }
            Ok(ExplicitRep {
                label: gamma.clone(),
                basis_labels: labels,
                matrices,
            })
        }
        (GroupKind::K3, l) if l.iter().filter(|&&x| x == 2).count() == 1 && l.iter().filter(|&&x| x == 0).count() == 2 => {
            let f = l.iter().position(|&x| x == 2).unwrap();
            let indices: Vec<usize> = (3 * f..3 * f + 3).collect();
            Ok(ExplicitRep {
                label: gamma.clone(),
                basis_labels: indices.iter().map(|&i| g.labels[i].clone()).collect(),
                matrices: adjoint_block(g, &indices),
            })
        }
        (GroupKind::So5, [1, 0]) => Ok(defining(&["v1", "v2", "v3", "v4", "v5"], false)),
        (GroupKind::So5, [1, 1]) | (GroupKind::Su3, [1, 1]) => Ok(adjoint(g.labels.clone())),
        (GroupKind::Su3, [1, 0]) => Ok(defining(&["u1", "u2", "u3"], false)),
        (GroupKind::Su3, [0, 1]) => Ok(defining(&["u1*", "u2*", "u3*"], true)),
        _ => Err(unsupported()),
    }
}

/// The scalar by which `−Σ Q^{ab} ρ_*(b_a)ρ_*(b_b)` acts.
pub fn casimir_bruteforce(space: &ReductiveSpaceData, rep: &ExplicitRep) -> Result<Scalar> {
    let g = &space.g;
    let ginv = g.gram_inverse();
    let n = rep.dim();
    let mut total = Matrix::zeros(n, n);
    for a in 0..g.dim() {
        for b in 0..g.dim() {
            let c = &ginv[(a, b)];
            if c.is_zero() {
                continue;
            }
            total = total.sub(&rep.matrices[a].mul(&rep.matrices[b]).scale(c));
        }
    }
    total.as_scalar().ok_or(Error::NotScalar)
}

/// Search radius for torus eigenvalues.
const WEIGHT_BOUND: i64 = 12;

/// Joint eigenspaces of commuting operators with eigenvalues `i·n`, `|n| ≤ 12`.
pub fn weight_spaces(torus: &[Mat], dim: usize) -> Result<Vec<(Vec<i64>, Vec<Vec<Scalar>>)>> {
    let id: Vec<Vec<Scalar>> = (0..dim)
        .map(|k| {
            let mut v = vec![Scalar::zero(); dim];
            v[k] = Scalar::one();
            v
        })
        .collect();
    let mut spaces = vec![(Vec::new(), id)];
    for t in torus {
        let mut next = Vec::new();
        for (w, basis) in spaces {
            let images: Vec<Vec<Scalar>> = basis.iter().map(|v| t.mul_vec(v)).collect();
            for n in -WEIGHT_BOUND..=WEIGHT_BOUND {
                let ev = Scalar::i().mul_ref(&Scalar::from_int(n));
                let cols: Vec<Vec<Scalar>> = images
                    .iter()
                    .zip(&basis)
                    .map(|(tv, v)| crate::linalg::vec_sub(tv, &vec_scale(v, &ev)))
                    .collect();
                let kernel = Matrix::from_cols(&cols, dim).null_space();
                if kernel.is_empty() {
                    continue;
                }
                let vectors: Vec<Vec<Scalar>> = kernel
                    .iter()
                    .map(|c| {
                        c.iter().zip(&basis).fold(vec![Scalar::zero(); dim], |acc, (x, v)| {
                            crate::linalg::vec_add(&acc, &vec_scale(v, x))
                        })
                    })
                    .collect();
                next.push(([w.clone(), vec![n]].concat(), vectors));
            }
        }
        spaces = next;
    }
    let total: usize = spaces.iter().map(|(_, b)| b.len()).sum();
    if total != dim {
        return Err(Error::WeightSearch);
    }
    spaces.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(spaces)
}

/// Weight multiset of an explicit representation under the torus of `G`.
pub fn explicit_weights(space: &ReductiveSpaceData, rep: &ExplicitRep) -> Result<WeightSystem> {
    let torus: Vec<Mat> = space.g_torus.iter().map(|t| rep.action(t)).collect();
    Ok(weight_spaces(&torus, rep.dim())?
        .into_iter()
        .map(|(w, b)| (w, b.len() as u64))
        .collect())
}

/// Rational helper used in tests and tables.
pub fn q(n: i64, d: i64) -> BigRational {
    rat(n, d)
}
