//! Restriction of `G`-irreps to the isotropy subgroup and decomposition into `H`-irreps.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{ReductiveSpaceData, SubgroupKind};
use crate::rep::{weight_spaces, Group, IrrepLabel, WeightSystem};
use crate::Mat;

/// An irreducible representation of one of the isotropy groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum HLabel {
    /// `V_k` of `ΔSU(2)`, of dimension `k + 1`.
    Sl2(u32),
    /// `E^a_b = Sym^a E ⊗ ℂ_b` of `U(2)`, with `a ≡ b (mod 2)`.
    U2 { a: u32, b: i64 },
    /// A character of `T²`.
    T2(i64, i64),
}

impl HLabel {
    pub fn u2(a: u32, b: i64) -> Result<Self> {
        if (a as i64 - b).rem_euclid(2) != 0 {
            return Err(Error::InvalidLabel {
                group: "U(2)".into(),
                label: format!("E^{a}_{b}"),
                reason: "a and b must have equal parity".into(),
            });
        }
        Ok(HLabel::U2 { a, b })
    }

    pub fn subgroup(&self) -> SubgroupKind {
        match self {
            HLabel::Sl2(_) => SubgroupKind::DiagSu2,
            HLabel::U2 { .. } => SubgroupKind::U2,
            HLabel::T2(..) => SubgroupKind::T2,
        }
    }

    pub fn dim(&self) -> u64 {
        match *self {
            HLabel::Sl2(k) => k as u64 + 1,
            HLabel::U2 { a, .. } => a as u64 + 1,
            HLabel::T2(..) => 1,
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, HLabel::Sl2(0) | HLabel::U2 { a: 0, b: 0 } | HLabel::T2(0, 0))
    }

    /// Weights in `H`-torus coordinates.
    pub fn character(&self) -> Vec<Vec<i64>> {
        match *self {
            HLabel::Sl2(k) => (0..=k as i64).map(|j| vec![k as i64 - 2 * j]).collect(),
            HLabel::U2 { a, b } => (0..=a as i64).map(|j| vec![a as i64 - 2 * j, b]).collect(),
            HLabel::T2(n1, n2) => vec![vec![n1, n2]],
        }
    }

    fn from_highest(kind: SubgroupKind, w: &[i64]) -> Result<Self> {
        let bad = || Error::NegativeMultiplicity(format!("no dominant weight at {w:?}"));
        match kind {
            SubgroupKind::DiagSu2 => u32::try_from(w[0]).map(HLabel::Sl2).map_err(|_| bad()),
            SubgroupKind::U2 => HLabel::u2(u32::try_from(w[0]).map_err(|_| bad())?, w[1]),
            SubgroupKind::T2 => Ok(HLabel::T2(w[0], w[1])),
        }
    }
}

impl fmt::Display for HLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HLabel::Sl2(k) => write!(f, "V{k}"),
            HLabel::U2 { a, b } => write!(f, "E^{a}_{b}"),
            HLabel::T2(n1, n2) => write!(f, "C({n1},{n2})"),
        }
    }
}

/// Multiset of `H`-irreps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HDecomposition {
    pub subgroup: SubgroupKind,
    pub parts: BTreeMap<HLabel, u64>,
}

impl HDecomposition {
    pub fn dim(&self) -> u64 {
        self.parts.iter().map(|(l, m)| l.dim() * m).sum()
    }

    pub fn mult(&self, label: &HLabel) -> u64 {
        self.parts.get(label).copied().unwrap_or(0)
    }

    pub fn trivial_mult(&self) -> u64 {
        self.parts.iter().filter(|(l, _)| l.is_trivial()).map(|(_, m)| m).sum()
    }

    pub fn from_parts(subgroup: SubgroupKind, parts: &[(HLabel, u64)]) -> Self {
        let mut map = BTreeMap::new();
        for (l, m) in parts {
            *map.entry(*l).or_insert(0) += m;
        }
        HDecomposition { subgroup, parts: map }
    }

    /// Greedy highest-weight decomposition of an `H`-weight multiset.
    pub fn from_weights(subgroup: SubgroupKind, weights: &BTreeMap<Vec<i64>, i64>) -> Result<Self> {
        let mut rest = weights.clone();
        rest.retain(|_, m| *m != 0);
        let mut parts = BTreeMap::new();
        while let Some((top, &m)) = rest.iter().next_back() {
            if m < 0 {
                return Err(Error::NegativeMultiplicity(format!("{top:?}")));
            }
            let label = HLabel::from_highest(subgroup, top)?;
            for w in label.character() {
                let slot = rest.entry(w).or_insert(0);
                *slot -= m;
                if *slot < 0 {
                    return Err(Error::NegativeMultiplicity(label.to_string()));
                }
            }
            rest.retain(|_, x| *x != 0);
            *parts.entry(label).or_insert(0) += m as u64;
        }
        Ok(HDecomposition { subgroup, parts })
    }

    pub fn render(&self) -> String {
        self.parts
            .iter()
            .map(|(l, m)| if *m == 1 { l.to_string() } else { format!("{m}·{l}") })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Linear map from `G`-weights to `H`-weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingMap {
    pub subgroup: SubgroupKind,
    pub matrix: Vec<Vec<i64>>,
}

impl EmbeddingMap {
    pub fn from_space(space: &ReductiveSpaceData) -> Result<Self> {
        Ok(EmbeddingMap {
            subgroup: space.subgroup,
            matrix: space.embedding_matrix()?,
        })
    }

    pub fn apply(&self, w: &[i64]) -> Vec<i64> {
        self.matrix.iter().map(|row| row.iter().zip(w).map(|(a, b)| a * b).sum()).collect()
    }

    /// Checks the map against the `H`-torus eigenvalues on every `G`-root space,
    /// and that the roots of `h` occur among the restricted roots.
    pub fn check(&self, space: &ReductiveSpaceData) -> Result<bool> {
        let g = &space.g;
        let g_torus: Vec<Mat> = space.g_torus.iter().map(|t| g.ad(t)).collect();
        let h_torus: Vec<Mat> = space.h_torus.iter().map(|t| g.ad(t)).collect();
        let zero = vec![0; self.matrix.len()];
        if self.apply(&vec![0; space.g_torus.len()]) != zero {
            return Ok(false);
        }
        let mut restricted = Vec::new();
        for (w, basis) in weight_spaces(&g_torus, g.dim())? {
            let expected = self.apply(&w);
            for v in &basis {
                for (k, t) in h_torus.iter().enumerate() {
                    let ev = &crate::Scalar::i() * &crate::Scalar::from_int(expected[k]);
                    if t.mul_vec(v) != crate::linalg::vec_scale(v, &ev) {
                        return Ok(false);
                    }
                }
            }
            restricted.push(expected);
        }
        let h_adjoint: Vec<Mat> = space
            .h_torus
            .iter()
            .map(|t| {
                let cols: Vec<Vec<crate::Scalar>> = space
                    .h_basis
                    .iter()
                    .map(|b| {
                        let z = g.bracket(t, b).expect("dimension");
                        crate::linalg::coordinates(&space.h_basis, &z).expect("h is a subalgebra")
                    })
                    .collect();
                crate::linalg::Matrix::from_cols(&cols, space.h_basis.len())
            })
            .collect();
        let h_roots = weight_spaces(&h_adjoint, space.h_basis.len())?;
        Ok(h_roots.iter().all(|(w, _)| restricted.contains(w)))
    }
}

/// Restricts a `G`-weight multiset along the embedding and decomposes it.
pub fn restrict_weights(weights: &WeightSystem, emb: &EmbeddingMap) -> Result<HDecomposition> {
    let mut h: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (w, m) in weights {
        *h.entry(emb.apply(w)).or_insert(0) += *m as i64;
    }
    HDecomposition::from_weights(emb.subgroup, &h)
}

/// Branching of `V_γ` to `H`.
pub fn restrict(group: &Group, gamma: &IrrepLabel, emb: &EmbeddingMap) -> Result<HDecomposition> {
    restrict_weights(&group.weight_system(gamma)?, emb)
}

/// `dim Hom_H(V_γ, W)` from the two decompositions.
pub fn hom_dim(restriction: &HDecomposition, target: &HDecomposition) -> Result<u64> {
    if restriction.subgroup != target.subgroup {
        return Err(Error::SubgroupMismatch(
            restriction.subgroup.name().into(),
            target.subgroup.name().into(),
        ));
    }
    Ok(restriction
        .parts
        .iter()
        .map(|(l, m)| m * target.mult(l))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{build_space, GroupKind, SpaceName};

    fn setup(name: SpaceName) -> (Group, EmbeddingMap) {
        let s = build_space(name);
        (Group::from_space(&s), EmbeddingMap::from_space(&s).unwrap())
    }

    fn lab(kind: GroupKind, l: &[u32]) -> IrrepLabel {
        IrrepLabel::new(kind, l).unwrap()
    }

    #[test]
    fn k3_tensor_square() {
        let (g, e) = setup(SpaceName::S3xS3);
        let d = restrict(&g, &lab(GroupKind::K3, &[1, 1, 0]), &e).unwrap();
        assert_eq!(d, HDecomposition::from_parts(SubgroupKind::DiagSu2, &[(HLabel::Sl2(2), 1), (HLabel::Sl2(0), 1)]));
    }

    #[test]
    fn so5_vector_and_adjoint() {
        let (g, e) = setup(SpaceName::Cp3);
        let u = |a, b| HLabel::u2(a, b).unwrap();
        let d = restrict(&g, &lab(GroupKind::So5, &[1, 0]), &e).unwrap();
        assert_eq!(d, HDecomposition::from_parts(SubgroupKind::U2, &[(u(1, 1), 1), (u(1, -1), 1), (u(0, 0), 1)]));
        let d = restrict(&g, &lab(GroupKind::So5, &[1, 1]), &e).unwrap();
        let expected = [(u(2, 0), 1), (u(1, 1), 1), (u(1, -1), 1), (u(0, 2), 1), (u(0, 0), 1), (u(0, -2), 1)];
        assert_eq!(d, HDecomposition::from_parts(SubgroupKind::U2, &expected));
    }

    #[test]
    fn trivial_restricts_to_trivial() {
        for name in SpaceName::ALL {
            let (g, e) = setup(name);
            let d = restrict(&g, &IrrepLabel::trivial(g.kind), &e).unwrap();
            assert_eq!(d.parts.len(), 1);
            assert_eq!(d.trivial_mult(), 1);
        }
    }

    #[test]
    fn parity_rejected() {
        assert!(HLabel::u2(1, 0).is_err());
        assert!(HLabel::u2(2, -2).is_ok());
    }

    #[test]
    fn negative_multiplicity_detected() {
        let mut w = BTreeMap::new();
        w.insert(vec![2], 1);
        w.insert(vec![0], 1);
        assert!(matches!(
            HDecomposition::from_weights(SubgroupKind::DiagSu2, &w),
            Err(Error::NegativeMultiplicity(_))
        ));
    }

    #[test]
    fn subgroup_mismatch() {
        let a = HDecomposition::from_parts(SubgroupKind::T2, &[(HLabel::T2(0, 0), 1)]);
        let b = HDecomposition::from_parts(SubgroupKind::DiagSu2, &[(HLabel::Sl2(0), 1)]);
        assert!(hom_dim(&a, &b).is_err());
    }

    #[test]
    fn embeddings_consistent() {
        for name in SpaceName::ALL {
            let s = build_space(name);
            assert!(EmbeddingMap::from_space(&s).unwrap().check(&s).unwrap(), "{name}");
        }
    }
}
