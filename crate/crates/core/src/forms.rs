//! The `H`-representations `Λ^{1,1}m` and its primitive part `Λ^{1,1}₀m`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::branching::HDecomposition;
use crate::error::Result;
use crate::exterior::{wedge_vectors, Grade};
use crate::lie::ReductiveSpaceData;
use crate::linalg::{coordinates, dot, normalize_leading, vec_add, vec_scale, Matrix};
use crate::rep::weight_spaces;
use crate::{Mat, Scalar};

/// A finite `H`-representation realized inside `Λ²m^ℂ`.
#[derive(Clone, Debug)]
pub struct HRep {
    pub name: String,
    pub basis_labels: Vec<String>,
    /// Basis vectors in `Λ²m` coordinates.
    pub basis: Vec<Vec<Scalar>>,
    /// Action of each `h`-basis element in this basis.
    pub action: Vec<Mat>,
    /// `H`-torus weight multiset.
    pub weights: BTreeMap<Vec<i64>, i64>,
    pub decomposition: HDecomposition,
}

impl HRep {
    fn build(space: &ReductiveSpaceData, name: &str, basis: Vec<Vec<Scalar>>, labels: Vec<String>) -> Result<Self> {
        let action: Vec<Mat> = space
            .h_basis
            .iter()
            .map(|x| action_in_basis(space, x, &basis))
            .collect();
        let torus: Vec<Mat> = space.h_torus.iter().map(|t| action_in_basis(space, t, &basis)).collect();
        let weights: BTreeMap<Vec<i64>, i64> = weight_spaces(&torus, basis.len())?
            .into_iter()
            .map(|(w, b)| (w, b.len() as i64))
            .collect();
        let decomposition = HDecomposition::from_weights(space.subgroup, &weights)?;
        Ok(HRep {
            name: name.to_string(),
            basis_labels: labels,
            basis,
            action,
            weights,
            decomposition,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Ambient `Λ²m` vector with the given coordinates.
    pub fn ambient(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let n = self.basis.first().map_or(0, Vec::len);
        coords
            .iter()
            .zip(&self.basis)
            .filter(|(c, _)| !c.is_zero())
            .fold(vec![Scalar::zero(); n], |acc, (c, b)| vec_add(&acc, &vec_scale(b, c)))
    }

    /// Action of an arbitrary `h`-vector given in `h`-basis coordinates.
    pub fn action_of(&self, h_coords: &[Scalar]) -> Mat {
        let n = self.dim();
        h_coords
            .iter()
            .zip(&self.action)
            .filter(|(c, _)| !c.is_zero())
            .fold(Matrix::zeros(n, n), |acc, (c, m)| acc.add(&m.scale(c)))
    }

    /// The action is a Lie algebra homomorphism on `h`.
    pub fn check_homomorphism(&self, space: &ReductiveSpaceData) -> bool {
        let k = space.h_basis.len();
        (0..k).all(|a| {
            (a + 1..k).all(|b| {
                let z = space.g.bracket(&space.h_basis[a], &space.h_basis[b]).expect("dimension");
                let Some(c) = coordinates(&space.h_basis, &z) else {
                    return false;
                };
                self.action_of(&c) == self.action[a].commutator(&self.action[b])
            })
        })
    }
}

fn action_in_basis(space: &ReductiveSpaceData, x: &[Scalar], basis: &[Vec<Scalar>]) -> Mat {
    let ambient = space.lambda2_action(x);
    let cols: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|b| coordinates(basis, &ambient.mul_vec(b)).expect("subspace is h-invariant"))
        .collect();
    Matrix::from_cols(&cols, basis.len())
}

/// Bilinear inner product on `Λ²m`, for which `e_i ∧ e_j` (`i < j`) is orthonormal.
pub fn bivector_inner(a: &[Scalar], b: &[Scalar]) -> Scalar {
    dot(a, b)
}

/// `Λ^{1,1}m = m⁺ ∧ m⁻` in the basis `m⁺_a ∧ m⁻_b`.
pub fn lambda11(space: &ReductiveSpaceData) -> Result<HRep> {
    let n = space.m_dim();
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for (a, p) in space.m_plus.iter().enumerate() {
        for (b, m) in space.m_minus.iter().enumerate() {
            basis.push(wedge_vectors(n, p, m));
            labels.push(format!("m+{}∧m-{}", a + 1, b + 1));
        }
    }
    HRep::build(space, "Λ^{1,1}m", basis, labels)
}

/// The orthogonal complement of the Kähler form in `Λ^{1,1}m`, in a basis of weight vectors.
pub fn lambda11_0(space: &ReductiveSpaceData) -> Result<HRep> {
    let full = lambda11(space)?;
    let torus: Vec<Mat> = space.h_torus.iter().map(|t| action_in_basis(space, t, &full.basis)).collect();
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for (w, vectors) in weight_spaces(&torus, full.dim())? {
        let ambient: Vec<Vec<Scalar>> = vectors.iter().map(|c| full.ambient(c)).collect();
        let row: Vec<Scalar> = ambient.iter().map(|v| bivector_inner(v, &space.kahler)).collect();
        let kernel = Matrix::from_rows(vec![row]).null_space();
        for (k, c) in kernel.iter().enumerate() {
            let v = ambient
                .iter()
                .zip(c)
                .fold(vec![Scalar::zero(); ambient[0].len()], |acc, (a, x)| vec_add(&acc, &vec_scale(a, x)));
            basis.push(normalize_leading(&v));
            labels.push(format!("w{w:?}#{k}"));
        }
    }
    HRep::build(space, "Λ^{1,1}_0m", basis, labels)
}

/// Basis of the `H`-fixed vectors in `Λ^{1,1}₀m`, as `Λ²m` vectors.
pub fn trivial_summand_basis(space: &ReductiveSpaceData) -> Result<Vec<Vec<Scalar>>> {
    let rep = lambda11_0(space)?;
    let n = rep.dim();
    let mut rows = Vec::new();
    for a in &rep.action {
        for i in 0..n {
            rows.push(a.row(i));
        }
    }
    let kernel = Matrix::from_rows(rows).null_space();
    Ok(kernel.iter().map(|c| normalize_leading(&rep.ambient(c))).collect())
}

/// Whether `v` is a joint eigenvector of the `H`-torus on `Λ²m`.
pub fn is_weight_vector(space: &ReductiveSpaceData, v: &[Scalar]) -> bool {
    space.h_torus.iter().all(|t| {
        let image = space.lambda2_action(t).mul_vec(v);
        let k = v.iter().position(|x| !x.is_zero());
        let Some(k) = k else { return true };
        let ratio = image[k].checked_div(&v[k]).expect("nonzero");
        image == vec_scale(v, &ratio)
    })
}

/// Names the nonzero coefficients of a two-vector on the m-basis.
pub fn describe(space: &ReductiveSpaceData, v: &[Scalar]) -> String {
    let g2 = Grade::new(space.m_dim(), 2);
    crate::exterior::render(&g2, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branching::HLabel;
    use crate::lie::{build_space, SpaceName, SubgroupKind};

    #[test]
    fn s3xs3_decompositions() {
        let s = build_space(SpaceName::S3xS3);
        let full = lambda11(&s).unwrap();
        assert_eq!(
            full.decomposition,
            HDecomposition::from_parts(
                SubgroupKind::DiagSu2,
                &[(HLabel::Sl2(4), 1), (HLabel::Sl2(2), 1), (HLabel::Sl2(0), 1)]
            )
        );
        let prim = lambda11_0(&s).unwrap();
        assert_eq!(
            prim.decomposition,
            HDecomposition::from_parts(SubgroupKind::DiagSu2, &[(HLabel::Sl2(4), 1), (HLabel::Sl2(2), 1)])
        );
        assert!(trivial_summand_basis(&s).unwrap().is_empty());
        assert!(full.check_homomorphism(&s) && prim.check_homomorphism(&s));
    }

    #[test]
    fn cp3_decomposition_and_eta() {
        let s = build_space(SpaceName::Cp3);
        let prim = lambda11_0(&s).unwrap();
        let u = |a, b| HLabel::u2(a, b).unwrap();
        assert_eq!(
            prim.decomposition,
            HDecomposition::from_parts(SubgroupKind::U2, &[(u(2, 0), 1), (u(1, 3), 1), (u(1, -3), 1), (u(0, 0), 1)])
        );
        let eta = s.frame_bivector(&[(1, 1, 2), (1, 3, 4), (1, 5, 6)]);
        let fixed = trivial_summand_basis(&s).unwrap();
        assert_eq!(fixed, vec![normalize_leading(&eta)]);
        assert!(bivector_inner(&eta, &s.kahler).is_zero());
        let f12 = s.frame_bivector(&[(1, 5, 6)]);
        let full = lambda11(&s).unwrap();
        assert!(coordinates(&full.basis, &f12).is_some());
        assert!(s.h_basis.iter().all(|x| s.lambda2_action(x).mul_vec(&f12).iter().all(Zero::is_zero)));
    }

    #[test]
    fn flag_trivial_part() {
        let s = build_space(SpaceName::Flag);
        let prim = lambda11_0(&s).unwrap();
        assert_eq!(prim.decomposition.trivial_mult(), 2);
        let fixed = trivial_summand_basis(&s).unwrap();
        assert_eq!(fixed.len(), 2);
        let planes = [
            s.frame_bivector(&[(1, 1, 2)]),
            s.frame_bivector(&[(1, 3, 4)]),
            s.frame_bivector(&[(1, 5, 6)]),
        ];
        for v in &fixed {
            assert!(coordinates(&planes, v).is_some());
            assert!(bivector_inner(v, &s.kahler).is_zero());
        }
        let full = lambda11(&s).unwrap();
        assert_eq!(full.weights[&vec![0, 0]], 3);
    }

    #[test]
    fn primitive_part_is_orthogonal_and_weight_adapted() {
        for name in SpaceName::ALL {
            let s = build_space(name);
            let prim = lambda11_0(&s).unwrap();
            assert_eq!(prim.dim(), 8);
            for v in &prim.basis {
                assert!(bivector_inner(v, &s.kahler).is_zero());
                assert!(is_weight_vector(&s, v));
            }
            assert_eq!(prim.decomposition.dim(), 8);
        }
    }
}
