//! The prototypical codifferential `δ: Hom_H(V_γ, Λ^{1,1}₀m) → Hom_H(V_γ, m^ℂ)`.
//!
//! A Fourier coefficient is stored as a matrix whose columns are the images of
//! the basis of `V_γ`, written in the basis of the target `H`-representation.
//! `δ(F)(v) = Σᵢ uᵢ ⌟ F(ρ_*(uᵢ)v)` for a Q-orthonormal basis `(uᵢ)` of `m`,
//! with `e ⌟ (a∧b) = ⟨e,a⟩b − ⟨e,b⟩a`.

use num_traits::Zero;
use serde::Serialize;

use crate::error::Result;
use crate::exterior::{contract, Grade};
use crate::forms::{lambda11_0, HRep};
use crate::lie::ReductiveSpaceData;
use crate::linalg::{coordinates, Matrix};
use crate::rep::{explicit_rep, ExplicitRep, IrrepLabel};
use crate::{Mat, Scalar};

/// An `H`-equivariant map `V_γ → W`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FourierCoefficient {
    pub gamma: IrrepLabel,
    pub matrix: Mat,
}

impl FourierCoefficient {
    /// `F ∘ ρ_*(h) = T(h) ∘ F` for every `h`-basis element, where `T(h)` is given by `target_action`.
    pub fn is_equivariant(&self, space: &ReductiveSpaceData, rep: &ExplicitRep, target_action: &[Mat]) -> bool {
        space
            .h_basis
            .iter()
            .zip(target_action)
            .all(|(x, t)| self.matrix.mul(&rep.action(x)) == t.mul(&self.matrix))
    }
}

/// Basis of `Hom_H(V_γ, W)` for `W` given by its `h`-action matrices.
pub fn hom_basis_for(space: &ReductiveSpaceData, rep: &ExplicitRep, target_action: &[Mat]) -> Vec<FourierCoefficient> {
    let n = rep.dim();
    let t = target_action.first().map_or(0, Matrix::nrows);
    let var = |r: usize, c: usize| r * n + c;
    let mut rows = Vec::new();
    for (x, tx) in space.h_basis.iter().zip(target_action) {
        let rho = rep.action(x);
        for r in 0..t {
            for c in 0..n {
                let mut row = vec![Scalar::zero(); t * n];
                for k in 0..n {
                    row[var(r, k)] = &row[var(r, k)] + &rho[(k, c)];
                }
                for k in 0..t {
                    row[var(k, c)] = &row[var(k, c)] - &tx[(r, k)];
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..t * n)
            .map(|k| {
                let mut v = vec![Scalar::zero(); t * n];
                v[k] = Scalar::from_int(1);
                v
            })
            .collect()
    } else {
        Matrix::from_rows(rows).null_space()
    };
    kernel
        .into_iter()
        .map(|v| FourierCoefficient {
            gamma: rep.label.clone(),
            matrix: Matrix::from_fn(t, n, |r, c| v[var(r, c)].clone()),
        })
        .collect()
}

/// Basis of `Hom_H(V_γ, target)`.
pub fn hom_basis(space: &ReductiveSpaceData, rep: &ExplicitRep, target: &HRep) -> Vec<FourierCoefficient> {
    hom_basis_for(space, rep, &target.action)
}

/// The `h`-action on `m^ℂ` in the m-basis.
pub fn m_action(space: &ReductiveSpaceData) -> Vec<Mat> {
    space.h_basis.iter().map(|x| space.ad_m(x)).collect()
}

/// `δ(F)` as an `m_dim × dim V_γ` matrix in m-coordinates.
///
/// `frame` is a Q-orthonormal basis of m in m-coordinates; `None` uses the m-basis itself.
pub fn proto_delta(
    space: &ReductiveSpaceData,
    rep: &ExplicitRep,
    target: &HRep,
    f: &FourierCoefficient,
    frame: Option<&[Vec<Scalar>]>,
) -> FourierCoefficient {
    let n = space.m_dim();
    let g2 = Grade::new(n, 2);
    let standard: Vec<Vec<Scalar>>;
    let frame = match frame {
        Some(fr) => fr,
        None => {
            standard = (0..n)
                .map(|k| {
                    let mut e = vec![Scalar::zero(); n];
                    e[k] = Scalar::from_int(1);
                    e
                })
                .collect();
            &standard
        }
    };
    let parts: Vec<(Mat, &Vec<Scalar>)> =
        frame.iter().map(|u| (f.matrix.mul(&rep.action(&space.m_to_g(u))), u)).collect();
    let cols: Vec<Vec<Scalar>> = (0..rep.dim())
        .map(|c| {
            parts.iter().fold(vec![Scalar::zero(); n], |acc, (fr, u)| {
                let alpha = target.ambient(&fr.col(c));
                crate::linalg::vec_add(&acc, &contract(&g2, u, &alpha))
            })
        })
        .collect();
    FourierCoefficient {
        gamma: f.gamma.clone(),
        matrix: Matrix::from_cols(&cols, n),
    }
}

/// Hom space, its `δ`-images and the kernel dimension for one `γ`.
#[derive(Clone, Debug, Serialize)]
pub struct DeltaData {
    pub gamma: IrrepLabel,
    pub hom_dim: usize,
    pub coclosed_dim: usize,
    #[serde(skip)]
    pub hom: Vec<FourierCoefficient>,
    pub delta: Vec<FourierCoefficient>,
}

/// Computes `Hom_H(V_γ, Λ^{1,1}₀m)`, `δ` on its basis and `dim ker δ`.
pub fn delta_data(space: &ReductiveSpaceData, gamma: &IrrepLabel) -> Result<DeltaData> {
    let rep = explicit_rep(space, gamma)?;
    let target = lambda11_0(space)?;
    let hom = hom_basis(space, &rep, &target);
    let delta: Vec<FourierCoefficient> = hom.iter().map(|f| proto_delta(space, &rep, &target, f, None)).collect();
    let flat: Vec<Vec<Scalar>> = delta.iter().map(|d| flatten(&d.matrix)).collect();
    let rank = crate::linalg::span_rank(&flat);
    Ok(DeltaData {
        gamma: gamma.clone(),
        hom_dim: hom.len(),
        coclosed_dim: hom.len() - rank,
        hom,
        delta,
    })
}

/// `dim ker δ` on `Hom_H(V_γ, Λ^{1,1}₀m)`.
pub fn coclosed_dim(space: &ReductiveSpaceData, gamma: &IrrepLabel) -> Result<usize> {
    Ok(delta_data(space, gamma)?.coclosed_dim)
}

/// Rewrites an m-coordinate matrix in the basis `(m⁺₁, m⁺₂, m⁺₃, m⁻₁, m⁻₂, m⁻₃)`.
pub fn to_complex_basis(space: &ReductiveSpaceData, m: &Mat) -> Mat {
    let mut basis = space.m_plus.clone();
    basis.extend(space.m_minus.iter().cloned());
    let cols: Vec<Vec<Scalar>> = (0..m.ncols())
        .map(|c| coordinates(&basis, &m.col(c)).expect("m⁺ ⊕ m⁻ spans m"))
        .collect();
    Matrix::from_cols(&cols, basis.len())
}

pub(crate) fn flatten(m: &Mat) -> Vec<Scalar> {
    (0..m.nrows()).flat_map(|r| m.row(r)).collect()
}

/// Whether `a = s·b` for some nonzero scalar `s`.
pub fn proportional(a: &Mat, b: &Mat) -> bool {
    let (fa, fb) = (flatten(a), flatten(b));
    let Some(k) = fb.iter().position(|x| !x.is_zero()) else {
        return fa.iter().all(Zero::is_zero);
    };
    if fa[k].is_zero() {
        return false;
    }
    let s = fa[k].checked_div(&fb[k]).expect("nonzero");
    fa.iter().zip(&fb).all(|(x, y)| *x == &s * y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::wedge_vectors;
    use crate::lie::{build_space, GroupKind, SpaceName};
    use crate::linalg::{vec_scale, vec_sub};
    use num_traits::One;
    use proptest::prelude::*;

    fn label(g: GroupKind, l: &[u32]) -> IrrepLabel {
        IrrepLabel::new(g, l).unwrap()
    }

    fn images(target: &HRep, f: &FourierCoefficient) -> Mat {
        let cols: Vec<Vec<Scalar>> = (0..f.matrix.ncols()).map(|c| target.ambient(&f.matrix.col(c))).collect();
        Matrix::from_cols(&cols, 15)
    }

    /// Rows `X₃`, `X̄₃` of the form `(0, 1−j², −1+j², 0)`, `(0, 1−j, −1+j, 0)`.
    fn s3xs3_display() -> Mat {
        let j = Scalar::j();
        let one = Scalar::one();
        let j2 = &j * &j;
        let mut m = Matrix::zeros(6, 4);
        m[(2, 1)] = &one - &j2;
        m[(2, 2)] = &j2 - &one;
        m[(5, 1)] = &one - &j;
        m[(5, 2)] = &j - &one;
        m
    }

    #[test]
    fn s3xs3_generator_and_delta() {
        let s = build_space(SpaceName::S3xS3);
        let rep = explicit_rep(&s, &label(GroupKind::K3, &[1, 1, 0])).unwrap();
        let target = lambda11_0(&s).unwrap();
        let hom = hom_basis(&s, &rep, &target);
        assert_eq!(hom.len(), 1);
        let f = &hom[0];
        assert!(f.is_equivariant(&s, &rep, &target.action));

        let (x, xb) = (&s.m_plus, &s.m_minus);
        let b = |p: usize, q: usize| vec_sub(&wedge_vectors(6, &x[p], &xb[q]), &wedge_vectors(6, &x[q], &xb[p]));
        let b1 = [b(0, 1), b(1, 2), b(2, 0)];
        let r = Scalar::sqrt2().inv().unwrap();
        let i = Scalar::i();
        let z = Scalar::zero;
        let paper_f = Matrix::from_rows(vec![
            vec![z(), r.clone(), r.clone(), z()],
            vec![-r.clone(), z(), z(), r.clone()],
            vec![&i * &r, z(), z(), &i * &r],
        ]);
        let cols: Vec<Vec<Scalar>> = (0..4)
            .map(|c| {
                (0..3).fold(vec![z(); 15], |acc, k| crate::linalg::vec_add(&acc, &vec_scale(&b1[k], &paper_f[(k, c)])))
            })
            .collect();
        assert!(proportional(&images(&target, f), &Matrix::from_cols(&cols, 15)));

        let d = proto_delta(&s, &rep, &target, f, None);
        assert!(d.is_equivariant(&s, &rep, &m_action(&s)));
        let c = to_complex_basis(&s, &d.matrix);
        assert!(!c.is_zero());
        assert_eq!(c.col(1), c.col(2));
        assert!(!proportional(&c, &s3xs3_display()));
        let mut basis = s.m_plus.clone();
        basis.extend(s.m_minus.iter().cloned());
        let display = Matrix::from_cols(&basis, 6).mul(&s3xs3_display());
        let coefficient = FourierCoefficient { gamma: rep.label.clone(), matrix: display };
        assert!(!coefficient.is_equivariant(&s, &rep, &m_action(&s)));
    }

    #[test]
    fn cp3_delta_is_contraction_with_eta() {
        let s = build_space(SpaceName::Cp3);
        let rep = explicit_rep(&s, &label(GroupKind::So5, &[1, 0])).unwrap();
        let target = lambda11_0(&s).unwrap();
        let hom = hom_basis(&s, &rep, &target);
        assert_eq!(hom.len(), 1);
        let eta = s.frame_bivector(&[(1, 1, 2), (1, 3, 4), (1, 5, 6)]);
        let mut expected = Matrix::zeros(15, 5);
        for r in 0..15 {
            expected[(r, 4)] = eta[r].clone();
        }
        assert!(proportional(&images(&target, &hom[0]), &expected));

        let coords = coordinates(&target.basis, &eta).unwrap();
        let f = FourierCoefficient {
            gamma: rep.label.clone(),
            matrix: Matrix::from_fn(8, 5, |r, c| if c == 4 { coords[r].clone() } else { Scalar::zero() }),
        };
        let d = proto_delta(&s, &rep, &target, &f, None);
        let g2 = Grade::new(6, 2);
        let mut contractions = Matrix::zeros(6, 5);
        for k in 0..4 {
            let mut e = vec![Scalar::zero(); 6];
            e[k] = Scalar::one();
            let v = contract(&g2, &e, &eta);
            for (r, x) in v.into_iter().enumerate() {
                contractions[(r, k)] = x;
            }
        }
        assert!(proportional(&d.matrix, &contractions));
        assert_eq!(d.matrix, contractions.scale(&-Scalar::sqrt2()));
    }

    #[test]
    fn flag_adjoint_coefficient_is_coclosed() {
        let s = build_space(SpaceName::Flag);
        let rep = explicit_rep(&s, &label(GroupKind::Su3, &[1, 1])).unwrap();
        let target = lambda11_0(&s).unwrap();
        let u3 = crate::lie::u3_algebra();
        let h = |k: usize| u3.matrices[k].clone();
        let planes = [
            s.frame_bivector(&[(1, 5, 6)]),
            s.frame_bivector(&[(-1, 3, 4)]),
            s.frame_bivector(&[(1, 1, 2)]),
        ];
        let half = Scalar::frac(-1, 2);
        let cols: Vec<Vec<Scalar>> = s
            .g
            .matrices
            .iter()
            .map(|x| {
                (0..3).fold(vec![Scalar::zero(); 15], |acc, k| {
                    let q = &half * &x.mul(&h(k)).trace();
                    crate::linalg::vec_add(&acc, &vec_scale(&planes[k], &q))
                })
            })
            .collect();
        let coords: Vec<Vec<Scalar>> = cols.iter().map(|v| coordinates(&target.basis, v).unwrap()).collect();
        let f = FourierCoefficient {
            gamma: rep.label.clone(),
            matrix: Matrix::from_cols(&coords, 8),
        };
        assert!(!f.matrix.is_zero());
        assert!(f.is_equivariant(&s, &rep, &target.action));
        assert!(proto_delta(&s, &rep, &target, &f, None).matrix.is_zero());
        let data = delta_data(&s, &rep.label).unwrap();
        assert_eq!((data.hom_dim, data.coclosed_dim), (4, 1));
    }

    #[test]
    fn kernel_dimensions() {
        let cp3 = build_space(SpaceName::Cp3);
        let d = delta_data(&cp3, &label(GroupKind::So5, &[1, 1])).unwrap();
        assert_eq!((d.hom_dim, d.coclosed_dim), (2, 0));
        assert_eq!(coclosed_dim(&cp3, &label(GroupKind::So5, &[1, 0])).unwrap(), 0);
        let s = build_space(SpaceName::S3xS3);
        assert_eq!(coclosed_dim(&s, &label(GroupKind::K3, &[1, 1, 0])).unwrap(), 0);
        for name in SpaceName::ALL {
            let sp = build_space(name);
            let t = IrrepLabel::trivial(sp.group);
            let d = delta_data(&sp, &t).unwrap();
            assert_eq!(d.hom_dim as u64, lambda11_0(&sp).unwrap().decomposition.trivial_mult());
            assert_eq!(d.coclosed_dim, d.hom_dim);
            assert!(d.delta.iter().all(|x| x.matrix.is_zero()));
        }
    }

    /// Rational orthogonal matrix `(I − A)(I + A)⁻¹` for skew `A`.
    fn cayley(entries: &[i64]) -> Vec<Vec<Scalar>> {
        let mut a = Matrix::<Scalar>::zeros(6, 6);
        let mut k = 0;
        for r in 0..6 {
            for c in r + 1..6 {
                a[(r, c)] = Scalar::from_int(entries[k]);
                a[(c, r)] = Scalar::from_int(-entries[k]);
                k += 1;
            }
        }
        let id = Matrix::identity(6);
        let o = id.sub(&a).mul(&id.add(&a).inverse().unwrap());
        (0..6).map(|c| o.col(c)).collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn delta_is_frame_independent(entries in proptest::collection::vec(-2i64..=2, 15), which in 0usize..3) {
            let (name, l): (SpaceName, &[u32]) = [
                (SpaceName::S3xS3, &[1, 1, 0][..]),
                (SpaceName::Cp3, &[1, 1][..]),
                (SpaceName::Flag, &[1, 1][..]),
            ][which];
            let s = build_space(name);
            let rep = explicit_rep(&s, &label(s.group, l)).unwrap();
            let target = lambda11_0(&s).unwrap();
            let frame = cayley(&entries);
            for f in hom_basis(&s, &rep, &target) {
                let a = proto_delta(&s, &rep, &target, &f, None);
                let b = proto_delta(&s, &rep, &target, &f, Some(&frame));
                prop_assert_eq!(&a, &b);
                prop_assert!(a.is_equivariant(&s, &rep, &m_action(&s)));
            }
        }

        #[test]
        fn delta_is_linear(a in -3i64..=3, b in -3i64..=3) {
            let s = build_space(SpaceName::Flag);
            let rep = explicit_rep(&s, &label(GroupKind::Su3, &[1, 1])).unwrap();
            let target = lambda11_0(&s).unwrap();
            let hom = hom_basis(&s, &rep, &target);
            let (sa, sb) = (Scalar::from_int(a), Scalar::from_int(b));
            let combo = FourierCoefficient {
                gamma: rep.label.clone(),
                matrix: hom[0].matrix.scale(&sa).add(&hom[1].matrix.scale(&sb)),
            };
            let lhs = proto_delta(&s, &rep, &target, &combo, None).matrix;
            let rhs = proto_delta(&s, &rep, &target, &hom[0], None).matrix.scale(&sa)
                .add(&proto_delta(&s, &rep, &target, &hom[1], None).matrix.scale(&sb));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
