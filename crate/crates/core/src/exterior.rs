//! Exterior powers of a space with an orthonormal basis.
//!
//! A k-vector is stored by its coefficients on `e_{i₁}∧…∧e_{i_k}` with
//! `i₁ < … < i_k`, ordered lexicographically. Contraction uses
//! `e ⌟ (a∧b) = ⟨e,a⟩b − ⟨e,b⟩a`.

use std::collections::HashMap;

use itertools::Itertools;

use crate::field::Field;
use crate::linalg::Matrix;

/// Index bookkeeping for `Λᵏ` of an `n`-dimensional space.
#[derive(Clone, Debug)]
pub struct Grade {
    pub n: usize,
    pub k: usize,
    combos: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl Grade {
    pub fn new(n: usize, k: usize) -> Self {
        let combos: Vec<Vec<usize>> = (0..n).combinations(k).collect();
        let index = combos.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        Grade { n, k, combos, index }
    }

    pub fn dim(&self) -> usize {
        self.combos.len()
    }

    pub fn combo(&self, idx: usize) -> &[usize] {
        &self.combos[idx]
    }

    /// Position and sign of `e_{i₁}∧…∧e_{i_k}` for arbitrary indices; `None` if two coincide.
    pub fn locate(&self, indices: &[usize]) -> Option<(usize, bool)> {
        let mut v = indices.to_vec();
        let mut negative = false;
        for a in 0..v.len() {
            for b in 0..v.len() - 1 - a {
                if v[b] > v[b + 1] {
                    v.swap(b, b + 1);
                    negative = !negative;
                } else if v[b] == v[b + 1] {
                    return None;
                }
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((self.index[&v], negative))
    }

    /// Human-readable name such as `e12`, with 1-based indices.
    pub fn name(&self, idx: usize) -> String {
        let digits: String = self.combos[idx].iter().map(|i| (i + 1).to_string()).collect();
        format!("e{digits}")
    }
}

/// Builds the k-vector with coefficient `c` on the (possibly unsorted) index tuple.
pub fn basis_kvector<S: Field>(grade: &Grade, indices: &[usize], c: S) -> Vec<S> {
    let mut out = vec![S::zero(); grade.dim()];
    if let Some((idx, neg)) = grade.locate(indices) {
        out[idx] = if neg { -c } else { c };
    }
    out
}

/// Wedge product of a k-vector and an l-vector.
pub fn wedge<S: Field>(ga: &Grade, a: &[S], gb: &Grade, b: &[S]) -> Vec<S> {
    let gc = Grade::new(ga.n, ga.k + gb.k);
    let mut out = vec![S::zero(); gc.dim()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let mut idx = ga.combo(i).to_vec();
            idx.extend_from_slice(gb.combo(j));
            if let Some((pos, neg)) = gc.locate(&idx) {
                let t = x.mul_ref(y);
                out[pos] = if neg { out[pos].sub_ref(&t) } else { out[pos].add_ref(&t) };
            }
        }
    }
    out
}

/// Wedge of two vectors as a 2-vector.
pub fn wedge_vectors<S: Field>(n: usize, u: &[S], v: &[S]) -> Vec<S> {
    let g1 = Grade::new(n, 1);
    wedge(&g1, u, &g1, v)
}

/// Interior product `u ⌟ α` of a vector with a k-vector.
pub fn contract<S: Field>(grade: &Grade, u: &[S], alpha: &[S]) -> Vec<S> {
    let lower = Grade::new(grade.n, grade.k - 1);
    let mut out = vec![S::zero(); lower.dim()];
    for (idx, c) in alpha.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let combo = grade.combo(idx);
        for (p, &slot) in combo.iter().enumerate() {
            if u[slot].is_zero() {
                continue;
            }
            let rest: Vec<usize> = combo.iter().enumerate().filter(|&(q, _)| q != p).map(|(_, &x)| x).collect();
            let (pos, _) = lower.locate(&rest).expect("distinct indices");
            let t = u[slot].mul_ref(c);
            out[pos] = if p % 2 == 1 { out[pos].sub_ref(&t) } else { out[pos].add_ref(&t) };
        }
    }
    out
}

/// Matrix of the derivation induced on `Λᵏ` by an endomorphism (columns are images of basis vectors).
pub fn induced_derivation<S: Field>(grade: &Grade, a: &Matrix<S>) -> Matrix<S> {
    let mut out = Matrix::zeros(grade.dim(), grade.dim());
    for idx in 0..grade.dim() {
        let combo = grade.combo(idx).to_vec();
        let mut image = vec![S::zero(); grade.dim()];
        for p in 0..combo.len() {
            let col = a.col(combo[p]);
            for (m, c) in col.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut replaced = combo.clone();
                replaced[p] = m;
                if let Some((pos, neg)) = grade.locate(&replaced) {
                    image[pos] = if neg { image[pos].sub_ref(c) } else { image[pos].add_ref(c) };
                }
            }
        }
        for (r, v) in image.into_iter().enumerate() {
            out[(r, idx)] = v;
        }
    }
    out
}

/// Endomorphism `Y ↦ Y ⌟ α` of a 2-vector, as a matrix acting on column vectors.
pub fn two_form_endomorphism<S: Field>(n: usize, alpha: &[S]) -> Matrix<S> {
    let g2 = Grade::new(n, 2);
    let mut m = Matrix::zeros(n, n);
    for k in 0..n {
        let mut e = vec![S::zero(); n];
        e[k] = S::one();
        let image = contract(&g2, &e, alpha);
        for (r, v) in image.into_iter().enumerate() {
            m[(r, k)] = v;
        }
    }
    m
}

/// Renders a k-vector as a sum of basis names.
pub fn render<S: Field + std::fmt::Display>(grade: &Grade, alpha: &[S]) -> String {
    let terms: Vec<String> = alpha
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| format!("({c})·{}", grade.name(i)))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use num_rational::BigRational;

    fn e(n: usize, k: usize) -> Vec<BigRational> {
        let mut v = vec![rat(0, 1); n];
        v[k] = rat(1, 1);
        v
    }

    #[test]
    fn contraction_convention() {
        let g2 = Grade::new(6, 2);
        let a = wedge_vectors(6, &e(6, 0), &e(6, 1));
        assert_eq!(contract(&g2, &e(6, 0), &a), e(6, 1));
        assert_eq!(contract(&g2, &e(6, 1), &a), e(6, 0).iter().map(|x| -x.clone()).collect::<Vec<_>>());
    }

    #[test]
    fn locate_signs() {
        let g3 = Grade::new(6, 3);
        let (p, neg) = g3.locate(&[2, 0, 1]).unwrap();
        assert_eq!(g3.combo(p), &[0, 1, 2]);
        assert!(!neg);
        assert!(g3.locate(&[1, 0, 2]).unwrap().1);
        assert!(g3.locate(&[1, 1, 2]).is_none());
    }

    #[test]
    fn derivation_of_rotation_kills_its_plane() {
        let mut a = Matrix::zeros(4, 4);
        a[(1, 0)] = rat(1, 1);
        a[(0, 1)] = rat(-1, 1);
        let g2 = Grade::new(4, 2);
        let d = induced_derivation(&g2, &a);
        let w = basis_kvector(&g2, &[0, 1], rat(1, 1));
        assert!(d.mul_vec(&w).iter().all(|x| x == &rat(0, 1)));
        let w = basis_kvector(&g2, &[0, 2], rat(1, 1));
        assert_eq!(d.mul_vec(&w), basis_kvector(&g2, &[1, 2], rat(1, 1)));
    }

    #[test]
    fn contraction_of_three_vector() {
        let g3 = Grade::new(6, 3);
        let psi = basis_kvector(&g3, &[1, 2, 5], rat(1, 1));
        let g2 = Grade::new(6, 2);
        assert_eq!(contract(&g3, &e(6, 2), &psi), basis_kvector(&g2, &[5, 1], rat(1, 1)));
    }
}
