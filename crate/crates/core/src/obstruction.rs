//! The second-order integrability obstruction on `F₁,₂ = U(3)/T³`.
//!
//! An infinitesimal Einstein deformation is encoded by `ξ ∈ su(3)`; its value
//! at `x` is read off from `ξ* = Ad(x⁻¹)ξ` through the coordinate functions
//! `vᵢ = ⟨ξ*, hᵢ⟩` and `xₖ = ⟨ξ*, eₖ⟩`. All tensors are written in the
//! orthonormal frame `e₁, …, e₆` of m, so indices are raised for free.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exterior::{basis_kvector, contract, two_form_endomorphism, Grade};
use crate::field::Field;
use crate::lie::{flag_u3, ReductiveSpaceData};
use crate::poly::{det_cubic, gram_su3, sym_inner, v, Exponents, SymPoly, NVARS};
use crate::{Error, Mat, Matrix, Result, Scalar};

pub type Poly = SymPoly<Scalar>;

/// A symmetric 2-tensor on m with polynomial coefficients.
pub type PolyTensor = Vec<Vec<Poly>>;

const N: usize = 6;

/// The `u(3)` frame `h₁, h₂, h₃, e₁, …, e₆` together with its coordinate functions.
///
/// Generator `k` of [`SymPoly`] is the coordinate function of `u(3)` basis
/// vector `k`, so `v₁, v₂, v₃, x₁, …, x₆` line up with `h₁, h₂, h₃, e₁, …, e₆`.
#[derive(Clone, Debug)]
pub struct CoordFrame {
    pub space: ReductiveSpaceData,
    /// `+1` for `X(f_Y) = ⟨ξ*, [X, Y]⟩`, `−1` for the opposite convention.
    pub sign: i64,
}

impl Default for CoordFrame {
    fn default() -> Self {
        Self::new(1)
    }
}

impl CoordFrame {
    pub fn new(sign: i64) -> Self {
        CoordFrame { space: flag_u3(), sign }
    }

    /// `u(3)` coordinates of the frame vector `e_i` (1-based).
    pub fn e(&self, i: usize) -> Vec<Scalar> {
        self.space.m_basis[i - 1].clone()
    }

    /// `u(3)` coordinates of `h_j` (1-based).
    pub fn h(&self, j: usize) -> Vec<Scalar> {
        self.space.h_basis[j - 1].clone()
    }

    /// The coordinate function `f_Y = ⟨ξ*, Y⟩` of a `u(3)` vector.
    pub fn function_of(&self, y: &[Scalar]) -> Poly {
        y.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Poly::zero(), |acc, (k, c)| &acc + &Poly::var(k).scale(c))
    }

    /// `X(f)` for a polynomial in the coordinate functions, by the Leibniz rule.
    pub fn directional_derivative(&self, x: &[Scalar], f: &Poly) -> Poly {
        let sign = Scalar::from_int(self.sign);
        (0..NVARS)
            .map(|k| {
                let dk = f.partial(k);
                if dk.is_zero() {
                    return Poly::zero();
                }
                let bracket = self.space.g.bracket(x, &self.space.g.basis_vector(k)).expect("u(3) dimension");
                &dk * &self.function_of(&bracket).scale(&sign)
            })
            .fold(Poly::zero(), |acc, p| &acc + &p)
    }

    /// `ĥ(ξ*)` in the frame `e₁, …, e₆`.
    ///
    /// `ξ*` is sent to the primitive (1,1)-form `φ̂ = v₁e₅₆ − v₂e₃₄ + v₃e₁₂`
    /// and `ĥ = −J ∘ φ̂`, which gives
    /// `ĥ = v₃(e₁e₁ + e₂e₂) + v₂(e₃e₃ + e₄e₄) + v₁(e₅e₅ + e₆e₆)`.
    pub fn h_hat(&self) -> PolyTensor {
        let g2 = Grade::new(N, 2);
        let j = self.space.complex_structure();
        let parts: [(usize, i64, [usize; 2]); 3] = [(v(1), 1, [4, 5]), (v(2), -1, [2, 3]), (v(3), 1, [0, 1])];
        let mut out = zero_tensor();
        for (var, c, idx) in parts {
            let phi = two_form_endomorphism(N, &basis_kvector(&g2, &idx, Scalar::from_int(c)));
            let m = j.mul(&phi).scale(&Scalar::from_int(-1));
            let f = Poly::var(var);
            for (a, row) in out.iter_mut().enumerate() {
                for (b, entry) in row.iter_mut().enumerate() {
                    if !m[(a, b)].is_zero() {
                        *entry = &*entry + &f.scale(&m[(a, b)]);
                    }
                }
            }
        }
        out
    }

    /// `A_{e_i} = e_i ⌟ Ψ⁻` as a skew endomorphism of m.
    pub fn a_endomorphism(&self, i: usize) -> Mat {
        let psi = self.space.psi_minus.as_ref().expect("flag carries Ψ⁻");
        let mut e = vec![Scalar::zero(); N];
        e[i - 1] = Scalar::one();
        two_form_endomorphism(N, &contract(&Grade::new(N, 3), &e, psi))
    }

    /// `X(T)` applied entrywise.
    pub fn derive_tensor(&self, x: &[Scalar], t: &PolyTensor) -> PolyTensor {
        t.iter()
            .map(|row| row.iter().map(|f| self.directional_derivative(x, f)).collect())
            .collect()
    }

    /// `∇̂h(e_i, e_k, e_l) = e_i(ĥ)_{kl} + ½(A_{e_i}ĥ)_{kl}`.
    pub fn nabla_h(&self) -> NablaHTable {
        let h = self.h_hat();
        let half = Scalar::frac(1, 2);
        let entries = (1..=N)
            .into_par_iter()
            .map(|i| {
                let d = self.derive_tensor(&self.e(i), &h);
                let a = a_action(&self.a_endomorphism(i), &h);
                (0..N)
                    .map(|k| (0..N).map(|l| &d[k][l] + &a[k][l].scale(&half)).collect())
                    .collect()
            })
            .collect();
        NablaHTable { entries }
    }
}

fn zero_tensor() -> PolyTensor {
    vec![vec![Poly::zero(); N]; N]
}

/// `A·T + T·Aᵀ`: a skew endomorphism acting as a derivation on a 2-tensor.
pub fn a_action(a: &Mat, t: &PolyTensor) -> PolyTensor {
    let mut out = zero_tensor();
    for k in 0..N {
        for l in 0..N {
            let mut s = Poly::zero();
            for m in 0..N {
                if !a[(k, m)].is_zero() {
                    s = &s + &t[m][l].scale(&a[(k, m)]);
                }
                if !a[(l, m)].is_zero() {
                    s = &s + &t[k][m].scale(&a[(l, m)]);
                }
            }
            out[k][l] = s;
        }
    }
    out
}

/// The 6×6 table of vectors `∇̂h(e_i, e_k, ·)`, stored as `entries[i][k][l]` (0-based).
#[derive(Clone, Debug, PartialEq)]
pub struct NablaHTable {
    pub entries: Vec<Vec<Vec<Poly>>>,
}

impl NablaHTable {
    /// The entry `∇̂h(e_i, e_k, ·)` (1-based) rendered like `x₄e₁ + ((v₃−v₁)/2)e₅`.
    pub fn render(&self, i: usize, k: usize) -> String {
        let parts: Vec<String> = self.entries[i - 1][k - 1]
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(l, p)| format!("({p})·e{}", l + 1))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries.iter().all(|m| (0..N).all(|k| (0..N).all(|l| m[k][l] == m[l][k])))
    }
}

/// `Î₀ = tr ĥ³`, `Î₁ = Σ ĥᵢⱼ⟨eᵢ⌟∇̂h, eⱼ⌟∇̂h⟩`, `Î₂ = Σ ĥᵢⱼ⟨eᵢ⌟∇̂h, (eⱼ⌟∇̂h)^{(12)}⟩`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ObstructionTerms {
    pub i0: Poly,
    pub i1: Poly,
    pub i2: Poly,
}

pub fn obstruction_terms(frame: &CoordFrame) -> ObstructionTerms {
    let h = frame.h_hat();
    let nabla = frame.nabla_h();
    let n = &nabla.entries;
    let mut i0 = Poly::zero();
    for a in 0..N {
        for b in 0..N {
            for c in 0..N {
                i0 = &i0 + &(&(&h[a][b] * &h[b][c]) * &h[c][a]);
            }
        }
    }
    let mut i1 = Poly::zero();
    let mut i2 = Poly::zero();
    for i in 0..N {
        for j in 0..N {
            if h[i][j].is_zero() {
                continue;
            }
            let mut s1 = Poly::zero();
            let mut s2 = Poly::zero();
            for a in 0..N {
                for b in 0..N {
                    s1 = &s1 + &(&n[i][a][b] * &n[j][a][b]);
                    s2 = &s2 + &(&n[i][a][b] * &n[a][j][b]);
                }
            }
            i1 = &i1 + &(&h[i][j] * &s1);
            i2 = &i2 + &(&h[i][j] * &s2);
        }
    }
    ObstructionTerms { i0, i1, i2 }
}

/// Reduces modulo the trace relation `v₁ + v₂ + v₃ = 0` by eliminating `v₃`.
pub fn reduce_trace(p: &Poly) -> Poly {
    p.substitute(v(3), &-&(&Poly::var(v(1)) + &Poly::var(v(2))))
}

/// A representative modulo `v₁ + v₂ + v₃` with a single `v`-monomial per `x`-monomial where possible.
///
/// For each `x`-monomial the `v`-part is replaced by `c·m` for the first
/// `v`-monomial `m` (square-free ones first) that is proportional to it modulo
/// the trace; otherwise the `v₃`-free reduction is kept.
pub fn trace_normal_form(p: &Poly) -> Poly {
    let reduced = reduce_trace(p);
    let mut groups: std::collections::BTreeMap<[u8; 6], Poly> = std::collections::BTreeMap::new();
    for (e, c) in reduced.terms() {
        let mut xs = [0u8; 6];
        xs.copy_from_slice(&e[3..]);
        let mut ve: Exponents = [0; NVARS];
        ve[..3].copy_from_slice(&e[..3]);
        let entry = groups.entry(xs).or_insert_with(Poly::zero);
        *entry = &*entry + &Poly::monomial(ve, c.clone());
    }
    let mut out = Poly::zero();
    for (xs, vpart) in groups {
        let mut xe: Exponents = [0; NVARS];
        xe[3..].copy_from_slice(&xs);
        let xmono = Poly::monomial(xe, Scalar::one());
        let deg: u8 = vpart.terms().next().map(|(e, _)| e[..3].iter().sum()).unwrap_or(0);
        let chosen = v_monomials(deg).into_iter().find_map(|m| {
            let rm = reduce_trace(&m);
            let (lead, lc) = rm.terms().next()?;
            let c = vpart.coeff(lead).checked_div(lc).ok()?;
            (rm.scale(&c) == vpart).then(|| m.scale(&c))
        });
        out = &out + &(&xmono * &chosen.unwrap_or(vpart));
    }
    out
}

fn v_monomials(deg: u8) -> Vec<Poly> {
    let mut out: Vec<Exponents> = Vec::new();
    for a in 0..=deg {
        for b in 0..=deg - a {
            let mut e: Exponents = [0; NVARS];
            e[0] = a;
            e[1] = b;
            e[2] = deg - a - b;
            out.push(e);
        }
    }
    out.sort_by_key(|e| (e[..3].iter().filter(|&&k| k > 1).count(), std::cmp::Reverse(e[2]), std::cmp::Reverse(e[1])));
    out.into_iter().map(|e| Poly::monomial(e, Scalar::one())).collect()
}

/// `I = ½(2E·Î₀ − 3Î₁ + 6Î₂)`.
pub fn integrand_from(terms: &ObstructionTerms, einstein: i64) -> Poly {
    let s = |c: i64, p: &Poly| p.scale(&Scalar::from_int(c));
    let sum = &(&s(2 * einstein, &terms.i0) - &s(3, &terms.i1)) + &s(6, &terms.i2);
    sum.scale(&Scalar::frac(1, 2))
}

pub fn integrand(frame: &CoordFrame) -> Poly {
    integrand_from(&obstruction_terms(frame), frame.space.einstein)
}

/// The pairing `⟨I, i·det⟩` split along the three monomial shapes of `i·det`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Pairing {
    pub total: Scalar,
    /// Against `8v₁v₂v₃`.
    pub vvv: Scalar,
    /// Against the `xᵢ²vⱼ` terms.
    pub x2v: Scalar,
    /// Against the `xᵢxⱼxₖ` terms.
    pub xxx: Scalar,
}

/// Splits `i·det` into its `v³`, `x²v` and `x³` parts.
pub fn det_parts() -> [Poly; 3] {
    let mut parts = [Poly::zero(), Poly::zero(), Poly::zero()];
    for (e, c) in det_cubic::<Scalar>().terms() {
        let vdeg: u8 = e[..3].iter().sum();
        let slot = match vdeg {
            3 => 0,
            1 => 1,
            _ => 2,
        };
        parts[slot] = &parts[slot] + &Poly::monomial(*e, c.clone());
    }
    parts
}

pub fn pairing_of(i: &Poly) -> Result<Pairing> {
    let g = gram_su3::<Scalar>();
    let [p0, p1, p2] = det_parts();
    let vvv = sym_inner(i, &p0, &g)?;
    let x2v = sym_inner(i, &p1, &g)?;
    let xxx = sym_inner(i, &p2, &g)?;
    Ok(Pairing {
        total: &(&vvv + &x2v) + &xxx,
        vvv,
        x2v,
        xxx,
    })
}

pub fn obstruction_pairing(frame: &CoordFrame) -> Result<Pairing> {
    pairing_of(&integrand(frame))
}

/// Exact checks behind "no nonzero `ξ ∈ su(3)` is a critical point of `det`".
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalPointCheck {
    /// `∂det/∂aᵢⱼ` equals the `(i, j)` cofactor, so critical points are the matrices of rank ≤ 1.
    pub gradient_is_cofactor: bool,
    /// Rank-one skew-hermitian matrices `iλuu*` have nonzero trace, so none lie in su(3).
    pub rank_one_has_trace: bool,
    pub samples: usize,
    /// Samples whose adjugate vanished.
    pub zero_adjugates: usize,
}

impl CriticalPointCheck {
    pub fn critical_points_exist(&self) -> bool {
        !(self.gradient_is_cofactor && self.rank_one_has_trace && self.zero_adjugates == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RigidityVerdict {
    pub pairing: Scalar,
    pub pairing_nonzero: bool,
    pub critical_points_exist: bool,
    pub rigid: bool,
    pub summary: String,
}

/// Symbolic check on a generic 3×3 matrix whose entries are the nine generators.
pub fn gradient_is_cofactor() -> bool {
    let a = |r: usize, c: usize| Poly::var(3 * r + c);
    let minor = |r: usize, c: usize| {
        let rows: Vec<usize> = (0..3).filter(|&k| k != r).collect();
        let cols: Vec<usize> = (0..3).filter(|&k| k != c).collect();
        &(&a(rows[0], cols[0]) * &a(rows[1], cols[1])) - &(&a(rows[0], cols[1]) * &a(rows[1], cols[0]))
    };
    let cofactor = |r: usize, c: usize| if (r + c) % 2 == 0 { minor(r, c) } else { -minor(r, c) };
    let det = (0..3).fold(Poly::zero(), |acc, c| &acc + &(&a(0, c) * &cofactor(0, c)));
    (0..3).all(|r| (0..3).all(|c| det.partial(3 * r + c) == cofactor(r, c)))
}

/// `tr(iλuu*) = iλ|u|²` on a few exact vectors, and `adj(iλuu*) = 0`.
pub fn rank_one_certificate() -> bool {
    let i = Scalar::i();
    let vectors: [[Scalar; 3]; 3] = [
        [Scalar::one(), Scalar::zero(), Scalar::zero()],
        [Scalar::one(), i.clone(), Scalar::from_int(2)],
        [Scalar::sqrt2(), -Scalar::one(), &Scalar::from_int(3) - &i],
    ];
    vectors.iter().all(|u| {
        let lambda = Scalar::frac(3, 2);
        let m = Matrix::from_fn(3, 3, |r, c| &(&(&i * &lambda) * &u[r]) * &u[c].conjugate());
        let norm = u.iter().fold(Scalar::zero(), |acc, z| &acc + &(z * &z.conjugate()));
        let skew = m.conj().transpose() == m.scale(&Scalar::from_int(-1));
        skew && m.trace() == &(&i * &lambda) * &norm && !m.trace().is_zero() && m.adjugate().is_zero()
    })
}

/// A random nonzero traceless skew-hermitian 3×3 matrix with small rational entries.
pub fn random_su3(rng: &mut impl Rng) -> Mat {
    loop {
        let mut q = || Scalar::frac(rng.gen_range(-9..=9), rng.gen_range(1..=4));
        let (d1, d2) = (q(), q());
        let diag = [d1.clone(), d2.clone(), -&(&d1 + &d2)];
        let mut m = Matrix::zeros(3, 3);
        for (k, d) in diag.iter().enumerate() {
            m[(k, k)] = &Scalar::i() * d;
        }
        for (r, c) in [(0, 1), (0, 2), (1, 2)] {
            let z = &q() + &(&Scalar::i() * &q());
            m[(c, r)] = -z.conjugate();
            m[(r, c)] = z;
        }
        if !m.is_zero() {
            return m;
        }
    }
}

pub const SAMPLE_SEED: u64 = 0x5eed_0f_f1a6;

pub fn critical_point_check(samples: usize) -> CriticalPointCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let zero_adjugates = (0..samples).filter(|_| random_su3(&mut rng).adjugate().is_zero()).count();
    CriticalPointCheck {
        gradient_is_cofactor: gradient_is_cofactor(),
        rank_one_has_trace: rank_one_certificate(),
        samples,
        zero_adjugates,
    }
}

/// Combines a pairing value with the critical-point analysis.
pub fn verdict_from(pairing: Scalar, check: &CriticalPointCheck) -> RigidityVerdict {
    let pairing_nonzero = !pairing.is_zero();
    let critical_points_exist = check.critical_points_exist();
    let rigid = pairing_nonzero && !critical_points_exist;
    let summary = if rigid {
        "rigid: infinitesimal Einstein deformations are not integrable to second order".to_string()
    } else if !pairing_nonzero {
        "undetermined by second order".to_string()
    } else {
        "undetermined: det may have nonzero critical points on su(3)".to_string()
    };
    RigidityVerdict {
        pairing,
        pairing_nonzero,
        critical_points_exist,
        rigid,
        summary,
    }
}

pub const VERDICT_SAMPLES: usize = 1000;

pub fn rigidity_verdict(frame: &CoordFrame) -> Result<RigidityVerdict> {
    let pairing = obstruction_pairing(frame)?.total;
    Ok(verdict_from(pairing, &critical_point_check(VERDICT_SAMPLES)))
}

/// Whether `h = t₁g|_{m₁} + t₂g|_{m₂} + t₃g|_{m₃}` satisfies the Killing equation.
///
/// `m₁ = ⟨e₁, e₂⟩`, `m₂ = ⟨e₃, e₄⟩`, `m₃ = ⟨e₅, e₆⟩`. Such `h` is G-invariant,
/// so `∇h(X, ·, ·) = ½A_X h` and the check is that its full symmetrization vanishes.
pub fn killing_check(t: [BigRational; 3]) -> Result<bool> {
    let sum = &(&t[0] + &t[1]) + &t[2];
    if !sum.is_zero() {
        return Err(Error::NotTraceFree(sum.to_string()));
    }
    let frame = CoordFrame::default();
    let mut h: Mat = Matrix::zeros(N, N);
    for k in 0..N {
        h[(k, k)] = Scalar::from_rational(t[k / 2].clone());
    }
    let nabla: Vec<Mat> = (1..=N)
        .map(|i| {
            let a = frame.a_endomorphism(i);
            a.mul(&h).add(&h.mul(&a.transpose())).scale(&Scalar::frac(1, 2))
        })
        .collect();
    Ok((0..N).all(|a| {
        (0..N).all(|b| {
            (0..N).all(|c| (&(&nabla[a][(b, c)] + &nabla[b][(c, a)]) + &nabla[c][(a, b)]).is_zero())
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use crate::poly::x;
    use crate::reference;
    use proptest::prelude::*;

    fn sym(pairs: &[(usize, usize)], c: &Poly) -> PolyTensor {
        let mut t = zero_tensor();
        for &(a, b) in pairs {
            t[a - 1][b - 1] = &t[a - 1][b - 1] + c;
            t[b - 1][a - 1] = &t[b - 1][a - 1] + c;
        }
        t
    }

    fn diff(p: usize, q: usize) -> Poly {
        &Poly::var(v(p)) - &Poly::var(v(q))
    }

    #[test]
    fn coordinate_derivatives() {
        let f = CoordFrame::default();
        let d = |e: usize, k: usize| f.directional_derivative(&f.e(e), &Poly::var(k));
        assert_eq!(d(1, v(2)), Poly::var(x(2)));
        assert_eq!(d(1, v(1)), -Poly::var(x(2)));
        assert!(d(1, v(3)).is_zero());
        assert_eq!(d(5, v(3)), Poly::var(x(6)));
        assert_eq!(d(5, v(2)), -Poly::var(x(6)));
        assert!(d(5, v(1)).is_zero());
        for j in 1..=3 {
            for i in 1..=3 {
                assert!(f.directional_derivative(&f.h(j), &Poly::var(v(i))).is_zero());
            }
        }
    }

    #[test]
    fn h_hat_is_diagonal() {
        let f = CoordFrame::default();
        let expected: PolyTensor = (0..N)
            .map(|a| {
                (0..N)
                    .map(|b| if a == b { Poly::var(v(3 - a / 2)) } else { Poly::zero() })
                    .collect()
            })
            .collect();
        assert_eq!(f.h_hat(), expected);
    }

    #[test]
    fn e1_and_e5_of_h() {
        let f = CoordFrame::default();
        let h = f.h_hat();
        let x2 = Poly::var(x(2));
        let got = f.derive_tensor(&f.e(1), &h);
        let mut published = zero_tensor();
        for k in 2..6 {
            published[k][k] = if k < 4 { x2.clone() } else { -x2.clone() };
        }
        assert_eq!(got, published);
        let x6 = Poly::var(x(6));
        let mut published5 = zero_tensor();
        for k in 0..4 {
            published5[k][k] = if k < 2 { x6.clone() } else { -x6.clone() };
        }
        assert_eq!(f.derive_tensor(&f.e(5), &h), published5);
    }

    #[test]
    fn a_action_displays() {
        let f = CoordFrame::default();
        let h = f.h_hat();
        let a = |i: usize| a_action(&f.a_endomorphism(i), &h);
        let sum = |p: PolyTensor, q: PolyTensor| -> PolyTensor {
            p.iter().zip(&q).map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect()).collect()
        };
        assert_eq!(a(1), sym(&[(3, 5), (4, 6)], &diff(1, 2)));
        assert_eq!(a(2), sum(sym(&[(4, 5)], &diff(1, 2)), sym(&[(3, 6)], &diff(2, 1))));
        assert_eq!(a(3), sum(sym(&[(1, 5)], &diff(3, 1)), sym(&[(2, 6)], &diff(1, 3))));
        assert_eq!(a(4), sym(&[(1, 6), (2, 5)], &diff(3, 1)));
        assert_eq!(a(5), sym(&[(1, 3), (2, 4)], &diff(2, 3)));
        assert_eq!(a(6), sum(sym(&[(1, 4)], &diff(2, 3)), sym(&[(2, 3)], &diff(3, 2))));
    }

    #[test]
    fn a_annihilates_metric() {
        let f = CoordFrame::default();
        let g: PolyTensor = (0..N)
            .map(|a| (0..N).map(|b| if a == b { Poly::one() } else { Poly::zero() }).collect())
            .collect();
        for i in 1..=N {
            assert!(a_action(&f.a_endomorphism(i), &g).iter().flatten().all(Poly::is_zero));
        }
    }

    #[test]
    fn table_regenerated() {
        let table = CoordFrame::default().nabla_h();
        assert!(table.is_symmetric());
        for entry in reference::nabla_h_table() {
            assert_eq!(table.entries[entry.i - 1][entry.k - 1], entry.vector(), "entry ({}, {})", entry.i, entry.k);
        }
    }

    #[test]
    fn terms_and_integrand() {
        let f = CoordFrame::default();
        let t = obstruction_terms(&f);
        assert_eq!(reduce_trace(&t.i0), reduce_trace(&reference::i0()));
        assert_eq!(reduce_trace(&t.i1), reduce_trace(&reference::i1()));
        assert_eq!(reduce_trace(&t.i2), reduce_trace(&reference::i2()));
        let i = integrand_from(&t, f.space.einstein);
        assert_eq!(reduce_trace(&i), reduce_trace(&reference::integrand()));
        let published = ObstructionTerms { i0: reference::i0(), i1: reference::i1(), i2: reference::i2() };
        assert_eq!(integrand_from(&published, 5), reference::integrand());
    }

    #[test]
    fn normal_form_matches_published_shape() {
        let t = obstruction_terms(&CoordFrame::default());
        assert_eq!(trace_normal_form(&t.i0), reference::i0());
        assert_eq!(trace_normal_form(&t.i1), reference::i1());
        assert_eq!(trace_normal_form(&t.i2), reference::i2());
        assert_eq!(trace_normal_form(&integrand(&CoordFrame::default())), reference::integrand());
    }

    #[test]
    fn pairing_value() {
        let p = obstruction_pairing(&CoordFrame::default()).unwrap();
        assert_eq!(p.total, Scalar::frac(256, 3));
        assert_eq!(p.vvv, Scalar::frac(672, 18));
        assert_eq!(p.x2v, Scalar::from_int(48));
        assert!(p.xxx.is_zero());
        assert_eq!(pairing_of(&reference::integrand()).unwrap(), p);
    }

    #[test]
    fn sign_toggle() {
        let plus = CoordFrame::new(1);
        let minus = CoordFrame::new(-1);
        assert_eq!(
            minus.directional_derivative(&minus.e(1), &Poly::var(v(2))),
            -plus.directional_derivative(&plus.e(1), &Poly::var(v(2)))
        );
        let ip = reduce_trace(&integrand(&plus));
        let im = reduce_trace(&integrand(&minus));
        assert_eq!(ip, im);
        assert_eq!(obstruction_pairing(&minus).unwrap().total, Scalar::frac(256, 3));
    }

    #[test]
    fn verdict() {
        let v = rigidity_verdict(&CoordFrame::default()).unwrap();
        assert!(v.pairing_nonzero && !v.critical_points_exist && v.rigid);
        let check = critical_point_check(10);
        let zero = verdict_from(Scalar::zero(), &check);
        assert!(!zero.rigid);
        assert_eq!(zero.summary, "undetermined by second order");
    }

    #[test]
    fn certificates() {
        assert!(gradient_is_cofactor());
        assert!(rank_one_certificate());
    }

    #[test]
    fn killing_examples() {
        assert!(killing_check([rat(1, 1), rat(-1, 1), rat(0, 1)]).unwrap());
        assert!(killing_check([rat(0, 1), rat(0, 1), rat(0, 1)]).unwrap());
        assert!(killing_check([rat(2, 1), rat(-1, 1), rat(-1, 1)]).unwrap());
        assert!(killing_check([rat(1, 1), rat(1, 1), rat(0, 1)]).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn killing_random(a in -50i64..=50, b in -50i64..=50, d in 1i64..=12) {
            let t = [rat(a, d), rat(b, d), rat(-a - b, d)];
            prop_assert!(killing_check(t).unwrap());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(8))]
        #[test]
        fn adjugate_nonzero(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..125 {
                prop_assert!(!random_su3(&mut rng).adjugate().is_zero());
            }
        }
    }
}
