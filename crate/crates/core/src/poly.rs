//! Commutative polynomials in `v₁, v₂, v₃, x₁, …, x₆` and the inner product
//! on `Symᵏ su(3)` induced by their Gram matrix.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{rat, Field};
use crate::linalg::Matrix;

pub const NVARS: usize = 9;
pub const VAR_NAMES: [&str; NVARS] = ["v1", "v2", "v3", "x1", "x2", "x3", "x4", "x5", "x6"];

pub type Exponents = [u8; NVARS];

/// Index of `vᵢ` (1-based).
pub const fn v(i: usize) -> usize {
    i - 1
}

/// Index of `xᵢ` (1-based).
pub const fn x(i: usize) -> usize {
    i + 2
}

/// A polynomial with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymPoly<S> {
    terms: BTreeMap<Exponents, S>,
}

impl<S: Field> SymPoly<S> {
    pub fn zero() -> Self {
        SymPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::monomial([0; NVARS], c)
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn monomial(e: Exponents, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// The generator with the given index.
    pub fn var(k: usize) -> Self {
        let mut e = [0; NVARS];
        e[k] = 1;
        Self::monomial(e, S::one())
    }

    /// Product of generators with a coefficient, e.g. `term(6, &[v(1), v(2), v(3)])`.
    pub fn term(c: i64, vars: &[usize]) -> Self {
        let mut e = [0; NVARS];
        for &k in vars {
            e[k] += 1;
        }
        Self::monomial(e, S::from_i64(c))
    }

    fn add_term(&mut self, e: Exponents, c: S) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&e) {
            Some(old) => old.add_ref(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &S)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &Exponents) -> S {
        self.terms.get(e).cloned().unwrap_or_else(S::zero)
    }

    /// Coefficient of a product of generators.
    pub fn coeff_of(&self, vars: &[usize]) -> S {
        let mut e = [0; NVARS];
        for &k in vars {
            e[k] += 1;
        }
        self.coeff(&e)
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        for (e, a) in &self.terms {
            out.add_term(*e, a.mul_ref(c));
        }
        out
    }

    /// Total degree if homogeneous; `None` for zero or inhomogeneous polynomials.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(total_degree).dedup();
        let d = degs.next()?;
        degs.next().is_none().then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree().is_some()
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Replaces generator `k` by `q`.
    pub fn substitute(&self, k: usize, q: &Self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[k] = 0;
            let t = &Self::monomial(rest, c.clone()) * &q.pow(u32::from(e[k]));
            out = &out + &t;
        }
        out
    }

    /// Partial derivative with respect to generator `k`.
    pub fn partial(&self, k: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[k] == 0 {
                continue;
            }
            let mut d = *e;
            d[k] -= 1;
            out.add_term(d, c.mul_ref(&S::from_i64(i64::from(e[k]))));
        }
        out
    }

    pub fn evaluate(&self, point: &[S]) -> S {
        self.terms.iter().fold(S::zero(), |acc, (e, c)| {
            let m = e.iter().zip(point).fold(c.clone(), |m, (&k, p)| {
                (0..k).fold(m, |m, _| m.mul_ref(p))
            });
            acc.add_ref(&m)
        })
    }

    /// Image under a map of coefficient fields.
    pub fn map_coeffs<T: Field>(&self, f: impl Fn(&S) -> T) -> SymPoly<T> {
        let mut out = SymPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out
    }

    /// Terms in printing order.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &S)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| print_order(a.0, b.0));
        t
    }
}

fn total_degree(e: &Exponents) -> u32 {
    e.iter().map(|&k| u32::from(k)).sum()
}

/// Degree descending, then `v`-degree descending, then `x` exponents and `v` exponents lexicographically descending.
fn print_order(a: &Exponents, b: &Exponents) -> Ordering {
    let vdeg = |e: &Exponents| e[..3].iter().map(|&k| u32::from(k)).sum::<u32>();
    total_degree(b)
        .cmp(&total_degree(a))
        .then_with(|| vdeg(b).cmp(&vdeg(a)))
        .then_with(|| b[3..].cmp(&a[3..]))
        .then_with(|| b[..3].cmp(&a[..3]))
}

impl<S: Field> Zero for SymPoly<S> {
    fn zero() -> Self {
        SymPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Field> One for SymPoly<S> {
    fn one() -> Self {
        SymPoly::one()
    }
}

impl<S: Field> Add for &SymPoly<S> {
    type Output = SymPoly<S>;
    fn add(self, o: &SymPoly<S>) -> SymPoly<S> {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<S: Field> Sub for &SymPoly<S> {
    type Output = SymPoly<S>;
    fn sub(self, o: &SymPoly<S>) -> SymPoly<S> {
        self + &(-o)
    }
}

impl<S: Field> Neg for &SymPoly<S> {
    type Output = SymPoly<S>;
    fn neg(self) -> SymPoly<S> {
        let mut out = SymPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<S: Field> Mul for &SymPoly<S> {
    type Output = SymPoly<S>;
    fn mul(self, o: &SymPoly<S>) -> SymPoly<S> {
        let mut out = SymPoly::zero();
        for (ea, a) in &self.terms {
            for (eb, b) in &o.terms {
                let mut e = *ea;
                for (k, x) in e.iter_mut().zip(eb) {
                    *k += x;
                }
                out.add_term(e, a.mul_ref(b));
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<S: Field> $tr for SymPoly<S> {
            type Output = SymPoly<S>;
            fn $m(self, o: SymPoly<S>) -> SymPoly<S> {
                (&self).$m(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<S: Field> Neg for SymPoly<S> {
    type Output = SymPoly<S>;
    fn neg(self) -> SymPoly<S> {
        -&self
    }
}

fn monomial_string(e: &Exponents) -> String {
    let order = [3, 4, 5, 6, 7, 8, 0, 1, 2];
    order
        .iter()
        .filter(|&&k| e[k] > 0)
        .map(|&k| match e[k] {
            1 => VAR_NAMES[k].to_string(),
            p => format!("{}^{p}", VAR_NAMES[k]),
        })
        .join("·")
}

impl<S: Field + fmt::Display> fmt::Display for SymPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let mono = monomial_string(e);
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                _ if cs.contains(' ') => (false, format!("({cs})")),
                _ => (false, cs),
            };
            let body = match (mono.is_empty(), mag.as_str()) {
                (true, _) => mag,
                (false, "1") => mono,
                (false, _) => format!("{mag}·{mono}"),
            };
            match (n, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => f.write_str(&body)?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermJson<'a, S> {
    exponents: &'a Exponents,
    coeff: &'a S,
}

impl<S: Field + Serialize> Serialize for SymPoly<S> {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let terms = self.sorted_terms();
        let mut seq = s.serialize_seq(Some(terms.len()))?;
        for (exponents, coeff) in terms {
            seq.serialize_element(&TermJson { exponents, coeff })?;
        }
        seq.end()
    }
}

/// Gram matrix of the generators: `⟨xᵢ,xⱼ⟩ = δᵢⱼ`, `⟨vᵢ,vᵢ⟩ = 1/3`, `⟨vᵢ,vⱼ⟩ = −1/6`, `⟨x,v⟩ = 0`.
pub fn gram_su3<S: Field>() -> Matrix<S> {
    Matrix::from_fn(NVARS, NVARS, |a, b| match (a < 3, b < 3) {
        (true, true) if a == b => S::from_rational(rat(1, 3)),
        (true, true) => S::from_rational(rat(-1, 6)),
        (false, false) if a == b => S::one(),
        _ => S::zero(),
    })
}

fn factors(e: &Exponents) -> Vec<usize> {
    e.iter().enumerate().flat_map(|(k, &p)| std::iter::repeat_n(k, p as usize)).collect()
}

/// `⟨a₁⋯a_k, b₁⋯b_k⟩ = Σ_σ Π ⟨aᵢ, b_σ(i)⟩`, extended bilinearly.
pub fn sym_inner<S: Field>(p: &SymPoly<S>, q: &SymPoly<S>, gram: &Matrix<S>) -> Result<S> {
    let mut total = S::zero();
    for (ea, a) in &p.terms {
        let fa = factors(ea);
        for (eb, b) in &q.terms {
            let fb = factors(eb);
            if fa.len() != fb.len() {
                return Err(Error::DegreeMismatch(fa.len() as u32, fb.len() as u32));
            }
            let perm_sum = (0..fb.len()).permutations(fb.len()).fold(S::zero(), |acc, sigma| {
                let prod = fa
                    .iter()
                    .zip(&sigma)
                    .fold(S::one(), |m, (&i, &j)| m.mul_ref(&gram[(i, fb[j])]));
                acc.add_ref(&prod)
            });
            total = total.add_ref(&a.mul_ref(b).mul_ref(&perm_sum));
        }
    }
    Ok(total)
}

/// `i·det(ξ)` on `su(3)` in the coordinates `vᵢ, xᵢ`:
/// `8v₁v₂v₃ + 2(x₁x₃x₅ − x₁x₄x₆ − x₂x₃x₆ − x₂x₄x₅) − 2(x₁²+x₂²)v₃ − 2(x₃²+x₄²)v₂ − 2(x₅²+x₆²)v₁`.
pub fn det_cubic<S: Field>() -> SymPoly<S> {
    let t = SymPoly::<S>::term;
    [
        t(8, &[v(1), v(2), v(3)]),
        t(2, &[x(1), x(3), x(5)]),
        t(-2, &[x(1), x(4), x(6)]),
        t(-2, &[x(2), x(3), x(6)]),
        t(-2, &[x(2), x(4), x(5)]),
        t(-2, &[x(1), x(1), v(3)]),
        t(-2, &[x(2), x(2), v(3)]),
        t(-2, &[x(3), x(3), v(2)]),
        t(-2, &[x(4), x(4), v(2)]),
        t(-2, &[x(5), x(5), v(1)]),
        t(-2, &[x(6), x(6), v(1)]),
    ]
    .iter()
    .fold(SymPoly::zero(), |acc, p| &acc + p)
}

/// The trace generator `v₁ + v₂ + v₃`, spanning the kernel of the Gram matrix.
pub fn trace_generator<S: Field>() -> SymPoly<S> {
    &(&SymPoly::var(v(1)) + &SymPoly::var(v(2))) + &SymPoly::var(v(3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type P = SymPoly<BigRational>;

    #[test]
    fn ring_basics() {
        let p = &trace_generator::<BigRational>() * &P::term(1, &[v(1), v(2)]);
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.degree(), Some(3));
        assert_eq!(&p + &P::zero(), p);
        assert_eq!(P::term(1, &[v(1), v(2), v(3)]).scale(&rat(6, 1)), P::term(6, &[v(1), v(2), v(3)]));
        assert!((&p - &p).is_zero());
        assert_eq!((&P::var(0) + &P::one()).degree(), None);
    }

    #[test]
    fn inner_product_values() {
        let g = gram_su3::<BigRational>();
        let m = P::term(1, &[v(1), v(2), v(3)]);
        assert_eq!(sym_inner(&m, &m, &g).unwrap(), rat(1, 18));
        let s = P::term(1, &[x(1), x(1), v(3)]);
        assert_eq!(sym_inner(&s, &s, &g).unwrap(), rat(2, 3));
        assert_eq!(sym_inner(&P::var(x(1)), &P::var(x(2)), &g).unwrap(), rat(0, 1));
        assert!(sym_inner(&P::var(x(1)), &m, &g).is_err());
        for a in 0..NVARS {
            for b in 0..NVARS {
                assert_eq!(sym_inner(&P::var(a), &P::var(b), &g).unwrap(), g[(a, b)]);
            }
        }
    }

    #[test]
    fn gram_kernel() {
        let g = gram_su3::<BigRational>();
        assert_eq!(g.rank(), 8);
        let t = trace_generator::<BigRational>();
        for k in 0..NVARS {
            assert_eq!(sym_inner(&t, &P::var(k), &g).unwrap(), rat(0, 1));
        }
    }

    #[test]
    fn det_cubic_coefficients_and_value() {
        let d = det_cubic::<BigRational>();
        assert_eq!(d.coeff_of(&[v(1), v(2), v(3)]), rat(8, 1));
        assert_eq!(d.coeff_of(&[x(1), x(3), x(5)]), rat(2, 1));
        let mut point = vec![rat(0, 1); NVARS];
        point[0] = rat(1, 2);
        point[1] = rat(1, 2);
        point[2] = rat(-1, 1);
        // ξ = diag(i, i, −2i): i·det ξ = i·(2i) = −2.
        assert_eq!(d.evaluate(&point), rat(-2, 1));
    }

    #[test]
    fn display_order() {
        let p = &(&P::term(84, &[v(1), v(2), v(3)]) - &P::term(6, &[x(1), x(1), v(3)])) - &P::term(6, &[x(5), x(5), v(1)]);
        assert_eq!(p.to_string(), "84·v1·v2·v3 - 6·x1^2·v3 - 6·x5^2·v1");
        let q = SymPoly::<Scalar>::var(x(2)).scale(&Scalar::j());
        assert_eq!(q.to_string(), "(-1/2 + 1/2·i√3)·x2");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!((-&P::one()).to_string(), "-1");
    }

    #[test]
    fn substitution() {
        let p = P::term(1, &[v(1), v(3)]);
        let r = -&(&P::var(v(1)) + &P::var(v(2)));
        let s = p.substitute(v(3), &r);
        assert_eq!(s, -&(&P::term(1, &[v(1), v(1)]) + &P::term(1, &[v(1), v(2)])));
    }

    #[test]
    fn partial_derivatives() {
        let p = &P::term(3, &[v(1), v(1), x(2)]) + &P::term(-1, &[x(2), x(3)]);
        assert_eq!(p.partial(v(1)), P::term(6, &[v(1), x(2)]));
        assert_eq!(p.partial(x(2)), &P::term(3, &[v(1), v(1)]) - &P::var(x(3)));
        assert!(p.partial(v(3)).is_zero());
    }

    fn small_poly(deg: usize) -> impl Strategy<Value = P> {
        proptest::collection::vec((proptest::collection::vec(0usize..NVARS, deg), -4i64..=4), 1..5)
            .prop_map(|terms| terms.iter().fold(P::zero(), |acc, (vars, c)| &acc + &P::term(*c, vars)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn gram_kernel_invariance(q in small_poly(2), p in small_poly(3)) {
            let g = gram_su3::<BigRational>();
            let shifted = &p + &(&trace_generator::<BigRational>() * &q);
            prop_assert_eq!(sym_inner(&shifted, &det_cubic(), &g).unwrap(), sym_inner(&p, &det_cubic(), &g).unwrap());
        }

        #[test]
        fn inner_is_symmetric(p in small_poly(3), q in small_poly(3)) {
            let g = gram_su3::<BigRational>();
            prop_assert_eq!(sym_inner(&p, &q, &g).unwrap(), sym_inner(&q, &p, &g).unwrap());
        }
    }
}
