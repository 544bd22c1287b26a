//! Published values that the computations are compared against.

use crate::branching::HLabel;
use crate::lie::{GroupKind, SpaceName};
use crate::poly::{v, x, SymPoly};
use crate::stability::Source;
use crate::Scalar;

/// One row of a Casimir table: labels sharing a value, with branching or hom dimension.
#[derive(Clone, Debug)]
pub struct CasimirRow {
    pub group: GroupKind,
    pub labels: Vec<Vec<u32>>,
    /// `(numerator, denominator)`.
    pub casimir: (i64, i64),
    pub branching: Option<Vec<(HLabel, u64)>>,
    pub hom_dim: Option<u64>,
}

fn row(group: GroupKind, labels: &[&[u32]], casimir: (i64, i64), branching: Option<Vec<(HLabel, u64)>>, hom_dim: Option<u64>) -> CasimirRow {
    CasimirRow {
        group,
        labels: labels.iter().map(|l| l.to_vec()).collect(),
        casimir,
        branching,
        hom_dim,
    }
}

fn e(a: u32, b: i64) -> (HLabel, u64) {
    (HLabel::U2 { a, b }, 1)
}

/// The Casimir tables for `SU(2)³`, `SO(5)` and `SU(3)`.
pub fn casimir_tables() -> Vec<CasimirRow> {
    use GroupKind::*;
    use HLabel::Sl2;
    vec![
        row(K3, &[&[0, 0, 0]], (0, 1), Some(vec![(Sl2(0), 1)]), None),
        row(K3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], (9, 2), Some(vec![(Sl2(1), 1)]), None),
        row(K3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]], (9, 1), Some(vec![(Sl2(2), 1), (Sl2(0), 1)]), None),
        row(K3, &[&[1, 1, 1]], (27, 2), Some(vec![(Sl2(3), 1), (Sl2(1), 2)]), None),
        row(K3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]], (12, 1), Some(vec![(Sl2(2), 1)]), None),
        row(So5, &[&[0, 0]], (0, 1), Some(vec![e(0, 0)]), None),
        row(So5, &[&[1, 0]], (8, 1), Some(vec![e(1, 1), e(1, -1), e(0, 0)]), None),
        row(So5, &[&[1, 1]], (12, 1), Some(vec![e(2, 0), e(1, 1), e(1, -1), e(0, 2), e(0, 0), e(0, -2)]), None),
        row(So5, &[&[2, 0]], (20, 1), Some(vec![e(2, 2), e(2, 0), e(2, -2), e(1, 1), e(1, -1), e(0, 0)]), None),
        row(Su3, &[&[0, 0]], (0, 1), None, Some(2)),
        row(Su3, &[&[1, 0]], (6, 1), None, Some(0)),
        row(Su3, &[&[0, 1]], (6, 1), None, Some(0)),
        row(Su3, &[&[1, 1]], (12, 1), None, Some(4)),
    ]
}

/// Decomposition of `Λ^{1,1}₀m` for `S³×S³` and `CP³`, and the trivial multiplicity for the flag.
pub fn lambda11_0_decompositions() -> Vec<(SpaceName, Vec<(HLabel, u64)>)> {
    vec![
        (SpaceName::S3xS3, vec![(HLabel::Sl2(4), 1), (HLabel::Sl2(2), 1)]),
        (SpaceName::Cp3, vec![e(2, 0), e(1, 3), e(1, -3), e(0, 0)]),
    ]
}

pub const FLAG_TRIVIAL_MULT: u64 = 2;

/// Expected coindex report: `(space, coindex, λ, multiplicity, source, IED dimension)`.
pub fn coindex_reports() -> Vec<(SpaceName, u64, i64, u64, Source, u64)> {
    vec![
        (SpaceName::S3xS3, 2, 4, 2, Source::Harmonic3, 0),
        (SpaceName::Cp3, 1, 6, 1, Source::Harmonic2, 0),
        (SpaceName::Flag, 2, 6, 2, Source::Harmonic2, 8),
    ]
}

/// The `S³×S³`, `γ = (1,1,0)` generator in the bases `B` and `B′`, as printed.
pub fn s3xs3_generator() -> Vec<Vec<Scalar>> {
    let r = Scalar::sqrt2().inv().expect("nonzero");
    let z = Scalar::from_int(0);
    let ir = &Scalar::i() * &r;
    vec![
        vec![z.clone(), r.clone(), r.clone(), z.clone()],
        vec![r.clone(), z.clone(), z.clone(), r],
        vec![-ir.clone(), z.clone(), z, ir],
    ]
}

/// The `S³×S³` display of `δ(F)` in the bases `B` and `B″ = (X₁, X₂, X₃, X̄₁, X̄₂, X̄₃)`.
pub fn s3xs3_delta_display() -> Vec<Vec<Scalar>> {
    let one = Scalar::from_int(1);
    let j = Scalar::j();
    let j2 = &j * &j;
    let mut m = vec![vec![Scalar::from_int(0); 4]; 6];
    m[2][1] = &one - &j2;
    m[2][2] = &j2 - &one;
    m[5][1] = &one - &j;
    m[5][2] = &j - &one;
    m
}

/// One entry `∇h(e_i, e_k, ·) = s·x_a e_l + (v_p − v_q)/2 e_m`, or zero.
#[derive(Clone, Copy, Debug)]
pub struct NablaEntry {
    pub i: usize,
    pub k: usize,
    /// `(s, a, l, p, q, m)`.
    pub terms: Option<(i64, usize, usize, usize, usize, usize)>,
}

/// The 36 coefficients of `∇h` in the frame `e₁, …, e₆` (1-based indices).
pub fn nabla_h_table() -> Vec<NablaEntry> {
    let rows: [[Option<(i64, usize, usize, usize, usize, usize)>; 6]; 6] = [
        [None, None, Some((1, 2, 3, 1, 2, 5)), Some((1, 2, 4, 1, 2, 6)), Some((-1, 2, 5, 1, 2, 3)), Some((-1, 2, 6, 1, 2, 4))],
        [None, None, Some((-1, 1, 3, 2, 1, 6)), Some((-1, 1, 4, 1, 2, 5)), Some((1, 1, 5, 1, 2, 4)), Some((1, 1, 6, 2, 1, 3))],
        [Some((1, 4, 1, 3, 1, 5)), Some((1, 4, 2, 1, 3, 6)), None, None, Some((-1, 4, 5, 3, 1, 1)), Some((-1, 4, 6, 1, 3, 2))],
        [Some((-1, 3, 1, 3, 1, 6)), Some((-1, 3, 2, 3, 1, 5)), None, None, Some((1, 3, 5, 3, 1, 2)), Some((1, 3, 6, 3, 1, 1))],
        [Some((1, 6, 1, 2, 3, 3)), Some((1, 6, 2, 2, 3, 4)), Some((-1, 6, 3, 2, 3, 1)), Some((-1, 6, 4, 2, 3, 2)), None, None],
        [Some((-1, 5, 1, 2, 3, 4)), Some((-1, 5, 2, 3, 2, 3)), Some((1, 5, 3, 3, 2, 2)), Some((1, 5, 4, 2, 3, 1)), None, None],
    ];
    let mut out = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        for (k, t) in r.iter().enumerate() {
            out.push(NablaEntry { i: i + 1, k: k + 1, terms: *t });
        }
    }
    out
}

impl NablaEntry {
    /// The entry as six polynomial coefficients on `e₁, …, e₆`.
    pub fn vector(&self) -> Vec<SymPoly<Scalar>> {
        let mut out = vec![SymPoly::zero(); 6];
        if let Some((s, a, l, p, q, m)) = self.terms {
            out[l - 1] = SymPoly::term(s, &[x(a)]);
            let diff = &SymPoly::var(v(p)) - &SymPoly::var(v(q));
            out[m - 1] = &out[m - 1] + &diff.scale(&Scalar::frac(1, 2));
        }
        out
    }
}

fn sum(parts: &[SymPoly<Scalar>]) -> SymPoly<Scalar> {
    parts.iter().fold(SymPoly::zero(), |acc, p| &acc + p)
}

fn x2v(c: i64) -> SymPoly<Scalar> {
    let t = SymPoly::<Scalar>::term;
    sum(&[
        t(c, &[x(1), x(1), v(3)]),
        t(c, &[x(2), x(2), v(3)]),
        t(c, &[x(3), x(3), v(2)]),
        t(c, &[x(4), x(4), v(2)]),
        t(c, &[x(5), x(5), v(1)]),
        t(c, &[x(6), x(6), v(1)]),
    ])
}

/// `Î₀ = 6v₁v₂v₃`.
pub fn i0() -> SymPoly<Scalar> {
    SymPoly::term(6, &[v(1), v(2), v(3)])
}

/// `Î₁ = −18v₁v₂v₃ + 4(x₁²+x₂²)v₃ + 4(x₃²+x₄²)v₂ + 4(x₅²+x₆²)v₁`.
pub fn i1() -> SymPoly<Scalar> {
    &SymPoly::term(-18, &[v(1), v(2), v(3)]) + &x2v(4)
}

/// `Î₂ = 9v₁v₂v₃`.
pub fn i2() -> SymPoly<Scalar> {
    SymPoly::term(9, &[v(1), v(2), v(3)])
}

/// `I = 84v₁v₂v₃ − 6(x₁²+x₂²)v₃ − 6(x₃²+x₄²)v₂ − 6(x₅²+x₆²)v₁`.
pub fn integrand() -> SymPoly<Scalar> {
    &SymPoly::term(84, &[v(1), v(2), v(3)]) + &x2v(-6)
}

/// `⟨I, i·det⟩ = 256/3`.
pub const PAIRING: (i64, i64) = (256, 3);
/// The `v₁v₂v₃` contribution `672·(1/18)`.
pub const PAIRING_VVV: (i64, i64) = (672, 18);
/// The `x²v` contribution `12·6·(2/3)`.
pub const PAIRING_X2V: (i64, i64) = (48, 1);
