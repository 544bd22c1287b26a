//! Exact arithmetic in the field ℚ(i, √2, √3).
//!
//! An element is stored as eight rational coordinates over the basis
//! `1, i, √2, √3, i√2, i√3, √6, i√6`. Internally each basis element is a
//! bitmask over the generators `i`, `√2`, `√3`, so the product of two basis
//! elements is the XOR of their masks times the squares of the shared
//! generators.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;

const BIT_I: u8 = 1;
const BIT_R2: u8 = 2;
const BIT_R3: u8 = 4;

/// Generator mask of each public basis position.
const MASK: [u8; 8] = [0, BIT_I, BIT_R2, BIT_R3, BIT_I | BIT_R2, BIT_I | BIT_R3, BIT_R2 | BIT_R3, 7];
/// Inverse of [`MASK`].
const POS: [usize; 8] = [0, 1, 2, 4, 3, 5, 6, 7];

const NAMES: [&str; 8] = ["", "i", "√2", "√3", "i√2", "i√3", "√6", "i√6"];

fn basis_product(a: u8, b: u8) -> (u8, i64) {
    let shared = a & b;
    let mut factor = 1;
    if shared & BIT_I != 0 {
        factor = -factor;
    }
    if shared & BIT_R2 != 0 {
        factor *= 2;
    }
    if shared & BIT_R3 != 0 {
        factor *= 3;
    }
    (a ^ b, factor)
}

/// An exact element of ℚ(i, √2, √3).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarTower {
    coeffs: [BigRational; 8],
}

impl ScalarTower {
    /// Builds an element from its coordinates in the public basis order.
    pub fn from_coeffs(coeffs: [BigRational; 8]) -> Self {
        ScalarTower { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational; 8] {
        &self.coeffs
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(q: BigRational) -> Self {
        let mut s = Self::zero();
        s.coeffs[0] = q;
        s
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    fn unit(pos: usize) -> Self {
        let mut s = Self::zero();
        s.coeffs[pos] = BigRational::one();
        s
    }

    pub fn i() -> Self {
        Self::unit(1)
    }

    pub fn sqrt2() -> Self {
        Self::unit(2)
    }

    pub fn sqrt3() -> Self {
        Self::unit(3)
    }

    pub fn sqrt6() -> Self {
        Self::unit(6)
    }

    /// The primitive cube root of unity `(−1 + i√3)/2`.
    pub fn j() -> Self {
        let mut s = Self::frac(-1, 2);
        s.coeffs[5] = BigRational::new(BigInt::from(1), BigInt::from(2));
        s
    }

    /// Returns the rational value if the element lies in ℚ.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.to_rational().is_some()
    }

    /// Real part (fixed field of conjugation).
    pub fn re(&self) -> Self {
        let mut out = self.clone();
        for (pos, c) in out.coeffs.iter_mut().enumerate() {
            if MASK[pos] & BIT_I != 0 {
                *c = BigRational::zero();
            }
        }
        out
    }

    /// Imaginary part, so that `a = re(a) + i·im(a)`.
    pub fn im(&self) -> Self {
        (self.clone() - self.re()) * (-Self::i())
    }

    /// Applies the automorphism negating every generator in `bits`.
    fn galois(&self, bits: u8) -> Self {
        let mut out = self.clone();
        for (pos, c) in out.coeffs.iter_mut().enumerate() {
            if (MASK[pos] & bits).count_ones() % 2 == 1 {
                *c = -c.clone();
            }
        }
        out
    }

    /// Complex conjugate.
    pub fn conjugate(&self) -> Self {
        self.galois(BIT_I)
    }

    /// Multiplicative inverse via the norm down the tower.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let s1 = self.galois(BIT_I);
        let b = self * &s1;
        let s2 = b.galois(BIT_R2);
        let c = &b * &s2;
        let s3 = c.galois(BIT_R3);
        let n = (&c * &s3)
            .to_rational()
            .expect("norm of a tower element is rational");
        let num = &(&s1 * &s2) * &s3;
        Ok(num.scale(&n.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = &*c * q;
        }
        out
    }

    /// Floating-point approximation, for display only.
    pub fn to_float(&self) -> Complex64 {
        let r2 = std::f64::consts::SQRT_2;
        let r3 = 3f64.sqrt();
        let mut re = 0.0;
        let mut im = 0.0;
        for (pos, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = MASK[pos];
            let mut v = c.to_f64().unwrap_or(f64::NAN);
            if m & BIT_R2 != 0 {
                v *= r2;
            }
            if m & BIT_R3 != 0 {
                v *= r3;
            }
            if m & BIT_I != 0 {
                im += v;
            } else {
                re += v;
            }
        }
        Complex64::new(re, im)
    }

    /// The eight coordinates rendered as `p/q` strings.
    pub fn to_strings(&self) -> [String; 8] {
        std::array::from_fn(|k| self.coeffs[k].to_string())
    }
}

impl Zero for ScalarTower {
    fn zero() -> Self {
        ScalarTower {
            coeffs: std::array::from_fn(|_| BigRational::zero()),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for ScalarTower {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl From<i64> for ScalarTower {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for ScalarTower {
    fn from(q: BigRational) -> Self {
        Self::rational(q)
    }
}

impl<'a> Add<&'a ScalarTower> for &'a ScalarTower {
    type Output = ScalarTower;
    fn add(self, rhs: &ScalarTower) -> ScalarTower {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a ScalarTower> for &'a ScalarTower {
    type Output = ScalarTower;
    fn sub(self, rhs: &ScalarTower) -> ScalarTower {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a ScalarTower> for &'a ScalarTower {
    type Output = ScalarTower;
    fn mul(self, rhs: &ScalarTower) -> ScalarTower {
        let mut out = ScalarTower::zero();
        for (p, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (q, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (m, f) = basis_product(MASK[p], MASK[q]);
                let term = a * b * BigRational::from_integer(BigInt::from(f));
                out.coeffs[POS[m as usize]] += term;
            }
        }
        out
    }
}

impl AddAssign<&ScalarTower> for ScalarTower {
    fn add_assign(&mut self, rhs: &ScalarTower) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&ScalarTower> for ScalarTower {
    fn sub_assign(&mut self, rhs: &ScalarTower) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl Add for ScalarTower {
    type Output = ScalarTower;
    fn add(mut self, rhs: ScalarTower) -> ScalarTower {
        self += &rhs;
        self
    }
}

impl Sub for ScalarTower {
    type Output = ScalarTower;
    fn sub(mut self, rhs: ScalarTower) -> ScalarTower {
        self -= &rhs;
        self
    }
}

impl Mul for ScalarTower {
    type Output = ScalarTower;
    fn mul(self, rhs: ScalarTower) -> ScalarTower {
        &self * &rhs
    }
}

impl Neg for ScalarTower {
    type Output = ScalarTower;
    fn neg(mut self) -> ScalarTower {
        for c in self.coeffs.iter_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &ScalarTower {
    type Output = ScalarTower;
    fn neg(self) -> ScalarTower {
        -self.clone()
    }
}

impl Field for ScalarTower {
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }

    fn from_rational(q: BigRational) -> Self {
        Self::rational(q)
    }

    fn conj(&self) -> Self {
        self.conjugate()
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl fmt::Display for ScalarTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (pos, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if pos == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", NAMES[pos])?;
            } else {
                write!(f, "{abs}·{}", NAMES[pos])?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ScalarTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScalarTower({self})")
    }
}

impl Serialize for ScalarTower {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(8))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for ScalarTower {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts: Vec<String> = Vec::deserialize(deserializer)?;
        if parts.len() != 8 {
            return Err(de::Error::invalid_length(parts.len(), &"eight rationals"));
        }
        let mut out = ScalarTower::zero();
        for (c, s) in out.coeffs.iter_mut().zip(parts.iter()) {
            *c = BigRational::from_str(s).map_err(|e| de::Error::custom(format!("{s}: {e}")))?;
        }
        Ok(out)
    }
}
