//! Exact arithmetic in the quadratic field Q(√5).
//!
//! Elements are `a + b√5` with rational `a`, `b`. This is where τ = (1+√5)/2,
//! τ±1, and every exact Tutte-ratio value live. Absolute values and
//! comparisons use the real embedding √5 ↦ 2.2360679…, decided exactly by
//! comparing `a²` against `5b²`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{rat, rat_to_f64, ratio, Rat};
use crate::error::{ChromaError, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct QuadNum {
    /// Rational part.
    pub a: Rat,
    /// Coefficient of √5.
    pub b: Rat,
}

impl QuadNum {
    pub fn new(a: Rat, b: Rat) -> Self {
        QuadNum { a, b }
    }

    pub fn from_rat(a: Rat) -> Self {
        QuadNum { a, b: rat(0) }
    }

    pub fn from_int(a: i64) -> Self {
        Self::from_rat(rat(a))
    }

    /// `(p + r√5)/d` — convenient for the paper's constants.
    pub fn from_parts(p: i64, r: i64, d: i64) -> Self {
        QuadNum {
            a: ratio(p, d),
            b: ratio(r, d),
        }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt5() -> Self {
        QuadNum {
            a: rat(0),
            b: rat(1),
        }
    }

    /// τ = (1+√5)/2, the golden ratio.
    pub fn tau() -> Self {
        Self::from_parts(1, 1, 2)
    }

    /// τ+1 = (3+√5)/2, the Tutte-bound evaluation point.
    pub fn tau_plus_1() -> Self {
        Self::from_parts(3, 1, 2)
    }

    /// τ−1 = (−1+√5)/2 = 1/τ.
    pub fn tau_minus_1() -> Self {
        Self::from_parts(-1, 1, 2)
    }

    /// τ−2 = (−3+√5)/2.
    pub fn tau_minus_2() -> Self {
        Self::from_parts(-3, 1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a − b√5`.
    pub fn conjugate(&self) -> Self {
        QuadNum {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm `a² − 5b²` (= self · conjugate, a rational).
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - rat(5) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(ChromaError::DivisionByZero);
        }
        let n = self.norm();
        Ok(QuadNum {
            a: &self.a / &n,
            b: -&self.b / &n,
        })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = QuadNum::one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            k >>= 1;
            if k > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Exact sign under the real embedding (√5 > 0): −1, 0, or +1.
    pub fn signum(&self) -> i32 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (s, 0) => s,
            (0, s) => s,
            (1, 1) => 1,
            (-1, -1) => -1,
            // Opposite signs: |a| vs |b|√5 decided by a² vs 5b².
            _ => {
                let lhs = &self.a * &self.a;
                let rhs = rat(5) * &self.b * &self.b;
                let cmp = rat_sign(&(lhs - rhs));
                if cmp == 0 {
                    // a = ±b√5 impossible for rationals unless both zero.
                    0
                } else if cmp > 0 {
                    sa
                } else {
                    sb
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.a) + rat_to_f64(&self.b) * 5.0_f64.sqrt()
    }

    /// Canonical serialization, e.g. `-15/2+7/2*sqrt(5)`; rational values
    /// print without the radical part.
    pub fn canonical_string(&self) -> String {
        let fr = |r: &Rat| {
            if r.denom() == &num_bigint::BigInt::from(1) {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        };
        if self.b.is_zero() {
            return fr(&self.a);
        }
        let b_abs = self.b.abs();
        let b_part = if b_abs.is_one() {
            "sqrt(5)".to_string()
        } else {
            format!("{}*sqrt(5)", fr(&b_abs))
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                return format!("-{}", b_part);
            }
            return b_part;
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        format!("{}{}{}", fr(&self.a), sign, b_part)
    }
}

fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for &QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: &QuadNum) -> QuadNum {
        QuadNum {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: &QuadNum) -> QuadNum {
        QuadNum {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul for &QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: &QuadNum) -> QuadNum {
        // (a + b√5)(c + d√5) = ac + 5bd + (ad + bc)√5
        QuadNum {
            a: &self.a * &rhs.a + rat(5) * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Div for &QuadNum {
    type Output = QuadNum;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &QuadNum) -> QuadNum {
        self * &rhs.inv().expect("division by zero QuadNum")
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

impl fmt::Debug for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

impl Serialize for QuadNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.canonical_string())
    }
}
