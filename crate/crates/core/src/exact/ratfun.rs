//! Rational functions in `q`, the coefficient field for structural fitting
//! and the pole-bearing tensor entries of the two-parameter families.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::Poly;
use super::quad::QuadNum;
use super::Rat;

/// `num / den`, normalized so that gcd(num, den) = 1 and den is monic.
/// Equality is plain field equality of the normalized representation.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut r = RatFun { num, den };
        r.normalize();
        r
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() > 0 {
            self.num = self.num.exact_div(&g).unwrap();
            self.den = self.den.exact_div(&g).unwrap();
        }
        let lead = self.den.leading();
        if !lead.eq(&super::rat(1)) {
            let inv = super::rat(1) / lead;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == 0
    }

    /// The underlying polynomial, if the denominator is trivial.
    pub fn as_poly(&self) -> Option<Poly> {
        if self.is_polynomial() {
            let lead = self.den.leading();
            Some(self.num.scale(&(super::rat(1) / lead)))
        } else {
            None
        }
    }

    /// Exact evaluation; `None` when `x` is a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d == super::rat(0) {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Exact evaluation in Q(√5); `None` at poles.
    pub fn eval_quad(&self, x: &QuadNum) -> Option<QuadNum> {
        let d = self.den.eval_quad(x);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval_quad(x) / &d)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFun {
        RatFun::new(&self.num * p, self.den.clone())
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        RatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        RatFun::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFun::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.as_poly().unwrap())
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
