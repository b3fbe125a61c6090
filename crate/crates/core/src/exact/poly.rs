//! Dense univariate polynomials in `q` over arbitrary-precision rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::quad::QuadNum;
use super::{rat, rat_to_f64, Rat};

/// Dense polynomial; `c[i]` is the coefficient of `q^i`.
/// Invariant: no trailing zero coefficients (the zero polynomial is `c = []`).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    c: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: vec![] }
    }

    pub fn one() -> Self {
        Poly { c: vec![rat(1)] }
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Poly {
            c: vec![rat(0), rat(1)],
        }
    }

    pub fn constant(a: Rat) -> Self {
        Self::from_coeffs(vec![a])
    }

    pub fn const_int(a: i64) -> Self {
        Self::constant(rat(a))
    }

    /// Coefficients in ascending order of power.
    pub fn from_coeffs(c: Vec<Rat>) -> Self {
        let mut p = Poly { c };
        p.trim();
        p
    }

    /// Integer coefficients in ascending order: `from_ints(&[-2, 1])` is `q - 2`.
    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| rat(x)).collect())
    }

    /// `q + a` for integer `a` (so `linear(-3)` is `q - 3`).
    pub fn linear(a: i64) -> Self {
        Self::from_ints(&[a, 1])
    }

    /// `∏_{j=0}^{s-1} (q - j)`, the chromatic polynomial of the complete graph K_s.
    pub fn falling_factorial(s: usize) -> Self {
        let mut p = Poly::one();
        for j in 0..s {
            p = &p * &Poly::linear(-(j as i64));
        }
        p
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports 0 (check `is_zero` first when it matters).
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.c.get(i).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn leading(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(|| rat(0))
    }

    pub fn scale(&self, a: &Rat) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.c.iter().map(|x| x * a).collect())
    }

    /// Multiply by `q^k`.
    pub fn mul_qk(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![rat(0); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = rat(0);
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> Rat {
        self.eval(&rat(x))
    }

    /// Exact Horner evaluation in Q(√5).
    pub fn eval_quad(&self, x: &QuadNum) -> QuadNum {
        let mut acc = QuadNum::zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * x) + &QuadNum::from_rat(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.c.iter().rev() {
            acc = acc * x + rat_to_f64(c);
        }
        acc
    }

    pub fn eval_c64(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.c.iter().rev() {
            acc = acc * x + rat_to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.is_zero() || self.degree() < d.degree() && self.c.len() < d.c.len() {
            return (Poly::zero(), self.clone());
        }
        let mut rem = self.c.clone();
        let dd = d.degree();
        let lead = d.leading();
        let mut quot = vec![rat(0); self.c.len().saturating_sub(dd)];
        while rem.len() >= d.c.len() && !rem.is_empty() {
            let k = rem.len() - d.c.len();
            let f = rem.last().unwrap() / &lead;
            if !f.is_zero() {
                for (i, dc) in d.c.iter().enumerate() {
                    let t = dc * &f;
                    rem[k + i] = &rem[k + i] - t;
                }
                quot[k] = f;
            }
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact quotient, or `None` if the division leaves a remainder.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.exact_div(self).is_some()
    }

    /// Monic gcd (Euclid; degrees here stay small enough that the naive
    /// rational remainder sequence is fine).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.leading();
        self.scale(&(rat(1) / l))
    }

    /// Square-free part `p / gcd(p, p')`, monic.
    pub fn square_free_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Yun's square-free decomposition: returns `(f_i, i)` with
    /// `p = lc · ∏ f_i^i`, the `f_i` monic, square-free, pairwise coprime.
    pub fn square_free_decomposition(&self) -> Vec<(Poly, usize)> {
        let mut out = vec![];
        if self.is_zero() || self.degree() == 0 {
            return out;
        }
        let p = self.monic();
        let dp = p.derivative();
        let mut a = p.gcd(&dp);
        let mut b = p.exact_div(&a).unwrap();
        let mut c = dp.exact_div(&a).unwrap();
        let mut i = 1usize;
        loop {
            let d = &c - &b.derivative();
            if b.degree() == 0 {
                break;
            }
            a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((a.monic(), i));
            }
            b = b.exact_div(&a).unwrap();
            c = d.exact_div(&a).unwrap();
            i += 1;
        }
        out
    }

    /// How many times `factor` divides `self` exactly.
    pub fn multiplicity_of(&self, factor: &Poly) -> usize {
        let mut k = 0;
        let mut p = self.clone();
        while let Some(qt) = p.exact_div(factor) {
            k += 1;
            p = qt;
            if p.is_zero() {
                break;
            }
        }
        k
    }

    /// Clear denominators and content: returns primitive integer coefficients
    /// (ascending) with positive leading coefficient, and the rational scale
    /// `s` such that `self = s · primitive`.
    pub fn primitive_int(&self) -> (Vec<BigInt>, Rat) {
        use num_integer::Integer;
        if self.is_zero() {
            return (vec![], rat(1));
        }
        let mut den = BigInt::one();
        for c in &self.c {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.c.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        let mut prim: Vec<BigInt> = ints.iter().map(|v| v / &content).collect();
        let mut scale = Rat::new(content, den);
        if prim.last().is_some_and(|x| x.is_negative()) {
            for v in prim.iter_mut() {
                *v = -(v.clone());
            }
            scale = -scale;
        }
        (prim, scale)
    }

    /// Cauchy bound: all real roots lie in (-B, B).
    pub fn cauchy_bound(&self) -> Rat {
        if self.is_zero() || self.degree() == 0 {
            return rat(1);
        }
        let lead = self.leading();
        let mut m = rat(0);
        for c in &self.c[..self.c.len() - 1] {
            let t = (c / &lead).abs();
            if t > m {
                m = t;
            }
        }
        m + rat(1)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(c)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_coeffs(c)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.c.iter().map(|x| -x.clone()).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![rat(0); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j] = &c[i + j] + a * b;
            }
        }
        Poly::from_coeffs(c)
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Poly {
    /// Descending powers, e.g. `q^3 - 9q^2 + 29q - 32`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.c.len()).rev() {
            let c = &self.c[i];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{}", fmt_rat(&mag))?;
            }
            match i {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{}", i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
