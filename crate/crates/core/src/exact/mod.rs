//! Exact arithmetic substrate: rationals, Q(√5), dense polynomials,
//! rational functions, and root finding.

pub mod aberth;
pub mod poly;
pub mod quad;
pub mod ratfun;
pub mod sturm;

pub use aberth::{all_complex_roots, all_complex_roots_seeded, ComplexRoot};
pub use poly::Poly;
pub use quad::QuadNum;
pub use ratfun::RatFun;
pub use sturm::{beraha, refine_bracket, refine_root, sturm_isolate, RootInterval};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational, the coefficient type of everything here.
/// `BigRational` keeps itself in lowest terms with a positive denominator,
/// which is exactly the invariant we need.
pub type Rat = BigRational;

/// Shorthand for a small integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Shorthand for the rational n/d.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Lossless f64 → rational conversion (finite inputs only).
pub fn rat_from_f64(x: f64) -> Rat {
    Rat::from_float(x).expect("finite float")
}

pub fn rat_to_f64(x: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        // Fall back to a scaled division for values outside f64 range.
        let s = x.numer().to_string();
        let t = x.denom().to_string();
        let n: f64 = s.parse().unwrap_or(f64::MAX);
        let d: f64 = t.parse().unwrap_or(1.0);
        n / d
    })
}
