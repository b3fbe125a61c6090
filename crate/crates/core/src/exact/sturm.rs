//! Real-root isolation by Sturm sequences over primitive integer
//! polynomials, with multiplicities from square-free decomposition, and
//! sign-change bisection refinement.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::poly::Poly;
use super::{rat, rat_to_f64, Rat};
use crate::error::{ChromaError, Result};

/// An isolating interval `(lo, hi]` containing exactly one distinct real
/// root of the polynomial it was produced for.
#[derive(Clone, Debug, PartialEq)]
pub struct RootInterval {
    pub lo: Rat,
    pub hi: Rat,
    /// Float midpoint, a cheap first approximation of the root.
    pub refined: f64,
    /// Multiplicity of the root in the original (non-square-free) input.
    pub multiplicity: usize,
}

impl RootInterval {
    fn new(lo: Rat, hi: Rat, multiplicity: usize) -> Self {
        let refined = (rat_to_f64(&lo) + rat_to_f64(&hi)) / 2.0;
        RootInterval {
            lo,
            hi,
            refined,
            multiplicity,
        }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }
}

/// Sturm chain over primitive integer polynomials (ascending coefficients).
/// Chain elements are scaled by positive constants only, so sign variations
/// are those of the canonical chain.
pub struct SturmChain {
    seq: Vec<Vec<BigInt>>,
}

fn int_trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
}

fn int_derivative(p: &[BigInt]) -> Vec<BigInt> {
    if p.len() <= 1 {
        return vec![];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

fn int_content(p: &[BigInt]) -> BigInt {
    use num_integer::Integer;
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
    }
    g
}

fn int_primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    int_trim(&mut p);
    if p.is_empty() {
        return p;
    }
    let g = int_content(&p);
    if !g.is_zero() && g != BigInt::from(1) {
        for c in p.iter_mut() {
            *c = &*c / &g;
        }
    }
    p
}

/// Remainder of `lc(b)^s · a` divided by `b` (exact over the integers),
/// sign-corrected as if the multiplier had been `|lc(b)|^s`, so that the
/// result is a positive-constant multiple of the true remainder.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut r: Vec<BigInt> = a.to_vec();
    let mut steps = 0usize;
    while r.len() >= b.len() && !r.is_empty() {
        let dr = r.len() - 1;
        let lead = r.last().unwrap().clone();
        // r <- lb·r − lead·q^(dr−db)·b
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = &r[idx] - &lead * bc;
        }
        int_trim(&mut r);
        steps += 1;
    }
    if lb.is_negative() && steps % 2 == 1 {
        for c in r.iter_mut() {
            *c = -(c.clone());
        }
    }
    r
}

impl SturmChain {
    pub fn build(p: &Poly) -> SturmChain {
        let (ip, _) = p.primitive_int();
        let mut seq = vec![];
        if ip.is_empty() {
            return SturmChain { seq };
        }
        seq.push(int_primitive(ip.clone()));
        let d = int_primitive(int_derivative(&ip));
        if d.is_empty() {
            return SturmChain { seq };
        }
        seq.push(d);
        loop {
            let n = seq.len();
            let rem = pseudo_rem(&seq[n - 2], &seq[n - 1]);
            if rem.is_empty() {
                break;
            }
            let neg: Vec<BigInt> = rem.iter().map(|c| -c.clone()).collect();
            seq.push(int_primitive(neg));
        }
        SturmChain { seq }
    }

    /// Sign of chain element `i` at the rational point `x`, computed exactly
    /// by homogenized integer evaluation.
    fn sign_at(&self, i: usize, x: &Rat) -> i32 {
        int_sign_at(&self.seq[i], x)
    }

    pub fn variations_at(&self, x: &Rat) -> usize {
        let mut v = 0;
        let mut last = 0;
        for i in 0..self.seq.len() {
            let s = self.sign_at(i, x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_in(&self, a: &Rat, b: &Rat) -> usize {
        let va = self.variations_at(a);
        let vb = self.variations_at(b);
        va.saturating_sub(vb)
    }
}

fn int_sign_at(p: &[BigInt], x: &Rat) -> i32 {
    if p.is_empty() {
        return 0;
    }
    let n = x.numer();
    let d = x.denom();
    // sign of p(n/d) = sign of p(n/d)·d^deg = sign of Σ p_i n^i d^(deg−i)
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::from(1);
    for c in p.iter().rev() {
        acc = &acc * n + c * &dpow;
        dpow = &dpow * d;
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact sign of `p(x)` for rational `x`.
pub fn poly_sign_at(p: &Poly, x: &Rat) -> i32 {
    let (ip, scale) = p.primitive_int();
    if ip.is_empty() {
        return 0;
    }
    let s = int_sign_at(&ip, x);
    if scale < rat(0) {
        -s
    } else {
        s
    }
}

/// Distinct real roots of `p` in `(lo, hi]` as disjoint isolating intervals,
/// with multiplicities recovered from the square-free decomposition.
///
/// The count of returned intervals equals the Sturm sign-variation
/// difference of the square-free part at the endpoints.
pub fn sturm_isolate(p: &Poly, lo: &Rat, hi: &Rat) -> Vec<RootInterval> {
    assert!(!p.is_zero(), "sturm_isolate on the zero polynomial");
    assert!(lo < hi);
    if p.degree() == 0 {
        return vec![];
    }
    let factors = p.square_free_decomposition();
    // (interval, index into factors)
    let mut work: Vec<(RootInterval, usize)> = vec![];
    for (fi, (f, mult)) in factors.iter().enumerate() {
        for (a, b) in isolate_squarefree(f, lo, hi) {
            work.push((RootInterval::new(a, b, *mult), fi));
        }
    }
    // Intervals from different (coprime) factors may overlap; shrink them
    // until they are pairwise disjoint.
    let mut changed = true;
    while changed {
        changed = false;
        work.sort_by(|x, y| x.0.lo.cmp(&y.0.lo).then(x.0.hi.cmp(&y.0.hi)));
        for i in 1..work.len() {
            if work[i].0.lo < work[i - 1].0.hi {
                let prev = halve(&factors[work[i - 1].1].0, &work[i - 1].0);
                let cur = halve(&factors[work[i].1].0, &work[i].0);
                work[i - 1].0 = prev;
                work[i].0 = cur;
                changed = true;
            }
        }
    }
    let mut out: Vec<RootInterval> = work.into_iter().map(|(iv, _)| iv).collect();
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// One bisection step on an isolating interval of a square-free factor.
fn halve(f: &Poly, iv: &RootInterval) -> RootInterval {
    let mid = (&iv.lo + &iv.hi) / rat(2);
    let sm = poly_sign_at(f, &mid);
    let shi = poly_sign_at(f, &iv.hi);
    if sm == 0 {
        // the root is exactly mid; collapse around it
        let quarter = (&mid - &iv.lo) / rat(2);
        return RootInterval::new(&mid - &quarter, mid.clone(), iv.multiplicity);
    }
    if shi == 0 || sm != shi {
        RootInterval::new(mid, iv.hi.clone(), iv.multiplicity)
    } else {
        RootInterval::new(iv.lo.clone(), mid, iv.multiplicity)
    }
}

/// Isolating intervals `(a, b]` for a square-free polynomial on `(lo, hi]`.
fn isolate_squarefree(f: &Poly, lo: &Rat, hi: &Rat) -> Vec<(Rat, Rat)> {
    let mut f = f.clone();
    // Roots exactly at `lo` are excluded by half-openness; peel them off so
    // the chain sees clean endpoints.
    while poly_sign_at(&f, lo) == 0 {
        f = f.exact_div(&(&Poly::q() - &Poly::constant(lo.clone()))).unwrap();
    }
    let mut out = vec![];
    let mut root_at_hi = false;
    while poly_sign_at(&f, hi) == 0 {
        f = f.exact_div(&(&Poly::q() - &Poly::constant(hi.clone()))).unwrap();
        root_at_hi = true;
    }
    if f.degree() >= 1 {
        let chain = SturmChain::build(&f);
        let mut stack = vec![(lo.clone(), hi.clone())];
        while let Some((a, b)) = stack.pop() {
            let n = chain.count_in(&a, &b);
            match n {
                0 => {}
                1 => out.push((a, b)),
                _ => {
                    let mid = (&a + &b) / rat(2);
                    stack.push((a, mid.clone()));
                    stack.push((mid, b));
                }
            }
        }
    }
    if root_at_hi {
        // Re-attach the root at the included right endpoint with an interval
        // free of the other roots.
        let mut delta = (hi - lo) / rat(2);
        loop {
            let a = hi - &delta;
            let clear = out.iter().all(|(_, b2)| b2 <= &a);
            if clear && poly_sign_at(&f, &a) != 0 {
                out.push((a, hi.clone()));
                break;
            }
            delta /= rat(2);
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Bisection refinement of an isolated root down to `|hi - lo| < tol`;
/// returns the midpoint. Errors with `NoSignChange` when the interval
/// carries a root of even multiplicity (callers should refine the
/// square-free part instead).
pub fn refine_root(p: &Poly, iv: &RootInterval, tol: f64) -> Result<f64> {
    let tol_rat = super::rat_from_f64(tol.abs().max(1e-300));
    let (a, b) = refine_bracket(p, &iv.lo, &iv.hi, &tol_rat)?;
    Ok((rat_to_f64(&a) + rat_to_f64(&b)) / 2.0)
}

/// Exact-bracket version of `refine_root`: narrows `(lo, hi]` to width
/// below `tol` and returns the rational bracket.
pub fn refine_bracket(p: &Poly, lo: &Rat, hi: &Rat, tol: &Rat) -> Result<(Rat, Rat)> {
    if poly_sign_at(p, hi) == 0 {
        return Ok((hi.clone(), hi.clone()));
    }
    let mut a = lo.clone();
    let mut b = hi.clone();
    let mut sa = poly_sign_at(p, &a);
    let sb = poly_sign_at(p, &b);
    if sa == 0 {
        // root at the open endpoint is excluded; step inside
        let mut step = (&b - &a) / rat(4);
        loop {
            let a2 = &a + &step;
            let s2 = poly_sign_at(p, &a2);
            if s2 != 0 && s2 != sb {
                a = a2;
                sa = s2;
                break;
            }
            if s2 == sb {
                // the root lies in (a, a2]; restart the bracket there
                b = a2;
                step = (&b - &a) / rat(4);
                continue;
            }
            step /= rat(2);
        }
    }
    if sa == sb {
        return Err(ChromaError::NoSignChange);
    }
    while &b - &a >= *tol {
        let mid = (&a + &b) / rat(2);
        let sm = poly_sign_at(p, &mid);
        if sm == 0 {
            return Ok((mid.clone(), mid));
        }
        if sm == sa {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok((a, b))
}

/// The Tutte–Beraha number `q_r = 4 cos²(π/r)`.
pub fn beraha(r: u32) -> f64 {
    assert!(r >= 1, "Beraha index starts at 1");
    let c = (std::f64::consts::PI / r as f64).cos();
    4.0 * c * c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn lam_tc() -> Poly {
        Poly::from_ints(&[-32, 29, -9, 1])
    }

    #[test]
    fn golden_quadratic_roots() {
        // q² − 3q + 1 has roots (3±√5)/2
        let p = Poly::from_ints(&[1, -3, 1]);
        let ivs = sturm_isolate(&p, &rat(0), &rat(3));
        assert_eq!(ivs.len(), 2);
        let r0 = refine_root(&p, &ivs[0], 1e-12).unwrap();
        let r1 = refine_root(&p, &ivs[1], 1e-12).unwrap();
        assert!((r0 - 0.3819660112501051).abs() < 1e-10);
        assert!((r1 - 2.618033988749895).abs() < 1e-10);
    }

    #[test]
    fn cubic_with_integer_roots() {
        // q(q−1)(q−2) on (−1, 3): roots 0, 1, 2
        let p = Poly::falling_factorial(3);
        let ivs = sturm_isolate(&p, &rat(-1), &rat(3));
        assert_eq!(ivs.len(), 3);
        let roots: Vec<f64> = ivs
            .iter()
            .map(|iv| refine_root(&p, iv, 1e-12).unwrap())
            .collect();
        assert!((roots[0] - 0.0).abs() < 1e-10);
        assert!((roots[1] - 1.0).abs() < 1e-10);
        assert!((roots[2] - 2.0).abs() < 1e-10);
    }

    #[test]
    fn lam_tc_root_is_qw() {
        let ivs = sturm_isolate(&lam_tc(), &rat(2), &rat(3));
        assert_eq!(ivs.len(), 1);
        let qw = refine_root(&lam_tc(), &ivs[0], 1e-10).unwrap();
        assert!((qw - 2.546602).abs() < 1e-6, "q_w = {qw}");
    }

    #[test]
    fn multiplicities_and_endpoint_roots() {
        // (q²−2)²(q−2) on (0, 2]: root √2 with multiplicity 2, root 2 at the endpoint
        let p = &Poly::from_ints(&[-2, 0, 1]).pow(2) * &Poly::linear(-2);
        let ivs = sturm_isolate(&p, &rat(0), &rat(2));
        assert_eq!(ivs.len(), 2);
        assert_eq!(ivs[0].multiplicity, 2);
        assert_eq!(ivs[1].multiplicity, 1);
        // refine on the full polynomial fails for the even root
        assert_eq!(refine_root(&p, &ivs[0], 1e-10), Err(ChromaError::NoSignChange));
        // but succeeds on the square-free part
        let sf = p.square_free_part();
        let r = refine_root(&sf, &ivs[0], 1e-10).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-9);
        // the endpoint root is included and refines exactly
        let r2 = refine_root(&p, &ivs[1], 1e-10).unwrap();
        assert!((r2 - 2.0).abs() < 1e-12);
        // roots at the open lower endpoint are excluded
        let ivs2 = sturm_isolate(&p, &rat(2), &rat(3));
        assert!(ivs2.is_empty());
    }

    #[test]
    fn variation_identity() {
        let p = &lam_tc() * &Poly::from_ints(&[1, -3, 1]);
        let chain = SturmChain::build(&p.square_free_part());
        let (a, b) = (rat(0), rat(3));
        let ivs = sturm_isolate(&p, &a, &b);
        assert_eq!(ivs.len(), chain.count_in(&a, &b));
    }

    #[test]
    fn beraha_numbers() {
        assert!((beraha(2) - 0.0).abs() < 1e-12);
        assert!((beraha(5) - 2.618033988749895).abs() < 1e-12);
        assert!((beraha(6) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn exact_bracket_precision() {
        let tol = ratio(1, 1_000_000_000_000i64) * ratio(1, 1_000_000);
        let (a, b) = refine_bracket(&lam_tc(), &rat(2), &rat(3), &tol).unwrap();
        assert!(&b - &a < tol);
    }
}
