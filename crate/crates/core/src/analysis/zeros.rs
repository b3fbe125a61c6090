//! Chromatic-zero reports: real zeros in the window [q_w, 3), the zero
//! nearest τ+1 (real or conjugate pair), and the κ₃-based predictor for the
//! second real zero's accumulation point.


use crate::error::Result;
use crate::exact::{
    all_complex_roots, rat, rat_from_f64, ratio, refine_bracket, sturm_isolate, Poly, Rat,
};
use crate::families::{golden_quadratic, lambda_tc, KappaForm};

/// Float value of τ+1 = (3+√5)/2.
pub const TAU_PLUS_1: f64 = 2.618033988749895;

/// q_w = 2.546602…, the unique real root of λ_TC (left end of the real-zero
/// window for planar triangulations).
pub fn q_w() -> f64 {
    let lam = lambda_tc();
    let ivs = sturm_isolate(&lam, &rat(2), &rat(3));
    let (a, b) = refine_bracket(&lam, &ivs[0].lo, &ivs[0].hi, &ratio(1, 1_000_000_000_000))
        .expect("simple root");
    (crate::exact::rat_to_f64(&a) + crate::exact::rat_to_f64(&b)) / 2.0
}

/// Rational approximation of τ+1 to within `tol`, by bisecting q²−3q+1.
pub fn tau_plus_1_rat(tol: &Rat) -> Rat {
    let g = golden_quadratic();
    let (a, b) = refine_bracket(&g, &ratio(5, 2), &rat(3), tol).expect("τ+1 bracket");
    (&a + &b) / rat(2)
}

/// The zero of P nearest to τ+1.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub enum NearestZero {
    Real(f64),
    ComplexPair { re: f64, im: f64 },
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ZeroReport {
    pub n: i64,
    /// Zero nearest τ+1 (a conjugate pair when no real zero is nearer).
    pub q_z: NearestZero,
    /// Distance data: q_z − (τ+1) for a real zero, modulus distance for a pair.
    pub q_z_offset: f64,
    /// The other real zero in [q_w, 3), when one exists (the largest).
    pub q_z_prime: Option<f64>,
    /// Every real zero of P (refined), including the integer ones.
    pub all_real_zeros: Vec<f64>,
    /// Real zeros inside [q_w, 3).
    pub window_real_zeros: Vec<f64>,
}

const REFINE_TOL: f64 = 1e-11;

/// Full zero analysis of a chromatic polynomial with n vertices.
pub fn zero_report(p: &Poly, n: i64) -> Result<ZeroReport> {
    // Deflate the structural integer roots 0..3 so Sturm and Aberth work on
    // the interesting part.
    let mut rest = p.clone();
    let mut all_real: Vec<f64> = vec![];
    for k in 0..=3i64 {
        let lin = Poly::linear(-k);
        let mult = rest.multiplicity_of(&lin);
        for _ in 0..mult {
            all_real.push(k as f64);
            rest = rest.exact_div(&lin).unwrap();
        }
    }

    let mut window: Vec<f64> = vec![];
    let mut real_refined: Vec<f64> = vec![];
    if !rest.is_zero() && rest.degree() >= 1 {
        let bound = rest.cauchy_bound();
        let ivs = sturm_isolate(&rest, &(-&bound), &bound);
        let tol = rat_from_f64(REFINE_TOL);
        for iv in &ivs {
            let sf = if iv.multiplicity % 2 == 0 {
                rest.square_free_part()
            } else {
                rest.clone()
            };
            let (a, b) = refine_bracket(&sf, &iv.lo, &iv.hi, &tol)?;
            let x = (crate::exact::rat_to_f64(&a) + crate::exact::rat_to_f64(&b)) / 2.0;
            real_refined.push(x);
            if in_window(&rest, &a, &b) {
                window.push(x);
            }
        }
    }
    all_real.extend(real_refined.iter().copied());
    all_real.sort_by(|a, b| a.partial_cmp(b).unwrap());
    window.sort_by(|a, b| a.partial_cmp(b).unwrap());

    // Complex zeros of the deflated part, for the nearest-to-τ+1 decision.
    let complex: Vec<(f64, f64)> = if !rest.is_zero() && rest.degree() >= 1 {
        all_complex_roots(&rest)?
            .iter()
            .filter(|r| r.im > 1e-7)
            .map(|r| (r.re, r.im))
            .collect()
    } else {
        vec![]
    };

    let nearest_real = all_real
        .iter()
        .map(|&x| (x, (x - TAU_PLUS_1).abs()))
        .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
    let nearest_cplx = complex
        .iter()
        .map(|&(re, im)| (re, im, ((re - TAU_PLUS_1).powi(2) + im * im).sqrt()))
        .min_by(|a, b| a.2.partial_cmp(&b.2).unwrap());

    let (q_z, q_z_offset) = match (nearest_real, nearest_cplx) {
        (Some((x, dr)), Some((re, im, dc))) => {
            if dc < dr {
                (NearestZero::ComplexPair { re, im }, dc)
            } else {
                (NearestZero::Real(x), x - TAU_PLUS_1)
            }
        }
        (Some((x, _)), None) => (NearestZero::Real(x), x - TAU_PLUS_1),
        (None, Some((re, im, dc))) => (NearestZero::ComplexPair { re, im }, dc),
        (None, None) => (NearestZero::Real(f64::NAN), f64::NAN),
    };

    // the other window zero, farthest-right convention
    let q_z_prime = match &q_z {
        NearestZero::Real(x) => window
            .iter()
            .rev()
            .find(|&&w| (w - x).abs() > 10.0 * REFINE_TOL)
            .copied(),
        NearestZero::ComplexPair { .. } => window.last().copied(),
    };

    Ok(ZeroReport {
        n,
        q_z,
        q_z_offset,
        q_z_prime,
        all_real_zeros: all_real,
        window_real_zeros: window,
    })
}

/// Exact membership of an isolated root in [q_w, 3). The bracket `(a, b)`
/// isolates a root of `p`; q_w comparisons ride on the sign of λ_TC (which
/// is strictly increasing), with the root-equals-q_w case decided by
/// divisibility.
fn in_window(p: &Poly, a: &Rat, b: &Rat) -> bool {
    use crate::exact::sturm::poly_sign_at;
    let lam = lambda_tc();
    let three = rat(3);
    let mut a = a.clone();
    let mut b = b.clone();
    if a == b {
        // exact rational root
        return poly_sign_at(&lam, &a) >= 0 && a < three;
    }
    // λ_TC | p ⟺ q_w is a root of p (λ_TC is irreducible over Q)
    let shares_qw = lam.divides(p);
    loop {
        if b <= three && poly_sign_at(&lam, &a) > 0 {
            // root ≥ q_w; it is < 3 unless it sits exactly at the endpoint
            if b < three || poly_sign_at(p, &three) != 0 {
                return true;
            }
            // p(3) = 0 and 3 ∈ (a, b]: the isolated root is 3 itself
            return false;
        }
        if poly_sign_at(&lam, &b) < 0 || a >= three {
            return false;
        }
        if shares_qw && poly_sign_at(&lam, &a) < 0 && poly_sign_at(&lam, &b) > 0 {
            // this isolated root can only be q_w itself
            return true;
        }
        // refine by bisection on p's sign change
        let mid = (&a + &b) / rat(2);
        let sm = poly_sign_at(p, &mid);
        if sm == 0 {
            return poly_sign_at(&lam, &mid) >= 0 && mid < three;
        }
        if sm == poly_sign_at(p, &a) {
            a = mid;
        } else {
            b = mid;
        }
    }
}

/// Real zeros of κ₃ inside [q_w, 3): the accumulation points of the extra
/// real zeros besides the one converging to τ+1. Returns the smallest if
/// several exist.
pub fn second_zero_predictor(k: &KappaForm) -> Option<f64> {
    // peel off roots at exactly 3 (the window is open there)
    let mut k3 = k.kappa3.clone();
    let lin3 = Poly::linear(-3);
    while let Some(d) = k3.exact_div(&lin3) {
        k3 = d;
    }
    let k3 = &k3;
    if k3.is_zero() || k3.degree() == 0 {
        return None;
    }
    let bound = k3.cauchy_bound();
    let ivs = sturm_isolate(k3, &(-&bound), &bound);
    let tol = rat_from_f64(1e-10);
    let mut found: Vec<f64> = vec![];
    for iv in &ivs {
        let sf = if iv.multiplicity % 2 == 0 {
            k3.square_free_part()
        } else {
            k3.clone()
        };
        let (a, b) = refine_bracket(&sf, &iv.lo, &iv.hi, &tol).ok()?;
        if in_window(k3, &a, &b) {
            found.push((crate::exact::rat_to_f64(&a) + crate::exact::rat_to_f64(&b)) / 2.0);
        }
    }
    found.sort_by(|a, b| a.partial_cmp(b).unwrap());
    found.first().copied()
}

/// High-precision bracket of the real zero of P nearest τ+1, for convergence
/// studies at large m: isolates within [q_w, 3), picks the nearest, and
/// refines to `tol`. Returns `None` when the window holds no real zero.
pub fn nearest_window_zero_bracket(p: &Poly, tol: &Rat) -> Option<(Rat, Rat)> {
    let mut rest = p.clone();
    for k in 0..=3i64 {
        let lin = Poly::linear(-k);
        while let Some(d) = rest.exact_div(&lin) {
            rest = d;
            if rest.degree() == 0 {
                return None;
            }
        }
    }
    // window bounds: a rational just below q_w works since window filtering
    // is exact afterwards
    let lo = ratio(25, 10);
    let hi = rat(3);
    let ivs = sturm_isolate(&rest, &lo, &hi);
    let mut best: Option<(Rat, Rat, f64)> = None;
    for iv in &ivs {
        if iv.multiplicity % 2 == 0 {
            continue;
        }
        if !in_window(&rest, &iv.lo, &iv.hi) {
            continue;
        }
        let (a, b) = refine_bracket(&rest, &iv.lo, &iv.hi, tol).ok()?;
        let mid = (crate::exact::rat_to_f64(&a) + crate::exact::rat_to_f64(&b)) / 2.0;
        let d = (mid - TAU_PLUS_1).abs();
        if best.as_ref().is_none_or(|(_, _, bd)| d < *bd) {
            best = Some((a, b, d));
        }
    }
    best.map(|(a, b, _)| (a, b))
}

/// Offsets q_z(m) − (τ+1) of the real zero nearest τ+1, for m from the
/// family minimum up to `m_max`. Members without a window zero (the smallest
/// ones) are skipped.
///
/// Small m uses full Sturm isolation of the window. Once the offset is known
/// to be tiny (well separated from any other window zero), each next zero is
/// bracketed by exact sign evaluation on [τ+1 − w, τ+1 + w] with
/// w = 3·|previous offset| and refined by bisection — the signs at the
/// bracket ends certify the root's presence exactly.
pub fn tau1_offset_sequence(
    f: &crate::families::StructuredForm,
    m_max: i64,
) -> Result<Vec<(i64, f64)>> {
    use crate::exact::sturm::poly_sign_at;
    const SWITCH_ABS: f64 = 2e-3;
    let tau1 = tau_plus_1_rat(&rat_from_f64(1e-26));
    let tol = rat_from_f64(1e-17);
    let mut out: Vec<(i64, f64)> = vec![];
    let mut prev_tiny: Option<f64> = None;
    for m in f.m_min[0]..=m_max {
        let p = f.evaluate(&[m])?;
        let off = match prev_tiny {
            Some(w0) => {
                let w = rat_from_f64(3.0 * w0.abs());
                let a = &tau1 - &w;
                let b = &tau1 + &w;
                let sa = poly_sign_at(&p, &a);
                let sb = poly_sign_at(&p, &b);
                if sa == 0 || sb == 0 || sa == sb {
                    // bracket assumption failed; fall back to isolation
                    match nearest_window_zero_bracket(&p, &tol) {
                        Some((a, b)) => bracket_offset(&a, &b, &tau1),
                        None => continue,
                    }
                } else {
                    let (a, b) = refine_bracket(&p, &a, &b, &tol)?;
                    bracket_offset(&a, &b, &tau1)
                }
            }
            None => match nearest_window_zero_bracket(&p, &tol) {
                Some((a, b)) => bracket_offset(&a, &b, &tau1),
                None => continue,
            },
        };
        if off.abs() < SWITCH_ABS {
            prev_tiny = Some(off);
        }
        out.push((m, off));
    }
    Ok(out)
}

fn bracket_offset(a: &Rat, b: &Rat, tau1: &Rat) -> f64 {
    let mid = (a + b) / rat(2);
    crate::exact::rat_to_f64(&(&mid - tau1))
}
