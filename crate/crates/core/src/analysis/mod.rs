//! Tutte-bound ratios and their limits, the a-constant, chromatic-zero
//! reports, the asymptotic zero-locus classifier, and ground-state
//! degeneracy evaluators.

pub mod entropy;
pub mod locus;
pub mod zeros;

pub use entropy::{w_function, Convention, EntropyReport};
pub use locus::{classify_region, classify_region_exact, locus_boundary_sample, RegionTag};
pub use zeros::{q_w, second_zero_predictor, zero_report, NearestZero, ZeroReport};

use crate::error::{ChromaError, Result};
use crate::exact::{Poly, QuadNum};
use crate::families::form::StructuredForm;
use crate::families::{genfunc::FCubic, FamilySpec};

/// Exact evaluation of a chromatic polynomial against the Tutte upper bound
/// `U(n) = (τ−1)^{n−5}` at q = τ+1.
#[derive(Clone, Debug)]
pub struct RatioReport {
    pub n: i64,
    pub p_at_tau1: QuadNum,
    pub bound: QuadNum,
    pub r_exact: QuadNum,
    pub r_float: f64,
}

/// r(G) = |P(G, τ+1)| / (τ−1)^{n−5}, exact in Q(√5).
/// `BoundViolated` means the input was not a planar-triangulation chromatic
/// polynomial (or was transcribed wrongly).
pub fn tutte_ratio(p: &Poly, n: i64) -> Result<RatioReport> {
    let value = p.eval_quad(&QuadNum::tau_plus_1());
    tutte_ratio_from_value(value, n)
}

/// Same, starting from an already-computed exact value P(τ+1).
pub fn tutte_ratio_from_value(value: QuadNum, n: i64) -> Result<RatioReport> {
    let bound = QuadNum::tau_minus_1().pow(n - 5).expect("τ−1 invertible");
    let r_exact = &value.abs() / &bound;
    let r_float = r_exact.to_f64();
    if r_float > 1.0 + 1e-12 {
        return Err(ChromaError::BoundViolated(r_float));
    }
    Ok(RatioReport {
        n,
        p_at_tau1: value,
        bound,
        r_exact,
        r_float,
    })
}

/// Which parameters run to infinity when taking a ratio limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LimitDir {
    /// Every parameter → ∞.
    AllInfinite,
    /// One axis → ∞ with the rest held at the given values (listed in axis
    /// order, skipping the infinite one).
    AxisInfinite { axis: usize, fixed: Vec<i64> },
}

/// Limit data for r(G_m) as parameters grow.
#[derive(Clone, Debug)]
pub struct LimitReport {
    pub r_inf: QuadNum,
    pub a_const: f64,
    /// |λ_dom(τ+1)| over terms with nonvanishing coefficient.
    pub lambda_dom_at_tau1: QuadNum,
}

/// Closed-form limit of the Tutte ratio, exact in Q(√5).
///
/// Terms whose λ-product grows exactly like the bound survive; terms with
/// any index whose coefficient vanishes at τ+1 drop out; everything else
/// decays. A surviving growth factor above the bound would violate the
/// Tutte bound and is reported as such.
pub fn ratio_limit(f: &StructuredForm, dir: &LimitDir) -> Result<LimitReport> {
    let tau1 = QuadNum::tau_plus_1();
    let tm1 = QuadNum::tau_minus_1();
    let (infinite, fixed_vals): (Vec<usize>, Vec<(usize, i64)>) = match dir {
        LimitDir::AllInfinite => ((0..f.p).collect(), vec![]),
        LimitDir::AxisInfinite { axis, fixed } => {
            if *axis >= f.p || fixed.len() != f.p - 1 {
                return Err(ChromaError::BadParameter(
                    "axis/fixed mismatch for ratio limit".into(),
                ));
            }
            let mut fv = vec![];
            let mut it = fixed.iter();
            for l in 0..f.p {
                if l != *axis {
                    fv.push((l, *it.next().unwrap()));
                }
            }
            (vec![*axis], fv)
        }
    };

    let lam_at: Vec<QuadNum> = f.basis.iter().map(|l| l.eval_quad(&tau1)).collect();
    let b = f.basis.len();
    let mut sum = QuadNum::zero();
    let mut idx = vec![0usize; f.p];
    loop {
        let c = f.coeff(&idx);
        if !c.is_zero() {
            let cv = c
                .eval_quad(&tau1)
                .ok_or(ChromaError::DivisionByZero)?;
            if !cv.is_zero() {
                // growth of this term relative to the bound on infinite axes
                let mut grows = true; // |g| == 1 exactly
                let mut decays = false;
                for &l in &infinite {
                    let g = &lam_at[idx[l]].abs() / &tm1.pow(f.alpha[l]).unwrap();
                    let cmp = (&g - &QuadNum::one()).signum();
                    if cmp > 0 {
                        return Err(ChromaError::BoundViolated(f64::INFINITY));
                    }
                    if cmp < 0 {
                        decays = true;
                    }
                    grows &= cmp == 0;
                }
                if grows && !decays {
                    let mut term = cv;
                    for &(l, m) in &fixed_vals {
                        term = &term * &lam_at[idx[l]].pow(m).map_err(|_| ChromaError::DivisionByZero)?;
                    }
                    sum = &sum + &term;
                }
            }
        }
        let mut l = f.p;
        let mut done = false;
        loop {
            if l == 0 {
                done = true;
                break;
            }
            l -= 1;
            idx[l] += 1;
            if idx[l] < b {
                break;
            }
            idx[l] = 0;
        }
        if done {
            break;
        }
    }

    // prefactor (τ−1)^{5 − β − Σ_fixed α m}
    let mut exp = 5 - f.beta;
    for &(l, m) in &fixed_vals {
        exp -= f.alpha[l] * m;
    }
    let r_inf = &tm1.pow(exp).unwrap() * &sum.abs();

    let lambda_dom = dominant_lambda_at_tau1(f)?;
    let alpha: i64 = f.alpha.iter().sum::<i64>() / f.alpha.len() as i64;
    let a_const = a_from_lambda(&lambda_dom, alpha_for(f, alpha));
    Ok(LimitReport {
        r_inf,
        a_const,
        lambda_dom_at_tau1: lambda_dom,
    })
}

fn alpha_for(f: &StructuredForm, fallback: i64) -> i64 {
    if f.p == 1 {
        f.alpha[0]
    } else {
        fallback
    }
}

fn a_from_lambda(lam_abs: &QuadNum, alpha: i64) -> f64 {
    let tm1 = QuadNum::tau_minus_1().to_f64();
    lam_abs.to_f64().powf(1.0 / alpha as f64) / tm1
}

/// |λ_dom(τ+1)| over basis entries whose coefficient does not vanish at τ+1
/// (p = 1 forms; diagonalize p = 2 first).
fn dominant_lambda_at_tau1(f: &StructuredForm) -> Result<QuadNum> {
    let g;
    let form = if f.is_standard_p2() {
        g = f.diagonalize(format!("{}-diag", f.name), f.chi_rule)?;
        &g
    } else {
        f
    };
    let tau1 = QuadNum::tau_plus_1();
    let mut best: Option<QuadNum> = None;
    for (j, lam) in form.basis.iter().enumerate() {
        // For p = 1 the coefficient index is just j.
        let c = &form.coeffs[j];
        if c.is_zero() {
            continue;
        }
        let cv = c.eval_quad(&tau1).ok_or(ChromaError::DivisionByZero)?;
        if cv.is_zero() {
            continue;
        }
        let mag = lam.eval_quad(&tau1).abs();
        if best.as_ref().is_none_or(|b| (&mag - b).signum() > 0) {
            best = Some(mag);
        }
    }
    best.ok_or_else(|| ChromaError::NotThisForm("no surviving λ at τ+1".into()))
}

/// The a-constant `|λ_dom(τ+1)|^{1/α} / (τ−1)` of a λ-basis family.
pub fn a_constant(f: &StructuredForm) -> Result<f64> {
    let lam = dominant_lambda_at_tau1(f)?;
    let alpha = if f.p == 1 {
        f.alpha[0]
    } else {
        f.alpha.iter().sum()
    };
    Ok(a_from_lambda(&lam, alpha))
}

/// The a-constant of the cubic-λ family: its dominant λ at τ+1 with
/// nonvanishing coefficient is the complex pair of magnitude
/// √(√5 − 2) = 0.485868…, and α = 1.
pub fn a_constant_f() -> f64 {
    let tau1 = 0.5 * (3.0 + 5.0_f64.sqrt());
    let roots = FCubic::roots_at(tau1);
    // exclude the −1 root (its coefficient vanishes at τ+1)
    let mag = roots
        .iter()
        .filter(|r| (r.re + 1.0).abs() > 1e-6 || r.im.abs() > 1e-6)
        .map(|r| r.norm())
        .fold(0.0, f64::max);
    mag / (0.5 * (-1.0 + 5.0_f64.sqrt()))
}

/// Convenience: the exact ratio of a family member.
pub fn family_ratio(spec: FamilySpec, m: &[i64]) -> Result<RatioReport> {
    let f = crate::families::family_form(spec)?;
    let n = f.n_of(m);
    let v = f.evaluate_at_quad(m, &QuadNum::tau_plus_1())?;
    tutte_ratio_from_value(v, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::families::family_form;

    #[test]
    fn triangle_saturates_the_bound() {
        let r = tutte_ratio(&Poly::falling_factorial(3), 3).unwrap();
        assert_eq!(r.r_exact, QuadNum::one());
        assert_eq!(r.r_float, 1.0);
    }

    #[test]
    fn d_family_ratios() {
        // r(D_{0,0}) = 0.5836, r(D_{1,2}) = 0.3769 (printed to 4 decimals)
        let r00 = family_ratio(FamilySpec::D, &[0, 0]).unwrap();
        assert!((r00.r_float - 0.5836).abs() < 5e-5, "{}", r00.r_float);
        let r12 = family_ratio(FamilySpec::D, &[1, 2]).unwrap();
        assert!((r12.r_float - 0.3769).abs() < 5e-5, "{}", r12.r_float);
    }

    #[test]
    fn limit_values_match_closed_forms() {
        let b = family_form(FamilySpec::B).unwrap();
        let lim = ratio_limit(&b, &LimitDir::AllInfinite).unwrap();
        // r(B_∞) = (−1+√5)/2
        assert_eq!(lim.r_inf, QuadNum::from_parts(-1, 1, 2));
        assert!((lim.a_const - 1.0).abs() < 1e-12);

        let h = family_form(FamilySpec::H).unwrap();
        let lim = ratio_limit(&h, &LimitDir::AllInfinite).unwrap();
        // r(H_∞) = (7−3√5)/2
        assert_eq!(lim.r_inf, QuadNum::from_parts(7, -3, 2));

        let l = family_form(FamilySpec::L).unwrap();
        let lim = ratio_limit(&l, &LimitDir::AllInfinite).unwrap();
        // r(L_∞) = −2+√5
        assert_eq!(lim.r_inf, QuadNum::from_parts(-2, 1, 1));

        let d = family_form(FamilySpec::D).unwrap();
        let lim = ratio_limit(&d, &LimitDir::AllInfinite).unwrap();
        // r(D_{∞,∞}) = (3−√5)/2
        assert_eq!(lim.r_inf, QuadNum::from_parts(3, -1, 2));

        // r(D_{∞,0}) = −4+2√5, r(D_{0,∞}) = −13+6√5
        let lim = ratio_limit(&d, &LimitDir::AxisInfinite { axis: 0, fixed: vec![0] }).unwrap();
        assert_eq!(lim.r_inf, QuadNum::from_parts(-4, 2, 1));
        let lim = ratio_limit(&d, &LimitDir::AxisInfinite { axis: 1, fixed: vec![0] }).unwrap();
        assert_eq!(lim.r_inf, QuadNum::from_parts(-13, 6, 1));

        // r(D_{∞,k+2}) = r(D_{k,∞})
        for k in 0..=4 {
            let a = ratio_limit(&d, &LimitDir::AxisInfinite { axis: 0, fixed: vec![k + 2] }).unwrap();
            let b = ratio_limit(&d, &LimitDir::AxisInfinite { axis: 1, fixed: vec![k] }).unwrap();
            assert_eq!(a.r_inf, b.r_inf, "rdrel at k={k}");
        }

        // S: the joint limit vanishes (no surviving (1,1) term); a single-axis
        // limit leaves the c12 term, (√5−2)|x|^{m_fixed}
        let s = family_form(FamilySpec::S).unwrap();
        let lim = ratio_limit(&s, &LimitDir::AllInfinite).unwrap();
        assert!(lim.r_inf.is_zero());
        let lim = ratio_limit(&s, &LimitDir::AxisInfinite { axis: 0, fixed: vec![3] }).unwrap();
        assert_eq!(lim.r_inf, QuadNum::from_parts(9, -4, 1));
        let lim = ratio_limit(&s, &LimitDir::AxisInfinite { axis: 0, fixed: vec![0] }).unwrap();
        assert_eq!(lim.r_inf, QuadNum::from_parts(-2, 1, 1));
    }

    #[test]
    fn a_constants() {
        // a(TC) = (3−√5)^{1/3} ≈ 0.914
        let tc = family_form(FamilySpec::Tc).unwrap();
        let a = a_constant(&tc).unwrap();
        assert!((a - (3.0 - 5.0_f64.sqrt()).powf(1.0 / 3.0)).abs() < 1e-12);
        assert!((a - 0.914).abs() < 5e-4);
        // a = 1 for the three-term families
        for spec in [FamilySpec::B, FamilySpec::H, FamilySpec::L] {
            let f = family_form(spec).unwrap();
            assert!((a_constant(&f).unwrap() - 1.0).abs() < 1e-12);
        }
        // a(I) = [(−315+141√5)/2]^{1/9} ≈ 0.8055
        let i = family_form(FamilySpec::Icosa).unwrap();
        let a = a_constant(&i).unwrap();
        assert!((a - 0.8055).abs() < 5e-5, "{a}");
        // a(R) = (−1+√5)/2
        let r = family_form(FamilySpec::R).unwrap();
        let a = a_constant(&r).unwrap();
        assert!((a - 0.618034).abs() < 1e-6);
        // a(F) = 0.786151
        assert!((a_constant_f() - 0.786151).abs() < 1e-5);
    }

    #[test]
    fn ratio_decay_single_power() {
        // r(TC_m) decreases like a^n
        let tc = family_form(FamilySpec::Tc).unwrap();
        let r: Vec<f64> = (1..=5)
            .map(|m| family_ratio(FamilySpec::Tc, &[m]).unwrap().r_float)
            .collect();
        for w in r.windows(2) {
            assert!(w[1] < w[0]);
        }
        let lim = ratio_limit(&tc, &LimitDir::AllInfinite).unwrap();
        assert!(lim.r_inf.is_zero());
        assert!(lim.a_const < 1.0);
    }

    #[test]
    fn bound_violation_detected() {
        // 2·P(K_3) at n = 3 exceeds the bound
        let p = Poly::falling_factorial(3).scale(&rat(2));
        assert!(matches!(
            tutte_ratio(&p, 3),
            Err(ChromaError::BoundViolated(_))
        ));
    }

    #[test]
    fn l_ratio_closed_form() {
        // r(L_m) = (−2+√5)[1 + 2τ((1−√5)/2)^m] exactly (the κ_L tensor forces
        // the 2τ; see the L zero table cross-check in the zeros module)
        let x = QuadNum::from_parts(1, -1, 2);
        let two_tau = QuadNum::from_parts(1, 1, 1);
        for m in 3..=10 {
            let r = family_ratio(FamilySpec::L, &[m]).unwrap();
            let expect = &QuadNum::from_parts(-2, 1, 1)
                * &(&QuadNum::one() + &(&two_tau * &x.pow(m).unwrap()));
            assert_eq!(r.r_exact, expect.abs(), "m = {m}");
        }
        // and P(L_m) coincides with P(S_{m−2,0}) — the κ's are shared
        let l = family_form(FamilySpec::L).unwrap();
        let s0 = family_form(FamilySpec::SFixed(0)).unwrap();
        for m in 3..=8 {
            assert_eq!(l.evaluate(&[m]).unwrap(), s0.evaluate(&[m]).unwrap());
        }
    }
}
