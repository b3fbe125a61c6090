//! Ground-state degeneracy per vertex of the zero-temperature Potts
//! antiferromagnet: W(q) per family, with the order-of-limits convention
//! made explicit for 3 < q < 4.

use crate::error::{ChromaError, Result};
use crate::exact::{rat, rat_from_f64, refine_bracket, sturm_isolate, Poly};
use crate::families::{genfunc::FCubic, lambda_i, lambda_tc, FamilySpec};

/// Order-of-limits convention for W at special q values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// q → q_s after n → ∞; valid down to q > 3 for the λ-basis families.
    Qn,
    /// The commuting region (default): q ≥ 4, or q ≥ 3 for χ=3 families,
    /// where both limit orders agree.
    Commuting,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct EntropyReport {
    pub family: String,
    pub q: f64,
    pub w: f64,
    /// S₀ = k_B ln W > 0 ⟺ W > 1.
    pub s0_positive: bool,
    /// Where the locus meets the real axis, when the family has one:
    /// 3 for the three-term families, τ+2 for the cubic-λ family.
    pub q_c: Option<f64>,
}

fn tau_plus_2() -> f64 {
    2.5 + 0.5 * 5.0_f64.sqrt()
}

/// Minimum admissible q per family and convention.
fn domain_min(spec: FamilySpec, conv: Convention) -> f64 {
    match (spec, conv) {
        (FamilySpec::F, _) => tau_plus_2(),
        (FamilySpec::Tc, _) => 3.0,
        (_, Convention::Commuting) => 4.0,
        (_, Convention::Qn) => 3.0,
    }
}

/// W(family, q). Errors with `OutsideDomain` below the convention threshold.
pub fn w_function(spec: FamilySpec, q: f64, conv: Convention) -> Result<EntropyReport> {
    let min = domain_min(spec, conv);
    if q < min - 1e-12 {
        return Err(ChromaError::OutsideDomain {
            family: spec.label(),
            q,
            min,
        });
    }
    let (w, q_c) = match spec {
        FamilySpec::R => (q - 3.0, None),
        FamilySpec::Tc => (lambda_tc().eval_f64(q).max(0.0).powf(1.0 / 3.0), None),
        FamilySpec::Icosa => {
            let v = lambda_i().eval_f64(q);
            if v < 0.0 {
                return Err(ChromaError::OutsideDomain {
                    family: spec.label(),
                    q,
                    min: 3.222458,
                });
            }
            (v.powf(1.0 / 9.0), None)
        }
        FamilySpec::F => {
            let lam1 = FCubic::ordered_roots_at(q)[0];
            (lam1.re, Some(tau_plus_2()))
        }
        FamilySpec::S | FamilySpec::SFixed(_) | FamilySpec::SDiag => {
            let v = (q - 2.0) * (q - 3.0);
            if v < 0.0 {
                return Err(ChromaError::OutsideDomain {
                    family: spec.label(),
                    q,
                    min: 3.0,
                });
            }
            (v.sqrt(), Some(3.0))
        }
        // every three-term λ-basis family: W = q − 2
        _ => (q - 2.0, Some(3.0)),
    };
    Ok(EntropyReport {
        family: spec.label(),
        q,
        w,
        s0_positive: w > 1.0,
        q_c,
    })
}

/// Where a λ polynomial crosses the value 1 inside (lo, hi): the S₀ > 0
/// threshold for single-power families. Exact isolation on λ − 1.
pub fn lambda_crossing_of_one(lam: &Poly, lo: f64, hi: f64) -> Option<f64> {
    let shifted = lam - &Poly::one();
    let (lo_r, hi_r) = (rat_from_f64(lo), rat_from_f64(hi));
    let ivs = sturm_isolate(&shifted, &lo_r, &hi_r);
    let iv = ivs.first()?;
    let tol = rat_from_f64(1e-10);
    let (a, b) = refine_bracket(&shifted, &iv.lo, &iv.hi, &tol).ok()?;
    Some((crate::exact::rat_to_f64(&a) + crate::exact::rat_to_f64(&b)) / 2.0)
}

/// λ_I's largest real zero (upper edge of its negative stretch) — the W
/// domain edge for the iterated icosahedra.
pub fn lambda_i_positive_from() -> f64 {
    let lam = lambda_i();
    let ivs = sturm_isolate(&lam, &rat(3), &rat(4));
    let iv = ivs.last().expect("λ_I has a zero in (3,4)");
    let tol = rat_from_f64(1e-10);
    let (a, b) = refine_bracket(&lam, &iv.lo, &iv.hi, &tol).expect("simple root");
    (crate::exact::rat_to_f64(&a) + crate::exact::rat_to_f64(&b)) / 2.0
}
