//! The cubic-λ family: its rational generating function, exact Taylor
//! expansion, the cubic whose roots are the λ's, and partial-fraction
//! coefficients at a fixed q.

use num_complex::Complex64;

use crate::error::{ChromaError, Result};
use crate::exact::{all_complex_roots_seeded, Poly};

/// Rational generating function `Γ(q, x) = N(q,x) / D(q,x)` with
/// `N = a₀ + a₁x + a₂x²`, `D = 1 + b₁x + b₂x² + b₃x³`; the Taylor
/// coefficient of x^m is the chromatic polynomial of the (m+1)-th member.
#[derive(Clone, Debug)]
pub struct GeneratingFunction {
    pub a: [Poly; 3],
    pub b: [Poly; 3],
}

/// The F family's generating function.
pub fn f_generating_function() -> GeneratingFunction {
    let k3 = Poly::falling_factorial(3);
    let l2 = Poly::linear(-3);
    GeneratingFunction {
        a: [
            &k3 * &l2.pow(2),
            &k3 * &Poly::from_ints(&[-5, 2]),
            &(&k3 * &Poly::linear(-2)) * &l2.pow(2),
        ],
        b: [
            -&l2,
            l2.clone(),
            -&(&Poly::linear(-2) * &l2),
        ],
    }
}

/// Exact power-series expansion: returns `P(F₁..F_{m_max}, q)`.
pub fn gf_expand(gf: &GeneratingFunction, m_max: usize) -> Vec<Poly> {
    assert!(m_max >= 1);
    let mut out: Vec<Poly> = Vec::with_capacity(m_max);
    for j in 0..m_max {
        // c_j = a_j − Σ_{k=1..3} b_k c_{j−k},  a_j = 0 for j > 2
        let mut c = if j < 3 { gf.a[j].clone() } else { Poly::zero() };
        for k in 1..=3.min(j) {
            c = &c - &(&gf.b[k - 1] * &out[j - k]);
        }
        out.push(c);
    }
    out
}

/// `R_F = 3(4q³ − 24q² + 76q − 93)`, the radicand polynomial of the cubic's
/// closed-form solution. Its complex zeros are the asymptotic arc endpoints.
pub fn r_f() -> Poly {
    Poly::from_ints(&[-93, 76, -24, 4]).scale(&crate::exact::rat(3))
}

/// The cubic `ξ³ + (3−q)ξ² + (q−3)ξ − (q−2)(q−3) = 0` whose roots are the
/// three λ's of the family, with dominant-root labeling.
pub struct FCubic;

impl FCubic {
    /// Monic cubic coefficients `[c₀, c₁, c₂]` (ascending) at real q.
    pub fn coeffs_at(q: f64) -> [f64; 3] {
        [-(q - 2.0) * (q - 3.0), q - 3.0, 3.0 - q]
    }

    /// All three roots at a real q (unordered).
    pub fn roots_at(q: f64) -> [Complex64; 3] {
        // Closed-form via the depressed cubic and trigonometric/Cardano
        // branches; stable at this small scale.
        let [c0, c1, c2] = Self::coeffs_at(q);
        solve_cubic(c0, c1, c2)
    }

    /// Roots ordered so index 0 is the dominant one: for q > τ+2 the unique
    /// real root of largest magnitude; elsewhere by magnitude-descending with
    /// continuity tracking from q = 4 downward.
    pub fn ordered_roots_at(q: f64) -> [Complex64; 3] {
        let tau2 = 1.5 + 0.5 * 5.0_f64.sqrt() + 1.0; // τ+2
        if q > tau2 {
            let mut r = Self::roots_at(q).to_vec();
            r.sort_by(|a, b| b.norm().partial_cmp(&a.norm()).unwrap());
            [r[0], r[1], r[2]]
        } else {
            // walk down from q0 = 4 in small steps, matching nearest roots
            let mut cur: Vec<Complex64> = {
                let mut r = Self::roots_at(4.0).to_vec();
                r.sort_by(|a, b| b.norm().partial_cmp(&a.norm()).unwrap());
                r
            };
            let steps = 400;
            for s in 1..=steps {
                let qs = 4.0 + (q - 4.0) * s as f64 / steps as f64;
                let next = Self::roots_at(qs);
                let mut used = [false; 3];
                let mut matched = vec![];
                for c in &cur {
                    let mut best = usize::MAX;
                    let mut bd = f64::INFINITY;
                    for (i, n) in next.iter().enumerate() {
                        if !used[i] {
                            let d = (n - c).norm();
                            if d < bd {
                                bd = d;
                                best = i;
                            }
                        }
                    }
                    used[best] = true;
                    matched.push(next[best]);
                }
                cur = matched;
            }
            [cur[0], cur[1], cur[2]]
        }
    }

    /// The dominant root by the closed radical formula, valid for real
    /// q where the radicand is positive (used as a cross-check for q ≳ 3.7).
    pub fn lambda1_radical(q: f64) -> f64 {
        let rf = r_f().eval_f64(q);
        assert!(rf > 0.0, "radical formula needs R_F > 0");
        let s = (4.0 * (q - 3.0) * (2.0 * q * q + 6.0 * q - 9.0 + 3.0 * rf.sqrt())).cbrt();
        s / 6.0 + 2.0 * (q - 3.0) * (q - 6.0) / (3.0 * s) + (q - 3.0) / 3.0
    }
}

fn solve_cubic(c0: f64, c1: f64, c2: f64) -> [Complex64; 3] {
    // ξ³ + c2 ξ² + c1 ξ + c0; depressed: t³ + pt + r with ξ = t − c2/3
    let shift = c2 / 3.0;
    let p = c1 - c2 * c2 / 3.0;
    let r = c0 - c1 * c2 / 3.0 + 2.0 * c2.powi(3) / 27.0;
    let disc = (r / 2.0).powi(2) + (p / 3.0).powi(3);
    let roots: [Complex64; 3] = if disc.abs() < 1e-30 && p.abs() < 1e-15 {
        // triple root
        let t = Complex64::new(0.0, 0.0);
        [t, t, t]
    } else if disc >= 0.0 {
        // one real root, complex pair
        let sq = disc.sqrt();
        let u = cbrt_real(-r / 2.0 + sq);
        let v = cbrt_real(-r / 2.0 - sq);
        let t1 = u + v;
        let re = -t1 / 2.0;
        let im = (u - v) * 3.0_f64.sqrt() / 2.0;
        [
            Complex64::new(t1, 0.0),
            Complex64::new(re, im),
            Complex64::new(re, -im),
        ]
    } else {
        // three real roots (casus irreducibilis)
        let rho = (-(p / 3.0).powi(3)).sqrt();
        let theta = (-r / (2.0 * rho)).clamp(-1.0, 1.0).acos();
        let mag = 2.0 * (-p / 3.0).sqrt();
        [0, 1, 2].map(|k| {
            Complex64::new(
                mag * ((theta + 2.0 * std::f64::consts::PI * k as f64) / 3.0).cos(),
                0.0,
            )
        })
    };
    roots.map(|t| t - shift)
}

fn cbrt_real(x: f64) -> f64 {
    x.cbrt()
}

/// Partial-fraction coefficients at a fixed q: the residues
/// `A_j = (a₀ λ_j² + a₁ λ_j + a₂) / ∏_{k≠j} (λ_j − λ_k)` divided by λ_j, so
/// that `Σ_j c_j λ_j^m = P(F_m, q)` with the member indexing starting at 1
/// (the residues themselves satisfy `Σ A_j λ_j^m = P(F_{m+1}, q)`).
/// Errors with `DegenerateLambdas` when two roots coincide (e.g. q = 3,
/// where all three λ's vanish).
pub fn gf_to_lambda_coeffs(
    gf: &GeneratingFunction,
    lambdas: &[Complex64; 3],
    q: f64,
) -> Result<[Complex64; 3]> {
    let tol = 1e-9 * lambdas.iter().map(|l| l.norm()).fold(1.0, f64::max);
    for i in 0..3 {
        for j in (i + 1)..3 {
            if (lambdas[i] - lambdas[j]).norm() < tol {
                return Err(ChromaError::DegenerateLambdas);
            }
        }
    }
    if lambdas.iter().any(|l| l.norm() < 1e-12) {
        return Err(ChromaError::DegenerateLambdas);
    }
    let a0 = Complex64::new(gf.a[0].eval_f64(q), 0.0);
    let a1 = Complex64::new(gf.a[1].eval_f64(q), 0.0);
    let a2 = Complex64::new(gf.a[2].eval_f64(q), 0.0);
    let mut out = [Complex64::new(0.0, 0.0); 3];
    for j in 0..3 {
        let l = lambdas[j];
        let mut den = l;
        for (k, other) in lambdas.iter().enumerate() {
            if k != j {
                den *= l - other;
            }
        }
        out[j] = (a0 * l * l + a1 * l + a2) / den;
    }
    Ok(out)
}

/// Numeric roots of an exact polynomial, thin wrapper used by consumers
/// verifying the cubic's Vieta identities against them.
pub fn numeric_roots(p: &Poly, seed: u64) -> Result<Vec<Complex64>> {
    Ok(all_complex_roots_seeded(p, seed)?
        .iter()
        .map(|r| r.value())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn k3() -> Poly {
        Poly::falling_factorial(3)
    }

    #[test]
    fn expansion_matches_closed_forms() {
        let gf = f_generating_function();
        let ps = gf_expand(&gf, 6);
        // P(F₁) = q(q−1)(q−2)(q−3)²
        assert_eq!(ps[0], &k3() * &Poly::linear(-3).pow(2));
        // P(F₂) = q(q−1)(q−2)(q³−9q²+29q−32)
        assert_eq!(ps[1], &k3() * &crate::families::lambda_tc());
        // P(F₃) = q(q−1)(q−2)(q−3)(q³−9q²+30q−35)
        assert_eq!(
            ps[2],
            &(&k3() * &Poly::linear(-3)) * &Poly::from_ints(&[-35, 30, -9, 1])
        );
        // P(F₄)
        assert_eq!(
            ps[3],
            &(&k3() * &Poly::linear(-3)) * &Poly::from_ints(&[119, -133, 58, -12, 1])
        );
        // P(F₅)
        assert_eq!(
            ps[4],
            &(&k3() * &Poly::linear(-3)) * &Poly::from_ints(&[-398, 553, -317, 95, -15, 1])
        );
        // P(F₆) has a (q−3)² factor
        assert_eq!(
            ps[5],
            &(&k3() * &Poly::linear(-3).pow(2)) * &Poly::from_ints(&[-447, 591, -327, 96, -15, 1])
        );
    }

    #[test]
    fn vieta_identities_hold() {
        for q in [0.7, 2.2, 3.4, 4.0, 5.5, 7.0] {
            let roots = FCubic::roots_at(q);
            let e1: Complex64 = roots.iter().sum();
            let e3: Complex64 = roots.iter().product();
            let e2 = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2];
            assert!((e1.re - (q - 3.0)).abs() < 1e-9, "e1 at q={q}");
            assert!(e1.im.abs() < 1e-9);
            assert!((e2.re - (q - 3.0)).abs() < 1e-9, "e2 at q={q}");
            assert!((e3.re - (q - 2.0) * (q - 3.0)).abs() < 1e-9, "e3 at q={q}");
        }
    }

    #[test]
    fn radical_formula_cross_check() {
        for q in [3.8, 4.0, 4.5, 5.0, 6.0, 7.5] {
            let dom = FCubic::ordered_roots_at(q)[0];
            let rad = FCubic::lambda1_radical(q);
            assert!(dom.im.abs() < 1e-9);
            assert!(
                (dom.re - rad).abs() < 1e-8,
                "q={q}: numeric {} vs radical {rad}",
                dom.re
            );
        }
    }

    #[test]
    fn tau_plus_one_roots() {
        let tau1 = 0.5 * (3.0 + 5.0_f64.sqrt());
        let roots = FCubic::roots_at(tau1);
        // one root is exactly −1, the other two form a pair of magnitude
        // sqrt(√5 − 2) = 0.485868...
        let minus_one = roots
            .iter()
            .find(|r| (r.re + 1.0).abs() < 1e-9 && r.im.abs() < 1e-9)
            .expect("−1 root");
        let pair: Vec<_> = roots
            .iter()
            .filter(|r| (**r - minus_one).norm() > 1e-6)
            .collect();
        assert_eq!(pair.len(), 2);
        let mag = 0.485867;
        assert!((pair[0].norm() - mag).abs() < 1e-5);
        assert!((pair[1].norm() - mag).abs() < 1e-5);
        // expected pair value (−1+√5 ± i√(18√5−38))/4
        let re = (-1.0 + 5.0_f64.sqrt()) / 4.0;
        let im = (18.0 * 5.0_f64.sqrt() - 38.0).sqrt() / 4.0;
        assert!(pair.iter().any(|r| (r.re - re).abs() < 1e-9 && (r.im.abs() - im).abs() < 1e-9));

        // the coefficient attached to the −1 root vanishes at τ+1
        let gf = f_generating_function();
        let mut ordered = roots;
        // put −1 last
        ordered.sort_by(|a, b| {
            ((a.re + 1.0).abs() + a.im.abs())
                .partial_cmp(&((b.re + 1.0).abs() + b.im.abs()))
                .unwrap()
        });
        let ordered = [ordered[1], ordered[2], ordered[0]];
        let cs = gf_to_lambda_coeffs(&gf, &ordered, tau1).unwrap();
        assert!(cs[2].norm() < 1e-10, "c(−1) = {}", cs[2]);
    }

    #[test]
    fn partial_fractions_reproduce_expansion() {
        let gf = f_generating_function();
        let q = 5.0;
        let lams = FCubic::ordered_roots_at(q);
        let cs = gf_to_lambda_coeffs(&gf, &lams, q).unwrap();
        let ps = gf_expand(&gf, 6);
        for (m, p) in ps.iter().enumerate() {
            let m1 = m + 1;
            let direct = p.eval_f64(q);
            let via: Complex64 = (0..3)
                .map(|j| cs[j] * lams[j].powi(m1 as i32))
                .sum();
            assert!(
                (via.re - direct).abs() < 1e-8 * direct.abs().max(1.0),
                "m = {m1}: {via} vs {direct}"
            );
            assert!(via.im.abs() < 1e-8 * direct.abs().max(1.0));
        }
        // exact rational spot value: P(F₃, 5) from the expansion
        assert_eq!(ps[2].eval_i64(5), rat(5 * 4 * 3 * 2 * (125 - 225 + 150 - 35)));
    }

    #[test]
    fn degenerate_at_three() {
        let gf = f_generating_function();
        let roots = FCubic::roots_at(3.0);
        assert!(matches!(
            gf_to_lambda_coeffs(&gf, &roots, 3.0),
            Err(ChromaError::DegenerateLambdas)
        ));
    }
}
