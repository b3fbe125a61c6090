//! Exact verification of the structural coefficient constraints: the
//! vanishing conditions at q = 0, 1, 2, 3 and the divisibility by q²−3q+1
//! forced by the Tutte bound at q = τ+1.

use crate::exact::{rat, Poly, QuadNum, RatFun};

use super::form::{ChiRule, StructuredForm};

#[derive(Clone, Debug)]
pub struct ConstraintCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct ConstraintReport {
    pub checks: Vec<ConstraintCheck>,
    /// Side observations that are reported but never counted as failures.
    pub informational: Vec<String>,
}

impl ConstraintReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(ConstraintCheck {
            name: name.into(),
            passed,
            detail,
        });
    }

    /// Zero test of a rational-function combination at a rational point.
    fn zero_at(&mut self, name: &str, c: &RatFun, x: i64) {
        match c.eval(&rat(x)) {
            Some(v) if v == rat(0) => self.push(name, true, format!("= 0 at q={x}")),
            Some(v) => self.push(name, false, format!("= {v} at q={x}")),
            None => self.push(name, false, format!("pole at q={x}")),
        }
    }

    /// Zero test at τ+1 (equivalent to divisibility by q²−3q+1 for
    /// rational-coefficient functions with no pole there).
    fn zero_at_tau1(&mut self, name: &str, c: &RatFun) {
        match c.eval_quad(&QuadNum::tau_plus_1()) {
            Some(v) if v.is_zero() => self.push(name, true, "= 0 at τ+1".into()),
            Some(v) => self.push(name, false, format!("= {v} at τ+1")),
            None => self.push(name, false, "pole at τ+1".into()),
        }
    }

    fn equal_at(&mut self, name: &str, a: &RatFun, b: &RatFun, x: i64) {
        match (a.eval(&rat(x)), b.eval(&rat(x))) {
            (Some(u), Some(v)) if u == v => self.push(name, true, format!("both = {u} at q={x}")),
            (u, v) => self.push(name, false, format!("{u:?} vs {v:?} at q={x}")),
        }
    }
}

/// Run every structural condition appropriate to the form's shape. The
/// optional `chi_override` substitutes the form's own chromatic-number rule.
pub fn verify_structure_constraints(
    f: &StructuredForm,
    chi_override: Option<ChiRule>,
) -> ConstraintReport {
    let chi = chi_override.unwrap_or(f.chi_rule);
    let mut r = ConstraintReport::default();
    if f.is_standard_p1() {
        p1_checks(f, chi, &mut r);
    } else if f.is_standard_p2() {
        p2_checks(f, chi, &mut r);
    } else if f.p == 1 && f.basis.len() == 6 {
        diagonal_checks(f, chi, &mut r);
    } else if f.is_single_power() {
        single_power_checks(f, &mut r);
    } else {
        r.informational
            .push(format!("{}: no constraint set for this shape", f.name));
    }
    r
}

fn p1_checks(f: &StructuredForm, chi: ChiRule, r: &mut ConstraintReport) {
    let c = &f.coeffs;
    for (j, cj) in c.iter().enumerate() {
        r.zero_at(&format!("q | c{}", j + 1), cj, 0);
    }
    r.zero_at("c2 = 0 at q=1", &c[1], 1);
    r.zero_at("c1 + c3 = 0 at q=1", &(&c[0] + &c[2]), 1);
    r.zero_at("c2 + c3 = 0 at q=2", &(&c[1] + &c[2]), 2);
    r.zero_at_tau1("(q²−3q+1) | c3", &c[2]);
    if let Ok(k) = f.kappa_form() {
        let k1 = RatFun::from_poly(k.kappa1.clone());
        let k2 = RatFun::from_poly(k.kappa2.clone());
        let k3 = RatFun::from_poly(k.kappa3.clone());
        r.equal_at("κ1 = κ3 at q=1", &k1, &k3, 1);
        r.equal_at("κ2 = κ3 at q=2", &k2, &k3, 2);
        match chi {
            ChiRule::AlwaysFour => {
                r.zero_at("κ1 = 0 at q=3 (χ=4)", &k1, 3);
                r.zero_at("κ3 = 0 at q=3 (χ=4)", &k3, 3);
            }
            ChiRule::ThreeEvenFourOdd => {
                r.equal_at("κ1 = κ3 at q=3 (χ parity)", &k1, &k3, 3);
            }
            _ => {}
        }
    } else {
        r.push("κ extraction", false, "forced factors missing".into());
    }
    if f.m_min[0] == 0 {
        // For families defined down to m = 0 the q=2 evaluation would also
        // force c1(2) = 0; reduced families shift m, so this is advisory.
        let v = c[0].eval(&rat(2));
        r.informational.push(format!(
            "{}: m_min = 0 remark — c1(2) = {:?} (informational only)",
            f.name, v
        ));
    }
}

fn p2_checks(f: &StructuredForm, chi: ChiRule, r: &mut ConstraintReport) {
    let c = |i: usize, j: usize| f.coeff(&[i - 1, j - 1]).clone();
    for i in 1..=3 {
        for j in 1..=3 {
            r.zero_at(&format!("q | c{i}{j}"), &c(i, j), 0);
        }
    }
    // q = 1
    let s = &(&(&c(1, 1) + &c(3, 3)) + &c(1, 3)) + &c(3, 1);
    r.zero_at("c11+c33+c13+c31 = 0 at q=1", &s, 1);
    r.zero_at("c22 = 0 at q=1", &c(2, 2), 1);
    r.zero_at("c12+c32 = 0 at q=1", &(&c(1, 2) + &c(3, 2)), 1);
    r.zero_at("c21+c23 = 0 at q=1", &(&c(2, 1) + &c(2, 3)), 1);
    // q = 2
    r.zero_at("c11 = 0 at q=2", &c(1, 1), 2);
    let s = &(&(&c(2, 2) + &c(3, 3)) + &c(2, 3)) + &c(3, 2);
    r.zero_at("c22+c33+c23+c32 = 0 at q=2", &s, 2);
    r.zero_at("c12+c13 = 0 at q=2", &(&c(1, 2) + &c(1, 3)), 2);
    r.zero_at("c21+c31 = 0 at q=2", &(&c(2, 1) + &c(3, 1)), 2);
    // τ+1: every coefficient with an index 3 vanishes
    for (i, j) in [(3, 3), (1, 3), (3, 1), (2, 3), (3, 2)] {
        r.zero_at_tau1(&format!("(q²−3q+1) | c{i}{j}"), &c(i, j));
    }
    // Tutte inequality on the surviving corner: (τ−1)^{5−β} |c11(τ+1)| < 1
    let tau1 = QuadNum::tau_plus_1();
    match c(1, 1).eval_quad(&tau1) {
        Some(v) => {
            let bound = QuadNum::tau_minus_1().pow(5 - f.beta).unwrap();
            let prod = &bound * &v.abs();
            let ok = (&prod - &QuadNum::one()).signum() < 0;
            r.push(
                "(τ−1)^{5−β} |c11| < 1 at τ+1",
                ok,
                format!("value = {}", prod.to_f64()),
            );
        }
        None => r.push("(τ−1)^{5−β} |c11| < 1 at τ+1", false, "pole".into()),
    }
    // chromatic-number structure at q = 3
    match chi {
        ChiRule::ThreeBothEven => {
            // surviving corners equal, everything else zero
            let corners = [(1, 1), (3, 3), (1, 3), (3, 1)];
            let v0 = c(1, 1).eval(&rat(3));
            let mut ok = v0.is_some();
            for &(i, j) in &corners[1..] {
                ok &= c(i, j).eval(&rat(3)) == v0;
            }
            for (i, j) in [(1, 2), (2, 1), (2, 2), (2, 3), (3, 2)] {
                ok &= c(i, j).eval(&rat(3)) == Some(rat(0));
            }
            r.push(
                "q=3 parity pattern (χ=3 iff both even)",
                ok,
                format!("corner value = {v0:?}"),
            );
        }
        ChiRule::AlwaysFour => {
            r.zero_at("c33 = 0 at q=3 (χ=4)", &c(3, 3), 3);
        }
        _ => {}
    }
}

fn diagonal_checks(f: &StructuredForm, chi: ChiRule, r: &mut ConstraintReport) {
    let c = |i: usize| f.coeffs[i - 1].clone();
    for i in 1..=6 {
        r.zero_at(&format!("q | c{i}"), &c(i), 0);
    }
    r.zero_at("c1+c3+c5 = 0 at q=1", &(&(&c(1) + &c(3)) + &c(5)), 1);
    r.zero_at("c2 = 0 at q=1", &c(2), 1);
    r.zero_at("c4+c6 = 0 at q=1", &(&c(4) + &c(6)), 1);
    r.zero_at("c1 = 0 at q=2", &c(1), 2);
    r.zero_at("c2+c3+c6 = 0 at q=2", &(&(&c(2) + &c(3)) + &c(6)), 2);
    r.zero_at("c4+c5 = 0 at q=2", &(&c(4) + &c(5)), 2);
    for i in [3usize, 5, 6] {
        r.zero_at_tau1(&format!("(q²−3q+1) | c{i}"), &c(i));
    }
    match chi {
        ChiRule::ThreeEvenFourOdd => {
            // odd-m vanishing at q=3: c1 + c3 − c5 = 0
            r.zero_at(
                "c1+c3−c5 = 0 at q=3 (odd-m χ=4)",
                &(&(&c(1) + &c(3)) - &c(5)),
                3,
            );
        }
        ChiRule::AlwaysFour => {
            r.zero_at("c3 = 0 at q=3 (χ=4)", &c(3), 3);
        }
        _ => {}
    }
}

fn single_power_checks(f: &StructuredForm, r: &mut ConstraintReport) {
    // P(m_min) must carry the triangle factor q(q−1)(q−2).
    match f.evaluate(&[f.m_min[0]]) {
        Ok(p) => {
            let k3 = Poly::falling_factorial(3);
            r.push(
                "q(q−1)(q−2) | P(m_min)",
                k3.divides(&p),
                format!("P at m = {}", f.m_min[0]),
            );
        }
        Err(e) => r.push("q(q−1)(q−2) | P(m_min)", false, e.to_string()),
    }
}
