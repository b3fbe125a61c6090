//! Remaining cross-cutting invariants: exact ratio closed forms, decay
//! bounds, shape checks for closed-form-only families, and the secondary
//! zero's drift toward 3 in the D₃ reduction.

use chroma_core::analysis::zeros::zero_report;
use chroma_core::analysis::{family_ratio, tutte_ratio};
use chroma_core::chromatic::{brute_force_count, chromatic_poly_default, eval_at_int};
use chroma_core::exact::{rat, QuadNum};
use chroma_core::families::{family_form, FamilySpec};
use chroma_core::graph::{make_complete, make_cycle};

#[test]
fn d_ratio_exact_closed_form() {
    // r(D_{m1,m2}) = (3−√5)/2 + ((65−29√5)/2) x^{m1+m2}
    //              + ((−11+5√5)/2) x^{m2} + ((−29+13√5)/2) x^{m1},
    // with x = (1−√5)/2, exactly in Q(√5) over [0..4]².
    let x = QuadNum::from_parts(1, -1, 2);
    let c0 = QuadNum::from_parts(3, -1, 2);
    let c12 = QuadNum::from_parts(65, -29, 2);
    let cm2 = QuadNum::from_parts(-11, 5, 2);
    let cm1 = QuadNum::from_parts(-29, 13, 2);
    for m1 in 0..=4i64 {
        for m2 in 0..=4i64 {
            let r = family_ratio(FamilySpec::D, &[m1, m2]).unwrap();
            let expect = &(&(&c0 + &(&c12 * &x.pow(m1 + m2).unwrap()))
                + &(&cm2 * &x.pow(m2).unwrap()))
                + &(&cm1 * &x.pow(m1).unwrap());
            assert_eq!(r.r_exact, expect.abs(), "r(D_{{{m1},{m2}}})");
        }
    }
}

#[test]
fn s_diagonal_decay_bound() {
    // r(S_{m,m}) = |(9−4√5)x^{2m} + 2(√5−2)x^m| ≤ 0.53 · ((√5−1)/2)^m
    let phi_inv: f64 = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut prev_env = f64::INFINITY;
    for m in 1..=25i64 {
        let r = family_ratio(FamilySpec::S, &[m, m]).unwrap().r_float;
        let bound = 0.53 * phi_inv.powi(m as i32);
        assert!(r < bound, "m = {m}: r = {r} vs bound {bound}");
        // the envelope itself decreases monotonically
        assert!(bound < prev_env);
        prev_env = bound;
    }
}

#[test]
fn closed_form_families_have_chromatic_shape() {
    // families without graph constructors: monic, degree n, vanishing at
    // 0, 1, 2, alternating signs
    use num_traits::Signed;
    let cases = [
        (FamilySpec::H, vec![3i64, 4, 5, 6]),
        (FamilySpec::L, vec![3, 4, 5, 6]),
        (FamilySpec::Icosa, vec![1, 2]),
        (FamilySpec::DFixedM2(2), vec![4, 5, 6]),
        (FamilySpec::SFixed(1), vec![2, 3, 4]),
        (FamilySpec::DDiag, vec![0, 1, 2]),
        (FamilySpec::SDiag, vec![0, 1, 2]),
    ];
    for (spec, ms) in cases {
        let f = family_form(spec).unwrap();
        for m in ms {
            let p = f.evaluate(&[m]).unwrap();
            assert_eq!(p.degree() as i64, f.n_of(&[m]), "{spec:?} m={m} degree");
            assert_eq!(p.leading(), rat(1), "{spec:?} m={m} monic");
            for k in [0i64, 1, 2] {
                assert_eq!(p.eval_i64(k), rat(0), "{spec:?} m={m} at {k}");
            }
            for i in 0..=p.degree() {
                let c = p.coeff(i);
                if c != rat(0) {
                    assert_eq!(
                        c.is_positive(),
                        (p.degree() - i).is_multiple_of(2),
                        "{spec:?} m={m} sign at {i}"
                    );
                }
            }
        }
    }
}

#[test]
fn d3_second_zero_drifts_to_three() {
    // over the published range (even n), q_z′ increases toward 3 from below
    let d3 = family_form(FamilySpec::DFixedM2(3)).unwrap();
    let mut prev = 0.0;
    for n in (12..=26i64).step_by(2) {
        let m = n - 8;
        let p = d3.evaluate(&[m]).unwrap();
        let rep = zero_report(&p, n).unwrap();
        let qzp = rep.q_z_prime.expect("even-n member has a second zero");
        assert!(qzp > prev, "n = {n}");
        assert!(qzp < 3.0);
        prev = qzp;
    }
    assert!(prev > 2.9);
}

#[test]
fn two_coloring_counts() {
    // P(g, 2) counts 2-colorings: 0 unless bipartite, 2 for even cycles
    let c4 = make_cycle(4).unwrap();
    assert_eq!(eval_at_int(&chromatic_poly_default(&c4), 2).unwrap(), 2);
    assert_eq!(brute_force_count(&c4, 2).unwrap(), 2);
    let c5 = make_cycle(5).unwrap();
    assert_eq!(eval_at_int(&chromatic_poly_default(&c5), 2).unwrap(), 0);
    let k3 = make_complete(3);
    assert_eq!(eval_at_int(&chromatic_poly_default(&k3), 2).unwrap(), 0);
}

#[test]
fn every_family_member_obeys_the_bound() {
    // tutte_ratio succeeds (r ≤ 1) on everything the suite can build
    let specs = [
        (FamilySpec::B, vec![3i64, 5, 9]),
        (FamilySpec::H, vec![3, 7]),
        (FamilySpec::L, vec![4, 8]),
        (FamilySpec::R, vec![1, 4]),
        (FamilySpec::Tc, vec![1, 3]),
        (FamilySpec::Icosa, vec![1, 2]),
        (FamilySpec::DFixedM2(1), vec![4, 7]),
        (FamilySpec::DDiag, vec![0, 3]),
        (FamilySpec::SDiag, vec![0, 3]),
    ];
    for (spec, ms) in specs {
        let f = family_form(spec).unwrap();
        for m in ms {
            let p = f.evaluate(&[m]).unwrap();
            let r = tutte_ratio(&p, f.n_of(&[m])).unwrap();
            assert!(r.r_float <= 1.0 + 1e-12, "{spec:?} m={m}");
        }
    }
}
