//! Acceptance suite: every exit criterion as an executable check at its
//! stated tolerance, one pass/fail line per criterion.

use std::time::Instant;

use chroma_cli::output::Table;
use chroma_cli::table::{build_table, diff_against_golden, limit_ratio_expectations, TableId};
use chroma_core::analysis::zeros::{q_w, second_zero_predictor, tau1_offset_sequence};
use chroma_core::analysis::{
    a_constant_f, ratio_limit, tutte_ratio, w_function, Convention, LimitDir,
};
use chroma_core::chromatic::{brute_force_count, chromatic_poly_default, eval_at_int};
use chroma_core::error::ChromaError;
use chroma_core::exact::{beraha, rat, Poly, QuadNum};
use chroma_core::families::{
    family_form, fit_structure, genfunc, lambda_i, lambda_tc, recursion_from_basis,
    verify_recursion, verify_structure_constraints, FamilySpec, LambdaBasis,
};
use chroma_core::graph::{make_bipyramid, make_tc_strip};

fn golden_dir() -> std::path::PathBuf {
    std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join("golden")
}

/// Run a criterion body, print exactly one PASS/FAIL line, propagate failure.
fn criterion(number: u32, name: &str, body: impl FnOnce() + std::panic::UnwindSafe) {
    let result = std::panic::catch_unwind(body);
    match &result {
        Ok(()) => println!("ACCEPTANCE {number:2} ({name}): PASS"),
        Err(_) => println!("ACCEPTANCE {number:2} ({name}): FAIL"),
    }
    if let Err(e) = result {
        std::panic::resume_unwind(e);
    }
}

fn assert_table_matches(t: &Table) {
    let mismatches = diff_against_golden(t, &golden_dir()).expect("golden readable");
    assert!(mismatches.is_empty(), "{}: {mismatches:?}", t.id);
}

#[test]
fn criterion_01_zero_tables() {
    criterion(1, "zero tables reproduce published values, < 10 s", || {
        let t0 = Instant::now();
        let tables: Vec<Table> = [
            TableId::LZeros,
            TableId::D0Zeros,
            TableId::D2Zeros,
            TableId::D3Zeros,
        ]
        .iter()
        .map(|&id| build_table(id).unwrap())
        .collect();
        let elapsed = t0.elapsed();
        for t in &tables {
            assert_table_matches(t);
        }
        // the D_{0,2} member reports its conjugate pair, not a real zero
        let d2 = &tables[2];
        assert_eq!(d2.rows[0][0], "11");
        assert_eq!(d2.rows[0][1], "cc_pair");
        assert_eq!(d2.rows[0][2], "nz");
        // the two corrected D3 cells follow the forced geometric decay
        // (the paper's printed 2.618057/2.618020 there duplicate D2 cells)
        let d3 = &tables[3];
        let qz = |n: i64| -> f64 {
            d3.rows
                .iter()
                .find(|r| r[0] == n.to_string())
                .and_then(|r| r[1].parse().ok())
                .unwrap()
        };
        let tau1 = 2.618033988749895;
        for n in [23i64, 24] {
            let ratio = (qz(n) - tau1) / (qz(n - 2) - tau1);
            assert!(
                (ratio - 0.382).abs() < 0.01,
                "n = {n}: offset ratio {ratio} breaks the geometric law"
            );
        }
        assert!(
            elapsed.as_secs_f64() < 10.0,
            "zero tables took {elapsed:?}"
        );
    });
}

#[test]
fn criterion_02_ratio_tables() {
    criterion(2, "ratio tables match to printed precision", || {
        let ratios = build_table(TableId::DRatios).unwrap();
        assert_eq!(ratios.rows.len(), 8);
        assert_eq!(ratios.rows[0].len(), 9); // label + 8 entries
        assert_table_matches(&ratios);

        let limits = build_table(TableId::DLimitRatios).unwrap();
        assert_table_matches(&limits);
        // symbolic equality against the published exact forms
        let d = family_form(FamilySpec::D).unwrap();
        for (m2, expect) in limit_ratio_expectations() {
            let lim = ratio_limit(
                &d,
                &LimitDir::AxisInfinite {
                    axis: 0,
                    fixed: vec![m2],
                },
            )
            .unwrap();
            assert_eq!(lim.r_inf, expect, "r(D_inf,{m2}) symbolic");
            assert!(
                (lim.r_inf.to_f64() - expect.to_f64()).abs() < 5e-7,
                "r(D_inf,{m2}) numeric"
            );
        }
        let lim = ratio_limit(&d, &LimitDir::AllInfinite).unwrap();
        assert_eq!(lim.r_inf, QuadNum::from_parts(3, -1, 2));
    });
}

#[test]
fn criterion_03_exact_identities() {
    criterion(3, "P(0)=P(1)=P(2)=0 exactly; χ=4 ⟹ P(3)=0; D parity", || {
        let lambda_specs = [
            FamilySpec::B,
            FamilySpec::H,
            FamilySpec::L,
            FamilySpec::R,
            FamilySpec::Tc,
            FamilySpec::Icosa,
            FamilySpec::DFixedM2(0),
            FamilySpec::DFixedM2(1),
            FamilySpec::DFixedM2(2),
            FamilySpec::DFixedM2(3),
            FamilySpec::DFixedM1(0),
            FamilySpec::SFixed(0),
            FamilySpec::DDiag,
            FamilySpec::SDiag,
        ];
        for spec in lambda_specs {
            let f = family_form(spec).unwrap();
            let m0 = f.m_min[0];
            for m in m0..m0 + 5 {
                let p = f.evaluate(&[m]).unwrap();
                for k in [0i64, 1, 2] {
                    assert!(p.eval_i64(k) == rat(0), "{spec:?} m={m} at q={k}");
                }
                let chi = f.chi_rule.chi(&[m]);
                if chi == 4 && !(spec == FamilySpec::R && m < 2) {
                    assert!(p.eval_i64(3) == rat(0), "{spec:?} m={m} χ=4 at q=3");
                }
            }
        }
        // two-parameter families, 5 samples each
        for spec in [FamilySpec::D, FamilySpec::S] {
            let f = family_form(spec).unwrap();
            for (m1, m2) in [(0, 0), (1, 2), (2, 1), (3, 3), (4, 2)] {
                let p = f.evaluate(&[m1, m2]).unwrap();
                for k in [0i64, 1, 2] {
                    assert!(p.eval_i64(k) == rat(0), "{spec:?} at q={k}");
                }
                if f.chi_rule.chi(&[m1, m2]) == 4 {
                    assert!(p.eval_i64(3) == rat(0), "{spec:?} χ=4 at q=3");
                }
            }
        }
        // the cubic-λ family via its generating function
        let gf = genfunc::f_generating_function();
        let ps = genfunc::gf_expand(&gf, 6);
        for (i, p) in ps.iter().enumerate() {
            for k in [0i64, 1, 2] {
                assert!(p.eval_i64(k) == rat(0), "F_{} at q={k}", i + 1);
            }
            let m = i + 1;
            if m != 2 {
                // χ(F_1) = 4 and χ(F_m) = 4 for m ≥ 3; only F_2 has χ = 3
                assert!(p.eval_i64(3) == rat(0), "F_{m} at q=3");
            }
        }
        // D parity formula at q = 3 over [0..5]²
        let d = family_form(FamilySpec::D).unwrap();
        for m1 in 0..=5i64 {
            for m2 in 0..=5i64 {
                let p = d.evaluate(&[m1, m2]).unwrap();
                let s = |x: i64| if x % 2 == 0 { 1 } else { -1 };
                let expect = rat(3) * rat(1 + s(m1 + m2) + s(m2) + s(m1)) / rat(2);
                assert_eq!(p.eval_i64(3), expect, "parity at ({m1},{m2})");
            }
        }
    });
}

#[test]
fn criterion_04_oracle_equivalence() {
    criterion(4, "graph engine = structural forms = brute force", || {
        let b = family_form(FamilySpec::B).unwrap();
        for m in 3..=8i64 {
            let form = b.evaluate(&[m]).unwrap();
            let graph = chromatic_poly_default(&make_bipyramid(m as usize).unwrap());
            assert_eq!(form, graph, "B_{m} coefficient-exact");
        }
        // corpus equivalence at integer q
        let corpus: Vec<chroma_core::graph::Graph> = (3..=8)
            .map(|m| make_bipyramid(m).unwrap())
            .chain((1..=3).map(|m| make_tc_strip(m).unwrap()))
            .chain((1..=5).map(|m| chroma_core::graph::make_r(m).unwrap()))
            .chain((3..=5).map(chroma_core::graph::make_complete))
            .collect();
        for g in &corpus {
            if g.n() > 10 {
                continue;
            }
            let p = chromatic_poly_default(g);
            for q in 2..=6u64 {
                assert_eq!(
                    eval_at_int(&p, q as i64).unwrap(),
                    brute_force_count(g, q).unwrap()
                );
            }
        }
        // TC identity P(TC_m) = q(q−1)(q−2) λ_TC^{m−1}, octahedron base case
        let k3 = Poly::falling_factorial(3);
        for m in 1..=4usize {
            let p = chromatic_poly_default(&make_tc_strip(m).unwrap());
            assert_eq!(p, &k3 * &lambda_tc().pow(m - 1), "TC_{m}");
        }
        let oct = make_tc_strip(2).unwrap();
        assert_eq!(brute_force_count(&oct, 3).unwrap(), 6);
        assert_eq!(
            eval_at_int(&chromatic_poly_default(&oct), 3).unwrap(),
            6
        );
    });
}

#[test]
fn criterion_05_structure_recovery() {
    criterion(5, "fit_structure recovers the published κ's; F rejected", || {
        let basis = LambdaBasis::standard();
        let fit = |spec: FamilySpec| {
            let f = family_form(spec).unwrap();
            let m0 = f.m_min[0];
            let samples: Vec<(i64, Poly)> = (m0..m0 + 6)
                .map(|m| (m, f.evaluate(&[m]).unwrap()))
                .collect();
            fit_structure(&samples, &basis).unwrap()
        };
        let k = fit(FamilySpec::B);
        assert_eq!(
            (k.kappa1, k.kappa2, k.kappa3),
            (Poly::one(), Poly::one(), Poly::one())
        );
        let k = fit(FamilySpec::H);
        assert_eq!(k.kappa1, Poly::linear(-3).pow(3));
        assert_eq!(k.kappa2, Poly::from_ints(&[-35, 30, -9, 1]));
        assert_eq!(k.kappa3, -&(&Poly::linear(-3) * &Poly::linear(-5)));
        let k = fit(FamilySpec::L);
        assert_eq!(k.kappa1, &Poly::linear(-2) * &Poly::linear(-3).pow(2));
        assert_eq!(k.kappa2, lambda_tc());
        assert_eq!(k.kappa3, Poly::linear(-3).scale(&rat(2)));
        // the four D reductions
        let k = fit(FamilySpec::DFixedM2(0));
        assert_eq!((k.kappa1.clone(), k.kappa2, k.kappa3), (lambda_tc(), lambda_tc(), lambda_tc()));
        let k = fit(FamilySpec::DFixedM2(1));
        assert_eq!(k.kappa1, &Poly::linear(-3) * &Poly::from_ints(&[-35, 30, -9, 1]));
        assert_eq!(k.kappa2, Poly::from_ints(&[119, -133, 58, -12, 1]));
        assert_eq!(k.kappa3, -&(&Poly::linear(-3) * &Poly::from_ints(&[25, -14, 2])));
        let k = fit(FamilySpec::DFixedM2(2));
        assert_eq!(k.kappa1, Poly::from_ints(&[-332, 498, -303, 94, -15, 1]));
        assert_eq!(k.kappa2, Poly::from_ints(&[-398, 553, -317, 95, -15, 1]));
        assert_eq!(k.kappa3, -&Poly::from_ints(&[206, -225, 91, -16, 1]));
        let k = fit(FamilySpec::DFixedM2(3));
        assert_eq!(
            k.kappa1,
            &(&Poly::linear(-3) * &Poly::from_ints(&[7, -5, 1]))
                * &Poly::from_ints(&[-49, 38, -10, 1])
        );
        assert_eq!(k.kappa2, Poly::from_ints(&[1271, -2152, 1551, -613, 141, -18, 1]));
        assert_eq!(
            k.kappa3,
            -&(&Poly::linear(-3).pow(2) * &Poly::from_ints(&[-67, 48, -12, 1]))
        );
        // F does not fit the three-term basis
        let gf = genfunc::f_generating_function();
        let ps = genfunc::gf_expand(&gf, 6);
        let samples: Vec<(i64, Poly)> = ps
            .iter()
            .enumerate()
            .map(|(i, p)| (i as i64 + 1, p.clone()))
            .collect();
        assert!(matches!(
            fit_structure(&samples, &basis),
            Err(ChromaError::NotThisForm(_))
        ));
    });
}

#[test]
fn criterion_06_recursions() {
    criterion(6, "recursion relations hold exactly (p=1, p=2, diagonal)", || {
        // p = 1 families over 20 consecutive m each
        for spec in [
            FamilySpec::B,
            FamilySpec::H,
            FamilySpec::L,
            FamilySpec::DFixedM2(0),
            FamilySpec::DFixedM2(1),
            FamilySpec::DFixedM2(2),
            FamilySpec::DFixedM2(3),
            FamilySpec::DFixedM1(0),
            FamilySpec::SFixed(0),
        ] {
            let f = family_form(spec).unwrap();
            let spec_r = recursion_from_basis(&f.basis, 1);
            let lo = f.m_min[0] + spec_r.j_max as i64;
            assert!(
                verify_recursion(&f, &spec_r, &[lo], &[lo + 19]).unwrap(),
                "{spec:?} recursion"
            );
        }
        // p = 2: D and S over a 5×5 grid (25 multi-indices)
        for spec in [FamilySpec::D, FamilySpec::S] {
            let f = family_form(spec).unwrap();
            let spec_r = recursion_from_basis(&f.basis, 2);
            assert!(
                verify_recursion(&f, &spec_r, &[3, 3], &[7, 7]).unwrap(),
                "{spec:?} 2D recursion"
            );
        }
        // diagonal six-term forms over 21 indices
        for spec in [FamilySpec::DDiag, FamilySpec::SDiag] {
            let f = family_form(spec).unwrap();
            let spec_r = recursion_from_basis(&f.basis, 1);
            assert_eq!(spec_r.j_max, 6);
            let lo = f.m_min[0] + 6;
            assert!(
                verify_recursion(&f, &spec_r, &[lo], &[lo + 20]).unwrap(),
                "{spec:?} diagonal recursion"
            );
        }
    });
}

#[test]
fn criterion_07_constraint_suite() {
    criterion(7, "all structural coefficient constraints pass", || {
        let specs = [
            FamilySpec::B,
            FamilySpec::H,
            FamilySpec::L,
            FamilySpec::R,
            FamilySpec::Tc,
            FamilySpec::Icosa,
            FamilySpec::D,
            FamilySpec::S,
            FamilySpec::DFixedM2(0),
            FamilySpec::DFixedM2(1),
            FamilySpec::DFixedM2(2),
            FamilySpec::DFixedM2(3),
            FamilySpec::DFixedM1(0),
            FamilySpec::SFixed(0),
            FamilySpec::DDiag,
            FamilySpec::SDiag,
        ];
        let mut total = 0;
        for spec in specs {
            let f = family_form(spec).unwrap();
            let rep = verify_structure_constraints(&f, None);
            assert!(
                rep.all_passed(),
                "{spec:?}: {:?}",
                rep.checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| &c.name)
                    .collect::<Vec<_>>()
            );
            total += rep.checks.len();
        }
        assert!(total > 150, "expected a substantive battery, got {total}");
    });
}

#[test]
fn criterion_08_zero_convergence() {
    criterion(8, "q_z → τ+1 with alternation and geometric decay", || {
        let families = [
            FamilySpec::B,
            FamilySpec::H,
            FamilySpec::L,
            FamilySpec::DFixedM2(0),
            FamilySpec::DFixedM2(1),
            FamilySpec::DFixedM2(2),
            FamilySpec::DFixedM2(3),
            FamilySpec::DFixedM1(0),
            FamilySpec::SFixed(0),
        ];
        for spec in families {
            let f = family_form(spec).unwrap();
            let seq = tau1_offset_sequence(&f, 40).unwrap();
            // The convergence statement is asymptotic: the first few members
            // may predate the regime (extra transient real zeros). Find the
            // earliest start whose entire tail alternates and shrinks, and
            // require that regime to cover at least 20 consecutive members.
            let ok_from = |start: usize| {
                seq[start..].windows(2).all(|w| {
                    w[0].1 * w[1].1 < 0.0 && w[1].1.abs() < w[0].1.abs()
                })
            };
            let start = (0..seq.len())
                .find(|&s| ok_from(s))
                .unwrap_or(seq.len());
            let tail = &seq[start..];
            assert!(
                tail.len() >= 20,
                "{spec:?}: alternating/shrinking regime covers only {} of {} points",
                tail.len(),
                seq.len()
            );
            // geometric rate (τ−1)² ≈ 0.382 within [0.3, 0.5] for the
            // same-parity ratios over the last stretch
            for w in tail[tail.len() - 8..].windows(3) {
                let r = (w[2].1 / w[0].1).abs();
                assert!(
                    (0.3..=0.5).contains(&r),
                    "{spec:?}: parity ratio {r} outside [0.3, 0.5]"
                );
            }
        }
    });
}

#[test]
fn criterion_09_generating_function() {
    criterion(9, "generating function: closed forms, τ+1 vanishing, a_F", || {
        let gf = genfunc::f_generating_function();
        let ps = genfunc::gf_expand(&gf, 6);
        let k3 = Poly::falling_factorial(3);
        let l3 = Poly::linear(-3);
        assert_eq!(ps[1], &k3 * &lambda_tc());
        assert_eq!(ps[2], &(&k3 * &l3) * &Poly::from_ints(&[-35, 30, -9, 1]));
        assert_eq!(ps[3], &(&k3 * &l3) * &Poly::from_ints(&[119, -133, 58, -12, 1]));
        assert_eq!(ps[4], &(&k3 * &l3) * &Poly::from_ints(&[-398, 553, -317, 95, -15, 1]));
        assert_eq!(
            ps[5],
            &(&k3 * &l3.pow(2)) * &Poly::from_ints(&[-447, 591, -327, 96, -15, 1])
        );

        // at τ+1 the coefficient of the −1 root vanishes
        let tau1 = 2.618033988749895;
        let roots = genfunc::FCubic::roots_at(tau1);
        let mut ordered: Vec<_> = roots.to_vec();
        ordered.sort_by(|a, b| {
            ((a.re + 1.0).abs() + a.im.abs())
                .partial_cmp(&((b.re + 1.0).abs() + b.im.abs()))
                .unwrap()
        });
        let arranged = [ordered[1], ordered[2], ordered[0]];
        let cs = genfunc::gf_to_lambda_coeffs(&gf, &arranged, tau1).unwrap();
        assert!(cs[2].norm() < 1e-10, "c(−1) = {}", cs[2].norm());

        // r(F_m) → 0 under an envelope decaying at rate a_F: the surviving
        // terms at τ+1 are a conjugate pair, so r oscillates (a cosine
        // factor) and only the envelope is monotone. Check block maxima.
        let many = genfunc::gf_expand(&gf, 24);
        let mut rs = vec![];
        for (i, p) in many.iter().enumerate() {
            let n = i as i64 + 5; // n(F_m) = m + 4, m = i + 1
            rs.push(tutte_ratio(p, n).unwrap().r_float);
        }
        let block_max = |k: usize| -> f64 { rs[8 * k..8 * (k + 1)].iter().cloned().fold(0.0, f64::max) };
        let (m1, m2, m3) = (block_max(0), block_max(1), block_max(2));
        assert!(m1 > m2 && m2 > m3, "envelope not decaying: {m1} {m2} {m3}");
        assert!(m3 < 0.03, "r(F) envelope too large: {m3}");
        // envelope decay rate per vertex approaches a_F
        let emp = (m3 / m2).powf(1.0 / 8.0);
        assert!((emp - 0.786151).abs() < 0.02, "empirical a {emp}");
        assert!((a_constant_f() - 0.786151).abs() < 1e-5);
    });
}

#[test]
fn criterion_10_constants() {
    criterion(10, "q_w, κ₃ predictor, Beraha number, r(K₃)", || {
        assert!((q_w() - 2.546602).abs() < 1e-6);
        let d2 = family_form(FamilySpec::DFixedM2(2)).unwrap();
        let v = second_zero_predictor(&d2.kappa_form().unwrap()).unwrap();
        assert!((v - 2.7227000945).abs() < 1e-8, "{v}");
        assert!((beraha(5) - 2.618033988749895).abs() < 1e-12);
        let r = tutte_ratio(&Poly::falling_factorial(3), 3).unwrap();
        assert_eq!(r.r_exact, QuadNum::one());
    });
}

#[test]
fn criterion_11_w_functions() {
    criterion(11, "W functions: TC boundary, λ_I crossing, S growth", || {
        let rep = w_function(FamilySpec::Tc, 3.0, Convention::Commuting).unwrap();
        assert!((rep.w - 1.0).abs() < 1e-12);
        let crossing =
            chroma_core::analysis::entropy::lambda_crossing_of_one(&lambda_i(), 3.3, 4.0)
                .unwrap();
        assert!((crossing - 3.5133658).abs() < 1e-6, "{crossing}");
        // W({S}, q) = √((q−2)(q−3)) against the diagonal growth rate at m = 30
        let s = family_form(FamilySpec::S).unwrap();
        for q in [5i64, 6] {
            let p30 = s.evaluate(&[30, 30]).unwrap().eval_i64(q);
            let p31 = s.evaluate(&[31, 31]).unwrap().eval_i64(q);
            let ratio = chroma_core::exact::rat_to_f64(&(&p31 / &p30));
            let w_emp = ratio.sqrt(); // Δn = 2 per diagonal step
            let w = w_function(FamilySpec::S, q as f64, Convention::Commuting)
                .unwrap()
                .w;
            assert!(
                ((w_emp - w) / w).abs() < 1e-3,
                "q={q}: empirical {w_emp} vs {w}"
            );
        }
    });
}
