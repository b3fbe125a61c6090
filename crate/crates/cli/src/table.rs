//! Builders for the published tables: zero locations per family, the
//! two-parameter ratio grid, the symbolic limit ratios, and the asymptotic
//! summary. Plus the golden-file diff.

use anyhow::{anyhow, Result};
use chroma_core::analysis::{
    a_constant, a_constant_f, family_ratio, ratio_limit, zero_report, LimitDir, NearestZero,
};
use chroma_core::exact::QuadNum;
use chroma_core::families::{family_form, FamilySpec};

use crate::output::{cells_match, parse_csv, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableId {
    /// Zeros of the L family nearest τ+1, n = 9..20.
    LZeros,
    /// Zeros of D with m₂ = 0, n = 10..25.
    D0Zeros,
    /// Real window zeros of D with m₂ = 2 (both columns), n = 11..24.
    D2Zeros,
    /// Real window zeros of D with m₂ = 3, n = 12..26.
    D3Zeros,
    /// Ratio grid r(D_{m1,m2}), m₁, m₂ ∈ {0..6, ∞}.
    DRatios,
    /// Symbolic and numeric one-axis limit ratios of D.
    DLimitRatios,
    /// Asymptotic quantities for the one-parameter families.
    Summary,
}

impl TableId {
    pub fn name(&self) -> &'static str {
        match self {
            TableId::LZeros => "L_zeros",
            TableId::D0Zeros => "D0_zeros",
            TableId::D2Zeros => "D2_zeros",
            TableId::D3Zeros => "D3_zeros",
            TableId::DRatios => "D_ratios",
            TableId::DLimitRatios => "D_limit_ratios",
            TableId::Summary => "summary",
        }
    }

    /// Numeric tolerance used by the golden diff, matching each table's
    /// printed precision.
    pub fn diff_tolerance(&self) -> f64 {
        match self {
            TableId::LZeros | TableId::D0Zeros | TableId::D2Zeros | TableId::D3Zeros => 5e-6,
            TableId::DRatios => 5e-5,
            TableId::DLimitRatios => 5e-7,
            TableId::Summary => 5e-7,
        }
    }
}

pub fn build_table(id: TableId) -> Result<Table> {
    Ok(match id {
        TableId::LZeros => zeros_table("L_zeros", FamilySpec::L, 9, 20, true)?,
        TableId::D0Zeros => zeros_table("D0_zeros", FamilySpec::DFixedM2(0), 10, 25, true)?,
        TableId::D2Zeros => zeros_table("D2_zeros", FamilySpec::DFixedM2(2), 11, 24, false)?,
        TableId::D3Zeros => zeros_table("D3_zeros", FamilySpec::DFixedM2(3), 12, 26, false)?,
        TableId::DRatios => d_ratios_table()?,
        TableId::DLimitRatios => d_limit_ratios_table()?,
        TableId::Summary => summary_table()?,
    })
}

/// n ↦ m for the one-parameter families used in the zero tables.
fn m_of_n(spec: FamilySpec, n: i64) -> i64 {
    let f = family_form(spec).expect("family exists");
    debug_assert_eq!(f.alpha, vec![1]);
    n - f.beta
}

/// Zero table: with `offsets` the columns are n, q_z, q_z − (τ+1);
/// otherwise n, q_z, q_z′ with `cc_pair` / `nz` markers.
fn zeros_table(
    name: &str,
    spec: FamilySpec,
    n_from: i64,
    n_to: i64,
    offsets: bool,
) -> Result<Table> {
    let f = family_form(spec)?;
    let mut rows = vec![];
    for n in n_from..=n_to {
        let m = m_of_n(spec, n);
        let p = f.evaluate(&[m])?;
        let rep = zero_report(&p, n)?;
        let row = if offsets {
            match rep.q_z {
                NearestZero::Real(x) => {
                    vec![n.to_string(), format!("{x:.6}"), format!("{:.4e}", rep.q_z_offset)]
                }
                NearestZero::ComplexPair { .. } => {
                    vec![n.to_string(), "cc_pair".into(), "".into()]
                }
            }
        } else {
            let qz = match rep.q_z {
                NearestZero::Real(x) => format!("{x:.6}"),
                NearestZero::ComplexPair { .. } => "cc_pair".into(),
            };
            let qzp = rep
                .q_z_prime
                .map(|x| format!("{x:.6}"))
                .unwrap_or_else(|| "nz".into());
            vec![n.to_string(), qz, qzp]
        };
        rows.push(row);
    }
    let headers = if offsets {
        vec!["n".into(), "q_z".into(), "offset".into()]
    } else {
        vec!["n".into(), "q_z".into(), "q_z_prime".into()]
    };
    Ok(Table {
        id: name.into(),
        headers,
        rows,
    })
}

fn d_ratios_table() -> Result<Table> {
    let d = family_form(FamilySpec::D)?;
    let mut headers = vec!["m1\\m2".to_string()];
    headers.extend((0..=6).map(|j| j.to_string()));
    headers.push("inf".into());
    let mut rows = vec![];
    for m1 in 0..=6i64 {
        let mut row = vec![m1.to_string()];
        for m2 in 0..=6i64 {
            let r = family_ratio(FamilySpec::D, &[m1, m2])?;
            row.push(format!("{:.4}", r.r_float));
        }
        let lim = ratio_limit(&d, &LimitDir::AxisInfinite { axis: 1, fixed: vec![m1] })?;
        row.push(format!("{:.4}", lim.r_inf.to_f64()));
        rows.push(row);
    }
    let mut last = vec!["inf".to_string()];
    for m2 in 0..=6i64 {
        let lim = ratio_limit(&d, &LimitDir::AxisInfinite { axis: 0, fixed: vec![m2] })?;
        last.push(format!("{:.4}", lim.r_inf.to_f64()));
    }
    let lim = ratio_limit(&d, &LimitDir::AllInfinite)?;
    last.push(format!("{:.4}", lim.r_inf.to_f64()));
    rows.push(last);
    Ok(Table {
        id: "D_ratios".into(),
        headers,
        rows,
    })
}

/// r(D_{∞,m2}) for m2 = 0..10 (equal to r(D_{m2−2,∞}) for m2 ≥ 2) and the
/// joint limit, each with its exact Q(√5) form.
fn d_limit_ratios_table() -> Result<Table> {
    let d = family_form(FamilySpec::D)?;
    let mut rows = vec![];
    for m2 in 0..=10i64 {
        let lim = ratio_limit(&d, &LimitDir::AxisInfinite { axis: 0, fixed: vec![m2] })?;
        let label = if m2 >= 2 {
            format!("r(D_inf_{m2}) = r(D_{}_inf)", m2 - 2)
        } else {
            format!("r(D_inf_{m2})")
        };
        rows.push(vec![
            label,
            lim.r_inf.canonical_string(),
            format!("{:.6}", lim.r_inf.to_f64()),
        ]);
    }
    let lim = ratio_limit(&d, &LimitDir::AllInfinite)?;
    rows.push(vec![
        "r(D_inf_inf)".into(),
        lim.r_inf.canonical_string(),
        format!("{:.6}", lim.r_inf.to_f64()),
    ]);
    Ok(Table {
        id: "D_limit_ratios".into(),
        headers: vec!["limit".into(), "exact".into(), "numeric".into()],
        rows,
    })
}

/// Summary rows: family, n(m), χ, j_max, exact r_inf, numeric r_inf, a.
fn summary_table() -> Result<Table> {
    let entries: Vec<(FamilySpec, &str, &str)> = vec![
        (FamilySpec::R, "m+2", "4 (m>=2)"),
        (FamilySpec::Tc, "3m", "3"),
        (FamilySpec::Icosa, "9m+3", "4"),
        (FamilySpec::F, "m+4", "4 (m>=3)"),
        (FamilySpec::B, "m+2", "3e/4o"),
        (FamilySpec::H, "m+5", "4"),
        (FamilySpec::L, "m+5", "4"),
        (FamilySpec::DFixedM2(0), "m+5", "3e/4o"),
        (FamilySpec::DFixedM2(1), "m+6", "4"),
        (FamilySpec::DFixedM1(0), "m+7", "3e/4o"),
        (FamilySpec::DFixedM1(1), "m+8", "4"),
        (FamilySpec::DDiag, "2m+9", "3e/4o"),
        (FamilySpec::SDiag, "2m+7", "4"),
    ];
    let mut rows = vec![];
    for (spec, nstr, chi) in entries {
        let (jmax, r_exact, r_num, a) = if spec == FamilySpec::F {
            (
                3,
                "0".to_string(),
                0.0,
                a_constant_f(),
            )
        } else {
            let f = family_form(spec)?;
            let jmax = if f.basis.len() == 1 {
                1
            } else {
                f.nonzero_terms()
            };
            let lim = ratio_limit(&f, &LimitDir::AllInfinite)?;
            (
                jmax,
                lim.r_inf.canonical_string(),
                lim.r_inf.to_f64(),
                a_constant(&f)?,
            )
        };
        rows.push(vec![
            spec.label(),
            nstr.to_string(),
            chi.to_string(),
            jmax.to_string(),
            r_exact,
            format!("{r_num:.6}"),
            format!("{a:.6}"),
        ]);
    }
    Ok(Table {
        id: "summary".into(),
        headers: vec![
            "family".into(),
            "n".into(),
            "chi".into(),
            "j_max".into(),
            "r_inf_exact".into(),
            "r_inf".into(),
            "a".into(),
        ],
        rows,
    })
}

/// Compare a built table against `golden_dir/<name>.csv` at the table's
/// printed precision. Returns the list of mismatches (empty = pass).
pub fn diff_against_golden(table: &Table, golden_dir: &std::path::Path) -> Result<Vec<String>> {
    let path = golden_dir.join(format!("{}.csv", table.id));
    let text = std::fs::read_to_string(&path)
        .map_err(|e| anyhow!("cannot read golden file {}: {e}", path.display()))?;
    let (gh, gr) = parse_csv(&text).ok_or_else(|| anyhow!("bad golden csv"))?;
    let tol = TableId::from_name(&table.id)
        .map(|t| t.diff_tolerance())
        .unwrap_or(1e-9);
    let mut mismatches = vec![];
    if gh != table.headers {
        mismatches.push(format!("headers differ: {:?} vs {:?}", table.headers, gh));
    }
    if gr.len() != table.rows.len() {
        mismatches.push(format!(
            "row count {} vs golden {}",
            table.rows.len(),
            gr.len()
        ));
    }
    for (i, (row, grow)) in table.rows.iter().zip(&gr).enumerate() {
        if row.len() != grow.len() {
            mismatches.push(format!("row {i} width differs"));
            continue;
        }
        for (j, (c, gc)) in row.iter().zip(grow).enumerate() {
            if !cells_match(c, gc, tol) {
                mismatches.push(format!(
                    "row {i} col {j}: computed {c} vs golden {gc} (tol {tol})"
                ));
            }
        }
    }
    Ok(mismatches)
}

impl TableId {
    pub fn from_name(s: &str) -> Option<TableId> {
        Some(match s {
            "L_zeros" => TableId::LZeros,
            "D0_zeros" => TableId::D0Zeros,
            "D2_zeros" => TableId::D2Zeros,
            "D3_zeros" => TableId::D3Zeros,
            "D_ratios" => TableId::DRatios,
            "D_limit_ratios" => TableId::DLimitRatios,
            "summary" => TableId::Summary,
            _ => return None,
        })
    }

    pub fn all() -> [TableId; 7] {
        [
            TableId::LZeros,
            TableId::D0Zeros,
            TableId::D2Zeros,
            TableId::D3Zeros,
            TableId::DRatios,
            TableId::DLimitRatios,
            TableId::Summary,
        ]
    }
}

/// Exact symbolic expectations for the limit-ratio table, used by tests:
/// (m2, exact value).
pub fn limit_ratio_expectations() -> Vec<(i64, QuadNum)> {
    vec![
        (0, QuadNum::from_parts(-4, 2, 1)),
        (1, QuadNum::from_parts(-15, 7, 2)),
        (2, QuadNum::from_parts(-13, 6, 1)),
        (3, QuadNum::from_parts(-22, 10, 1)),
        (4, QuadNum::from_parts(-73, 33, 2)),
        (5, QuadNum::from_parts(-60, 27, 1)),
        (6, QuadNum::from_parts(-98, 44, 1)),
        (7, QuadNum::from_parts(-319, 143, 2)),
        (8, QuadNum::from_parts(-259, 116, 1)),
        (9, QuadNum::from_parts(-420, 188, 1)),
        (10, QuadNum::from_parts(-1361, 609, 2)),
    ]
}
