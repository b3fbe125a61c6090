//! `chroma`: exact chromatic polynomials of planar-triangulation families —
//! polynomials, zero reports, Tutte-ratio tables, and the asymptotic
//! zero-locus, exported as text/CSV/JSON/SVG.

use chroma_cli::output;
use chroma_cli::table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Parser, Subcommand, ValueEnum};

use chroma_core::analysis::{locus_boundary_sample, zero_report};
use chroma_core::exact::{all_complex_roots, rat, Poly, Rat};
use chroma_core::families::{
    catalogue, family_form, genfunc, FamilySpec,
};
use chroma_core::graph;

use output::{factored, locus_svg, Table};
use table::{build_table, diff_against_golden, TableId};

#[derive(Parser)]
#[command(
    name = "chroma",
    version,
    about = "Exact chromatic polynomials of planar triangulation families"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PolyFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LocusFormat {
    Csv,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edges,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a family's chromatic polynomial (factored where known).
    Poly {
        /// Family name: B, H, L, R, TC, I, F, D, S, D:m2=K, D:m1=K, S:fixed=K, Dd, Sd
        #[arg(long)]
        family: String,
        /// Parameter(s), comma-separated for two-parameter families: `4` or `1,2`
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        /// Also evaluate at a rational q (e.g. `3` or `7/2`)
        #[arg(long)]
        eval: Option<String>,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Reproduce a published table.
    Table {
        #[arg(value_enum)]
        id: TableId,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Compare against golden CSVs in this directory instead of printing.
        #[arg(long)]
        diff: Option<PathBuf>,
    },
    /// Zero report for one family member.
    Zeros {
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        /// Include all complex roots.
        #[arg(long)]
        complex: bool,
    },
    /// Sample the asymptotic zero-locus boundary.
    Locus {
        /// Total number of samples across the two arcs and two rays (≥ 16).
        #[arg(long, default_value_t = 128)]
        count: usize,
        #[arg(long, value_enum, default_value_t = LocusFormat::Csv)]
        format: LocusFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export a constructible family graph.
    Graph {
        /// B (bipyramid), TC (cylinder strip), R, K (complete), W (wheel)
        #[arg(long)]
        family: String,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
    },
    /// Dump the family catalogue as JSON.
    Families,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            // 2 = usage problems, 3 = internal invariant violations
            // (bad tensors, bound violations, convergence failures)
            let usage = matches!(
                e.downcast_ref::<chroma_core::ChromaError>(),
                Some(
                    chroma_core::ChromaError::BadParameter(_)
                        | chroma_core::ChromaError::UnknownFamily(_)
                        | chroma_core::ChromaError::TooLarge(_)
                        | chroma_core::ChromaError::OutsideDomain { .. }
                )
            ) || e.to_string().starts_with("bad parameter");
            ExitCode::from(if usage { 2 } else { 3 })
        }
    }
}

fn parse_m(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| anyhow!("bad parameter {t:?}"))
        })
        .collect()
}

fn parse_q(s: &str) -> Result<Rat> {
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse()?;
        let d: i64 = d.trim().parse()?;
        if d == 0 {
            return Err(anyhow!("zero denominator"));
        }
        Ok(Rat::new(n.into(), d.into()))
    } else {
        Ok(rat(s.trim().parse::<i64>()?))
    }
}

/// The member polynomial and vertex count for any family, including F.
fn family_poly(spec: FamilySpec, m: &[i64]) -> Result<(Poly, i64)> {
    if spec == FamilySpec::F {
        if m.len() != 1 || m[0] < 1 {
            return Err(anyhow!("F takes a single parameter m ≥ 1"));
        }
        let gf = genfunc::f_generating_function();
        let ps = genfunc::gf_expand(&gf, m[0] as usize);
        Ok((ps.last().unwrap().clone(), m[0] + 4))
    } else {
        let f = family_form(spec)?;
        let p = f.evaluate(m)?;
        let n = f.n_of(m);
        Ok((p, n))
    }
}

fn write_out(out: Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Poly {
            family,
            m,
            eval,
            format,
        } => {
            let spec = FamilySpec::parse(&family)?;
            let m = parse_m(&m)?;
            let (p, n) = family_poly(spec, &m)?;
            match format {
                PolyFormat::Text => {
                    println!("family: {}  m: {m:?}  n: {n}", spec.label());
                    println!("P = {}", factored(&p));
                    if let Some(qs) = eval {
                        let q = parse_q(&qs)?;
                        let v = p.eval(&q);
                        println!("P({qs}) = {v}");
                    }
                }
                PolyFormat::Json => {
                    let mut obj = serde_json::json!({
                        "family": spec.label(),
                        "m": m,
                        "n": n,
                        "degree": p.degree(),
                        "factored": factored(&p),
                        "coefficients": p
                            .coeffs()
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>(),
                    });
                    if let Some(qs) = eval {
                        let q = parse_q(&qs)?;
                        obj["eval"] = serde_json::json!({
                            "q": qs,
                            "value": p.eval(&q).to_string(),
                        });
                    }
                    println!("{}", serde_json::to_string_pretty(&obj)?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Table {
            id,
            format,
            out,
            diff,
        } => {
            let t = build_table(id)?;
            if let Some(dir) = diff {
                let mismatches = diff_against_golden(&t, &dir)?;
                if mismatches.is_empty() {
                    println!(
                        "table {}: matches golden ({} rows)",
                        t.id,
                        t.rows.len()
                    );
                    return Ok(ExitCode::SUCCESS);
                }
                for m in &mismatches {
                    eprintln!("table {}: {m}", t.id);
                }
                return Ok(ExitCode::from(3));
            }
            let text = match format {
                TableFormat::Csv => t.to_csv(),
                TableFormat::Json => t.to_json(),
            };
            write_out(out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Zeros { family, m, complex } => {
            let spec = FamilySpec::parse(&family)?;
            let m = parse_m(&m)?;
            let (p, n) = family_poly(spec, &m)?;
            let rep = zero_report(&p, n)?;
            let mut obj = serde_json::to_value(&rep)?;
            obj["family"] = serde_json::json!(spec.label());
            obj["m"] = serde_json::json!(m);
            if complex {
                let roots = all_complex_roots(&p)?;
                obj["complex_roots"] = serde_json::to_value(
                    roots
                        .iter()
                        .filter(|r| r.im != 0.0)
                        .collect::<Vec<_>>(),
                )?;
            }
            println!("{}", serde_json::to_string_pretty(&obj)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Locus { count, format, out } => {
            let pts = locus_boundary_sample(count)?;
            let text = match format {
                LocusFormat::Csv => {
                    let mut t = Table {
                        id: "locus".into(),
                        headers: vec![
                            "re".into(),
                            "im".into(),
                            "tag".into(),
                            "component".into(),
                        ],
                        rows: vec![],
                    };
                    for p in &pts {
                        t.rows.push(vec![
                            format!("{:.12}", p.re),
                            format!("{:.12}", p.im),
                            format!("{:?}", p.tag),
                            p.component.to_string(),
                        ]);
                    }
                    t.to_csv()
                }
                LocusFormat::Svg => locus_svg(&pts),
            };
            write_out(out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Graph { family, m, format } => {
            let g = match family.to_ascii_uppercase().as_str() {
                "B" => graph::make_bipyramid(m)?,
                "TC" => graph::make_tc_strip(m)?,
                "R" => graph::make_r(m)?,
                "K" => graph::make_complete(m),
                "W" => graph::make_wheel(m)?,
                other => return Err(anyhow!("no graph constructor for family {other}")),
            };
            let name = format!("{}_{m}", family.to_ascii_uppercase());
            let text = match format {
                GraphFormat::Edges => graph::to_edge_list(&g),
                GraphFormat::Dot => graph::to_dot(&g, &name),
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Families => {
            println!("{}", serde_json::to_string_pretty(&catalogue())?);
            Ok(ExitCode::SUCCESS)
        }
    }
}
