//! Output formatting: factored polynomial strings, CSV/JSON table writers,
//! and the locus SVG.

use chroma_core::exact::Poly;

/// Render a chromatic polynomial with the structurally known factors
/// (powers of q, q−1, q−2, q−3) pulled out, e.g.
/// `q(q-1)(q-2)(q^3 - 9q^2 + 29q - 32)`.
pub fn factored(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut rest = p.clone();
    let mut parts: Vec<String> = vec![];
    for (k, label) in [(0i64, "q"), (1, "(q-1)"), (2, "(q-2)"), (3, "(q-3)")] {
        let lin = Poly::linear(-k);
        let mult = rest.multiplicity_of(&lin);
        if mult > 0 {
            for _ in 0..mult {
                rest = rest.exact_div(&lin).unwrap();
            }
            if mult == 1 {
                parts.push(label.to_string());
            } else {
                parts.push(format!("{label}^{mult}"));
            }
        }
    }
    if rest.degree() == 0 && parts.is_empty() {
        return format!("{rest}");
    }
    if rest.degree() > 0 || rest != Poly::one() {
        parts.push(format!("({rest})"));
    }
    parts.join("")
}

/// A rendered table: header row plus string cells.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Table {
    pub id: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut s = self.headers.join(",");
        s.push('\n');
        for r in &self.rows {
            s.push_str(&r.join(","));
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }
}

/// Parse a CSV produced by `Table::to_csv` (no quoting or embedded commas).
pub fn parse_csv(text: &str) -> Option<(Vec<String>, Vec<Vec<String>>)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let headers: Vec<String> = lines.next()?.split(',').map(|s| s.trim().to_string()).collect();
    let rows = lines
        .map(|l| l.split(',').map(|s| s.trim().to_string()).collect())
        .collect();
    Some((headers, rows))
}

/// Cell comparison for golden diffs: numeric within `tol` when both parse
/// as finite floats, exact string equality otherwise. A computed value that
/// reproduces the golden cell when rounded to its printed precision also
/// matches (half-ulp boundary cases).
pub fn cells_match(a: &str, b: &str, tol: f64) -> bool {
    match (a.parse::<f64>(), b.parse::<f64>()) {
        (Ok(x), Ok(y)) if x.is_finite() && y.is_finite() => {
            // 0.6 of the golden cell's last printed digit absorbs half-ulp
            // rounding (plus the occasional sloppy final digit) in cells
            // printed coarser than `tol`.
            (x - y).abs() <= tol.max(0.6 * printed_quantum(b))
        }
        _ => a == b,
    }
}

/// Value of one unit in the last printed decimal place of a numeral, e.g.
/// `2.618034` → 1e−6, `-6.588e-4` → 1e−7, `0.01201` → 1e−5.
fn printed_quantum(s: &str) -> f64 {
    let mut parts = s.split(['e', 'E']);
    let mantissa = parts.next().unwrap_or(s);
    let exp: i32 = parts.next().and_then(|e| e.parse().ok()).unwrap_or(0);
    let decimals = mantissa.split('.').nth(1).map(|d| d.len()).unwrap_or(0) as i32;
    10f64.powi(exp - decimals)
}

/// SVG rendering of the zero-locus boundary samples.
pub fn locus_svg(points: &[chroma_core::analysis::locus::LocusPoint]) -> String {
    // map q-plane [1.2, 4.0] × [−3.2, 3.2] onto an 800×800 canvas
    let (x0, x1, y0, y1) = (1.2_f64, 4.0_f64, -3.2_f64, 3.2_f64);
    let w = 800.0;
    let h = 800.0;
    let sx = |re: f64| (re - x0) / (x1 - x0) * w;
    let sy = |im: f64| h - (im - y0) / (y1 - y0) * h;
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    ));
    svg.push_str("  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    // real axis
    svg.push_str(&format!(
        "  <line x1=\"0\" y1=\"{0}\" x2=\"{w}\" y2=\"{0}\" stroke=\"#ccc\"/>\n",
        sy(0.0)
    ));
    for comp in ["arc13", "arc23", "line_up", "line_down"] {
        let pts: Vec<String> = points
            .iter()
            .filter(|p| p.component == comp)
            .map(|p| format!("{:.2},{:.2}", sx(p.re), sy(p.im)))
            .collect();
        if pts.len() >= 2 {
            let color = if comp.starts_with("arc") { "#c02020" } else { "#2040c0" };
            svg.push_str(&format!(
                "  <polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"2\" points=\"{}\"/>\n",
                pts.join(" ")
            ));
        }
    }
    // triple points and τ+1 marker
    let r3h = 3.0_f64.sqrt() / 2.0;
    for im in [r3h, -r3h] {
        svg.push_str(&format!(
            "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\" fill=\"#000\"/>\n",
            sx(2.5),
            sy(im)
        ));
    }
    svg.push_str(&format!(
        "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"#10a010\"/>\n",
        sx(2.618033988749895),
        sy(0.0)
    ));
    svg.push_str("</svg>\n");
    svg
}
