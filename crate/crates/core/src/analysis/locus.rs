//! The asymptotic accumulation set of chromatic zeros for the three-term
//! λ-basis families: two unit-circle arcs around 2 and 3 plus the vertical
//! line Re(q) = 5/2, meeting at the triple points (5 ± i√3)/2. Region
//! membership is decided by dominant-λ magnitude comparisons.

use crate::exact::{rat, rat_from_f64, ratio, Rat};

/// Where a point of the complex q-plane sits relative to the zero locus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionTag {
    /// Re(q) > 5/2 and |q−2| > 1 (λ₁ = q−2 dominant).
    R1,
    /// Re(q) < 5/2 and |q−3| > 1 (λ₂ = q−3 dominant).
    R2,
    /// |q−2| < 1 and |q−3| < 1 (λ₃ = −1 dominant).
    R3,
    /// |q−2| = 1, Re(q) > 5/2.
    BoundaryArc13,
    /// |q−3| = 1, Re(q) < 5/2.
    BoundaryArc23,
    /// Re(q) = 5/2, |Im(q)| > √3/2.
    BoundaryLine12,
    /// q = (5 ± i√3)/2.
    TriplePoint,
}

/// Exact classification from rational `re` and rational `im²` (the boundary
/// equations involve the imaginary part only through its square, so the
/// triple point (5±i√3)/2 is exactly representable as re = 5/2, im² = 3/4).
/// Every input receives exactly one tag.
pub fn classify_region_exact(re: &Rat, im_sq: &Rat) -> RegionTag {
    let half5 = ratio(5, 2);
    let d2 = {
        let t = re - &rat(2);
        &t * &t + im_sq
    };
    let d3 = {
        let t = re - &rat(3);
        &t * &t + im_sq
    };
    let one = rat(1);
    if *re == half5 {
        let three_quarter = ratio(3, 4);
        if *im_sq == three_quarter {
            return RegionTag::TriplePoint;
        }
        if *im_sq > three_quarter {
            return RegionTag::BoundaryLine12;
        }
        return RegionTag::R3; // |q−2|² = 1/4 + im² < 1
    }
    if *re > half5 {
        if d2 == one {
            return RegionTag::BoundaryArc13;
        }
        if d2 > one {
            return RegionTag::R1;
        }
        return RegionTag::R3; // inside the arc on the right: |q−3| < |q−2| < 1
    }
    if d3 == one {
        return RegionTag::BoundaryArc23;
    }
    if d3 > one {
        return RegionTag::R2;
    }
    RegionTag::R3
}

/// Float wrapper: converts losslessly to rationals, with boundary snapping
/// within 1e−12 so float-constructed arc/line/triple points classify onto
/// their boundary rather than a region a rounding error away.
pub fn classify_region(re: f64, im: f64) -> RegionTag {
    const EPS: f64 = 1e-12;
    let snap = |x: f64, target: f64| (x - target).abs() < EPS;
    let d2 = ((re - 2.0).powi(2) + im * im).sqrt();
    let d3 = ((re - 3.0).powi(2) + im * im).sqrt();
    let on_line = snap(re, 2.5);
    let root3_half = 3.0_f64.sqrt() / 2.0;
    if on_line && snap(im.abs(), root3_half) {
        return RegionTag::TriplePoint;
    }
    if on_line && im.abs() > root3_half {
        return RegionTag::BoundaryLine12;
    }
    if snap(d2, 1.0) && re > 2.5 {
        return RegionTag::BoundaryArc13;
    }
    if snap(d3, 1.0) && re < 2.5 {
        return RegionTag::BoundaryArc23;
    }
    classify_region_exact(
        &rat_from_f64(re),
        &rat_from_f64(im * im),
    )
}

/// A sampled locus point with its tag.
#[derive(Clone, Debug, serde::Serialize)]
pub struct LocusPoint {
    pub re: f64,
    pub im: f64,
    pub tag: RegionTag,
    /// Which boundary component the sample parameterizes.
    pub component: &'static str,
}

/// Evenly parameterized samples of the locus: the two arcs (endpoints at the
/// triple points, arc₁₃ passing through q = 3, arc₂₃ through q = 2) and the
/// two vertical rays truncated at |Im| = IM_MAX. `count` is the total.
pub fn locus_boundary_sample(count: usize) -> crate::error::Result<Vec<LocusPoint>> {
    if count < 16 {
        return Err(crate::error::ChromaError::BadParameter(format!(
            "locus sample needs count ≥ 16, got {count}"
        )));
    }
    const IM_MAX: f64 = 3.0;
    let root3_half = 3.0_f64.sqrt() / 2.0;
    let per_arc = count * 3 / 8;
    let per_line = (count - 2 * per_arc) / 2;
    let rest = count - 2 * per_arc - 2 * per_line;
    let mut out = Vec::with_capacity(count);

    // arc around 2: q = 2 + e^{iθ}, θ ∈ [−π/3, π/3]
    for k in 0..per_arc {
        let t = k as f64 / (per_arc - 1) as f64;
        let theta = -std::f64::consts::FRAC_PI_3 + t * 2.0 * std::f64::consts::FRAC_PI_3;
        let (re, im) = (2.0 + theta.cos(), theta.sin());
        out.push(LocusPoint {
            re,
            im,
            tag: classify_region(re, im),
            component: "arc13",
        });
    }
    // arc around 3: q = 3 + e^{iφ}, φ ∈ [2π/3, 4π/3]
    for k in 0..per_arc {
        let t = k as f64 / (per_arc - 1) as f64;
        let phi = 2.0 * std::f64::consts::FRAC_PI_3 * (1.0 + t);
        let (re, im) = (3.0 + phi.cos(), phi.sin());
        out.push(LocusPoint {
            re,
            im,
            tag: classify_region(re, im),
            component: "arc23",
        });
    }
    // vertical rays Re = 5/2, |Im| from √3/2 to IM_MAX
    for (sign, cnt) in [(1.0, per_line), (-1.0, per_line + rest)] {
        for k in 0..cnt {
            let t = k as f64 / (cnt - 1) as f64;
            let im = sign * (root3_half + t * (IM_MAX - root3_half));
            out.push(LocusPoint {
                re: 2.5,
                im,
                tag: classify_region(2.5, im),
                component: if sign > 0.0 { "line_up" } else { "line_down" },
            });
        }
    }
    Ok(out)
}

/// |λ_i(q)| for the three basis λ's at a complex point, for the
/// equal-dominance checks along the boundary.
pub fn lambda_magnitudes(re: f64, im: f64) -> [f64; 3] {
    let d2 = ((re - 2.0).powi(2) + im * im).sqrt();
    let d3 = ((re - 3.0).powi(2) + im * im).sqrt();
    [d2, d3, 1.0]
}
