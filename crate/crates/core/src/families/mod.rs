//! Closed-form structured chromatic polynomials for the planar-triangulation
//! families, the λ-basis algebra, structural fitting, and recursion
//! synthesis/verification.

pub mod constraints;
pub mod fit;
pub mod form;
pub mod genfunc;
pub mod recursion;

pub use constraints::{verify_structure_constraints, ConstraintCheck, ConstraintReport};
pub use fit::fit_structure;
pub use form::{ChiRule, KappaForm, LambdaBasis, StructuredForm};
pub use genfunc::{gf_expand, gf_to_lambda_coeffs, FCubic, GeneratingFunction};
pub use recursion::{recursion_from_basis, verify_recursion, RecursionSpec};

use crate::error::{ChromaError, Result};
use crate::exact::{Poly, RatFun};

/// `λ_TC = q³ − 9q² + 29q − 32`: the octahedron factor, whose unique real
/// root is q_w, the right end of the (2, q_w) zero-free interval.
pub fn lambda_tc() -> Poly {
    Poly::from_ints(&[-32, 29, -9, 1])
}

/// `λ_I`: the degree-9 factor of the iterated-icosahedron family,
/// (q−3)(q⁸−24q⁷+260q⁶−1670q⁵+6999q⁴−19698q³+36408q²−40240q+20170).
pub fn lambda_i() -> Poly {
    &Poly::linear(-3)
        * &Poly::from_ints(&[20170, -40240, 36408, -19698, 6999, -1670, 260, -24, 1])
}

/// `q² − 3q + 1`, the minimal polynomial of τ+1.
pub fn golden_quadratic() -> Poly {
    Poly::from_ints(&[1, -3, 1])
}

/// Everything the CLI and analysis layers can name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Bipyramids B_m = C_m + 2·K₁, n = m+2.
    B,
    /// H_m, n = m+5.
    H,
    /// L_m, n = m+5.
    L,
    /// R_m = P_m + P₂, n = m+2 (single power of q−3).
    R,
    /// Triangular-cylinder strips / iterated octahedra, n = 3m.
    Tc,
    /// Iterated icosahedra, n = 9m+3.
    Icosa,
    /// The cubic-λ family, n = m+4 (generating-function route only).
    F,
    /// Two-parameter D family, n = m₁+m₂+9.
    D,
    /// Two-parameter symmetric S family, n = m₁+m₂+7.
    S,
    /// D with m₂ fixed: the one-parameter family in m = m₁+4, n = m+5+k.
    DFixedM2(i64),
    /// D with m₁ fixed: m = m₂+2, n = m+7+k.
    DFixedM1(i64),
    /// S with one parameter fixed (symmetric): m = m₁+2, n = m+5+k.
    SFixed(i64),
    /// Diagonal D_{m,m}, n = 2m+9 (six-term basis).
    DDiag,
    /// Diagonal S_{m,m}, n = 2m+7 (six-term basis, four nonzero).
    SDiag,
}

impl FamilySpec {
    /// Parse CLI names: `B`, `H`, `L`, `R`, `TC`, `I`, `F`, `D`, `S`,
    /// `D:m2=2`, `D:m1=0`, `S:fixed=0`, `Dd`, `Sd`.
    pub fn parse(s: &str) -> Result<FamilySpec> {
        let t = s.trim();
        let up = t.to_ascii_uppercase();
        Ok(match up.as_str() {
            "B" => FamilySpec::B,
            "H" => FamilySpec::H,
            "L" => FamilySpec::L,
            "R" => FamilySpec::R,
            "TC" => FamilySpec::Tc,
            "I" => FamilySpec::Icosa,
            "F" => FamilySpec::F,
            "D" => FamilySpec::D,
            "S" => FamilySpec::S,
            "DD" => FamilySpec::DDiag,
            "SD" => FamilySpec::SDiag,
            _ => {
                let parse_k = |rest: &str| -> Result<i64> {
                    rest.parse()
                        .map_err(|_| ChromaError::UnknownFamily(s.to_string()))
                };
                if let Some(rest) = up.strip_prefix("D:M2=") {
                    FamilySpec::DFixedM2(parse_k(rest)?)
                } else if let Some(rest) = up.strip_prefix("D:M1=") {
                    FamilySpec::DFixedM1(parse_k(rest)?)
                } else if let Some(rest) = up.strip_prefix("S:FIXED=") {
                    FamilySpec::SFixed(parse_k(rest)?)
                } else {
                    return Err(ChromaError::UnknownFamily(s.to_string()));
                }
            }
        })
    }

    pub fn label(&self) -> String {
        match self {
            FamilySpec::B => "B".into(),
            FamilySpec::H => "H".into(),
            FamilySpec::L => "L".into(),
            FamilySpec::R => "R".into(),
            FamilySpec::Tc => "TC".into(),
            FamilySpec::Icosa => "I".into(),
            FamilySpec::F => "F".into(),
            FamilySpec::D => "D".into(),
            FamilySpec::S => "S".into(),
            FamilySpec::DFixedM2(k) => format!("D:m2={k}"),
            FamilySpec::DFixedM1(k) => format!("D:m1={k}"),
            FamilySpec::SFixed(k) => format!("S:fixed={k}"),
            FamilySpec::DDiag => "Dd".into(),
            FamilySpec::SDiag => "Sd".into(),
        }
    }
}

fn rf(p: Poly) -> RatFun {
    RatFun::from_poly(p)
}

fn kappa_based(name: &str, k1: Poly, k2: Poly, k3: Poly, beta: i64, m_min: i64, chi: ChiRule) -> StructuredForm {
    let q = Poly::q();
    StructuredForm {
        name: name.into(),
        p: 1,
        basis: LambdaBasis::standard().terms,
        coeffs: vec![
            rf(&q * &k1),
            rf(&(&q * &Poly::linear(-1)) * &k2),
            rf(&(&q * &golden_quadratic()) * &k3),
        ],
        alpha: vec![1],
        beta,
        m_min: vec![m_min],
        chi_rule: chi,
    }
}

/// The two-parameter D tensor c̄_{D,ij} (entries are c/q).
fn d_bar_tensor() -> Vec<RatFun> {
    let l1 = Poly::linear(-2);
    let l2 = Poly::linear(-3);
    let q1 = Poly::linear(-1);
    let g = golden_quadratic();
    let c11 = RatFun::new(l1.pow(7), q1.clone());
    let c12 = rf(&l1.pow(3) * &l2.pow(4));
    let c13 = RatFun::new(&l1.pow(3) * &g, q1.clone());
    let c21 = rf(&l1 * &l2.pow(6));
    let c22 = RatFun::new(
        &(&q1 * &l2.pow(5)) * &Poly::from_ints(&[-35, 30, -9, 1]),
        l1.clone(),
    );
    let c23 = RatFun::new(
        -&(&(&l2.pow(4) * &Poly::linear(-5)) * &g),
        l1.clone(),
    );
    let c31 = RatFun::new(&l1 * &g, q1.clone());
    let c32 = RatFun::new(
        -&(&(&l2.pow(2) * &Poly::linear(-5)) * &g),
        l1.clone(),
    );
    let c33 = RatFun::new(
        &Poly::from_ints(&[-23, 74, -88, 46, -11, 1]) * &g,
        &q1 * &l1,
    );
    vec![c11, c12, c13, c21, c22, c23, c31, c32, c33]
}

/// The symmetric S tensor c̄_{S,ij}.
fn s_bar_tensor() -> Vec<RatFun> {
    let l1 = Poly::linear(-2);
    let l2 = Poly::linear(-3);
    let q1 = Poly::linear(-1);
    let g = golden_quadratic();
    let zero = RatFun::zero();
    let c22 = RatFun::new(&q1 * &l2.pow(6), l1.clone());
    let c12 = rf(&l1.pow(3) * &l2.pow(2));
    let c23 = RatFun::new(&l2.pow(2) * &g, l1.clone());
    let c33 = RatFun::new(&(&q1 * &l2) * &g, l1.clone());
    vec![
        zero.clone(),
        c12.clone(),
        zero.clone(),
        c12,
        c22,
        c23.clone(),
        zero,
        c23,
        c33,
    ]
}

fn mul_q(t: Vec<RatFun>) -> Vec<RatFun> {
    t.into_iter().map(|c| c.mul_poly(&Poly::q())).collect()
}

/// Structured form for every λ-based family. The F family is not one (its
/// λ's solve a cubic); ask [`genfunc`] for it instead.
pub fn family_form(spec: FamilySpec) -> Result<StructuredForm> {
    let k3poly = Poly::falling_factorial(3);
    Ok(match spec {
        FamilySpec::B => kappa_based(
            "B",
            Poly::one(),
            Poly::one(),
            Poly::one(),
            2,
            3,
            ChiRule::ThreeEvenFourOdd,
        ),
        FamilySpec::H => kappa_based(
            "H",
            Poly::linear(-3).pow(3),
            Poly::from_ints(&[-35, 30, -9, 1]),
            -&(&Poly::linear(-3) * &Poly::linear(-5)),
            5,
            3,
            ChiRule::AlwaysFour,
        ),
        FamilySpec::L => kappa_based(
            "L",
            &Poly::linear(-2) * &Poly::linear(-3).pow(2),
            lambda_tc(),
            Poly::linear(-3).scale(&crate::exact::rat(2)),
            5,
            3,
            ChiRule::AlwaysFour,
        ),
        FamilySpec::R => StructuredForm {
            name: "R".into(),
            p: 1,
            basis: vec![Poly::linear(-3)],
            coeffs: vec![RatFun::new(k3poly, Poly::linear(-3))],
            alpha: vec![1],
            beta: 2,
            m_min: vec![1],
            chi_rule: ChiRule::AlwaysFour,
        },
        FamilySpec::Tc => StructuredForm {
            name: "TC".into(),
            p: 1,
            basis: vec![lambda_tc()],
            coeffs: vec![RatFun::new(k3poly, lambda_tc())],
            alpha: vec![3],
            beta: 0,
            m_min: vec![1],
            chi_rule: ChiRule::AlwaysThree,
        },
        FamilySpec::Icosa => StructuredForm {
            name: "I".into(),
            p: 1,
            basis: vec![lambda_i()],
            coeffs: vec![rf(k3poly)],
            alpha: vec![9],
            beta: 3,
            m_min: vec![1],
            chi_rule: ChiRule::AlwaysFour,
        },
        FamilySpec::F => {
            return Err(ChromaError::UnknownFamily(
                "F is not a λ-basis family; use the generating function".into(),
            ))
        }
        FamilySpec::D => StructuredForm {
            name: "D".into(),
            p: 2,
            basis: LambdaBasis::standard().terms,
            coeffs: mul_q(d_bar_tensor()),
            alpha: vec![1, 1],
            beta: 9,
            m_min: vec![0, 0],
            chi_rule: ChiRule::ThreeBothEven,
        },
        FamilySpec::S => StructuredForm {
            name: "S".into(),
            p: 2,
            basis: LambdaBasis::standard().terms,
            coeffs: mul_q(s_bar_tensor()),
            alpha: vec![1, 1],
            beta: 7,
            m_min: vec![0, 0],
            chi_rule: ChiRule::AlwaysFour,
        },
        FamilySpec::DFixedM2(k) => {
            let d = family_form(FamilySpec::D)?;
            d.reduce_fixing(1, k, 4, format!("D:m2={k}"))?
        }
        FamilySpec::DFixedM1(k) => {
            let d = family_form(FamilySpec::D)?;
            d.reduce_fixing(0, k, 2, format!("D:m1={k}"))?
        }
        FamilySpec::SFixed(k) => {
            let s = family_form(FamilySpec::S)?;
            s.reduce_fixing(1, k, 2, format!("S:fixed={k}"))?
        }
        FamilySpec::DDiag => {
            let d = family_form(FamilySpec::D)?;
            d.diagonalize("Dd".into(), ChiRule::ThreeEvenFourOdd)?
        }
        FamilySpec::SDiag => {
            let s = family_form(FamilySpec::S)?;
            s.diagonalize("Sd".into(), ChiRule::AlwaysFour)?
        }
    })
}

/// Family catalogue entry for JSON export.
#[derive(serde::Serialize)]
pub struct CatalogueEntry {
    pub name: String,
    pub p: usize,
    pub alpha: Vec<i64>,
    pub beta: i64,
    pub m_min: Vec<i64>,
    pub chi: ChiRule,
    pub lambdas: Vec<String>,
    pub coefficients: Vec<String>,
}

/// Serializable catalogue of every λ-basis family.
pub fn catalogue() -> Vec<CatalogueEntry> {
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
    specs
        .iter()
        .map(|&s| {
            let f = family_form(s).expect("catalogue families all exist");
            CatalogueEntry {
                name: f.name.clone(),
                p: f.p,
                alpha: f.alpha.clone(),
                beta: f.beta,
                m_min: f.m_min.clone(),
                chi: f.chi_rule,
                lambdas: f.basis.iter().map(|l| l.to_string()).collect(),
                coefficients: f.coeffs.iter().map(|c| c.to_string()).collect(),
            }
        })
        .collect()
}
