//! Recover the three-term structural coefficients from a sequence of exact
//! chromatic polynomials: solve the 3×3 system in λ powers by Cramer's rule
//! over the rational-function field, validate on held-out samples, and
//! divide out the forced factors q, q(q−1), q(q²−3q+1).

use crate::error::{ChromaError, Result};
use crate::exact::{Poly, RatFun};

use super::form::{KappaForm, LambdaBasis};

/// Fit P(m) = Σ_j c_j λ_j^m from ≥ 5 samples (3 consecutive to solve, the
/// rest to validate). Returns the κ's; `NotThisForm` when the sequence does
/// not fit the basis (wrong λ's, non-polynomial coefficients, or missing
/// forced factors).
pub fn fit_structure(samples: &[(i64, Poly)], basis: &LambdaBasis) -> Result<KappaForm> {
    if samples.len() < 5 {
        return Err(ChromaError::BadParameter(format!(
            "need ≥ 5 samples (3 to solve + 2 to validate), got {}",
            samples.len()
        )));
    }
    let mut samples = samples.to_vec();
    samples.sort_by_key(|(m, _)| *m);
    for w in samples.windows(2) {
        if w[1].0 != w[0].0 + 1 {
            return Err(ChromaError::BadParameter(
                "samples must have consecutive m values".into(),
            ));
        }
    }
    let m0 = samples[0].0;
    if m0 < 0 {
        return Err(ChromaError::BadParameter("m must be nonnegative".into()));
    }
    let lams = &basis.terms;
    assert_eq!(lams.len(), 3, "three-term basis expected");

    // matrix M[k][j] = λ_j^{m0+k}, k = 0..3
    let mat: Vec<Vec<Poly>> = (0..3)
        .map(|k| {
            lams.iter()
                .map(|l| l.pow((m0 + k as i64) as usize))
                .collect()
        })
        .collect();
    let rhs: Vec<&Poly> = samples[..3].iter().map(|(_, p)| p).collect();

    let det3 = |m: &[Vec<Poly>]| -> Poly {
        let a = |r: usize, c: usize| &m[r][c];
        let mut acc = Poly::zero();
        acc = &acc + &(a(0, 0) * &(&(a(1, 1) * a(2, 2)) - &(a(1, 2) * a(2, 1))));
        acc = &acc - &(a(0, 1) * &(&(a(1, 0) * a(2, 2)) - &(a(1, 2) * a(2, 0))));
        acc = &acc + &(a(0, 2) * &(&(a(1, 0) * a(2, 1)) - &(a(1, 1) * a(2, 0))));
        acc
    };

    let d = det3(&mat);
    if d.is_zero() {
        return Err(ChromaError::NotThisForm("degenerate λ-power system".into()));
    }
    let mut cs: Vec<RatFun> = Vec::with_capacity(3);
    for j in 0..3 {
        let mut mj = mat.clone();
        for k in 0..3 {
            mj[k][j] = rhs[k].clone();
        }
        cs.push(RatFun::new(det3(&mj), d.clone()));
    }

    // validate the remaining samples exactly
    for (m, p) in &samples[3..] {
        let mut acc = RatFun::zero();
        for (j, c) in cs.iter().enumerate() {
            acc = &acc + &c.mul_poly(&lams[j].pow(*m as usize));
        }
        if acc != RatFun::from_poly(p.clone()) {
            return Err(ChromaError::NotThisForm(format!(
                "validation failed at m = {m}"
            )));
        }
    }

    // forced factors
    let q = Poly::q();
    let q1 = &q * &Poly::linear(-1);
    let golden = &q * &super::golden_quadratic();
    let extract = |c: &RatFun, f: &Poly, which: &str| -> Result<Poly> {
        let p = c
            .as_poly()
            .ok_or_else(|| ChromaError::NotThisForm(format!("{which} is not polynomial")))?;
        p.exact_div(f)
            .ok_or_else(|| ChromaError::NotThisForm(format!("{which} lacks its forced factor")))
    };
    Ok(KappaForm {
        kappa1: extract(&cs[0], &q, "c1")?,
        kappa2: extract(&cs[1], &q1, "c2")?,
        kappa3: extract(&cs[2], &golden, "c3")?,
    })
}
