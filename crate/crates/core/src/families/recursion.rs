//! Recursion relations implied by a λ-basis: coefficient synthesis from the
//! product expansion and exact verification against a structured form.

use crate::error::{ChromaError, Result};
use crate::exact::Poly;

use super::form::StructuredForm;

/// Coefficients b of `P(m) + Σ b_{i₁…i_p} P(m−i) = 0`, one per multi-index
/// with 0 ≤ i_ℓ ≤ j_max; the all-zero entry is 1.
#[derive(Clone, Debug)]
pub struct RecursionSpec {
    pub p: usize,
    pub j_max: usize,
    /// Flattened (j_max+1)^p tensor, first index slowest.
    pub b: Vec<Poly>,
}

impl RecursionSpec {
    pub fn coeff(&self, idx: &[usize]) -> &Poly {
        let k = self.j_max + 1;
        let flat = idx.iter().fold(0, |acc, &i| acc * k + i);
        &self.b[flat]
    }
}

/// One-dimensional coefficients from `∏_j (1 − λ_j x) = 1 + Σ b_j x^j`.
fn b_coeffs_1d(basis: &[Poly]) -> Vec<Poly> {
    // polynomial in x with Poly coefficients
    let mut bx: Vec<Poly> = vec![Poly::one()];
    for lam in basis {
        let mut next = vec![Poly::zero(); bx.len() + 1];
        for (i, c) in bx.iter().enumerate() {
            next[i] = &next[i] + c;
            next[i + 1] = &next[i + 1] - &(c * lam);
        }
        bx = next;
    }
    bx
}

/// Build the p-dimensional recursion from a basis: the tensor product of the
/// one-dimensional coefficient vectors.
pub fn recursion_from_basis(basis: &[Poly], p: usize) -> RecursionSpec {
    assert!(p >= 1);
    let b1 = b_coeffs_1d(basis);
    let k = b1.len(); // j_max + 1
    let total = k.pow(p as u32);
    let mut b = Vec::with_capacity(total);
    for flat in 0..total {
        let mut idx = vec![0usize; p];
        let mut rest = flat;
        for l in (0..p).rev() {
            idx[l] = rest % k;
            rest /= k;
        }
        let mut prod = Poly::one();
        for &i in &idx {
            prod = &prod * &b1[i];
        }
        b.push(prod);
    }
    RecursionSpec {
        p,
        j_max: k - 1,
        b,
    }
}

/// Check `P(m) + Σ b_i P(m − i) = 0` with exact polynomial arithmetic for
/// every multi-index in `lo..=hi` per axis (each lo must be ≥ m_min + j_max).
pub fn verify_recursion(
    f: &StructuredForm,
    spec: &RecursionSpec,
    lo: &[i64],
    hi: &[i64],
) -> Result<bool> {
    if spec.p != f.p || lo.len() != f.p || hi.len() != f.p {
        return Err(ChromaError::BadParameter(
            "dimension mismatch between form and recursion".into(),
        ));
    }
    for (l, &lo_l) in lo.iter().enumerate() {
        if lo_l < f.m_min[l] + spec.j_max as i64 {
            return Err(ChromaError::BadParameter(format!(
                "axis {l}: start {lo_l} below m_min + j_max = {}",
                f.m_min[l] + spec.j_max as i64
            )));
        }
    }
    let k = spec.j_max + 1;
    let mut m = lo.to_vec();
    loop {
        // Σ over the shift tensor
        let mut acc = Poly::zero();
        let total = k.pow(f.p as u32);
        for flat in 0..total {
            let mut idx = vec![0usize; f.p];
            let mut rest = flat;
            for l in (0..f.p).rev() {
                idx[l] = rest % k;
                rest /= k;
            }
            let shifted: Vec<i64> = m
                .iter()
                .zip(&idx)
                .map(|(&mi, &i)| mi - i as i64)
                .collect();
            let term = f.evaluate(&shifted)?;
            acc = &acc + &(&term * spec.coeff(&idx));
        }
        if !acc.is_zero() {
            return Ok(false);
        }
        // advance m
        let mut l = f.p;
        loop {
            if l == 0 {
                return Ok(true);
            }
            l -= 1;
            m[l] += 1;
            if m[l] <= hi[l] {
                break;
            }
            m[l] = lo[l];
        }
    }
}
