//! Simultaneous complex root finding by Aberth–Ehrlich iteration on f64
//! coefficients, with conjugate symmetrization for real inputs.

use num_complex::Complex64;

use super::poly::Poly;
use super::rat_to_f64;
use crate::error::{ChromaError, Result};

/// A located complex root with its residual `|p(root)|`.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct ComplexRoot {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
}

impl ComplexRoot {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn is_real(&self) -> bool {
        self.im == 0.0
    }
}

const MAX_ITERS: usize = 1200;

/// Default seed for the initial-guess phases; override with `CHROMA_SEED`.
pub const DEFAULT_SEED: u64 = 0x00C0_FFEE;

/// Deterministic xorshift-based phase source; avoids pulling in an RNG crate
/// for the one place randomness is needed.
struct PhaseGen(u64);

impl PhaseGen {
    fn next_unit(&mut self) -> f64 {
        // xorshift64*
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        (x.wrapping_mul(0x2545_F491_4F6C_DD1D) >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// All complex roots of `p` (degree ≥ 1), conjugate-symmetrized.
/// The seed comes from the `CHROMA_SEED` environment variable when set.
pub fn all_complex_roots(p: &Poly) -> Result<Vec<ComplexRoot>> {
    let seed = std::env::var("CHROMA_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    all_complex_roots_seeded(p, seed)
}

pub fn all_complex_roots_seeded(p: &Poly, seed: u64) -> Result<Vec<ComplexRoot>> {
    assert!(p.degree() >= 1, "need degree ≥ 1");
    let n = p.degree();
    let coeffs: Vec<f64> = (0..=n).map(|i| rat_to_f64(&p.coeff(i))).collect();
    let max_c = coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
    let scaled: Vec<f64> = coeffs.iter().map(|c| c / max_c).collect();
    let deriv: Vec<f64> = scaled
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect();

    // Initial guesses on a root-enclosing circle with random phases. The
    // radius is the tighter of the Cauchy bound 1 + max|c_i/c_n| and the
    // Fujiwara bound 2·max_k |c_{n−k}/c_n|^{1/k} (the Cauchy radius alone is
    // hopeless when a mid coefficient dwarfs the leading one).
    let lead = scaled[n];
    let cauchy = 1.0
        + scaled[..n]
            .iter()
            .fold(0.0_f64, |m, c| m.max((c / lead).abs()));
    let fujiwara = 2.0
        * (1..=n)
            .map(|k| (scaled[n - k] / lead).abs().powf(1.0 / k as f64))
            .fold(0.0_f64, f64::max);
    let radius = cauchy.min(fujiwara).max(1e-3);
    let mut rng = PhaseGen(seed | 1);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle =
                2.0 * std::f64::consts::PI * (k as f64 / n as f64 + 0.25 * rng.next_unit());
            Complex64::from_polar(radius, angle)
        })
        .collect();

    let eval = |c: &[f64], x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in c.iter().rev() {
            acc = acc * x + k;
        }
        acc
    };

    let mut converged = false;
    for _ in 0..MAX_ITERS {
        let mut max_step = 0.0_f64;
        for i in 0..n {
            let pz = eval(&scaled, z[i]);
            let dz = eval(&deriv, z[i]);
            let newton = if dz.norm() > 0.0 { pz / dz } else { pz };
            let mut repulse = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 1e-300 {
                        repulse += Complex64::new(1.0, 0.0) / d;
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulse;
            let step = if denom.norm() > 1e-300 { newton / denom } else { newton };
            z[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-14 * radius.max(1.0) {
            converged = true;
            break;
        }
    }
    if !converged {
        // A final residual check below decides whether this actually failed.
    }

    // A few Newton polishing passes.
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let pz = eval(&scaled, *zi);
            let dz = eval(&deriv, *zi);
            if dz.norm() > 0.0 {
                *zi -= pz / dz;
            }
        }
    }

    // Conjugate symmetrization: real coefficients force conjugate pairs.
    let im_tol = 1e-8 * radius.max(1.0);
    let mut used = vec![false; n];
    let mut roots: Vec<Complex64> = Vec::with_capacity(n);
    for i in 0..n {
        if used[i] {
            continue;
        }
        if z[i].im.abs() <= im_tol {
            roots.push(Complex64::new(z[i].re, 0.0));
            used[i] = true;
            continue;
        }
        // pair with the closest conjugate candidate
        let mut best: Option<(usize, f64)> = None;
        for j in 0..n {
            if j != i && !used[j] && z[j].im * z[i].im < 0.0 {
                let d = (z[j] - z[i].conj()).norm();
                if best.is_none_or(|(_, bd)| d < bd) {
                    best = Some((j, d));
                }
            }
        }
        match best {
            Some((j, d)) if d <= 1e-6 * radius.max(1.0) => {
                let re = (z[i].re + z[j].re) / 2.0;
                let im = (z[i].im.abs() + z[j].im.abs()) / 2.0;
                roots.push(Complex64::new(re, im));
                roots.push(Complex64::new(re, -im));
                used[i] = true;
                used[j] = true;
            }
            _ => {
                roots.push(z[i]);
                used[i] = true;
            }
        }
    }
    roots.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });

    // Accept each root if its residual is below the larger of the flat
    // 1e−8·max|c| target and the Horner evaluation-noise bound
    // 2n·ε·Σ|c_i||z|^i — beyond that, f64 cannot certify a smaller residual
    // even at an exact root.
    let mut out: Vec<ComplexRoot> = Vec::with_capacity(n);
    for r in &roots {
        let residual = eval(&scaled, *r).norm() * max_c;
        let noise: f64 = scaled
            .iter()
            .enumerate()
            .map(|(i, c)| c.abs() * r.norm().powi(i as i32))
            .sum::<f64>()
            * max_c;
        let tol = (1e-8 * max_c).max(2.0 * n as f64 * f64::EPSILON * noise);
        if residual > tol {
            return Err(ChromaError::NoConvergence(MAX_ITERS));
        }
        out.push(ComplexRoot {
            re: r.re,
            im: r.im,
            residual: residual.max(tol),
        });
    }
    Ok(out)
}
