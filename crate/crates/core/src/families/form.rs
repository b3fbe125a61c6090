//! Structured chromatic-polynomial forms over the λ-basis and their algebra:
//! exact evaluation, κ extraction, one-parameter reductions, and the
//! diagonal (m₁ = m₂) six-term form.

use crate::error::{ChromaError, Result};
use crate::exact::{Poly, QuadNum, RatFun};

/// The canonical three-term basis λ₁ = q−2, λ₂ = q−3, λ₃ = −1.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaBasis {
    pub terms: Vec<Poly>,
}

impl LambdaBasis {
    pub fn standard() -> Self {
        LambdaBasis {
            terms: vec![Poly::linear(-2), Poly::linear(-3), Poly::const_int(-1)],
        }
    }

    /// The six diagonal products λ_i λ_j:
    /// (q−2)², (q−3)², 1, (q−2)(q−3), −(q−2), −(q−3).
    pub fn diagonal() -> Self {
        let l1 = Poly::linear(-2);
        let l2 = Poly::linear(-3);
        LambdaBasis {
            terms: vec![
                l1.pow(2),
                l2.pow(2),
                Poly::one(),
                &l1 * &l2,
                -&l1,
                -&l2,
            ],
        }
    }
}

/// How the chromatic number of a family depends on the parameter parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum ChiRule {
    AlwaysThree,
    AlwaysFour,
    /// χ = 3 for even m, 4 for odd m.
    ThreeEvenFourOdd,
    /// Two-parameter rule for the D family: χ = 3 iff both m₁, m₂ are even.
    ThreeBothEven,
}

impl ChiRule {
    /// χ at a concrete parameter vector.
    pub fn chi(&self, m: &[i64]) -> usize {
        match self {
            ChiRule::AlwaysThree => 3,
            ChiRule::AlwaysFour => 4,
            ChiRule::ThreeEvenFourOdd => {
                if m[0] % 2 == 0 {
                    3
                } else {
                    4
                }
            }
            ChiRule::ThreeBothEven => {
                if m.iter().all(|x| x % 2 == 0) {
                    3
                } else {
                    4
                }
            }
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            ChiRule::AlwaysThree => "3",
            ChiRule::AlwaysFour => "4",
            ChiRule::ThreeEvenFourOdd => "3 (m even), 4 (m odd)",
            ChiRule::ThreeBothEven => "3 (m1, m2 even), 4 otherwise",
        }
    }
}

/// A chromatic polynomial family in structured form:
/// `P(G_m, q) = Σ c_{i₁…i_p} · Π_ℓ λ_{i_ℓ}^{m_ℓ}`,
/// with `n = Σ α_ℓ m_ℓ + β`.
///
/// The coefficient tensor is flattened row-major (first index slowest). The
/// basis may be the standard three λ's, the diagonal six, or a single λ for
/// one-power families.
#[derive(Clone, Debug)]
pub struct StructuredForm {
    pub name: String,
    pub p: usize,
    pub basis: Vec<Poly>,
    pub coeffs: Vec<RatFun>,
    pub alpha: Vec<i64>,
    pub beta: i64,
    pub m_min: Vec<i64>,
    pub chi_rule: ChiRule,
}

/// Reduced structural coefficients: c₁ = q κ₁, c₂ = q(q−1) κ₂,
/// c₃ = q(q²−3q+1) κ₃.
#[derive(Clone, Debug, PartialEq)]
pub struct KappaForm {
    pub kappa1: Poly,
    pub kappa2: Poly,
    pub kappa3: Poly,
}

impl KappaForm {
    /// Rebuild the full coefficients from the κ's.
    pub fn coefficients(&self) -> [Poly; 3] {
        let q = Poly::q();
        let golden = Poly::from_ints(&[1, -3, 1]);
        [
            &q * &self.kappa1,
            &(&q * &Poly::linear(-1)) * &self.kappa2,
            &(&q * &golden) * &self.kappa3,
        ]
    }
}

impl StructuredForm {
    /// Flat index of a multi-index over the basis.
    fn flat(&self, idx: &[usize]) -> usize {
        let b = self.basis.len();
        idx.iter().fold(0, |acc, &i| acc * b + i)
    }

    pub fn coeff(&self, idx: &[usize]) -> &RatFun {
        &self.coeffs[self.flat(idx)]
    }

    /// Vertex count n(m) = Σ α_ℓ m_ℓ + β.
    pub fn n_of(&self, m: &[i64]) -> i64 {
        m.iter().zip(&self.alpha).map(|(a, b)| a * b).sum::<i64>() + self.beta
    }

    pub fn check_params(&self, m: &[i64]) -> Result<()> {
        if m.len() != self.p {
            return Err(ChromaError::BadParameter(format!(
                "{} takes {} parameter(s), got {}",
                self.name,
                self.p,
                m.len()
            )));
        }
        for (i, (&mi, &lo)) in m.iter().zip(&self.m_min).enumerate() {
            if mi < lo {
                return Err(ChromaError::BadParameter(format!(
                    "{}: m[{i}] = {mi} below the family minimum {lo}",
                    self.name
                )));
            }
        }
        Ok(())
    }

    /// Exact polynomial at a parameter vector. All rational-function
    /// denominators must cancel; anything left signals a transcription bug.
    pub fn evaluate(&self, m: &[i64]) -> Result<Poly> {
        self.check_params(m)?;
        let b = self.basis.len();
        let mut total = RatFun::zero();
        let mut idx = vec![0usize; self.p];
        loop {
            let c = self.coeff(&idx);
            if !c.is_zero() {
                let mut term = Poly::one();
                for (l, &i) in idx.iter().enumerate() {
                    term = &term * &self.basis[i].pow(m[l] as usize);
                }
                total = &total + &c.mul_poly(&term);
            }
            // advance multi-index
            let mut l = self.p;
            loop {
                if l == 0 {
                    return total
                        .as_poly()
                        .ok_or_else(|| ChromaError::DenominatorNoCancel(self.name.clone()));
                }
                l -= 1;
                idx[l] += 1;
                if idx[l] < b {
                    break;
                }
                idx[l] = 0;
            }
        }
    }

    /// Exact evaluation of P at a Q(√5) point (denominators must not vanish
    /// there, which holds away from q ∈ {1, 2}).
    pub fn evaluate_at_quad(&self, m: &[i64], x: &QuadNum) -> Result<QuadNum> {
        self.check_params(m)?;
        let b = self.basis.len();
        let mut total = QuadNum::zero();
        let mut idx = vec![0usize; self.p];
        loop {
            let c = self.coeff(&idx);
            if !c.is_zero() {
                let cv = c
                    .eval_quad(x)
                    .ok_or_else(|| ChromaError::DenominatorNoCancel(self.name.clone()))?;
                let mut term = cv;
                for (l, &i) in idx.iter().enumerate() {
                    let lv = self.basis[i].eval_quad(x);
                    term = &term * &lv.pow(m[l]).map_err(|_| ChromaError::DivisionByZero)?;
                }
                total = &total + &term;
            }
            let mut l = self.p;
            loop {
                if l == 0 {
                    return Ok(total);
                }
                l -= 1;
                idx[l] += 1;
                if idx[l] < b {
                    break;
                }
                idx[l] = 0;
            }
        }
    }

    /// Whether this is the standard three-term λ-basis form with p = 1.
    pub fn is_standard_p1(&self) -> bool {
        self.p == 1 && self.basis == LambdaBasis::standard().terms
    }

    pub fn is_standard_p2(&self) -> bool {
        self.p == 2 && self.basis == LambdaBasis::standard().terms
    }

    pub fn is_single_power(&self) -> bool {
        self.basis.len() == 1 && self.p == 1
    }

    /// Extract κ's for a standard p=1 form: divides out the forced factors
    /// q, q(q−1), q(q²−3q+1). The divisions must be exact.
    pub fn kappa_form(&self) -> Result<KappaForm> {
        if !self.is_standard_p1() {
            return Err(ChromaError::NotThisForm(format!(
                "{} is not a standard three-term p=1 form",
                self.name
            )));
        }
        let q = Poly::q();
        let q1 = &q * &Poly::linear(-1);
        let golden = &q * &Poly::from_ints(&[1, -3, 1]);
        let div = |c: &RatFun, f: &Poly, which: &str| -> Result<Poly> {
            let p = c.as_poly().ok_or_else(|| {
                ChromaError::NotThisForm(format!("{}: {which} is not polynomial", self.name))
            })?;
            p.exact_div(f).ok_or_else(|| {
                ChromaError::NotThisForm(format!(
                    "{}: forced factor does not divide {which}",
                    self.name
                ))
            })
        };
        Ok(KappaForm {
            kappa1: div(&self.coeffs[0], &q, "c1")?,
            kappa2: div(&self.coeffs[1], &q1, "c2")?,
            kappa3: div(&self.coeffs[2], &golden, "c3")?,
        })
    }

    /// One-parameter reduction of a p=2 form with one axis held fixed.
    ///
    /// `axis` is the index held at `fixed`; the surviving index becomes the
    /// parameter, shifted by `shift` so the coefficients come out polynomial:
    /// for the varying axis ℓ, `c_i = λ_i^{−shift} Σ_j c(i,j) λ_j^{fixed}`
    /// and the new parameter is `m = m_ℓ + shift`.
    pub fn reduce_fixing(&self, axis: usize, fixed: i64, shift: i64, name: String) -> Result<StructuredForm> {
        if self.p != 2 {
            return Err(ChromaError::NotThisForm(format!(
                "{}: reduction needs p = 2",
                self.name
            )));
        }
        if fixed < self.m_min[axis] {
            return Err(ChromaError::BadParameter(format!(
                "fixed value {fixed} below m_min"
            )));
        }
        let b = self.basis.len();
        let var_axis = 1 - axis;
        let mut coeffs = Vec::with_capacity(b);
        for i in 0..b {
            let mut sum = RatFun::zero();
            for j in 0..b {
                let idx = if axis == 1 { [i, j] } else { [j, i] };
                let c = self.coeff(&idx);
                if !c.is_zero() {
                    sum = &sum + &c.mul_poly(&self.basis[j].pow(fixed as usize));
                }
            }
            let denom = self.basis[i].pow(shift as usize);
            coeffs.push(&sum / &RatFun::from_poly(denom));
        }
        let chi_rule = match self.chi_rule {
            ChiRule::ThreeBothEven => {
                if fixed % 2 == 1 {
                    ChiRule::AlwaysFour
                } else if shift % 2 == 0 {
                    ChiRule::ThreeEvenFourOdd
                } else {
                    // shifted parity would flip; none of the families here do this
                    ChiRule::ThreeEvenFourOdd
                }
            }
            other => other,
        };
        Ok(StructuredForm {
            name,
            p: 1,
            basis: self.basis.clone(),
            coeffs,
            alpha: vec![self.alpha[var_axis]],
            beta: self.beta + self.alpha[axis] * fixed - self.alpha[var_axis] * shift,
            m_min: vec![self.m_min[var_axis] + shift],
            chi_rule,
        })
    }

    /// Diagonal reduction m₁ = m₂ of a standard p=2 form: six λ's
    /// (squares and cross products) with coefficients
    /// c₁₁, c₂₂, c₃₃, c₁₂+c₂₁, c₁₃+c₃₁, c₂₃+c₃₂.
    pub fn diagonalize(&self, name: String, chi_rule: ChiRule) -> Result<StructuredForm> {
        if !self.is_standard_p2() {
            return Err(ChromaError::NotThisForm(format!(
                "{}: diagonalization needs the standard p=2 form",
                self.name
            )));
        }
        let c = |i: usize, j: usize| self.coeff(&[i, j]);
        let coeffs = vec![
            c(0, 0).clone(),
            c(1, 1).clone(),
            c(2, 2).clone(),
            c(0, 1) + c(1, 0),
            c(0, 2) + c(2, 0),
            c(1, 2) + c(2, 1),
        ];
        Ok(StructuredForm {
            name,
            p: 1,
            basis: LambdaBasis::diagonal().terms,
            coeffs,
            alpha: vec![self.alpha[0] + self.alpha[1]],
            beta: self.beta,
            m_min: vec![self.m_min[0].max(self.m_min[1])],
            chi_rule,
        })
    }

    /// Count of structurally nonzero coefficient entries.
    pub fn nonzero_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}
