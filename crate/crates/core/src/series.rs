//! Truncated complex Taylor-series arithmetic.
//!
//! A [`TaylorSeries`] stores dense coefficients `coeffs[k]` of `z^k` up to a
//! truncation order `N = coeffs.len() - 1`. Binary operations truncate to the
//! smaller operand order, so every coefficient of a result is exact given
//! exact inputs. Transcendental operations use the standard coefficient
//! recurrences driven by the logarithmic derivative.

use num_complex::Complex64;
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::R_MAX;

/// Tolerance under which a constant term counts as exactly 0 (or exactly 1)
/// for the normalized-branch preconditions. Composed constructions accumulate
/// round-off in the constant term, so an exact comparison would be too strict.
pub const CONSTANT_TERM_TOL: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq)]
pub enum SeriesError {
    /// Division requires a nonzero constant term in the divisor.
    DivisionByZeroConstantTerm,
    /// Normalized integration `∫ s(t)/t dt` requires `s(0) = 0`.
    NonvanishingConstantTerm { magnitude: f64 },
    /// `log`/`pow` require the normalized branch `s(0) = 1`.
    BranchPointAtOrigin { constant_term: Complex64 },
    /// Evaluation past the supported radius.
    RadiusOutOfRange { modulus: f64 },
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::DivisionByZeroConstantTerm => {
                write!(f, "division by a series with zero constant term")
            }
            SeriesError::NonvanishingConstantTerm { magnitude } => write!(
                f,
                "integrand s(t)/t needs s(0) = 0, got |s(0)| = {magnitude:.3e}"
            ),
            SeriesError::BranchPointAtOrigin { constant_term } => write!(
                f,
                "log/pow need constant term 1 (normalized branch), got {constant_term}"
            ),
            SeriesError::RadiusOutOfRange { modulus } => {
                write!(f, "|z| = {modulus} exceeds the evaluation radius {R_MAX}")
            }
        }
    }
}

impl std::error::Error for SeriesError {}

/// Result of an evaluation together with a crude truncation diagnostic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: Complex64,
    /// `|c_N| |z|^N / (1 - |z|)` — a heuristic bound on the discarded tail.
    pub tail_bound: f64,
}

/// Dense truncated power series with complex coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorSeries {
    coeffs: Vec<Complex64>,
}

impl TaylorSeries {
    /// Build from coefficients; `coeffs[k]` multiplies `z^k`. Must be nonempty.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        TaylorSeries { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// The constant `value`, padded with zeros up to `order`.
    pub fn constant(value: Complex64, order: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
        coeffs[0] = value;
        TaylorSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::constant(Complex64::new(0.0, 0.0), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Complex64::new(1.0, 0.0), order)
    }

    /// The monomial `z`, padded up to `order`.
    pub fn variable(order: usize) -> Self {
        assert!(order >= 1, "the monomial z needs order >= 1");
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
        coeffs[1] = Complex64::new(1.0, 0.0);
        TaylorSeries { coeffs }
    }

    /// Truncation order `N` (the highest retained power).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero past the truncation order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn truncated(&self, order: usize) -> Self {
        let n = order.min(self.order());
        TaylorSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        TaylorSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add_scalar(&self, value: Complex64) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] += value;
        TaylorSeries { coeffs }
    }

    /// Multiply by the monomial `z`; order grows by one.
    pub fn mul_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::new(0.0, 0.0));
        coeffs.extend_from_slice(&self.coeffs);
        TaylorSeries { coeffs }
    }

    /// Quotient via the standard recursion
    /// `q[k] = (a[k] - Σ_{j=1}^{k} b[j] q[k-j]) / b[0]`, truncated to the
    /// shared order.
    pub fn div(&self, divisor: &TaylorSeries) -> Result<TaylorSeries, SeriesError> {
        let b0 = divisor.coeffs[0];
        if b0.norm() < 1e-300 {
            return Err(SeriesError::DivisionByZeroConstantTerm);
        }
        let n = self.order().min(divisor.order());
        let mut q = vec![Complex64::new(0.0, 0.0); n + 1];
        for k in 0..=n {
            let mut acc = self.coeff(k);
            for j in 1..=k {
                acc -= divisor.coeff(j) * q[k - j];
            }
            q[k] = acc / b0;
        }
        Ok(TaylorSeries { coeffs: q })
    }

    /// Termwise derivative; the order drops by one. The derivative of a
    /// constant is the zero constant.
    pub fn derivative(&self) -> TaylorSeries {
        if self.order() == 0 {
            return TaylorSeries::zero(0);
        }
        let coeffs = (1..self.coeffs.len())
            .map(|k| self.coeffs[k] * k as f64)
            .collect();
        TaylorSeries { coeffs }
    }

    /// Termwise antiderivative `∫₀^z s(t) dt`; the order grows by one.
    pub fn antiderivative(&self) -> TaylorSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::new(0.0, 0.0));
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / (k + 1) as f64);
        }
        TaylorSeries { coeffs }
    }

    /// `∫₀^z s(t)/t dt` for series vanishing at the origin: coefficient `k`
    /// of the result is `s[k]/k`.
    pub fn integrate_g_over_t(&self) -> Result<TaylorSeries, SeriesError> {
        let c0 = self.coeffs[0].norm();
        if c0 > CONSTANT_TERM_TOL {
            return Err(SeriesError::NonvanishingConstantTerm { magnitude: c0 });
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); self.coeffs.len()];
        for k in 1..self.coeffs.len() {
            coeffs[k] = self.coeffs[k] / k as f64;
        }
        Ok(TaylorSeries { coeffs })
    }

    /// `z s'(z) / s(z)` — the logarithmic derivative scaled by `z`.
    ///
    /// Coefficient `k` of `z s'` is `k·s[k]`, so the quotient is exact to the
    /// full order of `s`.
    pub fn z_log_derivative(&self) -> Result<TaylorSeries, SeriesError> {
        let numer = TaylorSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * k as f64)
                .collect(),
        };
        numer.div(self)
    }

    /// `exp(s)` via `c[0] = exp(s[0])`,
    /// `c[k] = (1/k) Σ_{j=1}^{k} j s[j] c[k-j]`.
    pub fn exp(&self) -> TaylorSeries {
        let n = self.coeffs.len();
        let mut c = vec![Complex64::new(0.0, 0.0); n];
        c[0] = self.coeffs[0].exp();
        for k in 1..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 1..=k {
                acc += self.coeffs[j] * c[k - j] * j as f64;
            }
            c[k] = acc / k as f64;
        }
        TaylorSeries { coeffs: c }
    }

    /// `log(s)` on the normalized branch `s(0) = 1`:
    /// `c[k] = (s[k] - (1/k) Σ_{j=1}^{k-1} j c[j] s[k-j]) / s[0]`.
    pub fn log(&self) -> Result<TaylorSeries, SeriesError> {
        let a0 = self.coeffs[0];
        if (a0 - Complex64::new(1.0, 0.0)).norm() > CONSTANT_TERM_TOL {
            return Err(SeriesError::BranchPointAtOrigin { constant_term: a0 });
        }
        let n = self.coeffs.len();
        let mut c = vec![Complex64::new(0.0, 0.0); n];
        c[0] = a0.ln();
        for k in 1..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 1..k {
                acc += c[j] * self.coeffs[k - j] * j as f64;
            }
            c[k] = (self.coeffs[k] - acc / k as f64) / a0;
        }
        Ok(TaylorSeries { coeffs: c })
    }

    /// `s^p = exp(p log s)` on the normalized branch.
    pub fn powf(&self, p: f64) -> Result<TaylorSeries, SeriesError> {
        Ok(self.log()?.scale(Complex64::new(p, 0.0)).exp())
    }

    /// Horner evaluation of the truncated polynomial. `|z|` must stay within
    /// [`R_MAX`]; use [`TaylorSeries::evaluate_diagnostic`] for a tail bound.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64, SeriesError> {
        Ok(self.evaluate_diagnostic(z)?.value)
    }

    pub fn evaluate_diagnostic(&self, z: Complex64) -> Result<SeriesValue, SeriesError> {
        let r = z.norm();
        if r > R_MAX + 1e-9 {
            return Err(SeriesError::RadiusOutOfRange { modulus: r });
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        let n = self.order();
        let tail_bound = if r < 1.0 {
            self.coeffs[n].norm() * r.powi(n as i32) / (1.0 - r)
        } else {
            f64::INFINITY
        };
        Ok(SeriesValue {
            value: acc,
            tail_bound,
        })
    }
}

impl Add for &TaylorSeries {
    type Output = TaylorSeries;
    fn add(self, rhs: &TaylorSeries) -> TaylorSeries {
        let n = self.order().min(rhs.order());
        TaylorSeries {
            coeffs: (0..=n).map(|k| self.coeffs[k] + rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &TaylorSeries {
    type Output = TaylorSeries;
    fn sub(self, rhs: &TaylorSeries) -> TaylorSeries {
        let n = self.order().min(rhs.order());
        TaylorSeries {
            coeffs: (0..=n).map(|k| self.coeffs[k] - rhs.coeffs[k]).collect(),
        }
    }
}

impl Mul for &TaylorSeries {
    type Output = TaylorSeries;
    /// Cauchy product truncated to the shared order.
    fn mul(self, rhs: &TaylorSeries) -> TaylorSeries {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..=k {
                acc += self.coeff(j) * rhs.coeff(k - j);
            }
            *c = acc;
        }
        TaylorSeries { coeffs }
    }
}

// Wire format: a JSON array of [re, im] pairs, index = power.
impl Serialize for TaylorSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&[c.re, c.im])?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for TaylorSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PairsVisitor;
        impl<'de> Visitor<'de> for PairsVisitor {
            type Value = TaylorSeries;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a nonempty array of [re, im] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let mut coeffs = Vec::new();
                while let Some([re, im]) = seq.next_element::<[f64; 2]>()? {
                    coeffs.push(Complex64::new(re, im));
                }
                if coeffs.is_empty() {
                    return Err(de::Error::invalid_length(0, &self));
                }
                Ok(TaylorSeries { coeffs })
            }
        }
        deserializer.deserialize_seq(PairsVisitor)
    }
}
