//! Floating-point evaluation of the norm functional `p_{v,w}` on the torus.
//!
//! All norms are evaluated in the log domain: `log ‖t·v‖²` is a log-sum-exp
//! over the support with the dominant exponent factored out, so points such
//! as `|t| = 2^-64` along subgroups with large weights neither underflow nor
//! overflow.

use crate::error::{Error, Result};
use crate::lattice::OneParamSubgroup;
use crate::stability::WeightSupport;

/// `log2` of the two radii used by [`slope_along`].
pub const SLOPE_RADII_LOG2: (f64, f64) = (-60.0, -64.0);

/// A vector `v = Σ c_α e_α` through the moduli `|c_α|` of its coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector {
    support: WeightSupport,
    magnitudes: Vec<f64>,
}

impl CoefficientVector {
    pub fn new(support: WeightSupport, magnitudes: Vec<f64>) -> Result<Self> {
        Error::check_dim(support.len(), magnitudes.len())?;
        if let Some(bad) = magnitudes.iter().find(|&&c| !(c.is_finite() && c > 0.0)) {
            return Err(Error::input(format!("coefficient magnitudes must be positive and finite, got {bad}")));
        }
        Ok(CoefficientVector { support, magnitudes })
    }

    /// All coefficients equal to one.
    pub fn unit(support: WeightSupport) -> Self {
        let magnitudes = vec![1.0; support.len()];
        CoefficientVector { support, magnitudes }
    }

    pub fn support(&self) -> &WeightSupport {
        &self.support
    }

    pub fn magnitudes(&self) -> &[f64] {
        &self.magnitudes
    }
}

/// A point of the torus modulo its compact part, stored as `log |t_i|`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusPoint {
    log_moduli: Vec<f64>,
}

impl TorusPoint {
    pub fn from_moduli(moduli: &[f64]) -> Result<Self> {
        if let Some(bad) = moduli.iter().find(|&&t| !(t.is_finite() && t > 0.0)) {
            return Err(Error::input(format!("torus moduli must be positive, got {bad}")));
        }
        Ok(TorusPoint { log_moduli: moduli.iter().map(|t| t.ln()).collect() })
    }

    pub fn from_log_moduli(log_moduli: Vec<f64>) -> Self {
        TorusPoint { log_moduli }
    }

    /// `λ(s)` for real `s > 0` given as `ln s`.
    pub fn along(lam: &OneParamSubgroup, ln_s: f64) -> Self {
        TorusPoint { log_moduli: lam.coords().iter().map(|&l| l as f64 * ln_s).collect() }
    }

    pub fn log_moduli(&self) -> &[f64] {
        &self.log_moduli
    }
}

/// `log Σ_α |c_α|² Π_i |t_i|^{2 a_{α,i}}`.
pub fn log_norm_sq(t: &TorusPoint, v: &CoefficientVector) -> Result<f64> {
    Error::check_dim(v.support.context().ambient_dim(), t.log_moduli.len())?;
    let exps: Vec<f64> = v
        .support
        .weights()
        .iter()
        .zip(&v.magnitudes)
        .map(|(a, c)| {
            let lin: f64 = a.coords().iter().zip(&t.log_moduli).map(|(&ai, lt)| ai as f64 * lt).sum();
            2.0 * lin + 2.0 * c.ln()
        })
        .collect();
    let top = exps.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let rest: f64 = exps.iter().map(|e| (e - top).exp()).sum();
    Ok(top + rest.ln())
}

pub fn norm_sq(t: &TorusPoint, v: &CoefficientVector) -> Result<f64> {
    log_norm_sq(t, v).map(f64::exp)
}

/// `p_{v,w}(t) = log ‖t·w‖² − log ‖t·v‖²`.
pub fn p_value(t: &TorusPoint, v: &CoefficientVector, w: &CoefficientVector) -> Result<f64> {
    Ok(log_norm_sq(t, w)? - log_norm_sq(t, v)?)
}

/// Coefficient of `log |t|²` in `p_{v,w}(λ(t))` as `t → 0`, by a secant
/// between two small radii. It approximates `w_λ(w) − w_λ(v)`.
pub fn slope_along(lam: &OneParamSubgroup, v: &CoefficientVector, w: &CoefficientVector) -> Result<f64> {
    lam.require_nonzero()?;
    let ln2 = std::f64::consts::LN_2;
    let (l1, l2) = (SLOPE_RADII_LOG2.0 * ln2, SLOPE_RADII_LOG2.1 * ln2);
    let p1 = p_value(&TorusPoint::along(lam, l1), v, w)?;
    let p2 = p_value(&TorusPoint::along(lam, l2), v, w)?;
    Ok((p2 - p1) / (2.0 * l2 - 2.0 * l1))
}

/// `max_{a ∈ A(w)} ⟨a, θ⟩ − max_{a ∈ A(v)} ⟨a, θ⟩`.
pub fn f_energy(theta: &[f64], v: &WeightSupport, w: &WeightSupport) -> Result<f64> {
    let max_over = |s: &WeightSupport| -> Result<f64> {
        Error::check_dim(s.context().ambient_dim(), theta.len())?;
        Ok(s.weights()
            .iter()
            .map(|a| a.coords().iter().zip(theta).map(|(&x, t)| x as f64 * t).sum::<f64>())
            .fold(f64::NEG_INFINITY, f64::max))
    };
    Ok(max_over(w)? - max_over(v)?)
}
