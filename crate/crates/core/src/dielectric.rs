//! Material response on the imaginary-frequency axis and the two planar
//! reflection coefficients expressed in the polar variables `(u, t)`.
//!
//! With `ζ = u·t` (Euclidean frequency) and `k = u·√(1 − t²)` (transverse
//! momentum), the vacuum decay constant is `κ₀ = u` and the medium's is
//! `κ₁ = √(k² + ε(iζ)·ζ²)`. All quantities are in natural units `ħ = c = 1`.

use crate::error::{Error, Result};

/// Dielectric function `ε(iζ)` of the half-space(s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DielectricModel {
    /// Collisionless Drude metal, `ε(iζ) = 1 + ω_p²/ζ²`.
    Drude { plasma_frequency: f64 },
    /// Nondispersive dielectric with `ε = ε_d > 1` at all frequencies.
    ConstantEpsilon { epsilon: f64 },
    /// `ε → ∞`: `r = −1`, `r′ = +1` exactly.
    PerfectConductor,
    /// No medium at all; both reflection coefficients vanish.
    Vacuum,
}

impl DielectricModel {
    pub fn drude(plasma_frequency: f64) -> Result<Self> {
        let m = DielectricModel::Drude { plasma_frequency };
        m.validate()?;
        Ok(m)
    }

    pub fn constant_epsilon(epsilon: f64) -> Result<Self> {
        let m = DielectricModel::ConstantEpsilon { epsilon };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            DielectricModel::Drude { plasma_frequency } => {
                if !(plasma_frequency.is_finite() && plasma_frequency > 0.0) {
                    return Err(Error::domain(format!(
                        "Drude plasma frequency must be positive and finite, got {plasma_frequency}"
                    )));
                }
            }
            DielectricModel::ConstantEpsilon { epsilon } => {
                if !(epsilon.is_finite() && epsilon > 1.0) {
                    return Err(Error::domain(format!(
                        "constant permittivity must exceed 1 and be finite, got {epsilon}"
                    )));
                }
            }
            DielectricModel::PerfectConductor | DielectricModel::Vacuum => {}
        }
        Ok(())
    }

    /// `ε(iζ)`. The perfect conductor returns `+∞`; callers branch on the
    /// variant before doing arithmetic with it.
    pub fn epsilon_imag_axis(&self, zeta: f64) -> Result<f64> {
        if !(zeta >= 0.0) {
            return Err(Error::domain(format!("imaginary frequency must be >= 0, got {zeta}")));
        }
        match *self {
            DielectricModel::Drude { plasma_frequency } => {
                if zeta == 0.0 {
                    return Err(Error::domain("Drude permittivity has a pole at zeta = 0"));
                }
                Ok(1.0 + (plasma_frequency / zeta).powi(2))
            }
            DielectricModel::ConstantEpsilon { epsilon } => Ok(epsilon),
            DielectricModel::PerfectConductor => Ok(f64::INFINITY),
            DielectricModel::Vacuum => Ok(1.0),
        }
    }

    /// `(r, r′)` at a polar node.
    pub fn reflection_pair(&self, node: PolarNode) -> ReflectionPair {
        let PolarNode { u, t } = node;
        match *self {
            DielectricModel::Drude { plasma_frequency: wp } => {
                if u == 0.0 {
                    return ReflectionPair::PERFECT;
                }
                let wp2 = wp * wp;
                let s = u.hypot(wp);
                // (u - s)/(u + s) rewritten without cancellation
                let r = -wp2 / ((u + s) * (u + s));
                let ut2 = u * t * t;
                let num = wp2 * (1.0 - ut2 / (u + s));
                let den = ut2 * u + wp2 + ut2 * s;
                ReflectionPair { r, r_prime: num / den }
            }
            DielectricModel::ConstantEpsilon { epsilon } => {
                // κ₁/κ₀ depends on t only
                let ratio = (1.0 + (epsilon - 1.0) * t * t).sqrt();
                ReflectionPair {
                    r: (1.0 - ratio) / (1.0 + ratio),
                    r_prime: (epsilon - ratio) / (epsilon + ratio),
                }
            }
            DielectricModel::PerfectConductor => ReflectionPair::PERFECT,
            DielectricModel::Vacuum => ReflectionPair::ZERO,
        }
    }

    /// Width in `t` of the sharpest feature of `r′(u, ·)`, used to grade the
    /// inner quadrature. For a Drude metal `r′` falls from 1 over
    /// `t ~ ω_p/u`, which becomes very narrow far above the plasma frequency.
    pub fn t_feature_width(&self, u: f64) -> f64 {
        match *self {
            DielectricModel::Drude { plasma_frequency } if u > plasma_frequency => {
                plasma_frequency / u
            }
            _ => 1.0,
        }
    }

    /// Plasma frequency for Drude, `None` otherwise.
    pub fn plasma_frequency(&self) -> Option<f64> {
        match *self {
            DielectricModel::Drude { plasma_frequency } => Some(plasma_frequency),
            _ => None,
        }
    }
}

/// Quadrature node in polar variables: `u = √(ζ² + k²)`, `t = cos θ = ζ/u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarNode {
    pub u: f64,
    pub t: f64,
}

impl PolarNode {
    pub fn new(u: f64, t: f64) -> Result<Self> {
        if !(u >= 0.0 && u.is_finite()) {
            return Err(Error::domain(format!("polar radius must be finite and >= 0, got {u}")));
        }
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::domain(format!("t = cos(theta) must lie in [0, 1], got {t}")));
        }
        Ok(PolarNode { u, t })
    }

    pub fn zeta(&self) -> f64 {
        self.u * self.t
    }

    pub fn k(&self) -> f64 {
        self.u * (1.0 - self.t * self.t).max(0.0).sqrt()
    }
}

/// Reflection coefficients for the two polarizations: `r` for the electric
/// vector perpendicular to the plane of incidence (TE), `r_prime` for the
/// parallel one (TM).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionPair {
    pub r: f64,
    pub r_prime: f64,
}

impl ReflectionPair {
    pub const PERFECT: ReflectionPair = ReflectionPair { r: -1.0, r_prime: 1.0 };
    pub const ZERO: ReflectionPair = ReflectionPair { r: 0.0, r_prime: 0.0 };

    pub fn swapped(self) -> Self {
        ReflectionPair { r: self.r_prime, r_prime: self.r }
    }
}
