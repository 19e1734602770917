//! Exact and leading-order reference results.
//!
//! Perfect-conductor cavity profiles come in two independent routes: a
//! trigonometric form and one built on the polygamma function `ψ⁽³⁾`, which
//! is summed here directly rather than taken from a special-function
//! library.

use std::f64::consts::PI;

use crate::dielectric::DielectricModel;
use crate::error::{Error, Result};

fn check_width(a: f64) -> Result<()> {
    if !(a.is_finite() && a > 0.0) {
        return Err(Error::domain(format!("plate separation must be positive and finite, got {a}")));
    }
    Ok(())
}

fn check_gap_point(z: f64, a: f64) -> Result<()> {
    check_width(a)?;
    if z == 0.0 || z == a {
        return Err(Error::DivergesAtBoundary(format!("z = {z} lies on a plate")));
    }
    if !(z > 0.0 && z < a) {
        return Err(Error::domain(format!("field point must satisfy 0 < z < {a}, got {z}")));
    }
    Ok(())
}

/// Energy density between perfectly conducting plates, `−π²/(720a⁴)`.
pub fn pc_cavity_energy(a: f64) -> Result<f64> {
    check_width(a)?;
    Ok(-PI.powi(2) / (720.0 * a.powi(4)))
}

/// `(1 + 2cos²(πz/a))/sin⁴(πz/a)`
fn trig_profile(z: f64, a: f64) -> f64 {
    let (s, c) = (PI * z / a).sin_cos();
    (1.0 + 2.0 * c * c) / s.powi(4)
}

/// `⟨E²⟩` between perfect conductors, trigonometric form.
pub fn pc_cavity_e2(z: f64, a: f64) -> Result<f64> {
    check_gap_point(z, a)?;
    Ok(pc_cavity_energy(a)? + PI.powi(2) / (16.0 * a.powi(4)) * trig_profile(z, a))
}

/// `⟨B²⟩` between perfect conductors, trigonometric form.
pub fn pc_cavity_b2(z: f64, a: f64) -> Result<f64> {
    check_gap_point(z, a)?;
    Ok(pc_cavity_energy(a)? - PI.powi(2) / (16.0 * a.powi(4)) * trig_profile(z, a))
}

fn polygamma_profile(z: f64, a: f64) -> Result<f64> {
    let x = z / a;
    Ok((polygamma3(x)? + polygamma3(1.0 - x)?) / (32.0 * PI * PI * a.powi(4)))
}

/// `⟨E²⟩` between perfect conductors through `ψ⁽³⁾(z/a) + ψ⁽³⁾(1 − z/a)`.
pub fn pc_cavity_e2_polygamma(z: f64, a: f64) -> Result<f64> {
    check_gap_point(z, a)?;
    Ok(pc_cavity_energy(a)? + polygamma_profile(z, a)?)
}

pub fn pc_cavity_b2_polygamma(z: f64, a: f64) -> Result<f64> {
    check_gap_point(z, a)?;
    Ok(pc_cavity_energy(a)? - polygamma_profile(z, a)?)
}

/// Direct terms summed before the asymptotic tail takes over.
pub const POLYGAMMA_DIRECT_TERMS: usize = 20;

/// `ψ⁽³⁾(x) = 6·Σ_{n≥0} (x + n)⁻⁴` for `x > 0`.
pub fn polygamma3(x: f64) -> Result<f64> {
    polygamma3_with_terms(x, POLYGAMMA_DIRECT_TERMS)
}

/// [`polygamma3`] with an explicit number of directly summed terms; the
/// remainder `Σ_{n≥terms}` is closed by Euler–Maclaurin.
pub fn polygamma3_with_terms(x: f64, terms: usize) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain(format!("polygamma of order 3 needs finite x > 0, got {x}")));
    }
    let terms = terms.max(10);
    // summed from the smallest term up
    let direct: f64 = (0..terms).rev().map(|n| (x + n as f64).powi(-4)).sum();
    let w = x + terms as f64;
    let iw = 1.0 / w;
    let iw2 = iw * iw;
    // 6·[∫_w^∞ s⁻⁴ds + w⁻⁴/2 − Σ B₂ₖ/(2k)!·f⁽²ᵏ⁻¹⁾(w)]
    let tail = iw2
        * iw
        * (2.0 + iw * (3.0 + iw * (2.0 + iw2 * (-1.0 + iw2 * (4.0 / 3.0 + iw2 * (-3.0 + iw2 * 10.0))))));
    Ok(6.0 * direct + tail)
}

/// `⟨E²⟩ = 3/(16π²z⁴)` outside a perfectly conducting wall.
pub fn pc_single_e2(z: f64) -> Result<f64> {
    if !(z > 0.0 && z.is_finite()) {
        return Err(Error::domain(format!("field point must satisfy z > 0, got {z}")));
    }
    Ok(3.0 / (16.0 * PI * PI * z.powi(4)))
}

/// `⟨B²⟩ = −3/(16π²z⁴)` outside a perfectly conducting wall.
pub fn pc_single_b2(z: f64) -> Result<f64> {
    Ok(-pc_single_e2(z)?)
}

/// Large-distance atom–wall potential `−3α₀/(32π²z⁴) = −½α₀⟨E²⟩`.
pub fn casimir_polder(z: f64, alpha0: f64) -> Result<f64> {
    if !alpha0.is_finite() {
        return Err(Error::domain("polarizability must be finite"));
    }
    Ok(-0.5 * alpha0 * pc_single_e2(z)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AsymptoteFormula {
    /// `U ~ √2ω_p/(64π z³)`
    NearWallEnergy,
    /// `⟨E²⟩ ~ √2ω_p/(32π z³)`
    NearWallESquared,
    /// `⟨B²⟩ ~ −5ω_p²/(96π² z²)`
    NearWallBSquared,
}

/// Leading term `coefficient · z^power` of a small-distance expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoteReport {
    pub leading_coefficient: f64,
    pub power: i32,
    pub formula: AsymptoteFormula,
}

impl AsymptoteReport {
    pub fn evaluate(&self, z: f64) -> f64 {
        self.leading_coefficient * z.powi(self.power)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NearWallAsymptotes {
    pub energy: AsymptoteReport,
    pub e2: AsymptoteReport,
    pub b2: AsymptoteReport,
}

/// Leading near-wall behavior outside a Drude half-space.
///
/// The `⟨B²⟩` coefficient comes from the `u⁻²` tails of both reflection
/// coefficients: `∫(2 − t²)r dt` and `−∫t²r′ dt` each contribute
/// `−5ω_p²/(12u²)`, and `(1/4π²)∫u·e^{−2uz}du = 1/(16π²z²)`.
pub fn near_wall_asymptotes(model: &DielectricModel) -> Result<NearWallAsymptotes> {
    let wp = match *model {
        DielectricModel::Drude { plasma_frequency } => plasma_frequency,
        _ => {
            return Err(Error::NotApplicable(
                "near-wall asymptotes are defined for the Drude model only".into(),
            ))
        }
    };
    let sqrt2 = std::f64::consts::SQRT_2;
    Ok(NearWallAsymptotes {
        energy: AsymptoteReport {
            leading_coefficient: sqrt2 * wp / (64.0 * PI),
            power: -3,
            formula: AsymptoteFormula::NearWallEnergy,
        },
        e2: AsymptoteReport {
            leading_coefficient: sqrt2 * wp / (32.0 * PI),
            power: -3,
            formula: AsymptoteFormula::NearWallESquared,
        },
        b2: AsymptoteReport {
            leading_coefficient: -5.0 * wp * wp / (96.0 * PI * PI),
            power: -2,
            formula: AsymptoteFormula::NearWallBSquared,
        },
    })
}
