//! Field profiles, midgap scans over `Λ = ω_p·a`, the critical `Λ` at which
//! the midgap energy density changes sign, and the small-distance reduction
//! of the cavity result to the single-wall one.
//!
//! Independent points are evaluated in parallel; results are always
//! returned in input order.

use rayon::prelude::*;

use crate::dielectric::DielectricModel;
use crate::error::{Error, Result};
use crate::integrand::{FieldIntegrand, Geometry};
use crate::quadrature::{integrate_polar, QuadratureConfig};

/// `ħc` in eV·nm (CODATA 2018).
pub const HBAR_C_EV_NM: f64 = 197.326_980_4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldPoint {
    pub z: f64,
    pub e2: f64,
    pub b2: f64,
    /// Energy density.
    pub u: f64,
    /// Largest of the three quadrature error estimates.
    pub err: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub geometry: Geometry,
    pub model: DielectricModel,
    pub points: Vec<FieldPoint>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanPoint {
    /// `Λ = ω_p·a`
    pub lambda: f64,
    /// `U(a/2)·a⁴`
    pub u_mid_scaled: f64,
}

/// `⟨E²⟩`, `⟨B²⟩` and `U` at one field point.
pub fn compute_point(geometry: Geometry, model: DielectricModel, z: f64, cfg: &QuadratureConfig) -> Result<FieldPoint> {
    compute_point_with(&FieldIntegrand::new(geometry, model, z)?, cfg)
}

/// Same as [`compute_point`] for a prepared integrand, e.g. one with the
/// polarizations swapped.
pub fn compute_point_with(integrand: &FieldIntegrand, cfg: &QuadratureConfig) -> Result<FieldPoint> {
    let z = integrand.z();
    if integrand.is_identically_zero() {
        cfg.validate()?;
        return Ok(FieldPoint { z, e2: 0.0, b2: 0.0, u: 0.0, err: 0.0 });
    }
    let [e2, b2, u] = integrate_polar(integrand, integrand.decay_scale(), cfg)?;
    Ok(FieldPoint {
        z,
        e2: e2.value,
        b2: b2.value,
        u: u.value,
        err: e2.error_estimate.max(b2.error_estimate).max(u.error_estimate),
    })
}

/// Evenly spaced sample positions for a profile.
///
/// Cavity: `[margin·a, (1 − margin)·a]`. Single interface: the caller's
/// `window = (z_min, z_max)`; `margin` is not used.
pub fn profile_positions(
    geometry: Geometry,
    n_points: usize,
    margin: f64,
    window: Option<(f64, f64)>,
) -> Result<Vec<f64>> {
    geometry.validate()?;
    if n_points == 0 {
        return Err(Error::domain("a profile needs at least one point"));
    }
    let (lo, hi) = match geometry {
        Geometry::Cavity { width } => {
            if !(margin > 0.0 && margin < 0.5) {
                return Err(Error::domain(format!("margin must lie in (0, 0.5), got {margin}")));
            }
            (margin * width, (1.0 - margin) * width)
        }
        Geometry::SingleInterface => {
            let (lo, hi) = window.ok_or_else(|| Error::domain("single-interface profiles need a z window"))?;
            if !(lo > 0.0 && hi > lo && hi.is_finite()) {
                return Err(Error::domain(format!("z window must satisfy 0 < z_min < z_max, got ({lo}, {hi})")));
            }
            (lo, hi)
        }
    };
    if n_points == 1 {
        return Ok(vec![0.5 * (lo + hi)]);
    }
    let step = (hi - lo) / (n_points - 1) as f64;
    Ok((0..n_points)
        .map(|i| if i + 1 == n_points { hi } else { lo + step * i as f64 })
        .collect())
}

pub fn profile(
    geometry: Geometry,
    model: DielectricModel,
    n_points: usize,
    margin: f64,
    window: Option<(f64, f64)>,
    cfg: &QuadratureConfig,
) -> Result<Profile> {
    model.validate()?;
    let zs = profile_positions(geometry, n_points, margin, window)?;
    let points = zs
        .par_iter()
        .map(|&z| compute_point(geometry, model, z, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(Profile { geometry, model, points })
}

/// `U(a/2)·a⁴` for a Drude cavity with `ω_p·a = Λ` (computed at `a = 1`).
pub fn midpoint_energy_scaled(lambda: f64, cfg: &QuadratureConfig) -> Result<f64> {
    let model = DielectricModel::drude(lambda)?;
    Ok(compute_point(Geometry::Cavity { width: 1.0 }, model, 0.5, cfg)?.u)
}

/// Log-spaced midgap scan over `Λ ∈ [lambda_min, lambda_max]`.
pub fn midpoint_scan(lambda_min: f64, lambda_max: f64, n: usize, cfg: &QuadratureConfig) -> Result<Vec<ScanPoint>> {
    if !(lambda_min > 0.0 && lambda_max.is_finite()) {
        return Err(Error::domain(format!("scan range must be positive and finite, got [{lambda_min}, {lambda_max}]")));
    }
    let lambdas: Vec<f64> = match n {
        0 => return Err(Error::domain("scan needs at least one point")),
        1 if lambda_min == lambda_max => vec![lambda_min],
        _ if lambda_max > lambda_min && n >= 2 => {
            let (l0, l1) = (lambda_min.ln(), lambda_max.ln());
            (0..n)
                .map(|i| match i {
                    0 => lambda_min,
                    _ if i + 1 == n => lambda_max,
                    _ => (l0 + (l1 - l0) * i as f64 / (n - 1) as f64).exp(),
                })
                .collect()
        }
        _ => return Err(Error::domain(format!("empty scan range [{lambda_min}, {lambda_max}] with {n} points"))),
    };
    lambdas
        .par_iter()
        .map(|&lambda| Ok(ScanPoint { lambda, u_mid_scaled: midpoint_energy_scaled(lambda, cfg)? }))
        .collect()
}

/// Root of `Λ ↦ U(a/2)·a⁴` by bisection inside `bracket`, to within `tol`.
pub fn critical_lambda(cfg: &QuadratureConfig, bracket: (f64, f64), tol: f64) -> Result<f64> {
    let (mut lo, mut hi) = bracket;
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(Error::domain(format!("bracket must satisfy 0 < lo < hi, got ({lo}, {hi})")));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    let mut f_lo = midpoint_energy_scaled(lo, cfg)?;
    let f_hi = midpoint_energy_scaled(hi, cfg)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::NoSignChange { lo, hi, f_lo, f_hi });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let f_mid = midpoint_energy_scaled(mid, cfg)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Critical plate separation in micrometers, `a_c = Λ_c·ħc/ω_p`.
pub fn critical_separation_physical(lambda_c: f64, omega_p_ev: f64) -> Result<f64> {
    if !(omega_p_ev > 0.0 && omega_p_ev.is_finite()) {
        return Err(Error::domain(format!("plasma frequency must be positive, got {omega_p_ev} eV")));
    }
    if !(lambda_c > 0.0 && lambda_c.is_finite()) {
        return Err(Error::domain(format!("critical lambda must be positive, got {lambda_c}")));
    }
    Ok(lambda_c * HBAR_C_EV_NM / omega_p_ev * 1e-3)
}

/// `U_cavity(z)/U_single(z)`, which tends to 1 as `z/a → 0`.
pub fn wall_reduction_check(a: f64, model: DielectricModel, z_small: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if matches!(model, DielectricModel::PerfectConductor | DielectricModel::Vacuum) {
        return Err(Error::NotApplicable(
            "the single-wall energy density vanishes for this model, so the ratio is undefined".into(),
        ));
    }
    let cavity = compute_point(Geometry::cavity(a)?, model, z_small, cfg)?;
    let single = compute_point(Geometry::SingleInterface, model, z_small, cfg)?;
    if single.u == 0.0 {
        return Err(Error::NotApplicable("single-wall energy density is zero".into()));
    }
    Ok(cavity.u / single.u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn positions() {
        let z = profile_positions(Geometry::Cavity { width: 2.0 }, 5, 0.1, None).unwrap();
        for (got, want) in z.iter().zip([0.2, 0.6, 1.0, 1.4, 1.8]) {
            assert_relative_eq!(*got, want, epsilon = 1e-15);
        }
        let z = profile_positions(Geometry::SingleInterface, 3, 0.02, Some((0.5, 5.0))).unwrap();
        assert_eq!(z, vec![0.5, 2.75, 5.0]);
        assert!(profile_positions(Geometry::SingleInterface, 3, 0.02, None).is_err());
        assert!(profile_positions(Geometry::Cavity { width: 1.0 }, 3, 0.5, None).is_err());
        assert!(profile_positions(Geometry::Cavity { width: 1.0 }, 0, 0.1, None).is_err());
    }

    #[test]
    fn vacuum_point_is_zero() {
        let p = compute_point(Geometry::SingleInterface, DielectricModel::Vacuum, 0.7, &QuadratureConfig::default()).unwrap();
        assert_eq!((p.e2, p.b2, p.u, p.err), (0.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn physical_separation() {
        assert_relative_eq!(critical_separation_physical(99.0, 14.8).unwrap(), 1.32, epsilon = 0.005);
        assert_relative_eq!(critical_separation_physical(99.0, 29.6).unwrap(), 0.66, epsilon = 0.005);
        assert!(critical_separation_physical(99.0, 0.0).is_err());
        assert!(critical_separation_physical(99.0, -3.0).is_err());
    }

    #[test]
    fn empty_scan_is_rejected() {
        let cfg = QuadratureConfig::default();
        assert!(midpoint_scan(100.0, 10.0, 5, &cfg).is_err());
        assert!(midpoint_scan(10.0, 100.0, 0, &cfg).is_err());
        assert!(midpoint_scan(0.0, 100.0, 5, &cfg).is_err());
    }

    #[test]
    fn degenerate_bracket() {
        let cfg = QuadratureConfig::default();
        assert!(matches!(critical_lambda(&cfg, (200.0, 300.0), 0.5), Err(Error::NoSignChange { .. })));
    }

    #[test]
    fn reduction_not_applicable_for_perfect_conductor() {
        let cfg = QuadratureConfig::default();
        assert!(matches!(
            wall_reduction_check(1.0, DielectricModel::PerfectConductor, 0.01, &cfg),
            Err(Error::NotApplicable(_))
        ));
    }
}
