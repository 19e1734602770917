//! Brute-force fixed-grid reference integrator.
//!
//! Shares no node placement with the adaptive engine: the `u` axis is a
//! plain trapezoid sum in `x = ln u`, the `t` axis a trapezoid sum after the
//! double-exponential map `t = 1/(1 + e^{−π·sinh y})`. Both sums converge
//! geometrically for the analytic integrands used here, so halving the
//! steps is a direct accuracy check. No adaptivity and no hints from the
//! integrand are used.

use std::f64::consts::PI;

use crate::dielectric::PolarNode;
use crate::error::{Error, Result};
use crate::quadrature::PolarIntegrand;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedGridIntegrator {
    /// Step in `ln u`.
    pub log_u_step: f64,
    /// Step in the double-exponential variable `y`.
    pub t_step: f64,
    /// `y` runs over `[−t_half_width, t_half_width]`.
    pub t_half_width: f64,
    /// Grid spans `u·d ∈ [u_lo_scaled, u_hi_scaled]` with `d` the decay scale.
    pub u_lo_scaled: f64,
    pub u_hi_scaled: f64,
}

impl Default for FixedGridIntegrator {
    fn default() -> Self {
        FixedGridIntegrator {
            log_u_step: 1.0 / 32.0,
            t_step: 1.0 / 64.0,
            t_half_width: 3.5,
            u_lo_scaled: 1e-8,
            u_hi_scaled: 100.0,
        }
    }
}

impl FixedGridIntegrator {
    /// Same grid with both steps halved.
    pub fn refined(&self) -> Self {
        FixedGridIntegrator {
            log_u_step: 0.5 * self.log_u_step,
            t_step: 0.5 * self.t_step,
            ..*self
        }
    }

    fn t_nodes(&self) -> Vec<(f64, f64)> {
        let n = (self.t_half_width / self.t_step).ceil() as i64;
        (-n..=n)
            .filter_map(|k| {
                let y = k as f64 * self.t_step;
                let v = PI * y.sinh();
                let t = 1.0 / (1.0 + (-v).exp());
                let one_minus_t = 1.0 / (1.0 + v.exp());
                let w = self.t_step * PI * y.cosh() * t * one_minus_t;
                (w > 0.0).then_some((t, w))
            })
            .collect()
    }

    pub fn integrate<I, const N: usize>(&self, f: &I, decay_scale: f64) -> Result<[f64; N]>
    where
        I: PolarIntegrand<N>,
    {
        if !(decay_scale.is_finite() && decay_scale > 0.0) {
            return Err(Error::InvalidDecayScale(decay_scale));
        }
        let t_nodes = self.t_nodes();
        let x_lo = (self.u_lo_scaled / decay_scale).ln();
        let x_hi = (self.u_hi_scaled / decay_scale).ln();
        let n = ((x_hi - x_lo) / self.log_u_step).ceil() as usize;
        let h = (x_hi - x_lo) / n as f64;

        let mut acc = [0.0; N];
        for i in 0..=n {
            let u = (x_lo + i as f64 * h).exp();
            let end_weight = if i == 0 || i == n { 0.5 } else { 1.0 };
            let mut inner = [0.0; N];
            for &(t, w) in &t_nodes {
                let v = f.eval(PolarNode { u, t });
                for (a, vi) in inner.iter_mut().zip(v) {
                    *a += w * vi;
                }
            }
            for (a, g) in acc.iter_mut().zip(inner) {
                *a += end_weight * h * u * g;
            }
        }
        Ok(acc)
    }

    pub fn integrate_scalar<F>(&self, f: F, decay_scale: f64) -> Result<f64>
    where
        F: Fn(PolarNode) -> f64,
    {
        let [v] = self.integrate(&|n: PolarNode| [f(n)], decay_scale)?;
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn polynomial_times_exponential() {
        let g = FixedGridIntegrator::default();
        for &z in &[0.01, 0.5, 4.0] {
            let v = g
                .integrate_scalar(|n| n.u.powi(3) * (-2.0 * n.u * z).exp() * (1.0 - n.t * n.t), 2.0 * z)
                .unwrap();
            assert_relative_eq!(v, (2.0 / 3.0) * 6.0 / (2.0 * z).powi(4), max_relative = 1e-12);
        }
    }

    #[test]
    fn narrow_endpoint_feature_in_t() {
        // ∫₀¹ w²/(t² + w²) dt = w·atan(1/w), w = 1e-5
        let g = FixedGridIntegrator::default();
        let w = 1e-5;
        let v = g
            .integrate_scalar(|n| n.u.powi(3) * (-n.u).exp() * w * w / (n.t * n.t + w * w), 1.0)
            .unwrap();
        assert_relative_eq!(v, 6.0 * w * (1.0 / w).atan(), max_relative = 1e-10);
    }
}
