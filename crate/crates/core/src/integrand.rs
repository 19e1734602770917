//! Renormalized `(u, t)` integrands for `⟨E²⟩`, `⟨B²⟩` and the energy density
//! `U` outside one half-space and inside the gap between two.
//!
//! The free-space term (independent of position and divergent) never
//! appears: every function here returns the boundary-induced part only.

use std::f64::consts::PI;

use crate::dielectric::{DielectricModel, PolarNode, ReflectionPair};
use crate::error::{Error, Result};

/// Where the vacuum region is.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geometry {
    /// Vacuum for `z > 0`, medium for `z < 0`.
    SingleInterface,
    /// Vacuum for `0 < z < a`, medium on both sides.
    Cavity { width: f64 },
}

impl Geometry {
    pub fn cavity(width: f64) -> Result<Self> {
        let g = Geometry::Cavity { width };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if let Geometry::Cavity { width } = *self {
            if !(width.is_finite() && width > 0.0) {
                return Err(Error::domain(format!("cavity width must be positive and finite, got {width}")));
            }
        }
        Ok(())
    }

    /// Checks that `z` lies strictly inside the vacuum region.
    pub fn check_point(&self, z: f64) -> Result<()> {
        match *self {
            Geometry::SingleInterface => {
                if !(z.is_finite() && z > 0.0) {
                    return Err(Error::domain(format!("field point must satisfy z > 0, got {z}")));
                }
            }
            Geometry::Cavity { width } => {
                if !(z > 0.0 && z < width) {
                    return Err(Error::domain(format!(
                        "field point must satisfy 0 < z < {width}, got {z}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Exponential decay rate in `u` of the integrand at `z`: `2z` or
    /// `2·min(z, a − z)`.
    pub fn decay_scale(&self, z: f64) -> f64 {
        match *self {
            Geometry::SingleInterface => 2.0 * z,
            Geometry::Cavity { width } => 2.0 * z.min(width - z),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    ESquared,
    BSquared,
    EnergyDensity,
}

impl FieldKind {
    pub const ALL: [FieldKind; 3] = [FieldKind::ESquared, FieldKind::BSquared, FieldKind::EnergyDensity];
}

/// The two brackets of the cavity integrand, before the `u³/2π²` prefactor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityIntegrandTerms {
    /// Position-independent part, built from `r²e^{−2ua}/(1 − r²e^{−2ua})`.
    pub term_constant: f64,
    /// Part carrying `e^{−ua}·cosh[u(2z − a)]`.
    pub term_position: f64,
}

impl CavityIntegrandTerms {
    pub fn sum(&self) -> f64 {
        self.term_constant + self.term_position
    }
}

const SINGLE_PREFACTOR: f64 = 1.0 / (4.0 * PI * PI);
const CAVITY_PREFACTOR: f64 = 1.0 / (2.0 * PI * PI);

/// Angular bracket of the single-interface integrand.
pub fn single_bracket(kind: FieldKind, t: f64, p: ReflectionPair) -> f64 {
    let t2 = t * t;
    match kind {
        FieldKind::ESquared => -t2 * p.r + (2.0 - t2) * p.r_prime,
        FieldKind::BSquared => (2.0 - t2) * p.r - t2 * p.r_prime,
        FieldKind::EnergyDensity => (1.0 - t2) * (p.r + p.r_prime),
    }
}

/// Single-interface integrand from an explicit reflection pair.
pub fn single_integrand_with(kind: FieldKind, z: f64, node: PolarNode, pair: ReflectionPair) -> f64 {
    let u = node.u;
    SINGLE_PREFACTOR * u * u * u * single_bracket(kind, node.t, pair) * (-2.0 * u * z).exp()
}

/// `(1/4π²)·u³·B(t)·e^{−2uz}` for a half-space filling `z < 0`.
pub fn single_integrand(kind: FieldKind, model: &DielectricModel, z: f64, node: PolarNode) -> Result<f64> {
    Geometry::SingleInterface.check_point(z)?;
    Ok(single_integrand_with(kind, z, node, model.reflection_pair(node)))
}

/// `1 − r²e^{−2ua}` without cancellation when both `r² → 1` and `ua → 0`.
fn one_minus_r2q(r: f64, expm1_neg: f64) -> f64 {
    // (1 − r)(1 + r) + r²(1 − q), with 1 − q = −expm1(−2ua)
    (1.0 - r) * (1.0 + r) - r * r * expm1_neg
}

/// Cavity brackets from an explicit reflection pair.
pub fn cavity_terms_with(
    kind: FieldKind,
    a: f64,
    z: f64,
    node: PolarNode,
    pair: ReflectionPair,
) -> CavityIntegrandTerms {
    let PolarNode { u, t } = node;
    if u == 0.0 || (pair.r == 0.0 && pair.r_prime == 0.0) {
        // u = 0: the brackets behave like 1/u but the u³ prefactor wins
        return CavityIntegrandTerms { term_constant: 0.0, term_position: 0.0 };
    }
    let t2 = t * t;
    let q = (-2.0 * u * a).exp();
    let em1 = (-2.0 * u * a).exp_m1();
    let den_r = one_minus_r2q(pair.r, em1);
    let den_rp = one_minus_r2q(pair.r_prime, em1);

    // r²/(r² − e^{2ua}) = −r²q/(1 − r²q)
    let term_constant =
        t2 * (-(pair.r * pair.r * q) / den_r - (pair.r_prime * pair.r_prime * q) / den_rp);

    let a_r = pair.r / den_r;
    let a_rp = pair.r_prime / den_rp;
    // e^{−ua}·cosh[u(2z − a)]
    let position = 0.5 * ((-2.0 * u * (a - z)).exp() + (-2.0 * u * z).exp());
    let bracket = match kind {
        FieldKind::ESquared => -t2 * a_r + (2.0 - t2) * a_rp,
        FieldKind::BSquared => (2.0 - t2) * a_r - t2 * a_rp,
        FieldKind::EnergyDensity => (1.0 - t2) * (a_r + a_rp),
    };
    CavityIntegrandTerms { term_constant, term_position: bracket * position }
}

fn check_cavity(a: f64, z: f64) -> Result<()> {
    Geometry::cavity(a)?.check_point(z)
}

/// Both brackets of the cavity integrand at `0 < z < a`.
pub fn cavity_gamma_kk_zdep(
    kind: FieldKind,
    model: &DielectricModel,
    a: f64,
    z: f64,
    node: PolarNode,
) -> Result<CavityIntegrandTerms> {
    check_cavity(a, z)?;
    Ok(cavity_terms_with(kind, a, z, node, model.reflection_pair(node)))
}

pub fn cavity_integrand_with(kind: FieldKind, a: f64, z: f64, node: PolarNode, pair: ReflectionPair) -> f64 {
    let u = node.u;
    CAVITY_PREFACTOR * u * u * u * cavity_terms_with(kind, a, z, node, pair).sum()
}

/// `(1/2π²)·u³·(term_constant + term_position)`.
pub fn cavity_integrand(
    kind: FieldKind,
    model: &DielectricModel,
    a: f64,
    z: f64,
    node: PolarNode,
) -> Result<f64> {
    check_cavity(a, z)?;
    Ok(cavity_integrand_with(kind, a, z, node, model.reflection_pair(node)))
}

/// All three integrands at one field point, bundled for the quadrature
/// engine. Evaluating them together shares the reflection coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldIntegrand {
    geometry: Geometry,
    model: DielectricModel,
    z: f64,
    swap_polarizations: bool,
}

impl FieldIntegrand {
    pub fn new(geometry: Geometry, model: DielectricModel, z: f64) -> Result<Self> {
        geometry.validate()?;
        model.validate()?;
        geometry.check_point(z)?;
        Ok(FieldIntegrand { geometry, model, z, swap_polarizations: false })
    }

    /// Exchanges `r ↔ r′` at every node. Under this exchange the `⟨E²⟩`
    /// integrand becomes the `⟨B²⟩` one and vice versa.
    pub fn with_swapped_polarizations(mut self) -> Self {
        self.swap_polarizations = !self.swap_polarizations;
        self
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn model(&self) -> DielectricModel {
        self.model
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn decay_scale(&self) -> f64 {
        self.geometry.decay_scale(self.z)
    }

    fn pair(&self, node: PolarNode) -> ReflectionPair {
        let p = self.model.reflection_pair(node);
        if self.swap_polarizations {
            p.swapped()
        } else {
            p
        }
    }

    pub fn eval(&self, kind: FieldKind, node: PolarNode) -> f64 {
        let pair = self.pair(node);
        match self.geometry {
            Geometry::SingleInterface => single_integrand_with(kind, self.z, node, pair),
            Geometry::Cavity { width } => cavity_integrand_with(kind, width, self.z, node, pair),
        }
    }

    /// `[E², B², U]` integrands at `node`.
    pub fn eval_all(&self, node: PolarNode) -> [f64; 3] {
        let pair = self.pair(node);
        match self.geometry {
            Geometry::SingleInterface => FieldKind::ALL.map(|k| single_integrand_with(k, self.z, node, pair)),
            Geometry::Cavity { width } => FieldKind::ALL.map(|k| cavity_integrand_with(k, width, self.z, node, pair)),
        }
    }

    pub fn is_identically_zero(&self) -> bool {
        matches!(self.model, DielectricModel::Vacuum)
    }
}

impl crate::quadrature::PolarIntegrand<3> for FieldIntegrand {
    fn eval(&self, node: PolarNode) -> [f64; 3] {
        self.eval_all(node)
    }

    fn t_feature_width(&self, u: f64) -> f64 {
        self.model.t_feature_width(u)
    }
}
