//! Renormalized vacuum expectation values `⟨E²⟩`, `⟨B²⟩` and the energy
//! density `U = ½(⟨E²⟩ + ⟨B²⟩)` of the electromagnetic field near a
//! dispersive (Drude) half-space and in the vacuum gap between two of them.
//!
//! Natural units `ħ = c = 1` throughout; lengths and inverse lengths are in
//! whatever unit the caller picks. [`analysis::critical_separation_physical`]
//! is the only place that converts to SI.

pub mod analysis;
pub mod closed_form;
pub mod dielectric;
pub mod error;
pub mod integrand;
pub mod oracle;
pub mod quadrature;

pub use analysis::{FieldPoint, Profile, ScanPoint};
pub use dielectric::{DielectricModel, PolarNode, ReflectionPair};
pub use error::{Error, Result};
pub use integrand::{CavityIntegrandTerms, FieldIntegrand, FieldKind, Geometry};
pub use quadrature::{IntegralResult, QuadratureConfig};
