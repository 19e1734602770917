//! Python module `casimir_density`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use density::{analysis, closed_form, Error, Geometry, PolarNode};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::NonConvergence { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn geometry(width: Option<f64>) -> PyResult<Geometry> {
    match width {
        Some(a) => Geometry::cavity(a).map_err(to_py),
        None => Ok(Geometry::SingleInterface),
    }
}

/// Half-space material.
#[pyclass(frozen, name = "DielectricModel")]
#[derive(Clone, Copy)]
struct PyModel(density::DielectricModel);

#[pymethods]
impl PyModel {
    #[staticmethod]
    fn drude(plasma_frequency: f64) -> PyResult<Self> {
        density::DielectricModel::drude(plasma_frequency).map(PyModel).map_err(to_py)
    }

    #[staticmethod]
    fn constant_epsilon(epsilon: f64) -> PyResult<Self> {
        density::DielectricModel::constant_epsilon(epsilon).map(PyModel).map_err(to_py)
    }

    #[staticmethod]
    fn perfect_conductor() -> Self {
        PyModel(density::DielectricModel::PerfectConductor)
    }

    #[staticmethod]
    fn vacuum() -> Self {
        PyModel(density::DielectricModel::Vacuum)
    }

    /// ε(iζ)
    fn epsilon(&self, zeta: f64) -> PyResult<f64> {
        self.0.epsilon_imag_axis(zeta).map_err(to_py)
    }

    /// `(r, r')` at polar node `(u, t)`.
    fn reflection_pair(&self, u: f64, t: f64) -> PyResult<(f64, f64)> {
        let node = PolarNode::new(u, t).map_err(to_py)?;
        let p = self.0.reflection_pair(node);
        Ok((p.r, p.r_prime))
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.0)
    }
}

#[pyclass(name = "QuadratureConfig")]
#[derive(Clone, Copy)]
struct PyQuadratureConfig {
    #[pyo3(get, set)]
    rel_tol: f64,
    #[pyo3(get, set)]
    abs_tol: f64,
    #[pyo3(get, set)]
    tail_exponent_budget: f64,
    #[pyo3(get, set)]
    max_subdivisions: usize,
    #[pyo3(get, set)]
    inner_rule_order: usize,
    #[pyo3(get, set)]
    min_decay_scale: f64,
}

impl PyQuadratureConfig {
    fn build(&self) -> PyResult<density::QuadratureConfig> {
        let cfg = density::QuadratureConfig {
            rel_tol: self.rel_tol,
            abs_tol: self.abs_tol,
            tail_exponent_budget: self.tail_exponent_budget,
            max_subdivisions: self.max_subdivisions,
            inner_rule_order: self.inner_rule_order,
            min_decay_scale: self.min_decay_scale,
        };
        cfg.validate().map_err(to_py)?;
        Ok(cfg)
    }
}

#[pymethods]
impl PyQuadratureConfig {
    #[new]
    fn new() -> Self {
        let d = density::QuadratureConfig::default();
        PyQuadratureConfig {
            rel_tol: d.rel_tol,
            abs_tol: d.abs_tol,
            tail_exponent_budget: d.tail_exponent_budget,
            max_subdivisions: d.max_subdivisions,
            inner_rule_order: d.inner_rule_order,
            min_decay_scale: d.min_decay_scale,
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "QuadratureConfig(rel_tol={:e}, abs_tol={:e}, tail_exponent_budget={}, max_subdivisions={}, inner_rule_order={}, min_decay_scale={:e})",
            self.rel_tol, self.abs_tol, self.tail_exponent_budget, self.max_subdivisions, self.inner_rule_order, self.min_decay_scale
        )
    }
}

fn config(cfg: Option<PyQuadratureConfig>) -> PyResult<density::QuadratureConfig> {
    cfg.map_or_else(|| Ok(Default::default()), |c| c.build())
}

#[pyclass(frozen, get_all, name = "FieldPoint")]
#[derive(Clone, Copy)]
struct PyFieldPoint {
    z: f64,
    e2: f64,
    b2: f64,
    u: f64,
    err: f64,
}

#[pymethods]
impl PyFieldPoint {
    fn __repr__(&self) -> String {
        format!("FieldPoint(z={:e}, e2={:e}, b2={:e}, u={:e}, err={:e})", self.z, self.e2, self.b2, self.u, self.err)
    }
}

impl From<analysis::FieldPoint> for PyFieldPoint {
    fn from(p: analysis::FieldPoint) -> Self {
        PyFieldPoint { z: p.z, e2: p.e2, b2: p.b2, u: p.u, err: p.err }
    }
}

/// ⟨E²⟩, ⟨B²⟩ and U at `z`; a cavity when `width` is given, else a single wall.
#[pyfunction]
#[pyo3(signature = (model, z, width=None, config=None))]
fn compute_point(model: PyModel, z: f64, width: Option<f64>, config: Option<PyQuadratureConfig>) -> PyResult<PyFieldPoint> {
    let cfg = self::config(config)?;
    analysis::compute_point(geometry(width)?, model.0, z, &cfg).map(Into::into).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (model, points, width=None, margin=0.02, window=None, config=None))]
fn profile(
    py: Python<'_>,
    model: PyModel,
    points: usize,
    width: Option<f64>,
    margin: f64,
    window: Option<(f64, f64)>,
    config: Option<PyQuadratureConfig>,
) -> PyResult<Vec<PyFieldPoint>> {
    let cfg = self::config(config)?;
    let geo = geometry(width)?;
    let prof = py
        .detach(|| analysis::profile(geo, model.0, points, margin, window, &cfg))
        .map_err(to_py)?;
    Ok(prof.points.into_iter().map(Into::into).collect())
}

/// `[(lambda, U(a/2)·a⁴)]` on a log-spaced grid.
#[pyfunction]
#[pyo3(signature = (lambda_min, lambda_max, points, config=None))]
fn midpoint_scan(
    py: Python<'_>,
    lambda_min: f64,
    lambda_max: f64,
    points: usize,
    config: Option<PyQuadratureConfig>,
) -> PyResult<Vec<(f64, f64)>> {
    let cfg = self::config(config)?;
    let scan = py.detach(|| analysis::midpoint_scan(lambda_min, lambda_max, points, &cfg)).map_err(to_py)?;
    Ok(scan.into_iter().map(|p| (p.lambda, p.u_mid_scaled)).collect())
}

#[pyfunction]
#[pyo3(signature = (lo=50.0, hi=200.0, tol=0.5, config=None))]
fn critical_lambda(py: Python<'_>, lo: f64, hi: f64, tol: f64, config: Option<PyQuadratureConfig>) -> PyResult<f64> {
    let cfg = self::config(config)?;
    py.detach(|| analysis::critical_lambda(&cfg, (lo, hi), tol)).map_err(to_py)
}

/// Separation in micrometers.
#[pyfunction]
fn critical_separation_physical(lambda_c: f64, omega_p_ev: f64) -> PyResult<f64> {
    analysis::critical_separation_physical(lambda_c, omega_p_ev).map_err(to_py)
}

#[pyfunction]
fn pc_cavity_energy(a: f64) -> PyResult<f64> {
    closed_form::pc_cavity_energy(a).map_err(to_py)
}

#[pyfunction]
fn pc_cavity_e2(z: f64, a: f64) -> PyResult<f64> {
    closed_form::pc_cavity_e2(z, a).map_err(to_py)
}

#[pyfunction]
fn pc_cavity_b2(z: f64, a: f64) -> PyResult<f64> {
    closed_form::pc_cavity_b2(z, a).map_err(to_py)
}

#[pyfunction]
fn pc_single_e2(z: f64) -> PyResult<f64> {
    closed_form::pc_single_e2(z).map_err(to_py)
}

#[pyfunction]
fn pc_single_b2(z: f64) -> PyResult<f64> {
    closed_form::pc_single_b2(z).map_err(to_py)
}

#[pyfunction]
fn polygamma3(x: f64) -> PyResult<f64> {
    closed_form::polygamma3(x).map_err(to_py)
}

#[pyfunction]
fn casimir_polder(z: f64, alpha0: f64) -> PyResult<f64> {
    closed_form::casimir_polder(z, alpha0).map_err(to_py)
}

/// `{"energy": (coefficient, power), "e2": ..., "b2": ...}`
#[pyfunction]
fn near_wall_asymptotes<'py>(py: Python<'py>, model: PyModel) -> PyResult<Bound<'py, PyDict>> {
    let a = closed_form::near_wall_asymptotes(&model.0).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("energy", (a.energy.leading_coefficient, a.energy.power))?;
    d.set_item("e2", (a.e2.leading_coefficient, a.e2.power))?;
    d.set_item("b2", (a.b2.leading_coefficient, a.b2.power))?;
    Ok(d)
}

#[pymodule]
fn casimir_density(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyModel>()?;
    m.add_class::<PyQuadratureConfig>()?;
    m.add_class::<PyFieldPoint>()?;
    m.add("HBAR_C_EV_NM", analysis::HBAR_C_EV_NM)?;
    m.add_function(wrap_pyfunction!(compute_point, m)?)?;
    m.add_function(wrap_pyfunction!(profile, m)?)?;
    m.add_function(wrap_pyfunction!(midpoint_scan, m)?)?;
    m.add_function(wrap_pyfunction!(critical_lambda, m)?)?;
    m.add_function(wrap_pyfunction!(critical_separation_physical, m)?)?;
    m.add_function(wrap_pyfunction!(pc_cavity_energy, m)?)?;
    m.add_function(wrap_pyfunction!(pc_cavity_e2, m)?)?;
    m.add_function(wrap_pyfunction!(pc_cavity_b2, m)?)?;
    m.add_function(wrap_pyfunction!(pc_single_e2, m)?)?;
    m.add_function(wrap_pyfunction!(pc_single_b2, m)?)?;
    m.add_function(wrap_pyfunction!(polygamma3, m)?)?;
    m.add_function(wrap_pyfunction!(casimir_polder, m)?)?;
    m.add_function(wrap_pyfunction!(near_wall_asymptotes, m)?)?;
    Ok(())
}
