//! The check battery behind `casimir-density limits`.

use std::f64::consts::PI;
use std::process::ExitCode;

use serde::Serialize;

use casimir_density::analysis::compute_point;
use casimir_density::closed_form::{
    casimir_polder, near_wall_asymptotes, pc_cavity_b2, pc_cavity_b2_polygamma, pc_cavity_e2, pc_cavity_e2_polygamma,
    pc_cavity_energy, pc_single_b2, pc_single_e2, polygamma3,
};
use casimir_density::{DielectricModel, Geometry, QuadratureConfig};

use crate::{output, CliError, LimitsArgs};

#[derive(Debug, Serialize)]
struct Check {
    name: &'static str,
    value: f64,
    target: f64,
    tolerance: f64,
    pass: bool,
}

impl Check {
    /// Passes when `|value/target − 1| ≤ tolerance`.
    fn ratio(name: &'static str, value: f64, target: f64, tolerance: f64) -> Self {
        let pass = ((value / target) - 1.0).abs() <= tolerance;
        Check { name, value, target, tolerance, pass }
    }

    /// Passes when `|value − target| ≤ tolerance·max(|target|, floor)`.
    fn close(name: &'static str, value: f64, target: f64, tolerance: f64, floor: f64) -> Self {
        let pass = (value - target).abs() <= tolerance * target.abs().max(floor);
        Check { name, value, target, tolerance, pass }
    }
}

fn checks(cfg: &QuadratureConfig, tolerance: Option<f64>) -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    let wp = 1.0;
    let drude = DielectricModel::drude(wp)?;
    let asym = near_wall_asymptotes(&drude)?;

    for (zs, label_u, label_e, label_b) in [
        (1e-3, "near_wall_u_wpz_1e-3", "near_wall_e2_wpz_1e-3", "near_wall_b2_wpz_1e-3"),
        (1e-4, "near_wall_u_wpz_1e-4", "near_wall_e2_wpz_1e-4", "near_wall_b2_wpz_1e-4"),
    ] {
        let z = zs / wp;
        let p = compute_point(Geometry::SingleInterface, drude, z, cfg)?;
        out.push(Check::ratio(label_u, p.u, asym.energy.evaluate(z), tolerance.unwrap_or(0.01)));
        out.push(Check::ratio(label_e, p.e2, asym.e2.evaluate(z), tolerance.unwrap_or(0.01)));
        out.push(Check::ratio(label_b, p.b2, asym.b2.evaluate(z), tolerance.unwrap_or(0.05)));
    }

    let a = 1.0;
    let cavity = Geometry::cavity(a)?;
    let pc = DielectricModel::PerfectConductor;
    let flat = pc_cavity_energy(a)?;
    for (name, z) in [("pc_cavity_u_z_0.1", 0.1), ("pc_cavity_u_z_0.5", 0.5)] {
        let p = compute_point(cavity, pc, z, cfg)?;
        out.push(Check::close(name, p.u, flat, 1e-6, 0.0));
    }
    for (name_e, name_b, z) in [("pc_cavity_e2_z_0.25", "pc_cavity_b2_z_0.25", 0.25), ("pc_cavity_e2_z_0.5", "pc_cavity_b2_z_0.5", 0.5)] {
        let p = compute_point(cavity, pc, z, cfg)?;
        out.push(Check::close(name_e, p.e2, pc_cavity_e2(z, a)?, 1e-6, 0.0));
        out.push(Check::close(name_b, p.b2, pc_cavity_b2(z, a)?, 1e-6, 0.0));
    }
    let z = 0.3;
    out.push(Check::close("polygamma_route_e2_z_0.3", pc_cavity_e2_polygamma(z, a)?, pc_cavity_e2(z, a)?, 1e-12, 0.0));
    out.push(Check::close("polygamma_route_b2_z_0.3", pc_cavity_b2_polygamma(z, a)?, pc_cavity_b2(z, a)?, 1e-12, 0.0));
    for (name, x) in [("polygamma_reflection_x_0.3", 0.3), ("polygamma_reflection_x_0.05", 0.05)] {
        let (s, c) = (PI * x).sin_cos();
        let rhs = 2.0 * PI.powi(4) * (1.0 + 2.0 * c * c) / s.powi(4);
        out.push(Check::close(name, polygamma3(x)? + polygamma3(1.0 - x)?, rhs, 1e-12, 0.0));
    }
    for (name_e, name_b, z) in [("pc_single_e2_z_1", "pc_single_b2_z_1", 1.0), ("pc_single_e2_z_2", "pc_single_b2_z_2", 2.0)] {
        let p = compute_point(Geometry::SingleInterface, pc, z, cfg)?;
        out.push(Check::close(name_e, p.e2, pc_single_e2(z)?, 1e-6, 0.0));
        out.push(Check::close(name_b, p.b2, pc_single_b2(z)?, 1e-6, 0.0));
    }
    let z = 1.5;
    out.push(Check::close(
        "casimir_polder_identity",
        casimir_polder(z, 1.0)?,
        -3.0 / (32.0 * PI * PI * z.powi(4)),
        1e-14,
        0.0,
    ));
    Ok(out)
}

pub(crate) fn cmd_limits(args: &LimitsArgs) -> Result<ExitCode, CliError> {
    if let Some(t) = args.tolerance {
        if !(t > 0.0 && t.is_finite()) {
            return Err(CliError::Usage(format!("--tolerance must be positive and finite, got {t}")));
        }
    }
    let cfg = args.quad.build()?;
    let results = checks(&cfg, args.tolerance)?;
    let all_pass = results.iter().all(|c| c.pass);
    if args.json {
        let doc = serde_json::json!({
            "config": {
                "command": "limits",
                "tolerance": args.tolerance,
                "quadrature": output::quad_json(&cfg),
            },
            "rows": [],
            "checks": results,
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        for c in &results {
            println!(
                "[{}] {:<30} value {:>+.9e}  target {:>+.9e}  tol {:.1e}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.value,
                c.target,
                c.tolerance
            );
        }
        let failed = results.iter().filter(|c| !c.pass).count();
        println!("{} checks, {} failed", results.len(), failed);
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
