//! Textual and CSV report formatting. Numbers print with 17 significant
//! digits so CSV output round-trips bit-exactly.

use crate::CliError;
use orlicz_core::analysis::InclusionReport;
use orlicz_core::gallery::CriterionOutcome;
use orlicz_core::yf::YoungFunction;
use orlicz_core::GridSpec;
use std::io::Write;
use std::path::Path;

/// 17 significant digits: enough to reproduce any f64 exactly.
pub fn sig(x: f64) -> String {
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    format!("{x:.16e}")
}

fn create(path: &Path) -> Result<std::fs::File, CliError> {
    std::fs::File::create(path)
        .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display())))
}

/// Curve CSV: `t,value` rows of g_Φ over the grid.
pub fn write_curve_csv(path: &Path, phi: &YoungFunction, grid: &GridSpec) -> Result<(), CliError> {
    let mut f = create(path)?;
    let mut out = String::from("t,value\n");
    for t in grid.iter() {
        if let Ok(g) = phi.g_ratio(t) {
            out.push_str(&format!("{},{}\n", sig(t), sig(g)));
        }
    }
    f.write_all(out.as_bytes())
        .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display())))
}

/// Inner-profile CSV: `t,value` rows of (y, ‖f(·,y)‖_Φ).
pub fn write_profile_csv(path: &Path, profile: &[(f64, f64)]) -> Result<(), CliError> {
    let mut f = create(path)?;
    let mut out = String::from("t,value\n");
    for (y, v) in profile {
        out.push_str(&format!("{},{}\n", sig(*y), sig(*v)));
    }
    f.write_all(out.as_bytes())
        .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display())))
}

/// Gallery CSV: `name,expected,actual,abs_err,verdict`.
pub fn write_gallery_csv(path: &Path, outcomes: &[CriterionOutcome]) -> Result<(), CliError> {
    let mut f = create(path)?;
    let mut out = String::from("name,expected,actual,abs_err,verdict\n");
    for o in outcomes {
        for c in &o.checks {
            out.push_str(&format!(
                "\"criterion {} / {}\",\"{}\",\"{}\",{},{}\n",
                o.id,
                c.name.replace('"', "'"),
                c.expected.replace('"', "'"),
                c.actual.replace('"', "'"),
                if c.abs_err.is_nan() {
                    "nan".into()
                } else {
                    sig(c.abs_err)
                },
                if c.passed { "PASS" } else { "FAIL" }
            ));
        }
    }
    f.write_all(out.as_bytes())
        .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display())))
}

/// Inclusion ranges as `name,value` rows.
pub fn write_inclusions_csv(path: &Path, rep: &InclusionReport) -> Result<(), CliError> {
    let mut f = create(path)?;
    let mut out = String::from("name,value\n");
    out.push_str(&format!("baseline_q,{}\n", sig(rep.baseline.0)));
    out.push_str(&format!("baseline_p,{}\n", sig(rep.baseline.1)));
    if let Some((pc, qc)) = rep.class_exponents {
        out.push_str(&format!("class_p,{}\n", sig(pc)));
        out.push_str(&format!("class_q,{}\n", sig(qc)));
    }
    out.push_str(&format!("r_range_p_above,{}\n", sig(rep.r_ranges.0)));
    out.push_str(&format!("r_range_q_below,{}\n", sig(rep.r_ranges.1)));
    f.write_all(out.as_bytes())
        .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display())))
}
