//! Serialization of run results.
//!
//! CSV files start with a `# `-prefixed metadata block (artifact version,
//! parameter echo, mode flags) followed by a header row. Floats are written
//! with 12 significant digits in scientific notation, so identical inputs
//! always give byte-identical files. JSON documents carry the same metadata
//! under a `metadata` key.
//!
//! Frozen column sets:
//!
//! | command                 | columns                                                   |
//! |-------------------------|-----------------------------------------------------------|
//! | `dispersion` exciton    | `k, omega_exciton, omega_exciton_parabolic`               |
//! | `dispersion` photon     | `k, omega_photon`                                         |
//! | `dispersion` polariton  | `k, omega_exciton, omega_photon, omega_upper, omega_lower` |
//! | `hopfield`              | `k, X2_upper, Y2_upper, X2_lower, Y2_lower`               |
//! | `spectra`               | `k, omega, T, R, A`                                       |
//! | `check`                 | `quantity, value, unit`                                   |
//! | `oracle`                | `check, residual, tolerance, passed`                      |

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use super::config::{CouplingSource, Scenario, ScenarioConfig};
use super::run::{CheckReport, OracleReport, SpectraRun, Table};

pub const ARTIFACT: &str = "polariton-core";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// 12 significant digits, scientific notation.
pub fn fmt_float(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x:.11e}")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Modes {
    pub dispersion: &'static str,
    pub geometry: &'static str,
    pub exciton_frequency: &'static str,
    pub couplings: CouplingSource,
}

/// Canonical SI echo of the resolved parameters.
#[derive(Debug, Clone, Serialize)]
pub struct CanonicalParameters {
    pub omega_a_rad_s: f64,
    pub omega_exciton_rad_s: f64,
    pub dipole_c_m: f64,
    pub linewidth_rad_s: f64,
    pub lattice_constant_m: f64,
    pub nx: usize,
    pub ny: usize,
    pub cavity_length_m: f64,
    pub mode_index: u32,
    pub epsilon: f64,
    pub gamma_up_rad_s: f64,
    pub gamma_low_rad_s: f64,
    pub gamma_ex_rad_s: f64,
    pub j1_rad_s: f64,
    pub j2_rad_s: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Metadata {
    pub artifact: &'static str,
    pub version: &'static str,
    pub command: String,
    pub source: String,
    pub modes: Modes,
    pub parameters: CanonicalParameters,
    pub config: ScenarioConfig,
    pub notes: Vec<String>,
}

impl Metadata {
    pub fn new(sc: &Scenario, command: &str) -> Self {
        let mut notes = Vec::new();
        if sc.config.cavity.tune_to_exciton {
            notes.push("cavity length tuned to the k=0 exciton frequency; length_A ignored".to_string());
        }
        Self {
            artifact: ARTIFACT,
            version: VERSION,
            command: command.to_string(),
            source: sc.name.clone().map_or_else(|| "config".to_string(), |n| format!("preset:{n}")),
            modes: Modes {
                dispersion: sc.band.mode.as_str(),
                geometry: sc.geometry.as_str(),
                exciton_frequency: if sc.config.exciton.exact_dispersion { "exact-band" } else { "frozen-k0" },
                couplings: sc.coupling_source,
            },
            parameters: CanonicalParameters {
                omega_a_rad_s: sc.atom.omega_a,
                omega_exciton_rad_s: sc.band.bottom(),
                dipole_c_m: sc.atom.mu,
                linewidth_rad_s: sc.atom.gamma_a,
                lattice_constant_m: sc.lattice.constant(),
                nx: sc.lattice.nx(),
                ny: sc.lattice.ny(),
                cavity_length_m: sc.cavity.length,
                mode_index: sc.cavity.mode_index,
                epsilon: sc.cavity.epsilon,
                gamma_up_rad_s: sc.damping.gamma_u,
                gamma_low_rad_s: sc.damping.gamma_l,
                gamma_ex_rad_s: sc.damping.gamma_ex,
                j1_rad_s: sc.band.couplings.j1,
                j2_rad_s: sc.band.couplings.j2,
            },
            config: sc.config.clone(),
            notes,
        }
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    fn header(&self) -> String {
        let mut out = String::new();
        let m = &self.modes;
        let couplings = serde_json::to_string(&m.couplings).expect("serializable");
        let _ = writeln!(out, "# artifact: {} {}", self.artifact, self.version);
        let _ = writeln!(out, "# command: {}", self.command);
        let _ = writeln!(out, "# source: {}", self.source);
        let _ = writeln!(
            out,
            "# modes: dispersion={} geometry={} exciton_frequency={} couplings={}",
            m.dispersion,
            m.geometry,
            m.exciton_frequency,
            couplings.trim_matches('"')
        );
        let _ = writeln!(out, "# parameters: {}", serde_json::to_string(&self.parameters).expect("serializable"));
        let _ = writeln!(out, "# config: {}", serde_json::to_string(&self.config).expect("serializable"));
        for n in &self.notes {
            let _ = writeln!(out, "# note: {n}");
        }
        out
    }
}

fn csv_rows<'a>(out: &mut String, rows: impl IntoIterator<Item = &'a [f64]>) {
    for row in rows {
        let line: Vec<String> = row.iter().map(|v| fmt_float(*v)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn table_csv(meta: &Metadata, table: &Table) -> String {
    let mut out = meta.header();
    out.push_str(&table.columns.join(","));
    out.push('\n');
    csv_rows(&mut out, table.rows.iter().map(Vec::as_slice));
    out
}

pub fn table_json(meta: &Metadata, table: &Table) -> String {
    pretty(&json!({ "metadata": meta, "columns": table.columns, "rows": table.rows }))
}

fn spectra_meta(meta: &Metadata, run: &SpectraRun) -> Metadata {
    let mut meta = meta.clone();
    if let Some(eta) = run.responses.iter().find_map(|r| r.regulator) {
        meta = meta.note(format!(
            "Gamma_ex = 0: regulator eta = {} rad/s added to every branch damping",
            fmt_float(eta)
        ));
    }
    if meta.parameters.gamma_up_rad_s == 0.0 && meta.parameters.gamma_low_rad_s == 0.0 {
        meta = meta.note("closed mirrors: gamma_up = gamma_low = 0, so T and A vanish identically");
    }
    meta
}

pub fn spectra_csv(meta: &Metadata, run: &SpectraRun) -> String {
    let meta = spectra_meta(meta, run);
    let mut out = meta.header();
    out.push_str("k,omega,T,R,A\n");
    for resp in &run.responses {
        for i in 0..resp.len() {
            let row = [resp.k, resp.omega_grid[i], resp.t_vals[i], resp.r_vals[i], resp.a_vals[i]];
            csv_rows(&mut out, [row.as_slice()]);
        }
    }
    out
}

/// Peak summary per wavevector.
pub fn spectra_summary_json(meta: &Metadata, run: &SpectraRun) -> String {
    let meta = spectra_meta(meta, run);
    pretty(&json!({ "metadata": meta, "summaries": run.summaries }))
}

/// Full spectra and summaries in one document.
pub fn spectra_json(meta: &Metadata, run: &SpectraRun) -> String {
    let meta = spectra_meta(meta, run);
    pretty(&json!({
        "metadata": meta,
        "columns": ["k", "omega", "T", "R", "A"],
        "spectra": run.responses,
        "summaries": run.summaries,
    }))
}

fn check_rows(r: &CheckReport) -> Vec<(&'static str, String, &'static str)> {
    let yes_no = |b: bool| if b { "true".to_string() } else { "false".to_string() };
    vec![
        ("hbar_J1_collinear_paper", fmt_float(r.collinear_paper.hbar_j1_ev), "eV"),
        ("hbar_J2_collinear_paper", fmt_float(r.collinear_paper.hbar_j2_ev), "eV"),
        ("hbar_J1_perpendicular_tensor", fmt_float(r.perpendicular_tensor.hbar_j1_ev), "eV"),
        ("hbar_J2_perpendicular_tensor", fmt_float(r.perpendicular_tensor.hbar_j2_ev), "eV"),
        ("hbar_J1_active", fmt_float(r.active.hbar_j1_ev), "eV"),
        ("hbar_J2_active", fmt_float(r.active.hbar_j2_ev), "eV"),
        ("band_width_4J1", fmt_float(r.bandwidth_ev), "eV"),
        ("linewidth", fmt_float(r.linewidth_ev), "eV"),
        ("observable", yes_no(r.observability.observable), ""),
        ("observability_margin", fmt_float(r.observability.margin), "4J1/gamma_a"),
        ("effective_mass", r.effective_mass_kg.map_or_else(|| "inf".into(), fmt_float), "kg"),
        ("omega_exciton", fmt_float(r.omega_exciton), "rad/s"),
        ("omega_cavity_k0", fmt_float(r.omega_cavity_0), "rad/s"),
        ("detuning_k0", fmt_float(r.detuning_0), "rad/s"),
        ("coupling_abs_f", fmt_float(r.coupling_abs), "rad/s"),
        ("rabi_splitting_2f", fmt_float(r.rabi_splitting), "rad/s"),
        ("splitting_k0", fmt_float(r.splitting_k0), "rad/s"),
        ("gamma_mirror", fmt_float(r.gamma_mirror), "rad/s"),
        ("Gamma_ex", fmt_float(r.gamma_ex), "rad/s"),
        ("strong_coupling", yes_no(r.strong_coupling), ""),
    ]
}

pub fn check_csv(meta: &Metadata, report: &CheckReport) -> String {
    let mut out = meta.header();
    out.push_str("quantity,value,unit\n");
    for (q, v, u) in check_rows(report) {
        let _ = writeln!(out, "{q},{v},{u}");
    }
    out
}

pub fn check_json(meta: &Metadata, report: &CheckReport) -> String {
    pretty(&json!({ "metadata": meta, "check": report }))
}

pub fn oracle_csv(meta: &Metadata, report: &OracleReport) -> String {
    let mut out = meta.header();
    let _ = writeln!(out, "# oracle lattice: {}x{}", report.oracle_lattice[0], report.oracle_lattice[1]);
    out.push_str("check,residual,tolerance,passed\n");
    for c in &report.checks {
        let _ = writeln!(out, "{},{},{},{}", c.name, fmt_float(c.residual), fmt_float(c.tolerance), c.passed);
    }
    out
}

pub fn oracle_json(meta: &Metadata, report: &OracleReport) -> String {
    pretty(&json!({ "metadata": meta, "oracle": report }))
}
