//! Sweep drivers behind the `dispersion`, `hopfield`, `spectra`, `check` and
//! `oracle` commands.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use super::config::{Scenario, BRANCH_PATCH_POINTS};
use crate::error::{Error, Result};
use crate::exciton::{hopping_matrix_oracle, spectrum_deviation, DispersionMode, ExcitonBand, Observability};
use crate::interactions::{transfer_parameters, GeometryMode, TransferCouplings};
use crate::lattice::{allowed_wavevectors, LatticeSpec};
use crate::peaks::{peak_report, Peak};
use crate::polariton::{branches, eigen_oracle, PolaritonMode};
use crate::spectra::{default_window, resolved_grid, sum_rule_check, tra_spectra, uniform_grid, SpectralResponse};
use crate::units::angular_to_ev;

/// Tolerance for the exact-diagonalization and 2×2 eigen oracles.
pub const ORACLE_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Series {
    Exciton,
    Photon,
    Polariton,
    Hopfield,
}

impl Series {
    pub fn as_str(&self) -> &'static str {
        match self {
            Series::Exciton => "exciton",
            Series::Photon => "photon",
            Series::Polariton => "polariton",
            Series::Hopfield => "hopfield",
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exciton" => Ok(Series::Exciton),
            "photon" => Ok(Series::Photon),
            "polariton" => Ok(Series::Polariton),
            "hopfield" => Ok(Series::Hopfield),
            other => Err(Error::Config(format!("unknown series `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }
}

/// Per-k series along k̂ = x̂ for k in the configured sweep.
pub fn run_dispersion(sc: &Scenario, series: Series) -> Result<Table> {
    let model = sc.model();
    let columns = match series {
        Series::Exciton => vec!["k", "omega_exciton", "omega_exciton_parabolic"],
        Series::Photon => vec!["k", "omega_photon"],
        Series::Polariton => vec!["k", "omega_exciton", "omega_photon", "omega_upper", "omega_lower"],
        Series::Hopfield => vec!["k", "X2_upper", "Y2_upper", "X2_lower", "Y2_lower"],
    };
    let mut rows = Vec::with_capacity(sc.config.sweep.k_samples);
    for k in sc.k_sweep() {
        let row = match series {
            Series::Exciton => vec![k, sc.band.dispersion([k, 0.0]), sc.band.parabolic_dispersion(k)],
            Series::Photon => vec![k, sc.cavity.photon_dispersion(k)],
            Series::Polariton => {
                let p = model.at(k)?;
                vec![k, p.omega_x, p.omega_c, p.upper.omega, p.lower.omega]
            }
            Series::Hopfield => {
                let p = model.at(k)?;
                vec![
                    k,
                    p.upper.exciton_weight(),
                    p.upper.photon_weight(),
                    p.lower.exciton_weight(),
                    p.lower.photon_weight(),
                ]
            }
        };
        rows.push(row);
    }
    Ok(Table { columns, rows })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BranchSummary {
    pub omega: f64,
    pub exciton_weight: f64,
    pub photon_weight: f64,
    pub gamma: f64,
    /// Transmission peak closest to the branch.
    pub transmission_peak: Option<Peak>,
    /// Absorption peak closest to the branch.
    pub absorption_peak: Option<Peak>,
    /// Reflection dip closest to the branch; `height` is the depth 1 − R.
    pub reflection_dip: Option<Peak>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumSummary {
    pub k: f64,
    pub upper: BranchSummary,
    pub lower: BranchSummary,
    pub transmission_peaks: Vec<Peak>,
    pub absorption_peaks: Vec<Peak>,
    pub reflection_dips: Vec<Peak>,
    pub sum_rule_deviation: f64,
    pub regulator: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectraRun {
    pub responses: Vec<SpectralResponse>,
    pub summaries: Vec<SpectrumSummary>,
}

fn peaks_or_empty(x: &[f64], y: &[f64]) -> Vec<Peak> {
    peak_report(x, y).unwrap_or_default()
}

/// The peak nearest to `omega`, if it lies closer to this branch than to `other`.
fn nearest(peaks: &[Peak], omega: f64, other: f64) -> Option<Peak> {
    peaks
        .iter()
        .filter(|p| (p.position - omega).abs() <= (p.position - other).abs())
        .min_by(|a, b| (a.position - omega).abs().total_cmp(&(b.position - omega).abs()))
        .copied()
}

fn branch_summary(mode: &PolaritonMode, other: f64, t: &[Peak], a: &[Peak], r: &[Peak]) -> BranchSummary {
    BranchSummary {
        omega: mode.omega,
        exciton_weight: mode.exciton_weight(),
        photon_weight: mode.photon_weight(),
        gamma: mode.gamma,
        transmission_peak: nearest(t, mode.omega, other),
        absorption_peak: nearest(a, mode.omega, other),
        reflection_dip: nearest(r, mode.omega, other),
    }
}

/// Probe grid for one wavevector: the configured or default window, densified
/// around each branch when `resolve_branches` is set.
pub fn probe_grid(sc: &Scenario, modes: &[PolaritonMode]) -> Vec<f64> {
    let sweep = &sc.config.sweep;
    let (lo, hi) = match (sweep.omega_min, sweep.omega_max) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => default_window(modes, &sc.damping),
    };
    if sweep.resolve_branches {
        resolved_grid(lo, hi, sweep.omega_points, modes, &sc.damping, BRANCH_PATCH_POINTS)
    } else {
        uniform_grid(lo, hi, sweep.omega_points)
    }
}

/// T/R/A spectra at each k of `k_list` (the configured list when `None`).
/// Fails as a whole if any wavevector fails.
pub fn run_spectra(sc: &Scenario, k_list: Option<&[f64]>) -> Result<SpectraRun> {
    let ks = k_list.unwrap_or(&sc.config.sweep.k_list);
    if ks.is_empty() {
        return Err(Error::Config("k list must not be empty".into()));
    }
    let model = sc.model();
    let mut responses = Vec::with_capacity(ks.len());
    let mut summaries = Vec::with_capacity(ks.len());
    for &k in ks {
        let p = model.at(k)?;
        let modes = [p.upper, p.lower];
        let grid = probe_grid(sc, &modes);
        let resp = tra_spectra(k, &grid, &modes, &sc.damping)?;

        let t_peaks = peaks_or_empty(&resp.omega_grid, &resp.t_vals);
        let a_peaks = peaks_or_empty(&resp.omega_grid, &resp.a_vals);
        let depth: Vec<f64> = resp.r_vals.iter().map(|r| 1.0 - r).collect();
        let r_dips = peaks_or_empty(&resp.omega_grid, &depth);

        summaries.push(SpectrumSummary {
            k,
            upper: branch_summary(&p.upper, p.lower.omega, &t_peaks, &a_peaks, &r_dips),
            lower: branch_summary(&p.lower, p.upper.omega, &t_peaks, &a_peaks, &r_dips),
            transmission_peaks: t_peaks,
            absorption_peaks: a_peaks,
            reflection_dips: r_dips,
            sum_rule_deviation: sum_rule_check(&resp),
            regulator: resp.regulator,
        });
        responses.push(resp);
    }
    Ok(SpectraRun { responses, summaries })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CouplingEstimate {
    pub hbar_j1_ev: f64,
    pub hbar_j2_ev: f64,
}

impl From<TransferCouplings> for CouplingEstimate {
    fn from(c: TransferCouplings) -> Self {
        Self {
            hbar_j1_ev: angular_to_ev(c.j1),
            hbar_j2_ev: angular_to_ev(c.j2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub collinear_paper: CouplingEstimate,
    pub perpendicular_tensor: CouplingEstimate,
    /// Rates actually used by the band (may be overrides).
    pub active: CouplingEstimate,
    pub bandwidth_ev: f64,
    pub linewidth_ev: f64,
    pub observability: Observability,
    pub effective_mass_kg: Option<f64>,
    pub omega_exciton: f64,
    pub omega_cavity_0: f64,
    pub detuning_0: f64,
    pub coupling_abs: f64,
    pub rabi_splitting: f64,
    pub splitting_k0: f64,
    pub gamma_mirror: f64,
    pub gamma_ex: f64,
    pub strong_coupling: bool,
}

pub fn run_check(sc: &Scenario) -> Result<CheckReport> {
    let collinear = transfer_parameters(&sc.atom, &sc.lattice, GeometryMode::CollinearPaper)?;
    let perpendicular = transfer_parameters(&sc.atom, &sc.lattice, GeometryMode::PerpendicularTensor)?;
    let p = sc.model().at(0.0)?;
    let rabi = 2.0 * p.f.norm();
    let gamma = sc.damping.gamma();
    Ok(CheckReport {
        collinear_paper: collinear.into(),
        perpendicular_tensor: perpendicular.into(),
        active: sc.band.couplings.into(),
        bandwidth_ev: angular_to_ev(sc.band.bandwidth()),
        linewidth_ev: angular_to_ev(sc.atom.gamma_a),
        observability: sc.band.observability(&sc.atom),
        effective_mass_kg: sc.band.effective_mass().ok(),
        omega_exciton: p.omega_x,
        omega_cavity_0: p.omega_c,
        detuning_0: p.delta,
        coupling_abs: p.f.norm(),
        rabi_splitting: rabi,
        splitting_k0: p.upper.omega - p.lower.omega,
        gamma_mirror: gamma,
        gamma_ex: sc.damping.gamma_ex,
        strong_coupling: rabi > gamma && rabi > sc.damping.gamma_ex,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleCheck {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl OracleCheck {
    fn new(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            residual,
            tolerance,
            passed: residual < tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub oracle_lattice: [usize; 2],
    pub checks: Vec<OracleCheck>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// First failing check as an error, for exit-code reporting.
    pub fn to_error(&self) -> Option<Error> {
        self.checks.iter().find(|c| !c.passed).map(|c| Error::OracleMismatch {
            what: c.name.clone(),
            residual: c.residual,
            tolerance: c.tolerance,
        })
    }
}

/// Band offsets ω(k) − ω_a over the zone against the hopping-matrix spectrum,
/// relative to |J₁| + |J₂|.
pub fn exciton_oracle_residual(lattice: &LatticeSpec, couplings: TransferCouplings, mode: DispersionMode) -> Result<f64> {
    // centered at ω_a = 0 so the comparison resolves the hopping scale
    let band = ExcitonBand::new(0.0, couplings, lattice.constant(), mode);
    let scale = match couplings.j1.abs() + couplings.j2.abs() {
        s if s > 0.0 => s,
        _ => 1.0,
    };
    let exact = hopping_matrix_oracle(lattice, &band)?;
    let mut formula: Vec<f64> = allowed_wavevectors(lattice).iter().map(|k| band.dispersion(*k)).collect();
    formula.sort_by(f64::total_cmp);
    Ok(spectrum_deviation(&exact, &formula, scale))
}

/// Closed-form branches against numerical 2×2 diagonalization for one
/// (δ, f): (eigenvalue residual relative to Δ, Hopfield magnitude residual).
pub fn polariton_oracle_residual(delta: f64, f: Complex64) -> Result<(f64, f64)> {
    let (up, lo) = branches(-delta, delta, f, 0.0)?;
    let [o_lo, o_hi] = eigen_oracle(-delta, delta, f);
    let scale = delta.hypot(f.norm());
    let eig = ((up.omega - o_hi.value).abs()).max((lo.omega - o_lo.value).abs()) / scale;
    let mut hop: f64 = 0.0;
    for (mode, pair) in [(up, o_hi), (lo, o_lo)] {
        hop = hop
            .max((mode.x_amp.norm() - pair.vector[0].norm()).abs())
            .max((mode.y_amp.norm() - pair.vector[1].norm()).abs());
    }
    Ok((eig, hop))
}

/// Runs both oracles on the scenario: exact diagonalization of the exciton
/// hopping matrix (the scenario lattice, or 6×6 if it exceeds the budget) and
/// the 2×2 polariton block over the k sweep.
pub fn run_oracle(sc: &Scenario) -> Result<OracleReport> {
    let lattice = if sc.lattice.sites() <= crate::exciton::ORACLE_MAX_SITES {
        sc.lattice
    } else {
        LatticeSpec::new(sc.lattice.constant(), 6, 6)?
    };
    let couplings = sc.band.couplings;
    let mut checks = vec![OracleCheck::new(
        "exciton lattice-sum vs hopping matrix",
        exciton_oracle_residual(&lattice, couplings, DispersionMode::LatticeSum)?,
        ORACLE_TOLERANCE,
    )];
    let nn_only = TransferCouplings::new(couplings.j1, 0.0);
    checks.push(OracleCheck::new(
        "exciton paper-eq8 (J2 = 0) vs hopping matrix",
        exciton_oracle_residual(&lattice, nn_only, DispersionMode::PaperEq8)?,
        ORACLE_TOLERANCE,
    ));

    let model = sc.model();
    let (mut eig, mut hop) = (0.0f64, 0.0f64);
    for k in sc.k_sweep() {
        let p = model.at(k)?;
        let (e, h) = polariton_oracle_residual(p.delta, p.f)?;
        eig = eig.max(e);
        hop = hop.max(h);
    }
    checks.push(OracleCheck::new("polariton eigenvalues vs 2x2 diagonalization", eig, ORACLE_TOLERANCE));
    checks.push(OracleCheck::new("hopfield magnitudes vs 2x2 eigenvectors", hop, ORACLE_TOLERANCE));

    Ok(OracleReport {
        oracle_lattice: [lattice.nx(), lattice.ny()],
        checks,
    })
}
