//! JSON scenario configuration and its resolution to canonical SI quantities.
//!
//! Unit-bearing keys carry the unit in their name (`_eV`, `_A` for Å, `_eA`
//! for e·Å). Rates (`gamma_up`, `gamma_low`, `Gamma_ex`) and wavevectors are
//! already in rad/s and rad/m.

use serde::{Deserialize, Serialize};

use crate::cavity::CavitySpec;
use crate::error::{Error, Result};
use crate::exciton::{DispersionMode, ExcitonBand};
use crate::interactions::{transfer_parameters, AtomSpec, GeometryMode, TransferCouplings};
use crate::lattice::LatticeSpec;
use crate::polariton::PolaritonModel;
use crate::spectra::DampingSpec;
use crate::units::{angstrom_to_m, e_angstrom_to_cm, ev_to_angular};

pub const DEFAULT_SITES_PER_AXIS: usize = 64;
pub const DEFAULT_K_MAX: f64 = 3e7;
pub const DEFAULT_K_SAMPLES: usize = 301;
pub const DEFAULT_OMEGA_POINTS: usize = 2001;
/// Points in each dense patch placed around a branch when `resolve_branches` is set.
pub const BRANCH_PATCH_POINTS: usize = 801;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub atom: AtomConfig,
    pub lattice: LatticeConfig,
    pub cavity: CavityConfig,
    #[serde(default)]
    pub exciton: ExcitonConfig,
    #[serde(default)]
    pub sweep: SweepConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomConfig {
    /// Bare transition energy ħω_a. Exactly one of this and `exciton_eV`.
    #[serde(rename = "omega_a_eV", default, skip_serializing_if = "Option::is_none")]
    pub omega_a_ev: Option<f64>,
    /// Exciton energy at k = 0, ħω_a − 4ħ(J₁ + J₂).
    #[serde(rename = "exciton_eV", default, skip_serializing_if = "Option::is_none")]
    pub exciton_ev: Option<f64>,
    #[serde(rename = "dipole_eA")]
    pub dipole_ea: f64,
    #[serde(rename = "linewidth_eV", default)]
    pub linewidth_ev: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeConfig {
    #[serde(rename = "constant_A")]
    pub constant_a: f64,
    #[serde(default = "default_sites")]
    pub nx: usize,
    #[serde(default = "default_sites")]
    pub ny: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CavityConfig {
    #[serde(rename = "length_A")]
    pub length_a: f64,
    #[serde(default = "one_u32")]
    pub mode_index: u32,
    #[serde(default = "one_f64")]
    pub epsilon: f64,
    #[serde(default)]
    pub gamma_up: f64,
    #[serde(default)]
    pub gamma_low: f64,
    /// Replace `length_A` by the spacing that puts ω_c(0) on the exciton.
    #[serde(default)]
    pub tune_to_exciton: bool,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExcitonConfig {
    #[serde(rename = "Gamma_ex", default)]
    pub gamma_ex: f64,
    #[serde(default)]
    pub dispersion_mode: DispersionMode,
    #[serde(default)]
    pub geometry_mode: GeometryMode,
    /// Use the full band ω_x(k) in the polariton block instead of its k = 0 value.
    #[serde(default)]
    pub exact_dispersion: bool,
    /// Transfer energy overrides; when both are set the dipole sum is skipped.
    #[serde(rename = "j1_eV", default, skip_serializing_if = "Option::is_none")]
    pub j1_ev: Option<f64>,
    #[serde(rename = "j2_eV", default, skip_serializing_if = "Option::is_none")]
    pub j2_ev: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    #[serde(default = "default_k_max")]
    pub k_max: f64,
    #[serde(default = "default_k_samples")]
    pub k_samples: usize,
    /// Wavevectors for spectra (rad/m).
    #[serde(default = "default_k_list")]
    pub k_list: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_min: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_max: Option<f64>,
    #[serde(default = "default_omega_points")]
    pub omega_points: usize,
    #[serde(default)]
    pub resolve_branches: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            k_max: DEFAULT_K_MAX,
            k_samples: DEFAULT_K_SAMPLES,
            k_list: default_k_list(),
            omega_min: None,
            omega_max: None,
            omega_points: DEFAULT_OMEGA_POINTS,
            resolve_branches: false,
        }
    }
}

fn default_sites() -> usize {
    DEFAULT_SITES_PER_AXIS
}
fn one_u32() -> u32 {
    1
}
fn one_f64() -> f64 {
    1.0
}
fn default_k_max() -> f64 {
    DEFAULT_K_MAX
}
fn default_k_samples() -> usize {
    DEFAULT_K_SAMPLES
}
fn default_k_list() -> Vec<f64> {
    vec![0.0]
}
fn default_omega_points() -> usize {
    DEFAULT_OMEGA_POINTS
}

impl ScenarioConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: ScenarioConfig = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<()> {
        fn positive(name: &str, v: f64) -> Result<()> {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::invalid(name, format!("must be finite and > 0, got {v}")))
            }
        }
        fn non_negative(name: &str, v: f64) -> Result<()> {
            if v.is_finite() && v >= 0.0 {
                Ok(())
            } else {
                Err(Error::invalid(name, format!("must be finite and >= 0, got {v}")))
            }
        }

        match (self.atom.omega_a_ev, self.atom.exciton_ev) {
            (Some(v), None) => positive("atom.omega_a_eV", v)?,
            (None, Some(v)) => positive("atom.exciton_eV", v)?,
            (Some(_), Some(_)) => {
                return Err(Error::invalid("atom.omega_a_eV", "give either omega_a_eV or exciton_eV, not both"))
            }
            (None, None) => return Err(Error::invalid("atom.omega_a_eV", "one of omega_a_eV or exciton_eV is required")),
        }
        non_negative("atom.dipole_eA", self.atom.dipole_ea)?;
        non_negative("atom.linewidth_eV", self.atom.linewidth_ev)?;

        positive("lattice.constant_A", self.lattice.constant_a)?;
        if self.lattice.nx == 0 {
            return Err(Error::invalid("lattice.nx", "must be >= 1"));
        }
        if self.lattice.ny == 0 {
            return Err(Error::invalid("lattice.ny", "must be >= 1"));
        }

        positive("cavity.length_A", self.cavity.length_a)?;
        if self.cavity.mode_index == 0 {
            return Err(Error::invalid("cavity.mode_index", "must be >= 1"));
        }
        positive("cavity.epsilon", self.cavity.epsilon)?;
        non_negative("cavity.gamma_up", self.cavity.gamma_up)?;
        non_negative("cavity.gamma_low", self.cavity.gamma_low)?;

        non_negative("exciton.Gamma_ex", self.exciton.gamma_ex)?;
        match (self.exciton.j1_ev, self.exciton.j2_ev) {
            (Some(j1), Some(j2)) => {
                if !j1.is_finite() {
                    return Err(Error::invalid("exciton.j1_eV", "must be finite"));
                }
                if !j2.is_finite() {
                    return Err(Error::invalid("exciton.j2_eV", "must be finite"));
                }
            }
            (None, None) => {}
            (Some(_), None) => return Err(Error::invalid("exciton.j2_eV", "j1_eV and j2_eV must be given together")),
            (None, Some(_)) => return Err(Error::invalid("exciton.j1_eV", "j1_eV and j2_eV must be given together")),
        }

        non_negative("sweep.k_max", self.sweep.k_max)?;
        if self.sweep.k_samples == 0 {
            return Err(Error::invalid("sweep.k_samples", "must be >= 1"));
        }
        if self.sweep.k_list.is_empty() {
            return Err(Error::invalid("sweep.k_list", "must not be empty"));
        }
        for k in &self.sweep.k_list {
            non_negative("sweep.k_list", *k)?;
        }
        if self.sweep.omega_points < 2 {
            return Err(Error::invalid("sweep.omega_points", "must be >= 2"));
        }
        match (self.sweep.omega_min, self.sweep.omega_max) {
            (Some(lo), Some(hi)) => {
                positive("sweep.omega_min", lo)?;
                if !(hi.is_finite() && hi > lo) {
                    return Err(Error::invalid("sweep.omega_max", "must be finite and > omega_min"));
                }
            }
            (None, None) => {}
            _ => return Err(Error::invalid("sweep.omega_min", "omega_min and omega_max must be given together")),
        }
        Ok(())
    }
}

/// Where the transfer rates came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CouplingSource {
    Computed,
    Override,
}

/// A validated configuration resolved into the physics types.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: Option<String>,
    pub config: ScenarioConfig,
    pub atom: AtomSpec,
    pub lattice: LatticeSpec,
    pub cavity: CavitySpec,
    pub band: ExcitonBand,
    pub geometry: GeometryMode,
    pub coupling_source: CouplingSource,
    pub damping: DampingSpec,
}

impl Scenario {
    pub fn from_config(config: ScenarioConfig, name: Option<String>) -> Result<Self> {
        config.validate()?;
        let lattice = LatticeSpec::new(angstrom_to_m(config.lattice.constant_a), config.lattice.nx, config.lattice.ny)?;
        let mu = e_angstrom_to_cm(config.atom.dipole_ea);
        let gamma_a = ev_to_angular(config.atom.linewidth_ev);
        let geometry = config.exciton.geometry_mode;

        let overrides = config
            .exciton
            .j1_ev
            .zip(config.exciton.j2_ev)
            .map(|(j1, j2)| TransferCouplings::new(ev_to_angular(j1), ev_to_angular(j2)));
        let couplings_for = |omega_a: f64| -> Result<TransferCouplings> {
            match overrides {
                Some(c) => Ok(c),
                None => transfer_parameters(&AtomSpec::new(omega_a, mu, gamma_a)?, &lattice, geometry),
            }
        };

        let (omega_a, couplings) = match (config.atom.omega_a_ev, config.atom.exciton_ev) {
            (Some(e), _) => {
                let w = ev_to_angular(e);
                (w, couplings_for(w)?)
            }
            (None, Some(e)) => {
                // ω_a = ω_x + 4(J₁ + J₂), with J depending weakly on ω_a through retardation
                let target = ev_to_angular(e);
                let mut w = target;
                let mut c = couplings_for(w)?;
                for _ in 0..16 {
                    let next = target + 4.0 * (c.j1 + c.j2);
                    if next == w {
                        break;
                    }
                    w = next;
                    c = couplings_for(w)?;
                }
                (w, c)
            }
            (None, None) => unreachable!("validated"),
        };
        let atom = AtomSpec::new(omega_a, mu, gamma_a)?;
        let band = ExcitonBand::new(omega_a, couplings, lattice.constant(), config.exciton.dispersion_mode);

        let cav = &config.cavity;
        let length = if cav.tune_to_exciton {
            CavitySpec::resonant_length(band.bottom(), cav.mode_index, cav.epsilon)
        } else {
            angstrom_to_m(cav.length_a)
        };
        let cavity = CavitySpec::new(length, cav.mode_index, cav.epsilon, cav.gamma_up, cav.gamma_low)?;
        let damping = DampingSpec::new(cav.gamma_up, cav.gamma_low, config.exciton.gamma_ex)?;

        Ok(Self {
            name,
            atom,
            lattice,
            cavity,
            band,
            geometry,
            coupling_source: if overrides.is_some() { CouplingSource::Override } else { CouplingSource::Computed },
            damping,
            config,
        })
    }

    pub fn from_json(text: &str, name: Option<String>) -> Result<Self> {
        Self::from_config(ScenarioConfig::from_json(text)?, name)
    }

    pub fn model(&self) -> PolaritonModel {
        PolaritonModel {
            atom: self.atom,
            lattice: self.lattice,
            cavity: self.cavity,
            band: self.band,
            gamma_ex: self.damping.gamma_ex,
            exact_exciton: self.config.exciton.exact_dispersion,
        }
    }

    /// k samples for dispersion sweeps: `k_samples` uniform points on [0, k_max].
    pub fn k_sweep(&self) -> Vec<f64> {
        let n = self.config.sweep.k_samples;
        let k_max = self.config.sweep.k_max;
        if n == 1 {
            return vec![0.0];
        }
        (0..n).map(|i| k_max * i as f64 / (n - 1) as f64).collect()
    }
}
