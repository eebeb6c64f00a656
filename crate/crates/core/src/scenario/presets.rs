//! Named parameter sets. Each preset is stored as the JSON text a user would
//! write, so presets and config files share one loading path.

/// Polariton dispersion and Hopfield weights (exciton at 2 eV, a = 2000 Å).
const FIGURE4: &str = r#"{
  "atom": { "exciton_eV": 2.0, "dipole_eA": 2.0 },
  "lattice": { "constant_A": 2000.0, "nx": 64, "ny": 64 },
  "cavity": { "length_A": 3100.0, "mode_index": 1, "epsilon": 1.0, "tune_to_exciton": true },
  "sweep": { "k_max": 2.0e6, "k_samples": 301 }
}"#;

/// Figure-4 polaritons probed through damped mirrors.
const FIGURE7: &str = r#"{
  "atom": { "exciton_eV": 2.0, "dipole_eA": 2.0 },
  "lattice": { "constant_A": 2000.0, "nx": 64, "ny": 64 },
  "cavity": {
    "length_A": 3100.0, "mode_index": 1, "epsilon": 1.0, "tune_to_exciton": true,
    "gamma_up": 7.5e10, "gamma_low": 7.5e10
  },
  "exciton": { "Gamma_ex": 1.5e9 },
  "sweep": {
    "k_max": 2.0e6, "k_samples": 301,
    "k_list": [0.0, 2.5e5, 5.0e5, 7.5e5, 1.0e6],
    "resolve_branches": true
  }
}"#;

/// ⁸⁵Rb D2 line with the quoted transfer energies ħJ₁ = 10⁻⁷ eV, ħJ₂ = 3×10⁻⁸ eV.
const RB85: &str = r#"{
  "atom": { "omega_a_eV": 1.56, "dipole_eA": 2.0, "linewidth_eV": 2.5e-8 },
  "lattice": { "constant_A": 1000.0 },
  "cavity": { "length_A": 3974.0, "tune_to_exciton": true },
  "exciton": { "j1_eV": 1.0e-7, "j2_eV": 3.0e-8 }
}"#;

/// ²³Na D2 line, transfer energies from the dipole sum.
const NA23: &str = r#"{
  "atom": { "omega_a_eV": 2.1, "dipole_eA": 2.0, "linewidth_eV": 4.0e-8 },
  "lattice": { "constant_A": 1000.0 },
  "cavity": { "length_A": 2952.0, "tune_to_exciton": true }
}"#;

/// Dipole-sum estimate of J₁, J₂ at ħω_a = 2 eV, μ = 2 e·Å, a = 1000 Å,
/// against the ⁸⁵Rb linewidth.
const DIPOLE_ESTIMATE: &str = r#"{
  "atom": { "omega_a_eV": 2.0, "dipole_eA": 2.0, "linewidth_eV": 2.5e-8 },
  "lattice": { "constant_A": 1000.0 },
  "cavity": { "length_A": 3100.0 }
}"#;

pub const PRESET_NAMES: &[&str] = &[
    "figure4",
    "figure5",
    "figure6",
    "figure7",
    "figure8",
    "figure9",
    "rb85",
    "na23",
    "dipole-estimate",
];

pub fn preset(name: &str) -> Option<&'static str> {
    match name {
        "figure4" | "figure5" | "figure6" => Some(FIGURE4),
        "figure7" | "figure8" | "figure9" => Some(FIGURE7),
        "rb85" => Some(RB85),
        "na23" => Some(NA23),
        "dipole-estimate" => Some(DIPOLE_ESTIMATE),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::config::ScenarioConfig;

    #[test]
    fn every_preset_loads() {
        for name in PRESET_NAMES {
            let text = preset(name).unwrap();
            ScenarioConfig::from_json(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert!(preset("figure10").is_none());
    }

    #[test]
    fn figure4_values_as_entered() {
        let cfg = ScenarioConfig::from_json(preset("figure4").unwrap()).unwrap();
        assert_eq!(cfg.atom.exciton_ev, Some(2.0));
        assert_eq!(cfg.atom.dipole_ea, 2.0);
        assert_eq!(cfg.lattice.constant_a, 2000.0);
        assert_eq!(cfg.cavity.length_a, 3100.0);
        assert_eq!(cfg.cavity.mode_index, 1);
        assert_eq!(cfg.cavity.epsilon, 1.0);
    }

    #[test]
    fn rb85_values_as_entered() {
        let cfg = ScenarioConfig::from_json(preset("rb85").unwrap()).unwrap();
        assert_eq!(cfg.atom.omega_a_ev, Some(1.56));
        assert_eq!(cfg.atom.linewidth_ev, 2.5e-8);
    }

    #[test]
    fn figure7_damping() {
        let cfg = ScenarioConfig::from_json(preset("figure7").unwrap()).unwrap();
        assert_eq!(cfg.exciton.gamma_ex, 1.5e9);
        assert_eq!(cfg.cavity.gamma_up, 7.5e10);
        assert_eq!(cfg.cavity.gamma_low, 7.5e10);
    }
}
