//! Planar cavity: photon dispersion of one longitudinal mode and its collective
//! coupling to the lattice excitons.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::interactions::AtomSpec;
use crate::lattice::LatticeSpec;
use crate::units::{C, EPS0, HBAR};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavitySpec {
    /// Mirror spacing L (m).
    pub length: f64,
    /// Longitudinal mode index m.
    pub mode_index: u32,
    /// Relative dielectric constant of the cavity medium.
    pub epsilon: f64,
    /// Upper-mirror damping γ_U (rad/s).
    pub gamma_u: f64,
    /// Lower-mirror damping γ_L (rad/s).
    pub gamma_l: f64,
}

impl CavitySpec {
    pub fn new(length: f64, mode_index: u32, epsilon: f64, gamma_u: f64, gamma_l: f64) -> Result<Self> {
        if !(length.is_finite() && length > 0.0) {
            return Err(Error::invalid("cavity.length", "must be finite and > 0"));
        }
        if mode_index == 0 {
            return Err(Error::invalid("cavity.mode_index", "must be >= 1"));
        }
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(Error::invalid("cavity.epsilon", "must be finite and > 0"));
        }
        for (name, g) in [("cavity.gamma_up", gamma_u), ("cavity.gamma_low", gamma_l)] {
            if !(g.is_finite() && g >= 0.0) {
                return Err(Error::invalid(name, "must be finite and >= 0"));
            }
        }
        Ok(Self { length, mode_index, epsilon, gamma_u, gamma_l })
    }

    /// Mirror spacing that puts ω_c(0) exactly at `omega`.
    pub fn resonant_length(omega: f64, mode_index: u32, epsilon: f64) -> f64 {
        C * std::f64::consts::PI * mode_index as f64 / (epsilon.sqrt() * omega)
    }

    /// Out-of-plane wavenumber mπ/L.
    pub fn kz(&self) -> f64 {
        self.mode_index as f64 * std::f64::consts::PI / self.length
    }

    /// ω_c(q) = (c/√ε) √(q² + (mπ/L)²).
    pub fn photon_dispersion(&self, q_mag: f64) -> f64 {
        C / self.epsilon.sqrt() * q_mag.hypot(self.kz())
    }
}

/// Exciton-photon coupling f = −i √(ħ ω_c(q) N μ² / (2 L S ε₀)) / ħ (rad/s).
///
/// With S = N a² the site count cancels; the reduced form
/// √(ω_c μ² / (2ħ L a² ε₀)) is evaluated so the result does not depend on nx, ny.
pub fn coupling_strength(cav: &CavitySpec, atom: &AtomSpec, lattice: &LatticeSpec, q_mag: f64) -> Complex64 {
    let a = lattice.constant();
    let modulus = (cav.photon_dispersion(q_mag) * atom.mu * atom.mu / (2.0 * HBAR * cav.length * a * a * EPS0)).sqrt();
    Complex64::new(0.0, -modulus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{angstrom_to_m, angular_to_ev, e_angstrom_to_cm, ev_to_angular};
    use approx::assert_relative_eq;

    fn cavity(length_a: f64, eps: f64) -> CavitySpec {
        CavitySpec::new(angstrom_to_m(length_a), 1, eps, 0.0, 0.0).unwrap()
    }

    #[test]
    fn validation() {
        assert!(CavitySpec::new(0.0, 1, 1.0, 0.0, 0.0).is_err());
        assert!(CavitySpec::new(1e-7, 0, 1.0, 0.0, 0.0).is_err());
        assert!(CavitySpec::new(1e-7, 1, 0.0, 0.0, 0.0).is_err());
        assert!(CavitySpec::new(1e-7, 1, 1.0, -1.0, 0.0).is_err());
    }

    #[test]
    fn resonance_near_two_ev() {
        let cav = cavity(3100.0, 1.0);
        let e = angular_to_ev(cav.photon_dispersion(0.0));
        assert_relative_eq!(e, 1.999_745_134_794_077, max_relative = 1e-12);
        assert!((e - 2.0).abs() / 2.0 < 0.01);
    }

    #[test]
    fn light_cone_asymptote() {
        let cav = cavity(3100.0, 1.0);
        let q = 100.0 * cav.kz();
        let dev = (cav.photon_dispersion(q) - C * q) / (C * q);
        assert!(dev > 0.0 && dev < 1e-4);
    }

    #[test]
    fn dielectric_scaling() {
        let vac = cavity(3100.0, 1.0);
        let die = cavity(3100.0, 4.0);
        for q in [0.0, 1e6, 1e7] {
            assert_relative_eq!(die.photon_dispersion(q), 0.5 * vac.photon_dispersion(q), max_relative = 1e-15);
        }
    }

    #[test]
    fn resonant_length_inverts_dispersion() {
        let w = ev_to_angular(2.0);
        let l = CavitySpec::resonant_length(w, 3, 1.0);
        let cav = CavitySpec::new(l, 3, 1.0, 0.0, 0.0).unwrap();
        assert_relative_eq!(cav.photon_dispersion(0.0), w, max_relative = 1e-14);
    }

    #[test]
    fn coupling_anchor() {
        let cav = cavity(3100.0, 1.0);
        let atom = AtomSpec::new(ev_to_angular(2.0), e_angstrom_to_cm(2.0), 0.0).unwrap();
        let lattice = LatticeSpec::new(angstrom_to_m(2000.0), 10, 10).unwrap();
        let f = coupling_strength(&cav, &atom, &lattice, 0.0);
        assert_eq!(f.re, 0.0);
        assert!(f.im < 0.0);
        assert_relative_eq!(f.norm(), 3.670_342_094_040_478e11, max_relative = 1e-6);

        let big = LatticeSpec::new(angstrom_to_m(2000.0), 300, 7).unwrap();
        assert_eq!(coupling_strength(&cav, &atom, &big, 0.0), f);

        let wide = LatticeSpec::new(angstrom_to_m(8000.0), 10, 10).unwrap();
        assert_relative_eq!(coupling_strength(&cav, &atom, &wide, 0.0).norm(), 0.25 * f.norm(), max_relative = 1e-14);

        let dark = AtomSpec { mu: 0.0, ..atom };
        assert_eq!(coupling_strength(&cav, &dark, &lattice, 0.0).norm(), 0.0);
    }
}
