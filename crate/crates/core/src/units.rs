//! Unit conventions and physical constants.
//!
//! Everything inside the crate is SI with energies carried as angular
//! frequencies: rad/s for energies and rates, metres for lengths, C·m for
//! dipole moments. Inputs quoted in eV, Å or e·Å go through the helpers here.

/// CODATA-2018 constants used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Reduced Planck constant (J·s).
    pub hbar: f64,
    /// Speed of light in vacuum (m/s).
    pub c: f64,
    /// Vacuum permittivity (F/m).
    pub eps0: f64,
    /// Elementary charge (C).
    pub e_charge: f64,
}

pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
    hbar: 1.054_571_817e-34,
    c: 2.997_924_58e8,
    eps0: 8.854_187_812_8e-12,
    e_charge: 1.602_176_634e-19,
};

pub const HBAR: f64 = CODATA_2018.hbar;
pub const C: f64 = CODATA_2018.c;
pub const EPS0: f64 = CODATA_2018.eps0;
pub const E_CHARGE: f64 = CODATA_2018.e_charge;

const ANGSTROM: f64 = 1e-10;

pub fn ev_to_angular(energy_ev: f64) -> f64 {
    energy_ev * E_CHARGE / HBAR
}

pub fn angular_to_ev(omega: f64) -> f64 {
    omega * HBAR / E_CHARGE
}

pub fn angstrom_to_m(length: f64) -> f64 {
    length * ANGSTROM
}

pub fn m_to_angstrom(length: f64) -> f64 {
    length / ANGSTROM
}

/// Dipole moment in e·Å to C·m.
pub fn e_angstrom_to_cm(dipole: f64) -> f64 {
    dipole * E_CHARGE * ANGSTROM
}

pub fn joule_to_ev(energy: f64) -> f64 {
    energy / E_CHARGE
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn constants_are_positive() {
        let k = CODATA_2018;
        for v in [k.hbar, k.c, k.eps0, k.e_charge] {
            assert!(v > 0.0);
        }
    }

    #[test]
    fn ev_conversions() {
        assert_eq!(ev_to_angular(0.0), 0.0);
        assert_eq!(angular_to_ev(0.0), 0.0);
        // E e / hbar evaluated at 30 digits
        assert_relative_eq!(ev_to_angular(2.0), 3.038_534_897_619_021e15, max_relative = 1e-14);
        assert_relative_eq!(ev_to_angular(1.56), 2.370_057_220_142_836e15, max_relative = 1e-14);
        assert_relative_eq!(angular_to_ev(3.0386e15), 2.0, max_relative = 1e-4);
        assert_relative_eq!(angular_to_ev(ev_to_angular(2.0)), 2.0, max_relative = 1e-12);
        assert_relative_eq!(ev_to_angular(-1.0), -ev_to_angular(1.0));
    }

    #[test]
    fn length_conversions() {
        assert_eq!(angstrom_to_m(0.0), 0.0);
        assert_relative_eq!(angstrom_to_m(1000.0), 1e-7, max_relative = 1e-15);
        assert_relative_eq!(angstrom_to_m(3100.0), 3.1e-7, max_relative = 1e-15);
        assert_relative_eq!(m_to_angstrom(angstrom_to_m(2000.0)), 2000.0, max_relative = 1e-15);
        assert_relative_eq!(e_angstrom_to_cm(2.0), 3.204_353_268e-29, max_relative = 1e-12);
    }
}
