//! Upper and lower polariton branches from the 2×2 exciton-photon block
//! `[[ω_x, f], [f*, ω_c]]` at a fixed in-plane wavevector.

use nalgebra::{Matrix2, SymmetricEigen};
use num_complex::Complex64;
use serde::Serialize;

use crate::cavity::{coupling_strength, CavitySpec};
use crate::error::{Error, Result};
use crate::exciton::ExcitonBand;
use crate::interactions::AtomSpec;
use crate::lattice::LatticeSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolaritonMode {
    pub branch: Branch,
    /// Branch frequency Ω (rad/s).
    pub omega: f64,
    /// Exciton Hopfield amplitude X.
    pub x_amp: Complex64,
    /// Photon Hopfield amplitude Y.
    pub y_amp: Complex64,
    /// Damping Γ = Γ_ex |X|² (rad/s).
    pub gamma: f64,
}

impl PolaritonMode {
    pub fn exciton_weight(&self) -> f64 {
        self.x_amp.norm_sqr()
    }

    pub fn photon_weight(&self) -> f64 {
        self.y_amp.norm_sqr()
    }
}

/// Half the photon-exciton mismatch, δ = (ω_c − ω_x)/2.
pub fn detuning(omega_c: f64, omega_x: f64) -> f64 {
    0.5 * (omega_c - omega_x)
}

/// Diagonalize the exciton-photon block in closed form. Returns (upper, lower).
///
/// Ω± = (ω_c + ω_x)/2 ± Δ with Δ = √(δ² + |f|²);
/// X± = ±√((Δ ∓ δ)/(2Δ)), Y± = f/√(2Δ(Δ ∓ δ)).
pub fn branches(
    omega_x: f64,
    omega_c: f64,
    f: Complex64,
    gamma_ex: f64,
) -> Result<(PolaritonMode, PolaritonMode)> {
    let delta = detuning(omega_c, omega_x);
    let coupling = f.norm();
    let big_delta = delta.hypot(coupling);
    if big_delta == 0.0 {
        return Err(Error::DegenerateUncoupled);
    }
    // Δ − δ and Δ + δ, each taken from the side without cancellation
    let (minus, plus) = if delta >= 0.0 {
        let plus = big_delta + delta;
        (coupling * coupling / plus, plus)
    } else {
        let minus = big_delta - delta;
        (minus, coupling * coupling / minus)
    };
    let two_delta = 2.0 * big_delta;
    // |f| / √(2Δ(Δ ∓ δ)) = √((Δ ± δ)/(2Δ)); phase carried by f
    let phase = if coupling > 0.0 { f / coupling } else { Complex64::new(0.0, -1.0) };

    let mean = 0.5 * (omega_c + omega_x);
    let x_upper = (minus / two_delta).sqrt();
    let x_lower = -(plus / two_delta).sqrt();
    let upper = PolaritonMode {
        branch: Branch::Upper,
        omega: mean + big_delta,
        x_amp: Complex64::new(x_upper, 0.0),
        y_amp: phase * (plus / two_delta).sqrt(),
        gamma: gamma_ex * x_upper * x_upper,
    };
    let lower = PolaritonMode {
        branch: Branch::Lower,
        omega: mean - big_delta,
        x_amp: Complex64::new(x_lower, 0.0),
        y_amp: phase * (minus / two_delta).sqrt(),
        gamma: gamma_ex * x_lower * x_lower,
    };
    Ok((upper, lower))
}

/// Eigenpair of the 2×2 block: frequency and (exciton, photon) components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenPair {
    pub value: f64,
    pub vector: [Complex64; 2],
}

/// Numerical diagonalization of the Hermitian block, ascending in frequency.
pub fn eigen_oracle(omega_x: f64, omega_c: f64, f: Complex64) -> [EigenPair; 2] {
    let h = Matrix2::new(
        Complex64::new(omega_x, 0.0),
        f,
        f.conj(),
        Complex64::new(omega_c, 0.0),
    );
    let eig = SymmetricEigen::new(h);
    let mut pairs = [0, 1].map(|i| EigenPair {
        value: eig.eigenvalues[i],
        vector: [eig.eigenvectors[(0, i)], eig.eigenvectors[(1, i)]],
    });
    pairs.sort_by(|a, b| a.value.total_cmp(&b.value));
    pairs
}

/// Polariton branches at one wavevector together with the bare inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolaritonPoint {
    pub k: f64,
    pub omega_x: f64,
    pub omega_c: f64,
    pub delta: f64,
    pub f: Complex64,
    pub upper: PolaritonMode,
    pub lower: PolaritonMode,
}

/// Exciton band, cavity and lattice bundled for k sweeps along k̂ = x̂.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolaritonModel {
    pub atom: AtomSpec,
    pub lattice: LatticeSpec,
    pub cavity: CavitySpec,
    pub band: ExcitonBand,
    pub gamma_ex: f64,
    /// Use the full band ω_x(k) instead of freezing it at the k = 0 value.
    pub exact_exciton: bool,
}

impl PolaritonModel {
    pub fn exciton_frequency(&self, k: f64) -> f64 {
        if self.exact_exciton {
            self.band.dispersion([k, 0.0])
        } else {
            self.band.bottom()
        }
    }

    pub fn at(&self, k: f64) -> Result<PolaritonPoint> {
        let omega_x = self.exciton_frequency(k);
        let omega_c = self.cavity.photon_dispersion(k);
        let f = coupling_strength(&self.cavity, &self.atom, &self.lattice, k);
        let (upper, lower) = branches(omega_x, omega_c, f, self.gamma_ex)?;
        Ok(PolaritonPoint {
            k,
            omega_x,
            omega_c,
            delta: detuning(omega_c, omega_x),
            f,
            upper,
            lower,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn detuning_examples() {
        assert_eq!(detuning(5.0, 3.0), 1.0);
        assert_eq!(detuning(3.0, 3.0), 0.0);
    }

    #[test]
    fn resonant_split() {
        let f = Complex64::new(0.0, -1.5);
        let (up, lo) = branches(10.0, 10.0, f, 0.2).unwrap();
        assert_relative_eq!(up.omega - lo.omega, 3.0, max_relative = 1e-15);
        for m in [up, lo] {
            assert_relative_eq!(m.exciton_weight(), 0.5, max_relative = 1e-15);
            assert_relative_eq!(m.photon_weight(), 0.5, max_relative = 1e-15);
            assert_relative_eq!(m.gamma, 0.1, max_relative = 1e-15);
        }
        assert!(up.x_amp.re > 0.0 && lo.x_amp.re < 0.0);
    }

    #[test]
    fn far_detuned_character() {
        let f = Complex64::new(0.0, -1.0);
        for sign in [1.0, -1.0] {
            let delta = 100.0 * sign;
            let (up, lo) = branches(0.0, 2.0 * delta, f, 0.0).unwrap();
            let (photonic, excitonic) = if sign > 0.0 { (up, lo) } else { (lo, up) };
            assert!(excitonic.exciton_weight() >= 0.9999);
            assert!(photonic.photon_weight() >= 0.9999);
            // |Y|² of the excitonic branch ≈ |f|²/(4δ²)
            assert_relative_eq!(excitonic.photon_weight(), 1.0 / 40_000.0, max_relative = 1e-3);
        }
    }

    #[test]
    fn uncoupled_detuned_is_fine_but_degenerate_fails() {
        let (up, lo) = branches(1.0, 3.0, Complex64::new(0.0, 0.0), 0.0).unwrap();
        assert_eq!(up.omega, 3.0);
        assert_eq!(lo.omega, 1.0);
        assert_eq!(up.photon_weight(), 1.0);
        assert_eq!(lo.exciton_weight(), 1.0);
        assert!(matches!(
            branches(2.0, 2.0, Complex64::new(0.0, 0.0), 0.0),
            Err(Error::DegenerateUncoupled)
        ));
    }

    #[test]
    fn oracle_trivial_cases() {
        let [lo, hi] = eigen_oracle(1.0, 3.0, Complex64::new(0.0, 0.0));
        assert_relative_eq!(lo.value, 1.0);
        assert_relative_eq!(hi.value, 3.0);
        assert_relative_eq!(lo.vector[0].norm(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(hi.vector[1].norm(), 1.0, max_relative = 1e-15);

        let [lo, hi] = eigen_oracle(5.0, 5.0, Complex64::new(0.0, 1.0));
        assert_relative_eq!(lo.value, 4.0, max_relative = 1e-14);
        assert_relative_eq!(hi.value, 6.0, max_relative = 1e-14);
    }
}
