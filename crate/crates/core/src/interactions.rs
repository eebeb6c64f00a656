//! Resonant dipole-dipole energy transfer between lattice sites.
//!
//! The retarded coupling between two transition dipoles separated by `r` is
//!
//! ```text
//! ħJ(R) = Σ_ij μ¹_i μ²_j / (4πε₀R³) { (δ_ij − 3R̂_iR̂_j)(cos lR + lR sin lR)
//!                                    − (δ_ij − R̂_iR̂_j) l²R² cos lR }
//! ```
//!
//! with `l = ω_a / c`. Two dipoles parallel to `r` reduce this to
//! `−μ²/(2πε₀R³)(cos lR + lR sin lR)`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{neighbor_shells, LatticeSpec};
use crate::units::{C, EPS0, HBAR};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomSpec {
    /// Transition angular frequency ω_a (rad/s).
    pub omega_a: f64,
    /// Transition dipole magnitude (C·m).
    pub mu: f64,
    /// Natural linewidth γ_a (rad/s).
    pub gamma_a: f64,
}

impl AtomSpec {
    pub fn new(omega_a: f64, mu: f64, gamma_a: f64) -> Result<Self> {
        if !(omega_a.is_finite() && omega_a > 0.0) {
            return Err(Error::invalid("atom.omega_a", "must be finite and > 0"));
        }
        // zero dipole is allowed: it switches every coupling off
        if !(mu.is_finite() && mu >= 0.0) {
            return Err(Error::invalid("atom.mu", "must be finite and >= 0"));
        }
        if !(gamma_a.is_finite() && gamma_a >= 0.0) {
            return Err(Error::invalid("atom.gamma_a", "must be finite and >= 0"));
        }
        Ok(Self { omega_a, mu, gamma_a })
    }

    /// Resonance wavenumber l = ω_a / c (rad/m).
    pub fn wavenumber(&self) -> f64 {
        self.omega_a / C
    }
}

/// Shell-1 and shell-2 transfer rates in rad/s, stored with the attractive
/// sign convention J(a) = −J₁, J(√2 a) = −J₂.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct TransferCouplings {
    pub j1: f64,
    pub j2: f64,
}

impl TransferCouplings {
    pub fn new(j1: f64, j2: f64) -> Self {
        Self { j1, j2 }
    }

    /// Signed hopping amplitude J(L) for shell 1 or 2.
    pub fn hopping(&self, shell: usize) -> f64 {
        match shell {
            1 => -self.j1,
            2 => -self.j2,
            _ => 0.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeometryMode {
    /// Dipoles parallel to the separation vector (closed collinear formula).
    #[default]
    CollinearPaper,
    /// Dipoles normal to the lattice plane, full tensor contraction.
    PerpendicularTensor,
}

impl GeometryMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            GeometryMode::CollinearPaper => "collinear-paper",
            GeometryMode::PerpendicularTensor => "perpendicular-tensor",
        }
    }
}

impl fmt::Display for GeometryMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GeometryMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "collinear-paper" => Ok(GeometryMode::CollinearPaper),
            "perpendicular-tensor" => Ok(GeometryMode::PerpendicularTensor),
            other => Err(Error::invalid("geometry_mode", format!("unknown mode `{other}`"))),
        }
    }
}

fn retardation(x: f64) -> f64 {
    x.cos() + x * x.sin()
}

/// Full tensor coupling ħJ (J) between dipoles `mu1`, `mu2` (C·m) separated by `r` (m).
pub fn dipole_coupling_tensor(mu1: [f64; 3], mu2: [f64; 3], r: [f64; 3], l: f64) -> Result<f64> {
    let dist = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
    if dist == 0.0 {
        return Err(Error::ZeroSeparation);
    }
    let rhat = [r[0] / dist, r[1] / dist, r[2] / dist];
    let x = l * dist;
    let near = retardation(x);
    let far = x * x * x.cos();

    let mut sum = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            let delta = if i == j { 1.0 } else { 0.0 };
            let rr = rhat[i] * rhat[j];
            sum += mu1[i] * mu2[j] * ((delta - 3.0 * rr) * near - (delta - rr) * far);
        }
    }
    Ok(sum / (4.0 * PI * EPS0 * dist.powi(3)))
}

/// Coupling ħJ (J) for two equal dipoles parallel to their separation.
pub fn dipole_coupling_collinear(mu: f64, r_mag: f64, l: f64) -> Result<f64> {
    if r_mag == 0.0 {
        return Err(Error::ZeroSeparation);
    }
    let r = r_mag.abs();
    Ok(-2.0 * mu * mu * retardation(l * r) / (4.0 * PI * EPS0 * r.powi(3)))
}

/// Transfer rates J₁, J₂ for the lattice, in the requested dipole geometry.
pub fn transfer_parameters(
    atom: &AtomSpec,
    lattice: &LatticeSpec,
    geometry: GeometryMode,
) -> Result<TransferCouplings> {
    let l = atom.wavenumber();
    let shells = neighbor_shells(lattice, 2)?;
    let mut rates = [0.0; 2];
    for (rate, shell) in rates.iter_mut().zip(&shells) {
        let coupling = match geometry {
            GeometryMode::CollinearPaper => dipole_coupling_collinear(atom.mu, shell.distance, l)?,
            GeometryMode::PerpendicularTensor => {
                let o = shell.offsets[0];
                let a = lattice.constant();
                let r = [o[0] as f64 * a, o[1] as f64 * a, 0.0];
                let mu = [0.0, 0.0, atom.mu];
                dipole_coupling_tensor(mu, mu, r, l)?
            }
        };
        *rate = -coupling / HBAR;
    }
    Ok(TransferCouplings::new(rates[0], rates[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{e_angstrom_to_cm, ev_to_angular, joule_to_ev};
    use approx::assert_relative_eq;

    fn reference_atom() -> AtomSpec {
        AtomSpec::new(ev_to_angular(2.0), e_angstrom_to_cm(2.0), 0.0).unwrap()
    }

    #[test]
    fn orthogonal_dipoles_decouple() {
        let j = dipole_coupling_tensor([1e-29, 0.0, 0.0], [0.0, 1e-29, 0.0], [0.0, 0.0, 1e-7], 1e7)
            .unwrap();
        assert_eq!(j, 0.0);
    }

    #[test]
    fn tensor_reduces_to_collinear() {
        let atom = reference_atom();
        let mu = [0.0, 0.0, atom.mu];
        let t = dipole_coupling_tensor(mu, mu, [0.0, 0.0, 1e-7], atom.wavenumber()).unwrap();
        let c = dipole_coupling_collinear(atom.mu, 1e-7, atom.wavenumber()).unwrap();
        assert_relative_eq!(t, c, max_relative = 1e-12);
    }

    #[test]
    fn perpendicular_geometry_anchor() {
        // mu ẑ, r = R x̂: bracket = (cos x + x sin x) − x² cos x, x = lR
        let atom = reference_atom();
        let mu = [0.0, 0.0, atom.mu];
        let j = dipole_coupling_tensor(mu, mu, [1e-7, 0.0, 0.0], atom.wavenumber()).unwrap();
        assert_relative_eq!(joule_to_ev(j), 4.871_598_401_324_73e-8, max_relative = 1e-6);
    }

    #[test]
    fn collinear_anchors() {
        let atom = reference_atom();
        let l = atom.wavenumber();
        let j1 = dipole_coupling_collinear(atom.mu, 1e-7, l).unwrap();
        let j2 = dipole_coupling_collinear(atom.mu, 2f64.sqrt() * 1e-7, l).unwrap();
        assert_relative_eq!(joule_to_ev(j1), -1.600_162_043_040_08e-7, max_relative = 1e-6);
        assert_relative_eq!(joule_to_ev(j2), -6.340_793_977_830_65e-8, max_relative = 1e-6);
    }

    #[test]
    fn static_limit() {
        let mu = 3e-29;
        let r = 2e-7;
        let j = dipole_coupling_collinear(mu, r, 1e-3).unwrap();
        let stat = -mu * mu / (2.0 * PI * EPS0 * r.powi(3));
        assert_relative_eq!(j, stat, max_relative = 1e-6);
    }

    #[test]
    fn zero_separation_is_singular() {
        assert!(matches!(dipole_coupling_collinear(1.0, 0.0, 1.0), Err(Error::ZeroSeparation)));
        assert!(matches!(
            dipole_coupling_tensor([1.0; 3], [1.0; 3], [0.0; 3], 1.0),
            Err(Error::ZeroSeparation)
        ));
    }

    #[test]
    fn transfer_parameters_collinear() {
        let atom = reference_atom();
        let lattice = LatticeSpec::new(1e-7, 8, 8).unwrap();
        let t = transfer_parameters(&atom, &lattice, GeometryMode::CollinearPaper).unwrap();
        assert_relative_eq!(
            joule_to_ev(HBAR * t.j1),
            1.600_162_043_040_08e-7,
            max_relative = 1e-6
        );
        assert_relative_eq!(
            joule_to_ev(HBAR * t.j2),
            6.340_793_977_830_65e-8,
            max_relative = 1e-6
        );
    }

    #[test]
    fn transfer_parameters_perpendicular() {
        let atom = reference_atom();
        let lattice = LatticeSpec::new(1e-7, 8, 8).unwrap();
        let t = transfer_parameters(&atom, &lattice, GeometryMode::PerpendicularTensor).unwrap();
        assert_relative_eq!(
            joule_to_ev(HBAR * t.j1),
            -4.871_598_401_324_73e-8,
            max_relative = 1e-6
        );
        assert_relative_eq!(
            joule_to_ev(HBAR * t.j2),
            -2.597_226_659_226_82e-8,
            max_relative = 1e-6
        );
    }

    #[test]
    fn zero_dipole_gives_zero_rates() {
        let atom = AtomSpec::new(ev_to_angular(2.0), 0.0, 0.0).unwrap();
        let lattice = LatticeSpec::new(1e-7, 2, 2).unwrap();
        for mode in [GeometryMode::CollinearPaper, GeometryMode::PerpendicularTensor] {
            let t = transfer_parameters(&atom, &lattice, mode).unwrap();
            assert_eq!(t.j1, 0.0);
            assert_eq!(t.j2, 0.0);
        }
    }

    #[test]
    fn static_scaling_with_lattice_constant() {
        // l → 0 keeps only the R⁻³ law
        let atom = AtomSpec { omega_a: 1e-6, mu: 1e-29, gamma_a: 0.0 };
        let small = LatticeSpec::new(1e-7, 2, 2).unwrap();
        let big = LatticeSpec::new(2e-7, 2, 2).unwrap();
        let a = transfer_parameters(&atom, &small, GeometryMode::CollinearPaper).unwrap();
        let b = transfer_parameters(&atom, &big, GeometryMode::CollinearPaper).unwrap();
        assert_relative_eq!(b.j1 / a.j1, 0.125, max_relative = 1e-12);
    }

    #[test]
    fn geometry_mode_strings() {
        for m in [GeometryMode::CollinearPaper, GeometryMode::PerpendicularTensor] {
            assert_eq!(m.as_str().parse::<GeometryMode>().unwrap(), m);
        }
        assert!("sideways".parse::<GeometryMode>().is_err());
    }
}
