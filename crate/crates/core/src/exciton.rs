//! Frenkel-exciton band of a square lattice with shell-1 and shell-2 transfer.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interactions::{AtomSpec, TransferCouplings};
use crate::lattice::{neighbor_shells, LatticeSpec, WaveVector};
use crate::units::HBAR;

/// Largest lattice the dense hopping-matrix oracle will diagonalize.
pub const ORACLE_MAX_SITES: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DispersionMode {
    /// Closed form whose next-nearest term is cos(√2 a kx) cos(√2 a ky).
    #[default]
    PaperEq8,
    /// Explicit sum over the diagonal offsets (±a, ±a).
    LatticeSum,
}

impl DispersionMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            DispersionMode::PaperEq8 => "paper-eq8",
            DispersionMode::LatticeSum => "lattice-sum",
        }
    }
}

impl fmt::Display for DispersionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DispersionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper-eq8" => Ok(DispersionMode::PaperEq8),
            "lattice-sum" => Ok(DispersionMode::LatticeSum),
            other => Err(Error::invalid("dispersion_mode", format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExcitonBand {
    /// Bare transition frequency ω_a (rad/s).
    pub omega_a: f64,
    pub couplings: TransferCouplings,
    /// Lattice constant (m).
    pub a: f64,
    pub mode: DispersionMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Observability {
    pub observable: bool,
    /// 4 J₁ / γ_a; infinite for a zero linewidth.
    pub margin: f64,
}

impl ExcitonBand {
    pub fn new(omega_a: f64, couplings: TransferCouplings, a: f64, mode: DispersionMode) -> Self {
        Self { omega_a, couplings, a, mode }
    }

    /// Band frequency at k = 0, ω_a − 4(J₁ + J₂).
    pub fn bottom(&self) -> f64 {
        self.omega_a - 4.0 * (self.couplings.j1 + self.couplings.j2)
    }

    /// Nearest-neighbor band width 4J₁ (rad/s).
    pub fn bandwidth(&self) -> f64 {
        4.0 * self.couplings.j1
    }

    pub fn dispersion(&self, k: WaveVector) -> f64 {
        match self.mode {
            DispersionMode::PaperEq8 => self.dispersion_closed_form(k),
            DispersionMode::LatticeSum => self.dispersion_lattice_sum(k),
        }
    }

    fn dispersion_closed_form(&self, k: WaveVector) -> f64 {
        let TransferCouplings { j1, j2 } = self.couplings;
        let (ka_x, ka_y) = (k[0] * self.a, k[1] * self.a);
        let diag = std::f64::consts::SQRT_2;
        self.omega_a
            - 2.0 * j1 * (ka_x.cos() + ka_y.cos())
            - 4.0 * j2 * (diag * ka_x).cos() * (diag * ka_y).cos()
    }

    fn dispersion_lattice_sum(&self, k: WaveVector) -> f64 {
        let spec = LatticeSpec::new(self.a, 1, 1).expect("band lattice constant is positive");
        let shells = neighbor_shells(&spec, 2).expect("two shells are always available");
        let mut sum = Complex64::new(0.0, 0.0);
        for (idx, shell) in shells.iter().enumerate() {
            let hop = self.couplings.hopping(idx + 1);
            for o in &shell.offsets {
                let phase = -(k[0] * o[0] as f64 + k[1] * o[1] as f64) * self.a;
                sum += hop * Complex64::from_polar(1.0, phase);
            }
        }
        debug_assert!(sum.im.abs() <= 1e-12 * (sum.re.abs() + self.couplings.j1.abs() + self.couplings.j2.abs()));
        self.omega_a + sum.re
    }

    /// Small-k parabola ω_a − 4(J₁+J₂) + ħk²/(2 m_eff).
    pub fn parabolic_dispersion(&self, k_mag: f64) -> f64 {
        // ħ/(2 m_eff) = a²(J₁ + 4J₂); written without the division so a flat band stays finite
        let curvature = self.a * self.a * (self.couplings.j1 + 4.0 * self.couplings.j2);
        self.bottom() + curvature * k_mag * k_mag
    }

    /// m_eff = ħ / [2a²(J₁ + 4J₂)] (kg).
    pub fn effective_mass(&self) -> Result<f64> {
        let s = self.couplings.j1 + 4.0 * self.couplings.j2;
        if s == 0.0 {
            return Err(Error::FlatBand);
        }
        Ok(HBAR / (2.0 * self.a * self.a * s))
    }

    /// Excitons are resolvable when γ_a < 4J₁.
    pub fn observability(&self, atom: &AtomSpec) -> Observability {
        let width = self.bandwidth();
        let margin = if atom.gamma_a == 0.0 {
            if width > 0.0 {
                f64::INFINITY
            } else {
                0.0
            }
        } else {
            width / atom.gamma_a
        };
        Observability {
            observable: atom.gamma_a < width,
            margin,
        }
    }
}

/// Sorted eigenvalues of the single-excitation hopping matrix on a periodic
/// lattice, H_ij = ω_a δ_ij + J(n_i − n_j) over shells 1 and 2.
pub fn hopping_matrix_oracle(lattice: &LatticeSpec, band: &ExcitonBand) -> Result<Vec<f64>> {
    let n = lattice.sites();
    if n > ORACLE_MAX_SITES {
        return Err(Error::OracleBudget { sites: n, max: ORACLE_MAX_SITES });
    }
    let (nx, ny) = (lattice.nx() as i64, lattice.ny() as i64);
    let index = |x: i64, y: i64| (x.rem_euclid(nx) * ny + y.rem_euclid(ny)) as usize;

    let mut h = DMatrix::<f64>::zeros(n, n);
    for x in 0..nx {
        for y in 0..ny {
            let i = index(x, y);
            h[(i, i)] += band.omega_a;
            for (s, shell) in neighbor_shells(lattice, 2)?.iter().enumerate() {
                let hop = band.couplings.hopping(s + 1);
                for o in &shell.offsets {
                    let j = index(x + o[0] as i64, y + o[1] as i64);
                    h[(i, j)] += hop;
                }
            }
        }
    }
    let mut values: Vec<f64> = SymmetricEigen::new(h).eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Largest elementwise deviation between two sorted spectra, relative to `scale`.
pub fn spectrum_deviation(a: &[f64], b: &[f64], scale: f64) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs() / scale)
        .fold(0.0, f64::max)
}
