//! Linear transmission, reflection and absorption of the coupled cavity for a
//! weak probe incident on the upper mirror.
//!
//! With Λ(ω) = Σ_r |Y_r|² / (ω − Ω_r + iΓ_r) and D(ω) = 1 + iγΛ(ω):
//!
//! ```text
//! T = γ_U γ_L |Λ|² / |D|²
//! R = (1 − iγ̄(Λ − Λ*) + γ̄²|Λ|²) / |D|²
//! A = iγ_U (Λ − Λ*) / |D|²
//! ```
//!
//! where γ = (γ_U + γ_L)/2 and γ̄ = (γ_U − γ_L)/2.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polariton::PolaritonMode;

/// Relative size of the regulator added to Γ_r when Γ_ex = 0.
pub const REGULATOR_FRACTION: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DampingSpec {
    pub gamma_u: f64,
    pub gamma_l: f64,
    pub gamma_ex: f64,
}

impl DampingSpec {
    pub fn new(gamma_u: f64, gamma_l: f64, gamma_ex: f64) -> Result<Self> {
        for (name, g) in [("gamma_up", gamma_u), ("gamma_low", gamma_l), ("Gamma_ex", gamma_ex)] {
            if !(g.is_finite() && g >= 0.0) {
                return Err(Error::invalid(name, "damping rate must be finite and >= 0"));
            }
        }
        Ok(Self { gamma_u, gamma_l, gamma_ex })
    }

    /// Mean mirror damping γ.
    pub fn gamma(&self) -> f64 {
        0.5 * (self.gamma_u + self.gamma_l)
    }

    /// Mirror asymmetry γ̄.
    pub fn gamma_bar(&self) -> f64 {
        0.5 * (self.gamma_u - self.gamma_l)
    }

    /// Extra damping added to every branch when exciton damping vanishes.
    pub fn regulator(&self) -> Option<f64> {
        (self.gamma_ex == 0.0).then(|| REGULATOR_FRACTION * self.gamma())
    }
}

/// Λ(ω) = Σ_r |Y_r|² / (ω − Ω_r + iΓ_r).
pub fn lambda_fn(omega: f64, modes: &[PolaritonMode]) -> Result<Complex64> {
    let mut sum = Complex64::new(0.0, 0.0);
    for m in modes {
        let weight = m.photon_weight();
        if weight == 0.0 {
            continue;
        }
        let denom = Complex64::new(omega - m.omega, m.gamma);
        if denom.re == 0.0 && denom.im == 0.0 {
            return Err(Error::PoleOnAxis { omega });
        }
        sum += weight / denom;
    }
    Ok(sum)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralResponse {
    /// In-plane wavevector (rad/m).
    pub k: f64,
    pub omega_grid: Vec<f64>,
    pub t_vals: Vec<f64>,
    pub r_vals: Vec<f64>,
    pub a_vals: Vec<f64>,
    /// Regulator η added to Γ_r, if one was needed.
    pub regulator: Option<f64>,
}

impl SpectralResponse {
    pub fn len(&self) -> usize {
        self.omega_grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega_grid.is_empty()
    }
}

/// T, R, A at a single probe frequency.
pub fn tra_point(omega: f64, modes: &[PolaritonMode], damping: &DampingSpec) -> Result<[f64; 3]> {
    let lambda = lambda_fn(omega, modes)?;
    let i = Complex64::i();
    let gamma = damping.gamma();
    let gamma_bar = damping.gamma_bar();
    let d2 = (1.0 + i * gamma * lambda).norm_sqr();
    let l2 = lambda.norm_sqr();
    let im_part = i * (lambda - lambda.conj());
    let t = damping.gamma_u * damping.gamma_l * l2 / d2;
    let r = (1.0 - gamma_bar * im_part.re + gamma_bar * gamma_bar * l2) / d2;
    let a = damping.gamma_u * im_part.re / d2;
    Ok([t, r, a])
}

/// Evaluate T, R, A over `omega_grid` for the branches at wavevector `k`.
pub fn tra_spectra(
    k: f64,
    omega_grid: &[f64],
    modes: &[PolaritonMode],
    damping: &DampingSpec,
) -> Result<SpectralResponse> {
    let regulator = damping.regulator().filter(|eta| *eta > 0.0);
    let damped: Vec<PolaritonMode> = modes
        .iter()
        .map(|m| PolaritonMode {
            gamma: m.gamma + regulator.unwrap_or(0.0),
            ..*m
        })
        .collect();

    let n = omega_grid.len();
    let mut resp = SpectralResponse {
        k,
        omega_grid: omega_grid.to_vec(),
        t_vals: Vec::with_capacity(n),
        r_vals: Vec::with_capacity(n),
        a_vals: Vec::with_capacity(n),
        regulator,
    };
    for &w in omega_grid {
        let [t, r, a] = tra_point(w, &damped, damping)?;
        resp.t_vals.push(t);
        resp.r_vals.push(r);
        resp.a_vals.push(a);
    }
    Ok(resp)
}

/// Largest |T + R + A − 1| over the grid.
pub fn sum_rule_check(resp: &SpectralResponse) -> f64 {
    resp.t_vals
        .iter()
        .zip(&resp.r_vals)
        .zip(&resp.a_vals)
        .map(|((t, r), a)| (t + r + a - 1.0).abs())
        .fold(0.0, f64::max)
}

pub fn uniform_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![0.5 * (lo + hi)],
        _ => {
            let step = (hi - lo) / (points - 1) as f64;
            (0..points).map(|i| lo + step * i as f64).collect()
        }
    }
}

/// Default probe window [Ω₋ − 10Γ_tot, Ω₊ + 10Γ_tot], Γ_tot = γ + Γ_ex.
/// Without any damping the margin falls back to a quarter of the branch gap.
pub fn default_window(modes: &[PolaritonMode], damping: &DampingSpec) -> (f64, f64) {
    let lo = modes.iter().map(|m| m.omega).fold(f64::INFINITY, f64::min);
    let hi = modes.iter().map(|m| m.omega).fold(f64::NEG_INFINITY, f64::max);
    let mut span = 10.0 * (damping.gamma() + damping.gamma_ex);
    if span == 0.0 {
        span = 0.25 * (hi - lo);
    }
    (lo - span, hi + span)
}

/// Approximate half width of a branch resonance in transmission, Γ_r + γ|Y_r|².
pub fn branch_half_width(mode: &PolaritonMode, damping: &DampingSpec) -> f64 {
    mode.gamma + damping.gamma() * mode.photon_weight()
}

/// Uniform grid plus a dense patch of `patch_points` around each branch, so
/// narrow excitonic lines are resolved even on wide windows.
pub fn resolved_grid(
    lo: f64,
    hi: f64,
    points: usize,
    modes: &[PolaritonMode],
    damping: &DampingSpec,
    patch_points: usize,
) -> Vec<f64> {
    let mut grid = uniform_grid(lo, hi, points);
    for m in modes {
        let w = branch_half_width(m, damping);
        if w > 0.0 {
            grid.extend(uniform_grid(m.omega - 20.0 * w, m.omega + 20.0 * w, patch_points));
        }
    }
    grid.retain(|w| *w >= lo && *w <= hi);
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    grid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polariton::{branches, Branch};
    use approx::assert_relative_eq;

    fn mode(omega: f64, y2: f64, gamma: f64) -> PolaritonMode {
        PolaritonMode {
            branch: Branch::Upper,
            omega,
            x_amp: Complex64::new((1.0 - y2).sqrt(), 0.0),
            y_amp: Complex64::new(y2.sqrt(), 0.0),
            gamma,
        }
    }

    #[test]
    fn lambda_single_pole() {
        let l = lambda_fn(0.0, &[mode(0.0, 1.0, 1.0)]).unwrap();
        assert_relative_eq!(l.re, 0.0);
        assert_relative_eq!(l.im, -1.0);
        assert_eq!(lambda_fn(3.0, &[mode(0.0, 0.0, 1.0), mode(1.0, 0.0, 0.0)]).unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn lambda_pole_on_axis() {
        assert!(matches!(lambda_fn(2.0, &[mode(2.0, 0.5, 0.0)]), Err(Error::PoleOnAxis { .. })));
        // photon-free branch does not matter
        assert!(lambda_fn(2.0, &[mode(2.0, 0.0, 0.0)]).is_ok());
    }

    #[test]
    fn lambda_imag_negative() {
        let modes = [mode(-1.0, 0.3, 0.2), mode(1.0, 0.7, 0.05)];
        for w in uniform_grid(-5.0, 5.0, 101) {
            assert!(lambda_fn(w, &modes).unwrap().im < 0.0);
        }
    }

    #[test]
    fn far_detuned_is_mirror() {
        let damping = DampingSpec::new(1.0, 1.0, 0.1).unwrap();
        let [t, r, a] = tra_point(1e12, &[mode(0.0, 0.5, 0.05)], &damping).unwrap();
        assert!(t < 1e-20 && a < 1e-20);
        assert_relative_eq!(r, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn single_mode_lorentzian() {
        // one photonic branch: T = γUγL / ((ω − Ω)² + (γ + Γ)²)
        let damping = DampingSpec::new(2.0, 1.0, 0.0).unwrap();
        let m = mode(0.0, 1.0, 0.25);
        for w in [-3.0, -0.5, 0.0, 0.7] {
            let [t, _, _] = tra_point(w, &[m], &damping).unwrap();
            let expect = 2.0 / (w * w + (1.5 + 0.25f64).powi(2));
            assert_relative_eq!(t, expect, max_relative = 1e-14);
        }
    }

    #[test]
    fn closed_mirrors() {
        let damping = DampingSpec::new(0.0, 0.0, 0.0).unwrap();
        let (up, lo) = branches(1.0, 1.0, Complex64::new(0.0, -0.1), 0.0).unwrap();
        let grid = [0.5, 0.95, 1.2];
        let resp = tra_spectra(0.0, &grid, &[up, lo], &damping).unwrap();
        assert!(resp.t_vals.iter().all(|t| *t == 0.0));
        assert!(resp.a_vals.iter().all(|a| *a == 0.0));
        assert!(resp.r_vals.iter().all(|r| *r == 1.0));
        assert!(resp.regulator.is_none());
        // closed and undamped: probing exactly on a branch hits the pole
        assert!(tra_spectra(0.0, &[up.omega], &[up, lo], &damping).is_err());
    }

    #[test]
    fn regulator_applied_without_exciton_damping() {
        let damping = DampingSpec::new(1.0, 1.0, 0.0).unwrap();
        let (up, lo) = branches(1.0, 1.0, Complex64::new(0.0, -0.5), 0.0).unwrap();
        let resp = tra_spectra(0.0, &[up.omega, lo.omega], &[up, lo], &damping).unwrap();
        assert_eq!(resp.regulator, Some(1e-6));
        assert!(resp.a_vals.iter().all(|a| *a >= 0.0 && *a < 1e-5));
        assert!(sum_rule_check(&resp) < 1e-12);
    }

    #[test]
    fn resolved_grid_is_sorted_and_bounded() {
        let damping = DampingSpec::new(0.1, 0.1, 0.01).unwrap();
        let modes = [mode(-3.0, 0.5, 0.005), mode(3.0, 0.5, 0.005)];
        let g = resolved_grid(-5.0, 5.0, 11, &modes, &damping, 101);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert!(g.len() > 200);
        assert_eq!(*g.first().unwrap(), -5.0);
        assert_eq!(*g.last().unwrap(), 5.0);
    }

    #[test]
    fn damping_validation() {
        assert!(DampingSpec::new(-1.0, 0.0, 0.0).is_err());
        let d = DampingSpec::new(3.0, 1.0, 0.0).unwrap();
        assert_eq!(d.gamma(), 2.0);
        assert_eq!(d.gamma_bar(), 1.0);
    }
}
