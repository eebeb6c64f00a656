//! Square-lattice geometry: neighbor shells and the discrete Brillouin zone of a
//! finite periodic lattice.

use std::f64::consts::{PI, SQRT_2};

use crate::error::{Error, Result};

/// In-plane wavevector (rad/m).
pub type WaveVector = [f64; 2];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeSpec {
    a: f64,
    nx: usize,
    ny: usize,
}

impl LatticeSpec {
    pub fn new(a: f64, nx: usize, ny: usize) -> Result<Self> {
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::invalid("lattice.a", "lattice constant must be finite and > 0"));
        }
        if nx == 0 {
            return Err(Error::invalid("lattice.nx", "must be >= 1"));
        }
        if ny == 0 {
            return Err(Error::invalid("lattice.ny", "must be >= 1"));
        }
        Ok(Self { a, nx, ny })
    }

    pub fn constant(&self) -> f64 {
        self.a
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn sites(&self) -> usize {
        self.nx * self.ny
    }

    /// Mirror area covered by the lattice, S = N a².
    pub fn area(&self) -> f64 {
        self.sites() as f64 * self.a * self.a
    }
}

/// Integer indices n with k = n 2π/(n_sites a). Half-open [-n/2, n/2) for even
/// counts, symmetric for odd ones; always exactly `count` entries.
fn zone_indices(count: usize) -> impl Iterator<Item = i64> {
    let lo = -((count / 2) as i64);
    let hi = (count - count / 2) as i64;
    lo..hi
}

/// Allowed wavevectors of the periodic lattice, x index running slowest.
pub fn allowed_wavevectors(spec: &LatticeSpec) -> Vec<WaveVector> {
    let dkx = 2.0 * PI / (spec.nx as f64 * spec.a);
    let dky = 2.0 * PI / (spec.ny as f64 * spec.a);
    let mut out = Vec::with_capacity(spec.sites());
    for ix in zone_indices(spec.nx) {
        for iy in zone_indices(spec.ny) {
            out.push([ix as f64 * dkx, iy as f64 * dky]);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct NeighborShell {
    /// Separation of the shell from the origin site (m).
    pub distance: f64,
    /// Lattice vectors in units of a.
    pub offsets: Vec<[i32; 2]>,
}

pub fn neighbor_shells(spec: &LatticeSpec, max_shell: usize) -> Result<Vec<NeighborShell>> {
    if !(1..=2).contains(&max_shell) {
        return Err(Error::UnsupportedShell(max_shell));
    }
    let mut shells = vec![NeighborShell {
        distance: spec.a,
        offsets: vec![[1, 0], [-1, 0], [0, 1], [0, -1]],
    }];
    if max_shell == 2 {
        shells.push(NeighborShell {
            distance: SQRT_2 * spec.a,
            offsets: vec![[1, 1], [1, -1], [-1, 1], [-1, -1]],
        });
    }
    Ok(shells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn rejects_empty_lattice() {
        assert!(LatticeSpec::new(1e-7, 0, 3).is_err());
        assert!(LatticeSpec::new(1e-7, 3, 0).is_err());
        assert!(LatticeSpec::new(0.0, 3, 3).is_err());
        assert!(LatticeSpec::new(f64::NAN, 3, 3).is_err());
    }

    #[test]
    fn single_site_has_only_gamma() {
        let spec = LatticeSpec::new(1e-7, 1, 1).unwrap();
        assert_eq!(allowed_wavevectors(&spec), vec![[0.0, 0.0]]);
    }

    #[test]
    fn two_by_two_zone() {
        let spec = LatticeSpec::new(1e-7, 2, 2).unwrap();
        let ks = allowed_wavevectors(&spec);
        assert_eq!(ks.len(), 4);
        let edge = PI * 1e7;
        let expect = [[-edge, -edge], [-edge, 0.0], [0.0, -edge], [0.0, 0.0]];
        for (k, e) in ks.iter().zip(expect) {
            assert_relative_eq!(k[0], e[0], max_relative = 1e-15);
            assert_relative_eq!(k[1], e[1], max_relative = 1e-15);
        }
    }

    #[test]
    fn odd_zone_is_symmetric() {
        let spec = LatticeSpec::new(1.0, 3, 1).unwrap();
        let ks: Vec<f64> = allowed_wavevectors(&spec).iter().map(|k| k[0]).collect();
        assert_relative_eq!(ks[0], -ks[2]);
        assert_eq!(ks[1], 0.0);
    }

    #[test]
    fn shells() {
        let spec = LatticeSpec::new(2e-7, 4, 4).unwrap();
        let one = neighbor_shells(&spec, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].offsets.len(), 4);
        let two = neighbor_shells(&spec, 2).unwrap();
        assert_eq!(two.len(), 2);
        assert_relative_eq!(two[0].distance, 2e-7);
        assert_relative_eq!(two[1].distance, 2.828_427_124_746_19e-7, max_relative = 1e-12);
        for shell in &two {
            let sum = shell.offsets.iter().fold([0, 0], |acc, o| [acc[0] + o[0], acc[1] + o[1]]);
            assert_eq!(sum, [0, 0]);
            for o in &shell.offsets {
                let len = ((o[0] * o[0] + o[1] * o[1]) as f64).sqrt() * spec.constant();
                assert_relative_eq!(len, shell.distance, max_relative = 1e-15);
            }
        }
        assert!(matches!(neighbor_shells(&spec, 0), Err(Error::UnsupportedShell(0))));
        assert!(matches!(neighbor_shells(&spec, 3), Err(Error::UnsupportedShell(3))));
    }

    #[test]
    fn area() {
        let spec = LatticeSpec::new(2e-7, 3, 5).unwrap();
        assert_eq!(spec.sites(), 15);
        assert_relative_eq!(spec.area(), 15.0 * 4e-14, max_relative = 1e-15);
    }
}
