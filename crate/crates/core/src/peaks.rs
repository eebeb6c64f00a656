//! Peak detection on sampled spectra.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Peak {
    /// Refined peak position (rad/s).
    pub position: f64,
    pub height: f64,
    /// Full width at half maximum; `None` if a half-height crossing falls
    /// outside the grid.
    pub fwhm: Option<f64>,
}

/// Vertex of the parabola through three (possibly unevenly spaced) points.
fn parabola_vertex(x: [f64; 3], y: [f64; 3]) -> (f64, f64) {
    let d1 = (y[1] - y[0]) / (x[1] - x[0]);
    let d2 = (y[2] - y[1]) / (x[2] - x[1]);
    let curv = (d2 - d1) / (x[2] - x[0]);
    if curv >= 0.0 {
        return (x[1], y[1]);
    }
    // y = y1 + b (t − x1) + curv (t − x1)², b the centered slope
    let b = d1 + curv * (x[1] - x[0]);
    let shift = -b / (2.0 * curv);
    let shift = shift.clamp(x[0] - x[1], x[2] - x[1]);
    (x[1] + shift, y[1] + b * shift + curv * shift * shift)
}

fn crossing(x: &[f64], y: &[f64], from: usize, half: f64, step: isize) -> Option<f64> {
    let mut i = from as isize;
    loop {
        let j = i + step;
        if j < 0 || j as usize >= y.len() {
            return None;
        }
        let (yi, yj) = (y[i as usize], y[j as usize]);
        if yj <= half {
            let (xi, xj) = (x[i as usize], x[j as usize]);
            return Some(xi + (half - yi) * (xj - xi) / (yj - yi));
        }
        i = j;
    }
}

/// Local maxima of `y(x)` with parabolic position refinement and FWHM from
/// linearly interpolated half-height crossings. `x` must be strictly increasing.
pub fn peak_report(x: &[f64], y: &[f64]) -> Result<Vec<Peak>> {
    assert_eq!(x.len(), y.len(), "grid and values differ in length");
    let mut peaks = Vec::new();
    let n = y.len();
    let mut i = 1;
    while i + 1 < n {
        if y[i] > y[i - 1] {
            // walk across a flat top
            let mut j = i;
            while j + 1 < n && y[j + 1] == y[i] {
                j += 1;
            }
            if j + 1 < n && y[j + 1] < y[i] {
                let (position, height) = if j == i {
                    parabola_vertex([x[i - 1], x[i], x[i + 1]], [y[i - 1], y[i], y[i + 1]])
                } else {
                    (0.5 * (x[i] + x[j]), y[i])
                };
                let half = 0.5 * height;
                let fwhm = match (crossing(x, y, i, half, -1), crossing(x, y, j, half, 1)) {
                    (Some(lo), Some(hi)) => Some(hi - lo),
                    _ => None,
                };
                peaks.push(Peak { position, height, fwhm });
            }
            i = j + 1;
        } else {
            i += 1;
        }
    }
    if peaks.is_empty() {
        return Err(Error::NoPeaks);
    }
    Ok(peaks)
}
