//! Sphere grids: direction sets with quadrature weights approximating the
//! uniform probability measure on the unit sphere.

use std::f64::consts::TAU;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{GeomError, Result};
use crate::numkit::vector::Vector;
use crate::tolerances::UNIT_EPS;

#[derive(Debug, Clone, PartialEq)]
pub struct SphereGrid {
    dim: usize,
    dirs: Vec<Vector>,
    weights: Vec<f64>,
}

/// Builds the deterministic direction grid for dimension `dim` with `m`
/// directions and uniform weights 1/m.
///
/// n = 2 uses equispaced angles 2*pi*j/m (second half mirrored so antipodes
/// match bit for bit when m is even). n = 3 uses the spherical Fibonacci
/// lattice with a seed-derived azimuth offset; n >= 4 uses seeded normalized
/// Gaussians. All variants are deterministic given (dim, m, seed).
pub fn make_grid(dim: usize, m: usize, seed: u64) -> Result<SphereGrid> {
    if dim < 2 {
        return Err(GeomError::invalid(format!("grid dim must be >= 2, got {dim}")));
    }
    if m < 8 {
        return Err(GeomError::invalid(format!("grid size must be >= 8, got {m}")));
    }
    let dirs = match dim {
        2 => circle_dirs(m),
        3 => fibonacci_dirs(m, seed),
        _ => gaussian_dirs(dim, m, seed),
    };
    let w = 1.0 / m as f64;
    Ok(SphereGrid {
        dim,
        dirs,
        weights: vec![w; m],
    })
}

fn circle_dirs(m: usize) -> Vec<Vector> {
    let mut dirs = Vec::with_capacity(m);
    if m % 2 == 0 {
        let half = m / 2;
        for j in 0..half {
            dirs.push(Vector::unit2(TAU * j as f64 / m as f64));
        }
        for j in 0..half {
            dirs.push(-&dirs[j]);
        }
    } else {
        for j in 0..m {
            dirs.push(Vector::unit2(TAU * j as f64 / m as f64));
        }
    }
    dirs
}

fn fibonacci_dirs(m: usize, seed: u64) -> Vec<Vector> {
    // golden-angle spiral; the (2j+1)/m latitude spacing avoids the poles
    let golden = (1.0 + 5.0_f64.sqrt()) / 2.0;
    let offset = (seed as f64 * golden).fract() * TAU;
    (0..m)
        .map(|j| {
            let z = 1.0 - (2 * j + 1) as f64 / m as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = TAU * (j as f64 / golden).fract() + offset;
            let v = Vector::new(vec![r * phi.cos(), r * phi.sin(), z]);
            v.normalized().expect("fibonacci point has positive norm")
        })
        .collect()
}

fn gaussian_dirs(dim: usize, m: usize, seed: u64) -> Vec<Vector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (dim as u64).wrapping_mul(0x9e3779b97f4a7c15));
    let mut dirs = Vec::with_capacity(m);
    while dirs.len() < m {
        let v = Vector::new((0..dim).map(|_| rng.sample::<f64, _>(StandardNormal)).collect());
        if let Some(u) = v.normalized() {
            if v.norm() > 1e-6 {
                dirs.push(u);
            }
        }
    }
    dirs
}

impl SphereGrid {
    /// Two-point "grid" on the line, used for 1-D projections.
    pub fn line() -> Arc<SphereGrid> {
        Arc::new(SphereGrid {
            dim: 1,
            dirs: vec![Vector::new(vec![1.0]), Vector::new(vec![-1.0])],
            weights: vec![0.5, 0.5],
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    pub fn dirs(&self) -> &[Vector] {
        &self.dirs
    }

    pub fn dir(&self, j: usize) -> &Vector {
        &self.dirs[j]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight(&self, j: usize) -> f64 {
        self.weights[j]
    }

    /// True when the 2-D grid is the canonical equispaced circle grid, which
    /// permits O(1) angle lookup and linear interpolation.
    pub fn is_equispaced_circle(&self) -> bool {
        self.dim == 2
    }

    /// Index of the grid direction closest to `u`.
    pub fn nearest_dir(&self, u: &Vector) -> usize {
        if self.dim == 2 {
            let step = TAU / self.len() as f64;
            let j = (u.angle2() / step).round() as usize;
            return j % self.len();
        }
        let mut best = 0;
        let mut best_dot = f64::NEG_INFINITY;
        for (j, d) in self.dirs.iter().enumerate() {
            let t = d.dot(u);
            if t > best_dot {
                best_dot = t;
                best = j;
            }
        }
        best
    }

    pub fn validate(&self) -> Result<()> {
        for d in &self.dirs {
            d.check_unit_strict()?;
        }
        let total: f64 = crate::numkit::vector::pairwise_sum(&self.weights);
        if (total - 1.0).abs() > UNIT_EPS {
            return Err(GeomError::invalid(format!("grid weights sum to {total}")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_arguments() {
        assert!(make_grid(1, 64, 0).is_err());
        assert!(make_grid(2, 4, 0).is_err());
    }

    #[test]
    fn circle_grid_hits_axes() {
        let g = make_grid(2, 8, 0).unwrap();
        g.validate().unwrap();
        assert!((g.dir(0)[0] - 1.0).abs() < 1e-15);
        assert!((g.dir(2)[1] - 1.0).abs() < 1e-15);
        // mirrored second half: antipodes are exact negations
        for j in 0..4 {
            assert_eq!(g.dir(j + 4)[0], -g.dir(j)[0]);
            assert_eq!(g.dir(j + 4)[1], -g.dir(j)[1]);
        }
    }

    #[test]
    fn weights_sum_to_one_exactly_for_pow2() {
        let g = make_grid(2, 4096, 0).unwrap();
        let s: f64 = crate::numkit::vector::pairwise_sum(g.weights());
        assert_eq!(s, 1.0);
    }

    #[test]
    fn fibonacci_units_and_determinism() {
        let a = make_grid(3, 1000, 7).unwrap();
        let b = make_grid(3, 1000, 7).unwrap();
        a.validate().unwrap();
        assert_eq!(a.dirs()[17], b.dirs()[17]);
        assert!((a.weight(0) - 0.001).abs() < 1e-15);
    }

    #[test]
    fn gaussian_grid_deterministic() {
        let a = make_grid(4, 64, 3).unwrap();
        let b = make_grid(4, 64, 3).unwrap();
        a.validate().unwrap();
        assert_eq!(a.dirs()[5], b.dirs()[5]);
    }

    #[test]
    fn antipodal_symmetry_mod4() {
        let g = make_grid(2, 64, 0).unwrap();
        for j in 0..64 {
            let neg = -g.dir(j);
            let found = g
                .dirs()
                .iter()
                .any(|d| (d - &neg).norm() < 1e-12);
            assert!(found, "missing antipode of dir {j}");
        }
    }

    #[test]
    fn nearest_dir_roundtrip() {
        let g = make_grid(2, 64, 0).unwrap();
        for j in 0..64 {
            assert_eq!(g.nearest_dir(g.dir(j)), j);
        }
    }
}
