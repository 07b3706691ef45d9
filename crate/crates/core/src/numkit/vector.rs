use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::error::{GeomError, Result};
use crate::tolerances::UNIT_EPS;

/// Dense real vector of fixed (per-context) dimension n >= 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector(Vec<f64>);

impl Vector {
    pub fn new(coords: Vec<f64>) -> Self {
        debug_assert!(!coords.is_empty());
        Vector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![0.0; dim])
    }

    pub fn of2(x: f64, y: f64) -> Self {
        Vector(vec![x, y])
    }

    /// Unit vector in the plane at the given angle.
    pub fn unit2(angle: f64) -> Self {
        Vector(vec![angle.cos(), angle.sin()])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scaled(&self, k: f64) -> Vector {
        Vector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn normalized(&self) -> Option<Vector> {
        let n = self.norm();
        if n <= 0.0 || !n.is_finite() {
            None
        } else {
            Some(self.scaled(1.0 / n))
        }
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|a| a.is_finite())
    }

    /// Angle of a 2-D vector in [0, 2pi).
    pub fn angle2(&self) -> f64 {
        debug_assert_eq!(self.dim(), 2);
        let a = self.0[1].atan2(self.0[0]);
        if a < 0.0 {
            a + std::f64::consts::TAU
        } else {
            a
        }
    }

    pub fn check_unit(&self) -> Result<()> {
        let n = self.norm();
        if (n - 1.0).abs() > 1e-9 {
            return Err(GeomError::invalid(format!(
                "direction must be unit length, |theta| = {n}"
            )));
        }
        Ok(())
    }

    pub fn check_unit_strict(&self) -> Result<()> {
        let n = self.norm();
        if (n - 1.0).abs() > UNIT_EPS {
            return Err(GeomError::invalid(format!(
                "grid direction must be unit to {UNIT_EPS:e}, |theta| = {n}"
            )));
        }
        Ok(())
    }
}

impl Index<usize> for Vector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Mul<f64> for &Vector {
    type Output = Vector;
    fn mul(self, k: f64) -> Vector {
        self.scaled(k)
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        self.scaled(-1.0)
    }
}

/// 2-D cross product (z-component of the wedge).
pub fn cross2(a: &Vector, b: &Vector) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Numerically stable sum with pairwise splitting; keeps accumulation order
/// fixed so results are reproducible regardless of thread count.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_and_norm() {
        let a = Vector::of2(3.0, 4.0);
        assert_eq!(a.norm(), 5.0);
        assert_eq!(a.dot(&Vector::of2(1.0, 0.0)), 3.0);
    }

    #[test]
    fn pairwise_matches_naive_on_small_input() {
        let xs: Vec<f64> = (0..17).map(|i| (i as f64).sin()).collect();
        let naive: f64 = xs.iter().sum();
        assert!((pairwise_sum(&xs) - naive).abs() < 1e-12);
    }

    #[test]
    fn unit2_is_unit() {
        for k in 0..8 {
            let v = Vector::unit2(k as f64 * 0.7);
            assert!((v.norm() - 1.0).abs() < 1e-15);
        }
    }
}
