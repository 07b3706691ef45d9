//! Planar convex hulls via Andrew's monotone chain.

use crate::error::{GeomError, Result};
use crate::numkit::vector::Vector;

fn orient(p: &Vector, q: &Vector, r: &Vector) -> f64 {
    (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
}

/// Convex hull of a 2-D point set, counter-clockwise, collinear interior
/// points removed. Degenerate inputs yield a single point or the two
/// endpoints of a segment.
pub fn hull2(points: &[Vector]) -> Result<Vec<Vector>> {
    if points.is_empty() {
        return Err(GeomError::invalid("hull2 requires at least one point"));
    }
    for p in points {
        if p.dim() != 2 {
            return Err(GeomError::DimMismatch { expected: 2, got: p.dim() });
        }
        if !p.is_finite() {
            return Err(GeomError::invalid("hull2 requires finite points"));
        }
    }

    let mut pts: Vec<Vector> = points.to_vec();
    pts.sort_by(|a, b| (a[0], a[1]).partial_cmp(&(b[0], b[1])).unwrap());
    pts.dedup_by(|a, b| a[0] == b[0] && a[1] == b[1]);
    if pts.len() == 1 {
        return Ok(pts);
    }

    let scale = pts
        .iter()
        .map(|p| p[0].abs().max(p[1].abs()))
        .fold(0.0_f64, f64::max)
        .max(1e-300);
    let eps = 1e-12 * scale * scale;

    let mut lower: Vec<Vector> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= eps
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vector> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= eps
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    Ok(lower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkit::vector::cross2;

    fn v(x: f64, y: f64) -> Vector {
        Vector::of2(x, y)
    }

    #[test]
    fn interior_point_removed() {
        let hull = hull2(&[v(0.0, 0.0), v(1.0, 0.0), v(0.0, 1.0), v(0.2, 0.2)]).unwrap();
        assert_eq!(hull.len(), 3);
        assert!(hull.iter().all(|p| !(p[0] == 0.2 && p[1] == 0.2)));
    }

    #[test]
    fn singleton_and_empty() {
        assert_eq!(hull2(&[v(0.0, 0.0)]).unwrap().len(), 1);
        assert!(hull2(&[]).is_err());
    }

    #[test]
    fn collinear_collapses_to_endpoints() {
        let hull = hull2(&[v(0.0, 0.0), v(1.0, 1.0), v(2.0, 2.0), v(0.5, 0.5)]).unwrap();
        assert_eq!(hull.len(), 2);
    }

    #[test]
    fn output_is_ccw() {
        let hull = hull2(&[v(1.0, 0.0), v(0.0, 1.0), v(-1.0, 0.0), v(0.0, -1.0), v(0.0, 0.0)])
            .unwrap();
        assert_eq!(hull.len(), 4);
        let n = hull.len();
        for i in 0..n {
            let a = &hull[i];
            let b = &hull[(i + 1) % n];
            let c = &hull[(i + 2) % n];
            let e1 = b - a;
            let e2 = c - b;
            assert!(cross2(&e1, &e2) > 0.0);
        }
    }

    #[test]
    fn spikes_survive_random_disc() {
        // 1000 deterministic pseudo-random points in the unit disc plus four
        // spikes; the spikes must be hull vertices and extreme by the
        // all-pairs segment test, and every input must lie inside the hull.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let mut pts = Vec::new();
        while pts.len() < 1000 {
            let x: f64 = rng.random_range(-1.0..1.0);
            let y: f64 = rng.random_range(-1.0..1.0);
            if x * x + y * y <= 1.0 {
                pts.push(v(x, y));
            }
        }
        let spikes = [v(2.0, 0.0), v(-2.0, 0.0), v(0.0, 2.0), v(0.0, -2.0)];
        pts.extend(spikes.iter().cloned());
        let hull = hull2(&pts).unwrap();

        for s in &spikes {
            assert!(hull.iter().any(|p| (p - s).norm() < 1e-15));
        }
        // every hull vertex is an extreme point: it lies strictly outside
        // every segment spanned by other input points
        for hv in &hull {
            for a in &pts {
                for b in &pts {
                    if (a - hv).norm() < 1e-12 || (b - hv).norm() < 1e-12 {
                        continue;
                    }
                    let ab = b - a;
                    let len2 = ab.norm_sq();
                    if len2 < 1e-24 {
                        continue;
                    }
                    let t = (hv - a).dot(&ab) / len2;
                    if (0.0..=1.0).contains(&t) {
                        let proj = a + &ab.scaled(t);
                        assert!(
                            (&proj - hv).norm() > 1e-9,
                            "hull vertex lies on a segment of other points"
                        );
                    }
                }
            }
        }
        // containment: all inputs inside the hull polygon
        let n = hull.len();
        for p in &pts {
            for i in 0..n {
                let a = &hull[i];
                let b = &hull[(i + 1) % n];
                let e = b - a;
                let d = p - a;
                assert!(cross2(&e, &d) >= -1e-9, "input point escapes the hull");
            }
        }
    }
}
