//! Small dense LP solver for support functions of half-space intersections.
//!
//! The primal problem `max <u,x> s.t. <a_k,x> <= b_k` (with all b_k >= 0, so
//! x = 0 is feasible) is solved through its dual
//!
//!   min sum b_k y_k   s.t.  sum y_k a_k = u,  y >= 0,
//!
//! which has only n equality rows regardless of the number of constraints.
//! Two-phase dense simplex with Bland's rule; primal unboundedness shows up
//! as dual infeasibility and is reported as +inf.

use crate::error::{GeomError, Result};
use crate::numkit::grid::SphereGrid;
use crate::numkit::vector::Vector;

const RC_EPS: f64 = 1e-10;
const PIV_EPS: f64 = 1e-11;
const FEAS_EPS: f64 = 1e-8;
const RAY_EPS: f64 = 1e-9;

/// Half-space `<normal, x> <= bound` with unit normal and nonnegative bound.
pub type HalfSpace = (Vector, f64);

#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub objective: Vector,
    constraints: Vec<HalfSpace>,
}

impl LinearProgram {
    pub fn new(objective: Vector, constraints: Vec<HalfSpace>) -> Result<Self> {
        let dim = objective.dim();
        for (a, b) in &constraints {
            if a.dim() != dim {
                return Err(GeomError::DimMismatch { expected: dim, got: a.dim() });
            }
            if (a.norm() - 1.0).abs() > 1e-6 {
                return Err(GeomError::invalid("constraint normals must be unit length"));
            }
            if !b.is_finite() || *b < -1e-12 {
                return Err(GeomError::invalid(format!(
                    "constraint bound must be finite and >= 0, got {b}"
                )));
            }
        }
        Ok(LinearProgram { objective, constraints })
    }

    pub fn constraints(&self) -> &[HalfSpace] {
        &self.constraints
    }

    pub fn maximize(&self) -> Result<f64> {
        lp_max(self, &self.objective.clone())
    }
}

/// Supremum of `<direction, x>` over the feasible set; +inf when unbounded.
pub fn lp_max(lp: &LinearProgram, direction: &Vector) -> Result<f64> {
    if direction.dim() != lp.objective.dim() {
        return Err(GeomError::DimMismatch {
            expected: lp.objective.dim(),
            got: direction.dim(),
        });
    }
    Ok(match dual_support(&lp.constraints, direction) {
        Outcome::Optimal { value, .. } => value,
        Outcome::Unbounded => f64::INFINITY,
    })
}

#[derive(Debug, Clone)]
pub(crate) enum Outcome {
    Optimal { value: f64, basis: Vec<usize> },
    Unbounded,
}

/// One dual simplex solve. `rows` are (unit normal, bound>=0) half-spaces.
pub(crate) fn dual_support(rows: &[HalfSpace], u: &Vector) -> Outcome {
    let n = u.dim();
    let m = rows.len();
    if u.norm() < 1e-15 {
        return Outcome::Optimal { value: 0.0, basis: vec![] };
    }
    if m == 0 {
        return Outcome::Unbounded;
    }

    let cols = m + n; // real columns then artificials
    let width = cols + 1; // + rhs
    // rows 0..n constraints, row n phase-2 reduced costs, row n+1 phase-1
    let mut t = vec![0.0f64; (n + 2) * width];
    let idx = |r: usize, c: usize| r * width + c;

    let flip: Vec<f64> = (0..n).map(|i| if u[i] < 0.0 { -1.0 } else { 1.0 }).collect();
    for i in 0..n {
        for k in 0..m {
            t[idx(i, k)] = flip[i] * rows[k].0[i];
        }
        t[idx(i, m + i)] = 1.0;
        t[idx(i, cols)] = flip[i] * u[i];
    }
    // phase-2 costs: bounds on real columns, zero on artificials
    for k in 0..m {
        t[idx(n, k)] = rows[k].1;
    }
    // phase-1 reduced costs with the artificial basis: -(column sums)
    for k in 0..cols {
        let mut s = 0.0;
        for i in 0..n {
            s += t[idx(i, k)];
        }
        t[idx(n + 1, k)] = if k < m { -s } else { 0.0 };
    }
    let mut p1_obj = 0.0;
    for i in 0..n {
        p1_obj += t[idx(i, cols)];
    }
    t[idx(n + 1, cols)] = -p1_obj;

    let mut basis: Vec<usize> = (m..m + n).collect();

    let pivot = |t: &mut Vec<f64>, basis: &mut Vec<usize>, pr: usize, pc: usize| {
        let pv = t[idx(pr, pc)];
        for c in 0..width {
            t[idx(pr, c)] /= pv;
        }
        for r in 0..n + 2 {
            if r == pr {
                continue;
            }
            let f = t[idx(r, pc)];
            if f != 0.0 {
                for c in 0..width {
                    t[idx(r, c)] -= f * t[idx(pr, c)];
                }
            }
        }
        basis[pr] = pc;
    };

    // Bland's rule: entering = lowest eligible index, leaving = min ratio
    // with lowest basic index on ties. Terminates without cycling.
    let run_phase = |t: &mut Vec<f64>, basis: &mut Vec<usize>, cost_row: usize, allow_artificial: bool| {
        for _ in 0..40_000 {
            let mut enter = None;
            for k in 0..cols {
                if !allow_artificial && k >= m {
                    break;
                }
                if t[idx(cost_row, k)] < -RC_EPS {
                    enter = Some(k);
                    break;
                }
            }
            let Some(pc) = enter else { return true };
            let mut leave: Option<usize> = None;
            let mut best = f64::INFINITY;
            for r in 0..n {
                let a = t[idx(r, pc)];
                if a > PIV_EPS {
                    let ratio = t[idx(r, cols)] / a;
                    if ratio < best - 1e-12
                        || (ratio < best + 1e-12
                            && leave.map_or(true, |lr| basis[r] < basis[lr]))
                    {
                        best = ratio;
                        leave = Some(r);
                    }
                }
            }
            let Some(pr) = leave else { return true }; // cost unbounded below (not expected)
            pivot(t, basis, pr, pc);
        }
        false
    };

    if !run_phase(&mut t, &mut basis, n + 1, true) {
        // iteration cap; should be unreachable with Bland's rule
        debug_assert!(false, "simplex phase 1 stalled");
        return Outcome::Unbounded;
    }
    let p1 = -t[idx(n + 1, cols)];
    if p1 > FEAS_EPS {
        return Outcome::Unbounded;
    }

    // drive leftover artificials out of the basis where possible
    for r in 0..n {
        if basis[r] >= m {
            let mut found = None;
            for k in 0..m {
                if t[idx(r, k)].abs() > 1e-8 {
                    found = Some(k);
                    break;
                }
            }
            if let Some(pc) = found {
                pivot(&mut t, &mut basis, r, pc);
            }
        }
    }

    if !run_phase(&mut t, &mut basis, n, false) {
        debug_assert!(false, "simplex phase 2 stalled");
    }
    let value = (-t[idx(n, cols)]).max(0.0);
    Outcome::Optimal { value, basis: basis.clone() }
}

/// Radial function of the half-space intersection: min over rows with
/// positive alignment of bound / <dir, normal>; +inf when the ray never
/// meets a constraint.
pub fn hrep_radial(rows: &[HalfSpace], dir: &Vector) -> f64 {
    let mut r = f64::INFINITY;
    for (a, b) in rows {
        let d = a.dot(dir);
        if d > RAY_EPS {
            r = r.min(b / d);
        }
    }
    r.max(0.0)
}

/// Batched support values of a half-space intersection over a grid.
///
/// In the plane this precomputes the recession cone to classify unbounded
/// directions without running the simplex, and reuses the previous optimal
/// basis while the query direction stays inside its cone (the basis stays
/// optimal because reduced costs do not depend on the right-hand side).
pub(crate) fn hrep_support_batch(rows: &[HalfSpace], grid: &SphereGrid) -> Vec<f64> {
    let m = rows.len();
    let dirs = grid.dirs();
    if m == 0 {
        return vec![f64::INFINITY; dirs.len()];
    }
    let n = grid.dim();
    let mut out = vec![0.0f64; dirs.len()];

    let recession = if n == 2 { recession_candidates(rows) } else { Vec::new() };

    let mut warm: Option<[usize; 2]> = None;
    'dirs: for (j, u) in dirs.iter().enumerate() {
        for d in &recession {
            if u.dot(d) > RAY_EPS {
                out[j] = f64::INFINITY;
                warm = None;
                continue 'dirs;
            }
        }
        if n == 2 {
            if let Some([p, q]) = warm {
                let (ap, aq) = (&rows[p].0, &rows[q].0);
                let det = ap[0] * aq[1] - ap[1] * aq[0];
                if det.abs() > 1e-12 {
                    let yp = (u[0] * aq[1] - u[1] * aq[0]) / det;
                    let yq = (ap[0] * u[1] - ap[1] * u[0]) / det;
                    if yp >= -1e-9 && yq >= -1e-9 {
                        out[j] = (rows[p].1 * yp + rows[q].1 * yq).max(0.0);
                        continue 'dirs;
                    }
                }
            }
        }
        match dual_support(rows, u) {
            Outcome::Optimal { value, basis } => {
                out[j] = value;
                warm = None;
                if n == 2 && basis.len() == 2 && basis.iter().all(|&k| k < m) {
                    warm = Some([basis[0], basis[1]]);
                }
            }
            Outcome::Unbounded => {
                out[j] = f64::INFINITY;
                warm = None;
            }
        }
    }
    out
}

/// Directions spanning the recession cone of a planar half-space
/// intersection: the candidates are the rotations of each normal by +-90
/// degrees plus the negated normals; a candidate survives if it violates no
/// constraint. Any query direction with positive inner product against a
/// surviving candidate has unbounded support.
fn recession_candidates(rows: &[HalfSpace]) -> Vec<Vector> {
    let mut cands: Vec<Vector> = Vec::new();
    for (a, _) in rows {
        cands.push(Vector::of2(-a[1], a[0]));
        cands.push(Vector::of2(a[1], -a[0]));
        cands.push(-a);
    }
    cands
        .into_iter()
        .filter(|d| rows.iter().all(|(a, _)| a.dot(d) <= RAY_EPS))
        .collect()
}
