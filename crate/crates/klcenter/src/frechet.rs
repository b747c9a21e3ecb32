//! Distance computations between polygonal curves: the exact discrete
//! Fréchet distance, the continuous Fréchet decision procedure via
//! free-space reachability, and bisection for the continuous value.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point, Segment};

/// Which Fréchet distance is in effect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Discrete,
    Continuous,
}

/// A polygonal curve: an identifier plus a non-empty vertex sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyCurve {
    pub id: String,
    pub vertices: Vec<Point>,
}

impl PolyCurve {
    pub fn new(id: impl Into<String>, vertices: Vec<Point>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyInput);
        }
        let dim = vertices[0].dim();
        for v in &vertices {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch(dim, v.dim()));
            }
        }
        Ok(PolyCurve {
            id: id.into(),
            vertices,
        })
    }

    /// Curve from 1D coordinates.
    pub fn from_coords_1d(id: impl Into<String>, coords: &[f64]) -> Result<Self> {
        PolyCurve::new(id, coords.iter().map(|&x| Point::one(x)).collect())
    }

    /// Number of vertices (the curve's complexity).
    pub fn complexity(&self) -> usize {
        self.vertices.len()
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].dim()
    }
}

/// A monotone alignment between two vertex sequences: starts at (0,0),
/// ends at (m-1,n-1), each step advances one or both indices by one.
/// (The underlying definition is 1-based; indices here are 0-based.)
#[derive(Debug, Clone, PartialEq)]
pub struct Alignment {
    pub pairs: Vec<(usize, usize)>,
}

impl Alignment {
    /// Checks the structural invariants against curve complexities m, n.
    pub fn is_valid(&self, m: usize, n: usize) -> bool {
        if self.pairs.first() != Some(&(0, 0)) || self.pairs.last() != Some(&(m - 1, n - 1)) {
            return false;
        }
        self.pairs.windows(2).all(|w| {
            let (i0, j0) = w[0];
            let (i1, j1) = w[1];
            let di = i1.wrapping_sub(i0);
            let dj = j1.wrapping_sub(j0);
            di <= 1 && dj <= 1 && di + dj >= 1
        })
    }
}

fn check_dims(a: &PolyCurve, b: &PolyCurve) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    Ok(())
}

/// Exact discrete Fréchet distance via the m x n dynamic program.
pub fn discrete_frechet(a: &PolyCurve, b: &PolyCurve) -> Result<f64> {
    check_dims(a, b)?;
    let (m, n) = (a.complexity(), b.complexity());
    let mut prev = vec![0.0f64; n];
    let mut cur = vec![0.0f64; n];
    for i in 0..m {
        for j in 0..n {
            let d = a.vertices[i].dist(&b.vertices[j]);
            let best_prev = match (i, j) {
                (0, 0) => 0.0,
                (0, _) => cur[j - 1],
                (_, 0) => prev[j],
                _ => prev[j].min(prev[j - 1]).min(cur[j - 1]),
            };
            cur[j] = d.max(best_prev);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(prev[n - 1])
}

/// Discrete Fréchet distance together with a witness alignment
/// (backtracked through the dynamic program).
pub fn discrete_frechet_alignment(a: &PolyCurve, b: &PolyCurve) -> Result<(f64, Alignment)> {
    check_dims(a, b)?;
    let (m, n) = (a.complexity(), b.complexity());
    let mut dp = vec![vec![0.0f64; n]; m];
    for i in 0..m {
        for j in 0..n {
            let d = a.vertices[i].dist(&b.vertices[j]);
            let best_prev = match (i, j) {
                (0, 0) => 0.0,
                (0, _) => dp[0][j - 1],
                (_, 0) => dp[i - 1][0],
                _ => dp[i - 1][j].min(dp[i - 1][j - 1]).min(dp[i][j - 1]),
            };
            dp[i][j] = d.max(best_prev);
        }
    }
    let mut pairs = vec![(m - 1, n - 1)];
    let (mut i, mut j) = (m - 1, n - 1);
    while i > 0 || j > 0 {
        let (pi, pj) = match (i, j) {
            (0, _) => (0, j - 1),
            (_, 0) => (i - 1, 0),
            _ => {
                let diag = dp[i - 1][j - 1];
                let up = dp[i - 1][j];
                let left = dp[i][j - 1];
                if diag <= up && diag <= left {
                    (i - 1, j - 1)
                } else if up <= left {
                    (i - 1, j)
                } else {
                    (i, j - 1)
                }
            }
        };
        pairs.push((pi, pj));
        i = pi;
        j = pj;
    }
    pairs.reverse();
    Ok((dp[m - 1][n - 1], Alignment { pairs }))
}

type Interval = Option<(f64, f64)>;

/// Free-space diagram of two curves at threshold `delta`: the free portions
/// of cell boundaries, stored as subintervals of [0,1] per boundary segment.
pub struct FreeSpaceDiagram {
    pub delta: f64,
    /// `left[i][j]`: free interval of vertex a_i against edge (b_j, b_{j+1}).
    left: Vec<Vec<Interval>>,
    /// `bottom[i][j]`: free interval of vertex b_j against edge (a_i, a_{i+1}).
    bottom: Vec<Vec<Interval>>,
    m: usize,
    n: usize,
}

impl FreeSpaceDiagram {
    /// Requires both curves to have at least 2 vertices.
    pub fn new(a: &PolyCurve, b: &PolyCurve, delta: f64) -> Result<Self> {
        check_dims(a, b)?;
        let (m, n) = (a.complexity(), b.complexity());
        if m < 2 || n < 2 {
            return Err(Error::InvalidParameter(
                "free-space diagram needs curves of complexity >= 2".into(),
            ));
        }
        let mut left = vec![vec![None; n - 1]; m];
        for (i, v) in a.vertices.iter().enumerate() {
            for (j, e) in b.vertices.windows(2).enumerate() {
                left[i][j] = free_interval(v, &e[0], &e[1], delta);
            }
        }
        let mut bottom = vec![vec![None; n]; m - 1];
        for (i, e) in a.vertices.windows(2).enumerate() {
            for (j, w) in b.vertices.iter().enumerate() {
                bottom[i][j] = free_interval(w, &e[0], &e[1], delta);
            }
        }
        Ok(FreeSpaceDiagram {
            delta,
            left,
            bottom,
            m,
            n,
        })
    }

    /// Monotone reachability from (0,0) to (1,1) through the free space.
    pub fn reachable(&self) -> bool {
        let (m, n) = (self.m, self.n);
        let mut lr: Vec<Vec<Interval>> = vec![vec![None; n - 1]; m];
        let mut br: Vec<Vec<Interval>> = vec![vec![None; n]; m - 1];
        let starts_at_zero = |iv: Interval| iv.filter(|&(lo, _)| lo == 0.0);
        lr[0][0] = starts_at_zero(self.left[0][0]);
        br[0][0] = starts_at_zero(self.bottom[0][0]);
        // Along the outer boundary the path must pass through the shared
        // corner of consecutive boundary intervals.
        for j in 1..n - 1 {
            lr[0][j] = match (lr[0][j - 1], self.left[0][j]) {
                (Some((_, hi_prev)), Some((lo, hi))) if hi_prev >= 1.0 && lo == 0.0 => {
                    Some((0.0, hi))
                }
                _ => None,
            };
        }
        for i in 1..m - 1 {
            br[i][0] = match (br[i - 1][0], self.bottom[i][0]) {
                (Some((_, hi_prev)), Some((lo, hi))) if hi_prev >= 1.0 && lo == 0.0 => {
                    Some((0.0, hi))
                }
                _ => None,
            };
        }
        for i in 0..m - 1 {
            for j in 0..n - 1 {
                let from_left = lr[i][j];
                let from_bottom = br[i][j];
                lr[i + 1][j] = propagate(self.left[i + 1][j], from_bottom, from_left);
                br[i][j + 1] = propagate(self.bottom[i][j + 1], from_left, from_bottom);
            }
        }
        let end_right = lr[m - 1][n - 2].is_some_and(|(_, hi)| hi >= 1.0);
        let end_top = br[m - 2][n - 1].is_some_and(|(_, hi)| hi >= 1.0);
        end_right || end_top
    }
}

/// Reachable portion of an exit boundary of a cell. Entering from the
/// orthogonal boundary permits any exit parameter; entering along the
/// parallel boundary forces the exit parameter to be no smaller than the
/// lowest reachable entry (the free space inside a cell is convex).
fn propagate(exit_free: Interval, orthogonal: Interval, parallel: Interval) -> Interval {
    let (lo, hi) = exit_free?;
    if orthogonal.is_some() {
        return Some((lo, hi));
    }
    let (par_lo, _) = parallel?;
    if par_lo > hi {
        None
    } else {
        Some((lo.max(par_lo), hi))
    }
}

/// Parameters t in [0,1] with |seg(t) - p| <= delta, where seg runs from
/// `a` to `b`. Roots of a quadratic, clamped to [0,1].
fn free_interval(p: &Point, a: &Point, b: &Point, delta: f64) -> Interval {
    let d = p.dim();
    let mut vv = 0.0;
    let mut vw = 0.0;
    let mut ww = 0.0;
    for i in 0..d {
        let v = b.coords[i] - a.coords[i];
        let w = a.coords[i] - p.coords[i];
        vv += v * v;
        vw += v * w;
        ww += w * w;
    }
    if vv <= 0.0 {
        // Point-like cell edge.
        return if ww.sqrt() <= delta {
            Some((0.0, 1.0))
        } else {
            None
        };
    }
    // vv t^2 + 2 vw t + ww - delta^2 <= 0
    let disc = vw * vw - vv * (ww - delta * delta);
    // A discriminant that is a rounding error away from zero is a tangent
    // configuration (delta exactly equal to a vertex distance); dropping it
    // would make the decision reject its own upper bound.
    let scale = vw * vw + vv.abs() * (ww + delta * delta);
    if disc < -1e-12 * scale {
        return None;
    }
    let sq = disc.max(0.0).sqrt();
    let lo = ((-vw - sq) / vv).clamp(0.0, 1.0);
    let hi = ((-vw + sq) / vv).clamp(0.0, 1.0);
    if lo > hi {
        return None;
    }
    // Reject intervals that clamp to an endpoint outside the free ball.
    let at = |t: f64| -> f64 { (vv * t * t + 2.0 * vw * t + ww).sqrt() };
    if at(lo) > delta + 1e-12 && at(hi) > delta + 1e-12 {
        return None;
    }
    Some((lo, hi))
}

/// Decides whether the continuous Fréchet distance is at most `delta`.
pub fn continuous_frechet_decide(a: &PolyCurve, b: &PolyCurve, delta: f64) -> Result<bool> {
    check_dims(a, b)?;
    if delta < 0.0 {
        return Err(Error::InvalidParameter("negative delta".into()));
    }
    // A single-vertex curve matches another curve iff every point of the
    // other curve is within delta; the farthest point of a segment from a
    // fixed point is one of its endpoints.
    if a.complexity() == 1 {
        return Ok(b.vertices.iter().all(|v| v.dist(&a.vertices[0]) <= delta));
    }
    if b.complexity() == 1 {
        return Ok(a.vertices.iter().all(|v| v.dist(&b.vertices[0]) <= delta));
    }
    if a.vertices[0].dist(&b.vertices[0]) > delta
        || a.vertices[a.complexity() - 1].dist(&b.vertices[b.complexity() - 1]) > delta
    {
        return Ok(false);
    }
    Ok(FreeSpaceDiagram::new(a, b, delta)?.reachable())
}

/// Continuous Fréchet distance by bisection: returns a value `v` with
/// decide(v) true and decide(v - tol) false (or v equal to the lower bound).
pub fn continuous_frechet(a: &PolyCurve, b: &PolyCurve, tol: f64) -> Result<f64> {
    check_dims(a, b)?;
    if tol <= 0.0 {
        return Err(Error::InvalidParameter("tol must be positive".into()));
    }
    let lb = a.vertices[0]
        .dist(&b.vertices[0])
        .max(a.vertices[a.complexity() - 1].dist(&b.vertices[b.complexity() - 1]));
    if continuous_frechet_decide(a, b, lb)? {
        // The endpoint distances lower-bound d_F, so this is exact.
        return Ok(lb);
    }
    let mut lo = lb;
    let mut hi = discrete_frechet(a, b)?;
    // d_F <= d_DF always holds, but at delta exactly d_DF the free space
    // can degenerate to single points that rounding then loses; widen the
    // bound minimally until the decision accepts it.
    let mut bump = 1e-12 * hi.max(1.0);
    while !continuous_frechet_decide(a, b, hi)? {
        hi += bump;
        bump *= 2.0;
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if continuous_frechet_decide(a, b, mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Fréchet distance between the single-edge curve (s.a, s.b) and `c`.
pub fn segment_curve_frechet(s: &Segment, c: &PolyCurve, tol: f64) -> Result<f64> {
    let seg_curve = PolyCurve::new("segment", vec![s.a.clone(), s.b.clone()])?;
    continuous_frechet(&seg_curve, c, tol)
}

/// Decision variant of [`segment_curve_frechet`]; exact, no bisection.
pub fn segment_curve_frechet_decide(s: &Segment, c: &PolyCurve, delta: f64) -> Result<bool> {
    let seg_curve = PolyCurve::new("segment", vec![s.a.clone(), s.b.clone()])?;
    continuous_frechet_decide(&seg_curve, c, delta)
}
