//! Euclidean primitives shared by all modules: points, segments and
//! minimum enclosing balls.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::DEFAULT_TOL;

/// A point in d-dimensional Euclidean space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point {
    pub coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Self {
        debug_assert!(!coords.is_empty());
        debug_assert!(coords.iter().all(|c| c.is_finite()));
        Point { coords }
    }

    /// One-dimensional point.
    pub fn one(x: f64) -> Self {
        Point::new(vec![x])
    }

    /// Planar point.
    pub fn two(x: f64, y: f64) -> Self {
        Point::new(vec![x, y])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn dist(&self, other: &Point) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }
}

/// A straight segment between two points of equal dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self> {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch(a.dim(), b.dim()));
        }
        Ok(Segment { a, b })
    }
}

/// A closed ball.
#[derive(Debug, Clone, PartialEq)]
pub struct Ball {
    pub center: Point,
    pub radius: f64,
}

impl Ball {
    pub fn contains(&self, p: &Point, tol: f64) -> bool {
        self.radius >= 0.0 && self.center.dist(p) <= self.radius + tol
    }
}

/// Euclidean distance from `p` to the closest point of segment `s`.
///
/// Zero-length segments degenerate to point-to-point distance.
pub fn point_segment_distance(p: &Point, s: &Segment) -> Result<f64> {
    if p.dim() != s.a.dim() {
        return Err(Error::DimensionMismatch(p.dim(), s.a.dim()));
    }
    let d = p.dim();
    let mut vv = 0.0;
    let mut vw = 0.0;
    for i in 0..d {
        let v = s.b.coords[i] - s.a.coords[i];
        let w = p.coords[i] - s.a.coords[i];
        vv += v * v;
        vw += v * w;
    }
    if vv <= 0.0 {
        return Ok(p.dist(&s.a));
    }
    let t = (vw / vv).clamp(0.0, 1.0);
    let mut acc = 0.0;
    for i in 0..d {
        let c = s.a.coords[i] + t * (s.b.coords[i] - s.a.coords[i]) - p.coords[i];
        acc += c * c;
    }
    Ok(acc.sqrt())
}

/// Exact minimum enclosing ball of a non-empty point set.
///
/// Welzl's recursive scheme with a boundary set of at most d+1 points. The
/// recursion is dimension-generic; the instances in this crate are 1D/2D.
pub fn min_enclosing_ball(points: &[Point]) -> Result<Ball> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let dim = points[0].dim();
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch(dim, p.dim()));
        }
    }
    let refs: Vec<&Point> = points.iter().collect();
    let mut boundary: Vec<&Point> = Vec::with_capacity(dim + 1);
    Ok(welzl(&refs, &mut boundary, dim))
}

fn welzl<'a>(pts: &[&'a Point], boundary: &mut Vec<&'a Point>, dim: usize) -> Ball {
    if pts.is_empty() || boundary.len() == dim + 1 {
        return ball_from_boundary(boundary, dim);
    }
    let p = pts[0];
    let b = welzl(&pts[1..], boundary, dim);
    if b.contains(p, DEFAULT_TOL) {
        return b;
    }
    boundary.push(p);
    let b = welzl(&pts[1..], boundary, dim);
    boundary.pop();
    b
}

fn ball_from_boundary(boundary: &[&Point], dim: usize) -> Ball {
    match boundary.len() {
        0 => Ball {
            center: Point::new(vec![0.0; dim.max(1)]),
            radius: -1.0,
        },
        1 => Ball {
            center: boundary[0].clone(),
            radius: 0.0,
        },
        2 => diameter_ball(boundary[0], boundary[1]),
        _ => circumball(boundary).unwrap_or_else(|| degenerate_boundary_ball(boundary)),
    }
}

fn diameter_ball(a: &Point, b: &Point) -> Ball {
    let center = Point::new(
        a.coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| 0.5 * (x + y))
            .collect(),
    );
    let radius = center.dist(a);
    Ball { center, radius }
}

/// Smallest ball with all boundary points on its surface, if it exists.
///
/// The center lies in the affine hull of the points; solving the Gram system
/// of the difference vectors yields its affine coordinates.
fn circumball(boundary: &[&Point]) -> Option<Ball> {
    let k = boundary.len() - 1;
    let q0 = boundary[0];
    let dim = q0.dim();
    let diffs: Vec<Vec<f64>> = boundary[1..]
        .iter()
        .map(|q| {
            (0..dim)
                .map(|i| q.coords[i] - q0.coords[i])
                .collect::<Vec<f64>>()
        })
        .collect();
    // Gram system: 2 * sum_j lambda_j (u_i . u_j) = |u_i|^2
    let mut a = vec![vec![0.0; k + 1]; k];
    for i in 0..k {
        for j in 0..k {
            a[i][j] = 2.0 * dot(&diffs[i], &diffs[j]);
        }
        a[i][k] = dot(&diffs[i], &diffs[i]);
    }
    let lambda = solve_gauss(&mut a)?;
    let mut center = q0.coords.clone();
    for (j, u) in diffs.iter().enumerate() {
        for i in 0..dim {
            center[i] += lambda[j] * u[i];
        }
    }
    let center = Point::new(center);
    let radius = center.dist(q0);
    Some(Ball { center, radius })
}

/// Fallback for affinely degenerate boundary sets: the diameter ball of the
/// farthest pair covers all boundary points in that case (within tolerance,
/// which is how such sets arrive here in the first place).
fn degenerate_boundary_ball(boundary: &[&Point]) -> Ball {
    let mut best = (0, 1, boundary[0].dist(boundary[1]));
    for i in 0..boundary.len() {
        for j in (i + 1)..boundary.len() {
            let d = boundary[i].dist(boundary[j]);
            if d > best.2 {
                best = (i, j, d);
            }
        }
    }
    diameter_ball(boundary[best.0], boundary[best.1])
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Gaussian elimination with partial pivoting on an augmented k x (k+1) matrix.
#[allow(clippy::needless_range_loop)] // rows are borrowed in pairs
fn solve_gauss(a: &mut [Vec<f64>]) -> Option<Vec<f64>> {
    let k = a.len();
    for col in 0..k {
        let pivot = (col..k).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[pivot][col].abs() < 1e-12 {
            return None;
        }
        a.swap(col, pivot);
        for row in (col + 1)..k {
            let f = a[row][col] / a[col][col];
            for c in col..=k {
                a[row][c] -= f * a[col][c];
            }
        }
    }
    let mut x = vec![0.0; k];
    for col in (0..k).rev() {
        let mut s = a[col][k];
        for c in (col + 1)..k {
            s -= a[col][c] * x[c];
        }
        x[col] = s / a[col][col];
    }
    Some(x)
}
