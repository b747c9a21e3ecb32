//! Curve simplification: weak min-size and min-error under the discrete
//! Fréchet distance, and vertex-constrained min-size plus the 4-approximate
//! min-error variant under the continuous Fréchet distance.
//!
//! Under the discrete metric each simplification vertex matches a contiguous
//! run of input vertices, so weak min-size reduces to covering the vertex
//! sequence by the fewest contiguous groups of enclosing-ball radius at most
//! delta, emitting each group's ball center.

use crate::error::{Error, Result};
use crate::frechet::{segment_curve_frechet, segment_curve_frechet_decide, PolyCurve};
use crate::geometry::{min_enclosing_ball, Segment};
use crate::DEFAULT_TOL;

/// A simplified curve together with its error and complexity.
#[derive(Debug, Clone)]
pub struct SimplifyResult {
    pub curve: PolyCurve,
    pub error: f64,
    pub complexity: usize,
}

impl SimplifyResult {
    fn new(curve: PolyCurve, error: f64) -> Self {
        let complexity = curve.complexity();
        SimplifyResult {
            curve,
            error,
            complexity,
        }
    }
}

/// Weak minimum-complexity delta-simplification under the discrete Fréchet
/// distance: greedy farthest extension of contiguous groups. Feasibility of
/// a group is monotone under shrinking, so the greedy is optimal.
pub fn min_size_simplify_discrete(c: &PolyCurve, delta: f64) -> SimplifyResult {
    let verts = &c.vertices;
    let mut centers = Vec::new();
    let mut error = 0.0f64;
    let mut i = 0;
    while i < verts.len() {
        let mut best = min_enclosing_ball(&verts[i..=i]).expect("singleton group");
        let mut j = i;
        while j + 1 < verts.len() {
            let ball = min_enclosing_ball(&verts[i..=j + 1]).expect("non-empty group");
            if ball.radius <= delta + DEFAULT_TOL {
                best = ball;
                j += 1;
            } else {
                break;
            }
        }
        error = error.max(best.radius);
        centers.push(best.center);
        i = j + 1;
    }
    let curve = PolyCurve::new(format!("{}-simplified", c.id), centers).expect("non-empty");
    SimplifyResult::new(curve, error)
}

/// Weak minimum-error ell-simplification under the discrete Fréchet
/// distance: binary search over the candidate set of all contiguous-run
/// enclosing-ball radii, with the greedy min-size as decider.
pub fn min_error_simplify_discrete(c: &PolyCurve, ell: usize) -> Result<SimplifyResult> {
    if ell == 0 {
        return Err(Error::InvalidParameter("ell must be >= 1".into()));
    }
    let m = c.complexity();
    if ell >= m {
        return Ok(SimplifyResult::new(c.clone(), 0.0));
    }
    let mut candidates = Vec::new();
    for i in 0..m {
        for j in i..m {
            let ball = min_enclosing_ball(&c.vertices[i..=j]).expect("non-empty run");
            candidates.push(ball.radius);
        }
    }
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();
    // Smallest candidate radius at which the greedy needs <= ell groups.
    let mut lo = 0usize;
    let mut hi = candidates.len() - 1;
    debug_assert!(min_size_simplify_discrete(c, candidates[hi]).complexity <= ell);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if min_size_simplify_discrete(c, candidates[mid]).complexity <= ell {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let result = min_size_simplify_discrete(c, candidates[lo]);
    Ok(SimplifyResult::new(result.curve, candidates[lo]))
}

/// Shortcut-graph distances from vertex 0 (forward) or to the last vertex
/// (backward), where edge (i,j) exists iff the segment p_i p_j is within
/// delta of the subcurve c[i..=j].
fn shortcut_distances(c: &PolyCurve, delta: f64, backward: bool) -> Result<Vec<usize>> {
    let m = c.complexity();
    let mut dist = vec![usize::MAX; m];
    let (start, target): (usize, Box<dyn Fn(usize) -> Vec<usize>>) = if backward {
        (m - 1, Box::new(move |v| (0..v).collect()))
    } else {
        (0, Box::new(move |v| (v + 1..m).collect()))
    };
    dist[start] = 0;
    // The graph is a DAG over vertex indices; process in index order.
    let order: Vec<usize> = if backward {
        (0..m).rev().collect()
    } else {
        (0..m).collect()
    };
    for &v in &order {
        if dist[v] == usize::MAX {
            continue;
        }
        for u in target(v) {
            if dist[v] + 1 < dist[u] && shortcut_edge(c, v.min(u), v.max(u), delta)? {
                dist[u] = dist[v] + 1;
            }
        }
    }
    Ok(dist)
}

fn shortcut_edge(c: &PolyCurve, i: usize, j: usize, delta: f64) -> Result<bool> {
    let seg = Segment::new(c.vertices[i].clone(), c.vertices[j].clone())?;
    let sub = PolyCurve::new("sub", c.vertices[i..=j].to_vec())?;
    segment_curve_frechet_decide(&seg, &sub, delta)
}

/// Vertex-constrained minimum-complexity delta-simplification under the
/// continuous Fréchet distance (shortcut graph over the input vertices,
/// shortest path from the first to the last vertex). Among equal-length
/// paths the lexicographically smallest index sequence is returned.
pub fn min_size_simplify_continuous_vc(c: &PolyCurve, delta: f64) -> Result<SimplifyResult> {
    let m = c.complexity();
    if m == 1 {
        return Ok(SimplifyResult::new(c.clone(), 0.0));
    }
    if delta < 0.0 {
        return Err(Error::InvalidParameter("negative delta".into()));
    }
    let fwd = shortcut_distances(c, delta, false)?;
    let bwd = shortcut_distances(c, delta, true)?;
    let total = fwd[m - 1];
    debug_assert_ne!(total, usize::MAX, "consecutive edges are always free");
    // Lexicographically smallest shortest path: greedily take the smallest
    // next index that still admits a completion of the right length.
    let mut path = vec![0usize];
    let mut cur = 0usize;
    while cur != m - 1 {
        let steps_taken = path.len() - 1;
        let next = (cur + 1..m)
            .find(|&j| {
                fwd[cur] + 1 + bwd[j] == total
                    && steps_taken + 1 + bwd[j] == total
                    && shortcut_edge(c, cur, j, delta).unwrap_or(false)
            })
            .expect("shortest path exists");
        path.push(next);
        cur = next;
    }
    let vertices: Vec<_> = path.iter().map(|&i| c.vertices[i].clone()).collect();
    let curve = PolyCurve::new(format!("{}-simplified", c.id), vertices)?;
    let error = path_error(c, &path)?;
    Ok(SimplifyResult::new(curve, error))
}

/// Max over consecutive path pairs of the segment-to-subcurve distance.
fn path_error(c: &PolyCurve, path: &[usize]) -> Result<f64> {
    let mut err = 0.0f64;
    for w in path.windows(2) {
        let seg = Segment::new(c.vertices[w[0]].clone(), c.vertices[w[1]].clone())?;
        let sub = PolyCurve::new("sub", c.vertices[w[0]..=w[1]].to_vec())?;
        err = err.max(segment_curve_frechet(&seg, &sub, DEFAULT_TOL)?);
    }
    Ok(err)
}

/// Minimum-error vertex-constrained ell-simplification under the continuous
/// Fréchet distance. Its error is within a factor 4 of the optimal weak
/// ell-simplification error, since any weak eps-simplification admits a
/// vertex-constrained one of the same complexity with error at most 4 eps.
pub fn approx4_min_error_simplify_continuous(
    c: &PolyCurve,
    ell: usize,
) -> Result<SimplifyResult> {
    if ell < 2 {
        return Err(Error::InvalidParameter(
            "continuous vertex-constrained simplification needs both endpoints".into(),
        ));
    }
    let m = c.complexity();
    if ell >= m {
        return Ok(SimplifyResult::new(c.clone(), 0.0));
    }
    // Candidate errors: segment-to-subcurve distances of all shortcut pairs.
    let mut candidates = vec![0.0f64];
    for i in 0..m {
        for j in (i + 1)..m {
            let seg = Segment::new(c.vertices[i].clone(), c.vertices[j].clone())?;
            let sub = PolyCurve::new("sub", c.vertices[i..=j].to_vec())?;
            candidates.push(segment_curve_frechet(&seg, &sub, DEFAULT_TOL)?);
        }
    }
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();
    let feasible = |err: f64| -> Result<bool> {
        Ok(min_size_simplify_continuous_vc(c, err)?.complexity <= ell)
    };
    let mut lo = 0usize;
    let mut hi = candidates.len() - 1;
    debug_assert!(feasible(candidates[hi])?);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(candidates[mid])? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let result = min_size_simplify_continuous_vc(c, candidates[lo])?;
    Ok(SimplifyResult::new(result.curve, candidates[lo]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frechet::discrete_frechet;
    use crate::geometry::Point;
    use crate::oracle::brute_min_size_partition;

    fn c1(xs: &[f64]) -> PolyCurve {
        PolyCurve::from_coords_1d("c", xs).unwrap()
    }

    fn c2(pts: &[(f64, f64)]) -> PolyCurve {
        PolyCurve::new("c", pts.iter().map(|&(x, y)| Point::two(x, y)).collect()).unwrap()
    }

    #[test]
    fn min_size_discrete_basic() {
        // Derived by brute force over all contiguous partitions.
        let r = min_size_simplify_discrete(&c1(&[0.0, 0.5, 10.0]), 1.0);
        assert_eq!(r.complexity, 2);
        assert!((r.curve.vertices[0].coords[0] - 0.25).abs() < 1e-9);
        assert!((r.curve.vertices[1].coords[0] - 10.0).abs() < 1e-9);
        assert!(r.error <= 1.0 + 1e-9);
    }

    #[test]
    fn min_size_discrete_single_ball() {
        let r = min_size_simplify_discrete(&c1(&[0.2, -0.3, 0.4, 0.0]), 1.0);
        assert_eq!(r.complexity, 1);
    }

    #[test]
    fn min_size_discrete_buffer_gadget() {
        // Alternating +-1 collapses to a single vertex at 0 for delta 1.
        let buffer = c1(&[-1.0, 1.0, -1.0, 1.0, -1.0, 1.0]);
        let r = min_size_simplify_discrete(&buffer, 1.0);
        assert_eq!(r.complexity, 1);
        assert!(r.curve.vertices[0].coords[0].abs() < 1e-9);
    }

    #[test]
    fn min_size_discrete_delta_zero_dedups() {
        let r = min_size_simplify_discrete(&c1(&[1.0, 1.0, 2.0, 2.0, 2.0, 3.0]), 0.0);
        assert_eq!(r.complexity, 3);
    }

    #[test]
    fn min_size_matches_brute_partition() {
        let curves = [
            c1(&[0.0, 0.5, 10.0, 10.5, 20.0]),
            c1(&[0.0, 2.0, 0.0, 2.0, 4.0, 6.0]),
            c2(&[(0.0, 0.0), (1.0, 1.0), (5.0, 0.0), (5.5, 0.5), (9.0, 9.0)]),
        ];
        for c in &curves {
            for delta in [0.0, 0.5, 1.0, 3.0] {
                let fast = min_size_simplify_discrete(c, delta).complexity;
                let brute = brute_min_size_partition(c, delta).unwrap();
                assert_eq!(fast, brute, "curve {:?} delta {}", c.id, delta);
            }
        }
    }

    #[test]
    fn min_size_result_within_delta() {
        let c = c1(&[0.0, 1.5, 3.0, 2.5, 8.0, 8.2]);
        for delta in [0.5, 1.0, 2.0] {
            let r = min_size_simplify_discrete(&c, delta);
            assert!(discrete_frechet(&c, &r.curve).unwrap() <= delta + 1e-9);
        }
    }

    #[test]
    fn min_error_discrete_examples() {
        // Derived by enumerating all partitions into <= 2 groups.
        let r = min_error_simplify_discrete(&c1(&[0.0, 10.0, 0.0, 10.0]), 2).unwrap();
        assert!((r.error - 5.0).abs() < 1e-9);

        let r = min_error_simplify_discrete(&c1(&[0.0, 1.0, 10.0, 11.0]), 2).unwrap();
        assert!((r.error - 0.5).abs() < 1e-9);
        assert!((r.curve.vertices[0].coords[0] - 0.5).abs() < 1e-9);
        assert!((r.curve.vertices[1].coords[0] - 10.5).abs() < 1e-9);

        let c = c1(&[0.0, 1.0, 2.0]);
        let r = min_error_simplify_discrete(&c, 5).unwrap();
        assert_eq!(r.error, 0.0);
        assert_eq!(r.complexity, 3);
    }

    #[test]
    fn vc_simplify_collinear_and_spike() {
        let collinear = c2(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0)]);
        let r = min_size_simplify_continuous_vc(&collinear, 0.0).unwrap();
        assert_eq!(r.complexity, 2);

        let h = 0.5;
        let spike = c2(&[(0.0, 0.0), (1.0, h), (2.0, 0.0)]);
        let below = min_size_simplify_continuous_vc(&spike, h - 1e-6).unwrap();
        assert_eq!(below.complexity, 3);
        let at = min_size_simplify_continuous_vc(&spike, h).unwrap();
        assert_eq!(at.complexity, 2);
    }

    #[test]
    fn vc_simplify_single_vertex_curve() {
        let single = c2(&[(1.0, 2.0)]);
        let r = min_size_simplify_continuous_vc(&single, 0.5).unwrap();
        assert_eq!(r.complexity, 1);
    }

    #[test]
    fn vc_complexity_non_increasing_in_delta() {
        let c = c2(&[
            (0.0, 0.0),
            (1.0, 0.8),
            (2.0, -0.4),
            (3.0, 0.6),
            (4.0, 0.0),
            (5.0, 1.2),
        ]);
        let mut last = usize::MAX;
        for delta in [0.0, 0.2, 0.5, 0.9, 1.5, 3.0] {
            let k = min_size_simplify_continuous_vc(&c, delta).unwrap().complexity;
            assert!(k <= last);
            last = k;
        }
    }

    #[test]
    fn approx4_examples() {
        let collinear = c2(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0), (4.0, 0.0)]);
        let r = approx4_min_error_simplify_continuous(&collinear, 2).unwrap();
        assert!(r.error < 1e-9);
        assert_eq!(r.complexity, 2);

        let h = 0.7;
        let spike = c2(&[(0.0, 0.0), (1.0, h), (2.0, 0.0)]);
        let r = approx4_min_error_simplify_continuous(&spike, 2).unwrap();
        assert!((r.error - h).abs() < 1e-6);
    }

    #[test]
    fn approx4_needs_two_endpoints() {
        let c = c2(&[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)]);
        assert!(approx4_min_error_simplify_continuous(&c, 1).is_err());
    }

    #[test]
    fn approx4_result_is_endpoint_anchored_subsequence() {
        let c = c2(&[
            (0.0, 0.0),
            (1.0, 1.0),
            (2.0, -0.5),
            (3.0, 0.7),
            (4.0, 0.1),
        ]);
        let r = approx4_min_error_simplify_continuous(&c, 3).unwrap();
        assert_eq!(r.curve.vertices.first(), c.vertices.first());
        assert_eq!(r.curve.vertices.last(), c.vertices.last());
        // Subsequence check.
        let mut idx = 0;
        for v in &r.curve.vertices {
            while idx < c.complexity() && &c.vertices[idx] != v {
                idx += 1;
            }
            assert!(idx < c.complexity(), "not a subsequence");
            idx += 1;
        }
    }
}
