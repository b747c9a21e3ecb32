//! Independent brute-force references. These are deliberately slow,
//! exhaustively enumerating paths; size guards are hard errors so they can
//! never masquerade as scalable code paths. They anchor the property tests
//! of the fast implementations.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::frechet::{Metric, PolyCurve};
use crate::geometry::{min_enclosing_ball, Point};
use crate::DEFAULT_TOL;

/// Exhaustive minimum over all monotone alignments of the max pair distance.
pub fn brute_discrete_frechet(a: &PolyCurve, b: &PolyCurve) -> Result<f64> {
    let (m, n) = (a.complexity(), b.complexity());
    if m * n > 36 {
        return Err(Error::SizeGuard(format!("|a|*|b| = {} > 36", m * n)));
    }
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    fn go(a: &PolyCurve, b: &PolyCurve, i: usize, j: usize) -> f64 {
        let d = a.vertices[i].dist(&b.vertices[j]);
        let (m, n) = (a.complexity(), b.complexity());
        if i == m - 1 && j == n - 1 {
            return d;
        }
        let mut best = f64::INFINITY;
        if i + 1 < m {
            best = best.min(go(a, b, i + 1, j));
        }
        if j + 1 < n {
            best = best.min(go(a, b, i, j + 1));
        }
        if i + 1 < m && j + 1 < n {
            best = best.min(go(a, b, i + 1, j + 1));
        }
        d.max(best)
    }
    Ok(go(a, b, 0, 0))
}

/// Minimum number of contiguous vertex groups, each with minimum enclosing
/// ball radius at most `delta`, by full enumeration of split points.
pub fn brute_min_size_partition(c: &PolyCurve, delta: f64) -> Result<usize> {
    let m = c.complexity();
    if m > 12 {
        return Err(Error::SizeGuard(format!("m = {} > 12", m)));
    }
    fn go(verts: &[Point], from: usize, delta: f64) -> usize {
        if from == verts.len() {
            return 0;
        }
        let mut best = usize::MAX;
        for to in from..verts.len() {
            let ball = min_enclosing_ball(&verts[from..=to]).expect("non-empty group");
            if ball.radius <= delta + DEFAULT_TOL {
                best = best.min(1 + go(verts, to + 1, delta));
            } else {
                break; // radius only grows with the group
            }
        }
        best
    }
    Ok(go(&c.vertices, 0, delta))
}

/// A shortest common supersequence over {A, B} via breadth-first search over
/// prefix-tuple states. Length is the contract; the string itself is one
/// witness among possibly many.
pub fn brute_scs(strings: &[String]) -> Result<String> {
    let total: usize = strings.iter().map(|s| s.len()).sum();
    if total > 20 {
        return Err(Error::SizeGuard(format!("total length {} > 20", total)));
    }
    for s in strings {
        if s.is_empty() || !s.chars().all(|c| c == 'A' || c == 'B') {
            return Err(Error::Malformed(format!(
                "strings must be non-empty over {{A,B}}, got {:?}",
                s
            )));
        }
    }
    let n = strings.len();
    let goal: Vec<usize> = strings.iter().map(|s| s.len()).collect();
    let bytes: Vec<&[u8]> = strings.iter().map(|s| s.as_bytes()).collect();
    let start = vec![0usize; n];
    let mut parent: HashMap<Vec<usize>, (Vec<usize>, u8)> = HashMap::new();
    let mut queue = VecDeque::new();
    queue.push_back(start.clone());
    parent.insert(start.clone(), (start.clone(), 0));
    while let Some(state) = queue.pop_front() {
        if state == goal {
            // Reconstruct.
            let mut out = Vec::new();
            let mut cur = state;
            while cur != start {
                let (prev, ch) = parent[&cur].clone();
                out.push(ch);
                cur = prev;
            }
            out.reverse();
            return Ok(String::from_utf8(out).expect("ascii"));
        }
        for &ch in b"AB" {
            let next: Vec<usize> = state
                .iter()
                .enumerate()
                .map(|(i, &p)| {
                    if p < goal[i] && bytes[i][p] == ch {
                        p + 1
                    } else {
                        p
                    }
                })
                .collect();
            if next != state && !parent.contains_key(&next) {
                parent.insert(next.clone(), (state.clone(), ch));
                queue.push_back(next);
            }
        }
    }
    unreachable!("appending letters always makes progress toward the goal")
}

/// Minimum over all center curves with at most `ell` vertices drawn from
/// `candidates` of the max distance to the input curves.
pub fn brute_one_center_radius(
    curves: &[PolyCurve],
    ell: usize,
    candidates: &[Point],
    metric: Metric,
) -> Result<f64> {
    if curves.is_empty() || candidates.is_empty() || ell == 0 {
        return Err(Error::EmptyInput);
    }
    let c = candidates.len();
    if (c as f64).powi(ell as i32) > 1e6 {
        return Err(Error::SizeGuard(format!("{}^{} > 1e6", c, ell)));
    }
    let mut best = f64::INFINITY;
    let mut indices = vec![0usize; 1];
    loop {
        let center = PolyCurve::new(
            "candidate",
            indices.iter().map(|&i| candidates[i].clone()).collect(),
        )?;
        let mut radius = 0.0f64;
        for curve in curves {
            let d = match metric {
                Metric::Discrete => crate::frechet::discrete_frechet(curve, &center)?,
                Metric::Continuous => crate::frechet::continuous_frechet(curve, &center, 1e-7)?,
            };
            radius = radius.max(d);
        }
        best = best.min(radius);
        // Advance the mixed-radix counter over sequences of length 1..=ell.
        let mut pos = indices.len();
        loop {
            if pos == 0 {
                if indices.len() == ell {
                    return Ok(best);
                }
                indices = vec![0; indices.len() + 1];
                break;
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < c {
                break;
            }
            indices[pos] = 0;
        }
    }
}
