//! (k,l)-center clustering: the adapted Gonzalez farthest-first traversal,
//! the 3-approximate decider, and the geometric search wrapper.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frechet::{continuous_frechet, discrete_frechet, Metric, PolyCurve};
use crate::simplify::{
    approx4_min_error_simplify_continuous, min_error_simplify_discrete,
    min_size_simplify_continuous_vc, min_size_simplify_discrete, SimplifyResult,
};

/// Parameters of a clustering run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClusterParams {
    pub k: usize,
    pub ell: usize,
    pub metric: Metric,
    pub tol: f64,
}

impl ClusterParams {
    pub fn new(k: usize, ell: usize, metric: Metric, tol: f64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be >= 1".into()));
        }
        let min_ell = match metric {
            Metric::Discrete => 1,
            Metric::Continuous => 2,
        };
        if ell < min_ell {
            return Err(Error::InvalidParameter(format!(
                "ell must be >= {} for this metric",
                min_ell
            )));
        }
        if tol <= 0.0 {
            return Err(Error::InvalidParameter("tol must be positive".into()));
        }
        Ok(ClusterParams { k, ell, metric, tol })
    }
}

/// Result of a clustering: center curves, nearest-center assignment per
/// input id, the achieved radius, and the per-iteration radii r_1 >= ... >= r_k.
#[derive(Debug, Clone)]
pub struct ClusterResult {
    pub centers: Vec<PolyCurve>,
    pub assignment: BTreeMap<String, usize>,
    pub radius: f64,
    pub history: Vec<f64>,
    pub decider_calls: usize,
}

/// Outcome of the approximate decider.
#[derive(Debug, Clone)]
pub enum DecideOutcome {
    Clustering(ClusterResult),
    /// No solution with cost at most delta exists.
    No,
}

pub fn curve_distance(a: &PolyCurve, b: &PolyCurve, metric: Metric, tol: f64) -> Result<f64> {
    match metric {
        Metric::Discrete => discrete_frechet(a, b),
        Metric::Continuous => continuous_frechet(a, b, tol),
    }
}

/// Exact (discrete) or tol-accurate (continuous) radius and nearest-center
/// assignment of a fixed center set.
pub fn clustering_cost(
    curves: &[PolyCurve],
    centers: &[PolyCurve],
    metric: Metric,
    tol: f64,
) -> Result<(f64, BTreeMap<String, usize>)> {
    if centers.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut radius = 0.0f64;
    let mut assignment = BTreeMap::new();
    for curve in curves {
        let mut best = (f64::INFINITY, 0usize);
        for (idx, center) in centers.iter().enumerate() {
            let d = curve_distance(curve, center, metric, tol)?;
            if d < best.0 {
                best = (d, idx);
            }
        }
        radius = radius.max(best.0);
        assignment.insert(curve.id.clone(), best.1);
    }
    Ok((radius, assignment))
}

/// The shared farthest-first loop. `simplify` turns a selected input curve
/// into the center added for it; returning `None` aborts (decider mode).
fn gonzalez_loop<F>(
    curves: &[PolyCurve],
    params: &ClusterParams,
    mut simplify: F,
) -> Result<Option<ClusterResult>>
where
    F: FnMut(&PolyCurve) -> Result<Option<SimplifyResult>>,
{
    if curves.is_empty() {
        return Err(Error::EmptyInput);
    }
    let dim = curves[0].dim();
    for c in curves {
        if c.dim() != dim {
            return Err(Error::DimensionMismatch(dim, c.dim()));
        }
    }
    let mut centers: Vec<PolyCurve> = Vec::with_capacity(params.k);
    let mut history = Vec::with_capacity(params.k);
    let mut min_dist = vec![f64::INFINITY; curves.len()];
    // First pick is input 0, deterministically.
    let mut pick = 0usize;
    for _ in 0..params.k {
        let simplified = match simplify(&curves[pick])? {
            Some(s) => s,
            None => return Ok(None),
        };
        let center = PolyCurve::new(format!("center-{}", centers.len()), simplified.curve.vertices)?;
        for (i, curve) in curves.iter().enumerate() {
            let d = curve_distance(curve, &center, params.metric, params.tol)?;
            if d < min_dist[i] {
                min_dist[i] = d;
            }
        }
        centers.push(center);
        // Farthest remaining input; ties break toward the lowest index.
        let (far_idx, far_dist) = min_dist
            .iter()
            .enumerate()
            .fold((0usize, f64::NEG_INFINITY), |acc, (i, &d)| {
                if d > acc.1 {
                    (i, d)
                } else {
                    acc
                }
            });
        history.push(far_dist);
        pick = far_idx;
    }
    let (radius, assignment) = clustering_cost(curves, &centers, params.metric, params.tol)?;
    Ok(Some(ClusterResult {
        centers,
        assignment,
        radius,
        history,
        decider_calls: 0,
    }))
}

/// Adapted Gonzalez farthest-first traversal: each selected curve is added
/// as its approximate minimum-error ell-simplification (exact under the
/// discrete metric, 4-approximate under the continuous metric), giving a
/// (c+2)-approximation with c = 1 or c = 4 respectively.
pub fn gonzalez_kl_center(curves: &[PolyCurve], params: &ClusterParams) -> Result<ClusterResult> {
    let result = gonzalez_loop(curves, params, |curve| {
        let s = match params.metric {
            Metric::Discrete => min_error_simplify_discrete(curve, params.ell)?,
            Metric::Continuous => approx4_min_error_simplify_continuous(curve, params.ell)?,
        };
        Ok(Some(s))
    })?;
    Ok(result.expect("min-error simplification never aborts"))
}

/// Approximate decider: the Gonzalez loop with minimum-complexity
/// delta-simplification in place of min-error simplification. Answers `No`
/// when some simplification needs more than ell vertices, or when the
/// resulting clustering exceeds 3*delta (either way the optimal cost
/// provably exceeds delta); otherwise returns a clustering of cost at most
/// 3*delta.
pub fn kl_center_decide(
    curves: &[PolyCurve],
    params: &ClusterParams,
    delta: f64,
) -> Result<DecideOutcome> {
    if delta < 0.0 {
        return Err(Error::InvalidParameter("negative delta".into()));
    }
    let result = gonzalez_loop(curves, params, |curve| {
        let s = match params.metric {
            Metric::Discrete => min_size_simplify_discrete(curve, delta),
            Metric::Continuous => min_size_simplify_continuous_vc(curve, delta)?,
        };
        Ok((s.complexity <= params.ell).then_some(s))
    })?;
    match result {
        Some(clustering) if clustering.radius <= 3.0 * delta + params.tol => {
            Ok(DecideOutcome::Clustering(clustering))
        }
        _ => Ok(DecideOutcome::No),
    }
}

/// 3-approximation search: run the Gonzalez algorithm to get cost alpha,
/// then call the decider on the ladder delta = 3^i * alpha / c1 until it
/// accepts. Returns the best clustering seen (never worse than the plain
/// Gonzalez result), with the number of decider calls recorded.
pub fn kl_center_search(curves: &[PolyCurve], params: &ClusterParams) -> Result<ClusterResult> {
    let baseline = gonzalez_kl_center(curves, params)?;
    let alpha = baseline.radius;
    let c1 = match params.metric {
        Metric::Discrete => 3.0,
        Metric::Continuous => 6.0,
    };
    let mut calls = 0usize;
    let mut accepted: Option<ClusterResult> = None;
    let mut i = 0u32;
    loop {
        let delta = 3.0f64.powi(i as i32) * alpha / c1;
        calls += 1;
        if let DecideOutcome::Clustering(c) = kl_center_decide(curves, params, delta)? {
            accepted = Some(c);
            break;
        }
        // Termination: once delta >= alpha the decider must accept, because
        // a clustering of cost alpha exists.
        if delta >= alpha {
            break;
        }
        i += 1;
    }
    let mut best = match accepted {
        Some(c) if c.radius <= baseline.radius => c,
        _ => baseline,
    };
    best.decider_calls = calls;
    Ok(best)
}
