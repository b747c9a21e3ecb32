//! Gadget-curve generators, center builders and superstring extractors for
//! the reductions from Shortest Common Supersequence to (k,l)-center and to
//! the Fréchet minimum-enclosing-ball problem, in 1D and in the plane, for
//! both metrics.

use serde::{Deserialize, Serialize};

use crate::cluster::curve_distance;
use crate::error::{Error, Result};
use crate::frechet::{Metric, PolyCurve};
use crate::geometry::Point;
use crate::DEFAULT_TOL;

/// Inapproximability threshold of the planar discrete construction.
pub fn gap_radius_2d_discrete() -> f64 {
    3.0 * (std::f64::consts::PI / 3.0).sin()
}

/// An SCS decision instance: strings over {A,B} and the maximum allowed
/// supersequence length t.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScsInstance {
    pub strings: Vec<String>,
    pub t: usize,
}

impl ScsInstance {
    pub fn new(strings: Vec<String>, t: usize) -> Result<Self> {
        if strings.is_empty() || t == 0 {
            return Err(Error::EmptyInput);
        }
        for s in &strings {
            if s.is_empty() || !s.chars().all(|c| c == 'A' || c == 'B') {
                return Err(Error::Malformed(format!(
                    "strings must be non-empty over {{A,B}}, got {:?}",
                    s
                )));
            }
        }
        Ok(ScsInstance { strings, t })
    }
}

/// Which reduction a hard instance belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "1d-discrete")]
    OneDDiscrete,
    #[serde(rename = "1d-continuous")]
    OneDContinuous,
    #[serde(rename = "2d-discrete")]
    TwoDDiscrete,
    #[serde(rename = "2d-continuous")]
    TwoDContinuous,
    #[serde(rename = "meb-1d-discrete")]
    MebOneDDiscrete,
    #[serde(rename = "meb-1d-continuous")]
    MebOneDContinuous,
}

impl Variant {
    pub fn metric(self) -> Metric {
        match self {
            Variant::OneDDiscrete | Variant::TwoDDiscrete | Variant::MebOneDDiscrete => {
                Metric::Discrete
            }
            Variant::OneDContinuous | Variant::TwoDContinuous | Variant::MebOneDContinuous => {
                Metric::Continuous
            }
        }
    }
}

/// A generated reduction instance: the gadget curves plus the parameters
/// needed to pose (and audit) the decision question. `ell = 0` encodes an
/// unbounded center budget (the MEB variants).
#[derive(Debug, Clone)]
pub struct HardInstance {
    pub variant: Variant,
    pub curves: Vec<PolyCurve>,
    pub t: usize,
    pub s: usize,
    pub ell: usize,
    pub target_radius: f64,
    pub gap_radius: f64,
}

/// The ten layout points of the planar gadgets: the origin plus the
/// intersections of three rays with circles of radius 1, 2 and 3.
///
/// Rays are placed at 90, 210 and 330 degrees (equilateral, circumradius
/// 3), which makes disks of radius < 3 sin(pi/3) around the outer points
/// pairwise disjoint and puts each outer point at distance 4.5 from the
/// opposite triangle edge.
#[derive(Debug, Clone)]
pub struct GadgetLayout2D {
    pub origin: Point,
    points: [[Point; 3]; 3],
}

impl Default for GadgetLayout2D {
    fn default() -> Self {
        Self::new()
    }
}

impl GadgetLayout2D {
    pub fn new() -> Self {
        let angles = [90.0f64, 210.0, 330.0];
        let points = angles.map(|deg| {
            let rad = deg.to_radians();
            [1.0, 2.0, 3.0].map(|r| Point::two(r * rad.cos(), r * rad.sin()))
        });
        GadgetLayout2D {
            origin: Point::two(0.0, 0.0),
            points,
        }
    }

    /// Point p_{ray,circle} with ray, circle in 1..=3.
    pub fn p(&self, ray: usize, circle: usize) -> &Point {
        &self.points[ray - 1][circle - 1]
    }
}

fn ones(coords: &[f64]) -> Vec<Point> {
    coords.iter().map(|&x| Point::one(x)).collect()
}

/// 1D gadget curves for an SCS instance, discrete or continuous variant.
pub fn gen_1d(inst: &ScsInstance, metric: Metric) -> HardInstance {
    let t = inst.t;
    let curves = inst
        .strings
        .iter()
        .enumerate()
        .map(|(idx, s)| {
            let coords = match metric {
                Metric::Discrete => gamma_1d_discrete(s, t),
                Metric::Continuous => gamma_1d_continuous(s, t),
            };
            PolyCurve::new(format!("gamma-{}-{}", idx, s), ones(&coords))
                .expect("gadget curves are non-empty")
        })
        .collect();
    let (variant, ell, gap_radius) = match metric {
        Metric::Discrete => (Variant::OneDDiscrete, 2 * t + 1, 2.0),
        // The continuous center budget spans (2t-1)t+2 ..= 2t^2+1; the
        // generator exposes the upper end.
        Metric::Continuous => (Variant::OneDContinuous, 2 * t * t + 1, 1.5),
    };
    HardInstance {
        variant,
        curves,
        t,
        s: 0,
        ell,
        target_radius: 1.0,
        gap_radius,
    }
}

/// Letter mapping of the discrete 1D construction:
/// A -> (g_a g_b)^t g_A (g_b g_a)^t with g_A = <-3>, g_a = <-1>, g_b = <1>.
fn gamma_1d_discrete(s: &str, t: usize) -> Vec<f64> {
    let mut coords = Vec::new();
    for ch in s.chars() {
        match ch {
            'A' => {
                for _ in 0..t {
                    coords.extend([-1.0, 1.0]);
                }
                coords.push(-3.0);
                for _ in 0..t {
                    coords.extend([1.0, -1.0]);
                }
            }
            _ => {
                for _ in 0..t {
                    coords.extend([1.0, -1.0]);
                }
                coords.push(3.0);
                for _ in 0..t {
                    coords.extend([-1.0, 1.0]);
                }
            }
        }
    }
    coords
}

/// Hatted gadget of the continuous 1D construction: (x, 0)^(t-1) then x.
fn hatted_1d(x: f64, t: usize) -> Vec<f64> {
    let mut v = Vec::with_capacity(2 * t - 1);
    for _ in 0..t.saturating_sub(1) {
        v.extend([x, 0.0]);
    }
    v.push(x);
    v
}

fn gamma_1d_continuous(s: &str, t: usize) -> Vec<f64> {
    let ga = hatted_1d(-3.0, t);
    let gb = hatted_1d(3.0, t);
    let buf_a = hatted_1d(-1.0, t);
    let buf_b = hatted_1d(1.0, t);
    let mut coords = Vec::new();
    let push_pairs = |first: &[f64], second: &[f64], coords: &mut Vec<f64>| {
        for _ in 0..t {
            coords.extend_from_slice(first);
            coords.extend_from_slice(second);
        }
    };
    for ch in s.chars() {
        match ch {
            'A' => {
                push_pairs(&buf_a, &buf_b, &mut coords);
                coords.extend_from_slice(&ga);
                push_pairs(&buf_b, &buf_a, &mut coords);
            }
            _ => {
                push_pairs(&buf_b, &buf_a, &mut coords);
                coords.extend_from_slice(&gb);
                push_pairs(&buf_a, &buf_b, &mut coords);
            }
        }
    }
    coords
}

/// Planar gadget sequences over the layout. `circle` selects the radius of
/// the ring used (3 for input gadgets, 2 for center gadgets, 1 for buffers).
/// A-gadgets run clockwise (2,3,1 ray order), B-gadgets counter-clockwise.
fn hatted_2d(layout: &GadgetLayout2D, circle: usize, clockwise: bool, s: usize) -> Vec<Point> {
    let cycle: [usize; 3] = if clockwise { [2, 3, 1] } else { [1, 3, 2] };
    let mut pts = vec![layout.p(1, circle).clone()];
    for _ in 0..s {
        for &ray in &cycle {
            pts.push(layout.p(ray, circle).clone());
        }
    }
    pts
}

/// 2D gadget curves for an SCS instance; the same gadget shapes serve both
/// metrics, with s = 2t+2 (discrete) or s = 3t+3 (continuous).
pub fn gen_2d(inst: &ScsInstance, metric: Metric) -> HardInstance {
    let t = inst.t;
    let (variant, s, gap_radius) = match metric {
        Metric::Discrete => (Variant::TwoDDiscrete, 2 * t + 2, gap_radius_2d_discrete()),
        Metric::Continuous => (Variant::TwoDContinuous, 3 * t + 3, 2.25),
    };
    let ell = (3 * s + 3) * t;
    let layout = GadgetLayout2D::new();
    let ga = hatted_2d(&layout, 3, true, s);
    let gb = hatted_2d(&layout, 3, false, s);
    let buf_a = hatted_2d(&layout, 1, true, s);
    let buf_b = hatted_2d(&layout, 1, false, s);
    let curves = inst
        .strings
        .iter()
        .enumerate()
        .map(|(idx, string)| {
            let mut pts: Vec<Point> = Vec::new();
            for ch in string.chars() {
                let letter = if ch == 'A' { &ga } else { &gb };
                for _ in 0..t {
                    pts.extend_from_slice(&buf_a);
                    pts.extend_from_slice(&buf_b);
                }
                pts.extend_from_slice(letter);
                for _ in 0..t {
                    pts.extend_from_slice(&buf_a);
                    pts.extend_from_slice(&buf_b);
                }
            }
            PolyCurve::new(format!("gamma-{}-{}", idx, string), pts)
                .expect("gadget curves are non-empty")
        })
        .collect();
    HardInstance {
        variant,
        curves,
        t,
        s,
        ell,
        target_radius: 1.0,
        gap_radius,
    }
}

/// Canonical radius-1 center curve for a superstring.
///
/// 1D discrete: starts and ends at 0, a vertex at -2 per A, +2 per B, 0
/// between letters. 1D continuous: the letter spike is repeated,
/// (-2 0)^(s-1) -2 per A, matching the repeated letter gadgets (pass s = t
/// there). 2D: per letter the origin-separated radius-2 gadget chain
/// p_0 p_{1,2} (c_X)^s p_0. The empty superstring maps to a single vertex
/// at the origin.
pub fn center_from_superstring(sstr: &str, variant: Variant, s: usize) -> Result<PolyCurve> {
    if !sstr.chars().all(|c| c == 'A' || c == 'B') {
        return Err(Error::Malformed(format!(
            "superstring must be over {{A,B}}, got {:?}",
            sstr
        )));
    }
    match variant {
        Variant::TwoDDiscrete | Variant::TwoDContinuous => {
            let layout = GadgetLayout2D::new();
            if sstr.is_empty() {
                return PolyCurve::new("center", vec![layout.origin.clone()]);
            }
            let ca = hatted_2d(&layout, 2, true, s);
            let cb = hatted_2d(&layout, 2, false, s);
            let mut pts = Vec::new();
            for ch in sstr.chars() {
                pts.push(layout.origin.clone());
                pts.extend_from_slice(if ch == 'A' { &ca } else { &cb });
                pts.push(layout.origin.clone());
            }
            PolyCurve::new(format!("center-{}", sstr), pts)
        }
        _ => {
            if sstr.is_empty() {
                return PolyCurve::new("center", vec![Point::one(0.0)]);
            }
            let reps = match variant {
                Variant::OneDContinuous | Variant::MebOneDContinuous => s.max(1),
                _ => 1,
            };
            let mut coords = vec![0.0];
            for ch in sstr.chars() {
                let spike = if ch == 'A' { -2.0 } else { 2.0 };
                for r in 0..reps {
                    if r > 0 {
                        coords.push(0.0);
                    }
                    coords.push(spike);
                }
                coords.push(0.0);
            }
            PolyCurve::new(format!("center-{}", sstr), ones(&coords))
        }
    }
}

/// Recovers a superstring from a 1D center: A per vertex with coordinate
/// < -1, B per vertex with coordinate > 1, in curve order.
pub fn extract_superstring_1d(center: &PolyCurve) -> Result<String> {
    if center.dim() != 1 {
        return Err(Error::DimensionMismatch(1, center.dim()));
    }
    Ok(center
        .vertices
        .iter()
        .filter_map(|v| {
            let x = v.coords[0];
            if x < -1.0 {
                Some('A')
            } else if x > 1.0 {
                Some('B')
            } else {
                None
            }
        })
        .collect())
}

/// Recovers a superstring from a planar center curve: drop vertices outside
/// the three radius-r disks around the outer layout points, snap the rest
/// to the disk centers, collapse consecutive duplicates, then greedily
/// replace maximal occurrences of (g_A)^(s-1) with A and (g_B)^(s-1) with
/// B, discarding unmatched points.
pub fn extract_superstring_2d_discrete(
    center: &PolyCurve,
    r: f64,
    s: usize,
) -> Result<String> {
    if center.dim() != 2 {
        return Err(Error::DimensionMismatch(2, center.dim()));
    }
    if r >= gap_radius_2d_discrete() {
        return Err(Error::InvalidParameter("disks not disjoint".into()));
    }
    if s < 2 {
        return Err(Error::InvalidParameter("s must be >= 2".into()));
    }
    let layout = GadgetLayout2D::new();
    // Phases 1-3: filter to disks, snap to disk index, collapse duplicates.
    let mut snapped: Vec<usize> = Vec::new();
    for v in &center.vertices {
        let hit = (1..=3).find(|&ray| v.dist(layout.p(ray, 3)) <= r);
        if let Some(ray) = hit {
            if snapped.last() != Some(&ray) {
                snapped.push(ray);
            }
        }
    }
    // Phase 4: greedy left-to-right pattern replacement.
    let mut pattern_a = Vec::new();
    let mut pattern_b = Vec::new();
    for _ in 0..s - 1 {
        pattern_a.extend([2usize, 3, 1]);
        pattern_b.extend([1usize, 3, 2]);
    }
    let mut out = String::new();
    let mut i = 0;
    while i < snapped.len() {
        if snapped[i..].starts_with(&pattern_a) {
            out.push('A');
            i += pattern_a.len();
        } else if snapped[i..].starts_with(&pattern_b) {
            out.push('B');
            i += pattern_b.len();
        } else {
            i += 1;
        }
    }
    Ok(out)
}

/// Minimum-enclosing-ball reduction instance: the 1D discrete gadget curves
/// plus the length-bounding curves A^j and B^j' with j + j' = t.
pub fn gen_meb(inst: &ScsInstance, j: usize, jp: usize) -> Result<HardInstance> {
    if j + jp != inst.t {
        return Err(Error::InvalidParameter(format!(
            "j + j' must equal t ({} + {} != {})",
            j, jp, inst.t
        )));
    }
    let mut base = gen_1d(inst, Metric::Discrete);
    base.curves.push(
        PolyCurve::new(format!("A^{}", j), ones(&bounding_curve(1.0, -3.0, j)))
            .expect("non-empty"),
    );
    base.curves.push(
        PolyCurve::new(format!("B^{}", jp), ones(&bounding_curve(-1.0, 3.0, jp)))
            .expect("non-empty"),
    );
    Ok(HardInstance {
        variant: Variant::MebOneDDiscrete,
        curves: base.curves,
        t: inst.t,
        s: 0,
        ell: 0,
        target_radius: 1.0,
        gap_radius: 2.0,
    })
}

/// A^j = p_1 (p_-3 p_1)^j and B^j' = p_-1 (p_3 p_-1)^j'.
fn bounding_curve(base: f64, spike: f64, reps: usize) -> Vec<f64> {
    let mut coords = vec![base];
    for _ in 0..reps {
        coords.extend([spike, base]);
    }
    coords
}

/// True iff `center` is within `delta` (plus tolerance) of every curve of
/// the instance and respects the center budget when one is set. Also
/// returns the achieved radius.
pub fn verify_instance(
    hi: &HardInstance,
    center: &PolyCurve,
    delta: f64,
    metric: Metric,
) -> Result<(bool, f64)> {
    let mut radius = 0.0f64;
    for curve in &hi.curves {
        radius = radius.max(curve_distance(curve, center, metric, DEFAULT_TOL)?);
    }
    let budget_ok = hi.ell == 0 || center.complexity() <= hi.ell;
    Ok((budget_ok && radius <= delta + DEFAULT_TOL, radius))
}

/// Subsequence test (helper shared with the oracle tests).
pub fn is_subsequence(needle: &str, haystack: &str) -> bool {
    let mut it = haystack.chars();
    needle.chars().all(|c| it.by_ref().any(|h| h == c))
}
