//! Randomized invariants over the core primitives.

use proptest::prelude::*;

use klcenter::frechet::{
    continuous_frechet, continuous_frechet_decide, discrete_frechet, PolyCurve,
};
use klcenter::geometry::{min_enclosing_ball, Point};
use klcenter::io::{read_curves_jsonl, write_curves_jsonl};
use klcenter::simplify;

fn coords(max_len: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-100.0f64..100.0, -100.0f64..100.0), 1..=max_len)
}

fn curve(id: &str, pts: &[(f64, f64)]) -> PolyCurve {
    PolyCurve::new(id, pts.iter().map(|&(x, y)| Point::two(x, y)).collect()).unwrap()
}

proptest! {
    #[test]
    fn discrete_frechet_is_symmetric(a in coords(8), b in coords(8)) {
        let (a, b) = (curve("a", &a), curve("b", &b));
        let ab = discrete_frechet(&a, &b).unwrap();
        let ba = discrete_frechet(&b, &a).unwrap();
        prop_assert!((ab - ba).abs() < 1e-12);
    }

    #[test]
    fn discrete_frechet_triangle_inequality(
        a in coords(6), b in coords(6), c in coords(6)
    ) {
        let (a, b, c) = (curve("a", &a), curve("b", &b), curve("c", &c));
        let ab = discrete_frechet(&a, &b).unwrap();
        let bc = discrete_frechet(&b, &c).unwrap();
        let ac = discrete_frechet(&a, &c).unwrap();
        prop_assert!(ac <= ab + bc + 1e-9);
    }

    #[test]
    fn continuous_at_most_discrete(a in coords(8), b in coords(8)) {
        let (a, b) = (curve("a", &a), curve("b", &b));
        let dd = discrete_frechet(&a, &b).unwrap();
        let dc = continuous_frechet(&a, &b, 1e-7).unwrap();
        prop_assert!(dc <= dd + 1e-6);
    }

    #[test]
    fn continuous_decide_is_monotone(a in coords(6), b in coords(6), lo in 0.0f64..300.0, gap in 0.0f64..50.0) {
        let (a, b) = (curve("a", &a), curve("b", &b));
        let yes_lo = continuous_frechet_decide(&a, &b, lo).unwrap();
        let yes_hi = continuous_frechet_decide(&a, &b, lo + gap).unwrap();
        prop_assert!(!yes_lo || yes_hi);
    }

    #[test]
    fn meb_contains_all_and_is_permutation_invariant(
        pts in prop::collection::vec((-50.0f64..50.0, -50.0f64..50.0), 1..=12),
        seed in any::<u64>(),
    ) {
        let points: Vec<Point> = pts.iter().map(|&(x, y)| Point::two(x, y)).collect();
        let ball = min_enclosing_ball(&points).unwrap();
        for p in &points {
            prop_assert!(ball.contains(p, 1e-7));
        }
        // Shuffle deterministically from the seed and recompute.
        let mut shuffled = points.clone();
        let mut state = seed | 1;
        for i in (1..shuffled.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (state >> 33) as usize % (i + 1));
        }
        let ball2 = min_enclosing_ball(&shuffled).unwrap();
        prop_assert!((ball.radius - ball2.radius).abs() < 1e-7);
    }

    #[test]
    fn min_size_complexity_is_monotone_in_delta(c in coords(10), d1 in 0.0f64..20.0, d2 in 0.0f64..20.0) {
        let c = curve("c", &c);
        let (lo, hi) = if d1 <= d2 { (d1, d2) } else { (d2, d1) };
        let at_lo = simplify::min_size_simplify_discrete(&c, lo);
        let at_hi = simplify::min_size_simplify_discrete(&c, hi);
        prop_assert!(at_hi.complexity <= at_lo.complexity);
    }

    #[test]
    fn vc_simplification_is_anchored_subsequence(c in coords(8), delta in 0.1f64..30.0) {
        let c = curve("c", &c);
        let res = simplify::min_size_simplify_continuous_vc(&c, delta).unwrap();
        prop_assert_eq!(res.curve.vertices.first(), c.vertices.first());
        prop_assert_eq!(res.curve.vertices.last(), c.vertices.last());
        // Vertices appear in order in the input.
        let mut pos = 0;
        for v in &res.curve.vertices {
            match c.vertices[pos..].iter().position(|u| u == v) {
                Some(off) => pos += off,
                None => prop_assert!(false, "vertex not drawn from the input"),
            }
        }
    }

    #[test]
    fn min_error_is_monotone_in_ell(c in coords(10)) {
        let c = curve("c", &c);
        let mut prev = f64::INFINITY;
        for ell in 1..=c.complexity() {
            let res = simplify::min_error_simplify_discrete(&c, ell).unwrap();
            prop_assert!(res.error <= prev + 1e-12);
            prop_assert!(res.complexity <= ell);
            prev = res.error;
        }
    }

    #[test]
    fn jsonl_round_trip_is_bit_exact(a in coords(10), b in coords(10)) {
        let curves = vec![curve("a", &a), curve("b", &b)];
        let mut buf = Vec::new();
        write_curves_jsonl(&mut buf, &curves).unwrap();
        let back = read_curves_jsonl(&buf[..]).unwrap();
        for (orig, re) in curves.iter().zip(&back) {
            prop_assert_eq!(&orig.id, &re.id);
            for (u, v) in orig.vertices.iter().zip(&re.vertices) {
                for (x, y) in u.coords.iter().zip(&v.coords) {
                    prop_assert!(x.to_bits() == y.to_bits());
                }
            }
        }
    }
}
