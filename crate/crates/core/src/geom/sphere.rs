//! Unit-sphere primitives.

use std::f64::consts::PI;

use nalgebra::Vector3;

use super::solid::Point;

/// Great-circle distance.
pub fn dist(p: &Point, q: &Point) -> f64 {
    p.cross(q).norm().atan2(p.dot(q))
}

/// Unit tangent at `p` toward `q`.
pub fn tangent(p: &Point, q: &Point) -> Point {
    (q - p * p.dot(q)).normalize()
}

/// The point at distance `len` from `p` in the direction obtained by
/// turning the direction toward `q` counterclockwise by `turn`.
pub fn offset(p: &Point, q: &Point, turn: f64, len: f64) -> Point {
    let t = tangent(p, q);
    let dir = t * turn.cos() + p.cross(&t) * turn.sin();
    (p * len.cos() + dir * len.sin()).normalize()
}

/// Interior angle at `p` of a counterclockwise polygon with neighbors
/// `prev` and `next`: the counterclockwise turn from `next` to `prev`.
pub fn interior_angle(prev: &Point, p: &Point, next: &Point) -> f64 {
    let tn = tangent(p, next);
    let tp = tangent(p, prev);
    p.dot(&tn.cross(&tp)).atan2(tn.dot(&tp)).rem_euclid(2.0 * PI)
}

/// Whether the minor arcs `ab` and `cd` cross at an interior point.
pub fn arcs_cross(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let n1 = a.cross(b);
    let n2 = c.cross(d);
    let x = n1.cross(&n2);
    if x.norm() < 1e-15 {
        return false;
    }
    let x = x.normalize();
    let on = |p: &Point, q: &Point, n: &Vector3<f64>, x: &Point| p.cross(x).dot(n) > 0.0 && x.cross(q).dot(n) > 0.0;
    [x, -x].iter().any(|x| on(a, b, &n1, x) && on(c, d, &n2, x))
}

/// Points along the minor arc from `p` to `q`, both ends included.
pub fn arc_samples(p: &Point, q: &Point, segments: usize) -> Vec<Point> {
    let theta = dist(p, q);
    let segments = segments.max(1);
    (0..=segments)
        .map(|k| {
            let t = k as f64 / segments as f64;
            if theta < 1e-15 {
                *p
            } else {
                (p * ((1.0 - t) * theta).sin() + q * (t * theta).sin()) / theta.sin()
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn octant_triangle() {
        let (x, y, z) = (Vector3::x(), Vector3::y(), Vector3::z());
        assert_abs_diff_eq!(dist(&x, &y), PI / 2.0, epsilon = 1e-15);
        // x, y, z is counterclockwise seen from outside.
        assert_abs_diff_eq!(interior_angle(&z, &x, &y), PI / 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(interior_angle(&y, &x, &z), 3.0 * PI / 2.0, epsilon = 1e-15);
    }

    #[test]
    fn offset_turns_counterclockwise() {
        let p = Vector3::z();
        let q = offset(&p, &Vector3::x(), PI / 2.0, 0.3);
        assert!(q.y > 0.0);
        assert_abs_diff_eq!(dist(&p, &q), 0.3, epsilon = 1e-15);
    }

    #[test]
    fn crossing_arcs() {
        let a = Vector3::new(1.0, -1.0, 1.0).normalize();
        let b = Vector3::new(1.0, 1.0, 1.0).normalize();
        let c = Vector3::new(1.0, 0.0, 0.5).normalize();
        let d = Vector3::new(1.0, 0.0, 1.5).normalize();
        let e = Vector3::new(1.0, 0.0, 2.0).normalize();
        assert!(arcs_cross(&a, &b, &c, &d));
        assert!(!arcs_cross(&a, &b, &d, &e));
    }

    #[test]
    fn samples_stay_on_the_arc() {
        let p = Vector3::x();
        let q = Vector3::new(0.0, 1.0, 1.0).normalize();
        let s = arc_samples(&p, &q, 16);
        assert_eq!(s.len(), 17);
        for w in s.windows(2) {
            assert_abs_diff_eq!(dist(&w[0], &w[1]), dist(&p, &q) / 16.0, epsilon = 1e-12);
            assert_abs_diff_eq!(w[0].norm(), 1.0, epsilon = 1e-12);
        }
    }
}
