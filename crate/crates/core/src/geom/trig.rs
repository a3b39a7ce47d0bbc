//! Arc lengths of the double pentagon.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn check_n(n: u32) -> Result<()> {
    if (3..=5).contains(&n) {
        Ok(())
    } else {
        Err(Error::Syntax { input: n.to_string(), reason: "n must be 3, 4 or 5".into() })
    }
}

/// Edges `(x, y, z)` of the right triangle with angles `π/2` at an edge
/// midpoint, `π/3` at a face center and `π/n` at a vertex: `x` joins center
/// and vertex, `y` center and midpoint, `z` vertex and midpoint.
pub fn triangle_edges(n: u32) -> Result<(f64, f64, f64)> {
    check_n(n)?;
    let (t, s) = (PI / 3.0, PI / n as f64);
    let cos_x = 1.0 / (t.tan() * s.tan());
    let cos_y = s.cos() / t.sin();
    let cos_z = t.cos() / s.sin();
    Ok((cos_x.acos(), cos_y.acos(), cos_z.acos()))
}

/// Coefficients `[c0, c1, c2, c3]` of `cos x` as a cubic in `cos a` for a
/// zigzag path of three arcs of length `a` with angles `delta`, `epsilon`.
pub fn three_arc_coefficients(delta: f64, epsilon: f64) -> [f64; 4] {
    let (cd, sd, ce, se) = (delta.cos(), delta.sin(), epsilon.cos(), epsilon.sin());
    [-sd * se, cd + ce - cd * ce, sd * se, (1.0 - cd) * (1.0 - ce)]
}

/// Cosine of the distance between the ends of three arcs of length `a`
/// joined at angle `delta`, then at angle `epsilon` on the other side.
pub fn three_arc_cos(a: f64, delta: f64, epsilon: f64) -> f64 {
    let [c0, c1, c2, c3] = three_arc_coefficients(delta, epsilon);
    let t = a.cos();
    ((c3 * t + c2) * t + c1) * t + c0
}

/// Real roots of `c3 t³ + c2 t² + c1 t + c0` by Cardano's formula.
pub fn cubic_real_roots(c: [f64; 4]) -> Vec<f64> {
    let [c0, c1, c2, c3] = c;
    let (a, b, d) = (c2 / c3, c1 / c3, c0 / c3);
    // t = s - a/3 gives s³ + p s + q = 0.
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + d;
    let shift = -a / 3.0;
    let disc = q * q / 4.0 + p * p * p / 27.0;
    if disc > 0.0 {
        let r = disc.sqrt();
        vec![(-q / 2.0 + r).cbrt() + (-q / 2.0 - r).cbrt() + shift]
    } else {
        let m = 2.0 * (-p / 3.0).sqrt();
        let theta = if m == 0.0 { 0.0 } else { (3.0 * q / (p * m)).clamp(-1.0, 1.0).acos() / 3.0 };
        let mut roots: Vec<f64> = (0..3).map(|k| m * (theta - 2.0 * PI * k as f64 / 3.0).cos() + shift).collect();
        roots.sort_by(f64::total_cmp);
        roots
    }
}

/// Bisection for a sign change of `g` on `[lo, hi]`.
pub fn bisect(g: impl Fn(f64) -> f64, lo: f64, hi: f64) -> Result<f64> {
    let (mut lo, mut hi) = (lo, hi);
    let (mut glo, ghi) = (g(lo), g(hi));
    if glo == 0.0 {
        return Ok(lo);
    }
    if ghi == 0.0 {
        return Ok(hi);
    }
    if glo.signum() == ghi.signum() {
        return Err(Error::RootNotBracketed { lo, hi });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let gm = g(mid);
        if gm == 0.0 {
            return Ok(mid);
        }
        if gm.signum() == glo.signum() {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// The double pentagon tile for a source with vertex degree `n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DoublePentagonSolution {
    pub n: u32,
    pub f: u64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub epsilon: f64,
    /// Triangle edges `x, y, z`.
    pub triangle: [f64; 3],
    /// `cos a` from the radical expression, where one is known.
    pub cos_a_closed_form: Option<f64>,
    /// `cos a` from bisection.
    pub cos_a_bisection: f64,
}

impl DoublePentagonSolution {
    /// Edge lengths in proto order `a, b, c`.
    pub fn edges(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn angles(&self) -> [f64; 5] {
        [self.alpha, self.beta, self.gamma, self.delta, self.epsilon]
    }

    pub fn b_equals_c(&self, tol: f64) -> bool {
        (self.b - self.c).abs() <= tol
    }
}

/// Radical expressions for `cos a` when `n = 3` or `n = 4`.
pub fn cos_a_closed_form(n: u32) -> Option<f64> {
    match n {
        3 => {
            let t = (19.0 + 3.0 * 33f64.sqrt()).cbrt();
            Some(2.0 / 9.0 * t + 8.0 / (9.0 * t) - 1.0 / 9.0)
        }
        4 => {
            let s = (186.0 * 3f64.sqrt() + 54.0 * 35f64.sqrt()).cbrt();
            Some(s / 9.0 + 4.0 / (3.0 * s) - 3f64.sqrt() / 9.0)
        }
        _ => None,
    }
}

/// Third side of a triangle with sides `p`, unknown `q` and included angle
/// `angle` at their common vertex, given the opposite side `opp`:
/// `cos opp = cos p cos q + sin p sin q cos angle`. Returns the root in
/// `(0, limit)`.
fn cosine_law_side(p: f64, angle: f64, opp: f64, limit: f64) -> Result<f64> {
    // cos opp = R cos(q - φ) with R cos φ = cos p, R sin φ = sin p cos angle.
    let (u, v) = (p.cos(), p.sin() * angle.cos());
    let r = u.hypot(v);
    let phi = v.atan2(u);
    let w = (opp.cos() / r).clamp(-1.0, 1.0).acos();
    [phi + w, phi - w]
        .into_iter()
        .filter(|q| *q > 0.0 && *q < limit)
        .find(|q| (p.cos() * q.cos() + p.sin() * q.sin() * angle.cos() - opp.cos()).abs() < 1e-12)
        .ok_or(Error::RootNotBracketed { lo: 0.0, hi: limit })
}

/// Solves for the unique double pentagon with `n ∈ {3, 4, 5}`.
pub fn solve_double_pentagon(n: u32) -> Result<DoublePentagonSolution> {
    check_n(n)?;
    let nf = n as f64;
    let (alpha, beta, gamma, delta, epsilon) =
        (PI / 2.0, (1.0 - 1.0 / nf) * PI, 2.0 * PI / 3.0, 2.0 * PI / 3.0, 2.0 * PI / nf);
    let (x, y, z) = triangle_edges(n)?;
    let [c0, c1, c2, c3] = three_arc_coefficients(delta, epsilon);
    let coeffs = [c0 - x.cos(), c1, c2, c3];
    let g = |t: f64| ((coeffs[3] * t + coeffs[2]) * t + coeffs[1]) * t + coeffs[0];
    let cos_a = bisect(g, -1.0, 1.0 - 1e-15)?;
    let cardano: Vec<f64> = cubic_real_roots(coeffs).into_iter().filter(|t| t.abs() < 1.0).collect();
    if cardano.len() != 1 {
        return Err(Error::Degenerate(format!("cubic for n = {n} has {} roots in (-1, 1)", cardano.len())));
    }
    let a = cos_a.acos();
    let b = cosine_law_side(a, beta, y, x)?;
    let c = cosine_law_side(a, gamma, z, x)?;
    let f = match n {
        3 => 24,
        4 => 48,
        _ => 120,
    };
    Ok(DoublePentagonSolution {
        n,
        f,
        a,
        b,
        c,
        alpha,
        beta,
        gamma,
        delta,
        epsilon,
        triangle: [x, y, z],
        cos_a_closed_form: cos_a_closed_form(n),
        cos_a_bisection: cos_a,
    })
}

/// The angle `α` of the pentagon built from three arcs of length `a` at
/// angles `δ = 2π/3`, `ε = 2π/n`, closed by arcs leaving at `β` and `γ`.
/// Returns `None` when the two closing arcs do not meet.
pub fn closing_angle(n: u32, a: f64) -> Option<f64> {
    use nalgebra::Vector3;
    let nf = n as f64;
    let (beta, gamma, delta, epsilon) = ((1.0 - 1.0 / nf) * PI, 2.0 * PI / 3.0, 2.0 * PI / 3.0, 2.0 * PI / nf);
    // Walk the three a-arcs counterclockwise around the pentagon:
    // start at the β corner, turn by π - δ and π - ε, end at the γ corner.
    let step = |p: Vector3<f64>, t: Vector3<f64>, len: f64| {
        let q = p * len.cos() + t * len.sin();
        let tq = -p * len.sin() + t * len.cos();
        (q, tq)
    };
    let turn = |p: Vector3<f64>, t: Vector3<f64>, ang: f64| t * ang.cos() + p.cross(&t) * ang.sin();
    let p0 = Vector3::z();
    let t0 = Vector3::x();
    let (p1, t1) = step(p0, t0, a);
    let (p2, t2) = step(p1, turn(p1, t1, PI - delta), a);
    let (p3, t3) = step(p2, turn(p2, t2, PI - epsilon), a);
    // Outgoing closing arcs: from p3 turn by π - γ, from p0 backwards by π - β.
    let u = turn(p3, t3, PI - gamma);
    let w = turn(p0, -t0, -(PI - beta));
    let n1 = p3.cross(&u);
    let n2 = p0.cross(&w);
    let mut meet = n1.cross(&n2);
    if meet.norm() < 1e-14 {
        return None;
    }
    meet = meet.normalize();
    if meet.dot(&u) < 0.0 {
        meet = -meet;
    }
    if meet.dot(&w) <= 0.0 {
        return None;
    }
    let tan_from = |p: Vector3<f64>, q: Vector3<f64>| (q - p * p.dot(&q)).normalize();
    let ta = tan_from(meet, p3);
    let tb = tan_from(meet, p0);
    Some(meet.dot(&tb.cross(&ta)).atan2(tb.dot(&ta)).rem_euclid(2.0 * PI))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use nalgebra::{Rotation3, Unit, Vector3};

    #[test]
    fn triangle_edge_values() {
        let (x, _, _) = triangle_edges(3).unwrap();
        assert_abs_diff_eq!(x.cos(), 1.0 / 3.0, epsilon = 1e-12);
        let (x, _, _) = triangle_edges(4).unwrap();
        assert_abs_diff_eq!(x.cos(), 1.0 / 3f64.sqrt(), epsilon = 1e-12);
        let (x, _, _) = triangle_edges(5).unwrap();
        let s5 = 5f64.sqrt();
        assert_abs_diff_eq!(x.cos(), (s5 + 1.0) / (6.0 * (5.0 - s5)).sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(x.cos(), 0.7947, epsilon = 1e-4);
        for n in 3..=5 {
            let (x, y, z) = triangle_edges(n).unwrap();
            assert_abs_diff_eq!(x.cos(), y.cos() * z.cos(), epsilon = 1e-12);
        }
        assert!(triangle_edges(6).is_err());
    }

    /// Walks three arcs with explicit rotations and measures the chord.
    fn three_arc_by_rotation(a: f64, delta: f64, epsilon: f64) -> f64 {
        let start = Vector3::z();
        let mut p = start;
        let mut t = Vector3::x();
        let mut walk = |len: f64, turn: Option<f64>| {
            if let Some(ang) = turn {
                t = Rotation3::from_axis_angle(&Unit::new_normalize(p), ang) * t;
            }
            let axis = Unit::new_normalize(p.cross(&t));
            let r = Rotation3::from_axis_angle(&axis, len);
            p = r * p;
            t = r * t;
        };
        walk(a, None);
        walk(a, Some(PI - delta));
        walk(a, Some(-(PI - epsilon)));
        start.dot(&p)
    }

    #[test]
    fn three_arc_matches_rotations() {
        assert_abs_diff_eq!(three_arc_cos(0.0, 1.0, 2.0), 1.0, epsilon = 1e-15);
        for &(a, d, e) in &[(0.3, 2.0, 1.2), (0.7, 2.1, 2.1), (1.1, 0.5, 2.9), (0.2, 4.0, 1.0)] {
            assert_abs_diff_eq!(three_arc_cos(a, d, e), three_arc_by_rotation(a, d, e), epsilon = 1e-10);
            assert_abs_diff_eq!(three_arc_cos(a, d, e), three_arc_cos(a, e, d), epsilon = 1e-15);
        }
    }

    #[test]
    fn printed_cubics() {
        let d = 2.0 * PI / 3.0;
        let c = three_arc_coefficients(d, d);
        for (got, want) in c.iter().zip([-0.75, -1.25, 0.75, 2.25]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-14);
        }
        let s3 = 3f64.sqrt();
        let c = three_arc_coefficients(d, PI / 2.0);
        for (got, want) in c.iter().zip([-s3 / 2.0, -0.5, s3 / 2.0, 1.5]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-14);
        }
        let s5 = 5f64.sqrt();
        let k = (6.0 * (5.0 + s5)).sqrt();
        let c = three_arc_coefficients(d, 2.0 * PI / 5.0);
        for (got, want) in c.iter().zip([-k / 8.0, (-7.0 + 3.0 * s5) / 8.0, k / 8.0, 3.0 * (5.0 - s5) / 8.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-14);
        }
    }

    #[test]
    fn closed_forms_agree_with_bisection() {
        for n in [3, 4] {
            let s = solve_double_pentagon(n).unwrap();
            assert_abs_diff_eq!(s.cos_a_closed_form.unwrap(), s.cos_a_bisection, epsilon = 1e-12);
        }
        assert!(solve_double_pentagon(5).unwrap().cos_a_closed_form.is_none());
    }

    #[test]
    fn cardano_matches_known_roots() {
        // (t - 1)(t - 2)(t + 3) = t³ - 7t + 6
        let r = cubic_real_roots([6.0, -7.0, 0.0, 1.0]);
        for (got, want) in r.iter().zip([-3.0, 1.0, 2.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
        let r = cubic_real_roots([-2.0, 1.0, 0.0, 1.0]);
        assert_eq!(r.len(), 1);
        assert_abs_diff_eq!(r[0], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn printed_arc_lengths() {
        let cases = [(3, 0.1486, 0.2056, 0.2056), (4, 0.1278, 0.0840, 0.1627), (5, 0.0960, 0.0238, 0.1081)];
        for (n, a, b, c) in cases {
            let s = solve_double_pentagon(n).unwrap();
            assert_abs_diff_eq!(s.a / PI, a, epsilon = 1e-4);
            assert_abs_diff_eq!(s.b / PI, b, epsilon = 1e-4);
            assert_abs_diff_eq!(s.c / PI, c, epsilon = 1e-4);
        }
        let s = solve_double_pentagon(3).unwrap();
        assert!(s.a / PI >= 0.1486 && s.a / PI < 0.1487);
        assert!(s.b_equals_c(1e-12));
    }

    #[test]
    fn cosine_law_round_trip() {
        for n in 3..=5 {
            let s = solve_double_pentagon(n).unwrap();
            let [_, y, z] = s.triangle;
            let cy = s.a.cos() * s.b.cos() + s.a.sin() * s.b.sin() * s.beta.cos();
            let cz = s.a.cos() * s.c.cos() + s.a.sin() * s.c.sin() * s.gamma.cos();
            assert_abs_diff_eq!(cy, y.cos(), epsilon = 1e-10);
            assert_abs_diff_eq!(cz, z.cos(), epsilon = 1e-10);
        }
    }

    #[test]
    fn area_increases_with_a() {
        for n in 3..=5 {
            let s = solve_double_pentagon(n).unwrap();
            let nf = n as f64;
            let mut last = f64::NEG_INFINITY;
            for k in 1..=40 {
                let a = s.a * 1.5 * k as f64 / 40.0;
                let Some(alpha) = closing_angle(n, a) else { continue };
                let area = alpha + (1.0 / nf - 2.0 / 3.0) * PI;
                assert!(area > last, "n = {n}, a = {a}");
                last = area;
            }
            assert_abs_diff_eq!(closing_angle(n, s.a).unwrap(), PI / 2.0, epsilon = 1e-9);
        }
    }
}
