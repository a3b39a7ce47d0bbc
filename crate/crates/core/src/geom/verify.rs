//! Numerical checks that a sphere tiling realizes its labeling.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::realize::SphTiling;
use super::sphere::dist;
use crate::map::Dart;
use crate::pentagon::{AngleLabel, Check, EdgeLabel, LabeledTiling};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeomReport {
    pub pass: bool,
    pub checks: Vec<Check>,
    /// Measured arc length per edge label (median over all darts).
    pub edge_lengths: BTreeMap<char, f64>,
    /// Measured interior angle per angle label (median over all corners).
    pub angles: BTreeMap<char, f64>,
    /// Vertex touching the most out-of-tolerance measurements.
    pub worst_vertex: Option<usize>,
}

impl GeomReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    values[values.len() / 2]
}

fn check(name: &str, pass: bool, detail: String) -> Check {
    Check { name: name.into(), pass, detail }
}

/// Per-label congruence, vertex sums `2π`, tile sums `3π + 4π/f` and total
/// area `4π`. Area uses tolerance `f * tol`.
pub fn verify_geometry(st: &SphTiling, lt: &LabeledTiling, tol: f64) -> GeomReport {
    let m = lt.map();
    let f = lt.f();
    let mut checks = Vec::new();
    let mut blame = vec![0usize; m.num_vertices()];

    if st.coords.len() != m.num_vertices() {
        let detail = format!("{} positions for {} vertices", st.coords.len(), m.num_vertices());
        return GeomReport {
            pass: false,
            checks: vec![check("vertex-count", false, detail)],
            edge_lengths: BTreeMap::new(),
            angles: BTreeMap::new(),
            worst_vertex: None,
        };
    }

    let off_sphere: Vec<usize> = (0..m.num_vertices()).filter(|&v| (st.coords[v].norm() - 1.0).abs() > tol).collect();
    checks.push(check("unit-norm", off_sphere.is_empty(), format!("{} vertices off the unit sphere", off_sphere.len())));

    let bad_faces: Vec<usize> = (0..m.num_faces()).filter(|&k| !st.face_is_simple(m, k)).collect();
    checks.push(check(
        "simple-faces",
        bad_faces.is_empty(),
        format!("{} faces are not simple positively oriented polygons", bad_faces.len()),
    ));

    // Interior angle per dart, at its origin.
    let mut angle_of = vec![0.0; m.num_darts()];
    for k in 0..m.num_faces() {
        for (d, a) in m.face_darts(k).into_iter().zip(st.face_angles(m, k)) {
            angle_of[d] = a;
        }
    }
    let length_of = |d: Dart| dist(&st.coords[m.origin(d)], &st.coords[m.target(d)]);

    let mut by_edge: BTreeMap<EdgeLabel, Vec<Dart>> = BTreeMap::new();
    let mut by_angle: BTreeMap<AngleLabel, Vec<Dart>> = BTreeMap::new();
    for d in 0..m.num_darts() {
        by_edge.entry(lt.edge_label(d)).or_default().push(d);
        by_angle.entry(lt.angle_at(d)).or_default().push(d);
    }

    let mut edge_lengths = BTreeMap::new();
    let mut worst = 0.0f64;
    for (label, darts) in &by_edge {
        let mut vals: Vec<f64> = darts.iter().map(|&d| length_of(d)).collect();
        let mid = median(&mut vals);
        edge_lengths.insert(label.letter(), mid);
        for &d in darts {
            let dev = (length_of(d) - mid).abs();
            worst = worst.max(dev);
            if dev > tol {
                blame[m.origin(d)] += 1;
                blame[m.target(d)] += 1;
            }
        }
    }
    checks.push(check("edge-congruence", worst <= tol, format!("max deviation {worst:.3e}")));

    let mut angles = BTreeMap::new();
    let mut worst = 0.0f64;
    for (label, darts) in &by_angle {
        let mut vals: Vec<f64> = darts.iter().map(|&d| angle_of[d]).collect();
        let mid = median(&mut vals);
        angles.insert(label.greek(), mid);
        for &d in darts {
            let dev = (angle_of[d] - mid).abs();
            worst = worst.max(dev);
            if dev > tol {
                blame[m.origin(d)] += 1;
            }
        }
    }
    checks.push(check("angle-congruence", worst <= tol, format!("max deviation {worst:.3e}")));

    let mut worst = 0.0f64;
    let mut worst_at = 0;
    for v in 0..m.num_vertices() {
        let sum: f64 = m.vertex_darts(v).into_iter().map(|d| angle_of[d]).sum();
        let dev = (sum - 2.0 * PI).abs();
        if dev > tol {
            blame[v] += 1;
        }
        if dev > worst {
            worst = dev;
            worst_at = v;
        }
    }
    checks.push(check("vertex-sums", worst <= tol, format!("max deviation {worst:.3e} at vertex {worst_at}")));

    let target = 3.0 * PI + 4.0 * PI / f as f64;
    let mut worst = 0.0f64;
    let mut total_area = 0.0;
    for k in 0..m.num_faces() {
        let sum: f64 = st.face_angles(m, k).iter().sum();
        worst = worst.max((sum - target).abs());
        total_area += st.face_area(m, k);
    }
    checks.push(check("tile-sums", worst <= tol, format!("max deviation {worst:.3e} from 3π + 4π/{f}")));
    let area_dev = (total_area - 4.0 * PI).abs();
    checks.push(check("total-area", area_dev <= f as f64 * tol, format!("total area 4π {area_dev:+.3e}")));

    let pass = checks.iter().all(|c| c.pass);
    let worst_vertex = if pass {
        None
    } else {
        blame.iter().enumerate().max_by_key(|(_, b)| **b).filter(|(_, b)| **b > 0).map(|(v, _)| v)
    };
    GeomReport { pass, checks, edge_lengths, angles, worst_vertex }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::realize::{equal_edge_parameter, realize_double_subdivision, realize_pentagonal_subdivision};
    use crate::map::Platonic;
    use crate::subdivision::Chirality;
    use approx::assert_abs_diff_eq;

    #[test]
    fn double_octahedron_passes() {
        for chirality in [Chirality::Ccw, Chirality::Cw] {
            let r = realize_double_subdivision(Platonic::Octahedron, chirality).unwrap();
            let report = verify_geometry(&r.tiling, &r.labeled, 1e-9);
            assert!(report.pass, "{chirality:?}: {:#?}", report.checks);
            let sol = r.solution.unwrap();
            assert_abs_diff_eq!(report.edge_lengths[&'a'], sol.a, epsilon = 1e-9);
            assert_abs_diff_eq!(report.edge_lengths[&'b'], sol.b, epsilon = 1e-9);
            assert_abs_diff_eq!(report.edge_lengths[&'c'], sol.c, epsilon = 1e-9);
            assert_abs_diff_eq!(report.angles[&'α'], PI / 2.0, epsilon = 1e-9);
            assert_abs_diff_eq!(report.angles[&'ε'], PI / 2.0, epsilon = 1e-9);
            assert!(!r.b_equals_c);
        }
    }

    #[test]
    fn double_tetrahedron_and_icosahedron() {
        let r = realize_double_subdivision(Platonic::Tetrahedron, Chirality::Ccw).unwrap();
        assert_eq!(r.output.map.num_faces(), 24);
        assert!(r.b_equals_c);
        assert!(verify_geometry(&r.tiling, &r.labeled, 1e-9).pass);
        let r = realize_double_subdivision(Platonic::Icosahedron, Chirality::Ccw).unwrap();
        assert_eq!(r.output.map.num_faces(), 120);
        assert!(verify_geometry(&r.tiling, &r.labeled, 1e-9).pass);
    }

    #[test]
    fn pentagonal_generic_parameter_passes() {
        for solid in [Platonic::Tetrahedron, Platonic::Octahedron, Platonic::Icosahedron] {
            let r = realize_pentagonal_subdivision(solid, [0.3, 0.4]).unwrap();
            let report = verify_geometry(&r.tiling, &r.labeled, 1e-9);
            assert!(report.pass, "{solid}: {:#?}", report.checks);
        }
    }

    #[test]
    fn equal_edges_give_the_dodecahedron() {
        let r = realize_pentagonal_subdivision(Platonic::Tetrahedron, equal_edge_parameter().unwrap()).unwrap();
        let report = verify_geometry(&r.tiling, &r.labeled, 1e-9);
        assert!(report.pass);
        for a in report.angles.values() {
            assert_abs_diff_eq!(*a, 2.0 * PI / 3.0, epsilon = 1e-9);
        }
        let lens: Vec<f64> = report.edge_lengths.values().copied().collect();
        for l in &lens {
            assert_abs_diff_eq!(*l, lens[0], epsilon = 1e-9);
        }
    }

    #[test]
    fn perturbation_is_located() {
        let r = realize_double_subdivision(Platonic::Octahedron, Chirality::Ccw).unwrap();
        let mut st = r.tiling.clone();
        let v = 17;
        st.coords[v] = (st.coords[v] + nalgebra::Vector3::new(1e-3, -1e-3, 1e-3)).normalize();
        let report = verify_geometry(&st, &r.labeled, 1e-9);
        assert!(!report.pass);
        assert_eq!(report.worst_vertex, Some(v));
    }
}
