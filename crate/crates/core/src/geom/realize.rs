//! Placing the subdivision tilings on the unit sphere.

use std::f64::consts::PI;

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use super::solid::{Point, SolidGeometry};
use super::sphere::{arcs_cross, dist, interior_angle, offset};
use super::trig::{bisect, solve_double_pentagon, DoublePentagonSolution};
use crate::error::{Error, Result};
use crate::map::{CombMap, Platonic};
use crate::pentagon::{AngleAssignment, LabeledTiling};
use crate::subdivision::{
    double_pentagonal_subdivision, label_subdivision, pentagonal_subdivision, Chirality, Construction, SideKind,
    SubdivisionOutput, VertexSource,
};

/// Unit-sphere positions indexed by the vertex ids of a map.
#[derive(Clone, Debug, PartialEq)]
pub struct SphTiling {
    pub coords: Vec<Point>,
}

#[derive(Serialize, Deserialize)]
struct SphTilingJson {
    coords: Vec<[f64; 3]>,
}

impl Serialize for SphTiling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SphTilingJson { coords: self.coords.iter().map(|p| [p.x, p.y, p.z]).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SphTiling {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SphTilingJson::deserialize(d)?;
        Ok(SphTiling { coords: j.coords.into_iter().map(Vector3::from).collect() })
    }
}

impl SphTiling {
    pub fn face_points(&self, m: &CombMap, f: usize) -> Vec<Point> {
        m.face_vertices(f).into_iter().map(|v| self.coords[v]).collect()
    }

    /// Interior angles of face `f`, in the order of its vertices.
    pub fn face_angles(&self, m: &CombMap, f: usize) -> Vec<f64> {
        let p = self.face_points(m, f);
        let k = p.len();
        (0..k).map(|i| interior_angle(&p[(i + k - 1) % k], &p[i], &p[(i + 1) % k])).collect()
    }

    /// Spherical area of face `f`.
    pub fn face_area(&self, m: &CombMap, f: usize) -> f64 {
        let angles = self.face_angles(m, f);
        angles.iter().sum::<f64>() - (angles.len() as f64 - 2.0) * PI
    }

    /// Whether face `f` has positive edges, angles in `(0, 2π)`, positive
    /// area, and no two non-adjacent sides crossing.
    pub fn face_is_simple(&self, m: &CombMap, f: usize) -> bool {
        let p = self.face_points(m, f);
        let k = p.len();
        let edges_ok = (0..k).all(|i| dist(&p[i], &p[(i + 1) % k]) > 1e-12);
        let angles_ok = self.face_angles(m, f).iter().all(|a| *a > 1e-12 && *a < 2.0 * PI - 1e-12);
        let no_cross = (0..k).all(|i| {
            (i + 2..k).filter(|j| (j + 1) % k != i).all(|j| {
                !arcs_cross(&p[i], &p[(i + 1) % k], &p[j], &p[(j + 1) % k])
            })
        });
        edges_ok && angles_ok && no_cross && self.face_area(m, f) > 0.0
    }
}

/// A subdivision together with its labeling and positions.
#[derive(Clone, Debug)]
pub struct Realization {
    pub source: Platonic,
    pub output: SubdivisionOutput,
    pub labeled: LabeledTiling,
    pub assignment: AngleAssignment,
    pub tiling: SphTiling,
    /// Arc lengths and angles of the double pentagon, when applicable.
    pub solution: Option<DoublePentagonSolution>,
    /// Set when the `b` and `c` edges of the double pentagon coincide.
    pub b_equals_c: bool,
}

fn check_triangular(solid: Platonic) -> Result<SolidGeometry> {
    if solid.face_size() != 3 {
        return Err(Error::UnknownSolid(format!("{solid} (expected tetrahedron, octahedron or icosahedron)")));
    }
    SolidGeometry::new(solid)
}

fn ensure_simple(tiling: &SphTiling, m: &CombMap) -> Result<()> {
    match (0..m.num_faces()).find(|&f| !tiling.face_is_simple(m, f)) {
        Some(f) => Err(Error::Degenerate(format!("face {f} is not a simple positively oriented pentagon"))),
        None => Ok(()),
    }
}

/// The fundamental triangle `(center, vertex, midpoint)` at dart 0 of the
/// source.
fn fundamental_triangle(g: &SolidGeometry) -> Matrix3<f64> {
    let c = g.face_center(g.map.face(0));
    let o = g.vertices[g.map.origin(0)];
    let m = g.edge_midpoint(g.map.edge(0));
    Matrix3::from_columns(&[c, o, m])
}

/// The point with weights `(1 - u - v, u, v)` on the center, vertex and
/// edge midpoint of the fundamental triangle.
pub fn pentagonal_point(solid: Platonic, param: [f64; 2]) -> Result<Point> {
    let g = check_triangular(solid)?;
    let [u, v] = param;
    if !(u > 0.0 && v > 0.0 && u + v < 1.0) {
        return Err(Error::Degenerate(format!("parameter ({u}, {v}) is not inside the fundamental triangle")));
    }
    Ok((fundamental_triangle(&g) * Vector3::new(1.0 - u - v, u, v)).normalize())
}

fn parameter_of(g: &SolidGeometry, p: &Point) -> Result<[f64; 2]> {
    let w = fundamental_triangle(g)
        .try_inverse()
        .ok_or_else(|| Error::Degenerate("fundamental triangle is flat".into()))?
        * p;
    let s = w.sum();
    Ok([w.y / s, w.z / s])
}

/// Pentagonal subdivision of a triangular solid with the edge vertex next
/// to the origin of dart 0 placed at `param` (see [`pentagonal_point`]);
/// every other edge vertex is its image under the rotation group.
pub fn realize_pentagonal_subdivision(solid: Platonic, param: [f64; 2]) -> Result<Realization> {
    let g = check_triangular(solid)?;
    let p = pentagonal_point(solid, param)?;
    let output = pentagonal_subdivision(&g.map)?;
    let coords = output
        .provenance
        .vertices
        .iter()
        .map(|s| match *s {
            VertexSource::OldVertex { vertex } => g.vertices[vertex],
            VertexSource::Center { face } => g.face_center(face),
            VertexSource::EdgeVertex { dart } => g.dart_rotation(0, dart) * p,
            _ => unreachable!("pentagonal subdivision has no midpoints or splits"),
        })
        .collect();
    let tiling = SphTiling { coords };
    ensure_simple(&tiling, &output.map)?;
    let (labeled, assignment) = label_subdivision(&output, Construction::Pentagonal, solid.vertex_degree())?;
    Ok(Realization {
        source: solid,
        output,
        labeled,
        assignment,
        tiling,
        solution: None,
        b_equals_c: false,
    })
}

/// The parameter at which all edges of the tetrahedral pentagonal
/// subdivision have equal length.
pub fn equal_edge_parameter() -> Result<[f64; 2]> {
    let g = SolidGeometry::new(Platonic::Tetrahedron)?;
    let t = fundamental_triangle(&g);
    let (c, o, m) = (t.column(0).into_owned(), t.column(1).into_owned(), t.column(2).into_owned());
    let half_turn = g.dart_rotation(0, g.map.twin(0));
    // Points equidistant from center and vertex, moving from the midpoint
    // of the center-vertex arc toward the edge midpoint.
    let n = (c + o).normalize();
    let dir = {
        let normal = c.cross(&o).normalize();
        if normal.dot(&m) > 0.0 { normal } else { -normal }
    };
    let point = |s: f64| n * s.cos() + dir * s.sin();
    let gap = |s: f64| {
        let p = point(s);
        dist(&c, &p) - dist(&p, &(half_turn * p))
    };
    // The bisector leaves the triangle where it meets the center-midpoint
    // or vertex-midpoint arc.
    let limit = {
        let normal_cm = c.cross(&m);
        let hit = normal_cm.cross(&n.cross(&dir)).normalize();
        let hit = if hit.dot(&dir) > 0.0 { hit } else { -hit };
        dist(&n, &hit)
    };
    let s = bisect(gap, 1e-9, limit * (1.0 - 1e-9))?;
    parameter_of(&g, &point(s))
}

/// Rotation angle at `p` from the side toward `q` (of length `side`) to a
/// point at distance `near` from `p` and `far` from `q`.
fn split_turn(near: f64, side: f64, far: f64) -> f64 {
    ((far.cos() - near.cos() * side.cos()) / (near.sin() * side.sin())).clamp(-1.0, 1.0).acos()
}

/// Double pentagonal subdivision of a triangular solid with the split
/// vertices placed so that every tile is the double pentagon.
pub fn realize_double_subdivision(solid: Platonic, chirality: Chirality) -> Result<Realization> {
    let g = check_triangular(solid)?;
    let sol = solve_double_pentagon(solid.vertex_degree() as u32)?;
    let [_, y, z] = sol.triangle;
    let sign = match chirality {
        Chirality::Ccw => 1.0,
        Chirality::Cw => -1.0,
    };
    // Split on a center-midpoint side: a from the center, b from the midpoint.
    let turn_cm = sign * split_turn(sol.a, y, sol.b);
    // Split on a vertex-midpoint side: a from the vertex, c from the midpoint.
    let turn_vm = sign * split_turn(sol.a, z, sol.c);
    let output = double_pentagonal_subdivision(&g.map, chirality)?;
    let m = &g.map;
    let coords = output
        .provenance
        .vertices
        .iter()
        .map(|s| match *s {
            VertexSource::OldVertex { vertex } => g.vertices[vertex],
            VertexSource::Center { face } => g.face_center(face),
            VertexSource::Midpoint { edge } => g.edge_midpoint(edge),
            VertexSource::Split { side: SideKind::CenterMidpoint, dart } => {
                offset(&g.face_center(m.face(dart)), &g.edge_midpoint(m.edge(dart)), turn_cm, sol.a)
            }
            VertexSource::Split { side: SideKind::VertexMidpoint, dart } => {
                offset(&g.vertices[m.origin(dart)], &g.edge_midpoint(m.edge(dart)), turn_vm, sol.a)
            }
            VertexSource::EdgeVertex { .. } => unreachable!("double subdivision has no edge vertices"),
        })
        .collect();
    let tiling = SphTiling { coords };
    ensure_simple(&tiling, &output.map)?;
    let (labeled, assignment) = label_subdivision(&output, Construction::Double, solid.vertex_degree())?;
    let b_equals_c = sol.b_equals_c(1e-9);
    Ok(Realization {
        source: solid,
        output,
        labeled,
        assignment,
        tiling,
        solution: Some(sol),
        b_equals_c,
    })
}
