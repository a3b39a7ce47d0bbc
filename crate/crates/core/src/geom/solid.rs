//! Unit-sphere positions of the triangular Platonic solids and their
//! rotation groups.

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};
use crate::map::{CombMap, Dart, Platonic};

pub type Point = Vector3<f64>;

/// Vertex positions of a triangular Platonic solid, in the order of the
/// hard-coded face lists.
fn input_coords(solid: Platonic) -> Result<Vec<Point>> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let raw: Vec<[f64; 3]> = match solid {
        Platonic::Tetrahedron => vec![[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]],
        Platonic::Octahedron => vec![
            [1.0, 0.0, 0.0],
            [-1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [0.0, -1.0, 0.0],
            [0.0, 0.0, 1.0],
            [0.0, 0.0, -1.0],
        ],
        Platonic::Icosahedron => vec![
            [0.0, -1.0, -phi],
            [-1.0, -phi, 0.0],
            [-phi, 0.0, -1.0],
            [0.0, -1.0, phi],
            [-1.0, phi, 0.0],
            [phi, 0.0, -1.0],
            [0.0, 1.0, -phi],
            [1.0, -phi, 0.0],
            [-phi, 0.0, 1.0],
            [0.0, 1.0, phi],
            [1.0, phi, 0.0],
            [phi, 0.0, 1.0],
        ],
        other => {
            return Err(Error::UnknownSolid(format!("{other} (geometry needs triangular faces)")));
        }
    };
    Ok(raw.into_iter().map(|p| Vector3::from(p).normalize()).collect())
}

/// A triangular Platonic solid with its map and unit vertex positions
/// indexed by map vertex id.
#[derive(Clone, Debug)]
pub struct SolidGeometry {
    pub solid: Platonic,
    pub map: CombMap,
    pub vertices: Vec<Point>,
}

impl SolidGeometry {
    pub fn new(solid: Platonic) -> Result<Self> {
        let coords = input_coords(solid)?;
        let (map, translate) = solid.build();
        let mut vertices = vec![Vector3::zeros(); map.num_vertices()];
        for (u, p) in coords.into_iter().enumerate() {
            vertices[translate[u]] = p;
        }
        Ok(SolidGeometry { solid, map, vertices })
    }

    pub fn face_center(&self, f: usize) -> Point {
        let sum: Point = self.map.face_vertices(f).into_iter().map(|v| self.vertices[v]).sum();
        sum.normalize()
    }

    pub fn edge_midpoint(&self, e: usize) -> Point {
        let d = self.map.edge_dart(e);
        (self.vertices[self.map.origin(d)] + self.vertices[self.map.target(d)]).normalize()
    }

    /// Orthonormal frame `[origin, toward target, normal]` as columns.
    fn dart_frame(&self, d: Dart) -> Matrix3<f64> {
        let o = self.vertices[self.map.origin(d)];
        let t = self.vertices[self.map.target(d)];
        let u = (t - o * o.dot(&t)).normalize();
        Matrix3::from_columns(&[o, u, o.cross(&u)])
    }

    /// The rotation taking dart `from` onto dart `to`.
    pub fn dart_rotation(&self, from: Dart, to: Dart) -> Matrix3<f64> {
        self.dart_frame(to) * self.dart_frame(from).transpose()
    }
}

/// Orientation-preserving symmetries: one rotation per dart, taking dart 0
/// onto it.
pub fn rotation_group(solid: Platonic) -> Result<Vec<Matrix3<f64>>> {
    let g = SolidGeometry::new(solid)?;
    Ok((0..g.map.num_darts()).map(|d| g.dart_rotation(0, d)).collect())
}

/// Whether a set of matrices is closed under products, up to `tol`.
pub fn is_closed_group(group: &[Matrix3<f64>], tol: f64) -> bool {
    let contains = |m: &Matrix3<f64>| group.iter().any(|g| (g - m).amax() <= tol);
    contains(&Matrix3::identity()) && group.iter().all(|a| group.iter().all(|b| contains(&(a * b))))
}
