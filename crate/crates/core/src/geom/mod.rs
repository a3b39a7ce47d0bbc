//! Spherical realizations of the subdivision tilings.

pub mod export;
pub mod realize;
pub mod solid;
pub mod sphere;
pub mod trig;
pub mod verify;

pub use realize::{
    equal_edge_parameter, pentagonal_point, realize_double_subdivision, realize_pentagonal_subdivision, Realization,
    SphTiling,
};
pub use solid::{rotation_group, Point, SolidGeometry};
pub use trig::{
    cos_a_closed_form, solve_double_pentagon, three_arc_cos, triangle_edges, DoublePentagonSolution,
};
pub use verify::{verify_geometry, GeomReport};
