//! Tilings of the sphere by congruent pentagons.
//!
//! The crate builds the two subdivision families that produce edge-to-edge
//! tilings of the sphere by congruent pentagons, and the symbolic machinery
//! used to reason about such tilings:
//!
//! * [`map`]: oriented combinatorial maps (darts, edge involution, face
//!   successor), platonic solids, duals and degree census.
//! * [`subdivision`]: pentagonal subdivision (each m-gon becomes m pentagons)
//!   and double pentagonal subdivision (overlay with the dual, then cut every
//!   quadrilateral in two), with role tags and provenance.
//! * [`pentagon`]: edge arrangements of the prototile, exact angle values of
//!   the form `(p + q/f)π`, and the labeled-tiling verifier.
//! * [`counting`]: Euler-derived vertex counting identities and special-tile
//!   classification.
//! * [`aad`]: vertex words such as `||b|b||g|` and adjacent angle deduction.
//! * [`avc`]: anglewise vertex combinations, edge-length feasibility.
//! * [`geom`]: spherical trigonometry, the cubic for the double pentagon,
//!   rotation groups, geometric realization and verification, OBJ export.
//! * [`cli`]: the `penta` command line front end.
//!
//! The runnable programs under `examples/` walk through each capability.

pub mod aad;
pub mod avc;
pub mod cli;
pub mod counting;
pub mod error;
pub mod geom;
pub mod map;
pub mod pentagon;
pub mod subdivision;

pub use error::{Error, Result};
