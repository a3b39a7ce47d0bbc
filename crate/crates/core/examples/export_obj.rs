//! Writes the double pentagonal subdivision of the octahedron as an OBJ
//! polyline mesh and a coordinate JSON file.
//!
//! ```bash
//! cargo run --example export_obj -- /tmp/octa
//! ```

use sphere_pentagons::geom::export::{coords_json, to_obj, DEFAULT_ARC_SEGMENTS};
use sphere_pentagons::geom::realize_double_subdivision;
use sphere_pentagons::map::Platonic;
use sphere_pentagons::subdivision::Chirality;

fn main() -> sphere_pentagons::Result<()> {
    let stem = std::env::args().nth(1).unwrap_or_else(|| {
        std::env::temp_dir().join("double_octahedron").to_string_lossy().into_owned()
    });
    let r = realize_double_subdivision(Platonic::Octahedron, Chirality::Ccw)?;
    let obj = format!("{stem}.obj");
    let json = format!("{stem}.json");
    std::fs::write(&obj, to_obj(&r.tiling, &r.output.map, DEFAULT_ARC_SEGMENTS))?;
    std::fs::write(&json, coords_json(&r.tiling))?;
    println!("wrote {obj} ({} edges) and {json} ({} vertices)", r.output.map.num_edges(), r.tiling.coords.len());
    Ok(())
}
