//! Double pentagonal subdivision of the triangular solids in both
//! chiralities, realized on the sphere and checked numerically.
//!
//! ```bash
//! cargo run --example double_subdivision
//! ```

use sphere_pentagons::geom::{realize_double_subdivision, verify_geometry};
use sphere_pentagons::map::Platonic;
use sphere_pentagons::subdivision::Chirality;

fn main() -> sphere_pentagons::Result<()> {
    for solid in [Platonic::Tetrahedron, Platonic::Octahedron, Platonic::Icosahedron] {
        for chirality in [Chirality::Ccw, Chirality::Cw] {
            let r = realize_double_subdivision(solid, chirality)?;
            let report = verify_geometry(&r.tiling, &r.labeled, 1e-9);
            let types: Vec<String> = r.labeled.vertex_types().iter().map(|(c, n)| format!("{c}×{n}")).collect();
            println!("{solid} {chirality:?}: f = {}, {}", r.labeled.f(), if report.pass { "PASS" } else { "FAIL" });
            println!("  vertices: {}", types.join(", "));
            let edges: Vec<String> = report.edge_lengths.iter().map(|(k, v)| format!("{k} = {:.6}π", v / std::f64::consts::PI)).collect();
            println!("  edges: {}{}", edges.join(", "), if r.b_equals_c { " (b = c)" } else { "" });
        }
    }
    Ok(())
}
