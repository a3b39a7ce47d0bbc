//! Moves the edge vertex of the tetrahedral pentagonal subdivision across
//! the fundamental triangle. Every position gives congruent tiles; the
//! equal-edge position gives the regular dodecahedron.
//!
//! ```bash
//! cargo run --example pentagonal_family
//! ```

use std::f64::consts::PI;

use sphere_pentagons::geom::{equal_edge_parameter, realize_pentagonal_subdivision, verify_geometry};
use sphere_pentagons::map::Platonic;

fn main() -> sphere_pentagons::Result<()> {
    let show = |param: [f64; 2]| -> sphere_pentagons::Result<()> {
        let r = realize_pentagonal_subdivision(Platonic::Tetrahedron, param)?;
        let report = verify_geometry(&r.tiling, &r.labeled, 1e-9);
        let angles: Vec<String> = report.angles.iter().map(|(k, v)| format!("{k}={:.4}π", v / PI)).collect();
        let edges: Vec<String> = report.edge_lengths.iter().map(|(k, v)| format!("{k}={v:.4}")).collect();
        println!(
            "({:.3}, {:.3}) {}  {}  {}",
            param[0],
            param[1],
            if report.pass { "PASS" } else { "FAIL" },
            angles.join(" "),
            edges.join(" ")
        );
        Ok(())
    };
    for u in [0.1, 0.3, 0.5] {
        for v in [0.1, 0.3] {
            show([u, v])?;
        }
    }
    let p = equal_edge_parameter()?;
    println!("equal edges:");
    show(p)?;
    Ok(())
}
