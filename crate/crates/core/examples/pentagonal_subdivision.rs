//! Pentagonal subdivision of each solid: every m-gon becomes m pentagons.
//! Prints the labeled vertex types and the angle values.
//!
//! ```bash
//! cargo run --example pentagonal_subdivision
//! ```

use sphere_pentagons::map::Platonic;
use sphere_pentagons::pentagon::{verify_labeled_tiling, AngleLabel};
use sphere_pentagons::subdivision::{label_subdivision, pentagonal_subdivision, Construction};

fn main() -> sphere_pentagons::Result<()> {
    for solid in Platonic::ALL {
        let out = pentagonal_subdivision(&solid.map())?;
        let (lt, asg) = label_subdivision(&out, Construction::Pentagonal, solid.vertex_degree())?;
        println!("{solid}: f = {}, proto {}", lt.f(), lt.proto().kind);
        for a in AngleLabel::ALL {
            match asg.get(a) {
                Some(v) => println!("  {a} = {v}"),
                None => println!("  {a} free"),
            }
        }
        let types: Vec<String> = lt.vertex_types().iter().map(|(c, n)| format!("{c}×{n}")).collect();
        println!("  vertices: {}", types.join(", "));
        let report = verify_labeled_tiling(&lt, Some(&asg));
        println!("  labeling {}", if report.pass { "consistent" } else { "INCONSISTENT" });
    }
    Ok(())
}
