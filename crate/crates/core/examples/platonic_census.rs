//! Builds the five platonic solids as combinatorial maps and prints their
//! counts, degree census and duals.
//!
//! ```bash
//! cargo run --example platonic_census
//! ```

use sphere_pentagons::map::{degree_census, dual_map, is_isomorphic, validate_map, Platonic};

fn main() {
    println!("{:<14} {:>3} {:>3} {:>3}  census    dual", "solid", "v", "e", "f");
    for solid in Platonic::ALL {
        let m = solid.map();
        let report = validate_map(&m);
        assert!(report.pass, "{solid}: {:?}", report.failures);
        let dual = dual_map(&m).expect("dual of a valid map");
        let matches = is_isomorphic(&dual, &solid.dual().map());
        println!(
            "{:<14} {:>3} {:>3} {:>3}  {:<9} {} ({})",
            solid.name(),
            m.num_vertices(),
            m.num_edges(),
            m.num_faces(),
            format!("{:?}", degree_census(&m)),
            solid.dual(),
            if matches { "isomorphic" } else { "differs" },
        );
    }
}
