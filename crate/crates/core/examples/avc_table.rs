//! Enumerates the anglewise vertex combinations for the a³bc pentagon
//! whose special vertex is α⁴, and prints the table by tile count.
//!
//! ```bash
//! cargo run --example avc_table
//! ```

use sphere_pentagons::avc::{
    alpha4_case_assignment, alpha4_case_lower_bounds, enumerate_avc, SearchOptions, VertexCombo,
    ALPHA4_CASE_BOUNDS,
};
use sphere_pentagons::pentagon::{AngleLabel, PentagonProto, ProtoKind};

fn list(s: &std::collections::BTreeSet<VertexCombo>) -> String {
    s.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

fn main() -> sphere_pentagons::Result<()> {
    let asg = alpha4_case_assignment();
    for a in AngleLabel::ALL {
        println!("{a} = {}", asg.get(a).expect("fully determined"));
    }
    let opts = SearchOptions { lower: alpha4_case_lower_bounds(), ..SearchOptions::default() };
    let proto = PentagonProto::new(ProtoKind::A3BC);
    let table = enumerate_avc(&asg, &proto, ALPHA4_CASE_BOUNDS, &opts)?;
    println!("\n{:>5}  {:<28} not vertex", "f", "vertex");
    for (f, row) in &table.above(24).rows {
        println!("{:>5}  {:<28} {}", f.to_string(), list(&row.vertices), list(&row.rejected_by_edges));
    }
    let small: Vec<u64> = table.tile_counts().into_iter().filter(|&f| f <= 24).collect();
    println!("\nsolutions at f <= 24, cut from the table: {small:?}");
    Ok(())
}
