//! Why the α⁴ case has no tiling with 72 tiles: the only vertex with two
//! adjacent ε is δε³, and every deduction around it needs a junction that
//! no vertex of the AVC provides.
//!
//! ```bash
//! cargo run --example f72_obstruction
//! ```

use std::collections::BTreeSet;

use sphere_pentagons::aad::{arrangements, deduce_adjacent_layer, parse_word, realizable_junctions, Junction};
use sphere_pentagons::avc::{alpha4_case_assignment, alpha4_case_lower_bounds, enumerate_avc, SearchOptions, ALPHA4_CASE_BOUNDS};
use sphere_pentagons::pentagon::{PentagonProto, ProtoKind};

fn main() -> sphere_pentagons::Result<()> {
    let proto = PentagonProto::new(ProtoKind::A3BC);
    let opts = SearchOptions { lower: alpha4_case_lower_bounds(), ..SearchOptions::default() };
    let avc = enumerate_avc(&alpha4_case_assignment(), &proto, ALPHA4_CASE_BOUNDS, &opts)?.at(72).vertices;

    println!("AVC at f = 72:");
    for c in &avc {
        let words: Vec<String> = arrangements(&proto, c).iter().map(|w| w.to_string()).collect();
        println!("  {:<6} {}", c.to_string(), words.join("  "));
    }
    let available = realizable_junctions(&proto, &avc);
    let shown: Vec<String> = available.iter().map(|j| j.to_string()).collect();
    println!("junctions that occur: {}", shown.join(" "));

    let forced: BTreeSet<Junction> = ["β|γ", "γ|γ", "γ|ε"].iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    let word = parse_word("|δ|ε|ε|ε|")?;
    println!("\ndeductions of {word}:");
    let mut blocked = true;
    for layer in deduce_adjacent_layer(&word, &proto)? {
        let hits: Vec<String> = layer
            .junctions()
            .into_iter()
            .map(Junction::unordered)
            .filter(|j| forced.contains(j))
            .map(|j| j.to_string())
            .collect();
        let possible = hits.iter().all(|j| available.contains(&j.parse::<Junction>().expect("printed junction")));
        blocked &= !hits.is_empty() && !possible;
        println!("  {layer}  needs {}", hits.join(", "));
    }
    println!("\nno tiling for f = 72: {blocked}");
    Ok(())
}
