//! Adjacent angle deduction on a few vertex words, and the γ parity
//! check on the a²b²c adjacent pentagon.
//!
//! ```bash
//! cargo run --example adjacent_angle_deduction
//! ```

use sphere_pentagons::aad::{canonical_set, check_gamma_parity, deduce_adjacent_layer, parse_word};
use sphere_pentagons::pentagon::{PentagonProto, ProtoKind};

fn main() -> sphere_pentagons::Result<()> {
    let cases = [
        (ProtoKind::A2B2CAlternating, "||b|b||g|..."),
        (ProtoKind::A2B2CAdjacent, "|a||e-d|..."),
        (ProtoKind::A3BC, "||a-a||b|..."),
        (ProtoKind::A3BC, "-g|d|..."),
        (ProtoKind::A3BC, "|g-g|d|"),
    ];
    for (kind, text) in cases {
        let proto = PentagonProto::new(kind);
        let word = parse_word(text)?;
        let layers = deduce_adjacent_layer(&word, &proto)?;
        let shown: Vec<String> = layers.iter().map(|l| l.to_string()).collect();
        println!("{kind}: {word} → {}", shown.join("  or  "));
        if word.is_closed() {
            println!("  up to symmetry: {} outcome(s)", canonical_set(&layers).len());
        }
    }
    let adjacent = PentagonProto::new(ProtoKind::A2B2CAdjacent);
    for k in 3..=8 {
        println!("γ^{k}: α|α and ε|ε balance in every deduction: {}", check_gamma_parity(k, &adjacent)?);
    }
    Ok(())
}
