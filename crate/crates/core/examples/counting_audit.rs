//! Checks the vertex counting identities and special-tile statements on
//! every constructed tiling.
//!
//! ```bash
//! cargo run --example counting_audit
//! ```

use sphere_pentagons::counting::{audit_counting_lemmas, check_euler_identities, classify_special_tiles};
use sphere_pentagons::map::{degree_census, Platonic};
use sphere_pentagons::subdivision::{
    double_pentagonal_subdivision, label_subdivision, pentagonal_subdivision, Chirality, Construction,
};

fn main() -> sphere_pentagons::Result<()> {
    for construction in [Construction::Pentagonal, Construction::Double] {
        for solid in Platonic::ALL {
            let out = match construction {
                Construction::Pentagonal => pentagonal_subdivision(&solid.map())?,
                Construction::Double => double_pentagonal_subdivision(&solid.map(), Chirality::Ccw)?,
            };
            let (lt, asg) = label_subdivision(&out, construction, solid.vertex_degree())?;
            let census = degree_census(lt.map());
            let ids = check_euler_identities(&census, lt.f())?;
            let tiles = classify_special_tiles(lt.map());
            let lemmas = audit_counting_lemmas(&lt, Some(&asg));
            let hist: Vec<String> = tiles.histogram().iter().map(|(k, n)| format!("{k}×{n}")).collect();
            println!(
                "{construction} {solid}: f = {}, census {census:?}, identities {}, lemmas {}, tiles {}",
                lt.f(),
                if ids.pass { "ok" } else { "FAIL" },
                if lemmas.pass { "ok" } else { "FAIL" },
                hist.join(" ")
            );
        }
    }
    Ok(())
}
