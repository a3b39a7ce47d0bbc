//! OBJ and JSON output of sphere tilings.

use std::fmt::Write as _;

use super::realize::SphTiling;
use super::sphere::arc_samples;
use crate::map::CombMap;

pub const DEFAULT_ARC_SEGMENTS: usize = 16;

/// Wavefront OBJ with the tiling vertices first, then every edge drawn as
/// a polyline of `segments` great-arc pieces.
pub fn to_obj(st: &SphTiling, m: &CombMap, segments: usize) -> String {
    let segments = segments.max(1);
    let mut out = String::new();
    let _ = writeln!(out, "# {} vertices, {} edges, {} faces", m.num_vertices(), m.num_edges(), m.num_faces());
    for p in &st.coords {
        let _ = writeln!(out, "v {:.12} {:.12} {:.12}", p.x, p.y, p.z);
    }
    let mut next_index = st.coords.len() + 1;
    let mut lines = String::new();
    for e in 0..m.num_edges() {
        let d = m.edge_dart(e);
        let (u, w) = (m.origin(d), m.target(d));
        let samples = arc_samples(&st.coords[u], &st.coords[w], segments);
        let mut ids = vec![u + 1];
        for p in &samples[1..segments] {
            let _ = writeln!(out, "v {:.12} {:.12} {:.12}", p.x, p.y, p.z);
            ids.push(next_index);
            next_index += 1;
        }
        ids.push(w + 1);
        let joined: Vec<String> = ids.iter().map(|i| i.to_string()).collect();
        let _ = writeln!(lines, "l {}", joined.join(" "));
    }
    out.push_str(&lines);
    out
}

/// `{"coords": [[x, y, z], ...]}` with 17 significant digits.
pub fn coords_json(st: &SphTiling) -> String {
    let rows: Vec<String> =
        st.coords.iter().map(|p| format!("    [{:.16e}, {:.16e}, {:.16e}]", p.x, p.y, p.z)).collect();
    format!("{{\n  \"coords\": [\n{}\n  ]\n}}\n", rows.join(",\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::realize::realize_double_subdivision;
    use crate::map::Platonic;
    use crate::subdivision::Chirality;

    #[test]
    fn obj_counts() {
        let r = realize_double_subdivision(Platonic::Tetrahedron, Chirality::Ccw).unwrap();
        let m = &r.output.map;
        let obj = to_obj(&r.tiling, m, 4);
        let v = obj.lines().filter(|l| l.starts_with("v ")).count();
        let l = obj.lines().filter(|l| l.starts_with("l ")).count();
        assert_eq!(v, m.num_vertices() + 3 * m.num_edges());
        assert_eq!(l, m.num_edges());
        for line in obj.lines().filter(|l| l.starts_with("l ")) {
            assert_eq!(line.split_whitespace().count(), 1 + 5);
        }
    }

    #[test]
    fn coords_round_trip_exactly() {
        let r = realize_double_subdivision(Platonic::Octahedron, Chirality::Ccw).unwrap();
        let text = coords_json(&r.tiling);
        let back: SphTiling = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r.tiling);
    }
}
