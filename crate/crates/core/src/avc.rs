//! Anglewise vertex combinations.
//!
//! A combination `α^a β^b γ^c δ^d ε^e` can be a vertex only if its angles
//! add up to 2π. With angles of the form `(p + q/f)π` this is one linear
//! equation in `1/f`, which either holds for every `f` or pins down at most
//! one `f`. Solutions are then filtered by whether the edges bounding the
//! angles can match up around the vertex.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::aad::has_arrangement;
use crate::error::{Error, Result};
use crate::pentagon::{AngleAssignment, AngleExpr, AngleLabel, PentagonProto};

pub use crate::pentagon::VertexCombo;

/// Tile counts that solve a vertex equation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FSolution {
    All,
    Values(BTreeSet<u64>),
}

impl FSolution {
    pub fn contains(&self, f: u64) -> bool {
        match self {
            FSolution::All => true,
            FSolution::Values(v) => v.contains(&f),
        }
    }
}

/// Search range and optional strict lower bounds on angle values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub f_min: u64,
    pub f_max: u64,
    /// Angle `i` must exceed `lower[i]·π` at a solution.
    pub lower: [Option<Rational64>; 5],
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { f_min: 16, f_max: 1000, lower: [None; 5] }
    }
}

impl SearchOptions {
    pub fn with_range(f_min: u64, f_max: u64) -> Self {
        SearchOptions { f_min, f_max, ..Default::default() }
    }
}

fn full_values(asg: &AngleAssignment) -> Result<[AngleExpr; 5]> {
    let mut out = [AngleExpr::constant(Rational64::zero()); 5];
    for a in AngleLabel::ALL {
        out[a.index()] = asg
            .get(a)
            .ok_or_else(|| Error::Underdetermined(format!("no value for {a}")))?;
    }
    Ok(out)
}

/// Whether every angle used by `combo` lies in `(0, 2π)` and above any
/// requested lower bound at tile count `f`.
fn angles_admissible(values: &[AngleExpr; 5], combo: &VertexCombo, f: u64, opts: &SearchOptions) -> bool {
    let two = Rational64::from_integer(2);
    AngleLabel::ALL.iter().filter(|a| combo.count(**a) > 0).all(|a| {
        let v = values[a.index()].at(f);
        v > Rational64::zero() && v < two && opts.lower[a.index()].is_none_or(|lo| v > lo)
    })
}

/// Solves `Σ n_i θ_i(f) = 2π` for even `f` in the search range.
pub fn solve_vertex_equation(
    asg: &AngleAssignment,
    combo: &VertexCombo,
    opts: &SearchOptions,
) -> Result<FSolution> {
    let values = full_values(asg)?;
    let mut p = Rational64::zero();
    let mut q = Rational64::zero();
    for a in AngleLabel::ALL {
        let n = Rational64::from_integer(combo.count(a) as i64);
        p += n * values[a.index()].p;
        q += n * values[a.index()].q;
    }
    let two = Rational64::from_integer(2);
    if p == two && q.is_zero() {
        return Ok(FSolution::All);
    }
    let mut out = BTreeSet::new();
    if p != two {
        // p + q/f = 2  =>  f = q / (2 - p).
        let f = q / (two - p);
        if f.is_integer() && f > Rational64::zero() {
            let f = f.to_integer() as u64;
            if f.is_multiple_of(2) && (opts.f_min..=opts.f_max).contains(&f) && angles_admissible(&values, combo, f, opts) {
                out.insert(f);
            }
        }
    }
    Ok(FSolution::Values(out))
}

/// Whether the angles of `combo` can be arranged around a vertex with
/// matching edges on both sides of every angle.
pub fn edge_feasible(proto: &PentagonProto, combo: &VertexCombo) -> bool {
    combo.degree() >= 3 && has_arrangement(proto, combo)
}

/// Row key: combinations valid for every `f`, or for one `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FKey {
    All,
    F(u64),
}

impl fmt::Display for FKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FKey::All => f.write_str("all"),
            FKey::F(n) => write!(f, "{n}"),
        }
    }
}

impl Serialize for FKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FKey::All => s.serialize_str("all"),
            FKey::F(n) => s.serialize_u64(*n),
        }
    }
}

impl<'de> Deserialize<'de> for FKey {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) => Ok(FKey::F(n)),
            Raw::S(s) if s == "all" => Ok(FKey::All),
            Raw::S(s) => s.parse().map(FKey::F).map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AvcRow {
    pub vertices: BTreeSet<VertexCombo>,
    pub rejected_by_edges: BTreeSet<VertexCombo>,
}

/// Solutions of the vertex equation grouped by tile count.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AvcTable {
    pub rows: BTreeMap<FKey, AvcRow>,
}

#[derive(Serialize, Deserialize)]
struct AvcTableRow {
    f: FKey,
    #[serde(flatten)]
    row: AvcRow,
}

impl Serialize for AvcTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<AvcTableRow> =
            self.rows.iter().map(|(f, row)| AvcTableRow { f: *f, row: row.clone() }).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AvcTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<AvcTableRow>::deserialize(d)?;
        Ok(AvcTable { rows: rows.into_iter().map(|r| (r.f, r.row)).collect() })
    }
}

impl AvcTable {
    /// The combinations available at one tile count: the rows for `f` and
    /// for every `f` together.
    pub fn at(&self, f: u64) -> AvcRow {
        let mut out = AvcRow::default();
        for key in [FKey::All, FKey::F(f)] {
            if let Some(row) = self.rows.get(&key) {
                out.vertices.extend(row.vertices.iter().copied());
                out.rejected_by_edges.extend(row.rejected_by_edges.iter().copied());
            }
        }
        out
    }

    /// Keeps the "all f" row and the rows with `f` above `min_exclusive`.
    pub fn above(&self, min_exclusive: u64) -> AvcTable {
        AvcTable {
            rows: self
                .rows
                .iter()
                .filter(|(k, _)| match k {
                    FKey::All => true,
                    FKey::F(f) => *f > min_exclusive,
                })
                .map(|(k, r)| (*k, r.clone()))
                .collect(),
        }
    }

    pub fn tile_counts(&self) -> Vec<u64> {
        self.rows.keys().filter_map(|k| if let FKey::F(f) = k { Some(*f) } else { None }).collect()
    }
}

/// Every combination with `exponent_i <= bounds[i]` and degree at least 3,
/// solved for `f` and split by edge feasibility.
pub fn enumerate_avc(
    asg: &AngleAssignment,
    proto: &PentagonProto,
    bounds: [u32; 5],
    opts: &SearchOptions,
) -> Result<AvcTable> {
    full_values(asg)?;
    let mut table = AvcTable::default();
    let mut n = [0u32; 5];
    loop {
        let combo = VertexCombo(n);
        if combo.degree() >= 3 {
            let keys: Vec<FKey> = match solve_vertex_equation(asg, &combo, opts)? {
                FSolution::All => vec![FKey::All],
                FSolution::Values(fs) => fs.into_iter().map(FKey::F).collect(),
            };
            if !keys.is_empty() {
                let feasible = edge_feasible(proto, &combo);
                for k in keys {
                    let row = table.rows.entry(k).or_default();
                    if feasible {
                        row.vertices.insert(combo);
                    } else {
                        row.rejected_by_edges.insert(combo);
                    }
                }
            }
        }
        // Odometer over exponent tuples.
        let mut i = 0;
        loop {
            if i == 5 {
                return Ok(table);
            }
            n[i] += 1;
            if n[i] <= bounds[i] {
                break;
            }
            n[i] = 0;
            i += 1;
        }
    }
}

/// Angle values for the a³bc tiling whose special vertex is `α⁴`:
/// `α = π/2`, `β = (5/6 - 4/f)π`, `γ = δ = 2π/3`, `ε = (1/3 + 8/f)π`.
pub fn alpha4_case_assignment() -> AngleAssignment {
    AngleAssignment::full([
        AngleExpr::frac(1, 2, 0, 1),
        AngleExpr::frac(5, 6, -4, 1),
        AngleExpr::frac(2, 3, 0, 1),
        AngleExpr::frac(2, 3, 0, 1),
        AngleExpr::frac(1, 3, 8, 1),
    ])
}

/// Exponent bounds used with [`alpha4_case_assignment`].
pub const ALPHA4_CASE_BOUNDS: [u32; 5] = [4, 5, 3, 3, 5];

/// Lower bounds `β > π/3` and `ε > π/3` that hold in the `α⁴` case.
pub fn alpha4_case_lower_bounds() -> [Option<Rational64>; 5] {
    let third = Rational64::one() / 3;
    [None, Some(third), None, None, Some(third)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pentagon::ProtoKind;

    fn c(s: &str) -> VertexCombo {
        s.parse().unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<VertexCombo> {
        items.iter().map(|s| c(s)).collect()
    }

    #[test]
    fn vertex_equation_matches_closed_form() {
        // (3a + 5b + 4c + 4d + 2e - 12) f = 24 (b - 2e)
        let asg = alpha4_case_assignment();
        let opts = SearchOptions::with_range(2, 100_000);
        for a in 0..=4i64 {
            for b in 0..=5i64 {
                for g in 0..=3i64 {
                    for d in 0..=3i64 {
                        for e in 0..=5i64 {
                            let combo = VertexCombo([a, b, g, d, e].map(|x| x as u32));
                            let lhs = 3 * a + 5 * b + 4 * g + 4 * d + 2 * e - 12;
                            let rhs = 24 * (b - 2 * e);
                            let sol = solve_vertex_equation(&asg, &combo, &opts).unwrap();
                            if lhs == 0 && rhs == 0 {
                                assert_eq!(sol, FSolution::All, "{combo}");
                            } else if let FSolution::Values(fs) = sol {
                                for f in fs {
                                    assert_eq!(lhs * f as i64, rhs, "{combo}");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn table_examples() {
        let asg = alpha4_case_assignment();
        let opts = SearchOptions::default();
        assert_eq!(solve_vertex_equation(&asg, &c("d3"), &opts).unwrap(), FSolution::All);
        assert_eq!(solve_vertex_equation(&asg, &c("de3"), &opts).unwrap(), FSolution::Values([72].into()));
        assert_eq!(solve_vertex_equation(&asg, &c("e5"), &opts).unwrap(), FSolution::Values([120].into()));
    }

    #[test]
    fn underdetermined_is_an_error() {
        let asg = AngleAssignment::partial([None; 5], vec![]);
        assert!(matches!(
            solve_vertex_equation(&asg, &c("d3"), &SearchOptions::default()),
            Err(Error::Underdetermined(_))
        ));
    }

    #[test]
    fn edge_filter_examples() {
        let p = PentagonProto::new(ProtoKind::A3BC);
        assert!(!edge_feasible(&p, &c("gd2")));
        assert!(edge_feasible(&p, &c("a4")));
        assert!(!edge_feasible(&p, &c("be3")));
        assert!(!edge_feasible(&p, &c("ab2")), "one c-edge end cannot be matched");
        assert!(!edge_feasible(&p, &c("ab")), "degree below 3");
    }

    #[test]
    fn full_tile_is_never_a_vertex() {
        let asg = alpha4_case_assignment();
        let sol = solve_vertex_equation(&asg, &VertexCombo([1; 5]), &SearchOptions::with_range(16, 10_000)).unwrap();
        assert_eq!(sol, FSolution::Values(BTreeSet::new()));
    }

    #[test]
    fn avc_sets() {
        let asg = alpha4_case_assignment();
        let p = PentagonProto::new(ProtoKind::A3BC);
        let t = enumerate_avc(&asg, &p, ALPHA4_CASE_BOUNDS, &SearchOptions::default()).unwrap();
        assert_eq!(t.at(120).vertices, set(&["b2e", "g2d", "d3", "a4", "e5"]));
        assert_eq!(t.at(72).vertices, set(&["b2e", "g2d", "d3", "a4", "de3"]));
        assert!(t.at(72).rejected_by_edges.contains(&c("ge3")));
        assert_eq!(t.at(48).vertices, set(&["b2e", "g2d", "d3", "a4", "e4"]));
        assert!(t.at(48).rejected_by_edges.contains(&c("ab2")));
    }

    #[test]
    fn lower_bounds_prune() {
        let asg = alpha4_case_assignment();
        let p = PentagonProto::new(ProtoKind::A3BC);
        let mut opts = SearchOptions::with_range(2, 1000);
        let loose = enumerate_avc(&asg, &p, ALPHA4_CASE_BOUNDS, &opts).unwrap();
        opts.lower = alpha4_case_lower_bounds();
        let tight = enumerate_avc(&asg, &p, ALPHA4_CASE_BOUNDS, &opts).unwrap();
        // β > π/3 needs f > 8.
        assert!(loose.tile_counts().iter().any(|&f| f <= 8));
        assert!(tight.tile_counts().iter().all(|&f| f > 8));
    }

    #[test]
    fn table_json_round_trip() {
        let asg = alpha4_case_assignment();
        let p = PentagonProto::new(ProtoKind::A3BC);
        let t = enumerate_avc(&asg, &p, ALPHA4_CASE_BOUNDS, &SearchOptions::default()).unwrap();
        let text = serde_json::to_string(&t).unwrap();
        assert!(text.starts_with("[{\"f\":\"all\""));
        let back: AvcTable = serde_json::from_str(&text).unwrap();
        assert_eq!(back, t);
    }
}
