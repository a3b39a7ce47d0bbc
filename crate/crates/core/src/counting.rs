//! Euler-type counting for pentagonal tilings of the sphere.
//!
//! Everything here is exact integer arithmetic. For a tiling by `f`
//! pentagons with `v_k` vertices of degree `k`:
//!
//! * `2v = 3f + 4`,
//! * `f/2 - 6 = Σ_{k≥4} (k-3) v_k`,
//! * `v_3 = 20 + Σ_{k≥4} (3k-10) v_k`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::map::CombMap;
use crate::pentagon::{AngleAssignment, AngleLabel, LabeledTiling};

/// One checked statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaEntry {
    pub lemma: String,
    pub pass: bool,
    pub detail: String,
}

impl LemmaEntry {
    fn new(lemma: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        LemmaEntry { lemma: lemma.into(), pass, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub pass: bool,
    pub entries: Vec<LemmaEntry>,
    /// Tile counts that satisfy the identities but are known not to occur.
    pub flags: Vec<String>,
}

fn signed(x: usize) -> i64 {
    x as i64
}

/// Checks the Euler identities for a degree census of `f` pentagons.
pub fn check_euler_identities(census: &BTreeMap<usize, usize>, f: u64) -> Result<IdentityReport> {
    let degree_sum: u64 = census.iter().map(|(&k, &n)| (k * n) as u64).sum();
    if degree_sum != 5 * f {
        return Err(Error::InconsistentCensus { degree_sum, five_f: 5 * f });
    }
    let f = f as i64;
    let v: i64 = census.values().map(|&n| signed(n)).sum();
    let v3 = signed(census.get(&3).copied().unwrap_or(0));
    let high = || census.iter().filter(|(&k, _)| k >= 4).map(|(&k, &n)| (signed(k), signed(n)));
    let excess: i64 = high().map(|(k, n)| (k - 3) * n).sum();
    let v3_rhs: i64 = 20 + high().map(|(k, n)| (3 * k - 10) * n).sum::<i64>();
    let low = census.iter().any(|(&k, &n)| k < 3 && n > 0);

    let entries = vec![
        LemmaEntry::new("vertex-count", 2 * v == 3 * f + 4, format!("2v = {}, 3f + 4 = {}", 2 * v, 3 * f + 4)),
        LemmaEntry::new(
            "high-degree-excess",
            f - 12 == 2 * excess,
            format!("f/2 - 6 = {}, sum (k-3)v_k = {excess}", Rational64::new(f - 12, 2)),
        ),
        LemmaEntry::new("degree-3-count", v3 == v3_rhs, format!("v_3 = {v3}, 20 + sum (3k-10)v_k = {v3_rhs}")),
        LemmaEntry::new("tile-count-even", f % 2 == 0 && f >= 12, format!("f = {f}")),
        LemmaEntry::new("minimum-degree", !low, if low { "a vertex has degree < 3" } else { "all degrees >= 3" }),
    ];
    let mut flags = Vec::new();
    if f == 14 {
        flags.push("f = 14 satisfies the identities but admits no tiling (a single degree-4 vertex cannot occur)".into());
    }
    Ok(IdentityReport { pass: entries.iter().all(|e| e.pass), entries, flags })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TileKind {
    #[serde(rename = "3^5")]
    ThreeFive,
    #[serde(rename = "3^4 4")]
    ThreeFourFour,
    #[serde(rename = "3^4 5")]
    ThreeFourFive,
    #[serde(rename = "other")]
    Other,
}

impl fmt::Display for TileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TileKind::ThreeFive => "3⁵",
            TileKind::ThreeFourFour => "3⁴4",
            TileKind::ThreeFourFive => "3⁴5",
            TileKind::Other => "other",
        })
    }
}

/// Degree pattern of one tile. `fifth_vertex` is the single vertex of
/// degree above 3, when there is exactly one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TileClass {
    pub class: TileKind,
    pub fifth_vertex: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialTiles {
    pub classes: Vec<TileClass>,
    /// Whether some tile is 3⁵, 3⁴4 or 3⁴5.
    pub has_special: bool,
}

impl SpecialTiles {
    pub fn count(&self, kind: TileKind) -> usize {
        self.classes.iter().filter(|c| c.class == kind).count()
    }

    pub fn histogram(&self) -> BTreeMap<TileKind, usize> {
        let mut h = BTreeMap::new();
        for c in &self.classes {
            *h.entry(c.class).or_insert(0) += 1;
        }
        h
    }
}

/// Classifies every face of a pentagonal map by the degrees of its corners.
pub fn classify_special_tiles(m: &CombMap) -> SpecialTiles {
    let classes: Vec<TileClass> = (0..m.num_faces())
        .map(|f| {
            let corners = m.face_vertices(f);
            let high: Vec<usize> = corners.iter().copied().filter(|&v| m.vertex_degree(v) > 3).collect();
            if corners.len() != 5 {
                return TileClass { class: TileKind::Other, fifth_vertex: None };
            }
            match high.as_slice() {
                [] => TileClass { class: TileKind::ThreeFive, fifth_vertex: None },
                &[h] => {
                    let class = match m.vertex_degree(h) {
                        4 => TileKind::ThreeFourFour,
                        5 => TileKind::ThreeFourFive,
                        _ => TileKind::Other,
                    };
                    TileClass { class, fifth_vertex: Some(h) }
                }
                _ => TileClass { class: TileKind::Other, fifth_vertex: None },
            }
        })
        .collect();
    let has_special = classes.iter().any(|c| c.class != TileKind::Other);
    SpecialTiles { classes, has_special }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub pass: bool,
    pub entries: Vec<LemmaEntry>,
}

impl LemmaReport {
    pub fn entry(&self, lemma: &str) -> Option<&LemmaEntry> {
        self.entries.iter().find(|e| e.lemma == lemma)
    }
}

/// A partition of the five corners into angles that count as the same.
struct Partition {
    name: &'static str,
    class_of: [usize; 5],
    classes: Vec<Vec<AngleLabel>>,
}

impl Partition {
    fn by_label() -> Self {
        Partition { name: "labels", class_of: [0, 1, 2, 3, 4], classes: AngleLabel::ALL.map(|a| vec![a]).to_vec() }
    }

    fn by_value(asg: &AngleAssignment, f: u64) -> Option<Self> {
        let values = asg.values_at(f)?;
        let mut distinct: Vec<Rational64> = Vec::new();
        let mut class_of = [0; 5];
        for (i, v) in values.iter().enumerate() {
            class_of[i] = match distinct.iter().position(|x| x == v) {
                Some(k) => k,
                None => {
                    distinct.push(*v);
                    distinct.len() - 1
                }
            };
        }
        let mut classes = vec![Vec::new(); distinct.len()];
        for a in AngleLabel::ALL {
            classes[class_of[a.index()]].push(a);
        }
        Some(Partition { name: "values", class_of, classes })
    }

    fn describe(&self, k: usize) -> String {
        self.classes[k].iter().map(|a| a.greek()).collect()
    }
}

fn audit_partition(lt: &LabeledTiling, p: &Partition, entries: &mut Vec<LemmaEntry>) {
    let m = lt.map();
    let nc = p.classes.len();
    // Per vertex: degree and how often each class occurs.
    let vertices: Vec<(usize, Vec<u32>)> = (0..m.num_vertices())
        .map(|v| {
            let mut counts = vec![0u32; nc];
            for (i, &n) in lt.vertex_combo(v).0.iter().enumerate() {
                counts[p.class_of[i]] += n;
            }
            (m.vertex_degree(v), counts)
        })
        .collect();
    let deg3: Vec<&Vec<u32>> = vertices.iter().filter(|(d, _)| *d == 3).map(|(_, c)| c).collect();
    let multiplicity = |k: usize| p.classes[k].len();
    let tag = |s: &str| format!("{s}/{}", p.name);

    let mut fails = Vec::new();
    let mut used = Vec::new();
    for k in 0..nc {
        if deg3.iter().all(|c| c[k] >= 1) {
            used.push(p.describe(k));
            if multiplicity(k) < 2 {
                fails.push(p.describe(k));
            }
        }
    }
    entries.push(LemmaEntry::new(
        tag("angle-at-every-degree-3-vertex"),
        fails.is_empty(),
        format!("angles at every degree-3 vertex: {used:?}; appearing once in the tile: {fails:?}"),
    ));

    let (mut used, mut fails) = (Vec::new(), Vec::new());
    for k in 0..nc {
        if deg3.iter().all(|c| c[k] >= 2) {
            used.push(p.describe(k));
            if multiplicity(k) < 3 {
                fails.push(p.describe(k));
            }
        }
    }
    entries.push(LemmaEntry::new(
        tag("angle-twice-at-every-degree-3-vertex"),
        fails.is_empty(),
        format!("angles twice at every degree-3 vertex: {used:?}; fewer than 3 in the tile: {fails:?}"),
    ));

    let (mut used, mut fails) = (Vec::new(), Vec::new());
    for i in 0..nc {
        for j in i + 1..nc {
            if deg3.iter().all(|c| c[i] + c[j] >= 2) {
                let name = format!("{}+{}", p.describe(i), p.describe(j));
                if multiplicity(i) + multiplicity(j) < 3 {
                    fails.push(name.clone());
                }
                used.push(name);
            }
        }
    }
    entries.push(LemmaEntry::new(
        tag("angle-pair-twice-at-every-degree-3-vertex"),
        fails.is_empty(),
        format!("pairs twice at every degree-3 vertex: {used:?}; fewer than 3 in the tile: {fails:?}"),
    ));

    let absent: Vec<usize> = (0..nc).filter(|&k| deg3.iter().all(|c| c[k] == 0)).collect();
    let census = crate::map::degree_census(m);
    let v4 = census.get(&4).copied().unwrap_or(0);
    let v5 = census.get(&5).copied().unwrap_or(0);
    let mut problems = Vec::new();
    if absent.len() > 1 {
        problems.push(format!("{} angles avoid degree-3 vertices", absent.len()));
    }
    for &k in &absent {
        if multiplicity(k) != 1 {
            problems.push(format!("{} appears {} times in the tile", p.describe(k), multiplicity(k)));
        }
        if 2 * v4 + v5 < 12 {
            problems.push(format!("2v_4 + v_5 = {} < 12", 2 * v4 + v5));
        }
        let witnessed = vertices.iter().any(|(d, c)| (*d == 4 && c[k] >= 3) || (*d == 5 && c[k] == 5));
        if !witnessed {
            problems.push(format!("no vertex of type αθ³, θ⁴ or θ⁵ for θ = {}", p.describe(k)));
        }
    }
    let names: Vec<String> = absent.iter().map(|&k| p.describe(k)).collect();
    entries.push(LemmaEntry::new(
        tag("angle-absent-from-degree-3-vertices"),
        problems.is_empty(),
        if problems.is_empty() {
            format!("angles avoiding degree-3 vertices: {names:?}; 2v_4 + v_5 = {}", 2 * v4 + v5)
        } else {
            problems.join("; ")
        },
    ));
}

/// Checks the counting lemmas on one labeled tiling.
///
/// Angles are told apart by label, and additionally by value when a fully
/// determined assignment is given.
pub fn audit_counting_lemmas(lt: &LabeledTiling, asg: Option<&AngleAssignment>) -> LemmaReport {
    let m = lt.map();
    let f = lt.f();
    let mut entries = Vec::new();

    let census = crate::map::degree_census(m);
    match check_euler_identities(&census, f) {
        Ok(r) => entries.extend(r.entries),
        Err(e) => entries.push(LemmaEntry::new("vertex-count", false, e.to_string())),
    }

    let tiles = classify_special_tiles(m);
    let hist = tiles.histogram();
    let hist_text = hist.iter().map(|(k, n)| format!("{k}: {n}")).collect::<Vec<_>>().join(", ");
    entries.push(LemmaEntry::new("special-tile-exists", tiles.has_special, hist_text.clone()));

    let n35 = tiles.count(TileKind::ThreeFive);
    let n344 = tiles.count(TileKind::ThreeFourFour);
    let n345 = tiles.count(TileKind::ThreeFourFive);
    let total = tiles.classes.len();

    let pass = n35 > 0 || (f >= 24 && (f != 24 || n344 == total));
    entries.push(LemmaEntry::new(
        "no-3^5-tile-bound",
        pass,
        if n35 > 0 { format!("vacuous: {n35} tiles are 3⁵") } else { format!("f = {f}; {hist_text}") },
    ));

    let pass = n35 > 0 || n344 > 0 || (f >= 60 && (f != 60 || n345 == total));
    entries.push(LemmaEntry::new(
        "no-3^5-or-3^4 4-tile-bound",
        pass,
        if n35 + n344 > 0 { format!("vacuous: {} tiles are 3⁵ or 3⁴4", n35 + n344) } else { format!("f = {f}; {hist_text}") },
    ));

    audit_partition(lt, &Partition::by_label(), &mut entries);
    if let Some(p) = asg.and_then(|a| Partition::by_value(a, f)) {
        audit_partition(lt, &p, &mut entries);
    }
    LemmaReport { pass: entries.iter().all(|e| e.pass), entries }
}

/// Angle labels of the tiling that never meet a degree-3 vertex.
pub fn labels_avoiding_degree_3(lt: &LabeledTiling) -> BTreeSet<AngleLabel> {
    let m = lt.map();
    let mut seen = BTreeSet::new();
    for v in (0..m.num_vertices()).filter(|&v| m.vertex_degree(v) == 3) {
        for d in m.vertex_darts(v) {
            seen.insert(lt.angle_at(d));
        }
    }
    AngleLabel::ALL.into_iter().filter(|a| !seen.contains(a)).collect()
}
