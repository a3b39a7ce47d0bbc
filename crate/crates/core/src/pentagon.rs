//! Pentagon prototypes, exact angle arithmetic and labeled tilings.
//!
//! Angles are measured in units of π and have the form `p + q/f` with
//! rational `p`, `q`, where `f` is the number of tiles.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::map::{CombMap, Dart};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeLabel {
    A,
    B,
    C,
}

impl EdgeLabel {
    pub const ALL: [EdgeLabel; 3] = [EdgeLabel::A, EdgeLabel::B, EdgeLabel::C];

    /// The marker used in vertex words: thin rule, double rule, dash.
    pub fn marker(self) -> &'static str {
        match self {
            EdgeLabel::A => "|",
            EdgeLabel::B => "‖",
            EdgeLabel::C => "—",
        }
    }

    pub fn ascii_marker(self) -> &'static str {
        match self {
            EdgeLabel::A => "|",
            EdgeLabel::B => "||",
            EdgeLabel::C => "-",
        }
    }

    pub fn letter(self) -> char {
        match self {
            EdgeLabel::A => 'a',
            EdgeLabel::B => 'b',
            EdgeLabel::C => 'c',
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AngleLabel {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Epsilon,
}

impl AngleLabel {
    pub const ALL: [AngleLabel; 5] =
        [AngleLabel::Alpha, AngleLabel::Beta, AngleLabel::Gamma, AngleLabel::Delta, AngleLabel::Epsilon];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> AngleLabel {
        Self::ALL[i]
    }

    pub fn greek(self) -> char {
        ['α', 'β', 'γ', 'δ', 'ε'][self.index()]
    }

    /// One-letter ASCII name: `a b g d e`.
    pub fn ascii(self) -> char {
        ['a', 'b', 'g', 'd', 'e'][self.index()]
    }

    pub fn from_char(c: char) -> Option<AngleLabel> {
        match c {
            'a' | 'α' => Some(AngleLabel::Alpha),
            'b' | 'β' => Some(AngleLabel::Beta),
            'g' | 'γ' => Some(AngleLabel::Gamma),
            'd' | 'δ' => Some(AngleLabel::Delta),
            'e' | 'ε' | 'ϵ' => Some(AngleLabel::Epsilon),
            _ => None,
        }
    }
}

impl fmt::Display for AngleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.greek())
    }
}

/// Multiset of edge lengths of the pentagon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeCombination {
    A2B2C,
    A3BC,
    A3B2,
    A4B,
    A5,
}

impl EdgeCombination {
    pub const ALL: [EdgeCombination; 5] = [
        EdgeCombination::A2B2C,
        EdgeCombination::A3BC,
        EdgeCombination::A3B2,
        EdgeCombination::A4B,
        EdgeCombination::A5,
    ];

    /// Number of `a`, `b`, `c` edges.
    pub fn counts(self) -> [usize; 3] {
        match self {
            EdgeCombination::A2B2C => [2, 2, 1],
            EdgeCombination::A3BC => [3, 1, 1],
            EdgeCombination::A3B2 => [3, 2, 0],
            EdgeCombination::A4B => [4, 1, 0],
            EdgeCombination::A5 => [5, 0, 0],
        }
    }
}

impl FromStr for EdgeCombination {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s
            .chars()
            .map(|c| match c {
                '²' => '2',
                '³' => '3',
                '⁴' => '4',
                '⁵' => '5',
                c => c.to_ascii_lowercase(),
            })
            .collect();
        match t.as_str() {
            "a2b2c" => Ok(EdgeCombination::A2B2C),
            "a3bc" => Ok(EdgeCombination::A3BC),
            "a3b2" => Ok(EdgeCombination::A3B2),
            "a4b" => Ok(EdgeCombination::A4B),
            "a5" => Ok(EdgeCombination::A5),
            _ => Err(Error::Syntax { input: s.into(), reason: "unknown edge combination".into() }),
        }
    }
}

/// One admissible arrangement of edge lengths around the pentagon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ProtoKind {
    #[serde(rename = "a2b2c-alternating")]
    A2B2CAlternating,
    #[serde(rename = "a2b2c-adjacent")]
    A2B2CAdjacent,
    #[serde(rename = "a3bc")]
    A3BC,
    #[serde(rename = "a3b2")]
    A3B2,
    #[serde(rename = "a4b")]
    A4B,
    #[serde(rename = "a5")]
    A5,
}

impl ProtoKind {
    pub const ALL: [ProtoKind; 6] = [
        ProtoKind::A2B2CAlternating,
        ProtoKind::A2B2CAdjacent,
        ProtoKind::A3BC,
        ProtoKind::A3B2,
        ProtoKind::A4B,
        ProtoKind::A5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProtoKind::A2B2CAlternating => "a2b2c-alternating",
            ProtoKind::A2B2CAdjacent => "a2b2c-adjacent",
            ProtoKind::A3BC => "a3bc",
            ProtoKind::A3B2 => "a3b2",
            ProtoKind::A4B => "a4b",
            ProtoKind::A5 => "a5",
        }
    }

    pub fn combination(self) -> EdgeCombination {
        match self {
            ProtoKind::A2B2CAlternating | ProtoKind::A2B2CAdjacent => EdgeCombination::A2B2C,
            ProtoKind::A3BC => EdgeCombination::A3BC,
            ProtoKind::A3B2 => EdgeCombination::A3B2,
            ProtoKind::A4B => EdgeCombination::A4B,
            ProtoKind::A5 => EdgeCombination::A5,
        }
    }
}

impl fmt::Display for ProtoKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProtoKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.to_ascii_lowercase();
        match t.as_str() {
            "a2b2c-alternating" | "a2b2c-alt" | "alternating" => Ok(ProtoKind::A2B2CAlternating),
            "a2b2c-adjacent" | "a2b2c-adj" | "adjacent" => Ok(ProtoKind::A2B2CAdjacent),
            _ => match t.parse::<EdgeCombination>() {
                Ok(EdgeCombination::A3BC) => Ok(ProtoKind::A3BC),
                Ok(EdgeCombination::A3B2) => Ok(ProtoKind::A3B2),
                Ok(EdgeCombination::A4B) => Ok(ProtoKind::A4B),
                Ok(EdgeCombination::A5) => Ok(ProtoKind::A5),
                _ => Err(Error::Syntax { input: s.into(), reason: "unknown pentagon prototype".into() }),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Corner {
    pub angle: AngleLabel,
    pub cw_edge: EdgeLabel,
    pub ccw_edge: EdgeLabel,
}

/// Corners of a pentagon in counter-clockwise order. Corner `i` and corner
/// `i + 1` share the edge `corners[i].ccw_edge == corners[i + 1].cw_edge`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PentagonProto {
    pub kind: ProtoKind,
    pub corners: [Corner; 5],
}

impl PentagonProto {
    pub fn new(kind: ProtoKind) -> Self {
        use AngleLabel::*;
        use EdgeLabel::*;
        // Angles in counter-clockwise order, then the edge after each angle.
        let (angles, edges) = match kind {
            ProtoKind::A2B2CAlternating => ([Alpha, Beta, Delta, Epsilon, Gamma], [A, B, C, A, B]),
            ProtoKind::A2B2CAdjacent => ([Alpha, Beta, Delta, Epsilon, Gamma], [A, A, C, B, B]),
            ProtoKind::A3BC => ([Alpha, Beta, Delta, Epsilon, Gamma], [B, A, A, A, C]),
            ProtoKind::A3B2 => ([Alpha, Beta, Gamma, Delta, Epsilon], [B, B, A, A, A]),
            ProtoKind::A4B => ([Alpha, Beta, Gamma, Delta, Epsilon], [B, A, A, A, A]),
            ProtoKind::A5 => ([Alpha, Beta, Gamma, Delta, Epsilon], [A, A, A, A, A]),
        };
        let corners = std::array::from_fn(|i| Corner {
            angle: angles[i],
            cw_edge: edges[(i + 4) % 5],
            ccw_edge: edges[i],
        });
        PentagonProto { kind, corners }
    }

    /// Position of an angle in the counter-clockwise corner order.
    pub fn position(&self, angle: AngleLabel) -> usize {
        self.corners.iter().position(|c| c.angle == angle).expect("every proto has all five angles")
    }

    pub fn corner(&self, angle: AngleLabel) -> Corner {
        self.corners[self.position(angle)]
    }

    /// The edge between corner `i` and corner `i + 1`.
    pub fn edge_after(&self, i: usize) -> EdgeLabel {
        self.corners[i % 5].ccw_edge
    }

    pub fn edge_counts(&self) -> [usize; 3] {
        let mut n = [0; 3];
        for c in &self.corners {
            n[c.ccw_edge as usize] += 1;
        }
        n
    }

    /// Whether an angle is flanked by the edge label `e`.
    pub fn touches(&self, angle: AngleLabel, e: EdgeLabel) -> bool {
        let c = self.corner(angle);
        c.cw_edge == e || c.ccw_edge == e
    }
}

impl Serialize for PentagonProto {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.kind.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PentagonProto {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(PentagonProto::new(ProtoKind::deserialize(d)?))
    }
}

/// The arrangements of an edge combination that can tile the sphere.
pub fn admissible_protos(combo: EdgeCombination) -> Vec<PentagonProto> {
    let kinds: &[ProtoKind] = match combo {
        EdgeCombination::A2B2C => &[ProtoKind::A2B2CAlternating, ProtoKind::A2B2CAdjacent],
        EdgeCombination::A3BC => &[ProtoKind::A3BC],
        EdgeCombination::A3B2 => &[ProtoKind::A3B2],
        EdgeCombination::A4B => &[ProtoKind::A4B],
        EdgeCombination::A5 => &[ProtoKind::A5],
    };
    kinds.iter().map(|&k| PentagonProto::new(k)).collect()
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

/// An angle `(p + q/f)·π`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AngleExpr {
    pub p: Rational64,
    pub q: Rational64,
}

impl AngleExpr {
    pub fn new(p: Rational64, q: Rational64) -> Self {
        AngleExpr { p, q }
    }

    pub fn constant(p: Rational64) -> Self {
        AngleExpr { p, q: Rational64::zero() }
    }

    /// Shorthand for `(pn/pd + (qn/qd)/f)·π`.
    pub fn frac(pn: i64, pd: i64, qn: i64, qd: i64) -> Self {
        AngleExpr { p: r(pn, pd), q: r(qn, qd) }
    }

    /// Value in units of π at a concrete tile count.
    pub fn at(&self, f: u64) -> Rational64 {
        self.p + self.q / Rational64::from_integer(f as i64)
    }

    pub fn radians(&self, f: u64) -> f64 {
        let v = self.at(f);
        *v.numer() as f64 / *v.denom() as f64 * std::f64::consts::PI
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }
}

impl Add for AngleExpr {
    type Output = AngleExpr;
    fn add(self, o: AngleExpr) -> AngleExpr {
        AngleExpr { p: self.p + o.p, q: self.q + o.q }
    }
}

impl Sub for AngleExpr {
    type Output = AngleExpr;
    fn sub(self, o: AngleExpr) -> AngleExpr {
        AngleExpr { p: self.p - o.p, q: self.q - o.q }
    }
}

impl Mul<AngleExpr> for Rational64 {
    type Output = AngleExpr;
    fn mul(self, e: AngleExpr) -> AngleExpr {
        AngleExpr { p: self * e.p, q: self * e.q }
    }
}

impl fmt::Display for AngleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return write!(f, "{}π", self.p);
        }
        let sign = if self.q < Rational64::zero() { '-' } else { '+' };
        let q = self.q.abs();
        let qs = if q.is_integer() { format!("{q}/f") } else { format!("({q})/f") };
        if self.p.is_zero() {
            let s = if sign == '-' { "-" } else { "" };
            write!(f, "({s}{qs})π")
        } else {
            write!(f, "({} {sign} {qs})π", self.p)
        }
    }
}

/// Angle sum of one tile: `(3 + 4/f)·π`.
pub fn total_angle_sum(f: u64) -> Result<AngleExpr> {
    if f < 12 || !f.is_multiple_of(2) {
        return Err(Error::InvalidTileCount(f));
    }
    Ok(AngleExpr::constant(AngleExpr::frac(3, 1, 4, 1).at(f)))
}

/// A linear relation `Σ coeffs[i]·θ_i = rhs` among the five angles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub coeffs: [Rational64; 5],
    pub rhs: AngleExpr,
}

/// Outcome of asking whether an angle sum is forced by an assignment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Implication {
    Holds,
    Fails,
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AngleAssignment {
    pub values: [Option<AngleExpr>; 5],
    #[serde(default)]
    pub relations: Vec<Relation>,
}

impl AngleAssignment {
    pub fn full(values: [AngleExpr; 5]) -> Self {
        AngleAssignment { values: values.map(Some), relations: Vec::new() }
    }

    pub fn partial(values: [Option<AngleExpr>; 5], relations: Vec<Relation>) -> Self {
        AngleAssignment { values, relations }
    }

    pub fn get(&self, a: AngleLabel) -> Option<AngleExpr> {
        self.values[a.index()]
    }

    pub fn is_fully_determined(&self) -> bool {
        self.values.iter().all(Option::is_some)
    }

    /// Values at a concrete `f`, if every label is assigned.
    pub fn values_at(&self, f: u64) -> Option<[Rational64; 5]> {
        let mut out = [Rational64::zero(); 5];
        for (o, v) in out.iter_mut().zip(&self.values) {
            *o = v.as_ref()?.at(f);
        }
        Some(out)
    }

    /// Decides whether `Σ counts[i]·θ_i = target·π` follows from the
    /// assigned values and relations at tile count `f`.
    pub fn implies(&self, counts: [u32; 5], target: Rational64, f: u64) -> Implication {
        let unknown: Vec<usize> = (0..5).filter(|&i| self.values[i].is_none()).collect();
        // Rows over the unknowns, last entry is the right hand side.
        let reduce_known = |coeffs: [Rational64; 5], rhs: Rational64| -> Vec<Rational64> {
            let mut rhs = rhs;
            for i in 0..5 {
                if let Some(v) = self.values[i] {
                    rhs -= coeffs[i] * v.at(f);
                }
            }
            let mut row: Vec<Rational64> = unknown.iter().map(|&i| coeffs[i]).collect();
            row.push(rhs);
            row
        };
        let mut basis: Vec<Vec<Rational64>> = Vec::new();
        for rel in &self.relations {
            let mut row = reduce_known(rel.coeffs, rel.rhs.at(f));
            eliminate(&mut row, &basis);
            if row.iter().any(|x| !x.is_zero()) {
                basis.push(row);
            }
        }
        let coeffs = counts.map(|c| Rational64::from_integer(c as i64));
        let mut row = reduce_known(coeffs, target);
        eliminate(&mut row, &basis);
        let k = unknown.len();
        if row[..k].iter().any(|x| !x.is_zero()) {
            Implication::Undetermined
        } else if row[k].is_zero() {
            Implication::Holds
        } else {
            Implication::Fails
        }
    }
}

/// Reduces `row` against earlier rows, each of which is zero at the pivots
/// of the rows before it.
fn eliminate(row: &mut [Rational64], basis: &[Vec<Rational64>]) {
    for b in basis {
        let Some(p) = b.iter().position(|x| !x.is_zero()) else { continue };
        if p + 1 == b.len() || row[p].is_zero() {
            continue;
        }
        let factor = row[p] / b[p];
        for (x, y) in row.iter_mut().zip(b) {
            *x -= factor * y;
        }
    }
}

/// How a proto is laid onto one face. The corners of the face are the
/// origins of `anchor, next(anchor), ...`; face corner `j` receives proto
/// corner `rot + j` (or `rot - j` when flipped), indices mod 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Placement {
    pub face: usize,
    pub anchor: Dart,
    pub rot: u8,
    pub flip: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "LabeledTilingJson", into = "LabeledTilingJson")]
pub struct LabeledTiling {
    map: CombMap,
    proto: PentagonProto,
    placement: Vec<Placement>,
    f: u64,
    dart_angle: Vec<Option<AngleLabel>>,
    dart_edge: Vec<Option<EdgeLabel>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LabeledTilingJson {
    pub map: CombMap,
    pub proto: ProtoKind,
    pub placement: Vec<Placement>,
    pub f: u64,
}

impl From<LabeledTiling> for LabeledTilingJson {
    fn from(lt: LabeledTiling) -> Self {
        LabeledTilingJson { map: lt.map, proto: lt.proto.kind, placement: lt.placement, f: lt.f }
    }
}

impl TryFrom<LabeledTilingJson> for LabeledTiling {
    type Error = Error;
    fn try_from(j: LabeledTilingJson) -> Result<Self> {
        LabeledTiling::new(j.map, PentagonProto::new(j.proto), j.placement, j.f)
    }
}

impl LabeledTiling {
    /// Checks that the placement names every face once with an anchor on
    /// that face. Label consistency is left to [`verify_labeled_tiling`].
    pub fn new(map: CombMap, proto: PentagonProto, mut placement: Vec<Placement>, f: u64) -> Result<Self> {
        placement.sort_by_key(|p| p.face);
        if placement.len() != map.num_faces() || placement.iter().enumerate().any(|(i, p)| p.face != i) {
            return Err(Error::InvalidMap("placement must list every face exactly once".into()));
        }
        let n = map.num_darts();
        let mut dart_angle = vec![None; n];
        let mut dart_edge = vec![None; n];
        for p in &placement {
            if p.anchor >= n || map.face(p.anchor) != p.face {
                return Err(Error::InvalidMap(format!("anchor {} is not on face {}", p.anchor, p.face)));
            }
            if p.rot >= 5 {
                return Err(Error::InvalidMap(format!("rotation {} out of range", p.rot)));
            }
            for (j, d) in map.cycle_from(p.anchor).into_iter().enumerate() {
                let k = if p.flip { (p.rot as usize + 5 * 5 - j) % 5 } else { (p.rot as usize + j) % 5 };
                let c = proto.corners[k];
                dart_angle[d] = Some(c.angle);
                dart_edge[d] = Some(if p.flip { c.cw_edge } else { c.ccw_edge });
            }
        }
        Ok(LabeledTiling { map, proto, placement, f, dart_angle, dart_edge })
    }

    pub fn map(&self) -> &CombMap {
        &self.map
    }
    pub fn proto(&self) -> &PentagonProto {
        &self.proto
    }
    pub fn placement(&self) -> &[Placement] {
        &self.placement
    }
    pub fn f(&self) -> u64 {
        self.f
    }

    /// Angle of the face left of `d` at the origin of `d`.
    pub fn angle_at(&self, d: Dart) -> AngleLabel {
        self.dart_angle[d].expect("every dart lies on a placed face")
    }

    /// Edge label of `d` as seen from the face left of `d`.
    pub fn edge_label(&self, d: Dart) -> EdgeLabel {
        self.dart_edge[d].expect("every dart lies on a placed face")
    }

    /// Angles meeting at a vertex, with multiplicity.
    pub fn vertex_combo(&self, v: usize) -> VertexCombo {
        let mut n = [0u32; 5];
        for d in self.map.vertex_darts(v) {
            n[self.angle_at(d).index()] += 1;
        }
        VertexCombo(n)
    }

    /// Distinct vertex combinations with the number of vertices of each.
    pub fn vertex_types(&self) -> BTreeMap<VertexCombo, usize> {
        let mut out = BTreeMap::new();
        for v in 0..self.map.num_vertices() {
            *out.entry(self.vertex_combo(v)).or_insert(0) += 1;
        }
        out
    }

    /// A copy with one face's orientation flag toggled.
    pub fn with_flipped_face(&self, face: usize) -> Result<LabeledTiling> {
        let mut placement = self.placement.clone();
        placement[face].flip = !placement[face].flip;
        LabeledTiling::new(self.map.clone(), self.proto, placement, self.f)
    }
}

/// Exponents `(n_α, n_β, n_γ, n_δ, n_ε)` of the angles at a vertex.
///
/// The ASCII form writes each angle letter (`a b g d e`) followed by its
/// exponent when larger than one, e.g. `ab2` or `d3`. Dots between factors
/// are accepted and ignored, as are Greek letters and superscript digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexCombo(pub [u32; 5]);

impl VertexCombo {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn count(&self, a: AngleLabel) -> u32 {
        self.0[a.index()]
    }

    /// Angles with multiplicity, in label order.
    pub fn angles(&self) -> Vec<AngleLabel> {
        AngleLabel::ALL.iter().flat_map(|&a| std::iter::repeat_n(a, self.count(a) as usize)).collect()
    }

    pub fn ascii(&self) -> String {
        let mut s = String::new();
        for a in AngleLabel::ALL {
            match self.count(a) {
                0 => {}
                1 => s.push(a.ascii()),
                k => {
                    s.push(a.ascii());
                    s.push_str(&k.to_string());
                }
            }
        }
        s
    }
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

impl fmt::Display for VertexCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in AngleLabel::ALL {
            let k = self.count(a);
            if k == 0 {
                continue;
            }
            write!(f, "{}", a.greek())?;
            if k > 1 {
                for c in k.to_string().chars() {
                    write!(f, "{}", SUPERSCRIPTS[c.to_digit(10).unwrap() as usize])?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for VertexCombo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Syntax { input: s.into(), reason: reason.into() };
        let mut n = [0u32; 5];
        let mut chars = s.chars().filter(|c| !matches!(c, '.' | '·' | ' ')).peekable();
        let mut any = false;
        while let Some(c) = chars.next() {
            let a = AngleLabel::from_char(c).ok_or_else(|| err("expected an angle letter"))?;
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    digits.push(d);
                } else if let Some(k) = SUPERSCRIPTS.iter().position(|&x| x == d) {
                    digits.push(char::from_digit(k as u32, 10).unwrap());
                } else {
                    break;
                }
                chars.next();
            }
            let k: u32 = if digits.is_empty() { 1 } else { digits.parse().map_err(|_| err("bad exponent"))? };
            n[a.index()] += k;
            any = true;
        }
        if !any {
            return Err(err("empty combination"));
        }
        Ok(VertexCombo(n))
    }
}

impl Serialize for VertexCombo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.ascii())
    }
}

impl<'de> Deserialize<'de> for VertexCombo {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn from_checks(checks: Vec<Check>) -> Self {
        VerifyReport { pass: checks.iter().all(|c| c.pass), checks }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check(name: &str, failure: Option<String>, ok: impl Into<String>) -> Check {
    match failure {
        None => Check { name: name.into(), pass: true, detail: ok.into() },
        Some(detail) => Check { name: name.into(), pass: false, detail },
    }
}

/// Certifies that a labeled map is an edge-to-edge tiling by copies of its
/// proto, and, given an assignment, that angles close up at every vertex.
pub fn verify_labeled_tiling(lt: &LabeledTiling, asg: Option<&AngleAssignment>) -> VerifyReport {
    let m = &lt.map;
    let mut checks = Vec::new();

    let bad_face = (0..m.num_faces()).find(|&f| m.face_degree(f) != 5);
    checks.push(check(
        "pentagons",
        bad_face.map(|f| format!("face {f} has {} sides", m.face_degree(f))),
        format!("{} pentagonal faces", m.num_faces()),
    ));

    let tile_count = m.num_faces() as u64;
    checks.push(check(
        "tile-count",
        (tile_count != lt.f).then(|| format!("declared f={} but the map has {tile_count} faces", lt.f)),
        format!("f={tile_count}"),
    ));

    let mismatch = (0..m.num_darts()).find(|&d| lt.edge_label(d) != lt.edge_label(m.twin(d)));
    checks.push(check(
        "edge-labels",
        mismatch.map(|d| {
            format!(
                "edge {} between vertices {} and {} is {} on face {} but {} on face {}",
                m.edge(d),
                m.origin(d),
                m.target(d),
                lt.edge_label(d),
                m.face(d),
                lt.edge_label(m.twin(d)),
                m.face(m.twin(d))
            )
        }),
        "both sides of every edge agree",
    ));

    let proto_failure = lt.placement.iter().find_map(|p| {
        let darts = m.cycle_from(p.anchor);
        if darts.len() != 5 {
            return Some(format!("face {} is not a pentagon", p.face));
        }
        let seen: BTreeSet<AngleLabel> = darts.iter().map(|&d| lt.angle_at(d)).collect();
        if seen.len() != 5 {
            return Some(format!("face {} repeats an angle", p.face));
        }
        for (j, &d) in darts.iter().enumerate() {
            let k = if p.flip { (p.rot as usize + 25 - j) % 5 } else { (p.rot as usize + j) % 5 };
            let c = lt.proto.corners[k];
            let (incoming, outgoing) = (lt.edge_label(m.prev(d)), lt.edge_label(d));
            let expected = if p.flip { (c.ccw_edge, c.cw_edge) } else { (c.cw_edge, c.ccw_edge) };
            if lt.angle_at(d) != c.angle || (incoming, outgoing) != expected {
                return Some(format!("face {} corner {j} does not match the proto", p.face));
            }
        }
        None
    });
    checks.push(check("proto-match", proto_failure, format!("every face is a copy of {}", lt.proto.kind)));

    if let Some(asg) = asg {
        let two = Rational64::from_integer(2);
        let mut vertex_failure = None;
        for v in 0..m.num_vertices() {
            let combo = lt.vertex_combo(v);
            match asg.implies(combo.0, two, lt.f) {
                Implication::Holds => {}
                other => {
                    vertex_failure = Some(format!("vertex {v} ({combo}) sum is {other:?} rather than 2π"));
                    break;
                }
            }
        }
        checks.push(check("vertex-sums", vertex_failure, "every vertex sums to 2π"));

        let tile = match total_angle_sum(lt.f) {
            Ok(t) => match asg.implies([1; 5], t.p, lt.f) {
                Implication::Holds => None,
                other => Some(format!("tile angle sum is {other:?} rather than {t}")),
            },
            Err(e) => Some(e.to_string()),
        };
        checks.push(check("tile-sum", tile, "each tile sums to (3 + 4/f)π"));
    }
    VerifyReport::from_checks(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use AngleLabel::*;

    #[test]
    fn protos_are_consistent() {
        for kind in ProtoKind::ALL {
            let p = PentagonProto::new(kind);
            for i in 0..5 {
                assert_eq!(p.corners[i].ccw_edge, p.corners[(i + 1) % 5].cw_edge, "{kind}");
            }
            assert_eq!(p.edge_counts(), kind.combination().counts(), "{kind}");
            let labels: BTreeSet<_> = p.corners.iter().map(|c| c.angle).collect();
            assert_eq!(labels.len(), 5);
        }
    }

    fn edges_of(p: &PentagonProto, a: AngleLabel) -> BTreeSet<EdgeLabel> {
        let c = p.corner(a);
        [c.cw_edge, c.ccw_edge].into_iter().collect()
    }

    #[test]
    fn a3bc_angle_naming() {
        use EdgeLabel::*;
        let p = PentagonProto::new(ProtoKind::A3BC);
        assert_eq!(edges_of(&p, Alpha), BTreeSet::from([B, C]));
        assert_eq!(edges_of(&p, Beta), BTreeSet::from([A, B]));
        assert_eq!(edges_of(&p, Gamma), BTreeSet::from([A, C]));
        assert_eq!(edges_of(&p, Delta), BTreeSet::from([A]));
        assert_eq!(edges_of(&p, Epsilon), BTreeSet::from([A]));
        // δ sits next to β and ε next to γ.
        let (pb, pd, pe, pg) = (p.position(Beta), p.position(Delta), p.position(Epsilon), p.position(Gamma));
        assert_eq!((pb + 1) % 5, pd);
        assert_eq!((pe + 1) % 5, pg);
    }

    #[test]
    fn a2b2c_angle_naming() {
        use EdgeLabel::*;
        let adj = PentagonProto::new(ProtoKind::A2B2CAdjacent);
        assert_eq!(edges_of(&adj, Alpha), BTreeSet::from([A, B]));
        assert_eq!(edges_of(&adj, Beta), BTreeSet::from([A]));
        assert_eq!(edges_of(&adj, Gamma), BTreeSet::from([B]));
        assert_eq!(edges_of(&adj, Delta), BTreeSet::from([A, C]));
        assert_eq!(edges_of(&adj, Epsilon), BTreeSet::from([B, C]));
        let alt = PentagonProto::new(ProtoKind::A2B2CAlternating);
        for a in [Alpha, Beta, Gamma] {
            assert_eq!(edges_of(&alt, a), BTreeSet::from([A, B]));
        }
        assert_eq!(edges_of(&alt, Delta), BTreeSet::from([B, C]));
        assert_eq!(edges_of(&alt, Epsilon), BTreeSet::from([A, C]));
    }

    #[test]
    fn admissible_counts() {
        assert_eq!(admissible_protos(EdgeCombination::A2B2C).len(), 2);
        assert_eq!(admissible_protos(EdgeCombination::A3BC).len(), 1);
        assert_eq!(admissible_protos(EdgeCombination::A5).len(), 1);
        // b and c are adjacent in the a³bc arrangement.
        let p = admissible_protos(EdgeCombination::A3BC)[0];
        assert!(p.corners.iter().any(|c| {
            matches!((c.cw_edge, c.ccw_edge), (EdgeLabel::B, EdgeLabel::C) | (EdgeLabel::C, EdgeLabel::B))
        }));
    }

    #[test]
    fn angle_sum_values() {
        assert_eq!(total_angle_sum(12).unwrap().p, r(10, 3));
        assert_eq!(total_angle_sum(48).unwrap().p, r(37, 12));
        assert!(total_angle_sum(13).is_err());
        assert!(total_angle_sum(10).is_err());
        let mut last = total_angle_sum(12).unwrap().p;
        for f in (14..400).step_by(2) {
            let v = total_angle_sum(f).unwrap().p;
            assert!(v < last && v > Rational64::from_integer(3));
            last = v;
        }
    }

    #[test]
    fn expr_display() {
        assert_eq!(AngleExpr::frac(5, 6, -4, 1).to_string(), "(5/6 - 4/f)π");
        assert_eq!(AngleExpr::frac(1, 2, 0, 1).to_string(), "1/2π");
    }

    #[test]
    fn implication_with_relation() {
        let rel = Relation {
            coeffs: [r(1, 1), r(0, 1), r(0, 1), r(1, 1), r(1, 1)],
            rhs: AngleExpr::constant(r(2, 1)),
        };
        let asg = AngleAssignment::partial(
            [None, Some(AngleExpr::frac(2, 3, 0, 1)), Some(AngleExpr::frac(2, 3, 0, 1)), None, None],
            vec![rel],
        );
        assert_eq!(asg.implies([1, 0, 0, 1, 1], r(2, 1), 12), Implication::Holds);
        assert_eq!(asg.implies([0, 3, 0, 0, 0], r(2, 1), 12), Implication::Holds);
        assert_eq!(asg.implies([0, 2, 0, 0, 0], r(2, 1), 12), Implication::Fails);
        assert_eq!(asg.implies([2, 0, 0, 0, 0], r(2, 1), 12), Implication::Undetermined);
        assert_eq!(asg.implies([1, 1, 1, 1, 1], r(10, 3), 12), Implication::Holds);
    }

    #[test]
    fn combo_syntax_round_trip() {
        for s in ["ab2", "d3", "g2d", "a4", "de3", "e5"] {
            let c: VertexCombo = s.parse().unwrap();
            assert_eq!(c.ascii(), s);
        }
        assert_eq!("a.b2".parse::<VertexCombo>().unwrap(), "ab2".parse().unwrap());
        assert_eq!("αβ²".parse::<VertexCombo>().unwrap(), "ab2".parse().unwrap());
        assert_eq!("ab2".parse::<VertexCombo>().unwrap().to_string(), "αβ²");
        assert!("x2".parse::<VertexCombo>().is_err());
        assert!("".parse::<VertexCombo>().is_err());
    }

    #[test]
    fn proto_kind_names() {
        for k in ProtoKind::ALL {
            assert_eq!(k.name().parse::<ProtoKind>().unwrap(), k);
        }
        assert_eq!("a³bc".parse::<EdgeCombination>().unwrap(), EdgeCombination::A3BC);
    }
}
