//! Vertex words and adjacent angle deduction.
//!
//! A vertex word lists the angles around a vertex with the edge between
//! each pair of neighbours, e.g. `|γ—γ|δ|`. Edge markers are `|` for `a`,
//! `‖` (or `||`) for `b` and `—` (or `-`) for `c`; angles are Greek letters
//! or `a b g d e`. A word ending in `···` (or `...`) is open: only part of
//! the vertex is known. Without it the word is closed and its first and
//! last edge are the same edge.
//!
//! Deduction replaces every angle by the two angles of the same tile across
//! its two edges, read in the same direction around the vertex. The result
//! is a [`Layer`], written with the pair in place of the angle:
//! `‖β|β‖γ|··· → ‖δα|αδ‖αε|···`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pentagon::{AngleLabel, EdgeLabel, PentagonProto, VertexCombo};

/// Something that can sit between two edges of a word.
pub trait Item: Copy + Ord + fmt::Debug {
    /// The item as seen when the word is read backwards.
    fn mirrored(self) -> Self;
    fn write_greek(&self, out: &mut String);
    fn write_ascii(&self, out: &mut String);
}

impl Item for AngleLabel {
    fn mirrored(self) -> Self {
        self
    }
    fn write_greek(&self, out: &mut String) {
        out.push(self.greek());
    }
    fn write_ascii(&self, out: &mut String) {
        out.push(self.ascii());
    }
}

impl Item for (AngleLabel, AngleLabel) {
    fn mirrored(self) -> Self {
        (self.1, self.0)
    }
    fn write_greek(&self, out: &mut String) {
        out.push(self.0.greek());
        out.push(self.1.greek());
    }
    fn write_ascii(&self, out: &mut String) {
        out.push(self.0.ascii());
        out.push(self.1.ascii());
    }
}

/// Items separated by edges: `edges[i]` is left of `items[i]` and
/// `edges[i + 1]` right of it. Closed words repeat the first edge at the end.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word<I> {
    edges: Vec<EdgeLabel>,
    items: Vec<I>,
    closed: bool,
}

pub type VertexWord = Word<AngleLabel>;
pub type Layer = Word<(AngleLabel, AngleLabel)>;

impl<I: Item> Word<I> {
    pub fn new(edges: Vec<EdgeLabel>, items: Vec<I>, closed: bool) -> Result<Self> {
        if items.is_empty() || edges.len() != items.len() + 1 {
            return Err(Error::InconsistentWord(format!(
                "{} edges cannot separate {} angles",
                edges.len(),
                items.len()
            )));
        }
        if closed && edges[0] != edges[items.len()] {
            return Err(Error::InconsistentWord("a closed word must start and end on the same edge".into()));
        }
        Ok(Word { edges, items, closed })
    }

    pub fn edges(&self) -> &[EdgeLabel] {
        &self.edges
    }
    pub fn items(&self) -> &[I] {
        &self.items
    }
    pub fn is_closed(&self) -> bool {
        self.closed
    }
    pub fn len(&self) -> usize {
        self.items.len()
    }
    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// The word read in the opposite direction.
    pub fn reversed(&self) -> Self {
        Word {
            edges: self.edges.iter().rev().copied().collect(),
            items: self.items.iter().rev().map(|i| i.mirrored()).collect(),
            closed: self.closed,
        }
    }

    /// A closed word started at item `k`.
    pub fn rotated(&self, k: usize) -> Self {
        assert!(self.closed, "only closed words can be rotated");
        let n = self.items.len();
        let items = (0..n).map(|i| self.items[(i + k) % n]).collect();
        let edges = (0..=n).map(|i| self.edges[(i + k) % n]).collect();
        Word { edges, items, closed: true }
    }

    /// Smallest presentation over rotations (closed words) and reflection.
    pub fn canonical(&self) -> Self {
        let mut best = self.clone().min(self.reversed());
        if self.closed {
            let rev = self.reversed();
            for k in 1..self.items.len() {
                best = best.min(self.rotated(k)).min(rev.rotated(k));
            }
        }
        best
    }

    fn render(&self, ascii: bool) -> String {
        let mut s = String::new();
        let marker = |e: EdgeLabel| if ascii { e.ascii_marker() } else { e.marker() };
        s.push_str(marker(self.edges[0]));
        for (i, item) in self.items.iter().enumerate() {
            if ascii {
                item.write_ascii(&mut s);
            } else {
                item.write_greek(&mut s);
            }
            s.push_str(marker(self.edges[i + 1]));
        }
        if !self.closed {
            s.push_str(if ascii { "..." } else { "···" });
        }
        s
    }

    /// Plain ASCII form, e.g. `||b|b||g|...`.
    pub fn ascii(&self) -> String {
        self.render(true)
    }
}

impl<I: Item> fmt::Display for Word<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl VertexWord {
    pub fn combo(&self) -> VertexCombo {
        let mut n = [0u32; 5];
        for a in &self.items {
            n[a.index()] += 1;
        }
        VertexCombo(n)
    }

    /// Adjacent pairs `θ E ρ` at the vertex, including the wrap-around pair
    /// of a closed word.
    pub fn junctions(&self) -> Vec<Junction> {
        junctions(&self.edges, &self.items, self.closed, |a| (*a, *a))
    }
}

impl Layer {
    /// Pairs of angles from neighbouring tiles that meet across an edge of
    /// the original vertex. Each is the start of a new vertex `θ E ρ ···`.
    pub fn junctions(&self) -> Vec<Junction> {
        junctions(&self.edges, &self.items, self.closed, |p| *p)
    }
}

fn junctions<I>(
    edges: &[EdgeLabel],
    items: &[I],
    closed: bool,
    ends: impl Fn(&I) -> (AngleLabel, AngleLabel),
) -> Vec<Junction> {
    let n = items.len();
    let count = if closed { n } else { n - 1 };
    (0..count)
        .map(|i| Junction { left: ends(&items[i]).1, edge: edges[i + 1], right: ends(&items[(i + 1) % n]).0 })
        .collect()
}

/// Two angles adjacent across an edge at a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Junction {
    pub left: AngleLabel,
    pub edge: EdgeLabel,
    pub right: AngleLabel,
}

impl Junction {
    /// The same junction with its angles in label order.
    pub fn unordered(self) -> Junction {
        if self.left <= self.right {
            self
        } else {
            Junction { left: self.right, edge: self.edge, right: self.left }
        }
    }
}

impl fmt::Display for Junction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.left.greek(), self.edge.marker(), self.right.greek())
    }
}

impl FromStr for Junction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (edges, groups, closed) = tokenize(&format!("|{s}|..."))?;
        match (groups.as_slice(), closed) {
            ([l], false) if l.len() == 1 && edges.len() == 2 => Err(Error::Syntax {
                input: s.into(),
                reason: "a junction needs two angles".into(),
            }),
            ([l, r], false) if l.len() == 1 && r.len() == 1 => {
                Ok(Junction { left: l[0], edge: edges[1], right: r[0] })
            }
            _ => Err(Error::Syntax { input: s.into(), reason: "expected angle, edge, angle".into() }),
        }
    }
}

type Tokens = (Vec<EdgeLabel>, Vec<Vec<AngleLabel>>, bool);

fn tokenize(s: &str) -> Result<Tokens> {
    let err = |reason: &str| Error::Syntax { input: s.into(), reason: reason.into() };
    let mut body = s.trim().to_string();
    let mut closed = true;
    for tail in ["···", "...", "…", "⋯", "⋅⋅⋅"] {
        if let Some(rest) = body.strip_suffix(tail) {
            body = rest.trim_end().to_string();
            closed = false;
            break;
        }
    }
    let chars: Vec<char> = body.chars().filter(|c| !c.is_whitespace()).collect();
    let mut edges = Vec::new();
    let mut groups: Vec<Vec<AngleLabel>> = Vec::new();
    let mut after_edge = false;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let edge = match c {
            '|' if chars.get(i + 1) == Some(&'|') => {
                i += 1;
                Some(EdgeLabel::B)
            }
            '|' => Some(EdgeLabel::A),
            '‖' | '∥' => Some(EdgeLabel::B),
            '-' | '—' | '–' => Some(EdgeLabel::C),
            _ => None,
        };
        i += 1;
        match edge {
            Some(e) => {
                if after_edge {
                    return Err(err("two edges in a row"));
                }
                edges.push(e);
                after_edge = true;
            }
            None => {
                let a = AngleLabel::from_char(c).ok_or_else(|| err("unknown character"))?;
                if edges.is_empty() {
                    return Err(err("word must start with an edge"));
                }
                if after_edge {
                    groups.push(Vec::new());
                }
                groups.last_mut().expect("a group is open").push(a);
                after_edge = false;
            }
        }
    }
    if groups.is_empty() {
        return Err(err("no angles"));
    }
    if !after_edge {
        return Err(err("word must end with an edge"));
    }
    Ok((edges, groups, closed))
}

impl FromStr for VertexWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (edges, groups, closed) = tokenize(s)?;
        if groups.iter().any(|g| g.len() != 1) {
            return Err(Error::Syntax { input: s.into(), reason: "consecutive angles need an edge between them".into() });
        }
        Word::new(edges, groups.into_iter().map(|g| g[0]).collect(), closed)
    }
}

impl FromStr for Layer {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (edges, groups, closed) = tokenize(s)?;
        if groups.iter().any(|g| g.len() != 2) {
            return Err(Error::Syntax { input: s.into(), reason: "each layer entry is a pair of angles".into() });
        }
        Word::new(edges, groups.into_iter().map(|g| (g[0], g[1])).collect(), closed)
    }
}

/// Parses a vertex word, e.g. `"||b|b||g|..."` or `"‖β|β‖γ|···"`.
pub fn parse_word(s: &str) -> Result<VertexWord> {
    s.parse()
}

/// The two angles next to `angle` in the pentagon: the one across its
/// clockwise edge, then the one across its counter-clockwise edge.
pub fn proto_neighbors(proto: &PentagonProto, angle: AngleLabel) -> (AngleLabel, AngleLabel) {
    let i = proto.position(angle);
    (proto.corners[(i + 4) % 5].angle, proto.corners[(i + 1) % 5].angle)
}

/// All ways to seat `angle` between a `left` and a `right` edge, as the
/// pair of neighbours across those edges.
pub fn orientations(
    proto: &PentagonProto,
    angle: AngleLabel,
    left: EdgeLabel,
    right: EdgeLabel,
) -> Vec<(AngleLabel, AngleLabel)> {
    let c = proto.corner(angle);
    let (cw_nbr, ccw_nbr) = proto_neighbors(proto, angle);
    let mut out = Vec::new();
    if (c.cw_edge, c.ccw_edge) == (left, right) {
        out.push((cw_nbr, ccw_nbr));
    }
    if (c.ccw_edge, c.cw_edge) == (left, right) && !out.contains(&(ccw_nbr, cw_nbr)) {
        out.push((ccw_nbr, cw_nbr));
    }
    out
}

/// Every adjacent layer compatible with the edge labels of `w`.
pub fn deduce_adjacent_layer(w: &VertexWord, proto: &PentagonProto) -> Result<BTreeSet<Layer>> {
    let mut choices = Vec::with_capacity(w.len());
    for (i, &a) in w.items.iter().enumerate() {
        let opts = orientations(proto, a, w.edges[i], w.edges[i + 1]);
        if opts.is_empty() {
            return Err(Error::InconsistentWord(format!(
                "{a} cannot sit between {} and {} in {}",
                w.edges[i].marker(),
                w.edges[i + 1].marker(),
                proto.kind
            )));
        }
        choices.push(opts);
    }
    let mut out = BTreeSet::new();
    let mut pick = vec![0usize; choices.len()];
    loop {
        let items = pick.iter().zip(&choices).map(|(&k, c)| c[k]).collect();
        out.insert(Word { edges: w.edges.clone(), items, closed: w.closed });
        // Odometer over the choice vector.
        let mut i = 0;
        loop {
            if i == pick.len() {
                return Ok(out);
            }
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// Canonical forms of a set of layers, for comparing deductions up to
/// rotation and reflection.
pub fn canonical_set(layers: &BTreeSet<Layer>) -> BTreeSet<Layer> {
    layers.iter().map(Word::canonical).collect()
}

/// Whether every circular deduction of `γ^k` has as many `α E α` as
/// `ε E ε` junctions, where `E` is the edge on both sides of `γ`.
pub fn check_gamma_parity(k: usize, proto: &PentagonProto) -> Result<bool> {
    let c = proto.corner(AngleLabel::Gamma);
    if c.cw_edge != c.ccw_edge {
        return Err(Error::InconsistentWord(format!("γ is not bounded by equal edges in {}", proto.kind)));
    }
    let w = Word::new(vec![c.cw_edge; k + 1], vec![AngleLabel::Gamma; k], true)?;
    let layers = deduce_adjacent_layer(&w, proto)?;
    Ok(layers.iter().all(|l| {
        let js = l.junctions();
        let count = |a| js.iter().filter(|j| j.left == a && j.right == a).count();
        count(AngleLabel::Alpha) == count(AngleLabel::Epsilon)
    }))
}

/// All closed words realizing a combination, up to rotation and reflection.
pub fn arrangements(proto: &PentagonProto, combo: &VertexCombo) -> BTreeSet<VertexWord> {
    let mut out = BTreeSet::new();
    let n = combo.degree() as usize;
    if n == 0 {
        return out;
    }
    let mut remaining = combo.0;
    let mut items = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n + 1);
    arrange(proto, &mut remaining, &mut items, &mut edges, n, &mut |w| {
        out.insert(w.canonical());
        true
    });
    out
}

/// Whether at least one closed word realizes the combination.
pub fn has_arrangement(proto: &PentagonProto, combo: &VertexCombo) -> bool {
    let n = combo.degree() as usize;
    if n == 0 {
        return false;
    }
    let mut found = false;
    let mut remaining = combo.0;
    arrange(proto, &mut remaining, &mut Vec::new(), &mut Vec::new(), n, &mut |_| {
        found = true;
        false
    });
    found
}

/// Backtracking over angle order and orientation. `visit` returns whether
/// to keep searching.
fn arrange(
    proto: &PentagonProto,
    remaining: &mut [u32; 5],
    items: &mut Vec<AngleLabel>,
    edges: &mut Vec<EdgeLabel>,
    n: usize,
    visit: &mut dyn FnMut(VertexWord) -> bool,
) -> bool {
    if items.len() == n {
        if edges[0] == edges[n] {
            return visit(Word { edges: edges.clone(), items: items.clone(), closed: true });
        }
        return true;
    }
    for a in AngleLabel::ALL {
        if remaining[a.index()] == 0 {
            continue;
        }
        // Rotations: the first seat always holds the smallest label present.
        if items.is_empty() && AngleLabel::ALL.iter().any(|b| *b < a && remaining[b.index()] > 0) {
            continue;
        }
        let c = proto.corner(a);
        let mut sides = vec![(c.cw_edge, c.ccw_edge)];
        if c.cw_edge != c.ccw_edge {
            sides.push((c.ccw_edge, c.cw_edge));
        }
        for (l, r) in sides {
            if let Some(&last) = edges.last() {
                if last != l {
                    continue;
                }
            }
            let fresh = edges.is_empty();
            if fresh {
                edges.push(l);
            }
            edges.push(r);
            items.push(a);
            remaining[a.index()] -= 1;
            let go_on = arrange(proto, remaining, items, edges, n, visit);
            remaining[a.index()] += 1;
            items.pop();
            edges.pop();
            if fresh {
                edges.pop();
            }
            if !go_on {
                return false;
            }
        }
    }
    true
}

/// Junctions, in label order, that occur in some arrangement of the combos.
pub fn realizable_junctions<'a>(
    proto: &PentagonProto,
    combos: impl IntoIterator<Item = &'a VertexCombo>,
) -> BTreeSet<Junction> {
    combos
        .into_iter()
        .flat_map(|c| arrangements(proto, c))
        .flat_map(|w| w.junctions())
        .map(Junction::unordered)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pentagon::ProtoKind;
    use AngleLabel::*;

    fn proto(k: ProtoKind) -> PentagonProto {
        PentagonProto::new(k)
    }

    fn layers(word: &str, k: ProtoKind) -> BTreeSet<String> {
        let w: VertexWord = word.parse().unwrap();
        deduce_adjacent_layer(&w, &proto(k)).unwrap().iter().map(|l| l.to_string()).collect()
    }

    #[test]
    fn neighbours() {
        assert_eq!(proto_neighbors(&proto(ProtoKind::A2B2CAdjacent), Beta), (Alpha, Delta));
        let (x, y) = proto_neighbors(&proto(ProtoKind::A3BC), Gamma);
        assert_eq!(BTreeSet::from([x, y]), BTreeSet::from([Alpha, Epsilon]));
        let p = proto(ProtoKind::A3BC);
        let i = p.position(Gamma);
        let across_c = if p.corners[i].cw_edge == EdgeLabel::C { x } else { y };
        assert_eq!(across_c, Alpha);
        let a5 = proto(ProtoKind::A5);
        for a in AngleLabel::ALL {
            let (x, y) = proto_neighbors(&a5, a);
            let i = a5.position(a);
            assert_eq!(x, a5.corners[(i + 4) % 5].angle);
            assert_eq!(y, a5.corners[(i + 1) % 5].angle);
        }
    }

    #[test]
    fn alternating_deduction() {
        assert_eq!(layers("‖β|β‖γ|···", ProtoKind::A2B2CAlternating), BTreeSet::from(["‖δα|αδ‖αε|···".to_string()]));
    }

    #[test]
    fn other_displayed_deductions() {
        assert_eq!(layers("|α‖ε—δ|···", ProtoKind::A2B2CAdjacent), BTreeSet::from(["|βγ‖γδ—εβ|···".to_string()]));
        assert_eq!(layers("‖α—α‖β|···", ProtoKind::A3BC), BTreeSet::from(["‖βγ—γβ‖αδ|···".to_string()]));
    }

    #[test]
    fn gamma_delta_has_two_outcomes() {
        let got = layers("—γ|δ|···", ProtoKind::A3BC);
        assert_eq!(got, BTreeSet::from(["—αε|βε|···".to_string(), "—αε|εβ|···".to_string()]));
    }

    #[test]
    fn flipping_reverses_deductions() {
        let p = proto(ProtoKind::A3BC);
        for word in ["—γ|δ|...", "|g-g|d|", "||a-a||b|..."] {
            let w: VertexWord = word.parse().unwrap();
            let forward: BTreeSet<Layer> = deduce_adjacent_layer(&w, &p).unwrap().iter().map(|l| l.reversed()).collect();
            let backward = deduce_adjacent_layer(&w.reversed(), &p).unwrap();
            assert_eq!(forward, backward, "{word}");
        }
    }

    #[test]
    fn circular_presentations_agree() {
        let p = proto(ProtoKind::A3BC);
        let sets: Vec<BTreeSet<Layer>> = ["|γ—γ|δ|", "|δ|γ—γ|", "—γ|δ|γ—"]
            .iter()
            .map(|s| canonical_set(&deduce_adjacent_layer(&s.parse().unwrap(), &p).unwrap()))
            .collect();
        assert_eq!(sets[0], sets[1]);
        assert_eq!(sets[0], sets[2]);
        // The two outcomes are mirror images of each other.
        assert_eq!(deduce_adjacent_layer(&"|γ—γ|δ|".parse().unwrap(), &p).unwrap().len(), 2);
        assert_eq!(sets[0].len(), 1);
    }

    #[test]
    fn inconsistent_word_is_rejected() {
        let w: VertexWord = "‖δ|...".parse().unwrap();
        assert!(matches!(deduce_adjacent_layer(&w, &proto(ProtoKind::A3BC)), Err(Error::InconsistentWord(_))));
    }

    #[test]
    fn parser_round_trip() {
        for s in ["‖β|β‖γ|···", "|γ—γ|δ|", "—α|···"] {
            let w: VertexWord = s.parse().unwrap();
            assert_eq!(w.to_string(), s);
            assert_eq!(w.ascii().parse::<VertexWord>().unwrap(), w);
        }
        assert_eq!("||b|b||g|...".parse::<VertexWord>().unwrap().to_string(), "‖β|β‖γ|···");
        assert!("|g|d".parse::<VertexWord>().is_err());
        assert!("|g-d-".parse::<VertexWord>().is_err(), "closed word with different end edges");
        assert!("|gd|...".parse::<VertexWord>().is_err());
        assert!("g|".parse::<VertexWord>().is_err());
        assert!("|x|".parse::<VertexWord>().is_err());
    }

    #[test]
    fn gamma_parity_small_cases() {
        let p = proto(ProtoKind::A2B2CAdjacent);
        for k in 3..=6 {
            assert!(check_gamma_parity(k, &p).unwrap());
        }
        assert!(check_gamma_parity(3, &proto(ProtoKind::A3BC)).is_err());
    }

    #[test]
    fn arrangements_of_small_combos() {
        let p = proto(ProtoKind::A3BC);
        let w: Vec<String> = arrangements(&p, &"g2d".parse().unwrap()).iter().map(|w| w.to_string()).collect();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].parse::<VertexWord>().unwrap().canonical(), "|γ—γ|δ|".parse::<VertexWord>().unwrap().canonical());
        assert!(arrangements(&p, &"gd2".parse().unwrap()).is_empty());
        assert!(has_arrangement(&p, &"a4".parse().unwrap()));
        assert!(!has_arrangement(&p, &"be3".parse().unwrap()));
    }

    #[test]
    fn junction_text() {
        let j: Junction = "β|γ".parse().unwrap();
        assert_eq!(j, Junction { left: Beta, edge: EdgeLabel::A, right: Gamma });
        assert_eq!(j.to_string(), "β|γ");
        assert_eq!("g||e".parse::<Junction>().unwrap().edge, EdgeLabel::B);
    }
}
