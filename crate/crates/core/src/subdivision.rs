//! Pentagonal and double pentagonal subdivision as map rewrites.
//!
//! Both constructions work on any valid oriented sphere map. Labeling with
//! a prototype and exact angles needs a regular source (every face an
//! m-gon, every vertex of degree n).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::map::{validate_map, CombMap, Dart, FaceRole, VertexRole};
use crate::pentagon::{
    AngleAssignment, AngleExpr, LabeledTiling, PentagonProto, Placement, ProtoKind, Relation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Pentagonal,
    Double,
}

impl FromStr for Construction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pentagonal" => Ok(Construction::Pentagonal),
            "double" => Ok(Construction::Double),
            _ => Err(Error::Syntax { input: s.into(), reason: "expected pentagonal or double".into() }),
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::Pentagonal => "pentagonal",
            Construction::Double => "double",
        })
    }
}

/// Which pair of opposite quad sides the cut joins. With `Ccw` every quad
/// `v, m_e, c_f, m_e'` is cut between its first and third sides; with `Cw`
/// between its second and fourth.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    #[default]
    Ccw,
    Cw,
}

impl FromStr for Chirality {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ccw" => Ok(Chirality::Ccw),
            "cw" => Ok(Chirality::Cw),
            _ => Err(Error::Syntax { input: s.into(), reason: "expected ccw or cw".into() }),
        }
    }
}

/// Whether a quad side joins an old vertex or a face center to a midpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SideKind {
    VertexMidpoint,
    CenterMidpoint,
}

/// Where a vertex of the output comes from in the source map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VertexSource {
    OldVertex { vertex: usize },
    Center { face: usize },
    /// The edge vertex nearest the origin of `dart`; it is the first vertex
    /// of that edge with respect to the face of `dart`.
    EdgeVertex { dart: Dart },
    Midpoint { edge: usize },
    /// Split vertex on the side from the origin of `dart` (vertex-midpoint
    /// sides) or from the center of the face of `dart` (center-midpoint
    /// sides) to the midpoint of the edge of `dart`.
    Split { side: SideKind, dart: Dart },
}

impl VertexSource {
    pub fn role(&self) -> VertexRole {
        match self {
            VertexSource::OldVertex { .. } => VertexRole::OldVertex,
            VertexSource::Center { .. } => VertexRole::Center,
            VertexSource::EdgeVertex { .. } => VertexRole::EdgeVertex,
            VertexSource::Midpoint { .. } => VertexRole::Midpoint,
            VertexSource::Split { .. } => VertexRole::Split,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FaceSource {
    /// Pentagon `corner` of a subdivided source face, bounded by `dart`
    /// and its successor.
    Sector { face: usize, corner: usize, dart: Dart },
    /// Half of the overlay quad at the corner where `dart` leaves its
    /// origin inside its face.
    Half { face: usize, vertex: usize, dart: Dart, center_side: bool },
}

impl FaceSource {
    pub fn role(&self) -> FaceRole {
        match self {
            FaceSource::Sector { .. } => FaceRole::Sector,
            FaceSource::Half { center_side: true, .. } => FaceRole::CenterHalf,
            FaceSource::Half { center_side: false, .. } => FaceRole::VertexHalf,
        }
    }
}

/// One overlay quadrilateral of the double construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quad {
    pub dart: Dart,
    /// Output vertex ids of `v, m_e, c_f, m_e'`.
    pub corners: [usize; 4],
    /// Split vertices on the sides `v-m_e, m_e-c_f, c_f-m_e', m_e'-v`.
    pub splits: [usize; 4],
    /// Indices into `splits` of the two cut endpoints.
    pub cut: [usize; 2],
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub vertices: Vec<VertexSource>,
    pub faces: Vec<FaceSource>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub quads: Vec<Quad>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubdivisionOutput {
    pub map: CombMap,
    pub construction: Construction,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chirality: Option<Chirality>,
    pub provenance: Provenance,
    /// Proto placement `(rot, flip)` of each face for the canonical labeling.
    pub orientation: Vec<(u8, bool)>,
    /// Common face size of the source, if it has one.
    pub source_face_size: Option<usize>,
    /// Common vertex degree of the source, if it has one.
    pub source_vertex_degree: Option<usize>,
}

fn common<I: Iterator<Item = usize>>(mut it: I) -> Option<usize> {
    let first = it.next()?;
    it.all(|x| x == first).then_some(first)
}

fn ensure_valid(m: &CombMap) -> Result<()> {
    let report = validate_map(m);
    if report.pass {
        Ok(())
    } else {
        Err(Error::InvalidMap(report.failures.join("; ")))
    }
}

/// Builds the output map from face cycles over provisional vertex ids and
/// moves the vertex sources onto the map's own vertex numbering.
fn assemble(
    m: &CombMap,
    construction: Construction,
    chirality: Option<Chirality>,
    faces: Vec<Vec<usize>>,
    sources: Vec<VertexSource>,
    face_sources: Vec<FaceSource>,
    orientation: Vec<(u8, bool)>,
    mut quads: Vec<Quad>,
) -> Result<SubdivisionOutput> {
    let (map, translate) = CombMap::from_faces(&faces)?;
    let mut vertices = vec![VertexSource::OldVertex { vertex: 0 }; map.num_vertices()];
    for (u, s) in sources.into_iter().enumerate() {
        vertices[translate[u]] = s;
    }
    for q in &mut quads {
        q.corners = q.corners.map(|u| translate[u]);
        q.splits = q.splits.map(|u| translate[u]);
    }
    let vertex_role: BTreeMap<usize, VertexRole> =
        vertices.iter().enumerate().map(|(v, s)| (v, s.role())).collect();
    let face_role: BTreeMap<usize, FaceRole> =
        face_sources.iter().enumerate().map(|(f, s)| (f, s.role())).collect();
    Ok(SubdivisionOutput {
        map: map.with_roles(vertex_role, face_role),
        construction,
        chirality,
        provenance: Provenance { vertices, faces: face_sources, quads },
        orientation,
        source_face_size: common((0..m.num_faces()).map(|f| m.face_degree(f))),
        source_vertex_degree: common((0..m.num_vertices()).map(|v| m.vertex_degree(v))),
    })
}

/// Adds two vertices to every edge and a center to every face, and joins
/// each center to the first vertex of every boundary edge.
pub fn pentagonal_subdivision(m: &CombMap) -> Result<SubdivisionOutput> {
    ensure_valid(m)?;
    let (nv, nf) = (m.num_vertices(), m.num_faces());
    let center = |f: usize| nv + f;
    let edge_vertex = |d: Dart| nv + nf + d;

    let mut sources: Vec<VertexSource> = (0..nv).map(|vertex| VertexSource::OldVertex { vertex }).collect();
    sources.extend((0..nf).map(|face| VertexSource::Center { face }));
    sources.extend((0..m.num_darts()).map(|dart| VertexSource::EdgeVertex { dart }));

    let mut faces = Vec::new();
    let mut face_sources = Vec::new();
    for f in 0..nf {
        for (corner, d) in m.face_darts(f).into_iter().enumerate() {
            let u = edge_vertex(d);
            let w = edge_vertex(m.twin(d));
            let u_next = edge_vertex(m.next(d));
            faces.push(vec![center(f), u, w, m.target(d), u_next]);
            face_sources.push(FaceSource::Sector { face: f, corner, dart: d });
        }
    }
    let orientation = vec![(1, false); faces.len()];
    assemble(m, Construction::Pentagonal, None, faces, sources, face_sources, orientation, Vec::new())
}

/// Overlays the map with its dual into one quad per corner, puts a split
/// vertex on every quad side, and cuts every quad into two pentagons.
pub fn double_pentagonal_subdivision(m: &CombMap, chirality: Chirality) -> Result<SubdivisionOutput> {
    ensure_valid(m)?;
    let (nv, ne, nf, nd) = (m.num_vertices(), m.num_edges(), m.num_faces(), m.num_darts());
    let center = |f: usize| nv + f;
    let midpoint = |e: usize| nv + nf + e;
    let split_vm = |d: Dart| nv + nf + ne + d;
    let split_cm = |d: Dart| nv + nf + ne + nd + d;

    let mut sources: Vec<VertexSource> = (0..nv).map(|vertex| VertexSource::OldVertex { vertex }).collect();
    sources.extend((0..nf).map(|face| VertexSource::Center { face }));
    sources.extend((0..ne).map(|edge| VertexSource::Midpoint { edge }));
    sources.extend((0..nd).map(|dart| VertexSource::Split { side: SideKind::VertexMidpoint, dart }));
    sources.extend((0..nd).map(|dart| VertexSource::Split { side: SideKind::CenterMidpoint, dart }));

    let mut faces = Vec::new();
    let mut face_sources = Vec::new();
    let mut orientation = Vec::new();
    let mut quads = Vec::new();
    for d in 0..nd {
        let p = m.prev(d);
        let (v, f) = (m.origin(d), m.face(d));
        let (me, c, mp) = (midpoint(m.edge(d)), center(f), midpoint(m.edge(p)));
        let s = [split_vm(d), split_cm(d), split_cm(p), split_vm(m.twin(p))];
        let (center_half, vertex_half, cut) = match chirality {
            Chirality::Ccw => (
                (vec![s[0], me, s[1], c, s[2]], (4, false)),
                (vec![s[2], mp, s[3], v, s[0]], (1, true)),
                [0, 2],
            ),
            Chirality::Cw => (
                (vec![s[1], c, s[2], mp, s[3]], (3, true)),
                (vec![s[3], v, s[0], me, s[1]], (2, false)),
                [1, 3],
            ),
        };
        for ((cycle, o), center_side) in [(center_half, true), (vertex_half, false)] {
            faces.push(cycle);
            orientation.push(o);
            face_sources.push(FaceSource::Half { face: f, vertex: v, dart: d, center_side });
        }
        quads.push(Quad { dart: d, corners: [v, me, c, mp], splits: s, cut });
    }
    assemble(m, Construction::Double, Some(chirality), faces, sources, face_sources, orientation, quads)
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

/// Labels a subdivision with its prototype and angle values.
///
/// Pentagonal: proto a²b²c-adjacent, β = 2π/m at centers, γ = 2π/n at old
/// vertices, and α + δ + ε = 2π at edge vertices. Double: proto a³bc,
/// α = π/2, β = (1 - 1/n)π, γ = (1 - 1/m)π, δ = 2π/m, ε = 2π/n.
pub fn label_subdivision(
    out: &SubdivisionOutput,
    kind: Construction,
    n: usize,
) -> Result<(LabeledTiling, AngleAssignment)> {
    if out.construction != kind {
        return Err(Error::MismatchedKind(format!(
            "asked to label a {kind} subdivision but the output is {}",
            out.construction
        )));
    }
    let degree = out.source_vertex_degree.ok_or_else(|| {
        Error::MismatchedKind("source vertices do not share one degree".into())
    })?;
    if degree != n {
        return Err(Error::MismatchedKind(format!("source vertices have degree {degree}, not {n}")));
    }
    let m = out.source_face_size.ok_or_else(|| Error::MismatchedKind("source faces differ in size".into()))?;
    let (mi, ni) = (m as i64, n as i64);
    let (proto, asg) = match kind {
        Construction::Pentagonal => {
            let relation = Relation {
                coeffs: [r(1, 1), r(0, 1), r(0, 1), r(1, 1), r(1, 1)],
                rhs: AngleExpr::constant(r(2, 1)),
            };
            let asg = AngleAssignment::partial(
                [
                    None,
                    Some(AngleExpr::constant(r(2, mi))),
                    Some(AngleExpr::constant(r(2, ni))),
                    None,
                    None,
                ],
                vec![relation],
            );
            (ProtoKind::A2B2CAdjacent, asg)
        }
        Construction::Double => {
            let asg = AngleAssignment::full([
                AngleExpr::constant(r(1, 2)),
                AngleExpr::constant(r(ni - 1, ni)),
                AngleExpr::constant(r(mi - 1, mi)),
                AngleExpr::constant(r(2, mi)),
                AngleExpr::constant(r(2, ni)),
            ]);
            (ProtoKind::A3BC, asg)
        }
    };
    let placement = out
        .orientation
        .iter()
        .enumerate()
        .map(|(face, &(rot, flip))| Placement { face, anchor: out.map.face_dart(face), rot, flip })
        .collect();
    let f = out.map.num_faces() as u64;
    let lt = LabeledTiling::new(out.map.clone(), PentagonProto::new(proto), placement, f)?;
    Ok((lt, asg))
}
