//! Oriented combinatorial maps on the sphere.
//!
//! A map is a set of darts `0..n` with two permutations: `twin`, a fixed-point
//! free involution pairing the two darts of an edge, and `next`, the successor
//! of a dart around its face. Faces are walked counter-clockwise as seen from
//! outside the sphere, so every face lies to the left of its darts.
//!
//! Cells are numbered by the smallest dart of their orbit: faces are orbits of
//! `next`, edges are orbits of `twin`, and vertices are orbits of
//! `d -> next(twin(d))`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Dart = usize;

/// Role of a vertex produced by a subdivision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VertexRole {
    OldVertex,
    EdgeVertex,
    Center,
    Midpoint,
    Split,
}

/// Role of a face produced by a subdivision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FaceRole {
    /// One of the m pentagons of a pentagonally subdivided m-gon.
    Sector,
    /// Half of an overlay quadrilateral that contains the face center.
    CenterHalf,
    /// Half of an overlay quadrilateral that contains the old vertex.
    VertexHalf,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub darts: usize,
    pub twin: Vec<Dart>,
    pub next: Vec<Dart>,
    #[serde(default)]
    pub vertex_role: BTreeMap<usize, VertexRole>,
    #[serde(default)]
    pub face_role: BTreeMap<usize, FaceRole>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "MapJson", try_from = "MapJson")]
pub struct CombMap {
    twin: Vec<Dart>,
    next: Vec<Dart>,
    prev: Vec<Dart>,
    vertex_of: Vec<usize>,
    face_of: Vec<usize>,
    edge_of: Vec<usize>,
    vertex_start: Vec<Dart>,
    face_start: Vec<Dart>,
    edge_start: Vec<Dart>,
    vertex_role: BTreeMap<usize, VertexRole>,
    face_role: BTreeMap<usize, FaceRole>,
}

fn inverse_permutation(p: &[usize], what: &str) -> Result<Vec<usize>> {
    let n = p.len();
    let mut inv = vec![usize::MAX; n];
    for (i, &j) in p.iter().enumerate() {
        if j >= n {
            return Err(Error::InvalidMap(format!("{what}[{i}] = {j} is out of range")));
        }
        if inv[j] != usize::MAX {
            return Err(Error::InvalidMap(format!("{what} is not a bijection (dart {j} hit twice)")));
        }
        inv[j] = i;
    }
    Ok(inv)
}

/// Numbers the cycles of the permutation `step` by their smallest element.
fn orbits(n: usize, step: impl Fn(usize) -> usize) -> (Vec<usize>, Vec<usize>) {
    let mut id = vec![usize::MAX; n];
    let mut start = Vec::new();
    for d in 0..n {
        if id[d] != usize::MAX {
            continue;
        }
        let k = start.len();
        start.push(d);
        let mut e = d;
        loop {
            id[e] = k;
            e = step(e);
            if e == d {
                break;
            }
        }
    }
    (id, start)
}

impl CombMap {
    /// Builds a map from raw permutations. Only bijectivity is enforced here;
    /// every other invariant is checked by [`validate_map`].
    pub fn from_raw(twin: Vec<Dart>, next: Vec<Dart>) -> Result<Self> {
        if twin.len() != next.len() {
            return Err(Error::InvalidMap(format!(
                "twin has {} entries but next has {}",
                twin.len(),
                next.len()
            )));
        }
        let n = twin.len();
        let prev = inverse_permutation(&next, "next")?;
        inverse_permutation(&twin, "twin")?;
        let (face_of, face_start) = orbits(n, |d| next[d]);
        let (vertex_of, vertex_start) = orbits(n, |d| next[twin[d]]);
        let (edge_of, edge_start) = orbits(n, |d| twin[d]);
        Ok(Self {
            twin,
            next,
            prev,
            vertex_of,
            face_of,
            edge_of,
            vertex_start,
            face_start,
            edge_start,
            vertex_role: BTreeMap::new(),
            face_role: BTreeMap::new(),
        })
    }

    /// Builds a map from faces given as counter-clockwise vertex cycles.
    ///
    /// Darts are numbered face by face, so face `k` of the input is face `k`
    /// of the map. Returns the map and the translation from input vertex ids
    /// (which must be exactly `0..nv`) to map vertex ids.
    pub fn from_faces(faces: &[Vec<usize>]) -> Result<(Self, Vec<usize>)> {
        let mut next = Vec::new();
        let mut origin = Vec::new();
        let mut directed: HashMap<(usize, usize), Dart> = HashMap::new();
        for (k, face) in faces.iter().enumerate() {
            if face.len() < 2 {
                return Err(Error::InvalidMap(format!("face {k} has fewer than two corners")));
            }
            let base = next.len();
            let len = face.len();
            for i in 0..len {
                let (u, w) = (face[i], face[(i + 1) % len]);
                if directed.insert((u, w), base + i).is_some() {
                    return Err(Error::InvalidMap(format!(
                        "directed edge {u}->{w} used twice (inconsistent orientation)"
                    )));
                }
                next.push(base + (i + 1) % len);
                origin.push(u);
            }
        }
        let mut twin = vec![0; next.len()];
        for (&(u, w), &d) in &directed {
            match directed.get(&(w, u)) {
                Some(&t) => twin[d] = t,
                None => {
                    return Err(Error::InvalidMap(format!("edge {u}->{w} has no opposite dart")))
                }
            }
        }
        let map = Self::from_raw(twin, next)?;
        let nv_in = origin.iter().copied().max().map_or(0, |m| m + 1);
        let mut translate = vec![usize::MAX; nv_in];
        for (d, &u) in origin.iter().enumerate() {
            let v = map.vertex_of[d];
            if translate[u] == usize::MAX {
                translate[u] = v;
            } else if translate[u] != v {
                return Err(Error::InvalidMap(format!(
                    "input vertex {u} is split into several vertex orbits"
                )));
            }
        }
        if let Some(u) = translate.iter().position(|&v| v == usize::MAX) {
            return Err(Error::InvalidMap(format!("input vertex {u} is unused")));
        }
        if map.num_vertices() != nv_in {
            return Err(Error::InvalidMap("distinct input vertices share an orbit".into()));
        }
        Ok((map, translate))
    }

    pub fn with_roles(
        mut self,
        vertex_role: BTreeMap<usize, VertexRole>,
        face_role: BTreeMap<usize, FaceRole>,
    ) -> Self {
        self.vertex_role = vertex_role;
        self.face_role = face_role;
        self
    }

    pub fn num_darts(&self) -> usize {
        self.next.len()
    }
    pub fn num_vertices(&self) -> usize {
        self.vertex_start.len()
    }
    pub fn num_edges(&self) -> usize {
        self.edge_start.len()
    }
    pub fn num_faces(&self) -> usize {
        self.face_start.len()
    }

    pub fn twin(&self, d: Dart) -> Dart {
        self.twin[d]
    }
    pub fn next(&self, d: Dart) -> Dart {
        self.next[d]
    }
    pub fn prev(&self, d: Dart) -> Dart {
        self.prev[d]
    }
    /// The vertex a dart leaves from.
    pub fn origin(&self, d: Dart) -> usize {
        self.vertex_of[d]
    }
    /// The vertex a dart points to.
    pub fn target(&self, d: Dart) -> usize {
        self.vertex_of[self.next[d]]
    }
    /// The face to the left of a dart.
    pub fn face(&self, d: Dart) -> usize {
        self.face_of[d]
    }
    pub fn edge(&self, d: Dart) -> usize {
        self.edge_of[d]
    }

    pub fn face_dart(&self, f: usize) -> Dart {
        self.face_start[f]
    }
    pub fn vertex_dart(&self, v: usize) -> Dart {
        self.vertex_start[v]
    }
    pub fn edge_dart(&self, e: usize) -> Dart {
        self.edge_start[e]
    }

    /// Darts of face `f` in counter-clockwise order, starting at its smallest dart.
    pub fn face_darts(&self, f: usize) -> Vec<Dart> {
        self.cycle_from(self.face_start[f])
    }

    /// Darts of a face starting at `d`.
    pub fn cycle_from(&self, d: Dart) -> Vec<Dart> {
        let mut out = vec![d];
        let mut e = self.next[d];
        while e != d {
            out.push(e);
            e = self.next[e];
        }
        out
    }

    /// Corners of face `f` in counter-clockwise order.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.face_darts(f).into_iter().map(|d| self.vertex_of[d]).collect()
    }

    /// Darts leaving vertex `v`, in counter-clockwise order around it.
    pub fn vertex_darts(&self, v: usize) -> Vec<Dart> {
        let d0 = self.vertex_start[v];
        let mut out = vec![d0];
        let mut e = self.twin[self.prev[d0]];
        while e != d0 && out.len() <= self.num_darts() {
            out.push(e);
            e = self.twin[self.prev[e]];
        }
        out
    }

    pub fn face_degree(&self, f: usize) -> usize {
        self.face_darts(f).len()
    }

    pub fn vertex_degree(&self, v: usize) -> usize {
        let d0 = self.vertex_start[v];
        let mut k = 1;
        let mut e = self.next[self.twin[d0]];
        while e != d0 {
            k += 1;
            e = self.next[self.twin[e]];
        }
        k
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.num_faces() as i64
    }

    pub fn vertex_role(&self, v: usize) -> Option<VertexRole> {
        self.vertex_role.get(&v).copied()
    }
    pub fn face_role(&self, f: usize) -> Option<FaceRole> {
        self.face_role.get(&f).copied()
    }
    pub fn vertex_roles(&self) -> &BTreeMap<usize, VertexRole> {
        &self.vertex_role
    }
    pub fn face_roles(&self) -> &BTreeMap<usize, FaceRole> {
        &self.face_role
    }

    /// The same surface seen in a mirror: every face is walked clockwise.
    /// Face roles are dropped since face ids change.
    pub fn mirror(&self) -> CombMap {
        let next: Vec<Dart> =
            (0..self.num_darts()).map(|d| self.twin[self.prev[self.twin[d]]]).collect();
        // Dart d still leaves the same vertex, and vertex ids are orbit
        // minima, so vertex roles carry over unchanged.
        let m = CombMap::from_raw(self.twin.clone(), next).expect("mirror of a map is a map");
        debug_assert_eq!(m.vertex_of, self.vertex_of);
        m.with_roles(self.vertex_role.clone(), BTreeMap::new())
    }

    fn is_connected(&self) -> bool {
        let n = self.num_darts();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for e in [self.next[d], self.twin[d], self.prev[d]] {
                if !seen[e] {
                    seen[e] = true;
                    count += 1;
                    stack.push(e);
                }
            }
        }
        count == n
    }
}

impl From<CombMap> for MapJson {
    fn from(m: CombMap) -> Self {
        MapJson {
            darts: m.num_darts(),
            twin: m.twin,
            next: m.next,
            vertex_role: m.vertex_role,
            face_role: m.face_role,
        }
    }
}

impl TryFrom<MapJson> for CombMap {
    type Error = Error;

    fn try_from(j: MapJson) -> Result<Self> {
        if j.twin.len() != j.darts || j.next.len() != j.darts {
            return Err(Error::InvalidMap(format!(
                "declared {} darts but twin/next have {}/{} entries",
                j.darts,
                j.twin.len(),
                j.next.len()
            )));
        }
        let m = CombMap::from_raw(j.twin, j.next)?;
        if let Some(&v) = j.vertex_role.keys().find(|&&v| v >= m.num_vertices()) {
            return Err(Error::InvalidMap(format!("role given for missing vertex {v}")));
        }
        if let Some(&f) = j.face_role.keys().find(|&&f| f >= m.num_faces()) {
            return Err(Error::InvalidMap(format!("role given for missing face {f}")));
        }
        Ok(m.with_roles(j.vertex_role, j.face_role))
    }
}

/// The five regular tilings of the sphere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Platonic {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

const TETRAHEDRON: &[&[usize]] = &[&[0, 1, 2], &[0, 2, 3], &[0, 3, 1], &[1, 3, 2]];
const CUBE: &[&[usize]] = &[
    &[0, 1, 3, 2],
    &[0, 2, 6, 4],
    &[0, 4, 5, 1],
    &[1, 5, 7, 3],
    &[2, 3, 7, 6],
    &[4, 6, 7, 5],
];
const OCTAHEDRON: &[&[usize]] = &[
    &[0, 2, 4],
    &[0, 3, 5],
    &[0, 4, 3],
    &[0, 5, 2],
    &[1, 2, 5],
    &[1, 3, 4],
    &[1, 4, 2],
    &[1, 5, 3],
];
const DODECAHEDRON: &[&[usize]] = &[
    &[0, 8, 4, 15, 9],
    &[0, 9, 1, 16, 10],
    &[0, 10, 2, 14, 8],
    &[1, 9, 15, 5, 11],
    &[1, 11, 17, 3, 16],
    &[2, 10, 16, 3, 12],
    &[2, 12, 18, 6, 14],
    &[3, 17, 7, 18, 12],
    &[4, 8, 14, 6, 13],
    &[4, 13, 19, 5, 15],
    &[5, 19, 7, 17, 11],
    &[6, 18, 7, 19, 13],
];
const ICOSAHEDRON: &[&[usize]] = &[
    &[0, 1, 2],
    &[0, 2, 6],
    &[0, 5, 7],
    &[0, 6, 5],
    &[0, 7, 1],
    &[1, 3, 8],
    &[1, 7, 3],
    &[1, 8, 2],
    &[2, 4, 6],
    &[2, 8, 4],
    &[3, 7, 11],
    &[3, 9, 8],
    &[3, 11, 9],
    &[4, 8, 9],
    &[4, 9, 10],
    &[4, 10, 6],
    &[5, 6, 10],
    &[5, 10, 11],
    &[5, 11, 7],
    &[9, 11, 10],
];

impl Platonic {
    pub const ALL: [Platonic; 5] = [
        Platonic::Tetrahedron,
        Platonic::Cube,
        Platonic::Octahedron,
        Platonic::Dodecahedron,
        Platonic::Icosahedron,
    ];

    /// Counter-clockwise face cycles over the solid's reference vertex numbering.
    pub fn face_cycles(self) -> &'static [&'static [usize]] {
        match self {
            Platonic::Tetrahedron => TETRAHEDRON,
            Platonic::Cube => CUBE,
            Platonic::Octahedron => OCTAHEDRON,
            Platonic::Dodecahedron => DODECAHEDRON,
            Platonic::Icosahedron => ICOSAHEDRON,
        }
    }

    /// `(V, E, F)`.
    pub fn counts(self) -> (usize, usize, usize) {
        match self {
            Platonic::Tetrahedron => (4, 6, 4),
            Platonic::Cube => (8, 12, 6),
            Platonic::Octahedron => (6, 12, 8),
            Platonic::Dodecahedron => (20, 30, 12),
            Platonic::Icosahedron => (12, 30, 20),
        }
    }

    /// Number of sides of each face.
    pub fn face_size(self) -> usize {
        self.face_cycles()[0].len()
    }

    /// Degree of each vertex.
    pub fn vertex_degree(self) -> usize {
        let (v, e, _) = self.counts();
        2 * e / v
    }

    pub fn dual(self) -> Platonic {
        match self {
            Platonic::Tetrahedron => Platonic::Tetrahedron,
            Platonic::Cube => Platonic::Octahedron,
            Platonic::Octahedron => Platonic::Cube,
            Platonic::Dodecahedron => Platonic::Icosahedron,
            Platonic::Icosahedron => Platonic::Dodecahedron,
        }
    }

    /// The map together with the translation from reference vertex numbering
    /// to map vertex ids.
    pub fn build(self) -> (CombMap, Vec<usize>) {
        let faces: Vec<Vec<usize>> = self.face_cycles().iter().map(|f| f.to_vec()).collect();
        CombMap::from_faces(&faces).expect("hard-coded platonic face lists are valid")
    }

    pub fn map(self) -> CombMap {
        self.build().0
    }

    pub fn name(self) -> &'static str {
        match self {
            Platonic::Tetrahedron => "tetrahedron",
            Platonic::Cube => "cube",
            Platonic::Octahedron => "octahedron",
            Platonic::Dodecahedron => "dodecahedron",
            Platonic::Icosahedron => "icosahedron",
        }
    }
}

impl fmt::Display for Platonic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Platonic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tetrahedron" | "tetra" => Ok(Platonic::Tetrahedron),
            "cube" | "hexahedron" => Ok(Platonic::Cube),
            "octahedron" | "octa" => Ok(Platonic::Octahedron),
            "dodecahedron" | "dodeca" => Ok(Platonic::Dodecahedron),
            "icosahedron" | "icosa" => Ok(Platonic::Icosahedron),
            _ => Err(Error::UnknownSolid(s.to_string())),
        }
    }
}

/// Builds the combinatorial map of a platonic solid by name.
pub fn build_platonic(name: &str) -> Result<CombMap> {
    Ok(name.parse::<Platonic>()?.map())
}

/// Exchanges faces and vertices. Dart `d` of the dual crosses dart `d` of
/// `m` from right to left, so the dual face of vertex `v` is made of the
/// darts leaving `v`.
pub fn dual_map(m: &CombMap) -> Result<CombMap> {
    let report = validate_map(m);
    if !report.pass {
        return Err(Error::InvalidMap(report.failures.join("; ")));
    }
    let next = (0..m.num_darts()).map(|d| m.twin(m.prev(d))).collect();
    CombMap::from_raw(m.twin.clone(), next)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidityReport {
    pub pass: bool,
    pub euler_characteristic: i64,
    pub min_degree: usize,
    pub connected: bool,
    pub failures: Vec<String>,
}

pub fn validate_map(m: &CombMap) -> ValidityReport {
    let mut failures = Vec::new();
    for d in 0..m.num_darts() {
        let t = m.twin(d);
        if t == d {
            failures.push(format!("twin has a fixed point at dart {d}"));
            break;
        }
        if m.twin(t) != d {
            failures.push(format!("twin is not an involution at dart {d}"));
            break;
        }
    }
    let connected = m.is_connected();
    if !connected {
        failures.push("map is not connected".into());
    }
    let chi = m.euler_characteristic();
    if chi != 2 {
        failures.push(format!("Euler characteristic is {chi}, not 2"));
    }
    let min_degree = (0..m.num_vertices()).map(|v| m.vertex_degree(v)).min().unwrap_or(0);
    if let Some(v) = (0..m.num_vertices()).find(|&v| m.vertex_degree(v) < 3) {
        failures.push(format!("vertex {v} has degree < 3 ({})", m.vertex_degree(v)));
    }
    ValidityReport { pass: failures.is_empty(), euler_characteristic: chi, min_degree, connected, failures }
}

/// Number of vertices of each degree.
pub fn degree_census(m: &CombMap) -> BTreeMap<usize, usize> {
    let mut census = BTreeMap::new();
    for v in 0..m.num_vertices() {
        *census.entry(m.vertex_degree(v)).or_insert(0) += 1;
    }
    census
}

/// Relabels darts by breadth-first search from `root` and returns the
/// resulting description, or `None` if the map is disconnected.
fn bfs_code(m: &CombMap, root: Dart, colour: &dyn Fn(Dart) -> u32) -> Option<Vec<(u32, u32, u32)>> {
    let n = m.num_darts();
    let mut label = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    label[root] = 0;
    queue.push_back(root);
    while let Some(d) = queue.pop_front() {
        order.push(d);
        for e in [m.next(d), m.twin(d)] {
            if label[e] == u32::MAX {
                label[e] = order.len() as u32 + queue.len() as u32;
                queue.push_back(e);
            }
        }
    }
    if order.len() != n {
        return None;
    }
    Some(order.iter().map(|&d| (label[m.next(d)], label[m.twin(d)], colour(d))).collect())
}

/// Canonical description of a map up to orientation-preserving isomorphism,
/// optionally respecting a colouring of darts (for example by vertex role).
pub fn canonical_code_with(m: &CombMap, colour: &dyn Fn(Dart) -> u32) -> Vec<(u32, u32, u32)> {
    (0..m.num_darts())
        .filter_map(|d| bfs_code(m, d, colour))
        .min()
        .unwrap_or_default()
}

pub fn canonical_code(m: &CombMap) -> Vec<(u32, u32, u32)> {
    canonical_code_with(m, &|_| 0)
}

/// Orientation-preserving isomorphism.
pub fn is_isomorphic(a: &CombMap, b: &CombMap) -> bool {
    a.num_darts() == b.num_darts() && canonical_code(a) == canonical_code(b)
}

/// Isomorphism allowing one of the maps to be reflected.
pub fn is_isomorphic_up_to_mirror(a: &CombMap, b: &CombMap) -> bool {
    is_isomorphic(a, b) || is_isomorphic(a, &b.mirror())
}
