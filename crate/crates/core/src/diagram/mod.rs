//! Arrow diagrams as embedded combinatorial maps.
//!
//! A diagram is a 4-valent map in a disk: crossings carry an over/under
//! assignment, arrows are 2-valent decorations sitting on strands, and
//! markers anchor otherwise bare circles so every component is addressable
//! by darts. The embedding is a rotation system (counterclockwise dart
//! order at each vertex) plus a cyclic boundary order for tangles and an
//! `outer_mark` dart designating the face that touches the disk boundary.

mod build;
mod canon;
mod codec;
mod surgery;

pub use build::DiagramBuilder;
pub use codec::{from_json, to_json, CodecError};
pub(crate) use surgery::Scratch;

use serde::{Deserialize, Serialize};
use std::fmt;

/// Dense index of a half-edge.
pub type Dart = usize;

/// Where a dart is attached: a slot in a vertex rotation, or a slot in the
/// disk boundary order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DartHome {
    Vertex { vertex: usize, slot: usize },
    Boundary { slot: usize },
}

/// Vertex decorations. Crossing rotations have length 4, arrows and markers
/// length 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexKind {
    /// `over` is the pair of rotation-antipodal darts carrying the over-strand.
    Crossing { over: [Dart; 2] },
    /// `head` is the dart the arrowhead points toward.
    Arrow { head: Dart },
    Marker,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub kind: VertexKind,
    /// Incident darts in counterclockwise planar order.
    pub rot: Vec<Dart>,
}

impl Vertex {
    pub fn is_crossing(&self) -> bool {
        matches!(self.kind, VertexKind::Crossing { .. })
    }
    pub fn is_arrow(&self) -> bool {
        matches!(self.kind, VertexKind::Arrow { .. })
    }
    pub fn is_marker(&self) -> bool {
        matches!(self.kind, VertexKind::Marker)
    }
}

/// An arrow diagram (closed when `boundary` is empty, a 4-tangle interior
/// when it has length 4). Immutable after construction; every operation
/// produces a new value.
#[derive(Debug, Clone)]
pub struct ArrowDiagram {
    opposite: Vec<Dart>,
    vertices: Vec<Vertex>,
    boundary: Vec<Dart>,
    outer_mark: Option<Dart>,
    home: Vec<DartHome>,
}

/// Counts reported by [`ArrowDiagram::stats`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramStats {
    pub crossings: usize,
    pub arrows: usize,
    pub components: usize,
    pub writhe: i64,
    /// False when there is no component to orient (empty diagram).
    pub writhe_defined: bool,
}

/// One structural invariant violation found by [`ArrowDiagram::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OppositeOutOfRange { dart: Dart },
    OppositeNotInvolutive { dart: Dart },
    OppositeHasFixedPoint { dart: Dart },
    RotationArity { vertex: usize, expected: usize, got: usize },
    DartHomeless { dart: Dart },
    DartMultiplyOwned { dart: Dart },
    OverPairNotAntipodal { vertex: usize },
    ArrowHeadNotIncident { vertex: usize },
    BoundaryLength { got: usize },
    NotPlanar { euler: i64 },
    OuterMarkMissing,
    OuterMarkOutOfRange { dart: Dart },
    OuterMarkNotOuter { dart: Dart },
    MarkerNotAlone { vertex: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OppositeOutOfRange { dart } => write!(f, "opposite out of range at dart {dart}"),
            Violation::OppositeNotInvolutive { dart } => write!(f, "opposite not involutive at dart {dart}"),
            Violation::OppositeHasFixedPoint { dart } => write!(f, "opposite has a fixed point at dart {dart}"),
            Violation::RotationArity { vertex, expected, got } => {
                write!(f, "vertex {vertex} rotation arity {got}, expected {expected}")
            }
            Violation::DartHomeless { dart } => write!(f, "dart {dart} belongs to no rotation or boundary"),
            Violation::DartMultiplyOwned { dart } => write!(f, "dart {dart} appears in more than one slot"),
            Violation::OverPairNotAntipodal { vertex } => write!(f, "crossing {vertex} over pair not antipodal"),
            Violation::ArrowHeadNotIncident { vertex } => write!(f, "arrow {vertex} head dart not incident"),
            Violation::BoundaryLength { got } => write!(f, "boundary length {got}, expected 0 or 4"),
            Violation::NotPlanar { euler } => write!(f, "map is not planar: V - E + F = {euler}"),
            Violation::OuterMarkMissing => write!(f, "outer mark missing on a nonempty diagram"),
            Violation::OuterMarkOutOfRange { dart } => write!(f, "outer mark {dart} out of range"),
            Violation::OuterMarkNotOuter { dart } => write!(f, "outer mark {dart} not on a boundary-facing face"),
            Violation::MarkerNotAlone { vertex } => write!(f, "marker {vertex} on a component with other vertices"),
        }
    }
}

/// Result of structural validation. Malformation is reported, not thrown.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass")
        } else {
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// A maximal strand: a closed cycle or a boundary-to-boundary path.
#[derive(Debug, Clone)]
pub struct Strand {
    /// Darts in travel order; consecutive entries alternate between leaving
    /// and arriving ends of each edge.
    pub darts: Vec<Dart>,
    pub closed: bool,
}

impl ArrowDiagram {
    pub(crate) fn from_parts(
        opposite: Vec<Dart>,
        vertices: Vec<Vertex>,
        boundary: Vec<Dart>,
        outer_mark: Option<Dart>,
    ) -> Self {
        let home = compute_homes(opposite.len(), &vertices, &boundary);
        ArrowDiagram { opposite, vertices, boundary, outer_mark, home }
    }

    /// The empty diagram.
    pub fn empty() -> Self {
        ArrowDiagram::from_parts(Vec::new(), Vec::new(), Vec::new(), None)
    }

    pub fn dart_count(&self) -> usize {
        self.opposite.len()
    }

    pub fn edge_count(&self) -> usize {
        self.opposite.len() / 2
    }

    pub fn opposite(&self, d: Dart) -> Dart {
        self.opposite[d]
    }

    pub fn opposite_table(&self) -> &[Dart] {
        &self.opposite
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn boundary(&self) -> &[Dart] {
        &self.boundary
    }

    pub fn outer_mark(&self) -> Option<Dart> {
        self.outer_mark
    }

    pub fn is_tangle(&self) -> bool {
        !self.boundary.is_empty()
    }

    pub fn home(&self, d: Dart) -> DartHome {
        self.home[d]
    }

    /// Vertex index owning `d`, or `None` for boundary darts.
    pub fn vertex_of(&self, d: Dart) -> Option<usize> {
        match self.home[d] {
            DartHome::Vertex { vertex, .. } => Some(vertex),
            DartHome::Boundary { .. } => None,
        }
    }

    /// Next dart counterclockwise at the attachment of `d` (boundary darts
    /// use the boundary cyclic order).
    pub fn rot_next(&self, d: Dart) -> Dart {
        match self.home[d] {
            DartHome::Vertex { vertex, slot } => {
                let rot = &self.vertices[vertex].rot;
                rot[(slot + 1) % rot.len()]
            }
            DartHome::Boundary { slot } => {
                // The disk boundary seen from outside runs clockwise, so the
                // virtual boundary vertex rotation is the reversed list.
                let n = self.boundary.len();
                self.boundary[(slot + n - 1) % n]
            }
        }
    }

    /// Strand continuation through the vertex owning `d`: the rotation
    /// antipode at a crossing, the other dart at an arrow or marker. Returns
    /// `None` for boundary darts.
    pub fn through(&self, d: Dart) -> Option<Dart> {
        match self.home[d] {
            DartHome::Vertex { vertex, slot } => {
                let rot = &self.vertices[vertex].rot;
                Some(rot[(slot + rot.len() / 2) % rot.len()])
            }
            DartHome::Boundary { .. } => None,
        }
    }

    /// Whether the strand holding dart `d` (a crossing dart) is the
    /// over-strand at its crossing.
    pub fn is_over(&self, d: Dart) -> bool {
        match self.home[d] {
            DartHome::Vertex { vertex, .. } => match &self.vertices[vertex].kind {
                VertexKind::Crossing { over } => over[0] == d || over[1] == d,
                _ => false,
            },
            DartHome::Boundary { .. } => false,
        }
    }

    /// Face orbit step: the next dart along the face walk containing `d`.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.rot_next(self.opposite[d])
    }

    /// All face orbits, each a walk of darts, plus the dart -> face index.
    pub fn faces(&self) -> (Vec<Vec<Dart>>, Vec<usize>) {
        let n = self.dart_count();
        let mut face_of = vec![usize::MAX; n];
        let mut walks = Vec::new();
        for start in 0..n {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = walks.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = id;
                walk.push(d);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            walks.push(walk);
        }
        (walks, face_of)
    }

    /// The face orbit containing `d`, as a sorted set of darts.
    pub fn face_orbit(&self, d: Dart) -> Vec<Dart> {
        let mut walk = Vec::new();
        let mut cur = d;
        loop {
            walk.push(cur);
            cur = self.face_next(cur);
            if cur == d {
                break;
            }
        }
        walk
    }

    /// Maximal strands. Every dart appears exactly once across all strands.
    pub fn strands(&self) -> Vec<Strand> {
        let n = self.dart_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        // Boundary-to-boundary strands first, starting from each unvisited
        // boundary dart in id order.
        let mut bdarts: Vec<Dart> = self.boundary.clone();
        bdarts.sort_unstable();
        for &b in &bdarts {
            if seen[b] {
                continue;
            }
            let mut darts = Vec::new();
            let mut d = b;
            loop {
                seen[d] = true;
                darts.push(d);
                let o = self.opposite[d];
                seen[o] = true;
                darts.push(o);
                match self.through(o) {
                    Some(t) => d = t,
                    None => break,
                }
            }
            out.push(Strand { darts, closed: false });
        }
        // Closed strands from the lowest unvisited dart.
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                seen[d] = true;
                darts.push(d);
                let o = self.opposite[d];
                if o == start {
                    break;
                }
                seen[o] = true;
                darts.push(o);
                d = match self.through(o) {
                    Some(t) => t,
                    None => break, // unreachable on valid closed strands
                };
                if d == start {
                    break;
                }
            }
            out.push(Strand { darts, closed: true });
        }
        out
    }

    /// Structural validation; never fails, reports all violations found.
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::default();
        let n = self.dart_count();

        for d in 0..n {
            let o = self.opposite[d];
            if o >= n {
                rep.violations.push(Violation::OppositeOutOfRange { dart: d });
                continue;
            }
            if o == d {
                rep.violations.push(Violation::OppositeHasFixedPoint { dart: d });
            } else if self.opposite[o] != d {
                rep.violations.push(Violation::OppositeNotInvolutive { dart: d });
            }
        }

        // Ownership: every dart in exactly one slot.
        let mut owned = vec![0usize; n];
        for v in &self.vertices {
            for &d in &v.rot {
                if d < n {
                    owned[d] += 1;
                }
            }
        }
        for &d in &self.boundary {
            if d < n {
                owned[d] += 1;
            }
        }
        for d in 0..n {
            match owned[d] {
                0 => rep.violations.push(Violation::DartHomeless { dart: d }),
                1 => {}
                _ => rep.violations.push(Violation::DartMultiplyOwned { dart: d }),
            }
        }

        for (vi, v) in self.vertices.iter().enumerate() {
            let expected = if v.is_crossing() { 4 } else { 2 };
            if v.rot.len() != expected {
                rep.violations.push(Violation::RotationArity { vertex: vi, expected, got: v.rot.len() });
                continue;
            }
            match &v.kind {
                VertexKind::Crossing { over } => {
                    let pos = |d: Dart| v.rot.iter().position(|&x| x == d);
                    match (pos(over[0]), pos(over[1])) {
                        (Some(i), Some(j)) if (i + 2) % 4 == j => {}
                        _ => rep.violations.push(Violation::OverPairNotAntipodal { vertex: vi }),
                    }
                }
                VertexKind::Arrow { head } => {
                    if !v.rot.contains(head) {
                        rep.violations.push(Violation::ArrowHeadNotIncident { vertex: vi });
                    }
                }
                VertexKind::Marker => {}
            }
        }

        if !matches!(self.boundary.len(), 0 | 4) {
            rep.violations.push(Violation::BoundaryLength { got: self.boundary.len() });
        }

        if !rep.passed() {
            return rep; // face walks need a structurally sound map
        }

        if n > 0 {
            // Euler characteristic with the disk boundary as a virtual vertex.
            let (walks, face_of) = self.faces();
            let virtual_vertex = usize::from(!self.boundary.is_empty());
            let v_count = self.vertices.len() as i64 + virtual_vertex as i64;
            let e_count = self.edge_count() as i64;
            let f_count = walks.len() as i64;
            let comps = self.map_components();
            let euler = v_count - e_count + f_count;
            if euler != 2 * comps as i64 {
                rep.violations.push(Violation::NotPlanar { euler });
            }

            match self.outer_mark {
                None => rep.violations.push(Violation::OuterMarkMissing),
                Some(m) if m >= n => rep.violations.push(Violation::OuterMarkOutOfRange { dart: m }),
                Some(m) => {
                    if !self.boundary.is_empty() {
                        let bf = face_of[self.boundary[0]];
                        let mf = face_of[m];
                        let touches = walks[mf].iter().any(|&d| matches!(self.home[d], DartHome::Boundary { .. }));
                        let _ = bf;
                        if !touches {
                            rep.violations.push(Violation::OuterMarkNotOuter { dart: m });
                        }
                    }
                }
            }

            // Markers only anchor otherwise bare circles.
            for (vi, v) in self.vertices.iter().enumerate() {
                if v.is_marker() && !self.marker_is_alone(vi) {
                    rep.violations.push(Violation::MarkerNotAlone { vertex: vi });
                }
            }
        } else if self.outer_mark.is_some() {
            rep.violations.push(Violation::OuterMarkOutOfRange { dart: self.outer_mark.unwrap() });
        }

        rep
    }

    fn marker_is_alone(&self, vi: usize) -> bool {
        let start = self.vertices[vi].rot[0];
        let mut d = start;
        loop {
            let o = self.opposite[d];
            match self.home[o] {
                DartHome::Boundary { .. } => return false,
                DartHome::Vertex { vertex, .. } => {
                    if vertex != vi {
                        return false;
                    }
                }
            }
            d = match self.through(o) {
                Some(t) => t,
                None => return false,
            };
            if d == start {
                return true;
            }
        }
    }

    /// Connected components of the underlying map (vertices + virtual
    /// boundary vertex linked through edges).
    pub fn map_components(&self) -> usize {
        let n = self.dart_count();
        if n == 0 {
            return 0;
        }
        let mut uf = UnionFind::new(n);
        for d in 0..n {
            uf.union(d, self.opposite[d]);
            uf.union(d, self.rot_next(d));
        }
        let mut roots = std::collections::HashSet::new();
        for d in 0..n {
            roots.insert(uf.find(d));
        }
        roots.len()
    }

    /// Diagram statistics. The writhe orients each component by traversal
    /// from its lowest dart id.
    pub fn stats(&self) -> DiagramStats {
        let crossings = self.vertices.iter().filter(|v| v.is_crossing()).count();
        let arrows = self.vertices.iter().filter(|v| v.is_arrow()).count();
        let strands = self.strands();
        let components = strands.len();

        // For each crossing, collect the outgoing dart of each oriented pass.
        let mut outgoing = vec![Vec::new(); self.vertices.len()];
        for s in &strands {
            // darts alternate: leave, arrive, leave, arrive, ...
            let mut k = 0;
            while k < s.darts.len() {
                let leave = s.darts[k];
                if let Some(v) = self.vertex_of(leave) {
                    if self.vertices[v].is_crossing() {
                        outgoing[v].push(leave);
                    }
                }
                k += 2;
            }
        }
        let mut writhe = 0i64;
        for (vi, v) in self.vertices.iter().enumerate() {
            if let VertexKind::Crossing { over } = &v.kind {
                if outgoing[vi].len() != 2 {
                    continue; // boundary-truncated pass; no sign contribution
                }
                let over_out = outgoing[vi].iter().copied().find(|&d| over.contains(&d));
                let under_out = outgoing[vi].iter().copied().find(|&d| !over.contains(&d));
                if let (Some(ov), Some(un)) = (over_out, under_out) {
                    // Positive when rotating the over-out ray clockwise by a
                    // quarter turn gives the under-out ray.
                    let rot = &v.rot;
                    let i = rot.iter().position(|&x| x == ov).unwrap();
                    writhe += if rot[(i + 3) % 4] == un { 1 } else { -1 };
                }
            }
        }
        DiagramStats { crossings, arrows, components, writhe, writhe_defined: components > 0 }
    }

    /// Mirror image: switch every crossing (reflection through the
    /// projection plane). The embedding is untouched; arrow heads reverse,
    /// the convention pinned by the move-compatibility tests.
    pub fn mirror(&self) -> ArrowDiagram {
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                let kind = match &v.kind {
                    VertexKind::Crossing { over } => {
                        let i = v.rot.iter().position(|&x| x == over[0]).unwrap();
                        let a = v.rot[(i + 1) % 4];
                        let b = v.rot[(i + 3) % 4];
                        VertexKind::Crossing { over: [a.min(b), a.max(b)] }
                    }
                    VertexKind::Arrow { head } => {
                        let other = if v.rot[0] == *head { v.rot[1] } else { v.rot[0] };
                        VertexKind::Arrow { head: other }
                    }
                    VertexKind::Marker => VertexKind::Marker,
                };
                Vertex { kind, rot: v.rot.clone() }
            })
            .collect();
        ArrowDiagram::from_parts(self.opposite.clone(), vertices, self.boundary.clone(), self.outer_mark)
    }

    /// Relabel darts by a permutation (`perm[old] = new`); test support for
    /// invariance checks.
    pub fn relabeled(&self, perm: &[Dart]) -> ArrowDiagram {
        let n = self.dart_count();
        assert_eq!(perm.len(), n);
        let mut opposite = vec![0; n];
        for d in 0..n {
            opposite[perm[d]] = perm[self.opposite[d]];
        }
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex {
                kind: match &v.kind {
                    VertexKind::Crossing { over } => {
                        let a = perm[over[0]];
                        let b = perm[over[1]];
                        VertexKind::Crossing { over: [a.min(b), a.max(b)] }
                    }
                    VertexKind::Arrow { head } => VertexKind::Arrow { head: perm[*head] },
                    VertexKind::Marker => VertexKind::Marker,
                },
                rot: v.rot.iter().map(|&d| perm[d]).collect(),
            })
            .collect();
        let boundary = self.boundary.iter().map(|&d| perm[d]).collect();
        ArrowDiagram::from_parts(opposite, vertices, boundary, self.outer_mark.map(|m| perm[m]))
    }

    /// Canonical code: equal iff the rooted maps are isomorphic (including
    /// the outer-face mark and, for tangles, the labeled boundary).
    pub fn canonical_code(&self) -> String {
        canon::canonical_code(self)
    }

    pub fn canonical_eq(&self, other: &ArrowDiagram) -> bool {
        self.canonical_code() == other.canonical_code()
    }

    /// Serialize to the versioned JSON schema.
    pub fn to_json(&self) -> String {
        codec::to_json(self)
    }
}

fn compute_homes(n: usize, vertices: &[Vertex], boundary: &[Dart]) -> Vec<DartHome> {
    let mut home = vec![DartHome::Boundary { slot: usize::MAX }; n];
    for (vi, v) in vertices.iter().enumerate() {
        for (slot, &d) in v.rot.iter().enumerate() {
            if d < n {
                home[d] = DartHome::Vertex { vertex: vi, slot };
            }
        }
    }
    for (slot, &d) in boundary.iter().enumerate() {
        if d < n {
            home[d] = DartHome::Boundary { slot };
        }
    }
    home
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }
    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != c {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }
    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests;
