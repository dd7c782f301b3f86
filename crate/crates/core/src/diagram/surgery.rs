//! Mutable scratch space for local rewrites.
//!
//! Moves copy a diagram into a `Scratch`, splice darts and vertices, then
//! `finish` compacts to dense ids (survivors keep their relative order,
//! created darts follow) and normalizes markers.

use super::{ArrowDiagram, Dart, DartHome, Vertex, VertexKind};

#[derive(Debug)]
pub(crate) struct Scratch {
    opp: Vec<Dart>,
    alive: Vec<bool>,
    vertices: Vec<Option<Vertex>>,
    boundary: Vec<Dart>,
    outer_mark: Option<Dart>,
    n_orig: usize,
}

/// Old-dart to new-dart map returned alongside a rewritten diagram.
#[derive(Debug, Clone)]
pub struct DartMap {
    pub fwd: Vec<Option<Dart>>,
}

impl DartMap {
    pub fn map(&self, d: Dart) -> Option<Dart> {
        self.fwd.get(d).copied().flatten()
    }
}

impl Scratch {
    pub fn new(d: &ArrowDiagram) -> Self {
        Scratch {
            opp: d.opposite.clone(),
            alive: vec![true; d.dart_count()],
            vertices: d.vertices.iter().cloned().map(Some).collect(),
            boundary: d.boundary.clone(),
            outer_mark: d.outer_mark,
            n_orig: d.dart_count(),
        }
    }

    pub fn opp(&self, d: Dart) -> Dart {
        self.opp[d]
    }

    pub fn new_dart(&mut self) -> Dart {
        self.opp.push(usize::MAX);
        self.alive.push(true);
        self.opp.len() - 1
    }

    pub fn kill_dart(&mut self, d: Dart) {
        self.alive[d] = false;
    }

    /// Link two darts as the ends of one edge.
    pub fn set_opp(&mut self, a: Dart, b: Dart) {
        self.opp[a] = b;
        self.opp[b] = a;
    }

    pub fn add_vertex(&mut self, v: Vertex) -> usize {
        self.vertices.push(Some(v));
        self.vertices.len() - 1
    }

    pub fn kill_vertex(&mut self, vi: usize) {
        self.vertices[vi] = None;
    }

    pub fn vertex(&self, vi: usize) -> &Vertex {
        self.vertices[vi].as_ref().expect("dead vertex")
    }

    pub fn vertex_mut(&mut self, vi: usize) -> &mut Vertex {
        self.vertices[vi].as_mut().expect("dead vertex")
    }

    pub fn set_outer_mark(&mut self, d: Dart) {
        self.outer_mark = Some(d);
    }

    pub fn outer_mark(&self) -> Option<Dart> {
        self.outer_mark
    }

    /// Subdivide the edge holding `a` with a new 2-valent vertex. The new
    /// vertex has rotation `[n_a, n_b]` where `n_a` pairs with `a` and `n_b`
    /// with the old opposite of `a`. Returns `(vertex, n_a, n_b)`.
    pub fn subdivide(&mut self, a: Dart, kind: VertexKind) -> (usize, Dart, Dart) {
        let b = self.opp[a];
        let n_a = self.new_dart();
        let n_b = self.new_dart();
        self.set_opp(a, n_a);
        self.set_opp(b, n_b);
        let vi = self.add_vertex(Vertex { kind, rot: vec![n_a, n_b] });
        (vi, n_a, n_b)
    }

    /// Remove a 2-valent vertex, merging its two edges. If the vertex is the
    /// only one on a closed component it is converted to a marker instead
    /// (a bare circle is not representable).
    pub fn remove_bivalent(&mut self, vi: usize) {
        let rot = self.vertex(vi).rot.clone();
        debug_assert_eq!(rot.len(), 2);
        let (x, y) = (rot[0], rot[1]);
        if self.opp[x] == y {
            // lone vertex on a one-edge circle: keep it, as a marker
            self.vertex_mut(vi).kind = VertexKind::Marker;
            return;
        }
        let a = self.opp[x];
        let b = self.opp[y];
        self.set_opp(a, b);
        self.kill_dart(x);
        self.kill_dart(y);
        self.kill_vertex(vi);
    }

    fn home_of(&self) -> Vec<Option<(usize, usize)>> {
        let mut home = vec![None; self.opp.len()];
        for (vi, v) in self.vertices.iter().enumerate() {
            if let Some(v) = v {
                for (slot, &d) in v.rot.iter().enumerate() {
                    home[d] = Some((vi, slot));
                }
            }
        }
        home
    }

    /// Drop markers that share a component with another vertex.
    fn normalize_markers(&mut self) {
        loop {
            let home = self.home_of();
            let mut doomed = None;
            'outer: for (vi, v) in self.vertices.iter().enumerate() {
                let Some(v) = v else { continue };
                if !matches!(v.kind, VertexKind::Marker) {
                    continue;
                }
                // Walk the component; any other vertex makes this marker
                // redundant.
                let start = v.rot[0];
                let mut d = start;
                loop {
                    let o = self.opp[d];
                    match home[o] {
                        None => break, // boundary dart: marker on an open strand is kept out by construction
                        Some((w, slot)) => {
                            if w != vi {
                                doomed = Some(vi);
                                break 'outer;
                            }
                            let rot = &self.vertices[w].as_ref().unwrap().rot;
                            d = rot[(slot + 1) % 2];
                        }
                    }
                    if d == start {
                        break;
                    }
                }
            }
            match doomed {
                Some(vi) => self.remove_bivalent(vi),
                None => break,
            }
        }
    }

    /// Compact to a dense diagram. Returns the new diagram plus the map from
    /// the ORIGINAL diagram's darts to new ids (dead darts map to None).
    pub fn finish(mut self) -> (ArrowDiagram, DartMap) {
        self.normalize_markers();
        let total = self.opp.len();
        let mut to_new = vec![None; total];
        let mut next = 0;
        for d in 0..total {
            if self.alive[d] {
                to_new[d] = Some(next);
                next += 1;
            }
        }
        let mut opposite = vec![0; next];
        for d in 0..total {
            if let Some(nd) = to_new[d] {
                opposite[nd] = to_new[self.opp[d]].expect("edge to dead dart");
            }
        }
        let remap = |d: Dart| to_new[d].expect("reference to dead dart");
        let vertices: Vec<Vertex> = self
            .vertices
            .iter()
            .flatten()
            .map(|v| Vertex {
                kind: match &v.kind {
                    VertexKind::Crossing { over } => {
                        let a = remap(over[0]);
                        let b = remap(over[1]);
                        VertexKind::Crossing { over: [a.min(b), a.max(b)] }
                    }
                    VertexKind::Arrow { head } => VertexKind::Arrow { head: remap(*head) },
                    VertexKind::Marker => VertexKind::Marker,
                },
                rot: v.rot.iter().map(|&d| remap(d)).collect(),
            })
            .collect();
        let boundary: Vec<Dart> = self.boundary.iter().map(|&d| remap(d)).collect();

        let outer_mark = self.outer_mark.map(|m| to_new[m].expect("outer mark died uncorrected"));
        let diagram = ArrowDiagram::from_parts(opposite, vertices, boundary, outer_mark);
        let fwd = to_new[..self.n_orig].to_vec();
        (diagram, DartMap { fwd })
    }
}

impl ArrowDiagram {
    /// Kind of the vertex owning `d`, if any.
    pub fn kind_of(&self, d: Dart) -> Option<&VertexKind> {
        match self.home(d) {
            DartHome::Vertex { vertex, .. } => Some(&self.vertices[vertex].kind),
            DartHome::Boundary { .. } => None,
        }
    }
}
