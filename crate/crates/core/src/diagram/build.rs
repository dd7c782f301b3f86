//! Low-level diagram construction.

use super::{ArrowDiagram, Dart, Vertex, VertexKind};

/// Incremental builder for hand-made and generated diagrams. Darts are
/// allocated in pairs (one edge at a time); every dart must end up in
/// exactly one rotation slot or the boundary.
#[derive(Debug, Default)]
pub struct DiagramBuilder {
    opposite: Vec<Dart>,
    vertices: Vec<Vertex>,
    boundary: Vec<Dart>,
    outer_mark: Option<Dart>,
}

impl DiagramBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Allocate one edge; returns its two darts.
    pub fn edge(&mut self) -> (Dart, Dart) {
        let a = self.opposite.len();
        let b = a + 1;
        self.opposite.push(b);
        self.opposite.push(a);
        (a, b)
    }

    pub fn crossing(&mut self, rot: [Dart; 4], over: [Dart; 2]) -> usize {
        self.vertices.push(Vertex {
            kind: VertexKind::Crossing { over: [over[0].min(over[1]), over[0].max(over[1])] },
            rot: rot.to_vec(),
        });
        self.vertices.len() - 1
    }

    pub fn arrow(&mut self, rot: [Dart; 2], head: Dart) -> usize {
        self.vertices.push(Vertex { kind: VertexKind::Arrow { head }, rot: rot.to_vec() });
        self.vertices.len() - 1
    }

    pub fn marker(&mut self, rot: [Dart; 2]) -> usize {
        self.vertices.push(Vertex { kind: VertexKind::Marker, rot: rot.to_vec() });
        self.vertices.len() - 1
    }

    pub fn set_boundary(&mut self, boundary: Vec<Dart>) {
        self.boundary = boundary;
    }

    pub fn set_outer_mark(&mut self, d: Dart) {
        self.outer_mark = Some(d);
    }

    /// Finish the diagram. Without an explicit outer mark, closed diagrams
    /// get the lowest dart whose face has the most darts (a stable default
    /// for fixtures where the outer face is the big one); tangles get the
    /// lowest dart on a boundary-facing face.
    pub fn finish(self) -> ArrowDiagram {
        let DiagramBuilder { opposite, vertices, boundary, outer_mark } = self;
        let mut d = ArrowDiagram::from_parts(opposite, vertices, boundary, outer_mark);
        if d.outer_mark().is_none() && d.dart_count() > 0 {
            let (walks, _) = d.faces();
            let pick = if d.boundary().is_empty() {
                walks
                    .iter()
                    .max_by_key(|w| (w.len(), usize::MAX - w.iter().copied().min().unwrap()))
                    .and_then(|w| w.iter().copied().min())
            } else {
                walks
                    .iter()
                    .filter(|w| w.iter().any(|&x| d.vertex_of(x).is_none()))
                    .flat_map(|w| w.iter().copied())
                    .min()
            };
            d = ArrowDiagram::from_parts(
                d.opposite.clone(),
                d.vertices.clone(),
                d.boundary.clone(),
                pick,
            );
        }
        d
    }
}
