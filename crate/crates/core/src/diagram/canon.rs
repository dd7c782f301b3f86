//! Canonical codes for rooted combinatorial maps.
//!
//! Breadth-first traversal from a root dart, exploring `opposite` then
//! `rot_next`, emitting vertex kinds, over flags, arrow directions and the
//! outer-face membership in visit order; the lexicographic minimum over all
//! roots wins. Tangles are rooted at the first boundary endpoint, so the
//! code fixes the boundary labeling.

use super::{ArrowDiagram, Dart, DartHome, VertexKind};

pub(super) fn canonical_code(d: &ArrowDiagram) -> String {
    let n = d.dart_count();
    if n == 0 {
        return "empty".to_string();
    }
    let (_, face_of) = d.faces();
    let hole = d.outer_mark().map(|m| face_of[m]);

    // Map components (sets of darts connected through opposite/rot_next).
    let mut comp_of = vec![usize::MAX; n];
    let mut comps: Vec<Vec<Dart>> = Vec::new();
    for s in 0..n {
        if comp_of[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut comp = vec![s];
        comp_of[s] = id;
        let mut k = 0;
        while k < comp.len() {
            let c = comp[k];
            k += 1;
            for nb in [d.opposite(c), d.rot_next(c)] {
                if comp_of[nb] == usize::MAX {
                    comp_of[nb] = id;
                    comp.push(nb);
                }
            }
        }
        comps.push(comp);
    }

    let codes: Vec<Vec<u32>> = comps
        .iter()
        .map(|comp| {
            let root_set: Vec<Dart> = if d.boundary().is_empty() || comp_of[d.boundary()[0]] != comp_of[comp[0]] {
                comp.clone()
            } else {
                vec![d.boundary()[0]]
            };
            root_set.iter().map(|&r| encode_component(d, r, &face_of, hole)).min().unwrap()
        })
        .collect();
    let mut sorted = codes;
    sorted.sort();

    let mut s = String::with_capacity(sorted.iter().map(|c| c.len() * 3 + 1).sum());
    for c in sorted {
        for v in c {
            s.push_str(&format!("{v:x}."));
        }
        s.push('|');
    }
    s
}

fn encode_component(d: &ArrowDiagram, root: Dart, face_of: &[usize], hole: Option<usize>) -> Vec<u32> {
    let n = d.dart_count();
    let mut label = vec![u32::MAX; n];
    let mut order = vec![root];
    let mut out = Vec::new();
    label[root] = 0;
    let mut i = 0;
    while i < order.len() {
        let cur = order[i];
        i += 1;
        for nb in [d.opposite(cur), d.rot_next(cur)] {
            if label[nb] == u32::MAX {
                label[nb] = order.len() as u32;
                order.push(nb);
            }
            out.push(label[nb]);
        }
        let tag = match d.home(cur) {
            DartHome::Vertex { vertex, .. } => match &d.vertices()[vertex].kind {
                VertexKind::Crossing { .. } => {
                    if d.is_over(cur) {
                        1
                    } else {
                        2
                    }
                }
                VertexKind::Arrow { head } => {
                    if *head == cur {
                        3
                    } else {
                        4
                    }
                }
                VertexKind::Marker => 5,
            },
            DartHome::Boundary { slot } => 16 + slot as u32,
        };
        out.push(tag * 2 + u32::from(hole == Some(face_of[cur])));
    }
    out
}
