//! Small hand-built diagrams used by tests and the search seeds.

use crate::diagram::{ArrowDiagram, DiagramBuilder};

/// A crossing-free circle anchored by one marker.
pub fn marker_circle() -> ArrowDiagram {
    let mut b = DiagramBuilder::new();
    let (x, y) = b.edge();
    b.marker([x, y]);
    b.set_outer_mark(x);
    b.finish()
}

/// Unknot with a single kink. `loop_over` picks which pass of the self
/// crossing runs on top; the kink loop pokes into the outer face.
pub fn kink_unknot(loop_over: bool) -> ArrowDiagram {
    let mut b = DiagramBuilder::new();
    let (p, q) = b.edge(); // big loop, p west end, q east end
    let (l1, l2) = b.edge(); // kink loop
    let over = if loop_over { [q, l2] } else { [p, l1] };
    b.crossing([q, l1, l2, p], over);
    b.set_outer_mark(p);
    b.finish()
}

/// A circle carrying `k >= 1` arrows, all pointing the same way around.
/// The circle has two faces; `hole_on_head_side` picks which one holds the
/// disk boundary (the head side is the face walked by the darts the arrows
/// point along).
pub fn arrow_circle(k: usize, hole_on_head_side: bool) -> ArrowDiagram {
    assert!(k >= 1);
    let mut b = DiagramBuilder::new();
    // arrow i has back dart a_i and forward dart f_i; edge i joins f_i to
    // a_{i+1}.
    let mut a = Vec::new();
    let mut f = Vec::new();
    for _ in 0..k {
        let (x, y) = b.edge();
        f.push(x);
        a.push(y);
    }
    a.rotate_left(1);
    for i in 0..k {
        b.arrow([a[i], f[i]], f[i]);
    }
    b.set_outer_mark(if hole_on_head_side { f[0] } else { a[0] });
    b.finish()
}
