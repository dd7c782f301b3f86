//! The 4-tangle algebra: half-twist generators, composition, rotation and
//! twist closures.
//!
//! Boundary endpoints are listed in the cyclic order NW, NE, SE, SW.
//! `compose` glues horizontally (NE/SE of the left tangle onto NW/SW of the
//! right one); `twist_closure` adds half-twists and closes with the two
//! standard arcs around the left and right sides.

use crate::diagram::{ArrowDiagram, Dart, DiagramBuilder, Vertex, VertexKind};
use thiserror::Error;

pub const NW: usize = 0;
pub const NE: usize = 1;
pub const SE: usize = 2;
pub const SW: usize = 3;

/// Sign of a half-twist or kink family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", if *self == Sign::Positive { "+" } else { "-" })
    }
}

#[derive(Debug, Error)]
pub enum TangleError {
    #[error("diagram is not a 4-tangle: {0}")]
    NotATangle(String),
}

/// An arrow diagram with four boundary endpoints.
#[derive(Debug, Clone)]
pub struct FourTangle {
    diagram: ArrowDiagram,
}

impl FourTangle {
    pub fn new(diagram: ArrowDiagram) -> Result<FourTangle, TangleError> {
        if diagram.boundary().len() != 4 {
            return Err(TangleError::NotATangle(format!(
                "boundary has {} endpoints",
                diagram.boundary().len()
            )));
        }
        let report = diagram.validate();
        if !report.passed() {
            return Err(TangleError::NotATangle(report.to_string()));
        }
        let open = diagram.strands().iter().filter(|s| !s.closed).count();
        if open != 2 {
            return Err(TangleError::NotATangle(format!("{open} boundary strands, expected 2")));
        }
        Ok(FourTangle { diagram })
    }

    pub fn diagram(&self) -> &ArrowDiagram {
        &self.diagram
    }

    pub fn into_diagram(self) -> ArrowDiagram {
        self.diagram
    }

    pub fn endpoint(&self, corner: usize) -> Dart {
        self.diagram.boundary()[corner]
    }

    pub fn crossings(&self) -> usize {
        self.diagram.stats().crossings
    }

    pub fn mirror(&self) -> FourTangle {
        FourTangle { diagram: self.diagram.mirror() }
    }

    /// Rotate the boundary labels by `k` quarter turns (NW takes the label
    /// of the corner `k` steps later in NW,NE,SE,SW order).
    pub fn rotated(&self, k: usize) -> FourTangle {
        let mut boundary = self.diagram.boundary().to_vec();
        boundary.rotate_left(k % 4);
        let d = ArrowDiagram::from_parts(
            self.diagram.opposite_table().to_vec(),
            self.diagram.vertices().to_vec(),
            boundary,
            self.diagram.outer_mark(),
        );
        FourTangle { diagram: d }
    }

    pub fn canonical_eq(&self, other: &FourTangle) -> bool {
        self.diagram.canonical_eq(&other.diagram)
    }
}

/// Over-pair selection shared by every crossing builder. The rotation is
/// `[east-up, west-up, west-down, east-down]`; a positive crossing carries
/// the strand running from south-west to north-east on top.
pub(crate) fn over_pair(rot: [Dart; 4], sign: Sign) -> [Dart; 2] {
    match sign {
        Sign::Positive => [rot[0], rot[2]],
        Sign::Negative => [rot[1], rot[3]],
    }
}

/// `m` half-twists of the given sign, as a horizontal ladder.
pub fn half_twists(m: usize, sign: Sign) -> FourTangle {
    let mut b = DiagramBuilder::new();
    if m == 0 {
        let (nw, ne) = b.edge();
        let (sw, se) = b.edge();
        b.set_boundary(vec![nw, ne, se, sw]);
        return FourTangle::new(b.finish()).expect("trivial tangle is valid");
    }
    // top edges t[0..m], bottom edges b[0..m]; crossing i consumes
    // t[i].right, b[i].right as west rays and t[i+1].left, b[i+1].left as
    // east rays.
    let mut tops = Vec::with_capacity(m + 1);
    let mut bots = Vec::with_capacity(m + 1);
    for _ in 0..=m {
        tops.push(b.edge());
        bots.push(b.edge());
    }
    for i in 0..m {
        let rot = [tops[i + 1].0, tops[i].1, bots[i].1, bots[i + 1].0];
        let over = over_pair(rot, sign);
        b.crossing(rot, over);
    }
    b.set_boundary(vec![tops[0].0, tops[m].1, bots[m].1, bots[0].0]);
    FourTangle::new(b.finish()).expect("ladder is valid")
}

/// The 2-crossing clasp: a quarter-turned pair of half-twists, the tangle
/// whose twist closures are the twist knots.
pub fn clasp(sign: Sign) -> FourTangle {
    half_twists(2, sign).rotated(1)
}

/// Raw splice support: merge two boundary stubs of one diagram into a single
/// edge, or close a single edge into a marker circle when the stubs are the
/// two ends of the same edge.
pub(crate) struct Splicer {
    pub opposite: Vec<Dart>,
    pub vertices: Vec<Vertex>,
    pub stubs: Vec<Dart>,
    dead: Vec<bool>,
}

impl Splicer {
    pub fn from_diagram(d: &ArrowDiagram) -> Splicer {
        Splicer {
            opposite: d.opposite_table().to_vec(),
            vertices: d.vertices().to_vec(),
            stubs: d.boundary().to_vec(),
            dead: vec![false; d.dart_count()],
        }
    }

    /// Append another diagram, returning the dart offset applied to it.
    pub fn append(&mut self, d: &ArrowDiagram) -> usize {
        let off = self.opposite.len();
        self.opposite.extend(d.opposite_table().iter().map(|&x| x + off));
        self.dead.extend(std::iter::repeat(false).take(d.dart_count()));
        self.vertices.extend(d.vertices().iter().map(|v| Vertex {
            kind: match &v.kind {
                VertexKind::Crossing { over } => VertexKind::Crossing { over: [over[0] + off, over[1] + off] },
                VertexKind::Arrow { head } => VertexKind::Arrow { head: head + off },
                VertexKind::Marker => VertexKind::Marker,
            },
            rot: v.rot.iter().map(|&x| x + off).collect(),
        }));
        off
    }

    /// Merge the edges ending at stubs `x` and `y`.
    pub fn splice(&mut self, x: Dart, y: Dart) {
        assert!(!self.dead[x] && !self.dead[y]);
        let xp = self.opposite[x];
        let yp = self.opposite[y];
        self.dead[x] = true;
        self.dead[y] = true;
        if xp == y {
            // the two stubs close a single edge into a bare circle
            debug_assert_eq!(yp, x);
            let a = self.fresh();
            let b = self.fresh();
            self.opposite[a] = b;
            self.opposite[b] = a;
            self.vertices.push(Vertex { kind: VertexKind::Marker, rot: vec![a, b] });
            return;
        }
        self.opposite[xp] = yp;
        self.opposite[yp] = xp;
    }

    fn fresh(&mut self) -> Dart {
        self.opposite.push(usize::MAX);
        self.dead.push(false);
        self.opposite.len() - 1
    }

    /// Compact into a diagram with the given boundary stubs (still-live
    /// stub darts) and an outer mark chosen by the builder default unless
    /// `outer` survives.
    pub fn finish(self, boundary: Vec<Dart>, outer: Option<Dart>) -> ArrowDiagram {
        let n = self.opposite.len();
        let mut to_new = vec![usize::MAX; n];
        let mut next = 0;
        for d in 0..n {
            if !self.dead[d] {
                to_new[d] = next;
                next += 1;
            }
        }
        let mut opposite = vec![0; next];
        for d in 0..n {
            if !self.dead[d] {
                opposite[to_new[d]] = to_new[self.opposite[d]];
            }
        }
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex {
                kind: match &v.kind {
                    VertexKind::Crossing { over } => {
                        let a = to_new[over[0]];
                        let b = to_new[over[1]];
                        VertexKind::Crossing { over: [a.min(b), a.max(b)] }
                    }
                    VertexKind::Arrow { head } => VertexKind::Arrow { head: to_new[*head] },
                    VertexKind::Marker => VertexKind::Marker,
                },
                rot: v.rot.iter().map(|&x| to_new[x]).collect(),
            })
            .collect();
        let boundary: Vec<Dart> = boundary.iter().map(|&x| to_new[x]).collect();
        let mut builder_out = ArrowDiagram::from_parts(opposite, vertices, boundary, None);
        let mark = outer.and_then(|m| {
            if m < n && to_new[m] != usize::MAX {
                Some(to_new[m])
            } else {
                None
            }
        });
        if let Some(m) = mark {
            builder_out =
                ArrowDiagram::from_parts(builder_out.opposite_table().to_vec(), builder_out.vertices().to_vec(), builder_out.boundary().to_vec(), Some(m));
            return builder_out;
        }
        // rebuild through the builder to pick a default outer mark
        let mut b = DiagramBuilder::new();
        let _ = &mut b;
        default_outer(builder_out)
    }
}

fn default_outer(d: ArrowDiagram) -> ArrowDiagram {
    if d.dart_count() == 0 {
        return d;
    }
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
    ArrowDiagram::from_parts(d.opposite_table().to_vec(), d.vertices().to_vec(), d.boundary().to_vec(), pick)
}

/// Horizontal composition: NE/SE of `a` glued to NW/SW of `b`.
pub fn compose(a: &FourTangle, b: &FourTangle) -> FourTangle {
    let mut s = Splicer::from_diagram(a.diagram());
    let off = s.append(b.diagram());
    let a_bd = a.diagram().boundary().to_vec();
    let b_bd: Vec<Dart> = b.diagram().boundary().iter().map(|&x| x + off).collect();
    s.splice(a_bd[NE], b_bd[NW]);
    s.splice(a_bd[SE], b_bd[SW]);
    let boundary = vec![a_bd[NW], b_bd[NE], b_bd[SE], a_bd[SW]];
    let d = s.finish(boundary, None);
    FourTangle::new(d).expect("composition of valid tangles is valid")
}

/// Close `t` composed with `m` half-twists using the two standard side
/// arcs (NW to SW around the left, NE to SE around the right).
pub fn twist_closure(t: &FourTangle, m: usize, sign: Sign) -> ArrowDiagram {
    let c = compose(t, &half_twists(m, sign));
    let bd = c.diagram().boundary().to_vec();
    let mut s = Splicer::from_diagram(c.diagram());
    s.splice(bd[NW], bd[SW]);
    s.splice(bd[NE], bd[SE]);
    s.finish(Vec::new(), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{jones, jones_in_t, kauffman_bracket, skein_bracket};
    use crate::poly::LaurentPolynomial;

    #[test]
    fn half_twists_shape() {
        for m in 0..6 {
            let t = half_twists(m, Sign::Positive);
            assert!(t.diagram().validate().passed(), "{}", t.diagram().validate());
            assert_eq!(t.crossings(), m);
            assert_eq!(t.diagram().stats().arrows, 0);
        }
    }

    #[test]
    fn mirror_of_half_twists_is_negative() {
        for m in [1, 2, 6] {
            let pos = half_twists(m, Sign::Positive);
            let neg = half_twists(m, Sign::Negative);
            assert!(pos.mirror().canonical_eq(&neg));
            assert!(!pos.canonical_eq(&neg));
        }
    }

    #[test]
    fn compose_is_twist_addition() {
        for (i, j) in [(0, 0), (1, 2), (3, 3), (0, 4)] {
            let lhs = compose(&half_twists(i, Sign::Positive), &half_twists(j, Sign::Positive));
            let rhs = half_twists(i + j, Sign::Positive);
            assert!(lhs.canonical_eq(&rhs), "compose({i},{j})");
            assert_eq!(lhs.crossings(), i + j);
        }
    }

    #[test]
    fn compose_associative_on_samples() {
        let a = half_twists(1, Sign::Positive);
        let b = half_twists(2, Sign::Negative);
        let c = clasp(Sign::Positive);
        let left = compose(&compose(&a, &b), &c);
        let right = compose(&a, &compose(&b, &c));
        assert!(left.canonical_eq(&right));
    }

    #[test]
    fn closure_of_trivial_tangle_is_one_unknot() {
        let d = twist_closure(&half_twists(0, Sign::Positive), 0, Sign::Positive);
        assert!(d.validate().passed(), "{}", d.validate());
        let s = d.stats();
        assert_eq!((s.crossings, s.components), (0, 1));
    }

    #[test]
    fn closure_crossing_and_component_counts() {
        let d = twist_closure(&half_twists(0, Sign::Positive), 7, Sign::Positive);
        assert!(d.validate().passed());
        let s = d.stats();
        assert_eq!((s.crossings, s.components), (7, 1));
        assert_eq!(s.writhe, 7);

        let even = twist_closure(&half_twists(0, Sign::Positive), 4, Sign::Positive);
        assert_eq!(even.stats().components, 2);
    }

    #[test]
    fn positive_trefoil_jones_is_the_right_handed_one() {
        let d = twist_closure(&half_twists(0, Sign::Positive), 3, Sign::Positive);
        assert_eq!(d.stats().writhe, 3);
        let vt = jones_in_t(&d).unwrap().expect("knot exponents");
        // V(right trefoil) = -t^4 + t^3 + t
        assert_eq!(vt, LaurentPolynomial::from_pairs([(4, -1), (3, 1), (1, 1)]), "got {vt}");
    }

    #[test]
    fn trefoil_bracket_matches_skein_oracle() {
        let d = twist_closure(&half_twists(0, Sign::Positive), 3, Sign::Positive);
        assert_eq!(kauffman_bracket(&d).unwrap(), skein_bracket(&d).unwrap());
    }

    #[test]
    fn mirror_trefoil_jones_is_variable_inverted() {
        let d = twist_closure(&half_twists(0, Sign::Positive), 3, Sign::Positive);
        let j = jones(&d).unwrap();
        let jm = jones(&d.mirror()).unwrap();
        assert_eq!(jm, j.invert_variable());
        assert_ne!(jm, j);
    }

    #[test]
    fn figure_eight_from_clasp() {
        // the 4-crossing twist knot: clasp plus two negative half-twists
        let d = twist_closure(&clasp(Sign::Positive), 2, Sign::Negative);
        assert_eq!(d.stats().crossings, 4);
        assert_eq!(d.stats().components, 1);
        let vt = jones_in_t(&d).unwrap().expect("knot");
        // figure-eight: t^-2 - t^-1 + 1 - t + t^2
        assert_eq!(
            vt,
            LaurentPolynomial::from_pairs([(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]),
            "got {vt}"
        );
    }
}
