use super::*;
use crate::fixtures;

#[test]
fn empty_diagram_is_valid_and_zero() {
    let d = ArrowDiagram::empty();
    assert!(d.validate().passed());
    let s = d.stats();
    assert_eq!((s.crossings, s.arrows, s.components, s.writhe), (0, 0, 0, 0));
    assert!(!s.writhe_defined);
}

#[test]
fn marker_circle_valid() {
    let d = fixtures::marker_circle();
    assert!(d.validate().passed(), "{}", d.validate());
    let (walks, _) = d.faces();
    assert_eq!(walks.len(), 2);
    let s = d.stats();
    assert_eq!((s.crossings, s.arrows, s.components), (0, 0, 1));
}

#[test]
fn kink_unknot_valid() {
    for over in [false, true] {
        let d = fixtures::kink_unknot(over);
        assert!(d.validate().passed(), "{}", d.validate());
        let (walks, _) = d.faces();
        assert_eq!(walks.len(), 3);
        let s = d.stats();
        assert_eq!((s.crossings, s.arrows, s.components), (1, 0, 1));
        assert_eq!(s.writhe.abs(), 1);
    }
    // the two kinks have opposite writhe
    let a = fixtures::kink_unknot(false).stats().writhe;
    let b = fixtures::kink_unknot(true).stats().writhe;
    assert_eq!(a + b, 0);
}

#[test]
fn mirror_is_involutive_and_negates_writhe() {
    for d in [fixtures::kink_unknot(true), fixtures::arrow_circle(3, false)] {
        let m = d.mirror();
        assert!(m.validate().passed(), "{}", m.validate());
        assert!(m.mirror().canonical_eq(&d));
        assert_eq!(m.stats().writhe, -d.stats().writhe);
    }
}

#[test]
fn canonical_code_relabel_invariant() {
    let d = fixtures::kink_unknot(true);
    let n = d.dart_count();
    // a fixed scrambling permutation
    let perm: Vec<usize> = (0..n).map(|i| (i * 3 + 1) % n).collect();
    let mut check = perm.clone();
    check.sort_unstable();
    assert_eq!(check, (0..n).collect::<Vec<_>>());
    let r = d.relabeled(&perm);
    assert!(r.validate().passed(), "{}", r.validate());
    assert_eq!(d.canonical_code(), r.canonical_code());
}

#[test]
fn canonical_code_sees_hole_placement_and_arrow_count() {
    let a = fixtures::arrow_circle(2, false);
    let b = fixtures::arrow_circle(2, true);
    assert!(a.validate().passed());
    assert!(b.validate().passed());
    assert_ne!(a.canonical_code(), b.canonical_code());
    assert_ne!(
        fixtures::arrow_circle(2, false).canonical_code(),
        fixtures::arrow_circle(3, false).canonical_code()
    );
}

#[test]
fn broken_involution_reported() {
    let good = fixtures::kink_unknot(true);
    let mut opp = good.opposite_table().to_vec();
    opp[0] = 0; // fixed point
    let bad = ArrowDiagram::from_parts(opp, good.vertices().to_vec(), vec![], good.outer_mark());
    let rep = bad.validate();
    assert!(!rep.passed());
    assert!(rep
        .violations
        .iter()
        .any(|v| matches!(v, Violation::OppositeHasFixedPoint { .. } | Violation::OppositeNotInvolutive { .. })));
}

#[test]
fn wrong_arity_reported() {
    let good = fixtures::kink_unknot(true);
    let mut vs = good.vertices().to_vec();
    vs[0].rot.pop();
    let bad = ArrowDiagram::from_parts(good.opposite_table().to_vec(), vs, vec![], good.outer_mark());
    let rep = bad.validate();
    assert!(rep.violations.iter().any(|v| matches!(v, Violation::RotationArity { got: 3, .. })));
}

#[test]
fn json_round_trip() {
    for d in [fixtures::marker_circle(), fixtures::kink_unknot(false), fixtures::arrow_circle(4, true)] {
        let s = d.to_json();
        let back = from_json(&s).expect("round trip");
        assert!(back.canonical_eq(&d));
        assert_eq!(back.to_json(), s);
        // stats preserved
        assert_eq!(back.stats(), d.stats());
    }
}

#[test]
fn json_rejects_garbage_and_versions() {
    let d = fixtures::kink_unknot(true);
    let s = d.to_json();
    let truncated = &s[..s.len() / 2];
    assert!(matches!(from_json(truncated), Err(CodecError::Json(_))));
    let v2 = s.replace("\"version\":1", "\"version\":2");
    assert!(matches!(from_json(&v2), Err(CodecError::UnsupportedVersion(2))));
}

#[test]
fn strands_cover_every_dart_once() {
    for d in [fixtures::marker_circle(), fixtures::kink_unknot(true), fixtures::arrow_circle(3, false)] {
        let mut seen = vec![0usize; d.dart_count()];
        for s in d.strands() {
            for &x in &s.darts {
                seen[x] += 1;
            }
        }
        assert!(seen.iter().all(|&c| c == 1), "strand cover {seen:?}");
    }
}
