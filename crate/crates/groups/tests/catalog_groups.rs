use lode_exactnum::Cyclo;
use lode_groups::{catalog_generators, catalog_group, consts, named_matrix, GroupError, GroupId, MatGroup};
use lode_mpoly::{MPoly, Mat};
use std::sync::OnceLock;

fn closed() -> &'static Vec<(GroupId, MatGroup)> {
    static C: OnceLock<Vec<(GroupId, MatGroup)>> = OnceLock::new();
    C.get_or_init(|| GroupId::ALL.into_iter().map(|g| (g, catalog_generators(g).closure(2000).unwrap())).collect())
}

fn group(id: GroupId) -> &'static MatGroup {
    &closed().iter().find(|(g, _)| *g == id).unwrap().1
}

#[test]
fn orders() {
    let want = [
        (GroupId::G168, 168, 168),
        (GroupId::G168xC3, 504, 168),
        (GroupId::H216SL3, 648, 216),
        (GroupId::H72SL3, 216, 72),
        (GroupId::F36SL3, 108, 36),
        (GroupId::A6SL3, 1080, 360),
        (GroupId::A5, 60, 60),
        (GroupId::A5xC3, 180, 60),
    ];
    for (id, n, pn) in want {
        let g = group(id);
        assert_eq!(g.order().unwrap(), n, "{id}");
        assert_eq!(g.projective_order().unwrap(), pn, "{id}");
        assert!(g.generators_in_sl3(), "{id}");
        assert!(g.elements_in_sl3().unwrap(), "{id}");
    }
    assert_eq!(group(GroupId::G168xC3).order().unwrap(), 3 * group(GroupId::G168).order().unwrap());
}

#[test]
fn invariant_frame_preserves_orders() {
    for id in [GroupId::G168, GroupId::A6SL3] {
        assert_eq!(catalog_group(id).closure(2000).unwrap().order().unwrap(), group(id).order().unwrap());
    }
}

#[test]
fn omega_scalars() {
    let w = Mat::scalar(3, &consts::omega());
    for id in [GroupId::G168xC3, GroupId::H216SL3, GroupId::A6SL3, GroupId::A5xC3] {
        let g = group(id);
        let sc = g.scalar_subgroup().unwrap();
        assert_eq!(sc.len(), 3, "{id}");
        assert!(sc.contains(&w.embed(g.conductor).unwrap()), "{id}");
    }
    for id in [GroupId::G168, GroupId::A5] {
        assert_eq!(group(id).scalar_subgroup().unwrap().len(), 1);
    }
}

#[test]
fn generator_relations() {
    let s = named_matrix("S").unwrap();
    assert!(s.pow(7).is_identity());
    assert!(!s.is_identity());
    let t = named_matrix("T").unwrap();
    assert!(t.pow(3).is_identity());
    assert_eq!(catalog_generators(GroupId::G168).num_generators(), 3);
    assert_eq!(catalog_generators(GroupId::A6SL3).num_generators(), 4);
    assert!(named_matrix("Q").is_none());
    let z = named_matrix("Z").unwrap();
    assert!(z.is_scalar() && z.pow(3).is_identity());
}

#[test]
fn molien_series() {
    let want: [(GroupId, [u64; 13]); 8] = [
        (GroupId::G168, [1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2]),
        (GroupId::G168xC3, [1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 2]),
        (GroupId::H216SL3, [1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1]),
        (GroupId::H72SL3, [1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 3]),
        (GroupId::F36SL3, [1, 0, 0, 0, 0, 0, 2, 0, 0, 1, 0, 0, 5]),
        (GroupId::A6SL3, [1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 2]),
        (GroupId::A5, [1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 3, 0, 4]),
        (GroupId::A5xC3, [1, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 4]),
    ];
    for (id, m) in want {
        assert_eq!(group(id).molien(12).unwrap(), m, "{id}");
    }
}

#[test]
fn invariance_and_characters() {
    let g = catalog_group(GroupId::G168);
    let x1 = MPoly::var(3, 0);
    assert!(!g.is_invariant(&x1).unwrap());
    let f4 = MPoly::from_int_terms(3, &[(1, &[3, 1, 0]), (1, &[0, 3, 1]), (1, &[1, 0, 3])]);
    assert!(g.is_invariant(&f4).unwrap());
    let e = g.semi_character(&(&x1 + &MPoly::var(3, 1)));
    assert!(matches!(e, Err(GroupError::NotSemiInvariant(_))));
    let chi = catalog_group(GroupId::A5xC3).semi_character(&MPoly::from_int_terms(3, &[(1, &[2, 0, 0]), (1, &[0, 1, 1])])).unwrap();
    assert_eq!(chi.len(), 4);
    assert!(chi[..3].iter().all(|(_, c)| c.is_one()));
    assert_eq!(chi[3].1, consts::omega().square().embed(15).unwrap());
    assert!(matches!(g.semi_character(&MPoly::zero(3)), Err(GroupError::NotSemiInvariant(_))));
}

#[test]
fn closure_bound_and_lookup() {
    assert!(matches!(catalog_generators(GroupId::A6SL3).closure(100), Err(GroupError::ClosureBoundExceeded(100))));
    assert!(matches!(catalog_generators(GroupId::A5).order(), Err(GroupError::NotClosed)));
    assert_eq!("A6_SL3".parse::<GroupId>().unwrap(), GroupId::A6SL3);
    assert_eq!("g168xc3".parse::<GroupId>().unwrap(), GroupId::G168xC3);
    assert!(matches!("G42".parse::<GroupId>(), Err(GroupError::UnknownGroup(_))));
    for id in GroupId::ALL {
        assert_eq!(id.key().parse::<GroupId>().unwrap(), id);
    }
    assert_eq!(Cyclo::one().conductor(), 1);
}
