mod common;

use common::*;
use proptest::prelude::*;
use slopekit::bracket::{jones, StateSumConfig};
use slopekit::diagram::{braid_closure, try_braid_closure};
use slopekit::fixtures::FixtureSet;
use slopekit::fox::alexander_knot;
use slopekit::laurent::{LPoly1, LPoly2};
use slopekit::twistfam::{
    check_cor26, distinctness_report, dual_polynomial, family_alexander, format_gate, parse_gate, twisted_alexander,
    AnnotatedPair, TwistError, TwistFamily,
};

fn axis_pair(s: usize, word: &[i32]) -> AnnotatedPair {
    AnnotatedPair::from_built(braid_closure(s, word, true)).unwrap()
}

/// Words whose closure is a knot, so the axis pair has two components.
fn knot_word(s: usize) -> impl Strategy<Value = Vec<i32>> {
    let gens: Vec<i32> = (1..s as i32).flat_map(|g| [g, -g]).collect();
    prop::collection::vec(prop::sample::select(gens), 1..6)
        .prop_filter("closure is a knot", move |w| braid_closure(s, w, false).diagram.component_count() == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Twisting along the braid axis appends full twists to the braid.
    #[test]
    fn axis_twists_append_full_twists(word in knot_word(3), n in -2i64..=2) {
        let pair = axis_pair(3, &word);
        prop_assert_eq!(pair.omega(), 3);
        let mut longer = word.clone();
        longer.extend(full_twist_word(3, n));
        let oracle = burau_alexander(3, &longer);
        let twisted = pair.insert_full_twists(n).unwrap();
        prop_assert!(alexander_knot(&twisted).unwrap().equal_up_to_units(&oracle));
        let closed = braid_closure(3, &longer, false).diagram;
        let cfg = StateSumConfig::default();
        prop_assert_eq!(jones(&twisted, &cfg).unwrap(), jones(&closed, &cfg).unwrap());
    }

    #[test]
    fn substitution_route_matches_diagrams(word in knot_word(3), n in -3i64..=3) {
        let pair = axis_pair(3, &word);
        let fam = TwistFamily::from_pair(&pair).unwrap();
        let a = twisted_alexander(&pair, n).unwrap();
        prop_assert!(family_alexander(&fam, n).unwrap().equal_up_to_units(&a));
    }

    #[test]
    fn keeping_the_circle_composes(n in -2i64..=2, m in -2i64..=2) {
        let pair = FixtureSet::embedded().pair("trefoil_meridian").unwrap();
        let kept = pair.twist_keeping_circle(n).unwrap();
        let a = twisted_alexander(&kept, m).unwrap();
        prop_assert!(a.equal_up_to_units(&twisted_alexander(&pair, n + m).unwrap()));
    }
}

#[test]
fn two_strand_axis_gives_torus_knots() {
    let pair = axis_pair(2, &[1]);
    assert_eq!(pair.omega(), 2);
    let fam = TwistFamily::from_pair(&pair).unwrap();
    for n in -3..=3i64 {
        let q = 2 * n + 1;
        let want = burau_alexander(2, &vec![q.signum() as i32; q.unsigned_abs() as usize]);
        assert!(family_alexander(&fam, n).unwrap().equal_up_to_units(&want), "n={n}");
        assert!(twisted_alexander(&pair, n).unwrap().equal_up_to_units(&want), "n={n}");
    }
}

#[test]
fn zero_twists_drop_the_circle() {
    let f = FixtureSet::embedded();
    for (name, pair) in f.pairs().unwrap() {
        let k = delete_component(pair.diagram(), pair.c());
        let want = if k.crossing_count() == 0 { LPoly1::one() } else { alexander_knot(&k).unwrap() };
        assert!(twisted_alexander(&pair, 0).unwrap().equal_up_to_units(&want), "{name}");
    }
}

#[test]
fn family_fixtures_reproduce_named_knots() {
    let f = FixtureSet::embedded();
    let fam1 = f.family("family1").unwrap();
    let fam2 = f.family("family2").unwrap();
    let knot = |n: &str| alexander_knot(&f.diagram(n).unwrap()).unwrap();
    assert!(family_alexander(&fam1, 0).unwrap().equal_up_to_units(&knot("pretzel_-5_-3_3")));
    assert_eq!(family_alexander(&fam1, 1).unwrap(), knot("9_42"));
    assert_eq!(family_alexander(&fam1, -1).unwrap(), knot("9_42"));
    assert_eq!(family_alexander(&fam2, 1).unwrap(), "2*t^-2 - 6*t^-1 + 7 - 6*t + 2*t^2".parse().unwrap());
    assert!(family_alexander(&fam2, 1).unwrap().equal_up_to_units(&knot("8_6")));
}

#[test]
fn reconstructed_pair_has_the_first_family() {
    let f = FixtureSet::embedded();
    let pair = f.pair("family1_pair").unwrap().with_positive_omega().unwrap();
    let fam = TwistFamily::from_pair(&pair).unwrap();
    assert!(fam.delta2.equal_up_to_units(&f.family("family1").unwrap().delta2));
    let k1 = pair.insert_full_twists(1).unwrap();
    let v = jones(&k1, &StateSumConfig::default()).unwrap();
    let want: LPoly1 = f.polynomial("jones_9_42").unwrap();
    assert!(v.equal_up_to_mirror(&want), "{v}");
}

#[test]
#[allow(clippy::reversed_empty_ranges)]
fn families_pair_n_with_minus_n() {
    let f = FixtureSet::embedded();
    for name in ["family1", "family2"] {
        let r = distinctness_report(&f.family(name).unwrap(), -3..=3).unwrap();
        assert_eq!(r.classes, vec![vec![-3, 3], vec![-2, 2], vec![-1, 1], vec![0]], "{name}");
    }
    let empty = distinctness_report(&f.family("family1").unwrap(), 1..=0).unwrap();
    assert!(empty.members.is_empty());
}

#[test]
fn duality_on_fixtures() {
    let f = FixtureSet::embedded();
    for name in ["family1", "family2"] {
        let fam = f.family(name).unwrap();
        assert_eq!(dual_polynomial(&fam.delta2), fam.delta2, "{name}");
        assert!(check_cor26(&fam, -5..=5).unwrap().all_pass());
    }
    // A family with no y-symmetry still passes, since its dual is built from it.
    let lopsided = TwistFamily::new("1 + x*y - x^2*y^2 + y^3".parse::<LPoly2>().unwrap(), 1);
    assert!(check_cor26(&lopsided, -4..=4).unwrap().all_pass());
    assert!(!dual_polynomial(&lopsided.delta2).equal_up_to_units(&lopsided.delta2));
    let wide = TwistFamily::new(LPoly2::one(), 2);
    assert_eq!(check_cor26(&wide, 0..=1), Err(TwistError::OmegaNotOne(2)));
    let negative = TwistFamily::new(LPoly2::one(), -1);
    assert_eq!(family_alexander(&negative, 1), Err(TwistError::NonPositiveOmega(-1)));
}

#[test]
fn gates() {
    let f = FixtureSet::embedded();
    for (name, pair) in f.pairs().unwrap() {
        let text = format_gate(pair.gate());
        let again = AnnotatedPair::new(pair.diagram().clone(), pair.c(), &parse_gate(&text).unwrap()).unwrap();
        assert_eq!(again, pair, "{name}");
    }
    let pair = f.pair("torus_axis").unwrap();
    assert!(AnnotatedPair::new(pair.diagram().clone(), pair.c(), &[]).is_err());
    assert!(AnnotatedPair::new(pair.diagram().clone(), pair.c(), &pair.gate()[..1]).is_err());
    assert!(AnnotatedPair::new(f.diagram("3_1").unwrap(), 0, &[(1, 1)]).is_err());
    assert!(parse_gate("[3*]").is_err());
}

#[test]
fn reversed_circle_is_normalized() {
    let pair = axis_pair(3, &[1, -2, 1, -2]);
    let rev = pair.diagram().reverse_component(pair.c()).unwrap();
    let gate: Vec<_> = pair.gate().iter().map(|&(a, s)| (a, -s)).collect();
    let flipped = AnnotatedPair::new(rev, pair.c(), &gate).unwrap();
    assert_eq!(flipped.omega(), -3);
    let fixed = flipped.with_positive_omega().unwrap();
    assert_eq!(fixed.omega(), 3);
    for n in -2..=2 {
        assert!(twisted_alexander(&fixed, n).unwrap().equal_up_to_units(&twisted_alexander(&pair, n).unwrap()));
    }
    assert!(try_braid_closure(3, &[3], true).is_err());
}
