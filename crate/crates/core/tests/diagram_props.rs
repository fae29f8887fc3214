use proptest::prelude::*;
use superskein::diagram::faces::is_planar;
use superskein::diagram::{braid_closure, BraidWord, DiagramKey, LinkDiagram};

fn braid() -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(|n| {
        let letter = (1..n as i32).prop_flat_map(|i| prop::sample::select(vec![i, -i]));
        prop::collection::vec(letter, 1..8).prop_map(move |letters| BraidWord { strands: n, letters })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn switch_and_smooth_laws(w in braid(), pick in 0usize..64) {
        let d = braid_closure(&w);
        prop_assert!(is_planar(&d));
        let c = pick % d.num_crossings();
        let s = d.switch_crossing(c).unwrap();
        let o = d.smooth_crossing(c).unwrap();
        prop_assert_eq!(s.writhe(), d.writhe() - 2 * d.sign(c) as i64);
        prop_assert_eq!(o.num_crossings(), d.num_crossings() - 1);
        prop_assert_eq!(s.switch_crossing(c).unwrap(), d.clone());
        prop_assert!(is_planar(&s) && is_planar(&o));
        // The (L₊, L₋, L₀) writhes are (ω₀+1, ω₀−1, ω₀).
        let (plus, minus) = if d.sign(c) > 0 { (&d, &s) } else { (&s, &d) };
        let w0 = o.writhe();
        prop_assert_eq!((plus.writhe(), minus.writhe()), (w0 + 1, w0 - 1));
        let dc = d.component_count() as i64;
        prop_assert_eq!((o.component_count() as i64 - dc).abs(), 1);
    }

    #[test]
    fn mirror_and_union(w in braid(), v in braid()) {
        let d = braid_closure(&w);
        let e = braid_closure(&v);
        prop_assert_eq!(d.mirror().mirror(), d.clone());
        prop_assert_eq!(d.mirror().writhe(), -d.writhe());
        let u = d.disjoint_union(&e);
        prop_assert_eq!(u.component_count(), d.component_count() + e.component_count());
        prop_assert_eq!(u.num_crossings(), d.num_crossings() + e.num_crossings());
        prop_assert!(is_planar(&u));
    }

    #[test]
    fn json_round_trip_is_identity(w in braid()) {
        let d = braid_closure(&w);
        let back = LinkDiagram::from_json(&d.to_json()).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(back.to_json(), d.to_json());
        prop_assert_eq!(DiagramKey::of(&back), DiagramKey::of(&d));
    }

    /// Rotating the braid word conjugates it, so the closures are the same
    /// diagram with a different labeling.
    #[test]
    fn canonical_key_ignores_labels(w in braid(), r in 0usize..8) {
        let mut rotated = w.clone();
        let k = r % w.letters.len();
        rotated.letters.rotate_left(k);
        prop_assert_eq!(DiagramKey::of(&braid_closure(&w)), DiagramKey::of(&braid_closure(&rotated)));
    }
}
