use std::collections::BTreeSet;

use associahedra::associahedron::{build_k, degeneracy, embed, Bracketing};
use associahedra::cubeahedron::{compatible, design_tubes, tubing_to_expression, DesignTube, DesignTubing};
use associahedra::multiplihedron::{bracketing_to_flat, flat_to_bracketing, FlatExpression};
use associahedra::trees::{bracketing_to_tree, loday_point, tree_to_bracketing};
use proptest::prelude::*;

/// A bracketing on `n` letters built by keeping each proposed bracket that
/// crosses none already kept.
fn bracketing(max_letters: usize) -> impl Strategy<Value = Bracketing> {
    (2..=max_letters).prop_flat_map(|n| {
        prop::collection::vec((1..=n, 1..=n), 0..2 * n).prop_map(move |pairs| {
            let mut kept: Vec<(usize, usize)> = Vec::new();
            for (a, b) in pairs {
                let (l, r) = (a.min(b), a.max(b));
                let crosses = |&(x, y): &(usize, usize)| (x < l && l <= y && y < r) || (l < x && x <= r && r < y);
                if l < r && (l, r) != (1, n) && !kept.iter().any(crosses) {
                    kept.push((l, r));
                }
            }
            Bracketing::new(n, kept).expect("non-crossing by construction")
        })
    })
}

/// A maximal bracketing reached by refining at random.
fn vertex(max_letters: usize) -> impl Strategy<Value = Bracketing> {
    (bracketing(max_letters), any::<u64>()).prop_map(|(b, seed)| {
        let n = b.letters();
        let mut brackets: BTreeSet<(usize, usize)> = b.brackets().clone();
        let mut state = seed;
        let mut candidates: Vec<(usize, usize)> =
            (1..=n).flat_map(|l| (l + 1..=n).map(move |r| (l, r))).filter(|&t| t != (1, n)).collect();
        for i in (1..candidates.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            candidates.swap(i, (state >> 33) as usize % (i + 1));
        }
        for (l, r) in candidates {
            let crosses = brackets.iter().any(|&(x, y)| (x < l && l <= y && y < r) || (l < x && x <= r && r < y));
            if !crosses {
                brackets.insert((l, r));
            }
        }
        Bracketing::new(n, brackets).unwrap()
    })
}

fn design_tubing(max_nodes: usize) -> impl Strategy<Value = DesignTubing> {
    (1..=max_nodes).prop_flat_map(|n| {
        prop::collection::vec(any::<prop::sample::Index>(), 0..2 * n).prop_map(move |picks| {
            let all = design_tubes(n);
            let mut kept: Vec<DesignTube> = Vec::new();
            for p in picks {
                let t = all[p.index(all.len())];
                if !kept.contains(&t) && kept.iter().all(|k| compatible(k, &t)) {
                    kept.push(t);
                }
            }
            DesignTubing::new(n, kept).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn bracketing_text_round_trips(b in bracketing(10)) {
        let parsed: Bracketing = b.to_string().parse().unwrap();
        prop_assert_eq!(parsed, b);
    }

    #[test]
    fn maximal_bracketings_are_binary_trees(b in vertex(9)) {
        prop_assert_eq!(b.len(), b.letters() - 2);
        let t = bracketing_to_tree(&b).unwrap();
        prop_assert!(t.is_binary());
        prop_assert_eq!(tree_to_bracketing(&t).unwrap(), b.clone());
        let n = b.letters() as u64;
        prop_assert_eq!(loday_point(&t).unwrap().sum(), n * (n - 1) / 2);
    }

    #[test]
    fn trees_and_bracketings_round_trip(b in bracketing(9)) {
        let t = bracketing_to_tree(&b).unwrap();
        prop_assert_eq!(t.leaf_count(), b.letters());
        prop_assert_eq!(tree_to_bracketing(&t).unwrap(), b);
    }

    #[test]
    fn faces_lie_below_their_coarsenings(b in bracketing(7)) {
        let k = build_k(b.letters()).unwrap();
        let x = k.index_of(&b.to_string()).unwrap();
        prop_assert_eq!(k.rank(x), b.dimension());
        for &br in b.brackets() {
            let coarser = Bracketing::new(b.letters(), b.brackets().iter().copied().filter(|&c| c != br)).unwrap();
            prop_assert!(k.lt(x, k.index_of(&coarser.to_string()).unwrap()));
        }
    }

    #[test]
    fn substitution_counts(outer in bracketing(6), inner in bracketing(6), slot in any::<prop::sample::Index>()) {
        let k = slot.index(outer.letters()) + 1;
        let e = embed(&outer, k, &inner).unwrap();
        prop_assert_eq!(e.letters(), outer.letters() + inner.letters() - 1);
        prop_assert_eq!(e.len(), outer.len() + inner.len() + 1);
        prop_assert!(e.contains((k, k + inner.letters() - 1)));
    }

    #[test]
    fn degeneracy_drops_a_letter(b in bracketing(9), j in any::<prop::sample::Index>()) {
        prop_assume!(b.letters() >= 3);
        let d = degeneracy(&b, j.index(b.letters()) + 1).unwrap();
        prop_assert_eq!(d.letters(), b.letters() - 1);
        prop_assert!(d.len() <= b.len());
    }

    #[test]
    fn flat_expressions_round_trip(b in bracketing(10)) {
        let e = bracketing_to_flat(&b).unwrap();
        let parsed: FlatExpression = e.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, &e);
        prop_assert_eq!(flat_to_bracketing(&e).unwrap(), b);
    }

    #[test]
    fn tubings_give_distinct_valid_expressions(u in design_tubing(6), v in design_tubing(6)) {
        let (a, b) = (tubing_to_expression(&u).unwrap(), tubing_to_expression(&v).unwrap());
        prop_assert_eq!(flat_to_bracketing(&a).unwrap().letters(), u.nodes() + 2);
        if u.nodes() == v.nodes() {
            prop_assert_eq!(u == v, a == b);
        }
    }

    #[test]
    fn compatibility_is_symmetric(u in design_tubing(6)) {
        for a in design_tubes(u.nodes()) {
            for b in design_tubes(u.nodes()) {
                prop_assert_eq!(compatible(&a, &b), compatible(&b, &a));
            }
        }
        let parsed = DesignTubing::parse(u.nodes(), &u.to_string()).unwrap();
        prop_assert_eq!(parsed, u);
    }

    #[test]
    fn tubings_extend_to_maximal(u in design_tubing(5)) {
        let mut tubes: Vec<DesignTube> = u.tubes().iter().copied().collect();
        for t in design_tubes(u.nodes()) {
            if !tubes.contains(&t) && tubes.iter().all(|k| compatible(k, &t)) {
                tubes.push(t);
            }
        }
        prop_assert_eq!(tubes.len(), u.nodes());
    }
}
