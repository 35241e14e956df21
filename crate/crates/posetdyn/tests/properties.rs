//! Randomized invariants over arbitrary small posets.

use std::sync::Arc;

use proptest::prelude::*;

use posetdyn::canon::{canonical_form, is_isomorphic};
use posetdyn::dynamics::{k_promotion, k_promotion_inverse, rowmotion_set};
use posetdyn::io::{parse_poset, serialize_poset};
use posetdyn::poset::Poset;
use posetdyn::IncreasingTableau;

/// Random poset on up to 7 elements from a random relation among index pairs.
fn arb_poset() -> impl Strategy<Value = Poset> {
    (1usize..=7)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, picks)| {
            let mut rel = Vec::new();
            let mut k = 0;
            for a in 0..n {
                for b in (a + 1)..n {
                    if picks[k] {
                        rel.push((a, b));
                    }
                    k += 1;
                }
            }
            Poset::from_covers(n, &rel).expect("pairs a<b are acyclic")
        })
}

/// Random increasing tableau: ranks plus a weakly increasing random offset.
fn arb_tableau() -> impl Strategy<Value = IncreasingTableau> {
    (arb_poset(), proptest::collection::vec(0u16..3, 7), 0u16..3).prop_map(
        |(p, offsets, slack)| {
            let p = Arc::new(p);
            let rd = p.rank_data();
            let mut labels: Vec<u16> = (0..p.n())
                .map(|x| rd.elem_rank[x] as u16 + 1 + offsets[x])
                .collect();
            // push labels up along covers until strictly increasing
            for &e in p.linear_extension() {
                let e = e as usize;
                let lo = p
                    .lower_covers(e)
                    .iter()
                    .map(|&y| labels[y as usize] + 1)
                    .max()
                    .unwrap_or(1);
                labels[e] = labels[e].max(lo);
            }
            let q = labels.iter().copied().max().unwrap_or(1) + slack;
            IncreasingTableau::new(&p, q as usize, labels).expect("constructed to be increasing")
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn poset_json_round_trip(p in arb_poset()) {
        let text = serialize_poset(&p);
        let back = parse_poset(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(serialize_poset(&back), text);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(p in arb_poset(), seed in any::<u64>()) {
        use rand::prelude::*;
        use rand::rngs::StdRng;
        let mut rng = StdRng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..p.n()).collect();
        perm.shuffle(&mut rng);
        let q = p.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&p), canonical_form(&q));
        prop_assert!(is_isomorphic(&p, &q));
    }

    #[test]
    fn covers_equal_reduction_of_closure(p in arb_poset()) {
        // rebuilding from the full order relation reproduces the covers
        let mut rel = Vec::new();
        for a in 0..p.n() {
            for b in 0..p.n() {
                if p.lt(a, b) {
                    rel.push((a, b));
                }
            }
        }
        let q = Poset::from_covers(p.n(), &rel).unwrap();
        prop_assert_eq!(q.covers(), p.covers());
    }

    #[test]
    fn rowmotion_image_is_an_ideal(p in arb_poset()) {
        let ideals = p.enumerate_ideals().unwrap();
        for i in &ideals {
            prop_assert!(p.is_ideal(&rowmotion_set(&p, i)));
        }
        // and rowmotion is injective
        let mut images: Vec<_> = ideals.iter().map(|i| rowmotion_set(&p, i)).collect();
        images.sort();
        images.dedup();
        prop_assert_eq!(images.len(), ideals.len());
    }

    #[test]
    fn promotion_round_trips(t in arb_tableau()) {
        prop_assert_eq!(k_promotion_inverse(&k_promotion(&t)), t.clone());
        prop_assert_eq!(k_promotion(&k_promotion_inverse(&t)), t);
    }

    #[test]
    fn promotion_rotates_content(t in arb_tableau()) {
        let rotated = t.content_vector().rotate_left_once();
        prop_assert_eq!(k_promotion(&t).content_vector(), rotated);
    }

    #[test]
    fn deflation_inflation_round_trip(t in arb_tableau()) {
        let (packed, d) = t.deflate();
        prop_assert!(packed.is_packed());
        prop_assert_eq!(packed.q(), d);
        let v = t.content_vector();
        let back = IncreasingTableau::inflate(&packed, &v).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn dualize_autonomous_round_trips(p in arb_poset()) {
        for a in p.autonomous_subsets().unwrap() {
            let q = p.dualize_autonomous(&a).unwrap();
            prop_assert_eq!(q.comparability_graph(), p.comparability_graph());
            let back = q.dualize_autonomous(&a).unwrap();
            prop_assert_eq!(back.covers(), p.covers());
        }
    }
}
