use fauxtree::constructions::{build_ornamented, OrnamentSpec};
use fauxtree::graph::RootedGraph;
use fauxtree::spectra::{char_poly, MatrixKind};
use fauxtree::word::{parse_word, transfer_charpoly, verify_intertwiner, word_of_tree, ExtendedWord, WordTree};
use proptest::prelude::*;

fn word_strategy() -> impl Strategy<Value = WordTree> {
    let leaf = Just(WordTree::End);
    leaf.prop_recursive(12, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(WordTree::single),
            (inner.clone(), inner).prop_map(|(a, b)| WordTree::double(a, b)),
        ]
    })
}

fn words_up_to(k: usize) -> Vec<WordTree> {
    (1..=k).flat_map(WordTree::all_with_letters).collect()
}

#[test]
fn transfer_matches_direct_polynomial() {
    for w in words_up_to(4) {
        let ext = ExtendedWord::new(w.clone());
        for c in 3..=8 {
            for p in 1..=c - 2 {
                let q = c - p;
                let g = build_ornamented(&OrnamentSpec::new(w.clone(), p, q).unwrap()).unwrap();
                let direct = char_poly(&g, MatrixKind::NormalizedAdjacency).unwrap().charpoly.to_rat();
                let transfer = transfer_charpoly(&ext, p, q).unwrap();
                assert_eq!(transfer, direct, "{ext} with ({p},{q})");
                assert_eq!(transfer.degree(), Some(1 + w.letters() * (p + q - 1)));
                assert_eq!(transfer, transfer_charpoly(&ext, 1, p + q - 1).unwrap());
            }
        }
    }
}

#[test]
fn sibling_swap_invariance() {
    for w in words_up_to(5) {
        let (a, b) = (ExtendedWord::new(w.clone()), ExtendedWord::new(w.mirrored()));
        for (p, q) in [(1, 3), (2, 2), (2, 4)] {
            assert_eq!(transfer_charpoly(&a, p, q).unwrap(), transfer_charpoly(&b, p, q).unwrap());
        }
    }
}

#[test]
fn intertwiner_sweep() {
    for p in 1..=6 {
        for q in 2..=8 {
            if p + q >= 4 {
                assert!(verify_intertwiner(p, q).unwrap(), "({p},{q})");
            }
        }
    }
    assert!(verify_intertwiner(1, 2).is_err());
}

#[test]
fn words_of_built_trees() {
    for w in words_up_to(4) {
        let tree = build_ornamented(&OrnamentSpec::new(w.clone(), 1, 2).unwrap()).unwrap();
        let back = word_of_tree(&RootedGraph::new(tree, 0).unwrap()).unwrap();
        let rebuilt = build_ornamented(&OrnamentSpec::new(back.body, 1, 2).unwrap()).unwrap();
        assert_eq!(fauxtree::graph::canonical_form(&tree).0, fauxtree::graph::canonical_form(&rebuilt).0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn print_parse_round_trip(w in word_strategy().prop_filter("at most 12 letters", |w| w.letters() <= 12)) {
        let ext = ExtendedWord::new(w);
        let text = ext.to_string();
        prop_assert!(text.starts_with('i'));
        prop_assert_eq!(parse_word(&text).unwrap(), ext);
    }
}
