use braidlink::braid::{BraidWord, Letter, Sign};
use braidlink::census::{apply_move, fingerprint, ClosedBraid, Move};
use braidlink::closure::{linking_matrix, markov_conjugate, markov_stabilize};
use braidlink::quandle::{coloring_count, dihedral};
use proptest::prelude::*;

mod common;
use common::presentation_oracle;

fn word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (1..=max_strands).prop_flat_map(move |n| {
        let gens = n.saturating_sub(1).max(1) as i64;
        let letter = (1..=gens, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i });
        let len = if n == 1 { 0..=0 } else { 0..=max_len };
        proptest::collection::vec(letter, len).prop_map(move |t| BraidWord::from_tokens(n, &t).unwrap())
    })
}

fn conjugator(n: usize) -> impl Strategy<Value = BraidWord> {
    let gens = n.saturating_sub(1).max(1) as i64;
    let letter = (1..=gens, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i });
    let len = if n == 1 { 0..=0 } else { 0..=3 };
    proptest::collection::vec(letter, len).prop_map(move |t| BraidWord::from_tokens(n, &t).unwrap())
}

fn with_conjugator() -> impl Strategy<Value = (BraidWord, BraidWord, bool)> {
    word(3, 6).prop_flat_map(|w| {
        let n = w.strands();
        (Just(w), conjugator(n), any::<bool>())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn coloring_matches_presentation(w in word(3, 5)) {
        for q in [dihedral(3).unwrap(), dihedral(4).unwrap()] {
            prop_assert_eq!(coloring_count(&w, &q).unwrap(), presentation_oracle(&w, &q));
        }
    }

    #[test]
    fn colorings_are_markov_invariant((w, c, pos) in with_conjugator()) {
        let sign = if pos { Sign::Pos } else { Sign::Neg };
        let conj = markov_conjugate(&w, &c).unwrap();
        let stab = markov_stabilize(&w, sign);
        for q in [dihedral(3).unwrap(), dihedral(5).unwrap()] {
            let base = coloring_count(&w, &q).unwrap();
            prop_assert_eq!(coloring_count(&conj, &q).unwrap(), base);
            prop_assert_eq!(coloring_count(&stab, &q).unwrap(), base);
        }
    }

    #[test]
    fn constant_colorings_bound_below(w in word(3, 6)) {
        // only the q constant colorings are guaranteed; per-component
        // constants fail once components link (Hopf link: 3 < 3²)
        for n in [3usize, 5] {
            prop_assert!(coloring_count(&w, &dihedral(n).unwrap()).unwrap() >= n as u64);
        }
    }

    #[test]
    fn linking_survives_stabilization((w, _c, pos) in with_conjugator()) {
        let sign = if pos { Sign::Pos } else { Sign::Neg };
        prop_assert_eq!(linking_matrix(&markov_stabilize(&w, sign)), linking_matrix(&w));
    }

    #[test]
    fn fingerprint_is_move_invariant((w, c, pos) in with_conjugator()) {
        let sign = if pos { Sign::Pos } else { Sign::Neg };
        let f = fingerprint(&w);
        prop_assert_eq!(&fingerprint(&markov_conjugate(&w, &c).unwrap()), &f);
        prop_assert_eq!(&fingerprint(&markov_stabilize(&w, sign)), &f);
        let closed = ClosedBraid::sphere(w.clone());
        let mut moves = vec![Move::CyclicShift, Move::Destabilize, Move::Stabilize(sign)];
        moves.extend((1..w.strands()).map(|i| Move::ConjugateBy(Letter { index: i, sign })));
        for m in moves {
            if let Some(next) = apply_move(&closed, m) {
                prop_assert_eq!(&fingerprint(&next.word), &f, "{}", m);
            }
        }
    }
}

#[test]
fn split_unlinks_color_freely() {
    for n in 1..=4 {
        let id = BraidWord::identity(n).unwrap();
        assert_eq!(coloring_count(&id, &dihedral(3).unwrap()).unwrap(), 3u64.pow(n as u32));
    }
    let hopf: BraidWord = "B2: 1 1".parse().unwrap();
    assert_eq!(coloring_count(&hopf, &dihedral(3).unwrap()).unwrap(), 3);
}

#[test]
fn frozen_coloring_counts_match_the_oracle() {
    let cases = [("B2: 1 1 1", 3, 9), ("B1:", 3, 3), ("B3: 1 -2 1 -2", 5, 25), ("B2: 1", 3, 3)];
    for (text, n, expected) in cases {
        let w: BraidWord = text.parse().unwrap();
        let q = dihedral(n).unwrap();
        assert_eq!(presentation_oracle(&w, &q), expected, "{text}");
        assert_eq!(coloring_count(&w, &q).unwrap(), expected, "{text}");
    }
}
