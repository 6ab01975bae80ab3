//! `embed` checked against a rewriting search that knows only the defining
//! relation of `B_{1,2}` = ⟨a₁, σ₁ | a₁σ₁a₁σ₁ = σ₁a₁σ₁a₁⟩.

use std::collections::{HashSet, VecDeque};

use braidlink::braid::{left_normal_form, BraidWord, Sign};
use braidlink::mixed::{embed, MixedBraidWord, MixedLetter};
use proptest::prelude::*;

// letters as (generator, sign): generator 0 is a₁, 1 is σ₁
type L = (u8, bool);

fn inv(l: L) -> L {
    (l.0, !l.1)
}

fn reduce(w: &[L]) -> Vec<L> {
    let mut out: Vec<L> = Vec::new();
    for &l in w {
        if out.last() == Some(&inv(l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn relator_rotations() -> Vec<Vec<L>> {
    let (a, s) = ((0, true), (1, true));
    let r = vec![a, s, a, s, inv(a), inv(s), inv(a), inv(s)];
    let r_inv: Vec<L> = r.iter().rev().map(|&l| inv(l)).collect();
    let mut out = Vec::new();
    for base in [r, r_inv] {
        for k in 0..base.len() {
            let mut rot = base[k..].to_vec();
            rot.extend_from_slice(&base[..k]);
            out.push(rot);
        }
    }
    out
}

/// Freely reduced words reachable by at most `depth` relator insertions,
/// never exceeding `max_len` letters.
fn rewrite_closure(start: &[L], depth: usize, max_len: usize) -> HashSet<Vec<L>> {
    let rotations = relator_rotations();
    let start = reduce(start);
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0)]);
    while let Some((w, d)) = queue.pop_front() {
        if d == depth {
            continue;
        }
        for pos in 0..=w.len() {
            for rot in &rotations {
                let mut next = w[..pos].to_vec();
                next.extend_from_slice(rot);
                next.extend_from_slice(&w[pos..]);
                let next = reduce(&next);
                if next.len() <= max_len && seen.insert(next.clone()) {
                    queue.push_back((next, d + 1));
                }
            }
        }
    }
    seen
}

fn to_mixed(w: &[L]) -> MixedBraidWord {
    let letters = w
        .iter()
        .map(|&(g, pos)| {
            let sign = if pos { Sign::Pos } else { Sign::Neg };
            if g == 0 {
                MixedLetter::loop_gen(1, sign)
            } else {
                MixedLetter::sigma(1, sign)
            }
        })
        .collect();
    MixedBraidWord::new(1, 2, letters).unwrap()
}

fn all_words(max_len: usize) -> Vec<Vec<L>> {
    let alphabet = [(0, true), (0, false), (1, true), (1, false)];
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<L>| {
                alphabet.iter().map(move |&l| {
                    let mut x = w.clone();
                    x.push(l);
                    x
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[test]
fn embedding_agrees_with_rewriting_up_to_length_three() {
    let words = all_words(3);
    let images: Vec<_> = words.iter().map(|w| left_normal_form(&embed(&to_mixed(w)))).collect();
    let closures: Vec<_> = words.iter().map(|w| rewrite_closure(w, 2, 12)).collect();
    let mut identified = 0;
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            let by_rewriting = closures[i].contains(&reduce(v));
            let by_embedding = images[i] == images[j];
            assert_eq!(by_embedding, by_rewriting, "{u:?} vs {v:?}");
            identified += by_rewriting as usize;
        }
    }
    assert!(identified > words.len());
}

#[test]
fn relation_needs_the_relator() {
    let (a, s) = ((0u8, true), (1u8, true));
    let lhs = [a, s, a, s];
    let rhs = [s, a, s, a];
    assert!(rewrite_closure(&lhs, 1, 12).contains(&rhs.to_vec()));
    let l = embed(&to_mixed(&lhs));
    let r = embed(&to_mixed(&rhs));
    assert_eq!(left_normal_form(&l), left_normal_form(&r));
    // a₁σ₁ ≠ σ₁a₁: no relator identifies them and neither does the embedding
    assert!(!rewrite_closure(&[a, s], 2, 12).contains(&vec![s, a]));
    assert_ne!(left_normal_form(&embed(&to_mixed(&[a, s]))), left_normal_form(&embed(&to_mixed(&[s, a]))));
}

fn mixed_word() -> impl Strategy<Value = Vec<L>> {
    proptest::collection::vec((0u8..2, any::<bool>()), 0..=6)
}

proptest! {
    #[test]
    fn rewriting_identifications_survive_embedding(u in mixed_word()) {
        let target = left_normal_form(&embed(&to_mixed(&u)));
        for w in rewrite_closure(&u, 1, 14) {
            prop_assert_eq!(left_normal_form(&embed(&to_mixed(&w))), target.clone());
        }
    }

    #[test]
    fn embed_is_a_homomorphism(u in mixed_word(), v in mixed_word()) {
        let (mu, mv) = (to_mixed(&u), to_mixed(&v));
        let joined = embed(&mu.concat(&mv).unwrap());
        prop_assert_eq!(joined, embed(&mu).concat(&embed(&mv)).unwrap());
    }

    #[test]
    fn no_fixed_strands_embeds_identically(tokens in proptest::collection::vec((1i64..4, any::<bool>()), 0..8)) {
        let tokens: Vec<i64> = tokens.into_iter().map(|(i, p)| if p { i } else { -i }).collect();
        let w = BraidWord::from_tokens(4, &tokens).unwrap();
        prop_assert_eq!(embed(&MixedBraidWord::from_moving(0, &w)), w);
    }
}
