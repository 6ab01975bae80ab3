use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::braid::{left_normal_form, words_equal, BraidWord, Letter, NormalForm, Sign};
use crate::closure::{markov_destabilize, markov_stabilize, Ambient};

use super::ClosedBraid;

/// One step of the closed-braid move search. Every move is followed by free
/// reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    /// First letter moved to the end.
    CyclicShift,
    /// `w ↦ c w c⁻¹`.
    ConjugateBy(Letter),
    /// `w ↦ w σ_n^{±1}` on one more strand.
    Stabilize(Sign),
    /// Inverse of [`Move::Stabilize`] when the last generator occurs once.
    Destabilize,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::CyclicShift => f.write_str("shift"),
            Move::ConjugateBy(l) => write!(f, "conj({})", l.token()),
            Move::Stabilize(Sign::Pos) => f.write_str("stab(+)"),
            Move::Stabilize(Sign::Neg) => f.write_str("stab(-)"),
            Move::Destabilize => f.write_str("destab"),
        }
    }
}

/// Applies a move; `None` when it does not apply. Solid-torus closures only
/// admit shifts and conjugations, which keep the strand count and hence the
/// winding around the axis.
pub fn apply_move(c: &ClosedBraid, m: Move) -> Option<ClosedBraid> {
    let w = &c.word;
    let next = match m {
        Move::CyclicShift => {
            let letters = w.letters();
            let (first, rest) = letters.split_first()?;
            let mut shifted = rest.to_vec();
            shifted.push(*first);
            BraidWord::new(w.strands(), shifted).ok()?
        }
        Move::ConjugateBy(l) => {
            let c = BraidWord::new(w.strands(), vec![l]).ok()?;
            c.concat(w).ok()?.concat(&c.inverse()).ok()?
        }
        Move::Stabilize(sign) => {
            if c.ambient == Ambient::SolidTorus {
                return None;
            }
            markov_stabilize(w, sign)
        }
        Move::Destabilize => {
            if c.ambient == Ambient::SolidTorus {
                return None;
            }
            markov_destabilize(w)?
        }
    };
    Some(ClosedBraid {
        ambient: c.ambient,
        word: next.free_reduce(),
    })
}

/// Applies moves in order; `None` if one of them does not apply.
pub fn replay(start: &ClosedBraid, moves: &[Move]) -> Option<ClosedBraid> {
    moves.iter().try_fold(start.clone(), |c, &m| apply_move(&c, m))
}

/// True when `moves` carries `from` to a word equal to `to` in the braid
/// group.
pub fn verify_trace(from: &ClosedBraid, to: &ClosedBraid, moves: &[Move]) -> bool {
    match replay(from, moves) {
        Some(end) => end.ambient == to.ambient && words_equal(&end.word, &to.word).unwrap_or(false),
        None => false,
    }
}

/// Moves tried from `c`, in a fixed order. `strand_cap` bounds
/// stabilization.
pub(crate) fn candidate_moves(c: &ClosedBraid, strand_cap: Option<usize>) -> Vec<Move> {
    let n = c.word.strands();
    let mut out = Vec::with_capacity(2 * n + 3);
    if !c.word.is_empty() {
        out.push(Move::CyclicShift);
    }
    for i in 1..n {
        out.push(Move::ConjugateBy(Letter::pos(i)));
        out.push(Move::ConjugateBy(Letter::neg(i)));
    }
    if c.ambient == Ambient::Sphere3 {
        if strand_cap.is_none_or(|cap| n < cap) {
            out.push(Move::Stabilize(Sign::Pos));
            out.push(Move::Stabilize(Sign::Neg));
        }
        out.push(Move::Destabilize);
    }
    out
}

/// Breadth-first traversal over freely reduced words, calling `visit` on
/// each node with the trace that reached it first; stops early when `visit`
/// returns true.
fn traverse<F>(start: &ClosedBraid, depth: usize, strand_cap: Option<usize>, mut visit: F)
where
    F: FnMut(&ClosedBraid, &[Move]) -> bool,
{
    let start = ClosedBraid {
        ambient: start.ambient,
        word: start.word.free_reduce(),
    };
    let mut seen: HashSet<ClosedBraid> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back((start, Vec::new()));
    while let Some((c, trace)) = queue.pop_front() {
        if visit(&c, &trace) {
            return;
        }
        if trace.len() == depth {
            continue;
        }
        for m in candidate_moves(&c, strand_cap) {
            if let Some(next) = apply_move(&c, m) {
                if seen.insert(next.clone()) {
                    let mut t = trace.clone();
                    t.push(m);
                    queue.push_back((next, t));
                }
            }
        }
    }
}

/// Everything reachable from `start` within `depth` moves, keyed by
/// `(strands, normal form)`, with the first trace found for each key.
pub(crate) fn reachable(
    start: &ClosedBraid,
    depth: usize,
    strand_cap: Option<usize>,
) -> HashMap<(usize, NormalForm), Vec<Move>> {
    let mut found = HashMap::new();
    traverse(start, depth, strand_cap, |c, trace| {
        let key = (c.word.strands(), left_normal_form(&c.word));
        found.entry(key).or_insert_with(|| trace.to_vec());
        false
    });
    found
}

/// Breadth-first search for a move sequence carrying `u` to a braid equal
/// to `v`. `None` means only "not connected within `depth` moves".
pub fn merge_search(u: &ClosedBraid, v: &ClosedBraid, depth: usize) -> Option<Vec<Move>> {
    if u.ambient != v.ambient {
        return None;
    }
    let (strands, target) = (v.word.strands(), left_normal_form(&v.word));
    let mut hit = None;
    traverse(u, depth, None, |c, trace| {
        let found = c.word.strands() == strands && left_normal_form(&c.word) == target;
        if found {
            hit = Some(trace.to_vec());
        }
        found
    });
    hit
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    fn s3(text: &str, n: usize) -> ClosedBraid {
        ClosedBraid::sphere(parse_braid(text, n).unwrap())
    }

    #[test]
    fn destabilization_example() {
        let u = s3("1", 2);
        let v = ClosedBraid::sphere(BraidWord::identity(1).unwrap());
        let trace = merge_search(&u, &v, 3).unwrap();
        assert_eq!(trace, vec![Move::Destabilize]);
        assert!(verify_trace(&u, &v, &trace));
    }

    #[test]
    fn braid_relation_needs_no_moves() {
        let u = s3("1 2 1", 3);
        let v = s3("2 1 2", 3);
        assert_eq!(merge_search(&u, &v, 2), Some(vec![]));
    }

    #[test]
    fn conjugates_are_found() {
        let u = s3("1", 3);
        let v = s3("2", 3);
        let trace = merge_search(&u, &v, 2).unwrap();
        assert!(!trace.is_empty());
        assert!(verify_trace(&u, &v, &trace));
    }

    #[test]
    fn trefoil_and_mirror_stay_apart() {
        let u = s3("1 1 1", 2);
        let v = s3("-1 -1 -1", 2);
        for depth in 1..=4 {
            assert_eq!(merge_search(&u, &v, depth), None);
        }
    }

    #[test]
    fn ambients_never_mix() {
        let u = s3("", 2);
        let v = ClosedBraid::solid_torus(BraidWord::identity(2).unwrap());
        assert_eq!(merge_search(&u, &v, 3), None);
    }

    #[test]
    fn solid_torus_keeps_strands() {
        let c = ClosedBraid::solid_torus(parse_braid("1", 2).unwrap());
        assert_eq!(apply_move(&c, Move::Destabilize), None);
        assert_eq!(apply_move(&c, Move::Stabilize(Sign::Pos)), None);
        let core = ClosedBraid::solid_torus(BraidWord::identity(1).unwrap());
        assert_eq!(merge_search(&c, &core, 4), None);
    }

    #[test]
    fn shift_and_display() {
        let c = s3("1 -2 2 2", 3);
        let shifted = apply_move(&c, Move::CyclicShift).unwrap();
        assert_eq!(shifted.word, parse_braid("2 1", 3).unwrap());
        assert_eq!(apply_move(&s3("", 2), Move::CyclicShift), None);
        assert_eq!(Move::ConjugateBy(Letter::neg(2)).to_string(), "conj(-2)");
    }
}
