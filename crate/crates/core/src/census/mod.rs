//! Bounded census of closed braids: invariant fingerprints, Markov-move
//! search, and class assignment backed by replayable move traces.
//!
//! Fingerprints separate classes; move traces merge them. Words whose
//! fingerprints agree but which no trace connects stay in separate classes
//! marked `undistinguished`.

mod fingerprint;
mod moves;
mod run;

use std::fmt;

use crate::braid::BraidWord;
use crate::closure::Ambient;
use crate::mixed::MixedBraidWord;

pub use fingerprint::{fingerprint, fingerprint_closed, fingerprint_mixed, fingerprint_with, CensusFingerprint, Panel};
pub use moves::{apply_move, merge_search, replay, verify_trace, Move};
pub use run::{run_census, BucketSummary, CensusConfig, CensusRecord, CensusReport, ClassStatus, Hop};

/// A braid word read as a closed braid in a given ambient space. In the
/// solid torus the word lives on the moving strands of `B_{1,n}` and uses
/// no loop generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClosedBraid {
    pub ambient: Ambient,
    pub word: BraidWord,
}

impl ClosedBraid {
    pub fn sphere(word: BraidWord) -> Self {
        ClosedBraid {
            ambient: Ambient::Sphere3,
            word,
        }
    }

    pub fn solid_torus(word: BraidWord) -> Self {
        ClosedBraid {
            ambient: Ambient::SolidTorus,
            word,
        }
    }

    /// The word as an element of `B_{1,n}`.
    pub fn to_mixed(&self) -> MixedBraidWord {
        MixedBraidWord::from_moving(1, &self.word)
    }
}

impl fmt::Display for ClosedBraid {
    /// `Bn: ...` in `S³`, `B1,n: ...` in the solid torus.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ambient {
            Ambient::Sphere3 => write!(f, "{}", self.word),
            Ambient::SolidTorus => write!(f, "{}", self.to_mixed()),
        }
    }
}

/// `σ₁σ₂⋯σ_{n−1}` in `B_{1,n}` for `n = 1..=k`. The closure of the `n`-th
/// word is one component winding `n` times around the axis.
pub fn essential_witnesses(k: usize) -> Vec<MixedBraidWord> {
    (1..=k)
        .map(|n| {
            let tokens: Vec<i64> = (1..n as i64).collect();
            let word = BraidWord::from_tokens(n, &tokens).expect("indices below strand count");
            MixedBraidWord::from_moving(1, &word)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{close_mixed, is_essential};

    #[test]
    fn witnesses_wind_once_more_each() {
        let ws = essential_witnesses(3);
        assert_eq!(ws.len(), 3);
        for (i, w) in ws.iter().enumerate() {
            let link = close_mixed(w).unwrap();
            assert_eq!(link.components(), 1);
            assert_eq!(link.winding(), vec![i as u64 + 1]);
            assert!(is_essential(&link).unwrap());
        }
        assert_eq!(ws[2].to_string(), "B1,3: 1 2");
    }

    #[test]
    fn display_by_ambient() {
        let w = BraidWord::from_tokens(2, &[1, -1]).unwrap();
        assert_eq!(ClosedBraid::sphere(w.clone()).to_string(), "B2: 1 -1");
        assert_eq!(ClosedBraid::solid_torus(w).to_string(), "B1,2: 1 -1");
    }
}
