//! Bounded conjugacy testing through super summit sets.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::garside::{all_simples, words_equal, NormalForm};
use super::word::BraidWord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjugacyBudget {
    /// Maximum number of super summit elements explored before giving up.
    pub max_nodes: usize,
}

impl Default for ConjugacyBudget {
    fn default() -> Self {
        ConjugacyBudget { max_nodes: 20_000 }
    }
}

/// Why two braids cannot be conjugate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonConjugacyCertificate {
    ExponentSum { left: i64, right: i64 },
    CycleType { left: Vec<usize>, right: Vec<usize> },
    SummitInfimum { left: i64, right: i64 },
    SummitSupremum { left: i64, right: i64 },
    /// The super summit set of the left braid was computed completely and
    /// does not contain the summit representative of the right braid.
    SuperSummitDisjoint { set_size: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Conjugacy {
    /// `witness · u · witness⁻¹ = v`.
    Conjugate { witness: BraidWord },
    NotConjugate(NonConjugacyCertificate),
    Undecided { explored: usize },
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for NonConjugacyCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonConjugacyCertificate::ExponentSum { left, right } => {
                write!(f, "exponent sums differ ({left} vs {right})")
            }
            NonConjugacyCertificate::CycleType { left, right } => {
                write!(f, "cycle types differ ({} vs {})", join(left), join(right))
            }
            NonConjugacyCertificate::SummitInfimum { left, right } => {
                write!(f, "summit infima differ ({left} vs {right})")
            }
            NonConjugacyCertificate::SummitSupremum { left, right } => {
                write!(f, "summit suprema differ ({left} vs {right})")
            }
            NonConjugacyCertificate::SuperSummitDisjoint { set_size } => {
                write!(f, "super summit sets disjoint ({set_size} elements)")
            }
        }
    }
}

impl fmt::Display for Conjugacy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conjugacy::Conjugate { witness } => write!(f, "conjugate witness={witness}"),
            Conjugacy::NotConjugate(cert) => write!(f, "not conjugate: {cert}"),
            Conjugacy::Undecided { explored } => write!(f, "undecided explored={explored}"),
        }
    }
}

impl Conjugacy {
    pub fn is_conjugate(&self) -> bool {
        matches!(self, Conjugacy::Conjugate { .. })
    }
}

/// Sorted cycle lengths of the induced permutation.
pub fn cycle_type(w: &BraidWord) -> Vec<usize> {
    let mut t: Vec<usize> = w.permutation().cycles().iter().map(|c| c.len()).collect();
    t.sort_unstable();
    t
}

/// Moves `x` into its super summit set by iterated cycling and decycling.
/// Returns `(g, y)` with `g⁻¹ · x · g = y`.
pub fn to_super_summit(x: &NormalForm) -> (NormalForm, NormalForm) {
    let n = x.strands();
    let patience = (n * n.saturating_sub(1) / 2).max(1);
    let mut g = NormalForm::identity(n);
    let mut y = x.clone();

    let mut stale = 0;
    while stale < patience && y.canonical_length() > 0 {
        let (c, next) = y.cycle();
        g.mul_simple(c);
        stale = if next.infimum() > y.infimum() { 0 } else { stale + 1 };
        y = next;
    }

    let mut stale = 0;
    while stale < patience && y.canonical_length() > 0 {
        let (d, next) = y.decycle();
        g = g.mul(&d);
        stale = if next.supremum() < y.supremum() { 0 } else { stale + 1 };
        y = next;
    }
    (g, y)
}

enum Exploration {
    Complete(HashMap<NormalForm, NormalForm>),
    Found(NormalForm),
    Exhausted(usize),
}

/// Breadth-first closure of the super summit set of `start` under conjugation
/// by simple elements. Each entry maps an element to a conjugator `g` with
/// `g⁻¹ · start · g = element`. Returns `None` when the budget runs out.
pub fn super_summit_set(
    start: &NormalForm,
    budget: ConjugacyBudget,
) -> Option<HashMap<NormalForm, NormalForm>> {
    match explore(start, None, budget) {
        Exploration::Complete(set) => Some(set),
        _ => None,
    }
}

fn explore(start: &NormalForm, target: Option<&NormalForm>, budget: ConjugacyBudget) -> Exploration {
    let n = start.strands();
    if target == Some(start) {
        return Exploration::Found(NormalForm::identity(n));
    }
    let (inf, sup) = (start.infimum(), start.supremum());
    let simples: Vec<_> = all_simples(n).into_iter().filter(|s| !s.is_identity()).collect();
    let mut seen: HashMap<NormalForm, NormalForm> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone(), NormalForm::identity(n));
    queue.push_back(start.clone());
    while let Some(y) = queue.pop_front() {
        let g = seen[&y].clone();
        for s in &simples {
            let z = y.conjugate_by_simple(s);
            if z.infimum() != inf || z.supremum() != sup || seen.contains_key(&z) {
                continue;
            }
            let mut gz = g.clone();
            gz.mul_simple(s.clone());
            if target == Some(&z) {
                return Exploration::Found(gz);
            }
            seen.insert(z.clone(), gz);
            if seen.len() > budget.max_nodes {
                return Exploration::Exhausted(seen.len());
            }
            queue.push_back(z);
        }
    }
    Exploration::Complete(seen)
}

/// Tests whether `u` and `v` are conjugate in `B_n`.
///
/// A `Conjugate` answer carries a witness `c` verified by
/// `c·u·c⁻¹ = v`. `NotConjugate` is returned only with a certificate.
pub fn conjugate_test(u: &BraidWord, v: &BraidWord, budget: ConjugacyBudget) -> Result<Conjugacy> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    let n = u.strands();
    if words_equal(u, v)? {
        return Ok(Conjugacy::Conjugate {
            witness: BraidWord::from_parts(n, Vec::new()),
        });
    }
    let (eu, ev) = (u.exponent_sum(), v.exponent_sum());
    if eu != ev {
        return Ok(Conjugacy::NotConjugate(NonConjugacyCertificate::ExponentSum {
            left: eu,
            right: ev,
        }));
    }
    let (tu, tv) = (cycle_type(u), cycle_type(v));
    if tu != tv {
        return Ok(Conjugacy::NotConjugate(NonConjugacyCertificate::CycleType {
            left: tu,
            right: tv,
        }));
    }

    let (gu, su) = to_super_summit(&NormalForm::from_word(u));
    let (gv, sv) = to_super_summit(&NormalForm::from_word(v));
    if su.infimum() != sv.infimum() {
        return Ok(Conjugacy::NotConjugate(NonConjugacyCertificate::SummitInfimum {
            left: su.infimum(),
            right: sv.infimum(),
        }));
    }
    if su.supremum() != sv.supremum() {
        return Ok(Conjugacy::NotConjugate(NonConjugacyCertificate::SummitSupremum {
            left: su.supremum(),
            right: sv.supremum(),
        }));
    }

    let h = match explore(&su, Some(&sv), budget) {
        Exploration::Found(h) => h,
        Exploration::Complete(set) => {
            return Ok(Conjugacy::NotConjugate(
                NonConjugacyCertificate::SuperSummitDisjoint { set_size: set.len() },
            ))
        }
        Exploration::Exhausted(explored) => return Ok(Conjugacy::Undecided { explored }),
    };

    // h⁻¹ su h = sv with su = gu⁻¹ u gu and sv = gv⁻¹ v gv, hence
    // c = gv h⁻¹ gu⁻¹ satisfies c u c⁻¹ = v.
    let c = gv.mul(&h.inverse()).mul(&gu.inverse());
    let witness = c.to_word().free_reduce();
    let check = witness.concat(u)?.concat(&witness.inverse())?;
    assert!(words_equal(&check, v)?, "conjugating witness failed to verify");
    Ok(Conjugacy::Conjugate { witness })
}
