//! Garside left normal form for the classical braid monoid.
//!
//! A simple element (positive permutation braid) is identified with its
//! permutation, using the same convention as [`BraidWord::permutation`]:
//! `perm(AB) = perm(A) ∘ perm(B)`. In that convention, for a simple `A` with
//! permutation `π`,
//!
//! * `σ_i` is a left divisor of `A` iff `π⁻¹(i) > π⁻¹(i+1)` (starting set);
//! * `σ_i` is a right divisor of `A` iff `π(i) > π(i+1)` (finishing set);
//! * `A·σ_i` is simple iff `σ_i` is not a right divisor of `A`.

use std::fmt;

use super::perm::Permutation;
use super::word::{BraidWord, Letter, Sign};
use crate::error::{Error, Result};

/// `Δ^infimum · factors[0] ⋯ factors[r-1]` with left-weighted simple
/// factors, none of them trivial or equal to Δ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    strands: usize,
    infimum: i64,
    factors: Vec<Permutation>,
}

fn in_starting_set(inv: &Permutation, i: usize) -> bool {
    inv.at(i) > inv.at(i + 1)
}

fn in_finishing_set(p: &Permutation, i: usize) -> bool {
    p.at(i) > p.at(i + 1)
}

/// Starting set of a simple element, as 1-based generator indices.
pub fn starting_set(simple: &Permutation) -> Vec<usize> {
    let inv = simple.inverse();
    (0..simple.size().saturating_sub(1))
        .filter(|&i| in_starting_set(&inv, i))
        .map(|i| i + 1)
        .collect()
}

/// Finishing set of a simple element, as 1-based generator indices.
pub fn finishing_set(simple: &Permutation) -> Vec<usize> {
    (0..simple.size().saturating_sub(1))
        .filter(|&i| in_finishing_set(simple, i))
        .map(|i| i + 1)
        .collect()
}

/// Conjugation by Δ, `Δ⁻¹ A Δ`, which sends `σ_i` to `σ_{n-i}`.
pub(crate) fn tau(p: &Permutation) -> Permutation {
    let n = p.size();
    Permutation::from_zero_based((0..n).map(|i| n - 1 - p.at(n - 1 - i)).collect())
}

fn tau_pow(p: &Permutation, k: i64) -> Permutation {
    if k.rem_euclid(2) == 1 {
        tau(p)
    } else {
        p.clone()
    }
}

/// Right complement: the simple `A*` with `A·A* = Δ`.
pub(crate) fn right_complement(p: &Permutation) -> Permutation {
    p.inverse().compose(&Permutation::reversal(p.size()))
}

fn is_delta(p: &Permutation) -> bool {
    let n = p.size();
    (0..n).all(|i| p.at(i) == n - 1 - i)
}

/// Rewrites `(a, b)` into the left-weighted pair with the same product by
/// moving generators from the head of `b` onto the tail of `a`. Returns
/// whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.size();
    let mut changed = false;
    loop {
        let b_inv = b.inverse();
        let next = (0..n - 1).find(|&i| in_starting_set(&b_inv, i) && !in_finishing_set(a, i));
        match next {
            Some(i) => {
                a.swap_domain(i);
                b.swap_range(i);
                changed = true;
            }
            None => return changed,
        }
    }
}

/// Positive word of a simple element.
pub fn simple_to_letters(p: &Permutation) -> Vec<Letter> {
    let mut rest = p.clone();
    let mut out = Vec::new();
    while let Some(i) = {
        let inv = rest.inverse();
        (0..rest.size().saturating_sub(1)).find(|&i| in_starting_set(&inv, i))
    } {
        out.push(Letter::pos(i + 1));
        rest.swap_range(i);
    }
    out
}

impl NormalForm {
    pub fn identity(strands: usize) -> Self {
        NormalForm {
            strands,
            infimum: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(strands: usize, k: i64) -> Self {
        NormalForm {
            strands,
            infimum: k,
            factors: Vec::new(),
        }
    }

    pub fn from_word(w: &BraidWord) -> Self {
        let n = w.strands();
        let mut nf = NormalForm::identity(n);
        for l in w.letters() {
            match l.sign {
                Sign::Pos => nf.mul_simple(Permutation::transposition(n, l.index)),
                Sign::Neg => {
                    // x σ_i⁻¹ = x Δ⁻¹ (Δ σ_i⁻¹) = Δ⁻¹ τ(x) X_i with X_i σ_i = Δ
                    nf.infimum -= 1;
                    for f in nf.factors.iter_mut() {
                        *f = tau(f);
                    }
                    let mut x = Permutation::reversal(n);
                    x.swap_domain(l.index - 1);
                    nf.mul_simple(x);
                }
            }
        }
        nf
    }

    /// Normalizes `Δ^infimum · simples[0] ⋯` for arbitrary simple factors.
    pub fn from_simples(strands: usize, infimum: i64, simples: Vec<Permutation>) -> Self {
        let mut nf = NormalForm::delta_power(strands, infimum);
        for s in simples {
            nf.mul_simple(s);
        }
        nf
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    pub fn supremum(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// Right multiplication by a simple element.
    pub fn mul_simple(&mut self, s: Permutation) {
        debug_assert_eq!(s.size(), self.strands);
        self.factors.push(s);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (head, tail) = self.factors.split_at_mut(j);
            if !left_weight(&mut head[j - 1], &mut tail[0]) {
                break;
            }
            j -= 1;
        }
        self.tidy();
    }

    fn tidy(&mut self) {
        let leading = self.factors.iter().take_while(|f| is_delta(f)).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.infimum += leading as i64;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
    }

    pub fn mul(&self, other: &NormalForm) -> NormalForm {
        assert_eq!(self.strands, other.strands, "strand mismatch");
        // x Δ^q = Δ^q τ^q(x)
        let mut out = NormalForm {
            strands: self.strands,
            infimum: self.infimum + other.infimum,
            factors: self.factors.iter().map(|f| tau_pow(f, other.infimum)).collect(),
        };
        for f in &other.factors {
            out.mul_simple(f.clone());
        }
        out
    }

    pub fn inverse(&self) -> NormalForm {
        NormalForm::from_word(&self.to_word().inverse())
    }

    /// `s⁻¹ · self · s` for a simple `s`.
    pub fn conjugate_by_simple(&self, s: &Permutation) -> NormalForm {
        // s⁻¹ = Δ⁻¹ τ(s*), and τ(s*) Δ^p = Δ^p τ^{p+1}(s*)
        let head = tau_pow(&right_complement(s), self.infimum + 1);
        let mut simples = Vec::with_capacity(self.factors.len() + 2);
        simples.push(head);
        simples.extend(self.factors.iter().cloned());
        simples.push(s.clone());
        NormalForm::from_simples(self.strands, self.infimum - 1, simples)
    }

    /// Cycling. Returns the conjugator `c` (a simple element) together with
    /// `c⁻¹ · self · c`.
    pub fn cycle(&self) -> (Permutation, NormalForm) {
        match self.factors.first() {
            None => (Permutation::identity(self.strands), self.clone()),
            Some(first) => {
                let c = tau_pow(first, self.infimum);
                let mut out = NormalForm {
                    strands: self.strands,
                    infimum: self.infimum,
                    factors: self.factors[1..].to_vec(),
                };
                out.mul_simple(c.clone());
                (c, out)
            }
        }
    }

    /// Decycling. Returns `d` with `d⁻¹ · self · d` the decycled element,
    /// where `d = A_r⁻¹` is given as a normal form.
    pub fn decycle(&self) -> (NormalForm, NormalForm) {
        match self.factors.last() {
            None => (NormalForm::identity(self.strands), self.clone()),
            Some(last) => {
                let r = self.factors.len();
                let mut simples = Vec::with_capacity(r);
                simples.push(tau_pow(last, self.infimum));
                simples.extend(self.factors[..r - 1].iter().cloned());
                let out = NormalForm::from_simples(self.strands, self.infimum, simples);
                let d = NormalForm::from_simples(self.strands, 0, vec![last.clone()]).inverse();
                (d, out)
            }
        }
    }

    /// Word `Δ^inf · A_1 ⋯ A_r` with Δ written as `σ_1 (σ_2 σ_1) ⋯ (σ_{n-1} ⋯ σ_1)`.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = simple_to_letters(&Permutation::reversal(n));
        let mut letters = Vec::new();
        let block: Vec<Letter> = if self.infimum >= 0 {
            delta
        } else {
            delta.iter().rev().map(|l| l.inverse()).collect()
        };
        for _ in 0..self.infimum.unsigned_abs() {
            letters.extend_from_slice(&block);
        }
        for f in &self.factors {
            letters.extend(simple_to_letters(f));
        }
        BraidWord::from_parts(n, letters)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}: inf={} factors=[", self.strands, self.infimum)?;
        for (k, p) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            let imgs: Vec<String> = p.images_one_based().iter().map(|v| v.to_string()).collect();
            write!(f, "{}", imgs.join(","))?;
        }
        write!(f, "]")
    }
}

pub fn left_normal_form(w: &BraidWord) -> NormalForm {
    NormalForm::from_word(w)
}

/// Decides equality in `B_n` by comparing normal forms.
pub fn words_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    Ok(NormalForm::from_word(u) == NormalForm::from_word(v))
}

/// All `n!` simple elements of `B_n` in lexicographic order of image lists.
pub fn all_simples(strands: usize) -> Vec<Permutation> {
    let mut current: Vec<usize> = (0..strands).collect();
    let mut out = vec![Permutation::from_zero_based(current.clone())];
    loop {
        // next lexicographic permutation
        let Some(i) = (0..strands.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1])
        else {
            return out;
        };
        let j = (i + 1..strands).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(Permutation::from_zero_based(current.clone()));
    }
}
