use std::fmt;
use std::str::FromStr;

use super::perm::Permutation;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// One letter `σ_index^sign`, `index` 1-based.
///
/// Positive `σ_i` is the crossing where the strand in position `i` passes
/// over the strand in position `i+1`. The derived ordering (index first,
/// positive before negative) is the enumeration order of [`enumerate_words`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(index: usize) -> Letter {
        Letter {
            index,
            sign: Sign::Pos,
        }
    }

    pub fn neg(index: usize) -> Letter {
        Letter {
            index,
            sign: Sign::Neg,
        }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }

    /// Signed token, `σ_i ↦ i`, `σ_i⁻¹ ↦ -i`.
    pub fn token(self) -> i64 {
        self.index as i64 * self.sign.value()
    }
}

/// A word in the Artin generators of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(Error::GeneratorOutOfRange {
                index: l.index,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    pub(crate) fn from_parts(strands: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(strands >= 1 && letters.iter().all(|l| l.index >= 1 && l.index < strands));
        BraidWord { strands, letters }
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Builds a word from signed tokens.
    pub fn from_tokens(strands: usize, tokens: &[i64]) -> Result<Self> {
        let letters = tokens
            .iter()
            .map(|&t| {
                let index = t.unsigned_abs() as usize;
                if t > 0 {
                    Letter::pos(index)
                } else {
                    Letter::neg(index)
                }
            })
            .collect();
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn tokens(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.token()).collect()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&top) if top == l.inverse() => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.value()).sum()
    }

    /// Image under `B_n → Σ_n`, `σ_i ↦ (i, i+1)`.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for l in &self.letters {
            p.swap_domain(l.index - 1);
        }
        p
    }

    /// The same letters read in `B_new_strands`.
    pub fn include(&self, new_strands: usize) -> Result<BraidWord> {
        if new_strands < self.strands {
            return Err(Error::IncludeShrinks {
                from: self.strands,
                to: new_strands,
            });
        }
        Ok(BraidWord {
            strands: new_strands,
            letters: self.letters.clone(),
        })
    }

    /// Body without header, e.g. `1 -2 1`.
    pub fn body(&self) -> String {
        let parts: Vec<String> = self.letters.iter().map(|l| l.token().to_string()).collect();
        parts.join(" ")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            write!(f, "B{}:", self.strands)
        } else {
            write!(f, "B{}: {}", self.strands, self.body())
        }
    }
}

fn parse_tokens(text: &str) -> Result<Vec<i64>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| Error::MalformedToken(tok.to_string()))
        })
        .collect()
}

/// Parses a whitespace-separated token list `k ↦ σ_|k|^sign(k)` on a given
/// strand count.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord> {
    if strands == 0 {
        return Err(Error::NoStrands);
    }
    let tokens = parse_tokens(text)?;
    if let Some(&t) = tokens.iter().find(|&&t| t == 0) {
        return Err(Error::GeneratorOutOfRange {
            index: t as usize,
            strands,
        });
    }
    BraidWord::from_tokens(strands, &tokens)
}

/// Splits an optional `Bn:` header. Returns the declared strand count.
pub(crate) fn split_header(text: &str) -> Result<(Option<&str>, &str)> {
    let trimmed = text.trim_start();
    match trimmed.split_once(':') {
        Some((head, rest)) => {
            let head = head.trim();
            match head.strip_prefix('B') {
                Some(h) => Ok((Some(h), rest)),
                None => Err(Error::MalformedHeader(head.to_string())),
            }
        }
        None => Ok((None, trimmed)),
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Parses `Bn: tokens`. Without a header the strand count is one more
    /// than the largest generator index used.
    fn from_str(s: &str) -> Result<Self> {
        let (header, body) = split_header(s)?;
        match header {
            Some(h) => {
                let strands = h
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::MalformedHeader(format!("B{h}")))?;
                parse_braid(body, strands)
            }
            None => {
                let tokens = parse_tokens(body)?;
                let strands = tokens.iter().map(|t| t.unsigned_abs() as usize).max().unwrap_or(0) + 1;
                parse_braid(body, strands)
            }
        }
    }
}

/// Length-then-lexicographic stream of all words on `strands` strands up to
/// `max_length` letters.
pub fn enumerate_words(strands: usize, max_length: usize) -> WordStream {
    let alphabet: Vec<Letter> = (1..strands)
        .flat_map(|i| [Letter::pos(i), Letter::neg(i)])
        .collect();
    WordStream {
        strands: strands.max(1),
        alphabet,
        max_length,
        digits: Vec::new(),
        done: false,
    }
}

/// Iterator returned by [`enumerate_words`]. The state is an odometer over
/// alphabet positions.
#[derive(Debug, Clone)]
pub struct WordStream {
    strands: usize,
    alphabet: Vec<Letter>,
    max_length: usize,
    digits: Vec<usize>,
    done: bool,
}

impl WordStream {
    /// Number of words the stream yields in total.
    pub fn total(strands: usize, max_length: usize) -> u128 {
        let k = 2 * strands.saturating_sub(1) as u128;
        (0..=max_length as u32).map(|l| k.pow(l)).sum()
    }

    fn advance(&mut self) {
        let k = self.alphabet.len();
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < k {
                return;
            }
            *d = 0;
        }
        // every position wrapped: move to the next length
        if self.digits.len() == self.max_length || k == 0 {
            self.done = true;
        } else {
            self.digits.push(0);
        }
    }
}

impl Iterator for WordStream {
    type Item = BraidWord;

    fn next(&mut self) -> Option<BraidWord> {
        if self.done {
            return None;
        }
        let word = BraidWord::from_parts(
            self.strands,
            self.digits.iter().map(|&d| self.alphabet[d]).collect(),
        );
        self.advance();
        Some(word)
    }
}
