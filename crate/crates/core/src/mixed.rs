//! Mixed braids: `B_{m,n}` as the subgroup of `B_{m+n}` whose first `m`
//! strands stay fixed.
//!
//! Fixed strands occupy positions `1..=m`, moving strands `m+1..=m+n`. The
//! loop generator `a_i` takes the first moving strand around fixed strand
//! `i`, passing in front of fixed strands `i+1..=m`:
//!
//! ```text
//! a_i = σ_m σ_{m-1} ⋯ σ_{i+1} σ_i² σ_{i+1}⁻¹ ⋯ σ_m⁻¹
//! ```
//!
//! The mirrored convention satisfies the same relations; correctness of the
//! chosen one is certified by [`verify_presentation`].

use std::fmt;
use std::str::FromStr;

use crate::braid::{words_equal, BraidWord, Letter, Sign};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MixedGenerator {
    /// `a_i`, 1-based fixed-strand index.
    Loop(usize),
    /// `σ_j` acting on moving strands `j, j+1`.
    Sigma(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedLetter {
    pub generator: MixedGenerator,
    pub sign: Sign,
}

impl MixedLetter {
    pub fn loop_gen(i: usize, sign: Sign) -> Self {
        MixedLetter {
            generator: MixedGenerator::Loop(i),
            sign,
        }
    }

    pub fn sigma(j: usize, sign: Sign) -> Self {
        MixedLetter {
            generator: MixedGenerator::Sigma(j),
            sign,
        }
    }

    pub fn inverse(self) -> Self {
        MixedLetter {
            generator: self.generator,
            sign: self.sign.flip(),
        }
    }

    fn token(self) -> String {
        match (self.generator, self.sign) {
            (MixedGenerator::Loop(i), Sign::Pos) => format!("a{i}"),
            (MixedGenerator::Loop(i), Sign::Neg) => format!("A{i}"),
            (MixedGenerator::Sigma(j), Sign::Pos) => j.to_string(),
            (MixedGenerator::Sigma(j), Sign::Neg) => format!("-{j}"),
        }
    }
}

/// A word in `a_1..a_m, σ_1..σ_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedBraidWord {
    fixed: usize,
    moving: usize,
    letters: Vec<MixedLetter>,
}

impl MixedBraidWord {
    pub fn new(fixed: usize, moving: usize, letters: Vec<MixedLetter>) -> Result<Self> {
        if moving == 0 {
            return Err(Error::NoStrands);
        }
        for l in &letters {
            match l.generator {
                MixedGenerator::Loop(i) if i == 0 || i > fixed => {
                    return Err(Error::LoopOutOfRange { index: i, fixed })
                }
                MixedGenerator::Sigma(j) if j == 0 || j >= moving => {
                    return Err(Error::GeneratorOutOfRange {
                        index: j,
                        strands: moving,
                    })
                }
                _ => {}
            }
        }
        Ok(MixedBraidWord {
            fixed,
            moving,
            letters,
        })
    }

    pub fn identity(fixed: usize, moving: usize) -> Result<Self> {
        Self::new(fixed, moving, Vec::new())
    }

    /// Lifts a braid on the moving strands, with no loop letters.
    pub fn from_moving(fixed: usize, moving: &BraidWord) -> Self {
        MixedBraidWord {
            fixed,
            moving: moving.strands(),
            letters: moving
                .letters()
                .iter()
                .map(|l| MixedLetter::sigma(l.index, l.sign))
                .collect(),
        }
    }

    pub fn fixed_strands(&self) -> usize {
        self.fixed
    }

    pub fn moving_strands(&self) -> usize {
        self.moving
    }

    pub fn letters(&self) -> &[MixedLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &MixedBraidWord) -> Result<MixedBraidWord> {
        if (self.fixed, self.moving) != (other.fixed, other.moving) {
            return Err(Error::StrandMismatch {
                left: self.fixed + self.moving,
                right: other.fixed + other.moving,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(MixedBraidWord {
            fixed: self.fixed,
            moving: self.moving,
            letters,
        })
    }

    pub fn inverse(&self) -> MixedBraidWord {
        MixedBraidWord {
            fixed: self.fixed,
            moving: self.moving,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// The σ-letters only, as a braid on the moving strands.
    pub fn moving_part(&self) -> BraidWord {
        let letters = self
            .letters
            .iter()
            .filter_map(|l| match l.generator {
                MixedGenerator::Sigma(j) => Some(Letter { index: j, sign: l.sign }),
                MixedGenerator::Loop(_) => None,
            })
            .collect();
        BraidWord::from_parts(self.moving, letters)
    }

    pub fn body(&self) -> String {
        let parts: Vec<String> = self.letters.iter().map(|l| l.token()).collect();
        parts.join(" ")
    }
}

impl fmt::Display for MixedBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            write!(f, "B{},{}:", self.fixed, self.moving)
        } else {
            write!(f, "B{},{}: {}", self.fixed, self.moving, self.body())
        }
    }
}

fn parse_letter(tok: &str) -> Result<MixedLetter> {
    let malformed = || Error::MalformedToken(tok.to_string());
    let loop_index = |rest: &str| rest.parse::<usize>().map_err(|_| malformed());
    if let Some(rest) = tok.strip_prefix('a') {
        Ok(MixedLetter::loop_gen(loop_index(rest)?, Sign::Pos))
    } else if let Some(rest) = tok.strip_prefix('A') {
        Ok(MixedLetter::loop_gen(loop_index(rest)?, Sign::Neg))
    } else {
        let k: i64 = tok.parse().map_err(|_| malformed())?;
        let sign = if k > 0 { Sign::Pos } else { Sign::Neg };
        Ok(MixedLetter::sigma(k.unsigned_abs() as usize, sign))
    }
}

/// Parses `a<i>` / `A<i>` loop tokens and signed integer σ tokens.
pub fn parse_mixed(text: &str, fixed: usize, moving: usize) -> Result<MixedBraidWord> {
    let letters = text
        .split_whitespace()
        .map(parse_letter)
        .collect::<Result<Vec<_>>>()?;
    MixedBraidWord::new(fixed, moving, letters)
}

impl FromStr for MixedBraidWord {
    type Err = Error;

    /// Parses `B{m},{n}: tokens`.
    fn from_str(s: &str) -> Result<Self> {
        let (header, body) = crate::braid::split_header(s)?;
        let header = header.ok_or_else(|| Error::MalformedHeader(s.trim().to_string()))?;
        let bad = || Error::MalformedHeader(format!("B{header}"));
        let (m, n) = header.split_once(',').ok_or_else(bad)?;
        let m = m.trim().parse::<usize>().map_err(|_| bad())?;
        let n = n.trim().parse::<usize>().map_err(|_| bad())?;
        parse_mixed(body, m, n)
    }
}

fn loop_word(fixed: usize, i: usize) -> Vec<Letter> {
    let mut out: Vec<Letter> = (i + 1..=fixed).rev().map(Letter::pos).collect();
    out.push(Letter::pos(i));
    out.push(Letter::pos(i));
    out.extend((i + 1..=fixed).map(Letter::neg));
    out
}

/// Image of a mixed braid in `B_{m+n}`.
pub fn embed(w: &MixedBraidWord) -> BraidWord {
    let m = w.fixed;
    let mut letters = Vec::new();
    for l in &w.letters {
        match l.generator {
            MixedGenerator::Sigma(j) => letters.push(Letter { index: m + j, sign: l.sign }),
            MixedGenerator::Loop(i) => {
                let lw = loop_word(m, i);
                match l.sign {
                    Sign::Pos => letters.extend(lw),
                    Sign::Neg => letters.extend(lw.iter().rev().map(|x| x.inverse())),
                }
            }
        }
    }
    BraidWord::from_parts(m + w.moving, letters)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationFamily {
    /// `σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}`
    BraidRelation,
    /// `σ_i σ_j = σ_j σ_i`, `|i-j| ≥ 2`
    FarCommutation,
    /// `a_i σ_1 a_i σ_1 = σ_1 a_i σ_1 a_i`
    LoopBraid,
    /// `a_i σ_k = σ_k a_i`, `k ≥ 2`
    LoopCommutation,
    /// `a_i (σ_1 a_r σ_1⁻¹) = (σ_1 a_r σ_1⁻¹) a_i`, `r < i`
    LoopConjugateCommutation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorCheck {
    pub family: RelationFamily,
    pub lhs: MixedBraidWord,
    pub rhs: MixedBraidWord,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationReport {
    pub fixed: usize,
    pub moving: usize,
    pub checks: Vec<RelatorCheck>,
}

impl PresentationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

impl fmt::Display for PresentationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "presentation B{},{}: {} relators", self.fixed, self.moving, self.checks.len())?;
        for c in &self.checks {
            writeln!(
                f,
                "{:<26} {} = {}  {}",
                format!("{:?}", c.family),
                c.lhs.body(),
                c.rhs.body(),
                if c.holds { "pass" } else { "FAIL" }
            )?;
        }
        Ok(())
    }
}

/// Every instance of the defining relations of `B_{m,n}` whose generators
/// exist, as `(family, lhs, rhs)`.
pub fn relator_instances(m: usize, n: usize) -> Vec<(RelationFamily, Vec<MixedLetter>, Vec<MixedLetter>)> {
    use MixedLetter as L;
    let s = |j| L::sigma(j, Sign::Pos);
    let s_inv = |j| L::sigma(j, Sign::Neg);
    let a = |i| L::loop_gen(i, Sign::Pos);
    let mut out = Vec::new();
    for i in 1..n.saturating_sub(1) {
        out.push((
            RelationFamily::BraidRelation,
            vec![s(i), s(i + 1), s(i)],
            vec![s(i + 1), s(i), s(i + 1)],
        ));
    }
    for i in 1..n {
        for j in i + 2..n {
            out.push((RelationFamily::FarCommutation, vec![s(i), s(j)], vec![s(j), s(i)]));
        }
    }
    if n >= 2 {
        for i in 1..=m {
            out.push((
                RelationFamily::LoopBraid,
                vec![a(i), s(1), a(i), s(1)],
                vec![s(1), a(i), s(1), a(i)],
            ));
        }
    }
    for i in 1..=m {
        for k in 2..n {
            out.push((RelationFamily::LoopCommutation, vec![a(i), s(k)], vec![s(k), a(i)]));
        }
    }
    if n >= 2 {
        for i in 1..=m {
            for r in 1..i {
                let conj = [s(1), a(r), s_inv(1)];
                let mut lhs = vec![a(i)];
                lhs.extend(conj);
                let mut rhs = conj.to_vec();
                rhs.push(a(i));
                out.push((RelationFamily::LoopConjugateCommutation, lhs, rhs));
            }
        }
    }
    out
}

/// Checks every defining relation of `B_{m,n}` in `B_{m+n}` after embedding.
pub fn verify_presentation(m: usize, n: usize) -> PresentationReport {
    let checks = relator_instances(m, n)
        .into_iter()
        .map(|(family, lhs, rhs)| {
            let lhs = MixedBraidWord::new(m, n, lhs).expect("relator letters in range");
            let rhs = MixedBraidWord::new(m, n, rhs).expect("relator letters in range");
            let holds = words_equal(&embed(&lhs), &embed(&rhs)).expect("same strand count");
            RelatorCheck {
                family,
                lhs,
                rhs,
                holds,
            }
        })
        .collect();
    PresentationReport {
        fixed: m,
        moving: n,
        checks,
    }
}
