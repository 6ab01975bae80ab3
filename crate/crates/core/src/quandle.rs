//! Finite quandles, fundamental quandle presentations of closed braids and
//! coloring counts.
//!
//! Crossing convention: a positive `σ_i` sends the colors `(a, b)` at
//! positions `(i, i+1)` to `(b, a ∗ b)`; the strand moving from `i+1` to
//! `i` is the over-strand and keeps its color. A negative crossing applies
//! the inverse, `(c, d) ↦ (d ∗̄ c, c)`, where `∗̄` undoes `∗`.

use std::fmt;
use std::str::FromStr;

use crate::braid::{BraidWord, Sign};
use crate::error::{Error, Result};

/// A binary operation table on `{0..q-1}` with `table[i*q + j] = i ∗ j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteQuandle {
    order: usize,
    table: Vec<usize>,
    // inverse[i*q + j] = k with k ∗ j = i; empty when right multiplication
    // is not invertible
    inverse: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `i ∗ i ≠ i`
    Idempotence { i: usize },
    /// `x ↦ x ∗ j` is not a bijection
    RightInvertibility { j: usize },
    /// `(i ∗ j) ∗ k ≠ (i ∗ k) ∗ (j ∗ k)`
    SelfDistributivity { i: usize, j: usize, k: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Idempotence { i } => write!(f, "{i} * {i} != {i}"),
            AxiomViolation::RightInvertibility { j } => write!(f, "right multiplication by {j} is not a bijection"),
            AxiomViolation::SelfDistributivity { i, j, k } => {
                write!(f, "({i} * {j}) * {k} != ({i} * {k}) * ({j} * {k})")
            }
        }
    }
}

fn right_inverse(order: usize, table: &[usize]) -> Vec<usize> {
    let mut inverse = vec![usize::MAX; order * order];
    for j in 0..order {
        for i in 0..order {
            let v = table[i * order + j];
            if inverse[v * order + j] != usize::MAX {
                return Vec::new();
            }
            inverse[v * order + j] = i;
        }
    }
    inverse
}

impl FiniteQuandle {
    /// Wraps a table without checking the axioms; use [`check_axioms`] or
    /// [`FiniteQuandle::new`] for a checked value.
    pub fn from_table(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyQuandle);
        }
        if table.len() != order * order {
            return Err(Error::QuandleTable(format!(
                "expected {} entries, got {}",
                order * order,
                table.len()
            )));
        }
        if let Some(v) = table.iter().find(|&&v| v >= order) {
            return Err(Error::QuandleTable(format!("entry {v} out of range")));
        }
        let inverse = right_inverse(order, &table);
        Ok(FiniteQuandle {
            order,
            table,
            inverse,
        })
    }

    /// A table that satisfies the quandle axioms.
    pub fn new(order: usize, table: Vec<usize>) -> Result<Self> {
        let q = Self::from_table(order, table)?;
        check_axioms(&q).map_err(Error::QuandleAxiom)?;
        Ok(q)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `i ∗ j`
    pub fn op(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j]
    }

    /// `i ∗̄ j`, the unique `k` with `k ∗ j = i`.
    pub fn op_inv(&self, i: usize, j: usize) -> usize {
        self.inverse[i * self.order + j]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }
}

impl fmt::Display for FiniteQuandle {
    /// Table file format: the order on the first line, then one row per
    /// element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.order)?;
        for row in self.table.chunks(self.order) {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for FiniteQuandle {
    type Err = Error;

    /// Reads the table file format and checks the axioms.
    fn from_str(s: &str) -> Result<Self> {
        let mut nums = s.split_whitespace().map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::QuandleTable(format!("bad entry `{t}`")))
        });
        let order = nums
            .next()
            .ok_or_else(|| Error::QuandleTable("missing order".into()))??;
        let table = nums.collect::<Result<Vec<_>>>()?;
        FiniteQuandle::new(order, table)
    }
}

/// First violated axiom, checked in the order idempotence, right
/// invertibility, self-distributivity.
pub fn check_axioms(q: &FiniteQuandle) -> std::result::Result<(), AxiomViolation> {
    let n = q.order;
    if let Some(i) = (0..n).find(|&i| q.op(i, i) != i) {
        return Err(AxiomViolation::Idempotence { i });
    }
    for j in 0..n {
        let mut hit = vec![false; n];
        for i in 0..n {
            hit[q.op(i, j)] = true;
        }
        if hit.iter().any(|h| !h) {
            return Err(AxiomViolation::RightInvertibility { j });
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if q.op(q.op(i, j), k) != q.op(q.op(i, k), q.op(j, k)) {
                    return Err(AxiomViolation::SelfDistributivity { i, j, k });
                }
            }
        }
    }
    Ok(())
}

/// Dihedral quandle `R_n`: `i ∗ j = 2j − i mod n`.
pub fn dihedral(n: usize) -> Result<FiniteQuandle> {
    if n == 0 {
        return Err(Error::EmptyQuandle);
    }
    let table = (0..n)
        .flat_map(|i| (0..n).map(move |j| (2 * j + n - i) % n))
        .collect();
    FiniteQuandle::from_table(n, table)
}

/// Trivial quandle `i ∗ j = i`.
pub fn trivial(n: usize) -> Result<FiniteQuandle> {
    if n == 0 {
        return Err(Error::EmptyQuandle);
    }
    FiniteQuandle::from_table(n, (0..n).flat_map(|i| std::iter::repeat_n(i, n)).collect())
}

/// Looks up `d<n>` / `dihedral<n>` and `t<n>` / `trivial<n>`.
pub fn named_quandle(name: &str) -> Result<FiniteQuandle> {
    let unknown = || Error::UnknownQuandle(name.to_string());
    let (ctor, digits): (fn(usize) -> Result<FiniteQuandle>, &str) =
        if let Some(d) = name.strip_prefix("dihedral").or_else(|| name.strip_prefix('d')) {
            (dihedral, d)
        } else if let Some(d) = name.strip_prefix("trivial").or_else(|| name.strip_prefix('t')) {
            (trivial, d)
        } else {
            return Err(unknown());
        };
    let n = digits.parse::<usize>().map_err(|_| unknown())?;
    ctor(n)
}

/// Generators are arcs of the closed-braid diagram; each relation
/// `(k, i, j)` reads `x_k = x_i ∗ x_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuandlePresentation {
    pub generators: usize,
    pub relations: Vec<(usize, usize, usize)>,
}

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Fundamental quandle presentation of the closure of `w`.
///
/// Arcs start as the `n` top arcs plus one new arc per crossing (the
/// under-strand), then bottom and top arcs at each position are identified.
pub fn fundamental_presentation(w: &BraidWord) -> QuandlePresentation {
    let n = w.strands();
    let mut arc_at: Vec<usize> = (0..n).collect();
    let mut next = n;
    let mut raw = Vec::with_capacity(w.len());
    for l in w.letters() {
        let (p, q) = (l.index - 1, l.index);
        let (a, b) = (arc_at[p], arc_at[q]);
        let k = next;
        next += 1;
        match l.sign {
            Sign::Pos => {
                raw.push((k, a, b));
                arc_at[p] = b;
                arc_at[q] = k;
            }
            Sign::Neg => {
                // x_b = x_k ∗ x_a, with x_k the new arc
                raw.push((b, k, a));
                arc_at[p] = k;
                arc_at[q] = a;
            }
        }
    }
    let mut sets = DisjointSets((0..next).collect());
    for (top, &bottom) in arc_at.iter().enumerate() {
        sets.union(top, bottom);
    }
    let mut label = vec![usize::MAX; next];
    let mut generators = 0;
    for arc in 0..next {
        let root = sets.find(arc);
        if label[root] == usize::MAX {
            label[root] = generators;
            generators += 1;
        }
        label[arc] = label[root];
    }
    QuandlePresentation {
        generators,
        relations: raw
            .into_iter()
            .map(|(k, i, j)| (label[k], label[i], label[j]))
            .collect(),
    }
}

fn propagate(w: &BraidWord, q: &FiniteQuandle, colors: &mut [usize]) {
    for l in w.letters() {
        let (p, r) = (l.index - 1, l.index);
        let (a, b) = (colors[p], colors[r]);
        match l.sign {
            Sign::Pos => {
                colors[p] = b;
                colors[r] = q.op(a, b);
            }
            Sign::Neg => {
                colors[p] = q.op_inv(b, a);
                colors[r] = a;
            }
        }
    }
}

/// Number of colorings of the closure of `w` by `q`: top colorings that
/// return to themselves after propagating through every crossing.
pub fn coloring_count(w: &BraidWord, q: &FiniteQuandle) -> Result<u64> {
    check_axioms(q).map_err(Error::QuandleAxiom)?;
    let n = w.strands();
    let order = q.order();
    let total = (order as u64).pow(n as u32);
    let mut start = vec![0usize; n];
    let mut count = 0;
    for _ in 0..total {
        let mut colors = start.clone();
        propagate(w, q, &mut colors);
        if colors == start {
            count += 1;
        }
        // odometer over Q^n
        for c in start.iter_mut() {
            *c += 1;
            if *c < order {
                break;
            }
            *c = 0;
        }
    }
    Ok(count)
}

/// Every quandle table on `{0..q-1}`, `q ≤ 4`, without isomorphism
/// reduction. Candidates are tables whose right multiplications are
/// permutations fixing their own column index; self-distributivity filters
/// the rest.
pub fn enumerate_quandles(q: usize) -> Result<Vec<FiniteQuandle>> {
    if !(1..=4).contains(&q) {
        return Err(Error::QuandleOrderOutOfRange(q));
    }
    let perms = permutations(q);
    let columns: Vec<Vec<&Vec<usize>>> = (0..q)
        .map(|j| perms.iter().filter(|p| p[j] == j).collect())
        .collect();
    let mut choice = vec![0usize; q];
    let mut out = Vec::new();
    loop {
        let mut table = vec![0; q * q];
        for (j, &c) in choice.iter().enumerate() {
            for i in 0..q {
                table[i * q + j] = columns[j][c][i];
            }
        }
        let candidate = FiniteQuandle::from_table(q, table)?;
        if check_axioms(&candidate).is_ok() {
            out.push(candidate);
        }
        let mut j = 0;
        loop {
            if j == q {
                out.sort();
                out.dedup();
                return Ok(out);
            }
            choice[j] += 1;
            if choice[j] < columns[j].len() {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut v = p.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out
}
