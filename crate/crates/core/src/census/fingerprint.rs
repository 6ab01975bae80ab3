use std::fmt;

use sha2::{Digest, Sha256};

use crate::braid::BraidWord;
use crate::closure::{close, close_mixed, Ambient, LinkData};
use crate::error::{Error, Result};
use crate::mixed::{embed, MixedBraidWord};
use crate::quandle::{check_axioms, coloring_count, named_quandle, FiniteQuandle};

use super::ClosedBraid;

/// Quandles whose coloring counts enter the fingerprint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Panel {
    entries: Vec<(String, FiniteQuandle)>,
}

impl Panel {
    /// Axiom-checked panel from named quandles.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Config("empty quandle panel".into()));
        }
        let entries = names
            .iter()
            .map(|n| {
                let q = named_quandle(n.as_ref())?;
                check_axioms(&q).map_err(Error::QuandleAxiom)?;
                Ok((n.as_ref().to_string(), q))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Panel { entries })
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn quandles(&self) -> impl Iterator<Item = &FiniteQuandle> {
        self.entries.iter().map(|(_, q)| q)
    }
}

impl Default for Panel {
    fn default() -> Self {
        Panel::new(&["d3", "d4", "d5"]).expect("dihedral quandles satisfy the axioms")
    }
}

impl std::str::FromStr for Panel {
    type Err = Error;

    /// Comma-separated names, e.g. `d3,d4,d5`.
    fn from_str(s: &str) -> Result<Self> {
        let names: Vec<&str> = s.split(',').map(str::trim).filter(|n| !n.is_empty()).collect();
        Panel::new(&names)
    }
}

impl fmt::Display for Panel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names().join(","))
    }
}

/// Invariants of a closed braid used to bucket the census.
///
/// Field order is the comparison order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CensusFingerprint {
    pub ambient: Ambient,
    pub components: usize,
    /// Sorted; empty in `S³`.
    pub winding: Vec<u64>,
    /// Upper-triangular linking entries after canonical relabelling and
    /// choice of global sign.
    pub linking: Vec<i64>,
    /// `(quandle name, coloring count)` in panel order.
    pub colorings: Vec<(String, u64)>,
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for CensusFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let colorings: Vec<String> = self.colorings.iter().map(|(n, c)| format!("{n}:{c}")).collect();
        write!(
            f,
            "components={} winding={} linking={} colorings={}",
            self.components,
            join(&self.winding),
            join(&self.linking),
            colorings.join(",")
        )
    }
}

impl CensusFingerprint {
    /// First 16 hex digits of the SHA-256 of the ambient tag and the
    /// displayed fields.
    pub fn hash(&self) -> String {
        let digest = Sha256::digest(format!("{} {}", self.ambient, self).as_bytes());
        hex::encode(digest)[..16].to_string()
    }
}

/// Largest component count for which the linking matrix is canonicalized
/// over all relabellings; larger links fall back to sorted entries.
const EXACT_RELABEL_LIMIT: usize = 8;

fn upper(m: &[Vec<i64>], order: &[usize], sign: i64) -> Vec<i64> {
    let k = order.len();
    let mut out = Vec::with_capacity(k * k.saturating_sub(1) / 2);
    for p in 0..k {
        for q in p + 1..k {
            out.push(sign * m[order[p]][order[q]]);
        }
    }
    out
}

/// Lexicographically least `(winding, linking)` over component relabellings
/// and global sign.
pub(crate) fn canonical_linking(winding: &[u64], linking: &[Vec<i64>]) -> (Vec<u64>, Vec<i64>) {
    let k = winding.len();
    if k > EXACT_RELABEL_LIMIT {
        let mut w = winding.to_vec();
        w.sort_unstable();
        let mut entries = upper(linking, &(0..k).collect::<Vec<_>>(), 1);
        entries.sort_unstable();
        let mut negated: Vec<i64> = entries.iter().map(|v| -v).collect();
        negated.sort_unstable();
        return (w, entries.min(negated));
    }
    let mut order: Vec<usize> = (0..k).collect();
    let mut best: Option<(Vec<u64>, Vec<i64>)> = None;
    let mut consider = |order: &[usize]| {
        let w: Vec<u64> = order.iter().map(|&c| winding[c]).collect();
        for sign in [1, -1] {
            let cand = (w.clone(), upper(linking, order, sign));
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    };
    // Heap's algorithm
    let mut c = vec![0usize; k];
    consider(&order);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(c[i], i);
            }
            consider(&order);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best.unwrap_or_default()
}

fn assemble(link: &LinkData, colorings: Vec<(String, u64)>) -> CensusFingerprint {
    let (winding, linking) = canonical_linking(&link.component_winding, &link.linking);
    CensusFingerprint {
        ambient: link.ambient,
        components: link.components(),
        winding: match link.ambient {
            Ambient::Sphere3 => Vec::new(),
            Ambient::SolidTorus => winding,
        },
        linking,
        colorings,
    }
}

fn colorings(w: &BraidWord, panel: &Panel) -> Vec<(String, u64)> {
    panel
        .entries
        .iter()
        .map(|(name, q)| {
            let count = coloring_count(w, q).expect("panel quandles are axiom-checked");
            (name.clone(), count)
        })
        .collect()
}

/// Fingerprint of the closure in `S³`, default panel.
pub fn fingerprint(w: &BraidWord) -> CensusFingerprint {
    fingerprint_with(w, &Panel::default())
}

pub fn fingerprint_with(w: &BraidWord, panel: &Panel) -> CensusFingerprint {
    assemble(&close(w), colorings(w, panel))
}

/// Fingerprint of a solid-torus closure (one fixed strand). Colorings are
/// those of the closure of the embedded braid, axis included.
pub fn fingerprint_mixed(w: &MixedBraidWord, panel: &Panel) -> Result<CensusFingerprint> {
    let link = close_mixed(w)?;
    Ok(assemble(&link, colorings(&embed(w), panel)))
}

pub fn fingerprint_closed(c: &ClosedBraid, panel: &Panel) -> CensusFingerprint {
    match c.ambient {
        Ambient::Sphere3 => fingerprint_with(&c.word, panel),
        Ambient::SolidTorus => fingerprint_mixed(&c.to_mixed(), panel).expect("one fixed strand"),
    }
}
