use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::braid::{enumerate_words, left_normal_form, NormalForm, WordStream};
use crate::closure::{close, close_mixed, Ambient};
use crate::error::{Error, Result};

use super::fingerprint::{fingerprint_closed, CensusFingerprint, Panel};
use super::moves::{reachable, verify_trace, Move};
use super::ClosedBraid;

const MAX_STRANDS: usize = 4;
const MAX_LENGTH: usize = 8;
const MAX_DEPTH: usize = 6;

/// Bounds of a census run. Every field is echoed in the report header.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusConfig {
    pub ambient: Ambient,
    /// Strand counts (moving strands in the solid torus) range over
    /// `min_strands..=max_strands`.
    pub min_strands: usize,
    pub max_strands: usize,
    pub max_length: usize,
    /// Move-search depth used to merge classes.
    pub depth: usize,
    pub panel: Panel,
    /// Words beyond this many are skipped and the report marked incomplete.
    pub max_words: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            ambient: Ambient::Sphere3,
            min_strands: 1,
            max_strands: 3,
            max_length: 4,
            depth: 3,
            panel: Panel::default(),
            max_words: 100_000,
        }
    }
}

impl CensusConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if self.min_strands == 0 || self.min_strands > self.max_strands {
            return bad(format!(
                "strand range {}..={} is empty or starts at 0",
                self.min_strands, self.max_strands
            ));
        }
        if self.max_strands > MAX_STRANDS {
            return bad(format!("max_strands {} exceeds {MAX_STRANDS}", self.max_strands));
        }
        if self.max_length > MAX_LENGTH {
            return bad(format!("max_length {} exceeds {MAX_LENGTH}", self.max_length));
        }
        if self.depth > MAX_DEPTH {
            return bad(format!("depth {} exceeds {MAX_DEPTH}", self.depth));
        }
        if self.max_words == 0 {
            return bad("max_words must be positive".into());
        }
        Ok(())
    }

    /// Number of words in the full enumeration.
    pub fn expected_words(&self) -> u128 {
        (self.min_strands..=self.max_strands)
            .map(|n| WordStream::total(n, self.max_length))
            .sum()
    }
}

impl fmt::Display for CensusConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ambient={} min_strands={} max_strands={} max_length={} depth={} panel={} max_words={}",
            self.ambient, self.min_strands, self.max_strands, self.max_length, self.depth, self.panel, self.max_words
        )
    }
}

impl FromStr for CensusConfig {
    type Err = Error;

    /// `key=value` pairs, one per line or whitespace-separated; `#` starts a
    /// comment. Missing keys keep their defaults.
    fn from_str(s: &str) -> Result<Self> {
        let mut cfg = CensusConfig::default();
        let num = |k: &str, v: &str| {
            v.parse::<usize>()
                .map_err(|_| Error::Config(format!("`{k}` expects a non-negative integer, got `{v}`")))
        };
        for item in s.lines().flat_map(|l| l.split('#').next().unwrap_or("").split_whitespace()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("expected key=value, got `{item}`")))?;
            match key {
                "ambient" => cfg.ambient = value.parse()?,
                "min_strands" => cfg.min_strands = num(key, value)?,
                "max_strands" => cfg.max_strands = num(key, value)?,
                "max_length" => cfg.max_length = num(key, value)?,
                "depth" => cfg.depth = num(key, value)?,
                "panel" => cfg.panel = value.parse()?,
                "max_words" => cfg.max_words = num(key, value)?,
                other => return Err(Error::Config(format!("unknown key `{other}`"))),
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// A trace carrying word `from` to a braid equal to word `to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hop {
    pub from: usize,
    pub to: usize,
    pub moves: Vec<Move>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassStatus {
    /// The only class in its fingerprint bucket.
    Distinguished,
    /// Shares its fingerprint with another class.
    Undistinguished,
}

impl fmt::Display for ClassStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassStatus::Distinguished => "distinguished",
            ClassStatus::Undistinguished => "undistinguished",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub word: ClosedBraid,
    pub fingerprint: CensusFingerprint,
    /// Signed upper-triangular linking entries in closure order.
    pub raw_linking: Vec<i64>,
    pub class_id: usize,
    /// Index of the shortest known word of the class.
    pub representative: usize,
    /// Hops leading from this word to the representative; each hop
    /// replays in its own direction.
    pub path: Vec<Hop>,
    pub status: ClassStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BucketSummary {
    pub fingerprint: CensusFingerprint,
    pub words: usize,
    pub classes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub config: CensusConfig,
    pub records: Vec<CensusRecord>,
    pub expected_words: u128,
    pub complete: bool,
}

impl CensusReport {
    pub fn class_count(&self) -> usize {
        self.records.iter().map(|r| r.class_id + 1).max().unwrap_or(0)
    }

    /// Buckets in fingerprint order.
    pub fn buckets(&self) -> Vec<BucketSummary> {
        let mut map: BTreeMap<&CensusFingerprint, (usize, Vec<usize>)> = BTreeMap::new();
        for r in &self.records {
            let e = map.entry(&r.fingerprint).or_default();
            e.0 += 1;
            if !e.1.contains(&r.class_id) {
                e.1.push(r.class_id);
            }
        }
        map.into_iter()
            .map(|(f, (words, classes))| BucketSummary {
                fingerprint: f.clone(),
                words,
                classes: classes.len(),
            })
            .collect()
    }

    /// Index of the first record whose word displays as `text`.
    pub fn find(&self, text: &str) -> Option<usize> {
        self.records.iter().position(|r| r.word.to_string() == text)
    }

    /// Re-executes every hop of every path.
    pub fn verify_traces(&self) -> bool {
        self.records.iter().all(|r| {
            r.path.iter().all(|h| {
                verify_trace(&self.records[h.from].word, &self.records[h.to].word, &h.moves)
            })
        })
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl CensusRecord {
    /// Tab-separated `key=value` fields in the documented order.
    pub fn line(&self, records: &[CensusRecord]) -> String {
        format!(
            "word={}\tambient={}\thash={}\tfingerprint={}\tlinking_raw={}\tclass={}\trepresentative={}\thops={}\tstatus={}",
            self.word,
            self.word.ambient,
            self.fingerprint.hash(),
            self.fingerprint,
            join(&self.raw_linking),
            self.class_id,
            records[self.representative].word,
            self.path.len(),
            self.status
        )
    }
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let buckets = self.buckets();
        writeln!(f, "# census {}", self.config)?;
        writeln!(
            f,
            "# words={} expected={} complete={} classes={} buckets={}",
            self.records.len(),
            self.expected_words,
            self.complete,
            self.class_count(),
            buckets.len()
        )?;
        writeln!(f, "# fields: word ambient hash fingerprint linking_raw class representative hops status")?;
        for r in &self.records {
            writeln!(f, "{}", r.line(&self.records))?;
        }
        writeln!(f, "# summary: hash words classes fingerprint")?;
        for b in &buckets {
            writeln!(f, "# {} {} {} {}", b.fingerprint.hash(), b.words, b.classes, b.fingerprint)?;
        }
        Ok(())
    }
}

struct Classes(Vec<usize>);

impl Classes {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            cur = std::mem::replace(&mut self.0[cur], root);
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // smaller index stays root so roots are stable across runs
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.0[hi] = lo;
        true
    }
}

/// Enumerates, fingerprints and merges every closed braid within the
/// configured bounds.
pub fn run_census(config: &CensusConfig) -> Result<CensusReport> {
    config.validate()?;
    let expected = config.expected_words();
    let words: Vec<ClosedBraid> = (config.min_strands..=config.max_strands)
        .flat_map(|n| enumerate_words(n, config.max_length))
        .take(config.max_words)
        .map(|w| ClosedBraid {
            ambient: config.ambient,
            word: w,
        })
        .collect();
    let complete = words.len() as u128 == expected;

    let fingerprints: Vec<CensusFingerprint> =
        words.par_iter().map(|c| fingerprint_closed(c, &config.panel)).collect();
    let raw_linking: Vec<Vec<i64>> = words
        .par_iter()
        .map(|c| match c.ambient {
            Ambient::Sphere3 => close(&c.word).upper_linking(),
            Ambient::SolidTorus => close_mixed(&c.to_mixed()).expect("one fixed strand").upper_linking(),
        })
        .collect();

    // words sharing a fingerprint, indexed by (strands, normal form)
    let mut by_key: HashMap<(&CensusFingerprint, usize, NormalForm), Vec<usize>> = HashMap::new();
    for (i, c) in words.iter().enumerate() {
        by_key
            .entry((&fingerprints[i], c.word.strands(), left_normal_form(&c.word)))
            .or_default()
            .push(i);
    }

    let strand_cap = Some(config.max_strands + 1);
    let edges: Vec<Vec<Hop>> = words
        .par_iter()
        .enumerate()
        .map(|(i, c)| {
            let mut hops: Vec<Hop> = reachable(c, config.depth, strand_cap)
                .into_iter()
                .flat_map(|((strands, nf), moves)| {
                    by_key
                        .get(&(&fingerprints[i], strands, nf))
                        .into_iter()
                        .flatten()
                        .filter(|&&j| j != i)
                        .map(move |&j| Hop {
                            from: i,
                            to: j,
                            moves: moves.clone(),
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
            hops.sort_by_key(|h| h.to);
            hops
        })
        .collect();

    let n = words.len();
    let mut classes = Classes((0..n).collect());
    let mut forest: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut hops: Vec<Hop> = Vec::new();
    for hop in edges.into_iter().flatten() {
        if classes.union(hop.from, hop.to) {
            forest[hop.from].push(hops.len());
            forest[hop.to].push(hops.len());
            hops.push(hop);
        }
    }

    let mut class_of_root: HashMap<usize, usize> = HashMap::new();
    let mut class_id = vec![0; n];
    for i in 0..n {
        let root = classes.find(i);
        let next = class_of_root.len();
        class_id[i] = *class_of_root.entry(root).or_insert(next);
    }
    let class_count = class_of_root.len();

    let mut rep = vec![usize::MAX; class_count];
    for i in 0..n {
        let r = &mut rep[class_id[i]];
        if *r == usize::MAX || words[i].word.len() < words[*r].word.len() {
            *r = i;
        }
    }

    // parent hop toward the representative, by breadth-first search
    let mut parent: Vec<Option<usize>> = vec![None; n];
    for &r in &rep {
        let mut queue = VecDeque::from([r]);
        while let Some(x) = queue.pop_front() {
            for &h in &forest[x] {
                let y = if hops[h].from == x { hops[h].to } else { hops[h].from };
                if y != r && parent[y].is_none() {
                    parent[y] = Some(h);
                    queue.push_back(y);
                }
            }
        }
    }

    let mut bucket_classes: BTreeMap<&CensusFingerprint, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let e = bucket_classes.entry(&fingerprints[i]).or_default();
        if !e.contains(&class_id[i]) {
            e.push(class_id[i]);
        }
    }

    let records = (0..n)
        .map(|i| {
            let mut path = Vec::new();
            let mut x = i;
            while let Some(h) = parent[x] {
                path.push(hops[h].clone());
                x = if hops[h].from == x { hops[h].to } else { hops[h].from };
            }
            let status = if bucket_classes[&fingerprints[i]].len() > 1 {
                ClassStatus::Undistinguished
            } else {
                ClassStatus::Distinguished
            };
            CensusRecord {
                word: words[i].clone(),
                fingerprint: fingerprints[i].clone(),
                raw_linking: raw_linking[i].clone(),
                class_id: class_id[i],
                representative: rep[class_id[i]],
                path,
                status,
            }
        })
        .collect();

    Ok(CensusReport {
        config: config.clone(),
        records,
        expected_words: expected,
        complete,
    })
}
