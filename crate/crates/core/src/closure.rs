//! Closed braids as links in `S³` or in the solid torus, and Markov moves.

use std::fmt;

use crate::braid::{BraidWord, Letter, Sign};
use crate::error::{Error, Result};
use crate::mixed::{embed, MixedBraidWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ambient {
    Sphere3,
    SolidTorus,
}

impl Ambient {
    pub fn tag(self) -> &'static str {
        match self {
            Ambient::Sphere3 => "sphere3",
            Ambient::SolidTorus => "solid_torus",
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for Ambient {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sphere3" => Ok(Ambient::Sphere3),
            "solid_torus" | "solid-torus" => Ok(Ambient::SolidTorus),
            other => Err(Error::Config(format!("unknown ambient `{other}`"))),
        }
    }
}

/// The link obtained by closing a braid.
///
/// Components are listed in order of their smallest strand position; the
/// linking matrix and `component_winding` follow that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkData {
    pub ambient: Ambient,
    /// Strand positions of each component, 1-based, moving strands only in
    /// the solid torus.
    pub component_strands: Vec<Vec<usize>>,
    /// Winding of each component around the solid-torus axis; zero in `S³`.
    pub component_winding: Vec<u64>,
    /// Signed linking numbers between components, zero diagonal.
    pub linking: Vec<Vec<i64>>,
}

impl LinkData {
    pub fn components(&self) -> usize {
        self.component_strands.len()
    }

    /// Winding numbers as a sorted multiset.
    pub fn winding(&self) -> Vec<u64> {
        let mut w = self.component_winding.clone();
        w.sort_unstable();
        w
    }

    /// Linking number of each component with the solid-torus axis.
    pub fn axis_linking(&self) -> Option<Vec<i64>> {
        match self.ambient {
            Ambient::SolidTorus => Some(self.component_winding.iter().map(|&w| w as i64).collect()),
            Ambient::Sphere3 => None,
        }
    }

    /// Row-major entries above the diagonal.
    pub fn upper_linking(&self) -> Vec<i64> {
        let k = self.components();
        (0..k)
            .flat_map(|p| (p + 1..k).map(move |q| (p, q)))
            .map(|(p, q)| self.linking[p][q])
            .collect()
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for LinkData {
    /// `ambient=... components=k winding=w1,..,wk linking=l12,l13,..`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ambient={} components={} winding={} linking={}",
            self.ambient,
            self.components(),
            join(&self.winding()),
            join(&self.upper_linking())
        )
    }
}

const AXIS: usize = usize::MAX;

/// Sums crossing signs between distinct components. `owner[p]` is the
/// component of the strand starting at position `p`; `AXIS` marks strands
/// that are not counted.
fn crossing_linking(letters: &[Letter], mut owner: Vec<usize>, k: usize) -> Vec<Vec<i64>> {
    let mut twice = vec![vec![0i64; k]; k];
    for l in letters {
        let (a, b) = (owner[l.index - 1], owner[l.index]);
        if a != b && a != AXIS && b != AXIS {
            let s = l.sign.value();
            twice[a][b] += s;
            twice[b][a] += s;
        }
        owner.swap(l.index - 1, l.index);
    }
    twice
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| {
                    debug_assert!(v % 2 == 0, "odd crossing sum between closed components");
                    v / 2
                })
                .collect()
        })
        .collect()
}

fn owners(cycles: &[Vec<usize>], strands: usize) -> Vec<usize> {
    let mut owner = vec![AXIS; strands];
    for (c, cycle) in cycles.iter().enumerate() {
        for &p in cycle {
            owner[p - 1] = c;
        }
    }
    owner
}

/// Closure in `S³`.
pub fn close(w: &BraidWord) -> LinkData {
    let cycles = w.permutation().cycles();
    let k = cycles.len();
    let linking = crossing_linking(w.letters(), owners(&cycles, w.strands()), k);
    LinkData {
        ambient: Ambient::Sphere3,
        component_winding: vec![0; k],
        component_strands: cycles,
        linking,
    }
}

/// Closure of a mixed braid with one fixed strand, read as a link in the
/// solid torus whose axis is the fixed strand.
pub fn close_mixed(w: &MixedBraidWord) -> Result<LinkData> {
    if w.fixed_strands() != 1 {
        return Err(Error::FixedStrandCount(w.fixed_strands()));
    }
    let full = embed(w);
    let perm = full.permutation();
    debug_assert_eq!(perm.image(1), 1, "fixed strand must return to itself");
    let cycles: Vec<Vec<usize>> = perm
        .cycles()
        .into_iter()
        .filter(|c| c != &[1])
        .collect();
    let k = cycles.len();
    let linking = crossing_linking(full.letters(), owners(&cycles, full.strands()), k);
    Ok(LinkData {
        ambient: Ambient::SolidTorus,
        component_winding: cycles.iter().map(|c| c.len() as u64).collect(),
        component_strands: cycles
            .into_iter()
            .map(|c| c.into_iter().map(|p| p - 1).collect())
            .collect(),
        linking,
    })
}

/// Linking matrix of the closure in `S³`.
pub fn linking_matrix(w: &BraidWord) -> Vec<Vec<i64>> {
    close(w).linking
}

/// Linking matrix among the moving components of a solid-torus closure.
pub fn linking_matrix_mixed(w: &MixedBraidWord) -> Result<Vec<Vec<i64>>> {
    close_mixed(w).map(|l| l.linking)
}

/// Sufficient condition for essentialness: some component winds around the
/// axis. `false` means "not certified", not "inessential".
pub fn is_essential(link: &LinkData) -> Result<bool> {
    match link.ambient {
        Ambient::SolidTorus => Ok(link.component_winding.iter().any(|&w| w != 0)),
        Ambient::Sphere3 => Err(Error::NotSolidTorus),
    }
}

/// `c · w · c⁻¹`.
pub fn markov_conjugate(w: &BraidWord, c: &BraidWord) -> Result<BraidWord> {
    c.concat(w)?.concat(&c.inverse())
}

/// `ι(w) · σ_n^{±1}` on `n+1` strands.
pub fn markov_stabilize(w: &BraidWord, sign: Sign) -> BraidWord {
    let n = w.strands();
    let mut letters = w.letters().to_vec();
    letters.push(Letter { index: n, sign });
    BraidWord::from_parts(n + 1, letters)
}

/// Removes the only occurrence of `σ_{n-1}^{±1}` from the freely reduced
/// word. `None` unless that generator occurs exactly once.
pub fn markov_destabilize(w: &BraidWord) -> Option<BraidWord> {
    let n = w.strands();
    if n < 2 {
        return None;
    }
    let reduced = w.free_reduce();
    let mut hits = reduced.letters().iter().enumerate().filter(|(_, l)| l.index == n - 1);
    let (pos, _) = hits.next()?;
    if hits.next().is_some() {
        return None;
    }
    let mut letters = reduced.letters().to_vec();
    letters.remove(pos);
    Some(BraidWord::from_parts(n - 1, letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::mixed::parse_mixed;

    fn w(text: &str, n: usize) -> BraidWord {
        parse_braid(text, n).unwrap()
    }

    #[test]
    fn close_examples() {
        let unlink = close(&BraidWord::identity(3).unwrap());
        assert_eq!(unlink.components(), 3);
        assert_eq!(unlink.winding(), vec![0, 0, 0]);
        assert_eq!(close(&w("1 1 1", 2)).components(), 1);
        assert_eq!(close(&w("1 1", 2)).components(), 2);
    }

    #[test]
    fn linking_examples() {
        assert_eq!(linking_matrix(&w("1 1", 2)), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(linking_matrix(&w("-1 -1", 2)), vec![vec![0, -1], vec![-1, 0]]);
        assert_eq!(linking_matrix(&BraidWord::identity(2).unwrap()), vec![vec![0, 0], vec![0, 0]]);
        // 3-chain: components {1}, {2}, {3} with σ1² and σ2² clasps
        let l = close(&w("1 1 2 2", 3));
        assert_eq!(l.upper_linking(), vec![1, 0, 1]);
    }

    #[test]
    fn solid_torus_examples() {
        let core = close_mixed(&MixedBraidWord::identity(1, 1).unwrap()).unwrap();
        assert_eq!((core.components(), core.winding()), (1, vec![1]));
        let twisted = close_mixed(&parse_mixed("1", 1, 2).unwrap()).unwrap();
        assert_eq!((twisted.components(), twisted.winding()), (1, vec![2]));
        let three = close_mixed(&MixedBraidWord::identity(1, 3).unwrap()).unwrap();
        assert_eq!((three.components(), three.winding()), (3, vec![1, 1, 1]));
        assert_eq!(three.axis_linking(), Some(vec![1, 1, 1]));
        assert_eq!(three.to_string(), "ambient=solid_torus components=3 winding=1,1,1 linking=0,0,0");
    }

    #[test]
    fn loop_letters_do_not_touch_moving_linking() {
        let l = close_mixed(&parse_mixed("a1 1 1 A1", 1, 2).unwrap()).unwrap();
        assert_eq!(l.components(), 2);
        assert_eq!(l.upper_linking(), vec![1]);
        assert!(matches!(
            close_mixed(&parse_mixed("1", 2, 2).unwrap()),
            Err(Error::FixedStrandCount(2))
        ));
    }

    #[test]
    fn essential_examples() {
        let mk = |winding: Vec<u64>| LinkData {
            ambient: Ambient::SolidTorus,
            component_strands: winding.iter().map(|_| vec![]).collect(),
            linking: vec![vec![0; winding.len()]; winding.len()],
            component_winding: winding,
        };
        assert!(is_essential(&mk(vec![2])).unwrap());
        assert!(!is_essential(&mk(vec![0])).unwrap());
        assert!(is_essential(&mk(vec![1, 1, 1])).unwrap());
        assert!(matches!(is_essential(&close(&w("1", 2))), Err(Error::NotSolidTorus)));
    }

    #[test]
    fn markov_examples() {
        let id1 = BraidWord::identity(1).unwrap();
        let st = markov_stabilize(&id1, Sign::Pos);
        assert_eq!(st, w("1", 2));
        assert_eq!(close(&id1).components(), 1);
        assert_eq!(close(&st).components(), 1);
        assert_eq!(markov_destabilize(&st), Some(id1));

        let t = w("1 1 1", 2);
        assert_eq!(markov_conjugate(&t, &w("1", 2)).unwrap().free_reduce(), t);

        assert_eq!(markov_destabilize(&w("1 1", 2)), None);
        assert_eq!(markov_destabilize(&w("1 2 -2 2", 3)), Some(w("1", 2)));
        assert_eq!(markov_destabilize(&BraidWord::identity(1).unwrap()), None);
        assert_eq!(markov_destabilize(&w("1", 3)), None);
    }

    #[test]
    fn display_is_single_line() {
        let l = close(&w("1 1 2 2", 3));
        assert_eq!(l.to_string(), "ambient=sphere3 components=3 winding=0,0,0 linking=1,0,1");
    }
}
