use std::fmt;

use crate::error::Error;

/// A permutation of `{1..n}`, stored 0-based.
///
/// Composition follows the function convention: `a.compose(&b)` maps `i` to
/// `a(b(i))`. With this convention the map from braid words to permutations
/// is a homomorphism, `perm(uv) = perm(u) ∘ perm(v)`, and `perm(w)` sends each
/// bottom endpoint of the braid to the top endpoint of the same strand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation {
            images: (0..size).collect(),
        }
    }

    /// The adjacent transposition `(i, i+1)` for a 1-based `i`.
    pub fn transposition(size: usize, i: usize) -> Self {
        let mut p = Self::identity(size);
        p.images.swap(i - 1, i);
        p
    }

    /// The permutation of the half twist Δ, `i ↦ n+1-i`.
    pub fn reversal(size: usize) -> Self {
        Permutation {
            images: (0..size).rev().collect(),
        }
    }

    /// Builds a permutation from a 1-based image list.
    pub fn from_images(images: &[usize]) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation(images.to_vec()));
            }
            seen[v - 1] = true;
            zero_based.push(v - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { images }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of a 1-based point.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub(crate) fn at(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "permutation size mismatch");
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// Right multiplication by the adjacent transposition at 0-based `i`.
    pub(crate) fn swap_domain(&mut self, i: usize) {
        self.images.swap(i, i + 1);
    }

    /// Left multiplication by the adjacent transposition at 0-based `i`.
    pub(crate) fn swap_range(&mut self, i: usize) {
        for v in self.images.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }

    /// Disjoint cycles, 1-based, each starting at its smallest point, ordered
    /// by that point. Fixed points appear as singleton cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}
