//! Caterpillars `C(y_1, ..., y_k)`: a spine `v_0 v_1 ... v_k v_{k+1}` with
//! `y_i` pendant leaves hung on `v_i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Caterpillar {
    y: Vec<u32>,
}

impl Caterpillar {
    pub fn new(y: Vec<u32>) -> Result<Self> {
        if y.is_empty() {
            return Err(Error::EmptySpine);
        }
        Ok(Caterpillar { y })
    }

    pub fn pendants(&self) -> &[u32] {
        &self.y
    }

    /// Number of internal spine vertices `k`.
    pub fn spine_len(&self) -> usize {
        self.y.len()
    }

    /// `y_j`, 1-based like the spine labels.
    pub fn y(&self, j: usize) -> u32 {
        self.y[j - 1]
    }

    pub fn order(&self) -> usize {
        self.y.len() + 2 + self.y.iter().map(|&v| v as usize).sum::<usize>()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees: Vec<u32> = self.y.iter().map(|&v| v + 2).collect();
        let leaves = self.order() - self.y.len();
        degrees.extend(std::iter::repeat_n(1, leaves));
        DegreeSequence::new(degrees).expect("caterpillars realize tree sequences")
    }

    /// Materializes the tree. Spine vertex `v_i` gets label `i`; pendants
    /// follow in spine order starting at `k + 2`.
    pub fn build(&self) -> Tree {
        let k = self.y.len();
        let n = self.order();
        let mut edges: Vec<(usize, usize)> = (1..=k + 1).map(|i| (i - 1, i)).collect();
        let mut next = k + 2;
        for (i, &count) in self.y.iter().enumerate() {
            for _ in 0..count {
                edges.push((i + 1, next));
                next += 1;
            }
        }
        Tree::from_edges(n, &edges).expect("caterpillar construction yields a tree")
    }

    pub fn reversed(&self) -> Caterpillar {
        let mut y = self.y.clone();
        y.reverse();
        Caterpillar { y }
    }

    /// The lexicographically greater of `y` and its reversal.
    pub fn canonical(&self) -> Caterpillar {
        let rev = self.reversed();
        if rev.y > self.y {
            rev
        } else {
            self.clone()
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.y.iter().ge(self.y.iter().rev())
    }

    /// Reads the pendant vector off a caterpillar tree with at least one
    /// internal vertex. Returns `None` for non-caterpillars and for the
    /// one- and two-vertex paths.
    pub fn recognize(tree: &Tree) -> Option<Caterpillar> {
        if !tree.is_caterpillar() {
            return None;
        }
        let n = tree.order();
        let internal: Vec<usize> = (0..n).filter(|&v| tree.degree(v) >= 2).collect();
        let start = match internal.len() {
            0 => return None,
            1 => internal[0],
            _ => *internal
                .iter()
                .find(|&&v| tree.neighbors(v).iter().filter(|&&w| !tree.is_leaf(w)).count() == 1)
                .expect("spine of a caterpillar has an end"),
        };
        let mut y = Vec::with_capacity(internal.len());
        let (mut prev, mut cur) = (usize::MAX, start);
        loop {
            y.push(tree.degree(cur) as u32 - 2);
            let next = tree
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| w != prev && !tree.is_leaf(w));
            match next {
                Some(w) => (prev, cur) = (cur, w),
                None => break,
            }
        }
        Some(Caterpillar { y })
    }
}

/// Convenience wrapper for [`Caterpillar::build`].
pub fn caterpillar_build(y: &[u32]) -> Result<Tree> {
    Ok(Caterpillar::new(y.to_vec())?.build())
}

pub fn caterpillar_canonical(y: &[u32]) -> Vec<u32> {
    let rev: Vec<u32> = y.iter().rev().copied().collect();
    if rev.as_slice() > y {
        rev
    } else {
        y.to_vec()
    }
}

impl fmt::Display for Caterpillar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.y.iter().map(u32::to_string).collect();
        write!(f, "C({})", parts.join(","))
    }
}
