//! Prüfer codec for labeled trees.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Decodes a Prüfer word of length `n - 2` into its labeled tree.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Tree> {
    if n < 2 || seq.len() != n - 2 {
        return Err(Error::LengthMismatch {
            expected: n.saturating_sub(2),
            actual: seq.len(),
        });
    }
    let mut degree = vec![1usize; n];
    for &label in seq {
        if label >= n {
            return Err(Error::LabelOutOfRange { label, n });
        }
        degree[label] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut adj = vec![Vec::new(); n];
    for &v in seq {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        adj[leaf].push(v);
        adj[v].push(leaf);
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(u) = leaves.pop().unwrap();
    let Reverse(w) = leaves.pop().unwrap();
    adj[u].push(w);
    adj[w].push(u);
    Ok(Tree::from_adjacency_unchecked(adj))
}

/// Inverse of [`prufer_decode`]: repeatedly strips the smallest leaf.
pub fn prufer_encode(tree: &Tree) -> Result<Vec<usize>> {
    let n = tree.order();
    if n < 2 {
        return Err(Error::InvalidTree("Prüfer codes need at least 2 vertices".into()));
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut seq = Vec::with_capacity(n - 2);
    while seq.len() < n - 2 {
        let Reverse(leaf) = leaves.pop().unwrap();
        removed[leaf] = true;
        let parent = *tree
            .neighbors(leaf)
            .iter()
            .find(|&&w| !removed[w])
            .unwrap();
        seq.push(parent);
        degree[parent] -= 1;
        if degree[parent] == 1 {
            leaves.push(Reverse(parent));
        }
    }
    Ok(seq)
}
