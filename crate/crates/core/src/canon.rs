//! Isomorphism-invariant codes for unrooted trees.
//!
//! A tree is rooted at each of its one or two centers and encoded bottom-up
//! as a balanced-parenthesis string whose child codes are sorted; the smaller
//! of the (at most two) strings is the canonical code.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(tree: &Tree) -> CanonicalCode {
    centers(tree)
        .into_iter()
        .map(|c| rooted_code(tree, c))
        .min()
        .map(CanonicalCode)
        .expect("every tree has a center")
}

/// The one or two vertices of minimum eccentricity, by leaf peeling.
pub fn centers(tree: &Tree) -> Vec<usize> {
    let n = tree.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in tree.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// AHU encoding of `tree` rooted at `root`.
pub fn rooted_code(tree: &Tree, root: usize) -> String {
    let (parent, order) = tree.rooted_order(root);
    let mut child_codes: Vec<Vec<String>> = vec![Vec::new(); tree.order()];
    let mut code = String::new();
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut child_codes[v]);
        kids.sort_unstable();
        code = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        code.push('(');
        for k in &kids {
            code.push_str(k);
        }
        code.push(')');
        if v != root {
            child_codes[parent[v]].push(std::mem::take(&mut code));
        }
    }
    code
}
