//! Exact subtree counts.
//!
//! A subtree is a nonempty vertex subset inducing a connected subgraph.
//! `phi(T)` is the number of subtrees and `f_T(v)` the number containing `v`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::caterpillar::Caterpillar;
use crate::error::{Error, Result};
use crate::tree::Tree;

/// Arbitrary-precision nonnegative count. Serializes as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(pub BigUint);

impl BigCount {
    pub fn pow2(exp: u32) -> Self {
        BigCount(BigUint::one() << exp)
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for BigCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("not a decimal count: {s:?}")));
        }
        Ok(BigCount(s.parse().expect("digits only")))
    }
}

impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for BigCount {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Per-vertex table `v -> f_T(v)`.
pub type VertexCountMap = Vec<BigCount>;

/// `down[v]`: subtrees of the branch below `v` (rooted at `root`) that contain `v`.
fn down_counts(tree: &Tree, root: usize) -> (Vec<usize>, Vec<usize>, Vec<BigUint>) {
    let (parent, order) = tree.rooted_order(root);
    let mut down = vec![BigUint::one(); tree.order()];
    for &v in order.iter().rev() {
        if v != root {
            let term = &down[v] + 1u32;
            down[parent[v]] *= term;
        }
    }
    (parent, order, down)
}

/// `phi(T)`: every subtree is counted at its vertex closest to the root.
pub fn count_subtrees(tree: &Tree) -> BigCount {
    let (_, _, down) = down_counts(tree, 0);
    BigCount(down.into_iter().sum())
}

/// `f_T(v) = prod over neighbours u of (1 + g(u))`, with the tree rooted at `v`.
pub fn count_subtrees_containing(tree: &Tree, v: usize) -> Result<BigCount> {
    tree.check_vertex(v)?;
    let (_, _, mut down) = down_counts(tree, v);
    Ok(BigCount(down.swap_remove(v)))
}

/// Subtrees containing `v` inside the component of `v` left after deleting
/// the edges from `v` to each vertex in `cut`.
pub fn count_in_component(tree: &Tree, v: usize, cut: &[usize]) -> Result<BigCount> {
    tree.check_vertex(v)?;
    let (parent, _, down) = down_counts(tree, v);
    let product = tree
        .neighbors(v)
        .iter()
        .filter(|u| !cut.contains(u))
        .fold(BigUint::one(), |acc, &u| {
            debug_assert_eq!(parent[u], v);
            acc * (&down[u] + 1u32)
        });
    Ok(BigCount(product))
}

/// All `f_T(v)` in one downward and one upward sweep.
///
/// With the parent `p` of `v`, the part of `T` hanging off `v` through `p`
/// contributes `f_T(p) / (1 + down[v])` subtrees through `p`; the division
/// is exact because that factor appears in the product for `f_T(p)`.
pub fn count_all_containing(tree: &Tree) -> VertexCountMap {
    let (parent, order, down) = down_counts(tree, 0);
    let mut full: Vec<BigUint> = vec![BigUint::zero(); tree.order()];
    for &v in &order {
        if v == 0 {
            full[v] = down[v].clone();
        } else {
            let p = parent[v];
            let above = &full[p] / (&down[v] + 1u32);
            full[v] = &down[v] * (above + 1u32);
        }
    }
    full.into_iter().map(BigCount).collect()
}

/// Number of subtrees containing every vertex of `vertices`.
///
/// The minimal subtree spanning `vertices` is contracted to a single vertex,
/// and the count of subtrees through that vertex is taken in the contracted tree.
pub fn count_subtrees_containing_set(tree: &Tree, vertices: &[usize]) -> Result<BigCount> {
    let Some(&first) = vertices.first() else {
        return Err(Error::Parse("vertex set must be nonempty".into()));
    };
    for &v in vertices {
        tree.check_vertex(v)?;
    }
    let n = tree.order();
    let (parent, order) = tree.rooted_order(first);
    // A vertex is in the spanning subtree iff its branch holds a target.
    let mut in_steiner = vec![false; n];
    for &v in vertices {
        in_steiner[v] = true;
    }
    for &v in order.iter().rev() {
        if in_steiner[v] && v != first {
            in_steiner[parent[v]] = true;
        }
    }
    let mut label = vec![0usize; n];
    let mut next = 1;
    for v in 0..n {
        if !in_steiner[v] {
            label[v] = next;
            next += 1;
        }
    }
    let edges: Vec<(usize, usize)> = tree
        .edges()
        .into_iter()
        .filter(|&(u, v)| !(in_steiner[u] && in_steiner[v]))
        .map(|(u, v)| (label[u], label[v]))
        .collect();
    let contracted = Tree::from_edges(next, &edges).expect("contraction of a subtree is a tree");
    count_subtrees_containing(&contracted, 0)
}

/// One row of [`ComponentTable`]: `f_{V_j}(v_j)`, `f_{V_{<=j}}(v_j)`, `f_{V_{>=j}}(v_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRow {
    pub own: BigCount,
    pub left: BigCount,
    pub right: BigCount,
}

/// Spine component counts of a caterpillar for `j = 0..=k+1`.
///
/// `V_j` is the component of `v_j` after deleting both spine edges at `v_j`;
/// `V_{<=j}` keeps the left spine edge and `V_{>=j}` the right one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentTable {
    rows: Vec<ComponentRow>,
}

impl ComponentTable {
    pub fn row(&self, j: usize) -> Result<&ComponentRow> {
        self.rows.get(j).ok_or_else(|| Error::IndexOutOfRange {
            index: j,
            detail: format!("spine positions are 0..={}", self.rows.len() - 1),
        })
    }

    pub fn own(&self, j: usize) -> &BigCount {
        &self.rows[j].own
    }

    pub fn left(&self, j: usize) -> &BigCount {
        &self.rows[j].left
    }

    pub fn right(&self, j: usize) -> &BigCount {
        &self.rows[j].right
    }

    pub fn rows(&self) -> &[ComponentRow] {
        &self.rows
    }
}

pub fn component_counts(c: &Caterpillar) -> ComponentTable {
    let k = c.spine_len();
    let own: Vec<BigUint> = (0..=k + 1)
        .map(|j| if j == 0 || j == k + 1 { BigUint::one() } else { BigUint::one() << c.y(j) })
        .collect();
    let mut left = vec![BigUint::one(); k + 2];
    for j in 1..=k {
        left[j] = &own[j] * (&left[j - 1] + 1u32);
    }
    let mut right = vec![BigUint::one(); k + 2];
    for j in (1..=k).rev() {
        right[j] = &own[j] * (&right[j + 1] + 1u32);
    }
    let rows = own
        .into_iter()
        .zip(left)
        .zip(right)
        .map(|((own, left), right)| ComponentRow {
            own: BigCount(own),
            left: BigCount(left),
            right: BigCount(right),
        })
        .collect();
    ComponentTable { rows }
}

pub const BRUTE_FORCE_LIMIT: usize = 20;

/// Counts connected vertex subsets directly.
///
/// Every subset is grown from its smallest vertex `s`: a frontier of
/// candidate vertices is extended one vertex at a time, and each candidate
/// is either taken or permanently excluded, so each set is produced once.
pub fn brute_force_count(tree: &Tree) -> Result<BigCount> {
    let n = tree.order();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { n, limit: BRUTE_FORCE_LIMIT });
    }
    let nbr_mask: Vec<u32> = (0..n)
        .map(|v| tree.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let mut total = 0u64;
    for s in 0..n {
        let below = (1u32 << s) - 1;
        total += grow(&nbr_mask, 1 << s, nbr_mask[s] & !below, below | (1 << s));
    }
    Ok(BigCount::from(total))
}

fn grow(nbr_mask: &[u32], set: u32, mut frontier: u32, mut blocked: u32) -> u64 {
    let mut count = 1;
    while frontier != 0 {
        let w = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let bit = 1u32 << w;
        let new_blocked = blocked | bit;
        let new_frontier = frontier | (nbr_mask[w] & !new_blocked & !set);
        count += grow(nbr_mask, set | bit, new_frontier, new_blocked);
        blocked |= bit;
    }
    count
}

/// Sum of distances over unordered vertex pairs.
pub fn wiener_index(tree: &Tree) -> BigCount {
    let total: u64 = (0..tree.order())
        .map(|v| {
            tree.bfs_distances(v)
                .into_iter()
                .map(|d| d.unwrap() as u64)
                .sum::<u64>()
        })
        .sum();
    BigCount::from(total / 2)
}
