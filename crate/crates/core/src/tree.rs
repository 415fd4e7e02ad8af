//! Unrooted trees on dense `0..n` vertex labels.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An unrooted tree stored as sorted adjacency lists.
///
/// Construction validates the tree invariants: `n - 1` edges, no loops or
/// duplicate edges, connected. Every value of this type is a tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

impl Tree {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTree("a tree needs at least one vertex".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::InvalidTree(format!(
                "{} edges given, a tree on {} vertices has {}",
                edges.len(),
                n,
                n - 1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidTree(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if nbrs.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidTree(format!("duplicate edge at {v}")));
            }
        }
        let tree = Tree { adj };
        if tree.bfs_distances(0).iter().any(|d| d.is_none()) {
            return Err(Error::InvalidTree("graph is not connected".into()));
        }
        Ok(tree)
    }

    /// Builds from adjacency lists known to describe a tree.
    pub(crate) fn from_adjacency_unchecked(mut adj: Vec<Vec<usize>>) -> Self {
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        debug_assert_eq!(adj.iter().map(Vec::len).sum::<usize>(), 2 * (adj.len() - 1));
        Tree { adj }
    }

    pub fn path(n: usize) -> Self {
        assert!(n >= 1);
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Tree::from_edges(n, &edges).expect("path is a tree")
    }

    /// `K_{1,n-1}` with center 0.
    pub fn star(n: usize) -> Self {
        assert!(n >= 1);
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Tree::from_edges(n, &edges).expect("star is a tree")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    /// Each edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.order().saturating_sub(1));
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    /// Degrees sorted nonincreasingly.
    pub fn degree_multiset(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.adj.iter().map(|a| a.len() as u32).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.order() })
        }
    }

    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Parent pointers and a BFS order from `root`; `parent[root] == usize::MAX`.
    pub fn rooted_order(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.order();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[root] = true;
        order.push(root);
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    order.push(w);
                }
            }
        }
        (parent, order)
    }

    /// Vertices of the unique `u`-`v` path, starting at `u`.
    pub fn path_between(&self, u: usize, v: usize) -> Vec<usize> {
        let (parent, _) = self.rooted_order(v);
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            cur = parent[cur];
            path.push(cur);
        }
        path
    }

    /// Length of a longest path, found by two sweeps.
    pub fn diameter(&self) -> usize {
        let (far, _) = self.farthest_from(0);
        self.farthest_from(far).1
    }

    fn farthest_from(&self, source: usize) -> (usize, usize) {
        self.bfs_distances(source)
            .into_iter()
            .enumerate()
            .map(|(v, d)| (v, d.expect("tree is connected")))
            .fold((source, 0), |best, cur| if cur.1 > best.1 { cur } else { best })
    }

    /// True iff deleting all leaves leaves a path (or at most one vertex).
    pub fn is_caterpillar(&self) -> bool {
        if self.order() <= 2 {
            return true;
        }
        self.adj.iter().enumerate().filter(|(_, a)| a.len() > 1).all(|(_, nbrs)| {
            nbrs.iter().filter(|&&w| !self.is_leaf(w)).count() <= 2
        })
    }

    /// Vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Tree {
        assert_eq!(perm.len(), self.order());
        let mut adj = vec![Vec::new(); self.order()];
        for (u, nbrs) in self.adj.iter().enumerate() {
            adj[perm[u]] = nbrs.iter().map(|&w| perm[w]).collect();
        }
        Tree::from_adjacency_unchecked(adj)
    }

    /// Serializes in the edge-list text format: `n`, then one `u v` per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.order());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl FromStr for Tree {
    type Err = Error;

    /// Parses the edge-list text format. Blank lines are ignored.
    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count {header:?}")))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut parts = line.split_whitespace();
            let mut next = || -> Result<usize> {
                let tok = parts
                    .next()
                    .ok_or_else(|| Error::Parse(format!("edge line {line:?} needs two labels")))?;
                tok.parse()
                    .map_err(|_| Error::Parse(format!("bad vertex label {tok:?}")))
            };
            let (u, v) = (next()?, next()?);
            if parts.next().is_some() {
                return Err(Error::Parse(format!("trailing data on edge line {line:?}")));
            }
            edges.push((u, v));
        }
        Tree::from_edges(n, &edges)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}
