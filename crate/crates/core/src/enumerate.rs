//! Exhaustive generation of the trees and caterpillars realizing a degree
//! sequence.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::One;

use crate::canon::{canonical_form, CanonicalCode};
use crate::caterpillar::Caterpillar;
use crate::count::BigCount;
use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};
use crate::prufer::prufer_decode;
use crate::tree::Tree;

/// Limits checked before any generation starts. Exceeding one is an error,
/// never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Cap on the number of multiset permutations walked (Prüfer words or
    /// caterpillar pendant vectors).
    pub max_labeled: u64,
    /// Cap on the vertex count for full tree enumeration.
    pub max_n: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_labeled: 10_000_000, max_n: 16 }
    }
}

impl EnumerationBudget {
    pub fn with_max_labeled(max_labeled: u64) -> Self {
        EnumerationBudget { max_labeled, ..Default::default() }
    }

    fn check_count(&self, what: &'static str, predicted: &BigUint) -> Result<()> {
        if *predicted > BigUint::from(self.max_labeled) {
            return Err(Error::BudgetExceeded {
                what,
                predicted: predicted.to_string(),
                limit: self.max_labeled.to_string(),
            });
        }
        Ok(())
    }
}

fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `(n-2)! / prod (d_i - 1)!`: labeled trees where vertex `i` has degree `d_i`.
pub fn count_labeled_trees(ds: &DegreeSequence) -> BigCount {
    if ds.n() < 2 {
        return BigCount::from(1);
    }
    let denom = ds
        .degrees()
        .iter()
        .fold(BigUint::one(), |acc, &d| acc * factorial(u64::from(d) - 1));
    BigCount(factorial(ds.n() as u64 - 2) / denom)
}

/// Number of distinct arrangements of `items`.
pub fn multiset_permutation_count(items: &[u32]) -> BigUint {
    let mut sorted = items.to_vec();
    sorted.sort_unstable();
    let denom = sorted
        .chunk_by(|a, b| a == b)
        .fold(BigUint::one(), |acc, run| acc * factorial(run.len() as u64));
    factorial(items.len() as u64) / denom
}

/// Steps `items` to the next lexicographic arrangement; false after the last.
pub fn next_permutation<T: Ord>(items: &mut [T]) -> bool {
    let Some(i) = items.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = items.iter().rposition(|x| *x > items[i]).unwrap();
    items.swap(i, j);
    items[i + 1..].reverse();
    true
}

/// Stream of one representative per isomorphism class of trees realizing a
/// degree sequence.
///
/// Prüfer words with the right letter multiplicities are walked in
/// lexicographic order; each decoded tree is kept only if its canonical code
/// has not been seen before in this stream.
pub struct TreeEnumerator {
    n: usize,
    word: Option<Vec<usize>>,
    seen: HashSet<CanonicalCode>,
    single: Option<Tree>,
    words_walked: u64,
}

impl TreeEnumerator {
    /// Next class as `(code, representative)`.
    pub fn next_coded(&mut self) -> Option<(CanonicalCode, Tree)> {
        if let Some(tree) = self.single.take() {
            self.words_walked += 1;
            return Some((canonical_form(&tree), tree));
        }
        loop {
            let word = self.word.as_mut()?;
            let tree = prufer_decode(word, self.n).expect("word letters are in range");
            self.words_walked += 1;
            if !next_permutation(word) {
                self.word = None;
            }
            let code = canonical_form(&tree);
            if self.seen.insert(code.clone()) {
                return Some((code, tree));
            }
        }
    }

    /// Prüfer words decoded so far.
    pub fn words_walked(&self) -> u64 {
        self.words_walked
    }

    pub fn coded(self) -> impl Iterator<Item = (CanonicalCode, Tree)> {
        let mut this = self;
        std::iter::from_fn(move || this.next_coded())
    }
}

impl Iterator for TreeEnumerator {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        self.next_coded().map(|(_, t)| t)
    }
}

pub fn enumerate_trees(ds: &DegreeSequence, budget: &EnumerationBudget) -> Result<TreeEnumerator> {
    let n = ds.n();
    if ds.k() > 1 {
        budget.check_count("labeled tree count", &count_labeled_trees(ds).0)?;
    }
    if n > budget.max_n {
        return Err(Error::BudgetExceeded {
            what: "vertex count",
            predicted: n.to_string(),
            limit: budget.max_n.to_string(),
        });
    }
    let mut e = TreeEnumerator {
        n,
        word: None,
        seen: HashSet::new(),
        single: None,
        words_walked: 0,
    };
    // One- and two-vertex trees and stars have a unique realization.
    if ds.k() <= 1 {
        e.single = Some(Tree::star(n));
        return Ok(e);
    }
    let word: Vec<usize> = ds
        .degrees()
        .iter()
        .enumerate()
        .flat_map(|(v, &d)| std::iter::repeat_n(v, d as usize - 1))
        .collect();
    e.word = Some(word);
    Ok(e)
}

/// Stream of the caterpillars realizing a degree sequence, one per
/// unlabeled tree: each arrangement of the pendant counts is kept only in
/// its canonical orientation.
pub struct CaterpillarEnumerator {
    y: Option<Vec<u32>>,
}

impl Iterator for CaterpillarEnumerator {
    type Item = Caterpillar;

    fn next(&mut self) -> Option<Caterpillar> {
        loop {
            let y = self.y.as_mut()?;
            let current = Caterpillar::new(y.clone()).expect("k >= 1");
            if !next_permutation(y) {
                self.y = None;
            }
            if current.is_canonical() {
                return Some(current);
            }
        }
    }
}

pub fn enumerate_caterpillars(ds: &DegreeSequence) -> Result<CaterpillarEnumerator> {
    enumerate_caterpillars_within(ds, &EnumerationBudget::default())
}

pub fn enumerate_caterpillars_within(
    ds: &DegreeSequence,
    budget: &EnumerationBudget,
) -> Result<CaterpillarEnumerator> {
    if ds.k() == 0 {
        return Err(Error::NoInternalVertices);
    }
    let mut y = ds.pendant_counts();
    budget.check_count("caterpillar arrangement count", &multiset_permutation_count(&y))?;
    y.sort_unstable();
    Ok(CaterpillarEnumerator { y: Some(y) })
}

/// All tree degree sequences on `n` vertices, in lexicographically
/// decreasing order.
pub fn enumerate_degree_sequences(n: usize) -> Vec<DegreeSequence> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![DegreeSequence::new(vec![0]).unwrap()];
    }
    // Excess degrees d_i - 1 form a partition of n - 2 into at most n parts.
    let mut out = Vec::new();
    let mut parts = Vec::new();
    partitions(n - 2, n - 2, n, &mut parts, &mut |p| {
        let mut degrees: Vec<u32> = p.iter().map(|&e| e as u32 + 1).collect();
        degrees.resize(n, 1);
        out.push(DegreeSequence::new(degrees).expect("partition gives a tree sequence"));
    });
    out
}

fn partitions(
    remaining: usize,
    max_part: usize,
    max_len: usize,
    parts: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if remaining == 0 {
        emit(parts);
        return;
    }
    if parts.len() == max_len {
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        parts.push(part);
        partitions(remaining - part, part, max_len, parts, emit);
        parts.pop();
    }
}

/// Degree sequences for every order in `1..=max_n`, smallest order first.
pub fn degree_sequences_up_to(max_n: usize) -> Vec<DegreeSequence> {
    (1..=max_n).flat_map(enumerate_degree_sequences).collect()
}
