//! Improving moves: relocating an off-spine branch to the end of a longest
//! path, and reversing a spine segment of a caterpillar.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::caterpillar::Caterpillar;
use crate::count::{component_counts, count_in_component, BigCount};
use crate::error::{Error, Result};
use crate::tree::Tree;

/// A place where [`shift_branch_to_end`] applies: `path = v_0 ... v_r` is a
/// longest path, and `branch` (`y`) is an off-path neighbour of `v_l` that
/// has neighbours `x_1 ... x_s` of its own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftSite {
    pub path: Vec<usize>,
    pub l: usize,
    pub branch: usize,
}

/// Component counts at a [`ShiftSite`].
///
/// * `b_l`: subtrees through `v_l` once the edges to `v_{l+1}` and `y` are cut;
/// * `spine[i]` for `i = l+1..=r`: `a_i`, subtrees through `v_i` with both
///   path edges at `v_i` cut (so `a_r = 1`);
/// * `a`: subtrees through `y` in the branch hanging from `v_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftAnalysis {
    pub site: ShiftSite,
    pub b_l: BigUint,
    pub spine: Vec<BigUint>,
    pub a: BigUint,
}

impl ShiftAnalysis {
    fn a_i(&self, i: usize) -> &BigUint {
        &self.spine[i - self.site.l - 1]
    }

    fn r(&self) -> usize {
        self.site.path.len() - 1
    }

    /// `a_{l+1} (1 + a_{l+2} + a_{l+2} a_{l+3} + ... + a_{l+2} ... a_r)`,
    /// i.e. the subtrees through `v_{l+1}` on the far side of `v_l`.
    pub fn far_side_count(&self) -> BigUint {
        let (l, r) = (self.site.l, self.r());
        let mut acc = BigUint::one();
        for i in (l + 2..=r).rev() {
            acc = BigUint::one() + self.a_i(i) * acc;
        }
        self.a_i(l + 1) * acc
    }

    /// The precondition `b_l > a_{l+1}(1 + a_{l+2} + ... + a_{l+2}...a_r)`.
    pub fn precondition_holds(&self) -> bool {
        self.b_l > self.far_side_count()
    }

    /// `phi(T') - phi(T)` predicted from component counts:
    /// `(1 - a) [ sum_{j=l}^{r-2} b_l a_{l+1}...a_j - sum_{j=l+1}^{r-1} a_j...a_{r-1} ]`.
    pub fn predicted_change(&self) -> BigInt {
        let (l, r) = (self.site.l, self.r());
        let mut near = BigUint::default();
        let mut prod = self.b_l.clone();
        for j in l..=r - 2 {
            if j > l {
                prod *= self.a_i(j);
            }
            near += &prod;
        }
        let mut far = BigUint::default();
        let mut prod = BigUint::one();
        for j in (l + 1..=r - 1).rev() {
            prod *= self.a_i(j);
            far += &prod;
        }
        let bracket = BigInt::from(near) - BigInt::from(far);
        (BigInt::one() - BigInt::from(self.a.clone())) * bracket
    }
}

fn not_applicable(msg: impl Into<String>) -> Error {
    Error::NotApplicable(msg.into())
}

fn validate_site(tree: &Tree, site: &ShiftSite) -> Result<()> {
    if tree.is_caterpillar() {
        return Err(not_applicable("tree is already a caterpillar"));
    }
    let path = &site.path;
    for &v in path.iter().chain([&site.branch]) {
        tree.check_vertex(v)?;
    }
    let r = path.len().saturating_sub(1);
    if r != tree.diameter()
        || path.windows(2).any(|w| !tree.neighbors(w[0]).contains(&w[1]))
        || tree.path_between(path[0], path[r]) != *path
    {
        return Err(not_applicable("path is not a longest path of the tree"));
    }
    if site.l < 2 || site.l + 2 > r {
        return Err(not_applicable(format!("spine index {} outside 2..=r-2", site.l)));
    }
    if path.contains(&site.branch) || !tree.neighbors(path[site.l]).contains(&site.branch) {
        return Err(not_applicable("branch vertex must hang off v_l outside the path"));
    }
    if tree.degree(site.branch) < 2 {
        return Err(not_applicable("branch vertex has no further neighbours"));
    }
    Ok(())
}

/// Every applicable site, over every longest path in both orientations.
pub fn shift_sites(tree: &Tree) -> Vec<ShiftSite> {
    if tree.is_caterpillar() {
        return Vec::new();
    }
    let diam = tree.diameter();
    let mut sites = Vec::new();
    for u in 0..tree.order() {
        let dist = tree.bfs_distances(u);
        for (v, d) in dist.into_iter().enumerate() {
            if d != Some(diam) {
                continue;
            }
            let path = tree.path_between(u, v);
            for l in 2..=diam - 2 {
                for &y in tree.neighbors(path[l]) {
                    if y != path[l - 1] && y != path[l + 1] && tree.degree(y) >= 2 {
                        sites.push(ShiftSite { path: path.clone(), l, branch: y });
                    }
                }
            }
        }
    }
    sites
}

pub fn analyze_shift(tree: &Tree, site: &ShiftSite) -> Result<ShiftAnalysis> {
    validate_site(tree, site)?;
    let (path, l) = (&site.path, site.l);
    let r = path.len() - 1;
    let b_l = count_in_component(tree, path[l], &[path[l + 1], site.branch])?.0;
    let spine = (l + 1..=r)
        .map(|i| {
            let cut: Vec<usize> = [i.checked_sub(1).map(|j| path[j]), path.get(i + 1).copied()]
                .into_iter()
                .flatten()
                .collect();
            count_in_component(tree, path[i], &cut).map(|c| c.0)
        })
        .collect::<Result<Vec<_>>>()?;
    let a = count_in_component(tree, site.branch, &[path[l]])?.0;
    Ok(ShiftAnalysis { site: site.clone(), b_l, spine, a })
}

/// Moves the neighbours `x_1 ... x_s` of `branch` (other than `v_l`) onto
/// the path end `v_r`. The degree sequence is unchanged: `y` and `v_r`
/// trade degrees.
pub fn shift_branch_to_end(tree: &Tree, site: &ShiftSite) -> Result<Tree> {
    validate_site(tree, site)?;
    let v_l = site.path[site.l];
    let v_r = *site.path.last().unwrap();
    let y = site.branch;
    let edges: Vec<(usize, usize)> = tree
        .edges()
        .into_iter()
        .map(|(u, v)| match (u, v) {
            (u, v) if u == y && v != v_l => (v_r, v),
            (u, v) if v == y && u != v_l => (u, v_r),
            e => e,
        })
        .collect();
    Tree::from_edges(tree.order(), &edges)
}

fn check_segment(k: usize, lo: usize, hi: usize, p: usize, q: usize) -> Result<()> {
    if lo < 1 || hi > k || lo > hi {
        return Err(Error::IndexOutOfRange {
            index: p,
            detail: format!("segment around p = {p} with q = {q} leaves the spine 1..={k}"),
        });
    }
    Ok(())
}

fn reverse_positions(c: &Caterpillar, lo: usize, hi: usize) -> Caterpillar {
    let mut y = c.pendants().to_vec();
    y[lo - 1..hi].reverse();
    Caterpillar::new(y).expect("nonempty")
}

/// Reverses `y_{p-q} ... y_{p+q}`, which is the effect of detaching the
/// spine segment `v_{p-q} ... v_{p+q}` and reattaching it flipped.
/// Requires `2 <= p <= k-1` and `q <= min(k-p, p-1)`.
pub fn reverse_segment(c: &Caterpillar, p: usize, q: usize) -> Result<Caterpillar> {
    let k = c.spine_len();
    if p < 2 || p + 1 > k || q > (k - p).min(p - 1) {
        return Err(Error::IndexOutOfRange {
            index: p,
            detail: format!("need 2 <= p <= k-1 and q <= min(k-p, p-1) for k = {k}, q = {q}"),
        });
    }
    check_segment(k, p - q, p + q, p, q)?;
    Ok(reverse_positions(c, p - q, p + q))
}

/// Even-length variant: reverses `y_{p-q} ... y_{p+q+1}`.
/// Requires `1 <= p <= k-1` and `q <= min(k-p-1, p-1)`.
pub fn reverse_segment_even(c: &Caterpillar, p: usize, q: usize) -> Result<Caterpillar> {
    let k = c.spine_len();
    if p < 1 || p + 1 > k || q > (k - p - 1).min(p - 1) {
        return Err(Error::IndexOutOfRange {
            index: p,
            detail: format!("need 1 <= p <= k-1 and q <= min(k-p-1, p-1) for k = {k}, q = {q}"),
        });
    }
    check_segment(k, p - q, p + q + 1, p, q)?;
    Ok(reverse_positions(c, p - q, p + q + 1))
}

/// Whether the odd segment around `p` is "heavier on the left": `f_{V_{p-i}}
/// >= f_{V_{p+i}}` for `i = 1..=q` with one strict, and
/// `f_{V_{<=p-q-1}}(v_{p-q-1}) > f_{V_{>=p+q+1}}(v_{p+q+1})`. When this holds
/// [`reverse_segment`] lowers the subtree count.
pub fn reversal_improves(c: &Caterpillar, p: usize, q: usize) -> Result<bool> {
    reverse_segment(c, p, q)?;
    let t = component_counts(c);
    Ok(dominates((1..=q).map(|i| (t.own(p - i), t.own(p + i))))
        && t.left(p - q - 1) > t.right(p + q + 1))
}

/// Hypothesis for [`reverse_segment_even`]: `f_{V_{p-i}} >= f_{V_{p+i+1}}`
/// for `i = 0..=q` with one strict, and
/// `f_{V_{<=p-q-1}}(v_{p-q-1}) > f_{V_{>=p+q+2}}(v_{p+q+2})`.
pub fn even_reversal_improves(c: &Caterpillar, p: usize, q: usize) -> Result<bool> {
    reverse_segment_even(c, p, q)?;
    let t = component_counts(c);
    Ok(dominates((0..=q).map(|i| (t.own(p - i), t.own(p + i + 1))))
        && t.left(p - q - 1) > t.right(p + q + 2))
}

fn dominates<'a>(pairs: impl Iterator<Item = (&'a BigCount, &'a BigCount)>) -> bool {
    let mut strict = false;
    for (a, b) in pairs {
        if a < b {
            return false;
        }
        strict |= a > b;
    }
    strict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::count_subtrees;

    /// Spider with three legs of length two, center 0.
    fn spider() -> Tree {
        Tree::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn spider_shift_lowers_phi() {
        let t = spider();
        assert_eq!(count_subtrees(&t), 36);
        let site = ShiftSite { path: vec![2, 1, 0, 3, 4], l: 2, branch: 5 };
        let an = analyze_shift(&t, &site).unwrap();
        assert_eq!(an.b_l, BigUint::from(3u32));
        assert_eq!(an.far_side_count(), BigUint::from(2u32));
        assert!(an.precondition_holds());
        let shifted = shift_branch_to_end(&t, &site).unwrap();
        assert!(shifted.is_caterpillar());
        assert_eq!(shifted.degree_multiset(), t.degree_multiset());
        assert_eq!(count_subtrees(&shifted), 34);
        assert_eq!(an.predicted_change(), BigInt::from(-2));
    }

    #[test]
    fn spider_sites() {
        // 6 ordered diametral paths, one off-path branch each
        let sites = shift_sites(&spider());
        assert_eq!(sites.len(), 6);
        assert!(sites.iter().all(|s| s.l == 2 && s.path[2] == 0));
    }

    #[test]
    fn caterpillars_have_no_sites() {
        let c = Caterpillar::new(vec![2, 0, 1]).unwrap().build();
        assert!(shift_sites(&c).is_empty());
        let site = ShiftSite { path: vec![0, 1, 2, 3, 4], l: 2, branch: 5 };
        assert!(matches!(shift_branch_to_end(&c, &site), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn invalid_sites_rejected() {
        let t = spider();
        let bad = [
            ShiftSite { path: vec![2, 1, 0, 3], l: 2, branch: 5 },
            ShiftSite { path: vec![2, 1, 0, 3, 4], l: 1, branch: 5 },
            ShiftSite { path: vec![2, 1, 0, 3, 4], l: 2, branch: 6 },
            ShiftSite { path: vec![2, 1, 0, 3, 4], l: 2, branch: 3 },
        ];
        for site in bad {
            assert!(matches!(shift_branch_to_end(&t, &site), Err(Error::NotApplicable(_))));
        }
    }

    #[test]
    fn segment_reversals() {
        let pal = Caterpillar::new(vec![3, 1, 2, 1, 0]).unwrap();
        assert_eq!(reverse_segment(&pal, 3, 1).unwrap(), pal);
        let c = Caterpillar::new(vec![2, 0, 1]).unwrap();
        let r = reverse_segment(&c, 2, 1).unwrap();
        assert_eq!(r.pendants(), &[1, 0, 2]);
        assert_eq!(r.canonical(), c.canonical());
        assert!(matches!(reverse_segment(&c, 1, 0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(reverse_segment(&c, 2, 2), Err(Error::IndexOutOfRange { .. })));
        let e = Caterpillar::new(vec![4, 0, 1, 2]).unwrap();
        assert_eq!(reverse_segment_even(&e, 2, 1).unwrap().pendants(), &[2, 1, 0, 4]);
        assert_eq!(reverse_segment_even(&e, 2, 0).unwrap().pendants(), &[4, 1, 0, 2]);
        assert!(reverse_segment_even(&e, 3, 1).is_err());
    }
}
