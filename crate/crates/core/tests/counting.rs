//! Subtree counts against independent oracles.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use treextremal::enumerate::{degree_sequences_up_to, enumerate_trees, EnumerationBudget};
use treextremal::extremal::{even_reversal_improves, k5_difference, k5_first_form, k5_second_form};
use treextremal::{
    brute_force_count, count_all_containing, count_subtrees, count_subtrees_containing,
    count_subtrees_containing_set, prufer_decode, reverse_segment, Caterpillar, DegreeSequence, Tree,
};
use treextremal::extremal::{reversal_improves, reverse_segment_even};

/// Connected vertex subsets containing `required`, by checking every mask.
fn masks_containing(tree: &Tree, required: u32) -> u64 {
    let n = tree.order();
    (1u32..1 << n)
        .filter(|m| m & required == required)
        .filter(|&m| {
            let start = m.trailing_zeros() as usize;
            let mut seen = 1u32 << start;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in tree.neighbors(v) {
                    if m & (1 << w) != 0 && seen & (1 << w) == 0 {
                        seen |= 1 << w;
                        stack.push(w);
                    }
                }
            }
            seen == m
        })
        .count() as u64
}

fn random_tree(rng: &mut StdRng, n: usize) -> Tree {
    let word: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(&word, n).unwrap()
}

fn shuffled(tree: &Tree, rng: &mut StdRng) -> Tree {
    let mut perm: Vec<usize> = (0..tree.order()).collect();
    perm.shuffle(rng);
    tree.relabel(&perm)
}

fn all_unlabeled(max_n: usize) -> Vec<Tree> {
    let budget = EnumerationBudget::default();
    degree_sequences_up_to(max_n)
        .iter()
        .flat_map(|ds| enumerate_trees(ds, &budget).unwrap().collect::<Vec<_>>())
        .collect()
}

#[test]
fn per_vertex_counts_match_mask_oracle() {
    let mut rng = StdRng::seed_from_u64(7);
    for tree in all_unlabeled(9) {
        let tree = shuffled(&tree, &mut rng);
        let all = count_all_containing(&tree);
        for (v, count) in all.iter().enumerate() {
            let want = masks_containing(&tree, 1 << v);
            assert_eq!(*count, want);
            assert_eq!(count_subtrees_containing(&tree, v).unwrap(), want);
        }
        assert_eq!(count_subtrees(&tree), masks_containing(&tree, 0));
    }
}

#[test]
fn vertex_set_counts_match_mask_oracle() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.gen_range(2..=12);
        let tree = random_tree(&mut rng, n);
        let size = rng.gen_range(1..=n.min(4));
        let mut vs: Vec<usize> = (0..n).collect();
        vs.shuffle(&mut rng);
        vs.truncate(size);
        let mask = vs.iter().fold(0u32, |m, &v| m | 1 << v);
        assert_eq!(count_subtrees_containing_set(&tree, &vs).unwrap(), masks_containing(&tree, mask));
    }
}

#[test]
fn leaf_deletion_recurrence() {
    // phi(T) = phi(T - leaf) + f_{T - leaf}(parent) + 1
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..500 {
        let n = rng.gen_range(3..=40);
        let tree = random_tree(&mut rng, n);
        let leaf = (0..n).find(|&v| tree.is_leaf(v)).unwrap();
        let parent = tree.neighbors(leaf)[0];
        // Relabel so the leaf becomes n-1 and can be dropped.
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(leaf, n - 1);
        let moved = tree.relabel(&perm);
        let kept: Vec<(usize, usize)> = moved.edges().into_iter().filter(|&(_, v)| v != n - 1).collect();
        let smaller = Tree::from_edges(n - 1, &kept).unwrap();
        let p = perm[parent];
        let expected = count_subtrees(&smaller).0 + count_subtrees_containing(&smaller, p).unwrap().0 + 1u32;
        assert_eq!(count_subtrees(&tree).0, expected);
    }
}

#[test]
fn paths_and_stars() {
    for n in 1..=60u32 {
        let n_us = n as usize;
        assert_eq!(count_subtrees(&Tree::path(n_us)), u64::from(n * (n + 1) / 2));
        let star = count_subtrees(&Tree::star(n_us)).0;
        let want = if n == 1 { 1u32.into() } else { num_bigint::BigUint::from(2u32).pow(n - 1) + (n - 1) };
        assert_eq!(star, want);
    }
}

#[test]
fn counting_is_label_invariant() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.gen_range(2..=80);
        let tree = random_tree(&mut rng, n);
        assert_eq!(count_subtrees(&tree), count_subtrees(&shuffled(&tree, &mut rng)));
    }
}

#[test]
fn odd_reversal_hypothesis_lowers_count() {
    let mut checked = 0;
    for y in small_vectors(7, 2) {
        let c = Caterpillar::new(y).unwrap();
        let phi = count_subtrees(&c.build());
        let k = c.spine_len();
        for p in 2..k {
            for q in 1..=(k - p).min(p - 1) {
                if reversal_improves(&c, p, q).unwrap() {
                    checked += 1;
                    let after = count_subtrees(&reverse_segment(&c, p, q).unwrap().build());
                    assert!(after < phi, "{c} p={p} q={q}: {phi} -> {after}");
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn even_reversal_hypothesis_lowers_count() {
    let mut checked = 0;
    for y in small_vectors(7, 2) {
        let c = Caterpillar::new(y).unwrap();
        let phi = count_subtrees(&c.build());
        let k = c.spine_len();
        for p in 1..k {
            for q in 0..=(k - p - 1).min(p - 1) {
                if even_reversal_improves(&c, p, q).unwrap() {
                    checked += 1;
                    let after = count_subtrees(&reverse_segment_even(&c, p, q).unwrap().build());
                    assert!(after < phi, "{c} p={p} q={q}: {phi} -> {after}");
                }
            }
        }
    }
    assert!(checked > 0);
}

/// All vectors of length 1..=max_len with entries at most `max_entry`.
fn small_vectors(max_len: usize, max_entry: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=max_entry).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[test]
fn k5_difference_matches_direct_counts() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..400 {
        let mut internal: Vec<u32> = (0..5).map(|_| rng.gen_range(2..=9)).collect();
        internal.sort_unstable_by(|a, b| b.cmp(a));
        let leaves = internal.iter().map(|d| d - 2).sum::<u32>() + 2;
        let mut degrees = internal;
        degrees.extend(std::iter::repeat_n(1, leaves as usize));
        let ds = DegreeSequence::new(degrees).unwrap();
        let phi = |y: Vec<u32>| num_bigint::BigInt::from(count_subtrees(&Caterpillar::new(y).unwrap().build()).0);
        assert_eq!(k5_difference(&ds).unwrap(), phi(k5_first_form(&ds)) - phi(k5_second_form(&ds)), "{ds}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dp_matches_growth_oracle(word in (3usize..=18).prop_flat_map(|n| proptest::collection::vec(0..n, n - 2))) {
        let tree = prufer_decode(&word, word.len() + 2).unwrap();
        prop_assert_eq!(count_subtrees(&tree), brute_force_count(&tree).unwrap());
    }

    #[test]
    fn caterpillar_build_is_consistent(y in proptest::collection::vec(0u32..5, 1..8)) {
        let c = Caterpillar::new(y.clone()).unwrap();
        let tree = c.build();
        prop_assert_eq!(tree.order(), c.order());
        prop_assert!(tree.is_caterpillar());
        prop_assert_eq!(tree.degree_multiset(), c.degree_sequence().degrees().to_vec());
        prop_assert_eq!(count_subtrees(&tree), count_subtrees(&c.reversed().build()));
        if tree.order() > 2 {
            let seen = Caterpillar::recognize(&tree).unwrap();
            prop_assert_eq!(seen.canonical(), c.canonical());
        }
    }
}
