//! Subtree counts of trees with a prescribed degree sequence.
//!
//! The crate counts subtrees exactly, enumerates every tree (or caterpillar)
//! realizing a degree sequence, finds the trees with the fewest and the most
//! subtrees, and checks the known structural facts about those extremal
//! trees by exhaustive search.

pub mod canon;
pub mod caterpillar;
pub mod count;
pub mod degseq;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod prufer;
pub mod tree;
pub mod verify;

pub use canon::{canonical_form, CanonicalCode};
pub use caterpillar::{caterpillar_build, caterpillar_canonical, Caterpillar};
pub use count::{
    brute_force_count, component_counts, count_all_containing, count_in_component, count_subtrees,
    count_subtrees_containing, count_subtrees_containing_set, wiener_index, BigCount,
    ComponentTable, VertexCountMap,
};
pub use degseq::DegreeSequence;
pub use enumerate::{
    count_labeled_trees, enumerate_caterpillars, enumerate_degree_sequences, enumerate_trees,
    EnumerationBudget,
};
pub use error::{Error, Result};
pub use extremal::{
    closed_form_phi, find_extremal, find_max_subtrees, find_min_subtrees, predict_min_k5,
    reverse_segment, shift_branch_to_end, ExtremalReport, Method, Objective, TrichotomyCase,
};
pub use prufer::{prufer_decode, prufer_encode};
pub use tree::Tree;
pub use verify::{run_claim, Claim, Status, VerificationReport};
