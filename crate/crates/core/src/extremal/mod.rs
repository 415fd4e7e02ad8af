//! Trees with the fewest or the most subtrees among all realizations of a
//! degree sequence.

mod closed_form;
mod shape;
mod transform;

pub use closed_form::{
    closed_form_phi, k5_difference, k5_first_form, k5_second_form, predict_min_k5, Case,
    TrichotomyCase,
};
pub use shape::{mountain_index, oriented_mountain, oriented_valley, valley_index};
pub use transform::{
    analyze_shift, even_reversal_improves, reversal_improves, reverse_segment,
    reverse_segment_even, shift_branch_to_end, shift_sites, ShiftAnalysis, ShiftSite,
};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalCode};
use crate::caterpillar::Caterpillar;
use crate::count::{count_subtrees, BigCount};
use crate::degseq::DegreeSequence;
use crate::enumerate::{
    enumerate_caterpillars_within, enumerate_trees, multiset_permutation_count, EnumerationBudget,
};
use crate::error::{Error, Result};
use crate::tree::Tree;

/// Caterpillar searches at most this large back up the closed forms in
/// [`Method::Auto`].
pub const CROSS_CHECK_LIMIT: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Objective {
    #[serde(rename = "min-subtrees")]
    Min,
    #[serde(rename = "max-subtrees")]
    Max,
}

impl Objective {
    fn better(self, candidate: &BigCount, incumbent: &BigCount) -> bool {
        match self {
            Objective::Min => candidate < incumbent,
            Objective::Max => candidate > incumbent,
        }
    }
}

/// Requested search strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Every tree realizing the sequence.
    Brute,
    /// Caterpillars only; complete for minimization since every minimizer
    /// is a caterpillar.
    Caterpillar,
    /// Closed forms (`k <= 5`, minimization only).
    ClosedForm,
    /// Minimization: closed form for `k <= 5`, caterpillar search above.
    /// Maximization: brute force within budget, else caterpillars.
    Auto,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Method::Brute),
            "caterpillar" => Ok(Method::Caterpillar),
            "closed-form" => Ok(Method::ClosedForm),
            "auto" => Ok(Method::Auto),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::Caterpillar => "caterpillar",
            Method::ClosedForm => "closed-form",
            Method::Auto => "auto",
        })
    }
}

/// One optimal tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Optimizer {
    pub canonical_code: CanonicalCode,
    /// Pendant vector in canonical orientation when the tree is a
    /// caterpillar with at least one internal vertex.
    pub caterpillar: Option<Vec<u32>>,
    pub edges: Vec<(usize, usize)>,
    /// Valley position (minimization) or mountain position (maximization)
    /// of the pendant vector, 1-based, when it has that shape.
    pub shape_index: Option<usize>,
}

impl Optimizer {
    fn new(tree: &Tree, code: CanonicalCode, objective: Objective) -> Self {
        let caterpillar = Caterpillar::recognize(tree).map(|c| c.canonical().pendants().to_vec());
        let shape_index = caterpillar.as_deref().and_then(|y| match objective {
            Objective::Min => oriented_valley(y).map(|(_, t)| t),
            Objective::Max => oriented_mountain(y).map(|(_, t)| t),
        });
        Optimizer { canonical_code: code, caterpillar, edges: tree.edges(), shape_index }
    }

    fn from_caterpillar(c: &Caterpillar, objective: Objective) -> Self {
        let tree = c.canonical().build();
        let code = canonical_form(&tree);
        Optimizer::new(&tree, code, objective)
    }

    pub fn tree(&self) -> Tree {
        Tree::from_edges(self.edges.len() + 1, &self.edges).expect("optimizer edges form a tree")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub degree_sequence: DegreeSequence,
    pub objective: Objective,
    pub optimum: BigCount,
    /// All optimal trees up to isomorphism, sorted by canonical code.
    pub optimizers: Vec<Optimizer>,
    /// Search space actually used; never `Auto`.
    pub method: Method,
    pub trees_examined: u64,
    /// Closed-form answers that were confirmed by a caterpillar search.
    pub cross_checked: bool,
}

impl ExtremalReport {
    pub fn optimizer_codes(&self) -> BTreeSet<CanonicalCode> {
        self.optimizers.iter().map(|o| o.canonical_code.clone()).collect()
    }

    /// Canonical pendant vectors of the optimizers that are caterpillars.
    pub fn caterpillar_optimizers(&self) -> Vec<Vec<u32>> {
        self.optimizers.iter().filter_map(|o| o.caterpillar.clone()).collect()
    }
}

/// Keeps every candidate tied for the best value seen so far.
struct Best {
    objective: Objective,
    value: Option<BigCount>,
    winners: Vec<(CanonicalCode, Tree)>,
    examined: u64,
}

impl Best {
    fn new(objective: Objective) -> Self {
        Best { objective, value: None, winners: Vec::new(), examined: 0 }
    }

    fn offer(&mut self, code: CanonicalCode, tree: Tree) {
        self.examined += 1;
        let phi = count_subtrees(&tree);
        match &self.value {
            Some(v) if *v == phi => self.winners.push((code, tree)),
            Some(v) if !self.objective.better(&phi, v) => {}
            _ => {
                self.value = Some(phi);
                self.winners = vec![(code, tree)];
            }
        }
    }

    fn into_report(self, ds: &DegreeSequence, method: Method) -> ExtremalReport {
        let objective = self.objective;
        let mut optimizers: Vec<Optimizer> = self
            .winners
            .into_iter()
            .map(|(code, tree)| Optimizer::new(&tree, code, objective))
            .collect();
        optimizers.sort_by(|a, b| a.canonical_code.cmp(&b.canonical_code));
        ExtremalReport {
            degree_sequence: ds.clone(),
            objective,
            optimum: self.value.expect("every degree sequence has a realization"),
            optimizers,
            method,
            trees_examined: self.examined,
            cross_checked: false,
        }
    }
}

fn search_brute(
    ds: &DegreeSequence,
    objective: Objective,
    budget: &EnumerationBudget,
) -> Result<ExtremalReport> {
    let mut best = Best::new(objective);
    for (code, tree) in enumerate_trees(ds, budget)?.coded() {
        best.offer(code, tree);
    }
    Ok(best.into_report(ds, Method::Brute))
}

fn search_caterpillars(
    ds: &DegreeSequence,
    objective: Objective,
    budget: &EnumerationBudget,
) -> Result<ExtremalReport> {
    let mut best = Best::new(objective);
    if ds.k() == 0 {
        let tree = Tree::path(ds.n());
        best.offer(canonical_form(&tree), tree);
    } else {
        for c in enumerate_caterpillars_within(ds, budget)? {
            let tree = c.build();
            best.offer(canonical_form(&tree), tree);
        }
    }
    Ok(best.into_report(ds, Method::Caterpillar))
}

fn search_closed_form(ds: &DegreeSequence) -> Result<ExtremalReport> {
    let k = ds.k();
    let (optimum, cats, examined) = match k {
        // A single realization: the one- or two-vertex path, or a star.
        0 | 1 => {
            let n = ds.n() as u64;
            let phi = match n {
                1 => BigCount::from(1),
                2 => BigCount::from(3),
                _ => BigCount(BigCount::pow2(n as u32 - 1).0 + (n - 1)),
            };
            let report_tree = Tree::star(ds.n());
            let code = canonical_form(&report_tree);
            return Ok(ExtremalReport {
                degree_sequence: ds.clone(),
                objective: Objective::Min,
                optimum: phi,
                optimizers: vec![Optimizer::new(&report_tree, code, Objective::Min)],
                method: Method::ClosedForm,
                trees_examined: 0,
                cross_checked: false,
            });
        }
        2..=4 => {
            let (value, c) = closed_form_phi(ds)?;
            (value, vec![c], 0)
        }
        5 => {
            let (_, cats) = predict_min_k5(ds)?;
            let best = cats
                .iter()
                .map(|c| count_subtrees(&c.build()))
                .min()
                .expect("at least one predicted form");
            let n = cats.len() as u64;
            (best, cats, n)
        }
        _ => {
            return Err(Error::ClosedFormUnavailable(format!(
                "no closed form for k = {k} internal vertices"
            )))
        }
    };
    let mut optimizers: Vec<Optimizer> = cats
        .iter()
        .map(|c| Optimizer::from_caterpillar(c, Objective::Min))
        .collect();
    optimizers.sort_by(|a, b| a.canonical_code.cmp(&b.canonical_code));
    optimizers.dedup_by(|a, b| a.canonical_code == b.canonical_code);
    Ok(ExtremalReport {
        degree_sequence: ds.clone(),
        objective: Objective::Min,
        optimum,
        optimizers,
        method: Method::ClosedForm,
        trees_examined: examined,
        cross_checked: false,
    })
}

pub fn find_min_subtrees(
    ds: &DegreeSequence,
    method: Method,
    budget: &EnumerationBudget,
) -> Result<ExtremalReport> {
    match method {
        Method::Brute => search_brute(ds, Objective::Min, budget),
        Method::Caterpillar => search_caterpillars(ds, Objective::Min, budget),
        Method::ClosedForm => search_closed_form(ds),
        Method::Auto if ds.k() <= 5 => {
            let mut report = search_closed_form(ds)?;
            let arrangements = multiset_permutation_count(&ds.pendant_counts());
            if arrangements <= CROSS_CHECK_LIMIT.into() {
                let check = search_caterpillars(ds, Objective::Min, budget)?;
                if check.optimum != report.optimum
                    || check.optimizer_codes() != report.optimizer_codes()
                {
                    return Err(Error::CrossCheckMismatch(ds.to_string()));
                }
                report.cross_checked = true;
                report.trees_examined += check.trees_examined;
            }
            Ok(report)
        }
        Method::Auto => search_caterpillars(ds, Objective::Min, budget),
    }
}

pub fn find_max_subtrees(
    ds: &DegreeSequence,
    method: Method,
    budget: &EnumerationBudget,
) -> Result<ExtremalReport> {
    match method {
        Method::Brute => search_brute(ds, Objective::Max, budget),
        Method::Caterpillar => search_caterpillars(ds, Objective::Max, budget),
        Method::ClosedForm => Err(Error::ClosedFormUnavailable(
            "no closed form is known for the maximum".into(),
        )),
        Method::Auto => match search_brute(ds, Objective::Max, budget) {
            Err(Error::BudgetExceeded { .. }) => {
                search_caterpillars(ds, Objective::Max, budget)
            }
            other => other,
        },
    }
}

pub fn find_extremal(
    ds: &DegreeSequence,
    objective: Objective,
    method: Method,
    budget: &EnumerationBudget,
) -> Result<ExtremalReport> {
    match objective {
        Objective::Min => find_min_subtrees(ds, method, budget),
        Objective::Max => find_max_subtrees(ds, method, budget),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    fn budget() -> EnumerationBudget {
        EnumerationBudget::default()
    }

    #[test]
    fn min_for_two_caterpillars() {
        let r = find_min_subtrees(&ds("3,2,2,1*3"), Method::Brute, &budget()).unwrap();
        assert_eq!(r.optimum, 24);
        assert_eq!(r.trees_examined, 2);
        assert_eq!(r.caterpillar_optimizers(), vec![vec![1, 0, 0]]);
        assert_eq!(r.optimizers[0].shape_index, Some(2));
        assert_eq!(r.method, Method::Brute);
    }

    #[test]
    fn max_for_two_caterpillars() {
        let r = find_max_subtrees(&ds("3,2,2,1*3"), Method::Brute, &budget()).unwrap();
        assert_eq!(r.caterpillar_optimizers(), vec![vec![0, 1, 0]]);
        assert_eq!(r.optimum, 25);
        assert_eq!(r.optimizers[0].shape_index, Some(2));
    }

    #[test]
    fn path_sequences() {
        for n in 2..9u64 {
            let s = DegreeSequence::new(
                std::iter::repeat_n(2, n as usize - 2).chain([1, 1]).collect(),
            )
            .unwrap();
            for method in [Method::Brute, Method::Caterpillar, Method::Auto] {
                let r = find_min_subtrees(&s, method, &budget()).unwrap();
                assert_eq!(r.optimum, n * (n + 1) / 2);
                assert_eq!(r.optimizers.len(), 1);
                assert_eq!(r.optimizers[0].canonical_code, canonical_form(&Tree::path(n as usize)));
            }
        }
    }

    #[test]
    fn degenerate_sequences() {
        for (s, phi) in [("0", 1u64), ("1,1", 3), ("2,1,1", 6), ("5,1*5", 37)] {
            for method in [Method::Brute, Method::Caterpillar, Method::ClosedForm, Method::Auto] {
                let r = find_min_subtrees(&ds(s), method, &budget()).unwrap();
                assert_eq!(r.optimum, phi, "{s} {method}");
                assert_eq!(r.optimizers.len(), 1);
            }
        }
    }

    #[test]
    fn k5_case_one_instance() {
        let s = ds("8,3,3,3,2,1*11");
        let r = find_min_subtrees(&s, Method::Caterpillar, &budget()).unwrap();
        assert_eq!(r.caterpillar_optimizers(), vec![vec![6, 0, 1, 1, 1]]);
        let auto = find_min_subtrees(&s, Method::Auto, &budget()).unwrap();
        assert!(auto.cross_checked);
        assert_eq!(auto.method, Method::ClosedForm);
        assert_eq!(auto.optimum, r.optimum);
    }

    #[test]
    fn closed_form_limits() {
        let s = ds("2*6,1*2");
        assert!(matches!(
            find_min_subtrees(&s, Method::ClosedForm, &budget()),
            Err(Error::ClosedFormUnavailable(_))
        ));
        assert_eq!(find_min_subtrees(&s, Method::Auto, &budget()).unwrap().method, Method::Caterpillar);
        assert!(matches!(
            find_max_subtrees(&ds("3,2,1*3"), Method::ClosedForm, &budget()),
            Err(Error::ClosedFormUnavailable(_))
        ));
    }

    #[test]
    fn auto_max_falls_back_to_caterpillars() {
        let s = ds("3*4,2,1*6");
        let tight = EnumerationBudget::with_max_labeled(100);
        let r = find_max_subtrees(&s, Method::Auto, &tight).unwrap();
        assert_eq!(r.method, Method::Caterpillar);
        let full = find_max_subtrees(&s, Method::Auto, &budget()).unwrap();
        assert_eq!(full.method, Method::Brute);
        assert!(full.optimum >= r.optimum);
    }

    #[test]
    fn report_serializes_counts_as_strings() {
        let r = find_min_subtrees(&ds("3,2,1*3"), Method::Auto, &budget()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["optimum"], "17");
        assert_eq!(v["objective"], "min-subtrees");
        assert_eq!(v["method"], "closed-form");
        assert_eq!(v["degree_sequence"], serde_json::json!([3, 2, 1, 1, 1]));
        assert_eq!(v["optimizers"][0]["caterpillar"], serde_json::json!([1, 0]));
    }
}
