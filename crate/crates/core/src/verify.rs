//! Exhaustive checks of the structural facts about extremal trees.
//!
//! Each check sweeps a universe of degree sequences (smallest order first,
//! then lexicographically decreasing), runs per-sequence work in parallel and
//! merges results in sweep order, so reports are deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::canon::{canonical_form, CanonicalCode};
use crate::caterpillar::Caterpillar;
use crate::count::{count_subtrees, wiener_index, BigCount};
use crate::degseq::DegreeSequence;
use crate::enumerate::{degree_sequences_up_to, enumerate_degree_sequences, enumerate_trees, EnumerationBudget};
use crate::error::{Error, Result};
use crate::extremal::{
    analyze_shift, closed_form_phi, find_max_subtrees, find_min_subtrees, k5_difference,
    k5_first_form, k5_second_form, oriented_mountain, oriented_valley, predict_min_k5,
    shift_branch_to_end, shift_sites, Case, Method,
};
use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Claim {
    /// Every subtree minimizer is a caterpillar.
    #[serde(rename = "thm-2.1")]
    CaterpillarMinimality,
    /// Caterpillar minimizers have a valley-shaped pendant vector.
    #[serde(rename = "thm-3.5")]
    ValleyShape,
    /// Caterpillar maximizers have a mountain-shaped pendant vector.
    #[serde(rename = "thm-3.6-shape")]
    MountainShape,
    /// Closed forms and unique minimizers for two to four internal vertices.
    #[serde(rename = "thm-4.1")]
    ClosedForms,
    /// Minimizer sets for five internal vertices.
    #[serde(rename = "thm-4.2")]
    Trichotomy,
    /// Moving a branch to the end of a longest path lowers the count.
    #[serde(rename = "eq-2.1-monotonic")]
    ShiftMonotonicity,
    /// Subtree extremes against Wiener extremes (report only).
    #[serde(rename = "wiener-correspondence")]
    WienerCorrespondence,
    /// The path has the fewest and the star the most subtrees of each order.
    #[serde(rename = "path-star-extremes")]
    PathStarExtremes,
}

impl Claim {
    pub const ALL: [Claim; 8] = [
        Claim::CaterpillarMinimality,
        Claim::ValleyShape,
        Claim::MountainShape,
        Claim::ClosedForms,
        Claim::Trichotomy,
        Claim::ShiftMonotonicity,
        Claim::WienerCorrespondence,
        Claim::PathStarExtremes,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::CaterpillarMinimality => "thm-2.1",
            Claim::ValleyShape => "thm-3.5",
            Claim::MountainShape => "thm-3.6-shape",
            Claim::ClosedForms => "thm-4.1",
            Claim::Trichotomy => "thm-4.2",
            Claim::ShiftMonotonicity => "eq-2.1-monotonic",
            Claim::WienerCorrespondence => "wiener-correspondence",
            Claim::PathStarExtremes => "path-star-extremes",
        }
    }

    pub fn report_only(self) -> bool {
        self == Claim::WienerCorrespondence
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown claim {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ReportOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Universe {
    pub n_min: usize,
    pub n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_min: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<usize>,
}

impl Universe {
    fn orders(n_max: usize) -> Self {
        Universe { n_min: 1, n_max, k_min: None, k_max: None }
    }

    fn with_k(n_max: usize, k_min: usize, k_max: usize) -> Self {
        Universe { n_min: 1, n_max, k_min: Some(k_min), k_max: Some(k_max) }
    }

    fn sequences(&self) -> Vec<DegreeSequence> {
        degree_sequences_up_to(self.n_max)
            .into_iter()
            .filter(|ds| ds.n() >= self.n_min)
            .filter(|ds| self.k_min.is_none_or(|k| ds.k() >= k))
            .filter(|ds| self.k_max.is_none_or(|k| ds.k() <= k))
            .collect()
    }
}

/// A counterexample, with enough data to rerun the single instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub degree_sequence: DegreeSequence,
    /// Canonical codes (or pendant vectors) of the trees involved.
    pub witnesses: Vec<String>,
    pub expected: String,
    pub observed: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: Claim,
    pub universe: Universe,
    pub instances_checked: u64,
    pub failures: Vec<Failure>,
    pub status: Status,
    /// Supplementary measurements; never affect `status`.
    pub findings: Value,
}

impl VerificationReport {
    fn new(claim: Claim, universe: Universe, instances: u64, failures: Vec<Failure>, findings: Value) -> Self {
        let status = if claim.report_only() {
            Status::ReportOnly
        } else if failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport { claim, universe, instances_checked: instances, failures, status, findings }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

fn y_string(y: &[u32]) -> String {
    Caterpillar::new(y.to_vec()).map(|c| c.to_string()).unwrap_or_default()
}

fn codes_string<'a>(codes: impl IntoIterator<Item = &'a CanonicalCode>) -> String {
    codes.into_iter().map(CanonicalCode::to_string).collect::<Vec<_>>().join(" ")
}

fn failure(ds: &DegreeSequence, witnesses: Vec<String>, expected: impl Into<String>, observed: impl Into<String>) -> Failure {
    Failure { degree_sequence: ds.clone(), witnesses, expected: expected.into(), observed: observed.into() }
}

/// Runs `check` on every sequence in parallel and keeps sweep order.
fn sweep<T: Send>(
    sequences: &[DegreeSequence],
    check: impl Fn(&DegreeSequence) -> Result<T> + Sync + Send,
) -> Result<Vec<T>> {
    sequences.par_iter().map(check).collect()
}

type CodedTrees = Vec<(CanonicalCode, Tree)>;

/// Every tree of every sequence, in parallel, as `(sequence, code, tree)` lists.
fn all_trees(
    sequences: &[DegreeSequence],
    budget: &EnumerationBudget,
) -> Result<Vec<(DegreeSequence, CodedTrees)>> {
    sweep(sequences, |ds| Ok((ds.clone(), enumerate_trees(ds, budget)?.coded().collect())))
}

pub fn verify_caterpillar_minimality(max_n: usize, budget: &EnumerationBudget) -> Result<VerificationReport> {
    let universe = Universe::orders(max_n);
    let sequences = universe.sequences();
    let results = sweep(&sequences, |ds| {
        let report = find_min_subtrees(ds, Method::Brute, budget)?;
        let bad: Vec<String> = report
            .optimizers
            .iter()
            .filter(|o| !o.tree().is_caterpillar())
            .map(|o| o.canonical_code.to_string())
            .collect();
        let failure = (!bad.is_empty()).then(|| {
            failure(ds, bad, "every minimizer is a caterpillar", format!("optimum {}", report.optimum))
        });
        Ok((failure, report.trees_examined, report.optimizers.len()))
    })?;
    let trees: u64 = results.iter().map(|r| r.1).sum();
    let tied = results.iter().filter(|r| r.2 > 1).count();
    let failures = results.into_iter().filter_map(|r| r.0).collect();
    Ok(VerificationReport::new(
        Claim::CaterpillarMinimality,
        universe,
        sequences.len() as u64,
        failures,
        json!({ "trees_examined": trees, "sequences_with_tied_minimizers": tied }),
    ))
}

pub fn verify_valley_shape(max_n: usize, max_k: usize, budget: &EnumerationBudget) -> Result<VerificationReport> {
    let universe = Universe::with_k(max_n, 3, max_k);
    let sequences = universe.sequences();
    let results = sweep(&sequences, |ds| {
        let report = find_min_subtrees(ds, Method::Caterpillar, budget)?;
        let k = ds.k();
        let floor = ds.d(k) - 2;
        let mut failures = Vec::new();
        for y in report.caterpillar_optimizers() {
            match oriented_valley(&y) {
                None => failures.push(failure(
                    ds,
                    vec![y_string(&y)],
                    format!("valley shape with minimum {floor}"),
                    "no valley position",
                )),
                Some((z, _)) if ds.d(2) > ds.d(k) && z[k - 1] <= floor => failures.push(failure(
                    ds,
                    vec![y_string(&z)],
                    format!("last pendant count above {floor} since d2 > dk"),
                    format!("last pendant count {}", z[k - 1]),
                )),
                Some(_) => {}
            }
        }
        Ok((failures, report.optimizers.len()))
    })?;
    let optimizers: usize = results.iter().map(|r| r.1).sum();
    let failures = results.into_iter().flat_map(|r| r.0).collect();
    Ok(VerificationReport::new(
        Claim::ValleyShape,
        universe,
        sequences.len() as u64,
        failures,
        json!({ "optimizers_checked": optimizers }),
    ))
}

pub fn verify_mountain_shape(max_n: usize, max_k: usize, budget: &EnumerationBudget) -> Result<VerificationReport> {
    let universe = Universe::with_k(max_n, 3, max_k);
    let sequences = universe.sequences();
    let results = sweep(&sequences, |ds| {
        let report = find_max_subtrees(ds, Method::Caterpillar, budget)?;
        let failures: Vec<Failure> = report
            .caterpillar_optimizers()
            .into_iter()
            .filter(|y| oriented_mountain(y).is_none())
            .map(|y| failure(ds, vec![y_string(&y)], "mountain shape", "no mountain position"))
            .collect();
        Ok((failures, report.optimizers.len()))
    })?;
    let optimizers: usize = results.iter().map(|r| r.1).sum();
    let failures = results.into_iter().flat_map(|r| r.0).collect();
    Ok(VerificationReport::new(
        Claim::MountainShape,
        universe,
        sequences.len() as u64,
        failures,
        json!({ "optimizers_checked": optimizers }),
    ))
}

pub fn verify_closed_forms(max_n: usize, budget: &EnumerationBudget) -> Result<VerificationReport> {
    let universe = Universe::with_k(max_n, 2, 4);
    let sequences = universe.sequences();
    #[derive(Default)]
    struct Alt {
        coincide: u64,
        also_minimal: u64,
        strictly_larger: u64,
    }
    let results = sweep(&sequences, |ds| {
        let (value, stated) = closed_form_phi(ds)?;
        let stated_code = canonical_form(&stated.build());
        let mut failures = Vec::new();
        let brute = find_min_subtrees(ds, Method::Brute, budget)?;
        let cats = find_min_subtrees(ds, Method::Caterpillar, budget)?;
        for search in [&brute, &cats] {
            if search.optimum != value {
                failures.push(failure(
                    ds,
                    vec![stated.to_string()],
                    format!("{} minimum {value}", search.method),
                    format!("{} minimum {}", search.method, search.optimum),
                ));
            }
            let codes = search.optimizer_codes();
            if codes.len() != 1 || !codes.contains(&stated_code) {
                failures.push(failure(
                    ds,
                    search.optimizers.iter().map(|o| o.canonical_code.to_string()).collect(),
                    format!("unique {} minimizer {stated}", search.method),
                    format!("{} minimizers: {}", codes.len(), codes_string(&codes)),
                ));
            }
        }
        // The other ordering C(d1-2, d2-2, d3-2) for three internal vertices.
        let mut alt = Alt::default();
        if ds.k() == 3 {
            let other = Caterpillar::new(vec![ds.d(1) - 2, ds.d(2) - 2, ds.d(3) - 2])?;
            let other_code = canonical_form(&other.build());
            if other_code == stated_code {
                alt.coincide += 1;
            } else if count_subtrees(&other.build()) == brute.optimum {
                alt.also_minimal += 1;
            } else {
                alt.strictly_larger += 1;
            }
        }
        Ok((failures, alt))
    })?;
    let mut alt = Alt::default();
    let mut failures = Vec::new();
    for (f, a) in results {
        failures.extend(f);
        alt.coincide += a.coincide;
        alt.also_minimal += a.also_minimal;
        alt.strictly_larger += a.strictly_larger;
    }
    Ok(VerificationReport::new(
        Claim::ClosedForms,
        universe,
        sequences.len() as u64,
        failures,
        json!({
            "k3_other_ordering": {
                "same_tree": alt.coincide,
                "also_minimal": alt.also_minimal,
                "strictly_larger": alt.strictly_larger,
            }
        }),
    ))
}

pub fn verify_trichotomy(max_n: usize, budget: &EnumerationBudget) -> Result<VerificationReport> {
    let universe = Universe::with_k(max_n, 5, 5);
    let sequences = universe.sequences();
    let results = sweep(&sequences, |ds| {
        let (case, predicted) = predict_min_k5(ds)?;
        let observed = find_min_subtrees(ds, Method::Caterpillar, budget)?;
        let predicted_y: Vec<Vec<u32>> = predicted.iter().map(|c| c.pendants().to_vec()).collect();
        let mut observed_y = observed.caterpillar_optimizers();
        observed_y.sort();
        let mut failures = Vec::new();
        if predicted_y != observed_y {
            failures.push(failure(
                ds,
                observed_y.iter().map(|y| y_string(y)).collect(),
                format!("case {}: {}", case.case, predicted_y.iter().map(|y| y_string(y)).collect::<Vec<_>>().join(" ")),
                observed_y.iter().map(|y| y_string(y)).collect::<Vec<_>>().join(" "),
            ));
        }
        let phi = |y: Vec<u32>| -> Result<BigInt> {
            Ok(BigInt::from(count_subtrees(&Caterpillar::new(y)?.build()).0))
        };
        let actual_diff = phi(k5_first_form(ds))? - phi(k5_second_form(ds))?;
        let identity_holds = actual_diff == k5_difference(ds)?;
        let balanced_distinct = case.balanced() && !case.d4_equals_d5;
        Ok((failures, case.case, observed_y.len(), identity_holds, balanced_distinct.then(|| ds.to_string())))
    })?;
    let mut failures = Vec::new();
    let mut cardinality: BTreeMap<String, BTreeMap<usize, u64>> = BTreeMap::new();
    let mut identity_mismatches = 0u64;
    let mut balanced = Vec::new();
    for (f, case, size, identity, bal) in results {
        failures.extend(f);
        *cardinality.entry(case.to_string()).or_default().entry(size).or_default() += 1;
        identity_mismatches += u64::from(!identity);
        balanced.extend(bal);
    }
    for case in [Case::I, Case::II, Case::III] {
        cardinality.entry(case.to_string()).or_default();
    }
    Ok(VerificationReport::new(
        Claim::Trichotomy,
        universe,
        sequences.len() as u64,
        failures,
        json!({
            "minimizer_set_sizes_by_case": cardinality,
            "difference_identity_mismatches": identity_mismatches,
            "balanced_with_distinct_d4_d5": { "count": balanced.len(), "instances": balanced },
        }),
    ))
}

pub fn verify_transformation_monotonicity(max_n: usize, budget: &EnumerationBudget) -> Result<VerificationReport> {
    let universe = Universe::orders(max_n);
    let sequences = universe.sequences();
    #[derive(Default)]
    struct Tally {
        failures: Vec<Failure>,
        non_caterpillars: u64,
        sites: u64,
        applicable: u64,
        trees_without_applicable_site: u64,
    }
    let tallies = sweep(&sequences, |ds| {
        let mut tally = Tally::default();
        for (code, tree) in enumerate_trees(ds, budget)?.coded() {
            if tree.is_caterpillar() {
                continue;
            }
            tally.non_caterpillars += 1;
            let phi = BigInt::from(count_subtrees(&tree).0);
            let mut any = false;
            for site in shift_sites(&tree) {
                tally.sites += 1;
                let analysis = analyze_shift(&tree, &site)?;
                if !analysis.precondition_holds() || analysis.a <= 1u32.into() {
                    continue;
                }
                any = true;
                tally.applicable += 1;
                let shifted = shift_branch_to_end(&tree, &site)?;
                let change = BigInt::from(count_subtrees(&shifted).0) - &phi;
                let witnesses = vec![code.to_string(), canonical_form(&shifted).to_string()];
                if change >= BigInt::ZERO {
                    tally.failures.push(failure(
                        ds,
                        witnesses.clone(),
                        "strict decrease",
                        format!("change {change} at path {:?}, branch {}", site.path, site.branch),
                    ));
                }
                let predicted = analysis.predicted_change();
                if predicted != change {
                    tally.failures.push(failure(
                        ds,
                        witnesses,
                        format!("change {predicted} from component counts"),
                        format!("change {change}"),
                    ));
                }
            }
            tally.trees_without_applicable_site += u64::from(!any);
        }
        Ok(tally)
    })?;
    let mut total = Tally::default();
    for t in tallies {
        total.failures.extend(t.failures);
        total.non_caterpillars += t.non_caterpillars;
        total.sites += t.sites;
        total.applicable += t.applicable;
        total.trees_without_applicable_site += t.trees_without_applicable_site;
    }
    Ok(VerificationReport::new(
        Claim::ShiftMonotonicity,
        universe,
        total.applicable,
        total.failures,
        json!({
            "non_caterpillar_trees": total.non_caterpillars,
            "sites_examined": total.sites,
            "non_caterpillars_without_applicable_site": total.trees_without_applicable_site,
        }),
    ))
}

/// Compares subtree extremes with Wiener extremes. Never fails.
pub fn explore_wiener_correspondence(max_n: usize, budget: &EnumerationBudget) -> Result<VerificationReport> {
    let universe = Universe::orders(max_n);
    let sequences = universe.sequences();
    let per_ds = sweep(&sequences, |ds| {
        let scored: Vec<(CanonicalCode, BigCount, BigCount)> = enumerate_trees(ds, budget)?
            .coded()
            .map(|(code, tree)| (code, count_subtrees(&tree), wiener_index(&tree)))
            .collect();
        let pick = |key: fn(&(CanonicalCode, BigCount, BigCount)) -> &BigCount, max: bool| {
            let best = if max { scored.iter().map(key).max() } else { scored.iter().map(key).min() }
                .expect("nonempty")
                .clone();
            scored.iter().filter(|s| *key(s) == best).map(|s| s.0.clone()).collect::<Vec<_>>()
        };
        let phi_max = pick(|s| &s.1, true);
        let phi_min = pick(|s| &s.1, false);
        let wiener_min = pick(|s| &s.2, false);
        let wiener_max = pick(|s| &s.2, true);
        Ok((ds.clone(), scored.len(), phi_max, wiener_min, phi_min, wiener_max))
    })?;
    let mut table: BTreeMap<usize, (u64, u64, u64)> = BTreeMap::new();
    let mut disagreements = Vec::new();
    for (ds, trees, phi_max, wiener_min, phi_min, wiener_max) in per_ds {
        let row = table.entry(ds.n()).or_default();
        row.0 += 1;
        let max_agree = phi_max == wiener_min;
        let min_agree = phi_min == wiener_max;
        row.1 += u64::from(max_agree);
        row.2 += u64::from(min_agree);
        if !(max_agree && min_agree) {
            disagreements.push(json!({
                "degree_sequence": ds,
                "trees": trees,
                "subtree_max": codes_string(&phi_max),
                "wiener_min": codes_string(&wiener_min),
                "subtree_min": codes_string(&phi_min),
                "wiener_max": codes_string(&wiener_max),
            }));
        }
    }
    let rows: Vec<Value> = table
        .into_iter()
        .map(|(n, (seqs, max_agree, min_agree))| {
            json!({
                "n": n,
                "sequences": seqs,
                "max_subtrees_eq_min_wiener": max_agree,
                "min_subtrees_eq_max_wiener": min_agree,
            })
        })
        .collect();
    let agree = rows.iter().all(|r| {
        r["sequences"] == r["max_subtrees_eq_min_wiener"] && r["sequences"] == r["min_subtrees_eq_max_wiener"]
    });
    Ok(VerificationReport::new(
        Claim::WienerCorrespondence,
        universe,
        sequences.len() as u64,
        Vec::new(),
        json!({ "full_agreement": agree, "table": rows, "disagreements": disagreements }),
    ))
}

pub fn verify_path_star_extremes(max_n: usize, budget: &EnumerationBudget) -> Result<VerificationReport> {
    let universe = Universe::orders(max_n);
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=max_n {
        let sequences = enumerate_degree_sequences(n);
        let scored: Vec<(DegreeSequence, CanonicalCode, BigCount)> = all_trees(&sequences, budget)?
            .into_iter()
            .flat_map(|(ds, trees)| {
                trees.into_iter().map(move |(code, t)| (ds.clone(), code, count_subtrees(&t)))
            })
            .collect();
        counts.push(scored.len());
        let min = scored.iter().map(|s| &s.2).min().unwrap();
        let max = scored.iter().map(|s| &s.2).max().unwrap();
        for (which, best, target) in [("minimum", min, Tree::path(n)), ("maximum", max, Tree::star(n))] {
            let target_code = canonical_form(&target);
            let winners: Vec<&(DegreeSequence, CanonicalCode, BigCount)> =
                scored.iter().filter(|s| &s.2 == best).collect();
            if winners.len() != 1 || winners[0].1 != target_code {
                let ds = winners[0].0.clone();
                failures.push(failure(
                    &ds,
                    winners.iter().map(|w| w.1.to_string()).collect(),
                    format!("unique {which} {target_code}"),
                    format!("{} trees attain {best}", winners.len()),
                ));
            }
        }
    }
    Ok(VerificationReport::new(
        Claim::PathStarExtremes,
        universe,
        max_n as u64,
        failures,
        json!({ "trees_per_order": counts }),
    ))
}

/// Dispatches on the claim. `max_k` only affects the shape claims.
pub fn run_claim(claim: Claim, max_n: usize, max_k: usize, budget: &EnumerationBudget) -> Result<VerificationReport> {
    match claim {
        Claim::CaterpillarMinimality => verify_caterpillar_minimality(max_n, budget),
        Claim::ValleyShape => verify_valley_shape(max_n, max_k, budget),
        Claim::MountainShape => verify_mountain_shape(max_n, max_k, budget),
        Claim::ClosedForms => verify_closed_forms(max_n, budget),
        Claim::Trichotomy => verify_trichotomy(max_n, budget),
        Claim::ShiftMonotonicity => verify_transformation_monotonicity(max_n, budget),
        Claim::WienerCorrespondence => explore_wiener_correspondence(max_n, budget),
        Claim::PathStarExtremes => verify_path_star_extremes(max_n, budget),
    }
}

/// Default sweep limits: full-tree sweeps stop at 9 vertices, caterpillar
/// sweeps at 13 (12 for the closed forms, which also run full-tree searches).
pub fn default_max_n(claim: Claim) -> usize {
    match claim {
        Claim::ValleyShape | Claim::MountainShape | Claim::Trichotomy => 13,
        Claim::ClosedForms => 12,
        _ => 9,
    }
}

pub const DEFAULT_MAX_K: usize = 6;
