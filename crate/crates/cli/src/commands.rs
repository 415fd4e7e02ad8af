use serde::Serialize;
use serde_json::{json, Value};
use treextremal::enumerate::{count_labeled_trees, enumerate_caterpillars_within, enumerate_trees, EnumerationBudget};
use treextremal::extremal::{closed_form_phi, find_extremal, predict_min_k5, Method, Objective};
use treextremal::verify::run_claim;
use treextremal::{
    canonical_form, count_all_containing, count_subtrees, wiener_index, Caterpillar, CanonicalCode, Error, Result,
    Tree,
};

use crate::output::{OutputDocument, Table};
use crate::{ClosedFormArgs, CountArgs, EnumerateArgs, ExtremalArgs, MethodArg, ObjectiveArg, VerifyArgs};

const TREE_HEADER: [&str; 4] = ["canonical_code", "y_vector_or_blank", "phi", "wiener"];

fn inputs(args: &impl Serialize) -> Value {
    serde_json::to_value(args).expect("arguments serialize")
}

fn y_list(y: &[u32]) -> String {
    y.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn parse_y(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad pendant count {t:?}"))))
        .collect()
}

/// One tree as a JSON object and a CSV row.
fn tree_entry(code: &CanonicalCode, tree: &Tree) -> (Value, Vec<String>) {
    let y = Caterpillar::recognize(tree).map(|c| c.pendants().to_vec());
    let phi = count_subtrees(tree).to_string();
    let wiener = wiener_index(tree).to_string();
    let row = vec![code.to_string(), y.as_deref().map(y_list).unwrap_or_default(), phi.clone(), wiener.clone()];
    let value = json!({
        "canonical_code": code,
        "caterpillar": y,
        "phi": phi,
        "wiener": wiener,
        "edges": tree.edges(),
    });
    (value, row)
}

pub fn count(args: &CountArgs, text: Option<&str>) -> Result<OutputDocument> {
    let tree = match (&args.caterpillar, text) {
        (Some(y), _) => Caterpillar::new(parse_y(y)?)?.build(),
        (None, Some(text)) => text.parse::<Tree>()?,
        (None, None) => return Err(Error::Parse("no tree given".into())),
    };
    let per_vertex: Vec<String> = count_all_containing(&tree).iter().map(ToString::to_string).collect();
    let table = Table {
        header: vec!["vertex", "subtrees_containing"],
        rows: per_vertex.iter().enumerate().map(|(v, c)| vec![v.to_string(), c.clone()]).collect(),
    };
    let results = json!({
        "n": tree.order(),
        "phi": count_subtrees(&tree).to_string(),
        "per_vertex": per_vertex,
        "diameter": tree.diameter(),
        "is_caterpillar": tree.is_caterpillar(),
        "caterpillar": Caterpillar::recognize(&tree).map(|c| c.canonical().pendants().to_vec()),
        "wiener": wiener_index(&tree).to_string(),
        "canonical_code": canonical_form(&tree),
    });
    Ok(OutputDocument::new("count", inputs(args), results, table))
}

pub fn extremal(args: &ExtremalArgs, budget: &EnumerationBudget) -> Result<OutputDocument> {
    let objective = match args.objective {
        ObjectiveArg::Min => Objective::Min,
        ObjectiveArg::Max => Objective::Max,
    };
    let method = match args.method {
        MethodArg::Auto => Method::Auto,
        MethodArg::Brute => Method::Brute,
        MethodArg::Caterpillar => Method::Caterpillar,
        MethodArg::ClosedForm => Method::ClosedForm,
    };
    let report = find_extremal(&args.degseq, objective, method, budget)?;
    let rows = report
        .optimizers
        .iter()
        .map(|o| tree_entry(&o.canonical_code, &o.tree()).1)
        .collect();
    let results = serde_json::to_value(&report).expect("report serializes");
    Ok(OutputDocument::new("extremal", inputs(args), results, Table { header: TREE_HEADER.to_vec(), rows }))
}

pub fn enumerate(args: &EnumerateArgs, budget: &EnumerationBudget) -> Result<OutputDocument> {
    let ds = &args.degseq;
    let coded: Vec<(CanonicalCode, Tree)> = if args.caterpillars_only && ds.k() > 0 {
        enumerate_caterpillars_within(ds, budget)?
            .map(|c| {
                let tree = c.build();
                (canonical_form(&tree), tree)
            })
            .collect()
    } else {
        enumerate_trees(ds, budget)?.coded().collect()
    };
    let (trees, rows): (Vec<Value>, Vec<Vec<String>>) = coded.iter().map(|(code, t)| tree_entry(code, t)).unzip();
    let results = json!({
        "degree_sequence": ds,
        "labeled_trees": count_labeled_trees(ds).to_string(),
        "count": trees.len(),
        "trees": trees,
    });
    Ok(OutputDocument::new("enumerate", inputs(args), results, Table { header: TREE_HEADER.to_vec(), rows }))
}

pub fn closed_form(args: &ClosedFormArgs) -> Result<OutputDocument> {
    let ds = &args.degseq;
    let header = vec!["degree_sequence", "phi", "caterpillar"];
    let (results, rows) = if ds.k() == 5 {
        let (case, cats) = predict_min_k5(ds)?;
        let minimizers: Vec<(String, Vec<u32>)> = cats
            .iter()
            .map(|c| (count_subtrees(&c.build()).to_string(), c.pendants().to_vec()))
            .collect();
        let rows = minimizers.iter().map(|(phi, y)| vec![ds.to_string(), phi.clone(), y_list(y)]).collect();
        let list: Vec<Value> = minimizers.iter().map(|(phi, y)| json!({ "phi": phi, "caterpillar": y })).collect();
        (json!({ "degree_sequence": ds, "case": case, "minimizers": list }), rows)
    } else {
        let (phi, c) = closed_form_phi(ds)?;
        let rows = vec![vec![ds.to_string(), phi.to_string(), y_list(c.pendants())]];
        let list = vec![json!({ "phi": phi, "caterpillar": c.pendants() })];
        (json!({ "degree_sequence": ds, "minimizers": list }), rows)
    };
    Ok(OutputDocument::new("closed-form", inputs(args), results, Table { header, rows }))
}

/// Returns the document and whether the claim passed.
pub fn verify(args: &VerifyArgs, max_n: usize, budget: &EnumerationBudget) -> Result<(OutputDocument, bool)> {
    let report = run_claim(args.claim, max_n, args.max_k, budget)?;
    let rows = report
        .failures
        .iter()
        .map(|f| vec![f.degree_sequence.to_string(), f.witnesses.join(" "), f.expected.clone(), f.observed.clone()])
        .collect();
    let table = Table { header: vec!["degree_sequence", "witnesses", "expected", "observed"], rows };
    let mut echo = inputs(args);
    echo["max_n"] = json!(max_n);
    let results = serde_json::to_value(&report).expect("report serializes");
    Ok((OutputDocument::new("verify", echo, results, table), report.passed()))
}
