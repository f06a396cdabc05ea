//! Invariant suites with machine-readable reports.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use tabcrystal_core::binfty::{binfty_lower, binfty_raise, binfty_weight, bfs_binfty, is_large, pad, MarginallyLarge};
use tabcrystal_core::cliff::{cliff_step, cliff_to_tableau, cliff_weight, tableau_to_cliff, validate_cliff};
use tabcrystal_core::tableau::{apply_plain, bfs_highest_weight};
use tabcrystal_core::{Direction, Family, Tableau, TypeSpec, Weight};

use crate::document::{Document, Element};
use crate::{apply_word, parse_word, CliError};

const LARGE_PAIRS: &str = include_str!("../data/large_pairs.json");
const TOP_B3: &str = include_str!("../data/binfty_top_b3.json");
const TOP_G2: &str = include_str!("../data/binfty_top_g2.json");
const MAX_REPORTED: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Figures,
    Inverse,
    Counts,
    CliffMorphism,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Figures => "figures",
            Suite::Inverse => "inverse",
            Suite::Counts => "counts",
            Suite::CliffMorphism => "cliff-morphism",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub family: String,
    pub rank: usize,
    pub depth: usize,
    pub passed: bool,
    pub checks: usize,
    pub failures: usize,
    pub messages: Vec<String>,
}

impl Report {
    fn new(suite: Suite, spec: &TypeSpec, depth: usize) -> Report {
        Report {
            suite,
            family: spec.family().tag().to_string(),
            rank: spec.n(),
            depth,
            passed: true,
            checks: 0,
            failures: 0,
            messages: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, message: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.passed = false;
            self.failures += 1;
            if self.messages.len() < MAX_REPORTED {
                self.messages.push(message());
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

pub fn run_suite(suite: Suite, spec: &TypeSpec, depth: usize) -> Result<Report, CliError> {
    let mut report = Report::new(suite, spec, depth);
    match suite {
        Suite::Figures => figures(spec, depth, &mut report)?,
        Suite::Inverse => inverse(spec, depth, &mut report)?,
        Suite::Counts => counts(spec, depth, &mut report)?,
        Suite::CliffMorphism => cliff_morphism(spec, depth, &mut report)?,
    }
    Ok(report)
}

#[derive(Deserialize)]
struct GoldenEntry {
    word: String,
    document: serde_json::Value,
}

#[derive(Deserialize)]
struct Golden {
    family: String,
    rank: usize,
    layer_sizes: Vec<usize>,
    entries: Vec<GoldenEntry>,
}

#[derive(Deserialize)]
struct LargePair {
    family: String,
    rank: usize,
    large: Vec<Vec<String>>,
    not_large: Vec<Vec<String>>,
}

/// Layer sizes and `(word, expected node)` pairs for the top of `B(∞)`.
pub type GoldenTop = (Vec<usize>, Vec<(String, Document)>);

/// Bundled golden data for `spec`: a large / non-large pair, and the top of
/// `B(∞)`.
pub fn golden_figures(spec: &TypeSpec) -> (Option<(Tableau, Tableau)>, Option<GoldenTop>) {
    let tag = spec.family().tag();
    let pairs: Vec<LargePair> = serde_json::from_str(LARGE_PAIRS).expect("bundled figure data");
    let pair = pairs.into_iter().find(|p| p.family == tag && p.rank == spec.n()).map(|p| {
        let parse = |rows: &[Vec<String>]| {
            let codes: Vec<Vec<i32>> = rows.iter().map(|r| r.iter().map(|s| s.parse().unwrap()).collect()).collect();
            Tableau::from_codes(spec, &codes).expect("bundled figure tableau")
        };
        (parse(&p.large), parse(&p.not_large))
    });
    let golden = [TOP_B3, TOP_G2]
        .into_iter()
        .map(|text| serde_json::from_str::<Golden>(text).expect("bundled figure data"))
        .find(|g| g.family == tag && g.rank == spec.n())
        .map(|g| {
            let entries = g
                .entries
                .into_iter()
                .map(|e| (e.word, Document::from_json(&e.document.to_string()).expect("bundled figure document")))
                .collect();
            (g.layer_sizes, entries)
        });
    (pair, golden)
}

fn figures(spec: &TypeSpec, depth: usize, report: &mut Report) -> Result<(), CliError> {
    let (pair, golden) = golden_figures(spec);
    if pair.is_none() && golden.is_none() {
        return Err(CliError::Input(format!("no figure data for {}{}", spec.family(), spec.n())));
    }
    if let Some((large, not_large)) = pair {
        report.check(is_large(spec, &large), || format!("expected large:\n{large}"));
        report.check(!is_large(spec, &not_large), || format!("expected not large:\n{not_large}"));
    }
    let Some((sizes, entries)) = golden else { return Ok(()) };
    let graph = bfs_binfty(spec, depth)?;
    for (d, &size) in sizes.iter().enumerate().take(depth + 1) {
        let found = graph.layer(d).count();
        report.check(found == size, || format!("{size} nodes expected at depth {d}, found {found}"));
    }
    let start = Document::binfty(spec, tabcrystal_core::binfty::t_infinity(spec));
    for (word, expected) in entries {
        let steps = parse_word(&word)?;
        if steps.len() > depth {
            continue;
        }
        let got = apply_word(&start, &steps)?;
        report.check(got.as_ref() == Some(&expected), || {
            format!("{word}: expected {}, found {}", expected.to_json(), got.map_or("none".into(), |d| d.to_json()))
        });
        if let Element::Binfty(t) = &expected.element {
            report.check(graph.index_of(t).is_some(), || format!("{word}: node missing from the graph"));
        }
    }
    // edges out of the top are labelled 1..=rank
    let top_labels: Vec<usize> = graph.edges.iter().filter(|e| e.source == 0).map(|e| e.label).collect();
    if depth > 0 {
        report.check(top_labels == (1..=spec.rank()).collect::<Vec<_>>(), || format!("top edge labels {top_labels:?}"));
    }
    Ok(())
}

fn inverse(spec: &TypeSpec, depth: usize, report: &mut Report) -> Result<(), CliError> {
    let graph = bfs_binfty(spec, depth)?;
    for node in &graph.nodes {
        let t = &node.element;
        let doc = Document::binfty(spec, t.clone());
        report.check(Document::from_json(&doc.to_json()).ok().as_ref() == Some(&doc), || {
            format!("roundtrip failed for {}", doc.to_json())
        });
        for i in spec.indices() {
            let down = binfty_lower(spec, i, t)?;
            report.check(binfty_raise(spec, i, &down)?.as_ref() == Some(t), || format!("e{i} f{i} != id on\n{t}"));
            if let Some(up) = binfty_raise(spec, i, t)? {
                report.check(&binfty_lower(spec, i, &up)? == t, || format!("f{i} e{i} != id on\n{t}"));
            }
            report.check(binfty_weight(spec, &down) == &node.weight - spec.simple_root(i), || {
                format!("f{i} did not lower the weight by a simple root on\n{t}")
            });
        }
    }
    Ok(())
}

/// `λ` with every coordinate at least `max(5, depth + 1)`, raised to an even
/// last coordinate in family B.
pub fn large_lambda(spec: &TypeSpec, depth: usize) -> Weight {
    let c = 5.max(depth as i64 + 1);
    let mut coords = vec![c; spec.rank()];
    if spec.family() == Family::B {
        let last = coords.last_mut().expect("rank >= 1");
        *last += *last % 2;
    }
    Weight::new(coords)
}

fn counts(spec: &TypeSpec, depth: usize, report: &mut Report) -> Result<(), CliError> {
    let lambda = large_lambda(spec, depth);
    let binfty = bfs_binfty(spec, depth)?;
    let hw = bfs_highest_weight(spec, &lambda, Some(depth))?;
    let hw_mult = hw.weight_multiplicities();
    let inf_mult = binfty.weight_multiplicities();
    for (xi, &count) in &inf_mult {
        let shifted = &lambda + xi;
        let m = hw_mult.get(&shifted).copied().unwrap_or(0);
        report.check(m == count, || format!("weight {xi}: {count} in B(inf), {m} in B({lambda})"));
    }
    report.check(hw.node_count() == binfty.node_count(), || {
        format!("{} nodes in B(inf), {} in B({lambda}) to depth {depth}", binfty.node_count(), hw.node_count())
    });
    projection(spec, &lambda, &binfty.nodes.iter().map(|n| n.element.clone()).collect::<Vec<_>>(), report)
}

/// `f̃_i ∘ pad = pad ∘ f̃_i` on every given representative.
pub fn projection(spec: &TypeSpec, lambda: &Weight, nodes: &[MarginallyLarge], report: &mut Report) -> Result<(), CliError> {
    for t in nodes {
        let padded = pad(spec, t, lambda)?;
        for i in spec.indices() {
            let left = apply_plain(spec, i, &padded, Direction::Lower)?;
            let right = pad(spec, &binfty_lower(spec, i, t)?, lambda)?;
            report.check(left.as_ref() == Some(&right), || format!("f{i} does not commute with pad on\n{t}"));
        }
    }
    Ok(())
}

fn cliff_morphism(spec: &TypeSpec, depth: usize, report: &mut Report) -> Result<(), CliError> {
    tabcrystal_core::cliff::cliff_zero(spec)?;
    let graph = bfs_binfty(spec, depth)?;
    let mut images = BTreeMap::new();
    for node in &graph.nodes {
        let t = &node.element;
        let c = tableau_to_cliff(spec, t)?;
        report.check(validate_cliff(spec, &c), || format!("image {c} violates the chains"));
        report.check(&cliff_to_tableau(spec, &c)? == t, || format!("roundtrip failed on\n{t}"));
        report.check(cliff_weight(spec, &c)? == node.weight, || format!("weight mismatch on {c}"));
        for i in spec.indices() {
            let down = cliff_step(spec, i, &c, Direction::Lower)?;
            let expected = tableau_to_cliff(spec, &binfty_lower(spec, i, t)?)?;
            report.check(down.as_ref() == Some(&expected), || format!("f{i} does not commute on {c}"));
            let up = cliff_step(spec, i, &c, Direction::Raise)?;
            let expected = binfty_raise(spec, i, t)?.map(|u| tableau_to_cliff(spec, &u)).transpose()?;
            report.check(up == expected, || format!("e{i} does not commute on {c}"));
        }
        images.insert(c, ());
    }
    report.check(images.len() == graph.node_count(), || String::from("tableau_to_cliff is not injective"));
    Ok(())
}
