//! The theorem harness: run every structure checker over every connected
//! interval graph up to a given order and tally the outcomes.
//!
//! Each row is one claim. A row passes on a graph when the claim holds,
//! fails with a counterexample when it does not, and is vacuous when the
//! claim's hypothesis is not met there. A healthy run has zero failures;
//! vacuous counts are expected and reported so a run that never met a
//! hypothesis is visible as such.

use rayon::prelude::*;
use serde::Serialize;

use crate::bal::check_form_reverse;
use crate::balance::{
    check_exterior_pair, check_positive_weight_paths, check_side_cliques,
    check_unique_basepoint, check_weight_lower_bound, Check, Counterexample,
};
use crate::enumeration::{
    connected_interval_graphs_upto, connected_interval_graphs_upto_guarded, EnumError,
};
use crate::graph::Graph;

/// Counterexamples kept per row; failures beyond this are counted only.
const KEPT_FAILURES: usize = 16;

/// One sweep row: the claim's name and its checker.
type Row = (&'static str, fn(&Graph) -> Check);

/// The claims the harness sweeps, in report order.
const ROWS: [Row; 6] = [
    ("weight-lower-bound", |g| run(check_weight_lower_bound, g)),
    ("positive-weight-paths", |g| {
        run(check_positive_weight_paths, g)
    }),
    ("exterior-pair", |g| run(check_exterior_pair, g)),
    ("unique-basepoint", |g| run(check_unique_basepoint, g)),
    ("side-cliques", |g| run(check_side_cliques, g)),
    ("bal-form", |g| run(check_form_reverse, g)),
];

fn run<E: std::fmt::Debug>(checker: fn(&Graph) -> Result<Check, E>, g: &Graph) -> Check {
    checker(g).expect("enumerated graphs are connected interval")
}

/// Tally of one claim over the sweep.
#[derive(Debug, Clone, Serialize)]
pub struct HarnessRow {
    /// The claim's name.
    pub name: &'static str,
    /// Graphs where the claim held.
    pub pass: usize,
    /// Graphs where the claim failed.
    pub fail: usize,
    /// Graphs where the hypothesis was not met.
    pub vacuous: usize,
    /// Up to the first few failing instances.
    pub failures: Vec<Counterexample>,
}

/// Outcome of a full sweep.
#[derive(Debug, Clone, Serialize)]
pub struct HarnessReport {
    /// Largest order swept.
    pub max_n: usize,
    /// Number of graphs inspected.
    pub graphs: usize,
    /// One tally per claim.
    pub rows: Vec<HarnessRow>,
}

impl HarnessReport {
    /// True when no claim failed anywhere.
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|row| row.fail == 0)
    }
}

/// Check every claim on every connected interval graph of order at most
/// `max_n`. Graphs are checked in parallel; the tally is deterministic.
pub fn verify_theorems(max_n: usize) -> Result<HarnessReport, EnumError> {
    let levels = connected_interval_graphs_upto(max_n)?;
    Ok(tally(max_n, &levels))
}

/// Like [`verify_theorems`] with an explicit enumeration budget.
pub fn verify_theorems_guarded(max_n: usize, guard: usize) -> Result<HarnessReport, EnumError> {
    let levels = connected_interval_graphs_upto_guarded(max_n, guard)?;
    Ok(tally(max_n, &levels))
}

fn tally(max_n: usize, levels: &[Vec<Graph>]) -> HarnessReport {
    let mut rows: Vec<HarnessRow> = ROWS
        .iter()
        .map(|&(name, _)| HarnessRow {
            name,
            pass: 0,
            fail: 0,
            vacuous: 0,
            failures: Vec::new(),
        })
        .collect();
    let mut graphs = 0;
    for level in levels {
        graphs += level.len();
        let outcomes: Vec<[Check; ROWS.len()]> = level
            .par_iter()
            .map(|g| ROWS.map(|(_, checker)| checker(g)))
            .collect();
        for per_graph in outcomes {
            for (row, check) in rows.iter_mut().zip(per_graph) {
                match check {
                    Check::Pass { .. } => row.pass += 1,
                    Check::Vacuous { .. } => row.vacuous += 1,
                    Check::Fail { counterexample } => {
                        row.fail += 1;
                        if row.failures.len() < KEPT_FAILURES {
                            row.failures.push(counterexample);
                        }
                    }
                }
            }
        }
    }
    HarnessReport {
        max_n,
        graphs,
        rows,
    }
}
