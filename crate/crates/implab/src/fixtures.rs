//! Bundled reference graphs with stable names.
//!
//! A fixture file holds one graph per line: a graph6 string, a space,
//! and a name. Blank lines and lines starting with `#` are skipped.
//! Graphs are stored in canonical form so set comparison is string
//! equality.
//!
//! Two sets cover the minimal forbidden induced subgraphs for the
//! 1-improper interval graphs. `fig1` is a faithful transcription of a
//! hand-drawn reference list; its Connected-Two member is not minimal
//! (it contains Skew-Four as an induced subgraph). `fig1-corrected` is
//! the machine-verified catalog: the nine sound drawn graphs plus
//! Skew-Five and a different Connected-Two, complete for order up to 8.

use thiserror::Error;

use crate::codec::{decode_graph6, ParseError};
use crate::graph::Graph;

/// The as-drawn reference list for impropriety 1, one member non-minimal.
pub const FIG1: &str = include_str!("../fixtures/fig1.g6");

/// The verified minimal forbidden graphs for impropriety 1, order up to 8.
pub const FIG1_CORRECTED: &str = include_str!("../fixtures/fig1-corrected.g6");

/// A named reference graph.
#[derive(Debug, Clone)]
pub struct Fixture {
    /// Stable name used in reports.
    pub name: String,
    /// The graph, in whatever labeling the file stores.
    pub graph: Graph,
}

/// Rejections when reading a fixture file.
#[derive(Debug, Error)]
pub enum FixtureError {
    /// A line is not `<graph6> <name>`.
    #[error("fixture line {line}: expected a graph6 string, a space, and a name")]
    MalformedLine {
        /// 1-based line number.
        line: usize,
    },
    /// The graph6 field does not decode.
    #[error("fixture line {line}: {source}")]
    BadGraph {
        /// 1-based line number.
        line: usize,
        /// The decoder's rejection.
        source: ParseError,
    },
}

/// Parse a fixture file.
pub fn parse_fixtures(text: &str) -> Result<Vec<Fixture>, FixtureError> {
    let mut fixtures = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (code, name) = trimmed
            .split_once(' ')
            .ok_or(FixtureError::MalformedLine { line })?;
        let name = name.trim();
        if name.is_empty() {
            return Err(FixtureError::MalformedLine { line });
        }
        let graph = decode_graph6(code).map_err(|source| FixtureError::BadGraph { line, source })?;
        fixtures.push(Fixture {
            name: name.to_string(),
            graph,
        });
    }
    Ok(fixtures)
}

/// The as-drawn impropriety-1 reference list, in file order.
pub fn fig1() -> Vec<Fixture> {
    parse_fixtures(FIG1).expect("the bundled fixture file parses")
}

/// The verified impropriety-1 catalog, in file order.
pub fn fig1_corrected() -> Vec<Fixture> {
    parse_fixtures(FIG1_CORRECTED).expect("the bundled fixture file parses")
}

/// Look up a bundled fixture set by its public name.
pub fn bundled_set(name: &str) -> Option<Vec<Fixture>> {
    match name {
        "fig1" => Some(fig1()),
        "fig1-corrected" => Some(fig1_corrected()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn drawn_set_parses_to_ten_named_graphs() {
        let fixtures = fig1();
        assert_eq!(fixtures.len(), 10);
        assert_eq!(fixtures[0].name, "4-Star");
        assert_eq!(fixtures[0].graph.order(), 5);
        assert!(fixtures.iter().all(|f| f.graph.order() <= 7));
    }

    #[test]
    fn corrected_set_parses_to_eleven_named_graphs() {
        let fixtures = fig1_corrected();
        assert_eq!(fixtures.len(), 11);
        assert!(fixtures.iter().any(|f| f.name == "Skew-Five"));
        assert!(fixtures.iter().all(|f| f.graph.order() <= 7));
    }

    #[test]
    fn bundled_lookup_knows_both_sets_and_rejects_others() {
        assert_eq!(bundled_set("fig1").map(|f| f.len()), Some(10));
        assert_eq!(bundled_set("fig1-corrected").map(|f| f.len()), Some(11));
        assert!(bundled_set("fig2").is_none());
    }

    #[test]
    fn parser_rejects_malformed_lines() {
        assert!(matches!(
            parse_fixtures("D?{"),
            Err(FixtureError::MalformedLine { line: 1 })
        ));
        assert!(matches!(
            parse_fixtures("# fine\n\nD?{   "),
            Err(FixtureError::MalformedLine { line: 3 })
        ));
        assert!(matches!(
            parse_fixtures("@@@ bad-code"),
            Err(FixtureError::BadGraph { line: 1, .. })
        ));
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "# heading\n\nD?{ star\n# tail\n";
        let fixtures = parse_fixtures(text).unwrap();
        assert_eq!(fixtures.len(), 1);
        assert_eq!(fixtures[0].name, "star");
    }
}
