//! Command-line surface for the interval graph toolkit: classify single
//! graphs, enumerate minimal forbidden subgraphs, build and verify the
//! balanced critical normal forms, and sweep the structure theorems.
//!
//! Exit codes are a stable contract: 0 for success, 1 when a verified
//! property fails or a fixture comparison mismatches, 2 for usage and
//! parse errors.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use implab::bal::{is_bal_form, verify_construction_guarded, BalSpec, VERIFY_BOUND};
use implab::balance::Check;
use implab::canon::canonical_form;
use implab::classify::{classify, Classification};
use implab::codec::{self, encode_graph6};
use implab::enumeration::{mfisg_guarded, MfisgRecord, ENUMERATION_GUARD};
use implab::fixtures::{bundled_set, parse_fixtures, Fixture};
use implab::graph::{Graph, VertexSet};
use implab::harness::verify_theorems_guarded;
use implab::recognition::NonIntervalWitness;

/// Exact analysis of p-improper interval graphs.
#[derive(Parser)]
#[command(name = "implab", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; svg renders the witness interval model of `classify`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Worker threads for the parallel sweeps (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=256))]
    jobs: Option<u64>,

    /// Replace a command's size guard with this bound.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    guard_override: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Everything the toolkit determines about one graph.
    ///
    /// INPUT is an inline graph (a named family like K1,3 / K5 / P4 / C6,
    /// a graph6 code, or a digit-initial adjacency list like 0-1,1-2), a
    /// file holding one, or `-` for stdin.
    Classify {
        /// Inline graph, file path, or `-` for stdin.
        input: String,
    },
    /// Minimal forbidden induced subgraphs for the p-improper interval
    /// graphs, one graph6 line per record (JSON: one record per line).
    Mfisg {
        /// The impropriety bound the graphs must exceed minimally.
        #[arg(long)]
        p: usize,
        /// Largest order to enumerate.
        #[arg(long)]
        max_n: usize,
        /// Compare against a fixture set; mismatch exits 1. Bundled sets:
        /// fig1 (as drawn), fig1-corrected (verified). IMPLAB_FIXTURE_DIR
        /// redirects the lookup to <dir>/<name>.g6.
        #[arg(long, value_name = "NAME")]
        fixtures: Option<String>,
    },
    /// Build, recognize, or verify balanced critical normal forms.
    Bal {
        #[command(subcommand)]
        action: BalAction,
    },
    /// Run every structure-theorem checker over every connected interval
    /// graph up to a given order and tally the outcomes.
    VerifyTheorems {
        /// Largest order to sweep.
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Subcommand)]
enum BalAction {
    /// Build the normal form for a pendant count and part list.
    Build {
        /// Number of pendant two-vertex paths (0, 1, or 2).
        #[arg(long)]
        k: usize,
        /// Comma-separated part graphs, e.g. K3,K3,K3 or K2,P3. A bare
        /// number continues a bipartite name, so K1,3 parses as one part.
        #[arg(long)]
        parts: String,
    },
    /// Recover the spec of a normal-form graph, or say why there is none.
    Check {
        /// Inline graph, file path, or `-` for stdin.
        input: String,
    },
    /// Build a spec and verify the built graph is balanced and critical
    /// with exactly the predicted impropriety.
    Verify {
        /// Number of pendant two-vertex paths (0, 1, or 2).
        #[arg(long)]
        k: usize,
        /// Comma-separated part graphs, as in `bal build`.
        #[arg(long)]
        parts: String,
    },
}

/// A terminating error: what to print and which code to exit with.
struct Failure {
    code: u8,
    message: String,
}

fn usage_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            if format == Format::Json {
                eprintln!(
                    "{}",
                    serde_json::json!({
                        "schema": "implab.error/1",
                        "message": failure.message,
                    })
                );
            } else {
                eprintln!("error: {}", failure.message);
            }
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
            .map_err(|e| usage_error(format!("could not size the thread pool: {e}")))?;
    }
    let guard = cli.guard_override.map(|g| g as usize);
    let (output, code) = match cli.command {
        Command::Classify { input } => cmd_classify(&input, cli.format)?,
        Command::Mfisg { p, max_n, fixtures } => {
            cmd_mfisg(p, max_n, fixtures.as_deref(), cli.format, guard)?
        }
        Command::Bal { action } => match action {
            BalAction::Build { k, parts } => cmd_bal_build(k, &parts, cli.format)?,
            BalAction::Check { input } => cmd_bal_check(&input, cli.format)?,
            BalAction::Verify { k, parts } => cmd_bal_verify(k, &parts, cli.format, guard)?,
        },
        Command::VerifyTheorems { max_n } => cmd_verify_theorems(max_n, cli.format, guard)?,
    };
    emit(cli.out.as_deref(), &output)?;
    Ok(ExitCode::from(code))
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), Failure> {
    let mut content = content.to_string();
    if !content.is_empty() && !content.ends_with('\n') {
        content.push('\n');
    }
    match out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => fs::write(path, content)
            .map_err(|e| usage_error(format!("cannot write {}: {e}", path.display()))),
    }
}

/// Versions a JSON payload: every top-level object carries its schema.
#[derive(Serialize)]
struct Versioned<T: Serialize> {
    schema: &'static str,
    #[serde(flatten)]
    body: T,
}

fn json_line<T: Serialize>(schema: &'static str, body: T) -> String {
    serde_json::to_string(&Versioned { schema, body }).expect("reports serialize")
}

fn json_block<T: Serialize>(schema: &'static str, body: T) -> String {
    serde_json::to_string_pretty(&Versioned { schema, body }).expect("reports serialize")
}

// ---------------------------------------------------------------- input

/// Read a graph from an inline string, a file, or stdin (`-`).
/// Comment lines starting with `#` are skipped; a digit-initial body is
/// an adjacency list (possibly spanning lines); otherwise the first
/// remaining line is a named family or graph6 code.
fn read_graph(input: &str) -> Result<Graph, Failure> {
    let text = if input == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| usage_error(format!("cannot read stdin: {e}")))?;
        buffer
    } else if Path::new(input).is_file() {
        fs::read_to_string(input).map_err(|e| usage_error(format!("cannot read {input}: {e}")))?
    } else {
        input.to_string()
    };
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
        .collect();
    let decoded = match lines.first() {
        None => return Err(usage_error("no graph in the input")),
        Some(first) if first.bytes().next().is_some_and(|b| b.is_ascii_digit()) => {
            codec::decode_adjacency_list(&lines.join(","))
        }
        Some(first) => codec::decode(first),
    };
    decoded.map_err(|e| usage_error(e.to_string()))
}

/// Split a part list on commas, merging a bare-number token into its
/// predecessor so bipartite names like K1,3 survive the split.
fn parse_parts(text: &str) -> Result<Vec<Graph>, Failure> {
    let mut names: Vec<String> = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        if token.is_empty() {
            return Err(usage_error("empty part in the part list"));
        }
        if token.bytes().all(|b| b.is_ascii_digit()) {
            match names.last_mut() {
                Some(last) => {
                    last.push(',');
                    last.push_str(token);
                    continue;
                }
                None => return Err(usage_error(format!("part list starts with a bare number {token:?}"))),
            }
        }
        names.push(token.to_string());
    }
    names
        .iter()
        .map(|name| codec::decode(name).map_err(|e| usage_error(format!("part {name:?}: {e}"))))
        .collect()
}

// ------------------------------------------------------------- fixtures

fn load_fixture_set(name: &str) -> Result<Vec<Fixture>, Failure> {
    if let Ok(dir) = std::env::var("IMPLAB_FIXTURE_DIR") {
        let path = Path::new(&dir).join(format!("{name}.g6"));
        let text = fs::read_to_string(&path).map_err(|e| {
            usage_error(format!(
                "fixture set {name:?} not readable at {}: {e}",
                path.display()
            ))
        })?;
        return parse_fixtures(&text).map_err(|e| usage_error(e.to_string()));
    }
    bundled_set(name).ok_or_else(|| {
        usage_error(format!(
            "unknown fixture set {name:?}; bundled sets are fig1 and fig1-corrected"
        ))
    })
}

#[derive(Serialize)]
struct MissingFixture {
    name: String,
    graph6: String,
}

#[derive(Serialize)]
struct FixtureDiff {
    fixture_set: String,
    expected: usize,
    found: usize,
    matched: usize,
    missing: Vec<MissingFixture>,
    unexpected: Vec<String>,
}

impl FixtureDiff {
    fn compare(name: &str, fixtures: &[Fixture], records: &[MfisgRecord]) -> FixtureDiff {
        let expected: BTreeSet<String> =
            fixtures.iter().map(|f| canonical_form(&f.graph)).collect();
        let found: BTreeSet<String> = records
            .iter()
            .map(|r| canonical_form(&r.graph))
            .collect();
        FixtureDiff {
            fixture_set: name.to_string(),
            expected: expected.len(),
            found: found.len(),
            matched: expected.intersection(&found).count(),
            missing: fixtures
                .iter()
                .filter(|f| !found.contains(&canonical_form(&f.graph)))
                .map(|f| MissingFixture {
                    name: f.name.clone(),
                    graph6: canonical_form(&f.graph),
                })
                .collect(),
            unexpected: found.difference(&expected).cloned().collect(),
        }
    }

    fn is_match(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }

    fn to_text(&self) -> String {
        let mut out = format!("{}/{} matched\n", self.matched, self.expected);
        for miss in &self.missing {
            let _ = writeln!(out, "missing: {} ({})", miss.name, miss.graph6);
        }
        for extra in &self.unexpected {
            let _ = writeln!(out, "unexpected: {extra}");
        }
        out
    }
}

// ------------------------------------------------------------- commands

fn cmd_classify(input: &str, format: Format) -> Result<(String, u8), Failure> {
    let g = read_graph(input)?;
    let record = classify(&g);
    let output = match format {
        Format::Json => json_block("implab.classify/1", &record),
        Format::Svg => match &record.imp {
            Some(certificate) => certificate.witness_model.to_svg(),
            None => {
                return Err(usage_error(
                    "svg needs an interval graph; this graph has no interval model",
                ))
            }
        },
        Format::Text => classification_text(&record),
    };
    Ok((output, 0))
}

fn classification_text(record: &Classification) -> String {
    let mut out = format!(
        "graph {}: order {}, size {}, {}, {}\n",
        record.graph6,
        record.order,
        record.size,
        if record.connected { "connected" } else { "disconnected" },
        if record.interval { "interval" } else { "not interval" },
    );
    if let Some(witness) = record.decision.witness() {
        let _ = writeln!(out, "witness: {}", witness_text(witness));
    }
    let _ = write!(out, "weight {}", record.wt);
    if let Some(certificate) = &record.imp {
        let kind = match certificate.lower_bound_kind {
            implab::impropriety::LowerBoundKind::Weight => "meets the weight bound",
            implab::impropriety::LowerBoundKind::ExhaustiveSearch => "exhaustive search",
        };
        let _ = writeln!(out, "; impropriety {} ({kind})", certificate.p);
    } else {
        out.push('\n');
    }
    if let Some(balance) = &record.balance {
        let verdict = if !balance.balanced {
            "unbalanced".to_string()
        } else if balance.critical {
            format!("balanced, {}-critical", balance.p)
        } else {
            "balanced, not critical".to_string()
        };
        let _ = write!(out, "{verdict}");
        if !balance.basepoints.is_empty() {
            let _ = write!(out, "; basepoints {}", vertex_set_text(balance.basepoints));
        }
        out.push('\n');
    }
    match (&record.bal_form, &record.bal_form_rejection) {
        (Some(spec), _) => {
            let _ = writeln!(
                out,
                "normal form: k = {}, parts [{}], predicted impropriety {}",
                spec.k,
                spec.parts.iter().map(family_text).collect::<Vec<_>>().join(", "),
                spec.predicted_imp(),
            );
        }
        (None, Some(reason)) => {
            let _ = writeln!(out, "normal form: none ({reason})");
        }
        (None, None) => {}
    }
    if record.order > 0 {
        let _ = writeln!(out, "vertex  weight  type");
        for v in &record.vertices {
            let _ = writeln!(
                out,
                "{:<7} {:<7} {}",
                v.vertex, v.weight, v.exterior_components
            );
        }
    }
    if let Some(certificate) = &record.imp {
        let _ = write!(out, "witness model:\n{}", certificate.witness_model.to_ascii());
    }
    out
}

fn witness_text(witness: &NonIntervalWitness) -> String {
    match witness {
        NonIntervalWitness::ChordlessCycle { cycle } => format!(
            "chordless cycle {}",
            cycle.iter().map(usize::to_string).collect::<Vec<_>>().join("-")
        ),
        NonIntervalWitness::AsteroidalTriple { triple, paths } => {
            let path = |p: &[usize]| {
                p.iter().map(usize::to_string).collect::<Vec<_>>().join("-")
            };
            format!(
                "asteroidal triple {},{},{} with paths {} / {} / {}",
                triple[0],
                triple[1],
                triple[2],
                path(&paths[0]),
                path(&paths[1]),
                path(&paths[2]),
            )
        }
    }
}

fn vertex_set_text(set: VertexSet) -> String {
    format!(
        "{{{}}}",
        set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
    )
}

/// Short human name for a part graph: complete, path, and cycle families
/// by name, anything else by graph6.
fn family_text(g: &Graph) -> String {
    let n = g.order();
    if g.is_clique(g.vertex_set()) {
        return format!("K{n}");
    }
    if g.is_connected() {
        let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        if degrees == [vec![1, 1], vec![2; n.saturating_sub(2)]].concat() {
            return format!("P{n}");
        }
        if n >= 3 && degrees.iter().all(|&d| d == 2) {
            return format!("C{n}");
        }
    }
    encode_graph6(g)
}

fn cmd_mfisg(
    p: usize,
    max_n: usize,
    fixtures: Option<&str>,
    format: Format,
    guard: Option<usize>,
) -> Result<(String, u8), Failure> {
    if format == Format::Svg {
        return Err(usage_error("mfisg has no svg output; use text or json"));
    }
    let fixtures = fixtures
        .map(|name| Ok::<_, Failure>((name, load_fixture_set(name)?)))
        .transpose()?;
    let guard = guard.unwrap_or(ENUMERATION_GUARD).min(64);
    let records = mfisg_guarded(p, max_n, guard).map_err(|e| usage_error(e.to_string()))?;
    let mut out = String::new();
    for record in &records {
        match format {
            Format::Text => {
                let _ = writeln!(out, "{}", encode_graph6(&record.graph));
            }
            _ => {
                let _ = writeln!(out, "{}", json_line("implab.mfisg-record/1", record));
            }
        }
    }
    let Some((set_name, fixtures)) = fixtures else {
        return Ok((out, 0));
    };
    let diff = FixtureDiff::compare(set_name, &fixtures, &records);
    match format {
        Format::Text => out.push_str(&diff.to_text()),
        _ => {
            let _ = writeln!(out, "{}", json_line("implab.fixture-diff/1", &diff));
        }
    }
    let code = if diff.is_match() { 0 } else { 1 };
    Ok((out, code))
}

fn cmd_bal_build(k: usize, parts: &str, format: Format) -> Result<(String, u8), Failure> {
    if format == Format::Svg {
        return Err(usage_error("bal build has no svg output; use text or json"));
    }
    let spec = BalSpec::new(k, parse_parts(parts)?).map_err(|e| usage_error(e.to_string()))?;
    let (g, center) = spec.build().map_err(|e| usage_error(e.to_string()))?;
    let output = match format {
        Format::Text => encode_graph6(&g),
        _ => {
            #[derive(Serialize)]
            struct Built<'a> {
                spec: &'a BalSpec,
                graph6: String,
                canonical: String,
                center: usize,
                predicted_imp: usize,
            }
            json_block(
                "implab.bal-build/1",
                Built {
                    spec: &spec,
                    graph6: encode_graph6(&g),
                    canonical: canonical_form(&g),
                    center,
                    predicted_imp: spec.predicted_imp(),
                },
            )
        }
    };
    Ok((output, 0))
}

fn cmd_bal_check(input: &str, format: Format) -> Result<(String, u8), Failure> {
    if format == Format::Svg {
        return Err(usage_error("bal check has no svg output; use text or json"));
    }
    let g = read_graph(input)?;
    let outcome = is_bal_form(&g);
    let output = match format {
        Format::Text => match &outcome {
            Ok(spec) => format!(
                "normal form: k = {}, parts [{}], predicted impropriety {}",
                spec.k,
                spec.parts.iter().map(family_text).collect::<Vec<_>>().join(", "),
                spec.predicted_imp(),
            ),
            Err(rejection) => format!("not a normal form: {}", rejection.reason),
        },
        _ => {
            #[derive(Serialize)]
            struct CheckReport<'a> {
                graph6: String,
                bal_form: Option<&'a BalSpec>,
                rejection: Option<&'a str>,
            }
            json_block(
                "implab.bal-check/1",
                CheckReport {
                    graph6: encode_graph6(&g),
                    bal_form: outcome.as_ref().ok(),
                    rejection: outcome.as_ref().err().map(|r| r.reason.as_str()),
                },
            )
        }
    };
    Ok((output, 0))
}

fn cmd_bal_verify(
    k: usize,
    parts: &str,
    format: Format,
    guard: Option<usize>,
) -> Result<(String, u8), Failure> {
    if format == Format::Svg {
        return Err(usage_error("bal verify has no svg output; use text or json"));
    }
    let spec = BalSpec::new(k, parse_parts(parts)?).map_err(|e| usage_error(e.to_string()))?;
    let check = verify_construction_guarded(&spec, guard.unwrap_or(VERIFY_BOUND))
        .map_err(|e| usage_error(e.to_string()))?;
    let code = u8::from(check.is_fail());
    let output = match format {
        Format::Text => match &check {
            Check::Pass { note } => note.clone(),
            Check::Vacuous { reason } => format!("vacuous: {reason}"),
            Check::Fail { counterexample } => format!(
                "FAIL on {}: {}",
                counterexample.graph, counterexample.detail
            ),
        },
        _ => {
            #[derive(Serialize)]
            struct VerifyReport<'a> {
                spec: &'a BalSpec,
                check: &'a Check,
            }
            json_block(
                "implab.bal-verify/1",
                VerifyReport {
                    spec: &spec,
                    check: &check,
                },
            )
        }
    };
    Ok((output, code))
}

fn cmd_verify_theorems(
    max_n: usize,
    format: Format,
    guard: Option<usize>,
) -> Result<(String, u8), Failure> {
    if format == Format::Svg {
        return Err(usage_error("verify-theorems has no svg output; use text or json"));
    }
    let guard = guard.unwrap_or(ENUMERATION_GUARD).min(64);
    let report =
        verify_theorems_guarded(max_n, guard).map_err(|e| usage_error(e.to_string()))?;
    let code = u8::from(!report.all_pass());
    let output = match format {
        Format::Text => {
            let mut out = format!(
                "theorem sweep to order {}: {} graphs\n",
                report.max_n, report.graphs
            );
            for row in &report.rows {
                let _ = writeln!(
                    out,
                    "{:<22} pass {:<6} fail {:<6} vacuous {}",
                    row.name, row.pass, row.fail, row.vacuous
                );
                for counterexample in &row.failures {
                    let _ = writeln!(
                        out,
                        "  counterexample {}: {}",
                        counterexample.graph, counterexample.detail
                    );
                }
            }
            out.push_str(if report.all_pass() {
                "all claims hold\n"
            } else {
                "FAILURES FOUND\n"
            });
            out
        }
        _ => json_block("implab.verify-theorems/1", &report),
    };
    Ok((output, code))
}
