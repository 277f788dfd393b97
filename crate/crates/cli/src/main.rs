//! The `hvec` binary: reads complex documents, runs the library checkers,
//! and reports verdicts with shell-friendly exit codes. 0 means the checked
//! property holds (or the computation simply finished), 1 means it was
//! refuted, 2 means the input or invocation was unusable. Reports go to
//! standard output and are byte-for-byte deterministic for fixed inputs;
//! diagnostics go to standard error.

mod document;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hvec_core::{
    build_family, cofacet_graph, exhaustive_nonexistence_search, gpsy_sums, hilbert_from_f,
    is_cohen_macaulay, is_m_vector, is_serre, s2_graph_obstruction, verify_counterexample,
    CounterexampleReport, FamilyError, FieldSpec, GraphError, HVectorError, ObstructionVerdict,
    SearchReport, SerreVerdict, SerreWitness, SimplicialComplex,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "hvec",
    version,
    about = "Exact h-vector, Hilbert series, homology and Serre-condition checks for simplicial complexes"
)]
struct Cli {
    /// Report format on standard output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Face counts by cardinality, starting with the empty face.
    Fvector {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// The h-vector (binomial transform of the face counts).
    Hvector {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Hilbert series of the face ring, in lowest terms.
    Hilbert {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Macaulay M-vector test on the given entries.
    #[command(allow_negative_numbers = true)]
    Mvector {
        #[arg(required = true, value_name = "ENTRY")]
        entries: Vec<i64>,
    },
    /// Tail sums of the h-vector at rank r (nonnegative under (S_r)).
    Gpsy {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        r: u32,
    },
    /// Serre condition (S_r) over a coefficient field.
    Serre {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        r: u32,
        #[arg(long, value_parser = parse_field, default_value = "gf2")]
        field: FieldSpec,
    },
    /// Cohen-Macaulay test (Reisner's criterion) over a coefficient field.
    Cm {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_parser = parse_field, default_value = "gf2")]
        field: FieldSpec,
    },
    /// Whether some vertex lies in every facet.
    Cone {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Whether all facets have the same cardinality.
    Pure {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// The graph whose edges are the facet complements (codimension-2 input).
    CofacetGraph {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Sound (S_2) screen: an induced 4-cycle in the complement graph
    /// refutes (S_2); otherwise the screen is inconclusive.
    ObstructS2 {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Writes the d-th member of the counterexample family as a document.
    Family {
        #[arg(long)]
        d: u32,
    },
    /// Exhaustive search over all pure candidates with the target h-vector.
    Search {
        #[arg(long)]
        d: u32,
        #[arg(long, value_parser = parse_field, default_value = "gf2")]
        field: FieldSpec,
        /// Also count (S_2) satisfiers among all covering candidates.
        #[arg(long)]
        check_all: bool,
    },
    /// Full counterexample verification for the d-th family member,
    /// including the exhaustive search where supported (d = 5, 6).
    VerifyPaper {
        #[arg(long)]
        d: u32,
    },
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    if s == "q" {
        return Ok(FieldSpec::Rationals);
    }
    let p = s
        .strip_prefix("gf")
        .and_then(|rest| rest.parse::<u16>().ok())
        .ok_or("expected `q`, `gf2`, or `gf<p>` for a prime p < 2^16")?;
    FieldSpec::prime(p).map_err(|e| e.to_string())
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Document(#[from] document::DocumentError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    HVector(#[from] HVectorError),
    #[error(transparent)]
    Poly(#[from] hvec_core::PolyError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, cli.format) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

/// Runs one subcommand; the returned flag says whether the checked property
/// was refuted.
fn run(command: Command, format: Format) -> Result<bool, CliError> {
    match command {
        Command::Fvector { input } => {
            let cx = load(&input)?;
            let f = cx.f_vector();
            emit(
                format,
                &FVectorReport { n: cx.n(), d: cx.d(), f: f.entries().to_vec() },
                format!("f = {}", tuple(f.entries())),
            )?;
            Ok(false)
        }
        Command::Hvector { input } => {
            let cx = load(&input)?;
            let h = cx.h_vector();
            emit(
                format,
                &HVectorReport { n: cx.n(), d: cx.d(), h: h.entries().to_vec() },
                format!("h = {}", tuple(h.entries())),
            )?;
            Ok(false)
        }
        Command::Hilbert { input } => {
            let cx = load(&input)?;
            let series = hilbert_from_f(&cx.f_vector())?;
            emit(format, &series, format!("H(t) = {series}"))?;
            Ok(false)
        }
        Command::Mvector { entries } => {
            let ok = is_m_vector(&entries);
            let verdict = if ok { "M-vector" } else { "not an M-vector" };
            emit(
                format,
                &MVectorReport { entries: entries.clone(), m_vector: ok },
                format!("{}: {verdict}", tuple(&entries)),
            )?;
            Ok(!ok)
        }
        Command::Gpsy { input, r } => {
            let cx = load(&input)?;
            let sums = gpsy_sums(&cx.h_vector(), r)?;
            let nonnegative = sums.iter().all(|&s| s >= 0);
            emit(
                format,
                &GpsyReport { r, sums: sums.clone(), nonnegative },
                format!("tail sums at r = {r}: {}\nnonnegative: {nonnegative}", tuple(&sums)),
            )?;
            Ok(!nonnegative)
        }
        Command::Serre { input, r, field } => {
            let cx = load(&input)?;
            let verdict = is_serre(&cx, r, field);
            let label = format!("(S_{r}) over {field}");
            emit(format, &verdict, verdict_text(&label, &verdict))?;
            Ok(!verdict.satisfied)
        }
        Command::Cm { input, field } => {
            let cx = load(&input)?;
            let verdict = is_cohen_macaulay(&cx, field);
            let label = format!("Cohen-Macaulay over {field}");
            emit(format, &verdict, verdict_text(&label, &verdict))?;
            Ok(!verdict.satisfied)
        }
        Command::Cone { input } => {
            let cx = load(&input)?;
            let apex = cx.cone_apex();
            let text = match apex {
                Some(v) => format!("cone with apex {v}"),
                None => "not a cone".to_string(),
            };
            emit(format, &ConeReport { cone: apex.is_some(), apex }, text)?;
            Ok(apex.is_none())
        }
        Command::Pure { input } => {
            let cx = load(&input)?;
            let pure = cx.is_pure();
            let text = if pure {
                format!("pure, dimension {}", cx.dim())
            } else {
                let smallest = cx.facets().iter().min_by_key(|f| f.card()).unwrap();
                let largest = cx.facets().iter().max_by_key(|f| f.card()).unwrap();
                format!("not pure: facets {smallest} and {largest} differ in cardinality")
            };
            emit(format, &PureReport { pure, dimension: cx.dim() }, text)?;
            Ok(!pure)
        }
        Command::CofacetGraph { input } => {
            let cx = load(&input)?;
            let g = cofacet_graph(&cx)?;
            let edges: Vec<String> =
                g.edges().iter().map(|&(u, v)| format!("({u}, {v})")).collect();
            emit(format, &g, format!("n = {}\nedges: {}", g.n(), edges.join(" ")))?;
            Ok(false)
        }
        Command::ObstructS2 { input } => {
            let cx = load(&input)?;
            let verdict = s2_graph_obstruction(&cx)?;
            let (text, refuted) = match &verdict {
                ObstructionVerdict::NotS2 { witness } => {
                    (format!("not (S_2): induced 4-cycle {witness} in the complement graph"), true)
                }
                ObstructionVerdict::Inconclusive => ("inconclusive".to_string(), false),
            };
            emit(format, &verdict, text)?;
            Ok(refuted)
        }
        Command::Family { d } => {
            let cx = build_family(d)?;
            let text = document::emit_complex(&cx);
            emit(format, &FamilyReport { d, n: cx.n(), facets: &cx }, text.trim_end().to_string())?;
            Ok(false)
        }
        Command::Search { d, field, check_all } => {
            let report = exhaustive_nonexistence_search(d, field, check_all)?;
            emit(format, &report, search_text(&report))?;
            Ok(report.s2_satisfiers > 0)
        }
        Command::VerifyPaper { d } => {
            let report = verify_counterexample(d, &[FieldSpec::GF2, FieldSpec::Rationals])?;
            let search = if d <= 6 {
                Some(exhaustive_nonexistence_search(d, FieldSpec::GF2, false)?)
            } else {
                None
            };
            let search_ok = search.as_ref().is_none_or(|s| {
                s.family_found && s.s2_satisfiers == 0 && s.rationals_recheck_agrees
            });
            let verified = report.all_pass && search_ok;
            let combined = VerifyReport { report: &report, search: search.as_ref(), verified };
            emit(format, &combined, verify_text(&report, search.as_ref(), verified))?;
            Ok(!verified)
        }
    }
}

fn load(path: &PathBuf) -> Result<SimplicialComplex, CliError> {
    let text =
        fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
    Ok(document::parse_complex(&text)?)
}

fn emit<T: Serialize>(format: Format, report: &T, text: String) -> Result<(), CliError> {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(report)?),
    }
    Ok(())
}

fn tuple(xs: &[i64]) -> String {
    let inner: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(", "))
}

fn verdict_text(label: &str, verdict: &SerreVerdict) -> String {
    if verdict.satisfied {
        return format!("{label}: satisfied");
    }
    let witness = match &verdict.witness {
        Some(SerreWitness::NotPure { smaller, larger }) => {
            format!("facets {smaller} and {larger} differ in cardinality")
        }
        Some(SerreWitness::Homology { face, degree, betti }) => {
            format!("link of {face} has reduced Betti number {betti} in degree {degree}")
        }
        None => unreachable!("failed verdicts carry a witness"),
    };
    format!("{label}: fails\nwitness: {witness}")
}

fn search_text(report: &SearchReport) -> String {
    let mut out = format!(
        "d = {}, field {}\ntarget h-vector: {}\ncandidates: {} ({} skipped as non-covering)\n",
        report.d,
        report.field,
        tuple(report.target.entries()),
        report.candidates_enumerated,
        report.skipped_uncovered,
    );
    out.push_str(&format!("h-vector matches: {}\n", report.matches.len()));
    for m in &report.matches {
        let facets: Vec<String> = m.facets.iter().map(|f| f.to_string()).collect();
        let verdict = if m.verdict.satisfied { "satisfies" } else { "fails" };
        out.push_str(&format!("  {} -> {verdict} (S_2)\n", facets.join(" ")));
    }
    out.push_str(&format!(
        "(S_2) satisfiers among matches: {}\nfamily member found: {}\nrationals re-check agrees: {}",
        report.s2_satisfiers, report.family_found, report.rationals_recheck_agrees,
    ));
    if let Some(count) = report.s2_satisfiers_all_candidates {
        out.push_str(&format!("\n(S_2) satisfiers among all candidates: {count}"));
    }
    out
}

fn verify_text(
    report: &CounterexampleReport,
    search: Option<&SearchReport>,
    verified: bool,
) -> String {
    let mut out = format!(
        "d = {}\nh-vector: {} (matches expected: {})\nHilbert series: {} (all routes agree: {})\n",
        report.d,
        tuple(report.hvector.entries()),
        report.hvector_matches,
        report.hilbert_oracle,
        report.hilbert_matches,
    );
    out.push_str(&format!("entries nonzero: {}\npure: {}\n", report.entries_nonzero, report.pure));
    out.push_str(&format!(
        "conditions at r = 2: M-vector prefix {}, tail sums {} nonnegative {}, zero tail {}\n",
        report.conditions.m_vector_prefix_ok,
        tuple(&report.conditions.gpsy),
        report.conditions.gpsy_nonnegative,
        report.conditions.zero_tail,
    ));
    for verdict in &report.serre {
        out.push_str(&verdict_text(&format!("(S_2) over {}", verdict.field), verdict));
        out.push('\n');
    }
    match &report.obstruction {
        ObstructionVerdict::NotS2 { witness } => {
            out.push_str(&format!("graph obstruction: induced 4-cycle {witness}\n"));
        }
        ObstructionVerdict::Inconclusive => out.push_str("graph obstruction: inconclusive\n"),
    }
    match search {
        Some(s) => out.push_str(&format!(
            "search: {} candidates, {} matches, {} (S_2) satisfiers, family found: {}, rationals agree: {}\n",
            s.candidates_enumerated,
            s.matches.len(),
            s.s2_satisfiers,
            s.family_found,
            s.rationals_recheck_agrees,
        )),
        None => out.push_str("search: skipped (exhaustive search supports d = 5 and 6)\n"),
    }
    out.push_str(&format!(
        "verdict: counterexample {}",
        if verified { "verified" } else { "NOT verified" }
    ));
    out
}

#[derive(Serialize)]
struct FVectorReport {
    n: u32,
    d: u32,
    f: Vec<i64>,
}

#[derive(Serialize)]
struct HVectorReport {
    n: u32,
    d: u32,
    h: Vec<i64>,
}

#[derive(Serialize)]
struct MVectorReport {
    entries: Vec<i64>,
    m_vector: bool,
}

#[derive(Serialize)]
struct GpsyReport {
    r: u32,
    sums: Vec<i64>,
    nonnegative: bool,
}

#[derive(Serialize)]
struct ConeReport {
    cone: bool,
    apex: Option<u32>,
}

#[derive(Serialize)]
struct PureReport {
    pure: bool,
    dimension: i32,
}

#[derive(Serialize)]
struct FamilyReport<'a> {
    d: u32,
    n: u32,
    #[serde(serialize_with = "facets_only")]
    facets: &'a SimplicialComplex,
}

fn facets_only<S: serde::Serializer>(
    cx: &SimplicialComplex,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    serializer.collect_seq(cx.facets())
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    report: &'a CounterexampleReport,
    search: Option<&'a SearchReport>,
    verified: bool,
}
