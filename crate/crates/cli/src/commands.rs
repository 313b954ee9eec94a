use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use binmat_core::density::format_rational;
use binmat_core::format::{parse_bm, write_bm};
use binmat_core::search::{contains_pg, critical_number};
use binmat_core::spectral::{fourier_lower_bound_check, overlap_sum_direct, triple_count, wht};
use binmat_core::verify::{
    audit_candidate, coset_contribution_check, dirac_pairing, graph_lemma_check, graph_lemma_search,
    validate_pairing, verify_bose_burton, verify_main_theorem, verify_pie, verify_quotp, verify_quotx,
    AuditOptions, Graph, GraphSearchOptions, VerifyConfig, VerifyReport, DEFAULT_CANDIDATE_CAP,
};
use binmat_core::{fourier_bias, Error, Matroid, Subspace};
use serde_json::{json, Value};

use crate::args::{Cli, Command, Format, Kind, ModeArg, Theorem, VerifyArgs};
use crate::output::render;
use crate::EXIT_USAGE;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io { path: PathBuf, source: std::io::Error },
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = Result<T, CliError>;

pub fn error_status(e: &CliError) -> u8 {
    match e {
        CliError::Core(Error::Resource { .. }) => 2,
        CliError::Core(Error::Precondition(_)) => 1,
        CliError::Core(_) | CliError::Usage(_) => EXIT_USAGE,
        CliError::Io { .. } => 66,
    }
}

fn read_matroid(path: &Path) -> CliResult<Matroid> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    Ok(parse_bm(&text)?)
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.into(), source })
}

fn basis(s: &Subspace) -> Value {
    json!(s.basis())
}

fn edges(m: &Matroid) -> Value {
    json!(m.edges().iter().collect::<Vec<_>>())
}

fn emit(value: &Value, format: Format, lists: &[&str]) {
    print!("{}", render(value, format, lists));
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// Writes `m` to `output` or, in text mode without a path, prints it.
fn matroid_output(m: &Matroid, output: Option<&Path>, report: Value, format: Format) -> CliResult<u8> {
    match output {
        Some(path) => {
            write_file(path, &write_bm(m))?;
            emit(&report, format, &[]);
        }
        None if format == Format::Text => print!("{}", write_bm(m)),
        None => emit(&report, format, &[]),
    }
    Ok(0)
}

pub fn run(cli: &Cli) -> CliResult<u8> {
    let format = cli.format;
    match &cli.command {
        Command::Chi(f) => {
            let m = read_matroid(&f.file)?;
            let (chi, h) = critical_number(&m)?;
            let report = json!({
                "rank": m.rank(),
                "size": m.size(),
                "chi": chi,
                "witness": basis(&h),
            });
            emit(&report, format, &[]);
            Ok(0)
        }
        Command::PgFree { file, t } => {
            let m = read_matroid(file)?;
            let (found, witness) = contains_pg(&m, *t)?;
            let report = json!({
                "t": t,
                "pg_free": !found,
                "witness": witness.as_ref().map(basis),
            });
            emit(&report, format, &[]);
            Ok(0)
        }
        Command::Double { file, v, output } => {
            let m = read_matroid(file)?;
            let doubled = m.double(*v)?;
            let (lhs, rhs) = m.double_size_identity(*v)?;
            let report = json!({
                "v": v,
                "size": doubled.size(),
                "identity": [lhs, rhs],
                "spanning": doubled.is_spanning(),
                "edges": edges(&doubled),
            });
            matroid_output(&doubled, output.as_deref(), report, format)
        }
        Command::Restrict { file, basis: vectors, output } => {
            let m = read_matroid(file)?;
            let h = Subspace::span(vectors, m.rank())?;
            let restricted = m.restrict(&h);
            let report = json!({
                "subspace": basis(&h),
                "rank": restricted.rank(),
                "size": restricted.size(),
                "edges": edges(&restricted),
            });
            matroid_output(&restricted, output.as_deref(), report, format)
        }
        Command::Bias(f) => {
            let m = read_matroid(&f.file)?;
            let y = m.complement_set();
            let report = json!({
                "bias_edges": format_rational(&fourier_bias(m.edges())?),
                "bias_complement": format_rational(&fourier_bias(&y)?),
                "max_coefficient": wht(m.edges()).max_nontrivial(),
            });
            emit(&report, format, &[]);
            Ok(0)
        }
        Command::TripleCount(f) => {
            let m = read_matroid(&f.file)?;
            let y = m.complement_set();
            let spectral = triple_count(&y, &y, m.edges())?;
            let report = json!({
                "overlap_sum": spectral,
                "overlap_sum_direct": overlap_sum_direct(&m),
                "fourier": to_value(&fourier_lower_bound_check(&m)?),
            });
            emit(&report, format, &[]);
            Ok(0)
        }
        Command::Construct { kind, rank, t, output } => {
            let m = match kind {
                Kind::BoseBurton => {
                    let t = t.ok_or_else(|| CliError::Usage("--t is required for bose-burton".into()))?;
                    Matroid::bose_burton(*rank, t)?
                }
                Kind::FullPg => Matroid::full_pg(*rank)?,
            };
            let report = json!({
                "rank": m.rank(),
                "size": m.size(),
                "edges": edges(&m),
            });
            matroid_output(&m, output.as_deref(), report, format)
        }
        Command::Audit { file, t, force, cap } => {
            let m = read_matroid(file)?;
            let opts = AuditOptions { force: *force, cap: cap.unwrap_or(AuditOptions::default().cap), ..AuditOptions::default() };
            let report = audit_candidate(&m, *t, &opts)?;
            emit(&to_value(&report), format, &["conditions", "hypotheses"]);
            Ok(report.exit_status() as u8)
        }
        Command::Verify(args) => {
            let report = verify(args)?;
            emit_report(&report, format);
            Ok(report.exit_status() as u8)
        }
        Command::CosetCheck => {
            let check = coset_contribution_check();
            emit(&to_value(&check), format, &["violations"]);
            Ok(check.report.exit_status() as u8)
        }
        Command::GraphLemma { graph, search, trials, seed } => {
            if *search {
                let report = graph_lemma_search(&GraphSearchOptions::new(*trials, *seed));
                emit_report(&report, format);
                return Ok(report.exit_status() as u8);
            }
            let graphs = match graph.as_deref() {
                Some(name) => vec![(name.to_string(), load_graph(name)?)],
                None => ["k30", "k30-matching", "triangles"]
                    .iter()
                    .map(|n| Ok((n.to_string(), load_graph(n)?)))
                    .collect::<CliResult<Vec<_>>>()?,
            };
            let mut rows = Vec::new();
            let mut status = 0;
            for (name, g) in &graphs {
                let check = graph_lemma_check(g)?;
                if !check.implication_holds() {
                    status = 1;
                }
                let mut row = to_value(&check);
                row["graph"] = json!(name);
                rows.push(row);
            }
            emit(&json!({ "graphs": rows }), format, &[]);
            Ok(status)
        }
        Command::Match(f) => {
            let m = read_matroid(&f.file)?;
            let pairing = dirac_pairing(&m)?;
            let valid = validate_pairing(&m, &pairing);
            let report = json!({
                "pairs": pairing.pairs.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
                "leftover": pairing.leftover,
                "valid": valid.is_ok(),
            });
            emit(&report, format, &[]);
            Ok(u8::from(valid.is_err()))
        }
    }
}

fn emit_report(report: &VerifyReport, format: Format) {
    emit(&to_value(report), format, &["violations"]);
}

fn load_graph(name: &str) -> CliResult<Graph> {
    Ok(match name {
        "k30" => Graph::complete(30)?,
        "k30-matching" => Graph::complete_minus_matching(30)?,
        "triangles" => Graph::triangle_complement(10)?,
        path => {
            let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
            Graph::parse(&text)?
        }
    })
}

fn verify(args: &VerifyArgs) -> CliResult<VerifyReport> {
    let mut cfg = match args.mode {
        ModeArg::Exhaustive => VerifyConfig::exhaustive(),
        ModeArg::Random => VerifyConfig::random(args.trials, args.seed),
    };
    cfg.seed = args.seed;
    cfg.cap = args.cap.unwrap_or(DEFAULT_CANDIDATE_CAP);
    let need_t = || args.t.ok_or_else(|| CliError::Usage(format!("--t is required for {:?}", args.theorem)));
    let random_only = |name: &str| {
        if args.mode == ModeArg::Exhaustive {
            Err(CliError::Usage(format!("{name} supports only --mode random")))
        } else {
            Ok(())
        }
    };
    let r = args.rank;
    Ok(match args.theorem {
        Theorem::BoseBurton => verify_bose_burton(r, need_t()?, &cfg)?,
        Theorem::Main => verify_main_theorem(r, need_t()?, &cfg)?,
        Theorem::Pie => verify_pie(r, &cfg)?,
        Theorem::Quotp => {
            random_only("quotp")?;
            verify_quotp(r, need_t()?, &cfg)?
        }
        Theorem::Quotx => {
            random_only("quotx")?;
            verify_quotx(r, &cfg)?
        }
    })
}
