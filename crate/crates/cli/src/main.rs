//! `c4book`: constructions, verification, bounds and searches for r(C4, B_n^(k)).
//!
//! Exit codes: 0 verified or witness found, 1 refuted or nothing found within
//! budget, 2 usage or input error. Every artifact-producing run writes one
//! JSON manifest line to stderr; stdout carries only the artifact.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use c4book::bounds::{bound_report, bounds_params, parse_rational, predicted_table, theorem15_admissible};
use c4book::graph::{g6_decode, g6_encode, is_c4_free, is_friendship, kst_check, Graph};
use c4book::ramsey::{certify_lower_bound, complement_book_number_par, is_ramsey_witness};
use c4book::search::{
    greedy_min_degree_subgraph, probe_gq, random_delete_construction, search_exact, DeletionOverrides, ExactOutcome,
    ProbeConfig, SearchError,
};
use c4book::{Field, GENERATOR_VERSION};
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

const SCHEMA: &str = "c4book/1";
const CACHE_ENV: &str = "RAMSEY_BOOK_CACHE";
const FIELD_TABLE_MAX: u64 = 64;

#[derive(Parser)]
#[command(name = "c4book", version, about = "Ramsey numbers of the 4-cycle versus book graphs")]
struct Cli {
    /// Output format for stdout.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for parallel searches. Output does not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Describe GF(p^e): modulus and, with --table, addition and multiplication tables.
    Field {
        p: u64,
        e: u32,
        #[arg(long)]
        table: bool,
    },
    /// Build the polarity graph ER_q.
    Er {
        q: u64,
        /// Write the graph6 encoding here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include degree statistics.
        #[arg(long)]
        stats: bool,
    },
    /// Structural checks on a graph6 file (all checks when no flag is given).
    Check {
        file: PathBuf,
        #[arg(long)]
        c4: bool,
        #[arg(long)]
        kst: bool,
        #[arg(long)]
        friendship: bool,
    },
    /// Decide whether a graph proves r(C4, B_n^(k)) >= N + 1.
    Verify {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Minimum-degree lower-bound certificate for a C4-free graph.
    Certify {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Known bounds for (n, k), or a table of predicted exact values.
    Bounds {
        #[arg(long, required_unless_present = "table")]
        n: Option<u64>,
        #[arg(long, required_unless_present = "table")]
        k: Option<u32>,
        #[arg(long, requires = "t")]
        q: Option<i64>,
        #[arg(long, requires = "q")]
        t: Option<i64>,
        #[arg(long, default_value = "1/2")]
        eps: String,
        /// QMIN QMAX K EPS
        #[arg(long, num_args = 4, value_names = ["QMIN", "QMAX", "K", "EPS"], conflicts_with_all = ["n", "k"])]
        table: Option<Vec<String>>,
    },
    /// Extremal constructions.
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// Exhaustive and heuristic searches.
    Search {
        #[command(subcommand)]
        kind: Search,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Induced subgraph of ER_q with given order and minimum degree.
    ErSubgraph {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        min_deg: usize,
        /// Search-node budget; accepts forms like 1e7.
        #[arg(long, default_value = "1e7", value_parser = parse_count)]
        budget: u64,
        /// Spine size for the certificate.
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random deletion from ER_p.
    RandomDelete {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long, default_value_t = 6)]
        c: u64,
        /// Exponent as a fraction or decimal, below 1/2.
        #[arg(long, default_value = "21/80")]
        alpha: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "1000", value_parser = parse_count)]
        max_attempts: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Search {
    /// Decide r(C4, B_n^(k)) > N by exhaustive generation of C4-free graphs.
    Exact {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        order: usize,
        /// Test every C4-free class instead of pruning by minimum degree.
        #[arg(long)]
        no_prune: bool,
    },
    /// Heuristic search for a C4-free graph on q^2+q+3 vertices with B_{q^2-q+1}^(2)-free complement.
    Gq {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value = "1e8", value_parser = parse_count)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_count(s: &str) -> Result<u64, String> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    let (mantissa, exp) = s.split_once(['e', 'E']).ok_or_else(|| format!("not a count: {s}"))?;
    let mantissa: u64 = mantissa.parse().map_err(|_| format!("not a count: {s}"))?;
    let exp: u32 = exp.parse().map_err(|_| format!("not a count: {s}"))?;
    10u64.checked_pow(exp).and_then(|p| p.checked_mul(mantissa)).ok_or_else(|| format!("count overflows: {s}"))
}

#[derive(Serialize)]
struct RunManifest {
    manifest: &'static str,
    command_line: Vec<String>,
    tool_version: String,
    seeds: Vec<u64>,
    input_digests: Vec<(String, String)>,
    output_digests: Vec<(String, String)>,
    wall_time_ms: u128,
}

/// Collects what the manifest records while a command runs.
struct Run {
    started: Instant,
    seeds: Vec<u64>,
    inputs: Vec<(String, String)>,
    outputs: Vec<(String, String)>,
    artifact: bool,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Run {
    fn read_graph(&mut self, path: &Path) -> Result<Graph, InputError> {
        let bytes = fs::read(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
        self.inputs.push((path.display().to_string(), sha256_hex(&bytes)));
        g6_decode(&bytes).map_err(|e| InputError(format!("{}: {e}", path.display())))
    }

    fn write(&mut self, path: &Path, contents: &str) -> Result<()> {
        fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))?;
        self.outputs.push((path.display().to_string(), sha256_hex(contents.as_bytes())));
        self.artifact = true;
        Ok(())
    }
}

/// Bad input from the user: exit code 2.
#[derive(Debug)]
struct InputError(String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn input_err(msg: impl Into<String>) -> anyhow::Error {
    InputError(msg.into()).into()
}

struct Outcome {
    body: Value,
    success: bool,
}

fn render(body: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(body).expect("serialisable") + "\n",
        Format::Table => {
            let Value::Object(map) = body else { return body.to_string() + "\n" };
            let width = map.keys().map(String::len).max().unwrap_or(0);
            let mut out = String::new();
            for (key, value) in map {
                let shown = match value {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                out.push_str(&format!("{key:<width$}  {shown}\n"));
            }
            out
        }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut run = Run { started: Instant::now(), seeds: vec![], inputs: vec![], outputs: vec![], artifact: false };
    let result = dispatch(&cli, &mut run);
    match result {
        Ok(outcome) => {
            let mut body = outcome.body;
            if let Value::Object(map) = &mut body {
                map.insert("schema".into(), json!(SCHEMA));
            }
            let text = render(&body, cli.format);
            print!("{text}");
            run.outputs.insert(0, ("stdout".into(), sha256_hex(text.as_bytes())));
            if run.artifact {
                let manifest = RunManifest {
                    manifest: SCHEMA,
                    command_line: argv,
                    tool_version: GENERATOR_VERSION.into(),
                    seeds: run.seeds,
                    input_digests: run.inputs,
                    output_digests: run.outputs,
                    wall_time_ms: run.started.elapsed().as_millis(),
                };
                eprintln!("{}", serde_json::to_string(&manifest).expect("serialisable"));
            }
            ExitCode::from(if outcome.success { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if e.downcast_ref::<InputError>().is_some() { 2 } else { 1 })
        }
    }
}

fn dispatch(cli: &Cli, run: &mut Run) -> Result<Outcome> {
    let jobs = cli.jobs.max(1);
    match &cli.command {
        Command::Field { p, e, table } => field(*p, *e, *table),
        Command::Er { q, out, stats } => er(*q, out.as_deref(), *stats, run),
        Command::Check { file, c4, kst, friendship } => {
            let g = run.read_graph(file)?;
            let all = !(*c4 || *kst || *friendship);
            let mut body = json!({ "order": g.order(), "edges": g.edge_count() });
            if all || *c4 {
                let c = is_c4_free(&g);
                body["c4_free"] = json!(c.c4_free);
                body["c4_witness"] = json!(c.witness);
            }
            if all || *kst {
                body["kst"] = serde_json::to_value(kst_check(&g))?;
            }
            if all || *friendship {
                body["friendship_k"] = json!(is_friendship(&g)?);
            }
            Ok(Outcome { body, success: true })
        }
        Command::Verify { file, k, n } => {
            let g = run.read_graph(file)?;
            run.artifact = true;
            verify(&g, *k, *n, jobs)
        }
        Command::Certify { file, k } => {
            let g = run.read_graph(file)?;
            run.artifact = true;
            if *k == 0 {
                return Err(input_err("--k must be at least 1"));
            }
            match certify_lower_bound(&g, *k, &format!("certified from {}", file.display())) {
                Ok(cert) => Ok(Outcome { body: serde_json::to_value(cert)?, success: true }),
                Err(c4book::RamseyError::NotC4Free(w)) => Ok(Outcome {
                    body: json!({ "certified": false, "reason": "graph contains a 4-cycle", "c4_witness": w }),
                    success: false,
                }),
                Err(e) => Err(e.into()),
            }
        }
        Command::Bounds { n, k, q, t, eps, table } => bounds(*n, *k, *q, *t, eps, table.as_deref()),
        Command::Construct { kind } => {
            run.artifact = true;
            match kind {
                Construct::ErSubgraph { q, order, min_deg, budget, k, out } => {
                    er_subgraph(*q, *order, *min_deg, *budget, *k, out.as_deref(), run)
                }
                Construct::RandomDelete { n, k, m, c, alpha, seed, max_attempts, out } => {
                    run.seeds.push(*seed);
                    let alpha = parse_rational(alpha).map_err(|e| input_err(e.to_string()))?;
                    let alpha = to_small_ratio(&alpha)?;
                    let overrides = DeletionOverrides { m: *m, c: *c, alpha, max_attempts: *max_attempts, jobs };
                    random_delete(*n, *k, *seed, &overrides, out.as_deref(), run)
                }
            }
        }
        Command::Search { kind } => {
            run.artifact = true;
            match kind {
                Search::Exact { k, n, order, no_prune } => exact(*order, *k, *n, jobs, !*no_prune),
                Search::Gq { q, budget, seed } => {
                    run.seeds.push(*seed);
                    gq(*q, *budget, *seed)
                }
            }
        }
    }
}

fn to_small_ratio(r: &num_rational::BigRational) -> Result<Ratio<u32>> {
    let numer = u32::try_from(r.numer()).map_err(|_| input_err(format!("alpha out of range: {r}")))?;
    let denom = u32::try_from(r.denom()).map_err(|_| input_err(format!("alpha out of range: {r}")))?;
    Ok(Ratio::new(numer, denom))
}

fn field(p: u64, e: u32, table: bool) -> Result<Outcome> {
    let f = Field::new(p, e).map_err(|e| input_err(e.to_string()))?;
    let q = f.order();
    let modulus = f.modulus().to_vec();
    let mut body = json!({ "p": p, "e": e, "q": q, "modulus": modulus, "modulus_poly": poly_string(&modulus) });
    if table {
        if q > FIELD_TABLE_MAX {
            return Err(input_err(format!("--table needs q <= {FIELD_TABLE_MAX}, got {q}")));
        }
        let t = f.tables();
        let qq = q as u32;
        let add: Vec<Vec<u32>> = (0..qq).map(|a| (0..qq).map(|b| t.add(a, b)).collect()).collect();
        let mul: Vec<Vec<u32>> = (0..qq).map(|a| (0..qq).map(|b| t.mul(a, b)).collect()).collect();
        body["elements"] = json!(f.elements().iter().map(|x| x.to_string()).collect::<Vec<_>>());
        body["add"] = json!(add);
        body["mul"] = json!(mul);
    }
    Ok(Outcome { body, success: true })
}

fn poly_string(coeffs: &[u32]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// ER_q, read from the cache directory when one is configured.
fn load_er(q: u64) -> Result<Graph> {
    let cache = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    let expected = (q * q + q + 1) as usize;
    if let Some(dir) = &cache {
        let path = dir.join(format!("er_{q}.g6"));
        if let Ok(bytes) = fs::read(&path) {
            if let Ok(g) = g6_decode(&bytes) {
                if g.order() == expected {
                    return Ok(g);
                }
            }
        }
    }
    let (g, _) = c4book::polarity_graph(q).map_err(|e| match e {
        c4book::Error::NotPrimePower(_) => input_err(e.to_string()),
        other => anyhow!(other),
    })?;
    if let Some(dir) = &cache {
        fs::create_dir_all(dir).ok();
        fs::write(dir.join(format!("er_{q}.g6")), g6_encode(&g) + "\n").ok();
    }
    Ok(g)
}

fn er(q: u64, out: Option<&Path>, stats: bool, run: &mut Run) -> Result<Outcome> {
    let g = load_er(q)?;
    let g6 = g6_encode(&g);
    let mut body = json!({
        "q": q,
        "order": g.order(),
        "edges": g.edge_count(),
        "c4_free": is_c4_free(&g).c4_free,
        "absolute_points": (0..g.order()).filter(|&v| g.degree(v) as u64 == q).count(),
        "graph_sha256": sha256_hex(g6.as_bytes()),
    });
    if stats {
        let profile = g.degree_profile();
        let histogram: serde_json::Map<String, Value> =
            profile.histogram().into_iter().map(|(d, c)| (d.to_string(), json!(c))).collect();
        body["min_degree"] = json!(profile.min);
        body["max_degree"] = json!(profile.max);
        body["degree_histogram"] = Value::Object(histogram);
    }
    match out {
        Some(path) => run.write(path, &(g6 + "\n"))?,
        None => {
            body["graph6"] = json!(g6);
            run.artifact = true;
        }
    }
    Ok(Outcome { body, success: true })
}

fn verify(g: &Graph, k: usize, n: usize, jobs: usize) -> Result<Outcome> {
    if k == 0 || n == 0 {
        return Err(input_err("--k and --n must be positive"));
    }
    let c4 = is_c4_free(g);
    let mut body = json!({ "order": g.order(), "k": k, "n": n, "c4_free": c4.c4_free });
    if let Some(w) = c4.witness {
        body["verified"] = json!(false);
        body["reason"] = json!("graph contains a 4-cycle");
        body["c4_witness"] = json!(w);
        return Ok(Outcome { body, success: false });
    }
    let book = if k <= g.order() { Some(complement_book_number_par(g, k, jobs)?) } else { None };
    let nmax = book.as_ref().map_or(0, |b| b.nmax);
    let verified = nmax < n;
    debug_assert_eq!(verified, is_ramsey_witness(g, k, n));
    body["complement_book_number"] = json!(nmax);
    body["verified"] = json!(verified);
    if verified {
        body["implied_bound"] = json!(format!("r(C4, B_{n}^({k})) >= {}", g.order() + 1));
        body["certificate"] = serde_json::to_value(certify_lower_bound(g, k, "verified witness")?)?;
        body["graph6"] = json!(g6_encode(g));
    } else if let Some(b) = book {
        body["reason"] = json!(format!("complement contains B_{}^({k})", b.nmax));
        body["book_witness"] = serde_json::to_value(b.witness)?;
    }
    Ok(Outcome { body, success: verified })
}

fn bounds(
    n: Option<u64>,
    k: Option<u32>,
    q: Option<i64>,
    t: Option<i64>,
    eps: &str,
    table: Option<&[String]>,
) -> Result<Outcome> {
    let bad = |e: c4book::BoundsError| input_err(e.to_string());
    if let Some(args) = table {
        let parse = |s: &String, what: &str| s.parse::<u64>().map_err(|_| input_err(format!("{what} must be an integer, got {s}")));
        let (qmin, qmax, k) = (parse(&args[0], "QMIN")?, parse(&args[1], "QMAX")?, parse(&args[2], "K")?);
        let eps = parse_rational(&args[3]).map_err(bad)?;
        let rows = predicted_table(qmin, qmax, k as u32, &eps).map_err(bad)?;
        return Ok(Outcome { body: json!({ "k": k, "eps": eps.to_string(), "rows": rows }), success: true });
    }
    let (n, k) = (n.expect("clap enforces --n"), k.expect("clap enforces --k"));
    if n == 0 || k == 0 {
        return Err(input_err("--n and --k must be positive"));
    }
    let mut body = serde_json::to_value(bound_report(n, k).map_err(bad)?)?;
    if let (Some(q), Some(t)) = (q, t) {
        let eps = parse_rational(eps).map_err(bad)?;
        body["params"] = serde_json::to_value(bounds_params(k, q, t, &eps).map_err(bad)?)?;
        body["admissibility"] = serde_json::to_value(theorem15_admissible(k, q as u64, t, &eps).map_err(bad)?)?;
    }
    Ok(Outcome { body, success: true })
}

fn er_subgraph(
    q: u64,
    order: usize,
    min_deg: usize,
    budget: u64,
    k: usize,
    out: Option<&Path>,
    run: &mut Run,
) -> Result<Outcome> {
    let g = load_er(q)?;
    if order > g.order() {
        return Err(input_err(format!("--order {order} exceeds |ER_{q}| = {}", g.order())));
    }
    let base = json!({ "q": q, "order": order, "min_deg": min_deg, "budget": budget });
    let s = match greedy_min_degree_subgraph(&g, order, min_deg, budget) {
        Ok(Some(s)) => s,
        Ok(None) => {
            let mut body = base;
            body["found"] = json!(false);
            body["status"] = json!("no such induced subgraph exists (search complete)");
            return Ok(Outcome { body, success: false });
        }
        Err(SearchError::BudgetExhausted { .. }) => {
            let mut body = base;
            body["found"] = json!(false);
            body["status"] = json!("budget exhausted; existence undecided");
            return Ok(Outcome { body, success: false });
        }
        Err(e) => return Err(e.into()),
    };
    let deleted: Vec<usize> = (0..g.order()).filter(|v| s.binary_search(v).is_err()).collect();
    let h = g.induced_subgraph(&s)?;
    let note = format!("induced subgraph of ER_{q}, deleted vertices {deleted:?}");
    let cert = certify_lower_bound(&h, k, &note)?;
    let mut body = base;
    body["found"] = json!(true);
    body["deleted"] = json!(deleted);
    body["certificate"] = serde_json::to_value(&cert)?;
    if let Some(path) = out {
        run.write(path, &(cert.graph6.clone() + "\n"))?;
    }
    Ok(Outcome { body, success: true })
}

fn random_delete(
    n: u64,
    k: u64,
    seed: u64,
    overrides: &DeletionOverrides,
    out: Option<&Path>,
    run: &mut Run,
) -> Result<Outcome> {
    match random_delete_construction(n, k, seed, overrides) {
        Ok((_, record, cert)) => {
            if let Some(path) = out {
                run.write(path, &(cert.graph6.clone() + "\n"))?;
            }
            Ok(Outcome { body: json!({ "found": true, "run": record, "certificate": cert }), success: true })
        }
        Err(e @ SearchError::AsymptoticRegimeNotReached { m, min_n }) => Ok(Outcome {
            body: json!({ "found": false, "status": "asymptotic_regime_not_reached", "m": m, "min_n": min_n, "message": e.to_string() }),
            success: false,
        }),
        Err(e @ SearchError::AttemptsExhausted { .. }) => Ok(Outcome {
            body: json!({ "found": false, "status": "attempts_exhausted", "message": e.to_string() }),
            success: false,
        }),
        Err(SearchError::Domain(msg)) => Err(input_err(msg)),
        Err(e) => Err(e.into()),
    }
}

fn exact(order: usize, k: usize, n: usize, jobs: usize, prune: bool) -> Result<Outcome> {
    match search_exact(order, k, n, jobs, prune) {
        Ok(ExactOutcome::Witness(g)) => {
            let cert = certify_lower_bound(&g, k, "exhaustive search witness")?;
            Ok(Outcome {
                body: json!({
                    "result": "witness",
                    "N": order, "k": k, "n": n,
                    "graph6": g6_encode(&g),
                    "implied_bound": format!("r(C4, B_{n}^({k})) >= {}", order + 1),
                    "certificate": cert,
                }),
                success: true,
            })
        }
        Ok(ExactOutcome::Exhausted(proof)) => {
            let mut body = json!({ "result": "exhausted", "implied_bound": format!("r(C4, B_{n}^({k})) <= {order}") });
            body["proof"] = serde_json::to_value(proof)?;
            Ok(Outcome { body, success: false })
        }
        Err(e @ (SearchError::CapExceeded { .. } | SearchError::Domain(_))) => Err(input_err(e.to_string())),
        Err(e) => Err(e.into()),
    }
}

fn gq(q: u64, budget: u64, seed: u64) -> Result<Outcome> {
    if !(2..=7).contains(&q) {
        bail!(InputError(format!("--q must be a prime power between 2 and 7, got {q}")));
    }
    let cfg = ProbeConfig { budget, seed, ..Default::default() };
    let target = json!({ "q": q, "N": q * q + q + 3, "n": q * q - q + 1, "k": 2, "budget": budget, "seed": seed });
    match probe_gq(q, &cfg) {
        Ok(g) => {
            let mut body = target;
            body["found"] = json!(true);
            body["graph6"] = json!(g6_encode(&g));
            Ok(Outcome { body, success: true })
        }
        Err(SearchError::BudgetExhausted { .. }) => {
            let mut body = target;
            body["found"] = json!(false);
            body["status"] = json!("no witness found within budget; nothing is claimed about existence");
            Ok(Outcome { body, success: false })
        }
        Err(SearchError::Domain(msg)) => Err(input_err(msg)),
        Err(e) => Err(e.into()),
    }
}
