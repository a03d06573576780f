//! `jacklab`: expand Jack polynomials, print binomial-basis Schur
//! coefficient tables, and run the verification registry.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage or resource errors,
//! 3 internal inconsistency (an exact-arithmetic self-check failed, which
//! indicates a bug, never bad input).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use jacklab_core::error::Error;
use jacklab_core::jack;
use jacklab_core::partition::Partition;
use jacklab_core::rook::{all_boards, FerrersBoard};
use jacklab_core::symfunc::{symfun_to_qsym, Basis};
use jacklab_core::tableau::{enumerate_syt, qyt_count, qyt_list};
use jacklab_core::verify::{self, CheckReport, Verdict, REGISTRY};

#[derive(Parser)]
#[command(name = "jacklab", version, about = "Exact Jack polynomial expansions and identity verification")]
struct Cli {
    /// Directory for the Jack expansion cache (falls back to $JACKLAB_CACHE).
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the expansion of J_μ (or J̃_μ) in a basis.
    Expand(ExpandArgs),
    /// Print the Schur coefficient ⟨J̃_μ, s_λ⟩ or its a/b coefficient table.
    Coeff(CoeffArgs),
    /// Run one verification check, or all of them.
    Verify(VerifyArgs),
    /// Count (and list) combinatorial objects.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct ExpandArgs {
    /// Partition μ, comma-separated parts (e.g. 3,1).
    #[arg(long)]
    mu: String,
    /// Target basis: m, s, or qsym.
    #[arg(long)]
    basis: String,
    /// Expand the tilde form J̃_μ = α^n J_μ^(1/α) instead of J_μ.
    #[arg(long)]
    tilde: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CoeffArgs {
    #[arg(long)]
    mu: String,
    #[arg(long)]
    lambda: String,
    /// a (shifted binomial), b (falling factorial), or poly (raw in α).
    #[arg(long)]
    basis: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check id from the registry, or "all".
    check: String,
    /// Degree; per-check default when omitted ("all" clamps to each bound).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
    /// Override a check's resource bound.
    #[arg(long)]
    force: bool,
    /// List the registry and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// What to enumerate: qyt, syt, or boards.
    kind: String,
    /// Shape for qyt/syt, comma-separated parts.
    #[arg(long)]
    shape: Option<String>,
    /// Exact maximum entry for qyt (all m when omitted).
    #[arg(long)]
    max: Option<u32>,
    /// Grid size for boards.
    #[arg(long)]
    size: Option<usize>,
    /// Print the objects, not just the count.
    #[arg(long)]
    list: bool,
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    let parts: Result<Vec<u32>, _> = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<u32>())
        .collect();
    let parts = parts.map_err(|e| Error::Domain(format!("bad partition {s:?}: {e}")))?;
    Partition::new(parts)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => 3,
        _ => 2,
    }
}

fn main() {
    let cli = Cli::parse();
    let cache = cli.cache.clone().or_else(jack::cache_dir_from_env);
    jack::set_cache_dir(cache);
    let code = match cli.command {
        Command::Expand(args) => run_expand(&args),
        Command::Coeff(args) => run_coeff(&args),
        Command::Verify(args) => run_verify(&args),
        Command::Enumerate(args) => run_enumerate(&args),
    };
    match code {
        Ok(c) => std::process::exit(c),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}

fn run_expand(args: &ExpandArgs) -> Result<i32, Error> {
    let mu = parse_partition(&args.mu)?;
    let expansion = if args.tilde { jack::jack_tilde(&mu)? } else { jack::jack_j(&mu)? };
    match args.basis.as_str() {
        "m" | "s" => {
            let f = expansion.to_symfun().convert(Basis::parse(&args.basis)?);
            if args.json {
                println!("{}", serde_json::to_string_pretty(&f)?);
            } else {
                let mut terms: Vec<_> = f.terms().collect();
                terms.reverse(); // dominance-largest first
                for (la, c) in terms {
                    println!("({c})·{}_{la}", args.basis);
                }
            }
        }
        "qsym" => {
            let q = symfun_to_qsym(&expansion.to_symfun());
            if args.json {
                println!("{}", serde_json::to_string_pretty(&q)?);
            } else {
                for (des, c) in q.terms() {
                    println!("({c})·Q_{des}");
                }
            }
        }
        other => {
            return Err(Error::Domain(format!(
                "expand basis must be m, s, or qsym, got {other:?}"
            )))
        }
    }
    Ok(0)
}

fn run_coeff(args: &CoeffArgs) -> Result<i32, Error> {
    let mu = parse_partition(&args.mu)?;
    let lambda = parse_partition(&args.lambda)?;
    match args.basis.as_str() {
        "a" | "b" => {
            let coeffs = if args.basis == "a" {
                jack::a_coeffs(&mu, &lambda)?
            } else {
                jack::b_coeffs(&mu, &lambda)?
            };
            let strings: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "mu": mu, "lambda": lambda, "basis": args.basis, "coeffs": strings,
                    }))?
                );
            } else {
                println!("{}", strings.join(", "));
            }
        }
        "poly" => {
            let p = jack::schur_coeff(&mu, &lambda)?;
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "mu": mu, "lambda": lambda, "basis": "poly", "coeffs": p,
                    }))?
                );
            } else {
                println!("{p}");
            }
        }
        other => {
            return Err(Error::Domain(format!(
                "coeff basis must be a, b, or poly, got {other:?}"
            )))
        }
    }
    Ok(0)
}

fn print_human(report: &CheckReport) {
    let status = if report.passed { "PASS" } else { "FAIL" };
    println!(
        "{:<16} n={:<2} {}  ({} cases, {} ms)",
        report.check,
        report.n,
        status,
        report.cases.len(),
        report.elapsed_ms
    );
    if let Some(w) = &report.witness {
        println!("  witness: {w}");
    }
}

fn print_csv(reports: &[CheckReport]) {
    println!("check,n,case,verdict,witness");
    for r in reports {
        for c in &r.cases {
            let verdict = match c.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
                Verdict::Report => "report",
            };
            let witness = c
                .witness
                .as_ref()
                .map(|w| w.to_string().replace('"', "\"\""))
                .unwrap_or_default();
            println!("{},{},\"{}\",{},\"{}\"", r.check, r.n, c.inputs, verdict, witness);
        }
    }
}

fn run_verify(args: &VerifyArgs) -> Result<i32, Error> {
    if args.list {
        for spec in REGISTRY {
            println!("{:<16} default n={} max n={}  {}", spec.id, spec.default_n, spec.max_n, spec.summary);
        }
        return Ok(0);
    }
    let mut reports = Vec::new();
    if args.check == "all" {
        for spec in REGISTRY {
            let n = args
                .n
                .map(|n| if args.force { n } else { n.min(spec.max_n) })
                .unwrap_or(spec.default_n);
            reports.push(verify::run_check_forced(spec.id, n, args.force)?);
        }
    } else {
        let spec = verify::find_check(&args.check)
            .ok_or_else(|| Error::UnknownCheck(args.check.clone()))?;
        let n = args.n.unwrap_or(spec.default_n);
        reports.push(verify::run_check_forced(spec.id, n, args.force)?);
    }
    if args.json {
        println!("{}", serde_json::to_string_pretty(&reports)?);
    } else if args.csv {
        print_csv(&reports);
    } else {
        for r in &reports {
            print_human(r);
        }
    }
    Ok(if reports.iter().all(|r| r.passed) { 0 } else { 1 })
}

fn run_enumerate(args: &EnumerateArgs) -> Result<i32, Error> {
    match args.kind.as_str() {
        "qyt" => {
            let shape = parse_partition(
                args.shape
                    .as_deref()
                    .ok_or_else(|| Error::Domain("enumerate qyt needs --shape".into()))?,
            )?;
            match args.max {
                Some(m) => {
                    if args.list {
                        for t in qyt_list(&shape, m) {
                            println!("{t}");
                        }
                    }
                    println!("{}", qyt_count(&shape, m));
                }
                None => {
                    let n = shape.size() as u32;
                    for m in 1..=n {
                        println!("QYT_{{={m}}}{shape} = {}", qyt_count(&shape, m));
                    }
                }
            }
        }
        "syt" => {
            let shape = parse_partition(
                args.shape
                    .as_deref()
                    .ok_or_else(|| Error::Domain("enumerate syt needs --shape".into()))?,
            )?;
            let tableaux = enumerate_syt(&shape);
            if args.list {
                for t in &tableaux {
                    println!("{t}");
                }
            }
            println!("{}", tableaux.len());
        }
        "boards" => {
            let size = args
                .size
                .ok_or_else(|| Error::Domain("enumerate boards needs --size".into()))?;
            let boards: Vec<FerrersBoard> = all_boards(size);
            if args.list {
                for b in &boards {
                    println!("{}", serde_json::to_string(b)?);
                }
            }
            println!("{}", boards.len());
        }
        other => {
            return Err(Error::Domain(format!(
                "enumerate kind must be qyt, syt, or boards, got {other:?}"
            )))
        }
    }
    Ok(0)
}
