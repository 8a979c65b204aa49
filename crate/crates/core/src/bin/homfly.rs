use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use homfly::braid::{parse_braid, BraidWord};
use homfly::checks::{
    check_bijections, check_conventions, check_markov, check_mirror, check_skein, run_selftest, Evaluator, Failure,
    SelftestConfig,
};
use homfly::report::{batch_entry, build_report, render_text, ReportError, Status};
use homfly::Method;

#[derive(Parser)]
#[command(name = "homfly", version, about = "Exact HOMFLY polynomials of closed braids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Descending,
    Ascending,
    Jaeger,
    JaegerDual,
    All,
}

impl MethodArg {
    fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::Descending => vec![Method::Descending],
            MethodArg::Ascending => vec![Method::Ascending],
            MethodArg::Jaeger => vec![Method::Jaeger],
            MethodArg::JaegerDual => vec![Method::JaegerDual],
            MethodArg::All => Method::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MovesArg {
    Markov,
    Mirror,
    Skein,
    Bijection,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the HOMFLY polynomial of a closed braid.
    Compute {
        /// Braid word, e.g. "1 -2 1 -2" (k is σ_k, -k its inverse).
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long, value_enum, default_value = "descending")]
        method: MethodArg,
        #[arg(long)]
        json: bool,
    },
    /// Permutation, gap profile, classification, MFW bounds, braid index and
    /// Alexander polynomial.
    Analyze {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check invariance properties on one word.
    Verify {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long, value_enum, default_value = "all")]
        moves: MovesArg,
        /// Markov variants to draw.
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// One report per braid line of FILE, in input order.
    Batch {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: Option<u64>,
        #[arg(long, value_enum, default_value = "descending")]
        method: MethodArg,
        #[arg(long)]
        json: bool,
    },
    /// Run every property suite on a seeded random corpus.
    Selftest {
        #[arg(long, default_value_t = 8)]
        max_crossings: usize,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        max_strands: u64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, hide = true)]
        corrupt: bool,
    },
}

fn exit(status: Status) -> ExitCode {
    ExitCode::from(status.exit_code() as u8)
}

fn parse_word(text: &str, strands: Option<usize>) -> Result<BraidWord, ExitCode> {
    parse_braid(text, strands).map_err(|e| {
        eprintln!("error: {e}");
        exit(Status::InputError)
    })
}

fn report_error(e: &ReportError) -> ExitCode {
    eprintln!("error: {e}");
    if let ReportError::Mismatch { word, .. } = e {
        let (n, w) = word.split_once(';').unwrap_or(("", word));
        eprintln!("reproduce: homfly compute \"{w}\" --strands {n} --method all");
    }
    exit(Status::VerificationFailure)
}

fn compute(word: &str, strands: Option<usize>, method: MethodArg, json: bool) -> ExitCode {
    let word = match parse_word(word, strands) {
        Ok(w) => w,
        Err(code) => return code,
    };
    match build_report(&word, &method.methods(), true) {
        Ok(r) if json => {
            println!("{}", serde_json::to_string(&r).expect("report serializes"));
            exit(Status::Ok)
        }
        Ok(r) => {
            println!("{}", r.polynomial());
            exit(Status::Ok)
        }
        Err(e) => report_error(&e),
    }
}

fn analyze(word: &str, strands: Option<usize>, json: bool) -> ExitCode {
    let word = match parse_word(word, strands) {
        Ok(w) => w,
        Err(code) => return code,
    };
    match build_report(&word, &[Method::Descending], true) {
        Ok(r) if json => {
            println!("{}", serde_json::to_string(&r).expect("report serializes"));
            exit(Status::Ok)
        }
        Ok(r) => {
            print!("{}", render_text(&r));
            exit(Status::Ok)
        }
        Err(e) => report_error(&e),
    }
}

fn verify(word: &str, strands: Option<usize>, moves: MovesArg, samples: u64, seed: u64, corrupt: bool) -> ExitCode {
    let word = match parse_word(word, strands) {
        Ok(w) => w,
        Err(code) => return code,
    };
    let ev = if corrupt { Evaluator::corrupted() } else { Evaluator::honest() };
    let all = moves == MovesArg::All;
    let mut results: Vec<(&str, Result<usize, Failure>)> = Vec::new();
    if all || moves == MovesArg::Markov {
        results.push(("markov", check_markov(&ev, &word, seed, samples as usize)));
    }
    if all || moves == MovesArg::Mirror {
        results.push(("mirror", check_mirror(&ev, &word)));
    }
    if all || moves == MovesArg::Skein {
        results.push(("skein", check_skein(&ev, &word)));
    }
    if all || moves == MovesArg::Bijection {
        results.push(("bijection", check_bijections(&word)));
    }
    let mut status = Status::Ok;
    for (name, r) in results {
        match r {
            Ok(k) => println!("{name}: pass ({k} checked)"),
            Err(f) => {
                println!("{name}: FAIL {}", f.detail);
                println!("reproducer: {}", f.reproducer);
                status = Status::VerificationFailure;
            }
        }
    }
    exit(status)
}

fn batch(file: &PathBuf, jobs: Option<u64>, method: MethodArg, json: bool) -> ExitCode {
    let text = match fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return exit(Status::InputError);
        }
    };
    let methods = method.methods();
    let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
    let work = || -> Vec<_> { lines.par_iter().filter_map(|&(n, l)| batch_entry(n, l, &methods)).collect() };
    let entries = match jobs {
        None => work(),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j as usize).build() {
            Ok(pool) => pool.install(work),
            Err(e) => {
                eprintln!("error: cannot start {j} workers: {e}");
                return exit(Status::InputError);
            }
        },
    };
    let mut worst = Status::Ok;
    for e in &entries {
        worst = worst.max(e.status);
        if json {
            println!("{}", serde_json::to_string(e).expect("entry serializes"));
        } else {
            match (&e.report, &e.error) {
                (Some(r), _) => println!("{}: {}", e.line, r.polynomial()),
                (None, Some(msg)) => println!("{}: error: {msg}", e.line),
                (None, None) => unreachable!("entries carry a report or an error"),
            }
        }
    }
    exit(worst)
}

fn selftest(cfg: SelftestConfig, corrupt: bool) -> ExitCode {
    let ev = if corrupt { Evaluator::corrupted() } else { Evaluator::honest() };
    let summary = run_selftest(&cfg, &ev);
    println!(
        "corpus: {} words ({} exhaustive up to {} strands / {} crossings, {} random), {} alternating, seed {}",
        summary.corpus,
        summary.corpus - cfg.samples,
        cfg.max_strands.min(3),
        cfg.max_crossings.min(6),
        cfg.samples,
        summary.alternating,
        cfg.seed
    );
    for s in &summary.suites {
        let verdict = if s.passed() { "pass".to_string() } else { format!("FAIL ({})", s.failures.len()) };
        println!("{:<22} {:>6} cases {:>9} checks  {:<10} {:>8.2?}", s.name, s.cases, s.checks, verdict, s.elapsed);
        for f in s.failures.iter().take(3) {
            println!("  {f}");
        }
    }
    println!("total: {:.2?}", summary.elapsed);
    exit(if summary.passed() { Status::Ok } else { Status::VerificationFailure })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = check_conventions() {
        eprintln!("internal error: crossing convention self-check failed: {e}");
        return exit(Status::VerificationFailure);
    }
    match cli.command {
        Command::Compute { word, strands, method, json } => compute(&word, strands, method, json),
        Command::Analyze { word, strands, json } => analyze(&word, strands, json),
        Command::Verify { word, strands, moves, samples, seed, corrupt } => {
            verify(&word, strands, moves, samples, seed, corrupt)
        }
        Command::Batch { file, jobs, method, json } => batch(&file, jobs, method, json),
        Command::Selftest { max_crossings, max_strands, samples, seed, corrupt } => selftest(
            SelftestConfig { max_crossings, max_strands: max_strands as usize, samples, seed, ..Default::default() },
            corrupt,
        ),
    }
}
