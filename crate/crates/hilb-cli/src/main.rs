//! `hilb`: command-line front end for the exact quantum-multiplication
//! engine.
//!
//! Three subcommands: `matrix` prints a closed-form divisor-multiplication
//! matrix, `verify` runs one of the named verification suites, and
//! `two-point` evaluates `<mu| Theta |nu>` with the punctual and non-punctual
//! parts reported separately.  All output is deterministic (canonical term
//! ordering end-to-end); there is no configuration file, flags only.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid selector or
//! parse/grade mismatch, 3 internal assertion (a denominator survived the
//! Laurent reduction).

use clap::{Parser, Subcommand, ValueEnum};
use combinat::{MultiPartition, WeightedPartition};
use quantum::verify::{self, Budget, Report};
use quantum::{
    divisor_operator, latex_matrix, two_point, two_point_fixed, Divisor, HilbContext,
    QuantumError, TwoPointValue,
};
use std::process::ExitCode;
use std::str::FromStr;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "hilb", version, about = "Exact divisor operators on Hilb^m of the A_n surface")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Basis {
    Nakajima,
    Fixed,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact closed-form matrix of quantum multiplication by a
    /// divisor on the grade-m normalized Nakajima basis.
    Matrix {
        /// Number of points (grade); m = 0 gives the 1x1 zero matrix.
        #[arg(long)]
        m: u32,
        /// Surface parameter: Hilb on the A_n resolution.
        #[arg(long)]
        n: usize,
        /// Divisor selector: `D` or `omega:<i>` with 1 <= i <= n.
        #[arg(long)]
        divisor: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a named verification suite and print its report.
    Verify {
        /// Suite: golden-7.1, commute, fixedlemma3, factorization,
        /// degreescaling, punctual, residues, perturbation, omegavan.
        suite: String,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
        /// Interval endpoint (fixedlemma3 only).
        #[arg(long)]
        i: Option<usize>,
        /// Interval endpoint (fixedlemma3 only).
        #[arg(long)]
        j: Option<usize>,
        /// Time budget; configurations not reached are reported as declared
        /// skips, never silently truncated.
        #[arg(long)]
        max_seconds: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate the two-point value <mu| Theta |nu>, printing the punctual
    /// and non-punctual log coefficients separately (never summed).
    TwoPoint {
        /// Bra: a weighted partition like `2(w1).1(1)` (nakajima basis) or a
        /// multipartition like `[2,1|1]` (fixed basis).
        mu: String,
        /// Ket, same format and grade as the bra.
        nu: String,
        #[arg(long)]
        n: usize,
        /// Expected grade; checked against the inputs when given.
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, value_enum, default_value = "nakajima")]
        basis: Basis,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Matrix { m, n, divisor, format } => cmd_matrix(m, n, &divisor, format),
        Command::Verify { suite, m, n, i, j, max_seconds, format } => {
            cmd_verify(&suite, m, n, i, j, max_seconds, format)
        }
        Command::TwoPoint { mu, nu, n, m, basis, format } => {
            cmd_two_point(&mu, &nu, n, m, basis, format)
        }
    }
}

fn bad_input(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_BAD_INPUT)
}

fn internal(err: QuantumError) -> ExitCode {
    eprintln!("internal assertion: {err}");
    ExitCode::from(EXIT_INTERNAL)
}

// ------------------------------------------------------------------ matrix

fn parse_divisor(s: &str, n: usize) -> Result<Divisor, String> {
    if s == "D" {
        return Ok(Divisor::D);
    }
    if let Some(i) = s.strip_prefix("omega:") {
        let i: usize = i.parse().map_err(|e| format!("bad omega index {i:?}: {e}"))?;
        if i == 0 || i > n {
            return Err(format!("omega index {i} out of range 1..={n}"));
        }
        return Ok(Divisor::Omega(i));
    }
    Err(format!("unknown divisor selector {s:?}; expected `D` or `omega:<i>`"))
}

fn cmd_matrix(m: u32, n: usize, divisor: &str, format: Format) -> ExitCode {
    if n == 0 {
        return bad_input("n must be at least 1");
    }
    let divisor = match parse_divisor(divisor, n) {
        Ok(d) => d,
        Err(e) => return bad_input(&e),
    };
    let ctx = HilbContext::new(m, n);
    let op = match divisor_operator(&ctx, divisor) {
        Ok(op) => op,
        Err(e) => return internal(e),
    };
    match format {
        Format::Json => println!("{:#}", op.to_json()),
        Format::Latex => print!("{}", latex_matrix(&op.full_matrix())),
        Format::Text => {
            println!("basis: {}", op.basis.join("  "));
            for (i, row) in op.full_matrix().iter().enumerate() {
                for (j, entry) in row.iter().enumerate() {
                    println!("[{i}][{j}] = {entry}");
                }
            }
        }
    }
    ExitCode::SUCCESS
}

// ------------------------------------------------------------------ verify

fn run_suite(
    suite: &str,
    m: Option<u32>,
    n: Option<usize>,
    i: Option<usize>,
    j: Option<usize>,
    budget: &Budget,
) -> Result<Report, String> {
    let grid_n: Vec<usize> = match n {
        Some(n) if n >= 1 => vec![n],
        Some(_) => return Err("n must be at least 1".into()),
        None => vec![1, 2],
    };
    let mut rep = Report::default();
    match suite {
        "golden-7.1" => rep = verify::golden_71(),
        "commute" => {
            let grid: Vec<(u32, usize)> = match (m, n) {
                (Some(m), Some(n)) => vec![(m, n)],
                _ => vec![(2, 1), (3, 1), (4, 1), (2, 2), (3, 2)],
            };
            for (m, n) in grid {
                if budget.expired() {
                    rep.skip(format!("commutativity m={m} n={n}"), "time budget exhausted");
                    continue;
                }
                rep.absorb(&format!("m={m} n={n}"), verify::commute(m, n));
            }
        }
        "fixedlemma3" => {
            for n in grid_n {
                let ms: Vec<u32> = m.map(|m| vec![m]).unwrap_or_else(|| vec![2, 3, 4]);
                for m in ms {
                    let intervals: Vec<(usize, usize)> = match (i, j) {
                        (Some(i), Some(j)) => {
                            if !(1 <= i && i < j && j <= n + 1) {
                                return Err(format!(
                                    "interval [{i},{j}] invalid for n={n}: need 1 <= i < j <= n+1"
                                ));
                            }
                            vec![(i, j)]
                        }
                        (None, None) => (1..=n)
                            .flat_map(|i| (i + 1..=n + 1).map(move |j| (i, j)))
                            .collect(),
                        _ => return Err("fixedlemma3 needs both --i and --j or neither".into()),
                    };
                    for (i, j) in intervals {
                        if budget.expired() {
                            rep.skip(
                                format!("fixedlemma3 m={m} n={n} [{i},{j}]"),
                                "time budget exhausted",
                            );
                            continue;
                        }
                        rep.absorb("interval", verify::fixedlemma3(m, n, i, j));
                    }
                }
            }
        }
        "factorization" | "degreescaling" | "punctual" | "residues" | "omegavan" => {
            for n in grid_n {
                if budget.expired() {
                    rep.skip(format!("{suite} n={n}"), "time budget exhausted");
                    continue;
                }
                let sub = match suite {
                    "factorization" => verify::factorization(m.unwrap_or(3), n),
                    "degreescaling" => verify::degreescaling(m.unwrap_or(3), 3, n),
                    "punctual" => verify::punctual(m.unwrap_or(3), n),
                    "residues" => verify::residues(m.unwrap_or(3), n),
                    _ => verify::omegavan(m.unwrap_or(3), n),
                };
                rep.absorb(&format!("n={n}"), sub);
            }
        }
        "perturbation" => {
            if matches!(n, Some(n) if n != 1) {
                return Err("the perturbation suite is defined for n = 1 only".into());
            }
            rep = verify::perturbation(m.unwrap_or(3));
        }
        other => return Err(format!("unknown suite {other:?}")),
    }
    Ok(rep)
}

fn cmd_verify(
    suite: &str,
    m: Option<u32>,
    n: Option<usize>,
    i: Option<usize>,
    j: Option<usize>,
    max_seconds: Option<u64>,
    format: Format,
) -> ExitCode {
    let budget = Budget::from_max_seconds(max_seconds);
    let rep = match run_suite(suite, m, n, i, j, &budget) {
        Ok(rep) => rep,
        Err(e) => return bad_input(&e),
    };
    match format {
        Format::Json => println!("{:#}", rep.to_json()),
        _ => print!("{}", rep.render_text()),
    }
    if rep.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAILED)
    }
}

// --------------------------------------------------------------- two-point

fn render_two_point(v: &TwoPointValue) -> String {
    let mut out = String::new();
    out.push_str("punctual:\n");
    if v.punctual.iter().all(|(_, c)| c.is_zero()) {
        out.push_str("  0\n");
    }
    for (k, c) in &v.punctual {
        if !c.is_zero() {
            out.push_str(&format!("  ({c}) * log((1-(-q)^{k})/(1-(-q)))\n"));
        }
    }
    out.push_str("non-punctual:\n");
    if v.nonpunctual.iter().all(|(_, _, c)| c.is_zero()) {
        out.push_str("  0\n");
    }
    for (a, k, c) in &v.nonpunctual {
        if !c.is_zero() {
            let s: Vec<String> = (a.i..a.j).map(|l| format!("s{l}")).collect();
            out.push_str(&format!("  ({c}) * log(1-(-q)^{k}*{})\n", s.join("*")));
        }
    }
    out
}

fn cmd_two_point(
    mu: &str,
    nu: &str,
    n: usize,
    m: Option<u32>,
    basis: Basis,
    format: Format,
) -> ExitCode {
    if n == 0 {
        return bad_input("n must be at least 1");
    }
    let value = match basis {
        Basis::Nakajima => {
            let (mu, nu) = match (WeightedPartition::from_str(mu), WeightedPartition::from_str(nu))
            {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return bad_input(&e),
            };
            if mu.pairs().iter().any(|&(_, l)| l > n) || nu.pairs().iter().any(|&(_, l)| l > n) {
                return bad_input(&format!("label out of range for n={n}"));
            }
            if mu.size() != nu.size() {
                return bad_input(&format!("grade mismatch: |mu|={} |nu|={}", mu.size(), nu.size()));
            }
            if matches!(m, Some(m) if m != mu.size()) {
                return bad_input(&format!("grade mismatch: |mu|={} but --m given", mu.size()));
            }
            let ctx = HilbContext::new(mu.size(), n);
            match two_point(&ctx, &mu, &nu) {
                Ok(v) => v,
                Err(e) => return internal(e),
            }
        }
        Basis::Fixed => {
            let (mu, nu) = match (MultiPartition::from_str(mu), MultiPartition::from_str(nu)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return bad_input(&e),
            };
            if mu.slots() != n + 1 || nu.slots() != n + 1 {
                return bad_input(&format!(
                    "fixed-basis inputs need n+1 = {} components, got {} and {}",
                    n + 1,
                    mu.slots(),
                    nu.slots()
                ));
            }
            if mu.size() != nu.size() {
                return bad_input(&format!("grade mismatch: |mu|={} |nu|={}", mu.size(), nu.size()));
            }
            if matches!(m, Some(m) if m != mu.size()) {
                return bad_input(&format!("grade mismatch: |mu|={} but --m given", mu.size()));
            }
            let ctx = HilbContext::new(mu.size(), n);
            match two_point_fixed(&ctx, &mu, &nu) {
                Ok(v) => v,
                Err(e) => return internal(e),
            }
        }
    };
    match format {
        Format::Json => println!("{:#}", value.to_json()),
        _ => print!("{}", render_two_point(&value)),
    }
    ExitCode::SUCCESS
}
