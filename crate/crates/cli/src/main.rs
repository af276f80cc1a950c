use clap::{Parser, Subcommand, ValueEnum};
use dihedral_core::diagram::Diagram;
use dihedral_core::family::{FamilyConfig, Parity};
use dihedral_core::rewrite::rewrite_syntactic;
use dihedral_core::semantic::normal_form_semantic;
use dihedral_core::translate::{phi_inverse, phi_translate, psi_translate, tower_address};
use dihedral_core::verify::{run_suite, SUITES};
use dihedral_core::word::{nadir, terminus, total_nadirs};
use dihedral_core::{AlgebraElement, Error, GrothVector, SimpleModule, Word};
use serde_json::{json, Value};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "dihedral", version, about = "Induction and restriction for dihedral groups")]
struct Cli {
    /// Primes of the family, comma separated
    #[arg(long, global = true, value_delimiter = ',')]
    primes: Option<Vec<u32>>,
    /// Seed levels of the family, comma separated
    #[arg(long, global = true, value_delimiter = ',', default_value = "1,7")]
    seeds: Vec<u64>,
    #[arg(long, global = true, value_enum, default_value_t = ParityArg::Odd)]
    parity: ParityArg,
    /// Fixed exponent cap D (test sets use levels up to p^(D+1))
    #[arg(long, global = true)]
    depth: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Odd,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Semantic,
    Syntactic,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Apply an element to a module (a simple or a sum of simples)
    Act { expr: String, module: String },
    /// Normal form of an element
    Normalform {
        expr: String,
        #[arg(long, value_enum, default_value_t = Method::Syntactic)]
        method: Method,
    },
    /// Induction/restriction diagram of the family up to level N
    Diagram { n_max: u64 },
    /// Run verification suites (all when none are named)
    Verify { suites: Vec<String> },
    /// Termini, nadirs and total nadirs of a word
    Nadir { word: String },
    /// Translation maps along a prime tower
    Translate {
        #[command(subcommand)]
        op: TranslateOp,
    },
}

#[derive(Subcommand)]
enum TranslateOp {
    /// Lift a vector J levels up the tower over BASE
    Phi {
        #[arg(long)]
        prime: u32,
        #[arg(long)]
        base: u64,
        #[arg(long)]
        steps: u32,
        vector: String,
    },
    /// Preimage under the lift
    PhiInv {
        #[arg(long)]
        prime: u32,
        #[arg(long)]
        base: u64,
        #[arg(long)]
        steps: u32,
        vector: String,
    },
    /// Move a module over W(k;base) to the same address over W(k2;base*p^J)
    Psi {
        #[arg(long)]
        prime: u32,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        base: u64,
        #[arg(long)]
        k2: i64,
        #[arg(long)]
        steps: u32,
        module: String,
    },
    /// Bottom of the tower below a module and the branch indices above it
    Address {
        #[arg(long)]
        prime: u32,
        module: String,
    },
}

enum Failure {
    /// A verification did not pass.
    Check(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::NormalForm(_) | Error::Linear(_) | Error::Oracle(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn input(arg: &str) -> Result<String, Failure> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(s.trim().to_string())
}

fn parse<T: std::str::FromStr<Err = Error>>(arg: &str) -> Result<T, Failure> {
    Ok(input(arg)?.parse::<T>()?)
}

fn config(cli: &Cli, fallback_primes: &[u32]) -> Result<FamilyConfig, Failure> {
    let primes = cli.primes.clone().unwrap_or_else(|| fallback_primes.to_vec());
    let parity = match cli.parity {
        ParityArg::Odd => Parity::OddOnly,
        ParityArg::All => Parity::All,
    };
    Ok(FamilyConfig::new(&primes, &cli.seeds, parity)?.with_depth(cli.depth))
}

fn vector_json(v: &GrothVector) -> Value {
    json!({
        "text": v.to_string(),
        "terms": v.iter().map(|(m, c)| json!({"module": m.to_string(), "coeff": c.to_string()})).collect::<Vec<_>>(),
    })
}

/// Returns the rendered output and whether every check passed.
fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let json = cli.format == Format::Json;
    let render = |text: String, value: Value| if json { format!("{value:#}\n") } else { text + "\n" };
    match &cli.cmd {
        Cmd::Act { expr, module } => {
            let z: AlgebraElement = parse(expr)?;
            let v: GrothVector = parse(module)?;
            let out = dihedral_core::branching::apply_element(&z, &v);
            Ok((render(out.to_string(), vector_json(&out)), true))
        }
        Cmd::Normalform { expr, method } => {
            let z: AlgebraElement = parse(expr)?;
            let cfg = config(cli, &[3, 5])?;
            let nf = match method {
                Method::Syntactic => rewrite_syntactic(&z, &cfg)?,
                Method::Semantic => normal_form_semantic(&z, &cfg)?,
                Method::Both => {
                    let (a, b) = (rewrite_syntactic(&z, &cfg)?, normal_form_semantic(&z, &cfg)?);
                    if a != b {
                        return Err(Failure::Check(format!("rewriting gives {a}, solving gives {b}")));
                    }
                    a
                }
            };
            Ok((render(nf.to_string(), nf.to_json()), true))
        }
        Cmd::Diagram { n_max } => {
            let cfg = config(cli, &[3])?;
            let d = Diagram::build(&cfg, *n_max);
            let text = match cli.format {
                Format::Dot => d.to_dot(),
                Format::Json => format!("{:#}\n", d.to_json()),
                Format::Text => {
                    let mut s = String::new();
                    for &(i, j, p) in &d.edges {
                        s += &format!("{} -{p}- {}\n", d.vertices[i], d.vertices[j]);
                    }
                    s + &format!(
                        "{} vertices, {} edges, {} components\n",
                        d.vertices.len(),
                        d.edges.len(),
                        d.component_count()
                    )
                }
            };
            Ok((text, true))
        }
        Cmd::Verify { suites } => {
            let cfg = config(cli, &[3, 5])?;
            let names: Vec<String> =
                if suites.is_empty() { SUITES.iter().map(|s| s.to_string()).collect() } else { suites.clone() };
            let mut reports = Vec::new();
            for name in &names {
                reports.push(run_suite(name, &cfg)?);
            }
            let ok = reports.iter().all(|r| r.passed);
            let mut text = String::new();
            for r in &reports {
                for c in &r.checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    text += &format!("{status} {}: {} ({})\n", r.suite, c.name, c.count);
                    if let Some(x) = &c.counterexample {
                        text += &format!("     {x}\n");
                    }
                }
            }
            let value = serde_json::to_value(&reports).expect("reports serialize");
            Ok((if json { format!("{value:#}\n") } else { text }, ok))
        }
        Cmd::Nadir { word } => {
            let w: Word = parse(word)?;
            let primes = cli.primes.clone().unwrap_or_else(|| w.primes());
            let mut text = String::new();
            let mut per_prime = Vec::new();
            for &p in &primes {
                let (d, at) = nadir(&w, p);
                let e = terminus(&w, p);
                text += &format!("p={p}: terminus {e}, nadir {d} at suffix lengths {at:?}\n");
                per_prime.push(json!({"prime": p, "terminus": e, "nadir": d, "nadir_suffix_lengths": at}));
            }
            let tn = total_nadirs(&w, &primes);
            text += &format!("total nadir: {} {tn:?}", !tn.is_empty());
            let value = json!({"word": w.to_string(), "primes": per_prime, "total_nadir": !tn.is_empty(), "total_nadir_suffix_lengths": tn});
            Ok((render(text, value), true))
        }
        Cmd::Translate { op } => {
            let (text, value) = match op {
                TranslateOp::Phi { prime, base, steps, vector } => {
                    let v = phi_translate(*prime, *base, *steps, &parse(vector)?)?;
                    (v.to_string(), vector_json(&v))
                }
                TranslateOp::PhiInv { prime, base, steps, vector } => {
                    let v = phi_inverse(*prime, *base, *steps, &parse(vector)?)?;
                    (v.to_string(), vector_json(&v))
                }
                TranslateOp::Psi { prime, k, base, k2, steps, module } => {
                    let m = psi_translate(*prime, *k, *base, *k2, *steps, parse::<SimpleModule>(module)?)?;
                    (m.to_string(), json!({"module": m.to_string()}))
                }
                TranslateOp::Address { prime, module } => {
                    let (b, addr) = tower_address(*prime, parse(module)?)?;
                    (format!("{b} {addr:?}"), json!({"base": b.to_string(), "address": addr}))
                }
            };
            Ok((render(text, value), true))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, code) = match run(&cli) {
        Ok((out, ok)) => (out, if ok { 0 } else { 1 }),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, out) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{out}"),
    }
    ExitCode::from(code)
}
