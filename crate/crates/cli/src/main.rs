use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use speccover::covering::{all_coverings, find_covering};
use speccover::io::{
    emit_dimacs, emit_sdec, emit_trace, parse_dimacs, parse_sdec, parse_trace, random_instance,
};
use speccover::transform::{
    generate_trace, generate_trace_extended, replay, GenerateError, ReplayError, Trace,
};
use speccover::{convert, sat, BoolTuple, CnfMatrix};

/// Special decompositions, coverings and CNF rewriting.
#[derive(Parser)]
#[command(name = "speccover", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a DIMACS file into a decomposition file.
    Decompose {
        cnf: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Convert a decomposition file into a DIMACS file.
    Synthesize {
        sdec: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Search for covering tuples.
    Cover {
        sdec: PathBuf,
        /// Skip branches ruled out by forced subsets.
        #[arg(long)]
        prune: bool,
        /// Print every covering instead of the first.
        #[arg(long)]
        all: bool,
    },
    /// Search for satisfying assignments.
    Sat {
        cnf: PathBuf,
        #[arg(long)]
        all: bool,
    },
    /// Write a trace rewriting one function into another.
    Transform {
        f: PathBuf,
        h: PathBuf,
        #[arg(long, conflicts_with = "auto")]
        sigma: Option<BoolTuple>,
        /// Pick the first tuple satisfying both functions.
        #[arg(long)]
        auto: bool,
        /// Allow the target to be satisfied by a different tuple.
        #[arg(long, requires = "delta")]
        extended: bool,
        #[arg(long, requires = "extended")]
        delta: Option<BoolTuple>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Replay a trace and write the resulting function.
    Apply {
        f: PathBuf,
        trace: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Check that every step of a trace is admissible.
    VerifyTrace { f: PathBuf, trace: PathBuf },
    /// Sort the `.cnf` files of a directory by membership in the class of a tuple.
    Classes {
        dir: PathBuf,
        #[arg(long)]
        sigma: BoolTuple,
    },
    /// Draw a random function.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        satisfiable: bool,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

const FALSE: u8 = 1;
const INPUT: u8 = 2;
const INADMISSIBLE: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", describe(&e));
            ExitCode::from(exit_code(&e))
        }
    }
}

/// The error chain joined by `: `, skipping causes the previous message
/// already ends with.
fn describe(e: &anyhow::Error) -> String {
    let mut out = e.to_string();
    for cause in e.chain().skip(1) {
        let msg = cause.to_string();
        if !out.ends_with(&msg) {
            out.push_str(": ");
            out.push_str(&msg);
        }
    }
    out
}

fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if let Some(ReplayError::Inadmissible { .. }) = cause.downcast_ref() {
            return INADMISSIBLE;
        }
        if let Some(GenerateError::Inadmissible { .. }) = cause.downcast_ref() {
            return INADMISSIBLE;
        }
    }
    INPUT
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_cnf(path: &Path) -> Result<CnfMatrix> {
    parse_dimacs(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn read_trace(path: &Path) -> Result<Trace> {
    parse_trace(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn write(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Decompose { cnf, o } => {
            let f = read_cnf(&cnf)?;
            write(o.as_deref(), &emit_sdec(&convert::cnf_to_decomposition(&f)))?;
        }
        Command::Synthesize { sdec, o } => {
            let d = parse_sdec(&read(&sdec)?)
                .with_context(|| format!("parsing {}", sdec.display()))?;
            write(o.as_deref(), &emit_dimacs(&convert::decomposition_to_cnf(&d)))?;
        }
        Command::Cover { sdec, prune, all } => {
            let d = parse_sdec(&read(&sdec)?)
                .with_context(|| format!("parsing {}", sdec.display()))?;
            let found: Vec<_> = if all {
                all_coverings(&d, prune)
            } else {
                find_covering(&d, prune).into_iter().collect()
            };
            if found.is_empty() {
                println!("no covering");
                return Ok(FALSE);
            }
            for w in found {
                println!("{}", w.tuple());
            }
        }
        Command::Sat { cnf, all } => {
            let f = read_cnf(&cnf)?;
            let found = if all {
                sat::satisfying_assignments(&f)?
            } else {
                sat::first_satisfying(&f)?.into_iter().collect()
            };
            if found.is_empty() {
                println!("unsatisfiable");
                return Ok(FALSE);
            }
            for t in found {
                println!("{t}");
            }
        }
        Command::Transform {
            f,
            h,
            sigma,
            auto,
            extended,
            delta,
            o,
        } => {
            let f = read_cnf(&f)?;
            let h = read_cnf(&h)?;
            let sigma = match sigma {
                Some(s) => s,
                None if auto && extended => match sat::first_satisfying(&f)? {
                    Some(s) => s,
                    None => {
                        eprintln!("the source function is unsatisfiable");
                        return Ok(FALSE);
                    }
                },
                None if auto => match sat::common_satisfying(&f, &h)? {
                    Some(s) => s,
                    None => {
                        eprintln!("no tuple satisfies both functions");
                        return Ok(FALSE);
                    }
                },
                None => bail!("one of --sigma or --auto is required"),
            };
            let result = match delta {
                Some(delta) => generate_trace_extended(&f, &sigma, &h, &delta),
                None => generate_trace(&f, &h, &sigma),
            };
            let trace = match result {
                Ok(t) => t,
                Err(e @ GenerateError::FrozenPair { .. }) => {
                    eprintln!("{e}");
                    return Ok(FALSE);
                }
                Err(e) => return Err(e.into()),
            };
            write(o.as_deref(), &emit_trace(&trace))?;
            let c = trace.counts();
            eprintln!(
                "{} steps ({} RM, {} ADD, {} MV, {} FLIP)",
                c.total(),
                c.removes,
                c.adds,
                c.moves,
                c.flips
            );
            if let Some(ops) = &trace.ops {
                eprintln!("{ops}");
            }
        }
        Command::Apply { f, trace, o } => {
            let f = read_cnf(&f)?;
            let t = read_trace(&trace)?;
            write(o.as_deref(), &emit_dimacs(&replay(&f, &t)?))?;
        }
        Command::VerifyTrace { f, trace } => {
            let f = read_cnf(&f)?;
            let t = read_trace(&trace)?;
            replay(&f, &t)?;
            println!("ok: {} steps, final tuple {}", t.len(), t.final_tuple());
        }
        Command::Classes { dir, sigma } => return classes(&dir, &sigma),
        Command::Random {
            n,
            m,
            seed,
            satisfiable,
            o,
        } => {
            let f = random_instance(n, m, seed, satisfiable)?;
            write(o.as_deref(), &emit_dimacs(&f))?;
        }
    }
    Ok(0)
}

fn classes(dir: &Path, sigma: &BoolTuple) -> Result<u8> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()?;
    paths.retain(|p| p.extension().is_some_and(|x| x == "cnf"));
    paths.sort();

    let mut members = Vec::new();
    let mut others = Vec::new();
    for p in &paths {
        let f = read_cnf(p)?;
        let name = p.file_name().unwrap_or_default().to_string_lossy().into_owned();
        if f.n() == sigma.len() && sat::evaluate(&f, sigma)? {
            members.push((f.m(), name));
        } else {
            others.push(name);
        }
    }
    members.sort();
    let mut last = None;
    for (m, name) in &members {
        if last != Some(*m) {
            println!("class {sigma} m={m}");
            last = Some(*m);
        }
        println!("  {name}");
    }
    if !others.is_empty() {
        println!("outside");
        for name in &others {
            println!("  {name}");
        }
    }
    Ok(if members.is_empty() { FALSE } else { 0 })
}
