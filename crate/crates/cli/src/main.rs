//! `capelli`: build Capelli-type elements of `U(gl(n))`, run the theorem
//! suites, and query eigenvalues and Harish-Chandra images.

mod descriptor;
mod render;
mod suites;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context as _, Result};
use capelli::elements::set_cdet_limit;
use capelli::rep::{act, eigen_scalar, hook_eigenvalue, SuperPolynomial};
use capelli::shifted::hc_image;
use capelli::virt::Shape;
use clap::{Parser, Subcommand};

use descriptor::{build, build_element, tokens, Built};
use render::Format;
use suites::SuiteArgs;

#[derive(Parser, Debug)]
#[command(name = "capelli", version, about = "Capelli identities in U(gl(n)), checked exactly")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for suites (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Largest matrix size for column determinants.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print an element in PBW normal form, e.g. `element H 2 2`.
    Element {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true, value_name = "DESCRIPTOR")]
        desc: Vec<String>,
    },
    /// Run a verification suite; exits 0 iff every identity holds.
    Verify {
        /// One of capelli-identity, hook, row-insertion, expansion,
        /// factorization, centrality, hc, koszul, proof-machinery, one-row,
        /// invariants.
        suite: String,
        #[command(flatten)]
        args: SuiteArgs,
    },
    /// Harish-Chandra image of a central element, e.g. `hc H 2 2`.
    Hc {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true, value_name = "DESCRIPTOR")]
        desc: Vec<String>,
    },
    /// Eigenvalue on the highest weight vector of weight `mu`: the hook
    /// formula for `--shape`, or the computed action for `--element`.
    Eigen {
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        element: Option<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        mu: Vec<usize>,
    },
    /// Act with an element on a polynomial in the variables `(i|j)`.
    Act {
        #[arg(long)]
        element: String,
        #[arg(long)]
        on: String,
        /// Number of columns; variables `(i|j)` with `j > d` are rejected.
        #[arg(long)]
        d: Option<usize>,
    },
}

/// Writes a line to stdout; a closed pipe (`capelli … | head`) is not an error.
fn emit(s: impl std::fmt::Display) -> Result<()> {
    match writeln!(std::io::stdout().lock(), "{s}") {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(n) = cli.max_n {
        set_cdet_limit(n);
    }
    let f = cli.format;
    match cli.cmd {
        Cmd::Element { desc } => {
            let out = match build(&desc, None)? {
                Built::Element(x) => render::element(&x.normalized(), f)?,
                Built::Poly(p, var) => render::poly(&p, var, f)?,
            };
            emit(out)?;
        }
        Cmd::Verify { suite, args } => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build()?;
            let report = pool.install(|| suites::run(&suite, &args, cli.seed))?;
            emit(render::report(&report, f)?)?;
            return Ok(report.passed());
        }
        Cmd::Hc { desc } => {
            let x = build_element(&desc, None)?;
            let n = x.context().n as usize;
            emit(render::shifted(&hc_image(&x, n)?, f)?)?;
        }
        Cmd::Eigen { shape, element, mu } => {
            let value = match (shape, element) {
                (Some(s), None) => hook_eigenvalue(&Shape::parse(&s)?, &mu)?,
                (None, Some(e)) => eigen_scalar(&build_element(&tokens(&e), Some(mu.len()))?, &mu)?,
                _ => bail!("give exactly one of --shape and --element"),
            };
            match f {
                Format::Json => emit(serde_json::to_string(&value.to_string())?)?,
                _ => emit(value)?,
            }
        }
        Cmd::Act { element, on, d } => {
            let x = build_element(&tokens(&element), None)?;
            let p = SuperPolynomial::parse(&on).with_context(|| format!("polynomial {on:?}"))?;
            if let Some(d) = d {
                if let Some(v) = p.iter().flat_map(|(m, _)| m.vars()).find(|v| v.col as usize > d) {
                    bail!("variable {v} has column beyond d = {d}");
                }
            }
            emit(render::super_poly(&act(&x, &p), f)?)?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
