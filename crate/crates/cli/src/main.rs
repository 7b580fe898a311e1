mod pipeline;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lndfact::degmod::{DegreeFiltration, InitialPolicy};
use lndfact::factor::canonical_factorization_of;
use lndfact::problem::Problem;
use lndfact::{Error, Result};

use pipeline::{kernel_certificate, prepare, verified, Prepared};
use report::*;

#[derive(Parser)]
#[command(
    name = "lndfact",
    version,
    about = "Degree modules and canonical factorizations of locally nilpotent derivations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify local nilpotency and print witnesses.
    Check(Common),
    /// Generators of the kernel.
    Kernel(Common),
    /// Generators and degrees of F_n.
    Degmod {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
    },
    /// The plinth ideal.
    Plinth(Common),
    /// The image ideal I_n.
    Image {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
    },
    /// The degree resolution.
    Resolution {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 16)]
        max: usize,
    },
    /// The canonical factorization with its modification triples.
    Factorize {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 16)]
        max: usize,
    },
    /// The truncated associated graded ring.
    Grdb {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    Auto,
    Products,
    SlicePowers,
}

#[derive(Args)]
struct Common {
    /// Problem file.
    file: PathBuf,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
    #[arg(long)]
    nilpotency_cap: Option<usize>,
    #[arg(long)]
    chain_cap: Option<usize>,
    #[arg(long)]
    kernel_rounds: Option<usize>,
    #[arg(long)]
    exponent_cap: Option<u32>,
    #[arg(long, value_enum)]
    policy: Option<Policy>,
    #[arg(long)]
    interleave_factors: bool,
}

impl Common {
    fn load(&self) -> Result<Problem> {
        let src = std::fs::read_to_string(&self.file)
            .map_err(|e| Error::Input(format!("{}: {e}", self.file.display())))?;
        let mut p = Problem::parse(&src)?;
        let o = &mut p.options;
        if let Some(v) = self.nilpotency_cap {
            o.nilpotency_cap = v;
        }
        if let Some(v) = self.chain_cap {
            o.chain_cap = v;
        }
        if let Some(v) = self.kernel_rounds {
            o.kernel_rounds = v;
        }
        if let Some(v) = self.exponent_cap {
            o.exponent_cap = v;
        }
        if let Some(v) = self.policy {
            o.policy = match v {
                Policy::Auto => InitialPolicy::Auto,
                Policy::Products => InitialPolicy::Products,
                Policy::SlicePowers => InitialPolicy::SlicePowers,
            };
        }
        o.interleave_factors |= self.interleave_factors;
        Ok(p)
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'a str,
    ring: Vec<String>,
    result: &'a T,
}

struct Outcome {
    body: String,
    certified: bool,
}

fn emit<T: Serialize + Text>(
    json: bool,
    command: &str,
    ring: &[String],
    r: &T,
    certified: bool,
) -> Outcome {
    let body = if json {
        let env = Envelope {
            command,
            ring: ring.to_vec(),
            result: r,
        };
        serde_json::to_string_pretty(&env).expect("serializable") + "\n"
    } else {
        r.text()
    };
    Outcome { body, certified }
}

fn filtration(p: &Prepared) -> Result<DegreeFiltration> {
    let slice = p.slice.clone().ok_or(Error::NoLocalSlice)?;
    DegreeFiltration::new(
        p.derivation.clone(),
        p.kernel.clone(),
        slice,
        p.problem.options.degmod(),
    )
}

fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Check(c) => {
            let p = c.load()?;
            let d = verified(&p)?;
            let r = CheckReport {
                ring: p.ring.names().to_vec(),
                witnesses: d.witnesses().unwrap_or_default().to_vec(),
                certified: true,
            };
            Ok(emit(c.json, "check", p.ring.names(), &r, true))
        }
        Command::Kernel(c) => {
            let p = prepare(c.load()?)?;
            let cert = kernel_certificate(&p)?;
            let certified = match &cert {
                Some(k) => p.kernel_certified && k.is_complete(),
                None => p.kernel_certified,
            };
            let r = KernelReport {
                ring: p.problem.ring.names().to_vec(),
                source: p.kernel_source.to_string(),
                generators: named(&p.kernel),
                relations: relations(&p.kernel),
                slice: p.slice.as_ref().map(Into::into),
                certificate: cert.as_ref().map(Into::into),
                certified,
            };
            Ok(emit(
                c.json,
                "kernel",
                p.problem.ring.names(),
                &r,
                certified,
            ))
        }
        Command::Degmod { common: c, n } => {
            let p = prepare(c.load()?)?;
            let mut fil = filtration(&p)?;
            let m = fil.degree_module(*n)?;
            let r = DegmodReport::from(m);
            let ok = r.certified && p.kernel_certified;
            Ok(emit(c.json, "degmod", p.problem.ring.names(), &r, ok))
        }
        Command::Plinth(c) | Command::Image { common: c, .. } => {
            let n = match command {
                Command::Image { n, .. } => *n,
                _ => 1,
            };
            let p = prepare(c.load()?)?;
            let mut fil = filtration(&p)?;
            let r = IdealReport {
                n,
                generators: fil.image_ideal(n)?.iter().map(|g| g.to_string()).collect(),
            };
            let name = if n == 1 && matches!(command, Command::Plinth(_)) {
                "plinth"
            } else {
                "image"
            };
            Ok(emit(
                c.json,
                name,
                p.problem.ring.names(),
                &r,
                p.kernel_certified,
            ))
        }
        Command::Resolution { common: c, max } => {
            let p = prepare(c.load()?)?;
            let mut fil = filtration(&p)?;
            let res = fil.degree_resolution(*max)?;
            let r = ResolutionReport::from(&res);
            let ok = res.complete && p.kernel_certified;
            Ok(emit(c.json, "resolution", p.problem.ring.names(), &r, ok))
        }
        Command::Factorize { common: c, max } => {
            let p = prepare(c.load()?)?;
            let mut fil = filtration(&p)?;
            let cf = canonical_factorization_of(&mut fil, *max, p.problem.options.exponent_cap)?;
            let r = FactorizeReport::new(&cf, p.problem.ring.names());
            let ok = r.certified && p.kernel_certified;
            Ok(emit(c.json, "factorize", p.problem.ring.names(), &r, ok))
        }
        Command::Grdb { common: c, max } => {
            let p = prepare(c.load()?)?;
            let mut fil = filtration(&p)?;
            let g = fil.graded_ring_truncation(*max)?;
            let r = GradedReport::from(&g);
            Ok(emit(
                c.json,
                "grdb",
                p.problem.ring.names(),
                &r,
                p.kernel_certified,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            print!("{}", out.body);
            if out.certified {
                ExitCode::SUCCESS
            } else {
                eprintln!("warning: result not certified");
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
