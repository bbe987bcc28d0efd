//! `octf8`: multiplication tables, orbit reports, order certificates and the full
//! verification suite.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors
//! (including an unknown order selector).

mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use octf8::orders::{all_orders, find_order};
use octf8::verify::{run_suite, SuiteOptions, DEFAULT_SEED};
use octf8::{CocycleTable, Error, F8};

use report::{Format, OrderJson};

#[derive(Parser, Debug)]
#[command(
    name = "octf8",
    version,
    about = "Octonions as a twisted group algebra over F8"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Signed multiplication table of e_∞, e_1, ..., e_6, e_0.
    Table,
    /// The 8x8 matrix phi(x, y), indexed by field elements in bit order.
    Phi,
    /// The sixteen translation orbits on H with their order names.
    Orbits,
    /// Certificates for one order, or a summary of all sixteen.
    Order {
        /// Order name (e.g. `gravesian`, `0-integers`) or orbit label.
        #[arg(long)]
        order: Option<String>,
    },
    /// Run every check; exit 1 if any fails.
    Verify {
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Flip the cocycle bit at field indices `x,y` before running.
        #[arg(long, hide = true, value_parser = parse_pair)]
        corrupt_cocycle: Option<(F8, F8)>,
    },
    /// The twisted group algebra of F4 and its laws.
    F4,
}

fn parse_pair(s: &str) -> Result<(F8, F8), String> {
    let (a, b) = s.split_once(',').ok_or("expected x,y")?;
    let field = |t: &str| {
        t.trim()
            .parse::<u8>()
            .ok()
            .and_then(F8::new)
            .ok_or_else(|| format!("{t:?} is not a field index 0..7"))
    };
    Ok((field(a)?, field(b)?))
}

enum Failure {
    Usage(String),
    Internal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownOrder(..) => Failure::Usage(e.to_string()),
            e => Failure::Internal(e),
        }
    }
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let format = cli.format;
    Ok(match &cli.command {
        Command::Table => (report::table(format)?, true),
        Command::Phi => (report::phi_matrix(format), true),
        Command::Orbits => (report::orbits(format)?, true),
        Command::Order { order } => {
            let orders = all_orders()?;
            let selected = match order {
                Some(name) => vec![&orders[find_order(&orders, name)?]],
                None => orders.iter().collect(),
            };
            let reports = selected
                .into_iter()
                .map(OrderJson::new)
                .collect::<Result<Vec<_>, _>>()?;
            let passed = reports.iter().all(OrderJson::passed);
            (report::orders(&reports, order.is_some(), format), passed)
        }
        Command::Verify {
            seed,
            corrupt_cocycle,
        } => {
            let mut opts = SuiteOptions {
                seed: *seed,
                ..SuiteOptions::default()
            };
            if let Some((x, y)) = corrupt_cocycle {
                opts.cocycle = CocycleTable::standard().with_flipped(*x, *y);
            }
            let suite = run_suite(&opts);
            (report::verify(&suite, format), suite.all_passed())
        }
        Command::F4 => report::f4(format),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, passed)) => {
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("octf8: verification failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("octf8: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("octf8: {e}");
            ExitCode::from(1)
        }
    }
}
