//! `qbforge`: check, explore and search finite quantum B-algebras.
//!
//! Exit status: 0 when every asserted law holds, 1 on a law violation (or,
//! for `search`, when the predicate has witnesses), 2 on bad input.

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use report::Report;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "qbforge", version, about = "Finite quantum B-algebra workbench")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Cap on enumerations of the upper-set quantale.
    #[arg(long, global = true, env = "QBFORGE_CAP", default_value_t = qbforge::quantale::DEFAULT_CAP)]
    cap: usize,
    /// Seed for sampled law checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Report wall-clock time.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every class check and print the class lattice position.
    Validate {
        /// Algebra file, `-` for stdin, or `@name` for a catalog entry.
        input: String,
    },
    /// Filter lattice and μ law suite, optionally with prime classification.
    Filters {
        input: String,
        #[arg(long)]
        primes: bool,
    },
    /// Operations and laws of the quantale of upper sets.
    Quantale {
        input: String,
        /// umul, resl (X⇝Y), resr (X→Y), invres-left or invres-right.
        #[arg(long)]
        op: Option<String>,
        /// Upper set such as `{a,1}`.
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        /// Check the quantale laws exhaustively (sampled above the cap).
        #[arg(long)]
        laws: bool,
        /// Check the laws on this many random triples instead.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Polar M⊥, double polar and the polar-pair embedding.
    Polar {
        input: String,
        #[arg(long)]
        set: String,
    },
    /// Subdirect-reducibility witness from a set M (all M if omitted).
    Witness {
        input: String,
        #[arg(long)]
        set: Option<String>,
    },
    /// Prime filter classes, or the maximal filter containing --filter and avoiding --element.
    Primes {
        input: String,
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        element: Option<String>,
    },
    /// Exhaustive search for algebras satisfying a predicate.
    Search {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 1)]
        min_size: usize,
        /// quantum-b, integral-qb, residuated, integral-residuated, residuated-join or pseudo-hoop.
        #[arg(long, default_value = "integral-qb")]
        class: String,
        /// Predicate such as `PF != PF_vee and not commutative`.
        #[arg(long = "where")]
        predicate: Option<String>,
        #[arg(long)]
        limit: Option<usize>,
        /// Keep every labeling instead of one per isomorphism class.
        #[arg(long)]
        labeled: bool,
        /// Raise the size cap of the class (at most 7).
        #[arg(long)]
        size_cap: Option<usize>,
        /// Write each witness to DIR/<name>.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print or write a catalog algebra.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        list: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Every law suite over all integral quantum B-algebras up to a size.
    Sweep {
        #[arg(long, default_value_t = 4)]
        size: usize,
    },
}

fn dispatch(cli: &Cli, rep: &mut Report) -> Result<(), String> {
    let cap = cli.cap;
    match &cli.cmd {
        Cmd::Validate { input } => commands::validate(&input::load(input)?, rep),
        Cmd::Filters { input, primes } => commands::filters(&input::load(input)?, cap, *primes, rep),
        Cmd::Quantale { input, op, x, y, laws, samples } => {
            let args = commands::QuantaleArgs {
                op: op.as_deref(),
                x: x.as_deref(),
                y: y.as_deref(),
                laws: *laws,
                samples: *samples,
                seed: cli.seed,
            };
            commands::quantale(&input::load(input)?, cap, args, rep)
        }
        Cmd::Polar { input, set } => commands::polar_cmd(&input::load(input)?, set, rep),
        Cmd::Witness { input, set } => commands::witness(&input::load(input)?, set.as_deref(), rep),
        Cmd::Primes { input, filter, element } => {
            commands::primes(&input::load(input)?, cap, filter.as_deref(), element.as_deref(), rep)
        }
        Cmd::Search { size, min_size, class, predicate, limit, labeled, size_cap, out } => {
            let args = commands::SearchArgs {
                size: *size,
                min_size: *min_size,
                class,
                predicate: predicate.as_deref(),
                limit: *limit,
                labeled: *labeled,
                size_cap: *size_cap,
                out: out.as_deref(),
            };
            commands::search(cap, args, rep)
        }
        Cmd::Catalog { name, list, out } => commands::catalog_cmd(name.as_deref(), *list, out.as_deref(), rep),
        Cmd::Sweep { size } => commands::sweep(*size, cap, rep),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut rep = Report::new(std::env::args().collect());
    let start = Instant::now();
    if let Err(msg) = dispatch(&cli, &mut rep) {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    if cli.timing {
        rep.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    let out = match cli.format {
        Format::Text => rep.render_text(),
        Format::Json => rep.render_json(),
    };
    print!("{out}");
    ExitCode::from(if rep.holds() { 0 } else { 1 })
}
