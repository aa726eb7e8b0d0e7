use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use partition_lattice::fca::{concepts, enumerate_concepts, format, standard_context_with};
use partition_lattice::scaling::bench_table;
use partition_lattice::verify::verify;
use partition_lattice::{
    build_hasse, enumerate_partitions, find_pentagon, join_irreducibles, meet_irreducibles,
    parallel_available, Execution, Partition,
};

const PARTITIONS_LIMIT: u32 = 60;
const CONCEPTS_LIMIT: u32 = 40;
const HASSE_LIMIT: u32 = 20;

/// Explore the dominance lattice of integer partitions and its standard context.
#[derive(Parser)]
#[command(name = "plattice", version)]
struct Cli {
    /// Spread independent work over all cores (needs the `parallel` feature).
    #[arg(long, global = true)]
    parallel: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the partitions of n, largest first.
    Partitions {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ListFormat::Plain)]
        format: ListFormat,
        #[command(flatten)]
        output: Output,
    },
    /// List the join- or meet-irreducible partitions of n.
    Irreducibles {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Kind::Join)]
        kind: Kind,
        /// Print only the number of elements.
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value_t = ListFormat::Plain)]
        format: ListFormat,
        #[command(flatten)]
        output: Output,
    },
    /// Write the standard context K(L_n).
    Context {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ContextFormat::Cxt)]
        format: ContextFormat,
        #[command(flatten)]
        output: Output,
    },
    /// Count, or list, the formal concepts of K(L_n).
    Concepts {
        #[arg(long)]
        n: u32,
        /// After the count, one line per concept: extent size, intent size, extent, intent.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Check the lattice and context properties for every weight up to n.
    Verify {
        #[arg(long, default_value_t = 10)]
        n: u32,
    },
    /// Time the irreducible recursion and the context construction.
    Bench {
        /// Weights to time, comma separated or repeated.
        #[arg(long, value_delimiter = ',', default_values_t = [20, 40, 80])]
        n: Vec<u32>,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
    /// Graphviz drawing of the Hasse diagram of L_n.
    Hasse {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(clap::Args)]
struct Output {
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Overwrite an existing file and lift the size guard.
    #[arg(long)]
    force: bool,
}

impl Output {
    fn open(&self) -> Result<Box<dyn Write>> {
        match &self.out {
            None => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
            Some(path) => Ok(Box::new(BufWriter::new(create(path, self.force)?))),
        }
    }

    fn guard(&self, what: &str, n: u32, limit: u32) -> Result<()> {
        if n > limit && !self.force {
            bail!("{what} for n = {n} is large (limit {limit}); pass --force to go ahead");
        }
        Ok(())
    }
}

fn create(path: &Path, force: bool) -> Result<File> {
    if path.exists() && !force {
        bail!(
            "{} already exists; pass --force to overwrite",
            path.display()
        );
    }
    File::create(path).with_context(|| format!("cannot create {}", path.display()))
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Join,
    Meet,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    /// `a,b,c` per line.
    Plain,
    /// `(a,b,c)` per line.
    Tuple,
}

#[derive(Clone, Copy, ValueEnum)]
enum ContextFormat {
    Cxt,
    Csv,
}

fn write_list(out: &mut dyn Write, items: &[Partition], format: ListFormat) -> io::Result<()> {
    for p in items {
        match format {
            ListFormat::Plain => writeln!(out, "{p}")?,
            ListFormat::Tuple => writeln!(out, "({p})")?,
        }
    }
    Ok(())
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        bail!("n must be at least 1");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    let exec = if cli.parallel {
        if !parallel_available() {
            eprintln!("note: built without the `parallel` feature, running sequentially");
        }
        Execution::Parallel
    } else {
        Execution::Sequential
    };
    match cli.command {
        Command::Partitions { n, format, output } => {
            check_n(n)?;
            output.guard("listing partitions", n, PARTITIONS_LIMIT)?;
            let all = enumerate_partitions(n)?;
            let mut out = output.open()?;
            write_list(&mut out, &all, format)?;
            out.flush()?;
        }
        Command::Irreducibles {
            n,
            kind,
            count,
            format,
            output,
        } => {
            check_n(n)?;
            let items = match kind {
                Kind::Join => join_irreducibles(n)?.members(),
                Kind::Meet => meet_irreducibles(n)?,
            };
            let mut out = output.open()?;
            if count {
                writeln!(out, "{}", items.len())?;
            } else {
                write_list(&mut out, &items, format)?;
            }
            out.flush()?;
        }
        Command::Context { n, format, output } => {
            check_n(n)?;
            let ctx = standard_context_with(n, exec)?;
            let mut out = output.open()?;
            match format {
                ContextFormat::Cxt => format::write_cxt(&ctx, &mut out)?,
                ContextFormat::Csv => format::write_csv(&ctx, &mut out)?,
            }
            out.flush()?;
        }
        Command::Concepts { n, list, output } => {
            check_n(n)?;
            output.guard("concept enumeration", n, CONCEPTS_LIMIT)?;
            let ctx = standard_context_with(n, exec)?;
            let mut out = output.open()?;
            if list {
                let all = enumerate_concepts(&ctx);
                writeln!(out, "{}", all.len())?;
                format::write_concepts(&ctx, &all, &mut out)?;
            } else {
                writeln!(out, "{}", concepts(&ctx).count())?;
            }
            out.flush()?;
        }
        Command::Verify { n } => {
            check_n(n)?;
            let report = verify(n, exec)?;
            let counts: Vec<String> = report
                .join_irreducible_counts
                .iter()
                .map(usize::to_string)
                .collect();
            println!("|J| = {}", counts.join(","));
            for check in &report.checks {
                println!("{check}");
            }
            return Ok(report.all_passed());
        }
        Command::Bench { n, repeats } => {
            if let Some(&bad) = n.iter().find(|&&k| k < 4) {
                bail!("bench sizes must be at least 4, got {bad}");
            }
            println!(
                "{:>6} {:>14} {:>7} {:>14} {:>7}",
                "n", "irreducibles", "slope", "context", "slope"
            );
            let fmt_slope = |s: Option<f64>| s.map_or("-".to_string(), |s| format!("{s:.2}"));
            for row in bench_table(&n, repeats, exec)? {
                println!(
                    "{:>6} {:>14.3?} {:>7} {:>14.3?} {:>7}",
                    row.n,
                    row.join_irreducibles,
                    fmt_slope(row.join_slope),
                    row.standard_context,
                    fmt_slope(row.context_slope),
                );
            }
        }
        Command::Hasse { n, output } => {
            check_n(n)?;
            output.guard("drawing the Hasse diagram", n, HASSE_LIMIT)?;
            let diagram = build_hasse(n)?;
            let highlight = join_irreducibles(n)?.members();
            let annotate: Vec<Partition> = find_pentagon(n).map(Vec::from).unwrap_or_default();
            let mut out = output.open()?;
            out.write_all(diagram.to_dot(&highlight, &annotate).as_bytes())?;
            out.flush()?;
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
