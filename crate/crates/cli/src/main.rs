mod matrix_file;
mod records;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use tritperm::circuit::{build_partial_table, reference_circuit, search_min_circuit, verify_circuit, FieldOp};
use tritperm::experiments::{bench, exact_zero_count, montecarlo_zero, pi_matrix, zero_probability_series};
use tritperm::Method;

use records::{emit, Format};

#[derive(Parser)]
#[command(name = "tritperm", version, about = "Permanents over GF(3) with bitsliced trit vectors")]
struct Cli {
    /// Output format for result records.
    #[arg(long, value_enum, global = true, default_value_t = Format::Csv)]
    format: Format,

    /// Print trits as {0,1,2} instead of {-1,0,1}.
    #[arg(long, global = true)]
    mod3_classes: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Naive,
    Ryser,
    Mod3,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Naive => Method::Naive,
            MethodArg::Ryser => Method::Ryser,
            MethodArg::Mod3 => Method::Mod3,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    Add,
    Sub,
    Mul,
    Div,
}

impl From<OpArg> for FieldOp {
    fn from(op: OpArg) -> Self {
        match op {
            OpArg::Add => FieldOp::Add,
            OpArg::Sub => FieldOp::Sub,
            OpArg::Mul => FieldOp::Mul,
            OpArg::Div => FieldOp::Div,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Permanent mod 3 of a matrix file.
    Perm {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Mod3)]
        method: MethodArg,
        /// Worker count [default: available parallelism].
        #[arg(long, env = "TRITPERM_THREADS")]
        jobs: Option<usize>,
    },
    /// Exact count of n x n matrices with zero permanent (n <= 4).
    CountExact {
        #[arg(long)]
        n: usize,
    },
    /// Monte Carlo estimate of P(perm = 0).
    Montecarlo {
        #[arg(long)]
        n: usize,
        /// Sweep n..=n_max instead of a single size.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, env = "TRITPERM_THREADS")]
        jobs: Option<usize>,
        /// Append records to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Zero-probability curve: exact points for small n, sampled above.
    Figure {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        exact_up_to: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, env = "TRITPERM_THREADS")]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the engines and fit T(n) = c * n * 2^n (ryser) or c * 2^n (mod3).
    Bench {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [MethodArg::Ryser, MethodArg::Mod3])]
        methods: Vec<MethodArg>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the n x n matrix of consecutive digits of pi.
    PiMatrix {
        #[arg(long)]
        n: usize,
        /// Output path [default: stdout].
        #[arg(long)]
        out: Option<PathBuf>,
        /// Start from the first decimal digit instead of the leading 3.
        #[arg(long)]
        skip_integer_part: bool,
    },
    /// Minimal {and, or, xor} circuit for a bipedal operation.
    Circuits {
        #[arg(value_enum)]
        op: OpArg,
        #[arg(long, default_value_t = 6)]
        max_gates: usize,
    },
}

fn resolve_jobs(jobs: Option<usize>) -> Result<usize> {
    let jobs = match jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    // Fails only if the pool was already built, which cannot happen here.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    eprintln!("jobs={jobs}");
    Ok(jobs)
}

fn run(cli: Cli) -> Result<()> {
    let classes = cli.mod3_classes;
    match cli.command {
        Command::Perm { file, method, jobs } => {
            let jobs = resolve_jobs(jobs)?;
            let text = std::fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let a = matrix_file::parse(&text).with_context(|| format!("parsing {}", file.display()))?;
            let method = Method::from(method);
            let start = Instant::now();
            let value = method.run(&a, jobs)?;
            let elapsed = start.elapsed().as_secs_f64();
            println!("{}", matrix_file::show_trit(value, classes));
            let record = records::PermRecord::new(a.n(), method, jobs, value, classes, elapsed);
            println!("{}", serde_json::to_string(&record)?);
        }
        Command::CountExact { n } => {
            let r = exact_zero_count(n)?;
            emit(&[records::ExactRecord::from(&r)], cli.format, None)?;
        }
        Command::Montecarlo { n, n_max, trials, seed, jobs, out } => {
            let jobs = resolve_jobs(jobs)?;
            let hi = n_max.unwrap_or(n);
            if hi < n {
                bail!("--n-max ({hi}) is smaller than --n ({n})");
            }
            let rows = (n..=hi)
                .map(|k| montecarlo_zero(k, trials, seed, jobs).map(|r| records::McRecord::from(&r)))
                .collect::<Result<Vec<_>, _>>()?;
            emit(&rows, cli.format, out.as_deref())?;
        }
        Command::Figure { n_max, exact_up_to, trials, seed, jobs, out } => {
            let jobs = resolve_jobs(jobs)?;
            let points = zero_probability_series(n_max, exact_up_to, trials, seed, jobs)?;
            let rows: Vec<_> = points.iter().map(records::SeriesRecord::from).collect();
            emit(&rows, cli.format, out.as_deref())?;
        }
        Command::Bench { n_min, n_max, reps, methods, seed, out } => {
            let methods: Vec<Method> = methods.into_iter().map(Method::from).collect();
            let results = bench(&methods, n_min, n_max, reps, seed)?;
            let rows: Vec<_> = results.iter().flat_map(records::BenchRecord::rows).collect();
            emit(&rows, cli.format, out.as_deref())?;
        }
        Command::PiMatrix { n, out, skip_integer_part } => {
            let m = pi_matrix(n, skip_integer_part)?;
            let text = matrix_file::format(&m, classes);
            match out {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
        }
        Command::Circuits { op, max_gates } => {
            let op = FieldOp::from(op);
            let table = build_partial_table(op);
            let reference = reference_circuit(op);
            let Some(c) = search_min_circuit(&table, max_gates)? else {
                bail!("no circuit for {op} with at most {max_gates} gates");
            };
            println!("# minimal circuit for {op}: {} gates", c.gate_count());
            println!("{c}");
            println!();
            print!("{}", c.certificate(&table));
            println!();
            println!(
                "# reference formulas: {} gates, {}",
                reference.gate_count(),
                if verify_circuit(&reference, &table) { "verified" } else { "FAILED" }
            );
            println!("{reference}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
