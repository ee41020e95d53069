use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use opcalc_core::closedforms::{
    binomial_expand, infer_layer_formula, layer_decomposition, q_binomial_expand, shift_expand, shift_p_compositions,
    shift_p_recurrence, weyl_expand,
};
use opcalc_core::frontend::{normalize, render, render_text};
use opcalc_core::oracle::verify_identity;
use opcalc_core::{AlgebraKind, AnyPoly, ExactRational, LayerError, NormalPoly, RenderStyle, UniPoly};

/// Exact normal forms and binomial expansions in operator algebras.
#[derive(Parser)]
#[command(name = "opcalc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    Comm,
    Q,
    Weyl,
    Shift,
}

impl From<Algebra> for AlgebraKind {
    fn from(a: Algebra) -> Self {
        match a {
            Algebra::Comm => AlgebraKind::Commutative,
            Algebra::Q => AlgebraKind::QCommutative,
            Algebra::Weyl => AlgebraKind::Weyl,
            Algebra::Shift => AlgebraKind::Shift,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpandMethod {
    Closed,
    Power,
}

#[derive(Clone, Copy, ValueEnum)]
enum PMethod {
    Recurrence,
    Compositions,
}

#[derive(clap::Args)]
struct Output {
    /// Output style (text, latex or json)
    #[arg(long, env = "OPCALC_FORMAT", default_value = "text")]
    format: RenderStyle,
    /// Print shift-algebra text as flat n^i*N^j terms instead of grouping by powers of N
    #[arg(long)]
    raw: bool,
}

impl Output {
    fn show(&self, p: &AnyPoly) -> String {
        match self.format {
            RenderStyle::Text => render_text(p, self.raw),
            style => render(p, style),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print (A+B)^R in normal order
    Expand {
        #[arg(long, value_enum)]
        algebra: Algebra,
        #[arg(long = "r")]
        r: u32,
        #[arg(long, value_enum, default_value = "closed")]
        method: ExpandMethod,
        #[command(flatten)]
        output: Output,
    },
    /// Print the coefficient P_{R,D}(n) of N^D in (N+n)^R
    Pcoeff {
        #[arg(long = "r")]
        r: u32,
        #[arg(long = "d", allow_negative_numbers = true)]
        d: i64,
        #[arg(long, value_enum, default_value = "recurrence")]
        method: PMethod,
    },
    /// Parse an expression, reduce it to normal form and print it
    Normalize {
        #[arg(long, value_enum)]
        algebra: Algebra,
        expr: String,
        #[command(flatten)]
        output: Output,
    },
    /// Print the top total-degree layers of (N+n)^R
    Components {
        #[arg(long = "r")]
        r: u32,
        /// Layers below the top: prints degrees R, R-1, ..., R-K
        #[arg(long = "k", conflicts_with = "layers", required_unless_present = "layers")]
        k: Option<u32>,
        /// Number of layers counting the top one; same as --k LAYERS-1
        #[arg(long)]
        layers: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Recover layer R-M of (N+n)^R as a formula in R
    Infer {
        #[arg(long = "m")]
        m: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        samples: Vec<u32>,
        #[arg(long)]
        holdout: u32,
    },
    /// Check the closed form of (A+B)^R against operators acting on random polynomials
    Verify {
        #[arg(long, value_enum)]
        algebra: Algebra,
        #[arg(long = "r")]
        r: u32,
        #[arg(long, default_value_t = 50)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "OPCALC_FORMAT", default_value = "text")]
        format: RenderStyle,
    },
    /// Time the recurrence, the composition sum and repeated multiplication
    Bench {
        #[arg(long = "r-max")]
        r_max: u32,
    },
}

fn closed_form(kind: AlgebraKind, r: u32) -> AnyPoly {
    match kind {
        AlgebraKind::Commutative => binomial_expand(r).into(),
        AlgebraKind::QCommutative => q_binomial_expand(r).into(),
        AlgebraKind::Weyl => weyl_expand(r).into(),
        AlgebraKind::Shift => shift_expand(r).into(),
    }
}

fn by_power(kind: AlgebraKind, r: u32) -> AnyPoly {
    if kind.has_q() {
        NormalPoly::<UniPoly>::generator_sum(kind).pow(r).into()
    } else {
        NormalPoly::<ExactRational>::generator_sum(kind).pow(r).into()
    }
}

fn infer_exit_code(e: &LayerError) -> u8 {
    match e {
        LayerError::ZeroLayer
        | LayerError::SampleTooSmall { .. }
        | LayerError::TooFewSamples(_)
        | LayerError::Interpolation(_) => 2,
        LayerError::StructureViolation { .. }
        | LayerError::Unstable { .. }
        | LayerError::HoldoutMismatch { .. }
        | LayerError::NonIntegral { .. } => 1,
    }
}

fn micros(d: Duration) -> String {
    format!("{:.1}", d.as_secs_f64() * 1e6)
}

fn bench(r_max: u32) {
    println!("{:>4} {:>16} {:>16} {:>16}", "r", "recurrence_us", "compositions_us", "power_us");
    for r in 0..=r_max {
        let t = Instant::now();
        for d in 0..=i64::from(r) {
            std::hint::black_box(shift_p_recurrence(r, d));
        }
        let rec = t.elapsed();
        let t = Instant::now();
        for d in 0..=i64::from(r) {
            std::hint::black_box(shift_p_compositions(r, d));
        }
        let comp = t.elapsed();
        let t = Instant::now();
        std::hint::black_box(NormalPoly::<ExactRational>::generator_sum(AlgebraKind::Shift).pow(r));
        let pow = t.elapsed();
        println!("{r:>4} {:>16} {:>16} {:>16}", micros(rec), micros(comp), micros(pow));
    }
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Expand { algebra, r, method, output } => {
            let kind = algebra.into();
            let p = match method {
                ExpandMethod::Closed => closed_form(kind, r),
                ExpandMethod::Power => by_power(kind, r),
            };
            println!("{}", output.show(&p));
            0
        }
        Command::Pcoeff { r, d, method } => {
            let p = match method {
                PMethod::Recurrence => shift_p_recurrence(r, d),
                PMethod::Compositions => shift_p_compositions(r, d),
            };
            println!("{p}");
            0
        }
        Command::Normalize { algebra, expr, output } => match normalize(&expr, algebra.into()) {
            Ok(p) => {
                println!("{}", output.show(&p));
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                eprintln!("  {expr}");
                eprintln!("  {:>width$}", "^", width = e.offset + 1);
                2
            }
        },
        Command::Components { r, k, layers, output } => {
            let k = match (k, layers) {
                (Some(k), _) => k,
                (None, Some(0)) => return 0,
                (None, Some(l)) => l - 1,
                (None, None) => unreachable!("clap requires one of --k and --layers"),
            };
            for (t, layer) in layer_decomposition(r, k).into_iter().enumerate() {
                let degree = r - t as u32;
                let shown = output.show(&layer.into());
                match output.format {
                    RenderStyle::Json => println!("{shown}"),
                    _ => println!("degree {degree}: {shown}"),
                }
            }
            0
        }
        Command::Infer { m, samples, holdout } => match infer_layer_formula(m, &samples, holdout) {
            Ok(f) => {
                println!("{f}");
                for (s, q) in f.q_coeffs.iter().enumerate() {
                    println!("  q[{s}](r) = {q}    (coefficient of n^{s}*N^{})", m - 1 - s as u32);
                }
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                infer_exit_code(&e)
            }
        },
        Command::Verify { algebra, r, trials, seed, format } => {
            let report = verify_identity(algebra.into(), r, trials, seed);
            match format {
                RenderStyle::Json => println!("{}", serde_json::to_string(&report).expect("serializable")),
                _ => print!("{report}"),
            }
            if report.all_passed() {
                0
            } else {
                1
            }
        }
        Command::Bench { r_max } => {
            bench(r_max);
            0
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(cli))
}
