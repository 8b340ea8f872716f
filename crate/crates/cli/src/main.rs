//! `bessel-zeros`: zeros of Bessel polynomials from the command line.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage or out-of-range argument,
//! 3 singular degree, 4 non-convergence, 5 any other numerical failure.

mod table;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bessel_zeros::approx::FitCondition;
use bessel_zeros::asymptotics::{limit_defect_curve, ZeroSource};
use bessel_zeros::experiments::{
    convergence_study, power_sum_table, real_zero_table, zero_locus_data,
};
use bessel_zeros::oracle::{aberth_solve, DEFAULT_MAX_ITER};
use bessel_zeros::{approx_zero, approx_zeros, newton_solve, Error, NewtonConfig, PolyIndex};
use clap::{Args, Parser, Subcommand, ValueEnum};

use table::{Cell, Table};

#[derive(Parser)]
#[command(
    name = "bessel-zeros",
    version,
    about = "Zeros of Bessel polynomials y_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Significant digits for real-valued fields.
    #[arg(long, global = true, default_value_t = 17, value_parser = clap::value_parser!(u8).range(6..=17))]
    precision: u8,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Seed {
    Approx,
    Oracle,
}

#[derive(Args, Clone, Copy)]
struct SolverArgs {
    /// Stopping threshold on the scaled electrostatic residual.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, default_value_t = 100)]
    max_iter: usize,
}

impl SolverArgs {
    fn config(&self) -> NewtonConfig {
        NewtonConfig {
            tol_residual: self.tol,
            max_iter: self.max_iter,
            ..NewtonConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form approximate zeros: k, re, im.
    Approx {
        #[arg(long)]
        n: PolyIndex,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Newton solve of the equilibrium equations: k, re, im.
    Solve {
        #[arg(long)]
        n: PolyIndex,
        #[command(flatten)]
        solver: SolverArgs,
        /// Starting points for Newton.
        #[arg(long, value_enum, default_value_t = Seed::Approx)]
        seed: Seed,
    },
    /// max_k |z_k - z̃_k| over a grid of degrees, with a power-law fit.
    Study {
        #[arg(long, default_value_t = 10)]
        n_min: PolyIndex,
        #[arg(long, default_value_t = 500)]
        n_max: PolyIndex,
        #[arg(long, default_value_t = 10)]
        step: PolyIndex,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Normalised zeros n·z_k, solved and approximate.
    Locus {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<PolyIndex>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Power sums of the approximate zeros against the exact values.
    PowerSums {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<PolyIndex>,
    },
    /// The real zero for odd degrees against both closed-form estimates.
    RealZero {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<PolyIndex>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Distance proxy | |W(n z̃_k)| - 1 | of normalised approximate zeros.
    Gamma {
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<PolyIndex>,
    },
    /// Residuals of the interpolation conditions behind the closed form.
    FitAudit {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<PolyIndex>,
    },
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::InvalidArgument(_)
        | Error::IndexOutOfRange { .. }
        | Error::DegreeTooLarge { .. }
        | Error::UnsupportedOrder { .. } => 2,
        Error::SingularDegree { .. } | Error::VanishingDenominator { .. } => 3,
        Error::NoConvergence { .. } | Error::SingularJacobian => 4,
        _ => 5,
    }
}

fn real(x: f64) -> Cell {
    Cell::Real(x)
}

fn int(x: impl Into<u64>) -> Cell {
    Cell::Int(x.into())
}

fn zeros_table(zeros: &[bessel_zeros::Complex64]) -> Table {
    let mut t = Table::new(&["k", "re", "im"]);
    for (k, z) in (1u32..).zip(zeros) {
        t.push(vec![int(k), real(z.re), real(z.im)]);
    }
    t
}

fn run(command: &Command) -> Result<Table, Error> {
    match command {
        Command::Approx { n, k: Some(k) } => {
            let z = approx_zero(*k, *n)?;
            let mut t = Table::new(&["k", "re", "im"]);
            t.push(vec![int(*k), real(z.re), real(z.im)]);
            Ok(t)
        }
        Command::Approx { n, k: None } => Ok(zeros_table(approx_zeros(*n)?.zeros())),
        Command::Solve { n, solver, seed } => {
            let seed_set = match seed {
                // degree 1 has no closed form; the solver starts from -1 itself
                Seed::Approx if *n < 2 => None,
                Seed::Approx => Some(approx_zeros(*n)?),
                Seed::Oracle => Some(aberth_solve(*n, solver.tol, DEFAULT_MAX_ITER)?),
            };
            let set = newton_solve(*n, &solver.config(), seed_set.as_ref())?;
            let mut t = zeros_table(set.zeros());
            t.summarize("residual", real(set.residual_norm()));
            t.summarize("iterations", int(set.iterations() as u64));
            Ok(t)
        }
        Command::Study {
            n_min,
            n_max,
            step,
            solver,
        } => {
            let study = convergence_study(*n_min, *n_max, *step, &solver.config(), false)?;
            let mut t = Table::new(&["n", "max_error"]);
            for r in &study.records {
                t.push(vec![int(r.n), real(r.max_error)]);
            }
            t.summarize("exponent", real(study.fit.exponent));
            t.summarize("amplitude", real(study.fit.amplitude));
            t.summarize("rss", real(study.fit.rss));
            Ok(t)
        }
        Command::Locus { n, solver } => {
            let mut t = Table::new(&["n", "k", "re_exact", "im_exact", "re_approx", "im_approx"]);
            for r in zero_locus_data(n, &solver.config())? {
                t.push(vec![
                    int(r.n),
                    int(r.k),
                    real(r.exact.re),
                    real(r.exact.im),
                    real(r.approx.re),
                    real(r.approx.im),
                ]);
            }
            Ok(t)
        }
        Command::PowerSums { n } => {
            let mut t = Table::new(&[
                "n",
                "order",
                "direct_re",
                "direct_im",
                "rational",
                "exact",
                "abs_error",
            ]);
            for r in power_sum_table(n)? {
                t.push(vec![
                    int(r.n),
                    int(r.order),
                    real(r.direct_sum.re),
                    real(r.direct_sum.im),
                    r.rational_form.map_or(Cell::Blank, |q| real(q.re)),
                    real(r.exact_value.re),
                    real(r.direct_error()),
                ]);
            }
            Ok(t)
        }
        Command::RealZero { n, solver } => {
            let mut t = Table::new(&[
                "n",
                "newton",
                "approx",
                "reference",
                "approx_error",
                "reference_error",
            ]);
            for r in real_zero_table(n, &solver.config())? {
                t.push(vec![
                    int(r.n),
                    real(r.newton),
                    real(r.approx),
                    real(r.reference),
                    real(r.approx_error),
                    real(r.reference_error),
                ]);
            }
            Ok(t)
        }
        Command::Gamma { k, n } => {
            let mut t = Table::new(&["k", "n", "defect", "scaled_defect"]);
            for &kk in k {
                for p in limit_defect_curve(kk, n, ZeroSource::Approx)? {
                    t.push(vec![
                        int(p.k),
                        int(p.n),
                        real(p.defect),
                        real(p.scaled_defect),
                    ]);
                }
            }
            Ok(t)
        }
        Command::FitAudit { n } => {
            let mut t = Table::new(&["n", "condition", "residual"]);
            for &deg in n {
                let residuals = bessel_zeros::approx::verify_fit_conditions(deg)?;
                for (idx, r) in (1u32..).zip(residuals) {
                    debug_assert_eq!(FitCondition::ALL[idx as usize - 1], r.condition);
                    t.push(vec![int(deg), int(idx), real(r.residual)]);
                }
            }
            Ok(t)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let table = match run(&cli.command) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let digits = usize::from(cli.precision);
    let text = match cli.format {
        Format::Csv => table.to_csv(digits),
        Format::Json => table.to_json(digits),
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
