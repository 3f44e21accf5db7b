use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use splab::sweep::{emit_profit_curves, run, Axis, Format, Mode, Report, SweepSpec};

#[derive(Parser)]
#[command(
    name = "splab",
    version,
    about = "Equilibria of a quality-signaling game with naive and sophisticated consumers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a single parameter point.
    Solve(Common),
    /// Solve every point of a grid.
    Sweep(Common),
    /// Region label of every grid point.
    Regions(Common),
    /// Naive versus sophisticated market along h.
    Compare {
        #[command(flatten)]
        common: Common,
        /// Only the four profit columns.
        #[arg(long)]
        curves: bool,
    },
    /// Every threshold at each grid point.
    Thresholds(Common),
    /// Oracle checks at each grid point; exits with 3 on any failure.
    Verify(Common),
}

/// Axis flags take `VALUE` or `MIN:MAX:STEPS`. Flags override the config file.
#[derive(Args)]
struct Common {
    /// JSON spec file.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    h: Option<Axis>,
    #[arg(long)]
    lambda: Option<Axis>,
    #[arg(long = "vb")]
    v_b: Option<Axis>,
    #[arg(long)]
    gamma: Option<Axis>,
    #[arg(long)]
    mu0: Option<Axis>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    format: Option<Format>,
    #[arg(long)]
    seed: Option<u64>,
    /// Monte-Carlo draws per point (verify).
    #[arg(long)]
    draws: Option<u64>,
    /// Price-grid size of the grid oracle (verify).
    #[arg(long)]
    grid_points: Option<usize>,
}

impl Common {
    fn spec(self, mode: Mode) -> Result<SweepSpec, String> {
        let mut spec = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                SweepSpec::from_json(&text).map_err(|e| e.to_string())?
            }
            None => SweepSpec::default(),
        };
        spec.mode = mode;
        macro_rules! set {
            ($($f:ident),*) => { $( if let Some(x) = self.$f { spec.$f = x; } )* };
        }
        set!(h, lambda, v_b, gamma, mu0, format, seed, draws, grid_points);
        if self.out.is_some() {
            spec.out = self.out;
        }
        spec.validate().map_err(|e| e.to_string())?;
        Ok(spec)
    }
}

fn write(spec: &SweepSpec, text: &str) -> std::io::Result<()> {
    match &spec.out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, mode, curves) = match cli.command {
        Command::Solve(c) => (c, Mode::Solve, false),
        Command::Sweep(c) => (c, Mode::Sweep, false),
        Command::Regions(c) => (c, Mode::Regions, false),
        Command::Compare { common, curves } => (common, Mode::Compare, curves),
        Command::Thresholds(c) => (c, Mode::Thresholds, false),
        Command::Verify(c) => (c, Mode::Verify, false),
    };
    let spec = match common.spec(mode) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = if curves {
        emit_profit_curves(&spec).map(|table| Report { table, failures: 0 })
    } else {
        run(&spec)
    };
    let report = match report {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = write(&spec, &report.render(spec.format)) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::FAILURE;
    }
    if report.failures > 0 {
        eprintln!(
            "verification failed at {} of {} points",
            report.failures,
            report.table.rows.len()
        );
        return ExitCode::from(3);
    }
    ExitCode::SUCCESS
}
