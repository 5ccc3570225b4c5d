use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ruled4::check::check_mesh;
use ruled4::export::{self, write_file, Format};
use ruled4::{load_scene, sample_grid};
use ruled4_core::octonion::MulTable;

#[derive(Parser)]
#[command(name = "ruled4", version, about = "2-ruled hypersurfaces in Minkowski 4-space")]
struct Cli {
    /// Worker threads for grid evaluation (default: all cores).
    #[arg(long, env = "RULED4_THREADS", global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Obj,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check flatness, minimality, Laplace-Beltrami and consistency claims.
    Check {
        scene: PathBuf,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample the grid and write a mesh.
    Mesh {
        scene: PathBuf,
        /// Coordinate axis dropped for OBJ output (0..3); defaults to the scene option.
        #[arg(long)]
        project: Option<usize>,
        #[arg(long, value_enum, default_value = "obj")]
        format: FormatArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Full per-vertex JSON report with the discrepancy ledger.
    Report {
        scene: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Octonion multiplication table as CSV.
    Octtable {
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global()?;
    }
    match cli.command {
        Command::Check { scene, out } => {
            let scene = load_scene(&scene)?;
            let mesh = sample_grid(&scene.surface, &scene.config.axes());
            let report = check_mesh(&scene, &mesh);
            let mut text = serde_json::to_string_pretty(&report)?;
            text.push('\n');
            match out {
                Some(path) => write_file(&path, &text)?,
                None => print!("{text}"),
            }
            for c in &report.claims {
                eprintln!("{:<24} {:?}", c.name, c.verdict);
            }
            Ok(if report.ok() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Mesh { scene, project, format, out } => {
            let scene = load_scene(&scene)?;
            let drop_axis = project.unwrap_or(scene.config.options.projection);
            let mesh = sample_grid(&scene.surface, &scene.config.axes());
            let format = match format {
                FormatArg::Obj => Format::Obj,
                FormatArg::Csv => Format::Csv,
                FormatArg::Json => Format::Json,
            };
            let ledger = match format {
                Format::Json => check_mesh(&scene, &mesh).ledger,
                _ => Default::default(),
            };
            export::export(&scene.config.name, &mesh, &ledger, format, drop_axis, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Report { scene, out } => {
            let scene = load_scene(&scene)?;
            let mesh = sample_grid(&scene.surface, &scene.config.axes());
            let ledger = check_mesh(&scene, &mesh).ledger;
            export::export(&scene.config.name, &mesh, &ledger, Format::Json, 0, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Octtable { out } => {
            write_file(&out, &MulTable::standard().to_csv())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
