use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ruled_walls::moduli::{classify_moduli, xi_ray};
use ruled_walls::report::config::{parse_caps_override, Instance, InstanceConfig};
use ruled_walls::report::document::{chambers_document, family_walls, render, run_report, walls_document};
use ruled_walls::report::grid::{ext1_failures, run_grid};
use ruled_walls::report::svg::{render_svg, Shading};
use ruled_walls::report::ReportError;
use ruled_walls::QuadraticNumber;

#[derive(Parser)]
#[command(name = "ruled-walls", version, about = "Walls, chambers and moduli verdicts on ruled threefolds over P²")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Instance file (TOML).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Write the JSON document here instead of stdout.
    #[arg(long, global = true)]
    json: Option<PathBuf>,

    /// Write the figure here.
    #[arg(long, global = true)]
    svg: Option<PathBuf>,

    /// Override enumeration caps, e.g. `a=10,b=40`.
    #[arg(long, global = true)]
    caps: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Wall classes around the family's central wall.
    Walls,
    /// Chamber decomposition with integer witnesses.
    Chambers,
    /// Full report: walls, chambers, verdicts, verification.
    Report,
    /// Grid check of the family statements.
    Verify {
        /// Largest c1' in the grid.
        #[arg(long, default_value_t = 3)]
        c1_max: i64,
        /// Number of b values per base.
        #[arg(long, default_value_t = 20)]
        b_span: i64,
    },
    /// Cone figure only.
    Plot,
}

fn load(cli: &Cli) -> Result<Instance, ReportError> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| ReportError::Validation("--config <path> is required".into()))?;
    let mut inst = InstanceConfig::load(path)?.validate()?;
    if let Some(spec) = &cli.caps {
        inst.caps = parse_caps_override(spec, inst.caps)?;
    }
    Ok(inst)
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), ReportError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| ReportError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn figure(inst: &Instance) -> Result<String, ReportError> {
    let (_, dec) = family_walls(inst)?;
    let reports = inst
        .polarizations
        .iter()
        .map(|l| classify_moduli(&inst.x, &inst.family, l))
        .collect::<Result<Vec<_>, _>>()?;
    let b = inst.family.b;
    let shading = match (xi_ray(&inst.x, b), xi_ray(&inst.x, b + 1)) {
        (Some(ray_b), Some(ray_next)) => Some(Shading {
            prime_lo: xi_ray(&inst.x, b - 1).unwrap_or_else(QuadraticNumber::zero),
            ray_b,
            ray_next,
        }),
        _ => None,
    };
    Ok(render_svg(&dec, &reports, shading.as_ref()))
}

fn run(cli: &Cli) -> Result<bool, ReportError> {
    match &cli.command {
        Command::Walls => {
            let inst = load(cli)?;
            write_out(cli.json.as_deref(), &render(&walls_document(&inst)?))?;
        }
        Command::Chambers => {
            let inst = load(cli)?;
            write_out(cli.json.as_deref(), &render(&chambers_document(&inst)?))?;
        }
        Command::Report => {
            let inst = load(cli)?;
            let doc = render(&run_report(&inst)?);
            let json_path = cli.json.clone().or_else(|| inst.json_path.clone());
            write_out(json_path.as_deref(), &doc)?;
            if let Some(svg_path) = cli.svg.clone().or_else(|| inst.svg_path.clone()) {
                write_out(Some(&svg_path), &figure(&inst)?)?;
            }
        }
        Command::Plot => {
            let inst = load(cli)?;
            let svg_path = cli.svg.clone().or_else(|| inst.svg_path.clone());
            write_out(svg_path.as_deref(), &figure(&inst)?)?;
        }
        Command::Verify { c1_max, b_span } => {
            let a_max = match &cli.caps {
                Some(spec) => parse_caps_override(spec, ruled_walls::walls::Caps { a_max: 10, b_max: 1 })?.a_max,
                None => 10,
            };
            let outcomes = run_grid(*c1_max, *b_span, a_max, 4)?;
            let mut ok = true;
            for o in &outcomes {
                if o.failures.is_empty() {
                    println!("[PASS] c1'={} c2'={} b={}", o.c1p, o.c2p, o.b);
                } else {
                    ok = false;
                    println!("[FAIL] c1'={} c2'={} b={}: {}", o.c1p, o.c2p, o.b, o.failures.join("; "));
                }
            }
            let bad = ext1_failures(50)?;
            if bad.is_empty() {
                println!("[PASS] ext1 table for b in 1..=50");
            } else {
                ok = false;
                println!("[FAIL] ext1 table for b in {bad:?}");
            }
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
