use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use aperiodica_core::analysis::{group_ball, orientation_spectrum};
use aperiodica_core::catalog::system_by_name;
use aperiodica_core::hyperbolic::{
    build_region, count_centers_per_tile, disk_centers, Choice, HalfPlaneWindow, Packing,
};
use aperiodica_core::io::{
    group_csv, hyperbolic_json, hyperbolic_svg, spectrum_csv, tiles_json, tiles_obj, tiles_svg,
    HyperbolicStyle,
};
use aperiodica_core::substitution::{expand, verify_partition, Window};
use aperiodica_core::SubstitutionSystem;

/// Environment variable naming the directory for outputs written without `--out`.
const OUT_DIR_VAR: &str = "APERIODICA_OUT_DIR";

#[derive(Parser)]
#[command(name = "aperiodica", version, about = "Substitution tilings and the hyperbolic binary tiling")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render a level-n supertile (optionally clipped to a window).
    Generate {
        /// thue-morse, pinwheel, kite-dart or quaquaversal.
        system: String,
        #[arg(long)]
        level: usize,
        /// `x0,y0,x1,y1` (planar) or `x0,y0,z0,x1,y1,z1` (spatial).
        #[arg(long)]
        window: Option<String>,
        #[arg(long, value_enum)]
        format: TileFormat,
        /// Prototile id of the root supertile.
        #[arg(long, default_value_t = 0)]
        root: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Orientation counts per level as CSV.
    Stats {
        system: String,
        #[arg(long)]
        max_level: usize,
        #[arg(long, default_value_t = 0)]
        root: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ball sizes of the group generated by 2pi/p and 2pi/q rotations about orthogonal axes.
    Group {
        p: u32,
        q: u32,
        max_word_length: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render part of the binary tiling and its disk packing.
    Hyperbolic {
        /// `x0,y0,x1,y1` with y0 > 0.
        #[arg(long)]
        window: String,
        /// Parent choices from the primary tile upwards, e.g. `LRRL`.
        #[arg(long, default_value = "")]
        choices: String,
        #[arg(long, value_enum, default_value_t = PackingArg::None)]
        packing: PackingArg,
        #[arg(long, value_enum)]
        format: HyperFormat,
        /// Draw the bumps that fix how tiles fit.
        #[arg(long)]
        decorations: bool,
        /// Hyperbolic radius of drawn disks.
        #[arg(long, default_value_t = 0.2)]
        radius: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that every rule of a system partitions its parent.
    Verify {
        system: String,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Translate this child of the first rule before checking.
        #[arg(long, hide = true)]
        perturb_child: Option<usize>,
        #[arg(long, hide = true, default_value_t = 0.01)]
        perturb_offset: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TileFormat {
    Svg,
    Obj,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum HyperFormat {
    Svg,
    Json,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum PackingArg {
    None,
    Original,
    Shifted,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    if let Some(n) = cli.workers {
        if n == 0 {
            bail!("--workers must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring worker threads")?;
    }
    match cli.command {
        Command::Generate {
            system,
            level,
            window,
            format,
            root,
            out,
        } => {
            let sys = system_by_name(&system)?;
            let window = window.map(|w| parse_window(&w, sys.dimension)).transpose()?;
            let tiles = expand(&sys, root, level, window.as_ref())?;
            let (text, ext) = match format {
                TileFormat::Svg => (tiles_svg(&sys, &tiles)?, "svg"),
                TileFormat::Obj => (tiles_obj(&sys, &tiles)?, "obj"),
                TileFormat::Json => (tiles_json(&sys, level, &tiles), "json"),
            };
            let path = output_path(out, &format!("{system}-level{level}.{ext}"));
            write(&path, &text)?;
            println!("wrote {} tiles to {}", tiles.len(), path.display());
        }
        Command::Stats {
            system,
            max_level,
            root,
            out,
        } => {
            let sys = system_by_name(&system)?;
            let rows = orientation_spectrum(&sys, root, max_level)?;
            let path = output_path(out, &format!("{system}-stats.csv"));
            write(&path, &spectrum_csv(&rows))?;
            println!("wrote {} rows to {}", rows.len(), path.display());
        }
        Command::Group {
            p,
            q,
            max_word_length,
            out,
        } => {
            if max_word_length == 0 {
                bail!("max word length must be at least 1");
            }
            let rows = group_ball(p, q, max_word_length)?;
            let path = output_path(out, &format!("group-{p}-{q}.csv"));
            write(&path, &group_csv(&rows))?;
            let last = rows.last().expect("at least one row");
            println!(
                "G({p},{q}): {} elements up to word length {max_word_length}, closed={}; wrote {}",
                last.distinct_elements,
                last.closed,
                path.display()
            );
        }
        Command::Hyperbolic {
            window,
            choices,
            packing,
            format,
            decorations,
            radius,
            out,
        } => {
            let v = parse_numbers(&window, 4)?;
            let w = HalfPlaneWindow::new(v[0], v[1], v[2], v[3])?;
            let choices = parse_choices(&choices)?;
            let tiles = build_region(&choices, &w)?;
            let packing = match packing {
                PackingArg::None => None,
                PackingArg::Original => Some(Packing::Original),
                PackingArg::Shifted => Some(Packing::Shifted),
            };
            let centers = packing.map(|p| disk_centers(&tiles, p)).unwrap_or_default();
            let (text, ext) = match format {
                HyperFormat::Svg => {
                    let style = HyperbolicStyle {
                        disk_radius: radius,
                        decorations,
                    };
                    (hyperbolic_svg(&tiles, &centers, style), "svg")
                }
                HyperFormat::Json => {
                    let counts = count_centers_per_tile(&tiles, &centers);
                    let doc = hyperbolic_json(
                        &tiles,
                        packing.map(|p| (p, &centers[..], &counts.counts[..], counts.outside)),
                    );
                    (doc, "json")
                }
            };
            let path = output_path(out, &format!("hyperbolic.{ext}"));
            write(&path, &text)?;
            println!(
                "wrote {} tiles and {} disks to {}",
                tiles.len(),
                centers.len(),
                path.display()
            );
        }
        Command::Verify {
            system,
            samples,
            tolerance,
            seed,
            perturb_child,
            perturb_offset,
        } => {
            if samples == 0 {
                bail!("--samples must be at least 1");
            }
            let mut sys = system_by_name(&system)?;
            if let Some(i) = perturb_child {
                perturb(&mut sys, i, perturb_offset)?;
            }
            return verify(&sys, samples, tolerance, seed);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(sys: &SubstitutionSystem, samples: usize, tolerance: f64, seed: u64) -> anyhow::Result<ExitCode> {
    let mut ok = true;
    for p in &sys.prototiles {
        let r = verify_partition(sys, p.id, samples, tolerance, seed)?;
        let pass = r.passed(tolerance);
        ok &= pass;
        println!(
            "{} rule {}: residual {:+.3e}, {} samples, {} near boundaries, {} violations: {}",
            sys.name,
            p.label,
            r.area_residual,
            r.samples,
            r.boundary_rejections,
            r.multiplicity_violations,
            if pass { "PASS" } else { "FAIL" }
        );
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn perturb(sys: &mut SubstitutionSystem, child: usize, offset: f64) -> anyhow::Result<()> {
    let rule = &mut sys.rules[0];
    let n = rule.children.len();
    let c = rule
        .children
        .get_mut(child)
        .ok_or_else(|| anyhow!("rule has {n} children, no child {child}"))?;
    c.placement = c.placement.translated([offset, 0.0, 0.0]);
    Ok(())
}

fn parse_numbers(text: &str, n: usize) -> anyhow::Result<Vec<f64>> {
    let v: Vec<f64> = text
        .split(',')
        .map(|s| s.trim().parse::<f64>().with_context(|| format!("bad number `{s}`")))
        .collect::<anyhow::Result<_>>()?;
    if v.len() != n {
        bail!("expected {n} comma-separated numbers, got {}", v.len());
    }
    Ok(v)
}

fn parse_window(text: &str, dimension: usize) -> anyhow::Result<Window> {
    let v = parse_numbers(text, 2 * dimension)?;
    Ok(if dimension == 2 {
        Window::planar(v[0], v[1], v[2], v[3])?
    } else {
        Window::new([v[0], v[1], v[2]], [v[3], v[4], v[5]])?
    })
}

fn parse_choices(text: &str) -> anyhow::Result<Vec<Choice>> {
    text.chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .map(|c| match c.to_ascii_uppercase() {
            'L' => Ok(Choice::LeftChild),
            'R' => Ok(Choice::RightChild),
            _ => Err(anyhow!("choices use L and R, found `{c}`")),
        })
        .collect()
}

fn output_path(out: Option<PathBuf>, default_name: &str) -> PathBuf {
    out.unwrap_or_else(|| {
        let dir = std::env::var_os(OUT_DIR_VAR).map_or_else(|| PathBuf::from("."), PathBuf::from);
        dir.join(default_name)
    })
}

fn write(path: &Path, text: &str) -> anyhow::Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
