//! `handleslide` command-line tool.
//!
//! Exit codes: 0 on success (or "equivalent"), 1 for "not equivalent",
//! 2 for invalid input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use handleslide::io::{format_coloring, format_triangulation, load_coloring, load_triangulation};
use handleslide::render::render_link;
use handleslide::{
    all_slides, bands, components, corner_numbers, equivalent, minimal_set, random_representative,
    reduce, replay, standard_surface, strip_peripherals, trace, unique_minimizer, Bands, Coloring,
    SlideStep, Triangulation, Uniqueness,
};

#[derive(Parser)]
#[command(name = "handleslide", version, about = "Least-weight curves on once-punctured surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a triangulation file and summarize it.
    Validate { triangulation: PathBuf },
    /// Print the standard triangulation of a once-punctured genus-g surface.
    Gen {
        #[arg(long)]
        genus: usize,
    },
    /// Show corner numbers, bands and components of a coloring.
    Analyze {
        triangulation: PathBuf,
        coloring: PathBuf,
        /// Also slide every band and report the measured weight change.
        #[arg(long)]
        slides: bool,
        /// Comma-separated band start positions to slide first (after
        /// stripping peripheral curves), e.g. a certificate path.
        #[arg(long, value_delimiter = ',')]
        apply: Vec<usize>,
    },
    /// Reduce a coloring to least weight.
    Reduce {
        triangulation: PathBuf,
        coloring: PathBuf,
    },
    /// List every least-weight representative.
    Minset {
        triangulation: PathBuf,
        coloring: PathBuf,
    },
    /// Decide whether two colorings represent the same closed-surface diagram.
    Equiv {
        triangulation: PathBuf,
        first: PathBuf,
        second: PathBuf,
    },
    /// Produce an equivalent coloring by random slides.
    RandomRep {
        triangulation: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Draw the vertex link with its bands.
    Render {
        triangulation: PathBuf,
        coloring: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load_pair(tri: &Path, col: &Path) -> Result<(Triangulation, Coloring)> {
    let t = load_triangulation(tri).with_context(|| format!("reading {}", tri.display()))?;
    let c = load_coloring(&t, col).with_context(|| format!("reading {}", col.display()))?;
    Ok((t, c))
}

fn path_of(steps: &[SlideStep]) -> String {
    steps
        .iter()
        .map(|s| s.band.start.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Validate { triangulation } => {
            let tri = load_triangulation(&triangulation)
                .with_context(|| format!("reading {}", triangulation.display()))?;
            println!(
                "valid: triangles {} edges {} link {} genus {}",
                tri.triangle_count(),
                tri.edge_count(),
                tri.link().len(),
                tri.genus()
            );
            let antipodal: Vec<String> = tri.antipodal_edges().iter().map(|e| e.to_string()).collect();
            println!("antipodal edges: {}", antipodal.join(" "));
        }
        Command::Gen { genus } => {
            print!("{}", format_triangulation(&standard_surface(genus)?));
        }
        Command::Analyze {
            triangulation,
            coloring,
            slides,
            apply,
        } => {
            let (tri, mut f) = load_pair(&triangulation, &coloring)?;
            if !apply.is_empty() {
                f = replay(&tri, &f, &apply)?;
                println!("applied {}", apply.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(","));
            }
            analyze(&tri, &f, slides)?;
        }
        Command::Reduce {
            triangulation,
            coloring,
        } => {
            let (tri, f) = load_pair(&triangulation, &coloring)?;
            let t = reduce(&tri, &f)?;
            println!("input {} weight {}", t.initial, t.initial.weight());
            println!("peripheral {}", t.peripheral_count);
            println!("stripped {} weight {}", t.stripped, t.stripped.weight());
            for (i, s) in t.steps.iter().enumerate() {
                println!("step {}: {}", i + 1, s);
            }
            println!("final {} weight {}", t.final_coloring, t.final_coloring.weight());
            println!("path {}", path_of(&t.steps));
            println!("plateau_used {}", t.plateau_used);
        }
        Command::Minset {
            triangulation,
            coloring,
        } => {
            let (tri, f) = load_pair(&triangulation, &coloring)?;
            let m = minimal_set(&tri, &f)?;
            println!("weight {}", m.weight);
            println!("peripheral {}", m.peripheral_count);
            println!("members {}", m.len());
            let reduction = &m.reduction.steps;
            for (c, moves) in &m.members {
                let mut path = reduction.clone();
                path.extend(moves.iter().cloned());
                println!("{c}  path {}", path_of(&path));
            }
            match unique_minimizer(&tri, &f)? {
                Uniqueness::GuaranteedUnique => println!("uniqueness guaranteed"),
                Uniqueness::NotGuaranteed(reasons) => {
                    let r: Vec<String> = reasons.iter().map(|r| r.to_string()).collect();
                    println!("uniqueness not guaranteed: {}", r.join("; "));
                }
            }
        }
        Command::Equiv {
            triangulation,
            first,
            second,
        } => {
            let (tri, f) = load_pair(&triangulation, &first)?;
            let g = load_coloring(&tri, &second).with_context(|| format!("reading {}", second.display()))?;
            let v = equivalent(&tri, &f, &g)?;
            println!("equivalent {}", if v.equivalent { "yes" } else { "no" });
            println!("peripheral {} {}", v.peripheral_counts.0, v.peripheral_counts.1);
            println!("minimal_weight {} {}", v.minimal_weights.0, v.minimal_weights.1);
            if let Some(cert) = &v.certificate {
                println!("common {}", cert.common);
                println!("certificate first: {}", path_of(&cert.from_first));
                println!("certificate second: {}", path_of(&cert.from_second));
            }
            return Ok(if v.equivalent {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
        Command::RandomRep {
            triangulation,
            coloring,
            steps,
            seed,
        } => {
            let (tri, f) = load_pair(&triangulation, &coloring)?;
            print!("{}", format_coloring(&random_representative(&tri, &f, steps, seed)?));
        }
        Command::Render {
            triangulation,
            coloring,
            format: Format::Svg,
        } => {
            let (tri, f) = load_pair(&triangulation, &coloring)?;
            print!("{}", render_link(&tri, &f));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn analyze(tri: &Triangulation, f: &Coloring, with_slides: bool) -> Result<()> {
    let link = tri.link();
    let n = link.len();
    println!(
        "triangles {} edges {} link {}",
        tri.triangle_count(),
        tri.edge_count(),
        n
    );
    println!("coloring {} weight {}", f, f.weight());
    let cn = corner_numbers(tri, f).in_link_order(tri);
    let found = bands(tri, f);
    println!("link:");
    println!("  pos  corner  number  then-edge  status");
    for (k, &value) in cn.iter().enumerate() {
        let status = if value == 0 {
            "gap".to_string()
        } else {
            match found.as_slice().iter().find(|b| b.contains(k, n)) {
                Some(b) => format!("band@{}", b.start),
                None => "no-gaps".to_string(),
            }
        };
        println!(
            "  {:<4} {:<7} {:<7} {:<10} {}",
            k,
            link.corner(k).to_string(),
            value,
            link.crossing_edge(k),
            status
        );
    }
    match &found {
        Bands::NoGaps => {
            let (stripped, count) = strip_peripherals(tri, f);
            println!("bands: none (no gaps; {count} peripheral curve(s), stripped {stripped})");
        }
        Bands::Maximal(list) => {
            println!("bands {}:", list.len());
            for b in list {
                println!(
                    "  {} gaps {} {}",
                    b,
                    b.left_gap(n),
                    b.right_gap(n)
                );
            }
        }
    }
    let comps = components(tri, &trace(tri, f));
    println!("components {}:", comps.len());
    for (i, c) in comps.iter().enumerate() {
        println!(
            "  {}: visits {} coloring {}{}",
            i,
            c.visits.len(),
            c.coloring,
            if c.peripheral { " peripheral" } else { "" }
        );
    }
    if with_slides {
        if matches!(found, Bands::NoGaps) {
            println!("slides: none (strip peripheral curves first)");
        } else {
            println!("slides:");
            for (b, r) in all_slides(tri, f)? {
                println!(
                    "  {} delta {:+} cascades {} -> {}",
                    b, r.delta, r.cascades, r.coloring
                );
            }
        }
    }
    Ok(())
}
