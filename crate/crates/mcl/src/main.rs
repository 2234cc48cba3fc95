//! Command-line front end: chamber classification, the wall-crossing walk,
//! chamber diagrams, Gröbner-basis and ideal calculations, Hilbert data,
//! pencil counts, and the full fixture replay.

use clap::{Args, Parser, Subcommand};
use mcl::cones::{self, diagram::DiagramFormat, Space};
use mcl::exact::Rat;
use mcl::ideal::hilbert::{degree_genus, hilbert_function, hilbert_polynomial};
use mcl::ideal::{self, groebner, Ideal};
use mcl::picard::ExtendedAlpha;
use mcl::poly::{parse::parse_poly, MonomialOrder, PolyRing, Ring};
use mcl::verify::{self, pencil::count_reducible_members, pencil::PencilSpec};
use std::error::Error;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "mcl",
    about = "Exact Mori-chamber and ideal computations for the space of twisted cubics",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Replay every recorded claim and report expected vs computed values.
    VerifyPaper {
        /// Only run fixtures whose id matches this glob (unanchored).
        #[arg(long)]
        filter: Option<String>,
        /// Emit the machine-readable JSON report.
        #[arg(long)]
        json: bool,
    },
    /// Classify a slope: stable base locus on the chosen space and log model.
    Classify {
        /// Slope alpha of H + alpha*Delta ("p/q" or "inf").
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value = "kontsevich")]
        space: Space,
    },
    /// Walk the slope downward and print the models and wall crossings.
    Walk {
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long)]
        json: bool,
    },
    /// Render the chamber decomposition of the effective cone.
    Diagram {
        #[arg(long, default_value = "kontsevich")]
        space: Space,
        #[arg(long, default_value = "text")]
        format: DiagramFormat,
        /// Output file (stdout when absent).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Reduced Gröbner basis of the ideal in FILE (or stdin).
    Gb {
        #[command(flatten)]
        ring: RingArgs,
        /// Monomial order: lex, grlex, or grevlex.
        #[arg(long, default_value = "grevlex")]
        order: String,
        file: Option<PathBuf>,
    },
    /// Ideal operations on files of generators (one polynomial per line).
    Ideal {
        #[command(subcommand)]
        op: IdealOp,
    },
    /// Hilbert data of a homogeneous ideal.
    Hilbert {
        #[command(flatten)]
        ring: RingArgs,
        /// Print the fitted linear Hilbert polynomial.
        #[arg(long, conflicts_with = "function")]
        poly: bool,
        /// Print dim (R/I)_d for this degree.
        #[arg(long)]
        function: Option<u32>,
        file: Option<PathBuf>,
    },
    /// Validate a pencil spec and count its reducible members.
    Pencil {
        #[arg(long)]
        spec: PathBuf,
    },
}

#[derive(Subcommand)]
enum IdealOp {
    /// Whether the two ideals are equal.
    Eq {
        #[command(flatten)]
        ring: RingArgs,
        lhs: PathBuf,
        rhs: PathBuf,
    },
    /// Reduced generators of the intersection.
    Intersect {
        #[command(flatten)]
        ring: RingArgs,
        lhs: PathBuf,
        rhs: PathBuf,
    },
    /// Reduced generators of the ideal quotient (lhs : rhs).
    Quotient {
        #[command(flatten)]
        ring: RingArgs,
        lhs: PathBuf,
        rhs: PathBuf,
    },
    /// Saturation (lhs : rhs^∞) with its stabilization exponent.
    Saturate {
        #[command(flatten)]
        ring: RingArgs,
        lhs: PathBuf,
        rhs: PathBuf,
    },
    /// Eliminate the named variables.
    Eliminate {
        #[command(flatten)]
        ring: RingArgs,
        file: PathBuf,
        /// Variables to eliminate.
        #[arg(required = true, value_name = "VAR")]
        eliminated: Vec<String>,
    },
    /// Whether the polynomial lies in the ideal.
    Member {
        #[command(flatten)]
        ring: RingArgs,
        file: PathBuf,
        #[arg(long)]
        poly: String,
    },
}

#[derive(Args)]
struct RingArgs {
    /// Ring variables, comma-separated.
    #[arg(long, default_value = "X,Y,Z,W")]
    vars: String,
}

impl RingArgs {
    fn ring(&self, order: MonomialOrder) -> Result<Ring, Box<dyn Error>> {
        let vars: Vec<&str> = self.vars.split(',').map(|v| v.trim()).collect();
        Ok(PolyRing::new(&vars, order)?)
    }
}

fn parse_order(name: &str) -> Result<MonomialOrder, Box<dyn Error>> {
    match name {
        "lex" => Ok(MonomialOrder::Lex),
        "grlex" => Ok(MonomialOrder::GrLex),
        "grevlex" => Ok(MonomialOrder::GrevLex),
        other => Err(format!("unknown order `{other}` (lex|grlex|grevlex)").into()),
    }
}

fn read_source(file: &Option<PathBuf>) -> Result<String, Box<dyn Error>> {
    match file {
        Some(path) if path.as_os_str() != "-" => Ok(std::fs::read_to_string(path)?),
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

/// One polynomial per line; `#` starts a comment.
fn parse_ideal_text(text: &str, ring: &Ring) -> Result<Ideal, Box<dyn Error>> {
    let mut gens = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        gens.push(parse_poly(line, ring)?);
    }
    Ok(Ideal::new(ring, gens))
}

fn load_ideal(path: &PathBuf, ring: &Ring) -> Result<Ideal, Box<dyn Error>> {
    let text = std::fs::read_to_string(path)?;
    parse_ideal_text(&text, ring).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn print_gens(ideal: &Ideal) {
    if ideal.is_zero_ideal() {
        println!("0");
        return;
    }
    for g in ideal.gens() {
        println!("{g}");
    }
}

fn emit(output: &Option<PathBuf>, content: &str) -> Result<(), Box<dyn Error>> {
    match output {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn run() -> Result<ExitCode, Box<dyn Error>> {
    let cli = Cli::parse();
    match cli.command {
        Command::VerifyPaper { filter, json } => {
            let report = verify::verify_all(filter.as_deref());
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_table());
            }
            return Ok(if report.all_ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            });
        }
        Command::Classify { alpha, space } => {
            let alpha: ExtendedAlpha = alpha.parse()?;
            let doc = serde_json::json!({
                "alpha": alpha.to_string(),
                "base_locus": cones::base_locus_at(&alpha, space).json_name(),
                "model": cones::log_model(&alpha).json_name(),
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Command::Walk { from, to, json } => {
            let from: Rat = from.parse()?;
            let to: Rat = to.parse()?;
            let walk = cones::mmp_walk(&from, &to)?;
            if json {
                let segments: Vec<serde_json::Value> = walk
                    .segments
                    .iter()
                    .map(|seg| {
                        let steps: Vec<serde_json::Value> = seg
                            .exit
                            .iter()
                            .flat_map(|cross| {
                                cross.steps.iter().map(|s| {
                                    serde_json::json!({
                                        "wall": cross.wall,
                                        "at": cross.at.to_string(),
                                        "map": s.map_name,
                                        "transition": s.transition.to_string(),
                                        "reverse": s.reverse,
                                    })
                                })
                            })
                            .collect();
                        serde_json::json!({
                            "model": seg.model.json_name(),
                            "interval": seg.interval.to_string(),
                            "exit": steps,
                        })
                    })
                    .collect();
                let doc = serde_json::json!({
                    "from": walk.from.to_string(),
                    "to": walk.to.to_string(),
                    "segments": segments,
                });
                println!("{}", serde_json::to_string_pretty(&doc)?);
            } else {
                for seg in &walk.segments {
                    println!("model {} on {}", seg.model, seg.interval);
                    if let Some(cross) = &seg.exit {
                        for step in &cross.steps {
                            println!("  wall {} at alpha = {}: {step}", cross.wall, cross.at);
                        }
                    }
                }
            }
        }
        Command::Diagram {
            space,
            format,
            output,
        } => {
            emit(&output, &cones::diagram::render(space, format))?;
        }
        Command::Gb { ring, order, file } => {
            let order = parse_order(&order)?;
            let ring = ring.ring(order)?;
            let ideal = parse_ideal_text(&read_source(&file)?, &ring)?;
            let gb = groebner(&ideal, order);
            for g in gb.basis() {
                println!("{g}");
            }
        }
        Command::Ideal { op } => return run_ideal_op(op),
        Command::Hilbert {
            ring,
            poly,
            function,
            file,
        } => {
            let ring = ring.ring(MonomialOrder::GrevLex)?;
            let ideal = parse_ideal_text(&read_source(&file)?, &ring)?;
            match (poly, function) {
                (_, Some(d)) => {
                    println!("{}", hilbert_function(&ideal, d)?);
                }
                _ => {
                    let hd = hilbert_polynomial(&ideal)?;
                    println!("HP(t) = {}", hd.hp_string());
                    println!("stabilizes at degree {}", hd.stabilization);
                    if let Ok((deg, genus)) = degree_genus(&hd) {
                        println!("degree {deg}, arithmetic genus {genus}");
                    }
                }
            }
        }
        Command::Pencil { spec } => {
            let text = std::fs::read_to_string(&spec)?;
            let spec = PencilSpec::parse(&text)?;
            spec.validate()?;
            let (count, members) = count_reducible_members(&spec)?;
            println!("reducible members: {count}");
            for m in &members {
                println!("  {m}  line {}", m.line);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_ideal_op(op: IdealOp) -> Result<ExitCode, Box<dyn Error>> {
    let order = MonomialOrder::GrevLex;
    match op {
        IdealOp::Eq { ring, lhs, rhs } => {
            let ring = ring.ring(order)?;
            let eq = ideal::ideal_equal(&load_ideal(&lhs, &ring)?, &load_ideal(&rhs, &ring)?)?;
            println!("{eq}");
        }
        IdealOp::Intersect { ring, lhs, rhs } => {
            let ring = ring.ring(order)?;
            let out = ideal::intersect(&load_ideal(&lhs, &ring)?, &load_ideal(&rhs, &ring)?)?;
            print_gens(&out);
        }
        IdealOp::Quotient { ring, lhs, rhs } => {
            let ring = ring.ring(order)?;
            let out = ideal::quotient(&load_ideal(&lhs, &ring)?, &load_ideal(&rhs, &ring)?)?;
            print_gens(&out);
        }
        IdealOp::Saturate { ring, lhs, rhs } => {
            let ring = ring.ring(order)?;
            let (out, exponent) =
                ideal::saturate(&load_ideal(&lhs, &ring)?, &load_ideal(&rhs, &ring)?)?;
            print_gens(&out);
            println!("exponent: {exponent}");
        }
        IdealOp::Eliminate { ring, file, vars } => {
            let ring = ring.ring(order)?;
            let names: Vec<&str> = vars.iter().map(|v| v.as_str()).collect();
            let out = ideal::eliminate(&load_ideal(&file, &ring)?, &names)?;
            print_gens(&out);
        }
        IdealOp::Member { ring, file, poly } => {
            let ring = ring.ring(order)?;
            let f = parse_poly(&poly, &ring)?;
            let ideal = load_ideal(&file, &ring)?;
            println!("{}", ideal::contains(&ideal, &f)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}
