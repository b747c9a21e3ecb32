//! Command-line front end. Thin argument handling only; all logic lives in
//! the library.
//!
//! Exit codes: 0 success, 1 malformed input or usage error, 2 infeasible
//! decision (a decider or verifier answered "no").

use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use klcenter::cluster::{self, ClusterParams, DecideOutcome};
use klcenter::frechet::{continuous_frechet, discrete_frechet, Metric, PolyCurve};
use klcenter::hardness::{self, ScsInstance, Variant};
use klcenter::io::{
    read_curves_csv, read_curves_jsonl, write_curves_geojson, write_curves_jsonl, InstanceSidecar,
};
use klcenter::simplify;
use klcenter::DEFAULT_TOL;

#[derive(Parser)]
#[command(name = "klcenter", about = "(k,l)-center clustering of polygonal curves", version)]
struct Cli {
    /// Also write curve output as GeoJSON (next to --output, or to stdout).
    #[arg(long, global = true)]
    emit_geojson: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum MetricArg {
    Discrete,
    Continuous,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Metric {
        match m {
            MetricArg::Discrete => Metric::Discrete,
            MetricArg::Continuous => Metric::Continuous,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum VariantArg {
    #[value(name = "1d-discrete")]
    OneDDiscrete,
    #[value(name = "1d-continuous")]
    OneDContinuous,
    #[value(name = "2d-discrete")]
    TwoDDiscrete,
    #[value(name = "2d-continuous")]
    TwoDContinuous,
    #[value(name = "meb-1d-discrete")]
    MebOneDDiscrete,
    #[value(name = "meb-1d-continuous")]
    MebOneDContinuous,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::OneDDiscrete => Variant::OneDDiscrete,
            VariantArg::OneDContinuous => Variant::OneDContinuous,
            VariantArg::TwoDDiscrete => Variant::TwoDDiscrete,
            VariantArg::TwoDContinuous => Variant::TwoDContinuous,
            VariantArg::MebOneDDiscrete => Variant::MebOneDDiscrete,
            VariantArg::MebOneDContinuous => Variant::MebOneDContinuous,
        }
    }
}

#[derive(Args)]
struct ClusterArgs {
    /// Curve file (.jsonl, or .csv with id,x,y rows).
    input: PathBuf,
    #[arg(short)]
    k: usize,
    /// Center complexity bound.
    #[arg(long)]
    ell: usize,
    #[arg(long, value_enum, default_value = "discrete")]
    metric: MetricArg,
}

#[derive(Subcommand)]
enum Command {
    /// Fréchet distance between two curves.
    Distance {
        /// Curve file containing at least two curves.
        input: PathBuf,
        /// Ids of the two curves (defaults to the first two in the file).
        #[arg(long, num_args = 2)]
        ids: Option<Vec<String>>,
        #[arg(long, value_enum, default_value = "discrete")]
        metric: MetricArg,
    },
    /// Simplify each input curve.
    Simplify {
        input: PathBuf,
        /// Error bound: produce a minimum-complexity delta-simplification.
        #[arg(long, conflicts_with = "ell")]
        delta: Option<f64>,
        /// Complexity bound: produce a minimum-error l-simplification.
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long, value_enum, default_value = "discrete")]
        metric: MetricArg,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Approximate (k,l)-center clustering (Gonzalez-style, then a
    /// 3-approximate radius search over the decision procedure).
    Cluster(ClusterArgs),
    /// Decide approximately whether radius delta is achievable; exit code 2
    /// means "no clustering within 3*delta found".
    Decide {
        #[command(flatten)]
        common: ClusterArgs,
        #[arg(long)]
        delta: f64,
    },
    /// Generate a hard instance from a shortest-common-supersequence
    /// question.
    GenHard {
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Input strings over the alphabet {A,B}.
        #[arg(long, num_args = 1.., required = true)]
        strings: Vec<String>,
        /// Supersequence length bound.
        #[arg(long)]
        t: usize,
        /// Split t = j + j' for the minimum-enclosing-ball variants.
        #[arg(long, requires = "jp")]
        j: Option<usize>,
        #[arg(long, requires = "j")]
        jp: Option<usize>,
        /// Curve output path; a metadata sidecar is written next to it.
        #[arg(long, short)]
        output: PathBuf,
    },
    /// Recover a superstring from a center curve.
    Extract {
        /// Curve file holding the center (first curve is used).
        input: PathBuf,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Snapping radius for the planar extraction.
        #[arg(long, default_value_t = 2.59)]
        r: f64,
        /// Gadget repetition count of the instance (planar variants).
        #[arg(long, default_value_t = 0)]
        s: usize,
    },
    /// Check a center against a generated instance; exit code 2 on failure.
    Verify {
        /// Instance curve file (sidecar expected next to it).
        instance: PathBuf,
        /// Curve file holding the center (first curve is used).
        center: PathBuf,
        /// Radius to check (defaults to the instance target radius).
        #[arg(long)]
        delta: Option<f64>,
    },
}

fn tol() -> anyhow::Result<f64> {
    match std::env::var("FRECHET_TOL") {
        Ok(v) => {
            let t: f64 = v.parse().context("FRECHET_TOL must be a number")?;
            if t <= 0.0 {
                bail!("FRECHET_TOL must be positive");
            }
            Ok(t)
        }
        Err(_) => Ok(DEFAULT_TOL),
    }
}

fn read_curves(path: &Path) -> anyhow::Result<Vec<PolyCurve>> {
    let file = File::open(path).with_context(|| format!("open {}", path.display()))?;
    let curves = if path.extension().is_some_and(|e| e == "csv") {
        read_curves_csv(file)?
    } else {
        read_curves_jsonl(BufReader::new(file))?
    };
    Ok(curves)
}

fn write_curves(
    curves: &[PolyCurve],
    output: Option<&Path>,
    emit_geojson: bool,
) -> anyhow::Result<()> {
    match output {
        Some(path) => {
            let mut f = File::create(path)?;
            write_curves_jsonl(&mut f, curves)?;
            if emit_geojson {
                let mut g = File::create(path.with_extension("geojson"))?;
                write_curves_geojson(&mut g, curves)?;
            }
        }
        None => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            if emit_geojson {
                write_curves_geojson(&mut out, curves)?;
            } else {
                write_curves_jsonl(&mut out, curves)?;
            }
        }
    }
    Ok(())
}

fn pick_pair<'a>(
    curves: &'a [PolyCurve],
    ids: Option<&[String]>,
) -> anyhow::Result<(&'a PolyCurve, &'a PolyCurve)> {
    match ids {
        Some(ids) => {
            let find = |id: &str| {
                curves
                    .iter()
                    .find(|c| c.id == id)
                    .with_context(|| format!("no curve with id {:?}", id))
            };
            Ok((find(&ids[0])?, find(&ids[1])?))
        }
        None => {
            if curves.len() < 2 {
                bail!("need at least two curves");
            }
            Ok((&curves[0], &curves[1]))
        }
    }
}

/// Ok(true) = success, Ok(false) = infeasible decision (exit 2).
fn run(cli: Cli) -> anyhow::Result<bool> {
    let tol = tol()?;
    match cli.command {
        Command::Distance { input, ids, metric } => {
            let curves = read_curves(&input)?;
            let (a, b) = pick_pair(&curves, ids.as_deref())?;
            let d = match metric.into() {
                Metric::Discrete => discrete_frechet(a, b)?,
                Metric::Continuous => continuous_frechet(a, b, tol)?,
            };
            println!("{}", json!({"a": a.id, "b": b.id, "distance": d}));
            Ok(true)
        }
        Command::Simplify {
            input,
            delta,
            ell,
            metric,
            output,
        } => {
            let curves = read_curves(&input)?;
            let metric: Metric = metric.into();
            let mut simplified = Vec::new();
            for c in &curves {
                let res = match (delta, ell, metric) {
                    (Some(d), None, Metric::Discrete) => {
                        simplify::min_size_simplify_discrete(c, d)
                    }
                    (Some(d), None, Metric::Continuous) => {
                        simplify::min_size_simplify_continuous_vc(c, d)?
                    }
                    (None, Some(l), Metric::Discrete) => {
                        simplify::min_error_simplify_discrete(c, l)?
                    }
                    (None, Some(l), Metric::Continuous) => {
                        simplify::approx4_min_error_simplify_continuous(c, l)?
                    }
                    _ => bail!("exactly one of --delta and --ell is required"),
                };
                eprintln!(
                    "{}: {} -> {} vertices, error {}",
                    c.id,
                    c.complexity(),
                    res.complexity,
                    res.error
                );
                simplified.push(res.curve);
            }
            write_curves(&simplified, output.as_deref(), cli.emit_geojson)?;
            Ok(true)
        }
        Command::Cluster(args) => {
            let curves = read_curves(&args.input)?;
            let params = ClusterParams::new(args.k, args.ell, args.metric.into(), tol)?;
            let result = cluster::kl_center_search(&curves, &params)?;
            print_clustering(&result)?;
            Ok(true)
        }
        Command::Decide { common, delta } => {
            let curves = read_curves(&common.input)?;
            let params = ClusterParams::new(common.k, common.ell, common.metric.into(), tol)?;
            match cluster::kl_center_decide(&curves, &params, delta)? {
                DecideOutcome::Clustering(result) => {
                    print_clustering(&result)?;
                    Ok(true)
                }
                DecideOutcome::No => {
                    eprintln!("no: no clustering of radius <= {} found", 3.0 * delta);
                    Ok(false)
                }
            }
        }
        Command::GenHard {
            variant,
            strings,
            t,
            j,
            jp,
            output,
        } => {
            let inst = ScsInstance::new(strings, t)?;
            let variant: Variant = variant.into();
            let hi = match variant {
                Variant::OneDDiscrete | Variant::OneDContinuous => {
                    hardness::gen_1d(&inst, variant.metric())
                }
                Variant::TwoDDiscrete | Variant::TwoDContinuous => {
                    hardness::gen_2d(&inst, variant.metric())
                }
                Variant::MebOneDDiscrete | Variant::MebOneDContinuous => {
                    let (j, jp) = match (j, jp) {
                        (Some(j), Some(jp)) => (j, jp),
                        _ => bail!("--j and --jp are required for the meb variants"),
                    };
                    hardness::gen_meb(&inst, j, jp)?
                }
            };
            write_curves(&hi.curves, Some(&output), cli.emit_geojson)?;
            let sidecar = InstanceSidecar {
                variant: serde_json::to_value(hi.variant)?
                    .as_str()
                    .unwrap()
                    .to_string(),
                t: hi.t,
                s: hi.s,
                ell: hi.ell,
                target_radius: hi.target_radius,
                gap_radius: hi.gap_radius,
            };
            let sidecar_path = output.with_extension("instance.json");
            let mut f = File::create(&sidecar_path)?;
            writeln!(f, "{}", serde_json::to_string_pretty(&sidecar)?)?;
            eprintln!(
                "wrote {} curves to {} (metadata: {})",
                hi.curves.len(),
                output.display(),
                sidecar_path.display()
            );
            Ok(true)
        }
        Command::Extract {
            input,
            variant,
            r,
            s,
        } => {
            let curves = read_curves(&input)?;
            let sstr = match variant.into() {
                Variant::TwoDDiscrete | Variant::TwoDContinuous => {
                    hardness::extract_superstring_2d_discrete(&curves[0], r, s)?
                }
                _ => hardness::extract_superstring_1d(&curves[0])?,
            };
            println!("{}", sstr);
            Ok(true)
        }
        Command::Verify {
            instance,
            center,
            delta,
        } => {
            let curves = read_curves(&instance)?;
            let sidecar_path = instance.with_extension("instance.json");
            let sidecar: InstanceSidecar = serde_json::from_reader(
                File::open(&sidecar_path)
                    .with_context(|| format!("open {}", sidecar_path.display()))?,
            )?;
            let variant: Variant = serde_json::from_value(json!(sidecar.variant))?;
            let hi = hardness::HardInstance {
                variant,
                curves,
                t: sidecar.t,
                s: sidecar.s,
                ell: sidecar.ell,
                target_radius: sidecar.target_radius,
                gap_radius: sidecar.gap_radius,
            };
            let center = read_curves(&center)?.remove(0);
            let delta = delta.unwrap_or(hi.target_radius);
            let (ok, radius) =
                hardness::verify_instance(&hi, &center, delta, variant.metric())?;
            println!(
                "{}",
                json!({"ok": ok, "radius": radius, "delta": delta, "ell": hi.ell})
            );
            Ok(ok)
        }
    }
}

fn print_clustering(result: &cluster::ClusterResult) -> anyhow::Result<()> {
    let centers: Vec<_> = result
        .centers
        .iter()
        .map(|c| {
            json!({
                "id": c.id,
                "points": c.vertices.iter().map(|p| p.coords.clone()).collect::<Vec<_>>(),
            })
        })
        .collect();
    println!(
        "{}",
        serde_json::to_string_pretty(&json!({
            "centers": centers,
            "assignment": result.assignment,
            "radius": result.radius,
            "history": result.history,
            "decider_calls": result.decider_calls,
        }))?
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(1)
        }
    }
}
