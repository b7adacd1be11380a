use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use log::{debug, info};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use sphquad::angles::{net_feasible, AngleVector, Facet, FRACTION_NAMES};
use sphquad::builders::{build, classify, enumerate_primitive, NetLabel};
use sphquad::chains::{bounds_of, build_chains, explain, Scope};
use sphquad::geometry::{parameter_interval, realize_config, render_config_svg, FourCircleConfig};
use sphquad::net::{render_net_svg, validate_net, Net};

#[derive(Parser)]
#[command(name = "sphquad", version, about = "Nets, angles and chains of generic spherical quadrilaterals")]
struct Cli {
    /// Worker threads for parallel engines (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the structural invariants of a net given as JSON.
    Validate { net: PathBuf },
    /// Name a net from the catalogue.
    Classify { net: PathBuf },
    /// List primitive nets with corner orders summing to at most the bound.
    Enumerate {
        #[arg(long)]
        bound: usize,
        /// Emit one JSON object per net instead of bare labels.
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a labelled net exists for the given angles.
    Feasible {
        #[arg(long)]
        label: String,
        #[command(flatten)]
        angles: AngleArgs,
    },
    /// Build the chains of nets for the given angles.
    Chains {
        #[command(flatten)]
        angles: AngleArgs,
        /// Families to include, e.g. `X,Z`.
        #[arg(long, default_value = "PXZRSUVW")]
        scope: String,
        /// Append the inequalities that gate each transition.
        #[arg(long)]
        explain: bool,
    },
    /// Realize a four-circle configuration whose quadrilateral has angles a,b,c,d.
    Realize {
        #[command(flatten)]
        angles: AngleArgs,
        #[command(flatten)]
        param: ParamArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a net (by label) or a realized configuration as SVG.
    Render {
        #[arg(long, conflicts_with_all = ["angles", "exact", "config"])]
        label: Option<String>,
        /// A configuration JSON written by `realize`.
        #[arg(long, conflicts_with_all = ["angles", "exact"])]
        config: Option<PathBuf>,
        #[command(flatten)]
        angles: OptAngleArgs,
        #[command(flatten)]
        param: ParamArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct AngleArgs {
    /// Four full angles in units of pi, e.g. `0.3,0.8,0.5,2.45`.
    #[arg(long, allow_hyphen_values = true)]
    angles: Option<String>,
    /// Same, read as rationals, e.g. `3/10,4/5,1/2,49/20`.
    #[arg(long)]
    exact: Option<String>,
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct OptAngleArgs {
    #[arg(long, allow_hyphen_values = true)]
    angles: Option<String>,
    #[arg(long)]
    exact: Option<String>,
}

#[derive(Args)]
struct ParamArgs {
    /// Position of the fifth angle; drawn at random when absent.
    #[arg(long)]
    t: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

enum Failure {
    /// Reader went away; not an error.
    Closed,
    /// Infeasible or invalid input.
    Rejected(String),
    Internal(String),
}

impl From<sphquad::Error> for Failure {
    fn from(e: sphquad::Error) -> Failure {
        Failure::Rejected(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Internal(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn parse_angles(angles: &Option<String>, exact: &Option<String>) -> Result<AngleVector, Failure> {
    match (angles, exact) {
        (Some(s), None) => Ok(AngleVector::parse(s, false)?),
        (None, Some(s)) => Ok(AngleVector::parse(s, true)?),
        _ => Err(Failure::Rejected("give exactly one of --angles and --exact".into())),
    }
}

fn read_net(path: &Path) -> Result<Net, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Rejected(format!("{}: {e}", path.display())))?;
    Ok(Net::from_json_str(&text)?)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Outcome {
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn realize(angles: &AngleVector, param: &ParamArgs) -> Result<FourCircleConfig, Failure> {
    let [a, b, c, d] = angles.frac.map(|x| x.to_f64());
    let t = match param.t {
        Some(t) => t,
        None => {
            let (lo, hi) = parameter_interval(a, b, c, d)?;
            let t = ChaCha8Rng::seed_from_u64(param.seed).gen_range(lo..hi);
            info!("sampled t={t} from ({lo}, {hi})");
            t
        }
    };
    Ok(realize_config(a, b, c, d, t)?)
}

fn run(cli: Cli) -> Outcome {
    match cli.cmd {
        Cmd::Validate { net } => {
            let report = validate_net(&read_net(&net)?);
            print!("{}", pretty(&json!(report)));
            if !report.valid {
                return Err(Failure::Rejected("net is invalid".into()));
            }
        }
        Cmd::Classify { net } => match classify(&read_net(&net)?) {
            Ok(c) => println!("{}", c.label),
            Err(e) => {
                debug!("{e}");
                println!("uncatalogued");
            }
        },
        Cmd::Enumerate { bound, json } => {
            let mut stdout = io::stdout().lock();
            for (label, net) in enumerate_primitive(bound) {
                if json {
                    let line =
                        json!({"label": label.to_string(), "corner_orders": net.corner_orders(), "net": net.to_json()});
                    writeln!(stdout, "{line}")?;
                } else {
                    writeln!(stdout, "{label}")?;
                }
            }
        }
        Cmd::Feasible { label, angles } => {
            let label: NetLabel = label.parse()?;
            let angles = parse_angles(&angles.angles, &angles.exact)?;
            let f = net_feasible(&label, &angles)?;
            let mask = f.quad.mask();
            let inequalities: Vec<_> = [Facet::Area, Facet::Digon(0), Facet::Digon(1), Facet::Digon(2), Facet::Digon(3)]
                .into_iter()
                .map(|facet| {
                    let form = facet.form().substitute(mask);
                    let value = form.eval(&angles.frac);
                    json!({"inequality": format!("{} > 0", form.render(FRACTION_NAMES)), "value": value.to_string(), "holds": value.sign().is_gt()})
                })
                .collect();
            let witnesses: Vec<_> = f
                .witnesses
                .iter()
                .map(|w| json!({"inequality": w.text, "value": w.value.to_string(), "tight": w.tight}))
                .collect();
            let out = json!({
                "label": label.to_string(),
                "angles": angles.to_string(),
                "feasible": f.feasible,
                "fixed_angles": f.quad.names(),
                "condition": f.condition,
                "inequalities": inequalities,
                "witnesses": witnesses,
            });
            print!("{}", pretty(&out));
            if !f.feasible {
                return Err(Failure::Rejected(format!("{label} does not exist for these angles")));
            }
        }
        Cmd::Chains { angles, scope, explain: want_explain } => {
            let angles = parse_angles(&angles.angles, &angles.exact)?;
            let scope = Scope::parse(&scope)?;
            let chains = build_chains(&angles, &scope);
            let bounds = bounds_of(&chains);
            let items: Vec<_> = chains
                .iter()
                .map(|c| {
                    let mut v = json!({
                        "nets": c.nets.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
                        "length": c.length,
                        "transitions": c.transitions,
                        "ends": c.ends,
                        "uncertain": c.uncertain,
                    });
                    if want_explain {
                        v["explain"] = json!(explain(c, &angles));
                    }
                    v
                })
                .collect();
            print!("{}", pretty(&json!({"chains": items, "bounds": bounds})));
        }
        Cmd::Realize { angles, param, out } => {
            let angles = parse_angles(&angles.angles, &angles.exact)?;
            let cfg = realize(&angles, &param)?;
            let mut text = cfg.to_json();
            text.push('\n');
            emit(&out, &text)?;
        }
        Cmd::Render { label, config, angles, param, out } => {
            let svg = if let Some(label) = label {
                render_net_svg(&build(&label.parse()?)?)
            } else if let Some(path) = config {
                let text =
                    fs::read_to_string(&path).map_err(|e| Failure::Rejected(format!("{}: {e}", path.display())))?;
                render_config_svg(&FourCircleConfig::from_json(&text)?)
            } else if angles.angles.is_some() || angles.exact.is_some() {
                render_config_svg(&realize(&parse_angles(&angles.angles, &angles.exact)?, &param)?)
            } else {
                return Err(Failure::Rejected("render needs --label, --config or --angles".into()));
            };
            emit(&out, &svg)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SPHQUAD_LOG", "warn")).init();
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(()) | Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(Failure::Rejected(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(1)
        }
    }
}
