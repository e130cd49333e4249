use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use altermatic::coloring::{
    chromatic_number_within, has_homomorphism, multichromatic_number_within, multicoloring_exists_within, Budget,
    Verdict,
};
use altermatic::constructions::kneser_graph;
use altermatic::gale::{exact_sign_patterns, gale_points, verify_gale};
use altermatic::io::{read_graph, read_hypergraph, read_order, to_json, write_text, CertificateStore};
use altermatic::signed::property::{BothContain, EitherContains, SignedProperty};
use altermatic::signed::{alt_min, alt_sigma, certify, salt_sigma, Strategy, DEFAULT_FACTORIAL_CAP};
use altermatic::verify::{run_suite, Scale, Suite, VerifyConfig};
use altermatic::{Hypergraph, Kind, LinearOrder, Mode};

mod construct;

const EXIT_OK: u8 = 0;
const EXIT_UNSAT: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

#[derive(Parser)]
#[command(name = "altermatic", version, about = "Alternation-number certificates and exact colouring oracles")]
struct Cli {
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Wall-clock limit for each exact solver call.
    #[arg(long, global = true)]
    timeout_ms: Option<u64>,
    /// Directory for written certificates, instances and reports.
    #[arg(long, global = true, env = "ALTERMATIC_OUT")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    BranchAndBound,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exhaustive => Mode::Exhaustive,
            ModeArg::BranchAndBound => Mode::BranchAndBound,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Alt,
    Salt,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Alt => Kind::Alt,
            KindArg::Salt => Kind::Salt,
        }
    }
}

#[derive(Args)]
struct Instance {
    /// Hypergraph JSON: {"vertices": [...], "edges": [[...], ...]}.
    #[arg(long)]
    hypergraph: PathBuf,
    /// Ordering JSON (an array of vertices); natural order if omitted.
    #[arg(long)]
    order: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ModeArg::BranchAndBound)]
    mode: ModeArg,
}

impl Instance {
    fn load(&self) -> Result<(Hypergraph, LinearOrder)> {
        let h = read_hypergraph(&self.hypergraph)?;
        let order = match &self.order {
            Some(p) => read_order(p)?,
            None => h.natural_order(),
        };
        Ok((h, order))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Exact,
    Local,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    /// Either hemisphere side contains a hyperedge (paired with alt).
    Either,
    /// Both sides contain a hyperedge (paired with salt).
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScaleArg {
    Tiny,
    Desk,
}

#[derive(Subcommand)]
enum Command {
    /// ALT certificate for a hypergraph and ordering.
    Alt(Instance),
    /// SALT certificate for a hypergraph and ordering.
    Salt(Instance),
    /// Minimum alt (or salt) over orderings.
    AltMin {
        #[arg(long)]
        hypergraph: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Alt)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = StrategyArg::Exact)]
        strategy: StrategyArg,
        /// Largest vertex count for the exact strategy.
        #[arg(long, default_value_t = DEFAULT_FACTORIAL_CAP)]
        cap: usize,
        #[arg(long, default_value_t = 16)]
        restarts: usize,
    },
    /// Both certificates and the lower bound on chi(KG(h)) they give.
    ZetaCert {
        #[command(flatten)]
        instance: Instance,
        /// Also compute chi(KG(h)) exactly and compare.
        #[arg(long)]
        check_chi: bool,
    },
    /// Build a graph, hypergraph or representation.
    Construct {
        family: String,
        params: Vec<String>,
        #[command(flatten)]
        inputs: construct::Inputs,
    },
    /// Chromatic number (exact, or an interval on timeout).
    Chi {
        #[arg(long)]
        graph: PathBuf,
    },
    /// m-fold chromatic number, or with --n whether an m-fold n-colouring exists.
    Multichi {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Homomorphism search.
    Hom {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
    },
    /// Sample hemisphere splits of the moment-curve configuration.
    Gale {
        #[arg(long)]
        hypergraph: PathBuf,
        #[arg(long)]
        order: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = PropertyArg::Both)]
        property: PropertyArg,
        /// Sphere dimension; defaults to n - alt - 1 (or n - salt - 1).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 100_000)]
        trials: usize,
        /// Integer hyperplanes for the exact sign-pattern check.
        #[arg(long, default_value_t = 1000)]
        hyperplanes: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, value_enum, default_value_t = ScaleArg::Tiny)]
        scale: ScaleArg,
        /// Override the sample count of the Gale instances.
        #[arg(long)]
        trials: Option<usize>,
    },
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: altermatic::Error| e.to_string())
}

pub(crate) struct Ctx {
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub timeout_ms: Option<u64>,
}

impl Ctx {
    /// Prints `value` and, with `--out`, writes it to `<out>/<name>.json`.
    pub fn emit(&self, name: &str, value: &Value) -> Result<()> {
        let text = to_json(value);
        print!("{text}");
        if let Some(dir) = &self.out {
            write_text(&dir.join(format!("{name}.json")), &text)?;
        }
        Ok(())
    }

    fn budget(&self) -> Budget {
        Budget::from_millis(self.timeout_ms)
    }
}

fn short(id: &str) -> &str {
    &id[..12.min(id.len())]
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    }
    let ctx = Ctx { format: cli.format, out: cli.out, seed: cli.seed, timeout_ms: cli.timeout_ms };
    match run(cli.command, &ctx) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(command: Command, ctx: &Ctx) -> Result<u8> {
    match command {
        Command::Alt(i) => certificate(ctx, &i, Kind::Alt),
        Command::Salt(i) => certificate(ctx, &i, Kind::Salt),
        Command::AltMin { hypergraph, kind, strategy, cap, restarts } => {
            let h = read_hypergraph(&hypergraph)?;
            let strategy = match strategy {
                StrategyArg::Exact => Strategy::ExactAllOrders { cap },
                StrategyArg::Local => Strategy::LocalSearch { seed: ctx.seed, restarts },
            };
            let cert = alt_min(&h, kind.into(), strategy)?;
            store(ctx, &cert)?;
            ctx.emit(&format!("alt-min-{}", short(&cert.hypergraph_id)), &serde_json::to_value(&cert)?)?;
            Ok(EXIT_OK)
        }
        Command::ZetaCert { instance, check_chi } => zeta_cert(ctx, &instance, check_chi),
        Command::Construct { family, params, inputs } => construct::run(ctx, &family, &params, &inputs),
        Command::Chi { graph } => {
            let g = read_graph(&graph)?;
            let r = chromatic_number_within(&g, &ctx.budget());
            let value = json!({
                "vertices": g.n(),
                "chi": r.exact(),
                "lower": r.lower,
                "upper": r.upper,
                "coloring": r.witness.assignment,
            });
            ctx.emit("chi", &value)?;
            Ok(if r.is_exact() { EXIT_OK } else { EXIT_TIMEOUT })
        }
        Command::Multichi { graph, m, n } => {
            let g = read_graph(&graph)?;
            match n {
                Some(n) => {
                    let verdict = multicoloring_exists_within(&g, m, n, &ctx.budget())?;
                    let code = match &verdict {
                        Verdict::Sat(_) => EXIT_OK,
                        Verdict::Unsat => EXIT_UNSAT,
                        Verdict::Timeout => EXIT_TIMEOUT,
                    };
                    ctx.emit("multicoloring", &json!({ "m": m, "n": n, "result": verdict }))?;
                    Ok(code)
                }
                None => {
                    let r = multichromatic_number_within(&g, m, &ctx.budget())?;
                    let value = json!({
                        "m": m,
                        "chi_m": r.exact(),
                        "lower": r.lower,
                        "upper": r.upper,
                        "multicoloring": r.witness.assignment,
                    });
                    ctx.emit("multichi", &value)?;
                    Ok(if r.is_exact() { EXIT_OK } else { EXIT_TIMEOUT })
                }
            }
        }
        Command::Hom { from, to } => {
            let (g, h) = (read_graph(&from)?, read_graph(&to)?);
            let map = has_homomorphism(&g, &h)?;
            let code = if map.is_some() { EXIT_OK } else { EXIT_UNSAT };
            ctx.emit("hom", &json!({ "exists": map.is_some(), "map": map }))?;
            Ok(code)
        }
        Command::Gale { hypergraph, order, property, m, trials, hyperplanes } => {
            let h = read_hypergraph(&hypergraph)?;
            let sigma = match order {
                Some(p) => read_order(&p)?,
                None => h.natural_order(),
            };
            let n = h.vertex_count();
            let (p, value): (Box<dyn SignedProperty>, usize) = match property {
                PropertyArg::Either => (Box::new(EitherContains::new(&h)?), alt_sigma(&h, &sigma, Mode::BranchAndBound)?.0),
                PropertyArg::Both => (Box::new(BothContain::new(&h)?), salt_sigma(&h, &sigma, Mode::BranchAndBound)?.0),
            };
            let m = match m {
                Some(m) => m,
                None if value + 1 < n => n - value - 1,
                None => bail!("n - {} - 1 is negative here; pass --m explicitly", if matches!(property, PropertyArg::Either) { "alt" } else { "salt" }),
            };
            let z = gale_points(n, m, &sigma)?;
            let report = verify_gale(&z, p.as_ref(), trials, ctx.seed)?;
            let exact = exact_sign_patterns(n, m, hyperplanes, ctx.seed)?;
            let ok = report.failure_count == 0 && report.pattern_violations == 0 && exact.violations == 0;
            ctx.emit("gale", &json!({ "sampled": report, "exact": exact }))?;
            Ok(if ok { EXIT_OK } else { EXIT_UNSAT })
        }
        Command::Verify { suite, scale, trials } => {
            let scale = match scale {
                ScaleArg::Tiny => Scale::Tiny,
                ScaleArg::Desk => Scale::Desk,
            };
            let config = VerifyConfig { scale, seed: ctx.seed, timeout_ms: ctx.timeout_ms, gale_trials: trials };
            let report = run_suite(suite, &config);
            let text = match ctx.format {
                Format::Json => to_json(&report),
                Format::Csv => report.to_csv(),
                Format::Md => report.to_markdown(),
            };
            print!("{text}");
            if let Some(dir) = &ctx.out {
                let ext = match ctx.format {
                    Format::Json => "json",
                    Format::Csv => "csv",
                    Format::Md => "md",
                };
                write_text(&dir.join(format!("verify-{suite}-{scale:?}.{ext}").to_lowercase()), &text)?;
            }
            Ok(if report.passed() { EXIT_OK } else { EXIT_UNSAT })
        }
    }
}

fn store(ctx: &Ctx, cert: &altermatic::AltCertificate) -> Result<()> {
    if let Some(dir) = &ctx.out {
        CertificateStore::new(dir).put(cert)?;
    }
    Ok(())
}

fn certificate(ctx: &Ctx, i: &Instance, kind: Kind) -> Result<u8> {
    let (h, order) = i.load()?;
    let cert = certify(&h, &order, kind, i.mode.into())?;
    cert.check(&h).context("freshly computed certificate failed its own check")?;
    store(ctx, &cert)?;
    let name = match kind {
        Kind::Alt => "alt",
        Kind::Salt => "salt",
    };
    ctx.emit(&format!("{name}-{}", short(&cert.hypergraph_id)), &serde_json::to_value(&cert)?)?;
    Ok(EXIT_OK)
}

fn zeta_cert(ctx: &Ctx, i: &Instance, check_chi: bool) -> Result<u8> {
    let (h, order) = i.load()?;
    let alt = certify(&h, &order, Kind::Alt, i.mode.into())?;
    let salt = certify(&h, &order, Kind::Salt, i.mode.into())?;
    store(ctx, &alt)?;
    store(ctx, &salt)?;
    let bound = alt.bound.max(salt.bound);
    let mut value = json!({ "lower_bound": bound, "alt": alt, "salt": salt });
    let mut code = EXIT_OK;
    if check_chi {
        let g = kneser_graph(&h).graph;
        let r = chromatic_number_within(&g, &ctx.budget());
        value["chi"] = json!({ "exact": r.exact(), "lower": r.lower, "upper": r.upper });
        value["sound"] = json!(bound <= r.upper);
        if !r.is_exact() {
            code = EXIT_TIMEOUT;
        }
    }
    ctx.emit(&format!("zeta-{}", short(&alt.hypergraph_id)), &value)?;
    Ok(code)
}

pub(crate) fn file_stem(path: &Path) -> String {
    path.file_stem().map_or_else(|| "input".into(), |s| s.to_string_lossy().into_owned())
}
