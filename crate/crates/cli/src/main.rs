use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use fourrich::analyzer::{
    certify, pinned_distance_demo, pinned_distances_of_construction, scaling_experiment, write_csv, Generator,
};
use fourrich::configs::{build_degenerate_sheaves, build_elekes_lifted, random_config, Config, ConfigKind};
use fourrich::counter::{count, RichPointReport};
use fourrich::eliminate::{self, EliminationResult};
use fourrich::rational::{int, serde_rational_array};
use fourrich::{MPoly, Rational};

/// Four-rich point analysis: certificates, exact counts, eliminations and
/// scaling experiments.
#[derive(Parser)]
#[command(name = "fourrich", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certificate for a configuration. Exits 2 when no bound is certified.
    Analyze(Common),
    /// Exact rich-point count of a configuration.
    Count(Common),
    /// Emit a configuration.
    Construct {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Construction::Random)]
        construction: Construction,
        #[arg(long, short)]
        n: usize,
    },
    /// Relation among the family parameters, symbolic unless a config is given.
    Eliminate {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = SheafCase::Case1)]
        case: SheafCase,
    },
    /// Counts over a list of sizes with a fitted exponent.
    Experiment {
        #[command(flatten)]
        common: Common,
        /// elekes-lifted, elekes-planar, elekes-planar-complex,
        /// degenerate-sheaves or random-{sheaves,spheres,planar}
        #[arg(long)]
        generator: Generator,
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
    },
    /// Distinct distances from four pins, from `{"pins", "points"}` input or
    /// a spheres config.
    Distances(Common),
}

#[derive(Args)]
struct Common {
    /// sheaves, spheres or planar (alias 2d)
    #[arg(long)]
    kind: Option<ConfigKind>,
    #[arg(long, conflicts_with = "config_json")]
    input: Option<PathBuf>,
    #[arg(long)]
    config_json: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Random,
    DegenerateSheaves,
    ElekesLifted,
}

#[derive(Clone, Copy, ValueEnum)]
enum SheafCase {
    Case1,
    AtInfinity,
    Case2,
}

#[derive(Deserialize)]
struct Point3(#[serde(with = "serde_rational_array")] [Rational; 3]);

#[derive(Deserialize)]
struct PinnedInput {
    pins: [Point3; 4],
    points: Vec<Point3>,
}

#[derive(Serialize)]
struct Relation<'a> {
    #[serde(rename = "F")]
    f: &'a MPoly,
    parameters: &'a [String],
}

/// Failure to read or parse input; reported with exit code 1.
struct InputError(String);

impl Common {
    fn source(&self) -> anyhow::Result<Option<(String, String)>> {
        match (&self.input, &self.config_json) {
            (Some(path), _) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                Ok(Some((path.display().to_string(), text)))
            }
            (None, Some(text)) => Ok(Some(("--config-json".into(), text.clone()))),
            (None, None) => Ok(None),
        }
    }

    fn parse<T: for<'de> Deserialize<'de>>(&self) -> anyhow::Result<Option<T>> {
        let Some((name, text)) = self.source()? else { return Ok(None) };
        serde_json::from_str(&text)
            .map(Some)
            .map_err(|e| anyhow!(InputError(format!("{name}:{}:{}: {e}", e.line(), e.column()))))
    }

    fn config(&self) -> anyhow::Result<Config> {
        let cfg: Config = self.parse()?.ok_or_else(|| anyhow!("one of --input or --config-json is required"))?;
        cfg.validate().map_err(|e| anyhow!(InputError(e.to_string())))?;
        if let Some(kind) = self.kind {
            if kind != cfg.kind() {
                bail!(InputError(format!("--kind {kind:?} does not match config kind {:?}", cfg.kind())));
            }
        }
        Ok(cfg)
    }

    fn emit(&self, body: &str) -> anyhow::Result<()> {
        match &self.output {
            Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display())),
            None => {
                io::stdout().write_all(body.as_bytes())?;
                Ok(())
            }
        }
    }

    fn emit_json<T: Serialize>(&self, value: &T) -> anyhow::Result<()> {
        if self.format == Some(Format::Csv) {
            bail!("csv output is only available for count and experiment");
        }
        self.emit(&(serde_json::to_string_pretty(value)? + "\n"))
    }
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::fmt::Debug for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn report_csv(r: &RichPointReport) -> String {
    format!(
        "finite_count,common_line,axial_hits\n{},{},{}\n",
        r.finite_count, r.common_line_detected, r.axial_point_hits
    )
}

fn symbolic_elimination(kind: ConfigKind, case: SheafCase) -> anyhow::Result<EliminationResult> {
    let s = MPoly::var;
    Ok(match (kind, case) {
        (ConfigKind::Sheaves, SheafCase::Case1) => eliminate::eliminate_planes_case1(&s("s1"), &s("s2")),
        (ConfigKind::Sheaves, SheafCase::AtInfinity) => eliminate::eliminate_planes_at_infinity(),
        (ConfigKind::Sheaves, SheafCase::Case2) => eliminate::eliminate_planes_case2(&s("alpha"))?,
        (ConfigKind::Spheres, _) => eliminate::eliminate_spheres(&s("a"), &s("b"), &s("c"), &s("d"), &s("e"))?,
        (ConfigKind::Planar, _) => eliminate::eliminate_2d(&s("a"), &s("b"), &s("c"), &s("d"))?,
    })
}

/// Exit code on success: 0, or 2 when the analysis ran but certified nothing.
fn run(cli: Cli) -> anyhow::Result<u8> {
    let common = match &cli.command {
        Command::Analyze(c) | Command::Count(c) | Command::Distances(c) => c,
        Command::Construct { common, .. } | Command::Eliminate { common, .. } | Command::Experiment { common, .. } => {
            common
        }
    };
    if let Some(workers) = common.workers {
        rayon::ThreadPoolBuilder::new().num_threads(workers).build_global()?;
    }
    match &cli.command {
        Command::Analyze(c) => {
            let cert = certify(&c.config()?);
            c.emit_json(&cert)?;
            return Ok(if cert.is_certified() { 0 } else { 2 });
        }
        Command::Count(c) => {
            let report = count(&c.config()?);
            match c.format {
                Some(Format::Csv) => c.emit(&report_csv(&report))?,
                _ => c.emit_json(&report)?,
            }
        }
        Command::Construct { common: c, construction, n } => {
            let cfg = match construction {
                Construction::Random => {
                    let kind = c.kind.ok_or_else(|| anyhow!("--kind is required for random configurations"))?;
                    random_config(kind, *n, c.seed)?
                }
                Construction::DegenerateSheaves => {
                    let (sheaves, l5) = build_degenerate_sheaves(*n);
                    Config::Sheaves { n: *n, sheaves: sheaves.to_vec(), seed_transversal: Some(l5), resamples: 0 }
                }
                Construction::ElekesLifted => {
                    let fams = build_elekes_lifted(*n, &int(10 * *n as i64));
                    Config::Spheres { n: *n, families: fams.to_vec(), resamples: 0 }
                }
            };
            c.emit_json(&cfg)?;
        }
        Command::Eliminate { common: c, case } => {
            let relation = match c.parse::<Config>()? {
                Some(cfg) => {
                    cfg.validate().map_err(|e| anyhow!(InputError(e.to_string())))?;
                    let cert = certify(&cfg);
                    let f = cert.f.clone().ok_or_else(|| {
                        anyhow!("no relation for this configuration: {:?}", cert.hypothesis_flags)
                    })?;
                    (f, cert.parameters)
                }
                None => {
                    let kind = c.kind.ok_or_else(|| anyhow!("--kind is required without an input config"))?;
                    let e = symbolic_elimination(kind, *case)?;
                    (e.f.reordered(&e.parameter_refs()), e.parameters)
                }
            };
            c.emit_json(&Relation { f: &relation.0, parameters: &relation.1 })?;
        }
        Command::Experiment { common: c, generator, n_list } => {
            let rows = scaling_experiment(*generator, n_list, c.seed)?;
            match c.format {
                Some(Format::Json) => c.emit(&(serde_json::to_string_pretty(&rows)? + "\n"))?,
                _ => {
                    let mut buf = Vec::new();
                    write_csv(&rows, &mut buf)?;
                    c.emit(&String::from_utf8(buf)?)?;
                }
            }
        }
        Command::Distances(c) => {
            let (name, text) = c.source()?.ok_or_else(|| anyhow!("one of --input or --config-json is required"))?;
            let value: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| anyhow!(InputError(format!("{name}:{}:{}: {e}", e.line(), e.column()))))?;
            let report = if value.get("pins").is_some() {
                let input: PinnedInput = c.parse()?.expect("input present");
                let pins = input.pins.map(|p| p.0);
                let points: Vec<[Rational; 3]> = input.points.into_iter().map(|p| p.0).collect();
                pinned_distance_demo(&pins, &points)
            } else {
                let cfg = c.config()?;
                let fams = cfg.families().ok_or_else(|| anyhow!(InputError("expected a spheres config".into())))?;
                pinned_distances_of_construction(fams)
            };
            c.emit_json(&report)?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            if e.downcast_ref::<InputError>().is_some() {
                eprintln!("input error: {e}");
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(1)
        }
    }
}
