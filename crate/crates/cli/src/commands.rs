use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, ValueEnum};
use serde_json::{json, Map, Value};

use ultrafree::blowup::{haussler_run, twin_quotient};
use ultrafree::codegree::{clique_codensity, codegree_min};
use ultrafree::coloring::optimal_coloring;
use ultrafree::cliques::max_clique;
use ultrafree::constructions::{self, ConstructionSpec};
use ultrafree::convexity::{mis_space, Measure, RadonNumber};
use ultrafree::io;
use ultrafree::rational::{format_rational, parse_rational};
use ultrafree::setsystem::{bg, mis_hypergraph, neighborhood_system};
use ultrafree::ultra::{nu_bi, ultra_parameter};
use ultrafree::{enumerate_mis, ConvexitySpace, Graph, SearchBudget, SetSystem};

use crate::Output;

pub fn read_input(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    Ok(io::parse_graph(&read_input(path)?).with_context(|| format!("parsing {}", path.display()))?)
}

/// Renders a flat JSON object as `key: value` lines.
pub fn text_of(obj: &Map<String, Value>) -> String {
    let mut out = String::new();
    for (k, v) in obj {
        let shown = match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        let _ = writeln!(out, "{k}: {shown}");
    }
    out
}

fn plain(obj: Map<String, Value>) -> Output {
    Output {
        text: text_of(&obj),
        json: Value::Object(obj),
        ok: true,
    }
}

#[derive(Clone, Copy, ValueEnum)]
pub enum GraphFormat {
    Json,
    Dimacs,
}

#[derive(Args)]
pub struct GenArgs {
    /// turan, kneser, mtt, half_min, gamma_blowup, hypercube_lb, ultra_vc_example, blowup,
    /// cycle, path, petersen or complete_bipartite.
    family: String,
    /// Parameters as key=value pairs. Graph-valued parameters take a file path or one of
    /// C<n>, P<n>, K<a>,<b>, petersen.
    #[arg(long, num_args = 0..)]
    params: Vec<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format; defaults to DIMACS for `.col`/`.dimacs` paths and JSON otherwise.
    #[arg(long, value_enum)]
    format: Option<GraphFormat>,
}

fn parse_params(raw: &[String]) -> Result<BTreeMap<String, String>> {
    raw.iter()
        .map(|p| {
            let (k, v) = p.split_once('=').ok_or_else(|| ultrafree::Error::Invalid(format!("parameter `{p}` is not key=value")))?;
            Ok((k.to_string(), v.to_string()))
        })
        .collect()
}

struct Params(BTreeMap<String, String>);

impl Params {
    fn raw(&self, key: &str) -> Result<&str> {
        self.0
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| ultrafree::Error::Invalid(format!("missing parameter `{key}`")).into())
    }

    fn nat(&self, key: &str) -> Result<usize> {
        let v = self.raw(key)?;
        Ok(v.parse().map_err(|_| ultrafree::Error::Invalid(format!("parameter {key}={v} is not a natural number")))?)
    }

    fn graph(&self, key: &str) -> Result<Graph> {
        named_graph(self.raw(key)?)
    }
}

fn named_graph(spec: &str) -> Result<Graph> {
    let num = |s: &str| -> Result<usize> {
        Ok(s.parse().map_err(|_| ultrafree::Error::Invalid(format!("bad size in `{spec}`")))?)
    };
    if spec == "petersen" {
        return Ok(constructions::petersen());
    }
    if let Some(rest) = spec.strip_prefix('C').filter(|r| r.chars().all(|c| c.is_ascii_digit()) && !r.is_empty()) {
        return Ok(constructions::cycle(num(rest)?));
    }
    if let Some(rest) = spec.strip_prefix('P').filter(|r| r.chars().all(|c| c.is_ascii_digit()) && !r.is_empty()) {
        return Ok(constructions::path(num(rest)?));
    }
    if let Some((a, b)) = spec.strip_prefix('K').and_then(|r| r.split_once(',')) {
        return Ok(constructions::complete_bipartite(num(a)?, num(b)?));
    }
    read_graph(Path::new(spec))
}

pub fn gen(args: GenArgs) -> Result<Output> {
    let p = Params(parse_params(&args.params)?);
    let spec = match args.family.as_str() {
        "turan" => ConstructionSpec::Turan { n: p.nat("n")?, parts: p.nat("parts")? },
        "kneser" => ConstructionSpec::Kneser { m: p.nat("m")?, k: p.nat("k")? },
        "mtt" => ConstructionSpec::Mtt { t: p.nat("t")? },
        "half_min" => ConstructionSpec::HalfMin { k: p.nat("k")? },
        "gamma_blowup" => ConstructionSpec::GammaBlowup { gamma: p.graph("gamma")?, a: p.nat("a")?, b: p.nat("b")? },
        "hypercube_lb" => ConstructionSpec::HypercubeLb {
            d: p.nat("d")?,
            which_g: match p.0.get("which").map(String::as_str) {
                None | Some("g") | Some("G") => true,
                Some("h") | Some("H") => false,
                Some(other) => bail!(ultrafree::Error::Invalid(format!("which={other}: expected g or h"))),
            },
        },
        "ultra_vc_example" => ConstructionSpec::UltraVcExample { n: p.nat("n")? },
        "blowup" => {
            let f = p.graph("f")?;
            let sizes = match (p.0.get("sizes"), p.0.get("size")) {
                (Some(list), _) => list
                    .split(',')
                    .map(|s| s.parse().map_err(|_| anyhow!(ultrafree::Error::Invalid(format!("bad size `{s}`")))))
                    .collect::<Result<Vec<usize>>>()?,
                (None, Some(_)) => vec![p.nat("size")?; f.n()],
                (None, None) => bail!(ultrafree::Error::Invalid("blowup needs sizes=a,b,… or size=k".into())),
            };
            ConstructionSpec::Blowup { f, sizes }
        }
        "cycle" => return emit(constructions::cycle(p.nat("n")?), &args),
        "path" => return emit(constructions::path(p.nat("n")?), &args),
        "petersen" => return emit(constructions::petersen(), &args),
        "complete_bipartite" => return emit(constructions::complete_bipartite(p.nat("a")?, p.nat("b")?), &args),
        other => bail!(ultrafree::Error::Invalid(format!("unknown family `{other}`"))),
    };
    emit(spec.build()?, &args)
}

fn emit(g: Graph, args: &GenArgs) -> Result<Output> {
    let format = args.format.unwrap_or_else(|| match args.out.as_ref().and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("col" | "dimacs") => GraphFormat::Dimacs,
        _ => GraphFormat::Json,
    });
    let body = match format {
        GraphFormat::Json => io::graph_to_json(&g) + "\n",
        GraphFormat::Dimacs => io::graph_to_dimacs(&g),
    };
    match &args.out {
        Some(path) => {
            fs::write(path, &body).with_context(|| format!("writing {}", path.display()))?;
            let mut obj = Map::new();
            obj.insert("n".into(), json!(g.n()));
            obj.insert("edges".into(), json!(g.edge_count()));
            obj.insert("out".into(), json!(path.display().to_string()));
            Ok(plain(obj))
        }
        None => Ok(Output {
            json: io::graph_to_value(&g),
            text: body,
            ok: true,
        }),
    }
}

#[derive(Args)]
pub struct AnalyzeArgs {
    file: PathBuf,
    /// Comma-separated: chi, omega, mis, nubi, ultra:R, codegree:A, codensity:A:B.
    #[arg(long, value_delimiter = ',', default_value = "chi,omega")]
    metrics: Vec<String>,
}

fn metric_arg(metric: &str, parts: &[&str], i: usize) -> Result<usize> {
    let v = parts.get(i).ok_or_else(|| ultrafree::Error::Invalid(format!("metric `{metric}` is missing an argument")))?;
    Ok(v.parse().map_err(|_| ultrafree::Error::Invalid(format!("metric `{metric}`: `{v}` is not a natural number")))?)
}

pub fn analyze(args: AnalyzeArgs, budget: SearchBudget) -> Result<Output> {
    let g = read_graph(&args.file)?;
    let mut obj = Map::new();
    for metric in &args.metrics {
        let parts: Vec<&str> = metric.split(':').collect();
        let value = match parts[0] {
            "chi" => {
                let c = optimal_coloring(&g, budget)?;
                json!(c.iter().max().map_or(0, |m| m + 1))
            }
            "omega" => json!(max_clique(&g, &mut budget.meter())?.len()),
            "mis" => {
                let mis = enumerate_mis(&g, budget)?;
                json!({"count": mis.len(), "sets": mis})
            }
            "nubi" => {
                let (k, m) = nu_bi(&g, budget)?;
                json!({"value": k, "witness": m.pairs})
            }
            "ultra" => ultra_parameter(&g, metric_arg(metric, &parts, 1)?)?.to_json(),
            "codegree" => json!(codegree_min(&g, metric_arg(metric, &parts, 1)?)?),
            "codensity" => {
                let d = clique_codensity(&g, metric_arg(metric, &parts, 1)?, metric_arg(metric, &parts, 2)?)?;
                json!(d.map(|d| format_rational(&d)))
            }
            other => bail!(ultrafree::Error::Invalid(format!("unknown metric `{other}`"))),
        };
        obj.insert(metric.clone(), value);
    }
    Ok(plain(obj))
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Derive {
    /// `B(G)`: one set `K_v` of maximal independent sets per vertex.
    Bg,
    /// The dual of the input set system.
    Dual,
    /// Neighbourhoods `N(v)` of a graph.
    Nbhd,
    /// The maximal independent sets of a graph as a hypergraph on its vertices.
    Mis,
}

#[derive(Args)]
pub struct SetsysArgs {
    file: PathBuf,
    /// Build the system from the input instead of reading a set-system file.
    #[arg(long, value_enum)]
    derive: Option<Derive>,
    /// Comma-separated: tau, nu, taustar, vc, helly, pq:P:Q.
    #[arg(long, value_delimiter = ',', default_value = "tau,nu,taustar")]
    metrics: Vec<String>,
}

pub fn setsys(args: SetsysArgs, budget: SearchBudget) -> Result<Output> {
    let text = read_input(&args.file)?;
    let f: SetSystem = match args.derive {
        None => io::set_system_from_json(&text)?,
        Some(Derive::Dual) => io::set_system_from_json(&text)?.dual(),
        Some(Derive::Bg) => bg(&io::parse_graph(&text)?, budget)?.0,
        Some(Derive::Nbhd) => neighborhood_system(&io::parse_graph(&text)?),
        Some(Derive::Mis) => mis_hypergraph(&io::parse_graph(&text)?, budget)?,
    };
    let mut obj = Map::new();
    obj.insert("ground".into(), json!(f.ground_size()));
    obj.insert("sets".into(), json!(f.len()));
    for metric in &args.metrics {
        let parts: Vec<&str> = metric.split(':').collect();
        let value = match parts[0] {
            "tau" => {
                let (t, w) = f.transversal_number(budget)?;
                json!({"value": t, "witness": w})
            }
            "nu" => {
                let (m, w) = f.matching_number(budget)?;
                json!({"value": m, "witness": w})
            }
            "taustar" => {
                let lp = f.fractional_transversal()?;
                json!({"value": format_rational(&lp.transversal.value), "transversal": lp.transversal, "matching": lp.matching})
            }
            "vc" => {
                let (d, w) = f.vc_dimension(budget)?;
                json!({"value": d, "witness": w})
            }
            "helly" => json!(f.helly_number(budget)?),
            "pq" => json!(f.has_pq_property(metric_arg(metric, &parts, 1)?, metric_arg(metric, &parts, 2)?)?),
            other => bail!(ultrafree::Error::Invalid(format!("unknown metric `{other}`"))),
        };
        obj.insert(metric.clone(), value);
    }
    Ok(plain(obj))
}

#[derive(Args)]
pub struct SpaceArgs {
    /// A space file (`{"kind": …}`) or a graph file, which gives the MIS space.
    file: PathBuf,
    /// Search Radon-independent sets up to this size.
    #[arg(long)]
    radon_cap: Option<usize>,
    /// Compute a weak epsilon-net for this P/Q.
    #[arg(long)]
    weak_net: Option<String>,
    /// `uniform` or a measure file of P/Q weights.
    #[arg(long, default_value = "uniform")]
    measure: String,
}

fn load_space(text: &str, budget: SearchBudget) -> Result<ConvexitySpace> {
    let is_space = serde_json::from_str::<Value>(text).ok().is_some_and(|v| v.get("kind").is_some());
    if is_space {
        Ok(io::space_from_json(text, budget)?)
    } else {
        Ok(mis_space(&io::parse_graph(text)?, budget)?)
    }
}

pub fn space(args: SpaceArgs, budget: SearchBudget) -> Result<Output> {
    let s = load_space(&read_input(&args.file)?, budget)?;
    let mut obj = Map::new();
    obj.insert("ground".into(), json!(s.ground_len()));
    obj.insert("generators".into(), json!(s.generators().len()));
    obj.insert("helly".into(), json!(s.space_helly_number(budget)?));
    if let Some(cap) = args.radon_cap {
        let cap = cap.min(s.ground_len());
        let v = match s.radon_number(cap)? {
            RadonNumber::Value(r) => json!(r),
            RadonNumber::ExceedsCap => json!(format!(">{cap}")),
        };
        obj.insert("radon".into(), v);
    }
    if let Some(eps) = &args.weak_net {
        let eps = parse_rational(eps)?;
        let mu = if args.measure == "uniform" {
            Measure::uniform(s.ground_len())?
        } else {
            io::measure_from_json(&read_input(Path::new(&args.measure))?)?
        };
        let net = s.weak_eps_net(&mu, &eps, budget)?;
        let labels: Vec<&str> = net.iter().map(|&p| s.point_labels()[p].as_str()).collect();
        obj.insert("weak_net".into(), json!({"eps": format_rational(&eps), "points": net, "labels": labels}));
    }
    Ok(plain(obj))
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Method {
    Haussler,
    Twin,
}

#[derive(Args)]
pub struct DecomposeArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 3)]
    r: usize,
    /// P/Q; defaults to the graph's exact ultra parameter.
    #[arg(long)]
    eps: Option<String>,
    #[arg(long, value_enum, default_value = "haussler")]
    method: Method,
}

pub fn decompose(args: DecomposeArgs, budget: SearchBudget) -> Result<Output> {
    let g = read_graph(&args.file)?;
    let (decomposition, report) = match args.method {
        Method::Twin => (twin_quotient(&g), None),
        Method::Haussler => {
            let eps = match &args.eps {
                Some(e) => parse_rational(e)?,
                None => ultra_parameter(&g, args.r)?
                    .finite()
                    .cloned()
                    .ok_or_else(|| ultrafree::Error::Precondition("no non-adjacent pair; pass --eps".into()))?,
            };
            let run = haussler_run(&g, args.r, &eps, budget)?;
            (run.decomposition, Some(run.report))
        }
    };
    let mut doc = io::decomposition_to_value(&decomposition);
    let ok = report.as_ref().map_or(true, |r| r.all_pass());
    let mut text = format!(
        "parts: {}\nquotient: {} vertices, {} edges\nsizes: {:?}\n",
        decomposition.parts.len(),
        decomposition.quotient.n(),
        decomposition.quotient.edge_count(),
        decomposition.part_sizes()
    );
    if let Some(rep) = report {
        for c in &rep.checks {
            let _ = writeln!(text, "{:<7} {}", format!("{:?}", c.status).to_lowercase(), c.name);
        }
        doc["checks"] = serde_json::to_value(&rep.checks)?;
    }
    Ok(Output { json: doc, text, ok })
}
