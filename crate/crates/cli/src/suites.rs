//! Verification suites: each runs one family of exact checks over a list of instances and
//! folds the per-instance reports into one report with a line per check name.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use ultrafree::blowup::{min_degree_ultra_check, p4_obstruction, twin_quotient, vc_chromatic_partition};
use ultrafree::catalog::{extended_catalog, small_catalog};
use ultrafree::codegree::{clique_codensity, codegree_min};
use ultrafree::coloring::is_proper_coloring;
use ultrafree::constructions::{blowup, cycle, hypercube_lb, turan};
use ultrafree::convexity::verify_table1;
use ultrafree::iso::are_isomorphic;
use ultrafree::rational::{ceil_int, format_rational, int, ratio};
use ultrafree::ultra::{check_vc_clique_bound, find_half_graph, ultra_parameter};
use ultrafree::{clique_number, Check, Error, Graph, Rational, Report, SearchBudget, Status};

use crate::Output;

const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Catalog {
    /// All connected graphs on at most 7 vertices.
    Small,
    /// The small catalog plus 200 seeded random graphs on at most 12 vertices.
    Extended,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// table1, halfgraph, construction:d=D, mindeg-ultra, codeg-edge or vc-chromatic.
    #[arg(long)]
    suite: String,
    #[arg(long, value_enum, default_value = "small")]
    catalog: Catalog,
    /// Seed for the random part of the extended catalog.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Record wall-clock time in the report (makes it non-reproducible).
    #[arg(long)]
    timing: bool,
}

enum Suite {
    Table1,
    HalfGraph,
    Construction(usize),
    MinDegreeUltra,
    CodegEdge,
    VcChromatic,
}

fn parse_suite(s: &str) -> Result<Suite> {
    Ok(match s {
        "table1" => Suite::Table1,
        "halfgraph" => Suite::HalfGraph,
        "mindeg-ultra" => Suite::MinDegreeUltra,
        "codeg-edge" => Suite::CodegEdge,
        "vc-chromatic" => Suite::VcChromatic,
        other => match other.strip_prefix("construction:d=").map(str::parse) {
            Some(Ok(d)) if d >= 2 => Suite::Construction(d),
            _ => bail!(Error::Invalid(format!("unknown suite `{other}`"))),
        },
    })
}

/// One graph to check, named for the witness.
struct Instance {
    name: String,
    graph: Graph,
}

fn catalog_instances(catalog: Catalog, seed: u64) -> Vec<Instance> {
    let graphs = match catalog {
        Catalog::Small => small_catalog(7),
        Catalog::Extended => extended_catalog(seed),
    };
    graphs
        .into_iter()
        .enumerate()
        .map(|(i, graph)| Instance { name: format!("catalog#{i}"), graph })
        .collect()
}

fn table1(g: &Graph, budget: SearchBudget) -> ultrafree::Result<Report> {
    let mut rep = Report::new();
    for r in [3, 4, 5] {
        for c in verify_table1(g, r, budget)?.checks {
            // The dictionary checks other than the r-dependent one are the same for every r.
            if r == 3 || c.name.starts_with('k') {
                rep.push(c);
            }
        }
    }
    Ok(rep)
}

/// No half graph of size `⌈1/ε*⌉+1` in an `ε*`-ultra maximal `K_r`-free graph, with
/// `r = ω+1`, plus the VC-dimension bound that follows from it.
fn half_graph(g: &Graph, r: Option<usize>, budget: SearchBudget) -> ultrafree::Result<Report> {
    let mut rep = Report::new();
    let r = r.unwrap_or_else(|| (clique_number(g) + 1).max(3));
    let cert = ultra_parameter(g, r)?;
    let eps = match cert.finite() {
        Some(e) if *e > int(0) => e.clone(),
        _ => {
            rep.push(Check::skipped("no_half_graph", "eps-ultra graphs have no half graph of size 1/eps+1", "not eps-ultra for any eps > 0"));
            return Ok(rep);
        }
    };
    let k = usize::try_from(ceil_int(&(int(1) / &eps)) + 1u32).map_err(|_| Error::Invalid("k overflows".into()))?;
    let found = find_half_graph(g, k, budget)?;
    rep.push(Check::new(
        "no_half_graph",
        "eps-ultra graphs have no half graph of size 1/eps+1",
        found.is_none(),
        json!({"r": r, "epsilon_star": format_rational(&eps), "k": k}),
        found.map(|h| json!({"xs": h.xs, "ys": h.ys})),
    ));
    rep.extend(check_vc_clique_bound(g, r, &eps, budget)?);
    Ok(rep)
}

fn construction(d: usize, budget: SearchBudget) -> ultrafree::Result<Report> {
    let (h, g) = hypercube_lb(d)?;
    let q = 1usize << d;
    let mut rep = Report::new();
    let n_ok = g.n() == (2 * d + 1) * q;
    rep.push(Check::new("order", "|G| = (2d+1) 2^d", n_ok, json!(g.n()), (!n_ok).then(|| json!(g.n()))));
    let cod = codegree_min(&g, 2)?.unwrap_or(0);
    let ok = cod >= q / 4;
    rep.push(Check::new("min_codegree", "non-adjacent pairs have at least 2^{d-2} common neighbours", ok, json!({"codegree": cod, "need": q / 4}), (!ok).then(|| json!(cod))));
    let ok = g.is_triangle_free() && g.is_maximal_k_free(3);
    rep.push(Check::new("maximal_triangle_free", "G is maximal triangle-free", ok, json!(ok), (!ok).then(|| json!(false))));
    let quotient = twin_quotient(&g).quotient;
    let ok = quotient.n() == 2 * d + q && are_isomorphic(&quotient, &h);
    rep.push(Check::new("twin_quotient_is_h", "collapsing twins of G gives H", ok, json!(quotient.n()), (!ok).then(|| json!(quotient.n()))));
    let core = p4_obstruction(&g, budget)?;
    let ok = core.is_valid(&g) && core.core.len() >= q / 2;
    rep.push(Check::new(
        "p4_core",
        "2^{d-1} vertices pairwise joined by induced P_4s, so no small triangle-free image",
        ok,
        json!({"core": core.core.len(), "need": q / 2}),
        (!ok).then(|| json!(core.core)),
    ));
    Ok(rep)
}

fn min_degree_ultra(g: &Graph, r: usize) -> ultrafree::Result<Report> {
    let n = g.n();
    let delta = g.min_degree().unwrap_or(0);
    let eps = ratio(delta as i64, n as i64) - ratio(2 * r as i64 - 5, 2 * r as i64 - 3);
    let mut rep = Report::new();
    let name = format!("r{r}/epsilon_star_ge_eps_pow");
    if eps <= int(0) || !g.is_k_free(r) || !g.is_maximal_k_free(r) {
        rep.push(Check::skipped(name, "high minimum degree forces eps^{r-2}-ultra maximal K_r-freeness", "hypothesis not met"));
        return Ok(rep);
    }
    Ok(min_degree_ultra_check(g, r, &eps)?.prefixed(&format!("r{r}")))
}

fn codeg_edge(g: &Graph) -> ultrafree::Result<Report> {
    let mut rep = Report::new();
    let reference = "min codegree cn forces edge codensity 2 - 1/c";
    match codegree_min(g, 2)? {
        Some(d2) if d2 > 0 => {
            let c = ratio(d2 as i64, g.n() as i64);
            let dens = clique_codensity(g, 2, 2)?.ok_or_else(|| Error::InternalContradiction("no independent pair".into()))?;
            let need = int(2) - int(1) / &c;
            let ok = dens >= need;
            rep.push(Check::new(
                "codensity_ge_2_minus_1_over_c",
                reference,
                ok,
                json!({"codensity": format_rational(&dens), "need": format_rational(&need)}),
                (!ok).then(|| json!({"codegree": d2})),
            ));
        }
        _ => rep.push(Check::skipped("codensity_ge_2_minus_1_over_c", reference, "no non-adjacent pair with a common neighbour")),
    }
    Ok(rep)
}

fn vc_chromatic(g: &Graph, c: &Rational, budget: SearchBudget) -> ultrafree::Result<Report> {
    let tag = format!("c={}", format_rational(c));
    if !g.is_triangle_free() || g.n() == 0 || int(g.min_degree().unwrap_or(0)) < c * int(g.n()) {
        let mut rep = Report::new();
        rep.push(Check::skipped(format!("{tag}/colors_le_bound"), "chi(G) <= e(d+1)(2e/3c)^d", "hypothesis not met"));
        return Ok(rep);
    }
    let (colouring, mut rep) = vc_chromatic_partition(g, c, budget)?;
    let ok = is_proper_coloring(g, &colouring);
    rep.push(Check::new("proper_colouring", "the parts form a proper colouring", ok, json!(ok), (!ok).then(|| json!(colouring))));
    Ok(rep.prefixed(&tag))
}

type Job<'a> = Box<dyn Fn(SearchBudget) -> ultrafree::Result<Report> + Send + Sync + 'a>;

fn jobs<'a>(suite: &Suite, instances: &'a [Instance]) -> Vec<(String, Job<'a>)> {
    let mut out: Vec<(String, Job<'a>)> = Vec::new();
    match suite {
        Suite::Table1 => {
            for inst in instances {
                out.push((inst.name.clone(), Box::new(move |b| table1(&inst.graph, b))));
            }
        }
        Suite::HalfGraph => {
            for inst in instances {
                out.push((inst.name.clone(), Box::new(move |b| half_graph(&inst.graph, None, b))));
            }
        }
        Suite::Construction(d) => {
            let d = *d;
            out.push((format!("hypercube_lb({d})"), Box::new(move |b| construction(d, b))));
        }
        Suite::MinDegreeUltra => {
            for inst in instances {
                for r in [3, 4, 5] {
                    out.push((format!("{}/r{r}", inst.name), Box::new(move |_| min_degree_ultra(&inst.graph, r))));
                }
            }
        }
        Suite::CodegEdge => {
            for inst in instances {
                out.push((inst.name.clone(), Box::new(move |_| codeg_edge(&inst.graph))));
            }
        }
        Suite::VcChromatic => {
            for inst in instances {
                for (p, q) in [(1, 4), (1, 3), (2, 5)] {
                    out.push((format!("{}/c={p}/{q}", inst.name), Box::new(move |b| vc_chromatic(&inst.graph, &ratio(p, q), b))));
                }
            }
        }
    }
    out
}

/// Instances beyond the catalog that each suite always includes.
fn fixed_instances(suite: &Suite) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    match suite {
        Suite::HalfGraph => {
            out.push(Instance { name: "hypercube_lb(2).G".into(), graph: hypercube_lb(2)?.1 });
            for k in 2..=8 {
                out.push(Instance { name: format!("C_5[{k}]"), graph: blowup(&cycle(5), &[k; 5])?.0 });
            }
        }
        Suite::MinDegreeUltra => {
            for parts in 2..=4 {
                for n in parts..=30 {
                    out.push(Instance { name: format!("turan({n},{parts})"), graph: turan(n, parts)? });
                }
            }
        }
        _ => {}
    }
    Ok(out)
}

/// Runs the jobs on all cores; results come back in job order.
fn run_all(jobs: &[(String, Job<'_>)], budget: SearchBudget) -> Vec<ultrafree::Result<Report>> {
    let next = AtomicUsize::new(0);
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(jobs.len().max(1));
    let mut slots: Vec<Option<ultrafree::Result<Report>>> = (0..jobs.len()).map(|_| None).collect();
    let done: Vec<Vec<(usize, ultrafree::Result<Report>)>> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                s.spawn(|| {
                    let mut mine = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some((_, job)) = jobs.get(i) else { break };
                        mine.push((i, job(budget)));
                    }
                    mine
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    for (i, r) in done.into_iter().flatten() {
        slots[i] = Some(r);
    }
    slots.into_iter().map(|r| r.expect("every job ran")).collect()
}

#[derive(Default)]
struct Tally {
    reference: String,
    instances: usize,
    passed: usize,
    skipped: usize,
    witness: Option<Value>,
}

fn aggregate(names: &[String], results: Vec<ultrafree::Result<Report>>) -> Result<Vec<Check>> {
    let mut tallies: BTreeMap<String, Tally> = BTreeMap::new();
    for (name, result) in names.iter().zip(results) {
        let checks = match result {
            Ok(rep) => rep.checks,
            Err(e @ Error::BudgetExceeded { .. }) => bail!(e),
            Err(e) => vec![Check::new("no_errors", "every instance runs to completion", false, json!(false), Some(json!(e.to_string())))],
        };
        for c in checks {
            let t = tallies.entry(c.name.clone()).or_default();
            if t.reference.is_empty() {
                t.reference = c.reference.clone();
            }
            t.instances += 1;
            match c.status {
                Status::Pass => t.passed += 1,
                Status::Skipped => t.skipped += 1,
                Status::Fail => {
                    if t.witness.is_none() {
                        t.witness = Some(json!({"instance": name, "value": c.value, "witness": c.witness}));
                    }
                }
            }
        }
    }
    Ok(tallies
        .into_iter()
        .map(|(name, t)| {
            let value = json!({"instances": t.instances, "passed": t.passed, "skipped": t.skipped});
            let mut c = Check::new(name, t.reference, t.witness.is_none(), value, t.witness);
            if t.passed == 0 && t.skipped == t.instances {
                c.status = Status::Skipped;
            }
            c
        })
        .collect())
}

pub fn verify(args: VerifyArgs, budget: SearchBudget) -> Result<Output> {
    budget.validate()?;
    let started = Instant::now();
    let suite = parse_suite(&args.suite)?;
    let mut instances = match suite {
        Suite::Construction(_) => Vec::new(),
        _ => catalog_instances(args.catalog, args.seed),
    };
    instances.extend(fixed_instances(&suite)?);
    let jobs = jobs(&suite, &instances);
    let names: Vec<String> = jobs.iter().map(|(n, _)| n.clone()).collect();
    let results = run_all(&jobs, budget);

    let mut report = Report::new();
    report.checks = aggregate(&names, results)?;
    report.sort_by_name();
    let catalog = match args.catalog {
        Catalog::Small => "small",
        Catalog::Extended => "extended",
    };
    let description = format!("suite={};catalog={catalog};seed={};jobs={}", args.suite, args.seed, names.len());
    report.input_digest = hex::encode(Sha256::digest(description.as_bytes()));
    if args.timing {
        report.timing_ms = Some(u64::try_from(started.elapsed().as_millis()).unwrap_or(u64::MAX));
    }

    let mut text = String::new();
    for c in &report.checks {
        let status = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        };
        let _ = writeln!(text, "{status:<4}  {:<40} {}", c.name, c.value);
        if let Some(w) = &c.witness {
            let _ = writeln!(text, "      witness: {w}");
        }
    }
    let _ = writeln!(text, "{} jobs, digest {}", names.len(), report.input_digest);
    if let Some(ms) = report.timing_ms {
        let _ = writeln!(text, "{ms} ms");
    }
    Ok(Output {
        ok: report.all_pass(),
        json: serde_json::to_value(&report)?,
        text,
    })
}
