//! The ten end-to-end acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one pass/fail line.

use std::time::{Duration, Instant};

use ultrafree::blowup::{haussler_run, p4_obstruction, twin_quotient, verify_hom, vc_chromatic_partition, min_degree_ultra_check};
use ultrafree::catalog::{random_catalog, small_catalog};
use ultrafree::codegree::{clique_codensity, codegree_min};
use ultrafree::coloring::is_proper_coloring;
use ultrafree::constructions::{blowup, complete_bipartite, cycle, gamma_blowup, hypercube_lb, path, petersen, turan};
use ultrafree::convexity::{subcube_space, verify_table1, RadonNumber};
use ultrafree::iso::are_isomorphic;
use ultrafree::rational::{format_rational, int, ratio};
use ultrafree::setsystem::{bg, mis_hypergraph, neighborhood_system, SetSystem};
use ultrafree::ultra::{find_half_graph, nu_bi, ultra_parameter};
use ultrafree::{Graph, Rational, SearchBudget};

type Outcome = Result<String, String>;

const FREE: SearchBudget = SearchBudget::UNLIMITED;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, started: Instant) -> Result<(), String> {
    let took = started.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn epsilon_star(g: &Graph, r: usize) -> Result<Rational, String> {
    let c = ultra_parameter(g, r).map_err(|e| e.to_string())?;
    c.finite().cloned().ok_or_else(|| "no non-adjacent pair".to_string())
}

fn table1() -> Outcome {
    let started = Instant::now();
    let catalog = small_catalog(7);
    let mut checks = 0;
    for g in &catalog {
        for r in [3, 4, 5] {
            let rep = verify_table1(g, r, FREE).map_err(|e| format!("{g:?}: {e}"))?;
            if let Some(f) = rep.failures().next() {
                return Err(format!("{g:?}: {} failed with {}", f.name, f.value));
            };
            checks += rep.checks.len();
        }
    }
    within(Duration::from_secs(300), started)?;
    Ok(format!("{} graphs, {checks} checks in {:?}", catalog.len(), started.elapsed()))
}

fn lp_duality() -> Outcome {
    let catalog = small_catalog(7);
    for g in &catalog {
        let (b, _) = bg(g, FREE).map_err(|e| e.to_string())?;
        let lp = b.fractional_transversal().map_err(|e| format!("{g:?}: {e}"))?;
        ensure(lp.transversal.value == lp.matching.value, || format!("{g:?}: tau* != nu*"))?;
    }
    let (b, _) = bg(&cycle(5), FREE).map_err(|e| e.to_string())?;
    let v = b.fractional_transversal().map_err(|e| e.to_string())?.transversal.value;
    ensure(v == ratio(5, 2), || format!("tau*(B(C_5)) = {}", format_rational(&v)))?;
    Ok(format!("{} graphs, tau*(B(C_5)) = 5/2", catalog.len()))
}

fn subcubes() -> Outcome {
    let mut seen = Vec::new();
    for n in 1..=3usize {
        let s = subcube_space(n).map_err(|e| e.to_string())?;
        let expect = (n + 1).ilog2() as usize + 1;
        let radon = s.radon_number(s.ground_len()).map_err(|e| e.to_string())?;
        ensure(radon == RadonNumber::Value(expect), || format!("n={n}: radon {radon:?}, expected {expect}"))?;
        let h = s.space_helly_number(FREE).map_err(|e| e.to_string())?;
        ensure(h == 2, || format!("n={n}: helly {h}"))?;
        seen.push(format!("n={n}: r={expect} h=2"));
    }
    Ok(seen.join(", "))
}

fn vc_matching() -> Outcome {
    let mut graphs = small_catalog(7);
    graphs.extend(random_catalog(200, 1, 10, 0x5eed));
    let mut active = 0;
    for g in &graphs {
        let (b, _) = bg(g, FREE).map_err(|e| e.to_string())?;
        let m = mis_hypergraph(g, FREE).map_err(|e| e.to_string())?;
        let nu = nu_bi(g, FREE).map_err(|e| e.to_string())?.0;
        let vb = b.vc_dimension(FREE).map_err(|e| e.to_string())?.0;
        let vm = m.vc_dimension(FREE).map_err(|e| e.to_string())?.0;
        if vb >= 3 {
            active += 1;
            ensure(vb <= nu, || format!("{g:?}: vc(B) = {vb} > nu_bi = {nu}"))?;
        }
        if vm >= 1 {
            active += 1;
            ensure(vm <= nu, || format!("{g:?}: vc(M) = {vm} > nu_bi = {nu}"))?;
        }
    }
    Ok(format!("{} graphs, {active} non-vacuous comparisons", graphs.len()))
}

fn no_half_graph() -> Outcome {
    let mut instances = vec![("C_5".to_string(), cycle(5))];
    instances.push(("hypercube_lb(2).G".into(), hypercube_lb(2).map_err(|e| e.to_string())?.1));
    for k in 1..=8 {
        instances.push((format!("C_5[{k}]"), blowup(&cycle(5), &[k; 5]).map_err(|e| e.to_string())?.0));
    }
    for sizes in [[1, 2, 3, 4, 5], [2, 1, 2, 1, 2], [8, 8, 8, 8, 1], [3, 5, 7, 5, 3], [1, 1, 1, 1, 36]] {
        instances.push((format!("C_5{sizes:?}"), blowup(&cycle(5), &sizes).map_err(|e| e.to_string())?.0));
    }
    for (name, g) in &instances {
        let eps = epsilon_star(g, 3)?;
        let k: num_bigint::BigInt = ultrafree::rational::ceil_int(&(int(1) / &eps)) + 1;
        let k = usize::try_from(k).map_err(|e| e.to_string())?;
        let found = find_half_graph(g, k, FREE).map_err(|e| e.to_string())?;
        ensure(found.is_none(), || format!("{name}: half graph with k={k}: {found:?}"))?;
    }
    Ok(format!("{} instances", instances.len()))
}

fn hypercube_d3() -> Outcome {
    let started = Instant::now();
    let (h, g) = hypercube_lb(3).map_err(|e| e.to_string())?;
    ensure(g.n() == 56, || format!("|G| = {}", g.n()))?;
    let cod = codegree_min(&g, 2).map_err(|e| e.to_string())?.unwrap_or(0);
    ensure(cod >= 2, || format!("min codegree {cod}"))?;
    ensure(g.is_triangle_free() && g.is_maximal_k_free(3), || "not maximal triangle-free".into())?;
    let q = twin_quotient(&g).quotient;
    ensure(q.n() == 14 && are_isomorphic(&q, &h), || format!("twin quotient has {} vertices", q.n()))?;
    let core = p4_obstruction(&g, FREE).map_err(|e| e.to_string())?.core.len();
    ensure(core >= 4, || format!("core {core}"))?;
    within(Duration::from_secs(120), started)?;
    Ok(format!("codegree {cod}, quotient 14, core {core}"))
}

fn brute_vc(f: &SetSystem) -> usize {
    let m = f.ground_size();
    let shattered = |s: &[usize]| {
        let mut traces: Vec<u64> = f
            .sets()
            .iter()
            .map(|set| s.iter().enumerate().fold(0, |acc, (i, &e)| acc | (u64::from(set.contains(e)) << i)))
            .collect();
        traces.sort_unstable();
        traces.dedup();
        traces.len() == 1 << s.len()
    };
    let mut best = 0;
    for mask in 0u32..1 << m {
        let s: Vec<usize> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
        if s.len() > best && shattered(&s) {
            best = s.len();
        }
    }
    best
}

fn bounded_vc_dim() -> Outcome {
    let g = gamma_blowup(&complete_bipartite(2, 2), 1, 2).map_err(|e| e.to_string())?;
    ensure(g.n() == 16, || format!("n = {}", g.n()))?;
    let f = neighborhood_system(&g);
    let vc = f.vc_dimension(FREE).map_err(|e| e.to_string())?.0;
    let brute = brute_vc(&f);
    ensure(vc == brute && vc <= 3, || format!("vc {vc}, brute force {brute}"))?;
    ensure(vc == 3, || format!("regression: vc changed to {vc}"))?;
    let core = p4_obstruction(&g, FREE).map_err(|e| e.to_string())?.core.len();
    ensure(core >= 4, || format!("core {core}"))?;
    Ok(format!("vc {vc}, core {core}"))
}

fn pipeline() -> Outcome {
    let mut instances = vec![("hypercube_lb(2).G".to_string(), hypercube_lb(2).map_err(|e| e.to_string())?.1)];
    for code in 0..4usize.pow(5) {
        let sizes: Vec<usize> = (0..5).map(|i| 2 + code / 4usize.pow(i) % 4).collect();
        instances.push((format!("C_5{sizes:?}"), blowup(&cycle(5), &sizes).map_err(|e| e.to_string())?.0));
    }
    let gammas = [("P_3", path(3)), ("C_5", cycle(5)), ("K_2,2", complete_bipartite(2, 2)), ("K_2,3", complete_bipartite(2, 3)), ("Petersen", petersen())];
    for (name, gamma) in &gammas {
        for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            instances.push((format!("{name}[{a},{b}]"), gamma_blowup(gamma, a, b).map_err(|e| e.to_string())?));
        }
    }
    for (name, g) in &instances {
        let eps = epsilon_star(g, 3)?;
        let run = haussler_run(g, 3, &eps, FREE).map_err(|e| format!("{name}: {e}"))?;
        let d = &run.decomposition;
        ensure(verify_hom(g, &d.quotient, &d.origin), || format!("{name}: origin is not a homomorphism"))?;
        ensure(d.quotient.is_maximal_k_free(3), || format!("{name}: quotient not maximal triangle-free"))?;
        if let Some(f) = run.report.failures().next() {
            return Err(format!("{name}: {} failed with {}", f.name, f.value));
        };
    }
    Ok(format!("{} instances", instances.len()))
}

fn min_degree_and_codegree() -> Outcome {
    let mut turans = 0;
    for r in [3usize, 4, 5] {
        for n in r - 1..=30 {
            let g = turan(n, r - 1).map_err(|e| e.to_string())?;
            let delta = g.min_degree().unwrap_or(0);
            let eps = ratio(delta as i64, n as i64) - ratio(2 * r as i64 - 5, 2 * r as i64 - 3);
            if eps <= int(0) {
                continue;
            }
            let rep = min_degree_ultra_check(&g, r, &eps).map_err(|e| format!("T({n},{}): {e}", r - 1))?;
            ensure(rep.all_pass(), || format!("T({n},{}): {:?}", r - 1, rep.checks))?;
            turans += 1;
        }
    }
    let mut codeg = 0;
    for g in small_catalog(7) {
        let Some(d2) = codegree_min(&g, 2).map_err(|e| e.to_string())? else { continue };
        if d2 == 0 {
            continue;
        }
        let c = ratio(d2 as i64, g.n() as i64);
        let dens = clique_codensity(&g, 2, 2).map_err(|e| e.to_string())?.expect("independent pair exists");
        let need = int(2) - int(1) / &c;
        ensure(dens >= need, || format!("{g:?}: codensity {} < {}", format_rational(&dens), format_rational(&need)))?;
        codeg += 1;
    }
    Ok(format!("{turans} Turan graphs, {codeg} catalog graphs"))
}

fn vc_chromatic() -> Outcome {
    let mut runs = 0;
    for g in small_catalog(7).into_iter().filter(|g| g.is_triangle_free()) {
        for c in [ratio(1, 4), ratio(1, 3), ratio(2, 5)] {
            if int(g.min_degree().unwrap_or(0)) < &c * int(g.n()) {
                continue;
            }
            let (col, rep) = vc_chromatic_partition(&g, &c, FREE).map_err(|e| format!("{g:?}: {e}"))?;
            ensure(is_proper_coloring(&g, &col), || format!("{g:?}: improper colouring"))?;
            ensure(rep.all_pass(), || format!("{g:?}, c={}: {:?}", format_rational(&c), rep.checks))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} runs"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("graph/set-system dictionary on connected graphs up to 7 vertices", table1),
        ("LP duality tau* = nu* on B(G)", lp_duality),
        ("subcube Radon and Helly numbers", subcubes),
        ("VC-dimension bounded by bipartite induced matchings", vc_matching),
        ("no half graph at k = ceil(1/eps*) + 1", no_half_graph),
        ("hypercube construction, d = 3", hypercube_d3),
        ("bounded VC-dimension of K_2,2[1,2]", bounded_vc_dim),
        ("blow-up partition pipeline self-check", pipeline),
        ("min-degree ultra and codegree edge density", min_degree_and_codegree),
        ("VC-bounded chromatic partition", vc_chromatic),
    ];
    let results: Vec<(Outcome, Duration)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(_, f)| {
                s.spawn(move || {
                    let t = Instant::now();
                    (f(), t.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap_or_else(|_| (Err("panicked".into()), Duration::ZERO))).collect()
    });
    let mut failed = 0;
    for (i, ((name, _), (outcome, took))) in criteria.iter().zip(results).enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {:>2}: pass  {name} ({detail}; {:.1}s)", i + 1, took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
