//! Blow-up decompositions: greedy separated subfamilies, the packing-based partition of
//! ultra graphs, twin quotients and induced-`P_4` obstructions to small images.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde_json::json;

use crate::budget::SearchBudget;
use crate::cliques::max_clique;
use crate::codegree::has_induced_p4;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::rational::{e_upper, format_rational, int, pow, Rational};
use crate::report::{Check, Report};
use crate::setsystem::{neighborhood_system, SetSystem};
use crate::ultra::ultra_parameter;

/// `G = F[·]`: `parts[i]` is blown up from quotient vertex `i`, and `origin[v]` names the
/// part containing `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupDecomposition {
    pub parts: Vec<VertexSet>,
    pub quotient: Graph,
    pub origin: Vec<Vertex>,
}

impl BlowupDecomposition {
    /// Builds the quotient of a partition given as an origin map, checking that it is a
    /// genuine blow-up (parts independent or singletons, pairs complete or anti-complete).
    pub fn from_origin(g: &Graph, origin: Vec<Vertex>) -> Result<Self> {
        let m = origin.iter().map(|&i| i + 1).max().unwrap_or(0);
        let mut parts = vec![Vec::new(); m];
        for (v, &i) in origin.iter().enumerate() {
            parts[i].push(v);
        }
        if parts.iter().any(Vec::is_empty) {
            return Err(Error::Invalid("origin map skips a part".into()));
        }
        let mut quotient = Graph::empty(m);
        for i in 0..m {
            for j in i + 1..m {
                if g.has_edge(parts[i][0], parts[j][0]) {
                    quotient.add_edge(i, j);
                }
            }
        }
        let d = BlowupDecomposition {
            parts: parts.into_iter().map(VertexSet::from).collect(),
            quotient,
            origin,
        };
        d.validate(g)?;
        Ok(d)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.origin.len() != g.n() || self.parts.len() != self.quotient.n() {
            return Err(Error::ClaimViolation("decomposition sizes do not match the graph".into()));
        }
        for (i, part) in self.parts.iter().enumerate() {
            if part.is_empty() || part.iter().any(|&v| v >= g.n() || self.origin[v] != i) {
                return Err(Error::ClaimViolation(format!("part {i} disagrees with the origin map")));
            }
            if part.len() > 1 && !g.is_independent(part) {
                return Err(Error::ClaimViolation(format!("part {i} is neither independent nor a singleton")));
            }
        }
        if self.parts.iter().map(|p| p.len()).sum::<usize>() != g.n() {
            return Err(Error::ClaimViolation("parts do not cover the vertex set".into()));
        }
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let (a, b) = (self.origin[u], self.origin[v]);
                let expect = a != b && self.quotient.has_edge(a, b);
                if g.has_edge(u, v) != expect {
                    return Err(Error::ClaimViolation(format!(
                        "pair ({u}, {v}) is not explained by quotient pair ({a}, {b})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.len()).collect()
    }
}

/// Witness that any triangle-free homomorphic image has at least `|core|` vertices:
/// every core pair `u, v` is joined by an induced path `u–y–z–v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionCertificate {
    pub core: VertexSet,
    pub links: BTreeMap<(Vertex, Vertex), (Vertex, Vertex)>,
}

impl ObstructionCertificate {
    pub fn is_valid(&self, g: &Graph) -> bool {
        let core = self.core.as_slice();
        core.iter().enumerate().all(|(i, &u)| {
            core[i + 1..].iter().all(|&v| {
                self.links
                    .get(&(u, v))
                    .is_some_and(|&(y, z)| crate::codegree::is_induced_p4(g, u, y, z, v))
            })
        })
    }
}

fn sym_diff(a: &FixedBitSet, b: &FixedBitSet) -> usize {
    a.symmetric_difference(b).count()
}

/// Greedy maximal subfamily whose members pairwise differ in more than `s` elements,
/// scanning indices in increasing order.
pub fn separated_subfamily(f: &SetSystem, s: usize) -> Result<Vec<usize>> {
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..f.len() {
        if chosen.iter().all(|&j| sym_diff(f.bits(i), f.bits(j)) > s) {
            chosen.push(i);
        }
    }
    for i in 0..f.len() {
        if !chosen.contains(&i) && chosen.iter().all(|&j| sym_diff(f.bits(i), f.bits(j)) > s) {
            return Err(Error::ClaimViolation(format!("separated subfamily is not maximal: {i} can be added")));
        }
    }
    Ok(chosen)
}

/// Upper bound `e (d+1) (2e|F| / sigma)^d` on a `sigma`-separated subfamily of a system
/// of VC-dimension `d`, with `e` replaced by a rational upper bound.
pub fn packing_bound(d: usize, family_size: usize, sigma: usize) -> Result<Rational> {
    if sigma == 0 {
        return Err(Error::Precondition("separation must be positive".into()));
    }
    let e = e_upper();
    let base = int(2) * &e * int(family_size) / int(sigma);
    Ok(e * int(d + 1) * pow(&base, d))
}

/// Assigns every vertex to the first representative whose neighbourhood is within `s`.
fn assign(f: &SetSystem, reps: &[usize], s: usize) -> Result<Vec<usize>> {
    (0..f.len())
        .map(|v| {
            reps.iter()
                .position(|&r| sym_diff(f.bits(v), f.bits(r)) <= s)
                .ok_or_else(|| Error::ClaimViolation(format!("vertex {v} is far from every representative")))
        })
        .collect()
}

fn floor_usize(r: &Rational) -> usize {
    let q = r.numer().div_floor(r.denom());
    usize::try_from(q).unwrap_or(usize::MAX)
}

/// Everything the partition pipeline computed, including the self-checks it performed.
#[derive(Clone, Debug, PartialEq)]
pub struct HausslerRun {
    pub decomposition: BlowupDecomposition,
    /// Vertices whose neighbourhoods form the separated subfamily.
    pub representatives: Vec<Vertex>,
    pub threshold: Rational,
    pub report: Report,
}

/// Partition of an `eps`-ultra maximal `K_r`-free graph into a blow-up of a maximal
/// `K_r`-free graph.
pub fn haussler_partition(g: &Graph, r: usize, eps: &Rational) -> Result<BlowupDecomposition> {
    haussler_run(g, r, eps, SearchBudget::UNLIMITED).map(|run| run.decomposition)
}

/// The partition pipeline with its report; `budget` bounds the VC-dimension search used
/// by the packing check.
pub fn haussler_run(g: &Graph, r: usize, eps: &Rational, budget: SearchBudget) -> Result<HausslerRun> {
    if *eps <= Rational::zero() {
        return Err(Error::Precondition("eps must be positive".into()));
    }
    let cert = ultra_parameter(g, r)?;
    if !cert.is_ultra(eps) {
        return Err(Error::Precondition(format!(
            "graph is not {}-ultra (epsilon* = {})",
            format_rational(eps),
            cert.finite().map_or("infinite".into(), format_rational)
        )));
    }
    let n = g.n();
    let threshold = eps * int(n) / int(10);
    let s = floor_usize(&threshold);
    let nbhd = neighborhood_system(g);
    let reps = separated_subfamily(&nbhd, s)?;
    let class = assign(&nbhd, &reps, s)?;
    let mut classes: Vec<Vec<Vertex>> = vec![Vec::new(); reps.len()];
    for (v, &i) in class.iter().enumerate() {
        classes[i].push(v);
    }

    // No vertex sees one member of a class but not another.
    for part in &classes {
        for &v in part {
            for &w in part {
                let mut bad = g.neighbors(v).clone();
                bad.difference_with(g.neighbors(w));
                bad.set(w, false);
                if let Some(u) = bad.ones().next() {
                    return Err(Error::ClaimViolation(format!(
                        "{u} is adjacent to {v} but not to {w} although both lie in one class"
                    )));
                }
            }
        }
    }
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            let edges = a.iter().flat_map(|&u| b.iter().map(move |&v| (u, v))).filter(|&(u, v)| g.has_edge(u, v)).count();
            if edges != 0 && edges != a.len() * b.len() {
                return Err(Error::ClaimViolation(format!(
                    "classes of {} and {} are neither complete nor anti-complete",
                    a[0], b[0]
                )));
            }
        }
    }
    for part in &classes {
        if part.len() >= r && !g.is_independent(part) {
            return Err(Error::ClaimViolation(format!("class of {} has {} >= r vertices but an edge", part[0], part.len())));
        }
    }

    // Classes smaller than r become singletons; parts are ordered by their least vertex.
    let mut parts: Vec<Vec<Vertex>> = Vec::new();
    for part in classes {
        if part.len() < r {
            parts.extend(part.into_iter().map(|v| vec![v]));
        } else {
            parts.push(part);
        }
    }
    parts.sort();
    let mut origin = vec![0; n];
    for (i, p) in parts.iter().enumerate() {
        for &v in p {
            origin[v] = i;
        }
    }
    let decomposition = BlowupDecomposition::from_origin(g, origin)?;
    let f = &decomposition.quotient;
    if !verify_hom(g, f, &decomposition.origin) {
        return Err(Error::ClaimViolation("origin map is not a homomorphism".into()));
    }
    if !f.is_k_free(r) || !f.is_maximal_k_free(r) {
        return Err(Error::ClaimViolation(format!("quotient is not maximal K_{r}-free")));
    }
    if f.n() > (r - 1) * reps.len() {
        return Err(Error::ClaimViolation(format!(
            "quotient has {} vertices, more than (r-1)|X| = {}",
            f.n(),
            (r - 1) * reps.len()
        )));
    }

    let mut report = Report::new();
    report.push(Check::new(
        "blowup_verified",
        "G = F[.] for a maximal K_r-free F with |F| <= (r-1)|X|",
        true,
        json!({"quotient_size": f.n(), "separated": reps.len(), "threshold": format_rational(&threshold)}),
        None,
    ));
    let (d, _) = nbhd.vc_dimension(budget)?;
    let bound = packing_bound(d, n, s + 1)?;
    let ok = int(reps.len()) <= bound;
    report.push(Check::new(
        "packing_bound",
        "an s-separated subfamily has at most e(d+1)(2e|F|/s)^d members",
        ok,
        json!({"separated": reps.len(), "vc": d, "separation": s + 1, "bound": format_rational(&bound)}),
        (!ok).then(|| json!(reps)),
    ));
    Ok(HausslerRun {
        decomposition,
        representatives: reps,
        threshold,
        report,
    })
}

/// Partition into classes of false twins (equal open neighbourhoods).
pub fn twin_quotient(g: &Graph) -> BlowupDecomposition {
    let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut origin = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let key: Vec<usize> = g.neighbors(v).ones().collect();
        let next = seen.len();
        origin.push(*seen.entry(key).or_insert(next));
    }
    BlowupDecomposition::from_origin(g, origin).expect("twin classes always form a blow-up")
}

/// Whether `phi` maps every edge of `g` to an edge of `f`.
pub fn verify_hom(g: &Graph, f: &Graph, phi: &[Vertex]) -> bool {
    phi.len() == g.n() && phi.iter().all(|&x| x < f.n()) && g.edges().all(|(u, v)| f.has_edge(phi[u], phi[v]))
}

/// Largest vertex set whose pairs are all joined by induced `P_4`s.
pub fn p4_obstruction(g: &Graph, budget: SearchBudget) -> Result<ObstructionCertificate> {
    budget.validate()?;
    let n = g.n();
    let mut aux = Graph::empty(n);
    let mut witness = BTreeMap::new();
    for u in 0..n {
        for v in u + 1..n {
            if let Some(yz) = has_induced_p4(g, u, v) {
                aux.add_edge(u, v);
                witness.insert((u, v), yz);
            }
        }
    }
    let core = VertexSet::new(max_clique(&aux, &mut budget.meter())?);
    let links = core
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| core[i + 1..].iter().map(move |&v| (u, v)))
        .map(|p| (p, witness[&p]))
        .collect();
    let cert = ObstructionCertificate { core, links };
    if !cert.is_valid(g) {
        return Err(Error::ClaimViolation("obstruction witness is not an induced P4".into()));
    }
    Ok(cert)
}

/// Colouring of a triangle-free graph with `δ >= cn` by the classes of a separated
/// neighbourhood subfamily with `s = cn/3`, checked against `e(d+1)(2e/3c)^d`.
pub fn vc_chromatic_partition(g: &Graph, c: &Rational, budget: SearchBudget) -> Result<(Vec<usize>, Report)> {
    let n = g.n();
    if *c <= Rational::zero() || n == 0 {
        return Err(Error::Precondition("needs c > 0 and a non-empty graph".into()));
    }
    if !g.is_triangle_free() {
        return Err(Error::Precondition("graph is not triangle-free".into()));
    }
    let delta = g.min_degree().unwrap_or(0);
    if int(delta) < c * int(n) {
        return Err(Error::Precondition(format!(
            "minimum degree {delta} is below {} * {n}",
            format_rational(c)
        )));
    }
    let s = floor_usize(&(c * int(n) / int(3)));
    let nbhd = neighborhood_system(g);
    let reps = separated_subfamily(&nbhd, s)?;
    let colouring = assign(&nbhd, &reps, s)?;
    for (u, v) in g.edges() {
        if colouring[u] == colouring[v] {
            return Err(Error::ClaimViolation(format!("adjacent {u} and {v} share part {}", colouring[u])));
        }
    }
    let (d, _) = nbhd.vc_dimension(budget)?;
    let e = e_upper();
    let bound = &e * int(d + 1) * pow(&(int(2) * &e / (int(3) * c)), d);
    let m = reps.len();
    let ok = int(m) <= bound;
    let mut report = Report::new();
    report.push(Check::new(
        "parts_independent",
        "vertices of one part have at least cn/3 common neighbours, so no edge inside a part",
        true,
        json!({"parts": m}),
        None,
    ));
    report.push(Check::new(
        "colors_le_bound",
        "chi(G) <= e(d+1)(2e/3c)^d",
        ok,
        json!({"colors": m, "vc": d, "bound": format_rational(&bound)}),
        (!ok).then(|| json!(reps)),
    ));
    Ok((colouring, report))
}

/// Checks that a maximal `K_r`-free graph with `δ >= ((2r-5)/(2r-3) + eps) n` has
/// `ε* >= eps^{r-2}`.
pub fn min_degree_ultra_check(g: &Graph, r: usize, eps: &Rational) -> Result<Report> {
    if r < 3 || *eps <= Rational::zero() {
        return Err(Error::Precondition("needs r >= 3 and eps > 0".into()));
    }
    if !g.is_k_free(r) || !g.is_maximal_k_free(r) {
        return Err(Error::Precondition(format!("graph is not maximal K_{r}-free")));
    }
    let n = g.n();
    let delta = g.min_degree().unwrap_or(0);
    let need = (Rational::new(BigInt::from(2 * r - 5), BigInt::from(2 * r - 3)) + eps) * int(n);
    if int(delta) < need {
        return Err(Error::Precondition(format!(
            "minimum degree {delta} is below {}",
            format_rational(&need)
        )));
    }
    let cert = ultra_parameter(g, r)?;
    let target = pow(eps, r - 2);
    let ok = cert.is_ultra(&target);
    let mut report = Report::new();
    report.push(Check::new(
        "epsilon_star_ge_eps_pow",
        "high minimum degree forces eps^{r-2}-ultra maximal K_r-freeness",
        ok,
        json!({"epsilon_star": cert.to_json()["epsilon_star"], "target": format_rational(&target), "min_degree": delta}),
        (!ok).then(|| json!(cert.worst_pair)),
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{blowup, cycle, petersen};
    use crate::iso::are_isomorphic;
    use crate::rational::ratio;

    #[test]
    fn separated_examples() {
        let c4 = neighborhood_system(&cycle(4));
        assert_eq!(separated_subfamily(&c4, 0).unwrap(), vec![0, 1]);
        assert_eq!(separated_subfamily(&c4, 1).unwrap(), vec![0, 1]);
        assert_eq!(separated_subfamily(&c4, 4).unwrap(), vec![0]);
    }

    #[test]
    fn twin_quotients() {
        assert!(are_isomorphic(&twin_quotient(&cycle(4)).quotient, &Graph::complete(2)));
        assert_eq!(twin_quotient(&cycle(5)).quotient, cycle(5));
        let (g, _) = blowup(&petersen(), &[3; 10]).unwrap();
        assert!(are_isomorphic(&twin_quotient(&g).quotient, &petersen()));
    }

    #[test]
    fn homomorphisms() {
        let g = cycle(5);
        assert!(verify_hom(&g, &g, &[0, 1, 2, 3, 4]));
        assert!(!verify_hom(&g, &g, &[0; 5]));
    }

    #[test]
    fn haussler_on_blown_up_pentagon() {
        let (g, _) = blowup(&cycle(5), &[5; 5]).unwrap();
        let eps = ultra_parameter(&g, 3).unwrap().finite().unwrap().clone();
        let run = haussler_run(&g, 3, &eps, SearchBudget::UNLIMITED).unwrap();
        assert!(run.decomposition.quotient.n() <= 2 * run.representatives.len());
        assert!(run.report.all_pass());
        let k = haussler_partition(&Graph::complete(3), 4, &ratio(1, 2)).unwrap();
        assert_eq!(k.quotient, Graph::complete(3));
    }

    #[test]
    fn obstruction_cores() {
        assert_eq!(p4_obstruction(&cycle(4), SearchBudget::UNLIMITED).unwrap().core.len(), 1);
        let c = p4_obstruction(&cycle(5), SearchBudget::UNLIMITED).unwrap();
        assert!(c.is_valid(&cycle(5)));
    }

    #[test]
    fn chromatic_partition_of_pentagon() {
        let (col, rep) = vc_chromatic_partition(&cycle(5), &ratio(2, 5), SearchBudget::UNLIMITED).unwrap();
        assert!(crate::coloring::is_proper_coloring(&cycle(5), &col));
        assert!(rep.all_pass());
    }

    #[test]
    fn min_degree_examples() {
        assert!(min_degree_ultra_check(&cycle(5), 3, &ratio(1, 15)).unwrap().all_pass());
        assert!(matches!(min_degree_ultra_check(&cycle(5), 3, &ratio(1, 10)), Err(Error::Precondition(_))));
        let t = crate::constructions::turan(12, 3).unwrap();
        assert!(min_degree_ultra_check(&t, 4, &ratio(1, 15)).unwrap().all_pass());
    }
}
