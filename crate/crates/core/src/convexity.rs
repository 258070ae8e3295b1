//! Finite convexity spaces: the MIS space of a graph, the subcube space, and explicit spaces.
//!
//! Convex sets are the intersections of generators, together with `∅` and the whole
//! ground. For the MIS space the convex sets are `K_S = {I ∈ MIS(G) : S ⊆ I}` for
//! independent `S`, and `K_S ∩ K_T = K_{S ∪ T}`, so hulls are computed from the
//! intersection of the chosen independent sets rather than from the closure.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use num_traits::{One, Zero};
use serde_json::json;

use crate::budget::{Meter, SearchBudget};
use crate::coloring::optimal_coloring;
use crate::cliques::max_clique;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::rational::{format_rational, Rational};
use crate::report::{Check, Report};
use crate::setsystem::{bg, maximal_intersecting_subfamilies, SetSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceKind {
    FromGraph,
    Subcubes,
    Explicit,
}

#[derive(Clone, Debug)]
pub struct ConvexitySpace {
    kind: SpaceKind,
    generators: SetSystem,
    labels: Vec<String>,
    graph: Option<Graph>,
    mis: Vec<VertexSet>,
    dim: usize,
}

/// Probability measure on the ground points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Measure {
    weights: Vec<Rational>,
}

impl Measure {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.iter().any(|w| *w < Rational::zero()) {
            return Err(Error::Invalid("measure has a negative weight".into()));
        }
        let total: Rational = weights.iter().sum();
        if !total.is_one() {
            return Err(Error::Invalid(format!("measure sums to {}, not 1", format_rational(&total))));
        }
        Ok(Measure { weights })
    }

    pub fn uniform(len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::Invalid("uniform measure on an empty ground".into()));
        }
        Measure::new(vec![Rational::new(1.into(), len.into()); len])
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn of(&self, points: &FixedBitSet) -> Rational {
        points.ones().map(|p| &self.weights[p]).sum()
    }
}

/// Result of a capped Radon search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadonNumber {
    Value(usize),
    ExceedsCap,
}

/// `MIS(G)` with generators `K_v`.
pub fn mis_space(g: &Graph, budget: SearchBudget) -> Result<ConvexitySpace> {
    let (generators, mis) = bg(g, budget)?;
    let labels = mis
        .iter()
        .map(|i| format!("{{{}}}", i.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    Ok(ConvexitySpace {
        kind: SpaceKind::FromGraph,
        generators,
        labels,
        graph: Some(g.clone()),
        mis,
        dim: 0,
    })
}

/// Binary label `x_1 x_2 … x_n` of cube point `u` (bit `i-1` of `u` is `x_i`).
pub fn cube_label(u: usize, n: usize) -> String {
    (0..n).map(|i| if u >> i & 1 == 1 { '1' } else { '0' }).collect()
}

/// The subcube space over `{0,1}^n`: points are the `2^n` vertices (point `u` has
/// coordinates given by its bits), generators are the `3^n` nonempty subcubes.
pub fn subcube_space(n: usize) -> Result<ConvexitySpace> {
    if !(1..=10).contains(&n) {
        return Err(Error::Precondition(format!("subcube space needs 1 <= n <= 10, got {n}")));
    }
    let size = 1usize << n;
    let mut sets = Vec::new();
    let mut labels = Vec::new();
    // pattern digit per coordinate: 0, 1, or 2 = free
    for code in 0..3usize.pow(n as u32) {
        let pattern: Vec<usize> = (0..n).map(|i| code / 3usize.pow(i as u32) % 3).collect();
        let members = (0..size).filter(|&u| (0..n).all(|i| pattern[i] == 2 || (u >> i & 1) == pattern[i]));
        sets.push(VertexSet::new(members.collect()));
        labels.push(pattern.iter().map(|&d| ['0', '1', '*'][d]).collect());
    }
    Ok(ConvexitySpace {
        kind: SpaceKind::Subcubes,
        generators: SetSystem::new(size, sets, Some(labels))?,
        labels: (0..size).map(|u| cube_label(u, n)).collect(),
        graph: None,
        mis: Vec::new(),
        dim: n,
    })
}

/// A space given directly by its generators.
pub fn explicit_space(generators: SetSystem) -> ConvexitySpace {
    let labels = (0..generators.ground_size()).map(|p| p.to_string()).collect();
    ConvexitySpace {
        kind: SpaceKind::Explicit,
        generators,
        labels,
        graph: None,
        mis: Vec::new(),
        dim: 0,
    }
}

impl ConvexitySpace {
    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn ground_len(&self) -> usize {
        self.generators.ground_size()
    }

    pub fn generators(&self) -> &SetSystem {
        &self.generators
    }

    pub fn point_labels(&self) -> &[String] {
        &self.labels
    }

    pub fn graph(&self) -> Option<&Graph> {
        self.graph.as_ref()
    }

    /// The maximal independent sets indexing the points of a graph space.
    pub fn mis(&self) -> &[VertexSet] {
        &self.mis
    }

    /// Cube dimension of a subcube space (0 otherwise).
    pub fn dimension(&self) -> usize {
        self.dim
    }

    fn full(&self) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(self.ground_len());
        b.insert_range(..);
        b
    }

    fn check_points(&self, y: &[usize]) -> Result<()> {
        match y.iter().find(|&&p| p >= self.ground_len()) {
            Some(p) => Err(Error::Invalid(format!("point {p} outside ground of size {}", self.ground_len()))),
            None => Ok(()),
        }
    }

    /// Intersection of all generators containing `y` (the ground if none does); `conv ∅ = ∅`.
    pub fn hull_by_generators(&self, y: &FixedBitSet) -> FixedBitSet {
        if y.is_clear() {
            return FixedBitSet::with_capacity(self.ground_len());
        }
        let mut hull = self.full();
        for i in 0..self.generators.len() {
            if y.is_subset(self.generators.bits(i)) {
                hull.intersect_with(self.generators.bits(i));
            }
        }
        hull
    }

    /// `K_{∩Y}` for a graph space.
    fn hull_by_mis(&self, y: &FixedBitSet) -> FixedBitSet {
        let n = self.graph.as_ref().map_or(0, Graph::n);
        let mut core = FixedBitSet::with_capacity(n);
        core.insert_range(..);
        for p in y.ones() {
            core.intersect_with(&self.mis[p].to_bits(n));
        }
        self.k_of(&core)
    }

    /// `K_S`: the points (MIS) containing every vertex of `s`.
    fn k_of(&self, s: &FixedBitSet) -> FixedBitSet {
        let n = self.graph.as_ref().map_or(0, Graph::n);
        let mut out = FixedBitSet::with_capacity(self.ground_len());
        for (i, m) in self.mis.iter().enumerate() {
            if s.is_subset(&m.to_bits(n)) {
                out.insert(i);
            }
        }
        out
    }

    fn hull_bits(&self, y: &FixedBitSet) -> FixedBitSet {
        if y.is_clear() {
            return FixedBitSet::with_capacity(self.ground_len());
        }
        match self.kind {
            SpaceKind::FromGraph => self.hull_by_mis(y),
            _ => self.hull_by_generators(y),
        }
    }

    /// Convex hull of a point set.
    pub fn convex_hull(&self, y: &[usize]) -> Result<VertexSet> {
        self.check_points(y)?;
        Ok(VertexSet::from_bits(&self.hull_bits(&VertexSet::new(y.to_vec()).to_bits(self.ground_len()))))
    }

    /// First partition `y = y1 ∪ y2` (binary counter over `y` in increasing order, bit `i`
    /// placing `y_i` in `y1`) with intersecting hulls. Graph spaces also confirm each verdict
    /// through "no edge between `∩y1` and `∩y2`".
    pub fn radon_partition(&self, y: &[usize]) -> Result<Option<(VertexSet, VertexSet)>> {
        self.check_points(y)?;
        let y = VertexSet::new(y.to_vec());
        if y.len() < 2 {
            return Err(Error::Precondition("radon_partition needs at least two points".into()));
        }
        self.partition_of(&y)
    }

    fn partition_of(&self, y: &[usize]) -> Result<Option<(VertexSet, VertexSet)>> {
        let k = y.len();
        if k >= usize::BITS as usize {
            return Err(Error::Invalid("too many points for a Radon search".into()));
        }
        for mask in 1..(1usize << k) - 1 {
            let mut a = FixedBitSet::with_capacity(self.ground_len());
            let mut b = FixedBitSet::with_capacity(self.ground_len());
            for (i, &p) in y.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    a.insert(p);
                } else {
                    b.insert(p);
                }
            }
            let mut meet = self.hull_bits(&a);
            meet.intersect_with(&self.hull_bits(&b));
            let hit = !meet.is_clear();
            if self.kind == SpaceKind::FromGraph && hit != self.no_edges_between_cores(&a, &b) {
                return Err(Error::ClaimViolation(format!(
                    "hull test and edge test disagree on partition {:?} | {:?}",
                    a.ones().collect::<Vec<_>>(),
                    b.ones().collect::<Vec<_>>()
                )));
            }
            if hit {
                return Ok(Some((VertexSet::from_bits(&a), VertexSet::from_bits(&b))));
            }
        }
        Ok(None)
    }

    /// `e(∩_{a∈A} I_a, ∩_{b∈B} I_b) = 0`.
    fn no_edges_between_cores(&self, a: &FixedBitSet, b: &FixedBitSet) -> bool {
        let g = self.graph.as_ref().expect("graph space");
        let core = |s: &FixedBitSet| {
            let mut c = g.all_vertices();
            for p in s.ones() {
                c.intersect_with(&self.mis[p].to_bits(g.n()));
            }
            c
        };
        let (ca, cb) = (core(a), core(b));
        ca.ones().all(|u| g.neighbors(u).is_disjoint(&cb))
    }

    /// Largest Radon-independent point set (one admitting no Radon partition), searched up
    /// to size `cap`: every set of one more point than the returned value has a Radon
    /// partition. `ExceedsCap` when an independent set of `cap + 1` points exists.
    ///
    /// Radon-independence is inherited by subsets, so the search only extends independent
    /// sets, in lexicographic order.
    pub fn radon_number(&self, cap: usize) -> Result<RadonNumber> {
        if cap > self.ground_len() {
            return Err(Error::Precondition(format!("cap {cap} exceeds ground size {}", self.ground_len())));
        }
        let (best, _) = self.radon_search(cap + 1)?;
        Ok(if best > cap { RadonNumber::ExceedsCap } else { RadonNumber::Value(best) })
    }

    /// Maximum Radon-independent set, searching sizes up to `limit`.
    pub fn radon_search(&self, limit: usize) -> Result<(usize, Vec<usize>)> {
        fn rec(s: &ConvexitySpace, limit: usize, cur: &mut Vec<usize>, best: &mut Vec<usize>) -> Result<()> {
            if cur.len() > best.len() {
                *best = cur.clone();
            }
            if cur.len() == limit {
                return Ok(());
            }
            let start = cur.last().map_or(0, |&l| l + 1);
            for p in start..s.ground_len() {
                if cur.len() + (s.ground_len() - p) <= best.len() {
                    break;
                }
                cur.push(p);
                if cur.len() < 2 || s.partition_of(cur)?.is_none() {
                    rec(s, limit, cur, best)?;
                }
                cur.pop();
                if best.len() == limit {
                    break;
                }
            }
            Ok(())
        }
        let mut best = Vec::new();
        rec(self, limit, &mut Vec::new(), &mut best)?;
        Ok((best.len(), best))
    }

    /// Helly number via Helly-independent point sets: `Y` is independent when
    /// `∩_{y∈Y} conv(Y \ {y}) = ∅`. Independence is inherited by nonempty subsets.
    pub fn space_helly_number(&self, budget: SearchBudget) -> Result<usize> {
        budget.validate()?;
        fn independent(s: &ConvexitySpace, y: &[usize]) -> bool {
            let mut meet = s.full();
            for skip in 0..y.len() {
                let mut rest = FixedBitSet::with_capacity(s.ground_len());
                for (i, &p) in y.iter().enumerate() {
                    if i != skip {
                        rest.insert(p);
                    }
                }
                meet.intersect_with(&s.hull_bits(&rest));
                if meet.is_clear() {
                    return true;
                }
            }
            false
        }
        fn rec(s: &ConvexitySpace, cur: &mut Vec<usize>, best: &mut usize, meter: &mut Meter) -> Result<()> {
            meter.tick()?;
            *best = (*best).max(cur.len());
            let start = cur.last().map_or(0, |&l| l + 1);
            for p in start..s.ground_len() {
                if cur.len() + (s.ground_len() - p) <= *best {
                    break;
                }
                cur.push(p);
                if independent(s, cur) {
                    rec(s, cur, best, meter)?;
                }
                cur.pop();
            }
            Ok(())
        }
        let mut best = 0;
        rec(self, &mut Vec::new(), &mut best, &mut budget.meter())?;
        Ok(best)
    }

    /// Every convex set (including `∅` and the ground), sorted.
    ///
    /// Graph spaces enumerate `K_S` over independent `S`; other spaces close the
    /// generators under pairwise intersection.
    pub fn convex_sets(&self, budget: SearchBudget) -> Result<Vec<VertexSet>> {
        budget.validate()?;
        let mut meter = budget.meter();
        let mut found: BTreeSet<VertexSet> = BTreeSet::new();
        found.insert(VertexSet::empty());
        found.insert(VertexSet::from_bits(&self.full()));
        match self.kind {
            SpaceKind::FromGraph => {
                let g = self.graph.as_ref().expect("graph space");
                fn rec(
                    s: &ConvexitySpace,
                    g: &Graph,
                    start: Vertex,
                    cur: &mut FixedBitSet,
                    found: &mut BTreeSet<VertexSet>,
                    meter: &mut Meter,
                ) -> Result<()> {
                    meter.tick()?;
                    found.insert(VertexSet::from_bits(&s.k_of(cur)));
                    for v in start..g.n() {
                        if cur.contains(v) || !g.neighbors(v).is_disjoint(cur) {
                            continue;
                        }
                        cur.insert(v);
                        rec(s, g, v + 1, cur, found, meter)?;
                        cur.set(v, false);
                    }
                    Ok(())
                }
                rec(self, g, 0, &mut FixedBitSet::with_capacity(g.n()), &mut found, &mut meter)?;
            }
            _ => {
                let gens: Vec<FixedBitSet> = (0..self.generators.len()).map(|i| self.generators.bits(i).clone()).collect();
                let mut frontier: Vec<FixedBitSet> = Vec::new();
                for gset in &gens {
                    if found.insert(VertexSet::from_bits(gset)) {
                        frontier.push(gset.clone());
                    }
                }
                while let Some(s) = frontier.pop() {
                    for gset in &gens {
                        meter.tick()?;
                        let mut m = s.clone();
                        m.intersect_with(gset);
                        if found.insert(VertexSet::from_bits(&m)) {
                            frontier.push(m);
                        }
                    }
                }
            }
        }
        Ok(found.into_iter().collect())
    }

    /// Greedy point set meeting every convex set of measure at least `eps`.
    pub fn weak_eps_net(&self, mu: &Measure, eps: &Rational, budget: SearchBudget) -> Result<VertexSet> {
        if *eps <= Rational::zero() {
            return Err(Error::Precondition("weak_eps_net needs eps > 0".into()));
        }
        if mu.weights().len() != self.ground_len() {
            return Err(Error::Invalid("measure and ground sizes differ".into()));
        }
        let heavy: Vec<FixedBitSet> = self
            .convex_sets(budget)?
            .into_iter()
            .map(|c| c.to_bits(self.ground_len()))
            .filter(|c| mu.of(c) >= *eps)
            .collect();
        let mut unhit: Vec<bool> = vec![true; heavy.len()];
        let mut net = Vec::new();
        while unhit.iter().any(|&u| u) {
            let best = (0..self.ground_len())
                .max_by_key(|&p| {
                    let hits = heavy.iter().zip(&unhit).filter(|(c, &u)| u && c.contains(p)).count();
                    (hits, std::cmp::Reverse(p))
                })
                .expect("heavy sets are nonempty, so the ground is");
            for (c, u) in heavy.iter().zip(unhit.iter_mut()) {
                if c.contains(best) {
                    *u = false;
                }
            }
            net.push(best);
        }
        let net = VertexSet::new(net);
        let ok = heavy.iter().all(|c| net.iter().any(|&p| c.contains(p)));
        if !ok {
            return Err(Error::ClaimViolation("weak net misses a heavy convex set".into()));
        }
        Ok(net)
    }
}

/// Checks the graph/set-system dictionary on `G`: `χ = τ(B)`, `ω = ν(B)`, adjacency as
/// disjointness, `G = D(B)`, `K_r`-freeness as the `(r,2)`-property, maximal independent
/// sets as maximal intersecting subfamilies, and Helly number 2 when `G` has an edge.
pub fn verify_table1(g: &Graph, r: usize, budget: SearchBudget) -> Result<Report> {
    budget.validate()?;
    let mut report = Report::new();
    let (b, mis) = bg(g, budget)?;

    let colouring = optimal_coloring(g, budget)?;
    let chi = colouring.iter().max().map_or(0, |c| c + 1);
    let (tau, hitting) = b.transversal_number(budget)?;
    report.push(Check::new(
        "chi_eq_tau",
        "chromatic number equals the transversal number of B(G)",
        chi == tau,
        json!({"chi": chi, "tau": tau}),
        (chi != tau).then(|| json!({"colouring": colouring, "transversal": hitting})),
    ));

    let omega = max_clique(g, &mut budget.meter())?;
    let (nu, packing) = b.matching_number(budget)?;
    report.push(Check::new(
        "omega_eq_nu",
        "clique number equals the matching number of B(G)",
        omega.len() == nu,
        json!({"omega": omega.len(), "nu": nu}),
        (omega.len() != nu).then(|| json!({"clique": omega, "matching": packing})),
    ));

    let bad_pair = (0..g.n())
        .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
        .find(|&(u, v)| g.has_edge(u, v) != b.bits(u).is_disjoint(b.bits(v)));
    report.push(Check::new(
        "edge_iff_disjoint",
        "uv is an edge iff K_u and K_v are disjoint",
        bad_pair.is_none(),
        json!(bad_pair.is_none()),
        bad_pair.map(|p| json!(p)),
    ));

    let d = b.disjointness_graph();
    let mismatch = (0..g.n())
        .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
        .find(|&(u, v)| g.has_edge(u, v) != d.has_edge(u, v));
    report.push(Check::new(
        "graph_eq_disjointness_graph",
        "G is isomorphic to D(B(G)) via K_v -> v",
        mismatch.is_none(),
        json!(mismatch.is_none()),
        mismatch.map(|p| json!(p)),
    ));

    if r >= 2 {
        let kfree = g.is_k_free(r);
        let pq = b.has_pq_property(r, 2)?;
        report.push(Check::new(
            format!("k{r}_free_iff_{r}_2_property"),
            "G is K_r-free iff B(G) has the (r,2)-property",
            kfree == pq,
            json!({"k_free": kfree, "pq_property": pq}),
            (kfree != pq).then(|| json!(max_clique(g, &mut Meter::unlimited()).unwrap_or_default())),
        ));
    }

    let maximal = maximal_intersecting_subfamilies(&b, budget)?;
    let agree = maximal == mis;
    report.push(Check::new(
        "mis_eq_maximal_intersecting",
        "maximal independent sets are exactly the maximal intersecting subfamilies of B(G)",
        agree,
        json!({"mis": mis.len(), "maximal_intersecting": maximal.len()}),
        (!agree).then(|| json!({"mis": mis, "maximal_intersecting": maximal})),
    ));

    if g.edge_count() >= 1 {
        let h = b.helly_number(budget)?;
        report.push(Check::new(
            "helly_eq_2",
            "B(G) has Helly number 2 when G has an edge",
            h == 2,
            json!(h),
            (h != 2).then(|| json!(h)),
        ));
    } else {
        report.push(Check::skipped("helly_eq_2", "B(G) has Helly number 2 when G has an edge", "G has no edge"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::cycle;
    use crate::rational::ratio;

    #[test]
    fn c5_space_shape() {
        let s = mis_space(&cycle(5), SearchBudget::UNLIMITED).unwrap();
        assert_eq!(s.ground_len(), 5);
        assert!(s.generators().sets().iter().all(|k| k.len() == 2));
        let e = mis_space(&Graph::empty(4), SearchBudget::UNLIMITED).unwrap();
        assert_eq!(e.ground_len(), 1);
    }

    #[test]
    fn hull_routes_agree() {
        let s = mis_space(&cycle(5), SearchBudget::UNLIMITED).unwrap();
        for mask in 0u32..32 {
            let y: FixedBitSet = {
                let mut b = FixedBitSet::with_capacity(5);
                (0..5).filter(|i| mask >> i & 1 == 1).for_each(|i| b.insert(i));
                b
            };
            let mut expect = s.hull_by_generators(&y);
            if y.is_clear() {
                expect.clear();
            }
            assert_eq!(s.hull_bits(&y), expect);
        }
        // MIS of C_5 in order: {0,2},{0,3},{1,3},{1,4},{2,4}; {0,2} and {0,3} share vertex 0.
        assert_eq!(s.convex_hull(&[0, 1]).unwrap().as_slice(), &[0, 1]);
        assert_eq!(s.convex_hull(&[3]).unwrap().as_slice(), &[3]);
        assert_eq!(s.convex_hull(&[]).unwrap().as_slice(), &[] as &[usize]);
        assert_eq!(s.convex_hull(&[0, 1, 2, 3, 4]).unwrap().len(), 5);
    }

    #[test]
    fn subcube_partitions() {
        let s1 = subcube_space(1).unwrap();
        assert_eq!(s1.radon_partition(&[0, 1]).unwrap(), None);
        let s2 = subcube_space(2).unwrap();
        // 00 = 0, 10 = 1, 01 = 2
        let (a, b) = s2.radon_partition(&[0, 1, 2]).unwrap().unwrap();
        assert_eq!((a.as_slice(), b.as_slice()), (&[0][..], &[1, 2][..]));
    }

    #[test]
    fn distinct_mis_never_partition() {
        let s = mis_space(&cycle(5), SearchBudget::UNLIMITED).unwrap();
        assert_eq!(s.radon_partition(&[0, 3]).unwrap(), None);
    }

    #[test]
    fn explicit_triangle_helly() {
        let f = SetSystem::new(
            3,
            vec![VertexSet::new(vec![0, 1]), VertexSet::new(vec![1, 2]), VertexSet::new(vec![0, 2])],
            None,
        )
        .unwrap();
        let s = explicit_space(f);
        assert_eq!(s.space_helly_number(SearchBudget::UNLIMITED).unwrap(), 3);
    }

    #[test]
    fn weak_nets_on_c5() {
        let s = mis_space(&cycle(5), SearchBudget::UNLIMITED).unwrap();
        let mu = Measure::uniform(5).unwrap();
        let t = SearchBudget::UNLIMITED;
        assert!(s.weak_eps_net(&mu, &ratio(3, 2), t).unwrap().is_empty());
        assert_eq!(s.weak_eps_net(&mu, &ratio(1, 1), t).unwrap().len(), 1);
        assert_eq!(s.weak_eps_net(&mu, &ratio(1, 2), t).unwrap().len(), 1);
        assert!(s.weak_eps_net(&mu, &ratio(0, 1), t).is_err());
    }

    #[test]
    fn table1_on_c5_and_k4() {
        let rep = verify_table1(&cycle(5), 3, SearchBudget::UNLIMITED).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
        let rep = verify_table1(&Graph::complete(4), 4, SearchBudget::UNLIMITED).unwrap();
        assert!(rep.all_pass());
        let pq = rep.checks.iter().find(|c| c.name.starts_with("k4_free")).unwrap();
        assert_eq!(pq.value["pq_property"], json!(false));
    }
}
