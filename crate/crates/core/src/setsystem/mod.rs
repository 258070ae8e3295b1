//! Finite set systems: duality, disjointness graphs, transversals, matchings, their LP
//! relaxations, VC-dimension, Helly number and the `(p,q)`-property.

mod lp;
mod transversal;
mod vc;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::budget::{Meter, SearchBudget};
use crate::cliques::max_clique;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::mis::enumerate_mis;
use crate::rational::{int, Rational};

pub use lp::{maximize, LpOutcome};

/// An indexed family of subsets of `0..ground_size`. Duplicates are allowed and the
/// order of the sets is part of the system's identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    ground_size: usize,
    sets: Vec<VertexSet>,
    labels: Option<Vec<String>>,
    bits: Vec<FixedBitSet>,
}

/// Exact optimum of a fractional transversal or matching LP.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionalSolution {
    /// Indexed by ground element (transversal) or by set index (matching).
    #[serde(with = "crate::rational::serde_str_vec")]
    pub weights: Vec<Rational>,
    #[serde(with = "crate::rational::serde_str")]
    pub value: Rational,
}

/// Both LP optima; `transversal.value == matching.value` is checked on construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionalDuality {
    pub transversal: FractionalSolution,
    pub matching: FractionalSolution,
}

impl SetSystem {
    pub fn new(ground_size: usize, sets: Vec<VertexSet>, labels: Option<Vec<String>>) -> Result<Self> {
        for (i, s) in sets.iter().enumerate() {
            if let Some(&bad) = s.iter().find(|&&e| e >= ground_size) {
                return Err(Error::Invalid(format!("set {i} contains {bad} outside ground of size {ground_size}")));
            }
        }
        if let Some(l) = &labels {
            if l.len() != sets.len() {
                return Err(Error::Invalid(format!("{} labels for {} sets", l.len(), sets.len())));
            }
        }
        let bits = sets.iter().map(|s| s.to_bits(ground_size)).collect();
        Ok(SetSystem {
            ground_size,
            sets,
            labels,
            bits,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &VertexSet {
        &self.sets[i]
    }

    pub fn bits(&self, i: usize) -> &FixedBitSet {
        &self.bits[i]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Swaps the roles of elements and sets: one set `{i : e ∈ F_i}` per ground element `e`.
    pub fn dual(&self) -> SetSystem {
        let sets = (0..self.ground_size)
            .map(|e| VertexSet::new((0..self.len()).filter(|&i| self.bits[i].contains(e)).collect()))
            .collect();
        SetSystem::new(self.len(), sets, None).expect("dual indices are in range")
    }

    /// Vertex per set, edge between disjoint sets.
    pub fn disjointness_graph(&self) -> Graph {
        let mut g = Graph::empty(self.len());
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.bits[i].is_disjoint(&self.bits[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// True iff the sets with the given indices share a common element.
    pub fn is_intersecting(&self, indices: &[usize]) -> bool {
        let mut common = FixedBitSet::with_capacity(self.ground_size);
        common.insert_range(..);
        for &i in indices {
            common.intersect_with(&self.bits[i]);
        }
        !common.is_clear()
    }

    /// Exact transversal number with a minimum hitting set as witness.
    pub fn transversal_number(&self, budget: SearchBudget) -> Result<(usize, VertexSet)> {
        budget.validate()?;
        transversal::min_hitting_set(self, &mut budget.meter())
    }

    /// Exact matching number with a maximum pairwise-disjoint subfamily as witness.
    pub fn matching_number(&self, budget: SearchBudget) -> Result<(usize, Vec<usize>)> {
        budget.validate()?;
        let m = max_clique(&self.disjointness_graph(), &mut budget.meter())?;
        Ok((m.len(), m))
    }

    /// `τ*` and `ν*` from two separate exact LP solves; their equality is certified.
    pub fn fractional_transversal(&self) -> Result<FractionalDuality> {
        if let Some(i) = self.sets.iter().position(|s| s.is_empty()) {
            return Err(Error::Infeasible(format!("set {i} is empty")));
        }
        let transversal = self.solve_transversal_lp()?;
        let matching = self.solve_matching_lp()?;
        if transversal.value != matching.value {
            return Err(Error::ClaimViolation(format!(
                "LP duality failed: tau* = {}, nu* = {}",
                transversal.value, matching.value
            )));
        }
        Ok(FractionalDuality { transversal, matching })
    }

    /// `min Σ x_e` subject to `Σ_{e∈F_i} x_e ≥ 1`, solved as `max -Σ x_e` with `-Ax ≤ -1`.
    fn solve_transversal_lp(&self) -> Result<FractionalSolution> {
        let m = self.ground_size;
        let a: Vec<Vec<Rational>> = self
            .bits
            .iter()
            .map(|b| (0..m).map(|e| if b.contains(e) { int(-1) } else { int(0) }).collect())
            .collect();
        let b = vec![int(-1); self.len()];
        let c = vec![int(-1); m];
        match maximize(&a, &b, &c) {
            LpOutcome::Optimal { x, value } => {
                let sol = FractionalSolution { weights: x, value: -value };
                self.check_transversal(&sol)?;
                Ok(sol)
            }
            LpOutcome::Infeasible => Err(Error::Infeasible("fractional transversal LP".into())),
            LpOutcome::Unbounded => Err(Error::ClaimViolation("transversal LP reported unbounded".into())),
        }
    }

    /// `max Σ y_i` subject to `Σ_{i: e∈F_i} y_i ≤ 1` for every element `e`.
    fn solve_matching_lp(&self) -> Result<FractionalSolution> {
        let a: Vec<Vec<Rational>> = (0..self.ground_size)
            .map(|e| self.bits.iter().map(|b| if b.contains(e) { int(1) } else { int(0) }).collect())
            .collect();
        let b = vec![int(1); self.ground_size];
        let c = vec![int(1); self.len()];
        match maximize(&a, &b, &c) {
            LpOutcome::Optimal { x, value } => {
                let sol = FractionalSolution { weights: x, value };
                self.check_matching(&sol)?;
                Ok(sol)
            }
            LpOutcome::Infeasible => Err(Error::ClaimViolation("matching LP reported infeasible".into())),
            LpOutcome::Unbounded => Err(Error::Infeasible("fractional matching LP is unbounded".into())),
        }
    }

    fn check_transversal(&self, sol: &FractionalSolution) -> Result<()> {
        let zero = int(0);
        let one = int(1);
        let ok = sol.weights.len() == self.ground_size
            && sol.weights.iter().all(|w| *w >= zero && *w <= one)
            && self.bits.iter().all(|b| b.ones().map(|e| &sol.weights[e]).sum::<Rational>() >= one)
            && sol.weights.iter().sum::<Rational>() == sol.value;
        if ok {
            Ok(())
        } else {
            Err(Error::ClaimViolation("fractional transversal is not feasible".into()))
        }
    }

    fn check_matching(&self, sol: &FractionalSolution) -> Result<()> {
        let zero = int(0);
        let one = int(1);
        let ok = sol.weights.len() == self.len()
            && sol.weights.iter().all(|w| *w >= zero && *w <= one)
            && (0..self.ground_size).all(|e| {
                (0..self.len()).filter(|&i| self.bits[i].contains(e)).map(|i| &sol.weights[i]).sum::<Rational>() <= one
            })
            && sol.weights.iter().sum::<Rational>() == sol.value;
        if ok {
            Ok(())
        } else {
            Err(Error::ClaimViolation("fractional matching is not feasible".into()))
        }
    }

    /// Exact VC-dimension with a maximum shattered set as witness.
    pub fn vc_dimension(&self, budget: SearchBudget) -> Result<(usize, VertexSet)> {
        budget.validate()?;
        vc::vc_dimension(self, &mut budget.meter())
    }

    /// Largest inclusion-minimal non-intersecting subfamily. An intersecting nonempty
    /// family has Helly number 1 and the empty family 0.
    pub fn helly_number(&self, budget: SearchBudget) -> Result<usize> {
        budget.validate()?;
        helly_of_bits(&self.bits, self.ground_size, &mut budget.meter())
    }

    /// Every `p` sets (by index) contain `q` with a common element.
    pub fn has_pq_property(&self, p: usize, q: usize) -> Result<bool> {
        if q < 2 || p < q {
            return Err(Error::Precondition(format!("(p,q)-property needs p >= q >= 2, got p={p}, q={q}")));
        }
        // Look for p sets in which every element is covered at most q-1 times.
        fn rec(f: &SetSystem, p: usize, q: usize, start: usize, chosen: usize, load: &mut [usize]) -> bool {
            if chosen == p {
                return true;
            }
            if f.len() - start < p - chosen {
                return false;
            }
            for i in start..f.len() {
                if f.sets[i].iter().all(|&e| load[e] + 1 < q) {
                    for &e in f.sets[i].iter() {
                        load[e] += 1;
                    }
                    let found = rec(f, p, q, i + 1, chosen + 1, load);
                    for &e in f.sets[i].iter() {
                        load[e] -= 1;
                    }
                    if found {
                        return true;
                    }
                }
            }
            false
        }
        let mut load = vec![0; self.ground_size];
        Ok(!rec(self, p, q, 0, 0, &mut load))
    }

    /// Finite fractional-Helly witness: `alpha` is the fraction of `k`-subsets of indices
    /// that intersect, `beta` the largest intersecting subfamily over `|F|`.
    pub fn frac_helly_witness(&self, k: usize) -> Result<(Rational, Rational)> {
        if k < 2 || self.len() < k {
            return Err(Error::Precondition(format!("frac_helly_witness needs 2 <= k <= |F|, got k={k}, |F|={}", self.len())));
        }
        fn rec(f: &SetSystem, k: usize, start: usize, depth: usize, common: &FixedBitSet, hits: &mut u64) {
            if depth == k {
                *hits += 1;
                return;
            }
            for i in start..f.len() {
                let mut next = common.clone();
                next.intersect_with(&f.bits[i]);
                if !next.is_clear() {
                    rec(f, k, i + 1, depth + 1, &next, hits);
                }
            }
        }
        let mut all = FixedBitSet::with_capacity(self.ground_size);
        all.insert_range(..);
        let mut hits = 0u64;
        rec(self, k, 0, 0, &all, &mut hits);
        let total = binomial(self.len(), k);
        let alpha = Rational::new(BigInt::from(hits), total);
        let best = (0..self.ground_size)
            .map(|e| self.bits.iter().filter(|b| b.contains(e)).count())
            .max()
            .unwrap_or(0);
        let beta = Rational::new(BigInt::from(best), BigInt::from(self.len()));
        Ok((alpha, beta))
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Helly number of a family given as bitsets over a ground of size `ground`.
pub(crate) fn helly_of_bits(family: &[FixedBitSet], ground: usize, meter: &mut Meter) -> Result<usize> {
    if family.is_empty() {
        return Ok(0);
    }
    // A repeated set never belongs to a minimal non-intersecting subfamily.
    let mut sets: Vec<FixedBitSet> = Vec::new();
    for s in family {
        if !sets.contains(s) {
            sets.push(s.clone());
        }
    }
    let mut all = FixedBitSet::with_capacity(ground);
    all.insert_range(..);
    let mut best = 1;

    // `chosen` is intersecting; try closing it with a later set j.
    fn rec(
        sets: &[FixedBitSet],
        all: &FixedBitSet,
        chosen: &mut Vec<usize>,
        common: &FixedBitSet,
        best: &mut usize,
        meter: &mut Meter,
    ) -> Result<()> {
        meter.tick()?;
        let start = chosen.last().map_or(0, |&l| l + 1);
        for j in start..sets.len() {
            let mut next = common.clone();
            next.intersect_with(&sets[j]);
            if next.is_clear() {
                let size = chosen.len() + 1;
                if size > *best && closes_minimally(sets, all, chosen, j) {
                    *best = size;
                }
            } else {
                chosen.push(j);
                rec(sets, all, chosen, &next, best, meter)?;
                chosen.pop();
            }
        }
        Ok(())
    }

    fn closes_minimally(sets: &[FixedBitSet], all: &FixedBitSet, chosen: &[usize], j: usize) -> bool {
        (0..chosen.len()).all(|skip| {
            let mut c = sets[j].clone();
            for (k, &i) in chosen.iter().enumerate() {
                if k != skip {
                    c.intersect_with(&sets[i]);
                }
            }
            c.intersect_with(all);
            !c.is_clear()
        })
    }

    rec(&sets, &all, &mut Vec::new(), &all, &mut best, meter)?;
    Ok(best)
}

/// All inclusion-maximal subfamilies (as sorted index sets) whose members share an element.
pub fn maximal_intersecting_subfamilies(f: &SetSystem, budget: SearchBudget) -> Result<Vec<VertexSet>> {
    budget.validate()?;
    fn rec(
        f: &SetSystem,
        start: usize,
        chosen: &mut Vec<usize>,
        common: &FixedBitSet,
        out: &mut Vec<VertexSet>,
        meter: &mut Meter,
    ) -> Result<()> {
        meter.tick()?;
        let extendable = (0..f.len()).any(|j| !chosen.contains(&j) && !common.is_disjoint(f.bits(j)));
        if !extendable {
            out.push(VertexSet::new(chosen.clone()));
        }
        for j in start..f.len() {
            let mut next = common.clone();
            next.intersect_with(f.bits(j));
            if next.is_clear() {
                continue;
            }
            chosen.push(j);
            rec(f, j + 1, chosen, &next, out, meter)?;
            chosen.pop();
        }
        Ok(())
    }
    let mut all = FixedBitSet::with_capacity(f.ground_size());
    all.insert_range(..);
    let mut out = Vec::new();
    if f.ground_size() > 0 {
        rec(f, 0, &mut Vec::new(), &all, &mut out, &mut budget.meter())?;
    }
    out.sort();
    Ok(out)
}

/// Neighbourhood system of `G`: ground `V(G)`, one set `N(v)` per vertex.
pub fn neighborhood_system(g: &Graph) -> SetSystem {
    let sets = (0..g.n()).map(|v| VertexSet::from_bits(g.neighbors(v))).collect();
    SetSystem::new(g.n(), sets, None).expect("neighbourhoods are in range")
}

/// `B(G)`: ground = the maximal independent sets of `G` (lexicographic order), one set
/// `K_v = {I : v ∈ I}` per vertex. Also returns the MIS list.
pub fn bg(g: &Graph, budget: SearchBudget) -> Result<(SetSystem, Vec<VertexSet>)> {
    let mis = enumerate_mis(g, budget)?;
    let sets = (0..g.n())
        .map(|v| VertexSet::new((0..mis.len()).filter(|&i| mis[i].contains(v)).collect()))
        .collect();
    let labels = Some((0..g.n()).map(|v| format!("K_{v}")).collect());
    Ok((SetSystem::new(mis.len(), sets, labels)?, mis))
}

/// `M(G)`: the maximal independent sets as a set system over `V(G)` (the dual of `B(G)`).
pub fn mis_hypergraph(g: &Graph, budget: SearchBudget) -> Result<SetSystem> {
    let mis = enumerate_mis(g, budget)?;
    SetSystem::new(g.n(), mis, None)
}
