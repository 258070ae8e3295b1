//! Maximal independent set enumeration (Bron–Kerbosch on the complement, with pivoting).

use fixedbitset::FixedBitSet;

use crate::budget::{Meter, SearchBudget};
use crate::error::Result;
use crate::graph::{Graph, Vertex, VertexSet};

struct Enumerator<'a> {
    // non_adj[v] = vertices other than v not adjacent to v
    non_adj: &'a [FixedBitSet],
    out: Vec<VertexSet>,
    meter: Meter,
}

impl Enumerator<'_> {
    fn run(&mut self, r: &mut Vec<Vertex>, mut p: FixedBitSet, mut x: FixedBitSet) -> Result<()> {
        self.meter.tick()?;
        if p.is_clear() {
            if x.is_clear() {
                self.out.push(VertexSet::new(r.clone()));
            }
            return Ok(());
        }
        // Pivot: the vertex of P ∪ X with most non-neighbours in P, lowest index on ties.
        let mut pivot = usize::MAX;
        let mut pivot_score = 0;
        for u in p.ones().chain(x.ones()) {
            let score = p.intersection(&self.non_adj[u]).count();
            if pivot == usize::MAX || score > pivot_score || (score == pivot_score && u < pivot) {
                pivot = u;
                pivot_score = score;
            }
        }
        let mut branch = p.clone();
        branch.difference_with(&self.non_adj[pivot]);
        for v in branch.ones() {
            let mut np = p.clone();
            np.intersect_with(&self.non_adj[v]);
            let mut nx = x.clone();
            nx.intersect_with(&self.non_adj[v]);
            r.push(v);
            self.run(r, np, nx)?;
            r.pop();
            p.set(v, false);
            x.insert(v);
        }
        Ok(())
    }
}

/// All maximal independent sets of `G`, each sorted, in lexicographic order.
pub fn enumerate_mis(g: &Graph, budget: SearchBudget) -> Result<Vec<VertexSet>> {
    budget.validate()?;
    let n = g.n();
    let non_adj: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut b = g.neighbors(v).clone();
            b.toggle_range(..);
            b.set(v, false);
            b
        })
        .collect();
    let mut e = Enumerator {
        non_adj: &non_adj,
        out: Vec::new(),
        meter: budget.meter(),
    };
    e.run(&mut Vec::new(), g.all_vertices(), FixedBitSet::with_capacity(n))?;
    let mut out = e.out;
    out.sort();
    Ok(out)
}

pub fn is_maximal_independent(g: &Graph, set: &[Vertex]) -> bool {
    if !g.is_independent(set) {
        return false;
    }
    let mut dominated = FixedBitSet::with_capacity(g.n());
    for &v in set {
        dominated.insert(v);
        dominated.union_with(g.neighbors(v));
    }
    dominated.count_ones(..) == g.n()
}
