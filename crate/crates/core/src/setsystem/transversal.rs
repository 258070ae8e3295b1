//! Exact minimum hitting set by branch and bound.

use fixedbitset::FixedBitSet;

use super::SetSystem;
use crate::budget::Meter;
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::rational::ceil_int;

struct Search<'a> {
    f: &'a SetSystem,
    // elements in descending coverage order, ties by index
    order: Vec<usize>,
    // containing[e] = indices of sets containing e
    containing: Vec<FixedBitSet>,
    best: Vec<usize>,
    root_bound: usize,
    meter: &'a mut Meter,
}

impl Search<'_> {
    /// Greedy number of pairwise disjoint unhit sets: a lower bound on what remains.
    fn packing_bound(&self, unhit: &FixedBitSet) -> usize {
        let mut used = FixedBitSet::with_capacity(self.f.ground_size());
        let mut count = 0;
        for i in unhit.ones() {
            if self.f.bits(i).is_disjoint(&used) {
                used.union_with(self.f.bits(i));
                count += 1;
            }
        }
        count
    }

    fn run(&mut self, chosen: &mut Vec<usize>, unhit: &FixedBitSet) -> Result<()> {
        self.meter.tick()?;
        if unhit.is_clear() {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return Ok(());
        }
        if chosen.len() + self.packing_bound(unhit) >= self.best.len() {
            return Ok(());
        }
        // Branch on the elements of the smallest unhit set (first one on ties).
        let target = unhit.ones().min_by_key(|&i| (self.f.set(i).len(), i)).unwrap();
        let branch: Vec<usize> = self.order.iter().copied().filter(|&e| self.f.bits(target).contains(e)).collect();
        for e in branch {
            let mut next = unhit.clone();
            next.difference_with(&self.containing[e]);
            chosen.push(e);
            self.run(chosen, &next)?;
            chosen.pop();
            if self.best.len() <= self.root_bound {
                break;
            }
        }
        Ok(())
    }
}

pub(super) fn min_hitting_set(f: &SetSystem, meter: &mut Meter) -> Result<(usize, VertexSet)> {
    if let Some(i) = f.sets().iter().position(|s| s.is_empty()) {
        return Err(Error::Infeasible(format!("set {i} is empty and cannot be hit")));
    }
    if f.is_empty() {
        return Ok((0, VertexSet::empty()));
    }
    let m = f.ground_size();
    let containing: Vec<FixedBitSet> = (0..m)
        .map(|e| {
            let mut b = FixedBitSet::with_capacity(f.len());
            for i in 0..f.len() {
                if f.bits(i).contains(e) {
                    b.insert(i);
                }
            }
            b
        })
        .collect();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&e| (std::cmp::Reverse(containing[e].count_ones(..)), e));

    // Greedy upper bound: repeatedly take the element hitting most unhit sets.
    let mut unhit = FixedBitSet::with_capacity(f.len());
    unhit.insert_range(..);
    let mut greedy = Vec::new();
    while !unhit.is_clear() {
        let e = *order
            .iter()
            .max_by_key(|&&e| (containing[e].intersection(&unhit).count(), std::cmp::Reverse(e)))
            .unwrap();
        greedy.push(e);
        unhit.difference_with(&containing[e]);
    }

    let lp = f.solve_transversal_lp()?;
    let root_bound = usize::try_from(ceil_int(&lp.value)).expect("LP value fits in usize");

    let mut all = FixedBitSet::with_capacity(f.len());
    all.insert_range(..);
    let mut s = Search {
        f,
        order,
        containing,
        best: greedy,
        root_bound,
        meter,
    };
    if s.best.len() > root_bound {
        s.run(&mut Vec::new(), &all)?;
    }
    let best = VertexSet::new(s.best);
    Ok((best.len(), best))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(f: &SetSystem) -> usize {
        let m = f.ground_size();
        (0u32..1 << m)
            .filter(|mask| f.sets().iter().all(|s| s.iter().any(|&e| mask >> e & 1 == 1)))
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn random_systems_match_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..60 {
            let m = rng.gen_range(1..9);
            let k = rng.gen_range(1..10);
            let sets: Vec<VertexSet> = (0..k)
                .map(|_| {
                    let mut s: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.35)).collect();
                    if s.is_empty() {
                        s.push(rng.gen_range(0..m));
                    }
                    VertexSet::new(s)
                })
                .collect();
            let f = SetSystem::new(m, sets, None).unwrap();
            let (t, w) = min_hitting_set(&f, &mut Meter::unlimited()).unwrap();
            assert_eq!(t, brute(&f));
            assert!(f.sets().iter().all(|s| s.iter().any(|e| w.contains(*e))));
        }
    }
}
