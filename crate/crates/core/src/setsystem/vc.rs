//! VC-dimension by depth-first search over shattered sets.
//!
//! Shattering is closed under taking subsets, so extending only shattered sets in
//! increasing element order visits every shattered set exactly once.

use fixedbitset::FixedBitSet;

use super::SetSystem;
use crate::budget::Meter;
use crate::error::Result;
use crate::graph::VertexSet;

struct Search<'a> {
    sets: Vec<FixedBitSet>,
    candidates: Vec<usize>,
    best: Vec<usize>,
    meter: &'a mut Meter,
}

impl Search<'_> {
    fn shatters(&self, s: &[usize]) -> bool {
        let k = s.len();
        let mut seen = FixedBitSet::with_capacity(1 << k);
        for set in &self.sets {
            let trace = s
                .iter()
                .enumerate()
                .fold(0usize, |acc, (i, &e)| acc | (usize::from(set.contains(e)) << i));
            seen.insert(trace);
        }
        seen.count_ones(..) == 1 << k
    }

    fn run(&mut self, cur: &mut Vec<usize>, from: usize) -> Result<()> {
        self.meter.tick()?;
        if cur.len() > self.best.len() {
            self.best = cur.clone();
        }
        if (1usize << (cur.len() + 1)) > self.sets.len() {
            return Ok(());
        }
        for ci in from..self.candidates.len() {
            if cur.len() + (self.candidates.len() - ci) <= self.best.len() {
                break;
            }
            cur.push(self.candidates[ci]);
            if self.shatters(cur) {
                self.run(cur, ci + 1)?;
            }
            cur.pop();
        }
        Ok(())
    }
}

pub(super) fn vc_dimension(f: &SetSystem, meter: &mut Meter) -> Result<(usize, VertexSet)> {
    let mut sets: Vec<FixedBitSet> = Vec::new();
    for i in 0..f.len() {
        if !sets.contains(f.bits(i)) {
            sets.push(f.bits(i).clone());
        }
    }
    if sets.is_empty() {
        return Ok((0, VertexSet::empty()));
    }
    // Only elements that some set contains and some set misses can be shattered.
    let candidates: Vec<usize> = (0..f.ground_size())
        .filter(|&e| sets.iter().any(|s| s.contains(e)) && sets.iter().any(|s| !s.contains(e)))
        .collect();
    let mut s = Search {
        sets,
        candidates,
        best: Vec::new(),
        meter,
    };
    s.run(&mut Vec::new(), 0)?;
    let best = VertexSet::new(s.best);
    Ok((best.len(), best))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(f: &SetSystem) -> usize {
        let m = f.ground_size();
        (0u32..1 << m)
            .filter(|&mask| {
                let s: Vec<usize> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
                (0u32..1 << s.len()).all(|sub| {
                    f.sets().iter().any(|set| {
                        s.iter().enumerate().all(|(i, &e)| set.contains(e) == (sub >> i & 1 == 1))
                    })
                })
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn random_systems_match_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let m = rng.gen_range(1..8);
            let k = rng.gen_range(1..20);
            let sets: Vec<VertexSet> = (0..k)
                .map(|_| VertexSet::new((0..m).filter(|_| rng.gen_bool(0.5)).collect()))
                .collect();
            let f = SetSystem::new(m, sets, None).unwrap();
            let (d, w) = vc_dimension(&f, &mut Meter::unlimited()).unwrap();
            assert_eq!(d, brute(&f));
            assert_eq!(w.len(), d);
        }
    }
}
