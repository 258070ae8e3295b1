//! Clique counting and maximum clique search.

use fixedbitset::FixedBitSet;

use crate::budget::Meter;
use crate::error::Result;
use crate::graph::{Graph, Vertex, VertexSet};

/// Number of unlabeled `b`-cliques of `G[within]` (all of `V` when `within` is `None`).
///
/// `b = 1` counts vertices and `b = 2` counts edges.
pub fn count_cliques(g: &Graph, b: usize, within: Option<&VertexSet>) -> u64 {
    let cand = match within {
        Some(w) => w.to_bits(g.n()),
        None => g.all_vertices(),
    };
    count_cliques_in(g, b, &cand)
}

/// Same as [`count_cliques`] with the vertex subset given as a bitset. `b = 0` counts the empty clique.
pub fn count_cliques_in(g: &Graph, b: usize, cand: &FixedBitSet) -> u64 {
    match b {
        0 => 1,
        1 => cand.count_ones(..) as u64,
        _ => {
            let mut total = 0;
            for v in cand.ones() {
                let mut next = cand.clone();
                next.intersect_with(g.neighbors(v));
                next.set_range(..v + 1, false);
                if b == 2 {
                    total += next.count_ones(..) as u64;
                } else if next.count_ones(..) >= b - 1 {
                    total += count_cliques_in(g, b - 1, &next);
                }
            }
            total
        }
    }
}

/// Lists the `b`-cliques of `G[cand]` as sorted vertex lists, lexicographically.
pub fn list_cliques_in(g: &Graph, b: usize, cand: &FixedBitSet) -> Vec<Vec<Vertex>> {
    fn rec(g: &Graph, b: usize, cand: &FixedBitSet, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if b == 0 {
            out.push(cur.clone());
            return;
        }
        for v in cand.ones() {
            let mut next = cand.clone();
            next.intersect_with(g.neighbors(v));
            next.set_range(..v + 1, false);
            if next.count_ones(..) + 1 < b {
                continue;
            }
            cur.push(v);
            rec(g, b - 1, &next, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(g, b, cand, &mut Vec::new(), &mut out);
    out
}

/// Greedy colour classes of `p`, returned as (vertex order, colour bound) pairs.
fn colour_sort(g: &Graph, p: &FixedBitSet) -> (Vec<Vertex>, Vec<usize>) {
    let mut order = Vec::new();
    let mut bounds = Vec::new();
    let mut uncoloured = p.clone();
    let mut colour = 0;
    while !uncoloured.is_clear() {
        colour += 1;
        let mut q = uncoloured.clone();
        while let Some(v) = q.ones().next() {
            q.set(v, false);
            q.difference_with(g.neighbors(v));
            uncoloured.set(v, false);
            order.push(v);
            bounds.push(colour);
        }
    }
    (order, bounds)
}

fn expand(g: &Graph, mut p: FixedBitSet, cur: &mut Vec<Vertex>, best: &mut Vec<Vertex>, meter: &mut Meter) -> Result<()> {
    meter.tick()?;
    let (order, bounds) = colour_sort(g, &p);
    for i in (0..order.len()).rev() {
        if cur.len() + bounds[i] <= best.len() {
            return Ok(());
        }
        let v = order[i];
        cur.push(v);
        let mut next = p.clone();
        next.intersect_with(g.neighbors(v));
        if next.is_clear() {
            if cur.len() > best.len() {
                *best = cur.clone();
            }
        } else {
            expand(g, next, cur, best, meter)?;
        }
        cur.pop();
        p.set(v, false);
    }
    Ok(())
}

/// A maximum clique of `G[cand]`, sorted. Branch and bound with a greedy colouring bound.
pub fn max_clique_in(g: &Graph, cand: &FixedBitSet, meter: &mut Meter) -> Result<Vec<Vertex>> {
    let mut best = Vec::new();
    if !cand.is_clear() {
        expand(g, cand.clone(), &mut Vec::new(), &mut best, meter)?;
    }
    best.sort_unstable();
    Ok(best)
}

pub fn max_clique(g: &Graph, meter: &mut Meter) -> Result<Vec<Vertex>> {
    max_clique_in(g, &g.all_vertices(), meter)
}

/// Exact clique number `ω(G)`.
pub fn clique_number(g: &Graph) -> usize {
    max_clique(g, &mut Meter::unlimited()).map(|c| c.len()).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_omega(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|m| {
                let s: Vec<_> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                g.is_clique(&s)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn counts_on_small_graphs() {
        let k4 = Graph::complete(4);
        assert_eq!(count_cliques(&k4, 3, None), 4);
        assert_eq!(count_cliques(&k4, 4, None), 1);
        assert_eq!(count_cliques(&k4, 5, None), 0);
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(count_cliques(&c5, 2, None), 5);
        assert_eq!(count_cliques(&c5, 1, Some(&VertexSet::empty())), 0);
        assert_eq!(count_cliques(&c5, 2, Some(&VertexSet::new(vec![0, 1, 3]))), 1);
    }

    #[test]
    fn listing_matches_count() {
        let k5 = Graph::complete(5);
        let all = k5.all_vertices();
        let l = list_cliques_in(&k5, 3, &all);
        assert_eq!(l.len() as u64, count_cliques_in(&k5, 3, &all));
        assert_eq!(l[0], vec![0, 1, 2]);
    }

    #[test]
    fn omega_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(1..11);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            assert_eq!(clique_number(&g), brute_omega(&g));
            let c = max_clique(&g, &mut Meter::unlimited()).unwrap();
            assert!(g.is_clique(&c));
        }
    }
}
