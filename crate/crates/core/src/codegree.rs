//! Co-degree and clique co-density statistics over independent sets, and induced `P_4` probes.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;

use crate::cliques::count_cliques_in;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rational::{int, Rational};

/// Calls `f(I, N(I))` for every independent `a`-set `I` in lexicographic order.
fn for_each_independent<F: FnMut(&[Vertex], &FixedBitSet)>(g: &Graph, a: usize, mut f: F) {
    fn rec<F: FnMut(&[Vertex], &FixedBitSet)>(
        g: &Graph,
        a: usize,
        start: Vertex,
        cur: &mut Vec<Vertex>,
        common: &FixedBitSet,
        f: &mut F,
    ) {
        if cur.len() == a {
            f(cur, common);
            return;
        }
        for v in start..g.n() {
            if cur.iter().any(|&u| g.has_edge(u, v)) {
                continue;
            }
            let mut next = common.clone();
            next.intersect_with(g.neighbors(v));
            cur.push(v);
            rec(g, a, v + 1, cur, &next, f);
            cur.pop();
        }
    }
    rec(g, a, 0, &mut Vec::new(), &g.all_vertices(), &mut f);
}

/// `δ^(a)(G)`: the minimum common-neighbourhood size over independent `a`-sets.
/// `None` when `G` has no independent `a`-set.
pub fn codegree_min(g: &Graph, a: usize) -> Result<Option<usize>> {
    if a == 0 {
        return Err(Error::Precondition("codegree_min needs a >= 1".into()));
    }
    let mut best: Option<usize> = None;
    for_each_independent(g, a, |_, common| {
        let d = common.count_ones(..);
        best = Some(best.map_or(d, |b| b.min(d)));
    });
    Ok(best)
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `δ̂^(a,b)(G) = min_I k_b(G[N(I)]) / C(|N(I)|, b)` over independent `a`-sets `I`.
/// Terms with `|N(I)| < b` count as density 0.
pub fn clique_codensity(g: &Graph, a: usize, b: usize) -> Result<Option<Rational>> {
    if a == 0 || b < 2 {
        return Err(Error::Precondition("clique_codensity needs a >= 1 and b >= 2".into()));
    }
    let mut best: Option<Rational> = None;
    for_each_independent(g, a, |_, common| {
        let size = common.count_ones(..);
        let d = if size < b {
            int(0)
        } else {
            Rational::new(BigInt::from(count_cliques_in(g, b, common)), binomial(size, b))
        };
        if best.as_ref().is_none_or(|cur| d < *cur) {
            best = Some(d);
        }
    });
    Ok(best)
}

/// `π_s(K_t) = Π_{i=1}^{s-1} (t-1-i)/(t-1)`.
pub fn pi_density(s: usize, t: usize) -> Result<Rational> {
    if s < 2 || s > t {
        return Err(Error::Precondition(format!("pi_density needs 2 <= s <= t, got s={s}, t={t}")));
    }
    let mut acc = int(1);
    for i in 1..s {
        acc *= Rational::new(BigInt::from(t - 1 - i), BigInt::from(t - 1));
    }
    Ok(acc)
}

/// True iff `u-y-z-v` is an induced path: among the six pairs exactly `uy`, `yz`, `zv` are edges.
pub fn is_induced_p4(g: &Graph, u: Vertex, y: Vertex, z: Vertex, v: Vertex) -> bool {
    let vs = [u, y, z, v];
    for i in 0..4 {
        for j in i + 1..4 {
            if vs[i] == vs[j] {
                return false;
            }
            if g.has_edge(vs[i], vs[j]) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

/// First `(y, z)` with `u-y-z-v` an induced `P_4`, scanning `y` descending and then `z`
/// ascending. In `Γ[a,b]` this returns the path `x_i z_i y_i x_j`.
pub fn has_induced_p4(g: &Graph, u: Vertex, v: Vertex) -> Option<(Vertex, Vertex)> {
    if u == v || g.has_edge(u, v) {
        return None;
    }
    let mut ys = g.neighbors(u).clone();
    ys.difference_with(g.neighbors(v));
    let mut zs_base = g.neighbors(v).clone();
    zs_base.difference_with(g.neighbors(u));
    for y in ys.ones().collect::<Vec<_>>().into_iter().rev() {
        if let Some(z) = zs_base.intersection(g.neighbors(y)).next() {
            return Some((y, z));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn c5_codegrees() {
        assert_eq!(codegree_min(&c5(), 1).unwrap(), Some(2));
        assert_eq!(codegree_min(&c5(), 2).unwrap(), Some(1));
        assert_eq!(codegree_min(&c5(), 3).unwrap(), None);
        assert!(codegree_min(&c5(), 0).is_err());
    }

    #[test]
    fn codensity_examples() {
        assert_eq!(clique_codensity(&c5(), 2, 2).unwrap(), Some(int(0)));
        let mut g = Graph::complete(5);
        g.remove_edge(0, 1);
        assert_eq!(clique_codensity(&g, 2, 2).unwrap(), Some(int(1)));
        assert_eq!(clique_codensity(&Graph::complete(3), 2, 2).unwrap(), None);
    }

    #[test]
    fn pi_values() {
        assert_eq!(pi_density(2, 4).unwrap(), ratio(2, 3));
        assert_eq!(pi_density(2, 3).unwrap(), ratio(1, 2));
        assert_eq!(pi_density(3, 5).unwrap(), ratio(3, 8));
        assert!(pi_density(1, 3).is_err());
        assert!(pi_density(4, 3).is_err());
    }

    #[test]
    fn p4_probes() {
        let p = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(has_induced_p4(&p, 0, 3), Some((1, 2)));
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert_eq!(has_induced_p4(&c4, u, v), None);
                }
            }
        }
        assert!(is_induced_p4(&p, 0, 1, 2, 3));
        assert!(!is_induced_p4(&c4, 0, 1, 2, 3));
    }
}
