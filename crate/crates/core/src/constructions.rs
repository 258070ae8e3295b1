//! Deterministic generators for the graph families used throughout the crate.
//!
//! Every generator fixes its vertex layout (documented per function) so that
//! outputs and report digests are reproducible.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A named family together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionSpec {
    Turan { n: usize, parts: usize },
    Kneser { m: usize, k: usize },
    Mtt { t: usize },
    HalfMin { k: usize },
    GammaBlowup { gamma: Graph, a: usize, b: usize },
    /// `which_g` selects `G` (the blow-up) rather than `H`.
    HypercubeLb { d: usize, which_g: bool },
    UltraVcExample { n: usize },
    Blowup { f: Graph, sizes: Vec<usize> },
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            ConstructionSpec::Turan { n, parts } => turan(*n, *parts),
            ConstructionSpec::Kneser { m, k } => kneser(*m, *k),
            ConstructionSpec::Mtt { t } => mtt(*t),
            ConstructionSpec::HalfMin { k } => half_min(*k),
            ConstructionSpec::GammaBlowup { gamma, a, b } => gamma_blowup(gamma, *a, *b),
            ConstructionSpec::HypercubeLb { d, which_g } => {
                let (h, g) = hypercube_lb(*d)?;
                Ok(if *which_g { g } else { h })
            }
            ConstructionSpec::UltraVcExample { n } => ultra_vc_example(*n),
            ConstructionSpec::Blowup { f, sizes } => blowup(f, sizes).map(|(g, _)| g),
        }
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(msg()))
    }
}

/// Turán graph `T_{n,parts}`: parts of sizes differing by at most one, larger parts first,
/// vertices grouped by part in index order.
pub fn turan(n: usize, parts: usize) -> Result<Graph> {
    require(parts >= 1 && n >= parts, || format!("turan needs 1 <= parts <= n, got n={n}, parts={parts}"))?;
    let part_of: Vec<usize> = (0..parts)
        .flat_map(|p| std::iter::repeat_n(p, n / parts + usize::from(p < n % parts)))
        .collect();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// The `k`-subsets of `0..m` in lexicographic order (the Kneser vertex labels).
pub fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(m, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Kneser graph `KG(m, k)`: vertices are the `k`-subsets of `[m]` in lexicographic order,
/// adjacent when disjoint.
pub fn kneser(m: usize, k: usize) -> Result<Graph> {
    require(k >= 1 && m >= 2 * k, || format!("kneser needs k >= 1 and m >= 2k, got m={m}, k={k}"))?;
    let sets = k_subsets(m, k);
    let mut g = Graph::empty(sets.len());
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i].iter().all(|x| !sets[j].contains(x)) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// `M_{t,t}`: `K_{t,t}` minus a perfect matching. `x_i` is vertex `i-1`, `y_i` is `t+i-1`.
pub fn mtt(t: usize) -> Result<Graph> {
    require(t >= 1, || "mtt needs t >= 1".into())?;
    let mut g = Graph::empty(2 * t);
    for i in 0..t {
        for j in 0..t {
            if i != j {
                g.add_edge(i, t + j);
            }
        }
    }
    Ok(g)
}

/// Minimal member of the half-graph family: `x_i y_j` is an edge iff `j < i`.
/// `x_i` is vertex `i-1`, `y_i` is `k+i-1`.
pub fn half_min(k: usize) -> Result<Graph> {
    require(k >= 1, || "half_min needs k >= 1".into())?;
    let mut g = Graph::empty(2 * k);
    for i in 0..k {
        for j in 0..i {
            g.add_edge(i, k + j);
        }
    }
    Ok(g)
}

/// Blow-up `F[·]`: vertex `i` of `F` becomes an independent class of `sizes[i]` copies.
/// Classes are laid out consecutively in the order of `F`'s vertices. Returns the graph
/// and the origin map.
pub fn blowup(f: &Graph, sizes: &[usize]) -> Result<(Graph, Vec<Vertex>)> {
    if sizes.len() != f.n() {
        return Err(Error::Invalid(format!("blowup: {} sizes for {} vertices", sizes.len(), f.n())));
    }
    if let Some(i) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::Invalid(format!("blowup: class {i} has size 0")));
    }
    let origin: Vec<Vertex> = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    let mut g = Graph::empty(origin.len());
    for u in 0..origin.len() {
        for v in u + 1..origin.len() {
            if f.has_edge(origin[u], origin[v]) {
                g.add_edge(u, v);
            }
        }
    }
    Ok((g, origin))
}

/// `Γ[a, b]`: take `M_{t,t}` on `x_1..x_t, y_1..y_t`, a copy `z_1..z_t` of `Γ`, join
/// `x_i z_i` and `y_i z_i`, then blow each `x`/`y` vertex into `a` copies and each `z`
/// vertex into `b` copies. Layout: X-copies, then Y-copies, then Z-copies.
///
/// `Γ` must be maximal triangle-free on `t >= 3` vertices; for `t <= 2` two `x` vertices
/// have no common neighbour and the result is not maximal triangle-free.
pub fn gamma_blowup(gamma: &Graph, a: usize, b: usize) -> Result<Graph> {
    let t = gamma.n();
    require(a >= 1 && b >= 1, || format!("gamma_blowup needs a, b >= 1, got a={a}, b={b}"))?;
    require(t >= 3, || format!("gamma_blowup needs |Gamma| >= 3, got {t}"))?;
    require(gamma.is_maximal_k_free(3), || "Gamma is not maximal triangle-free".into())?;
    let mut base = Graph::empty(3 * t);
    let (x, y, z) = (0, t, 2 * t);
    for i in 0..t {
        for j in 0..t {
            if i != j {
                base.add_edge(x + i, y + j);
            }
        }
        base.add_edge(x + i, z + i);
        base.add_edge(y + i, z + i);
    }
    for (u, v) in gamma.edges() {
        base.add_edge(z + u, z + v);
    }
    let sizes: Vec<usize> = (0..3 * t).map(|v| if v < 2 * t { a } else { b }).collect();
    let (g, _) = blowup(&base, &sizes)?;
    if !g.is_maximal_k_free(3) {
        return Err(Error::ClaimViolation("Gamma[a,b] is not maximal triangle-free".into()));
    }
    Ok(g)
}

/// `K_{n/8,n/8}[1,2]`, the `n`-vertex instance with bounded neighbourhood VC-dimension.
pub fn ultra_vc_example(n: usize) -> Result<Graph> {
    require(n.is_multiple_of(8) && n >= 16, || format!("ultra_vc_example needs n divisible by 8 and n >= 16, got {n}"))?;
    gamma_blowup(&complete_bipartite(n / 8, n / 8), 1, 2)
}

/// Index of `a_i^(b)` (1-based `i`) in `H` from [`hypercube_lb`].
pub fn hypercube_d_index(i: usize, b: usize) -> usize {
    2 * (i - 1) + b
}

/// The lower-bound pair `(H, G)`.
///
/// `H` has vertex set `D ∪ Q`: `a_i^(b)` sits at `2(i-1)+b` and the cube vertex
/// `u ∈ {0,1}^d` at `2d + u`, where bit `i-1` of `u` is the coordinate `u_i`.
/// Edges: `a_i^(0) a_i^(1)`, `u ū`, and `u a_i^(u_i)`.
/// `G` blows every `D` vertex into `2^d` copies; its layout is the class-major blow-up
/// of `H`, so `|G| = (2d+1) 2^d`.
pub fn hypercube_lb(d: usize) -> Result<(Graph, Graph)> {
    require((1..=16).contains(&d), || format!("hypercube_lb needs 1 <= d <= 16, got {d}"))?;
    let q = 1usize << d;
    let mut h = Graph::empty(2 * d + q);
    for i in 1..=d {
        h.add_edge(hypercube_d_index(i, 0), hypercube_d_index(i, 1));
    }
    for u in 0..q {
        let bar = !u & (q - 1);
        if u < bar {
            h.add_edge(2 * d + u, 2 * d + bar);
        }
        for i in 1..=d {
            h.add_edge(2 * d + u, hypercube_d_index(i, u >> (i - 1) & 1));
        }
    }
    let sizes: Vec<usize> = (0..2 * d + q).map(|v| if v < 2 * d { q } else { 1 }).collect();
    let (g, _) = blowup(&h, &sizes)?;
    Ok((h, g))
}

pub fn cycle(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    if n >= 3 {
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

/// `K_{a,b}` with the `a`-side first.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in 0..b {
            g.add_edge(u, a + v);
        }
    }
    g
}

/// `t K_2`: edges `(2i, 2i+1)`.
pub fn disjoint_edges(t: usize) -> Graph {
    let mut g = Graph::empty(2 * t);
    for i in 0..t {
        g.add_edge(2 * i, 2 * i + 1);
    }
    g
}

pub fn petersen() -> Graph {
    kneser(5, 2).expect("KG(5,2) parameters are valid")
}

/// Random maximal triangle-free graph: scans all pairs in a seeded random order and keeps
/// every edge that closes no triangle.
pub fn greedy_maximal_triangle_free(n: usize, seed: u64) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        if g.common_neighbors(u, v).is_clear() {
            g.add_edge(u, v);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::count_cliques;

    #[test]
    fn turan_sizes() {
        assert_eq!(turan(9, 3).unwrap().edge_count(), 27);
        assert_eq!(turan(4, 4).unwrap(), Graph::complete(4));
        assert_eq!(turan(5, 2).unwrap().edge_count(), 6);
        assert!(turan(2, 3).is_err());
    }

    #[test]
    fn kneser_small() {
        let p = kneser(5, 2).unwrap();
        assert_eq!(p.n(), 10);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(count_cliques(&p, 3, None), 0);
        let m = kneser(4, 2).unwrap();
        assert!((0..6).all(|v| m.degree(v) == 1));
        assert!(count_cliques(&kneser(6, 2).unwrap(), 3, None) > 0);
    }

    #[test]
    fn mtt_and_half() {
        assert_eq!(mtt(3).unwrap().edge_count(), 6);
        assert_eq!(mtt(1).unwrap().edge_count(), 0);
        assert_eq!(mtt(4).unwrap().edge_count(), 12);
        let h2 = half_min(2).unwrap();
        assert_eq!(h2.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(half_min(4).unwrap().edge_count(), 6);
        assert_eq!(half_min(1).unwrap().edge_count(), 0);
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_blowup(&path(3), 1, 1).unwrap().n(), 9);
        let g = gamma_blowup(&complete_bipartite(2, 2), 1, 2).unwrap();
        assert_eq!(g.n(), 16);
        assert!(gamma_blowup(&path(4), 1, 1).is_err());
        assert!(gamma_blowup(&Graph::complete(2), 1, 1).is_err());
    }

    #[test]
    fn hypercube_counts() {
        let (h, _) = hypercube_lb(2).unwrap();
        assert_eq!((h.n(), h.edge_count()), (8, 12));
        let (h3, g3) = hypercube_lb(3).unwrap();
        assert_eq!(g3.n(), 56);
        for d in 1..=3 {
            assert!(hypercube_lb(d).unwrap().0.is_maximal_k_free(3));
        }
        assert!(g3.is_triangle_free());
        assert_eq!(h3.n(), 14);
    }

    #[test]
    fn blowup_basics() {
        let (c4, origin) = blowup(&Graph::complete(2), &[2, 2]).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(origin, vec![0, 0, 1, 1]);
        let p = petersen();
        assert_eq!(blowup(&p, &[1; 10]).unwrap().0, p);
        let (big, _) = blowup(&p, &[3; 10]).unwrap();
        assert_eq!(big.n(), 30);
        assert_eq!(count_cliques(&big, 3, None), 0);
        assert!(blowup(&p, &[0; 10]).is_err());
    }

    #[test]
    fn greedy_is_maximal() {
        for seed in 0..10 {
            assert!(greedy_maximal_triangle_free(9, seed).is_maximal_k_free(3));
        }
    }
}
