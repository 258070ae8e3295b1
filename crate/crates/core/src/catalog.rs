//! Graph catalogs: every connected graph up to 7 vertices, plus seeded random graphs.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};

/// Largest order supported by the exhaustive catalog (the canonical code packs pairs into a `u64`).
pub const MAX_CATALOG_N: usize = 11;

fn pair_bit(i: usize, j: usize) -> usize {
    // position of pair (i, j), i < j, in column-major order
    j * (j - 1) / 2 + i
}

fn code_under(g: &Graph, perm: &[Vertex]) -> u64 {
    let mut code = 0u64;
    for j in 1..perm.len() {
        for i in 0..j {
            if g.has_edge(perm[i], perm[j]) {
                code |= 1 << pair_bit(i, j);
            }
        }
    }
    code
}

/// Canonical code: the maximum adjacency code over orderings that sort vertices by
/// (degree, sorted neighbour degrees) and permute freely within each class.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_CATALOG_N, "canonical_code supports n <= {MAX_CATALOG_N}");
    let label = |v: Vertex| {
        let mut nd: Vec<usize> = g.neighbors(v).ones().map(|w| g.degree(w)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut verts: Vec<Vertex> = (0..n).collect();
    verts.sort_by_key(|&v| label(v));
    let mut classes: Vec<Vec<Vertex>> = Vec::new();
    for &v in &verts {
        match classes.last_mut() {
            Some(c) if label(c[0]) == label(v) => c.push(v),
            _ => classes.push(vec![v]),
        }
    }

    fn rec(g: &Graph, classes: &mut [Vec<Vertex>], ci: usize, k: usize, prefix: &mut Vec<Vertex>, best: &mut u64) {
        if ci == classes.len() {
            *best = (*best).max(code_under(g, prefix));
            return;
        }
        if k == classes[ci].len() {
            rec(g, classes, ci + 1, 0, prefix, best);
            return;
        }
        for i in k..classes[ci].len() {
            classes[ci].swap(k, i);
            prefix.push(classes[ci][k]);
            rec(g, classes, ci, k + 1, prefix, best);
            prefix.pop();
            classes[ci].swap(k, i);
        }
    }

    let mut best = 0;
    rec(g, &mut classes, 0, 0, &mut Vec::with_capacity(n), &mut best);
    best
}

/// Rebuilds the graph encoded by a canonical code.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// All connected graphs on exactly `n` vertices up to isomorphism, in canonical form,
/// sorted by canonical code.
///
/// Every connected graph has a vertex whose removal keeps it connected, so extending
/// each connected `(n-1)`-vertex graph by a vertex with a nonempty neighbourhood
/// reaches every class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "connected_graphs is meant for n <= 8");
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = graph_from_code(m - 1, code);
            for mask in 1u32..1 << (m - 1) {
                let mut g = Graph::empty(m);
                for (u, v) in base.edges() {
                    g.add_edge(u, v);
                }
                for u in 0..m - 1 {
                    if mask >> u & 1 == 1 {
                        g.add_edge(u, m - 1);
                    }
                }
                next.insert(canonical_code(&g));
            }
        }
        level = next;
    }
    level.into_iter().map(|c| graph_from_code(n, c)).collect()
}

/// The "small" catalog: all connected graphs with `1 <= n <= max_n`.
pub fn small_catalog(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

/// `G(n, p)` with `p = num/den`, from a ChaCha8 stream seeded by `seed`.
pub fn random_graph(n: usize, num: u32, den: u32, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_ratio(num, den) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// `count` seeded random graphs with `min_n <= n <= max_n` and edge probability drawn from {1/4, 2/4, 3/4}.
pub fn random_catalog(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            let num = rng.gen_range(1..=3);
            random_graph(n, num, 4, rng.gen())
        })
        .collect()
}

/// The "extended" catalog: the small catalog followed by 200 seeded random graphs with `n <= 12`.
pub fn extended_catalog(seed: u64) -> Vec<Graph> {
    let mut out = small_catalog(7);
    out.extend(random_catalog(200, 2, 12, seed));
    out
}
