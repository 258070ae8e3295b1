//! Graph isomorphism by colour refinement plus backtracking.

use std::collections::BTreeMap;

use crate::graph::{Graph, Vertex};

/// Stable colour refinement run on both graphs at once so colours are comparable.
fn refine(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let ng = g.n();
    let union = g.disjoint_union(h);
    let total = union.n();
    let mut colour: Vec<usize> = (0..total).map(|v| union.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..total)
            .map(|v| {
                let mut nb: Vec<usize> = union.neighbors(v).ones().map(|w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut ranked = sigs.clone();
        ranked.sort();
        ranked.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| ranked.binary_search(s).unwrap()).collect();
        let classes_before = {
            let mut c = colour.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        let classes_after = ranked.len();
        colour = next;
        if classes_after == classes_before {
            break;
        }
    }
    (colour[..ng].to_vec(), colour[ng..].to_vec())
}

/// An isomorphism `φ: V(g) → V(h)` (as a vector indexed by `g`-vertex), if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<Vertex>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let n = g.n();
    let (cg, ch) = refine(g, h);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return None;
    }
    let mut class_size: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &cg {
        *class_size.entry(c).or_default() += 1;
    }
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&cg[v]], v));

    fn rec(
        g: &Graph,
        h: &Graph,
        cg: &[usize],
        ch: &[usize],
        order: &[Vertex],
        depth: usize,
        map: &mut Vec<Option<Vertex>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..h.n() {
            if used[w] || ch[w] != cg[v] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| g.has_edge(u, v) == h.has_edge(map[u].unwrap(), w));
            if !consistent {
                continue;
            }
            map[v] = Some(w);
            used[w] = true;
            if rec(g, h, cg, ch, order, depth + 1, map, used) {
                return true;
            }
            map[v] = None;
            used[w] = false;
        }
        false
    }

    let mut map = vec![None; n];
    let mut used = vec![false; n];
    if rec(g, h, &cg, &ch, &order, 0, &mut map, &mut used) {
        Some(map.into_iter().map(|m| m.unwrap()).collect())
    } else {
        None
    }
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// True iff `phi` is a bijection `V(g) → V(h)` preserving adjacency and non-adjacency.
pub fn is_isomorphism(g: &Graph, h: &Graph, phi: &[Vertex]) -> bool {
    if g.n() != h.n() || phi.len() != g.n() {
        return false;
    }
    let mut seen = vec![false; h.n()];
    for &w in phi {
        if w >= h.n() || seen[w] {
            return false;
        }
        seen[w] = true;
    }
    (0..g.n()).all(|u| (u + 1..g.n()).all(|v| g.has_edge(u, v) == h.has_edge(phi[u], phi[v])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_cycle() {
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let perm = [3, 5, 0, 2, 1, 4];
        let edges: Vec<_> = c6.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::from_edges(6, &edges).unwrap();
        let phi = find_isomorphism(&c6, &h).unwrap();
        assert!(is_isomorphism(&c6, &h, &phi));
    }

    #[test]
    fn same_degrees_not_isomorphic() {
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&c6, &two_triangles));
    }

    #[test]
    fn regular_graphs_need_backtracking() {
        // Petersen graph against itself under a relabelling: refinement cannot split it.
        let outer = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        let spokes = [(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)];
        let inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)];
        let edges: Vec<_> = outer.iter().chain(&spokes).chain(&inner).copied().collect();
        let p = Graph::from_edges(10, &edges).unwrap();
        let perm = [9, 2, 7, 4, 0, 5, 8, 1, 6, 3];
        let q = Graph::from_edges(10, &edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect::<Vec<_>>()).unwrap();
        let phi = find_isomorphism(&p, &q).unwrap();
        assert!(is_isomorphism(&p, &q, &phi));
    }
}
