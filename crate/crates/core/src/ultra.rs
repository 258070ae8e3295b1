//! The ultra parameter, half graphs and bipartite induced matchings.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::budget::{Meter, SearchBudget};
use crate::cliques::{count_cliques_in, list_cliques_in};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rational::{ceil_int, format_rational, int, Rational};
use crate::report::{Check, Report};
use crate::setsystem::neighborhood_system;

/// Vertices `x_1..x_k`, `y_1..y_k` of a member of the half-graph family: `x_i y_i` is a
/// non-edge and `x_i y_j` an edge for `j < i`. Every other pair is unconstrained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfGraphEmbedding {
    pub xs: Vec<Vertex>,
    pub ys: Vec<Vertex>,
}

impl HalfGraphEmbedding {
    pub fn k(&self) -> usize {
        self.xs.len()
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        let k = self.xs.len();
        if self.ys.len() != k {
            return false;
        }
        let mut seen = FixedBitSet::with_capacity(g.n());
        for &v in self.xs.iter().chain(&self.ys) {
            if v >= g.n() || seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        (0..k).all(|i| !g.has_edge(self.xs[i], self.ys[i]) && (0..i).all(|j| g.has_edge(self.xs[i], self.ys[j])))
    }
}

/// Pairs `(u_i, v_i)` with `u_i v_j` an edge iff `i = j`, all vertices distinct.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiInducedMatching {
    pub pairs: Vec<(Vertex, Vertex)>,
}

impl BiInducedMatching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut seen = FixedBitSet::with_capacity(g.n());
        for &(u, v) in &self.pairs {
            for w in [u, v] {
                if w >= g.n() || seen.contains(w) {
                    return false;
                }
                seen.insert(w);
            }
        }
        self.pairs.iter().enumerate().all(|(i, &(u, _))| {
            self.pairs.iter().enumerate().all(|(j, &(_, v))| g.has_edge(u, v) == (i == j))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EpsStar {
    Finite(Rational),
    /// No non-adjacent pair: the graph is ultra for every `ε`.
    Infinite,
}

/// `ε* = min_{uv ∉ E} k_{r-2}(G[N(u,v)]) / n^{r-2}`, with the first pair attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UltraCertificate {
    pub r: usize,
    pub epsilon_star: EpsStar,
    pub worst_pair: Option<(Vertex, Vertex, u64)>,
}

impl UltraCertificate {
    /// `G` is `eps`-ultra iff `eps <= ε*`.
    pub fn is_ultra(&self, eps: &Rational) -> bool {
        match &self.epsilon_star {
            EpsStar::Infinite => true,
            EpsStar::Finite(e) => eps <= e,
        }
    }

    pub fn finite(&self) -> Option<&Rational> {
        match &self.epsilon_star {
            EpsStar::Finite(e) => Some(e),
            EpsStar::Infinite => None,
        }
    }

    pub fn to_json(&self) -> Value {
        let eps = match &self.epsilon_star {
            EpsStar::Finite(e) => json!(format_rational(e)),
            EpsStar::Infinite => json!("infinite"),
        };
        json!({
            "r": self.r,
            "epsilon_star": eps,
            "worst_pair": self.worst_pair.map(|(u, v, c)| json!({"u": u, "v": v, "cliques": c})),
        })
    }
}

/// Exact ultra parameter of a `K_r`-free graph.
pub fn ultra_parameter(g: &Graph, r: usize) -> Result<UltraCertificate> {
    if r < 3 {
        return Err(Error::Precondition(format!("ultra parameter needs r >= 3, got {r}")));
    }
    if !g.is_k_free(r) {
        return Err(Error::NotCliqueFree { r });
    }
    let mut worst: Option<(Vertex, Vertex, u64)> = None;
    for (u, v) in g.non_edges() {
        let c = count_cliques_in(g, r - 2, &g.common_neighbors(u, v));
        if worst.is_none_or(|(_, _, w)| c < w) {
            worst = Some((u, v, c));
        }
    }
    let epsilon_star = match worst {
        None => EpsStar::Infinite,
        Some((_, _, c)) => EpsStar::Finite(Rational::new(BigInt::from(c), BigInt::from(g.n()).pow(r as u32 - 2))),
    };
    Ok(UltraCertificate {
        r,
        epsilon_star,
        worst_pair: worst,
    })
}

/// Searches for an embedding of a member of the half-graph family with `k` pairs.
///
/// Chooses `x_1, y_1, x_2, y_2, …` in index order. Later `x`s must be adjacent to every
/// chosen `y`, so the common neighbourhood of the chosen `y`s is kept as the forward
/// candidate set.
pub fn find_half_graph(g: &Graph, k: usize, budget: SearchBudget) -> Result<Option<HalfGraphEmbedding>> {
    if k == 0 {
        return Err(Error::Precondition("find_half_graph needs k >= 1".into()));
    }
    budget.validate()?;
    if 2 * k > g.n() {
        return Ok(None);
    }
    struct St<'a> {
        g: &'a Graph,
        k: usize,
        xs: Vec<Vertex>,
        ys: Vec<Vertex>,
        used: FixedBitSet,
        meter: Meter,
    }
    fn pick_x(st: &mut St, x_cand: &FixedBitSet) -> Result<bool> {
        st.meter.tick()?;
        if st.xs.len() == st.k {
            return Ok(true);
        }
        let mut avail = x_cand.clone();
        avail.difference_with(&st.used);
        if avail.count_ones(..) < st.k - st.xs.len() {
            return Ok(false);
        }
        for x in avail.ones() {
            st.xs.push(x);
            st.used.insert(x);
            if pick_y(st, x_cand)? {
                return Ok(true);
            }
            st.used.set(x, false);
            st.xs.pop();
        }
        Ok(false)
    }
    fn pick_y(st: &mut St, x_cand: &FixedBitSet) -> Result<bool> {
        let x = *st.xs.last().unwrap();
        let remaining = st.k - st.xs.len();
        let mut avail = st.g.neighbors(x).clone();
        avail.toggle_range(..);
        avail.difference_with(&st.used);
        for y in avail.ones() {
            let mut next = x_cand.clone();
            next.intersect_with(st.g.neighbors(y));
            if remaining > 0 {
                let mut free = next.clone();
                free.difference_with(&st.used);
                free.set(y, false);
                if free.count_ones(..) < remaining {
                    continue;
                }
            }
            st.ys.push(y);
            st.used.insert(y);
            if pick_x(st, &next)? {
                return Ok(true);
            }
            st.used.set(y, false);
            st.ys.pop();
        }
        Ok(false)
    }
    let mut st = St {
        g,
        k,
        xs: Vec::new(),
        ys: Vec::new(),
        used: FixedBitSet::with_capacity(g.n()),
        meter: budget.meter(),
    };
    if pick_x(&mut st, &g.all_vertices())? {
        let h = HalfGraphEmbedding { xs: st.xs, ys: st.ys };
        debug_assert!(h.is_valid(g));
        Ok(Some(h))
    } else {
        Ok(None)
    }
}

/// Greedy half-graph construction from a bipartite induced matching, after checking that
/// `G` is `eps`-ultra maximal `K_r`-free and that `|M| >= 2/eps`.
pub fn build_half_from_matching(g: &Graph, m: &BiInducedMatching, r: usize, eps: &Rational) -> Result<HalfGraphEmbedding> {
    if *eps <= Rational::zero() {
        return Err(Error::Precondition("eps must be positive".into()));
    }
    let cert = ultra_parameter(g, r)?;
    if !cert.is_ultra(eps) {
        return Err(Error::Precondition(format!(
            "graph is not {}-ultra (epsilon* = {})",
            format_rational(eps),
            cert.finite().map_or("infinite".into(), format_rational)
        )));
    }
    build_half_from_matching_unchecked(g, m, r, eps)
}

/// The construction without the ultra precondition check. On a graph that is not
/// `eps`-ultra a pigeonhole step can fail, which is reported as `InternalContradiction`.
///
/// Round `j` works on the active list `a_1 = x_j, a_2, …, a_q` of matched `u`s with
/// `b_1 = z_j` (the partner of `x_j`). It picks the `K_{r-2}` lying in the most common
/// neighbourhoods `N(a_i, b_1)` (lexicographically least on ties), takes `y_j` in it
/// non-adjacent to `a_1`, and keeps the `a_i` whose common neighbourhood contains it.
/// Rounds continue while `q >= 2/eps`.
pub fn build_half_from_matching_unchecked(
    g: &Graph,
    m: &BiInducedMatching,
    r: usize,
    eps: &Rational,
) -> Result<HalfGraphEmbedding> {
    if r < 3 || *eps <= Rational::zero() {
        return Err(Error::Precondition("needs r >= 3 and eps > 0".into()));
    }
    if !m.is_valid(g) {
        return Err(Error::Precondition("matching is not a bipartite induced matching".into()));
    }
    let two_over_eps = int(2) / eps;
    if int(m.len()) < two_over_eps {
        return Err(Error::Precondition(format!(
            "matching of size {} is smaller than 2/eps = {}",
            m.len(),
            format_rational(&two_over_eps)
        )));
    }
    let partner: BTreeMap<Vertex, Vertex> = m.pairs.iter().copied().collect();
    let mut active: Vec<Vertex> = m.pairs.iter().map(|&(u, _)| u).collect();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    while int(active.len()) >= two_over_eps {
        let a1 = active[0];
        let b1 = partner[&a1];
        let q = active.len();
        let mut multiplicity: BTreeMap<Vec<Vertex>, Vec<Vertex>> = BTreeMap::new();
        for &ai in &active[1..] {
            for k in list_cliques_in(g, r - 2, &g.common_neighbors(ai, b1)) {
                multiplicity.entry(k).or_default().push(ai);
            }
        }
        let need = eps * int(q) / int(2);
        let best = |avoid_a1: bool| {
            multiplicity
                .iter()
                .filter(|(k, _)| !avoid_a1 || !k.contains(&a1))
                .max_by(|(ka, va), (kb, vb)| va.len().cmp(&vb.len()).then(kb.cmp(ka)))
                .map(|(k, v)| (k.clone(), v.clone()))
        };
        let top = best(false);
        match &top {
            Some((_, holders)) if int(holders.len()) >= need => {}
            _ => {
                return Err(Error::InternalContradiction(format!(
                    "round {}: no K_{} shared by {} of the co-neighbourhoods",
                    xs.len() + 1,
                    r - 2,
                    format_rational(&need)
                )))
            }
        }
        // a_1 may itself lie in the best clique; then only a clique avoiding it can supply c.
        let (clique, holders) = match top {
            Some((k, h)) if !k.contains(&a1) => (k, h),
            _ => match best(true) {
                Some((k, h)) if int(h.len()) >= need => (k, h),
                _ => {
                    return Err(Error::InternalContradiction(format!(
                        "round {}: every well-shared clique contains x_{}",
                        xs.len() + 1,
                        xs.len() + 1
                    )))
                }
            },
        };
        let Some(&c) = clique.iter().find(|&&c| !g.has_edge(a1, c)) else {
            return Err(Error::InternalContradiction(format!(
                "round {}: x is complete to a K_{} inside N(x, z), giving a K_{r}",
                xs.len() + 1,
                r - 2
            )));
        };
        xs.push(a1);
        ys.push(c);
        active = holders;
    }
    let h = HalfGraphEmbedding { xs, ys };
    if !h.is_valid(g) {
        return Err(Error::ClaimViolation("constructed half graph fails its invariants".into()));
    }
    Ok(h)
}

/// Maximum bipartite induced matching by branch and bound over pair sequences with
/// increasing `u`.
pub fn nu_bi(g: &Graph, budget: SearchBudget) -> Result<(usize, BiInducedMatching)> {
    budget.validate()?;
    struct St<'a> {
        g: &'a Graph,
        best: Vec<(Vertex, Vertex)>,
        meter: Meter,
    }
    // `u_ok`: vertices not adjacent to any chosen v; `v_ok`: not adjacent to any chosen u.
    fn rec(st: &mut St, cur: &mut Vec<(Vertex, Vertex)>, start: Vertex, u_ok: &FixedBitSet, v_ok: &FixedBitSet) -> Result<()> {
        st.meter.tick()?;
        if cur.len() > st.best.len() {
            st.best = cur.clone();
        }
        let mut us = u_ok.clone();
        us.set_range(..start, false);
        if cur.len() + us.count_ones(..) <= st.best.len() {
            return Ok(());
        }
        for u in us.ones() {
            if cur.len() + u_ok.ones().filter(|&w| w >= u).count() <= st.best.len() {
                break;
            }
            let mut vs = st.g.neighbors(u).clone();
            vs.intersect_with(v_ok);
            for v in vs.ones() {
                if v < start && cur.iter().any(|&(a, b)| a == v || b == v) {
                    continue;
                }
                let mut nu = u_ok.clone();
                nu.difference_with(st.g.neighbors(v));
                nu.set(u, false);
                nu.set(v, false);
                let mut nv = v_ok.clone();
                nv.difference_with(st.g.neighbors(u));
                nv.set(u, false);
                nv.set(v, false);
                cur.push((u, v));
                rec(st, cur, u + 1, &nu, &nv)?;
                cur.pop();
            }
        }
        Ok(())
    }
    let mut st = St {
        g,
        best: Vec::new(),
        meter: budget.meter(),
    };
    let all = g.all_vertices();
    rec(&mut st, &mut Vec::new(), 0, &all, &all)?;
    let m = BiInducedMatching { pairs: st.best };
    if !m.is_valid(g) {
        return Err(Error::ClaimViolation("bipartite induced matching fails its invariants".into()));
    }
    Ok((m.len(), m))
}

/// VC-dimension of the neighbourhood system of an `eps`-ultra graph against `t + r - 4`
/// with `t = ⌈1/eps⌉ + 1`.
pub fn check_vc_clique_bound(g: &Graph, r: usize, eps: &Rational, budget: SearchBudget) -> Result<Report> {
    if *eps <= Rational::zero() {
        return Err(Error::Precondition("eps must be positive".into()));
    }
    let cert = ultra_parameter(g, r)?;
    if !cert.is_ultra(eps) {
        return Err(Error::Precondition(format!(
            "graph is not {}-ultra (epsilon* = {})",
            format_rational(eps),
            cert.finite().map_or("infinite".into(), format_rational)
        )));
    }
    let t: BigInt = ceil_int(&(int(1) / eps)) + 1;
    let bound = t.clone() + BigInt::from(r) - 4;
    let (vc, shattered) = neighborhood_system(g).vc_dimension(budget)?;
    let ok = BigInt::from(vc) <= bound;
    let mut report = Report::new();
    report.push(Check::new(
        "vc_le_t_plus_r_minus_4",
        "VC-dimension of an eps-ultra maximal K_r-free graph is at most t + r - 4",
        ok,
        json!({"vc": vc, "t": t.to_string(), "bound": bound.to_string()}),
        (!ok).then(|| json!(shattered)),
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, disjoint_edges, half_min, mtt};
    use crate::rational::ratio;

    #[test]
    fn ultra_examples() {
        assert_eq!(ultra_parameter(&Graph::complete(4), 5).unwrap().epsilon_star, EpsStar::Infinite);
        let c = ultra_parameter(&cycle(5), 3).unwrap();
        assert_eq!(c.epsilon_star, EpsStar::Finite(ratio(1, 5)));
        assert_eq!(c.worst_pair, Some((0, 2, 1)));
        assert_eq!(ultra_parameter(&Graph::complete(3), 3), Err(Error::NotCliqueFree { r: 3 }));
    }

    #[test]
    fn half_graphs_found_in_their_hosts() {
        for k in 1..=5 {
            let h = find_half_graph(&half_min(k).unwrap(), k, SearchBudget::UNLIMITED).unwrap().unwrap();
            assert!(h.is_valid(&half_min(k).unwrap()));
        }
        for t in 1..=5 {
            let g = mtt(t).unwrap();
            assert!(find_half_graph(&g, t, SearchBudget::UNLIMITED).unwrap().is_some());
        }
        assert_eq!(find_half_graph(&cycle(5), 6, SearchBudget::UNLIMITED).unwrap(), None);
    }

    #[test]
    fn nu_bi_examples() {
        assert_eq!(nu_bi(&disjoint_edges(4), SearchBudget::UNLIMITED).unwrap().0, 4);
        assert_eq!(nu_bi(&cycle(5), SearchBudget::UNLIMITED).unwrap().0, 2);
        let tri = Graph::complete(3).disjoint_union(&Graph::empty(1));
        assert_eq!(nu_bi(&tri, SearchBudget::UNLIMITED).unwrap().0, 1);
        assert_eq!(nu_bi(&Graph::empty(3), SearchBudget::UNLIMITED).unwrap().0, 0);
    }

    #[test]
    fn adversarial_matching_contradicts() {
        let g = disjoint_edges(4);
        let m = BiInducedMatching {
            pairs: (0..4).map(|i| (2 * i, 2 * i + 1)).collect(),
        };
        assert!(matches!(build_half_from_matching(&g, &m, 3, &ratio(1, 2)), Err(Error::Precondition(_))));
        assert!(matches!(
            build_half_from_matching_unchecked(&g, &m, 3, &ratio(1, 2)),
            Err(Error::InternalContradiction(_))
        ));
    }

    #[test]
    fn vc_bound_examples() {
        let rep = check_vc_clique_bound(&cycle(5), 3, &ratio(1, 5), SearchBudget::UNLIMITED).unwrap();
        assert!(rep.all_pass());
        assert_eq!(rep.checks[0].value["vc"], json!(2));
        let star = crate::constructions::complete_bipartite(1, 3);
        assert!(matches!(
            check_vc_clique_bound(&star, 3, &ratio(1, 2), SearchBudget::UNLIMITED),
            Err(Error::Precondition(_))
        ));
    }
}
