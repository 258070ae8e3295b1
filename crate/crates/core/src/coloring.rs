//! Exact vertex colouring by DSATUR branch and bound.

use crate::budget::{Meter, SearchBudget};
use crate::cliques::max_clique;
use crate::error::Result;
use crate::graph::{Graph, Vertex};

struct Dsatur<'a> {
    g: &'a Graph,
    colour: Vec<Option<usize>>,
    // neighbour_colours[v][c] = number of neighbours of v coloured c
    neighbour_colours: Vec<Vec<u32>>,
    sat: Vec<usize>,
    best: Vec<usize>,
    best_k: usize,
    lower: usize,
    meter: Meter,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, meter: Meter) -> Self {
        let n = g.n();
        Dsatur {
            g,
            colour: vec![None; n],
            neighbour_colours: vec![vec![0; n + 1]; n],
            sat: vec![0; n],
            best: Vec::new(),
            best_k: usize::MAX,
            lower: 0,
            meter,
        }
    }

    fn assign(&mut self, v: Vertex, c: usize) {
        self.colour[v] = Some(c);
        for w in self.g.neighbors(v).ones() {
            if self.neighbour_colours[w][c] == 0 {
                self.sat[w] += 1;
            }
            self.neighbour_colours[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: Vertex, c: usize) {
        self.colour[v] = None;
        for w in self.g.neighbors(v).ones() {
            self.neighbour_colours[w][c] -= 1;
            if self.neighbour_colours[w][c] == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    /// Uncoloured vertex of maximum saturation, then maximum degree, then lowest index.
    fn pick(&self) -> Option<Vertex> {
        (0..self.g.n())
            .filter(|&v| self.colour[v].is_none())
            .max_by(|&a, &b| {
                (self.sat[a], self.g.degree(a))
                    .cmp(&(self.sat[b], self.g.degree(b)))
                    .then(b.cmp(&a))
            })
    }

    fn search(&mut self, used: usize) -> Result<()> {
        self.meter.tick()?;
        if self.best_k <= self.lower || used >= self.best_k {
            return Ok(());
        }
        let Some(v) = self.pick() else {
            self.best = self.colour.iter().map(|c| c.unwrap()).collect();
            self.best_k = used;
            return Ok(());
        };
        let limit = (used + 1).min(self.best_k - 1);
        for c in 0..limit {
            if self.neighbour_colours[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            self.search(used.max(c + 1))?;
            self.unassign(v, c);
            if self.best_k <= self.lower {
                break;
            }
        }
        Ok(())
    }
}

/// An optimal proper colouring with colours `0..χ(G)`.
pub fn optimal_coloring(g: &Graph, budget: SearchBudget) -> Result<Vec<usize>> {
    budget.validate()?;
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let mut meter = budget.meter();
    let clique = max_clique(g, &mut meter)?;
    let mut st = Dsatur::new(g, meter);
    st.lower = clique.len();
    // Colouring a maximum clique first removes colour-permutation symmetry.
    for (c, &v) in clique.iter().enumerate() {
        st.assign(v, c);
    }
    st.search(clique.len())?;
    Ok(st.best)
}

/// Exact chromatic number `χ(G)`.
pub fn chromatic_number(g: &Graph, budget: SearchBudget) -> Result<usize> {
    Ok(optimal_coloring(g, budget)?.into_iter().max().map_or(0, |c| c + 1))
}

pub fn is_proper_coloring(g: &Graph, colouring: &[usize]) -> bool {
    colouring.len() == g.n() && g.edges().all(|(u, v)| colouring[u] != colouring[v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn brute_chi(g: &Graph) -> usize {
        let n = g.n();
        for k in 1..=n {
            let mut col = vec![0usize; n];
            loop {
                if is_proper_coloring(g, &col) {
                    return k;
                }
                let mut i = 0;
                while i < n {
                    col[i] += 1;
                    if col[i] < k {
                        break;
                    }
                    col[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
        0
    }

    #[test]
    fn small_values() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(chromatic_number(&c5, SearchBudget::UNLIMITED).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::empty(4), SearchBudget::UNLIMITED).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::empty(0), SearchBudget::UNLIMITED).unwrap(), 0);
        assert_eq!(chromatic_number(&Graph::complete(6), SearchBudget::UNLIMITED).unwrap(), 6);
    }

    #[test]
    fn matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..80 {
            let n = rng.gen_range(1..8);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v);
                    }
                }
            }
            let col = optimal_coloring(&g, SearchBudget::UNLIMITED).unwrap();
            assert!(is_proper_coloring(&g, &col));
            assert_eq!(col.iter().max().unwrap() + 1, brute_chi(&g));
        }
    }

    #[test]
    fn budget_is_reported() {
        let mut g = Graph::empty(12);
        for u in 0..12 {
            for v in u + 1..12 {
                if (u * 7 + v * 3) % 5 != 0 {
                    g.add_edge(u, v);
                }
            }
        }
        assert!(matches!(
            chromatic_number(&g, SearchBudget::nodes(1)),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
