//! Dense two-phase simplex over exact rationals, Bland's rule throughout.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

struct Tableau {
    // rows[i] = coefficients over all columns, followed by the right-hand side
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.cols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximises `obj · x` over columns in `allowed`. Returns false when unbounded.
    fn optimise(&mut self, obj: &[Rational], allowed: &[bool]) -> bool {
        loop {
            // reduced cost d_j = obj_j - Σ_i obj_{basis_i} a_ij
            let entering = (0..self.cols).find(|&j| {
                if !allowed[j] || self.basis.contains(&j) {
                    return false;
                }
                let mut d = obj[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !obj[b].is_zero() && !self.rows[i][j].is_zero() {
                        d -= &obj[b] * &self.rows[i][j];
                    }
                }
                d.is_positive()
            });
            let Some(c) = entering else { return true };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else { return false };
            self.pivot(r, c);
        }
    }
}

/// Maximises `c · x` subject to `A x ≤ b`, `x ≥ 0`. Negative entries of `b` are handled
/// by a phase-one problem over artificial variables.
pub fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    assert!(b.len() == m && a.iter().all(|row| row.len() == n), "LP dimensions disagree");
    let negative: Vec<usize> = (0..m).filter(|&i| b[i].is_negative()).collect();
    let art_base = n + m;
    let cols = n + m + negative.len();
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![Rational::zero(); cols + 1];
        let sign = if b[i].is_negative() { -Rational::one() } else { Rational::one() };
        for j in 0..n {
            row[j] = &a[i][j] * &sign;
        }
        row[n + i] = sign.clone();
        row[cols] = &b[i] * &sign;
        if let Some(k) = negative.iter().position(|&r| r == i) {
            row[art_base + k] = Rational::one();
            basis.push(art_base + k);
        } else {
            basis.push(n + i);
        }
        rows.push(row);
    }
    let mut t = Tableau { rows, basis, cols };

    if !negative.is_empty() {
        let mut phase1 = vec![Rational::zero(); cols];
        for k in 0..negative.len() {
            phase1[art_base + k] = -Rational::one();
        }
        t.optimise(&phase1, &vec![true; cols]);
        let infeasible = (0..m).any(|i| t.basis[i] >= art_base && !t.rhs(i).is_zero());
        if infeasible {
            return LpOutcome::Infeasible;
        }
        // Drive zero-valued artificials out of the basis where possible.
        for i in 0..m {
            if t.basis[i] >= art_base {
                if let Some(j) = (0..art_base).find(|&j| !t.rows[i][j].is_zero() && !t.basis.contains(&j)) {
                    t.pivot(i, j);
                }
            }
        }
    }

    let mut obj = vec![Rational::zero(); cols];
    obj[..n].clone_from_slice(c);
    let allowed: Vec<bool> = (0..cols).map(|j| j < art_base).collect();
    if !t.optimise(&obj, &allowed) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in t.basis.iter().enumerate() {
        if bv < n {
            x[bv] = t.rhs(i).clone();
        }
    }
    let value = x.iter().zip(c).map(|(xi, ci)| xi * ci).sum();
    LpOutcome::Optimal { x, value }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn textbook_max() {
        // max 3x + 5y, x ≤ 4, 2y ≤ 12, 3x + 2y ≤ 18 → (2, 6), 36
        let a = vec![r(&[1, 0]), r(&[0, 2]), r(&[3, 2])];
        match maximize(&a, &r(&[4, 12, 18]), &r(&[3, 5])) {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(x, r(&[2, 6]));
                assert_eq!(value, int(36));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn phase_one_min() {
        // min x + y with x + 2y ≥ 2, 2x + y ≥ 2 → 4/3
        let a = vec![r(&[-1, -2]), r(&[-2, -1])];
        match maximize(&a, &r(&[-2, -2]), &r(&[-1, -1])) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, ratio(-4, 3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        // x ≤ -1 with x ≥ 0
        assert_eq!(maximize(&[r(&[1])], &r(&[-1]), &r(&[1])), LpOutcome::Infeasible);
        // max x with -x ≤ 0
        assert_eq!(maximize(&[r(&[-1])], &r(&[0]), &r(&[1])), LpOutcome::Unbounded);
    }
}
