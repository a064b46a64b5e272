//! Exact two-phase simplex over the rationals with Bland's rule.
//!
//! Problems are `minimize c.x` subject to linear rows and `x >= 0`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Q = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub relation: Relation,
    pub rhs: Q,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram {
    pub nvars: usize,
    pub objective: Vec<Q>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<Q>, value: Q },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    rhs: Vec<Q>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for v in self.rows[r].iter_mut() {
                *v = &*v / &p;
            }
            self.rhs[r] = &self.rhs[r] / &p;
        }
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let f = self.rows[i][c].clone();
            if f.is_zero() {
                continue;
            }
            for (v, pv) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = &*v - &f * pv;
                }
            }
            self.rhs[i] = &self.rhs[i] - &f * &pivot_rhs;
        }
        self.basis[r] = c;
    }

    /// Minimize `cost . x` over the columns `< active`. Returns false when
    /// unbounded.
    fn optimize(&mut self, cost: &[Q], active: usize) -> bool {
        loop {
            // Bland: lowest-index column with negative reduced cost.
            let entering = (0..active).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut r = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() {
                        r -= &cost[b] * &self.rows[i][j];
                    }
                }
                r.is_negative()
            });
            let Some(c) = entering else { return true };
            let mut leave: Option<(usize, Q)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if a.is_positive() {
                    let ratio = &self.rhs[i] / a;
                    let better = match &leave {
                        None => true,
                        Some((k, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k]),
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            match leave {
                None => return false,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }

    fn value(&self, cost: &[Q]) -> Q {
        self.basis.iter().zip(&self.rhs).map(|(&b, v)| &cost[b] * v).sum()
    }
}

pub fn solve(lp: &LinearProgram) -> LpOutcome {
    let n = lp.nvars;
    let m = lp.constraints.len();
    // Normalize to nonnegative right-hand sides.
    let mut rows: Vec<(Vec<Q>, Relation, Q)> = lp
        .constraints
        .iter()
        .map(|c| {
            debug_assert_eq!(c.coeffs.len(), n);
            if c.rhs.is_negative() {
                let flipped = match c.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                (c.coeffs.iter().map(|v| -v).collect(), flipped, -&c.rhs)
            } else {
                (c.coeffs.clone(), c.relation, c.rhs.clone())
            }
        })
        .collect();
    let nslack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
    let nart = rows.iter().filter(|r| r.1 != Relation::Le).count();
    let ncols = n + nslack + nart;
    let mut t = Tableau { rows: Vec::with_capacity(m), rhs: Vec::with_capacity(m), basis: Vec::with_capacity(m), ncols };
    let (mut s, mut a) = (n, n + nslack);
    for (coeffs, rel, rhs) in rows.drain(..) {
        let mut row = coeffs;
        row.resize(ncols, Q::zero());
        match rel {
            Relation::Le => {
                row[s] = Q::one();
                t.basis.push(s);
                s += 1;
            }
            Relation::Ge => {
                row[s] = -Q::one();
                s += 1;
                row[a] = Q::one();
                t.basis.push(a);
                a += 1;
            }
            Relation::Eq => {
                row[a] = Q::one();
                t.basis.push(a);
                a += 1;
            }
        }
        t.rows.push(row);
        t.rhs.push(rhs);
    }

    if nart > 0 {
        let mut phase1 = vec![Q::zero(); ncols];
        for v in phase1[n + nslack..].iter_mut() {
            *v = Q::one();
        }
        t.optimize(&phase1, ncols);
        if t.value(&phase1).is_positive() {
            return LpOutcome::Infeasible;
        }
        // Drive remaining (zero-valued) artificials out of the basis.
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= n + nslack {
                match (0..n + nslack).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => {
                        t.pivot(i, j);
                        i += 1;
                    }
                    None => {
                        // Redundant row.
                        t.rows.remove(i);
                        t.rhs.remove(i);
                        t.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
    }
    let mut cost = vec![Q::zero(); t.ncols];
    cost[..n].clone_from_slice(&lp.objective);
    if !t.optimize(&cost, n + nslack) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Q::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            x[b] = t.rhs[i].clone();
        }
    }
    let value = lp.objective.iter().zip(&x).map(|(c, v)| c * v).sum();
    LpOutcome::Optimal { x, value }
}
