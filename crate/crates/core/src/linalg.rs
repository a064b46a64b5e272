//! Exact row echelon forms over the rationals, for ranks of sparse matrices
//! whose columns are indexed by anything orderable (monomials, basis
//! elements).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::poly::Coeff;

/// Sparse row: column index to nonzero entry.
pub type SparseRow<C> = BTreeMap<C, Coeff>;

/// Incrementally built echelon basis. Each stored row is normalized to a
/// leading entry of 1 at its pivot column (the smallest column present).
#[derive(Debug, Clone)]
pub struct Echelon<C: Ord + Clone> {
    pivots: BTreeMap<C, SparseRow<C>>,
}

impl<C: Ord + Clone> Default for Echelon<C> {
    fn default() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }
}

impl<C: Ord + Clone> Echelon<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `row` against the stored rows.
    pub fn reduce(&self, mut row: SparseRow<C>) -> SparseRow<C> {
        row.retain(|_, v| !v.is_zero());
        let mut cursor: Option<C> = None;
        loop {
            let next = match &cursor {
                None => row.keys().next().cloned(),
                Some(c) => row.range((std::ops::Bound::Excluded(c.clone()), std::ops::Bound::Unbounded)).next().map(|(k, _)| k.clone()),
            };
            let Some(col) = next else { return row };
            if let Some(p) = self.pivots.get(&col) {
                let f = row[&col].clone();
                for (k, v) in p {
                    let e = row.entry(k.clone()).or_insert_with(Coeff::zero);
                    *e -= &f * v;
                    if e.is_zero() {
                        row.remove(k);
                    }
                }
            }
            cursor = Some(col);
        }
    }

    /// Adds `row` to the span; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow<C>) -> bool {
        let mut row = self.reduce(row);
        let Some((col, lead)) = row.iter().next().map(|(k, v)| (k.clone(), v.clone())) else {
            return false;
        };
        if !lead.is_one() {
            let inv = Coeff::one() / lead;
            for v in row.values_mut() {
                *v *= &inv;
            }
        }
        self.pivots.insert(col, row);
        true
    }

    pub fn contains(&self, row: SparseRow<C>) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Rank of the matrix with the given rows.
pub fn rank<C: Ord + Clone>(rows: impl IntoIterator<Item = SparseRow<C>>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::integer;

    fn row(entries: &[(usize, i64)]) -> SparseRow<usize> {
        entries.iter().map(|&(c, v)| (c, integer(v))).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank::<usize>([]), 0);
        assert_eq!(rank([row(&[(0, 1), (1, 2)]), row(&[(0, 2), (1, 4)])]), 1);
        assert_eq!(rank([row(&[(0, 1), (1, 2)]), row(&[(0, 3), (1, 4)]), row(&[(2, 5)])]), 3);
        assert_eq!(rank([row(&[(0, 0)])]), 0);
        // Rows of a 3x3 matrix with determinant zero.
        assert_eq!(
            rank([row(&[(0, 1), (1, 2), (2, 3)]), row(&[(0, 4), (1, 5), (2, 6)]), row(&[(0, 7), (1, 8), (2, 9)])]),
            2
        );
    }

    #[test]
    fn membership() {
        let mut e = Echelon::new();
        assert!(e.insert(row(&[(1, 2), (3, 1)])));
        assert!(e.insert(row(&[(3, 3)])));
        assert!(e.contains(row(&[(1, 5)])));
        assert!(!e.contains(row(&[(0, 1)])));
        assert!(!e.insert(row(&[(1, -1), (3, 7)])));
    }
}
