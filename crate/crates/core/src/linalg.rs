//! Sparse exact row reduction.
//!
//! A [`Subspace`] keeps a fully reduced row echelon basis: every row has its
//! pivot (smallest column) normalised to 1 and no row has a nonzero entry in
//! another row's pivot column. Callers choose the column numbering so that
//! the coordinates they want eliminated first get the smallest indices.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::scalars::{CyclotomicContext, Scalar};

/// Sorted by column, no zero entries.
pub type SparseRow = Vec<(usize, Scalar)>;

/// Build a sparse row from arbitrary `(column, value)` pairs, merging duplicates.
pub fn collect_row<I: IntoIterator<Item = (usize, Scalar)>>(entries: I) -> SparseRow {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (c, v) in entries {
        match acc.get_mut(&c) {
            Some(slot) => *slot = &*slot + &v,
            None => {
                acc.insert(c, v);
            }
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `a + c * b` on sorted sparse rows.
pub fn add_scaled(a: &[(usize, Scalar)], c: &Scalar, b: &[(usize, Scalar)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn lookup<'a>(row: &'a [(usize, Scalar)], col: usize) -> Option<&'a Scalar> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|i| &row[i].1)
}

#[derive(Clone, Debug)]
pub struct Subspace {
    ctx: Arc<CyclotomicContext>,
    ambient: usize,
    rows: Vec<SparseRow>,
    pivot_row: HashMap<usize, usize>,
}

impl Subspace {
    pub fn new(ctx: &Arc<CyclotomicContext>, ambient: usize) -> Self {
        Subspace {
            ctx: ctx.clone(),
            ambient,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    /// Columns that are not pivots, in increasing order. Their unit vectors
    /// project to a basis of the quotient `ambient / self`.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.is_pivot(*c)).collect()
    }

    /// Remainder of `row` modulo the subspace; supported on free columns only.
    pub fn reduce(&self, row: &[(usize, Scalar)]) -> SparseRow {
        let mut out: SparseRow = row.to_vec();
        for (col, coeff) in row {
            if let Some(&r) = self.pivot_row.get(col) {
                out = add_scaled(&out, &-coeff, &self.rows[r]);
            }
        }
        out
    }

    pub fn contains(&self, row: &[(usize, Scalar)]) -> bool {
        self.reduce(row).is_empty()
    }

    /// Adds `row` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, row: &[(usize, Scalar)]) -> bool {
        debug_assert!(row.iter().all(|(c, _)| *c < self.ambient));
        let reduced = self.reduce(row);
        let Some((pivot, lead)) = reduced.first().cloned() else {
            return false;
        };
        let scale = lead.inv().expect("nonzero pivot");
        let new_row: SparseRow = if scale.is_one() {
            reduced
        } else {
            reduced.into_iter().map(|(c, v)| (c, &v * &scale)).collect()
        };
        for existing in self.rows.iter_mut() {
            if let Some(v) = lookup(existing, pivot) {
                let neg = -v;
                *existing = add_scaled(existing, &neg, &new_row);
            }
        }
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(new_row);
        true
    }

    pub fn extend<'a, I: IntoIterator<Item = &'a SparseRow>>(&mut self, rows: I) {
        for r in rows {
            self.insert(r);
        }
    }

    pub fn context(&self) -> &Arc<CyclotomicContext> {
        &self.ctx
    }
}

/// Rank of a list of sparse rows.
pub fn rank(ctx: &Arc<CyclotomicContext>, ambient: usize, rows: &[SparseRow]) -> usize {
    let mut s = Subspace::new(ctx, ambient);
    s.extend(rows);
    s.dim()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Arc<CyclotomicContext> {
        CyclotomicContext::rational()
    }

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        let ctx = q();
        collect_row(entries.iter().map(|&(c, v)| (c, Scalar::from_integer(&ctx, v))))
    }

    #[test]
    fn rank_and_reduction() {
        let ctx = q();
        let mut s = Subspace::new(&ctx, 4);
        assert!(s.insert(&row(&[(0, 1), (1, -1)])));
        assert!(s.insert(&row(&[(1, 1), (2, -1)])));
        assert!(!s.insert(&row(&[(0, 1), (2, -1)])));
        assert_eq!(s.dim(), 2);
        assert_eq!(s.free_columns(), vec![2, 3]);
        // e_0 reduces to e_2 modulo the differences
        assert_eq!(s.reduce(&row(&[(0, 5)])), row(&[(2, 5)]));
        // fully reduced: row 0 no longer mentions column 1
        assert!(lookup(&s.rows()[0], 1).is_none());
    }

    #[test]
    fn pivots_are_normalised() {
        let ctx = q();
        let mut s = Subspace::new(&ctx, 3);
        s.insert(&row(&[(1, 3), (2, 6)]));
        assert!(s.rows()[0][0].1.is_one());
        assert!(s.contains(&row(&[(1, -1), (2, -2)])));
        assert!(!s.contains(&row(&[(2, 1)])));
    }

    #[test]
    fn collect_row_merges_and_drops_zeros() {
        let r = row(&[(3, 1), (1, 2), (3, -1)]);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].0, 1);
    }
}
