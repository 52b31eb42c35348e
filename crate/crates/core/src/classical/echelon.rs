//! Sparse row-echelon elimination over exact rationals.
//!
//! Rows are sparse vectors sorted by column index; the pivot of a row is its
//! smallest nonzero column (ties in insertion order are broken by the
//! lexicographic basis encoding chosen upstream). Pivot entries are
//! normalised to 1, so membership tests reduce against pivots directly.

use num_traits::Zero;

use crate::arith::Rational;

pub type SparseRow = Vec<(u64, Rational)>;

fn axpy(target: &mut SparseRow, factor: &Rational, source: &SparseRow) {
    // target -= factor * source, merging sorted runs
    let mut out = SparseRow::with_capacity(target.len() + source.len());
    let (mut a, mut b) = (0usize, 0usize);
    while a < target.len() || b < source.len() {
        match (target.get(a), source.get(b)) {
            (Some((ca, va)), Some((cb, vb))) => {
                if ca < cb {
                    out.push((*ca, va.clone()));
                    a += 1;
                } else if cb < ca {
                    out.push((*cb, -(factor * vb)));
                    b += 1;
                } else {
                    let v = va - &(factor * vb);
                    if !v.is_zero() {
                        out.push((*ca, v));
                    }
                    a += 1;
                    b += 1;
                }
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                a += 1;
            }
            (None, Some((cb, vb))) => {
                out.push((*cb, -(factor * vb)));
                b += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    *target = out;
}

#[derive(Debug, Clone, Default)]
pub struct Echelon {
    // rows sorted by pivot column; each row's pivot coefficient is 1
    rows: Vec<SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce a vector against the current rows.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        for existing in &self.rows {
            if row.is_empty() {
                break;
            }
            let pivot = existing[0].0;
            if let Ok(pos) = row.binary_search_by_key(&pivot, |(c, _)| *c) {
                let factor = row[pos].1.clone();
                axpy(&mut row, &factor, existing);
            }
        }
        row
    }

    pub fn reduces_to_zero(&self, row: &SparseRow) -> bool {
        self.reduce(row.clone()).is_empty()
    }

    /// Insert a vector; returns whether it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = self.reduce(row);
        if row.is_empty() {
            return false;
        }
        // normalise the pivot to 1
        let lead = row[0].1.clone();
        for (_, v) in row.iter_mut() {
            *v /= lead.clone();
        }
        let pivot = row[0].0;
        let pos = self.rows.partition_point(|r| r[0].0 < pivot);
        self.rows.insert(pos, row);
        true
    }
}
