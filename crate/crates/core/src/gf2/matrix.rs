use std::fmt;

use super::BitVector;
use crate::error::{invalid, Result};

/// Dense matrix over GF(2) stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            cols: n,
            rows: (0..n).map(|i| BitVector::from_indices(n, [i])).collect(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(invalid(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        Ok(Self { cols, rows })
    }

    /// Parse rows written as strings of `0`/`1`.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                r.chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(invalid(format!("bad matrix entry {c:?}"))),
                    })
                    .collect::<Result<Vec<bool>>>()
                    .map(|b| BitVector::from_bits(&b))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(cols, rows)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones_iter() {
                out.rows[c].set(r, true);
            }
        }
        out
    }

    /// Columns picked in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self {
            cols: cols.len(),
            rows: self
                .rows
                .iter()
                .map(|r| {
                    BitVector::from_indices(cols.len(), (0..cols.len()).filter(|&j| r.get(cols[j])))
                })
                .collect(),
        }
    }

    /// Reduced row-echelon form and the pivot columns in row order.
    /// Zero rows are kept at the bottom.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref_with_column_order(&order)
    }

    /// RREF where pivots are searched in the columns listed in `order`
    /// (which need not cover every column). Pivot columns are reported as
    /// original column indices, in the order found.
    pub fn rref_with_column_order(&self, order: &[usize]) -> (BitMatrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for &c in order {
            if next == rows.len() {
                break;
            }
            let Some(found) = (next..rows.len()).find(|&r| rows[r].get(c)) else {
                continue;
            };
            rows.swap(next, found);
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next && row.get(c) {
                    *row ^= &pivot_row;
                }
            }
            pivots.push(c);
            next += 1;
        }
        (
            BitMatrix {
                cols: self.cols,
                rows,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{ x : M x^T = 0 }`, one vector per free column.
    pub fn null_space(&self) -> BitMatrix {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.cols)
            .filter(|&j| !is_pivot[j])
            .map(|free| {
                let mut v = BitVector::zeros(self.cols);
                v.set(free, true);
                for (i, &p) in pivots.iter().enumerate() {
                    if r.get(i, free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();
        BitMatrix {
            cols: self.cols,
            rows,
        }
    }

    /// Nonzero rows only.
    pub fn without_zero_rows(mut self) -> Self {
        self.rows.retain(|r| !r.is_zero());
        self
    }

    /// `v * M` for a message vector `v` of length `num_rows`.
    pub fn left_mul(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.rows.len());
        let mut acc = BitVector::zeros(self.cols);
        for i in v.ones_iter() {
            acc ^= &self.rows[i];
        }
        acc
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}
