//! Matrix representations over a prime field GF(p).

use std::collections::BTreeMap;

use super::ElementId;
use crate::error::{Error, Result};

/// Default prime for generated representations; comfortably inside 64-bit
/// multiplication.
pub const DEFAULT_PRIME: u64 = 1_000_003;

/// One column per element, entries reduced modulo a prime `p`. A set of
/// elements is independent exactly when the corresponding columns are
/// linearly independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRepresentation {
    p: u64,
    /// Row-major entries; `rows[i][j]` belongs to column `j`.
    rows: Vec<Vec<u64>>,
    cols: Vec<ElementId>,
}

impl LinearRepresentation {
    pub fn new(p: u64, rows: Vec<Vec<u64>>, cols: Vec<ElementId>) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidInstance(format!("{p} is not a prime modulus")));
        }
        for row in &rows {
            if row.len() != cols.len() {
                return Err(Error::InvalidInstance(
                    "matrix row length differs from the column count".into(),
                ));
            }
        }
        let mut seen = BTreeMap::new();
        for (i, &c) in cols.iter().enumerate() {
            if seen.insert(c, i).is_some() {
                return Err(Error::InvalidInstance(format!("duplicate column id {c}")));
            }
        }
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x % p).collect())
            .collect();
        Ok(Self { p, rows, cols })
    }

    /// Identity-like representation of the uniform matroid U(rank, n) is not
    /// expressible in general; this helper just builds standalone identity
    /// matrices for tests and fixtures.
    pub fn identity(p: u64, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect();
        let cols = (0..n as u64).map(ElementId).collect();
        Self { p, rows, cols }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn columns(&self) -> &[ElementId] {
        &self.cols
    }

    fn col_index(&self, e: ElementId) -> Result<usize> {
        self.cols
            .iter()
            .position(|&c| c == e)
            .ok_or(Error::UnknownElement(e))
    }

    /// Rank of the submatrix spanned by the given columns.
    pub fn rank_of(&self, elements: &[ElementId]) -> Result<usize> {
        let idx: Vec<usize> = elements
            .iter()
            .map(|&e| self.col_index(e))
            .collect::<Result<_>>()?;
        // column vectors of the selected elements
        let mut cols: Vec<Vec<u64>> = idx
            .iter()
            .map(|&j| self.rows.iter().map(|r| r[j]).collect())
            .collect();
        let m = self.rows.len();
        let mut rank = 0;
        for row in 0..m {
            let Some(pivot) = (rank..cols.len()).find(|&c| cols[c][row] != 0) else {
                continue;
            };
            cols.swap(rank, pivot);
            let inv = inv_mod(cols[rank][row], self.p);
            for c in 0..cols.len() {
                if c != rank && cols[c][row] != 0 {
                    let factor = mul_mod(cols[c][row], inv, self.p);
                    for r in row..m {
                        let sub = mul_mod(factor, cols[rank][r], self.p);
                        cols[c][r] = (cols[c][r] + self.p - sub) % self.p;
                    }
                }
            }
            rank += 1;
            if rank == cols.len() {
                break;
            }
        }
        Ok(rank)
    }

    pub fn is_independent(&self, elements: &[ElementId]) -> Result<bool> {
        Ok(self.rank_of(elements)? == elements.len())
    }

    /// Drop the columns of `remove`.
    pub fn delete(&self, remove: &[ElementId]) -> Result<Self> {
        for &e in remove {
            self.col_index(e)?;
        }
        let keep: Vec<usize> = (0..self.cols.len())
            .filter(|&j| !remove.contains(&self.cols[j]))
            .collect();
        Ok(Self {
            p: self.p,
            rows: self
                .rows
                .iter()
                .map(|r| keep.iter().map(|&j| r[j]).collect())
                .collect(),
            cols: keep.iter().map(|&j| self.cols[j]).collect(),
        })
    }

    /// Contract an independent set: pivot on its columns by Gaussian
    /// elimination, then drop the pivot rows and the contracted columns.
    pub fn contract(&self, contracted: &[ElementId]) -> Result<Self> {
        let mut rows = self.rows.clone();
        let m = rows.len();
        let mut pivot_rows = Vec::new();
        for &e in contracted {
            let j = self.col_index(e)?;
            let Some(r) = (0..m).find(|&r| !pivot_rows.contains(&r) && rows[r][j] != 0) else {
                return Err(Error::DependentContraction);
            };
            let inv = inv_mod(rows[r][j], self.p);
            for x in rows[r].iter_mut() {
                *x = mul_mod(*x, inv, self.p);
            }
            for r2 in 0..m {
                if r2 != r && rows[r2][j] != 0 {
                    let factor = rows[r2][j];
                    for c in 0..rows[r2].len() {
                        let sub = mul_mod(factor, rows[r][c], self.p);
                        rows[r2][c] = (rows[r2][c] + self.p - sub) % self.p;
                    }
                }
            }
            pivot_rows.push(r);
        }
        let keep_cols: Vec<usize> = (0..self.cols.len())
            .filter(|&j| !contracted.contains(&self.cols[j]))
            .collect();
        Ok(Self {
            p: self.p,
            rows: (0..m)
                .filter(|r| !pivot_rows.contains(r))
                .map(|r| keep_cols.iter().map(|&j| rows[r][j]).collect())
                .collect(),
            cols: keep_cols.iter().map(|&j| self.cols[j]).collect(),
        })
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut out = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            out = mul_mod(out, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_columns_are_independent() {
        let m = LinearRepresentation::identity(7, 3);
        let all: Vec<ElementId> = (0..3).map(ElementId).collect();
        assert!(m.is_independent(&all).unwrap());
        assert_eq!(m.rank_of(&all).unwrap(), 3);
    }

    #[test]
    fn dependent_columns_detected() {
        // third column is the sum of the first two (mod 5)
        let m = LinearRepresentation::new(
            5,
            vec![vec![1, 0, 1], vec![0, 1, 1]],
            vec![ElementId(0), ElementId(1), ElementId(2)],
        )
        .unwrap();
        assert!(!m
            .is_independent(&[ElementId(0), ElementId(1), ElementId(2)])
            .unwrap());
        assert!(m.is_independent(&[ElementId(0), ElementId(2)]).unwrap());
    }

    #[test]
    fn delete_drops_column() {
        let m = LinearRepresentation::identity(7, 3);
        let d = m.delete(&[ElementId(2)]).unwrap();
        assert_eq!(d.columns(), &[ElementId(0), ElementId(1)]);
        assert_eq!(d.rows().len(), 3);
    }

    #[test]
    fn contract_shrinks_rows_and_columns() {
        let m = LinearRepresentation::identity(7, 3);
        let c = m.contract(&[ElementId(0)]).unwrap();
        assert_eq!(c.columns(), &[ElementId(1), ElementId(2)]);
        assert_eq!(c.rows().len(), 2);
        assert!(c.is_independent(&[ElementId(1), ElementId(2)]).unwrap());
    }

    #[test]
    fn contract_of_dependent_column_fails() {
        let m = LinearRepresentation::new(
            5,
            vec![vec![0, 1], vec![0, 0]],
            vec![ElementId(0), ElementId(1)],
        )
        .unwrap();
        assert_eq!(m.contract(&[ElementId(0)]), Err(Error::DependentContraction));
    }

    #[test]
    fn inverse_mod() {
        for a in 1..7 {
            assert_eq!(mul_mod(a, inv_mod(a, 7), 7), 1);
        }
    }
}
