//! Dense exact linear algebra over GF(q).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Field, Fq};

/// Row-major dense matrix over one field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fq>,
    field: Field,
}

/// Result of row reduction.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Fq::ZERO; rows * cols],
            field: field.clone(),
        }
    }

    pub fn identity(field: &Field, size: usize) -> Self {
        let mut m = Self::zeros(field, size, size);
        for i in 0..size {
            m.set(i, i, Fq::ONE);
        }
        m
    }

    pub fn from_rows(field: &Field, cols: usize, rows: Vec<Vec<Fq>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in &rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
            field: field.clone(),
        })
    }

    /// Convenience constructor from integer entries embedded via Z -> GF(p).
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_int(v)).collect())
            .collect();
        Self::from_rows(field, cols, rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn get(&self, r: usize, c: usize) -> Fq {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Fq) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Fq] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Fq>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.field != rhs.field {
            return Err(Error::MixedContexts);
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = f.add(out.get(i, j), f.mul(a, rhs.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `M v`.
    pub fn apply(&self, v: &[Fq]) -> Result<Vec<Fq>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Fq::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::MixedContexts);
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "stacking {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
            field: self.field.clone(),
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// `row[dst] -= factor * row[src]`
    fn sub_row_multiple(&mut self, dst: usize, src: usize, factor: Fq) {
        let f = self.field.clone();
        for c in 0..self.cols {
            let s = self.get(src, c);
            if !s.is_zero() {
                let v = f.sub(self.get(dst, c), f.mul(factor, s));
                self.set(dst, c, v);
            }
        }
    }

    /// Gauss-Jordan elimination with first-nonzero pivoting.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for cc in c..m.cols {
                let v = f.mul(m.get(r, cc), inv);
                m.set(r, cc, v);
            }
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i != r && !factor.is_zero() {
                    m.sub_row_multiple(i, r, factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// RREF with zero rows removed: a canonical basis of the row space.
    pub fn row_basis(&self) -> Matrix {
        let red = self.rref();
        red.matrix.take_rows(red.rank)
    }

    fn take_rows(&self, count: usize) -> Matrix {
        Matrix {
            rows: count,
            cols: self.cols,
            data: self.data[..count * self.cols].to_vec(),
            field: self.field.clone(),
        }
    }

    /// Basis of `{v : M v^T = 0}`, one row per free column, with an identity
    /// block on the free columns.
    pub fn kernel_basis(&self) -> Matrix {
        let red = self.rref();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !red.pivots.contains(c)).collect();
        let mut k = Matrix::zeros(f, free.len(), self.cols);
        for (row, &fc) in free.iter().enumerate() {
            k.set(row, fc, Fq::ONE);
            for (i, &pc) in red.pivots.iter().enumerate() {
                k.set(row, pc, f.neg(red.matrix.get(i, fc)));
            }
        }
        k
    }

    /// The submatrix made of the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Result<Matrix> {
        for (i, &c) in cols.iter().enumerate() {
            if c >= self.cols {
                return Err(Error::IndexOutOfRange {
                    index: c,
                    cols: self.cols,
                });
            }
            if cols[..i].contains(&c) {
                return Err(Error::DuplicateIndex(c));
            }
        }
        let mut s = Matrix::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                s.set(r, j, self.get(r, c));
            }
        }
        Ok(s)
    }

    /// Rank of the column submatrix selected by `cols`.
    pub fn columns_rank(&self, cols: &[usize]) -> Result<usize> {
        // Reducing the transpose keeps the work proportional to |cols|.
        Ok(self.select_columns(cols)?.transpose().rank())
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, Fq::ONE);
        }
        let red = aug.rref();
        if red.pivots.iter().take(n).copied().ne(0..n) {
            return None;
        }
        let mut inv = Matrix::zeros(&self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.matrix.get(r, n + c));
            }
        }
        Some(inv)
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, v: &[Fq]) -> Result<bool> {
        let single = Matrix::from_rows(&self.field, self.cols, vec![v.to_vec()])?;
        Ok(self.vstack(&single)?.rank() == self.rank())
    }

    pub fn same_row_space(&self, other: &Matrix) -> Result<bool> {
        let r = self.rank();
        Ok(r == other.rank() && self.vstack(other)?.rank() == r)
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            field: self.field.spec(),
            entries: (0..self.rows)
                .map(|r| self.row(r).iter().map(|&v| self.field.coeffs(v)).collect())
                .collect(),
        }
    }

    pub fn from_json(doc: &MatrixJson) -> Result<Matrix> {
        let field = Field::from_spec(&doc.field)?;
        if doc.entries.len() != doc.rows {
            return Err(Error::LengthMismatch {
                expected: doc.rows,
                got: doc.entries.len(),
            });
        }
        let rows = doc
            .entries
            .iter()
            .map(|r| r.iter().map(|c| field.from_coeffs(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(&field, doc.cols, rows)
    }
}

/// `{"rows":r,"cols":c,"field":spec,"entries":[[..],..]}` with each entry a
/// little-endian residue list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub field: String,
    pub entries: Vec<Vec<Vec<u64>>>,
}

impl fmt::Display for Matrix {
    /// Plain-text grid, columns right-aligned.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|&v| self.field.format(v)).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf13() -> Field {
        Field::prime(13).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f = gf13();
        let m = Matrix::from_ints(&f, &[&[1, 1, 1], &[2, 2, 2]]).unwrap();
        assert_eq!(m.rank(), 1);
        let red = Matrix::identity(&f, 4).rref();
        assert_eq!((red.rank, red.pivots.clone()), (4, vec![0, 1, 2, 3]));
        assert_eq!(red.matrix, Matrix::identity(&f, 4));
    }

    #[test]
    fn rref_is_reduced() {
        let f = gf13();
        let m = Matrix::from_ints(&f, &[&[0, 2, 4, 1], &[0, 1, 2, 5], &[3, 0, 1, 1]]).unwrap();
        let red = m.rref();
        for (i, &pc) in red.pivots.iter().enumerate() {
            for r in 0..red.matrix.rows() {
                let want = if r == i { Fq::ONE } else { Fq::ZERO };
                assert_eq!(red.matrix.get(r, pc), want);
            }
        }
        assert!(m.same_row_space(&red.matrix).unwrap());
    }

    #[test]
    fn kernel_examples() {
        let f = gf13();
        let k = Matrix::from_ints(&f, &[&[1, 1, 1]]).unwrap().kernel_basis();
        assert_eq!(k.rows(), 2);
        for r in 0..2 {
            let s = k.row(r).iter().fold(Fq::ZERO, |a, &b| f.add(a, b));
            assert!(s.is_zero());
        }
        assert_eq!(Matrix::identity(&f, 3).kernel_basis().rows(), 0);
    }

    #[test]
    fn columns_rank_examples() {
        let f = gf13();
        assert_eq!(Matrix::identity(&f, 3).columns_rank(&[0, 1]).unwrap(), 2);
        let m = Matrix::from_ints(&f, &[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(m.columns_rank(&[0, 1]).unwrap(), 1);
        assert!(matches!(
            m.columns_rank(&[0, 2]),
            Err(Error::IndexOutOfRange { index: 2, .. })
        ));
        assert!(matches!(m.columns_rank(&[1, 1]), Err(Error::DuplicateIndex(1))));
    }

    #[test]
    fn inverse_and_singular() {
        let f = gf13();
        let m = Matrix::from_ints(&f, &[&[2, 1], &[1, 1]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&f, 2));
        assert!(Matrix::from_ints(&f, &[&[1, 2], &[2, 4]]).unwrap().inverse().is_none());
    }

    #[test]
    fn json_and_text() {
        let f = Field::from_spec("p=5;mod=[2,0,1]").unwrap();
        let x = f.parse("3x+4").unwrap();
        let m = Matrix::from_rows(&f, 2, vec![vec![Fq::ONE, x]]).unwrap();
        let doc = m.to_json();
        assert_eq!(doc.entries, vec![vec![vec![1, 0], vec![4, 3]]]);
        let text = serde_json::to_string(&doc).unwrap();
        let back: MatrixJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Matrix::from_json(&back).unwrap(), m);
        assert_eq!(m.to_string(), "   1 3x+4\n");
    }

    #[test]
    fn ragged_rows_rejected() {
        let f = gf13();
        assert!(Matrix::from_rows(&f, 2, vec![vec![Fq::ONE]]).is_err());
    }
}
