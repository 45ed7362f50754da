//! Dense matrices over GF(256): row reduction, rank, linear solving, and
//! Vandermonde generation.
//!
//! Everything here is exact and deterministic. Row reduction scans columns
//! left to right and picks the first nonzero pivot in each column, so the
//! same input always produces the same echelon form.

use crate::error::{Error, Result};
use crate::gf256::Gf256;

/// A row-major dense matrix over GF(256).
#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Gf256>,
}

impl FieldMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Gf256::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Gf256::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Gf256>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::SizeMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Vandermonde matrix: entry (i, j) = points[i]^j.
    ///
    /// For pairwise-distinct points, any square submatrix formed from the
    /// first k columns and any k rows is nonsingular, which is what makes
    /// these usable as encoding matrices.
    pub fn vandermonde(rows: usize, cols: usize, points: &[Gf256]) -> Result<Self> {
        if points.len() != rows {
            return Err(Error::SizeMismatch(format!(
                "expected {rows} evaluation points, got {}",
                points.len()
            )));
        }
        for (a, pa) in points.iter().enumerate() {
            for pb in &points[a + 1..] {
                if pa == pb {
                    return Err(Error::DuplicatePoints);
                }
            }
        }
        if cols > 255 {
            return Err(Error::InvalidParams(
                "vandermonde width exceeds field order - 1".into(),
            ));
        }
        let mut m = Self::zero(rows, cols);
        for (i, &p) in points.iter().enumerate() {
            let mut v = Gf256::ONE;
            for j in 0..cols {
                m[(i, j)] = v;
                v *= p;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Gf256] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Stacks matrices vertically; all must share a column count.
    pub fn stack<'a, I: IntoIterator<Item = &'a FieldMatrix>>(parts: I) -> Result<Self> {
        let mut rows = 0usize;
        let mut cols: Option<usize> = None;
        let mut entries = Vec::new();
        for p in parts {
            match cols {
                None => cols = Some(p.cols),
                Some(c) if c != p.cols => {
                    return Err(Error::SizeMismatch(format!(
                        "stack: {c} columns vs {}",
                        p.cols
                    )))
                }
                _ => {}
            }
            rows += p.rows;
            entries.extend_from_slice(&p.entries);
        }
        Ok(Self {
            rows,
            cols: cols.unwrap_or(0),
            entries,
        })
    }

    /// Keeps the listed rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut m = Self::zero(idx.len(), self.cols);
        for (out, &i) in idx.iter().enumerate() {
            let dst = out * self.cols;
            m.entries[dst..dst + self.cols].copy_from_slice(self.row(i));
        }
        m
    }

    pub fn mul(&self, rhs: &FieldMatrix) -> Result<FieldMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::SizeMismatch(format!(
                "mul: {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = FieldMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let src = k * rhs.cols;
                let dst = i * rhs.cols;
                for j in 0..rhs.cols {
                    out.entries[dst + j] += a * rhs.entries[src + j];
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Gf256]) -> Result<Vec<Gf256>> {
        if v.len() != self.cols {
            return Err(Error::SizeMismatch(format!(
                "mul_vec: {} columns vs vector of {}",
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![Gf256::ZERO; self.rows];
        for i in 0..self.rows {
            let mut acc = Gf256::ZERO;
            for (j, &x) in v.iter().enumerate() {
                acc += self[(i, j)] * x;
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Rank via in-place row reduction. The empty matrix has rank 0.
    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.row_reduce().len()
    }

    /// Reduces `self` to row echelon form in place.
    ///
    /// Returns the pivot column of each pivot row; pivot rows end up on top
    /// in column order and are normalized to a leading 1 with zeros above
    /// and below (reduced echelon form).
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let found = (pivot_row..self.rows).find(|&r| !self[(r, col)].is_zero());
            let Some(r) = found else { continue };
            self.swap_rows(pivot_row, r);
            let inv = self[(pivot_row, col)].inv().expect("pivot is nonzero");
            self.scale_row(pivot_row, inv);
            for other in 0..self.rows {
                if other != pivot_row && !self[(other, col)].is_zero() {
                    let factor = self[(other, col)];
                    self.add_scaled_row(pivot_row, other, factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    /// Solves `self * x = rhs` for a matrix of right-hand sides.
    ///
    /// Returns some solution (free variables set to zero); it is the unique
    /// one when `self` has full column rank. Fails with `NoSolution` when
    /// the system is inconsistent.
    pub fn solve(&self, rhs: &FieldMatrix) -> Result<FieldMatrix> {
        if rhs.rows != self.rows {
            return Err(Error::SizeMismatch(format!(
                "solve: {} equations vs {} right-hand rows",
                self.rows, rhs.rows
            )));
        }
        // Row-reduce the augmented matrix [self | rhs].
        let mut aug = FieldMatrix::zero(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            aug.entries[i * aug.cols..i * aug.cols + self.cols].copy_from_slice(self.row(i));
            aug.entries[i * aug.cols + self.cols..(i + 1) * aug.cols].copy_from_slice(rhs.row(i));
        }
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == aug.rows {
                break;
            }
            let Some(r) = (pivot_row..aug.rows).find(|&r| !aug[(r, col)].is_zero()) else {
                continue;
            };
            aug.swap_rows(pivot_row, r);
            let inv = aug[(pivot_row, col)].inv().expect("pivot is nonzero");
            aug.scale_row(pivot_row, inv);
            for other in 0..aug.rows {
                if other != pivot_row && !aug[(other, col)].is_zero() {
                    let factor = aug[(other, col)];
                    aug.add_scaled_row(pivot_row, other, factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        // Any leftover nonzero row in the rhs block means inconsistency.
        for r in pivot_row..aug.rows {
            if aug.row(r)[self.cols..].iter().any(|e| !e.is_zero()) {
                return Err(Error::NoSolution);
            }
        }
        let mut x = FieldMatrix::zero(self.cols, rhs.cols);
        for (row, &col) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(col, j)] = aug[(row, self.cols + j)];
            }
        }
        Ok(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (a, b) = (a.min(b), a.max(b));
        let (top, bottom) = self.entries.split_at_mut(b * self.cols);
        top[a * self.cols..(a + 1) * self.cols].swap_with_slice(&mut bottom[..self.cols]);
    }

    fn scale_row(&mut self, r: usize, factor: Gf256) {
        for e in &mut self.entries[r * self.cols..(r + 1) * self.cols] {
            *e *= factor;
        }
    }

    /// row[dst] += factor * row[src]
    fn add_scaled_row(&mut self, src: usize, dst: usize, factor: Gf256) {
        let cols = self.cols;
        let (src_off, dst_off) = (src * cols, dst * cols);
        for j in 0..cols {
            let v = self.entries[src_off + j] * factor;
            self.entries[dst_off + j] += v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for FieldMatrix {
    type Output = Gf256;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Gf256 {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FieldMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Gf256 {
        &mut self.entries[r * self.cols + c]
    }
}

impl std::fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FieldMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Row echelon basis with a membership test, for checking which coordinates
/// a set of observations determines.
pub struct RowSpace {
    reduced: FieldMatrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(m: &FieldMatrix) -> Self {
        let mut reduced = m.clone();
        let pivots = reduced.row_reduce();
        Self { reduced, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// True iff `v` is a linear combination of the rows.
    pub fn contains(&self, v: &[Gf256]) -> bool {
        assert_eq!(v.len(), self.reduced.cols());
        let mut work = v.to_vec();
        for (row, &col) in self.pivots.iter().enumerate() {
            let factor = work[col];
            if factor.is_zero() {
                continue;
            }
            for (slot, &r) in work.iter_mut().zip(self.reduced.row(row)) {
                *slot += factor * r;
            }
        }
        work.iter().all(|e| e.is_zero())
    }
}
