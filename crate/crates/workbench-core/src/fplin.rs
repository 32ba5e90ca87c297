//! Dense linear algebra over prime fields.
//!
//! Matrices are row-major with entries reduced mod `p`. Vectors are columns
//! unless a function says otherwise; `solve` solves `M x = b` and
//! `column_kernel` returns a basis of `{x : M x = 0}`.

#[derive(Clone, PartialEq, Eq)]
pub struct FpMat {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl std::fmt::Debug for FpMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FpMat {}x{} mod {}", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            let row: Vec<u64> = (0..self.cols).map(|j| self.at(i, j)).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime, a != 0
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

impl FpMat {
    pub fn zero(p: u64, rows: usize, cols: usize) -> FpMat {
        FpMat { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> FpMat {
        let mut m = FpMat::zero(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> FpMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = FpMat::zero(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: u64) {
        let cur = self.at(i, j);
        self.set(i, j, (cur + v % self.p) % self.p);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, rhs: &FpMat) -> FpMat {
        assert_eq!(self.cols, rhs.rows);
        let p = self.p;
        let mut out = FpMat::zero(p, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = (out.at(i, j) + a * rhs.at(k, j)) % p;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &FpMat) -> FpMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, (self.at(i, j) + rhs.at(i, j)) % self.p);
            }
        }
        out
    }

    pub fn sub(&self, rhs: &FpMat) -> FpMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, (self.at(i, j) + self.p - rhs.at(i, j)) % self.p);
            }
        }
        out
    }

    pub fn neg(&self) -> FpMat {
        FpMat::zero(self.p, self.rows, self.cols).sub(self)
    }

    pub fn scale(&self, c: u64) -> FpMat {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = *v * (c % self.p) % self.p;
        }
        out
    }

    pub fn transpose(&self) -> FpMat {
        let mut out = FpMat::zero(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j));
            }
        }
        out
    }

    pub fn hstack(&self, rhs: &FpMat) -> FpMat {
        assert_eq!(self.rows, rhs.rows);
        let mut out = FpMat::zero(self.p, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.at(i, j));
            }
            for j in 0..rhs.cols {
                out.set(i, self.cols + j, rhs.at(i, j));
            }
        }
        out
    }

    pub fn vstack(&self, rhs: &FpMat) -> FpMat {
        assert_eq!(self.cols, rhs.cols);
        let mut out = FpMat::zero(self.p, self.rows + rhs.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.at(i, j));
            }
        }
        for i in 0..rhs.rows {
            for j in 0..self.cols {
                out.set(self.rows + i, j, rhs.at(i, j));
            }
        }
        out
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.at(i, j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<u64> {
        (0..self.cols).map(|j| self.at(i, j)).collect()
    }

    pub fn from_cols(p: u64, rows: usize, cols_data: &[Vec<u64>]) -> FpMat {
        let mut m = FpMat::zero(p, rows, cols_data.len());
        for (j, c) in cols_data.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Row echelon form in place; returns pivot column indices.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r >= self.rows {
                break;
            }
            let mut pivot = None;
            for i in r..self.rows {
                if self.at(i, c) != 0 {
                    pivot = Some(i);
                    break;
                }
            }
            let Some(pi) = pivot else { continue };
            if pi != r {
                for j in 0..self.cols {
                    let (a, b) = (self.at(r, j), self.at(pi, j));
                    self.set(r, j, b);
                    self.set(pi, j, a);
                }
            }
            let inv = inv_mod(self.at(r, c), p);
            for j in 0..self.cols {
                let v = self.at(r, j) * inv % p;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.at(i, c);
                if f == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let v = (self.at(i, j) + p - f * self.at(r, j) % p) % p;
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce().len()
    }

    /// Basis of `{x : M x = 0}` as columns of the returned matrix.
    pub fn column_kernel(&self) -> FpMat {
        let p = self.p;
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut x = vec![0u64; self.cols];
            x[fc] = 1;
            for (ri, &pc) in pivots.iter().enumerate() {
                // row ri: x_pc + sum over free part = 0
                x[pc] = (p - m.at(ri, fc)) % p;
            }
            basis.push(x);
        }
        FpMat::from_cols(p, self.cols, &basis)
    }

    /// One solution of `M x = b`, if any.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let p = self.p;
        let bm = FpMat::from_cols(p, self.rows, &[b.to_vec()]);
        let mut aug = self.hstack(&bm);
        let pivots = aug.row_reduce();
        // inconsistent if a pivot lands in the last column
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![0u64; self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(ri, self.cols);
        }
        Some(x)
    }

    /// Does the column span of `self` contain the vector?
    pub fn col_span_contains(&self, v: &[u64]) -> bool {
        self.solve(v).is_some()
    }

    /// A matrix whose columns are a basis of the column span.
    pub fn column_image(&self) -> FpMat {
        let mut t = self.transpose();
        let _ = t.row_reduce();
        let mut cols = Vec::new();
        for i in 0..t.rows {
            let row = t.row(i);
            if row.iter().any(|&v| v != 0) {
                cols.push(row);
            }
        }
        FpMat::from_cols(self.p, self.rows, &cols)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<FpMat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&FpMat::identity(self.p, n));
        let pivots = aug.row_reduce();
        if pivots.len() < n || pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut inv = FpMat::zero(self.p, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.at(i, n + j));
            }
        }
        Some(inv)
    }

    /// Tensor (Kronecker) product.
    pub fn kron(&self, rhs: &FpMat) -> FpMat {
        let mut out = FpMat::zero(self.p, self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out.set(i * rhs.rows + k, j * rhs.cols + l, a * rhs.at(k, l));
                    }
                }
            }
        }
        out
    }
}

/// Intersection of two column spans, as a matrix of basis columns.
pub fn span_intersection(a: &FpMat, b: &FpMat) -> FpMat {
    assert_eq!(a.rows, b.rows);
    // solve a x = b y: kernel of [a | -b]
    let joined = a.hstack(&b.neg());
    let k = joined.column_kernel();
    let mut cols = Vec::new();
    for j in 0..k.cols {
        let x: Vec<u64> = (0..a.cols).map(|i| k.at(i, j)).collect();
        let mut v = vec![0u64; a.rows];
        for (ci, &xc) in x.iter().enumerate() {
            if xc == 0 {
                continue;
            }
            for r in 0..a.rows {
                v[r] = (v[r] + xc * a.at(r, ci)) % a.p;
            }
        }
        cols.push(v);
    }
    FpMat::from_cols(a.p, a.rows, &cols).column_image()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_and_kernel() {
        let m = FpMat::from_rows(5, &[vec![1, 2, 0], vec![0, 1, 1]]);
        let x = m.solve(&[3, 4]).unwrap();
        // check M x = b
        let mx = m.mul(&FpMat::from_cols(5, 3, &[x]));
        assert_eq!(mx.col(0), vec![3, 4]);
        let k = m.column_kernel();
        assert_eq!(k.cols, 1);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = FpMat::from_rows(7, &[vec![1, 2], vec![3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), FpMat::identity(7, 2));
        assert_eq!(inv.mul(&m), FpMat::identity(7, 2));
    }

    #[test]
    fn rank_and_image() {
        let m = FpMat::from_rows(2, &[vec![1, 1, 0], vec![1, 1, 0], vec![0, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let im = m.column_image();
        assert_eq!(im.cols, 2);
    }

    #[test]
    fn intersection_of_spans() {
        let a = FpMat::from_cols(3, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = FpMat::from_cols(3, 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let i = span_intersection(&a, &b);
        assert_eq!(i.cols, 1);
        assert_eq!(i.col(0)[1] != 0, true);
        assert_eq!(i.col(0)[0], 0);
        assert_eq!(i.col(0)[2], 0);
    }
}
