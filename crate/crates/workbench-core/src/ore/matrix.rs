//! Rectangular matrices over an [`OreDomain`].
//!
//! Matrices represent maps of free left modules acting on row vectors,
//! `v -> v * G`, so composition of maps is matrix multiplication in
//! diagrammatic order. Entry products are taken in the written order, which
//! is what makes everything below valid over skew polynomial rings.

use super::{OreDomain, OreElement};

#[derive(Clone, PartialEq, Eq)]
pub struct OreMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<OreElement>,
}

impl std::fmt::Debug for OreMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}x{}]", self.rows, self.cols)
    }
}

impl OreMatrix {
    pub fn new(domain: &OreDomain, rows: usize, cols: usize) -> OreMatrix {
        OreMatrix { rows, cols, data: vec![domain.zero(); rows * cols] }
    }

    pub fn from_rows(rows_data: Vec<Vec<OreElement>>) -> OreMatrix {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows * cols);
        for r in rows_data {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        OreMatrix { rows, cols, data }
    }

    pub fn from_int_rows(domain: &OreDomain, rows_data: &[Vec<i64>]) -> OreMatrix {
        OreMatrix::from_rows(
            rows_data
                .iter()
                .map(|r| r.iter().map(|&n| domain.from_int(n)).collect())
                .collect(),
        )
    }

    pub fn identity(domain: &OreDomain, n: usize) -> OreMatrix {
        let mut m = OreMatrix::new(domain, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = domain.one();
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &OreElement {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut OreElement {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: OreElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<OreElement> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn is_zero(&self, domain: &OreDomain) -> bool {
        self.data.iter().all(|e| domain.is_zero(e))
    }

    pub fn mul(&self, domain: &OreDomain, rhs: &OreMatrix) -> OreMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = OreMatrix::new(domain, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if domain.is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let term = domain.mul(a, rhs.at(k, j));
                    let cur = domain.add(out.at(i, j), &term);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn add(&self, domain: &OreDomain, rhs: &OreMatrix) -> OreMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| domain.add(a, b))
            .collect();
        OreMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self, domain: &OreDomain) -> OreMatrix {
        let data = self.data.iter().map(|a| domain.neg(a)).collect();
        OreMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, domain: &OreDomain, rhs: &OreMatrix) -> OreMatrix {
        self.add(domain, &rhs.neg(domain))
    }

    pub fn eq(&self, domain: &OreDomain, rhs: &OreMatrix) -> bool {
        self.rows == rhs.rows
            && self.cols == rhs.cols
            && self.data.iter().zip(&rhs.data).all(|(a, b)| domain.eq(a, b))
    }

    /// Entrywise application of the twist automorphism.
    pub fn twist(&self, domain: &OreDomain, power: i64) -> OreMatrix {
        let data = self.data.iter().map(|a| domain.twist_phi(a, power)).collect();
        OreMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Entrywise image under the canonical localisation map.
    pub fn localize(&self, domain: &OreDomain) -> OreMatrix {
        let data = self.data.iter().map(|a| domain.localization_map(a)).collect();
        OreMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Stack `self` on top of `other` (same column count).
    pub fn vstack(&self, other: &OreMatrix) -> OreMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        OreMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block diagonal sum.
    pub fn block_diag(&self, domain: &OreDomain, other: &OreMatrix) -> OreMatrix {
        let mut out = OreMatrix::new(domain, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.at(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.at(i, j).clone());
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &OreMatrix) -> OreMatrix {
        assert_eq!(self.rows, other.rows);
        let mut rows_data = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut r = self.row(i);
            r.extend(other.row(i));
            rows_data.push(r);
        }
        OreMatrix::from_rows(rows_data)
    }

    /// Keep the listed columns, in order.
    pub fn select_cols(&self, cols: &[usize]) -> OreMatrix {
        let mut rows_data = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            rows_data.push(cols.iter().map(|&j| self.at(i, j).clone()).collect());
        }
        if self.rows == 0 {
            return OreMatrix { rows: 0, cols: cols.len(), data: Vec::new() };
        }
        OreMatrix::from_rows(rows_data)
    }

    pub fn display(&self, domain: &OreDomain) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| domain.display(self.at(i, j))).collect();
            out.push_str(&format!("[{}]", row.join(", ")));
            if i + 1 < self.rows {
                out.push(' ');
            }
        }
        if self.rows == 0 {
            out.push_str("[]");
        }
        out
    }
}

/// Apply a row vector to a matrix: `v * G`.
pub fn apply_row(domain: &OreDomain, v: &[OreElement], g: &OreMatrix) -> Vec<OreElement> {
    assert_eq!(v.len(), g.rows);
    let mut out = vec![domain.zero(); g.cols];
    for (i, vi) in v.iter().enumerate() {
        if domain.is_zero(vi) {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            *o = domain.add(o, &domain.mul(vi, g.at(i, j)));
        }
    }
    out
}
