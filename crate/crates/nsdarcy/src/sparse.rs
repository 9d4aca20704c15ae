//! Minimal sparse-matrix support for the assembly and pencil code.
//!
//! Only what the solver actually needs: COO accumulation during assembly,
//! CSR for matvecs, conversion to dense `ndarray` matrices for the
//! LAPACK-backed factorizations, and plain-text triplet export.

use ndarray::Array2;
use std::io::Write;

/// Coordinate-format accumulator. Duplicate entries are summed on
/// conversion to CSR, so element loops can scatter-add freely.
#[derive(Debug, Clone)]
pub struct Coo {
    pub n_rows: usize,
    pub n_cols: usize,
    entries: Vec<(usize, usize, f64)>,
}

impl Coo {
    pub fn new(n_rows: usize, n_cols: usize) -> Self {
        Coo {
            n_rows,
            n_cols,
            entries: Vec::new(),
        }
    }

    #[inline]
    pub fn push(&mut self, row: usize, col: usize, value: f64) {
        debug_assert!(row < self.n_rows && col < self.n_cols);
        if value != 0.0 {
            self.entries.push((row, col, value));
        }
    }

    pub fn to_csr(&self) -> Csr {
        let mut order: Vec<usize> = (0..self.entries.len()).collect();
        order.sort_unstable_by_key(|&i| (self.entries[i].0, self.entries[i].1));

        let mut indices = Vec::with_capacity(self.entries.len());
        let mut data: Vec<f64> = Vec::with_capacity(self.entries.len());
        let mut rows = Vec::with_capacity(self.entries.len());
        for &i in &order {
            let (r, c, v) = self.entries[i];
            if rows.last() == Some(&r) && indices.last() == Some(&c) {
                *data.last_mut().unwrap() += v;
            } else {
                rows.push(r);
                indices.push(c);
                data.push(v);
            }
        }
        let mut indptr = vec![0usize; self.n_rows + 1];
        for &r in &rows {
            indptr[r + 1] += 1;
        }
        for r in 0..self.n_rows {
            indptr[r + 1] += indptr[r];
        }
        Csr {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            indptr,
            indices,
            data,
        }
    }
}

/// Compressed sparse row matrix.
#[derive(Debug, Clone)]
pub struct Csr {
    pub n_rows: usize,
    pub n_cols: usize,
    pub indptr: Vec<usize>,
    pub indices: Vec<usize>,
    pub data: Vec<f64>,
}

impl Csr {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Csr {
            n_rows,
            n_cols,
            indptr: vec![0; n_rows + 1],
            indices: Vec::new(),
            data: Vec::new(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.len()
    }

    #[inline]
    pub fn row(&self, r: usize) -> (&[usize], &[f64]) {
        let lo = self.indptr[r];
        let hi = self.indptr[r + 1];
        (&self.indices[lo..hi], &self.data[lo..hi])
    }

    /// y = A x
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n_cols, "matvec dimension mismatch");
        let mut y = vec![0.0; self.n_rows];
        for r in 0..self.n_rows {
            let (cols, vals) = self.row(r);
            let mut acc = 0.0;
            for (c, v) in cols.iter().zip(vals) {
                acc += v * x[*c];
            }
            y[r] = acc;
        }
        y
    }

    /// y += s * A x
    pub fn matvec_add(&self, x: &[f64], s: f64, y: &mut [f64]) {
        assert_eq!(x.len(), self.n_cols);
        assert_eq!(y.len(), self.n_rows);
        for r in 0..self.n_rows {
            let (cols, vals) = self.row(r);
            let mut acc = 0.0;
            for (c, v) in cols.iter().zip(vals) {
                acc += v * x[*c];
            }
            y[r] += s * acc;
        }
    }

    /// Quadratic form x^T A y.
    pub fn bilinear(&self, x: &[f64], y: &[f64]) -> f64 {
        assert_eq!(x.len(), self.n_rows);
        let ay = self.matvec(y);
        x.iter().zip(&ay).map(|(a, b)| a * b).sum()
    }

    pub fn transpose(&self) -> Csr {
        let mut coo = Coo::new(self.n_cols, self.n_rows);
        for r in 0..self.n_rows {
            let (cols, vals) = self.row(r);
            for (c, v) in cols.iter().zip(vals) {
                coo.push(*c, r, *v);
            }
        }
        coo.to_csr()
    }

    pub fn scaled(&self, s: f64) -> Csr {
        let mut out = self.clone();
        for v in &mut out.data {
            *v *= s;
        }
        out
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        let (cols, vals) = self.row(r);
        match cols.binary_search(&c) {
            Ok(i) => vals[i],
            Err(_) => 0.0,
        }
    }

    /// max_ij |A_ij + B_ji|; used by the skew-symmetry checks.
    pub fn max_abs_sum_with_transpose(&self, other: &Csr) -> f64 {
        assert_eq!(self.n_rows, other.n_cols);
        assert_eq!(self.n_cols, other.n_rows);
        let ot = other.transpose();
        let mut m: f64 = 0.0;
        for r in 0..self.n_rows {
            let (cols, vals) = self.row(r);
            for (c, v) in cols.iter().zip(vals) {
                m = m.max((v + ot.get(r, *c)).abs());
            }
        }
        for r in 0..ot.n_rows {
            let (cols, vals) = ot.row(r);
            for (c, v) in cols.iter().zip(vals) {
                m = m.max((v + self.get(r, *c)).abs());
            }
        }
        m
    }

    /// max_ij |A_ij - A_ji|
    pub fn max_asymmetry(&self) -> f64 {
        let t = self.transpose();
        let mut m: f64 = 0.0;
        for r in 0..self.n_rows {
            let (cols, vals) = self.row(r);
            for (c, v) in cols.iter().zip(vals) {
                m = m.max((v - t.get(r, *c)).abs());
            }
        }
        m
    }

    pub fn to_dense(&self) -> Array2<f64> {
        let mut a = Array2::zeros((self.n_rows, self.n_cols));
        for r in 0..self.n_rows {
            let (cols, vals) = self.row(r);
            for (c, v) in cols.iter().zip(vals) {
                a[[r, *c]] = *v;
            }
        }
        a
    }

    /// Coordinate triplet export: one `row col value` line per entry.
    pub fn write_triplets(&self, w: &mut impl Write) -> std::io::Result<()> {
        writeln!(w, "{} {} {}", self.n_rows, self.n_cols, self.nnz())?;
        for r in 0..self.n_rows {
            let (cols, vals) = self.row(r);
            for (c, v) in cols.iter().zip(vals) {
                writeln!(w, "{} {} {:.16e}", r, c, v)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coo_sums_duplicates() {
        let mut coo = Coo::new(2, 2);
        coo.push(0, 0, 1.0);
        coo.push(0, 0, 2.0);
        coo.push(1, 0, -1.0);
        let csr = coo.to_csr();
        assert_eq!(csr.get(0, 0), 3.0);
        assert_eq!(csr.get(1, 0), -1.0);
        assert_eq!(csr.get(1, 1), 0.0);
        assert_eq!(csr.nnz(), 2);
    }

    #[test]
    fn matvec_matches_dense() {
        let mut coo = Coo::new(3, 2);
        coo.push(0, 0, 2.0);
        coo.push(0, 1, -1.0);
        coo.push(2, 1, 4.0);
        let a = coo.to_csr();
        let x = vec![1.0, 3.0];
        let y = a.matvec(&x);
        assert_eq!(y, vec![-1.0, 0.0, 12.0]);
        let d = a.to_dense();
        assert_eq!(d[[2, 1]], 4.0);
        assert_eq!(d[[1, 0]], 0.0);
    }

    #[test]
    fn transpose_roundtrip() {
        let mut coo = Coo::new(2, 3);
        coo.push(0, 2, 5.0);
        coo.push(1, 0, 1.5);
        let a = coo.to_csr();
        let att = a.transpose().transpose();
        assert_eq!(a.to_dense(), att.to_dense());
    }

    #[test]
    fn empty_rows_have_valid_pointers() {
        let mut coo = Coo::new(4, 4);
        coo.push(2, 1, 1.0);
        let a = coo.to_csr();
        assert_eq!(a.matvec(&[1.0, 1.0, 1.0, 1.0]), vec![0.0, 0.0, 1.0, 0.0]);
    }
}
