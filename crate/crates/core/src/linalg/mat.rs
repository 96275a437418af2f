//! Dense row-major matrices over any [`Scalar`] field. Sizes here are tiny
//! (n ≤ 16), so everything is straightforward Gaussian elimination with
//! pivot selection driven by `Scalar::pivot_quality`.

use crate::scalar::Scalar;

#[derive(Clone, PartialEq)]
pub struct Mat<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> std::fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:?} ", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_columns(cols: &[Vec<T>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |col| col.len());
        Self::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).conj())
    }

    pub fn map<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| f(x)).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j).add(rhs.at(i, j)))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j).sub(rhs.at(i, j)))
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.mul(s))
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc.add(&self.at(i, k).mul(rhs.at(k, j)));
            }
            acc
        })
    }

    pub fn matvec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc.add(self.at(i, i));
        }
        acc
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.matmul(self);
        }
        acc
    }

    /// Kronecker product, block layout (a_{jk} B).
    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            let (bi, ri) = (i / rhs.rows, i % rhs.rows);
            let (bj, rj) = (j / rhs.cols, j % rhs.cols);
            self.at(bi, bj).mul(rhs.at(ri, rj))
        })
    }

    pub fn max_magnitude(&self) -> f64 {
        self.data.iter().map(|x| x.magnitude()).fold(0.0, f64::max)
    }

    fn is_effectively_zero(x: &T, threshold: f64) -> bool {
        if threshold > 0.0 {
            x.magnitude() <= threshold
        } else {
            x.is_zero()
        }
    }

    /// Reduced row echelon form. `zero_tol` is an absolute threshold for
    /// float scalars (pass 0.0 for exact fields). Returns the reduced matrix
    /// and the pivot columns.
    pub fn rref(&self, zero_tol: f64) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // best pivot in column c at or below row r
            let mut best: Option<(usize, f64)> = None;
            for i in r..m.rows {
                if !Self::is_effectively_zero(m.at(i, c), zero_tol) {
                    let q = m.at(i, c).pivot_quality();
                    if best.map_or(true, |(_, bq)| q > bq) {
                        best = Some((i, q));
                    }
                }
            }
            let Some((p, _)) = best else { continue };
            m.swap_rows(r, p);
            let inv = T::one().div(m.at(r, c));
            for j in c..m.cols {
                *m.at_mut(r, j) = m.at(r, j).mul(&inv);
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in c..m.cols {
                        let v = m.at(i, j).sub(&f.mul(m.at(r, j)));
                        *m.at_mut(i, j) = v;
                    }
                    *m.at_mut(i, c) = T::zero();
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self, zero_tol: f64) -> usize {
        self.rref(zero_tol).1.len()
    }

    /// Basis of the right null space, one column per free variable, with the
    /// free variable set to 1 (echelon convention).
    pub fn null_space(&self, zero_tol: f64) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref(zero_tol);
        let mut basis = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = Some(row);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![T::zero(); self.cols];
            vec[free] = T::one();
            for (c, &p) in pivot_set.iter().enumerate() {
                if let Some(row) = p {
                    vec[c] = r.at(row, free).neg();
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// Gauss-Jordan inverse; `None` if singular (to `zero_tol` for floats).
    pub fn inverse(&self, zero_tol: f64) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.at(i, j).clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        let (red, pivots) = aug.rref(zero_tol);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| red.at(i, j + n).clone()))
    }

    /// Determinant by fraction-preserving elimination.
    pub fn det(&self, zero_tol: f64) -> T {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = T::one();
        for c in 0..n {
            let mut best: Option<(usize, f64)> = None;
            for i in c..n {
                if !Self::is_effectively_zero(m.at(i, c), zero_tol) {
                    let q = m.at(i, c).pivot_quality();
                    if best.map_or(true, |(_, bq)| q > bq) {
                        best = Some((i, q));
                    }
                }
            }
            let Some((p, _)) = best else {
                return T::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = det.neg();
            }
            det = det.mul(m.at(c, c));
            let inv = T::one().div(m.at(c, c));
            for i in (c + 1)..n {
                if !m.at(i, c).is_zero() {
                    let f = m.at(i, c).mul(&inv);
                    for j in c..n {
                        let v = m.at(i, j).sub(&f.mul(m.at(c, j)));
                        *m.at_mut(i, j) = v;
                    }
                }
            }
        }
        det
    }

    /// Leading principal minors det(H[..k][..k]) for k = 1..=n.
    pub fn leading_principal_minors(&self, zero_tol: f64) -> Vec<T> {
        assert!(self.is_square());
        (1..=self.rows)
            .map(|k| Self::from_fn(k, k, |i, j| self.at(i, j).clone()).det(zero_tol))
            .collect()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_i, Rat};

    fn m2(a: i64, b: i64, c: i64, d: i64) -> Mat<Rat> {
        Mat::from_rows(vec![vec![rat_i(a), rat_i(b)], vec![rat_i(c), rat_i(d)]])
    }

    #[test]
    fn inverse_and_det() {
        let a = m2(1, 1, -1, 1);
        let inv = a.inverse(0.0).unwrap();
        assert_eq!(
            inv,
            Mat::from_rows(vec![
                vec![rat(1, 2), rat(-1, 2)],
                vec![rat(1, 2), rat(1, 2)]
            ])
        );
        assert_eq!(a.det(0.0), rat_i(2));
        assert!(m2(1, 2, 2, 4).inverse(0.0).is_none());
    }

    #[test]
    fn null_space_echelon_convention() {
        // A - I for A = [[1,1],[0,2]] has kernel spanned by (1,0)
        let n = m2(0, 1, 0, 0);
        let basis = n.null_space(0.0);
        assert_eq!(basis, vec![vec![rat_i(1), rat_i(0)]]);
        // A - 2I kernel spanned by (1,1)
        let n2 = m2(-1, 1, 0, 0);
        assert_eq!(n2.null_space(0.0), vec![vec![rat_i(1), rat_i(1)]]);
    }

    #[test]
    fn kron_block_layout() {
        // [[1,2]] ⊗ I2 = [[1,0,2,0],[0,1,0,2]]
        let a = Mat::from_rows(vec![vec![rat_i(1), rat_i(2)]]);
        let i2: Mat<Rat> = Mat::identity(2);
        let k = a.kron(&i2);
        let expect = Mat::from_rows(vec![
            vec![rat_i(1), rat_i(0), rat_i(2), rat_i(0)],
            vec![rat_i(0), rat_i(1), rat_i(0), rat_i(2)],
        ]);
        assert_eq!(k, expect);
        // dimension rule (2x3)⊗(4x5) → 8x15
        let p: Mat<Rat> = Mat::zeros(2, 3).kron(&Mat::zeros(4, 5));
        assert_eq!((p.nrows(), p.ncols()), (8, 15));
    }
}
