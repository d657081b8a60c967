use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::rat::Rat;

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}

impl core::ops::Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn scalar(n: usize, s: &Rat) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    /// Panics if `data.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rat>) -> Mat {
        assert_eq!(data.len(), rows * cols, "matrix entry count");
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<Rat>]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned());
        }
        Mat { rows: r, cols: c, data }
    }

    /// Convenience for tests and fixtures.
    pub fn from_ints(rows: &[&[i64]]) -> Mat {
        let v: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
            .collect();
        Mat::from_rows(&v)
    }

    pub fn from_columns(rows: usize, cols: &[Vec<Rat>]) -> Mat {
        let mut m = Mat::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Mat::identity(self.rows)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut out = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let mut out = vec![Rat::zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = &self[(r, c)];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Rat) -> Mat {
        let data = self.data.iter().map(|a| a * s).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn pow(&self, e: usize) -> Mat {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut acc = Mat::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn commutes_with(&self, o: &Mat) -> bool {
        self.mul(o) == o.mul(self)
    }

    /// Block matrix `[self 0; 0 o]`.
    pub fn direct_sum(&self, o: &Mat) -> Mat {
        let mut m = Mat::zeros(self.rows + o.rows, self.cols + o.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
        }
        for r in 0..o.rows {
            for c in 0..o.cols {
                m[(self.rows + r, self.cols + c)] = o[(r, c)].clone();
            }
        }
        m
    }

    /// `[self; o]`.
    pub fn vstack(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.cols, "vstack shape");
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Mat { rows: self.rows + o.rows, cols: self.cols, data }
    }

    /// `[self o]`.
    pub fn hstack(&self, o: &Mat) -> Mat {
        assert_eq!(self.rows, o.rows, "hstack shape");
        let mut m = Mat::zeros(self.rows, self.cols + o.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..o.cols {
                m[(r, self.cols + c)] = o[(r, c)].clone();
            }
        }
        m
    }

    pub fn kron(&self, o: &Mat) -> Mat {
        let mut m = Mat::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = &o[(k, l)];
                        if !b.is_zero() {
                            m[(i * o.rows + k, j * o.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        m
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        rref(self)
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn kernel_basis(&self) -> Mat {
        kernel_basis(self)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let (r, piv) = rref(&self.hstack(&Mat::identity(n)));
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }
}

/// Gauss-Jordan elimination; the pivot of each step is the first row (from the
/// current band) with a nonzero entry in the leftmost remaining column.
pub fn rref(m: &Mat) -> (Mat, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut band = 0;
    let mut support = Vec::with_capacity(cols);
    for c in 0..cols {
        if band == rows {
            break;
        }
        let Some(pr) = (band..rows).find(|&r| !a[(r, c)].is_zero()) else {
            continue;
        };
        if pr != band {
            for k in c..cols {
                a.data.swap(pr * cols + k, band * cols + k);
            }
        }
        let inv = a[(band, c)].recip().expect("nonzero pivot");
        support.clear();
        for k in c..cols {
            if !a[(band, k)].is_zero() {
                let v = &a[(band, k)] * &inv;
                a[(band, k)] = v;
                support.push(k);
            }
        }
        for r in 0..rows {
            if r == band || a[(r, c)].is_zero() {
                continue;
            }
            let f = a[(r, c)].clone();
            for &k in &support {
                let v = &a[(band, k)] * &f;
                a[(r, k)] -= v;
            }
        }
        pivots.push(c);
        band += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Mat) -> usize {
    rref(m).1.len()
}

/// Null-space basis: one column per free variable in increasing order, with
/// that free coordinate equal to 1 and the other free coordinates 0.
pub fn kernel_basis(m: &Mat) -> Mat {
    let (r, piv) = rref(m);
    kernel_from_rref(&r, &piv)
}

pub(crate) fn kernel_from_rref(r: &Mat, piv: &[usize]) -> Mat {
    let cols = r.cols;
    let mut is_piv = vec![false; cols];
    for &p in piv {
        is_piv[p] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_piv[c]).collect();
    let mut k = Mat::zeros(cols, free.len());
    for (j, &f) in free.iter().enumerate() {
        k[(f, j)] = Rat::one();
        for (i, &p) in piv.iter().enumerate() {
            let v = &r[(i, f)];
            if !v.is_zero() {
                k[(p, j)] = -v;
            }
        }
    }
    k
}

/// Solves `m x = b`; free variables are set to 0, so the answer is the unique
/// solution supported on pivot columns. `None` when inconsistent.
pub fn solve(m: &Mat, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(m.rows, b.len(), "right-hand side length");
    let aug = m.hstack(&Mat::from_columns(m.rows, &[b.to_vec()]));
    let (r, piv) = rref(&aug);
    if piv.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); m.cols];
    for (i, &p) in piv.iter().enumerate() {
        x[p] = r[(i, m.cols)].clone();
    }
    Some(x)
}

pub mod vecops {
    use super::Rat;
    use alloc::vec::Vec;

    pub fn zero(n: usize) -> Vec<Rat> {
        alloc::vec![Rat::zero(); n]
    }

    pub fn unit(n: usize, i: usize) -> Vec<Rat> {
        let mut v = zero(n);
        v[i] = Rat::one();
        v
    }

    pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(a: &[Rat], s: &Rat) -> Vec<Rat> {
        a.iter().map(|x| x * s).collect()
    }

    pub fn sub_assign(a: &mut [Rat], b: &[Rat]) {
        for (x, y) in a.iter_mut().zip(b) {
            if !y.is_zero() {
                *x -= y;
            }
        }
    }

    pub fn add_assign(a: &mut [Rat], b: &[Rat]) {
        for (x, y) in a.iter_mut().zip(b) {
            if !y.is_zero() {
                *x += y;
            }
        }
    }

    pub fn axpy(a: &mut [Rat], s: &Rat, b: &[Rat]) {
        if s.is_zero() {
            return;
        }
        for (x, y) in a.iter_mut().zip(b) {
            if !y.is_zero() {
                *x += s * y;
            }
        }
    }

    pub fn is_zero(a: &[Rat]) -> bool {
        a.iter().all(Rat::is_zero)
    }
}
