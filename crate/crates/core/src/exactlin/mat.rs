//! Dense row-major matrices over [`Rat`] and the elimination routines built on
//! them.

use std::fmt;
use std::ops::{Index, IndexMut};

use super::rat::Rat;
use crate::error::{Error, Result};

/// Column vector.
pub type Vector = Vec<Rat>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Output of [`Mat::reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rref: Mat,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        Mat { rows, cols, data }
    }

    /// Builds a matrix from row vectors. An empty row list yields a `0 × cols` matrix.
    pub fn from_rows(rows: Vec<Vec<Rat>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Mat { rows: r, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: &[Vector]) -> Self {
        let mut m = Mat::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column of wrong length");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Mat::from_vec(rows, cols, entries.iter().map(|&x| Rat::from_int(x)).collect())
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

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let v = &out[(i, j)] + &(a * b);
                        out[(i, j)] = v;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vector {
        assert_eq!(self.cols, v.len(), "shape mismatch in product");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sum");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in difference");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        let data = self.data.iter().map(|a| a * c).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        (0..self.rows).fold(Rat::zero(), |acc, i| &acc + &self[(i, i)])
    }

    pub fn pow(&self, mut e: u32) -> Mat {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Mat::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.rows, rhs.rows);
        let mut out = Mat::zeros(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..rhs.cols {
                out[(i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Mat { rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    pub fn block_diag(blocks: &[&Mat]) -> Mat {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut out = Mat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        out
    }

    /// Selects the given columns, in order.
    pub fn select_cols(&self, cols: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out[(i, jj)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form. Pivoting takes the first nonzero entry in
    /// each column, so results are reproducible.
    pub fn reduce(&self) -> Rref {
        let mut rows: Vec<Vec<Rat>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let pivot_cols = rref_in_place(&mut rows, self.cols);
        let rank = pivot_cols.len();
        Rref { rref: Mat::from_rows(rows, self.cols), rank, pivot_cols }
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<Rat>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        rref_in_place(&mut rows, self.cols).len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Basis of `{ v : self · v = 0 }`, one vector per free column of the rref.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let r = self.reduce();
        kernel_from_rref(&r, self.cols)
    }

    /// Some `x` with `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {} but the matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = self.hstack(&Mat::from_cols(self.rows, &[b.to_vec()]));
        let r = aug.reduce();
        if r.pivot_cols.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (i, &p) in r.pivot_cols.iter().enumerate() {
            x[p] = r.rref[(i, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let r = self.hstack(&Mat::identity(n)).reduce();
        if r.pivot_cols.iter().take(n).copied().ne(0..n) {
            return None;
        }
        Some(r.rref.block(0, n, n, n))
    }
}

/// In-place reduced row echelon form on a list of rows. Returns pivot columns;
/// the first `rank` rows hold the nonzero part.
pub fn rref_in_place(rows: &mut [Vec<Rat>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let support: Vec<usize> = (c..cols).filter(|&j| !rows[r][j].is_zero()).collect();
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                let v = &row[j] - &(&f * &pivot_row[j]);
                row[j] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Kernel basis read off an rref: one vector per non-pivot column.
pub fn kernel_from_rref(r: &Rref, cols: usize) -> Vec<Vector> {
    let mut is_pivot = vec![false; cols];
    for &p in &r.pivot_cols {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&j| !is_pivot[j]) {
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (i, &p) in r.pivot_cols.iter().enumerate() {
            let x = &r.rref[(i, free)];
            if !x.is_zero() {
                v[p] = -x;
            }
        }
        basis.push(v);
    }
    basis
}

impl Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl serde::Serialize for Mat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[Rat]> = (0..self.rows).map(|i| self.row(i)).collect();
        rows.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: usize, cols: usize, e: &[i64]) -> Mat {
        Mat::from_ints(rows, cols, e)
    }

    #[test]
    fn reduce_identity_and_zero() {
        let r = Mat::identity(2).reduce();
        assert_eq!(r.rref, Mat::identity(2));
        assert_eq!((r.rank, r.pivot_cols.clone()), (2, vec![0, 1]));
        let z = Mat::zeros(2, 2).reduce();
        assert_eq!(z.rref, Mat::zeros(2, 2));
        assert_eq!(z.rank, 0);
        assert!(z.pivot_cols.is_empty());
    }

    #[test]
    fn reduce_rank_one() {
        let r = m(2, 2, &[1, 2, 2, 4]).reduce();
        assert_eq!(r.rref, m(2, 2, &[1, 2, 0, 0]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernels() {
        assert!(Mat::identity(3).kernel_basis().is_empty());
        assert_eq!(Mat::zeros(2, 3).kernel_basis().len(), 3);
        let k = m(2, 2, &[1, 2, 2, 4]).kernel_basis();
        assert_eq!(k, vec![vec![Rat::from_int(-2), Rat::one()]]);
    }

    #[test]
    fn solving() {
        let b = vec![Rat::from_int(3), Rat::new(1, 2)];
        assert_eq!(Mat::identity(2).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(Mat::zeros(2, 2).solve(&b).unwrap(), None);
        let a = m(2, 2, &[1, 2, 2, 4]);
        let x = a.solve(&[Rat::one(), Rat::from_int(2)]).unwrap().unwrap();
        assert_eq!(&x[0] + &(&Rat::from_int(2) * &x[1]), Rat::one());
        assert!(a.solve(&[Rat::one()]).is_err());
    }

    #[test]
    fn inverse_and_pow() {
        let a = m(2, 2, &[2, 1, 1, 1]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(2));
        assert!(m(2, 2, &[1, 2, 2, 4]).inverse().is_none());
        let n = m(2, 2, &[0, 1, 0, 0]);
        assert!(n.pow(2).is_zero());
        assert_eq!(a.pow(3), a.mul(&a).mul(&a));
    }

    fn small_mat() -> impl Strategy<Value = Mat> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |e| Mat::from_ints(r, c, &e))
        })
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent(a in small_mat()) {
            let r = a.reduce();
            prop_assert_eq!(r.rref.reduce().rref, r.rref.clone());
        }

        #[test]
        fn rank_nullity(a in small_mat()) {
            let k = a.kernel_basis();
            prop_assert_eq!(a.rank() + k.len(), a.cols());
            for v in &k {
                prop_assert!(a.mul_vec(v).iter().all(Rat::is_zero));
            }
        }

        #[test]
        fn solve_matches_augmented_rank(a in small_mat(), seed in proptest::collection::vec(-3i64..4, 5)) {
            let b: Vec<Rat> = seed.iter().take(a.rows()).map(|&x| Rat::from_int(x)).collect();
            prop_assume!(b.len() == a.rows());
            let consistent = a.hstack(&Mat::from_cols(a.rows(), std::slice::from_ref(&b))).rank() == a.rank();
            let x = a.solve(&b).unwrap();
            prop_assert_eq!(x.is_some(), consistent);
            if let Some(x) = x {
                prop_assert_eq!(a.mul_vec(&x), b);
            }
        }
    }
}
