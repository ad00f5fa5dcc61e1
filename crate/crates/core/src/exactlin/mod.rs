//! Exact linear algebra over the rationals.

mod mat;
mod rat;

pub use mat::{kernel_from_rref, rref_in_place, Mat, Rref, Vector};
pub use rat::{ParseRatError, Rat};

/// A subspace of `Q^n` kept as a reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let mut s = Subspace::zero(ambient);
        for i in 0..ambient {
            s.rows.push(unit(ambient, i));
            s.pivots.push(i);
        }
        s
    }

    pub fn span<I: IntoIterator<Item = Vector>>(ambient: usize, vectors: I) -> Self {
        let mut rows: Vec<Vector> = vectors.into_iter().collect();
        for r in &rows {
            assert_eq!(r.len(), ambient, "vector of wrong length");
        }
        let pivots = rref_in_place(&mut rows, ambient);
        rows.truncate(pivots.len());
        Subspace { ambient, rows, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// The reduced echelon basis.
    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The residue of `v` after eliminating every pivot coordinate.
    pub fn residue(&self, v: &[Rat]) -> Vector {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.residue(v).iter().all(Rat::is_zero)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        let mut w = self.residue(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&w) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r);
        }
        s
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // Solve a·self_basis = b·other_basis.
        let n = self.ambient;
        let (k, l) = (self.dim(), other.dim());
        if k == 0 || l == 0 {
            return Subspace::zero(n);
        }
        let mut m = Mat::zeros(n, k + l);
        for (j, r) in self.rows.iter().enumerate() {
            for i in 0..n {
                m[(i, j)] = r[i].clone();
            }
        }
        for (j, r) in other.rows.iter().enumerate() {
            for i in 0..n {
                m[(i, k + j)] = -&r[i];
            }
        }
        let vecs = m.kernel_basis().into_iter().map(|c| {
            let mut v = vec![Rat::zero(); n];
            for (j, r) in self.rows.iter().enumerate() {
                if c[j].is_zero() {
                    continue;
                }
                for i in 0..n {
                    v[i] = &v[i] + &(&c[j] * &r[i]);
                }
            }
            v
        });
        Subspace::span(n, vecs)
    }

    /// Standard basis indices that complete the subspace to the whole space.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

/// Indices of a maximal prefix-greedy independent subfamily.
pub fn greedy_independent(ambient: usize, vectors: &[Vector]) -> Vec<usize> {
    let mut s = Subspace::zero(ambient);
    let mut keep = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if s.insert(v) {
            keep.push(i);
        }
    }
    keep
}
