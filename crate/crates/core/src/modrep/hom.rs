use super::{check_same, Module, Morphism};
use crate::error::Result;
use crate::exactlin::{kernel_from_rref, rref_in_place, Mat, Rat, Rref, Vector};

/// A basis of `Hom(M, N)` together with a coordinate map.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub basis: Vec<Morphism>,
    /// Flattened unknowns that are free in the intertwining system; the
    /// coordinates of a morphism are its entries at these positions.
    free: Vec<usize>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a morphism known to lie in the space.
    pub fn coordinates(&self, f: &Morphism) -> Vector {
        let flat = f.flatten();
        self.free.iter().map(|&i| flat[i].clone()).collect()
    }

    pub fn combine(&self, coeffs: &[Rat], m: &Module, n: &Module) -> Morphism {
        let mut acc = Morphism::zero(m, n);
        for (c, f) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&f.scale(c));
            }
        }
        acc
    }
}

/// Basis of the space of intertwiners `M → N`.
pub fn hom_space(m: &Module, n: &Module) -> Result<HomSpace> {
    check_same(m, n)?;
    let alg = m.algebra();
    let nv = alg.vertex_count();
    let mut off = vec![0usize; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + m.dims[v] * n.dims[v];
    }
    let unknowns = off[nv];
    if unknowns == 0 {
        return Ok(HomSpace { basis: Vec::new(), free: Vec::new() });
    }
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (ai, a) in alg.arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let (mi, ni, mj, nj) = (m.dims[i], n.dims[i], m.dims[j], n.dims[j]);
        if mi == 0 || nj == 0 {
            continue;
        }
        let ma = &m.maps[ai];
        let na = &n.maps[ai];
        for r in 0..nj {
            for c in 0..mi {
                let mut row = vec![Rat::zero(); unknowns];
                let mut any = false;
                for k in 0..ni {
                    let x = &na[(r, k)];
                    if !x.is_zero() {
                        let idx = off[i] + k * mi + c;
                        row[idx] = &row[idx] + x;
                        any = true;
                    }
                }
                for k in 0..mj {
                    let x = &ma[(k, c)];
                    if !x.is_zero() {
                        let idx = off[j] + r * mj + k;
                        row[idx] = &row[idx] - x;
                        any = true;
                    }
                }
                if any {
                    rows.push(row);
                }
            }
        }
    }
    let pivots = rref_in_place(&mut rows, unknowns);
    rows.truncate(pivots.len());
    let rank = pivots.len();
    let rref = Rref { rref: Mat::from_rows(rows, unknowns), rank, pivot_cols: pivots.clone() };
    let kernel = kernel_from_rref(&rref, unknowns);
    let mut is_pivot = vec![false; unknowns];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..unknowns).filter(|&i| !is_pivot[i]).collect();
    let basis = kernel.iter().map(|v| Morphism::from_flat(m, n, v)).collect();
    Ok(HomSpace { basis, free })
}

pub fn hom_basis(m: &Module, n: &Module) -> Result<Vec<Morphism>> {
    Ok(hom_space(m, n)?.basis)
}

pub fn hom_dim(m: &Module, n: &Module) -> Result<usize> {
    Ok(hom_space(m, n)?.dim())
}

/// `Hom(M, N) = 0`, with a support shortcut.
pub fn hom_is_zero(m: &Module, n: &Module) -> Result<bool> {
    check_same(m, n)?;
    if m.dims.iter().zip(&n.dims).all(|(a, b)| a * b == 0) {
        return Ok(true);
    }
    Ok(hom_dim(m, n)? == 0)
}
