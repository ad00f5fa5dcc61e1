use std::sync::Arc;

use super::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{Rat, Subspace, Vector};
use crate::homology::projective_sum;
use crate::modrep::{submodule_of, Module};

/// A two-sided ideal of an algebra, as a subspace in basis coordinates.
pub type IdealSpace = Subspace;

fn to_sparse(v: &[Rat]) -> Vec<(usize, Rat)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

fn to_dense(n: usize, v: &[(usize, Rat)]) -> Vector {
    let mut d = vec![Rat::zero(); n];
    for (i, x) in v {
        d[*i] = x.clone();
    }
    d
}

/// `I_i = A(1 − e_i)A`, spanned by products of paths meeting at a vertex other than `i`.
pub fn ideal_generator(alg: &Algebra, i: usize) -> Result<IdealSpace> {
    let n = alg.vertex_count();
    if i >= n {
        return Err(Error::VertexOutOfRange(i));
    }
    let dim = alg.dim();
    let mut s = Subspace::zero(dim);
    for j in (0..n).filter(|&j| j != i) {
        for x in 0..dim {
            if alg.basis()[x].target != j {
                continue;
            }
            for y in 0..dim {
                if alg.basis()[y].source == j {
                    s.insert(&to_dense(dim, alg.mul(x, y)));
                }
            }
        }
    }
    Ok(s)
}

/// The product `IJ = span{xy}`.
pub fn ideal_product(alg: &Algebra, a: &IdealSpace, b: &IdealSpace) -> IdealSpace {
    let dim = alg.dim();
    let sa: Vec<_> = a.basis().iter().map(|v| to_sparse(v)).collect();
    let sb: Vec<_> = b.basis().iter().map(|v| to_sparse(v)).collect();
    let mut s = Subspace::zero(dim);
    for x in &sa {
        for y in &sb {
            let p = alg.mul_elems(x, y);
            if !p.is_empty() {
                s.insert(&to_dense(dim, &p));
            }
        }
        if s.is_full() {
            break;
        }
    }
    s
}

/// The ideal `I_{w_1} ⋯ I_{w_k}` for a word of vertices in `0..t-1`.
pub fn ideal_for_word(alg: &Algebra, word: &[usize]) -> Result<IdealSpace> {
    let t = alg.vertex_count();
    let mut acc = Subspace::full(alg.dim());
    for &w in word {
        if w + 1 >= t {
            return Err(Error::VertexOutOfRange(w));
        }
        acc = ideal_product(alg, &acc, &ideal_generator(alg, w)?);
    }
    Ok(acc)
}

fn component_spaces(alg: &Arc<Algebra>, ideal: &IdealSpace, only: Option<usize>) -> (Module, Vec<Subspace>) {
    let n = alg.vertex_count();
    let verts: Vec<usize> = match only {
        Some(v) => vec![v],
        None => (0..n).collect(),
    };
    let ambient = projective_sum(alg, &verts).expect("vertices in range");
    let mut spaces: Vec<Subspace> = ambient.dims().iter().map(|&d| Subspace::zero(d)).collect();
    for x in ideal.basis() {
        for u in 0..n {
            let mut v = vec![Rat::zero(); ambient.dim_at(u)];
            let mut off = 0;
            let mut any = false;
            for &s in &verts {
                for (c, &b) in alg.paths(s, u).iter().enumerate() {
                    if !x[b].is_zero() {
                        v[off + c] = x[b].clone();
                        any = true;
                    }
                }
                off += alg.paths(s, u).len();
            }
            if any {
                spaces[u].insert(&v);
            }
        }
    }
    (ambient, spaces)
}

/// A two-sided ideal viewed as a right module, inside `A_A = ⊕_v P(v)`.
pub fn ideal_right_module(alg: &Arc<Algebra>, ideal: &IdealSpace) -> Module {
    let (ambient, spaces) = component_spaces(alg, ideal, None);
    submodule_of(&ambient, &spaces).0
}

/// `e_v I` as a submodule of `P(v)`.
pub fn ideal_component(alg: &Arc<Algebra>, ideal: &IdealSpace, v: usize) -> Module {
    let (ambient, spaces) = component_spaces(alg, ideal, Some(v));
    submodule_of(&ambient, &spaces).0
}

/// The right module `I_{w_1} ⋯ I_{w_k}`; the empty word gives `A`.
pub fn ideal_module(alg: &Arc<Algebra>, word: &[usize]) -> Result<Module> {
    Ok(ideal_right_module(alg, &ideal_for_word(alg, word)?))
}
