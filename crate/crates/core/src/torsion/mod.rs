//! Trace functors, the torsion pair `(Gen T, T^⊥)`, minimal approximations
//! and the lattice of torsion classes.

mod lattice;

pub use lattice::{ext_projectives, smallest_torsion_class, ExtProjectives, TorsionClass};

use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::modrep::{
    check_same, direct_sum_with_maps, end_radical, hom_basis, hom_space, quotient_by, submodule_of, Module, Morphism,
    SubSpaces,
};

/// Per-vertex spaces of the sum of images of all maps `X → M`.
pub fn trace_spaces(x: &Module, m: &Module) -> Result<SubSpaces> {
    check_same(x, m)?;
    let mut spaces: SubSpaces = m.dims().iter().map(|&d| Subspace::zero(d)).collect();
    for f in hom_basis(x, m)? {
        for (v, c) in f.comps.iter().enumerate() {
            for col in c.columns() {
                spaces[v].insert(&col);
            }
        }
    }
    Ok(spaces)
}

/// The trace `t_X(M)` with its inclusion into `M`.
pub fn trace(x: &Module, m: &Module) -> Result<(Module, Morphism)> {
    Ok(submodule_of(m, &trace_spaces(x, m)?))
}

/// `M ∈ Gen X`.
pub fn in_gen(m: &Module, x: &Module) -> Result<bool> {
    let spaces = trace_spaces(x, m)?;
    Ok(spaces.iter().all(Subspace::is_full))
}

/// `M ∈ Gen(X_1 ⊕ ⋯ ⊕ X_k)` without forming the sum.
pub fn in_gen_of(m: &Module, xs: &[Module]) -> Result<bool> {
    let mut spaces: SubSpaces = m.dims().iter().map(|&d| Subspace::zero(d)).collect();
    for x in xs {
        for (s, t) in spaces.iter_mut().zip(trace_spaces(x, m)?) {
            *s = s.sum(&t);
        }
    }
    Ok(spaces.iter().all(Subspace::is_full))
}

/// The canonical sequence `0 → t_T(M) → M → f_T(M) → 0`.
#[derive(Clone, Debug)]
pub struct TfParts {
    pub torsion: Module,
    pub incl: Morphism,
    pub free: Module,
    pub proj: Morphism,
}

pub fn tf_decompose(t: &Module, m: &Module) -> Result<TfParts> {
    let spaces = trace_spaces(t, m)?;
    let (torsion, incl) = submodule_of(m, &spaces);
    let (free, proj) = quotient_by(m, &spaces);
    Ok(TfParts { torsion, incl, free, proj })
}

/// `f_T(M)`.
pub fn torsion_free_part(t: &Module, m: &Module) -> Result<Module> {
    Ok(quotient_by(m, &trace_spaces(t, m)?).0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApproxSide {
    Right,
    Left,
}

/// A minimal approximation. For the right side `map: object → M`, for the
/// left side `map: M → object`; `summands[c]` is the index in the `add`
/// list of the `c`-th copy in `object`.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub object: Module,
    pub map: Morphism,
    pub summands: Vec<usize>,
}

/// Minimal `add(X)`-approximation of `m`, where `add` lists pairwise
/// nonisomorphic indecomposables. The copies of `X_k` are chosen as
/// representatives of `Hom(X_k, M)` modulo maps factoring through radical
/// maps inside `add(X)` (dually on the left).
pub fn minimal_approximation(m: &Module, add: &[Module], side: ApproxSide) -> Result<Approximation> {
    if add.is_empty() {
        return Err(Error::NotApplicable("approximation by an empty class".into()));
    }
    for x in add {
        check_same(x, m)?;
    }
    let mut parts: Vec<(usize, Morphism)> = Vec::new();
    for (k, xk) in add.iter().enumerate() {
        let hom = match side {
            ApproxSide::Right => hom_space(xk, m)?,
            ApproxSide::Left => hom_space(m, xk)?,
        };
        if hom.dim() == 0 {
            continue;
        }
        let mut radical = Subspace::zero(hom.dim());
        for (l, xl) in add.iter().enumerate() {
            let rad: Vec<Morphism> = if l == k {
                let end = hom_space(xk, xk)?;
                end_radical(&end).basis().iter().map(|c| end.combine(c, xk, xk)).collect()
            } else {
                match side {
                    ApproxSide::Right => hom_basis(xk, xl)?,
                    ApproxSide::Left => hom_basis(xl, xk)?,
                }
            };
            if rad.is_empty() {
                continue;
            }
            let through = match side {
                ApproxSide::Right => hom_basis(xl, m)?,
                ApproxSide::Left => hom_basis(m, xl)?,
            };
            for r in &rad {
                for h in &through {
                    let f = match side {
                        ApproxSide::Right => h.after(r),
                        ApproxSide::Left => r.after(h),
                    };
                    radical.insert(&hom.coordinates(&f));
                }
            }
        }
        for (j, f) in hom.basis.iter().enumerate() {
            if radical.insert(&crate::exactlin::unit(hom.dim(), j)) {
                parts.push((k, f.clone()));
            }
        }
    }
    let copies: Vec<&Module> = parts.iter().map(|(k, _)| &add[*k]).collect();
    let summands: Vec<usize> = parts.iter().map(|(k, _)| *k).collect();
    let maps: Vec<&Morphism> = parts.iter().map(|(_, f)| f).collect();
    let object = if copies.is_empty() { Module::zero(m.algebra()) } else { direct_sum_with_maps(&copies)?.0 };
    let map = if copies.is_empty() {
        match side {
            ApproxSide::Right => Morphism::zero(&object, m),
            ApproxSide::Left => Morphism::zero(m, &object),
        }
    } else {
        match side {
            ApproxSide::Right => Morphism::from_sum(&maps),
            ApproxSide::Left => Morphism::into_sum(&maps),
        }
    };
    Ok(Approximation { object, map, summands })
}

/// Every map `X_k → M` (right) or `M → X_k` (left) factors through the
/// approximation. Exact rank check, used by tests.
pub fn is_approximation(m: &Module, add: &[Module], side: ApproxSide, a: &Approximation) -> Result<bool> {
    for x in add {
        let (hom, through) = match side {
            ApproxSide::Right => (hom_space(x, m)?, hom_basis(x, &a.object)?),
            ApproxSide::Left => (hom_space(m, x)?, hom_basis(&a.object, x)?),
        };
        let mut span = Subspace::zero(hom.dim());
        for g in &through {
            let f = match side {
                ApproxSide::Right => a.map.after(g),
                ApproxSide::Left => g.after(&a.map),
            };
            span.insert(&hom.coordinates(&f));
        }
        if span.dim() != hom.dim() {
            return Ok(false);
        }
    }
    Ok(true)
}
