use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::sub::{submodule_of, SubSpaces};
use super::{hom_space, is_isomorphic_indecomposable, HomSpace, Module, Morphism};
use crate::config;
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Rat, Subspace};

fn total_trace(f: &Morphism) -> Rat {
    f.comps.iter().fold(Rat::zero(), |acc, c| &acc + &c.trace())
}

/// The radical of `End(M)` as a subspace of coordinate space, computed as the
/// kernel of the trace form `(x, y) ↦ tr(xy)`.
pub fn end_radical(end: &HomSpace) -> Subspace {
    let k = end.dim();
    let mut g = Mat::zeros(k, k);
    for a in 0..k {
        for b in a..k {
            let t = total_trace(&end.basis[a].after(&end.basis[b]));
            g[(a, b)] = t.clone();
            g[(b, a)] = t;
        }
    }
    Subspace::span(k, g.kernel_basis())
}

pub fn is_indecomposable(m: &Module) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let end = hom_space(m, m)?;
    Ok(end.dim() - end_radical(&end).dim() == 1)
}

fn fitting(m: &Module, phi: &Morphism) -> Option<(SubSpaces, SubSpaces)> {
    let mut ker = Vec::new();
    let mut im = Vec::new();
    let (mut kd, mut id) = (0, 0);
    for (v, c) in phi.comps.iter().enumerate() {
        let d = m.dims[v];
        let p = c.pow(d as u32);
        let k = Subspace::span(d, p.kernel_basis());
        let i = Subspace::span(d, p.columns());
        kd += k.dim();
        id += i.dim();
        ker.push(k);
        im.push(i);
    }
    (kd > 0 && id > 0).then_some((ker, im))
}

/// Finds a decomposition `M = U ⊕ V` into nonzero submodules, or `None` when
/// `M` is indecomposable.
pub fn split_once(m: &Module) -> Result<Option<(SubSpaces, SubSpaces)>> {
    if m.is_zero() {
        return Ok(None);
    }
    let end = hom_space(m, m)?;
    let rad = end_radical(&end);
    if end.dim() - rad.dim() == 1 {
        return Ok(None);
    }
    let id = Morphism::identity(m);
    let mut candidates: Vec<Morphism> = Vec::new();
    for f in &end.basis {
        candidates.push(f.clone());
        let mut lambdas: Vec<Rat> = Vec::new();
        for c in &f.comps {
            for i in 0..c.rows() {
                let x = c[(i, i)].clone();
                if !x.is_zero() && !lambdas.contains(&x) {
                    lambdas.push(x);
                }
            }
        }
        for l in lambdas {
            candidates.push(f.add(&id.scale(&-&l)));
        }
    }
    for c in &candidates {
        if let Some(split) = fitting(m, c) {
            return Ok(Some(split));
        }
    }
    let cfg = config::get();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9e37_79b9);
    for _ in 0..cfg.trials {
        let coeffs: Vec<Rat> = (0..end.dim()).map(|_| Rat::from_int(rng.gen_range(-3..=3))).collect();
        let phi = end.combine(&coeffs, m, m);
        if let Some(split) = fitting(m, &phi) {
            return Ok(Some(split));
        }
    }
    Err(Error::DecompositionInconclusive(format!(
        "End has semisimple quotient of dimension {} but no idempotent was found for dim vector {:?}",
        end.dim() - rad.dim(),
        m.dims
    )))
}

/// Indecomposable summands of `M`, each realized as a submodule of `M`.
pub fn indecomposable_summands(m: &Module) -> Result<Vec<Module>> {
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        match split_once(&x)? {
            None => out.push(x),
            Some((a, b)) => {
                stack.push(submodule_of(&x, &b).0);
                stack.push(submodule_of(&x, &a).0);
            }
        }
    }
    Ok(out)
}

/// Krull–Schmidt decomposition: indecomposable summands up to isomorphism with
/// multiplicities, in order of first appearance.
pub fn decompose(m: &Module) -> Result<Vec<(Module, usize)>> {
    let mut groups: Vec<(Module, usize)> = Vec::new();
    for x in indecomposable_summands(m)? {
        let mut found = false;
        for g in groups.iter_mut() {
            if is_isomorphic_indecomposable(&g.0, &x)? {
                g.1 += 1;
                found = true;
                break;
            }
        }
        if !found {
            groups.push((x, 1));
        }
    }
    Ok(groups)
}
