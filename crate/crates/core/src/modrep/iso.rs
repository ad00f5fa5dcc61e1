use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_same, decompose, hom_dim, hom_space, Module};
use crate::config;
use crate::error::Result;
use crate::exactlin::Rat;

/// Isomorphism test for indecomposable modules with split local endomorphism
/// rings: `M ≅ N` exactly when some basis element of `Hom(M, N)` is invertible,
/// since the non-invertible maps would otherwise form a proper subspace.
pub fn is_isomorphic_indecomposable(m: &Module, n: &Module) -> Result<bool> {
    check_same(m, n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    Ok(hom_space(m, n)?.basis.iter().any(|f| f.is_iso()))
}

/// Exact isomorphism test: invariants, then invertibility of basis elements and
/// of seeded random combinations, then comparison of Krull–Schmidt
/// decompositions.
pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool> {
    check_same(m, n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m == n || m.is_zero() {
        return Ok(true);
    }
    let hs = hom_space(m, n)?;
    let d = hs.dim();
    if d == 0 || hom_dim(n, m)? != d || hom_dim(m, m)? != d || hom_dim(n, n)? != d {
        return Ok(false);
    }
    if hs.basis.iter().any(|f| f.is_iso()) {
        return Ok(true);
    }
    let cfg = config::get();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.trials {
        let coeffs: Vec<Rat> =
            (0..d).map(|_| Rat::from_int(rng.gen_range(-cfg.coeff_range..=cfg.coeff_range))).collect();
        if hs.combine(&coeffs, m, n).is_iso() {
            return Ok(true);
        }
    }
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    if dm.len() != dn.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.len()];
    for (x, k) in &dm {
        let mut matched = false;
        for (j, (y, l)) in dn.iter().enumerate() {
            if !used[j] && k == l && is_isomorphic_indecomposable(x, y)? {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(false);
        }
    }
    Ok(true)
}
