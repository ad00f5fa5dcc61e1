//! Exceptional modules and sequences of `A_t`, enumerated both through Φ of
//! the tilting modules and by brute force over thin modules, and their
//! ψ-mutation.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::{Arc, Mutex};

use super::{phi, Dir};
use crate::bqa::{auslander_rank, Algebra};
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Rat};
use crate::homology::{ext1_space, ext_dim, extension_from_class, pdim};
use crate::modrep::{cokernel, hom_basis, hom_dim, is_indecomposable, kernel, Catalog, Module};
use crate::tautilt::{enumerate_tilting, Lattice};

/// A complete exceptional sequence in position order (`terms[0] = E_1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExcSeq {
    pub terms: Vec<usize>,
}

/// Over `A_t`: indecomposable, thin and `dim Hom(P(t), M) = 1`. Over other
/// algebras: `End(M) ≅ K` and `Ext^k(M, M) = 0` for `k ≥ 1`.
pub fn is_exceptional_module(m: &Module) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    match auslander_rank(m.algebra()) {
        Some(t) => Ok(m.is_thin() && m.dim_at(t - 1) == 1 && is_indecomposable(m)?),
        None => is_exceptional_by_ext(m),
    }
}

/// `End(M) ≅ K` and `Ext^k(M, M) = 0` for `1 ≤ k ≤ pdim M`.
pub fn is_exceptional_by_ext(m: &Module) -> Result<bool> {
    if m.is_zero() || hom_dim(m, m)? != 1 {
        return Ok(false);
    }
    let top = match pdim(m)? {
        Some(d) => d,
        None => m.algebra().vertex_count() + 1,
    };
    for k in 1..=top {
        if ext_dim(k, m, m)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Hom(E_j, E_i) = Ext^1(E_j, E_i) = Ext^2(E_j, E_i) = 0`: `E_j` may stand
/// to the right of `E_i`.
fn orthogonal(ej: &Module, ei: &Module) -> Result<bool> {
    Ok(hom_dim(ej, ei)? == 0 && ext_dim(1, ej, ei)? == 0 && ext_dim(2, ej, ei)? == 0)
}

/// Every term exceptional and `Hom(E_j, E_i) = 0 = Ext^ℓ(E_j, E_i)` for
/// `j < i`, `ℓ ∈ {1, 2}`. Terms in position order.
pub fn is_exceptional_sequence(seq: &[Module]) -> Result<bool> {
    for m in seq {
        if !is_exceptional_module(m)? {
            return Ok(false);
        }
    }
    for i in 0..seq.len() {
        for j in 0..i {
            if !orthogonal(&seq[j], &seq[i])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All thin exceptional modules of `A_t`, as catalog ids in order of
/// discovery. Arrow maps of a thin module can be scaled to 0 or 1.
pub fn enumerate_thin_exceptional(alg: &Arc<Algebra>) -> Result<Vec<usize>> {
    let t = auslander_rank(alg).ok_or_else(|| Error::NotApplicable("thin enumeration needs A_t".into()))?;
    let cat = Catalog::of(alg);
    let arrows = alg.arrows();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 1u32..(1 << t) {
        if mask & (1 << (t - 1)) == 0 {
            continue;
        }
        let dims: Vec<usize> = (0..t).map(|v| ((mask >> v) & 1) as usize).collect();
        let live: Vec<usize> =
            (0..arrows.len()).filter(|&a| dims[arrows[a].source] == 1 && dims[arrows[a].target] == 1).collect();
        for choice in 0u32..(1 << live.len()) {
            let maps: Vec<Mat> = arrows
                .iter()
                .enumerate()
                .map(|(a, ar)| {
                    let mut m = Mat::zeros(dims[ar.target], dims[ar.source]);
                    if let Some(k) = live.iter().position(|&b| b == a) {
                        if (choice >> k) & 1 == 1 {
                            m[(0, 0)] = Rat::one();
                        }
                    }
                    m
                })
                .collect();
            let Ok(m) = Module::new(alg.clone(), dims.clone(), maps) else { continue };
            if !is_exceptional_module(&m)? {
                continue;
            }
            let c = cat.intern(&m)?;
            if seen.insert(c) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

static EXC: Mutex<Option<HashMap<u64, Arc<Vec<ExcSeq>>>>> = Mutex::new(None);

/// The complete exceptional sequences of `A_t`: `Φ` of the quasi-hereditary
/// decompositions of the tilting modules, checked against an independent
/// enumeration of ordered tuples of thin exceptional modules. Memoized.
pub fn enumerate_complete_exc(alg: &Arc<Algebra>) -> Result<Arc<Vec<ExcSeq>>> {
    if let Some(v) = EXC.lock().unwrap().get_or_insert_with(HashMap::new).get(&alg.id()) {
        return Ok(v.clone());
    }
    let t = auslander_rank(alg).ok_or_else(|| Error::NotApplicable("complete exceptional sequences need A_t".into()))?;
    let lat = Lattice::of(alg)?;
    let mut via_tilting = Vec::new();
    for tm in enumerate_tilting(alg)? {
        via_tilting.push(ExcSeq { terms: phi(&lat, &tm.rigid)?.terms });
    }
    let brute = brute_force_sequences(alg, t)?;
    let a: HashSet<&ExcSeq> = via_tilting.iter().collect();
    let b: HashSet<&ExcSeq> = brute.iter().collect();
    let expected: usize = (1..=t).product();
    if a != b || a.len() != expected || via_tilting.len() != expected {
        return Err(Error::Internal(format!(
            "exceptional sequences: {} via tilting, {} by brute force, expected {expected}",
            a.len(),
            b.len()
        )));
    }
    let v = Arc::new(via_tilting);
    let mut g = EXC.lock().unwrap();
    Ok(g.as_mut().unwrap().entry(alg.id()).or_insert(v).clone())
}

fn brute_force_sequences(alg: &Arc<Algebra>, t: usize) -> Result<Vec<ExcSeq>> {
    let cat = Catalog::of(alg);
    let ids = enumerate_thin_exceptional(alg)?;
    let mods: Vec<Module> = ids.iter().map(|&c| cat.module(c)).collect();
    let n = ids.len();
    let mut ok = vec![vec![false; n]; n];
    for j in 0..n {
        for i in 0..n {
            ok[j][i] = i != j && orthogonal(&mods[j], &mods[i])?;
        }
    }
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn go(ok: &[Vec<bool>], t: usize, stack: &mut Vec<usize>, ids: &[usize], out: &mut Vec<ExcSeq>) {
        if stack.len() == t {
            out.push(ExcSeq { terms: stack.iter().map(|&k| ids[k]).collect() });
            return;
        }
        for i in 0..ok.len() {
            if stack.iter().all(|&j| ok[j][i]) {
                stack.push(i);
                go(ok, t, stack, ids, out);
                stack.pop();
            }
        }
    }
    go(&ok, t, &mut stack, &ids, &mut out);
    Ok(out)
}

/// The unique-up-to-scalar nonzero map `E_i → E_{i-1}`.
fn connecting_map(ei: &Module, eim1: &Module) -> Result<crate::modrep::Morphism> {
    let basis = hom_basis(ei, eim1)?;
    match <[_; 1]>::try_from(basis) {
        Ok([f]) => Ok(f),
        Err(b) => Err(Error::NotApplicable(format!("dim Hom(E_i, E_(i-1)) = {}", b.len()))),
    }
}

fn check_position(terms: &[usize], i: usize) -> Result<()> {
    if i < 2 || i > terms.len() {
        return Err(Error::NotApplicable(format!("position {i} outside 2..={}", terms.len())));
    }
    Ok(())
}

/// Left ψ-mutation at `i` by `0 → coker f → L → E_i → 0`; `None` unless the
/// map `f: E_i → E_{i-1}` is injective.
fn psi_left(alg: &Arc<Algebra>, terms: &[usize], i: usize) -> Result<Option<Vec<usize>>> {
    check_position(terms, i)?;
    let cat = Catalog::of(alg);
    let (ei, eim1) = (cat.module(terms[i - 1]), cat.module(terms[i - 2]));
    let f = connecting_map(&ei, &eim1)?;
    if !f.is_injective() {
        if f.is_surjective() {
            return Ok(None);
        }
        return Err(Error::Internal("map E_i → E_(i-1) is neither injective nor surjective".into()));
    }
    let (ck, _) = cokernel(&f, &eim1);
    let ext = ext1_space(&ei, &ck)?;
    if ext.dim != 1 {
        return Err(Error::Internal(format!("dim Ext^1(E_i, coker f) = {}", ext.dim)));
    }
    let l = extension_from_class(&ei, &ck, &ext.class_reps[0])?.middle;
    let mut out = terms.to_vec();
    out[i - 2] = terms[i - 1];
    out[i - 1] = cat.intern(&l)?;
    Ok(Some(out))
}

/// Right ψ-mutation at `i` by `0 → E_{i-1} → R → ker f → 0`; `None` unless
/// `f` is surjective.
fn psi_right_direct(alg: &Arc<Algebra>, terms: &[usize], i: usize) -> Result<Option<Vec<usize>>> {
    check_position(terms, i)?;
    let cat = Catalog::of(alg);
    let (ei, eim1) = (cat.module(terms[i - 1]), cat.module(terms[i - 2]));
    let f = connecting_map(&ei, &eim1)?;
    if !f.is_surjective() {
        return Ok(None);
    }
    let (k, _) = kernel(&f, &ei);
    let ext = ext1_space(&k, &eim1)?;
    if ext.dim != 1 {
        return Err(Error::Internal(format!("dim Ext^1(ker f, E_(i-1)) = {}", ext.dim)));
    }
    let r = extension_from_class(&k, &eim1, &ext.class_reps[0])?.middle;
    let mut out = terms.to_vec();
    out[i - 1] = terms[i - 2];
    out[i - 2] = cat.intern(&r)?;
    Ok(Some(out))
}

/// ψ-mutation of a complete exceptional sequence of `A_t` at position `i`.
/// Left mutation builds `L_{E_i}E_{i-1}` directly. Right mutation is found
/// as the unique preimage under left mutation and checked against the
/// direct construction of `R_{E_{i-1}}E_i`.
pub fn psi_mutate(alg: &Arc<Algebra>, seq: &ExcSeq, i: usize, dir: Dir) -> Result<Option<ExcSeq>> {
    let cat = Catalog::of(alg);
    let modules = |t: &[usize]| -> Vec<Module> { t.iter().map(|&c| cat.module(c)).collect() };
    match dir {
        Dir::Left => {
            let Some(out) = psi_left(alg, &seq.terms, i)? else { return Ok(None) };
            if !is_exceptional_sequence(&modules(&out))? {
                return Err(Error::Internal("left ψ-mutation is not exceptional".into()));
            }
            Ok(Some(ExcSeq { terms: out }))
        }
        Dir::Right => {
            let direct = psi_right_direct(alg, &seq.terms, i)?;
            let all = enumerate_complete_exc(alg)?;
            let mut pre = Vec::new();
            for s in all.iter() {
                if psi_left(alg, &s.terms, i)?.as_deref() == Some(&seq.terms[..]) {
                    pre.push(s.clone());
                }
            }
            if pre.len() > 1 {
                return Err(Error::Internal(format!("{} preimages under left ψ-mutation", pre.len())));
            }
            let scanned = pre.pop();
            if scanned.as_ref().map(|s| &s.terms) != direct.as_ref() {
                return Err(Error::Internal("right ψ-mutation: preimage scan and direct construction differ".into()));
            }
            Ok(scanned)
        }
    }
}
