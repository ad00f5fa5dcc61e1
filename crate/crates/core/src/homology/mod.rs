//! Projective, injective and simple modules; minimal projective
//! presentations and resolutions; Ext; the Nakayama functor and the
//! Auslander–Reiten translate.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::bqa::{Algebra, SVec};
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Rat, Subspace, Vector};
use crate::modrep::{
    check_same, cokernel, direct_sum_with_maps, hom_space, kernel, submodule_of, top_generators, HomSpace, Module, Morphism, SubSpaces,
};

/// `P(v) = e_v A`. The component at `w` has the paths `v → w` as basis.
pub fn projective(alg: &Arc<Algebra>, v: usize) -> Result<Module> {
    if v >= alg.vertex_count() {
        return Err(Error::VertexOutOfRange(v));
    }
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|w| alg.paths(v, w).len()).collect();
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Mat::zeros(dims[a.target], dims[a.source]);
            for (c, &b) in alg.paths(v, a.source).iter().enumerate() {
                for (b2, x) in alg.right_mul(b, ai) {
                    m[(alg.position(*b2), c)] = x.clone();
                }
            }
            m
        })
        .collect();
    Module::new(alg.clone(), dims, maps)
}

/// `I(v) = D(A e_v)`. The component at `u` is dual to the paths `u → v`.
pub fn injective(alg: &Arc<Algebra>, v: usize) -> Result<Module> {
    if v >= alg.vertex_count() {
        return Err(Error::VertexOutOfRange(v));
    }
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|u| alg.paths(u, v).len()).collect();
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Mat::zeros(dims[a.target], dims[a.source]);
            let ab = alg.arrow_element(ai);
            for (r, &q) in alg.paths(a.target, v).iter().enumerate() {
                for (p, x) in alg.mul(ab, q) {
                    m[(r, alg.position(*p))] = x.clone();
                }
            }
            m
        })
        .collect();
    Module::new(alg.clone(), dims, maps)
}

pub fn simple(alg: &Arc<Algebra>, v: usize) -> Result<Module> {
    if v >= alg.vertex_count() {
        return Err(Error::VertexOutOfRange(v));
    }
    let mut dims = vec![0; alg.vertex_count()];
    dims[v] = 1;
    let maps = alg.arrows().iter().map(|a| Mat::zeros(dims[a.target], dims[a.source])).collect();
    Module::new(alg.clone(), dims, maps)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Projective,
    Injective,
    Simple,
}

pub fn structural_module(alg: &Arc<Algebra>, kind: Kind, v: usize) -> Result<Module> {
    match kind {
        Kind::Projective => projective(alg, v),
        Kind::Injective => injective(alg, v),
        Kind::Simple => simple(alg, v),
    }
}

/// `⊕_k P(verts[k])`.
pub fn projective_sum(alg: &Arc<Algebra>, verts: &[usize]) -> Result<Module> {
    if verts.is_empty() {
        return Ok(Module::zero(alg));
    }
    let parts: Vec<Module> = verts.iter().map(|&v| projective(alg, v)).collect::<Result<_>>()?;
    let refs: Vec<&Module> = parts.iter().collect();
    Module::direct_sum(&refs)
}

pub fn injective_sum(alg: &Arc<Algebra>, verts: &[usize]) -> Result<Module> {
    if verts.is_empty() {
        return Ok(Module::zero(alg));
    }
    let parts: Vec<Module> = verts.iter().map(|&v| injective(alg, v)).collect::<Result<_>>()?;
    let refs: Vec<&Module> = parts.iter().collect();
    Module::direct_sum(&refs)
}

/// Offsets of the blocks `P(verts[k])_u` inside `(⊕_k P(verts[k]))_u`.
fn block_offsets(alg: &Algebra, verts: &[usize], u: usize) -> Vec<usize> {
    let mut off = Vec::with_capacity(verts.len() + 1);
    let mut acc = 0;
    for &v in verts {
        off.push(acc);
        acc += alg.paths(v, u).len();
    }
    off.push(acc);
    off
}

/// The map `⊕_m P(src[m]) → ⊕_k P(tgt[k])` sending `e_{src[m]}` to
/// `Σ_k entries[m][k]`, where `entries[m][k] ∈ e_{tgt[k]} A e_{src[m]}`.
pub fn projective_map(alg: &Arc<Algebra>, src: &[usize], tgt: &[usize], entries: &[Vec<SVec>]) -> Morphism {
    let n = alg.vertex_count();
    let comps = (0..n)
        .map(|u| {
            let so = block_offsets(alg, src, u);
            let to = block_offsets(alg, tgt, u);
            let mut m = Mat::zeros(to[tgt.len()], so[src.len()]);
            for (mi, &w) in src.iter().enumerate() {
                for (c, &b) in alg.paths(w, u).iter().enumerate() {
                    let col = so[mi] + c;
                    for (k, x) in entries[mi].iter().enumerate() {
                        if x.is_empty() {
                            continue;
                        }
                        let prod = alg.mul_elems(x, &vec![(b, Rat::one())]);
                        for (p, y) in prod {
                            m[(to[k] + alg.position(p), col)] = y;
                        }
                    }
                }
            }
            m
        })
        .collect();
    Morphism { comps }
}

/// The morphism `⊕_k P(verts[k]) → N` sending `e_{verts[k]}` to `images[k] ∈ N_{verts[k]}`.
pub fn map_from_projectives(alg: &Arc<Algebra>, verts: &[usize], images: &[Vector], n: &Module) -> Morphism {
    let comps = (0..alg.vertex_count())
        .map(|u| {
            let so = block_offsets(alg, verts, u);
            let mut m = Mat::zeros(n.dim_at(u), so[verts.len()]);
            for (k, &v) in verts.iter().enumerate() {
                for (c, &b) in alg.paths(v, u).iter().enumerate() {
                    let col = n.act(b).mul_vec(&images[k]);
                    for (r, x) in col.into_iter().enumerate() {
                        m[(r, so[k] + c)] = x;
                    }
                }
            }
            m
        })
        .collect();
    Morphism { comps }
}

/// Reads a vector of `(⊕_k P(verts[k]))_u` as algebra elements, one per block.
fn vector_as_elements(alg: &Algebra, verts: &[usize], u: usize, x: &[Rat]) -> Vec<SVec> {
    let off = block_offsets(alg, verts, u);
    verts
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            alg.paths(v, u)
                .iter()
                .enumerate()
                .filter(|(c, _)| !x[off[k] + c].is_zero())
                .map(|(c, &b)| (b, x[off[k] + c].clone()))
                .collect()
        })
        .collect()
}

/// Projective cover of a submodule `K ⊆ ⊕_k P(verts[k])`: the new vertex list
/// and the map entries into `verts`.
fn cover_of_submodule(alg: &Arc<Algebra>, ambient: &Module, verts: &[usize], spaces: &SubSpaces) -> (Vec<usize>, Vec<Vec<SVec>>) {
    let (k, incl) = submodule_of(ambient, spaces);
    let mut new_verts = Vec::new();
    let mut entries = Vec::new();
    for (u, g) in top_generators(&k) {
        let x = incl.comps[u].mul_vec(&g);
        new_verts.push(u);
        entries.push(vector_as_elements(alg, verts, u, &x));
    }
    (new_verts, entries)
}

/// A minimal projective presentation `P1 → P0 → M → 0`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p0: Vec<usize>,
    pub p1: Vec<usize>,
    /// `d[m][k] ∈ e_{p0[k]} A e_{p1[m]}`.
    pub d: Vec<Vec<SVec>>,
    pub p0_module: Module,
    pub p1_module: Module,
    pub d_map: Morphism,
    pub cover: Morphism,
    pub syzygy: Module,
    pub syzygy_incl: Morphism,
}

static PRESENTATIONS: Mutex<Option<HashMap<Module, Arc<Presentation>>>> = Mutex::new(None);

pub fn minimal_presentation(m: &Module) -> Result<Arc<Presentation>> {
    if let Some(p) = PRESENTATIONS.lock().unwrap().get_or_insert_with(HashMap::new).get(m) {
        return Ok(p.clone());
    }
    let alg = m.algebra();
    let gens = top_generators(m);
    let p0: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
    let images: Vec<Vector> = gens.iter().map(|(_, x)| x.clone()).collect();
    let p0_module = projective_sum(alg, &p0)?;
    let cover = map_from_projectives(alg, &p0, &images, m);
    let ker_spaces: SubSpaces =
        cover.comps.iter().zip(p0_module.dims()).map(|(c, &d)| Subspace::span(d, c.kernel_basis())).collect();
    let (syzygy, syzygy_incl) = submodule_of(&p0_module, &ker_spaces);
    let (p1, d) = cover_of_submodule(alg, &p0_module, &p0, &ker_spaces);
    let p1_module = projective_sum(alg, &p1)?;
    let d_map = projective_map(alg, &p1, &p0, &d);
    let pres = Arc::new(Presentation { p0, p1, d, p0_module, p1_module, d_map, cover, syzygy, syzygy_incl });
    PRESENTATIONS.lock().unwrap().as_mut().unwrap().insert(m.clone(), pres.clone());
    Ok(pres)
}

/// A minimal projective resolution `⋯ → P_2 → P_1 → P_0 → M`.
#[derive(Clone, Debug)]
pub struct Resolution {
    /// Vertex lists of `P_0, P_1, …` (trailing zero terms dropped).
    pub terms: Vec<Vec<usize>>,
    /// `maps[k]` represents `P_{k+1} → P_k`.
    pub maps: Vec<Vec<Vec<SVec>>>,
    /// Generators of `P_0` in `M`.
    pub cover_images: Vec<Vector>,
}

/// The minimal projective resolution; fails if it needs more than `max_len` maps.
pub fn projective_resolution(m: &Module, max_len: usize) -> Result<Resolution> {
    resolve(m, max_len, true)
}

/// The first `len` maps of the minimal projective resolution.
pub fn resolution_prefix(m: &Module, len: usize) -> Result<Resolution> {
    resolve(m, len, false)
}

fn resolve(m: &Module, max_len: usize, strict: bool) -> Result<Resolution> {
    let alg = m.algebra();
    let pres = minimal_presentation(m)?;
    let mut terms = vec![pres.p0.clone()];
    let mut maps = Vec::new();
    let cover_images: Vec<Vector> = top_generators(m).into_iter().map(|(_, x)| x).collect();
    if pres.p1.is_empty() {
        return Ok(Resolution { terms, maps, cover_images });
    }
    terms.push(pres.p1.clone());
    maps.push(pres.d.clone());
    let mut cur_mod = pres.p1_module.clone();
    let mut cur_map = pres.d_map.clone();
    loop {
        let ker: SubSpaces =
            cur_map.comps.iter().zip(cur_mod.dims()).map(|(c, &d)| Subspace::span(d, c.kernel_basis())).collect();
        if ker.iter().all(Subspace::is_zero) {
            break;
        }
        if maps.len() >= max_len {
            if strict {
                return Err(Error::ResolutionCap(max_len));
            }
            break;
        }
        let prev = terms.last().unwrap().clone();
        let (next, entries) = cover_of_submodule(alg, &cur_mod, &prev, &ker);
        let next_mod = projective_sum(alg, &next)?;
        cur_map = projective_map(alg, &next, &prev, &entries);
        cur_mod = next_mod;
        terms.push(next);
        maps.push(entries);
    }
    Ok(Resolution { terms, maps, cover_images })
}

fn resolution_cap(alg: &Algebra) -> usize {
    2 * alg.vertex_count() + 2
}

/// Projective dimension; `None` when the resolution exceeds the cap.
pub fn pdim(m: &Module) -> Result<Option<usize>> {
    match projective_resolution(m, resolution_cap(m.algebra())) {
        Ok(r) => Ok(Some(r.terms.len() - 1)),
        Err(Error::ResolutionCap(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// The induced map `Hom(⊕P(src), N) → Hom(⊕P(tgt), N)` for a map `⊕P(tgt) → ⊕P(src)`,
/// in the coordinates `Hom(⊕P(v_k), N) = ⊕ N_{v_k}`.
fn hom_transfer(n: &Module, src: &[usize], tgt: &[usize], entries: &[Vec<SVec>]) -> Mat {
    let so: Vec<usize> = src.iter().scan(0, |a, &v| { let o = *a; *a += n.dim_at(v); Some(o) }).collect();
    let to: Vec<usize> = tgt.iter().scan(0, |a, &v| { let o = *a; *a += n.dim_at(v); Some(o) }).collect();
    let rows: usize = tgt.iter().map(|&v| n.dim_at(v)).sum();
    let cols: usize = src.iter().map(|&v| n.dim_at(v)).sum();
    let mut m = Mat::zeros(rows, cols);
    for (h, &w) in tgt.iter().enumerate() {
        for (g, &v) in src.iter().enumerate() {
            let x = &entries[h][g];
            if x.is_empty() {
                continue;
            }
            let a = n.act_elem(x, v, w);
            m.set_block(to[h], so[g], &a);
        }
    }
    m
}

/// `dim Ext^k(M, N)` from the cochain complex `Hom(P_•, N)`.
pub fn ext_dim(k: usize, m: &Module, n: &Module) -> Result<usize> {
    check_same(m, n)?;
    if k == 0 {
        return crate::modrep::hom_dim(m, n);
    }
    let res = resolution_prefix(m, k + 1)?;
    if k >= res.terms.len() {
        return Ok(0);
    }
    let dim_hom = |verts: &[usize]| -> usize { verts.iter().map(|&v| n.dim_at(v)).sum() };
    let rank_delta = |j: usize| -> usize {
        // δ_j : Hom(P_j, N) → Hom(P_{j+1}, N)
        if j + 1 >= res.terms.len() {
            0
        } else {
            hom_transfer(n, &res.terms[j], &res.terms[j + 1], &res.maps[j]).rank()
        }
    };
    Ok(dim_hom(&res.terms[k]) - rank_delta(k) - rank_delta(k - 1))
}

/// `Ext^1(M, N)` as `Hom(ΩM, N)` modulo restrictions of `Hom(P_0, N)`.
#[derive(Clone, Debug)]
pub struct ExtSpace {
    pub dim: usize,
    /// Morphisms `ΩM → N` spanning a complement of the restrictions.
    pub class_reps: Vec<Morphism>,
    pub presentation: Arc<Presentation>,
    pub hom: HomSpace,
}

pub fn ext1_space(m: &Module, n: &Module) -> Result<ExtSpace> {
    check_same(m, n)?;
    let pres = minimal_presentation(m)?;
    let alg = m.algebra();
    let hom = hom_space(&pres.syzygy, n)?;
    let mut restricted = Subspace::zero(hom.dim());
    for (k, &v) in pres.p0.iter().enumerate() {
        for i in 0..n.dim_at(v) {
            let mut images: Vec<Vector> = pres.p0.iter().map(|&w| vec![Rat::zero(); n.dim_at(w)]).collect();
            images[k][i] = Rat::one();
            let phi = map_from_projectives(alg, &pres.p0, &images, n);
            let r = phi.after(&pres.syzygy_incl);
            restricted.insert(&hom.coordinates(&r));
        }
    }
    let mut span = restricted.clone();
    let mut reps = Vec::new();
    for (j, f) in hom.basis.iter().enumerate() {
        if span.insert(&crate::exactlin::unit(hom.dim(), j)) {
            reps.push(f.clone());
        }
    }
    Ok(ExtSpace { dim: reps.len(), class_reps: reps, presentation: pres, hom })
}

/// `Ext^k(M, N)` for `k ≤ 2` with class representatives; `k = 2` is computed
/// as `Ext^1(ΩM, N)`.
pub fn ext_space(k: usize, m: &Module, n: &Module) -> Result<(usize, Vec<Morphism>)> {
    match k {
        0 => {
            let b = crate::modrep::hom_basis(m, n)?;
            Ok((b.len(), b))
        }
        1 => {
            let e = ext1_space(m, n)?;
            Ok((e.dim, e.class_reps))
        }
        2 => {
            let pres = minimal_presentation(m)?;
            let e = ext1_space(&pres.syzygy, n)?;
            Ok((e.dim, e.class_reps))
        }
        _ => Ok((ext_dim(k, m, n)?, Vec::new())),
    }
}

/// `ν(⊕P(src) → ⊕P(tgt))` as a map `⊕I(src) → ⊕I(tgt)`.
pub fn nakayama_map(alg: &Arc<Algebra>, src: &[usize], tgt: &[usize], entries: &[Vec<SVec>]) -> Morphism {
    let n = alg.vertex_count();
    let comps = (0..n)
        .map(|u| {
            let so: Vec<usize> = src.iter().scan(0, |a, &w| { let o = *a; *a += alg.paths(u, w).len(); Some(o) }).collect();
            let to: Vec<usize> = tgt.iter().scan(0, |a, &v| { let o = *a; *a += alg.paths(u, v).len(); Some(o) }).collect();
            let rows: usize = tgt.iter().map(|&v| alg.paths(u, v).len()).sum();
            let cols: usize = src.iter().map(|&w| alg.paths(u, w).len()).sum();
            let mut m = Mat::zeros(rows, cols);
            for (mi, &w) in src.iter().enumerate() {
                for (k, &v) in tgt.iter().enumerate() {
                    let x = &entries[mi][k];
                    if x.is_empty() {
                        continue;
                    }
                    // φ_p ↦ (y_q ↦ φ_p(y_q · x)) for p: u → w, q: u → v.
                    for (r, &q) in alg.paths(u, v).iter().enumerate() {
                        let prod = alg.mul_elems(&vec![(q, Rat::one())], x);
                        for (p, c) in prod {
                            debug_assert_eq!(alg.basis()[p].target, w);
                            m[(to[k] + r, so[mi] + alg.position(p))] = c;
                        }
                    }
                }
            }
            m
        })
        .collect();
    Morphism { comps }
}

/// The Nakayama functor on a direct sum of indecomposable projectives given
/// by its vertex list.
pub fn nakayama(alg: &Arc<Algebra>, verts: &[usize]) -> Result<Module> {
    injective_sum(alg, verts)
}

/// `τM = ker(ν(d): νP_1 → νP_0)` for a minimal presentation `P_1 → P_0 → M`.
pub fn tau(m: &Module) -> Result<Module> {
    let alg = m.algebra();
    let pres = minimal_presentation(m)?;
    if pres.p1.is_empty() {
        return Ok(Module::zero(alg));
    }
    let src = injective_sum(alg, &pres.p1)?;
    let f = nakayama_map(alg, &pres.p1, &pres.p0, &pres.d);
    Ok(kernel(&f, &src).0)
}

/// The linear dual `DM` as a module over the opposite algebra.
pub fn dual(m: &Module) -> Module {
    let op = m.algebra().opposite();
    let maps = m.maps().iter().map(Mat::transpose).collect();
    Module::new(op, m.dims().to_vec(), maps).expect("dual of a module satisfies the opposite relations")
}

/// `τ⁻¹M = D τ_{A^op} D M`.
pub fn tau_inverse(m: &Module) -> Result<Module> {
    Ok(dual(&tau(&dual(m))?))
}

/// `M` is projective: its cover is an isomorphism.
pub fn is_projective(m: &Module) -> Result<bool> {
    Ok(minimal_presentation(m)?.p1.is_empty())
}

/// A short exact sequence `0 → N → E → M → 0`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub middle: Module,
    pub incl: Morphism,
    pub proj: Morphism,
}

/// The extension of `M` by `N` represented by `g: ΩM → N`: the pushout of
/// `0 → ΩM → P_0 → M → 0` along `g`.
pub fn extension_from_class(m: &Module, n: &Module, g: &Morphism) -> Result<Extension> {
    check_same(m, n)?;
    let pres = minimal_presentation(m)?;
    if !g.is_morphism(&pres.syzygy, n) {
        return Err(Error::InvalidMorphism("class representative is not a map ΩM → N".into()));
    }
    let (sum, incl, proj) = direct_sum_with_maps(&[n, &pres.p0_module])?;
    let minus_iota = pres.syzygy_incl.scale(&-Rat::one());
    let rel = incl[0].after(g).add(&incl[1].after(&minus_iota));
    let (middle, q) = cokernel(&rel, &sum);
    let e_incl = q.after(&incl[0]);
    // E → M is induced by (0, cover) on N ⊕ P_0; lift along the quotient
    // coordinates, which are a subset of the coordinates of N ⊕ P_0.
    let through = pres.cover.after(&proj[1]);
    let sections = quotient_section(&q, &sum, &middle);
    let e_proj = through.after(&sections);
    debug_assert!(e_incl.is_injective() && e_proj.is_surjective());
    Ok(Extension { middle, incl: e_incl, proj: e_proj })
}

/// A linear section of a projection from `quotient_by`, whose matrix has a
/// unit column for every quotient coordinate.
fn quotient_section(q: &Morphism, src: &Module, tgt: &Module) -> Morphism {
    let comps = q
        .comps
        .iter()
        .zip(src.dims().iter().zip(tgt.dims()))
        .map(|(c, (&sd, &td))| {
            let mut s = Mat::zeros(sd, td);
            for k in 0..td {
                let i = (0..sd)
                    .find(|&i| (0..td).all(|r| if r == k { c[(r, i)].is_one() } else { c[(r, i)].is_zero() }))
                    .expect("quotient coordinates are unit columns");
                s[(i, k)] = Rat::one();
            }
            s
        })
        .collect();
    Morphism { comps }
}
