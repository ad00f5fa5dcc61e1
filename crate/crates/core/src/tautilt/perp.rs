//! τ-perpendicular categories `J(T, P) = T^⊥ ∩ ⊥τT ∩ P^⊥` with an explicit
//! equivalence to modules over the basic algebra `End(G)` of their
//! projective generator `G`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::Lattice;
use crate::bqa::{Algebra, Arrow, BasisPath, Quiver, SVec};
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Rat, Subspace, Vector};
use crate::homology::tau;
use crate::modrep::{
    cokernel, end_radical, hom_is_zero, hom_space, is_isomorphic_indecomposable, HomSpace, Module, Morphism,
};

/// `J(T, P)` for a τ-rigid pair of an ambient lattice.
pub struct PerpCat {
    parent: Arc<Lattice>,
    modules: Vec<usize>,
    shifted: Vec<usize>,
    t: Module,
    tau_t: Module,
    bongartz: usize,
    gens: Vec<Module>,
    algebra: Arc<Algebra>,
    /// For an arrow `k → m`, the morphism `G_m → G_k` it acts by.
    arrow_maps: Vec<Morphism>,
}

type Key = (u64, Vec<usize>, Vec<usize>);

static PERPS: Mutex<Option<HashMap<Key, Arc<PerpCat>>>> = Mutex::new(None);

/// `J(⊕ X_x, P)` for rigid indices `modules` of `lat`; memoized.
pub fn perpendicular_category(lat: &Arc<Lattice>, modules: &[usize], shifted: &[usize]) -> Result<Arc<PerpCat>> {
    let mut modules = modules.to_vec();
    modules.sort_unstable();
    modules.dedup();
    let mut shifted = shifted.to_vec();
    shifted.sort_unstable();
    shifted.dedup();
    let key = (lat.algebra().id(), modules.clone(), shifted.clone());
    if let Some(p) = PERPS.lock().unwrap().get_or_insert_with(HashMap::new).get(&key) {
        return Ok(p.clone());
    }
    if !lat.is_rigid_pair(&modules, &shifted) {
        return Err(Error::NotApplicable("pair is not τ-rigid".into()));
    }
    let p = Arc::new(PerpCat::build(lat.clone(), modules, shifted)?);
    let mut g = PERPS.lock().unwrap();
    Ok(g.as_mut().unwrap().entry(key).or_insert(p).clone())
}

fn sum_of(alg: &Arc<Algebra>, ms: &[Module]) -> Module {
    if ms.is_empty() {
        return Module::zero(alg);
    }
    let refs: Vec<&Module> = ms.iter().collect();
    Module::direct_sum(&refs).expect("summands share the algebra")
}

impl PerpCat {
    fn build(parent: Arc<Lattice>, modules: Vec<usize>, shifted: Vec<usize>) -> Result<PerpCat> {
        let alg = parent.algebra().clone();
        let tmods: Vec<Module> = modules.iter().map(|&x| parent.rigid_module(x).clone()).collect();
        let t = sum_of(&alg, &tmods);
        let tau_t = tau(&t)?;
        let bongartz = parent.bongartz(&modules, &shifted)?;
        let extra: Vec<usize> =
            parent.pair(bongartz).modules.iter().copied().filter(|x| !modules.contains(x)).collect();
        let rank = parent.rank() - modules.len() - shifted.len();
        if extra.len() != rank {
            return Err(Error::Internal(format!(
                "Bongartz completion adds {} summands, expected {rank}",
                extra.len()
            )));
        }
        let gens: Vec<Module> = extra.iter().map(|&c| parent.torsion_free(&modules, c)).collect();
        if gens.iter().any(Module::is_zero) {
            return Err(Error::Internal("projective generator has a zero summand".into()));
        }
        let (algebra, arrow_maps) = end_algebra(&gens)?;
        Ok(PerpCat { parent, modules, shifted, t, tau_t, bongartz, gens, algebra, arrow_maps })
    }

    pub fn parent(&self) -> &Arc<Lattice> {
        &self.parent
    }

    pub fn modules(&self) -> &[usize] {
        &self.modules
    }

    pub fn shifted(&self) -> &[usize] {
        &self.shifted
    }

    pub fn bongartz(&self) -> usize {
        self.bongartz
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    /// Indecomposable projective generators `G_k` of `J`, as ambient modules.
    pub fn proj_summands(&self) -> &[Module] {
        &self.gens
    }

    pub fn proj_gen(&self) -> Module {
        sum_of(self.parent.algebra(), &self.gens)
    }

    /// The basic algebra `End(G)` with `e_k End(G) e_l = Hom(G_l, G_k)`.
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn contains(&self, x: &Module) -> Result<bool> {
        if self.shifted.iter().any(|&v| x.dim_at(v) != 0) {
            return Ok(false);
        }
        Ok(hom_is_zero(&self.t, x)? && hom_is_zero(x, &self.tau_t)?)
    }

    /// `Hom(G, X)` as a right `End(G)`-module.
    pub fn to_b(&self, x: &Module) -> Result<Module> {
        let homs: Vec<HomSpace> = self.gens.iter().map(|g| hom_space(g, x)).collect::<Result<_>>()?;
        let dims: Vec<usize> = homs.iter().map(HomSpace::dim).collect();
        let maps = self
            .algebra
            .arrows()
            .iter()
            .zip(&self.arrow_maps)
            .map(|(a, am)| {
                let (k, m) = (a.source, a.target);
                let mut mat = Mat::zeros(dims[m], dims[k]);
                for (j, phi) in homs[k].basis.iter().enumerate() {
                    let c = homs[m].coordinates(&phi.after(am));
                    for (i, v) in c.into_iter().enumerate() {
                        mat[(i, j)] = v;
                    }
                }
                mat
            })
            .collect();
        Module::new(self.algebra.clone(), dims, maps)
    }

    /// `N ⊗_{End(G)} G`, the inverse of [`PerpCat::to_b`] on `J`.
    pub fn from_b(&self, n: &Module) -> Result<Module> {
        if !Arc::ptr_eq(n.algebra(), &self.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let alg = self.parent.algebra();
        let nv = alg.vertex_count();
        let r = self.gens.len();
        let mut tgt_blocks: Vec<(usize, usize)> = Vec::new();
        let mut tgt_at = vec![vec![0usize; 0]; r];
        for k in 0..r {
            for i in 0..n.dim_at(k) {
                tgt_at[k].push(tgt_blocks.len());
                tgt_blocks.push((k, i));
            }
        }
        let mut src_blocks: Vec<(usize, usize)> = Vec::new();
        for (ai, a) in self.algebra.arrows().iter().enumerate() {
            for j in 0..n.dim_at(a.source) {
                src_blocks.push((ai, j));
            }
        }
        let tgt_mods: Vec<Module> = tgt_blocks.iter().map(|&(k, _)| self.gens[k].clone()).collect();
        let src_mods: Vec<Module> =
            src_blocks.iter().map(|&(ai, _)| self.gens[self.algebra.arrows()[ai].target].clone()).collect();
        let target = sum_of(alg, &tgt_mods);
        let source = sum_of(alg, &src_mods);
        let offsets = |mods: &[Module], v: usize| -> Vec<usize> {
            mods.iter()
                .scan(0, |acc, m| {
                    let o = *acc;
                    *acc += m.dim_at(v);
                    Some(o)
                })
                .collect()
        };
        let comps = (0..nv)
            .map(|v| {
                let to = offsets(&tgt_mods, v);
                let so = offsets(&src_mods, v);
                let mut c = Mat::zeros(target.dim_at(v), source.dim_at(v));
                for (s, &(ai, j)) in src_blocks.iter().enumerate() {
                    let a = &self.algebra.arrows()[ai];
                    let (k, m) = (a.source, a.target);
                    let gm = self.gens[m].dim_at(v);
                    let na = n.map(ai);
                    for i in 0..n.dim_at(m) {
                        let coef = &na[(i, j)];
                        if !coef.is_zero() {
                            c.set_block(to[tgt_at[m][i]], so[s], &Mat::identity(gm).scale(coef));
                        }
                    }
                    let minus = self.arrow_maps[ai].comps[v].scale(&-Rat::one());
                    let prev = c.block(to[tgt_at[k][j]], so[s], minus.rows(), minus.cols());
                    c.set_block(to[tgt_at[k][j]], so[s], &prev.add(&minus));
                }
                c
            })
            .collect();
        let f = Morphism { comps };
        Ok(cokernel(&f, &target).0)
    }

    /// Index in the parent lattice of `f_T^{-1}(N)` for `N` indecomposable
    /// τ-rigid in `J(T)`.
    pub fn f_inverse(&self, n: &Module) -> Result<usize> {
        f_inverse(&self.parent, &self.modules, n)
    }
}

/// The unique rigid `X` with `X ⊕ T` τ-rigid, `X ∉ Gen T` and `f_T(X) ≅ N`.
pub fn f_inverse(lat: &Lattice, modules: &[usize], n: &Module) -> Result<usize> {
    let mut hits = Vec::new();
    for y in 0..lat.rigid().len() {
        if modules.contains(&y) || lat.in_gen(y, modules) {
            continue;
        }
        if !modules.iter().all(|&x| lat.hom_tau_zero(x, y) && lat.hom_tau_zero(y, x)) {
            continue;
        }
        let f = lat.torsion_free(modules, y);
        if f.dims() == n.dims() && is_isomorphic_indecomposable(&f, n)? {
            hits.push(y);
        }
    }
    match hits.as_slice() {
        [y] => Ok(*y),
        _ => Err(Error::Lookup(format!("f_T^-1 has {} candidates", hits.len()))),
    }
}

/// Builds `End(⊕ G_k)` from the radical layers of the morphism spaces.
fn end_algebra(gens: &[Module]) -> Result<(Arc<Algebra>, Vec<Morphism>)> {
    let r = gens.len();
    // hom[k][l] = Hom(G_l, G_k), the paths k → l.
    let hom: Vec<Vec<HomSpace>> =
        (0..r).map(|k| (0..r).map(|l| hom_space(&gens[l], &gens[k])).collect::<Result<_>>()).collect::<Result<_>>()?;
    let rad: Vec<Vec<Vec<Morphism>>> = (0..r)
        .map(|k| {
            (0..r)
                .map(|l| {
                    if k == l {
                        let h = &hom[k][k];
                        end_radical(h).basis().iter().map(|c| h.combine(c, &gens[k], &gens[k])).collect()
                    } else {
                        hom[k][l].basis.clone()
                    }
                })
                .collect()
        })
        .collect();
    let mut arrows = Vec::new();
    let mut arrow_maps = Vec::new();
    for k in 0..r {
        for m in 0..r {
            let mut span = Subspace::zero(hom[k][m].dim());
            for l in 0..r {
                for r1 in &rad[k][l] {
                    for r2 in &rad[l][m] {
                        span.insert(&hom[k][m].coordinates(&r1.after(r2)));
                    }
                }
            }
            let mut j = 0;
            for f in &rad[k][m] {
                if span.insert(&hom[k][m].coordinates(f)) {
                    j += 1;
                    arrows.push(Arrow { name: format!("g{}_{}_{}", k + 1, m + 1, j), source: k, target: m });
                    arrow_maps.push(f.clone());
                }
            }
        }
    }
    let quiver = Quiver::new(r, arrows.clone())?;
    let mut basis: Vec<BasisPath> = (0..r).map(|k| BasisPath { arrows: vec![], source: k, target: k }).collect();
    let mut maps: Vec<Morphism> = gens.iter().map(Morphism::identity).collect();
    let mut spans: Vec<Vec<Subspace>> = (0..r).map(|k| (0..r).map(|m| Subspace::zero(hom[k][m].dim())).collect()).collect();
    let mut coords: Vec<Vec<Vec<(usize, Vector)>>> = vec![vec![Vec::new(); r]; r];
    for k in 0..r {
        let c = hom[k][k].coordinates(&maps[k]);
        spans[k][k].insert(&c);
        coords[k][k].push((k, c));
    }
    let mut layer: Vec<usize> = (0..r).collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &b in &layer {
            let (k, l) = (basis[b].source, basis[b].target);
            for (ai, a) in arrows.iter().enumerate() {
                if a.source != l {
                    continue;
                }
                let m = a.target;
                let f = maps[b].after(&arrow_maps[ai]);
                let c = hom[k][m].coordinates(&f);
                if spans[k][m].insert(&c) {
                    let mut word = basis[b].arrows.clone();
                    word.push(ai);
                    let id = basis.len();
                    basis.push(BasisPath { arrows: word, source: k, target: m });
                    maps.push(f);
                    coords[k][m].push((id, c));
                    next.push(id);
                }
            }
        }
        layer = next;
    }
    for k in 0..r {
        for m in 0..r {
            if spans[k][m].dim() != hom[k][m].dim() {
                return Err(Error::Internal("radical layers do not generate the endomorphism algebra".into()));
            }
        }
    }
    let solvers: Vec<Vec<Mat>> = (0..r)
        .map(|k| {
            (0..r)
                .map(|m| {
                    let cols: Vec<Vector> = coords[k][m].iter().map(|(_, c)| c.clone()).collect();
                    Mat::from_cols(hom[k][m].dim(), &cols)
                })
                .collect()
        })
        .collect();
    let mut rm: Vec<Vec<SVec>> = vec![vec![Vec::new(); arrows.len()]; basis.len()];
    for b in 0..basis.len() {
        let (k, l) = (basis[b].source, basis[b].target);
        for (ai, a) in arrows.iter().enumerate() {
            if a.source != l {
                continue;
            }
            let m = a.target;
            let c = hom[k][m].coordinates(&maps[b].after(&arrow_maps[ai]));
            let x = solvers[k][m].solve(&c)?.ok_or_else(|| Error::Internal("product outside the span".into()))?;
            rm[b][ai] = coords[k][m].iter().zip(x).filter(|(_, v)| !v.is_zero()).map(|((id, _), v)| (*id, v)).collect();
        }
    }
    let alg = Algebra::from_basis_data("End(G)", quiver, basis, rm)?;
    Ok((alg, arrow_maps))
}
