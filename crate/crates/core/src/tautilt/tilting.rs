//! Classical tilting modules of `A_t` from the ideal semigroup generated by
//! `I_i = A(1 − e_i)A`, with their quasi-hereditary decompositions.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use super::{Lattice, Pair, Summand};
use crate::bqa::{ideal_component, ideal_generator, ideal_product, Algebra, IdealSpace};
use crate::error::{Error, Result};
use crate::exactlin::{Subspace, Vector};
use crate::homology::{ext_dim, pdim};
use crate::modrep::{decompose, Module};

/// A basic tilting module with its decomposition `T = T_t ⊕ ⋯ ⊕ T_1`,
/// `T_i = e_i T`. `parts[i]` is `T_{i+1}` and `rigid[i]` its index in the
/// lattice of the algebra.
#[derive(Clone, Debug)]
pub struct TiltingModule {
    pub ideal: IdealSpace,
    pub parts: Vec<Module>,
    pub rigid: Vec<usize>,
    pub pair: usize,
}

impl TiltingModule {
    pub fn module(&self) -> Module {
        let refs: Vec<&Module> = self.parts.iter().collect();
        Module::direct_sum(&refs).expect("parts share the algebra")
    }
}

/// All basic tilting modules of the Auslander algebra `alg`, in order of
/// discovery by breadth-first closure of the ideal semigroup. The count is
/// checked against `t!`.
pub fn enumerate_tilting(alg: &Arc<Algebra>) -> Result<Vec<TiltingModule>> {
    let t = alg.vertex_count();
    let lat = Lattice::of(alg)?;
    let gens: Vec<IdealSpace> = (0..t.saturating_sub(1)).map(|i| ideal_generator(alg, i)).collect::<Result<_>>()?;
    let full = Subspace::full(alg.dim());
    let mut seen: HashSet<Vec<Vector>> = HashSet::from([full.basis().to_vec()]);
    let mut ideals = vec![full.clone()];
    let mut queue = VecDeque::from([full]);
    while let Some(j) = queue.pop_front() {
        for g in &gens {
            let p = ideal_product(alg, &j, g);
            if seen.insert(p.basis().to_vec()) {
                ideals.push(p.clone());
                queue.push_back(p);
            }
        }
    }
    let mut out: Vec<TiltingModule> = Vec::new();
    let mut keys: HashSet<Vec<usize>> = HashSet::new();
    for ideal in ideals {
        let parts: Vec<Module> = (0..t).map(|v| ideal_component(alg, &ideal, v)).collect();
        let mut rigid = Vec::with_capacity(t);
        for p in &parts {
            let i = lat
                .rigid_of(p)?
                .ok_or_else(|| Error::Internal("summand of a tilting module is not τ-rigid".into()))?;
            rigid.push(i);
        }
        if !keys.insert(rigid.clone()) {
            continue;
        }
        let mut modules = rigid.clone();
        modules.sort_unstable();
        modules.dedup();
        let pair = lat
            .pair_index(&Pair { modules, shifted: Vec::new() })
            .ok_or_else(|| Error::Internal("tilting module is not a support τ-tilting pair".into()))?;
        out.push(TiltingModule { ideal, parts, rigid, pair });
    }
    let expected: usize = (1..=t).product();
    if out.len() != expected {
        return Err(Error::Internal(format!("found {} tilting modules, expected {expected}", out.len())));
    }
    Ok(out)
}

/// `pdim T ≤ 1`, `Ext¹(T, T) = 0` and `T` has as many nonisomorphic
/// indecomposable summands as the algebra has vertices.
pub fn is_classical_tilting(m: &Module) -> Result<bool> {
    match pdim(m)? {
        Some(d) if d <= 1 => {}
        _ => return Ok(false),
    }
    if ext_dim(1, m, m)? != 0 {
        return Ok(false);
    }
    Ok(decompose(m)?.len() == m.algebra().vertex_count())
}

/// Exchanges `T_{i-1}` (for `i` in `2..=t`) by AIR mutation and returns the
/// result when it is again tilting and lies in `Gen T`.
pub fn tilting_mutation(all: &[TiltingModule], lat: &Lattice, which: usize, i: usize) -> Result<Option<usize>> {
    let t = lat.rank();
    if i < 2 || i > t {
        return Err(Error::NotApplicable(format!("position {i} outside 2..={t}")));
    }
    let tm = &all[which];
    let q = lat.mutate(tm.pair, Summand::Module(tm.rigid[i - 2]))?;
    if !lat.class_contains(tm.pair, q) {
        return Ok(None);
    }
    Ok(all.iter().position(|s| s.pair == q))
}
