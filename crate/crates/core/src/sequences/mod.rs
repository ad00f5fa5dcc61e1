//! Exceptional and τ-exceptional sequences, the bijection Φ from TF-ordered
//! τ-rigid modules, ψ- and φ-mutation, and the verification drivers.
//!
//! Sequences are stored in position order: `terms[0]` is `M_1`, the rightmost
//! term of `(M_r, …, M_1)`. Terms are ids in the catalog of their algebra.

mod exceptional;
mod graph;
mod mutation;
mod verify;

pub use exceptional::{
    enumerate_complete_exc, enumerate_thin_exceptional, is_exceptional_module, is_exceptional_sequence, psi_mutate,
    ExcSeq,
};
pub use graph::{mutation_graph, MutationGraph};
pub use mutation::{classify_regularity, phi_mutate, regularity_at, Regularity};
pub use verify::{verify, Report, Theorem};

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::bqa::Algebra;
use crate::error::{Error, Result};
use crate::modrep::{is_indecomposable, Catalog, Module};
use crate::tautilt::{f_inverse, is_tau_rigid, perpendicular_category, Lattice, PerpCat};

/// Direction of a mutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dir {
    Left,
    Right,
}

/// A complete τ-exceptional sequence with its TF-ordered τ-tilting module:
/// `ordered[k]` is the rigid index of `T_{k+1}` and `terms[k]` the catalog id
/// of `M_{k+1} = f_{T_1 ⊕ ⋯ ⊕ T_k}(T_{k+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TauExcSeq {
    pub terms: Vec<usize>,
    pub ordered: Vec<usize>,
}

/// All complete τ-exceptional sequences of one algebra.
pub struct SeqCategory {
    lattice: Arc<Lattice>,
    seqs: Vec<TauExcSeq>,
    index: HashMap<Vec<usize>, usize>,
    left: Mutex<HashMap<(usize, usize), usize>>,
}

static CATEGORIES: Mutex<Option<HashMap<u64, Arc<SeqCategory>>>> = Mutex::new(None);

impl SeqCategory {
    /// The sequences of `alg`, enumerated once and shared.
    pub fn of(alg: &Arc<Algebra>) -> Result<Arc<SeqCategory>> {
        if let Some(c) = CATEGORIES.lock().unwrap().get_or_insert_with(HashMap::new).get(&alg.id()) {
            return Ok(c.clone());
        }
        let lattice = Lattice::of(alg)?;
        let seqs = enumerate_orderings(&lattice)?;
        let mut index = HashMap::new();
        for (k, s) in seqs.iter().enumerate() {
            if index.insert(s.terms.clone(), k).is_some() {
                return Err(Error::Internal("two TF-orderings give the same sequence".into()));
            }
        }
        let cat = Arc::new(SeqCategory { lattice, seqs, index, left: Mutex::new(HashMap::new()) });
        let mut g = CATEGORIES.lock().unwrap();
        Ok(g.as_mut().unwrap().entry(alg.id()).or_insert(cat).clone())
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn catalog(&self) -> &Arc<Catalog> {
        self.lattice.catalog()
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.lattice.algebra()
    }

    pub fn seqs(&self) -> &[TauExcSeq] {
        &self.seqs
    }

    pub fn len(&self) -> usize {
        self.seqs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seqs.is_empty()
    }

    /// Index of the sequence with the given terms.
    pub fn find(&self, terms: &[usize]) -> Option<usize> {
        self.index.get(terms).copied()
    }

    /// Index of the sequence whose terms are isomorphic to `modules`.
    pub fn find_modules(&self, modules: &[Module]) -> Result<Option<usize>> {
        let mut terms = Vec::with_capacity(modules.len());
        for m in modules {
            match self.catalog().find(m)? {
                Some(c) => terms.push(c),
                None => return Ok(None),
            }
        }
        Ok(self.find(&terms))
    }

    pub fn modules(&self, s: usize) -> Vec<Module> {
        self.seqs[s].terms.iter().map(|&c| self.catalog().module(c)).collect()
    }

    /// Labels in display order `(M_r, …, M_1)`.
    pub fn labels(&self, s: usize) -> Vec<String> {
        self.seqs[s].terms.iter().rev().map(|&c| self.catalog().label(c)).collect()
    }

    /// The sequences agreeing with `terms` everywhere except possibly at the
    /// 0-based position `free`.
    pub fn complete_at(&self, terms: &[usize], free: usize) -> Vec<usize> {
        (0..self.seqs.len())
            .filter(|&s| {
                let u = &self.seqs[s].terms;
                u.len() == terms.len() && u.iter().zip(terms).enumerate().all(|(k, (a, b))| k == free || a == b)
            })
            .collect()
    }

    fn memo_left(&self, key: (usize, usize)) -> Option<usize> {
        self.left.lock().unwrap().get(&key).copied()
    }

    fn store_left(&self, key: (usize, usize), v: usize) {
        self.left.lock().unwrap().insert(key, v);
    }
}

/// Every TF-ordering of every τ-tilting module of `lat`, mapped through Φ.
fn enumerate_orderings(lat: &Lattice) -> Result<Vec<TauExcSeq>> {
    let mut out = Vec::new();
    for p in lat.tau_tilting() {
        let mods = lat.pair(p).modules.clone();
        let mut prefix = Vec::with_capacity(mods.len());
        extend_orderings(lat, &mods, &mut prefix, &mut out)?;
    }
    Ok(out)
}

fn extend_orderings(lat: &Lattice, mods: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<TauExcSeq>) -> Result<()> {
    if prefix.len() == mods.len() {
        out.push(phi_unchecked(lat, prefix)?);
        return Ok(());
    }
    for &y in mods {
        if prefix.contains(&y) || lat.in_gen(y, prefix) {
            continue;
        }
        prefix.push(y);
        extend_orderings(lat, mods, prefix, out)?;
        prefix.pop();
    }
    Ok(())
}

fn phi_unchecked(lat: &Lattice, ordered: &[usize]) -> Result<TauExcSeq> {
    let mut terms = Vec::with_capacity(ordered.len());
    for (k, &y) in ordered.iter().enumerate() {
        let m = lat.torsion_free(&ordered[..k], y);
        terms.push(lat.catalog().intern(&m)?);
    }
    Ok(TauExcSeq { terms, ordered: ordered.to_vec() })
}

/// `ordered[i] ∉ Gen(ordered[..i])` for all `i`.
pub fn is_tf_ordered(lat: &Lattice, ordered: &[usize]) -> bool {
    (0..ordered.len()).all(|i| !lat.in_gen(ordered[i], &ordered[..i]))
}

/// Φ on a TF-ordered τ-rigid module given by rigid indices `T_1, …, T_r`.
pub fn phi(lat: &Lattice, ordered: &[usize]) -> Result<TauExcSeq> {
    let mut sorted = ordered.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != ordered.len() || !lat.is_rigid_pair(&sorted, &[]) {
        return Err(Error::NotApplicable("summands do not form a basic τ-rigid module".into()));
    }
    if !is_tf_ordered(lat, ordered) {
        return Err(Error::NotApplicable("module is not TF-ordered".into()));
    }
    phi_unchecked(lat, ordered)
}

/// The inverse of Φ: `T_1 = M_1` and `T_k = f^{-1}_{T_1 ⊕ ⋯ ⊕ T_{k-1}}(M_k)`.
pub fn phi_inverse(lat: &Lattice, terms: &[usize]) -> Result<Vec<usize>> {
    let mut ordered: Vec<usize> = Vec::with_capacity(terms.len());
    for &c in terms {
        let m = lat.catalog().module(c);
        let y = f_inverse(lat, &ordered, &m)?;
        ordered.push(y);
    }
    Ok(ordered)
}

/// All complete τ-exceptional sequences of `alg`.
pub fn enumerate_complete_tau_exc(alg: &Arc<Algebra>) -> Result<Arc<SeqCategory>> {
    SeqCategory::of(alg)
}

/// Why a list of modules fails to be τ-exceptional. Positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TauExcFailure {
    Decomposable { position: usize },
    NotTauRigid { position: usize },
    /// `Hom(M_head, X) ≠ 0` for the term at `position`.
    HomFromHead { head: usize, position: usize },
    /// `Hom(X, τ M_head) ≠ 0` for the term at `position`.
    HomToTauHead { head: usize, position: usize },
}

impl std::fmt::Display for TauExcFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TauExcFailure::Decomposable { position } => write!(f, "M_{position} is decomposable"),
            TauExcFailure::NotTauRigid { position } => write!(f, "M_{position} is not τ-rigid in its category"),
            TauExcFailure::HomFromHead { head, position } => write!(f, "Hom(M_{head}, M_{position}) ≠ 0"),
            TauExcFailure::HomToTauHead { head, position } => write!(f, "Hom(M_{position}, τM_{head}) ≠ 0"),
        }
    }
}

/// Checks `M_1` τ-rigid and `(M_r, …, M_2)` τ-exceptional in `J(M_1)`,
/// recursing through the module categories of the perpendicular algebras.
/// Returns the failures found at the first level that has any.
pub fn check_tau_exceptional(seq: &[Module]) -> Result<Vec<TauExcFailure>> {
    let mut level: Vec<Module> = seq.to_vec();
    let mut offset = 0;
    while let Some(head) = level.first().cloned() {
        let pos = offset + 1;
        if !is_indecomposable(&head)? {
            return Ok(vec![TauExcFailure::Decomposable { position: pos }]);
        }
        if !is_tau_rigid(&head)? {
            return Ok(vec![TauExcFailure::NotTauRigid { position: pos }]);
        }
        if level.len() == 1 {
            break;
        }
        let lat = Lattice::of(head.algebra())?;
        let x = lat.rigid_of(&head)?.ok_or_else(|| Error::Internal("τ-rigid module missing from lattice".into()))?;
        let perp = perpendicular_category(&lat, &[x], &[])?;
        let tau_head = &lat.rigid()[x].tau;
        let mut failures = Vec::new();
        for (k, m) in level.iter().enumerate().skip(1) {
            if !crate::modrep::hom_is_zero(&head, m)? {
                failures.push(TauExcFailure::HomFromHead { head: pos, position: offset + k + 1 });
            }
            if !crate::modrep::hom_is_zero(m, tau_head)? {
                failures.push(TauExcFailure::HomToTauHead { head: pos, position: offset + k + 1 });
            }
        }
        if !failures.is_empty() {
            return Ok(failures);
        }
        level = level[1..].iter().map(|m| perp.to_b(m)).collect::<Result<_>>()?;
        offset += 1;
    }
    Ok(Vec::new())
}

pub fn verify_tau_exceptional(seq: &[Module]) -> Result<bool> {
    Ok(check_tau_exceptional(seq)?.is_empty())
}

/// The category `J(M_1)` of a sequence with its transport to the sequences
/// of `End(G)`.
pub(crate) struct Descent {
    pub perp: Arc<PerpCat>,
    pub child: Arc<SeqCategory>,
}

impl Descent {
    pub fn of(cat: &SeqCategory, head: usize) -> Result<Descent> {
        let lat = cat.lattice();
        let x = lat
            .rigid_of_catalog(head)
            .ok_or_else(|| Error::NotApplicable("head of the sequence is not τ-rigid".into()))?;
        let perp = perpendicular_category(lat, &[x], &[])?;
        let child = SeqCategory::of(perp.algebra())?;
        Ok(Descent { perp, child })
    }

    /// Catalog ids in the child for ids of the parent catalog.
    pub fn down(&self, parent: &SeqCategory, terms: &[usize]) -> Result<Vec<usize>> {
        terms
            .iter()
            .map(|&c| {
                let n = self.perp.to_b(&parent.catalog().module(c))?;
                self.child.catalog().intern(&n)
            })
            .collect()
    }

    pub fn up(&self, parent: &SeqCategory, terms: &[usize]) -> Result<Vec<usize>> {
        terms
            .iter()
            .map(|&c| {
                let m = self.perp.from_b(&self.child.catalog().module(c))?;
                parent.catalog().intern(&m)
            })
            .collect()
    }
}
