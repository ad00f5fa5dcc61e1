//! Exhaustive enumeration of support τ-tilting pairs by left mutation from
//! `(A, ∅)`, with the indecomposable τ-rigid modules harvested on the way.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, Mutex};

use crate::bqa::Algebra;
use crate::config;
use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::homology::{projective, tau};
use crate::modrep::{cokernel, decompose, hom_is_zero, quotient_by, Catalog, Module, SubSpaces};
use crate::torsion::{minimal_approximation, trace_spaces, ApproxSide};

/// An indecomposable τ-rigid module with its translate.
#[derive(Clone, Debug)]
pub struct RigidIndec {
    pub module: Module,
    pub tau: Module,
    pub catalog_id: usize,
}

/// A basic support τ-tilting pair: module summands by index into the rigid
/// list and shifted projective vertices, both sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    pub modules: Vec<usize>,
    pub shifted: Vec<usize>,
}

impl Pair {
    pub fn len(&self) -> usize {
        self.modules.len() + self.shifted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn summands(&self) -> Vec<Summand> {
        self.modules.iter().map(|&x| Summand::Module(x)).chain(self.shifted.iter().map(|&v| Summand::Shifted(v))).collect()
    }

    fn without(&self, s: Summand) -> Pair {
        let mut p = self.clone();
        match s {
            Summand::Module(x) => p.modules.retain(|&y| y != x),
            Summand::Shifted(v) => p.shifted.retain(|&w| w != v),
        }
        p
    }

    fn with(&self, s: Summand) -> Pair {
        let mut p = self.clone();
        match s {
            Summand::Module(x) => {
                p.modules.push(x);
                p.modules.sort_unstable();
            }
            Summand::Shifted(v) => {
                p.shifted.push(v);
                p.shifted.sort_unstable();
            }
        }
        p
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Summand {
    Module(usize),
    Shifted(usize),
}

/// The finite lattice of torsion classes of a τ-tilting finite algebra,
/// carried by its support τ-tilting pairs.
pub struct Lattice {
    alg: Arc<Algebra>,
    catalog: Arc<Catalog>,
    rigid: Vec<RigidIndec>,
    by_catalog: HashMap<usize, usize>,
    pairs: Vec<Pair>,
    index: HashMap<Pair, usize>,
    /// `neighbors[p]` maps each summand of `p` to the pair obtained by
    /// exchanging it.
    neighbors: Vec<Vec<(Summand, usize)>>,
    /// `traces[x][y]` is the trace of `X_x` in `X_y`.
    traces: Vec<Vec<SubSpaces>>,
    /// `hom_tau[x][y]` is `Hom(X_x, τX_y) = 0`.
    hom_tau: Vec<Vec<bool>>,
    /// `gen[p][y]` is `X_y ∈ Gen(p)`.
    gen: Vec<Vec<bool>>,
    /// Covering relations `(larger, smaller)`.
    hasse: Vec<(usize, usize)>,
    top: usize,
    bottom: usize,
}

static LATTICES: Mutex<Option<HashMap<u64, Arc<Lattice>>>> = Mutex::new(None);

struct Builder {
    alg: Arc<Algebra>,
    catalog: Arc<Catalog>,
    rigid: Vec<RigidIndec>,
    by_catalog: HashMap<usize, usize>,
    hom_tau: HashMap<(usize, usize), bool>,
    traces: HashMap<(usize, usize), SubSpaces>,
}

impl Builder {
    fn register(&mut self, m: Module) -> Result<usize> {
        let cid = self.catalog.intern(&m)?;
        if let Some(&i) = self.by_catalog.get(&cid) {
            return Ok(i);
        }
        let t = tau(&m)?;
        let i = self.rigid.len();
        self.rigid.push(RigidIndec { module: self.catalog.module(cid), tau: t, catalog_id: cid });
        self.by_catalog.insert(cid, i);
        Ok(i)
    }

    fn hom_tau_zero(&mut self, x: usize, y: usize) -> Result<bool> {
        if let Some(&b) = self.hom_tau.get(&(x, y)) {
            return Ok(b);
        }
        let b = hom_is_zero(&self.rigid[x].module, &self.rigid[y].tau)?;
        self.hom_tau.insert((x, y), b);
        Ok(b)
    }

    fn trace(&mut self, x: usize, y: usize) -> Result<&SubSpaces> {
        if !self.traces.contains_key(&(x, y)) {
            let s = trace_spaces(&self.rigid[x].module, &self.rigid[y].module)?;
            self.traces.insert((x, y), s);
        }
        Ok(&self.traces[&(x, y)])
    }

    fn in_gen(&mut self, y: usize, xs: &[usize]) -> Result<bool> {
        let dims = self.rigid[y].module.dims().to_vec();
        let mut acc: SubSpaces = dims.iter().map(|&d| Subspace::zero(d)).collect();
        for &x in xs {
            let t = self.trace(x, y)?.clone();
            for (a, s) in acc.iter_mut().zip(&t) {
                *a = a.sum(s);
            }
            if acc.iter().all(Subspace::is_full) {
                return Ok(true);
            }
        }
        Ok(acc.iter().all(Subspace::is_full))
    }

    fn is_valid(&mut self, p: &Pair) -> Result<bool> {
        for &x in &p.modules {
            for &y in &p.modules {
                if !self.hom_tau_zero(x, y)? {
                    return Ok(false);
                }
            }
            for &v in &p.shifted {
                if self.rigid[x].module.dim_at(v) != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(p.len() == self.alg.vertex_count())
    }

    /// Left mutation of `p` at the module summand `x`, assuming
    /// `X ∉ Gen(p / X)`. Returns the new pair and the summand that replaced `x`.
    fn left_mutation(&mut self, p: &Pair, x: usize) -> Result<(Pair, Summand)> {
        let rest = p.without(Summand::Module(x));
        let new = if rest.modules.is_empty() {
            None
        } else {
            let add: Vec<Module> = rest.modules.iter().map(|&y| self.rigid[y].module.clone()).collect();
            let approx = minimal_approximation(&self.rigid[x].module, &add, ApproxSide::Left)?;
            let (coker, _) = cokernel(&approx.map, &approx.object);
            let mut found = BTreeSet::new();
            for (y, _) in decompose(&coker)? {
                let cid = self.catalog.intern(&y)?;
                let known = self.by_catalog.get(&cid).is_some_and(|i| rest.modules.contains(i));
                if !known {
                    found.insert(self.register(y)?);
                }
            }
            match found.len() {
                0 => None,
                1 => found.into_iter().next(),
                k => return Err(Error::Internal(format!("exchange cokernel has {k} new summands"))),
            }
        };
        let added = match new {
            Some(y) => Summand::Module(y),
            None => {
                let n = self.alg.vertex_count();
                let free: Vec<usize> = (0..n)
                    .filter(|v| !rest.shifted.contains(v))
                    .filter(|&v| rest.modules.iter().all(|&y| self.rigid[y].module.dim_at(v) == 0))
                    .collect();
                if free.len() != 1 {
                    return Err(Error::Internal(format!("{} candidate vertices to shift", free.len())));
                }
                Summand::Shifted(free[0])
            }
        };
        let q = rest.with(added);
        if !self.is_valid(&q)? {
            return Err(Error::Internal(format!("left mutation of {p:?} at {x} produced invalid pair {q:?}")));
        }
        Ok((q, added))
    }
}

impl Lattice {
    /// The lattice of `alg`, computed once and shared.
    pub fn of(alg: &Arc<Algebra>) -> Result<Arc<Lattice>> {
        if let Some(l) = LATTICES.lock().unwrap().get_or_insert_with(HashMap::new).get(&alg.id()) {
            return Ok(l.clone());
        }
        let l = Arc::new(Lattice::build(alg)?);
        let mut g = LATTICES.lock().unwrap();
        let entry = g.as_mut().unwrap().entry(alg.id()).or_insert(l);
        Ok(entry.clone())
    }

    fn build(alg: &Arc<Algebra>) -> Result<Lattice> {
        let n = alg.vertex_count();
        let cap = config::get().node_cap;
        let mut b = Builder {
            alg: alg.clone(),
            catalog: Catalog::of(alg),
            rigid: Vec::new(),
            by_catalog: HashMap::new(),
            hom_tau: HashMap::new(),
            traces: HashMap::new(),
        };
        let mut top = Pair { modules: Vec::new(), shifted: Vec::new() };
        for v in 0..n {
            top.modules.push(b.register(projective(alg, v)?)?);
        }
        top.modules.sort_unstable();
        let mut pairs = vec![top.clone()];
        let mut index = HashMap::from([(top, 0usize)]);
        let mut neighbors: Vec<Vec<(Summand, usize)>> = vec![Vec::new()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(pi) = queue.pop_front() {
            let p = pairs[pi].clone();
            for &x in &p.modules {
                let rest: Vec<usize> = p.modules.iter().copied().filter(|&y| y != x).collect();
                if b.in_gen(x, &rest)? || neighbors[pi].iter().any(|(s, _)| *s == Summand::Module(x)) {
                    continue;
                }
                let (q, added) = b.left_mutation(&p, x)?;
                let qi = match index.get(&q) {
                    Some(&qi) => qi,
                    None => {
                        if pairs.len() >= cap {
                            return Err(Error::NodeCap(cap));
                        }
                        let qi = pairs.len();
                        pairs.push(q.clone());
                        index.insert(q, qi);
                        neighbors.push(Vec::new());
                        queue.push_back(qi);
                        qi
                    }
                };
                neighbors[pi].push((Summand::Module(x), qi));
                neighbors[qi].push((added, pi));
            }
        }
        for (pi, p) in pairs.iter().enumerate() {
            let mut seen: Vec<Summand> = neighbors[pi].iter().map(|(s, _)| *s).collect();
            seen.sort_unstable();
            if seen != {
                let mut s = p.summands();
                s.sort_unstable();
                s
            } {
                return Err(Error::Internal(format!("pair {p:?} is not exchange-complete: {seen:?}")));
            }
        }
        for ns in neighbors.iter_mut() {
            ns.sort_unstable();
        }
        let r = b.rigid.len();
        let mut traces = Vec::with_capacity(r);
        let mut hom_tau = Vec::with_capacity(r);
        for x in 0..r {
            let mut row = Vec::with_capacity(r);
            let mut hrow = Vec::with_capacity(r);
            for y in 0..r {
                row.push(b.trace(x, y)?.clone());
                hrow.push(b.hom_tau_zero(x, y)?);
            }
            traces.push(row);
            hom_tau.push(hrow);
        }
        let mut gen = Vec::with_capacity(pairs.len());
        for p in &pairs {
            let mut row = Vec::with_capacity(r);
            for y in 0..r {
                row.push(b.in_gen(y, &p.modules)?);
            }
            gen.push(row);
        }
        let bottom = pairs
            .iter()
            .position(|p| p.modules.is_empty())
            .ok_or_else(|| Error::Internal("no all-shifted pair".into()))?;
        let mut lat = Lattice {
            alg: alg.clone(),
            catalog: b.catalog,
            rigid: b.rigid,
            by_catalog: b.by_catalog,
            pairs,
            index,
            neighbors,
            traces,
            hom_tau,
            gen,
            hasse: Vec::new(),
            top: 0,
            bottom,
        };
        lat.hasse = lat.covering_relations();
        lat.check_hasse_matches_mutation()?;
        Ok(lat)
    }

    fn covering_relations(&self) -> Vec<(usize, usize)> {
        let m = self.pairs.len();
        let below: Vec<Vec<bool>> =
            (0..m).map(|p| (0..m).map(|q| p != q && self.class_contains(p, q)).collect()).collect();
        let mut out = Vec::new();
        for p in 0..m {
            for q in 0..m {
                if below[p][q] && !(0..m).any(|r| below[p][r] && below[r][q]) {
                    out.push((p, q));
                }
            }
        }
        out
    }

    fn check_hasse_matches_mutation(&self) -> Result<()> {
        let mut from_mutation: Vec<(usize, usize)> = Vec::new();
        for (p, ns) in self.neighbors.iter().enumerate() {
            for &(s, q) in ns {
                if let Summand::Module(x) = s {
                    if !self.gen[q][x] {
                        from_mutation.push((p, q));
                    }
                }
            }
        }
        from_mutation.sort_unstable();
        let mut h = self.hasse.clone();
        h.sort_unstable();
        if h != from_mutation {
            return Err(Error::Internal("Hasse diagram differs from the left mutation graph".into()));
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn catalog(&self) -> &Arc<Catalog> {
        &self.catalog
    }

    pub fn rank(&self) -> usize {
        self.alg.vertex_count()
    }

    pub fn rigid(&self) -> &[RigidIndec] {
        &self.rigid
    }

    pub fn rigid_module(&self, x: usize) -> &Module {
        &self.rigid[x].module
    }

    /// Index of the indecomposable τ-rigid module isomorphic to `m`.
    pub fn rigid_of(&self, m: &Module) -> Result<Option<usize>> {
        Ok(self.catalog.find(m)?.and_then(|c| self.by_catalog.get(&c).copied()))
    }

    pub fn rigid_of_catalog(&self, cid: usize) -> Option<usize> {
        self.by_catalog.get(&cid).copied()
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn pair(&self, p: usize) -> &Pair {
        &self.pairs[p]
    }

    pub fn pair_index(&self, p: &Pair) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn neighbors(&self, p: usize) -> &[(Summand, usize)] {
        &self.neighbors[p]
    }

    /// AIR mutation of pair `p` at one of its summands.
    pub fn mutate(&self, p: usize, s: Summand) -> Result<usize> {
        self.neighbors[p]
            .iter()
            .find(|(t, _)| *t == s)
            .map(|(_, q)| *q)
            .ok_or_else(|| Error::NotApplicable(format!("{s:?} is not a summand of pair {p}")))
    }

    /// `Hom(X_x, τX_y) = 0`.
    pub fn hom_tau_zero(&self, x: usize, y: usize) -> bool {
        self.hom_tau[x][y]
    }

    /// `X_y ∈ Gen(⊕_{x ∈ xs} X_x)`.
    pub fn in_gen(&self, y: usize, xs: &[usize]) -> bool {
        let mut acc: SubSpaces = self.rigid[y].module.dims().iter().map(|&d| Subspace::zero(d)).collect();
        for &x in xs {
            for (a, s) in acc.iter_mut().zip(&self.traces[x][y]) {
                *a = a.sum(s);
            }
        }
        acc.iter().all(Subspace::is_full)
    }

    /// Trace of `X_x` in `X_y`.
    pub fn trace(&self, x: usize, y: usize) -> &SubSpaces {
        &self.traces[x][y]
    }

    /// `X_y` lies in the torsion class of pair `p`.
    pub fn class_has(&self, p: usize, y: usize) -> bool {
        self.gen[p][y]
    }

    /// The torsion class of `p` contains that of `q`.
    pub fn class_contains(&self, p: usize, q: usize) -> bool {
        self.pairs[q].modules.iter().all(|&x| self.gen[p][x])
    }

    pub fn pair_modules(&self, p: usize) -> Vec<Module> {
        self.pairs[p].modules.iter().map(|&x| self.rigid[x].module.clone()).collect()
    }

    pub fn pair_module(&self, p: usize) -> Module {
        let mods = self.pair_modules(p);
        if mods.is_empty() {
            return Module::zero(&self.alg);
        }
        let refs: Vec<&Module> = mods.iter().collect();
        Module::direct_sum(&refs).expect("summands share the algebra")
    }

    /// Pairs with no shifted part.
    pub fn tau_tilting(&self) -> Vec<usize> {
        (0..self.pairs.len()).filter(|&p| self.pairs[p].shifted.is_empty()).collect()
    }

    /// `(T, P)` with `T = ⊕ X_x` is τ-rigid.
    pub fn is_rigid_pair(&self, modules: &[usize], shifted: &[usize]) -> bool {
        modules.iter().all(|&x| modules.iter().all(|&y| self.hom_tau[x][y]))
            && modules.iter().all(|&x| shifted.iter().all(|&v| self.rigid[x].module.dim_at(v) == 0))
    }

    /// The pair whose torsion class is `⊥τT ∩ P^⊥`.
    pub fn bongartz(&self, modules: &[usize], shifted: &[usize]) -> Result<usize> {
        let admissible = |y: usize| {
            modules.iter().all(|&x| self.hom_tau[y][x]) && shifted.iter().all(|&v| self.rigid[y].module.dim_at(v) == 0)
        };
        let inside: Vec<usize> =
            (0..self.pairs.len()).filter(|&p| self.pairs[p].modules.iter().all(|&y| admissible(y))).collect();
        let best = inside
            .iter()
            .copied()
            .find(|&p| inside.iter().all(|&q| self.class_contains(p, q)))
            .ok_or_else(|| Error::Lookup("⊥τT ∩ P^⊥ is not a lattice member".into()))?;
        let pb = &self.pairs[best];
        if !modules.iter().all(|x| pb.modules.contains(x)) {
            return Err(Error::Lookup("Bongartz completion does not contain T".into()));
        }
        Ok(best)
    }

    /// `f_T(X_y)` for `T = ⊕_{x ∈ modules} X_x`, from the cached traces.
    pub fn torsion_free(&self, modules: &[usize], y: usize) -> Module {
        let m = &self.rigid[y].module;
        let mut acc: SubSpaces = m.dims().iter().map(|&d| Subspace::zero(d)).collect();
        for &x in modules {
            for (a, s) in acc.iter_mut().zip(&self.traces[x][y]) {
                *a = a.sum(s);
            }
        }
        quotient_by(m, &acc).0
    }

    /// All indices `y` with `X_y` in the class of `p`.
    pub fn class_members(&self, p: usize) -> Vec<usize> {
        (0..self.rigid.len()).filter(|&y| self.gen[p][y]).collect()
    }

    /// Decomposes a τ-rigid module into rigid indices.
    pub fn rigid_summands(&self, m: &Module) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for (x, mult) in decompose(m)? {
            if mult > 1 {
                return Err(Error::NotApplicable("module is not basic".into()));
            }
            let i = self.rigid_of(&x)?.ok_or_else(|| Error::Lookup("summand is not τ-rigid".into()))?;
            out.push(i);
        }
        out.sort_unstable();
        Ok(out)
    }
}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Lattice({}, {} pairs, {} rigid)", self.alg.name(), self.pairs.len(), self.rigid.len())
    }
}
