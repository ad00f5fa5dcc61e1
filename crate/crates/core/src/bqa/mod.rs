//! Bound quiver algebras with an explicit path basis.
//!
//! An algebra is stored through a basis of paths together with the table of
//! right multiplication by arrows. That table is all that is needed to build
//! projective modules, to check that a representation satisfies the
//! relations, and to multiply arbitrary elements.

mod ideals;
mod presets;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, Weak};

use crate::config;
use crate::error::{Error, Result};
use crate::exactlin::{rref_in_place, Rat};

pub use ideals::{ideal_component, ideal_for_word, ideal_generator, ideal_module, ideal_product, ideal_right_module, IdealSpace};
pub use presets::{auslander_algebra, auslander_dim, auslander_rank, gamma_algebra, idempotent_quotient, single_vertex};

/// Sparse vector over the basis of an algebra: sorted `(index, coefficient)` pairs.
pub type SVec = Vec<(usize, Rat)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for a in &arrows {
            if a.source >= vertices || a.target >= vertices {
                return Err(Error::InvalidQuiver(format!("arrow {} has an endpoint out of range", a.name)));
            }
            if !seen.insert(a.name.clone()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow name {}", a.name)));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }
}

/// A linear combination of parallel paths, each path written as arrow names
/// in composition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Rat, Vec<String>)>,
}

impl Relation {
    pub fn new(terms: Vec<(Rat, Vec<&str>)>) -> Self {
        Relation {
            terms: terms.into_iter().map(|(c, p)| (c, p.into_iter().map(String::from).collect())).collect(),
        }
    }

    pub fn monomial(path: Vec<&str>) -> Self {
        Relation::new(vec![(Rat::one(), path)])
    }

    fn resolve(&self, q: &Quiver) -> Result<Vec<(Rat, Vec<usize>)>> {
        let mut out: Vec<(Rat, Vec<usize>)> = Vec::new();
        let mut ends = None;
        for (c, path) in &self.terms {
            if c.is_zero() {
                continue;
            }
            if path.is_empty() {
                return Err(Error::UnsupportedRelation("relations may not involve trivial paths".into()));
            }
            let idx: Vec<usize> = path
                .iter()
                .map(|n| q.arrow_index(n).ok_or_else(|| Error::InvalidQuiver(format!("unknown arrow {n}"))))
                .collect::<Result<_>>()?;
            for w in idx.windows(2) {
                if q.arrows[w[0]].target != q.arrows[w[1]].source {
                    return Err(Error::InvalidQuiver(format!("path {} is not composable", path.join(""))));
                }
            }
            let e = (q.arrows[idx[0]].source, q.arrows[*idx.last().unwrap()].target);
            if *ends.get_or_insert(e) != e {
                return Err(Error::InvalidQuiver("relation paths are not parallel".into()));
            }
            match out.iter_mut().find(|(_, p)| *p == idx) {
                Some(t) => t.0 = &t.0 + c,
                None => out.push((c.clone(), idx)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        if out.is_empty() {
            return Err(Error::InvalidQuiver("relation is the zero combination".into()));
        }
        let len = out[0].1.len();
        if len < 2 || out.iter().any(|(_, p)| p.len() != len) {
            return Err(Error::UnsupportedRelation(
                "only relations that are combinations of paths of one common length at least 2 are supported".into(),
            ));
        }
        Ok(out)
    }
}

/// A basis element: a path given by arrow indices (empty for an idempotent).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisPath {
    pub arrows: Vec<usize>,
    pub source: usize,
    pub target: usize,
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

pub struct Algebra {
    id: u64,
    name: String,
    quiver: Quiver,
    relations: Option<Vec<Relation>>,
    basis: Vec<BasisPath>,
    pair_index: Vec<Vec<Vec<usize>>>,
    position: Vec<usize>,
    idempotents: Vec<usize>,
    arrow_basis: Vec<usize>,
    rm: Vec<Vec<SVec>>,
    mult: Vec<Vec<SVec>>,
    opposite: OnceLock<Arc<Algebra>>,
    opposite_of: Option<Weak<Algebra>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, {} vertices, dim {})", self.name, self.vertex_count(), self.dim())
    }
}

/// Builds the quotient of the path algebra of `q` by the ideal generated by
/// `rels`, degree by degree.
pub fn build_algebra(name: &str, q: Quiver, rels: Vec<Relation>) -> Result<Arc<Algebra>> {
    build_with_cap(name, q, rels, None)
}

pub fn build_with_cap(name: &str, q: Quiver, rels: Vec<Relation>, cap: Option<usize>) -> Result<Arc<Algebra>> {
    let resolved: Vec<Vec<(Rat, Vec<usize>)>> = rels.iter().map(|r| r.resolve(&q)).collect::<Result<_>>()?;
    let cap = cap.unwrap_or(config::get().length_factor * q.vertices.max(1));
    let mut basis: Vec<BasisPath> = (0..q.vertices).map(|v| BasisPath { arrows: vec![], source: v, target: v }).collect();
    let mut by_degree: Vec<Vec<usize>> = vec![(0..q.vertices).collect()];
    let mut rm: Vec<Vec<SVec>> = vec![vec![Vec::new(); q.arrows.len()]; q.vertices];
    let mut d = 1;
    loop {
        let prev = &by_degree[d - 1];
        let mut cands: Vec<(usize, usize)> = Vec::new();
        let mut cand_index: HashMap<(usize, usize), usize> = HashMap::new();
        for &b in prev {
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.source == basis[b].target {
                    cand_index.insert((b, ai), cands.len());
                    cands.push((b, ai));
                }
            }
        }
        if cands.is_empty() {
            break;
        }
        if d > cap {
            return Err(Error::InfiniteDimensional(cap));
        }
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for rel in &resolved {
            let k = rel[0].1.len();
            if k > d {
                continue;
            }
            let src = q.arrows[rel[0].1[0]].source;
            for &p in &by_degree[d - k] {
                if basis[p].target != src {
                    continue;
                }
                let mut row = vec![Rat::zero(); cands.len()];
                for (c, path) in rel {
                    let mut v: SVec = vec![(p, Rat::one())];
                    for &a in &path[..k - 1] {
                        v = right_mul_arrow(&rm, &v, a);
                    }
                    let last = path[k - 1];
                    for (b, x) in v {
                        let j = cand_index[&(b, last)];
                        row[j] = &row[j] + &(c * &x);
                    }
                }
                rows.push(row);
            }
        }
        let pivots = rref_in_place(&mut rows, cands.len());
        let mut is_pivot = vec![None; cands.len()];
        for (r, &p) in pivots.iter().enumerate() {
            is_pivot[p] = Some(r);
        }
        let mut new_index = vec![usize::MAX; cands.len()];
        let mut this_degree = Vec::new();
        for (j, &(b, a)) in cands.iter().enumerate() {
            if is_pivot[j].is_none() {
                let mut arrows = basis[b].arrows.clone();
                arrows.push(a);
                new_index[j] = basis.len();
                this_degree.push(basis.len());
                basis.push(BasisPath { arrows, source: basis[b].source, target: q.arrows[a].target });
                rm.push(vec![Vec::new(); q.arrows.len()]);
            }
        }
        for (j, &(b, a)) in cands.iter().enumerate() {
            rm[b][a] = match is_pivot[j] {
                None => vec![(new_index[j], Rat::one())],
                Some(r) => {
                    let mut v: SVec = (0..cands.len())
                        .filter(|&f| is_pivot[f].is_none() && !rows[r][f].is_zero())
                        .map(|f| (new_index[f], -&rows[r][f]))
                        .collect();
                    v.sort_by_key(|e| e.0);
                    v
                }
            };
        }
        if this_degree.is_empty() {
            break;
        }
        by_degree.push(this_degree);
        d += 1;
    }
    Algebra::assemble(name, q, Some(rels), basis, rm, None)
}

fn right_mul_arrow(rm: &[Vec<SVec>], v: &SVec, a: usize) -> SVec {
    let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
    for (b, c) in v {
        for (b2, x) in &rm[*b][a] {
            let e = acc.entry(*b2).or_insert_with(Rat::zero);
            *e = &*e + &(c * x);
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl Algebra {
    /// Assembles an algebra from a prefix-closed basis of paths and the table
    /// of right multiplication by arrows. No relations are recorded.
    pub fn from_basis_data(name: &str, q: Quiver, basis: Vec<BasisPath>, rm: Vec<Vec<SVec>>) -> Result<Arc<Algebra>> {
        Algebra::assemble(name, q, None, basis, rm, None)
    }

    fn assemble(
        name: &str,
        quiver: Quiver,
        relations: Option<Vec<Relation>>,
        basis: Vec<BasisPath>,
        rm: Vec<Vec<SVec>>,
        opposite_of: Option<Weak<Algebra>>,
    ) -> Result<Arc<Algebra>> {
        let n = quiver.vertices;
        let mut pair_index = vec![vec![Vec::new(); n]; n];
        let mut position = vec![0; basis.len()];
        let mut idempotents = vec![usize::MAX; n];
        let mut arrow_basis = vec![usize::MAX; quiver.arrows.len()];
        for (i, b) in basis.iter().enumerate() {
            position[i] = pair_index[b.source][b.target].len();
            pair_index[b.source][b.target].push(i);
            match b.arrows.len() {
                0 => idempotents[b.source] = i,
                1 => arrow_basis[b.arrows[0]] = i,
                _ => {}
            }
        }
        if idempotents.contains(&usize::MAX) {
            return Err(Error::Internal("basis lacks an idempotent".into()));
        }
        if arrow_basis.contains(&usize::MAX) {
            return Err(Error::UnsupportedRelation("an arrow became dependent in the quotient".into()));
        }
        let dim = basis.len();
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for x in 0..dim {
            for y in 0..dim {
                if basis[x].target != basis[y].source {
                    continue;
                }
                let mut v: SVec = vec![(x, Rat::one())];
                for &a in &basis[y].arrows {
                    v = right_mul_arrow(&rm, &v, a);
                }
                mult[x][y] = v;
            }
        }
        Ok(Arc::new(Algebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            name: name.to_string(),
            quiver,
            relations,
            basis,
            pair_index,
            position,
            idempotents,
            arrow_basis,
            rm,
            mult,
            opposite: OnceLock::new(),
            opposite_of,
        }))
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Defining relations; empty for algebras assembled from basis data.
    pub fn relations(&self) -> &[Relation] {
        self.relations.as_deref().unwrap_or(&[])
    }

    /// Whether the algebra came from a quiver with relations.
    pub fn is_presented(&self) -> bool {
        self.relations.is_some()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.quiver.arrows
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisPath] {
        &self.basis
    }

    /// Basis indices of `e_i A e_j`, i.e. paths from `i` to `j`.
    pub fn paths(&self, i: usize, j: usize) -> &[usize] {
        &self.pair_index[i][j]
    }

    /// Position of a basis element inside its `paths(source, target)` list.
    pub fn position(&self, b: usize) -> usize {
        self.position[b]
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn arrow_element(&self, a: usize) -> usize {
        self.arrow_basis[a]
    }

    /// `b · α` in the basis.
    pub fn right_mul(&self, b: usize, a: usize) -> &SVec {
        &self.rm[b][a]
    }

    /// Product of two basis elements.
    pub fn mul(&self, x: usize, y: usize) -> &SVec {
        &self.mult[x][y]
    }

    /// Product of two arbitrary elements.
    pub fn mul_elems(&self, x: &SVec, y: &SVec) -> SVec {
        let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                let ab = a * b;
                for (k, c) in &self.mult[*i][*j] {
                    let e = acc.entry(*k).or_insert_with(Rat::zero);
                    *e = &*e + &(&ab * c);
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn path_label(&self, b: usize) -> String {
        let p = &self.basis[b];
        if p.arrows.is_empty() {
            format!("e{}", p.source + 1)
        } else {
            p.arrows.iter().map(|&a| self.quiver.arrows[a].name.as_str()).collect()
        }
    }

    /// Exhaustive check of associativity on basis triples.
    pub fn check_associativity(&self) -> bool {
        let n = self.dim();
        for x in 0..n {
            for y in 0..n {
                let xy = &self.mult[x][y];
                for z in 0..n {
                    let left = self.mul_elems(xy, &vec![(z, Rat::one())]);
                    let right = self.mul_elems(&vec![(x, Rat::one())], &self.mult[y][z]);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The opposite algebra: arrows reversed, basis paths reversed.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        if let Some(w) = &self.opposite_of {
            if let Some(a) = w.upgrade() {
                return a;
            }
        }
        self.opposite
            .get_or_init(|| {
                let quiver = Quiver {
                    vertices: self.quiver.vertices,
                    arrows: self
                        .quiver
                        .arrows
                        .iter()
                        .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                        .collect(),
                };
                let basis: Vec<BasisPath> = self
                    .basis
                    .iter()
                    .map(|p| BasisPath {
                        arrows: p.arrows.iter().rev().copied().collect(),
                        source: p.target,
                        target: p.source,
                    })
                    .collect();
                let rm: Vec<Vec<SVec>> = (0..self.dim())
                    .map(|b| (0..quiver.arrows.len()).map(|a| self.mult[self.arrow_basis[a]][b].clone()).collect())
                    .collect();
                Algebra::assemble(&format!("{}^op", self.name), quiver, None, basis, rm, Some(Arc::downgrade(self)))
                    .expect("opposite of a valid algebra is valid")
            })
            .clone()
    }

    /// `dim e_i A e_j` for all pairs.
    pub fn pair_dims(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        (0..n).map(|i| (0..n).map(|j| self.pair_index[i][j].len()).collect()).collect()
    }
}

/// Two handles refer to the same algebra.
pub fn same_algebra(a: &Algebra, b: &Algebra) -> bool {
    a.id == b.id
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow(name: &str, s: usize, t: usize) -> Arrow {
        Arrow { name: name.into(), source: s, target: t }
    }

    #[test]
    fn a2_by_hand() {
        let q = Quiver::new(2, vec![arrow("a", 0, 1), arrow("b", 1, 0)]).unwrap();
        let a = build_algebra("A2", q, vec![Relation::monomial(vec!["a", "b"])]).unwrap();
        assert_eq!(a.dim(), 5);
        let labels: Vec<String> = (0..5).map(|b| a.path_label(b)).collect();
        assert_eq!(labels, vec!["e1", "e2", "a", "b", "ba"]);
        assert!(a.check_associativity());
    }

    #[test]
    fn gamma_and_trivial() {
        let q = Quiver::new(3, vec![arrow("a", 0, 1), arrow("b", 1, 2)]).unwrap();
        let g = build_algebra("Gamma", q, vec![Relation::monomial(vec!["a", "b"])]).unwrap();
        assert_eq!(g.dim(), 5);
        let k = build_algebra("K", Quiver::new(1, vec![]).unwrap(), vec![]).unwrap();
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn infinite_dimensional_is_detected() {
        let q = Quiver::new(1, vec![arrow("x", 0, 0)]).unwrap();
        assert!(matches!(build_algebra("K[x]", q, vec![]), Err(Error::InfiniteDimensional(_))));
        let q = Quiver::new(1, vec![arrow("x", 0, 0)]).unwrap();
        let trunc = build_algebra("K[x]/x^3", q, vec![Relation::monomial(vec!["x", "x", "x"])]).unwrap();
        assert_eq!(trunc.dim(), 3);
    }

    #[test]
    fn rejects_bad_relations() {
        let q = Quiver::new(2, vec![arrow("a", 0, 1), arrow("b", 1, 0)]).unwrap();
        let mixed = Relation::new(vec![(Rat::one(), vec!["a", "b"]), (Rat::one(), vec![])]);
        assert!(build_algebra("x", q.clone(), vec![mixed]).is_err());
        let not_parallel = Relation::new(vec![(Rat::one(), vec!["a", "b"]), (Rat::one(), vec!["b", "a"])]);
        assert!(build_algebra("x", q, vec![not_parallel]).is_err());
    }

    #[test]
    fn opposite_round_trip() {
        let a = auslander_algebra(3).unwrap();
        let op = a.opposite();
        assert_eq!(op.dim(), a.dim());
        assert!(op.check_associativity());
        assert!(Arc::ptr_eq(&op.opposite(), &a));
    }
}
