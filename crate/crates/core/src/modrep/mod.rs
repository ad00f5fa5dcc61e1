//! Right modules over a bound quiver algebra, given as representations, and
//! the morphisms between them.

mod catalog;
mod decompose;
mod hom;
mod iso;
mod sub;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::bqa::{same_algebra, Algebra, SVec};
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Rat, Vector};

pub use catalog::Catalog;
pub use decompose::{decompose, end_radical, indecomposable_summands, is_indecomposable, split_once};
pub use hom::{hom_basis, hom_dim, hom_is_zero, hom_space, HomSpace};
pub use iso::{is_isomorphic, is_isomorphic_indecomposable};
pub use sub::{
    cokernel, image, kernel, morphism_parts, quotient_by, rad_top_soc, sub_quot, submodule_generated, submodule_of,
    top_generators, MorphismParts, RadTopSoc, Side, SubSpaces,
};

/// A finite-dimensional right module: a vector space per vertex and a matrix
/// per arrow (`dim M_target × dim M_source`).
#[derive(Clone)]
pub struct Module {
    alg: Arc<Algebra>,
    dims: Vec<usize>,
    maps: Vec<Mat>,
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.alg, &other.alg) && self.dims == other.dims && self.maps == other.maps
    }
}

impl Eq for Module {}

impl Hash for Module {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.alg.id().hash(state);
        self.dims.hash(state);
        self.maps.hash(state);
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module{:?}", self.dims)?;
        if self.total_dim() > 0 {
            write!(f, "{{")?;
            let mut first = true;
            for (a, m) in self.alg.arrows().iter().zip(&self.maps) {
                if m.rows() * m.cols() == 0 {
                    continue;
                }
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "{}: {:?}", a.name, m)?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

impl Module {
    /// Builds a module and checks shapes and relations.
    pub fn new(alg: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Mat>) -> Result<Module> {
        if dims.len() != alg.vertex_count() || maps.len() != alg.arrows().len() {
            return Err(Error::InvalidModule("wrong number of vertices or arrows".into()));
        }
        for (a, m) in alg.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::InvalidModule(format!("matrix for {} has the wrong shape", a.name)));
            }
        }
        let m = Module { alg, dims, maps };
        if let Some(bad) = m.relation_failure() {
            return Err(Error::InvalidModule(format!("relation violated at {bad}")));
        }
        Ok(m)
    }

    /// Trusted constructor for internal constructions that preserve relations.
    pub(crate) fn from_parts(alg: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Mat>) -> Module {
        let m = Module { alg, dims, maps };
        debug_assert!(m.relation_failure().is_none(), "internal construction broke a relation");
        m
    }

    pub fn zero(alg: &Arc<Algebra>) -> Module {
        let dims = vec![0; alg.vertex_count()];
        let maps = alg.arrows().iter().map(|_| Mat::zeros(0, 0)).collect();
        Module { alg: alg.clone(), dims, maps }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn is_thin(&self) -> bool {
        self.dims.iter().all(|&d| d <= 1)
    }

    pub fn map(&self, arrow: usize) -> &Mat {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    /// Action of the basis path `b` as a matrix `M_source(b) → M_target(b)`.
    pub fn act(&self, b: usize) -> Mat {
        let p = &self.alg.basis()[b];
        let mut m = Mat::identity(self.dims[p.source]);
        for &a in &p.arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// Action of an element of `e_v A e_w` as a matrix `M_v → M_w`.
    pub fn act_elem(&self, x: &SVec, v: usize, w: usize) -> Mat {
        let mut m = Mat::zeros(self.dims[w], self.dims[v]);
        for (b, c) in x {
            let p = &self.alg.basis()[*b];
            debug_assert!(p.source == v && p.target == w);
            m = m.add(&self.act(*b).scale(c));
        }
        m
    }

    /// First basis product `b·α` whose action disagrees with its normal form.
    fn relation_failure(&self) -> Option<String> {
        let alg = &self.alg;
        for b in 0..alg.dim() {
            let p = &alg.basis()[b];
            let mb = self.act(b);
            for (ai, a) in alg.arrows().iter().enumerate() {
                if a.source != p.target {
                    continue;
                }
                let lhs = self.maps[ai].mul(&mb);
                let rhs = self.act_elem(alg.right_mul(b, ai), p.source, a.target);
                if lhs != rhs {
                    return Some(format!("{}·{}", alg.path_label(b), a.name));
                }
            }
        }
        None
    }

    pub fn satisfies_relations(&self) -> bool {
        self.relation_failure().is_none()
    }

    /// Offsets of the vertex blocks in the flattened total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims.len() + 1);
        let mut acc = 0;
        for &d in &self.dims {
            off.push(acc);
            acc += d;
        }
        off.push(acc);
        off
    }

    pub fn direct_sum(parts: &[&Module]) -> Result<Module> {
        Ok(direct_sum_with_maps(parts)?.0)
    }

    /// The `k`-fold direct sum of `self`.
    pub fn power(&self, k: usize) -> Module {
        let parts: Vec<&Module> = std::iter::repeat_n(self, k).collect();
        if parts.is_empty() {
            return Module::zero(&self.alg);
        }
        Module::direct_sum(&parts).expect("same algebra")
    }

    pub fn relabel_algebra(&self, alg: Arc<Algebra>) -> Result<Module> {
        Module::new(alg, self.dims.clone(), self.maps.clone())
    }
}

/// Direct sum with the canonical inclusions and projections.
pub fn direct_sum_with_maps(parts: &[&Module]) -> Result<(Module, Vec<Morphism>, Vec<Morphism>)> {
    let Some(first) = parts.first() else {
        return Err(Error::InvalidModule("empty direct sum needs an algebra".into()));
    };
    let alg = first.alg.clone();
    if parts.iter().any(|m| !same_algebra(&m.alg, &alg)) {
        return Err(Error::AlgebraMismatch);
    }
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|m| m.dims[v]).sum()).collect();
    let maps: Vec<Mat> = (0..alg.arrows().len())
        .map(|a| {
            let blocks: Vec<&Mat> = parts.iter().map(|m| &m.maps[a]).collect();
            Mat::block_diag(&blocks)
        })
        .collect();
    let sum = Module { alg: alg.clone(), dims, maps };
    let mut incl = Vec::new();
    let mut proj = Vec::new();
    let mut start = vec![0usize; n];
    for m in parts {
        let mut ic = Vec::new();
        let mut pc = Vec::new();
        for v in 0..n {
            let mut i = Mat::zeros(sum.dims[v], m.dims[v]);
            for k in 0..m.dims[v] {
                i[(start[v] + k, k)] = Rat::one();
            }
            pc.push(i.transpose());
            ic.push(i);
            start[v] += m.dims[v];
        }
        incl.push(Morphism { comps: ic });
        proj.push(Morphism { comps: pc });
    }
    Ok((sum, incl, proj))
}

/// A module homomorphism given by one matrix per vertex. Source and target are
/// carried by the caller.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub comps: Vec<Mat>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism{:?}", self.comps)
    }
}

impl Morphism {
    pub fn zero(m: &Module, n: &Module) -> Morphism {
        Morphism { comps: (0..m.dims.len()).map(|v| Mat::zeros(n.dims[v], m.dims[v])).collect() }
    }

    pub fn identity(m: &Module) -> Morphism {
        Morphism { comps: m.dims.iter().map(|&d| Mat::identity(d)).collect() }
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &Morphism) -> Morphism {
        Morphism { comps: self.comps.iter().zip(&f.comps).map(|(g, f)| g.mul(f)).collect() }
    }

    pub fn add(&self, g: &Morphism) -> Morphism {
        Morphism { comps: self.comps.iter().zip(&g.comps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Morphism {
        Morphism { comps: self.comps.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Mat::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.comps.iter().map(Mat::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(|c| c.is_square() && c.rank() == c.rows())
    }

    /// Concatenation of all entries, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vector {
        self.comps.iter().flat_map(|c| c.entries().iter().cloned()).collect()
    }

    pub fn from_flat(m: &Module, n: &Module, v: &[Rat]) -> Morphism {
        let mut comps = Vec::with_capacity(m.dims.len());
        let mut off = 0;
        for k in 0..m.dims.len() {
            let (r, c) = (n.dims[k], m.dims[k]);
            comps.push(Mat::from_vec(r, c, v[off..off + r * c].to_vec()));
            off += r * c;
        }
        Morphism { comps }
    }

    /// Checks shapes and the intertwining identities.
    pub fn is_morphism(&self, m: &Module, n: &Module) -> bool {
        if self.comps.len() != m.dims.len() {
            return false;
        }
        for (v, c) in self.comps.iter().enumerate() {
            if c.rows() != n.dims[v] || c.cols() != m.dims[v] {
                return false;
            }
        }
        m.alg.arrows().iter().enumerate().all(|(ai, a)| {
            n.maps[ai].mul(&self.comps[a.source]) == self.comps[a.target].mul(&m.maps[ai])
        })
    }

    /// The block-diagonal morphism between direct sums.
    pub fn direct_sum(parts: &[&Morphism]) -> Morphism {
        let n = parts[0].comps.len();
        Morphism {
            comps: (0..n)
                .map(|v| {
                    let blocks: Vec<&Mat> = parts.iter().map(|f| &f.comps[v]).collect();
                    Mat::block_diag(&blocks)
                })
                .collect(),
        }
    }

    /// A morphism from a direct sum given by its restrictions to the summands.
    pub fn from_sum(parts: &[&Morphism]) -> Morphism {
        let n = parts[0].comps.len();
        Morphism {
            comps: (0..n)
                .map(|v| {
                    let mut acc = parts[0].comps[v].clone();
                    for f in &parts[1..] {
                        acc = acc.hstack(&f.comps[v]);
                    }
                    acc
                })
                .collect(),
        }
    }

    /// A morphism into a direct sum given by its components.
    pub fn into_sum(parts: &[&Morphism]) -> Morphism {
        let n = parts[0].comps.len();
        Morphism {
            comps: (0..n)
                .map(|v| {
                    let mut acc = parts[0].comps[v].clone();
                    for f in &parts[1..] {
                        acc = acc.vstack(&f.comps[v]);
                    }
                    acc
                })
                .collect(),
        }
    }
}

pub fn check_same(m: &Module, n: &Module) -> Result<()> {
    if same_algebra(&m.alg, &n.alg) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}
