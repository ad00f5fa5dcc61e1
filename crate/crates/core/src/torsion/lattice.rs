//! Torsion classes as members of the support τ-tilting lattice.

use std::sync::Arc;

use super::in_gen_of;
use crate::error::{Error, Result};
use crate::modrep::Module;
use crate::tautilt::Lattice;

/// The torsion class `Gen M` of a lattice pair `(M, P)`.
#[derive(Clone, Debug)]
pub struct TorsionClass {
    pub lattice: Arc<Lattice>,
    pub pair: usize,
}

impl TorsionClass {
    pub fn contains(&self, x: &Module) -> Result<bool> {
        if x.is_zero() {
            return Ok(true);
        }
        in_gen_of(x, &self.lattice.pair_modules(self.pair))
    }
}

/// The smallest lattice class containing `g`.
pub fn smallest_torsion_class(lat: &Arc<Lattice>, g: &Module) -> Result<TorsionClass> {
    let mut containing = Vec::new();
    for p in 0..lat.pairs().len() {
        let c = TorsionClass { lattice: lat.clone(), pair: p };
        if c.contains(g)? {
            containing.push(p);
        }
    }
    let best = containing
        .iter()
        .copied()
        .find(|&p| containing.iter().all(|&q| lat.class_contains(q, p)))
        .ok_or_else(|| Error::Lookup("no smallest torsion class containing the module".into()))?;
    Ok(TorsionClass { lattice: lat.clone(), pair: best })
}

/// The Ext-projectives `P(T)` of a class, split into `P_s` and `P_ns`, as
/// rigid indices of the lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtProjectives {
    pub all: Vec<usize>,
    pub split: Vec<usize>,
    pub nonsplit: Vec<usize>,
}

/// An indecomposable Ext-projective `X` is split projective iff `X ∉ Gen(P/X)`.
pub fn ext_projectives(class: &TorsionClass) -> ExtProjectives {
    let lat = &class.lattice;
    let all = lat.pair(class.pair).modules.clone();
    let (mut split, mut nonsplit) = (Vec::new(), Vec::new());
    for &x in &all {
        let rest: Vec<usize> = all.iter().copied().filter(|&y| y != x).collect();
        if lat.in_gen(x, &rest) {
            nonsplit.push(x);
        } else {
            split.push(x);
        }
    }
    ExtProjectives { all, split, nonsplit }
}
