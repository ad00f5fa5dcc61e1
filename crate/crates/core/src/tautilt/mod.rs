//! τ-rigid pairs, support τ-tilting enumeration and AIR mutation, Bongartz
//! completion, τ-perpendicular categories and classical tilting modules.

mod lattice;
mod perp;
mod tilting;

pub use lattice::{Lattice, Pair, RigidIndec, Summand};
pub use perp::{f_inverse, perpendicular_category, PerpCat};
pub use tilting::{enumerate_tilting, is_classical_tilting, tilting_mutation, TiltingModule};

use crate::error::Result;
use crate::homology::tau;
use crate::modrep::{hom_is_zero, Module};

/// A τ-rigid pair `(T, P)` given by modules and shifted projective vertices.
#[derive(Clone, Debug)]
pub struct TauRigidPair {
    pub module: Module,
    pub shifted: Vec<usize>,
}

/// `Hom(M, τM) = 0`.
pub fn is_tau_rigid(m: &Module) -> Result<bool> {
    hom_is_zero(m, &tau(m)?)
}

/// `Hom(T, τT) = 0` and `Hom(P(v), T) = 0` for all shifted `v`.
pub fn is_pair_valid(p: &TauRigidPair) -> Result<bool> {
    if p.shifted.iter().any(|&v| v >= p.module.algebra().vertex_count() || p.module.dim_at(v) != 0) {
        return Ok(false);
    }
    is_tau_rigid(&p.module)
}

/// The lattice pair of a support τ-tilting pair given by modules.
pub fn pair_of(lat: &Lattice, p: &TauRigidPair) -> Result<Option<usize>> {
    let mut shifted = p.shifted.clone();
    shifted.sort_unstable();
    let modules = if p.module.is_zero() { Vec::new() } else { lat.rigid_summands(&p.module)? };
    Ok(lat.pair_index(&Pair { modules, shifted }))
}

/// Support τ-tilting pairs of `alg` with the Hasse diagram of their torsion
/// classes; shared with every other caller.
pub fn enumerate_sttilt(alg: &std::sync::Arc<crate::bqa::Algebra>) -> Result<std::sync::Arc<Lattice>> {
    Lattice::of(alg)
}

/// AIR mutation of the lattice pair `p` at summand `s`.
pub fn air_mutate(lat: &Lattice, p: usize, s: Summand) -> Result<usize> {
    lat.mutate(p, s)
}

/// The Bongartz completion of a τ-rigid module.
pub fn bongartz_completion(lat: &Lattice, m: &Module) -> Result<usize> {
    let modules = if m.is_zero() { Vec::new() } else { lat.rigid_summands(m)? };
    lat.bongartz(&modules, &[])
}
