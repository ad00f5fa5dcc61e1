use super::{Module, Morphism};
use crate::exactlin::{is_zero_vec, unit, Mat, Subspace, Vector};

/// One subspace per vertex.
pub type SubSpaces = Vec<Subspace>;

/// The smallest submodule containing the given vertex-graded vectors.
pub fn submodule_generated(m: &Module, gens: &[(usize, Vector)]) -> SubSpaces {
    let alg = m.algebra();
    let mut spaces: SubSpaces = m.dims.iter().map(|&d| Subspace::zero(d)).collect();
    let mut stack: Vec<(usize, Vector)> = gens.to_vec();
    while let Some((v, x)) = stack.pop() {
        if is_zero_vec(&x) || !spaces[v].insert(&x) {
            continue;
        }
        for (ai, a) in alg.arrows().iter().enumerate() {
            if a.source == v && m.dims[a.target] > 0 {
                stack.push((a.target, m.maps[ai].mul_vec(&x)));
            }
        }
    }
    spaces
}

fn basis_matrix(s: &Subspace) -> Mat {
    Mat::from_cols(s.ambient(), s.basis())
}

/// Realizes a submodule (given by arrow-stable subspaces) with its inclusion.
pub fn submodule_of(m: &Module, spaces: &SubSpaces) -> (Module, Morphism) {
    let alg = m.algebra();
    let dims: Vec<usize> = spaces.iter().map(Subspace::dim).collect();
    let incl: Vec<Mat> = spaces.iter().map(basis_matrix).collect();
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let (i, j) = (a.source, a.target);
            let mut x = Mat::zeros(dims[j], dims[i]);
            for (c, b) in spaces[i].basis().iter().enumerate() {
                let img = m.maps[ai].mul_vec(b);
                let coords = spaces[j].coordinates(&img).expect("subspaces are not arrow-stable");
                for (r, y) in coords.into_iter().enumerate() {
                    x[(r, c)] = y;
                }
            }
            x
        })
        .collect();
    (Module::from_parts(alg.clone(), dims, maps), Morphism { comps: incl })
}

/// Realizes `M / U` with its projection. Coordinates on the quotient are the
/// non-pivot coordinates of the echelon residue.
pub fn quotient_by(m: &Module, spaces: &SubSpaces) -> (Module, Morphism) {
    let alg = m.algebra();
    let comps: Vec<Vec<usize>> = spaces.iter().map(Subspace::complement_indices).collect();
    let dims: Vec<usize> = comps.iter().map(Vec::len).collect();
    let proj: Vec<Mat> = (0..m.dims.len())
        .map(|v| {
            let mut q = Mat::zeros(dims[v], m.dims[v]);
            for i in 0..m.dims[v] {
                let r = spaces[v].residue(&unit(m.dims[v], i));
                for (k, &c) in comps[v].iter().enumerate() {
                    q[(k, i)] = r[c].clone();
                }
            }
            q
        })
        .collect();
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let (i, j) = (a.source, a.target);
            let lifted = m.maps[ai].select_cols(&comps[i]);
            proj[j].mul(&lifted)
        })
        .collect();
    (Module::from_parts(alg.clone(), dims, maps), Morphism { comps: proj })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Submodule,
    Quotient,
}

/// Submodule generated by vectors with its inclusion, or the quotient by it
/// with the projection.
pub fn sub_quot(m: &Module, gens: &[(usize, Vector)], side: Side) -> (Module, Morphism) {
    let spaces = submodule_generated(m, gens);
    match side {
        Side::Submodule => submodule_of(m, &spaces),
        Side::Quotient => quotient_by(m, &spaces),
    }
}

fn kernel_spaces(f: &Morphism, m: &Module) -> SubSpaces {
    f.comps.iter().zip(&m.dims).map(|(c, &d)| Subspace::span(d, c.kernel_basis())).collect()
}

pub(crate) fn image_spaces(f: &Morphism, n: &Module) -> SubSpaces {
    f.comps.iter().zip(&n.dims).map(|(c, &d)| Subspace::span(d, c.columns())).collect()
}

pub fn kernel(f: &Morphism, m: &Module) -> (Module, Morphism) {
    submodule_of(m, &kernel_spaces(f, m))
}

pub fn image(f: &Morphism, n: &Module) -> (Module, Morphism) {
    submodule_of(n, &image_spaces(f, n))
}

pub fn cokernel(f: &Morphism, n: &Module) -> (Module, Morphism) {
    quotient_by(n, &image_spaces(f, n))
}

#[derive(Clone, Debug)]
pub struct MorphismParts {
    pub kernel: (Module, Morphism),
    pub image: (Module, Morphism),
    pub cokernel: (Module, Morphism),
}

pub fn morphism_parts(f: &Morphism, m: &Module, n: &Module) -> MorphismParts {
    let parts = MorphismParts { kernel: kernel(f, m), image: image(f, n), cokernel: cokernel(f, n) };
    for v in 0..m.dims.len() {
        debug_assert_eq!(parts.kernel.0.dims[v] + parts.image.0.dims[v], m.dims[v]);
        debug_assert_eq!(parts.image.0.dims[v] + parts.cokernel.0.dims[v], n.dims[v]);
    }
    parts
}

#[derive(Clone, Debug)]
pub struct RadTopSoc {
    pub radical: (Module, Morphism),
    pub top: (Module, Morphism),
    pub socle: (Module, Morphism),
    pub rad_spaces: SubSpaces,
}

/// Radical (images of arrows), top and socle (common kernel of all arrows).
pub fn rad_top_soc(m: &Module) -> RadTopSoc {
    let rad_spaces = radical_spaces(m);
    let alg = m.algebra();
    let soc: SubSpaces = (0..m.dims.len())
        .map(|v| {
            let outgoing: Vec<&Mat> = alg
                .arrows()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.source == v)
                .map(|(ai, _)| &m.maps[ai])
                .collect();
            if outgoing.is_empty() {
                return Subspace::full(m.dims[v]);
            }
            let mut stacked = outgoing[0].clone();
            for o in &outgoing[1..] {
                stacked = stacked.vstack(o);
            }
            Subspace::span(m.dims[v], stacked.kernel_basis())
        })
        .collect();
    RadTopSoc {
        radical: submodule_of(m, &rad_spaces),
        top: quotient_by(m, &rad_spaces),
        socle: submodule_of(m, &soc),
        rad_spaces,
    }
}

pub(crate) fn radical_spaces(m: &Module) -> SubSpaces {
    let alg = m.algebra();
    let mut spaces: SubSpaces = m.dims.iter().map(|&d| Subspace::zero(d)).collect();
    for (ai, a) in alg.arrows().iter().enumerate() {
        for c in m.maps[ai].columns() {
            spaces[a.target].insert(&c);
        }
    }
    spaces
}

/// Vectors of `M` representing a basis of its top, vertex by vertex.
pub fn top_generators(m: &Module) -> Vec<(usize, Vector)> {
    let rad = radical_spaces(m);
    let mut gens = Vec::new();
    for (v, s) in rad.iter().enumerate() {
        for i in s.complement_indices() {
            gens.push((v, unit(m.dims[v], i)));
        }
    }
    gens
}

