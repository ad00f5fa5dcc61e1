//! Regularity of τ-exceptional pairs and φ-mutation of complete
//! τ-exceptional sequences.
//!
//! Mutation at position `i` descends through `J(M_1)`, `J(M_2)`, … to the
//! category in which `(M_i, M_{i-1})` are the two rightmost terms, mutates
//! the pair there and transports the result back.

use serde::Serialize;

use super::{is_exceptional_sequence, Descent, Dir, SeqCategory};
use crate::bqa::auslander_rank;
use crate::error::{Error, Result};
use crate::homology::is_projective;
use crate::modrep::Module;
use crate::tautilt::{f_inverse, perpendicular_category, Lattice};
use crate::torsion::{ext_projectives, smallest_torsion_class};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Regularity {
    pub left_regular: bool,
    pub right_regular: bool,
}

struct PairData {
    c: usize,
    x: usize,
    c_projective: bool,
    left_regular: bool,
    right_regular: bool,
}

fn pair_data(lat: &Lattice, b: &Module, c: &Module) -> Result<PairData> {
    let ci = lat.rigid_of(c)?.ok_or_else(|| Error::NotApplicable("C is not τ-rigid".into()))?;
    let x = f_inverse(lat, &[ci], b)?;
    let c_projective = is_projective(c)?;
    let left_regular = c_projective || !lat.pair(lat.bongartz(&[x], &[])?).modules.contains(&ci);
    let right_regular = lat.pair(lat.bongartz(&[ci], &[])?).modules.contains(&x) || !lat.in_gen(ci, &[x]);
    Ok(PairData { c: ci, x, c_projective, left_regular, right_regular })
}

/// Regularity of the τ-exceptional pair `(B, C)` in the module category of
/// the lattice's algebra, with `X = f_C^{-1}(B)`: left regular iff `C` is
/// projective or `C ∉ P(⊥τX)`; right regular iff `X ∈ P(⊥τC)` or `C ∉ Gen X`.
pub fn classify_regularity(lat: &Lattice, b: &Module, c: &Module) -> Result<Regularity> {
    let d = pair_data(lat, b, c)?;
    Ok(Regularity { left_regular: d.left_regular, right_regular: d.right_regular })
}

/// Regularity of `(M_i, M_{i-1})` inside `J(M_{i-2}, …, M_1)`.
pub fn regularity_at(cat: &SeqCategory, s: usize, i: usize) -> Result<Regularity> {
    check_position(cat, s, i)?;
    if i == 2 {
        let m = cat.modules(s);
        return classify_regularity(cat.lattice(), &m[1], &m[0]);
    }
    let (d, cs) = descend(cat, s)?;
    regularity_at(&d.child, cs, i - 1)
}

fn check_position(cat: &SeqCategory, s: usize, i: usize) -> Result<()> {
    let n = cat.seqs()[s].terms.len();
    if i < 2 || i > n {
        return Err(Error::NotApplicable(format!("position {i} outside 2..={n}")));
    }
    Ok(())
}

fn descend(cat: &SeqCategory, s: usize) -> Result<(Descent, usize)> {
    let terms = &cat.seqs()[s].terms;
    let d = Descent::of(cat, terms[0])?;
    let tail = d.down(cat, &terms[1..])?;
    let cs = d
        .child
        .find(&tail)
        .ok_or_else(|| Error::Internal("transported tail is not a complete τ-exceptional sequence".into()))?;
    Ok((d, cs))
}

fn ascend(cat: &SeqCategory, s: usize, d: &Descent, r: usize) -> Result<usize> {
    let mut terms = vec![cat.seqs()[s].terms[0]];
    terms.extend(d.up(cat, &d.child.seqs()[r].terms)?);
    cat.find(&terms).ok_or_else(|| Error::Internal("transported mutation is not a complete τ-exceptional sequence".into()))
}

/// Left or right φ-mutation of sequence `s` of `cat` at position `i`,
/// returned as an index into `cat`.
pub fn phi_mutate(cat: &SeqCategory, s: usize, i: usize, dir: Dir) -> Result<usize> {
    match dir {
        Dir::Left => left(cat, s, i),
        Dir::Right => right(cat, s, i),
    }
}

fn left(cat: &SeqCategory, s: usize, i: usize) -> Result<usize> {
    check_position(cat, s, i)?;
    if let Some(r) = cat.memo_left((s, i)) {
        return Ok(r);
    }
    let r = if i == 2 {
        left_pair(cat, s)?
    } else {
        let (d, cs) = descend(cat, s)?;
        let r = left(&d.child, cs, i - 1)?;
        ascend(cat, s, &d, r)?
    };
    cat.store_left((s, i), r);
    Ok(r)
}

/// The unique sequence agreeing with `probe` outside 0-based position `free`.
fn complete(cat: &SeqCategory, probe: &[usize], free: usize) -> Result<usize> {
    match cat.complete_at(probe, free).as_slice() {
        [r] => Ok(*r),
        hits => Err(Error::Internal(format!("uniqueness completion found {} candidates", hits.len()))),
    }
}

fn left_pair(cat: &SeqCategory, s: usize) -> Result<usize> {
    let lat = cat.lattice();
    let terms = &cat.seqs()[s].terms;
    let m = cat.modules(s);
    let d = pair_data(lat, &m[1], &m[0])?;
    if d.left_regular {
        let b_hat = if d.c_projective { terms[1] } else { lat.rigid()[d.x].catalog_id };
        let mut probe = terms.clone();
        probe[0] = b_hat;
        return complete(cat, &probe, 1);
    }
    let (x, y) = irregular_xy(lat, d.x, d.c)?;
    let mut out = terms.clone();
    out[0] = lat.rigid()[y].catalog_id;
    out[1] = lat.catalog().intern(&lat.torsion_free(&[y], x))?;
    cat.find(&out).ok_or_else(|| Error::Internal("left irregular φ-mutation left the enumerated sequences".into()))
}

/// `X = P_s(Gen P_ns(T(J(U))))` and `Y = P_ns(T(J(U))) / X` for
/// `U = f_C^{-1}(B) ⊕ C`, as rigid indices.
fn irregular_xy(lat: &std::sync::Arc<Lattice>, x: usize, c: usize) -> Result<(usize, usize)> {
    let j = perpendicular_category(lat, &[x, c], &[])?;
    let tj = smallest_torsion_class(lat, &j.proj_gen())?;
    let ns = ext_projectives(&tj).nonsplit;
    let ns_mods: Vec<&Module> = ns.iter().map(|&k| lat.rigid_module(k)).collect();
    let sum = if ns_mods.is_empty() { Module::zero(lat.algebra()) } else { Module::direct_sum(&ns_mods)? };
    let split = ext_projectives(&smallest_torsion_class(lat, &sum)?).split;
    let [xx] = split.as_slice() else {
        return Err(Error::Internal(format!("irregular mutation: {} split projectives", split.len())));
    };
    let rest: Vec<usize> = ns.iter().copied().filter(|k| k != xx).collect();
    match rest.as_slice() {
        [yy] if rest.len() + 1 == ns.len() => Ok((*xx, *yy)),
        _ => Err(Error::Internal(format!("irregular mutation: P_ns has {} summands", ns.len()))),
    }
}

fn right(cat: &SeqCategory, s: usize, i: usize) -> Result<usize> {
    check_position(cat, s, i)?;
    if i > 2 {
        let (d, cs) = descend(cat, s)?;
        let r = right(&d.child, cs, i - 1)?;
        return ascend(cat, s, &d, r);
    }
    let mut pre = Vec::new();
    for u in 0..cat.len() {
        if left(cat, u, 2)? == s {
            pre.push(u);
        }
    }
    let [r] = pre.as_slice() else {
        return Err(Error::Internal(format!("{} preimages under left φ-mutation", pre.len())));
    };
    if let Some(short) = right_shortcut(cat, s)? {
        if short != *r {
            return Err(Error::Internal("right φ-mutation disagrees with the projective shortcut".into()));
        }
    }
    Ok(*r)
}

/// For an exceptional sequence whose pair `(B, C)` is right regular with `B`
/// projective in `J(C)`, the right mutation keeps `C` at position 2.
fn right_shortcut(cat: &SeqCategory, s: usize) -> Result<Option<usize>> {
    if auslander_rank(cat.algebra()).is_none() {
        return Ok(None);
    }
    let m = cat.modules(s);
    if !is_exceptional_sequence(&m)? {
        return Ok(None);
    }
    let lat = cat.lattice();
    let d = pair_data(lat, &m[1], &m[0])?;
    if !d.right_regular {
        return Ok(None);
    }
    let perp = perpendicular_category(lat, &[d.c], &[])?;
    if !is_projective(&perp.to_b(&m[1])?)? {
        return Ok(None);
    }
    let mut probe = cat.seqs()[s].terms.clone();
    probe[1] = probe[0];
    complete(cat, &probe, 0).map(Some)
}
