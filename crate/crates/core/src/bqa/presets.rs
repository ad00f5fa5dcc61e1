use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{build_algebra, Algebra, Arrow, Quiver, Relation};
use crate::error::{Error, Result};
use crate::exactlin::Rat;

/// `Σ_{i,j ≤ t} min(i, j)`, the dimension of the Auslander algebra `A_t`.
pub fn auslander_dim(t: usize) -> usize {
    (1..=t).flat_map(|i| (1..=t).map(move |j| i.min(j))).sum()
}

static AUSLANDER: Mutex<Option<HashMap<usize, Arc<Algebra>>>> = Mutex::new(None);

/// The Auslander algebra `A_t` of `K[x]/(x^t)`: arrows `a_i: i → i+1` and
/// `b_i: i+1 → i` with `a_1 b_1 = 0` and `a_{i+1} b_{i+1} = b_i a_i`.
///
/// Repeated calls with the same `t` return the same handle.
pub fn auslander_algebra(t: usize) -> Result<Arc<Algebra>> {
    if t == 0 {
        return Err(Error::VertexOutOfRange(0));
    }
    let mut guard = AUSLANDER.lock().unwrap();
    if let Some(a) = guard.get_or_insert_with(HashMap::new).get(&t) {
        return Ok(a.clone());
    }
    let mut arrows = Vec::new();
    for i in 0..t - 1 {
        arrows.push(Arrow { name: format!("a{}", i + 1), source: i, target: i + 1 });
    }
    for i in 0..t - 1 {
        arrows.push(Arrow { name: format!("b{}", i + 1), source: i + 1, target: i });
    }
    let mut rels = Vec::new();
    if t >= 2 {
        rels.push(Relation::monomial(vec!["a1", "b1"]));
    }
    for i in 1..t.saturating_sub(1) {
        let (a1, b1) = (format!("a{}", i + 1), format!("b{}", i + 1));
        let (a0, b0) = (format!("a{i}"), format!("b{i}"));
        rels.push(Relation::new(vec![(Rat::one(), vec![&a1, &b1]), (Rat::from_int(-1), vec![&b0, &a0])]));
    }
    let alg = build_algebra(&format!("A{t}"), Quiver::new(t, arrows)?, rels)?;
    let pd = alg.pair_dims();
    for i in 0..t {
        for j in 0..t {
            if pd[i][j] != (i + 1).min(j + 1) {
                return Err(Error::Internal(format!("dim e{}Ae{} is {}", i + 1, j + 1, pd[i][j])));
            }
        }
    }
    if alg.dim() != auslander_dim(t) {
        return Err(Error::Internal("dimension cross-check failed".into()));
    }
    guard.as_mut().unwrap().insert(t, alg.clone());
    Ok(alg)
}

/// `Some(t)` when `alg` is the handle returned by `auslander_algebra(t)`.
pub fn auslander_rank(alg: &Algebra) -> Option<usize> {
    let guard = AUSLANDER.lock().unwrap();
    let map = guard.as_ref()?;
    map.iter().find(|(_, a)| a.id() == alg.id()).map(|(&t, _)| t)
}

static GAMMA: Mutex<Option<Arc<Algebra>>> = Mutex::new(None);

/// `1 → 2 → 3` with arrows `a`, `b` and the relation `ab = 0`.
pub fn gamma_algebra() -> Arc<Algebra> {
    GAMMA
        .lock()
        .unwrap()
        .get_or_insert_with(|| {
            let q = Quiver::new(
                3,
                vec![
                    Arrow { name: "a".into(), source: 0, target: 1 },
                    Arrow { name: "b".into(), source: 1, target: 2 },
                ],
            )
            .expect("valid quiver");
            build_algebra("Gamma", q, vec![Relation::monomial(vec!["a", "b"])]).expect("finite dimensional")
        })
        .clone()
}

/// The base field as a one-vertex algebra.
pub fn single_vertex() -> Arc<Algebra> {
    build_algebra("K", Quiver { vertices: 1, arrows: vec![] }, vec![]).expect("one vertex")
}

/// `A / ⟨Σ_{v ∈ kill} e_v⟩`, returned with the map from old to new vertices.
pub fn idempotent_quotient(a: &Arc<Algebra>, kill: &[usize]) -> Result<(Arc<Algebra>, Vec<Option<usize>>)> {
    let n = a.vertex_count();
    if let Some(&v) = kill.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange(v));
    }
    if kill.is_empty() {
        return Ok((a.clone(), (0..n).map(Some).collect()));
    }
    let mut map = vec![None; n];
    let mut next = 0;
    for (v, slot) in map.iter_mut().enumerate() {
        if !kill.contains(&v) {
            *slot = Some(next);
            next += 1;
        }
    }
    if next == 0 {
        return Err(Error::NotApplicable("cannot kill every vertex".into()));
    }
    if !a.is_presented() {
        return Err(Error::NotApplicable("idempotent quotients need a presented algebra".into()));
    }
    let q = a.quiver();
    let alive = |name: &str| {
        let ar = &q.arrows[q.arrow_index(name).unwrap()];
        map[ar.source].is_some() && map[ar.target].is_some()
    };
    let arrows: Vec<Arrow> = q
        .arrows
        .iter()
        .filter(|ar| map[ar.source].is_some() && map[ar.target].is_some())
        .map(|ar| Arrow { name: ar.name.clone(), source: map[ar.source].unwrap(), target: map[ar.target].unwrap() })
        .collect();
    let rels: Vec<Relation> = a
        .relations()
        .iter()
        .filter_map(|r| {
            let terms: Vec<(Rat, Vec<String>)> =
                r.terms.iter().filter(|(_, p)| p.iter().all(|x| alive(x))).cloned().collect();
            (!terms.is_empty()).then_some(Relation { terms })
        })
        .collect();
    let b = build_algebra(&format!("{}/<e>", a.name()), Quiver::new(next, arrows)?, rels)?;
    Ok((b, map))
}
