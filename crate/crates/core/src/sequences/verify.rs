//! Exhaustive checks of the statements relating tilting modules, exceptional
//! sequences and τ-exceptional sequences of `A_t`, over the enumerated
//! finite sets.

use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use super::exceptional::{is_exceptional_by_ext, psi_mutate, ExcSeq};
use super::mutation::{phi_mutate, regularity_at};
use super::{check_tau_exceptional, enumerate_complete_exc, phi_inverse, Descent, Dir, SeqCategory, TauExcFailure};
use crate::bqa::{auslander_algebra, auslander_dim, gamma_algebra, Algebra};
use crate::error::{Error, Result};
use crate::homology::{ext_dim, is_projective, pdim, projective, simple, tau};
use crate::modrep::{cokernel, hom_basis, hom_dim, is_isomorphic, Catalog, Module};
use crate::tautilt::{
    enumerate_tilting, f_inverse, is_classical_tilting, is_tau_rigid, perpendicular_category, tilting_mutation,
    Lattice,
};
use crate::torsion::{minimal_approximation, ApproxSide};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    Thm3_6,
    Thm4_9,
    Thm4_15,
    Prop4_12,
    Prop4_13,
    Prop4_17,
    Lemma4_2,
    Lemma4_10,
    Lemma4_11,
    Lemma4_14,
    Lemma4_16,
    Rmk3_7,
    Rmk3_8,
}

impl Theorem {
    pub const ALL: [Theorem; 13] = [
        Theorem::Thm3_6,
        Theorem::Thm4_9,
        Theorem::Thm4_15,
        Theorem::Prop4_12,
        Theorem::Prop4_13,
        Theorem::Prop4_17,
        Theorem::Lemma4_2,
        Theorem::Lemma4_10,
        Theorem::Lemma4_11,
        Theorem::Lemma4_14,
        Theorem::Lemma4_16,
        Theorem::Rmk3_7,
        Theorem::Rmk3_8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Thm3_6 => "thm_3_6",
            Theorem::Thm4_9 => "thm_4_9",
            Theorem::Thm4_15 => "thm_4_15",
            Theorem::Prop4_12 => "prop_4_12",
            Theorem::Prop4_13 => "prop_4_13",
            Theorem::Prop4_17 => "prop_4_17",
            Theorem::Lemma4_2 => "lemma_4_2",
            Theorem::Lemma4_10 => "lemma_4_10",
            Theorem::Lemma4_11 => "lemma_4_11",
            Theorem::Lemma4_14 => "lemma_4_14",
            Theorem::Lemma4_16 => "lemma_4_16",
            Theorem::Rmk3_7 => "rmk_3_7",
            Theorem::Rmk3_8 => "rmk_3_8",
        }
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Theorem> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown statement {s:?}")))
    }
}

/// Every instance checked and every counterexample found.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub theorem: &'static str,
    pub t: usize,
    pub checked: Vec<String>,
    pub failures: Vec<String>,
}

impl Report {
    fn new(th: Theorem, t: usize) -> Report {
        Report { theorem: th.name(), t, checked: Vec::new(), failures: Vec::new() }
    }

    fn record(&mut self, what: String, ok: bool, why: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(format!("{what}: {}", why()));
        }
        self.checked.push(what);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify(th: Theorem, t: usize) -> Result<Report> {
    let mut r = Report::new(th, t);
    if th == Theorem::Rmk3_8 {
        rmk_3_8(&mut r)?;
        return Ok(r);
    }
    let ctx = Ctx::new(t)?;
    match th {
        Theorem::Thm3_6 => thm_3_6(&ctx, &mut r)?,
        Theorem::Thm4_9 => thm_4_9(&ctx, &mut r)?,
        Theorem::Thm4_15 => thm_4_15(&ctx, &mut r, false)?,
        Theorem::Prop4_13 => thm_4_15(&ctx, &mut r, true)?,
        Theorem::Prop4_12 => prop_4_12(&ctx, &mut r)?,
        Theorem::Prop4_17 => prop_4_17(&ctx, &mut r)?,
        Theorem::Lemma4_2 => lemma_4_2(&ctx, &mut r)?,
        Theorem::Lemma4_10 => lemma_4_10(&ctx, &mut r)?,
        Theorem::Lemma4_11 => lemma_4_11(&ctx, &mut r)?,
        Theorem::Lemma4_14 => lemma_4_14(&ctx, &mut r)?,
        Theorem::Lemma4_16 => lemma_4_16(&ctx, &mut r)?,
        Theorem::Rmk3_7 => rmk_3_7(&ctx, &mut r)?,
        Theorem::Rmk3_8 => unreachable!(),
    }
    Ok(r)
}

struct Ctx {
    t: usize,
    alg: Arc<Algebra>,
    lat: Arc<Lattice>,
    cat: Arc<SeqCategory>,
    exc: Arc<Vec<ExcSeq>>,
}

impl Ctx {
    fn new(t: usize) -> Result<Ctx> {
        let alg = auslander_algebra(t)?;
        let lat = Lattice::of(&alg)?;
        let cat = SeqCategory::of(&alg)?;
        let exc = enumerate_complete_exc(&alg)?;
        Ok(Ctx { t, alg, lat, cat, exc })
    }

    fn catalog(&self) -> &Arc<Catalog> {
        self.lat.catalog()
    }

    fn module(&self, c: usize) -> Module {
        self.catalog().module(c)
    }

    fn show(&self, terms: &[usize]) -> String {
        let l: Vec<String> = terms.iter().rev().map(|&c| self.catalog().label(c)).collect();
        format!("({})", l.join(", "))
    }

    fn index(&self, e: &ExcSeq) -> Result<usize> {
        self.cat
            .find(&e.terms)
            .ok_or_else(|| Error::Internal(format!("{} is not among the τ-exceptional sequences", self.show(&e.terms))))
    }

    fn psi(&self, e: &ExcSeq, i: usize, dir: Dir) -> Result<Option<ExcSeq>> {
        psi_mutate(&self.alg, e, i, dir)
    }

    fn phi(&self, e: &ExcSeq, i: usize, dir: Dir) -> Result<Vec<usize>> {
        let s = self.index(e)?;
        Ok(self.cat.seqs()[phi_mutate(&self.cat, s, i, dir)?].terms.clone())
    }
}

fn thm_3_6(ctx: &Ctx, r: &mut Report) -> Result<()> {
    for tm in enumerate_tilting(&ctx.alg)? {
        let seq = super::phi(&ctx.lat, &tm.rigid)?;
        let mods: Vec<Module> = seq.terms.iter().map(|&c| ctx.module(c)).collect();
        let what = ctx.show(&seq.terms);
        let failures = check_tau_exceptional(&mods)?;
        let exc = ctx.exc.iter().any(|e| e.terms == seq.terms);
        let mut quotients = true;
        for i in 1..ctx.t {
            let a = minimal_approximation(&tm.parts[i], &tm.parts[..i], ApproxSide::Right)?;
            let (q, _) = cokernel(&a.map, &tm.parts[i]);
            quotients &= a.map.is_injective()
                && is_isomorphic(&a.object, &tm.parts[i - 1])?
                && is_isomorphic(&q, &mods[i])?;
        }
        r.record(what, failures.is_empty() && exc && quotients, || {
            format!("τ-exceptional failures {failures:?}, exceptional {exc}, quotient form {quotients}")
        });
    }
    if r.checked.len() != ctx.exc.len() {
        r.failures.push(format!("{} tilting modules but {} exceptional sequences", r.checked.len(), ctx.exc.len()));
    }
    Ok(())
}

fn thm_4_9(ctx: &Ctx, r: &mut Report) -> Result<()> {
    for s in 0..ctx.cat.len() {
        for i in 2..=ctx.t {
            let l = phi_mutate(&ctx.cat, s, i, Dir::Left)?;
            let back = phi_mutate(&ctx.cat, l, i, Dir::Right)?;
            let rr = phi_mutate(&ctx.cat, s, i, Dir::Right)?;
            let fwd = phi_mutate(&ctx.cat, rr, i, Dir::Left)?;
            let what = format!("{} at {i}", ctx.show(&ctx.cat.seqs()[s].terms));
            r.record(what, back == s && fwd == s, || "left and right φ-mutation are not inverse".into());
        }
    }
    Ok(())
}

fn thm_4_15(ctx: &Ctx, r: &mut Report, only_two: bool) -> Result<()> {
    for e in ctx.exc.iter() {
        let top = if only_two { 2.min(ctx.t) } else { ctx.t };
        for i in 2..=top {
            let Some(p) = ctx.psi(e, i, Dir::Left)? else { continue };
            let f = ctx.phi(e, i, Dir::Left)?;
            r.record(format!("{} at {i}", ctx.show(&e.terms)), f == p.terms, || {
                format!("ψ gives {}, φ gives {}", ctx.show(&p.terms), ctx.show(&f))
            });
        }
    }
    Ok(())
}

fn lemma_4_2(ctx: &Ctx, r: &mut Report) -> Result<()> {
    for e in ctx.exc.iter() {
        let m: Vec<Module> = e.terms.iter().map(|&c| ctx.module(c)).collect();
        let mut bad = Vec::new();
        for i in 0..m.len() {
            for j in 0..i {
                if hom_dim(&m[i], &m[j])? != 1 || ext_dim(1, &m[i], &m[j])? != 1 {
                    bad.push(format!("dim Hom = dim Ext^1 = 1 fails for E_{}, E_{}", i + 1, j + 1));
                }
                if ext_dim(2, &m[i], &m[j])? != 0 {
                    bad.push(format!("Ext^2(E_{}, E_{}) ≠ 0", i + 1, j + 1));
                }
            }
        }
        for i in 1..m.len() {
            for f in hom_basis(&m[i], &m[i - 1])? {
                if !f.is_injective() && !f.is_surjective() {
                    bad.push(format!("map E_{} → E_{} neither injective nor surjective", i + 1, i));
                }
                if f.is_injective() {
                    if i == 1 && !matches!(pdim(&m[1])?, Some(d) if d <= 1) {
                        bad.push("pdim E_2 > 1 although E_2 → E_1 is injective".into());
                    }
                    let (ck, _) = cokernel(&f, &m[i - 1]);
                    if ext_dim(1, &ck, &m[i])? != 1 {
                        bad.push(format!("dim Ext^1(coker, E_{}) ≠ 1", i + 1));
                    }
                }
            }
        }
        r.record(ctx.show(&e.terms), bad.is_empty(), || bad.join("; "));
    }
    Ok(())
}

fn lemma_4_10(ctx: &Ctx, r: &mut Report) -> Result<()> {
    for e in ctx.exc.iter() {
        if ctx.t < 2 {
            break;
        }
        let Some(p) = ctx.psi(e, 2, Dir::Left)? else { continue };
        let s = ctx.index(e)?;
        if !regularity_at(&ctx.cat, s, 2)?.left_regular {
            continue;
        }
        let proj = is_projective(&ctx.module(e.terms[0]))?;
        let f = ctx.phi(e, 2, Dir::Left)?;
        r.record(ctx.show(&e.terms), proj && f == p.terms, || format!("E_1 projective {proj}, φ = ψ {}", f == p.terms));
    }
    Ok(())
}

fn lemma_4_11(ctx: &Ctx, r: &mut Report) -> Result<()> {
    for e in ctx.exc.iter() {
        if ctx.t < 2 {
            break;
        }
        let Some(p) = ctx.psi(e, 2, Dir::Right)? else { continue };
        let s = ctx.index(e)?;
        if !regularity_at(&ctx.cat, s, 2)?.right_regular {
            continue;
        }
        let e1 = ctx.lat.rigid_of_catalog(e.terms[0]).ok_or_else(|| Error::Internal("E_1 not τ-rigid".into()))?;
        let x = f_inverse(&ctx.lat, &[e1], &ctx.module(e.terms[1]))?;
        let proj = ctx.lat.pair(ctx.lat.bongartz(&[e1], &[])?).modules.contains(&x);
        let f = ctx.phi(e, 2, Dir::Right)?;
        r.record(ctx.show(&e.terms), proj && f == p.terms, || {
            format!("f^-1 projective in ⊥τE_1 {proj}, φ^-1 = ψ^-1 {}", f == p.terms)
        });
    }
    Ok(())
}

fn partial_tilting(m: &Module) -> Result<bool> {
    Ok(matches!(pdim(m)?, Some(d) if d <= 1) && ext_dim(1, m, m)? == 0)
}

fn prop_4_12(ctx: &Ctx, r: &mut Report) -> Result<()> {
    let probes: Vec<Module> = ctx
        .lat
        .rigid()
        .iter()
        .map(|x| x.module.clone())
        .chain((0..ctx.t).map(|v| simple(&ctx.alg, v)).collect::<Result<Vec<_>>>()?)
        .collect();
    for e in ctx.exc.iter() {
        if ctx.t < 2 {
            break;
        }
        let Some(p) = ctx.psi(e, 2, Dir::Left)? else { continue };
        let (e1, e2, l) = (ctx.module(e.terms[0]), ctx.module(e.terms[1]), ctx.module(p.terms[1]));
        let ordered = phi_inverse(&ctx.lat, &e.terms)?;
        let t2i = ordered[1];
        let t2 = ctx.lat.rigid_module(t2i).clone();
        let mut bad = Vec::new();
        let sum = |a: &Module, b: &Module| Module::direct_sum(&[a, b]);
        if !partial_tilting(&sum(&t2, &e1)?)? || !partial_tilting(&sum(&t2, &e2)?)? {
            bad.push("T_2 ⊕ E_i not partial tilting".to_string());
        }
        let (r1, r2) = (ctx.lat.rigid_of(&e1)?, ctx.lat.rigid_of(&e2)?);
        let (Some(r1), Some(r2)) = (r1, r2) else {
            bad.push("E_1 or E_2 is not τ-rigid".into());
            r.record(ctx.show(&e.terms), false, || bad.join(", "));
            continue;
        };
        if f_inverse(&ctx.lat, &[r2], &l).ok() != Some(t2i) {
            bad.push("f_(E_2)^(-1)(L) ≄ T_2".into());
        }
        let maps = hom_basis(&l, &e2)?;
        if !(is_exceptional_by_ext(&l)? && maps.len() == 1 && maps[0].is_surjective()) {
            bad.push("(L, E_2) not right ψ-mutable exceptional".into());
        }
        let j1 = perpendicular_category(&ctx.lat, &[t2i, r1], &[])?;
        let j2 = perpendicular_category(&ctx.lat, &[t2i, r2], &[])?;
        for x in &probes {
            if j1.contains(x)? != j2.contains(x)? {
                bad.push("J(T_2 ⊕ E_1) ≠ J(T_2 ⊕ E_2)".into());
                break;
            }
        }
        let s = ctx.index(e)?;
        if !regularity_at(&ctx.cat, s, 2)?.left_regular {
            if is_projective(&t2)? {
                bad.push("T_2 projective".into());
            }
            let ps = ctx.index(&p)?;
            if regularity_at(&ctx.cat, ps, 2)?.right_regular {
                bad.push("(L, E_2) right regular".into());
            }
        }
        r.record(ctx.show(&e.terms), bad.is_empty(), || bad.join(", "));
    }
    Ok(())
}

fn prop_4_17(ctx: &Ctx, r: &mut Report) -> Result<()> {
    let all = enumerate_tilting(&ctx.alg)?;
    for (k, tm) in all.iter().enumerate() {
        let seq = ExcSeq { terms: super::phi(&ctx.lat, &tm.rigid)?.terms };
        for i in 2..=ctx.t {
            let mutated = tilting_mutation(&all, &ctx.lat, k, i)?;
            let psi = ctx.psi(&seq, i, Dir::Left)?;
            let what = format!("T = {} at {i}", ctx.show(&seq.terms));
            match (mutated, psi) {
                (Some(k2), Some(p)) => {
                    let img = super::phi(&ctx.lat, &all[k2].rigid)?.terms;
                    let f = ctx.phi(&seq, i, Dir::Left)?;
                    r.record(what, img == p.terms && f == p.terms, || {
                        format!("Φ(T') = {}, ψ = {}, φ = {}", ctx.show(&img), ctx.show(&p.terms), ctx.show(&f))
                    });
                }
                (None, None) => r.record(what, true, String::new),
                (a, b) => r.record(what, false, || {
                    format!("tilting mutation exists {}, ψ-mutable {}", a.is_some(), b.is_some())
                }),
            }
        }
    }
    Ok(())
}

fn lemma_4_14(ctx: &Ctx, r: &mut Report) -> Result<()> {
    for e in ctx.exc.iter() {
        let mut cat = ctx.cat.clone();
        let mut terms = e.terms.clone();
        let mut bad = Vec::new();
        for i in 1..ctx.t {
            let d = Descent::of(&cat, terms[0])?;
            let tail = d.down(&cat, &terms[1..])?;
            let b = d.perp.algebra();
            let k = ctx.t - i;
            if b.dim() != auslander_dim(k) || b.vertex_count() != k || b.arrows().len() != 2 * (k - 1) {
                bad.push(format!(
                    "J(E_{i}, …, E_1) has dim {}, {} vertices, {} arrows",
                    b.dim(),
                    b.vertex_count(),
                    b.arrows().len()
                ));
            }
            cat = d.child;
            terms = tail;
        }
        r.record(ctx.show(&e.terms), bad.is_empty(), || bad.join("; "));
    }
    Ok(())
}

fn lemma_4_16(ctx: &Ctx, r: &mut Report) -> Result<()> {
    if ctx.t < 2 {
        return Ok(());
    }
    for tm in enumerate_tilting(&ctx.alg)? {
        let t1 = tm.rigid[0];
        let perp = perpendicular_category(&ctx.lat, &[t1], &[])?;
        let parts: Vec<Module> = tm.rigid[1..]
            .iter()
            .map(|&y| perp.to_b(&ctx.lat.torsion_free(&[t1], y)))
            .collect::<Result<_>>()?;
        let refs: Vec<&Module> = parts.iter().collect();
        let sum = Module::direct_sum(&refs)?;
        let ok = is_classical_tilting(&sum)?;
        let label = ctx.show(&super::phi(&ctx.lat, &tm.rigid)?.terms);
        r.record(format!("T = Φ⁻¹{label}"), ok, || "quotients by T_1 are not tilting in J(T_1)".into());
    }
    Ok(())
}

fn rmk_3_7(ctx: &Ctx, r: &mut Report) -> Result<()> {
    let mut witnesses = Vec::new();
    for c in super::enumerate_thin_exceptional(&ctx.alg)? {
        let m = ctx.module(c);
        if !is_tau_rigid(&m)? {
            witnesses.push(ctx.catalog().label(c));
        }
    }
    let expected = ctx.t >= 2;
    let what = format!("exceptional modules that are not τ-rigid: [{}]", witnesses.join(", "));
    r.record(what, witnesses.is_empty() != expected, || "no exceptional module fails to be τ-rigid".into());
    Ok(())
}

fn rmk_3_8(r: &mut Report) -> Result<()> {
    let g = gamma_algebra();
    let (p1, p2, s1) = (projective(&g, 0)?, projective(&g, 1)?, simple(&g, 0)?);
    let seq = [s1.clone(), p1, p2.clone()];
    let exc = super::is_exceptional_sequence(&seq)?;
    let failures = check_tau_exceptional(&seq)?;
    let witness = failures.contains(&TauExcFailure::HomToTauHead { head: 1, position: 3 })
        && hom_dim(&p2, &tau(&s1)?)? != 0;
    let shown: Vec<String> = failures.iter().map(ToString::to_string).collect();
    r.record(format!("Gamma: (P2, P1, S1) exceptional {exc}; τ-exceptional failures [{}]", shown.join("; ")), exc && witness, || {
        "expected an exceptional sequence with Hom(P2, τS1) ≠ 0".into()
    });
    Ok(())
}
