//! The bicategory of fractions `C[W⁻¹]` of a finite strict 2-category.
//!
//! 1-cells are spans `(A′, w, f)` with `w ∈ W`; 2-cells are classes of
//! representatives `(A³, v¹, v², α, β)`. Composition of spans is driven by a
//! fixed [`ChoiceTable`]; vertical composition and whiskering are built from
//! cospan fillers followed by BF4 solutions.

mod equiv;
mod hom;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use rand::seq::IteratorRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::saturation::{bf4_solve, check_bf, cospan_fillers, fill_cospan, Filler, MorClass};
use crate::twocat::{Cell, Mor, Obj, TwoCat};

pub use equiv::SpanEquivalence;
pub use hom::{Hom, Move, Step};

/// A 1-cell `src ← A′ → dst` of the localization: `w: A′ → src` in `W`
/// and `f: A′ → dst`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Span {
    pub apex: Obj,
    pub w: Mor,
    pub f: Mor,
}

/// A representative `(A³, v¹, v², α, β)` with `α: w¹∘v¹ ⇒ w²∘v²` and
/// `β: f¹∘v¹ ⇒ f²∘v²`. Field order is the canonical ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CellRep {
    pub apex: Obj,
    pub v1: Mor,
    pub v2: Mor,
    pub alpha: Cell,
    pub beta: Cell,
}

/// A 2-cell of the localization, identified by its canonical representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FractionCell {
    pub source: Span,
    pub target: Span,
    pub rep: CellRep,
}

/// Fixed fillers for every cospan `A′ →f B ←v B′` with `v ∈ W`.
#[derive(Clone, Debug)]
pub struct ChoiceTable {
    entries: HashMap<(Mor, Mor), Filler>,
    pub enforce_c3: bool,
}

impl ChoiceTable {
    pub fn get(&self, f: Mor, v: Mor) -> Option<Filler> {
        self.entries.get(&(f, v)).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((Mor, Mor), Filler)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn honors_c1(&self, c: &TwoCat) -> bool {
        self.entries.iter().all(|(&(f, v), fill)| {
            !c.is_identity(f)
                || *fill
                    == Filler {
                        apex: c.src(v),
                        v,
                        f: c.id1(c.src(v)),
                        rho: c.id2(v),
                    }
        })
    }

    pub fn honors_c2(&self, c: &TwoCat) -> bool {
        self.entries.iter().all(|(&(f, v), fill)| {
            !c.is_identity(v)
                || *fill
                    == Filler {
                        apex: c.src(f),
                        v: c.id1(c.src(f)),
                        f,
                        rho: c.id2(f),
                    }
        })
    }

    pub fn honors_c3(&self, c: &TwoCat) -> bool {
        self.entries.iter().all(|(&(f, v), fill)| {
            f != v
                || *fill
                    == Filler {
                        apex: c.src(f),
                        v: c.id1(c.src(f)),
                        f: c.id1(c.src(f)),
                        rho: c.id2(f),
                    }
        })
    }
}

fn forced(c: &TwoCat, f: Mor, v: Mor, enforce_c3: bool) -> Option<Filler> {
    if c.is_identity(f) {
        let b = c.src(v);
        return Some(Filler {
            apex: b,
            v,
            f: c.id1(b),
            rho: c.id2(v),
        });
    }
    let a = c.src(f);
    if c.is_identity(v) {
        return Some(Filler {
            apex: a,
            v: c.id1(a),
            f,
            rho: c.id2(f),
        });
    }
    if enforce_c3 && f == v {
        return Some(Filler {
            apex: a,
            v: c.id1(a),
            f: c.id1(a),
            rho: c.id2(f),
        });
    }
    None
}

fn choices_with(
    c: &TwoCat,
    w: &MorClass,
    enforce_c3: bool,
    mut pick: impl FnMut(Mor, Mor) -> Result<Filler>,
) -> Result<ChoiceTable> {
    let mut entries = HashMap::new();
    for v in w.members() {
        for f in c.mors_into(c.dst(v)).collect::<Vec<_>>() {
            let fill = match forced(c, f, v, enforce_c3) {
                Some(x) => x,
                None => pick(f, v)?,
            };
            entries.insert((f, v), fill);
        }
    }
    Ok(ChoiceTable {
        entries,
        enforce_c3,
    })
}

/// Choices honoring (C1), (C2) and, if requested, (C3); every other cospan
/// gets its least filler.
pub fn build_choices(c: &TwoCat, w: &MorClass, enforce_c3: bool) -> Result<ChoiceTable> {
    choices_with(c, w, enforce_c3, |f, v| fill_cospan(c, w, f, v))
}

/// Like [`build_choices`], with the unforced fillers drawn at random.
pub fn random_choices(
    c: &TwoCat,
    w: &MorClass,
    enforce_c3: bool,
    rng: &mut impl Rng,
) -> Result<ChoiceTable> {
    choices_with(c, w, enforce_c3, |f, v| {
        cospan_fillers(c, w, f, v)
            .choose(rng)
            .ok_or_else(|| Error::Axiom {
                axiom: "BF3",
                detail: format!("cospan ({}, {})", c.mor_name(f), c.mor_name(v)),
            })
    })
}

/// `C[W⁻¹]` for a fixed choice table.
pub struct Localization {
    c: Arc<TwoCat>,
    w: MorClass,
    choices: ChoiceTable,
    homs: RwLock<HashMap<(Span, Span), Arc<Hom>>>,
}

impl fmt::Debug for Localization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Localization")
            .field("w", &self.w)
            .field("choices", &self.choices.len())
            .finish()
    }
}

/// Localizes after checking the (BF) conditions.
pub fn localize(c: Arc<TwoCat>, w: MorClass, enforce_c3: bool) -> Result<Localization> {
    let report = check_bf(&c, &w);
    if !report.pass() {
        return Err(Error::BfFailed(report.summary()));
    }
    let choices = build_choices(&c, &w, enforce_c3)?;
    Ok(Localization::with_choices(c, w, choices))
}

impl Localization {
    /// Uses a given choice table; the (BF) conditions are assumed.
    pub fn with_choices(c: Arc<TwoCat>, w: MorClass, choices: ChoiceTable) -> Localization {
        Localization {
            c,
            w,
            choices,
            homs: RwLock::new(HashMap::new()),
        }
    }

    pub fn twocat(&self) -> &TwoCat {
        &self.c
    }

    pub fn twocat_arc(&self) -> Arc<TwoCat> {
        self.c.clone()
    }

    pub fn class(&self) -> &MorClass {
        &self.w
    }

    pub fn choices(&self) -> &ChoiceTable {
        &self.choices
    }

    pub fn span_src(&self, s: &Span) -> Obj {
        self.c.dst(s.w)
    }

    pub fn span_dst(&self, s: &Span) -> Obj {
        self.c.dst(s.f)
    }

    pub fn is_valid_span(&self, s: &Span) -> bool {
        let c = &self.c;
        self.w.contains(s.w) && c.src(s.w) == s.apex && c.src(s.f) == s.apex
    }

    pub fn span_name(&self, s: &Span) -> String {
        let c = &self.c;
        format!("({},{},{})", c.obj_name(s.apex), c.mor_name(s.w), c.mor_name(s.f))
    }

    pub fn rep_name(&self, r: &CellRep) -> String {
        let c = &self.c;
        format!(
            "({},{},{},{},{})",
            c.obj_name(r.apex),
            c.mor_name(r.v1),
            c.mor_name(r.v2),
            c.cell_name(r.alpha),
            c.cell_name(r.beta)
        )
    }

    /// Every span `a → b`, in canonical order.
    pub fn spans(&self, a: Obj, b: Obj) -> Vec<Span> {
        let c = &self.c;
        let mut out = Vec::new();
        for apex in c.obj_ids() {
            for &w in c.hom(apex, a) {
                if !self.w.contains(w) {
                    continue;
                }
                for &f in c.hom(apex, b) {
                    out.push(Span { apex, w, f });
                }
            }
        }
        out
    }

    pub fn identity_span(&self, a: Obj) -> Span {
        let id = self.c.id1(a);
        Span {
            apex: a,
            w: id,
            f: id,
        }
    }

    pub fn u_mor(&self, f: Mor) -> Span {
        let a = self.c.src(f);
        Span {
            apex: a,
            w: self.c.id1(a),
            f,
        }
    }

    pub fn u_cell(&self, gamma: Cell) -> Result<FractionCell> {
        let c = &self.c;
        let (f, g) = (c.cell_src(gamma), c.cell_dst(gamma));
        let id = c.id1(c.src(f));
        self.cell(
            self.u_mor(f),
            self.u_mor(g),
            CellRep {
                apex: c.src(f),
                v1: id,
                v2: id,
                alpha: c.id2(id),
                beta: gamma,
            },
        )
    }

    pub fn hom(&self, source: Span, target: Span) -> Arc<Hom> {
        if let Some(h) = self.homs.read().expect("hom cache").get(&(source, target)) {
            return h.clone();
        }
        let h = Arc::new(Hom::build(&self.c, &self.w, source, target));
        self.homs
            .write()
            .expect("hom cache")
            .entry((source, target))
            .or_insert(h)
            .clone()
    }

    pub fn is_valid_rep(&self, source: &Span, target: &Span, r: &CellRep) -> bool {
        hom::is_valid(&self.c, &self.w, source, target, r)
    }

    /// The class of a representative.
    pub fn cell(&self, source: Span, target: Span, r: CellRep) -> Result<FractionCell> {
        let rep = self.hom(source, target).canonical(&r).ok_or_else(|| {
            Error::Precondition(format!(
                "{} is not a valid representative {} ⇒ {}",
                self.rep_name(&r),
                self.span_name(&source),
                self.span_name(&target)
            ))
        })?;
        Ok(FractionCell {
            source,
            target,
            rep,
        })
    }

    /// All 2-cells `source ⇒ target`, one per class.
    pub fn cells(&self, source: Span, target: Span) -> Vec<FractionCell> {
        self.hom(source, target)
            .classes()
            .map(|rep| FractionCell {
                source,
                target,
                rep,
            })
            .collect()
    }

    pub fn members(&self, g: &FractionCell) -> Vec<CellRep> {
        self.hom(g.source, g.target).class_members(&g.rep)
    }

    pub fn identity_cell(&self, s: Span) -> FractionCell {
        let c = &self.c;
        let id = c.id1(s.apex);
        let rep = CellRep {
            apex: s.apex,
            v1: id,
            v2: id,
            alpha: c.id2(s.w),
            beta: c.id2(s.f),
        };
        self.cell(s, s, rep).expect("identity representative is valid")
    }

    pub fn cells_equal(
        &self,
        source: Span,
        target: Span,
        r1: &CellRep,
        r2: &CellRep,
    ) -> Result<bool> {
        let h = self.hom(source, target);
        match (h.canonical(r1), h.canonical(r2)) {
            (Some(a), Some(b)) => Ok(a == b),
            _ => Err(Error::Precondition(format!(
                "representatives are not valid for {} ⇒ {}",
                self.span_name(&source),
                self.span_name(&target)
            ))),
        }
    }

    pub fn equality_chain(
        &self,
        source: Span,
        target: Span,
        r1: &CellRep,
        r2: &CellRep,
    ) -> Option<Vec<Step>> {
        self.hom(source, target).chain(r1, r2)
    }

    // ---- composition -----------------------------------------------------

    /// `g̲ ∘ f̲` through the choice at the cospan `(f, u)`.
    pub fn compose(&self, fs: &Span, gs: &Span) -> Result<Span> {
        let c = &self.c;
        if self.span_dst(fs) != self.span_src(gs) {
            return Err(Error::NotComposable(format!(
                "{} then {}",
                self.span_name(fs),
                self.span_name(gs)
            )));
        }
        let ch = self.choice(fs.f, gs.w)?;
        Ok(Span {
            apex: ch.apex,
            w: c.comp(&[fs.w, ch.v])?,
            f: c.comp(&[gs.f, ch.f])?,
        })
    }

    fn choice(&self, f: Mor, v: Mor) -> Result<Filler> {
        self.choices.get(f, v).ok_or_else(|| Error::Axiom {
            axiom: "BF3",
            detail: format!(
                "no choice for cospan ({}, {})",
                self.c.mor_name(f),
                self.c.mor_name(v)
            ),
        })
    }

    fn bf4(&self, w: Mor, f1: Mor, f2: Mor, alpha: Cell) -> Result<(Mor, Cell)> {
        bf4_solve(&self.c, &self.w, w, f1, f2, alpha)
            .map_err(|e| Error::Inconsistent(format!("BF4 search failed under (BF): {e}")))
    }

    fn fill(&self, f: Mor, v: Mor) -> Result<Filler> {
        fill_cospan(&self.c, &self.w, f, v)
            .map_err(|e| Error::Inconsistent(format!("BF3 search failed under (BF): {e}")))
    }

    /// `Γ2 ⊙ Γ1` on representatives, without reducing to a class.
    pub fn vcomp_reps(&self, s: [&Span; 3], r1: &CellRep, r2: &CellRep) -> Result<CellRep> {
        let c = &self.c;
        let [_, s2, s3] = s;
        let _ = s3;
        let w2v2 = c.comp(&[s2.w, r1.v2])?;
        let w2u2 = c.comp(&[s2.w, r2.v1])?;
        let fill = self.fill(w2v2, w2u2)?;
        let (r, r_) = (fill.v, fill.f);
        let (z, sigma) = self.bf4(
            s2.w,
            c.comp(&[r1.v2, r])?,
            c.comp(&[r2.v1, r_])?,
            fill.rho,
        )?;
        let rz = c.comp(&[r, z])?;
        let r_z = c.comp(&[r_, z])?;
        Ok(CellRep {
            apex: c.src(z),
            v1: c.comp(&[r1.v1, rz])?,
            v2: c.comp(&[r2.v2, r_z])?,
            alpha: c.vc(&[
                c.whisker_right(r2.alpha, r_z)?,
                c.whisker_left(s2.w, sigma)?,
                c.whisker_right(r1.alpha, rz)?,
            ])?,
            beta: c.vc(&[
                c.whisker_right(r2.beta, r_z)?,
                c.whisker_left(s2.f, sigma)?,
                c.whisker_right(r1.beta, rz)?,
            ])?,
        })
    }

    /// Vertical composite `Γ2 ⊙ Γ1`.
    pub fn vcomp(&self, g1: &FractionCell, g2: &FractionCell) -> Result<FractionCell> {
        if g1.target != g2.source {
            return Err(Error::NotComposable(format!(
                "{} ⇒ {} then {} ⇒ {}",
                self.span_name(&g1.source),
                self.span_name(&g1.target),
                self.span_name(&g2.source),
                self.span_name(&g2.target)
            )));
        }
        let r = self.vcomp_reps([&g1.source, &g1.target, &g2.target], &g1.rep, &g2.rep)?;
        self.cell(g1.source, g2.target, r)
            .map_err(|e| Error::Inconsistent(format!("vertical composite is invalid: {e}")))
    }

    /// `i_g̲ ∗ Γ` on a representative of `Γ: f̲¹ ⇒ f̲²`.
    pub fn whisker_left_rep(
        &self,
        gs: &Span,
        f1: &Span,
        f2: &Span,
        r: &CellRep,
    ) -> Result<(Span, Span, CellRep)> {
        let c = &self.c;
        let u = gs.w;
        let ch1 = self.choice(f1.f, u)?;
        let ch2 = self.choice(f2.f, u)?;
        let e1 = self.fill(r.v1, ch1.v)?;
        let (x1, t1) = (e1.v, e1.f);
        let v2x1 = c.comp(&[r.v2, x1])?;
        let e2 = self.fill(v2x1, ch2.v)?;
        let (x2, t2) = (e2.v, e2.f);
        let x = c.comp(&[x1, x2])?;
        let t1_ = c.comp(&[t1, x2])?;
        let eps1_inv = c.inv(e1.rho)?;
        let alpha = c.vc(&[
            c.whisker_left(f2.w, e2.rho)?,
            c.whisker_right(r.alpha, x)?,
            c.hc(&[c.id2(f1.w), eps1_inv, c.id2(x2)])?,
        ])?;
        let kappa = c.vc(&[
            c.whisker_right(ch2.rho, t2)?,
            c.whisker_left(f2.f, e2.rho)?,
            c.whisker_right(r.beta, x)?,
            c.hc(&[c.id2(f1.f), eps1_inv, c.id2(x2)])?,
            c.whisker_right(c.inv(ch1.rho)?, t1_)?,
        ])?;
        let (y, kappa_) = self.bf4(u, c.comp(&[ch1.f, t1_])?, c.comp(&[ch2.f, t2])?, kappa)?;
        let rep = CellRep {
            apex: c.src(y),
            v1: c.comp(&[t1_, y])?,
            v2: c.comp(&[t2, y])?,
            alpha: c.whisker_right(alpha, y)?,
            beta: c.whisker_left(gs.f, kappa_)?,
        };
        Ok((self.compose(f1, gs)?, self.compose(f2, gs)?, rep))
    }

    /// `i_g̲ ∗ Γ`.
    pub fn whisker_left(&self, gs: &Span, g: &FractionCell) -> Result<FractionCell> {
        if self.span_dst(&g.source) != self.span_src(gs) {
            return Err(Error::NotComposable(format!(
                "{} after {}",
                self.span_name(gs),
                self.span_name(&g.source)
            )));
        }
        let (s, t, r) = self.whisker_left_rep(gs, &g.source, &g.target, &g.rep)?;
        self.cell(s, t, r)
            .map_err(|e| Error::Inconsistent(format!("left whiskering is invalid: {e}")))
    }

    /// `Γ ∗ i_f̲` on a representative of `Γ: g̲¹ ⇒ g̲²`.
    pub fn whisker_right_rep(
        &self,
        g1: &Span,
        g2: &Span,
        r: &CellRep,
        fs: &Span,
    ) -> Result<(Span, Span, CellRep)> {
        let c = &self.c;
        let (u1, u2) = (g1.w, g2.w);
        let ch1 = self.choice(fs.f, u1)?;
        let ch2 = self.choice(fs.f, u2)?;
        let u1f1 = c.comp(&[u1, ch1.f])?;
        let u1v1 = c.comp(&[u1, r.v1])?;
        let phi = self.fill(u1f1, u1v1)?;
        let (x1, y1) = (phi.v, phi.f);
        let (z, eps1) = self.bf4(
            u1,
            c.comp(&[ch1.f, x1])?,
            c.comp(&[r.v1, y1])?,
            phi.rho,
        )?;
        let t1 = c.comp(&[x1, z])?;
        let y = c.comp(&[y1, z])?;
        let e = self.fill(c.comp(&[ch1.v, t1])?, ch2.v)?;
        let (x3, t2, eps) = (e.v, e.f, e.rho);
        let t1x3 = c.comp(&[t1, x3])?;
        let yx3 = c.comp(&[y, x3])?;
        let lambda = c.vc(&[
            c.whisker_right(ch2.rho, t2)?,
            c.whisker_left(fs.f, eps)?,
            c.whisker_right(c.inv(ch1.rho)?, t1x3)?,
            c.hc(&[c.id2(u1), c.inv(eps1)?, c.id2(x3)])?,
            c.whisker_right(c.inv(r.alpha)?, yx3)?,
        ])?;
        let (z4, lambda_) = self.bf4(
            u2,
            c.comp(&[r.v2, yx3])?,
            c.comp(&[ch2.f, t2])?,
            lambda,
        )?;
        let yx3z4 = c.comp(&[yx3, z4])?;
        let x3z4 = c.comp(&[x3, z4])?;
        let rep = CellRep {
            apex: c.src(z4),
            v1: c.comp(&[t1x3, z4])?,
            v2: c.comp(&[t2, z4])?,
            alpha: c.hc(&[c.id2(fs.w), eps, c.id2(z4)])?,
            beta: c.vc(&[
                c.whisker_left(g2.f, lambda_)?,
                c.whisker_right(r.beta, yx3z4)?,
                c.hc(&[c.id2(g1.f), eps1, c.id2(x3z4)])?,
            ])?,
        };
        Ok((self.compose(fs, g1)?, self.compose(fs, g2)?, rep))
    }

    /// `Γ ∗ i_f̲`.
    pub fn whisker_right(&self, g: &FractionCell, fs: &Span) -> Result<FractionCell> {
        if self.span_dst(fs) != self.span_src(&g.source) {
            return Err(Error::NotComposable(format!(
                "{} after {}",
                self.span_name(&g.source),
                self.span_name(fs)
            )));
        }
        let (s, t, r) = self.whisker_right_rep(&g.source, &g.target, &g.rep, fs)?;
        self.cell(s, t, r)
            .map_err(|e| Error::Inconsistent(format!("right whiskering is invalid: {e}")))
    }

    /// `Γ′ ∗ Γ = (Γ′ ∗ i_f̲²) ⊙ (i_g̲¹ ∗ Γ)`.
    pub fn hcomp(&self, g: &FractionCell, g_: &FractionCell) -> Result<FractionCell> {
        let left = self.whisker_left(&g_.source, g)?;
        let right = self.whisker_right(g_, &g.target)?;
        self.vcomp(&left, &right)
    }

    // ---- invertibility ---------------------------------------------------

    /// The inverse 2-cell, if any.
    pub fn inverse(&self, g: &FractionCell) -> Option<FractionCell> {
        let c = &self.c;
        let id_s = self.identity_cell(g.source);
        let id_t = self.identity_cell(g.target);
        let is_inverse = |d: &FractionCell| {
            self.vcomp(g, d).ok() == Some(id_s) && self.vcomp(d, g).ok() == Some(id_t)
        };
        for m in self.members(g) {
            if let (Some(ai), Some(bi)) = (c.inverse(m.alpha), c.inverse(m.beta)) {
                let cand = CellRep {
                    apex: m.apex,
                    v1: m.v2,
                    v2: m.v1,
                    alpha: ai,
                    beta: bi,
                };
                if let Ok(d) = self.cell(g.target, g.source, cand) {
                    if is_inverse(&d) {
                        return Some(d);
                    }
                }
            }
        }
        self.cells(g.target, g.source).into_iter().find(is_inverse)
    }

    pub fn is_invertible(&self, g: &FractionCell) -> bool {
        self.inverse(g).is_some()
    }

    /// First invertible 2-cell `a ⇒ b`.
    pub fn find_invertible(&self, a: Span, b: Span) -> Option<FractionCell> {
        self.cells(a, b)
            .into_iter()
            .find(|g| self.is_invertible(g))
    }

    /// An invertible 2-cell `h̲∘(g̲∘f̲) ⇒ (h̲∘g̲)∘f̲`.
    pub fn find_associator_witness(
        &self,
        fs: &Span,
        gs: &Span,
        hs: &Span,
    ) -> Result<FractionCell> {
        let left = self.compose(&self.compose(fs, gs)?, hs)?;
        let right = self.compose(fs, &self.compose(gs, hs)?)?;
        if left == right {
            return Ok(self.identity_cell(left));
        }
        self.find_invertible(left, right).ok_or_else(|| {
            Error::Inconsistent(format!(
                "no associator between {} and {}",
                self.span_name(&left),
                self.span_name(&right)
            ))
        })
    }

    /// Number of spans and 2-cell classes per ordered pair of objects.
    pub fn cell_counts(&self) -> Vec<HomCount> {
        let c = &self.c;
        let mut out = Vec::new();
        for a in c.obj_ids() {
            for b in c.obj_ids() {
                let spans = self.spans(a, b);
                let cells = spans
                    .iter()
                    .flat_map(|s| spans.iter().map(move |t| (*s, *t)))
                    .map(|(s, t)| self.hom(s, t).n_classes())
                    .sum();
                out.push(HomCount {
                    src: c.obj_name(a).to_string(),
                    dst: c.obj_name(b).to_string(),
                    spans: spans.len(),
                    cells,
                });
            }
        }
        out
    }

    /// Longest equality chain needed in any hom between spans `a → b`.
    pub fn max_chain_length(&self) -> usize {
        let c = &self.c;
        let mut far = 0;
        for a in c.obj_ids() {
            for b in c.obj_ids() {
                let spans = self.spans(a, b);
                for s in &spans {
                    for t in &spans {
                        far = far.max(self.hom(*s, *t).max_chain_length());
                    }
                }
            }
        }
        far
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomCount {
    pub src: String,
    pub dst: String,
    pub spans: usize,
    pub cells: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn loc(doc: crate::doc::TwoCatDocument, c3: bool) -> Localization {
        let c = TwoCat::from_document(&doc).unwrap();
        let w = MorClass::from_names(&c, &doc.w).unwrap();
        localize(Arc::new(c), w, c3).unwrap()
    }

    #[test]
    fn forced_choices() {
        let l = loc(fixtures::f3(), true);
        let c = l.twocat();
        let w = c.mor_by_name("w").unwrap();
        let id0 = c.mor_by_name("id0").unwrap();
        let id1 = c.mor_by_name("id1").unwrap();
        let zero = c.obj_by_name("0").unwrap();
        assert_eq!(
            l.choices().get(id1, w).unwrap(),
            Filler { apex: zero, v: w, f: id0, rho: c.id2(w) }
        );
        assert_eq!(
            l.choices().get(w, id1).unwrap(),
            Filler { apex: zero, v: id0, f: w, rho: c.id2(w) }
        );
        assert_eq!(
            l.choices().get(w, w).unwrap(),
            Filler { apex: zero, v: id0, f: id0, rho: c.id2(w) }
        );
        assert!(l.choices().honors_c1(c));
        assert!(l.choices().honors_c2(c));
        assert!(l.choices().honors_c3(c));
    }

    #[test]
    fn inverse_of_w_composes_to_identity() {
        let l = loc(fixtures::f3(), true);
        let c = l.twocat();
        let w = c.mor_by_name("w").unwrap();
        let id0 = c.mor_by_name("id0").unwrap();
        let zero = c.obj_by_name("0").unwrap();
        let inv = Span { apex: zero, w, f: id0 };
        assert_eq!(l.compose(&l.u_mor(w), &inv).unwrap(), l.identity_span(zero));
    }

    #[test]
    fn strict_unitality() {
        let l = loc(fixtures::f6(), true);
        let c = l.twocat();
        for a in c.obj_ids() {
            for b in c.obj_ids() {
                for s in l.spans(a, b) {
                    assert_eq!(l.compose(&l.identity_span(a), &s).unwrap(), s);
                    assert_eq!(l.compose(&s, &l.identity_span(b)).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn tau_is_not_identity_after_localizing() {
        let l = loc(fixtures::f7(), true);
        let c = l.twocat();
        let f = c.mor_by_name("f").unwrap();
        let tau = c.cell_by_name("tau").unwrap();
        let a = l.u_cell(c.id2(f)).unwrap();
        let b = l.u_cell(tau).unwrap();
        assert_ne!(a, b);
        assert_eq!(l.vcomp(&b, &b).unwrap(), a);
        assert_eq!(a, l.identity_cell(l.u_mor(f)));
    }

    #[test]
    fn identical_reps_have_empty_chain() {
        let l = loc(fixtures::f7(), true);
        let c = l.twocat();
        let tau = c.cell_by_name("tau").unwrap();
        let g = l.u_cell(tau).unwrap();
        assert_eq!(l.equality_chain(g.source, g.target, &g.rep, &g.rep), Some(vec![]));
    }

    #[test]
    fn localizing_walking_arrow() {
        let l = loc(fixtures::f3(), true);
        let c = l.twocat();
        let (zero, one) = (c.obj_by_name("0").unwrap(), c.obj_by_name("1").unwrap());
        assert!(!l.spans(one, zero).is_empty());
        let l = {
            let c = TwoCat::from_document(&fixtures::f3()).unwrap();
            let w = MorClass::identities(&c);
            localize(Arc::new(c), w, true).unwrap()
        };
        assert!(l.spans(one, zero).is_empty());
    }

    #[test]
    fn bf_failure_is_reported() {
        let c = TwoCat::from_document(&fixtures::f4()).unwrap();
        let w = MorClass::from_names(&c, &fixtures::f4().w).unwrap();
        assert!(matches!(localize(Arc::new(c), w, true), Err(Error::BfFailed(_))));
    }
}
