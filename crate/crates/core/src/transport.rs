//! Strict 2-functors, saturation compatibility, induced pseudofunctors
//! between localizations, and the (X1)/(X2) weak-equivalence conditions.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

use crate::doc::FunctorDocument;
use crate::error::{Error, Result, StructureError};
use crate::fractions::{FractionCell, Localization, Span};
use crate::report::{Check, ValidationReport};
use crate::saturation::{check_bf, saturate, MorClass};
use crate::twocat::{Cell, Mor, Obj, TwoCat};

/// A strict 2-functor as three total tables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrictTwoFunctor {
    pub obj: Vec<Obj>,
    pub mor: Vec<Mor>,
    pub cell: Vec<Cell>,
}

impl StrictTwoFunctor {
    pub fn identity(c: &TwoCat) -> StrictTwoFunctor {
        StrictTwoFunctor {
            obj: c.obj_ids().collect(),
            mor: c.mor_ids().collect(),
            cell: c.cell_ids().collect(),
        }
    }

    pub fn from_document(
        src: &TwoCat,
        dst: &TwoCat,
        doc: &FunctorDocument,
    ) -> Result<StrictTwoFunctor, StructureError> {
        fn table<T: Copy>(
            table: &'static str,
            names: impl Iterator<Item = String>,
            map: &std::collections::BTreeMap<String, String>,
            known: impl Fn(&str) -> bool,
            resolve: impl Fn(&str) -> Option<T>,
        ) -> Result<Vec<T>, StructureError> {
            for k in map.keys() {
                if !known(k) {
                    return Err(StructureError::Dangling {
                        table,
                        id: k.clone(),
                    });
                }
            }
            names
                .map(|n| {
                    let v = map.get(&n).ok_or_else(|| StructureError::Missing {
                        table,
                        entry: n.clone(),
                    })?;
                    resolve(v).ok_or_else(|| StructureError::Dangling {
                        table,
                        id: v.clone(),
                    })
                })
                .collect()
        }
        Ok(StrictTwoFunctor {
            obj: table(
                "objects",
                src.obj_ids().map(|o| src.obj_name(o).to_string()),
                &doc.objects,
                |k| src.obj_by_name(k).is_some(),
                |v| dst.obj_by_name(v),
            )?,
            mor: table(
                "morphisms",
                src.mor_ids().map(|m| src.mor_name(m).to_string()),
                &doc.morphisms,
                |k| src.mor_by_name(k).is_some(),
                |v| dst.mor_by_name(v),
            )?,
            cell: table(
                "twocells",
                src.cell_ids().map(|x| src.cell_name(x).to_string()),
                &doc.twocells,
                |k| src.cell_by_name(k).is_some(),
                |v| dst.cell_by_name(v),
            )?,
        })
    }

    pub fn to_document(&self, src: &TwoCat, dst: &TwoCat) -> FunctorDocument {
        FunctorDocument {
            objects: src
                .obj_ids()
                .map(|o| (src.obj_name(o).into(), dst.obj_name(self.obj[o.0]).into()))
                .collect(),
            morphisms: src
                .mor_ids()
                .map(|m| (src.mor_name(m).into(), dst.mor_name(self.mor[m.0]).into()))
                .collect(),
            twocells: src
                .cell_ids()
                .map(|x| (src.cell_name(x).into(), dst.cell_name(self.cell[x.0]).into()))
                .collect(),
        }
    }

    pub fn ob(&self, o: Obj) -> Obj {
        self.obj[o.0]
    }

    pub fn on(&self, m: Mor) -> Mor {
        self.mor[m.0]
    }

    pub fn on_cell(&self, x: Cell) -> Cell {
        self.cell[x.0]
    }

    /// The image of a class.
    pub fn image(&self, dst: &TwoCat, w: &MorClass) -> MorClass {
        MorClass::from_mors(dst, w.members().map(|m| self.on(m)))
    }

    /// Members of `w` whose image misses `target`.
    pub fn escaping(&self, w: &MorClass, target: &MorClass) -> Vec<Mor> {
        w.members().filter(|&m| !target.contains(self.on(m))).collect()
    }

    /// `F₁⁻¹(target)`.
    pub fn preimage(&self, src: &TwoCat, target: &MorClass) -> MorClass {
        MorClass::from_mors(src, src.mor_ids().filter(|&m| target.contains(self.on(m))))
    }
}

/// Exhaustive check that the tables strictly preserve all structure.
pub fn validate_functor(src: &TwoCat, dst: &TwoCat, f: &StrictTwoFunctor) -> ValidationReport {
    let m = |x: Mor| src.mor_name(x).to_string();
    let cn = |x: Cell| src.cell_name(x).to_string();
    let mut checks = Vec::new();
    checks.push(Check::from_result(
        "mor_types",
        src.mor_ids()
            .find(|&x| {
                dst.src(f.on(x)) != f.ob(src.src(x)) || dst.dst(f.on(x)) != f.ob(src.dst(x))
            })
            .map(|x| vec![m(x)]),
    ));
    checks.push(Check::from_result(
        "cell_types",
        src.cell_ids()
            .find(|&x| {
                dst.cell_src(f.on_cell(x)) != f.on(src.cell_src(x))
                    || dst.cell_dst(f.on_cell(x)) != f.on(src.cell_dst(x))
            })
            .map(|x| vec![cn(x)]),
    ));
    checks.push(Check::from_result(
        "identities",
        src.obj_ids()
            .find(|&o| f.on(src.id1(o)) != dst.id1(f.ob(o)))
            .map(|o| vec![src.obj_name(o).to_string()]),
    ));
    checks.push(Check::from_result(
        "identity2",
        src.mor_ids()
            .find(|&x| f.on_cell(src.id2(x)) != dst.id2(f.on(x)))
            .map(|x| vec![m(x)]),
    ));
    checks.push(Check::from_result(
        "compose",
        src.composable_pairs()
            .find(|&(g, h)| {
                Some(f.on(src.compose(g, h).unwrap())) != dst.compose(f.on(g), f.on(h))
            })
            .map(|(g, h)| vec![m(g), m(h)]),
    ));
    checks.push(Check::from_result(
        "vcomp",
        src.vertical_pairs()
            .find(|&(b, a)| {
                Some(f.on_cell(src.vcomp(b, a).unwrap()))
                    != dst.vcomp(f.on_cell(b), f.on_cell(a))
            })
            .map(|(b, a)| vec![cn(a), cn(b)]),
    ));
    checks.push(Check::from_result(
        "hcomp",
        src.horizontal_pairs()
            .find(|&(b, a)| {
                Some(f.on_cell(src.hcomp(b, a).unwrap()))
                    != dst.hcomp(f.on_cell(b), f.on_cell(a))
            })
            .map(|(b, a)| vec![cn(a), cn(b)]),
    ));
    ValidationReport { checks }
}

/// Every strict 2-functor `src → dst`, at most `limit` of them.
pub fn enumerate_functors(src: &TwoCat, dst: &TwoCat, limit: usize) -> Vec<StrictTwoFunctor> {
    let mut out = Vec::new();
    let n_obj = src.n_objects();
    let mut obj = vec![Obj(0); n_obj];
    let total = dst.n_objects().pow(n_obj as u32);
    for code in 0..total {
        let mut k = code;
        for o in obj.iter_mut() {
            *o = Obj(k % dst.n_objects());
            k /= dst.n_objects();
        }
        let mut mor = vec![None; src.n_mors()];
        extend_mors(src, dst, &obj, &mut mor, 0, &mut out, limit);
        if out.len() >= limit {
            break;
        }
    }
    out
}

fn mors_consistent(src: &TwoCat, dst: &TwoCat, mor: &[Option<Mor>], k: usize) -> bool {
    let x = Mor(k);
    src.composable_pairs()
        .filter(|&(g, f)| g == x || f == x || src.compose(g, f) == Some(x))
        .all(|(g, f)| {
            let gf = src.compose(g, f).unwrap();
            match (mor[g.0], mor[f.0], mor[gf.0]) {
                (Some(a), Some(b), Some(r)) => dst.compose(a, b) == Some(r),
                _ => true,
            }
        })
}

fn extend_mors(
    src: &TwoCat,
    dst: &TwoCat,
    obj: &[Obj],
    mor: &mut Vec<Option<Mor>>,
    k: usize,
    out: &mut Vec<StrictTwoFunctor>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    if k == mor.len() {
        let mor: Vec<Mor> = mor.iter().map(|m| m.unwrap()).collect();
        let mut cell = vec![None; src.n_cells()];
        extend_cells(src, dst, obj, &mor, &mut cell, 0, out, limit);
        return;
    }
    let x = Mor(k);
    let candidates: Vec<Mor> = if src.is_identity(x) {
        vec![dst.id1(obj[src.src(x).0])]
    } else {
        dst.hom(obj[src.src(x).0], obj[src.dst(x).0]).to_vec()
    };
    for cand in candidates {
        mor[k] = Some(cand);
        if mors_consistent(src, dst, mor, k) {
            extend_mors(src, dst, obj, mor, k + 1, out, limit);
        }
    }
    mor[k] = None;
}

fn cells_consistent(src: &TwoCat, dst: &TwoCat, cell: &[Option<Cell>], k: usize) -> bool {
    let x = Cell(k);
    let ok = |(b, a): (Cell, Cell), r: Option<Cell>, op: &dyn Fn(Cell, Cell) -> Option<Cell>| {
        match (cell[b.0], cell[a.0], r.and_then(|r| cell[r.0])) {
            (Some(fb), Some(fa), Some(fr)) => op(fb, fa) == Some(fr),
            _ => true,
        }
    };
    src.vertical_pairs()
        .filter(|&(b, a)| b == x || a == x || src.vcomp(b, a) == Some(x))
        .all(|p| ok(p, src.vcomp(p.0, p.1), &|b, a| dst.vcomp(b, a)))
        && src
            .horizontal_pairs()
            .filter(|&(b, a)| b == x || a == x || src.hcomp(b, a) == Some(x))
            .all(|p| ok(p, src.hcomp(p.0, p.1), &|b, a| dst.hcomp(b, a)))
}

#[allow(clippy::too_many_arguments)]
fn extend_cells(
    src: &TwoCat,
    dst: &TwoCat,
    obj: &[Obj],
    mor: &[Mor],
    cell: &mut Vec<Option<Cell>>,
    k: usize,
    out: &mut Vec<StrictTwoFunctor>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    if k == cell.len() {
        out.push(StrictTwoFunctor {
            obj: obj.to_vec(),
            mor: mor.to_vec(),
            cell: cell.iter().map(|c| c.unwrap()).collect(),
        });
        return;
    }
    let x = Cell(k);
    let (f, g) = (mor[src.cell_src(x).0], mor[src.cell_dst(x).0]);
    let candidates: Vec<Cell> = if src.id2(src.cell_src(x)) == x {
        vec![dst.id2(f)]
    } else {
        dst.cells_between(f, g).to_vec()
    };
    for cand in candidates {
        cell[k] = Some(cand);
        if cells_consistent(src, dst, cell, k) {
            extend_cells(src, dst, obj, mor, cell, k + 1, out, limit);
        }
    }
    cell[k] = None;
}

/// Both clauses of the saturation-compatibility criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationCompatibility {
    /// `F₁(W_A) ⊆ W_B,sat`
    pub clause_i: bool,
    /// `F₁(W_A,sat) ⊆ W_B,sat`
    pub clause_ii: bool,
    pub src_saturation: Vec<String>,
    pub dst_saturation: Vec<String>,
    pub escaping: Vec<String>,
}

impl SaturationCompatibility {
    pub fn agree(&self) -> bool {
        self.clause_i == self.clause_ii
    }
}

pub fn theo04_check(
    src: &TwoCat,
    w_src: &MorClass,
    dst: &TwoCat,
    w_dst: &MorClass,
    f: &StrictTwoFunctor,
) -> Result<SaturationCompatibility> {
    for (side, c, w) in [("source", src, w_src), ("target", dst, w_dst)] {
        let r = check_bf(c, w);
        if !r.pass() {
            return Err(Error::Precondition(format!(
                "{side} class fails (BF): {}",
                r.summary()
            )));
        }
    }
    let sat_src = saturate(src, w_src);
    let sat_dst = saturate(dst, w_dst);
    let escaping = f.escaping(w_src, &sat_dst);
    Ok(SaturationCompatibility {
        clause_i: escaping.is_empty(),
        clause_ii: f.escaping(&sat_src, &sat_dst).is_empty(),
        src_saturation: sat_src.names(src),
        dst_saturation: sat_dst.names(dst),
        escaping: escaping.iter().map(|&m| src.mor_name(m).to_string()).collect(),
    })
}

/// `preimage = F₁⁻¹(W_B,sat)` compared with `W_A,sat`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreimageCheck {
    pub preimage: Vec<String>,
    pub src_saturation: Vec<String>,
    pub equal: bool,
}

pub fn preimage_check(
    src: &TwoCat,
    w_src: &MorClass,
    dst: &TwoCat,
    w_dst: &MorClass,
    f: &StrictTwoFunctor,
) -> PreimageCheck {
    let pre = f.preimage(src, &saturate(dst, w_dst));
    let sat = saturate(src, w_src);
    PreimageCheck {
        preimage: pre.names(src),
        src_saturation: sat.names(src),
        equal: pre == sat,
    }
}

// ---- induced pseudofunctor ---------------------------------------------------

/// The pseudofunctor `C[W_A⁻¹] → D[W⁻¹]` induced by a strict 2-functor.
pub struct InducedPseudofunctor<'a> {
    pub src: &'a Localization,
    pub dst: &'a Localization,
    pub functor: &'a StrictTwoFunctor,
    /// Invertible `G(g̲∘f̲) ⇒ G(g̲)∘G(f̲)` per composable pair `(f̲, g̲)`.
    pub associators: HashMap<(Span, Span), FractionCell>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InduceSummary {
    pub spans: usize,
    pub classes: usize,
    pub representatives: usize,
    pub associators: usize,
    pub strict_associators: usize,
    pub well_defined: bool,
    pub strict_square: bool,
}

impl<'a> InducedPseudofunctor<'a> {
    pub fn map_obj(&self, o: Obj) -> Obj {
        self.functor.ob(o)
    }

    pub fn map_span(&self, s: &Span) -> Span {
        let f = self.functor;
        Span {
            apex: f.ob(s.apex),
            w: f.on(s.w),
            f: f.on(s.f),
        }
    }

    pub fn map_rep(&self, r: &crate::fractions::CellRep) -> crate::fractions::CellRep {
        let f = self.functor;
        crate::fractions::CellRep {
            apex: f.ob(r.apex),
            v1: f.on(r.v1),
            v2: f.on(r.v2),
            alpha: f.on_cell(r.alpha),
            beta: f.on_cell(r.beta),
        }
    }

    pub fn map_cell(&self, g: &FractionCell) -> Result<FractionCell> {
        self.dst.cell(
            self.map_span(&g.source),
            self.map_span(&g.target),
            self.map_rep(&g.rep),
        )
    }

    fn all_src_spans(&self) -> Vec<Span> {
        let c = self.src.twocat();
        c.obj_ids()
            .flat_map(|a| c.obj_ids().map(move |b| (a, b)))
            .flat_map(|(a, b)| self.src.spans(a, b))
            .collect()
    }
}

/// Builds the induced pseudofunctor, checking eagerly that the cell map does
/// not depend on representatives and that it commutes strictly with the
/// universal pseudofunctors.
pub fn induce<'a>(
    src: &'a Localization,
    dst: &'a Localization,
    functor: &'a StrictTwoFunctor,
) -> Result<(InducedPseudofunctor<'a>, InduceSummary)> {
    let (a, b) = (src.twocat(), dst.twocat());
    if let Some(&m) = functor.escaping(src.class(), dst.class()).first() {
        return Err(Error::Precondition(format!(
            "{} is sent outside the target class",
            a.mor_name(m)
        )));
    }
    if !dst.choices().honors_c3(b) {
        return Err(Error::Precondition(
            "target choices do not satisfy (C3)".into(),
        ));
    }
    let mut g = InducedPseudofunctor {
        src,
        dst,
        functor,
        associators: HashMap::new(),
    };
    let mut summary = InduceSummary {
        well_defined: true,
        strict_square: true,
        ..Default::default()
    };
    let spans = g.all_src_spans();
    summary.spans = spans.len();
    for s in &spans {
        if !dst.is_valid_span(&g.map_span(s)) {
            return Err(Error::Inconsistent(format!(
                "image of {} is not a span",
                src.span_name(s)
            )));
        }
        for t in spans.iter().filter(|t| {
            src.span_src(t) == src.span_src(s) && src.span_dst(t) == src.span_dst(s)
        }) {
            let hom = src.hom(*s, *t);
            for class in hom.classes() {
                summary.classes += 1;
                let image = g.map_cell(&FractionCell {
                    source: *s,
                    target: *t,
                    rep: class,
                })?;
                for r in hom.class_members(&class) {
                    summary.representatives += 1;
                    let other = dst.cell(image.source, image.target, g.map_rep(&r))?;
                    if other != image {
                        return Err(Error::Inconsistent(format!(
                            "induced cell depends on the representative: {} and {}",
                            src.rep_name(&class),
                            src.rep_name(&r)
                        )));
                    }
                }
            }
        }
    }
    for f in &spans {
        for h in spans.iter().filter(|h| src.span_src(h) == src.span_dst(f)) {
            let lhs = g.map_span(&src.compose(f, h)?);
            let rhs = dst.compose(&g.map_span(f), &g.map_span(h))?;
            let cell = if lhs == rhs {
                summary.strict_associators += 1;
                dst.identity_cell(lhs)
            } else {
                dst.find_invertible(lhs, rhs).ok_or_else(|| {
                    Error::Inconsistent(format!(
                        "no invertible 2-cell relates the images of {} and {}",
                        src.span_name(f),
                        src.span_name(h)
                    ))
                })?
            };
            g.associators.insert((*f, *h), cell);
        }
    }
    summary.associators = g.associators.len();
    for m in a.mor_ids() {
        if g.map_span(&src.u_mor(m)) != dst.u_mor(functor.on(m)) {
            summary.strict_square = false;
        }
    }
    for x in a.cell_ids() {
        if g.map_cell(&src.u_cell(x)?)? != dst.u_cell(functor.on_cell(x))? {
            summary.strict_square = false;
        }
    }
    Ok((g, summary))
}

// ---- (X1) / (X2) -------------------------------------------------------------

/// A finite bicategory that can be enumerated cell by cell.
pub trait Enumerable {
    type One: Copy + Eq + Hash + Debug;
    type Two: Copy + Eq + Hash + Debug;

    fn objects(&self) -> Vec<Obj>;
    fn ones(&self, a: Obj, b: Obj) -> Vec<Self::One>;
    fn twos(&self, f: &Self::One, g: &Self::One) -> Vec<Self::Two>;
    fn identity(&self, a: Obj) -> Self::One;
    /// `g ∘ f`
    fn compose(&self, f: &Self::One, g: &Self::One) -> Self::One;
    fn is_invertible(&self, x: &Self::Two) -> bool;
    fn obj_name(&self, a: Obj) -> String;
    fn one_name(&self, f: &Self::One) -> String;
    fn two_name(&self, x: &Self::Two) -> String;

    fn has_invertible(&self, f: &Self::One, g: &Self::One) -> bool {
        self.twos(f, g).iter().any(|x| self.is_invertible(x))
    }

    fn is_equivalence(&self, a: Obj, b: Obj, e: &Self::One) -> bool {
        self.ones(b, a).iter().any(|eb| {
            self.has_invertible(&self.identity(a), &self.compose(e, eb))
                && self.has_invertible(&self.compose(eb, e), &self.identity(b))
        })
    }
}

impl Enumerable for TwoCat {
    type One = Mor;
    type Two = Cell;

    fn objects(&self) -> Vec<Obj> {
        self.obj_ids().collect()
    }
    fn ones(&self, a: Obj, b: Obj) -> Vec<Mor> {
        self.hom(a, b).to_vec()
    }
    fn twos(&self, f: &Mor, g: &Mor) -> Vec<Cell> {
        self.cells_between(*f, *g).to_vec()
    }
    fn identity(&self, a: Obj) -> Mor {
        self.id1(a)
    }
    fn compose(&self, f: &Mor, g: &Mor) -> Mor {
        TwoCat::compose(self, *g, *f).expect("composable")
    }
    fn is_invertible(&self, x: &Cell) -> bool {
        TwoCat::is_invertible(self, *x)
    }
    fn obj_name(&self, a: Obj) -> String {
        TwoCat::obj_name(self, a).to_string()
    }
    fn one_name(&self, f: &Mor) -> String {
        self.mor_name(*f).to_string()
    }
    fn two_name(&self, x: &Cell) -> String {
        self.cell_name(*x).to_string()
    }
}

impl Enumerable for Localization {
    type One = Span;
    type Two = FractionCell;

    fn objects(&self) -> Vec<Obj> {
        self.twocat().obj_ids().collect()
    }
    fn ones(&self, a: Obj, b: Obj) -> Vec<Span> {
        self.spans(a, b)
    }
    fn twos(&self, f: &Span, g: &Span) -> Vec<FractionCell> {
        self.cells(*f, *g)
    }
    fn identity(&self, a: Obj) -> Span {
        self.identity_span(a)
    }
    fn compose(&self, f: &Span, g: &Span) -> Span {
        Localization::compose(self, f, g).expect("composable")
    }
    fn is_invertible(&self, x: &FractionCell) -> bool {
        Localization::is_invertible(self, x)
    }
    fn obj_name(&self, a: Obj) -> String {
        self.twocat().obj_name(a).to_string()
    }
    fn one_name(&self, f: &Span) -> String {
        self.span_name(f)
    }
    fn two_name(&self, x: &FractionCell) -> String {
        format!(
            "{}:{}=>{}",
            self.rep_name(&x.rep),
            self.span_name(&x.source),
            self.span_name(&x.target)
        )
    }
}

/// A map between enumerable bicategories, on objects, 1-cells and 2-cells.
pub trait BicatMap<S: Enumerable, T: Enumerable> {
    fn map_obj(&self, a: Obj) -> Obj;
    fn map_one(&self, f: &S::One) -> T::One;
    fn map_two(&self, x: &S::Two) -> Result<T::Two>;
}

impl BicatMap<TwoCat, TwoCat> for StrictTwoFunctor {
    fn map_obj(&self, a: Obj) -> Obj {
        self.ob(a)
    }
    fn map_one(&self, f: &Mor) -> Mor {
        self.on(*f)
    }
    fn map_two(&self, x: &Cell) -> Result<Cell> {
        Ok(self.on_cell(*x))
    }
}

impl<'a> BicatMap<Localization, Localization> for InducedPseudofunctor<'a> {
    fn map_obj(&self, a: Obj) -> Obj {
        InducedPseudofunctor::map_obj(self, a)
    }
    fn map_one(&self, f: &Span) -> Span {
        self.map_span(f)
    }
    fn map_two(&self, x: &FractionCell) -> Result<FractionCell> {
        self.map_cell(x)
    }
}

/// (X1), (X2a), (X2b) and (X2c) verdicts; all four hold iff the map is a
/// weak equivalence.
pub fn check_x_conditions<S, T, G>(src: &S, dst: &T, g: &G) -> Result<ValidationReport>
where
    S: Enumerable,
    T: Enumerable,
    G: BicatMap<S, T>,
{
    let objs = src.objects();
    let x1 = dst.objects().into_iter().find_map(|b| {
        let hit = objs.iter().any(|&a| {
            let fa = g.map_obj(a);
            dst.ones(fa, b).iter().any(|e| dst.is_equivalence(fa, b, e))
        });
        (!hit).then(|| vec![dst.obj_name(b)])
    });

    let (mut x2a, mut x2b, mut x2c) = (None, None, None);
    for &a in &objs {
        for &a2 in &objs {
            let (fa, fa2) = (g.map_obj(a), g.map_obj(a2));
            let ones = src.ones(a, a2);
            let images: Vec<T::One> = ones.iter().map(|f| g.map_one(f)).collect();
            if x2a.is_none() {
                x2a = dst
                    .ones(fa, fa2)
                    .into_iter()
                    .find(|t| !images.iter().any(|i| dst.has_invertible(i, t)))
                    .map(|t| vec![src.obj_name(a), src.obj_name(a2), dst.one_name(&t)]);
            }
            for (f, ff) in ones.iter().zip(&images) {
                for (f2, ff2) in ones.iter().zip(&images) {
                    let cells = src.twos(f, f2);
                    let mut seen: HashMap<T::Two, S::Two> = HashMap::new();
                    for x in &cells {
                        let y = g.map_two(x)?;
                        if let Some(prev) = seen.insert(y, *x) {
                            if x2b.is_none() && prev != *x {
                                x2b = Some(vec![src.two_name(&prev), src.two_name(x)]);
                            }
                        }
                    }
                    if x2c.is_none() {
                        x2c = dst
                            .twos(ff, ff2)
                            .into_iter()
                            .find(|y| !seen.contains_key(y))
                            .map(|y| {
                                vec![src.one_name(f), src.one_name(f2), dst.two_name(&y)]
                            });
                    }
                }
            }
        }
    }
    Ok(ValidationReport {
        checks: vec![
            Check::from_result("X1", x1),
            Check::from_result("X2a", x2a),
            Check::from_result("X2b", x2b),
            Check::from_result("X2c", x2c),
        ],
    })
}

// ---- choice independence -----------------------------------------------------

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ChoiceComparison {
    pub pairs: usize,
    pub strictly_equal: usize,
    pub connected: usize,
    /// Composable pairs whose two composites admit no invertible 2-cell.
    pub unconnected: Vec<Vec<String>>,
}

/// Compares two localizations of the same `(C, W)` built from different
/// choice tables: the identity on cells must be functorial up to invertible
/// 2-cells between the two composites of every composable pair.
pub fn compare_choice_tables(l1: &Localization, l2: &Localization) -> Result<ChoiceComparison> {
    let c = l1.twocat();
    let mut out = ChoiceComparison::default();
    let spans: Vec<Span> = c
        .obj_ids()
        .flat_map(|a| c.obj_ids().map(move |b| (a, b)))
        .flat_map(|(a, b)| l1.spans(a, b))
        .collect();
    for f in &spans {
        for g in spans.iter().filter(|g| l1.span_src(g) == l1.span_dst(f)) {
            out.pairs += 1;
            let (x, y) = (l1.compose(f, g)?, l2.compose(f, g)?);
            if x == y {
                out.strictly_equal += 1;
            } else if l1.find_invertible(x, y).is_some() {
                out.connected += 1;
            } else {
                out.unconnected.push(vec![l1.span_name(f), l1.span_name(g)]);
            }
        }
    }
    Ok(out)
}
