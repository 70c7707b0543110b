//! Classes of 1-cells, the (BF) conditions, quasi-units and right saturation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::Check;
use crate::twocat::{internal_equivalences, Cell, Mor, Obj, TwoCat};

/// A subset of the 1-cells of one [`TwoCat`], as a membership mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MorClass {
    mask: Vec<bool>,
}

impl MorClass {
    pub fn empty(c: &TwoCat) -> MorClass {
        MorClass {
            mask: vec![false; c.n_mors()],
        }
    }

    pub fn all(c: &TwoCat) -> MorClass {
        MorClass {
            mask: vec![true; c.n_mors()],
        }
    }

    pub fn identities(c: &TwoCat) -> MorClass {
        MorClass {
            mask: c.mor_ids().map(|m| c.is_identity(m)).collect(),
        }
    }

    pub fn from_mask(mask: Vec<bool>) -> MorClass {
        MorClass { mask }
    }

    pub fn from_mors(c: &TwoCat, mors: impl IntoIterator<Item = Mor>) -> MorClass {
        let mut w = MorClass::empty(c);
        for m in mors {
            w.insert(m);
        }
        w
    }

    pub fn from_names<S: AsRef<str>>(c: &TwoCat, names: &[S]) -> Result<MorClass> {
        let mut w = MorClass::empty(c);
        for n in names {
            let m = c.mor_by_name(n.as_ref()).ok_or_else(|| {
                Error::Structure(crate::error::StructureError::Dangling {
                    table: "W",
                    id: n.as_ref().to_string(),
                })
            })?;
            w.insert(m);
        }
        Ok(w)
    }

    pub fn contains(&self, m: Mor) -> bool {
        self.mask[m.0]
    }

    pub fn insert(&mut self, m: Mor) {
        self.mask[m.0] = true;
    }

    pub fn members(&self) -> impl Iterator<Item = Mor> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| Mor(i))
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn names(&self, c: &TwoCat) -> Vec<String> {
        self.members().map(|m| c.mor_name(m).to_string()).collect()
    }

    pub fn is_subset(&self, other: &MorClass) -> bool {
        self.mask.iter().zip(&other.mask).all(|(&a, &b)| !a || b)
    }

    pub fn union(&self, other: &MorClass) -> MorClass {
        MorClass {
            mask: self.mask.iter().zip(&other.mask).map(|(&a, &b)| a || b).collect(),
        }
    }

    pub fn close_under_composition(&mut self, c: &TwoCat) {
        loop {
            let mut changed = false;
            for (g, f) in c.composable_pairs().collect::<Vec<_>>() {
                if self.contains(g) && self.contains(f) {
                    let gf = c.compose(g, f).expect("composable");
                    if !self.contains(gf) {
                        self.insert(gf);
                        changed = true;
                    }
                }
            }
            if !changed {
                return;
            }
        }
    }

    /// Adds every 1-cell related to a member by an invertible 2-cell.
    pub fn close_under_invertible_cells(&mut self, c: &TwoCat) {
        for v in c.mor_ids() {
            let (a, b) = (c.src(v), c.dst(v));
            if c.hom(a, b)
                .iter()
                .any(|&w| self.contains(w) && c.invertible_between(v, w).next().is_some())
            {
                self.insert(v);
            }
        }
    }
}

/// Verdicts for BF1, BF2, BF3, BF4a, BF4b, BF4c and BF5, in that order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BfReport {
    pub checks: Vec<Check>,
}

impl BfReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, axiom: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == axiom)
    }

    pub fn summary(&self) -> String {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| {
                format!(
                    "{} at ({})",
                    c.name,
                    c.counterexample.clone().unwrap_or_default().join(", ")
                )
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// A filler `(A″, v′, f′, ρ)` of the cospan `A′ →f B ←v B′`:
/// `v′: A″ → A′` in `W`, `f′: A″ → B′` and invertible `ρ: f∘v′ ⇒ v∘f′`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Filler {
    pub apex: Obj,
    pub v: Mor,
    pub f: Mor,
    pub rho: Cell,
}

/// All fillers of the cospan `(f, v)`, ordered by apex, `v′`, `f′`, `ρ`.
pub fn cospan_fillers<'a>(
    c: &'a TwoCat,
    w: &'a MorClass,
    f: Mor,
    v: Mor,
) -> impl Iterator<Item = Filler> + 'a {
    let (a1, b1) = (c.src(f), c.src(v));
    c.obj_ids().flat_map(move |apex| {
        c.hom(apex, a1)
            .iter()
            .copied()
            .filter(move |&v2| w.contains(v2))
            .flat_map(move |v2| {
                c.hom(apex, b1).iter().copied().flat_map(move |f2| {
                    let lhs = c.compose(f, v2).expect("typed");
                    let rhs = c.compose(v, f2).expect("typed");
                    c.invertible_between(lhs, rhs).map(move |rho| Filler {
                        apex,
                        v: v2,
                        f: f2,
                        rho,
                    })
                })
            })
    })
}

pub fn fill_cospan(c: &TwoCat, w: &MorClass, f: Mor, v: Mor) -> Result<Filler> {
    cospan_fillers(c, w, f, v).next().ok_or_else(|| Error::Axiom {
        axiom: "BF3",
        detail: format!("cospan ({}, {})", c.mor_name(f), c.mor_name(v)),
    })
}

/// Solutions `(v, β)` of the BF4 problem for `w ∈ W` and
/// `α: w∘f1 ⇒ w∘f2`: `v ∈ W` into the source of `f1` and
/// `β: f1∘v ⇒ f2∘v` with `α ∗ i_v = i_w ∗ β`.
pub fn bf4_solutions<'a>(
    c: &'a TwoCat,
    wc: &'a MorClass,
    w: Mor,
    f1: Mor,
    f2: Mor,
    alpha: Cell,
) -> impl Iterator<Item = (Mor, Cell)> + 'a {
    let target = c.src(f1);
    c.mors_into(target)
        .filter(move |&v| wc.contains(v))
        .flat_map(move |v| {
            let lhs = c.hcomp(alpha, c.id2(v)).expect("typed");
            let (a, b) = (c.compose(f1, v).unwrap(), c.compose(f2, v).unwrap());
            c.cells_between(a, b)
                .iter()
                .copied()
                .filter(move |&beta| c.hcomp(c.id2(w), beta) == Some(lhs))
                .map(move |beta| (v, beta))
        })
}

/// A BF4 solution, invertible whenever `α` is.
pub fn bf4_solve(
    c: &TwoCat,
    wc: &MorClass,
    w: Mor,
    f1: Mor,
    f2: Mor,
    alpha: Cell,
) -> Result<(Mor, Cell)> {
    let need_inv = c.is_invertible(alpha);
    bf4_solutions(c, wc, w, f1, f2, alpha)
        .find(|&(_, beta)| !need_inv || c.is_invertible(beta))
        .ok_or_else(|| Error::Axiom {
            axiom: if need_inv { "BF4b" } else { "BF4a" },
            detail: format!(
                "{} over {}",
                c.cell_name(alpha),
                c.mor_name(w)
            ),
        })
}

fn bf4c_joins(
    c: &TwoCat,
    wc: &MorClass,
    f1: Mor,
    f2: Mor,
    (v, beta): (Mor, Cell),
    (v2, beta2): (Mor, Cell),
) -> bool {
    let (d, d2) = (c.src(v), c.src(v2));
    c.obj_ids().any(|e| {
        c.hom(e, d).iter().any(|&s| {
            let vs = c.compose(v, s).unwrap();
            if !wc.contains(vs) {
                return false;
            }
            c.hom(e, d2).iter().any(|&p| {
                let vp = c.compose(v2, p).unwrap();
                c.invertible_between(vs, vp).any(|nu| {
                    let lhs = c
                        .hcomp(beta2, c.id2(p))
                        .zip(c.hcomp(c.id2(f1), nu))
                        .and_then(|(x, y)| c.vcomp(x, y));
                    let rhs = c
                        .hcomp(c.id2(f2), nu)
                        .zip(c.hcomp(beta, c.id2(s)))
                        .and_then(|(x, y)| c.vcomp(x, y));
                    lhs.is_some() && lhs == rhs
                })
            })
        })
    })
}

/// Exhaustive check of the seven (BF) verdicts.
pub fn check_bf(c: &TwoCat, w: &MorClass) -> BfReport {
    let name = |m: Mor| c.mor_name(m).to_string();
    let cname = |x: Cell| c.cell_name(x).to_string();
    let mut checks = Vec::new();

    checks.push(Check::from_result(
        "BF1",
        c.obj_ids()
            .map(|o| c.id1(o))
            .find(|&m| !w.contains(m))
            .map(|m| vec![name(m)]),
    ));

    checks.push(Check::from_result(
        "BF2",
        c.composable_pairs()
            .find(|&(g, f)| {
                w.contains(g) && w.contains(f) && !w.contains(c.compose(g, f).unwrap())
            })
            .map(|(g, f)| vec![name(g), name(f)]),
    ));

    let mut bf3 = None;
    'bf3: for v in w.members() {
        for f in c.mors_into(c.dst(v)).collect::<Vec<_>>() {
            if cospan_fillers(c, w, f, v).next().is_none() {
                bf3 = Some(vec![name(f), name(v)]);
                break 'bf3;
            }
        }
    }
    checks.push(Check::from_result("BF3", bf3));

    let (mut bf4a, mut bf4b, mut bf4c) = (None, None, None);
    for wm in w.members() {
        let b = c.src(wm);
        for f1 in c.mors_into(b).collect::<Vec<_>>() {
            for &f2 in c.hom(c.src(f1), b) {
                let (wf1, wf2) = (c.compose(wm, f1).unwrap(), c.compose(wm, f2).unwrap());
                for &alpha in c.cells_between(wf1, wf2) {
                    let sols: Vec<(Mor, Cell)> =
                        bf4_solutions(c, w, wm, f1, f2, alpha).collect();
                    let witness = || vec![name(wm), name(f1), name(f2), cname(alpha)];
                    if sols.is_empty() {
                        bf4a.get_or_insert_with(witness);
                        continue;
                    }
                    if c.is_invertible(alpha) && !sols.iter().any(|&(_, b)| c.is_invertible(b)) {
                        bf4b.get_or_insert_with(witness);
                    }
                    if bf4c.is_some() {
                        continue;
                    }
                    'pairs: for i in 0..sols.len() {
                        for j in i + 1..sols.len() {
                            if !bf4c_joins(c, w, f1, f2, sols[i], sols[j]) {
                                let mut x = witness();
                                x.extend([
                                    name(sols[i].0),
                                    cname(sols[i].1),
                                    name(sols[j].0),
                                    cname(sols[j].1),
                                ]);
                                bf4c = Some(x);
                                break 'pairs;
                            }
                        }
                    }
                }
            }
        }
    }
    checks.push(Check::from_result("BF4a", bf4a));
    checks.push(Check::from_result("BF4b", bf4b));
    checks.push(Check::from_result("BF4c", bf4c));

    let mut bf5 = None;
    'bf5: for v in c.mor_ids() {
        if w.contains(v) {
            continue;
        }
        for &wm in c.hom(c.src(v), c.dst(v)) {
            if !w.contains(wm) {
                continue;
            }
            let mut cells: Vec<Cell> = c
                .invertible_between(v, wm)
                .chain(c.invertible_between(wm, v))
                .collect();
            cells.sort();
            if let Some(&alpha) = cells.first() {
                bf5 = Some(vec![cname(alpha), name(wm), name(v)]);
                break 'bf5;
            }
        }
    }
    checks.push(Check::from_result("BF5", bf5));

    BfReport { checks }
}

/// Endo-1-cells `f: A → A` with an invertible 2-cell `f ⇒ id_A`.
pub fn quasi_units(c: &TwoCat) -> MorClass {
    MorClass {
        mask: c
            .mor_ids()
            .map(|f| {
                c.src(f) == c.dst(f) && c.invertible_between(f, c.id1(c.src(f))).next().is_some()
            })
            .collect(),
    }
}

pub fn internal_equivalences_class(c: &TwoCat) -> MorClass {
    MorClass {
        mask: internal_equivalences(c),
    }
}

/// `g` such that `g∘h ∈ W` for some `h`.
fn right_cancellable(c: &TwoCat, w: &MorClass) -> Vec<Option<Mor>> {
    c.mor_ids()
        .map(|g| {
            c.mors_into(c.src(g))
                .find(|&h| w.contains(c.compose(g, h).unwrap()))
        })
        .collect()
}

/// `(g, h)` with `f∘g ∈ W` and `g∘h ∈ W`, first in declaration order.
pub fn saturation_witness(c: &TwoCat, w: &MorClass, f: Mor) -> Option<(Mor, Mor)> {
    let rc = right_cancellable(c, w);
    c.mors_into(c.src(f)).find_map(|g| {
        let h = rc[g.0]?;
        w.contains(c.compose(f, g).unwrap()).then_some((g, h))
    })
}

/// The right saturation `{f : ∃ g, h with f∘g ∈ W and g∘h ∈ W}`.
pub fn saturate(c: &TwoCat, w: &MorClass) -> MorClass {
    let rc = right_cancellable(c, w);
    MorClass {
        mask: c
            .mor_ids()
            .map(|f| {
                c.mors_into(c.src(f))
                    .any(|g| rc[g.0].is_some() && w.contains(c.compose(f, g).unwrap()))
            })
            .collect(),
    }
}

pub fn is_right_saturated(c: &TwoCat, w: &MorClass) -> bool {
    saturate(c, w) == *w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn load(doc: crate::doc::TwoCatDocument) -> (TwoCat, MorClass) {
        let c = TwoCat::from_document(&doc).unwrap();
        let w = MorClass::from_names(&c, &doc.w).unwrap();
        (c, w)
    }

    #[test]
    fn trivial_fixture_passes() {
        let (c, w) = load(fixtures::f1());
        assert!(check_bf(&c, &w).pass());
    }

    #[test]
    fn walking_arrow_passes_with_expected_filler() {
        let (c, w) = load(fixtures::f3());
        assert!(check_bf(&c, &w).pass(), "{}", check_bf(&c, &w).summary());
        let wm = c.mor_by_name("w").unwrap();
        let id1 = c.mor_by_name("id1").unwrap();
        let fill = fill_cospan(&c, &w, id1, wm).unwrap();
        assert_eq!(c.obj_name(fill.apex), "0");
        assert_eq!(c.mor_name(fill.v), "w");
        assert_eq!(c.mor_name(fill.f), "id0");
    }

    #[test]
    fn bf5_fails_on_f4() {
        let (c, w) = load(fixtures::f4());
        let report = check_bf(&c, &w);
        let bf5 = report.get("BF5").unwrap();
        assert!(!bf5.pass);
        assert_eq!(
            bf5.counterexample.as_deref().unwrap(),
            ["mu".to_string(), "p".into(), "q".into()]
        );
    }

    #[test]
    fn quasi_units_of_fixtures() {
        let (c, _) = load(fixtures::f1());
        assert_eq!(quasi_units(&c).names(&c), ["id"]);
        let (c, _) = load(fixtures::f2());
        assert_eq!(quasi_units(&c).names(&c), ["idX", "idY"]);
        let (c, _) = load(fixtures::f7());
        assert_eq!(quasi_units(&c).names(&c), ["idA", "idB"]);
        let (c, _) = load(fixtures::f6());
        assert_eq!(quasi_units(&c).names(&c), ["idA", "idB", "e"]);
    }

    #[test]
    fn saturation_examples() {
        let (c, w) = load(fixtures::f1());
        assert_eq!(saturate(&c, &w), w);
        assert!(is_right_saturated(&c, &w));

        let (c, w) = load(fixtures::f2());
        assert_eq!(saturate(&c, &w).names(&c), ["idX", "idY", "f", "g"]);
        assert!(!is_right_saturated(&c, &w));
        assert!(is_right_saturated(&c, &MorClass::all(&c)));

        let (c, _) = load(fixtures::f3());
        let ids = MorClass::identities(&c);
        assert_eq!(saturate(&c, &ids), ids);
    }

    #[test]
    fn named_bf_fixtures_pass() {
        for (name, doc) in fixtures::bf_twocats() {
            let (c, w) = load(doc);
            let r = check_bf(&c, &w);
            assert!(r.pass(), "{name}: {}", r.summary());
        }
    }

    #[test]
    fn closures() {
        let (c, _) = load(fixtures::f4());
        let mut w = MorClass::from_names(&c, &["idA", "idB", "p"]).unwrap();
        w.close_under_invertible_cells(&c);
        assert_eq!(w.names(&c), ["idA", "idB", "p", "q"]);
    }
}
