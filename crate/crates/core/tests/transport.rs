//! Strict 2-functors between fixtures: the saturation criterion, induced
//! pseudofunctors, weak-equivalence checks, and choice independence.

mod common;

use std::collections::HashMap;
use std::sync::Arc;

use bifrac::fractions::{localize, random_choices, Localization};
use bifrac::saturation::{check_bf, internal_equivalences_class, quasi_units, saturate};
use bifrac::transport::{
    check_x_conditions, compare_choice_tables, enumerate_functors, induce, preimage_check,
    theo04_check, validate_functor, StrictTwoFunctor,
};
use bifrac::{fixtures, Error, MorClass, TwoCat};
use common::oracle::Oracle;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Subject {
    name: String,
    c: Arc<TwoCat>,
    oracle: Oracle,
    /// BF-passing classes: the shipped one, quasi-units, equivalences.
    classes: Vec<(&'static str, MorClass)>,
}

fn subjects(corpus: usize) -> Vec<Subject> {
    common::bf_docs(corpus)
        .into_iter()
        .map(|(name, doc)| {
            let (c, w) = common::load(&doc);
            let classes = vec![
                ("shipped", w),
                ("quasi-units", quasi_units(&c)),
                ("equivalences", internal_equivalences_class(&c)),
            ];
            for (label, k) in &classes {
                assert!(check_bf(&c, k).pass(), "{name} {label}");
            }
            Subject {
                name,
                c: Arc::new(c),
                oracle: Oracle::new(&doc),
                classes,
            }
        })
        .collect()
}

fn functors(a: &Subject, b: &Subject) -> Vec<StrictTwoFunctor> {
    enumerate_functors(&a.c, &b.c, 64)
}

#[test]
fn enumerated_functors_validate() {
    let subs = subjects(8);
    let mut total = 0;
    for a in &subs {
        for b in &subs {
            for f in functors(a, b) {
                assert!(validate_functor(&a.c, &b.c, &f).is_clean());
                total += 1;
            }
        }
    }
    assert!(total > subs.len());
}

#[test]
fn saturation_criterion_clauses_agree() {
    let subs = subjects(8);
    for a in &subs {
        for b in &subs {
            for f in functors(a, b) {
                for (la, wa) in &a.classes {
                    for (lb, wb) in &b.classes {
                        let r = theo04_check(&a.c, wa, &b.c, wb, &f).unwrap();
                        let ctx = format!("{} {la} -> {} {lb}", a.name, b.name);
                        assert!(r.agree(), "{ctx}");
                        // oracle: F₁(W_A) ⊆ W_B,sat by names
                        let sat = b.oracle.saturate(&common::names(&b.c, wb));
                        let clause = wa
                            .members()
                            .all(|m| sat.contains(b.c.mor_name(f.on(m))));
                        assert_eq!(r.clause_i, clause, "{ctx}");
                    }
                }
            }
        }
    }
}

#[test]
fn landing_in_equivalences_survives_saturation() {
    let subs = subjects(8);
    for a in &subs {
        for b in &subs {
            let eq = internal_equivalences_class(&b.c);
            for f in functors(a, b) {
                for (_, wa) in &a.classes {
                    if f.escaping(wa, &eq).is_empty() {
                        let sat = saturate(&a.c, wa);
                        assert!(f.escaping(&sat, &eq).is_empty(), "{} -> {}", a.name, b.name);
                    }
                }
            }
        }
    }
}

/// Localizations keyed by subject and class label; the target side uses the
/// saturated class.
struct Locs(HashMap<(String, &'static str, bool), Arc<Localization>>);

impl Locs {
    fn get(&mut self, s: &Subject, label: &'static str, w: &MorClass, sat: bool) -> Arc<Localization> {
        self.0
            .entry((s.name.clone(), label, sat))
            .or_insert_with(|| {
                let w = if sat { saturate(&s.c, w) } else { w.clone() };
                Arc::new(localize(s.c.clone(), w, true).unwrap())
            })
            .clone()
    }
}

#[test]
fn induced_pseudofunctors_are_well_defined() {
    let subs = subjects(6);
    let mut locs = Locs(HashMap::new());
    let mut induced = 0;
    for a in &subs {
        for b in &subs {
            for f in functors(a, b).into_iter().take(16) {
                for (la, wa) in &a.classes {
                    for (lb, wb) in &b.classes {
                        let r = theo04_check(&a.c, wa, &b.c, wb, &f).unwrap();
                        if !r.clause_i {
                            continue;
                        }
                        let (src, dst) = (locs.get(a, la, wa, false), locs.get(b, lb, wb, true));
                        let (src, dst) = (&*src, &*dst);
                        let ctx = format!("{} {la} -> {} {lb}", a.name, b.name);
                        let (g, summary) = induce(src, dst, &f).unwrap_or_else(|e| panic!("{ctx}: {e}"));
                        induced += 1;
                        assert!(summary.well_defined && summary.strict_square, "{ctx}");
                        for w in wa.members() {
                            let s = g.map_span(&src.u_mor(w));
                            assert!(dst.is_internal_equiv_closed_form(&s), "{ctx}");
                        }
                        let objs: Vec<_> = src.twocat().obj_ids().collect();
                        let spans = objs
                            .iter()
                            .flat_map(|&o| objs.iter().flat_map(move |&p| src.spans(o, p)))
                            .collect::<Vec<_>>();
                        for s in spans {
                            let id = g.map_cell(&src.identity_cell(s)).unwrap();
                            assert_eq!(id, dst.identity_cell(g.map_span(&s)), "{ctx}");
                        }
                        for x in src.twocat().vertical_pairs() {
                            let (b2, a2) = x;
                            let (ua, ub) = (src.u_cell(a2).unwrap(), src.u_cell(b2).unwrap());
                            let lhs = g.map_cell(&src.vcomp(&ua, &ub).unwrap()).unwrap();
                            let rhs = dst
                                .vcomp(&g.map_cell(&ua).unwrap(), &g.map_cell(&ub).unwrap())
                                .unwrap();
                            assert_eq!(lhs, rhs, "{ctx}");
                        }
                    }
                }
            }
        }
    }
    assert!(induced > 0);
}

#[test]
fn escaping_morphism_blocks_induction() {
    let doc = fixtures::f3();
    let (c, w) = common::load(&doc);
    let c = Arc::new(c);
    let id = StrictTwoFunctor::identity(&c);
    let src = localize(c.clone(), w, true).unwrap();
    let dst = localize(c.clone(), MorClass::identities(&c), true).unwrap();
    match induce(&src, &dst, &id) {
        Err(Error::Precondition(msg)) => assert!(msg.starts_with("w "), "{msg}"),
        other => panic!("expected precondition failure, got {:?}", other.map(|x| x.1)),
    }
}

#[test]
fn comparison_functor_is_a_weak_equivalence() {
    for (name, doc) in common::bf_docs(20) {
        let (c, w) = common::load(&doc);
        let c = Arc::new(c);
        let sat = saturate(&c, &w);
        let id = StrictTwoFunctor::identity(&c);
        let src = localize(c.clone(), w, true).unwrap();
        let dst = localize(c.clone(), sat, true).unwrap();
        let (g, _) = induce(&src, &dst, &id).unwrap();
        let report = check_x_conditions(&src, &dst, &g).unwrap();
        assert!(report.is_clean(), "{name}: {:?}", report.failures().collect::<Vec<_>>());
    }
}

#[test]
fn comparison_on_quasi_units() {
    for doc in [fixtures::f2(), fixtures::f3()] {
        let c = Arc::new(TwoCat::from_document(&doc).unwrap());
        let q = quasi_units(&c);
        let src = localize(c.clone(), q.clone(), true).unwrap();
        let dst = localize(c.clone(), saturate(&c, &q), true).unwrap();
        let id = StrictTwoFunctor::identity(&c);
        let (g, _) = induce(&src, &dst, &id).unwrap();
        assert!(check_x_conditions(&src, &dst, &g).unwrap().is_clean());
    }
}

/// X-checks of `C[W_A⁻¹] → D[W_B,sat⁻¹]` and of the map out of
/// `C[W_A,sat⁻¹]` agree; whenever they pass, preimages of saturations match.
#[test]
fn weak_equivalence_is_insensitive_to_source_saturation() {
    let subs = subjects(4);
    let mut locs = Locs(HashMap::new());
    let mut equivalences = 0;
    for a in &subs {
        for b in &subs {
            for f in functors(a, b).into_iter().take(8) {
                for (la, wa) in &a.classes {
                    for (lb, wb) in &b.classes {
                        if !theo04_check(&a.c, wa, &b.c, wb, &f).unwrap().clause_ii {
                            continue;
                        }
                        let ctx = format!("{} {la} -> {} {lb}", a.name, b.name);
                        let dst = locs.get(b, lb, wb, true);
                        let plain = locs.get(a, la, wa, false);
                        let satd = locs.get(a, la, wa, true);
                        let (g1, _) = induce(&plain, &dst, &f).unwrap();
                        let (g2, _) = induce(&satd, &dst, &f).unwrap();
                        let x1 = check_x_conditions(&*plain, &*dst, &g1).unwrap().is_clean();
                        let x2 = check_x_conditions(&*satd, &*dst, &g2).unwrap().is_clean();
                        assert_eq!(x1, x2, "{ctx}");
                        if x1 {
                            equivalences += 1;
                            assert!(preimage_check(&a.c, wa, &b.c, wb, &f).equal, "{ctx}");
                        }
                    }
                }
            }
        }
    }
    assert!(equivalences > 0);
}

#[test]
fn choice_tables_give_equivalent_compositions() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, doc) in common::bf_docs(30) {
        let (c, w) = common::load(&doc);
        let c = Arc::new(c);
        let base = localize(c.clone(), w.clone(), true).unwrap();
        for enforce_c3 in [true, false] {
            let ch = random_choices(&c, &w, enforce_c3, &mut rng).unwrap();
            let other = Localization::with_choices(c.clone(), w.clone(), ch);
            let cmp = compare_choice_tables(&base, &other).unwrap();
            assert!(cmp.unconnected.is_empty(), "{name}: {:?}", cmp.unconnected);
            assert_eq!(cmp.pairs, cmp.strictly_equal + cmp.connected);
        }
    }
}
