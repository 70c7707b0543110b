//! Which spans become equivalences in the localization, decided by search
//! and by closed form, across fixtures, corpus, and choice tables.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use bifrac::fractions::{localize, random_choices, Localization};
use bifrac::saturation::saturate;
use bifrac::{fixtures, MorClass, TwoCat};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn all_spans(l: &Localization) -> Vec<bifrac::fractions::Span> {
    let c = l.twocat();
    c.obj_ids()
        .flat_map(|a| c.obj_ids().map(move |b| (a, b)))
        .flat_map(|(a, b)| l.spans(a, b))
        .collect()
}

fn check_deciders(name: &str, l: &Localization) {
    let c = l.twocat();
    let sat = saturate(c, l.class());
    for f in c.mor_ids() {
        let found = l.is_internal_equiv_search(&l.u_mor(f)).is_some();
        assert_eq!(found, sat.contains(f), "{name}: {}", c.mor_name(f));
    }
    for s in all_spans(l) {
        assert_eq!(
            l.is_internal_equiv_closed_form(&s),
            l.is_internal_equiv_search(&s).is_some(),
            "{name}: {}",
            l.span_name(&s)
        );
    }
    for w in l.class().members() {
        let s = l.u_mor(w);
        assert!(l.is_internal_equiv_closed_form(&s), "{name}");
        assert!(l.is_internal_equiv_search(&s).is_some(), "{name}");
    }
}

#[test]
fn deciders_agree_with_saturation() {
    for (name, doc) in common::bf_docs(usize::MAX) {
        let start = Instant::now();
        check_deciders(&name, &common::localized(&doc));
        assert!(start.elapsed() < Duration::from_secs(5), "{name} too slow");
    }
}

#[test]
fn deciders_do_not_depend_on_choices() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, doc) in common::bf_docs(40) {
        let (c, w) = common::load(&doc);
        let c = Arc::new(c);
        for enforce_c3 in [true, false] {
            let choices = random_choices(&c, &w, enforce_c3, &mut rng).unwrap();
            assert!(choices.honors_c1(&c) && choices.honors_c2(&c), "{name}");
            if enforce_c3 {
                assert!(choices.honors_c3(&c), "{name}");
            }
            let l = Localization::with_choices(c.clone(), w.clone(), choices);
            check_deciders(&name, &l);
        }
    }
}

#[test]
fn f3_span_examples() {
    let doc = fixtures::f3();
    let c = Arc::new(TwoCat::from_document(&doc).unwrap());
    let o = c.obj_by_name("0").unwrap();
    let span = |l: &Localization| {
        l.spans(o, c.obj_by_name("1").unwrap())
            .into_iter()
            .find(|s| l.span_name(s) == "(0,id0,w)")
            .unwrap()
    };
    let with_w = localize(c.clone(), MorClass::all(&c), true).unwrap();
    let s = span(&with_w);
    assert!(with_w.is_internal_equiv_closed_form(&s));
    assert!(with_w.is_internal_equiv_search(&s).is_some());

    let ids = localize(c.clone(), MorClass::identities(&c), true).unwrap();
    let s = span(&ids);
    assert!(!ids.is_internal_equiv_closed_form(&s));
    assert!(ids.is_internal_equiv_search(&s).is_none());
}

#[test]
fn saturation_witnesses_give_quasi_inverses() {
    for (name, doc) in common::bf_docs(40) {
        let l = common::localized(&doc);
        let c = l.twocat();
        for (f, g) in c.composable_pairs() {
            // g must itself be right cancellable into W
            let witness = c
                .mors_into(c.src(g))
                .any(|h| l.class().contains(c.compose(g, h).unwrap()));
            if !l.class().contains(c.compose(f, g).unwrap()) || !witness {
                continue;
            }
            let inv = l.quasi_inverse_of_u(f, g).unwrap();
            assert!(
                l.check_quasi_inverse(&l.u_mor(f), &inv).is_some(),
                "{name}: {} {}",
                c.mor_name(f),
                c.mor_name(g)
            );
        }
    }
}

#[test]
fn equality_chains_stay_short() {
    // Witness chains never need more than two moves on the corpus.
    let mut longest = 0;
    for (_, doc) in common::bf_docs(usize::MAX) {
        longest = longest.max(common::localized(&doc).max_chain_length());
    }
    assert!(longest <= 2, "{longest}");
}
