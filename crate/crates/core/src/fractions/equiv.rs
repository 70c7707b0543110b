//! Deciding which spans are internal equivalences of the localization.

use serde::Serialize;

use super::{FractionCell, Localization, Span};
use crate::error::{Error, Result};
use crate::saturation::saturate;
use crate::twocat::Mor;

/// `e̲: A → B` with quasi-inverse `ē̲`, invertible `δ: 1_A ⇒ ē̲∘e̲` and
/// `ξ: e̲∘ē̲ ⇒ 1_B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpanEquivalence {
    pub span: Span,
    pub inverse: Span,
    pub delta: FractionCell,
    pub xi: FractionCell,
}

impl Localization {
    /// A span is an equivalence iff its denominator is in `W` and its
    /// numerator is in the right saturation of `W`.
    pub fn is_internal_equiv_closed_form(&self, s: &Span) -> bool {
        self.is_valid_span(s) && saturate(self.twocat(), self.class()).contains(s.f)
    }

    /// Checks a proposed quasi-inverse by searching invertible `δ` and `ξ`.
    pub fn check_quasi_inverse(&self, s: &Span, inverse: &Span) -> Option<SpanEquivalence> {
        let (a, b) = (self.span_src(s), self.span_dst(s));
        let there = self.compose(s, inverse).ok()?;
        let back = self.compose(inverse, s).ok()?;
        let delta = self.find_invertible(self.identity_span(a), there)?;
        let xi = self.find_invertible(back, self.identity_span(b))?;
        Some(SpanEquivalence {
            span: *s,
            inverse: *inverse,
            delta,
            xi,
        })
    }

    /// Exhaustive search over all candidate quasi-inverses.
    pub fn is_internal_equiv_search(&self, s: &Span) -> Option<SpanEquivalence> {
        if !self.is_valid_span(s) {
            return None;
        }
        let (a, b) = (self.span_src(s), self.span_dst(s));
        self.spans(b, a)
            .into_iter()
            .find_map(|t| self.check_quasi_inverse(s, &t))
    }

    /// For `f: B → A` and `g: C → B` with `f∘g ∈ W`, the span
    /// `A ← C → B` with denominator `f∘g` and numerator `g`.
    pub fn quasi_inverse_of_u(&self, f: Mor, g: Mor) -> Result<Span> {
        let c = self.twocat();
        let fg = c
            .compose(f, g)
            .ok_or_else(|| Error::NotComposable(format!("{} ∘ {}", c.mor_name(f), c.mor_name(g))))?;
        if !self.class().contains(fg) {
            return Err(Error::Precondition(format!(
                "{} ∘ {} is not in W",
                c.mor_name(f),
                c.mor_name(g)
            )));
        }
        Ok(Span {
            apex: c.src(g),
            w: fg,
            f: g,
        })
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fixtures;
    use crate::fractions::localize;
    use crate::saturation::MorClass;
    use crate::twocat::TwoCat;

    fn f3(with_w: bool) -> Localization {
        let c = TwoCat::from_document(&fixtures::f3()).unwrap();
        let w = if with_w {
            MorClass::from_names(&c, &["id0", "id1", "w"]).unwrap()
        } else {
            MorClass::identities(&c)
        };
        localize(Arc::new(c), w, true).unwrap()
    }

    #[test]
    fn identity_span_is_equivalence() {
        let l = f3(false);
        let s = l.identity_span(l.twocat().obj_by_name("0").unwrap());
        assert!(l.is_internal_equiv_closed_form(&s));
        let e = l.is_internal_equiv_search(&s).unwrap();
        assert_eq!(e.inverse, s);
        assert_eq!(e.delta, l.identity_cell(s));
    }

    #[test]
    fn w_becomes_equivalence() {
        let l = f3(true);
        let c = l.twocat();
        let w = c.mor_by_name("w").unwrap();
        let id0 = c.mor_by_name("id0").unwrap();
        let s = l.u_mor(w);
        assert!(l.is_internal_equiv_closed_form(&s));
        let e = l.is_internal_equiv_search(&s).unwrap();
        assert_eq!(l.span_name(&e.inverse), "(0,w,id0)");
        assert_eq!(l.quasi_inverse_of_u(w, id0).unwrap(), e.inverse);
    }

    #[test]
    fn w_stays_non_invertible() {
        let l = f3(false);
        let s = l.u_mor(l.twocat().mor_by_name("w").unwrap());
        assert!(!l.is_internal_equiv_closed_form(&s));
        assert!(l.is_internal_equiv_search(&s).is_none());
        let w = l.twocat().mor_by_name("w").unwrap();
        let id0 = l.twocat().mor_by_name("id0").unwrap();
        assert!(l.quasi_inverse_of_u(w, id0).is_err());
    }

    #[test]
    fn walking_iso_quasi_inverse() {
        let c = TwoCat::from_document(&fixtures::f2()).unwrap();
        let w = MorClass::identities(&c);
        let l = localize(Arc::new(c), w, true).unwrap();
        let c = l.twocat();
        let (f, g) = (c.mor_by_name("f").unwrap(), c.mor_by_name("g").unwrap());
        let t = l.quasi_inverse_of_u(f, g).unwrap();
        assert_eq!(l.span_name(&t), "(Y,idY,g)");
        assert!(l.check_quasi_inverse(&l.u_mor(f), &t).is_some());
    }
}
