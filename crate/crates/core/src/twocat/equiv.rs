//! Internal equivalences and the explicit pasting constructions that build
//! witnesses for composites, factors and cancellations.

use serde::Serialize;

use super::{Cell, Mor, TwoCat};
use crate::error::{Error, Result};

/// `e: A → B` with quasi-inverse `ē`, `δ: id_A ⇒ ē∘e` and `ξ: e∘ē ⇒ id_B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceWitness {
    pub e: Mor,
    pub e_bar: Mor,
    pub delta: Cell,
    pub xi: Cell,
    pub adjoint: bool,
}

impl EquivalenceWitness {
    pub fn identity(c: &TwoCat, e: Mor) -> EquivalenceWitness {
        let i = c.id2(e);
        EquivalenceWitness {
            e,
            e_bar: e,
            delta: i,
            xi: i,
            adjoint: true,
        }
    }
}

fn triangles_hold(c: &TwoCat, e: Mor, e_bar: Mor, delta: Cell, xi: Cell) -> bool {
    let first = c
        .hc(&[xi, c.id2(e)])
        .and_then(|l| c.vc(&[l, c.hc(&[c.id2(e), delta])?]));
    let second = c
        .hc(&[c.id2(e_bar), xi])
        .and_then(|l| c.vc(&[l, c.hc(&[delta, c.id2(e_bar)])?]));
    first.ok() == Some(c.id2(e)) && second.ok() == Some(c.id2(e_bar))
}

/// Checks typing, invertibility of `δ` and `ξ`, and the triangle identities
/// when the witness claims to be adjoint.
pub fn verify_witness(c: &TwoCat, w: &EquivalenceWitness) -> bool {
    let (a, b) = (c.src(w.e), c.dst(w.e));
    if c.src(w.e_bar) != b || c.dst(w.e_bar) != a {
        return false;
    }
    let (Some(ee), Some(ee2)) = (c.compose(w.e_bar, w.e), c.compose(w.e, w.e_bar)) else {
        return false;
    };
    let typed = c.cell_src(w.delta) == c.id1(a)
        && c.cell_dst(w.delta) == ee
        && c.cell_src(w.xi) == ee2
        && c.cell_dst(w.xi) == c.id1(b);
    typed
        && c.is_invertible(w.delta)
        && c.is_invertible(w.xi)
        && (!w.adjoint || triangles_hold(c, w.e, w.e_bar, w.delta, w.xi))
}

fn checked(c: &TwoCat, w: EquivalenceWitness, what: &str) -> Result<EquivalenceWitness> {
    if verify_witness(c, &w) {
        Ok(w)
    } else {
        Err(Error::Inconsistent(format!(
            "{what} produced an invalid witness for {}",
            c.mor_name(w.e)
        )))
    }
}

/// First witness in declaration order of `(ē, δ, ξ)`.
pub fn find_quasi_inverse(c: &TwoCat, e: Mor) -> Option<EquivalenceWitness> {
    let (a, b) = (c.src(e), c.dst(e));
    for &e_bar in c.hom(b, a) {
        let (ee, ee2) = (c.compose(e_bar, e)?, c.compose(e, e_bar)?);
        let Some(delta) = c.invertible_between(c.id1(a), ee).next() else {
            continue;
        };
        let Some(xi) = c.invertible_between(ee2, c.id1(b)).next() else {
            continue;
        };
        return Some(EquivalenceWitness {
            e,
            e_bar,
            delta,
            xi,
            adjoint: false,
        });
    }
    None
}

/// Membership mask of the internal equivalences, indexed by 1-cell.
pub fn internal_equivalences(c: &TwoCat) -> Vec<bool> {
    c.mor_ids()
        .map(|e| find_quasi_inverse(c, e).is_some())
        .collect()
}

/// Keeps `(e, ē, δ)` and replaces `ξ` by the first invertible cell making
/// both triangle identities hold.
pub fn adjointify(c: &TwoCat, w: &EquivalenceWitness) -> Result<EquivalenceWitness> {
    if !verify_witness(c, w) {
        return Err(Error::Precondition(format!(
            "not an equivalence witness for {}",
            c.mor_name(w.e)
        )));
    }
    let ee2 = c.comp(&[w.e, w.e_bar])?;
    let target = c.id1(c.dst(w.e));
    c.invertible_between(ee2, target)
        .find(|&xi| triangles_hold(c, w.e, w.e_bar, w.delta, xi))
        .map(|xi| EquivalenceWitness {
            xi,
            adjoint: true,
            ..*w
        })
        .ok_or_else(|| {
            Error::Inconsistent(format!(
                "no adjoint correction of ξ exists for {}",
                c.mor_name(w.e)
            ))
        })
}

/// Given a witness for `e` and an invertible `γ: e ⇒ ẽ`, a witness for `ẽ`.
pub fn transport_equivalence(
    c: &TwoCat,
    w: &EquivalenceWitness,
    gamma: Cell,
) -> Result<EquivalenceWitness> {
    if c.cell_src(gamma) != w.e {
        return Err(Error::Precondition(format!(
            "{} does not start at {}",
            c.cell_name(gamma),
            c.mor_name(w.e)
        )));
    }
    let gamma_inv = c.inv(gamma)?;
    let out = EquivalenceWitness {
        e: c.cell_dst(gamma),
        e_bar: w.e_bar,
        delta: c.vc(&[c.hc(&[c.id2(w.e_bar), gamma])?, w.delta])?,
        xi: c.vc(&[w.xi, c.hc(&[gamma_inv, c.id2(w.e_bar)])?])?,
        adjoint: false,
    };
    checked(c, out, "transport")
}

/// Witness for `f∘g` with quasi-inverse `ḡ∘f̄`.
pub fn equivalence_of_composite(
    c: &TwoCat,
    wf: &EquivalenceWitness,
    wg: &EquivalenceWitness,
) -> Result<EquivalenceWitness> {
    let (f, g) = (wf.e, wg.e);
    let fg = c.comp(&[f, g])?;
    let delta = c.vc(&[
        c.hc(&[c.id2(wg.e_bar), wf.delta, c.id2(g)])?,
        wg.delta,
    ])?;
    let xi = c.vc(&[wf.xi, c.hc(&[c.id2(f), wg.xi, c.id2(wf.e_bar)])?])?;
    let out = EquivalenceWitness {
        e: fg,
        e_bar: c.comp(&[wg.e_bar, wf.e_bar])?,
        delta,
        xi,
        adjoint: false,
    };
    checked(c, out, "composite")
}

/// From witnesses for `f` and `f∘g`, a witness for `g` with quasi-inverse
/// `h∘f`, where `h` is the quasi-inverse of `f∘g`.
pub fn equivalence_of_right_factor(
    c: &TwoCat,
    wf: &EquivalenceWitness,
    g: Mor,
    wfg: &EquivalenceWitness,
) -> Result<EquivalenceWitness> {
    let f = wf.e;
    if c.comp(&[f, g])? != wfg.e {
        return Err(Error::Precondition(format!(
            "witness is not for {} ∘ {}",
            c.mor_name(f),
            c.mor_name(g)
        )));
    }
    let h = wfg.e_bar;
    let (alpha, beta) = (wfg.delta, wfg.xi);
    let ghf = c.comp(&[g, h, f])?;
    let xi = c.vc(&[
        c.inv(wf.delta)?,
        c.hc(&[c.id2(wf.e_bar), beta, c.id2(f)])?,
        c.hc(&[wf.delta, c.id2(ghf)])?,
    ])?;
    let out = EquivalenceWitness {
        e: g,
        e_bar: c.comp(&[h, f])?,
        delta: alpha,
        xi,
        adjoint: false,
    };
    checked(c, out, "right factor")
}

/// From witnesses for `g` and `f∘g`, a witness for `f` with quasi-inverse
/// `g∘h`, where `h` is the quasi-inverse of `f∘g`.
pub fn equivalence_of_left_factor(
    c: &TwoCat,
    f: Mor,
    wg: &EquivalenceWitness,
    wfg: &EquivalenceWitness,
) -> Result<EquivalenceWitness> {
    let g = wg.e;
    if c.comp(&[f, g])? != wfg.e {
        return Err(Error::Precondition(format!(
            "witness is not for {} ∘ {}",
            c.mor_name(f),
            c.mor_name(g)
        )));
    }
    let h = wfg.e_bar;
    let (alpha, beta) = (wfg.delta, wfg.xi);
    let ghf = c.comp(&[g, h, f])?;
    let delta = c.vc(&[
        c.hc(&[c.id2(ghf), wg.xi])?,
        c.hc(&[c.id2(g), alpha, c.id2(wg.e_bar)])?,
        c.inv(wg.xi)?,
    ])?;
    let out = EquivalenceWitness {
        e: f,
        e_bar: c.comp(&[g, h])?,
        delta,
        xi: beta,
        adjoint: false,
    };
    checked(c, out, "left factor")
}

/// For a chain `h: D → C`, `g: C → B`, `f: B → A` with `f∘g` and `g∘h`
/// equivalences, witnesses for `f`, `g` and `h`.
pub fn equivalence_from_cancellation(
    c: &TwoCat,
    f: Mor,
    g: Mor,
    h: Mor,
    wfg: &EquivalenceWitness,
    wgh: &EquivalenceWitness,
) -> Result<(EquivalenceWitness, EquivalenceWitness, EquivalenceWitness)> {
    if c.comp(&[f, g])? != wfg.e || c.comp(&[g, h])? != wgh.e {
        return Err(Error::Precondition(
            "witnesses do not match the composable chain".into(),
        ));
    }
    let m = wfg.e_bar;
    let (delta, xi) = (wfg.delta, wfg.xi);
    let n = wgh.e_bar;
    let mu = wgh.xi;
    let gmf = c.comp(&[g, m, f])?;
    let hn = c.comp(&[h, n])?;
    let delta_f = c.vc(&[
        c.hc(&[c.id2(gmf), mu])?,
        c.hc(&[c.id2(g), delta, c.id2(hn)])?,
        c.inv(mu)?,
    ])?;
    let wf = checked(
        c,
        EquivalenceWitness {
            e: f,
            e_bar: c.comp(&[g, m])?,
            delta: delta_f,
            xi,
            adjoint: false,
        },
        "cancellation",
    )?;
    let wg = equivalence_of_right_factor(c, &wf, g, wfg)?;
    let wh = equivalence_of_right_factor(c, &wg, h, wgh)?;
    Ok((wf, wg, wh))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(c: &TwoCat, mask: &[bool]) -> Vec<String> {
        c.mor_ids()
            .filter(|m| mask[m.0])
            .map(|m| c.mor_name(m).to_string())
            .collect()
    }

    #[test]
    fn identity_has_identity_witness() {
        let c = TwoCat::from_document(&fixtures::f1()).unwrap();
        let id = c.id1(c.obj_ids().next().unwrap());
        let w = find_quasi_inverse(&c, id).unwrap();
        assert_eq!((w.e_bar, w.delta, w.xi), (id, c.id2(id), c.id2(id)));
    }

    #[test]
    fn walking_iso_equivalences() {
        let c = TwoCat::from_document(&fixtures::f2()).unwrap();
        let f = c.mor_by_name("f").unwrap();
        let g = c.mor_by_name("g").unwrap();
        assert_eq!(find_quasi_inverse(&c, f).unwrap().e_bar, g);
        assert_eq!(
            names(&c, &internal_equivalences(&c)),
            ["idX", "idY", "f", "g"]
        );
    }

    #[test]
    fn walking_arrow_has_no_equivalence() {
        let c = TwoCat::from_document(&fixtures::f3()).unwrap();
        assert!(find_quasi_inverse(&c, c.mor_by_name("w").unwrap()).is_none());
        assert_eq!(names(&c, &internal_equivalences(&c)), ["id0", "id1"]);
    }

    #[test]
    fn adjointify_keeps_walking_iso_witness() {
        let c = TwoCat::from_document(&fixtures::f2()).unwrap();
        let w = find_quasi_inverse(&c, c.mor_by_name("f").unwrap()).unwrap();
        let a = adjointify(&c, &w).unwrap();
        assert_eq!(a, EquivalenceWitness { adjoint: true, ..w });
    }

    #[test]
    fn adjointify_corrects_xi() {
        // F8: one object, hom group Z2 = {i, tau} on the identity. The witness
        // (id, id, tau, i) fails the triangles; the correction is xi = tau.
        let c = TwoCat::from_document(&fixtures::f8()).unwrap();
        let id = c.mor_by_name("id").unwrap();
        let tau = c.cell_by_name("tau").unwrap();
        let w = EquivalenceWitness {
            e: id,
            e_bar: id,
            delta: tau,
            xi: c.id2(id),
            adjoint: false,
        };
        assert!(verify_witness(&c, &w));
        assert!(!verify_witness(&c, &EquivalenceWitness { adjoint: true, ..w }));
        let a = adjointify(&c, &w).unwrap();
        assert_eq!(a.xi, tau);
        assert!(verify_witness(&c, &a));
    }

    #[test]
    fn composite_in_walking_iso_collapses() {
        let c = TwoCat::from_document(&fixtures::f2()).unwrap();
        let f = c.mor_by_name("f").unwrap();
        let g = c.mor_by_name("g").unwrap();
        let wf = find_quasi_inverse(&c, f).unwrap();
        let wg = find_quasi_inverse(&c, g).unwrap();
        let w = equivalence_of_composite(&c, &wg, &wf).unwrap();
        let id_x = c.mor_by_name("idX").unwrap();
        assert_eq!(w.e, id_x);
        assert_eq!(w.e_bar, id_x);
        assert_eq!((w.delta, w.xi), (c.id2(id_x), c.id2(id_x)));
    }

    #[test]
    fn cancellation_matches_search_in_walking_iso() {
        let c = TwoCat::from_document(&fixtures::f2()).unwrap();
        let f = c.mor_by_name("f").unwrap();
        let g = c.mor_by_name("g").unwrap();
        // chain f, g, f: X → Y → X → Y
        let wgf = find_quasi_inverse(&c, c.comp(&[g, f]).unwrap()).unwrap();
        let wfg = find_quasi_inverse(&c, c.comp(&[f, g]).unwrap()).unwrap();
        let (a, b, d) = equivalence_from_cancellation(&c, f, g, f, &wfg, &wgf).unwrap();
        assert_eq!(a.e_bar, find_quasi_inverse(&c, f).unwrap().e_bar);
        assert_eq!(b.e_bar, find_quasi_inverse(&c, g).unwrap().e_bar);
        assert_eq!(d.e_bar, find_quasi_inverse(&c, f).unwrap().e_bar);
    }

    #[test]
    fn transport_along_invertible_cell() {
        let c = TwoCat::from_document(&fixtures::f4()).unwrap();
        // F4's identities are equivalences; p and q are parallel A → B
        // so the transport test lives in the property suite. Here: identity
        // transport is the identity.
        let id_a = c.mor_by_name("idA").unwrap();
        let w = find_quasi_inverse(&c, id_a).unwrap();
        let t = transport_equivalence(&c, &w, c.id2(id_a)).unwrap();
        assert_eq!(t.e, id_a);
    }
}
