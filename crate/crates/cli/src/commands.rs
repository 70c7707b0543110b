use std::path::Path;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context};
use bifrac::doc::{self, FunctorDocument, GroupoidDocument, GroupoidFunctorDocument, TwoCatDocument};
use bifrac::fractions::{localize, CellRep, Localization, Move, Span};
use bifrac::groupoids::{
    groupoid_twocat, is_v1, morita_saturated_check, prop05_check, v2, FiniteGroupoid,
    GroupoidFunctor,
};
use bifrac::report::Check;
use bifrac::saturation::{check_bf, is_right_saturated, saturate, saturation_witness, BfReport};
use bifrac::transport::{
    check_x_conditions, induce, preimage_check, theo04_check, validate_functor, StrictTwoFunctor,
};
use bifrac::{Error, MorClass, TwoCat};
use serde_json::{json, Value};

use crate::catalog;
use crate::report::{write_atomic, Outcome};

pub struct Flags {
    pub c3: bool,
    pub xchecks: bool,
}

fn read_twocat(path: &Path) -> anyhow::Result<(TwoCatDocument, TwoCat, MorClass)> {
    let d: TwoCatDocument = doc::read(path)?;
    let c = TwoCat::from_document(&d).with_context(|| format!("{}", path.display()))?;
    let w = MorClass::from_names(&c, &d.w).with_context(|| format!("{}: W", path.display()))?;
    Ok((d, c, w))
}

/// Loads a document that must be a valid strict 2-category.
fn load_twocat(path: &Path) -> anyhow::Result<(TwoCat, MorClass)> {
    let (_, c, w) = read_twocat(path)?;
    if let Some(bad) = c.validate().failures().next() {
        bail!(
            "{}: not a strict 2-category: `{}` fails at ({})",
            path.display(),
            bad.name,
            bad.counterexample.clone().unwrap_or_default().join(", ")
        );
    }
    Ok((c, w))
}

fn load_groupoid(path: &Path) -> anyhow::Result<FiniteGroupoid> {
    let d: GroupoidDocument = doc::read(path)?;
    let mut g = FiniteGroupoid::from_document(&d).with_context(|| format!("{}", path.display()))?;
    if d.name.is_none() {
        g.name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or(g.name);
    }
    if let Some(bad) = g.validate().failures().next() {
        bail!(
            "{}: not a groupoid: `{}` fails at ({})",
            path.display(),
            bad.name,
            bad.counterexample.clone().unwrap_or_default().join(", ")
        );
    }
    Ok(g)
}

fn bf_outcome(report: BfReport, data: Value) -> Outcome {
    Outcome {
        note: Some(format!("(BF) conditions fail: {}", report.summary())),
        verdicts: report.checks,
        data,
    }
}

fn localized(c: TwoCat, w: MorClass, c3: bool) -> Result<Localization, Outcome> {
    let report = check_bf(&c, &w);
    if !report.pass() {
        return Err(bf_outcome(report, Value::Null));
    }
    localize(Arc::new(c), w, c3).map_err(|e| Outcome {
        note: Some(e.to_string()),
        ..Default::default()
    })
}

/// Splits `(a,b,c)` into its comma-separated fields.
fn fields(text: &str, n: usize, what: &str) -> anyhow::Result<Vec<String>> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| anyhow!("{what} `{text}` must be written ({})", vec!["…"; n].join(",")))?;
    let parts: Vec<String> = inner.split(',').map(|s| s.trim().to_string()).collect();
    if parts.len() != n {
        bail!("{what} `{text}` needs {n} fields, found {}", parts.len());
    }
    Ok(parts)
}

fn parse_span(l: &Localization, text: &str) -> anyhow::Result<Span> {
    let c = l.twocat();
    let p = fields(text, 3, "span")?;
    let s = Span {
        apex: c
            .obj_by_name(&p[0])
            .ok_or_else(|| anyhow!("unknown object `{}`", p[0]))?,
        w: c.mor_by_name(&p[1])
            .ok_or_else(|| anyhow!("unknown 1-cell `{}`", p[1]))?,
        f: c.mor_by_name(&p[2])
            .ok_or_else(|| anyhow!("unknown 1-cell `{}`", p[2]))?,
    };
    if !l.is_valid_span(&s) {
        bail!("`{text}` is not a span with denominator in W");
    }
    Ok(s)
}

fn parse_rep(l: &Localization, text: &str) -> anyhow::Result<CellRep> {
    let c = l.twocat();
    let p = fields(text, 5, "representative")?;
    let mor = |s: &str| c.mor_by_name(s).ok_or_else(|| anyhow!("unknown 1-cell `{s}`"));
    let cell = |s: &str| c.cell_by_name(s).ok_or_else(|| anyhow!("unknown 2-cell `{s}`"));
    Ok(CellRep {
        apex: c
            .obj_by_name(&p[0])
            .ok_or_else(|| anyhow!("unknown object `{}`", p[0]))?,
        v1: mor(&p[1])?,
        v2: mor(&p[2])?,
        alpha: cell(&p[3])?,
        beta: cell(&p[4])?,
    })
}

pub fn validate(path: &Path) -> anyhow::Result<Outcome> {
    let (_, c, w) = read_twocat(path)?;
    let report = c.validate();
    Ok(Outcome::new(
        report.checks,
        json!({
            "objects": c.n_objects(),
            "morphisms": c.n_mors(),
            "twocells": c.n_cells(),
            "W": w.names(&c),
        }),
    ))
}

pub fn check_bf_cmd(path: &Path) -> anyhow::Result<Outcome> {
    let (c, w) = load_twocat(path)?;
    let report = check_bf(&c, &w);
    Ok(Outcome::new(report.checks, json!({ "W": w.names(&c) })))
}

pub fn saturate_cmd(path: &Path) -> anyhow::Result<Outcome> {
    let (c, w) = load_twocat(path)?;
    let sat = saturate(&c, &w);
    let witnesses: serde_json::Map<String, Value> = sat
        .members()
        .filter_map(|f| {
            let (g, h) = saturation_witness(&c, &w, f)?;
            Some((
                c.mor_name(f).to_string(),
                json!({ "g": c.mor_name(g), "h": c.mor_name(h) }),
            ))
        })
        .collect();
    Ok(Outcome::new(
        Vec::new(),
        json!({
            "W": w.names(&c),
            "saturation": sat.names(&c),
            "saturated": is_right_saturated(&c, &w),
            "witnesses": witnesses,
        }),
    ))
}

pub fn localize_cmd(path: &Path, flags: &Flags) -> anyhow::Result<Outcome> {
    let (c, w) = load_twocat(path)?;
    let l = match localized(c, w, flags.c3) {
        Ok(l) => l,
        Err(o) => return Ok(o),
    };
    let c = l.twocat();
    let ch = l.choices();
    let mut verdicts = vec![
        Check::from_result("C1", (!ch.honors_c1(c)).then(Vec::new)),
        Check::from_result("C2", (!ch.honors_c2(c)).then(Vec::new)),
    ];
    if flags.c3 {
        verdicts.push(Check::from_result("C3", (!ch.honors_c3(c)).then(Vec::new)));
    }
    Ok(Outcome::new(
        verdicts,
        json!({
            "choices": ch.len(),
            "c3": flags.c3,
            "homs": l.cell_counts(),
            "max_chain_length": l.max_chain_length(),
        }),
    ))
}

pub fn equiv(path: &Path, span: &str, flags: &Flags) -> anyhow::Result<Outcome> {
    let (c, w) = load_twocat(path)?;
    let l = match localized(c, w, flags.c3) {
        Ok(l) => l,
        Err(o) => return Ok(o),
    };
    let s = parse_span(&l, span)?;
    let closed = l.is_internal_equiv_closed_form(&s);
    let found = l.is_internal_equiv_search(&s);
    let witness = found.as_ref().map(|e| {
        json!({
            "inverse": l.span_name(&e.inverse),
            "delta": l.rep_name(&e.delta.rep),
            "xi": l.rep_name(&e.xi.rep),
        })
    });
    let verdicts = vec![
        Check::from_result("closed_form", (!closed).then(|| vec![l.span_name(&s)])),
        Check::from_result("search", found.is_none().then(|| vec![l.span_name(&s)])),
        Check::from_result(
            "deciders_agree",
            (closed != found.is_some()).then(|| vec![l.span_name(&s)]),
        ),
    ];
    Ok(Outcome::new(
        verdicts,
        json!({
            "span": l.span_name(&s),
            "equivalent": closed && found.is_some(),
            "witness": witness,
        }),
    ))
}

pub fn cell_eq(
    path: &Path,
    source: &str,
    target: &str,
    reps: [&str; 2],
    flags: &Flags,
) -> anyhow::Result<Outcome> {
    let (c, w) = load_twocat(path)?;
    let l = match localized(c, w, flags.c3) {
        Ok(l) => l,
        Err(o) => return Ok(o),
    };
    let (s, t) = (parse_span(&l, source)?, parse_span(&l, target)?);
    let (r1, r2) = (parse_rep(&l, reps[0])?, parse_rep(&l, reps[1])?);
    for r in [&r1, &r2] {
        if !l.is_valid_rep(&s, &t, r) {
            bail!(
                "{} is not a representative of a 2-cell {} ⇒ {}",
                l.rep_name(r),
                l.span_name(&s),
                l.span_name(&t)
            );
        }
    }
    let equal = l.cells_equal(s, t, &r1, &r2)?;
    let c = l.twocat();
    let chain = l.equality_chain(s, t, &r1, &r2).map(|steps| {
        steps
            .iter()
            .map(|st| {
                let mv = match st.via {
                    Move::Refine { p } => json!({ "move": "refine", "p": c.mor_name(p) }),
                    Move::Modify { eps1, eps2 } => json!({
                        "move": "modify",
                        "eps1": c.cell_name(eps1),
                        "eps2": c.cell_name(eps2),
                    }),
                };
                json!({
                    "from": l.rep_name(&st.from),
                    "to": l.rep_name(&st.to),
                    "via": mv,
                    "inverse": st.inverse,
                })
            })
            .collect::<Vec<_>>()
    });
    Ok(Outcome::new(
        vec![Check::from_result(
            "equal",
            (!equal).then(|| vec![l.rep_name(&r1), l.rep_name(&r2)]),
        )],
        json!({
            "canonical": [
                l.rep_name(&l.cell(s, t, r1)?.rep),
                l.rep_name(&l.cell(s, t, r2)?.rep),
            ],
            "chain": chain,
        }),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    /// Localize the target at the saturation of its class.
    Sat,
    /// Localize the target at its class as given.
    Plain,
}

pub fn induce_cmd(
    src_path: &Path,
    dst_path: &Path,
    functor_path: &Path,
    target: Target,
    flags: &Flags,
) -> anyhow::Result<Outcome> {
    let (a, wa) = load_twocat(src_path)?;
    let (b, wb) = load_twocat(dst_path)?;
    let fd: FunctorDocument = doc::read(functor_path)?;
    let f = StrictTwoFunctor::from_document(&a, &b, &fd)
        .with_context(|| format!("{}", functor_path.display()))?;
    if let Some(bad) = validate_functor(&a, &b, &f).failures().next() {
        bail!(
            "{}: not a strict 2-functor: `{}` fails at ({})",
            functor_path.display(),
            bad.name,
            bad.counterexample.clone().unwrap_or_default().join(", ")
        );
    }
    for (c, w) in [(&a, &wa), (&b, &wb)] {
        let r = check_bf(c, w);
        if !r.pass() {
            return Ok(bf_outcome(r, Value::Null));
        }
    }
    let compat = theo04_check(&a, &wa, &b, &wb, &f)?;
    let preimage = preimage_check(&a, &wa, &b, &wb, &f);
    let mut verdicts = vec![
        Check::from_result(
            "clause_i",
            (!compat.clause_i).then(|| compat.escaping.clone()),
        ),
        Check::from_result(
            "clause_ii",
            (!compat.clause_ii).then(|| compat.escaping.clone()),
        ),
        Check::from_result("clauses_agree", (!compat.agree()).then(Vec::new)),
    ];
    let mut data = json!({
        "target": format!("{target:?}").to_lowercase(),
        "saturation_compatibility": compat,
        "preimage": preimage,
    });
    let wb_target = match target {
        Target::Sat => saturate(&b, &wb),
        Target::Plain => wb,
    };
    let src = localize(Arc::new(a), wa, flags.c3)?;
    let dst = localize(Arc::new(b), wb_target, true)?;
    let (g, summary) = match induce(&src, &dst, &f) {
        Ok(x) => x,
        Err(Error::Precondition(msg)) => {
            let escaping = msg.split(' ').next().unwrap_or_default().to_string();
            verdicts.push(Check::fail("induce", vec![escaping]));
            return Ok(Outcome {
                verdicts,
                data,
                note: Some(msg),
            });
        }
        Err(Error::Inconsistent(msg)) => {
            verdicts.push(Check::fail("well_defined", vec![msg]));
            return Ok(Outcome::new(verdicts, data));
        }
        Err(e) => return Err(e.into()),
    };
    verdicts.push(Check::from_result("well_defined", (!summary.well_defined).then(Vec::new)));
    verdicts.push(Check::from_result("strict_square", (!summary.strict_square).then(Vec::new)));
    data["induced"] = json!(summary);
    if flags.xchecks {
        let x = check_x_conditions(&src, &dst, &g)?;
        let equivalence = x.is_clean();
        verdicts.extend(x.checks);
        if equivalence {
            verdicts.push(Check::from_result(
                "preimage",
                (!preimage.equal).then(|| preimage.preimage.clone()),
            ));
        }
    }
    Ok(Outcome::new(verdicts, data))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GroupoidCheck {
    /// Is the functor (`--functor`) between the two groupoids a Morita equivalence?
    Morita,
    /// If φ∘ψ and ψ∘ξ are Morita then so are φ, ψ, ξ: every composable triple of the catalog.
    Prop05,
    /// Is the Morita class right saturated inside the catalog?
    Saturated,
}

pub fn groupoid(
    paths: &[std::path::PathBuf],
    check: GroupoidCheck,
    functor: Option<&Path>,
) -> anyhow::Result<Outcome> {
    let gs = paths
        .iter()
        .map(|p| load_groupoid(p))
        .collect::<anyhow::Result<Vec<_>>>()?;
    match check {
        GroupoidCheck::Morita => {
            let [y, x] = gs.as_slice() else {
                bail!("--check morita takes two groupoids (source, target)");
            };
            let fp = functor.ok_or_else(|| anyhow!("--check morita needs --functor"))?;
            let fd: GroupoidFunctorDocument = doc::read(fp)?;
            let phi = GroupoidFunctor::from_document(y, x, &fd)
                .with_context(|| format!("{}", fp.display()))?;
            if let Some(bad) = phi.validate(y, x).failures().next() {
                bail!(
                    "{}: not a functor: `{}` fails at ({})",
                    fp.display(),
                    bad.name,
                    bad.counterexample.clone().unwrap_or_default().join(", ")
                );
            }
            let v1 = is_v1(y, x, &phi);
            let v = v2(y, x, &phi);
            let name = vec![y.name.clone(), x.name.clone()];
            Ok(Outcome::new(
                vec![
                    Check::from_result("V1", (!v1).then(|| name.clone())),
                    Check::from_result("V2_injective", (!v.injective).then(|| name.clone())),
                    Check::from_result("V2_surjective", (!v.surjective).then(|| name.clone())),
                    Check::from_result("morita", (!(v1 && v.holds())).then(|| name.clone())),
                ],
                json!({ "morita": v1 && v.holds(), "v1": v1, "v2": v }),
            ))
        }
        GroupoidCheck::Prop05 => {
            let g = groupoid_twocat(&gs)?;
            let c = &g.twocat;
            let (mut triples, mut applicable) = (0usize, 0usize);
            let mut bad = None;
            for (n_xi, (u, z, xi)) in g.functors.iter().enumerate() {
                for (n_psi, (z2, y, psi)) in g.functors.iter().enumerate() {
                    if z2 != z {
                        continue;
                    }
                    for (n_phi, (y2, x, phi)) in g.functors.iter().enumerate() {
                        if y2 != y {
                            continue;
                        }
                        triples += 1;
                        let r = prop05_check([&gs[*u], &gs[*z], &gs[*y], &gs[*x]], xi, psi, phi);
                        applicable += r.applicable as usize;
                        if !r.pass() && bad.is_none() {
                            bad = Some(
                                [n_xi, n_psi, n_phi]
                                    .iter()
                                    .map(|&k| c.mor_name(bifrac::Mor(k)).to_string())
                                    .collect(),
                            );
                        }
                    }
                }
            }
            Ok(Outcome::new(
                vec![Check::from_result("prop05", bad)],
                json!({ "triples": triples, "applicable": applicable }),
            ))
        }
        GroupoidCheck::Saturated => {
            let m = morita_saturated_check(&gs)?;
            let mut verdicts = m.bf.checks.clone();
            let extra: Vec<String> = m
                .saturation
                .iter()
                .filter(|f| !m.morita.contains(f))
                .cloned()
                .collect();
            verdicts.push(Check::from_result("saturated", (!m.saturated).then_some(extra)));
            Ok(Outcome::new(
                verdicts,
                json!({ "morita": m.morita, "saturation": m.saturation }),
            ))
        }
    }
}

pub fn fixtures(name: &str, out: &Path) -> anyhow::Result<Outcome> {
    let text = catalog::render(name).ok_or_else(|| {
        anyhow!(
            "unknown fixture `{name}`; known: {}",
            catalog::names().join(", ")
        )
    })?;
    write_atomic(out, &text)?;
    Ok(Outcome::new(
        Vec::new(),
        json!({ "name": name, "path": out.display().to_string(), "bytes": text.len() }),
    ))
}
