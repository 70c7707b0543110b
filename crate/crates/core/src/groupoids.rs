//! Finite groupoids, Morita equivalences between them, and the strict
//! 2-category of a catalog of groupoids (functors and natural
//! transformations).

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::doc::{
    CellComposeEntry, ComposeEntry, GroupoidDocument, GroupoidFunctorDocument, MorphismEntry,
    TwoCatDocument,
};
use crate::error::{Result, StructureError};
use crate::report::{Check, ValidationReport};
use crate::saturation::{check_bf, is_right_saturated, saturate, BfReport, MorClass};
use crate::twocat::TwoCat;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct FiniteGroupoid {
    pub name: String,
    objects: Vec<String>,
    arrows: Vec<(String, usize, usize)>,
    comp: Vec<u32>,
    inv: Vec<usize>,
    unit: Vec<usize>,
}

impl FiniteGroupoid {
    pub fn from_document(doc: &GroupoidDocument) -> Result<FiniteGroupoid, StructureError> {
        if doc.objects.is_empty() {
            return Err(StructureError::NoObjects);
        }
        let mut obj_index = HashMap::new();
        for (i, o) in doc.objects.iter().enumerate() {
            if obj_index.insert(o.clone(), i).is_some() {
                return Err(StructureError::Duplicate(o.clone()));
            }
        }
        let mut arr_index = HashMap::new();
        for (i, a) in doc.arrows.iter().enumerate() {
            if arr_index.insert(a.id.clone(), i).is_some() {
                return Err(StructureError::Duplicate(a.id.clone()));
            }
        }
        let obj = |t: &'static str, s: &str| {
            obj_index.get(s).copied().ok_or_else(|| StructureError::Dangling {
                table: t,
                id: s.to_string(),
            })
        };
        let arr = |t: &'static str, s: &str| {
            arr_index.get(s).copied().ok_or_else(|| StructureError::Dangling {
                table: t,
                id: s.to_string(),
            })
        };
        let arrows = doc
            .arrows
            .iter()
            .map(|a| Ok((a.id.clone(), obj("arrows", &a.src)?, obj("arrows", &a.dst)?)))
            .collect::<Result<Vec<_>, StructureError>>()?;
        let n = arrows.len();
        let mut comp = vec![NONE; n * n];
        for ComposeEntry { g, f, result } in &doc.compose {
            let (gi, fi, r) = (arr("compose", g)?, arr("compose", f)?, arr("compose", result)?);
            if arrows[fi].2 != arrows[gi].1 {
                return Err(StructureError::Ill {
                    table: "compose",
                    entry: format!("{g}, {f}"),
                });
            }
            comp[gi * n + fi] = r as u32;
        }
        for (gi, g) in arrows.iter().enumerate() {
            for (fi, f) in arrows.iter().enumerate() {
                if f.2 == g.1 && comp[gi * n + fi] == NONE {
                    return Err(StructureError::Missing {
                        table: "compose",
                        entry: format!("{}, {}", g.0, f.0),
                    });
                }
            }
        }
        let inv = arrows
            .iter()
            .map(|a| {
                let v = doc.inverse.get(&a.0).ok_or_else(|| StructureError::Missing {
                    table: "inverse",
                    entry: a.0.clone(),
                })?;
                arr("inverse", v)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let unit = doc
            .objects
            .iter()
            .map(|o| {
                let v = doc.unit.get(o).ok_or_else(|| StructureError::Missing {
                    table: "unit",
                    entry: o.clone(),
                })?;
                arr("unit", v)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteGroupoid {
            name: doc.name.clone().unwrap_or_else(|| "G".into()),
            objects: doc.objects.clone(),
            arrows,
            comp,
            inv,
            unit,
        })
    }

    pub fn to_document(&self) -> GroupoidDocument {
        let mut doc = GroupoidDocument {
            name: Some(self.name.clone()),
            objects: self.objects.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|(n, s, d)| MorphismEntry {
                    id: n.clone(),
                    src: self.objects[*s].clone(),
                    dst: self.objects[*d].clone(),
                })
                .collect(),
            ..Default::default()
        };
        for g in 0..self.n_arrows() {
            for f in 0..self.n_arrows() {
                if let Some(r) = self.compose(g, f) {
                    doc.compose.push(ComposeEntry {
                        g: self.arrows[g].0.clone(),
                        f: self.arrows[f].0.clone(),
                        result: self.arrows[r].0.clone(),
                    });
                }
            }
        }
        doc.inverse = (0..self.n_arrows())
            .map(|a| (self.arrows[a].0.clone(), self.arrows[self.inv[a]].0.clone()))
            .collect();
        doc.unit = (0..self.n_objects())
            .map(|o| (self.objects[o].clone(), self.arrows[self.unit[o]].0.clone()))
            .collect();
        doc
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn s(&self, a: usize) -> usize {
        self.arrows[a].1
    }

    pub fn t(&self, a: usize) -> usize {
        self.arrows[a].2
    }

    pub fn e(&self, o: usize) -> usize {
        self.unit[o]
    }

    pub fn i(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g ∘ f` when `t(f) = s(g)`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        match self.comp[g * self.n_arrows() + f] {
            NONE => None,
            r => Some(r as usize),
        }
    }

    pub fn arrows_between(&self, x: usize, y: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n_arrows()).filter(move |&a| self.s(a) == x && self.t(a) == y)
    }

    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn arrow_name(&self, a: usize) -> &str {
        &self.arrows[a].0
    }

    fn composable(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n_arrows();
        (0..n).flat_map(move |f| {
            (0..n)
                .filter(move |&g| self.s(g) == self.t(f))
                .map(move |g| (g, f))
        })
    }

    /// Category axioms, units, and inverses.
    pub fn validate(&self) -> ValidationReport {
        let name = |a: usize| self.arrow_name(a).to_string();
        let mut checks = Vec::new();
        checks.push(Check::from_result(
            "compose_types",
            self.composable()
                .find(|&(g, f)| {
                    let r = self.compose(g, f).unwrap();
                    self.s(r) != self.s(f) || self.t(r) != self.t(g)
                })
                .map(|(g, f)| vec![name(g), name(f)]),
        ));
        checks.push(Check::from_result(
            "unit_types",
            (0..self.n_objects())
                .find(|&o| self.s(self.e(o)) != o || self.t(self.e(o)) != o)
                .map(|o| vec![self.objects[o].clone()]),
        ));
        checks.push(Check::from_result(
            "unit_laws",
            (0..self.n_arrows())
                .find(|&a| {
                    self.compose(a, self.e(self.s(a))) != Some(a)
                        || self.compose(self.e(self.t(a)), a) != Some(a)
                })
                .map(|a| vec![name(a)]),
        ));
        checks.push(Check::from_result("assoc", {
            let mut bad = None;
            'outer: for (g, f) in self.composable().collect::<Vec<_>>() {
                for h in (0..self.n_arrows()).filter(|&h| self.s(h) == self.t(g)) {
                    let lhs = self.compose(h, g).and_then(|hg| self.compose(hg, f));
                    let rhs = self.compose(g, f).and_then(|gf| self.compose(h, gf));
                    if lhs.is_none() || lhs != rhs {
                        bad = Some(vec![name(h), name(g), name(f)]);
                        break 'outer;
                    }
                }
            }
            bad
        }));
        checks.push(Check::from_result(
            "inverses",
            (0..self.n_arrows())
                .find(|&a| {
                    let b = self.i(a);
                    self.s(b) != self.t(a)
                        || self.t(b) != self.s(a)
                        || self.compose(b, a) != Some(self.e(self.s(a)))
                        || self.compose(a, b) != Some(self.e(self.t(a)))
                })
                .map(|a| vec![name(a)]),
        ));
        ValidationReport { checks }
    }

    /// Disjoint union of connected components `Pair(n) × B(ℤ/k)`, given as
    /// `(n, k)` pairs. Objects are numbered from 1; the arrow `x → y`
    /// carrying `g ∈ ℤ/k` is named `a{x}{y}` or `a{x}{y}_{g}`.
    pub fn components(name: &str, parts: &[(usize, usize)]) -> FiniteGroupoid {
        let mut objects = Vec::new();
        let mut arrows = Vec::new();
        // (component, local src, local dst, group element)
        let mut keys: Vec<(usize, usize, usize, usize)> = Vec::new();
        let mut offset = Vec::new();
        for (ci, &(n, k)) in parts.iter().enumerate() {
            offset.push(objects.len());
            for x in 0..n {
                objects.push((objects.len() + 1).to_string());
                let _ = x;
            }
            for x in 0..n {
                for y in 0..n {
                    for g in 0..k {
                        let (gx, gy) = (offset[ci] + x, offset[ci] + y);
                        let label = if k == 1 {
                            format!("a{}{}", gx + 1, gy + 1)
                        } else {
                            format!("a{}{}_{}", gx + 1, gy + 1, g)
                        };
                        arrows.push((label, gx, gy));
                        keys.push((ci, x, y, g));
                    }
                }
            }
        }
        let index: HashMap<(usize, usize, usize, usize), usize> =
            keys.iter().enumerate().map(|(i, &key)| (key, i)).collect();
        let n = arrows.len();
        let mut comp = vec![NONE; n * n];
        for (gi, &(c1, y1, z, h)) in keys.iter().enumerate() {
            for (fi, &(c2, x, y2, g)) in keys.iter().enumerate() {
                if c1 == c2 && y1 == y2 {
                    let k = parts[c1].1;
                    comp[gi * n + fi] = index[&(c1, x, z, (g + h) % k)] as u32;
                }
            }
        }
        let inv = keys
            .iter()
            .map(|&(c, x, y, g)| index[&(c, y, x, (parts[c].1 - g) % parts[c].1)])
            .collect();
        let mut unit = Vec::new();
        for (ci, &(n, _)) in parts.iter().enumerate() {
            for x in 0..n {
                unit.push(index[&(ci, x, x, 0)]);
            }
        }
        FiniteGroupoid {
            name: name.to_string(),
            objects,
            arrows,
            comp,
            inv,
            unit,
        }
    }

    pub fn unit() -> FiniteGroupoid {
        FiniteGroupoid::components("Unit", &[(1, 1)])
    }

    pub fn disc(n: usize) -> FiniteGroupoid {
        FiniteGroupoid::components(&format!("Disc{n}"), &vec![(1, 1); n])
    }

    pub fn pair(n: usize) -> FiniteGroupoid {
        FiniteGroupoid::components(&format!("Pair{n}"), &[(n, 1)])
    }

    pub fn bz(k: usize) -> FiniteGroupoid {
        FiniteGroupoid::components(&format!("BZ{k}"), &[(1, k)])
    }

    pub fn pair_bz(n: usize, k: usize) -> FiniteGroupoid {
        FiniteGroupoid::components(&format!("Pair{n}xBZ{k}"), &[(n, k)])
    }
}

/// Named groupoids shipped with the tool.
pub fn named_groupoid(name: &str) -> Option<FiniteGroupoid> {
    Some(match name {
        "Unit" => FiniteGroupoid::unit(),
        "Disc2" => FiniteGroupoid::disc(2),
        "Pair2" => FiniteGroupoid::pair(2),
        "Pair3" => FiniteGroupoid::pair(3),
        "BZ2" => FiniteGroupoid::bz(2),
        "Pair2xBZ2" => FiniteGroupoid::pair_bz(2, 2),
        _ => return None,
    })
}

pub const GROUPOID_NAMES: [&str; 6] = ["Unit", "Disc2", "Pair2", "Pair3", "BZ2", "Pair2xBZ2"];

/// Catalogs within the default bounds: at most three groupoids, each with at
/// most 3 objects and 12 arrows.
pub fn shipped_catalogs() -> Vec<Vec<FiniteGroupoid>> {
    let named = |ns: &[&str]| ns.iter().map(|n| named_groupoid(n).unwrap()).collect();
    vec![
        named(&["Unit"]),
        named(&["Unit", "Disc2"]),
        named(&["Unit", "Pair2"]),
        named(&["Unit", "Disc2", "Pair2"]),
        named(&["Unit", "BZ2", "Pair2"]),
        named(&["BZ2", "Pair2xBZ2"]),
    ]
}

/// `φ: Y → X` as object and arrow tables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupoidFunctor {
    pub obj: Vec<usize>,
    pub arr: Vec<usize>,
}

impl GroupoidFunctor {
    pub fn identity(g: &FiniteGroupoid) -> GroupoidFunctor {
        GroupoidFunctor {
            obj: (0..g.n_objects()).collect(),
            arr: (0..g.n_arrows()).collect(),
        }
    }

    /// The unique functor to `Unit`.
    pub fn collapse(y: &FiniteGroupoid, x: &FiniteGroupoid) -> GroupoidFunctor {
        GroupoidFunctor {
            obj: vec![0; y.n_objects()],
            arr: vec![x.e(0); y.n_arrows()],
        }
    }

    /// `self` after `first`.
    pub fn after(&self, first: &GroupoidFunctor) -> GroupoidFunctor {
        GroupoidFunctor {
            obj: first.obj.iter().map(|&o| self.obj[o]).collect(),
            arr: first.arr.iter().map(|&a| self.arr[a]).collect(),
        }
    }

    pub fn from_document(
        y: &FiniteGroupoid,
        x: &FiniteGroupoid,
        doc: &GroupoidFunctorDocument,
    ) -> Result<GroupoidFunctor, StructureError> {
        let lookup = |table: &'static str, names: &[String], target: &dyn Fn(&str) -> Option<usize>, map: &BTreeMap<String, String>| {
            names
                .iter()
                .map(|n| {
                    let v = map.get(n).ok_or_else(|| StructureError::Missing {
                        table,
                        entry: n.clone(),
                    })?;
                    target(v).ok_or_else(|| StructureError::Dangling {
                        table,
                        id: v.clone(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()
        };
        let y_objs = y.objects.clone();
        let y_arrs: Vec<String> = y.arrows.iter().map(|a| a.0.clone()).collect();
        Ok(GroupoidFunctor {
            obj: lookup(
                "objects",
                &y_objs,
                &|s| x.objects.iter().position(|o| o == s),
                &doc.objects,
            )?,
            arr: lookup(
                "arrows",
                &y_arrs,
                &|s| x.arrows.iter().position(|a| a.0 == s),
                &doc.arrows,
            )?,
        })
    }

    pub fn to_document(&self, y: &FiniteGroupoid, x: &FiniteGroupoid) -> GroupoidFunctorDocument {
        GroupoidFunctorDocument {
            objects: (0..y.n_objects())
                .map(|o| (y.objects[o].clone(), x.objects[self.obj[o]].clone()))
                .collect(),
            arrows: (0..y.n_arrows())
                .map(|a| (y.arrows[a].0.clone(), x.arrows[self.arr[a]].0.clone()))
                .collect(),
        }
    }

    /// Commutes with source, target, composition, inverses and units.
    pub fn validate(&self, y: &FiniteGroupoid, x: &FiniteGroupoid) -> ValidationReport {
        let name = |a: usize| y.arrow_name(a).to_string();
        let checks = vec![
            Check::from_result(
                "source_target",
                (0..y.n_arrows())
                    .find(|&a| {
                        x.s(self.arr[a]) != self.obj[y.s(a)] || x.t(self.arr[a]) != self.obj[y.t(a)]
                    })
                    .map(|a| vec![name(a)]),
            ),
            Check::from_result(
                "compose",
                y.composable()
                    .find(|&(g, f)| {
                        Some(self.arr[y.compose(g, f).unwrap()])
                            != x.compose(self.arr[g], self.arr[f])
                    })
                    .map(|(g, f)| vec![name(g), name(f)]),
            ),
            Check::from_result(
                "inverse",
                (0..y.n_arrows())
                    .find(|&a| self.arr[y.i(a)] != x.i(self.arr[a]))
                    .map(|a| vec![name(a)]),
            ),
            Check::from_result(
                "unit",
                (0..y.n_objects())
                    .find(|&o| self.arr[y.e(o)] != x.e(self.obj[o]))
                    .map(|o| vec![y.objects[o].clone()]),
            ),
        ];
        ValidationReport { checks }
    }
}

/// Every object of `X` is reached by an arrow from the image of `φ₀`.
pub fn is_v1(y: &FiniteGroupoid, x: &FiniteGroupoid, phi: &GroupoidFunctor) -> bool {
    (0..x.n_objects()).all(|x0| {
        (0..y.n_objects()).any(|y0| x.arrows_between(phi.obj[y0], x0).next().is_some())
    })
}

/// Injectivity and surjectivity of `Y₁ → (Y₀ × Y₀) ×_{X₀ × X₀} X₁`,
/// `y₁ ↦ (s y₁, t y₁, φ₁ y₁)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct V2 {
    pub injective: bool,
    pub surjective: bool,
}

impl V2 {
    pub fn holds(&self) -> bool {
        self.injective && self.surjective
    }
}

pub fn v2(y: &FiniteGroupoid, x: &FiniteGroupoid, phi: &GroupoidFunctor) -> V2 {
    let mut hits: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for a in 0..y.n_arrows() {
        *hits.entry((y.s(a), y.t(a), phi.arr[a])).or_default() += 1;
    }
    let injective = hits.values().all(|&n| n == 1);
    let surjective = (0..y.n_objects()).all(|y0| {
        (0..y.n_objects()).all(|y1| {
            x.arrows_between(phi.obj[y0], phi.obj[y1])
                .all(|x1| hits.contains_key(&(y0, y1, x1)))
        })
    });
    V2 {
        injective,
        surjective,
    }
}

pub fn is_v2(y: &FiniteGroupoid, x: &FiniteGroupoid, phi: &GroupoidFunctor) -> bool {
    v2(y, x, phi).holds()
}

pub fn is_morita(y: &FiniteGroupoid, x: &FiniteGroupoid, phi: &GroupoidFunctor) -> bool {
    is_v1(y, x, phi) && is_v2(y, x, phi)
}

/// For `ξ: U → Z`, `ψ: Z → Y`, `φ: Y → X` with `φ∘ψ` and `ψ∘ξ` Morita:
/// verdicts for `φ`, `ψ` and `ξ`. `None` when the hypotheses fail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop05 {
    pub applicable: bool,
    pub phi: bool,
    pub psi: bool,
    pub xi: bool,
}

impl Prop05 {
    pub fn pass(&self) -> bool {
        !self.applicable || (self.phi && self.psi && self.xi)
    }
}

pub fn prop05_check(
    gs: [&FiniteGroupoid; 4],
    xi: &GroupoidFunctor,
    psi: &GroupoidFunctor,
    phi: &GroupoidFunctor,
) -> Prop05 {
    let [u, z, y, x] = gs;
    let applicable =
        is_morita(z, x, &phi.after(psi)) && is_morita(u, y, &psi.after(xi));
    Prop05 {
        applicable,
        phi: is_morita(y, x, phi),
        psi: is_morita(z, y, psi),
        xi: is_morita(u, z, xi),
    }
}

/// Every functor `y → x`.
pub fn enumerate_functors(y: &FiniteGroupoid, x: &FiniteGroupoid) -> Vec<GroupoidFunctor> {
    let mut out = Vec::new();
    let total = x.n_objects().pow(y.n_objects() as u32);
    for code in 0..total {
        let mut k = code;
        let obj: Vec<usize> = (0..y.n_objects())
            .map(|_| {
                let o = k % x.n_objects();
                k /= x.n_objects();
                o
            })
            .collect();
        let mut arr = vec![None; y.n_arrows()];
        extend_arrows(y, x, &obj, &mut arr, 0, &mut out);
    }
    out
}

fn extend_arrows(
    y: &FiniteGroupoid,
    x: &FiniteGroupoid,
    obj: &[usize],
    arr: &mut Vec<Option<usize>>,
    k: usize,
    out: &mut Vec<GroupoidFunctor>,
) {
    if k == arr.len() {
        out.push(GroupoidFunctor {
            obj: obj.to_vec(),
            arr: arr.iter().map(|a| a.unwrap()).collect(),
        });
        return;
    }
    let is_unit = y.e(y.s(k)) == k;
    let candidates: Vec<usize> = if is_unit {
        vec![x.e(obj[y.s(k)])]
    } else {
        x.arrows_between(obj[y.s(k)], obj[y.t(k)]).collect()
    };
    for cand in candidates {
        arr[k] = Some(cand);
        let consistent = y.composable().all(|(g, f)| {
            if g != k && f != k && y.compose(g, f) != Some(k) {
                return true;
            }
            match (arr[g], arr[f], arr[y.compose(g, f).unwrap()]) {
                (Some(a), Some(b), Some(r)) => x.compose(a, b) == Some(r),
                _ => true,
            }
        });
        if consistent {
            extend_arrows(y, x, obj, arr, k + 1, out);
        }
    }
    arr[k] = None;
}

/// Natural transformations `F ⇒ G` for functors `y → x`, as components.
pub fn natural_transformations(
    y: &FiniteGroupoid,
    x: &FiniteGroupoid,
    f: &GroupoidFunctor,
    g: &GroupoidFunctor,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut comp = vec![0; y.n_objects()];
    fn go(
        y: &FiniteGroupoid,
        x: &FiniteGroupoid,
        f: &GroupoidFunctor,
        g: &GroupoidFunctor,
        comp: &mut Vec<usize>,
        k: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == comp.len() {
            out.push(comp.clone());
            return;
        }
        for c in x.arrows_between(f.obj[k], g.obj[k]).collect::<Vec<_>>() {
            comp[k] = c;
            // naturality on arrows between already assigned objects
            let ok = (0..y.n_arrows()).all(|a| {
                let (s, t) = (y.s(a), y.t(a));
                if s > k || t > k {
                    return true;
                }
                x.compose(g.arr[a], comp[s]) == x.compose(comp[t], f.arr[a])
            });
            if ok {
                go(y, x, f, g, comp, k + 1, out);
            }
        }
    }
    go(y, x, f, g, &mut comp, 0, &mut out);
    out
}

/// The catalog's 2-category: objects are the groupoids, 1-cells all functors,
/// 2-cells all natural transformations. `W` is the class of Morita
/// equivalences.
pub struct GroupoidTwoCat {
    pub twocat: TwoCat,
    pub morita: MorClass,
    pub catalog: Vec<FiniteGroupoid>,
    /// `(source index, target index, functor)` per 1-cell.
    pub functors: Vec<(usize, usize, GroupoidFunctor)>,
}

pub fn groupoid_twocat(catalog: &[FiniteGroupoid]) -> Result<GroupoidTwoCat> {
    let doc = groupoid_document(catalog);
    let twocat = TwoCat::from_document(&doc.0)?;
    let morita = MorClass::from_names(&twocat, &doc.0.w)?;
    Ok(GroupoidTwoCat {
        twocat,
        morita,
        catalog: catalog.to_vec(),
        functors: doc.1,
    })
}

type FunctorList = Vec<(usize, usize, GroupoidFunctor)>;

fn groupoid_document(catalog: &[FiniteGroupoid]) -> (TwoCatDocument, FunctorList) {
    let mut functors: FunctorList = Vec::new();
    let mut names = Vec::new();
    for (i, y) in catalog.iter().enumerate() {
        for (j, x) in catalog.iter().enumerate() {
            let all = enumerate_functors(y, x);
            for (k, f) in all.into_iter().enumerate() {
                let name = if i == j && f == GroupoidFunctor::identity(y) {
                    format!("id_{}", y.name)
                } else {
                    format!("{}->{}#{}", y.name, x.name, k)
                };
                names.push(name);
                functors.push((i, j, f));
            }
        }
    }
    let index: HashMap<(usize, usize, GroupoidFunctor), usize> = functors
        .iter()
        .enumerate()
        .map(|(n, (i, j, f))| ((*i, *j, f.clone()), n))
        .collect();

    // 2-cells per parallel pair
    let mut cells: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    let mut cell_names = Vec::new();
    let mut cell_index: HashMap<(usize, usize, Vec<usize>), usize> = HashMap::new();
    for (a, (i, j, f)) in functors.iter().enumerate() {
        for (b, (i2, j2, g)) in functors.iter().enumerate() {
            if (i, j) != (i2, j2) {
                continue;
            }
            let (y, x) = (&catalog[*i], &catalog[*j]);
            for (k, comp) in natural_transformations(y, x, f, g).into_iter().enumerate() {
                let is_id = a == b && comp.iter().enumerate().all(|(o, &c)| c == x.e(f.obj[o]));
                let name = if is_id {
                    format!("i_{}", names[a])
                } else {
                    format!("{}=>{}#{}", names[a], names[b], k)
                };
                cell_index.insert((a, b, comp.clone()), cells.len());
                cells.push((a, b, comp));
                cell_names.push(name);
            }
        }
    }

    let mut doc = TwoCatDocument {
        objects: catalog.iter().map(|g| g.name.clone()).collect(),
        ..Default::default()
    };
    for (n, (i, j, _)) in functors.iter().enumerate() {
        doc.morphisms.push(MorphismEntry {
            id: names[n].clone(),
            src: catalog[*i].name.clone(),
            dst: catalog[*j].name.clone(),
        });
    }
    for (i, g) in catalog.iter().enumerate() {
        let id = index[&(i, i, GroupoidFunctor::identity(g))];
        doc.identities.insert(g.name.clone(), names[id].clone());
    }
    for (nf, (i, j, f)) in functors.iter().enumerate() {
        for (ng, (j2, k, g)) in functors.iter().enumerate() {
            if j2 != j {
                continue;
            }
            let r = index[&(*i, *k, g.after(f))];
            doc.compose.push(ComposeEntry {
                g: names[ng].clone(),
                f: names[nf].clone(),
                result: names[r].clone(),
            });
        }
    }
    for (n, (a, b, _)) in cells.iter().enumerate() {
        doc.twocells.push(MorphismEntry {
            id: cell_names[n].clone(),
            src: names[*a].clone(),
            dst: names[*b].clone(),
        });
    }
    for (a, (_, j, f)) in functors.iter().enumerate() {
        let x = &catalog[*j];
        let comp: Vec<usize> = f.obj.iter().map(|&o| x.e(o)).collect();
        doc.identity2
            .insert(names[a].clone(), cell_names[cell_index[&(a, a, comp)]].clone());
    }
    // vertical: (β ⊙ α)_y = β_y ∘ α_y
    for (na, (f, g, alpha)) in cells.iter().enumerate() {
        let x = &catalog[functors[*f].1];
        for (nb, (g2, h, beta)) in cells.iter().enumerate() {
            if g2 != g {
                continue;
            }
            let comp: Vec<usize> = alpha
                .iter()
                .zip(beta)
                .map(|(&a, &b)| x.compose(b, a).expect("composable components"))
                .collect();
            doc.vcomp.push(CellComposeEntry {
                a: cell_names[na].clone(),
                b: cell_names[nb].clone(),
                result: cell_names[cell_index[&(*f, *h, comp)]].clone(),
            });
        }
    }
    // horizontal: α: F ⇒ F′ over A → B, β: G ⇒ G′ over B → C,
    // (β ∗ α)_a = β_{F′ a} ∘ G(α_a)
    for (na, (f, f2, alpha)) in cells.iter().enumerate() {
        let (_, jb, ref ff2) = functors[*f2];
        for (nb, (g, g2, beta)) in cells.iter().enumerate() {
            let (ib, jc, ref gg) = functors[*g];
            if ib != jb {
                continue;
            }
            let c = &catalog[jc];
            let comp: Vec<usize> = alpha
                .iter()
                .enumerate()
                .map(|(o, &a)| {
                    c.compose(beta[ff2.obj[o]], gg.arr[a])
                        .expect("composable components")
                })
                .collect();
            let gf = index[&(functors[*f].0, jc, gg.after(&functors[*f].2))];
            let gf2 = index[&(functors[*f].0, jc, functors[*g2].2.after(ff2))];
            doc.hcomp.push(CellComposeEntry {
                a: cell_names[na].clone(),
                b: cell_names[nb].clone(),
                result: cell_names[cell_index[&(gf, gf2, comp)]].clone(),
            });
        }
    }
    doc.w = functors
        .iter()
        .enumerate()
        .filter(|(_, (i, j, f))| is_morita(&catalog[*i], &catalog[*j], f))
        .map(|(n, _)| names[n].clone())
        .collect();
    (doc, functors)
}

/// The catalog document, for emission as a fixture.
pub fn catalog_document(catalog: &[FiniteGroupoid]) -> TwoCatDocument {
    groupoid_document(catalog).0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoritaSaturation {
    pub saturated: bool,
    pub morita: Vec<String>,
    pub saturation: Vec<String>,
    pub bf: BfReport,
}

/// Whether the Morita class is right saturated inside the catalog.
pub fn morita_saturated_check(catalog: &[FiniteGroupoid]) -> Result<MoritaSaturation> {
    let g = groupoid_twocat(catalog)?;
    let sat = saturate(&g.twocat, &g.morita);
    Ok(MoritaSaturation {
        saturated: is_right_saturated(&g.twocat, &g.morita),
        morita: g.morita.names(&g.twocat),
        saturation: sat.names(&g.twocat),
        bf: check_bf(&g.twocat, &g.morita),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_groupoids_validate() {
        for n in GROUPOID_NAMES {
            let g = named_groupoid(n).unwrap();
            assert!(g.validate().is_clean(), "{n}");
            assert!(g.n_objects() <= 3 && g.n_arrows() <= 12, "{n}");
            let back = FiniteGroupoid::from_document(&g.to_document()).unwrap();
            assert_eq!(back.to_document(), g.to_document());
        }
        assert_eq!(FiniteGroupoid::pair(2).n_arrows(), 4);
    }

    #[test]
    fn broken_inverse_fails() {
        let mut doc = FiniteGroupoid::pair(2).to_document();
        doc.inverse.insert("a12".into(), "a12".into());
        let g = FiniteGroupoid::from_document(&doc).unwrap();
        assert!(!g.validate().get("inverses").unwrap().pass);
    }

    #[test]
    fn collapse_verdicts() {
        let unit = FiniteGroupoid::unit();
        let pair = FiniteGroupoid::pair(2);
        let disc = FiniteGroupoid::disc(2);
        let p = GroupoidFunctor::collapse(&pair, &unit);
        assert!(is_v1(&pair, &unit, &p) && is_v2(&pair, &unit, &p));
        let d = GroupoidFunctor::collapse(&disc, &unit);
        assert!(is_v1(&disc, &unit, &d));
        assert_eq!(
            v2(&disc, &unit, &d),
            V2 {
                injective: true,
                surjective: false
            }
        );
        let pick = GroupoidFunctor {
            obj: vec![0],
            arr: vec![disc.e(0)],
        };
        assert!(!is_v1(&unit, &disc, &pick));
    }

    #[test]
    fn functor_counts() {
        let pair = FiniteGroupoid::pair(2);
        let bz = FiniteGroupoid::bz(2);
        assert_eq!(enumerate_functors(&pair, &pair).len(), 4);
        assert_eq!(enumerate_functors(&bz, &bz).len(), 2);
        assert_eq!(enumerate_functors(&pair, &bz).len(), 2);
    }

    #[test]
    fn unit_catalog_is_trivial() {
        let g = groupoid_twocat(&[FiniteGroupoid::unit()]).unwrap();
        assert_eq!(g.twocat.n_objects(), 1);
        assert_eq!(g.twocat.n_mors(), 1);
        assert_eq!(g.twocat.n_cells(), 1);
        assert!(g.twocat.validate().is_clean());
    }

    #[test]
    fn catalogs_validate() {
        for cat in shipped_catalogs() {
            let g = groupoid_twocat(&cat).unwrap();
            let r = g.twocat.validate();
            assert!(r.is_clean(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }
}
