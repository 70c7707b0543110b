//! Finite strict 2-categories given by explicit cell tables.
//!
//! Associators and unitors of the ambient 2-category are identities, so
//! composites of 1-cells are compared on the nose.

mod equiv;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::doc::{CellComposeEntry, ComposeEntry, MorphismEntry, TwoCatDocument};
use crate::error::{Error, Result, StructureError};
use crate::report::{Check, ValidationReport};

pub use equiv::{
    adjointify, equivalence_from_cancellation, equivalence_of_composite,
    equivalence_of_left_factor, equivalence_of_right_factor, find_quasi_inverse,
    internal_equivalences, transport_equivalence, verify_witness, EquivalenceWitness,
};

macro_rules! index_type {
    ($(#[$m:meta])* $name:ident) => {
        $(#[$m])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
        pub struct $name(pub usize);

        impl $name {
            pub fn index(self) -> usize {
                self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}#{}", stringify!($name), self.0)
            }
        }
    };
}

index_type!(
    /// An object, by declaration index.
    Obj
);
index_type!(
    /// A 1-cell, by declaration index.
    Mor
);
index_type!(
    /// A 2-cell, by declaration index.
    Cell
);

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct MorData {
    pub name: String,
    pub src: Obj,
    pub dst: Obj,
}

#[derive(Clone, Debug)]
pub struct CellData {
    pub name: String,
    pub src: Mor,
    pub dst: Mor,
}

#[derive(Clone, Debug)]
pub struct TwoCat {
    objects: Vec<String>,
    mors: Vec<MorData>,
    cells: Vec<CellData>,
    obj_index: HashMap<String, Obj>,
    mor_index: HashMap<String, Mor>,
    cell_index: HashMap<String, Cell>,
    id1: Vec<Mor>,
    id2: Vec<Cell>,
    compose: Vec<u32>,
    vcomp: Vec<u32>,
    hcomp: Vec<u32>,
    // derived
    homs: Vec<Vec<Mor>>,
    between: HashMap<(Mor, Mor), Vec<Cell>>,
    inverse: Vec<Option<Cell>>,
}

fn index_names<T: Copy>(
    names: impl Iterator<Item = String>,
    wrap: impl Fn(usize) -> T,
) -> Result<HashMap<String, T>, StructureError> {
    let mut map = HashMap::new();
    for (i, name) in names.enumerate() {
        if map.insert(name.clone(), wrap(i)).is_some() {
            return Err(StructureError::Duplicate(name));
        }
    }
    Ok(map)
}

fn lookup<T: Copy>(
    map: &HashMap<String, T>,
    table: &'static str,
    id: &str,
) -> Result<T, StructureError> {
    map.get(id).copied().ok_or_else(|| StructureError::Dangling {
        table,
        id: id.to_string(),
    })
}

impl TwoCat {
    /// Loads a document, enforcing that every identifier resolves and every
    /// table is total on composable pairs. Axioms are checked separately by
    /// [`TwoCat::validate`].
    pub fn from_document(doc: &TwoCatDocument) -> Result<TwoCat, StructureError> {
        if doc.objects.is_empty() {
            return Err(StructureError::NoObjects);
        }
        let obj_index = index_names(doc.objects.iter().cloned(), Obj)?;
        let mor_index = index_names(doc.morphisms.iter().map(|m| m.id.clone()), Mor)?;
        let cell_index = index_names(doc.twocells.iter().map(|c| c.id.clone()), Cell)?;

        let mors = doc
            .morphisms
            .iter()
            .map(|m| {
                Ok(MorData {
                    name: m.id.clone(),
                    src: lookup(&obj_index, "morphisms", &m.src)?,
                    dst: lookup(&obj_index, "morphisms", &m.dst)?,
                })
            })
            .collect::<Result<Vec<_>, StructureError>>()?;
        let cells = doc
            .twocells
            .iter()
            .map(|c| {
                let src = lookup(&mor_index, "twocells", &c.src)?;
                let dst = lookup(&mor_index, "twocells", &c.dst)?;
                let (s, d) = (&mors[src.0], &mors[dst.0]);
                if s.src != d.src || s.dst != d.dst {
                    return Err(StructureError::Ill {
                        table: "twocells",
                        entry: format!("{}: {} => {}", c.id, c.src, c.dst),
                    });
                }
                Ok(CellData {
                    name: c.id.clone(),
                    src,
                    dst,
                })
            })
            .collect::<Result<Vec<_>, StructureError>>()?;

        let n_obj = doc.objects.len();
        let n_mor = mors.len();
        let n_cell = cells.len();

        let mut id1 = vec![None; n_obj];
        for (o, m) in &doc.identities {
            let o = lookup(&obj_index, "identities", o)?;
            id1[o.0] = Some(lookup(&mor_index, "identities", m)?);
        }
        let id1 = id1
            .into_iter()
            .enumerate()
            .map(|(i, m)| {
                m.ok_or_else(|| StructureError::Missing {
                    table: "identities",
                    entry: doc.objects[i].clone(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;

        let mut id2 = vec![None; n_mor];
        for (m, c) in &doc.identity2 {
            let m = lookup(&mor_index, "identity2", m)?;
            id2[m.0] = Some(lookup(&cell_index, "identity2", c)?);
        }
        let id2 = id2
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                c.ok_or_else(|| StructureError::Missing {
                    table: "identity2",
                    entry: mors[i].name.clone(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;

        let mut compose = vec![NONE; n_mor * n_mor];
        for ComposeEntry { g, f, result } in &doc.compose {
            let gi = lookup(&mor_index, "compose", g)?;
            let fi = lookup(&mor_index, "compose", f)?;
            let r = lookup(&mor_index, "compose", result)?;
            if mors[fi.0].dst != mors[gi.0].src {
                return Err(StructureError::Ill {
                    table: "compose",
                    entry: format!("{g}, {f}"),
                });
            }
            let slot = &mut compose[gi.0 * n_mor + fi.0];
            if *slot != NONE && *slot != r.0 as u32 {
                return Err(StructureError::Conflict {
                    table: "compose",
                    entry: format!("{g}, {f}"),
                });
            }
            *slot = r.0 as u32;
        }
        for (gi, g) in mors.iter().enumerate() {
            for (fi, f) in mors.iter().enumerate() {
                if f.dst == g.src && compose[gi * n_mor + fi] == NONE {
                    return Err(StructureError::Missing {
                        table: "compose",
                        entry: format!("{}, {}", g.name, f.name),
                    });
                }
            }
        }

        let cell_table = |table: &'static str,
                          entries: &[CellComposeEntry],
                          composable: &dyn Fn(&CellData, &CellData) -> bool|
         -> Result<Vec<u32>, StructureError> {
            let mut out = vec![NONE; n_cell * n_cell];
            for CellComposeEntry { a, b, result } in entries {
                let ai = lookup(&cell_index, table, a)?;
                let bi = lookup(&cell_index, table, b)?;
                let r = lookup(&cell_index, table, result)?;
                if !composable(&cells[ai.0], &cells[bi.0]) {
                    return Err(StructureError::Ill {
                        table,
                        entry: format!("{a}, {b}"),
                    });
                }
                let slot = &mut out[bi.0 * n_cell + ai.0];
                if *slot != NONE && *slot != r.0 as u32 {
                    return Err(StructureError::Conflict {
                        table,
                        entry: format!("{a}, {b}"),
                    });
                }
                *slot = r.0 as u32;
            }
            for (ai, a) in cells.iter().enumerate() {
                for (bi, b) in cells.iter().enumerate() {
                    if composable(a, b) && out[bi * n_cell + ai] == NONE {
                        return Err(StructureError::Missing {
                            table,
                            entry: format!("{}, {}", a.name, b.name),
                        });
                    }
                }
            }
            Ok(out)
        };
        let vcomp = cell_table("vcomp", &doc.vcomp, &|a, b| a.dst == b.src)?;
        let hcomp = cell_table("hcomp", &doc.hcomp, &|a, b| {
            mors[a.src.0].dst == mors[b.src.0].src
        })?;

        let mut c = TwoCat {
            objects: doc.objects.clone(),
            mors,
            cells,
            obj_index,
            mor_index,
            cell_index,
            id1,
            id2,
            compose,
            vcomp,
            hcomp,
            homs: Vec::new(),
            between: HashMap::new(),
            inverse: Vec::new(),
        };
        c.derive();
        Ok(c)
    }

    fn derive(&mut self) {
        let n = self.objects.len();
        let mut homs = vec![Vec::new(); n * n];
        for (i, m) in self.mors.iter().enumerate() {
            homs[m.src.0 * n + m.dst.0].push(Mor(i));
        }
        self.homs = homs;
        let mut between: HashMap<(Mor, Mor), Vec<Cell>> = HashMap::new();
        for (i, c) in self.cells.iter().enumerate() {
            between.entry((c.src, c.dst)).or_default().push(Cell(i));
        }
        self.between = between;
        self.inverse = (0..self.cells.len())
            .map(|i| {
                let g = Cell(i);
                let (s, d) = (self.cell_src(g), self.cell_dst(g));
                self.cells_between(d, s).iter().copied().find(|&h| {
                    self.vcomp(h, g) == Some(self.id2(s)) && self.vcomp(g, h) == Some(self.id2(d))
                })
            })
            .collect();
    }

    pub fn to_document(&self, w: &[Mor]) -> TwoCatDocument {
        let mut doc = TwoCatDocument {
            objects: self.objects.clone(),
            morphisms: self
                .mors
                .iter()
                .map(|m| MorphismEntry {
                    id: m.name.clone(),
                    src: self.objects[m.src.0].clone(),
                    dst: self.objects[m.dst.0].clone(),
                })
                .collect(),
            twocells: self
                .cells
                .iter()
                .map(|c| MorphismEntry {
                    id: c.name.clone(),
                    src: self.mors[c.src.0].name.clone(),
                    dst: self.mors[c.dst.0].name.clone(),
                })
                .collect(),
            w: w.iter().map(|&m| self.mor_name(m).to_string()).collect(),
            ..Default::default()
        };
        for (i, o) in self.objects.iter().enumerate() {
            doc.identities
                .insert(o.clone(), self.mor_name(self.id1[i]).to_string());
        }
        for (i, m) in self.mors.iter().enumerate() {
            doc.identity2
                .insert(m.name.clone(), self.cell_name(self.id2[i]).to_string());
        }
        for g in self.mor_ids() {
            for f in self.mor_ids() {
                if let Some(r) = self.compose(g, f) {
                    doc.compose.push(ComposeEntry {
                        g: self.mor_name(g).into(),
                        f: self.mor_name(f).into(),
                        result: self.mor_name(r).into(),
                    });
                }
            }
        }
        for a in self.cell_ids() {
            for b in self.cell_ids() {
                if let Some(r) = self.vcomp(b, a) {
                    doc.vcomp.push(CellComposeEntry {
                        a: self.cell_name(a).into(),
                        b: self.cell_name(b).into(),
                        result: self.cell_name(r).into(),
                    });
                }
            }
        }
        for a in self.cell_ids() {
            for b in self.cell_ids() {
                if let Some(r) = self.hcomp(b, a) {
                    doc.hcomp.push(CellComposeEntry {
                        a: self.cell_name(a).into(),
                        b: self.cell_name(b).into(),
                        result: self.cell_name(r).into(),
                    });
                }
            }
        }
        doc
    }

    // ---- sizes and enumeration -------------------------------------------

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_mors(&self) -> usize {
        self.mors.len()
    }

    pub fn n_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn obj_ids(&self) -> impl Iterator<Item = Obj> + Clone {
        (0..self.objects.len()).map(Obj)
    }

    pub fn mor_ids(&self) -> impl Iterator<Item = Mor> + Clone {
        (0..self.mors.len()).map(Mor)
    }

    pub fn cell_ids(&self) -> impl Iterator<Item = Cell> + Clone {
        (0..self.cells.len()).map(Cell)
    }

    /// 1-cells `a → b`, in declaration order.
    pub fn hom(&self, a: Obj, b: Obj) -> &[Mor] {
        &self.homs[a.0 * self.objects.len() + b.0]
    }

    /// 1-cells with the given source.
    pub fn mors_from(&self, a: Obj) -> impl Iterator<Item = Mor> + '_ {
        self.obj_ids().flat_map(move |b| self.hom(a, b).iter().copied())
    }

    /// 1-cells with the given target, ordered by source then declaration.
    pub fn mors_into(&self, b: Obj) -> impl Iterator<Item = Mor> + '_ {
        self.obj_ids().flat_map(move |a| self.hom(a, b).iter().copied())
    }

    /// 2-cells `f ⇒ g`, in declaration order.
    pub fn cells_between(&self, f: Mor, g: Mor) -> &[Cell] {
        self.between.get(&(f, g)).map_or(&[], Vec::as_slice)
    }

    pub fn invertible_between(&self, f: Mor, g: Mor) -> impl Iterator<Item = Cell> + '_ {
        self.cells_between(f, g)
            .iter()
            .copied()
            .filter(move |&c| self.inverse[c.0].is_some())
    }

    // ---- names -----------------------------------------------------------

    pub fn obj_name(&self, o: Obj) -> &str {
        &self.objects[o.0]
    }

    pub fn mor_name(&self, m: Mor) -> &str {
        &self.mors[m.0].name
    }

    pub fn cell_name(&self, c: Cell) -> &str {
        &self.cells[c.0].name
    }

    pub fn obj_by_name(&self, name: &str) -> Option<Obj> {
        self.obj_index.get(name).copied()
    }

    pub fn mor_by_name(&self, name: &str) -> Option<Mor> {
        self.mor_index.get(name).copied()
    }

    pub fn cell_by_name(&self, name: &str) -> Option<Cell> {
        self.cell_index.get(name).copied()
    }

    // ---- structure -------------------------------------------------------

    pub fn src(&self, m: Mor) -> Obj {
        self.mors[m.0].src
    }

    pub fn dst(&self, m: Mor) -> Obj {
        self.mors[m.0].dst
    }

    pub fn cell_src(&self, c: Cell) -> Mor {
        self.cells[c.0].src
    }

    pub fn cell_dst(&self, c: Cell) -> Mor {
        self.cells[c.0].dst
    }

    pub fn id1(&self, o: Obj) -> Mor {
        self.id1[o.0]
    }

    pub fn id2(&self, m: Mor) -> Cell {
        self.id2[m.0]
    }

    pub fn is_identity(&self, m: Mor) -> bool {
        self.id1[self.src(m).0] == m
    }

    /// `g ∘ f`, if composable.
    pub fn compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        let n = self.mors.len();
        match self.compose[g.0 * n + f.0] {
            NONE => None,
            r => Some(Mor(r as usize)),
        }
    }

    /// `b ⊙ a`, if `a` ends where `b` starts.
    pub fn vcomp(&self, b: Cell, a: Cell) -> Option<Cell> {
        let n = self.cells.len();
        match self.vcomp[b.0 * n + a.0] {
            NONE => None,
            r => Some(Cell(r as usize)),
        }
    }

    /// `b ∗ a`, if the underlying 1-cells are composable.
    pub fn hcomp(&self, b: Cell, a: Cell) -> Option<Cell> {
        let n = self.cells.len();
        match self.hcomp[b.0 * n + a.0] {
            NONE => None,
            r => Some(Cell(r as usize)),
        }
    }

    /// Inverse 2-cell, when one exists. Inverses are unique.
    pub fn inverse(&self, c: Cell) -> Option<Cell> {
        self.inverse[c.0]
    }

    pub fn is_invertible(&self, c: Cell) -> bool {
        self.inverse[c.0].is_some()
    }

    // ---- fallible composition helpers used by the pasting constructions --

    /// Composite of a path, written right-to-left: `comp(&[h, g, f]) = h∘g∘f`.
    pub fn comp(&self, path: &[Mor]) -> Result<Mor> {
        let (&last, rest) = path
            .split_last()
            .ok_or_else(|| Error::NotComposable("empty path".into()))?;
        rest.iter().rev().try_fold(last, |acc, &g| {
            self.compose(g, acc).ok_or_else(|| {
                Error::NotComposable(format!("{} ∘ {}", self.mor_name(g), self.mor_name(acc)))
            })
        })
    }

    /// Horizontal composite `cells[0] ∗ cells[1] ∗ …`.
    pub fn hc(&self, cells: &[Cell]) -> Result<Cell> {
        let (&last, rest) = cells
            .split_last()
            .ok_or_else(|| Error::NotComposable("empty horizontal composite".into()))?;
        rest.iter().rev().try_fold(last, |acc, &b| {
            self.hcomp(b, acc).ok_or_else(|| {
                Error::NotComposable(format!("{} ∗ {}", self.cell_name(b), self.cell_name(acc)))
            })
        })
    }

    /// Vertical composite `cells[0] ⊙ cells[1] ⊙ …` (the last one acts first).
    pub fn vc(&self, cells: &[Cell]) -> Result<Cell> {
        let (&last, rest) = cells
            .split_last()
            .ok_or_else(|| Error::NotComposable("empty vertical composite".into()))?;
        rest.iter().rev().try_fold(last, |acc, &b| {
            self.vcomp(b, acc).ok_or_else(|| {
                Error::NotComposable(format!("{} ⊙ {}", self.cell_name(b), self.cell_name(acc)))
            })
        })
    }

    /// Identity 2-cell of a composite path.
    pub fn i(&self, path: &[Mor]) -> Result<Cell> {
        Ok(self.id2(self.comp(path)?))
    }

    pub fn inv(&self, c: Cell) -> Result<Cell> {
        self.inverse(c).ok_or_else(|| {
            Error::Inconsistent(format!("2-cell {} is not invertible", self.cell_name(c)))
        })
    }

    /// `i_f ∗ γ`.
    pub fn whisker_left(&self, f: Mor, gamma: Cell) -> Result<Cell> {
        self.hc(&[self.id2(f), gamma])
    }

    /// `γ ∗ i_f`.
    pub fn whisker_right(&self, gamma: Cell, f: Mor) -> Result<Cell> {
        self.hc(&[gamma, self.id2(f)])
    }

    // ---- validation ------------------------------------------------------

    /// Checks every strict 2-category axiom exhaustively. Each failed axiom
    /// carries one counterexample tuple.
    pub fn validate(&self) -> ValidationReport {
        let mut checks = Vec::new();
        let m = |x: Mor| self.mor_name(x).to_string();
        let c = |x: Cell| self.cell_name(x).to_string();

        checks.push(Check::from_result("identity_types", {
            let bad1 = self
                .obj_ids()
                .find(|&o| self.src(self.id1(o)) != o || self.dst(self.id1(o)) != o)
                .map(|o| vec![self.obj_name(o).to_string(), m(self.id1(o))]);
            bad1.or_else(|| {
                self.mor_ids()
                    .find(|&f| {
                        self.cell_src(self.id2(f)) != f || self.cell_dst(self.id2(f)) != f
                    })
                    .map(|f| vec![m(f), c(self.id2(f))])
            })
        }));

        checks.push(Check::from_result("compose_types", {
            self.composable_pairs()
                .find(|&(g, f)| {
                    let r = self.compose(g, f).unwrap();
                    self.src(r) != self.src(f) || self.dst(r) != self.dst(g)
                })
                .map(|(g, f)| vec![m(g), m(f)])
        }));

        checks.push(Check::from_result("compose_unit", {
            self.mor_ids()
                .find(|&f| {
                    self.compose(f, self.id1(self.src(f))) != Some(f)
                        || self.compose(self.id1(self.dst(f)), f) != Some(f)
                })
                .map(|f| vec![m(f)])
        }));

        checks.push(Check::from_result("compose_assoc", {
            let mut bad = None;
            'outer: for (g, f) in self.composable_pairs() {
                for &h in self.mors_from(self.dst(g)).collect::<Vec<_>>().iter() {
                    let lhs = self.compose(h, g).and_then(|hg| self.compose(hg, f));
                    let rhs = self.compose(g, f).and_then(|gf| self.compose(h, gf));
                    if lhs.is_none() || lhs != rhs {
                        bad = Some(vec![m(h), m(g), m(f)]);
                        break 'outer;
                    }
                }
            }
            bad
        }));

        checks.push(Check::from_result("vcomp_types", {
            self.vertical_pairs()
                .find(|&(b, a)| {
                    let r = self.vcomp(b, a).unwrap();
                    self.cell_src(r) != self.cell_src(a) || self.cell_dst(r) != self.cell_dst(b)
                })
                .map(|(b, a)| vec![c(a), c(b)])
        }));

        checks.push(Check::from_result("vcomp_unit", {
            self.cell_ids()
                .find(|&g| {
                    self.vcomp(g, self.id2(self.cell_src(g))) != Some(g)
                        || self.vcomp(self.id2(self.cell_dst(g)), g) != Some(g)
                })
                .map(|g| vec![c(g)])
        }));

        checks.push(Check::from_result("vcomp_assoc", {
            let mut bad = None;
            'outer: for (b, a) in self.vertical_pairs() {
                for &d in self.cells_from(self.cell_dst(b)).iter() {
                    let lhs = self.vcomp(d, b).and_then(|db| self.vcomp(db, a));
                    let rhs = self.vcomp(b, a).and_then(|ba| self.vcomp(d, ba));
                    if lhs.is_none() || lhs != rhs {
                        bad = Some(vec![c(a), c(b), c(d)]);
                        break 'outer;
                    }
                }
            }
            bad
        }));

        checks.push(Check::from_result("hcomp_types", {
            self.horizontal_pairs()
                .find(|&(b, a)| {
                    let r = self.hcomp(b, a).unwrap();
                    Some(self.cell_src(r)) != self.compose(self.cell_src(b), self.cell_src(a))
                        || Some(self.cell_dst(r))
                            != self.compose(self.cell_dst(b), self.cell_dst(a))
                })
                .map(|(b, a)| vec![c(a), c(b)])
        }));

        checks.push(Check::from_result("hcomp_unit", {
            self.cell_ids()
                .find(|&g| {
                    let f = self.cell_src(g);
                    let left = self.id2(self.id1(self.dst(f)));
                    let right = self.id2(self.id1(self.src(f)));
                    self.hcomp(left, g) != Some(g) || self.hcomp(g, right) != Some(g)
                })
                .map(|g| vec![c(g)])
        }));

        checks.push(Check::from_result("hcomp_identities", {
            self.composable_pairs()
                .find(|&(g, f)| {
                    self.hcomp(self.id2(g), self.id2(f))
                        != self.compose(g, f).map(|gf| self.id2(gf))
                })
                .map(|(g, f)| vec![m(g), m(f)])
        }));

        checks.push(Check::from_result("hcomp_assoc", {
            let mut bad = None;
            'outer: for (b, a) in self.horizontal_pairs() {
                let next = self.dst(self.cell_src(b));
                for d in self.cell_ids() {
                    if self.src(self.cell_src(d)) != next {
                        continue;
                    }
                    let lhs = self.hcomp(d, b).and_then(|db| self.hcomp(db, a));
                    let rhs = self.hcomp(b, a).and_then(|ba| self.hcomp(d, ba));
                    if lhs.is_none() || lhs != rhs {
                        bad = Some(vec![c(a), c(b), c(d)]);
                        break 'outer;
                    }
                }
            }
            bad
        }));

        checks.push(Check::from_result("interchange", self.interchange_counterexample()));

        ValidationReport { checks }
    }

    fn interchange_counterexample(&self) -> Option<Vec<String>> {
        // vertical pairs grouped by the objects their 1-cells run between
        let n = self.objects.len();
        let mut by_objects: Vec<Vec<(Cell, Cell)>> = vec![Vec::new(); n * n];
        for (b, a) in self.vertical_pairs() {
            let f = self.cell_src(a);
            by_objects[self.src(f).0 * n + self.dst(f).0].push((b, a));
        }
        for x in 0..n {
            for y in 0..n {
                for &(a2, a1) in &by_objects[x * n + y] {
                    for z in 0..n {
                        for &(b2, b1) in &by_objects[y * n + z] {
                            let lhs = self
                                .vcomp(b2, b1)
                                .zip(self.vcomp(a2, a1))
                                .and_then(|(bb, aa)| self.hcomp(bb, aa));
                            let rhs = self
                                .hcomp(b2, a2)
                                .zip(self.hcomp(b1, a1))
                                .and_then(|(top, bot)| self.vcomp(top, bot));
                            if lhs.is_none() || lhs != rhs {
                                return Some(
                                    [a1, a2, b1, b2]
                                        .iter()
                                        .map(|&g| self.cell_name(g).to_string())
                                        .collect(),
                                );
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// Loads and validates, rejecting any axiom failure.
    pub fn checked(doc: &TwoCatDocument) -> Result<TwoCat> {
        let c = TwoCat::from_document(doc)?;
        let report = c.validate();
        if let Some(bad) = report.failures().next() {
            return Err(Error::Precondition(format!(
                "2-category axiom `{}` fails at ({})",
                bad.name,
                bad.counterexample.clone().unwrap_or_default().join(", ")
            )));
        }
        Ok(c)
    }

    /// `(g, f)` with `g ∘ f` defined.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (Mor, Mor)> + '_ {
        self.mor_ids().flat_map(move |f| {
            self.mors_from(self.dst(f))
                .collect::<Vec<_>>()
                .into_iter()
                .map(move |g| (g, f))
        })
    }

    /// `(b, a)` with `b ⊙ a` defined.
    pub fn vertical_pairs(&self) -> impl Iterator<Item = (Cell, Cell)> + '_ {
        self.cell_ids().flat_map(move |a| {
            self.cells_from(self.cell_dst(a))
                .into_iter()
                .map(move |b| (b, a))
        })
    }

    /// `(b, a)` with `b ∗ a` defined.
    pub fn horizontal_pairs(&self) -> impl Iterator<Item = (Cell, Cell)> + '_ {
        self.cell_ids().flat_map(move |a| {
            let mid = self.dst(self.cell_src(a));
            self.cell_ids()
                .filter(move |&b| self.src(self.cell_src(b)) == mid)
                .map(move |b| (b, a))
        })
    }

    fn cells_from(&self, f: Mor) -> Vec<Cell> {
        let (a, b) = (self.src(f), self.dst(f));
        self.hom(a, b)
            .iter()
            .flat_map(|&g| self.cells_between(f, g).iter().copied())
            .collect()
    }
}
