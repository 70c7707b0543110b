//! Built-in documents and the random corpus of small 2-categories.
//!
//! Every generated 2-category has the same shape: an ordinary finite category,
//! a preorder on each hom-set compatible with composition (a 2-cell `f ⇒ g`
//! exists only when `f ≤ g`), and a commutative monoid of labels carried by
//! the 2-cells between 1-cells of a chosen ideal. Such data always satisfies
//! the strict 2-category axioms.

/// Multiplication on label indices.
type LabelOp = fn(usize, usize) -> usize;

use std::collections::{BTreeMap, HashMap};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::doc::{
    CellComposeEntry, ComposeEntry, FunctorDocument, MorphismEntry, TwoCatDocument,
};
use crate::saturation::{check_bf, internal_equivalences_class, quasi_units, MorClass};
use crate::twocat::TwoCat;

/// An ordinary finite category with an explicit composition table.
#[derive(Clone, Debug)]
pub struct Category {
    pub objects: Vec<String>,
    /// `(name, src, dst)`
    pub mors: Vec<(String, usize, usize)>,
    pub ids: Vec<usize>,
    /// `(g, f) ↦ g∘f`
    pub comp: HashMap<(usize, usize), usize>,
}

impl Category {
    /// Objects with identity 1-cells named by `id_name`.
    pub fn new(objects: &[&str], id_name: impl Fn(&str) -> String) -> Category {
        let mut c = Category {
            objects: objects.iter().map(|s| s.to_string()).collect(),
            mors: Vec::new(),
            ids: Vec::new(),
            comp: HashMap::new(),
        };
        for (i, o) in objects.iter().enumerate() {
            c.mors.push((id_name(o), i, i));
            c.ids.push(i);
        }
        c
    }

    pub fn add(&mut self, name: &str, src: usize, dst: usize) -> usize {
        self.mors.push((name.to_string(), src, dst));
        self.mors.len() - 1
    }

    pub fn find(&self, name: &str) -> usize {
        self.mors
            .iter()
            .position(|m| m.0 == name)
            .unwrap_or_else(|| panic!("no 1-cell {name}"))
    }

    /// Records `g∘f = r` by name.
    pub fn set(&mut self, g: &str, f: &str, r: &str) {
        let (g, f, r) = (self.find(g), self.find(f), self.find(r));
        self.comp.insert((g, f), r);
    }

    /// Adds the unit laws for every 1-cell.
    pub fn fill_units(&mut self) {
        for m in 0..self.mors.len() {
            let (_, s, d) = self.mors[m];
            self.comp.insert((m, self.ids[s]), m);
            self.comp.insert((self.ids[d], m), m);
        }
    }

    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.comp.get(&(g, f)).copied()
    }

    fn composable(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for f in 0..self.mors.len() {
            for g in 0..self.mors.len() {
                if self.mors[f].2 == self.mors[g].1 {
                    out.push((g, f));
                }
            }
        }
        out
    }

    fn is_total(&self) -> bool {
        self.composable().iter().all(|p| self.comp.contains_key(p))
    }

    /// One-object category of a monoid given by element names and product.
    pub fn monoid(elements: &[&str], mul: impl Fn(usize, usize) -> usize) -> Category {
        let mut c = Category::new(&["*"], |_| elements[0].to_string());
        for e in &elements[1..] {
            c.add(e, 0, 0);
        }
        for a in 0..elements.len() {
            for b in 0..elements.len() {
                c.comp.insert((a, b), mul(a, b));
            }
        }
        c
    }

    /// Thin category of a preorder given as a reflexive-transitive relation.
    pub fn thin(n: usize, le: &[Vec<bool>]) -> Category {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut c = Category::new(&refs, |o| format!("id{o}"));
        let mut arrow = vec![vec![None; n]; n];
        for i in 0..n {
            arrow[i][i] = Some(c.ids[i]);
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && le[i][j] {
                    arrow[i][j] = Some(c.add(&format!("a{i}{j}"), i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if let (Some(f), Some(g)) = (arrow[i][j], arrow[j][k]) {
                        c.comp.insert((g, f), arrow[i][k].expect("transitive"));
                    }
                }
            }
        }
        c
    }

    /// Free category on an acyclic quiver: 1-cells are paths.
    pub fn free_acyclic(n: usize, edges: &[(usize, usize)]) -> Category {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut c = Category::new(&refs, |o| format!("id{o}"));
        // paths as edge-index sequences; identities are the empty path
        let mut paths: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut frontier: Vec<usize> = Vec::new();
        for (k, &(s, d)) in edges.iter().enumerate() {
            let name: String = format!("e{k}");
            c.add(&name, s, d);
            paths.push(vec![k]);
            frontier.push(c.mors.len() - 1);
        }
        while let Some(p) = frontier.pop() {
            let (_, s, d) = c.mors[p].clone();
            for (k, &(es, ed)) in edges.iter().enumerate() {
                if es == d {
                    let mut path = paths[p].clone();
                    path.push(k);
                    let name = path.iter().map(|e| format!("e{e}")).collect::<Vec<_>>().join("");
                    c.add(&name, s, ed);
                    paths.push(path);
                    frontier.push(c.mors.len() - 1);
                }
            }
        }
        let index: HashMap<Vec<usize>, usize> =
            paths.iter().enumerate().skip(n).map(|(i, p)| (p.clone(), i)).collect();
        for (g, f) in c.composable() {
            let r = if paths[f].is_empty() {
                g
            } else if paths[g].is_empty() {
                f
            } else {
                let mut p = paths[f].clone();
                p.extend(&paths[g]);
                index[&p]
            };
            c.comp.insert((g, f), r);
        }
        c
    }

    /// Disjoint union; object and 1-cell names get the given suffixes.
    pub fn disjoint(a: &Category, b: &Category) -> Category {
        let mut c = Category {
            objects: Vec::new(),
            mors: Vec::new(),
            ids: Vec::new(),
            comp: HashMap::new(),
        };
        for (part, x) in [(0usize, a), (1, b)] {
            let (o_off, m_off) = (c.objects.len(), c.mors.len());
            let tag = if part == 0 { "l" } else { "r" };
            c.objects.extend(x.objects.iter().map(|o| format!("{o}{tag}")));
            c.mors.extend(
                x.mors
                    .iter()
                    .map(|(n, s, d)| (format!("{n}{tag}"), s + o_off, d + o_off)),
            );
            c.ids.extend(x.ids.iter().map(|i| i + m_off));
            c.comp
                .extend(x.comp.iter().map(|(&(g, f), &r)| ((g + m_off, f + m_off), r + m_off)));
        }
        c
    }
}

/// A commutative monoid of 2-cell labels; element 0 is the unit.
#[derive(Clone, Debug)]
pub struct Labels {
    pub names: Vec<String>,
    pub mul: Vec<Vec<usize>>,
}

impl Labels {
    pub fn trivial() -> Labels {
        Labels::new(&["1"], |_, _| 0)
    }

    pub fn new(names: &[&str], mul: impl Fn(usize, usize) -> usize) -> Labels {
        let n = names.len();
        Labels {
            names: names.iter().map(|s| s.to_string()).collect(),
            mul: (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect(),
        }
    }

    pub fn cyclic(n: usize) -> Labels {
        let names: Vec<String> = (0..n).map(|k| if k == 0 { "1".into() } else { format!("t{k}") }).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Labels::new(&refs, |a, b| (a + b) % n)
    }

    /// `{1, 0}` under multiplication.
    pub fn with_zero() -> Labels {
        Labels::new(&["1", "z"], |a, b| a.max(b))
    }

    /// `{1, a, 0}` with `a·a = 0`.
    pub fn nilpotent() -> Labels {
        Labels::new(&["1", "a", "z"], |a, b| match (a, b) {
            (0, x) | (x, 0) => x,
            _ => 2,
        })
    }
}

/// Everything needed to turn a [`Category`] into a 2-category document.
#[derive(Clone, Debug)]
pub struct Decoration {
    /// Generating pairs `f ≤ g` of parallel 1-cells, by name.
    pub le: Vec<(String, String)>,
    /// Generators of the ideal of 1-cells whose 2-cells carry labels.
    pub ideal: Vec<String>,
    pub labels: Labels,
    /// Cell names for `(f, g, label)`, overriding the generated ones.
    pub names: BTreeMap<(String, String, String), String>,
}

impl Default for Decoration {
    fn default() -> Self {
        Decoration {
            le: Vec::new(),
            ideal: Vec::new(),
            labels: Labels::trivial(),
            names: BTreeMap::new(),
        }
    }
}

impl Decoration {
    pub fn le(mut self, f: &str, g: &str) -> Self {
        self.le.push((f.into(), g.into()));
        self
    }

    pub fn name(mut self, f: &str, g: &str, label: &str, name: &str) -> Self {
        self.names
            .insert((f.into(), g.into(), label.into()), name.into());
        self
    }
}

fn preorder_closure(cat: &Category, gens: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let n = cat.mors.len();
    let mut le = vec![vec![false; n]; n];
    for (i, row) in le.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(f, g) in gens {
        le[f][g] = true;
    }
    let pairs = cat.composable();
    loop {
        let mut changed = false;
        for f in 0..n {
            for g in 0..n {
                if !le[f][g] {
                    continue;
                }
                // whiskering on both sides
                for &(x, y) in &pairs {
                    if y == f {
                        let (a, b) = (cat.compose(x, f).unwrap(), cat.compose(x, g).unwrap());
                        if !le[a][b] {
                            le[a][b] = true;
                            changed = true;
                        }
                    }
                    if x == f {
                        let (a, b) = (cat.compose(f, y).unwrap(), cat.compose(g, y).unwrap());
                        if !le[a][b] {
                            le[a][b] = true;
                            changed = true;
                        }
                    }
                }
                for h in 0..n {
                    if le[g][h] && !le[f][h] {
                        le[f][h] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return le;
        }
    }
}

fn ideal_closure(cat: &Category, le: &[Vec<bool>], gens: &[usize]) -> Vec<bool> {
    let n = cat.mors.len();
    let mut inside = vec![false; n];
    for &g in gens {
        inside[g] = true;
    }
    let pairs = cat.composable();
    loop {
        let mut changed = false;
        for &(g, f) in &pairs {
            let r = cat.compose(g, f).unwrap();
            if (inside[g] || inside[f]) && !inside[r] {
                inside[r] = true;
                changed = true;
            }
        }
        for f in 0..n {
            for g in 0..n {
                if (le[f][g] || le[g][f]) && inside[f] && !inside[g] {
                    inside[g] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            return inside;
        }
    }
}

/// Builds the 2-category document of a decorated category. `w` names the
/// 1-cells of the class `W`.
pub fn build(cat: &Category, deco: &Decoration, w: &[&str]) -> TwoCatDocument {
    let mut cat = cat.clone();
    cat.fill_units();
    let cat = &cat;
    let gens: Vec<(usize, usize)> = deco
        .le
        .iter()
        .map(|(f, g)| (cat.find(f), cat.find(g)))
        .collect();
    let le = preorder_closure(cat, &gens);
    let ideal_gens: Vec<usize> = deco.ideal.iter().map(|f| cat.find(f)).collect();
    let ideal = ideal_closure(cat, &le, &ideal_gens);
    decorate(cat, &le, &ideal, &deco.labels, &deco.names, w)
}

fn decorate(
    cat: &Category,
    le: &[Vec<bool>],
    ideal: &[bool],
    labels: &Labels,
    names: &BTreeMap<(String, String, String), String>,
    w: &[&str],
) -> TwoCatDocument {
    let n = cat.mors.len();
    let mname = |m: usize| cat.mors[m].0.clone();
    // cells as (f, g, label) in declaration order
    let mut cells: Vec<(usize, usize, usize)> = Vec::new();
    let mut cell_index: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for f in 0..n {
        for g in 0..n {
            if !le[f][g] || cat.mors[f].1 != cat.mors[g].1 || cat.mors[f].2 != cat.mors[g].2 {
                continue;
            }
            let count = if ideal[f] { labels.names.len() } else { 1 };
            for m in 0..count {
                cell_index.insert((f, g, m), cells.len());
                cells.push((f, g, m));
            }
        }
    }
    let cell_name = |(f, g, m): (usize, usize, usize)| -> String {
        let key = (mname(f), mname(g), labels.names[m].clone());
        if let Some(name) = names.get(&key) {
            return name.clone();
        }
        match (f == g, m == 0, labels.names.len() == 1 || !ideal[f]) {
            (true, true, _) => format!("i_{}", mname(f)),
            (_, _, true) => format!("c_{}_{}", mname(f), mname(g)),
            _ => format!("{}_{}_{}", labels.names[m], mname(f), mname(g)),
        }
    };

    let mut doc = TwoCatDocument {
        objects: cat.objects.clone(),
        morphisms: cat
            .mors
            .iter()
            .map(|(name, s, d)| MorphismEntry {
                id: name.clone(),
                src: cat.objects[*s].clone(),
                dst: cat.objects[*d].clone(),
            })
            .collect(),
        w: w.iter().map(|s| s.to_string()).collect(),
        ..Default::default()
    };
    for (o, &m) in cat.ids.iter().enumerate() {
        doc.identities.insert(cat.objects[o].clone(), mname(m));
    }
    let mut pairs = cat.composable();
    pairs.sort_by_key(|&(g, f)| (g, f));
    for (g, f) in pairs {
        doc.compose.push(ComposeEntry {
            g: mname(g),
            f: mname(f),
            result: mname(cat.compose(g, f).expect("total composition")),
        });
    }
    doc.twocells = cells
        .iter()
        .map(|&(f, g, m)| MorphismEntry {
            id: cell_name((f, g, m)),
            src: mname(f),
            dst: mname(g),
        })
        .collect();
    for f in 0..n {
        doc.identity2.insert(mname(f), cell_name((f, f, 0)));
    }
    let label_of = |f: usize, m: usize| if ideal[f] { m } else { 0 };
    for &(f, g, m) in &cells {
        for &(g2, h, k) in &cells {
            if g2 != g {
                continue;
            }
            let r = label_of(f, labels.mul[m][k]);
            doc.vcomp.push(CellComposeEntry {
                a: cell_name((f, g, m)),
                b: cell_name((g, h, k)),
                result: cell_name(cells[cell_index[&(f, h, r)]]),
            });
        }
    }
    for &(f, f2, m) in &cells {
        for &(g, g2, k) in &cells {
            if cat.mors[f].2 != cat.mors[g].1 {
                continue;
            }
            let (gf, gf2) = (cat.compose(g, f).unwrap(), cat.compose(g2, f2).unwrap());
            let r = label_of(gf, labels.mul[m][k]);
            doc.hcomp.push(CellComposeEntry {
                a: cell_name((f, f2, m)),
                b: cell_name((g, g2, k)),
                result: cell_name(cells[cell_index[&(gf, gf2, r)]]),
            });
        }
    }
    doc
}

// ---- named fixtures --------------------------------------------------------

fn walking_iso() -> Category {
    let mut c = Category::new(&["X", "Y"], |o| format!("id{o}"));
    c.add("f", 0, 1);
    c.add("g", 1, 0);
    c.fill_units();
    c.set("g", "f", "idX");
    c.set("f", "g", "idY");
    c
}

fn parallel_pair() -> Category {
    let mut c = Category::new(&["A", "B"], |o| format!("id{o}"));
    c.add("p", 0, 1);
    c.add("q", 0, 1);
    c.fill_units();
    c
}

fn walking_retraction() -> Category {
    let mut c = Category::new(&["A", "B"], |o| format!("id{o}"));
    c.add("s", 0, 1);
    c.add("r", 1, 0);
    c.add("e", 1, 1);
    c.fill_units();
    c.set("r", "s", "idA");
    c.set("s", "r", "e");
    c.set("e", "s", "s");
    c.set("r", "e", "r");
    c.set("e", "e", "e");
    c
}

/// One object, identity cells only.
pub fn f1() -> TwoCatDocument {
    build(&Category::new(&["*"], |_| "id".into()), &Decoration::default(), &["id"])
}

/// The walking isomorphism `f: X ⇄ Y: g` with identity 2-cells; `W` is the
/// class of quasi-units.
pub fn f2() -> TwoCatDocument {
    build(&walking_iso(), &Decoration::default(), &["idX", "idY"])
}

/// One non-identity 1-cell `w: 0 → 1`, identity 2-cells, `W = {id0, id1, w}`.
pub fn f3() -> TwoCatDocument {
    let mut c = Category::new(&["0", "1"], |o| format!("id{o}"));
    c.add("w", 0, 1);
    c.fill_units();
    build(&c, &Decoration::default(), &["id0", "id1", "w"])
}

/// Parallel `p, q: A → B` with inverse 2-cells `mu: p ⇒ q`, `muinv: q ⇒ p`;
/// `W = {idA, idB, p}` is not closed under invertible 2-cells.
pub fn f4() -> TwoCatDocument {
    let deco = Decoration::default()
        .le("p", "q")
        .le("q", "p")
        .name("p", "q", "1", "mu")
        .name("q", "p", "1", "muinv");
    build(&parallel_pair(), &deco, &["idA", "idB", "p"])
}

/// Parallel `p, q: A → B` with a single non-invertible `kappa: p ⇒ q`.
pub fn f5() -> TwoCatDocument {
    let deco = Decoration::default().le("p", "q").name("p", "q", "1", "kappa");
    build(&parallel_pair(), &deco, &["idA", "idB"])
}

/// The walking retraction `r∘s = idA`, `s∘r = e`, with `theta: e ⇒ idB`
/// invertible; `W` is the class of quasi-units `{idA, idB, e}`.
pub fn f6() -> TwoCatDocument {
    let deco = Decoration::default()
        .le("e", "idB")
        .le("idB", "e")
        .name("e", "idB", "1", "theta")
        .name("idB", "e", "1", "thetainv");
    build(&walking_retraction(), &deco, &["idA", "idB", "e"])
}

/// `f: A → B` with `tau: f ⇒ f`, `tau ⊙ tau = i_f`; `W` is the identities.
pub fn f7() -> TwoCatDocument {
    let mut c = Category::new(&["A", "B"], |o| format!("id{o}"));
    c.add("f", 0, 1);
    c.fill_units();
    let deco = Decoration {
        ideal: vec!["f".into()],
        labels: Labels::cyclic(2),
        ..Default::default()
    }
    .name("f", "f", "t1", "tau");
    build(&c, &deco, &["idA", "idB"])
}

/// One object whose identity carries the group `{i_id, tau}` of order two.
pub fn f8() -> TwoCatDocument {
    let deco = Decoration {
        ideal: vec!["id".into()],
        labels: Labels::cyclic(2),
        ..Default::default()
    }
    .name("id", "id", "t1", "tau");
    build(&Category::new(&["*"], |_| "id".into()), &deco, &["id"])
}

pub fn all_twocats() -> Vec<(&'static str, TwoCatDocument)> {
    vec![
        ("F1", f1()),
        ("F2", f2()),
        ("F3", f3()),
        ("F4", f4()),
        ("F5", f5()),
        ("F6", f6()),
        ("F7", f7()),
        ("F8", f8()),
    ]
}

/// Fixtures whose `W` passes the (BF) conditions.
pub fn bf_twocats() -> Vec<(&'static str, TwoCatDocument)> {
    all_twocats()
        .into_iter()
        .filter(|(name, _)| *name != "F4")
        .collect()
}

pub fn twocat_by_name(name: &str) -> Option<TwoCatDocument> {
    all_twocats()
        .into_iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, d)| d)
}

fn functor_doc(
    objects: &[(&str, &str)],
    morphisms: &[(&str, &str)],
    twocells: &[(&str, &str)],
) -> FunctorDocument {
    let map = |xs: &[(&str, &str)]| {
        xs.iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    };
    FunctorDocument {
        objects: map(objects),
        morphisms: map(morphisms),
        twocells: map(twocells),
    }
}

/// Identity 2-functor of F3.
pub fn identity_f3() -> FunctorDocument {
    functor_doc(
        &[("0", "0"), ("1", "1")],
        &[("id0", "id0"), ("id1", "id1"), ("w", "w")],
        &[("i_id0", "i_id0"), ("i_id1", "i_id1"), ("i_w", "i_w")],
    )
}

/// The unique 2-functor from F2 to F1.
pub fn collapse_f2_f1() -> FunctorDocument {
    functor_doc(
        &[("X", "*"), ("Y", "*")],
        &[("idX", "id"), ("idY", "id"), ("f", "id"), ("g", "id")],
        &[("i_idX", "i_id"), ("i_idY", "i_id"), ("i_f", "i_id"), ("i_g", "i_id")],
    )
}

/// The unique 2-functor from F3 to F1.
pub fn collapse_f3_f1() -> FunctorDocument {
    functor_doc(
        &[("0", "*"), ("1", "*")],
        &[("id0", "id"), ("id1", "id"), ("w", "id")],
        &[("i_id0", "i_id"), ("i_id1", "i_id"), ("i_w", "i_id")],
    )
}

// ---- random corpus ---------------------------------------------------------

pub const MAX_OBJECTS: usize = 4;
pub const MAX_MORS: usize = 8;
pub const MAX_CELLS: usize = 12;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub doc: TwoCatDocument,
}

fn random_preorder(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<bool>> {
    let mut le = vec![vec![false; n]; n];
    for (i, row) in le.iter_mut().enumerate() {
        row[i] = true;
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen_bool(0.3) {
                le[i][j] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][k] && le[k][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    le
}

fn random_base(rng: &mut ChaCha8Rng) -> Category {
    match rng.gen_range(0..8) {
        0 | 1 => {
            let n = rng.gen_range(1..=MAX_OBJECTS);
            Category::thin(n, &random_preorder(rng, n))
        }
        2 => {
            let monoids: [(&[&str], LabelOp); 6] = [
                (&["1", "t"], |a, b| (a + b) % 2),
                (&["1", "s", "s2"], |a, b| (a + b) % 3),
                (&["1", "z"], |a, b| a.max(b)),
                (&["1", "e"], |a, b| a.max(b)),
                (&["1", "a", "z"], |a, b| match (a, b) {
                    (0, x) | (x, 0) => x,
                    _ => 2,
                }),
                // left-zero band with a unit adjoined
                (&["1", "a", "b"], |a, b| if a == 0 { b } else { a }),
            ];
            let (names, mul) = monoids[rng.gen_range(0..monoids.len())];
            Category::monoid(names, mul)
        }
        3 => walking_iso(),
        4 => walking_retraction(),
        5 => {
            let n = rng.gen_range(2..=MAX_OBJECTS);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(0.35) {
                        edges.push((i, j));
                    }
                }
            }
            if edges.len() > 4 {
                edges.truncate(4);
            }
            Category::free_acyclic(n, &edges)
        }
        6 => parallel_pair(),
        _ => {
            let a = if rng.gen_bool(0.5) {
                walking_iso()
            } else {
                let n = rng.gen_range(1..=2);
                Category::thin(n, &random_preorder(rng, n))
            };
            let b = Category::thin(1, &[vec![true]]);
            Category::disjoint(&a, &b)
        }
    }
}

fn random_decoration(
    rng: &mut ChaCha8Rng,
    cat: &Category,
) -> (Vec<Vec<bool>>, Vec<bool>, Labels) {
    let n = cat.mors.len();
    let mut gens = Vec::new();
    for f in 0..n {
        for g in 0..n {
            if f != g
                && cat.mors[f].1 == cat.mors[g].1
                && cat.mors[f].2 == cat.mors[g].2
                && rng.gen_bool(0.3)
            {
                gens.push((f, g));
            }
        }
    }
    let le = preorder_closure(cat, &gens);
    let (ideal, labels) = if rng.gen_bool(0.35) {
        let seed = rng.gen_range(0..n);
        let labels = match rng.gen_range(0..4) {
            0 => Labels::cyclic(2),
            1 => Labels::cyclic(3),
            2 => Labels::with_zero(),
            _ => Labels::nilpotent(),
        };
        (ideal_closure(cat, &le, &[seed]), labels)
    } else {
        (vec![false; n], Labels::trivial())
    };
    (le, ideal, labels)
}

fn cell_count(cat: &Category, le: &[Vec<bool>], ideal: &[bool], labels: &Labels) -> usize {
    let n = cat.mors.len();
    (0..n)
        .flat_map(|f| (0..n).map(move |g| (f, g)))
        .filter(|&(f, g)| le[f][g])
        .map(|(f, _)| if ideal[f] { labels.names.len() } else { 1 })
        .sum()
}

fn random_class(rng: &mut ChaCha8Rng, c: &TwoCat) -> MorClass {
    match rng.gen_range(0..5) {
        0 => quasi_units(c),
        1 => internal_equivalences_class(c),
        2 => MorClass::all(c),
        _ => {
            let mut w = MorClass::identities(c);
            let mut extra: Vec<_> = c.mor_ids().filter(|&m| !c.is_identity(m)).collect();
            extra.shuffle(rng);
            let k = rng.gen_range(0..=extra.len().min(3));
            for &m in &extra[..k] {
                w.insert(m);
            }
            w.close_under_composition(c);
            w.close_under_invertible_cells(c);
            w
        }
    }
}

/// Deterministic corpus of `count` random 2-categories whose `W` passes the
/// (BF) conditions, within the size bounds above.
pub fn random_corpus(seed: u64, count: usize) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempt = 0usize;
    while out.len() < count {
        attempt += 1;
        let cat = random_base(&mut rng);
        if cat.objects.len() > MAX_OBJECTS || cat.mors.len() > MAX_MORS || !cat.is_total() {
            continue;
        }
        let (le, ideal, labels) = random_decoration(&mut rng, &cat);
        if cell_count(&cat, &le, &ideal, &labels) > MAX_CELLS {
            continue;
        }
        let doc = decorate(&cat, &le, &ideal, &labels, &BTreeMap::new(), &[]);
        let c = TwoCat::from_document(&doc).expect("decorated categories are total");
        let w = random_class(&mut rng, &c);
        if !check_bf(&c, &w).pass() {
            continue;
        }
        let mut doc = doc;
        doc.w = w.names(&c);
        out.push(CorpusEntry {
            name: format!("random-{seed}-{attempt}"),
            doc,
        });
    }
    out
}

/// The default corpus used by the test suites.
pub fn default_corpus() -> Vec<CorpusEntry> {
    random_corpus(0x5eed, 120)
}
