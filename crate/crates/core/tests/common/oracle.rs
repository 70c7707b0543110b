//! Brute-force reference answers computed from a document's string tables,
//! without going through `TwoCat`.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use bifrac::doc::TwoCatDocument;

pub type Names = BTreeSet<String>;

pub struct Oracle {
    mors: BTreeMap<String, (String, String)>,
    ids: BTreeMap<String, String>,
    comp: HashMap<(String, String), String>,
    cells: BTreeMap<String, (String, String)>,
    id2: BTreeMap<String, String>,
    vcomp: HashMap<(String, String), String>,
}

impl Oracle {
    pub fn new(doc: &TwoCatDocument) -> Oracle {
        Oracle {
            mors: doc
                .morphisms
                .iter()
                .map(|m| (m.id.clone(), (m.src.clone(), m.dst.clone())))
                .collect(),
            ids: doc.identities.clone(),
            comp: doc
                .compose
                .iter()
                .map(|e| ((e.g.clone(), e.f.clone()), e.result.clone()))
                .collect(),
            cells: doc
                .twocells
                .iter()
                .map(|m| (m.id.clone(), (m.src.clone(), m.dst.clone())))
                .collect(),
            id2: doc.identity2.clone(),
            vcomp: doc
                .vcomp
                .iter()
                .map(|e| ((e.a.clone(), e.b.clone()), e.result.clone()))
                .collect(),
        }
    }

    pub fn mors(&self) -> impl Iterator<Item = &String> {
        self.mors.keys()
    }

    /// `g ∘ f`.
    pub fn comp(&self, g: &str, f: &str) -> Option<&String> {
        self.comp.get(&(g.to_string(), f.to_string()))
    }

    fn invertible(&self, a: &str) -> bool {
        let (s, t) = &self.cells[a];
        self.cells.iter().any(|(b, (bs, bt))| {
            bs == t
                && bt == s
                && self.vcomp.get(&(a.to_string(), b.clone())) == Some(&self.id2[s])
                && self.vcomp.get(&(b.clone(), a.to_string())) == Some(&self.id2[t])
        })
    }

    fn isomorphic(&self, f: &str, g: &str) -> bool {
        self.cells
            .iter()
            .any(|(a, (s, t))| s == f && t == g && self.invertible(a))
    }

    pub fn equivalences(&self) -> Names {
        let mut out = Names::new();
        for (e, (a, b)) in &self.mors {
            let found = self.mors.iter().any(|(eb, (s, t))| {
                s == b
                    && t == a
                    && self.isomorphic(&self.ids[a], &self.comp[&(eb.clone(), e.clone())])
                    && self.isomorphic(&self.comp[&(e.clone(), eb.clone())], &self.ids[b])
            });
            if found {
                out.insert(e.clone());
            }
        }
        out
    }

    pub fn quasi_units(&self) -> Names {
        self.mors
            .iter()
            .filter(|(f, (a, b))| a == b && self.isomorphic(f, &self.ids[a]))
            .map(|(f, _)| f.clone())
            .collect()
    }

    /// Straight from the definition: `f ∘ g ∈ W` and `g ∘ h ∈ W`.
    pub fn saturate(&self, w: &Names) -> Names {
        let mut out = Names::new();
        for (f, (a, _)) in &self.mors {
            'g: for (g, (_, gb)) in &self.mors {
                if gb != a || !w.contains(&self.comp[&(f.clone(), g.clone())]) {
                    continue;
                }
                let (ga, _) = &self.mors[g];
                for (h, (_, hb)) in &self.mors {
                    if hb == ga && w.contains(&self.comp[&(g.clone(), h.clone())]) {
                        out.insert(f.clone());
                        break 'g;
                    }
                }
            }
        }
        out
    }
}
