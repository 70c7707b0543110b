//! Hom-sets of 2-cells between two spans: every valid representative and the
//! classes of the equivalence they generate.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::{CellRep, Span};
use crate::saturation::MorClass;
use crate::twocat::{Cell, Mor, TwoCat};

/// One step between equivalent representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    /// Precompose both legs with `p` and whisker `α`, `β` by `i_p`.
    Refine { p: Mor },
    /// Replace the legs along invertible `ε1: v¹ ⇒ ṽ¹`, `ε2: v² ⇒ ṽ²`.
    Modify { eps1: Cell, eps2: Cell },
}

/// A step of a witness chain; `inverse` marks a step taken backwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub from: CellRep,
    pub to: CellRep,
    #[serde(flatten)]
    pub via: Move,
    pub inverse: bool,
}

#[derive(Debug)]
pub struct Hom {
    pub source: Span,
    pub target: Span,
    reps: Vec<CellRep>,
    index: HashMap<CellRep, usize>,
    edges: Vec<Vec<(usize, Move, bool)>>,
    /// Class id of each representative: the index of its least member.
    class: Vec<usize>,
    classes: Vec<usize>,
}

pub(crate) fn is_valid(c: &TwoCat, w: &MorClass, s1: &Span, s2: &Span, r: &CellRep) -> bool {
    let a3 = r.apex;
    if c.src(r.v1) != a3 || c.src(r.v2) != a3 || c.dst(r.v1) != s1.apex || c.dst(r.v2) != s2.apex
    {
        return false;
    }
    let (w1v1, w2v2) = (c.compose(s1.w, r.v1), c.compose(s2.w, r.v2));
    let (f1v1, f2v2) = (c.compose(s1.f, r.v1), c.compose(s2.f, r.v2));
    let (Some(w1v1), Some(w2v2), Some(f1v1), Some(f2v2)) = (w1v1, w2v2, f1v1, f2v2) else {
        return false;
    };
    w.contains(w1v1)
        && c.cell_src(r.alpha) == w1v1
        && c.cell_dst(r.alpha) == w2v2
        && c.is_invertible(r.alpha)
        && c.cell_src(r.beta) == f1v1
        && c.cell_dst(r.beta) == f2v2
}

impl Hom {
    pub(crate) fn build(c: &TwoCat, w: &MorClass, source: Span, target: Span) -> Hom {
        let (s1, s2) = (source, target);
        let mut reps = Vec::new();
        for apex in c.obj_ids() {
            for &v1 in c.hom(apex, s1.apex) {
                let w1v1 = c.compose(s1.w, v1).unwrap();
                if !w.contains(w1v1) {
                    continue;
                }
                let f1v1 = c.compose(s1.f, v1).unwrap();
                for &v2 in c.hom(apex, s2.apex) {
                    let w2v2 = c.compose(s2.w, v2).unwrap();
                    let f2v2 = c.compose(s2.f, v2).unwrap();
                    for alpha in c.invertible_between(w1v1, w2v2) {
                        for &beta in c.cells_between(f1v1, f2v2) {
                            reps.push(CellRep {
                                apex,
                                v1,
                                v2,
                                alpha,
                                beta,
                            });
                        }
                    }
                }
            }
        }
        let index: HashMap<CellRep, usize> =
            reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let mut edges = vec![Vec::new(); reps.len()];
        for (i, r) in reps.iter().enumerate() {
            for e in c.obj_ids() {
                for &p in c.hom(e, r.apex) {
                    if let Some(to) = refine(c, w, &s1, r, p) {
                        let j = index[&to];
                        edges[i].push((j, Move::Refine { p }, false));
                        edges[j].push((i, Move::Refine { p }, true));
                    }
                }
            }
            let (a1, a2) = (c.dst(r.v1), c.dst(r.v2));
            for &t1 in c.hom(r.apex, a1) {
                for eps1 in c.invertible_between(r.v1, t1) {
                    for &t2 in c.hom(r.apex, a2) {
                        for eps2 in c.invertible_between(r.v2, t2) {
                            if eps1 == c.id2(r.v1) && eps2 == c.id2(r.v2) {
                                continue;
                            }
                            if let Some(to) = modify(c, &s1, &s2, r, eps1, eps2) {
                                if let Some(&j) = index.get(&to) {
                                    let m = Move::Modify { eps1, eps2 };
                                    edges[i].push((j, m, false));
                                    edges[j].push((i, m, true));
                                }
                            }
                        }
                    }
                }
            }
        }
        // components; class id = least index, reps are already sorted
        let mut class = vec![usize::MAX; reps.len()];
        let mut classes = Vec::new();
        for start in 0..reps.len() {
            if class[start] != usize::MAX {
                continue;
            }
            classes.push(start);
            class[start] = start;
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for &(j, _, _) in &edges[i] {
                    if class[j] == usize::MAX {
                        class[j] = start;
                        queue.push_back(j);
                    }
                }
            }
        }
        Hom {
            source,
            target,
            reps,
            index,
            edges,
            class,
            classes,
        }
    }

    /// All valid representatives, in canonical order.
    pub fn reps(&self) -> &[CellRep] {
        &self.reps
    }

    /// Canonical representatives, one per class.
    pub fn classes(&self) -> impl Iterator<Item = CellRep> + '_ {
        self.classes.iter().map(|&i| self.reps[i])
    }

    pub fn n_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn contains(&self, r: &CellRep) -> bool {
        self.index.contains_key(r)
    }

    /// The canonical representative of `r`'s class.
    pub fn canonical(&self, r: &CellRep) -> Option<CellRep> {
        self.index.get(r).map(|&i| self.reps[self.class[i]])
    }

    /// Members of the class of `r`.
    pub fn class_members(&self, r: &CellRep) -> Vec<CellRep> {
        let Some(&i) = self.index.get(r) else {
            return Vec::new();
        };
        let k = self.class[i];
        (0..self.reps.len())
            .filter(|&j| self.class[j] == k)
            .map(|j| self.reps[j])
            .collect()
    }

    /// Shortest chain of moves from `a` to `b`, if they are equivalent.
    pub fn chain(&self, a: &CellRep, b: &CellRep) -> Option<Vec<Step>> {
        let (&i, &j) = (self.index.get(a)?, self.index.get(b)?);
        if self.class[i] != self.class[j] {
            return None;
        }
        let mut prev: Vec<Option<(usize, Move, bool)>> = vec![None; self.reps.len()];
        let mut seen = vec![false; self.reps.len()];
        seen[i] = true;
        let mut queue = VecDeque::from([i]);
        while let Some(x) = queue.pop_front() {
            if x == j {
                break;
            }
            for &(y, m, inv) in &self.edges[x] {
                if !seen[y] {
                    seen[y] = true;
                    prev[y] = Some((x, m, inv));
                    queue.push_back(y);
                }
            }
        }
        let mut steps = Vec::new();
        let mut x = j;
        while x != i {
            let (p, m, inv) = prev[x].expect("connected");
            steps.push(Step {
                from: self.reps[p],
                to: self.reps[x],
                via: m,
                inverse: inv,
            });
            x = p;
        }
        steps.reverse();
        Some(steps)
    }

    /// Longest shortest chain from a canonical representative to a member
    /// of its class.
    pub fn max_chain_length(&self) -> usize {
        self.classes
            .iter()
            .map(|&k| {
                let mut dist = vec![usize::MAX; self.reps.len()];
                dist[k] = 0;
                let mut queue = VecDeque::from([k]);
                let mut far = 0;
                while let Some(x) = queue.pop_front() {
                    far = far.max(dist[x]);
                    for &(y, _, _) in &self.edges[x] {
                        if dist[y] == usize::MAX {
                            dist[y] = dist[x] + 1;
                            queue.push_back(y);
                        }
                    }
                }
                far
            })
            .max()
            .unwrap_or(0)
    }
}

pub(crate) fn refine(c: &TwoCat, w: &MorClass, s1: &Span, r: &CellRep, p: Mor) -> Option<CellRep> {
    let v1 = c.compose(r.v1, p)?;
    if !w.contains(c.compose(s1.w, v1)?) {
        return None;
    }
    Some(CellRep {
        apex: c.src(p),
        v1,
        v2: c.compose(r.v2, p)?,
        alpha: c.hcomp(r.alpha, c.id2(p))?,
        beta: c.hcomp(r.beta, c.id2(p))?,
    })
}

fn modify(
    c: &TwoCat,
    s1: &Span,
    s2: &Span,
    r: &CellRep,
    eps1: Cell,
    eps2: Cell,
) -> Option<CellRep> {
    let e1inv = c.inverse(eps1)?;
    let alpha = c
        .vc(&[
            c.whisker_left(s2.w, eps2).ok()?,
            r.alpha,
            c.whisker_left(s1.w, e1inv).ok()?,
        ])
        .ok()?;
    let beta = c
        .vc(&[
            c.whisker_left(s2.f, eps2).ok()?,
            r.beta,
            c.whisker_left(s1.f, e1inv).ok()?,
        ])
        .ok()?;
    Some(CellRep {
        apex: r.apex,
        v1: c.cell_dst(eps1),
        v2: c.cell_dst(eps2),
        alpha,
        beta,
    })
}
