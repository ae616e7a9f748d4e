//! Finite posets, dismantlable (beat) and weakly dismantlable elements, cores,
//! and dismantling onto the fixed points of a map comparable to the identity.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::certificate::{self, Category, Certificate, Choice, Reducible};
use crate::error::{Error, Result};
use crate::label::Label;

/// A finite poset stored by its strict order, closed under transitivity.
#[derive(Clone)]
pub struct Poset {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
    /// `up[x]` = elements strictly greater than `x`.
    up: Vec<FixedBitSet>,
    /// `down[x]` = elements strictly smaller than `x`.
    down: Vec<FixedBitSet>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.up == other.up
    }
}

impl Eq for Poset {}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset {{ {} }}", crate::text::poset_to_text(self).replace('\n', "; "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// The strict up-set has a least element.
    Up,
    /// The strict down-set has a greatest element.
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Strict,
    Weak,
}

impl Poset {
    /// Builds the poset generated by `covers` (`(x, y)` means `x < y`).
    /// Elements may repeat; a cycle is a validation error.
    pub fn from_covers(mut elements: Vec<Label>, covers: &[(Label, Label)]) -> Result<Poset> {
        elements.extend(covers.iter().flat_map(|(x, y)| [x.clone(), y.clone()]));
        elements.sort();
        elements.dedup();
        if let Some(bad) = elements.iter().find(|l| !Label::is_valid_token(l.as_str())) {
            return Err(Error::Validation(format!("invalid element id {bad:?}")));
        }
        let mut p = Poset::discrete(elements);
        for (x, y) in covers {
            let (i, j) = (p.index[x], p.index[y]);
            p.up[i].insert(j);
        }
        // Warshall closure on the up-sets.
        let n = p.len();
        for k in 0..n {
            let above_k = p.up[k].clone();
            for i in 0..n {
                if p.up[i].contains(k) {
                    p.up[i].union_with(&above_k);
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| p.up[i].contains(i)) {
            return Err(Error::Validation(format!("covers contain a cycle through `{}`", p.labels[i])));
        }
        p.rebuild_down();
        Ok(p)
    }

    /// Builds a poset from a strict-order predicate over positions in
    /// `labels`, validating irreflexivity and transitivity.
    pub fn from_relation(labels: Vec<Label>, less: impl FnMut(usize, usize) -> bool) -> Result<Poset> {
        let p = Poset::from_fn(labels, less);
        let n = p.len();
        for i in 0..n {
            if p.up[i].contains(i) {
                return Err(Error::Validation(format!("`{}` < `{}`", p.labels[i], p.labels[i])));
            }
            for j in p.up[i].ones() {
                if !p.up[j].is_subset(&p.up[i]) {
                    return Err(Error::Validation(format!("relation is not transitive at `{}` < `{}`", p.labels[i], p.labels[j])));
                }
            }
        }
        Ok(p)
    }

    /// Unvalidated construction; `less` must already be a strict order.
    pub(crate) fn from_fn(labels: Vec<Label>, mut less: impl FnMut(usize, usize) -> bool) -> Poset {
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&i, &j| labels[i].cmp(&labels[j]));
        let mut p = Poset::discrete(order.iter().map(|&i| labels[i].clone()).collect());
        for (a, &i) in order.iter().enumerate() {
            for (b, &j) in order.iter().enumerate() {
                if less(i, j) {
                    p.up[a].insert(b);
                }
            }
        }
        p.rebuild_down();
        p
    }

    fn discrete(labels: Vec<Label>) -> Poset {
        let n = labels.len();
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Poset {
            labels,
            index,
            up: vec![FixedBitSet::with_capacity(n); n],
            down: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    fn rebuild_down(&mut self) {
        let n = self.len();
        self.down = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in self.up[i].ones() {
                self.down[j].insert(i);
            }
        }
    }

    /// Chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Poset {
        Poset::from_fn((0..n).map(|i| Label::new(i.to_string())).collect(), |i, j| i < j)
    }

    /// `n` pairwise incomparable elements.
    pub fn antichain(n: usize) -> Poset {
        Poset::from_fn((0..n).map(|i| Label::new(i.to_string())).collect(), |_, _| false)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn element(&self, label: &str) -> Result<usize> {
        self.index_of(label).ok_or_else(|| Error::UnknownElement(Label::new(label)))
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.less(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.less(y, x)
    }

    /// Elements strictly above `x`.
    pub fn above(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    /// Elements strictly below `x`.
    pub fn below(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    /// Cover pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.up[x].ones() {
                if !self.up[x].ones().any(|z| self.up[z].contains(y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Minimal elements (the atoms, `P_{<p} = ∅`).
    pub fn atoms(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.down[x].is_clear()).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].is_clear()).collect()
    }

    pub fn induced_mask(&self, keep: &FixedBitSet) -> Poset {
        let kept: Vec<usize> = keep.ones().filter(|&v| v < self.len()).collect();
        let mut p = Poset::discrete(kept.iter().map(|&v| self.labels[v].clone()).collect());
        for (a, &i) in kept.iter().enumerate() {
            for (b, &j) in kept.iter().enumerate() {
                if self.up[i].contains(j) {
                    p.up[a].insert(b);
                }
            }
        }
        p.rebuild_down();
        p
    }

    pub fn induced<S: AsRef<str>>(&self, keep: &[S]) -> Result<Poset> {
        Ok(self.induced_mask(&certificate::protect(&StrictRule(self), keep)?))
    }

    /// `P ∖ {x}`.
    pub fn remove(&self, x: &str) -> Result<Poset> {
        let i = self.element(x)?;
        let mut keep = certificate::all_alive(self.len());
        keep.remove(i);
        Ok(self.induced_mask(&keep))
    }

    /// Applies an injective relabelling.
    pub fn relabel(&self, f: impl Fn(&Label) -> Label) -> Result<Poset> {
        let labels: Vec<Label> = self.labels.iter().map(f).collect();
        let mut seen = labels.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != labels.len() {
            return Err(Error::Input("relabelling is not injective".into()));
        }
        Ok(Poset::from_fn(labels, |i, j| self.less(i, j)))
    }

    pub fn to_text(&self) -> String {
        crate::text::poset_to_text(self)
    }

    pub fn digest(&self) -> String {
        crate::text::digest(&self.to_text())
    }

    fn up_witness(&self, alive: &FixedBitSet, x: usize) -> Option<usize> {
        let mut above = self.up[x].clone();
        above.intersect_with(alive);
        above.ones().find(|&a| above.ones().all(|y| y == a || self.up[a].contains(y)))
    }

    fn down_witness(&self, alive: &FixedBitSet, x: usize) -> Option<usize> {
        let mut below = self.down[x].clone();
        below.intersect_with(alive);
        below.ones().find(|&a| below.ones().all(|y| y == a || self.down[a].contains(y)))
    }

    fn weakly_dominates(&self, alive: &FixedBitSet, a: usize, x: usize) -> bool {
        a != x
            && self.comparable(a, x)
            && alive
                .ones()
                .filter(|&y| y != x && y != a && self.comparable(x, y))
                .all(|y| self.comparable(a, y))
    }
}

pub(crate) struct StrictRule<'a>(pub(crate) &'a Poset);
pub(crate) struct WeakRule<'a>(pub(crate) &'a Poset);

impl Reducible for StrictRule<'_> {
    fn category(&self) -> Category {
        Category::Poset
    }
    fn size(&self) -> usize {
        self.0.len()
    }
    fn label_at(&self, i: usize) -> &Label {
        self.0.label(i)
    }
    fn position(&self, label: &str) -> Option<usize> {
        self.0.index_of(label)
    }
    fn content_digest(&self) -> String {
        self.0.digest()
    }
    fn dominates_in(&self, alive: &FixedBitSet, a: usize, x: usize) -> bool {
        self.0.up_witness(alive, x) == Some(a) || self.0.down_witness(alive, x) == Some(a)
    }
    fn witnesses_in(&self, alive: &FixedBitSet, x: usize) -> Vec<usize> {
        let mut w: Vec<usize> = self.0.up_witness(alive, x).into_iter().collect();
        w.extend(self.0.down_witness(alive, x).filter(|d| !w.contains(d)));
        w
    }
}

impl Reducible for WeakRule<'_> {
    fn category(&self) -> Category {
        Category::PosetWeak
    }
    fn size(&self) -> usize {
        self.0.len()
    }
    fn label_at(&self, i: usize) -> &Label {
        self.0.label(i)
    }
    fn position(&self, label: &str) -> Option<usize> {
        self.0.index_of(label)
    }
    fn content_digest(&self) -> String {
        self.0.digest()
    }
    fn dominates_in(&self, alive: &FixedBitSet, a: usize, x: usize) -> bool {
        self.0.weakly_dominates(alive, a, x)
    }
}

/// An order-preserving self-map of a poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneMap {
    source: String,
    images: Vec<usize>,
}

impl MonotoneMap {
    /// Validates that `f` (on positions) is order preserving.
    pub fn from_fn(p: &Poset, f: impl Fn(usize) -> usize) -> Result<MonotoneMap> {
        let images: Vec<usize> = (0..p.len()).map(f).collect();
        if let Some(&bad) = images.iter().find(|&&y| y >= p.len()) {
            return Err(Error::Input(format!("image index {bad} is out of range")));
        }
        for x in 0..p.len() {
            for y in p.above(x).ones() {
                if !p.leq(images[x], images[y]) {
                    return Err(Error::Input(format!(
                        "map is not monotone: `{}` < `{}` but f(`{}`) ≰ f(`{}`)",
                        p.label(x),
                        p.label(y),
                        p.label(x),
                        p.label(y)
                    )));
                }
            }
        }
        Ok(MonotoneMap { source: p.digest(), images })
    }

    /// From `(element, image)` label pairs; unlisted elements are fixed.
    pub fn from_pairs(p: &Poset, pairs: &[(&str, &str)]) -> Result<MonotoneMap> {
        let mut images: Vec<usize> = (0..p.len()).collect();
        for (x, y) in pairs {
            images[p.element(x)?] = p.element(y)?;
        }
        MonotoneMap::from_fn(p, |i| images[i])
    }

    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

/// Dismantlable elements with their witnesses. An element dismantlable in
/// both directions is listed with its up witness first.
pub fn dismantlable_elements(p: &Poset) -> Vec<(Label, Label, Direction)> {
    let alive = certificate::all_alive(p.len());
    let mut out = Vec::new();
    for x in 0..p.len() {
        if let Some(a) = p.up_witness(&alive, x) {
            out.push((p.label(x).clone(), p.label(a).clone(), Direction::Up));
        }
        if let Some(a) = p.down_witness(&alive, x) {
            out.push((p.label(x).clone(), p.label(a).clone(), Direction::Down));
        }
    }
    out
}

/// Pairs `(x, a)` where `x` is weakly dominated by `a`: `a` is comparable to
/// `x` and to everything comparable to `x`.
pub fn weakly_dismantlable_elements(p: &Poset) -> Vec<(Label, Label)> {
    let alive = certificate::all_alive(p.len());
    certificate::candidates(&WeakRule(p), &alive, &FixedBitSet::with_capacity(p.len()))
        .into_iter()
        .map(|(x, a)| (p.label(x).clone(), p.label(a).clone()))
        .collect()
}

/// Greedy deletion of (weakly) dismantlable elements until none remain.
pub fn poset_core(p: &Poset, mode: Mode) -> (Poset, Certificate) {
    core_with(p, mode, Choice::Smallest)
}

pub fn poset_core_by(p: &Poset, mode: Mode, mut choose: impl FnMut(&[(usize, usize)]) -> usize) -> (Poset, Certificate) {
    core_with(p, mode, Choice::Custom(&mut choose))
}

fn core_with(p: &Poset, mode: Mode, choice: Choice<'_>) -> (Poset, Certificate) {
    let none = FixedBitSet::with_capacity(p.len());
    let (alive, steps, cert_of): (_, _, Box<dyn Fn(Vec<_>) -> Certificate>) = match mode {
        Mode::Strict => {
            let (a, s) = certificate::greedy(&StrictRule(p), &none, choice);
            (a, s, Box::new(|s| certificate::make_certificate(&StrictRule(p), s)))
        }
        Mode::Weak => {
            let (a, s) = certificate::greedy(&WeakRule(p), &none, choice);
            (a, s, Box::new(|s| certificate::make_certificate(&WeakRule(p), s)))
        }
    };
    (p.induced_mask(&alive), cert_of(steps))
}

/// Greedy weak dismantling onto the subposet on `keep`. Complete: weak
/// domination in `P` is exactly graph domination in its comparability graph,
/// where greedy folding is confluent.
pub fn weak_dismantles_onto<S: AsRef<str>>(p: &Poset, keep: &[S]) -> Result<Option<Certificate>> {
    let rule = WeakRule(p);
    let protected = certificate::protect(&rule, keep)?;
    let (alive, steps) = certificate::greedy(&rule, &protected, Choice::Smallest);
    Ok((alive == protected).then(|| certificate::make_certificate(&rule, steps)))
}

/// Dismantles `P` onto `Fix(f)` for a monotone `f` with `f ≤ 1` or `f ≥ 1`.
///
/// For `f ≤ 1`, a minimal non-fixed `x` has `f(x)` as the greatest element
/// below it; `x` is deleted and `f` is adjusted to send every `y` with
/// `f(y) = x` to `f(x)`. The case `f ≥ 1` is dual. The residual of the
/// returned certificate is exactly `Fix(f)`.
pub fn fixpoint_dismantle(p: &Poset, f: &MonotoneMap) -> Result<Certificate> {
    if f.source != p.digest() || f.images.len() != p.len() {
        return Err(Error::Input("monotone map belongs to a different poset".into()));
    }
    let mut f = MonotoneMap::from_fn(p, |x| f.images[x])?.images;
    let below = (0..p.len()).all(|x| p.leq(f[x], x));
    let above = (0..p.len()).all(|x| p.leq(x, f[x]));
    if !below && !above {
        return Err(Error::Precondition("map is neither ≤ nor ≥ the identity".into()));
    }
    let rule = StrictRule(p);
    let mut alive = certificate::all_alive(p.len());
    let mut steps = Vec::new();
    loop {
        let moving: Vec<usize> = alive.ones().filter(|&x| f[x] != x).collect();
        let extreme = moving.iter().copied().find(|&x| {
            moving.iter().all(|&y| if below { !p.less(y, x) } else { !p.less(x, y) })
        });
        let Some(x) = extreme else { break };
        let a = f[x];
        if !alive.contains(a) || !rule.dominates_in(&alive, a, x) {
            return Err(Error::Internal(format!("`{}` is not dominated by f(x) = `{}`", p.label(x), p.label(a))));
        }
        alive.remove(x);
        steps.push(certificate::Step { deleted: p.label(x).clone(), witness: p.label(a).clone() });
        for y in alive.ones() {
            if f[y] == x {
                f[y] = a;
            }
        }
    }
    Ok(certificate::make_certificate(&rule, steps))
}

fn rule_for<'a>(p: &'a Poset, cert: &Certificate) -> Result<Box<dyn Reducible + 'a>> {
    match cert.category {
        Category::Poset => Ok(Box::new(StrictRule(p))),
        Category::PosetWeak => Ok(Box::new(WeakRule(p))),
        other => Err(Error::WrongCategory { expected: "poset".into(), found: other.to_string() }),
    }
}

/// Replays a strict or weak poset certificate, returning the residual.
pub fn replay_certificate(p: &Poset, cert: &Certificate) -> Result<Poset> {
    let rule = rule_for(p, cert)?;
    Ok(p.induced_mask(&certificate::replay(rule.as_ref(), cert)?))
}

pub fn verify_certificate(p: &Poset, cert: &Certificate) -> Result<bool> {
    let rule = rule_for(p, cert)?;
    certificate::verify(rule.as_ref(), cert)
}

pub fn certificate_from_order(p: &Poset, mode: Mode, order: &[Label]) -> Result<Certificate> {
    match mode {
        Mode::Strict => certificate::from_order(&StrictRule(p), order),
        Mode::Weak => certificate::from_order(&WeakRule(p), order),
    }
}
