//! Dismantling certificates and the category-independent reduction engine.
//!
//! A certificate is a dismantling sequence together with the element that
//! witnessed each deletion. The engine below is shared by graphs, posets
//! (strict and weak rules) and simplicial complexes: each category only
//! supplies its domination test on a residual sub-object, given as a bitset of
//! still-present elements.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::Label;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Category {
    /// Folding of graph vertices.
    Graph,
    /// Deletion of poset elements whose strict up-set has a least element or
    /// whose strict down-set has a greatest element.
    Poset,
    /// Deletion of weakly dominated poset elements (double-cone condition).
    PosetWeak,
    /// Elementary strong collapses of a simplicial complex.
    Complex,
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Graph => "graph",
            Category::Poset => "poset",
            Category::PosetWeak => "poset-weak",
            Category::Complex => "complex",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub deleted: Label,
    pub witness: Label,
}

impl Step {
    pub fn new(deleted: impl Into<Label>, witness: impl Into<Label>) -> Self {
        Step { deleted: deleted.into(), witness: witness.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub category: Category,
    /// Digest of the object the steps are replayed against.
    pub start_hash: String,
    pub steps: Vec<Step>,
}

impl Certificate {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn deleted(&self) -> impl Iterator<Item = &Label> {
        self.steps.iter().map(|s| &s.deleted)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Input(format!("certificate JSON: {e}")))
    }
}

/// An object whose elements can be deleted one at a time under a domination
/// rule.
pub(crate) trait Reducible {
    fn category(&self) -> Category;
    fn size(&self) -> usize;
    fn label_at(&self, i: usize) -> &Label;
    fn position(&self, label: &str) -> Option<usize>;
    fn content_digest(&self) -> String;

    /// Whether `a` dominates `x` in the sub-object induced by `alive`.
    /// Both are alive and distinct.
    fn dominates_in(&self, alive: &FixedBitSet, a: usize, x: usize) -> bool;

    /// Witnesses for `x` in preference order.
    fn witnesses_in(&self, alive: &FixedBitSet, x: usize) -> Vec<usize> {
        alive.ones().filter(|&a| a != x && self.dominates_in(alive, a, x)).collect()
    }
}

pub(crate) fn all_alive(n: usize) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    b.insert_range(..);
    b
}

pub(crate) type Chooser<'a> = &'a mut dyn FnMut(&[(usize, usize)]) -> usize;

/// How the greedy loop picks the next `(deleted, witness)` pair.
pub(crate) enum Choice<'a> {
    /// Smallest deletable element, first witness.
    Smallest,
    /// Caller picks an index into the full candidate list.
    Custom(Chooser<'a>),
}

/// All `(x, a)` with `x` alive and unprotected and `a` a witness for `x`.
pub(crate) fn candidates<R: Reducible + ?Sized>(
    r: &R,
    alive: &FixedBitSet,
    protected: &FixedBitSet,
) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in alive.ones() {
        if protected.contains(x) {
            continue;
        }
        for a in r.witnesses_in(alive, x) {
            out.push((x, a));
        }
    }
    out
}

/// Deletes dominated unprotected elements until none remain.
pub(crate) fn greedy<R: Reducible + ?Sized>(
    r: &R,
    protected: &FixedBitSet,
    mut choice: Choice<'_>,
) -> (FixedBitSet, Vec<Step>) {
    let mut alive = all_alive(r.size());
    let mut steps = Vec::new();
    loop {
        let pick = match &mut choice {
            Choice::Smallest => alive
                .ones()
                .filter(|&x| !protected.contains(x))
                .find_map(|x| r.witnesses_in(&alive, x).first().map(|&a| (x, a))),
            Choice::Custom(f) => {
                let c = candidates(r, &alive, protected);
                if c.is_empty() {
                    None
                } else {
                    let i = f(&c);
                    Some(c[i.min(c.len() - 1)])
                }
            }
        };
        let Some((x, a)) = pick else { break };
        alive.remove(x);
        steps.push(Step { deleted: r.label_at(x).clone(), witness: r.label_at(a).clone() });
    }
    (alive, steps)
}

pub(crate) fn make_certificate<R: Reducible + ?Sized>(r: &R, steps: Vec<Step>) -> Certificate {
    Certificate { category: r.category(), start_hash: r.content_digest(), steps }
}

/// Replays `cert`, returning the surviving elements.
pub(crate) fn replay<R: Reducible + ?Sized>(r: &R, cert: &Certificate) -> Result<FixedBitSet> {
    if cert.category != r.category() {
        return Err(Error::WrongCategory {
            expected: r.category().to_string(),
            found: cert.category.to_string(),
        });
    }
    let digest = r.content_digest();
    if cert.start_hash != digest {
        return Err(Error::StaleCertificate { expected: digest, found: cert.start_hash.clone() });
    }
    let mut alive = all_alive(r.size());
    for (i, step) in cert.steps.iter().enumerate() {
        let illegal = |reason: String| Error::IllegalStep { step: i, reason };
        let x = r
            .position(step.deleted.as_str())
            .ok_or_else(|| illegal(format!("unknown element `{}`", step.deleted)))?;
        let a = r
            .position(step.witness.as_str())
            .ok_or_else(|| illegal(format!("unknown witness `{}`", step.witness)))?;
        if x == a {
            return Err(illegal(format!("`{}` cannot witness its own deletion", step.deleted)));
        }
        if !alive.contains(x) {
            return Err(illegal(format!("`{}` was already deleted", step.deleted)));
        }
        if !alive.contains(a) {
            return Err(illegal(format!("witness `{}` was already deleted", step.witness)));
        }
        if !r.dominates_in(&alive, a, x) {
            return Err(illegal(format!("`{}` is not dominated by `{}`", step.deleted, step.witness)));
        }
        alive.remove(x);
    }
    Ok(alive)
}

/// `Ok(true)` iff every step is legal; stale or mismatched certificates are
/// errors rather than `false`.
pub(crate) fn verify<R: Reducible + ?Sized>(r: &R, cert: &Certificate) -> Result<bool> {
    match replay(r, cert) {
        Ok(_) => Ok(true),
        Err(Error::IllegalStep { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Builds a certificate for a bare deletion order by choosing, at each step,
/// the first available witness.
pub(crate) fn from_order<R: Reducible + ?Sized>(r: &R, order: &[Label]) -> Result<Certificate> {
    let mut alive = all_alive(r.size());
    let mut steps = Vec::with_capacity(order.len());
    for (i, l) in order.iter().enumerate() {
        let x = r.position(l.as_str()).ok_or_else(|| Error::UnknownElement(l.clone()))?;
        if !alive.contains(x) {
            return Err(Error::IllegalStep { step: i, reason: format!("`{l}` was already deleted") });
        }
        let a = *r.witnesses_in(&alive, x).first().ok_or_else(|| Error::IllegalStep {
            step: i,
            reason: format!("`{l}` is not dominated in the residual object"),
        })?;
        alive.remove(x);
        steps.push(Step { deleted: l.clone(), witness: r.label_at(a).clone() });
    }
    Ok(make_certificate(r, steps))
}

/// Resolves `labels` to a protected-set bitset.
pub(crate) fn protect<R: Reducible + ?Sized, S: AsRef<str>>(r: &R, labels: &[S]) -> Result<FixedBitSet> {
    let mut keep = FixedBitSet::with_capacity(r.size());
    for l in labels {
        let i = r.position(l.as_ref()).ok_or_else(|| Error::UnknownElement(Label::new(l.as_ref())))?;
        keep.insert(i);
    }
    Ok(keep)
}
