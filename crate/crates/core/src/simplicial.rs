//! Finite abstract simplicial complexes stored by facets, links and stars,
//! dominated vertices and strong collapses.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::certificate::{self, Category, Certificate, Choice, Reducible};
use crate::error::{Error, Result};
use crate::label::Label;

/// A simplex as a sorted list of vertex indices.
pub type Simplex = Vec<usize>;

#[derive(Clone)]
pub struct SimplicialComplex {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
    /// Sorted vertex lists, pairwise incomparable, in lexicographic order.
    facets: Vec<Simplex>,
    faces: OnceLock<Vec<Simplex>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimplicialComplex {{ {} }}", crate::text::complex_to_text(self).replace('\n', "; "))
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    // Both sorted.
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// Keeps the inclusion-maximal sets, sorted and deduplicated.
fn maximal(mut sets: Vec<Simplex>) -> Vec<Simplex> {
    for s in &mut sets {
        s.sort_unstable();
        s.dedup();
    }
    sets.retain(|s| !s.is_empty());
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut out: Vec<Simplex> = Vec::new();
    for s in sets {
        if !out.iter().any(|f| is_subset(&s, f)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

impl SimplicialComplex {
    /// Builds a complex from its facets, which must be nonempty and pairwise
    /// incomparable. Repeated vertices inside one facet are merged.
    pub fn from_facets(facets: Vec<Vec<Label>>) -> Result<SimplicialComplex> {
        if facets.iter().any(|f| f.is_empty()) {
            return Err(Error::Validation("empty facet".into()));
        }
        let k = SimplicialComplex::from_simplices(facets.clone())?;
        if k.facets.len() != facets.len() {
            let sets: Vec<BTreeSet<&Label>> = facets.iter().map(|f| f.iter().collect()).collect();
            for (i, a) in sets.iter().enumerate() {
                for (j, b) in sets.iter().enumerate() {
                    if i != j && a.is_subset(b) && (a != b || i < j) {
                        let show = |s: &BTreeSet<&Label>| s.iter().map(|l| l.as_str()).collect::<Vec<_>>().join(",");
                        return Err(Error::Validation(format!(
                            "facet {{{}}} is contained in facet {{{}}}",
                            show(a),
                            show(b)
                        )));
                    }
                }
            }
        }
        Ok(k)
    }

    /// The complex generated by arbitrary simplices (only maximal ones kept).
    pub fn from_simplices(simplices: Vec<Vec<Label>>) -> Result<SimplicialComplex> {
        let mut labels: Vec<Label> = simplices.iter().flatten().cloned().collect();
        labels.sort();
        labels.dedup();
        if let Some(bad) = labels.iter().find(|l| !Label::is_valid_token(l.as_str())) {
            return Err(Error::Validation(format!("invalid vertex id {bad:?}")));
        }
        let index: HashMap<Label, usize> = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let sets = simplices.iter().map(|s| s.iter().map(|l| index[l]).collect()).collect();
        Ok(SimplicialComplex { facets: maximal(sets), labels, index, faces: OnceLock::new() })
    }

    /// Unvalidated construction from index sets over `labels` (which may be
    /// in any order but must be distinct).
    pub(crate) fn from_index_sets(labels: Vec<Label>, sets: Vec<Simplex>) -> SimplicialComplex {
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&i, &j| labels[i].cmp(&labels[j]));
        let mut rank = vec![0; labels.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let sorted: Vec<Label> = order.iter().map(|&i| labels[i].clone()).collect();
        let index = sorted.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let sets = sets.into_iter().map(|s| s.into_iter().map(|v| rank[v]).collect()).collect();
        SimplicialComplex { facets: maximal(sets), labels: sorted, index, faces: OnceLock::new() }
    }

    /// The full simplex on the given vertices.
    pub fn simplex<S: AsRef<str>>(vertices: &[S]) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(vec![vertices.iter().map(|v| Label::new(v.as_ref())).collect()])
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &Label {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.index_of(label).ok_or_else(|| Error::UnknownElement(Label::new(label)))
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn dimension(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len() - 1).max()
    }

    /// All nonempty simplices, by size then lexicographically. Computed once.
    pub fn simplices(&self) -> &[Simplex] {
        self.faces.get_or_init(|| {
            let mut all: BTreeSet<(usize, Simplex)> = BTreeSet::new();
            for f in &self.facets {
                assert!(f.len() < 64, "facet with {} vertices is too large to enumerate", f.len());
                for mask in 1u64..(1u64 << f.len()) {
                    let s: Simplex = f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
                    all.insert((s.len(), s));
                }
            }
            all.into_iter().map(|(_, s)| s).collect()
        })
    }

    pub fn contains_simplex(&self, s: &[usize]) -> bool {
        let mut s = s.to_vec();
        s.sort_unstable();
        s.dedup();
        self.facets.iter().any(|f| is_subset(&s, f))
    }

    /// Simplex as its sorted vertex labels.
    pub fn simplex_labels(&self, s: &[usize]) -> Vec<Label> {
        s.iter().map(|&v| self.labels[v].clone()).collect()
    }

    /// Resolves labels to a sorted simplex; errors on unknown vertices.
    pub fn simplex_of<S: AsRef<str>>(&self, vertices: &[S]) -> Result<Simplex> {
        let mut s = vertices.iter().map(|v| self.vertex(v.as_ref())).collect::<Result<Simplex>>()?;
        s.sort_unstable();
        s.dedup();
        Ok(s)
    }

    /// Subcomplex induced on the vertices in `keep`.
    pub fn induced_mask(&self, keep: &FixedBitSet) -> SimplicialComplex {
        let sets: Vec<Simplex> =
            self.facets.iter().map(|f| f.iter().copied().filter(|&v| keep.contains(v)).collect()).collect();
        let kept: Vec<usize> = keep.ones().filter(|&v| v < self.len()).collect();
        let mut pos = vec![usize::MAX; self.len()];
        for (p, &v) in kept.iter().enumerate() {
            pos[v] = p;
        }
        let sets = sets.into_iter().map(|s: Simplex| s.into_iter().map(|v| pos[v]).collect()).collect();
        SimplicialComplex::from_index_sets(kept.iter().map(|&v| self.labels[v].clone()).collect(), sets)
    }

    pub fn induced<S: AsRef<str>>(&self, keep: &[S]) -> Result<SimplicialComplex> {
        Ok(self.induced_mask(&certificate::protect(self, keep)?))
    }

    /// `K - x`: every simplex not containing `x`.
    pub fn deletion(&self, x: &str) -> Result<SimplicialComplex> {
        let i = self.vertex(x)?;
        let mut keep = certificate::all_alive(self.len());
        keep.remove(i);
        Ok(self.induced_mask(&keep))
    }

    /// `lk(x)`: simplices `σ` with `x ∉ σ` and `σ ∪ {x} ∈ K`. The link of an
    /// isolated vertex has no nonempty simplex and is returned as the empty
    /// complex.
    pub fn link(&self, x: &str) -> Result<SimplicialComplex> {
        let i = self.vertex(x)?;
        let sets: Vec<Vec<Label>> = self
            .facets
            .iter()
            .filter(|f| f.contains(&i))
            .map(|f| f.iter().filter(|&&v| v != i).map(|&v| self.labels[v].clone()).collect())
            .collect();
        SimplicialComplex::from_simplices(sets)
    }

    /// Open star: every simplex containing `x`. Not closed under faces.
    pub fn open_star(&self, x: &str) -> Result<Vec<Vec<Label>>> {
        let i = self.vertex(x)?;
        Ok(self.simplices().iter().filter(|s| s.contains(&i)).map(|s| self.simplex_labels(s)).collect())
    }

    pub fn to_text(&self) -> String {
        crate::text::complex_to_text(self)
    }

    pub fn digest(&self) -> String {
        crate::text::digest(&self.to_text())
    }

    /// Whether `x`'s link in the subcomplex induced by `alive` is a cone with
    /// apex `a`: every facet through `x`, restricted to `alive`, together
    /// with `a` still lies in a simplex.
    fn dominates_idx(&self, alive: &FixedBitSet, a: usize, x: usize) -> bool {
        self.facets.iter().filter(|f| f.contains(&x)).all(|f| {
            let mut s: Simplex = f.iter().copied().filter(|&v| alive.contains(v)).collect();
            if !s.contains(&a) {
                s.push(a);
                s.sort_unstable();
                self.facets.iter().any(|g| is_subset(&s, g))
            } else {
                true
            }
        })
    }
}

impl Reducible for SimplicialComplex {
    fn category(&self) -> Category {
        Category::Complex
    }
    fn size(&self) -> usize {
        self.len()
    }
    fn label_at(&self, i: usize) -> &Label {
        &self.labels[i]
    }
    fn position(&self, label: &str) -> Option<usize> {
        self.index_of(label)
    }
    fn content_digest(&self) -> String {
        self.digest()
    }
    fn dominates_in(&self, alive: &FixedBitSet, a: usize, x: usize) -> bool {
        self.dominates_idx(alive, a, x)
    }
}

/// An apex shared by every facet (the smallest one), if any. A single vertex
/// is a cone over the empty complex; the empty complex is not a cone.
pub fn is_simplicial_cone(k: &SimplicialComplex) -> Option<Label> {
    let (first, rest) = k.facets.split_first()?;
    first.iter().find(|v| rest.iter().all(|f| f.contains(v))).map(|&v| k.labels[v].clone())
}

/// Pairs `(x, a)` where the link of `x` is a cone with apex `a`, ascending.
pub fn dominated_vertices(k: &SimplicialComplex) -> Vec<(Label, Label)> {
    let alive = certificate::all_alive(k.len());
    certificate::candidates(k, &alive, &FixedBitSet::with_capacity(k.len()))
        .into_iter()
        .map(|(x, a)| (k.labels[x].clone(), k.labels[a].clone()))
        .collect()
}

/// Whether `a` dominates `x` in `K`.
pub fn dominates(k: &SimplicialComplex, a: &str, x: &str) -> Result<bool> {
    let (ai, xi) = (k.vertex(a)?, k.vertex(x)?);
    if ai == xi {
        return Err(Error::SameElement(k.labels[ai].clone()));
    }
    Ok(k.dominates_idx(&certificate::all_alive(k.len()), ai, xi))
}

/// Deletes dominated vertices (smallest first) until none remain.
pub fn strong_collapse_core(k: &SimplicialComplex) -> (SimplicialComplex, Certificate) {
    let (alive, steps) = certificate::greedy(k, &FixedBitSet::with_capacity(k.len()), Choice::Smallest);
    (k.induced_mask(&alive), certificate::make_certificate(k, steps))
}

pub fn strong_collapse_core_by(
    k: &SimplicialComplex,
    mut choose: impl FnMut(&[(usize, usize)]) -> usize,
) -> (SimplicialComplex, Certificate) {
    let (alive, steps) = certificate::greedy(k, &FixedBitSet::with_capacity(k.len()), Choice::Custom(&mut choose));
    (k.induced_mask(&alive), certificate::make_certificate(k, steps))
}

/// Greedy strong collapse onto `L`, which must be the full subcomplex of `K`
/// on its own vertex set. `None` means no strong collapse exists.
pub fn strong_collapse_onto(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<Option<Certificate>> {
    let keep = certificate::protect(k, l.labels())?;
    let induced = k.induced_mask(&keep);
    if &induced != l {
        return Err(Error::Input("target is not the subcomplex induced on its vertices".into()));
    }
    let (alive, steps) = certificate::greedy(k, &keep, Choice::Smallest);
    Ok((alive == keep).then(|| certificate::make_certificate(k, steps)))
}

/// One step of a face-graph dismantling: the simplex removed and the simplex
/// dominating it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceStep {
    pub simplex: Vec<Label>,
    pub witness: Vec<Label>,
}

/// For `x` dominated by `a`, the order in which the simplices containing `x`
/// can be deleted from the face graph of `K`, with their witnesses.
///
/// Simplices avoiding `a` go first, largest first, each dominated by
/// `σ ∪ {a}`. Then the simplices containing both `x` and `a`, smallest
/// first, each dominated by `σ ∖ {x}`. Ties are broken lexicographically.
pub fn star_deletion_order(k: &SimplicialComplex, x: &str, a: &str) -> Result<Vec<FaceStep>> {
    if !dominates(k, a, x)? {
        return Err(Error::NotDominated { deleted: Label::new(x), witness: Label::new(a) });
    }
    let (xi, ai) = (k.vertex(x)?, k.vertex(a)?);
    let star: Vec<&Simplex> = k.simplices().iter().filter(|s| s.contains(&xi)).collect();
    let mut without_a: Vec<&Simplex> = star.iter().copied().filter(|s| !s.contains(&ai)).collect();
    let mut with_a: Vec<&Simplex> = star.iter().copied().filter(|s| s.contains(&ai)).collect();
    without_a.sort_by(|s, t| t.len().cmp(&s.len()).then_with(|| s.cmp(t)));
    with_a.sort_by(|s, t| s.len().cmp(&t.len()).then_with(|| s.cmp(t)));

    let mut out = Vec::with_capacity(star.len());
    for s in without_a {
        let mut w = s.clone();
        w.push(ai);
        w.sort_unstable();
        out.push(FaceStep { simplex: k.simplex_labels(s), witness: k.simplex_labels(&w) });
    }
    for s in with_a {
        let w: Simplex = s.iter().copied().filter(|&v| v != xi).collect();
        out.push(FaceStep { simplex: k.simplex_labels(s), witness: k.simplex_labels(&w) });
    }
    Ok(out)
}

pub fn replay_certificate(k: &SimplicialComplex, cert: &Certificate) -> Result<SimplicialComplex> {
    Ok(k.induced_mask(&certificate::replay(k, cert)?))
}

pub fn verify_certificate(k: &SimplicialComplex, cert: &Certificate) -> Result<bool> {
    certificate::verify(k, cert)
}

pub fn certificate_from_order(k: &SimplicialComplex, order: &[Label]) -> Result<Certificate> {
    certificate::from_order(k, order)
}
