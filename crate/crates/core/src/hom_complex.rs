//! Cells of the Hom complex `Hom(G, H)` as indexing functions, their
//! correspondence with cliques of `hom(G, H)`, and the dismantlings relating
//! the clique poset, the face poset and folds of `G` or `H`.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::functors;
use crate::graph::{self, Graph};
use crate::hom::{self, json_str, HomGraph, Morphism};
use crate::label::Label;
use crate::poset::{self, MonotoneMap, Poset};

/// A cell of `Hom(G, H)`: a nonempty set of targets `η(x)` for every vertex
/// `x` of `G`, with `η(x) × η(y) ⊆ E(H)` whenever `x ∼ y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexingFunction {
    source: String,
    target: String,
    /// Sorted vertex indices of `H`, one set per vertex of `G`.
    values: Vec<Vec<usize>>,
}

fn satisfies_edge_condition(g: &Graph, h: &Graph, values: &[Vec<usize>]) -> bool {
    values.len() == g.len()
        && values.iter().all(|s| !s.is_empty())
        && g.edges().all(|(x, y)| values[x].iter().all(|&p| values[y].iter().all(|&q| h.adjacent(p, q))))
}

impl IndexingFunction {
    pub fn new(g: &Graph, h: &Graph, mut values: Vec<Vec<usize>>) -> Result<IndexingFunction> {
        for s in &mut values {
            s.sort_unstable();
            s.dedup();
        }
        if values.iter().flatten().any(|&w| w >= h.len()) || !satisfies_edge_condition(g, h, &values) {
            return Err(Error::Input("not an indexing function".into()));
        }
        Ok(IndexingFunction { source: g.digest(), target: h.digest(), values })
    }

    /// Value sets in source vertex order, by target label.
    pub fn from_labels<S: AsRef<str>>(g: &Graph, h: &Graph, values: &[Vec<S>]) -> Result<IndexingFunction> {
        let values = values
            .iter()
            .map(|s| s.iter().map(|w| h.vertex(w.as_ref())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        IndexingFunction::new(g, h, values)
    }

    pub fn values(&self) -> &[Vec<usize>] {
        &self.values
    }

    /// `Σ (|η(x)| - 1)`, the dimension of the cell.
    pub fn dimension(&self) -> usize {
        self.values.iter().map(|s| s.len() - 1).sum()
    }

    /// Pointwise inclusion.
    pub fn is_face_of(&self, other: &IndexingFunction) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a.iter().all(|v| b.contains(v)))
    }

    /// Canonical name, e.g. `{"0":["a","b"],"1":["c"],"2":["a","b"]}`.
    pub fn name(&self, g: &Graph, h: &Graph) -> Label {
        let body: Vec<String> = self
            .values
            .iter()
            .enumerate()
            .map(|(v, s)| {
                let vals: Vec<String> = s.iter().map(|&w| json_str(h.label(w))).collect();
                format!("{}:[{}]", json_str(g.label(v)), vals.join(","))
            })
            .collect();
        Label::new(format!("{{{}}}", body.join(",")))
    }

    fn check(&self, g: &Graph, h: &Graph) -> Result<()> {
        if self.source != g.digest() || self.target != h.digest() {
            return Err(Error::Input("indexing function belongs to a different pair of graphs".into()));
        }
        Ok(())
    }
}

/// Pointwise union of pairwise adjacent morphisms.
pub fn phi(g: &Graph, h: &Graph, clique: &[Morphism]) -> Result<IndexingFunction> {
    if clique.is_empty() {
        return Err(Error::Input("empty set of morphisms".into()));
    }
    for (i, f) in clique.iter().enumerate() {
        for f2 in &clique[i + 1..] {
            if !hom::morphisms_adjacent(g, h, f, f2)? {
                return Err(Error::Input("morphisms are not pairwise adjacent".into()));
            }
        }
    }
    Ok(phi_unchecked(g, h, clique.iter().map(|m| m.images())))
}

fn phi_unchecked<'a>(g: &Graph, h: &Graph, images: impl Iterator<Item = &'a [usize]>) -> IndexingFunction {
    let mut values = vec![BTreeSet::new(); g.len()];
    for im in images {
        for (v, &w) in im.iter().enumerate() {
            values[v].insert(w);
        }
    }
    IndexingFunction {
        source: g.digest(),
        target: h.digest(),
        values: values.into_iter().map(|s| s.into_iter().collect()).collect(),
    }
}

/// Every selection `x ↦ y_x ∈ η(x)`, in lexicographic order. Each is a
/// morphism and together they are pairwise adjacent.
pub fn psi(g: &Graph, h: &Graph, eta: &IndexingFunction) -> Result<Vec<Morphism>> {
    eta.check(g, h)?;
    if !satisfies_edge_condition(g, h, &eta.values) {
        return Err(Error::Input("not an indexing function".into()));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(g.len());
    selections(&eta.values, &mut current, &mut |images| out.push(Morphism::new_unchecked(g, h, images.to_vec())));
    Ok(out)
}

fn selections(values: &[Vec<usize>], current: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    let v = current.len();
    if v == values.len() {
        emit(current);
        return;
    }
    for &w in &values[v] {
        current.push(w);
        selections(values, current, emit);
        current.pop();
    }
}

/// All cells of `Hom(G, H)`, as `Φ` of the cliques of `hom(G, H)`, ordered
/// by dimension and then by value sets.
pub fn hom_cells(g: &Graph, h: &Graph, budget: &Budget) -> Result<Vec<IndexingFunction>> {
    let hg = hom::hom_graph(g, h, budget)?;
    cells_of(g, h, &hg, budget)
}

fn cells_of(g: &Graph, h: &Graph, hg: &HomGraph, budget: &Budget) -> Result<Vec<IndexingFunction>> {
    let cliques = crate::cliques::all_cliques(&hg.graph, budget.max_cliques)?;
    let set: BTreeSet<(usize, IndexingFunction)> = cliques
        .iter()
        .map(|c| {
            let eta = phi_unchecked(g, h, c.iter().map(|&i| hg.morphisms[i].images()));
            (eta.dimension(), eta)
        })
        .collect();
    Ok(set.into_iter().map(|(_, e)| e).collect())
}

fn cell_poset(g: &Graph, h: &Graph, cells: &[IndexingFunction]) -> Poset {
    let names = cells.iter().map(|c| c.name(g, h)).collect();
    Poset::from_fn(names, |i, j| i != j && cells[i].is_face_of(&cells[j]))
}

/// The face poset of `Hom(G, H)`: cells under pointwise inclusion.
pub fn hom_face_poset(g: &Graph, h: &Graph, budget: &Budget) -> Result<Poset> {
    Ok(cell_poset(g, h, &hom_cells(g, h, budget)?))
}

/// The face graph of `Hom(G, H)`, the comparability graph of its face poset.
pub fn hom_face_graph(g: &Graph, h: &Graph, budget: &Budget) -> Result<Graph> {
    Ok(functors::comp(&hom_face_poset(g, h, budget)?))
}

/// The clique poset of `hom(G, H)` with the clique (as morphism indices)
/// behind every element.
pub struct HomCliques {
    pub hom: HomGraph,
    pub poset: Poset,
    /// `cliques[i]` is element `i` of `poset`.
    pub cliques: Vec<Vec<usize>>,
}

pub fn hom_cliques(g: &Graph, h: &Graph, budget: &Budget) -> Result<HomCliques> {
    let hom = hom::hom_graph(g, h, budget)?;
    let (poset, cliques) = functors::clique_label_sets(&hom.graph, budget)?;
    Ok(HomCliques { hom, poset, cliques })
}

impl HomCliques {
    /// `Φ` of element `i`.
    pub fn cell(&self, g: &Graph, h: &Graph, i: usize) -> IndexingFunction {
        phi_unchecked(g, h, self.cliques[i].iter().map(|&m| self.hom.morphisms[m].images()))
    }

    /// The element `Ψ(Φ(c))` for element `c`.
    pub fn psi_phi(&self, g: &Graph, h: &Graph, i: usize) -> usize {
        let cell = self.cell(g, h, i);
        let mut members: Vec<usize> = Vec::new();
        selections(&cell.values, &mut Vec::new(), &mut |images| {
            members.push(self.hom.morphisms.iter().position(|m| m.images() == images).expect("selection is a morphism"));
        });
        let label = Label::set(members.iter().map(|&m| self.hom.graph.label(m)));
        self.poset.index_of(&label).expect("selections form a clique")
    }

    /// Renames each element of a subposet by the name of its cell. Fails if
    /// two elements have the same cell.
    pub fn as_cells(&self, g: &Graph, h: &Graph, sub: &Poset) -> Result<Poset> {
        sub.relabel(|l| self.cell(g, h, self.poset.index_of(l).expect("element of the clique poset")).name(g, h))
    }
}

/// Dismantles `C(hom(G, H))` onto the image of `Ψ`, which is isomorphic to
/// the face poset of `Hom(G, H)`, using the fixed points of `Ψ ∘ Φ ≥ 1`.
pub fn clique_to_cell_dismantle(g: &Graph, h: &Graph, budget: &Budget) -> Result<Certificate> {
    let hc = hom_cliques(g, h, budget)?;
    let f = MonotoneMap::from_fn(&hc.poset, |i| hc.psi_phi(g, h, i))?;
    poset::fixpoint_dismantle(&hc.poset, &f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Fold a vertex of `G`.
    Source,
    /// Fold a vertex of `H`.
    Target,
}

/// Folding `x` onto `a` in `G` (source side) or `H` (target side) gives a
/// dismantling of the face graph of `Hom(G, H)` onto a copy of the face graph
/// of the smaller Hom complex.
///
/// The copy is embedded by `η' ↦ η' ∘ r_{x,a}` on the source side and by
/// reading value sets inside `H` on the target side. The embedding is checked
/// to be injective onto an induced subgraph before dismantling.
pub fn fold_induced_hom_dismantle(g: &Graph, h: &Graph, side: Side, x: &str, a: &str, budget: &Budget) -> Result<Certificate> {
    let folded = match side {
        Side::Source => g,
        Side::Target => h,
    };
    if !graph::dominates(folded, a, x)? {
        return Err(Error::NotDominated { deleted: Label::new(x), witness: Label::new(a) });
    }
    let smaller = folded.remove(x)?;
    let (g2, h2) = match side {
        Side::Source => (&smaller, h),
        Side::Target => (g, &smaller),
    };
    let small_cells = hom_cells(g2, h2, budget)?;
    let embedded: Vec<IndexingFunction> = small_cells
        .iter()
        .map(|c| {
            let values = match side {
                Side::Source => (0..g.len())
                    .map(|v| {
                        let u = if g.label(v).as_str() == x { a } else { g.label(v).as_str() };
                        c.values[smaller.index_of(u).expect("vertex survives")].clone()
                    })
                    .collect(),
                Side::Target => c
                    .values
                    .iter()
                    .map(|s| s.iter().map(|&w| h.index_of(smaller.label(w)).expect("vertex exists")).collect())
                    .collect(),
            };
            IndexingFunction::new(g, h, values)
        })
        .collect::<Result<_>>()
        .map_err(|_| Error::Internal("embedded cell is not a cell".into()))?;

    let big = hom_face_graph(g, h, budget)?;
    let names: Vec<Label> = embedded.iter().map(|c| c.name(g, h)).collect();
    let mut keep = FixedBitSet::with_capacity(big.len());
    for n in &names {
        let i = big.index_of(n).ok_or_else(|| Error::Internal(format!("embedded cell {n} is missing")))?;
        keep.insert(i);
    }
    if keep.count_ones(..) != names.len() {
        return Err(Error::Internal("embedding is not injective".into()));
    }
    let small_graph = functors::comp(&cell_poset(g2, h2, &small_cells));
    let small_names: Vec<Label> = small_cells.iter().map(|c| c.name(g2, h2)).collect();
    let image = small_graph.relabel(|l| names[small_names.iter().position(|n| n == l).expect("cell name")].clone())?;
    if big.induced_mask(&keep) != image {
        return Err(Error::Internal("embedding is not onto an induced subgraph".into()));
    }
    graph::dismantles_onto(&big, &names)?
        .ok_or_else(|| Error::Internal("greedy dismantling did not reach the embedded subgraph".into()))
}
