//! Finite undirected graphs with per-vertex loops, folding, dismantling and
//! d-homotopy equivalence.
//!
//! A vertex `x` is dominated by `a != x` when `N(x) ⊆ N(a)` for the open
//! neighbourhoods (a loop puts a vertex in its own neighbourhood). Deleting a
//! dominated vertex is a fold; a graph with no dominated vertex is stiff.

use std::collections::{BTreeMap, HashMap};

use fixedbitset::FixedBitSet;

use crate::budget::{Budget, Meter};
use crate::certificate::{self, Category, Certificate, Choice, Reducible};
use crate::error::{Error, Result};
use crate::label::Label;

#[derive(Clone)]
pub struct Graph {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
    /// Symmetric; `adj[v][v]` is the loop flag.
    adj: Vec<FixedBitSet>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph {{ {} }}", crate::text::graph_to_text(self).replace('\n', "; "))
    }
}

#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    loops: BTreeMap<Label, bool>,
    edges: Vec<(Label, Label)>,
}

impl GraphBuilder {
    pub fn vertex(&mut self, v: impl Into<Label>) -> &mut Self {
        self.loops.entry(v.into()).or_insert(false);
        self
    }

    pub fn looped_vertex(&mut self, v: impl Into<Label>) -> &mut Self {
        self.loops.insert(v.into(), true);
        self
    }

    /// Adds `a ~ b`, declaring both endpoints. `edge(x, x)` is a loop.
    pub fn edge(&mut self, a: impl Into<Label>, b: impl Into<Label>) -> &mut Self {
        let (a, b) = (a.into(), b.into());
        if a == b {
            return self.looped_vertex(a);
        }
        self.vertex(a.clone()).vertex(b.clone());
        self.edges.push((a, b));
        self
    }

    pub fn build(&self) -> Result<Graph> {
        let labels: Vec<Label> = self.loops.keys().cloned().collect();
        if let Some(bad) = labels.iter().find(|l| !Label::is_valid_token(l.as_str())) {
            return Err(Error::Validation(format!("invalid vertex id {bad:?}")));
        }
        let mut g = Graph::empty_on(labels);
        for (l, &looped) in &self.loops {
            if looped {
                let i = g.index[l];
                g.adj[i].insert(i);
            }
        }
        for (a, b) in &self.edges {
            let (i, j) = (g.index[a], g.index[b]);
            g.adj[i].insert(j);
            g.adj[j].insert(i);
        }
        Ok(g)
    }
}

impl Graph {
    pub fn builder() -> GraphBuilder {
        GraphBuilder::default()
    }

    /// Edgeless graph on the given labels, which must be sorted and distinct.
    pub(crate) fn empty_on(labels: Vec<Label>) -> Graph {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let n = labels.len();
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Graph { labels, index, adj: vec![FixedBitSet::with_capacity(n); n] }
    }

    /// Builds a graph on arbitrary labels from an adjacency predicate over
    /// positions in `labels`. Labels must be distinct.
    pub(crate) fn from_fn(labels: Vec<Label>, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&i, &j| labels[i].cmp(&labels[j]));
        let sorted: Vec<Label> = order.iter().map(|&i| labels[i].clone()).collect();
        let mut g = Graph::empty_on(sorted);
        for (p, &i) in order.iter().enumerate() {
            for (q, &j) in order.iter().enumerate().skip(p) {
                if adjacent(i, j) {
                    g.adj[p].insert(q);
                    g.adj[q].insert(p);
                }
            }
        }
        g
    }

    /// `Pn`, `Cn` or `Kn`, optionally suffixed with `°` (or `o`) for the
    /// reflexive version. Vertices are `0..n`.
    pub fn named(name: &str) -> Result<Graph> {
        let bad = || Error::Input(format!("unknown graph name `{name}` (expected Pn, Cn or Kn, optionally with °)"));
        let (body, reflexive) = match name.strip_suffix('°').or_else(|| name.strip_suffix('o')) {
            Some(b) => (b, true),
            None => (name, false),
        };
        let mut chars = body.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let mut b = Graph::builder();
        for i in 0..n {
            b.vertex(i.to_string());
        }
        match kind {
            'P' if n >= 1 => {
                for i in 1..n {
                    b.edge((i - 1).to_string(), i.to_string());
                }
            }
            'C' if n >= 3 => {
                for i in 0..n {
                    b.edge(i.to_string(), ((i + 1) % n).to_string());
                }
            }
            'K' if n >= 1 => {
                for i in 0..n {
                    for j in i + 1..n {
                        b.edge(i.to_string(), j.to_string());
                    }
                }
            }
            _ => return Err(bad()),
        }
        let g = b.build()?;
        Ok(if reflexive { reflexive_closure(&g) } else { g })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Vertex labels in ascending order; positions are vertex indices.
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

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.adj[v].contains(v)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.len()).all(|v| self.has_loop(v))
    }

    /// Open neighbourhood as a bitset over vertex indices.
    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    /// Edges `(u, v)` with `u <= v`, loops included.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |u| self.adj[u].ones().filter(move |&v| v >= u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn loop_count(&self) -> usize {
        (0..self.len()).filter(|&v| self.has_loop(v)).count()
    }

    /// Open neighbourhood `N(x)`; contains `x` iff `x` is looped.
    pub fn open_neighborhood(&self, x: &str) -> Result<Vec<Label>> {
        let i = self.vertex(x)?;
        Ok(self.adj[i].ones().map(|j| self.labels[j].clone()).collect())
    }

    /// Closed neighbourhood `N[x] = N(x) ∪ {x}`.
    pub fn closed_neighborhood(&self, x: &str) -> Result<Vec<Label>> {
        let i = self.vertex(x)?;
        let mut s = self.adj[i].clone();
        s.insert(i);
        Ok(s.ones().map(|j| self.labels[j].clone()).collect())
    }

    /// Subgraph induced by the vertices in `keep`. Labels are preserved.
    pub fn induced_mask(&self, keep: &FixedBitSet) -> Graph {
        let kept: Vec<usize> = keep.ones().filter(|&v| v < self.len()).collect();
        let mut g = Graph::empty_on(kept.iter().map(|&v| self.labels[v].clone()).collect());
        for (p, &u) in kept.iter().enumerate() {
            for (q, &v) in kept.iter().enumerate() {
                if self.adj[u].contains(v) {
                    g.adj[p].insert(q);
                }
            }
        }
        g
    }

    pub fn induced<S: AsRef<str>>(&self, keep: &[S]) -> Result<Graph> {
        Ok(self.induced_mask(&certificate::protect(self, keep)?))
    }

    /// `G - x`.
    pub fn remove(&self, x: &str) -> Result<Graph> {
        let i = self.vertex(x)?;
        let mut keep = certificate::all_alive(self.len());
        keep.remove(i);
        Ok(self.induced_mask(&keep))
    }

    /// Applies an injective relabelling.
    pub fn relabel(&self, f: impl Fn(&Label) -> Label) -> Result<Graph> {
        let labels: Vec<Label> = self.labels.iter().map(f).collect();
        let mut seen = labels.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != labels.len() {
            return Err(Error::Input("relabelling is not injective".into()));
        }
        Ok(Graph::from_fn(labels, |i, j| self.adj[i].contains(j)))
    }

    pub fn to_text(&self) -> String {
        crate::text::graph_to_text(self)
    }

    /// SHA-256 of the canonical text form.
    pub fn digest(&self) -> String {
        crate::text::digest(&self.to_text())
    }

    fn dominates_idx(&self, alive: &FixedBitSet, a: usize, x: usize) -> bool {
        self.adj[x].ones().filter(|&y| alive.contains(y)).all(|y| self.adj[a].contains(y))
    }
}

impl Reducible for Graph {
    fn category(&self) -> Category {
        Category::Graph
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

/// `N(x) ⊆ N(a)`. Inclusion is non-strict, so a loopless isolated vertex is
/// dominated by every other vertex.
pub fn dominates(g: &Graph, a: &str, x: &str) -> Result<bool> {
    let (ai, xi) = (g.vertex(a)?, g.vertex(x)?);
    if ai == xi {
        return Err(Error::SameElement(g.labels[ai].clone()));
    }
    Ok(g.dominates_idx(&certificate::all_alive(g.len()), ai, xi))
}

/// All `(x, a)` with `a` dominating `x`, ascending in `x` then `a`.
/// Empty iff the graph is stiff.
pub fn find_dominated(g: &Graph) -> Vec<(Label, Label)> {
    let alive = certificate::all_alive(g.len());
    certificate::candidates(g, &alive, &FixedBitSet::with_capacity(g.len()))
        .into_iter()
        .map(|(x, a)| (g.labels[x].clone(), g.labels[a].clone()))
        .collect()
}

pub fn is_stiff(g: &Graph) -> bool {
    let alive = certificate::all_alive(g.len());
    (0..g.len()).all(|x| g.witnesses_in(&alive, x).is_empty())
}

/// Folds `x` onto `a`, returning `G - x`.
pub fn fold(g: &Graph, x: &str, a: &str) -> Result<Graph> {
    if !dominates(g, a, x)? {
        return Err(Error::NotDominated { deleted: Label::new(x), witness: Label::new(a) });
    }
    g.remove(x)
}

/// Folds the smallest dominated vertex (smallest witness first) until the
/// graph is stiff.
pub fn dismantle_core(g: &Graph) -> (Graph, Certificate) {
    dismantle_core_with(g, Choice::Smallest)
}

/// Like [`dismantle_core`], but `choose` picks an index into the list of
/// currently available `(deleted, witness)` pairs.
pub fn dismantle_core_by(g: &Graph, mut choose: impl FnMut(&[(usize, usize)]) -> usize) -> (Graph, Certificate) {
    dismantle_core_with(g, Choice::Custom(&mut choose))
}

fn dismantle_core_with(g: &Graph, choice: Choice<'_>) -> (Graph, Certificate) {
    let (alive, steps) = certificate::greedy(g, &FixedBitSet::with_capacity(g.len()), choice);
    (g.induced_mask(&alive), certificate::make_certificate(g, steps))
}

/// Greedily folds vertices outside `keep`; returns a certificate iff the
/// graph dismantles onto the subgraph induced by `keep`.
///
/// A greedy dead end is a genuine "no": if `G` dismantles onto `H` and `x`
/// outside `H` is dominated, then `G - x` still dismantles onto `H`.
pub fn dismantles_onto<S: AsRef<str>>(g: &Graph, keep: &[S]) -> Result<Option<Certificate>> {
    dismantles_onto_with(g, keep, Choice::Smallest)
}

pub fn dismantles_onto_by<S: AsRef<str>>(
    g: &Graph,
    keep: &[S],
    mut choose: impl FnMut(&[(usize, usize)]) -> usize,
) -> Result<Option<Certificate>> {
    dismantles_onto_with(g, keep, Choice::Custom(&mut choose))
}

fn dismantles_onto_with<S: AsRef<str>>(g: &Graph, keep: &[S], choice: Choice<'_>) -> Result<Option<Certificate>> {
    let protected = certificate::protect(g, keep)?;
    let (alive, steps) = certificate::greedy(g, &protected, choice);
    Ok((alive == protected).then(|| certificate::make_certificate(g, steps)))
}

pub fn reflexive_closure(g: &Graph) -> Graph {
    let mut h = g.clone();
    for v in 0..h.len() {
        h.adj[v].insert(v);
    }
    h
}

/// Replays a graph certificate, returning the residual graph.
pub fn replay_certificate(g: &Graph, cert: &Certificate) -> Result<Graph> {
    Ok(g.induced_mask(&certificate::replay(g, cert)?))
}

/// `Ok(true)` iff every step folds a dominated vertex of the residual graph.
/// A certificate issued for a different graph is a stale-certificate error.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> Result<bool> {
    certificate::verify(g, cert)
}

/// Certificate for a bare deletion order, choosing the first legal witness at
/// each step.
pub fn certificate_from_order(g: &Graph, order: &[Label]) -> Result<Certificate> {
    certificate::from_order(g, order)
}

/// Backtracking isomorphism test. Returns `iso[v]`, the vertex of `h`
/// matched with vertex `v` of `g`.
pub fn are_isomorphic(g: &Graph, h: &Graph, budget: &Budget) -> Result<Option<Vec<usize>>> {
    let n = g.len();
    if n != h.len() || g.loop_count() != h.loop_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let (ig, ih) = (invariants(g), invariants(h));
    let mut sg = ig.clone();
    let mut sh = ih.clone();
    sg.sort();
    sh.sort();
    if sg != sh {
        return Ok(None);
    }

    // Place each next vertex to maximise adjacency to already placed ones.
    let mut order = Vec::with_capacity(n);
    let mut placed = FixedBitSet::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                let links = g.adj[v].ones().filter(|&u| u != v && placed.contains(u)).count();
                let rarity = ig.iter().filter(|i| **i == ig[v]).count();
                (links, std::cmp::Reverse(rarity), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex exists");
        placed.insert(next);
        order.push(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = FixedBitSet::with_capacity(n);
    let mut meter = Meter::new(budget.max_iso_nodes, "isomorphism search nodes");
    if extend_iso(g, h, &ig, &ih, &order, 0, &mut map, &mut used, &mut meter)? {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

type Invariant = (bool, usize, Vec<usize>);

fn invariants(g: &Graph) -> Vec<Invariant> {
    let deg = |v: usize| g.adj[v].ones().filter(|&u| u != v).count();
    (0..g.len())
        .map(|v| {
            let mut nd: Vec<usize> = g.adj[v].ones().filter(|&u| u != v).map(deg).collect();
            nd.sort_unstable();
            (g.has_loop(v), deg(v), nd)
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn extend_iso(
    g: &Graph,
    h: &Graph,
    ig: &[Invariant],
    ih: &[Invariant],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut FixedBitSet,
    meter: &mut Meter,
) -> Result<bool> {
    let Some(&v) = order.get(depth) else { return Ok(true) };
    for w in 0..h.len() {
        if used.contains(w) || ig[v] != ih[w] {
            continue;
        }
        meter.tick()?;
        let consistent = order[..depth].iter().all(|&u| g.adjacent(u, v) == h.adjacent(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used.insert(w);
        if extend_iso(g, h, ig, ih, order, depth + 1, map, used, meter)? {
            return Ok(true);
        }
        used.remove(w);
        map[v] = usize::MAX;
    }
    Ok(false)
}

/// Same d-homotopy type iff the stiff cores are isomorphic.
pub fn same_d_homotopy_type(g: &Graph, h: &Graph, budget: &Budget) -> Result<bool> {
    let (cg, _) = dismantle_core(g);
    let (ch, _) = dismantle_core(h);
    Ok(are_isomorphic(&cg, &ch, budget)?.is_some())
}
