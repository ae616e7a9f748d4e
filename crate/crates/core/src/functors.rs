//! Functors between reflexive graphs, posets and simplicial complexes,
//! barycentric subdivision in each category, and the transport of
//! dismantling certificates along them.
//!
//! Derived elements (cliques, chains, simplices) are labelled by their
//! member set, e.g. `{0,1}`, so that composites reached by different routes
//! can be compared for equality.

use fixedbitset::FixedBitSet;

use crate::budget::Budget;
use crate::certificate::{self, Category, Certificate, Reducible, Step};
use crate::cliques;
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::label::Label;
use crate::poset::{self, MonotoneMap, Poset};
use crate::simplicial::{self, SimplicialComplex};

/// An object of any of the three categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Graph(Graph),
    Poset(Poset),
    Complex(SimplicialComplex),
}

impl Object {
    pub fn category_name(&self) -> &'static str {
        match self {
            Object::Graph(_) => "graph",
            Object::Poset(_) => "poset",
            Object::Complex(_) => "complex",
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Object::Graph(g) => g.to_text(),
            Object::Poset(p) => p.to_text(),
            Object::Complex(k) => k.to_text(),
        }
    }

    pub fn labels(&self) -> &[Label] {
        match self {
            Object::Graph(g) => g.labels(),
            Object::Poset(p) => p.labels(),
            Object::Complex(k) => k.labels(),
        }
    }
}

/// A functor image together with the elements each new element is built
/// from.
#[derive(Debug, Clone)]
pub struct Image {
    pub object: Object,
    pub members: Vec<(Label, Vec<Label>)>,
}

fn set_labels(labels: &[Label], sets: &[Vec<usize>]) -> Vec<Label> {
    sets.iter().map(|s| Label::set(s.iter().map(|&v| &labels[v]))).collect()
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

fn inclusion_poset(labels: Vec<Label>, sets: &[Vec<usize>]) -> Poset {
    Poset::from_fn(labels, |i, j| sets[i].len() < sets[j].len() && is_subset(&sets[i], &sets[j]))
}

fn comparability_graph(labels: Vec<Label>, sets: &[Vec<usize>]) -> Graph {
    Graph::from_fn(labels, |i, j| is_subset(&sets[i], &sets[j]) || is_subset(&sets[j], &sets[i]))
}

/// Comparability graph: reflexive, `x ∼ y` iff `x ≤ y` or `y ≤ x`.
pub fn comp(p: &Poset) -> Graph {
    Graph::from_fn(p.labels().to_vec(), |i, j| p.comparable(i, j))
}

/// Nonempty complete subgraphs (loops ignored) ordered by inclusion.
pub fn clique_poset(g: &Graph, budget: &Budget) -> Result<Poset> {
    let cl = cliques::all_cliques(g, budget.max_cliques)?;
    Ok(inclusion_poset(set_labels(g.labels(), &cl), &cl))
}

/// The complex whose simplices are the complete subgraphs.
pub fn clique_complex(g: &Graph, budget: &Budget) -> Result<SimplicialComplex> {
    let facets = cliques::maximal_cliques(g, budget.max_cliques)?;
    Ok(SimplicialComplex::from_index_sets(g.labels().to_vec(), facets))
}

/// Reflexive graph on the simplices, adjacent when one contains the other.
pub fn face_graph(k: &SimplicialComplex) -> Graph {
    let s = k.simplices();
    comparability_graph(set_labels(k.labels(), s), s)
}

/// Simplices ordered by inclusion.
pub fn face_poset(k: &SimplicialComplex) -> Poset {
    let s = k.simplices();
    inclusion_poset(set_labels(k.labels(), s), s)
}

/// Maximal chains of `P`, as vertex sets in increasing order.
fn maximal_chains(p: &Poset) -> Vec<Vec<usize>> {
    let covers = p.covers();
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); p.len()];
    for (x, y) in covers {
        up[x].push(y);
    }
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = p.atoms().into_iter().map(|a| vec![a]).collect();
    while let Some(chain) = stack.pop() {
        let top = *chain.last().expect("chains are nonempty");
        if up[top].is_empty() {
            out.push(chain);
        } else {
            for &y in up[top].iter().rev() {
                let mut next = chain.clone();
                next.push(y);
                stack.push(next);
            }
        }
    }
    out
}

/// The complex of chains of `P`.
pub fn order_complex(p: &Poset) -> SimplicialComplex {
    SimplicialComplex::from_index_sets(p.labels().to_vec(), maximal_chains(p))
}

/// Reflexive upper bound graph: `p ∼ q` iff they have a common upper bound.
pub fn rub(p: &Poset) -> Graph {
    Graph::from_fn(p.labels().to_vec(), |i, j| {
        (0..p.len()).any(|z| p.leq(i, z) && p.leq(j, z))
    })
}

/// The subgraph of [`rub`] induced by the atoms (minimal elements).
pub fn atoms_graph(p: &Poset) -> Graph {
    let mut keep = FixedBitSet::with_capacity(p.len());
    for a in p.atoms() {
        keep.insert(a);
    }
    rub(p).induced_mask(&keep)
}

/// Renames the atoms `{v}` of `C(G)` back to the vertices `v` of `G`.
pub fn identify_atoms(g: &Graph, m: &Graph) -> Result<Graph> {
    let lookup: std::collections::HashMap<Label, Label> =
        g.labels().iter().map(|v| (Label::set([v]), v.clone())).collect();
    for l in m.labels() {
        if !lookup.contains_key(l) {
            return Err(Error::Input(format!("`{l}` is not a singleton clique of the graph")));
        }
    }
    m.relabel(|l| lookup[l].clone())
}

/// `Bd(G) = Comp(C(G))`.
pub fn bd_graph(g: &Graph, budget: &Budget) -> Result<Graph> {
    Ok(comp(&clique_poset(g, budget)?))
}

/// `Bd(G)` by the other route, `F_G(Δ_G(G))`.
pub fn bd_graph_via_complex(g: &Graph, budget: &Budget) -> Result<Graph> {
    Ok(face_graph(&clique_complex(g, budget)?))
}

/// `Bd(P) = C(Comp(P))`.
pub fn bd_poset(p: &Poset, budget: &Budget) -> Result<Poset> {
    clique_poset(&comp(p), budget)
}

/// `Bd(P)` by the other route, `F_P(Δ_P(P))`.
pub fn bd_poset_via_complex(p: &Poset) -> Poset {
    face_poset(&order_complex(p))
}

/// `Bd(K) = Δ_G(F_G(K))`.
pub fn bd_complex(k: &SimplicialComplex, budget: &Budget) -> Result<SimplicialComplex> {
    clique_complex(&face_graph(k), budget)
}

/// `Bd(K)` by the other route, `Δ_P(F_P(K))`.
pub fn bd_complex_via_poset(k: &SimplicialComplex) -> SimplicialComplex {
    order_complex(&face_poset(k))
}

fn identity_members(labels: &[Label]) -> Vec<(Label, Vec<Label>)> {
    labels.iter().map(|l| (l.clone(), vec![l.clone()])).collect()
}

fn set_members(labels: &[Label], sets: &[Vec<usize>]) -> Vec<(Label, Vec<Label>)> {
    sets.iter()
        .map(|s| {
            let members: Vec<Label> = s.iter().map(|&v| labels[v].clone()).collect();
            (Label::set(&members), members)
        })
        .collect()
}

pub const FUNCTOR_NAMES: &[&str] = &[
    "comp",
    "clique-poset",
    "clique-complex",
    "face-graph",
    "face-poset",
    "order-complex",
    "rub",
    "atoms-graph",
    "reflexive-closure",
    "bd",
];

/// Applies a functor by name, reporting which input elements each output
/// element is made of.
pub fn apply(name: &str, input: &Object, budget: &Budget) -> Result<Image> {
    let wrong = || {
        Error::WrongCategory { expected: format!("valid input for `{name}`"), found: input.category_name().to_string() }
    };
    let image = match (name, input) {
        ("comp", Object::Poset(p)) => Image { object: Object::Graph(comp(p)), members: identity_members(p.labels()) },
        ("rub", Object::Poset(p)) => Image { object: Object::Graph(rub(p)), members: identity_members(p.labels()) },
        ("atoms-graph", Object::Poset(p)) => {
            let m = atoms_graph(p);
            let members = identity_members(m.labels());
            Image { object: Object::Graph(m), members }
        }
        ("reflexive-closure", Object::Graph(g)) => {
            Image { object: Object::Graph(graph::reflexive_closure(g)), members: identity_members(g.labels()) }
        }
        ("clique-poset", Object::Graph(g)) => {
            let cl = cliques::all_cliques(g, budget.max_cliques)?;
            Image { object: Object::Poset(inclusion_poset(set_labels(g.labels(), &cl), &cl)), members: set_members(g.labels(), &cl) }
        }
        ("clique-complex", Object::Graph(g)) => {
            Image { object: Object::Complex(clique_complex(g, budget)?), members: identity_members(g.labels()) }
        }
        ("face-graph", Object::Complex(k)) => {
            Image { object: Object::Graph(face_graph(k)), members: set_members(k.labels(), k.simplices()) }
        }
        ("face-poset", Object::Complex(k)) => {
            Image { object: Object::Poset(face_poset(k)), members: set_members(k.labels(), k.simplices()) }
        }
        ("order-complex", Object::Poset(p)) => {
            Image { object: Object::Complex(order_complex(p)), members: identity_members(p.labels()) }
        }
        ("bd", Object::Graph(g)) => {
            let cl = cliques::all_cliques(g, budget.max_cliques)?;
            let c = inclusion_poset(set_labels(g.labels(), &cl), &cl);
            Image { object: Object::Graph(comp(&c)), members: set_members(g.labels(), &cl) }
        }
        ("bd", Object::Poset(p)) => {
            let g = comp(p);
            let cl = cliques::all_cliques(&g, budget.max_cliques)?;
            Image { object: Object::Poset(inclusion_poset(set_labels(g.labels(), &cl), &cl)), members: set_members(g.labels(), &cl) }
        }
        ("bd", Object::Complex(k)) => {
            let fg = face_graph(k);
            let members = set_members(fg.labels(), &cliques::all_cliques(&fg, budget.max_cliques)?);
            Image { object: Object::Complex(clique_complex(&fg, budget)?), members }
        }
        (n, _) if FUNCTOR_NAMES.contains(&n) => return Err(wrong()),
        _ => return Err(Error::Input(format!("unknown functor `{name}` (expected one of {})", FUNCTOR_NAMES.join(", ")))),
    };
    Ok(image)
}

fn relabel_certificate(cert: &Certificate, category: Category, start_hash: String) -> Certificate {
    Certificate { category, start_hash, steps: cert.steps.clone() }
}

/// A weak dismantling of `P` read as a dismantling of `Comp(P)`: weak
/// domination of `x` by `a` is exactly domination in the comparability
/// graph, so the steps carry over unchanged.
pub fn weak_to_comp_certificate(p: &Poset, cert: &Certificate) -> Result<Certificate> {
    if cert.category != Category::PosetWeak {
        return Err(Error::WrongCategory { expected: "poset-weak".into(), found: cert.category.to_string() });
    }
    poset::replay_certificate(p, cert)?;
    let g = comp(p);
    let out = relabel_certificate(cert, Category::Graph, g.digest());
    certificate::replay(&g, &out)?;
    Ok(out)
}

/// The converse of [`weak_to_comp_certificate`].
pub fn comp_to_weak_certificate(p: &Poset, cert: &Certificate) -> Result<Certificate> {
    let g = comp(p);
    graph::replay_certificate(&g, cert)?;
    let out = relabel_certificate(cert, Category::PosetWeak, p.digest());
    poset::replay_certificate(p, &out)?;
    Ok(out)
}

/// A strict poset dismantling is also a weak one.
pub fn strict_to_weak_certificate(p: &Poset, cert: &Certificate) -> Result<Certificate> {
    if cert.category != Category::Poset {
        return Err(Error::WrongCategory { expected: "poset".into(), found: cert.category.to_string() });
    }
    poset::replay_certificate(p, cert)?;
    let out = relabel_certificate(cert, Category::PosetWeak, p.digest());
    poset::replay_certificate(p, &out)?;
    Ok(out)
}

pub(crate) fn clique_label_sets(g: &Graph, budget: &Budget) -> Result<(Poset, Vec<Vec<usize>>)> {
    let cl = cliques::all_cliques(g, budget.max_cliques)?;
    let p = inclusion_poset(set_labels(g.labels(), &cl), &cl);
    // Re-align the vertex sets with the poset's element order.
    let mut sets = vec![Vec::new(); cl.len()];
    for (s, l) in cl.iter().zip(set_labels(g.labels(), &cl)) {
        sets[p.index_of(&l).expect("clique label exists")] = s.clone();
    }
    Ok((p, sets))
}

/// Strict dismantling `C(G) ↘ C(G - x)` for a looped `x` dominated by `a`,
/// in two fixed-point stages: first `c ↦ c ∪ {a}` on cliques through `x`
/// (above the identity), then `c ↦ c ∖ {x}` on its image (below it).
pub fn clique_poset_fold_certificate(g: &Graph, x: &str, a: &str, budget: &Budget) -> Result<Certificate> {
    if !graph::dominates(g, a, x)? {
        return Err(Error::NotDominated { deleted: Label::new(x), witness: Label::new(a) });
    }
    let (xi, ai) = (g.vertex(x)?, g.vertex(a)?);
    if !g.has_loop(xi) {
        return Err(Error::Precondition(format!("`{x}` must be looped")));
    }
    let (c, sets) = clique_label_sets(g, budget)?;
    let find = |s: &[usize]| -> usize {
        let mut s = s.to_vec();
        s.sort_unstable();
        c.index_of(&Label::set(s.iter().map(|&v| g.label(v)))).expect("image is a clique")
    };
    let f1 = MonotoneMap::from_fn(&c, |i| {
        let s = &sets[i];
        if s.contains(&xi) && !s.contains(&ai) {
            let mut t = s.clone();
            t.push(ai);
            find(&t)
        } else {
            i
        }
    })?;
    let first = poset::fixpoint_dismantle(&c, &f1)?;
    let mid_mask = certificate::replay(&poset::StrictRule(&c), &first)?;
    let mid = c.induced_mask(&mid_mask);
    let mid_sets: Vec<Vec<usize>> = mid_mask.ones().map(|i| sets[i].clone()).collect();
    let f2 = MonotoneMap::from_fn(&mid, |i| {
        let s = &mid_sets[i];
        if s.contains(&xi) {
            let t: Vec<usize> = s.iter().copied().filter(|&v| v != xi).collect();
            mid.index_of(c.label(find(&t))).expect("image stays in the middle poset")
        } else {
            i
        }
    })?;
    let second = poset::fixpoint_dismantle(&mid, &f2)?;
    let mut steps = first.steps;
    steps.extend(second.steps);
    let cert = certificate::make_certificate(&poset::StrictRule(&c), steps);
    certificate::replay(&poset::StrictRule(&c), &cert)?;
    Ok(cert)
}

/// Transports a whole graph dismantling of a reflexive `G` to a strict
/// dismantling of `C(G)` onto `C` of the residual.
pub fn clique_poset_transport(g: &Graph, cert: &Certificate, budget: &Budget) -> Result<Certificate> {
    let start = clique_poset(g, budget)?;
    let mut current = g.clone();
    let mut steps = Vec::new();
    for step in &graph::replay_certificate(g, cert).map(|_| cert.steps.clone())? {
        let c = clique_poset_fold_certificate(&current, &step.deleted, &step.witness, budget)?;
        steps.extend(c.steps);
        current = current.remove(&step.deleted)?;
    }
    let out = certificate::make_certificate(&poset::StrictRule(&start), steps);
    certificate::replay(&poset::StrictRule(&start), &out)?;
    Ok(out)
}

/// Transports a graph dismantling of a reflexive `G` to `Bd(G)`, reading each
/// strict clique-poset deletion as a fold in the comparability graph.
pub fn bd_transport(g: &Graph, cert: &Certificate, budget: &Budget) -> Result<Certificate> {
    let c = clique_poset(g, budget)?;
    let strict = clique_poset_transport(g, cert, budget)?;
    weak_to_comp_certificate(&c, &strict_to_weak_certificate(&c, &strict)?)
}

/// A graph dismantling of a reflexive `G` read as a strong collapse of
/// `Δ_G(G)`: for looped `x`, domination in `G` and in the clique complex
/// coincide.
pub fn clique_complex_certificate(g: &Graph, cert: &Certificate, budget: &Budget) -> Result<Certificate> {
    graph::replay_certificate(g, cert)?;
    let k = clique_complex(g, budget)?;
    let out = relabel_certificate(cert, Category::Complex, k.digest());
    certificate::replay(&k, &out)?;
    Ok(out)
}

/// The converse of [`clique_complex_certificate`].
pub fn graph_certificate_from_clique_complex(g: &Graph, cert: &Certificate, budget: &Budget) -> Result<Certificate> {
    let k = clique_complex(g, budget)?;
    simplicial::replay_certificate(&k, cert)?;
    let out = relabel_certificate(cert, Category::Graph, g.digest());
    certificate::replay(g, &out)?;
    Ok(out)
}

/// Transports a strong collapse of `K` to a dismantling of `F_G(K)`, one
/// vertex at a time, using [`simplicial::star_deletion_order`].
pub fn face_graph_transport(k: &SimplicialComplex, cert: &Certificate) -> Result<Certificate> {
    simplicial::replay_certificate(k, cert)?;
    let fg = face_graph(k);
    let mut current = k.clone();
    let mut steps = Vec::new();
    for step in &cert.steps {
        for s in simplicial::star_deletion_order(&current, &step.deleted, &step.witness)? {
            steps.push(Step { deleted: Label::set(&s.simplex), witness: Label::set(&s.witness) });
        }
        current = current.deletion(&step.deleted)?;
    }
    let out = certificate::make_certificate(&fg, steps);
    certificate::replay(&fg, &out)?;
    Ok(out)
}

/// From a dismantling of `F_G(K)` whose residual is `F_G(L)` for a full
/// subcomplex `L`, keeps only the deletions of 0-simplices to obtain a strong
/// collapse `K ↘↘ L`.
///
/// A deleted `{x}` is dominated in the face graph by a simplex `σ ∋ x`; the
/// smallest vertex of `σ ∖ {x}` that dominates `x` in the current complex is
/// used as witness, falling back to the first available witness.
pub fn vertex_collapses_from_face_graph(k: &SimplicialComplex, cert: &Certificate) -> Result<Certificate> {
    let fg = face_graph(k);
    graph::replay_certificate(&fg, cert)?;
    let vertex_of: std::collections::HashMap<Label, usize> =
        (0..k.len()).map(|v| (Label::set([k.label(v)]), v)).collect();
    let simplex_of: std::collections::HashMap<Label, Vec<usize>> =
        k.simplices().iter().map(|s| (Label::set(s.iter().map(|&v| k.label(v))), s.clone())).collect();
    let mut alive = certificate::all_alive(k.len());
    let mut steps = Vec::new();
    for (i, step) in cert.steps.iter().enumerate() {
        let Some(&x) = vertex_of.get(&step.deleted) else { continue };
        let sigma = simplex_of.get(&step.witness).cloned().unwrap_or_default();
        let preferred = sigma.iter().copied().find(|&a| a != x && alive.contains(a) && k.dominates_in(&alive, a, x));
        let a = preferred.or_else(|| k.witnesses_in(&alive, x).first().copied()).ok_or_else(|| {
            Error::IllegalStep { step: i, reason: format!("vertex `{}` is not dominated in the complex", k.label(x)) }
        })?;
        steps.push(Step { deleted: k.label(x).clone(), witness: k.label(a).clone() });
        alive.remove(x);
    }
    let out = certificate::make_certificate(k, steps);
    certificate::replay(k, &out)?;
    Ok(out)
}
