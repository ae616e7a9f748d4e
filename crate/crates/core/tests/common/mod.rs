//! Independent oracles and generators shared by the integration tests.
//!
//! The oracles work on plain label sets and recompute everything from the
//! definitions; they do not call the library's domination tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::ops::Range;
use std::sync::atomic::{AtomicUsize, Ordering};

use dismantle::functors;
use dismantle::{graph, poset, simplicial, Category, Certificate, Graph, Label, Poset, SimplicialComplex, Step};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_2024;

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt)
}

pub fn l(s: &str) -> Label {
    Label::new(s)
}

pub type Set = BTreeSet<String>;

// ---------- graphs ----------

/// Open neighbourhoods by label.
pub fn neighborhoods(g: &Graph) -> BTreeMap<String, Set> {
    let mut n: BTreeMap<String, Set> = g.labels().iter().map(|v| (v.to_string(), Set::new())).collect();
    for (u, v) in g.edges() {
        let (a, b) = (g.label(u).to_string(), g.label(v).to_string());
        n.get_mut(&a).unwrap().insert(b.clone());
        n.get_mut(&b).unwrap().insert(a);
    }
    n
}

/// `N(x) ⊆ N(a)` inside the subgraph induced by `alive`.
pub fn graph_dominates(n: &BTreeMap<String, Set>, alive: &Set, a: &str, x: &str) -> bool {
    a != x && n[x].iter().filter(|y| alive.contains(*y)).all(|y| n[a].contains(y))
}

pub fn random_graph(r: &mut ChaCha8Rng, n: Range<usize>, p: f64, reflexive: bool) -> Graph {
    let n = r.gen_range(n);
    let mut b = Graph::builder();
    for i in 0..n {
        if reflexive || r.gen_bool(0.5) {
            b.looped_vertex(i.to_string());
        } else {
            b.vertex(i.to_string());
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                b.edge(i.to_string(), j.to_string());
            }
        }
    }
    b.build().unwrap()
}

/// Adds `k` vertices, each dominated at the moment it is added: the new
/// vertex copies a random subset of a random existing vertex's
/// neighbourhood (and is looped when `reflexive`).
pub fn add_dominated(r: &mut ChaCha8Rng, base: &Graph, k: Range<usize>, reflexive: bool) -> Graph {
    let k = r.gen_range(k);
    let mut b = Graph::builder();
    let mut nb: BTreeMap<String, Set> = neighborhoods(base);
    for v in base.labels() {
        b.vertex(v.clone());
    }
    for (u, v) in base.edges() {
        b.edge(base.label(u).clone(), base.label(v).clone());
    }
    for i in 0..k {
        let name = format!("n{i}");
        let keys: Vec<String> = nb.keys().cloned().collect();
        let Some(anchor) = keys.choose(r).cloned() else { break };
        let mut new_n: Set = nb[&anchor].iter().filter(|_| r.gen_bool(0.7)).cloned().collect();
        if reflexive {
            // A looped x needs a ∈ N(x) and the loop itself: x ∈ N(x) ⊆ N(a).
            if !nb[&anchor].contains(&anchor) {
                continue;
            }
            new_n.insert(anchor.clone());
            b.looped_vertex(name.clone());
        } else {
            b.vertex(name.clone());
        }
        for y in &new_n {
            b.edge(name.clone(), y.clone());
            nb.get_mut(y).unwrap().insert(name.clone());
        }
        let mut own = new_n.clone();
        if reflexive {
            own.insert(name.clone());
            nb.get_mut(&anchor).unwrap().insert(name.clone());
        }
        nb.insert(name, own);
    }
    b.build().unwrap()
}

/// All graphs on `0..n` with every vertex looped.
pub fn all_reflexive_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let mut b = Graph::builder();
            for i in 0..n {
                b.looped_vertex(i.to_string());
            }
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    b.edge(i.to_string(), j.to_string());
                }
            }
            b.build().unwrap()
        })
        .collect()
}

// ---------- posets ----------

/// Every naturally labelled poset on `0..n` (x < y implies x < y as
/// integers). Every poset is isomorphic to one of these.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let mut out = Vec::new();
    let mut below: Vec<BTreeSet<usize>> = Vec::new();
    extend_posets(n, &mut below, &mut out);
    out
}

fn extend_posets(n: usize, below: &mut Vec<BTreeSet<usize>>, out: &mut Vec<Poset>) {
    let j = below.len();
    if j == n {
        let labels: Vec<Label> = (0..n).map(|i| l(&i.to_string())).collect();
        out.push(Poset::from_relation(labels, |x, y| below[y].contains(&x)).unwrap());
        return;
    }
    // The strict down-set of the new element is any order ideal.
    for mask in 0u32..1 << j {
        let ideal: BTreeSet<usize> = (0..j).filter(|&i| mask >> i & 1 == 1).collect();
        if ideal.iter().all(|&i| below[i].is_subset(&ideal)) {
            below.push(ideal);
            extend_posets(n, below, out);
            below.pop();
        }
    }
}

pub fn random_poset(r: &mut ChaCha8Rng, n: Range<usize>, p: f64) -> Poset {
    let n = r.gen_range(n);
    let labels: Vec<Label> = (0..n).map(|i| l(&format!("p{i}"))).collect();
    let mut covers = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                covers.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    Poset::from_covers(labels, &covers).unwrap()
}

/// Strict order as label pairs.
pub fn order_pairs(p: &Poset) -> HashSet<(String, String)> {
    let mut s = HashSet::new();
    for i in 0..p.len() {
        for j in 0..p.len() {
            if p.less(i, j) {
                s.insert((p.label(i).to_string(), p.label(j).to_string()));
            }
        }
    }
    s
}

fn comparable(lt: &HashSet<(String, String)>, x: &str, y: &str) -> bool {
    x == y || lt.contains(&(x.to_string(), y.to_string())) || lt.contains(&(y.to_string(), x.to_string()))
}

pub fn weakly_dominates(lt: &HashSet<(String, String)>, alive: &Set, a: &str, x: &str) -> bool {
    a != x && comparable(lt, a, x) && alive.iter().filter(|y| comparable(lt, x, y)).all(|y| comparable(lt, a, y))
}

pub fn strictly_dominates(lt: &HashSet<(String, String)>, alive: &Set, a: &str, x: &str) -> bool {
    let up: Set = alive.iter().filter(|y| lt.contains(&(x.to_string(), (*y).clone()))).cloned().collect();
    let down: Set = alive.iter().filter(|y| lt.contains(&((*y).clone(), x.to_string()))).cloned().collect();
    let least = up.contains(a) && up.iter().all(|y| y == a || lt.contains(&(a.to_string(), y.clone())));
    let greatest = down.contains(a) && down.iter().all(|y| y == a || lt.contains(&(y.clone(), a.to_string())));
    least || greatest
}

// ---------- complexes ----------

pub fn simplices_by_label(k: &SimplicialComplex) -> Vec<Set> {
    k.simplices().iter().map(|s| s.iter().map(|&v| k.label(v).to_string()).collect()).collect()
}

/// The link of `x` in the subcomplex on `alive` is a cone with apex `a`.
pub fn complex_dominates(simplices: &[Set], alive: &Set, a: &str, x: &str) -> bool {
    if a == x {
        return false;
    }
    let link: Vec<Set> = simplices
        .iter()
        .filter(|s| s.contains(x) && s.is_subset(alive) && s.len() > 1)
        .map(|s| s.iter().filter(|v| *v != x).cloned().collect())
        .collect();
    let maximal: Vec<&Set> = link.iter().filter(|s| !link.iter().any(|t| t.len() > s.len() && s.is_subset(t))).collect();
    !maximal.is_empty() && maximal.iter().all(|s| s.contains(a))
}

pub fn random_complex(r: &mut ChaCha8Rng, n: Range<usize>, facets: Range<usize>, max_dim: usize) -> SimplicialComplex {
    let (n, facets) = (r.gen_range(n), r.gen_range(facets));
    let verts: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut fs: Vec<Vec<Label>> = Vec::new();
    for _ in 0..facets {
        let size = r.gen_range(1..=max_dim + 1);
        let f: Vec<Label> = verts.choose_multiple(r, size.min(n)).map(|s| l(s)).collect();
        fs.push(f);
    }
    SimplicialComplex::from_simplices(fs).unwrap()
}

// ---------- certificate integrity ----------

/// The object a certificate is replayed against, with an oracle for legal
/// steps.
pub enum Start<'a> {
    Graph(&'a Graph),
    Poset(&'a Poset),
    Complex(&'a SimplicialComplex),
}

impl Start<'_> {
    fn labels(&self) -> Vec<String> {
        match self {
            Start::Graph(g) => g.labels().iter().map(|x| x.to_string()).collect(),
            Start::Poset(p) => p.labels().iter().map(|x| x.to_string()).collect(),
            Start::Complex(k) => k.labels().iter().map(|x| x.to_string()).collect(),
        }
    }

    fn verify(&self, cert: &Certificate) -> bool {
        match self {
            Start::Graph(g) => graph::verify_certificate(g, cert).unwrap(),
            Start::Poset(p) => poset::verify_certificate(p, cert).unwrap(),
            Start::Complex(k) => simplicial::verify_certificate(k, cert).unwrap(),
        }
    }
}

/// Precomputed oracle data for one start object.
enum Oracle {
    Graph(BTreeMap<String, Set>),
    Order(HashSet<(String, String)>),
    Complex(Vec<Set>),
}

impl Oracle {
    fn of(start: &Start<'_>) -> Oracle {
        match start {
            Start::Graph(g) => Oracle::Graph(neighborhoods(g)),
            Start::Poset(p) => Oracle::Order(order_pairs(p)),
            Start::Complex(k) => Oracle::Complex(simplices_by_label(k)),
        }
    }

    /// Is `(x, a)` a legal step in the residual `alive`?
    fn legal(&self, category: Category, alive: &Set, x: &str, a: &str) -> bool {
        if !alive.contains(x) || !alive.contains(a) || x == a {
            return false;
        }
        match (self, category) {
            (Oracle::Graph(n), Category::Graph) => graph_dominates(n, alive, a, x),
            (Oracle::Order(lt), Category::Poset) => strictly_dominates(lt, alive, a, x),
            (Oracle::Order(lt), Category::PosetWeak) => weakly_dominates(lt, alive, a, x),
            (Oracle::Complex(s), Category::Complex) => complex_dominates(s, alive, a, x),
            _ => panic!("category mismatch"),
        }
    }
}

pub static CERTIFICATES_CHECKED: AtomicUsize = AtomicUsize::new(0);
pub static MUTATIONS_REJECTED: AtomicUsize = AtomicUsize::new(0);
pub static CERTIFICATE_FAILURES: AtomicUsize = AtomicUsize::new(0);

/// Checks a certificate step by step against the oracle, then checks that
/// replacing any single witness makes verification fail unless the
/// replacement is itself a legal witness. Returns the number of mutations
/// that were rejected.
pub fn check_certificate(start: Start<'_>, cert: &Certificate) -> usize {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| check_certificate_inner(&start, cert))) {
        Ok(rejected) => rejected,
        Err(e) => {
            CERTIFICATE_FAILURES.fetch_add(1, Ordering::Relaxed);
            std::panic::resume_unwind(e)
        }
    }
}

fn check_certificate_inner(start: &Start<'_>, cert: &Certificate) -> usize {
    assert!(start.verify(cert), "certificate does not verify: {cert:?}");
    let oracle = Oracle::of(start);
    let labels = start.labels();
    let mut alive: Set = labels.iter().cloned().collect();
    let mut residuals = Vec::new();
    for s in &cert.steps {
        assert!(oracle.legal(cert.category, &alive, &s.deleted, &s.witness), "oracle rejects step {s:?} of {cert:?}");
        residuals.push(alive.clone());
        alive.remove(s.deleted.as_str());
    }
    let mut rejected = 0;
    for (i, step) in cert.steps.iter().enumerate() {
        let mut candidates: Vec<String> = labels.clone();
        candidates.push("no-such-element".into());
        for w in candidates {
            if w == step.witness.as_str() {
                continue;
            }
            let mut mutated = cert.clone();
            mutated.steps[i] = Step::new(step.deleted.clone(), w.as_str());
            // Later steps do not depend on the witness, so the mutated
            // certificate verifies iff the new witness is legal here.
            let legal_here = oracle.legal(cert.category, &residuals[i], &step.deleted, &w);
            let ok = start.verify(&mutated);
            assert_eq!(ok, legal_here, "mutating step {i} to witness {w} of {cert:?}");
            if !ok {
                rejected += 1;
            }
        }
    }
    CERTIFICATES_CHECKED.fetch_add(1, Ordering::Relaxed);
    MUTATIONS_REJECTED.fetch_add(rejected, Ordering::Relaxed);
    rejected
}

/// Residual of a certificate as labels.
pub fn residual(labels: &[Label], cert: &Certificate) -> Set {
    let mut s: Set = labels.iter().map(|x| x.to_string()).collect();
    for d in cert.deleted() {
        s.remove(d.as_str());
    }
    s
}

// ---------- cliques and cells ----------

/// Every clique by brute force over subsets.
pub fn brute_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.len();
    assert!(n <= 20);
    (1u32..1 << n)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|s| s.iter().all(|&i| s.iter().all(|&j| i == j || g.adjacent(i, j))))
        .collect()
}

/// All indexing functions `G → H` by brute force over the product of
/// nonempty subsets, as per-vertex label sets.
pub fn brute_cells(g: &Graph, h: &Graph) -> Vec<Vec<Set>> {
    let subsets: Vec<Set> =
        (1u32..1 << h.len()).map(|m| (0..h.len()).filter(|&i| m >> i & 1 == 1).map(|i| h.label(i).to_string()).collect()).collect();
    let hn = neighborhoods(h);
    let mut out = Vec::new();
    let mut cur: Vec<Set> = Vec::new();
    fn rec(g: &Graph, hn: &BTreeMap<String, Set>, subsets: &[Set], cur: &mut Vec<Set>, out: &mut Vec<Vec<Set>>) {
        if cur.len() == g.len() {
            let ok = g.edges().all(|(x, y)| cur[x].iter().all(|p| cur[y].iter().all(|q| hn[p].contains(q))));
            if ok {
                out.push(cur.clone());
            }
            return;
        }
        for s in subsets {
            cur.push(s.clone());
            rec(g, hn, subsets, cur, out);
            cur.pop();
        }
    }
    rec(g, &hn, &subsets, &mut cur, &mut out);
    out
}

/// Canonical cell name from per-vertex label sets, matching the library's
/// JSON naming (values in the target's vertex order).
pub fn cell_name(g: &Graph, h: &Graph, cell: &[Set]) -> String {
    let body: Vec<String> = cell
        .iter()
        .enumerate()
        .map(|(v, s)| {
            let mut vals: Vec<usize> = s.iter().map(|x| h.index_of(x).unwrap()).collect();
            vals.sort();
            let vals: Vec<String> = vals.iter().map(|&w| serde_json::to_string(h.label(w).as_str()).unwrap()).collect();
            format!("{}:[{}]", serde_json::to_string(g.label(v).as_str()).unwrap(), vals.join(","))
        })
        .collect();
    format!("{{{}}}", body.join(","))
}

pub fn triangle_abc() -> Graph {
    let mut b = Graph::builder();
    b.edge("a", "b").edge("b", "c").edge("a", "c");
    b.build().unwrap()
}

pub fn diamond() -> Poset {
    dismantle::text::parse_poset("c d b\nc d c\nc b a\nc c a").unwrap()
}

/// Comparability graph computed from the order pairs.
pub fn comp_oracle(p: &Poset) -> BTreeMap<String, Set> {
    let lt = order_pairs(p);
    p.labels()
        .iter()
        .map(|x| {
            let s: Set = p.labels().iter().filter(|y| comparable(&lt, x, y)).map(|y| y.to_string()).collect();
            (x.to_string(), s)
        })
        .collect()
}

pub fn same_graph_as_oracle(g: &Graph, n: &BTreeMap<String, Set>) -> bool {
    neighborhoods(g) == *n
}

pub fn bd(g: &Graph) -> Graph {
    functors::bd_graph(g, &Default::default()).unwrap()
}
