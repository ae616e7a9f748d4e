//! Randomized and exhaustive property suites. Each returns the number of
//! instances it checked and panics on the first failure; the `#[test]`
//! wrappers and the acceptance harness both call them.
#![allow(dead_code)]

use std::collections::BTreeSet;

use dismantle::hom_complex::{self, Side};
use dismantle::{functors, graph, hom, poset, simplicial};
use dismantle::{Budget, Graph, Label, Mode, MonotoneMap, Poset, SimplicialComplex};
use rand::Rng;

use crate::common::*;

pub const RANDOM_INSTANCES: usize = 200;

fn budget() -> Budget {
    Budget::default()
}

fn pick(r: &mut rand_chacha::ChaCha8Rng) -> impl FnMut(&[(usize, usize)]) -> usize + '_ {
    move |c| r.gen_range(0..c.len())
}

fn isomorphic(g: &Graph, h: &Graph) -> bool {
    graph::are_isomorphic(g, h, &budget()).unwrap().is_some()
}

fn label_set(ls: &[Label]) -> Set {
    ls.iter().map(|x| x.to_string()).collect()
}

// ---------- graphs ----------

/// Random tie-breaking always reaches a stiff, isomorphic core.
pub fn greedy_confluence() -> usize {
    let mut r = rng(1);
    for i in 0..RANDOM_INSTANCES {
        let reflexive = i % 2 == 0;
        let base = random_graph(&mut r, 2..7, 0.45, reflexive);
        let g = add_dominated(&mut r, &base, 0..5, reflexive);
        let (core, cert) = graph::dismantle_core(&g);
        check_certificate(Start::Graph(&g), &cert);
        let n = neighborhoods(&core);
        let alive = label_set(core.labels());
        for x in &alive {
            for a in &alive {
                assert!(!graph_dominates(&n, &alive, a, x), "core of {:?} is not stiff", g.to_text());
            }
        }
        for _ in 0..3 {
            let (other, cert) = graph::dismantle_core_by(&g, pick(&mut r));
            check_certificate(Start::Graph(&g), &cert);
            assert!(isomorphic(&core, &other), "non-isomorphic cores of {}", g.to_text());
        }
    }
    RANDOM_INSTANCES
}

/// Adding dominated vertices does not change the core.
pub fn core_uniqueness() -> usize {
    let mut r = rng(2);
    for i in 0..RANDOM_INSTANCES {
        let reflexive = i % 2 == 1;
        let base = random_graph(&mut r, 1..7, 0.5, reflexive);
        let big = add_dominated(&mut r, &base, 1..5, reflexive);
        let (c1, _) = graph::dismantle_core(&base);
        let (c2, _) = graph::dismantle_core(&big);
        assert!(isomorphic(&c1, &c2), "{} vs {}", base.to_text(), big.to_text());
        assert!(graph::same_d_homotopy_type(&base, &big, &budget()).unwrap());
        let cert = graph::dismantles_onto(&big, base.labels()).unwrap().expect("big folds back onto base");
        check_certificate(Start::Graph(&big), &cert);
        assert_eq!(residual(big.labels(), &cert), label_set(base.labels()));
    }
    RANDOM_INSTANCES
}

/// Library domination agrees with the neighbourhood oracle on every graph
/// with at most four vertices (loops arbitrary) and every reflexive graph
/// with five.
pub fn graph_domination_exhaustive() -> usize {
    let mut count = 0;
    let mut graphs = all_reflexive_graphs(5);
    for n in 1..=4 {
        for g in all_reflexive_graphs(n) {
            for loops in 0u32..1 << n {
                let mut b = Graph::builder();
                for v in 0..n {
                    if loops >> v & 1 == 1 {
                        b.looped_vertex(v.to_string());
                    } else {
                        b.vertex(v.to_string());
                    }
                }
                for (u, v) in g.edges().filter(|(u, v)| u != v) {
                    b.edge(u.to_string(), v.to_string());
                }
                graphs.push(b.build().unwrap());
            }
        }
    }
    for g in &graphs {
        let n = neighborhoods(g);
        let alive = label_set(g.labels());
        let expected: Vec<(Label, Label)> = g
            .labels()
            .iter()
            .flat_map(|x| g.labels().iter().map(move |a| (x.clone(), a.clone())))
            .filter(|(x, a)| graph_dominates(&n, &alive, a, x))
            .collect();
        assert_eq!(graph::find_dominated(g), expected, "{}", g.to_text());
        assert_eq!(graph::is_stiff(g), expected.is_empty());
        count += 1;
    }
    count
}

/// Greedy `dismantles_onto` answers yes exactly when some certificate
/// reaches the target: it always finds the residual of a random dismantling.
pub fn onto_completeness() -> usize {
    let mut r = rng(3);
    for _ in 0..RANDOM_INSTANCES {
        let base = random_graph(&mut r, 2..6, 0.5, true);
        let g = add_dominated(&mut r, &base, 1..5, true);
        let (core, _) = graph::dismantle_core_by(&g, pick(&mut r));
        let cert = graph::dismantles_onto(&g, core.labels()).unwrap().expect("greedy onto is complete");
        check_certificate(Start::Graph(&g), &cert);
        assert_eq!(residual(g.labels(), &cert), label_set(core.labels()));
    }
    RANDOM_INSTANCES
}

/// The homotopy built from a dismantling is a walk in `hom(G, G)` from the
/// identity to a retraction fixing the residual.
pub fn sdr_homotopies() -> usize {
    let mut r = rng(4);
    for i in 0..RANDOM_INSTANCES {
        let base = random_graph(&mut r, 1..5, 0.5, i % 2 == 0);
        let g = add_dominated(&mut r, &base, 1..4, i % 2 == 0);
        let (core, cert) = graph::dismantle_core(&g);
        let hs = hom::sdr_homotopy(&g, &cert).unwrap();
        assert!(hom::is_sdr_homotopy(&g, &cert, &hs).unwrap());
        assert_eq!(hs.first(), Some(&hom::Morphism::identity(&g)));
        for w in hs.windows(2) {
            assert!(hom::morphisms_adjacent(&g, &g, &w[0], &w[1]).unwrap());
        }
        let last = hs.last().unwrap();
        for v in 0..g.len() {
            let img = g.label(last.image(v));
            assert!(core.index_of(img).is_some());
            if core.index_of(g.label(v)).is_some() {
                assert_eq!(last.image(v), v);
            }
        }
    }
    RANDOM_INSTANCES
}

// ---------- posets ----------

fn check_poset_bridge(p: &Poset) {
    let lt = order_pairs(p);
    let comp = functors::comp(p);
    assert!(same_graph_as_oracle(&comp, &comp_oracle(p)));
    let alive = label_set(p.labels());
    let weak: BTreeSet<(Label, Label)> = poset::weakly_dismantlable_elements(p).into_iter().collect();
    let strict: BTreeSet<(Label, Label)> =
        poset::dismantlable_elements(p).into_iter().map(|(x, a, _)| (x, a)).collect();
    for x in p.labels() {
        for a in p.labels() {
            if x == a {
                continue;
            }
            let w = weakly_dominates(&lt, &alive, a, x);
            assert_eq!(weak.contains(&(x.clone(), a.clone())), w, "weak ({x},{a}) in {}", p.to_text());
            assert_eq!(graph::dominates(&comp, a, x).unwrap(), w, "comp ({x},{a}) in {}", p.to_text());
            let s = strictly_dominates(&lt, &alive, a, x);
            assert_eq!(strict.contains(&(x.clone(), a.clone())), s, "strict ({x},{a}) in {}", p.to_text());
            assert!(!s || w);
        }
    }
}

/// Weak domination in `P` is domination in `Comp(P)`, pointwise, on every
/// poset with at most six elements and on random larger ones.
pub fn poset_comp_bridge() -> usize {
    let mut count = 0;
    for n in 1..=6 {
        for p in all_posets(n) {
            check_poset_bridge(&p);
            count += 1;
        }
    }
    let mut r = rng(5);
    for _ in 0..RANDOM_INSTANCES {
        check_poset_bridge(&random_poset(&mut r, 5..11, 0.3));
        count += 1;
    }
    count
}

/// Poset cores and the certificate transports between `P` and `Comp(P)`.
pub fn poset_transports() -> usize {
    let mut r = rng(6);
    for _ in 0..RANDOM_INSTANCES {
        let p = random_poset(&mut r, 2..10, 0.35);
        let (strict_core, strict) = poset::poset_core_by(&p, Mode::Strict, pick(&mut r));
        check_certificate(Start::Poset(&p), &strict);
        assert!(poset::dismantlable_elements(&strict_core).is_empty());
        let weak = functors::strict_to_weak_certificate(&p, &strict).unwrap();
        check_certificate(Start::Poset(&p), &weak);

        let (weak_core, weak) = poset::poset_core_by(&p, Mode::Weak, pick(&mut r));
        check_certificate(Start::Poset(&p), &weak);
        assert!(poset::weakly_dismantlable_elements(&weak_core).is_empty());
        let comp = functors::comp(&p);
        let as_graph = functors::weak_to_comp_certificate(&p, &weak).unwrap();
        check_certificate(Start::Graph(&comp), &as_graph);
        let (comp_core, comp_cert) = graph::dismantle_core_by(&comp, pick(&mut r));
        let back = functors::comp_to_weak_certificate(&p, &comp_cert).unwrap();
        check_certificate(Start::Poset(&p), &back);
        assert_eq!(residual(p.labels(), &back), label_set(comp_core.labels()));
        assert!(isomorphic(&functors::comp(&weak_core), &comp_core));
        let onto = poset::weak_dismantles_onto(&p, weak_core.labels()).unwrap().expect("weak onto is complete");
        check_certificate(Start::Poset(&p), &onto);
    }
    RANDOM_INSTANCES
}

/// Adds a bottom `lo` and a top `hi` to a random poset.
fn bounded_poset(r: &mut rand_chacha::ChaCha8Rng) -> Poset {
    let inner = random_poset(r, 1..8, 0.35);
    let mut labels: Vec<Label> = inner.labels().to_vec();
    labels.push(l("lo"));
    labels.push(l("hi"));
    let n = inner.len();
    Poset::from_relation(labels, |x, y| match (x, y) {
        (x, y) if x < n && y < n => inner.less(x, y),
        (x, y) if x == n && y != n => true,
        (x, y) if y == n + 1 && x != n + 1 => true,
        _ => false,
    })
    .unwrap()
}

/// `fixpoint_dismantle` reaches exactly `Fix(f)` for closure-like maps
/// `f ≥ 1` (everything outside a down-set goes to the top) and the dual
/// `f ≤ 1`.
pub fn fixpoint_retractions() -> usize {
    let mut r = rng(7);
    for i in 0..RANDOM_INSTANCES {
        let p = bounded_poset(&mut r);
        let (lo, hi) = (p.element("lo").unwrap(), p.element("hi").unwrap());
        let seeds: Vec<usize> = (0..p.len()).filter(|_| r.gen_bool(0.3)).collect();
        let f = if i % 2 == 0 {
            let down = |x: usize| x == lo || seeds.iter().any(|&s| p.leq(x, s));
            MonotoneMap::from_fn(&p, |x| if down(x) { x } else { hi }).unwrap()
        } else {
            let up = |x: usize| x == hi || seeds.iter().any(|&s| p.leq(s, x));
            MonotoneMap::from_fn(&p, |x| if up(x) { x } else { lo }).unwrap()
        };
        let cert = poset::fixpoint_dismantle(&p, &f).unwrap();
        check_certificate(Start::Poset(&p), &cert);
        let fixed: Set = (0..p.len()).filter(|&x| f.image(x) == x).map(|x| p.label(x).to_string()).collect();
        assert_eq!(residual(p.labels(), &cert), fixed);
    }
    RANDOM_INSTANCES
}

// ---------- complexes ----------

fn check_clique_complex_bridge(g: &Graph) {
    let k = functors::clique_complex(g, &budget()).unwrap();
    let simplices = simplices_by_label(&k);
    let alive = label_set(g.labels());
    for x in g.labels() {
        for a in g.labels() {
            if x == a {
                continue;
            }
            let in_graph = graph::dominates(g, a, x).unwrap();
            assert_eq!(simplicial::dominates(&k, a, x).unwrap(), in_graph, "({x},{a}) in {}", g.to_text());
            assert_eq!(complex_dominates(&simplices, &alive, a, x), in_graph, "oracle ({x},{a}) in {}", g.to_text());
        }
    }
}

/// On reflexive graphs, domination in `G` and in its clique complex agree
/// pointwise (all graphs up to five vertices, plus random ones), and whole
/// certificates transport both ways.
pub fn clique_complex_bridge() -> usize {
    let mut count = 0;
    for n in 1..=5 {
        for g in all_reflexive_graphs(n) {
            check_clique_complex_bridge(&g);
            count += 1;
        }
    }
    let mut r = rng(8);
    for _ in 0..RANDOM_INSTANCES {
        let base = random_graph(&mut r, 2..6, 0.5, true);
        let g = add_dominated(&mut r, &base, 0..4, true);
        check_clique_complex_bridge(&g);
        let k = functors::clique_complex(&g, &budget()).unwrap();
        let (_, cert) = graph::dismantle_core_by(&g, pick(&mut r));
        let kc = functors::clique_complex_certificate(&g, &cert, &budget()).unwrap();
        check_certificate(Start::Complex(&k), &kc);
        let (_, kcert) = simplicial::strong_collapse_core_by(&k, pick(&mut r));
        let gc = functors::graph_certificate_from_clique_complex(&g, &kcert, &budget()).unwrap();
        check_certificate(Start::Graph(&g), &gc);
        count += 1;
    }
    count
}

fn face_label(k: &SimplicialComplex, s: &[usize]) -> String {
    Label::set(s.iter().map(|&v| k.label(v))).to_string()
}

/// A strong collapse of `K` onto its core transports to a dismantling of
/// `F_G(K)` onto `F_G(core)`; conversely a dismantling of `F_G(K)` onto
/// `F_G(core)` yields a strong collapse by keeping the 0-simplex deletions.
pub fn face_graph_transport() -> usize {
    let mut r = rng(9);
    for _ in 0..RANDOM_INSTANCES {
        let k = random_complex(&mut r, 2..7, 1..4, 2);
        let (core, cert) = simplicial::strong_collapse_core_by(&k, pick(&mut r));
        check_certificate(Start::Complex(&k), &cert);
        let alive = label_set(core.labels());
        let simplices = simplices_by_label(&k);
        for x in &alive {
            for a in &alive {
                assert!(!complex_dominates(&simplices, &alive, a, x));
            }
        }

        let fg = functors::face_graph(&k);
        let transported = functors::face_graph_transport(&k, &cert).unwrap();
        check_certificate(Start::Graph(&fg), &transported);
        let core_faces: Set = core
            .simplices()
            .iter()
            .map(|s| {
                let labels: Vec<Label> = s.iter().map(|&v| core.label(v).clone()).collect();
                Label::set(&labels).to_string()
            })
            .collect();
        assert_eq!(residual(fg.labels(), &transported), core_faces);

        let back = functors::vertex_collapses_from_face_graph(&k, &transported).unwrap();
        check_certificate(Start::Complex(&k), &back);
        assert_eq!(residual(k.labels(), &back), alive);

        // An unrelated dismantling of the face graph onto the same target.
        let keep: Vec<String> =
            k.simplices().iter().map(|s| face_label(&k, s)).filter(|s| core_faces.contains(s)).collect();
        let other = graph::dismantles_onto_by(&fg, &keep, pick(&mut r)).unwrap().expect("face graph dismantles");
        check_certificate(Start::Graph(&fg), &other);
        let extracted = functors::vertex_collapses_from_face_graph(&k, &other).unwrap();
        check_certificate(Start::Complex(&k), &extracted);
        assert_eq!(residual(k.labels(), &extracted), alive);
        assert!(simplicial::strong_collapse_onto(&k, &core).unwrap().is_some());
    }
    RANDOM_INSTANCES
}

// ---------- functors ----------

/// Both routes to `Bd` agree exactly in all three categories.
pub fn bd_identities() -> usize {
    let mut r = rng(10);
    for i in 0..RANDOM_INSTANCES {
        let g = random_graph(&mut r, 1..7, 0.5, i % 2 == 0);
        let b = budget();
        assert_eq!(functors::bd_graph(&g, &b).unwrap(), functors::bd_graph_via_complex(&g, &b).unwrap());
        let p = random_poset(&mut r, 1..7, 0.4);
        assert_eq!(functors::bd_poset(&p, &b).unwrap(), functors::bd_poset_via_complex(&p));
        let k = random_complex(&mut r, 1..6, 1..4, 2);
        assert_eq!(functors::bd_complex(&k, &b).unwrap(), functors::bd_complex_via_poset(&k));
    }
    3 * RANDOM_INSTANCES
}

/// A dismantling of a reflexive `G` transports to `C(G)` (strict) and to
/// `Bd(G)` (folds), landing on the image of the residual.
pub fn bd_transport() -> usize {
    let mut r = rng(11);
    for _ in 0..RANDOM_INSTANCES {
        let base = random_graph(&mut r, 1..5, 0.5, true);
        let g = add_dominated(&mut r, &base, 1..3, true);
        let (core, cert) = graph::dismantle_core_by(&g, pick(&mut r));
        let b = budget();
        let c = functors::clique_poset(&g, &b).unwrap();
        let strict = functors::clique_poset_transport(&g, &cert, &b).unwrap();
        check_certificate(Start::Poset(&c), &strict);
        let target = label_set(functors::clique_poset(&core, &b).unwrap().labels());
        assert_eq!(residual(c.labels(), &strict), target);
        let bd = bd(&g);
        let folds = functors::bd_transport(&g, &cert, &b).unwrap();
        check_certificate(Start::Graph(&bd), &folds);
        assert_eq!(residual(bd.labels(), &folds), target);
    }
    RANDOM_INSTANCES
}

fn check_rub(p: &Poset) {
    let rub = functors::rub(p);
    let atoms: Vec<Label> = p.atoms().into_iter().map(|a| p.label(a).clone()).collect();
    let cert = graph::dismantles_onto(&rub, &atoms).unwrap().expect("RUB(P) dismantles onto its atoms");
    assert_eq!(residual(rub.labels(), &cert), label_set(&atoms));
    assert_eq!(functors::atoms_graph(p), rub.induced(&atoms).unwrap());
    if rub.len() <= 8 {
        check_certificate(Start::Graph(&rub), &cert);
    } else {
        assert!(graph::verify_certificate(&rub, &cert).unwrap());
    }
}

/// `RUB(P)` dismantles onto the graph on its atoms.
pub fn rub_onto_atoms() -> usize {
    let mut count = 0;
    for n in 1..=5 {
        for p in all_posets(n) {
            check_rub(&p);
            count += 1;
        }
    }
    let mut r = rng(12);
    for _ in 0..RANDOM_INSTANCES {
        let p = random_poset(&mut r, 2..10, 0.3);
        let rub = functors::rub(&p);
        let atoms: Vec<Label> = p.atoms().into_iter().map(|a| p.label(a).clone()).collect();
        let cert = graph::dismantles_onto(&rub, &atoms).unwrap().expect("RUB(P) dismantles onto its atoms");
        check_certificate(Start::Graph(&rub), &cert);
        count += 1;
    }
    count
}

/// `m(C(G))` is the reflexive closure of `G`.
pub fn atoms_of_clique_poset() -> usize {
    let mut r = rng(13);
    for i in 0..RANDOM_INSTANCES {
        let g = random_graph(&mut r, 1..8, 0.5, i % 3 == 0);
        let m = functors::atoms_graph(&functors::clique_poset(&g, &budget()).unwrap());
        assert_eq!(functors::identify_atoms(&g, &m).unwrap(), graph::reflexive_closure(&g));
    }
    RANDOM_INSTANCES
}

// ---------- Hom ----------

fn small_pair(r: &mut rand_chacha::ChaCha8Rng) -> (Graph, Graph) {
    let g = random_graph(r, 1..4, 0.6, false);
    let h = random_graph(r, 1..4, 0.6, false);
    (g, h)
}

/// `Φ ∘ Ψ = 1` on cells; `Ψ ∘ Φ ≥ 1` and idempotent on cliques; cells
/// agree with brute-force enumeration of indexing functions.
pub fn psi_phi_identities() -> usize {
    let mut r = rng(14);
    let b = budget();
    let mut done = 0;
    while done < RANDOM_INSTANCES {
        let (g, h) = small_pair(&mut r);
        // Keep the clique enumeration small.
        if hom::enumerate_morphisms(&g, &h, &b).unwrap().len() > 16 {
            continue;
        }
        done += 1;
        let cells = hom_complex::hom_cells(&g, &h, &b).unwrap();
        for eta in &cells {
            let selections = hom_complex::psi(&g, &h, eta).unwrap();
            assert_eq!(&hom_complex::phi(&g, &h, &selections).unwrap(), eta);
        }
        let names: BTreeSet<String> = cells.iter().map(|c| c.name(&g, &h).to_string()).collect();
        let oracle: BTreeSet<String> = brute_cells(&g, &h).iter().map(|c| cell_name(&g, &h, c)).collect();
        assert_eq!(names, oracle, "{} -> {}", g.to_text(), h.to_text());

        let hc = hom_complex::hom_cliques(&g, &h, &b).unwrap();
        for i in 0..hc.poset.len() {
            let j = hc.psi_phi(&g, &h, i);
            assert!(hc.poset.leq(i, j));
            assert_eq!(hc.psi_phi(&g, &h, j), j);
        }
        let cert = hom_complex::clique_to_cell_dismantle(&g, &h, &b).unwrap();
        if hc.poset.len() <= 40 {
            check_certificate(Start::Poset(&hc.poset), &cert);
        } else {
            assert!(poset::verify_certificate(&hc.poset, &cert).unwrap());
        }
        let rest = poset::replay_certificate(&hc.poset, &cert).unwrap();
        assert_eq!(hc.as_cells(&g, &h, &rest).unwrap(), hom_complex::hom_face_poset(&g, &h, &b).unwrap());
    }
    RANDOM_INSTANCES
}

/// `hom(G, H)` against a direct product enumeration and the adjacency
/// definition over all edges (loops included).
pub fn hom_graph_oracle() -> usize {
    let mut r = rng(15);
    for _ in 0..RANDOM_INSTANCES {
        let (g, h) = small_pair(&mut r);
        let hn = neighborhoods(&h);
        let mut maps: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..g.len() {
            maps = maps.into_iter().flat_map(|m| (0..h.len()).map(move |w| [m.clone(), vec![w]].concat())).collect();
        }
        let edge = |p: usize, q: usize| hn[h.label(p).as_str()].contains(h.label(q).as_str());
        let morphisms: Vec<Vec<usize>> =
            maps.into_iter().filter(|m| g.edges().all(|(x, y)| edge(m[x], m[y]))).collect();
        let hg = hom::hom_graph(&g, &h, &budget()).unwrap();
        let found: Vec<Vec<usize>> = hg.morphisms.iter().map(|m| m.images().to_vec()).collect();
        assert_eq!(found, morphisms);
        for (i, f) in morphisms.iter().enumerate() {
            for (j, f2) in morphisms.iter().enumerate() {
                let adj = g.edges().all(|(x, y)| edge(f[x], f2[y]) && edge(f[y], f2[x]));
                assert_eq!(hg.graph.adjacent(i, j), adj);
            }
        }
    }
    RANDOM_INSTANCES
}

/// Folding a vertex of `G` or `H` dismantles `F_G(Hom(G, H))` onto a copy of
/// the face graph of the smaller Hom complex.
pub fn fold_induced_dismantlings() -> usize {
    let mut r = rng(16);
    let b = budget();
    let mut done = 0;
    while done < RANDOM_INSTANCES {
        let (g, h) = small_pair(&mut r);
        let side = if done % 2 == 0 { Side::Source } else { Side::Target };
        let folded = match side {
            Side::Source => &g,
            Side::Target => &h,
        };
        let Some((x, a)) = graph::find_dominated(folded).into_iter().next() else { continue };
        let smaller = folded.remove(&x).unwrap();
        let (big, small) = match side {
            Side::Source => (hom_complex::hom_face_graph(&g, &h, &b).unwrap(), hom_complex::hom_face_graph(&smaller, &h, &b).unwrap()),
            Side::Target => (hom_complex::hom_face_graph(&g, &h, &b).unwrap(), hom_complex::hom_face_graph(&g, &smaller, &b).unwrap()),
        };
        let cert = hom_complex::fold_induced_hom_dismantle(&g, &h, side, &x, &a, &b).unwrap();
        if big.len() <= 40 {
            check_certificate(Start::Graph(&big), &cert);
        } else {
            assert!(graph::verify_certificate(&big, &cert).unwrap());
        }
        let rest = graph::replay_certificate(&big, &cert).unwrap();
        assert!(isomorphic(&rest, &small), "{:?} fold {x}->{a} of {} -> {}", side, g.to_text(), h.to_text());
        done += 1;
    }
    done
}

/// For a stiff `G`, the identity is an isolated vertex of `hom(G, G)`.
pub fn stiff_identity_isolated() -> usize {
    let mut r = rng(17);
    let mut done = 0;
    while done < RANDOM_INSTANCES {
        let g = random_graph(&mut r, 1..6, 0.5, done % 2 == 0);
        if !graph::is_stiff(&g) {
            continue;
        }
        let id = hom::Morphism::identity(&g);
        for f in hom::enumerate_morphisms(&g, &g, &budget()).unwrap() {
            if f != id {
                assert!(!hom::morphisms_adjacent(&g, &g, &id, &f).unwrap(), "{}", g.to_text());
            }
        }
        done += 1;
    }
    done
}
