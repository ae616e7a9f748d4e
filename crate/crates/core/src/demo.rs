//! The worked examples replayed by `dismantle paper-demo`: small graphs and
//! posets with known answers, and the morphisms from the path `P3` to the
//! loopless triangle on `a`, `b`, `c`, named by letters.

use serde::Serialize;

use crate::budget::Budget;
use crate::certificate::{Certificate, Step};
use crate::error::Result;
use crate::functors;
use crate::graph::{self, Graph};
use crate::hom::{self, Morphism};
use crate::hom_complex::{self, Side};
use crate::label::Label;
use crate::poset;
use crate::text;

/// The twelve morphisms `P3 → K3` as `(letter, images of 0, 1, 2)`.
pub const P3_K3_MORPHISMS: [(&str, [&str; 3]); 12] = [
    ("u", ["a", "c", "a"]),
    ("v", ["b", "c", "b"]),
    ("w", ["b", "a", "b"]),
    ("x", ["c", "a", "c"]),
    ("y", ["c", "b", "c"]),
    ("z", ["a", "b", "a"]),
    ("f", ["a", "c", "b"]),
    ("g", ["b", "c", "a"]),
    ("h", ["b", "a", "c"]),
    ("j", ["c", "a", "b"]),
    ("k", ["a", "b", "c"]),
    ("l", ["c", "b", "a"]),
];

/// Deletion order of cliques of `hom(P3, K3)` onto the cells of
/// `Hom(P3, K3)`; each entry lists the letters of one clique.
pub const CLIQUE_SEQUENCE: [&str; 18] = [
    "fuv", "guv", "fgu", "fgv", "fg", "uv", "hwx", "jwx", "hjw", "hjx", "wx", "hj", "kyz", "lyz", "kly", "klz", "yz", "kl",
];

/// Deletion order of cells of `Hom(P3, K3)` (given by the letters of their
/// vertices) onto the copy of `Hom(K2, K3)` obtained by folding 2 onto 0.
pub const FACE_GRAPH_SEQUENCE: [&str; 18] = [
    "fu", "gu", "fv", "gv", "hw", "jw", "hx", "jx", "ky", "ly", "kz", "lz", "f", "g", "h", "j", "k", "l",
];

pub const DIAMOND: &str = "c d b\nc d c\nc b a\nc c a\n";

/// Loopless triangle on `a`, `b`, `c`.
pub fn triangle_abc() -> Graph {
    let mut b = Graph::builder();
    b.edge("a", "b").edge("b", "c").edge("a", "c");
    b.build().expect("valid graph")
}

pub fn p3() -> Graph {
    Graph::named("P3").expect("valid name")
}

pub fn letter_morphism(letter: char) -> Morphism {
    let (_, images) = P3_K3_MORPHISMS.iter().find(|(l, _)| l.starts_with(letter)).expect("known letter");
    Morphism::from_labels(&p3(), &triangle_abc(), images).expect("listed maps are morphisms")
}

fn letters(word: &str) -> Vec<Morphism> {
    word.chars().map(letter_morphism).collect()
}

/// Label of the clique of `hom(P3, K3)` spelled by `word`.
pub fn clique_label(word: &str) -> Label {
    let (g, h) = (p3(), triangle_abc());
    let names: Vec<Label> = letters(word).iter().map(|m| m.name(&g, &h)).collect();
    Label::set(&names)
}

/// Label of the cell `Φ(word)` of `Hom(P3, K3)`.
pub fn cell_label(word: &str) -> Result<Label> {
    let (g, h) = (p3(), triangle_abc());
    Ok(hom_complex::phi(&g, &h, &letters(word))?.name(&g, &h))
}

#[derive(Debug, Clone, Serialize)]
pub struct DemoItem {
    pub item: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn item(name: &'static str, run: impl FnOnce() -> Result<(bool, String)>) -> DemoItem {
    match run() {
        Ok((pass, detail)) => DemoItem { item: name, pass, detail },
        Err(e) => DemoItem { item: name, pass: false, detail: format!("error: {e}") },
    }
}

fn certificate_of(start_hash: String, category: crate::Category, steps: Vec<Step>) -> Certificate {
    Certificate { category, start_hash, steps }
}

/// Replays every worked example.
pub fn run(budget: &Budget) -> Vec<DemoItem> {
    let b = budget;
    vec![
        item("P3: 2 is dominated by 0", || Ok((graph::dominates(&p3(), "0", "2")?, String::new()))),
        item("P3 folds onto K2 by deleting 2", || {
            let folded = graph::fold(&p3(), "2", "0")?;
            let cert = graph::dismantles_onto(&p3(), &["0", "1"])?;
            let ok = folded == Graph::named("K2")? && cert.as_ref().map(|c| c.steps.clone()) == Some(vec![Step::new("2", "0")]);
            Ok((ok, cert.map(|c| c.to_json()).unwrap_or_default()))
        }),
        item("reflexive cycles C3..C8 are pairwise inequivalent, C4..C8 stiff", || {
            let mut ok = true;
            for n in 3..=8 {
                let cn = Graph::named(&format!("C{n}°"))?;
                ok &= graph::is_stiff(&cn) == (n >= 4);
                for m in n + 1..=8 {
                    ok &= !graph::same_d_homotopy_type(&cn, &Graph::named(&format!("C{m}°"))?, b)?;
                }
            }
            ok &= graph::same_d_homotopy_type(&Graph::named("C3°")?, &Graph::named("K1°")?, b)?;
            Ok((ok, String::new()))
        }),
        item("12 morphisms P3 -> K3", || {
            let (g, h) = (p3(), triangle_abc());
            let all = hom::enumerate_morphisms(&g, &h, b)?;
            let listed: Vec<Morphism> = P3_K3_MORPHISMS.iter().map(|(_, im)| Morphism::from_labels(&g, &h, im)).collect::<Result<_>>()?;
            let ok = all.len() == 12 && listed.iter().all(|m| all.contains(m));
            Ok((ok, format!("{} morphisms", all.len())))
        }),
        item("hom(P3, K3): three 4-cliques joined by uz, vw, xy", || {
            let (g, h) = (p3(), triangle_abc());
            let hg = hom::hom_graph(&g, &h, b)?;
            let mut expected = Vec::new();
            for block in ["fguv", "hjwx", "klyz"] {
                for (i, p) in block.chars().enumerate() {
                    for q in block.chars().skip(i + 1) {
                        expected.push((p, q));
                    }
                }
            }
            expected.extend([('u', 'z'), ('v', 'w'), ('x', 'y')]);
            let vertex = |c: char| hg.vertex_of(&letter_morphism(c)).expect("morphism is a vertex");
            let ok = expected.iter().all(|&(p, q)| hg.graph.adjacent(vertex(p), vertex(q)))
                && hg.graph.edge_count() == expected.len() + 12;
            Ok((ok, format!("{} edges besides loops", hg.graph.edge_count() - 12)))
        }),
        item("fold 2 -> 0 of P3 is adjacent to the identity", || {
            let cert = graph::dismantles_onto(&p3(), &["0", "1"])?.expect("P3 folds onto K2");
            let hs = hom::sdr_homotopy(&p3(), &cert)?;
            Ok((hs.len() == 2 && hom::is_sdr_homotopy(&p3(), &cert, &hs)?, String::new()))
        }),
        item("diamond: a, d not dismantlable; d weakly dominated by a; a dominates d in Comp", || {
            let p = text::parse_poset(DIAMOND)?;
            let strict = poset::dismantlable_elements(&p);
            let weak = poset::weakly_dismantlable_elements(&p);
            let ok = strict.iter().all(|(x, _, _)| x.as_str() != "a" && x.as_str() != "d")
                && weak.contains(&(Label::new("d"), Label::new("a")))
                && graph::dominates(&functors::comp(&p), "a", "d")?;
            Ok((ok, String::new()))
        }),
        item("m(C(G)) = G° for P3, C4°, C5", || {
            let mut ok = true;
            for name in ["P3", "C4°", "C5"] {
                let g = Graph::named(name)?;
                let m = functors::atoms_graph(&functors::clique_poset(&g, b)?);
                ok &= functors::identify_atoms(&g, &m)? == graph::reflexive_closure(&g);
            }
            Ok((ok, String::new()))
        }),
        item("cells uvfg and uz of Hom(P3, K3)", || {
            let square = cell_label("uvfg")?;
            let edge = cell_label("uz")?;
            let ok = square.as_str() == r#"{"0":["a","b"],"1":["c"],"2":["a","b"]}"#
                && edge.as_str() == r#"{"0":["a"],"1":["b","c"],"2":["a"]}"#;
            Ok((ok, format!("{square} {edge}")))
        }),
        item("clique sequence fuv, guv, ..., kl dismantles C(hom(P3, K3)) onto the cells", || {
            let (g, h) = (p3(), triangle_abc());
            let hc = hom_complex::hom_cliques(&g, &h, b)?;
            let steps: Vec<Step> = CLIQUE_SEQUENCE
                .iter()
                .map(|w| {
                    // The witness of a clique c is Ψ(Φ(c)).
                    let i = hc.poset.index_of(&clique_label(w)).expect("clique exists");
                    Step { deleted: clique_label(w), witness: hc.poset.label(hc.psi_phi(&g, &h, i)).clone() }
                })
                .collect();
            let cert = certificate_of(hc.poset.digest(), crate::Category::Poset, steps);
            let rest = poset::replay_certificate(&hc.poset, &cert)?;
            let ok = hc.as_cells(&g, &h, &rest)? == hom_complex::hom_face_poset(&g, &h, b)?;
            Ok((ok, format!("{} -> {} elements", hc.poset.len(), rest.len())))
        }),
        item("cells fu, ..., lz then f, ..., l dismantle F_G(Hom(P3, K3)) onto F_G(Hom(K2, K3))", || {
            let (g, h) = (p3(), triangle_abc());
            let fg = hom_complex::hom_face_graph(&g, &h, b)?;
            let order: Vec<Label> = FACE_GRAPH_SEQUENCE.iter().map(|w| cell_label(w)).collect::<Result<_>>()?;
            let cert = graph::certificate_from_order(&fg, &order)?;
            let rest = graph::replay_certificate(&fg, &cert)?;
            let small = hom_complex::hom_face_graph(&Graph::named("K2")?, &h, b)?;
            let ok = rest.len() == 12 && graph::are_isomorphic(&rest, &small, b)?.is_some();
            let computed = hom_complex::fold_induced_hom_dismantle(&g, &h, Side::Source, "2", "0", b)?;
            Ok((ok && computed.len() == 18, format!("{} deletions", cert.len())))
        }),
        item("F_G(Hom(K2, K3)) is stiff", || {
            let fg = hom_complex::hom_face_graph(&Graph::named("K2")?, &triangle_abc(), b)?;
            Ok((fg.len() == 12 && graph::is_stiff(&fg), format!("{} vertices", fg.len())))
        }),
    ]
}
