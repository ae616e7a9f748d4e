//! Line-oriented text formats for the three categories.
//!
//! ```text
//! # graph                 # poset                 # complex
//! v 0 loop                p a                     f a b c
//! v 1                     c d a                   f c d
//! e 0 1                   (cover d < a)
//! ```
//!
//! `e x x` is the same as `v x loop`. Edges and covers declare their
//! endpoints implicitly. A token starting with `#` comments out the rest of
//! the line.

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::Label;
use crate::poset::Poset;
use crate::simplicial::SimplicialComplex;

fn directives(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let toks: Vec<&str> = line.split_whitespace().take_while(|t| !t.starts_with('#')).collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut b = Graph::builder();
    for (line, toks) in directives(text) {
        match toks.as_slice() {
            ["v", id] => {
                b.vertex(*id);
            }
            ["v", id, "loop"] => {
                b.looped_vertex(*id);
            }
            ["e", x, y] => {
                b.edge(*x, *y);
            }
            [d, ..] if matches!(*d, "v" | "e") => {
                return Err(parse_err(line, format!("malformed `{d}` directive")));
            }
            [d, ..] => return Err(parse_err(line, format!("unknown directive `{d}`"))),
            [] => unreachable!(),
        }
    }
    b.build()
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut elements: Vec<Label> = Vec::new();
    let mut covers: Vec<(Label, Label)> = Vec::new();
    for (line, toks) in directives(text) {
        match toks.as_slice() {
            ["p", id] => elements.push(Label::new(id)),
            ["c", x, y] => {
                if x == y {
                    return Err(Error::Validation(format!("line {line}: cover `{x} < {x}` is reflexive")));
                }
                covers.push((Label::new(x), Label::new(y)));
            }
            [d, ..] if matches!(*d, "p" | "c") => {
                return Err(parse_err(line, format!("malformed `{d}` directive")));
            }
            [d, ..] => return Err(parse_err(line, format!("unknown directive `{d}`"))),
            [] => unreachable!(),
        }
    }
    for (x, y) in &covers {
        elements.push(x.clone());
        elements.push(y.clone());
    }
    Poset::from_covers(elements, &covers)
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut facets = Vec::new();
    for (line, toks) in directives(text) {
        match toks.as_slice() {
            ["f"] => return Err(parse_err(line, "empty facet")),
            ["f", vs @ ..] => facets.push(vs.iter().map(Label::new).collect::<Vec<_>>()),
            [d, ..] => return Err(parse_err(line, format!("unknown directive `{d}`"))),
            [] => unreachable!(),
        }
    }
    SimplicialComplex::from_facets(facets)
}

/// Canonical form: vertices in label order, then edges `u < v`.
pub fn graph_to_text(g: &Graph) -> String {
    let mut s = String::new();
    for v in 0..g.len() {
        s.push_str("v ");
        s.push_str(g.label(v).as_str());
        if g.has_loop(v) {
            s.push_str(" loop");
        }
        s.push('\n');
    }
    for (u, v) in g.edges().filter(|(u, v)| u != v) {
        s.push_str(&format!("e {} {}\n", g.label(u), g.label(v)));
    }
    s
}

/// Canonical form: every element, then the cover relation.
pub fn poset_to_text(p: &Poset) -> String {
    let mut s = String::new();
    for l in p.labels() {
        s.push_str(&format!("p {l}\n"));
    }
    for (x, y) in p.covers() {
        s.push_str(&format!("c {} {}\n", p.label(x), p.label(y)));
    }
    s
}

pub fn complex_to_text(k: &SimplicialComplex) -> String {
    let mut s = String::new();
    for f in k.facets() {
        s.push('f');
        for &v in f {
            s.push(' ');
            s.push_str(k.label(v).as_str());
        }
        s.push('\n');
    }
    s
}

pub(crate) fn digest(canonical: &str) -> String {
    hex::encode(Sha256::digest(canonical.as_bytes()))
}
