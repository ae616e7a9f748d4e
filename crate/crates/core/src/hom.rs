//! Graph morphisms, the reflexive morphism graph `hom(G, H)`, homotopy of
//! morphisms and the strong-deformation-retract homotopy of a dismantling.

use std::collections::VecDeque;

use crate::budget::{Budget, Meter};
use crate::certificate::{self, Certificate};
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::label::Label;

/// A map `V(G) → V(H)` preserving adjacency (loops included). Vertices are
/// referred to by index; the digests tie a morphism to its graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    source: String,
    target: String,
    images: Vec<usize>,
}

pub(crate) fn is_morphism(g: &Graph, h: &Graph, images: &[usize]) -> bool {
    images.len() == g.len() && g.edges().all(|(x, y)| h.adjacent(images[x], images[y]))
}

impl Morphism {
    pub(crate) fn new_unchecked(g: &Graph, h: &Graph, images: Vec<usize>) -> Morphism {
        Morphism { source: g.digest(), target: h.digest(), images }
    }

    /// Validates that `images[v]` (a vertex index of `h`) defines a morphism.
    pub fn from_images(g: &Graph, h: &Graph, images: Vec<usize>) -> Result<Morphism> {
        if images.iter().any(|&w| w >= h.len()) || !is_morphism(g, h, &images) {
            return Err(Error::Input("assignment does not preserve adjacency".into()));
        }
        Ok(Morphism::new_unchecked(g, h, images))
    }

    /// From `(vertex of G, vertex of H)` pairs covering all of `V(G)`.
    pub fn from_pairs(g: &Graph, h: &Graph, pairs: &[(&str, &str)]) -> Result<Morphism> {
        let mut images = vec![usize::MAX; g.len()];
        for (x, y) in pairs {
            images[g.vertex(x)?] = h.vertex(y)?;
        }
        if let Some(v) = images.iter().position(|&w| w == usize::MAX) {
            return Err(Error::Input(format!("vertex `{}` has no image", g.label(v))));
        }
        Morphism::from_images(g, h, images)
    }

    /// Images listed in source vertex order, e.g. `["a", "c", "a"]`.
    pub fn from_labels<S: AsRef<str>>(g: &Graph, h: &Graph, images: &[S]) -> Result<Morphism> {
        if images.len() != g.len() {
            return Err(Error::Input(format!("expected {} images, got {}", g.len(), images.len())));
        }
        let images = images.iter().map(|w| h.vertex(w.as_ref())).collect::<Result<Vec<_>>>()?;
        Morphism::from_images(g, h, images)
    }

    pub fn identity(g: &Graph) -> Morphism {
        Morphism::new_unchecked(g, g, (0..g.len()).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn source_digest(&self) -> &str {
        &self.source
    }

    pub fn target_digest(&self) -> &str {
        &self.target
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Result<Morphism> {
        if self.target != other.source {
            return Err(Error::Input("morphisms are not composable".into()));
        }
        Ok(Morphism {
            source: self.source.clone(),
            target: other.target.clone(),
            images: self.images.iter().map(|&w| other.images[w]).collect(),
        })
    }

    /// Canonical name: a JSON object from source labels to image labels, in
    /// source vertex order, e.g. `{"0":"a","1":"c","2":"a"}`.
    pub fn name(&self, g: &Graph, h: &Graph) -> Label {
        let body: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(v, &w)| format!("{}:{}", json_str(g.label(v)), json_str(h.label(w))))
            .collect();
        Label::new(format!("{{{}}}", body.join(",")))
    }

    /// Image labels in source vertex order.
    pub fn image_labels<'h>(&self, h: &'h Graph) -> Vec<&'h Label> {
        self.images.iter().map(|&w| h.label(w)).collect()
    }

    fn check(&self, g: &Graph, h: &Graph) -> Result<()> {
        if self.source != g.digest() || self.target != h.digest() {
            return Err(Error::Input("morphism belongs to a different pair of graphs".into()));
        }
        Ok(())
    }
}

pub(crate) fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("string serialization is infallible")
}

/// All morphisms `G → H`, lexicographic in the images under vertex order.
/// The budget bounds the number of partial-assignment extensions tried.
pub fn enumerate_morphisms(g: &Graph, h: &Graph, budget: &Budget) -> Result<Vec<Morphism>> {
    let mut meter = Meter::new(budget.max_morphisms, "morphism extensions");
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(g.len());
    extend(g, h, &mut images, &mut out, &mut meter)?;
    let (gd, hd) = (g.digest(), h.digest());
    Ok(out.into_iter().map(|images| Morphism { source: gd.clone(), target: hd.clone(), images }).collect())
}

fn extend(g: &Graph, h: &Graph, images: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, meter: &mut Meter) -> Result<()> {
    let v = images.len();
    if v == g.len() {
        out.push(images.clone());
        return Ok(());
    }
    for w in 0..h.len() {
        meter.tick()?;
        if g.has_loop(v) && !h.has_loop(w) {
            continue;
        }
        if g.neighbors(v).ones().take_while(|&u| u < v).all(|u| h.adjacent(images[u], w)) {
            images.push(w);
            extend(g, h, images, out, meter)?;
            images.pop();
        }
    }
    Ok(())
}

fn adjacent_unchecked(g: &Graph, h: &Graph, f: &[usize], f2: &[usize]) -> bool {
    g.edges().all(|(x, y)| h.adjacent(f[x], f2[y]) && h.adjacent(f[y], f2[x]))
}

/// `f ∼ f'` in `hom(G, H)`: every edge `x ∼ y` of `G` (loops included)
/// satisfies `f(x) ∼ f'(y)`.
pub fn morphisms_adjacent(g: &Graph, h: &Graph, f: &Morphism, f2: &Morphism) -> Result<bool> {
    f.check(g, h)?;
    f2.check(g, h)?;
    Ok(adjacent_unchecked(g, h, &f.images, &f2.images))
}

/// `hom(G, H)` with the morphism behind each vertex.
#[derive(Debug, Clone)]
pub struct HomGraph {
    pub graph: Graph,
    /// `morphisms[i]` is vertex `i` of `graph`.
    pub morphisms: Vec<Morphism>,
}

impl HomGraph {
    pub fn vertex_of(&self, f: &Morphism) -> Option<usize> {
        self.morphisms.iter().position(|m| m == f)
    }
}

/// The reflexive graph on all morphisms `G → H`, vertices named by
/// [`Morphism::name`].
pub fn hom_graph(g: &Graph, h: &Graph, budget: &Budget) -> Result<HomGraph> {
    let ms = enumerate_morphisms(g, h, budget)?;
    let names: Vec<Label> = ms.iter().map(|m| m.name(g, h)).collect();
    let graph = Graph::from_fn(names.clone(), |i, j| adjacent_unchecked(g, h, &ms[i].images, &ms[j].images));
    let mut morphisms = ms.clone();
    for (m, name) in ms.into_iter().zip(&names) {
        morphisms[graph.index_of(name).expect("vertex exists")] = m;
    }
    Ok(HomGraph { graph, morphisms })
}

/// Whether `f` and `f'` lie in the same component of `hom(G, H)`.
pub fn homotopic(g: &Graph, h: &Graph, f: &Morphism, f2: &Morphism, budget: &Budget) -> Result<bool> {
    Ok(homotopy_path(g, h, f, f2, budget)?.is_some())
}

/// A shortest path `f = h_0 ∼ h_1 ∼ … ∼ h_N = f'` in `hom(G, H)`.
pub fn homotopy_path(g: &Graph, h: &Graph, f: &Morphism, f2: &Morphism, budget: &Budget) -> Result<Option<Vec<Morphism>>> {
    f.check(g, h)?;
    f2.check(g, h)?;
    let hg = hom_graph(g, h, budget)?;
    let start = hg.vertex_of(f).ok_or_else(|| Error::Internal("morphism missing from hom graph".into()))?;
    let goal = hg.vertex_of(f2).ok_or_else(|| Error::Internal("morphism missing from hom graph".into()))?;
    let mut prev = vec![usize::MAX; hg.graph.len()];
    prev[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if u == goal {
            let mut path = vec![goal];
            while *path.last().unwrap() != start {
                path.push(prev[*path.last().unwrap()]);
            }
            path.reverse();
            return Ok(Some(path.into_iter().map(|i| hg.morphisms[i].clone()).collect()));
        }
        for w in hg.graph.neighbors(u).ones() {
            if prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    Ok(None)
}

/// The fold retraction `r_{x,a}: G → G - x` sending `x` to `a`.
pub fn retraction(g: &Graph, x: &str, a: &str) -> Result<Morphism> {
    let smaller = graph::fold(g, x, a)?;
    let (xi, ai) = (g.vertex(x)?, g.vertex(a)?);
    let images = (0..g.len())
        .map(|v| smaller.index_of(g.label(if v == xi { ai } else { v })).expect("vertex survives"))
        .collect();
    Ok(Morphism::new_unchecked(g, &smaller, images))
}

/// The inclusion `i_x: G - x → G`.
pub fn inclusion(g: &Graph, x: &str) -> Result<Morphism> {
    let smaller = g.remove(x)?;
    let images = smaller.labels().iter().map(|l| g.index_of(l).expect("vertex exists")).collect();
    Ok(Morphism::new_unchecked(&smaller, g, images))
}

/// The homotopy `1_G = h_0 ∼ h_1 ∼ … ∼ h_N` where `h_i` composes the first
/// `i` fold retractions of `cert` (as self-maps of `G`). Every `h_i` fixes the
/// residual pointwise and `h_N` retracts `G` onto it.
pub fn sdr_homotopy(g: &Graph, cert: &Certificate) -> Result<Vec<Morphism>> {
    certificate::replay(g, cert)?;
    let mut current: Vec<usize> = (0..g.len()).collect();
    let mut out = vec![Morphism::identity(g)];
    for step in &cert.steps {
        let x = g.vertex(step.deleted.as_str())?;
        let a = g.vertex(step.witness.as_str())?;
        for w in &mut current {
            if *w == x {
                *w = a;
            }
        }
        out.push(Morphism::new_unchecked(g, g, current.clone()));
    }
    Ok(out)
}

/// Checks the three defining properties of a strong-deformation-retract
/// homotopy onto the residual of `cert`.
pub fn is_sdr_homotopy(g: &Graph, cert: &Certificate, homotopy: &[Morphism]) -> Result<bool> {
    let residual = certificate::replay(g, cert)?;
    let Some((first, _)) = homotopy.split_first() else { return Ok(false) };
    let last = homotopy.last().expect("nonempty");
    let valid = |m: &Morphism| m.check(g, g).is_ok() && is_morphism(g, g, &m.images);
    Ok(homotopy.iter().all(valid)
        && *first == Morphism::identity(g)
        && homotopy.windows(2).all(|w| adjacent_unchecked(g, g, &w[0].images, &w[1].images))
        && homotopy.iter().all(|m| residual.ones().all(|v| m.images[v] == v))
        && last.images.iter().all(|&w| residual.contains(w)))
}
