//! Clique enumeration. Loops are ignored: a clique is a nonempty set of
//! distinct, pairwise adjacent vertices.

use fixedbitset::FixedBitSet;

use crate::budget::Meter;
use crate::error::Result;
use crate::graph::Graph;

fn strict_neighbors(g: &Graph, v: usize) -> FixedBitSet {
    let mut n = g.neighbors(v).clone();
    n.set(v, false);
    n
}

/// Every clique, ordered by size and then lexicographically.
pub(crate) fn all_cliques(g: &Graph, limit: u64) -> Result<Vec<Vec<usize>>> {
    let nbrs: Vec<FixedBitSet> = (0..g.len()).map(|v| strict_neighbors(g, v)).collect();
    let mut meter = Meter::new(limit, "cliques");
    let mut out = Vec::new();
    let mut current = Vec::new();
    for v in 0..g.len() {
        let mut cand = nbrs[v].clone();
        cand.set_range(..v + 1, false);
        current.push(v);
        extend(&nbrs, &mut current, &cand, &mut out, &mut meter)?;
        current.pop();
    }
    out.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn extend(
    nbrs: &[FixedBitSet],
    current: &mut Vec<usize>,
    cand: &FixedBitSet,
    out: &mut Vec<Vec<usize>>,
    meter: &mut Meter,
) -> Result<()> {
    meter.tick()?;
    out.push(current.clone());
    for w in cand.ones() {
        let mut next = cand.clone();
        next.intersect_with(&nbrs[w]);
        next.set_range(..w + 1, false);
        current.push(w);
        extend(nbrs, current, &next, out, meter)?;
        current.pop();
    }
    Ok(())
}

/// Maximal cliques (Bron–Kerbosch with pivoting), each sorted, in
/// lexicographic order.
pub(crate) fn maximal_cliques(g: &Graph, limit: u64) -> Result<Vec<Vec<usize>>> {
    let n = g.len();
    let nbrs: Vec<FixedBitSet> = (0..n).map(|v| strict_neighbors(g, v)).collect();
    let mut meter = Meter::new(limit, "cliques");
    let mut out = Vec::new();
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    bron_kerbosch(&nbrs, &mut Vec::new(), p, FixedBitSet::with_capacity(n), &mut out, &mut meter)?;
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    nbrs: &[FixedBitSet],
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
    meter: &mut Meter,
) -> Result<()> {
    meter.tick()?;
    if p.is_clear() {
        if x.is_clear() && !r.is_empty() {
            out.push(r.clone());
        }
        return Ok(());
    }
    let pivot = p.ones().chain(x.ones()).max_by_key(|&u| nbrs[u].intersection(&p).count()).expect("P is nonempty");
    let mut todo = p.clone();
    todo.difference_with(&nbrs[pivot]);
    for v in todo.ones() {
        let mut np = p.clone();
        np.intersect_with(&nbrs[v]);
        let mut nx = x.clone();
        nx.intersect_with(&nbrs[v]);
        r.push(v);
        bron_kerbosch(nbrs, r, np, nx, out, meter)?;
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
    Ok(())
}
