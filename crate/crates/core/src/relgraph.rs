//! Relation graphs of normalized factorization sets.
//!
//! An edge `(u, v)` means vertex `u` precedes vertex `v`: in some member of
//! the set, the component of degree `value(u)` sits to the left of (outside)
//! the component of degree `value(v)`. Rendered as `u ← v`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::factorization::sigma;
use crate::refine::NormalizedSet;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub id: usize,
    pub value: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationGraph {
    /// Sorted by id.
    pub vertices: Vec<Vertex>,
    /// `(u, v)` with `u` preceding `v`.
    pub edges: BTreeSet<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccChain {
    /// Outermost component first.
    pub components: Vec<RelationGraph>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphSplit {
    /// One-way edges `(u, v)`, `u` preceding `v`.
    pub directed: BTreeSet<(usize, usize)>,
    /// Two-way edges stored once as `(u, v)` with `u < v`.
    pub undirected: BTreeSet<(usize, usize)>,
}

/// Vertex order of `members[index]`, as vertex ids outermost first.
pub fn member_path(set: &NormalizedSet, index: usize) -> Vec<usize> {
    let s = sigma(set.canonical_member(), &set.members[index]).expect("normalized members share a basis");
    let mut path = vec![0; s.len()];
    for (id, &pos) in s.iter().enumerate() {
        path[pos] = id;
    }
    path
}

pub fn build_graph(set: &NormalizedSet) -> RelationGraph {
    let vertices = set
        .canonical_member()
        .parts()
        .iter()
        .enumerate()
        .map(|(id, &value)| Vertex { id, value })
        .collect();
    let mut edges = BTreeSet::new();
    for k in 0..set.members.len() {
        let path = member_path(set, k);
        for a in 0..path.len() {
            for b in a + 1..path.len() {
                edges.insert((path[a], path[b]));
            }
        }
    }
    RelationGraph { vertices, edges }
}

impl RelationGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn ids(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v.id).collect()
    }

    pub fn value(&self, id: usize) -> u64 {
        self.vertex(id).value
    }

    pub fn vertex(&self, id: usize) -> Vertex {
        let k = self
            .vertices
            .binary_search_by_key(&id, |v| v.id)
            .expect("vertex id belongs to the graph");
        self.vertices[k]
    }

    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    pub fn is_bidirectional(&self, u: usize, v: usize) -> bool {
        self.precedes(u, v) && self.precedes(v, u)
    }

    /// Induced subgraph on `ids`, keeping vertex ids.
    pub fn induced(&self, ids: &[usize]) -> RelationGraph {
        let keep: BTreeSet<usize> = ids.iter().copied().collect();
        RelationGraph {
            vertices: self.vertices.iter().filter(|v| keep.contains(&v.id)).copied().collect(),
            edges: self
                .edges
                .iter()
                .filter(|(u, v)| keep.contains(u) && keep.contains(v))
                .copied()
                .collect(),
        }
    }

    pub fn is_strongly_connected(&self) -> bool {
        let chain = scc_chain(self);
        chain.components.len() == 1
    }

    /// Open neighbourhood along two-way edges.
    pub fn neighborhood(&self, id: usize) -> Vec<usize> {
        self.vertices
            .iter()
            .map(|v| v.id)
            .filter(|&u| u != id && self.is_bidirectional(u, id))
            .collect()
    }

    /// `values[i]` precedes `values[j]` for all `i < j`.
    pub fn is_transitive_path(&self, path: &[usize]) -> bool {
        path.len() == self.len()
            && (0..path.len()).all(|i| (i + 1..path.len()).all(|j| self.precedes(path[i], path[j])))
    }

    pub fn values_of(&self, path: &[usize]) -> Vec<u64> {
        path.iter().map(|&id| self.value(id)).collect()
    }
}

pub fn scc_chain(g: &RelationGraph) -> SccChain {
    let mut pg: DiGraph<usize, ()> = DiGraph::new();
    let idx: BTreeMap<usize, _> = g.vertices.iter().map(|v| (v.id, pg.add_node(v.id))).collect();
    for &(u, v) in &g.edges {
        pg.add_edge(idx[&u], idx[&v], ());
    }
    // Tarjan lists sink components first; a sink here is the innermost part.
    let mut comps: Vec<Vec<usize>> = tarjan_scc(&pg)
        .into_iter()
        .map(|c| {
            let mut ids: Vec<usize> = c.into_iter().map(|n| pg[n]).collect();
            ids.sort_unstable();
            ids
        })
        .collect();
    comps.reverse();
    SccChain {
        components: comps.iter().map(|c| g.induced(c)).collect(),
    }
}

pub fn split_subgraphs(g: &RelationGraph) -> Result<SubgraphSplit> {
    if !g.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let mut split = SubgraphSplit {
        directed: BTreeSet::new(),
        undirected: BTreeSet::new(),
    };
    for &(u, v) in &g.edges {
        if g.precedes(v, u) {
            split.undirected.insert((u.min(v), u.max(v)));
        } else {
            split.directed.insert((u, v));
        }
    }
    Ok(split)
}

fn require_component(g: &RelationGraph) -> Result<()> {
    if !g.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    Ok(())
}

/// Product of the two-way neighbourhood of each vertex.
pub fn neighborhood_products(g: &RelationGraph) -> Result<BTreeMap<usize, u64>> {
    require_component(g)?;
    Ok(g.vertices
        .iter()
        .map(|v| {
            let e = g.neighborhood(v.id).iter().map(|&u| g.value(u)).product();
            (v.id, e)
        })
        .collect())
}

/// Vertices whose value is at least every two-way neighbour's value, outermost
/// first.
pub fn locally_maximal(g: &RelationGraph) -> Vec<usize> {
    let mut lm: Vec<usize> = g
        .vertices
        .iter()
        .filter(|v| g.neighborhood(v.id).iter().all(|&u| g.value(u) <= v.value))
        .map(|v| v.id)
        .collect();
    let rank = |v: usize, lm: &[usize]| lm.iter().filter(|&&u| u != v && g.precedes(v, u)).count();
    let snapshot = lm.clone();
    lm.sort_by_key(|&v| std::cmp::Reverse(rank(v, &snapshot)));
    lm
}

/// Partition index of every vertex relative to the locally maximal chain
/// `d_1, …, d_m`: `d_i` gets `i`; a vertex preceded by no `d_i` gets 0; one
/// preceding no `d_i` gets `m + 1`; otherwise the `i` with the vertex in
/// `U(d_i)` but not `U(d_{i+1})`. A vertex outside every `U(d_i)` gets the
/// number of `d_i` strictly before it.
pub fn sink_partition(g: &RelationGraph) -> BTreeMap<usize, usize> {
    let lm = locally_maximal(g);
    let m = lm.len();
    let hoods: Vec<Vec<usize>> = lm.iter().map(|&d| g.neighborhood(d)).collect();
    let mut w = BTreeMap::new();
    for (i, &d) in lm.iter().enumerate() {
        w.insert(d, i + 1);
    }
    for v in g.ids() {
        if w.contains_key(&v) {
            continue;
        }
        let k = if lm.iter().all(|&d| !g.precedes(d, v)) {
            0
        } else if lm.iter().all(|&d| !g.precedes(v, d)) {
            m + 1
        } else {
            (0..m)
                .find(|&i| hoods[i].contains(&v) && (i + 1 == m || !hoods[i + 1].contains(&v)))
                .map(|i| i + 1)
                .unwrap_or_else(|| lm.iter().filter(|&&d| !g.precedes(v, d)).count())
        };
        w.insert(v, k);
    }
    w
}

/// Depth-first topological sorting of the one-way subgraph, with ties broken
/// by partition index, then larger value. Vertices are listed by increasing
/// finish time, which puts the outermost vertex first.
pub fn max_sink_order(g: &RelationGraph) -> Result<Vec<usize>> {
    require_component(g)?;
    if g.len() < 2 {
        return Err(Error::TooSmall);
    }
    let w = sink_partition(g);
    let key = |v: &usize| (w[v], std::cmp::Reverse(g.value(*v)));
    let mut roots = g.ids();
    roots.sort_by_key(key);
    let arcs: BTreeMap<usize, Vec<usize>> = g
        .ids()
        .into_iter()
        .map(|v| {
            let mut out: Vec<usize> = g
                .ids()
                .into_iter()
                .filter(|&u| g.precedes(u, v) && !g.precedes(v, u))
                .collect();
            out.sort_by_key(key);
            (v, out)
        })
        .collect();

    fn visit(v: usize, arcs: &BTreeMap<usize, Vec<usize>>, seen: &mut BTreeSet<usize>, order: &mut Vec<usize>) {
        seen.insert(v);
        for &u in &arcs[&v] {
            if !seen.contains(&u) {
                visit(u, arcs, seen, order);
            }
        }
        order.push(v);
    }

    let mut seen = BTreeSet::new();
    let mut order = Vec::with_capacity(g.len());
    for r in roots {
        if !seen.contains(&r) {
            visit(r, &arcs, &mut seen, &mut order);
        }
    }
    Ok(order)
}

/// Every vertex order in which each vertex precedes all later ones.
pub fn transitive_hamiltonian_paths(g: &RelationGraph) -> Vec<Vec<usize>> {
    fn extend(g: &RelationGraph, path: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(path.clone());
            return;
        }
        for k in 0..left.len() {
            let v = left[k];
            if path.iter().all(|&u| g.precedes(u, v)) {
                left.remove(k);
                path.push(v);
                extend(g, path, left, out);
                path.pop();
                left.insert(k, v);
            }
        }
    }
    let mut out = Vec::new();
    extend(g, &mut Vec::new(), &mut g.ids(), &mut out);
    out
}

/// Adjacent transpositions turning one transitive path into another.
///
/// Returns every intermediate state, `from` first and `to` last.
pub fn bubble_sort(from: &[usize], to: &[usize]) -> Vec<Vec<usize>> {
    let target: BTreeMap<usize, usize> = to.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut cur = from.to_vec();
    let mut states = vec![cur.clone()];
    while let Some(k) = (0..cur.len().saturating_sub(1)).find(|&k| target[&cur[k]] > target[&cur[k + 1]]) {
        cur.swap(k, k + 1);
        states.push(cur.clone());
    }
    states
}

/// DOT rendering with one cluster per strongly connected component.
pub fn to_dot(g: &RelationGraph) -> String {
    let chain = scc_chain(g);
    let mut s = String::from("digraph relation {\n  rankdir=LR;\n");
    for (k, c) in chain.components.iter().enumerate() {
        let _ = writeln!(s, "  subgraph cluster_{k} {{");
        let _ = writeln!(s, "    label=\"G{}\";", k + 1);
        for v in &c.vertices {
            let _ = writeln!(s, "    v{} [label=\"{}#{}\"];", v.id, v.value, v.id);
        }
        s.push_str("  }\n");
    }
    for &(u, v) in &g.edges {
        if g.precedes(v, u) {
            if u < v {
                let _ = writeln!(s, "  v{u} -> v{v} [dir=both];");
            }
        } else {
            let _ = writeln!(s, "  v{v} -> v{u};");
        }
    }
    s.push_str("}\n");
    s
}
