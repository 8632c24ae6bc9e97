//! Coxeter graphs: finite simple graphs with a fixed total vertex order.
//!
//! The graph encodes the presentation of a right-angled Coxeter group: one
//! involutive generator per vertex, m(s,s') = 2 (commuting) exactly when s
//! and s' are adjacent, m(s,s') = infinity otherwise. Vertex names are
//! opaque strings; the total order is construction order and every
//! "first witness" or "lexicographically least" promise in this crate is
//! relative to it.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};

pub mod io;

/// Index of a vertex in construction order.
pub type VertexId = u32;

/// Set of vertices of one graph, ordered by vertex order.
pub type VertexSet = BTreeSet<VertexId>;

#[derive(Debug)]
struct Inner {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    /// Bitset adjacency matrix, `stride` words per row.
    bits: Vec<u64>,
    stride: usize,
}

/// A finite simple graph with named, totally ordered vertices.
///
/// Cheap to clone (the structure is shared); equality is structural.
#[derive(Clone, Debug)]
pub struct CoxeterGraph {
    inner: Arc<Inner>,
}

impl PartialEq for CoxeterGraph {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.names == other.inner.names && self.inner.bits == other.inner.bits)
    }
}

impl Eq for CoxeterGraph {}

impl CoxeterGraph {
    /// Builds a graph from vertex names (in order) and edges given by name.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut b = GraphBuilder::new();
        for v in vertices {
            b.add_vertex(v.as_ref())?;
        }
        for (u, v) in edges {
            let u = b.vertex(u.as_ref())?;
            let v = b.vertex(v.as_ref())?;
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Path on `n` vertices named "0".."n-1", edges i -- i+1.
    pub fn path(n: usize) -> Self {
        let mut b = GraphBuilder::new();
        let ids: Vec<_> = (0..n).map(|i| b.add_vertex(&i.to_string()).unwrap()).collect();
        for w in ids.windows(2) {
            b.add_edge(w[0], w[1]).unwrap();
        }
        b.build()
    }

    /// Cycle on `n >= 3` vertices named "0".."n-1".
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut b = GraphBuilder::new();
        let ids: Vec<_> = (0..n).map(|i| b.add_vertex(&i.to_string()).unwrap()).collect();
        for w in ids.windows(2) {
            b.add_edge(w[0], w[1]).unwrap();
        }
        b.add_edge(ids[n - 1], ids[0]).unwrap();
        b.build()
    }

    /// Complete graph on `n` vertices named "0".."n-1".
    pub fn complete(n: usize) -> Self {
        let mut b = GraphBuilder::new();
        let ids: Vec<_> = (0..n).map(|i| b.add_vertex(&i.to_string()).unwrap()).collect();
        for i in 0..n {
            for j in i + 1..n {
                b.add_edge(ids[i], ids[j]).unwrap();
            }
        }
        b.build()
    }

    pub fn vertex_count(&self) -> usize {
        self.inner.names.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        0..self.vertex_count() as VertexId
    }

    /// Resolves a vertex name; unknown names are input errors.
    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.inner
            .index
            .get(name)
            .copied()
            .ok_or_else(|| Error::input(format!("unknown vertex {name:?}")))
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.inner.names[v as usize]
    }

    pub fn names(&self, set: &VertexSet) -> Vec<&str> {
        set.iter().map(|&v| self.name(v)).collect()
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        let i = u as usize * self.inner.stride + (v as usize >> 6);
        self.inner.bits[i] >> (v as usize & 63) & 1 == 1
    }

    pub fn degree(&self, v: VertexId) -> usize {
        let s = self.inner.stride;
        let row = &self.inner.bits[v as usize * s..(v as usize + 1) * s];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Open neighbourhood N(v).
    pub fn neighbors(&self, v: VertexId) -> VertexSet {
        self.vertices().filter(|&u| self.adjacent(v, u)).collect()
    }

    /// Closed star st(v) = N(v) together with v itself.
    pub fn star(&self, v: VertexId) -> VertexSet {
        let mut s = self.neighbors(v);
        s.insert(v);
        s
    }

    /// All edges as ordered pairs (u, v) with u < v, in vertex order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let n = self.vertex_count() as VertexId;
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        let s: usize = self.vertices().map(|v| self.degree(v)).sum();
        s / 2
    }

    /// First triangle in vertex order, if any.
    pub fn triangle_witness(&self) -> Option<[VertexId; 3]> {
        let n = self.vertex_count() as VertexId;
        for u in 0..n {
            for v in u + 1..n {
                if !self.adjacent(u, v) {
                    continue;
                }
                for w in v + 1..n {
                    if self.adjacent(u, w) && self.adjacent(v, w) {
                        return Some([u, v, w]);
                    }
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.triangle_witness().is_none()
    }

    /// First ordered pair (v, v') with st(v) contained in st(v'), if any.
    ///
    /// The star property asserts no such pair exists. Containment between
    /// stars of distinct vertices can only happen when v and v' are adjacent
    /// (otherwise v itself separates them), but the scan checks every pair.
    pub fn star_property_witness(&self) -> Option<(VertexId, VertexId)> {
        let all: Vec<VertexId> = self.vertices().collect();
        self.star_property_witness_over(&all)
    }

    pub fn has_star_property(&self) -> bool {
        self.star_property_witness().is_none()
    }

    /// Star-property scan with both quantified vertices restricted to
    /// `check`.
    ///
    /// Used by the interior-vertex discipline on truncations of infinite
    /// families. A boundary vertex's star is incomplete in two ways: it may
    /// lack the witnesses that keep it maximal, and it may spuriously
    /// swallow an interior star it does not contain in the full graph. So
    /// both sides of the containment test range over `check` only.
    pub fn star_property_witness_over(&self, check: &[VertexId]) -> Option<(VertexId, VertexId)> {
        for &v in check {
            let sv = self.star(v);
            for &u in check {
                if u == v {
                    continue;
                }
                if sv.iter().all(|&x| x == u || self.adjacent(u, x)) {
                    // every member of st(v) lies in st(u)
                    return Some((v, u));
                }
            }
        }
        None
    }

    /// First vertex v (in order) for which Γ − st(v) is disconnected.
    ///
    /// The empty and one-vertex remainders count as connected.
    pub fn star_connected_witness(&self) -> Option<VertexId> {
        let all: Vec<VertexId> = self.vertices().collect();
        self.star_connected_witness_over(&all)
    }

    pub fn is_star_connected(&self) -> bool {
        self.star_connected_witness().is_none()
    }

    /// Star-connectedness with every universally quantified vertex
    /// restricted to `check`: for each v in `check`, all members of `check`
    /// outside st(v) must lie in a single connected component of Γ − st(v)
    /// (connecting paths may run through arbitrary vertices).
    pub fn star_connected_witness_over(&self, check: &[VertexId]) -> Option<VertexId> {
        for &v in check {
            let banned = self.star(v);
            let required: Vec<VertexId> =
                check.iter().copied().filter(|u| !banned.contains(u)).collect();
            if required.len() <= 1 {
                continue;
            }
            let comp = self.component_of(required[0], &banned);
            if !required.iter().all(|u| comp.contains(u)) {
                return Some(v);
            }
        }
        None
    }

    /// Connected component of `start` in the graph minus `banned`.
    pub fn component_of(&self, start: VertexId, banned: &VertexSet) -> VertexSet {
        debug_assert!(!banned.contains(&start));
        let mut seen = VertexSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for w in self.vertices() {
                if self.adjacent(u, w) && !banned.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Two-colorability by BFS.
    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut color = vec![None::<bool>; n];
        for start in self.vertices() {
            if color[start as usize].is_some() {
                continue;
            }
            color[start as usize] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u as usize].unwrap();
                for w in self.vertices() {
                    if !self.adjacent(u, w) {
                        continue;
                    }
                    match color[w as usize] {
                        None => {
                            color[w as usize] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Whether the whole graph is connected (empty and singleton count).
    pub fn is_connected(&self) -> bool {
        if self.vertex_count() <= 1 {
            return true;
        }
        self.component_of(0, &VertexSet::new()).len() == self.vertex_count()
    }

    /// Induced subgraph on `verts`, keeping names and relative order.
    pub fn induced(&self, verts: &VertexSet) -> CoxeterGraph {
        let mut b = GraphBuilder::new();
        let ids: Vec<(VertexId, VertexId)> = verts
            .iter()
            .map(|&v| (v, b.add_vertex(self.name(v)).unwrap()))
            .collect();
        for (i, &(gu, bu)) in ids.iter().enumerate() {
            for &(gv, bv) in &ids[i + 1..] {
                if self.adjacent(gu, gv) {
                    b.add_edge(bu, bv).unwrap();
                }
            }
        }
        b.build()
    }

    /// First embedding of `pattern` into this graph, in vertex order.
    ///
    /// Non-induced embeddings only need pattern edges to map to edges;
    /// induced embeddings also require pattern non-edges to map to
    /// non-edges. Returns the image of each pattern vertex, or None.
    /// Patterns over 8 vertices are rejected (input error): the search is
    /// a plain backtracking scan, not a subgraph-isomorphism engine.
    pub fn find_subgraph(&self, pattern: &CoxeterGraph, induced: bool) -> Result<Option<Vec<VertexId>>> {
        let k = pattern.vertex_count();
        if k > 8 {
            return Err(Error::input(format!(
                "find_subgraph pattern has {k} vertices, cap is 8"
            )));
        }
        if k == 0 {
            return Ok(Some(Vec::new()));
        }
        let mut image: Vec<VertexId> = Vec::with_capacity(k);
        if self.embed(pattern, induced, &mut image) {
            Ok(Some(image))
        } else {
            Ok(None)
        }
    }

    fn embed(&self, pattern: &CoxeterGraph, induced: bool, image: &mut Vec<VertexId>) -> bool {
        let k = image.len();
        if k == pattern.vertex_count() {
            return true;
        }
        let p = k as VertexId;
        'cand: for cand in self.vertices() {
            if image.contains(&cand) {
                continue;
            }
            for (q, &iq) in image.iter().enumerate() {
                let pe = pattern.adjacent(p, q as VertexId);
                let ge = self.adjacent(cand, iq);
                if pe && !ge || induced && !pe && ge {
                    continue 'cand;
                }
            }
            image.push(cand);
            if self.embed(pattern, induced, image) {
                return true;
            }
            image.pop();
        }
        false
    }

    pub fn contains_p4(&self) -> bool {
        self.find_subgraph(&CoxeterGraph::path(4), false).unwrap().is_some()
    }

    pub fn contains_induced_c4(&self) -> bool {
        self.find_subgraph(&CoxeterGraph::cycle(4), true).unwrap().is_some()
    }

    /// Isomorphism between two graphs, as the image of each vertex of
    /// `self` in `other`, or None. Both graphs must have at most 10
    /// vertices (input error otherwise); backtracks with degree pruning.
    pub fn isomorphism(&self, other: &CoxeterGraph) -> Result<Option<Vec<VertexId>>> {
        let n = self.vertex_count();
        if n > 10 || other.vertex_count() > 10 {
            return Err(Error::input(format!(
                "isomorphism search on {} and {} vertices, cap is 10",
                n,
                other.vertex_count()
            )));
        }
        if n != other.vertex_count() || self.edge_count() != other.edge_count() {
            return Ok(None);
        }
        let mut dl: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let mut dr: Vec<usize> = other.vertices().map(|v| other.degree(v)).collect();
        dl.sort_unstable();
        dr.sort_unstable();
        if dl != dr {
            return Ok(None);
        }
        let mut image = Vec::with_capacity(n);
        if self.iso_embed(other, &mut image) {
            Ok(Some(image))
        } else {
            Ok(None)
        }
    }

    fn iso_embed(&self, other: &CoxeterGraph, image: &mut Vec<VertexId>) -> bool {
        let k = image.len();
        if k == self.vertex_count() {
            return true;
        }
        let p = k as VertexId;
        'cand: for cand in other.vertices() {
            if image.contains(&cand) || self.degree(p) != other.degree(cand) {
                continue;
            }
            for (q, &iq) in image.iter().enumerate() {
                if self.adjacent(p, q as VertexId) != other.adjacent(cand, iq) {
                    continue 'cand;
                }
            }
            image.push(cand);
            if self.iso_embed(other, image) {
                return true;
            }
            image.pop();
        }
        false
    }

    pub fn are_isomorphic(&self, other: &CoxeterGraph) -> Result<bool> {
        Ok(self.isomorphism(other)?.is_some())
    }
}

/// Incremental construction; names must be unique, edges irreflexive.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    adj: Vec<BTreeSet<VertexId>>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId> {
        if self.index.contains_key(name) {
            return Err(Error::input(format!("duplicate vertex {name:?}")));
        }
        let id = self.names.len() as VertexId;
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        self.adj.push(BTreeSet::new());
        Ok(id)
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::input(format!("unknown vertex {name:?}")))
    }

    pub fn has_vertex(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v as usize]
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if u == v {
            return Err(Error::input(format!(
                "self-loop on vertex {:?}",
                self.names[u as usize]
            )));
        }
        let n = self.names.len() as VertexId;
        if u >= n || v >= n {
            return Err(Error::input("edge endpoint out of range".to_string()));
        }
        self.adj[u as usize].insert(v);
        self.adj[v as usize].insert(u);
        Ok(())
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u as usize].contains(&v)
    }

    pub fn build(self) -> CoxeterGraph {
        let n = self.names.len();
        let stride = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * stride];
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                bits[u * stride + (v as usize >> 6)] |= 1 << (v as usize & 63);
            }
        }
        CoxeterGraph {
            inner: Arc::new(Inner { names: self.names, index: self.index, bits, stride }),
        }
    }
}

fn graph_from_mask(n: usize, mask: u64) -> CoxeterGraph {
    let mut b = GraphBuilder::new();
    for v in 0..n {
        b.add_vertex(&v.to_string()).expect("fresh digit names");
    }
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask & (1 << bit) != 0 {
                b.add_edge(u as VertexId, v as VertexId).expect("distinct pair");
            }
            bit += 1;
        }
    }
    b.build()
}

fn relabeled_mask(n: usize, mut mask: u64, perm: &[usize]) -> u64 {
    let mut out = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask & 1 != 0 {
                let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                let pos = (0..a).map(|x| n - 1 - x).sum::<usize>() + (b - a - 1);
                out |= 1 << pos;
            }
            mask >>= 1;
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..=p.len() {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every labeled graph on n vertices (digit names), in edge-mask order.
pub fn all_graphs_on(n: usize) -> Result<Vec<CoxeterGraph>> {
    if n > 6 {
        return Err(Error::input(format!("exhaustive listing capped at 6 vertices, got {n}")));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0u64..1 << pairs).map(|mask| graph_from_mask(n, mask)).collect())
}

/// One representative per isomorphism class on n vertices: the graph whose
/// edge mask is minimal over all vertex relabelings.
pub fn isomorphism_classes_on(n: usize) -> Result<Vec<CoxeterGraph>> {
    if n > 6 {
        return Err(Error::input(format!("class listing capped at 6 vertices, got {n}")));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let perms = permutations(n);
    let mut reps: BTreeSet<u64> = BTreeSet::new();
    for mask in 0u64..1 << pairs {
        let canon = perms.iter().map(|p| relabeled_mask(n, mask, p)).min().unwrap_or(0);
        reps.insert(canon);
    }
    Ok(reps.into_iter().map(|mask| graph_from_mask(n, mask)).collect())
}

/// A seeded graph on 1..=8 vertices with each edge present with
/// probability one half. Same seed, same graph.
pub fn random_graph(seed: u64) -> CoxeterGraph {
    use rand_core::{RngCore, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let n = 1 + (rng.next_u32() as usize % 8);
    let mut b = GraphBuilder::new();
    for v in 0..n {
        b.add_vertex(&v.to_string()).expect("fresh digit names");
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_u32() & 1 == 1 {
                b.add_edge(u as VertexId, v as VertexId).expect("distinct pair");
            }
        }
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> CoxeterGraph {
        CoxeterGraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn star_and_neighbors() {
        let g = p3();
        let b = g.vertex("b").unwrap();
        assert_eq!(g.names(&g.neighbors(b)), vec!["a", "c"]);
        assert_eq!(g.names(&g.star(b)), vec!["a", "b", "c"]);
        let c4 = CoxeterGraph::cycle(4);
        assert_eq!(c4.names(&c4.star(0)), vec!["0", "1", "3"]);
        assert!(g.vertex("z").is_err());
    }

    #[test]
    fn star_property_examples() {
        // C4 has it; P4 fails with st(a) ⊆ st(b) as the first witness.
        assert!(CoxeterGraph::cycle(4).has_star_property());
        let p4 = CoxeterGraph::path(4);
        assert_eq!(p4.star_property_witness(), Some((0, 1)));
        // Single edge: st(a) = st(b).
        let e = CoxeterGraph::new(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(e.star_property_witness(), Some((0, 1)));
    }

    #[test]
    fn star_connectedness_computed() {
        assert!(CoxeterGraph::cycle(4).is_star_connected());
        assert!(CoxeterGraph::cycle(5).is_star_connected());
        // Every remainder of P4 is a singleton or an edge, hence connected.
        assert!(CoxeterGraph::path(4).is_star_connected());
        // P5 fails at the middle vertex: Γ − st(2) = {0, 4} is split.
        let p5 = CoxeterGraph::path(5);
        assert_eq!(p5.star_connected_witness(), Some(2));
    }

    #[test]
    fn triangles() {
        assert_eq!(CoxeterGraph::complete(3).triangle_witness(), Some([0, 1, 2]));
        assert!(CoxeterGraph::cycle(4).is_triangle_free());
    }

    #[test]
    fn subgraph_search() {
        let c4 = CoxeterGraph::cycle(4);
        assert!(c4.contains_p4());
        assert!(c4.contains_induced_c4());
        // C4 contains no induced P4 (the would-be endpoints are adjacent).
        assert!(c4.find_subgraph(&CoxeterGraph::path(4), true).unwrap().is_none());
        let k4 = CoxeterGraph::complete(4);
        assert!(k4.contains_p4());
        assert!(!k4.contains_induced_c4());
        let big = CoxeterGraph::path(9);
        assert!(c4.find_subgraph(&big, false).is_err());
    }

    #[test]
    fn isomorphism_small() {
        let c4 = CoxeterGraph::cycle(4);
        let relabeled =
            CoxeterGraph::new(&["w", "x", "y", "z"], &[("w", "y"), ("y", "x"), ("x", "z"), ("z", "w")])
                .unwrap();
        let m = c4.isomorphism(&relabeled).unwrap().unwrap();
        assert_eq!(m.len(), 4);
        for u in c4.vertices() {
            for v in c4.vertices() {
                assert_eq!(c4.adjacent(u, v), relabeled.adjacent(m[u as usize], m[v as usize]));
            }
        }
        assert!(!c4.are_isomorphic(&CoxeterGraph::path(4)).unwrap());
        assert!(c4.isomorphism(&CoxeterGraph::path(11)).is_err());
    }

    #[test]
    fn induced_subgraph_keeps_names() {
        let g = p3();
        let sub = g.induced(&VertexSet::from([0, 2]));
        assert_eq!(sub.vertex_count(), 2);
        assert_eq!(sub.edge_count(), 0);
        assert_eq!(sub.name(0), "a");
        assert_eq!(sub.name(1), "c");
    }

    #[test]
    fn builder_rejects_bad_input() {
        let mut b = GraphBuilder::new();
        let a = b.add_vertex("a").unwrap();
        assert!(b.add_vertex("a").is_err());
        assert!(b.add_edge(a, a).is_err());
    }

    #[test]
    fn exhaustive_listings_have_known_sizes() {
        assert_eq!(all_graphs_on(3).unwrap().len(), 8);
        assert_eq!(all_graphs_on(4).unwrap().len(), 64);
        // graph isomorphism class counts: 1, 2, 4, 11, 34
        for (n, classes) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)] {
            assert_eq!(isomorphism_classes_on(n).unwrap().len(), classes, "n = {n}");
        }
        assert!(all_graphs_on(7).is_err());
        // representatives are pairwise non-isomorphic
        let reps = isomorphism_classes_on(4).unwrap();
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                assert!(!reps[i].are_isomorphic(&reps[j]).unwrap());
            }
        }
    }

    #[test]
    fn seeded_graphs_are_reproducible() {
        for seed in 0..5 {
            let a = random_graph(seed);
            let b = random_graph(seed);
            assert_eq!(a, b);
            assert!((1..=8).contains(&a.vertex_count()));
        }
        assert_ne!(random_graph(1), random_graph(2));
    }
}
