//! Generators for the graph families the rigidity theory runs on.
//!
//! The infinite families are produced as finite truncations carrying an
//! explicit *interior*: the vertices whose rule-mandated neighbourhood
//! data is complete inside the truncation. Certificates over truncations
//! quantify only over interior vertices; everything else is boundary and
//! exists to supply witnesses.
//!
//! Vertex names are structured and deterministic ("a:3", "z0:+2",
//! "mid[1,3]") so that regenerating an instance reproduces it exactly.

use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, GraphBuilder, VertexId, VertexSet};
use crate::words::GroupElement;

/// A generated graph together with its provenance and interior.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub family: &'static str,
    pub params: serde_json::Value,
    pub graph: CoxeterGraph,
    pub interior: VertexSet,
}

impl FamilyInstance {
    pub fn interior_vec(&self) -> Vec<VertexId> {
        self.interior.iter().copied().collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "family": self.family,
            "params": self.params,
            "graph": self.graph.to_json(),
            "interior": self.graph.names(&self.interior),
        })
    }
}

/// Iterated two-point closure: per stage, every non-adjacent pair that has
/// not been served yet receives one fresh common neighbour of degree two.
///
/// The base graph must be triangle-free and contain an induced 4-cycle
/// (domain errors name the failing requirement). Adding a degree-2 vertex
/// over a non-adjacent pair cannot create a triangle, so every truncation
/// stays triangle-free. Interior: vertices of stage ≤ depth − 2, since a
/// pair's distinguishing witnesses appear within two stages.
pub fn gamma_star(base: &CoxeterGraph, depth: usize) -> Result<FamilyInstance> {
    if depth > 4 {
        return Err(Error::input(format!("closure depth {depth} exceeds cap 4")));
    }
    if let Some([a, b, c]) = base.triangle_witness() {
        return Err(Error::domain(format!(
            "base graph has triangle {{{}, {}, {}}}; the closure needs a triangle-free base",
            base.name(a),
            base.name(b),
            base.name(c)
        )));
    }
    if !base.contains_induced_c4() {
        return Err(Error::domain(
            "base graph has no induced 4-cycle; the closure needs one".to_string(),
        ));
    }
    let mut b = GraphBuilder::new();
    let mut stage_of: Vec<usize> = Vec::new();
    for v in base.vertices() {
        b.add_vertex(base.name(v))?;
        stage_of.push(0);
    }
    for (u, v) in base.edges() {
        b.add_edge(u, v)?;
    }
    let mut served: std::collections::HashSet<(VertexId, VertexId)> = Default::default();
    for stage in 1..=depth {
        let n = b.vertex_count() as VertexId;
        let mut todo = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !b.adjacent(i, j) && served.insert((i, j)) {
                    todo.push((i, j));
                }
            }
        }
        for (i, j) in todo {
            let name = format!("mid[{},{}]", b.name(i), b.name(j));
            let mid = b.add_vertex(&name)?;
            stage_of.push(stage);
            b.add_edge(mid, i)?;
            b.add_edge(mid, j)?;
        }
    }
    let interior: VertexSet = if depth < 2 {
        VertexSet::new()
    } else {
        stage_of
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s <= depth - 2)
            .map(|(i, _)| i as VertexId)
            .collect()
    };
    Ok(FamilyInstance {
        family: "gamma-star",
        params: json!({ "base": base.to_json(), "depth": depth }),
        graph: b.build(),
        interior,
    })
}

/// Barycentric subdivision: one midpoint vertex per edge, each original
/// edge replaced by the two half-edges.
pub fn barycentric_subdivision(base: &CoxeterGraph) -> CoxeterGraph {
    let mut b = GraphBuilder::new();
    for v in base.vertices() {
        b.add_vertex(base.name(v)).unwrap();
    }
    for (u, v) in base.edges() {
        let mid = b.add_vertex(&format!("c[{},{}]", base.name(u), base.name(v))).unwrap();
        b.add_edge(mid, u).unwrap();
        b.add_edge(mid, v).unwrap();
    }
    b.build()
}

/// Subdivided complete graph on n ≥ 4 vertices. Every vertex is interior:
/// the member is a complete finite object, not a truncation.
pub fn k1_member(n: usize) -> Result<FamilyInstance> {
    if n < 4 {
        return Err(Error::input(format!("subdivided complete graph needs n >= 4, got {n}")));
    }
    let graph = barycentric_subdivision(&CoxeterGraph::complete(n));
    let interior: VertexSet = graph.vertices().collect();
    Ok(FamilyInstance { family: "k1-subdivision", params: json!({ "n": n }), graph, interior })
}

const CSTAR: [&str; 6] = ["s", "s'", "t0", "t1", "t2", "t3"];
const CSTAR_EDGES: [(usize, usize); 9] =
    [(0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (2, 4), (3, 5), (4, 5)];
// s-s', s-t0, s-t2, s'-t1, s'-t3, t0-t1, t0-t2, t1-t3, t2-t3

/// Truncation of the two-sided family: the core hexagon C*, a prefix of
/// the natural numbers, and integer windows.
///
/// Adjacency rules, with indices restricted to the truncation:
/// within the numeric parts two vertices are adjacent exactly when their
/// indices differ by at least 2 (each part is the complement of the
/// successor path, so n's designated non-neighbours are n−1 and n+1, and
/// 0's only one is 1); t0 and t2 are adjacent to the even naturals; t1 to
/// 2 and the odd naturals; t3 to the odd naturals; a window vertex at
/// offset i is adjacent to the naturals 0..=|i|; t3 is adjacent to each
/// window's offsets -1, 0, +1; windows are mutually untouched; s and s'
/// have no neighbours outside C*.
///
/// Interior: all of C*; naturals n with n+1 present; window offsets i with
/// both i−1 and i+1 present and the rule-named naturals 0..=|i| present.
pub fn k2_member(prefix: usize, windows: &[usize]) -> Result<FamilyInstance> {
    if prefix < 4 {
        return Err(Error::input(format!("prefix must be at least 4, got {prefix}")));
    }
    if let Some(&r) = windows.iter().find(|&&r| r < 2) {
        return Err(Error::input(format!("window radius must be at least 2, got {r}")));
    }
    let mut b = GraphBuilder::new();
    for name in CSTAR {
        b.add_vertex(name)?;
    }
    for (u, v) in CSTAR_EDGES {
        b.add_edge(u as VertexId, v as VertexId)?;
    }
    let nat: Vec<VertexId> =
        (0..prefix).map(|n| b.add_vertex(&n.to_string()).unwrap()).collect();
    let (t0, t1, t2, t3) = (2, 3, 4, 5);
    for n in 0..prefix {
        if n % 2 == 0 {
            b.add_edge(nat[n], t0)?;
            b.add_edge(nat[n], t2)?;
        } else {
            b.add_edge(nat[n], t1)?;
            b.add_edge(nat[n], t3)?;
        }
        if n == 2 {
            b.add_edge(nat[n], t1)?;
        }
        for m in 0..n.saturating_sub(1) {
            b.add_edge(nat[n], nat[m])?;
        }
    }
    let mut interior: VertexSet = (0..6).collect();
    interior.extend(nat.iter().take(prefix - 1));
    for (w, &r) in windows.iter().enumerate() {
        let r = r as i64;
        let mut ids = std::collections::HashMap::new();
        for i in -r..=r {
            let name = match i.cmp(&0) {
                std::cmp::Ordering::Less => format!("z{w}:{i}"),
                std::cmp::Ordering::Equal => format!("z{w}:0"),
                std::cmp::Ordering::Greater => format!("z{w}:+{i}"),
            };
            ids.insert(i, b.add_vertex(&name)?);
        }
        for i in -r..=r {
            for j in i + 1..=r {
                if j - i >= 2 {
                    b.add_edge(ids[&i], ids[&j])?;
                }
            }
            let reach = i.unsigned_abs() as usize;
            for &mid in nat.iter().take(reach + 1) {
                b.add_edge(ids[&i], mid)?;
            }
            if i.abs() <= 1 {
                b.add_edge(ids[&i], t3)?;
            }
            if i.abs() < r && (i.unsigned_abs() as usize) < prefix {
                interior.insert(ids[&i]);
            }
        }
    }
    Ok(FamilyInstance {
        family: "k2-two-sided",
        params: json!({ "prefix": prefix, "windows": windows }),
        graph: b.build(),
        interior,
    })
}

/// The ladder of conjugated clique generators used to probe smoothness.
#[derive(Debug)]
pub struct SmoothnessChain {
    pub instance: FamilyInstance,
    /// c_n = a_0 · a_1 ⋯ a_n.
    pub c: Vec<GroupElement>,
    /// e_n = c_n · b_n · c_n⁻¹.
    pub e: Vec<GroupElement>,
}

/// Independent vertices a_0..a_{stages-1}, a clique b_0..b_{b_count-1},
/// and a_i adjacent to b_j exactly when j < i. Requires
/// 2 <= stages <= b_count <= 8.
pub fn smoothness_chain(stages: usize, b_count: usize) -> Result<SmoothnessChain> {
    if stages < 2 || stages > b_count || b_count > 8 {
        return Err(Error::input(format!(
            "need 2 <= stages <= b_count <= 8, got stages={stages}, b_count={b_count}"
        )));
    }
    let mut b = GraphBuilder::new();
    let avs: Vec<VertexId> =
        (0..stages).map(|i| b.add_vertex(&format!("a:{i}")).unwrap()).collect();
    let bvs: Vec<VertexId> =
        (0..b_count).map(|j| b.add_vertex(&format!("b:{j}")).unwrap()).collect();
    for x in 0..b_count {
        for y in x + 1..b_count {
            b.add_edge(bvs[x], bvs[y])?;
        }
    }
    for (i, &a) in avs.iter().enumerate() {
        for (j, &bv) in bvs.iter().enumerate() {
            if j < i {
                b.add_edge(a, bv)?;
            }
        }
    }
    let graph = b.build();
    let interior: VertexSet = graph.vertices().collect();
    let mut c = Vec::with_capacity(stages);
    let mut e = Vec::with_capacity(stages);
    for n in 0..stages {
        let cn = GroupElement::from_letters(&graph, &avs[..=n]);
        let en = GroupElement::from_letters(&graph, &[bvs[n]]).conjugate_by(&cn)?;
        c.push(cn);
        e.push(en);
    }
    Ok(SmoothnessChain {
        instance: FamilyInstance {
            family: "smoothness-chain",
            params: json!({ "stages": stages, "b_count": b_count }),
            graph,
            interior,
        },
        c,
        e,
    })
}

/// The half-graph probe: independent rows t_0..t_{k-1} and a_0..a_{k-1}
/// with a_i adjacent to t_j exactly when j ≤ i.
#[derive(Debug)]
pub struct HalfGraph {
    pub instance: FamilyInstance,
    pub t: Vec<GroupElement>,
    /// c_i = a_0 ⋯ a_{i-1} · t_i · a_{i-1} ⋯ a_0 (c_0 = t_0).
    pub c: Vec<GroupElement>,
}

pub fn half_graph(k: usize) -> Result<HalfGraph> {
    if !(1..=6).contains(&k) {
        return Err(Error::input(format!("half-graph needs 1 <= k <= 6, got {k}")));
    }
    let mut b = GraphBuilder::new();
    let ts: Vec<VertexId> = (0..k).map(|i| b.add_vertex(&format!("t:{i}")).unwrap()).collect();
    let avs: Vec<VertexId> = (0..k).map(|i| b.add_vertex(&format!("a:{i}")).unwrap()).collect();
    for (i, &a) in avs.iter().enumerate() {
        for (j, &t) in ts.iter().enumerate() {
            if j <= i {
                b.add_edge(a, t)?;
            }
        }
    }
    let graph = b.build();
    let interior: VertexSet = graph.vertices().collect();
    let mut t_els = Vec::with_capacity(k);
    let mut c_els = Vec::with_capacity(k);
    for i in 0..k {
        let ti = GroupElement::from_letters(&graph, &[ts[i]]);
        let prefix = GroupElement::from_letters(&graph, &avs[..i]);
        c_els.push(ti.conjugate_by(&prefix)?);
        t_els.push(ti);
    }
    Ok(HalfGraph {
        instance: FamilyInstance {
            family: "half-graph",
            params: json!({ "k": k }),
            graph,
            interior,
        },
        t: t_els,
        c: c_els,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_star_counts() {
        let c4 = CoxeterGraph::cycle(4);
        let g0 = gamma_star(&c4, 0).unwrap();
        assert_eq!(g0.graph.vertex_count(), 4);
        assert!(g0.interior.is_empty());
        let g1 = gamma_star(&c4, 1).unwrap();
        assert_eq!(g1.graph.vertex_count(), 6);
        assert_eq!(g1.graph.edge_count(), 8);
        assert!(g1.graph.vertex("mid[0,2]").is_ok());
        assert!(g1.graph.vertex("mid[1,3]").is_ok());
        let g2 = gamma_star(&c4, 2).unwrap();
        assert_eq!(g2.graph.vertex_count(), 11);
        let g3 = gamma_star(&c4, 3).unwrap();
        assert_eq!(g3.graph.vertex_count(), 41);
        assert_eq!(g3.interior.len(), 6);
        assert!(g3.graph.is_triangle_free());
    }

    #[test]
    fn gamma_star_rejects_bad_bases() {
        let e = gamma_star(&CoxeterGraph::complete(3), 1).unwrap_err().to_string();
        assert!(e.contains("triangle"), "{e}");
        let e = gamma_star(&CoxeterGraph::path(4), 1).unwrap_err().to_string();
        assert!(e.contains("4-cycle"), "{e}");
    }

    #[test]
    fn k1_subdivision_shape() {
        let k = k1_member(4).unwrap();
        assert_eq!(k.graph.vertex_count(), 10);
        assert_eq!(k.graph.edge_count(), 12);
        assert!(k.graph.is_bipartite());
        assert!(k.graph.is_triangle_free());
        assert_eq!(k.interior.len(), 10);
        assert!(k1_member(3).is_err());
    }

    #[test]
    fn k2_core_is_the_hexagon() {
        let inst = k2_member(6, &[]).unwrap();
        let g = &inst.graph;
        let core: VertexSet = (0..6).collect();
        let cstar = g.induced(&core);
        assert_eq!(cstar.edge_count(), 9);
        // removing any closed star of C* must leave an adjacent pair
        for v in cstar.vertices() {
            let rest: Vec<VertexId> =
                cstar.vertices().filter(|&u| u != v && !cstar.adjacent(u, v)).collect();
            assert_eq!(rest.len(), 2, "vertex {}", cstar.name(v));
            assert!(cstar.adjacent(rest[0], rest[1]));
        }
    }

    #[test]
    fn k2_window_rules() {
        let inst = k2_member(6, &[2]).unwrap();
        let g = &inst.graph;
        let z1 = g.vertex("z0:+1").unwrap();
        let nat_adj: Vec<&str> = (0..6)
            .filter(|n| g.adjacent(z1, g.vertex(&n.to_string()).unwrap()))
            .map(|n| ["0", "1", "2", "3", "4", "5"][n])
            .collect();
        assert_eq!(nat_adj, vec!["0", "1"]);
        let t3 = g.vertex("t3").unwrap();
        let window_adj: Vec<String> = ["z0:-2", "z0:-1", "z0:0", "z0:+1", "z0:+2"]
            .iter()
            .filter(|name| g.adjacent(t3, g.vertex(name).unwrap()))
            .map(|s| s.to_string())
            .collect();
        assert_eq!(window_adj, vec!["z0:-1", "z0:0", "z0:+1"]);
    }

    #[test]
    fn k2_numeric_parts_are_path_complements() {
        let inst = k2_member(6, &[2]).unwrap();
        let g = &inst.graph;
        let n0 = g.vertex("0").unwrap();
        let n1 = g.vertex("1").unwrap();
        let n2 = g.vertex("2").unwrap();
        assert!(!g.adjacent(n0, n1));
        assert!(g.adjacent(n0, n2));
        assert!(!g.adjacent(n1, n2));
        let zm = g.vertex("z0:-1").unwrap();
        let zp = g.vertex("z0:+1").unwrap();
        let z0 = g.vertex("z0:0").unwrap();
        assert!(g.adjacent(zm, zp));
        assert!(!g.adjacent(zm, z0));
    }

    #[test]
    fn k2_default_instance_interior() {
        let inst = k2_member(6, &[2, 2]).unwrap();
        assert_eq!(inst.graph.vertex_count(), 6 + 6 + 5 + 5);
        // C* (6) + naturals 0..4 (5) + offsets -1,0,+1 per window (6)
        assert_eq!(inst.interior.len(), 17);
        let g = &inst.graph;
        assert!(inst.interior.contains(&g.vertex("z0:+1").unwrap()));
        assert!(!inst.interior.contains(&g.vertex("z0:+2").unwrap()));
        assert!(!inst.interior.contains(&g.vertex("5").unwrap()));
    }

    #[test]
    fn smoothness_chain_elements() {
        let ch = smoothness_chain(3, 5).unwrap();
        assert_eq!(ch.instance.graph.vertex_count(), 8);
        for (n, e) in ch.e.iter().enumerate() {
            assert_eq!(e.len(), 2 * n + 3, "e_{n} should not shorten");
        }
        assert!(smoothness_chain(4, 3).is_err());
    }

    #[test]
    fn half_graph_conjugates() {
        let h = half_graph(2).unwrap();
        let g = &h.instance.graph;
        assert_eq!(h.c[0], h.t[0]);
        assert_eq!(h.c[1].to_string(), "a:0 t:1 a:0");
        assert!(g.adjacent(g.vertex("a:1").unwrap(), g.vertex("t:0").unwrap()));
        assert!(!g.adjacent(g.vertex("a:0").unwrap(), g.vertex("t:1").unwrap()));
    }
}
