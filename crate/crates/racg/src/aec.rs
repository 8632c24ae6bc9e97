//! Finite-scale machinery for the parabolic strong-submodel relation:
//! conjugated-basis witnesses, a bounded basis search, coherence transport
//! of conjugators into a sub-basis, the overlap-rigidity check, and the
//! stagewise smoothness-chain verification.
//!
//! A subgroup relation is only ever certified positively here. A failed
//! bounded search means "absent within the bound", never "not parabolic".

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::families;
use crate::graph::{CoxeterGraph, VertexId, VertexSet};
use crate::words::{enumerate_ball_with, BallBudget, GroupElement};

/// Claim: every target generator equals conjugator · s · conjugator⁻¹ for
/// some s in `base_vertices`. The conjugated images are recomputed on
/// demand rather than stored, so the conjugator is the single source of
/// truth.
#[derive(Clone, Debug)]
pub struct BasisWitness {
    pub conjugator: GroupElement,
    pub base_vertices: VertexSet,
}

impl BasisWitness {
    /// The base vertex whose conjugate equals `a`, if any.
    pub fn covers(&self, a: &GroupElement) -> Result<Option<VertexId>> {
        let moved = a.conjugate_by(&self.conjugator.inverse())?;
        if let [s] = moved.letters() {
            if self.base_vertices.contains(s) {
                return Ok(Some(*s));
            }
        }
        Ok(None)
    }

    /// Re-verifies the claim for every element of `a_gens`.
    pub fn verify(&self, a_gens: &[GroupElement]) -> Result<bool> {
        for a in a_gens {
            if self.covers(a)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let graph = self.conjugator.graph();
        json!({
            "conjugator": self.conjugator.to_string(),
            "base_vertices": graph.names(&self.base_vertices),
        })
    }
}

/// Vertex subsets always generate standard parabolics; the witness is the
/// identity conjugator. Provided for report symmetry with the searched
/// case.
pub fn is_standard_parabolic(graph: &CoxeterGraph, a: &VertexSet) -> Result<BasisWitness> {
    for &v in a {
        if v as usize >= graph.vertex_count() {
            return Err(Error::input(format!(
                "vertex {v} is not in a graph on {} vertices",
                graph.vertex_count()
            )));
        }
    }
    Ok(BasisWitness { conjugator: GroupElement::identity(graph), base_vertices: a.clone() })
}

/// Searches conjugators g of length at most `max_len`, in length then
/// lexicographic order, for one that exhibits every given element as
/// g · s · g⁻¹ with s a vertex. Returns the first (hence minimal) hit.
pub fn parabolic_search(
    graph: &CoxeterGraph,
    a_gens: &[GroupElement],
    max_len: usize,
) -> Result<Option<BasisWitness>> {
    if max_len > 6 {
        return Err(Error::input(format!("conjugator length cap {max_len} exceeds 6")));
    }
    for a in a_gens {
        if a.graph() != graph {
            return Err(Error::input(
                "parabolic search requires all elements over the search graph".to_string(),
            ));
        }
    }
    let budget =
        BallBudget { max_radius: 6, max_graph_vertices: 16, max_elements: 500_000 };
    let ball = enumerate_ball_with(graph, max_len, &budget)?;
    'cand: for g in &ball {
        let mut base = VertexSet::new();
        let ginv = g.inverse();
        for a in a_gens {
            let moved = a.conjugate_by(&ginv)?;
            match moved.letters() {
                [s] => {
                    base.insert(*s);
                }
                _ => continue 'cand,
            }
        }
        let witness = BasisWitness { conjugator: g.clone(), base_vertices: base };
        if !witness.verify(a_gens)? {
            return Err(Error::domain(
                "search produced a witness that fails re-verification".to_string(),
            ));
        }
        return Ok(Some(witness));
    }
    Ok(None)
}

/// Deletes from the relating conjugator g = g_T⁻¹ · g_S every letter
/// outside `sub_vertices`, returning h with h·s·h⁻¹ = g·s·g⁻¹ for every s
/// in the S-side base. This is the element that re-expresses the smaller
/// subgroup inside the sub-basis.
pub fn coherence_transport(
    s_basis: &BasisWitness,
    t_basis: &BasisWitness,
    sub_vertices: &VertexSet,
) -> Result<GroupElement> {
    let graph = s_basis.conjugator.graph().clone();
    if t_basis.conjugator.graph() != &graph {
        return Err(Error::input("witnesses must share one graph".to_string()));
    }
    let g = t_basis.conjugator.inverse().multiply(&s_basis.conjugator)?;
    for &s in &s_basis.base_vertices {
        let image = GroupElement::from_letters(&graph, &[s]).conjugate_by(&g)?;
        if !image.support().is_subset(sub_vertices) {
            return Err(Error::domain(format!(
                "conjugate of {} leaves the target parabolic (support {:?})",
                graph.name(s),
                graph.names(&image.support()),
            )));
        }
    }
    let kept: Vec<VertexId> =
        g.letters().iter().copied().filter(|s| sub_vertices.contains(s)).collect();
    let h = GroupElement::from_letters(&graph, &kept);
    for &s in &s_basis.base_vertices {
        let gen = GroupElement::from_letters(&graph, &[s]);
        if gen.conjugate_by(&h)? != gen.conjugate_by(&g)? {
            return Err(Error::domain(format!(
                "transport identity failed on {}",
                graph.name(s)
            )));
        }
    }
    Ok(h)
}

#[derive(Clone, Debug, Serialize)]
pub struct Countertrace {
    pub step: &'static str,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OverlapCheck {
    pub holds: bool,
    pub countertrace: Option<Countertrace>,
}

/// The overlap-rigidity argument: a conjugator that fixes each vertex of
/// an induced path s0, s1, s2, s3 (with s0 ⊥ s2 and s1 ⊥ s3) inside the
/// base set must have empty support, hence fix the whole parabolic on
/// `t0`. Each step is computed, not assumed; the first failing step is
/// returned as a countertrace.
pub fn basis_overlap_rigidity(
    t0: &VertexSet,
    g: &GroupElement,
    p4: &[VertexId; 4],
) -> Result<OverlapCheck> {
    let graph = g.graph().clone();
    let [s0, s1, s2, s3] = *p4;
    let mut distinct: VertexSet = p4.iter().copied().collect();
    if distinct.len() != 4 {
        return Err(Error::input("path vertices must be distinct".to_string()));
    }
    for &v in p4 {
        if v as usize >= graph.vertex_count() {
            return Err(Error::input(format!("vertex {v} is not in the graph")));
        }
        if !t0.contains(&v) {
            return Err(Error::input(format!(
                "path vertex {} lies outside the base set",
                graph.name(v)
            )));
        }
    }
    for (x, y, want) in [
        (s0, s1, true),
        (s1, s2, true),
        (s2, s3, true),
        (s0, s2, false),
        (s1, s3, false),
    ] {
        if graph.adjacent(x, y) != want {
            return Err(Error::input(format!(
                "vertices {} and {} must be {}",
                graph.name(x),
                graph.name(y),
                if want { "adjacent" } else { "non-adjacent" }
            )));
        }
    }
    distinct.clear();

    for &s in p4 {
        let gen = GroupElement::from_letters(&graph, &[s]);
        let image = gen.conjugate_by(g)?;
        if image != gen {
            return Ok(OverlapCheck {
                holds: false,
                countertrace: Some(Countertrace {
                    step: "fixes-path-generator",
                    witness: format!(
                        "conjugating {} gives {}",
                        graph.name(s),
                        image
                    ),
                }),
            });
        }
    }
    let sp = g.support();
    let ends: VertexSet = [s0, s1].into_iter().collect();
    if !sp.is_subset(&ends) {
        return Ok(OverlapCheck {
            holds: false,
            countertrace: Some(Countertrace {
                step: "support-within-path-ends",
                witness: format!("support is {:?}", graph.names(&sp)),
            }),
        });
    }
    for v in [s0, s1] {
        if sp.contains(&v) {
            return Ok(OverlapCheck {
                holds: false,
                countertrace: Some(Countertrace {
                    step: "path-ends-escape-support",
                    witness: format!("{} remains in the support", graph.name(v)),
                }),
            });
        }
    }
    Ok(OverlapCheck { holds: true, countertrace: None })
}

#[derive(Debug, Serialize)]
pub struct InclusionWitness {
    pub lower: usize,
    pub upper: usize,
    pub conjugator: String,
    pub base: Vec<String>,
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct SmoothnessReport {
    pub stages: usize,
    pub b_count: usize,
    /// c_j b_i c_j⁻¹ = c_i b_i c_i⁻¹ for all i ≤ j, checked pair by pair.
    pub conjugation_identities_checked: usize,
    pub identity_failures: Vec<(usize, usize)>,
    /// One witness per stage pair m ≤ n: the stage-m generators sit inside
    /// the conjugated clique basis shared by stage n.
    pub inclusions: Vec<InclusionWitness>,
    /// The obstruction this ladder builds toward lives only at the limit;
    /// every finite stage verifies.
    pub limit_checkable_at_finite_stage: bool,
}

pub fn smoothness_chain_check(stages: usize, b_count: usize) -> Result<SmoothnessReport> {
    if b_count <= stages {
        return Err(Error::input(format!(
            "chain check needs spare clique room, b_count > stages; got stages={stages}, \
             b_count={b_count}"
        )));
    }
    let chain = families::smoothness_chain(stages, b_count)?;
    let graph = &chain.instance.graph;
    let b_ids: Vec<VertexId> = (0..b_count)
        .map(|j| graph.vertex(&format!("b:{j}")).expect("clique vertex"))
        .collect();

    let mut checked = 0;
    let mut identity_failures = Vec::new();
    for j in 0..stages {
        for (i, &b_i) in b_ids.iter().enumerate().take(j + 1) {
            let via_j =
                GroupElement::from_letters(graph, &[b_i]).conjugate_by(&chain.c[j])?;
            checked += 1;
            if via_j != chain.e[i] {
                identity_failures.push((i, j));
            }
        }
    }

    let mut inclusions = Vec::new();
    for n in 0..stages {
        for m in 0..=n {
            let witness = BasisWitness {
                conjugator: chain.c[n].clone(),
                base_vertices: b_ids[..m].iter().copied().collect(),
            };
            let verified = witness.verify(&chain.e[..m])?;
            inclusions.push(InclusionWitness {
                lower: m,
                upper: n,
                conjugator: witness.conjugator.to_string(),
                base: witness
                    .base_vertices
                    .iter()
                    .map(|&v| graph.name(v).to_string())
                    .collect(),
                verified,
            });
        }
    }

    Ok(SmoothnessReport {
        stages,
        b_count,
        conjugation_identities_checked: checked,
        identity_failures,
        inclusions,
        limit_checkable_at_finite_stage: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::enumerate_ball;

    #[test]
    fn standard_parabolic_always_witnesses() {
        let c4 = CoxeterGraph::cycle(4);
        let w = is_standard_parabolic(&c4, &[0, 1].into_iter().collect()).unwrap();
        assert!(w.conjugator.is_identity());
        let w = is_standard_parabolic(&c4, &VertexSet::new()).unwrap();
        assert!(w.base_vertices.is_empty());
        assert!(is_standard_parabolic(&c4, &[9].into_iter().collect()).is_err());
    }

    #[test]
    fn search_finds_single_generator_immediately() {
        let p3 = CoxeterGraph::path(3);
        let b = GroupElement::parse(&p3, "1").unwrap();
        let w = parabolic_search(&p3, &[b], 3).unwrap().expect("vertex is its own basis");
        assert!(w.conjugator.is_identity());
        assert_eq!(w.base_vertices, [1].into_iter().collect());
    }

    #[test]
    fn search_unwraps_a_conjugated_generator() {
        let g = CoxeterGraph::new(&["a", "b"], &[]).unwrap();
        let aba = GroupElement::parse(&g, "a b a").unwrap();
        let w = parabolic_search(&g, &[aba], 3).unwrap().expect("aba = a·b·a⁻¹");
        assert_eq!(w.conjugator.to_string(), "a");
        assert_eq!(w.base_vertices, [1].into_iter().collect());
    }

    #[test]
    fn search_recovers_the_chain_conjugator() {
        let chain = families::smoothness_chain(2, 4).unwrap();
        let graph = chain.instance.graph.clone();
        let gens = [chain.e[0].clone(), chain.e[1].clone()];
        let w = parabolic_search(&graph, &gens, 3).unwrap().expect("c_1 within bound");
        assert_eq!(w.conjugator, chain.c[1]);
        let names = graph.names(&w.base_vertices);
        assert_eq!(names, vec!["b:0", "b:1"]);
    }

    #[test]
    fn search_is_exhaustive_at_small_scale() {
        let graph = CoxeterGraph::path(3);
        for g in enumerate_ball(&graph, 3).unwrap() {
            for subset in 0u8..8 {
                let gens: Vec<GroupElement> = (0..3)
                    .filter(|i| subset & (1 << i) != 0)
                    .map(|s| {
                        GroupElement::from_letters(&graph, &[s])
                            .conjugate_by(&g)
                            .unwrap()
                    })
                    .collect();
                let found = parabolic_search(&graph, &gens, 3).unwrap();
                assert!(found.is_some(), "no witness for g={g}, subset={subset:03b}");
            }
        }
    }

    #[test]
    fn transport_drops_foreign_letters() {
        let graph = CoxeterGraph::new(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
        let s_basis = BasisWitness {
            conjugator: GroupElement::parse(&graph, "b a").unwrap(),
            base_vertices: [2].into_iter().collect(),
        };
        let t_basis = BasisWitness {
            conjugator: GroupElement::identity(&graph),
            base_vertices: [1, 2].into_iter().collect(),
        };
        let h = coherence_transport(&s_basis, &t_basis, &[1, 2].into_iter().collect())
            .unwrap();
        assert_eq!(h.to_string(), "b");
    }

    #[test]
    fn transport_keeps_supported_conjugators_whole() {
        let graph = CoxeterGraph::path(3);
        let s_basis = BasisWitness {
            conjugator: GroupElement::parse(&graph, "0").unwrap(),
            base_vertices: [2].into_iter().collect(),
        };
        let t_basis = BasisWitness {
            conjugator: GroupElement::identity(&graph),
            base_vertices: [0, 2].into_iter().collect(),
        };
        let sub: VertexSet = [0, 2].into_iter().collect();
        let h = coherence_transport(&s_basis, &t_basis, &sub).unwrap();
        assert_eq!(h.to_string(), "0");

        let id_basis = BasisWitness {
            conjugator: GroupElement::identity(&graph),
            base_vertices: [2].into_iter().collect(),
        };
        let h = coherence_transport(&id_basis, &t_basis, &sub).unwrap();
        assert!(h.is_identity());
    }

    #[test]
    fn transport_rejects_escaping_configurations() {
        let graph = CoxeterGraph::new(&["a", "b", "c"], &[]).unwrap();
        let s_basis = BasisWitness {
            conjugator: GroupElement::parse(&graph, "a").unwrap(),
            base_vertices: [1].into_iter().collect(),
        };
        let t_basis = BasisWitness {
            conjugator: GroupElement::identity(&graph),
            base_vertices: [1, 2].into_iter().collect(),
        };
        // a·b·a⁻¹ has support {a, b}, not inside {b, c}
        let err = coherence_transport(&s_basis, &t_basis, &[1, 2].into_iter().collect())
            .unwrap_err();
        assert!(err.to_string().contains("leaves the target parabolic"));
    }

    #[test]
    fn overlap_rigidity_accepts_identity_and_traces_failures() {
        let c4 = CoxeterGraph::cycle(4);
        let t0: VertexSet = c4.vertices().collect();
        let p4 = [0, 1, 2, 3];
        let id = GroupElement::identity(&c4);
        assert!(basis_overlap_rigidity(&t0, &id, &p4).unwrap().holds);

        let g = GroupElement::parse(&c4, "0").unwrap();
        let out = basis_overlap_rigidity(&t0, &g, &p4).unwrap();
        assert!(!out.holds);
        let trace = out.countertrace.unwrap();
        assert_eq!(trace.step, "fixes-path-generator");
        // 0 commutes with 1 but not with 2, so the first break is at s2
        assert!(trace.witness.contains("conjugating 2 gives 0 2 0"));
    }

    #[test]
    fn overlap_rigidity_validates_the_path() {
        let c4 = CoxeterGraph::cycle(4);
        let t0: VertexSet = c4.vertices().collect();
        let id = GroupElement::identity(&c4);
        // 0 and 1 are adjacent in C4, which breaks the s0 ⊥ s2 slot
        assert!(basis_overlap_rigidity(&t0, &id, &[0, 2, 1, 3]).is_err());
        let small: VertexSet = [0, 1].into_iter().collect();
        assert!(basis_overlap_rigidity(&small, &id, &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn smoothness_ladder_verifies_stagewise() {
        let report = smoothness_chain_check(3, 5).unwrap();
        assert!(report.identity_failures.is_empty());
        assert_eq!(report.conjugation_identities_checked, 6);
        assert!(report.inclusions.iter().all(|w| w.verified));
        assert!(!report.limit_checkable_at_finite_stage);
        assert!(smoothness_chain_check(2, 2).is_err());
    }

    #[test]
    fn composed_witnesses_verify_transitively() {
        let graph = CoxeterGraph::path(4);
        let g_b = GroupElement::parse(&graph, "3").unwrap();
        let t_b: VertexSet = [0, 1, 2].into_iter().collect();
        let g_a = g_b
            .multiply(&GroupElement::parse(&graph, "2 0").unwrap())
            .unwrap();
        let t_a: VertexSet = [0, 1].into_iter().collect();

        let a_basis = BasisWitness { conjugator: g_a.clone(), base_vertices: t_a.clone() };
        let b_basis = BasisWitness { conjugator: g_b.clone(), base_vertices: t_b.clone() };
        let u = coherence_transport(&a_basis, &b_basis, &t_b).unwrap();

        let composed = BasisWitness {
            conjugator: g_b.multiply(&u).unwrap(),
            base_vertices: t_a.clone(),
        };
        let a_gens: Vec<GroupElement> = t_a
            .iter()
            .map(|&s| {
                GroupElement::from_letters(&graph, &[s]).conjugate_by(&g_a).unwrap()
            })
            .collect();
        assert!(composed.verify(&a_gens).unwrap());
    }
}
