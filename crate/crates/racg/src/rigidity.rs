//! Strong-rigidity certification.
//!
//! Two sufficient criteria are tried in order, each a conjunction of
//! decidable graph conditions. Criterion 1: star-connected, triangle-free,
//! star property, and a P4 subgraph. Criterion 2: star-connected, a
//! *centered pair* (an adjacent pair s, s' whose joint closed star induces
//! a star-connected subgraph that every vertex can escape from), and the
//! star property. A refusal names the first condition each criterion
//! failed, with a concrete witness.
//!
//! On truncations of infinite families the conditions are evaluated under
//! the interior-vertex discipline: every universally quantified vertex
//! ranges over the instance's interior only (existential witnesses may be
//! anything), and the certificate records the checked set.

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::families::FamilyInstance;
use crate::graph::{CoxeterGraph, VertexId, VertexSet};
use crate::words::GroupElement;

/// A centered pair and the data that verified it.
#[derive(Clone, Debug, Serialize)]
pub struct CenterPair {
    pub s: String,
    pub s_prime: String,
    /// st(s) ∪ st(s'), always finite here; the induced subgraph on it is
    /// star-connected.
    pub core: Vec<String>,
    /// For each checked vertex v, a core vertex distinct from and
    /// non-adjacent to v.
    pub escape: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CertificateDetails {
    /// Criterion 1 witness: an embedded path on four vertices.
    TriangleFreePath { p4: [String; 4] },
    /// Criterion 2 witness.
    Centered { pair: CenterPair },
}

#[derive(Clone, Debug, Serialize)]
pub struct RigidityCertificate {
    pub criterion: u8,
    /// The vertices every universally quantified condition ranged over.
    pub checked_vertices: Vec<String>,
    pub details: CertificateDetails,
}

/// First failed condition of one criterion.
#[derive(Clone, Debug, Serialize)]
pub struct ConditionFailure {
    pub condition: &'static str,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Refusal {
    pub criterion1: ConditionFailure,
    pub criterion2: ConditionFailure,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum CertOutcome {
    Certified(RigidityCertificate),
    Refused(Refusal),
}

impl CertOutcome {
    pub fn certificate(&self) -> Option<&RigidityCertificate> {
        match self {
            CertOutcome::Certified(c) => Some(c),
            CertOutcome::Refused(_) => None,
        }
    }

    pub fn refusal(&self) -> Option<&Refusal> {
        match self {
            CertOutcome::Certified(_) => None,
            CertOutcome::Refused(r) => Some(r),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            CertOutcome::Certified(c) => {
                json!({ "certified": true, "certificate": c })
            }
            CertOutcome::Refused(r) => json!({ "certified": false, "refusal": r }),
        }
    }
}

/// Certifies a plain graph: every vertex is checked.
pub fn certify_strong_rigidity(graph: &CoxeterGraph) -> CertOutcome {
    let all: Vec<VertexId> = graph.vertices().collect();
    certify_over(graph, &all)
}

/// Certifies a family truncation under its interior discipline.
pub fn certify_family(instance: &FamilyInstance) -> CertOutcome {
    certify_over(&instance.graph, &instance.interior_vec())
}

pub fn certify_over(graph: &CoxeterGraph, check: &[VertexId]) -> CertOutcome {
    let checked_vertices: Vec<String> =
        check.iter().map(|&v| graph.name(v).to_string()).collect();
    match criterion1(graph, check) {
        Ok(details) => CertOutcome::Certified(RigidityCertificate {
            criterion: 1,
            checked_vertices,
            details,
        }),
        Err(c1) => match criterion2(graph, check) {
            Ok(details) => CertOutcome::Certified(RigidityCertificate {
                criterion: 2,
                checked_vertices,
                details,
            }),
            Err(c2) => CertOutcome::Refused(Refusal { criterion1: c1, criterion2: c2 }),
        },
    }
}

fn criterion1(
    graph: &CoxeterGraph,
    check: &[VertexId],
) -> std::result::Result<CertificateDetails, ConditionFailure> {
    star_connected(graph, check)?;
    if let Some([a, b, c]) = graph.triangle_witness() {
        return Err(ConditionFailure {
            condition: "triangle-free",
            witness: format!(
                "triangle {{{}, {}, {}}}",
                graph.name(a),
                graph.name(b),
                graph.name(c)
            ),
        });
    }
    star_property(graph, check)?;
    let p4 = CoxeterGraph::path(4);
    match graph.find_subgraph(&p4, false).expect("pattern within cap") {
        Some(image) => Ok(CertificateDetails::TriangleFreePath {
            p4: [
                graph.name(image[0]).to_string(),
                graph.name(image[1]).to_string(),
                graph.name(image[2]).to_string(),
                graph.name(image[3]).to_string(),
            ],
        }),
        None => Err(ConditionFailure {
            condition: "p4-subgraph",
            witness: "no path on four vertices embeds".to_string(),
        }),
    }
}

fn criterion2(
    graph: &CoxeterGraph,
    check: &[VertexId],
) -> std::result::Result<CertificateDetails, ConditionFailure> {
    star_connected(graph, check)?;
    let pair = match find_center_pair_over(graph, check) {
        Some(pair) => pair,
        None => {
            return Err(ConditionFailure {
                condition: "centered-pair",
                witness: "no adjacent pair has a star-connected joint star that every checked \
                          vertex escapes"
                    .to_string(),
            });
        }
    };
    star_property(graph, check)?;
    Ok(CertificateDetails::Centered { pair })
}

fn star_connected(
    graph: &CoxeterGraph,
    check: &[VertexId],
) -> std::result::Result<(), ConditionFailure> {
    if let Some(v) = graph.star_connected_witness_over(check) {
        return Err(ConditionFailure {
            condition: "star-connected",
            witness: format!("removing st({}) disconnects the checked vertices", graph.name(v)),
        });
    }
    Ok(())
}

fn star_property(
    graph: &CoxeterGraph,
    check: &[VertexId],
) -> std::result::Result<(), ConditionFailure> {
    if let Some((v, u)) = graph.star_property_witness_over(check) {
        return Err(ConditionFailure {
            condition: "star-property",
            witness: format!("st({}) is contained in st({})", graph.name(v), graph.name(u)),
        });
    }
    Ok(())
}

/// First adjacent pair (in vertex order) whose joint closed star induces a
/// star-connected subgraph and leaves every checked vertex a non-adjacent
/// escape inside it.
pub fn find_center_pair(graph: &CoxeterGraph) -> Option<CenterPair> {
    let all: Vec<VertexId> = graph.vertices().collect();
    find_center_pair_over(graph, &all)
}

pub fn find_center_pair_over(graph: &CoxeterGraph, check: &[VertexId]) -> Option<CenterPair> {
    let n = graph.vertex_count() as VertexId;
    let eligible: std::collections::BTreeSet<VertexId> = check.iter().copied().collect();
    for s in 0..n {
        'pair: for sp in s + 1..n {
            if !graph.adjacent(s, sp) || !eligible.contains(&s) || !eligible.contains(&sp) {
                continue;
            }
            let mut core: VertexSet = graph.star(s);
            core.extend(graph.star(sp));
            if graph.induced(&core).star_connected_witness().is_some() {
                continue;
            }
            let mut escape = Vec::with_capacity(check.len());
            for &v in check {
                match core.iter().find(|&&a| a != v && !graph.adjacent(a, v)) {
                    Some(&a) => escape
                        .push((graph.name(v).to_string(), graph.name(a).to_string())),
                    None => continue 'pair,
                }
            }
            return Some(CenterPair {
                s: graph.name(s).to_string(),
                s_prime: graph.name(sp).to_string(),
                core: core.iter().map(|&x| graph.name(x).to_string()).collect(),
                escape,
            });
        }
    }
    None
}

/// The nested-chain witness for a limit automorphism: stage i adds a_i
/// adjacent to everything older and b_i adjacent to nothing at birth, with
/// α_i = conjugation by a_0 ⋯ a_i. Restricting α_j to an earlier stage's
/// generators gives α_i exactly, while the conjugator supports grow
/// strictly, so the stagewise maps cohere without a common inner bound.
#[derive(Debug, Serialize)]
pub struct TitsLimitReport {
    pub depth: usize,
    /// (i, j, generator) triples where α_j and α_i disagreed; empty when
    /// the chain coheres.
    pub compat_failures: Vec<(usize, usize, String)>,
    pub compat_checked: usize,
    /// sp(a_0 ⋯ a_i) per stage, as names.
    pub conjugator_supports: Vec<Vec<String>>,
    pub supports_strictly_increase: bool,
}

pub struct TitsLimitWitness {
    pub graph: CoxeterGraph,
    pub report: TitsLimitReport,
}

pub fn tits_limit_witness(depth: usize) -> Result<TitsLimitWitness> {
    if !(2..=6).contains(&depth) {
        return Err(Error::input(format!("chain depth must be between 2 and 6, got {depth}")));
    }
    let mut b = crate::graph::GraphBuilder::new();
    let mut stage_of: Vec<usize> = Vec::new();
    let mut a_ids: Vec<VertexId> = Vec::new();
    for i in 0..=depth {
        let older: Vec<VertexId> = (0..b.vertex_count() as VertexId).collect();
        let a = b.add_vertex(&format!("a:{i}"))?;
        stage_of.push(i);
        for &o in &older {
            b.add_edge(a, o)?;
        }
        a_ids.push(a);
        b.add_vertex(&format!("b:{i}"))?;
        stage_of.push(i);
    }
    let graph = b.build();

    let mut conjugators: Vec<GroupElement> = Vec::with_capacity(depth + 1);
    for i in 0..=depth {
        conjugators.push(GroupElement::from_letters(&graph, &a_ids[..=i]));
    }

    let mut compat_failures = Vec::new();
    let mut compat_checked = 0;
    for i in 0..=depth {
        let stage_i_gens: Vec<VertexId> =
            graph.vertices().filter(|&v| stage_of[v as usize] <= i).collect();
        for j in i..=depth {
            for &x in &stage_i_gens {
                let gen = GroupElement::from_letters(&graph, &[x]);
                let via_j = gen.conjugate_by(&conjugators[j]).expect("same graph");
                let via_i = gen.conjugate_by(&conjugators[i]).expect("same graph");
                compat_checked += 1;
                if via_j != via_i {
                    compat_failures.push((i, j, graph.name(x).to_string()));
                }
            }
        }
    }

    let supports: Vec<VertexSet> = conjugators.iter().map(|c| c.support()).collect();
    let strictly = supports.windows(2).all(|w| {
        w[0].is_subset(&w[1]) && w[0].len() < w[1].len()
    });
    Ok(TitsLimitWitness {
        graph: graph.clone(),
        report: TitsLimitReport {
            depth,
            compat_failures,
            compat_checked,
            conjugator_supports: supports
                .iter()
                .map(|s| graph.names(s).iter().map(|n| n.to_string()).collect())
                .collect(),
            supports_strictly_increase: strictly,
        },
    })
}
