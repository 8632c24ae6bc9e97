//! Reflections: conjugates of generators, and how they sit inside
//! standard parabolic subgroups.
//!
//! The key computational fact is the subword lemma: if w·s·w⁻¹ lies in the
//! parabolic W_T, then deleting from a normal form of w every letter
//! outside T yields h with h·s·h⁻¹ = w·s·w⁻¹. So reflections of W that
//! happen to lie in W_T are honestly reflections *of* W_T, and a bounded
//! enumeration can exhibit the agreement set per radius.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, VertexId, VertexSet};
use crate::words::{enumerate_ball_with, BallBudget, GroupElement};

/// A reflection w·s·w⁻¹ together with the data that produced it.
#[derive(Clone, Debug)]
pub struct Reflection {
    pub axis: VertexId,
    pub conjugator: GroupElement,
    pub value: GroupElement,
}

/// Builds the reflection with axis `s` and conjugator `w`.
pub fn make_reflection(w: &GroupElement, s: VertexId) -> Result<Reflection> {
    let graph = w.graph();
    if s >= graph.vertex_count() as VertexId {
        return Err(Error::input(format!("axis index {s} out of range")));
    }
    let axis = GroupElement::from_letters(graph, &[s]);
    let value = axis.conjugate_by(w)?;
    Ok(Reflection { axis: s, conjugator: w.clone(), value })
}

/// Subword form of a reflection inside a parabolic.
///
/// Requires w·s·w⁻¹ ∈ W_T (domain error otherwise, reported with the
/// offending support letters). Returns h, the subword of the canonical
/// form of w keeping only letters in `t`; h·s·h⁻¹ = w·s·w⁻¹ and h ∈ W_T.
pub fn subword_conjugator(w: &GroupElement, s: VertexId, t: &VertexSet) -> Result<GroupElement> {
    let graph = w.graph();
    let n = graph.vertex_count() as VertexId;
    if s >= n {
        return Err(Error::input(format!("axis index {s} out of range")));
    }
    if let Some(&bad) = t.iter().find(|&&v| v >= n) {
        return Err(Error::input(format!("parabolic set contains index {bad}, out of range")));
    }
    let value = GroupElement::from_letters(graph, &[s]).conjugate_by(w)?;
    let outside: Vec<&str> = value
        .support()
        .iter()
        .filter(|v| !t.contains(v))
        .map(|&v| graph.name(v))
        .collect();
    if !outside.is_empty() {
        return Err(Error::domain(format!(
            "reflection is not in the parabolic: support letters {outside:?} lie outside T"
        )));
    }
    let kept: Vec<VertexId> =
        w.letters().iter().copied().filter(|l| t.contains(l)).collect();
    let h = GroupElement::from_letters(graph, &kept);
    debug_assert_eq!(
        GroupElement::from_letters(graph, &[s]).conjugate_by(&h).unwrap(),
        value,
        "subword lemma violated"
    );
    Ok(h)
}

/// Both sides of the reflection/parabolic agreement at one radius.
#[derive(Debug, Serialize)]
pub struct ReflectionAgreement {
    /// Reflections w·s·w⁻¹ with |w| ≤ radius whose support lies in T.
    pub global_in_parabolic: Vec<String>,
    /// Reflections of the parabolic itself: u·t·u⁻¹ with u over T, |u| ≤ radius.
    pub parabolic_own: Vec<String>,
    pub agree: bool,
}

/// Compares reflections of W that lie in W_T against reflections of W_T,
/// both enumerated to the same conjugator radius. By the subword lemma the
/// two sets coincide at every radius; this computes both sides honestly.
/// Caps: |G| ≤ 5, radius ≤ 6.
pub fn reflections_agree_on_parabolic(
    graph: &CoxeterGraph,
    t: &VertexSet,
    radius: usize,
) -> Result<ReflectionAgreement> {
    if graph.vertex_count() > 5 {
        return Err(Error::input(format!(
            "agreement check over {} vertices, cap is 5",
            graph.vertex_count()
        )));
    }
    if radius > 6 {
        return Err(Error::input(format!("agreement radius {radius} exceeds cap 6")));
    }
    let n = graph.vertex_count() as VertexId;
    if let Some(&bad) = t.iter().find(|&&v| v >= n) {
        return Err(Error::input(format!("parabolic set contains index {bad}, out of range")));
    }
    let budget = BallBudget { max_radius: 6, max_graph_vertices: 5, ..Default::default() };

    let mut global: std::collections::BTreeSet<Vec<VertexId>> = Default::default();
    for w in enumerate_ball_with(graph, radius, &budget)? {
        for s in graph.vertices() {
            let r = GroupElement::from_letters(graph, &[s]).conjugate_by(&w)?;
            if r.support().is_subset(t) {
                global.insert(r.letters().to_vec());
            }
        }
    }

    let sub = graph.induced(t);
    let back: Vec<VertexId> = sub
        .vertices()
        .map(|v| graph.vertex(sub.name(v)).expect("induced keeps names"))
        .collect();
    let mut own: std::collections::BTreeSet<Vec<VertexId>> = Default::default();
    for u in enumerate_ball_with(&sub, radius, &budget)? {
        for s in sub.vertices() {
            let mut letters: Vec<VertexId> = Vec::with_capacity(2 * u.len() + 1);
            letters.extend(u.letters().iter().map(|&l| back[l as usize]));
            letters.push(back[s as usize]);
            letters.extend(u.letters().iter().rev().map(|&l| back[l as usize]));
            own.insert(GroupElement::from_letters(graph, &letters).letters().to_vec());
        }
    }

    let show = |set: &std::collections::BTreeSet<Vec<VertexId>>| {
        set.iter()
            .map(|ls| GroupElement::from_letters(graph, ls).to_string())
            .collect::<Vec<_>>()
    };
    Ok(ReflectionAgreement {
        agree: global == own,
        global_in_parabolic: show(&global),
        parabolic_own: show(&own),
    })
}

/// Membership in the centralizer of the generator `v`: by the centralizer
/// lemma C_W(v) = W_st(v), so this is a support check.
pub fn centralizer_membership(x: &GroupElement, v: VertexId) -> Result<bool> {
    let graph = x.graph();
    if v >= graph.vertex_count() as VertexId {
        return Err(Error::input(format!("vertex index {v} out of range")));
    }
    let star = graph.star(v);
    Ok(x.support().is_subset(&star))
}
