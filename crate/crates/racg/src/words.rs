//! The word problem: Tits rewriting and canonical normal forms.
//!
//! Two moves generate all relations: cancelling an adjacent equal pair
//! (generators are involutions) and swapping two adjacent letters whose
//! vertices commute. A word is *normal* when no sequence of swaps exposes a
//! cancellation; all normal forms of an element differ only by swaps. The
//! canonical representative is the lexicographically least normal form
//! under the graph's vertex order, computed greedily: repeatedly emit the
//! least letter that can be commuted to the front.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, VertexId, VertexSet};

/// A letter sequence over a graph's generators, not necessarily reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    graph: CoxeterGraph,
    letters: Vec<VertexId>,
}

impl Word {
    /// Parses a whitespace-separated list of vertex names; the empty string
    /// is the empty word.
    pub fn parse(graph: &CoxeterGraph, text: &str) -> Result<Word> {
        let letters = text
            .split_whitespace()
            .map(|name| graph.vertex(name))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { graph: graph.clone(), letters })
    }

    pub fn from_ids(graph: &CoxeterGraph, letters: Vec<VertexId>) -> Result<Word> {
        let n = graph.vertex_count() as VertexId;
        if let Some(&bad) = letters.iter().find(|&&v| v >= n) {
            return Err(Error::input(format!("letter index {bad} out of range")));
        }
        Ok(Word { graph: graph.clone(), letters })
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn letters(&self) -> &[VertexId] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Normality criterion: for every pair of equal letters at positions
    /// i < j some strictly intermediate letter lies outside st(w[i]).
    /// Equivalently, no swap sequence brings two equal letters together.
    pub fn is_normal(&self) -> bool {
        let w = &self.letters;
        for i in 0..w.len() {
            'pair: for j in i + 1..w.len() {
                if w[i] != w[j] {
                    continue;
                }
                for &m in &w[i + 1..j] {
                    if m != w[i] && !self.graph.adjacent(m, w[i]) {
                        continue 'pair; // separator found
                    }
                }
                return false;
            }
        }
        true
    }

    /// Canonical form of the element this word represents.
    pub fn normal_form(&self) -> GroupElement {
        GroupElement::from_letters(&self.graph, &self.letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_letters(&self.graph, &self.letters, f)
    }
}

fn display_letters(graph: &CoxeterGraph, letters: &[VertexId], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if letters.is_empty() {
        return write!(f, "e");
    }
    for (i, &v) in letters.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{}", graph.name(v))?;
    }
    Ok(())
}

/// A group element, stored as its canonical normal form.
#[derive(Clone, Debug)]
pub struct GroupElement {
    graph: CoxeterGraph,
    letters: Box<[VertexId]>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.letters == other.letters
    }
}

impl Eq for GroupElement {}

impl std::hash::Hash for GroupElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

// `is_identity` is the emptiness test; an `is_empty` makes no sense on a
// group element.
#[allow(clippy::len_without_is_empty)]
impl GroupElement {
    pub fn identity(graph: &CoxeterGraph) -> GroupElement {
        GroupElement { graph: graph.clone(), letters: Box::new([]) }
    }

    pub fn generator(graph: &CoxeterGraph, name: &str) -> Result<GroupElement> {
        let v = graph.vertex(name)?;
        Ok(GroupElement { graph: graph.clone(), letters: Box::new([v]) })
    }

    pub fn parse(graph: &CoxeterGraph, text: &str) -> Result<GroupElement> {
        Ok(Word::parse(graph, text)?.normal_form())
    }

    pub fn from_letters(graph: &CoxeterGraph, letters: &[VertexId]) -> GroupElement {
        let reduced = reduce(graph, letters);
        let canonical = canonicalize(graph, reduced);
        GroupElement { graph: graph.clone(), letters: canonical.into_boxed_slice() }
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn letters(&self) -> &[VertexId] {
        &self.letters
    }

    /// Coxeter length: the length of any normal form.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Support sp(w): the set of letters of any normal form. Well-defined
    /// because normal forms differ only by swaps.
    pub fn support(&self) -> VertexSet {
        self.letters.iter().copied().collect()
    }

    fn check_same_graph(&self, other: &GroupElement, op: &str) -> Result<()> {
        if self.graph != other.graph {
            return Err(Error::input(format!("{op}: elements live over different graphs")));
        }
        Ok(())
    }

    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check_same_graph(other, "multiply")?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(GroupElement::from_letters(&self.graph, &letters))
    }

    /// Inverse: generators are involutions, so reverse the word.
    pub fn inverse(&self) -> GroupElement {
        let mut letters: Vec<VertexId> = self.letters.to_vec();
        letters.reverse();
        GroupElement::from_letters(&self.graph, &letters)
    }

    /// `by` · self · `by`⁻¹.
    pub fn conjugate_by(&self, by: &GroupElement) -> Result<GroupElement> {
        self.check_same_graph(by, "conjugate")?;
        let mut letters = Vec::with_capacity(self.len() + 2 * by.len());
        letters.extend_from_slice(&by.letters);
        letters.extend_from_slice(&self.letters);
        letters.extend(by.letters.iter().rev());
        Ok(GroupElement::from_letters(&self.graph, &letters))
    }

    pub fn equal(&self, other: &GroupElement) -> Result<bool> {
        self.check_same_graph(other, "equal")?;
        Ok(self.letters == other.letters)
    }

    /// Membership in the standard parabolic subgroup generated by `t`:
    /// equivalent to sp(w) ⊆ t.
    pub fn in_standard_parabolic(&self, t: &VertexSet) -> Result<bool> {
        let n = self.graph.vertex_count() as VertexId;
        if let Some(&bad) = t.iter().find(|&&v| v >= n) {
            return Err(Error::input(format!("parabolic set contains index {bad}, out of range")));
        }
        Ok(self.letters.iter().all(|l| t.contains(l)))
    }

    pub fn to_word(&self) -> Word {
        Word { graph: self.graph.clone(), letters: self.letters.to_vec() }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_letters(&self.graph, &self.letters, f)
    }
}

/// One left-to-right pass with a reduced prefix: each new letter either
/// cancels the rightmost equal letter it can be commuted next to, or is
/// appended. The prefix stays reduced throughout, so the result is reduced.
fn reduce(graph: &CoxeterGraph, letters: &[VertexId]) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = Vec::with_capacity(letters.len());
    'next: for &s in letters {
        for k in (0..out.len()).rev() {
            if out[k] == s {
                out.remove(k);
                continue 'next;
            }
            if !graph.adjacent(out[k], s) {
                break; // blocked: s cannot move past this letter
            }
        }
        out.push(s);
    }
    out
}

/// Lexicographically least word in the swap-orbit of a reduced word:
/// greedily take the least letter whose whole left context commutes with it.
fn canonicalize(graph: &CoxeterGraph, mut rem: Vec<VertexId>) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(rem.len());
    while !rem.is_empty() {
        let mut best: Option<usize> = None;
        'pos: for p in 0..rem.len() {
            for &y in &rem[..p] {
                if !graph.adjacent(rem[p], y) {
                    continue 'pos;
                }
            }
            if best.is_none_or(|b| rem[p] < rem[b]) {
                best = Some(p);
            }
        }
        out.push(rem.remove(best.expect("front letter is always available")));
    }
    out
}

/// Budget for `enumerate_ball`.
#[derive(Clone, Copy, Debug)]
pub struct BallBudget {
    pub max_radius: usize,
    pub max_graph_vertices: usize,
    pub max_elements: usize,
}

impl Default for BallBudget {
    fn default() -> Self {
        BallBudget { max_radius: 10, max_graph_vertices: 6, max_elements: 200_000 }
    }
}

/// All elements of length at most `radius`, ordered by length then
/// lexicographically by canonical form.
///
/// Layered search: every element of length k+1 is (element of length k) · s,
/// so each layer is built from the previous one through right
/// multiplication. Budget violations are resource errors carrying the
/// partial count.
pub fn enumerate_ball(graph: &CoxeterGraph, radius: usize) -> Result<Vec<GroupElement>> {
    enumerate_ball_with(graph, radius, &BallBudget::default())
}

pub fn enumerate_ball_with(
    graph: &CoxeterGraph,
    radius: usize,
    budget: &BallBudget,
) -> Result<Vec<GroupElement>> {
    if radius > budget.max_radius {
        return Err(Error::input(format!(
            "ball radius {radius} exceeds cap {}",
            budget.max_radius
        )));
    }
    if graph.vertex_count() > budget.max_graph_vertices {
        return Err(Error::input(format!(
            "ball over {} vertices exceeds cap {}",
            graph.vertex_count(),
            budget.max_graph_vertices
        )));
    }
    let mut seen: HashSet<Box<[VertexId]>> = HashSet::new();
    seen.insert(Box::new([]));
    let mut all: Vec<Vec<VertexId>> = vec![Vec::new()];
    let mut layer: Vec<Vec<VertexId>> = vec![Vec::new()];
    for r in 0..radius {
        let mut next = Vec::new();
        for x in &layer {
            for s in graph.vertices() {
                let mut cand = x.clone();
                cand.push(s);
                let canon = canonicalize(graph, reduce(graph, &cand));
                if canon.len() == r + 1 && seen.insert(canon.clone().into_boxed_slice()) {
                    if seen.len() > budget.max_elements {
                        return Err(Error::resource(format!(
                            "ball exceeds {} elements (radius {} of {radius}, {} found)",
                            budget.max_elements,
                            r + 1,
                            seen.len()
                        )));
                    }
                    next.push(canon);
                }
            }
        }
        next.sort_unstable();
        all.extend(next.iter().cloned());
        layer = next;
    }
    Ok(all
        .into_iter()
        .map(|letters| GroupElement { graph: graph.clone(), letters: letters.into_boxed_slice() })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> CoxeterGraph {
        CoxeterGraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    fn free2() -> CoxeterGraph {
        CoxeterGraph::new::<&str>(&["x", "y"], &[]).unwrap()
    }

    #[test]
    fn normal_form_collapses_commuting_cancellation() {
        let g = p3();
        let w = Word::parse(&g, "a b a").unwrap();
        assert!(!w.is_normal());
        assert_eq!(w.normal_form().to_string(), "b");
        assert_eq!(Word::parse(&g, "b a b").unwrap().normal_form().to_string(), "a");
        // a and c do not commute: "a c a" is already normal.
        assert!(Word::parse(&g, "a c a").unwrap().is_normal());
    }

    #[test]
    fn canonical_is_lex_least_over_swaps() {
        let g = p3();
        // b and c commute; the canonical form starts with the smaller vertex.
        assert_eq!(Word::parse(&g, "c b").unwrap().normal_form().to_string(), "b c");
        assert_eq!(Word::parse(&g, "b c").unwrap().normal_form().to_string(), "b c");
        // c cannot move past a.
        assert_eq!(Word::parse(&g, "c a").unwrap().normal_form().to_string(), "c a");
    }

    #[test]
    fn infinite_dihedral_alternation_is_normal() {
        let g = free2();
        let w = Word::parse(&g, "x y x y x").unwrap();
        assert!(w.is_normal());
        assert_eq!(w.normal_form().len(), 5);
        assert_eq!(Word::parse(&g, "x x").unwrap().normal_form().len(), 0);
    }

    #[test]
    fn element_algebra() {
        let g = p3();
        let x = GroupElement::parse(&g, "a b").unwrap();
        let y = GroupElement::parse(&g, "b c").unwrap();
        let xy = x.multiply(&y).unwrap();
        assert_eq!(xy.to_string(), "a c");
        assert!(x.multiply(&x.inverse()).unwrap().is_identity());
        // (ab)² = e because a and b commute and are involutions.
        assert!(x.multiply(&x).unwrap().is_identity());
        let other = GroupElement::parse(&free2(), "x").unwrap();
        assert!(x.multiply(&other).is_err());
        assert!(x.equal(&other).is_err());
    }

    #[test]
    fn support_and_parabolic_membership() {
        let g = p3();
        let x = GroupElement::parse(&g, "a b a").unwrap();
        assert_eq!(g.names(&x.support()), vec!["b"]);
        assert!(x.in_standard_parabolic(&VertexSet::from([1])).unwrap());
        assert!(!x.in_standard_parabolic(&VertexSet::from([0, 2])).unwrap());
        assert!(x.in_standard_parabolic(&VertexSet::from([7])).is_err());
    }

    #[test]
    fn ball_on_two_isolated_vertices() {
        let g = free2();
        let ball = enumerate_ball(&g, 2).unwrap();
        let shown: Vec<String> = ball.iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, vec!["e", "x", "y", "x y", "y x"]);
    }

    #[test]
    fn ball_budgets() {
        let g = free2();
        assert!(enumerate_ball(&g, 11).is_err());
        let seven = CoxeterGraph::complete(7);
        assert!(enumerate_ball(&seven, 1).is_err());
        let tight = BallBudget { max_elements: 4, ..Default::default() };
        let err = enumerate_ball_with(&g, 2, &tight).unwrap_err();
        assert!(matches!(err, Error::Resource(_)), "{err}");
    }

    #[test]
    fn ball_on_commuting_pair_is_the_klein_group() {
        let g = CoxeterGraph::new(&["x", "y"], &[("x", "y")]).unwrap();
        let ball = enumerate_ball(&g, 5).unwrap();
        assert_eq!(ball.len(), 4); // e, x, y, xy
    }
}
