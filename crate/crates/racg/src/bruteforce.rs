//! Brute-force reference implementations, kept deliberately independent of
//! the production algorithms so the two can be played against each other.
//!
//! The rewrite oracle answers the word problem by exhaustive search over
//! the two moves themselves: breadth-first through a word's swap orbit,
//! descending whenever any orbit member exposes an adjacent equal pair.
//! From any word the reachable minimal words are exactly the normal forms
//! of its element, so the least of them is a canonical form computed
//! without any of the greedy machinery in `words`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use crate::graph::{CoxeterGraph, VertexId};

/// Memoizing exhaustive solver for the word problem over one graph.
pub struct RewriteOracle {
    graph: CoxeterGraph,
    memo: HashMap<Box<[VertexId]>, Arc<[VertexId]>>,
}

impl RewriteOracle {
    pub fn new(graph: &CoxeterGraph) -> Self {
        RewriteOracle { graph: graph.clone(), memo: HashMap::new() }
    }

    /// Lexicographically least minimal-length word reachable from `word` by
    /// cancellations and swaps.
    pub fn canonical(&mut self, word: &[VertexId]) -> Vec<VertexId> {
        self.solve(word).to_vec()
    }

    pub fn min_length(&mut self, word: &[VertexId]) -> usize {
        self.solve(word).len()
    }

    /// Whether `word` already has minimal length in its element.
    pub fn is_reduced(&mut self, word: &[VertexId]) -> bool {
        self.min_length(word) == word.len()
    }

    fn solve(&mut self, word: &[VertexId]) -> Arc<[VertexId]> {
        if let Some(hit) = self.memo.get(word) {
            return hit.clone();
        }
        let orbit = self.swap_orbit(word);
        let mut answer: Option<Arc<[VertexId]>> =
            orbit.iter().find_map(|u| self.memo.get(u.as_slice()).cloned());
        if answer.is_none() {
            'cancel: for u in &orbit {
                for i in 0..u.len().saturating_sub(1) {
                    if u[i] == u[i + 1] {
                        let mut child = u.clone();
                        child.remove(i + 1);
                        child.remove(i);
                        answer = Some(self.solve(&child));
                        break 'cancel;
                    }
                }
            }
        }
        let answer = answer
            .unwrap_or_else(|| Arc::from(orbit.iter().min().expect("orbit nonempty").as_slice()));
        for u in orbit {
            self.memo.insert(u.into_boxed_slice(), answer.clone());
        }
        answer
    }

    /// All words reachable from `word` using swaps alone.
    fn swap_orbit(&self, word: &[VertexId]) -> BTreeSet<Vec<VertexId>> {
        let mut seen: BTreeSet<Vec<VertexId>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<VertexId>> = VecDeque::new();
        seen.insert(word.to_vec());
        queue.push_back(word.to_vec());
        while let Some(u) = queue.pop_front() {
            for i in 0..u.len().saturating_sub(1) {
                if u[i] != u[i + 1] && self.graph.adjacent(u[i], u[i + 1]) {
                    let mut v = u.clone();
                    v.swap(i, i + 1);
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
        seen
    }

    /// The ball of the given radius, as canonical words, produced by
    /// canonicalizing every word over the alphabet up to that length.
    pub fn ball_by_words(&mut self, radius: usize) -> BTreeSet<Vec<VertexId>> {
        let n = self.graph.vertex_count() as VertexId;
        let mut out = BTreeSet::new();
        let mut frontier: Vec<Vec<VertexId>> = vec![Vec::new()];
        out.insert(Vec::new());
        for _ in 0..radius {
            let mut next = Vec::new();
            for w in &frontier {
                for s in 0..n {
                    let mut cand = w.clone();
                    cand.push(s);
                    let canon = self.canonical(&cand);
                    if canon.len() <= radius {
                        out.insert(canon);
                    }
                    next.push(cand);
                }
            }
            frontier = next;
        }
        out
    }
}

/// Star property by plain quantifier expansion over vertex lists.
pub fn star_property_naive(g: &CoxeterGraph) -> bool {
    let verts: Vec<VertexId> = g.vertices().collect();
    for &v in &verts {
        for &u in &verts {
            if u == v {
                continue;
            }
            let contained = verts
                .iter()
                .filter(|&&x| x == v || g.adjacent(v, x))
                .all(|&x| x == u || g.adjacent(u, x));
            if contained {
                return false;
            }
        }
    }
    true
}

/// Star-connectedness with reachability computed by transitive closure of
/// the adjacency matrix rather than graph search.
pub fn star_connected_naive(g: &CoxeterGraph) -> bool {
    let n = g.vertex_count();
    for v in g.vertices() {
        let alive: Vec<VertexId> =
            g.vertices().filter(|&u| u != v && !g.adjacent(u, v)).collect();
        if alive.len() <= 1 {
            continue;
        }
        let mut reach = vec![vec![false; n]; n];
        for &a in &alive {
            reach[a as usize][a as usize] = true;
            for &b in &alive {
                if g.adjacent(a, b) {
                    reach[a as usize][b as usize] = true;
                }
            }
        }
        for &k in &alive {
            for &i in &alive {
                for &j in &alive {
                    if reach[i as usize][k as usize] && reach[k as usize][j as usize] {
                        reach[i as usize][j as usize] = true;
                    }
                }
            }
        }
        let first = alive[0] as usize;
        if !alive.iter().all(|&b| reach[first][b as usize]) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CoxeterGraph;

    #[test]
    fn oracle_handles_the_p3_classics() {
        let g = CoxeterGraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let mut o = RewriteOracle::new(&g);
        assert_eq!(o.canonical(&[0, 1, 0]), vec![1]);
        assert_eq!(o.canonical(&[2, 1]), vec![1, 2]);
        assert_eq!(o.canonical(&[0, 0]), Vec::<u32>::new());
        assert!(o.is_reduced(&[0, 2, 0]));
        assert!(!o.is_reduced(&[0, 1, 0]));
    }

    #[test]
    fn oracle_ball_matches_hand_count() {
        let g = CoxeterGraph::new::<&str>(&["x", "y"], &[]).unwrap();
        let mut o = RewriteOracle::new(&g);
        let ball = o.ball_by_words(3);
        // infinite dihedral: 1 + 2 + 2 + 2
        assert_eq!(ball.len(), 7);
    }

    #[test]
    fn naive_predicates_on_known_graphs() {
        assert!(star_property_naive(&CoxeterGraph::cycle(4)));
        assert!(!star_property_naive(&CoxeterGraph::path(4)));
        assert!(star_connected_naive(&CoxeterGraph::path(4)));
        assert!(!star_connected_naive(&CoxeterGraph::path(5)));
    }
}
