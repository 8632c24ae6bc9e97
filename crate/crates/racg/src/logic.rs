//! Bounded back-and-forth games with graph-to-group strategy transfer, a
//! clique-gadget encoding of graphs into incidence structures (with a
//! decoder), and the degree-law axiom checker with an independent
//! quantifier-expansion cross-evaluator.

pub mod fo;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, VertexId, VertexSet};
use crate::words::{GroupElement, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum EFStatus {
    Ongoing,
    IiLoses { round: usize },
    IiSurvives { rounds: usize },
}

/// One move by player I: a vertex tuple in graph mode, a group element in
/// group mode.
#[derive(Clone, Debug)]
pub enum EFMove {
    Vertices(Vec<VertexId>),
    Element(GroupElement),
}

#[derive(Clone, Debug)]
enum Transcript {
    Graph(Vec<(Vec<VertexId>, Vec<VertexId>)>),
    Group(Vec<(GroupElement, GroupElement)>),
}

/// A bounded game position. Rounds are tuple rounds: player I plays up to
/// `tuple_cap` letters per round (a vertex tuple, or a group element of
/// that canonical length) and player II answers letter-wise on the other
/// structure.
#[derive(Clone, Debug)]
pub struct EFPosition {
    left: CoxeterGraph,
    right: CoxeterGraph,
    bound: usize,
    tuple_cap: usize,
    transcript: Transcript,
    /// Letter correspondence accumulated from the played rounds, as
    /// (left vertex, right vertex), deduplicated in play order.
    letter_pairs: Vec<(VertexId, VertexId)>,
}

impl EFPosition {
    pub fn graph_game(
        left: &CoxeterGraph,
        right: &CoxeterGraph,
        bound: usize,
        tuple_cap: usize,
    ) -> Result<EFPosition> {
        Self::new(left, right, bound, tuple_cap, Transcript::Graph(Vec::new()))
    }

    pub fn group_game(
        left: &CoxeterGraph,
        right: &CoxeterGraph,
        bound: usize,
        tuple_cap: usize,
    ) -> Result<EFPosition> {
        Self::new(left, right, bound, tuple_cap, Transcript::Group(Vec::new()))
    }

    fn new(
        left: &CoxeterGraph,
        right: &CoxeterGraph,
        bound: usize,
        tuple_cap: usize,
        transcript: Transcript,
    ) -> Result<EFPosition> {
        if bound == 0 || bound > 5 {
            return Err(Error::input(format!("round bound must be 1..=5, got {bound}")));
        }
        if tuple_cap == 0 || tuple_cap > 4 {
            return Err(Error::input(format!("tuple cap must be 1..=4, got {tuple_cap}")));
        }
        Ok(EFPosition {
            left: left.clone(),
            right: right.clone(),
            bound,
            tuple_cap,
            transcript,
            letter_pairs: Vec::new(),
        })
    }

    pub fn rounds_played(&self) -> usize {
        match &self.transcript {
            Transcript::Graph(r) => r.len(),
            Transcript::Group(r) => r.len(),
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn letter_pairs(&self) -> &[(VertexId, VertexId)] {
        &self.letter_pairs
    }

    pub fn side_graph(&self, side: Side) -> &CoxeterGraph {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn group_rounds(&self) -> Option<&[(GroupElement, GroupElement)]> {
        match &self.transcript {
            Transcript::Group(r) => Some(r),
            Transcript::Graph(_) => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rounds = match &self.transcript {
            Transcript::Graph(r) => r
                .iter()
                .map(|(l, rt)| {
                    json!({
                        "left": l.iter().map(|&v| self.left.name(v)).collect::<Vec<_>>(),
                        "right": rt.iter().map(|&v| self.right.name(v)).collect::<Vec<_>>(),
                    })
                })
                .collect::<Vec<_>>(),
            Transcript::Group(r) => r
                .iter()
                .map(|(l, rt)| json!({ "left": l.to_string(), "right": rt.to_string() }))
                .collect::<Vec<_>>(),
        };
        json!({
            "mode": match &self.transcript {
                Transcript::Graph(_) => "graph",
                Transcript::Group(_) => "group",
            },
            "bound": self.bound,
            "tuple_cap": self.tuple_cap,
            "rounds": rounds,
        })
    }

    fn push_letters(&mut self, moved: &[VertexId], reply: &[VertexId], side: Side) {
        for (&m, &r) in moved.iter().zip(reply) {
            let pair = match side {
                Side::Left => (m, r),
                Side::Right => (r, m),
            };
            if !self.letter_pairs.contains(&pair) {
                self.letter_pairs.push(pair);
            }
        }
    }
}

/// Player II. Receives the letters of I's move (a vertex tuple, or the
/// canonical form of a group element) and must answer with a letter-aligned
/// tuple on the opposite structure. Returning None resigns the round.
pub trait IiStrategy {
    fn reply_tuple(
        &mut self,
        pos: &EFPosition,
        mv: &[VertexId],
        side: Side,
    ) -> Option<Vec<VertexId>>;
}

/// Letter pairs must form a partial isomorphism: equal on one side iff
/// equal on the other, adjacent iff adjacent.
fn is_partial_iso(
    left: &CoxeterGraph,
    right: &CoxeterGraph,
    pairs: &[(VertexId, VertexId)],
) -> bool {
    for (i, &(l1, r1)) in pairs.iter().enumerate() {
        for &(l2, r2) in &pairs[i + 1..] {
            if (l1 == l2) != (r1 == r2) {
                return false;
            }
            if left.adjacent(l1, l2) != right.adjacent(r1, r2) {
                return false;
            }
        }
    }
    true
}

/// Applies player I's move, asks the strategy for II's reply, and scores
/// the round: graph mode runs the partial-isomorphism check on the letter
/// pairs, group mode runs `group_position_check` on the element pairs.
pub fn ef_referee(
    pos: &mut EFPosition,
    mv: EFMove,
    side: Side,
    strategy: &mut dyn IiStrategy,
) -> Result<EFStatus> {
    if pos.rounds_played() >= pos.bound {
        return Err(Error::input(format!("game is over after {} rounds", pos.bound)));
    }
    let round = pos.rounds_played() + 1;
    let own = pos.side_graph(side).clone();
    let other = pos.side_graph(side.flip()).clone();
    let letters: Vec<VertexId> = match (&pos.transcript, &mv) {
        (Transcript::Graph(_), EFMove::Vertices(ts)) => ts.clone(),
        (Transcript::Group(_), EFMove::Element(g)) => {
            if g.graph() != &own {
                return Err(Error::input(
                    "element move is not over the declared structure".to_string(),
                ));
            }
            g.letters().to_vec()
        }
        _ => return Err(Error::input("move kind does not match the game mode".to_string())),
    };
    if letters.is_empty() || letters.len() > pos.tuple_cap {
        return Err(Error::input(format!(
            "move must carry 1..={} letters, got {}",
            pos.tuple_cap,
            letters.len()
        )));
    }
    if let Some(&v) = letters.iter().find(|&&v| v as usize >= own.vertex_count()) {
        return Err(Error::input(format!("vertex {v} is not in the declared structure")));
    }

    let reply = match strategy.reply_tuple(pos, &letters, side) {
        Some(r) => r,
        None => return Ok(EFStatus::IiLoses { round }),
    };
    if reply.len() != letters.len() {
        return Err(Error::input("reply is not letter-aligned with the move".to_string()));
    }
    if let Some(&v) = reply.iter().find(|&&v| v as usize >= other.vertex_count()) {
        return Err(Error::input(format!("reply vertex {v} is not in the other structure")));
    }

    pos.push_letters(&letters, &reply, side);
    let ok = match &mut pos.transcript {
        Transcript::Graph(rounds) => {
            let pair = match side {
                Side::Left => (letters, reply),
                Side::Right => (reply, letters),
            };
            rounds.push(pair);
            is_partial_iso(&pos.left, &pos.right, &pos.letter_pairs)
        }
        Transcript::Group(rounds) => {
            let moved = GroupElement::from_letters(&own, &letters);
            let answered = GroupElement::from_letters(&other, &reply);
            let pair = match side {
                Side::Left => (moved, answered),
                Side::Right => (answered, moved),
            };
            rounds.push(pair);
            group_position_check(rounds)?
        }
    };
    if !ok {
        return Ok(EFStatus::IiLoses { round });
    }
    if pos.rounds_played() == pos.bound {
        Ok(EFStatus::IiSurvives { rounds: pos.bound })
    } else {
        Ok(EFStatus::Ongoing)
    }
}

/// Copies I's letters verbatim; only sensible when both sides are the same
/// graph.
pub struct CopyStrategy;

impl IiStrategy for CopyStrategy {
    fn reply_tuple(
        &mut self,
        _pos: &EFPosition,
        mv: &[VertexId],
        _side: Side,
    ) -> Option<Vec<VertexId>> {
        Some(mv.to_vec())
    }
}

/// Applies a fixed left-to-right vertex bijection letter-wise (inverted
/// when I moves on the right).
pub struct MapStrategy {
    pub to_right: Vec<VertexId>,
}

impl IiStrategy for MapStrategy {
    fn reply_tuple(
        &mut self,
        _pos: &EFPosition,
        mv: &[VertexId],
        side: Side,
    ) -> Option<Vec<VertexId>> {
        mv.iter()
            .map(|&v| match side {
                Side::Left => self.to_right.get(v as usize).copied(),
                Side::Right => self
                    .to_right
                    .iter()
                    .position(|&t| t == v)
                    .map(|i| i as VertexId),
            })
            .collect()
    }
}

type LetterMap = Vec<(VertexId, VertexId)>;

/// Memoized search of the tuple game: can II survive `rounds` more rounds
/// from a given letter correspondence?
pub struct GameSolver {
    left: CoxeterGraph,
    right: CoxeterGraph,
    tuple_cap: usize,
    memo: HashMap<(LetterMap, usize), bool>,
}

impl GameSolver {
    pub fn new(left: &CoxeterGraph, right: &CoxeterGraph, tuple_cap: usize) -> Result<GameSolver> {
        if left.vertex_count() > 6 || right.vertex_count() > 6 {
            return Err(Error::input(
                "game search is capped at 6 vertices per side".to_string(),
            ));
        }
        if tuple_cap == 0 || tuple_cap > 4 {
            return Err(Error::input(format!("tuple cap must be 1..=4, got {tuple_cap}")));
        }
        Ok(GameSolver {
            left: left.clone(),
            right: right.clone(),
            tuple_cap,
            memo: HashMap::new(),
        })
    }

    /// All ways to extend `map` with images for the unmapped vertices of
    /// `need` (on `side`) that keep the correspondence a partial
    /// isomorphism. Targets are scanned in ascending order, so the list is
    /// lexicographically ordered.
    fn extensions(&self, map: &LetterMap, need: &[VertexId], side: Side) -> Vec<LetterMap> {
        let unmapped: Vec<VertexId> = need
            .iter()
            .copied()
            .filter(|&v| {
                !map.iter().any(|&(l, r)| match side {
                    Side::Left => l == v,
                    Side::Right => r == v,
                })
            })
            .collect();
        let mut out = Vec::new();
        let mut acc = map.clone();
        self.extend_rec(&mut acc, &unmapped, side, &mut out, map.len());
        out
    }

    fn extend_rec(
        &self,
        acc: &mut LetterMap,
        todo: &[VertexId],
        side: Side,
        out: &mut Vec<LetterMap>,
        base: usize,
    ) {
        let Some((&v, rest)) = todo.split_first() else {
            out.push(acc[base..].to_vec());
            return;
        };
        let target_graph = match side {
            Side::Left => &self.right,
            Side::Right => &self.left,
        };
        for t in target_graph.vertices() {
            let pair = match side {
                Side::Left => (v, t),
                Side::Right => (t, v),
            };
            acc.push(pair);
            if is_partial_iso(&self.left, &self.right, acc) {
                self.extend_rec(acc, rest, side, out, base);
            }
            acc.pop();
        }
    }

    /// True when II can survive `rounds` further rounds from `map` against
    /// every tuple player I may choose on either side.
    pub fn ii_wins(&mut self, map: &LetterMap, rounds: usize) -> bool {
        if rounds == 0 {
            return true;
        }
        let mut key = map.clone();
        key.sort_unstable();
        key.dedup();
        if let Some(&hit) = self.memo.get(&(key.clone(), rounds)) {
            return hit;
        }
        let mut verdict = true;
        'outer: for side in [Side::Left, Side::Right] {
            let n = match side {
                Side::Left => self.left.vertex_count(),
                Side::Right => self.right.vertex_count(),
            };
            for subset in 1u32..1 << n {
                if (subset.count_ones() as usize) > self.tuple_cap {
                    continue;
                }
                let need: Vec<VertexId> =
                    (0..n as VertexId).filter(|v| subset & (1 << v) != 0).collect();
                let survivable = self
                    .extensions(map, &need, side)
                    .into_iter()
                    .any(|ext| {
                        let mut next = map.clone();
                        next.extend(ext);
                        self.ii_wins(&next, rounds - 1)
                    });
                if !survivable {
                    verdict = false;
                    break 'outer;
                }
            }
        }
        self.memo.insert((key, rounds), verdict);
        verdict
    }
}

/// Exhaustive verdict of the bounded tuple game on two graphs.
pub fn ii_wins_graph_game(
    left: &CoxeterGraph,
    right: &CoxeterGraph,
    rounds: usize,
    tuple_cap: usize,
) -> Result<bool> {
    if rounds > 5 {
        return Err(Error::input(format!("round bound must be at most 5, got {rounds}")));
    }
    let mut solver = GameSolver::new(left, right, tuple_cap)?;
    Ok(solver.ii_wins(&Vec::new(), rounds))
}

/// Plays optimally using the game search: each reply keeps the position
/// winning for the rounds that remain, falling back to any consistent
/// extension when no winning one exists.
pub struct DerivedStrategy {
    solver: GameSolver,
}

impl DerivedStrategy {
    pub fn new(left: &CoxeterGraph, right: &CoxeterGraph, tuple_cap: usize) -> Result<DerivedStrategy> {
        Ok(DerivedStrategy { solver: GameSolver::new(left, right, tuple_cap)? })
    }
}

impl IiStrategy for DerivedStrategy {
    fn reply_tuple(
        &mut self,
        pos: &EFPosition,
        mv: &[VertexId],
        side: Side,
    ) -> Option<Vec<VertexId>> {
        let map: LetterMap = pos.letter_pairs().to_vec();
        let mut need: Vec<VertexId> = mv.to_vec();
        need.sort_unstable();
        need.dedup();
        let rounds_after = pos.bound() - pos.rounds_played() - 1;
        let exts = self.solver.extensions(&map, &need, side);
        let chosen = exts
            .iter()
            .find(|ext| {
                let mut next = map.clone();
                next.extend(ext.iter().copied());
                self.solver.ii_wins(&next, rounds_after)
            })
            .or_else(|| exts.first())?
            .clone();
        let lookup: LetterMap = map.into_iter().chain(chosen).collect();
        mv.iter()
            .map(|&v| {
                lookup.iter().find_map(|&(l, r)| match side {
                    Side::Left if l == v => Some(r),
                    Side::Right if r == v => Some(l),
                    _ => None,
                })
            })
            .collect()
    }
}

/// Decides whether one letter-level map β explains every pair: β is a
/// partial graph isomorphism, carries the support of each left element
/// onto the support of its right partner, and sends the left canonical
/// form to a normal word for the right element.
pub fn group_position_check(pairs: &[(GroupElement, GroupElement)]) -> Result<bool> {
    let Some((first_l, first_r)) = pairs.first() else {
        return Ok(true);
    };
    let left = first_l.graph().clone();
    let right = first_r.graph().clone();
    for (x, y) in pairs {
        if x.graph() != &left || y.graph() != &right {
            return Err(Error::input(
                "all pairs must share one graph per side".to_string(),
            ));
        }
    }
    let mut beta: LetterMap = Vec::new();
    Ok(beta_search(&left, &right, pairs, 0, &mut beta))
}

fn beta_search(
    left: &CoxeterGraph,
    right: &CoxeterGraph,
    pairs: &[(GroupElement, GroupElement)],
    idx: usize,
    beta: &mut LetterMap,
) -> bool {
    let Some((x, y)) = pairs.get(idx) else {
        return true;
    };
    let sp_x: Vec<VertexId> = x.support().into_iter().collect();
    let sp_y: VertexSet = y.support();
    if sp_x.len() != sp_y.len() {
        return false;
    }
    assign_support(left, right, pairs, idx, beta, &sp_x, &sp_y, 0)
}

#[allow(clippy::too_many_arguments)]
fn assign_support(
    left: &CoxeterGraph,
    right: &CoxeterGraph,
    pairs: &[(GroupElement, GroupElement)],
    idx: usize,
    beta: &mut LetterMap,
    sp_x: &[VertexId],
    sp_y: &VertexSet,
    at: usize,
) -> bool {
    if at == sp_x.len() {
        let (x, y) = &pairs[idx];
        let image: Vec<VertexId> = x
            .letters()
            .iter()
            .map(|&l| beta.iter().find(|&&(a, _)| a == l).expect("support mapped").1)
            .collect();
        let as_element = GroupElement::from_letters(right, &image);
        if &as_element != y {
            return false;
        }
        let word = Word::from_ids(right, image).expect("letters are in range");
        if !word.is_normal() {
            return false;
        }
        return beta_search(left, right, pairs, idx + 1, beta);
    }
    let v = sp_x[at];
    if let Some(&(_, mapped)) = beta.iter().find(|&&(a, _)| a == v) {
        // already pinned by an earlier pair; it must land inside sp(y)
        if !sp_y.contains(&mapped) {
            return false;
        }
        return assign_support(left, right, pairs, idx, beta, sp_x, sp_y, at + 1);
    }
    for &t in sp_y {
        beta.push((v, t));
        if is_partial_iso(left, right, beta)
            && assign_support(left, right, pairs, idx, beta, sp_x, sp_y, at + 1)
        {
            return true;
        }
        beta.pop();
    }
    false
}

/// Sizes of the gadget construction: every node gets a clique of
/// `clique_size` fresh vertices; a vertex-node is adjacent to all but
/// `vertex_detached` of its clique, an edge-node to exactly
/// `edge_attached` of its clique. The two attachment counts must differ,
/// which is what lets the decoder tell the node kinds apart. The closure
/// adds, `closure_depth` times, a fresh vertex for every unrealized
/// neighborhood of size at most `closure_set_cap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EncodeParams {
    pub clique_size: usize,
    pub vertex_detached: usize,
    pub edge_attached: usize,
    pub closure_depth: usize,
    pub closure_set_cap: usize,
}

impl Default for EncodeParams {
    fn default() -> Self {
        EncodeParams {
            clique_size: 6,
            vertex_detached: 2,
            edge_attached: 3,
            closure_depth: 0,
            closure_set_cap: 2,
        }
    }
}

impl EncodeParams {
    fn validate(&self) -> Result<()> {
        let p = self.clique_size;
        let q = self.vertex_detached;
        let r = self.edge_attached;
        if p > 12 {
            return Err(Error::input(format!("clique size {p} exceeds cap 12")));
        }
        if q < 2 || p <= 2 * q {
            return Err(Error::input(format!(
                "need clique_size > 2 * vertex_detached and vertex_detached >= 2, got {p} and {q}"
            )));
        }
        if r < 1 || r > p - 2 {
            return Err(Error::input(format!(
                "edge attachment must be between 1 and clique_size - 2, got {r}"
            )));
        }
        if r == p - q {
            return Err(Error::input(
                "vertex and edge attachment counts must differ".to_string(),
            ));
        }
        if self.closure_depth > 2 {
            return Err(Error::input(format!(
                "closure depth {} exceeds cap 2",
                self.closure_depth
            )));
        }
        if self.closure_set_cap > 3 {
            return Err(Error::input(format!(
                "closure set bound {} exceeds cap 3",
                self.closure_set_cap
            )));
        }
        // stripping closure vertices by degree must not touch the originals
        if self.closure_set_cap >= (p - q).min(r + 2) {
            return Err(Error::input(format!(
                "closure set bound {} reaches the smallest original degree",
                self.closure_set_cap
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Serialize)]
pub struct EncodedGraph {
    #[serde(skip)]
    pub graph: CoxeterGraph,
    pub params: EncodeParams,
    /// original vertex name → its node's name
    pub vertex_nodes: BTreeMap<String, String>,
    /// edge-node name → the two endpoint vertex names
    pub edge_nodes: BTreeMap<String, (String, String)>,
    /// node name → its clique members
    pub gadgets: BTreeMap<String, Vec<String>>,
    pub closure_names: Vec<String>,
}

impl EncodedGraph {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "graph": self.graph.to_json(),
            "params": self.params,
            "vertex_nodes": self.vertex_nodes,
            "edge_nodes": self.edge_nodes,
            "gadgets": self.gadgets,
            "closure": self.closure_names,
        })
    }
}

/// Encodes a graph as an incidence structure with clique gadgets: one node
/// per vertex and per edge, each edge-node adjacent to its two endpoint
/// nodes, each node carrying a private clique attached according to its
/// kind, then the bounded neighborhood closure.
pub fn rg_encode(graph: &CoxeterGraph, params: &EncodeParams) -> Result<EncodedGraph> {
    params.validate()?;
    if graph.vertex_count() > 6 {
        return Err(Error::input(format!(
            "encoding is capped at 6 vertices, got {}",
            graph.vertex_count()
        )));
    }
    let p = params.clique_size;
    let mut b = crate::graph::GraphBuilder::new();
    let mut vertex_nodes = BTreeMap::new();
    let mut edge_nodes = BTreeMap::new();
    let mut gadgets = BTreeMap::new();

    let mut node_of = Vec::new();
    for v in graph.vertices() {
        let name = format!("v:{}", graph.name(v));
        let id = b.add_vertex(&name)?;
        node_of.push(id);
        vertex_nodes.insert(graph.name(v).to_string(), name);
    }
    let mut edge_node_ids = Vec::new();
    for (u, v) in graph.edges() {
        let name = format!("e:{}-{}", graph.name(u), graph.name(v));
        let id = b.add_vertex(&name)?;
        b.add_edge(id, node_of[u as usize])?;
        b.add_edge(id, node_of[v as usize])?;
        edge_node_ids.push((name.clone(), id));
        edge_nodes.insert(name, (graph.name(u).to_string(), graph.name(v).to_string()));
    }

    let attach_clique =
        |b: &mut crate::graph::GraphBuilder, node: VertexId, prefix: &str, attached: usize| -> Result<Vec<String>> {
            let mut members = Vec::with_capacity(p);
            let mut ids = Vec::with_capacity(p);
            for i in 0..p {
                let name = format!("{prefix}:{i}");
                let id = b.add_vertex(&name)?;
                members.push(name);
                ids.push(id);
            }
            for i in 0..p {
                for j in i + 1..p {
                    b.add_edge(ids[i], ids[j])?;
                }
                if i < attached {
                    b.add_edge(ids[i], node)?;
                }
            }
            Ok(members)
        };

    for v in graph.vertices() {
        let name = format!("v:{}", graph.name(v));
        let members = attach_clique(
            &mut b,
            node_of[v as usize],
            &format!("kv:{}", graph.name(v)),
            p - params.vertex_detached,
        )?;
        gadgets.insert(name, members);
    }
    for (name, id) in &edge_node_ids {
        let body = name.strip_prefix("e:").expect("edge node name");
        let members =
            attach_clique(&mut b, *id, &format!("ke:{body}"), params.edge_attached)?;
        gadgets.insert(name.clone(), members);
    }

    let mut closure_names = Vec::new();
    let mut staged = b.build();
    for stage in 1..=params.closure_depth {
        let mut nb = crate::graph::GraphBuilder::new();
        for v in staged.vertices() {
            nb.add_vertex(staged.name(v))?;
        }
        for (u, v) in staged.edges() {
            nb.add_edge(u, v)?;
        }
        let realized: BTreeSet<VertexSet> =
            staged.vertices().map(|v| staged.neighbors(v)).collect();
        let base: Vec<VertexId> = staged.vertices().collect();
        let mut fresh = 0usize;
        let mut add_set = |nb: &mut crate::graph::GraphBuilder,
                           xs: &[VertexId],
                           fresh: &mut usize|
         -> Result<()> {
            let as_set: VertexSet = xs.iter().copied().collect();
            if realized.contains(&as_set) {
                return Ok(());
            }
            let name = format!("cl:{stage}:{fresh}");
            let id = nb.add_vertex(&name)?;
            closure_names.push(name);
            *fresh += 1;
            for &x in xs {
                nb.add_edge(id, x)?;
            }
            Ok(())
        };
        if base.len() > 600 {
            return Err(Error::resource(format!(
                "closure stage {stage} would enumerate subsets of {} vertices",
                base.len()
            )));
        }
        add_set(&mut nb, &[], &mut fresh)?;
        if params.closure_set_cap >= 1 {
            for &x in &base {
                add_set(&mut nb, &[x], &mut fresh)?;
            }
        }
        if params.closure_set_cap >= 2 {
            for i in 0..base.len() {
                for j in i + 1..base.len() {
                    add_set(&mut nb, &[base[i], base[j]], &mut fresh)?;
                }
            }
        }
        if params.closure_set_cap >= 3 {
            for i in 0..base.len() {
                for j in i + 1..base.len() {
                    for k in j + 1..base.len() {
                        add_set(&mut nb, &[base[i], base[j], base[k]], &mut fresh)?;
                    }
                }
            }
        }
        staged = nb.build();
    }

    Ok(EncodedGraph {
        graph: staged,
        params: *params,
        vertex_nodes,
        edge_nodes,
        gadgets,
        closure_names,
    })
}

/// Recovers the original graph, up to isomorphism, from a bare encoded
/// graph: strips closure vertices by degree, reassembles the gadget
/// cliques through the common-neighbor threshold, classifies nodes by
/// attachment count, and reads edges off the edge-nodes.
pub fn rg_decode(encoded: &CoxeterGraph, params: &EncodeParams) -> Result<CoxeterGraph> {
    params.validate()?;
    if params.closure_depth > 1 || (params.closure_depth == 1 && params.closure_set_cap != 2) {
        return Err(Error::input(
            "decoding supports closure depth 0, or depth 1 with set bound 2".to_string(),
        ));
    }
    let p = params.clique_size;
    let keep: VertexSet = encoded
        .vertices()
        .filter(|&v| encoded.degree(v) > params.closure_set_cap)
        .collect();
    let stripped = encoded.induced(&keep);
    let n = stripped.vertex_count();
    if n == 0 {
        return Ok(crate::graph::GraphBuilder::new().build());
    }

    // gadget components: adjacent pairs sharing at least clique_size - 2
    // common neighbors belong to one clique
    let neighbor_sets: Vec<VertexSet> =
        stripped.vertices().map(|v| stripped.neighbors(v)).collect();
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(comp: &mut Vec<usize>, x: usize) -> usize {
        if comp[x] != x {
            let root = find(comp, comp[x]);
            comp[x] = root;
        }
        comp[x]
    }
    for u in 0..n {
        for v in u + 1..n {
            let (u_id, v_id) = (u as VertexId, v as VertexId);
            if stripped.adjacent(u_id, v_id)
                && neighbor_sets[u].intersection(&neighbor_sets[v]).count() >= p - 2
            {
                let (a, b) = (find(&mut comp, u), find(&mut comp, v));
                comp[a] = b;
            }
        }
    }
    let mut groups: HashMap<usize, Vec<VertexId>> = HashMap::new();
    for v in 0..n {
        let root = find(&mut comp, v);
        groups.entry(root).or_default().push(v as VertexId);
    }

    let degenerate =
        |what: &str| Error::domain(format!("params too degenerate to decode: {what}"));

    let mut node_kind: HashMap<VertexId, bool> = HashMap::new(); // true = vertex node
    let mut is_gadget = vec![false; n];
    for members in groups.values().filter(|g| g.len() > 1) {
        if members.len() != p {
            return Err(degenerate("a clique component has the wrong size"));
        }
        for &m in members {
            is_gadget[m as usize] = true;
        }
        let member_set: VertexSet = members.iter().copied().collect();
        let mut external: VertexSet = VertexSet::new();
        for &m in members {
            external.extend(neighbor_sets[m as usize].difference(&member_set).copied());
        }
        if external.len() != 1 {
            return Err(degenerate("a clique attaches to more than one node"));
        }
        let node = *external.iter().next().expect("one external");
        let attached =
            members.iter().filter(|&&m| stripped.adjacent(m, node)).count();
        let kind = if attached == p - params.vertex_detached {
            true
        } else if attached == params.edge_attached {
            false
        } else {
            return Err(degenerate("an attachment count matches neither node kind"));
        };
        if node_kind.insert(node, kind).is_some_and(|old| old != kind) {
            return Err(degenerate("a node is claimed as both kinds"));
        }
    }
    for (v, &in_gadget) in is_gadget.iter().enumerate() {
        if !in_gadget && !node_kind.contains_key(&(v as VertexId)) {
            return Err(degenerate("a vertex belongs to no gadget and no node"));
        }
    }

    let mut out = crate::graph::GraphBuilder::new();
    let mut out_id: HashMap<VertexId, VertexId> = HashMap::new();
    let mut vertex_nodes: Vec<VertexId> =
        node_kind.iter().filter(|(_, &k)| k).map(|(&v, _)| v).collect();
    vertex_nodes.sort_unstable();
    for &v in &vertex_nodes {
        out_id.insert(v, out.add_vertex(stripped.name(v))?);
    }
    for (&e, &kind) in node_kind.iter() {
        if kind {
            continue;
        }
        let endpoints: Vec<VertexId> = neighbor_sets[e as usize]
            .iter()
            .copied()
            .filter(|x| node_kind.get(x) == Some(&true))
            .collect();
        if endpoints.len() != 2 {
            return Err(degenerate("an edge node does not join two vertex nodes"));
        }
        out.add_edge(out_id[&endpoints[0]], out_id[&endpoints[1]])?;
    }
    Ok(out.build())
}

#[derive(Clone, Debug, Serialize)]
pub struct ClauseVerdict {
    pub clause: char,
    pub holds: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TAxiomReport {
    /// The cardinality clause speaks about infinite models; on finite
    /// inputs it is reported as out of scope rather than as a verdict.
    pub cardinality_clause_applicable: bool,
    pub clauses: Vec<ClauseVerdict>,
}

impl TAxiomReport {
    pub fn all_hold(&self) -> bool {
        self.clauses.iter().all(|c| c.holds)
    }

    pub fn failing(&self) -> Vec<char> {
        self.clauses.iter().filter(|c| !c.holds).map(|c| c.clause).collect()
    }
}

/// The four degree laws, decided by direct neighbor counting: every vertex
/// has two or at least three neighbors (B); the neighbors of a degree-2
/// vertex have at least three (C); the neighbors of a degree-3-or-more
/// vertex have exactly two (D); two distinct high-degree vertices have
/// exactly one common neighbor (E).
pub fn check_t_axioms(graph: &CoxeterGraph) -> TAxiomReport {
    let deg = |v: VertexId| graph.degree(v);
    let name = |v: VertexId| graph.name(v).to_string();

    let b = graph
        .vertices()
        .find(|&v| deg(v) < 2)
        .map(|v| format!("vertex {} has {} neighbours", name(v), deg(v)));

    let mut c = None;
    'c: for v in graph.vertices() {
        if deg(v) != 2 {
            continue;
        }
        for u in graph.neighbors(v) {
            if deg(u) < 3 {
                c = Some(format!(
                    "vertex {} has exactly two neighbours but {} has {}",
                    name(v),
                    name(u),
                    deg(u)
                ));
                break 'c;
            }
        }
    }

    let mut d = None;
    'd: for v in graph.vertices() {
        if deg(v) < 3 {
            continue;
        }
        for u in graph.neighbors(v) {
            if deg(u) != 2 {
                d = Some(format!(
                    "vertex {} has {} neighbours yet neighbours {} of degree {}",
                    name(v),
                    deg(v),
                    name(u),
                    deg(u)
                ));
                break 'd;
            }
        }
    }

    let mut e = None;
    'e: for x in graph.vertices() {
        for y in graph.vertices().filter(|&y| y > x) {
            if deg(x) < 3 || deg(y) < 3 {
                continue;
            }
            let common = graph.neighbors(x).intersection(&graph.neighbors(y)).count();
            if common != 1 {
                e = Some(format!(
                    "vertices {} and {} have {} common neighbours",
                    name(x),
                    name(y),
                    common
                ));
                break 'e;
            }
        }
    }

    let clauses = [('B', b), ('C', c), ('D', d), ('E', e)]
        .into_iter()
        .map(|(clause, witness)| ClauseVerdict { clause, holds: witness.is_none(), witness })
        .collect();
    TAxiomReport { cardinality_clause_applicable: false, clauses }
}

/// The same verdicts through the independent quantifier-expansion
/// evaluator; used to cross-check `check_t_axioms`.
pub fn degree_laws_by_expansion(graph: &CoxeterGraph) -> Vec<(char, bool)> {
    fo::degree_law_formulas()
        .iter()
        .map(|(clause, formula)| (*clause, fo::holds(graph, formula)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::random_graph;
    use crate::words::enumerate_ball;

    #[test]
    fn copy_strategy_survives_identical_graphs() {
        let g = CoxeterGraph::cycle(4);
        let mut pos = EFPosition::graph_game(&g, &g, 3, 3).unwrap();
        let moves =
            [(vec![0, 1], Side::Left), (vec![2], Side::Right), (vec![3, 0, 2], Side::Left)];
        let mut last = EFStatus::Ongoing;
        for (mv, side) in moves {
            last = ef_referee(&mut pos, EFMove::Vertices(mv), side, &mut CopyStrategy).unwrap();
        }
        assert_eq!(last, EFStatus::IiSurvives { rounds: 3 });
    }

    #[test]
    fn referee_validates_moves() {
        let g = CoxeterGraph::path(3);
        let mut pos = EFPosition::graph_game(&g, &g, 2, 2).unwrap();
        assert!(ef_referee(&mut pos, EFMove::Vertices(vec![9]), Side::Left, &mut CopyStrategy)
            .is_err());
        assert!(ef_referee(
            &mut pos,
            EFMove::Vertices(vec![0, 1, 2]),
            Side::Left,
            &mut CopyStrategy
        )
        .is_err());
        let h = CoxeterGraph::path(4);
        let foreign = GroupElement::parse(&h, "0").unwrap();
        assert!(ef_referee(&mut pos, EFMove::Element(foreign), Side::Left, &mut CopyStrategy)
            .is_err());
    }

    #[test]
    fn group_game_transfers_through_an_isomorphism() {
        let left = CoxeterGraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let right = CoxeterGraph::new(&["z", "y", "x"], &[("x", "y"), ("y", "z")]).unwrap();
        // a↦z, b↦y, c↦x is an isomorphism
        let mut strat = MapStrategy { to_right: vec![0, 1, 2] };
        let mut pos = EFPosition::group_game(&left, &right, 2, 3).unwrap();
        let m1 = GroupElement::parse(&left, "a c a").unwrap();
        let s1 = ef_referee(&mut pos, EFMove::Element(m1), Side::Left, &mut strat).unwrap();
        assert_eq!(s1, EFStatus::Ongoing);
        let m2 = GroupElement::parse(&right, "y x").unwrap();
        let s2 = ef_referee(&mut pos, EFMove::Element(m2), Side::Right, &mut strat).unwrap();
        assert_eq!(s2, EFStatus::IiSurvives { rounds: 2 });
        let json = pos.to_json();
        assert_eq!(json["rounds"][0]["left"], "a c a");
    }

    #[test]
    fn commuting_pair_against_free_pair_is_lost_immediately() {
        let left = CoxeterGraph::new(&["a", "b"], &[("a", "b")]).unwrap();
        let right = CoxeterGraph::new(&["x", "y"], &[]).unwrap();
        let ab = GroupElement::parse(&left, "a b").unwrap();
        // exhaustive over II's replies: no reply survives even one round,
        // because the support map cannot respect adjacency
        for reply in enumerate_ball(&right, 3).unwrap() {
            assert!(!group_position_check(&[(ab.clone(), reply)]).unwrap());
        }
        let mut strat = DerivedStrategy::new(&left, &right, 3).unwrap();
        let mut pos = EFPosition::group_game(&left, &right, 2, 3).unwrap();
        let status =
            ef_referee(&mut pos, EFMove::Element(ab), Side::Left, &mut strat).unwrap();
        assert_eq!(status, EFStatus::IiLoses { round: 1 });
    }

    #[test]
    fn position_check_examples() {
        let p3 = CoxeterGraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let q3 = CoxeterGraph::new(&["x", "y", "z"], &[("x", "y"), ("y", "z")]).unwrap();
        let a = GroupElement::parse(&p3, "a").unwrap();
        let x = GroupElement::parse(&q3, "x").unwrap();
        assert!(group_position_check(&[(a.clone(), x)]).unwrap());

        let aca = GroupElement::parse(&p3, "a c a").unwrap();
        let xzx = GroupElement::parse(&q3, "x z x").unwrap();
        assert!(group_position_check(&[(aca, xzx)]).unwrap());

        let xy = GroupElement::parse(&q3, "x y").unwrap();
        assert!(!group_position_check(&[(a, xy)]).unwrap());
    }

    #[test]
    fn position_check_is_relabeling_invariant() {
        let p3 = CoxeterGraph::path(3);
        let renamed =
            CoxeterGraph::new(&["m", "k", "j"], &[("m", "k"), ("k", "j")]).unwrap();
        for w in ["0 1", "1 0 2", "0 2"] {
            let x = GroupElement::parse(&p3, w).unwrap();
            let y = GroupElement::parse(
                &renamed,
                &w.replace('0', "m").replace('1', "k").replace('2', "j"),
            )
            .unwrap();
            assert!(group_position_check(&[(x.clone(), y)]).unwrap());
            assert!(group_position_check(&[(x.clone(), x.clone())]).unwrap());
        }
    }

    #[test]
    fn win_search_matches_hand_analysis() {
        let k3 = CoxeterGraph::complete(3);
        let k4 = CoxeterGraph::complete(4);
        assert!(ii_wins_graph_game(&k3, &k4, 1, 3).unwrap());
        // two rounds expose the fourth vertex
        assert!(!ii_wins_graph_game(&k3, &k4, 2, 3).unwrap());
        let edge = CoxeterGraph::new(&["a", "b"], &[("a", "b")]).unwrap();
        let free = CoxeterGraph::new(&["x", "y"], &[]).unwrap();
        assert!(!ii_wins_graph_game(&edge, &free, 1, 3).unwrap());
        assert!(ii_wins_graph_game(&edge, &free, 1, 1).unwrap());
        assert!(!ii_wins_graph_game(&edge, &free, 2, 1).unwrap());
        let c4 = CoxeterGraph::cycle(4);
        assert!(ii_wins_graph_game(&c4, &c4, 3, 3).unwrap());
    }

    #[test]
    fn derived_strategy_survives_when_the_game_is_winnable() {
        let c4 = CoxeterGraph::cycle(4);
        let relabeled = CoxeterGraph::new(
            &["p", "q", "r", "t"],
            &[("p", "r"), ("r", "q"), ("q", "t"), ("t", "p")],
        )
        .unwrap();
        assert!(ii_wins_graph_game(&c4, &relabeled, 2, 3).unwrap());
        let mut strat = DerivedStrategy::new(&c4, &relabeled, 3).unwrap();
        let mut pos = EFPosition::group_game(&c4, &relabeled, 2, 3).unwrap();
        let m1 = GroupElement::parse(&c4, "0 2").unwrap();
        assert_eq!(
            ef_referee(&mut pos, EFMove::Element(m1), Side::Left, &mut strat).unwrap(),
            EFStatus::Ongoing
        );
        let m2 = GroupElement::parse(&relabeled, "p q").unwrap();
        assert_eq!(
            ef_referee(&mut pos, EFMove::Element(m2), Side::Right, &mut strat).unwrap(),
            EFStatus::IiSurvives { rounds: 2 }
        );
    }

    #[test]
    fn encoding_counts_match_hand_construction() {
        let edge = CoxeterGraph::new(&["a", "b"], &[("a", "b")]).unwrap();
        let enc = rg_encode(&edge, &EncodeParams::default()).unwrap();
        assert_eq!(enc.graph.vertex_count(), 21);
        assert_eq!(enc.gadgets.len(), 3);
        assert!(enc.gadgets.values().all(|m| m.len() == 6));

        let single = CoxeterGraph::new(&["a"], &[]).unwrap();
        let enc = rg_encode(&single, &EncodeParams::default()).unwrap();
        assert_eq!(enc.graph.vertex_count(), 7);

        let empty = crate::graph::GraphBuilder::new().build();
        let enc = rg_encode(&empty, &EncodeParams::default()).unwrap();
        assert_eq!(enc.graph.vertex_count(), 0);
    }

    #[test]
    fn encode_validates_params() {
        let edge = CoxeterGraph::new(&["a", "b"], &[("a", "b")]).unwrap();
        // edge_attached equal to clique_size - vertex_detached is ambiguous
        let bad = EncodeParams { edge_attached: 4, ..EncodeParams::default() };
        assert!(rg_encode(&edge, &bad).is_err());
        let shallow = EncodeParams { vertex_detached: 1, ..EncodeParams::default() };
        assert!(rg_encode(&edge, &shallow).is_err());
    }

    #[test]
    fn decode_round_trips() {
        for g in [
            CoxeterGraph::cycle(4),
            CoxeterGraph::complete(3),
            CoxeterGraph::path(3),
            CoxeterGraph::new(&["a"], &[]).unwrap(),
        ] {
            let enc = rg_encode(&g, &EncodeParams::default()).unwrap();
            let back = rg_decode(&enc.graph, &EncodeParams::default()).unwrap();
            assert!(back.are_isomorphic(&g).unwrap(), "round trip failed for {g:?}");
        }
    }

    #[test]
    fn decode_strips_one_closure_stage() {
        let params = EncodeParams { closure_depth: 1, ..EncodeParams::default() };
        let p3 = CoxeterGraph::path(3);
        let enc = rg_encode(&p3, &params).unwrap();
        assert!(!enc.closure_names.is_empty());
        let back = rg_decode(&enc.graph, &params).unwrap();
        assert!(back.are_isomorphic(&p3).unwrap());

        let deeper = EncodeParams { closure_depth: 2, ..params };
        assert!(rg_decode(&enc.graph, &deeper).is_err());
    }

    #[test]
    fn decode_survives_relabeling() {
        let p3 = CoxeterGraph::path(3);
        let enc = rg_encode(&p3, &EncodeParams::default()).unwrap();
        // rebuild the encoded graph with scrambled vertex order and names
        use rand_core::{RngCore, SeedableRng};
        let n = enc.graph.vertex_count();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut inv: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.next_u32() as usize % (i + 1);
            inv.swap(i, j);
        }
        let mut b = crate::graph::GraphBuilder::new();
        for i in 0..n {
            b.add_vertex(&format!("w{i}")).unwrap();
        }
        for (u, v) in enc.graph.edges() {
            b.add_edge(inv[u as usize] as VertexId, inv[v as usize] as VertexId).unwrap();
        }
        let scrambled = b.build();
        let back = rg_decode(&scrambled, &EncodeParams::default()).unwrap();
        assert!(back.are_isomorphic(&p3).unwrap());
    }

    #[test]
    fn axiom_checker_matches_known_graphs() {
        let report = check_t_axioms(&families::k1_member(4).unwrap().graph);
        assert!(report.all_hold());
        assert!(!report.cardinality_clause_applicable);

        let report = check_t_axioms(&CoxeterGraph::cycle(4));
        assert_eq!(report.failing(), vec!['C']);

        let report = check_t_axioms(&CoxeterGraph::new(&["a"], &[]).unwrap());
        assert!(!report.clauses[0].holds);
        assert!(report.clauses[0].witness.as_deref().unwrap().contains("0 neighbours"));
    }

    #[test]
    fn axiom_checker_agrees_with_expansion_evaluator() {
        for seed in 0..20 {
            let g = random_graph(seed);
            let direct: Vec<(char, bool)> =
                check_t_axioms(&g).clauses.iter().map(|c| (c.clause, c.holds)).collect();
            assert_eq!(direct, degree_laws_by_expansion(&g), "seed {seed}");
        }
    }
}
