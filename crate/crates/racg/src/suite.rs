//! Named check suites: deterministic batches of cross-module checks, each
//! with a replay command, reported as stable JSON. All sampling flows from
//! the single seed, so a fixed seed gives a byte-identical report.

use rand_core::{RngCore, SeedableRng};
use serde::Serialize;

use crate::aec;
use crate::bruteforce::RewriteOracle;
use crate::error::{Error, Result};
use crate::families;
use crate::graph::{random_graph, CoxeterGraph, VertexId, VertexSet};
use crate::logic;
use crate::reflect;
use crate::rigidity;
use crate::words::{enumerate_ball, GroupElement, Word};

pub const SUITE_NAMES: [&str; 6] =
    ["rewriting", "reflections", "rigidity", "families", "aec", "logic"];

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub check: &'static str,
    pub passed: bool,
    /// On failure, the smallest instance that exhibits it.
    pub witness: Option<String>,
    /// One CLI command that re-runs exactly this check.
    pub replay: String,
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// A check body returns Ok(()) to pass, or Err(witness) naming the failing
/// instance.
type Outcome = std::result::Result<(), String>;

struct Runner {
    suite: &'static str,
    seed: u64,
    only: Option<String>,
    checks: Vec<CheckResult>,
}

impl Runner {
    fn run(&mut self, check: &'static str, body: impl FnOnce(u64) -> Outcome) {
        if self.only.as_deref().is_some_and(|o| o != check) {
            return;
        }
        let outcome = body(self.seed);
        self.checks.push(CheckResult {
            check,
            passed: outcome.is_ok(),
            witness: outcome.err(),
            replay: format!("racg suite {} --seed {} --only {}", self.suite, self.seed, check),
        });
    }

    fn finish(self) -> Result<SuiteReport> {
        if let Some(only) = &self.only {
            if self.checks.is_empty() {
                return Err(Error::input(format!(
                    "suite {:?} has no check named {only:?}",
                    self.suite
                )));
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        Ok(SuiteReport {
            suite: self.suite.to_string(),
            seed: self.seed,
            passed,
            failed: self.checks.len() - passed,
            checks: self.checks,
        })
    }
}

pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    run_suite_check(name, seed, None)
}

/// Runs one suite, optionally restricted to a single named check (the
/// replay path).
pub fn run_suite_check(name: &str, seed: u64, only: Option<&str>) -> Result<SuiteReport> {
    let suite = SUITE_NAMES
        .iter()
        .copied()
        .find(|&s| s == name)
        .ok_or_else(|| {
            Error::input(format!("unknown suite {name:?}; known: {}", SUITE_NAMES.join(", ")))
        })?;
    let mut r = Runner {
        suite,
        seed,
        only: only.map(str::to_string),
        checks: Vec::new(),
    };
    match suite {
        "rewriting" => rewriting_suite(&mut r),
        "reflections" => reflections_suite(&mut r),
        "rigidity" => rigidity_suite(&mut r),
        "families" => families_suite(&mut r),
        "aec" => aec_suite(&mut r),
        "logic" => logic_suite(&mut r),
        _ => unreachable!(),
    }
    r.finish()
}

pub fn run_all(seed: u64) -> Result<Vec<SuiteReport>> {
    SUITE_NAMES.iter().map(|name| run_suite(name, seed)).collect()
}

fn seeded_word(rng: &mut rand_chacha::ChaCha8Rng, n: usize, max_len: usize) -> Vec<VertexId> {
    let len = rng.next_u32() as usize % (max_len + 1);
    (0..len).map(|_| rng.next_u32() % n as u32).collect()
}

fn rewriting_suite(r: &mut Runner) {
    r.run("oracle-agreement-exhaustive-small", |_| {
        for n in 1..=3usize {
            for (mask, g) in crate::graph::all_graphs_on(n)
                .expect("within cap")
                .into_iter()
                .enumerate()
            {
                let mut oracle = RewriteOracle::new(&g);
                let mut words: Vec<Vec<VertexId>> = vec![Vec::new()];
                for _ in 0..4 {
                    let mut next = Vec::new();
                    for w in &words {
                        for s in 0..n as VertexId {
                            let mut v = w.clone();
                            v.push(s);
                            next.push(v);
                        }
                    }
                    for w in &next {
                        let fast = GroupElement::from_letters(&g, w);
                        let slow = oracle.canonical(w);
                        if fast.letters() != slow.as_slice() {
                            return Err(format!(
                                "graph mask {mask} on {n} vertices, word {w:?}: {:?} vs {slow:?}",
                                fast.letters()
                            ));
                        }
                        let claims = Word::from_ids(&g, w.clone()).expect("in range").is_normal();
                        let truly = oracle.is_reduced(w);
                        if claims != truly {
                            return Err(format!(
                                "graph mask {mask} on {n} vertices, word {w:?}: is_normal {claims}, oracle {truly}"
                            ));
                        }
                    }
                    words = next;
                }
            }
        }
        Ok(())
    });

    r.run("oracle-agreement-seeded", |seed| {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for i in 0..24u64 {
            let g = random_graph(seed.wrapping_mul(31).wrapping_add(i));
            let mut oracle = RewriteOracle::new(&g);
            for _ in 0..8 {
                let w = seeded_word(&mut rng, g.vertex_count(), 7);
                let fast = GroupElement::from_letters(&g, &w);
                let slow = oracle.canonical(&w);
                if fast.letters() != slow.as_slice() {
                    return Err(format!(
                        "graph {} word {w:?}: {:?} vs {slow:?}",
                        g.to_json(),
                        fast.letters()
                    ));
                }
            }
        }
        Ok(())
    });

    r.run("involution-and-inverse-laws", |seed| {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        for i in 0..16u64 {
            let g = random_graph(seed.wrapping_add(i));
            let w = seeded_word(&mut rng, g.vertex_count(), 6);
            let x = GroupElement::from_letters(&g, &w);
            let e = x.multiply(&x.inverse()).expect("same graph");
            if !e.is_identity() {
                return Err(format!("graph {} word {w:?}: x · x⁻¹ ≠ e", g.to_json()));
            }
            for s in g.vertices() {
                let gen = GroupElement::from_letters(&g, &[s]);
                if !gen.multiply(&gen).expect("same graph").is_identity() {
                    return Err(format!("graph {}: generator {s} not an involution", g.to_json()));
                }
            }
        }
        Ok(())
    });

    r.run("normal-form-idempotent", |seed| {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x1de);
        for i in 0..16u64 {
            let g = random_graph(seed.wrapping_add(i).wrapping_mul(7));
            let w = seeded_word(&mut rng, g.vertex_count(), 7);
            let once = GroupElement::from_letters(&g, &w);
            let twice = GroupElement::from_letters(&g, once.letters());
            if once != twice {
                return Err(format!("graph {} word {w:?}: canonical form moved", g.to_json()));
            }
            if !Word::from_ids(&g, once.letters().to_vec()).expect("in range").is_normal() {
                return Err(format!(
                    "graph {} word {w:?}: canonical form not normal",
                    g.to_json()
                ));
            }
        }
        Ok(())
    });
}

fn reflections_suite(r: &mut Runner) {
    r.run("subword-conjugator-identity", |_| {
        for g in [CoxeterGraph::path(3), CoxeterGraph::cycle(4)] {
            let n = g.vertex_count();
            for w in enumerate_ball(&g, 3).expect("small ball") {
                for s in g.vertices() {
                    let refl = GroupElement::from_letters(&g, &[s])
                        .conjugate_by(&w)
                        .expect("same graph");
                    for t_mask in 0..1u32 << n {
                        let t: VertexSet =
                            (0..n as VertexId).filter(|v| t_mask & (1 << v) != 0).collect();
                        if !refl.in_standard_parabolic(&t).expect("valid") {
                            continue;
                        }
                        let h = reflect::subword_conjugator(&w, s, &t).expect("lemma applies");
                        let via_h = GroupElement::from_letters(&g, &[s])
                            .conjugate_by(&h)
                            .expect("same graph");
                        if via_h != refl {
                            return Err(format!(
                                "graph {} w {w} s {s} T {t:?}: h does not reproduce the reflection",
                                g.to_json()
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    });

    r.run("parabolic-reflection-agreement", |_| {
        let cases = [
            (CoxeterGraph::cycle(4), vec![0u32, 1]),
            (CoxeterGraph::path(4), vec![0u32, 1, 2]),
            (CoxeterGraph::complete(3), vec![0u32, 2]),
        ];
        for (g, t) in cases {
            let t: VertexSet = t.into_iter().collect();
            let a = reflect::reflections_agree_on_parabolic(&g, &t, 3).expect("in caps");
            if !a.agree {
                return Err(format!(
                    "graph {} T {:?}: sides differ ({} vs {} reflections)",
                    g.to_json(),
                    t,
                    a.global_in_parabolic.len(),
                    a.parabolic_own.len()
                ));
            }
        }
        Ok(())
    });

    r.run("centralizer-is-commutation", |seed| {
        let g = random_graph(seed.wrapping_mul(13).wrapping_add(5));
        let keep: VertexSet = g.vertices().take(4).collect();
        let g = g.induced(&keep);
        for x in enumerate_ball(&g, 3).expect("small ball") {
            for v in g.vertices() {
                let claimed = reflect::centralizer_membership(&x, v).expect("in range");
                let gen = GroupElement::from_letters(&g, &[v]);
                let commutes = x.multiply(&gen).expect("same graph")
                    == gen.multiply(&x).expect("same graph");
                if claimed != commutes {
                    return Err(format!(
                        "graph {} element {x} generator {v}: membership {claimed}, commutation {commutes}",
                        g.to_json()
                    ));
                }
            }
        }
        Ok(())
    });
}

fn rigidity_suite(r: &mut Runner) {
    r.run("known-graphs-certify", |_| {
        let cases: Vec<(&str, rigidity::CertOutcome, u8)> = vec![
            (
                "subdivided complete on 4",
                rigidity::certify_family(&families::k1_member(4).expect("valid")),
                1,
            ),
            (
                "two-point closure of C4 at depth 3",
                rigidity::certify_family(
                    &families::gamma_star(&CoxeterGraph::cycle(4), 3).expect("valid"),
                ),
                1,
            ),
            (
                "two-sided member (6, [2,2])",
                rigidity::certify_family(&families::k2_member(6, &[2, 2]).expect("valid")),
                2,
            ),
        ];
        for (label, outcome, want) in cases {
            match outcome.certificate() {
                Some(c) if c.criterion == want => {}
                Some(c) => {
                    return Err(format!("{label}: certified by {} instead of {want}", c.criterion));
                }
                None => return Err(format!("{label}: refused")),
            }
        }
        Ok(())
    });

    r.run("known-graphs-refuse", |_| {
        let edge = CoxeterGraph::new(&["a", "b"], &[("a", "b")]).expect("valid");
        let cases = [
            (edge, "star-property", "centered-pair"),
            (CoxeterGraph::path(4), "star-property", "star-property"),
            (CoxeterGraph::complete(3), "triangle-free", "centered-pair"),
        ];
        for (g, c1, c2) in cases {
            let out = rigidity::certify_strong_rigidity(&g);
            let Some(refusal) = out.refusal() else {
                return Err(format!("graph {} unexpectedly certified", g.to_json()));
            };
            if refusal.criterion1.condition != c1 || refusal.criterion2.condition != c2 {
                return Err(format!(
                    "graph {}: refusal names ({}, {}), expected ({c1}, {c2})",
                    g.to_json(),
                    refusal.criterion1.condition,
                    refusal.criterion2.condition
                ));
            }
        }
        Ok(())
    });

    r.run("certificate-relabel-stable", |seed| {
        let inst = families::k1_member(4).expect("valid");
        let g = &inst.graph;
        let n = g.vertex_count();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x9e1ab);
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.next_u32() as usize % (i + 1);
            order.swap(i, j);
        }
        let mut b = crate::graph::GraphBuilder::new();
        for &old in &order {
            b.add_vertex(g.name(old as VertexId)).expect("unique");
        }
        for (u, v) in g.edges() {
            let nu = order.iter().position(|&x| x == u as usize).expect("present");
            let nv = order.iter().position(|&x| x == v as usize).expect("present");
            b.add_edge(nu as VertexId, nv as VertexId).expect("in range");
        }
        let relabeled = b.build();
        let before = rigidity::certify_strong_rigidity(g);
        let after = rigidity::certify_strong_rigidity(&relabeled);
        match (before.certificate(), after.certificate()) {
            (Some(b), Some(a)) if b.criterion == a.criterion => Ok(()),
            _ => Err(format!("relabeling with order {order:?} changed the verdict")),
        }
    });

    r.run("limit-chain-coheres", |_| {
        let w = rigidity::tits_limit_witness(3).expect("valid depth");
        if !w.report.compat_failures.is_empty() {
            return Err(format!(
                "stagewise maps disagree: {:?}",
                w.report.compat_failures
            ));
        }
        if !w.report.supports_strictly_increase {
            return Err("conjugator supports fail to grow strictly".to_string());
        }
        Ok(())
    });
}

fn families_suite(r: &mut Runner) {
    r.run("subdivision-shape", |_| {
        let inst = families::k1_member(4).expect("valid");
        let g = &inst.graph;
        if g.vertex_count() != 10 || g.edge_count() != 12 {
            return Err(format!(
                "subdivided complete on 4: {} vertices, {} edges",
                g.vertex_count(),
                g.edge_count()
            ));
        }
        let mut degs: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        if degs != [2, 2, 2, 2, 2, 2, 3, 3, 3, 3] {
            return Err(format!("degree profile {degs:?}"));
        }
        Ok(())
    });

    r.run("closure-growth", |_| {
        let c4 = CoxeterGraph::cycle(4);
        let sizes: Vec<usize> = (0..=2)
            .map(|d| families::gamma_star(&c4, d).expect("valid").graph.vertex_count())
            .collect();
        if sizes != [4, 6, 11] {
            return Err(format!("stage sizes {sizes:?}"));
        }
        Ok(())
    });

    r.run("two-sided-window-geometry", |_| {
        let inst = families::k2_member(6, &[2, 2]).expect("valid");
        let g = &inst.graph;
        let s = g.vertex("s").expect("present");
        let sp = g.vertex("s'").expect("present");
        if !g.adjacent(s, sp) {
            return Err("the distinguished pair is not adjacent".to_string());
        }
        for name in ["z0:-2", "z0:0", "z0:+2", "z1:-2", "z1:0", "z1:+2"] {
            if g.vertex(name).is_err() {
                return Err(format!("window vertex {name} missing"));
            }
        }
        Ok(())
    });

    r.run("half-graph-adjacency-law", |_| {
        let hg = families::half_graph(3).expect("valid");
        let g = &hg.instance.graph;
        for i in 0..3u32 {
            for j in 0..3u32 {
                let a = g.vertex(&format!("a:{i}")).expect("present");
                let t = g.vertex(&format!("t:{j}")).expect("present");
                if g.adjacent(a, t) != (j <= i) {
                    return Err(format!("a:{i} ~ t:{j} violates the half-graph law"));
                }
            }
        }
        Ok(())
    });

    r.run("chain-elements-match-definition", |_| {
        let chain = families::smoothness_chain(3, 5).expect("valid");
        let g = &chain.instance.graph;
        for n in 0..3 {
            let b_n = GroupElement::generator(g, &format!("b:{n}")).expect("present");
            let direct = b_n.conjugate_by(&chain.c[n]).expect("same graph");
            if direct != chain.e[n] {
                return Err(format!("stage {n}: stored conjugate differs"));
            }
        }
        Ok(())
    });
}

fn aec_suite(r: &mut Runner) {
    r.run("parabolic-search-recovers-chain", |_| {
        let chain = families::smoothness_chain(2, 4).expect("valid");
        let g = &chain.instance.graph;
        let Some(w) = aec::parabolic_search(g, &[chain.e[0].clone(), chain.e[1].clone()], 4)
            .expect("search runs")
        else {
            return Err("no conjugator found within the length cap".to_string());
        };
        if w.conjugator != chain.c[1] {
            return Err(format!("found conjugator {} instead of {}", w.conjugator, chain.c[1]));
        }
        let names: Vec<&str> = w.base_vertices.iter().map(|&v| g.name(v)).collect();
        if names != ["b:0", "b:1"] {
            return Err(format!("base {names:?}"));
        }
        Ok(())
    });

    r.run("transport-keeps-target-letters", |_| {
        let g = CoxeterGraph::new(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).expect("valid");
        let g_s = GroupElement::parse(&g, "b a").expect("parses");
        let s_basis = aec::BasisWitness {
            conjugator: g_s,
            base_vertices: [2u32].into_iter().collect(),
        };
        let t_basis = aec::is_standard_parabolic(&g, &[1u32, 2].into_iter().collect())
            .expect("standard");
        let sub: VertexSet = [1u32, 2].into_iter().collect();
        let h = aec::coherence_transport(&s_basis, &t_basis, &sub).expect("transports");
        if h.to_string() != "b" {
            return Err(format!("transport produced {h}"));
        }
        Ok(())
    });

    r.run("overlap-countertrace", |_| {
        let c4 = CoxeterGraph::cycle(4);
        let g = GroupElement::parse(&c4, "0").expect("parses");
        let t0: VertexSet = c4.vertices().collect();
        let check = aec::basis_overlap_rigidity(&t0, &g, &[1, 0, 3, 2]).expect("valid path");
        if check.holds {
            return Err("conjugation by a path generator should fail the overlap check".to_string());
        }
        let Some(ct) = &check.countertrace else {
            return Err("failing check carries no countertrace".to_string());
        };
        if ct.step != "fixes-path-generator" {
            return Err(format!("countertrace at step {}", ct.step));
        }
        Ok(())
    });

    r.run("chain-identities-and-inclusions", |_| {
        let report = aec::smoothness_chain_check(3, 5).expect("valid");
        if !report.identity_failures.is_empty() {
            return Err(format!(
                "{} conjugation identities failed: {:?}",
                report.identity_failures.len(),
                report.identity_failures
            ));
        }
        if !report.inclusions.iter().all(|w| w.verified) {
            return Err("an inclusion witness failed verification".to_string());
        }
        if report.limit_checkable_at_finite_stage {
            return Err("the finite stages must not claim to decide the limit".to_string());
        }
        Ok(())
    });
}

fn logic_suite(r: &mut Runner) {
    r.run("position-check-pinned-examples", |_| {
        let p3 = CoxeterGraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).expect("valid");
        let q3 = CoxeterGraph::new(&["x", "y", "z"], &[("x", "y"), ("y", "z")]).expect("valid");
        let a = GroupElement::parse(&p3, "a").expect("parses");
        let x = GroupElement::parse(&q3, "x").expect("parses");
        let aca = GroupElement::parse(&p3, "a c a").expect("parses");
        let xzx = GroupElement::parse(&q3, "x z x").expect("parses");
        let xy = GroupElement::parse(&q3, "x y").expect("parses");
        let cases = [
            (vec![(a.clone(), x)], true),
            (vec![(aca, xzx)], true),
            (vec![(a, xy)], false),
        ];
        for (pairs, want) in cases {
            if logic::group_position_check(&pairs).expect("same graphs") != want {
                return Err(format!(
                    "pairs {:?} expected {want}",
                    pairs.iter().map(|(l, r)| (l.to_string(), r.to_string())).collect::<Vec<_>>()
                ));
            }
        }
        Ok(())
    });

    r.run("game-search-pinned-verdicts", |_| {
        let k3 = CoxeterGraph::complete(3);
        let k4 = CoxeterGraph::complete(4);
        if !logic::ii_wins_graph_game(&k3, &k4, 1, 3).expect("in caps") {
            return Err("one round on the two cliques should be survivable".to_string());
        }
        if logic::ii_wins_graph_game(&k3, &k4, 2, 3).expect("in caps") {
            return Err("two rounds must expose the extra clique vertex".to_string());
        }
        Ok(())
    });

    r.run("transfer-smoke", |_| {
        let left = CoxeterGraph::path(3);
        let right = CoxeterGraph::new(&["m", "k", "j"], &[("m", "k"), ("k", "j")]).expect("valid");
        let mut strat = logic::DerivedStrategy::new(&left, &right, 3).expect("in caps");
        let mut pos = logic::EFPosition::group_game(&left, &right, 2, 3).expect("in caps");
        let m1 = GroupElement::parse(&left, "0 2 0").expect("parses");
        let s1 =
            logic::ef_referee(&mut pos, logic::EFMove::Element(m1), logic::Side::Left, &mut strat)
                .expect("legal move");
        if s1 != logic::EFStatus::Ongoing {
            return Err(format!("first round ended with {s1:?}"));
        }
        let m2 = GroupElement::parse(&right, "k m").expect("parses");
        let s2 =
            logic::ef_referee(&mut pos, logic::EFMove::Element(m2), logic::Side::Right, &mut strat)
                .expect("legal move");
        if s2 != (logic::EFStatus::IiSurvives { rounds: 2 }) {
            return Err(format!("second round ended with {s2:?}"));
        }
        Ok(())
    });

    r.run("encode-counts", |_| {
        let edge = CoxeterGraph::new(&["a", "b"], &[("a", "b")]).expect("valid");
        let enc = logic::rg_encode(&edge, &logic::EncodeParams::default()).expect("valid params");
        if enc.graph.vertex_count() != 21 {
            return Err(format!("single edge encodes to {} vertices", enc.graph.vertex_count()));
        }
        Ok(())
    });

    r.run("decode-round-trip-seeded", |seed| {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0xdec0de);
        for trial in 0..6 {
            let n = 1 + rng.next_u32() as usize % 4;
            let all = crate::graph::all_graphs_on(n).expect("within cap");
            let g = all[rng.next_u32() as usize % all.len()].clone();
            let enc = logic::rg_encode(&g, &logic::EncodeParams::default()).expect("valid");
            let back =
                logic::rg_decode(&enc.graph, &logic::EncodeParams::default()).expect("decodes");
            if !back.are_isomorphic(&g).expect("in caps") {
                return Err(format!("trial {trial}: {} fails to round-trip", g.to_json()));
            }
        }
        Ok(())
    });

    r.run("degree-laws-pinned-and-cross-checked", |seed| {
        let report = logic::check_t_axioms(&families::k1_member(4).expect("valid").graph);
        if !report.all_hold() {
            return Err(format!("subdivided complete on 4 fails {:?}", report.failing()));
        }
        let report = logic::check_t_axioms(&CoxeterGraph::cycle(4));
        if report.failing() != ['C'] {
            return Err(format!("C4 fails {:?}", report.failing()));
        }
        for i in 0..25u64 {
            let g = random_graph(seed.wrapping_mul(3).wrapping_add(i));
            let direct: Vec<(char, bool)> = logic::check_t_axioms(&g)
                .clauses
                .iter()
                .map(|c| (c.clause, c.holds))
                .collect();
            if direct != logic::degree_laws_by_expansion(&g) {
                return Err(format!("graph {} splits the two evaluators", g.to_json()));
            }
        }
        Ok(())
    });
}
