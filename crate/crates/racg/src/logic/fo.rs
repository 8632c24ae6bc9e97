//! A small first-order evaluator over graphs, used as an independent
//! cross-check for the hand-written axiom verdicts. Formulas are closed;
//! quantifiers bind variables by depth (the n-th enclosing quantifier binds
//! index n, counted from the outside in), and evaluation expands every
//! quantifier over the whole vertex set.

use crate::graph::{CoxeterGraph, VertexId};

#[derive(Clone, Debug)]
pub enum Formula {
    Adjacent(usize, usize),
    Equal(usize, usize),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    ForAll(Box<Formula>),
    Exists(Box<Formula>),
}

pub fn holds(graph: &CoxeterGraph, formula: &Formula) -> bool {
    let mut env = Vec::new();
    eval(graph, formula, &mut env)
}

fn eval(graph: &CoxeterGraph, formula: &Formula, env: &mut Vec<VertexId>) -> bool {
    match formula {
        Formula::Adjacent(i, j) => graph.adjacent(env[*i], env[*j]),
        Formula::Equal(i, j) => env[*i] == env[*j],
        Formula::Not(f) => !eval(graph, f, env),
        Formula::And(fs) => fs.iter().all(|f| eval(graph, f, env)),
        Formula::Or(fs) => fs.iter().any(|f| eval(graph, f, env)),
        Formula::Implies(a, b) => !eval(graph, a, env) || eval(graph, b, env),
        Formula::ForAll(body) => {
            for v in graph.vertices() {
                env.push(v);
                let ok = eval(graph, body, env);
                env.pop();
                if !ok {
                    return false;
                }
            }
            true
        }
        Formula::Exists(body) => {
            for v in graph.vertices() {
                env.push(v);
                let ok = eval(graph, body, env);
                env.pop();
                if ok {
                    return true;
                }
            }
            false
        }
    }
}

use Formula::*;

fn not(f: Formula) -> Formula {
    Not(Box::new(f))
}

fn implies(a: Formula, b: Formula) -> Formula {
    Implies(Box::new(a), Box::new(b))
}

fn forall(f: Formula) -> Formula {
    ForAll(Box::new(f))
}

fn exists(f: Formula) -> Formula {
    Exists(Box::new(f))
}

/// x (a variable index) has exactly two neighbours. `depth` is the number
/// of variables bound so far; the two witnesses and the closing universal
/// take indices depth, depth+1, depth+2.
fn exactly_two(x: usize, depth: usize) -> Formula {
    let (y, z, w) = (depth, depth + 1, depth + 2);
    exists(exists(And(vec![
        not(Equal(y, z)),
        Adjacent(x, y),
        Adjacent(x, z),
        forall(implies(Adjacent(x, w), Or(vec![Equal(w, y), Equal(w, z)]))),
    ])))
}

/// x has at least three neighbours.
fn at_least_three(x: usize, depth: usize) -> Formula {
    let (a, b, c) = (depth, depth + 1, depth + 2);
    exists(exists(exists(And(vec![
        not(Equal(a, b)),
        not(Equal(a, c)),
        not(Equal(b, c)),
        Adjacent(x, a),
        Adjacent(x, b),
        Adjacent(x, c),
    ]))))
}

/// The four degree laws as closed formulas, keyed by their clause letter.
pub fn degree_law_formulas() -> Vec<(char, Formula)> {
    let b = forall(Or(vec![exactly_two(0, 1), at_least_three(0, 1)]));

    // the antecedent pins x's neighbours to exactly {y, z}
    let c = forall(forall(forall(implies(
        And(vec![
            not(Equal(1, 2)),
            Adjacent(0, 1),
            Adjacent(0, 2),
            forall(implies(Adjacent(0, 3), Or(vec![Equal(3, 1), Equal(3, 2)]))),
        ]),
        And(vec![at_least_three(1, 3), at_least_three(2, 3)]),
    ))));

    let d = forall(implies(
        at_least_three(0, 1),
        forall(implies(Adjacent(0, 1), exactly_two(1, 2))),
    ));

    let e = forall(forall(implies(
        And(vec![not(Equal(0, 1)), at_least_three(0, 2), at_least_three(1, 2)]),
        exists(And(vec![
            Adjacent(0, 2),
            Adjacent(2, 1),
            forall(implies(
                And(vec![Adjacent(0, 3), Adjacent(3, 1)]),
                Equal(3, 2),
            )),
        ])),
    )));

    vec![('B', b), ('C', c), ('D', d), ('E', e)]
}
