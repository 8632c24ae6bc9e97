//! Graph serialization: a small JSON schema and a DOT subset.
//!
//! JSON is the primary interchange format:
//! `{"vertices": ["a", "b"], "edges": [["a", "b"]]}`; vertex order in the
//! file is the graph's vertex order. DOT import accepts plain undirected
//! graphs (`graph ... { a -- b; c; }`); attributes are ignored on import
//! and never emitted.

use serde::{Deserialize, Serialize};

use super::{CoxeterGraph, GraphBuilder};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

impl CoxeterGraph {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let gj: GraphJson = serde_json::from_str(text)
            .map_err(|e| Error::input(format!("graph JSON: {e}")))?;
        let mut b = GraphBuilder::new();
        for v in &gj.vertices {
            b.add_vertex(v)?;
        }
        for (u, v) in &gj.edges {
            let u = b.vertex(u)?;
            let v = b.vertex(v)?;
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let gj = GraphJson {
            vertices: self.vertices().map(|v| self.name(v).to_string()).collect(),
            edges: self
                .edges()
                .iter()
                .map(|&(u, v)| (self.name(u).to_string(), self.name(v).to_string()))
                .collect(),
        };
        serde_json::to_value(gj).unwrap()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).unwrap()
    }

    /// Emits the graph as an undirected DOT graph named `g`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph g {\n");
        for v in self.vertices() {
            out.push_str(&format!("  {};\n", quote(self.name(v))));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {} -- {};\n", quote(self.name(u)), quote(self.name(v))));
        }
        out.push_str("}\n");
        out
    }

    /// Parses the undirected-DOT subset: optional `strict`, `graph` with an
    /// optional name, node and edge statements, `[...]` attribute lists
    /// (skipped). Directed graphs and subgraph blocks are rejected.
    pub fn from_dot_str(text: &str) -> Result<Self> {
        let tokens = tokenize(text)?;
        Parser { tokens, pos: 0 }.parse()
    }
}

fn quote(name: &str) -> String {
    let safe = !name.is_empty()
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !name.chars().next().unwrap().is_ascii_digit();
    let numeric = !name.is_empty() && name.chars().all(|c| c.is_ascii_digit());
    if safe || numeric {
        name.to_string()
    } else {
        format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Id(String),
    EdgeOp,   // --
    Arrow,    // -> (rejected later: directed)
    Sym(char),
}

struct Located {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Result<Vec<Located>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    let bump = |c: char, line: &mut usize, col: &mut usize| {
        if c == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        let (l, co) = (line, col);
        match c {
            c if c.is_whitespace() => {
                bump(c, &mut line, &mut col);
                i += 1;
            }
            '/' if chars.get(i + 1) == Some(&'/') => {
                while i < chars.len() && chars[i] != '\n' {
                    bump(chars[i], &mut line, &mut col);
                    i += 1;
                }
            }
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    bump(chars[i], &mut line, &mut col);
                    i += 1;
                }
            }
            '/' if chars.get(i + 1) == Some(&'*') => {
                i += 2;
                col += 2;
                while i < chars.len() && !(chars[i] == '*' && chars.get(i + 1) == Some(&'/')) {
                    bump(chars[i], &mut line, &mut col);
                    i += 1;
                }
                if i >= chars.len() {
                    return Err(Error::input(format!("DOT {l}:{co}: unterminated comment")));
                }
                i += 2;
                col += 2;
            }
            '-' if chars.get(i + 1) == Some(&'-') => {
                out.push(Located { tok: Tok::EdgeOp, line: l, col: co });
                i += 2;
                col += 2;
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                out.push(Located { tok: Tok::Arrow, line: l, col: co });
                i += 2;
                col += 2;
            }
            '{' | '}' | ';' | ',' | '=' | '[' | ']' => {
                out.push(Located { tok: Tok::Sym(c), line: l, col: co });
                bump(c, &mut line, &mut col);
                i += 1;
            }
            '"' => {
                bump(c, &mut line, &mut col);
                i += 1;
                let mut s = String::new();
                loop {
                    let Some(&c) = chars.get(i) else {
                        return Err(Error::input(format!("DOT {l}:{co}: unterminated string")));
                    };
                    bump(c, &mut line, &mut col);
                    i += 1;
                    match c {
                        '"' => break,
                        '\\' => {
                            let Some(&e) = chars.get(i) else {
                                return Err(Error::input(format!("DOT {l}:{co}: unterminated string")));
                            };
                            bump(e, &mut line, &mut col);
                            i += 1;
                            s.push(e);
                        }
                        c => s.push(c),
                    }
                }
                out.push(Located { tok: Tok::Id(s), line: l, col: co });
            }
            c if c.is_ascii_alphanumeric() || c == '_' || c == '.' => {
                let mut s = String::new();
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '.')
                {
                    s.push(chars[i]);
                    bump(chars[i], &mut line, &mut col);
                    i += 1;
                }
                out.push(Located { tok: Tok::Id(s), line: l, col: co });
            }
            c => {
                return Err(Error::input(format!("DOT {l}:{co}: unexpected character {c:?}")));
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Located>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn where_at(&self) -> String {
        match self.tokens.get(self.pos) {
            Some(t) => format!("{}:{}", t.line, t.col),
            None => "end of input".to_string(),
        }
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|t| t.tok.clone());
        self.pos += 1;
        t
    }

    fn expect_id(&mut self, what: &str) -> Result<String> {
        let at = self.where_at();
        match self.next() {
            Some(Tok::Id(s)) => Ok(s),
            other => Err(Error::input(format!("DOT {at}: expected {what}, found {other:?}"))),
        }
    }

    fn parse(mut self) -> Result<CoxeterGraph> {
        let at = self.where_at();
        let mut kw = self.expect_id("'graph'")?;
        if kw == "strict" {
            kw = self.expect_id("'graph'")?;
        }
        if kw == "digraph" {
            return Err(Error::input(format!("DOT {at}: directed graphs are not supported")));
        }
        if kw != "graph" {
            return Err(Error::input(format!("DOT {at}: expected 'graph', found {kw:?}")));
        }
        if matches!(self.peek(), Some(Tok::Id(_))) {
            self.next(); // graph name
        }
        let at = self.where_at();
        if self.next() != Some(Tok::Sym('{')) {
            return Err(Error::input(format!("DOT {at}: expected '{{'")));
        }
        let mut b = GraphBuilder::new();
        loop {
            match self.peek() {
                None => return Err(Error::input("DOT: missing closing '}'".to_string())),
                Some(Tok::Sym('}')) => {
                    self.next();
                    break;
                }
                Some(Tok::Sym(';')) => {
                    self.next();
                }
                Some(Tok::Id(_)) => self.statement(&mut b)?,
                Some(other) => {
                    return Err(Error::input(format!(
                        "DOT {}: unexpected {:?}",
                        self.where_at(),
                        other
                    )));
                }
            }
        }
        Ok(b.build())
    }

    fn statement(&mut self, b: &mut GraphBuilder) -> Result<()> {
        let first = self.expect_id("a node name")?;
        // Attribute statements like `node [...]` or `name = value`.
        if matches!(first.as_str(), "node" | "edge" | "graph")
            && matches!(self.peek(), Some(Tok::Sym('[')))
        {
            self.skip_attrs()?;
            return Ok(());
        }
        if matches!(self.peek(), Some(Tok::Sym('='))) {
            self.next();
            self.expect_id("a value")?;
            return Ok(());
        }
        let mut prev = self.intern(b, &first)?;
        loop {
            match self.peek() {
                Some(Tok::EdgeOp) => {
                    self.next();
                    let name = self.expect_id("a node name")?;
                    let cur = self.intern(b, &name)?;
                    b.add_edge(prev, cur)?;
                    prev = cur;
                }
                Some(Tok::Arrow) => {
                    return Err(Error::input(format!(
                        "DOT {}: directed edge '->' is not supported",
                        self.where_at()
                    )));
                }
                Some(Tok::Sym('[')) => self.skip_attrs()?,
                _ => return Ok(()),
            }
        }
    }

    fn intern(&self, b: &mut GraphBuilder, name: &str) -> Result<super::VertexId> {
        if b.has_vertex(name) {
            b.vertex(name)
        } else {
            b.add_vertex(name)
        }
    }

    fn skip_attrs(&mut self) -> Result<()> {
        let at = self.where_at();
        if self.next() != Some(Tok::Sym('[')) {
            return Err(Error::input(format!("DOT {at}: expected '['")));
        }
        loop {
            match self.next() {
                None => return Err(Error::input(format!("DOT {at}: unterminated '['"))),
                Some(Tok::Sym(']')) => return Ok(()),
                Some(_) => {}
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::CoxeterGraph;

    #[test]
    fn json_round_trip() {
        let text = r#"{"vertices": ["0", "1", "2", "3"],
                       "edges": [["0","1"],["1","2"],["2","3"],["3","0"]]}"#;
        let g = CoxeterGraph::from_json_str(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        let again = CoxeterGraph::from_json_str(&g.to_json_string()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn json_diagnostics_carry_location() {
        let err = CoxeterGraph::from_json_str("{\"vertices\": [\"a\"],\n  edges: []}")
            .unwrap_err()
            .to_string();
        assert!(err.contains("line 2"), "{err}");
        // Unknown edge endpoint is an input error too.
        assert!(
            CoxeterGraph::from_json_str(r#"{"vertices": ["a"], "edges": [["a","b"]]}"#).is_err()
        );
    }

    #[test]
    fn dot_parse_print_parse() {
        let g = CoxeterGraph::new(
            &["a", "b", "mid[a,b]", "lonely"],
            &[("a", "b"), ("b", "mid[a,b]")],
        )
        .unwrap();
        let dot = g.to_dot();
        let back = CoxeterGraph::from_dot_str(&dot).unwrap();
        assert_eq!(g, back);
        assert_eq!(back.to_dot(), dot);
    }

    #[test]
    fn dot_accepts_chains_comments_attrs() {
        let text = r#"
            // a path with noise
            strict graph demo {
              node [shape=circle];
              a -- b -- c [weight=2];
              d;
              label = something
            }
        "#;
        let g = CoxeterGraph::from_dot_str(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 2);
        assert!(g.adjacent(g.vertex("a").unwrap(), g.vertex("b").unwrap()));
    }

    #[test]
    fn dot_rejects_directed() {
        assert!(CoxeterGraph::from_dot_str("digraph g { a -> b; }").is_err());
        assert!(CoxeterGraph::from_dot_str("graph g { a -> b; }").is_err());
        let err = CoxeterGraph::from_dot_str("graph g { a -- ; }").unwrap_err().to_string();
        assert!(err.contains("1:"), "location missing: {err}");
    }
}
