//! Graph encodings of the subgraph isomorphism problems as scale-measure
//! existence questions, plus naive graph oracles to check them against.

use std::collections::BTreeSet;
use std::fmt;

use crate::context::FormalContext;
use crate::error::GraphError;

/// Undirected graph without loops or multi-edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertices: Vec<String>,
    /// Normalised `(u, v)` with `u < v`, sorted.
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    /// Graph on vertices `0..n` labelled by their decimal index.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::with_labels((0..n).map(|v| v.to_string()).collect(), edges)
    }

    pub fn with_labels(vertices: Vec<String>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= vertices.len() {
                    return Err(GraphError::UnknownVertex(w.to_string()));
                }
            }
            if u == v {
                return Err(GraphError::Loop(vertices[u].clone()));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(vertices[u].clone(), vertices[v].clone()));
            }
        }
        Ok(Self { vertices, edges: set })
    }

    /// Parses the edge-list format: a vertex count, then one `u v` pair of
    /// 0-based indices per line. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, first) = lines.next().ok_or(GraphError::Syntax {
            line: 1,
            message: "missing vertex count".into(),
        })?;
        let n: usize = first.parse().map_err(|_| GraphError::Syntax {
            line,
            message: format!("expected a vertex count, found `{first}`"),
        })?;
        let mut edges = Vec::new();
        for (line, text) in lines {
            let fields: Vec<&str> = text.split_whitespace().collect();
            let [u, v] = fields.as_slice() else {
                return Err(GraphError::Syntax {
                    line,
                    message: format!("expected `u v`, found `{text}`"),
                });
            };
            let index = |s: &str| -> Result<usize, GraphError> {
                let i: usize = s.parse().map_err(|_| GraphError::Syntax {
                    line,
                    message: format!("`{s}` is not a vertex index"),
                })?;
                if i >= n {
                    return Err(GraphError::UnknownVertex(s.to_string()));
                }
                Ok(i)
            };
            edges.push((index(u)?, index(v)?));
        }
        Self::new(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }
}

impl fmt::Display for SimpleGraph {
    /// Writes the edge-list format read by [`SimpleGraph::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.vertices.len())?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// Objects `V ∪ {⊥}`; attributes are the edges, the vertex singletons and an
/// empty column; incidence is membership.
///
/// Its extents are exactly `∅`, the singletons, the edges and `V ∪ {⊥}`.
pub fn reduce_si(g: &SimpleGraph) -> Result<FormalContext, GraphError> {
    encode(g, true)
}

/// As [`reduce_si`] without `⊥`; extents are `∅`, singletons, edges and `V`.
pub fn reduce_isi(g: &SimpleGraph) -> Result<FormalContext, GraphError> {
    encode(g, false)
}

fn encode(g: &SimpleGraph, bottom: bool) -> Result<FormalContext, GraphError> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(GraphError::TooSmall(n));
    }
    let mut objects = g.vertices.clone();
    if bottom {
        let mut label = "⊥".to_string();
        while objects.contains(&label) {
            label.push('\'');
        }
        objects.push(label);
    }
    let mut columns: Vec<(String, Vec<usize>)> = Vec::new();
    for (u, v) in g.edges() {
        columns.push((format!("{{{},{}}}", g.vertices[u], g.vertices[v]), vec![u, v]));
    }
    for v in 0..n {
        columns.push((format!("{{{}}}", g.vertices[v]), vec![v]));
    }
    columns.push(("∅".to_string(), Vec::new()));
    let attributes = columns.iter().map(|(label, _)| label.clone()).collect();
    let context = FormalContext::from_fn(objects, attributes, |obj, m| columns[m].1.contains(&obj))
        .expect("vertex and edge labels are distinct");
    Ok(context)
}

/// Whether `h` is isomorphic to a (not necessarily induced) subgraph of `g`.
pub fn brute_force_si(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    find_injection(g, h, false)
}

/// Whether `h` is isomorphic to an induced subgraph of `g`.
pub fn brute_force_isi(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    find_injection(g, h, true)
}

fn find_injection(g: &SimpleGraph, h: &SimpleGraph, induced: bool) -> bool {
    fn go(g: &SimpleGraph, h: &SimpleGraph, induced: bool, image: &mut Vec<usize>) -> bool {
        let x = image.len();
        if x == h.vertex_count() {
            return true;
        }
        for y in 0..g.vertex_count() {
            if image.contains(&y) {
                continue;
            }
            let fits = image.iter().enumerate().all(|(w, &z)| {
                let want = h.has_edge(x, w);
                let have = g.has_edge(y, z);
                if induced {
                    want == have
                } else {
                    !want || have
                }
            });
            if fits {
                image.push(y);
                if go(g, h, induced, image) {
                    return true;
                }
                image.pop();
            }
        }
        false
    }
    h.vertex_count() <= g.vertex_count() && go(g, h, induced, &mut Vec::new())
}
