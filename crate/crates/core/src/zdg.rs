//! Zero-divisor sets, zero-divisor graphs, and basic graph metrics.
//!
//! Vertices are the nonzero elements with a nonzero one-sided annihilator;
//! x and y are adjacent when x != y and xy = 0 or yx = 0. Elements with
//! x^2 = 0 are vertices (they annihilate themselves) but produce no loop.

use crate::algebra::{ElementId, FiniteSemiring};
use serde::Serialize;
use std::collections::VecDeque;
use std::fmt;

/// Simple undirected graph on the nonzero zero-divisors of an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZdGraph {
    vertices: Vec<ElementId>,
    labels: Vec<String>,
    adj: Vec<bool>,
    source: String,
}

impl ZdGraph {
    /// Test-double constructor from an explicit edge list on `n` vertices.
    pub fn from_edges(name: &str, n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![false; n * n];
        for &(u, v) in edges {
            assert!(u < n && v < n && u != v);
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        ZdGraph {
            vertices: (0..n).map(ElementId).collect(),
            labels: (0..n).map(|i| i.to_string()).collect(),
            adj,
            source: name.to_string(),
        }
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Algebra element behind vertex position `i`.
    pub fn vertex(&self, i: usize) -> ElementId {
        self.vertices[i]
    }

    pub fn vertices(&self) -> &[ElementId] {
        &self.vertices
    }

    pub fn vertex_label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n() + j]
    }

    pub fn degree(&self, i: usize) -> usize {
        (0..self.n()).filter(|&j| self.adjacent(i, j)).count()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&j| self.adjacent(i, j))
    }

    pub fn edge_count(&self) -> usize {
        let mut e = 0;
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                if self.adjacent(i, j) {
                    e += 1;
                }
            }
        }
        e
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                if self.adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn bfs_dist(&self, start: usize, skip_edge: Option<(usize, usize)>) -> Vec<Option<usize>> {
        let n = self.n();
        let mut dist = vec![None; n];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if !self.adjacent(u, v) {
                    continue;
                }
                if let Some((a, b)) = skip_edge {
                    if (u, v) == (a, b) || (u, v) == (b, a) {
                        continue;
                    }
                }
                if dist[v].is_none() {
                    dist[v] = Some(dist[u].unwrap() + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn connected_components(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            comps += 1;
            for (v, d) in self.bfs_dist(s, None).iter().enumerate() {
                if d.is_some() {
                    seen[v] = true;
                }
            }
        }
        comps
    }

    /// Cycle-space dimension E - V + C.
    pub fn cyclomatic(&self) -> usize {
        self.edge_count() + self.connected_components() - self.n()
    }
}

/// Diameter verdict. The empty graph is distinguished from all others so a
/// harness can tell "no zero-divisors" apart from "one zero-divisor".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Diameter {
    Empty,
    Disconnected,
    Finite(usize),
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Empty => write!(f, "empty"),
            Diameter::Disconnected => write!(f, "disconnected"),
            Diameter::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Girth verdict; `Acyclic` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Girth {
    Acyclic,
    Finite(usize),
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Acyclic => write!(f, "acyclic"),
            Girth::Finite(g) => write!(f, "{g}"),
        }
    }
}

/// Exactly the nonzero elements with a nonzero one-sided annihilator,
/// ascending. Note y = x is allowed: x with x^2 = 0 is a zero-divisor.
pub fn zero_divisor_set(s: &FiniteSemiring) -> Vec<ElementId> {
    let zero = s.zero();
    s.elements()
        .filter(|&x| {
            x != zero
                && s.elements()
                    .any(|y| y != zero && (s.mul(x, y) == zero || s.mul(y, x) == zero))
        })
        .collect()
}

/// The zero-divisor graph of `s`, vertices in ascending element order.
pub fn graph(s: &FiniteSemiring) -> ZdGraph {
    let vertices = zero_divisor_set(s);
    let k = vertices.len();
    let zero = s.zero();
    let mut adj = vec![false; k * k];
    for i in 0..k {
        for j in (i + 1)..k {
            let (x, y) = (vertices[i], vertices[j]);
            if s.mul(x, y) == zero || s.mul(y, x) == zero {
                adj[i * k + j] = true;
                adj[j * k + i] = true;
            }
        }
    }
    ZdGraph {
        labels: vertices.iter().map(|&v| s.label(v).to_string()).collect(),
        vertices,
        adj,
        source: s.name().to_string(),
    }
}

/// Max over vertex pairs of the shortest-path length, by BFS from every
/// vertex.
pub fn diameter(g: &ZdGraph) -> Diameter {
    if g.n() == 0 {
        return Diameter::Empty;
    }
    let mut max = 0;
    for s in 0..g.n() {
        for d in g.bfs_dist(s, None) {
            match d {
                None => return Diameter::Disconnected,
                Some(d) => max = max.max(d),
            }
        }
    }
    Diameter::Finite(max)
}

/// Length of the shortest cycle: for each edge, the shortest alternative
/// path between its endpoints plus one.
pub fn girth(g: &ZdGraph) -> Girth {
    let mut best: Option<usize> = None;
    for (u, v) in g.edges() {
        if let Some(d) = g.bfs_dist(u, Some((u, v)))[v] {
            let cycle = d + 1;
            if best.is_none_or(|b| cycle < b) {
                best = Some(cycle);
            }
        }
    }
    match best {
        Some(b) => Girth::Finite(b),
        None => Girth::Acyclic,
    }
}

/// Number of 3-element vertex subsets inducing a triangle.
pub fn triangle_count(g: &ZdGraph) -> usize {
    let n = g.n();
    let mut count = 0;
    for a in 0..n {
        for b in (a + 1)..n {
            if !g.adjacent(a, b) {
                continue;
            }
            for c in (b + 1)..n {
                if g.adjacent(a, c) && g.adjacent(b, c) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Standard connectivity; vacuously true for the empty graph.
pub fn is_connected(g: &ZdGraph) -> bool {
    g.n() == 0 || g.connected_components() == 1
}

/// DOT export: undirected graph, vertex labels from the algebra, and a
/// graph comment attribute carrying the source name and metric summary.
pub fn to_dot(g: &ZdGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph \"{}\" {{\n", escape(g.source())));
    out.push_str(&format!(
        "  comment=\"source={} diameter={} girth={} triangles={}\";\n",
        escape(g.source()),
        diameter(g),
        girth(g),
        triangle_count(g)
    ));
    for i in 0..g.n() {
        out.push_str(&format!(
            "  v{} [label=\"{}\"];\n",
            g.vertex(i).0,
            escape(g.vertex_label(i))
        ));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  v{} -- v{};\n", g.vertex(u).0, g.vertex(v).0));
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
