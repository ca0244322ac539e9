//! Recognition of the named zero-divisor graph families, with extracted
//! parameters and a vertex-role witness, plus induced search for the small
//! forbidden configurations.
//!
//! Families overlap as raw definitions; classification resolves overlap by
//! a fixed priority (Empty > Complete > CompleteBipartite > Cycle > Path >
//! TwoStar > BarK > DeltaK > CompleteMultipartite > Other) with recognizers
//! restricted so the outcome is deterministic:
//!
//! * complete bipartite is only reported with both parts >= 2 — stars
//!   K_{1,n+1} are reported in two-star form as S_{0,n};
//! * cycles and paths are only reported for n >= 5 (C_3, C_4, P_2, P_3, P_4
//!   land in earlier or later families: K_3, K_{2,2}, K_2, S_{0,1}, S_{1,1}).

use crate::algebra::ElementId;
use crate::zdg::{self, ZdGraph};
use serde::Serialize;
use std::fmt;
use thiserror::Error;

/// Classification tag with extracted parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum ShapeTag {
    Empty,
    Complete(usize),
    CompleteBipartite(usize, usize),
    TwoStar(usize, usize),
    BarK {
        m: usize,
        n: usize,
        r: usize,
    },
    DeltaK {
        m: usize,
        n: usize,
        r1: usize,
        r2: usize,
        r3: usize,
    },
    CompleteMultipartite(Vec<usize>),
    Cycle(usize),
    Path(usize),
    Other,
}

impl fmt::Display for ShapeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeTag::Empty => write!(f, "empty"),
            ShapeTag::Complete(n) => write!(f, "K_{n}"),
            ShapeTag::CompleteBipartite(m, n) => write!(f, "K_{{{m},{n}}}"),
            ShapeTag::TwoStar(m, n) => write!(f, "S_{{{m},{n}}}"),
            ShapeTag::BarK { m, n, r } => write!(f, "K̄^{{{r}}}_{{{m},{n}}}"),
            ShapeTag::DeltaK { m, n, r1, r2, r3 } => {
                write!(f, "K_{{{m},{n}}}^{{Δ({r1},{r2},{r3})}}")
            }
            ShapeTag::CompleteMultipartite(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "K_{{{}}}", s.join(","))
            }
            ShapeTag::Cycle(n) => write!(f, "C_{n}"),
            ShapeTag::Path(n) => write!(f, "P_{n}"),
            ShapeTag::Other => write!(f, "other"),
        }
    }
}

/// A classification outcome: the family tag plus a map from each vertex to
/// its role within the family. Rebuilding the edge set from the roles
/// reproduces the classified graph exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphShape {
    pub tag: ShapeTag,
    /// (vertex element, role label), in vertex order.
    pub roles: Vec<(ElementId, String)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("graph is disconnected")]
    Disconnected,
}

impl ShapeTag {
    /// Canonical form of a family description: the tag `classify` itself
    /// would produce for a graph of this shape. Distinct descriptions of
    /// the same graph (e.g. S_{1,1} vs P_4, K̄^0_{m,n} vs K_{m,n}) share
    /// one canonical form.
    pub fn canonical(&self) -> ShapeTag {
        match self {
            ShapeTag::Empty => ShapeTag::Empty,
            ShapeTag::Other => ShapeTag::Other,
            tag => match classify(&synthesize(tag)) {
                Ok(shape) => shape.tag,
                Err(_) => ShapeTag::Other,
            },
        }
    }
}

/// Build a concrete graph of the given shape on fresh vertices 0..n.
pub fn synthesize(tag: &ShapeTag) -> ZdGraph {
    let name = format!("synthetic {tag}");
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let n;
    match tag {
        ShapeTag::Empty => n = 0,
        ShapeTag::Other => panic!("cannot synthesize 'other'"),
        ShapeTag::Complete(k) => {
            n = *k;
            for i in 0..n {
                for j in (i + 1)..n {
                    edges.push((i, j));
                }
            }
        }
        ShapeTag::CompleteBipartite(m, k) => {
            n = m + k;
            for i in 0..*m {
                for j in 0..*k {
                    edges.push((i, m + j));
                }
            }
        }
        ShapeTag::TwoStar(m, k) => {
            // v1 = 0, v2 = 1, m leaves on v1, k leaves on v2.
            n = 2 + m + k;
            edges.push((0, 1));
            for i in 0..*m {
                edges.push((0, 2 + i));
            }
            for j in 0..*k {
                edges.push((1, 2 + m + j));
            }
        }
        ShapeTag::BarK { m, n: nn, r } => {
            // a = 0 with the pendants; part of a = 0..m, other part m..m+n.
            n = m + nn + r;
            for i in 0..*m {
                for j in 0..*nn {
                    edges.push((i, m + j));
                }
            }
            for p in 0..*r {
                edges.push((0, m + nn + p));
            }
        }
        ShapeTag::DeltaK {
            m,
            n: nn,
            r1,
            r2,
            r3,
        } => {
            // a = 0, part-1 = 0..m, b = m, part-2 = m..m+n, e = m+n,
            // then r1 pendants on a, r2 on b, r3 on e.
            n = m + nn + 1 + r1 + r2 + r3;
            let (a, b, e) = (0, *m, m + nn);
            for i in 0..*m {
                for j in 0..*nn {
                    edges.push((i, m + j));
                }
            }
            edges.push((a, e));
            edges.push((b, e));
            let mut next = m + nn + 1;
            for _ in 0..*r1 {
                edges.push((a, next));
                next += 1;
            }
            for _ in 0..*r2 {
                edges.push((b, next));
                next += 1;
            }
            for _ in 0..*r3 {
                edges.push((e, next));
                next += 1;
            }
        }
        ShapeTag::CompleteMultipartite(parts) => {
            n = parts.iter().sum();
            let mut bounds = Vec::new();
            let mut acc = 0;
            for p in parts {
                bounds.push((acc, acc + p));
                acc += p;
            }
            for (pi, &(s1, e1)) in bounds.iter().enumerate() {
                for &(s2, e2) in bounds.iter().skip(pi + 1) {
                    for i in s1..e1 {
                        for j in s2..e2 {
                            edges.push((i, j));
                        }
                    }
                }
            }
        }
        ShapeTag::Cycle(k) => {
            n = *k;
            for i in 0..n {
                edges.push((i, (i + 1) % n));
            }
        }
        ShapeTag::Path(k) => {
            n = *k;
            for i in 0..n - 1 {
                edges.push((i, i + 1));
            }
        }
    }
    ZdGraph::from_edges(&name, n, &edges)
}

impl GraphShape {
    /// Re-derive the edge set from the tag and witness. `None` for Other.
    pub fn rebuild_edges(&self) -> Option<Vec<(ElementId, ElementId)>> {
        let of_role = |pred: &dyn Fn(&str) -> bool| -> Vec<ElementId> {
            self.roles
                .iter()
                .filter(|(_, r)| pred(r))
                .map(|(v, _)| *v)
                .collect()
        };
        let one = |role: &str| -> ElementId {
            of_role(&|r| r == role)
                .first()
                .copied()
                .expect("witness role present")
        };
        let mut edges: Vec<(ElementId, ElementId)> = Vec::new();
        let mut push = |a: ElementId, b: ElementId| {
            edges.push((a.min(b), a.max(b)));
        };
        match &self.tag {
            ShapeTag::Other => return None,
            ShapeTag::Empty => {}
            ShapeTag::Complete(_) => {
                let vs = of_role(&|_| true);
                for i in 0..vs.len() {
                    for j in (i + 1)..vs.len() {
                        push(vs[i], vs[j]);
                    }
                }
            }
            ShapeTag::CompleteBipartite(_, _) => {
                for &a in &of_role(&|r| r == "part-1") {
                    for &b in &of_role(&|r| r == "part-2") {
                        push(a, b);
                    }
                }
            }
            ShapeTag::TwoStar(_, _) => {
                let (v1, v2) = (one("v1"), one("v2"));
                push(v1, v2);
                for &l in &of_role(&|r| r == "leaf-v1") {
                    push(v1, l);
                }
                for &l in &of_role(&|r| r == "leaf-v2") {
                    push(v2, l);
                }
            }
            ShapeTag::BarK { .. } => {
                let a = one("a");
                let mut part1 = of_role(&|r| r == "part-1");
                part1.push(a);
                for &x in &part1 {
                    for &y in &of_role(&|r| r == "part-2") {
                        push(x, y);
                    }
                }
                for &p in &of_role(&|r| r == "pendant-on-a") {
                    push(a, p);
                }
            }
            ShapeTag::DeltaK { .. } => {
                let (a, b, e) = (one("a"), one("b"), one("e"));
                let mut part1 = of_role(&|r| r == "part-1");
                part1.push(a);
                let mut part2 = of_role(&|r| r == "part-2");
                part2.push(b);
                for &x in &part1 {
                    for &y in &part2 {
                        push(x, y);
                    }
                }
                push(a, e);
                push(b, e);
                for &p in &of_role(&|r| r == "pendant-on-a") {
                    push(a, p);
                }
                for &p in &of_role(&|r| r == "pendant-on-b") {
                    push(b, p);
                }
                for &p in &of_role(&|r| r == "pendant-on-e") {
                    push(e, p);
                }
            }
            ShapeTag::CompleteMultipartite(parts) => {
                for i in 1..=parts.len() {
                    for j in (i + 1)..=parts.len() {
                        for &a in &of_role(&|r| r == format!("part-{i}")) {
                            for &b in &of_role(&|r| r == format!("part-{j}")) {
                                push(a, b);
                            }
                        }
                    }
                }
            }
            ShapeTag::Cycle(k) => {
                let vs = ordered_by_index(&self.roles, 'c');
                for i in 0..*k {
                    push(vs[i], vs[(i + 1) % k]);
                }
            }
            ShapeTag::Path(k) => {
                let vs = ordered_by_index(&self.roles, 'p');
                for i in 0..k - 1 {
                    push(vs[i], vs[i + 1]);
                }
            }
        }
        edges.sort();
        edges.dedup();
        Some(edges)
    }
}

fn ordered_by_index(roles: &[(ElementId, String)], prefix: char) -> Vec<ElementId> {
    let mut with_idx: Vec<(usize, ElementId)> = roles
        .iter()
        .map(|(v, r)| {
            let idx: usize = r[prefix.len_utf8()..].parse().expect("indexed role");
            (idx, *v)
        })
        .collect();
    with_idx.sort();
    with_idx.into_iter().map(|(_, v)| v).collect()
}

/// Partition into independent sets with all cross edges present, found as
/// complement-graph connected components. Part sizes ascending.
pub fn is_complete_multipartite(g: &ZdGraph) -> Option<Vec<usize>> {
    parts_of_complete_multipartite(g).map(|parts| {
        let mut sizes: Vec<usize> = parts.iter().map(|p| p.len()).collect();
        sizes.sort();
        sizes
    })
}

fn parts_of_complete_multipartite(g: &ZdGraph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = parts.len();
        let mut stack = vec![s];
        let mut members = Vec::new();
        comp[s] = id;
        while let Some(u) = stack.pop() {
            members.push(u);
            for (v, slot) in comp.iter_mut().enumerate() {
                if v != u && !g.adjacent(u, v) && *slot == usize::MAX {
                    *slot = id;
                    stack.push(v);
                }
            }
        }
        members.sort();
        parts.push(members);
    }
    // Each complement component must be independent in g.
    for part in &parts {
        for (i, &u) in part.iter().enumerate() {
            for &v in part.iter().skip(i + 1) {
                if g.adjacent(u, v) {
                    return None;
                }
            }
        }
    }
    Some(parts)
}

/// The common degree if all degrees are equal, else `None`. Empty graphs
/// have no degree to speak of.
pub fn is_regular(g: &ZdGraph) -> Option<usize> {
    if g.n() == 0 {
        return None;
    }
    let d = g.degree(0);
    (1..g.n()).all(|i| g.degree(i) == d).then_some(d)
}

/// Classify a connected (or empty) graph into the most specific family
/// under the fixed priority, with a populated role witness. Deterministic.
pub fn classify(g: &ZdGraph) -> Result<GraphShape, ShapeError> {
    if g.n() == 0 {
        return Ok(GraphShape {
            tag: ShapeTag::Empty,
            roles: vec![],
        });
    }
    if !zdg::is_connected(g) {
        return Err(ShapeError::Disconnected);
    }
    let shape = recognize_complete(g)
        .or_else(|| recognize_complete_bipartite(g))
        .or_else(|| recognize_cycle(g))
        .or_else(|| recognize_path(g))
        .or_else(|| recognize_two_star(g))
        .or_else(|| recognize_bar_k(g))
        .or_else(|| recognize_delta_k(g))
        .or_else(|| recognize_multipartite(g))
        .unwrap_or_else(|| GraphShape {
            tag: ShapeTag::Other,
            roles: g
                .vertices()
                .iter()
                .map(|&v| (v, "other".to_string()))
                .collect(),
        });
    debug_assert!(
        shape.tag == ShapeTag::Other || witness_matches(g, &shape),
        "witness round-trip failed for {}",
        shape.tag
    );
    Ok(shape)
}

fn witness_matches(g: &ZdGraph, shape: &GraphShape) -> bool {
    let rebuilt = match shape.rebuild_edges() {
        Some(e) => e,
        None => return true,
    };
    let mut actual: Vec<(ElementId, ElementId)> = g
        .edges()
        .iter()
        .map(|&(i, j)| {
            let (a, b) = (g.vertex(i), g.vertex(j));
            (a.min(b), a.max(b))
        })
        .collect();
    actual.sort();
    rebuilt == actual
}

fn roles(g: &ZdGraph, assign: impl Fn(usize) -> String) -> Vec<(ElementId, String)> {
    (0..g.n()).map(|i| (g.vertex(i), assign(i))).collect()
}

fn recognize_complete(g: &ZdGraph) -> Option<GraphShape> {
    let n = g.n();
    for i in 0..n {
        for j in (i + 1)..n {
            if !g.adjacent(i, j) {
                return None;
            }
        }
    }
    Some(GraphShape {
        tag: ShapeTag::Complete(n),
        roles: roles(g, |_| "v".to_string()),
    })
}

/// Proper 2-coloring of a connected graph, or None when an odd cycle exists.
fn two_color(g: &ZdGraph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    color[0] = 0;
    let mut stack = vec![0usize];
    while let Some(u) = stack.pop() {
        for v in g.neighbors(u) {
            if color[v] == usize::MAX {
                color[v] = 1 - color[u];
                stack.push(v);
            } else if color[v] == color[u] {
                return None;
            }
        }
    }
    Some(color)
}

fn recognize_complete_bipartite(g: &ZdGraph) -> Option<GraphShape> {
    let color = two_color(g)?;
    let p0: Vec<usize> = (0..g.n()).filter(|&i| color[i] == 0).collect();
    let p1: Vec<usize> = (0..g.n()).filter(|&i| color[i] == 1).collect();
    if p0.len() < 2 || p1.len() < 2 {
        return None;
    }
    for &a in &p0 {
        for &b in &p1 {
            if !g.adjacent(a, b) {
                return None;
            }
        }
    }
    let (small, big) = if p0.len() <= p1.len() {
        (p0, p1)
    } else {
        (p1, p0)
    };
    let tag = ShapeTag::CompleteBipartite(small.len(), big.len());
    Some(GraphShape {
        tag,
        roles: roles(g, |i| {
            if small.contains(&i) {
                "part-1".to_string()
            } else {
                "part-2".to_string()
            }
        }),
    })
}

fn recognize_cycle(g: &ZdGraph) -> Option<GraphShape> {
    let n = g.n();
    if n < 5 || g.edge_count() != n || (0..n).any(|i| g.degree(i) != 2) {
        return None;
    }
    // Walk the cycle from vertex 0 toward its smaller neighbor.
    let mut order = vec![0usize];
    let mut prev = 0usize;
    let mut cur = g.neighbors(0).min().unwrap();
    while cur != 0 {
        order.push(cur);
        let next = g.neighbors(cur).find(|&v| v != prev).unwrap();
        prev = cur;
        cur = next;
    }
    if order.len() != n {
        return None;
    }
    let mut role_of = vec![String::new(); n];
    for (idx, &v) in order.iter().enumerate() {
        role_of[v] = format!("c{idx}");
    }
    Some(GraphShape {
        tag: ShapeTag::Cycle(n),
        roles: roles(g, |i| role_of[i].clone()),
    })
}

fn recognize_path(g: &ZdGraph) -> Option<GraphShape> {
    let n = g.n();
    if n < 5 || g.edge_count() != n - 1 {
        return None;
    }
    let ends: Vec<usize> = (0..n).filter(|&i| g.degree(i) == 1).collect();
    if ends.len() != 2 || (0..n).any(|i| g.degree(i) > 2) {
        return None;
    }
    let start = *ends.iter().min().unwrap();
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start).next().unwrap();
    loop {
        order.push(cur);
        match g.neighbors(cur).find(|&v| v != prev) {
            Some(next) => {
                prev = cur;
                cur = next;
            }
            None => break,
        }
    }
    if order.len() != n {
        return None;
    }
    let mut role_of = vec![String::new(); n];
    for (idx, &v) in order.iter().enumerate() {
        role_of[v] = format!("p{idx}");
    }
    Some(GraphShape {
        tag: ShapeTag::Path(n),
        roles: roles(g, |i| role_of[i].clone()),
    })
}

/// Two-star S_{m,n}: central edge v1 - v2 with m leaves on v1 and n on v2.
/// Exactly the trees of diameter <= 3. Canonical parameters put the larger
/// leaf count first, except stars which are S_{0,n}.
fn recognize_two_star(g: &ZdGraph) -> Option<GraphShape> {
    let n = g.n();
    if n < 2 || g.edge_count() != n - 1 {
        return None;
    }
    let diam = match zdg::diameter(g) {
        zdg::Diameter::Finite(d) => d,
        _ => return None,
    };
    if diam > 3 {
        return None;
    }
    if diam <= 2 {
        // Star: v2 is the center, v1 its smallest neighbor.
        let center = (0..n)
            .max_by_key(|&i| (g.degree(i), usize::MAX - i))
            .unwrap();
        let v1 = g.neighbors(center).min()?;
        let leaves: Vec<usize> = g.neighbors(center).filter(|&x| x != v1).collect();
        let tag = ShapeTag::TwoStar(0, leaves.len());
        return Some(GraphShape {
            tag,
            roles: roles(g, |i| {
                if i == v1 {
                    "v1".into()
                } else if i == center {
                    "v2".into()
                } else {
                    "leaf-v2".into()
                }
            }),
        });
    }
    // Diameter 3: exactly two adjacent internal vertices.
    let internal: Vec<usize> = (0..n).filter(|&i| g.degree(i) >= 2).collect();
    if internal.len() != 2 || !g.adjacent(internal[0], internal[1]) {
        return None;
    }
    let (mut c1, mut c2) = (internal[0], internal[1]);
    // Every other vertex is a leaf on one of the centers.
    for i in 0..n {
        if i == c1 || i == c2 {
            continue;
        }
        if g.degree(i) != 1 {
            return None;
        }
    }
    let leaves = |c: usize, other: usize| g.neighbors(c).filter(|&x| x != other).count();
    let (mut m, mut k) = (leaves(c1, c2), leaves(c2, c1));
    if m < k || (m == k && c2 < c1) {
        std::mem::swap(&mut c1, &mut c2);
        std::mem::swap(&mut m, &mut k);
    }
    Some(GraphShape {
        tag: ShapeTag::TwoStar(m, k),
        roles: roles(g, |i| {
            if i == c1 {
                "v1".into()
            } else if i == c2 {
                "v2".into()
            } else if g.adjacent(i, c1) {
                "leaf-v1".into()
            } else {
                "leaf-v2".into()
            }
        }),
    })
}

/// K̄^r_{m,n}: complete bipartite K_{m,n} plus r pendants on one vertex a
/// with deg(a) = n inside the core (so a lies in the part of size m).
fn recognize_bar_k(g: &ZdGraph) -> Option<GraphShape> {
    let n_all = g.n();
    let pendants: Vec<usize> = (0..n_all).filter(|&i| g.degree(i) == 1).collect();
    if pendants.is_empty() {
        return None;
    }
    let mut anchor = None;
    for &p in &pendants {
        let a = g.neighbors(p).next().unwrap();
        if pendants.contains(&a) {
            return None;
        }
        match anchor {
            None => anchor = Some(a),
            Some(prev) if prev != a => return None,
            _ => {}
        }
    }
    let a = anchor.unwrap();
    let core: Vec<usize> = (0..n_all).filter(|i| !pendants.contains(i)).collect();
    if core.len() < 4 {
        return None;
    }
    // 2-color the core and demand completeness across parts.
    let core_graph = induced(g, &core);
    let color = two_color(&core_graph)?;
    let part0: Vec<usize> = (0..core.len()).filter(|&i| color[i] == 0).collect();
    let part1: Vec<usize> = (0..core.len()).filter(|&i| color[i] == 1).collect();
    if part0.len() < 2 || part1.len() < 2 {
        return None;
    }
    for &x in &part0 {
        for &y in &part1 {
            if !core_graph.adjacent(x, y) {
                return None;
            }
        }
    }
    let a_core = core.iter().position(|&v| v == a).unwrap();
    let (a_part, b_part) = if part0.contains(&a_core) {
        (part0, part1)
    } else {
        (part1, part0)
    };
    let (m, n) = (a_part.len(), b_part.len());
    let in_a_part: Vec<usize> = a_part.iter().map(|&i| core[i]).collect();
    Some(GraphShape {
        tag: ShapeTag::BarK {
            m,
            n,
            r: pendants.len(),
        },
        roles: roles(g, |i| {
            if i == a {
                "a".into()
            } else if pendants.contains(&i) {
                "pendant-on-a".into()
            } else if in_a_part.contains(&i) {
                "part-1".into()
            } else {
                "part-2".into()
            }
        }),
    })
}

fn induced(g: &ZdGraph, verts: &[usize]) -> ZdGraph {
    let mut edges = Vec::new();
    for (i, &u) in verts.iter().enumerate() {
        for (j, &v) in verts.iter().enumerate().skip(i + 1) {
            if g.adjacent(u, v) {
                edges.push((i, j));
            }
        }
    }
    ZdGraph::from_edges("induced", verts.len(), &edges)
}

/// K_{m,n}^{Δ(r1,r2,r3)}: K̄^{r1}_{m,n} plus an apex e with edges
/// a - e - b, r2 pendants on b (deg(b) = m in the core) and r3 on e.
/// The one-triangle family.
fn recognize_delta_k(g: &ZdGraph) -> Option<GraphShape> {
    if zdg::triangle_count(g) != 1 {
        return None;
    }
    let n_all = g.n();
    let pendants: Vec<usize> = (0..n_all).filter(|&i| g.degree(i) == 1).collect();
    for &p in &pendants {
        if pendants.contains(&g.neighbors(p).next().unwrap()) {
            return None;
        }
    }
    let core: Vec<usize> = (0..n_all).filter(|i| !pendants.contains(i)).collect();
    let core_graph = induced(g, &core);
    let k = core.len();

    // m = n = 1: the core is the bare triangle; roles sort by pendant count.
    if k == 3 && core_graph.edge_count() == 3 {
        let mut counts: Vec<(usize, usize)> = core
            .iter()
            .map(|&v| {
                let c = pendants.iter().filter(|&&p| g.adjacent(p, v)).count();
                (c, v)
            })
            .collect();
        // Sort by descending count, then ascending vertex for determinism.
        counts.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let (r1, a) = counts[0];
        let (r2, b) = counts[1];
        let (r3, e) = counts[2];
        if r1 + r2 + r3 != pendants.len() {
            return None;
        }
        return Some(GraphShape {
            tag: ShapeTag::DeltaK {
                m: 1,
                n: 1,
                r1,
                r2,
                r3,
            },
            roles: roles(g, |i| {
                if i == a {
                    "a".into()
                } else if i == b {
                    "b".into()
                } else if i == e {
                    "e".into()
                } else if g.adjacent(i, a) {
                    "pendant-on-a".into()
                } else if g.adjacent(i, b) {
                    "pendant-on-b".into()
                } else {
                    "pendant-on-e".into()
                }
            }),
        });
    }

    // General case: find the apex e among core vertices of core-degree 2
    // whose removal leaves a complete bipartite core with e's neighbors in
    // opposite parts. Keep the lexicographically greatest parameter tuple.
    let mut best: Option<(Vec<usize>, GraphShape)> = None;
    for (e_pos, &e) in core.iter().enumerate() {
        if core_graph.degree(e_pos) != 2 {
            continue;
        }
        let nb: Vec<usize> = core_graph.neighbors(e_pos).collect();
        let rest: Vec<usize> = core.iter().copied().filter(|&v| v != e).collect();
        let rest_graph = induced(g, &rest);
        if rest.len() < 4 {
            continue;
        }
        let color = match two_color(&rest_graph) {
            Some(c) => c,
            None => continue,
        };
        let p0: Vec<usize> = (0..rest.len()).filter(|&i| color[i] == 0).collect();
        let p1: Vec<usize> = (0..rest.len()).filter(|&i| color[i] == 1).collect();
        if p0.len() < 2 || p1.len() < 2 {
            continue;
        }
        let mut complete = true;
        for &x in &p0 {
            for &y in &p1 {
                if !rest_graph.adjacent(x, y) {
                    complete = false;
                }
            }
        }
        if !complete {
            continue;
        }
        let a = core[nb[0]];
        let b_v = core[nb[1]];
        let pos_in_rest = |v: usize| rest.iter().position(|&x| x == v).unwrap();
        let (ca, cb) = (color[pos_in_rest(a)], color[pos_in_rest(b_v)]);
        if ca == cb {
            continue;
        }
        // Pendants may hang only off a, b, or e.
        let count_pend = |v: usize| pendants.iter().filter(|&&p| g.adjacent(p, v)).count();
        let total: usize = pendants
            .iter()
            .filter(|&&p| {
                let nbr = g.neighbors(p).next().unwrap();
                nbr == a || nbr == b_v || nbr == e
            })
            .count();
        if total != pendants.len() {
            continue;
        }
        // Two orientations describe the same graph; keep the greater tuple.
        for (aa, bb) in [(a, b_v), (b_v, a)] {
            let part_a: Vec<usize> = (0..rest.len())
                .filter(|&i| color[i] == color[pos_in_rest(aa)])
                .map(|i| rest[i])
                .collect();
            let part_b: Vec<usize> = (0..rest.len())
                .filter(|&i| color[i] == color[pos_in_rest(bb)])
                .map(|i| rest[i])
                .collect();
            let tuple = vec![
                part_a.len(),
                part_b.len(),
                count_pend(aa),
                count_pend(bb),
                count_pend(e),
            ];
            if best.as_ref().is_some_and(|(t, _)| *t >= tuple) {
                continue;
            }
            let shape = GraphShape {
                tag: ShapeTag::DeltaK {
                    m: tuple[0],
                    n: tuple[1],
                    r1: tuple[2],
                    r2: tuple[3],
                    r3: tuple[4],
                },
                roles: roles(g, |i| {
                    if i == aa {
                        "a".into()
                    } else if i == bb {
                        "b".into()
                    } else if i == e {
                        "e".into()
                    } else if pendants.contains(&i) {
                        let nbr = g.neighbors(i).next().unwrap();
                        if nbr == aa {
                            "pendant-on-a".into()
                        } else if nbr == bb {
                            "pendant-on-b".into()
                        } else {
                            "pendant-on-e".into()
                        }
                    } else if part_a.contains(&i) {
                        "part-1".into()
                    } else {
                        "part-2".into()
                    }
                }),
            };
            if witness_matches(g, &shape) {
                best = Some((tuple, shape));
            }
        }
    }
    best.map(|(_, s)| s)
}

fn recognize_multipartite(g: &ZdGraph) -> Option<GraphShape> {
    let parts = parts_of_complete_multipartite(g)?;
    if parts.len() < 2 {
        return None;
    }
    // Order parts by (size, smallest member) for a deterministic witness.
    let mut ordered: Vec<Vec<usize>> = parts;
    ordered.sort_by_key(|p| (p.len(), p[0]));
    let sizes: Vec<usize> = ordered.iter().map(|p| p.len()).collect();
    let mut role_of = vec![String::new(); g.n()];
    for (pi, part) in ordered.iter().enumerate() {
        for &v in part {
            role_of[v] = format!("part-{}", pi + 1);
        }
    }
    Some(GraphShape {
        tag: ShapeTag::CompleteMultipartite(sizes),
        roles: roles(g, |i| role_of[i].clone()),
    })
}

/// The forbidden induced configurations: exact small edge sets whose
/// presence or absence drives the girth-4 and one-triangle classifications.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ForbiddenConfig {
    /// Path a - b - c - d - e.
    P5,
    /// 4-cycle a-b-c-d-a plus pendant edges a-e and b-f.
    C4Prime,
    /// 4-cycle a-b-c-d-a plus pendant edges a-e and c-f.
    C4DoublePrime,
    /// 4-cycle a-b-c-d-a and 3-cycle a-b-e-a sharing the edge a-b.
    C43,
    /// Two 4-cycles a-b-c-d-a and a-b-f-e-a sharing the edge a-b.
    C44,
    /// 4-cycle a-b-c-d-a and 5-cycle a-b-c-f-e-a sharing the path a-b-c.
    C45,
}

impl ForbiddenConfig {
    pub fn role_names(self) -> &'static [&'static str] {
        match self {
            ForbiddenConfig::P5 | ForbiddenConfig::C43 => &["a", "b", "c", "d", "e"],
            _ => &["a", "b", "c", "d", "e", "f"],
        }
    }

    pub fn size(self) -> usize {
        self.role_names().len()
    }

    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            ForbiddenConfig::P5 => &[(0, 1), (1, 2), (2, 3), (3, 4)],
            ForbiddenConfig::C4Prime => &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)],
            ForbiddenConfig::C4DoublePrime => &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)],
            ForbiddenConfig::C43 => &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)],
            ForbiddenConfig::C44 => &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 5), (5, 4), (4, 0)],
            ForbiddenConfig::C45 => &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 5), (5, 4), (4, 0)],
        }
    }
}

fn induced_backtrack(g: &ZdGraph, config: ForbiddenConfig, all: bool) -> Vec<Vec<usize>> {
    let k = config.size();
    let edges = config.edges();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut assign: Vec<usize> = Vec::new();
    let mut used = vec![false; g.n()];
    fn rec(
        g: &ZdGraph,
        k: usize,
        edges: &[(usize, usize)],
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<Vec<usize>>,
        all: bool,
    ) {
        if assign.len() == k {
            found.push(assign.clone());
            return;
        }
        let pos = assign.len();
        for v in 0..g.n() {
            if used[v] {
                continue;
            }
            let ok = (0..pos).all(|p| {
                let wanted = edges.contains(&(p, pos)) || edges.contains(&(pos, p));
                g.adjacent(assign[p], v) == wanted
            });
            if ok {
                used[v] = true;
                assign.push(v);
                rec(g, k, edges, assign, used, found, all);
                assign.pop();
                used[v] = false;
                if !all && !found.is_empty() {
                    return;
                }
            }
        }
    }
    rec(g, k, edges, &mut assign, &mut used, &mut found, all);
    found
}

/// Lexicographically first injective map (in role order a, b, c, ...) whose
/// induced image is exactly the configuration's edge set, or None.
pub fn find_induced(g: &ZdGraph, config: ForbiddenConfig) -> Option<Vec<usize>> {
    induced_backtrack(g, config, false).into_iter().next()
}

/// All injective maps realizing the configuration as an induced subgraph.
pub fn find_induced_all(g: &ZdGraph, config: ForbiddenConfig) -> Vec<Vec<usize>> {
    induced_backtrack(g, config, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{direct_product, modular_ring, t2};
    use crate::zdg::graph;

    #[test]
    fn classify_two_star_from_z2_x_z4() {
        let g = graph(&direct_product(&modular_ring(2), &modular_ring(4)));
        let s = classify(&g).unwrap();
        assert_eq!(s.tag, ShapeTag::TwoStar(2, 1));
    }

    #[test]
    fn classify_z16_delta() {
        let g = graph(&modular_ring(16));
        let s = classify(&g).unwrap();
        assert_eq!(
            s.tag,
            ShapeTag::DeltaK {
                m: 1,
                n: 1,
                r1: 4,
                r2: 0,
                r3: 0
            }
        );
    }

    #[test]
    fn classify_z4_x_t2z2_delta() {
        let p = direct_product(&modular_ring(4), &t2(&modular_ring(2)));
        let s = classify(&graph(&p)).unwrap();
        assert_eq!(
            s.tag,
            ShapeTag::DeltaK {
                m: 3,
                n: 3,
                r1: 2,
                r2: 2,
                r3: 0
            }
        );
    }

    #[test]
    fn stars_classify_as_two_stars() {
        for n in 1..=5 {
            let g = synthesize(&ShapeTag::CompleteBipartite(1, n + 1));
            let s = classify(&g).unwrap();
            assert_eq!(s.tag, ShapeTag::TwoStar(0, n), "K_{{1,{}}}", n + 1);
        }
    }

    #[test]
    fn small_overlaps_resolve_by_priority() {
        assert_eq!(
            classify(&synthesize(&ShapeTag::Cycle(4))).unwrap().tag,
            ShapeTag::CompleteBipartite(2, 2)
        );
        assert_eq!(
            classify(&synthesize(&ShapeTag::Cycle(3))).unwrap().tag,
            ShapeTag::Complete(3)
        );
        assert_eq!(
            classify(&synthesize(&ShapeTag::Path(4))).unwrap().tag,
            ShapeTag::TwoStar(1, 1)
        );
        assert_eq!(
            classify(&synthesize(&ShapeTag::Path(3))).unwrap().tag,
            ShapeTag::TwoStar(0, 1)
        );
        assert_eq!(
            classify(&synthesize(&ShapeTag::Path(2))).unwrap().tag,
            ShapeTag::Complete(2)
        );
        assert_eq!(
            classify(&synthesize(&ShapeTag::Cycle(5))).unwrap().tag,
            ShapeTag::Cycle(5)
        );
    }

    #[test]
    fn canonical_identifies_aliases() {
        assert_eq!(
            ShapeTag::TwoStar(1, 1).canonical(),
            ShapeTag::Path(4).canonical()
        );
        assert_eq!(
            ShapeTag::DeltaK {
                m: 1,
                n: 1,
                r1: 0,
                r2: 0,
                r3: 0
            }
            .canonical(),
            ShapeTag::Complete(3)
        );
        assert_eq!(
            ShapeTag::BarK { m: 3, n: 2, r: 0 }.canonical(),
            ShapeTag::CompleteBipartite(2, 3)
        );
    }

    #[test]
    fn multipartite_recognition() {
        assert_eq!(
            is_complete_multipartite(&synthesize(&ShapeTag::CompleteBipartite(2, 2))),
            Some(vec![2, 2])
        );
        assert_eq!(is_complete_multipartite(&graph(&modular_ring(16))), None);
        assert_eq!(
            is_complete_multipartite(&synthesize(&ShapeTag::Complete(3))),
            Some(vec![1, 1, 1])
        );
    }

    #[test]
    fn regular_recognition() {
        assert_eq!(is_regular(&synthesize(&ShapeTag::Complete(4))), Some(3));
        assert_eq!(
            is_regular(&synthesize(&ShapeTag::CompleteBipartite(2, 2))),
            Some(2)
        );
        assert_eq!(is_regular(&graph(&modular_ring(8))), None);
    }

    #[test]
    fn induced_search_examples() {
        let g44 = graph(&direct_product(&modular_ring(4), &modular_ring(4)));
        assert!(find_induced(&g44, ForbiddenConfig::C43).is_some());
        let g16 = graph(&modular_ring(16));
        assert!(find_induced(&g16, ForbiddenConfig::C44).is_none());
        let p5 = synthesize(&ShapeTag::Path(5));
        let w = find_induced(&p5, ForbiddenConfig::P5).unwrap();
        assert_eq!(w, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn induced_is_exact() {
        // C43 contains a 4-cycle as a subgraph but not induced.
        let c43 = synthesize(&ShapeTag::Complete(4));
        // K4 has 4-cycles but every 4 vertices induce extra chords.
        assert!(find_induced(&c43, ForbiddenConfig::C44).is_none());
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = ZdGraph::from_edges("split", 4, &[(0, 1), (2, 3)]);
        assert_eq!(classify(&g), Err(ShapeError::Disconnected));
    }

    #[test]
    fn round_trip_witnesses() {
        let tags = [
            ShapeTag::Complete(5),
            ShapeTag::CompleteBipartite(2, 3),
            ShapeTag::TwoStar(3, 2),
            ShapeTag::BarK { m: 3, n: 2, r: 2 },
            ShapeTag::DeltaK {
                m: 2,
                n: 2,
                r1: 2,
                r2: 1,
                r3: 0,
            },
            ShapeTag::DeltaK {
                m: 1,
                n: 1,
                r1: 3,
                r2: 2,
                r3: 1,
            },
            ShapeTag::CompleteMultipartite(vec![1, 1, 3]),
            ShapeTag::Cycle(6),
            ShapeTag::Path(5),
        ];
        for tag in tags {
            let g = synthesize(&tag);
            let shape = classify(&g).unwrap();
            let rebuilt = shape.rebuild_edges().unwrap();
            let mut actual: Vec<(ElementId, ElementId)> = g
                .edges()
                .iter()
                .map(|&(i, j)| (g.vertex(i.min(j)), g.vertex(i.max(j))))
                .collect();
            actual.sort();
            assert_eq!(rebuilt, actual, "round trip for {tag}");
        }
    }

    #[test]
    fn trees_classify_as_two_stars_iff_diameter_at_most_3() {
        // All labeled trees on up to 8 vertices via Prüfer sequences.
        for n in 2..=8usize {
            let seq_len = n.saturating_sub(2);
            let total = n.pow(seq_len as u32);
            for code in 0..total {
                let mut seq = Vec::with_capacity(seq_len);
                let mut c = code;
                for _ in 0..seq_len {
                    seq.push(c % n);
                    c /= n;
                }
                let edges = prufer_decode(n, &seq);
                let g = ZdGraph::from_edges("tree", n, &edges);
                let shape = classify(&g).unwrap().tag;
                let is_two_star = matches!(shape, ShapeTag::TwoStar(_, _) | ShapeTag::Complete(2));
                let diam_ok = match zdg::diameter(&g) {
                    zdg::Diameter::Finite(d) => d <= 3,
                    _ => false,
                };
                assert_eq!(is_two_star, diam_ok, "n={n} seq={seq:?} got {shape}");
            }
        }
    }

    fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
        if n == 2 {
            return vec![(0, 1)];
        }
        let mut degree = vec![1usize; n];
        for &s in seq {
            degree[s] += 1;
        }
        let mut edges = Vec::new();
        let mut seq = seq.to_vec();
        loop {
            let leaf = (0..n).find(|&i| degree[i] == 1).unwrap();
            if seq.is_empty() {
                break;
            }
            let s = seq.remove(0);
            edges.push((leaf.min(s), leaf.max(s)));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&i| degree[i] == 1).collect();
        edges.push((rest[0], rest[1]));
        edges
    }
}
