#![allow(dead_code)]

//! Test-only oracles, independent of the implementation paths they check:
//! a brute-force family classifier driven by graph isomorphism against
//! synthesized reference graphs, and an exhaustive-bijection isomorphism
//! decider for algebras.

use zdg_core::shapes::{synthesize, ShapeTag};
use zdg_core::zdg::ZdGraph;
use zdg_core::{ElementId, FiniteSemiring};

/// Plain backtracking graph isomorphism with degree pruning. Adequate for
/// the corpus sizes (<= 12 vertices).
pub fn graphs_isomorphic(a: &ZdGraph, b: &ZdGraph) -> bool {
    let n = a.n();
    if b.n() != n || a.edge_count() != b.edge_count() {
        return false;
    }
    let deg_a: Vec<usize> = (0..n).map(|i| a.degree(i)).collect();
    let deg_b: Vec<usize> = (0..n).map(|i| b.degree(i)).collect();
    {
        let mut da = deg_a.clone();
        let mut db = deg_b.clone();
        da.sort();
        db.sort();
        if da != db {
            return false;
        }
    }
    // Assign a-vertices in descending degree order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(deg_a[i]));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        a: &ZdGraph,
        b: &ZdGraph,
        order: &[usize],
        pos: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        deg_a: &[usize],
        deg_b: &[usize],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let u = order[pos];
        for v in 0..b.n() {
            if used[v] || deg_a[u] != deg_b[v] {
                continue;
            }
            let consistent = order[..pos]
                .iter()
                .all(|&w| a.adjacent(u, w) == b.adjacent(v, image[w]));
            if consistent {
                image[u] = v;
                used[v] = true;
                if rec(a, b, order, pos + 1, image, used, deg_a, deg_b) {
                    return true;
                }
                image[u] = usize::MAX;
                used[v] = false;
            }
        }
        false
    }
    rec(a, b, &order, 0, &mut image, &mut used, &deg_a, &deg_b)
}

/// Candidate family descriptions for an n-vertex graph, in the fixed
/// classification priority, with only canonical parameter vectors.
fn candidate_tags(n: usize) -> Vec<ShapeTag> {
    let mut out = Vec::new();
    if n == 0 {
        return vec![ShapeTag::Empty];
    }
    out.push(ShapeTag::Complete(n));
    for m in 2..=n / 2 {
        out.push(ShapeTag::CompleteBipartite(m, n - m));
    }
    if n >= 5 {
        out.push(ShapeTag::Cycle(n));
        out.push(ShapeTag::Path(n));
    }
    // Two-stars on n = 2 + m + k vertices: stars as (0, k), otherwise
    // larger leaf count first.
    if n >= 3 {
        let leaves = n - 2;
        out.push(ShapeTag::TwoStar(0, leaves));
        for k in 1..=leaves / 2 {
            out.push(ShapeTag::TwoStar(leaves - k, k));
        }
    }
    // Pendant bipartite: m + nn + r = n with m, nn >= 2, r >= 1.
    for m in 2..n {
        for nn in 2..n {
            if m + nn < n {
                out.push(ShapeTag::BarK {
                    m,
                    n: nn,
                    r: n - m - nn,
                });
            }
        }
    }
    // Apex family, triangle core: descending pendant triples.
    if n >= 4 {
        let total = n - 3;
        for r1 in 0..=total {
            for r2 in 0..=(total - r1).min(r1) {
                let r3 = total - r1 - r2;
                if r3 <= r2 {
                    out.push(ShapeTag::DeltaK {
                        m: 1,
                        n: 1,
                        r1,
                        r2,
                        r3,
                    });
                }
            }
        }
    }
    // Apex family, general core: m, nn >= 2, keep only the lex-greater
    // orientation of each (m, nn, r1, r2) pair.
    for m in 2..n {
        for nn in 2..n {
            if m + nn + 1 > n {
                continue;
            }
            let rest = n - m - nn - 1;
            for r1 in 0..=rest {
                for r2 in 0..=(rest - r1) {
                    let r3 = rest - r1 - r2;
                    let tuple = (m, nn, r1, r2, r3);
                    let swapped = (nn, m, r2, r1, r3);
                    if tuple >= swapped {
                        out.push(ShapeTag::DeltaK {
                            m,
                            n: nn,
                            r1,
                            r2,
                            r3,
                        });
                    }
                }
            }
        }
    }
    // Complete multipartite with at least three parts, sizes ascending.
    for parts in partitions_with_min_parts(n, 3) {
        out.push(ShapeTag::CompleteMultipartite(parts));
    }
    out
}

fn partitions_with_min_parts(n: usize, min_parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in 1..=remaining.min(max) {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out.retain(|p| p.len() >= min_parts);
    // Ascending sizes to match the classifier's canonical order.
    for p in &mut out {
        p.reverse();
    }
    out
}

/// Brute-force classification: the first candidate family description (in
/// priority order) whose synthesized reference graph is isomorphic to `g`.
pub fn classify_oracle(g: &ZdGraph) -> ShapeTag {
    for tag in candidate_tags(g.n()) {
        let reference = synthesize(&tag);
        if graphs_isomorphic(g, &reference) {
            return tag;
        }
    }
    ShapeTag::Other
}

/// Exhaustive isomorphism decision: try every bijection fixing the two
/// identities. Only sensible for very small orders.
pub fn exhaustive_iso(a: &FiniteSemiring, b: &FiniteSemiring) -> bool {
    let n = a.order();
    if b.order() != n {
        return false;
    }
    let others: Vec<usize> = (0..n)
        .filter(|&i| i != a.zero().idx() && i != a.one().idx())
        .collect();
    let targets: Vec<usize> = (0..n)
        .filter(|&i| i != b.zero().idx() && i != b.one().idx())
        .collect();
    let mut mapping = vec![usize::MAX; n];
    mapping[a.zero().idx()] = b.zero().idx();
    mapping[a.one().idx()] = b.one().idx();
    permutations(&targets, &mut |perm| {
        let mut map = mapping.clone();
        for (&src, &dst) in others.iter().zip(perm) {
            map[src] = dst;
        }
        is_homomorphic(a, b, &map)
    })
}

fn is_homomorphic(a: &FiniteSemiring, b: &FiniteSemiring, map: &[usize]) -> bool {
    for x in a.elements() {
        for y in a.elements() {
            let fx = ElementId(map[x.idx()]);
            let fy = ElementId(map[y.idx()]);
            if ElementId(map[a.add(x, y).idx()]) != b.add(fx, fy) {
                return false;
            }
            if ElementId(map[a.mul(x, y).idx()]) != b.mul(fx, fy) {
                return false;
            }
        }
    }
    true
}

/// Visit every permutation; stop early when the visitor returns true.
fn permutations(items: &[usize], visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
    let mut items = items.to_vec();
    fn rec(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if k == items.len() {
            return visit(items);
        }
        for i in k..items.len() {
            items.swap(k, i);
            if rec(items, k + 1, visit) {
                return true;
            }
            items.swap(k, i);
        }
        false
    }
    rec(&mut items, 0, visit)
}
