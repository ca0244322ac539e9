//! Isomorph-free exhaustive generation of finite commutative semirings with
//! identity of small order.
//!
//! Strategy: enumerate commutative additive monoids with identity at index 0
//! up to relabeling of elements 2..n-1 (indices 0 and 1 stay pinned, since a
//! semiring isomorphism must fix both identities), then backtrack over
//! multiplication tables with identity at index 1, pruning with partial
//! associativity/distributivity checks. Isomorph rejection is a post-hoc
//! canonical-form dedup within each additive-monoid class.

use crate::algebra::{ElementId, FiniteSemiring, SemiringTables};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Hard limit on census order.
pub const MAX_ENUM_ORDER: usize = 5;
/// Noncommutative search is only supported at tiny orders.
pub const MAX_NONCOMMUTATIVE_ORDER: usize = 3;

/// Corpus selection for the census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumFilter {
    /// Require a symmetric multiplication table.
    pub commutative: bool,
    pub require_cancellative: Option<bool>,
    pub require_entire: Option<bool>,
    pub max_order: usize,
}

impl Default for EnumFilter {
    fn default() -> Self {
        EnumFilter {
            commutative: true,
            require_cancellative: None,
            require_entire: None,
            max_order: 4,
        }
    }
}

/// Minimal serialized (add, mul) table pair over all relabelings fixing
/// zero at 0 and one at 1. Equal byte strings iff isomorphic algebras.
/// Cost is (n-2)! table rewrites; intended for small orders.
pub fn canonical_form(s: &FiniteSemiring) -> Vec<u8> {
    let n = s.order();
    let mut others: Vec<usize> = (0..n)
        .filter(|&i| i != s.zero().idx() && i != s.one().idx())
        .collect();
    let mut best: Option<Vec<u8>> = None;
    let mut consider = |others: &[usize]| {
        // new index -> old index
        let mut old_of_new = Vec::with_capacity(n);
        old_of_new.push(s.zero().idx());
        if n >= 2 {
            old_of_new.push(s.one().idx());
        }
        old_of_new.extend_from_slice(others);
        let mut new_of_old = vec![0usize; n];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = new;
        }
        let mut bytes = Vec::with_capacity(2 * n * n);
        for table in [0, 1] {
            for i in 0..n {
                for j in 0..n {
                    let (a, b) = (ElementId(old_of_new[i]), ElementId(old_of_new[j]));
                    let v = if table == 0 { s.add(a, b) } else { s.mul(a, b) };
                    bytes.push(new_of_old[v.idx()] as u8);
                }
            }
        }
        if best.as_ref().is_none_or(|b| bytes < *b) {
            best = Some(bytes);
        }
    };
    permute_all(&mut others, &mut consider);
    best.expect("at least the identity relabeling")
}

fn permute_all(items: &mut [usize], consider: &mut impl FnMut(&[usize])) {
    let n = items.len();
    if n <= 1 {
        consider(items);
        return;
    }
    // Heap's algorithm.
    let mut c = vec![0usize; n];
    consider(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            consider(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Every validated semiring of each order 2..=max matching the filter,
/// exactly one representative per isomorphism class, in canonical-form
/// ascending order per order.
pub fn enumerate_semirings(filter: &EnumFilter) -> impl Iterator<Item = FiniteSemiring> {
    assert!(
        filter.max_order <= MAX_ENUM_ORDER,
        "census is limited to order {MAX_ENUM_ORDER}"
    );
    if !filter.commutative {
        assert!(
            filter.max_order <= MAX_NONCOMMUTATIVE_ORDER,
            "noncommutative census is limited to order {MAX_NONCOMMUTATIVE_ORDER}"
        );
    }
    let filter = filter.clone();
    (2..=filter.max_order)
        .collect::<Vec<_>>()
        .into_iter()
        .flat_map(move |n| census_of_order(n, &filter))
}

fn census_of_order(n: usize, filter: &EnumFilter) -> Vec<FiniteSemiring> {
    let monoids = additive_monoids(n);
    let per_class: Vec<Vec<(Vec<usize>, Vec<usize>)>> = monoids
        .par_iter()
        .map(|add| multiplications(n, add, filter.commutative))
        .collect();

    let mut dedup: BTreeMap<Vec<u8>, FiniteSemiring> = BTreeMap::new();
    for tables in per_class {
        for (add, mul) in &tables {
            let s = FiniteSemiring::from_checked(SemiringTables {
                name: String::new(),
                order: n,
                zero: 0,
                one: 1,
                add: unflatten(n, add),
                mul: unflatten(n, mul),
                labels: labels_for(n),
            });
            if let Some(want) = filter.require_cancellative {
                if s.is_additively_cancellative() != want {
                    continue;
                }
            }
            if let Some(want) = filter.require_entire {
                if s.is_entire() != want {
                    continue;
                }
            }
            dedup.entry(canonical_form(&s)).or_insert(s);
        }
    }
    dedup
        .into_values()
        .enumerate()
        .map(|(i, mut s)| {
            s.set_name(format!("census-o{n}-{i:03}"));
            s
        })
        .collect()
}

fn labels_for(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            1 => "1".to_string(),
            _ => format!("e{i}"),
        })
        .collect()
}

fn unflatten(n: usize, flat: &[usize]) -> Vec<Vec<usize>> {
    (0..n).map(|i| flat[i * n..(i + 1) * n].to_vec()).collect()
}

/// All commutative monoid tables on {0..n-1} with identity 0, up to
/// relabelings of elements 2..n-1 (lexicographic symmetry breaking).
fn additive_monoids(n: usize) -> Vec<Vec<usize>> {
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for i in 1..n {
        for j in i..n {
            cells.push((i, j));
        }
    }
    let mut table = vec![usize::MAX; n * n];
    for j in 0..n {
        table[j] = j; // 0 + j
        table[j * n] = j; // j + 0
    }
    let mut out = Vec::new();
    fill_monoid(n, &cells, 0, &mut table, &mut out);
    out
}

fn fill_monoid(
    n: usize,
    cells: &[(usize, usize)],
    pos: usize,
    table: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if pos == cells.len() {
        if assoc_holds(n, table) && is_minimal_under_relabeling(n, table) {
            out.push(table.clone());
        }
        return;
    }
    let (i, j) = cells[pos];
    for v in 0..n {
        table[i * n + j] = v;
        table[j * n + i] = v;
        if partial_assoc_ok(n, table, i, j) {
            fill_monoid(n, cells, pos + 1, table, out);
        }
    }
    table[i * n + j] = usize::MAX;
    table[j * n + i] = usize::MAX;
}

/// Associativity restricted to triples touching the just-assigned pair,
/// skipping any lookup that is still undefined.
fn partial_assoc_ok(n: usize, t: &[usize], i: usize, j: usize) -> bool {
    let get = |a: usize, b: usize| -> Option<usize> {
        let v = t[a * n + b];
        (v != usize::MAX).then_some(v)
    };
    let check = |a: usize, b: usize, c: usize| -> bool {
        let left = get(a, b).and_then(|ab| get(ab, c));
        let right = get(b, c).and_then(|bc| get(a, bc));
        match (left, right) {
            (Some(l), Some(r)) => l == r,
            _ => true,
        }
    };
    for x in 0..n {
        for (a, b) in [(i, j), (j, i)] {
            if !check(a, b, x) || !check(x, a, b) || !check(a, x, b) {
                return false;
            }
        }
    }
    true
}

fn assoc_holds(n: usize, t: &[usize]) -> bool {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]] {
                    return false;
                }
            }
        }
    }
    true
}

/// Lexicographic minimality of the table under permutations of {2..n-1}
/// (0 and 1 pinned).
fn is_minimal_under_relabeling(n: usize, t: &[usize]) -> bool {
    if n <= 3 {
        return true;
    }
    let mut others: Vec<usize> = (2..n).collect();
    let original: Vec<usize> = t.to_vec();
    let mut minimal = true;
    let mut consider = |perm: &[usize]| {
        if !minimal {
            return;
        }
        let mut new_of_old = vec![0usize; n];
        new_of_old[0] = 0;
        new_of_old[1] = 1;
        for (k, &old) in perm.iter().enumerate() {
            new_of_old[old] = 2 + k;
        }
        let mut old_of_new = vec![0usize; n];
        for (old, &new) in new_of_old.iter().enumerate() {
            old_of_new[new] = old;
        }
        for i in 0..n {
            for j in 0..n {
                let relabeled = new_of_old[original[old_of_new[i] * n + old_of_new[j]]];
                let orig = original[i * n + j];
                if relabeled != orig {
                    if relabeled < orig {
                        minimal = false;
                    }
                    return;
                }
            }
        }
    };
    permute_all(&mut others, &mut consider);
    minimal
}

/// All multiplication tables completing `add` to a semiring: identity at 1,
/// zero annihilating, symmetric iff `commutative`, associative and
/// distributive.
fn multiplications(n: usize, add: &[usize], commutative: bool) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for i in 2..n {
        for j in 2..n {
            if commutative && j < i {
                continue;
            }
            cells.push((i, j));
        }
    }
    let mut mul = vec![usize::MAX; n * n];
    for j in 0..n {
        mul[j] = 0; // 0 * j
        mul[j * n] = 0; // j * 0
        mul[n + j] = j; // 1 * j
        mul[j * n + 1] = j; // j * 1
    }
    let mut out = Vec::new();
    fill_mult(n, add, &cells, 0, commutative, &mut mul, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn fill_mult(
    n: usize,
    add: &[usize],
    cells: &[(usize, usize)],
    pos: usize,
    commutative: bool,
    mul: &mut Vec<usize>,
    out: &mut Vec<(Vec<usize>, Vec<usize>)>,
) {
    if pos == cells.len() {
        if semiring_laws_hold(n, add, mul) {
            out.push((add.to_vec(), mul.clone()));
        }
        return;
    }
    let (i, j) = cells[pos];
    for v in 0..n {
        mul[i * n + j] = v;
        if commutative {
            mul[j * n + i] = v;
        }
        if partial_mult_ok(n, add, mul, i, j) {
            fill_mult(n, add, cells, pos + 1, commutative, mul, out);
        }
    }
    mul[i * n + j] = usize::MAX;
    if commutative {
        mul[j * n + i] = usize::MAX;
    }
}

/// Associativity and distributivity restricted to triples touching the
/// just-assigned product cell, skipping undefined lookups.
fn partial_mult_ok(n: usize, add: &[usize], mul: &[usize], i: usize, j: usize) -> bool {
    let get = |a: usize, b: usize| -> Option<usize> {
        let v = mul[a * n + b];
        (v != usize::MAX).then_some(v)
    };
    for x in 0..n {
        for (a, b) in [(i, j), (j, i)] {
            // (ab)x = a(bx), (xa)b = x(ab), (ax)b = a(xb)
            let triples = [(a, b, x), (x, a, b), (a, x, b)];
            for (p, q, r) in triples {
                let left = get(p, q).and_then(|pq| get(pq, r));
                let right = get(q, r).and_then(|qr| get(p, qr));
                if let (Some(l), Some(rr)) = (left, right) {
                    if l != rr {
                        return false;
                    }
                }
            }
            // x(a+b) = xa + xb and (a+b)x = ax + bx
            let s = add[a * n + b];
            if let (Some(l), Some(xa), Some(xb)) = (get(x, s), get(x, a), get(x, b)) {
                if l != add[xa * n + xb] {
                    return false;
                }
            }
            if let (Some(l), Some(ax), Some(bx)) = (get(s, x), get(a, x), get(b, x)) {
                if l != add[ax * n + bx] {
                    return false;
                }
            }
        }
    }
    true
}

fn semiring_laws_hold(n: usize, add: &[usize], mul: &[usize]) -> bool {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]] {
                    return false;
                }
                if mul[a * n + add[b * n + c]] != add[mul[a * n + b] * n + mul[a * n + c]] {
                    return false;
                }
                if mul[add[a * n + b] * n + c] != add[mul[a * n + c] * n + mul[b * n + c]] {
                    return false;
                }
            }
        }
    }
    true
}
