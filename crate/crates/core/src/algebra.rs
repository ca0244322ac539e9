//! Validated table representation of finite semirings and rings.
//!
//! A semiring here is a set with a commutative addition monoid (identity 0),
//! a multiplication monoid (identity 1), both distributive laws, and 0
//! annihilating everything. Rings are exactly the semirings in which every
//! element has an additive inverse.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

/// Index of an element within its owning algebra's tables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementId(pub usize);

impl ElementId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0
    }
}

impl fmt::Debug for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Raw operation tables, also the JSON wire format for algebra files.
///
/// Tables are row-major: `add[i][j]` is `i + j`. Canonical files keep the
/// additive identity at index 0 and the multiplicative identity at index 1,
/// which is what every builder in this crate produces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiringTables {
    pub name: String,
    pub order: usize,
    pub zero: usize,
    pub one: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default)]
    pub labels: Vec<String>,
}

impl SemiringTables {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tables serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, AlgebraError> {
        serde_json::from_str(s).map_err(|e| AlgebraError::MalformedTable(e.to_string()))
    }
}

/// Axiom classes reported by [`validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axiom {
    AddCommutative,
    AddAssociative,
    AddIdentity,
    MulAssociative,
    MulIdentity,
    LeftDistributive,
    RightDistributive,
    ZeroAnnihilates,
    ZeroOneDistinct,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::AddCommutative => "add-commutative",
            Axiom::AddAssociative => "add-associative",
            Axiom::AddIdentity => "add-identity",
            Axiom::MulAssociative => "mul-associative",
            Axiom::MulIdentity => "mul-identity",
            Axiom::LeftDistributive => "left-distributive",
            Axiom::RightDistributive => "right-distributive",
            Axiom::ZeroAnnihilates => "zero-annihilates",
            Axiom::ZeroOneDistinct => "zero-one-distinct",
        };
        f.write_str(s)
    }
}

/// A failed axiom with a concrete witness triple. Axioms over fewer than
/// three elements repeat entries to fill the triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: [ElementId; 3],
}

/// Outcome of running every semiring axiom over a table candidate.
///
/// At most one violation per axiom class is recorded (the first in scan
/// order). The degenerate one-element algebra (0 = 1) passes but is flagged
/// with `trivial_warning`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
    pub trivial_warning: bool,
}

#[derive(Debug, Clone, Error)]
pub enum AlgebraError {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("axioms violated: {}", describe_violations(.0))]
    AxiomsViolated(AxiomReport),
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
}

fn describe_violations(report: &AxiomReport) -> String {
    report
        .violations
        .iter()
        .map(|v| {
            format!(
                "{}@({},{},{})",
                v.axiom, v.witness[0], v.witness[1], v.witness[2]
            )
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// Structural sanity of the raw tables: squareness and range of entries.
fn check_shape(t: &SemiringTables) -> Result<(), AlgebraError> {
    let n = t.order;
    if n == 0 {
        return Err(AlgebraError::MalformedTable(
            "order must be positive".into(),
        ));
    }
    if t.zero >= n || t.one >= n {
        return Err(AlgebraError::MalformedTable(format!(
            "zero ({}) or one ({}) out of range for order {}",
            t.zero, t.one, n
        )));
    }
    for (what, table) in [("add", &t.add), ("mul", &t.mul)] {
        if table.len() != n {
            return Err(AlgebraError::MalformedTable(format!(
                "{what} table has {} rows, expected {n}",
                table.len()
            )));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::MalformedTable(format!(
                    "{what} row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(AlgebraError::MalformedTable(format!(
                        "{what}[{i}][{j}] = {v} out of range for order {n}"
                    )));
                }
            }
        }
    }
    if !t.labels.is_empty() && t.labels.len() != n {
        return Err(AlgebraError::MalformedTable(format!(
            "{} labels for order {n}",
            t.labels.len()
        )));
    }
    Ok(())
}

/// Run every semiring axiom over the candidate tables.
///
/// All n³ triples are checked for associativity and distributivity; the
/// first violation per axiom class is reported with its witness.
pub fn validate(t: &SemiringTables) -> Result<AxiomReport, AlgebraError> {
    check_shape(t)?;
    let n = t.order;
    let add = |a: usize, b: usize| t.add[a][b];
    let mul = |a: usize, b: usize| t.mul[a][b];
    let zero = t.zero;
    let one = t.one;
    let mut violations: Vec<Violation> = Vec::new();
    let mut record = |axiom: Axiom, w: [usize; 3]| {
        violations.push(Violation {
            axiom,
            witness: [ElementId(w[0]), ElementId(w[1]), ElementId(w[2])],
        });
    };

    'comm: for a in 0..n {
        for b in 0..n {
            if add(a, b) != add(b, a) {
                record(Axiom::AddCommutative, [a, b, b]);
                break 'comm;
            }
        }
    }
    'aassoc: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if add(add(a, b), c) != add(a, add(b, c)) {
                    record(Axiom::AddAssociative, [a, b, c]);
                    break 'aassoc;
                }
            }
        }
    }
    for a in 0..n {
        if add(zero, a) != a || add(a, zero) != a {
            record(Axiom::AddIdentity, [a, a, a]);
            break;
        }
    }
    'massoc: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    record(Axiom::MulAssociative, [a, b, c]);
                    break 'massoc;
                }
            }
        }
    }
    for a in 0..n {
        if mul(one, a) != a || mul(a, one) != a {
            record(Axiom::MulIdentity, [a, a, a]);
            break;
        }
    }
    'ldist: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)) {
                    record(Axiom::LeftDistributive, [a, b, c]);
                    break 'ldist;
                }
            }
        }
    }
    'rdist: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(add(a, b), c) != add(mul(a, c), mul(b, c)) {
                    record(Axiom::RightDistributive, [a, b, c]);
                    break 'rdist;
                }
            }
        }
    }
    for a in 0..n {
        if mul(zero, a) != zero || mul(a, zero) != zero {
            record(Axiom::ZeroAnnihilates, [a, a, a]);
            break;
        }
    }
    if n >= 2 && zero == one {
        record(Axiom::ZeroOneDistinct, [zero, one, zero]);
    }

    Ok(AxiomReport {
        passed: violations.is_empty(),
        violations,
        trivial_warning: n == 1,
    })
}

/// An order-n algebra given by addition and multiplication tables with
/// designated 0 and 1. Immutable after validation; every operation on it is
/// a pure table lookup, so values are safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemiring {
    name: String,
    order: usize,
    zero: ElementId,
    one: ElementId,
    add: Vec<ElementId>,
    mul: Vec<ElementId>,
    labels: Vec<String>,
}

impl FiniteSemiring {
    /// Validate raw tables and wrap them. Fails with the offending axiom
    /// report if any semiring law does not hold.
    pub fn new(t: SemiringTables) -> Result<Self, AlgebraError> {
        let report = validate(&t)?;
        if !report.passed {
            return Err(AlgebraError::AxiomsViolated(report));
        }
        Ok(Self::from_checked(t))
    }

    /// Wrap tables that are already known to satisfy the axioms.
    pub(crate) fn from_checked(t: SemiringTables) -> Self {
        let n = t.order;
        let labels = if t.labels.is_empty() {
            (0..n).map(|i| i.to_string()).collect()
        } else {
            t.labels
        };
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                add.push(ElementId(t.add[i][j]));
                mul.push(ElementId(t.mul[i][j]));
            }
        }
        FiniteSemiring {
            name: t.name,
            order: n,
            zero: ElementId(t.zero),
            one: ElementId(t.one),
            add,
            mul,
            labels,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> ElementId {
        self.zero
    }

    pub fn one(&self) -> ElementId {
        self.one
    }

    #[inline]
    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add[a.0 * self.order + b.0]
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul[a.0 * self.order + b.0]
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.order).map(ElementId)
    }

    pub fn label(&self, a: ElementId) -> &str {
        &self.labels[a.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// x^k for k >= 1 by repeated table lookup.
    pub fn pow(&self, x: ElementId, k: usize) -> ElementId {
        assert!(k >= 1, "pow exponent must be positive");
        let mut acc = x;
        for _ in 1..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Export back to the raw/wire representation.
    pub fn tables(&self) -> SemiringTables {
        let n = self.order;
        let grid = |t: &[ElementId]| {
            (0..n)
                .map(|i| (0..n).map(|j| t[i * n + j].0).collect())
                .collect()
        };
        SemiringTables {
            name: self.name.clone(),
            order: n,
            zero: self.zero.0,
            one: self.one.0,
            add: grid(&self.add),
            mul: grid(&self.mul),
            labels: self.labels.clone(),
        }
    }

    /// True iff the multiplication table is symmetric.
    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.mul[i * n + j] != self.mul[j * n + i] {
                    return false;
                }
            }
        }
        true
    }

    /// True iff no pair of nonzero elements multiplies to zero
    /// (in either order).
    pub fn is_entire(&self) -> bool {
        for a in self.elements() {
            if a == self.zero {
                continue;
            }
            for b in self.elements() {
                if b == self.zero {
                    continue;
                }
                if self.mul(a, b) == self.zero {
                    return false;
                }
            }
        }
        true
    }

    /// True iff a + c = b + c forces a = b, i.e. addition by any fixed
    /// element is injective.
    pub fn is_additively_cancellative(&self) -> bool {
        for c in self.elements() {
            let mut seen = vec![false; self.order];
            for a in self.elements() {
                let s = self.add(a, c);
                if seen[s.0] {
                    return false;
                }
                seen[s.0] = true;
            }
        }
        true
    }

    /// True iff every element has an additive inverse.
    pub fn is_ring(&self) -> bool {
        for a in self.elements() {
            if !self.elements().any(|b| self.add(a, b) == self.zero) {
                return false;
            }
        }
        true
    }

    /// Smallest k >= 1 with x^k = 0, or `None` when x is not nilpotent.
    /// The index of 0 itself is 1.
    pub fn nilpotent_index(&self, x: ElementId) -> Option<usize> {
        let mut acc = x;
        for k in 1..=self.order {
            if acc == self.zero {
                return Some(k);
            }
            acc = self.mul(acc, x);
        }
        None
    }

    /// Subset closed under both operations containing `seed`, as a sorted
    /// element list.
    pub fn subalgebra_closure(&self, seed: &[ElementId]) -> Vec<ElementId> {
        let mut in_set = vec![false; self.order];
        let mut members: Vec<ElementId> = Vec::new();
        for &s in seed {
            if !in_set[s.0] {
                in_set[s.0] = true;
                members.push(s);
            }
        }
        let mut frontier = 0;
        while frontier < members.len() {
            let x = members[frontier];
            frontier += 1;
            for i in 0..frontier {
                let y = members[i];
                for z in [
                    self.add(x, y),
                    self.add(y, x),
                    self.mul(x, y),
                    self.mul(y, x),
                ] {
                    if !in_set[z.0] {
                        in_set[z.0] = true;
                        members.push(z);
                    }
                }
            }
            // x with itself
            for z in [self.add(x, x), self.mul(x, x)] {
                if !in_set[z.0] {
                    in_set[z.0] = true;
                    members.push(z);
                }
            }
        }
        members.sort();
        members
    }

    /// Greedy generating set: starting from the constants, repeatedly adjoin
    /// the element whose addition grows the generated subalgebra the most
    /// (ties broken by smallest index).
    pub fn generating_set(&self) -> Vec<ElementId> {
        let mut gens: Vec<ElementId> = Vec::new();
        let mut sub = self.subalgebra_closure(&[self.zero, self.one]);
        while sub.len() < self.order {
            let mut best: Option<(usize, ElementId)> = None;
            for x in self.elements() {
                if sub.binary_search(&x).is_ok() {
                    continue;
                }
                let mut seed = sub.clone();
                seed.push(x);
                let grown = self.subalgebra_closure(&seed).len();
                if best.is_none_or(|(sz, _)| grown > sz) {
                    best = Some((grown, x));
                }
            }
            let (_, x) = best.expect("proper subalgebra has an outside element");
            gens.push(x);
            let mut seed = sub;
            seed.push(x);
            sub = self.subalgebra_closure(&seed);
        }
        gens
    }
}

/// A bijection between two algebras preserving both operations and the
/// constants: `mapping[a]` is the image of element `a` of the left algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub mapping: Vec<ElementId>,
}

impl IsoWitness {
    /// Check that the mapping really is an isomorphism from `a` to `b`.
    pub fn verify(&self, a: &FiniteSemiring, b: &FiniteSemiring) -> bool {
        let n = a.order();
        if b.order() != n || self.mapping.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &m in &self.mapping {
            if m.0 >= n || seen[m.0] {
                return false;
            }
            seen[m.0] = true;
        }
        if self.mapping[a.zero().0] != b.zero() || self.mapping[a.one().0] != b.one() {
            return false;
        }
        for x in a.elements() {
            for y in a.elements() {
                if self.mapping[a.add(x, y).0] != b.add(self.mapping[x.0], self.mapping[y.0]) {
                    return false;
                }
                if self.mapping[a.mul(x, y).0] != b.mul(self.mapping[x.0], self.mapping[y.0]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Isomorphism invariants of a single element, used to prune candidate
/// images during backtracking.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Profile {
    add_orbit: (usize, usize),
    mul_orbit: (usize, usize),
    nilpotent: Option<usize>,
    add_idempotent: bool,
    mul_idempotent: bool,
    right_annihilates: usize,
    left_annihilates: usize,
    add_absorbs: usize,
}

fn orbit_shape(n: usize, start: usize, step: impl Fn(usize) -> usize) -> (usize, usize) {
    // (tail length, cycle length) of start, f(start), f²(start), ...
    let mut seen: Vec<Option<usize>> = vec![None; n];
    let mut cur = start;
    let mut pos = 0usize;
    loop {
        if let Some(first) = seen[cur] {
            return (first, pos - first);
        }
        seen[cur] = Some(pos);
        cur = step(cur);
        pos += 1;
    }
}

fn profile(s: &FiniteSemiring, x: ElementId) -> Profile {
    let n = s.order();
    let zero = s.zero();
    let add_orbit = orbit_shape(n, x.0, |c| s.add(ElementId(c), x).0);
    let mul_orbit = orbit_shape(n, x.0, |c| s.mul(ElementId(c), x).0);
    let mut right = 0;
    let mut left = 0;
    let mut absorbs = 0;
    for y in s.elements() {
        if s.mul(x, y) == zero {
            right += 1;
        }
        if s.mul(y, x) == zero {
            left += 1;
        }
        if s.add(x, y) == x {
            absorbs += 1;
        }
    }
    Profile {
        add_orbit,
        mul_orbit,
        nilpotent: s.nilpotent_index(x),
        add_idempotent: s.add(x, x) == x,
        mul_idempotent: s.mul(x, x) == x,
        right_annihilates: right,
        left_annihilates: left,
        add_absorbs: absorbs,
    }
}

struct IsoSearch<'a> {
    a: &'a FiniteSemiring,
    b: &'a FiniteSemiring,
    profiles_a: Vec<Profile>,
    profiles_b: Vec<Profile>,
    gens: Vec<ElementId>,
}

#[derive(Clone)]
struct PartialMap {
    image: Vec<Option<ElementId>>,
    used: Vec<bool>,
    domain: Vec<ElementId>,
}

impl<'a> IsoSearch<'a> {
    /// Extend the map with g -> h, then saturate: for every pair of mapped
    /// elements the images of their sum and product are forced. Returns
    /// false on any conflict with homomorphy or injectivity.
    fn assign(&self, m: &mut PartialMap, g: ElementId, h: ElementId) -> bool {
        if let Some(existing) = m.image[g.0] {
            return existing == h;
        }
        if m.used[h.0] || self.profiles_a[g.0] != self.profiles_b[h.0] {
            return false;
        }
        m.image[g.0] = Some(h);
        m.used[h.0] = true;
        m.domain.push(g);
        let mut frontier = m.domain.len() - 1;
        while frontier < m.domain.len() {
            let x = m.domain[frontier];
            frontier += 1;
            let fx = m.image[x.0].unwrap();
            for i in 0..m.domain.len() {
                let y = m.domain[i];
                let fy = m.image[y.0].unwrap();
                let pairs = [
                    (self.a.add(x, y), self.b.add(fx, fy)),
                    (self.a.add(y, x), self.b.add(fy, fx)),
                    (self.a.mul(x, y), self.b.mul(fx, fy)),
                    (self.a.mul(y, x), self.b.mul(fy, fx)),
                ];
                for (z, fz) in pairs {
                    match m.image[z.0] {
                        Some(existing) => {
                            if existing != fz {
                                return false;
                            }
                        }
                        None => {
                            if m.used[fz.0] || self.profiles_a[z.0] != self.profiles_b[fz.0] {
                                return false;
                            }
                            m.image[z.0] = Some(fz);
                            m.used[fz.0] = true;
                            m.domain.push(z);
                        }
                    }
                }
            }
        }
        true
    }

    fn search(&self, m: &PartialMap, next_gen: usize) -> Option<Vec<ElementId>> {
        if m.domain.len() == self.a.order() {
            return Some(m.image.iter().map(|o| o.unwrap()).collect());
        }
        // The greedy generators cover the whole algebra, so some generator
        // must still be unmapped here.
        let g = self.gens[next_gen..]
            .iter()
            .copied()
            .find(|g| m.image[g.0].is_none());
        let g = g?;
        for h in self.b.elements() {
            if m.used[h.0] {
                continue;
            }
            let mut child = m.clone();
            if self.assign(&mut child, g, h) {
                if let Some(found) = self.search(&child, next_gen + 1) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// Brute-force isomorphism search between two small algebras: backtracking
/// over the images of a greedy generating set with invariant pruning.
/// Deterministic — the first witness in the canonical search order is
/// returned. Intended for orders up to a few dozen.
pub fn find_isomorphism(
    a: &FiniteSemiring,
    b: &FiniteSemiring,
) -> Result<Option<IsoWitness>, AlgebraError> {
    if a.order() != b.order() {
        return Err(AlgebraError::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    let n = a.order();
    let profiles_a: Vec<Profile> = a.elements().map(|x| profile(a, x)).collect();
    let profiles_b: Vec<Profile> = b.elements().map(|x| profile(b, x)).collect();
    {
        // Cheap global invariant: the multiset of profiles must match.
        let mut count: HashMap<&Profile, isize> = HashMap::new();
        for p in &profiles_a {
            *count.entry(p).or_insert(0) += 1;
        }
        for p in &profiles_b {
            *count.entry(p).or_insert(0) -= 1;
        }
        if count.values().any(|&c| c != 0) {
            return Ok(None);
        }
    }
    let search = IsoSearch {
        a,
        b,
        profiles_a,
        profiles_b,
        gens: a.generating_set(),
    };
    let mut m = PartialMap {
        image: vec![None; n],
        used: vec![false; n],
        domain: Vec::new(),
    };
    if !search.assign(&mut m, a.zero(), b.zero()) || !search.assign(&mut m, a.one(), b.one()) {
        return Ok(None);
    }
    Ok(search.search(&m, 0).map(|mapping| IsoWitness { mapping }))
}
