//! Executable structural checks: every catalog statement implemented as a
//! (hypothesis guard, conclusion predicate) pair over precomputed per-algebra
//! analysis, reporting pass / fail-with-witness / not-applicable.

use crate::algebra::{find_isomorphism, FiniteSemiring};
use crate::builders::{
    direct_product, galois_field, modular_ring, presented_ring, t2, RingPresentation,
};
use crate::constructions;
use crate::enumerate::{enumerate_semirings, EnumFilter};
use crate::shapes::{
    self, classify, find_induced_all, ForbiddenConfig, GraphShape, ShapeError, ShapeTag,
};
use crate::zdg::{self, Diameter, Girth, ZdGraph};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Identifiers of the checked statements.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TheoremId {
    T3_1,
    P3_2,
    C3_8,
    T3_9,
    E3_4,
    T4_2,
    C4_3_reg,
    L5_1,
    L5_2,
    L5_3,
    T6_1_2,
    T6_4,
    P6_5,
    P7_1,
    C7_2,
    L7_4,
    T7_5,
    C7_6,
    P7_7,
    L8_1,
    P8_2,
    L8_3,
    T8_4,
}

impl TheoremId {
    pub const ALL: [TheoremId; 23] = [
        TheoremId::T3_1,
        TheoremId::P3_2,
        TheoremId::C3_8,
        TheoremId::T3_9,
        TheoremId::E3_4,
        TheoremId::T4_2,
        TheoremId::C4_3_reg,
        TheoremId::L5_1,
        TheoremId::L5_2,
        TheoremId::L5_3,
        TheoremId::T6_1_2,
        TheoremId::T6_4,
        TheoremId::P6_5,
        TheoremId::P7_1,
        TheoremId::C7_2,
        TheoremId::L7_4,
        TheoremId::T7_5,
        TheoremId::C7_6,
        TheoremId::P7_7,
        TheoremId::L8_1,
        TheoremId::P8_2,
        TheoremId::L8_3,
        TheoremId::T8_4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T3_1 => "T3_1",
            TheoremId::P3_2 => "P3_2",
            TheoremId::C3_8 => "C3_8",
            TheoremId::T3_9 => "T3_9",
            TheoremId::E3_4 => "E3_4",
            TheoremId::T4_2 => "T4_2",
            TheoremId::C4_3_reg => "C4_3_reg",
            TheoremId::L5_1 => "L5_1",
            TheoremId::L5_2 => "L5_2",
            TheoremId::L5_3 => "L5_3",
            TheoremId::T6_1_2 => "T6_1_2",
            TheoremId::T6_4 => "T6_4",
            TheoremId::P6_5 => "P6_5",
            TheoremId::P7_1 => "P7_1",
            TheoremId::C7_2 => "C7_2",
            TheoremId::L7_4 => "L7_4",
            TheoremId::T7_5 => "T7_5",
            TheoremId::C7_6 => "C7_6",
            TheoremId::P7_7 => "P7_7",
            TheoremId::L8_1 => "L8_1",
            TheoremId::P8_2 => "P8_2",
            TheoremId::L8_3 => "L8_3",
            TheoremId::T8_4 => "T8_4",
        }
    }

    /// One-line statement of what the check asserts.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::T3_1 => "every zero-divisor graph is connected with diameter <= 3",
            TheoremId::P3_2 => "products of entire semirings have diameter <= 2",
            TheoremId::C3_8 => "no zero-divisor graph is a cycle C_n with n >= 5",
            TheoremId::T3_9 => "cyclic graphs have girth <= 4; acyclic ones are two-stars or K_1",
            TheoremId::E3_4 => "complete K_n (n >= 3) has at most one vertex of nonzero square",
            TheoremId::T4_2 => "complete k-partite graphs have k = 2 or one non-singleton part",
            TheoremId::C4_3_reg => "regular graphs are K_n or balanced complete bipartite",
            TheoremId::L5_1 => "one triangle plus a longer cycle forces an induced C_{4,3}",
            TheoremId::L5_2 => "girth-4 graphs exclude the induced configuration C_4'",
            TheoremId::L5_3 => "at most one triangle excludes C_4'', C_{4,4}, C_{4,5}",
            TheoremId::T6_1_2 => "domain-by-local ring products have pendant bipartite graphs",
            TheoremId::T6_4 => "girth 4 forces a pendant complete bipartite shape",
            TheoremId::P6_5 => "girth 4 forces every nilpotent to have index 2",
            TheoremId::P7_1 => "exactly one triangle forces the apex family shape",
            TheoremId::C7_2 => "a unique cycle that is a triangle forces the K_{1,1} apex family",
            TheoremId::L7_4 => "element identities on each induced C_{4,3} with pendant",
            TheoremId::T7_5 => "one triangle plus a longer cycle pins r3 = 0, r1, r2 >= 1",
            TheoremId::C7_6 => "cancellative case pins pendant counts to n-1, m-1",
            TheoremId::P7_7 => "cancellative with one triangle forces a ring",
            TheoremId::L8_1 => "cancellative one-triangle products decompose over {Z4, T2(Z2)}",
            TheoremId::P8_2 => "one-triangle rings with a 4-cycle split as such products",
            TheoremId::L8_3 => "K_3 rings are one of the four catalog rings",
            TheoremId::T8_4 => "one-triangle rings satisfy exactly one classification clause",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| format!("unknown theorem id '{s}'"))
    }
}

/// A corpus member: the algebra plus, when it was built as a direct
/// product, the two factors (needed by product-hypothesis checks).
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub algebra: FiniteSemiring,
    pub factors: Option<Box<(FiniteSemiring, FiniteSemiring)>>,
}

impl CorpusEntry {
    pub fn plain(algebra: FiniteSemiring) -> Self {
        CorpusEntry {
            algebra,
            factors: None,
        }
    }
}

/// Per-algebra analysis shared by all checks.
pub struct Analyzed {
    pub entry: CorpusEntry,
    pub graph: ZdGraph,
    pub diameter: Diameter,
    pub girth: Girth,
    pub triangles: usize,
    pub connected: bool,
    pub shape: Result<GraphShape, ShapeError>,
    pub commutative: bool,
    pub cancellative: bool,
    pub ring: bool,
    pub entire: bool,
}

impl Analyzed {
    pub fn new(entry: CorpusEntry) -> Self {
        let graph = zdg::graph(&entry.algebra);
        let shape = classify(&graph);
        Analyzed {
            diameter: zdg::diameter(&graph),
            girth: zdg::girth(&graph),
            triangles: zdg::triangle_count(&graph),
            connected: zdg::is_connected(&graph),
            commutative: entry.algebra.is_commutative(),
            cancellative: entry.algebra.is_additively_cancellative(),
            ring: entry.algebra.is_ring(),
            entire: entry.algebra.is_entire(),
            shape,
            graph,
            entry,
        }
    }

    fn shape_tag(&self) -> Option<&ShapeTag> {
        self.shape.as_ref().ok().map(|s| &s.tag)
    }

    /// Given exactly one triangle, a cycle of length >= 4 exists iff the
    /// cycle space has dimension >= 2.
    fn has_long_cycle(&self) -> bool {
        self.graph.cyclomatic() >= 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail { witness: String },
    NotApplicable { reason: String },
}

/// Per-(theorem, algebra) verdict.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub theorem: TheoremId,
    pub algebra: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// True (with no reason) iff the algebra satisfies the theorem's
/// hypothesis side; otherwise the name of the first failing hypothesis.
pub fn applicable(a: &Analyzed, id: TheoremId) -> Result<(), String> {
    let need = |cond: bool, what: &str| -> Result<(), String> {
        if cond {
            Ok(())
        } else {
            Err(what.to_string())
        }
    };
    let commutative = || need(a.commutative, "multiplication is not commutative");
    let one_triangle = || need(a.triangles == 1, "graph does not have exactly one 3-cycle");
    let long_cycle = || need(a.has_long_cycle(), "graph has no cycle of length >= 4");
    let is_ring = || need(a.ring, "not a ring");
    let cancellative = || need(a.cancellative, "not additively cancellative");
    match id {
        TheoremId::T3_1 | TheoremId::C3_8 => Ok(()),
        TheoremId::P3_2 => {
            let (s1, s2) = match &a.entry.factors {
                Some(f) => (&f.0, &f.1),
                None => return Err("not built as a direct product".into()),
            };
            need(s1.is_entire() && s2.is_entire(), "a factor is not entire")?;
            need(a.graph.n() > 0, "zero-divisor graph is empty")
        }
        TheoremId::T3_9 => need(!a.entire, "semiring is entire (empty graph)"),
        TheoremId::E3_4 => {
            commutative()?;
            match a.shape_tag() {
                Some(ShapeTag::Complete(n)) if *n >= 3 => Ok(()),
                _ => Err("graph is not complete on >= 3 vertices".into()),
            }
        }
        TheoremId::T4_2 => {
            commutative()?;
            match shapes::is_complete_multipartite(&a.graph) {
                Some(parts) if parts.len() >= 2 => Ok(()),
                _ => Err("graph is not complete k-partite with k >= 2".into()),
            }
        }
        TheoremId::C4_3_reg => {
            commutative()?;
            need(a.graph.n() > 0, "zero-divisor graph is empty")?;
            need(
                shapes::is_regular(&a.graph).is_some(),
                "graph is not regular",
            )
        }
        TheoremId::L5_1 | TheoremId::L7_4 | TheoremId::T7_5 => {
            commutative()?;
            one_triangle()?;
            long_cycle()
        }
        TheoremId::L5_2 => {
            commutative()?;
            need(a.girth == Girth::Finite(4), "girth is not 4")
        }
        TheoremId::L5_3 => {
            commutative()?;
            need(a.triangles <= 1, "graph has more than one 3-cycle")
        }
        TheoremId::T6_1_2 => match domain_by_local_factors(a) {
            Some(_) => Ok(()),
            None => Err("not a product of an entire ring (order >= 3) with Z4 or T2(Z2)".into()),
        },
        TheoremId::T6_4 | TheoremId::P6_5 => {
            commutative()?;
            need(a.girth == Girth::Finite(4), "girth is not 4")
        }
        TheoremId::P7_1 => {
            commutative()?;
            one_triangle()
        }
        TheoremId::C7_2 => {
            commutative()?;
            one_triangle()?;
            need(
                a.graph.cyclomatic() == 1,
                "the triangle is not the only cycle",
            )
        }
        TheoremId::C7_6 => {
            cancellative()?;
            commutative()?;
            one_triangle()?;
            long_cycle()
        }
        TheoremId::P7_7 => {
            cancellative()?;
            commutative()?;
            one_triangle()
        }
        TheoremId::L8_1 => {
            need(a.entry.factors.is_some(), "not built as a direct product")?;
            cancellative()?;
            commutative()?;
            one_triangle()
        }
        TheoremId::P8_2 => {
            is_ring()?;
            commutative()?;
            one_triangle()?;
            long_cycle()
        }
        TheoremId::L8_3 => {
            is_ring()?;
            commutative()?;
            need(
                matches!(a.shape_tag(), Some(ShapeTag::Complete(3))),
                "graph is not K_3",
            )
        }
        TheoremId::T8_4 => {
            is_ring()?;
            commutative()?;
            one_triangle()
        }
    }
}

/// The (D, B) orientation of a product with D an entire ring of order >= 3
/// and B isomorphic to Z4 or T2(Z2).
fn domain_by_local_factors(a: &Analyzed) -> Option<(FiniteSemiring, FiniteSemiring)> {
    let f = a.entry.factors.as_ref()?;
    for (d, b) in [(&f.0, &f.1), (&f.1, &f.0)] {
        if d.is_entire()
            && d.order() >= 3
            && d.is_ring()
            && d.is_commutative()
            && b.order() == 4
            && (find_isomorphism(b, &modular_ring(4)).unwrap().is_some()
                || find_isomorphism(b, &t2(&modular_ring(2)))
                    .unwrap()
                    .is_some())
        {
            return Some((d.clone(), b.clone()));
        }
    }
    None
}

fn four_products() -> Vec<FiniteSemiring> {
    let z4 = modular_ring(4);
    let t = t2(&modular_ring(2));
    vec![
        direct_product(&z4, &z4),
        direct_product(&z4, &t),
        direct_product(&t, &z4),
        direct_product(&t, &t),
    ]
}

fn k3_catalog() -> Vec<FiniteSemiring> {
    vec![
        t2(&galois_field(4)),
        presented_ring(&RingPresentation::univariate(
            "Z4[x]/(x^2+x+1)",
            4,
            2,
            vec![3, 3],
        ))
        .unwrap(),
        presented_ring(&RingPresentation::bivariate_nil("Z2[x,y]/(x^2,xy,y^2)", 2)).unwrap(),
        presented_ring(
            &RingPresentation::univariate("Z4[x]/(2x,x^2)", 4, 2, vec![])
                .with_scalar_rule(2, (1, 0)),
        )
        .unwrap(),
    ]
}

fn delta_catalog_16() -> Vec<FiniteSemiring> {
    vec![
        modular_ring(16),
        presented_ring(&RingPresentation::univariate("Z2[x]/(x^4)", 2, 4, vec![])).unwrap(),
    ]
}

fn iso_to_any(s: &FiniteSemiring, list: &[FiniteSemiring]) -> bool {
    list.iter()
        .any(|r| s.order() == r.order() && find_isomorphism(s, r).unwrap().is_some())
}

/// Evaluate the conclusion predicate; `Ok(())` means pass, `Err` carries a
/// concrete counterexample description.
fn conclusion(a: &Analyzed, id: TheoremId) -> Result<(), String> {
    let s = &a.entry.algebra;
    let shape_tag = || -> Result<&ShapeTag, String> {
        a.shape_tag()
            .ok_or_else(|| "graph is disconnected".to_string())
    };
    match id {
        TheoremId::T3_1 => {
            if !a.connected {
                return Err("graph is disconnected".into());
            }
            match a.diameter {
                Diameter::Empty => Ok(()),
                Diameter::Finite(d) if d <= 3 => Ok(()),
                other => Err(format!("diameter verdict {other}")),
            }
        }
        TheoremId::P3_2 => match a.diameter {
            Diameter::Finite(d) if d <= 2 => Ok(()),
            other => Err(format!("diameter verdict {other}")),
        },
        TheoremId::C3_8 => match a.shape_tag() {
            Some(ShapeTag::Cycle(n)) => Err(format!("graph is the cycle C_{n}")),
            _ => Ok(()),
        },
        TheoremId::T3_9 => match a.girth {
            Girth::Finite(g) => {
                if g > 4 {
                    return Err(format!("girth {g} > 4"));
                }
                match a.diameter {
                    Diameter::Finite(d) if d <= 3 => Ok(()),
                    other => Err(format!("diameter verdict {other}")),
                }
            }
            Girth::Acyclic => {
                let tag = shape_tag()?;
                let two_star_or_k1 = a.graph.n() == 1
                    || matches!(tag, ShapeTag::TwoStar(_, _) | ShapeTag::Complete(2));
                if two_star_or_k1 {
                    Ok(())
                } else {
                    Err(format!("acyclic graph classifies as {tag}"))
                }
            }
        },
        TheoremId::E3_4 => {
            let bad: Vec<String> = zdg::zero_divisor_set(s)
                .into_iter()
                .filter(|&x| s.mul(x, x) != s.zero())
                .map(|x| s.label(x).to_string())
                .collect();
            if bad.len() <= 1 {
                Ok(())
            } else {
                Err(format!("vertices with nonzero square: {}", bad.join(", ")))
            }
        }
        TheoremId::T4_2 => {
            let parts =
                shapes::is_complete_multipartite(&a.graph).expect("guard established multipartite");
            let k = parts.len();
            let big = parts.iter().filter(|&&p| p > 1).count();
            if k == 2 || big <= 1 {
                Ok(())
            } else {
                Err(format!("parts {parts:?} have {big} non-singleton classes"))
            }
        }
        TheoremId::C4_3_reg => {
            let r = shapes::is_regular(&a.graph).expect("guard established regular");
            let n = a.graph.n();
            let complete = matches!(a.shape_tag(), Some(ShapeTag::Complete(_)));
            let balanced = n.is_multiple_of(2)
                && r == n / 2
                && matches!(a.shape_tag(), Some(ShapeTag::CompleteBipartite(p, q)) if p == q);
            if (r == n - 1 && complete) || balanced {
                Ok(())
            } else {
                Err(format!(
                    "{r}-regular on {n} vertices, shape {:?}",
                    a.shape_tag()
                ))
            }
        }
        TheoremId::L5_1 => {
            if shapes::find_induced(&a.graph, ForbiddenConfig::C43).is_some() {
                Ok(())
            } else {
                Err("no induced C_{4,3} found".into())
            }
        }
        TheoremId::L5_2 => match shapes::find_induced(&a.graph, ForbiddenConfig::C4Prime) {
            None => Ok(()),
            Some(w) => Err(format!(
                "induced C_4' at {}",
                witness_vertices(&a.graph, &w)
            )),
        },
        TheoremId::L5_3 => {
            for cfg in [
                ForbiddenConfig::C4DoublePrime,
                ForbiddenConfig::C44,
                ForbiddenConfig::C45,
            ] {
                if let Some(w) = shapes::find_induced(&a.graph, cfg) {
                    return Err(format!(
                        "induced {cfg:?} at {}",
                        witness_vertices(&a.graph, &w)
                    ));
                }
            }
            Ok(())
        }
        TheoremId::T6_1_2 => {
            let (d, _) = domain_by_local_factors(a).expect("guard established factors");
            let m = d.order() - 1;
            let want = ShapeTag::BarK { m: 3, n: m, r: m };
            let got = shape_tag()?;
            if *got == want.canonical() {
                Ok(())
            } else {
                Err(format!("expected {want}, classified {got}"))
            }
        }
        TheoremId::T6_4 => {
            let tag = shape_tag()?;
            match tag {
                ShapeTag::BarK { .. } | ShapeTag::CompleteBipartite(_, _) => Ok(()),
                other => Err(format!("girth-4 graph classifies as {other}")),
            }
        }
        TheoremId::P6_5 => {
            for x in s.elements() {
                if let Some(k) = s.nilpotent_index(x) {
                    if k > 2 {
                        return Err(format!("nilpotent {} has index {k}", s.label(x)));
                    }
                }
            }
            Ok(())
        }
        TheoremId::P7_1 => {
            let tag = shape_tag()?;
            match tag {
                ShapeTag::DeltaK { .. } | ShapeTag::Complete(3) => Ok(()),
                other => Err(format!("one-triangle graph classifies as {other}")),
            }
        }
        TheoremId::C7_2 => {
            let tag = shape_tag()?;
            match tag {
                ShapeTag::DeltaK { m: 1, n: 1, .. } | ShapeTag::Complete(3) => Ok(()),
                other => Err(format!("unique-cycle graph classifies as {other}")),
            }
        }
        TheoremId::L7_4 => check_l7_4(a),
        TheoremId::T7_5 => {
            let tag = shape_tag()?;
            match tag {
                ShapeTag::DeltaK {
                    m,
                    n,
                    r1,
                    r2,
                    r3: 0,
                } if *m >= 2 && *n >= 2 && *r1 >= 1 && *r2 >= 1 => Ok(()),
                other => Err(format!("classified {other}")),
            }
        }
        TheoremId::C7_6 => {
            let tag = shape_tag()?;
            match tag {
                ShapeTag::DeltaK {
                    m,
                    n,
                    r1,
                    r2,
                    r3: 0,
                } if *r1 == n - 1 && *r2 == m - 1 => Ok(()),
                other => Err(format!("classified {other}")),
            }
        }
        TheoremId::P7_7 => {
            if a.ring {
                Ok(())
            } else {
                let missing = s
                    .elements()
                    .find(|&x| !s.elements().any(|y| s.add(x, y) == s.zero()))
                    .map(|x| s.label(x).to_string())
                    .unwrap_or_default();
                Err(format!("element {missing} has no additive inverse"))
            }
        }
        TheoremId::L8_1 => {
            let f = a.entry.factors.as_ref().expect("guard established factors");
            let refs = [modular_ring(4), t2(&modular_ring(2))];
            for (side, factor) in [("left", &f.0), ("right", &f.1)] {
                if factor.order() != 4 || !iso_to_any(factor, &refs) {
                    return Err(format!(
                        "{side} factor {} is not Z4 or T2(Z2)",
                        factor.name()
                    ));
                }
            }
            let want = ShapeTag::DeltaK {
                m: 3,
                n: 3,
                r1: 2,
                r2: 2,
                r3: 0,
            };
            let got = shape_tag()?;
            if *got == want {
                Ok(())
            } else {
                Err(format!("expected {want}, classified {got}"))
            }
        }
        TheoremId::P8_2 => {
            if !iso_to_any(s, &four_products()) {
                return Err("not isomorphic to any product over {Z4, T2(Z2)}".into());
            }
            let want = ShapeTag::DeltaK {
                m: 3,
                n: 3,
                r1: 2,
                r2: 2,
                r3: 0,
            };
            let got = shape_tag()?;
            if *got == want {
                Ok(())
            } else {
                Err(format!("expected {want}, classified {got}"))
            }
        }
        TheoremId::L8_3 => {
            if iso_to_any(s, &k3_catalog()) {
                Ok(())
            } else {
                Err("K_3 ring is not isomorphic to any catalog ring".into())
            }
        }
        TheoremId::T8_4 => {
            let tag = shape_tag()?;
            let clause1 = iso_to_any(s, &four_products())
                && *tag
                    == ShapeTag::DeltaK {
                        m: 3,
                        n: 3,
                        r1: 2,
                        r2: 2,
                        r3: 0,
                    };
            let clause2 = iso_to_any(s, &k3_catalog()) && *tag == ShapeTag::Complete(3);
            let clause3 = iso_to_any(s, &delta_catalog_16())
                && *tag
                    == ShapeTag::DeltaK {
                        m: 1,
                        n: 1,
                        r1: 4,
                        r2: 0,
                        r3: 0,
                    };
            let holds = [clause1, clause2, clause3];
            match holds.iter().filter(|&&b| b).count() {
                1 => Ok(()),
                0 => Err(format!("no classification clause holds (shape {tag})")),
                k => Err(format!("{k} classification clauses hold at once")),
            }
        }
    }
}

fn witness_vertices(g: &ZdGraph, w: &[usize]) -> String {
    let labels: Vec<&str> = w.iter().map(|&i| g.vertex_label(i)).collect();
    labels.join(", ")
}

/// Element identities on every induced C_{4,3} (roles a-b-c-d-a plus the
/// triangle apex e on edge a-b), together with every pendant f on a.
fn check_l7_4(a: &Analyzed) -> Result<(), String> {
    let s = &a.entry.algebra;
    let g = &a.graph;
    let zero = s.zero();
    let embeddings = find_induced_all(g, ForbiddenConfig::C43);
    if embeddings.is_empty() {
        return Err("no induced C_{4,3} despite one triangle and a long cycle".into());
    }
    for w in &embeddings {
        let el = |i: usize| g.vertex(w[i]);
        let (ea, eb, ec, ed, ee) = (el(0), el(1), el(2), el(3), el(4));
        let ck = |cond: bool, what: &str| -> Result<(), String> {
            if cond {
                Ok(())
            } else {
                Err(format!(
                    "{what} fails at a={}, b={}, c={}, d={}, e={}",
                    s.label(ea),
                    s.label(eb),
                    s.label(ec),
                    s.label(ed),
                    s.label(ee)
                ))
            }
        };
        ck(s.mul(ea, ea) == zero, "a^2 = 0")?;
        ck(s.mul(eb, eb) == zero, "b^2 = 0")?;
        ck(s.mul(ee, ee) == zero, "e^2 = 0")?;
        ck(s.mul(ea, ec) == ea, "ac = a")?;
        ck(s.mul(ee, ec) == ea, "ec = a")?;
        ck(s.mul(eb, ed) == eb, "bd = b")?;
        ck(s.mul(ee, ed) == eb, "ed = b")?;
        ck(s.add(ea, eb) == ee, "a + b = e")?;
        // Every pendant on a.
        for p in 0..g.n() {
            if g.degree(p) == 1 && g.adjacent(p, w[0]) {
                let ef = g.vertex(p);
                ck(s.mul(ef, ec) == ea, "fc = a")?;
            }
        }
        if a.cancellative {
            ck(s.add(ea, ea) == zero, "2a = 0")?;
            ck(s.add(eb, eb) == zero, "2b = 0")?;
            ck(s.add(ee, ee) == zero, "2e = 0")?;
            ck(s.add(eb, ee) == ea, "b + e = a")?;
            ck(s.add(ea, ee) == eb, "a + e = b")?;
        }
    }
    Ok(())
}

/// Run one check: not-applicable when the guard fails, otherwise the
/// conclusion verdict.
pub fn check(a: &Analyzed, id: TheoremId) -> CheckReport {
    let verdict = match applicable(a, id) {
        Err(reason) => Verdict::NotApplicable { reason },
        Ok(()) => match conclusion(a, id) {
            Ok(()) => Verdict::Pass,
            Err(witness) => Verdict::Fail { witness },
        },
    };
    CheckReport {
        theorem: id,
        algebra: a.entry.algebra.name().to_string(),
        verdict,
    }
}

/// Suite summary: verdict counts, applicability per theorem, and the ids
/// with no applicable corpus member at all.
#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub algebras: usize,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub applicable_per_theorem: BTreeMap<String, usize>,
    pub vacuous_theorems: Vec<String>,
    /// Applicable members of C7_6 that are not rings (none are known at
    /// small order; recorded rather than asserted).
    pub c7_6_non_ring_applicable: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub reports: Vec<CheckReport>,
    pub summary: Summary,
}

impl SuiteResult {
    /// Exit-status contract: the suite fails on any fail verdict or any
    /// theorem with zero applicable corpus members.
    pub fn passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.vacuous_theorems.is_empty()
    }
}

/// One report per (algebra, theorem id), in corpus x id order, with a
/// deterministic parallel map underneath.
pub fn run_suite(corpus: Vec<CorpusEntry>, ids: &[TheoremId]) -> SuiteResult {
    let analyzed: Vec<Analyzed> = corpus.into_par_iter().map(Analyzed::new).collect();
    let reports: Vec<CheckReport> = analyzed
        .par_iter()
        .flat_map_iter(|a| ids.iter().map(move |&id| check(a, id)))
        .collect();
    let mut applicable_per_theorem: BTreeMap<String, usize> =
        ids.iter().map(|id| (id.as_str().to_string(), 0)).collect();
    let mut pass = 0;
    let mut fail = 0;
    let mut na = 0;
    for r in &reports {
        match &r.verdict {
            Verdict::Pass => {
                pass += 1;
                *applicable_per_theorem.get_mut(r.theorem.as_str()).unwrap() += 1;
            }
            Verdict::Fail { .. } => {
                fail += 1;
                *applicable_per_theorem.get_mut(r.theorem.as_str()).unwrap() += 1;
            }
            Verdict::NotApplicable { .. } => na += 1,
        }
    }
    let vacuous: Vec<String> = applicable_per_theorem
        .iter()
        .filter(|(_, &c)| c == 0)
        .map(|(k, _)| k.clone())
        .collect();
    let c76_non_ring = analyzed
        .iter()
        .filter(|a| applicable(a, TheoremId::C7_6).is_ok() && !a.ring)
        .count();
    SuiteResult {
        summary: Summary {
            algebras: analyzed.len(),
            pass,
            fail,
            not_applicable: na,
            applicable_per_theorem,
            vacuous_theorems: vacuous,
            c7_6_non_ring_applicable: c76_non_ring,
        },
        reports,
    }
}

/// The enumerated corpus: all commutative semirings with identity up to the
/// given order.
pub fn census_corpus(max_order: usize) -> Vec<CorpusEntry> {
    enumerate_semirings(&EnumFilter {
        max_order,
        ..EnumFilter::default()
    })
    .map(CorpusEntry::plain)
    .collect()
}

/// Every construction over its documented grid, with factor metadata.
pub fn constructed_corpus() -> Vec<CorpusEntry> {
    constructions::full_grid()
        .expect("documented grids stay within closure caps")
        .into_iter()
        .map(|c| CorpusEntry {
            algebra: c.algebra,
            factors: c.factors,
        })
        .collect()
}

/// The explicit ring corpus.
pub fn rings_corpus() -> Vec<CorpusEntry> {
    constructions::ring_corpus()
        .into_iter()
        .map(|c| CorpusEntry {
            algebra: c.algebra,
            factors: c.factors,
        })
        .collect()
}

/// census (order <= 4) + constructed grids + rings.
pub fn full_corpus() -> Vec<CorpusEntry> {
    let mut corpus = census_corpus(4);
    corpus.extend(constructed_corpus());
    corpus.extend(rings_corpus());
    corpus
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_semiring_not_applicable_to_p7_7() {
        let b = crate::builders::chain(2);
        let a = Analyzed::new(CorpusEntry::plain(b));
        assert!(applicable(&a, TheoremId::P7_7).is_err());
    }

    #[test]
    fn z4xz4_applicability() {
        let z4 = modular_ring(4);
        let p = direct_product(&z4, &z4);
        let a = Analyzed::new(CorpusEntry {
            algebra: p,
            factors: Some(Box::new((modular_ring(4), modular_ring(4)))),
        });
        assert!(applicable(&a, TheoremId::T7_5).is_ok());
        assert!(applicable(&a, TheoremId::L8_1).is_ok());
        assert!(applicable(&a, TheoremId::T6_4).is_err());
        let r = check(&a, TheoremId::L7_4);
        assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.verdict);
        let r = check(&a, TheoremId::T8_4);
        assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.verdict);
    }

    #[test]
    fn z16_passes_t8_4() {
        let a = Analyzed::new(CorpusEntry::plain(modular_ring(16)));
        assert_eq!(check(&a, TheoremId::T8_4).verdict, Verdict::Pass);
        assert_eq!(check(&a, TheoremId::P7_1).verdict, Verdict::Pass);
        assert_eq!(check(&a, TheoremId::C7_2).verdict, Verdict::Pass);
    }

    #[test]
    fn rings_corpus_l8_3() {
        let reports: Vec<CheckReport> = rings_corpus()
            .into_iter()
            .map(|e| check(&Analyzed::new(e), TheoremId::L8_3))
            .collect();
        let passes = reports
            .iter()
            .filter(|r| r.verdict == Verdict::Pass)
            .count();
        assert_eq!(passes, 4, "exactly the four K_3 rings are applicable");
        assert!(reports
            .iter()
            .all(|r| !matches!(r.verdict, Verdict::Fail { .. })));
    }

    #[test]
    fn suite_over_rings_has_no_failures() {
        let result = run_suite(rings_corpus(), &TheoremId::ALL);
        assert_eq!(
            result.summary.fail,
            0,
            "{:#?}",
            result
                .reports
                .iter()
                .filter(|r| matches!(r.verdict, Verdict::Fail { .. }))
                .collect::<Vec<_>>()
        );
    }

    /// The connectivity/diameter and girth statements quantify over
    /// noncommutative semirings too; the census stops at commutative
    /// tables, so exercise them on noncommutative matrix closures.
    #[test]
    fn noncommutative_matrix_closures_pass_section_3() {
        use crate::builders::{bool_matrix_ambient, generated_closure, BoolMatrix};
        let m2 = {
            let amb = bool_matrix_ambient(2).unwrap();
            let units: Vec<BoolMatrix> = (0..2)
                .flat_map(|i| (0..2).map(move |j| BoolMatrix::unit(2, i, j)))
                .collect();
            generated_closure(&amb, &units, true, 100, "M2(B)").unwrap()
        };
        let upper3 = {
            let amb = bool_matrix_ambient(3).unwrap();
            let gens = vec![
                BoolMatrix::unit(3, 0, 1),
                BoolMatrix::unit(3, 1, 2),
                BoolMatrix::unit(3, 0, 0),
            ];
            generated_closure(&amb, &gens, true, 5000, "upper3").unwrap()
        };
        assert!(!m2.is_commutative());
        assert!(!upper3.is_commutative());
        for s in [m2, upper3] {
            let a = Analyzed::new(CorpusEntry::plain(s));
            for id in [TheoremId::T3_1, TheoremId::T3_9, TheoremId::C3_8] {
                let r = check(&a, id);
                assert!(
                    !matches!(r.verdict, Verdict::Fail { .. }),
                    "{} on {}: {:?}",
                    id,
                    r.algebra,
                    r.verdict
                );
            }
        }
    }

    #[test]
    fn theorem_id_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert!("T9_9".parse::<TheoremId>().is_err());
    }
}
