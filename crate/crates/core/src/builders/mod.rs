//! Constructors for concrete finite algebras: modular rings, Galois fields,
//! presented quotient rings, T2(R), direct products, chain lattices, matrix
//! ambients, and generated-subsemiring closures inside an ambient.
//!
//! Every builder output places the additive identity at index 0 and the
//! multiplicative identity at index 1 (renumbering on construction), and
//! passes full validation.

mod ambient;
mod presentation;

pub use ambient::{
    Ambient, BoolMatrix, BoolMatrixAmbient, BoolVecAmbient, LatticeMatrix, LatticeMatrixAmbient,
    PowerAmbient, TableAmbient,
};
pub use presentation::{presented_ring, Monomial, Poly, RingPresentation};

use crate::algebra::{validate, AlgebraError, ElementId, FiniteSemiring, SemiringTables};
use std::collections::HashMap;
use thiserror::Error;

/// Default cap on closure size; override per call or via `ZDG_CLOSURE_CAP`.
pub const DEFAULT_CLOSURE_CAP: usize = 50_000;

/// The closure cap honored by the construction factories: the
/// `ZDG_CLOSURE_CAP` environment variable when set, else the default.
pub fn closure_cap() -> usize {
    static CAP: std::sync::OnceLock<usize> = std::sync::OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("ZDG_CLOSURE_CAP")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_CLOSURE_CAP)
    })
}

#[derive(Debug, Clone, Error)]
pub enum BuildError {
    #[error("closure exceeded the cap of {0} elements")]
    ClosureOverflow(usize),
    #[error("matrix dimension {dim} exceeds the supported maximum {max}")]
    DimTooLarge { dim: usize, max: usize },
    #[error("closed table is not a valid semiring: {0}")]
    InvalidResult(String),
    #[error("reduction rules are inconsistent: associativity fails at ({}, {}, {})",
            .witness[0], .witness[1], .witness[2])]
    NonAssociative { witness: [ElementId; 3] },
    #[error("not a chain lattice: {0}")]
    NotAChain(String),
    #[error("presentation enumerates {0} elements, above the 256 limit")]
    PresentationTooLarge(usize),
    #[error("tables rejected: {0}")]
    InvalidTables(String),
}

/// Renumber raw tables so the additive identity lands at index 0 and the
/// multiplicative identity at index 1, preserving the relative order of the
/// remaining elements.
fn renumber(
    name: String,
    order: usize,
    zero: usize,
    one: usize,
    add: impl Fn(usize, usize) -> usize,
    mul: impl Fn(usize, usize) -> usize,
    labels: Vec<String>,
) -> SemiringTables {
    if order == 1 {
        return SemiringTables {
            name,
            order: 1,
            zero: 0,
            one: 0,
            add: vec![vec![0]],
            mul: vec![vec![0]],
            labels,
        };
    }
    assert!(zero != one);
    let mut new_of_old = vec![usize::MAX; order];
    new_of_old[zero] = 0;
    new_of_old[one] = 1;
    let mut next = 2;
    for slot in new_of_old.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    let mut old_of_new = vec![0usize; order];
    for (old, &new) in new_of_old.iter().enumerate() {
        old_of_new[new] = old;
    }
    let grid = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
        (0..order)
            .map(|i| {
                (0..order)
                    .map(|j| new_of_old[f(old_of_new[i], old_of_new[j])])
                    .collect()
            })
            .collect()
    };
    SemiringTables {
        name,
        order,
        zero: 0,
        one: 1,
        add: grid(&add),
        mul: grid(&mul),
        labels: (0..order).map(|i| labels[old_of_new[i]].clone()).collect(),
    }
}

/// The modular ring Z_n.
pub fn modular_ring(n: usize) -> FiniteSemiring {
    assert!(n >= 2, "modular ring needs n >= 2");
    let tables = SemiringTables {
        name: format!("Z{n}"),
        order: n,
        zero: 0,
        one: 1,
        add: (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect(),
        mul: (0..n)
            .map(|i| (0..n).map(|j| (i * j) % n).collect())
            .collect(),
        labels: (0..n).map(|i| i.to_string()).collect(),
    };
    FiniteSemiring::from_checked(tables)
}

/// GF(4) or GF(8), with fixed irreducible polynomials x^2+x+1 and x^3+x+1
/// so the tables are byte-reproducible.
pub fn galois_field(q: usize) -> FiniteSemiring {
    let p = match q {
        4 => RingPresentation::univariate("GF(4)", 2, 2, vec![1, 1]),
        8 => RingPresentation::univariate("GF(8)", 2, 3, vec![1, 1, 0]),
        _ => panic!("galois_field supports q in {{4, 8}}, got {q}"),
    };
    presented_ring(&p).expect("fixed irreducible polynomials give fields")
}

/// The matrices aI + bJ over R with (a,b)+(c,d) = (a+c, b+d) and
/// (a,b)(c,d) = (ac, ad+bc). Order |R|^2.
pub fn t2(r: &FiniteSemiring) -> FiniteSemiring {
    let n = r.order();
    let order = n * n;
    let pair = |i: usize| (ElementId(i / n), ElementId(i % n));
    let idx = |a: ElementId, b: ElementId| a.0 * n + b.0;
    let add = |i: usize, j: usize| {
        let (a, b) = pair(i);
        let (c, d) = pair(j);
        idx(r.add(a, c), r.add(b, d))
    };
    let mul = |i: usize, j: usize| {
        let (a, b) = pair(i);
        let (c, d) = pair(j);
        idx(r.mul(a, c), r.add(r.mul(a, d), r.mul(b, c)))
    };
    let labels: Vec<String> = (0..order)
        .map(|i| {
            let (a, b) = pair(i);
            format!("({},{})", r.label(a), r.label(b))
        })
        .collect();
    let zero = idx(r.zero(), r.zero());
    let one = idx(r.one(), r.zero());
    let tables = renumber(
        format!("T2({})", r.name()),
        order,
        zero,
        one,
        add,
        mul,
        labels,
    );
    FiniteSemiring::from_checked(tables)
}

/// Componentwise product algebra on |A| * |B| pairs.
pub fn direct_product(a: &FiniteSemiring, b: &FiniteSemiring) -> FiniteSemiring {
    let (na, nb) = (a.order(), b.order());
    let order = na * nb;
    let pair = |i: usize| (ElementId(i / nb), ElementId(i % nb));
    let idx = |x: ElementId, y: ElementId| x.0 * nb + y.0;
    let add = |i: usize, j: usize| {
        let (x1, y1) = pair(i);
        let (x2, y2) = pair(j);
        idx(a.add(x1, x2), b.add(y1, y2))
    };
    let mul = |i: usize, j: usize| {
        let (x1, y1) = pair(i);
        let (x2, y2) = pair(j);
        idx(a.mul(x1, x2), b.mul(y1, y2))
    };
    let labels: Vec<String> = (0..order)
        .map(|i| {
            let (x, y) = pair(i);
            format!("({},{})", a.label(x), b.label(y))
        })
        .collect();
    let zero = idx(a.zero(), b.zero());
    let one = idx(a.one(), b.one());
    let tables = renumber(
        format!("{}x{}", a.name(), b.name()),
        order,
        zero,
        one,
        add,
        mul,
        labels,
    );
    FiniteSemiring::from_checked(tables)
}

/// Totally ordered lattice on k elements (including bottom 0 and top 1):
/// x + y = max, x * y = min. Entire, and not additively cancellative.
pub fn chain(k: usize) -> FiniteSemiring {
    assert!(k >= 2, "chain needs at least bottom and top");
    let mut labels = vec!["0".to_string()];
    for i in 1..k - 1 {
        labels.push(format!("x{i}"));
    }
    labels.push("1".to_string());
    let tables = renumber(
        format!("chain({k})"),
        k,
        0,
        k - 1,
        |i, j| i.max(j),
        |i, j| i.min(j),
        labels,
    );
    FiniteSemiring::from_checked(tables)
}

/// The full n-by-n Boolean matrix semiring as an ambient. The cap exists
/// only to bound closure cost; dimension 17 is needed for the largest
/// multipartite construction.
pub fn bool_matrix_ambient(n: usize) -> Result<BoolMatrixAmbient, BuildError> {
    if !(1..=32).contains(&n) {
        return Err(BuildError::DimTooLarge { dim: n, max: 32 });
    }
    Ok(BoolMatrixAmbient::with_dim(n))
}

/// Max-min matrix semiring over a chain lattice given as a table algebra.
/// The chain's levels are recovered from its addition table.
pub fn lattice_matrix_ambient(
    l: &FiniteSemiring,
    n: usize,
) -> Result<LatticeMatrixAmbient, BuildError> {
    if n > 8 {
        return Err(BuildError::DimTooLarge { dim: n, max: 8 });
    }
    let k = chain_levels(l)?;
    Ok(LatticeMatrixAmbient::with_dims(n, k))
}

/// Check that `l` is a chain lattice and return its size. Elements must be
/// totally ordered by absorption with bottom = 0 and top = 1.
fn chain_levels(l: &FiniteSemiring) -> Result<u8, BuildError> {
    let n = l.order();
    if n > 36 {
        return Err(BuildError::NotAChain("chain too large".into()));
    }
    // a <= b iff a + b = b; the order must be total and both operations
    // must be max/min with respect to it.
    let leq = |a: ElementId, b: ElementId| l.add(a, b) == b;
    let mut sorted: Vec<ElementId> = l.elements().collect();
    for a in l.elements() {
        for b in l.elements() {
            if !leq(a, b) && !leq(b, a) {
                return Err(BuildError::NotAChain(format!(
                    "{} and {} are incomparable",
                    l.label(a),
                    l.label(b)
                )));
            }
        }
    }
    sorted.sort_by(|&a, &b| {
        if a == b {
            std::cmp::Ordering::Equal
        } else if leq(a, b) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    if sorted[0] != l.zero() || sorted[n - 1] != l.one() {
        return Err(BuildError::NotAChain("bottom/top are not 0/1".into()));
    }
    for (i, &a) in sorted.iter().enumerate() {
        for (j, &b) in sorted.iter().enumerate() {
            if l.add(a, b) != sorted[i.max(j)] || l.mul(a, b) != sorted[i.min(j)] {
                return Err(BuildError::NotAChain("operations are not max/min".into()));
            }
        }
    }
    Ok(n as u8)
}

/// Smallest subset of the ambient containing the generators (plus the
/// ambient zero always, plus the ambient one iff `adjoin_identity`), closed
/// under + and *, rendered as a validated table algebra with labels from
/// the ambient.
///
/// Worklist saturation with a canonical byte encoding per element for
/// dedup; fails with `ClosureOverflow` past `cap`. When the identity is not
/// adjoined, the closure must contain its own multiplicative identity or
/// the result is rejected as invalid.
pub fn generated_closure<A: Ambient>(
    ambient: &A,
    generators: &[A::Element],
    adjoin_identity: bool,
    cap: usize,
    name: impl Into<String>,
) -> Result<FiniteSemiring, BuildError> {
    assert!(
        !generators.is_empty(),
        "closure needs at least one generator"
    );
    assert!(cap >= 1);
    let mut elements: Vec<A::Element> = Vec::new();
    let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
    let push = |elements: &mut Vec<A::Element>,
                index: &mut HashMap<Vec<u8>, usize>,
                e: A::Element|
     -> Result<usize, BuildError> {
        let key = ambient.encode(&e);
        if let Some(&i) = index.get(&key) {
            return Ok(i);
        }
        if elements.len() >= cap {
            return Err(BuildError::ClosureOverflow(cap));
        }
        let i = elements.len();
        index.insert(key, i);
        elements.push(e);
        Ok(i)
    };

    push(&mut elements, &mut index, ambient.zero())?;
    if adjoin_identity {
        push(&mut elements, &mut index, ambient.one())?;
    }
    for g in generators {
        push(&mut elements, &mut index, g.clone())?;
    }

    let mut frontier = 0;
    while frontier < elements.len() {
        let x = elements[frontier].clone();
        for i in 0..=frontier {
            let y = elements[i].clone();
            let sum = ambient.add(&x, &y);
            push(&mut elements, &mut index, sum)?;
            let xy = ambient.mul(&x, &y);
            push(&mut elements, &mut index, xy)?;
            let yx = ambient.mul(&y, &x);
            push(&mut elements, &mut index, yx)?;
        }
        frontier += 1;
    }

    let n = elements.len();
    let find = |e: &A::Element| index[&ambient.encode(e)];
    let mut add = vec![vec![0usize; n]; n];
    let mut mul = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            add[i][j] = find(&ambient.add(&elements[i], &elements[j]));
            mul[i][j] = find(&ambient.mul(&elements[i], &elements[j]));
        }
    }
    let zero = index[&ambient.encode(&ambient.zero())];

    // Locate the multiplicative identity: the adjoined ambient one, or an
    // internal identity of the closed set.
    let one = if adjoin_identity {
        Some(index[&ambient.encode(&ambient.one())])
    } else {
        (0..n).find(|&e| (0..n).all(|x| mul[e][x] == x && mul[x][e] == x))
    };
    let one = match one {
        Some(o) if o != zero || n == 1 => o,
        _ => {
            return Err(BuildError::InvalidResult(
                "closure has no multiplicative identity".into(),
            ))
        }
    };

    let labels: Vec<String> = elements.iter().map(|e| ambient.label(e)).collect();
    let tables = renumber(
        name.into(),
        n,
        zero,
        one,
        |i, j| add[i][j],
        |i, j| mul[i][j],
        labels,
    );
    match validate(&tables) {
        Ok(report) if report.passed => Ok(FiniteSemiring::from_checked(tables)),
        Ok(report) => Err(BuildError::InvalidResult(
            AlgebraError::AxiomsViolated(report).to_string(),
        )),
        Err(e) => Err(BuildError::InvalidResult(e.to_string())),
    }
}
