//! Parameterized factories realizing each named graph family as a concrete
//! zero-divisor graph, each returning the algebra together with its claimed
//! shape so the harness needs no side table.

use crate::algebra::FiniteSemiring;
use crate::builders::{
    bool_matrix_ambient, chain, closure_cap, direct_product, galois_field, generated_closure,
    lattice_matrix_ambient, modular_ring, presented_ring, t2, Ambient, BoolMatrix, BoolVecAmbient,
    BuildError, LatticeMatrix, PowerAmbient, RingPresentation,
};
use crate::shapes::ShapeTag;

/// A constructed algebra plus the shape its construction claims for the
/// zero-divisor graph. `factors` is set when the algebra is a direct
/// product, for hypothesis checks that need the factor structure.
#[derive(Debug, Clone)]
pub struct Construction {
    pub id: &'static str,
    pub params: Vec<(&'static str, usize)>,
    pub citation: &'static str,
    pub expected: ShapeTag,
    pub algebra: FiniteSemiring,
    pub factors: Option<Box<(FiniteSemiring, FiniteSemiring)>>,
}

impl Construction {
    pub fn display_name(&self) -> String {
        if self.params.is_empty() {
            self.id.to_string()
        } else {
            let ps: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            format!("{}[{}]", self.id, ps.join(","))
        }
    }
}

fn named(
    id: &'static str,
    params: Vec<(&'static str, usize)>,
    citation: &'static str,
    expected: ShapeTag,
    algebra: FiniteSemiring,
    factors: Option<(FiniteSemiring, FiniteSemiring)>,
) -> Construction {
    let mut c = Construction {
        id,
        params,
        citation,
        expected,
        algebra,
        factors: factors.map(Box::new),
    };
    let name = c.display_name();
    c.algebra.set_name(name);
    c
}

/// Complete bipartite K_{m,n} as the product of two chain lattices with
/// m and n nonzero elements.
pub fn ex33_bipartite(m: usize, n: usize) -> Construction {
    assert!(m >= 1 && n >= 1);
    let s = chain(m + 1);
    let t = chain(n + 1);
    let product = direct_product(&s, &t);
    named(
        "ex33",
        vec![("m", m), ("n", n)],
        "entire-product bipartite realization",
        ShapeTag::CompleteBipartite(m.min(n), m.max(n)),
        product,
        Some((s, t)),
    )
}

/// Complete graph K_n with all but one vertex square-zero: the closure of
/// the shifted band matrices a_i = J^(n-2+i) + ... + J^(2n-2) in the
/// Boolean matrix semiring of dimension 2n-1.
pub fn ex34_complete(n: usize) -> Result<Construction, BuildError> {
    assert!((3..=6).contains(&n));
    let dim = 2 * n - 1;
    let ambient = bool_matrix_ambient(dim)?;
    let gens: Vec<BoolMatrix> = (1..=n)
        .map(|i| BoolMatrix::band(dim, n - 2 + i, 2 * n - 2))
        .collect();
    let algebra = generated_closure(&ambient, &gens, true, closure_cap(), "")?;
    Ok(named(
        "ex34",
        vec![("n", n)],
        "nilpotent-band complete realization",
        ShapeTag::Complete(n),
        algebra,
        None,
    ))
}

/// Star K_{1,n} = S_{0,n-1} from the block matrices
/// {I_1 + 0_n, 0_1 + I_n, 0_1 + (I_n + J_n)} in dimension n+1.
pub fn ex35_star(n: usize) -> Result<Construction, BuildError> {
    assert!((1..=6).contains(&n));
    let ambient = bool_matrix_ambient(n + 1)?;
    let gens = vec![
        BoolMatrix::identity(1).direct_sum(&BoolMatrix::zeros(n)),
        BoolMatrix::zeros(1).direct_sum(&BoolMatrix::identity(n)),
        BoolMatrix::zeros(1).direct_sum(&BoolMatrix::identity(n).or(&BoolMatrix::shift(n))),
    ];
    let algebra = generated_closure(&ambient, &gens, true, closure_cap(), "")?;
    Ok(named(
        "ex35",
        vec![("n", n)],
        "block-matrix star realization",
        ShapeTag::TwoStar(0, n - 1),
        algebra,
        None,
    ))
}

/// Two-star S_{n,m} from 4x4 matrices over the minimal chain lattice with
/// max(n, m) nonzero elements.
pub fn ex36_two_star(n: usize, m: usize) -> Result<Construction, BuildError> {
    assert!((1..=5).contains(&n) && (1..=5).contains(&m));
    let levels = n.max(m) + 1;
    let l = chain(levels);
    let ambient = lattice_matrix_ambient(&l, 4)?;
    let x = |i: usize| i as u8;
    let block = |tl: LatticeMatrix, br: LatticeMatrix| tl.direct_sum(&br);
    let v1 = block(
        LatticeMatrix::zeros(2),
        LatticeMatrix::scaled_shift(2, x(1)),
    );
    let v2 = block(
        LatticeMatrix::scaled_identity(2, x(1)).join(&LatticeMatrix::scaled_shift(2, x(1))),
        LatticeMatrix::zeros(2),
    );
    let mut gens = vec![v1, v2];
    for i in 1..=n {
        gens.push(block(
            LatticeMatrix::scaled_identity(2, x(1)).join(&LatticeMatrix::scaled_shift(2, x(i))),
            LatticeMatrix::scaled_shift(2, x(1)),
        ));
    }
    for j in 1..=m {
        gens.push(block(
            LatticeMatrix::zeros(2),
            LatticeMatrix::scaled_identity(2, x(j)).join(&LatticeMatrix::scaled_shift(2, x(j))),
        ));
    }
    let algebra = generated_closure(&ambient, &gens, true, closure_cap(), "")?;
    Ok(named(
        "ex36",
        vec![("n", n), ("m", m)],
        "lattice-matrix two-star realization",
        ShapeTag::TwoStar(n, m),
        algebra,
        None,
    ))
}

/// Complete k-partite graph K_{k-1} joined with (n-k+1) isolated vertices:
/// the closure of banded matrices {A_i, B, C_j} in dimension 2n+1.
pub fn thm42_multipartite(n: usize, k: usize) -> Result<Construction, BuildError> {
    assert!(n <= 8 && (3..=n.saturating_sub(1)).contains(&k));
    let dim = 2 * n + 1;
    let ambient = bool_matrix_ambient(dim)?;
    let mut gens: Vec<BoolMatrix> = Vec::new();
    // A_i: the full band t - s >= n with the single entry (i, i+n) removed
    // (1-based), for 2 <= i <= n-k+1.
    for i in 2..=(n - k + 1) {
        let mut a = BoolMatrix::band(dim, n, 2 * n);
        a.set(i - 1, i + n - 1, false);
        gens.push(a);
    }
    gens.push(BoolMatrix::band(dim, n, 2 * n));
    for j in (2 * n - k + 2)..=(2 * n) {
        gens.push(BoolMatrix::band(dim, j, 2 * n));
    }
    let algebra = generated_closure(&ambient, &gens, true, closure_cap(), "")?;
    let mut parts = vec![1usize; k - 1];
    parts.push(n - k + 1);
    parts.sort();
    Ok(named(
        "thm42",
        vec![("n", n), ("k", k)],
        "complete multipartite realization",
        ShapeTag::CompleteMultipartite(parts),
        algebra,
        None,
    ))
}

/// K̄^m_{n,m}: the product of a chain lattice with the (n+1)-element
/// semiring T that has a unique square-zero zero-divisor. T is realized as
/// a closure of scaled 2x2 lattice matrices {x1 J} ∪ {x_k (I + J)}; its
/// internal identity is the top-scaled I + J.
pub fn ex62_bar_k(n: usize, m: usize) -> Result<Construction, BuildError> {
    assert!((2..=5).contains(&n) && (2..=5).contains(&m));
    let levels = chain(n);
    let ambient = lattice_matrix_ambient(&levels, 2)?;
    let mut gens = vec![LatticeMatrix::scaled_shift(2, 1)];
    for k in 1..n {
        gens.push(
            LatticeMatrix::scaled_identity(2, k as u8)
                .join(&LatticeMatrix::scaled_shift(2, k as u8)),
        );
    }
    let t = generated_closure(&ambient, &gens, false, closure_cap(), format!("Tnil{n}"))?;
    let s = chain(m + 1);
    let algebra = direct_product(&s, &t);
    Ok(named(
        "ex62",
        vec![("n", n), ("m", m)],
        "pendant bipartite (girth four) realization",
        ShapeTag::BarK { m: n, n: m, r: m },
        algebra,
        Some((s, t)),
    ))
}

/// K̄^3_{n,2} from tuples of 2x2 Boolean matrices.
pub fn ex63_bar_k_n2(n: usize) -> Result<Construction, BuildError> {
    assert!((3..=5).contains(&n));
    let len = (2 * n - 3).max(4);
    let base = bool_matrix_ambient(2)?;
    let ambient = PowerAmbient::new(base, len);
    let i2 = BoolMatrix::identity(2);
    let j2 = BoolMatrix::shift(2);
    let ij = i2.or(&j2);
    let mut gens: Vec<Vec<BoolMatrix>> = Vec::new();
    gens.push(ambient.embed(1, j2.clone())); // a = J e1
    gens.push(ambient.embed(2, i2.clone())); // b = e2
    for j in 1..=(n - 2) {
        // c_j = (I+J) e1 + sum_{i<=j} J e_{2i+1}
        let mut c = ambient.embed(1, ij.clone());
        for i in 1..=j {
            c[2 * i] = j2.clone();
        }
        gens.push(c);
    }
    gens.push({
        // d = e2 + e4
        let mut d = ambient.embed(2, i2.clone());
        d[3] = i2.clone();
        d
    });
    gens.push({
        // e = sum_{i=0..n-2} J e_{2i+1} + e_2 + e_4. The even support must
        // equal d's so that e^2 = d; anything wider would add an extra
        // vertex to the two-element part.
        let mut e = ambient.zero();
        for i in 0..=(n - 2) {
            e[2 * i] = j2.clone();
        }
        e[1] = i2.clone();
        e[3] = i2.clone();
        e
    });
    let algebra = generated_closure(&ambient, &gens, true, closure_cap(), "")?;
    Ok(named(
        "ex63",
        vec![("n", n)],
        "matrix-tuple pendant bipartite realization",
        ShapeTag::BarK { m: n, n: 2, r: 3 },
        algebra,
        None,
    ))
}

/// K_{1,1}^{Δ(r1,r2,r3)}: a triangle of basis vectors in B^(r1+r2+r3) with
/// nested prefix-sum leaf generators hanging off each corner.
pub fn ex73_delta_k(r1: usize, r2: usize, r3: usize) -> Result<Construction, BuildError> {
    assert!(r1 >= 1 && r2 >= 1 && r3 >= 1 && r1 + r2 + r3 <= 9);
    let n = r1 + r2 + r3;
    let ambient = BoolVecAmbient::new(n);
    let a_pos = r1;
    let b_pos = r1 + r2;
    let c_pos = n;
    let mut gens: Vec<u32> = vec![
        ambient.basis(a_pos),
        ambient.basis(b_pos),
        ambient.basis(c_pos),
    ];
    for i in 1..r1 {
        let mut v = ambient.basis(b_pos) | ambient.basis(c_pos);
        for t in 1..=i {
            v |= ambient.basis(t);
        }
        gens.push(v);
    }
    for j in 1..r2 {
        let mut v = ambient.basis(a_pos) | ambient.basis(c_pos);
        for t in 1..=j {
            v |= ambient.basis(r1 + t);
        }
        gens.push(v);
    }
    for l in 1..r3 {
        let mut v = ambient.basis(a_pos) | ambient.basis(b_pos);
        for t in 1..=l {
            v |= ambient.basis(r1 + r2 + t);
        }
        gens.push(v);
    }
    let algebra = generated_closure(&ambient, &gens, true, closure_cap(), "")?;
    Ok(named(
        "ex73",
        vec![("r1", r1), ("r2", r2), ("r3", r3)],
        "one-triangle family realization",
        ShapeTag::DeltaK {
            m: 1,
            n: 1,
            r1,
            r2,
            r3,
        },
        algebra,
        None,
    ))
}

/// The fixed K_{2,2}^{Δ(2,1,0)} semiring in triples of 2x2 Boolean
/// matrices; not additively cancellative, witnessing that the pendant
/// counts need not be tied to the part sizes.
pub fn ex78_delta_k_22_210() -> Result<Construction, BuildError> {
    let base = bool_matrix_ambient(2)?;
    let ambient = PowerAmbient::new(base, 3);
    let i2 = BoolMatrix::identity(2);
    let j2 = BoolMatrix::shift(2);
    let ij = i2.or(&j2);
    let gens: Vec<Vec<BoolMatrix>> = vec![
        ambient.embed(1, j2.clone()),
        ambient.embed(3, j2.clone()),
        ambient.embed(1, ij.clone()),
        ambient.embed(3, ij.clone()),
        vec![j2.clone(), j2.clone(), ij.clone()],
    ];
    let algebra = generated_closure(&ambient, &gens, true, closure_cap(), "")?;
    Ok(named(
        "ex78",
        vec![],
        "asymmetric one-triangle realization",
        ShapeTag::DeltaK {
            m: 2,
            n: 2,
            r1: 2,
            r2: 1,
            r3: 0,
        },
        algebra,
        None,
    ))
}

fn t2_z2() -> FiniteSemiring {
    t2(&modular_ring(2))
}

fn k3_ring_presentations() -> Vec<RingPresentation> {
    vec![
        RingPresentation::univariate("Z4[x]/(x^2+x+1)", 4, 2, vec![3, 3]),
        RingPresentation::bivariate_nil("Z2[x,y]/(x^2,xy,y^2)", 2),
        RingPresentation::univariate("Z4[x]/(2x,x^2)", 4, 2, vec![]).with_scalar_rule(2, (1, 0)),
    ]
}

/// The explicit ring corpus: every ring named by the order-8 and order-16
/// catalogs plus the small products used by the one-triangle and girth-4
/// classifications.
pub fn ring_corpus() -> Vec<Construction> {
    let mut out: Vec<Construction> = Vec::new();
    let single =
        |algebra: FiniteSemiring, expected: ShapeTag, citation: &'static str| Construction {
            id: "ring",
            params: vec![],
            citation,
            expected,
            algebra,
            factors: None,
        };
    let product =
        |a: FiniteSemiring, b: FiniteSemiring, expected: ShapeTag, citation: &'static str| {
            let p = direct_product(&a, &b);
            Construction {
                id: "ring",
                params: vec![],
                citation,
                expected,
                algebra: p,
                factors: Some(Box::new((a, b))),
            }
        };
    let delta33 = ShapeTag::DeltaK {
        m: 3,
        n: 3,
        r1: 2,
        r2: 2,
        r3: 0,
    };
    let delta11_4 = ShapeTag::DeltaK {
        m: 1,
        n: 1,
        r1: 4,
        r2: 0,
        r3: 0,
    };

    out.push(single(
        modular_ring(4),
        ShapeTag::Complete(1),
        "minimal one-vertex ring",
    ));
    out.push(single(
        t2_z2(),
        ShapeTag::Complete(1),
        "minimal one-vertex ring",
    ));
    out.push(single(
        modular_ring(8),
        ShapeTag::Path(3),
        "order-8 local catalog",
    ));
    out.push(single(
        modular_ring(9),
        ShapeTag::Complete(2),
        "order-9 ring",
    ));
    out.push(single(
        modular_ring(16),
        delta11_4.clone(),
        "one-triangle classification (3)",
    ));
    out.push(single(
        presented_ring(&RingPresentation::univariate("Z2[x]/(x^3)", 2, 3, vec![])).unwrap(),
        ShapeTag::Path(3),
        "order-8 local catalog",
    ));
    out.push(single(
        presented_ring(&RingPresentation::univariate("Z2[x]/(x^4)", 2, 4, vec![])).unwrap(),
        delta11_4,
        "one-triangle classification (3)",
    ));
    out.push(single(
        galois_field(4),
        ShapeTag::Empty,
        "field, no zero-divisors",
    ));
    out.push(single(
        galois_field(8),
        ShapeTag::Empty,
        "field, no zero-divisors",
    ));
    for p in k3_ring_presentations() {
        out.push(single(
            presented_ring(&p).unwrap(),
            ShapeTag::Complete(3),
            "triangle ring catalog",
        ));
    }
    out.push(single(
        t2(&galois_field(4)),
        ShapeTag::Complete(3),
        "triangle ring catalog",
    ));
    out.push(single(
        presented_ring(
            &RingPresentation::univariate("Z4[x]/(2x,x^2-2)", 4, 2, vec![2])
                .with_scalar_rule(2, (1, 0)),
        )
        .unwrap(),
        ShapeTag::Path(3),
        "order-8 local catalog",
    ));

    // All pairwise products of {Z4, T2(Z2)}.
    let pair_factories: [fn() -> FiniteSemiring; 2] = [|| modular_ring(4), t2_z2];
    for fa in pair_factories {
        for fb in pair_factories {
            out.push(product(
                fa(),
                fb(),
                delta33.clone(),
                "one-triangle classification (1)",
            ));
        }
    }

    out.push(product(
        modular_ring(2),
        modular_ring(2),
        ShapeTag::Complete(2),
        "single-edge product",
    ));
    out.push(product(
        modular_ring(2),
        modular_ring(4),
        ShapeTag::TwoStar(2, 1),
        "two-star product",
    ));
    out.push(product(
        modular_ring(3),
        modular_ring(3),
        ShapeTag::CompleteBipartite(2, 2),
        "girth-four product",
    ));
    out.push(product(
        modular_ring(3),
        modular_ring(4),
        ShapeTag::BarK { m: 3, n: 2, r: 2 },
        "domain-by-local girth-four product",
    ));
    out.push(product(
        modular_ring(3),
        t2_z2(),
        ShapeTag::BarK { m: 3, n: 2, r: 2 },
        "domain-by-local girth-four product",
    ));
    out.push(product(
        galois_field(4),
        modular_ring(4),
        ShapeTag::BarK { m: 3, n: 3, r: 3 },
        "domain-by-local girth-four product",
    ));
    out.push(product(
        galois_field(4),
        t2_z2(),
        ShapeTag::BarK { m: 3, n: 3, r: 3 },
        "domain-by-local girth-four product",
    ));

    out
}

/// Every factory over its full documented parameter range.
pub fn full_grid() -> Result<Vec<Construction>, BuildError> {
    let mut out = Vec::new();
    for m in 1..=4 {
        for n in 1..=4 {
            out.push(ex33_bipartite(m, n));
        }
    }
    for n in 3..=6 {
        out.push(ex34_complete(n)?);
    }
    for n in 1..=6 {
        out.push(ex35_star(n)?);
    }
    for n in 1..=5 {
        for m in 1..=5 {
            out.push(ex36_two_star(n, m)?);
        }
    }
    for n in 4..=8usize {
        for k in 3..=(n - 1) {
            out.push(thm42_multipartite(n, k)?);
        }
    }
    for n in 2..=5 {
        for m in 2..=5 {
            out.push(ex62_bar_k(n, m)?);
        }
    }
    for n in 3..=5 {
        out.push(ex63_bar_k_n2(n)?);
    }
    for r1 in 1..=7usize {
        for r2 in 1..=7usize {
            for r3 in 1..=7usize {
                if r1 + r2 + r3 <= 9 {
                    out.push(ex73_delta_k(r1, r2, r3)?);
                }
            }
        }
    }
    out.push(ex78_delta_k_22_210()?);
    Ok(out)
}
