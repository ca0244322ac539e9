//! Ambient universes for generated-subsemiring closures: possibly huge
//! algebras exposing add/mul/equality on opaque element values.

use crate::algebra::{ElementId, FiniteSemiring};

/// An abstract (possibly huge) semiring used as the universe for
/// [`generated_closure`](crate::builders::generated_closure).
///
/// Equality of elements is equality of their `encode` bytes; the encoding
/// doubles as the dedup key during closure saturation.
pub trait Ambient {
    type Element: Clone;

    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn encode(&self, a: &Self::Element) -> Vec<u8>;
    fn label(&self, a: &Self::Element) -> String;
}

/// Dense square Boolean matrix. Addition is entrywise OR and multiplication
/// the Boolean matrix product, i.e. arithmetic over the binary Boolean
/// semiring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    dim: usize,
    bits: Vec<bool>,
}

impl BoolMatrix {
    pub fn zeros(dim: usize) -> Self {
        BoolMatrix {
            dim,
            bits: vec![false; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, true);
        }
        m
    }

    /// E_{i+1,j+1} in 1-based matrix-unit notation: the single entry (i, j).
    pub fn unit(dim: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(dim);
        m.set(i, j, true);
        m
    }

    /// The upper-shift matrix J with ones on the first superdiagonal.
    pub fn shift(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim.saturating_sub(1) {
            m.set(i, i + 1, true);
        }
        m
    }

    /// Sum of shift powers J^lo + J^(lo+1) + ... + J^hi.
    pub fn band(dim: usize, lo: usize, hi: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in lo..=hi {
            for i in 0..dim.saturating_sub(k) {
                m.set(i, i + k, true);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.bits[i * self.dim + j] = v;
    }

    pub fn or(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        BoolMatrix {
            dim: self.dim,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| *a || *b)
                .collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                if self.get(i, k) {
                    for j in 0..n {
                        if other.get(k, j) {
                            out.set(i, j, true);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..k {
            acc = acc.matmul(self);
        }
        acc
    }

    /// Block-diagonal direct sum [[A, 0], [0, B]].
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.dim + other.dim;
        let mut out = Self::zeros(n);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                out.set(self.dim + i, self.dim + j, other.get(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|b| !b)
    }

    /// Rows of 0/1 digits joined by '/'.
    pub fn grid_label(&self) -> String {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| if self.get(i, j) { '1' } else { '0' })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("/")
    }
}

/// The full matrix semiring over the binary Boolean semiring.
#[derive(Debug, Clone)]
pub struct BoolMatrixAmbient {
    dim: usize,
}

impl BoolMatrixAmbient {
    pub(crate) fn with_dim(dim: usize) -> Self {
        BoolMatrixAmbient { dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

impl Ambient for BoolMatrixAmbient {
    type Element = BoolMatrix;

    fn zero(&self) -> BoolMatrix {
        BoolMatrix::zeros(self.dim)
    }

    fn one(&self) -> BoolMatrix {
        BoolMatrix::identity(self.dim)
    }

    fn add(&self, a: &BoolMatrix, b: &BoolMatrix) -> BoolMatrix {
        a.or(b)
    }

    fn mul(&self, a: &BoolMatrix, b: &BoolMatrix) -> BoolMatrix {
        a.matmul(b)
    }

    fn encode(&self, a: &BoolMatrix) -> Vec<u8> {
        let mut out = vec![0u8; (self.dim * self.dim).div_ceil(8)];
        for (pos, &bit) in a.bits.iter().enumerate() {
            if bit {
                out[pos / 8] |= 1 << (pos % 8);
            }
        }
        out
    }

    fn label(&self, a: &BoolMatrix) -> String {
        a.grid_label()
    }
}

/// Square matrix over a chain lattice, entries stored as chain levels
/// 0 (bottom) .. k-1 (top).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeMatrix {
    dim: usize,
    entries: Vec<u8>,
}

impl LatticeMatrix {
    pub fn zeros(dim: usize) -> Self {
        LatticeMatrix {
            dim,
            entries: vec![0; dim * dim],
        }
    }

    /// level * I, the diagonal matrix at the given chain level.
    pub fn scaled_identity(dim: usize, level: u8) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, level);
        }
        m
    }

    /// level * J, the superdiagonal shift at the given chain level.
    pub fn scaled_shift(dim: usize, level: u8) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim.saturating_sub(1) {
            m.set(i, i + 1, level);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn join(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        LatticeMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| (*a).max(*b))
                .collect(),
        }
    }

    /// Max-min matrix product.
    pub fn matmul(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u8;
                for k in 0..n {
                    acc = acc.max(self.get(i, k).min(other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.dim + other.dim;
        let mut out = Self::zeros(n);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                out.set(self.dim + i, self.dim + j, other.get(i, j));
            }
        }
        out
    }
}

/// Matrix semiring over a totally ordered lattice (join as addition,
/// max-min product as multiplication).
#[derive(Debug, Clone)]
pub struct LatticeMatrixAmbient {
    dim: usize,
    levels: u8,
}

impl LatticeMatrixAmbient {
    pub(crate) fn with_dims(dim: usize, levels: u8) -> Self {
        LatticeMatrixAmbient { dim, levels }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn levels(&self) -> u8 {
        self.levels
    }
}

impl Ambient for LatticeMatrixAmbient {
    type Element = LatticeMatrix;

    fn zero(&self) -> LatticeMatrix {
        LatticeMatrix::zeros(self.dim)
    }

    fn one(&self) -> LatticeMatrix {
        LatticeMatrix::scaled_identity(self.dim, self.levels - 1)
    }

    fn add(&self, a: &LatticeMatrix, b: &LatticeMatrix) -> LatticeMatrix {
        a.join(b)
    }

    fn mul(&self, a: &LatticeMatrix, b: &LatticeMatrix) -> LatticeMatrix {
        a.matmul(b)
    }

    fn encode(&self, a: &LatticeMatrix) -> Vec<u8> {
        a.entries.clone()
    }

    fn label(&self, a: &LatticeMatrix) -> String {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| char::from_digit(a.get(i, j) as u32, 36).unwrap())
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("/")
    }
}

/// Finite power A^k of an ambient with componentwise operations.
#[derive(Debug, Clone)]
pub struct PowerAmbient<A: Ambient> {
    pub base: A,
    pub copies: usize,
}

impl<A: Ambient> PowerAmbient<A> {
    pub fn new(base: A, copies: usize) -> Self {
        PowerAmbient { base, copies }
    }

    /// Tuple with `value` in 1-based position `pos` and zero elsewhere.
    pub fn embed(&self, pos: usize, value: A::Element) -> Vec<A::Element> {
        assert!((1..=self.copies).contains(&pos));
        let mut t: Vec<A::Element> = (0..self.copies).map(|_| self.base.zero()).collect();
        t[pos - 1] = value;
        t
    }
}

impl<A: Ambient> Ambient for PowerAmbient<A> {
    type Element = Vec<A::Element>;

    fn zero(&self) -> Self::Element {
        (0..self.copies).map(|_| self.base.zero()).collect()
    }

    fn one(&self) -> Self::Element {
        (0..self.copies).map(|_| self.base.one()).collect()
    }

    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        a.iter().zip(b).map(|(x, y)| self.base.mul(x, y)).collect()
    }

    fn encode(&self, a: &Self::Element) -> Vec<u8> {
        let mut out = Vec::new();
        for x in a {
            let e = self.base.encode(x);
            out.extend_from_slice(&(e.len() as u32).to_le_bytes());
            out.extend(e);
        }
        out
    }

    fn label(&self, a: &Self::Element) -> String {
        let inner: Vec<String> = a.iter().map(|x| self.base.label(x)).collect();
        format!("({})", inner.join(","))
    }
}

/// The power semiring B^len of the binary Boolean semiring: bit vectors
/// under entrywise OR and AND.
#[derive(Debug, Clone)]
pub struct BoolVecAmbient {
    len: usize,
}

impl BoolVecAmbient {
    pub fn new(len: usize) -> Self {
        assert!(len <= 32, "BoolVecAmbient supports up to 32 positions");
        BoolVecAmbient { len }
    }

    /// The basis vector with a single one in 1-based position `pos`.
    pub fn basis(&self, pos: usize) -> u32 {
        assert!((1..=self.len).contains(&pos));
        1 << (pos - 1)
    }

    /// Union of basis vectors over 1-based positions.
    pub fn from_positions(&self, positions: &[usize]) -> u32 {
        positions.iter().fold(0, |acc, &p| acc | self.basis(p))
    }
}

impl Ambient for BoolVecAmbient {
    type Element = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        if self.len == 32 {
            u32::MAX
        } else {
            (1u32 << self.len) - 1
        }
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        a | b
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        a & b
    }

    fn encode(&self, a: &u32) -> Vec<u8> {
        a.to_le_bytes().to_vec()
    }

    fn label(&self, a: &u32) -> String {
        (0..self.len)
            .map(|i| if a & (1 << i) != 0 { '1' } else { '0' })
            .collect()
    }
}

/// An already-built table algebra viewed as an ambient, so closures can be
/// taken inside it.
#[derive(Debug, Clone)]
pub struct TableAmbient<'a> {
    pub semiring: &'a FiniteSemiring,
}

impl<'a> Ambient for TableAmbient<'a> {
    type Element = ElementId;

    fn zero(&self) -> ElementId {
        self.semiring.zero()
    }

    fn one(&self) -> ElementId {
        self.semiring.one()
    }

    fn add(&self, a: &ElementId, b: &ElementId) -> ElementId {
        self.semiring.add(*a, *b)
    }

    fn mul(&self, a: &ElementId, b: &ElementId) -> ElementId {
        self.semiring.mul(*a, *b)
    }

    fn encode(&self, a: &ElementId) -> Vec<u8> {
        (a.0 as u32).to_le_bytes().to_vec()
    }

    fn label(&self, a: &ElementId) -> String {
        self.semiring.label(*a).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_matrix_nilpotency() {
        let j3 = BoolMatrix::shift(3);
        assert_eq!(j3.pow(2), BoolMatrix::unit(3, 0, 2));
        assert!(j3.pow(3).is_zero());
    }

    #[test]
    fn orthogonal_blocks_annihilate() {
        let a = BoolMatrix::identity(1).direct_sum(&BoolMatrix::zeros(2));
        let b = BoolMatrix::zeros(1).direct_sum(&BoolMatrix::identity(2));
        assert!(a.matmul(&b).is_zero());
    }

    #[test]
    fn boolean_two_by_two_product() {
        // (I + J) * J = J over the Boolean semiring.
        let i2 = BoolMatrix::identity(2);
        let j2 = BoolMatrix::shift(2);
        assert_eq!(i2.or(&j2).matmul(&j2), j2);
    }

    #[test]
    fn lattice_scaled_product() {
        // Over a 3-chain: (x1 I) * (x1 J) = x1 J.
        let a = LatticeMatrix::scaled_identity(2, 1);
        let b = LatticeMatrix::scaled_shift(2, 1);
        assert_eq!(a.matmul(&b), b);
        let zero = LatticeMatrix::zeros(2);
        assert_eq!(zero.matmul(&b), zero);
    }
}
