//! Bit-packed linear algebra over GF(2) and arithmetic in GF(2^t).
//!
//! Affine systems are stored with an augmented column: each row packs the
//! coefficient bits of `x_1..x_n` followed by the right-hand-side bit, so
//! elimination is a single pass of word-wide xors.

use crate::error::{Error, Result};

/// Fixed-length packed bit vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> BitVec {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit.
    pub fn first_set(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Indices of all set bits, ascending.
    pub fn iter_set(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }
}

/// A system of affine equations over GF(2) in variables `x_1..x_n`.
///
/// Row bit `v-1` is the coefficient of `x_v`; row bit `n` is the
/// right-hand side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSystem {
    num_vars: usize,
    rows: Vec<BitVec>,
}

impl AffineSystem {
    pub fn new(num_vars: usize) -> AffineSystem {
        AffineSystem {
            num_vars,
            rows: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Appends the equation `x_{v_1} ^ ... ^ x_{v_k} = rhs`.
    ///
    /// Variables are 1-based; a repeated variable cancels out.
    pub fn push_equation(&mut self, vars: impl IntoIterator<Item = u32>, rhs: bool) {
        let mut row = BitVec::zeros(self.num_vars + 1);
        for v in vars {
            debug_assert!(v >= 1 && v as usize <= self.num_vars);
            let i = v as usize - 1;
            row.set(i, !row.get(i));
        }
        row.set(self.num_vars, rhs);
        self.rows.push(row);
    }

    pub fn push_row(&mut self, row: BitVec) {
        debug_assert_eq!(row.len(), self.num_vars + 1);
        self.rows.push(row);
    }

    /// Gaussian elimination; see [`Echelon`].
    pub fn echelonize(&self) -> Echelon {
        let mut e = Echelon::new(self.num_vars);
        for row in &self.rows {
            e.insert(row.clone());
        }
        e
    }

    /// Whether the joint system `self ∪ other` has no solution.
    ///
    /// For individually consistent systems this decides whether the two
    /// affine solution sets are disjoint. An inconsistent input denotes the
    /// empty set, which is disjoint from everything.
    pub fn disjoint(&self, other: &AffineSystem) -> bool {
        debug_assert_eq!(self.num_vars, other.num_vars);
        let mut e = self.echelonize();
        for row in &other.rows {
            e.insert(row.clone());
            if !e.consistent() {
                return true;
            }
        }
        false
    }
}

/// Reduced row-echelon form of an affine system.
///
/// Pivot columns strictly increase across rows. An inconsistent system keeps
/// a single `0 = 1` row (pivot on the augmented column), so the stored rows
/// remain row-equivalent to the input. `rank` counts pivots on coefficient
/// columns only, and for a consistent system the solution set has exactly
/// `2^(n - rank)` points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    num_vars: usize,
    /// Rows sorted by pivot column.
    rows: Vec<BitVec>,
    /// Pivot column of each row.
    pivots: Vec<usize>,
}

/// What [`Echelon::insert`] did with a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowFate {
    /// The row extended the echelon basis.
    Added,
    /// The row was already in the row span.
    Redundant,
    /// The row reduced to `0 = 1`; the system is now inconsistent.
    Inconsistent,
}

impl Echelon {
    pub fn new(num_vars: usize) -> Echelon {
        Echelon {
            num_vars,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Number of pivot rows on coefficient columns.
    pub fn rank(&self) -> usize {
        self.pivots.iter().filter(|&&p| p < self.num_vars).count()
    }

    pub fn consistent(&self) -> bool {
        self.pivots.iter().all(|&p| p < self.num_vars)
    }

    /// Reduces `row` against the basis, inserting the residue if nonzero.
    pub fn insert(&mut self, mut row: BitVec) -> RowFate {
        debug_assert_eq!(row.len(), self.num_vars + 1);
        self.reduce(&mut row);
        let Some(pivot) = row.first_set() else {
            return RowFate::Redundant;
        };
        let pos = self.pivots.partition_point(|&p| p < pivot);
        // Keep the reduced form: clear this pivot from the earlier rows.
        for i in 0..pos {
            if self.rows[i].get(pivot) {
                let (head, tail) = self.rows.split_at_mut(pos.min(i + 1));
                let _ = tail;
                head[i].xor_assign(&row);
            }
        }
        self.rows.insert(pos, row);
        self.pivots.insert(pos, pivot);
        if pivot < self.num_vars {
            RowFate::Added
        } else {
            RowFate::Inconsistent
        }
    }

    /// Reduces `row` in place against the basis rows.
    pub fn reduce(&self, row: &mut BitVec) {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row.get(p) {
                row.xor_assign(r);
            }
        }
    }

    /// Whether the equation `x_{v_1} ^ ... ^ x_{v_k} = rhs` holds on every
    /// solution of the system, i.e. its augmented row lies in the row span.
    ///
    /// Errors on an inconsistent system (no solutions to speak of).
    pub fn implies(&self, vars: &[u32], rhs: bool) -> Result<bool> {
        if !self.consistent() {
            return Err(Error::InconsistentSystem);
        }
        let mut row = BitVec::zeros(self.num_vars + 1);
        for &v in vars {
            let i = v as usize - 1;
            row.set(i, !row.get(i));
        }
        row.set(self.num_vars, rhs);
        self.reduce(&mut row);
        Ok(row.is_zero())
    }

    /// The echelon rows as an [`AffineSystem`] (row-equivalent to the input).
    pub fn basis(&self) -> AffineSystem {
        AffineSystem {
            num_vars: self.num_vars,
            rows: self.rows.clone(),
        }
    }
}

/// Lexicographically least irreducible polynomial of degree `t` over GF(2),
/// as a bitmask with bit `i` holding the coefficient of `x^i`.
pub fn irreducible_modulus(t: u32) -> Option<u32> {
    // Verified against trial division in the tests below.
    const TABLE: [u32; 15] = [
        0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11b, 0x203, 0x409, 0x805, 0x1009, 0x201b, 0x4021,
        0x8003, 0x1002b,
    ];
    if (2..=16).contains(&t) {
        Some(TABLE[t as usize - 2])
    } else {
        None
    }
}

/// The finite field GF(2^t), elements packed as `u32` bit polynomials of
/// degree < t, reduced modulo the fixed irreducible from
/// [`irreducible_modulus`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gf2t {
    t: u32,
    modulus: u32,
}

impl Gf2t {
    /// Supported degrees are `2..=16`.
    pub fn new(t: u32) -> Result<Gf2t> {
        match irreducible_modulus(t) {
            Some(modulus) => Ok(Gf2t { t, modulus }),
            None => Err(Error::OutOfRange(format!(
                "GF(2^t) degree t = {t} outside supported range 2..=16"
            ))),
        }
    }

    pub fn degree(&self) -> u32 {
        self.t
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements, `2^t`.
    pub fn order(&self) -> u32 {
        1 << self.t
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.order() && b < self.order());
        let mut acc: u64 = 0;
        let mut a = a as u64;
        let mut b = b;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            a <<= 1;
            b >>= 1;
        }
        // Reduce the degree < 2t product.
        let m = self.modulus as u64;
        let top = self.t;
        for d in (top..2 * top).rev() {
            if acc >> d & 1 == 1 {
                acc ^= m << (d - top);
            }
        }
        acc as u32
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInverse { t: self.t });
        }
        // a^(2^t - 2) in the multiplicative group of order 2^t - 1.
        Ok(self.pow(a, (self.order() as u64) - 2))
    }

    /// The monomial x^i for i < t.
    pub fn monomial(&self, i: u32) -> u32 {
        debug_assert!(i < self.t);
        1 << i
    }
}
