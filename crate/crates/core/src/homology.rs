//! Reduced simplicial homology over exact fields via boundary-matrix ranks.
//! Rational ranks use fraction-free (Bareiss) elimination in i64, escalating
//! to i128 and then arbitrary precision on overflow; prime-field ranks use
//! modular elimination, with a packed bitset path for GF(2).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Zero};
use serde::{Serialize, Serializer};

use crate::complex::{Face, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("boundary dimension {k} out of range 0..={dim}")]
    DimOutOfRange { k: u32, dim: i32 },
    #[error("{0} is not prime")]
    NonPrimeModulus(u16),
}

/// Coefficient field for homology: the rationals or GF(p) for a prime
/// p < 2^16.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u16),
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::PrimeField(2);

    pub fn prime(p: u16) -> Result<FieldSpec, HomologyError> {
        if is_prime_u16(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(HomologyError::NonPrimeModulus(p))
        }
    }

    pub fn is_valid(self) -> bool {
        match self {
            FieldSpec::Rationals => true,
            FieldSpec::PrimeField(p) => is_prime_u16(p),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            FieldSpec::Rationals => serializer.serialize_str("q"),
            FieldSpec::PrimeField(p) => serializer.serialize_str(&format!("gf{p}")),
        }
    }
}

pub fn is_prime_u16(p: u16) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    let p = p as u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense integer matrix with small entries (boundary matrices have entries
/// in {-1, 0, 1}).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i8>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i8>) -> Self {
        assert_eq!(data.len(), rows * cols);
        IntMatrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> i8 {
        self.data[r * self.cols + c]
    }

    fn set(&mut self, r: usize, c: usize, v: i8) {
        self.data[r * self.cols + c] = v;
    }

    /// Whether self * other is the zero matrix (exact i32 arithmetic).
    pub fn product_is_zero(&self, other: &IntMatrix) -> bool {
        assert_eq!(self.cols, other.rows);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: i32 = 0;
                for k in 0..self.cols {
                    acc += self.entry(i, k) as i32 * other.entry(k, j) as i32;
                }
                if acc != 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// Boundary matrix between consecutive face lists: rows indexed by `rows`
/// (cardinality c), columns by `cols` (cardinality c+1), both lex-sorted.
fn boundary_between(rows: &[Face], cols: &[Face], signed: bool) -> IntMatrix {
    let mut m = IntMatrix::zero(rows.len(), cols.len());
    for (j, &sigma) in cols.iter().enumerate() {
        for v in sigma.iter() {
            let tau = sigma.remove(v);
            let i = rows.binary_search(&tau).expect("subface of a face is a face");
            let sign = if !signed || sigma.position_of(v) % 2 == 0 { 1 } else { -1 };
            m.set(i, j, sign);
        }
    }
    m
}

/// The k-th boundary matrix of the complex: rows are the (k-1)-dimensional
/// faces (the empty face for k = 0), columns the k-dimensional ones, both in
/// lexicographic order. Over GF(2) the signs collapse to 1.
pub fn boundary_matrix(
    cx: &SimplicialComplex,
    k: u32,
    field: FieldSpec,
) -> Result<IntMatrix, HomologyError> {
    let dim = cx.dim();
    if k as i32 > dim {
        return Err(HomologyError::DimOutOfRange { k, dim });
    }
    let rows = cx.faces_of_card(k).expect("cardinality within range");
    let cols = cx.faces_of_card(k + 1).expect("cardinality within range");
    let signed = field != FieldSpec::PrimeField(2);
    Ok(boundary_between(&rows, &cols, signed))
}

/// Rank of the matrix over the given field. The modulus of a prime field
/// must be prime.
pub fn rank(m: &IntMatrix, field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => rank_rationals(m),
        FieldSpec::PrimeField(2) => rank_gf2(m),
        FieldSpec::PrimeField(p) => {
            assert!(is_prime_u16(p), "prime-field modulus {p} must be prime");
            rank_modp(m, p)
        }
    }
}

fn rank_rationals(m: &IntMatrix) -> usize {
    if let Some(r) = bareiss_rank::<i64>(m) {
        return r;
    }
    if let Some(r) = bareiss_rank::<i128>(m) {
        return r;
    }
    bareiss_rank_bigint(m)
}

/// Fraction-free Gaussian elimination; every division is exact. Returns
/// None if the integer type overflows, in which case the caller escalates.
fn bareiss_rank<T>(m: &IntMatrix) -> Option<usize>
where
    T: Copy + PartialEq + Zero + One + From<i8> + CheckedMul + CheckedSub + CheckedDiv,
{
    let (rows, cols) = (m.rows, m.cols);
    let mut w: Vec<T> = m.data.iter().map(|&v| T::from(v)).collect();
    let at = |w: &Vec<T>, r: usize, c: usize| w[r * cols + c];
    let mut rank = 0usize;
    let mut prev = T::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| at(&w, r, col) != T::zero()) else {
            continue;
        };
        for c in 0..cols {
            w.swap(rank * cols + c, pivot_row * cols + c);
        }
        let pivot = at(&w, rank, col);
        for r in rank + 1..rows {
            let head = at(&w, r, col);
            for c in col + 1..cols {
                let a = pivot.checked_mul(&at(&w, r, c))?;
                let b = head.checked_mul(&at(&w, rank, c))?;
                let num = a.checked_sub(&b)?;
                w[r * cols + c] = num.checked_div(&prev)?;
            }
            w[r * cols + col] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_rank_bigint(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut w: Vec<BigInt> = m.data.iter().map(|&v| BigInt::from(v)).collect();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !w[r * cols + col].is_zero()) else {
            continue;
        };
        for c in 0..cols {
            w.swap(rank * cols + c, pivot_row * cols + c);
        }
        let pivot = w[rank * cols + col].clone();
        for r in rank + 1..rows {
            let head = w[r * cols + col].clone();
            for c in col + 1..cols {
                let num = &pivot * &w[r * cols + c] - &head * &w[rank * cols + c];
                w[r * cols + c] = num / &prev;
            }
            w[r * cols + col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Row-reduction over GF(2) on bit-packed rows.
fn rank_gf2(m: &IntMatrix) -> usize {
    let words = m.cols.div_ceil(64);
    if words == 0 || m.rows == 0 {
        return 0;
    }
    let mut packed = vec![0u64; m.rows * words];
    for r in 0..m.rows {
        for c in 0..m.cols {
            if m.entry(r, c) & 1 != 0 {
                packed[r * words + c / 64] |= 1 << (c % 64);
            }
        }
    }
    let mut rank = 0usize;
    for col in 0..m.cols {
        if rank == m.rows {
            break;
        }
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(pivot_row) = (rank..m.rows).find(|&r| packed[r * words + w] & bit != 0) else {
            continue;
        };
        for k in 0..words {
            packed.swap(rank * words + k, pivot_row * words + k);
        }
        for r in rank + 1..m.rows {
            if packed[r * words + w] & bit != 0 {
                for k in 0..words {
                    packed[r * words + k] ^= packed[rank * words + k];
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rank_modp(m: &IntMatrix, p: u16) -> usize {
    let p = p as u64;
    let reduce = |v: i8| -> u64 { (v as i64).rem_euclid(p as i64) as u64 };
    let mut w: Vec<u64> = m.data.iter().map(|&v| reduce(v)).collect();
    let cols = m.cols;
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == m.rows {
            break;
        }
        let Some(pivot_row) = (rank..m.rows).find(|&r| w[r * cols + col] != 0) else {
            continue;
        };
        for c in 0..cols {
            w.swap(rank * cols + c, pivot_row * cols + c);
        }
        let inv = modpow(w[rank * cols + col], p - 2, p);
        for r in rank + 1..m.rows {
            let factor = w[r * cols + col] * inv % p;
            if factor == 0 {
                continue;
            }
            for c in col..cols {
                let sub = factor * w[rank * cols + c] % p;
                w[r * cols + c] = (w[r * cols + c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn modpow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Reduced Betti numbers by dimension: entry j holds the Betti number in
/// dimension j-1, starting with the (-1)-st (which is 1 exactly for the
/// complex {∅}).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    entries: Vec<i64>,
}

impl BettiTable {
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn betti(&self, dim: i32) -> i64 {
        usize::try_from(dim + 1).ok().and_then(|i| self.entries.get(i)).copied().unwrap_or(0)
    }

    /// Alternating sum, weighting dimension j by (-1)^j; always equals the
    /// reduced Euler characteristic regardless of the field.
    pub fn alternating_sum(&self) -> i64 {
        let mut acc = 0i64;
        for (j, &b) in self.entries.iter().enumerate() {
            if j % 2 == 0 {
                acc -= b;
            } else {
                acc += b;
            }
        }
        acc
    }
}

/// All reduced Betti numbers of the complex over the field, from dimension
/// -1 through dim.
pub fn reduced_betti(cx: &SimplicialComplex, field: FieldSpec) -> BettiTable {
    BettiTable { entries: betti_entries(cx, field, cx.dim()) }
}

/// Betti numbers for dimensions -1..=max_dim only, skipping the ranks that
/// higher dimensions would need.
pub fn reduced_betti_through(cx: &SimplicialComplex, field: FieldSpec, max_dim: i32) -> BettiTable {
    BettiTable { entries: betti_entries(cx, field, max_dim.min(cx.dim())) }
}

fn betti_entries(cx: &SimplicialComplex, field: FieldSpec, max_dim: i32) -> Vec<i64> {
    let dc = cx.d();
    let top_card = (max_dim.min(cx.dim()) + 1).max(0) as u32;
    let hi_card = (top_card + 1).min(dc);
    let faces: Vec<Vec<Face>> =
        (0..=hi_card).map(|c| cx.faces_of_card(c).expect("cardinality within range")).collect();
    let signed = field != FieldSpec::PrimeField(2);
    // ranks[c] = rank of the boundary map from cardinality c to c-1.
    let mut ranks = vec![0usize; top_card as usize + 2];
    for c in 1..=hi_card as usize {
        let m = boundary_between(&faces[c - 1], &faces[c], signed);
        ranks[c] = rank(&m, field);
    }
    (0..=top_card as usize)
        .map(|j| faces[j].len() as i64 - ranks[j] as i64 - ranks[j + 1] as i64)
        .collect()
}
