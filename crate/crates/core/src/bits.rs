//! Packed GF(2) vectors and matrices.
//!
//! Coordinates are 0-based here; the 1-based "point" convention of the file
//! formats and availability reports is applied at those boundaries.
//! Bitstring serialization puts coordinate 0 (point 1) first.

use crate::{Error, Result};
use std::fmt;

const WORD_BITS: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A length-n vector over GF(2), packed 64 coordinates per word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Vector with ones at the given 0-based coordinates.
    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = BitVector::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "coordinate {i} out of range 0..{}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "coordinate {i} out of range 0..{}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// 0-based indices of the nonzero coordinates, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                out.push(wi * WORD_BITS + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Number of coordinates where both vectors are one.
    pub fn and_weight(&self, other: &BitVector) -> usize {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersects(&self, other: &BitVector) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Parses a '0'/'1' string; the first character is coordinate 0 (point 1).
    pub fn parse_bitstring(s: &str) -> Result<Self> {
        let mut v = BitVector::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => return Err(Error::Parse(format!("bad bit character {c:?}"))),
            }
        }
        Ok(v)
    }

    pub fn to_bitstring(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({})", self.to_bitstring())
    }
}

/// A row-major GF(2) matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitVector>) -> Self {
        let cols = rows.first().map_or(0, BitVector::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        BitMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Builds a matrix with the given column count, accepting an empty row set.
    pub fn from_rows_with_cols(rows: Vec<BitVector>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        BitMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.data[i]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &BitVector> {
        self.data.iter()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVector::is_zero)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.data[i].support() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// A * B^T; entry (i, j) is the inner product of row i of self with row j
    /// of `other`.
    pub fn mul_transpose(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols, "inner dimensions differ");
        let mut out = BitMatrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                if self.data[i].dot(&other.data[j]) {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vector(&self, v: &BitVector) -> BitVector {
        assert_eq!(self.cols, v.len());
        let mut out = BitVector::zeros(self.rows);
        for i in 0..self.rows {
            if self.data[i].dot(v) {
                out.set(i, true);
            }
        }
        out
    }

    /// GF(2) row rank; the matrix is left unchanged.
    pub fn rank(&self) -> usize {
        self.clone().reduce().0
    }

    /// Reduced row echelon form with zero rows dropped: the canonical basis
    /// of the row space. Also returns the pivot columns.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let (rank, pivots) = m.reduce();
        m.data.truncate(rank);
        m.rows = rank;
        (m, pivots)
    }

    /// In-place Gauss-Jordan elimination. Returns (rank, pivot columns);
    /// afterwards the first `rank` rows are the reduced echelon basis.
    fn reduce(&mut self) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&i| self.data[i].get(col)) else {
                continue;
            };
            self.data.swap(rank, pivot);
            let pivot_row = self.data[rank].clone();
            for (i, row) in self.data.iter_mut().enumerate() {
                if i != rank && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        (rank, pivots)
    }

    /// Basis of the right nullspace {v : M v = 0}, one row per basis vector.
    /// The result has `cols - rank` rows (possibly zero).
    pub fn nullspace_basis(&self) -> BitMatrix {
        let (rref, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for (free, slot) in pivot_set.iter().enumerate() {
            if slot.is_some() {
                continue;
            }
            let mut v = BitVector::zeros(self.cols);
            v.set(free, true);
            for (row, &col) in pivots.iter().enumerate() {
                if rref.get(row, free) {
                    v.set(col, true);
                }
            }
            basis.push(v);
        }
        BitMatrix::from_rows_with_cols(basis, self.cols)
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.data.iter().map(BitVector::weight).collect()
    }

    pub fn column_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.cols];
        for row in &self.data {
            for j in row.support() {
                w[j] += 1;
            }
        }
        w
    }

    pub fn parse_bitstrings(strings: &[String]) -> Result<Self> {
        let rows = strings
            .iter()
            .map(|s| BitVector::parse_bitstring(s))
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = rows.first() {
            let cols = first.len();
            if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
                return Err(Error::LengthMismatch {
                    left: cols,
                    right: bad.len(),
                });
            }
        }
        Ok(BitMatrix::from_rows(rows))
    }

    pub fn to_bitstrings(&self) -> Vec<String> {
        self.data.iter().map(BitVector::to_bitstring).collect()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {}", row.to_bitstring())?;
        }
        write!(f, "]")
    }
}

/// Walks all 2^k combinations of the rows of `basis` in Gray-code order,
/// calling `visit` once per combination (including the zero combination).
/// One row is XORed per step, so the walk is linear in the output.
pub fn gray_walk(basis: &BitMatrix, mut visit: impl FnMut(&BitVector)) {
    let k = basis.rows();
    let mut current = BitVector::zeros(basis.cols());
    visit(&current);
    if k == 0 {
        return;
    }
    assert!(k < usize::BITS as usize, "gray walk dimension too large");
    for step in 1u64..(1u64 << k) {
        // The bit that flips between gray(step-1) and gray(step).
        let bit = step.trailing_zeros() as usize;
        current.xor_assign(basis.row(bit));
        visit(&current);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&str]) -> BitMatrix {
        BitMatrix::parse_bitstrings(&rows.iter().map(|s| s.to_string()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(BitMatrix::identity(3).rank(), 3);
        assert_eq!(BitMatrix::zeros(2, 5).rank(), 0);
    }

    #[test]
    fn rank_tetrahedron_incidence() {
        // Incidence matrix of K4 under the edge labeling of the tetrahedron
        // builder; rows sum to zero, so the rank drops to v - 1 = 3.
        let h = mat(&["110010", "011001", "101100", "000111"]);
        assert_eq!(h.rank(), 3);
    }

    #[test]
    fn nullspace_is_orthogonal_complement() {
        let h = mat(&["110010", "011001", "101100", "000111"]);
        let ns = h.nullspace_basis();
        assert_eq!(ns.rows(), 3);
        assert!(h.mul_transpose(&ns).is_zero());
        assert_eq!(ns.rank(), 3);
    }

    #[test]
    fn rref_is_canonical() {
        let a = mat(&["1100", "0110", "1010"]);
        let b = mat(&["0110", "1010", "1100"]);
        assert_eq!(a.rref().0, b.rref().0);
    }

    #[test]
    fn gray_walk_visits_whole_span() {
        let g = mat(&["1100", "0011"]);
        let mut seen = std::collections::HashSet::new();
        gray_walk(&g, |v| {
            seen.insert(v.to_bitstring());
        });
        assert_eq!(seen.len(), 4);
        assert!(seen.contains("1111"));
    }

    #[test]
    fn bitstring_round_trip() {
        let v = BitVector::parse_bitstring("10100101").unwrap();
        assert_eq!(v.weight(), 4);
        assert_eq!(v.support(), vec![0, 2, 5, 7]);
        assert_eq!(v.to_bitstring(), "10100101");
    }

    #[test]
    fn transpose_involution() {
        let a = mat(&["110010", "011001"]);
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn dot_and_intersection() {
        let a = BitVector::parse_bitstring("1101").unwrap();
        let b = BitVector::parse_bitstring("1011").unwrap();
        assert_eq!(a.and_weight(&b), 2);
        assert!(!a.dot(&b));
        assert!(a.intersects(&b));
    }

    #[test]
    fn syndromes_via_mul_vector() {
        let h = mat(&["110010", "011001", "101100", "000111"]);
        let codeword = BitVector::parse_bitstring("100110").unwrap();
        assert!(h.mul_vector(&codeword).is_zero());
        let one_error = BitVector::parse_bitstring("000110").unwrap();
        assert_eq!(h.mul_vector(&one_error).to_bitstring(), "1010");
    }
}
