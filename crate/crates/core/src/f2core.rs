//! Dense GF(2) vector and matrix arithmetic.
//!
//! Vectors are packed into `u64` words, bit `i` living in word `i / 64` at
//! position `i % 64`. Bits past the logical length are always zero, so word-wise
//! equality, hashing and popcounts need no masking.
//!
//! Row reduction pivots on the lowest column index first, which makes reduced
//! forms reproducible across runs and platforms.

use std::fmt;
use std::ops::BitXorAssign;

use crate::error::{check_len, Error, Result};

const WORD_BITS: usize = 64;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    /// The zero vector of the given length.
    #[must_use]
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; word_count(len)],
            len,
        }
    }

    /// The all-ones vector of the given length.
    #[must_use]
    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for w in &mut v.words {
            *w = u64::MAX;
        }
        v.clear_tail();
        v
    }

    /// Vector with ones exactly at `indices`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] if an index is out of range.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Result<Self> {
        let mut v = Self::zeros(len);
        for i in indices {
            if i >= len {
                return Err(Error::Validation(format!(
                    "index {i} out of range for length {len}"
                )));
            }
            v.set(i, true);
        }
        Ok(v)
    }

    /// Builds a vector from packed words; bits beyond `len` are cleared.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Dimension`] if the number of words does not match `len`.
    pub fn from_words(len: usize, words: Vec<u64>) -> Result<Self> {
        check_len(word_count(len), words.len())?;
        let mut v = Self { words, len };
        v.clear_tail();
        Ok(v)
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Number of coordinates.
    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    /// True for the length-zero vector.
    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Packed storage words.
    #[must_use]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Reads coordinate `i`.
    ///
    /// # Panics
    ///
    /// Panics if `i >= len`.
    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    /// Writes coordinate `i`.
    ///
    /// # Panics
    ///
    /// Panics if `i >= len`.
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    /// Flips coordinate `i`.
    ///
    /// # Panics
    ///
    /// Panics if `i >= len`.
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Hamming weight.
    #[must_use]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True when every coordinate is zero.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Size of the intersection of the two supports.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Dimension`] on a length mismatch.
    pub fn overlap(&self, other: &Self) -> Result<usize> {
        check_len(self.len, other.len)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum())
    }

    /// Index of the lowest set coordinate.
    #[must_use]
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    /// Iterates over the indices of set coordinates in increasing order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// Copy with coordinate `pos` removed (length decreases by one).
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] if `pos` is out of range.
    pub fn delete(&self, pos: usize) -> Result<Self> {
        if pos >= self.len {
            return Err(Error::Validation(format!(
                "position {pos} out of range for length {}",
                self.len
            )));
        }
        let mut out = Self::zeros(self.len - 1);
        for i in self.iter_ones() {
            match i.cmp(&pos) {
                std::cmp::Ordering::Less => out.set(i, true),
                std::cmp::Ordering::Greater => out.set(i - 1, true),
                std::cmp::Ordering::Equal => {}
            }
        }
        Ok(out)
    }

    /// In-place XOR with a vector of the same length.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Dimension`] on a length mismatch.
    pub fn try_xor_assign(&mut self, other: &Self) -> Result<()> {
        check_len(self.len, other.len)?;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        Ok(())
    }

    /// Renders as a string of `'0'`/`'1'`, coordinate 0 first.
    #[must_use]
    pub fn to_bitstring(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }

    /// Parses a string of `'0'`/`'1'` characters.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Parse`] on any other character.
    pub fn from_bitstring(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut v = Self::zeros(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected character {other:?} in bit string"
                    )))
                }
            }
        }
        Ok(v)
    }
}

impl BitXorAssign<&BitVec> for BitVec {
    /// # Panics
    ///
    /// Panics on a length mismatch; use [`BitVec::try_xor_assign`] for a checked form.
    fn bitxor_assign(&mut self, rhs: &BitVec) {
        assert_eq!(self.len, rhs.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({})", self.to_bitstring())
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

/// Parity of the overlap of two supports (the standard bilinear form over GF(2)).
///
/// # Errors
///
/// Returns [`Error::Dimension`] on a length mismatch.
pub fn inner(u: &BitVec, v: &BitVec) -> Result<bool> {
    Ok(u.overlap(v)? % 2 == 1)
}

/// An ordered list of equal-length GF(2) rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: Vec<BitVec>,
    ncols: usize,
}

impl F2Matrix {
    /// Matrix with no rows.
    #[must_use]
    pub fn empty(ncols: usize) -> Self {
        Self {
            rows: Vec::new(),
            ncols,
        }
    }

    /// Matrix from explicit rows.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Dimension`] if a row length differs from `ncols`.
    pub fn from_rows(ncols: usize, rows: Vec<BitVec>) -> Result<Self> {
        for r in &rows {
            check_len(ncols, r.len())?;
        }
        Ok(Self { rows, ncols })
    }

    /// The `n × n` identity.
    #[must_use]
    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = BitVec::zeros(n);
                r.set(i, true);
                r
            })
            .collect();
        Self { rows, ncols: n }
    }

    /// Appends a row.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Dimension`] if the row length differs from `ncols`.
    pub fn push(&mut self, row: BitVec) -> Result<()> {
        check_len(self.ncols, row.len())?;
        self.rows.push(row);
        Ok(())
    }

    /// Rows in order.
    #[must_use]
    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    /// Consumes the matrix, returning its rows.
    #[must_use]
    pub fn into_rows(self) -> Vec<BitVec> {
        self.rows
    }

    /// Number of rows.
    #[must_use]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns.
    #[must_use]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Rows of `self` followed by rows of `other`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Dimension`] on a column-count mismatch.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        check_len(self.ncols, other.ncols)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Self {
            rows,
            ncols: self.ncols,
        })
    }

    /// Copy without the row at `index`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] if the index is out of range.
    pub fn without_row(&self, index: usize) -> Result<Self> {
        if index >= self.rows.len() {
            return Err(Error::Validation(format!(
                "row {index} out of range for {} rows",
                self.rows.len()
            )));
        }
        let mut rows = self.rows.clone();
        rows.remove(index);
        Ok(Self {
            rows,
            ncols: self.ncols,
        })
    }

    /// Reduced row echelon form of the row space.
    #[must_use]
    pub fn echelon(&self) -> Echelon {
        Echelon::new(self)
    }

    /// Dimension of the row space.
    #[must_use]
    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// One row per line, `'0'`/`'1'` characters, no separators.
    #[must_use]
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            s.push_str(&r.to_bitstring());
            s.push('\n');
        }
        s
    }

    /// Parses the line-per-row text format; blank lines are skipped.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Parse`] on stray characters or ragged rows, and
    /// [`Error::Validation`] for an empty document (the column count is unknown).
    pub fn from_text(text: &str) -> Result<Self> {
        let rows: Vec<BitVec> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(BitVec::from_bitstring)
            .collect::<Result<_>>()?;
        let Some(first) = rows.first() else {
            return Err(Error::Validation(
                "matrix text has no rows; column count unknown".into(),
            ));
        };
        let ncols = first.len();
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Parse("rows have different lengths".into()));
        }
        Ok(Self { rows, ncols })
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{} [", self.rows.len(), self.ncols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form: nonzero rows with strictly increasing pivot columns,
/// each pivot column zero in every other row.
#[derive(Clone, Debug)]
pub struct Echelon {
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
    ncols: usize,
}

impl Echelon {
    /// Row-reduces `m`, pivoting on the lowest available column first.
    #[must_use]
    pub fn new(m: &F2Matrix) -> Self {
        let mut rows: Vec<BitVec> = m.rows.iter().filter(|r| !r.is_zero()).cloned().collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..m.ncols {
            if rank == rows.len() {
                break;
            }
            let Some(found) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(rank, found);
            let (head, tail) = rows.split_at_mut(rank);
            let (pivot_row, rest) = tail.split_first_mut().expect("pivot row present");
            for r in head.iter_mut().chain(rest.iter_mut()) {
                if r.get(col) {
                    *r ^= pivot_row;
                }
            }
            pivots.push(col);
            rank += 1;
        }
        rows.truncate(rank);
        Self {
            rows,
            pivots,
            ncols: m.ncols,
        }
    }

    /// Dimension of the row space.
    #[must_use]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot column of each reduced row.
    #[must_use]
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The reduced rows (a canonical basis of the row space).
    #[must_use]
    pub fn basis(&self) -> F2Matrix {
        F2Matrix {
            rows: self.rows.clone(),
            ncols: self.ncols,
        }
    }

    /// Residual of `v` after back-substitution against the reduced rows; zero iff
    /// `v` lies in the row space.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Dimension`] on a length mismatch.
    pub fn reduce(&self, v: &BitVec) -> Result<BitVec> {
        check_len(self.ncols, v.len())?;
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out.get(p) {
                out ^= row;
            }
        }
        Ok(out)
    }

    /// Row-space membership by back-substitution.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Dimension`] on a length mismatch.
    pub fn contains(&self, v: &BitVec) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Basis of the right kernel `{x : M x = 0}`, one vector per free column.
    #[must_use]
    pub fn kernel_basis(&self) -> F2Matrix {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVec::zeros(self.ncols);
            v.set(free, true);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            out.push(v);
        }
        F2Matrix {
            rows: out,
            ncols: self.ncols,
        }
    }
}

/// Dimension of the row space of `m`.
#[must_use]
pub fn rank(m: &F2Matrix) -> usize {
    m.rank()
}

/// True iff the two row spaces coincide, tested as
/// `rank(A) = rank(B) = rank(A stacked on B)`.
///
/// # Errors
///
/// Returns [`Error::Dimension`] on a column-count mismatch.
pub fn row_space_equal(a: &F2Matrix, b: &F2Matrix) -> Result<bool> {
    let stacked = a.stack(b)?;
    let ra = a.rank();
    Ok(ra == b.rank() && ra == stacked.rank())
}

/// True iff `v` lies in the row space of `m`, tested as
/// `rank(M) = rank(M with v appended)`.
///
/// [`Echelon::contains`] is the back-substitution counterpart; the two are
/// cross-checked in the test suite.
///
/// # Errors
///
/// Returns [`Error::Dimension`] on a length mismatch.
pub fn in_row_space(v: &BitVec, m: &F2Matrix) -> Result<bool> {
    check_len(m.ncols(), v.len())?;
    let mut with = m.clone();
    with.push(v.clone())?;
    Ok(with.rank() == m.rank())
}

/// Basis of `{v : M v = 0}`; its size is `ncols − rank(M)`.
#[must_use]
pub fn kernel_basis(m: &F2Matrix) -> F2Matrix {
    m.echelon().kernel_basis()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&str]) -> F2Matrix {
        F2Matrix::from_text(&rows.join("\n")).unwrap()
    }

    #[test]
    fn identity_rank_and_kernel() {
        let id = F2Matrix::identity(3);
        assert_eq!(id.rank(), 3);
        assert_eq!(kernel_basis(&id).nrows(), 0);
    }

    #[test]
    fn parity_code_kernel() {
        let m = mat(&["1111"]);
        let k = kernel_basis(&m);
        assert_eq!(k.nrows(), 3);
        assert_eq!(k.rank(), 3);
        for r in k.rows() {
            assert_eq!(r.weight() % 2, 0);
        }
    }

    #[test]
    fn empty_matrix_has_rank_zero() {
        assert_eq!(F2Matrix::empty(5).rank(), 0);
    }

    #[test]
    fn inner_products() {
        let u = BitVec::from_indices(4, [0]).unwrap();
        assert!(inner(&u, &u).unwrap());
        let v = BitVec::from_indices(4, [1, 2]).unwrap();
        assert!(!inner(&u, &v).unwrap());
        assert!(inner(&u, &BitVec::zeros(3)).is_err());
    }

    #[test]
    fn membership_of_zero_and_sums() {
        let m = mat(&["1100", "0110", "0001"]);
        assert!(in_row_space(&BitVec::zeros(4), &m).unwrap());
        let mut s = m.rows()[0].clone();
        s ^= &m.rows()[2];
        assert!(in_row_space(&s, &m).unwrap());
        assert!(!in_row_space(&BitVec::from_bitstring("1000").unwrap(), &m).unwrap());
        assert!(in_row_space(&BitVec::zeros(3), &m).is_err());
    }

    #[test]
    fn row_space_equality_under_permutation() {
        let a = mat(&["1100", "0110", "0011"]);
        let b = mat(&["0011", "1100", "0110"]);
        assert!(row_space_equal(&a, &b).unwrap());
        assert!(!row_space_equal(&a, &mat(&["1000"])).unwrap());
        assert!(row_space_equal(&a, &F2Matrix::empty(5)).is_err());
    }

    #[test]
    fn text_round_trip() {
        let m = mat(&["101", "011"]);
        assert_eq!(F2Matrix::from_text(&m.to_text()).unwrap(), m);
        assert!(F2Matrix::from_text("10\n1").is_err());
        assert!(F2Matrix::from_text("12").is_err());
    }

    #[test]
    fn long_vectors_cross_word_boundaries() {
        let mut v = BitVec::ones(130);
        assert_eq!(v.weight(), 130);
        v.flip(64);
        assert_eq!(v.iter_ones().count(), 129);
        assert_eq!(v.delete(0).unwrap().len(), 129);
        assert_eq!(v.delete(64).unwrap().weight(), 129);
        assert_eq!(BitVec::zeros(130).first_one(), None);
        assert_eq!(BitVec::from_indices(130, [100]).unwrap().first_one(), Some(100));
    }
}
