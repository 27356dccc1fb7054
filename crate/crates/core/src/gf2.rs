//! Bit-packed vectors and matrices over GF(2).
//!
//! Rows are packed little-endian into `u64` words: bit `j` of a row lives in
//! word `j / 64` at position `j % 64`. Storage past the logical length is
//! always zero, so word-level equality and popcounts are exact.

use std::fmt;
use std::ops::{Add, BitAnd, BitXor, BitXorAssign};

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A fixed-length vector over GF(2).
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

    pub fn ones(len: usize) -> Self {
        let mut v = BitVector {
            len,
            words: vec![u64::MAX; words_for(len)],
        };
        v.clear_tail();
        v
    }

    /// Builds a vector from explicit 0/1 entries.
    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = BitVector::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector of `len` bits from packed words. Bits past `len` are dropped.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        let mut v = BitVector { len, words };
        v.clear_tail();
        v
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Parity of the number of set bits.
    pub fn parity(&self) -> bool {
        self.words.iter().fold(0u32, |acc, w| acc ^ w.count_ones()) & 1 == 1
    }

    /// Parity of the AND of two vectors, i.e. their GF(2) dot product.
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// XORs `other` into `self`. Lengths must agree.
    pub fn xor_with(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn and_with(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Iterates the positions of set bits in increasing order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let tz = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + tz)
                }
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector(")?;
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl BitXorAssign<&BitVector> for BitVector {
    fn bitxor_assign(&mut self, rhs: &BitVector) {
        self.xor_with(rhs);
    }
}

impl BitXor for &BitVector {
    type Output = BitVector;
    fn bitxor(self, rhs: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_with(rhs);
        out
    }
}

impl BitAnd for &BitVector {
    type Output = BitVector;
    fn bitand(self, rhs: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.and_with(rhs);
        out
    }
}

/// A dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    row_data: Vec<BitVector>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            rows,
            cols,
            row_data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Gf2Matrix::zeros(size, size);
        for i in 0..size {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows, all of which must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::dimension(format!(
                "row {i} has {} columns, expected {cols}",
                r.len()
            )));
        }
        Ok(Gf2Matrix {
            rows: rows.len(),
            cols,
            row_data: rows,
        })
    }

    /// Convenience constructor from nested 0/1 literals. Panics on ragged input.
    pub fn from_bits<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let data = rows
            .iter()
            .map(|r| {
                let r = r.as_ref();
                assert_eq!(r.len(), cols, "ragged matrix literal");
                BitVector::from_bools(r.iter().map(|&b| b != 0))
            })
            .collect();
        Gf2Matrix {
            rows: rows.len(),
            cols,
            row_data: data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.row_data[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.row_data[i].set(j, value);
    }

    #[inline]
    pub fn flip(&mut self, i: usize, j: usize) {
        self.row_data[i].flip(j);
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.row_data[i]
    }

    pub(crate) fn row_mut(&mut self, i: usize) -> &mut BitVector {
        &mut self.row_data[i]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &BitVector> {
        self.row_data.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.row_data.iter().all(BitVector::is_zero)
    }

    pub fn count_ones(&self) -> usize {
        self.row_data.iter().map(BitVector::count_ones).sum()
    }

    /// Column `j` as a vector of length `rows`.
    pub fn column(&self, j: usize) -> BitVector {
        BitVector::from_bools(self.row_data.iter().map(|r| r.get(j)))
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows);
        for (i, row) in self.row_data.iter().enumerate() {
            for j in row.iter_ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Entrywise XOR.
    pub fn add(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.shape() != other.shape() {
            return Err(Error::dimension(format!(
                "cannot add {}x{} and {}x{} matrices",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.row_data.iter_mut().zip(&other.row_data) {
            a.xor_with(b);
        }
        Ok(out)
    }

    /// Matrix product over GF(2). For each set bit `k` of row `i` of `self`,
    /// row `k` of `other` is XORed into row `i` of the result.
    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != other.rows {
            return Err(Error::dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Gf2Matrix::zeros(self.rows, other.cols);
        for (dst, src) in out.row_data.iter_mut().zip(&self.row_data) {
            for k in src.iter_ones() {
                dst.xor_with(&other.row_data[k]);
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self · v`.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::dimension(format!(
                "cannot multiply {}x{} matrix by vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(BitVector::from_bools(
            self.row_data.iter().map(|r| r.dot(v)),
        ))
    }

    /// Row rank over GF(2). Works on a copy; `self` is left untouched.
    pub fn rank(&self) -> usize {
        let mut rows = self.row_data.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, p);
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot = &head[rank];
            for r in tail.iter_mut() {
                if r.get(col) {
                    r.xor_with(pivot);
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Inverse by Gauss-Jordan elimination on `[self | I]`; `None` when singular.
    pub fn inverse(&self) -> Result<Option<Gf2Matrix>> {
        if !self.is_square() {
            return Err(Error::dimension(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut left = self.row_data.clone();
        let mut right = Gf2Matrix::identity(n).row_data;
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| left[r].get(col)) else {
                return Ok(None);
            };
            left.swap(col, p);
            right.swap(col, p);
            let pivot_l = left[col].clone();
            let pivot_r = right[col].clone();
            for r in 0..n {
                if r != col && left[r].get(col) {
                    left[r].xor_with(&pivot_l);
                    right[r].xor_with(&pivot_r);
                }
            }
        }
        Ok(Some(Gf2Matrix {
            rows: n,
            cols: n,
            row_data: right,
        }))
    }

    /// Parses the matrix text format: a `rows cols` header, then one line of
    /// `cols` characters from `{0,1}` per row. Lines starting with `#` and
    /// blank lines are skipped.
    pub fn parse(text: &str) -> Result<Gf2Matrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing \"rows cols\" header"))?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        let [r, c] = dims[..] else {
            return Err(Error::parse(hline, "expected \"rows cols\""));
        };
        let rows: usize = r
            .parse()
            .map_err(|_| Error::parse(hline, format!("invalid row count {r:?}")))?;
        let cols: usize = c
            .parse()
            .map_err(|_| Error::parse(hline, format!("invalid column count {c:?}")))?;

        let mut data = Vec::with_capacity(rows);
        for (lineno, line) in lines {
            if data.len() == rows {
                return Err(Error::parse(lineno, "more rows than declared"));
            }
            if line.len() != cols {
                return Err(Error::parse(
                    lineno,
                    format!("expected {cols} entries, found {}", line.chars().count()),
                ));
            }
            let mut row = BitVector::zeros(cols);
            for (j, ch) in line.bytes().enumerate() {
                match ch {
                    b'0' => {}
                    b'1' => row.set(j, true),
                    other => {
                        return Err(Error::parse(
                            lineno,
                            format!("invalid character {:?}", other as char),
                        ))
                    }
                }
            }
            data.push(row);
        }
        if data.len() != rows {
            let last = text.lines().count().max(1);
            return Err(Error::parse(
                last,
                format!("expected {rows} rows, found {}", data.len()),
            ));
        }
        Ok(Gf2Matrix {
            rows,
            cols,
            row_data: data,
        })
    }

    /// Serializes to the matrix text format (trailing newline included).
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for row in &self.row_data {
            s.push_str(&row.to_string());
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{} [", self.rows, self.cols)?;
        for row in &self.row_data {
            writeln!(f, "  {row}")?;
        }
        write!(f, "]")
    }
}

impl Add for &Gf2Matrix {
    type Output = Gf2Matrix;
    /// Panics on shape mismatch; use [`Gf2Matrix::add`] for a checked sum.
    fn add(self, rhs: &Gf2Matrix) -> Gf2Matrix {
        Gf2Matrix::add(self, rhs).expect("matrix shapes differ")
    }
}
