//! Subsets of `[n] = {1, ..., n}` as bitmasks, the cardinality-lexicographic
//! enumeration of `P[n]`, and the subset/superset sum transforms over GF(2).
//!
//! Two indexings of `P[n]` coexist in this crate:
//!
//! * **mask order**: position `s.mask()`; used by every internal buffer
//!   because the sum transforms are butterflies over mask bits.
//! * **card-lex order**: sort by cardinality, then lexicographically by the
//!   increasing element sequence (`{} {1} {2} {1,2}` for `n = 2`); used by
//!   matrices, file formats and printed output.
//!
//! Conversions go through [`CardLex`], which holds both permutations.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Default cap on `n` for operator computations.
pub const DEFAULT_N_MAX: u32 = 10;

/// Number of ground-set elements, `0 <= n <= limit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dimension(u32);

impl Dimension {
    /// Hard ceiling of the representation: masks are `u32` and lookup tables
    /// have `2^n` entries.
    pub const CEILING: u32 = 16;

    /// `n` checked against [`DEFAULT_N_MAX`].
    pub fn new(n: u32) -> Result<Self> {
        Self::with_limit(n, DEFAULT_N_MAX)
    }

    /// `n` checked against a caller-supplied cap (itself clamped to [`Self::CEILING`]).
    pub fn with_limit(n: u32, limit: u32) -> Result<Self> {
        let cap = limit.min(Self::CEILING);
        if n > cap {
            return Err(Error::Capacity {
                what: "dimension".into(),
                cap,
                n,
            });
        }
        Ok(Dimension(n))
    }

    pub fn n(self) -> u32 {
        self.0
    }

    /// `2^n`, the number of subsets of `[n]`.
    pub fn size(self) -> usize {
        1usize << self.0
    }

    /// Mask of the full set `[n]`.
    pub fn full_mask(self) -> u32 {
        ((1u64 << self.0) - 1) as u32
    }

    pub fn full_set(self) -> Subset {
        Subset(self.full_mask())
    }

    /// All subsets in card-lex order.
    pub fn subsets(self) -> impl ExactSizeIterator<Item = Subset> {
        CardLex::get(self).order.iter().map(|&m| Subset(m))
    }

    /// All subsets in mask order.
    pub fn subsets_by_mask(self) -> impl ExactSizeIterator<Item = Subset> {
        (0..self.size() as u32).map(Subset)
    }

    pub fn contains(self, s: Subset) -> bool {
        s.0 & !self.full_mask() == 0
    }

    pub(crate) fn check(self, s: Subset) -> Result<Subset> {
        if self.contains(s) {
            Ok(s)
        } else {
            Err(Error::domain(format!(
                "subset {s} is not contained in [{}]",
                self.0
            )))
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of `[n]`; element `i` is present iff bit `i - 1` of the mask is set.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_mask(mask: u32) -> Self {
        Subset(mask)
    }

    /// `{i}` for `1 <= i <= 32`.
    pub fn singleton(i: u32) -> Self {
        assert!((1..=32).contains(&i), "element {i} out of range");
        Subset(1 << (i - 1))
    }

    /// Builds a subset from 1-based elements. Panics on elements outside `1..=32`.
    pub fn from_elements<I: IntoIterator<Item = u32>>(elems: I) -> Self {
        elems
            .into_iter()
            .fold(Subset::EMPTY, |acc, i| acc.union(Subset::singleton(i)))
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Cardinality.
    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, i: u32) -> bool {
        (1..=32).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    /// Elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let i = m.trailing_zeros();
                m &= m - 1;
                Some(i + 1)
            }
        })
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Symmetric difference, written `a + b` throughout.
    pub fn sym_diff(self, other: Subset) -> Subset {
        Subset(self.0 ^ other.0)
    }

    /// Iterates every subset of `self`.
    pub fn subsets(self) -> SubsetsOf {
        SubsetsOf {
            of: self.0,
            next: Some(self.0),
        }
    }

    /// Parses subset syntax and checks it fits in `dim`.
    pub fn parse_in(text: &str, dim: Dimension) -> std::result::Result<Subset, String> {
        let s: Subset = text.parse()?;
        if !dim.contains(s) {
            let max = s.elements().last().unwrap_or(0);
            return Err(format!("element {max} exceeds n = {dim}"));
        }
        Ok(s)
    }
}

/// Symmetric difference, matching the `c + e` notation for subsets.
impl Add for Subset {
    type Output = Subset;
    fn add(self, rhs: Subset) -> Subset {
        self.sym_diff(rhs)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.elements().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `{}` or `{i,j,k}` with strictly increasing positive elements.
/// Whitespace around braces and commas is tolerated.
impl FromStr for Subset {
    type Err = String;

    fn from_str(text: &str) -> std::result::Result<Self, String> {
        let t = text.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| format!("expected a subset like {{1,3}}, found {t:?}"))?;
        if inner.trim().is_empty() {
            return Ok(Subset::EMPTY);
        }
        let mut mask = 0u32;
        let mut prev = 0u32;
        for part in inner.split(',') {
            let part = part.trim();
            let i: u32 = part
                .parse()
                .map_err(|_| format!("invalid subset element {part:?}"))?;
            if i == 0 || i > Dimension::CEILING {
                return Err(format!("subset element {i} out of range"));
            }
            if i <= prev {
                return Err(format!(
                    "subset elements must be strictly increasing in {t:?}"
                ));
            }
            prev = i;
            mask |= 1 << (i - 1);
        }
        Ok(Subset(mask))
    }
}

/// Iterator over all subsets of a fixed set, via the `(sub - 1) & d` descent.
/// Yields `d` first and `{}` last.
#[derive(Debug, Clone)]
pub struct SubsetsOf {
    of: u32,
    next: Option<u32>,
}

impl Iterator for SubsetsOf {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & self.of)
        };
        Some(Subset(cur))
    }
}

/// Card-lex lookup tables for one dimension, built once and shared.
#[derive(Debug)]
pub struct CardLex {
    /// `order[k]` is the mask of the `k`-th subset in card-lex order.
    order: Vec<u32>,
    /// `rank[mask]` is the card-lex index of `mask`.
    rank: Vec<u32>,
}

impl CardLex {
    pub fn get(dim: Dimension) -> &'static CardLex {
        static TABLES: [OnceLock<CardLex>; Dimension::CEILING as usize + 1] =
            [const { OnceLock::new() }; Dimension::CEILING as usize + 1];
        TABLES[dim.n() as usize].get_or_init(|| CardLex::build(dim))
    }

    fn build(dim: Dimension) -> CardLex {
        let mut order: Vec<u32> = (0..dim.size() as u32).collect();
        order.sort_by_cached_key(|&m| (m.count_ones(), Subset(m).elements().collect::<Vec<_>>()));
        let mut rank = vec![0u32; dim.size()];
        for (k, &m) in order.iter().enumerate() {
            rank[m as usize] = k as u32;
        }
        CardLex { order, rank }
    }

    #[inline]
    pub fn index_of(&self, s: Subset) -> usize {
        self.rank[s.index()] as usize
    }

    #[inline]
    pub fn subset_at(&self, idx: usize) -> Subset {
        Subset(self.order[idx])
    }

    /// Re-indexes a mask-ordered vector into card-lex order.
    pub fn mask_to_card_lex(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.order.len());
        BitVector::from_bools(self.order.iter().map(|&m| v.get(m as usize)))
    }

    /// Re-indexes a card-lex-ordered vector into mask order.
    pub fn card_lex_to_mask(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.order.len());
        BitVector::from_bools(self.rank.iter().map(|&k| v.get(k as usize)))
    }
}

/// Position of `s` in the card-lex enumeration of `P[n]`.
pub fn index_of(s: Subset, dim: Dimension) -> Result<usize> {
    dim.check(s)?;
    Ok(CardLex::get(dim).index_of(s))
}

/// Inverse of [`index_of`].
pub fn subset_of(idx: usize, dim: Dimension) -> Result<Subset> {
    if idx >= dim.size() {
        return Err(Error::domain(format!(
            "card-lex index {idx} out of range for n = {dim}"
        )));
    }
    Ok(CardLex::get(dim).subset_at(idx))
}

/// Direction of a subset-sum transform over GF(2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumDirection {
    /// `g(d) = sum over c ⊆ d of f(c)`.
    Down,
    /// `g(c) = sum over d ⊇ c of f(d)`.
    Up,
}

// Positions (within a 64-bit word) whose bit `i` of the index is clear.
const LOW_HALF: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// Subset-sum transform of a function `P[n] -> Z_2` stored in mask order.
/// Each direction is an involution over GF(2).
pub fn subset_sum_transform(f: &BitVector, direction: SumDirection) -> BitVector {
    let mut g = f.clone();
    subset_sum_in_place(&mut g, direction);
    g
}

/// In-place form of [`subset_sum_transform`]. `f.len()` must be a power of two.
pub fn subset_sum_in_place(f: &mut BitVector, direction: SumDirection) {
    let len = f.len();
    assert!(len.is_power_of_two(), "length {len} is not a power of two");
    let n = len.trailing_zeros();
    let words = f.words_mut();
    for i in 0..n {
        if i < 6 {
            let lo = LOW_HALF[i as usize];
            let shift = 1u32 << i;
            for w in words.iter_mut() {
                *w ^= match direction {
                    SumDirection::Down => (*w & lo) << shift,
                    SumDirection::Up => (*w & !lo) >> shift,
                };
            }
        } else {
            let stride = 1usize << (i - 6);
            for base in (0..words.len()).step_by(2 * stride) {
                for k in base..base + stride {
                    match direction {
                        SumDirection::Down => words[k + stride] ^= words[k],
                        SumDirection::Up => words[k] ^= words[k + stride],
                    }
                }
            }
        }
    }
}
