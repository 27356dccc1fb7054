//! Boolean functions `f: Z_2^n -> Z_2`, the point basis `m^a` and the
//! up-set basis `x^a`, and the shift, derivative and multiplication
//! operators acting on them.
//!
//! A function is stored as a mask-ordered truth vector. The card-lex view
//! (`from_card_lex` / `card_lex_bits`) is what files and matrices see.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::subset::{subset_sum_transform, CardLex, Dimension, Subset, SumDirection};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    dim: Dimension,
    truth: BitVector,
}

/// Which basis a coefficient vector refers to when converting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionBasisChange {
    MToX,
    XToM,
}

impl BooleanFunction {
    pub fn zero(dim: Dimension) -> Self {
        BooleanFunction {
            dim,
            truth: BitVector::zeros(dim.size()),
        }
    }

    pub fn one(dim: Dimension) -> Self {
        BooleanFunction {
            dim,
            truth: BitVector::ones(dim.size()),
        }
    }

    /// From a truth vector indexed by subset mask.
    pub fn from_mask_bits(dim: Dimension, truth: BitVector) -> Result<Self> {
        if truth.len() != dim.size() {
            return Err(Error::dimension(format!(
                "truth vector has {} entries, expected 2^{dim} = {}",
                truth.len(),
                dim.size()
            )));
        }
        Ok(BooleanFunction { dim, truth })
    }

    /// From a truth vector indexed in card-lex order.
    pub fn from_card_lex(dim: Dimension, truth: &BitVector) -> Result<Self> {
        if truth.len() != dim.size() {
            return Err(Error::dimension(format!(
                "truth vector has {} entries, expected 2^{dim} = {}",
                truth.len(),
                dim.size()
            )));
        }
        Ok(BooleanFunction {
            dim,
            truth: CardLex::get(dim).card_lex_to_mask(truth),
        })
    }

    /// The indicator of a family of subsets.
    pub fn from_subsets<I: IntoIterator<Item = Subset>>(dim: Dimension, family: I) -> Self {
        let mut f = BooleanFunction::zero(dim);
        for s in family {
            assert!(dim.contains(s), "subset {s} outside [{dim}]");
            f.truth.set(s.index(), true);
        }
        f
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn mask_bits(&self) -> &BitVector {
        &self.truth
    }

    pub fn card_lex_bits(&self) -> BitVector {
        CardLex::get(self.dim).mask_to_card_lex(&self.truth)
    }

    pub fn value(&self, a: Subset) -> bool {
        self.truth.get(a.index())
    }

    pub fn set_value(&mut self, a: Subset, v: bool) {
        self.truth.set(a.index(), v);
    }

    pub fn is_zero(&self) -> bool {
        self.truth.is_zero()
    }

    /// The points where `f` is 1, in mask order.
    pub fn support(&self) -> impl Iterator<Item = Subset> + '_ {
        self.truth.iter_ones().map(|i| Subset::from_mask(i as u32))
    }

    fn same_dim(&self, other: &BooleanFunction) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::dimension(format!(
                "functions on n = {} and n = {}",
                self.dim, other.dim
            )));
        }
        Ok(())
    }

    /// Pointwise sum.
    pub fn add(&self, other: &BooleanFunction) -> Result<BooleanFunction> {
        self.same_dim(other)?;
        Ok(BooleanFunction {
            dim: self.dim,
            truth: &self.truth ^ &other.truth,
        })
    }

    /// Pointwise product.
    pub fn mul(&self, other: &BooleanFunction) -> Result<BooleanFunction> {
        self.same_dim(other)?;
        Ok(BooleanFunction {
            dim: self.dim,
            truth: &self.truth & &other.truth,
        })
    }

    pub(crate) fn add_assign(&mut self, other: &BooleanFunction) {
        debug_assert_eq!(self.dim, other.dim);
        self.truth.xor_with(&other.truth);
    }

    /// `(s^d f)(a) = f(a + d)`.
    pub fn shift(&self, d: Subset) -> Result<BooleanFunction> {
        self.dim.check(d)?;
        if d.is_empty() {
            return Ok(self.clone());
        }
        let mut out = BitVector::zeros(self.dim.size());
        for src in self.truth.iter_ones() {
            out.set(src ^ d.index(), true);
        }
        Ok(BooleanFunction {
            dim: self.dim,
            truth: out,
        })
    }

    /// `∂^d f = sum over c ⊆ d of s^c f`.
    pub fn derivative(&self, d: Subset) -> Result<BooleanFunction> {
        self.dim.check(d)?;
        let mut acc = BooleanFunction::zero(self.dim);
        for c in d.subsets() {
            acc.add_assign(&self.shift(c)?);
        }
        Ok(acc)
    }

    /// Parses the function text format: a line with `n`, then `2^n`
    /// characters from `{0,1}` in card-lex order. `#` lines are comments.
    pub fn parse(text: &str, n_max: u32) -> Result<BooleanFunction> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (nline, nstr) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing dimension line"))?;
        let n: u32 = nstr
            .parse()
            .map_err(|_| Error::parse(nline, format!("invalid dimension {nstr:?}")))?;
        let dim = Dimension::with_limit(n, n_max)?;
        let (bline, bits) = lines
            .next()
            .ok_or_else(|| Error::parse(nline + 1, "missing truth vector line"))?;
        if bits.len() != dim.size() {
            return Err(Error::parse(
                bline,
                format!("expected {} truth values, found {}", dim.size(), bits.len()),
            ));
        }
        let mut v = BitVector::zeros(dim.size());
        for (k, ch) in bits.bytes().enumerate() {
            match ch {
                b'0' => {}
                b'1' => v.set(k, true),
                other => {
                    return Err(Error::parse(
                        bline,
                        format!("invalid character {:?}", other as char),
                    ))
                }
            }
        }
        if let Some((extra, _)) = lines.next() {
            return Err(Error::parse(extra, "unexpected trailing content"));
        }
        BooleanFunction::from_card_lex(dim, &v)
    }

    pub fn to_text(&self) -> String {
        format!("{}\n{}\n", self.dim, self.card_lex_bits())
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BooleanFunction(n={}, {})",
            self.dim,
            self.card_lex_bits()
        )
    }
}

/// `m^a`: 1 exactly at the point `a`.
pub fn m_basis(a: Subset, dim: Dimension) -> Result<BooleanFunction> {
    dim.check(a)?;
    let mut f = BooleanFunction::zero(dim);
    f.truth.set(a.index(), true);
    Ok(f)
}

/// `x^a`: 1 exactly on the supersets of `a`.
pub fn x_basis(a: Subset, dim: Dimension) -> Result<BooleanFunction> {
    dim.check(a)?;
    let rest = dim.full_set().difference(a);
    let mut f = BooleanFunction::zero(dim);
    for extra in rest.subsets() {
        f.truth.set(a.union(extra).index(), true);
    }
    Ok(f)
}

/// Converts coefficients (mask-indexed, one per basis element) between the
/// `m` and `x` bases, using `x^a = sum over b ⊇ a of m^b` and
/// `m^a = sum over b ⊇ a of x^b`.
///
/// Each basis element spreads its coefficient over the up-set of its index,
/// so the new coefficient at `b` is the sum of the old ones at `a ⊆ b` in
/// both directions.
pub fn change_function_basis(coeffs: &BitVector, direction: FunctionBasisChange) -> BitVector {
    match direction {
        FunctionBasisChange::MToX | FunctionBasisChange::XToM => {
            subset_sum_transform(coeffs, SumDirection::Down)
        }
    }
}
