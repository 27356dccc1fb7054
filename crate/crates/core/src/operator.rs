//! Digraphs on `P[n]` read as Boolean differential operators.
//!
//! A digraph `A ⊆ P[n] × P[n]` names the operator `Σ_{(c,d) ∈ A} u^c v^d`
//! where `u` is the multiplication factor (`m` or `x`) and `v` the
//! difference factor (`s` or `∂`) of the chosen [`BasisId`]. The matrix of
//! that operator in the `{m^a}` basis is [`operator_matrix`]; its inverse is
//! [`operator_digraph`].
//!
//! Every basis is reduced to MS by a "hat" transform: a subset sum over the
//! first coordinate for the `x` factor and a superset sum over the second
//! coordinate for the `∂` factor. In MS the matrix is simply
//! `M(A)_{a,b} = A(a, a + b)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::function::{change_function_basis, BooleanFunction, FunctionBasisChange};
use crate::gf2::Gf2Matrix;
use crate::subset::{subset_sum_in_place, CardLex, Dimension, Subset, SumDirection};

/// The four operator bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisId {
    /// `m^c s^d`
    MS,
    /// `m^c ∂^d`
    MD,
    /// `x^c s^d`
    XS,
    /// `x^c ∂^d`
    XD,
}

impl BasisId {
    pub const ALL: [BasisId; 4] = [BasisId::MS, BasisId::MD, BasisId::XS, BasisId::XD];

    /// Whether the multiplication factor is `x^c` (rather than `m^c`).
    pub fn uses_x(self) -> bool {
        matches!(self, BasisId::XS | BasisId::XD)
    }

    /// Whether the difference factor is `∂^d` (rather than `s^d`).
    pub fn uses_derivative(self) -> bool {
        matches!(self, BasisId::MD | BasisId::XD)
    }

    pub fn function_symbol(self) -> &'static str {
        if self.uses_x() {
            "x"
        } else {
            "m"
        }
    }

    pub fn operator_symbol(self) -> &'static str {
        if self.uses_derivative() {
            "∂"
        } else {
            "s"
        }
    }

    /// Symbol of the pulled-back product on digraphs.
    pub fn product_symbol(self) -> &'static str {
        match self {
            BasisId::MS => "★",
            BasisId::MD => "∘",
            BasisId::XS => "∗",
            BasisId::XD => "•",
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BasisId::MS => "ms",
            BasisId::MD => "md",
            BasisId::XS => "xs",
            BasisId::XD => "xd",
        }
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BasisId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "ms" => Ok(BasisId::MS),
            "md" | "m∂" => Ok(BasisId::MD),
            "xs" => Ok(BasisId::XS),
            "xd" | "x∂" => Ok(BasisId::XD),
            _ => Err(format!("unknown basis {s:?} (expected ms, md, xs or xd)")),
        }
    }
}

/// A simple directed graph (loops allowed) on the vertex set `P[n]`,
/// i.e. a characteristic function `A: P[n] × P[n] -> Z_2`.
///
/// The pair `(a, b) ∈ A` is drawn as an edge from `b` to `a`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    dim: Dimension,
    // row = mask of the first coordinate, column = mask of the second
    grid: Gf2Matrix,
}

impl Digraph {
    pub fn empty(dim: Dimension) -> Self {
        Digraph {
            dim,
            grid: Gf2Matrix::zeros(dim.size(), dim.size()),
        }
    }

    /// `{(c, {}) : c ∈ P[n]}`, the identity operator in the MS and MD bases.
    pub fn diagonal(dim: Dimension) -> Self {
        let mut g = Digraph::empty(dim);
        for c in dim.subsets_by_mask() {
            g.insert(c, Subset::EMPTY);
        }
        g
    }

    /// The digraph of the identity operator in `basis`.
    pub fn identity(dim: Dimension, basis: BasisId) -> Self {
        if basis.uses_x() {
            Digraph::from_edges(dim, [(Subset::EMPTY, Subset::EMPTY)]).expect("empty set fits")
        } else {
            Digraph::diagonal(dim)
        }
    }

    /// Builds a digraph from edges; repeated edges are kept once.
    pub fn from_edges<I: IntoIterator<Item = (Subset, Subset)>>(
        dim: Dimension,
        edges: I,
    ) -> Result<Self> {
        let mut g = Digraph::empty(dim);
        for (c, d) in edges {
            dim.check(c)?;
            dim.check(d)?;
            g.insert(c, d);
        }
        Ok(g)
    }

    /// `family × {b}`.
    pub fn from_column(family: &BooleanFunction, b: Subset) -> Self {
        let mut g = Digraph::empty(family.dim());
        for a in family.support() {
            g.insert(a, b);
        }
        g
    }

    /// `{c} × family`.
    pub fn from_row(c: Subset, family: &BooleanFunction) -> Self {
        let mut g = Digraph::empty(family.dim());
        for d in family.support() {
            g.insert(c, d);
        }
        g
    }

    pub(crate) fn grid(&self) -> &Gf2Matrix {
        &self.grid
    }

    pub(crate) fn grid_mut(&mut self) -> &mut Gf2Matrix {
        &mut self.grid
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn contains(&self, c: Subset, d: Subset) -> bool {
        self.dim.contains(c) && self.dim.contains(d) && self.grid.get(c.index(), d.index())
    }

    pub fn insert(&mut self, c: Subset, d: Subset) {
        self.grid.set(c.index(), d.index(), true);
    }

    pub fn remove(&mut self, c: Subset, d: Subset) {
        self.grid.set(c.index(), d.index(), false);
    }

    pub fn toggle(&mut self, c: Subset, d: Subset) {
        self.grid.flip(c.index(), d.index());
    }

    pub fn edge_count(&self) -> usize {
        self.grid.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_zero()
    }

    /// Edges sorted by the card-lex indices of `(c, d)`.
    pub fn edges(&self) -> Vec<(Subset, Subset)> {
        let cl = CardLex::get(self.dim);
        let mut out: Vec<(Subset, Subset)> = self.edges_unordered().collect();
        out.sort_by_key(|&(c, d)| (cl.index_of(c), cl.index_of(d)));
        out
    }

    /// Edges in mask order of `(c, d)`.
    pub fn edges_unordered(&self) -> impl Iterator<Item = (Subset, Subset)> + '_ {
        self.grid.row_iter().enumerate().flat_map(|(c, row)| {
            row.iter_ones()
                .map(move |d| (Subset::from_mask(c as u32), Subset::from_mask(d as u32)))
        })
    }

    fn same_dim(&self, other: &Digraph) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::dimension(format!(
                "digraphs on P[{}] and P[{}]",
                self.dim, other.dim
            )));
        }
        Ok(())
    }

    /// Symmetric difference of edge sets, the sum on digraphs.
    pub fn sym_diff(&self, other: &Digraph) -> Result<Digraph> {
        self.same_dim(other)?;
        Ok(Digraph {
            dim: self.dim,
            grid: self.grid.add(&other.grid)?,
        })
    }

    pub fn intersection(&self, other: &Digraph) -> Result<Digraph> {
        self.same_dim(other)?;
        let mut out = self.clone();
        for r in 0..self.dim.size() {
            out.grid.row_mut(r).and_with(other.grid.row(r));
        }
        Ok(out)
    }

    /// `A_b = {a : (a, b) ∈ A}`, the first coordinates of edges ending in `b`.
    pub fn column_slice(&self, b: Subset) -> BooleanFunction {
        let col = self.grid.column(b.index());
        BooleanFunction::from_mask_bits(self.dim, col).expect("column has 2^n entries")
    }

    /// `{d : (c, d) ∈ A}`.
    pub fn row_slice(&self, c: Subset) -> BooleanFunction {
        BooleanFunction::from_mask_bits(self.dim, self.grid.row(c.index()).clone())
            .expect("row has 2^n entries")
    }

    /// Subset/superset sum along the second coordinate, row by row.
    pub(crate) fn sum_second(&mut self, dir: SumDirection) {
        for r in 0..self.dim.size() {
            subset_sum_in_place(self.grid.row_mut(r), dir);
        }
    }

    /// Subset/superset sum along the first coordinate, whole rows at a time.
    pub(crate) fn sum_first(&mut self, dir: SumDirection) {
        let size = self.dim.size();
        for i in 0..self.dim.n() {
            let bit = 1usize << i;
            for lo in (0..size).filter(|r| r & bit == 0) {
                let hi = lo | bit;
                let (dst, src) = match dir {
                    SumDirection::Down => (hi, lo),
                    SumDirection::Up => (lo, hi),
                };
                let src_row = self.grid.row(src).clone();
                self.grid.row_mut(dst).xor_with(&src_row);
            }
        }
    }

    /// Parses the digraph text format: a line with `n`, then one edge per
    /// line as `<c> <d>` in subset syntax. `#` lines are comments; a
    /// repeated edge is an error.
    pub fn parse(text: &str, n_max: u32) -> Result<Digraph> {
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
        let mut g = Digraph::empty(dim);
        for (lineno, line) in lines {
            let (c, d) = parse_edge(line, dim).map_err(|m| Error::parse(lineno, m))?;
            if g.contains(c, d) {
                return Err(Error::parse(lineno, format!("duplicate edge {c} {d}")));
            }
            g.insert(c, d);
        }
        Ok(g)
    }

    /// Canonical text form: edges sorted by card-lex `(c, d)`.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.dim);
        for (c, d) in self.edges() {
            s.push_str(&format!("{c} {d}\n"));
        }
        s
    }
}

fn parse_edge(line: &str, dim: Dimension) -> std::result::Result<(Subset, Subset), String> {
    let close = line
        .find('}')
        .ok_or_else(|| format!("expected an edge \"<c> <d>\", found {line:?}"))?;
    let (first, rest) = line.split_at(close + 1);
    if rest.trim().is_empty() {
        return Err(format!("edge {line:?} is missing its second subset"));
    }
    let c = Subset::parse_in(first, dim)?;
    let d = Subset::parse_in(rest, dim)?;
    Ok((c, d))
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, {{", self.dim)?;
        for (k, (c, d)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({c},{d})")?;
        }
        f.write_str("})")
    }
}

/// Re-expresses `A` (coefficients in `basis`) in the MS basis. Each hat
/// transform is an involution, so the same call maps MS back to `basis`.
fn hat(a: &Digraph, basis: BasisId) -> Digraph {
    let mut out = a.clone();
    if basis.uses_x() {
        // x^e = Σ_{c ⊇ e} m^c, so Â(c, d) = Σ_{e ⊆ c} A(e, d)
        out.sum_first(SumDirection::Down);
    }
    if basis.uses_derivative() {
        // ∂^f = Σ_{d ⊆ f} s^d, so Â(c, d) = Σ_{f ⊇ d} A(c, f)
        out.sum_second(SumDirection::Up);
    }
    out
}

/// `l_i(A)(f)`: applies the operator named by `A` in `basis` to `f`,
/// term by term from the definitions of `m^c`, `x^c`, `s^d` and `∂^d`.
pub fn apply_operator(a: &Digraph, basis: BasisId, f: &BooleanFunction) -> Result<BooleanFunction> {
    if a.dim() != f.dim() {
        return Err(Error::dimension(format!(
            "operator on P[{}] applied to a function of {} arguments",
            a.dim(),
            f.dim()
        )));
    }
    let dim = a.dim();
    let by_second = a.grid().transpose();
    let mut out = BooleanFunction::zero(dim);
    for d in dim.subsets_by_mask() {
        let column = by_second.row(d.index());
        if column.is_zero() {
            continue;
        }
        // Σ_{c : (c,d) ∈ A} m^c is the indicator of the column; for x^c the
        // coefficients are converted to a truth vector first.
        let coeff = if basis.uses_x() {
            change_function_basis(column, FunctionBasisChange::XToM)
        } else {
            column.clone()
        };
        let coeff = BooleanFunction::from_mask_bits(dim, coeff)?;
        let moved = if basis.uses_derivative() {
            f.derivative(d)?
        } else {
            f.shift(d)?
        };
        out.add_assign(&coeff.mul(&moved)?);
    }
    Ok(out)
}

/// `M_i(A) = [l_i(A)]`, the card-lex indexed matrix of the operator in the
/// `{m^a}` basis:
///
/// * MS: `A(a, a+b)`
/// * MD: `Σ_{a+b ⊆ c} A(a, c)`
/// * XS: `Σ_{c ⊆ a} A(c, a+b)`
/// * XD: `Σ_{c ⊆ a, a+b ⊆ d} A(c, d)`
pub fn operator_matrix(a: &Digraph, basis: BasisId) -> Gf2Matrix {
    let dim = a.dim();
    let cl = CardLex::get(dim);
    let ms = hat(a, basis);
    let mut m = Gf2Matrix::zeros(dim.size(), dim.size());
    for (c, d) in ms.edges_unordered() {
        m.set(cl.index_of(c), cl.index_of(c + d), true);
    }
    m
}

/// `D_i(N)`, the inverse of [`operator_matrix`]:
///
/// * MS: `N_{a, a+b}`
/// * MD: `Σ_{b ⊆ c} N_{a, a+c}`
/// * XS: `Σ_{c ⊆ a} N_{c, b+c}`
/// * XD: `Σ_{c ⊆ a, b ⊆ d} N_{c, c+d}`
pub fn operator_digraph(m: &Gf2Matrix, basis: BasisId) -> Result<Digraph> {
    let dim = matrix_dimension(m)?;
    let cl = CardLex::get(dim);
    let mut ms = Digraph::empty(dim);
    for i in 0..m.rows() {
        let a = cl.subset_at(i);
        for j in m.row(i).iter_ones() {
            ms.insert(a, a + cl.subset_at(j));
        }
    }
    Ok(hat(&ms, basis))
}

/// The `n` with `2^n = size` for a square operator matrix.
pub fn matrix_dimension(m: &Gf2Matrix) -> Result<Dimension> {
    if !m.is_square() {
        return Err(Error::domain(format!(
            "operator matrix must be square, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if !m.rows().is_power_of_two() {
        return Err(Error::domain(format!(
            "operator matrix size {} is not a power of two",
            m.rows()
        )));
    }
    Dimension::with_limit(m.rows().trailing_zeros(), Dimension::CEILING)
}

/// Rewrites `A` from basis `from` to basis `to` so that both name the same
/// operator. Goes through MS with the hat transforms.
pub fn change_operator_basis(a: &Digraph, from: BasisId, to: BasisId) -> Digraph {
    if from == to {
        return a.clone();
    }
    hat(&hat(a, from), to)
}

/// Rank, image size and kernel size of `l_i(A)` acting on `BF_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankProfile {
    pub rank: usize,
    /// `2^n`, the dimension of `BF_n`.
    pub space_dim: usize,
}

impl RankProfile {
    /// `log2 |Im|`, equal to the rank.
    pub fn image_log2(&self) -> usize {
        self.rank
    }

    /// `log2 |Ker| = 2^n - rank`.
    pub fn kernel_log2(&self) -> usize {
        self.space_dim - self.rank
    }

    pub fn image_size(&self) -> BigUint {
        BigUint::from(1u8) << self.image_log2()
    }

    pub fn kernel_size(&self) -> BigUint {
        BigUint::from(1u8) << self.kernel_log2()
    }
}

impl fmt::Display for RankProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rank={} image={} kernel={}",
            self.rank,
            self.image_size(),
            self.kernel_size()
        )
    }
}

/// Rank–nullity profile of the operator `l_i(A)`.
pub fn operator_rank_profile(a: &Digraph, basis: BasisId) -> RankProfile {
    RankProfile {
        rank: operator_matrix(a, basis).rank(),
        space_dim: a.dim().size(),
    }
}

/// A printable sum of basis terms, e.g. `m^{}s^{1} + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorExpr {
    pub basis: BasisId,
    /// Sorted by card-lex `(c, d)`, without the collapsed diagonal.
    pub terms: Vec<(Subset, Subset)>,
    /// The full diagonal `{(c, {})}` was present and prints as `1`.
    pub collapse_identity: bool,
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() && !self.collapse_identity {
            return f.write_str("0");
        }
        let u = self.basis.function_symbol();
        let v = self.basis.operator_symbol();
        let mut first = true;
        for (c, d) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{u}^{c}{v}^{d}")?;
        }
        if self.collapse_identity {
            if !first {
                f.write_str(" + ")?;
            }
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Builds the printable expression of `A` in `basis`. In MS and MD the full
/// diagonal `Σ_c m^c` is the identity and prints as a trailing `1`; in the
/// x bases no collapse happens.
pub fn format_operator(a: &Digraph, basis: BasisId) -> OperatorExpr {
    let dim = a.dim();
    let collapse = !basis.uses_x() && dim.subsets_by_mask().all(|c| a.contains(c, Subset::EMPTY));
    let terms = a
        .edges()
        .into_iter()
        .filter(|(_, d)| !(collapse && d.is_empty()))
        .collect();
    OperatorExpr {
        basis,
        terms,
        collapse_identity: collapse,
    }
}

/// The `2^n × 2^n` card-lex matrix with ones on the diagonal and superdiagonal.
pub fn jordan_matrix(dim: Dimension) -> Gf2Matrix {
    let size = dim.size();
    let mut m = Gf2Matrix::identity(size);
    for i in 0..size.saturating_sub(1) {
        m.set(i, i + 1, true);
    }
    m
}

/// `D_i` of the Jordan-like matrix.
pub fn jordan_digraph(dim: Dimension, basis: BasisId) -> Result<Digraph> {
    if dim.n() == 0 {
        return Err(Error::domain("Jordan-like matrices need n >= 1"));
    }
    operator_digraph(&jordan_matrix(dim), basis)
}
