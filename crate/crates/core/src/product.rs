//! The four products on digraphs obtained by pulling back operator
//! composition through `l_1 .. l_4`: `★` (MS), `∘` (MD), `∗` (XS) and `•` (XD).
//!
//! Each product has a direct combinatorial form: `(c, d)` is in the product
//! iff an odd number of witness tuples exists. The direct routines enumerate
//! witnesses edge by edge and toggle the target pair they determine, which
//! computes the same parity as looping over `(c, d)` first. The matrix route
//! `D_i(M_i(A) · M_i(B))` is the reference the direct routines are tested
//! against.

use std::fmt;

use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::operator::{operator_digraph, operator_matrix, BasisId, Digraph};
use crate::subset::{CardLex, Dimension, Subset, DEFAULT_N_MAX};

/// Largest `n` each direct product formula is run at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DirectCaps {
    pub star: u32,
    pub circ: u32,
    pub ast: u32,
    pub bullet: u32,
}

impl Default for DirectCaps {
    fn default() -> Self {
        DirectCaps {
            star: 8,
            circ: 5,
            ast: 5,
            bullet: 4,
        }
    }
}

impl DirectCaps {
    pub fn for_basis(&self, basis: BasisId) -> u32 {
        match basis {
            BasisId::MS => self.star,
            BasisId::MD => self.circ,
            BasisId::XS => self.ast,
            BasisId::XD => self.bullet,
        }
    }
}

/// Size limits applied by [`product_with_limits`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub n_max: u32,
    pub direct: DirectCaps,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            n_max: DEFAULT_N_MAX,
            direct: DirectCaps::default(),
        }
    }
}

/// How a product is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// The combinatorial parity formula of the basis.
    Direct,
    /// `D_i(M_i(A) · M_i(B))`.
    Matrix,
    /// Direct when `n` is within the basis's direct cap, matrix otherwise.
    Auto,
}

impl std::str::FromStr for Route {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "direct" => Ok(Route::Direct),
            "matrix" => Ok(Route::Matrix),
            "auto" => Ok(Route::Auto),
            _ => Err(format!(
                "unknown route {s:?} (expected direct, matrix or auto)"
            )),
        }
    }
}

fn same_dim(a: &Digraph, b: &Digraph) -> Result<Dimension> {
    if a.dim() != b.dim() {
        return Err(Error::dimension(format!(
            "digraphs on P[{}] and P[{}]",
            a.dim(),
            b.dim()
        )));
    }
    Ok(a.dim())
}

/// `(A ★ B)(c, d) = Σ_e A(c, e) B(c+e, d+e)`.
pub fn star_product(a: &Digraph, b: &Digraph) -> Result<Digraph> {
    let dim = same_dim(a, b)?;
    let mut out = Digraph::empty(dim);
    for (c, e) in a.edges_unordered() {
        let row = b.grid().row((c + e).index());
        for x in row.iter_ones() {
            out.toggle(c, Subset::from_mask(x as u32) + e);
        }
    }
    Ok(out)
}

/// `{(a,b)} ★ {(c,d)}`: `{(a, b+d)}` when `a = b + c`, empty otherwise.
pub fn star_single_edge(
    dim: Dimension,
    a: Subset,
    b: Subset,
    c: Subset,
    d: Subset,
) -> Result<Digraph> {
    for s in [a, b, c, d] {
        dim.check(s)?;
    }
    let mut out = Digraph::empty(dim);
    if a == b + c {
        out.insert(a, b + d);
    }
    Ok(out)
}

/// `(A ∘ B)(c, d)`: parity of triples `(e, f, g)` with `(c, e) ∈ A`,
/// `(f, g) ∈ B`, `g ⊆ d` and `d \ g ⊆ c + f ⊆ e`.
pub fn circ_product(a: &Digraph, b: &Digraph) -> Result<Digraph> {
    let dim = same_dim(a, b)?;
    let b_edges: Vec<(Subset, Subset)> = b.edges_unordered().collect();
    let mut out = Digraph::empty(dim);
    for (c, e) in a.edges_unordered() {
        for &(f, g) in &b_edges {
            let t = c + f;
            if !t.is_subset_of(e) {
                continue;
            }
            // d = g ∪ s with s = d \ g ⊆ t
            for s in t.difference(g).subsets() {
                out.toggle(c, g.union(s));
            }
        }
    }
    Ok(out)
}

/// `(A ∗ B)(c, d) = Σ_{e ⊆ c, g, h} |{k ⊆ g ∩ h : e ∪ (h \ k) = c}| A(e, g) B(h, d+g)`.
pub fn ast_product(a: &Digraph, b: &Digraph) -> Result<Digraph> {
    let dim = same_dim(a, b)?;
    let b_edges: Vec<(Subset, Subset)> = b.edges_unordered().collect();
    let mut out = Digraph::empty(dim);
    for (e, g) in a.edges_unordered() {
        for &(h, y) in &b_edges {
            let d = y + g;
            for k in g.intersection(h).subsets() {
                out.toggle(e.union(h.difference(k)), d);
            }
        }
    }
    Ok(out)
}

/// `(A • B)(c, d) = Σ_{e ⊆ c, h ⊆ d, f, g} |{k1 ⊆ k2 ⊆ f ∩ g : e ∪ (g \ k2) = c,
/// f \ k1 = d \ h}| A(e, f) B(g, h)`.
pub fn bullet_product(a: &Digraph, b: &Digraph) -> Result<Digraph> {
    let dim = same_dim(a, b)?;
    let b_edges: Vec<(Subset, Subset)> = b.edges_unordered().collect();
    let mut out = Digraph::empty(dim);
    for (e, f) in a.edges_unordered() {
        for &(g, h) in &b_edges {
            for k2 in f.intersection(g).subsets() {
                let c = e.union(g.difference(k2));
                for k1 in k2.subsets() {
                    let r = f.difference(k1);
                    // h ⊆ d and d \ h = r force d = h ∪ r with r disjoint from h
                    if r.intersection(h).is_empty() {
                        out.toggle(c, h.union(r));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `D_i(M_i(A) · M_i(B))`.
pub fn matrix_product(a: &Digraph, b: &Digraph, basis: BasisId) -> Result<Digraph> {
    same_dim(a, b)?;
    let m = operator_matrix(a, basis).mul(&operator_matrix(b, basis))?;
    operator_digraph(&m, basis)
}

/// The direct formula of `basis`, with no size check.
pub fn direct_product(a: &Digraph, b: &Digraph, basis: BasisId) -> Result<Digraph> {
    match basis {
        BasisId::MS => star_product(a, b),
        BasisId::MD => circ_product(a, b),
        BasisId::XS => ast_product(a, b),
        BasisId::XD => bullet_product(a, b),
    }
}

/// The product of `basis` under the default [`Limits`].
pub fn product(a: &Digraph, b: &Digraph, basis: BasisId, route: Route) -> Result<Digraph> {
    product_with_limits(a, b, basis, route, &Limits::default())
}

pub fn product_with_limits(
    a: &Digraph,
    b: &Digraph,
    basis: BasisId,
    route: Route,
    limits: &Limits,
) -> Result<Digraph> {
    let dim = same_dim(a, b)?;
    let n = dim.n();
    let cap = limits.direct.for_basis(basis);
    let route = match route {
        Route::Auto if n <= cap => Route::Direct,
        Route::Auto => Route::Matrix,
        r => r,
    };
    match route {
        Route::Direct if n > cap => Err(Error::Capacity {
            what: format!("direct {} product", basis.product_symbol()),
            cap,
            n,
        }),
        Route::Direct => direct_product(a, b, basis),
        _ if n > limits.n_max => Err(Error::Capacity {
            what: "matrix route".into(),
            cap: limits.n_max,
            n,
        }),
        _ => matrix_product(a, b, basis),
    }
}

/// Slice decompositions of the `★` product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarDecomposition {
    /// `A = Σ_b A_b × {b}`, `B = Σ_c B_c × {c}`:
    /// `A ★ B = Σ_{b,c} (A_b ∩ (B_c + b)) × {b+c}`.
    ColCol,
    /// `A = Σ_b A_b × {b}`, `B = Σ_c {c} × B_c`:
    /// `A ★ B = Σ_{b+c ∈ A_b} {b+c} × (B_c + b)`.
    ColRow,
    /// `A = Σ_b {b} × A_b`, `B = Σ_c {c} × B_c`:
    /// `A ★ B = Σ_{b+c ∈ A_b} {b} × (B_c + b + c)`.
    RowRow,
}

fn add_cross(out: &mut Digraph, rows: &BooleanFunction, col: Subset) {
    for a in rows.support() {
        out.toggle(a, col);
    }
}

fn add_row(out: &mut Digraph, row: Subset, cols: &BooleanFunction) {
    let dst = out.grid_mut().row_mut(row.index());
    dst.xor_with(cols.mask_bits());
}

/// `★` computed through one of the slice decompositions.
pub fn star_decomposed(a: &Digraph, b: &Digraph, mode: StarDecomposition) -> Result<Digraph> {
    let dim = same_dim(a, b)?;
    let mut out = Digraph::empty(dim);
    let points: Vec<Subset> = dim.subsets_by_mask().collect();
    match mode {
        StarDecomposition::ColCol => {
            let b_cols: Vec<BooleanFunction> = points.iter().map(|&c| b.column_slice(c)).collect();
            for &bb in &points {
                let a_b = a.column_slice(bb);
                if a_b.is_zero() {
                    continue;
                }
                for &c in &points {
                    let b_c = &b_cols[c.index()];
                    if b_c.is_zero() {
                        continue;
                    }
                    let meet = a_b.mul(&b_c.shift(bb)?)?;
                    add_cross(&mut out, &meet, bb + c);
                }
            }
        }
        StarDecomposition::ColRow => {
            for &bb in &points {
                let a_b = a.column_slice(bb);
                if a_b.is_zero() {
                    continue;
                }
                for &c in &points {
                    if a_b.value(bb + c) {
                        add_row(&mut out, bb + c, &b.row_slice(c).shift(bb)?);
                    }
                }
            }
        }
        StarDecomposition::RowRow => {
            for &bb in &points {
                let a_b = a.row_slice(bb);
                if a_b.is_zero() {
                    continue;
                }
                for &c in &points {
                    if a_b.value(bb + c) {
                        add_row(&mut out, bb, &b.row_slice(c).shift(bb + c)?);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Edge order used to enumerate and print the digraphs of a multiplication
/// table, as card-lex index pairs. For `n = 1` this is the order
/// `(1,0), (0,1), (0,0), (1,1)`; for larger `n` it is plain card-lex order.
pub fn table_edge_order(dim: Dimension) -> Vec<(Subset, Subset)> {
    let cl = CardLex::get(dim);
    let pair = |i: usize, j: usize| (cl.subset_at(i), cl.subset_at(j));
    if dim.n() == 1 {
        return vec![pair(1, 0), pair(0, 1), pair(0, 0), pair(1, 1)];
    }
    let size = dim.size();
    (0..size)
        .flat_map(|i| (0..size).map(move |j| (i, j)))
        .map(|(i, j)| pair(i, j))
        .collect()
}

/// Label of a digraph in table notation, e.g. `{(1,0),(0,1)}`, with edges
/// as card-lex index pairs in [`table_edge_order`]; `0` for the empty digraph.
pub fn table_label(g: &Digraph) -> String {
    if g.is_empty() {
        return "0".to_string();
    }
    let cl = CardLex::get(g.dim());
    let parts: Vec<String> = table_edge_order(g.dim())
        .into_iter()
        .filter(|&(c, d)| g.contains(c, d))
        .map(|(c, d)| format!("({},{})", cl.index_of(c), cl.index_of(d)))
        .collect();
    format!("{{{}}}", parts.join(","))
}

/// All digraphs on `P[n]`, by edge count and then lexicographically by
/// position in [`table_edge_order`].
pub fn enumerate_digraphs(dim: Dimension) -> Result<Vec<Digraph>> {
    if dim.n() > 1 {
        return Err(Error::Capacity {
            what: "full digraph enumeration".into(),
            cap: 1,
            n: dim.n(),
        });
    }
    let order = table_edge_order(dim);
    let k = order.len();
    let mut masks: Vec<u32> = (0..1u32 << k).collect();
    // combinations of positions, compared lexicographically as position lists
    masks.sort_by_key(|&m| {
        let positions: Vec<usize> = (0..k).filter(|&i| m >> i & 1 == 1).collect();
        (m.count_ones(), positions)
    });
    Ok(masks
        .into_iter()
        .map(|m| {
            let edges = (0..k).filter(|&i| m >> i & 1 == 1).map(|i| order[i]);
            Digraph::from_edges(dim, edges).expect("table edges fit")
        })
        .collect())
}

/// The full multiplication table of one product on `DG_{P[n]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationTable {
    pub basis: BasisId,
    pub labels: Vec<Digraph>,
    /// `cells[i][j] = labels[i] ⋄ labels[j]`.
    pub cells: Vec<Vec<Digraph>>,
}

impl MultiplicationTable {
    /// TSV text: a header row of column labels, then one row per left factor.
    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        s.push_str(self.basis.product_symbol());
        for l in &self.labels {
            s.push('\t');
            s.push_str(&table_label(l));
        }
        s.push('\n');
        for (l, row) in self.labels.iter().zip(&self.cells) {
            s.push_str(&table_label(l));
            for cell in row {
                s.push('\t');
                s.push_str(&table_label(cell));
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for MultiplicationTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tsv())
    }
}

/// All products `X ⋄ Y` over every pair of digraphs on `P[n]`, `n <= 1`.
pub fn multiplication_table(dim: Dimension, basis: BasisId) -> Result<MultiplicationTable> {
    let labels = enumerate_digraphs(dim)?;
    let cells = labels
        .iter()
        .map(|x| {
            labels
                .iter()
                .map(|y| direct_product(x, y, basis))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiplicationTable {
        basis,
        labels,
        cells,
    })
}

/// `Σ_b (A_b ∩ B_b) × {b}`, the edge-set intersection assembled from column slices.
pub fn intersection_by_slices(a: &Digraph, b: &Digraph) -> Result<Digraph> {
    let dim = same_dim(a, b)?;
    let mut out = Digraph::empty(dim);
    for bb in dim.subsets_by_mask() {
        let meet = a.column_slice(bb).mul(&b.column_slice(bb))?;
        add_cross(&mut out, &meet, bb);
    }
    Ok(out)
}
