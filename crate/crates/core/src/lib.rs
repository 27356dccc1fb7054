//! Boolean differential operators on `Z_2^n`.
//!
//! Operators are encoded as directed graphs on the subset lattice `P[n]`,
//! read in one of four bases (`m^c s^d`, `m^c ∂^d`, `x^c s^d`, `x^c ∂^d`).
//! Each basis gives a linear bijection between digraphs and `2^n × 2^n`
//! matrices over GF(2), and composition of operators pulls back to a
//! product on digraphs. This crate computes those maps, their inverses,
//! basis changes and the four products, both from their combinatorial
//! formulas and through matrix multiplication.
//!
//! ```
//! use booldiff::{jordan_digraph, format_operator, BasisId, Dimension};
//!
//! let n = Dimension::new(2).unwrap();
//! let j = jordan_digraph(n, BasisId::MS).unwrap();
//! assert_eq!(
//!     format_operator(&j, BasisId::MS).to_string(),
//!     "m^{}s^{1} + m^{1}s^{1,2} + m^{2}s^{1} + 1"
//! );
//! ```

pub mod cli;
pub mod error;
pub mod figure;
pub mod function;
pub mod gf2;
pub mod operator;
pub mod product;
pub mod subset;

pub use error::{Error, Result};
pub use function::{change_function_basis, m_basis, x_basis, BooleanFunction, FunctionBasisChange};
pub use gf2::{BitVector, Gf2Matrix};
pub use operator::{
    apply_operator, change_operator_basis, format_operator, jordan_digraph, jordan_matrix,
    operator_digraph, operator_matrix, operator_rank_profile, BasisId, Digraph, OperatorExpr,
    RankProfile,
};
pub use product::{
    ast_product, bullet_product, circ_product, direct_product, matrix_product,
    multiplication_table, product, product_with_limits, star_decomposed, star_product,
    star_single_edge, DirectCaps, Limits, MultiplicationTable, Route, StarDecomposition,
};
pub use subset::{
    index_of, subset_of, subset_sum_transform, CardLex, Dimension, Subset, SumDirection,
    DEFAULT_N_MAX,
};
