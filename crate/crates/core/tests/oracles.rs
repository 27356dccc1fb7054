//! Frozen values worked out by hand or by brute force, checked against the
//! library on both product routes where products are involved.

mod common;

use booldiff::{
    apply_operator, change_function_basis, direct_product, m_basis, matrix_product,
    operator_matrix, x_basis, BasisId, BitVector, BooleanFunction, CardLex, Digraph,
    FunctionBasisChange, Gf2Matrix, Subset,
};
use common::*;

fn both_routes(a: &Digraph, b: &Digraph, basis: BasisId) -> Digraph {
    let direct = direct_product(a, b, basis).unwrap();
    assert_eq!(
        direct,
        matrix_product(a, b, basis).unwrap(),
        "{basis} routes disagree"
    );
    direct
}

fn edges(n: u32, list: &[(&[u32], &[u32])]) -> Digraph {
    Digraph::from_edges(dim(n), list.iter().map(|&(c, d)| (set(c), set(d)))).unwrap()
}

#[test]
fn squares_of_single_terms_at_n1() {
    // (x_1 ∂_1)^2 = x_1 ∂_1, since ∂_1(x_1 g) = g when g does not depend on x_1
    let term = edges(1, &[(&[1], &[1])]);
    assert_eq!(both_routes(&term, &term, BasisId::XD), term);
    // (m^{1} ∂_1)^2 = m^{1} ∂_1 on one variable
    assert_eq!(both_routes(&term, &term, BasisId::MD), term);
    // (x_1 s_1)^2 = 0, since x_1(a) x_1(a + e_1) = 0
    assert!(both_routes(&term, &term, BasisId::XS).is_empty());
    // (m^{1} s_1)^2 = 0, since m^{1}(a) m^{1}(a + e_1) = 0
    assert!(both_routes(&term, &term, BasisId::MS).is_empty());
}

#[test]
fn first_derivative_squares_to_zero_in_every_basis() {
    for n in 1..=3 {
        let d = dim(n);
        for i in 1..=n {
            let e = Subset::singleton(i);
            let md = Digraph::from_edges(d, d.subsets().map(|c| (c, e))).unwrap();
            let xd = Digraph::from_edges(d, [(Subset::EMPTY, e)]).unwrap();
            assert!(both_routes(&md, &md, BasisId::MD).is_empty());
            assert!(both_routes(&xd, &xd, BasisId::XD).is_empty());
        }
    }
}

#[test]
fn pure_shifts_compose_by_symmetric_difference() {
    for n in 0..=3 {
        let d = dim(n);
        for s in d.subsets() {
            for t in d.subsets() {
                let a = Digraph::from_edges(d, [(Subset::EMPTY, s)]).unwrap();
                let b = Digraph::from_edges(d, [(Subset::EMPTY, t)]).unwrap();
                let want = Digraph::from_edges(d, [(Subset::EMPTY, s + t)]).unwrap();
                assert_eq!(both_routes(&a, &b, BasisId::XS), want);
            }
        }
    }
}

#[test]
fn point_functions_sum_to_one() {
    for n in 0..=5 {
        let d = dim(n);
        let mut sum = BooleanFunction::zero(d);
        for a in d.subsets() {
            sum = sum.add(&m_basis(a, d).unwrap()).unwrap();
        }
        assert_eq!(sum, BooleanFunction::one(d));
    }
}

#[test]
fn x_basis_is_multiplicative() {
    for n in 0..=3 {
        let d = dim(n);
        for a in d.subsets() {
            for b in d.subsets() {
                let prod = x_basis(a, d).unwrap().mul(&x_basis(b, d).unwrap()).unwrap();
                assert_eq!(prod, x_basis(a.union(b), d).unwrap());
            }
        }
    }
}

#[test]
fn shift_moves_point_functions() {
    for n in 1..=3 {
        let d = dim(n);
        for b in d.subsets() {
            for i in 1..=n {
                let e = Subset::singleton(i);
                assert_eq!(
                    m_basis(b, d).unwrap().shift(e).unwrap(),
                    m_basis(b + e, d).unwrap()
                );
            }
        }
    }
}

#[test]
fn coefficient_forms_evaluate_to_the_same_function() {
    let d = dim(3);
    let mut r = rng(3);
    for _ in 0..50 {
        let f = random_function(&mut r, d);
        let x_coeffs = change_function_basis(f.mask_bits(), FunctionBasisChange::MToX);
        let mut from_x = BooleanFunction::zero(d);
        let mut from_m = BooleanFunction::zero(d);
        for a in d.subsets() {
            if x_coeffs.get(a.index()) {
                from_x = from_x.add(&x_basis(a, d).unwrap()).unwrap();
            }
            if f.value(a) {
                from_m = from_m.add(&m_basis(a, d).unwrap()).unwrap();
            }
        }
        assert_eq!(from_x, f);
        assert_eq!(from_m, f);
    }
}

#[test]
fn subset_sums_match_direct_summation() {
    let mut r = rng(12);
    for n in 0..=6 {
        let d = dim(n);
        for _ in 0..20 {
            let v = random_function(&mut r, d).mask_bits().clone();
            for (dir, down) in [
                (booldiff::SumDirection::Down, true),
                (booldiff::SumDirection::Up, false),
            ] {
                assert_eq!(
                    booldiff::subset_sum_transform(&v, dir),
                    naive_subset_sum(&v, down)
                );
            }
        }
    }
    // indicator of {1} summed upward is the constant one
    let f = BitVector::from_bools([false, true]);
    assert_eq!(
        naive_subset_sum(&f, false),
        BitVector::from_bools([true, true])
    );
}

#[test]
fn columns_are_images_of_point_functions() {
    let mut r = rng(13);
    for basis in BasisId::ALL {
        for n in 0..=3 {
            let d = dim(n);
            let cl = CardLex::get(d);
            for _ in 0..10 {
                let g = random_digraph(&mut r, d);
                let m = operator_matrix(&g, basis);
                assert_eq!(m, naive_matrix(&g, basis));
                for b in d.subsets() {
                    let image = apply_operator(&g, basis, &m_basis(b, d).unwrap()).unwrap();
                    assert_eq!(m.column(cl.index_of(b)), image.card_lex_bits());
                }
            }
        }
    }
}

#[test]
fn derivative_matrix_at_n1() {
    // ∂_1 m^∅ = m^∅ + m^{1} and ∂_1 m^{1} = m^∅ + m^{1}
    let md = edges(1, &[(&[], &[1]), (&[1], &[1])]);
    assert_eq!(
        operator_matrix(&md, BasisId::MD),
        Gf2Matrix::from_bits(&["11", "11"])
    );
    let xd = edges(1, &[(&[], &[1])]);
    assert_eq!(
        operator_matrix(&xd, BasisId::XD),
        Gf2Matrix::from_bits(&["11", "11"])
    );
    let f = m_basis(Subset::EMPTY, dim(1)).unwrap();
    assert_eq!(
        apply_operator(&md, BasisId::MD, &f).unwrap(),
        BooleanFunction::one(dim(1))
    );
}

#[test]
fn single_edge_star_examples() {
    let d = dim(2);
    let one = set(&[1]);
    let two = set(&[2]);
    let both = set(&[1, 2]);
    // a = b + c: ({1,2}, {1}) ★ ({2}, {2}) = ({1,2}, {1,2})
    let got = booldiff::star_single_edge(d, both, one, two, two).unwrap();
    assert_eq!(got, Digraph::from_edges(d, [(both, both)]).unwrap());
    // a ≠ b + c gives nothing
    assert!(booldiff::star_single_edge(d, both, one, one, two)
        .unwrap()
        .is_empty());
}
