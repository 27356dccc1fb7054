//! Shared generators and brute-force oracles for the integration tests.
//! Every oracle here works entry by entry from a definition and never calls
//! the library's transforms or products.
#![allow(dead_code)]

use booldiff::{
    BasisId, BitVector, BooleanFunction, CardLex, Digraph, Dimension, Gf2Matrix, Subset,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn dim(n: u32) -> Dimension {
    Dimension::new(n).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn set(elems: &[u32]) -> Subset {
    Subset::from_elements(elems.iter().copied())
}

pub fn random_digraph(rng: &mut impl Rng, d: Dimension) -> Digraph {
    let mut g = Digraph::empty(d);
    for c in d.subsets() {
        for e in d.subsets() {
            if rng.gen::<bool>() {
                g.insert(c, e);
            }
        }
    }
    g
}

pub fn random_function(rng: &mut impl Rng, d: Dimension) -> BooleanFunction {
    let bits = BitVector::from_bools((0..d.size()).map(|_| rng.gen::<bool>()));
    BooleanFunction::from_mask_bits(d, bits).unwrap()
}

pub fn random_matrix(rng: &mut impl Rng, size: usize) -> Gf2Matrix {
    let mut m = Gf2Matrix::zeros(size, size);
    for i in 0..size {
        for j in 0..size {
            m.set(i, j, rng.gen::<bool>());
        }
    }
    m
}

/// All digraphs on `P[n]` with at most `k` edges.
pub fn small_digraphs(d: Dimension, k: usize) -> Vec<Digraph> {
    let pairs: Vec<(Subset, Subset)> = d
        .subsets()
        .flat_map(|c| d.subsets().map(move |e| (c, e)))
        .collect();
    let mut out = vec![Digraph::empty(d)];
    let mut frontier: Vec<(usize, Digraph)> = vec![(0, Digraph::empty(d))];
    for _ in 0..k {
        let mut next = Vec::new();
        for (start, g) in &frontier {
            for (i, &(c, e)) in pairs.iter().enumerate().skip(*start) {
                let mut h = g.clone();
                h.insert(c, e);
                out.push(h.clone());
                next.push((i + 1, h));
            }
        }
        frontier = next;
    }
    out
}

pub fn all_functions(d: Dimension) -> Vec<BooleanFunction> {
    let size = d.size();
    (0u64..1 << size)
        .map(|bits| {
            let v = BitVector::from_bools((0..size).map(|i| bits >> i & 1 == 1));
            BooleanFunction::from_mask_bits(d, v).unwrap()
        })
        .collect()
}

pub fn is_subset(a: Subset, b: Subset) -> bool {
    a.mask() & !b.mask() == 0
}

/// Entry `(a, b)` of the operator matrix, summed straight from the
/// closed forms for each basis.
pub fn naive_matrix_entry(g: &Digraph, basis: BasisId, a: Subset, b: Subset) -> bool {
    let d = g.dim();
    let target = Subset::from_mask(a.mask() ^ b.mask());
    let mut acc = false;
    for c in d.subsets() {
        for e in d.subsets() {
            if !g.contains(c, e) {
                continue;
            }
            let first = if basis.uses_x() {
                is_subset(c, a)
            } else {
                c == a
            };
            let second = if basis.uses_derivative() {
                is_subset(target, e)
            } else {
                e == target
            };
            acc ^= first && second;
        }
    }
    acc
}

pub fn naive_matrix(g: &Digraph, basis: BasisId) -> Gf2Matrix {
    let d = g.dim();
    let cl = CardLex::get(d);
    let mut m = Gf2Matrix::zeros(d.size(), d.size());
    for i in 0..d.size() {
        for j in 0..d.size() {
            m.set(
                i,
                j,
                naive_matrix_entry(g, basis, cl.subset_at(i), cl.subset_at(j)),
            );
        }
    }
    m
}

/// Digraph of `N` in `basis`, summed from the closed forms for `D_i`.
pub fn naive_digraph(m: &Gf2Matrix, d: Dimension, basis: BasisId) -> Digraph {
    let cl = CardLex::get(d);
    let entry = |a: Subset, b: Subset| m.get(cl.index_of(a), cl.index_of(b));
    let mut g = Digraph::empty(d);
    for a in d.subsets() {
        for b in d.subsets() {
            let mut acc = false;
            for c in d.subsets() {
                if basis.uses_x() && !is_subset(c, a) || !basis.uses_x() && c != a {
                    continue;
                }
                for e in d.subsets() {
                    if basis.uses_derivative() && !is_subset(b, e)
                        || !basis.uses_derivative() && e != b
                    {
                        continue;
                    }
                    acc ^= entry(c, Subset::from_mask(c.mask() ^ e.mask()));
                }
            }
            if acc {
                g.insert(a, b);
            }
        }
    }
    g
}

/// `(A ★ B)(c, d) = Σ_e A(c, e) B(c+e, d+e)`, one entry at a time.
pub fn naive_star(a: &Digraph, b: &Digraph) -> Digraph {
    let d = a.dim();
    let mut out = Digraph::empty(d);
    for c in d.subsets() {
        for t in d.subsets() {
            let mut acc = false;
            for e in d.subsets() {
                acc ^= a.contains(c, e) && b.contains(c + e, t + e);
            }
            if acc {
                out.insert(c, t);
            }
        }
    }
    out
}

/// `∂^d f` as `∂_{i_1} ... ∂_{i_k} f` with `∂_i f(a) = f(a + e_i) + f(a)`.
pub fn iterated_derivative(f: &BooleanFunction, d: Subset) -> BooleanFunction {
    let dim = f.dim();
    let mut cur = f.clone();
    for i in d.elements() {
        let ei = Subset::singleton(i);
        let mut next = BooleanFunction::zero(dim);
        for a in dim.subsets() {
            next.set_value(a, cur.value(a + ei) ^ cur.value(a));
        }
        cur = next;
    }
    cur
}

/// Subset-sum transform of a mask-indexed vector by direct summation.
pub fn naive_subset_sum(f: &BitVector, down: bool) -> BitVector {
    let len = f.len();
    BitVector::from_bools((0..len).map(|x| {
        (0..len)
            .filter(|&y| if down { y & !x == 0 } else { x & !y == 0 })
            .fold(false, |acc, y| acc ^ f.get(y))
    }))
}

/// Turns a LaTeX operator string (`m^{\emptyset}s^{\{1, 2\}}`) into
/// the printed syntax (`m^{}s^{1,2}`).
pub fn normalize_latex(s: &str) -> String {
    s.replace("\\emptyset", "")
        .replace("\\{", "")
        .replace("\\}", "")
        .replace(", ", ",")
}
