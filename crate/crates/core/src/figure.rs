//! Plot coordinates for digraphs and products.
//!
//! A pair `(c, d)` is placed at `x = index_of(c)`, `y = index_of(d)` in
//! card-lex order. In a product plot the first factor is drawn with
//! triangles, the second with circles and the product with stars.

use std::fmt;

use crate::operator::Digraph;
use crate::subset::CardLex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Marker {
    Point,
    Triangle,
    Circle,
    Star,
}

impl fmt::Display for Marker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Marker::Point => "point",
            Marker::Triangle => "triangle",
            Marker::Circle => "circle",
            Marker::Star => "star",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FigurePoint {
    pub x: usize,
    pub y: usize,
    pub marker: Marker,
}

fn points(g: &Digraph, marker: Marker) -> impl Iterator<Item = FigurePoint> + '_ {
    let cl = CardLex::get(g.dim());
    g.edges().into_iter().map(move |(c, d)| FigurePoint {
        x: cl.index_of(c),
        y: cl.index_of(d),
        marker,
    })
}

/// One `point` per edge.
pub fn digraph_figure(g: &Digraph) -> Vec<FigurePoint> {
    points(g, Marker::Point).collect()
}

/// Triangles for `a`, circles for `b`, stars for `product`.
pub fn product_figure(a: &Digraph, b: &Digraph, product: &Digraph) -> Vec<FigurePoint> {
    points(a, Marker::Triangle)
        .chain(points(b, Marker::Circle))
        .chain(points(product, Marker::Star))
        .collect()
}

/// TSV with an `x y marker` header row.
pub fn figure_tsv(points: &[FigurePoint]) -> String {
    let mut s = String::from("x\ty\tmarker\n");
    for p in points {
        s.push_str(&format!("{}\t{}\t{}\n", p.x, p.y, p.marker));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::{Dimension, Subset};

    #[test]
    fn single_edge_point() {
        let d = Dimension::new(1).unwrap();
        let g = Digraph::from_edges(d, [(Subset::EMPTY, Subset::singleton(1))]).unwrap();
        assert_eq!(
            figure_tsv(&digraph_figure(&g)),
            "x\ty\tmarker\n0\t1\tpoint\n"
        );
    }

    #[test]
    fn empty_is_header_only() {
        let g = Digraph::empty(Dimension::new(3).unwrap());
        assert_eq!(figure_tsv(&digraph_figure(&g)), "x\ty\tmarker\n");
    }
}
