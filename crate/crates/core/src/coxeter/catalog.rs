//! Recognition of irreducible spherical and affine Coxeter diagrams up to
//! relabelling of the generators.

use petgraph::algo::is_isomorphic_matching;
use petgraph::graph::UnGraph;

use super::matrix::CoxeterMatrix;
use crate::group::Order;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogKind {
    Finite,
    Affine,
}

fn diagram(m: &CoxeterMatrix) -> UnGraph<(), Order> {
    let mut g = UnGraph::new_undirected();
    let nodes: Vec<_> = (0..m.rank()).map(|_| g.add_node(())).collect();
    for (i, j, o) in m.edges() {
        g.add_edge(nodes[i], nodes[j], o);
    }
    g
}

/// Connected spherical diagrams of the given rank.
fn finite_of_rank(rank: usize) -> Vec<(String, CoxeterMatrix)> {
    let mut out = vec![(format!("A_{rank}"), CoxeterMatrix::a(rank))];
    if rank >= 2 {
        out.push((format!("B_{rank}"), CoxeterMatrix::b(rank)));
    }
    if rank >= 4 {
        out.push((format!("D_{rank}"), CoxeterMatrix::d(rank)));
    }
    match rank {
        3 => out.push(("H_3".into(), CoxeterMatrix::h3())),
        4 => {
            out.push(("F_4".into(), CoxeterMatrix::f4()));
            out.push(("H_4".into(), CoxeterMatrix::h4()));
        }
        6..=8 => out.push((format!("E_{rank}"), CoxeterMatrix::e(rank))),
        _ => {}
    }
    out
}

/// Connected affine diagrams with `rank` generators.
fn affine_of_rank(rank: usize) -> Vec<(String, CoxeterMatrix)> {
    let mut out = Vec::new();
    if rank < 2 {
        return out;
    }
    let n = rank - 1;
    out.push((format!("~A_{n}"), CoxeterMatrix::affine_a(n)));
    if n >= 2 {
        out.push((format!("~C_{n}"), CoxeterMatrix::affine_c(n)));
    }
    if n >= 3 {
        out.push((format!("~B_{n}"), CoxeterMatrix::affine_b(n)));
    }
    if n >= 4 {
        out.push((format!("~D_{n}"), CoxeterMatrix::affine_d(n)));
    }
    match n {
        2 => out.push(("~G_2".into(), CoxeterMatrix::affine_g2())),
        4 => out.push(("~F_4".into(), CoxeterMatrix::affine_f4())),
        6..=8 => out.push((format!("~E_{n}"), CoxeterMatrix::affine_e(n))),
        _ => {}
    }
    out
}

/// Names the diagram if it is a connected spherical or affine one.
pub fn recognize(m: &CoxeterMatrix) -> Option<(CatalogKind, String)> {
    let rank = m.rank();
    if rank == 0 {
        return None;
    }
    if rank == 2 {
        // I_2(m) and ~A_1 are determined by the single label.
        return match m.entry(0, 1) {
            Order::Infinite => Some((CatalogKind::Affine, "~A_1".into())),
            Order::Finite(k) => Some((CatalogKind::Finite, format!("I_2({k})"))),
        };
    }
    let g = diagram(m);
    let matches = |c: &CoxeterMatrix| is_isomorphic_matching(&g, &diagram(c), |_, _| true, |a, b| a == b);
    if let Some((name, _)) = finite_of_rank(rank).into_iter().find(|(_, c)| matches(c)) {
        return Some((CatalogKind::Finite, name));
    }
    affine_of_rank(rank).into_iter().find(|(_, c)| matches(c)).map(|(name, _)| (CatalogKind::Affine, name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognizes_relabelled_diagrams() {
        let d4 = CoxeterMatrix::d(4).permuted(&[3, 1, 0, 2]);
        assert_eq!(recognize(&d4), Some((CatalogKind::Finite, "D_4".into())));
        assert_eq!(recognize(&CoxeterMatrix::affine_a(2)).unwrap().0, CatalogKind::Affine);
        assert_eq!(recognize(&CoxeterMatrix::affine_g2()).unwrap().1, "~G_2");
        assert_eq!(recognize(&CoxeterMatrix::a(1)).unwrap().1, "A_1");
        let t = CoxeterMatrix::triangle(Order::Finite(2), Order::Finite(3), Order::Finite(7));
        assert_eq!(recognize(&t), None);
        // B_3 vs ~C_2 differ only in the second label
        assert_eq!(recognize(&CoxeterMatrix::b(3)).unwrap().1, "B_3");
        assert_eq!(recognize(&CoxeterMatrix::affine_c(2)).unwrap().1, "~C_2");
    }
}
