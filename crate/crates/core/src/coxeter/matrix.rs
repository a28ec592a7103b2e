use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Order;

/// Symmetric Coxeter matrix: `m_ss = 1`, `m_st >= 2` or infinite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Order>>", into = "Vec<Vec<Order>>")]
pub struct CoxeterMatrix {
    m: Vec<Vec<Order>>,
}

impl TryFrom<Vec<Vec<Order>>> for CoxeterMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<Order>>) -> Result<Self> {
        CoxeterMatrix::new(rows)
    }
}

impl From<CoxeterMatrix> for Vec<Vec<Order>> {
    fn from(m: CoxeterMatrix) -> Self {
        m.m
    }
}

impl CoxeterMatrix {
    pub fn new(rows: Vec<Vec<Order>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::malformed(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            for (j, &x) in row.iter().enumerate() {
                if x != rows[j][i] {
                    return Err(Error::malformed(format!("m[{i}][{j}] = {x} but m[{j}][{i}] = {}", rows[j][i])));
                }
                match (i == j, x) {
                    (true, Order::Finite(1)) => {}
                    (true, _) => return Err(Error::malformed(format!("diagonal entry m[{i}][{i}] = {x}, expected 1"))),
                    (false, Order::Finite(k)) if k < 2 => {
                        return Err(Error::malformed(format!("off-diagonal entry m[{i}][{j}] = {k} must be >= 2")))
                    }
                    _ => {}
                }
            }
        }
        Ok(CoxeterMatrix { m: rows })
    }

    /// Builds a matrix from the labelled edges of a Coxeter diagram; unlisted
    /// pairs commute (`m = 2`).
    pub fn from_edges(rank: usize, edges: &[(usize, usize, Order)]) -> Result<Self> {
        let mut m = vec![vec![Order::Finite(2); rank]; rank];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Order::Finite(1);
        }
        for &(i, j, o) in edges {
            if i >= rank || j >= rank || i == j {
                return Err(Error::malformed(format!("bad edge ({i}, {j})")));
            }
            m[i][j] = o;
            m[j][i] = o;
        }
        Self::new(m)
    }

    pub fn from_integers(rows: &[Vec<u32>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| if x == 0 { Order::Infinite } else { Order::Finite(x) }).collect())
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> Order {
        self.m[i][j]
    }

    pub fn rows(&self) -> &[Vec<Order>] {
        &self.m
    }

    /// Principal submatrix on `indices`, in the given order.
    pub fn restrict(&self, indices: &[usize]) -> CoxeterMatrix {
        CoxeterMatrix { m: indices.iter().map(|&i| indices.iter().map(|&j| self.m[i][j]).collect()).collect() }
    }

    /// Simultaneous row/column permutation: new index `k` is old index `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> CoxeterMatrix {
        self.restrict(perm)
    }

    /// Block-diagonal sum; generators of different blocks commute.
    pub fn direct_sum(&self, other: &CoxeterMatrix) -> CoxeterMatrix {
        let (p, q) = (self.rank(), other.rank());
        let mut m = vec![vec![Order::Finite(2); p + q]; p + q];
        for i in 0..p + q {
            for j in 0..p + q {
                if i < p && j < p {
                    m[i][j] = self.m[i][j];
                } else if i >= p && j >= p {
                    m[i][j] = other.m[i - p][j - p];
                } else if i == j {
                    m[i][j] = Order::Finite(1);
                }
            }
        }
        CoxeterMatrix { m }
    }

    /// Diagram edges `(i, j, m_ij)` with `i < j` and `m_ij >= 3`.
    pub fn edges(&self) -> Vec<(usize, usize, Order)> {
        let mut out = Vec::new();
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                if self.m[i][j] != Order::Finite(2) {
                    out.push((i, j, self.m[i][j]));
                }
            }
        }
        out
    }

    // Standard families. Indices follow the usual diagram pictures.

    pub fn dihedral(m: Order) -> CoxeterMatrix {
        Self::from_edges(2, &[(0, 1, m)]).expect("valid dihedral matrix")
    }

    fn chain(labels: &[u32]) -> CoxeterMatrix {
        let edges: Vec<_> = labels.iter().enumerate().map(|(i, &l)| (i, i + 1, Order::Finite(l))).collect();
        Self::from_edges(labels.len() + 1, &edges).expect("valid chain")
    }

    pub fn a(n: usize) -> CoxeterMatrix {
        assert!(n >= 1);
        Self::chain(&vec![3; n - 1])
    }

    pub fn b(n: usize) -> CoxeterMatrix {
        assert!(n >= 2);
        let mut labels = vec![3; n - 1];
        labels[n - 2] = 4;
        Self::chain(&labels)
    }

    pub fn d(n: usize) -> CoxeterMatrix {
        assert!(n >= 4);
        let mut edges: Vec<_> = (0..n - 2).map(|i| (i, i + 1, Order::Finite(3))).collect();
        edges.push((n - 3, n - 1, Order::Finite(3)));
        Self::from_edges(n, &edges).expect("valid D_n")
    }

    /// `E_n` for n in 6..=8: arms of length 1, 2 and n-4 around a branch node.
    pub fn e(n: usize) -> CoxeterMatrix {
        assert!((6..=8).contains(&n));
        Self::star(&[1, 2, n - 4])
    }

    pub fn f4() -> CoxeterMatrix {
        Self::chain(&[3, 4, 3])
    }

    pub fn h3() -> CoxeterMatrix {
        Self::chain(&[5, 3])
    }

    pub fn h4() -> CoxeterMatrix {
        Self::chain(&[5, 3, 3])
    }

    pub fn i2(m: u32) -> CoxeterMatrix {
        Self::dihedral(Order::Finite(m))
    }

    /// Branch node 0 with simply-laced arms of the given lengths.
    fn star(arms: &[usize]) -> CoxeterMatrix {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in arms {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next, Order::Finite(3)));
                prev = next;
                next += 1;
            }
        }
        Self::from_edges(next, &edges).expect("valid star")
    }

    /// Affine `Ã_n` (n+1 generators): a cycle, or the infinite dihedral group for n = 1.
    pub fn affine_a(n: usize) -> CoxeterMatrix {
        assert!(n >= 1);
        if n == 1 {
            return Self::dihedral(Order::Infinite);
        }
        let edges: Vec<_> = (0..=n).map(|i| (i, (i + 1) % (n + 1), Order::Finite(3))).collect();
        Self::from_edges(n + 1, &edges).expect("valid affine A")
    }

    pub fn affine_b(n: usize) -> CoxeterMatrix {
        assert!(n >= 3);
        let mut edges = vec![(0, 2, Order::Finite(3))];
        for i in 1..n {
            let l = if i == n - 1 { 4 } else { 3 };
            edges.push((i, i + 1, Order::Finite(l)));
        }
        Self::from_edges(n + 1, &edges).expect("valid affine B")
    }

    pub fn affine_c(n: usize) -> CoxeterMatrix {
        assert!(n >= 2);
        let mut labels = vec![3; n];
        labels[0] = 4;
        labels[n - 1] = 4;
        Self::chain(&labels)
    }

    pub fn affine_d(n: usize) -> CoxeterMatrix {
        assert!(n >= 4);
        if n == 4 {
            return Self::star(&[1, 1, 1, 1]);
        }
        let mut edges = vec![(0, 2, Order::Finite(3))];
        for i in 1..n - 2 {
            edges.push((i, i + 1, Order::Finite(3)));
        }
        edges.push((n - 2, n - 1, Order::Finite(3)));
        edges.push((n - 2, n, Order::Finite(3)));
        Self::from_edges(n + 1, &edges).expect("valid affine D")
    }

    pub fn affine_e(n: usize) -> CoxeterMatrix {
        match n {
            6 => Self::star(&[2, 2, 2]),
            7 => Self::star(&[1, 3, 3]),
            8 => Self::star(&[1, 2, 5]),
            _ => panic!("affine E_{n} does not exist"),
        }
    }

    pub fn affine_f4() -> CoxeterMatrix {
        Self::chain(&[3, 3, 4, 3])
    }

    pub fn affine_g2() -> CoxeterMatrix {
        Self::chain(&[3, 6])
    }

    /// Triangle group `(p, q, r)`: `m_01 = p`, `m_02 = q`, `m_12 = r`.
    pub fn triangle(p: Order, q: Order, r: Order) -> CoxeterMatrix {
        Self::from_edges(3, &[(0, 1, p), (0, 2, q), (1, 2, r)]).expect("valid triangle")
    }

    /// Universal Coxeter group: every off-diagonal entry infinite.
    pub fn universal(rank: usize) -> CoxeterMatrix {
        let mut edges = Vec::new();
        for i in 0..rank {
            for j in i + 1..rank {
                edges.push((i, j, Order::Infinite));
            }
        }
        Self::from_edges(rank, &edges).expect("valid universal matrix")
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .m
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(CoxeterMatrix::from_integers(&[vec![1, 3], vec![3, 1]]).is_ok());
        assert!(CoxeterMatrix::from_integers(&[vec![1, 3], vec![4, 1]]).is_err());
        assert!(CoxeterMatrix::from_integers(&[vec![2, 3], vec![3, 1]]).is_err());
        assert!(CoxeterMatrix::from_integers(&[vec![1, 1], vec![1, 1]]).is_err());
        assert!(CoxeterMatrix::from_integers(&[vec![1, 3, 2], vec![3, 1]]).is_err());
        let inf = CoxeterMatrix::from_integers(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(inf.entry(1, 0), Order::Infinite);
    }

    #[test]
    fn family_shapes() {
        assert_eq!(CoxeterMatrix::a(4).edges().len(), 3);
        assert_eq!(CoxeterMatrix::d(4).edges().len(), 3);
        assert_eq!(CoxeterMatrix::e(8).rank(), 8);
        assert_eq!(CoxeterMatrix::affine_e(8).rank(), 9);
        assert_eq!(CoxeterMatrix::affine_e(6).rank(), 7);
        assert_eq!(CoxeterMatrix::affine_d(5).rank(), 6);
        assert_eq!(CoxeterMatrix::affine_b(3).rank(), 4);
        assert_eq!(CoxeterMatrix::affine_a(2).edges().len(), 3);
        let s = CoxeterMatrix::a(1).direct_sum(&CoxeterMatrix::a(2));
        assert_eq!(s.rank(), 3);
        assert_eq!(s.entry(0, 1), Order::Finite(2));
        assert_eq!(s.entry(1, 2), Order::Finite(3));
    }
}
