use serde::{Deserialize, Serialize};

use super::spec::{GroupSpec, Order};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Icc {
    Icc,
    NotIcc,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IccVerdict {
    pub verdict: Icc,
    pub reason: String,
    pub citation: String,
}

/// Infinite-conjugacy-class verdict for the built-in families.
pub fn is_icc(spec: &GroupSpec) -> IccVerdict {
    let v = |verdict, reason: &str, citation: &str| IccVerdict {
        verdict,
        reason: reason.to_string(),
        citation: citation.to_string(),
    };
    match spec {
        GroupSpec::Free { rank: 1 } => v(
            Icc::NotIcc,
            "infinite cyclic group is abelian and infinite, every class is a singleton",
            "abelian groups are not icc",
        ),
        GroupSpec::Free { .. } => v(
            Icc::Icc,
            "non-abelian free groups are Powers groups",
            "Powers groups are non-amenable and icc",
        ),
        GroupSpec::FreeProduct { orders } if orders[..] == [Order::Finite(2), Order::Finite(2)] => v(
            Icc::NotIcc,
            "Z/2*Z/2 is the infinite dihedral group; its translation subgroup has conjugacy classes of size at most two",
            "free product icc criterion: nontrivial factors, not the infinite dihedral group",
        ),
        GroupSpec::FreeProduct { .. } => v(
            Icc::Icc,
            "free product of nontrivial factors other than Z/2*Z/2",
            "free product icc criterion: nontrivial factors, not the infinite dihedral group",
        ),
        GroupSpec::Coxeter { .. } => v(
            Icc::Unknown,
            "no icc criterion is applied to Coxeter systems; see the Coxeter verdict",
            "plumbing",
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        assert_eq!(is_icc(&GroupSpec::free(2).unwrap()).verdict, Icc::Icc);
        assert_eq!(is_icc(&GroupSpec::free(1).unwrap()).verdict, Icc::NotIcc);
        assert_eq!(is_icc(&GroupSpec::cyclic_product(&[2, 2]).unwrap()).verdict, Icc::NotIcc);
        assert_eq!(is_icc(&GroupSpec::cyclic_product(&[2, 3]).unwrap()).verdict, Icc::Icc);
        assert_eq!(is_icc(&GroupSpec::cyclic_product(&[2, 2, 2]).unwrap()).verdict, Icc::Icc);
        let cox = crate::coxeter::CoxeterMatrix::dihedral(Order::Finite(3));
        assert_eq!(is_icc(&GroupSpec::coxeter(cox)).verdict, Icc::Unknown);
    }
}
