//! Group family descriptions and their on-disk TOML form.
//!
//! ```toml
//! kind = "free"            # or "free_product" / "coxeter"
//! rank = 2                 # free
//! orders = [2, 3]          # free_product; 0 or "inf" for an infinite cyclic factor
//! coxeter_matrix = [[1, 3], [3, 1]]   # coxeter; 0 or "inf" for m = infinity
//! ```

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coxeter::CoxeterMatrix;
use crate::error::{Error, Result};

/// Order of a cyclic factor, or a Coxeter matrix entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn is_infinite(self) -> bool {
        matches!(self, Order::Infinite)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Order {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" | "0" => Ok(Order::Infinite),
            t => t.parse::<u32>().map(Order::Finite).map_err(|_| Error::malformed(format!("bad order {s:?}"))),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Order::Finite(n) => s.serialize_u32(*n),
            Order::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Order {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(0) => Ok(Order::Infinite),
            Raw::Int(n) if n > 0 && n <= u32::MAX as i64 => Ok(Order::Finite(n as u32)),
            Raw::Int(n) => Err(serde::de::Error::custom(format!("bad order {n}"))),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// A presented group from one of the built-in families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", try_from = "RawSpec", into = "RawSpec")]
pub enum GroupSpec {
    Free { rank: usize },
    FreeProduct { orders: Vec<Order> },
    Coxeter { coxeter_matrix: CoxeterMatrix },
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum RawSpec {
    Free { rank: usize },
    FreeProduct { orders: Vec<Order> },
    Coxeter { coxeter_matrix: Vec<Vec<Order>> },
}

impl TryFrom<RawSpec> for GroupSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        match raw {
            RawSpec::Free { rank } => GroupSpec::free(rank),
            RawSpec::FreeProduct { orders } => GroupSpec::free_product(orders),
            RawSpec::Coxeter { coxeter_matrix } => {
                Ok(GroupSpec::Coxeter { coxeter_matrix: CoxeterMatrix::new(coxeter_matrix)? })
            }
        }
    }
}

impl From<GroupSpec> for RawSpec {
    fn from(spec: GroupSpec) -> Self {
        match spec {
            GroupSpec::Free { rank } => RawSpec::Free { rank },
            GroupSpec::FreeProduct { orders } => RawSpec::FreeProduct { orders },
            GroupSpec::Coxeter { coxeter_matrix } => {
                RawSpec::Coxeter { coxeter_matrix: coxeter_matrix.rows().to_vec() }
            }
        }
    }
}

impl GroupSpec {
    pub fn free(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::malformed("free group rank must be at least 1"));
        }
        Ok(GroupSpec::Free { rank })
    }

    pub fn free_product(orders: Vec<Order>) -> Result<Self> {
        if orders.len() < 2 {
            return Err(Error::malformed("a free product needs at least two factors"));
        }
        if let Some(bad) = orders.iter().find(|o| matches!(o, Order::Finite(n) if *n < 2)) {
            return Err(Error::malformed(format!("factor order {bad} must be at least 2")));
        }
        Ok(GroupSpec::FreeProduct { orders })
    }

    /// Shorthand for a free product of finite cyclic groups.
    pub fn cyclic_product(orders: &[u32]) -> Result<Self> {
        Self::free_product(orders.iter().map(|&n| Order::Finite(n)).collect())
    }

    pub fn coxeter(m: CoxeterMatrix) -> Self {
        GroupSpec::Coxeter { coxeter_matrix: m }
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        Ok(toml::from_str(text)?)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("group specs always serialize")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    /// Short human-readable name, e.g. `F_2`, `Z/2*Z/3`, `Coxeter(3)`.
    pub fn name(&self) -> String {
        match self {
            GroupSpec::Free { rank } => format!("F_{rank}"),
            GroupSpec::FreeProduct { orders } => orders
                .iter()
                .map(|o| match o {
                    Order::Finite(n) => format!("Z/{n}"),
                    Order::Infinite => "Z".to_string(),
                })
                .collect::<Vec<_>>()
                .join("*"),
            GroupSpec::Coxeter { coxeter_matrix } => format!("Coxeter({})", coxeter_matrix.rank()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_kind() {
        let f = GroupSpec::from_toml("kind = \"free\"\nrank = 2\n").unwrap();
        assert_eq!(f, GroupSpec::Free { rank: 2 });

        let p = GroupSpec::from_toml("kind = \"free_product\"\norders = [2, 0, \"inf\", 3]\n").unwrap();
        assert_eq!(
            p,
            GroupSpec::FreeProduct {
                orders: vec![Order::Finite(2), Order::Infinite, Order::Infinite, Order::Finite(3)]
            }
        );

        let c = GroupSpec::from_toml("kind = \"coxeter\"\ncoxeter_matrix = [[1, \"inf\"], [0, 1]]\n").unwrap();
        let GroupSpec::Coxeter { coxeter_matrix } = &c else { panic!() };
        assert_eq!(coxeter_matrix.entry(0, 1), Order::Infinite);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(GroupSpec::from_toml("kind = \"free\"\nrank = 0\n").is_err());
        assert!(GroupSpec::from_toml("kind = \"free_product\"\norders = [2]\n").is_err());
        assert!(GroupSpec::from_toml("kind = \"free_product\"\norders = [1, 3]\n").is_err());
        assert!(GroupSpec::from_toml("kind = \"coxeter\"\ncoxeter_matrix = [[1, 3], [2, 1]]\n").is_err());
        assert!(GroupSpec::from_toml("kind = \"braid\"\n").is_err());
    }

    #[test]
    fn toml_round_trip() {
        for text in [
            "kind = \"free\"\nrank = 3\n",
            "kind = \"free_product\"\norders = [2, \"inf\", 7]\n",
            "kind = \"coxeter\"\ncoxeter_matrix = [[1, 2, 3], [2, 1, 7], [3, 7, 1]]\n",
        ] {
            let spec = GroupSpec::from_toml(text).unwrap();
            let again = GroupSpec::from_toml(&spec.to_toml()).unwrap();
            assert_eq!(spec, again);
            assert_eq!(spec.to_toml(), again.to_toml());
        }
    }
}
