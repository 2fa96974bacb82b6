//! Results shared by all projections.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Coefficients of a projection onto plane waves together with the
/// reconstructed image `sum_k coefficients[k] * wave_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectionResult<K, C, T> {
    pub coefficients: BTreeMap<K, C>,
    pub reconstructed: T,
}

/// Half of the bi-degree index set used by the split projections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// `p >= q`, which includes the diagonal.
    Ge,
    /// `p < q`.
    Lt,
}

impl Branch {
    pub fn of(p: u32, q: u32) -> Branch {
        if p >= q {
            Branch::Ge
        } else {
            Branch::Lt
        }
    }

    pub fn contains(self, p: u32, q: u32) -> bool {
        Branch::of(p, q) == self
    }

    pub fn both() -> [Branch; 2] {
        [Branch::Ge, Branch::Lt]
    }

    pub fn name(self) -> &'static str {
        match self {
            Branch::Ge => "ge",
            Branch::Lt => "lt",
        }
    }
}

impl std::str::FromStr for Branch {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ge" => Ok(Branch::Ge),
            "lt" => Ok(Branch::Lt),
            other => Err(format!("unknown branch {other:?} (expected ge or lt)")),
        }
    }
}
