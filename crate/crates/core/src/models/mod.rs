//! Orbifold Betti and Hodge tables for the supported model families.

pub mod families;
pub mod linear;
pub mod smith;
pub mod torus;

use std::collections::BTreeMap;
use std::fmt;

use num::BigRational;

use crate::cyclo::format_rational;

pub use families::{catalog_bv, catalog_wp, BorceaVoisin};
pub use linear::{cohomology_point, hodge_linear};
pub use torus::{betti_torus, TorusModel};

/// A (real) cohomological degree or a Hodge bidegree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    Single(BigRational),
    Bi(BigRational, BigRational),
}

impl Degree {
    pub fn int(d: i64) -> Degree {
        Degree::Single(BigRational::from_integer(d.into()))
    }

    pub fn rational(n: i64, d: i64) -> Degree {
        Degree::Single(BigRational::new(n.into(), d.into()))
    }

    pub fn bi(p: i64, q: i64) -> Degree {
        Degree::Bi(BigRational::from_integer(p.into()), BigRational::from_integer(q.into()))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Single(d) => write!(f, "{}", format_rational(d)),
            Degree::Bi(p, q) => write!(f, "{},{}", format_rational(p), format_rational(q)),
        }
    }
}

/// What one sector contributes to a table, before summation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorContribution {
    pub label: String,
    pub shift: BigRational,
    pub entries: BTreeMap<Degree, u64>,
}

/// Orbifold Betti (or Hodge) numbers of a model, with the per-sector
/// breakdown that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    pub model: String,
    /// Complex dimension n; real degrees lie in [0, 2n].
    pub complex_dim: usize,
    pub entries: BTreeMap<Degree, u64>,
    pub sectors: Vec<SectorContribution>,
}

impl CohomologyTable {
    pub(crate) fn from_sectors(model: impl Into<String>, complex_dim: usize, sectors: Vec<SectorContribution>) -> Self {
        let mut entries = BTreeMap::new();
        for s in &sectors {
            for (d, v) in &s.entries {
                *entries.entry(d.clone()).or_insert(0) += v;
            }
        }
        entries.retain(|_, v| *v > 0);
        CohomologyTable { model: model.into(), complex_dim, entries, sectors }
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn get(&self, d: &Degree) -> u64 {
        self.entries.get(d).copied().unwrap_or(0)
    }

    /// b_d for an integral degree d.
    pub fn betti(&self, d: i64) -> u64 {
        self.get(&Degree::int(d))
    }

    /// Betti numbers b_0..b_{2n} at integral degrees.
    pub fn integral_betti(&self) -> Vec<u64> {
        (0..=2 * self.complex_dim as i64).map(|d| self.betti(d)).collect()
    }

    /// d ↦ 2n − d symmetry of single-graded entries.
    pub fn is_poincare_symmetric(&self) -> bool {
        let top = BigRational::from_integer((2 * self.complex_dim).into());
        self.entries.iter().all(|(d, v)| match d {
            Degree::Single(x) => self.get(&Degree::Single(&top - x)) == *v,
            Degree::Bi(p, q) => {
                let n = BigRational::from_integer(self.complex_dim.into());
                self.get(&Degree::Bi(&n - p, &n - q)) == *v
            }
        })
    }
}
