//! Point quotients pt/G and linear quotients C^n/G.

use std::collections::BTreeMap;

use num::{BigRational, Zero};

use super::{CohomologyTable, Degree, SectorContribution};
use crate::error::Result;
use crate::group::FiniteMatrixGroup;
use crate::sectors::sector_table;

/// pt/G: every conjugacy class contributes one class in degree 0.
pub fn cohomology_point(g: &FiniteMatrixGroup) -> CohomologyTable {
    let sectors = g
        .conjugacy_classes()
        .iter()
        .map(|c| SectorContribution {
            label: if c.representative == 0 { "1".into() } else { format!("g{}", c.representative) },
            shift: BigRational::zero(),
            entries: BTreeMap::from([(Degree::int(0), 1)]),
        })
        .collect();
    CohomologyTable::from_sectors("point", 0, sectors)
}

/// C^n/G: each class contributes h^{ι,ι} = 1.
pub fn hodge_linear(g: &FiniteMatrixGroup) -> Result<CohomologyTable> {
    let table = sector_table(g)?;
    let sectors = table
        .sectors()
        .iter()
        .map(|s| SectorContribution {
            label: s.label(),
            shift: s.iota.clone(),
            entries: BTreeMap::from([(Degree::Bi(s.iota.clone(), s.iota.clone()), 1)]),
        })
        .collect();
    Ok(CohomologyTable::from_sectors("linear", g.dim(), sectors))
}
