//! Closed-form families: Borcea–Voisin threefolds and weighted projective
//! lines.

use std::collections::BTreeMap;

use num::integer::gcd;
use num::BigRational;

use super::{CohomologyTable, Degree, SectorContribution};
use crate::error::{Error, Result};

/// Orbifold Hodge numbers of (E × S)/⟨τ×σ⟩ for Nikulin data (r, a, δ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorceaVoisin {
    pub r: i64,
    pub a: i64,
    pub delta: i64,
    /// Genus of the non-rational fixed curve of σ.
    pub genus: i64,
    /// Number of rational fixed curves of σ.
    pub rational_curves: i64,
    pub h11: u64,
    pub h21: u64,
    pub table: CohomologyTable,
}

pub fn catalog_bv(r: i64, a: i64, delta: i64) -> Result<BorceaVoisin> {
    let invalid = || Error::InvalidNikulinTriple { r, a, delta };
    let parity_ok = |x: i64| x >= 0 && x % 2 == 0;
    // the invariant lattice is hyperbolic of rank r inside the K3 lattice
    if !(delta == 0 || delta == 1) || !(1..=20).contains(&r) || a < 0 || !parity_ok(r - a) || !parity_ok(22 - r - a) {
        return Err(invalid());
    }
    // (10,10,0): σ acts freely; (10,8,0): fixed locus is two elliptic curves
    if delta == 0 && r == 10 && (a == 10 || a == 8) {
        return Err(invalid());
    }
    let genus = (22 - r - a) / 2;
    let k = (r - a) / 2;
    let curves = 4 * (k + 1) as u64;
    let genus_sum = 4 * genus as u64;
    let big_r = r as u64;

    let bi = Degree::bi;
    let untwisted = SectorContribution {
        label: "1".into(),
        shift: BigRational::from_integer(0.into()),
        entries: BTreeMap::from([
            (bi(0, 0), 1),
            (bi(1, 1), 1 + big_r),
            (bi(2, 2), 1 + big_r),
            (bi(3, 3), 1),
            (bi(3, 0), 1),
            (bi(0, 3), 1),
            (bi(2, 1), 21 - big_r),
            (bi(1, 2), 21 - big_r),
        ]),
    };
    // each fixed curve C sits in a sector with ι = 1 and contributes H^{p,q}(C) at (p+1, q+1)
    let mut twisted_entries = BTreeMap::from([(bi(1, 1), curves), (bi(2, 2), curves)]);
    if genus_sum > 0 {
        twisted_entries.insert(bi(2, 1), genus_sum);
        twisted_entries.insert(bi(1, 2), genus_sum);
    }
    let twisted = SectorContribution {
        label: "tau x sigma".into(),
        shift: BigRational::from_integer(1.into()),
        entries: twisted_entries,
    };
    let table = CohomologyTable::from_sectors("borcea-voisin", 3, vec![untwisted, twisted]);
    Ok(BorceaVoisin {
        r,
        a,
        delta,
        genus,
        rational_curves: k,
        h11: table.get(&bi(1, 1)),
        h21: table.get(&bi(2, 1)),
        table,
    })
}

pub(crate) fn check_coprime(d1: u64, d2: u64) -> Result<()> {
    if d1 == 0 || d2 == 0 || gcd(d1, d2) != 1 {
        return Err(Error::NotCoprime { d1, d2 });
    }
    Ok(())
}

/// Orbifold Betti numbers of the weighted projective line WP(d₁, d₂).
pub fn catalog_wp(d1: u64, d2: u64) -> Result<CohomologyTable> {
    check_coprime(d1, d2)?;
    let mut sectors = vec![SectorContribution {
        label: "1".into(),
        shift: BigRational::from_integer(0.into()),
        entries: BTreeMap::from([(Degree::int(0), 1), (Degree::int(2), 1)]),
    }];
    // the orbifold point of order d₁ carries sectors with ι = j/d₁, and likewise for d₂
    for (name, d) in [("a", d1), ("b", d2)] {
        for j in 1..d {
            let shift = BigRational::new((j as i64).into(), (d as i64).into());
            let degree = Degree::Single(&shift + &shift);
            sectors.push(SectorContribution {
                label: format!("{name}{j}"),
                shift,
                entries: BTreeMap::from([(degree, 1)]),
            });
        }
    }
    Ok(CohomologyTable::from_sectors("weighted-projective-line", 1, sectors))
}
