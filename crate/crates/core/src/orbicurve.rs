//! Orbifold bundles over closed 2-orbifolds, described by their
//! classification data: genus, rank, marked points with local exponents,
//! and the rational first Chern number.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Zero};

use crate::cyclo::{format_rational, parse_rational};
use crate::error::{Error, Result};
use crate::group::FiniteMatrixGroup;
use crate::sectors::{eigen_exponents, excess_rank, fixed_subspace};

/// An orbifold point of order m where the fibre splits with weights
/// e^{2πi m_j/m}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mark {
    pub order: u64,
    pub exponents: Vec<i64>,
}

impl FromStr for Mark {
    type Err = Error;

    /// Parses "m:e1,e2,…,en".
    fn from_str(s: &str) -> Result<Mark> {
        let bad = |why: &str| Error::Parse(format!("mark \"{s}\": {why}"));
        let (m, exps) = s.split_once(':').ok_or_else(|| bad("expected m:e1,…,en"))?;
        let order = m.trim().parse::<u64>().map_err(|_| bad("order is not a nonnegative integer"))?;
        let exponents = exps
            .split(',')
            .map(|e| e.trim().parse::<i64>().map_err(|_| bad(&format!("exponent \"{e}\" is not an integer"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Mark { order, exponents })
    }
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps: Vec<String> = self.exponents.iter().map(|e| e.to_string()).collect();
        write!(f, "{}:{}", self.order, exps.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbiBundleData {
    pub genus: u64,
    pub rank: usize,
    pub marks: Vec<Mark>,
    /// c₁(E)([Σ]).
    pub c: BigRational,
}

impl OrbiBundleData {
    pub fn new(genus: u64, rank: usize, marks: Vec<Mark>, c: &str) -> Result<OrbiBundleData> {
        let c = parse_rational(c).ok_or_else(|| Error::Parse(format!("invalid rational \"{c}\" for c")))?;
        Ok(OrbiBundleData { genus, rank, marks, c })
    }

    /// Σ_i Σ_j m_{i,j}/m_i.
    pub fn exponent_sum(&self) -> BigRational {
        self.marks.iter().fold(BigRational::zero(), |acc, m| {
            let s: i64 = m.exponents.iter().sum();
            acc + BigRational::new(s.into(), m.order.into())
        })
    }
}

/// Check the exponent ranges and the congruence c ≡ Σ m_{i,j}/m_i (mod Z),
/// returning c₁ of the de-singularized bundle.
pub fn classify_validate(data: &OrbiBundleData) -> Result<BigInt> {
    if data.rank == 0 {
        return Err(Error::Validation("rank must be positive".into()));
    }
    for (i, mark) in data.marks.iter().enumerate() {
        if mark.order < 2 {
            return Err(Error::Validation(format!("mark {i}: multiplicity {} is below 2", mark.order)));
        }
        if mark.exponents.len() != data.rank {
            return Err(Error::Validation(format!(
                "mark {i}: {} exponents given for rank {}",
                mark.exponents.len(),
                data.rank
            )));
        }
        if let Some(e) = mark.exponents.iter().find(|&&e| e < 0 || e as u64 >= mark.order) {
            return Err(Error::ExponentRange(format!("mark {i}: exponent {e} outside [0, {})", mark.order)));
        }
    }
    let desing = &data.c - data.exponent_sum();
    if !desing.is_integer() {
        return Err(Error::CongruenceViolation(format!(
            "c = {} is not congruent to the exponent sum {} mod Z",
            format_rational(&data.c),
            format_rational(&data.exponent_sum())
        )));
    }
    Ok(desing.to_integer())
}

/// χ(O(E)) = n(1 − g) + c − Σ Σ m_{i,j}/m_i.
pub fn euler_characteristic(data: &OrbiBundleData) -> Result<BigInt> {
    let desing = classify_validate(data)?;
    let n = BigInt::from(data.rank);
    Ok(n * (BigInt::from(1) - BigInt::from(data.genus)) + desing)
}

/// The flat bundle over (S², z, m) determined by a product-one tuple:
/// each nontrivial g_j marks a point with the exponents of ρ(g_j).
///
/// The sum of ages is an integer for product-one tuples, so c = 0 is
/// admissible and gives χ = n − Σ ι_(g_j).
pub fn sector_bundle_data(g: &FiniteMatrixGroup, tuple: &[usize]) -> Result<OrbiBundleData> {
    if g.product(tuple) != 0 {
        return Err(Error::ProductNotIdentity);
    }
    let mut marks = Vec::new();
    for &h in tuple {
        let e = eigen_exponents(g, h)?;
        if e.order > 1 {
            marks.push(Mark { order: e.order as u64, exponents: e.exponents.iter().map(|&x| x as i64).collect() });
        }
    }
    Ok(OrbiBundleData { genus: 0, rank: g.dim(), marks, c: BigRational::zero() })
}

/// χ, kernel and cokernel dimensions of the ∂̄-operator on the bundle of a
/// product-one tuple. The kernel is the invariant subspace V^{g₁,…,g_k}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleIndex {
    pub chi: BigInt,
    pub kernel: u64,
    pub coker: BigInt,
}

pub fn bundle_index(g: &FiniteMatrixGroup, tuple: &[usize]) -> Result<BundleIndex> {
    let chi = euler_characteristic(&sector_bundle_data(g, tuple)?)?;
    let kernel = fixed_subspace(g, tuple).dim() as u64;
    Ok(BundleIndex { coker: BigInt::from(kernel) - &chi, chi, kernel })
}

/// Both gluing identities for a product-one 4-tuple split as (g₁, g₂, g)
/// and (g⁻¹, g₃, g₄), g = (g₁g₂)⁻¹:
/// χ₁ + χ₂ = χ + dim V^g and coker₁ + coker₂ + rank ν = coker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueReport {
    pub left: BundleIndex,
    pub right: BundleIndex,
    pub glued: BundleIndex,
    pub split_fixed_dim: u64,
    pub excess: u64,
}

impl GlueReport {
    pub fn index_holds(&self) -> bool {
        &self.left.chi + &self.right.chi == &self.glued.chi + BigInt::from(self.split_fixed_dim)
    }

    pub fn coker_holds(&self) -> bool {
        &self.left.coker + &self.right.coker + BigInt::from(self.excess) == self.glued.coker
    }

    pub fn holds(&self) -> bool {
        self.index_holds() && self.coker_holds()
    }
}

pub fn glue_index_check(g: &FiniteMatrixGroup, tuple: &[usize; 4]) -> Result<GlueReport> {
    if g.product(tuple) != 0 {
        return Err(Error::ProductNotIdentity);
    }
    let split = g.inverse(g.mul(tuple[0], tuple[1]));
    Ok(GlueReport {
        left: bundle_index(g, &[tuple[0], tuple[1], split])?,
        right: bundle_index(g, &[g.inverse(split), tuple[2], tuple[3]])?,
        glued: bundle_index(g, tuple)?,
        split_fixed_dim: fixed_subspace(g, &[split]).dim() as u64,
        excess: excess_rank(g, tuple)?,
    })
}
