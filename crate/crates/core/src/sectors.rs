//! Twisted sectors and multi-sectors of a linear action: degree-shifting
//! numbers, fixed subspaces, and the rank arithmetic of obstruction and
//! excess bundles.

use num::{BigRational, ToPrimitive, Zero};

use crate::cyclo::{CycMatrix, CycNum};
use crate::group::{FiniteMatrixGroup, TupleClass};
use crate::error::{Error, Result};

/// A subspace of the representation space, given by a basis of column vectors.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub basis: Vec<Vec<CycNum>>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Eigenvalue exponents of an element: ρ(g) ~ diag(ζ_m^{e_1}, …, ζ_m^{e_n})
/// with 0 ≤ e_i < m and m the order of g.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenExponents {
    pub order: u64,
    /// Sorted ascending, length n.
    pub exponents: Vec<u64>,
}

impl EigenExponents {
    /// ι = Σ e_i / m.
    pub fn age(&self) -> BigRational {
        let sum: u64 = self.exponents.iter().sum();
        BigRational::new(sum.into(), self.order.into())
    }
}

pub fn eigen_exponents(g: &FiniteMatrixGroup, element: usize) -> Result<EigenExponents> {
    let order = g.element_order(element) as u64;
    let mults = g.eigenvalue_multiplicities(element)?;
    let exponents = mults
        .iter()
        .enumerate()
        .flat_map(|(j, &m)| std::iter::repeat(j as u64).take(m))
        .collect();
    Ok(EigenExponents { order, exponents })
}

/// Degree-shifting number ι_(g) = Σ_i m_{i,g}/m_g.
pub fn degree_shift(g: &FiniteMatrixGroup, element: usize) -> Result<BigRational> {
    Ok(eigen_exponents(g, element)?.age())
}

/// V^{g₁} ∩ … ∩ V^{g_k}, the common fixed subspace.
pub fn fixed_subspace(g: &FiniteMatrixGroup, tuple: &[usize]) -> Subspace {
    let n = g.dim();
    let id = CycMatrix::identity(g.field(), n);
    let mut blocks: Vec<CycMatrix> = tuple.iter().map(|&h| g.element(h).sub(&id)).collect();
    if blocks.is_empty() {
        blocks.push(CycMatrix::zero(g.field(), n, n));
    }
    let stacked = CycMatrix::vstack(g.field(), n, &blocks);
    Subspace { basis: stacked.kernel().basis }
}

/// Dimension of the sum of subspaces of the n-dimensional representation space.
pub fn sum_dimension(g: &FiniteMatrixGroup, spaces: &[&Subspace]) -> usize {
    let cols: Vec<Vec<CycNum>> = spaces.iter().flat_map(|s| s.basis.iter().cloned()).collect();
    if cols.is_empty() {
        return 0;
    }
    CycMatrix::from_columns(g.field(), g.dim(), &cols).rank()
}

/// One twisted (or the untwisted) sector X_(g).
#[derive(Clone, Debug)]
pub struct Sector {
    /// Index into the group's conjugacy-class list.
    pub class_index: usize,
    pub representative: usize,
    pub class_size: usize,
    pub centralizer_order: usize,
    pub iota: BigRational,
    pub fixed_dim: usize,
    pub exponents: EigenExponents,
    pub is_untwisted: bool,
}

impl Sector {
    pub fn label(&self) -> String {
        if self.is_untwisted {
            "1".to_string()
        } else {
            format!("g{}", self.representative)
        }
    }
}

/// All sectors of a linear action together with per-element fixed subspaces.
///
/// Sectors are sorted by (ι, class size, representative index).
#[derive(Clone, Debug)]
pub struct SectorTable {
    dim: usize,
    sectors: Vec<Sector>,
    by_class: Vec<usize>,
    element_fixed: Vec<Subspace>,
}

impl SectorTable {
    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.sectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sectors.is_empty()
    }

    /// Sector index of the conjugacy class containing `element`.
    pub fn sector_of(&self, g: &FiniteMatrixGroup, element: usize) -> usize {
        self.by_class[g.class_of(element)]
    }

    pub fn iota_of(&self, g: &FiniteMatrixGroup, element: usize) -> &BigRational {
        &self.sectors[self.sector_of(g, element)].iota
    }

    /// V^h for a single element.
    pub fn fixed_space(&self, element: usize) -> &Subspace {
        &self.element_fixed[element]
    }
}

/// X̃ = ⊔_{(g)} X_(g): one sector per conjugacy class.
pub fn sector_table(g: &FiniteMatrixGroup) -> Result<SectorTable> {
    let mut sectors = Vec::with_capacity(g.conjugacy_classes().len());
    for (ci, class) in g.conjugacy_classes().iter().enumerate() {
        let rep = class.representative;
        let exponents = eigen_exponents(g, rep)?;
        let iota = exponents.age();
        sectors.push(Sector {
            class_index: ci,
            representative: rep,
            class_size: class.size(),
            centralizer_order: class.centralizer_order,
            fixed_dim: fixed_subspace(g, &[rep]).dim(),
            exponents,
            iota,
            is_untwisted: rep == 0,
        });
    }
    sectors.sort_by(|a, b| {
        (&a.iota, a.class_size, a.representative).cmp(&(&b.iota, b.class_size, b.representative))
    });
    let mut by_class = vec![0; sectors.len()];
    for (si, s) in sectors.iter().enumerate() {
        by_class[s.class_index] = si;
    }
    let element_fixed = (0..g.order()).map(|h| fixed_subspace(g, &[h])).collect();
    Ok(SectorTable { dim: g.dim(), sectors, by_class, element_fixed })
}

/// A decorated class of k-tuples.
#[derive(Clone, Debug)]
pub struct MultiSector {
    pub class: TupleClass,
    pub iotas: Vec<BigRational>,
    pub joint_fixed_dim: usize,
    /// Sector index of each component.
    pub evaluations: Vec<usize>,
    /// Sector index of g₁⋯g_k.
    pub product_sector: usize,
}

pub fn multi_sectors(
    g: &FiniteMatrixGroup,
    table: &SectorTable,
    k: usize,
    product_one: bool,
) -> Result<Vec<MultiSector>> {
    Ok(g
        .tuple_classes(k, product_one)?
        .into_iter()
        .map(|class| {
            let rep = &class.representative;
            MultiSector {
                iotas: rep.iter().map(|&h| table.iota_of(g, h).clone()).collect(),
                joint_fixed_dim: fixed_subspace(g, rep).dim(),
                evaluations: rep.iter().map(|&h| table.sector_of(g, h)).collect(),
                product_sector: table.sector_of(g, class.product_index),
                class,
            }
        })
        .collect())
}

fn nonneg_integer(value: BigRational, what: &str) -> Result<u64> {
    if !value.is_integer() || value < BigRational::zero() {
        return Err(Error::InternalInconsistency(format!("{what} evaluated to {value}")));
    }
    value
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::InternalInconsistency(format!("{what} does not fit in u64")))
}

/// dim V^{g₁,…,g_k} − n + Σ ι_(g_j), the rank of the obstruction bundle over
/// a product-one multi-sector (any k ≥ 1; k = 3 is the 3-point case).
pub fn obstruction_rank(g: &FiniteMatrixGroup, table: &SectorTable, tuple: &[usize]) -> Result<u64> {
    if g.product(tuple) != 0 {
        return Err(Error::ProductNotIdentity);
    }
    let joint = fixed_subspace(g, tuple).dim();
    let iota_sum = tuple.iter().fold(BigRational::zero(), |acc, &h| acc + table.iota_of(g, h));
    let value = BigRational::from_integer(joint.into()) - BigRational::from_integer(g.dim().into()) + iota_sum;
    nonneg_integer(value, "obstruction rank")
}

/// rank ν = dim V^{g₁g₂} − dim(V^{g₁}∩V^{g₂} + V^{g₃}∩V^{g₄}) for a
/// product-one 4-tuple.
pub fn excess_rank(g: &FiniteMatrixGroup, tuple: &[usize; 4]) -> Result<u64> {
    if g.product(tuple) != 0 {
        return Err(Error::ProductNotIdentity);
    }
    let g12 = g.mul(tuple[0], tuple[1]);
    let v = fixed_subspace(g, &[g12]).dim();
    let a = fixed_subspace(g, &tuple[..2]);
    let b = fixed_subspace(g, &tuple[2..]);
    let sum = sum_dimension(g, &[&a, &b]);
    v.checked_sub(sum)
        .map(|r| r as u64)
        .ok_or_else(|| Error::InternalInconsistency("excess rank is negative".into()))
}

/// Both sides of the gluing identity for a product-one 4-tuple split as
/// (g₁, g₂, g) and (g⁻¹, g₃, g₄) with g = (g₁g₂)⁻¹.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingRanks {
    pub left: u64,
    pub right: u64,
    pub excess: u64,
    /// dim V^{g₁,…,g₄} − n + Σ_{j=1}^4 ι_(g_j)
    pub joint: u64,
}

impl GluingRanks {
    pub fn holds(&self) -> bool {
        self.left + self.right + self.excess == self.joint
    }
}

pub fn gluing_ranks(g: &FiniteMatrixGroup, table: &SectorTable, tuple: &[usize; 4]) -> Result<GluingRanks> {
    if g.product(tuple) != 0 {
        return Err(Error::ProductNotIdentity);
    }
    let split = g.inverse(g.mul(tuple[0], tuple[1]));
    let left = obstruction_rank(g, table, &[tuple[0], tuple[1], split])?;
    let right = obstruction_rank(g, table, &[g.inverse(split), tuple[2], tuple[3]])?;
    Ok(GluingRanks {
        left,
        right,
        excess: excess_rank(g, tuple)?,
        joint: obstruction_rank(g, table, tuple)?,
    })
}

/// ι_(g) + ι_(g⁻¹) against n − dim V^g, returned as (lhs, rhs).
pub fn codimension_identity(g: &FiniteMatrixGroup, table: &SectorTable, element: usize) -> (BigRational, BigRational) {
    let lhs = table.iota_of(g, element) + table.iota_of(g, g.inverse(element));
    let rhs = BigRational::from_integer((g.dim() - table.fixed_space(element).dim()).into());
    (lhs, rhs)
}

/// True when every degree shift is an integer.
pub fn all_shifts_integral(table: &SectorTable) -> bool {
    table.sectors().iter().all(|s| s.iota.is_integer())
}
