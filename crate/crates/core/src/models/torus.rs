//! Global quotients T^{2n}/G of the standard complex torus C^n/Z^{2n} by
//! finite groups of integral automorphisms.
//!
//! A sector (g) contributes H*(Y^g)^{C(g)} shifted by 2ι_(g), where Y^g is the
//! fixed locus of g on the torus. Y^g is a disjoint union of translated
//! subtori; the Smith form of B = A − I gives the component group and
//! ker B the tangent directions. Invariants are counted by averaging
//! characters over the centralizer.

use std::collections::BTreeMap;

use num::integer::lcm;
use num::{BigRational, One, Signed, Zero};

use super::smith::{mat_mul, smith_normal_form};
use super::{CohomologyTable, Degree, SectorContribution};
use crate::cyclo::{CycField, CycMatrix, CycNum};
use crate::error::{Error, Result};
use crate::group::FiniteMatrixGroup;

/// Bound on the number of fixed-locus components enumerated per sector.
pub const COMPONENT_CAP: u128 = 1_000_000;

/// Integral generators acting on R^{2n}/Z^{2n}, each commuting with
/// J₀ = [[0, −I], [I, 0]] and unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusModel {
    real_dim: usize,
    generators: Vec<Vec<Vec<i64>>>,
}

impl TorusModel {
    pub fn new(real_dim: usize, generators: Vec<Vec<Vec<i64>>>) -> Result<TorusModel> {
        if real_dim == 0 || real_dim % 2 != 0 {
            return Err(Error::ModelViolation(format!("torus dimension {real_dim} is not a positive even number")));
        }
        let n = real_dim / 2;
        for (gi, a) in generators.iter().enumerate() {
            if a.len() != real_dim || a.iter().any(|r| r.len() != real_dim) {
                return Err(Error::ModelViolation(format!("generator {gi} is not {real_dim}x{real_dim}")));
            }
            // A·J₀ = J₀·A  ⇔  A = [[P, −Q], [Q, P]]
            for i in 0..n {
                for j in 0..n {
                    let (p, q) = (a[i][j], a[i + n][j]);
                    if a[i + n][j + n] != p || a[i][j + n] != -q {
                        return Err(Error::ModelViolation(format!(
                            "generator {gi} does not commute with the standard complex structure"
                        )));
                    }
                }
            }
            let det = rational_matrix(a).determinant();
            let det = det.as_rational().cloned().unwrap_or_else(BigRational::zero);
            if det.abs() != BigRational::one() {
                return Err(Error::ModelViolation(format!("generator {gi} has determinant {det}, expected ±1")));
            }
        }
        Ok(TorusModel { real_dim, generators })
    }

    pub fn real_dim(&self) -> usize {
        self.real_dim
    }

    pub fn complex_dim(&self) -> usize {
        self.real_dim / 2
    }

    pub fn generators(&self) -> &[Vec<Vec<i64>>] {
        &self.generators
    }

    /// The group generated over Q by the real 2n×2n matrices.
    pub fn real_group(&self, cap: usize) -> Result<FiniteMatrixGroup> {
        let gens: Vec<CycMatrix> = self.generators.iter().map(|a| rational_matrix(a)).collect();
        FiniteMatrixGroup::generate(&CycField::new(1), self.real_dim, &gens, cap)
    }
}

fn rational_matrix(a: &[Vec<i64>]) -> CycMatrix {
    let f = CycField::new(1);
    let n = a.len();
    let entries = a.iter().flatten().map(|&x| CycNum::from_int(&f, x)).collect();
    CycMatrix::from_entries(&f, n, n, entries)
}

fn integer_entries(m: &CycMatrix) -> Vec<Vec<i128>> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| {
                    let r = m.get(i, j).as_rational().expect("rational matrix");
                    assert!(r.is_integer(), "integral matrix expected");
                    i128::try_from(r.to_integer()).expect("entry fits in i128")
                })
                .collect()
        })
        .collect()
}

/// P + iQ acting on C^n, for A = [[P, −Q], [Q, P]].
pub fn complexify(a: &CycMatrix) -> CycMatrix {
    let n = a.rows() / 2;
    let f = CycField::new(4);
    let i = CycNum::zeta_pow(&f, 1);
    let mut out = CycMatrix::zero(&f, n, n);
    for r in 0..n {
        for c in 0..n {
            let p = a.get(r, c).as_rational().expect("rational matrix").clone();
            let q = a.get(r + n, c).as_rational().expect("rational matrix").clone();
            let z = &CycNum::from_rational(&f, p) + &(&CycNum::from_rational(&f, q) * &i);
            out.set(r, c, z);
        }
    }
    out
}

/// Coefficients e_0..e_r of det(I + t·M) = Σ tr(Λ^k M) t^k, by the
/// Faddeev–LeVerrier recursion.
pub fn exterior_traces(m: &[Vec<BigRational>]) -> Vec<BigRational> {
    let r = m.len();
    let mut e = vec![BigRational::one()];
    // char poly c_r = 1, c_{r-k} = −tr(M·M_k)/k with M_k = M·M_{k−1} + c_{r−k+1} I
    let mut mk: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); r]; r];
    let mut c_prev = BigRational::one();
    for k in 1..=r {
        let mut next = rat_mul(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c_prev;
        }
        mk = next;
        let am = rat_mul(m, &mk);
        let tr = (0..r).fold(BigRational::zero(), |acc, i| acc + &am[i][i]);
        let c = -tr / BigRational::from_integer(k.into());
        // e_k = (−1)^k c_{r−k}
        e.push(if k % 2 == 0 { c.clone() } else { -c.clone() });
        c_prev = c;
    }
    e
}

fn rat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Data describing the fixed locus Y^g of one element.
struct FixedLocus {
    /// Nonzero invariant factors of A − I.
    invariants: Vec<i128>,
    col_ops: Vec<Vec<i128>>,
    col_ops_inv: Vec<Vec<i128>>,
    /// Rational kernel of A − I with its free coordinates.
    kernel: crate::cyclo::Kernel,
}

impl FixedLocus {
    fn new(a: &CycMatrix) -> FixedLocus {
        let b = a.sub(&CycMatrix::identity(a.field(), a.rows()));
        let snf = smith_normal_form(&integer_entries(&b));
        FixedLocus {
            invariants: snf.invariants,
            col_ops: snf.col_ops,
            col_ops_inv: snf.col_ops_inv,
            kernel: b.kernel(),
        }
    }

    fn component_count(&self) -> u128 {
        self.invariants.iter().map(|&d| d as u128).product()
    }

    /// Number of components mapped to themselves by h.
    ///
    /// In coordinates y = Q⁻¹x the locus is {y : d_i·y_i ∈ Z for i < s} and
    /// components are labelled by (y_i mod 1)_{i<s} = (a_i/d_i).
    fn fixed_components(&self, h: &[Vec<i128>]) -> u128 {
        let s = self.invariants.len();
        if s == 0 {
            return 1;
        }
        let hq = mat_mul(&mat_mul(&self.col_ops_inv, h), &self.col_ops);
        let l = self.invariants.iter().fold(1i128, |acc, &d| lcm(acc, d));
        let scale: Vec<i128> = self.invariants.iter().map(|&d| l / d).collect();
        let mut label = vec![0i128; s];
        let mut count = 0u128;
        loop {
            // y·L for the first s coordinates of H'·p'
            let fixed = (0..s).all(|i| {
                let img: i128 = (0..s).map(|j| hq[i][j] * label[j] * scale[j]).sum();
                (img - label[i] * scale[i]).rem_euclid(l) == 0
            });
            count += u128::from(fixed);
            // odometer over Π Z/d_i
            let mut pos = 0;
            while pos < s {
                label[pos] += 1;
                if label[pos] < self.invariants[pos] {
                    break;
                }
                label[pos] = 0;
                pos += 1;
            }
            if pos == s {
                break;
            }
        }
        count
    }

    /// h restricted to ker B, in the reduced-echelon basis.
    fn restrict(&self, h: &CycMatrix) -> Vec<Vec<BigRational>> {
        let r = self.kernel.dim();
        let images: Vec<Vec<CycNum>> = self.kernel.basis.iter().map(|v| h.mul_vec(v)).collect();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| images[j][self.kernel.free[i]].as_rational().expect("rational").clone())
                    .collect()
            })
            .collect()
    }
}

/// Orbifold Betti numbers of T^{2n}/G.
pub fn betti_torus(model: &TorusModel, cap: usize) -> Result<CohomologyTable> {
    let g = model.real_group(cap)?;
    let order = g.order();
    let mut contributions = Vec::new();
    for class in g.conjugacy_classes() {
        let rep = class.representative;
        let a = g.element(rep);
        let locus = FixedLocus::new(a);
        let components = locus.component_count();
        if components > COMPONENT_CAP {
            return Err(Error::EnumerationCapExceeded { requested: components, cap: COMPONENT_CAP });
        }
        let r = locus.kernel.dim();
        let centralizer = g.centralizer(&[rep]);
        let mut sums = vec![BigRational::zero(); r + 1];
        for &h in &centralizer {
            let hm = g.element(h);
            let fix = locus.fixed_components(&integer_entries(hm));
            if fix == 0 {
                continue;
            }
            let traces = exterior_traces(&locus.restrict(hm));
            let fix = BigRational::from_integer(fix.into());
            for (k, t) in traces.iter().enumerate() {
                sums[k] += &fix * t;
            }
        }
        let c_order = BigRational::from_integer(centralizer.len().into());
        debug_assert_eq!(centralizer.len() * class.size(), order);

        let complex = complexify(a);
        let iota = {
            let mults = complex.eigenvalue_multiplicities(g.element_order(rep) as u64)?;
            let m = g.element_order(rep) as i64;
            mults
                .iter()
                .enumerate()
                .fold(BigRational::zero(), |acc, (j, &k)| acc + BigRational::new((j as i64 * k as i64).into(), m.into()))
        };
        let shift = &iota + &iota;
        let mut entries = BTreeMap::new();
        for (k, s) in sums.into_iter().enumerate() {
            let dim = s / &c_order;
            if !dim.is_integer() || dim < BigRational::zero() {
                return Err(Error::InternalInconsistency(format!(
                    "invariant dimension {dim} in degree {k} of sector g{rep}"
                )));
            }
            let dim = u64::try_from(dim.to_integer()).expect("dimension fits in u64");
            if dim > 0 {
                entries.insert(Degree::Single(BigRational::from_integer(k.into()) + &shift), dim);
            }
        }
        contributions.push(SectorContribution {
            label: if rep == 0 { "1".into() } else { format!("g{rep}") },
            shift: iota,
            entries,
        });
    }
    Ok(CohomologyTable::from_sectors("torus", model.complex_dim(), contributions))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::group::DEFAULT_CLOSURE_CAP;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    /// Σ of principal k×k minors, by brute force over index subsets.
    fn principal_minor_sums(m: &[Vec<BigRational>]) -> Vec<BigRational> {
        let r = m.len();
        let f = CycField::new(1);
        let mut out = vec![BigRational::zero(); r + 1];
        for mask in 0u32..(1 << r) {
            let idx: Vec<usize> = (0..r).filter(|i| mask & (1 << i) != 0).collect();
            let k = idx.len();
            let det = if k == 0 {
                BigRational::one()
            } else {
                let entries = idx
                    .iter()
                    .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
                    .map(|(i, j)| CycNum::from_rational(&f, m[i][j].clone()))
                    .collect();
                CycMatrix::from_entries(&f, k, k, entries).determinant().as_rational().unwrap().clone()
            };
            out[k] += det;
        }
        out
    }

    #[test]
    fn exterior_traces_match_minors() {
        let m = vec![
            vec![q(1), q(2), q(0)],
            vec![q(-1), q(3), q(5)],
            vec![q(4), q(0), q(-2)],
        ];
        assert_eq!(exterior_traces(&m), principal_minor_sums(&m));
        let minus = vec![vec![q(-1), q(0)], vec![q(0), q(-1)]];
        assert_eq!(exterior_traces(&minus), vec![q(1), q(-2), q(1)]);
        assert_eq!(exterior_traces(&[]), vec![q(1)]);
    }

    #[test]
    fn kummer_betti() {
        let t = betti_torus(&catalog::kummer(), DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(t.integral_betti(), vec![1, 0, 22, 0, 1]);
        assert_eq!(t.sectors.len(), 2);
        let untwisted = &t.sectors[0];
        let expect: BTreeMap<Degree, u64> =
            [(Degree::int(0), 1), (Degree::int(2), 6), (Degree::int(4), 1)].into_iter().collect();
        assert_eq!(untwisted.entries, expect);
        assert_eq!(t.sectors[1].entries, BTreeMap::from([(Degree::int(2), 16)]));
        assert!(t.is_poincare_symmetric());
    }

    #[test]
    fn plain_torus() {
        let t = betti_torus(&catalog::torus("t2").unwrap(), DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(t.integral_betti(), vec![1, 2, 1]);
    }

    #[test]
    fn rotation_by_i_on_square_torus() {
        // T²/Z₄ with z ↦ iz: untwisted (1,0,1); i and −i each fix 2 points
        // (ι = 1/4, 3/4), −1 fixes 4 points of which C = Z₄ identifies pairs.
        let model = TorusModel::new(2, vec![vec![vec![0, -1], vec![1, 0]]]).unwrap();
        let t = betti_torus(&model, DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(t.betti(0), 1);
        assert_eq!(t.betti(1), 3);
        assert_eq!(t.betti(2), 1);
        assert_eq!(t.get(&Degree::rational(1, 2)), 2);
        assert_eq!(t.get(&Degree::rational(3, 2)), 2);
        assert!(t.is_poincare_symmetric());
    }

    #[test]
    fn model_violations() {
        let shear = vec![vec![1, 1], vec![0, 1]];
        assert!(matches!(TorusModel::new(2, vec![shear]), Err(Error::ModelViolation(_))));
        let doubling = vec![vec![2, 0], vec![0, 2]];
        assert!(matches!(TorusModel::new(2, vec![doubling]), Err(Error::ModelViolation(_))));
        assert!(matches!(TorusModel::new(3, vec![]), Err(Error::ModelViolation(_))));
    }
}
