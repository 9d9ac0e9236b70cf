//! Finite matrix groups: closure from generators, conjugacy classes,
//! centralizers and simultaneous-conjugacy classes of k-tuples.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, OnceLock};

use num::integer::lcm;

use crate::cyclo::{CycField, CycMatrix};
use crate::error::{Error, Result};

/// Default bound on the number of group elements produced by closure.
pub const DEFAULT_CLOSURE_CAP: usize = 100_000;

/// Bound on |G|^k for tuple enumeration.
pub const TUPLE_ENUMERATION_CAP: u128 = 10_000_000;

/// Multiplication tables are materialized up to this group order; larger
/// groups multiply through the element index on demand.
const MUL_TABLE_LIMIT: usize = 4096;

/// A conjugacy class of single elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub centralizer_order: usize,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A class of k-tuples under simultaneous conjugation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleClass {
    pub k: usize,
    pub representative: Vec<usize>,
    pub members: Vec<Vec<usize>>,
    pub centralizer_order: usize,
    /// Element index of g₁g₂…g_k for the representative.
    pub product_index: usize,
}

/// A finite subgroup of GL(n, Q(ζ_N)), fully enumerated.
///
/// Element 0 is the identity; the remaining elements follow breadth-first
/// discovery order from the generators.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    field: Arc<CycField>,
    dim: usize,
    elements: Vec<CycMatrix>,
    index: HashMap<CycMatrix, usize>,
    table: Option<Vec<u32>>,
    inv: Vec<usize>,
    orders: Vec<usize>,
    generators: Vec<usize>,
    exponent: usize,
    is_sl: bool,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    eigen: Vec<OnceLock<Vec<usize>>>,
}

impl FiniteMatrixGroup {
    /// Breadth-first closure of `generators` under multiplication.
    pub fn generate(
        field: &Arc<CycField>,
        dim: usize,
        generators: &[CycMatrix],
        cap: usize,
    ) -> Result<FiniteMatrixGroup> {
        for (i, g) in generators.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::Validation(format!(
                    "generator {i} has shape {}x{}, expected {dim}x{dim}",
                    g.rows(),
                    g.cols()
                )));
            }
            if g.field().conductor() != field.conductor() {
                return Err(Error::Validation(format!("generator {i} lives in {}", g.field())));
            }
            if g.determinant().is_zero() {
                return Err(Error::NonInvertibleGenerator { index: i });
            }
        }
        let identity = CycMatrix::identity(field, dim);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut next = 0;
        while next < elements.len() {
            for g in generators {
                let p = elements[next].mul(g);
                if !index.contains_key(&p) {
                    if elements.len() >= cap {
                        return Err(Error::ClosureCapExceeded { cap });
                    }
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            next += 1;
        }
        let is_sl = generators.iter().all(|g| g.determinant().is_one());
        let gen_idx = generators.iter().map(|g| index[g]).collect();
        Ok(Self::assemble(field.clone(), dim, elements, index, gen_idx, is_sl))
    }

    fn assemble(
        field: Arc<CycField>,
        dim: usize,
        elements: Vec<CycMatrix>,
        index: HashMap<CycMatrix, usize>,
        generators: Vec<usize>,
        is_sl: bool,
    ) -> FiniteMatrixGroup {
        let n = elements.len();
        let table = (n <= MUL_TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.mul(b)] as u32);
                }
            }
            t
        });
        let mut group = FiniteMatrixGroup {
            field,
            dim,
            elements,
            index,
            table,
            inv: vec![],
            orders: vec![],
            generators,
            exponent: 1,
            is_sl,
            classes: vec![],
            class_of: vec![],
            eigen: (0..n).map(|_| OnceLock::new()).collect(),
        };
        let mut orders = vec![0; n];
        let mut inv = vec![0; n];
        for a in 0..n {
            // walk a, a², … until the identity; the element just before it is a⁻¹
            let (mut x, mut prev, mut k) = (a, 0, 1);
            while x != 0 {
                prev = x;
                x = group.mul(x, a);
                k += 1;
            }
            orders[a] = k;
            inv[a] = if a == 0 { 0 } else { prev };
        }
        group.exponent = orders.iter().fold(1, |acc, &o| lcm(acc, o));
        group.orders = orders;
        group.inv = inv;
        group.compute_classes();
        group
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let members: BTreeSet<usize> = (0..n).map(|x| self.conj(x, a)).collect();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(ConjugacyClass {
                representative: a,
                centralizer_order: n / members.len(),
                members: members.into_iter().collect(),
            });
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[CycMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &CycMatrix {
        &self.elements[i]
    }

    /// Multiplicities of ζ_m^j, j = 0..m, on element `i` of order m; memoised.
    pub fn eigenvalue_multiplicities(&self, i: usize) -> Result<Vec<usize>> {
        if let Some(m) = self.eigen[i].get() {
            return Ok(m.clone());
        }
        let m = self.elements[i].eigenvalue_multiplicities(self.orders[i] as u64)?;
        Ok(self.eigen[i].get_or_init(|| m).clone())
    }

    pub fn index_of(&self, m: &CycMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn is_sl(&self) -> bool {
        self.is_sl
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].mul(&self.elements[b])],
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// x·a·x⁻¹
    pub fn conj(&self, x: usize, a: usize) -> usize {
        self.mul(self.mul(x, a), self.inv[x])
    }

    pub fn product(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &g| self.mul(acc, g))
    }

    /// Least m ≥ 1 with g^m = 1.
    pub fn element_order(&self, g: usize) -> usize {
        self.orders[g]
    }

    /// Conjugacy classes sorted by representative (least element index).
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    /// Index into [`conjugacy_classes`](Self::conjugacy_classes) of the class containing `g`.
    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    /// The class involution (g) ↦ (g⁻¹) as a permutation of class indices.
    pub fn inverse_class_map(&self) -> Vec<usize> {
        self.classes.iter().map(|c| self.class_of[self.inv[c.representative]]).collect()
    }

    /// C(g₁) ∩ … ∩ C(g_k), as sorted element indices.
    pub fn centralizer(&self, tuple: &[usize]) -> Vec<usize> {
        (0..self.order())
            .filter(|&x| tuple.iter().all(|&g| self.mul(x, g) == self.mul(g, x)))
            .collect()
    }

    /// Classes of k-tuples under simultaneous conjugation, optionally
    /// restricted to tuples with g₁⋯g_k = 1. Classes are listed in order of
    /// their lexicographically least member, which is the representative.
    pub fn tuple_classes(&self, k: usize, product_one: bool) -> Result<Vec<TupleClass>> {
        self.tuple_classes_filtered(k, product_one, |_| true)
    }

    /// As [`tuple_classes`](Self::tuple_classes), keeping only classes whose
    /// members satisfy `keep`. The predicate must be invariant under
    /// simultaneous conjugation.
    pub fn tuple_classes_filtered(
        &self,
        k: usize,
        product_one: bool,
        keep: impl Fn(&[usize]) -> bool,
    ) -> Result<Vec<TupleClass>> {
        assert!(k >= 1, "tuple arity must be positive");
        let n = self.order();
        let requested = (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        if requested > TUPLE_ENUMERATION_CAP {
            return Err(Error::EnumerationCapExceeded { requested, cap: TUPLE_ENUMERATION_CAP });
        }
        let encode = |t: &[usize]| t.iter().fold(0usize, |acc, &g| acc * n + g);
        let mut seen = vec![false; requested as usize];
        let free = if product_one { k - 1 } else { k };
        let mut out = Vec::new();
        let mut tuple = vec![0usize; k];
        let total = n.pow(free as u32);
        for code in 0..total {
            let mut c = code;
            for slot in (0..free).rev() {
                tuple[slot] = c % n;
                c /= n;
            }
            if product_one {
                tuple[k - 1] = self.inv[self.product(&tuple[..k - 1])];
            }
            if seen[encode(&tuple)] {
                continue;
            }
            let mut members = BTreeSet::new();
            for x in 0..n {
                let m: Vec<usize> = tuple.iter().map(|&g| self.conj(x, g)).collect();
                seen[encode(&m)] = true;
                members.insert(m);
            }
            if !keep(&tuple) {
                continue;
            }
            out.push(TupleClass {
                k,
                representative: tuple.clone(),
                centralizer_order: n / members.len(),
                members: members.into_iter().collect(),
                product_index: self.product(&tuple),
            });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn minus_identity() {
        let g = catalog::cyclic_sl2(2).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.element_order(1), 2);
        assert!(g.is_sl());
    }

    #[test]
    fn quaternion_group() {
        let g = catalog::quaternion().unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.exponent(), 4);
        assert!(g.is_sl());
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn symmetric_group_classes() {
        let g = catalog::symmetric(3).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_sl());
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
        // BFS from (12) and (123): identity first, then transposition, 3-cycle
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 3]);
        for c in g.conjugacy_classes() {
            assert_eq!(c.size() * c.centralizer_order, 6);
            assert_eq!(c.representative, c.members[0]);
        }
    }

    #[test]
    fn cyclic_orders() {
        let g = catalog::cyclic_sl2(6).unwrap();
        assert_eq!(g.conjugacy_classes().len(), 6);
        assert!(g.is_abelian());
        let gen = g.generators()[0];
        assert_eq!(g.element_order(gen), 6);
        assert_eq!(g.element_order(0), 1);
    }

    #[test]
    fn inverse_involution() {
        for g in [catalog::quaternion().unwrap(), catalog::symmetric(4).unwrap()] {
            let inv = g.inverse_class_map();
            for (i, &j) in inv.iter().enumerate() {
                assert_eq!(inv[j], i);
            }
            for a in 0..g.order() {
                assert_eq!(g.mul(a, g.inverse(a)), 0);
            }
        }
    }

    #[test]
    fn z2_product_one_triples() {
        let g = catalog::cyclic_sl2(2).unwrap();
        let classes = g.tuple_classes(3, true).unwrap();
        let reps: Vec<Vec<usize>> = classes.iter().map(|c| c.representative.clone()).collect();
        assert_eq!(reps, vec![vec![0, 0, 0], vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
    }

    #[test]
    fn s3_transposition_pairs() {
        let g = catalog::symmetric(3).unwrap();
        let is_transposition = |x: usize| g.element_order(x) == 2;
        let classes = g
            .tuple_classes_filtered(2, false, |t| t.iter().all(|&x| is_transposition(x)))
            .unwrap();
        assert_eq!(classes.len(), 2);
        let mut shape: Vec<(usize, usize)> =
            classes.iter().map(|c| (c.members.len(), c.centralizer_order)).collect();
        shape.sort();
        assert_eq!(shape, vec![(3, 2), (6, 1)]);
    }

    #[test]
    fn centralizers_in_s3() {
        let g = catalog::symmetric(3).unwrap();
        assert_eq!(g.centralizer(&[0]).len(), 6);
        let t: Vec<usize> = (0..6).filter(|&x| g.element_order(x) == 2).collect();
        assert_eq!(g.centralizer(&[t[0]]).len(), 2);
        assert_eq!(g.centralizer(&[t[0], t[1]]), vec![0]);
    }

    #[test]
    fn enumeration_cap() {
        let g = catalog::symmetric(4).unwrap();
        assert!(matches!(g.tuple_classes(6, false), Err(Error::EnumerationCapExceeded { .. })));
    }

    #[test]
    fn closure_cap() {
        let field = CycField::new(12);
        let gen = crate::cyclo::CycMatrix::diagonal(&field, vec![crate::cyclo::CycNum::zeta_pow(&field, 1)]);
        assert_eq!(
            FiniteMatrixGroup::generate(&field, 1, &[gen], 5).unwrap_err(),
            Error::ClosureCapExceeded { cap: 5 }
        );
    }

    #[test]
    fn singular_generator_rejected() {
        let field = CycField::new(1);
        let gen = crate::cyclo::CycMatrix::zero(&field, 2, 2);
        assert_eq!(
            FiniteMatrixGroup::generate(&field, 2, &[gen], 10).unwrap_err(),
            Error::NonInvertibleGenerator { index: 0 }
        );
    }
}
