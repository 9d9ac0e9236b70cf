//! Orbifold cup-product rings with exact structure constants, Poincaré
//! pairings, and a verifier for the ring axioms.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Zero};
use serde_json::{json, Value};

use crate::cyclo::{format_rational, CycField, CycMatrix, CycNum};
use crate::error::{Error, Result};
use crate::group::FiniteMatrixGroup;
use crate::io::rational_value;
use crate::models::families::check_coprime;
use crate::models::Degree;
use crate::sectors::{fixed_subspace, sector_table};

/// A finite-dimensional graded ring given on a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRing {
    pub model: String,
    pub labels: Vec<String>,
    pub degrees: Vec<Degree>,
    /// e_i · e_j = Σ c_k e_k, sparse, with zero coefficients omitted.
    pub structure: BTreeMap<(usize, usize), Vec<(usize, BigRational)>>,
    pub unit: usize,
    pub pairing: Option<Vec<Vec<BigRational>>>,
}

impl GradedRing {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// e_i · e_j as a dense coefficient vector.
    pub fn product(&self, i: usize, j: usize) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim()];
        for (k, c) in self.structure.get(&(i, j)).into_iter().flatten() {
            out[*k] += c;
        }
        out
    }

    /// Product of two general elements.
    pub fn multiply(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim()];
        for (i, ai) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                for (k, c) in self.structure.get(&(i, j)).into_iter().flatten() {
                    out[*k] += ai * bj * c;
                }
            }
        }
        out
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> BigRational {
        self.product(i, j)[k].clone()
    }

    /// Overwrite one structure constant; used for fault injection.
    pub fn set_coefficient(&mut self, i: usize, j: usize, k: usize, value: BigRational) {
        let terms = self.structure.entry((i, j)).or_default();
        terms.retain(|(t, _)| *t != k);
        if !value.is_zero() {
            terms.push((k, value));
            terms.sort_by_key(|(t, _)| *t);
        }
        if terms.is_empty() {
            self.structure.remove(&(i, j));
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn basis_vector(&self, i: usize) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.dim()];
        v[i] = BigRational::one();
        v
    }

    fn add_term(&mut self, i: usize, j: usize, k: usize, c: BigRational) {
        let terms = self.structure.entry((i, j)).or_default();
        match terms.iter_mut().find(|(t, _)| *t == k) {
            Some((_, existing)) => *existing += c,
            None => terms.push((k, c)),
        }
    }

    fn normalize(&mut self) {
        for terms in self.structure.values_mut() {
            terms.retain(|(_, c)| !c.is_zero());
            terms.sort_by_key(|(k, _)| *k);
        }
        self.structure.retain(|_, t| !t.is_empty());
    }

    fn describe(&self, v: &[BigRational]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                if c.is_one() {
                    format!("x[{}]", self.labels[k])
                } else {
                    format!("{}*x[{}]", format_rational(c), self.labels[k])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn class_label(g: &FiniteMatrixGroup, class: usize) -> String {
    let rep = g.conjugacy_classes()[class].representative;
    if rep == 0 {
        "1".into()
    } else {
        format!("g{rep}")
    }
}

/// Cohomology ring of pt/G: basis x_(g) over conjugacy classes, products
/// summed over pair-conjugacy classes with coefficient |C(h₁h₂)|/|C(h₁)∩C(h₂)|.
pub fn ring_point(g: &FiniteMatrixGroup) -> Result<GradedRing> {
    let classes = g.conjugacy_classes();
    let nc = classes.len();
    let mut ring = GradedRing {
        model: "point".into(),
        labels: (0..nc).map(|c| class_label(g, c)).collect(),
        degrees: vec![Degree::int(0); nc],
        structure: BTreeMap::new(),
        unit: g.class_of(0),
        pairing: None,
    };
    for pair in g.tuple_classes(2, false)? {
        let (h1, h2) = (pair.representative[0], pair.representative[1]);
        let target = g.class_of(pair.product_index);
        let c = BigRational::new(classes[target].centralizer_order.into(), pair.centralizer_order.into());
        ring.add_term(g.class_of(h1), g.class_of(h2), target, c);
    }
    ring.normalize();
    let inverse = g.inverse_class_map();
    let mut pairing = vec![vec![BigRational::zero(); nc]; nc];
    for (c, class) in classes.iter().enumerate() {
        pairing[c][inverse[c]] = BigRational::new(1.into(), class.centralizer_order.into());
    }
    ring.pairing = Some(pairing);
    Ok(ring)
}

/// Structure constants of the centre of the group algebra in the class-sum
/// basis, by direct convolution of class sums.
pub fn center_oracle(g: &FiniteMatrixGroup) -> GradedRing {
    let classes = g.conjugacy_classes();
    let nc = classes.len();
    let mut ring = GradedRing {
        model: "center".into(),
        labels: (0..nc).map(|c| class_label(g, c)).collect(),
        degrees: vec![Degree::int(0); nc],
        structure: BTreeMap::new(),
        unit: g.class_of(0),
        pairing: None,
    };
    for (a, ca) in classes.iter().enumerate() {
        for (b, cb) in classes.iter().enumerate() {
            let mut counts = vec![0usize; nc];
            for &x in &ca.members {
                for &y in &cb.members {
                    counts[g.class_of(g.mul(x, y))] += 1;
                }
            }
            for (c, &n) in counts.iter().enumerate().filter(|(_, &n)| n > 0) {
                ring.add_term(a, b, c, BigRational::new(n.into(), classes[c].size().into()));
            }
        }
    }
    ring.normalize();
    ring
}

/// Cup product on C^n/G for G ⊂ SL(n): basis over sectors in bidegree (ι, ι);
/// a pair class (h₁, h₂) contributes only when ι is additive and
/// V^{h₁} ∩ V^{h₂} = V^{h₁h₂}.
pub fn ring_linear(g: &FiniteMatrixGroup) -> Result<GradedRing> {
    if !g.is_sl() {
        return Err(Error::NotSL);
    }
    let table = sector_table(g)?;
    let sectors = table.sectors();
    let mut ring = GradedRing {
        model: "linear".into(),
        labels: sectors.iter().map(|s| s.label()).collect(),
        degrees: sectors.iter().map(|s| Degree::Bi(s.iota.clone(), s.iota.clone())).collect(),
        structure: BTreeMap::new(),
        unit: table.sector_of(g, 0),
        pairing: None,
    };
    for pair in g.tuple_classes(2, false)? {
        let (h1, h2) = (pair.representative[0], pair.representative[1]);
        let h = pair.product_index;
        let additive = table.iota_of(g, h1) + table.iota_of(g, h2) == *table.iota_of(g, h);
        if !additive || fixed_subspace(g, &[h1, h2]).dim() != table.fixed_space(h).dim() {
            continue;
        }
        let target = table.sector_of(g, h);
        let c = BigRational::new(sectors[target].centralizer_order.into(), pair.centralizer_order.into());
        ring.add_term(table.sector_of(g, h1), table.sector_of(g, h2), target, c);
    }
    ring.normalize();
    Ok(ring)
}

/// Orbifold cohomology ring of the weighted projective line WP(d₁, d₂):
/// basis 1, α^j, β^i, t with α^{d₁} = β^{d₂} = t.
pub fn ring_wp(d1: u64, d2: u64) -> Result<GradedRing> {
    check_coprime(d1, d2)?;
    let (d1, d2) = (d1 as usize, d2 as usize);
    let mut labels = vec!["1".to_string()];
    let mut degrees = vec![Degree::int(0)];
    for j in 1..d1 {
        labels.push(format!("a^{j}"));
        degrees.push(Degree::rational(2 * j as i64, d1 as i64));
    }
    for i in 1..d2 {
        labels.push(format!("b^{i}"));
        degrees.push(Degree::rational(2 * i as i64, d2 as i64));
    }
    labels.push("t".into());
    degrees.push(Degree::int(2));
    let n = labels.len();
    let top = n - 1;
    // a^j sits at index j, b^i at d₁ − 1 + i; exponent 0 is the unit and the full power is t
    let alpha = |j: usize| if j == 0 { 0 } else if j == d1 { top } else { j };
    let beta = |i: usize| if i == 0 { 0 } else if i == d2 { top } else { d1 - 1 + i };

    let mut ring = GradedRing {
        model: "weighted-projective-line".into(),
        labels,
        degrees,
        structure: BTreeMap::new(),
        unit: 0,
        pairing: None,
    };
    let one = BigRational::one;
    for x in 0..n {
        ring.add_term(0, x, x, one());
        if x != 0 {
            ring.add_term(x, 0, x, one());
        }
    }
    for j1 in 1..d1 {
        for j2 in 1..d1 {
            if j1 + j2 <= d1 {
                ring.add_term(alpha(j1), alpha(j2), alpha(j1 + j2), one());
            }
        }
    }
    for i1 in 1..d2 {
        for i2 in 1..d2 {
            if i1 + i2 <= d2 {
                ring.add_term(beta(i1), beta(i2), beta(i1 + i2), one());
            }
        }
    }
    ring.normalize();

    let mut pairing = vec![vec![BigRational::zero(); n]; n];
    pairing[0][top] = one();
    pairing[top][0] = one();
    for j in 1..d1 {
        pairing[alpha(j)][alpha(d1 - j)] = one();
    }
    for i in 1..d2 {
        pairing[beta(i)][beta(d2 - i)] = one();
    }
    ring.pairing = Some(pairing);
    Ok(ring)
}

/// The Poincaré pairing on the basis, where the model defines one.
pub fn pairing_matrix(ring: &GradedRing) -> Result<&[Vec<BigRational>]> {
    ring.pairing.as_deref().ok_or_else(|| {
        Error::PairingUndefined(format!(
            "the {} model pairs ordinary with compactly supported classes",
            ring.model
        ))
    })
}

pub fn determinant(m: &[Vec<BigRational>]) -> BigRational {
    let f = CycField::new(1);
    let n = m.len();
    let entries = m.iter().flatten().map(|x| CycNum::from_rational(&f, x.clone())).collect();
    let det = CycMatrix::from_entries(&f, n, n, entries).determinant();
    det.as_rational().cloned().unwrap_or_else(BigRational::zero)
}

/// Outcome of one ring axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingReport {
    pub checks: Vec<Check>,
}

impl RingReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "counterexample": c.counterexample,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for RingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{:<16} {}", c.name, if c.passed { "ok" } else { "FAILED" })?;
            if let Some(ce) = &c.counterexample {
                write!(f, "  {ce}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn outcome(name: &'static str, counterexample: Option<String>) -> Check {
    Check { name, passed: counterexample.is_none(), counterexample }
}

fn add_degrees(a: &Degree, b: &Degree) -> Option<Degree> {
    match (a, b) {
        (Degree::Single(x), Degree::Single(y)) => Some(Degree::Single(x + y)),
        (Degree::Bi(p, q), Degree::Bi(r, s)) => Some(Degree::Bi(p + r, q + s)),
        _ => None,
    }
}

fn pair(p: &[Vec<BigRational>], a: &[BigRational], b: &[BigRational]) -> BigRational {
    let mut s = BigRational::zero();
    for (i, ai) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, bj) in b.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            s += ai * bj * &p[i][j];
        }
    }
    s
}

/// Check unit, associativity, grading, commutativity and, when a pairing is
/// present, Frobenius compatibility and nondegeneracy. Each failed check
/// names the first offending basis elements.
pub fn verify_ring(ring: &GradedRing) -> RingReport {
    let n = ring.dim();
    let l = |i: usize| ring.labels[i].as_str();
    let mut checks = Vec::new();

    let unit = (0..n).find_map(|i| {
        let e = ring.basis_vector(i);
        let left = ring.product(ring.unit, i);
        let right = ring.product(i, ring.unit);
        (left != e || right != e).then(|| format!("x[{}] * x[{}] = {}", l(ring.unit), l(i), ring.describe(&left)))
    });
    checks.push(outcome("unit", unit));

    let products: Vec<Vec<Vec<BigRational>>> =
        (0..n).map(|i| (0..n).map(|j| ring.product(i, j)).collect()).collect();
    let assoc = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .find_map(|(i, j, k)| {
            let lhs = ring.multiply(&products[i][j], &ring.basis_vector(k));
            let rhs = ring.multiply(&ring.basis_vector(i), &products[j][k]);
            (lhs != rhs).then(|| {
                format!(
                    "triple (x[{}], x[{}], x[{}]): (ab)c = {} but a(bc) = {}",
                    l(i),
                    l(j),
                    l(k),
                    ring.describe(&lhs),
                    ring.describe(&rhs)
                )
            })
        });
    checks.push(outcome("associativity", assoc));

    let grading = ring.structure.iter().find_map(|(&(i, j), terms)| {
        let expected = add_degrees(&ring.degrees[i], &ring.degrees[j]);
        terms.iter().find_map(|(k, _)| {
            (expected.as_ref() != Some(&ring.degrees[*k])).then(|| {
                format!(
                    "x[{}] * x[{}] has a term on x[{}] of degree {}, expected {}",
                    l(i),
                    l(j),
                    l(*k),
                    ring.degrees[*k],
                    expected.as_ref().map_or("undefined".to_string(), |d| d.to_string())
                )
            })
        })
    });
    checks.push(outcome("grading", grading));

    let comm = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find_map(|(i, j)| (products[i][j] != products[j][i]).then(|| format!("pair (x[{}], x[{}])", l(i), l(j))));
    checks.push(outcome("commutativity", comm));

    if let Some(p) = &ring.pairing {
        let frob = (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
            .find_map(|(i, j, k)| {
                let lhs = pair(p, &products[i][j], &ring.basis_vector(k));
                let rhs = pair(p, &ring.basis_vector(i), &products[j][k]);
                (lhs != rhs).then(|| {
                    format!(
                        "triple (x[{}], x[{}], x[{}]): <ab,c> = {} but <a,bc> = {}",
                        l(i),
                        l(j),
                        l(k),
                        format_rational(&lhs),
                        format_rational(&rhs)
                    )
                })
            });
        checks.push(outcome("frobenius", frob));
        let det = determinant(p);
        checks.push(outcome("nondegeneracy", det.is_zero().then(|| "pairing determinant is 0".to_string())));
    }
    RingReport { checks }
}

/// Serializable form: labels, degree strings, sparse [i, j, k, "p/q"]
/// triples and the pairing matrix.
pub fn ring_to_json(ring: &GradedRing) -> Value {
    let products: Vec<Value> = ring
        .structure
        .iter()
        .flat_map(|(&(i, j), terms)| terms.iter().map(move |(k, c)| json!([i, j, k, format_rational(c)])))
        .collect();
    json!({
        "model": ring.model,
        "basis": ring.labels,
        "degrees": ring.degrees.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "unit": ring.unit,
        "products": products,
        "pairing": ring.pairing.as_ref().map(|p| {
            p.iter().map(|row| row.iter().map(rational_value).collect::<Vec<_>>()).collect::<Vec<_>>()
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::sectors::obstruction_rank;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn int(n: i64) -> BigRational {
        q(n, 1)
    }

    /// Expand a product as (label, coefficient) pairs.
    fn expand(ring: &GradedRing, a: &str, b: &str) -> Vec<(String, BigRational)> {
        let (i, j) = (ring.index_of(a).unwrap(), ring.index_of(b).unwrap());
        ring.product(i, j)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (ring.labels[k].clone(), c))
            .collect()
    }

    fn label_of(g: &FiniteMatrixGroup, order: usize, fixed_dim: usize) -> String {
        let rep = g
            .conjugacy_classes()
            .iter()
            .map(|c| c.representative)
            .find(|&r| g.element_order(r) == order && fixed_subspace(g, &[r]).dim() == fixed_dim)
            .unwrap();
        format!("g{rep}")
    }

    #[test]
    fn trivial_group_ring() {
        let f = CycField::new(1);
        let g = FiniteMatrixGroup::generate(&f, 1, &[], 10).unwrap();
        let r = ring_point(&g).unwrap();
        assert_eq!(r.dim(), 1);
        assert_eq!(r.product(0, 0), vec![int(1)]);
        assert_eq!(pairing_matrix(&r).unwrap(), &[vec![int(1)]]);
    }

    #[test]
    fn s3_point_ring() {
        let g = catalog::symmetric(3).unwrap();
        let r = ring_point(&g).unwrap();
        let t = label_of(&g, 2, 2);
        let c = label_of(&g, 3, 1);
        assert_eq!(expand(&r, &t, &t), vec![("1".to_string(), int(3)), (c.clone(), int(3))]);
        let p = pairing_matrix(&r).unwrap();
        let (ti, ci) = (r.index_of(&t).unwrap(), r.index_of(&c).unwrap());
        assert_eq!(p[ti][ti], q(1, 2));
        assert_eq!(p[ci][ci], q(1, 3));
        assert_eq!(p[r.unit][r.unit], q(1, 6));
        assert_eq!(r.structure, center_oracle(&g).structure);
        assert!(verify_ring(&r).passed());
    }

    #[test]
    fn quaternion_oracle() {
        let g = catalog::quaternion().unwrap();
        let oracle = center_oracle(&g);
        // the three classes of order-4 elements multiply pairwise to twice the third
        let fours: Vec<usize> = (0..oracle.dim())
            .filter(|&c| g.element_order(g.conjugacy_classes()[c].representative) == 4)
            .collect();
        assert_eq!(fours.len(), 3);
        let v = oracle.product(fours[0], fours[1]);
        assert_eq!(v[fours[2]], int(2));
        assert_eq!(v.iter().filter(|c| !c.is_zero()).count(), 1);
        assert_eq!(ring_point(&g).unwrap().structure, oracle.structure);
    }

    #[test]
    fn abelian_oracle_is_group_ring() {
        let g = catalog::cyclic_sl2(5).unwrap();
        let oracle = center_oracle(&g);
        for a in 0..g.order() {
            for b in 0..g.order() {
                let (ca, cb) = (g.class_of(a), g.class_of(b));
                assert_eq!(oracle.structure[&(ca, cb)], vec![(g.class_of(g.mul(a, b)), int(1))]);
            }
        }
    }

    #[test]
    fn scalar_z3_linear_ring() {
        let g = catalog::scalar_z3_sl3().unwrap();
        let r = ring_linear(&g).unwrap();
        // sectors sort by ι: 1, g (ι=1), g² (ι=2)
        let (x, x2) = (r.labels[1].clone(), r.labels[2].clone());
        assert_eq!(expand(&r, &x, &x), vec![(x2.clone(), int(1))]);
        assert!(expand(&r, &x, &x2).is_empty());
        assert!(verify_ring(&r).passed());
        assert!(matches!(pairing_matrix(&r), Err(Error::PairingUndefined(_))));
    }

    #[test]
    fn linear_ring_z2_and_q8() {
        let r = ring_linear(&catalog::cyclic_sl2(2).unwrap()).unwrap();
        assert!(r.product(1, 1).iter().all(Zero::is_zero));
        let r = ring_linear(&catalog::quaternion().unwrap()).unwrap();
        assert_eq!(r.degrees.iter().filter(|d| **d == Degree::bi(1, 1)).count(), 4);
        let report = verify_ring(&r);
        assert!(report.passed(), "{report}");
        assert!(matches!(ring_linear(&catalog::symmetric(3).unwrap()), Err(Error::NotSL)));
    }

    #[test]
    fn transverse_pairs_have_trivial_obstruction() {
        for g in [catalog::scalar_z3_sl3().unwrap(), catalog::quaternion().unwrap(), catalog::cyclic_sl2(4).unwrap()] {
            let table = sector_table(&g).unwrap();
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let h = g.mul(a, b);
                    let additive = table.iota_of(&g, a) + table.iota_of(&g, b) == *table.iota_of(&g, h);
                    if additive && fixed_subspace(&g, &[a, b]).dim() == table.fixed_space(h).dim() {
                        assert_eq!(obstruction_rank(&g, &table, &[a, b, g.inverse(h)]).unwrap(), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn weighted_projective_rings() {
        let r = ring_wp(2, 3).unwrap();
        assert_eq!(r.labels, ["1", "a^1", "b^1", "b^2", "t"]);
        assert_eq!(expand(&r, "a^1", "a^1"), vec![("t".to_string(), int(1))]);
        assert_eq!(expand(&r, "b^1", "b^2"), vec![("t".to_string(), int(1))]);
        assert!(expand(&r, "a^1", "b^1").is_empty());
        assert!(expand(&r, "a^1", "t").is_empty());
        let p = pairing_matrix(&r).unwrap();
        assert_eq!(p[2][3], int(1));
        assert!(verify_ring(&r).passed());

        let r = ring_wp(1, 1).unwrap();
        assert_eq!(r.labels, ["1", "t"]);
        assert!(r.product(1, 1).iter().all(Zero::is_zero));

        let r = ring_wp(1, 4).unwrap();
        assert_eq!(expand(&r, "b^2", "b^2"), vec![("t".to_string(), int(1))]);
        assert_eq!(expand(&r, "b^1", "b^3"), vec![("t".to_string(), int(1))]);
        assert!(expand(&r, "b^2", "b^3").is_empty());
        assert!(matches!(ring_wp(3, 6), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn fault_injection_names_triple() {
        let g = catalog::symmetric(3).unwrap();
        let mut r = ring_point(&g).unwrap();
        let t = r.index_of(&label_of(&g, 2, 2)).unwrap();
        r.set_coefficient(t, t, r.unit, int(4));
        let report = verify_ring(&r);
        let assoc = report.check("associativity").unwrap();
        assert!(!assoc.passed);
        assert!(assoc.counterexample.as_ref().unwrap().starts_with("triple (x["));
    }

    #[test]
    fn json_shape() {
        let v = ring_to_json(&ring_wp(2, 3).unwrap());
        assert_eq!(v["degrees"], json!(["0", "1", "2/3", "4/3", "2"]));
        assert_eq!(v["products"][0], json!([0, 0, 0, "1"]));
    }
}
