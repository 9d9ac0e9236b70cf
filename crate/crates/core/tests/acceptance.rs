//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Every comparison is exact (rational or integer equality); the only
//! tolerances are the wall-clock budgets below.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num::{BigInt, BigRational, One, Zero};
use orbcoh::catalog;
use orbcoh::cyclo::{CycField, CycMatrix, CycNum};
use orbcoh::group::FiniteMatrixGroup;
use orbcoh::models::{betti_torus, catalog_bv, catalog_wp, hodge_linear, Degree};
use orbcoh::orbicurve::{bundle_index, classify_validate, euler_characteristic, glue_index_check, Mark, OrbiBundleData};
use orbcoh::ring::{center_oracle, pairing_matrix, ring_linear, ring_point, ring_wp, verify_ring, GradedRing};
use orbcoh::sectors::{codimension_identity, degree_shift, obstruction_rank, sector_table};
use orbcoh::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Numeric tolerance for every comparison: none, all arithmetic is exact.
const TOLERANCE: &str = "exact";

const BUDGET_KUMMER: Duration = Duration::from_secs(1);
const BUDGET_INSTANT: Duration = Duration::from_secs(1);
const BUDGET_POINT: Duration = Duration::from_secs(5);
const BUDGET_LINEAR: Duration = Duration::from_secs(5);
const BUDGET_GLUE: Duration = Duration::from_secs(30);
/// Criteria without a stated runtime still get a generous ceiling.
const BUDGET_DEFAULT: Duration = Duration::from_secs(60);

const RANDOM_BUNDLES: usize = 1000;
const SEED: u64 = 0x0bc0_5eed;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T>(r: orbcoh::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn all_groups() -> Vec<(&'static str, FiniteMatrixGroup)> {
    catalog::GROUP_FILES.iter().map(|(n, _)| (*n, catalog::group(n).expect("catalog group"))).collect()
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn criterion_1() -> Outcome {
    let t = ok(betti_torus(&catalog::kummer(), orbcoh::group::DEFAULT_CLOSURE_CAP))?;
    ensure(t.integral_betti() == [1, 0, 22, 0, 1], || format!("b = {:?}", t.integral_betti()))?;
    ensure(t.sectors.len() == 2, || format!("{} sectors", t.sectors.len()))?;
    let untwisted: Vec<u64> = (0..=4).map(|d| t.sectors[0].entries.get(&Degree::int(d)).copied().unwrap_or(0)).collect();
    ensure(untwisted == [1, 0, 6, 0, 1], || format!("untwisted {untwisted:?}"))?;
    let twisted = &t.sectors[1].entries;
    ensure(*twisted == BTreeMap::from([(Degree::int(2), 16)]), || format!("twisted {twisted:?}"))?;
    Ok("b = (1,0,22,0,1); untwisted (1,0,6,0,1); 16 twisted classes in degree 2".into())
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for r in 0..=22i64 {
        for a in 0..=22i64 {
            for delta in 0..=1i64 {
                let valid = (1..=20).contains(&r)
                    && (r - a) >= 0
                    && (r - a) % 2 == 0
                    && (22 - r - a) >= 0
                    && (22 - r - a) % 2 == 0
                    && !(delta == 0 && r == 10 && (a == 10 || a == 8));
                match catalog_bv(r, a, delta) {
                    Ok(bv) => {
                        ensure(valid, || format!("({r},{a},{delta}) accepted"))?;
                        let g = (22 - r - a) / 2;
                        let k = (r - a) / 2;
                        let (h11, h21) = ((1 + r + 4 * (k + 1)) as u64, (1 + (20 - r) + 4 * g) as u64);
                        ensure((bv.h11, bv.h21) == (h11, h21), || {
                            format!("({r},{a},{delta}): got ({}, {}), want ({h11}, {h21})", bv.h11, bv.h21)
                        })?;
                        let t = &bv.table;
                        ensure(
                            t.get(&Degree::bi(1, 0)) == 0 && t.get(&Degree::bi(2, 0)) == 0 && t.get(&Degree::bi(3, 0)) == 1,
                            || format!("({r},{a},{delta}): h^{{p,0}} wrong"),
                        )?;
                        checked += 1;
                    }
                    Err(Error::InvalidNikulinTriple { .. }) => ensure(!valid, || format!("({r},{a},{delta}) rejected"))?,
                    Err(e) => return Err(e.to_string()),
                }
            }
        }
    }
    let a = catalog_bv(10, 10, 1).map_err(|e| e.to_string())?;
    let b = catalog_bv(18, 4, 1).map_err(|e| e.to_string())?;
    ensure((a.h11, a.h21, b.h11, b.h21) == (15, 15, 51, 3), || "anchor triples".into())?;
    Ok(format!("{checked} valid triples; (10,10,1) -> (15,15), (18,4,1) -> (51,3)"))
}

fn wp_checks(d1: u64, d2: u64) -> Result<(), String> {
    let t = ok(catalog_wp(d1, d2))?;
    let mut expected: BTreeMap<Degree, u64> = BTreeMap::from([(Degree::int(0), 1), (Degree::int(2), 1)]);
    for j in 1..d1 {
        expected.insert(Degree::rational(2 * j as i64, d1 as i64), 1);
    }
    for i in 1..d2 {
        expected.insert(Degree::rational(2 * i as i64, d2 as i64), 1);
    }
    ensure(t.entries == expected, || format!("WP({d1},{d2}) degrees {:?}", t.entries.keys().collect::<Vec<_>>()))?;

    let r = ok(ring_wp(d1, d2))?;
    let top = r.dim() - 1;
    let power = |gen: &str, d: u64, e: u64| -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); r.dim()];
        v[r.unit] = BigRational::one();
        let g = if d == 1 { top } else { r.index_of(&format!("{gen}^1")).expect("generator") };
        let mut basis = vec![BigRational::zero(); r.dim()];
        basis[g] = BigRational::one();
        for _ in 0..e {
            v = r.multiply(&v, &basis);
        }
        v
    };
    let mut t_vec = vec![BigRational::zero(); r.dim()];
    t_vec[top] = BigRational::one();
    ensure(power("a", d1, d1) == t_vec && power("b", d2, d2) == t_vec, || format!("WP({d1},{d2}): α^d1 ≠ β^d2"))?;
    let zero = vec![BigRational::zero(); r.dim()];
    ensure(power("a", d1, d1 + 1) == zero && power("b", d2, d2 + 1) == zero, || {
        format!("WP({d1},{d2}): top powers do not vanish")
    })?;

    let p = ok(pairing_matrix(&r))?;
    for i in 0..r.dim() {
        for j in 0..r.dim() {
            let (li, lj) = (&r.labels[i], &r.labels[j]);
            let complementary = match (li.split_once('^'), lj.split_once('^')) {
                (Some(("b", x)), Some(("b", y))) => x.parse::<u64>().unwrap() + y.parse::<u64>().unwrap() == d2,
                (Some(("a", x)), Some(("a", y))) => x.parse::<u64>().unwrap() + y.parse::<u64>().unwrap() == d1,
                _ => (li == "1" && lj == "t") || (li == "t" && lj == "1"),
            };
            let want = if complementary { BigRational::one() } else { BigRational::zero() };
            ensure(p[i][j] == want, || format!("WP({d1},{d2}): <{li},{lj}> = {}", p[i][j]))?;
        }
    }
    let report = verify_ring(&r);
    ensure(report.passed(), || format!("WP({d1},{d2}) verify:\n{report}"))
}

fn criterion_3() -> Outcome {
    for (d1, d2) in [(1, 2), (1, 4), (2, 3), (3, 5)] {
        wp_checks(d1, d2)?;
    }
    Ok("(1,2),(1,4),(2,3),(3,5): degrees, relations, δ-pairing, verify".into())
}

fn criterion_4() -> Outcome {
    let mut names = Vec::new();
    for (name, g) in all_groups() {
        if g.order() > 24 {
            continue;
        }
        let r = ok(ring_point(&g))?;
        ensure(r.structure == center_oracle(&g).structure, || format!("{name}: ring_point ≠ centre"))?;
        names.push(name);
    }
    let g = catalog::symmetric(3).map_err(|e| e.to_string())?;
    let r = ok(ring_point(&g))?;
    let find = |order: usize| {
        (0..r.dim()).find(|&c| g.element_order(g.conjugacy_classes()[c].representative) == order).expect("class")
    };
    let (t, c) = (find(2), find(3));
    let mut want = vec![BigRational::zero(); r.dim()];
    want[r.unit] = int(3);
    want[c] = int(3);
    ensure(r.product(t, t) == want, || "S3: x(12)^2 ≠ 3x(e) + 3x(123)".into())?;
    Ok(format!("{} groups match the class-sum oracle; S3 x(12)^2 = 3x(e) + 3x(123)", names.len()))
}

fn linear_rings() -> Result<Vec<(&'static str, GradedRing)>, String> {
    Ok(vec![
        ("C2/Z2", ok(ring_linear(&ok(catalog::cyclic_sl2(2))?))?),
        ("C2/Q8", ok(ring_linear(&ok(catalog::quaternion())?))?),
        ("C3/Z3", ok(ring_linear(&ok(catalog::scalar_z3_sl3())?))?),
    ])
}

fn criterion_5() -> Outcome {
    let z2 = ok(catalog::cyclic_sl2(2))?;
    ensure(ok(hodge_linear(&z2))?.get(&Degree::bi(1, 1)) == 1, || "C2/Z2 h11".into())?;
    let q8 = ok(catalog::quaternion())?;
    let h = ok(hodge_linear(&q8))?;
    ensure(h.get(&Degree::bi(1, 1)) == 4, || format!("C2/Q8 h11 = {}", h.get(&Degree::bi(1, 1))))?;
    let ages: Vec<BigRational> = ok(sector_table(&q8))?.sectors().iter().skip(1).map(|s| s.iota.clone()).collect();
    ensure(ages == vec![int(1); 4], || "Q8 twisted ages".into())?;

    let rings = linear_rings()?;
    let r = &rings[0].1;
    ensure(r.product(1, 1).iter().all(Zero::is_zero), || "C2/Z2: x^2 ≠ 0".into())?;
    let r = &rings[2].1;
    let (g, g2) = (1, 2);
    let mut want = vec![BigRational::zero(); 3];
    want[g2] = BigRational::one();
    ensure(r.product(g, g) == want, || "C3/Z3: x_g^2 ≠ x_g2".into())?;
    ensure(r.product(g, g2).iter().all(Zero::is_zero), || "C3/Z3: x_g x_g2 ≠ 0".into())?;
    for (name, r) in &rings {
        let report = verify_ring(r);
        ensure(report.passed(), || format!("{name}:\n{report}"))?;
    }
    Ok("C2/Z2 h11=1, x^2=0; C2/Q8 h11=4; C3/Z3 x_g^2=x_g2, x_g x_g2=0; verified".into())
}

fn criterion_6() -> Outcome {
    let mut elements = 0;
    for (name, g) in all_groups() {
        let table = ok(sector_table(&g))?;
        for h in 0..g.order() {
            let (lhs, rhs) = codimension_identity(&g, &table, h);
            ensure(lhs == rhs, || format!("{name}: element {h}: ι+ι⁻¹ = {lhs}, n − dim V^g = {rhs}"))?;
            let direct = ok(degree_shift(&g, h))?;
            ensure(&direct == table.iota_of(&g, h), || format!("{name}: ι not constant on the class of {h}"))?;
            elements += 1;
        }
        let integral = table.sectors().iter().all(|s| s.iota.is_integer());
        ensure(integral == g.is_sl(), || format!("{name}: integral ages {integral}, SL {}", g.is_sl()))?;
    }
    Ok(format!("{elements} elements over all catalog groups"))
}

/// (1/m) Σ_k tr(M^k) ζ_m^{−jk}, computed over Q(ζ_lcm(N, m)).
fn dft_multiplicities(m: &CycMatrix, order: u64) -> Vec<usize> {
    let n = m.field().conductor();
    let l = num::integer::lcm(n, order);
    let f = CycField::new(l);
    let big = m.embed(l).expect("conductor divides lcm");
    let mut traces = Vec::with_capacity(order as usize);
    let mut p = CycMatrix::identity(&f, big.rows());
    for _ in 0..order {
        traces.push(p.trace());
        p = p.mul(&big);
    }
    let step = (l / order) as i64;
    (0..order as i64)
        .map(|j| {
            let mut s = CycNum::zero(&f);
            for (k, t) in traces.iter().enumerate() {
                s = &s + &(t * &CycNum::zeta_pow(&f, -j * k as i64 * step));
            }
            let v = s.as_rational().expect("rational multiplicity").clone() / int(order as i64);
            assert!(v.is_integer() && v >= BigRational::zero(), "non-integral DFT multiplicity {v}");
            v.to_integer().try_into().expect("small")
        })
        .collect()
}

fn criterion_7() -> Outcome {
    let mut elements = 0;
    for (name, g) in all_groups() {
        for h in 0..g.order() {
            let order = g.element_order(h) as u64;
            let kernel = ok(g.element(h).eigenvalue_multiplicities(order))?;
            let dft = dft_multiplicities(g.element(h), order);
            ensure(kernel == dft, || format!("{name}: element {h}: kernel {kernel:?} vs DFT {dft:?}"))?;
            ensure(kernel.iter().sum::<usize>() == g.dim(), || format!("{name}: element {h}: sum ≠ n"))?;
            elements += 1;
        }
    }
    Ok(format!("{elements} elements agree"))
}

fn random_bundle(rng: &mut ChaCha8Rng) -> OrbiBundleData {
    let genus = rng.gen_range(0..=5);
    let rank = rng.gen_range(1..=4);
    let marks: Vec<Mark> = (0..rng.gen_range(0..=4))
        .map(|_| {
            let order = rng.gen_range(2..=6u64);
            Mark { order, exponents: (0..rank).map(|_| rng.gen_range(0..order as i64)).collect() }
        })
        .collect();
    let mut data = OrbiBundleData { genus, rank, marks, c: BigRational::zero() };
    data.c = data.exponent_sum() + int(rng.gen_range(-10..=10));
    data
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..RANDOM_BUNDLES {
        let data = random_bundle(&mut rng);
        let chi = ok(euler_characteristic(&data))?;
        let want = int(data.rank as i64) * (int(1) - int(data.genus as i64)) + &data.c - data.exponent_sum();
        ensure(want.is_integer() && BigRational::from_integer(chi.clone()) == want, || {
            format!("bundle {i}: χ = {chi}, formula {want}")
        })?;
        let desing = ok(classify_validate(&data))?;
        ensure(BigRational::from_integer(desing) + data.exponent_sum() == data.c, || format!("bundle {i}: round trip"))?;
        let mut bad = data.clone();
        bad.c += BigRational::new(1.into(), 7.into());
        ensure(matches!(classify_validate(&bad), Err(Error::CongruenceViolation(_))), || {
            format!("bundle {i}: perturbed congruence accepted")
        })?;
    }
    let mut tuples = 0;
    for (name, g) in all_groups() {
        let table = ok(sector_table(&g))?;
        for class in ok(g.tuple_classes(3, true))? {
            for t in &class.members {
                let idx = ok(bundle_index(&g, t))?;
                let rank = ok(obstruction_rank(&g, &table, t))?;
                ensure(idx.coker == BigInt::from(rank), || format!("{name} {t:?}: coker {} vs rank {rank}", idx.coker))?;
                tuples += 1;
            }
        }
    }
    Ok(format!("{RANDOM_BUNDLES} random bundles (seed {SEED:#x}); {tuples} product-one 3-tuples"))
}

fn criterion_9() -> Outcome {
    let mut tuples = 0;
    for (name, g) in all_groups() {
        if g.order() > 12 {
            continue;
        }
        let n = g.order();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let d = g.inverse(g.product(&[a, b, c]));
                    let t = [a, b, c, d];
                    let r = ok(glue_index_check(&g, &t))?;
                    ensure(r.index_holds(), || format!("{name} {t:?}: index identity fails"))?;
                    ensure(r.coker_holds(), || format!("{name} {t:?}: cokernel identity fails"))?;
                    tuples += 1;
                }
            }
        }
    }
    Ok(format!("{tuples} product-one 4-tuples"))
}

fn criterion_10() -> Outcome {
    let mut rings: Vec<(String, GradedRing)> = Vec::new();
    for (d1, d2) in [(1, 2), (1, 4), (2, 3), (3, 5)] {
        rings.push((format!("WP({d1},{d2})"), ok(ring_wp(d1, d2))?));
    }
    for (name, g) in all_groups() {
        if g.order() <= 24 {
            rings.push((format!("pt/{name}"), ok(ring_point(&g))?));
        }
    }
    for (name, r) in linear_rings()? {
        rings.push((name.to_string(), r));
    }
    for (name, r) in &rings {
        let report = verify_ring(r);
        ensure(report.passed(), || format!("{name}:\n{report}"))?;
        if r.pairing.is_some() {
            ensure(report.check("frobenius").is_some_and(|c| c.passed), || format!("{name}: pairing"))?;
        }
    }
    let g = ok(catalog::symmetric(3))?;
    let mut bad = ok(ring_point(&g))?;
    let t = (0..bad.dim()).find(|&c| g.element_order(g.conjugacy_classes()[c].representative) == 2).expect("class");
    let unit = bad.unit;
    bad.set_coefficient(t, t, unit, int(4));
    let report = verify_ring(&bad);
    let assoc = report.check("associativity").expect("check present");
    let named = assoc.counterexample.clone().unwrap_or_default();
    ensure(!assoc.passed && named.starts_with("triple ("), || "fault injection not detected".into())?;
    Ok(format!("{} rings verified; fault injection caught: {}", rings.len(), named))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Duration, fn() -> Outcome); 10] = [
        (1, "Kummer orbifold Betti numbers", BUDGET_KUMMER, criterion_1),
        (2, "Borcea-Voisin Hodge numbers", BUDGET_INSTANT, criterion_2),
        (3, "weighted projective lines", BUDGET_DEFAULT, criterion_3),
        (4, "point quotients vs group-algebra centre", BUDGET_POINT, criterion_4),
        (5, "linear quotients", BUDGET_LINEAR, criterion_5),
        (6, "degree-shifting identities", BUDGET_DEFAULT, criterion_6),
        (7, "eigen-multiplicity cross-check", BUDGET_DEFAULT, criterion_7),
        (8, "orbicurve index formulas", BUDGET_DEFAULT, criterion_8),
        (9, "gluing identity", BUDGET_GLUE, criterion_9),
        (10, "ring axioms and fault injection", BUDGET_DEFAULT, criterion_10),
    ];
    let mut failures = 0;
    for (id, title, budget, run) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed <= budget {
                Ok(detail)
            } else {
                Err(format!("took {elapsed:?}, budget {budget:?}"))
            }
        });
        let timing = format!("{:.3}s/{}s", elapsed.as_secs_f64(), budget.as_secs());
        match result {
            Ok(detail) => println!("criterion {id:>2} PASS  {title} [{TOLERANCE}, {timing}]: {detail}"),
            Err(why) => {
                failures += 1;
                println!("criterion {id:>2} FAIL  {title} [{TOLERANCE}, {timing}]: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
