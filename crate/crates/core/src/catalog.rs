//! Built-in example groups and torus models.
//!
//! The named entries are the JSON files shipped in `catalog/`; the
//! constructor functions build the same families programmatically.

use crate::cyclo::{CycField, CycMatrix, CycNum};
use crate::error::{Error, Result};
use crate::group::{FiniteMatrixGroup, DEFAULT_CLOSURE_CAP};
use crate::io;
use crate::models::torus::TorusModel;

/// (name, JSON text) for every built-in linear group.
pub const GROUP_FILES: &[(&str, &str)] = &[
    ("z2", include_str!("../catalog/z2.json")),
    ("z3", include_str!("../catalog/z3.json")),
    ("z4", include_str!("../catalog/z4.json")),
    ("z5", include_str!("../catalog/z5.json")),
    ("z6", include_str!("../catalog/z6.json")),
    ("z3-scalar", include_str!("../catalog/z3-scalar.json")),
    ("q8", include_str!("../catalog/q8.json")),
    ("bd12", include_str!("../catalog/bd12.json")),
    ("s3", include_str!("../catalog/s3.json")),
    ("s4", include_str!("../catalog/s4.json")),
];

/// (name, JSON text) for every built-in torus model.
pub const TORUS_FILES: &[(&str, &str)] = &[
    ("kummer", include_str!("../catalog/kummer.json")),
    ("t2", include_str!("../catalog/t2.json")),
];

pub fn group_json(name: &str) -> Option<&'static str> {
    GROUP_FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn torus_json(name: &str) -> Option<&'static str> {
    TORUS_FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn group(name: &str) -> Result<FiniteMatrixGroup> {
    let text = group_json(name).ok_or_else(|| Error::Validation(format!("unknown catalog group \"{name}\"")))?;
    io::parse_group_json(text)?.generate(DEFAULT_CLOSURE_CAP)
}

pub fn torus(name: &str) -> Result<TorusModel> {
    let text = torus_json(name).ok_or_else(|| Error::Validation(format!("unknown catalog torus \"{name}\"")))?;
    io::parse_torus_json(text)
}

/// Z_m ⊂ SL(2) generated by diag(ζ_m, ζ_m⁻¹).
pub fn cyclic_sl2(m: u64) -> Result<FiniteMatrixGroup> {
    let f = CycField::new(m);
    let gen = CycMatrix::diagonal(&f, vec![CycNum::zeta_pow(&f, 1), CycNum::zeta_pow(&f, -1)]);
    FiniteMatrixGroup::generate(&f, 2, &[gen], DEFAULT_CLOSURE_CAP)
}

/// Z₃ acting on C³ by the scalar ζ₃.
pub fn scalar_z3_sl3() -> Result<FiniteMatrixGroup> {
    let f = CycField::new(3);
    let z = CycNum::zeta_pow(&f, 1);
    let gen = CycMatrix::diagonal(&f, vec![z.clone(), z.clone(), z]);
    FiniteMatrixGroup::generate(&f, 3, &[gen], DEFAULT_CLOSURE_CAP)
}

fn antidiagonal_quarter_turn(f: &std::sync::Arc<CycField>) -> CycMatrix {
    CycMatrix::from_entries(
        f,
        2,
        2,
        vec![CycNum::zero(f), CycNum::one(f), CycNum::from_int(f, -1), CycNum::zero(f)],
    )
}

/// Quaternion group Q₈ ⊂ SU(2).
pub fn quaternion() -> Result<FiniteMatrixGroup> {
    binary_dihedral(8)
}

/// Binary dihedral group of order 4k ⊂ SU(2), generated by
/// diag(ζ_{2k}, ζ_{2k}⁻¹) and [[0, 1], [−1, 0]].
pub fn binary_dihedral(order: u64) -> Result<FiniteMatrixGroup> {
    if order < 8 || order % 4 != 0 {
        return Err(Error::Validation(format!("binary dihedral order must be 4k with k >= 2, got {order}")));
    }
    let m = order / 2;
    let f = CycField::new(m);
    let a = CycMatrix::diagonal(&f, vec![CycNum::zeta_pow(&f, 1), CycNum::zeta_pow(&f, -1)]);
    FiniteMatrixGroup::generate(&f, 2, &[a, antidiagonal_quarter_turn(&f)], DEFAULT_CLOSURE_CAP)
}

fn permutation_matrix(f: &std::sync::Arc<CycField>, perm: &[usize]) -> CycMatrix {
    let n = perm.len();
    let mut m = CycMatrix::zero(f, n, n);
    for (j, &i) in perm.iter().enumerate() {
        m.set(i, j, CycNum::one(f));
    }
    m
}

/// S_n as n×n permutation matrices, generated by (1 2) and the n-cycle.
pub fn symmetric(n: usize) -> Result<FiniteMatrixGroup> {
    assert!(n >= 2);
    let f = CycField::new(1);
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    FiniteMatrixGroup::generate(
        &f,
        n,
        &[permutation_matrix(&f, &swap), permutation_matrix(&f, &cycle)],
        DEFAULT_CLOSURE_CAP,
    )
}

/// T⁴ with the involution x ↦ −x.
pub fn kummer() -> TorusModel {
    let minus: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| if i == j { -1 } else { 0 }).collect()).collect();
    TorusModel::new(4, vec![minus]).expect("−I commutes with J₀")
}
