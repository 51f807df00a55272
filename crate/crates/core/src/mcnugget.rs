//! Closed forms for the McNugget monoid `<6, 9, 20>` and its reference tables.
//!
//! The formulas here are exact for every member in their stated range and
//! are cross-checked against the generic DP and bullet routines in tests.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::factor::{DeltaSet, Factorization, FactorizationSet};
use crate::monoid::NumericalMonoid;
use crate::omega as generic;

pub const GENERATORS: [i64; 3] = [6, 9, 20];

pub fn monoid() -> NumericalMonoid {
    NumericalMonoid::new(&GENERATORS).expect("6, 9, 20 are coprime")
}

/// Writes `x = modulus * q + r` and evaluates `q + offsets[r]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueFormula {
    pub modulus: u64,
    pub offsets: BTreeMap<u64, i64>,
}

impl ResidueFormula {
    fn from_classes(modulus: u64, classes: &[(i64, &[u64])]) -> Self {
        let mut offsets = BTreeMap::new();
        for &(offset, residues) in classes {
            for &r in residues {
                offsets.insert(r, offset);
            }
        }
        ResidueFormula { modulus, offsets }
    }

    pub fn eval(&self, x: u64) -> Option<i64> {
        let (q, r) = (x / self.modulus, x % self.modulus);
        self.offsets.get(&r).map(|off| q as i64 + off)
    }
}

/// `L(x)` by residue modulo 6.
pub fn max_length_rule() -> ResidueFormula {
    ResidueFormula::from_classes(6, &[(0, &[0, 3]), (-5, &[1]), (-2, &[2, 5]), (-4, &[4])])
}

/// `ℓ(x)` by residue modulo 20.
///
/// Residue 3 takes offset 4: its least member is `63 = 7 * 9` with
/// `ℓ(63) = 7 = 3 + 4`. Only residue 17 (least member `57`) takes offset 5.
pub fn min_length_rule() -> ResidueFormula {
    ResidueFormula::from_classes(
        20,
        &[
            (0, &[0]),
            (1, &[6, 9]),
            (2, &[1, 4, 7, 12, 15, 18]),
            (3, &[2, 5, 10, 13, 16]),
            (4, &[3, 8, 11, 14, 19]),
            (5, &[17]),
        ],
    )
}

/// `ω(x)` by residue modulo 6, valid away from 6 and 12.
pub fn omega_rule() -> ResidueFormula {
    ResidueFormula::from_classes(
        6,
        &[
            (0, &[0]),
            (5, &[1]),
            (7, &[2]),
            (2, &[3]),
            (4, &[4]),
            (9, &[5]),
        ],
    )
}

fn require_member(x: i64) -> Result<u64> {
    monoid().require_member(x)?;
    Ok(x as u64)
}

pub fn max_length_formula(x: i64) -> Result<u64> {
    let x = require_member(x)?;
    Ok(max_length_rule().eval(x).unwrap() as u64)
}

pub fn min_length_formula(x: i64) -> Result<u64> {
    let x = require_member(x)?;
    Ok(min_length_rule().eval(x).unwrap() as u64)
}

/// Smallest element from which `Δ(x + 20) = Δ(x)` holds throughout.
pub const DELTA_FORMULA_START: i64 = 92;

/// `Δ(x)` by residue modulo 20 for members `x >= 92`.
pub fn delta_formula(x: i64) -> Result<DeltaSet> {
    let x = require_member(x)?;
    if (x as i64) < DELTA_FORMULA_START {
        return Err(Error::BelowFormulaRange(x as i64));
    }
    let second = match x % 20 {
        3 | 8 | 14 | 17 => None,
        2 | 5 | 10 | 11 | 16 | 19 => Some(2),
        1 | 4 | 7 | 12 | 13 | 18 => Some(3),
        0 | 6 | 9 | 15 => Some(4),
        _ => unreachable!(),
    };
    Ok(std::iter::once(1).chain(second).collect())
}

/// Elements where `ω(x + 6) = ω(x) + 1` fails and the closed form does not apply.
pub const OMEGA_EXCEPTIONS: [i64; 2] = [6, 12];

pub fn omega_formula(x: i64) -> Result<u64> {
    if x == 0 {
        return Err(Error::ZeroElement);
    }
    let ux = require_member(x)?;
    if OMEGA_EXCEPTIONS.contains(&x) {
        return Err(Error::ExceptionalElement(x));
    }
    Ok(omega_rule().eval(ux).unwrap() as u64)
}

/// `ω(x)` in `<6, 9, 20>`: the closed form where it applies, bullets otherwise.
pub fn omega(x: i64) -> Result<u64> {
    match omega_formula(x) {
        Err(Error::ExceptionalElement(_)) => generic::omega(&monoid(), x),
        other => other,
    }
}

// Expansions for 0..=50 in the order they are listed in the reference table.
const EXPANSIONS: [&[[u64; 3]]; 51] = [
    &[[0, 0, 0]],
    &[],
    &[],
    &[],
    &[],
    &[],
    &[[1, 0, 0]],
    &[],
    &[],
    &[[0, 1, 0]],
    &[],
    &[],
    &[[2, 0, 0]],
    &[],
    &[],
    &[[1, 1, 0]],
    &[],
    &[],
    &[[3, 0, 0], [0, 2, 0]],
    &[],
    &[[0, 0, 1]],
    &[[2, 1, 0]],
    &[],
    &[],
    &[[4, 0, 0], [1, 2, 0]],
    &[],
    &[[1, 0, 1]],
    &[[0, 3, 0], [3, 1, 0]],
    &[],
    &[[0, 1, 1]],
    &[[5, 0, 0], [2, 2, 0]],
    &[],
    &[[2, 0, 1]],
    &[[1, 3, 0], [4, 1, 0]],
    &[],
    &[[1, 1, 1]],
    &[[0, 4, 0], [3, 2, 0], [6, 0, 0]],
    &[],
    &[[0, 2, 1], [3, 0, 1]],
    &[[2, 3, 0], [5, 1, 0]],
    &[[0, 0, 2]],
    &[[2, 1, 1]],
    &[[1, 4, 0], [4, 2, 0], [7, 0, 0]],
    &[],
    &[[1, 2, 1], [4, 0, 1]],
    &[[0, 5, 0], [3, 3, 0], [6, 1, 0]],
    &[[1, 0, 2]],
    &[[0, 3, 1], [3, 1, 1]],
    &[[2, 4, 0], [5, 2, 0], [8, 0, 0]],
    &[[0, 1, 2]],
    &[[2, 2, 1], [5, 0, 1]],
];

/// `(x, lengths, ℓ, L)` for the members in `0..=50`.
const LENGTH_ROWS: [(i64, &[u64], u64, u64); 29] = [
    (0, &[0], 0, 0),
    (6, &[1], 1, 1),
    (9, &[1], 1, 1),
    (12, &[2], 2, 2),
    (15, &[2], 2, 2),
    (18, &[2, 3], 2, 3),
    (20, &[1], 1, 1),
    (21, &[3], 3, 3),
    (24, &[3, 4], 3, 4),
    (26, &[2], 2, 2),
    (27, &[3, 4], 3, 4),
    (29, &[2], 2, 2),
    (30, &[4, 5], 4, 5),
    (32, &[3], 3, 3),
    (33, &[4, 5], 4, 5),
    (35, &[3], 3, 3),
    (36, &[4, 5, 6], 4, 6),
    (38, &[3, 4], 3, 4),
    (39, &[5, 6], 5, 6),
    (40, &[2], 2, 2),
    (41, &[4], 4, 4),
    (42, &[5, 6, 7], 5, 7),
    (44, &[4, 5], 4, 5),
    (45, &[5, 6, 7], 5, 7),
    (46, &[3], 3, 3),
    (47, &[4, 5], 4, 5),
    (48, &[6, 7, 8], 6, 8),
    (49, &[3], 3, 3),
    (50, &[5, 6], 5, 6),
];

/// Factorization sets of `0..=50`, in canonical (descending) order.
pub fn table_expansions() -> BTreeMap<i64, FactorizationSet> {
    EXPANSIONS
        .iter()
        .enumerate()
        .map(|(x, rows)| {
            let zs = rows
                .iter()
                .map(|c| Factorization::new(c.to_vec()))
                .collect();
            (x as i64, FactorizationSet::new(x as i64, zs))
        })
        .collect()
}

/// One row of the length table.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct LengthRow {
    pub lengths: Vec<u64>,
    pub min: u64,
    pub max: u64,
}

/// Length sets with their extremes for members in `0..=50`.
pub fn table_length_sets() -> BTreeMap<i64, LengthRow> {
    LENGTH_ROWS
        .iter()
        .map(|&(x, lengths, min, max)| {
            (
                x,
                LengthRow {
                    lengths: lengths.to_vec(),
                    min,
                    max,
                },
            )
        })
        .collect()
}
