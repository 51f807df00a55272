//! Factorization sets, length sets and the invariants derived from them.
//!
//! [`factorizations`] enumerates `Z(x)` directly. Everything that only needs
//! lengths goes through [`LengthTable`], a bitset DP over reachable
//! `(value, length)` pairs, which is far cheaper than enumerating `Z(x)` for
//! every element of a long scan.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monoid::{lcm, NumericalMonoid};
use crate::rational::Rational;

/// Exponent vector over the minimal generators, in ascending generator order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Factorization {
    coords: Vec<u64>,
}

impl Factorization {
    pub fn new(coords: Vec<u64>) -> Self {
        Factorization { coords }
    }

    pub fn zero(k: usize) -> Self {
        Factorization { coords: vec![0; k] }
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    /// Number of irreducibles used.
    pub fn length(&self) -> u64 {
        self.coords.iter().sum()
    }

    /// Weighted sum against `generators`, which must have the same length.
    pub fn value(&self, generators: &[u64]) -> u64 {
        debug_assert_eq!(self.coords.len(), generators.len());
        self.coords.iter().zip(generators).map(|(c, g)| c * g).sum()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// The complete set `Z(x)`, sorted lexicographically descending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationSet {
    pub element: i64,
    pub factorizations: Vec<Factorization>,
}

impl FactorizationSet {
    /// Sorts and deduplicates `factorizations` into canonical order.
    pub fn new(element: i64, mut factorizations: Vec<Factorization>) -> Self {
        factorizations.sort_unstable_by(|a, b| b.cmp(a));
        factorizations.dedup();
        FactorizationSet {
            element,
            factorizations,
        }
    }

    pub fn len(&self) -> usize {
        self.factorizations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factorizations.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Factorization> {
        self.factorizations.iter()
    }

    pub fn lengths(&self) -> Vec<u64> {
        let set: BTreeSet<u64> = self.iter().map(Factorization::length).collect();
        set.into_iter().collect()
    }
}

impl fmt::Display for FactorizationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("NONE");
        }
        for (i, z) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{z}")?;
        }
        Ok(())
    }
}

fn write_braced(f: &mut fmt::Formatter<'_>, values: &[u64]) -> fmt::Result {
    f.write_str("{")?;
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str("}")
}

/// Strictly increasing factorization lengths of one member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthSet {
    pub element: i64,
    pub lengths: Vec<u64>,
}

impl LengthSet {
    pub fn min(&self) -> u64 {
        self.lengths[0]
    }

    pub fn max(&self) -> u64 {
        *self.lengths.last().unwrap()
    }

    /// `max / min`, with the empty factorization of 0 given elasticity 1.
    pub fn elasticity(&self) -> Rational {
        if self.min() == 0 {
            Rational::from_integer(1)
        } else {
            Rational::new(self.max() as i64, self.min() as i64)
        }
    }

    pub fn delta(&self) -> DeltaSet {
        self.lengths.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

impl fmt::Display for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_braced(f, &self.lengths)
    }
}

/// Sorted set of successive differences of a length set, or a union of such.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DeltaSet {
    values: Vec<u64>,
}

impl DeltaSet {
    pub fn new(values: impl IntoIterator<Item = u64>) -> Self {
        values.into_iter().collect()
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn union(&self, other: &DeltaSet) -> DeltaSet {
        self.values.iter().chain(&other.values).copied().collect()
    }
}

impl FromIterator<u64> for DeltaSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        let set: BTreeSet<u64> = iter.into_iter().collect();
        DeltaSet {
            values: set.into_iter().collect(),
        }
    }
}

impl fmt::Display for DeltaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_braced(f, &self.values)
    }
}

/// Every nonnegative solution of `sum coords[i] * n_i = x`.
///
/// Descends from the largest generator, trying its coefficient from
/// `x / n_k` down to 0; the smallest generator must then divide what is left.
/// Non-members get an empty set.
pub fn factorizations(m: &NumericalMonoid, x: i64) -> Result<FactorizationSet> {
    if x < 0 {
        return Err(Error::NegativeElement(x));
    }
    let gens = m.generators();
    let mut out = Vec::new();
    if m.contains(x) {
        let mut coords = vec![0u64; gens.len()];
        descend(gens, gens.len() - 1, x as u64, &mut coords, &mut out);
    }
    Ok(FactorizationSet::new(x, out))
}

fn descend(gens: &[u64], i: usize, rest: u64, coords: &mut [u64], out: &mut Vec<Factorization>) {
    let g = gens[i];
    if i == 0 {
        if rest.is_multiple_of(g) {
            coords[0] = rest / g;
            out.push(Factorization::new(coords.to_vec()));
        }
        return;
    }
    for c in (0..=rest / g).rev() {
        coords[i] = c;
        descend(gens, i - 1, rest - c * g, coords, out);
    }
    coords[i] = 0;
}

/// Length sets for every integer in `0..=bound`, built once and then read.
///
/// `L(0) = {0}` and `L(x)` is the union of `L(x - n_i) + 1`. Each set is a
/// bitset indexed by absolute length; non-members hold an empty bitset.
#[derive(Debug, Clone)]
pub struct LengthTable {
    bound: i64,
    sets: Vec<Box<[u64]>>,
}

impl LengthTable {
    pub fn new(m: &NumericalMonoid, bound: i64) -> Self {
        let bound = bound.max(0);
        let gens = m.generators();
        let n1 = m.multiplicity() as usize;
        let mut sets: Vec<Box<[u64]>> = Vec::with_capacity(bound as usize + 1);
        sets.push(vec![1u64].into_boxed_slice());
        for x in 1..=bound as usize {
            if !m.contains(x as i64) {
                sets.push(Box::default());
                continue;
            }
            // lengths never exceed x / n_1
            let words = x / n1 / 64 + 1;
            let mut bits = vec![0u64; words];
            for &g in gens {
                let g = g as usize;
                if g > x {
                    break;
                }
                let prev = &sets[x - g];
                let mut carry = 0u64;
                for (w, &word) in prev.iter().enumerate() {
                    bits[w] |= (word << 1) | carry;
                    carry = word >> 63;
                }
                if carry != 0 {
                    bits[prev.len()] |= carry;
                }
            }
            sets.push(bits.into_boxed_slice());
        }
        LengthTable { bound, sets }
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    fn bits(&self, x: i64) -> Result<&[u64]> {
        if x < 0 {
            return Err(Error::NegativeElement(x));
        }
        assert!(
            x <= self.bound,
            "{x} lies beyond the table bound {}",
            self.bound
        );
        let bits = &self.sets[x as usize];
        if bits.is_empty() {
            Err(Error::NotAMember(x))
        } else {
            Ok(bits)
        }
    }

    pub fn is_member(&self, x: i64) -> bool {
        (0..=self.bound).contains(&x) && !self.sets[x as usize].is_empty()
    }

    /// Panics if `x` exceeds the bound the table was built for.
    pub fn length_set(&self, x: i64) -> Result<LengthSet> {
        let bits = self.bits(x)?;
        let mut lengths = Vec::new();
        for (w, &word) in bits.iter().enumerate() {
            let mut word = word;
            while word != 0 {
                let b = word.trailing_zeros() as u64;
                lengths.push(w as u64 * 64 + b);
                word &= word - 1;
            }
        }
        Ok(LengthSet {
            element: x,
            lengths,
        })
    }

    pub fn min_length(&self, x: i64) -> Result<u64> {
        let bits = self.bits(x)?;
        let (w, word) = bits.iter().enumerate().find(|(_, &w)| w != 0).unwrap();
        Ok(w as u64 * 64 + word.trailing_zeros() as u64)
    }

    pub fn max_length(&self, x: i64) -> Result<u64> {
        let bits = self.bits(x)?;
        let (w, word) = bits
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .unwrap();
        Ok(w as u64 * 64 + 63 - word.leading_zeros() as u64)
    }

    pub fn elasticity(&self, x: i64) -> Result<Rational> {
        Ok(self.length_set(x)?.elasticity())
    }

    pub fn delta_set(&self, x: i64) -> Result<DeltaSet> {
        Ok(self.length_set(x)?.delta())
    }

    /// Members in `0..=bound`, ascending.
    pub fn members(&self) -> impl Iterator<Item = i64> + '_ {
        (0..=self.bound).filter(|&x| self.is_member(x))
    }
}

pub fn length_set(m: &NumericalMonoid, x: i64) -> Result<LengthSet> {
    if x < 0 {
        return Err(Error::NegativeElement(x));
    }
    m.require_member(x)?;
    LengthTable::new(m, x).length_set(x)
}

/// `L(x)`, the longest factorization length.
pub fn max_length(m: &NumericalMonoid, x: i64) -> Result<u64> {
    Ok(length_set(m, x)?.max())
}

/// `ℓ(x)`, the shortest factorization length.
pub fn min_length(m: &NumericalMonoid, x: i64) -> Result<u64> {
    Ok(length_set(m, x)?.min())
}

/// `L(x) / ℓ(x)` in lowest terms; `ρ(0) = 1`.
pub fn elasticity(m: &NumericalMonoid, x: i64) -> Result<Rational> {
    Ok(length_set(m, x)?.elasticity())
}

pub fn delta_set(m: &NumericalMonoid, x: i64) -> Result<DeltaSet> {
    Ok(length_set(m, x)?.delta())
}

/// The monoid's elasticity `n_k / n_1`.
pub fn monoid_elasticity(m: &NumericalMonoid) -> Rational {
    Rational::new(m.largest_generator() as i64, m.multiplicity() as i64)
}

/// Largest element elasticity observed over members up to a bound, and the
/// members where it is reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElasticityScan {
    pub bound: i64,
    pub max: Rational,
    pub attained_at: Vec<i64>,
}

impl ElasticityScan {
    /// Whether the scan is consistent with `ρ(S) = n_k / n_1`: no element
    /// exceeds it, and the nonzero members reaching it are exactly the
    /// multiples of `lcm(n_1, n_k)` in range.
    pub fn confirms(&self, m: &NumericalMonoid) -> bool {
        let sup = monoid_elasticity(m);
        if m.embedding_dimension() == 1 {
            return self.max == sup;
        }
        let l = lcm(m.multiplicity(), m.largest_generator()) as i64;
        let multiples: Vec<i64> = (1..=self.bound / l).map(|q| q * l).collect();
        self.max <= sup && self.attained_at == multiples
    }
}

/// Scans `ρ(x)` over members `1..=bound`.
pub fn elasticity_scan(m: &NumericalMonoid, bound: i64) -> ElasticityScan {
    let table = LengthTable::new(m, bound);
    let mut max = Rational::from_integer(1);
    let mut attained_at = Vec::new();
    for x in table.members().filter(|&x| x > 0) {
        let rho = table.elasticity(x).unwrap();
        if rho > max {
            max = rho;
            attained_at.clear();
        }
        if rho == max {
            attained_at.push(x);
        }
    }
    ElasticityScan {
        bound,
        max,
        attained_at,
    }
}

/// `2 k n_2 n_k^2`; above it `Δ(x) = Δ(x + n_1 n_k)`. `None` for `k = 1`.
pub fn delta_periodicity_threshold(m: &NumericalMonoid) -> Option<i64> {
    let gens = m.generators();
    if gens.len() < 2 {
        return None;
    }
    let k = gens.len() as i64;
    let n2 = gens[1] as i64;
    let nk = m.largest_generator() as i64;
    Some(2 * k * n2 * nk * nk)
}

/// `Δ(S)` as the union of `Δ(x)` over members `x <= 2 k n_2 n_k^2 + n_1 n_k`.
pub fn monoid_delta_set(m: &NumericalMonoid) -> DeltaSet {
    let Some(threshold) = delta_periodicity_threshold(m) else {
        return DeltaSet::default();
    };
    let bound = threshold + (m.multiplicity() * m.largest_generator()) as i64;
    let table = LengthTable::new(m, bound);
    table
        .members()
        .flat_map(|x| table.delta_set(x).unwrap().values)
        .collect()
}

/// Nonzero members `x <= limit` with exactly one factorization.
pub fn unique_factorization_elements(m: &NumericalMonoid, limit: i64) -> Vec<i64> {
    if limit < 1 {
        return Vec::new();
    }
    let limit = limit as usize;
    // number of factorizations, saturated at 2
    let mut count = vec![0u8; limit + 1];
    count[0] = 1;
    for &g in m.generators() {
        let g = g as usize;
        for v in g..=limit {
            count[v] = (count[v] + count[v - g]).min(2);
        }
    }
    (1..=limit)
        .filter(|&x| count[x] == 1)
        .map(|x| x as i64)
        .collect()
}
