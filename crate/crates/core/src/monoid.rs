//! Construction, membership and Frobenius numbers of numerical monoids.

use crate::error::{Error, Result};

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// A numerical monoid given by its minimal generating set.
///
/// The Apéry table with respect to the smallest generator `n_1` is built
/// eagerly, so membership and the Frobenius number are table lookups. The
/// value is immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalMonoid {
    input_generators: Vec<u64>,
    generators: Vec<u64>,
    apery: Vec<u64>,
}

impl NumericalMonoid {
    /// Builds the monoid generated by `generators`.
    ///
    /// The list is sorted, deduplicated and then minimalized: a generator is
    /// dropped when it already lies in the monoid spanned by the smaller ones.
    pub fn new(generators: &[i64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = generators.iter().find(|&&g| g < 1) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let input_generators: Vec<u64> = generators.iter().map(|&g| g as u64).collect();
        let g = input_generators.iter().fold(0, |acc, &n| gcd(acc, n));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }

        let mut sorted = input_generators.clone();
        sorted.sort_unstable();
        sorted.dedup();

        let mut minimal: Vec<u64> = Vec::with_capacity(sorted.len());
        for &n in &sorted {
            if !representable(&minimal, n) {
                minimal.push(n);
            }
        }

        let apery = apery_table(&minimal);
        Ok(NumericalMonoid {
            input_generators,
            generators: minimal,
            apery,
        })
    }

    /// The generators exactly as passed to [`NumericalMonoid::new`].
    pub fn input_generators(&self) -> &[u64] {
        &self.input_generators
    }

    /// Minimal generators `n_1 < ... < n_k`.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn largest_generator(&self) -> u64 {
        *self.generators.last().unwrap()
    }

    /// Entry `j` is the least element congruent to `j` modulo `n_1`.
    pub fn apery_table(&self) -> &[u64] {
        &self.apery
    }

    /// Negative integers are never members.
    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let x = x as u64;
        x >= self.apery[(x % self.multiplicity()) as usize]
    }

    /// All gaps in increasing order.
    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius())
            .filter(|&x| !self.contains(x))
            .collect()
    }

    /// Largest gap, or `-1` for `<1>`.
    pub fn frobenius(&self) -> i64 {
        *self.apery.iter().max().unwrap() as i64 - self.multiplicity() as i64
    }

    /// `x` divides `y` when `y - x` lies in the monoid.
    pub fn divides(&self, x: i64, y: i64) -> Result<bool> {
        self.require_member(x)?;
        self.require_member(y)?;
        Ok(self.contains(y - x))
    }

    /// The irreducible elements, which are exactly the minimal generators.
    pub fn irreducibles(&self) -> Vec<i64> {
        self.generators.iter().map(|&g| g as i64).collect()
    }

    /// Checks irreducibility straight from the definition: `x` is a nonzero
    /// member admitting no split `x = y + z` into nonzero members.
    pub fn is_irreducible(&self, x: i64) -> bool {
        x > 0 && self.contains(x) && !(1..x).any(|y| self.contains(y) && self.contains(x - y))
    }

    pub(crate) fn require_member(&self, x: i64) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::NotAMember(x))
        }
    }
}

/// Whether `target` is a nonnegative combination of `gens`, which may have
/// any gcd. Plain coin-change reachability.
fn representable(gens: &[u64], target: u64) -> bool {
    if target == 0 {
        return true;
    }
    if gens.is_empty() {
        return false;
    }
    let t = target as usize;
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for v in 1..=t {
        reach[v] = gens
            .iter()
            .any(|&g| (g as usize) <= v && reach[v - g as usize]);
    }
    reach[t]
}

/// Round-robin relaxation over the residue classes modulo `n_1` until no
/// entry improves. Requires gcd 1 so every class becomes finite.
fn apery_table(gens: &[u64]) -> Vec<u64> {
    let m = gens[0];
    let mut table = vec![u64::MAX; m as usize];
    table[0] = 0;
    loop {
        let mut changed = false;
        for j in 0..m {
            let base = table[j as usize];
            if base == u64::MAX {
                continue;
            }
            for &n in &gens[1..] {
                let slot = ((j + n) % m) as usize;
                if base + n < table[slot] {
                    table[slot] = base + n;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    debug_assert!(table.iter().all(|&v| v != u64::MAX));
    table
}

/// `ab - a - b` for coprime `a, b >= 2`.
pub fn frobenius_sylvester(a: i64, b: i64) -> Result<i64> {
    if let Some(&small) = [a, b].iter().find(|&&v| v < 2) {
        return Err(Error::GeneratorTooSmall(small));
    }
    if gcd(a as u64, b as u64) != 1 {
        return Err(Error::NotCoprime(a, b));
    }
    Ok(a * b - a - b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cmm() -> NumericalMonoid {
        NumericalMonoid::new(&[6, 9, 20]).unwrap()
    }

    #[test]
    fn minimal_generators() {
        assert_eq!(cmm().generators(), &[6, 9, 20]);
        let m = NumericalMonoid::new(&[6, 9, 20, 27]).unwrap();
        assert_eq!(m.generators(), &[6, 9, 20]);
        assert_eq!(m.input_generators(), &[6, 9, 20, 27]);
        assert_eq!(NumericalMonoid::new(&[1]).unwrap().generators(), &[1]);
        assert_eq!(
            NumericalMonoid::new(&[20, 9, 6, 9, 6])
                .unwrap()
                .generators(),
            &[6, 9, 20]
        );
        assert_eq!(
            NumericalMonoid::new(&[3, 5, 7, 8, 9, 10])
                .unwrap()
                .generators(),
            &[3, 5, 7]
        );
    }

    #[test]
    fn construction_errors() {
        assert_eq!(NumericalMonoid::new(&[]), Err(Error::EmptyGenerators));
        assert_eq!(
            NumericalMonoid::new(&[6, 0, 7]),
            Err(Error::NonPositiveGenerator(0))
        );
        assert_eq!(
            NumericalMonoid::new(&[-3, 7]),
            Err(Error::NonPositiveGenerator(-3))
        );
        assert_eq!(NumericalMonoid::new(&[6, 9]), Err(Error::GcdNotOne(3)));
        assert_eq!(NumericalMonoid::new(&[4]), Err(Error::GcdNotOne(4)));
    }

    #[test]
    fn membership() {
        let m = cmm();
        assert!(!m.contains(43));
        assert!(m.contains(44));
        assert!(m.contains(0));
        assert!(!m.contains(-6));
        let p = NumericalMonoid::new(&[4, 7, 10]).unwrap();
        assert!(!p.contains(13));
        assert!(p.contains(14));
    }

    #[test]
    fn apery_table_values() {
        // residues mod 6: 0, 49, 20, 9, 40, 29
        assert_eq!(cmm().apery_table(), &[0, 49, 20, 9, 40, 29]);
        assert_eq!(NumericalMonoid::new(&[1]).unwrap().apery_table(), &[0]);
    }

    #[test]
    fn gaps_and_frobenius() {
        let m = cmm();
        assert_eq!(
            m.gaps(),
            vec![1, 2, 3, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17, 19, 22, 23, 25, 28, 31, 34, 37, 43]
        );
        assert_eq!(m.frobenius(), 43);
        let p = NumericalMonoid::new(&[4, 7, 10]).unwrap();
        assert_eq!(p.gaps(), vec![1, 2, 3, 5, 6, 9, 13]);
        assert_eq!(p.frobenius(), 13);
        let n = NumericalMonoid::new(&[1]).unwrap();
        assert!(n.gaps().is_empty());
        assert_eq!(n.frobenius(), -1);
    }

    #[test]
    fn sylvester() {
        assert_eq!(frobenius_sylvester(3, 5), Ok(7));
        assert_eq!(frobenius_sylvester(2, 3), Ok(1));
        assert_eq!(frobenius_sylvester(4, 7), Ok(17));
        assert_eq!(frobenius_sylvester(4, 6), Err(Error::NotCoprime(4, 6)));
        assert_eq!(frobenius_sylvester(1, 6), Err(Error::GeneratorTooSmall(1)));
    }

    #[test]
    fn divisibility() {
        let m = cmm();
        assert_eq!(m.divides(6, 18), Ok(true));
        assert_eq!(m.divides(6, 9), Ok(false));
        assert_eq!(m.divides(44, 44), Ok(true));
        assert_eq!(m.divides(7, 18), Err(Error::NotAMember(7)));
        assert_eq!(m.divides(6, 43), Err(Error::NotAMember(43)));
    }

    #[test]
    fn irreducibles_match_definition() {
        for gens in [&[6, 9, 20][..], &[4, 7, 10], &[5, 7, 9, 11]] {
            let m = NumericalMonoid::new(gens).unwrap();
            assert_eq!(m.irreducibles(), gens.to_vec());
            let by_definition: Vec<i64> = (0..=2 * m.largest_generator() as i64)
                .filter(|&x| m.is_irreducible(x))
                .collect();
            assert_eq!(by_definition, gens.to_vec());
        }
    }

    #[test]
    fn lcm_gcd() {
        assert_eq!(gcd(6, 20), 2);
        assert_eq!(lcm(6, 20), 60);
        assert_eq!(gcd(0, 9), 9);
    }
}
