//! ω-primality through bullets.
//!
//! A bullet for `x` is a factorization `z` with `x | value(z)` such that
//! dropping any single irreducible breaks divisibility; `ω(x)` is the maximum
//! bullet length. If `z[i] > 0` then `value(z) - n_i - x` is not a member, so
//! `value(z) <= x + F + n_i`, which bounds the search.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::{factorizations, Factorization};
use crate::monoid::NumericalMonoid;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bullet {
    pub coords: Factorization,
    pub target: i64,
}

impl Bullet {
    pub fn length(&self) -> u64 {
        self.coords.length()
    }

    /// Checks both halves of the bullet condition against `m`.
    pub fn is_valid(&self, m: &NumericalMonoid) -> bool {
        let gens = m.generators();
        let value = self.coords.value(gens) as i64;
        m.contains(value - self.target)
            && self
                .coords
                .coords()
                .iter()
                .zip(gens)
                .all(|(&c, &g)| c == 0 || !m.contains(value - g as i64 - self.target))
    }
}

fn require_nonzero_member(m: &NumericalMonoid, x: i64) -> Result<()> {
    if x == 0 {
        return Err(Error::ZeroElement);
    }
    m.require_member(x)
}

fn search_bound(m: &NumericalMonoid, x: i64) -> i64 {
    x + m.frobenius() + m.largest_generator() as i64
}

/// All bullets for `x`, longest first, ties broken by coordinates descending.
pub fn bullets(m: &NumericalMonoid, x: i64) -> Result<Vec<Bullet>> {
    require_nonzero_member(m, x)?;
    let mut out = Vec::new();
    for y in x..=search_bound(m, x) {
        if !m.contains(y - x) {
            continue;
        }
        for z in factorizations(m, y)?.factorizations {
            let b = Bullet {
                coords: z,
                target: x,
            };
            if b.is_valid(m) {
                out.push(b);
            }
        }
    }
    out.sort_by(|a, b| {
        b.length()
            .cmp(&a.length())
            .then_with(|| b.coords.cmp(&a.coords))
    });
    Ok(out)
}

/// `ω(x)`, the maximum bullet length.
pub fn omega(m: &NumericalMonoid, x: i64) -> Result<u64> {
    Ok(bullets(m, x)?[0].length())
}

/// Lexicographically least pair `(y, z)` of members with `x | y + z` while
/// `x` divides neither, searched over `y, z <= x + F + n_k`.
pub fn prime_witness(m: &NumericalMonoid, x: i64) -> Result<(i64, i64)> {
    require_nonzero_member(m, x)?;
    let bound = search_bound(m, x);
    let candidates: Vec<i64> = (0..=bound)
        .filter(|&y| m.contains(y) && !m.contains(y - x))
        .collect();
    for &y in &candidates {
        for &z in &candidates {
            if m.contains(y + z - x) {
                return Ok((y, z));
            }
        }
    }
    Err(Error::WitnessNotFound(x))
}

/// `⌈(F + n_2) / (n_2 / n_1 - 1)⌉`; past it `ω(x + n_1) = ω(x) + 1`.
pub fn omega_threshold(m: &NumericalMonoid) -> Result<i64> {
    let gens = m.generators();
    if gens.len() < 2 {
        return Err(Error::SingleGenerator);
    }
    let (n1, n2) = (gens[0] as i64, gens[1] as i64);
    let numerator = Rational::from_integer(m.frobenius() + n2);
    let denominator = Rational::new(n2, n1) - Rational::from_integer(1);
    Ok((numerator / denominator).ceil())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cmm() -> NumericalMonoid {
        NumericalMonoid::new(&[6, 9, 20]).unwrap()
    }

    #[test]
    fn bullets_for_six() {
        let m = cmm();
        let bs = bullets(&m, 6).unwrap();
        assert_eq!(bs[0].coords.coords(), &[0, 0, 3]);
        assert_eq!(bs[0].length(), 3);
        let coords: Vec<&[u64]> = bs.iter().map(|b| b.coords.coords()).collect();
        assert!(coords.contains(&&[0, 2, 0][..]));
        assert!(coords.contains(&&[1, 0, 0][..]));
        assert!(bs.iter().all(|b| b.is_valid(&m)));
        assert!(bs.windows(2).all(|w| w[0].length() >= w[1].length()));
    }

    #[test]
    fn omega_values() {
        let m = cmm();
        for (x, w) in [
            (6, 3),
            (9, 3),
            (20, 10),
            (15, 4),
            (18, 3),
            (29, 13),
            (40, 10),
            (49, 13),
            (12, 3),
        ] {
            assert_eq!(omega(&m, x), Ok(w), "omega({x})");
        }
        assert_eq!(omega(&m, 0), Err(Error::ZeroElement));
        assert_eq!(omega(&m, 43), Err(Error::NotAMember(43)));
        assert_eq!(omega(&NumericalMonoid::new(&[1]).unwrap(), 5), Ok(5));
    }

    #[test]
    fn witnesses() {
        let m = cmm();
        assert_eq!(prime_witness(&m, 6), Ok((9, 9)));
        assert_eq!(prime_witness(&m, 9), Ok((6, 12)));
        let p = NumericalMonoid::new(&[4, 7, 10]).unwrap();
        assert_eq!(prime_witness(&p, 4), Ok((7, 7)));
        assert_eq!(prime_witness(&m, 0), Err(Error::ZeroElement));
        assert_eq!(prime_witness(&m, 1), Err(Error::NotAMember(1)));
        // every element of <1> is prime
        assert_eq!(
            prime_witness(&NumericalMonoid::new(&[1]).unwrap(), 1),
            Err(Error::WitnessNotFound(1))
        );
    }

    #[test]
    fn thresholds() {
        assert_eq!(omega_threshold(&cmm()), Ok(104));
        assert_eq!(
            omega_threshold(&NumericalMonoid::new(&[2, 3]).unwrap()),
            Ok(8)
        );
        assert_eq!(
            omega_threshold(&NumericalMonoid::new(&[4, 7, 10]).unwrap()),
            Ok(27)
        );
        assert_eq!(
            omega_threshold(&NumericalMonoid::new(&[1]).unwrap()),
            Err(Error::SingleGenerator)
        );
    }
}
