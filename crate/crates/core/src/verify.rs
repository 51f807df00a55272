//! Property scans backing the `verify` subcommand.
//!
//! Each check scans a finite window and reports the first counterexample it
//! meets. The generic checks run on any monoid; the closed-form checks are
//! added when the monoid is `<6, 9, 20>`.

use crate::factor::{
    delta_periodicity_threshold, elasticity_scan, factorizations, monoid_elasticity, LengthTable,
};
use crate::mcnugget;
use crate::monoid::NumericalMonoid;
use crate::omega::{omega, omega_threshold, prime_witness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, failure: Option<String>) -> Self {
        Check {
            name: name.into(),
            passed: failure.is_none(),
            detail: failure.unwrap_or_default(),
        }
    }
}

fn first_failure<I, F>(xs: I, mut bad: F) -> Option<String>
where
    I: IntoIterator<Item = i64>,
    F: FnMut(i64) -> Option<String>,
{
    xs.into_iter().find_map(&mut bad)
}

pub fn run_suite(m: &NumericalMonoid) -> Vec<Check> {
    let gens = m.generators();
    let n1 = m.multiplicity() as i64;
    let nk = m.largest_generator() as i64;
    let f = m.frobenius();
    let mut checks = Vec::new();

    checks.push(Check::new(
        "membership agrees with factorization search",
        first_failure(0..=f + 2 * nk, |x| {
            let by_search = !factorizations(m, x).unwrap().is_empty();
            (by_search != m.contains(x)).then(|| format!("x = {x}"))
        }),
    ));
    checks.push(Check::new(
        "every integer above the Frobenius number is a member",
        first_failure(f + 1..=f + 2 * nk + 1, |x| {
            (!m.contains(x)).then(|| format!("x = {x}"))
        }),
    ));
    checks.push(Check::new(
        "minimal generators are exactly the irreducibles",
        (m.irreducibles()
            != (0..=2 * nk)
                .filter(|&x| m.is_irreducible(x))
                .collect::<Vec<_>>())
        .then(|| "mismatch".to_string()),
    ));

    let bound = (n1 * nk + 600).max(300);
    let table = LengthTable::new(m, bound + nk);
    checks.push(Check::new(
        "length DP agrees with factorization lengths",
        first_failure(table.members().take_while(|&x| x <= 300), |x| {
            let lengths = factorizations(m, x).unwrap().lengths();
            (lengths != table.length_set(x).unwrap().lengths).then(|| format!("x = {x}"))
        }),
    ));

    if gens.len() >= 2 {
        let nk1 = gens[gens.len() - 2] as i64;
        checks.push(Check::new(
            format!("L(x + {n1}) = L(x) + 1 for x > {}", n1 * nk),
            first_failure((n1 * nk + 1..=bound).filter(|&x| m.contains(x)), |x| {
                let (a, b) = (
                    table.max_length(x).unwrap(),
                    table.max_length(x + n1).unwrap(),
                );
                (b != a + 1).then(|| format!("x = {x}: L = {a}, L(x + n_1) = {b}"))
            }),
        ));
        checks.push(Check::new(
            format!("min length grows by 1 under +{nk} for x > {}", nk1 * nk),
            first_failure((nk1 * nk + 1..=bound).filter(|&x| m.contains(x)), |x| {
                let (a, b) = (
                    table.min_length(x).unwrap(),
                    table.min_length(x + nk).unwrap(),
                );
                (b != a + 1).then(|| format!("x = {x}: min = {a}, min(x + n_k) = {b}"))
            }),
        ));
    }

    let scan = elasticity_scan(m, 20 * crate::monoid::lcm(n1 as u64, nk as u64) as i64);
    checks.push(Check::new(
        format!(
            "elasticity {} is reached exactly at multiples of lcm(n_1, n_k)",
            monoid_elasticity(m)
        ),
        (!scan.confirms(m)).then(|| format!("max {} at {:?}", scan.max, scan.attained_at)),
    ));

    if let Some(threshold) = delta_periodicity_threshold(m) {
        let period = n1 * nk;
        let window = threshold + 2 * period;
        let big = LengthTable::new(m, window + period);
        checks.push(Check::new(
            format!("delta sets repeat with period {period} above {threshold}"),
            first_failure((threshold + 1..=window).filter(|&x| m.contains(x)), |x| {
                (big.delta_set(x).unwrap() != big.delta_set(x + period).unwrap())
                    .then(|| format!("x = {x}"))
            }),
        ));
    }

    if let Ok(threshold) = omega_threshold(m) {
        checks.push(Check::new(
            format!("omega(x + {n1}) = omega(x) + 1 for x > {threshold}"),
            first_failure(
                (threshold + 1..=threshold + 20 * n1).filter(|&x| m.contains(x)),
                |x| {
                    let (a, b) = (omega(m, x).unwrap(), omega(m, x + n1).unwrap());
                    (b != a + 1).then(|| format!("x = {x}: omega = {a}, omega(x + n_1) = {b}"))
                },
            ),
        ));
        checks.push(Check::new(
            "every minimal generator has a prime witness",
            first_failure(m.irreducibles(), |g| {
                prime_witness(m, g).err().map(|e| e.to_string())
            }),
        ));
    }

    if gens == [6, 9, 20] {
        checks.extend(mcnugget_suite(m));
    }
    checks
}

fn mcnugget_suite(m: &NumericalMonoid) -> Vec<Check> {
    let table = LengthTable::new(m, 2400 + 20);
    let members = || table.members().take_while(|&x| x <= 2400);
    let mut checks = Vec::new();

    checks.push(Check::new(
        "canned tables match recomputation",
        first_failure(0..=50, |x| {
            let z = factorizations(m, x).unwrap();
            if mcnugget::table_expansions()[&x] != z {
                return Some(format!("Z({x})"));
            }
            let row = mcnugget::table_length_sets().get(&x).cloned();
            let computed = table
                .length_set(x)
                .ok()
                .map(|s| (s.lengths.clone(), s.min(), s.max()));
            (row.map(|r| (r.lengths, r.min, r.max)) != computed).then(|| format!("lengths of {x}"))
        }),
    ));
    checks.push(Check::new(
        "max length closed form and L(x + 6) = L(x) + 1 for every member",
        first_failure(members(), |x| {
            let l = table.max_length(x).unwrap();
            if mcnugget::max_length_formula(x).unwrap() != l {
                return Some(format!("formula differs at {x}"));
            }
            (x + 6 <= 2420 && table.max_length(x + 6).unwrap() != l + 1)
                .then(|| format!("recurrence fails at {x}"))
        }),
    ));
    checks.push(Check::new(
        "min length closed form and min(x + 20) = min(x) + 1 for every member",
        first_failure(members(), |x| {
            let l = table.min_length(x).unwrap();
            if mcnugget::min_length_formula(x).unwrap() != l {
                return Some(format!("formula differs at {x}"));
            }
            (table.min_length(x + 20).unwrap() != l + 1).then(|| format!("recurrence fails at {x}"))
        }),
    ));
    checks.push(Check::new(
        "delta closed form for x >= 92, with 91 the last break of period 20",
        first_failure(members(), |x| {
            let d = table.delta_set(x).unwrap();
            let next = table.delta_set(x + 20).unwrap();
            if x >= mcnugget::DELTA_FORMULA_START {
                if mcnugget::delta_formula(x).unwrap() != d {
                    return Some(format!("formula differs at {x}"));
                }
                (next != d).then(|| format!("period 20 fails at {x}"))
            } else {
                (x == 91 && next == d).then(|| "period 20 holds at 91".to_string())
            }
        }),
    ));
    let omegas: Vec<(i64, u64)> = (1..=606)
        .filter(|&x| m.contains(x))
        .map(|x| (x, omega(m, x).unwrap()))
        .collect();
    let omega_of = |x: i64| omegas.iter().find(|(y, _)| *y == x).map(|&(_, w)| w);
    checks.push(Check::new(
        "omega closed form agrees with bullets up to 600",
        first_failure(omegas.iter().map(|&(x, _)| x).filter(|&x| x <= 600), |x| {
            match mcnugget::omega_formula(x) {
                Ok(w) if Some(w) != omega_of(x) => Some(format!("x = {x}")),
                _ => None,
            }
        }),
    ));
    let breaks: Vec<i64> = omegas
        .iter()
        .filter(|&&(x, w)| x <= 600 && omega_of(x + 6) != Some(w + 1))
        .map(|&(x, _)| x)
        .collect();
    checks.push(Check::new(
        "omega(x + 6) = omega(x) + 1 except exactly at 6 and 12",
        (breaks != mcnugget::OMEGA_EXCEPTIONS).then(|| format!("breaks at {breaks:?}")),
    ));
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_monoids_pass() {
        for gens in [&[2, 3][..], &[4, 7, 10], &[5, 7, 9, 11], &[1]] {
            let m = NumericalMonoid::new(gens).unwrap();
            for c in run_suite(&m) {
                assert!(c.passed, "{gens:?}: {} ({})", c.name, c.detail);
            }
        }
    }
}
