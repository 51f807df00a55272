//! Golden fixtures against the canned tables, fresh computation and the CLI.

use std::path::PathBuf;

use nummon::factor::LengthTable;
use nummon::mcnugget::{self, LengthRow};
use nummon::{factorizations, unique_factorization_elements, Factorization, NumericalMonoid};
use serde::Deserialize;

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[derive(Deserialize)]
struct Table1 {
    version: u32,
    generators: Vec<i64>,
    rows: Vec<Table1Row>,
}

#[derive(Deserialize)]
struct Table1Row {
    x: i64,
    factorizations: Vec<Factorization>,
}

#[derive(Deserialize)]
struct Table2 {
    version: u32,
    generators: Vec<i64>,
    rows: Vec<Table2Row>,
}

#[derive(Deserialize)]
struct Table2Row {
    x: i64,
    #[serde(flatten)]
    row: LengthRow,
}

#[derive(Deserialize)]
struct UniqueFixture {
    version: u32,
    generators: Vec<i64>,
    limit: i64,
    elements: Vec<i64>,
}

fn cli(args: &[&str]) -> String {
    let mut out = Vec::new();
    let code = nummon::cli::run(
        std::iter::once("nummon").chain(args.iter().copied()),
        &mut out,
        &mut Vec::new(),
    );
    assert_eq!(code, 0);
    String::from_utf8(out).unwrap()
}

#[test]
fn expansion_table_fixture() {
    let t: Table1 = serde_json::from_str(&fixture("table1.json")).unwrap();
    assert_eq!((t.version, t.generators.as_slice()), (1, &[6, 9, 20][..]));
    let canned = mcnugget::table_expansions();
    let m = mcnugget::monoid();
    assert_eq!(t.rows.len(), 51);
    for row in t.rows {
        assert_eq!(
            canned[&row.x].factorizations, row.factorizations,
            "canned Z({})",
            row.x
        );
        assert_eq!(
            factorizations(&m, row.x).unwrap().factorizations,
            row.factorizations,
            "Z({})",
            row.x
        );
    }
}

#[test]
fn length_table_fixture() {
    let t: Table2 = serde_json::from_str(&fixture("table2.json")).unwrap();
    assert_eq!((t.version, t.generators.as_slice()), (1, &[6, 9, 20][..]));
    let canned = mcnugget::table_length_sets();
    let table = LengthTable::new(&mcnugget::monoid(), 50);
    assert_eq!(t.rows.len(), canned.len());
    for r in t.rows {
        assert_eq!(canned[&r.x], r.row);
        let s = table.length_set(r.x).unwrap();
        assert_eq!(
            (s.lengths.clone(), s.min(), s.max()),
            (r.row.lengths, r.row.min, r.row.max)
        );
    }
}

#[test]
fn table_text_matches_fixture_bytes() {
    assert_eq!(cli(&["table", "1"]), fixture("table1.txt"));
    assert_eq!(cli(&["table", "2"]), fixture("table2.txt"));
}

#[test]
fn unique_factorization_fixture() {
    let u: UniqueFixture = serde_json::from_str(&fixture("unique_4_7_10.json")).unwrap();
    assert_eq!(u.version, 1);
    let m = NumericalMonoid::new(&u.generators).unwrap();
    assert_eq!(unique_factorization_elements(&m, u.limit), u.elements);
    let by_count: Vec<i64> = (1..=u.limit)
        .filter(|&x| factorizations(&m, x).unwrap().len() == 1)
        .collect();
    assert_eq!(by_count, u.elements);
}
