//! Closed forms as displayed in print, stored verbatim in a fixture. They
//! are regression probes only; the matrix solve is normative.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::LinearForm;
use crate::rational::{Rational, RationalPoly};

pub const FIXTURE: &str = include_str!("../../fixtures/printed_conic_bundle.tsv");

#[derive(Debug, Clone)]
pub struct Entry {
    pub poly: RationalPoly,
    pub note: String,
}

fn table() -> &'static BTreeMap<(String, String), Entry> {
    static TABLE: OnceLock<BTreeMap<(String, String), Entry>> = OnceLock::new();
    TABLE.get_or_init(|| {
        FIXTURE
            .lines()
            .skip(1)
            .filter(|l| !l.trim().is_empty())
            .map(|line| {
                let cols: Vec<&str> = line.split('\t').collect();
                let coeffs = cols[2]
                    .split(',')
                    .map(|c| c.trim().parse::<Rational>().expect("fixture coefficient"))
                    .collect();
                let key = (cols[0].to_string(), cols[1].to_string());
                let note = cols.get(3).copied().unwrap_or("").to_string();
                (key, Entry { poly: RationalPoly::new(coeffs), note })
            })
            .collect()
    })
}

pub fn entry(quantity: &str, part: &str) -> &'static Entry {
    table()
        .get(&(quantity.to_string(), part.to_string()))
        .unwrap_or_else(|| panic!("fixture has no {quantity}/{part}"))
}

pub fn poly(quantity: &str, part: &str) -> RationalPoly {
    entry(quantity, part).poly.clone()
}

/// A printed form `factor·(x·X + y·Y + C)` with the factor multiplied in.
pub fn linear(quantity: &str) -> LinearForm {
    let factor = match table().get(&(quantity.to_string(), "factor".to_string())) {
        Some(e) => e.poly.coeff(0),
        None => Rational::one(),
    };
    LinearForm {
        x: poly(quantity, "x").scale(&factor),
        y: poly(quantity, "y").scale(&factor),
        c: poly(quantity, "const").scale(&factor),
    }
}

/// The printed right-hand side.
pub fn rhs() -> [LinearForm; 5] {
    ["c1", "c2", "c3", "c4", "c5"].map(linear)
}

/// Printed solution forms, each equal to `v_i·P`.
pub const SOLUTION_NAMES: [&str; 5] = ["b1R", "R2", "Db1", "D2", "b2"];

pub fn solution() -> [LinearForm; 5] {
    SOLUTION_NAMES.map(linear)
}

/// `(numerator, denominator)` of a printed rational function of `d`.
pub fn ratio(quantity: &str) -> (RationalPoly, RationalPoly) {
    (poly(quantity, "num"), poly(quantity, "den"))
}

/// Fixture rows that carry a transcription note.
pub fn notes() -> Vec<(String, String, String)> {
    table()
        .iter()
        .filter(|(_, e)| !e.note.is_empty())
        .map(|((q, p), e)| (q.clone(), p.clone(), e.note.clone()))
        .collect()
}

/// The printed degree bounds for containment in a surface of degree `2k`,
/// listed against `k = 10, 9, …, 3`.
pub const CONTAINED_LIST: [i64; 8] = [64, 58, 54, 48, 44, 40, 40, 276];
