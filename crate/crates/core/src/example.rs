//! The worked GF(25), n = 3 example, rebuilt over a genuinely irreducible modulus.
//!
//! The textbook presentation of this example uses GF(5)[x]/(x^2 + 1), but
//! x^2 + 1 = (x - 2)(x + 2) over GF(5). The report records that rejection and
//! proceeds with x^2 + 2, which has no root in GF(5).

use serde::Serialize;

use crate::codes::{construct_code, CodeFamily, DistanceMethod, FamilyKind, LinearCode, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::gf::{make_field, Field};

/// Modulus of the original presentation (reducible).
pub const ORIGINAL_MODULUS: [u64; 3] = [1, 0, 1];
/// Replacement modulus y^2 + 2.
pub const CORRECTED_MODULUS: [u64; 3] = [2, 0, 1];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// `R e_0 + R(e_1 + eta b e_2)`
    I1,
    /// `R (1+b)/2 e_0 + R(e_1 + eta b e_2)`
    I2,
}

impl Variant {
    pub fn kind(self) -> FamilyKind {
        match self {
            Variant::I1 => FamilyKind::TwoNMinus2,
            Variant::I2 => FamilyKind::TwoNMinus3Plus,
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "I1" | "i1" => Ok(Variant::I1),
            "I2" | "i2" => Ok(Variant::I2),
            _ => Err(format!("unknown variant {s:?}; expected I1 or I2")),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExampleReport {
    pub variant: String,
    /// Why the original modulus was replaced.
    pub modulus_note: String,
    pub field: String,
    pub n: usize,
    pub beta: String,
    pub beta_order: u64,
    pub xi: String,
    pub length: usize,
    pub k: usize,
    pub d: usize,
    pub mds: bool,
    pub left_ideal: bool,
    pub generator: Vec<Vec<String>>,
}

/// Diagnostic for the original modulus; always an error.
pub fn original_modulus_diagnostic() -> Error {
    make_field(5, &ORIGINAL_MODULUS).expect_err("x^2 + 1 has the root 2 mod 5")
}

pub fn corrected_field() -> Field {
    make_field(5, &CORRECTED_MODULUS).expect("y^2 + 2 is irreducible over GF(5)")
}

/// Builds the variant over GF(25) = GF(5)[y]/(y^2 + 2) with beta the canonical
/// primitive element, and verifies it by exhaustive enumeration.
pub fn corrected_example(variant: Variant) -> Result<(ExampleReport, LinearCode)> {
    let field = corrected_field();
    let n = 3;
    let code = construct_code(&field, n, CodeFamily::new(variant.kind()))?;
    let c = code.construction().expect("built by construct_code").clone();
    let d = code.distance(DistanceMethod::Exhaustive, DEFAULT_CAP)?;
    let g = code.generator();
    let report = ExampleReport {
        variant: format!("{variant:?}"),
        modulus_note: format!(
            "x^2+1 over GF(5) rejected ({}); using y^2+2",
            original_modulus_diagnostic()
        ),
        field: field.spec(),
        n,
        beta: field.format(c.beta),
        beta_order: field.order(c.beta)?,
        xi: field.format(c.xi),
        length: code.length(),
        k: code.k(),
        d,
        mds: d == code.singleton_bound(),
        left_ideal: code.is_left_ideal(&c.algebra)?,
        generator: (0..g.rows())
            .map(|r| g.row(r).iter().map(|&v| field.format(v)).collect())
            .collect(),
    };
    Ok((report, code))
}
