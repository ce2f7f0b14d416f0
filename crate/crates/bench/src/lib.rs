//! Fixtures shared by the criterion benchmarks.

use dihedral_mds::{construct_code, CodeFamily, FamilyKind, Field, LinearCode};

/// `(p, n)` pairs from small to moderate code lengths.
pub const CASES: [(u64, usize); 4] = [(13, 3), (31, 5), (29, 7), (43, 7)];

pub fn code(p: u64, n: usize, kind: FamilyKind) -> LinearCode {
    let field = Field::prime(p).expect("prime");
    construct_code(&field, n, CodeFamily::new(kind)).expect("admissible parameters")
}
