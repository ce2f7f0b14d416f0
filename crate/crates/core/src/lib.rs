//! MDS group codes in the dihedral group algebra F_q D_{2n}.
//!
//! For odd n with 2n | q - 1 the algebra splits as
//! `(F_q + F_q) + M_2(F_q)^{(n-1)/2}`. Explicit primitive idempotents select
//! left ideals whose coordinate images are [2n, 2n-2, 3] and [2n, 2n-3, 4] MDS
//! codes. The crate builds those codes and verifies their parameters with
//! exact arithmetic.
//!
//! - [`gf`]: GF(p^m) arithmetic, orders, canonical roots of unity
//! - [`linalg`]: row reduction, kernels, column ranks
//! - [`dihedral`]: algebra arithmetic, involution, coordinates, left ideals
//! - [`idempotent`]: cyclic and central primitive idempotents
//! - [`wedderburn`]: the decomposition isomorphism and ideal specs
//! - [`codes`]: constructions, distance computation, MDS verdicts

pub mod codes;
pub mod dihedral;
pub mod error;
pub mod example;
pub mod gf;
pub mod idempotent;
pub mod linalg;
pub mod wedderburn;

pub use codes::{
    analyze, construct_code, generator_matrix_presentation, is_mds, mds_verdict, min_distance, sweep, Analysis,
    CodeFamily, CodeJson, DistanceMethod, FamilyKind, LinearCode, MdsVerdict, Style, SweepRow, DEFAULT_CAP,
};
pub use dihedral::{AlgebraElement, DihedralAlgebra, GroupElement};
pub use error::{Error, Result, Witness};
pub use gf::{element_order, make_field, Field, FieldCtx, FieldElement, Fq};
pub use idempotent::{central_primitive_idempotents, cyclic_family, cyclic_idempotent, IdempotentFamily};
pub use linalg::{Matrix, MatrixJson, Rref};
pub use wedderburn::{IdealSpec, Summand, Wedderburn, WedderburnTuple};
