//! Primitive idempotents of F_q C_n and central primitive idempotents of F_q D_{2n}.

use crate::dihedral::{AlgebraElement, DihedralAlgebra};
use crate::error::{Error, Result};
use crate::gf::Fq;

/// A complete family of orthogonal idempotents together with the root used to build it.
#[derive(Debug, Clone)]
pub struct IdempotentFamily {
    pub algebra: DihedralAlgebra,
    /// Canonical primitive n-th root of unity.
    pub xi: Fq,
    pub members: Vec<AlgebraElement>,
}

impl IdempotentFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Sum of all members (the identity for a complete family).
    pub fn sum(&self) -> AlgebraElement {
        self.members.iter().fold(self.algebra.zero(), |acc, e| &acc + e)
    }
}

/// `e_i = n^{-1} sum_{j=0}^{n-1} xi^{-ij} a^j`, with `xi` the canonical primitive n-th root.
pub fn cyclic_idempotent(alg: &DihedralAlgebra, i: usize) -> Result<AlgebraElement> {
    let f = alg.field();
    let n = alg.n();
    let xi = f.primitive_nth_root(n as u64)?;
    Ok(cyclic_with_root(alg, xi, i % n))
}

fn cyclic_with_root(alg: &DihedralAlgebra, xi: Fq, i: usize) -> AlgebraElement {
    let f = alg.field();
    let n = alg.n();
    let n_inv = f.inv(f.from_int(n as i64)).expect("p does not divide n");
    let xi_inv_i = f.pow_u(f.inv(xi).expect("roots of unity are nonzero"), i as u64);
    let mut alpha = Vec::with_capacity(n);
    let mut c = n_inv;
    for _ in 0..n {
        alpha.push(c);
        c = f.mul(c, xi_inv_i);
    }
    alg.element(alpha, vec![Fq::ZERO; n]).expect("lengths match")
}

/// `e_0, .., e_{n-1}`.
pub fn cyclic_family(alg: &DihedralAlgebra) -> Result<IdempotentFamily> {
    let xi = alg.field().primitive_nth_root(alg.n() as u64)?;
    Ok(IdempotentFamily {
        algebra: alg.clone(),
        xi,
        members: (0..alg.n()).map(|i| cyclic_with_root(alg, xi, i)).collect(),
    })
}

/// `(1+b)/2 * e`
pub fn plus_half(e: &AlgebraElement) -> AlgebraElement {
    half_projector(e, false)
}

/// `(1-b)/2 * e`
pub fn minus_half(e: &AlgebraElement) -> AlgebraElement {
    half_projector(e, true)
}

fn half_projector(e: &AlgebraElement, negate_b: bool) -> AlgebraElement {
    let alg = e.algebra();
    let f = alg.field();
    let half = f.inv(f.from_int(2)).expect("q is odd");
    let b = alg.b_a_pow(0);
    let factor = if negate_b { &alg.one() - &b } else { &alg.one() + &b };
    &factor.scale(half) * e
}

/// Central primitive idempotents of F_q D_{2n}.
///
/// n odd: `(1+b)/2 e_0, (1-b)/2 e_0, e_j + e_{n-j}` for `1 <= j <= (n-1)/2`.
/// n even: additionally `(1+b)/2 e_{n/2}, (1-b)/2 e_{n/2}`, and `j < n/2`.
pub fn central_primitive_idempotents(alg: &DihedralAlgebra) -> Result<IdempotentFamily> {
    let n = alg.n();
    let q = alg.field().q();
    if q.is_multiple_of(2) {
        return Err(Error::CharDividesOrder {
            p: 2,
            order: 2 * n as u64,
        });
    }
    let cyclic = cyclic_family(alg)?;
    let e = &cyclic.members;
    let mut members = vec![plus_half(&e[0]), minus_half(&e[0])];
    let pairs = if n % 2 == 1 {
        (n - 1) / 2
    } else {
        members.push(plus_half(&e[n / 2]));
        members.push(minus_half(&e[n / 2]));
        n / 2 - 1
    };
    members.extend((1..=pairs).map(|j| &e[j] + &e[n - j]));
    Ok(IdempotentFamily {
        algebra: alg.clone(),
        xi: cyclic.xi,
        members,
    })
}
