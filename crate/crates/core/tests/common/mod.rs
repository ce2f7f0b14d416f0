//! Brute-force oracles kept independent of the library's algorithms.
#![allow(dead_code)]

use dihedral_mds::{Field, Fq, Matrix};

/// Every codeword `m G` for m in F_q^k, computed by plain matrix-vector products.
pub fn brute_min_distance(g: &Matrix) -> usize {
    let f = g.field();
    let q = f.q();
    let k = g.rows();
    let total = q.pow(k as u32);
    let elems: Vec<Fq> = f.elements().collect();
    let mut best = usize::MAX;
    for idx in 1..total {
        let mut v = idx;
        let mut word = vec![Fq::ZERO; g.cols()];
        for r in 0..k {
            let c = elems[(v % q) as usize];
            v /= q;
            for (j, w) in word.iter_mut().enumerate() {
                *w = f.add(*w, f.mul(c, g.get(r, j)));
            }
        }
        let wt = word.iter().filter(|x| !x.is_zero()).count();
        if wt > 0 {
            best = best.min(wt);
        }
    }
    best
}

/// Order by repeated multiplication.
pub fn naive_order(f: &Field, x: Fq) -> u64 {
    let mut acc = x;
    let mut t = 1;
    while acc != Fq::ONE {
        acc = f.mul(acc, x);
        t += 1;
    }
    t
}

/// Evaluates a little-endian polynomial over GF(p) at r.
pub fn eval_mod(poly: &[u64], r: u64, p: u64) -> u64 {
    let mut acc = 0;
    let mut pow = 1;
    for &c in poly {
        acc = (acc + c * pow) % p;
        pow = pow * r % p;
    }
    acc
}

/// Degree <= 3 monic polynomials are irreducible iff rootless.
pub fn has_root(poly: &[u64], p: u64) -> bool {
    (0..p).any(|r| eval_mod(poly, r, p) == 0)
}

pub fn seeded(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

pub fn primes_below(n: u64) -> Vec<u64> {
    (2..n).filter(|&p| (2..p).all(|d| p % d != 0)).collect()
}
