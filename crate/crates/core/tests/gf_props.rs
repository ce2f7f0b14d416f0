mod common;

use common::{has_root, naive_order, primes_below};
use dihedral_mds::{make_field, Error, Field, Fq};
use proptest::prelude::*;

fn fields() -> Vec<Field> {
    vec![
        Field::prime(13).unwrap(),
        Field::prime(43).unwrap(),
        make_field(5, &[2, 0, 1]).unwrap(),
        make_field(3, &[1, 2, 0, 1]).unwrap(),
        make_field(2, &[1, 1, 0, 0, 1]).unwrap(),
        make_field(7, &[1, 0, 1]).unwrap(),
    ]
}

#[test]
fn irreducibility_matches_root_search() {
    // every monic modulus of degree 2 and 3 over p < 50
    for p in primes_below(50) {
        for m in 2..=3usize {
            let count = p.pow(m as u32);
            let step = if count > 5000 { count / 2000 } else { 1 };
            for v in (0..count).step_by(step as usize) {
                let mut poly: Vec<u64> = (0..m).map(|i| (v / p.pow(i as u32)) % p).collect();
                poly.push(1);
                let ok = make_field(p, &poly).is_ok();
                assert_eq!(ok, !has_root(&poly, p), "p={p} poly={poly:?}");
            }
        }
    }
}

#[test]
fn quadratic_residue_constants_rejected_over_gf5() {
    // x^2 + c is reducible iff -c is a square mod 5
    let squares: Vec<u64> = (0..5).map(|x| x * x % 5).collect();
    for c in 0..5u64 {
        let reducible = squares.contains(&((5 - c) % 5));
        assert_eq!(make_field(5, &[c, 0, 1]).is_err(), reducible, "c={c}");
    }
}

#[test]
fn quartic_ladder_matches_brute_force_factorisation() {
    // over GF(2) and GF(3): reducible iff some monic divisor of degree 1 or 2 exists
    for p in [2u64, 3] {
        for v in 0..p.pow(4) {
            let mut f: Vec<u64> = (0..4).map(|i| (v / p.pow(i)) % p).collect();
            f.push(1);
            let mut reducible = false;
            for d in 1..=2u32 {
                for w in 0..p.pow(d) {
                    let mut g: Vec<u64> = (0..d).map(|i| (w / p.pow(i)) % p).collect();
                    g.push(1);
                    if divides(&g, &f, p) {
                        reducible = true;
                    }
                }
            }
            assert_eq!(make_field(p, &f).is_err(), reducible, "p={p} f={f:?}");
        }
    }
}

/// Schoolbook long division remainder test.
fn divides(g: &[u64], f: &[u64], p: u64) -> bool {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        for (i, &c) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - lead * c % p) % p;
        }
        r.pop();
    }
    r.iter().all(|&c| c == 0)
}

#[test]
fn orders_match_naive_iteration() {
    for f in fields() {
        for x in f.elements().skip(1) {
            let t = f.order(x).unwrap();
            assert_eq!(t, naive_order(&f, x));
            assert_eq!((f.q() - 1) % t, 0);
        }
    }
}

#[test]
fn canonical_roots_have_exact_order() {
    for f in fields() {
        let q = f.q();
        for n in (1..q).filter(|n| (q - 1) % n == 0) {
            let r = f.primitive_nth_root(n).unwrap();
            assert_eq!(naive_order(&f, r), n);
        }
        assert!(matches!(f.primitive_nth_root(q), Err(Error::NoSuchRoot { .. })));
    }
}

#[test]
fn generator_is_smallest_primitive_element() {
    for f in fields() {
        let g = f.generator();
        assert_eq!(naive_order(&f, g), f.q() - 1);
        for x in f.elements().skip(1).take_while(|&x| x < g) {
            assert!(naive_order(&f, x) < f.q() - 1);
        }
    }
}

proptest! {
    #[test]
    fn inverse_and_fermat(fi in 0usize..6, raw in 1u64..u64::MAX) {
        let f = &fields()[fi];
        let x = f.elements().nth((raw % (f.q() - 1) + 1) as usize).unwrap();
        prop_assert_eq!(f.mul(x, f.inv(x).unwrap()), Fq::ONE);
        prop_assert_eq!(f.pow_u(x, f.q() - 1), Fq::ONE);
        prop_assert_eq!(f.pow(x, -3).unwrap(), f.inv(f.pow_u(x, 3)).unwrap());
    }

    #[test]
    fn ring_axioms(fi in 0usize..6, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = &fields()[fi];
        let pick = |v: u64| f.elements().nth((v % f.q()) as usize).unwrap();
        let (a, b, c) = (pick(a), pick(b), pick(c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        prop_assert_eq!(f.parse(&f.format(a)).unwrap(), a);
        prop_assert_eq!(f.parse(&f.format_list(a)).unwrap(), a);
    }
}
