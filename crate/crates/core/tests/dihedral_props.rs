mod common;

use common::seeded;
use dihedral_mds::{cyclic_idempotent, make_field, DihedralAlgebra, Field, Matrix};

fn algebras() -> Vec<DihedralAlgebra> {
    let f13 = Field::prime(13).unwrap();
    let f25 = make_field(5, &[2, 0, 1]).unwrap();
    vec![
        DihedralAlgebra::new(&f13, 3).unwrap(),
        DihedralAlgebra::new(&f13, 4).unwrap(),
        DihedralAlgebra::new(&Field::prime(31).unwrap(), 5).unwrap(),
        DihedralAlgebra::new(&f25, 3).unwrap(),
        DihedralAlgebra::new(&Field::prime(7).unwrap(), 1).unwrap(),
    ]
}

#[test]
fn associativity_identity_and_anti_automorphism() {
    let mut rng = seeded(1);
    for r in algebras() {
        for _ in 0..60 {
            let (u, v, w) = (
                r.random_element(&mut rng),
                r.random_element(&mut rng),
                r.random_element(&mut rng),
            );
            assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
            assert_eq!(&r.one() * &u, u);
            assert_eq!(&u * &r.one(), u);
            assert_eq!((&u * &v).involution(), &v.involution() * &u.involution());
            assert_eq!(u.involution().involution(), u);
            assert_eq!(u.involution().weight(), u.weight());
        }
    }
}

#[test]
fn distributivity_and_phi_linearity() {
    let mut rng = seeded(2);
    for r in algebras() {
        let f = r.field().clone();
        for _ in 0..60 {
            let (u, v, w) = (
                r.random_element(&mut rng),
                r.random_element(&mut rng),
                r.random_element(&mut rng),
            );
            assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
            let sum: Vec<_> = u.phi().iter().zip(v.phi()).map(|(&a, b)| f.add(a, b)).collect();
            assert_eq!((&u + &v).phi(), sum);
            assert_eq!(r.phi_inv(&u.phi()).unwrap(), u);
            assert_eq!(u.phi().iter().filter(|c| !c.is_zero()).count(), u.weight());
        }
    }
}

#[test]
fn group_table_matches_dihedral_relations() {
    // b^e a^k composed by hand: (b^e1 a^k1)(b^e2 a^k2) = b^{e1+e2} a^{(-1)^{e2} k1 + k2}
    for r in algebras() {
        let n = r.n() as i64;
        for g in r.group_elements() {
            for h in r.group_elements() {
                let sign = if h.flip { -1 } else { 1 };
                let power = (sign * g.power as i64 + h.power as i64).rem_euclid(n) as usize;
                let want = if g.flip != h.flip {
                    r.b_a_pow(power)
                } else {
                    r.a_pow(power)
                };
                assert_eq!(&r.monomial(g) * &r.monomial(h), want, "{g:?} * {h:?}");
            }
        }
    }
}

#[test]
fn left_ideal_examples_gf13() {
    let f = Field::prime(13).unwrap();
    let r = DihedralAlgebra::new(&f, 3).unwrap();
    let e0 = cyclic_idempotent(&r, 0).unwrap();
    let basis = r.left_ideal_basis(std::slice::from_ref(&e0)).unwrap();
    assert_eq!(basis.rows(), 2);
    let expected = Matrix::from_rows(&f, 6, vec![e0.phi(), (&r.b_a_pow(0) * &e0).phi()]).unwrap();
    assert!(basis.same_row_space(&expected).unwrap());

    let e1 = cyclic_idempotent(&r, 1).unwrap();
    let e2 = cyclic_idempotent(&r, 2).unwrap();
    let gen = &e1 + &(&r.b_a_pow(0) * &e2).scale(f.from_int(2));
    let basis = r.left_ideal_basis(std::slice::from_ref(&gen)).unwrap();
    assert_eq!(basis.rows(), 2);
    // {g, b g} spans the ideal
    let expected = Matrix::from_rows(&f, 6, vec![gen.phi(), (&r.b_a_pow(0) * &gen).phi()]).unwrap();
    assert!(basis.same_row_space(&expected).unwrap());
}

#[test]
fn left_ideal_basis_is_a_fixed_point() {
    let mut rng = seeded(4);
    for r in algebras() {
        for _ in 0..20 {
            let gens = vec![r.random_element(&mut rng), r.random_element(&mut rng)];
            let basis = r.left_ideal_basis(&gens).unwrap();
            if basis.rows() == 0 {
                continue;
            }
            let again: Vec<_> = (0..basis.rows()).map(|i| r.phi_inv(basis.row(i)).unwrap()).collect();
            assert_eq!(r.left_ideal_basis(&again).unwrap(), basis);
        }
    }
}
