mod common;

use common::seeded;
use dihedral_mds::{central_primitive_idempotents, cyclic_family, make_field, DihedralAlgebra, Field};

fn algebras() -> Vec<DihedralAlgebra> {
    let mut out: Vec<DihedralAlgebra> = [(13, 3), (31, 5), (41, 5), (29, 7), (43, 7), (13, 6)]
        .into_iter()
        .map(|(q, n)| DihedralAlgebra::new(&Field::prime(q).unwrap(), n).unwrap())
        .collect();
    out.push(DihedralAlgebra::new(&make_field(5, &[2, 0, 1]).unwrap(), 3).unwrap());
    out
}

#[test]
fn cyclic_family_is_complete_and_orthogonal() {
    for r in algebras() {
        let fam = cyclic_family(&r).unwrap();
        assert_eq!(fam.len(), r.n());
        assert_eq!(fam.sum(), r.one());
        for (i, x) in fam.members.iter().enumerate() {
            for (j, y) in fam.members.iter().enumerate() {
                assert_eq!(x * y, if i == j { x.clone() } else { r.zero() }, "e_{i} e_{j}");
            }
        }
    }
}

#[test]
fn eigen_relations() {
    for r in algebras() {
        let f = r.field().clone();
        let fam = cyclic_family(&r).unwrap();
        let b = r.b_a_pow(0);
        for (i, e) in fam.members.iter().enumerate() {
            let be = &b * e;
            for t in 0..r.n() {
                let c = f.pow_u(fam.xi, (i * t) as u64);
                assert_eq!(&r.a_pow(t) * e, e.scale(c));
                assert_eq!(&r.b_a_pow(t) * e, be.scale(c));
            }
            assert_eq!(
                r.left_ideal_basis(std::slice::from_ref(e)).unwrap().rows(),
                2,
                "dim R e_{i}"
            );
        }
    }
}

#[test]
fn central_family_is_central_and_complete() {
    let mut rng = seeded(5);
    for r in algebras() {
        let fam = central_primitive_idempotents(&r).unwrap();
        let n = r.n();
        let want = if n % 2 == 1 { 2 + (n - 1) / 2 } else { 4 + (n - 2) / 2 };
        assert_eq!(fam.len(), want);
        assert_eq!(fam.sum(), r.one());
        for (i, x) in fam.members.iter().enumerate() {
            for (j, y) in fam.members.iter().enumerate() {
                assert_eq!(x * y, if i == j { x.clone() } else { r.zero() });
            }
            for g in [r.a_pow(1), r.b_a_pow(0)] {
                assert_eq!(x * &g, &g * x);
            }
            for _ in 0..10 {
                let u = r.random_element(&mut rng);
                assert_eq!(x * &u, &u * x);
            }
        }
    }
}
