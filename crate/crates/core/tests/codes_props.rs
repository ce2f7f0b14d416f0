mod common;

use common::{brute_min_distance, seeded};
use dihedral_mds::{
    construct_code, generator_matrix_presentation, is_mds, make_field, min_distance, CodeFamily, DihedralAlgebra,
    DistanceMethod, Error, FamilyKind, Field, IdealSpec, LinearCode, Matrix, MdsVerdict, Style, Wedderburn,
    DEFAULT_CAP,
};

fn gf13() -> Field {
    Field::prime(13).unwrap()
}

#[test]
fn trivial_codes() {
    let f = gf13();
    let rep = LinearCode::from_generator(&Matrix::from_ints(&f, &[&[1; 6]]).unwrap());
    assert_eq!(min_distance(&rep, DistanceMethod::Exhaustive, DEFAULT_CAP).unwrap(), 6);
    assert_eq!(min_distance(&rep, DistanceMethod::Dual, DEFAULT_CAP).unwrap(), 6);
    let full = LinearCode::from_generator(&Matrix::identity(&f, 6));
    assert_eq!(min_distance(&full, DistanceMethod::Dual, DEFAULT_CAP).unwrap(), 1);
    assert_eq!(is_mds(&full).unwrap(), MdsVerdict::Mds);
    assert!(matches!(
        min_distance(&full, DistanceMethod::Exhaustive, 1000),
        Err(Error::CapExceeded { .. })
    ));
}

#[test]
fn gf13_worked_codes() {
    let f = gf13();
    let two = f.from_int(2);
    let c = construct_code(&f, 3, CodeFamily::new(FamilyKind::TwoNMinus2).with_beta(two)).unwrap();
    assert_eq!(c.k(), 4);
    assert_eq!(min_distance(&c, DistanceMethod::Exhaustive, DEFAULT_CAP).unwrap(), 3);
    assert_eq!(min_distance(&c, DistanceMethod::Dual, DEFAULT_CAP).unwrap(), 3);
    assert_eq!(brute_min_distance(c.generator()), 3);
    assert_eq!(is_mds(&c).unwrap(), MdsVerdict::Mds);

    let paper = generator_matrix_presentation(&c, Style::Paper).unwrap();
    let want = Matrix::from_ints(
        &f,
        &[
            &[1, 1, 1, 0, 0, 0],
            &[0, 0, 0, 1, 1, 1],
            &[1, 9, 3, 2, 6, 5],
            &[2, 6, 5, 1, 9, 3],
        ],
    )
    .unwrap();
    assert_eq!(paper, want);
    assert!(paper.same_row_space(c.generator()).unwrap());

    let plus = construct_code(&f, 3, CodeFamily::new(FamilyKind::TwoNMinus3Plus).with_beta(two)).unwrap();
    assert_eq!(plus.k(), 3);
    assert_eq!(is_mds(&plus).unwrap(), MdsVerdict::Mds);
    assert_eq!(plus.distance(DistanceMethod::Exhaustive, DEFAULT_CAP).unwrap(), 4);

    let minus = construct_code(&f, 3, CodeFamily::new(FamilyKind::TwoNMinus3Minus).with_beta(two)).unwrap();
    let paper = generator_matrix_presentation(&minus, Style::Paper).unwrap();
    let first: Vec<u64> = paper.row(0).iter().map(|&v| f.coeffs(v)[0]).collect();
    assert_eq!(first, vec![1, 1, 1, 12, 12, 12]);

    let err = construct_code(&f, 3, CodeFamily::new(FamilyKind::TwoNMinus2).with_beta(f.from_int(3))).unwrap_err();
    assert!(matches!(err, Error::BadOrder { order: 3, bound: 6 }));
    assert_eq!(err.to_string(), "ord(beta)=3 <= 2n=6");
}

#[test]
fn family_gates() {
    let f = gf13();
    let kind = |k| CodeFamily::new(k);
    assert!(matches!(
        construct_code(&f, 4, kind(FamilyKind::TwoNMinus2)),
        Err(Error::EvenN(4))
    ));
    assert!(matches!(
        construct_code(&f, 1, kind(FamilyKind::TwoNMinus2)),
        Err(Error::NTooSmall(1))
    ));
    assert!(matches!(
        construct_code(&f, 3, kind(FamilyKind::TwoNMinus2).with_s(2)),
        Err(Error::NotCoprime { .. })
    ));
    assert!(matches!(
        construct_code(&f, 3, kind(FamilyKind::TwoNMinus3Plus).with_beta(f.from_int(3))),
        Err(Error::BetaIsNthRoot { n: 3 })
    ));
    assert!(matches!(
        construct_code(&f, 3, kind(FamilyKind::TwoNMinus3Plus).with_beta(f.from_int(0))),
        Err(Error::ZeroBeta)
    ));
    assert!(matches!(
        construct_code(&f, 5, kind(FamilyKind::TwoNMinus2)),
        Err(Error::NoSuchRoot { .. })
    ));
}

#[test]
fn constructed_codes_are_ideals_with_expected_parameters() {
    let fields = [
        (gf13(), 3),
        (make_field(5, &[2, 0, 1]).unwrap(), 3),
        (Field::prime(31).unwrap(), 5),
        (Field::prime(29).unwrap(), 7),
    ];
    for (f, n) in fields {
        let alg = DihedralAlgebra::new(&f, n).unwrap();
        for s in 1..=(n - 1) / 2 {
            for kind in FamilyKind::ALL {
                let c = construct_code(&f, n, CodeFamily::new(kind).with_s(s)).unwrap();
                assert_eq!(c.k(), kind.expected_dimension(n));
                assert!(c.is_left_ideal(&alg).unwrap());
                let d = min_distance(&c, DistanceMethod::Dual, DEFAULT_CAP).unwrap();
                assert_eq!(d, kind.expected_distance(), "{kind} q={} n={n} s={s}", f.q());
                assert!(d <= c.singleton_bound());
                let paper = generator_matrix_presentation(&c, Style::Paper).unwrap();
                assert_eq!(paper.vstack(c.generator()).unwrap().rank(), c.k());
            }
        }
    }
}

#[test]
fn distance_methods_agree_with_brute_force() {
    let mut rng = seeded(9);
    let fields = [gf13(), Field::prime(7).unwrap(), make_field(5, &[2, 0, 1]).unwrap()];
    for f in fields {
        let alg = DihedralAlgebra::new(&f, 3).unwrap();
        let w = Wedderburn::new(&alg).unwrap();
        let mut checked = 0;
        while checked < 25 {
            let spec = IdealSpec::random(&f, 3, &mut rng);
            let g = w.code_from_ideal_spec(&spec).unwrap();
            if g.rows() == 0 || (f.q() as f64).powi(g.rows() as i32) > 2e5 {
                continue;
            }
            let code = LinearCode::from_generator(&g);
            let ex = min_distance(&code, DistanceMethod::Exhaustive, DEFAULT_CAP).unwrap();
            let dual = min_distance(&code, DistanceMethod::Dual, DEFAULT_CAP).unwrap();
            let auto = min_distance(&code, DistanceMethod::Auto, DEFAULT_CAP).unwrap();
            assert_eq!(ex, dual, "{spec:?}");
            assert_eq!(ex, auto);
            if f.q() < 25 || g.rows() <= 3 {
                assert_eq!(ex, brute_min_distance(&g));
            }
            assert!(ex <= code.singleton_bound());
            checked += 1;
        }
    }
}

#[test]
fn json_round_trip() {
    let f = make_field(5, &[2, 0, 1]).unwrap();
    let c = construct_code(&f, 3, CodeFamily::new(FamilyKind::TwoNMinus3Minus)).unwrap();
    for style in [Style::Rref, Style::Paper] {
        let doc = c.to_json(style).unwrap();
        let text = serde_json::to_string(&doc).unwrap();
        let back = LinearCode::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back.generator(), c.generator());
    }
    let hand = LinearCode::from_generator(c.generator());
    assert!(matches!(
        generator_matrix_presentation(&hand, Style::Paper),
        Err(Error::UnsupportedStyle)
    ));
}
