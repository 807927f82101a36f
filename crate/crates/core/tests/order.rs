use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use skein_mcg::order::{
    certify, diagonal, excluded_r_set, group_closure, infinite_order_word, m_matrix_at,
    projective_order_2x2, projective_order_general, trace_of_m_symbolic, verify_certificate,
    CertifyOptions, ClosureResult, OrderCertificate, Verdict, Witness,
};
use skein_mcg::{
    BraidWord, CyclotomicField, CyclotomicScalar, Matrix, RootOfUnityChoice, Scalar, SkeinModule,
    SkeinParams,
};

fn root(n: u64) -> RootOfUnityChoice {
    RootOfUnityChoice::new(n, 1).unwrap()
}

/// Least k <= bound with g^k scalar, by repeated multiplication.
fn brute_force_order(g: &Matrix<CyclotomicScalar>, bound: u64) -> Option<u64> {
    let mut p = g.clone();
    for k in 1..=bound {
        if p.as_scalar().is_some() {
            return Some(k);
        }
        p = p.mul(g);
    }
    None
}

fn order_of(cert: &OrderCertificate) -> Option<u64> {
    match cert.verdict {
        Verdict::Finite {
            projective_order, ..
        } => Some(projective_order),
        _ => None,
    }
}

#[test]
fn symbolic_trace_matches_matrix() {
    let module = SkeinModule::new(2).unwrap();
    let m = module
        .word_matrix(&SkeinParams::symbolic(), &infinite_order_word(2))
        .unwrap();
    assert_eq!(m.trace(), trace_of_m_symbolic());
}

#[test]
fn parabolic_at_cube_root_q() {
    let cert = projective_order_2x2(&m_matrix_at(root(12))).unwrap();
    assert_eq!(cert.witness(), Some(&Witness::ParabolicTrace { trace: 2 }));
    verify_certificate(&m_matrix_at(root(12)), &cert).unwrap();
}

#[test]
fn trace_conjugate_at_fifth_root_q() {
    let g = m_matrix_at(root(20));
    let cert = projective_order_2x2(&g).unwrap();
    let Some(Witness::TraceConjugate {
        trace,
        excess,
        lower_bound,
        ..
    }) = cert.witness()
    else {
        panic!("expected a trace witness, got {cert:?}");
    };
    // t' = 2 + sqrt 5
    let two = trace.field().integer(2);
    let s = trace - &two;
    assert_eq!(&s * &s, trace.field().integer(5));
    assert_eq!(*excess, &(trace * trace) - &trace.field().integer(4));
    assert!(*lower_bound > BigRational::from_integer(BigInt::from(0)));
    verify_certificate(&g, &cert).unwrap();
}

#[test]
fn excluded_orders_of_q() {
    let expected: BTreeSet<u64> = [4, 6, 10].into();
    assert_eq!(excluded_r_set(40).unwrap(), expected);
    assert!(excluded_r_set(2).is_err());
}

#[test]
fn m_has_finite_order_for_excluded_r() {
    for r in [4u64, 6, 10] {
        let g = m_matrix_at(root(4 * r));
        let cert = projective_order_2x2(&g).unwrap();
        let k = order_of(&cert).expect("finite");
        assert_eq!(Some(k), brute_force_order(&g, 200), "r = {r}");
        verify_certificate(&g, &cert).unwrap();
        // the eigenvalue route agrees
        let gen = projective_order_general(&g, &CertifyOptions::default()).unwrap();
        assert_eq!(order_of(&gen), Some(k));
    }
}

#[test]
fn m_is_infinite_at_canonical_roots() {
    for m in 6..=12 {
        let choice = skein_mcg::scalar::canonical_root_for_m(m).unwrap();
        let g = m_matrix_at(choice);
        let cert = projective_order_2x2(&g).unwrap();
        assert!(cert.is_infinite(), "m = {m}: {cert:?}");
        verify_certificate(&g, &cert).unwrap();
        let gen = projective_order_general(&g, &CertifyOptions::default()).unwrap();
        assert!(gen.is_infinite(), "m = {m}: {gen:?}");
        verify_certificate(&g, &gen).unwrap();
    }
}

#[test]
fn diagonal_examples() {
    let f8 = CyclotomicField::new(8);
    let g = diagonal(&[f8.zeta_pow(1), f8.zeta_pow(-1)]);
    let cert = projective_order_2x2(&g).unwrap();
    assert_eq!(order_of(&cert), Some(4));
    assert_eq!(order_of(&cert), brute_force_order(&g, 16));
    verify_certificate(&g, &cert).unwrap();

    let f3 = CyclotomicField::new(3);
    let g = Matrix::scalar(3, &f3.zeta_pow(1));
    let cert = certify(&g, &CertifyOptions::default()).unwrap();
    assert_eq!(order_of(&cert), Some(1));

    let half = f3.rational(BigRational::new(1.into(), 2.into()));
    let g = diagonal(&[f3.integer(2), half]);
    let cert = projective_order_2x2(&g).unwrap();
    assert!(matches!(
        cert.witness(),
        Some(Witness::TraceConjugate { .. })
    ));
    let cert = projective_order_general(&g, &CertifyOptions::default()).unwrap();
    let Some(Witness::NonCyclotomicRatio { residual }) = cert.witness() else {
        panic!("{cert:?}");
    };
    // mu = 4 or 1/4 gives 4x^2 - 17x + 4; the norm from Q(zeta_3) squares it
    assert_eq!(
        residual.to_string(),
        "16*x^4 - 136*x^3 + 321*x^2 - 136*x + 16"
    );
    verify_certificate(&g, &cert).unwrap();

    let f7 = CyclotomicField::new(7);
    let g = diagonal(&[f7.zeta_pow(1), f7.zeta_pow(2), f7.zeta_pow(4)]);
    let cert = certify(&g, &CertifyOptions::default()).unwrap();
    assert_eq!(order_of(&cert), Some(7));
    assert_eq!(brute_force_order(&g, 50), Some(7));
}

#[test]
fn non_semisimple_is_unipotent_power() {
    let f3 = CyclotomicField::new(3);
    let z = f3.zeta_pow(1);
    let (o, l) = (f3.zero(), f3.one());
    let g = Matrix::from_rows(vec![
        vec![z.clone(), l.clone(), o.clone()],
        vec![o.clone(), z.clone(), o.clone()],
        vec![o.clone(), o.clone(), l.clone()],
    ]);
    let cert = certify(&g, &CertifyOptions::default()).unwrap();
    assert!(
        matches!(cert.witness(), Some(Witness::UnipotentPower { .. })),
        "{cert:?}"
    );
    verify_certificate(&g, &cert).unwrap();

    let j = Matrix::from_rows(vec![vec![l.clone(), l.clone()], vec![o.clone(), l.clone()]]);
    let cert = projective_order_2x2(&j).unwrap();
    assert_eq!(cert.witness(), Some(&Witness::ParabolicTrace { trace: 2 }));
}

#[test]
fn rejects_bad_input() {
    let f5 = CyclotomicField::new(5);
    let g = diagonal(&[f5.integer(2), f5.integer(1)]);
    assert!(projective_order_2x2(&g).is_err());
    let s = diagonal(&[f5.integer(0), f5.integer(1)]);
    assert!(projective_order_general(&s, &CertifyOptions::default()).is_err());
    let tight = CertifyOptions {
        max_norm_degree: 1,
        ..CertifyOptions::default()
    };
    let cert = projective_order_general(&g, &tight).unwrap();
    assert!(matches!(cert.verdict, Verdict::Inconclusive { .. }));
}

#[test]
fn tampered_certificates_fail() {
    let g = m_matrix_at(root(40));
    let cert = projective_order_general(&g, &CertifyOptions::default()).unwrap();
    let Verdict::Finite {
        projective_order,
        scalar,
    } = cert.verdict.clone()
    else {
        panic!()
    };
    let mut bad = cert.clone();
    bad.verdict = Verdict::Finite {
        projective_order: projective_order * 2,
        scalar: scalar.clone(),
    };
    assert!(verify_certificate(&g, &bad).is_err());
    bad.verdict = Verdict::Finite {
        projective_order,
        scalar: scalar.neg(),
    };
    assert!(verify_certificate(&g, &bad).is_err());
    bad.verdict = Verdict::Infinite(Witness::ParabolicTrace { trace: 2 });
    assert!(verify_certificate(&g, &bad).is_err());
    bad.verdict = Verdict::Infinite(Witness::UnipotentPower {
        exponent: 2 * projective_order,
    });
    assert!(verify_certificate(&g, &bad).is_err());

    let h = m_matrix_at(root(20));
    let mut cert = projective_order_2x2(&h).unwrap();
    if let Verdict::Infinite(Witness::TraceConjugate { lower_bound, .. }) = &mut cert.verdict {
        *lower_bound = BigRational::from_integer(BigInt::from(100));
    }
    assert!(verify_certificate(&h, &cert).is_err());
}

#[test]
fn general_certifier_on_six_points() {
    let module = SkeinModule::new(3).unwrap();
    for m in [6i64, 7] {
        let choice = skein_mcg::scalar::canonical_root_for_m(m).unwrap();
        let g = module
            .word_matrix(&SkeinParams::at_root(choice), &infinite_order_word(3))
            .unwrap();
        let cert = certify(&g, &CertifyOptions::default()).unwrap();
        assert!(cert.is_infinite(), "m = {m}: {cert:?}");
        verify_certificate(&g, &cert).unwrap();
    }
}

fn generators(choice: RootOfUnityChoice) -> Vec<Matrix<CyclotomicScalar>> {
    let module = SkeinModule::new(2).unwrap();
    let p = SkeinParams::at_root(choice);
    (1..=3)
        .map(|i| {
            module
                .word_matrix(&p, &BraidWord::new(2, vec![i]).unwrap())
                .unwrap()
        })
        .collect()
}

#[test]
fn closure_sizes() {
    let gens = generators(root(40));
    assert_eq!(
        group_closure(&gens, 10_000).unwrap(),
        ClosureResult::Finite { order: 60 }
    );
    let mut rev = gens.clone();
    rev.reverse();
    assert_eq!(
        group_closure(&rev, 10_000).unwrap(),
        ClosureResult::Finite { order: 60 }
    );
    assert_eq!(
        group_closure(&generators(root(12)), 10_000).unwrap(),
        ClosureResult::CapExceeded { cap: 10_000 }
    );
    assert!(group_closure(&[], 10).is_err());
}

fn arb_word() -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(
        prop_oneof![Just(1), Just(-1), Just(2), Just(-2), Just(3), Just(-3)],
        1..8,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn two_routes_agree(letters in arb_word(), n in prop::sample::select(vec![16u64, 20, 24, 28, 40])) {
        let module = SkeinModule::new(2).unwrap();
        let g = module
            .word_matrix(&SkeinParams::at_root(root(n)), &BraidWord::new(2, letters).unwrap())
            .unwrap();
        let a = certify(&g, &CertifyOptions::default()).unwrap();
        let b = projective_order_general(&g, &CertifyOptions::default()).unwrap();
        prop_assert_eq!(a.is_infinite(), b.is_infinite());
        prop_assert_eq!(order_of(&a), order_of(&b));
        if let Some(k) = order_of(&a) {
            prop_assert_eq!(brute_force_order(&g, k), Some(k));
        }
        verify_certificate(&g, &a).unwrap();
        verify_certificate(&g, &b).unwrap();
    }
}
