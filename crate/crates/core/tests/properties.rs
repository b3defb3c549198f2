use num::{BigInt, BigRational, Zero};
use proptest::prelude::*;
use theta_lift::combinatorics::{
    enumerate_orbits, partitions_of, partitions_up_to, theta_lift_diagram, validate_diagram, DualPair, Partition,
};
use theta_lift::degree::{laplace_identity_check, monte_carlo_simplex, simplex_integral, ExactPolynomial};
use theta_lift::repdecomp::{decompose_trivial_lift, lr_coefficient, GradedDecomposition};
use theta_lift::rootdata::dim_gl;

fn pairs() -> Vec<DualPair> {
    vec![
        DualPair::osp(3, 3, 1).unwrap(),
        DualPair::osp(4, 5, 1).unwrap(),
        DualPair::osp(5, 5, 2).unwrap(),
        DualPair::uu(2, 2, 1, 1).unwrap(),
        DualPair::uu(3, 4, 2, 1).unwrap(),
        DualPair::sp_ostar(2, 2, 1).unwrap(),
        DualPair::sp_ostar(3, 3, 2).unwrap(),
        DualPair::sp_ostar(3, 4, 3).unwrap(),
    ]
}

fn partition(max: usize, len: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(move |k| {
        let all = partitions_of(k, len);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn homogeneous(nvars: usize) -> impl Strategy<Value = ExactPolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..4, nvars), -5i64..6, 1i64..4), 1..5).prop_map(move |raw| {
        let vars = ExactPolynomial::names("x", nvars);
        let deg = raw.iter().map(|(e, _, _)| e.iter().sum::<u32>()).max().unwrap_or(0);
        let terms = raw.into_iter().map(|(mut e, a, b)| {
            e[0] += deg - e.iter().sum::<u32>();
            (e, BigRational::new(BigInt::from(a), BigInt::from(b)))
        });
        ExactPolynomial::from_terms(&vars, terms)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lifts_are_valid_and_fill_the_large_member(i in 0usize..8, j in 0usize..64) {
        let pair = pairs()[i];
        let orbits = enumerate_orbits(pair.small_group(), 10_000).unwrap();
        let d = &orbits[j % orbits.len()];
        let lifted = theta_lift_diagram(&pair, d).unwrap();
        prop_assert!(validate_diagram(&lifted).valid);
        prop_assert_eq!(lifted.group(), pair.large_group());
        prop_assert_eq!(Some(lifted.signature()), pair.large_group().signature());
        prop_assert_eq!(lifted.shape()[0], d.shape().first().map_or(1, |l| l + 1));
    }

    #[test]
    fn canonicalization_is_idempotent(i in 0usize..8, j in 0usize..64) {
        let pair = pairs()[i];
        for group in [pair.small_group(), pair.large_group()] {
            let orbits = enumerate_orbits(group, 10_000).unwrap();
            let d = &orbits[j % orbits.len()];
            prop_assert!(d.is_canonical());
            let c = d.canonicalize();
            prop_assert_eq!(&c.canonicalize(), &c);
            let again = theta_lift::combinatorics::SignedDiagram::parse(group, &d.to_string()).unwrap();
            prop_assert_eq!(again.canonicalize(), c);
        }
    }

    #[test]
    fn lr_is_symmetric(mu in partition(4, 3), nu in partition(4, 3)) {
        for lam in partitions_of(mu.size() + nu.size(), 6) {
            prop_assert_eq!(lr_coefficient(&lam, &mu, &nu), lr_coefficient(&lam, &nu, &mu));
        }
    }

    #[test]
    fn lr_conserves_dimension(r in 1usize..5, mu in partition(3, 4), nu in partition(3, 4)) {
        prop_assume!(mu.len() <= r && nu.len() <= r);
        let mut sum = BigInt::zero();
        for lam in partitions_up_to(mu.size() + nu.size(), r).iter().filter(|l| l.size() == mu.size() + nu.size()) {
            sum += lr_coefficient(lam, &mu, &nu) * dim_gl(&lam.padded(r)).unwrap();
        }
        prop_assert_eq!(sum, dim_gl(&mu.padded(r)).unwrap() * dim_gl(&nu.padded(r)).unwrap());
    }

    #[test]
    fn laplace_identity_holds(f in (1usize..4).prop_flat_map(homogeneous)) {
        prop_assert!(laplace_identity_check(&f).unwrap());
    }
}

#[test]
fn monte_carlo_agrees_with_exact_integral() {
    let vars = ExactPolynomial::names("x", 3);
    let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    let cases = [
        vec![(vec![2, 0, 0], q(1, 1)), (vec![0, 1, 1], q(3, 1))],
        vec![(vec![1, 1, 1], q(5, 2))],
        vec![(vec![4, 0, 0], q(1, 1)), (vec![0, 2, 2], q(-1, 3)), (vec![1, 3, 0], q(2, 1))],
    ];
    for (seed, terms) in cases.into_iter().enumerate() {
        let f = ExactPolynomial::from_terms(&vars, terms);
        let mc = monte_carlo_simplex(&f, 20_000, seed as u64 + 11);
        assert!(mc.within, "{mc:?}");
        assert!((mc.exact - num::ToPrimitive::to_f64(&simplex_integral(&f)).unwrap()).abs() < 1e-15);
    }
}

#[test]
fn decompositions_round_trip_through_json() {
    for pair in pairs() {
        let dec = decompose_trivial_lift(&pair, 4).unwrap();
        let back = GradedDecomposition::from_json(&dec.to_json()).unwrap();
        assert_eq!(back, dec, "{pair}");
    }
}
