mod common;

use common::*;
use krawtchouk::homogeneous::{b_power, b_product, mu, mu_family, nu, HomPoly};
use krawtchouk::scalar::ratio;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::FileFailurePersistence;

fn base_strategy() -> impl Strategy<Value = krawtchouk::Base> {
    prop::sample::select(BASES.to_vec()).prop_map(base)
}

fn rational_strategy() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    rational_strategy().prop_filter("nonzero", |c| *c != ratio(0, 1))
}

fn fixed_poly(max_degree: usize) -> impl Strategy<Value = HomPoly> {
    (0..=max_degree).prop_flat_map(|r| prop::collection::vec(-5i64..=5, r + 1).prop_map(|v| HomPoly::from_ints(&v)))
}

/// Either constant coefficients, or a multiple of `mu^[k]` so that the
/// parameter shifts in the product are exercised.
fn poly(max_degree: usize) -> impl Strategy<Value = (HomPoly, Option<(usize, i64)>)> {
    prop_oneof![
        fixed_poly(max_degree).prop_map(|p| (p, None)),
        (0..=max_degree, 1i64..=4).prop_map(|(k, a)| (HomPoly::zero(), Some((k, a)))),
    ]
}

fn realize(p: (HomPoly, Option<(usize, i64)>), b: &krawtchouk::Base, c: &BigRational) -> HomPoly {
    match p.1 {
        None => p.0,
        Some((k, a)) => mu_family(k, b, c).scale(&ratio(a, 1)),
    }
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: Some(Box::new(FileFailurePersistence::Off)),
        ..ProptestConfig::default()
    })]

    #[test]
    fn b_leibniz(b in base_strategy(), c in nonzero_rational(), f in poly(5), g in poly(5), phi in 0usize..=4) {
        let (f, g) = (realize(f, &b, &c), realize(g, &b, &c));
        prop_assert_eq!(leibniz_b(&b, &f, &g, phi), Ok(()));
    }

    #[test]
    fn binv_leibniz(b in base_strategy(), c in nonzero_rational(), f in poly(5), g in poly(5), phi in 0usize..=4) {
        let (f, g) = (realize(f, &b, &c), realize(g, &b, &c));
        prop_assert_eq!(leibniz_binv(&b, &f, &g, phi), Ok(()));
    }

    #[test]
    fn distributive_over_equal_degrees(b in base_strategy(), c in nonzero_rational(), f in fixed_poly(4), g in fixed_poly(4), k in 0usize..=4) {
        let h = mu_family(k, &b, &c);
        let g2 = HomPoly::from_coeffs((0..=f.degree()).map(|u| g.coeff(u, 0)).collect());
        let left = b_product(&(&f + &g2), &h, &b);
        let right = &b_product(&f, &h, &b) + &b_product(&g2, &h, &b);
        prop_assert_eq!(same("left distributive", &left, &right, LAMBDAS), Ok(()));
        let h2 = HomPoly::from_coeffs((0..=k).map(|u| g.coeff(u, 0)).collect());
        let left = b_product(&f, &(&h + &h2), &b);
        let right = &b_product(&f, &h, &b) + &b_product(&f, &h2, &b);
        prop_assert_eq!(same("right distributive", &left, &right, LAMBDAS), Ok(()));
    }

    #[test]
    fn scalars_commute(b in base_strategy(), c in nonzero_rational(), a in rational_strategy(), k in 0usize..=5) {
        let g = mu_family(k, &b, &c);
        let alpha = HomPoly::constant(a.clone());
        prop_assert_eq!(same("alpha * g", &b_product(&alpha, &g, &b), &g.scale(&a), LAMBDAS), Ok(()));
        prop_assert_eq!(same("g * alpha", &b_product(&g, &alpha, &b), &g.scale(&a), LAMBDAS), Ok(()));
    }

    #[test]
    fn derivative_closed_forms_hold(b in base_strategy(), c in nonzero_rational(), k in 0usize..=6, phi in 0usize..=6) {
        prop_assume!(phi <= k);
        prop_assert_eq!(derivative_closed_forms(&b, &c, k, phi), Ok(()));
    }

    #[test]
    fn nu_at_one_one(b in base_strategy(), j in 0usize..=6, l in 0usize..=6) {
        prop_assume!(l <= j);
        prop_assert_eq!(nu_evaluation(&b, j, l), Ok(()));
    }

    #[test]
    fn rho_mu_at_one_one(b in base_strategy(), c in nonzero_rational(), rho in fixed_poly(4), s in 0usize..=4, lambda in -2i64..=6) {
        prop_assert_eq!(mu_evaluation(&b, &c, &rho, s, lambda), Ok(()));
    }

    #[test]
    fn delta(b in base_strategy(), c in nonzero_rational(), lambda in -2i64..=8, phi in 0u32..=5, j in 0u32..=5) {
        prop_assert_eq!(delta_lemma(&b, &c, lambda, phi, j), Ok(()));
    }

    #[test]
    fn epsilon(b in base_strategy(), cap in 0i64..=8, phi in 0i64..=5, i in 0i64..=5) {
        prop_assume!(i <= cap && phi <= cap);
        prop_assert_eq!(epsilon_lemma(&b, cap, phi, i), Ok(()));
    }
}

#[test]
fn closed_families_equal_iterated_powers() {
    for bv in BASES {
        let b = base(bv);
        let c = ratio(5, 2);
        for k in 0..=6 {
            assert_eq!(same("mu", &mu_family(k, &b, &c), &b_power(&mu(&b, &c), k, &b), 0..=6), Ok(()));
            assert_eq!(
                same("nu", &krawtchouk::homogeneous::nu_family(k, &b), &b_power(&nu(), k, &b), 0..=6),
                Ok(())
            );
        }
    }
}

#[test]
fn combinatorics_identities() {
    for bv in BASES {
        let b = base(bv);
        for x in 0..=7 {
            for k in 0..=x {
                for i in 0..=x {
                    assert_eq!(symmetry_and_swap(&b, x, k, i), Ok(()));
                }
                assert_eq!(beta_lemma(&b, x, k), Ok(()));
                if k >= 1 {
                    assert_eq!(pascal(&b, x, k), Ok(()));
                }
            }
            assert_eq!(product_sum_expansions(&b, x, &ratio(7, 3)), Ok(()));
            for j in 0..=7 {
                assert_eq!(inversion_delta(&b, x, j), Ok(()));
            }
            for k in 0..=5 {
                assert_eq!(gamma_lemma(&b, &ratio(-2, 3), x - 2, k), Ok(()));
            }
        }
    }
}
