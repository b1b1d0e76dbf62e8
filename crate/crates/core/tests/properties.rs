//! Randomized algebraic invariants of the series kernel and the branch
//! toolkit. Equalities are exact; series are compared on the overlap of
//! their tracked precisions (the claims themselves differ between
//! algebraically equal routes, e.g. when an addition cancels a valuation).

use proptest::prelude::*;

use lagver_core::puiseux::power_sum_table;
use lagver_core::{
    elementary_symmetric, gessel_phi_expansion, log_h_over_q, power_sum, solve_ramified_branch,
    solve_unramified, LaurentPolynomial, LaurentSeries, PowerSeries, RSpec, Rat,
};

fn assert_agree(a: &LaurentSeries, b: &LaurentSeries) {
    let prec = a.precision().min(b.precision());
    let lo = a.valuation().min(b.valuation());
    for n in lo..prec {
        assert_eq!(
            a.coeff(n).unwrap(),
            b.coeff(n).unwrap(),
            "mismatch at z^{n}\n  a = {}\n  b = {}",
            a.to_pretty("z"),
            b.to_pretty("z")
        );
    }
}

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rat::new(n, d))
}

fn laurent_strategy() -> impl Strategy<Value = LaurentSeries> {
    (-3i64..=3, prop::collection::vec(rat_strategy(), 1..10))
        .prop_map(|(v, cs)| LaurentSeries::new(v, cs))
}

fn unit_strategy() -> impl Strategy<Value = LaurentSeries> {
    // valuation 0, constant term 1: the log/pow domain
    prop::collection::vec(rat_strategy(), 1..10).prop_map(|mut cs| {
        cs[0] = Rat::one();
        LaurentSeries::new(0, cs)
    })
}

fn nonzero_laurent_strategy() -> impl Strategy<Value = LaurentSeries> {
    laurent_strategy().prop_filter("nonzero", |s| !s.is_zero())
}

fn inner_strategy() -> impl Strategy<Value = PowerSeries> {
    // zero constant term, nonzero linear coefficient
    prop::collection::vec(rat_strategy(), 2..8).prop_map(|mut cs| {
        cs[0] = Rat::zero();
        if cs[1].is_zero() {
            cs[1] = Rat::one();
        }
        PowerSeries::new(cs)
    })
}

fn rspec_strategy(min_deg: usize, max_deg: usize) -> impl Strategy<Value = RSpec> {
    prop::collection::vec(-3i64..=3, min_deg..=max_deg).prop_map(|mut tail| {
        if tail.last().is_some_and(|&c| c == 0) {
            *tail.last_mut().unwrap() = 1;
        }
        let mut cs = vec![Rat::one()];
        cs.extend(tail.into_iter().map(Rat::from_int));
        RSpec::new(cs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in laurent_strategy(), b in laurent_strategy(), c in laurent_strategy()) {
        assert_agree(&a.add(&b), &b.add(&a));
        assert_agree(&a.mul(&b), &b.mul(&a));
        assert_agree(&a.add(&b).add(&c), &a.add(&b.add(&c)));
        assert_agree(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c)));
        assert_agree(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn invert_round_trip(a in nonzero_laurent_strategy()) {
        let inv = a.invert().unwrap();
        let prod = a.mul(&inv);
        let one = LaurentSeries::constant(Rat::one(), prod.precision());
        assert_agree(&prod, &one);
    }

    #[test]
    fn exp_log_round_trip(a in unit_strategy()) {
        let l = a.log().unwrap();
        let back = l.exp().unwrap().to_laurent();
        assert_agree(&back, &a);
    }

    #[test]
    fn pow_round_trips(a in unit_strategy(), e in 1i64..=4, num in -5i64..=5, den in 1i64..=3) {
        let root = a.to_power_series().unwrap().pow_rational(&Rat::new(1, e)).unwrap();
        let back = root.to_laurent().pow_i64(e).unwrap();
        assert_agree(&back, &a);

        let r = Rat::new(num, den);
        let p = a.to_power_series().unwrap().pow_rational(&r).unwrap();
        let pm = a.to_power_series().unwrap().pow_rational(&(-r.clone())).unwrap();
        let prod = p.mul(&pm).to_laurent();
        assert_agree(&prod, &LaurentSeries::constant(Rat::one(), prod.precision()));
    }

    #[test]
    fn pow_integer_matches_repeated_multiplication(a in unit_strategy(), k in 1i64..=4) {
        let via_pow = a.to_power_series().unwrap().pow_rational(&Rat::from_int(k)).unwrap();
        let direct = a.pow_i64(k).unwrap();
        assert_agree(&via_pow.to_laurent(), &direct);
    }

    #[test]
    fn compose_is_a_homomorphism(a in laurent_strategy(), b in laurent_strategy(), c in inner_strategy()) {
        let lhs = a.mul(&b).compose(&c).unwrap();
        let rhs = a.compose(&c).unwrap().mul(&b.compose(&c).unwrap());
        assert_agree(&lhs, &rhs);
    }

    #[test]
    fn reads_past_precision_always_error(a in laurent_strategy(), k in 0i64..4) {
        prop_assert!(a.coeff(a.precision() + k).is_err());
        prop_assert!(a.coeff(a.precision() - 1).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn two_branch_oracle(r in rspec_strategy(2, 5)) {
        // e = 2: zeta = -1 is rational, so the branches g(t), g(-t) can be
        // built directly and every symmetric quantity recomputed from them.
        let e = 2u32;
        let n_t = 24;
        let b = solve_ramified_branch(&r, e, n_t).unwrap();
        let g = b.branch_series().to_laurent();
        let g_neg = LaurentSeries::new(
            1,
            (1..n_t)
                .map(|k| {
                    let c = g.coeff(k).unwrap();
                    if k % 2 == 0 { c } else { -c }
                })
                .collect(),
        );
        for m in 1..=4i64 {
            let direct = g.pow_i64(m).unwrap().add(&g_neg.pow_i64(m).unwrap());
            // odd t-powers must cancel; even ones map to q^{s/2}
            let pm = power_sum(&b, m);
            for s in direct.valuation()..direct.precision() {
                let c = direct.coeff(s).unwrap();
                if s % 2 == 1 {
                    prop_assert_eq!(c, Rat::zero(), "odd power t^{} survived", s);
                } else if s / 2 < pm.precision() {
                    prop_assert_eq!(c, pm.coeff(s / 2).unwrap(), "p_{} at q^{}", m, s / 2);
                }
            }
        }
        // e_1 = g + g(-t) restricted, e_2 = g * g(-t) restricted
        let es = elementary_symmetric(&b);
        let direct_e1 = g.add(&g_neg);
        let direct_e2 = g.mul(&g_neg);
        for (k, direct) in [(0usize, direct_e1), (1usize, direct_e2)] {
            for s in (0..direct.precision()).step_by(2) {
                if s / 2 < es[k].precision() {
                    prop_assert_eq!(direct.coeff(s).unwrap(), es[k].coeff(s / 2).unwrap());
                }
            }
        }
    }

    #[test]
    fn newton_identities_invert(r in rspec_strategy(1, 4), e in 1u32..=3) {
        // recompute p_m from e_1..e_e by Newton's recurrence and compare
        let n_t = (e as i64) * 12;
        let b = solve_ramified_branch(&r, e, n_t).unwrap();
        let ps = power_sum_table(&b, 2 * e as i64);
        let es = elementary_symmetric(&b);
        let ee = e as usize;
        for m in 1..=2 * ee {
            let mut acc = LaurentSeries::zero(ps[m - 1].precision());
            for i in 1..=m.min(ee) {
                if i == m {
                    break;
                }
                let term = es[i - 1].mul(&ps[m - i - 1]);
                acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
            }
            if m <= ee {
                let me = es[m - 1].scalar_mul(&Rat::from_int(m as i64));
                acc = if m % 2 == 1 { acc.add(&me) } else { acc.sub(&me) };
            }
            assert_agree(&acc, &ps[m - 1]);
        }
    }

    #[test]
    fn gessel_matches_composition_unramified(
        r in rspec_strategy(1, 4),
        v in -3i64..=0,
        cs in prop::collection::vec(-3i64..=3, 1..6),
    ) {
        let mut coeffs: Vec<Rat> = cs.into_iter().map(Rat::from_int).collect();
        if coeffs.iter().all(Rat::is_zero) {
            coeffs[0] = Rat::one();
        }
        let phi = LaurentPolynomial::new(v, coeffs);
        let n = 6;
        let s = gessel_phi_expansion(&phi, &r, 1, n).unwrap();
        let h = solve_unramified(&r, n + 8);
        let direct = phi.to_series(n + 1).compose(&h).unwrap();
        for k in phi.valuation().min(0)..=n {
            prop_assert_eq!(s.coeff(k).unwrap(), direct.coeff(k).unwrap(), "q^{}", k);
        }
    }

    #[test]
    fn gessel_monomials_match_power_sums(r in rspec_strategy(1, 4), e in 1u32..=3) {
        let n = 5i64;
        let b = solve_ramified_branch(&r, e, (e as i64) * (n + e as i64 + 2)).unwrap();
        for m in 1..=2 * e as i64 {
            let phi = LaurentPolynomial::monomial(Rat::one(), m);
            let s = gessel_phi_expansion(&phi, &r, e, n).unwrap();
            let pm = power_sum(&b, m);
            for k in 0..=n {
                prop_assert_eq!(s.coeff(k).unwrap(), pm.coeff(k).unwrap(), "e={} m={} q^{}", e, m, k);
            }
        }
    }

    #[test]
    fn branch_product_sign_cross_check(r in rspec_strategy(1, 4), e in 1u32..=3) {
        // e_e = (-1)^{e+1} q exp(log_h_over_q): the product of the branch
        // leading coefficients is rho^e prod_k zeta^k = (-1)^{e+1} r_0.
        let n = 8i64;
        let b = solve_ramified_branch(&r, e, (e as i64) * (n + e as i64 + 2)).unwrap();
        let es = elementary_symmetric(&b);
        let ee = &es[e as usize - 1];
        let sign = if e % 2 == 1 { Rat::one() } else { Rat::from_int(-1) };
        let predicted = log_h_over_q(&r, e, n)
            .exp()
            .unwrap()
            .to_laurent()
            .shift(1)
            .scalar_mul(&sign);
        assert_agree(&ee.truncated(n + 1), &predicted.truncated(n + 1));
    }
}
