mod common;

use common::{germ, poly2};
use folinv::exactalg::rat::{int, rat};
use folinv::exactalg::{resultant_y, series_substitute, Poly2, Rat, TruncSeries};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in poly2(4, 5), g in poly2(4, 5), h in poly2(4, 5)) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn order_is_additive(f in germ(4, 4), g in germ(4, 4)) {
        let fg = &f * &g;
        prop_assert_eq!(fg.order().unwrap(), f.order().unwrap() + g.order().unwrap());
    }

    #[test]
    fn rationals_stay_normalized(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
        for r in [rat(a, b) + rat(c, d), rat(a, b) * rat(c, d), rat(a, b) - rat(c, d)] {
            prop_assert!(*r.denom() > 0.into());
            prop_assert_eq!(num_gcd(&r), 1);
        }
    }

    #[test]
    fn common_factor_kills_the_resultant(h in germ(2, 3), a in poly2(2, 3), b in poly2(2, 3)) {
        prop_assume!(h.degree_in(1).unwrap_or(0) > 0);
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert!(resultant_y(&(&h * &a), &(&h * &b)).is_zero());
    }

    #[test]
    fn substitution_matches_evaluation(f in poly2(4, 5), c in -3i64..=3) {
        // x = c t, y = t^2 evaluated at t = 1 against f(c, 1)
        let x = TruncSeries::exact(vec![int(0), int(c)]);
        let y = TruncSeries::exact(vec![int(0), int(0), int(1)]);
        let s = series_substitute(&f, &x, &y);
        let total: Rat = s.coeffs().iter().cloned().sum();
        prop_assert_eq!(total, f.eval(&[int(c), int(1)]));
    }
}

fn num_gcd(r: &Rat) -> i64 {
    use num_integer::Integer;
    let g = r.numer().gcd(r.denom());
    if r.numer() == &0.into() {
        1
    } else {
        i64::try_from(g).unwrap()
    }
}

#[test]
fn coprime_pairs_have_nonzero_resultant() {
    let f = &(&Poly2::y() * &Poly2::y()) - &Poly2::monomial(int(1), [3, 0]);
    let g = &Poly2::y() - &Poly2::monomial(int(1), [2, 0]);
    assert!(!resultant_y(&f, &g).is_zero());
}
