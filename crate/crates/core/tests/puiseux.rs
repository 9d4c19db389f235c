mod common;

use common::{coprime, curve, germ};
use folinv::catalog::{random_piece, BranchKind};
use folinv::exactalg::rat::int;
use folinv::exactalg::Poly2;
use folinv::localring::{intersection_multiplicity, milnor_curve, tjurina_curve};
use folinv::puiseux::{branch_decompose, gap_count, order_along, semigroup, with_branches, Order, Param};
use folinv::{Error, Limits};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cusp_kind() -> impl Strategy<Value = BranchKind> {
    prop::sample::select(vec![BranchKind::Cusp23, BranchKind::Cusp25, BranchKind::Cusp34, BranchKind::Cusp37])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn branch_orders_add_up(seed in any::<u64>(), g in germ(4, 4)) {
        let l = Limits::default();
        let c = curve(seed, 3, 6);
        prop_assume!(coprime(&c.f, &g));
        let i = intersection_multiplicity(&c.f, &g, &l).unwrap();
        let sum = with_branches(&c.f, &l, |bs| {
            let mut s = 0;
            for b in bs {
                match order_along(b, &g, &l)? {
                    Order::Finite(o) => s += o * b.bundle_size as u64,
                    Order::Infinite => return Err(Error::CommonComponent(g.to_string())),
                }
            }
            Ok(s)
        })
        .unwrap();
        prop_assert_eq!(sum, i);
    }

    #[test]
    fn doubling_precision_keeps_the_prefix(seed in any::<u64>()) {
        let c = curve(seed, 2, 5);
        let (Ok(low), Ok(high)) = (branch_decompose(&c.f, 24), branch_decompose(&c.f, 48)) else {
            return Ok(());
        };
        prop_assert_eq!(low.len(), high.len());
        for (a, b) in low.iter().zip(&high) {
            prop_assert_eq!(a.bundle_size, b.bundle_size);
            if let (Param::Explicit { x_t: xa, y_t: ya }, Param::Explicit { x_t: xb, y_t: yb }) = (&a.param, &b.param) {
                for (s, t) in [(xa, xb), (ya, yb)] {
                    let p = s.precision().min(t.precision());
                    for k in 0..p.min(64) {
                        prop_assert_eq!(s.coeff(k), t.coeff(k));
                    }
                }
            }
        }
    }

    #[test]
    fn gaps_are_milnor_minus_tjurina(kind in cusp_kind(), seed in any::<u64>()) {
        let l = Limits::default();
        let f = random_piece(kind, &mut ChaCha8Rng::seed_from_u64(seed));
        let gaps = with_branches(&f, &l, |bs| {
            assert_eq!(bs.len(), 1);
            gap_count(&bs[0], &f)
        })
        .unwrap();
        prop_assert_eq!(gaps, milnor_curve(&f, &l).unwrap() - tjurina_curve(&f, &l).unwrap());
    }

    #[test]
    fn semigroup_starts_with_the_coordinate_orders(
        (p, q) in prop::sample::select(vec![(2u32, 3u32), (2, 5), (2, 7), (3, 4), (3, 5), (3, 7), (4, 5)]),
        extra in prop::collection::vec((0u32..9, 0u32..4, -2i64..=2), 0..3),
    ) {
        // y^p - x^q plus terms of weighted degree above pq
        let mut f = &Poly2::monomial(int(1), [0, p]) - &Poly2::monomial(int(1), [q, 0]);
        for (i, j, c) in extra {
            if j < p && i * p + j * q > p * q {
                f = &f + &Poly2::monomial(int(c), [i, j]);
            }
        }
        let l = Limits::default();
        let (s, ox, oy) = with_branches(&f, &l, |bs| {
            let b = &bs[0];
            Ok((semigroup(b)?, order_along(b, &Poly2::x(), &l)?, order_along(b, &Poly2::y(), &l)?))
        })
        .unwrap();
        prop_assert_eq!(ox, Order::Finite(p as u64));
        prop_assert_eq!(oy, Order::Finite(q as u64));
        prop_assert_eq!(&s.generators[..2], &[p as u64, q as u64][..]);
    }

    #[test]
    fn milnor_and_branch_count_parity(seed in any::<u64>()) {
        let l = Limits::default();
        let c = curve(seed, 3, 6);
        let r: usize = with_branches(&c.f, &l, |bs| Ok(bs.iter().map(|b| b.bundle_size).sum())).unwrap();
        let mu = milnor_curve(&c.f, &l).unwrap();
        prop_assert_eq!((mu + r as u64 - 1) % 2, 0);
    }
}
