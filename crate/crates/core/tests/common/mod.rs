#![allow(dead_code)]

use folinv::catalog::{random_curve, CatalogCurve};
use folinv::exactalg::rat::int;
use folinv::exactalg::{gcd2, Poly2, Rat};
use folinv::exactalg::gcd::is_local_unit;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Small polynomials in `x, y`: up to `terms` terms of degree at most
/// `deg`, integer coefficients in `[-4, 4]`.
pub fn poly2(deg: u32, terms: usize) -> impl Strategy<Value = Poly2> {
    prop::collection::vec((0..=deg, 0..=deg, -4i64..=4), 0..=terms).prop_map(move |ts| {
        let mut f = Poly2::zero();
        for (i, j, c) in ts {
            if i + j <= deg {
                f = &f + &Poly2::monomial(int(c), [i, j]);
            }
        }
        f
    })
}

/// Like [`poly2`], vanishing at the origin and nonzero.
pub fn germ(deg: u32, terms: usize) -> impl Strategy<Value = Poly2> {
    poly2(deg, terms)
        .prop_map(|f| &f - &Poly2::constant(f.constant_term()))
        .prop_filter("nonzero", |f| !f.is_zero())
}

/// An invertible integer 2x2 matrix with small entries.
pub fn gl2() -> impl Strategy<Value = [[Rat; 2]; 2]> {
    (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3)
        .prop_filter("invertible", |(a, b, c, d)| a * d - b * c != 0)
        .prop_map(|(a, b, c, d)| [[int(a), int(b)], [int(c), int(d)]])
}

pub fn curve(seed: u64, pieces: usize, order: u32) -> CatalogCurve {
    random_curve(&mut ChaCha8Rng::seed_from_u64(seed), pieces, order)
}

pub fn coprime(a: &Poly2, b: &Poly2) -> bool {
    let d = gcd2(a, b);
    d.is_constant() || is_local_unit(&d)
}
