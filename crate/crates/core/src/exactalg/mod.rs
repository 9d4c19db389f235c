//! Exact arithmetic: rationals, sparse polynomials, resultants and
//! truncated power series.

pub mod gcd;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod resultant;
pub mod series;
pub mod upoly;

pub use gcd::{gcd2, is_locally_reduced};
pub use parse::{parse_poly2, parse_poly3};
pub use poly::{MPoly, Poly2, Poly3};
pub use rat::Rat;
pub use resultant::resultant_y;
pub use series::{series_substitute, TruncSeries, EXACT};
pub use upoly::UPoly;

use crate::error::Result;

/// Order (lowest total degree) of a nonzero polynomial.
pub fn poly_order(f: &Poly2) -> Result<u32> {
    f.order()
}
