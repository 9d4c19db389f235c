//! Local equations of branches from their parametrizations, and division
//! of a polynomial by them in `Q[[x]][y]`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::rat::{int, pow_signed};
use crate::exactalg::{Poly2, Rat, TruncSeries, EXACT};

/// A polynomial in `y` whose coefficients are truncated series in `x`.
#[derive(Clone, Debug)]
pub(crate) struct YPoly(pub Vec<TruncSeries>);

impl YPoly {
    pub fn from_poly(f: &Poly2) -> Self {
        let dy = f.degree_in(1).unwrap_or(0) as usize;
        let dx = f.degree_in(0).unwrap_or(0) as usize;
        let mut cols = vec![vec![Rat::zero(); dx + 1]; dy + 1];
        for (e, c) in f.terms() {
            cols[e[1] as usize][e[0] as usize] = c.clone();
        }
        YPoly(cols.into_iter().map(TruncSeries::exact).collect())
    }

    /// Converts back, with the total degree below which every term is known.
    pub fn to_poly(&self) -> (Poly2, usize) {
        let mut p = Poly2::zero();
        let mut known = EXACT;
        for (b, s) in self.0.iter().enumerate() {
            known = known.min(s.precision());
            for (a, c) in s.coeffs().iter().enumerate() {
                p.add_term([a as u32, b as u32], c.clone());
            }
        }
        (p, known)
    }

    /// Quotient by a monic (in `y`) divisor. The remainder must vanish to
    /// its precision.
    pub fn div_monic(&self, d: &YPoly) -> Result<YPoly> {
        let dd = d.0.len() - 1;
        debug_assert!(d.0[dd].coeffs() == [Rat::one()]);
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return Err(Error::Inconsistent("dividend of lower degree than divisor".into()));
        }
        let mut q = vec![TruncSeries::zero(EXACT); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let c = rem[k + dd].clone();
            for (j, dc) in d.0.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(dc));
            }
            q[k] = c;
        }
        for r in rem.iter().take(dd) {
            if r.order().is_some() {
                return Err(Error::Inconsistent(format!(
                    "branch equation does not divide: remainder {}",
                    r
                )));
            }
        }
        Ok(YPoly(q))
    }
}

/// `prod_zeta (y - Y(zeta t))` with `t^q = x/u`: the Weierstrass polynomial
/// of the branch `x = u t^q, y = Y(t)`, monic of degree `q` in `y`.
pub(crate) fn weierstrass(u: &Rat, q: u32, y: &TruncSeries) -> YPoly {
    let q = q as usize;
    // power sums p_k = q * (terms of Y^k with exponent divisible by q)
    let mut power = TruncSeries::exact(vec![int(1)]);
    let mut sums: Vec<TruncSeries> = vec![TruncSeries::exact(vec![int(q as i64)])];
    for _ in 1..=q {
        power = power.mul(y);
        let v: Vec<Rat> = power
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i % q == 0 { c * int(q as i64) } else { Rat::zero() })
            .collect();
        sums.push(TruncSeries::new(v, power.precision()));
    }
    // Newton identities: k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) p_i
    let mut e: Vec<TruncSeries> = vec![TruncSeries::exact(vec![int(1)])];
    for k in 1..=q {
        let mut acc = TruncSeries::zero(EXACT);
        for i in 1..=k {
            let term = e[k - i].mul(&sums[i]);
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        e.push(acc.scale(&Rat::new((1).into(), (k as i64).into())));
    }
    // t^(q j) = x^j / u^j
    let to_x = |s: &TruncSeries| -> TruncSeries {
        let n = s.coeffs().len().div_ceil(q).max(1);
        let v: Vec<Rat> = (0..n).map(|j| s.coeff(q * j) * pow_signed(u, -(j as i64))).collect();
        let p = if s.is_exact() { EXACT } else { s.precision().div_ceil(q) };
        TruncSeries::new(v, p)
    };
    let mut coeffs = vec![TruncSeries::zero(EXACT); q + 1];
    for k in 0..=q {
        let c = to_x(&e[k]);
        coeffs[q - k] = if k % 2 == 1 { c.scale(&int(-1)) } else { c };
    }
    YPoly(coeffs)
}
