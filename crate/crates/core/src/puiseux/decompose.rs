//! Rational Newton–Puiseux.
//!
//! Each step picks an edge of slope `m/q` and a rational root `w0` of its
//! edge polynomial, then substitutes `x = u x1^q`, `y = x1^m (v + y1)` with
//! `u = w0^alpha`, `v = w0^beta`, `q beta - m alpha = 1`, so that
//! `v^q / u^m = w0` and the new polynomial is again defined over `Q`.

use num_integer::Integer;
use num_traits::Zero;

use super::newton::{edges, newton_polygon};
use crate::error::{Error, Result};
use crate::exactalg::rat::{int, pow_signed};
use crate::exactalg::{series_substitute, Poly2, Rat, TruncSeries};

/// Recursion depth guard; a reduced input never gets close.
const MAX_DEPTH: usize = 64;

/// `x = u t^q`, `y = y(t)`.
#[derive(Clone, Debug)]
pub(crate) struct RawBranch {
    pub u: Rat,
    pub q: u32,
    pub y: TruncSeries,
}

#[derive(Clone, Debug)]
pub(crate) enum RawPart {
    Branch(RawBranch),
    /// `size` conjugate branches that need an irrational coefficient.
    Bundle(usize),
}

/// Root `y1 = phi(x1)` of `g(x1, y1) = 0` with `phi(0) = 0`, where
/// `g_y(0, 0) != 0`, to precision `prec`.
pub(crate) fn implicit_root(g: &Poly2, prec: usize) -> Result<TruncSeries> {
    let gy = g.derivative(1);
    let x = TruncSeries::t();
    let mut phi: Vec<Rat> = Vec::new();
    let mut p = 1;
    while p < prec {
        p = (2 * p).min(prec);
        let y = TruncSeries::new(phi.clone(), p);
        let num = series_substitute(g, &x, &y).truncate(p);
        let den = series_substitute(&gy, &x, &y).truncate(p);
        let corr = num.div(&den, p)?;
        phi = y.sub(&corr).truncate(p).coeffs().to_vec();
    }
    Ok(TruncSeries::new(phi, prec.max(1)))
}

/// Divides out `x^n` from every term.
fn unshift_x(g: &Poly2, n: u32) -> Poly2 {
    Poly2::from_terms(g.terms().map(|(e, c)| {
        debug_assert!(e[0] >= n);
        ([e[0] - n, e[1]], c.clone())
    }))
}

/// All branches `y = o(1)` of `g = 0` through the origin other than
/// `x = 0`. Requires `g(0, y)` not identically zero.
pub(crate) fn np_roots(g: &Poly2, prec: usize, depth: usize, out: &mut Vec<RawPart>) -> Result<()> {
    if depth > MAX_DEPTH {
        return Err(Error::NotReduced);
    }
    let mut g = g.clone();
    if !g.constant_term().is_zero() {
        return Ok(());
    }
    if g.terms().all(|(e, _)| e[1] > 0) {
        out.push(RawPart::Branch(RawBranch {
            u: int(1),
            q: 1,
            y: TruncSeries::zero(crate::exactalg::EXACT),
        }));
        g = g.exact_div(&Poly2::y()).unwrap();
        if g.terms().all(|(e, _)| e[1] > 0) {
            return Err(Error::NotReduced);
        }
        if !g.constant_term().is_zero() {
            return Ok(());
        }
    }
    let np = newton_polygon(&g)?;
    for edge in edges(&g, &np) {
        let (m, q) = (edge.m as i64, edge.q as i64);
        let roots = edge.poly.rational_roots();
        let mut rest = edge.poly.clone();
        for (w0, k) in &roots {
            for _ in 0..*k {
                let lin = crate::exactalg::UPoly::new(vec![-w0.clone(), int(1)]);
                rest = rest.exact_div(&lin).unwrap();
            }
        }
        let irr = rest.degree().unwrap_or(0);
        if irr > 0 {
            if irr > 3 {
                return Err(Error::Unsupported(format!(
                    "edge polynomial {} has an irrational factor of degree {}",
                    edge.poly, irr
                )));
            }
            if rest.gcd(&rest.derivative()).degree().unwrap_or(0) > 0 {
                return Err(Error::Unsupported(format!(
                    "edge polynomial {} has repeated irrational roots",
                    edge.poly
                )));
            }
            out.push(RawPart::Bundle(irr));
        }
        // q beta - m alpha = 1
        let eg = q.extended_gcd(&m);
        debug_assert_eq!(eg.gcd, 1);
        let (beta, alpha) = (eg.x, -eg.y);
        for (w0, k) in roots {
            if w0.is_zero() {
                continue;
            }
            let u = pow_signed(&w0, alpha);
            let v = pow_signed(&w0, beta);
            let xs = Poly2::monomial(u.clone(), [edge.q, 0]);
            let ys = &Poly2::monomial(int(1), [edge.m, 0]) * &(&Poly2::constant(v.clone()) + &Poly2::y());
            let g1 = unshift_x(&g.compose(&[xs, ys]), edge.n);
            if k == 1 {
                let phi = implicit_root(&g1, prec)?;
                let inner = phi.add(&TruncSeries::exact(vec![v.clone()]));
                out.push(RawPart::Branch(RawBranch {
                    u,
                    q: edge.q,
                    y: inner.shift(edge.m as usize),
                }));
            } else {
                let mut sub = Vec::new();
                np_roots(&g1, prec, depth + 1, &mut sub)?;
                for part in sub {
                    match part {
                        RawPart::Bundle(s) => out.push(RawPart::Bundle(s)),
                        RawPart::Branch(b) => {
                            // x1 = b.u s^b.q, y1 = b.y(s)
                            let x_u = &u * pow_signed(&b.u, q);
                            let scale = pow_signed(&b.u, m);
                            let inner = b.y.add(&TruncSeries::exact(vec![v.clone()]));
                            let y = inner.scale(&scale).shift((edge.m * b.q) as usize);
                            out.push(RawPart::Branch(RawBranch {
                                u: x_u,
                                q: edge.q * b.q,
                                y,
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
