use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::gcd::{gcd2, is_local_unit};
use crate::exactalg::Poly2;

/// The germ of `omega = P dx + Q dy`, saturated: `gcd(P, Q)` is a unit at
/// the origin. A polynomial common factor that does not vanish there is
/// divided out on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalFoliation {
    p: Poly2,
    q: Poly2,
}

impl LocalFoliation {
    pub fn new(p: Poly2, q: Poly2) -> Result<Self> {
        if p.is_zero() && q.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let d = gcd2(&p, &q);
        if d.is_constant() {
            return Ok(LocalFoliation { p, q });
        }
        if !is_local_unit(&d) {
            return Err(Error::NotSaturated);
        }
        Ok(LocalFoliation {
            p: p.exact_div(&d).unwrap(),
            q: q.exact_div(&d).unwrap(),
        })
    }

    pub fn p(&self) -> &Poly2 {
        &self.p
    }

    pub fn q(&self) -> &Poly2 {
        &self.q
    }

    /// True when the origin is a singular point.
    pub fn is_singular(&self) -> bool {
        self.p.constant_term().is_zero() && self.q.constant_term().is_zero()
    }

    /// `omega ^ df / (dx ^ dy) = P f_y - Q f_x`.
    pub fn wedge(&self, f: &Poly2) -> Poly2 {
        let (fx, fy) = f.gradient();
        &(&self.p * &fy) - &(&self.q * &fx)
    }
}

/// `h` with `omega ^ df = f h dx ^ dy`, as a quotient by a local unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cofactor {
    pub numerator: Poly2,
    /// Always a unit at the origin; one in the common case.
    pub denominator: Poly2,
}

/// Invariance test: `f` divides `P f_y - Q f_x` in `Q[[x, y]]`.
pub fn is_invariant(fol: &LocalFoliation, f: &Poly2) -> Option<Cofactor> {
    if f.is_zero() {
        return None;
    }
    let g = fol.wedge(f);
    if g.is_zero() {
        return Some(Cofactor {
            numerator: Poly2::zero(),
            denominator: Poly2::one(),
        });
    }
    if let Some(h) = g.exact_div(f) {
        return Some(Cofactor {
            numerator: h,
            denominator: Poly2::one(),
        });
    }
    let d = gcd2(f, &g);
    let unit = f.exact_div(&d).unwrap();
    if !is_local_unit(&unit) {
        return None;
    }
    Some(Cofactor {
        numerator: g.exact_div(&d).unwrap(),
        denominator: unit,
    })
}
