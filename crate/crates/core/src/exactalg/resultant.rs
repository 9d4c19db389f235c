//! Resultants with respect to `y` via a fraction-free Sylvester determinant.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::gcd::to_y_coeffs;
use super::poly::Poly2;
use super::rat::{pow_signed, Rat};
use super::upoly::UPoly;

/// Determinant of a square matrix over `Q[x]` (Bareiss elimination).
pub fn det_upoly(mut m: Vec<Vec<UPoly>>) -> UPoly {
    let n = m.len();
    if n == 0 {
        return UPoly::one();
    }
    let mut sign = false;
    let mut prev = UPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return UPoly::zero();
            };
            m.swap(k, r);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = UPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -&d
    } else {
        d
    }
}

/// Sylvester matrix of `f, g` as polynomials in `y`, rows of `f` first,
/// coefficients in descending powers of `y`.
pub fn sylvester_y(f: &Poly2, g: &Poly2) -> Vec<Vec<UPoly>> {
    let a = to_y_coeffs(f);
    let b = to_y_coeffs(g);
    let m = a.len().saturating_sub(1);
    let k = b.len().saturating_sub(1);
    let n = m + k;
    let mut rows = Vec::with_capacity(n);
    for i in 0..k {
        let mut row = vec![UPoly::zero(); n];
        for (j, c) in a.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![UPoly::zero(); n];
        for (j, c) in b.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Classical resultant `Res_y(f, g)` as a polynomial in `x`.
///
/// When one argument is constant in `y` the Sylvester matrix degenerates to
/// a diagonal and the result is that argument raised to the other's degree.
pub fn resultant_y(f: &Poly2, g: &Poly2) -> UPoly {
    if f.is_zero() || g.is_zero() {
        return UPoly::zero();
    }
    // clear denominators, work in Z[x], then undo the scaling
    let (fi, sf) = f.primitive_integer();
    let (gi, sg) = g.primitive_integer();
    let m = fi.degree_in(1).unwrap_or(0) as i64;
    let k = gi.degree_in(1).unwrap_or(0) as i64;
    let rows = sylvester_y(&fi, &gi);
    let mat: Vec<Vec<IPoly>> = rows
        .iter()
        .map(|r| r.iter().map(IPoly::from_upoly).collect())
        .collect();
    let d = det_ipoly(mat).to_upoly();
    // Res(a f, b g) = a^k b^m Res(f, g)
    let scale = pow_signed(&sf, k) * pow_signed(&sg, m);
    d.scale(&scale.recip())
}

/// Dense polynomial over the integers, used for fraction-free elimination.
#[derive(Clone, PartialEq, Eq, Debug)]
struct IPoly(Vec<BigInt>);

impl IPoly {
    fn from_upoly(u: &UPoly) -> Self {
        IPoly(u.coeffs().iter().map(|c| c.to_integer()).collect())
    }

    fn to_upoly(&self) -> UPoly {
        UPoly::new(self.0.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return IPoly(Vec::new());
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IPoly(v).trim()
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = BigInt::zero();
        IPoly(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) - o.0.get(i).unwrap_or(&z))
                .collect(),
        )
        .trim()
    }

    fn neg(&self) -> Self {
        IPoly(self.0.iter().map(|c| -c).collect())
    }

    /// Exact quotient; the caller guarantees divisibility.
    fn exact_div(&self, d: &Self) -> Self {
        if self.is_zero() {
            return IPoly(Vec::new());
        }
        let dd = d.0.len() - 1;
        let lc = &d.0[dd];
        let mut rem = self.0.clone();
        let n = rem.len();
        assert!(n > dd, "Bareiss division is exact");
        let mut q = vec![BigInt::zero(); n - dd];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dd] / lc;
            if !c.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        debug_assert!(rem.iter().all(|c| c.is_zero()));
        IPoly(q).trim()
    }
}

fn det_ipoly(mut m: Vec<Vec<IPoly>>) -> IPoly {
    let n = m.len();
    let one = IPoly(vec![BigInt::one()]);
    if n == 0 {
        return one;
    }
    let mut sign = false;
    let mut prev = one;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return IPoly(Vec::new());
            };
            m.swap(k, r);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.exact_div(&prev);
            }
            m[i][k] = IPoly(Vec::new());
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        d.neg()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_poly2 as p;
    use crate::exactalg::rat::int;

    #[test]
    fn spec_examples() {
        let r = resultant_y(&p("y^2 - x^3").unwrap(), &p("y").unwrap());
        assert_eq!(r, UPoly::monomial(int(-1), 3));
        let r = resultant_y(&p("y - x").unwrap(), &p("y + x").unwrap());
        assert_eq!(r, UPoly::monomial(int(2), 1));
        let r = resultant_y(&p("y").unwrap(), &p("x").unwrap());
        assert_eq!(r, UPoly::monomial(int(1), 1));
    }

    #[test]
    fn vanishes_on_common_factor() {
        let h = p("y - x^2 + 1").unwrap();
        let f = &h * &p("y + x").unwrap();
        let g = &h * &p("y^2 - x").unwrap();
        assert!(resultant_y(&f, &g).is_zero());
        assert!(!resultant_y(&p("y + x").unwrap(), &p("y^2 - x").unwrap()).is_zero());
    }
}
