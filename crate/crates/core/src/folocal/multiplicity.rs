//! Multiplicity of a foliation along branches and divisors of separatrices.

use num_traits::Zero;

use super::foliation::{is_invariant, LocalFoliation};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::exactalg::gcd::{gcd2, is_local_unit, is_locally_reduced};
use crate::exactalg::{series_substitute, Poly2, TruncSeries, EXACT};
use crate::puiseux::{order_along, with_branches, Branch, Order, Param};

fn finite_order(o: Order, what: &str) -> Result<u64> {
    o.finite()
        .ok_or_else(|| Error::Inconsistent(format!("{what} vanishes on an invariant branch")))
}

fn explicit_mult(fol: &LocalFoliation, b: &Branch, x_t: &TruncSeries, y_t: &TruncSeries) -> Result<u64> {
    let pg = series_substitute(fol.p(), x_t, y_t);
    let qg = series_substitute(fol.q(), x_t, y_t);
    let tangency = pg.mul(&x_t.derivative()).add(&qg.mul(&y_t.derivative()));
    if tangency.order().is_some() {
        return Err(Error::NotInvariant(b.defining_factor.to_string()));
    }
    let mut values = Vec::with_capacity(2);
    if !x_t.is_exact_zero() {
        let ox = x_t.certified_order()? as u64;
        values.push(qg.certified_order()? as u64 + 1 - ox);
    }
    if !y_t.is_exact_zero() {
        let oy = y_t.certified_order()? as u64;
        values.push(pg.certified_order()? as u64 + 1 - oy);
    }
    match values.as_slice() {
        [v] => Ok(*v),
        [a, c] if a == c => Ok(*a),
        [a, c] => Err(Error::Inconsistent(format!(
            "the two charts give multiplicities {a} and {c}"
        ))),
        _ => Err(Error::Inconsistent("branch with zero parametrization".into())),
    }
}

/// `mu_p(F, B)`: the order of `theta(t)`, where `theta = -Q(g)/x'` or
/// `P(g)/y'` for the parametrization `g` of `B`. For a bundle the value
/// comes from `I(h, Q) - I(h, x)`, divided by its size, plus one.
pub fn mult_along_branch(fol: &LocalFoliation, b: &Branch, limits: &Limits) -> Result<u64> {
    match &b.param {
        Param::Explicit { x_t, y_t } => {
            let cap = [x_t.precision(), y_t.precision()]
                .into_iter()
                .filter(|&p| p != EXACT)
                .max()
                .unwrap_or(0);
            let mut k = 8;
            loop {
                let full = k >= cap;
                let (x, y) = if full {
                    (x_t.clone(), y_t.clone())
                } else {
                    (x_t.truncate(k), y_t.truncate(k))
                };
                match explicit_mult(fol, b, &x, &y) {
                    Err(Error::PrecisionExhausted(_)) if !full => k *= 2,
                    r => return r,
                }
            }
        }
        Param::Bundle { .. } => mult_along_branch_identity(fol, b, limits),
    }
}

/// `[I(h_B, Q) - I(h_B, x)]/s + 1`, or with `P`, `y` when the branch is the
/// axis `x = 0`.
pub fn mult_along_branch_identity(fol: &LocalFoliation, b: &Branch, limits: &Limits) -> Result<u64> {
    let (coeff, coord) = if b.is_y_axis() {
        (fol.p(), Poly2::y())
    } else {
        (fol.q(), Poly2::x())
    };
    let c = finite_order(order_along(b, coeff, limits)?, "a coefficient")?;
    let o = finite_order(order_along(b, &coord, limits)?, "a coordinate")?;
    if c + 1 < o {
        return Err(Error::NotInvariant(b.defining_factor.to_string()));
    }
    Ok(c + 1 - o)
}

/// Multiplicities along the branches of `f`, as `(mu_p(F, B), size)`.
pub fn branch_multiplicities(
    fol: &LocalFoliation,
    f: &Poly2,
    limits: &Limits,
) -> Result<Vec<(u64, usize)>> {
    if is_invariant(fol, f).is_none() {
        return Err(Error::NotInvariant(f.to_string()));
    }
    with_branches(f, limits, |bs| {
        bs.iter()
            .map(|b| Ok((mult_along_branch(fol, b, limits)?, b.bundle_size)))
            .collect()
    })
}

/// `mu_p(F, C)` for the reduced invariant curve `f`, seen as the effective
/// divisor of its branches.
pub fn mult_along_curve(fol: &LocalFoliation, f: &Poly2, limits: &Limits) -> Result<i64> {
    let bm = branch_multiplicities(fol, f, limits)?;
    let sum: i64 = bm.iter().map(|&(m, s)| m as i64 * s as i64).sum();
    let r: i64 = bm.iter().map(|&(_, s)| s as i64).sum();
    Ok(sum - r + 1)
}

/// A divisor of separatrices `sum a_i C_i`, every branch of the reduced
/// curve `C_i` carrying the coefficient `a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SepDivisor {
    components: Vec<(Poly2, i64)>,
}

impl SepDivisor {
    pub fn new(components: Vec<(Poly2, i64)>) -> Result<Self> {
        for (i, (f, a)) in components.iter().enumerate() {
            if *a == 0 {
                return Err(Error::InvalidArgument(format!("zero coefficient on {f}")));
            }
            if f.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            if !f.constant_term().is_zero() {
                return Err(Error::UnitInput);
            }
            if !is_locally_reduced(f) {
                return Err(Error::NotReduced);
            }
            for (g, _) in &components[..i] {
                let d = gcd2(f, g);
                if !d.is_constant() && !is_local_unit(&d) {
                    return Err(Error::CommonComponent(d.to_string()));
                }
            }
        }
        Ok(SepDivisor { components })
    }

    pub fn empty() -> Self {
        SepDivisor { components: Vec::new() }
    }

    /// The divisor `C` with coefficient one on each branch.
    pub fn of_curve(f: Poly2) -> Result<Self> {
        Self::new(vec![(f, 1)])
    }

    pub fn components(&self) -> &[(Poly2, i64)] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.components.iter().all(|(_, a)| *a > 0)
    }

    pub fn is_primitive(&self) -> bool {
        self.components.iter().all(|(_, a)| a.abs() == 1)
    }

    /// `B_0`, the positive part.
    pub fn positive(&self) -> SepDivisor {
        SepDivisor {
            components: self.components.iter().filter(|(_, a)| *a > 0).cloned().collect(),
        }
    }

    /// `B_inf`, with `B = B_0 - B_inf`.
    pub fn negative(&self) -> SepDivisor {
        SepDivisor {
            components: self
                .components
                .iter()
                .filter(|(_, a)| *a < 0)
                .map(|(f, a)| (f.clone(), -a))
                .collect(),
        }
    }

    /// Reduced equation of the support.
    pub fn support(&self) -> Poly2 {
        self.components.iter().fold(Poly2::one(), |acc, (f, _)| &acc * f)
    }

    /// `deg B = sum a_B` over branches.
    pub fn degree(&self, limits: &Limits) -> Result<i64> {
        let mut deg = 0;
        for (f, a) in &self.components {
            let r: usize = with_branches(f, limits, |bs| Ok(bs.iter().map(|b| b.bundle_size).sum()))?;
            deg += a * r as i64;
        }
        Ok(deg)
    }
}

/// `mu_p(F, B) = sum a_B mu_p(F, B) - deg B + 1`, and `1` for the empty
/// divisor.
pub fn mult_along_divisor(fol: &LocalFoliation, d: &SepDivisor, limits: &Limits) -> Result<i64> {
    let mut total = 1i64;
    for (f, a) in &d.components {
        for (m, s) in branch_multiplicities(fol, f, limits)? {
            total += a * s as i64 * (m as i64 - 1);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_poly2 as p;
    use crate::puiseux::branch_decompose;

    fn suzuki() -> LocalFoliation {
        LocalFoliation::new(p("2*y^2 + x^3").unwrap(), p("-2*x*y").unwrap()).unwrap()
    }

    #[test]
    fn branch_values() {
        let l = Limits::default();
        let f = suzuki();
        let axis = &branch_decompose(&p("x").unwrap(), 16).unwrap()[0];
        assert_eq!(mult_along_branch(&f, axis, &l).unwrap(), 2);
        let cusp = &branch_decompose(&p("y^2 - x^3").unwrap(), 16).unwrap()[0];
        assert_eq!(mult_along_branch(&f, cusp, &l).unwrap(), 4);
        assert_eq!(mult_along_branch_identity(&f, cusp, &l).unwrap(), 4);
        for b in branch_decompose(&p("y^2 - x^2 - x^3").unwrap(), 16).unwrap() {
            assert_eq!(mult_along_branch(&f, &b, &l).unwrap(), 2);
        }
        let bundle = &branch_decompose(&p("y^2 - 2*x^2 - x^3").unwrap(), 16).unwrap()[0];
        assert_eq!(mult_along_branch(&f, bundle, &l).unwrap(), 2);
        let line = &branch_decompose(&p("y").unwrap(), 16).unwrap()[0];
        assert!(matches!(mult_along_branch(&f, line, &l), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn divisor_values() {
        let l = Limits::default();
        let f = suzuki();
        let b0 = SepDivisor::new(vec![
            (p("x").unwrap(), 1),
            (p("y^2 - x^3").unwrap(), 1),
            (p("y^2 - x^2 - x^3").unwrap(), 1),
        ])
        .unwrap();
        assert_eq!(mult_along_divisor(&f, &b0, &l).unwrap(), 7);
        let binf = SepDivisor::of_curve(p("y^2 - 2*x^2 - x^3").unwrap()).unwrap();
        assert_eq!(mult_along_divisor(&f, &binf, &l).unwrap(), 3);
        let mut comps = b0.components().to_vec();
        comps.push((p("y^2 - 2*x^2 - x^3").unwrap(), -1));
        let b = SepDivisor::new(comps).unwrap();
        assert_eq!(mult_along_divisor(&f, &b, &l).unwrap(), 5);
        assert_eq!(mult_along_divisor(&f, &b.positive(), &l).unwrap(), 7);
        assert_eq!(b.degree(&l).unwrap(), 2);
        assert_eq!(mult_along_divisor(&f, &SepDivisor::empty(), &l).unwrap(), 1);
        // one curve or its branches separately
        let whole = SepDivisor::of_curve(p("x*(y^2 - x^3)*(y^2 - x^2 - x^3)").unwrap()).unwrap();
        assert_eq!(mult_along_divisor(&f, &whole, &l).unwrap(), 7);
        assert!(SepDivisor::new(vec![(p("x").unwrap(), 1), (p("x*y").unwrap(), 1)]).is_err());
    }
}
