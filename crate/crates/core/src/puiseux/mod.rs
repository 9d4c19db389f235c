//! Branches of plane curve germs by Newton–Puiseux over the rationals.
//!
//! A branch is either explicit, with `x(t) = u t^q` and `y(t)` a truncated
//! series, or a bundle of `s` Galois-conjugate branches that need an
//! irrational coefficient. Per-branch numbers for a bundle come from
//! intersection numbers with its source polynomial divided by `s`.

mod decompose;
mod newton;
mod values;
mod weierstrass;

pub use newton::{newton_polygon, NewtonPolygon};
pub use values::{differential_values, function_values, gap_count, semigroup, ValueSet};

use num_traits::Zero;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::exactalg::gcd::{gcd2, is_local_unit, is_locally_reduced};
use crate::exactalg::series::substitute_for_order;
use crate::exactalg::{series_substitute, Poly2, TruncSeries, EXACT};
use crate::localring::{colength, LocalIdeal};
use decompose::{np_roots, RawPart};
use weierstrass::{weierstrass, YPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Explicit { x_t: TruncSeries, y_t: TruncSeries },
    /// The explicit branches of the same source, needed to split
    /// intersection numbers of the source.
    Bundle { siblings: Vec<(TruncSeries, TruncSeries)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub param: Param,
    /// Number of analytic branches represented (1 for explicit ones).
    pub bundle_size: usize,
    /// The polynomial this branch was split from.
    pub defining_factor: Poly2,
    /// `[n, beta_1, ..., beta_g]` for an explicit branch with `x = u t^n`;
    /// empty for bundles.
    pub char_exponents: Vec<u32>,
    /// Local equation, correct in every degree below `equation_known`.
    pub equation: Poly2,
    pub equation_known: usize,
}

/// Order of a function along a branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(v) => Some(v),
            Order::Infinite => None,
        }
    }
}

impl Branch {
    pub fn is_bundle(&self) -> bool {
        matches!(self.param, Param::Bundle { .. })
    }

    pub fn x_t(&self) -> Option<&TruncSeries> {
        match &self.param {
            Param::Explicit { x_t, .. } => Some(x_t),
            Param::Bundle { .. } => None,
        }
    }

    pub fn y_t(&self) -> Option<&TruncSeries> {
        match &self.param {
            Param::Explicit { y_t, .. } => Some(y_t),
            Param::Bundle { .. } => None,
        }
    }

    /// Precision of the parametrization in `t`.
    pub fn precision(&self) -> usize {
        match &self.param {
            Param::Explicit { x_t, y_t } => x_t.precision().min(y_t.precision()),
            Param::Bundle { siblings } => siblings
                .iter()
                .map(|(x, y)| x.precision().min(y.precision()))
                .min()
                .unwrap_or(EXACT),
        }
    }

    /// True when the branch is the axis `x = 0`.
    pub fn is_y_axis(&self) -> bool {
        self.x_t().is_some_and(|x| x.is_exact_zero())
    }
}

fn char_exponents(q: u32, y: &TruncSeries) -> Result<Vec<u32>> {
    let mut out = vec![q];
    let mut e = q;
    for (i, c) in y.coeffs().iter().enumerate() {
        if e == 1 {
            break;
        }
        if !c.is_zero() && (i as u32) % e != 0 {
            out.push(i as u32);
            e = num_integer::gcd(e, i as u32);
        }
    }
    if e != 1 {
        if y.is_exact() {
            return Err(Error::Inconsistent("parametrization is not primitive".into()));
        }
        return Err(Error::PrecisionExhausted(y.precision()));
    }
    Ok(out)
}

/// Splits a reduced germ `f` with `f(0) = 0` into branches, with every
/// `y(t)` correct modulo `t^precision` (at least).
pub fn branch_decompose(f: &Poly2, precision: usize) -> Result<Vec<Branch>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(Error::UnitInput);
    }
    if !is_locally_reduced(f) {
        return Err(Error::NotReduced);
    }
    let mut explicit: Vec<(TruncSeries, TruncSeries, Vec<u32>, Option<YPoly>)> = Vec::new();
    let mut bundles: Vec<usize> = Vec::new();
    let mut g = f.clone();
    let has_x = g.terms().all(|(e, _)| e[0] > 0);
    if has_x {
        g = g.exact_div(&Poly2::x()).unwrap();
        explicit.push((TruncSeries::zero(EXACT), TruncSeries::t(), vec![1], None));
    }
    let mut raw = Vec::new();
    np_roots(&g, precision.max(2), 0, &mut raw)?;
    for part in raw {
        match part {
            RawPart::Bundle(s) => bundles.push(s),
            RawPart::Branch(b) => {
                let x_t = TruncSeries::monomial(b.u.clone(), b.q as usize);
                let ce = char_exponents(b.q, &b.y)?;
                let w = weierstrass(&b.u, b.q, &b.y);
                explicit.push((x_t, b.y, ce, Some(w)));
            }
        }
    }
    if bundles.len() > 1 {
        return Err(Error::Unsupported(format!(
            "{} has more than one conjugate bundle",
            f
        )));
    }
    let total = explicit.len() + bundles.len();
    let mut out = Vec::with_capacity(total);
    for (x_t, y_t, ce, w) in &explicit {
        let (equation, known) = if total == 1 {
            (f.clone(), EXACT)
        } else {
            match w {
                None => (Poly2::x(), EXACT),
                Some(w) => w.to_poly(),
            }
        };
        out.push(Branch {
            param: Param::Explicit {
                x_t: x_t.clone(),
                y_t: y_t.clone(),
            },
            bundle_size: 1,
            defining_factor: f.clone(),
            char_exponents: ce.clone(),
            equation,
            equation_known: known,
        });
    }
    if let Some(&s) = bundles.first() {
        let (equation, known) = if explicit.is_empty() {
            (f.clone(), EXACT)
        } else {
            let mut rest = if has_x { g.clone() } else { f.clone() };
            let mut yp = YPoly::from_poly(&rest);
            for (_, _, _, w) in &explicit {
                if let Some(w) = w {
                    yp = yp.div_monic(w)?;
                }
            }
            let (p, k) = yp.to_poly();
            rest = p;
            (rest, k)
        };
        out.push(Branch {
            param: Param::Bundle {
                siblings: explicit.iter().map(|(x, y, _, _)| (x.clone(), y.clone())).collect(),
            },
            bundle_size: s,
            defining_factor: f.clone(),
            char_exponents: Vec::new(),
            equation,
            equation_known: known,
        });
    }
    Ok(out)
}

/// Starting `t`-precision for `f`: four times a crude intersection bound
/// read off the Newton polygon.
pub fn initial_precision(f: &Poly2) -> usize {
    let (mut a, mut b) = (1usize, 1usize);
    for (e, _) in f.terms() {
        if e[1] == 0 {
            a = a.max(e[0] as usize);
        }
        if e[0] == 0 {
            b = b.max(e[1] as usize);
        }
    }
    let da = f.terms().filter(|(e, _)| e[1] == 0).map(|(e, _)| e[0] as usize).min().unwrap_or(a);
    let db = f.terms().filter(|(e, _)| e[0] == 0).map(|(e, _)| e[1] as usize).min().unwrap_or(b);
    (da.max(1) * db.max(1) + 8).clamp(16, 256)
}

/// Runs `job` on the branches of `f`, doubling the precision whenever the
/// job (or the decomposition) runs out of it.
pub fn with_branches<T>(
    f: &Poly2,
    limits: &Limits,
    mut job: impl FnMut(&[Branch]) -> Result<T>,
) -> Result<T> {
    let mut p = initial_precision(f).min(limits.precision_cap);
    loop {
        let r = branch_decompose(f, p).and_then(|bs| job(&bs));
        match r {
            Err(Error::PrecisionExhausted(_)) if p < limits.precision_cap => {
                p = (2 * p).min(limits.precision_cap);
            }
            Err(Error::PrecisionExhausted(_)) => return Err(Error::PrecisionExhausted(p)),
            other => return other,
        }
    }
}

fn intersection_exact(f: &Poly2, g: &Poly2, limits: &Limits) -> Result<Option<u64>> {
    let c = colength(&LocalIdeal::new(vec![f.clone(), g.clone()])?, limits.degree_cap)?;
    Ok(c.value())
}

/// Order of `g` along the branch (the intersection number of `g` with one
/// analytic branch).
pub fn order_along(b: &Branch, g: &Poly2, limits: &Limits) -> Result<Order> {
    if g.is_zero() {
        return Ok(Order::Infinite);
    }
    match &b.param {
        Param::Explicit { x_t, y_t } => {
            let s = substitute_for_order(g, EXACT, x_t, y_t);
            if let Some(o) = s.order() {
                return Ok(Order::Finite(o as u64));
            }
            if s.is_exact_zero() {
                return Ok(Order::Infinite);
            }
            // zero to precision: decide by a bound on the finite case
            let src = &b.defining_factor;
            let d = gcd2(src, g);
            let rest = if d.is_constant() || is_local_unit(&d) {
                src.clone()
            } else {
                src.exact_div(&d).unwrap()
            };
            let bound = if rest.is_constant() || is_local_unit(&rest) {
                0
            } else {
                intersection_exact(&rest, g, limits)?.ok_or_else(|| {
                    Error::Inconsistent("cofactor shares a component with g".into())
                })?
            };
            if (s.precision() as u64) > bound && !(d.is_constant() || is_local_unit(&d)) {
                Ok(Order::Infinite)
            } else if (s.precision() as u64) > bound {
                Err(Error::Inconsistent(format!(
                    "{} vanishes to order {} on a branch but meets the curve only {} times",
                    g,
                    s.precision(),
                    bound
                )))
            } else {
                Err(Error::PrecisionExhausted(s.precision()))
            }
        }
        Param::Bundle { siblings } => {
            let src = &b.defining_factor;
            let d = gcd2(src, g);
            if !d.is_constant() && !is_local_unit(&d) {
                // drop the components of g, then split what is left
                let rest = src.exact_div(&d).unwrap();
                if rest.is_constant() || is_local_unit(&rest) {
                    return Ok(Order::Infinite);
                }
                let sub = branch_decompose(&rest, b.precision().min(4096))?;
                if !sub.iter().any(Branch::is_bundle) {
                    return Ok(Order::Infinite);
                }
                let bundle = sub.into_iter().find(Branch::is_bundle).unwrap();
                return order_along(&bundle, g, limits);
            }
            let total = intersection_exact(src, g, limits)?
                .ok_or_else(|| Error::Inconsistent("coprime pair with infinite colength".into()))?;
            let mut rest = total as i64;
            for (x, y) in siblings {
                let s = series_substitute(g, x, y);
                rest -= s.certified_order()? as i64;
            }
            let s = b.bundle_size;
            if rest < 0 || rest % s as i64 != 0 {
                return Err(Error::NotDivisible(rest, s));
            }
            Ok(Order::Finite((rest / s as i64) as u64))
        }
    }
}

/// Intersection number of two distinct branches, counting every member of
/// a bundle.
pub fn branch_intersection(a: &Branch, b: &Branch) -> Result<u64> {
    let (expl, other) = match (&a.param, &b.param) {
        (Param::Explicit { .. }, _) => (a, b),
        (_, Param::Explicit { .. }) => (b, a),
        _ => {
            return Err(Error::Unsupported("intersection of two bundles".into()));
        }
    };
    let (x, y) = (expl.x_t().unwrap(), expl.y_t().unwrap());
    let s = substitute_for_order(&other.equation, other.equation_known, x, y);
    Ok(s.certified_order()? as u64)
}

/// `(x(t), y(t))` as a pair, for explicit branches.
pub fn parametrization(b: &Branch) -> Result<(&TruncSeries, &TruncSeries)> {
    match &b.param {
        Param::Explicit { x_t, y_t } => Ok((x_t, y_t)),
        Param::Bundle { .. } => Err(Error::BundleUnsupported),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_poly2 as p;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn spec_decompositions() {
        let bs = branch_decompose(&p("y^2 - x^2 - x^3").unwrap(), 12).unwrap();
        assert_eq!(bs.len(), 2);
        assert!(bs.iter().all(|b| b.bundle_size == 1));
        let bs = branch_decompose(&p("y^2 - 2*x^2 - x^3").unwrap(), 12).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].bundle_size, 2);
        let bs = branch_decompose(&p("x*(y^2 - x^3)*(y^2 - x^2 - x^3)").unwrap(), 24).unwrap();
        assert_eq!(bs.len(), 4);
        assert!(bs[0].is_y_axis());
        assert_eq!(bs.iter().filter(|b| b.char_exponents == vec![2, 3]).count(), 1);
    }

    #[test]
    fn orders() {
        let l = lim();
        let cusp = &branch_decompose(&p("y^2 - x^3").unwrap(), 12).unwrap()[0];
        assert_eq!(order_along(cusp, &p("x").unwrap(), &l).unwrap(), Order::Finite(2));
        assert_eq!(order_along(cusp, &p("2*y^2 + x^3").unwrap(), &l).unwrap(), Order::Finite(6));
        assert_eq!(order_along(cusp, &p("y^2 - x^3").unwrap(), &l).unwrap(), Order::Infinite);
        let bundle = &branch_decompose(&p("y^2 - 2*x^2 - x^3").unwrap(), 12).unwrap()[0];
        assert_eq!(order_along(bundle, &p("-2*x*y").unwrap(), &l).unwrap(), Order::Finite(2));
    }

    #[test]
    fn branch_sum_matches_intersection() {
        let l = lim();
        let f = p("x*(y^2 - x^3)*(y^2 - x^2 - x^3)").unwrap();
        let g = p("2*y^2 + x^3 + x*y").unwrap();
        let total = crate::localring::intersection_multiplicity(&f, &g, &l).unwrap();
        let bs = branch_decompose(&f, 40).unwrap();
        let sum: u64 = bs.iter().map(|b| order_along(b, &g, &l).unwrap().finite().unwrap()).sum();
        assert_eq!(sum, total);
    }

    #[test]
    fn pairwise_intersections() {
        let bs = branch_decompose(&p("x*(y^2 - x^3)*(y^2 - x^2 - x^3)").unwrap(), 40).unwrap();
        let mut total = 0;
        for i in 0..bs.len() {
            for j in i + 1..bs.len() {
                let a = branch_intersection(&bs[i], &bs[j]).unwrap();
                assert_eq!(a, branch_intersection(&bs[j], &bs[i]).unwrap());
                total += a;
            }
        }
        assert_eq!(total, 9);
    }

    #[test]
    fn bundle_with_siblings() {
        let l = lim();
        let f = p("x*(y^2 - 2*x^2 - x^3)").unwrap();
        let bs = branch_decompose(&f, 24).unwrap();
        assert_eq!(bs.len(), 2);
        let b = bs.iter().find(|b| b.is_bundle()).unwrap();
        assert_eq!(b.equation, p("y^2 - 2*x^2 - x^3").unwrap());
        assert_eq!(order_along(b, &p("y").unwrap(), &l).unwrap(), Order::Finite(1));
        let axis = bs.iter().find(|b| b.is_y_axis()).unwrap();
        assert_eq!(branch_intersection(axis, b).unwrap(), 2);
        // g sharing the axis with the source
        assert_eq!(order_along(b, &p("x*y").unwrap(), &l).unwrap(), Order::Finite(2));
        assert_eq!(order_along(b, &p("x*(y^2 - 2*x^2 - x^3)").unwrap(), &l).unwrap(), Order::Infinite);
    }
}
