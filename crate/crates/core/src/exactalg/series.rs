//! Univariate power series in `t` with an explicit precision.
//!
//! A `TruncSeries` with precision `p` stands for every series that agrees
//! with the stored coefficients below `t^p`. `EXACT` marks a polynomial.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::Poly2;
use super::rat::{render, Rat};
use crate::error::{Error, Result};

pub const EXACT: usize = usize::MAX;

#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rat>,
    prec: usize,
}

impl TruncSeries {
    pub fn new(mut coeffs: Vec<Rat>, prec: usize) -> Self {
        if coeffs.len() > prec {
            coeffs.truncate(prec);
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        TruncSeries { coeffs, prec }
    }

    pub fn exact(coeffs: Vec<Rat>) -> Self {
        Self::new(coeffs, EXACT)
    }

    pub fn zero(prec: usize) -> Self {
        Self::new(Vec::new(), prec)
    }

    /// `c * t^k`, exactly.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        Self::exact(v)
    }

    pub fn t() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec == EXACT
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Lowest nonzero coefficient index, if one is visible.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Order, or an error when the series is zero up to its precision.
    /// An exactly zero series has no order either; that is reported as
    /// `PrecisionExhausted(EXACT)`, callers that care check `is_exact_zero`.
    pub fn certified_order(&self) -> Result<usize> {
        self.order().ok_or(Error::PrecisionExhausted(self.prec))
    }

    pub fn is_exact_zero(&self) -> bool {
        self.is_exact() && self.coeffs.is_empty()
    }

    /// A lower bound for the order that is always valid.
    pub fn order_bound(&self) -> usize {
        self.order().unwrap_or(self.prec)
    }

    pub fn truncate(&self, prec: usize) -> Self {
        Self::new(self.coeffs.clone(), prec.min(self.prec))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.prec)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v, self.prec.saturating_add(k))
    }

    /// Divides by `t^k`; the coefficients below `t^k` must vanish.
    pub fn unshift(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) || self.prec < k {
            return Err(Error::Inconsistent(format!("series not divisible by t^{}", k)));
        }
        let v = self.coeffs.iter().skip(k).cloned().collect();
        Ok(Self::new(v, if self.is_exact() { EXACT } else { self.prec - k }))
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rat::from_integer((k as i64).into()))
            .collect();
        Self::new(v, if self.is_exact() { EXACT } else { self.prec.saturating_sub(1) })
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let prec = self
            .prec
            .saturating_add(rhs.order_bound())
            .min(rhs.prec.saturating_add(self.order_bound()));
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero(prec);
        }
        let len = (self.coeffs.len() + rhs.coeffs.len() - 1).min(prec);
        let mut v = vec![Rat::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Self::new(v, prec)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let prec = self.prec.min(rhs.prec);
        let n = self.coeffs.len().max(rhs.coeffs.len()).min(prec);
        Self::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect(), prec)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-Rat::one()))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::exact(vec![Rat::one()]);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse of a unit series (nonzero constant term), to its precision.
    /// Exact unit inputs that are not constants get `work` terms.
    pub fn inverse(&self, work: usize) -> Result<Self> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(Error::Inconsistent("inverse of a non-unit series".into()));
        }
        if self.coeffs.len() == 1 {
            return Ok(Self::exact(vec![c0.recip()]));
        }
        let prec = self.prec.min(work);
        let inv0 = c0.recip();
        let mut v: Vec<Rat> = Vec::with_capacity(prec);
        v.push(inv0.clone());
        for k in 1..prec {
            let mut s = Rat::zero();
            for j in 1..=k.min(self.coeffs.len() - 1) {
                s += &self.coeffs[j] * &v[k - j];
            }
            v.push(-s * &inv0);
        }
        Ok(Self::new(v, prec))
    }

    /// `self / d` where `d` has a certified order not above `self`'s.
    /// `work` bounds the expansion length when both inputs are exact.
    pub fn div(&self, d: &Self, work: usize) -> Result<Self> {
        let k = d.certified_order()?;
        let num = self.unshift(k)?;
        let den = d.unshift(k)?;
        Ok(num.mul(&den.inverse(work)?))
    }

    /// Compose with `s(t) = c t^e` (substitution `t -> c t^e`).
    pub fn compose_monomial(&self, c: &Rat, e: usize) -> Self {
        let mut v = vec![Rat::zero(); (self.coeffs.len().max(1) - 1) * e + 1];
        let mut cp = Rat::one();
        for (k, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                v[k * e] = a * &cp;
            }
            cp *= c;
        }
        let prec = if self.is_exact() { EXACT } else { self.prec.saturating_mul(e) };
        Self::new(v, prec)
    }
}

/// `f(x(t), y(t))` with certified precision.
pub fn series_substitute(f: &Poly2, x: &TruncSeries, y: &TruncSeries) -> TruncSeries {
    if f.is_zero() {
        return TruncSeries::zero(EXACT);
    }
    let dx = f.degree_in(0).unwrap_or(0) as usize;
    let dy = f.degree_in(1).unwrap_or(0) as usize;
    let mut xp = vec![TruncSeries::exact(vec![Rat::one()])];
    for i in 1..=dx {
        let next = xp[i - 1].mul(x);
        xp.push(next);
    }
    let mut yp = vec![TruncSeries::exact(vec![Rat::one()])];
    for j in 1..=dy {
        let next = yp[j - 1].mul(y);
        yp.push(next);
    }
    let mut acc = TruncSeries::zero(EXACT);
    for (e, c) in f.terms() {
        let term = xp[e[0] as usize].mul(&yp[e[1] as usize]).scale(c);
        acc = acc.add(&term);
    }
    acc
}

/// Substitution into a polynomial known only modulo `m^known`.
pub fn series_substitute_truncated(
    f: &Poly2,
    known: usize,
    x: &TruncSeries,
    y: &TruncSeries,
) -> TruncSeries {
    let s = series_substitute(f, x, y);
    if known == EXACT {
        return s;
    }
    let ord = x.order_bound().min(y.order_bound());
    s.truncate(known.saturating_mul(ord))
}

/// Like [`series_substitute_truncated`], but works on truncations of the
/// parametrization first and stops at the first one that certifies the
/// order. Falls back to the full substitution.
pub fn substitute_for_order(f: &Poly2, known: usize, x: &TruncSeries, y: &TruncSeries) -> TruncSeries {
    let cap = [x.prec, y.prec].into_iter().filter(|&p| p != EXACT).max().unwrap_or(0);
    let mut k = 8;
    while k < cap {
        let s = series_substitute_truncated(f, known, &x.truncate(k), &y.truncate(k));
        if s.order().is_some() {
            return s;
        }
        k *= 2;
    }
    series_substitute_truncated(f, known, x, y)
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => render(c),
                1 => format!("{}*t", render(c)),
                _ => format!("{}*t^{}", render(c), k),
            })
            .collect();
        let body = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
        if self.is_exact() {
            write!(f, "{}", body)
        } else {
            write!(f, "{} + O(t^{})", body, self.prec)
        }
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries({})", self)
    }
}
