//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rat::{common_denominator, numerator_gcd, Rat};
use crate::error::{Error, Result};

/// Exponent vector of a monomial.
pub type Exp<const N: usize> = [u32; N];

/// Sparse polynomial in `N` variables. No zero coefficient is ever stored.
///
/// The map is keyed by exponent vector in lexicographic order; printing uses
/// graded order with higher total degree first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly<const N: usize> {
    terms: BTreeMap<Exp<N>, Rat>,
}

/// Bivariate polynomial in `x, y`, the local coordinates at the origin.
pub type Poly2 = MPoly<2>;
/// Trivariate polynomial in `x, y, z`; used for homogeneous forms on the plane.
pub type Poly3 = MPoly<3>;

pub(crate) const VAR_NAMES: [&str; 4] = ["x", "y", "z", "t"];

fn deg<const N: usize>(e: &Exp<N>) -> u32 {
    e.iter().sum()
}

impl<const N: usize> MPoly<N> {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, [0; N])
    }

    pub fn monomial(c: Rat, e: Exp<N>) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// The `i`-th coordinate function.
    pub fn var(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Self::monomial(Rat::one(), e)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Exp<N>, Rat)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exp<N>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exp<N>, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exp<N>) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    /// Value at the origin.
    pub fn constant_term(&self) -> Rat {
        self.coeff(&[0; N])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| deg(e) == 0)
    }

    /// Minimal total degree of a term.
    pub fn order(&self) -> Result<u32> {
        self.terms.keys().map(deg).min().ok_or(Error::ZeroPolynomial)
    }

    /// Maximal total degree of a term.
    pub fn degree(&self) -> Result<u32> {
        self.terms.keys().map(deg).max().ok_or(Error::ZeroPolynomial)
    }

    /// Degree in the `i`-th variable; `None` for the zero polynomial.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(deg);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| deg(e) == d)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Drops every term of total degree `>= d`.
    pub fn truncate_degree(&self, d: u32) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| deg(e) < d)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Drops every term whose exponent in variable `i` is `>= d`.
    pub fn truncate_in(&self, i: usize, d: u32) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[i] < d)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplication by the monomial `x^e`.
    pub fn shift(&self, e: &Exp<N>) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    let mut k2 = *k;
                    for i in 0..N {
                        k2[i] += e[i];
                    }
                    (k2, v.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut p = Self::zero();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = *e;
                e2[i] -= 1;
                p.add_term(e2, c * Rat::from_integer(BigInt::from(e[i])));
            }
        }
        p
    }

    pub fn eval(&self, point: &[Rat; N]) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..N {
                for _ in 0..e[i] {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes polynomials in `M` variables for the `N` variables.
    pub fn compose<const M: usize>(&self, images: &[MPoly<M>; N]) -> MPoly<M> {
        let mut powers: Vec<Vec<MPoly<M>>> = (0..N).map(|_| vec![MPoly::one()]).collect();
        let mut acc = MPoly::<M>::zero();
        for (e, c) in &self.terms {
            let mut t = MPoly::<M>::constant(c.clone());
            for i in 0..N {
                while powers[i].len() <= e[i] as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e[i] as usize];
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Leading term in lexicographic order (variable 0 heaviest).
    pub fn lex_leading(&self) -> Option<(&Exp<N>, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in the polynomial ring.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (de, dc) = d.lex_leading()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((re, rc)) = rem.lex_leading() {
            let mut qe = [0u32; N];
            for i in 0..N {
                if re[i] < de[i] {
                    return None;
                }
                qe[i] = re[i] - de[i];
            }
            let qc = rc / dc;
            let term = Self::monomial(qc.clone(), qe);
            rem = &rem - &(&term * d);
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Rescales so that the coefficients are coprime integers and the
    /// lexicographic leading coefficient is positive. Returns the scaled
    /// polynomial and the factor used.
    pub fn primitive_integer(&self) -> (Self, Rat) {
        if self.is_zero() {
            return (Self::zero(), Rat::one());
        }
        let den = common_denominator(self.terms.values());
        let nums: Vec<BigInt> = self
            .terms
            .values()
            .map(|c| (c * Rat::from_integer(den.clone())).to_integer())
            .collect();
        let g = numerator_gcd(nums.iter());
        let mut factor = Rat::new(den, g);
        if self.lex_leading().unwrap().1.is_negative() {
            factor = -factor;
        }
        (self.scale(&factor), factor)
    }

    /// Integer coefficient vector, scaled to be primitive.
    pub fn integer_terms(&self) -> Vec<(Exp<N>, BigInt)> {
        let (p, _) = self.primitive_integer();
        p.terms.into_iter().map(|(e, c)| (e, c.to_integer())).collect()
    }

    /// Normalizes to a monic polynomial in lexicographic order.
    pub fn monic(&self) -> Self {
        match self.lex_leading() {
            None => Self::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn max_abs_coeff_bits(&self) -> u64 {
        self.terms
            .values()
            .map(|c| c.numer().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, names: &[&str]) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Exp<N>> = self.terms.keys().collect();
        keys.sort_by(|a, b| deg(b).cmp(&deg(a)).then_with(|| b.cmp(a)));
        for (k, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || deg(e) == 0 {
                factors.push(super::rat::render(&a));
            }
            for i in 0..N {
                match e[i] {
                    0 => {}
                    1 => factors.push(names[i].to_string()),
                    p => factors.push(format!("{}^{}", names[i], p)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<const N: usize> fmt::Display for MPoly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, &VAR_NAMES)
    }
}

impl<const N: usize> fmt::Debug for MPoly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({})", self)
    }
}

impl<const N: usize> Add for &MPoly<N> {
    type Output = MPoly<N>;
    fn add(self, rhs: &MPoly<N>) -> MPoly<N> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<const N: usize> Sub for &MPoly<N> {
    type Output = MPoly<N>;
    fn sub(self, rhs: &MPoly<N>) -> MPoly<N> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<const N: usize> Neg for &MPoly<N> {
    type Output = MPoly<N>;
    fn neg(self) -> MPoly<N> {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl<const N: usize> Mul for &MPoly<N> {
    type Output = MPoly<N>;
    fn mul(self, rhs: &MPoly<N>) -> MPoly<N> {
        let mut acc: BTreeMap<Exp<N>, Rat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for i in 0..N {
                    e[i] += eb[i];
                }
                *acc.entry(e).or_insert_with(Rat::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly { terms: acc }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<const N: usize> $tr for MPoly<N> {
            type Output = MPoly<N>;
            fn $m(self, rhs: MPoly<N>) -> MPoly<N> {
                (&self).$m(&rhs)
            }
        }
        impl<const N: usize> $tr<&MPoly<N>> for MPoly<N> {
            type Output = MPoly<N>;
            fn $m(self, rhs: &MPoly<N>) -> MPoly<N> {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<const N: usize> Neg for MPoly<N> {
    type Output = MPoly<N>;
    fn neg(self) -> MPoly<N> {
        -&self
    }
}

impl Poly2 {
    pub fn x() -> Self {
        Self::var(0)
    }

    pub fn y() -> Self {
        Self::var(1)
    }

    /// Partial derivatives `(f_x, f_y)`.
    pub fn gradient(&self) -> (Self, Self) {
        (self.derivative(0), self.derivative(1))
    }

    /// Translation `f(x + a, y + b)`.
    pub fn translate(&self, a: &Rat, b: &Rat) -> Self {
        let xs = &Self::x() + &Self::constant(a.clone());
        let ys = &Self::y() + &Self::constant(b.clone());
        self.compose(&[xs, ys])
    }

    /// Linear substitution `f(a x + b y, c x + d y)`.
    pub fn linear_change(&self, m: &[[Rat; 2]; 2]) -> Self {
        let xs = &Self::x().scale(&m[0][0]) + &Self::y().scale(&m[0][1]);
        let ys = &Self::x().scale(&m[1][0]) + &Self::y().scale(&m[1][1]);
        self.compose(&[xs, ys])
    }
}

impl Poly3 {
    /// Dehomogenizes by setting variable `i` to one; the remaining two
    /// variables keep their relative order.
    pub fn dehomogenize(&self, i: usize) -> Poly2 {
        let (a, b) = other_two(i);
        Poly2::from_terms(self.terms().map(|(e, c)| ([e[a], e[b]], c.clone())))
    }

    /// Homogenizes a bivariate polynomial to degree `d`, inserting the new
    /// variable at position `i`.
    pub fn homogenize(p: &Poly2, i: usize, d: u32) -> Result<Poly3> {
        let (a, b) = other_two(i);
        let mut out = Poly3::zero();
        for (e, c) in p.terms() {
            let s = e[0] + e[1];
            if s > d {
                return Err(Error::InvalidArgument(format!(
                    "cannot homogenize degree {} polynomial to degree {}",
                    s, d
                )));
            }
            let mut k = [0u32; 3];
            k[a] = e[0];
            k[b] = e[1];
            k[i] = d - s;
            out.add_term(k, c.clone());
        }
        Ok(out)
    }
}

/// The two coordinates kept in the chart where coordinate `i` is set to one.
pub fn other_two(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::int;

    fn p2(terms: &[((u32, u32), i64)]) -> Poly2 {
        Poly2::from_terms(terms.iter().map(|((a, b), c)| ([*a, *b], int(*c))))
    }

    #[test]
    fn order_examples() {
        assert_eq!(p2(&[((2, 1), 1), ((0, 4), 1)]).order().unwrap(), 3);
        assert_eq!(Poly2::one().order().unwrap(), 0);
        assert_eq!(p2(&[((0, 2), 2), ((3, 0), 1)]).order().unwrap(), 2);
        assert_eq!(Poly2::zero().order(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn exact_division() {
        let f = p2(&[((0, 2), 1), ((3, 0), -1)]);
        let g = p2(&[((1, 0), 1), ((0, 1), 2)]);
        let prod = &f * &g;
        assert_eq!(prod.exact_div(&g).unwrap(), f);
        assert!(f.exact_div(&g).is_none());
    }

    #[test]
    fn display_graded() {
        let f = p2(&[((0, 2), 2), ((3, 0), 1), ((0, 0), -1)]);
        assert_eq!(f.to_string(), "x^3 + 2*y^2 - 1");
    }

    #[test]
    fn homogenize_roundtrip() {
        let f = p2(&[((0, 2), 1), ((3, 0), -1)]);
        let h = Poly3::homogenize(&f, 2, 3).unwrap();
        assert!(h.is_homogeneous());
        assert_eq!(h.dehomogenize(2), f);
    }
}
