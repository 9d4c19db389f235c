//! Semigroups of values and values of differentials on a branch.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{parametrization, Branch};
use crate::error::{Error, Result};
use crate::exactalg::rat::common_denominator;
use crate::exactalg::{series_substitute, Poly2, Rat, TruncSeries};
use crate::localring::echelon::{Echelon, Row};

/// A set of naturals containing every integer from `conductor` on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueSet {
    /// Members below the conductor, increasing.
    pub small: Vec<u64>,
    pub conductor: u64,
    /// Minimal generators, for a semigroup.
    pub generators: Vec<u64>,
}

impl ValueSet {
    pub fn contains(&self, v: u64) -> bool {
        v >= self.conductor || self.small.binary_search(&v).is_ok()
    }

    /// Builds the set from its members below `bound`, all integers from
    /// `bound` on being members.
    fn from_members(members: &BTreeSet<u64>, bound: u64) -> Self {
        let mut c = bound;
        while c > 0 && members.contains(&(c - 1)) {
            c -= 1;
        }
        ValueSet {
            small: members.iter().copied().filter(|&v| v < c).collect(),
            conductor: c,
            generators: Vec::new(),
        }
    }

    /// Number of gaps (naturals not in the set).
    pub fn gap_count(&self) -> u64 {
        self.conductor - self.small.len() as u64
    }
}

/// Numerical semigroup generated by `gens` (with gcd one).
pub fn numerical_semigroup(gens: &[u64]) -> ValueSet {
    let m = *gens.iter().filter(|&&g| g > 0).min().unwrap_or(&1);
    let mut member = vec![true];
    let mut run = 1;
    let mut v = 0u64;
    // extend until m consecutive members are seen
    while run < m {
        v += 1;
        let is = gens
            .iter()
            .any(|&g| g > 0 && g <= v && member[(v - g) as usize]);
        member.push(is);
        run = if is { run + 1 } else { 0 };
    }
    let conductor = v + 1 - m;
    let small: Vec<u64> = (0..conductor).filter(|&k| member[k as usize]).collect();
    let mut minimal: Vec<u64> = Vec::new();
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for g in sorted {
        if g == 0 {
            continue;
        }
        // g is redundant when it is a sum of smaller generators
        let mut reach = vec![false; g as usize + 1];
        reach[0] = true;
        for k in 1..=g as usize {
            reach[k] = minimal.iter().any(|&h| (h as usize) <= k && reach[k - h as usize]);
        }
        if !reach[g as usize] {
            minimal.push(g);
        }
    }
    ValueSet {
        small,
        conductor,
        generators: minimal,
    }
}

/// Semigroup of values of an explicit branch, from its characteristic
/// exponents: `b_0 = n`, `b_1 = beta_1`,
/// `b_(i+1) = n_i b_i - beta_i + beta_(i+1)` with `n_i = e_(i-1)/e_i`.
pub fn semigroup(b: &Branch) -> Result<ValueSet> {
    if b.is_bundle() {
        return Err(Error::BundleUnsupported);
    }
    let ce = &b.char_exponents;
    let mut gens = vec![ce[0] as u64];
    let mut e_prev = ce[0] as u64;
    for i in 1..ce.len() {
        let beta = ce[i] as u64;
        let e = num_integer::gcd(e_prev, beta);
        if i == 1 {
            gens.push(beta);
        } else {
            let bar = gens[i - 1];
            let n_prev = (gens_e(ce, i - 2)) / e_prev;
            let next = n_prev * bar - ce[i - 1] as u64 + beta;
            gens.push(next);
        }
        e_prev = e;
    }
    Ok(numerical_semigroup(&gens))
}

/// `e_k = gcd(n, beta_1, ..., beta_k)`.
fn gens_e(ce: &[u32], k: usize) -> u64 {
    ce[..=k].iter().fold(0u64, |g, &c| num_integer::gcd(g, c as u64))
}

fn integer_row(s: &TruncSeries, below: usize) -> Row {
    let coeffs: Vec<&Rat> = s.coeffs().iter().take(below).collect();
    let den: BigInt = common_denominator(coeffs.iter().copied());
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k as u32, (*c * Rat::from_integer(den.clone())).to_integer()))
        .collect()
}

fn orders(b: &Branch) -> Result<(u64, u64)> {
    let (x, y) = parametrization(b)?;
    let ox = x.order().map(|o| o as u64).unwrap_or(u64::MAX);
    let oy = y.order().map(|o| o as u64).unwrap_or(u64::MAX);
    Ok((ox, oy))
}

/// Values below `bound` of polynomials on the branch, by row reduction of
/// the monomials `x^a y^b` of value below `bound`.
pub fn function_values(b: &Branch, bound: u64) -> Result<ValueSet> {
    let (x, y) = parametrization(b)?;
    let (ox, oy) = orders(b)?;
    if (y.precision() as u64) < bound || (x.precision() as u64) < bound {
        return Err(Error::PrecisionExhausted(x.precision().min(y.precision())));
    }
    let mut ech = Echelon::default();
    let mut a = 0u64;
    while a.saturating_mul(ox) < bound {
        let mut c = 0u64;
        while a.saturating_mul(ox).saturating_add(c.saturating_mul(oy)) < bound {
            let m = Poly2::monomial(Rat::from_integer(1.into()), [a as u32, c as u32]);
            let s = series_substitute(&m, x, y);
            ech.insert(integer_row(&s, bound as usize));
            c += 1;
            if oy == u64::MAX {
                break;
            }
        }
        a += 1;
        if ox == u64::MAX {
            break;
        }
    }
    let members: BTreeSet<u64> = ech.pivot_columns().map(|&c| c as u64).collect();
    Ok(ValueSet::from_members(&members, bound))
}

/// Values `ord_t (t (A(x,y) x' + B(x,y) y'))` of differentials with
/// monomial coefficients of total degree at most `degree_window`, joined
/// with `0`. Every value from the semigroup conductor on is included.
pub fn differential_values(b: &Branch, f: &Poly2, degree_window: u32) -> Result<ValueSet> {
    let (x, y) = parametrization(b)?;
    if !series_substitute(f, x, y).order().is_none() {
        return Err(Error::InvalidArgument("f does not vanish on the branch".into()));
    }
    let s = semigroup(b)?;
    let c = s.conductor;
    let (ox, oy) = orders(b)?;
    let need = (c / ox.min(oy)) as u32 + 1;
    if degree_window < need {
        return Err(Error::WindowTooSmall(degree_window));
    }
    if (y.precision() as u64) < c + 1 {
        return Err(Error::PrecisionExhausted(y.precision()));
    }
    let t = TruncSeries::t();
    let dx = t.mul(&x.derivative());
    let dy = t.mul(&y.derivative());
    let mut ech = Echelon::default();
    for (form, o) in [(&dx, ox), (&dy, oy)] {
        if o == u64::MAX {
            continue;
        }
        for deg in 0..=degree_window {
            for a in 0..=deg {
                let bexp = deg - a;
                let val = (a as u64).saturating_mul(ox).saturating_add((bexp as u64).saturating_mul(oy));
                if val.saturating_add(o) >= c {
                    continue;
                }
                let m = Poly2::monomial(Rat::from_integer(1.into()), [a, bexp]);
                let s = series_substitute(&m, x, y).mul(form);
                if (s.precision() as u64) < c {
                    return Err(Error::PrecisionExhausted(s.precision()));
                }
                ech.insert(integer_row(&s, c as usize));
            }
        }
    }
    let mut members: BTreeSet<u64> = ech.pivot_columns().map(|&k| k as u64).collect();
    members.insert(0);
    Ok(ValueSet::from_members(&members, c))
}

/// `#(Lambda \ S)` for one branch, with `f` its equation.
pub fn gap_count(b: &Branch, f: &Poly2) -> Result<u64> {
    let s = semigroup(b)?;
    let window = (s.conductor as u32) + 2;
    let lam = differential_values(b, f, window)?;
    Ok((1..s.conductor).filter(|&v| lam.contains(v) && !s.contains(v)).count() as u64)
}
