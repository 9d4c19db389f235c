//! Fraction-free sparse echelon form over the integers.
//!
//! Columns index monomials in a local order: lower total degree first,
//! then by the power of `y`. A row's pivot is its lowest column.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type Row = Vec<(u32, BigInt)>;

/// Column index of `x^a y^b`.
pub(crate) fn col(a: u32, b: u32) -> u32 {
    let d = a + b;
    d * (d + 1) / 2 + b
}

/// Total degree of a column.
pub(crate) fn col_degree(c: u32) -> u32 {
    let mut d = 0;
    while (d + 1) * (d + 2) / 2 <= c {
        d += 1;
    }
    d
}

fn make_primitive(r: &mut Row) {
    let mut g = BigInt::zero();
    for (_, c) in r.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if r.first().is_some_and(|(_, c)| c.is_negative()) {
        g = -g;
    }
    if !g.is_one() && !g.is_zero() {
        for (_, c) in r.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// `a*r - b*p`, both sorted by column; the leading column cancels.
fn combine(r: &Row, p: &Row, a: &BigInt, b: &BigInt) -> Row {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map(|t| t.0).unwrap_or(u32::MAX);
        let cj = p.get(j).map(|t| t.0).unwrap_or(u32::MAX);
        if ci < cj {
            out.push((ci, a * &r[i].1));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(b * &p[j].1)));
            j += 1;
        } else {
            let v = a * &r[i].1 - b * &p[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[derive(Default)]
pub(crate) struct Echelon {
    pivots: HashMap<u32, Row>,
}

impl Echelon {
    /// Reduces `row` against the current pivots and stores it if it is
    /// independent. Returns the new pivot column.
    pub(crate) fn insert(&mut self, mut row: Row) -> Option<u32> {
        make_primitive(&mut row);
        loop {
            let (lead, lc) = match row.first() {
                None => return None,
                Some((c, v)) => (*c, v.clone()),
            };
            let Some(p) = self.pivots.get(&lead) else {
                self.pivots.insert(lead, row);
                return Some(lead);
            };
            let pl = &p[0].1;
            let g = pl.gcd(&lc);
            let a = pl / &g;
            let b = &lc / &g;
            row = combine(&row, p, &a, &b);
            make_primitive(&mut row);
        }
    }

    pub(crate) fn pivot_columns(&self) -> impl Iterator<Item = &u32> {
        self.pivots.keys()
    }
}
