//! Greatest common divisors in `Q[x, y]` by primitive remainder sequences.

use num_traits::{One, Zero};

use super::poly::Poly2;
use super::rat::Rat;
use super::upoly::UPoly;

/// `f` as a polynomial in `y` with coefficients in `Q[x]` (index = power of y).
pub fn to_y_coeffs(f: &Poly2) -> Vec<UPoly> {
    let dy = f.degree_in(1).map(|d| d as usize + 1).unwrap_or(0);
    let mut cols: Vec<Vec<Rat>> = vec![Vec::new(); dy];
    for (e, c) in f.terms() {
        let col = &mut cols[e[1] as usize];
        let k = e[0] as usize;
        if col.len() <= k {
            col.resize(k + 1, Rat::zero());
        }
        col[k] = c.clone();
    }
    cols.into_iter().map(UPoly::new).collect()
}

pub fn from_y_coeffs(cs: &[UPoly]) -> Poly2 {
    let mut p = Poly2::zero();
    for (j, u) in cs.iter().enumerate() {
        for (i, c) in u.coeffs().iter().enumerate() {
            p.add_term([i as u32, j as u32], c.clone());
        }
    }
    p
}

fn trim(mut v: Vec<UPoly>) -> Vec<UPoly> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn content(v: &[UPoly]) -> UPoly {
    v.iter().fold(UPoly::zero(), |acc, c| acc.gcd(c))
}

fn primitive_part(v: &[UPoly]) -> Vec<UPoly> {
    let c = content(v);
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|u| u.exact_div(&c).unwrap()).collect()
}

/// Pseudo-remainder of `a` by `b` as polynomials in `y`.
fn prem(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<UPoly> = r.iter().map(|c| c * &lb).collect();
        for (j, bc) in b.iter().enumerate() {
            next[j + shift] = &next[j + shift] - &(bc * &lr);
        }
        r = trim(next);
    }
    r
}

/// Some specialization `x = x0` keeping both leading coefficients gives
/// coprime polynomials in `y`, so the gcd is free of `y`.
fn free_of_y(fy: &[UPoly], gy: &[UPoly]) -> bool {
    if fy.len() <= 1 || gy.len() <= 1 {
        return true;
    }
    for x0 in [1i64, -1, 2, -2, 3, 5, -7, 11] {
        let x0 = Rat::from_integer(x0.into());
        if fy.last().unwrap().eval(&x0).is_zero() || gy.last().unwrap().eval(&x0).is_zero() {
            continue;
        }
        let fu = UPoly::new(fy.iter().map(|c| c.eval(&x0)).collect());
        let gu = UPoly::new(gy.iter().map(|c| c.eval(&x0)).collect());
        if fu.gcd(&gu).degree() == Some(0) {
            return true;
        }
    }
    false
}

/// Monic (lexicographically) gcd of two bivariate polynomials. The gcd of
/// two zero polynomials is zero.
pub fn gcd2(f: &Poly2, g: &Poly2) -> Poly2 {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    let fy = to_y_coeffs(f);
    let gy = to_y_coeffs(g);
    let c = content(&fy).gcd(&content(&gy));
    if free_of_y(&fy, &gy) {
        return from_y_coeffs(&[c]).monic();
    }
    let (mut a, mut b) = (primitive_part(&fy), primitive_part(&gy));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let pp = loop {
        if b.len() == 1 {
            break vec![UPoly::one()];
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            break b;
        }
        a = b;
        b = primitive_part(&r);
    };
    let out: Vec<UPoly> = primitive_part(&pp).iter().map(|u| u * &c).collect();
    from_y_coeffs(&out).monic()
}

/// Gcd of a list of polynomials.
pub fn gcd_many<'a>(it: impl IntoIterator<Item = &'a Poly2>) -> Poly2 {
    it.into_iter().fold(Poly2::zero(), |acc, p| gcd2(&acc, p))
}

/// True when `d` is a unit in the local ring at the origin.
pub fn is_local_unit(d: &Poly2) -> bool {
    !d.constant_term().is_zero()
}

/// Square-free test at the origin: no repeated factor vanishing at `0`.
pub fn is_locally_reduced(f: &Poly2) -> bool {
    let (fx, fy) = f.gradient();
    let g = gcd_many([f, &fx, &fy]);
    is_local_unit(&g)
}

/// Drops from `f` every factor that is a unit at the origin, as far as a
/// polynomial gcd can see it: returns `f / u` where `u` is the largest
/// factor with `u(0) != 0` that also divides `other`.
pub fn strip_common_unit(f: &Poly2, other: &Poly2) -> Poly2 {
    let d = gcd2(f, other);
    if d.is_constant() || !is_local_unit(&d) {
        return f.clone();
    }
    f.exact_div(&d).unwrap()
}

/// Scales to make the constant term one when the polynomial is a local unit.
pub fn normalize_unit(u: &Poly2) -> Poly2 {
    let c = u.constant_term();
    if c.is_zero() || c.is_one() {
        u.clone()
    } else {
        u.scale(&c.recip())
    }
}
