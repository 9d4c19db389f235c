//! Irreducibility certificates from Newton polytopes: a factorization
//! `f = g h` gives `N(f) = N(g) + N(h)`, so a polygon that is not a
//! Minkowski sum of two lattice polygons (other than a point) certifies
//! that `f` is irreducible up to monomial factors, over every field.

use crate::exactalg::{Poly2, Poly3};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn hull(mut pts: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Bound on the search over sub-sums of edge vectors.
const SEARCH_CAP: u64 = 2_000_000;

/// The Newton polygon of `f` is integrally indecomposable and `f` has no
/// monomial factor. `false` also covers cases too large to decide.
pub fn newton_indecomposable(f: &Poly2) -> bool {
    if f.terms().all(|(e, _)| e[0] > 0) || f.terms().all(|(e, _)| e[1] > 0) {
        return false;
    }
    let pts: Vec<(i64, i64)> = f.terms().map(|(e, _)| (e[0] as i64, e[1] as i64)).collect();
    let h = hull(pts);
    if h.len() < 2 {
        return false;
    }
    // primitive edge vectors with their lattice lengths
    let mut edges: Vec<((i64, i64), i64)> = Vec::new();
    let k = if h.len() == 2 { 1 } else { h.len() };
    for i in 0..k {
        let a = h[i];
        let b = h[(i + 1) % h.len()];
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        let g = gcd(dx, dy);
        edges.push(((dx / g, dy / g), g));
    }
    if h.len() == 2 {
        return edges[0].1 == 1;
    }
    let states: u64 = edges.iter().map(|e| e.1 as u64 + 1).product();
    if states > SEARCH_CAP {
        return false;
    }
    // a proper summand closes up with a_i <= m_i, not all zero, not all full
    let mut counts = vec![0i64; edges.len()];
    loop {
        let mut i = 0;
        while i < counts.len() && counts[i] == edges[i].1 {
            counts[i] = 0;
            i += 1;
        }
        if i == counts.len() {
            return true;
        }
        counts[i] += 1;
        let full = counts.iter().zip(&edges).all(|(c, e)| *c == e.1);
        if full {
            continue;
        }
        let (sx, sy) = counts
            .iter()
            .zip(&edges)
            .fold((0, 0), |(sx, sy), (c, e)| (sx + c * e.0 .0, sy + c * e.0 .1));
        if sx == 0 && sy == 0 {
            return false;
        }
    }
}

/// Irreducibility of a plane projective curve, certified when some affine
/// chart shows an indecomposable Newton polygon, and reducibility when a
/// coordinate line splits off. `None` means undecided.
pub fn is_irreducible(f: &Poly3) -> Option<bool> {
    let d = f.degree().ok()?;
    if d == 1 {
        return Some(true);
    }
    for i in 0..3 {
        if f.terms().all(|(e, _)| e[i] > 0) {
            return Some(false);
        }
    }
    for i in [2, 0, 1] {
        let g = f.dehomogenize(i);
        let lost = g.degree().ok()? < d;
        if !lost && newton_indecomposable(&g) {
            return Some(true);
        }
    }
    None
}
