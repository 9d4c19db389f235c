use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{Poly2, Rat, UPoly};

/// Lower-left convex hull of the support, from the vertex on or nearest
/// the `y`-axis to the vertex on or nearest the `x`-axis. Vertices are
/// `(a, b)` exponents of `x^a y^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub vertices: Vec<(u32, u32)>,
}

/// One compact edge: `y ~ c x^(m/q)` with `gcd(m, q) = 1`.
#[derive(Clone, Debug)]
pub(crate) struct Edge {
    pub m: u32,
    pub q: u32,
    /// Weighted degree `q a + m b` of the edge.
    pub n: u32,
    /// `R(w) = sum_i c(a_r - i m, b_r + i q) w^i`; `Psi(c) = c^b_r R(c^q)`.
    pub poly: UPoly,
}

pub fn newton_polygon(f: &Poly2) -> Result<NewtonPolygon> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(Error::UnitInput);
    }
    let pts: Vec<(u32, u32)> = f.terms().map(|(e, _)| (e[0], e[1])).collect();
    let a0 = pts.iter().map(|p| p.0).min().unwrap();
    let b_at = pts.iter().filter(|p| p.0 == a0).map(|p| p.1).min().unwrap();
    let mut v = (a0, b_at);
    let mut vertices = vec![v];
    loop {
        let mut best: Option<((u32, u32), (u32, u32))> = None;
        for &p in pts.iter().filter(|p| p.1 < v.1) {
            // slope as the fraction (a - a_v) / (b_v - b), compared exactly
            let cand = (p.0 - v.0, v.1 - p.1);
            let better = match best {
                None => true,
                Some((_, s)) => {
                    let lhs = cand.0 as u64 * s.1 as u64;
                    let rhs = s.0 as u64 * cand.1 as u64;
                    lhs < rhs || (lhs == rhs && cand.1 > s.1)
                }
            };
            if better {
                best = Some((p, cand));
            }
        }
        match best {
            Some((p, _)) => {
                vertices.push(p);
                v = p;
            }
            None => break,
        }
    }
    Ok(NewtonPolygon { vertices })
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Compact edges of a polygon, with edge polynomials read from `f`.
pub(crate) fn edges(f: &Poly2, np: &NewtonPolygon) -> Vec<Edge> {
    np.vertices
        .windows(2)
        .map(|w| {
            let (al, bl) = w[0];
            let (ar, br) = w[1];
            let (da, db) = (ar - al, bl - br);
            let g = gcd(da, db);
            let (m, q) = (da / g, db / g);
            let coeffs: Vec<Rat> = (0..=g)
                .map(|i| f.coeff(&[ar - i * m, br + i * q]))
                .collect();
            Edge {
                m,
                q,
                n: q * ar + m * br,
                poly: UPoly::new(coeffs),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_poly2 as p;

    #[test]
    fn polygons() {
        let np = |s: &str| newton_polygon(&p(s).unwrap()).unwrap().vertices;
        assert_eq!(np("y^2 - x^3"), vec![(0, 2), (3, 0)]);
        assert_eq!(np("x*y"), vec![(1, 1)]);
        assert_eq!(np("y*(y^2 - x^3)"), vec![(0, 3), (3, 1)]);
        assert_eq!(np("y^2 - x^2 - x^3"), vec![(0, 2), (2, 0)]);
        assert_eq!(np("y^4 + x^2*y + x^5"), vec![(0, 4), (2, 1), (5, 0)]);
        assert!(matches!(newton_polygon(&p("1 + x").unwrap()), Err(Error::UnitInput)));
    }

    #[test]
    fn edge_data() {
        let f = p("y^2 - 2*x^2 - x^3").unwrap();
        let e = edges(&f, &newton_polygon(&f).unwrap());
        assert_eq!(e.len(), 1);
        assert_eq!((e[0].m, e[0].q, e[0].n), (1, 1, 2));
        // R(w) = -2 + w^2
        assert_eq!(e[0].poly.degree(), Some(2));
    }
}
