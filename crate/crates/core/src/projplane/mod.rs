//! Foliations of the projective plane given by homogeneous 1-forms
//! `A dx + B dy + C dz` with `xA + yB + zC = 0`.

mod family;
mod global;
mod irreducible;

pub use family::{alcantara_family, irreducible_bound_contradiction, verify_alcantara, AlcantaraExample};
pub use global::{
    analyze, check_cerveau_linsneto, check_global_tjurina, check_gsv_sum, check_ploski, check_soares,
    genus, global_checks, point_record, CurveAtPoint, GlobalReport, PointRecord,
};
pub use irreducible::{is_irreducible, newton_indecomposable};

use std::fmt;

use num_traits::Zero;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::exactalg::gcd::{gcd2, gcd_many};
use crate::exactalg::poly::other_two;
use crate::exactalg::rat::render;
use crate::exactalg::{Poly2, Poly3, Rat};
use crate::folocal::LocalFoliation;
use crate::localring::milnor_foliation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveFoliation {
    coeffs: [Poly3; 3],
    degree: u32,
}

/// Checks the Euler relation and saturation; returns the degree
/// `deg A - 1`.
pub fn validate(a: &Poly3, b: &Poly3, c: &Poly3) -> Result<u32> {
    let coeffs = [a, b, c];
    let mut deg = None;
    for g in coeffs.iter().filter(|g| !g.is_zero()) {
        if !g.is_homogeneous() {
            return Err(Error::InvalidArgument(format!("{g} is not homogeneous")));
        }
        let d = g.degree()?;
        if deg.is_some_and(|e| e != d) {
            return Err(Error::InvalidArgument("coefficients of different degrees".into()));
        }
        deg = Some(d);
    }
    let Some(d) = deg else {
        return Err(Error::ZeroPolynomial);
    };
    let euler = &(&(&Poly3::var(0) * a) + &(&Poly3::var(1) * b)) + &(&Poly3::var(2) * c);
    if !euler.is_zero() {
        return Err(Error::EulerViolation);
    }
    if d == 0 {
        return Err(Error::EulerViolation);
    }
    // a common factor shows up in the chart z = 1, or it is a power of z
    for i in [2, 0] {
        let parts: Vec<Poly2> = coeffs.iter().map(|g| g.dehomogenize(i)).filter(|g| !g.is_zero()).collect();
        if !gcd_many(parts.iter()).is_constant() {
            return Err(Error::NotSaturated);
        }
    }
    Ok(d - 1)
}

impl ProjectiveFoliation {
    pub fn new(a: Poly3, b: Poly3, c: Poly3) -> Result<Self> {
        let degree = validate(&a, &b, &c)?;
        Ok(ProjectiveFoliation {
            coeffs: [a, b, c],
            degree,
        })
    }

    /// Divides out the common factor of `A, B, C` first; returns it too.
    pub fn saturated(a: Poly3, b: Poly3, c: Poly3) -> Result<(Self, Poly3)> {
        let coeffs = [&a, &b, &c];
        let parts: Vec<Poly2> = coeffs.iter().map(|g| g.dehomogenize(2)).filter(|g| !g.is_zero()).collect();
        if parts.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        let g2 = gcd_many(parts.iter());
        let mut common = Poly3::homogenize(&g2, 2, g2.degree()?)?;
        let k = coeffs.iter().flat_map(|g| g.terms().map(|(e, _)| e[2])).min().unwrap_or(0);
        common = &common * &Poly3::var(2).pow(k);
        let div = |g: &Poly3| {
            g.exact_div(&common)
                .ok_or_else(|| Error::Inconsistent("common factor does not divide".into()))
        };
        let (a, b, c) = (div(&a)?, div(&b)?, div(&c)?);
        Ok((Self::new(a, b, c)?, common))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficients(&self) -> &[Poly3; 3] {
        &self.coeffs
    }
}

/// A point `[x0 : y0 : z0]`, scaled so its last nonzero coordinate is one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: [Rat; 3],
}

impl ProjPoint {
    pub fn new(coords: [Rat; 3]) -> Result<Self> {
        let Some(k) = (0..3).rev().find(|&i| !coords[i].is_zero()) else {
            return Err(Error::InvalidArgument("[0:0:0] is not a point".into()));
        };
        let s = coords[k].clone();
        Ok(ProjPoint {
            coords: coords.map(|c| c / &s),
        })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
        Self::new([Rat::from_integer(x.into()), Rat::from_integer(y.into()), Rat::from_integer(z.into())])
    }

    pub fn coords(&self) -> &[Rat; 3] {
        &self.coords
    }

    /// Index of the normalized coordinate, the default chart.
    pub fn default_chart(&self) -> usize {
        (0..3).rev().find(|&i| !self.coords[i].is_zero()).unwrap()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(render).collect();
        write!(f, "[{}]", c.join(":"))
    }
}

fn chart_offset(which: usize, center: &ProjPoint) -> Result<(Rat, Rat)> {
    let c = center.coords();
    if c[which].is_zero() {
        return Err(Error::PointOutsideChart);
    }
    let (a, b) = other_two(which);
    Ok((&c[a] / &c[which], &c[b] / &c[which]))
}

/// The germ at `center` in the affine chart where coordinate `which` is
/// one, in the two remaining coordinates (kept in order) centred at the
/// point.
pub fn chart(pf: &ProjectiveFoliation, which: usize, center: &ProjPoint) -> Result<LocalFoliation> {
    let (u, v) = chart_offset(which, center)?;
    let (a, b) = other_two(which);
    let p = pf.coeffs[a].dehomogenize(which).translate(&u, &v);
    let q = pf.coeffs[b].dehomogenize(which).translate(&u, &v);
    LocalFoliation::new(p, q)
}

/// The germ of the curve `f = 0` at `center`, in the same coordinates as
/// [`chart`].
pub fn local_curve(f: &Poly3, which: usize, center: &ProjPoint) -> Result<Poly2> {
    let (u, v) = chart_offset(which, center)?;
    Ok(f.dehomogenize(which).translate(&u, &v))
}

/// Verdict on a list of singular points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certification {
    pub milnor: Vec<u64>,
    pub total: u64,
    /// `d^2 + d + 1`.
    pub expected: u64,
}

impl Certification {
    /// The list is the whole singular set.
    pub fn complete(&self) -> bool {
        self.total == self.expected
    }

    pub fn deficit(&self) -> i64 {
        self.expected as i64 - self.total as i64
    }
}

/// Milnor numbers at the supplied points; the list is complete when they
/// add up to `d^2 + d + 1`.
pub fn certify_singularities(
    pf: &ProjectiveFoliation,
    points: &[ProjPoint],
    limits: &Limits,
) -> Result<Certification> {
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(Error::InvalidArgument(format!("{p} listed twice")));
        }
    }
    let mut milnor = Vec::with_capacity(points.len());
    for p in points {
        let local = chart(pf, p.default_chart(), p)?;
        if !local.is_singular() {
            return Err(Error::NonsingularPoint(p.to_string()));
        }
        milnor.push(milnor_foliation(&local, limits)?);
    }
    let d = pf.degree as u64;
    Ok(Certification {
        total: milnor.iter().sum(),
        milnor,
        expected: d * d + d + 1,
    })
}

/// One blow-up of a singular germ, in the chart `y = t x` and the chart
/// `x = s y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowUp {
    /// `pi^* omega / x^order` in the coordinates `(x, t)`.
    pub p: Poly2,
    pub q: Poly2,
    pub order: u32,
    /// The exceptional divisor is invariant (seen in both charts).
    pub exceptional_invariant: bool,
}

impl BlowUp {
    pub fn dicritical(&self) -> bool {
        !self.exceptional_invariant
    }
}

fn x_order(f: &Poly2, var: usize) -> u32 {
    f.terms().map(|(e, _)| e[var]).min().unwrap_or(u32::MAX)
}

fn divide_var(f: &Poly2, var: usize, k: u32) -> Poly2 {
    Poly2::from_terms(f.terms().map(|(e, c)| {
        let mut e = *e;
        e[var] -= k;
        (e, c.clone())
    }))
}

/// Coefficients of `pi^* omega` divided by the largest power of the
/// exceptional equation, for the blow-up chart centred on the axis `var`.
fn blow(fol: &LocalFoliation, var: usize) -> (Poly2, Poly2, u32, bool) {
    // var = 0: x = x, y = t x; var = 1: x = s y, y = y
    let (sub, e) = if var == 0 {
        ([Poly2::x(), &Poly2::x() * &Poly2::y()], Poly2::y())
    } else {
        ([&Poly2::x() * &Poly2::y(), Poly2::y()], Poly2::x())
    };
    let p = fol.p().compose(&sub);
    let q = fol.q().compose(&sub);
    let exc = if var == 0 { Poly2::x() } else { Poly2::y() };
    let (c0, c1) = if var == 0 {
        // P dx + Q (t dx + x dt)
        (&p + &(&e * &q), &exc * &q)
    } else {
        // P (s dy + y ds) + Q dy, in the order (ds, dy)
        (&exc * &p, &(&e * &p) + &q)
    };
    let k = x_order(&c0, var).min(x_order(&c1, var));
    let c0 = divide_var(&c0, var, k);
    let c1 = divide_var(&c1, var, k);
    // exceptional divisor {var = 0} is invariant iff its equation divides
    // the coefficient of the other differential
    let along = if var == 0 { &c1 } else { &c0 };
    let invariant = along.is_zero() || x_order(along, var) >= 1;
    (c0, c1, k, invariant)
}

/// First blow-up of a singular germ; the foliation is dicritical at this
/// step when the exceptional divisor is not invariant.
pub fn blowup_chart(fol: &LocalFoliation) -> Result<BlowUp> {
    if !fol.is_singular() {
        return Err(Error::InvalidArgument("blow-up centre is a regular point".into()));
    }
    let (p, q, order, inv) = blow(fol, 0);
    let (_, _, _, inv2) = blow(fol, 1);
    if inv != inv2 {
        return Err(Error::Inconsistent("the two blow-up charts disagree".into()));
    }
    Ok(BlowUp {
        p,
        q,
        order,
        exceptional_invariant: inv,
    })
}

/// Invariance of `f = 0`: in every affine chart the dehomogenized curve
/// divides `omega ^ df` as polynomials.
pub fn curve_invariant(pf: &ProjectiveFoliation, f: &Poly3) -> bool {
    (0..3).all(|i| {
        let g = f.dehomogenize(i);
        if g.is_constant() {
            return true;
        }
        let (a, b) = other_two(i);
        let mut p = pf.coeffs[a].dehomogenize(i);
        let mut q = pf.coeffs[b].dehomogenize(i);
        let d = gcd2(&p, &q);
        if !d.is_constant() {
            p = p.exact_div(&d).unwrap();
            q = q.exact_div(&d).unwrap();
        }
        let (gx, gy) = g.gradient();
        let w = &(&p * &gy) - &(&q * &gx);
        w.is_zero() || w.exact_div(&g).is_some()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::{parse_poly2 as p2, parse_poly3 as p3};

    fn pencil() -> ProjectiveFoliation {
        ProjectiveFoliation::new(p3("y").unwrap(), p3("-x").unwrap(), p3("0").unwrap()).unwrap()
    }

    fn corners() -> ProjectiveFoliation {
        ProjectiveFoliation::new(p3("y*z").unwrap(), p3("x*z").unwrap(), p3("-2*x*y").unwrap()).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(pencil().degree(), 0);
        assert_eq!(corners().degree(), 1);
        let (pf, common) =
            ProjectiveFoliation::saturated(p3("y*z^2").unwrap(), p3("-x*z^2").unwrap(), p3("0").unwrap()).unwrap();
        assert_eq!((pf, common), (pencil(), p3("z^2").unwrap()));
        let (_, common) =
            ProjectiveFoliation::saturated(p3("x*y*z").unwrap(), p3("-x^2*z").unwrap(), p3("0").unwrap()).unwrap();
        assert_eq!(common, p3("x*z").unwrap());
        let r = ProjectiveFoliation::new(p3("x").unwrap(), p3("y").unwrap(), p3("z").unwrap());
        assert!(matches!(r, Err(Error::EulerViolation)));
        let r = ProjectiveFoliation::new(p3("y*z^2").unwrap(), p3("-x*z^2").unwrap(), p3("0").unwrap());
        assert!(matches!(r, Err(Error::NotSaturated)));
        let r = ProjectiveFoliation::new(p3("x*y*z").unwrap(), p3("-x^2*z").unwrap(), p3("0").unwrap());
        assert!(matches!(r, Err(Error::NotSaturated)));
    }

    #[test]
    fn charts_and_points() {
        let o = ProjPoint::from_ints(0, 0, 1).unwrap();
        let l = chart(&pencil(), 2, &o).unwrap();
        assert_eq!((l.p().clone(), l.q().clone()), (p2("y").unwrap(), p2("-x").unwrap()));
        assert!(certify_singularities(&pencil(), &[o.clone()], &Limits::default()).unwrap().complete());
        let pf = corners();
        let c = certify_singularities(
            &pf,
            &[o.clone(), ProjPoint::from_ints(1, 0, 0).unwrap(), ProjPoint::from_ints(0, 1, 0).unwrap()],
            &Limits::default(),
        )
        .unwrap();
        assert!(c.complete());
        assert_eq!(c.milnor, vec![1, 1, 1]);
        let off = ProjPoint::from_ints(1, 2, 1).unwrap();
        assert!(!chart(&pf, 2, &off).unwrap().is_singular());
        assert!(matches!(
            certify_singularities(&pf, &[off], &Limits::default()),
            Err(Error::NonsingularPoint(_))
        ));
        assert!(matches!(chart(&pf, 0, &o), Err(Error::PointOutsideChart)));
        assert_eq!(ProjPoint::from_ints(2, 4, 2).unwrap(), ProjPoint::from_ints(1, 2, 1).unwrap());
    }

    #[test]
    fn blowups() {
        let radial = LocalFoliation::new(p2("-y").unwrap(), p2("x").unwrap()).unwrap();
        assert!(blowup_chart(&radial).unwrap().dicritical());
        // the separatrices y^2 = c x^2 + x^3 fill every tangent direction
        let suzuki = LocalFoliation::new(p2("2*y^2 + x^3").unwrap(), p2("-2*x*y").unwrap()).unwrap();
        let b = blowup_chart(&suzuki).unwrap();
        assert!(b.dicritical());
        assert_eq!(b.order, 3);
        let om = LocalFoliation::new(p2("-3*y*x^2").unwrap(), p2("-y^2 + 3*x^3").unwrap()).unwrap();
        let b = blowup_chart(&om).unwrap();
        assert!(!b.dicritical());
        assert_eq!((b.p, b.q, b.order), (p2("-y^3").unwrap(), p2("3*x^2 - x*y^2").unwrap(), 2));
    }

    #[test]
    fn invariant_curves() {
        let pf = pencil();
        assert!(curve_invariant(&pf, &p3("y").unwrap()));
        assert!(curve_invariant(&pf, &p3("x - 3*y").unwrap()));
        assert!(!curve_invariant(&pf, &p3("z").unwrap()));
        assert!(!curve_invariant(&pf, &p3("x - z").unwrap()));
    }
}
