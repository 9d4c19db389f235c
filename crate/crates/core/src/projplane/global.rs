//! Global numbers of an invariant curve: genus, Cerveau-Lins Neto,
//! Soares, the global Tjurina formula and the GSV sum.

use rayon::prelude::*;

use super::{certify_singularities, chart, curve_invariant, is_irreducible, local_curve};
use super::{Certification, ProjPoint, ProjectiveFoliation};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::exactalg::gcd::gcd2;
use crate::exactalg::Poly3;
use crate::folocal::{curve_data, profile, IdentityVerdict, Relation};
use crate::localring::milnor_foliation;

/// Local numbers of the curve and of `F` along it at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveAtPoint {
    /// `mu_p(C)`
    pub milnor: u64,
    /// `tau_p(C)`
    pub tjurina: u64,
    /// `r_p`
    pub branches: usize,
    /// `nu_p(C)`
    pub order: u32,
    /// `sum_i mu_p(F, C_i)` over the branches.
    pub branch_mult_sum: i64,
    /// `mu_p(F, C)`
    pub mult: i64,
    /// `tau_p(F, C)`
    pub tjurina_foliation: u64,
    pub gsv: i64,
}

impl CurveAtPoint {
    /// `delta_p = (mu_p + r_p - 1)/2`, if integral.
    pub fn delta(&self) -> Option<i64> {
        let twice = self.milnor as i64 + self.branches as i64 - 1;
        (twice % 2 == 0).then_some(twice / 2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointRecord {
    pub point: ProjPoint,
    pub chart: usize,
    pub milnor_foliation: u64,
    /// `None` when the curve misses the point.
    pub on_curve: Option<CurveAtPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalReport {
    /// `d`
    pub degree: u32,
    /// `d_0`
    pub curve_degree: u32,
    pub points: Vec<PointRecord>,
    pub certification: Certification,
    /// `Some(true)` certified irreducible, `Some(false)` certified reducible.
    pub irreducible: Option<bool>,
    /// The caller vouches for irreducibility.
    pub asserted_irreducible: bool,
    /// Some supplied point has `nu_p(C) = d_0`.
    pub concurrent_lines: bool,
    /// `g(C)`, when `C` is irreducible and the point list complete.
    pub genus: Option<i64>,
}

impl GlobalReport {
    pub fn treated_irreducible(&self) -> bool {
        match self.irreducible {
            Some(v) => v,
            None => self.asserted_irreducible,
        }
    }

    fn on_curve(&self) -> impl Iterator<Item = &CurveAtPoint> {
        self.points.iter().filter_map(|p| p.on_curve.as_ref())
    }

    pub fn sum_branch_mult(&self) -> i64 {
        self.on_curve().map(|c| c.branch_mult_sum).sum()
    }

    pub fn sum_gsv(&self) -> i64 {
        self.on_curve().map(|c| c.gsv).sum()
    }

    /// `tau(F, C)`
    pub fn tjurina_foliation(&self) -> i64 {
        self.on_curve().map(|c| c.tjurina_foliation as i64).sum()
    }

    /// `mu(C)`
    pub fn milnor_curve(&self) -> i64 {
        self.on_curve().map(|c| c.milnor as i64).sum()
    }

    /// `tau(C)`
    pub fn tjurina_curve(&self) -> i64 {
        self.on_curve().map(|c| c.tjurina as i64).sum()
    }

    /// `sum_p (r_p - 1)`
    pub fn extra_branches(&self) -> i64 {
        self.on_curve().map(|c| c.branches as i64 - 1).sum()
    }

    /// `sum_p (nu_p(C) - 1)^2`
    pub fn order_squares(&self) -> i64 {
        self.on_curve().map(|c| (c.order as i64 - 1).pow(2)).sum()
    }

    /// `sum_p (mu_p(C) - 1)` over the singular points of `C`.
    pub fn milnor_excess(&self) -> i64 {
        self.on_curve().filter(|c| c.milnor > 0).map(|c| c.milnor as i64 - 1).sum()
    }

    /// `sum_p delta_p`
    pub fn delta_sum(&self) -> Result<i64> {
        let mut total = 0;
        for p in &self.points {
            if let Some(c) = &p.on_curve {
                total += c.delta().ok_or_else(|| Error::NonIntegerDelta(p.point.to_string()))?;
            }
        }
        Ok(total)
    }

    /// `(d_0 - 1)(d_0 - 2)/2 - sum delta_p`, possibly negative for a
    /// reducible curve.
    pub fn virtual_genus(&self) -> Result<i64> {
        let d0 = self.curve_degree as i64;
        Ok((d0 - 1) * (d0 - 2) / 2 - self.delta_sum()?)
    }
}

fn is_reduced(f: &Poly3) -> bool {
    let g = f.dehomogenize(2);
    let (gx, gy) = g.gradient();
    let d = gcd2(&gcd2(&g, &gx), &gy);
    let z_power = f.terms().map(|(e, _)| e[2]).min().unwrap_or(0);
    d.is_constant() && z_power <= 1
}

/// Numbers of `F` and `C` at `p`, computed in the chart `which`.
pub fn point_record(
    pf: &ProjectiveFoliation,
    fhom: &Poly3,
    p: &ProjPoint,
    which: usize,
    limits: &Limits,
) -> Result<PointRecord> {
    let fol = chart(pf, which, p)?;
    if !fol.is_singular() {
        return Err(Error::NonsingularPoint(p.to_string()));
    }
    let milnor = milnor_foliation(&fol, limits)?;
    let f = local_curve(fhom, which, p)?;
    let on_curve = if !f.constant_term().eq(&Default::default()) {
        None
    } else {
        let pr = profile(&fol, &f, limits)?;
        if pr.gsv() != pr.gsv_polar {
            return Err(Error::Inconsistent(format!(
                "GSV at {p}: {} by branches, {} by polars",
                pr.gsv(),
                pr.gsv_polar
            )));
        }
        let branch_mult_sum = pr
            .curve
            .pieces
            .iter()
            .map(|q| q.size as i64 * q.foliation.as_ref().map_or(0, |x| x.branch_mult as i64))
            .sum();
        Some(CurveAtPoint {
            milnor: pr.curve.milnor,
            tjurina: pr.curve.tjurina,
            branches: pr.curve.branch_count(),
            order: pr.curve.order,
            branch_mult_sum,
            mult: pr.mult,
            tjurina_foliation: pr.tjurina,
            gsv: pr.gsv(),
        })
    };
    Ok(PointRecord {
        point: p.clone(),
        chart: which,
        milnor_foliation: milnor,
        on_curve,
    })
}

/// Everything the global checks need for the invariant reduced curve
/// `fhom = 0` and the supplied singular points of `F`.
pub fn analyze(
    pf: &ProjectiveFoliation,
    fhom: &Poly3,
    points: &[ProjPoint],
    assert_irreducible: bool,
    limits: &Limits,
) -> Result<GlobalReport> {
    if !fhom.is_homogeneous() {
        return Err(Error::InvalidArgument(format!("{fhom} is not homogeneous")));
    }
    let curve_degree = fhom.degree()?;
    if curve_degree == 0 {
        return Err(Error::UnitInput);
    }
    if !is_reduced(fhom) {
        return Err(Error::NotReduced);
    }
    if !curve_invariant(pf, fhom) {
        return Err(Error::NotInvariant(fhom.to_string()));
    }
    let certification = certify_singularities(pf, points, limits)?;
    let records: Vec<PointRecord> = points
        .par_iter()
        .map(|p| point_record(pf, fhom, p, p.default_chart(), limits))
        .collect::<Result<_>>()?;
    let irreducible = is_irreducible(fhom);
    let concurrent_lines = records
        .iter()
        .any(|r| r.on_curve.as_ref().is_some_and(|c| c.order == curve_degree));
    let mut report = GlobalReport {
        degree: pf.degree(),
        curve_degree,
        points: records,
        certification,
        irreducible,
        asserted_irreducible: assert_irreducible,
        concurrent_lines,
        genus: None,
    };
    if report.treated_irreducible() && report.certification.complete() {
        let g = report.virtual_genus()?;
        if g < 0 {
            return Err(Error::NegativeGenus(g));
        }
        report.genus = Some(g);
    }
    Ok(report)
}

/// `g(C)` from the plane curve genus formula; `points` must contain every
/// singular point of the curve.
pub fn genus(fhom: &Poly3, points: &[ProjPoint], limits: &Limits) -> Result<i64> {
    let d0 = fhom.degree()? as i64;
    let mut delta = 0;
    for p in points {
        let f = local_curve(fhom, p.default_chart(), p)?;
        if f.constant_term() != Default::default() {
            continue;
        }
        let c = curve_data(&f, limits)?;
        let twice = c.milnor as i64 + c.branch_count() as i64 - 1;
        if twice % 2 != 0 {
            return Err(Error::NonIntegerDelta(p.to_string()));
        }
        delta += twice / 2;
    }
    let g = (d0 - 1) * (d0 - 2) / 2 - delta;
    if g < 0 {
        return Err(Error::NegativeGenus(g));
    }
    Ok(g)
}

fn needs_complete(v: IdentityVerdict, r: &GlobalReport) -> IdentityVerdict {
    if r.certification.complete() {
        v
    } else {
        v.not_applicable(&format!("singular list incomplete, deficit {}", r.certification.deficit()))
    }
}

/// `2 - 2g(C) = sum_p sum_i mu_p(F, C_i) - d_0 (d - 1)`.
pub fn check_cerveau_linsneto(r: &GlobalReport) -> IdentityVerdict {
    let d = r.degree as i64;
    let d0 = r.curve_degree as i64;
    let rhs = r.sum_branch_mult() - d0 * (d - 1);
    let v = IdentityVerdict::ints("cerveau_linsneto", 2 - 2 * r.genus.unwrap_or(0), rhs, Relation::Eq);
    let v = needs_complete(v, r);
    if r.genus.is_none() && v.status != crate::folocal::Status::NotApplicable {
        return v.not_applicable("curve not known to be irreducible");
    }
    v
}

/// `d_0(d_0 - 1) - sum_p (mu_p(C) - 1) <= (d + 1) d_0`.
pub fn check_soares(r: &GlobalReport) -> IdentityVerdict {
    let d = r.degree as i64;
    let d0 = r.curve_degree as i64;
    let v = IdentityVerdict::ints("soares", d0 * (d0 - 1) - r.milnor_excess(), (d + 1) * d0, Relation::Le);
    if d < 2 || d0 < 2 {
        return v.not_applicable("needs d >= 2 and d_0 >= 2");
    }
    if !r.treated_irreducible() {
        return v.not_applicable("curve not known to be irreducible");
    }
    needs_complete(v, r)
}

/// The global Tjurina formula with its upper and lower bounds. On a
/// reducible curve only the equality runs, as a probe with the virtual
/// genus.
pub fn check_global_tjurina(r: &GlobalReport) -> Vec<IdentityVerdict> {
    let d = r.degree as i64;
    let d0 = r.curve_degree as i64;
    let tau = r.tjurina_foliation();
    let extra = r.extra_branches();
    let irreducible = r.treated_irreducible();
    let g = if irreducible { r.genus } else { r.virtual_genus().ok() };
    let g2 = 2 * g.unwrap_or(0);
    let eq = IdentityVerdict::ints(
        "global_tjurina",
        tau,
        d0 * (d - 1) - g2 - extra - r.milnor_curve() + r.tjurina_curve() + 2,
        Relation::Eq,
    );
    let upper = IdentityVerdict::ints(
        "global_tjurina_upper",
        tau,
        d0 * (d0 - 3) + d * (d + 1) - g2 - extra - r.order_squares() + 3,
        Relation::Le,
    );
    let lower = IdentityVerdict::ints(
        "global_tjurina_lower",
        2 - g2 + d0 / 2 + d - d0 - extra,
        tau,
        Relation::Le,
    );
    let mut out = vec![eq, upper, lower];
    let blocker = if d < 2 || d0 < 2 {
        Some("needs d >= 2 and d_0 >= 2")
    } else if !r.certification.complete() {
        Some("singular list incomplete")
    } else if g.is_none() {
        Some("genus unavailable")
    } else {
        None
    };
    if let Some(why) = blocker {
        return out.into_iter().map(|v| v.not_applicable(why)).collect();
    }
    if !irreducible {
        out[0].note = Some("probe on a reducible curve, irreducibility not met".into());
        out[1] = out[1].clone().not_applicable("curve not known to be irreducible");
        out[2] = out[2].clone().not_applicable("curve not known to be irreducible");
    } else if r.concurrent_lines {
        out[2] = out[2].clone().not_applicable("curve is a union of concurrent lines");
    }
    out
}

/// `sum_p GSV_p(F, C) = (d + 2) d_0 - d_0^2`.
pub fn check_gsv_sum(r: &GlobalReport) -> IdentityVerdict {
    let d = r.degree as i64;
    let d0 = r.curve_degree as i64;
    needs_complete(IdentityVerdict::ints("gsv_sum", r.sum_gsv(), (d + 2) * d0 - d0 * d0, Relation::Eq), r)
}

/// `mu_p(C) <= (d_0 - 1)(d_0 - 2)` at the worst supplied point.
pub fn check_ploski(r: &GlobalReport) -> IdentityVerdict {
    let d0 = r.curve_degree as i64;
    let worst = r
        .points
        .iter()
        .filter_map(|p| p.on_curve.as_ref().map(|c| (c.milnor as i64, &p.point)))
        .max_by_key(|(m, _)| *m);
    let lhs = worst.map_or(0, |(m, _)| m);
    let mut v = IdentityVerdict::ints("ploski", lhs, (d0 - 1) * (d0 - 2), Relation::Le);
    if let Some((_, p)) = worst {
        v = v.with_note(&format!("at {p}"));
    }
    if !r.treated_irreducible() {
        return v.not_applicable("curve not known to be irreducible");
    }
    v
}

pub fn global_checks(r: &GlobalReport) -> Vec<IdentityVerdict> {
    let mut out = vec![check_cerveau_linsneto(r), check_soares(r)];
    out.extend(check_global_tjurina(r));
    out.push(check_gsv_sum(r));
    out.push(check_ploski(r));
    out
}
