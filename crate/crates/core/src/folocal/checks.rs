//! Exact checkers for the local identities and inequalities.

use std::fmt;

use super::foliation::LocalFoliation;
use super::multiplicity::{mult_along_divisor, SepDivisor};
use super::profile::{CurveProfile, PieceData};
use crate::config::Limits;
use crate::error::Result;
use crate::exactalg::rat::{int, rat};
use crate::exactalg::Rat;
use crate::localring::{milnor_curve, milnor_foliation, tjurina_curve, tjurina_foliation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Eq,
    Lt,
    Le,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Lt => "<",
            Relation::Le => "<=",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Holds,
    Fails,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityVerdict {
    pub name: String,
    pub lhs: Rat,
    pub rhs: Rat,
    pub relation: Relation,
    pub status: Status,
    pub note: Option<String>,
}

impl IdentityVerdict {
    pub fn evaluate(name: &str, lhs: Rat, rhs: Rat, relation: Relation) -> Self {
        let ok = match relation {
            Relation::Eq => lhs == rhs,
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
        };
        IdentityVerdict {
            name: name.to_string(),
            lhs,
            rhs,
            relation,
            status: if ok { Status::Holds } else { Status::Fails },
            note: None,
        }
    }

    pub fn ints(name: &str, lhs: i64, rhs: i64, relation: Relation) -> Self {
        Self::evaluate(name, int(lhs), int(rhs), relation)
    }

    pub fn not_applicable(mut self, why: &str) -> Self {
        self.status = Status::NotApplicable;
        self.note = Some(why.to_string());
        self
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn strict(&self) -> bool {
        self.relation == Relation::Lt
    }

    /// Failed, as opposed to holding or not applying.
    pub fn failed(&self) -> bool {
        self.status == Status::Fails
    }
}

impl fmt::Display for IdentityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let st = match self.status {
            Status::Holds => "holds",
            Status::Fails => "FAILS",
            Status::NotApplicable => "not applicable",
        };
        write!(
            f,
            "{}: {} {} {} ({})",
            self.name,
            crate::exactalg::rat::render(&self.lhs),
            self.relation.symbol(),
            crate::exactalg::rat::render(&self.rhs),
            st
        )?;
        if let Some(n) = &self.note {
            write!(f, " [{n}]")?;
        }
        Ok(())
    }
}

fn fol_piece(p: &PieceData) -> (i64, i64) {
    let pf = p.foliation.as_ref().expect("profile built with a foliation");
    (pf.mult, pf.tjurina as i64)
}

/// `GSV = mu(F, C) - mu(C)` (the left side from polar intersection
/// numbers) and `mu(F, C) - tau(F, C) = mu(C) - tau(C)`.
pub fn check_prop1(pr: &CurveProfile) -> [IdentityVerdict; 2] {
    let c = &pr.curve;
    [
        IdentityVerdict::ints("gsv_difference", pr.gsv_polar, pr.mult - c.milnor as i64, Relation::Eq),
        IdentityVerdict::ints(
            "milnor_minus_tjurina",
            pr.mult - pr.tjurina as i64,
            c.milnor as i64 - c.tjurina as i64,
            Relation::Eq,
        ),
    ]
}

/// `GSV < 4 tau(F, C) - 3 mu(F, C)`, for singular `C`.
pub fn check_coroq(pr: &CurveProfile) -> IdentityVerdict {
    let v = IdentityVerdict::ints(
        "gsv_tjurina_bound",
        pr.gsv(),
        4 * pr.tjurina as i64 - 3 * pr.mult,
        Relation::Lt,
    );
    if pr.curve.milnor == 0 {
        v.not_applicable("C is smooth")
    } else {
        v
    }
}

/// The adjunction formulas over the pieces of `C`: Milnor numbers,
/// multiplicities along the curve (left side from polar intersections),
/// GSV indices, Tjurina numbers with `Theta`, and foliated Tjurina numbers.
pub fn adjunction_suite(pr: &CurveProfile) -> Vec<IdentityVerdict> {
    let c = &pr.curve;
    let r = c.pieces.len() as i64;
    let i2 = c.pair_sum as i64;
    let mu_j: i64 = c.pieces.iter().map(|p| p.milnor as i64).sum();
    let tau_j: i64 = c.pieces.iter().map(|p| p.tjurina as i64).sum();
    let mf_j: i64 = c.pieces.iter().map(|p| fol_piece(p).0).sum();
    let tf_j: i64 = c.pieces.iter().map(|p| fol_piece(p).1).sum();
    let gsv_j: i64 = c.pieces.iter().map(|p| fol_piece(p).0 - p.milnor as i64).sum();
    let theta = c.theta();
    vec![
        IdentityVerdict::ints("milnor_adjunction", c.milnor as i64, mu_j + 2 * i2 - r + 1, Relation::Eq),
        IdentityVerdict::ints(
            "multiplicity_adjunction",
            pr.mult_polar,
            mf_j - r + 1,
            Relation::Eq,
        ),
        IdentityVerdict::ints("gsv_adjunction", pr.gsv_polar, gsv_j - 2 * i2, Relation::Eq),
        IdentityVerdict::ints("tjurina_adjunction", c.tjurina as i64, tau_j + i2 + theta, Relation::Eq)
            .with_note("Theta is the residual of this formula"),
        IdentityVerdict::ints("foliated_tjurina_adjunction", pr.tjurina as i64, tf_j - i2 + theta, Relation::Eq),
    ]
}

/// `sum_j (mu(F, C_j) - tau(F, C_j)) <= mu(F, C) - tau(F, C)`.
pub fn check_branch_sum_inequality(pr: &CurveProfile) -> IdentityVerdict {
    let lhs: i64 = pr.curve.pieces.iter().map(|p| fol_piece(p).0 - fol_piece(p).1).sum();
    IdentityVerdict::ints("piece_sum", lhs, pr.mult - pr.tjurina as i64, Relation::Le)
}

/// `tau(F, C) >= 1` at a singular point.
pub fn check_tjurina_positive(pr: &CurveProfile) -> IdentityVerdict {
    let v = IdentityVerdict::ints("tjurina_positive", 1, pr.tjurina as i64, Relation::Le);
    if pr.singular {
        v
    } else {
        v.not_applicable("the origin is a regular point")
    }
}

/// `(nu(C) - 1)^2 <= mu(C)`.
pub fn check_milnor_order(pr: &CurveProfile) -> IdentityVerdict {
    let nu = pr.curve.order as i64;
    IdentityVerdict::ints("milnor_order_bound", (nu - 1) * (nu - 1), pr.curve.milnor as i64, Relation::Le)
}

/// `mu(C) - tau(C) < mu(C)/4` for singular `C`.
pub fn check_almiron(pr: &CurveProfile) -> IdentityVerdict {
    let c = &pr.curve;
    let v = IdentityVerdict::evaluate(
        "milnor_tjurina_quarter",
        int(c.milnor as i64 - c.tjurina as i64),
        rat(c.milnor as i64, 4),
        Relation::Lt,
    );
    if c.milnor == 0 {
        v.not_applicable("C is smooth")
    } else {
        v
    }
}

/// Every check on one invariant curve.
pub fn curve_checks(pr: &CurveProfile) -> Vec<IdentityVerdict> {
    let mut out: Vec<IdentityVerdict> = check_prop1(pr).into_iter().collect();
    out.push(check_coroq(pr));
    out.extend(adjunction_suite(pr));
    out.push(check_branch_sum_inequality(pr));
    out.push(check_tjurina_positive(pr));
    out.push(check_milnor_order(pr));
    out.push(check_almiron(pr));
    out
}

/// Numbers of `F` against a divisor of separatrices `B = B_0 - B_inf`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorProfile {
    pub milnor: u64,
    /// `mu(F, B)`, `mu(F, B_0)`, `mu(F, B_inf)`.
    pub mult: i64,
    pub mult_positive: i64,
    pub mult_negative: i64,
    /// `mu(F) - mu(F, B)`.
    pub chi: i64,
    /// `mu(B_0)`, `tau(B_0)`, `tau(F, B_0)`; absent for empty `B_0`.
    pub positive: Option<(u64, u64, u64)>,
    pub effective: bool,
    pub primitive: bool,
}

pub fn divisor_profile(fol: &LocalFoliation, d: &SepDivisor, limits: &Limits) -> Result<DivisorProfile> {
    let b0 = d.positive();
    let positive = if b0.is_empty() {
        None
    } else {
        let f = b0.support();
        Some((
            milnor_curve(&f, limits)?,
            tjurina_curve(&f, limits)?,
            tjurina_foliation(fol, &f, limits)?,
        ))
    };
    let milnor = milnor_foliation(fol, limits)?;
    let mult = mult_along_divisor(fol, d, limits)?;
    Ok(DivisorProfile {
        milnor,
        mult,
        mult_positive: mult_along_divisor(fol, &b0, limits)?,
        mult_negative: mult_along_divisor(fol, &d.negative(), limits)?,
        chi: milnor as i64 - mult,
        positive,
        effective: d.is_effective(),
        primitive: d.is_primitive(),
    })
}

/// `mu(F, B) = mu(F, B_0) - mu(F, B_inf) + 1`.
pub fn check_divisor_split(dp: &DivisorProfile) -> IdentityVerdict {
    IdentityVerdict::ints("divisor_split", dp.mult, dp.mult_positive - dp.mult_negative + 1, Relation::Eq)
}

/// `chi >= 0`, which every balanced divisor satisfies.
pub fn check_chi_sign(dp: &DivisorProfile) -> IdentityVerdict {
    IdentityVerdict::ints("chi_nonnegative", 0, dp.chi, Relation::Le)
}

/// `mu(F) - tau(F, B_0) = mu(B_0) - tau(B_0) - mu(F, B_inf) + chi + 1`, and
/// for effective `B` the equivalence `mu(F) = tau(F, B_0)` iff
/// `mu(B_0) = tau(B_0)` and `chi = 0`.
pub fn check_iguales(dp: &DivisorProfile) -> Vec<IdentityVerdict> {
    let Some((mb, tb, tfb)) = dp.positive else {
        let v = IdentityVerdict::ints("balanced_identity", 0, 0, Relation::Eq);
        return vec![v.not_applicable("B_0 is empty")];
    };
    let mut out = vec![IdentityVerdict::ints(
        "balanced_identity",
        dp.milnor as i64 - tfb as i64,
        mb as i64 - tb as i64 - dp.mult_negative + dp.chi + 1,
        Relation::Eq,
    )];
    let left = (dp.milnor == tfb) as i64;
    let right = (mb == tb && dp.chi == 0) as i64;
    let eqv = IdentityVerdict::ints("balanced_equivalence", left, right, Relation::Eq);
    out.push(if dp.effective {
        eqv
    } else {
        eqv.not_applicable("B is not effective")
    });
    out
}

/// Ratio bound `mu(F) / (tau(F, B_0) + chi - mu(F, B_inf) + 1) < 4/3`.
/// For effective primitive `B` this is the plain ratio
/// `mu(F) / (tau(F, B) + chi)`; otherwise `mu(B_0) <= mu(F)` is required.
pub fn check_ratio_bound(dp: &DivisorProfile) -> IdentityVerdict {
    let four_thirds = rat(4, 3);
    let Some((mb, _, tfb)) = dp.positive else {
        return IdentityVerdict::evaluate("ratio_bound", int(0), four_thirds, Relation::Lt)
            .not_applicable("B_0 is empty");
    };
    let den = tfb as i64 + dp.chi - dp.mult_negative + 1;
    if den <= 0 {
        return IdentityVerdict::evaluate("ratio_bound", int(0), four_thirds, Relation::Lt)
            .not_applicable("nonpositive denominator");
    }
    let ratio = rat(dp.milnor as i64, den);
    let v = IdentityVerdict::evaluate("ratio_bound", ratio, four_thirds, Relation::Lt);
    if dp.effective && dp.primitive {
        v
    } else if mb > dp.milnor {
        v.not_applicable(&format!("needs mu(B_0) <= mu(F), have {} > {}", mb, dp.milnor))
    } else {
        v
    }
}

pub fn divisor_checks(dp: &DivisorProfile) -> Vec<IdentityVerdict> {
    let mut out = vec![check_divisor_split(dp), check_chi_sign(dp)];
    out.extend(check_iguales(dp));
    out.push(check_ratio_bound(dp));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_poly2 as p;
    use crate::folocal::profile;

    fn suzuki() -> LocalFoliation {
        LocalFoliation::new(p("2*y^2 + x^3").unwrap(), p("-2*x*y").unwrap()).unwrap()
    }

    fn f3() -> LocalFoliation {
        LocalFoliation::new(
            p("y*(2*x^4 + 4*x^2*y - y^2)").unwrap(),
            p("x*(y^2 - 2*x^2*y - x^4)").unwrap(),
        )
        .unwrap()
    }

    fn all_ok(vs: &[IdentityVerdict]) {
        for v in vs {
            assert!(!v.failed(), "{v}");
        }
    }

    #[test]
    fn suzuki_curves() {
        let l = Limits::default();
        let pr = profile(&suzuki(), &p("x").unwrap(), &l).unwrap();
        let [a, b] = check_prop1(&pr);
        assert!(a.holds() && b.holds());
        assert_eq!(check_coroq(&pr).status, Status::NotApplicable);
        let pr = profile(&suzuki(), &p("x*(y^2 - x^3)*(y^2 - x^2 - x^3)").unwrap(), &l).unwrap();
        let vs = curve_checks(&pr);
        all_ok(&vs);
        assert_eq!(vs[1].lhs, int(2));
        let cusp = profile(&suzuki(), &p("y^2 - x^3").unwrap(), &l).unwrap();
        let c = check_coroq(&cusp);
        assert!(c.holds());
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (int(2), int(4)));
    }

    #[test]
    fn suzuki_divisor() {
        let l = Limits::default();
        let b = SepDivisor::new(vec![
            (p("x*(y^2 - x^3)*(y^2 - x^2 - x^3)").unwrap(), 1),
            (p("y^2 - 2*x^2 - x^3").unwrap(), -1),
        ])
        .unwrap();
        let dp = divisor_profile(&suzuki(), &b, &l).unwrap();
        assert_eq!((dp.milnor, dp.mult, dp.mult_negative, dp.chi), (5, 5, 3, 0));
        assert_eq!(dp.positive, Some((17, 15, 5)));
        let vs = divisor_checks(&dp);
        all_ok(&vs);
        let r = check_ratio_bound(&dp);
        assert_eq!(r.status, Status::NotApplicable);
        assert_eq!(r.lhs, rat(5, 3));
    }

    #[test]
    fn fk_checks() {
        let l = Limits::default();
        let pr = profile(&f3(), &p("x*y").unwrap(), &l).unwrap();
        let vs = curve_checks(&pr);
        all_ok(&vs);
        let c = check_coroq(&pr);
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (int(6), int(7)));
        let dp = divisor_profile(&f3(), &SepDivisor::of_curve(p("x*y").unwrap()).unwrap(), &l).unwrap();
        let vs = divisor_checks(&dp);
        all_ok(&vs);
        let r = check_ratio_bound(&dp);
        assert!(r.holds());
        assert_eq!(r.lhs, int(1));
    }

    #[test]
    fn smooth_trivial() {
        let l = Limits::default();
        let dy = LocalFoliation::new(p("0").unwrap(), p("1").unwrap()).unwrap();
        let dp = divisor_profile(&dy, &SepDivisor::of_curve(p("y").unwrap()).unwrap(), &l).unwrap();
        let v = &check_iguales(&dp)[0];
        assert!(v.holds());
        assert_eq!(v.lhs, int(0));
    }
}
