//! The logarithmic family `lambda_1 G dy + lambda_2 y dG` with
//! `G = y^n z - zeta x^(n+1)`, whose only singular point `[0:0:1]` is
//! non-dicritical with `mu_p(F) = mu_p(C) = n^2 + n + 1`.

use num_traits::Zero;

use super::global::{analyze, check_gsv_sum};
use super::{blowup_chart, chart, curve_invariant, ProjPoint, ProjectiveFoliation};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::exactalg::rat::int;
use crate::exactalg::{Poly3, Rat};
use crate::folocal::{IdentityVerdict, Relation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlcantaraExample {
    pub n: u32,
    pub zeta: Rat,
    pub lambda1: Rat,
    pub lambda2: Rat,
    pub foliation: ProjectiveFoliation,
    /// `G = y^n z - zeta x^(n+1)`
    pub component: Poly3,
    /// `y G`
    pub curve: Poly3,
}

fn mono(c: Rat, e: [u32; 3]) -> Poly3 {
    Poly3::monomial(c, e)
}

/// The member with `lambda_1 = -(n+1) lambda_2`, which makes the form
/// homogeneous of degree `n + 1` with the Euler relation.
pub fn alcantara_family(n: u32, zeta: Rat, lambda2: Rat) -> Result<AlcantaraExample> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n = {n}, need n >= 2")));
    }
    if zeta.is_zero() || lambda2.is_zero() {
        return Err(Error::InvalidArgument("zeta and lambda_2 must be nonzero".into()));
    }
    let n1 = int(n as i64 + 1);
    let lambda1 = -(&lambda2 * &n1);
    let a = mono(-(&zeta * &n1 * &lambda2), [n, 1, 0]);
    let b = &mono(&lambda1 + &lambda2 * int(n as i64), [0, n, 1]) + &mono(-(&zeta * &lambda1), [n + 1, 0, 0]);
    let c = mono(lambda2.clone(), [0, n + 1, 0]);
    let foliation = ProjectiveFoliation::new(a, b, c)?;
    let component = &mono(int(1), [0, n, 1]) + &mono(-zeta.clone(), [n + 1, 0, 0]);
    let curve = &Poly3::var(1) * &component;
    Ok(AlcantaraExample {
        n,
        zeta,
        lambda1,
        lambda2,
        foliation,
        component,
        curve,
    })
}

fn flag(name: &str, ok: bool) -> IdentityVerdict {
    IdentityVerdict::ints(name, ok as i64, 1, Relation::Eq)
}

/// Every listed property of the family member, one verdict each.
pub fn verify_alcantara(ex: &AlcantaraExample, limits: &Limits) -> Result<Vec<IdentityVerdict>> {
    let n = ex.n as i64;
    let expected = n * n + n + 1;
    let pf = &ex.foliation;
    let [a, b, c] = pf.coefficients();
    let euler = &(&(&Poly3::var(0) * a) + &(&Poly3::var(1) * b)) + &(&Poly3::var(2) * c);
    let mut out = vec![
        IdentityVerdict::ints("euler_terms", euler.len() as i64, 0, Relation::Eq),
        IdentityVerdict::ints("degree", pf.degree() as i64, n, Relation::Eq),
        flag("curve_invariant", curve_invariant(pf, &ex.curve)),
    ];
    // lambda_1 G dy + lambda_2 y dG, coefficient by coefficient
    let y = Poly3::var(1);
    let g = &ex.component;
    let log = [
        &y * &g.derivative(0).scale(&ex.lambda2),
        &g.scale(&ex.lambda1) + &(&y * &g.derivative(1).scale(&ex.lambda2)),
        &y * &g.derivative(2).scale(&ex.lambda2),
    ];
    let mismatches = log.iter().zip(pf.coefficients()).filter(|(l, c)| l != c).count();
    out.push(IdentityVerdict::ints("logarithmic_form", mismatches as i64, 0, Relation::Eq));

    let p = ProjPoint::from_ints(0, 0, 1)?;
    let report = analyze(pf, &ex.curve, std::slice::from_ref(&p), false, limits)?;
    out.push(flag("singular_set_complete", report.certification.complete()));
    out.push(IdentityVerdict::ints(
        "milnor_foliation",
        report.points[0].milnor_foliation as i64,
        expected,
        Relation::Eq,
    ));
    let at = report.points[0]
        .on_curve
        .as_ref()
        .ok_or_else(|| Error::Inconsistent("the curve misses [0:0:1]".into()))?;
    out.push(IdentityVerdict::ints("milnor_curve", at.milnor as i64, expected, Relation::Eq));
    out.push(IdentityVerdict::ints("tjurina_curve", at.tjurina as i64, at.milnor as i64, Relation::Eq));
    out.push(flag("non_dicritical", !blowup_chart(&chart(pf, 2, &p)?)?.dicritical()));
    out.push(check_gsv_sum(&report));
    Ok(out)
}

/// For an irreducible invariant curve of degree `d_0 = d + 2` the bound
/// `mu_p(C) <= (d_0 - 1)(d_0 - 2)` would need `d^2 + d + 1 <= d^2 + d`;
/// the verdict fails for every `d`.
pub fn irreducible_bound_contradiction(d: u32) -> IdentityVerdict {
    let d = d as i64;
    let d0 = d + 2;
    IdentityVerdict::ints("irreducible_bound", d * d + d + 1, (d0 - 1) * (d0 - 2), Relation::Le)
}
