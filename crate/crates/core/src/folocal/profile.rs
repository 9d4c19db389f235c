//! Numbers attached to an invariant curve: per piece, pairwise and global.
//!
//! A piece is an explicit branch or a whole conjugate bundle; the
//! adjunction formulas hold for any decomposition of `C` into pieces.

use super::foliation::{is_invariant, LocalFoliation};
use super::multiplicity::{mult_along_branch, mult_along_divisor, SepDivisor};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::exactalg::rat::int;
use crate::exactalg::{Poly2, EXACT};
use crate::localring::{
    colength, colength_of, milnor_curve, milnor_foliation, tjurina_curve,
    tjurina_foliation, Colength, LocalIdeal,
};
use crate::puiseux::{branch_intersection, semigroup, with_branches, Branch};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceData {
    /// Analytic branches in the piece.
    pub size: usize,
    pub milnor: u64,
    pub tjurina: u64,
    pub foliation: Option<PieceFoliation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceFoliation {
    /// `mu_p(F, B)` for each branch of the piece (all equal for a bundle).
    pub branch_mult: u64,
    /// `mu_p(F, C_j)` with `C_j` the piece.
    pub mult: i64,
    /// `tau_p(F, C_j)`.
    pub tjurina: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveData {
    pub f: Poly2,
    pub pieces: Vec<PieceData>,
    /// `sum_{i<j} I(C_i, C_j)` over pieces.
    pub pair_sum: u64,
    pub milnor: u64,
    pub tjurina: u64,
    /// Algebraic multiplicity `nu_p(C)`.
    pub order: u32,
}

/// A curve together with an invariant foliation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveProfile {
    pub curve: CurveData,
    /// `mu_p(F, C)` from the branch multiplicities.
    pub mult: i64,
    /// `tau_p(F, C)`.
    pub tjurina: u64,
    /// `mu_p(F, C)` and `GSV_p(F, C)` from polar intersection numbers.
    pub mult_polar: i64,
    pub gsv_polar: i64,
    pub singular: bool,
}

impl CurveData {
    pub fn branch_count(&self) -> usize {
        self.pieces.iter().map(|p| p.size).sum()
    }

    /// `Theta = tau(C) - sum tau(C_j) - sum_{i<j} I(C_i, C_j)`.
    pub fn theta(&self) -> i64 {
        self.tjurina as i64
            - self.pieces.iter().map(|p| p.tjurina as i64).sum::<i64>()
            - self.pair_sum as i64
    }
}

impl CurveProfile {
    pub fn gsv(&self) -> i64 {
        self.mult - self.curve.milnor as i64
    }
}

/// Colength of `gens`, where `gens[i]` is correct below degree `known[i]`.
fn colength_known(gens: Vec<Poly2>, known: Vec<usize>, limits: &Limits) -> Result<u64> {
    let (gens, known): (Vec<_>, Vec<_>) = gens
        .into_iter()
        .zip(known)
        .filter(|(g, _)| !g.is_zero())
        .unzip();
    match colength(&LocalIdeal::with_precision(gens, known)?, limits.degree_cap)? {
        Colength::Finite { value, .. } => Ok(value),
        Colength::Infinite { .. } => Err(Error::NonIsolated),
    }
}

fn less_one(k: usize) -> usize {
    if k == EXACT {
        EXACT
    } else {
        k.saturating_sub(1)
    }
}

fn piece_curve_numbers(b: &Branch, limits: &Limits) -> Result<(u64, u64)> {
    let k = b.equation_known;
    if k == EXACT {
        return Ok((milnor_curve(&b.equation, limits)?, tjurina_curve(&b.equation, limits)?));
    }
    let (fx, fy) = b.equation.gradient();
    let mu = if b.is_bundle() {
        colength_known(vec![fx.clone(), fy.clone()], vec![less_one(k); 2], limits)?
    } else {
        semigroup(b)?.conductor
    };
    let tau = colength_known(vec![b.equation.clone(), fx, fy], vec![k, less_one(k), less_one(k)], limits)?;
    Ok((mu, tau))
}

fn pieces_of(bs: &[Branch], fol: Option<&LocalFoliation>, limits: &Limits) -> Result<(Vec<PieceData>, u64)> {
    let mut pieces = Vec::with_capacity(bs.len());
    for b in bs {
        let (milnor, tjurina) = piece_curve_numbers(b, limits)?;
        let foliation = match fol {
            None => None,
            Some(fol) => {
                let m = mult_along_branch(fol, b, limits)?;
                let s = b.bundle_size as i64;
                let tj = colength_known(
                    vec![fol.p().clone(), fol.q().clone(), b.equation.clone()],
                    vec![EXACT, EXACT, b.equation_known],
                    limits,
                )?;
                Some(PieceFoliation {
                    branch_mult: m,
                    mult: s * (m as i64 - 1) + 1,
                    tjurina: tj,
                })
            }
        };
        pieces.push(PieceData {
            size: b.bundle_size,
            milnor,
            tjurina,
            foliation,
        });
    }
    let mut pair_sum = 0;
    for i in 0..bs.len() {
        for j in i + 1..bs.len() {
            pair_sum += branch_intersection(&bs[i], &bs[j])?;
        }
    }
    Ok((pieces, pair_sum))
}

/// Curve numbers of a reduced germ `f` with `f(0) = 0`.
pub fn curve_data(f: &Poly2, limits: &Limits) -> Result<CurveData> {
    curve_data_with(f, None, limits)
}

fn curve_data_with(f: &Poly2, fol: Option<&LocalFoliation>, limits: &Limits) -> Result<CurveData> {
    let milnor = milnor_curve(f, limits)?;
    let tjurina = tjurina_curve(f, limits)?;
    let (pieces, pair_sum) = with_branches(f, limits, |bs| pieces_of(bs, fol, limits))?;
    Ok(CurveData {
        f: f.clone(),
        pieces,
        pair_sum,
        milnor,
        tjurina,
        order: f.order()?,
    })
}

/// `(mu_p(F, C), GSV_p(F, C))` from intersection numbers:
/// `I(f, aP + Q) - I(f, x - a y) + 1` and `I(f, aP + Q) - I(f, a f_x + f_y)`
/// for the first `a` in `0, 1, -1, 2, ...` with `x - a y` not a component
/// of `f`.
pub fn polar_numbers(fol: &LocalFoliation, f: &Poly2, limits: &Limits) -> Result<(i64, i64)> {
    let (fx, fy) = f.gradient();
    for k in 0..16i64 {
        let a = int(if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) });
        let line = &Poly2::x() - &Poly2::y().scale(&a);
        if f.exact_div(&line).is_some() {
            continue;
        }
        let coeff = &fol.p().scale(&a) + fol.q();
        let polar = &fx.scale(&a) + &fy;
        let meet = |g: &Poly2| -> Result<i64> {
            if g.constant_term() != int(0) {
                Ok(0)
            } else {
                match colength_of(&[f.clone(), g.clone()], limits)? {
                    Colength::Finite { value, .. } => Ok(value as i64),
                    Colength::Infinite { witness } => Err(Error::CommonComponent(witness.to_string())),
                }
            }
        };
        let i1 = meet(&coeff)?;
        return Ok((i1 - meet(&line)? + 1, i1 - meet(&polar)?));
    }
    Err(Error::Inconsistent("every tried line is a component".into()))
}

/// `GSV_p(F, C)` by [`polar_numbers`].
pub fn gsv_polar(fol: &LocalFoliation, f: &Poly2, limits: &Limits) -> Result<i64> {
    Ok(polar_numbers(fol, f, limits)?.1)
}

/// All local numbers of `F` along the reduced invariant curve `f`.
pub fn profile(fol: &LocalFoliation, f: &Poly2, limits: &Limits) -> Result<CurveProfile> {
    if is_invariant(fol, f).is_none() {
        return Err(Error::NotInvariant(f.to_string()));
    }
    let curve = curve_data_with(f, Some(fol), limits)?;
    let mult = curve
        .pieces
        .iter()
        .map(|p| p.foliation.as_ref().unwrap().mult)
        .sum::<i64>()
        - curve.pieces.len() as i64
        + 1;
    let (mult_polar, gsv_polar) = polar_numbers(fol, f, limits)?;
    Ok(CurveProfile {
        mult,
        tjurina: tjurina_foliation(fol, f, limits)?,
        mult_polar,
        gsv_polar,
        singular: fol.is_singular(),
        curve,
    })
}

/// `GSV_p(F, C) = mu_p(F, C) - mu_p(C)`.
pub fn gsv(fol: &LocalFoliation, f: &Poly2, limits: &Limits) -> Result<i64> {
    let m = mult_along_divisor(fol, &SepDivisor::of_curve(f.clone())?, limits)?;
    Ok(m - milnor_curve(f, limits)? as i64)
}

/// `Theta` of the Tjurina adjunction formula, as a residual.
pub fn theta_residual(f: &Poly2, limits: &Limits) -> Result<i64> {
    Ok(curve_data(f, limits)?.theta())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chi {
    pub value: i64,
    /// Set when the value is negative, so the divisor cannot be balanced.
    pub warning: Option<String>,
}

/// `chi_p(F) = mu_p(F) - mu_p(F, B)` for a divisor asserted balanced.
pub fn chi(fol: &LocalFoliation, balanced: &SepDivisor, limits: &Limits) -> Result<Chi> {
    let value = milnor_foliation(fol, limits)? as i64 - mult_along_divisor(fol, balanced, limits)?;
    let warning = (value < 0).then(|| format!("chi = {value} < 0: the divisor is not balanced"));
    Ok(Chi { value, warning })
}
