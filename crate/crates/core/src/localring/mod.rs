//! Colengths of ideals in the formal power series ring `Q[[x, y]]`.
//!
//! Every dimension-style invariant (intersection numbers, Milnor and
//! Tjurina numbers of curves and foliations) is a colength. It is computed
//! by exact row reduction in `Q[x,y]/m^(T+1)` for growing `T`, and
//! certified once some power `m^n` with `n <= T` lies in the ideal.

pub(crate) mod echelon;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::exactalg::gcd::{gcd_many, is_local_unit, is_locally_reduced};
use crate::exactalg::rat::{int, Rat};
use crate::exactalg::{resultant_y, Poly2, EXACT};
use crate::folocal::LocalFoliation;
use echelon::{col, col_degree, Echelon, Row};

/// Truncation degrees tried in order before the cap.
const SCHEDULE: [u32; 9] = [6, 10, 16, 24, 36, 54, 80, 120, 180];

/// Generators of an ideal of `Q[[x, y]]`. A generator may be known only
/// modulo `m^k`; `known[i] = EXACT` marks a genuine polynomial.
#[derive(Clone, Debug)]
pub struct LocalIdeal {
    generators: Vec<Poly2>,
    known: Vec<usize>,
}

impl LocalIdeal {
    pub fn new(generators: Vec<Poly2>) -> Result<Self> {
        let n = generators.len();
        Self::with_precision(generators, vec![EXACT; n])
    }

    /// Generators where `known[i]` bounds the degree up to which
    /// `generators[i]` is correct (all terms of degree `< known[i]`).
    pub fn with_precision(generators: Vec<Poly2>, known: Vec<usize>) -> Result<Self> {
        if generators.is_empty() || generators.len() != known.len() {
            return Err(Error::InvalidArgument("an ideal needs generators".into()));
        }
        if generators.iter().any(|g| g.is_zero()) {
            return Err(Error::ZeroPolynomial);
        }
        Ok(LocalIdeal { generators, known })
    }

    pub fn generators(&self) -> &[Poly2] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(is_local_unit)
    }

    fn is_exact(&self) -> bool {
        self.known.iter().all(|&k| k == EXACT)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Colength {
    Finite {
        value: u64,
        /// `m^certificate_degree` was shown to lie in the ideal.
        certificate_degree: u32,
    },
    /// The ideal defines a curve through the origin; `witness` is a common
    /// factor of the generators vanishing there.
    Infinite { witness: Poly2 },
}

impl Colength {
    pub fn value(&self) -> Option<u64> {
        match self {
            Colength::Finite { value, .. } => Some(*value),
            Colength::Infinite { .. } => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Colength::Infinite { .. })
    }
}

/// Outcome at one truncation degree.
enum Attempt {
    Certified { value: u64, degree: u32 },
    Undecided,
}

fn attempt(gens: &[Poly2], t: u32) -> Attempt {
    let mut ech = Echelon::default();
    for g in gens {
        let terms = g.integer_terms();
        let o = g.order().unwrap();
        if o > t {
            continue;
        }
        for s in 0..=(t - o) {
            for j in 0..=s {
                let i = s - j;
                let mut row: Row = terms
                    .iter()
                    .filter(|(e, _)| e[0] + e[1] + s <= t)
                    .map(|(e, c)| (col(e[0] + i, e[1] + j), c.clone()))
                    .collect();
                row.sort_unstable_by_key(|r| r.0);
                ech.insert(row);
            }
        }
    }
    let mut counts = vec![0u32; t as usize + 1];
    for &c in ech.pivot_columns() {
        counts[col_degree(c) as usize] += 1;
    }
    for n in 0..=t {
        if counts[n as usize] == n + 1 {
            let value = (0..n).map(|d| (d + 1 - counts[d as usize]) as u64).sum();
            return Attempt::Certified { value, degree: n };
        }
    }
    Attempt::Undecided
}

/// Colength of `I`, i.e. `dim_Q Q[[x,y]]/I`.
pub fn colength(ideal: &LocalIdeal, degree_cap: u32) -> Result<Colength> {
    if ideal.is_unit() {
        return Ok(Colength::Finite {
            value: 0,
            certificate_degree: 0,
        });
    }
    let mut gens = ideal.generators.clone();
    if ideal.is_exact() {
        let d = gcd_many(gens.iter());
        if !d.is_constant() {
            if !is_local_unit(&d) {
                return Ok(Colength::Infinite { witness: d });
            }
            gens = gens.iter().map(|g| g.exact_div(&d).unwrap()).collect();
        }
    }
    let min_known = ideal.known.iter().copied().min().unwrap_or(EXACT);
    let schedule = SCHEDULE
        .iter()
        .copied()
        .filter(|&t| t < degree_cap)
        .chain(std::iter::once(degree_cap));
    for t in schedule {
        if min_known != EXACT && t as usize > 2 * min_known + 8 {
            break;
        }
        if let Attempt::Certified { value, degree } = attempt(&gens, t) {
            if (degree as usize) + 1 > min_known {
                return Err(Error::PrecisionExhausted(min_known));
            }
            return Ok(Colength::Finite {
                value,
                certificate_degree: degree,
            });
        }
    }
    if min_known != EXACT {
        return Err(Error::PrecisionExhausted(min_known));
    }
    Err(Error::DegreeCapExceeded(degree_cap))
}

fn finite(c: Colength, on_infinite: impl FnOnce(Poly2) -> Error) -> Result<u64> {
    match c {
        Colength::Finite { value, .. } => Ok(value),
        Colength::Infinite { witness } => Err(on_infinite(witness)),
    }
}

/// Colength of the ideal generated by `gens`, all exact.
pub fn colength_of(gens: &[Poly2], limits: &Limits) -> Result<Colength> {
    colength(&LocalIdeal::new(gens.to_vec())?, limits.degree_cap)
}

/// Evidence for an intersection number: the colength and the order of a
/// resultant after the recorded shear `x -> x + shear*y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionCertificate {
    pub value: u64,
    pub certificate_degree: u32,
    pub shear: Rat,
    pub resultant_order: u64,
}

/// Order at `x = 0` of `Res_y(f(x+a*y, y), g(x+a*y, y))`.
pub fn resultant_order(f: &Poly2, g: &Poly2, a: &Rat) -> Option<u64> {
    let m = [[int(1), a.clone()], [int(0), int(1)]];
    let r = resultant_y(&f.linear_change(&m), &g.linear_change(&m));
    r.order().map(|o| o as u64)
}

/// Shears drawn from the seeded sequence, nonzero small integers.
pub fn generic_shears(seed: u64, count: usize) -> Vec<Rat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k: i64 = rng.gen_range(1..=12);
            if rng.gen_bool(0.5) {
                int(k)
            } else {
                int(-k)
            }
        })
        .collect()
}

/// `I_0(f, g)` with the resultant cross-check.
pub fn intersection_certificate(f: &Poly2, g: &Poly2, limits: &Limits) -> Result<IntersectionCertificate> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let c = colength_of(&[f.clone(), g.clone()], limits)?;
    let certificate_degree = match &c {
        Colength::Finite {
            certificate_degree, ..
        } => *certificate_degree,
        Colength::Infinite { witness } => return Err(Error::CommonComponent(witness.to_string())),
    };
    let value = c.value().unwrap();
    if value == 0 {
        return Ok(IntersectionCertificate {
            value,
            certificate_degree,
            shear: int(0),
            resultant_order: 0,
        });
    }
    let mut best = None;
    for a in generic_shears(limits.seed, 6) {
        let Some(r) = resultant_order(f, g, &a) else {
            continue;
        };
        if r < value {
            return Err(Error::Inconsistent(format!(
                "resultant order {} below colength {} for shear {}",
                r, value, a
            )));
        }
        if r == value {
            return Ok(IntersectionCertificate {
                value,
                certificate_degree,
                shear: a,
                resultant_order: r,
            });
        }
        best = Some(r);
    }
    Err(Error::Inconsistent(format!(
        "no shear reproduced intersection number {} (best resultant order {:?})",
        value, best
    )))
}

/// Local intersection number `I_0(f, g)`, cross-checked by resultants.
pub fn intersection_multiplicity(f: &Poly2, g: &Poly2, limits: &Limits) -> Result<u64> {
    intersection_certificate(f, g, limits).map(|c| c.value)
}

fn check_reduced(f: &Poly2) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(Error::UnitInput);
    }
    if !is_locally_reduced(f) {
        return Err(Error::NotReduced);
    }
    Ok(())
}

/// Milnor number `dim Q[[x,y]]/(f_x, f_y)` of a reduced curve germ.
pub fn milnor_curve(f: &Poly2, limits: &Limits) -> Result<u64> {
    check_reduced(f)?;
    let (fx, fy) = f.gradient();
    if fx.is_zero() || fy.is_zero() {
        // f depends on one variable only; reduced forces order one
        let other = if fx.is_zero() { fy } else { fx };
        return finite(colength_of(&[other], limits)?, |_| Error::NonIsolated);
    }
    finite(colength_of(&[fx, fy], limits)?, |_| Error::NonIsolated)
}

/// Tjurina number `dim Q[[x,y]]/(f, f_x, f_y)` of a reduced curve germ.
pub fn tjurina_curve(f: &Poly2, limits: &Limits) -> Result<u64> {
    check_reduced(f)?;
    let (fx, fy) = f.gradient();
    let gens: Vec<Poly2> = [f.clone(), fx, fy].into_iter().filter(|g| !g.is_zero()).collect();
    finite(colength_of(&gens, limits)?, |_| Error::NonIsolated)
}

/// Milnor number `dim Q[[x,y]]/(P, Q)` of a foliation germ.
pub fn milnor_foliation(fol: &LocalFoliation, limits: &Limits) -> Result<u64> {
    let gens: Vec<Poly2> = [fol.p().clone(), fol.q().clone()]
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect();
    finite(colength_of(&gens, limits)?, |_| Error::NotSaturated)
}

/// Tjurina number `dim Q[[x,y]]/(P, Q, f)` of a foliation along an
/// invariant reduced curve.
pub fn tjurina_foliation(fol: &LocalFoliation, f: &Poly2, limits: &Limits) -> Result<u64> {
    check_reduced(f)?;
    if crate::folocal::is_invariant(fol, f).is_none() {
        return Err(Error::NotInvariant(f.to_string()));
    }
    let gens: Vec<Poly2> = [fol.p().clone(), fol.q().clone(), f.clone()]
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect();
    finite(colength_of(&gens, limits)?, |_| Error::NotSaturated)
}

/// Algebraic multiplicity of a curve germ.
pub fn multiplicity_curve(f: &Poly2) -> Result<u32> {
    f.order()
}

/// Algebraic multiplicity `min(ord P, ord Q)` of a foliation germ.
pub fn multiplicity_foliation(fol: &LocalFoliation) -> u32 {
    [fol.p(), fol.q()]
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.order().unwrap())
        .min()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_poly2 as p;

    fn lim() -> Limits {
        Limits::default()
    }

    fn col_of(gens: &[&str]) -> Colength {
        let g: Vec<Poly2> = gens.iter().map(|s| p(s).unwrap()).collect();
        colength_of(&g, &lim()).unwrap()
    }

    #[test]
    fn monomial_ideals() {
        assert_eq!(col_of(&["x", "y"]).value(), Some(1));
        for k in 1..8 {
            assert_eq!(col_of(&["x", &format!("y^{}", k)]).value(), Some(k));
        }
        assert_eq!(col_of(&["x^2", "x*y", "y^3"]).value(), Some(4));
        assert_eq!(col_of(&["1 + x", "y"]).value(), Some(0));
    }

    #[test]
    fn suzuki_milnor() {
        assert_eq!(col_of(&["2*y^2 + x^3", "-2*x*y"]).value(), Some(5));
    }

    #[test]
    fn infinite_detected() {
        let c = col_of(&["x*y", "x*(y - x^2)"]);
        assert!(c.is_infinite());
        // common factor that is a unit at the origin is harmless
        assert_eq!(col_of(&["(1 + x)*x", "(1 + x)*y"]).value(), Some(1));
    }

    #[test]
    fn intersections() {
        let l = lim();
        let i = |a: &str, b: &str| intersection_multiplicity(&p(a).unwrap(), &p(b).unwrap(), &l).unwrap();
        assert_eq!(i("x", "y"), 1);
        assert_eq!(i("x", "y^2 - x^3"), 2);
        assert_eq!(i("y^2 - x^3", "y^2 - x^2 - x^3"), 4);
        assert_eq!(i("y^2 - x^3", "y^3 - x^2"), 4);
        let e = intersection_multiplicity(&p("x*y").unwrap(), &p("x").unwrap(), &l);
        assert!(matches!(e, Err(Error::CommonComponent(_))));
    }

    #[test]
    fn curve_numbers() {
        let l = lim();
        let m = |s: &str| milnor_curve(&p(s).unwrap(), &l).unwrap();
        let t = |s: &str| tjurina_curve(&p(s).unwrap(), &l).unwrap();
        assert_eq!(m("y^2 - x^3"), 2);
        assert_eq!(t("y^2 - x^3"), 2);
        assert_eq!(m("y*(y^2 - x^3)"), 7);
        assert_eq!(m("x*y"), 1);
        assert_eq!(t("x*y"), 1);
        assert_eq!(m("x + y^2"), 0);
        assert!(matches!(milnor_curve(&p("x^2").unwrap(), &l), Err(Error::NotReduced)));
    }

    #[test]
    fn truncated_generators_need_precision() {
        // (x, y^3 + junk of degree >= 4) has colength 3, certified at degree 3
        let g = vec![p("x").unwrap(), p("y^3").unwrap()];
        let ok = LocalIdeal::with_precision(g.clone(), vec![EXACT, 4]).unwrap();
        assert_eq!(colength(&ok, 50).unwrap().value(), Some(3));
        let short = LocalIdeal::with_precision(g, vec![EXACT, 3]).unwrap();
        assert!(matches!(colength(&short, 50), Err(Error::PrecisionExhausted(3))));
    }
}
