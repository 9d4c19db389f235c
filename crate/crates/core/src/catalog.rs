//! Seeded random germs for the property suites: reduced curves composed
//! from a small catalog of branch types, and foliations leaving them
//! invariant.

use std::fmt;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Limits;
use crate::exactalg::gcd::{gcd2, is_local_unit, is_locally_reduced};
use crate::exactalg::rat::{int, rat};
use crate::exactalg::{Poly2, Rat};
use crate::folocal::LocalFoliation;
use crate::localring::{colength_of, Colength};

/// Branch types of the catalog. Cusps are `y^p - x^q` plus terms of
/// weighted degree above `pq`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BranchKind {
    Smooth,
    Cusp23,
    Cusp25,
    Cusp34,
    Cusp37,
    /// Two smooth branches with distinct tangents, as one piece.
    Node,
}

impl BranchKind {
    pub const ALL: [BranchKind; 6] = [
        BranchKind::Smooth,
        BranchKind::Cusp23,
        BranchKind::Cusp25,
        BranchKind::Cusp34,
        BranchKind::Cusp37,
        BranchKind::Node,
    ];

    fn pq(self) -> Option<(u32, u32)> {
        match self {
            BranchKind::Cusp23 => Some((2, 3)),
            BranchKind::Cusp25 => Some((2, 5)),
            BranchKind::Cusp34 => Some((3, 4)),
            BranchKind::Cusp37 => Some((3, 7)),
            _ => None,
        }
    }

    /// Order of the generated piece at the origin.
    pub fn order(self) -> u32 {
        match self {
            BranchKind::Smooth => 1,
            BranchKind::Node => 2,
            k => k.pq().unwrap().0,
        }
    }
}

fn small(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rat {
    int(rng.gen_range(lo..=hi))
}

fn nonzero(rng: &mut ChaCha8Rng, k: i64) -> Rat {
    let v = rng.gen_range(1..=k);
    int(if rng.gen_bool(0.5) { v } else { -v })
}

fn mono(c: Rat, i: u32, j: u32) -> Poly2 {
    Poly2::monomial(c, [i, j])
}

/// `y -> y - a x`, moving the tangent line.
fn tilt(f: &Poly2, a: &Rat) -> Poly2 {
    f.linear_change(&[[int(1), int(0)], [-a.clone(), int(1)]])
}

/// One random piece of the given kind, with rational Puiseux data.
pub fn random_piece(kind: BranchKind, rng: &mut ChaCha8Rng) -> Poly2 {
    let slope = small(rng, -3, 3);
    match kind {
        BranchKind::Smooth => {
            let f = &Poly2::y() - &mono(small(rng, -2, 2), 2, 0);
            tilt(&(&f + &mono(small(rng, -2, 2), 3, 0)), &slope)
        }
        BranchKind::Node => {
            let b = &slope + &nonzero(rng, 3);
            let l1 = &Poly2::y() - &Poly2::x().scale(&slope);
            let l2 = &Poly2::y() - &Poly2::x().scale(&b);
            &(&l1 * &l2) + &mono(small(rng, -2, 2), 3, 0)
        }
        k => {
            let (p, q) = k.pq().unwrap();
            let mut f = &mono(int(1), 0, p) - &mono(int(1), q, 0);
            // terms above the weighted degree pq, with w(x) = p, w(y) = q
            let extra: Vec<(u32, u32)> = (0..=q + 2)
                .flat_map(|i| (0..p).map(move |j| (i, j)))
                .filter(|&(i, j)| i * p + j * q > p * q && i * p + j * q <= p * q + p + q)
                .collect();
            for _ in 0..rng.gen_range(0..=2) {
                let &(i, j) = extra.choose(rng).unwrap();
                f = &f + &mono(small(rng, -2, 2), i, j);
            }
            tilt(&f, &slope)
        }
    }
}

/// A reduced curve composed of catalog pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogCurve {
    pub kinds: Vec<BranchKind>,
    pub pieces: Vec<Poly2>,
    pub f: Poly2,
}

fn coprime(a: &Poly2, b: &Poly2) -> bool {
    let d = gcd2(a, b);
    d.is_constant() || is_local_unit(&d)
}

/// A curve of at most `max_pieces` pieces whose total order stays within
/// `max_order`.
pub fn random_curve(rng: &mut ChaCha8Rng, max_pieces: usize, max_order: u32) -> CatalogCurve {
    loop {
        let n = rng.gen_range(1..=max_pieces);
        let mut kinds = Vec::with_capacity(n);
        let mut pieces: Vec<Poly2> = Vec::with_capacity(n);
        let mut order = 0;
        for _ in 0..n {
            let kind = *BranchKind::ALL.choose(rng).unwrap();
            if order + kind.order() > max_order {
                continue;
            }
            let g = random_piece(kind, rng);
            if pieces.iter().all(|h| coprime(h, &g)) {
                order += kind.order();
                kinds.push(kind);
                pieces.push(g);
            }
        }
        if pieces.is_empty() {
            continue;
        }
        let f = pieces.iter().fold(Poly2::one(), |acc, g| &acc * g);
        if is_locally_reduced(&f) {
            return CatalogCurve { kinds, pieces, f };
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    /// `g df + f eta`, `g` a unit.
    Hamiltonian,
    /// `sum lambda_i (prod_{j != i} f_j) df_i`, `lambda_i > 0`.
    Logarithmic,
}

/// A foliation together with a reduced invariant curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    pub index: usize,
    pub form: FormKind,
    pub curve: CatalogCurve,
    pub foliation: LocalFoliation,
}

impl fmt::Display for Sample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "#{} {:?} f = {}, P = {}, Q = {}",
            self.index,
            self.form,
            self.curve.f,
            self.foliation.p(),
            self.foliation.q()
        )
    }
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: u32, terms: usize) -> Poly2 {
    let mut g = Poly2::zero();
    for _ in 0..terms {
        let d = rng.gen_range(1..=max_deg);
        let i = rng.gen_range(0..=d);
        g = &g + &mono(small(rng, -3, 3), i, d - i);
    }
    g
}

fn hamiltonian(c: &CatalogCurve, rng: &mut ChaCha8Rng) -> (Poly2, Poly2) {
    let g = &Poly2::one() + &random_poly(rng, 1, 1);
    let (fx, fy) = c.f.gradient();
    let e1 = random_poly(rng, 2, 2);
    let e2 = random_poly(rng, 2, 2);
    (&(&g * &fx) + &(&c.f * &e1), &(&g * &fy) + &(&c.f * &e2))
}

fn logarithmic(c: &CatalogCurve, rng: &mut ChaCha8Rng) -> (Poly2, Poly2) {
    let mut p = Poly2::zero();
    let mut q = Poly2::zero();
    for (i, fi) in c.pieces.iter().enumerate() {
        let lambda = rat(rng.gen_range(1..=7), rng.gen_range(1..=3));
        let others = c
            .pieces
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(Poly2::one(), |acc, (_, g)| &acc * g);
        let (gx, gy) = fi.gradient();
        p = &p + &(&others * &gx).scale(&lambda);
        q = &q + &(&others * &gy).scale(&lambda);
    }
    (p, q)
}

/// `count` samples from `seed`, alternating the two constructions. Only
/// saturated forms with an isolated singularity are kept.
pub fn samples(seed: u64, count: usize, limits: &Limits) -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let form = if out.len() % 2 == 0 {
            FormKind::Hamiltonian
        } else {
            FormKind::Logarithmic
        };
        let max_pieces = if form == FormKind::Logarithmic { 3 } else { 2 };
        let curve = random_curve(&mut rng, max_pieces, 5);
        if form == FormKind::Logarithmic && curve.pieces.len() < 2 {
            continue;
        }
        let (p, q) = match form {
            FormKind::Hamiltonian => hamiltonian(&curve, &mut rng),
            FormKind::Logarithmic => logarithmic(&curve, &mut rng),
        };
        if !p.constant_term().is_zero() || !q.constant_term().is_zero() {
            continue;
        }
        let Ok(foliation) = LocalFoliation::new(p.clone(), q.clone()) else {
            continue;
        };
        if !coprime(&p, &q) {
            continue;
        }
        match colength_of(&[p, q], limits) {
            Ok(Colength::Finite { .. }) => {}
            _ => continue,
        }
        out.push(Sample {
            index: out.len(),
            form,
            curve,
            foliation,
        });
    }
    out
}

/// A pair `(f, g)` for intersection tests: `f` a catalog curve, `g` a
/// random polynomial of order at most `max_order`, sharing no component
/// with `f`.
pub fn random_pair(rng: &mut ChaCha8Rng, max_order: u32) -> (Poly2, Poly2) {
    loop {
        let c = random_curve(rng, 2, max_order);
        let terms = rng.gen_range(2..=4);
        let mut g = random_poly(rng, max_order, terms);
        if rng.gen_bool(0.3) {
            // share a tangent with f now and then
            g = &g + &c.pieces[0].scale(&nonzero(rng, 2));
        }
        if g.is_zero() || g.order().map_or(true, |o| o > max_order) {
            continue;
        }
        if coprime(&c.f, &g) {
            return (c.f, g);
        }
    }
}

/// The stream of pairs behind [`random_pair`] for a seed.
pub fn pairs(seed: u64, count: usize, max_order: u32) -> Vec<(Poly2, Poly2)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_pair(&mut rng, max_order)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::folocal::is_invariant;
    use crate::puiseux::branch_decompose;

    #[test]
    fn pieces_have_their_type() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for kind in BranchKind::ALL {
            for _ in 0..5 {
                let f = random_piece(kind, &mut rng);
                assert_eq!(f.order().unwrap(), kind.order(), "{kind:?} {f}");
                let bs = branch_decompose(&f, 64).unwrap();
                let want = if kind == BranchKind::Node { 2 } else { 1 };
                assert_eq!(bs.len(), want, "{kind:?} {f}");
                assert!(bs.iter().all(|b| !b.is_bundle()));
                if let Some((p, q)) = kind.pq() {
                    assert_eq!(bs[0].char_exponents, vec![p, q], "{f}");
                }
            }
        }
    }

    #[test]
    fn samples_are_invariant_and_reproducible() {
        let l = Limits::default();
        let a = samples(11, 12, &l);
        assert_eq!(a, samples(11, 12, &l));
        for s in &a {
            assert!(is_invariant(&s.foliation, &s.curve.f).is_some(), "{s}");
        }
        assert!(a.iter().any(|s| s.form == FormKind::Logarithmic));
    }

    #[test]
    fn pairs_are_coprime() {
        for (f, g) in pairs(3, 20, 6) {
            assert!(coprime(&f, &g));
            assert!(g.order().unwrap() <= 6);
        }
    }
}
