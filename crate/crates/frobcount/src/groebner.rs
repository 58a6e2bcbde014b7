//! Buchberger's algorithm, normal forms, and elimination.
//!
//! Plain Buchberger with the normal pair-selection strategy and the
//! coprimality / chain criteria. Inputs are desk scale; determinism
//! matters more than speed.

use crate::error::Error;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::Ring;
use std::sync::Arc;

/// A reduced, monic Groebner basis. For a fixed ring and order this is a
/// canonical form: two ideals are equal iff their bases coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_one()
    }

    /// Leading monomials of the basis.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().expect("basis elements are nonzero").clone())
            .collect()
    }
}

/// Remainder of `f` on division by `divisors` (top reduction repeated to
/// full normal form). The divisors need not be a Groebner basis; when they
/// are, the remainder is the unique normal form.
pub fn reduce(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial, Error> {
    let ring = f.ring().clone();
    let field = ring.field();
    let order = ring.order();
    let mut rem = Polynomial::zero(&ring);
    let mut work = f.clone();
    'outer: while let Some(lm) = work.leading_monomial().cloned() {
        let lc = work.leading_coeff().unwrap();
        for g in divisors {
            if let Some(glm) = g.leading_monomial() {
                if glm.divides(&lm) {
                    let glc = g.leading_coeff().unwrap();
                    let factor = field.mul(lc, field.inv(glc)?);
                    let quot_m = glm.div(&lm);
                    work = work.sub(&g.mul_term(&quot_m, factor)?)?;
                    continue 'outer;
                }
            }
        }
        // leading term irreducible: move it to the remainder
        let lead = Polynomial::monomial(&ring, lm.clone(), lc);
        rem = rem.add(&lead)?;
        work = work.sub(&lead)?;
        // every remaining term of `work` is below `lm` in the order
        debug_assert!(work
            .leading_monomial()
            .map_or(true, |m| order.cmp_unchecked(m, &lm) == std::cmp::Ordering::Less));
    }
    Ok(rem)
}

/// Normal form of `f` modulo a Groebner basis.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial, Error> {
    if !f.ring().same_carrier(basis.ring()) || f.ring().order() != basis.order() {
        return Err(Error::RingMismatch);
    }
    reduce(f, &basis.elements)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, Error> {
    let field = f.ring().field();
    let (fm, fc) = (f.leading_monomial().unwrap(), f.leading_coeff().unwrap());
    let (gm, gc) = (g.leading_monomial().unwrap(), g.leading_coeff().unwrap());
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.div(&l), field.inv(fc)?)?;
    let b = g.mul_term(&gm.div(&l), field.inv(gc)?)?;
    a.sub(&b)
}

/// Reduced Groebner basis of the ideal generated by `gens`, for the order
/// carried by the generators' ring. Deterministic for a fixed input list.
pub fn buchberger(gens: &[Polynomial]) -> Result<GroebnerBasis, Error> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => panic!("buchberger requires a ring; use buchberger_in for empty input"),
    };
    buchberger_in(&ring, gens)
}

pub fn buchberger_in(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<GroebnerBasis, Error> {
    let order = ring.order();
    for g in gens {
        if !g.ring().same_carrier(ring) || g.ring().order() != order {
            return Err(Error::RingMismatch);
        }
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.clone());
        }
    }

    // pair queue; entries (i, j) with i < j
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm of leading monomials first
        let mut best = 0;
        for k in 1..pairs.len() {
            let lcm_k = pair_lcm(&basis, pairs[k]);
            let lcm_b = pair_lcm(&basis, pairs[best]);
            if order.cmp_unchecked(&lcm_k, &lcm_b) == std::cmp::Ordering::Less {
                best = k;
            }
        }
        let (i, j) = pairs.swap_remove(best);

        let (fi, fj) = (&basis[i], &basis[j]);
        let (mi, mj) = (fi.leading_monomial().unwrap(), fj.leading_monomial().unwrap());
        // first criterion: coprime leading monomials
        if mi.is_coprime(mj) {
            continue;
        }
        // chain criterion: some other basis element divides the lcm and
        // both companion pairs were already handled (not queued)
        let l = mi.lcm(mj);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }

        let s = s_polynomial(fi, fj)?;
        let r = reduce(&s, &basis)?;
        if !r.is_zero() {
            let new_idx = basis.len();
            basis.push(r);
            for i in 0..new_idx {
                pairs.push((i, new_idx));
            }
        }
    }

    // minimalize: drop elements whose leading monomial is divisible by
    // another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && basis[j]
                    .leading_monomial()
                    .unwrap()
                    .divides(basis[i].leading_monomial().unwrap())
            {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();

    // inter-reduce tails and make monic
    let field = ring.field();
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| if j != i { Some(g.clone()) } else { None })
            .collect();
        let r = reduce(&minimal[i], &others)?;
        if !r.is_zero() {
            let inv = field.inv(r.leading_coeff().unwrap())?;
            reduced.push(r.mul_scalar(inv));
        }
    }
    reduced.sort_by(|a, b| {
        order.cmp_unchecked(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });
    Ok(GroebnerBasis { ring: ring.clone(), elements: reduced })
}

/// Basis elements not involving the first `k` variables, re-expressed in
/// the subring on the remaining variables. The input basis must use a
/// block order eliminating those variables (Elim(k) or Lex).
pub fn eliminate(basis: &GroebnerBasis, k: usize, target: &Arc<Ring>) -> Result<Vec<Polynomial>, Error> {
    match basis.order() {
        MonomialOrder::Elim(b) if b >= k => {}
        MonomialOrder::Lex => {}
        _ => return Err(Error::Input("elimination requires a block or lex order".into())),
    }
    let mut out = Vec::new();
    for g in &basis.elements {
        if g.terms().iter().all(|(m, _)| m.exps()[..k].iter().all(|&e| e == 0)) {
            out.push(g.project_front(target, k)?);
        }
    }
    Ok(out)
}

fn pair_lcm(basis: &[Polynomial], (i, j): (usize, usize)) -> Monomial {
    basis[i]
        .leading_monomial()
        .unwrap()
        .lcm(basis[j].leading_monomial().unwrap())
}
