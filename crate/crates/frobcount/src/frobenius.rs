//! Frobenius structure on F_p[x_1..x_n]: the free-basis decomposition of
//! F^e_* R, bracket powers and roots, splitting maps theta = Phi^e ∘ u,
//! the compatibility predicate u·J ⊆ J^[q], Fedder's F-purity test, and
//! exhaustive enumeration of compatibly split squarefree monomial ideals.

use crate::error::Error;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::Polynomial;
use crate::ring::Ring;
use std::collections::HashMap;
use std::sync::Arc;

/// Default ceiling on q^n for expansion-driven operations.
pub const DEFAULT_EXPANSION_LIMIT: u64 = 1_000_000;

/// The decomposition f = Σ_a h_a^q · x^a over residues a ∈ [0,q)^n.
#[derive(Clone, Debug)]
pub struct FrobeniusExpansion {
    q: u64,
    parts: HashMap<Monomial, Polynomial>,
}

impl FrobeniusExpansion {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn parts(&self) -> &HashMap<Monomial, Polynomial> {
        &self.parts
    }

    pub fn part(&self, residue: &Monomial) -> Option<&Polynomial> {
        self.parts.get(residue)
    }

    /// Σ_a h_a^q · x^a, which must reproduce the expanded polynomial.
    pub fn reconstruct(&self, ring: &Arc<Ring>, e: u32) -> Result<Polynomial, Error> {
        let mut acc = Polynomial::zero(ring);
        for (a, h) in &self.parts {
            let term = h.frobenius_power(e)?.mul(&Polynomial::monomial(ring, a.clone(), 1))?;
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

/// Unique decomposition of f over the free basis {x^a : a ∈ [0,q)^n} of R
/// over the subring R^q. Each monomial c·x^m contributes c·x^{⌊m/q⌋} to
/// the part at residue m mod q (coefficients are Frobenius-fixed in F_p).
pub fn frobenius_expand(f: &Polynomial, e: u32) -> Result<FrobeniusExpansion, Error> {
    let ring = f.ring().clone();
    let q = ring.field().power(e)?;
    let mut buckets: HashMap<Monomial, Vec<(Monomial, u32)>> = HashMap::new();
    for (m, c) in f.terms() {
        let residue = Monomial::new(m.exps().iter().map(|&x| (x as u64 % q) as u32).collect());
        let quotient = Monomial::new(m.exps().iter().map(|&x| (x as u64 / q) as u32).collect());
        buckets.entry(residue).or_default().push((quotient, *c));
    }
    let parts = buckets
        .into_iter()
        .map(|(a, terms)| (a, Polynomial::from_terms(&ring, terms)))
        .collect();
    Ok(FrobeniusExpansion { q, parts })
}

/// I^[q]: the ideal generated by q-th powers of the generators.
/// Independent of the generating set.
pub fn bracket_power(ideal: &Ideal, e: u32) -> Result<Ideal, Error> {
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.frobenius_power(e))
        .collect::<Result<Vec<_>, _>>()?;
    Ideal::new(ideal.ring(), gens)
}

/// I^{[1/q]}: the smallest ideal J with I ⊆ J^[q], generated by all
/// expansion parts of the generators.
pub fn frobenius_root(ideal: &Ideal, e: u32) -> Result<Ideal, Error> {
    let mut gens = Vec::new();
    for g in ideal.generators() {
        for (_, h) in frobenius_expand(g, e)?.parts() {
            gens.push(h.clone());
        }
    }
    Ideal::new(ideal.ring(), gens)
}

/// A candidate splitting theta = Phi^e ∘ (multiplication by u), where
/// Phi^e is the projection onto the free-basis coordinate of
/// (x_1...x_n)^{q-1}. Every R-linear map F^e_* R -> R has this form.
#[derive(Clone, Debug)]
pub struct SplittingMap {
    ring: Arc<Ring>,
    e: u32,
    u: Polynomial,
    q: u64,
}

impl SplittingMap {
    pub fn new(ring: &Arc<Ring>, e: u32, u: Polynomial) -> Result<Self, Error> {
        Self::with_limit(ring, e, u, DEFAULT_EXPANSION_LIMIT)
    }

    pub fn with_limit(ring: &Arc<Ring>, e: u32, u: Polynomial, limit: u64) -> Result<Self, Error> {
        if e == 0 {
            return Err(Error::Input("Frobenius iterate e must be positive".into()));
        }
        if !u.ring().same_carrier(ring) {
            return Err(Error::RingMismatch);
        }
        let q = ring.field().power(e)?;
        let mut qn: u64 = 1;
        for _ in 0..ring.num_vars() {
            qn = qn.checked_mul(q).ok_or(Error::ExpansionTooLarge(u64::MAX, limit))?;
            if qn > limit {
                return Err(Error::ExpansionTooLarge(qn, limit));
            }
        }
        Ok(SplittingMap { ring: ring.clone(), e, u, q })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn u(&self) -> &Polynomial {
        &self.u
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// theta(f) = Phi^e(u·f): keep the terms c·x^m with
    /// m ≡ (q-1)·(1,..,1) mod q and send them to c·x^{(m-(q-1)·1)/q}.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, Error> {
        if !f.ring().same_carrier(&self.ring) {
            return Err(Error::RingMismatch);
        }
        let prod = self.u.mul(f)?;
        let q = self.q;
        let mut terms = Vec::new();
        for (m, c) in prod.terms() {
            if m.exps().iter().all(|&x| x as u64 % q == q - 1) {
                let exps = m.exps().iter().map(|&x| ((x as u64 - (q - 1)) / q) as u32).collect();
                terms.push((Monomial::new(exps), *c));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// theta splits F^e iff theta(1) = 1; R-linearity then gives
    /// theta(g^q) = g for every g.
    pub fn is_splitting(&self) -> Result<bool, Error> {
        Ok(self.apply(&Polynomial::one(&self.ring))?.is_one())
    }

    /// J is compatibly split: theta(F^e_* J) ⊆ J, decided as u·J ⊆ J^[q].
    /// Computed by two independent routes that must agree:
    ///   (a) membership of u·g in J^[q] for every generator g;
    ///   (b) (u·J)^{[1/q]} ⊆ J via the Frobenius root.
    pub fn is_compatible(&self, j: &Ideal) -> Result<bool, Error> {
        if !j.ring().same_carrier(&self.ring) {
            return Err(Error::RingMismatch);
        }
        let jq = bracket_power(j, self.e)?;
        let mut route_a = true;
        for g in j.generators() {
            if !jq.contains(&self.u.mul(g)?)? {
                route_a = false;
                break;
            }
        }
        let u_ideal = Ideal::new(&self.ring, vec![self.u.clone()])?;
        let uj = u_ideal.product(j)?;
        let route_b = j.contains_ideal(&frobenius_root(&uj, self.e)?)?;
        if route_a != route_b {
            return Err(Error::Input(format!(
                "compatibility routes disagree on {} (membership: {route_a}, root: {route_b})",
                j.render()
            )));
        }
        Ok(route_a)
    }

    /// Every proper squarefree monomial ideal J compatible with this
    /// splitting, including the zero ideal, canonically sorted.
    pub fn enumerate_compatible_squarefree(&self) -> Result<Vec<MonomialIdeal>, Error> {
        if !self.is_splitting()? {
            return Err(Error::NotASplitting);
        }
        let mut out = Vec::new();
        for cand in squarefree_monomial_ideals(self.ring.num_vars()) {
            let ideal = Ideal::from_monomial(&self.ring, &cand);
            if self.is_compatible(&ideal)? {
                out.push(cand);
            }
        }
        // canonical order: fewer generators first, then generator lists in
        // reading order (lower degree, earlier variables first)
        out.sort_by(|a, b| {
            a.min_gens().len().cmp(&b.min_gens().len()).then_with(|| {
                for (x, y) in a.min_gens().iter().zip(b.min_gens()) {
                    let c = crate::monomial::display_cmp(x, y);
                    if c != std::cmp::Ordering::Equal {
                        return c;
                    }
                }
                std::cmp::Ordering::Equal
            })
        });
        Ok(out)
    }
}

/// All proper squarefree monomial ideals in n variables: one per antichain
/// of nonempty variable subsets. The empty antichain is the zero ideal;
/// the antichain {∅} (the unit ideal) is excluded.
pub fn squarefree_monomial_ideals(n: usize) -> Vec<MonomialIdeal> {
    assert!(n <= 5, "antichain enumeration limited to 5 variables");
    let subsets: Vec<u32> = (1..(1u32 << n)).collect();
    let mut out = Vec::new();
    // families of nonempty subsets, filtered to antichains
    for fam in 0u32..(1 << subsets.len()) {
        let chosen: Vec<u32> = subsets
            .iter()
            .enumerate()
            .filter(|(i, _)| fam >> i & 1 == 1)
            .map(|(_, &s)| s)
            .collect();
        let antichain = chosen
            .iter()
            .all(|&a| !chosen.iter().any(|&b| a != b && b & a == b));
        if !antichain {
            continue;
        }
        let gens = chosen
            .iter()
            .map(|&s| {
                Monomial::new((0..n).map(|i| if s >> i & 1 == 1 { 1 } else { 0 }).collect())
            })
            .collect();
        out.push(MonomialIdeal::new(n, gens).unwrap());
    }
    out
}

/// J^{[1/q]} ⊆ J: equivalent to theta(F^e_* J) ⊆ J for every R-linear
/// theta = Phi^e ∘ u.
pub fn is_uniformly_compatible(j: &Ideal, e: u32) -> Result<bool, Error> {
    j.contains_ideal(&frobenius_root(j, e)?)
}

/// Fedder's criterion at the origin: R/I is F-pure iff
/// (I^[p] : I) ⊄ m^[p].
pub fn fedder_is_f_pure(ideal: &Ideal) -> Result<bool, Error> {
    if !ideal.contained_in_maximal() {
        return Err(Error::NotInMaximalIdeal);
    }
    let ring = ideal.ring();
    let colon = bracket_power(ideal, 1)?.colon(ideal)?;
    let m_bracket = bracket_power(&Ideal::maximal(ring), 1)?;
    Ok(!m_bracket.contains_ideal(&colon)?)
}
