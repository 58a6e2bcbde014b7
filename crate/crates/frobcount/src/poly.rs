//! Sparse multivariate polynomials over F_p with terms kept sorted in the
//! ring's monomial order (leading term first).

use crate::error::Error;
use crate::monomial::Monomial;
use crate::ring::Ring;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<Ring>,
    /// Nonzero terms, strictly descending in the ring order.
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: u32) -> Self {
        let c = ring.field().reduce(c as u64);
        if c == 0 {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::one(ring.num_vars()), c)] }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::var(i, ring.num_vars()), 1)] }
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: u32) -> Self {
        let c = ring.field().reduce(c as u64);
        if c == 0 {
            return Self::zero(ring);
        }
        assert_eq!(m.len(), ring.num_vars());
        Polynomial { ring: ring.clone(), terms: vec![(m, c)] }
    }

    /// Build from an unsorted list of (monomial, coefficient) pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms(ring: &Arc<Ring>, terms: Vec<(Monomial, u32)>) -> Self {
        let field = ring.field();
        let mut map: HashMap<Monomial, u32> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.len(), ring.num_vars());
            let e = map.entry(m).or_insert(0);
            *e = field.add(*e, field.reduce(c as u64));
        }
        let mut out: Vec<(Monomial, u32)> = map.into_iter().filter(|&(_, c)| c != 0).collect();
        let order = ring.order();
        out.sort_by(|a, b| order.cmp_unchecked(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_term(&self) -> u32 {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|&(_, c)| c)
            .unwrap_or(0)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<u32> {
        self.terms.first().map(|&(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// True when every term is a bare monomial coefficient aside (used to
    /// recognize monomial ideals from their bases).
    pub fn is_term(&self) -> bool {
        self.terms.len() == 1
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), Error> {
        if !self.ring.same_carrier(&other.ring) || self.ring.order() != other.ring.order() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.check_ring(other)?;
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match order.cmp_unchecked(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(self.terms[i].1, other.terms[j].1);
                    if c != 0 {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial { ring: self.ring.clone(), terms: out })
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(*c))).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.check_ring(other)?;
        let field = self.ring.field();
        let mut map: HashMap<Monomial, u32> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2)?;
                let e = map.entry(m).or_insert(0);
                *e = field.add(*e, field.mul(*c1, *c2));
            }
        }
        let mut out: Vec<(Monomial, u32)> = map.into_iter().filter(|&(_, c)| c != 0).collect();
        let order = self.ring.order();
        out.sort_by(|a, b| order.cmp_unchecked(&b.0, &a.0));
        Ok(Polynomial { ring: self.ring.clone(), terms: out })
    }

    pub fn mul_scalar(&self, c: u32) -> Polynomial {
        let field = self.ring.field();
        let c = field.reduce(c as u64);
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(*a, c))).collect(),
        }
    }

    /// self * c * x^m (the workhorse of polynomial division).
    pub fn mul_term(&self, m: &Monomial, c: u32) -> Result<Polynomial, Error> {
        let field = self.ring.field();
        let c = field.reduce(c as u64);
        if c == 0 {
            return Ok(Polynomial::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, a)| Ok((mm.mul(m)?, field.mul(*a, c))))
            .collect::<Result<_, Error>>()?;
        // multiplying every monomial by a fixed one preserves the order
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn pow(&self, mut e: u64) -> Result<Polynomial, Error> {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// f^{p^e}. Over F_p the Frobenius fixes coefficients, so this scales
    /// every exponent vector by q = p^e.
    pub fn frobenius_power(&self, e: u32) -> Result<Polynomial, Error> {
        let q = self.ring.field().power(e)?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.pow(q)?, *c)))
            .collect::<Result<Vec<_>, Error>>()?;
        // exponent scaling preserves every admissible order
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Same polynomial re-sorted for a ring sharing the carrier but
    /// possibly using a different order.
    pub fn with_ring(&self, ring: &Arc<Ring>) -> Result<Polynomial, Error> {
        if !self.ring.same_carrier(ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial::from_terms(ring, self.terms.clone()))
    }

    /// Prepend `k` zero exponents, moving into `ext` (which must have the
    /// same field and k extra leading variables).
    pub fn embed_front(&self, ext: &Arc<Ring>, k: usize) -> Polynomial {
        assert_eq!(ext.num_vars(), self.ring.num_vars() + k);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; k];
                exps.extend_from_slice(m.exps());
                (Monomial::new(exps), *c)
            })
            .collect();
        Polynomial::from_terms(ext, terms)
    }

    /// Drop the first `k` exponents; every term must avoid those variables.
    pub fn project_front(&self, target: &Arc<Ring>, k: usize) -> Result<Polynomial, Error> {
        assert_eq!(target.num_vars() + k, self.ring.num_vars());
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if m.exps()[..k].iter().any(|&e| e > 0) {
                return Err(Error::Input("polynomial involves an eliminated variable".into()));
            }
            terms.push((Monomial::new(m.exps()[k..].to_vec()), *c));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Keep only the selected ambient variables; exponents outside `keep`
    /// are discarded (the localization image of a monomial). Only valid
    /// for single-term polynomials or when dropped variables are absent.
    pub fn restrict_vars(&self, target: &Arc<Ring>, keep: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let exps = keep.iter().map(|&i| m.exps()[i]).collect();
                (Monomial::new(exps), *c)
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Canonical text form: terms in the ring order, `*` between factors.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let vars = self.ring.vars();
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if *c != 1 || m.is_one() {
                factors.push(c.to_string());
            }
            for (j, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(vars[j].clone()),
                    _ => factors.push(format!("{}^{}", vars[j], e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
