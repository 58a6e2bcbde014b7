//! Finitely generated ideals with a lazily cached reduced Groebner basis,
//! and the ideal-level arithmetic built on the Groebner engine.

use crate::error::Error;
use crate::groebner::{buchberger_in, eliminate, normal_form, reduce, GroebnerBasis};
use crate::monomial::{Monomial, MonomialOrder};
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::Polynomial;
use crate::ring::Ring;
use std::sync::{Arc, OnceLock};

/// User assertions about an ideal that the library cannot (or will not)
/// decide for general inputs. For monomial ideals every flag is verified
/// combinatorially.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DeclaredFlags {
    pub prime: bool,
    pub radical: bool,
    pub equidimensional: bool,
}

#[derive(Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    flags: DeclaredFlags,
    basis_cache: OnceLock<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(b) = self.basis_cache.get() {
            let _ = cache.set(b.clone());
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), flags: self.flags, basis_cache: cache }
    }
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Self, Error> {
        for g in &gens {
            if !g.ring().same_carrier(ring) || g.ring().order() != ring.order() {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ideal { ring: ring.clone(), gens, flags: DeclaredFlags::default(), basis_cache: OnceLock::new() })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn with_flags(mut self, flags: DeclaredFlags) -> Self {
        self.flags = flags;
        self
    }

    pub fn from_monomial(ring: &Arc<Ring>, m: &MonomialIdeal) -> Self {
        Ideal::new(ring, m.generators_as_polynomials(ring)).unwrap()
    }

    /// The maximal ideal generated by all variables.
    pub fn maximal(ring: &Arc<Ring>) -> Self {
        let gens = (0..ring.num_vars()).map(|i| Polynomial::var(ring, i)).collect();
        Ideal::new(ring, gens).unwrap()
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn flags(&self) -> DeclaredFlags {
        self.flags
    }

    /// Reduced Groebner basis for the ring's own order, computed once.
    pub fn basis(&self) -> &GroebnerBasis {
        self.basis_cache
            .get_or_init(|| buchberger_in(&self.ring, &self.gens).expect("generators share the ideal's ring"))
    }

    pub fn is_zero(&self) -> bool {
        self.basis().is_zero_ideal()
    }

    pub fn is_unit(&self) -> bool {
        self.basis().is_unit_ideal()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// Contained in the maximal ideal at the origin: no basis element has
    /// a nonzero constant term (for a proper ideal this is automatic
    /// unless a unit sneaks in, but generators are checked directly).
    pub fn contained_in_maximal(&self) -> bool {
        self.gens.iter().all(|g| g.constant_term() == 0)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, Error> {
        Ok(normal_form(f, self.basis())?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool, Error> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals via the canonical reduced basis.
    pub fn equal(&self, other: &Ideal) -> Result<bool, Error> {
        if !self.ring.same_carrier(&other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.basis() == other.basis())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, Error> {
        if !self.ring.same_carrier(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal, Error> {
        if !self.ring.same_carrier(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// I ∩ J via the auxiliary-variable trick: (t·I + (1-t)·J) ∩ R,
    /// computed with a block elimination order on t.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal, Error> {
        if !self.ring.same_carrier(&other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let ext = self.ring.with_aux_var();
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = Polynomial::one(&ext).sub(&t)?;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(t.mul(&g.embed_front(&ext, 1))?);
        }
        for g in &other.gens {
            gens.push(one_minus_t.mul(&g.embed_front(&ext, 1))?);
        }
        let basis = buchberger_in(&ext, &gens)?;
        let projected = eliminate(&basis, 1, &self.ring)?;
        Ideal::new(&self.ring, projected)
    }

    /// Colon ideal (I : J) = { f : f·J ⊆ I }, generator-wise:
    /// (I : J) = ∩_g (I : g) and (I : g) = (I ∩ <g>) / g.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal, Error> {
        if !self.ring.same_carrier(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let nonzero: Vec<&Polynomial> = other.gens.iter().filter(|g| !g.is_zero()).collect();
        if nonzero.is_empty() {
            // (I : 0) = R
            return Ideal::new(&self.ring, vec![Polynomial::one(&self.ring)]);
        }
        let mut acc: Option<Ideal> = None;
        for g in nonzero {
            let principal = Ideal::new(&self.ring, vec![(*g).clone()])?;
            let inter = self.intersect(&principal)?;
            let mut quot_gens = Vec::new();
            for h in inter.basis().elements() {
                quot_gens.push(div_exact(h, g)?);
            }
            let part = Ideal::new(&self.ring, quot_gens)?;
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersect(&part)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// I ∩ k[x_{k+1}..x_n] as an ideal of the subring (recomputes a basis
    /// under the block order internally).
    pub fn eliminate_first(&self, k: usize) -> Result<Ideal, Error> {
        let n = self.ring.num_vars();
        assert!(k <= n);
        let block_ring = self.ring.with_order(MonomialOrder::Elim(k));
        let gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.with_ring(&block_ring))
            .collect::<Result<_, _>>()?;
        let basis = buchberger_in(&block_ring, &gens)?;
        let keep: Vec<usize> = (k..n).collect();
        let target = self.ring.subring(&keep, self.ring.order());
        let projected = eliminate(&basis, k, &target)?;
        Ideal::new(&target, projected)
    }

    /// Krull dimension of R/I, via the initial ideal of the working order.
    pub fn dimension(&self) -> Result<usize, Error> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let leads = self.basis().leading_monomials();
        let m = MonomialIdeal::new(self.ring.num_vars(), leads)?;
        m.dimension()
    }

    /// dim_k m/(I + m^2): the embedding dimension of R/I at the origin.
    pub fn embedding_dimension(&self) -> Result<usize, Error> {
        if !self.contained_in_maximal() {
            return Err(Error::NotInMaximalIdeal);
        }
        let n = self.ring.num_vars();
        let mut gens = self.gens.clone();
        for i in 0..n {
            for j in i..n {
                let m = Monomial::var(i, n).mul(&Monomial::var(j, n))?;
                gens.push(Polynomial::monomial(&self.ring, m, 1));
            }
        }
        let basis = buchberger_in(&self.ring, &gens)?;
        let linear = basis
            .elements()
            .iter()
            .filter(|g| g.leading_monomial().map(|m| m.degree() == 1).unwrap_or(false))
            .count();
        Ok(n - linear)
    }

    /// The combinatorial representation, when the reduced basis consists
    /// of single terms (i.e. the ideal is a monomial ideal).
    pub fn as_monomial(&self) -> Option<MonomialIdeal> {
        let basis = self.basis();
        if basis.elements().iter().all(|g| g.is_term()) {
            Some(MonomialIdeal::new(self.ring.num_vars(), basis.leading_monomials()).unwrap())
        } else {
            None
        }
    }

    /// Canonical generator string `<g1, g2, ...>` from the reduced basis.
    pub fn render(&self) -> String {
        let b = self.basis();
        if b.is_zero_ideal() {
            return "<0>".to_string();
        }
        let gens: Vec<String> = b.elements().iter().map(|g| g.render()).collect();
        format!("<{}>", gens.join(", "))
    }
}

/// Exact division f / g; errors if g does not divide f.
pub fn div_exact(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, Error> {
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let ring = f.ring().clone();
    let field = ring.field();
    let glm = g.leading_monomial().unwrap();
    let glc_inv = field.inv(g.leading_coeff().unwrap())?;
    let mut work = f.clone();
    let mut quot = Polynomial::zero(&ring);
    while let Some(lm) = work.leading_monomial().cloned() {
        if !glm.divides(&lm) {
            return Err(Error::Input(format!("`{g}` does not divide `{f}`")));
        }
        let c = field.mul(work.leading_coeff().unwrap(), glc_inv);
        let qm = glm.div(&lm);
        let qterm = Polynomial::monomial(&ring, qm, c);
        quot = quot.add(&qterm)?;
        work = work.sub(&g.mul(&qterm)?)?;
    }
    Ok(quot)
}

/// Normal form against an arbitrary generating set (not necessarily a
/// Groebner basis); exposed for quotient-reconstruction tests.
pub fn remainder(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial, Error> {
    reduce(f, divisors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::ring;

    fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
        let gens = gens.iter().map(|s| parse_polynomial(s, r).unwrap()).collect();
        Ideal::new(r, gens).unwrap()
    }

    #[test]
    fn membership() {
        let r = ring(5, &["x", "y"]).unwrap();
        let i = ideal(&r, &["x"]);
        assert!(i.contains(&parse_polynomial("x*y", &r).unwrap()).unwrap());
        let j = ideal(&r, &["x*y"]);
        assert!(!j.contains(&parse_polynomial("x + y", &r).unwrap()).unwrap());
    }

    #[test]
    fn non_membership_char2() {
        // x^2 y + x y^2 not in <x^2 + y^2> over F_2
        let r = ring(2, &["x", "y"]).unwrap();
        let i = ideal(&r, &["x^2 + y^2"]);
        assert!(!i.contains(&parse_polynomial("x^2*y + x*y^2", &r).unwrap()).unwrap());
    }

    #[test]
    fn equality() {
        let r = ring(5, &["x", "y"]).unwrap();
        assert!(ideal(&r, &["x", "y"]).equal(&ideal(&r, &["y", "x"])).unwrap());
        assert!(!ideal(&r, &["x"]).equal(&ideal(&r, &["x^2"])).unwrap());
        let r2 = ring(2, &["x", "y"]).unwrap();
        assert!(ideal(&r2, &["x^2 + y^2"]).equal(&ideal(&r2, &["(x+y)^2"])).unwrap());
    }

    #[test]
    fn sum_product() {
        let r = ring(3, &["x", "y"]).unwrap();
        assert!(ideal(&r, &["x"]).sum(&ideal(&r, &["y"])).unwrap().equal(&ideal(&r, &["x", "y"])).unwrap());
        assert!(ideal(&r, &["x"]).product(&ideal(&r, &["y"])).unwrap().equal(&ideal(&r, &["x*y"])).unwrap());
    }

    #[test]
    fn non_example_sum_is_not_radical() {
        // <xy> + <x+y> = <x^2, x+y>
        for p in [2u32, 3, 5] {
            let r = ring(p, &["x", "y"]).unwrap();
            let s = ideal(&r, &["x*y"]).sum(&ideal(&r, &["x + y"])).unwrap();
            assert!(s.equal(&ideal(&r, &["x^2", "x + y"])).unwrap());
        }
    }

    #[test]
    fn intersection() {
        let r = ring(5, &["x", "y"]).unwrap();
        assert!(ideal(&r, &["x"]).intersect(&ideal(&r, &["y"])).unwrap().equal(&ideal(&r, &["x*y"])).unwrap());
        let i = ideal(&r, &["x"]);
        assert!(i.intersect(&i).unwrap().equal(&i).unwrap());

        let r3 = ring(2, &["x", "y", "z"]).unwrap();
        let got = ideal(&r3, &["x", "y"]).intersect(&ideal(&r3, &["z"])).unwrap();
        assert!(got.equal(&ideal(&r3, &["x*z", "y*z"])).unwrap());
    }

    #[test]
    fn intersection_with_nonprincipal_membership_check() {
        // brute-force cross-check on all monomials of degree <= 3
        let r = ring(2, &["x", "y", "z"]).unwrap();
        let i = ideal(&r, &["x", "y"]);
        let j = ideal(&r, &["z"]);
        let meet = i.intersect(&j).unwrap();
        for a in 0..=3u32 {
            for b in 0..=3u32 {
                for c in 0..=3u32 {
                    if a + b + c > 3 {
                        continue;
                    }
                    let m = Polynomial::monomial(&r, Monomial::new(vec![a, b, c]), 1);
                    let both = i.contains(&m).unwrap() && j.contains(&m).unwrap();
                    assert_eq!(meet.contains(&m).unwrap(), both, "monomial {m}");
                }
            }
        }
    }

    #[test]
    fn colon_examples() {
        let r = ring(3, &["x", "y"]).unwrap();
        assert!(ideal(&r, &["x^2"]).colon(&ideal(&r, &["x"])).unwrap().equal(&ideal(&r, &["x"])).unwrap());
        assert!(ideal(&r, &["x*y"]).colon(&ideal(&r, &["y"])).unwrap().equal(&ideal(&r, &["x"])).unwrap());
        for p in [2u32, 3] {
            let r = ring(p, &["x", "y"]).unwrap();
            let num = ideal(&r, &[&format!("x^{p}*y^{p}")]);
            let den = ideal(&r, &["x*y"]);
            let expect = ideal(&r, &[&format!("x^{}*y^{}", p - 1, p - 1)]);
            assert!(num.colon(&den).unwrap().equal(&expect).unwrap());
        }
    }

    #[test]
    fn elimination() {
        let r = ring(5, &["x", "y"]).unwrap();
        // <x - y>: nothing in y alone
        assert!(ideal(&r, &["x - y"]).eliminate_first(1).unwrap().is_zero());
        // <x, y>: eliminate x -> <y>
        let e = ideal(&r, &["x", "y"]).eliminate_first(1).unwrap();
        assert_eq!(e.render(), "<y>");
    }

    #[test]
    fn dimension_examples() {
        let r = ring(5, &["x", "y"]).unwrap();
        assert_eq!(ideal(&r, &["x", "y"]).dimension().unwrap(), 0);
        assert_eq!(ideal(&r, &["x*y"]).dimension().unwrap(), 1);
        assert_eq!(Ideal::zero(&r).dimension().unwrap(), 2);
        assert!(ideal(&r, &["x", "1 + x"]).dimension().is_err());
    }

    #[test]
    fn embedding_dimension_examples() {
        let r = ring(5, &["x", "y"]).unwrap();
        assert_eq!(Ideal::zero(&r).embedding_dimension().unwrap(), 2);
        assert_eq!(ideal(&r, &["x - y^2"]).embedding_dimension().unwrap(), 1);
        let r3 = ring(5, &["x", "y", "z"]).unwrap();
        assert_eq!(ideal(&r3, &["x", "y"]).embedding_dimension().unwrap(), 1);
        assert!(ideal(&r, &["x + 1"]).embedding_dimension().is_err());
    }

    #[test]
    fn monomial_detection() {
        let r = ring(2, &["x", "y"]).unwrap();
        assert!(ideal(&r, &["x^2", "x*y"]).as_monomial().is_some());
        assert!(ideal(&r, &["x + y"]).as_monomial().is_none());
        // monomial in disguise: <x + y, x - y> over F_5 is <x, y>
        let r5 = ring(5, &["x", "y"]).unwrap();
        let m = ideal(&r5, &["x + y", "x - y"]).as_monomial().unwrap();
        assert_eq!(m.min_gens().len(), 2);
    }

    #[test]
    fn div_exact_roundtrip() {
        let r = ring(5, &["x", "y"]).unwrap();
        let f = parse_polynomial("x^2 + x*y", &r).unwrap();
        let g = parse_polynomial("x", &r).unwrap();
        let q = div_exact(&f, &g).unwrap();
        assert_eq!(q.render(), "x + y");
        assert!(div_exact(&parse_polynomial("x + 1", &r).unwrap(), &g).is_err());
    }
}
