//! Squarefree-aware monomial ideals: minimal generators as an antichain of
//! exponent vectors, with fully combinatorial radical, minimal primes, and
//! dimension via minimal vertex covers of the generator-support hypergraph.

use crate::error::Error;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    /// Unique minimal generating set: no generator divides another.
    /// Sorted for canonical form. Empty list = the zero ideal.
    min_gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self, Error> {
        for g in &gens {
            if g.len() != n {
                return Err(Error::LengthMismatch(g.len(), n));
            }
        }
        Ok(Self::minimalize(n, gens))
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, min_gens: Vec::new() }
    }

    /// The coordinate prime generated by the variables in `mask`.
    pub fn coordinate_prime(n: usize, mask: u32) -> Self {
        let gens = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| Monomial::var(i, n))
            .collect();
        MonomialIdeal { n, min_gens: gens }
    }

    fn minimalize(n: usize, mut gens: Vec<Monomial>) -> Self {
        let mut keep: Vec<Monomial> = Vec::new();
        gens.sort();
        gens.dedup();
        for g in &gens {
            if !gens.iter().any(|h| h != g && h.divides(g)) {
                keep.push(g.clone());
            }
        }
        keep.sort_by(crate::monomial::display_cmp);
        keep.dedup();
        MonomialIdeal { n, min_gens: keep }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn min_gens(&self) -> &[Monomial] {
        &self.min_gens
    }

    pub fn is_zero(&self) -> bool {
        self.min_gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.min_gens.iter().any(|g| g.is_one())
    }

    pub fn is_squarefree(&self) -> bool {
        self.min_gens.iter().all(|g| g.is_squarefree())
    }

    /// Squarefree <=> radical; this checks the definitionally distinct
    /// route: the ideal equals its radical.
    pub fn is_radical(&self) -> bool {
        self.radical() == *self
    }

    /// Prime monomial ideals are exactly those generated by variables
    /// (the zero ideal counts: it is prime in a domain).
    pub fn is_prime(&self) -> bool {
        self.min_gens.iter().all(|g| g.degree() == 1)
    }

    /// Variable mask when this is a coordinate prime.
    pub fn coordinate_prime_mask(&self) -> Option<u32> {
        if self.is_prime() {
            Some(self.min_gens.iter().fold(0, |m, g| m | g.support()))
        } else {
            None
        }
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.min_gens.iter().any(|g| g.divides(m))
    }

    pub fn contains(&self, other: &MonomialIdeal) -> bool {
        other.min_gens.iter().all(|g| self.contains_monomial(g))
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self
            .min_gens
            .iter()
            .map(|g| Monomial::new(g.exps().iter().map(|&e| e.min(1)).collect()))
            .collect();
        Self::minimalize(self.n, gens)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.min_gens.clone();
        gens.extend(other.min_gens.iter().cloned());
        Self::minimalize(self.n, gens)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        if self.is_zero() || other.is_zero() {
            return MonomialIdeal::zero(self.n);
        }
        let mut gens = Vec::new();
        for a in &self.min_gens {
            for b in &other.min_gens {
                gens.push(a.lcm(b));
            }
        }
        Self::minimalize(self.n, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, Error> {
        let mut gens = Vec::new();
        for a in &self.min_gens {
            for b in &other.min_gens {
                gens.push(a.mul(b)?);
            }
        }
        Ok(Self::minimalize(self.n, gens))
    }

    /// Minimal primes of the radical, as variable masks: the minimal
    /// vertex covers of the hypergraph whose edges are generator supports.
    pub fn minimal_primes(&self) -> Vec<u32> {
        let edges: Vec<u32> = self.min_gens.iter().map(|g| g.support()).collect();
        let n = self.n;
        assert!(n <= 20, "minimal prime enumeration limited to 20 variables");
        let mut covers: Vec<u32> = Vec::new();
        for s in 0u32..(1 << n) {
            if edges.iter().all(|&e| e & s != 0) {
                covers.push(s);
            }
        }
        let minimal: Vec<u32> = covers
            .iter()
            .copied()
            .filter(|&s| !covers.iter().any(|&t| t != s && t & s == t))
            .collect();
        minimal
    }

    pub fn is_equidimensional(&self) -> bool {
        let primes = self.minimal_primes();
        let mut sizes = primes.iter().map(|p| p.count_ones());
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|s| s == first),
        }
    }

    /// Krull dimension of R/M: n minus the smallest minimal-cover size.
    pub fn dimension(&self) -> Result<usize, Error> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let height = self
            .minimal_primes()
            .iter()
            .map(|p| p.count_ones() as usize)
            .min()
            .unwrap_or(0);
        Ok(self.n - height)
    }

    /// Bracket power M^[q]: scale every exponent by q.
    pub fn bracket_power(&self, q: u64) -> Result<MonomialIdeal, Error> {
        let gens = self
            .min_gens
            .iter()
            .map(|g| g.pow(q))
            .collect::<Result<_, _>>()?;
        Ok(Self::minimalize(self.n, gens))
    }

    pub fn generators_as_polynomials(&self, ring: &Arc<Ring>) -> Vec<Polynomial> {
        assert_eq!(ring.num_vars(), self.n);
        self.min_gens
            .iter()
            .map(|g| Polynomial::monomial(ring, g.clone(), 1))
            .collect()
    }

    pub fn render(&self, ring: &Arc<Ring>) -> String {
        if self.min_gens.is_empty() {
            return "<0>".to_string();
        }
        let gens: Vec<String> = self
            .generators_as_polynomials(ring)
            .iter()
            .map(|g| g.render())
            .collect();
        format!("<{}>", gens.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn mi(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| m(e)).collect()).unwrap()
    }

    #[test]
    fn radical_supportwise() {
        // <x^2 y> -> <xy>
        assert_eq!(mi(2, &[&[2, 1]]).radical(), mi(2, &[&[1, 1]]));
        // squarefree fixed point
        let sq = mi(2, &[&[1, 1]]);
        assert_eq!(sq.radical(), sq);
        assert!(sq.is_radical());
        // <x^2, x y^3> -> <x>
        assert_eq!(mi(2, &[&[2, 0], &[1, 3]]).radical(), mi(2, &[&[1, 0]]));
    }

    #[test]
    fn minimal_primes_vertex_covers() {
        // <xy> in F[x,y] -> {x}, {y}
        let primes = mi(2, &[&[1, 1]]).minimal_primes();
        assert_eq!(primes, vec![0b01, 0b10]);
        // <xy, xz> in F[x,y,z] -> {x}, {y,z}
        let primes = mi(3, &[&[1, 1, 0], &[1, 0, 1]]).minimal_primes();
        assert_eq!(primes, vec![0b001, 0b110]);
        // <x, y> is already prime
        let primes = mi(2, &[&[1, 0], &[0, 1]]).minimal_primes();
        assert_eq!(primes, vec![0b11]);
        // zero ideal: the single minimal prime <0>
        assert_eq!(MonomialIdeal::zero(2).minimal_primes(), vec![0]);
    }

    #[test]
    fn equidimensionality() {
        assert!(mi(2, &[&[1, 1]]).is_equidimensional());
        assert!(!mi(3, &[&[1, 1, 0], &[1, 0, 1]]).is_equidimensional());
        assert!(MonomialIdeal::coordinate_prime(3, 0b101).is_equidimensional());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(mi(2, &[&[1, 0], &[0, 1]]).dimension().unwrap(), 0);
        assert_eq!(mi(2, &[&[1, 1]]).dimension().unwrap(), 1);
        // coordinate prime on k of n variables has dimension n - k
        for n in 1..=4usize {
            for mask in 0u32..(1 << n) {
                let p = MonomialIdeal::coordinate_prime(n, mask);
                assert_eq!(p.dimension().unwrap(), n - mask.count_ones() as usize);
            }
        }
    }

    #[test]
    fn lattice_ops() {
        let x = mi(2, &[&[1, 0]]);
        let y = mi(2, &[&[0, 1]]);
        assert_eq!(x.intersect(&y), mi(2, &[&[1, 1]]));
        assert_eq!(x.intersect(&x), x);
        assert_eq!(x.sum(&y), mi(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(x.product(&y).unwrap(), mi(2, &[&[1, 1]]));
    }

    #[test]
    fn minimalization() {
        // <x^2, x y^3> has minimal generators... both (neither divides the other)
        let i = mi(2, &[&[2, 0], &[1, 3]]);
        assert_eq!(i.min_gens().len(), 2);
        // but <x, x y^3> minimalizes to <x>
        let j = mi(2, &[&[1, 0], &[1, 3]]);
        assert_eq!(j, mi(2, &[&[1, 0]]));
    }

    #[test]
    fn primality() {
        assert!(MonomialIdeal::zero(3).is_prime());
        assert!(mi(3, &[&[1, 0, 0], &[0, 1, 0]]).is_prime());
        assert!(!mi(2, &[&[1, 1]]).is_prime());
        assert_eq!(mi(3, &[&[1, 0, 0], &[0, 1, 0]]).coordinate_prime_mask(), Some(0b011));
    }
}
