//! Monomials as exponent vectors and monomial orders on them.

use crate::error::Error;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// A power product x_1^{a_1} ... x_n^{a_n} stored as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn var(i: usize, n: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    /// Bitmask of variables occurring with positive exponent.
    pub fn support(&self) -> u32 {
        let mut s = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                s |= 1 << i;
            }
        }
        s
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial, Error> {
        self.check_len(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<_, _>>()?;
        Ok(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// other / self; caller must ensure divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(&b, &a)| b - a).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u64) -> Result<Monomial, Error> {
        let exps = self
            .exps
            .iter()
            .map(|&a| {
                let v = a as u64 * k;
                u32::try_from(v).map_err(|_| Error::ExponentOverflow)
            })
            .collect::<Result<_, _>>()?;
        Ok(Monomial { exps })
    }

    fn check_len(&self, other: &Monomial) -> Result<(), Error> {
        if self.exps.len() != other.exps.len() {
            Err(Error::LengthMismatch(self.exps.len(), other.exps.len()))
        } else {
            Ok(())
        }
    }
}

/// Reading order for printed generator lists: lower degree first, then
/// earlier variables first. Not an admissible order; display only.
pub fn display_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.exps.cmp(&a.exps))
}

/// A fixed admissible order on monomials of the ambient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Block order eliminating the first k variables: first compare the
    /// leading block by grevlex, then the trailing block by grevlex.
    Elim(usize),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, Error> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
        Ok(self.cmp_unchecked(a, b))
    }

    pub fn cmp_unchecked(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::GrevLex => grevlex(&a.exps, &b.exps),
            MonomialOrder::Elim(k) => {
                grevlex(&a.exps[..k], &b.exps[..k]).then_with(|| grevlex(&a.exps[k..], &b.exps[k..]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            match x.cmp(y) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {}
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_compare() {
        // x > y in F[x, y]
        assert_eq!(
            MonomialOrder::Lex.compare(&m(&[1, 0]), &m(&[0, 1])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn grevlex_tie_break() {
        // x*y^2 < x^2*y: equal degree, tie broken on the last exponent.
        assert_eq!(
            MonomialOrder::GrevLex.compare(&m(&[1, 2]), &m(&[2, 1])).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn reflexive() {
        let a = m(&[3, 1, 2]);
        for ord in [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::Elim(1)] {
            assert_eq!(ord.compare(&a, &a).unwrap(), Ordering::Equal);
        }
    }

    #[test]
    fn elim_block_dominates() {
        // Under Elim(1), any positive power of x_1 beats anything without it.
        assert_eq!(
            MonomialOrder::Elim(1).compare(&m(&[1, 0]), &m(&[0, 9])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn length_mismatch() {
        assert!(MonomialOrder::Lex.compare(&m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn monomial_ops() {
        let a = m(&[2, 1]);
        let b = m(&[1, 3]);
        assert_eq!(a.mul(&b).unwrap(), m(&[3, 4]));
        assert_eq!(a.lcm(&b), m(&[2, 3]));
        assert_eq!(a.gcd(&b), m(&[1, 1]));
        assert!(m(&[1, 0]).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(m(&[1, 1]).div(&a), m(&[1, 0]));
        assert_eq!(a.degree(), 3);
        assert_eq!(a.support(), 0b11);
    }
}
