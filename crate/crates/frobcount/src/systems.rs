//! Systems of ideals: pseudo-prime verification, intersection-compatible
//! closure checking, dimension-stratified counts e(d) against the C(n,d)
//! and 2^n bounds, localization/quotient transforms, and the exhaustive
//! sharpness verifier over coordinate-prime arrangements.

use crate::error::Error;
use crate::frobenius::SplittingMap;
use crate::ideal::Ideal;
use crate::monomial_ideal::MonomialIdeal;
use crate::ring::Ring;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

pub const DEFAULT_MEMBER_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SystemMode {
    Monomial,
    DeclaredPrime,
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Undecidable,
}

impl Verdict {
    pub fn is_true(&self) -> bool {
        *self == Verdict::True
    }
}

/// A finite family of proper ideals of F_p[x_1..x_n], all contained in
/// the maximal ideal at the origin, deduplicated by ideal equality.
#[derive(Clone, Debug)]
pub struct IdealSystem {
    ring: Arc<Ring>,
    members: Vec<Ideal>,
    /// Combinatorial form of each member, when it is a monomial ideal.
    monomial_forms: Vec<Option<MonomialIdeal>>,
    mode: SystemMode,
    ambient_embdim: usize,
    warnings: Vec<String>,
}

impl IdealSystem {
    pub fn new(ring: &Arc<Ring>, members: Vec<Ideal>) -> Result<Self, Error> {
        let mut warnings = Vec::new();
        let mut kept: Vec<Ideal> = Vec::new();
        for m in members {
            if !m.ring().same_carrier(ring) {
                return Err(Error::RingMismatch);
            }
            if m.is_unit() {
                return Err(Error::Input("system members must be proper ideals".into()));
            }
            if !m.contained_in_maximal() {
                return Err(Error::Input(
                    "system members must be contained in the maximal ideal at the origin".into(),
                ));
            }
            if !kept.iter().any(|k| k.equal(&m).unwrap_or(false)) {
                kept.push(m);
            }
        }
        let monomial_forms: Vec<Option<MonomialIdeal>> =
            kept.iter().map(|m| m.as_monomial()).collect();
        for (m, form) in kept.iter().zip(&monomial_forms) {
            if let Some(mi) = form {
                if m.flags().prime && !mi.is_prime() {
                    return Err(Error::Input(format!(
                        "ideal {} is declared prime but is a non-prime monomial ideal",
                        m.render()
                    )));
                }
                if m.flags().radical && !mi.is_squarefree() {
                    return Err(Error::Input(format!(
                        "ideal {} is declared radical but is a non-squarefree monomial ideal",
                        m.render()
                    )));
                }
            } else {
                warnings.push(format!(
                    "non-monomial member {}: homogeneity is not checked; components away \
                     from the origin would skew local counts",
                    m.render()
                ));
            }
        }
        let mode = if monomial_forms.iter().all(|f| f.is_some()) {
            SystemMode::Monomial
        } else if kept
            .iter()
            .zip(&monomial_forms)
            .all(|(m, f)| m.flags().prime || f.as_ref().is_some_and(|mi| mi.is_prime()))
        {
            SystemMode::DeclaredPrime
        } else {
            SystemMode::Mixed
        };
        Ok(IdealSystem {
            ring: ring.clone(),
            ambient_embdim: ring.num_vars(),
            members: kept,
            monomial_forms,
            mode,
            warnings,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn members(&self) -> &[Ideal] {
        &self.members
    }

    pub fn monomial_form(&self, i: usize) -> Option<&MonomialIdeal> {
        self.monomial_forms[i].as_ref()
    }

    pub fn mode(&self) -> SystemMode {
        self.mode
    }

    pub fn ambient_embdim(&self) -> usize {
        self.ambient_embdim
    }

    pub fn with_ambient_embdim(mut self, n: usize) -> Self {
        self.ambient_embdim = n;
        self
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Minimal primes of member `i` as ideals: coordinate primes for
    /// monomial members, the member itself for certified primes, None if
    /// neither description applies.
    fn minimal_primes_of(&self, i: usize) -> Option<Vec<Ideal>> {
        if let Some(mi) = &self.monomial_forms[i] {
            let primes = mi
                .minimal_primes()
                .into_iter()
                .map(|mask| {
                    Ideal::from_monomial(
                        &self.ring,
                        &MonomialIdeal::coordinate_prime(self.ring.num_vars(), mask),
                    )
                })
                .collect();
            Some(primes)
        } else if self.members[i].flags().prime {
            Some(vec![self.members[i].clone()])
        } else {
            None
        }
    }

    /// Pseudo-prime verification: every member proper, radical, and
    /// equidimensional, and containment between minimal primes of two
    /// members forces containment of the members.
    pub fn is_pseudo_prime(&self) -> Result<PseudoPrimeOutcome, Error> {
        let mut notes = Vec::new();
        // condition (1)
        for (i, m) in self.members.iter().enumerate() {
            match &self.monomial_forms[i] {
                Some(mi) => {
                    if !mi.is_radical() {
                        return Ok(PseudoPrimeOutcome::violated(
                            1,
                            format!("{} is not radical (radical is {})", m.render(), mi.radical().render(&self.ring)),
                        ));
                    }
                    if !mi.is_equidimensional() {
                        return Ok(PseudoPrimeOutcome::violated(
                            1,
                            format!("{} is not equidimensional", m.render()),
                        ));
                    }
                }
                None => {
                    let f = m.flags();
                    if f.prime {
                        notes.push(format!(
                            "{}: primality taken on declared flag (primes are radical and equidimensional)",
                            m.render()
                        ));
                    } else if f.radical && f.equidimensional {
                        notes.push(format!(
                            "{}: radicality and equidimensionality taken on declared flags",
                            m.render()
                        ));
                    } else {
                        return Ok(PseudoPrimeOutcome::undecidable(format!(
                            "{} is not monomial and carries no certifying flags",
                            m.render()
                        )));
                    }
                }
            }
        }
        // condition (2): P1 ⊆ P2 between minimal primes forces Q1 ⊆ Q2
        for i in 0..self.members.len() {
            for j in 0..self.members.len() {
                if i == j {
                    continue;
                }
                let (pi, pj) = match (self.minimal_primes_of(i), self.minimal_primes_of(j)) {
                    (Some(a), Some(b)) => (a, b),
                    _ => {
                        return Ok(PseudoPrimeOutcome::undecidable(
                            "minimal primes unavailable for a non-monomial, non-prime member".into(),
                        ))
                    }
                };
                for p1 in &pi {
                    for p2 in &pj {
                        if p2.contains_ideal(p1)? && !self.members[j].contains_ideal(&self.members[i])? {
                            return Ok(PseudoPrimeOutcome::violated(
                                2,
                                format!(
                                    "minimal prime {} of {} is contained in minimal prime {} of {}, \
                                     but {} is not contained in {}",
                                    p1.render(),
                                    self.members[i].render(),
                                    p2.render(),
                                    self.members[j].render(),
                                    self.members[i].render(),
                                    self.members[j].render()
                                ),
                            ));
                        }
                    }
                }
            }
        }
        Ok(PseudoPrimeOutcome { verdict: Verdict::True, condition: None, witness: None, notes })
    }

    /// All distinct intersections of nonempty member subsets, each with a
    /// witness subset, plus the pairwise-sum closure table.
    pub fn closure_lattice(&self, cap: usize) -> Result<ClosureLattice, Error> {
        let k = self.members.len();
        if k > cap {
            return Err(Error::MemberCapExceeded(k, cap));
        }
        let monomial = self.mode == SystemMode::Monomial;
        let mut elements: Vec<LatticeElement> = Vec::new();
        for (i, m) in self.members.iter().enumerate() {
            let el = LatticeElement {
                ideal: m.clone(),
                monomial: self.monomial_forms[i].clone(),
                witness: 1u32 << i,
            };
            if !elements.iter().any(|e| e.same_ideal(&el).unwrap_or(false)) {
                elements.push(el);
            }
        }
        // close under binary intersection (generates all finite ones)
        let mut frontier: Vec<usize> = (0..elements.len()).collect();
        while let Some(i) = frontier.pop() {
            let mut new_elems = Vec::new();
            for j in 0..elements.len() {
                let (a, b) = (&elements[i], &elements[j]);
                let cand = if monomial {
                    let mi = a.monomial.as_ref().unwrap().intersect(b.monomial.as_ref().unwrap());
                    LatticeElement {
                        ideal: Ideal::from_monomial(&self.ring, &mi),
                        monomial: Some(mi),
                        witness: a.witness | b.witness,
                    }
                } else {
                    LatticeElement {
                        ideal: a.ideal.intersect(&b.ideal)?,
                        monomial: None,
                        witness: a.witness | b.witness,
                    }
                };
                if !elements.iter().chain(&new_elems).any(|e| e.same_ideal(&cand).unwrap_or(false)) {
                    new_elems.push(cand);
                }
            }
            for e in new_elems {
                elements.push(e);
                frontier.push(elements.len() - 1);
            }
        }
        Ok(ClosureLattice { ring: self.ring.clone(), monomial, elements })
    }

    /// Closed under sums: every pairwise sum of lattice elements is again
    /// a lattice element.
    pub fn is_intersection_compatible(&self, cap: usize) -> Result<CompatibilityOutcome, Error> {
        let lattice = self.closure_lattice(cap)?;
        let violation = lattice.first_sum_violation()?;
        Ok(CompatibilityOutcome {
            verdict: if violation.is_none() { Verdict::True } else { Verdict::False },
            violation,
            lattice_size: lattice.elements.len(),
        })
    }

    /// e(d) = number of members of dimension d.
    pub fn count_by_dimension(&self) -> Result<BTreeMap<usize, usize>, Error> {
        let mut counts = BTreeMap::new();
        for (i, m) in self.members.iter().enumerate() {
            let d = match &self.monomial_forms[i] {
                Some(mi) => mi.dimension()?,
                None => m.dimension()?,
            };
            *counts.entry(d).or_insert(0) += 1;
        }
        Ok(counts)
    }

    /// Members with Q ⊆ P for a coordinate prime P on variable set `mask`,
    /// re-expressed in the polynomial ring on those variables. Dimensions
    /// drop by dim(P) = n - |mask|.
    pub fn localize(&self, mask: u32) -> Result<(IdealSystem, Vec<LocalizationImage>), Error> {
        if self.mode != SystemMode::Monomial {
            return Err(Error::Input("localization is implemented for monomial systems".into()));
        }
        let n = self.ring.num_vars();
        if mask >= 1u32 << n {
            return Err(Error::Input("coordinate prime mask out of range".into()));
        }
        let keep: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let sub = self.ring.subring(&keep, self.ring.order());
        let target_prime = MonomialIdeal::coordinate_prime(n, mask);
        let mut images = Vec::new();
        let mut new_members = Vec::new();
        for form in &self.monomial_forms {
            let mi = form.as_ref().unwrap();
            // Q ⊆ P_T iff every minimal generator lies in P_T
            if !target_prime.contains(mi) {
                continue;
            }
            // localization inverts the variables outside T: restrict
            // exponent vectors to T and re-minimalize
            let gens = mi
                .min_gens()
                .iter()
                .map(|g| crate::monomial::Monomial::new(keep.iter().map(|&v| g.exps()[v]).collect()))
                .collect();
            let image = MonomialIdeal::new(keep.len(), gens)?;
            images.push(LocalizationImage {
                source: mi.render(&self.ring),
                image: image.render(&sub),
                source_dimension: mi.dimension()?,
                image_dimension: image.dimension()?,
            });
            new_members.push(Ideal::from_monomial(&sub, &image));
        }
        let system = IdealSystem::new(&sub, new_members)?;
        Ok((system, images))
    }

    /// Members containing I, kept as ideals of R; the ambient embedding
    /// dimension becomes that of R/I. Member dimensions are unchanged.
    pub fn quotient(&self, by: &Ideal) -> Result<IdealSystem, Error> {
        if !by.contained_in_maximal() {
            return Err(Error::NotInMaximalIdeal);
        }
        let mut kept = Vec::new();
        for m in &self.members {
            if m.contains_ideal(by)? {
                kept.push(m.clone());
            }
        }
        let embdim = by.embedding_dimension()?;
        Ok(IdealSystem::new(&self.ring, kept)?.with_ambient_embdim(embdim))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalizationImage {
    pub source: String,
    pub image: String,
    pub source_dimension: usize,
    pub image_dimension: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PseudoPrimeOutcome {
    pub verdict: Verdict,
    /// 1 = proper/radical/equidimensional, 2 = minimal-prime containment.
    pub condition: Option<u8>,
    pub witness: Option<String>,
    pub notes: Vec<String>,
}

impl PseudoPrimeOutcome {
    fn violated(condition: u8, witness: String) -> Self {
        PseudoPrimeOutcome {
            verdict: Verdict::False,
            condition: Some(condition),
            witness: Some(witness),
            notes: Vec::new(),
        }
    }

    fn undecidable(reason: String) -> Self {
        PseudoPrimeOutcome {
            verdict: Verdict::Undecidable,
            condition: None,
            witness: Some(reason),
            notes: Vec::new(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LatticeElement {
    pub ideal: Ideal,
    pub monomial: Option<MonomialIdeal>,
    /// Bitmask over the members whose intersection this element is.
    pub witness: u32,
}

impl LatticeElement {
    fn same_ideal(&self, other: &LatticeElement) -> Result<bool, Error> {
        match (&self.monomial, &other.monomial) {
            (Some(a), Some(b)) => Ok(a == b),
            _ => self.ideal.equal(&other.ideal),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClosureLattice {
    ring: Arc<Ring>,
    monomial: bool,
    elements: Vec<LatticeElement>,
}

impl ClosureLattice {
    pub fn elements(&self) -> &[LatticeElement] {
        &self.elements
    }

    /// Re-verify that each element equals the intersection of its witness
    /// subset of atoms.
    pub fn verify_witnesses(&self, system: &IdealSystem) -> Result<bool, Error> {
        for el in &self.elements {
            let mut acc: Option<Ideal> = None;
            for (i, m) in system.members().iter().enumerate() {
                if el.witness >> i & 1 == 1 {
                    acc = Some(match acc {
                        None => m.clone(),
                        Some(a) => a.intersect(m)?,
                    });
                }
            }
            match acc {
                Some(a) if a.equal(&el.ideal)? => {}
                _ => return Ok(false),
            }
        }
        Ok(true)
    }

    pub fn contains_ideal_element(&self, ideal: &Ideal) -> Result<bool, Error> {
        for el in &self.elements {
            if el.ideal.equal(ideal)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn first_sum_violation(&self) -> Result<Option<SumViolation>, Error> {
        // scan simplest pairs first (fewest intersected members) so the
        // reported witness is deterministic and minimal
        let mut order: Vec<usize> = (0..self.elements.len()).collect();
        order.sort_by_key(|&i| (self.elements[i].witness.count_ones(), self.elements[i].witness));
        for jj in 0..order.len() {
            for ii in 0..=jj {
                let (i, j) = (order[ii], order[jj]);
                let (a, b) = (&self.elements[i], &self.elements[j]);
                let (sum_ideal, sum_mono) = if self.monomial {
                    let s = a.monomial.as_ref().unwrap().sum(b.monomial.as_ref().unwrap());
                    (Ideal::from_monomial(&self.ring, &s), Some(s))
                } else {
                    (a.ideal.sum(&b.ideal)?, None)
                };
                let cand = LatticeElement { ideal: sum_ideal, monomial: sum_mono, witness: 0 };
                let found = self
                    .elements
                    .iter()
                    .map(|e| e.same_ideal(&cand))
                    .collect::<Result<Vec<_>, _>>()?
                    .into_iter()
                    .any(|x| x);
                if !found {
                    return Ok(Some(SumViolation {
                        left: a.ideal.render(),
                        right: b.ideal.render(),
                        sum: cand.ideal.render(),
                    }));
                }
            }
        }
        Ok(None)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SumViolation {
    pub left: String,
    pub right: String,
    pub sum: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompatibilityOutcome {
    pub verdict: Verdict,
    pub violation: Option<SumViolation>,
    pub lattice_size: usize,
}

/// Per-dimension comparison of e(d) against C(n, d).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundRow {
    pub d: usize,
    pub count: usize,
    pub bound: u64,
    pub within: bool,
    pub equality: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub ambient_embdim: usize,
    pub rows: Vec<BoundRow>,
    pub total: usize,
    pub total_bound: u64,
    pub total_within: bool,
    /// Cone reading for splitting-derived systems: a projective subscheme
    /// of dimension d corresponds to an affine cone of dimension d+1, so
    /// e_proj(d) = e(d+1) is compared against C(n, d+1).
    pub projective_rows: Option<Vec<BoundRow>>,
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Compare the counts map against C(n,d) per dimension and 2^n in total.
pub fn check_bounds(
    counts: &BTreeMap<usize, usize>,
    ambient_embdim: usize,
    from_splitting: bool,
) -> BoundsReport {
    let n = ambient_embdim as u64;
    let mut rows = Vec::new();
    for d in 0..=ambient_embdim {
        let count = counts.get(&d).copied().unwrap_or(0);
        let bound = binomial(n, d as u64);
        rows.push(BoundRow { d, count, bound, within: (count as u64) <= bound, equality: count as u64 == bound });
    }
    // dimensions above n (cannot occur for proper ideals, but report them)
    for (&d, &count) in counts.iter().filter(|&(&d, _)| d > ambient_embdim) {
        rows.push(BoundRow { d, count, bound: 0, within: false, equality: false });
    }
    let total: usize = counts.values().sum();
    let total_bound = 1u64 << n.min(63);
    let projective_rows = from_splitting.then(|| {
        (0..ambient_embdim)
            .map(|d| {
                let count = counts.get(&(d + 1)).copied().unwrap_or(0);
                let bound = binomial(n, d as u64 + 1);
                BoundRow { d, count, bound, within: (count as u64) <= bound, equality: count as u64 == bound }
            })
            .collect()
    });
    BoundsReport {
        ambient_embdim,
        rows,
        total,
        total_bound,
        total_within: (total as u64) <= total_bound,
        projective_rows,
    }
}

/// The system of compatibly split ideals of a splitting: prime members
/// (the compatible coordinate primes, zero ideal included), with the full
/// compatible squarefree family retained for closure checking.
pub struct SplittingSystem {
    pub system: IdealSystem,
    pub all_compatible: Vec<MonomialIdeal>,
}

pub fn system_from_splitting(theta: &SplittingMap) -> Result<SplittingSystem, Error> {
    let all = theta.enumerate_compatible_squarefree()?;
    let ring = theta.ring();
    let primes: Vec<Ideal> = all
        .iter()
        .filter(|m| m.is_prime())
        .map(|m| Ideal::from_monomial(ring, m))
        .collect();
    Ok(SplittingSystem { system: IdealSystem::new(ring, primes)?, all_compatible: all })
}

// ---------------------------------------------------------------------------
// Exhaustive sharpness verification over coordinate-prime arrangements.
//
// Coordinate primes and their intersections are Stanley-Reisner ideals:
// P_T corresponds to the full simplex on the complement of T, encoded as
// the downward-closed set of its faces, one bit per subset of the
// variables. Intersection of ideals = union of complexes = bitwise OR;
// sum of ideals = intersection of complexes = bitwise AND. The closure
// check below is the generic lattice check specialized to this encoding.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct MainTheoremReport {
    pub n: usize,
    pub p: u32,
    pub subsets_checked: u64,
    pub compatible_subsets: u64,
    /// max over compatible subsets of e(d), indexed by d = 0..n.
    pub max_e: Vec<usize>,
    pub binomials: Vec<u64>,
    pub upper_bound_violations: u64,
    /// Subsets attaining e(d) = C(n,d) simultaneously for every d.
    pub simultaneous_equality_subsets: u64,
    pub simultaneous_equality_is_full_arrangement: bool,
    pub max_total: usize,
    pub total_bound: u64,
    pub total_bound_violations: u64,
    /// The 2^n total is attained only by the full arrangement.
    pub full_total_only: bool,
    pub note: String,
}

impl MainTheoremReport {
    pub fn sharp_everywhere(&self) -> bool {
        self.max_e
            .iter()
            .zip(&self.binomials)
            .all(|(&e, &b)| e as u64 == b)
    }
}

/// Combinatorial compatibility check for a subset of coordinate primes,
/// given as face masks of their simplicial complexes.
pub fn coordinate_subset_compatible(atom_masks: &[u32]) -> bool {
    // closure of the atoms under OR (= all subset intersections)
    let mut elems: Vec<u32> = Vec::new();
    let mut seen = [0u64; 1024];
    let push = |v: u32, elems: &mut Vec<u32>, seen: &mut [u64; 1024]| -> bool {
        let (w, b) = ((v >> 6) as usize, v & 63);
        if seen[w] >> b & 1 == 0 {
            seen[w] |= 1 << b;
            elems.push(v);
            true
        } else {
            false
        }
    };
    for &a in atom_masks {
        push(a, &mut elems, &mut seen);
    }
    let mut i = 0;
    while i < elems.len() {
        let a = elems[i];
        for j in 0..elems.len() {
            let u = a | elems[j];
            push(u, &mut elems, &mut seen);
        }
        i += 1;
    }
    // closed under sums: AND of any two elements is an element
    for i in 0..elems.len() {
        for j in i..elems.len() {
            let m = elems[i] & elems[j];
            let (w, b) = ((m >> 6) as usize, m & 63);
            if seen[w] >> b & 1 == 0 {
                return false;
            }
        }
    }
    true
}

/// Face mask of the coordinate prime on variable set `t`: all subsets
/// disjoint from t are faces.
pub fn coordinate_prime_face_mask(n: usize, t: u32) -> u32 {
    let mut mask = 0u32;
    for f in 0..(1u32 << n) {
        if f & t == 0 {
            mask |= 1 << f;
        }
    }
    mask
}

/// Enumerate every subset of the 2^n coordinate primes of F_p[x_1..x_n],
/// check intersection compatibility, and aggregate the sharp-bound data.
/// p only labels the ambient field: the combinatorics is char-free.
pub fn verify_main_theorem(n: usize, p: u32) -> Result<MainTheoremReport, Error> {
    if n == 0 || n > 4 {
        return Err(Error::Input("verify-bound supports 1 <= n <= 4".into()));
    }
    crate::field::PrimeField::new(p)?;
    let num_primes = 1usize << n;
    let atom: Vec<u32> = (0..num_primes as u32)
        .map(|t| coordinate_prime_face_mask(n, t))
        .collect();
    let dim_of_prime: Vec<usize> = (0..num_primes as u32)
        .map(|t| n - t.count_ones() as usize)
        .collect();
    let binomials: Vec<u64> = (0..=n).map(|d| binomial(n as u64, d as u64)).collect();
    let total_subsets = 1u64 << num_primes;
    let full_mask = (total_subsets - 1) as u32;

    #[derive(Clone)]
    struct Acc {
        compatible: u64,
        max_e: Vec<usize>,
        violations: u64,
        simult: u64,
        simult_full_only: bool,
        max_total: usize,
        total_violations: u64,
        full_total_only: bool,
    }
    let identity = Acc {
        compatible: 0,
        max_e: vec![0; n + 1],
        violations: 0,
        simult: 0,
        simult_full_only: true,
        max_total: 0,
        total_violations: 0,
        full_total_only: true,
    };

    let acc = (0..total_subsets)
        .into_par_iter()
        .fold(
            || identity.clone(),
            |mut acc, subset| {
                let mut atoms: Vec<u32> = Vec::with_capacity(num_primes);
                let mut e = vec![0usize; n + 1];
                for t in 0..num_primes {
                    if subset >> t & 1 == 1 {
                        atoms.push(atom[t]);
                        e[dim_of_prime[t]] += 1;
                    }
                }
                if !coordinate_subset_compatible(&atoms) {
                    return acc;
                }
                acc.compatible += 1;
                let total: usize = e.iter().sum();
                acc.max_total = acc.max_total.max(total);
                let mut all_equal = true;
                for d in 0..=n {
                    acc.max_e[d] = acc.max_e[d].max(e[d]);
                    if e[d] as u64 > binomials[d] {
                        acc.violations += 1;
                    }
                    if e[d] as u64 != binomials[d] {
                        all_equal = false;
                    }
                }
                if total as u64 > 1u64 << n {
                    acc.total_violations += 1;
                }
                if total == 1usize << n && subset as u32 != full_mask {
                    acc.full_total_only = false;
                }
                if all_equal {
                    acc.simult += 1;
                    if subset as u32 != full_mask {
                        acc.simult_full_only = false;
                    }
                }
                acc
            },
        )
        .reduce(
            || identity.clone(),
            |mut a, b| {
                a.compatible += b.compatible;
                a.violations += b.violations;
                a.simult += b.simult;
                a.simult_full_only &= b.simult_full_only;
                a.max_total = a.max_total.max(b.max_total);
                a.total_violations += b.total_violations;
                a.full_total_only &= b.full_total_only;
                for d in 0..=n {
                    a.max_e[d] = a.max_e[d].max(b.max_e[d]);
                }
                a
            },
        );

    Ok(MainTheoremReport {
        n,
        p,
        subsets_checked: total_subsets,
        compatible_subsets: acc.compatible,
        max_e: acc.max_e,
        binomials,
        upper_bound_violations: acc.violations,
        simultaneous_equality_subsets: acc.simult,
        simultaneous_equality_is_full_arrangement: acc.simult == 1 && acc.simult_full_only,
        max_total: acc.max_total,
        total_bound: 1u64 << n,
        total_bound_violations: acc.total_violations,
        full_total_only: acc.full_total_only,
        note: "verification over coordinate arrangements (sharpness and consistency, not a proof)"
            .into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::DeclaredFlags;
    use crate::parse::parse_polynomial;
    use crate::ring::ring;

    fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_polynomial(s, r).unwrap()).collect()).unwrap()
    }

    fn coord_system(r: &Arc<Ring>, masks: &[u32]) -> IdealSystem {
        let n = r.num_vars();
        let members = masks
            .iter()
            .map(|&m| Ideal::from_monomial(r, &MonomialIdeal::coordinate_prime(n, m)))
            .collect();
        IdealSystem::new(r, members).unwrap()
    }

    #[test]
    fn coordinate_primes_are_pseudo_prime() {
        let r = ring(5, &["x", "y", "z"]).unwrap();
        let s = coord_system(&r, &[0, 1, 2, 3, 7]);
        assert_eq!(s.is_pseudo_prime().unwrap().verdict, Verdict::True);
    }

    #[test]
    fn radical_equidimensional_monomial_member() {
        let r = ring(3, &["x", "y"]).unwrap();
        let s = IdealSystem::new(&r, vec![ideal(&r, &["x*y"])]).unwrap();
        assert_eq!(s.is_pseudo_prime().unwrap().verdict, Verdict::True);
    }

    #[test]
    fn shared_minimal_prime_violates() {
        // {<x>, <xy>}: minimal prime <x> of <x> is contained in minimal
        // prime <x> of <xy>, but <x> is not contained in <xy>
        let r = ring(2, &["x", "y"]).unwrap();
        let s = IdealSystem::new(&r, vec![ideal(&r, &["x"]), ideal(&r, &["x*y"])]).unwrap();
        let out = s.is_pseudo_prime().unwrap();
        assert_eq!(out.verdict, Verdict::False);
        assert_eq!(out.condition, Some(2));
    }

    #[test]
    fn non_radical_member_violates() {
        let r = ring(2, &["x", "y"]).unwrap();
        let s = IdealSystem::new(&r, vec![ideal(&r, &["x^2"])]).unwrap();
        let out = s.is_pseudo_prime().unwrap();
        assert_eq!(out.verdict, Verdict::False);
        assert_eq!(out.condition, Some(1));
    }

    #[test]
    fn non_equidimensional_member_violates() {
        let r = ring(2, &["x", "y", "z"]).unwrap();
        let s = IdealSystem::new(&r, vec![ideal(&r, &["x*y", "x*z"])]).unwrap();
        let out = s.is_pseudo_prime().unwrap();
        assert_eq!(out.verdict, Verdict::False);
        assert_eq!(out.condition, Some(1));
    }

    #[test]
    fn undecidable_without_flags() {
        let r = ring(2, &["x", "y"]).unwrap();
        let s = IdealSystem::new(&r, vec![ideal(&r, &["x + y^2"])]).unwrap();
        assert_eq!(s.is_pseudo_prime().unwrap().verdict, Verdict::Undecidable);
    }

    #[test]
    fn declared_prime_mode() {
        let r = ring(2, &["x", "y"]).unwrap();
        let member = ideal(&r, &["x + y^2"]).with_flags(DeclaredFlags { prime: true, ..Default::default() });
        let s = IdealSystem::new(&r, vec![member]).unwrap();
        assert_eq!(s.mode(), SystemMode::DeclaredPrime);
        let out = s.is_pseudo_prime().unwrap();
        assert_eq!(out.verdict, Verdict::True);
        assert!(!out.notes.is_empty());
    }

    #[test]
    fn lattice_of_coordinate_primes_n2() {
        // the four coordinate primes of F_p[x,y] close up with one extra
        // element <xy> = <x> ∩ <y>
        let r = ring(5, &["x", "y"]).unwrap();
        let s = coord_system(&r, &[0, 1, 2, 3]);
        let lat = s.closure_lattice(DEFAULT_MEMBER_CAP).unwrap();
        assert_eq!(lat.elements().len(), 5);
        assert!(lat.verify_witnesses(&s).unwrap());
        assert!(lat.contains_ideal_element(&ideal(&r, &["x*y"])).unwrap());
    }

    #[test]
    fn singleton_and_chain_lattices() {
        let r = ring(5, &["x", "y"]).unwrap();
        let s = IdealSystem::new(&r, vec![ideal(&r, &["x"])]).unwrap();
        assert_eq!(s.closure_lattice(12).unwrap().elements().len(), 1);
        let chain = IdealSystem::new(&r, vec![ideal(&r, &["x"]), ideal(&r, &["x", "y"])]).unwrap();
        assert_eq!(chain.closure_lattice(12).unwrap().elements().len(), 2);
        assert!(chain.is_intersection_compatible(12).unwrap().verdict.is_true());
    }

    #[test]
    fn coordinate_arrangements_compatible() {
        for n in 1..=4usize {
            let vars: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
            let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
            let r = ring(2, &var_refs).unwrap();
            let masks: Vec<u32> = (0..1u32 << n).collect();
            let s = coord_system(&r, &masks);
            assert!(s.is_pseudo_prime().unwrap().verdict.is_true());
            assert!(s.is_intersection_compatible(16).unwrap().verdict.is_true());
        }
    }

    #[test]
    fn non_example_witness() {
        for p in [2u32, 3] {
            let r = ring(p, &["x", "y"]).unwrap();
            let flag = DeclaredFlags { prime: true, ..Default::default() };
            let members = vec![
                ideal(&r, &["x", "y"]),
                ideal(&r, &["x"]),
                ideal(&r, &["y"]),
                ideal(&r, &["x + y"]).with_flags(flag),
            ];
            let s = IdealSystem::new(&r, members).unwrap();
            assert!(s.is_pseudo_prime().unwrap().verdict.is_true());
            let out = s.is_intersection_compatible(12).unwrap();
            assert_eq!(out.verdict, Verdict::False);
            let v = out.violation.unwrap();
            // offending sum is <xy> + <x+y> = <x^2, x+y>
            let witness = ideal(&r, &["x^2", "x + y"]);
            let rendered: Vec<&str> = v.sum[1..v.sum.len() - 1].split(", ").collect();
            let sum_ideal = Ideal::new(
                &r,
                rendered.iter().map(|g| parse_polynomial(g, &r).unwrap()).collect(),
            )
            .unwrap();
            assert!(sum_ideal.equal(&witness).unwrap());
        }
    }

    #[test]
    fn counts_and_bounds_coordinate_n3() {
        let r = ring(2, &["x", "y", "z"]).unwrap();
        let masks: Vec<u32> = (0..8).collect();
        let s = coord_system(&r, &masks);
        let counts = s.count_by_dimension().unwrap();
        assert_eq!(counts.get(&0), Some(&1));
        assert_eq!(counts.get(&1), Some(&3));
        assert_eq!(counts.get(&2), Some(&3));
        assert_eq!(counts.get(&3), Some(&1));
        let bounds = check_bounds(&counts, 3, false);
        assert!(bounds.rows.iter().all(|row| row.within && row.equality));
        assert_eq!(bounds.total, 8);
        assert!(bounds.total_within);
    }

    #[test]
    fn localization_examples() {
        let r = ring(2, &["x", "y", "z"]).unwrap();
        let masks: Vec<u32> = (0..8).collect();
        let s = coord_system(&r, &masks);
        // localize at <x, y>: the 4 coordinate primes contained in it,
        // re-expressed in 2 variables
        let (loc, images) = s.localize(0b011).unwrap();
        assert_eq!(loc.members().len(), 4);
        assert_eq!(loc.ring().num_vars(), 2);
        for img in &images {
            assert_eq!(img.source_dimension - img.image_dimension, 1); // dim P = 1
        }
        // localize at the maximal ideal: unchanged
        let (loc, _) = s.localize(0b111).unwrap();
        assert_eq!(loc.members().len(), 8);
        // <z> does not sit inside <x, y>
        let s2 = IdealSystem::new(&r, vec![ideal(&r, &["z"])]).unwrap();
        let (loc, _) = s2.localize(0b011).unwrap();
        assert!(loc.members().is_empty());
    }

    #[test]
    fn quotient_examples() {
        let r = ring(2, &["x", "y"]).unwrap();
        let s = coord_system(&r, &[0, 1, 2, 3]);
        let q = s.quotient(&ideal(&r, &["x"])).unwrap();
        assert_eq!(q.members().len(), 2);
        assert_eq!(q.ambient_embdim(), 1);
        let q0 = s.quotient(&Ideal::zero(&r)).unwrap();
        assert_eq!(q0.members().len(), 4);
        assert_eq!(q0.ambient_embdim(), 2);
        let s2 = IdealSystem::new(&r, vec![ideal(&r, &["y"])]).unwrap();
        assert!(s2.quotient(&ideal(&r, &["x"])).unwrap().members().is_empty());
    }

    #[test]
    fn member_cap_enforced() {
        let r = ring(2, &["x", "y"]).unwrap();
        let s = coord_system(&r, &[0, 1, 2, 3]);
        assert!(matches!(s.closure_lattice(3), Err(Error::MemberCapExceeded(4, 3))));
    }

    #[test]
    fn main_theorem_small_n() {
        let rep = verify_main_theorem(1, 2).unwrap();
        assert_eq!(rep.max_e, vec![1, 1]);
        assert_eq!(rep.compatible_subsets, 4); // all subsets of {<0>, <x>}
        let rep = verify_main_theorem(2, 2).unwrap();
        assert_eq!(rep.max_e, vec![1, 2, 1]);
        assert_eq!(rep.upper_bound_violations, 0);
        assert!(rep.simultaneous_equality_is_full_arrangement);
        let rep = verify_main_theorem(3, 3).unwrap();
        assert_eq!(rep.max_e, vec![1, 3, 3, 1]);
        assert_eq!(rep.upper_bound_violations, 0);
        assert!(rep.full_total_only);
    }

    #[test]
    fn main_theorem_independent_of_p() {
        let a = verify_main_theorem(3, 2).unwrap();
        let b = verify_main_theorem(3, 3).unwrap();
        let c = verify_main_theorem(3, 5).unwrap();
        for rep in [&b, &c] {
            assert_eq!(a.max_e, rep.max_e);
            assert_eq!(a.compatible_subsets, rep.compatible_subsets);
            assert_eq!(a.simultaneous_equality_subsets, rep.simultaneous_equality_subsets);
        }
    }

    #[test]
    fn combinatorial_checker_matches_groebner_n2() {
        // every subset of the 4 coordinate primes of F_2[x,y], both routes
        let r = ring(2, &["x", "y"]).unwrap();
        for subset in 0u32..16 {
            let masks: Vec<u32> = (0..4).filter(|t| subset >> t & 1 == 1).collect();
            let atoms: Vec<u32> = masks.iter().map(|&t| coordinate_prime_face_mask(2, t)).collect();
            let fast = coordinate_subset_compatible(&atoms);
            let s = coord_system(&r, &masks);
            let slow = s.is_intersection_compatible(16).unwrap().verdict.is_true();
            assert_eq!(fast, slow, "subset {subset:#b}");
        }
    }

    #[test]
    fn combinatorial_checker_matches_groebner_n3_sampled() {
        let r = ring(2, &["x", "y", "z"]).unwrap();
        // a deterministic sample of subsets of the 8 coordinate primes
        for subset in (0u32..256).step_by(7) {
            let masks: Vec<u32> = (0..8).filter(|t| subset >> t & 1 == 1).collect();
            let atoms: Vec<u32> = masks.iter().map(|&t| coordinate_prime_face_mask(3, t)).collect();
            let fast = coordinate_subset_compatible(&atoms);
            let s = coord_system(&r, &masks);
            let slow = s.is_intersection_compatible(16).unwrap().verdict.is_true();
            assert_eq!(fast, slow, "subset {subset:#b}");
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn splitting_system_n2() {
        let r = ring(2, &["x", "y"]).unwrap();
        let theta = SplittingMap::new(&r, 1, parse_polynomial("x*y", &r).unwrap()).unwrap();
        let ss = system_from_splitting(&theta).unwrap();
        assert_eq!(ss.system.members().len(), 4);
        assert_eq!(ss.all_compatible.len(), 5);
        let counts = ss.system.count_by_dimension().unwrap();
        let bounds = check_bounds(&counts, 2, true);
        assert!(bounds.rows.iter().all(|row| row.within));
        assert!(bounds.rows.iter().take(3).all(|row| row.equality));
    }
}
