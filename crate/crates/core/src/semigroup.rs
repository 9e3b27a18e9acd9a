//! Numerical semigroups and their elementary invariants.
//!
//! A semigroup is stored through its minimal generators and the Apéry set
//! with respect to the multiplicity. Everything else (membership, Frobenius
//! number, genus, pseudo-Frobenius numbers) is read off that table.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, MAX_MULTIPLICITY};

const UNREACHED: i64 = i64::MAX;

/// A numerical semigroup `H = <a_1, ..., a_n>` with `gcd = 1`.
///
/// Immutable once built. Equality, ordering and hashing only look at the
/// minimal generators, which determine the semigroup.
#[derive(Clone, Debug)]
pub struct NumericalSemigroup {
    min_gens: Vec<i64>,
    apery: Vec<i64>,
    frobenius: i64,
    genus: usize,
    pseudo_frobenius: Vec<i64>,
}

/// Numeric invariants of a semigroup and of its ring `k[H]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub multiplicity: i64,
    pub embdim: usize,
    pub codim: usize,
    #[serde(rename = "type")]
    pub cm_type: usize,
    pub frobenius: i64,
    pub genus: usize,
    pub conductor: i64,
    pub a_invariant: i64,
    pub min_multiplicity: bool,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, reducing them to the minimal
    /// generating system.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositive(bad));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        let multiplicity = sorted[0];
        if multiplicity > MAX_MULTIPLICITY {
            return Err(Error::ResourceLimit {
                what: "multiplicity",
                value: multiplicity,
                limit: MAX_MULTIPLICITY,
            });
        }
        let g = sorted.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::NotCoprime(g));
        }

        // The table starts as Ap(<a_1>, a_1) and grows one kept generator at a
        // time, so membership of later candidates is tested against the
        // semigroup of the generators kept so far.
        let m = multiplicity as usize;
        let mut apery = vec![UNREACHED; m];
        apery[0] = 0;
        let mut min_gens = vec![multiplicity];
        for &cand in &sorted[1..] {
            let r = (cand % multiplicity) as usize;
            if apery[r] <= cand {
                continue;
            }
            round_robin(&mut apery, cand)?;
            min_gens.push(cand);
        }
        debug_assert!(apery.iter().all(|&w| w != UNREACHED));

        let max_w = *apery.iter().max().expect("multiplicity >= 1");
        let frobenius = max_w - multiplicity;
        let genus = apery
            .iter()
            .enumerate()
            .map(|(r, &w)| ((w - r as i64) / multiplicity) as usize)
            .sum();
        let pseudo_frobenius = maximal_apery_elements(&apery, &min_gens)
            .into_iter()
            .map(|w| w - multiplicity)
            .collect();

        Ok(Self {
            min_gens,
            apery,
            frobenius,
            genus,
            pseudo_frobenius,
        })
    }

    /// The full semigroup `N = <1>`.
    pub fn natural() -> Self {
        Self::from_generators(&[1]).expect("<1> is a numerical semigroup")
    }

    pub fn min_gens(&self) -> &[i64] {
        &self.min_gens
    }

    /// Smallest nonzero element `a_1`.
    pub fn multiplicity(&self) -> i64 {
        self.min_gens[0]
    }

    pub fn embdim(&self) -> usize {
        self.min_gens.len()
    }

    /// `apery()[r]` is the least element of `H` congruent to `r` mod `a_1`.
    pub fn apery(&self) -> &[i64] {
        &self.apery
    }

    /// Frobenius number; `-1` for `N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn is_natural(&self) -> bool {
        self.min_gens == [1]
    }

    pub fn contains(&self, m: i64) -> bool {
        if m < 0 {
            return false;
        }
        let a1 = self.multiplicity();
        m >= self.apery[(m % a1) as usize]
    }

    /// Sorted gaps `N \ H`.
    pub fn gaps(&self) -> Vec<i64> {
        let a1 = self.multiplicity();
        let mut gaps: Vec<i64> = self
            .apery
            .iter()
            .enumerate()
            .flat_map(|(r, &w)| (r as i64..w).step_by(a1 as usize))
            .collect();
        gaps.sort_unstable();
        gaps
    }

    /// Pseudo-Frobenius numbers in increasing order; the last one is `F(H)`.
    pub fn pseudo_frobenius(&self) -> Result<&[i64]> {
        if self.is_natural() {
            return Err(Error::TrivialSemigroup);
        }
        Ok(&self.pseudo_frobenius)
    }

    /// Cohen-Macaulay type of `k[H]`, i.e. `|PF(H)|` (0 for `N`).
    pub fn cm_type(&self) -> usize {
        self.pseudo_frobenius.len()
    }

    /// `a_1 == embdim(H)`.
    pub fn has_min_multiplicity(&self) -> bool {
        self.multiplicity() == self.embdim() as i64
    }

    pub fn invariants(&self) -> Invariants {
        Invariants {
            multiplicity: self.multiplicity(),
            embdim: self.embdim(),
            codim: self.embdim() - 1,
            cm_type: self.cm_type(),
            frobenius: self.frobenius,
            genus: self.genus,
            conductor: self.conductor(),
            a_invariant: self.frobenius,
            min_multiplicity: self.has_min_multiplicity(),
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.min_gens == other.min_gens
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.min_gens.hash(state);
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.min_gens.cmp(&other.min_gens)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.min_gens.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Adds generator `g` to a shortest-path table over residues mod `apery.len()`.
///
/// Residues split into `gcd(m, g)` cycles under `r -> r + g`. Each cycle is
/// walked once starting from its current minimum, which relaxes every edge of
/// weight `g` to a fixpoint in a single pass.
fn round_robin(apery: &mut [i64], g: i64) -> Result<()> {
    let m = apery.len();
    let step = (g % m as i64) as usize;
    let cycles = gcd(m as i64, step as i64) as usize;
    let len = m / cycles;
    for start in 0..cycles {
        let mut best = UNREACHED;
        let mut best_r = start;
        let mut r = start;
        for _ in 0..len {
            if apery[r] < best {
                best = apery[r];
                best_r = r;
            }
            r = (r + step) % m;
        }
        if best == UNREACHED {
            continue;
        }
        let mut cur = best;
        let mut r = best_r;
        for _ in 1..len {
            r = (r + step) % m;
            cur = cur.checked_add(g).ok_or(Error::Overflow("Apery table"))?;
            if apery[r] < cur {
                cur = apery[r];
            } else {
                apery[r] = cur;
            }
        }
    }
    Ok(())
}

/// Nonzero Apéry elements `w` with `w + a_i` outside the Apéry set for every
/// `i >= 2`; these are the maxima of `Ap(H, a_1)` under `x <= y iff y - x in H`.
fn maximal_apery_elements(apery: &[i64], min_gens: &[i64]) -> Vec<i64> {
    let a1 = min_gens[0];
    let mut out: Vec<i64> = apery
        .iter()
        .copied()
        .filter(|&w| w != 0)
        .filter(|&w| {
            min_gens[1..].iter().all(|&a| {
                let s = w + a;
                apery[(s % a1) as usize] != s
            })
        })
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn natural_semigroup() {
        let h = ns(&[1]);
        assert_eq!(h.min_gens(), &[1]);
        assert_eq!(h.frobenius(), -1);
        assert_eq!(h.genus(), 0);
        assert!(h.gaps().is_empty());
        assert_eq!(h.cm_type(), 0);
        assert_eq!(h.pseudo_frobenius(), Err(Error::TrivialSemigroup));
        let inv = h.invariants();
        assert_eq!(
            (inv.multiplicity, inv.embdim, inv.codim, inv.genus),
            (1, 1, 0, 0)
        );
    }

    #[test]
    fn minimalizes_generators() {
        assert_eq!(ns(&[4, 7, 9, 10]).min_gens(), &[4, 7, 9, 10]);
        assert_eq!(ns(&[3, 4, 5, 7]).min_gens(), &[3, 4, 5]);
        assert_eq!(ns(&[10, 6, 6, 15, 12]).min_gens(), &[6, 10, 15]);
        assert_eq!(ns(&[1, 5, 9]).min_gens(), &[1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyInput)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NotCoprime(2))
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[3, 0]),
            Err(Error::NonPositive(0))
        );
        assert!(matches!(
            NumericalSemigroup::from_generators(&[1_000_001, 1_000_002]),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn membership() {
        let h = ns(&[3, 4, 5]);
        assert!(h.contains(0));
        assert!(!h.contains(2));
        assert!(!h.contains(-3));
        let h = ns(&[4, 7, 9, 10]);
        assert!(!h.contains(6));
        assert!(h.contains(7));
    }

    #[test]
    fn pseudo_frobenius_examples() {
        assert_eq!(
            ns(&[11, 12, 14, 15]).pseudo_frobenius().unwrap(),
            &[13, 31, 32]
        );
        assert_eq!(ns(&[4, 7, 9, 10]).pseudo_frobenius().unwrap(), &[3, 5, 6]);
        assert_eq!(ns(&[3, 4, 5]).pseudo_frobenius().unwrap(), &[1, 2]);
        assert_eq!(ns(&[2, 3]).pseudo_frobenius().unwrap(), &[1]);
    }

    #[test]
    fn invariants_examples() {
        let inv = ns(&[4, 7, 9, 10]).invariants();
        assert_eq!(inv.multiplicity, 4);
        assert_eq!(inv.embdim, 4);
        assert!(inv.min_multiplicity);
        assert_eq!(inv.cm_type, 3);

        let inv = ns(&[3, 4, 5]).invariants();
        assert_eq!((inv.cm_type, inv.codim, inv.min_multiplicity), (2, 2, true));
        assert_eq!((inv.frobenius, inv.conductor, inv.a_invariant), (2, 3, 2));
    }

    #[test]
    fn apery_table_shape() {
        let h = ns(&[5, 7, 9]);
        let ap = h.apery();
        assert_eq!(ap.len(), 5);
        assert_eq!(ap[0], 0);
        for (r, &w) in ap.iter().enumerate() {
            assert_eq!(w % 5, r as i64);
        }
        assert_eq!(h.gaps().len(), h.genus());
    }

    #[test]
    fn display() {
        assert_eq!(ns(&[5, 3, 4]).to_string(), "<3,4,5>");
    }
}
