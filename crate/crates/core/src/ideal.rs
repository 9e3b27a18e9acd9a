//! Relative (fractional) monomial ideals of `k[H]`, described by their
//! exponent sets `E = union of (g + H)` over a finite generating set.
//!
//! The canonical ideal, its inverse and the canonical trace all live here.

use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// An `H`-stable set of exponents in `Z`, kept as its minimal generators.
#[derive(Clone, Debug)]
pub struct RelativeIdeal<'a> {
    ambient: &'a NumericalSemigroup,
    gens: Vec<i64>,
}

impl<'a> RelativeIdeal<'a> {
    /// Ideal generated by `gens`; the list is minimalized.
    pub fn new(
        ambient: &'a NumericalSemigroup,
        gens: impl IntoIterator<Item = i64>,
    ) -> Result<Self> {
        let gens = minimalize(ambient, gens.into_iter().collect());
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self { ambient, gens })
    }

    /// `R = k[H]` itself.
    pub fn unit(ambient: &'a NumericalSemigroup) -> Self {
        Self::principal(ambient, 0)
    }

    /// `t^e R`.
    pub fn principal(ambient: &'a NumericalSemigroup, e: i64) -> Self {
        Self {
            ambient,
            gens: vec![e],
        }
    }

    pub fn ambient(&self) -> &'a NumericalSemigroup {
        self.ambient
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.gens
    }

    pub fn contains_exponent(&self, m: i64) -> bool {
        self.gens.iter().any(|&g| self.ambient.contains(m - g))
    }

    /// Least exponent of the ideal.
    pub fn min_exponent(&self) -> i64 {
        self.gens[0]
    }

    /// Smallest `c` with `[c, oo)` inside the exponent set.
    pub fn conductor(&self) -> i64 {
        let mut c = self.min_exponent() + self.ambient.conductor();
        while c > self.min_exponent() && self.contains_exponent(c - 1) {
            c -= 1;
        }
        c
    }

    /// Contained in `R` and different from `R`.
    pub fn is_proper_in_r(&self) -> bool {
        self.gens.iter().all(|&g| self.ambient.contains(g)) && !self.contains_exponent(0)
    }

    pub fn is_unit(&self) -> bool {
        self.gens == [0]
    }

    /// `t^k I`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            ambient: self.ambient,
            gens: self.gens.iter().map(|g| g + k).collect(),
        }
    }

    /// Exponents of the ideal inside `lo..=hi`.
    pub fn members_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).filter(|&m| self.contains_exponent(m)).collect()
    }

    /// `self : other = { m : m + g in self for every generator g of other }`.
    pub fn colon(&self, other: &RelativeIdeal<'_>) -> Result<RelativeIdeal<'a>> {
        self.check_ambient(other)?;
        let lo = self.min_exponent() - other.min_exponent();
        // Past this point every m + g clears the conductor of `self`.
        let all_in = self.conductor() - other.min_exponent();
        let a1 = self.ambient.multiplicity();
        let members = (lo..all_in + a1)
            .filter(|&m| other.gens.iter().all(|&g| self.contains_exponent(m + g)))
            .collect();
        Ok(Self {
            ambient: self.ambient,
            gens: minimalize(self.ambient, members),
        })
    }

    pub fn product(&self, other: &RelativeIdeal<'_>) -> Result<RelativeIdeal<'a>> {
        self.check_ambient(other)?;
        let sums = self
            .gens
            .iter()
            .flat_map(|&a| other.gens.iter().map(move |&b| a + b))
            .collect();
        Ok(Self {
            ambient: self.ambient,
            gens: minimalize(self.ambient, sums),
        })
    }

    fn check_ambient(&self, other: &RelativeIdeal<'_>) -> Result<()> {
        if std::ptr::eq(self.ambient, other.ambient) || self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }
}

impl PartialEq for RelativeIdeal<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.gens == other.gens
    }
}

impl Eq for RelativeIdeal<'_> {}

impl fmt::Display for RelativeIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "t^{g}")?;
        }
        f.write_str(")")
    }
}

/// Sorted minimal generating set of the ideal generated by `gens`.
fn minimalize(h: &NumericalSemigroup, mut gens: Vec<i64>) -> Vec<i64> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<i64> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|&k| h.contains(g - k)) {
            kept.push(g);
        }
    }
    kept
}

/// `omega = sum of R t^{-alpha}` over the pseudo-Frobenius numbers.
///
/// Its exponent set is `{ m : -m not in H }`.
pub fn canonical_ideal(h: &NumericalSemigroup) -> Result<RelativeIdeal<'_>> {
    let pf = h.pseudo_frobenius()?;
    RelativeIdeal::new(h, pf.iter().map(|&a| -a))
}

/// `omega^{-1} = R : omega`.
pub fn anti_canonical(h: &NumericalSemigroup) -> Result<RelativeIdeal<'_>> {
    let omega = canonical_ideal(h)?;
    RelativeIdeal::unit(h).colon(&omega)
}

/// Canonical trace `omega * omega^{-1}`.
pub fn trace(h: &NumericalSemigroup) -> Result<RelativeIdeal<'_>> {
    let omega = canonical_ideal(h)?;
    let inverse = RelativeIdeal::unit(h).colon(&omega)?;
    omega.product(&inverse)
}

/// `t^gamma omega`, generated by `gamma - alpha` for `alpha` in `PF(H)`.
pub fn scaled_canonical(h: &NumericalSemigroup, gamma: i64) -> Result<RelativeIdeal<'_>> {
    Ok(canonical_ideal(h)?.shift(gamma))
}
