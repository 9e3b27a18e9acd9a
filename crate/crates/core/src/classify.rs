//! Symmetry classes of numerical semigroups and the Teter property of their
//! semigroup rings.
//!
//! The Teter property is decided two ways. [`teter_oracle`] searches
//! directly for a shift `gamma` making `t^gamma omega` a proper ideal of `R`
//! that contains at least `n - 1` of the monomials `t^{a_i}`.
//! [`teter_theorem`] instead matches minimal generators against
//! pseudo-Frobenius numbers in reverse order, leaving out one generator `a_s`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{scaled_canonical, trace};
use crate::semigroup::NumericalSemigroup;

/// Witness for the Teter property.
///
/// Indices are 1-based: `omitted` is the `s` with `t^{a_s}` outside
/// `t^gamma omega`, and each `(j, i)` in `matches` records `a_j = gamma - alpha_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TeterCertificate {
    pub gamma: i64,
    pub delta: i64,
    /// `None` only if every generator lands in `t^gamma omega`.
    pub omitted: Option<usize>,
    pub matches: Vec<(usize, usize)>,
}

/// Width of the `gamma` scan used by [`teter_oracle_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GammaWindow {
    /// `[F + a_1, F + a_n]` together with every `a_i + alpha_j`.
    #[default]
    Candidates,
    /// Every `gamma` in `[1, 2 (F + a_n)]`.
    Paranoid,
}

/// Every classification predicate and invariant for one semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub generators: Vec<i64>,
    pub multiplicity: i64,
    pub embdim: usize,
    pub codim: usize,
    #[serde(rename = "type")]
    pub cm_type: usize,
    pub frobenius: i64,
    pub genus: usize,
    pub conductor: i64,
    pub a_invariant: i64,
    #[serde(rename = "pf")]
    pub pseudo_frobenius: Vec<i64>,
    pub gorenstein: bool,
    pub symmetric: bool,
    pub pseudo_symmetric: bool,
    pub almost_symmetric: bool,
    pub nearly_gorenstein: bool,
    pub min_multiplicity: bool,
    pub teter: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub teter_note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<TeterCertificate>,
    pub trace_generators: Vec<i64>,
    pub multiplicity_in_trace: bool,
}

/// `type(H) = 1`; also true for `N`.
pub fn is_symmetric(h: &NumericalSemigroup) -> bool {
    h.is_natural() || h.cm_type() == 1
}

/// `PF(H) = {F/2, F}`.
pub fn is_pseudo_symmetric(h: &NumericalSemigroup) -> bool {
    let f = h.frobenius();
    match h.pseudo_frobenius() {
        Ok(&[lo, hi]) => f % 2 == 0 && lo * 2 == f && hi == f,
        _ => false,
    }
}

/// `alpha_i + alpha_{r-i} = F` for `1 <= i <= r - 1`.
pub fn is_almost_symmetric(h: &NumericalSemigroup) -> bool {
    let Ok(pf) = h.pseudo_frobenius() else {
        return true;
    };
    let f = h.frobenius();
    let rest = &pf[..pf.len() - 1];
    rest.iter().zip(rest.iter().rev()).all(|(a, b)| a + b == f)
}

/// The canonical trace contains the maximal ideal, i.e. every `a_i`.
pub fn is_nearly_gorenstein(h: &NumericalSemigroup) -> bool {
    if is_symmetric(h) {
        return true;
    }
    let tr = trace(h).expect("non-symmetric semigroup is not N");
    h.min_gens().iter().all(|&a| tr.contains_exponent(a))
}

fn require_non_symmetric(h: &NumericalSemigroup) -> Result<()> {
    if is_symmetric(h) {
        Err(Error::SymmetricInput(h.to_string()))
    } else {
        Ok(())
    }
}

/// `t^gamma omega` is a proper ideal of `R`.
pub fn t1_contains(h: &NumericalSemigroup, gamma: i64) -> Result<bool> {
    require_non_symmetric(h)?;
    Ok(gamma > 0 && scaled_canonical(h, gamma)?.is_proper_in_r())
}

/// At least `n - 1` of the `t^{a_i}` lie in `t^gamma omega`.
pub fn t2_contains(h: &NumericalSemigroup, gamma: i64) -> Result<bool> {
    require_non_symmetric(h)?;
    Ok(gamma > 0 && generators_in_scaled(h, gamma)?.len() + 1 >= h.embdim())
}

/// 1-based indices `i` with `t^{a_i}` in `t^gamma omega`.
fn generators_in_scaled(h: &NumericalSemigroup, gamma: i64) -> Result<Vec<usize>> {
    let pf = h.pseudo_frobenius()?;
    Ok(h.min_gens()
        .iter()
        .enumerate()
        .filter(|&(_, &a)| pf.iter().any(|&alpha| h.contains(a - gamma + alpha)))
        .map(|(i, _)| i + 1)
        .collect())
}

/// Pairs `(j, i)` with `a_j = gamma - alpha_i`, 1-based.
pub fn exact_matches(h: &NumericalSemigroup, gamma: i64) -> Result<Vec<(usize, usize)>> {
    let pf = h.pseudo_frobenius()?;
    let mut out = Vec::new();
    for (j, &a) in h.min_gens().iter().enumerate() {
        for (i, &alpha) in pf.iter().enumerate() {
            if a == gamma - alpha {
                out.push((j + 1, i + 1));
            }
        }
    }
    Ok(out)
}

/// Searches `gamma` definitionally over the candidate window.
pub fn teter_oracle(h: &NumericalSemigroup) -> Result<Option<TeterCertificate>> {
    teter_oracle_with(h, GammaWindow::Candidates)
}

pub fn teter_oracle_with(
    h: &NumericalSemigroup,
    window: GammaWindow,
) -> Result<Option<TeterCertificate>> {
    require_non_symmetric(h)?;
    let pf = h.pseudo_frobenius()?;
    let gens = h.min_gens();
    let f = h.frobenius();
    let a1 = gens[0];
    let an = *gens.last().expect("nonempty");

    let mut candidates: Vec<i64> = match window {
        GammaWindow::Candidates => {
            let mut c: Vec<i64> = (f + a1..=f + an).collect();
            c.extend(
                gens.iter()
                    .flat_map(|&a| pf.iter().map(move |&alpha| a + alpha)),
            );
            c
        }
        GammaWindow::Paranoid => (1..=2 * (f + an)).collect(),
    };
    candidates.sort_unstable();
    candidates.dedup();

    for gamma in candidates {
        if !t1_contains(h, gamma)? {
            continue;
        }
        let inside = generators_in_scaled(h, gamma)?;
        if inside.len() + 1 < h.embdim() {
            continue;
        }
        let omitted = (1..=h.embdim()).find(|i| !inside.contains(i));
        let matches = exact_matches(h, gamma)?
            .into_iter()
            .filter(|(j, _)| inside.contains(j))
            .collect();
        return Ok(Some(TeterCertificate {
            gamma,
            delta: gamma - (f + a1),
            omitted,
            matches,
        }));
    }
    Ok(None)
}

/// Decides the Teter property from the generator / pseudo-Frobenius matching.
///
/// Requires `type(H) = n - 1` and an omitted index `s` with
/// `F + a_1 + delta = a_j + alpha_{n-j}` for `2 <= j < s` and
/// `F + a_1 + delta = a_j + alpha_{n+1-j}` for `j > s`, where
/// `delta = a_2 - a_1` if `s = 1` and `0` otherwise. Several `s` may work;
/// the one with the smallest `gamma = F + a_1 + delta` is returned, ties
/// going to the smallest `s`.
pub fn teter_theorem(h: &NumericalSemigroup) -> Result<Option<TeterCertificate>> {
    require_non_symmetric(h)?;
    let pf = h.pseudo_frobenius()?;
    let n = h.embdim();
    if pf.len() + 1 != n {
        return Ok(None);
    }
    let a = |j: usize| h.min_gens()[j - 1];
    let alpha = |i: usize| pf[i - 1];
    let f = h.frobenius();

    let mut best: Option<TeterCertificate> = None;
    for s in 1..=n {
        let delta = if s == 1 { a(2) - a(1) } else { 0 };
        let gamma = f + a(1) + delta;
        let partner = |j: usize| if j < s { n - j } else { n + 1 - j };
        let holds = (2..=n)
            .filter(|&j| j != s)
            .all(|j| gamma == a(j) + alpha(partner(j)));
        if !holds {
            continue;
        }
        if best.as_ref().is_some_and(|b| b.gamma <= gamma) {
            continue;
        }
        // a_1 pairs with alpha_{n-1} = F whenever it is not the omitted one.
        let matches = (1..=n)
            .filter(|&j| j != s)
            .map(|j| (j, partner(j)))
            .collect();
        best = Some(TeterCertificate {
            gamma,
            delta,
            omitted: Some(s),
            matches,
        });
    }
    Ok(best)
}

/// `(gamma_H, delta_H)` when `R_H` is Teter.
pub fn gamma_delta(h: &NumericalSemigroup) -> Result<Option<(i64, i64)>> {
    Ok(teter_oracle(h)?.map(|c| (c.gamma, c.delta)))
}

pub fn classify(h: &NumericalSemigroup) -> ClassificationReport {
    let inv = h.invariants();
    let symmetric = is_symmetric(h);

    let (certificate, teter_note) = if symmetric {
        (
            None,
            Some("gorenstein: Teter property requires a non-Gorenstein ring".to_string()),
        )
    } else {
        let cert = teter_theorem(h).expect("non-symmetric");
        debug_assert_eq!(
            cert.as_ref().map(|c| c.gamma),
            teter_oracle(h).expect("non-symmetric").map(|c| c.gamma),
            "Teter deciders disagree on {h}"
        );
        (cert, None)
    };

    let (trace_generators, multiplicity_in_trace, nearly_gorenstein) = if symmetric {
        (vec![0], true, true)
    } else {
        let tr = trace(h).expect("non-symmetric");
        let ng = h.min_gens().iter().all(|&a| tr.contains_exponent(a));
        (
            tr.minimal_generators().to_vec(),
            tr.contains_exponent(h.multiplicity()),
            ng,
        )
    };

    ClassificationReport {
        generators: h.min_gens().to_vec(),
        multiplicity: inv.multiplicity,
        embdim: inv.embdim,
        codim: inv.codim,
        cm_type: inv.cm_type,
        frobenius: inv.frobenius,
        genus: inv.genus,
        conductor: inv.conductor,
        a_invariant: inv.a_invariant,
        pseudo_frobenius: h
            .pseudo_frobenius()
            .map(<[i64]>::to_vec)
            .unwrap_or_default(),
        gorenstein: symmetric,
        symmetric,
        pseudo_symmetric: is_pseudo_symmetric(h),
        almost_symmetric: is_almost_symmetric(h),
        nearly_gorenstein,
        min_multiplicity: inv.min_multiplicity,
        teter: certificate.is_some(),
        teter_note,
        certificate,
        trace_generators,
        multiplicity_in_trace,
    }
}
