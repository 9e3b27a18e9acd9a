//! Batch verification of the Teter and trace results over every semigroup of
//! bounded genus.
//!
//! Each [`Check`] is an implication evaluated on the semigroups satisfying
//! its premise. Per-semigroup results are folded into a [`SweepReport`],
//! whose merge is commutative, so subtrees are swept in parallel.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{check_genus, EnumerationNode};
use crate::classify::{
    classify, exact_matches, t1_contains, teter_oracle, teter_oracle_with, ClassificationReport,
    GammaWindow, TeterCertificate,
};
use crate::error::{Result, MAX_ENUMERATION_GENUS};
use crate::families::has_half_frobenius_difference;
use crate::ideal::{scaled_canonical, trace};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Oracle and generator/PF matching agree on Teter-ness and on `gamma_H`.
    TeterEquivalence,
    /// Both certificates carry the same `delta`, omitted index and matching.
    CertificateAgreement,
    /// Teter implies `type = embdim - 1`.
    TeterTypeCodim,
    /// `delta_H` is `0` or `a_2 - a_1`, and positive exactly when `s = 1`.
    DeltaValues,
    /// `delta_H > 0` iff `t^{a_1}` is outside `t^{gamma_H} omega`.
    DeltaMultiplicity,
    /// No `gamma < F + a_1` gives a proper `t^gamma omega`; the wide oracle
    /// scan agrees with the candidate scan. Paranoid mode only.
    GammaLowerBound,
    /// For `gamma` with proper `t^gamma omega`, each `t^{a_i}` inside it
    /// matches exactly one pseudo-Frobenius number.
    UniqueMatch,
    /// Minimal multiplicity: almost symmetric iff Teter with `delta_H = 0`,
    /// iff `F + a_1` is a valid shift; then `t^{gamma_H} omega = (a_1..a_{n-1})`.
    MinMultiplicityAlmostSymmetric,
    /// Minimal multiplicity, embedding dimension 3, not symmetric: Teter.
    MinMultiplicityEmbdim3,
    /// Pseudo-symmetric, embedding dimension 3: Teter iff two generators
    /// differ by `F/2`.
    PseudoSymmetricEmbdim3,
    /// Embedding dimension 3, nearly Gorenstein, not almost symmetric: Teter.
    Embdim3NearlyGorenstein,
    /// Minimal multiplicity: `a_1` in the trace iff almost symmetric iff
    /// nearly Gorenstein, and each gives Teter when not symmetric.
    MinMultiplicityTrace,
    /// Symmetric implies almost symmetric implies nearly Gorenstein, plus
    /// basic PF / trace / genus sanity.
    ClassImplications,
}

impl Check {
    pub const ALL: [Check; 13] = [
        Check::TeterEquivalence,
        Check::CertificateAgreement,
        Check::TeterTypeCodim,
        Check::DeltaValues,
        Check::DeltaMultiplicity,
        Check::GammaLowerBound,
        Check::UniqueMatch,
        Check::MinMultiplicityAlmostSymmetric,
        Check::MinMultiplicityEmbdim3,
        Check::PseudoSymmetricEmbdim3,
        Check::Embdim3NearlyGorenstein,
        Check::MinMultiplicityTrace,
        Check::ClassImplications,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::TeterEquivalence => "teter-equivalence",
            Check::CertificateAgreement => "certificate-agreement",
            Check::TeterTypeCodim => "teter-type-codim",
            Check::DeltaValues => "delta-values",
            Check::DeltaMultiplicity => "delta-multiplicity",
            Check::GammaLowerBound => "gamma-lower-bound",
            Check::UniqueMatch => "unique-match",
            Check::MinMultiplicityAlmostSymmetric => "min-multiplicity-almost-symmetric",
            Check::MinMultiplicityEmbdim3 => "min-multiplicity-embdim3",
            Check::PseudoSymmetricEmbdim3 => "pseudo-symmetric-embdim3",
            Check::Embdim3NearlyGorenstein => "embdim3-nearly-gorenstein",
            Check::MinMultiplicityTrace => "min-multiplicity-trace",
            Check::ClassImplications => "class-implications",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    #[default]
    All,
    Teter,
    MinMultiplicity,
    Embdim3,
    Classes,
}

impl Suite {
    pub fn checks(self) -> &'static [Check] {
        use Check::*;
        match self {
            Suite::All => &Check::ALL,
            Suite::Teter => &[
                TeterEquivalence,
                CertificateAgreement,
                TeterTypeCodim,
                DeltaValues,
                DeltaMultiplicity,
                GammaLowerBound,
                UniqueMatch,
            ],
            Suite::MinMultiplicity => &[
                MinMultiplicityAlmostSymmetric,
                MinMultiplicityEmbdim3,
                MinMultiplicityTrace,
            ],
            Suite::Embdim3 => &[
                MinMultiplicityEmbdim3,
                PseudoSymmetricEmbdim3,
                Embdim3NearlyGorenstein,
            ],
            Suite::Classes => &[ClassImplications],
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "all" => Ok(Suite::All),
            "teter" => Ok(Suite::Teter),
            "min-multiplicity" => Ok(Suite::MinMultiplicity),
            "embdim3" => Ok(Suite::Embdim3),
            "classes" => Ok(Suite::Classes),
            other => Err(format!(
                "unknown suite `{other}` (expected all, teter, min-multiplicity, embdim3, classes)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepOptions {
    pub g_max: usize,
    pub suite: Suite,
    pub paranoid: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusCounts {
    pub total: u64,
    pub symmetric: u64,
    pub pseudo_symmetric: u64,
    pub almost_symmetric: u64,
    pub nearly_gorenstein: u64,
    pub min_multiplicity: u64,
    pub teter: u64,
}

impl GenusCounts {
    fn add(&mut self, o: &GenusCounts) {
        self.total += o.total;
        self.symmetric += o.symmetric;
        self.pseudo_symmetric += o.pseudo_symmetric;
        self.almost_symmetric += o.almost_symmetric;
        self.nearly_gorenstein += o.nearly_gorenstein;
        self.min_multiplicity += o.min_multiplicity;
        self.teter += o.teter;
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    /// Semigroups satisfying the premise.
    pub evaluated: u64,
    pub violations: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub check: Check,
    pub detail: String,
    pub report: ClassificationReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub g_max: usize,
    pub semigroups: u64,
    pub per_genus: Vec<GenusCounts>,
    pub checks: BTreeMap<Check, CheckTally>,
    pub violations: Vec<Violation>,
}

impl SweepReport {
    pub fn empty(g_max: usize) -> Self {
        Self {
            g_max,
            semigroups: 0,
            per_genus: vec![GenusCounts::default(); g_max + 1],
            checks: BTreeMap::new(),
            violations: Vec::new(),
        }
    }

    pub fn merge(mut self, other: SweepReport) -> Self {
        self.semigroups += other.semigroups;
        if self.per_genus.len() < other.per_genus.len() {
            self.per_genus
                .resize(other.per_genus.len(), GenusCounts::default());
        }
        for (mine, theirs) in self.per_genus.iter_mut().zip(&other.per_genus) {
            mine.add(theirs);
        }
        for (check, t) in other.checks {
            let e = self.checks.entry(check).or_default();
            e.evaluated += t.evaluated;
            e.violations += t.violations;
        }
        self.violations.extend(other.violations);
        self
    }

    pub fn total_violations(&self) -> u64 {
        self.checks.values().map(|t| t.violations).sum()
    }

    pub fn tally(&self, check: Check) -> CheckTally {
        self.checks.get(&check).copied().unwrap_or_default()
    }

    pub fn is_clean(&self) -> bool {
        self.total_violations() == 0
    }

    fn sort(&mut self) {
        self.violations.sort_by(|a, b| {
            (a.report.genus, &a.report.generators, a.check).cmp(&(
                b.report.genus,
                &b.report.generators,
                b.check,
            ))
        });
    }
}

/// Runs the chosen suite over every semigroup of genus `<= g_max`.
pub fn sweep(opts: &SweepOptions) -> Result<SweepReport> {
    check_genus(opts.g_max, MAX_ENUMERATION_GENUS)?;
    let mut report = sweep_subtree(EnumerationNode::root(), opts);
    report.sort();
    Ok(report)
}

fn sweep_subtree(node: EnumerationNode, opts: &SweepOptions) -> SweepReport {
    let here = check_semigroup(&node.semigroup, opts);
    if node.genus >= opts.g_max {
        return here;
    }
    let below = node
        .children()
        .into_par_iter()
        .map(|child| sweep_subtree(child, opts))
        .reduce(|| SweepReport::empty(opts.g_max), SweepReport::merge);
    here.merge(below)
}

struct Recorder<'a> {
    out: SweepReport,
    report: &'a ClassificationReport,
    enabled: &'a [Check],
}

impl Recorder<'_> {
    fn wants(&self, check: Check) -> bool {
        self.enabled.contains(&check)
    }

    fn record(&mut self, check: Check, ok: bool, detail: impl FnOnce() -> String) {
        let t = self.out.checks.entry(check).or_default();
        t.evaluated += 1;
        if !ok {
            t.violations += 1;
            self.out.violations.push(Violation {
                check,
                detail: detail(),
                report: self.report.clone(),
            });
        }
    }
}

/// Evaluates every enabled check on a single semigroup.
pub fn check_semigroup(h: &NumericalSemigroup, opts: &SweepOptions) -> SweepReport {
    let report = classify(h);
    let mut rec = Recorder {
        out: SweepReport::empty(opts.g_max.max(report.genus)),
        report: &report,
        enabled: opts.suite.checks(),
    };
    rec.out.semigroups = 1;
    let counts = &mut rec.out.per_genus[report.genus];
    counts.total = 1;
    counts.symmetric = report.symmetric as u64;
    counts.pseudo_symmetric = report.pseudo_symmetric as u64;
    counts.almost_symmetric = report.almost_symmetric as u64;
    counts.nearly_gorenstein = report.nearly_gorenstein as u64;
    counts.min_multiplicity = report.min_multiplicity as u64;
    counts.teter = report.teter as u64;

    if rec.wants(Check::ClassImplications) {
        class_implications(h, &mut rec);
    }
    if !report.symmetric {
        let oracle = teter_oracle(h).expect("non-symmetric");
        teter_checks(h, oracle.as_ref(), opts, &mut rec);
    }
    structural_checks(h, &mut rec);
    rec.out
}

fn class_implications(h: &NumericalSemigroup, rec: &mut Recorder<'_>) {
    let r = rec.report;
    let mut problems = Vec::new();
    if r.symmetric && !r.almost_symmetric {
        problems.push("symmetric but not almost symmetric");
    }
    if r.almost_symmetric && !r.nearly_gorenstein {
        problems.push("almost symmetric but not nearly Gorenstein");
    }
    if r.pseudo_symmetric && !r.almost_symmetric {
        problems.push("pseudo-symmetric but not almost symmetric");
    }
    if (r.trace_generators == [0]) != r.symmetric {
        problems.push("trace is the unit ideal iff symmetric fails");
    }
    if !h.is_natural() {
        if r.frobenius > 2 * r.genus as i64 - 1 {
            problems.push("F(H) > 2 genus - 1");
        }
        if r.pseudo_frobenius.last() != Some(&r.frobenius) {
            problems.push("max PF(H) != F(H)");
        }
        if r.pseudo_frobenius.iter().any(|&a| h.contains(a)) {
            problems.push("pseudo-Frobenius number inside H");
        }
        if !r.symmetric && r.trace_generators.iter().any(|&g| g == 0 || !h.contains(g)) {
            problems.push("trace not inside the maximal ideal");
        }
    }
    if h.gaps().len() != r.genus {
        problems.push("genus != number of gaps");
    }
    rec.record(Check::ClassImplications, problems.is_empty(), || {
        problems.join("; ")
    });
}

fn teter_checks(
    h: &NumericalSemigroup,
    oracle: Option<&TeterCertificate>,
    opts: &SweepOptions,
    rec: &mut Recorder<'_>,
) {
    let r = rec.report;
    let theorem = r.certificate.as_ref();
    let gens = h.min_gens();
    let (a1, a2) = (gens[0], gens[1]);
    let f = h.frobenius();

    if rec.wants(Check::TeterEquivalence) {
        let ok = oracle.map(|c| c.gamma) == theorem.map(|c| c.gamma);
        rec.record(Check::TeterEquivalence, ok, || {
            format!(
                "oracle gamma {:?}, matching gamma {:?}",
                oracle.map(|c| c.gamma),
                theorem.map(|c| c.gamma)
            )
        });
    }
    if let (Some(o), Some(t)) = (oracle, theorem) {
        if rec.wants(Check::CertificateAgreement) {
            rec.record(Check::CertificateAgreement, o == t, || {
                format!("oracle {o:?} vs matching {t:?}")
            });
        }
    }
    if let Some(o) = oracle {
        if rec.wants(Check::TeterTypeCodim) {
            rec.record(Check::TeterTypeCodim, r.cm_type + 1 == r.embdim, || {
                format!("type {} with embdim {}", r.cm_type, r.embdim)
            });
        }
        if rec.wants(Check::DeltaValues) {
            let value_ok = o.delta == 0 || o.delta == a2 - a1;
            let s_ok = (o.delta > 0) == (o.omitted == Some(1));
            rec.record(Check::DeltaValues, value_ok && s_ok, || {
                format!(
                    "delta {} omitted {:?} (a2 - a1 = {})",
                    o.delta,
                    o.omitted,
                    a2 - a1
                )
            });
        }
        if rec.wants(Check::DeltaMultiplicity) {
            let a1_inside = scaled_canonical(h, o.gamma)
                .expect("non-symmetric")
                .contains_exponent(a1);
            rec.record(
                Check::DeltaMultiplicity,
                (o.delta > 0) == !a1_inside,
                || {
                    format!(
                        "delta {} but a_1 inside t^gamma omega = {a1_inside}",
                        o.delta
                    )
                },
            );
        }
    }

    if opts.paranoid && rec.wants(Check::GammaLowerBound) {
        let low: Vec<i64> = (1..f + a1)
            .filter(|&g| t1_contains(h, g).expect("non-symmetric"))
            .collect();
        let wide = teter_oracle_with(h, GammaWindow::Paranoid).expect("non-symmetric");
        let ok = low.is_empty() && wide.as_ref() == oracle;
        rec.record(Check::GammaLowerBound, ok, || {
            format!("proper shifts below F + a_1: {low:?}; wide oracle {wide:?} vs {oracle:?}")
        });
    }

    if rec.wants(Check::UniqueMatch) {
        let an = *gens.last().expect("nonempty");
        let mut bad = Vec::new();
        for gamma in f + a1..=f + an {
            if !t1_contains(h, gamma).expect("non-symmetric") {
                continue;
            }
            let ideal = scaled_canonical(h, gamma).expect("non-symmetric");
            let matches = exact_matches(h, gamma).expect("non-symmetric");
            for (j, &a) in gens.iter().enumerate() {
                if ideal.contains_exponent(a) {
                    let hits = matches.iter().filter(|(jj, _)| *jj == j + 1).count();
                    if hits != 1 {
                        bad.push((gamma, j + 1, hits));
                    }
                }
            }
        }
        rec.record(Check::UniqueMatch, bad.is_empty(), || {
            format!("(gamma, j, matches) with != 1 match: {bad:?}")
        });
    }
}

fn structural_checks(h: &NumericalSemigroup, rec: &mut Recorder<'_>) {
    let r = rec.report;
    let n = r.embdim;

    if r.min_multiplicity && !r.symmetric && rec.wants(Check::MinMultiplicityAlmostSymmetric) {
        let cert = r.certificate.as_ref();
        let teter_delta0 = cert.is_some_and(|c| c.delta == 0);
        let base = r.frobenius + r.multiplicity;
        let base_valid = t1_contains(h, base).expect("non-symmetric")
            && crate::classify::t2_contains(h, base).expect("non-symmetric");
        let mut ok = r.almost_symmetric == teter_delta0 && base_valid == r.almost_symmetric;
        if r.almost_symmetric {
            if let Some(c) = cert {
                let ideal = scaled_canonical(h, c.gamma).expect("non-symmetric");
                ok &= ideal.minimal_generators() == &r.generators[..n - 1];
            }
        }
        rec.record(Check::MinMultiplicityAlmostSymmetric, ok, || {
            format!(
                "almost symmetric {}, certificate {cert:?}, F + a_1 valid {base_valid}",
                r.almost_symmetric
            )
        });
    }

    if r.min_multiplicity && n == 3 && !r.symmetric && rec.wants(Check::MinMultiplicityEmbdim3) {
        rec.record(Check::MinMultiplicityEmbdim3, r.teter, || {
            "not Teter".into()
        });
    }

    if r.pseudo_symmetric && n == 3 && rec.wants(Check::PseudoSymmetricEmbdim3) {
        let half = has_half_frobenius_difference(h);
        rec.record(Check::PseudoSymmetricEmbdim3, r.teter == half, || {
            format!("teter {} but half-Frobenius difference {half}", r.teter)
        });
    }

    if n == 3
        && !r.symmetric
        && r.nearly_gorenstein
        && !r.almost_symmetric
        && rec.wants(Check::Embdim3NearlyGorenstein)
    {
        rec.record(Check::Embdim3NearlyGorenstein, r.teter, || {
            "not Teter".into()
        });
    }

    if r.min_multiplicity && rec.wants(Check::MinMultiplicityTrace) {
        let a1_in = if r.symmetric {
            true
        } else {
            trace(h)
                .expect("non-symmetric")
                .contains_exponent(r.multiplicity)
        };
        let mut ok = a1_in == r.multiplicity_in_trace
            && a1_in == r.almost_symmetric
            && r.almost_symmetric == r.nearly_gorenstein;
        if !r.symmetric && a1_in {
            ok &= r.teter;
        }
        rec.record(Check::MinMultiplicityTrace, ok, || {
            format!(
                "a_1 in trace {a1_in}, almost symmetric {}, nearly Gorenstein {}, teter {}",
                r.almost_symmetric, r.nearly_gorenstein, r.teter
            )
        });
    }
}
