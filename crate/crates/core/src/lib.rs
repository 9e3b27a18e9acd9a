//! Numerical semigroups, the canonical trace of their semigroup rings, and
//! two independent deciders for the Teter property.
//!
//! ```
//! use nsring_core::{classify, NumericalSemigroup};
//!
//! let h = NumericalSemigroup::from_generators(&[11, 12, 14, 15]).unwrap();
//! let report = classify(&h);
//! assert_eq!(report.pseudo_frobenius, vec![13, 31, 32]);
//! assert!(report.nearly_gorenstein && !report.teter);
//! ```

pub mod classify;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod ideal;
pub mod report;
pub mod semigroup;

pub use classify::{
    classify, gamma_delta, is_almost_symmetric, is_nearly_gorenstein, is_pseudo_symmetric,
    is_symmetric, t1_contains, t2_contains, teter_oracle, teter_oracle_with, teter_theorem,
    ClassificationReport, GammaWindow, TeterCertificate,
};
pub use enumeration::sweep::{sweep, Check, Suite, SweepOptions, SweepReport};
pub use enumeration::{brute_force_enumerate, enumerate_by_genus, EnumerationNode};
pub use error::{Error, Result};
pub use families::{predicted_vs_actual, FamilyComparison, FamilySpec};
pub use ideal::{anti_canonical, canonical_ideal, scaled_canonical, trace, RelativeIdeal};
pub use report::ReportDocument;
pub use semigroup::{Invariants, NumericalSemigroup};
