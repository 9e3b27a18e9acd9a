//! Parametric families whose classification is known in closed form, and a
//! comparison of those predictions with the computed classification.

use serde::{Deserialize, Serialize};

use crate::classify::{classify, ClassificationReport};
use crate::error::{Error, Result};
use crate::semigroup::{gcd, NumericalSemigroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `<a, s a + d, s a + 2d, ..., s a + n d>`.
    GeneralizedArithmetic { a: i64, s: i64, d: i64, n: i64 },
    /// `<bc + b + 1, ac + c + 1, ab + a + 1>`.
    PseudoSymmetric3Gen { a: i64, b: i64, c: i64 },
}

/// Closed-form expectations. `None` means the family makes no claim.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub pseudo_frobenius: Option<Vec<i64>>,
    #[serde(rename = "type")]
    pub cm_type: Option<usize>,
    pub pseudo_symmetric: Option<bool>,
    pub teter: Option<bool>,
    /// Some pair of generators differs by `F(H)/2`.
    pub half_frobenius_difference: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyComparison {
    pub spec: FamilySpec,
    pub predicted: Prediction,
    pub actual: ClassificationReport,
    pub half_frobenius_difference: bool,
    pub agree: bool,
    pub mismatches: Vec<String>,
}

fn positive(name: &str, v: i64) -> Result<()> {
    if v > 0 {
        Ok(())
    } else {
        Err(Error::ParameterViolation(format!(
            "{name} = {v} must be positive"
        )))
    }
}

fn checked(terms: &[i64]) -> Result<i64> {
    terms
        .iter()
        .try_fold(0i64, |acc, &t| acc.checked_add(t))
        .ok_or(Error::Overflow("family generators"))
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("family generators"))
}

/// `<a, s a + d, ..., s a + n d>`; requires `gcd(a, d) = 1`, `n >= 2` and
/// `a > n`, and that all `n + 1` listed generators are minimal.
pub fn generalized_arithmetic(a: i64, s: i64, d: i64, n: i64) -> Result<NumericalSemigroup> {
    for (name, v) in [("a", a), ("s", s), ("d", d), ("n", n)] {
        positive(name, v)?;
    }
    if n < 2 {
        return Err(Error::ParameterViolation(format!(
            "n = {n} must be at least 2"
        )));
    }
    if a <= n {
        return Err(Error::ParameterViolation(format!(
            "a = {a} must exceed n = {n}"
        )));
    }
    if gcd(a, d) != 1 {
        return Err(Error::ParameterViolation(format!(
            "gcd(a, d) = gcd({a}, {d}) != 1"
        )));
    }
    let sa = mul(s, a)?;
    let mut gens = vec![a];
    for i in 1..=n {
        gens.push(checked(&[sa, mul(i, d)?])?);
    }
    let h = NumericalSemigroup::from_generators(&gens)?;
    if h.embdim() != gens.len() {
        return Err(Error::ParameterViolation(format!(
            "generators {gens:?} are not minimal (embedding dimension {})",
            h.embdim()
        )));
    }
    Ok(h)
}

/// `<bc + b + 1, ac + c + 1, ab + a + 1>`; requires the first two to be
/// coprime and all three to be distinct minimal generators.
pub fn pseudo_symmetric_3gen(a: i64, b: i64, c: i64) -> Result<NumericalSemigroup> {
    for (name, v) in [("a", a), ("b", b), ("c", c)] {
        positive(name, v)?;
    }
    let gens = [
        checked(&[mul(b, c)?, b, 1])?,
        checked(&[mul(a, c)?, c, 1])?,
        checked(&[mul(a, b)?, a, 1])?,
    ];
    if gcd(gens[0], gens[1]) != 1 {
        return Err(Error::ParameterViolation(format!(
            "gcd({}, {}) != 1",
            gens[0], gens[1]
        )));
    }
    if gens[0] == gens[1] || gens[1] == gens[2] || gens[0] == gens[2] {
        return Err(Error::ParameterViolation(format!(
            "generators {gens:?} collide"
        )));
    }
    let h = NumericalSemigroup::from_generators(&gens)?;
    if h.embdim() != 3 {
        return Err(Error::ParameterViolation(format!(
            "generators {gens:?} are not minimal (embedding dimension {})",
            h.embdim()
        )));
    }
    Ok(h)
}

impl FamilySpec {
    pub fn build(&self) -> Result<NumericalSemigroup> {
        match *self {
            Self::GeneralizedArithmetic { a, s, d, n } => generalized_arithmetic(a, s, d, n),
            Self::PseudoSymmetric3Gen { a, b, c } => pseudo_symmetric_3gen(a, b, c),
        }
    }

    pub fn predict(&self) -> Prediction {
        match *self {
            Self::GeneralizedArithmetic { a, s, d, n } => {
                if a % n != 1 {
                    return Prediction::default();
                }
                let q = a / n;
                let pf = ((q - 1) * n + 1..=q * n)
                    .map(|i| s * a * q + i * d - a)
                    .collect();
                Prediction {
                    pseudo_frobenius: Some(pf),
                    cm_type: Some(n as usize),
                    teter: Some(true),
                    ..Prediction::default()
                }
            }
            Self::PseudoSymmetric3Gen { a, b, c } => {
                let k = a * b * c - 1;
                let minimal_one = a.min(b).min(c) == 1;
                Prediction {
                    pseudo_frobenius: Some(vec![k, 2 * k]),
                    cm_type: Some(2),
                    pseudo_symmetric: Some(true),
                    teter: Some(minimal_one),
                    half_frobenius_difference: Some(minimal_one),
                }
            }
        }
    }
}

/// Whether two minimal generators differ by exactly `F(H)/2`.
pub fn has_half_frobenius_difference(h: &NumericalSemigroup) -> bool {
    let f = h.frobenius();
    if f <= 0 || f % 2 != 0 {
        return false;
    }
    let gens = h.min_gens();
    gens.iter()
        .enumerate()
        .any(|(i, &x)| gens[i + 1..].iter().any(|&y| y - x == f / 2))
}

pub fn predicted_vs_actual(spec: FamilySpec) -> Result<FamilyComparison> {
    let h = spec.build()?;
    let predicted = spec.predict();
    let actual = classify(&h);
    let half = has_half_frobenius_difference(&h);

    let mut mismatches = Vec::new();
    let mut cmp = |name: &str, want: Option<String>, got: String| {
        if let Some(want) = want {
            if want != got {
                mismatches.push(format!("{name}: predicted {want}, actual {got}"));
            }
        }
    };
    cmp(
        "pseudo_frobenius",
        predicted
            .pseudo_frobenius
            .as_ref()
            .map(|v| format!("{v:?}")),
        format!("{:?}", actual.pseudo_frobenius),
    );
    cmp(
        "type",
        predicted.cm_type.map(|v| v.to_string()),
        actual.cm_type.to_string(),
    );
    cmp(
        "pseudo_symmetric",
        predicted.pseudo_symmetric.map(|v| v.to_string()),
        actual.pseudo_symmetric.to_string(),
    );
    cmp(
        "teter",
        predicted.teter.map(|v| v.to_string()),
        actual.teter.to_string(),
    );
    cmp(
        "half_frobenius_difference",
        predicted.half_frobenius_difference.map(|v| v.to_string()),
        half.to_string(),
    );

    Ok(FamilyComparison {
        spec,
        predicted,
        actual,
        half_frobenius_difference: half,
        agree: mismatches.is_empty(),
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_constructor() {
        assert_eq!(
            generalized_arithmetic(7, 1, 1, 3).unwrap().min_gens(),
            &[7, 8, 9, 10]
        );
        assert_eq!(
            generalized_arithmetic(4, 1, 3, 2).unwrap().min_gens(),
            &[4, 7, 10]
        );
        assert!(matches!(
            generalized_arithmetic(4, 1, 2, 2),
            Err(Error::ParameterViolation(_))
        ));
        assert!(matches!(
            generalized_arithmetic(3, 1, 1, 3),
            Err(Error::ParameterViolation(_))
        ));
        assert!(matches!(
            generalized_arithmetic(5, 1, 1, 1),
            Err(Error::ParameterViolation(_))
        ));
        assert!(matches!(
            generalized_arithmetic(5, 0, 1, 2),
            Err(Error::ParameterViolation(_))
        ));
    }

    #[test]
    fn pseudo_symmetric_constructor() {
        assert_eq!(
            pseudo_symmetric_3gen(1, 2, 3).unwrap().min_gens(),
            &[4, 7, 9]
        );
        assert_eq!(
            pseudo_symmetric_3gen(2, 3, 4).unwrap().min_gens(),
            &[9, 13, 16]
        );
        assert!(matches!(
            pseudo_symmetric_3gen(1, 1, 1),
            Err(Error::ParameterViolation(_))
        ));
        assert!(matches!(
            pseudo_symmetric_3gen(2, 2, 2),
            Err(Error::ParameterViolation(_))
        ));
    }

    #[test]
    fn comparisons_agree() {
        let c = predicted_vs_actual(FamilySpec::PseudoSymmetric3Gen { a: 1, b: 2, c: 3 }).unwrap();
        assert!(c.agree, "{:?}", c.mismatches);
        assert!(c.actual.teter);
        assert_eq!(c.actual.pseudo_frobenius, vec![5, 10]);

        let c = predicted_vs_actual(FamilySpec::PseudoSymmetric3Gen { a: 2, b: 3, c: 4 }).unwrap();
        assert!(c.agree, "{:?}", c.mismatches);
        assert!(!c.actual.teter);

        let c = predicted_vs_actual(FamilySpec::GeneralizedArithmetic {
            a: 7,
            s: 1,
            d: 1,
            n: 3,
        })
        .unwrap();
        assert!(c.agree, "{:?}", c.mismatches);
        assert_eq!(c.actual.cm_type, 3);
        assert_eq!(c.actual.pseudo_frobenius, vec![11, 12, 13]);
    }

    #[test]
    fn no_claim_outside_residue_one() {
        let p = FamilySpec::GeneralizedArithmetic {
            a: 4,
            s: 1,
            d: 3,
            n: 2,
        }
        .predict();
        assert_eq!(p, Prediction::default());
    }
}
