//! Integration of constructible functions against the Euler characteristic
//! on finite stratified descriptions.
//!
//! Strata carry compactly-supported Euler characteristics supplied by the
//! caller; nothing is computed from equations. The integral of a function
//! that is constant on each stratum is the sum of value times chi_c, which
//! in particular evaluates the top Chern-monomial number of a singular
//! variety from its local Euler obstruction.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, Result};

/// One stratum: a label and its compactly-supported Euler characteristic
/// (an exact integer, possibly negative).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Stratum {
    pub label: String,
    pub chi_c: i64,
}

/// A finite list of labeled strata with distinct labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StratifiedSpace {
    strata: Vec<Stratum>,
}

impl StratifiedSpace {
    pub fn new(strata: Vec<(String, i64)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for (label, _) in &strata {
            if !seen.insert(label.clone()) {
                return Err(Error::DuplicateStratumLabel { label: label.clone() });
            }
        }
        Ok(StratifiedSpace {
            strata: strata.into_iter().map(|(label, chi_c)| Stratum { label, chi_c }).collect(),
        })
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    /// Total compactly-supported Euler characteristic.
    pub fn chi(&self) -> i64 {
        self.strata.iter().map(|s| s.chi_c).sum()
    }
}

/// Integer-valued function defined on every stratum of a space.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ConstructibleFunction {
    values: BTreeMap<String, i64>,
}

impl ConstructibleFunction {
    pub fn new(values: BTreeMap<String, i64>) -> Self {
        ConstructibleFunction { values }
    }

    pub fn constant(space: &StratifiedSpace, value: i64) -> Self {
        let values = space.strata().iter().map(|s| (s.label.clone(), value)).collect();
        ConstructibleFunction { values }
    }

    pub fn value(&self, label: &str) -> Option<i64> {
        self.values.get(label).copied()
    }

    pub fn values(&self) -> &BTreeMap<String, i64> {
        &self.values
    }

    pub fn set(&mut self, label: String, value: i64) {
        self.values.insert(label, value);
    }
}

/// Sum over strata of function value times chi_c; errors if the function is
/// undefined on some stratum.
pub fn euler_integral(space: &StratifiedSpace, f: &ConstructibleFunction) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for stratum in space.strata() {
        let value = f
            .value(&stratum.label)
            .ok_or_else(|| Error::MissingStratumValue { label: stratum.label.clone() })?;
        total += BigInt::from(value) * BigInt::from(stratum.chi_c);
    }
    Ok(total)
}

/// Replaces strata by finer pieces. For each split stratum the new chi_c
/// values must sum to the old one, so any function constant on the replaced
/// pieces integrates to the same value.
pub fn refine_stratification(
    space: &StratifiedSpace,
    splits: &BTreeMap<String, Vec<(String, i64)>>,
) -> Result<StratifiedSpace> {
    for label in splits.keys() {
        if !space.strata().iter().any(|s| &s.label == label) {
            return Err(Error::UnknownStratum { label: label.clone() });
        }
    }
    let mut strata = Vec::new();
    for stratum in space.strata() {
        match splits.get(&stratum.label) {
            None => strata.push((stratum.label.clone(), stratum.chi_c)),
            Some(pieces) => {
                let actual: i64 = pieces.iter().map(|(_, chi)| chi).sum();
                if actual != stratum.chi_c {
                    return Err(Error::ChiSumMismatch {
                        label: stratum.label.clone(),
                        expected: stratum.chi_c,
                        actual,
                    });
                }
                strata.extend(pieces.iter().cloned());
            }
        }
    }
    StratifiedSpace::new(strata)
}

/// Extends a function across a refinement: pieces inherit the value of the
/// stratum they replace.
pub fn extend_function(
    f: &ConstructibleFunction,
    splits: &BTreeMap<String, Vec<(String, i64)>>,
) -> ConstructibleFunction {
    let mut values = f.values().clone();
    for (label, pieces) in splits {
        if let Some(v) = f.value(label) {
            values.remove(label);
            for (piece, _) in pieces {
                values.insert(piece.clone(), v);
            }
        }
    }
    ConstructibleFunction { values }
}

/// The cuspidal plane cubic as a two-stratum fixture: the cusp point and the
/// regular part, each with chi_c = 1, with local Euler obstruction 2 at the
/// cusp and 1 elsewhere. Its integral is 3, the top Chern-monomial number of
/// the curve. The obstruction value at the cusp is external input data, not
/// something this crate derives.
pub fn cuspidal_cubic() -> (StratifiedSpace, ConstructibleFunction) {
    let space = StratifiedSpace::new(vec![("cusp".into(), 1), ("regular".into(), 1)])
        .expect("labels are distinct");
    let mut f = ConstructibleFunction::default();
    f.set("cusp".into(), 2);
    f.set("regular".into(), 1);
    (space, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn cuspidal_cubic_integrates_to_three() {
        let (space, eu) = cuspidal_cubic();
        assert_eq!(euler_integral(&space, &eu).unwrap(), big(3));
        assert_eq!(space.chi(), 2);
    }

    #[test]
    fn smooth_line_integrates_to_its_chern_number() {
        let space = StratifiedSpace::new(vec![("whole".into(), 2)]).unwrap();
        let eu = ConstructibleFunction::constant(&space, 1);
        assert_eq!(euler_integral(&space, &eu).unwrap(), big(2));
    }

    #[test]
    fn zero_function_integrates_to_zero() {
        let (space, _) = cuspidal_cubic();
        let zero = ConstructibleFunction::constant(&space, 0);
        assert_eq!(euler_integral(&space, &zero).unwrap(), big(0));
    }

    #[test]
    fn missing_value_is_an_error() {
        let (space, _) = cuspidal_cubic();
        let partial = ConstructibleFunction::new([("cusp".to_string(), 2)].into());
        assert_eq!(
            euler_integral(&space, &partial),
            Err(Error::MissingStratumValue { label: "regular".into() })
        );
    }

    #[test]
    fn duplicate_labels_are_rejected() {
        let dup = StratifiedSpace::new(vec![("a".into(), 1), ("a".into(), 1)]);
        assert_eq!(dup, Err(Error::DuplicateStratumLabel { label: "a".into() }));
    }

    #[test]
    fn refinement_preserving_chi_is_accepted() {
        let space = StratifiedSpace::new(vec![("whole".into(), 2)]).unwrap();
        let splits: BTreeMap<_, _> =
            [("whole".to_string(), vec![("pt".to_string(), 1), ("rest".to_string(), 1)])].into();
        let refined = refine_stratification(&space, &splits).unwrap();
        assert_eq!(refined.chi(), 2);
        assert_eq!(refined.strata().len(), 2);
    }

    #[test]
    fn refinement_breaking_chi_is_rejected() {
        let space = StratifiedSpace::new(vec![("whole".into(), 2)]).unwrap();
        let splits: BTreeMap<_, _> =
            [("whole".to_string(), vec![("pt".to_string(), 1), ("rest".to_string(), 0)])].into();
        assert_eq!(
            refine_stratification(&space, &splits),
            Err(Error::ChiSumMismatch { label: "whole".into(), expected: 2, actual: 1 })
        );
    }

    #[test]
    fn refining_the_cubic_keeps_the_integral() {
        let (space, eu) = cuspidal_cubic();
        let splits: BTreeMap<_, _> = [(
            "regular".to_string(),
            vec![("cell0".to_string(), 1), ("cell1".to_string(), 0)],
        )]
        .into();
        let refined = refine_stratification(&space, &splits).unwrap();
        let extended = extend_function(&eu, &splits);
        assert_eq!(euler_integral(&refined, &extended).unwrap(), big(3));
    }

    #[test]
    fn unknown_stratum_in_split_is_rejected() {
        let (space, _) = cuspidal_cubic();
        let splits: BTreeMap<_, _> =
            [("nonexistent".to_string(), vec![("x".to_string(), 0)])].into();
        assert_eq!(
            refine_stratification(&space, &splits),
            Err(Error::UnknownStratum { label: "nonexistent".into() })
        );
    }

    #[test]
    fn integral_is_linear() {
        let (space, eu) = cuspidal_cubic();
        let ones = ConstructibleFunction::constant(&space, 1);
        let mut combo = ConstructibleFunction::default();
        for stratum in space.strata() {
            let v = 5 * eu.value(&stratum.label).unwrap() - 2 * ones.value(&stratum.label).unwrap();
            combo.set(stratum.label.clone(), v);
        }
        let lhs = euler_integral(&space, &combo).unwrap();
        let rhs = big(5) * euler_integral(&space, &eu).unwrap()
            - big(2) * euler_integral(&space, &ones).unwrap();
        assert_eq!(lhs, rhs);
    }
}
