//! JSON schemas for the crate's types.
//!
//! Big integers travel as decimal strings so no consumer loses precision;
//! plain JSON integers are also accepted on input when they fit in an `i64`.
//! Vector payloads embed the canonical partition index, making every output
//! self-describing.

use std::collections::BTreeMap;
use std::num::NonZeroU32;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::catalog::{
    Basis, CharVector, ConeResidue, DivisibilityReport, EmbeddedVariety,
};
use crate::euler::{ConstructibleFunction, StratifiedSpace, Stratum};
use crate::partitions::{enumerate_partitions, Partition};
use crate::realization::{
    GeneratorFamily, RationalRealization, Recipe, RecipeItem, Sign,
};
use crate::symfunc::{SigmaPoly, TransitionMatrix};
use crate::{Error, Result};

/// Accepts either a JSON integer or a decimal string on input; output is
/// always a decimal string.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Num(i64),
    Str(String),
}

fn int_repr(x: &BigInt) -> IntRepr {
    IntRepr::Str(x.to_string())
}

fn int_from_repr(r: IntRepr) -> std::result::Result<BigInt, String> {
    match r {
        IntRepr::Num(v) => Ok(BigInt::from(v)),
        IntRepr::Str(s) => {
            s.trim().parse::<BigInt>().map_err(|e| format!("bad integer '{s}': {e}"))
        }
    }
}

fn ints_from_reprs(rs: Vec<IntRepr>) -> std::result::Result<Vec<BigInt>, String> {
    rs.into_iter().map(int_from_repr).collect()
}

/// Parses a JSON array of integers (numbers or decimal strings).
pub fn parse_bigint_array(json: &str) -> Result<Vec<BigInt>> {
    let reprs: Vec<IntRepr> =
        serde_json::from_str(json).map_err(|e| Error::Json(e.to_string()))?;
    ints_from_reprs(reprs).map_err(Error::Json)
}

/// Parses a JSON array of parts into a partition, e.g. `[2,1]`.
pub fn parse_partition(json: &str) -> Result<Partition> {
    serde_json::from_str(json).map_err(|e| Error::Json(e.to_string()))
}

// --- Partition: a plain JSON array of parts -------------------------------

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(|e| D::Error::custom(e.to_string()))
    }
}

// --- Basis and Sign: single-character tags --------------------------------

impl Serialize for Basis {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Basis {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        match String::deserialize(deserializer)?.as_str() {
            "s" => Ok(Basis::S),
            "c" => Ok(Basis::C),
            other => Err(D::Error::custom(format!("basis must be \"s\" or \"c\", got \"{other}\""))),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        match String::deserialize(deserializer)?.as_str() {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            other => Err(D::Error::custom(format!("sign must be \"+\" or \"-\", got \"{other}\""))),
        }
    }
}

// --- CharVector ------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct CharVectorRepr {
    dim: u32,
    basis: Basis,
    #[serde(default)]
    index: Vec<Partition>,
    entries: Vec<IntRepr>,
}

fn check_index<E: serde::de::Error>(dim: u32, index: &[Partition]) -> std::result::Result<(), E> {
    if !index.is_empty() && index != enumerate_partitions(dim) {
        return Err(E::custom(format!(
            "index does not match the canonical partition order of dimension {dim}"
        )));
    }
    Ok(())
}

impl Serialize for CharVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CharVectorRepr {
            dim: self.n(),
            basis: self.basis(),
            index: enumerate_partitions(self.n()),
            entries: self.entries().iter().map(int_repr).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CharVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = CharVectorRepr::deserialize(deserializer)?;
        check_index(repr.dim, &repr.index)?;
        let entries = ints_from_reprs(repr.entries).map_err(D::Error::custom)?;
        CharVector::new(repr.dim, repr.basis, entries).map_err(|e| D::Error::custom(e.to_string()))
    }
}

// --- EmbeddedVariety --------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct EmbeddedVarietyRepr {
    #[serde(flatten)]
    svec: CharVector,
    divisibility: u32,
}

impl Serialize for EmbeddedVariety {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        EmbeddedVarietyRepr {
            svec: self.svec().clone(),
            divisibility: self.hyperplane_divisibility().get(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EmbeddedVariety {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = EmbeddedVarietyRepr::deserialize(deserializer)?;
        let d = NonZeroU32::new(repr.divisibility)
            .ok_or_else(|| D::Error::custom("divisibility must be positive"))?;
        EmbeddedVariety::new(repr.svec, d).map_err(|e| D::Error::custom(e.to_string()))
    }
}

// --- SigmaPoly ---------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct SigmaTermRepr {
    exponents: Vec<u32>,
    coeff: IntRepr,
}

impl Serialize for SigmaPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        // Leading term first.
        let terms: Vec<SigmaTermRepr> = self
            .terms()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .map(|(e, c)| SigmaTermRepr { exponents: e.to_vec(), coeff: int_repr(c) })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SigmaPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<SigmaTermRepr>::deserialize(deserializer)?;
        let nvars = terms.iter().map(|t| t.exponents.len()).max().unwrap_or(0);
        if terms.iter().any(|t| t.exponents.len() != nvars) {
            return Err(D::Error::custom("all exponent vectors must have the same length"));
        }
        let mut out = SigmaPoly::zero(nvars);
        for term in terms {
            let c = int_from_repr(term.coeff).map_err(D::Error::custom)?;
            out = &out + &SigmaPoly::monomial(nvars, &term.exponents, c);
        }
        Ok(out)
    }
}

// --- TransitionMatrix (output only) ------------------------------------------

#[derive(Serialize)]
struct TransitionMatrixRepr<'a> {
    n: u32,
    index: &'a [Partition],
    entries: Vec<Vec<IntRepr>>,
}

impl Serialize for TransitionMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TransitionMatrixRepr {
            n: self.n(),
            index: self.index(),
            entries: self
                .entries()
                .iter()
                .map(|row| row.iter().map(int_repr).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

// --- GeneratorFamily -----------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct FamilyBaseRepr {
    dim: u32,
    plus: Vec<IntRepr>,
    minus: Vec<IntRepr>,
}

#[derive(Serialize, Deserialize)]
struct FamilyRepr {
    n: u32,
    bases: Vec<FamilyBaseRepr>,
}

impl Serialize for GeneratorFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let bases = (1..=self.max_dim())
            .map(|dim| FamilyBaseRepr {
                dim,
                plus: self.base(dim, Sign::Plus).entries().iter().map(int_repr).collect(),
                minus: self.base(dim, Sign::Minus).entries().iter().map(int_repr).collect(),
            })
            .collect();
        FamilyRepr { n: self.max_dim(), bases }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GeneratorFamily {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = FamilyRepr::deserialize(deserializer)?;
        let mut plus: Vec<Option<CharVector>> = vec![None; repr.n as usize];
        let mut minus: Vec<Option<CharVector>> = vec![None; repr.n as usize];
        for base in repr.bases {
            if base.dim == 0 || base.dim > repr.n {
                return Err(D::Error::custom(format!(
                    "base dimension {} outside 1..={}",
                    base.dim, repr.n
                )));
            }
            let slot = base.dim as usize - 1;
            if plus[slot].is_some() {
                return Err(D::Error::custom(format!("duplicate base for dimension {}", base.dim)));
            }
            let pv = ints_from_reprs(base.plus).map_err(D::Error::custom)?;
            let mv = ints_from_reprs(base.minus).map_err(D::Error::custom)?;
            plus[slot] = Some(
                CharVector::new(base.dim, Basis::S, pv).map_err(|e| D::Error::custom(e.to_string()))?,
            );
            minus[slot] = Some(
                CharVector::new(base.dim, Basis::S, mv).map_err(|e| D::Error::custom(e.to_string()))?,
            );
        }
        let plus: Vec<CharVector> = plus
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| D::Error::custom(format!("missing base for dimension {}", i + 1))))
            .collect::<std::result::Result<_, _>>()?;
        let minus: Vec<CharVector> = minus
            .into_iter()
            .map(|v| v.expect("checked together with plus"))
            .collect();
        GeneratorFamily::new(plus, minus).map_err(|e| D::Error::custom(e.to_string()))
    }
}

// --- Recipe ---------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct RecipeItemRepr {
    partition: Partition,
    sign: Sign,
    multiplicity: IntRepr,
}

#[derive(Serialize, Deserialize)]
struct RecipeRepr {
    dim: u32,
    /// Basis of the target vector; the realized vector is always `s`.
    basis: Basis,
    #[serde(default)]
    index: Vec<Partition>,
    target: Vec<IntRepr>,
    items: Vec<RecipeItemRepr>,
    realized: Vec<IntRepr>,
    family_hash: String,
}

impl Serialize for Recipe {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RecipeRepr {
            dim: self.target.n(),
            basis: self.target.basis(),
            index: enumerate_partitions(self.target.n()),
            target: self.target.entries().iter().map(int_repr).collect(),
            items: self
                .items
                .iter()
                .map(|item| RecipeItemRepr {
                    partition: item.partition.clone(),
                    sign: item.sign,
                    multiplicity: int_repr(&item.multiplicity),
                })
                .collect(),
            realized: self.realized.entries().iter().map(int_repr).collect(),
            family_hash: self.family_hash.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Recipe {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = RecipeRepr::deserialize(deserializer)?;
        check_index(repr.dim, &repr.index)?;
        let target = CharVector::new(
            repr.dim,
            repr.basis,
            ints_from_reprs(repr.target).map_err(D::Error::custom)?,
        )
        .map_err(|e| D::Error::custom(e.to_string()))?;
        let realized = CharVector::new(
            repr.dim,
            Basis::S,
            ints_from_reprs(repr.realized).map_err(D::Error::custom)?,
        )
        .map_err(|e| D::Error::custom(e.to_string()))?;
        let items = repr
            .items
            .into_iter()
            .map(|item| {
                Ok(RecipeItem {
                    partition: item.partition,
                    sign: item.sign,
                    multiplicity: int_from_repr(item.multiplicity).map_err(D::Error::custom)?,
                })
            })
            .collect::<std::result::Result<_, D::Error>>()?;
        Ok(Recipe { target, items, realized, family_hash: repr.family_hash })
    }
}

// --- Euler module types -----------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct StratumRepr {
    label: String,
    chi_c: i64,
}

#[derive(Serialize, Deserialize)]
struct StratifiedSpaceRepr {
    strata: Vec<StratumRepr>,
}

impl Serialize for StratifiedSpace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        StratifiedSpaceRepr {
            strata: self
                .strata()
                .iter()
                .map(|Stratum { label, chi_c }| StratumRepr { label: label.clone(), chi_c: *chi_c })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StratifiedSpace {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = StratifiedSpaceRepr::deserialize(deserializer)?;
        StratifiedSpace::new(repr.strata.into_iter().map(|s| (s.label, s.chi_c)).collect())
            .map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct ConstructibleFunctionRepr {
    values: BTreeMap<String, i64>,
}

impl Serialize for ConstructibleFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ConstructibleFunctionRepr { values: self.values().clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ConstructibleFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ConstructibleFunctionRepr::deserialize(deserializer)?;
        Ok(ConstructibleFunction::new(repr.values))
    }
}

// --- Report types (output only) -----------------------------------------------------

impl Serialize for DivisibilityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            dim: u32,
            combination: &'a str,
            value: IntRepr,
            divisor: u32,
            divisible: bool,
        }
        Repr {
            dim: self.dim,
            combination: self.combination,
            value: int_repr(&self.value),
            divisor: self.divisor,
            divisible: self.divisible,
        }
        .serialize(serializer)
    }
}

impl Serialize for ConeResidue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            modulus: u32,
            residue: u32,
        }
        Repr { modulus: self.modulus.get(), residue: self.residue }.serialize(serializer)
    }
}

impl Serialize for RationalRealization {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct CoeffRepr<'a> {
            partition: &'a Partition,
            coefficient: String,
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            coefficients: Vec<CoeffRepr<'a>>,
            all_integer: bool,
        }
        Repr {
            coefficients: self
                .coefficients
                .iter()
                .map(|(p, c)| CoeffRepr { partition: p, coefficient: c.to_string() })
                .collect(),
            all_integer: self.all_integer,
        }
        .serialize(serializer)
    }
}
