//! Triangular generator families and integer recipes.
//!
//! A generator family supplies, for each dimension `i`, a pair of base
//! `s`-vectors whose top entries are `+1` and `-1`; everything below the top
//! is arbitrary. Products of these bases over the parts of a partition `J`
//! give generator vectors that vanish on every partition that does not
//! refine `J` and carry `±1` at `J` itself, so the generator matrix is
//! triangular with unit diagonal in the canonical order. Back-substitution
//! then writes any integer target vector as a nonnegative combination of
//! generators, whatever the lower entries of the family are.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::catalog::{product_svec, projective_space_svec, Basis, CharVector};
use crate::partitions::{enumerate_partitions, Partition};
use crate::symfunc::TransitionMatrix;
use crate::{Error, Result};

/// Orientation of a generator: the plus base has top entry `+1`, the minus
/// base `-1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// Per-dimension base `s`-vectors for the two generator orientations.
///
/// The defaults set every entry below the top to zero; the solver stays
/// correct for any user-supplied lower entries, which is what the
/// randomized-family tests exercise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorFamily {
    max_dim: u32,
    plus: Vec<CharVector>,
    minus: Vec<CharVector>,
}

impl GeneratorFamily {
    /// The family with all lower entries zero, covering dimensions
    /// `1..=max_dim`.
    pub fn default_family(max_dim: u32) -> Self {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for i in 1..=max_dim {
            let mut top_one = CharVector::zero(i, Basis::S).entries().to_vec();
            top_one[0] = BigInt::one();
            plus.push(CharVector::new(i, Basis::S, top_one.clone()).unwrap());
            top_one[0] = -BigInt::one();
            minus.push(CharVector::new(i, Basis::S, top_one).unwrap());
        }
        GeneratorFamily { max_dim, plus, minus }
    }

    /// Builds a family from explicit bases. `plus[i]` and `minus[i]` must be
    /// `s`-vectors of dimension `i+1` with top entries `+1` and `-1`.
    pub fn new(plus: Vec<CharVector>, minus: Vec<CharVector>) -> Result<Self> {
        if plus.len() != minus.len() {
            return Err(Error::MalformedFamily(format!(
                "{} plus bases but {} minus bases",
                plus.len(),
                minus.len()
            )));
        }
        let max_dim = plus.len() as u32;
        for (idx, (p, m)) in plus.iter().zip(&minus).enumerate() {
            let dim = idx as u32 + 1;
            for (v, sign) in [(p, Sign::Plus), (m, Sign::Minus)] {
                if v.n() != dim {
                    return Err(Error::MalformedFamily(format!(
                        "base at position {idx} must have dimension {dim}, got {}",
                        v.n()
                    )));
                }
                if v.basis() != Basis::S {
                    return Err(Error::BasisMismatch { expected: Basis::S, got: v.basis() });
                }
                let expected = match sign {
                    Sign::Plus => BigInt::one(),
                    Sign::Minus => -BigInt::one(),
                };
                if *v.top_entry() != expected {
                    return Err(Error::GeneratorContract {
                        dim,
                        sign,
                        found: v.top_entry().clone(),
                    });
                }
            }
        }
        Ok(GeneratorFamily { max_dim, plus, minus })
    }

    pub fn max_dim(&self) -> u32 {
        self.max_dim
    }

    /// Base vector for dimension `i` (1-based); panics out of range.
    pub fn base(&self, i: u32, sign: Sign) -> &CharVector {
        assert!(i >= 1 && i <= self.max_dim, "family has no dimension {i}");
        match sign {
            Sign::Plus => &self.plus[i as usize - 1],
            Sign::Minus => &self.minus[i as usize - 1],
        }
    }

    pub fn is_default(&self) -> bool {
        *self == GeneratorFamily::default_family(self.max_dim)
    }

    /// Stable content digest (FNV-1a over a canonical encoding), recorded in
    /// recipes so outputs are reproducible.
    pub fn content_hash(&self) -> String {
        let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
        let mut feed = |bytes: &[u8]| {
            for &b in bytes {
                hash ^= u64::from(b);
                hash = hash.wrapping_mul(0x100_0000_01b3);
            }
        };
        feed(self.max_dim.to_string().as_bytes());
        for (p, m) in self.plus.iter().zip(&self.minus) {
            for v in [p, m] {
                feed(b";");
                for e in v.entries() {
                    feed(e.to_string().as_bytes());
                    feed(b",");
                }
            }
        }
        format!("{hash:016x}")
    }
}

/// Generator vector for a partition `J`: the product of the base vectors of
/// its parts, with the minus base used for exactly the first (largest) part
/// when `sign` is minus.
pub fn build_generator_svec(
    family: &GeneratorFamily,
    j: &Partition,
    sign: Sign,
) -> Result<CharVector> {
    if j.weight() > family.max_dim {
        return Err(Error::FamilyTooSmall { needed: j.weight(), max: family.max_dim });
    }
    let mut acc = CharVector::point();
    for (idx, &part) in j.parts().iter().enumerate() {
        let factor_sign = if idx == 0 { sign } else { Sign::Plus };
        acc = product_svec(&acc, family.base(part, factor_sign))?;
    }
    if j.is_empty() && sign == Sign::Minus {
        // Empty product with flipped orientation: a formal negative point.
        acc = crate::catalog::negate_svec(&acc);
    }
    Ok(acc)
}

/// The square matrix whose column `J` is the plus generator vector of `J`,
/// rows and columns in canonical order. It is triangular with diagonal `+1`:
/// `S[I][J] = 0` whenever `I > J`.
pub fn build_generator_matrix(family: &GeneratorFamily, n: u32) -> Result<Vec<Vec<BigInt>>> {
    if n > family.max_dim {
        return Err(Error::FamilyTooSmall { needed: n, max: family.max_dim });
    }
    let index = enumerate_partitions(n);
    let columns: Vec<CharVector> = index
        .iter()
        .map(|j| build_generator_svec(family, j, Sign::Plus))
        .collect::<Result<_>>()?;
    let size = index.len();
    Ok((0..size)
        .map(|row| (0..size).map(|col| columns[col].entries()[row].clone()).collect())
        .collect())
}

/// One generator with its multiplicity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RecipeItem {
    pub partition: Partition,
    pub sign: Sign,
    /// Always positive.
    pub multiplicity: BigInt,
}

/// A nonnegative combination of generators realizing a target vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Recipe {
    /// The requested vector, in whichever basis it was given.
    pub target: CharVector,
    pub items: Vec<RecipeItem>,
    /// The realized `s`-vector; equals the target after basis alignment.
    pub realized: CharVector,
    pub family_hash: String,
}

/// Writes an `s`-basis target as a nonnegative combination of generators by
/// back-substitution over partitions in canonical (descending) order.
///
/// At each partition the residual entry picks the orientation and the
/// multiplicity; generators of earlier partitions never touch later residual
/// entries that were already cleared, so the final residual vanishes exactly
/// and every integer vector is realizable.
pub fn realize_s(target: &CharVector, family: &GeneratorFamily) -> Result<Recipe> {
    if target.basis() != Basis::S {
        return Err(Error::BasisMismatch { expected: Basis::S, got: target.basis() });
    }
    if target.n() > family.max_dim() {
        return Err(Error::FamilyTooSmall { needed: target.n(), max: family.max_dim() });
    }
    let index = enumerate_partitions(target.n());
    let mut residual = target.entries().to_vec();
    let mut items = Vec::new();
    for (pos, j) in index.iter().enumerate() {
        let r = residual[pos].clone();
        if r.is_zero() {
            continue;
        }
        let sign = if r.is_positive() { Sign::Plus } else { Sign::Minus };
        let multiplicity = r.abs();
        let generator = build_generator_svec(family, j, sign)?;
        for (slot, g) in residual.iter_mut().zip(generator.entries()) {
            *slot -= &multiplicity * g;
        }
        items.push(RecipeItem { partition: j.clone(), sign, multiplicity });
    }
    assert!(
        residual.iter().all(BigInt::is_zero),
        "internal: back-substitution left a nonzero residual"
    );
    Ok(Recipe {
        target: target.clone(),
        items,
        realized: target.clone(),
        family_hash: family.content_hash(),
    })
}

/// Realizes a Chern-monomial-basis target: converts it to the `s` basis
/// through the integer inverse of the transition matrix, then solves there.
/// Converting the realized vector back reproduces the target exactly.
pub fn realize_c(
    target: &CharVector,
    family: &GeneratorFamily,
    a: &TransitionMatrix,
) -> Result<Recipe> {
    if target.basis() != Basis::C {
        return Err(Error::BasisMismatch { expected: Basis::C, got: target.basis() });
    }
    let s_target = crate::catalog::convert_basis(target, a)?;
    let mut recipe = realize_s(&s_target, family)?;
    recipe.target = target.clone();
    Ok(recipe)
}

/// Recomputes the combination a recipe claims and returns it; errors if it
/// does not match the recorded vector or if any multiplicity is not
/// positive.
pub fn verify_recipe(recipe: &Recipe, family: &GeneratorFamily) -> Result<CharVector> {
    let n = recipe.realized.n();
    let mut total = CharVector::zero(n, Basis::S).entries().to_vec();
    for item in &recipe.items {
        if !item.multiplicity.is_positive() {
            return Err(Error::InvalidMultiplicity);
        }
        let generator = build_generator_svec(family, &item.partition, item.sign)?;
        if generator.n() != n {
            return Err(Error::DimensionMismatch { left: generator.n(), right: n });
        }
        for (slot, g) in total.iter_mut().zip(generator.entries()) {
            *slot += &item.multiplicity * g;
        }
    }
    let recomputed = CharVector::new(n, Basis::S, total)?;
    if recomputed != recipe.realized {
        return Err(Error::RecipeMismatch);
    }
    Ok(recomputed)
}

/// Exact rational solution of the same triangular system with columns taken
/// from products of projective spaces instead of generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalRealization {
    /// Coefficient per partition, canonical order, zeros included.
    pub coefficients: Vec<(Partition, BigRational)>,
    /// Whether every coefficient is an integer; generically it is not,
    /// which is why the singular generators are needed.
    pub all_integer: bool,
}

/// Solves for rational coefficients over the basis of products of projective
/// spaces: column `J` is the `s`-vector of the product over the parts of
/// `J`, with diagonal entry `prod (j_l + 1)`.
pub fn rational_smooth_realize(target: &CharVector) -> Result<RationalRealization> {
    if target.basis() != Basis::S {
        return Err(Error::BasisMismatch { expected: Basis::S, got: target.basis() });
    }
    let index = enumerate_partitions(target.n());
    let columns: Vec<CharVector> = index
        .iter()
        .map(|j| {
            let mut acc = CharVector::point();
            for &part in j.parts() {
                acc = product_svec(&acc, &projective_space_svec(part))?;
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;

    let mut residual: Vec<BigRational> =
        target.entries().iter().map(|e| BigRational::from(e.clone())).collect();
    let mut coefficients = Vec::new();
    for (pos, j) in index.iter().enumerate() {
        let diagonal = BigRational::from(columns[pos].entries()[pos].clone());
        let coeff = &residual[pos] / &diagonal;
        for (slot, g) in residual.iter_mut().zip(columns[pos].entries()) {
            *slot -= &coeff * BigRational::from(g.clone());
        }
        coefficients.push((j.clone(), coeff));
    }
    assert!(
        residual.iter().all(|r| r.is_zero()),
        "internal: triangular solve left a nonzero residual"
    );
    let all_integer = coefficients.iter().all(|(_, c)| c.is_integer());
    Ok(RationalRealization { coefficients, all_integer })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::of(parts)
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn vec_of(entries: &[i64]) -> Vec<BigInt> {
        entries.iter().map(|&v| big(v)).collect()
    }

    fn svec(n: u32, entries: &[i64]) -> CharVector {
        CharVector::new(n, Basis::S, vec_of(entries)).unwrap()
    }

    #[test]
    fn default_family_bases() {
        let family = GeneratorFamily::default_family(3);
        assert_eq!(family.base(2, Sign::Plus).entries(), vec_of(&[1, 0]).as_slice());
        assert_eq!(family.base(2, Sign::Minus).entries(), vec_of(&[-1, 0]).as_slice());
        assert!(family.is_default());
    }

    #[test]
    fn family_contract_is_enforced() {
        let bad_plus = vec![svec(1, &[2])];
        let minus = vec![svec(1, &[-1])];
        let err = GeneratorFamily::new(bad_plus, minus).unwrap_err();
        assert_eq!(
            err,
            Error::GeneratorContract { dim: 1, sign: Sign::Plus, found: big(2) }
        );

        // Lower entries are free.
        let plus = vec![svec(1, &[1]), svec(2, &[1, 5])];
        let minus = vec![svec(1, &[-1]), svec(2, &[-1, 0])];
        assert!(GeneratorFamily::new(plus, minus).is_ok());
    }

    #[test]
    fn generator_vectors_default_family() {
        let family = GeneratorFamily::default_family(4);
        let sq = build_generator_svec(&family, &p(&[1, 1]), Sign::Plus).unwrap();
        assert_eq!(sq.entries(), vec_of(&[0, 1]).as_slice());

        let top = build_generator_svec(&family, &p(&[3]), Sign::Plus).unwrap();
        assert_eq!(&top, family.base(3, Sign::Plus));

        let mixed = build_generator_svec(&family, &p(&[2, 1]), Sign::Plus).unwrap();
        assert_eq!(mixed.entries(), vec_of(&[0, 1, 0]).as_slice());
    }

    #[test]
    fn generator_matrix_small_cases() {
        let family = GeneratorFamily::default_family(2);
        assert_eq!(build_generator_matrix(&family, 1).unwrap(), vec![vec![big(1)]]);
        assert_eq!(
            build_generator_matrix(&family, 2).unwrap(),
            vec![vec![big(1), big(0)], vec![big(0), big(1)]]
        );

        let custom = GeneratorFamily::new(
            vec![svec(1, &[1]), svec(2, &[1, 5])],
            vec![svec(1, &[-1]), svec(2, &[-1, 0])],
        )
        .unwrap();
        assert_eq!(
            build_generator_matrix(&custom, 2).unwrap(),
            vec![vec![big(1), big(0)], vec![big(5), big(1)]]
        );
    }

    #[test]
    fn realize_zero_target_is_empty() {
        let family = GeneratorFamily::default_family(3);
        let recipe = realize_s(&CharVector::zero(3, Basis::S), &family).unwrap();
        assert!(recipe.items.is_empty());
        verify_recipe(&recipe, &family).unwrap();
    }

    #[test]
    fn realize_projective_plane() {
        let family = GeneratorFamily::default_family(2);
        let recipe = realize_s(&svec(2, &[3, 3]), &family).unwrap();
        assert_eq!(recipe.items.len(), 2);
        assert_eq!(recipe.items[0], RecipeItem {
            partition: p(&[2]),
            sign: Sign::Plus,
            multiplicity: big(3),
        });
        assert_eq!(recipe.items[1], RecipeItem {
            partition: p(&[1, 1]),
            sign: Sign::Plus,
            multiplicity: big(3),
        });
        assert_eq!(verify_recipe(&recipe, &family).unwrap(), recipe.realized);
    }

    #[test]
    fn realize_negative_top_entry() {
        let family = GeneratorFamily::default_family(2);
        let recipe = realize_s(&svec(2, &[-1, 0]), &family).unwrap();
        assert_eq!(recipe.items.len(), 1);
        assert_eq!(recipe.items[0], RecipeItem {
            partition: p(&[2]),
            sign: Sign::Minus,
            multiplicity: big(1),
        });
    }

    #[test]
    fn realize_c_through_the_transition_matrix() {
        let family = GeneratorFamily::default_family(2);
        let a = crate::symfunc::transition_matrix(2);
        let target = CharVector::new(2, Basis::C, vec_of(&[3, 9])).unwrap();
        let recipe = realize_c(&target, &family, &a).unwrap();
        assert_eq!(recipe.target, target);
        assert_eq!(recipe.realized.entries(), vec_of(&[3, 3]).as_slice());
        let back = crate::catalog::convert_basis(&recipe.realized, &a).unwrap();
        assert_eq!(back, target);

        let a1 = crate::symfunc::transition_matrix(1);
        let c1 = CharVector::new(1, Basis::C, vec_of(&[1])).unwrap();
        let r1 = realize_c(&c1, &GeneratorFamily::default_family(1), &a1).unwrap();
        assert_eq!(r1.items.len(), 1);
        assert_eq!(r1.items[0].partition, p(&[1]));
        assert_eq!(r1.items[0].sign, Sign::Plus);
    }

    #[test]
    fn verify_detects_tampering() {
        let family = GeneratorFamily::default_family(2);
        let mut recipe = realize_s(&svec(2, &[3, 3]), &family).unwrap();
        recipe.items[0].multiplicity = big(4);
        assert_eq!(verify_recipe(&recipe, &family), Err(Error::RecipeMismatch));

        let mut nonpositive = realize_s(&svec(2, &[1, 0]), &family).unwrap();
        nonpositive.items[0].multiplicity = big(0);
        assert_eq!(verify_recipe(&nonpositive, &family), Err(Error::InvalidMultiplicity));
    }

    #[test]
    fn rational_realization_examples() {
        let half = rational_smooth_realize(&svec(1, &[1])).unwrap();
        assert_eq!(half.coefficients[0].1, BigRational::new(big(1), big(2)));
        assert!(!half.all_integer);

        let whole = rational_smooth_realize(&svec(1, &[2])).unwrap();
        assert_eq!(whole.coefficients[0].1, BigRational::from(big(1)));
        assert!(whole.all_integer);

        // A product column realizes with coefficient 1 on itself.
        let col = product_svec(&projective_space_svec(1), &projective_space_svec(1)).unwrap();
        let real = rational_smooth_realize(&col).unwrap();
        for (partition, coeff) in &real.coefficients {
            let expect = if partition == &p(&[1, 1]) {
                BigRational::from(big(1))
            } else {
                BigRational::from(big(0))
            };
            assert_eq!(coeff, &expect, "coefficient at {partition}");
        }
    }

    #[test]
    fn family_hash_distinguishes_contents() {
        let default = GeneratorFamily::default_family(2);
        let custom = GeneratorFamily::new(
            vec![svec(1, &[1]), svec(2, &[1, 5])],
            vec![svec(1, &[-1]), svec(2, &[-1, 0])],
        )
        .unwrap();
        assert_ne!(default.content_hash(), custom.content_hash());
        assert_eq!(default.content_hash(), GeneratorFamily::default_family(2).content_hash());
    }
}
