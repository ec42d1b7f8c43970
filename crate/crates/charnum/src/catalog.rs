//! Characteristic-number vectors of model varieties: projective spaces,
//! products, disjoint unions and formal negations, plus the hyperplane
//! divisibility bookkeeping behind the cone congruence and the classical
//! low-dimension divisibility checks.

use std::collections::HashMap;
use std::fmt;
use std::num::NonZeroU32;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Zero};

use crate::partitions::{enumerate_partitions, splittings, Partition};
use crate::symfunc::{eval_s, inverse_unimodular, s_poly, TransitionMatrix};
use crate::{Error, Result};

/// Which family of characteristic numbers a vector holds: `S` for the
/// power-sum-type numbers, `C` for Chern-monomial numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    S,
    C,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::S => write!(f, "s"),
            Basis::C => write!(f, "c"),
        }
    }
}

/// Integer vector indexed by the partitions of `n` in canonical order,
/// tagged with the basis its entries live in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharVector {
    n: u32,
    basis: Basis,
    entries: Vec<BigInt>,
}

impl CharVector {
    pub fn new(n: u32, basis: Basis, entries: Vec<BigInt>) -> Result<Self> {
        let expected = enumerate_partitions(n).len();
        if entries.len() != expected {
            return Err(Error::WrongEntryCount { dim: n, expected, got: entries.len() });
        }
        Ok(CharVector { n, basis, entries })
    }

    pub fn zero(n: u32, basis: Basis) -> Self {
        let count = enumerate_partitions(n).len();
        CharVector { n, basis, entries: vec![BigInt::zero(); count] }
    }

    /// The dimension-0 variety: a single point, `s`-vector `[1]`.
    pub fn point() -> Self {
        CharVector { n: 0, basis: Basis::S, entries: vec![BigInt::one()] }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Entry at a partition of `n`; errors on a weight mismatch.
    pub fn entry(&self, at: &Partition) -> Result<&BigInt> {
        if at.weight() != self.n {
            return Err(Error::WeightMismatch { left: at.weight(), right: self.n });
        }
        let pos = enumerate_partitions(self.n)
            .iter()
            .position(|p| p == at)
            .expect("partition of matching weight is in the index");
        Ok(&self.entries[pos])
    }

    /// Top entry: the one indexed by the single-part partition `(n)`,
    /// first in canonical order.
    pub fn top_entry(&self) -> &BigInt {
        &self.entries[0]
    }

    fn scaled(&self, k: &BigInt) -> Self {
        let entries = self.entries.iter().map(|e| e * k).collect();
        CharVector { n: self.n, basis: self.basis, entries }
    }
}

fn index_positions(index: &[Partition]) -> HashMap<&Partition, usize> {
    index.iter().enumerate().map(|(pos, p)| (p, pos)).collect()
}

/// `s`-number vector of complex projective space of dimension `n`: value of
/// each `s` polynomial at `sigma_i = binomial(n+1, i)`. The top entry is
/// always `n + 1`.
pub fn projective_space_svec(n: u32) -> CharVector {
    if n == 0 {
        return CharVector::point();
    }
    let sigma: Vec<BigInt> =
        (1..=n).map(|i| binomial(BigInt::from(n + 1), BigInt::from(i))).collect();
    let entries = enumerate_partitions(n)
        .iter()
        .map(|i| eval_s(i, &sigma).expect("sigma has weight(i) coordinates"))
        .collect();
    CharVector { n, basis: Basis::S, entries }
}

/// `s`-number vector of a product: each entry sums, over the splittings of
/// its partition into the two dimensions, the products of the factors'
/// entries. A dimension-0 vector acts by scaling.
pub fn product_svec(a: &CharVector, b: &CharVector) -> Result<CharVector> {
    for v in [a, b] {
        if v.basis != Basis::S {
            return Err(Error::BasisMismatch { expected: Basis::S, got: v.basis });
        }
    }
    if a.n == 0 {
        return Ok(b.scaled(&a.entries[0]));
    }
    if b.n == 0 {
        return Ok(a.scaled(&b.entries[0]));
    }
    let n = a.n + b.n;
    let index_a = enumerate_partitions(a.n);
    let index_b = enumerate_partitions(b.n);
    let pos_a = index_positions(&index_a);
    let pos_b = index_positions(&index_b);
    let entries = enumerate_partitions(n)
        .iter()
        .map(|i| {
            let mut total = BigInt::zero();
            for pair in splittings(i, &[a.n, b.n]).expect("shape matches by construction") {
                let left = &a.entries[pos_a[&pair[0]]];
                let right = &b.entries[pos_b[&pair[1]]];
                total += left * right;
            }
            total
        })
        .collect();
    Ok(CharVector { n, basis: Basis::S, entries })
}

/// Entrywise sum; both vectors must share dimension and basis.
pub fn disjoint_union_svec(a: &CharVector, b: &CharVector) -> Result<CharVector> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch { left: a.n, right: b.n });
    }
    if a.basis != b.basis {
        return Err(Error::BasisMismatch { expected: a.basis, got: b.basis });
    }
    let entries = a.entries.iter().zip(&b.entries).map(|(x, y)| x + y).collect();
    Ok(CharVector { n: a.n, basis: a.basis, entries })
}

/// Entrywise negation. The result is the vector of a formal (virtual)
/// variety: a smooth compact variety with these numbers exists, but the
/// catalog does not construct it.
pub fn negate_svec(v: &CharVector) -> CharVector {
    let entries = v.entries.iter().map(|e| -e).collect();
    CharVector { n: v.n, basis: v.basis, entries }
}

/// Converts between the two bases: `s -> c` multiplies by the transition
/// matrix, `c -> s` by its integer inverse. Round-trips are exact.
pub fn convert_basis(v: &CharVector, a: &TransitionMatrix) -> Result<CharVector> {
    if a.n() != v.n {
        return Err(Error::DimensionMismatch { left: a.n(), right: v.n });
    }
    match v.basis {
        Basis::S => Ok(CharVector { n: v.n, basis: Basis::C, entries: a.apply(&v.entries) }),
        Basis::C => {
            let inv = inverse_unimodular(a)?;
            Ok(CharVector { n: v.n, basis: Basis::S, entries: inv.apply(&v.entries) })
        }
    }
}

// ---------------------------------------------------------------------------
// Truncated-ring oracle for products of projective spaces.
// ---------------------------------------------------------------------------

/// Multivariate polynomials truncated at `h_l^{caps[l]+1} = 0`; exponent
/// vectors have one slot per factor.
struct TruncatedRing {
    caps: Vec<u32>,
}

type RingElt = HashMap<Vec<u32>, BigInt>;

impl TruncatedRing {
    fn one(&self) -> RingElt {
        let mut e = RingElt::new();
        e.insert(vec![0; self.caps.len()], BigInt::one());
        e
    }

    fn mul(&self, a: &RingElt, b: &RingElt) -> RingElt {
        let mut out = RingElt::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if e.iter().zip(&self.caps).any(|(x, cap)| x > cap) {
                    continue;
                }
                let slot = out.entry(e).or_insert_with(BigInt::zero);
                *slot += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn pow(&self, base: &RingElt, exp: u32) -> RingElt {
        let mut out = self.one();
        for _ in 0..exp {
            out = self.mul(&out, base);
        }
        out
    }
}

/// Graded pieces `c_1..c_n` of the product of `(1 + h_l)^{dims[l]+1}` in the
/// ring truncated at `h_l^{dims[l]+1}`.
fn tangent_chern_pieces(dims: &[u32]) -> (TruncatedRing, Vec<RingElt>) {
    let ring = TruncatedRing { caps: dims.to_vec() };
    let q = dims.len();
    let mut total = ring.one();
    for (l, &a) in dims.iter().enumerate() {
        let mut factor = RingElt::new();
        for b in 0..=a {
            let mut e = vec![0; q];
            e[l] = b;
            factor.insert(e, binomial(BigInt::from(a + 1), BigInt::from(b)));
        }
        total = ring.mul(&total, &factor);
    }
    let n: u32 = dims.iter().sum();
    let mut pieces = vec![RingElt::new(); n as usize + 1];
    for (e, c) in total {
        let degree: u32 = e.iter().sum();
        if degree >= 1 {
            pieces[degree as usize].insert(e, c);
        }
    }
    let _ = pieces.remove(0);
    (ring, pieces)
}

/// Coefficient of the full-degree monomial `h_1^{a_1} ... h_q^{a_q}`: the
/// pairing against the fundamental class.
fn fundamental_coefficient(elt: &RingElt, dims: &[u32]) -> BigInt {
    elt.get(dims).cloned().unwrap_or_else(BigInt::zero)
}

/// `s`-number vector of a product of projective spaces computed directly in
/// the truncated cohomology ring, independently of [`product_svec`]: the
/// graded pieces of the total Chern class are substituted into each `s`
/// polynomial and the top coefficient is read off.
pub fn direct_product_oracle(dims: &[u32]) -> CharVector {
    assert!(!dims.is_empty(), "need at least one factor");
    let n: u32 = dims.iter().sum();
    if n == 0 {
        return CharVector::point();
    }
    let (ring, pieces) = tangent_chern_pieces(dims);
    let entries = enumerate_partitions(n)
        .iter()
        .map(|i| {
            let poly = s_poly(i).expect("partitions of n >= 1 are nonempty");
            let mut value = RingElt::new();
            for (e, c) in poly.terms() {
                let mut term = ring.one();
                for (idx, &a) in e.iter().enumerate() {
                    if a > 0 {
                        term = ring.mul(&term, &ring.pow(&pieces[idx], a));
                    }
                }
                for (exp, coeff) in term {
                    let slot = value.entry(exp).or_insert_with(BigInt::zero);
                    *slot += coeff * c;
                }
            }
            fundamental_coefficient(&value, dims)
        })
        .collect();
    CharVector { n, basis: Basis::S, entries }
}

/// Chern-monomial number vector of a product of projective spaces computed
/// directly in the truncated cohomology ring: each entry multiplies the
/// Chern pieces named by its partition and reads the top coefficient.
pub fn direct_product_oracle_c(dims: &[u32]) -> CharVector {
    assert!(!dims.is_empty(), "need at least one factor");
    let n: u32 = dims.iter().sum();
    if n == 0 {
        return CharVector { n: 0, basis: Basis::C, entries: vec![BigInt::one()] };
    }
    let (ring, pieces) = tangent_chern_pieces(dims);
    let entries = enumerate_partitions(n)
        .iter()
        .map(|i| {
            let mut product = ring.one();
            for &part in i.parts() {
                product = ring.mul(&product, &pieces[part as usize - 1]);
            }
            fundamental_coefficient(&product, dims)
        })
        .collect();
    CharVector { n, basis: Basis::C, entries }
}

// ---------------------------------------------------------------------------
// Divisibility checks in dimensions 1, 2, 3.
// ---------------------------------------------------------------------------

/// Outcome of the classical divisibility condition in dimensions 1-3.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DivisibilityReport {
    pub dim: u32,
    /// Which Chern-number combination was evaluated.
    pub combination: &'static str,
    pub value: BigInt,
    pub divisor: u32,
    pub divisible: bool,
}

/// Evaluates the dimension-specific combination of Chern-monomial numbers
/// and reports divisibility: `c1` by 2 in dimension 1, `c1^2 + c2` by 12 in
/// dimension 2, `c1*c2` by 24 in dimension 3.
pub fn divisibility_check(v: &CharVector) -> Result<DivisibilityReport> {
    if v.basis != Basis::C {
        return Err(Error::BasisMismatch { expected: Basis::C, got: v.basis });
    }
    let (combination, value, divisor) = match v.n {
        // Canonical order: dim 2 is [(2), (1,1)], dim 3 is [(3), (2,1), (1,1,1)].
        1 => ("c1", v.entries[0].clone(), 2u32),
        2 => ("c1^2 + c2", &v.entries[0] + &v.entries[1], 12),
        3 => ("c1*c2", v.entries[1].clone(), 24),
        other => return Err(Error::NoDivisibilityRule { dim: other }),
    };
    let divisible = (&value % divisor).is_zero();
    Ok(DivisibilityReport { dim: v.n, combination, value, divisor, divisible })
}

// ---------------------------------------------------------------------------
// Embedded varieties, Veronese re-embedding and the cone congruence.
// ---------------------------------------------------------------------------

/// A variety with its `s`-number vector together with the largest recorded
/// divisor of the restricted hyperplane class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EmbeddedVariety {
    svec: CharVector,
    hyperplane_divisibility: NonZeroU32,
}

impl EmbeddedVariety {
    pub fn new(svec: CharVector, hyperplane_divisibility: NonZeroU32) -> Result<Self> {
        if svec.basis != Basis::S {
            return Err(Error::BasisMismatch { expected: Basis::S, got: svec.basis });
        }
        Ok(EmbeddedVariety { svec, hyperplane_divisibility })
    }

    pub fn svec(&self) -> &CharVector {
        &self.svec
    }

    pub fn hyperplane_divisibility(&self) -> NonZeroU32 {
        self.hyperplane_divisibility
    }
}

/// Re-embedding of degree `k`: the abstract variety (and so its vector) is
/// unchanged while the hyperplane class pulls back to `k` times the old one,
/// multiplying the recorded divisibility.
pub fn veronese(x: &EmbeddedVariety, k: NonZeroU32) -> EmbeddedVariety {
    EmbeddedVariety {
        svec: x.svec.clone(),
        hyperplane_divisibility: x
            .hyperplane_divisibility
            .checked_mul(k)
            .expect("divisibility overflow"),
    }
}

/// Congruence class modulo `modulus` of the top `s` number of a cone.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ConeResidue {
    pub modulus: NonZeroU32,
    /// Value in `0..modulus`.
    pub residue: u32,
}

/// The top `s` number of the cone over an `(n-1)`-dimensional embedded
/// variety, determined modulo the hyperplane divisibility `d`: it is
/// congruent to `n` times the top `s` number of the base. Nothing else
/// about the cone's vector is produced, because nothing else is determined.
pub fn cone_s_top_mod(x: &EmbeddedVariety) -> ConeResidue {
    let n = x.svec.n + 1;
    let d = x.hyperplane_divisibility;
    let value = BigInt::from(n) * x.svec.top_entry();
    let residue = value
        .mod_floor(&BigInt::from(d.get()))
        .try_into()
        .expect("residue fits: it is reduced modulo a u32");
    ConeResidue { modulus: d, residue }
}
