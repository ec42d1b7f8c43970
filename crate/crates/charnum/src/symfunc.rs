//! Exact symmetric-function algebra and the integer linear algebra built on
//! top of it.
//!
//! For a partition `I` of `n`, [`s_poly`] produces the unique polynomial in
//! the elementary symmetric variables `s1..sn` that equals the monomial
//! symmetric function of `I` in any number `k >= n` of underlying variables.
//! [`transition_matrix`] expands every degree-`n` product of elementary
//! symmetric variables in the monomial basis, giving the unimodular matrix
//! that converts `s`-number vectors into Chern-monomial number vectors.
//! [`det_int`] and [`unimodular_inverse`] are fraction-free: all divisions
//! are exact in the integers.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::partitions::{enumerate_partitions, Partition};
use crate::{Error, Result};

/// Sparse polynomial in the graded variables `s1..sn` (`deg s_i = i`) with
/// arbitrary-precision integer coefficients.
///
/// Terms map exponent vectors of length [`SigmaPoly::nvars`] to nonzero
/// coefficients. Values are immutable through the public surface; arithmetic
/// returns new polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct SigmaPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SigmaPoly {
    pub fn zero(nvars: usize) -> Self {
        SigmaPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = SigmaPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The variable `s_idx`, `idx` 1-based.
    pub fn variable(nvars: usize, idx: usize) -> Self {
        assert!(idx >= 1 && idx <= nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[idx - 1] = 1;
        let mut p = SigmaPoly::zero(nvars);
        p.terms.insert(e, BigInt::one());
        p
    }

    /// A single term `coeff * s1^{e_1} * s2^{e_2} * ...`.
    pub fn monomial(nvars: usize, exponents: &[u32], coeff: BigInt) -> Self {
        assert_eq!(exponents.len(), nvars, "exponent vector length mismatch");
        let mut p = SigmaPoly::zero(nvars);
        p.add_term(exponents.to_vec(), coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Graded degree `sum i * e_i` if all terms agree on it; `None` for the
    /// zero polynomial or an inhomogeneous one.
    pub fn graded_degree(&self) -> Option<u32> {
        let mut degree = None;
        for e in self.terms.keys() {
            let d: u32 = e.iter().enumerate().map(|(i, &a)| (i as u32 + 1) * a).sum();
            match degree {
                None => degree = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        degree
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scaled(&self, k: &BigInt) -> SigmaPoly {
        if k.is_zero() {
            return SigmaPoly::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        SigmaPoly { nvars: self.nvars, terms }
    }

    /// Exact value at integer coordinates; `sigma` may be longer than the
    /// variable count, extra coordinates are ignored.
    pub fn eval(&self, sigma: &[BigInt]) -> Result<BigInt> {
        if sigma.len() < self.nvars {
            return Err(Error::SigmaTooShort { needed: self.nvars, got: sigma.len() });
        }
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &a) in e.iter().enumerate() {
                if a > 0 {
                    term *= sigma[i].pow(a);
                }
            }
            total += term;
        }
        Ok(total)
    }
}

impl std::ops::Add for &SigmaPoly {
    type Output = SigmaPoly;
    fn add(self, rhs: &SigmaPoly) -> SigmaPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &SigmaPoly {
    type Output = SigmaPoly;
    fn sub(self, rhs: &SigmaPoly) -> SigmaPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl std::ops::Mul for &SigmaPoly {
    type Output = SigmaPoly;
    fn mul(self, rhs: &SigmaPoly) -> SigmaPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = SigmaPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl std::ops::Neg for &SigmaPoly {
    type Output = SigmaPoly;
    fn neg(self) -> SigmaPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        SigmaPoly { nvars: self.nvars, terms }
    }
}

impl fmt::Display for SigmaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Leading (lex-largest) term first.
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(j, &a)| {
                    if a == 1 {
                        format!("s{}", j + 1)
                    } else {
                        format!("s{}^{}", j + 1, a)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SigmaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Expansion of elementary-symmetric monomials in the monomial basis.
// ---------------------------------------------------------------------------

/// Dense-exponent sparse polynomial in `t_1..t_k`, used only while expanding.
type TPoly = HashMap<Vec<u32>, BigInt>;

/// Calls `f` with every size-`i` index subset of `0..k` in order.
fn for_each_subset(k: usize, i: usize, mut f: impl FnMut(&[usize])) {
    if i > k {
        return;
    }
    let mut idx: Vec<usize> = (0..i).collect();
    loop {
        f(&idx);
        let mut pos = i;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if idx[pos] < k - i + pos {
                break;
            }
        }
        idx[pos] += 1;
        for j in pos + 1..i {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Multiplies a symmetric polynomial in `t_1..t_k` by the `i`-th elementary
/// symmetric polynomial. Coefficients stay nonnegative, so no cleanup pass.
fn tpoly_mul_elementary(p: &TPoly, k: usize, i: usize) -> TPoly {
    let mut out = TPoly::with_capacity(p.len() * 2);
    for_each_subset(k, i, |subset| {
        for (e, c) in p {
            let mut e2 = e.clone();
            for &pos in subset {
                e2[pos] += 1;
            }
            *out.entry(e2).or_insert_with(BigInt::zero) += c;
        }
    });
    out
}

fn is_descending(e: &[u32]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

type MVector = BTreeMap<Partition, BigInt>;

static SIGMA_M_CACHE: LazyLock<Mutex<HashMap<(usize, Vec<u32>), MVector>>> =
    LazyLock::new(Mutex::default);

/// Expands `s1^{e_1} * s2^{e_2} * ...` (elementary symmetric variables in
/// `k` underlying variables) in the monomial symmetric basis: partition of
/// the graded degree -> coefficient. Memoized; the cache only stores final
/// results and never changes observable behavior.
fn expand_sigma_monomial(k: usize, exponents: &[u32]) -> MVector {
    let mut key = exponents.to_vec();
    while key.last() == Some(&0) {
        key.pop();
    }
    if let Some(hit) = SIGMA_M_CACHE.lock().unwrap().get(&(k, key.clone())) {
        return hit.clone();
    }

    let mut poly: TPoly = HashMap::new();
    poly.insert(vec![0; k], BigInt::one());
    for (i, &a) in key.iter().enumerate() {
        for _ in 0..a {
            poly = tpoly_mul_elementary(&poly, k, i + 1);
        }
    }

    // The poly is symmetric: the coefficient of the monomial basis element
    // for a partition is the coefficient of its sorted representative.
    let mut out = MVector::new();
    for (e, c) in poly {
        if is_descending(&e) {
            let parts: Vec<u32> = e.into_iter().take_while(|&a| a > 0).collect();
            out.insert(Partition::new(parts).expect("sorted exponents"), c);
        }
    }

    SIGMA_M_CACHE.lock().unwrap().insert((k, key), out.clone());
    out
}

/// Exponent vector of the elementary-symmetric monomial whose lex-leading
/// underlying monomial is `lambda`: consecutive differences of the parts.
fn leading_exponents(lambda: &Partition, nvars: usize) -> Vec<u32> {
    let mut padded = lambda.parts().to_vec();
    padded.resize(nvars, 0);
    let mut e = vec![0u32; nvars];
    for j in 0..nvars {
        let next = if j + 1 < nvars { padded[j + 1] } else { 0 };
        e[j] = padded[j] - next;
    }
    e
}

static S_POLY_CACHE: LazyLock<Mutex<HashMap<Partition, SigmaPoly>>> =
    LazyLock::new(Mutex::default);

/// The unique polynomial in `s1..sn` (`n = weight(I)`) whose value on the
/// elementary symmetric functions is the monomial symmetric function of `I`.
///
/// Computed with `k = n` underlying variables by lex-leading-term descent:
/// repeatedly subtract `coeff * s1^{l1-l2} * s2^{l2-l3} * ...` for the
/// current leading partition `l`. The result does not depend on `k`; see
/// [`s_poly_in_vars`] for other variable counts.
pub fn s_poly(i: &Partition) -> Result<SigmaPoly> {
    if let Some(hit) = S_POLY_CACHE.lock().unwrap().get(i) {
        return Ok(hit.clone());
    }
    let out = s_poly_in_vars(i, i.weight() as usize)?;
    S_POLY_CACHE.lock().unwrap().insert(i.clone(), out.clone());
    Ok(out)
}

/// Same as [`s_poly`] but expanding over `k >= weight(I)` underlying
/// variables; the output is identical for every admissible `k`.
pub fn s_poly_in_vars(i: &Partition, k: usize) -> Result<SigmaPoly> {
    if i.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let n = i.weight() as usize;
    if k < n {
        return Err(Error::TooFewVariables { needed: n, got: k });
    }

    let mut residue = MVector::new();
    residue.insert(i.clone(), BigInt::one());
    let mut out = SigmaPoly::zero(n);

    while let Some((lambda, coeff)) = residue.iter().next_back().map(|(l, c)| (l.clone(), c.clone())) {
        let e = leading_exponents(&lambda, n);
        out.add_term(e.clone(), coeff.clone());
        for (p, c) in expand_sigma_monomial(k, &e) {
            let total = residue.remove(&p).unwrap_or_else(BigInt::zero) - &coeff * c;
            if !total.is_zero() {
                residue.insert(p, total);
            }
        }
        debug_assert!(!residue.contains_key(&lambda), "leading term must cancel");
    }

    Ok(out)
}

/// Exact value of the `s` polynomial of `I` at integer Chern data
/// `sigma = (s1, s2, ...)`; at least `weight(I)` coordinates are required.
pub fn eval_s(i: &Partition, sigma: &[BigInt]) -> Result<BigInt> {
    s_poly(i)?.eval(sigma)
}

// ---------------------------------------------------------------------------
// Transition matrix between the Chern-monomial and s-number bases.
// ---------------------------------------------------------------------------

/// Integer matrix indexed by the partitions of `n` in canonical order.
///
/// Row `I`, column `J` holds the coefficient of the monomial symmetric
/// function of `J` in the product of elementary symmetric variables given by
/// the parts of `I`. Multiplying an `s`-number vector by this matrix yields
/// the Chern-monomial number vector of the same variety; the determinant is
/// always a unit, so the inverse conversion is integral as well.
#[derive(Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    n: u32,
    index: Vec<Partition>,
    entries: Vec<Vec<BigInt>>,
}

impl TransitionMatrix {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Row/column index: partitions of `n` in canonical order.
    pub fn index(&self) -> &[Partition] {
        &self.index
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.index.len()
    }

    /// Matrix·vector product.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.size(), "vector length mismatch");
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, x)| a * x).sum())
            .collect()
    }
}

/// The change-of-basis matrix in degree `n >= 1`.
pub fn transition_matrix(n: u32) -> TransitionMatrix {
    assert!(n >= 1, "transition matrix needs degree >= 1");
    let index = enumerate_partitions(n);
    let entries = index
        .iter()
        .map(|i| {
            let expansion = expand_sigma_monomial(n as usize, &i.multiplicities(n));
            index
                .iter()
                .map(|j| expansion.get(j).cloned().unwrap_or_else(BigInt::zero))
                .collect()
        })
        .collect();
    TransitionMatrix { n, index, entries }
}

// ---------------------------------------------------------------------------
// Fraction-free integer linear algebra.
// ---------------------------------------------------------------------------

fn exact_div(a: BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "internal: fraction-free division left a remainder");
    q
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det_int(matrix: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::NonSquareMatrix);
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m = matrix.to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = exact_div(num, &prev);
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    Ok(if negate { -det } else { det })
}

/// Exact integer inverse of a matrix with determinant ±1, so the adjugate
/// divided by the determinant stays integral.
///
/// Runs fraction-free Gauss-Jordan elimination on the matrix augmented with
/// the identity; the augmented half ends up as the adjugate scaled by the
/// sign bookkeeping, and the shared diagonal value is the determinant.
pub fn unimodular_inverse(matrix: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::NonSquareMatrix);
    }
    if n == 0 {
        return Ok(Vec::new());
    }

    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            r
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Err(Error::NotUnimodular { det: BigInt::zero() }),
            }
        }
        let pivot = m[k][k].clone();
        for i in 0..n {
            if i == k {
                continue;
            }
            let lead = std::mem::take(&mut m[i][k]);
            for j in 0..2 * n {
                if j == k {
                    continue;
                }
                let num = &pivot * &m[i][j] - &lead * &m[k][j];
                m[i][j] = exact_div(num, &prev);
            }
        }
        prev = pivot;
    }

    // Every diagonal entry now equals the determinant of the row-swapped
    // matrix.
    let diag = m[n - 1][n - 1].clone();
    debug_assert!((0..n).all(|i| m[i][i] == diag));
    let det = if negate { -diag.clone() } else { diag.clone() };
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular { det });
    }
    let inv = m
        .into_iter()
        .map(|row| row[n..].iter().map(|x| x * &diag).collect())
        .collect();
    Ok(inv)
}

/// Integer inverse of a [`TransitionMatrix`]; fails unless the determinant
/// is ±1.
pub fn inverse_unimodular(a: &TransitionMatrix) -> Result<TransitionMatrix> {
    let entries = unimodular_inverse(&a.entries)?;
    Ok(TransitionMatrix { n: a.n, index: a.index.clone(), entries })
}
