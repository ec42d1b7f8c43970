//! Algebraic identities pinning down the symmetric-function code.
//!
//! The oracle here is a self-contained polynomial expander over the
//! underlying variables: elementary symmetric polynomials are built from
//! subsets, monomial symmetric functions from distinct exponent
//! permutations, and the library's output is substituted and compared term
//! by term. Newton's identities give a second, recursive route to the
//! single-part polynomials.

use std::collections::BTreeMap;

use charnum::partitions::{enumerate_partitions, splittings, Partition};
use charnum::symfunc::{
    det_int, inverse_unimodular, s_poly, s_poly_in_vars, transition_matrix, SigmaPoly,
};
use charnum::BigInt;
use num_traits::{One, Zero};

/// Polynomials over `t_1..t_k`, exponent vector -> coefficient.
type TPoly = BTreeMap<Vec<u32>, BigInt>;

fn tp_add_term(p: &mut TPoly, e: Vec<u32>, c: BigInt) {
    let total = p.remove(&e).unwrap_or_else(BigInt::zero) + c;
    if !total.is_zero() {
        p.insert(e, total);
    }
}

fn tp_mul(a: &TPoly, b: &TPoly) -> TPoly {
    let mut out = TPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            tp_add_term(&mut out, e, ca * cb);
        }
    }
    out
}

fn tp_one(k: usize) -> TPoly {
    let mut p = TPoly::new();
    p.insert(vec![0; k], BigInt::one());
    p
}

/// Elementary symmetric polynomial via bitmask subsets; independent of the
/// library's combination walker.
fn elementary(k: usize, degree: usize) -> TPoly {
    let mut out = TPoly::new();
    for mask in 0u32..(1 << k) {
        if mask.count_ones() as usize != degree {
            continue;
        }
        let e: Vec<u32> = (0..k).map(|pos| u32::from(mask >> pos & 1 == 1)).collect();
        out.insert(e, BigInt::one());
    }
    out
}

/// All distinct rearrangements of the padded exponent vector of `lambda`.
fn monomial_symmetric(k: usize, lambda: &Partition) -> TPoly {
    fn rec(remaining: &mut Vec<(u32, usize)>, acc: &mut Vec<u32>, k: usize, out: &mut TPoly) {
        if acc.len() == k {
            out.insert(acc.clone(), BigInt::one());
            return;
        }
        for idx in 0..remaining.len() {
            if remaining[idx].1 == 0 {
                continue;
            }
            // Values are distinct across slots, so each choice is distinct.
            remaining[idx].1 -= 1;
            acc.push(remaining[idx].0);
            rec(remaining, acc, k, out);
            acc.pop();
            remaining[idx].1 += 1;
        }
    }
    assert!(lambda.len() <= k);
    let mut counts: Vec<(u32, usize)> = Vec::new();
    for &p in lambda.parts() {
        match counts.iter_mut().find(|(v, _)| *v == p) {
            Some(slot) => slot.1 += 1,
            None => counts.push((p, 1)),
        }
    }
    counts.push((0, k - lambda.len()));
    let mut out = TPoly::new();
    rec(&mut counts, &mut Vec::new(), k, &mut out);
    out
}

/// Substitutes elementary symmetric polynomials of `t_1..t_k` for the
/// variables of `poly`.
fn substitute_elementary(poly: &SigmaPoly, k: usize) -> TPoly {
    let mut out = TPoly::new();
    for (exponents, coeff) in poly.terms() {
        let mut term = tp_one(k);
        for (idx, &a) in exponents.iter().enumerate() {
            for _ in 0..a {
                term = tp_mul(&term, &elementary(k, idx + 1));
            }
        }
        for (e, c) in term {
            tp_add_term(&mut out, e, c * coeff);
        }
    }
    out
}

#[test]
fn s_poly_satisfies_its_defining_equation() {
    for n in 1..=6u32 {
        for i in enumerate_partitions(n) {
            let poly = s_poly(&i).unwrap();
            let substituted = substitute_elementary(&poly, n as usize);
            let expected = monomial_symmetric(n as usize, &i);
            assert_eq!(substituted, expected, "defining equation fails for {i}");
        }
    }
}

#[test]
fn single_part_polynomials_match_newtons_identities() {
    // p_m = s1 p_{m-1} - s2 p_{m-2} + ... + (-1)^{m-1} m s_m, within nvars = m.
    for n in 1..=10usize {
        let mut power_sums: Vec<SigmaPoly> = Vec::new();
        for m in 1..=n {
            let mut p = SigmaPoly::zero(n);
            for j in 1..m {
                let term = &SigmaPoly::variable(n, j) * &power_sums[m - j - 1];
                let signed = if j % 2 == 1 { term } else { -&term };
                p = &p + &signed;
            }
            let mut tail_exp = vec![0u32; n];
            tail_exp[m - 1] = 1;
            let tail_coeff =
                if m % 2 == 1 { BigInt::from(m) } else { BigInt::from(-(m as i64)) };
            p = &p + &SigmaPoly::monomial(n, &tail_exp, tail_coeff);
            power_sums.push(p);
        }
        let expected = s_poly(&Partition::of(&[n as u32])).unwrap();
        // The recursion runs in n variables; the library polynomial uses
        // exactly as many, so they are directly comparable.
        assert_eq!(power_sums[n - 1], expected, "Newton mismatch at n = {n}");
    }
}

#[test]
fn s_poly_does_not_depend_on_the_variable_count() {
    for n in 1..=6u32 {
        for i in enumerate_partitions(n) {
            let tight = s_poly_in_vars(&i, n as usize).unwrap();
            let loose = s_poly_in_vars(&i, n as usize + 2).unwrap();
            assert_eq!(tight, loose, "variable-count dependence for {i}");
        }
    }
}

/// Expansion matrix of the s polynomials over the elementary-symmetric
/// monomials of the same degree: row `J`, column `L` is the coefficient in
/// `s_poly(J)` of the monomial whose exponents are the part multiplicities
/// of `L`.
fn s_coefficient_matrix(n: u32) -> Vec<Vec<BigInt>> {
    let index = enumerate_partitions(n);
    index
        .iter()
        .map(|j| {
            let poly = s_poly(j).unwrap();
            let coeffs: BTreeMap<Vec<u32>, BigInt> =
                poly.terms().map(|(e, c)| (e.to_vec(), c.clone())).collect();
            index
                .iter()
                .map(|l| coeffs.get(&l.multiplicities(n)).cloned().unwrap_or_else(BigInt::zero))
                .collect()
        })
        .collect()
}

#[test]
fn expanding_monomials_and_back_is_the_identity() {
    for n in 1..=10u32 {
        let a = transition_matrix(n);
        let b = s_coefficient_matrix(n);
        let size = a.size();
        for row in 0..size {
            let combined: Vec<BigInt> = (0..size)
                .map(|col| (0..size).map(|k| &b[row][k] * &a.entries()[k][col]).sum())
                .collect();
            for (col, value) in combined.iter().enumerate() {
                let expected = if row == col { BigInt::one() } else { BigInt::zero() };
                assert_eq!(*value, expected, "n={n}, entry ({row},{col})");
            }
        }
    }
}

#[test]
fn transition_matrices_are_unimodular_up_to_ten() {
    for n in 1..=10u32 {
        let det = det_int(transition_matrix(n).entries()).unwrap();
        assert!(
            det == BigInt::one() || det == BigInt::from(-1),
            "det at n = {n} is {det}"
        );
    }
}

#[test]
fn inverse_matches_the_coefficient_matrix() {
    // Two independent routes to the inverse of the transition matrix: the
    // fraction-free eliminator and the s-polynomial coefficients.
    for n in 1..=8u32 {
        let a = transition_matrix(n);
        let inv = inverse_unimodular(&a).unwrap();
        assert_eq!(inv.entries(), s_coefficient_matrix(n).as_slice(), "n = {n}");
    }
}

#[test]
fn direct_sum_splits_the_s_classes_over_two_variable_blocks() {
    // Over variables split into two blocks x and y, the s polynomial of I
    // evaluated on all variables equals the sum over distinct two-block
    // splittings (J, K) of I (empty pieces allowed, contributing 1) of the
    // product of the block evaluations.
    for n in 1..=5u32 {
        let k = n as usize; // per block
        let total = 2 * k;
        for i in enumerate_partitions(n) {
            let lhs = substitute_elementary(&s_poly(&i).unwrap(), total);

            let mut rhs = TPoly::new();
            let mut add_pair = |j: &Partition, l: &Partition| {
                let eval_block = |p: &Partition, offset: usize| -> TPoly {
                    if p.is_empty() {
                        return tp_one(total);
                    }
                    let block = substitute_elementary(&s_poly(p).unwrap(), k);
                    // Re-embed the block's variables into the full set.
                    block
                        .into_iter()
                        .map(|(e, c)| {
                            let mut full = vec![0u32; total];
                            full[offset..offset + k].copy_from_slice(&e);
                            (full, c)
                        })
                        .collect()
                };
                let product = tp_mul(&eval_block(j, 0), &eval_block(l, k));
                for (e, c) in product {
                    tp_add_term(&mut rhs, e, c);
                }
            };

            add_pair(&Partition::empty(), &i);
            add_pair(&i, &Partition::empty());
            for a in 1..n {
                for pair in splittings(&i, &[a, n - a]).unwrap() {
                    add_pair(&pair[0], &pair[1]);
                }
            }

            assert_eq!(lhs, rhs, "direct-sum identity fails for {i}");
        }
    }
}
