//! Integer partitions, their canonical order, refinement tests and splitting
//! enumeration.
//!
//! Every vector and matrix in the crate is indexed by the partitions of a
//! fixed weight `n` in the order produced by [`enumerate_partitions`]:
//! strictly descending lexicographic on the part tuples, `(n)` first and
//! `(1,...,1)` last. Under this order a refinement of `J` never comes before
//! `J`, which is what makes the generator matrices of the [`realization`]
//! module triangular.
//!
//! [`realization`]: crate::realization

use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

/// A weakly decreasing tuple of positive integers.
///
/// The empty partition (weight 0) is a first-class value. The derived `Ord`
/// compares part tuples lexicographically; restricted to partitions of equal
/// weight it is exactly the canonical order, with `(2) > (1,1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts that must already be weakly decreasing
    /// and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Shorthand for static part lists; panics on invalid input.
    pub fn of(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("invalid partition literal")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity vector: entry `d-1` counts the parts equal to `d`,
    /// for `d = 1..=max`.
    pub fn multiplicities(&self, max: u32) -> Vec<u32> {
        let mut mult = vec![0u32; max as usize];
        for &p in &self.parts {
            mult[p as usize - 1] += 1;
        }
        mult
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n` in canonical (strictly descending lexicographic)
/// order. `n = 0` yields the single empty partition.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: stack.clone() });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            stack.push(p);
            rec(remaining - p, p, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Canonical comparison of two partitions of the same weight.
///
/// `Greater` means earlier in [`enumerate_partitions`] order, so
/// `lex_compare((2), (1,1)) = Greater`.
pub fn lex_compare(a: &Partition, b: &Partition) -> Result<Ordering> {
    if a.weight() != b.weight() {
        return Err(Error::WeightMismatch { left: a.weight(), right: b.weight() });
    }
    Ok(a.cmp(b))
}

/// Multiset union of the parts, re-sorted; weights add.
pub fn union(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<u32> = a.parts.iter().chain(b.parts.iter()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition { parts }
}

/// Whether the parts of `i` can be grouped into blocks summing to the parts
/// of `j`. Decided by backtracking over block assignments; blocks with equal
/// remaining capacity are tried only once per level.
pub fn is_refinement(i: &Partition, j: &Partition) -> Result<bool> {
    if i.weight() != j.weight() {
        return Err(Error::WeightMismatch { left: i.weight(), right: j.weight() });
    }

    fn assign(parts: &[u32], caps: &mut [u32]) -> bool {
        let Some((&p, rest)) = parts.split_first() else {
            // Equal weights force every block to be exactly filled here.
            return true;
        };
        let mut tried: Vec<u32> = Vec::new();
        for idx in 0..caps.len() {
            let c = caps[idx];
            if c < p || tried.contains(&c) {
                continue;
            }
            tried.push(c);
            caps[idx] = c - p;
            if assign(rest, caps) {
                caps[idx] = c;
                return true;
            }
            caps[idx] = c;
        }
        false
    }

    let mut caps = j.parts.clone();
    Ok(assign(&i.parts, &mut caps))
}

/// All distinct ordered tuples `(I_1, ..., I_q)` of partitions with
/// `weight(I_l) = shape[l]` whose multiset union is `i`.
///
/// Tuples are deduplicated at the level of partition tuples: reassigning
/// equal parts between labels does not create duplicates. The result may be
/// empty; it is nonempty exactly when `i` is a refinement of the shape.
pub fn splittings(i: &Partition, shape: &[u32]) -> Result<Vec<Vec<Partition>>> {
    if shape.iter().any(|&s| s == 0) {
        return Err(Error::ZeroShapeEntry);
    }
    let total: u32 = shape.iter().sum();
    if total != i.weight() {
        return Err(Error::ShapeWeightMismatch { partition: i.weight(), shape: total });
    }

    // Distinct part values with multiplicities, values descending, so each
    // distinct sub-multiset is enumerated exactly once per block.
    let mut values: Vec<u32> = Vec::new();
    let mut avail: Vec<u32> = Vec::new();
    for &p in i.parts() {
        if values.last() == Some(&p) {
            *avail.last_mut().unwrap() += 1;
        } else {
            values.push(p);
            avail.push(1);
        }
    }

    struct Enumerator<'a> {
        values: Vec<u32>,
        avail: Vec<u32>,
        shape: &'a [u32],
        acc: Vec<Partition>,
        out: Vec<Vec<Partition>>,
    }

    impl Enumerator<'_> {
        fn block(&mut self, level: usize) {
            if level == self.shape.len() {
                self.out.push(self.acc.clone());
                return;
            }
            let goal = self.shape[level];
            let mut piece = Vec::new();
            self.pick(level, 0, goal, &mut piece);
        }

        fn pick(&mut self, level: usize, vi: usize, remaining: u32, piece: &mut Vec<u32>) {
            if remaining == 0 {
                self.acc.push(Partition { parts: piece.clone() });
                self.block(level + 1);
                self.acc.pop();
                return;
            }
            if vi == self.values.len() {
                return;
            }
            let v = self.values[vi];
            let max_take = self.avail[vi].min(remaining / v);
            for k in (0..=max_take).rev() {
                self.avail[vi] -= k;
                let len = piece.len();
                piece.extend(std::iter::repeat(v).take(k as usize));
                self.pick(level, vi + 1, remaining - k * v, piece);
                piece.truncate(len);
                self.avail[vi] += k;
            }
        }
    }

    let mut e = Enumerator { values, avail, shape, acc: Vec::new(), out: Vec::new() };
    e.block(0);
    Ok(e.out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::of(parts)
    }

    #[test]
    fn constructor_rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![3, 1]).is_ok());
    }

    #[test]
    fn enumerate_zero_is_the_empty_partition() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
    }

    #[test]
    fn enumerate_three_and_four() {
        assert_eq!(enumerate_partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        let four = enumerate_partitions(4);
        assert_eq!(
            four,
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(four.len(), 5);
    }

    #[test]
    fn enumeration_is_strictly_descending() {
        for n in 0..=12 {
            let list = enumerate_partitions(n);
            for w in list.windows(2) {
                assert_eq!(lex_compare(&w[0], &w[1]).unwrap(), Ordering::Greater);
            }
        }
    }

    #[test]
    fn lex_compare_examples() {
        assert_eq!(lex_compare(&p(&[2]), &p(&[1, 1])).unwrap(), Ordering::Greater);
        assert_eq!(lex_compare(&p(&[2, 1]), &p(&[2, 1])).unwrap(), Ordering::Equal);
        assert_eq!(lex_compare(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), Ordering::Less);
    }

    #[test]
    fn lex_compare_rejects_weight_mismatch() {
        assert_eq!(
            lex_compare(&p(&[2]), &p(&[1])),
            Err(Error::WeightMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn union_examples() {
        assert_eq!(union(&p(&[2]), &p(&[1])), p(&[2, 1]));
        assert_eq!(union(&p(&[1]), &p(&[1])), p(&[1, 1]));
        assert_eq!(union(&Partition::empty(), &p(&[3, 1])), p(&[3, 1]));
    }

    #[test]
    fn refinement_examples() {
        assert!(is_refinement(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap());
        assert!(!is_refinement(&p(&[3]), &p(&[2, 1])).unwrap());
        assert!(is_refinement(&p(&[2, 1]), &p(&[2, 1])).unwrap());
        assert!(is_refinement(&Partition::empty(), &Partition::empty()).unwrap());
        assert!(is_refinement(&p(&[2, 2, 1, 1]), &p(&[3, 3])).unwrap());
        assert!(!is_refinement(&p(&[4, 1, 1]), &p(&[3, 3])).unwrap());
    }

    #[test]
    fn refinement_rejects_weight_mismatch() {
        assert!(is_refinement(&p(&[2]), &p(&[3])).is_err());
    }

    #[test]
    fn splittings_examples() {
        assert_eq!(
            splittings(&p(&[1, 1]), &[1, 1]).unwrap(),
            vec![vec![p(&[1]), p(&[1])]]
        );

        let two = splittings(&p(&[2, 1, 1]), &[2, 2]).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.contains(&vec![p(&[2]), p(&[1, 1])]));
        assert!(two.contains(&vec![p(&[1, 1]), p(&[2])]));

        assert!(splittings(&p(&[3]), &[1, 2]).unwrap().is_empty());
    }

    #[test]
    fn splittings_whole_shape_is_identity() {
        for n in 1..=8 {
            for i in enumerate_partitions(n) {
                assert_eq!(splittings(&i, &[n]).unwrap(), vec![vec![i.clone()]]);
            }
        }
    }

    #[test]
    fn splittings_rejects_bad_shape() {
        assert!(matches!(splittings(&p(&[2]), &[1, 0, 1]), Err(Error::ZeroShapeEntry)));
        assert!(matches!(
            splittings(&p(&[2]), &[1, 2]),
            Err(Error::ShapeWeightMismatch { .. })
        ));
    }

    #[test]
    fn splitting_of_empty_partition() {
        assert_eq!(splittings(&Partition::empty(), &[]).unwrap(), vec![Vec::new()]);
    }
}
