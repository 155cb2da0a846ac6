//! Partitions, composite labels `[λ,μ]` and their numeric statistics.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Young diagram, stored as weakly decreasing positive parts.
///
/// The derived order compares part sequences lexicographically, which gives
/// deterministic cache keys and output order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Validated constructor: parts must be positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("not a partition: {parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros, so `[0]` reads as `∅`.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// `m_j`: number of parts equal to `j`, as `j → m_j` for `m_j > 0`.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `z_λ = Π j^{m_j} m_j!`
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (j, m)| {
                acc * BigInt::from(j).pow(m as u32) * factorial(m)
            })
    }

    /// `κ_λ = Σ λ_j (λ_j - 2j + 1)`
    pub fn kappa(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 * (p as i64 - 2 * (i as i64 + 1) + 1))
            .sum()
    }

    /// Cells `(i, j)`, 1-based, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
            .collect()
    }

    /// Contents `j - i` over all cells.
    pub fn contents(&self) -> Vec<i64> {
        self.cells()
            .into_iter()
            .map(|(i, j)| j as i64 - i as i64)
            .collect()
    }

    /// Hook lengths over all cells, in the order of [`Partition::cells`].
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .into_iter()
            .map(|(i, j)| self.part(i) - j + conj.part(j) - i + 1)
            .collect()
    }

    /// `(z_λ, κ_λ, contents)`
    pub fn statistics(&self) -> (BigInt, i64, Vec<i64>) {
        (self.z(), self.kappa(), self.contents())
    }

    /// `λ ⊆ ν` as diagrams.
    pub fn fits_in(&self, nu: &Partition) -> bool {
        self.len() <= nu.len() && self.parts.iter().zip(&nu.parts).all(|(a, b)| a <= b)
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// `mλ = (mλ_1, mλ_2, …)`
    pub fn scale(&self, m: usize) -> Partition {
        Partition {
            parts: self.parts.iter().map(|p| p * m).collect(),
        }
    }

    /// `λ/d` when every part is divisible by `d`.
    pub fn divide(&self, d: usize) -> Option<Partition> {
        if self.parts.iter().all(|p| p % d == 0) {
            Some(Partition {
                parts: self.parts.iter().map(|p| p / d).collect(),
            })
        } else {
            None
        }
    }

    /// Multiset difference `self \ other`, if `other`'s parts are a sub-multiset.
    pub fn remove_parts(&self, other: &Partition) -> Option<Partition> {
        let mut parts = self.parts.clone();
        for p in &other.parts {
            let i = parts.iter().position(|x| x == p)?;
            parts.remove(i);
        }
        Some(Partition { parts })
    }
}

fn factorial(m: usize) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn binomial(n: usize, k: usize) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first.
pub fn enumerate(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, by size then reverse-lex.
pub fn enumerate_upto(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(enumerate).collect()
}

/// Nonemptiness constraints for [`splittings`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SplitFlags {
    pub left_nonempty: bool,
    pub right_nonempty: bool,
}

impl SplitFlags {
    pub const NONE: SplitFlags = SplitFlags {
        left_nonempty: false,
        right_nonempty: false,
    };
    pub const BOTH: SplitFlags = SplitFlags {
        left_nonempty: true,
        right_nonempty: true,
    };
}

/// One way of splitting the parts of `ν` into `B ∪ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub left: Partition,
    pub right: Partition,
    /// Number of part-occurrence assignments producing this split,
    /// `Π_j binom(m_j(ν), m_j(B)) = z_ν / (z_B z_C)`.
    pub weight: BigInt,
}

/// Distinct sub-multiset splittings `ν = B ∪ C`, with `B` running from `ν`
/// down to `∅`.
pub fn splittings(nu: &Partition, flags: SplitFlags) -> Vec<Splitting> {
    let mult: Vec<(usize, usize)> = nu.multiplicities().into_iter().rev().collect();
    let mut out = Vec::new();
    let mut take = vec![0usize; mult.len()];
    fn go(
        k: usize,
        mult: &[(usize, usize)],
        take: &mut Vec<usize>,
        flags: SplitFlags,
        out: &mut Vec<Splitting>,
    ) {
        if k == mult.len() {
            let mut left = Vec::new();
            let mut right = Vec::new();
            let mut weight = BigInt::one();
            for (&(j, m), &b) in mult.iter().zip(take.iter()) {
                left.extend(std::iter::repeat(j).take(b));
                right.extend(std::iter::repeat(j).take(m - b));
                weight *= binomial(m, b);
            }
            if (flags.left_nonempty && left.is_empty()) || (flags.right_nonempty && right.is_empty()) {
                return;
            }
            out.push(Splitting {
                left: Partition { parts: left },
                right: Partition { parts: right },
                weight,
            });
            return;
        }
        for b in (0..=mult[k].1).rev() {
            take[k] = b;
            go(k + 1, mult, take, flags, out);
        }
    }
    go(0, &mult, &mut take, flags, &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<usize> = serde_json::from_str(s).map_err(|e| Error::Parse(format!("{s}: {e}")))?;
        Ok(Partition::from_unsorted(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Partition::from_unsorted(Vec::deserialize(d)?))
    }
}

/// A composite label `[λ,μ]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionPair {
    pub pos: Partition,
    pub neg: Partition,
}

impl PartitionPair {
    pub fn new(pos: Partition, neg: Partition) -> Self {
        PartitionPair { pos, neg }
    }

    pub fn empty() -> Self {
        PartitionPair::default()
    }

    pub fn size(&self) -> usize {
        self.pos.size() + self.neg.size()
    }

    pub fn is_empty(&self) -> bool {
        self.pos.is_empty() && self.neg.is_empty()
    }

    /// `[λ,μ] → [μ,λ]`, the label of the reversed component.
    pub fn swap(&self) -> PartitionPair {
        PartitionPair::new(self.neg.clone(), self.pos.clone())
    }

    /// `[λ,μ] → [λᵗ,μᵗ]`
    pub fn conjugate(&self) -> PartitionPair {
        PartitionPair::new(self.pos.conjugate(), self.neg.conjugate())
    }

    /// `κ_λ + κ_μ`
    pub fn kappa(&self) -> i64 {
        self.pos.kappa() + self.neg.kappa()
    }
}

/// All pairs with `|λ| + |μ| ≤ n`.
pub fn pairs_upto(n: usize) -> Vec<PartitionPair> {
    let mut out = Vec::new();
    for total in 0..=n {
        for a in 0..=total {
            for l in enumerate(a) {
                for m in enumerate(total - a) {
                    out.push(PartitionPair::new(l.clone(), m));
                }
            }
        }
    }
    out
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.pos, self.neg)
    }
}

impl FromStr for PartitionPair {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (a, b): (Partition, Partition) =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("{s}: {e}")))?;
        Ok(PartitionPair::new(a, b))
    }
}

impl Serialize for PartitionPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (&self.pos, &self.neg).serialize(s)
    }
}

impl<'de> Deserialize<'de> for PartitionPair {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (pos, neg) = <(Partition, Partition)>::deserialize(d)?;
        Ok(PartitionPair { pos, neg })
    }
}

/// Shorthand for literals in tests and fixtures.
pub fn p(parts: &[usize]) -> Partition {
    Partition::from_unsorted(parts.to_vec())
}

/// Shorthand for `[λ,μ]`.
pub fn pp(pos: &[usize], neg: &[usize]) -> PartitionPair {
    PartitionPair::new(p(pos), p(neg))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugates() {
        assert_eq!(p(&[4, 2, 2]).conjugate(), p(&[3, 3, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::column(5).conjugate(), Partition::row(5));
    }

    #[test]
    fn statistics() {
        let (z, k, mut c) = p(&[2, 1]).statistics();
        c.sort();
        assert_eq!((z, k, c), (BigInt::from(2), 0, vec![-1, 0, 1]));
        assert_eq!(p(&[2]).statistics(), (BigInt::from(2), 2, vec![0, 1]));
        assert_eq!(p(&[1, 1]).statistics(), (BigInt::from(2), -2, vec![0, -1]));
        assert_eq!(p(&[2, 2, 1]).z(), BigInt::from(8));
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate(0), vec![Partition::empty()]);
        assert_eq!(enumerate(4).len(), 5);
        assert_eq!(enumerate(6).len(), 11);
        assert_eq!(enumerate(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn hooks_of_staircase() {
        assert_eq!(p(&[2, 1]).hooks(), vec![3, 1, 1]);
    }

    #[test]
    fn split_examples() {
        let s = splittings(&p(&[1, 1]), SplitFlags::NONE);
        let got: Vec<_> = s.iter().map(|x| (x.left.clone(), x.right.clone(), x.weight.clone())).collect();
        assert_eq!(
            got,
            vec![
                (p(&[1, 1]), p(&[]), BigInt::from(1)),
                (p(&[1]), p(&[1]), BigInt::from(2)),
                (p(&[]), p(&[1, 1]), BigInt::from(1)),
            ]
        );
        assert_eq!(splittings(&p(&[2, 1]), SplitFlags::NONE).len(), 4);
        let both = splittings(&p(&[1, 1]), SplitFlags::BOTH);
        assert_eq!(both.len(), 1);
        assert_eq!((both[0].left.clone(), both[0].right.clone()), (p(&[1]), p(&[1])));
    }

    #[test]
    fn parse_and_print() {
        let x: Partition = "[4,2,2]".parse().unwrap();
        assert_eq!(x, p(&[4, 2, 2]));
        assert_eq!(x.to_string(), "[4,2,2]");
        let y: PartitionPair = "[[4,2,2],[3,2]]".parse().unwrap();
        assert_eq!(y.to_string(), "[[4,2,2],[3,2]]");
        assert_eq!("[0]".parse::<Partition>().unwrap(), Partition::empty());
        assert!(Partition::new(vec![1, 2]).is_err());
    }
}
