//! Partitions, bi-partitions and marked partitions, and the bijection between
//! marked partitions and bi-partitions of the same size.
//!
//! Indices in the public accessors are 1-based and read zero beyond the
//! stored length, so `λ_i`, `λ_i^<`, `λ_i^≤`, `λ_i^>` and `λ_i^≥` can be
//! used for any `i`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Parses comma-separated parts; the empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i`, 1-based, zero outside the stored range.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.parts.get(i - 1).copied().unwrap_or(0)
        }
    }

    /// `|λ|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `λ_i^< = Σ_{j<i} λ_j`.
    pub fn sum_lt(&self, i: usize) -> u32 {
        self.parts.iter().take(i.saturating_sub(1)).sum()
    }

    /// `λ_i^≤ = Σ_{j≤i} λ_j`.
    pub fn sum_le(&self, i: usize) -> u32 {
        self.parts.iter().take(i).sum()
    }

    /// `λ_i^> = Σ_{j>i} λ_j`.
    pub fn sum_gt(&self, i: usize) -> u32 {
        self.parts.iter().skip(i).sum()
    }

    /// `λ_i^≥ = Σ_{j≥i} λ_j`.
    pub fn sum_ge(&self, i: usize) -> u32 {
        self.parts.iter().skip(i.saturating_sub(1)).sum()
    }

    /// Dual partition: `ᵗλ_i = #{j : λ_j ≥ i}`.
    pub fn transpose(&self) -> Self {
        let width = self.part(1);
        Partition { parts: (1..=width).map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32).collect() }
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn standard_tableaux(&self) -> u128 {
        let t = self.transpose();
        let mut num: u128 = (1..=self.size() as u128).product();
        let mut hooks: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row as usize - j - 1;
                let leg = t.parts[j] as usize - i - 1;
                hooks *= (arm + leg + 1) as u128;
            }
        }
        num /= hooks;
        num
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// An ordered pair of partitions `(μ, ν)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiPartition {
    pub mu: Partition,
    pub nu: Partition,
}

impl BiPartition {
    pub fn new(mu: Partition, nu: Partition) -> Self {
        BiPartition { mu, nu }
    }

    /// `|μ| + |ν|`.
    pub fn weight(&self) -> u32 {
        self.mu.size() + self.nu.size()
    }

    /// Dimension of the corresponding irreducible representation of the
    /// hyperoctahedral group: `C(n, |μ|) · f^μ · f^ν`.
    pub fn irrep_dim(&self) -> u128 {
        let n = self.weight() as u128;
        let k = self.mu.size() as u128;
        let mut binom: u128 = 1;
        for i in 0..k {
            binom = binom * (n - i) / (i + 1);
        }
        binom * self.mu.standard_tableaux() * self.nu.standard_tableaux()
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.mu, self.nu)
    }
}

/// All bi-partitions of `n`: `|μ|` descending, then `μ` and `ν` in descending
/// lexicographic order.
pub fn enumerate_bipartitions(n: u32) -> Vec<BiPartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for mu in partitions_of(k) {
            for nu in partitions_of(n - k) {
                out.push(BiPartition::new(mu.clone(), nu));
            }
        }
    }
    out
}

/// A partition `λ` together with a marking `a` of the same length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedPartition {
    lambda: Partition,
    a: Vec<u32>,
}

impl MarkedPartition {
    /// Validates the marking conditions:
    /// `0 ≤ a_k ≤ λ_k`; `a_k = 0` when `λ_{k+1} = λ_k`; and
    /// `λ_p − λ_q > a_p − a_q > 0` for `p < q` with both marks nonzero.
    pub fn new(lambda: Partition, mut a: Vec<u32>) -> Result<Self> {
        let len = lambda.len();
        if a.len() > len {
            if a[len..].iter().any(|&x| x != 0) {
                return Err(Error::InvalidMarkedPartition(format!("marking {a:?} is longer than {lambda}")));
            }
            a.truncate(len);
        }
        a.resize(len, 0);
        let bad = |msg: String| Err(Error::InvalidMarkedPartition(msg));
        for k in 1..=len {
            let ak = a[k - 1];
            if ak > lambda.part(k) {
                return bad(format!("a_{k} = {ak} exceeds λ_{k} = {}", lambda.part(k)));
            }
            if ak != 0 && lambda.part(k + 1) == lambda.part(k) {
                return bad(format!("a_{k} = {ak} must vanish since λ_{} = λ_{k}", k + 1));
            }
        }
        for p in 1..=len {
            for q in p + 1..=len {
                let (ap, aq) = (a[p - 1] as i64, a[q - 1] as i64);
                if ap == 0 || aq == 0 {
                    continue;
                }
                let gap = lambda.part(p) as i64 - lambda.part(q) as i64;
                if !(gap > ap - aq && ap - aq > 0) {
                    return bad(format!(
                        "positions {p} < {q} need λ_p − λ_q > a_p − a_q > 0, got {gap} and {}",
                        ap - aq
                    ));
                }
            }
        }
        Ok(MarkedPartition { lambda, a })
    }

    /// The marking `(λ, 0)`.
    pub fn unmarked(lambda: Partition) -> Self {
        let a = vec![0; lambda.len()];
        MarkedPartition { lambda, a }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// Marks, padded to the length of `λ`.
    pub fn marks(&self) -> &[u32] {
        &self.a
    }

    /// `a_k`, 1-based, zero outside the stored range.
    pub fn mark(&self, k: usize) -> u32 {
        if k == 0 {
            0
        } else {
            self.a.get(k - 1).copied().unwrap_or(0)
        }
    }

    /// `|λ|`, the rank this marked partition lives in.
    pub fn rank(&self) -> usize {
        self.lambda.size() as usize
    }

    /// The sequence `b` with `b_i = a_i` when `a_i ≠ 0`, otherwise the
    /// maximum of `{a_j + λ_i − λ_j : j < i} ∪ {a_j : j ≥ i}`.
    pub fn b_sequence(&self) -> Vec<u32> {
        let lam = self.lambda.parts();
        let a = &self.a;
        (0..lam.len())
            .map(|i| {
                if a[i] != 0 {
                    return a[i];
                }
                let before = (0..i).map(|j| a[j] as i64 + lam[i] as i64 - lam[j] as i64);
                let after = (i..lam.len()).map(|j| a[j] as i64);
                before.chain(after).max().unwrap_or(0).max(0) as u32
            })
            .collect()
    }

    /// The bi-partition `(μ, ν)` with `μ_i = b_i` and `ν_i = λ_i − b_i`.
    ///
    /// Panics if either sequence fails to be weakly decreasing, which valid
    /// marks never produce.
    pub fn to_bipartition(&self) -> BiPartition {
        let b = self.b_sequence();
        let rest: Vec<u32> = self.lambda.parts().iter().zip(&b).map(|(l, x)| l - x).collect();
        assert!(b.windows(2).all(|w| w[0] >= w[1]), "μ = {b:?} is not weakly decreasing for {self}");
        assert!(rest.windows(2).all(|w| w[0] >= w[1]), "ν = {rest:?} is not weakly decreasing for {self}");
        BiPartition::new(
            Partition::new(b).expect("checked decreasing"),
            Partition::new(rest).expect("checked decreasing"),
        )
    }

    /// The unique marked partition mapping to `bp`, found by searching all
    /// marked partitions of the same size.
    pub fn from_bipartition(bp: &BiPartition) -> Result<Self> {
        let mut hits = enumerate_marked_partitions(bp.weight()).into_iter().filter(|mp| mp.to_bipartition() == *bp);
        let first = hits.next().ok_or_else(|| Error::NoPreimage(bp.to_string()))?;
        if hits.next().is_some() {
            return Err(Error::MultiplePreimages(bp.to_string()));
        }
        Ok(first)
    }

    /// Parses `λ` and `a` from comma-separated strings.
    pub fn parse(lambda: &str, a: &str) -> Result<Self> {
        let lambda = Partition::parse(lambda)?;
        let a = if a.trim().is_empty() {
            Vec::new()
        } else {
            a.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad mark {t:?}"))))
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(lambda, a)
    }
}

impl fmt::Display for MarkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.a.iter().map(u32::to_string).collect();
        if self.lambda.is_empty() {
            write!(f, "(∅, ∅)")
        } else {
            write!(f, "({}, ({}))", self.lambda, a.join(","))
        }
    }
}

/// All marked partitions of `n`: `λ` in descending lexicographic order, then
/// `a` in descending lexicographic order.
pub fn enumerate_marked_partitions(n: u32) -> Vec<MarkedPartition> {
    partitions_of(n).iter().flat_map(enumerate_markings).collect()
}

/// All valid markings of `λ`, in descending lexicographic order of `a`.
pub fn enumerate_markings(lambda: &Partition) -> Vec<MarkedPartition> {
    let lam = lambda.parts().to_vec();
    let mut a = vec![0u32; lam.len()];
    let mut out = Vec::new();
    markings(&lam, 0, &mut a, &mut |a| out.push(MarkedPartition { lambda: lambda.clone(), a: a.to_vec() }));
    out
}

fn markings(lam: &[u32], k: usize, a: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    if k == lam.len() {
        emit(a);
        return;
    }
    let repeated = lam.get(k + 1) == Some(&lam[k]);
    let top = if repeated { 0 } else { lam[k] };
    for v in (0..=top).rev() {
        let compatible = v == 0
            || (0..k).all(|p| {
                a[p] == 0 || {
                    let d = a[p] as i64 - v as i64;
                    (lam[p] - lam[k]) as i64 > d && d > 0
                }
            });
        if compatible {
            a[k] = v;
            markings(lam, k + 1, a, emit);
        }
    }
    a[k] = 0;
}

fn strip(v: &[u32]) -> Vec<u32> {
    let mut v = v.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Partition::new(Vec::<u32>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MarkedRepr {
    lambda: Partition,
    a: Vec<u32>,
}

impl Serialize for MarkedPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MarkedRepr { lambda: self.lambda.clone(), a: strip(&self.a) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MarkedPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = MarkedRepr::deserialize(d)?;
        MarkedPartition::new(r.lambda, r.a).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BiRepr {
    mu: Partition,
    nu: Partition,
}

impl Serialize for BiPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BiRepr { mu: self.mu.clone(), nu: self.nu.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = BiRepr::deserialize(d)?;
        Ok(BiPartition::new(r.mu, r.nu))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn mp(l: &[u32], a: &[u32]) -> MarkedPartition {
        MarkedPartition::new(p(l), a.to_vec()).unwrap()
    }

    fn bp(mu: &[u32], nu: &[u32]) -> BiPartition {
        BiPartition::new(p(mu), p(nu))
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[2]).transpose(), p(&[1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
    }

    #[test]
    fn partial_sums() {
        let l = p(&[4, 2, 1]);
        assert_eq!((l.sum_lt(2), l.sum_le(2), l.sum_gt(2), l.sum_ge(2)), (4, 6, 1, 3));
        assert_eq!((l.sum_lt(1), l.sum_ge(1), l.sum_gt(3), l.sum_ge(9)), (0, 7, 0, 0));
        assert_eq!((l.part(0), l.part(3), l.part(4)), (0, 1, 0));
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert_eq!(Partition::parse("3, 1").unwrap(), p(&[3, 1]));
        assert!(Partition::parse("a").is_err());
    }

    #[test]
    fn marking_conditions_each_reject() {
        assert!(MarkedPartition::new(p(&[2]), vec![3]).is_err());
        assert!(MarkedPartition::new(p(&[1, 1]), vec![1, 0]).is_err());
        assert!(MarkedPartition::new(p(&[3, 1]), vec![1, 1]).is_err());
        assert!(MarkedPartition::new(p(&[3, 1]), vec![3, 1]).is_err());
        assert!(MarkedPartition::new(p(&[3, 1]), vec![2, 1]).is_ok());
        assert!(MarkedPartition::new(p(&[2]), vec![1, 1]).is_err());
        assert_eq!(MarkedPartition::new(p(&[2]), vec![1, 0]).unwrap(), mp(&[2], &[1]));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_marked_partitions(0), vec![mp(&[], &[])]);
        let two = enumerate_marked_partitions(2);
        assert_eq!(
            two,
            vec![mp(&[2], &[2]), mp(&[2], &[1]), mp(&[2], &[0]), mp(&[1, 1], &[0, 1]), mp(&[1, 1], &[0, 0])]
        );
        assert_eq!(enumerate_marked_partitions(3).len(), 10);
        assert_eq!(enumerate_bipartitions(0), vec![bp(&[], &[])]);
        assert_eq!(enumerate_bipartitions(1), vec![bp(&[1], &[]), bp(&[], &[1])]);
        assert_eq!(enumerate_bipartitions(2).len(), 5);
    }

    #[test]
    fn forward_map_examples() {
        assert_eq!(mp(&[1, 1], &[0, 0]).to_bipartition(), bp(&[], &[1, 1]));
        assert_eq!(mp(&[1, 1], &[0, 1]).to_bipartition(), bp(&[1, 1], &[]));
        assert_eq!(mp(&[2], &[1]).to_bipartition(), bp(&[1], &[1]));
        assert_eq!(mp(&[2], &[0]).to_bipartition(), bp(&[], &[2]));
    }

    #[test]
    fn inverse_map_examples() {
        assert_eq!(MarkedPartition::from_bipartition(&bp(&[], &[1, 1])).unwrap(), mp(&[1, 1], &[0, 0]));
        assert_eq!(MarkedPartition::from_bipartition(&bp(&[2], &[])).unwrap(), mp(&[2], &[2]));
        assert_eq!(MarkedPartition::from_bipartition(&bp(&[1], &[1])).unwrap(), mp(&[2], &[1]));
    }

    #[test]
    fn json_shapes() {
        let m = mp(&[2, 1], &[0, 0]);
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"lambda":[2,1],"a":[]}"#);
        let back: MarkedPartition = serde_json::from_str(r#"{"lambda":[2,1],"a":[]}"#).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<MarkedPartition>(r#"{"lambda":[1,1],"a":[1]}"#).is_err());
        let b = bp(&[1], &[]);
        assert_eq!(serde_json::to_string(&b).unwrap(), r#"{"mu":[1],"nu":[]}"#);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(p(&[2, 1]).standard_tableaux(), 2);
        assert_eq!(p(&[3, 2]).standard_tableaux(), 5);
        assert_eq!(Partition::empty().standard_tableaux(), 1);
        assert_eq!(bp(&[2, 1], &[1]).irrep_dim(), 8);
        assert_eq!(bp(&[1], &[1]).irrep_dim(), 2);
    }

    #[test]
    fn display() {
        assert_eq!(mp(&[2], &[1]).to_string(), "((2), (1))");
        assert_eq!(bp(&[], &[1, 1]).to_string(), "(∅, (1,1))");
    }
}
