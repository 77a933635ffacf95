//! The hyperoctahedral group `W(C_n)` acting on weights and polynomials,
//! and the weight sets attached to marked partitions.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::MultiPoly;
use crate::partitions::MarkedPartition;
use crate::{Error, Result};

/// Integer vector in the basis `ε_1..ε_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// `ε_i`, 1-based.
    pub fn eps(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "ε index {i} out of range for rank {n}");
        let mut v = vec![0; n];
        v[i - 1] = 1;
        Weight(v)
    }

    /// `ε_i + s·ε_j`, 1-based.
    pub fn pair(n: usize, i: usize, j: usize, s: i64) -> Self {
        let mut w = Self::eps(n, i);
        w.0[j - 1] += s;
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    /// The weight as a linear form in `e1..en`.
    pub fn linear_form(&self) -> MultiPoly {
        MultiPoly::linear(&self.0)
    }

    /// Parses comma-separated coordinates, e.g. `1,-1`.
    pub fn parse(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad weight coordinate {t:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.linear_form().to_string();
        f.write_str(&s)
    }
}

/// A finite set of weights, iterated in the derived total order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightSet(pub BTreeSet<Weight>);

impl WeightSet {
    pub fn new() -> Self {
        WeightSet(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.0.contains(w)
    }

    pub fn insert(&mut self, w: Weight) -> bool {
        self.0.insert(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Weight> {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &Self) -> Self {
        WeightSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        WeightSet(self.0.intersection(&other.0).cloned().collect())
    }

    /// `self ∖ other`.
    pub fn difference(&self, other: &Self) -> Self {
        WeightSet(self.0.difference(&other.0).cloned().collect())
    }

    pub fn filter(&self, keep: impl Fn(&Weight) -> bool) -> Self {
        WeightSet(self.0.iter().filter(|w| keep(w)).cloned().collect())
    }
}

impl FromIterator<Weight> for WeightSet {
    fn from_iter<I: IntoIterator<Item = Weight>>(iter: I) -> Self {
        WeightSet(iter.into_iter().collect())
    }
}

impl fmt::Display for WeightSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(Weight::to_string).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// Signed permutation `ε_i ↦ s_i · ε_{π(i)}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    image: Vec<(usize, i8)>,
}

impl SignedPermutation {
    /// Builds from 0-based `(π(i), s_i)` pairs.
    pub fn new(image: Vec<(usize, i8)>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &(j, s) in &image {
            if j >= n {
                return Err(Error::IndexOutOfRange { index: j + 1, rank: n });
            }
            if s != 1 && s != -1 {
                return Err(Error::Parse(format!("sign {s} is not ±1")));
            }
            if std::mem::replace(&mut seen[j], true) {
                return Err(Error::Parse(format!("target ε{} hit twice", j + 1)));
            }
        }
        Ok(SignedPermutation { image })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { image: (0..n).map(|i| (i, 1)).collect() }
    }

    /// The element `−1`.
    pub fn minus_one(n: usize) -> Self {
        SignedPermutation { image: (0..n).map(|i| (i, -1)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.image.len()
    }

    /// `(π(i), s_i)` for 1-based `i`, returned 1-based.
    pub fn image_of(&self, i: usize) -> (usize, i8) {
        let (j, s) = self.image[i - 1];
        (j + 1, s)
    }

    pub fn images(&self) -> &[(usize, i8)] {
        &self.image
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        SignedPermutation {
            image: other
                .image
                .iter()
                .map(|&(j, s)| {
                    let (k, t) = self.image[j];
                    (k, s * t)
                })
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![(0, 1); self.rank()];
        for (i, &(j, s)) in self.image.iter().enumerate() {
            image[j] = (i, s);
        }
        SignedPermutation { image }
    }

    pub fn act(&self, w: &Weight) -> Weight {
        assert_eq!(w.rank(), self.rank(), "rank mismatch");
        let mut out = vec![0; self.rank()];
        for (i, &(j, s)) in self.image.iter().enumerate() {
            out[j] += s as i64 * w.0[i];
        }
        Weight(out)
    }

    /// Substitution `ε_i ↦ s_i ε_{π(i)}` on a polynomial in at most `n`
    /// variables.
    pub fn act_on_poly(&self, f: &MultiPoly) -> Result<MultiPoly> {
        if f.nvars() > self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: f.nvars() });
        }
        let img: Vec<(usize, i64)> = self.image.iter().map(|&(j, s)| (j, s as i64)).collect();
        Ok(f.with_nvars(self.rank()).substitute_signed(&img))
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let n = self.rank();
        let positive = weight_set_n_plus(n);
        positive.iter().filter(|r| !positive.contains(&self.act(r))).count()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .image
            .iter()
            .enumerate()
            .map(|(i, &(j, s))| format!("e{}->{}e{}", i + 1, if s < 0 { "-" } else { "" }, j + 1))
            .collect();
        write!(f, "[{}]", items.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PermRepr {
    image: Vec<(usize, i8)>,
}

impl Serialize for SignedPermutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PermRepr { image: self.image.iter().map(|&(j, s)| (j + 1, s)).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedPermutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PermRepr::deserialize(d)?;
        let image = r
            .image
            .into_iter()
            .map(|(j, s)| if j == 0 { Err(serde::de::Error::custom("targets are 1-based")) } else { Ok((j - 1, s)) })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        SignedPermutation::new(image).map_err(serde::de::Error::custom)
    }
}

/// `s_i` for `i < n` swaps `ε_i` and `ε_{i+1}`; `s_n` negates `ε_n`.
pub fn simple_reflection(i: usize, n: usize) -> Result<SignedPermutation> {
    if !(1..=n).contains(&i) {
        return Err(Error::IndexOutOfRange { index: i, rank: n });
    }
    let mut w = SignedPermutation::identity(n);
    if i < n {
        w.image.swap(i - 1, i);
    } else {
        w.image[n - 1].1 = -1;
    }
    Ok(w)
}

/// Every element of `W(C_n)` with its word length in the simple
/// reflections, found by breadth-first search.
pub fn all_elements_with_word_length(n: usize) -> Vec<(SignedPermutation, usize)> {
    let gens: Vec<_> = (1..=n).map(|i| simple_reflection(i, n).expect("in range")).collect();
    let mut dist: HashMap<SignedPermutation, usize> = HashMap::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    let id = SignedPermutation::identity(n);
    dist.insert(id.clone(), 0);
    queue.push_back(id);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        order.push((w.clone(), d));
        for g in &gens {
            let next = w.compose(g);
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    order
}

/// Every element of `W(C_n)`, in a fixed order.
pub fn all_elements(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        for mask in 0..(1u32 << n) {
            let image = p.iter().enumerate().map(|(i, &j)| (j, if mask >> i & 1 == 1 { -1 } else { 1 })).collect();
            out.push(SignedPermutation { image });
        }
    });
    out
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// `Ψ(𝕍⁺) = {ε_i} ∪ {ε_i ± ε_j : i < j}`.
pub fn weight_set_v_plus(n: usize) -> WeightSet {
    let mut s: WeightSet = (1..=n).map(|i| Weight::eps(n, i)).collect();
    for i in 1..=n {
        for j in i + 1..=n {
            s.insert(Weight::pair(n, i, j, 1));
            s.insert(Weight::pair(n, i, j, -1));
        }
    }
    s
}

/// Positive roots `R⁺ = {ε_i ± ε_j : i < j} ∪ {2ε_i}`.
pub fn weight_set_n_plus(n: usize) -> WeightSet {
    let mut s: WeightSet = (1..=n).map(|i| Weight::pair(n, i, i, 1)).collect();
    for i in 1..=n {
        for j in i + 1..=n {
            s.insert(Weight::pair(n, i, j, 1));
            s.insert(Weight::pair(n, i, j, -1));
        }
    }
    s
}

/// The element `w_λ` attached to a marked partition, from the three-case
/// rule driven by the transposes of `μ` and `ν`.
pub fn special_element(mp: &MarkedPartition) -> Result<SignedPermutation> {
    let n = mp.rank();
    let bp = mp.to_bipartition();
    let (tm, tn) = (bp.mu.transpose(), bp.nu.transpose());
    let (mu_size, nu_size) = (bp.mu.size() as i64, bp.nu.size() as i64);
    let mut image = Vec::with_capacity(n);
    for i in 1..=n as i64 {
        let mut hits: Vec<(i64, i8)> = Vec::new();
        for m in 1..=tm.len() {
            let (ge, gt, lt) = (tm.sum_ge(m) as i64, tm.sum_gt(m) as i64, tm.sum_lt(m) as i64);
            if i == ge {
                hits.push((n as i64 - m as i64 + 1, 1));
            }
            if gt < i && i < ge {
                hits.push((nu_size + lt + i - gt - m as i64 + 1, -1));
            }
        }
        for m in 1..=tn.len() {
            let (lt, le, gt) = (tn.sum_lt(m) as i64, tn.sum_le(m) as i64, tn.sum_gt(m) as i64);
            if mu_size + lt < i && i <= mu_size + le {
                hits.push((gt + i - lt - mu_size, -1));
            }
        }
        match hits.as_slice() {
            [(j, s)] if (1..=n as i64).contains(j) => image.push((*j as usize - 1, *s)),
            _ => return Err(Error::CaseAnalysis { index: i as usize, detail: format!("{mp}: matches {hits:?}") }),
        }
    }
    SignedPermutation::new(image).map_err(|e| Error::CaseAnalysis { index: 0, detail: format!("{mp}: {e}") })
}

/// `d_0 = 0`, `d_k = ᵗμ^≥_{μ_1−k+1}` for `1 ≤ k ≤ μ_1`, and
/// `d_{μ_1+k} = |μ| + ᵗν^≤_k` for `1 ≤ k ≤ ν_1`.
pub fn d_sequence(mp: &MarkedPartition) -> Vec<u32> {
    let bp = mp.to_bipartition();
    let (tm, tn) = (bp.mu.transpose(), bp.nu.transpose());
    let m1 = bp.mu.part(1) as usize;
    let n1 = bp.nu.part(1) as usize;
    let mut d = vec![0];
    d.extend((1..=m1).map(|k| tm.sum_ge(m1 - k + 1)));
    d.extend((1..=n1).map(|k| bp.mu.size() + tn.sum_le(k)));
    d
}

/// `{x ∈ Ψ(𝕍⁺) : w_λ·x ∈ Ψ(𝕍⁺)}`.
pub fn weight_set_v_lambda(mp: &MarkedPartition) -> Result<WeightSet> {
    let w = special_element(mp)?;
    let ambient = weight_set_v_plus(mp.rank());
    Ok(ambient.filter(|x| ambient.contains(&w.act(x))))
}

/// Closed-form membership test for `Ψ(𝕍^λ)`.
pub fn wdlambda_predicate(mp: &MarkedPartition, weight: &Weight) -> Result<bool> {
    let n = mp.rank();
    if weight.rank() != n || !weight_set_v_plus(n).contains(weight) {
        return Err(Error::WeightOutsideAmbient(weight.to_string()));
    }
    let bp = mp.to_bipartition();
    let (tm, tn) = (bp.mu.transpose(), bp.nu.transpose());
    let mu_size = bp.mu.size() as usize;
    let corners: BTreeSet<usize> = (1..=tm.len()).map(|m| tm.sum_ge(m) as usize).filter(|&g| g > 0).collect();
    let support: Vec<(usize, i64)> =
        weight.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (k + 1, c)).collect();
    match support.as_slice() {
        [(i, _)] => Ok(corners.contains(i)),
        [(i, 1), (j, 1)] => Ok(i != j && corners.contains(i) && corners.contains(j)),
        [(i, 1), (j, -1)] => {
            let (i, j) = (*i, *j);
            let mut excluded = i >= j;
            for m in 1..=tm.len() {
                let (gt, ge) = (tm.sum_gt(m) as usize, tm.sum_ge(m) as usize);
                if gt < i && i < ge && gt < j && j < ge {
                    excluded = true;
                }
                let later = |x: usize| (m + 1..=tm.len()).any(|l| tm.sum_ge(l) as usize == x);
                if j == ge && (1..=mu_size).contains(&i) && !later(i) {
                    excluded = true;
                }
            }
            for m in 1..=tn.len() {
                let lo = mu_size + tn.sum_lt(m) as usize;
                let hi = mu_size + tn.sum_le(m) as usize;
                if lo < i && i <= hi && lo < j && j <= hi {
                    excluded = true;
                }
            }
            Ok(!excluded)
        }
        _ => unreachable!("every weight of Ψ(𝕍⁺) has the shapes above"),
    }
}

/// The pair `(ε-part, (ε_i − ε_j)-part)` of the weight set of `𝕍^λ_{01}`:
/// `ε_i` for `i ≤ d_{μ_1}`, and `ε_i − ε_j` for `i` and `j` in blocks
/// `l < m` of the d-sequence.
pub fn weight_set_v01(mp: &MarkedPartition) -> (WeightSet, WeightSet) {
    let n = mp.rank();
    let d = d_sequence(mp);
    let mu = mp.to_bipartition().mu;
    let m1 = mu.part(1) as usize;
    assert_eq!(d[m1], mu.size(), "d_(μ_1) must equal |μ| for {mp}");
    let ones: WeightSet = (1..=d[m1] as usize).map(|i| Weight::eps(n, i)).collect();
    let mut zeros = WeightSet::new();
    let blocks = d.len() - 1;
    for l in 0..blocks {
        for m in l + 1..blocks {
            for i in d[l] as usize + 1..=d[l + 1] as usize {
                for j in d[m] as usize + 1..=d[m + 1] as usize {
                    zeros.insert(Weight::pair(n, i, j, -1));
                }
            }
        }
    }
    (ones, zeros)
}

/// Generators of `W_l ≅ (ℤ/2)^n`: `s_i s_{i+1} ⋯ s_n ⋯ s_{i+1} s_i`.
pub fn wl_generators(n: usize) -> Vec<SignedPermutation> {
    (1..=n)
        .map(|i| {
            let mut word: Vec<usize> = (i..=n).collect();
            word.extend((i..n).rev());
            word.iter().fold(SignedPermutation::identity(n), |acc, &k| {
                acc.compose(&simple_reflection(k, n).expect("in range"))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_marked_partitions, Partition};

    fn mp(l: &[u32], a: &[u32]) -> MarkedPartition {
        MarkedPartition::new(Partition::new(l.to_vec()).unwrap(), a.to_vec()).unwrap()
    }

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn simple_reflections() {
        let s1 = simple_reflection(1, 2).unwrap();
        let s2 = simple_reflection(2, 2).unwrap();
        assert_eq!(s1.act(&w(&[1, 0])), w(&[0, 1]));
        assert_eq!(s2.act(&w(&[0, 1])), w(&[0, -1]));
        assert_eq!(s1.compose(&s1), SignedPermutation::identity(2));
        assert!(simple_reflection(3, 2).is_err());
        assert!(simple_reflection(0, 2).is_err());
    }

    #[test]
    fn lengths_in_rank_two() {
        assert_eq!(SignedPermutation::identity(2).length(), 0);
        assert_eq!(simple_reflection(2, 2).unwrap().length(), 1);
        assert_eq!(SignedPermutation::minus_one(2).length(), 4);
        assert_eq!(all_elements(2).len(), 8);
    }

    #[test]
    fn group_laws() {
        let els = all_elements(3);
        for a in els.iter().step_by(5) {
            assert_eq!(a.compose(&a.inverse()), SignedPermutation::identity(3));
            for b in els.iter().step_by(7) {
                let x = w(&[3, -1, 2]);
                assert_eq!(a.compose(b).act(&x), a.act(&b.act(&x)));
            }
        }
    }

    #[test]
    fn polynomial_action() {
        let s1 = simple_reflection(1, 2).unwrap();
        let s2 = simple_reflection(2, 2).unwrap();
        let e = |i| MultiPoly::var(2, i);
        assert_eq!(s2.act_on_poly(&e(1)).unwrap(), crate::algebra::Ring::neg(&e(1)));
        let d = crate::algebra::Ring::sub(&e(0).pow(2), &e(1).pow(2));
        assert_eq!(s1.act_on_poly(&d).unwrap(), crate::algebra::Ring::neg(&d));
        let prod = crate::algebra::Ring::mul(&e(0), &e(1));
        for g in all_elements(2) {
            let img = g.act_on_poly(&prod).unwrap();
            assert!(img == prod || img == crate::algebra::Ring::neg(&prod));
        }
        assert!(s1.act_on_poly(&MultiPoly::var(3, 2)).is_err());
    }

    #[test]
    fn ambient_weight_sets() {
        assert_eq!(weight_set_v_plus(1), [w(&[1])].into_iter().collect());
        assert_eq!(weight_set_v_plus(2), [w(&[1, 0]), w(&[0, 1]), w(&[1, 1]), w(&[1, -1])].into_iter().collect());
        assert_eq!(weight_set_v_plus(3).len(), 9);
        assert_eq!(weight_set_n_plus(1), [w(&[2])].into_iter().collect());
        assert_eq!(weight_set_n_plus(2), [w(&[1, -1]), w(&[1, 1]), w(&[2, 0]), w(&[0, 2])].into_iter().collect());
        assert_eq!(weight_set_n_plus(3).len(), 9);
    }

    #[test]
    fn special_elements_in_rank_two() {
        let reg = special_element(&mp(&[2], &[1])).unwrap();
        assert_eq!(reg.image_of(1), (2, 1));
        assert_eq!(reg.image_of(2), (1, -1));
        assert_eq!(special_element(&mp(&[2], &[2])).unwrap(), SignedPermutation::identity(2));
        assert_eq!(special_element(&mp(&[1, 1], &[0, 0])).unwrap(), SignedPermutation::minus_one(2));
    }

    #[test]
    fn d_sequences() {
        assert_eq!(d_sequence(&mp(&[1, 1], &[0, 0])), vec![0, 2]);
        assert_eq!(d_sequence(&mp(&[2], &[1])), vec![0, 1, 2]);
        assert_eq!(d_sequence(&mp(&[2], &[2])), vec![0, 1, 2]);
        assert_eq!(d_sequence(&mp(&[], &[])), vec![0]);
    }

    #[test]
    fn v_lambda_examples() {
        let reg = mp(&[2], &[1]);
        assert_eq!(weight_set_v_lambda(&reg).unwrap(), [w(&[1, 0]), w(&[1, -1])].into_iter().collect());
        assert!(wdlambda_predicate(&reg, &w(&[1, -1])).unwrap());
        assert!(!wdlambda_predicate(&reg, &w(&[0, 1])).unwrap());
        assert!(!wdlambda_predicate(&reg, &w(&[1, 1])).unwrap());
        assert!(wdlambda_predicate(&reg, &w(&[2, 0])).is_err());
        let triv = weight_set_v_lambda(&mp(&[2], &[2])).unwrap();
        assert!(triv.contains(&w(&[1, 0])) && triv.contains(&w(&[0, 1])));
        let sign = weight_set_v_lambda(&mp(&[1, 1], &[0, 0])).unwrap();
        assert!(sign.iter().all(|x| x.0.iter().filter(|&&c| c != 0).count() == 2));
    }

    #[test]
    fn v01_examples() {
        let (a, b) = weight_set_v01(&mp(&[2], &[1]));
        assert_eq!((a, b), ([w(&[1, 0])].into_iter().collect(), [w(&[1, -1])].into_iter().collect()));
        let (a, b) = weight_set_v01(&mp(&[1, 1], &[0, 0]));
        assert!(a.is_empty() && b.is_empty());
        let (a, b) = weight_set_v01(&mp(&[2], &[2]));
        assert_eq!(a, [w(&[1, 0]), w(&[0, 1])].into_iter().collect());
        assert_eq!(b, [w(&[1, -1])].into_iter().collect());
    }

    #[test]
    fn wl_generators_are_sign_flips() {
        assert_eq!(wl_generators(1), vec![SignedPermutation::minus_one(1)]);
        for n in 1..=4 {
            let gens = wl_generators(n);
            for (i, g) in gens.iter().enumerate() {
                for k in 0..n {
                    assert_eq!(g.images()[k], (k, if k == i { -1 } else { 1 }));
                }
            }
        }
    }

    #[test]
    fn special_element_is_total_up_to_six() {
        for n in 0..=6 {
            for m in enumerate_marked_partitions(n) {
                special_element(&m).unwrap();
            }
        }
    }

    #[test]
    fn json_shapes() {
        let reg = special_element(&mp(&[2], &[1])).unwrap();
        let s = serde_json::to_string(&reg).unwrap();
        assert_eq!(s, r#"{"image":[[2,1],[1,-1]]}"#);
        assert_eq!(serde_json::from_str::<SignedPermutation>(&s).unwrap(), reg);
        assert!(serde_json::from_str::<SignedPermutation>(r#"{"image":[[1,1],[1,1]]}"#).is_err());
        assert_eq!(serde_json::to_string(&w(&[1, -1])).unwrap(), "[1,-1]");
    }
}
