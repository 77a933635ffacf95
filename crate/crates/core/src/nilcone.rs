//! The exotic nilpotent cone inside `𝕍 = V₁ ⊕ Λ²V₁` for `Sp(2n)`.
//!
//! `V₁` has basis `e_1..e_{2n}`; `e_k` has weight `ε_k` for `k ≤ n` and
//! `−ε_{k−n}` otherwise. A point of `Λ²V₁` is stored as an alternating
//! `2n × 2n` matrix whose upper entry `(i, j)` carries weight `ε̂_i + ε̂_j`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{
    format_q, jordan_type, parse_q, pfaffian, symbolic_alternating, Matrix, Monomial, MultiPoly, Ring, Q,
};
use crate::partitions::{enumerate_markings, MarkedPartition, Partition};
use crate::weyl::{d_sequence, Weight};
use crate::{Error, Result};

/// The form `J = [[0, −1_n], [1_n, 0]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymplecticForm {
    n: usize,
}

impl SymplecticForm {
    pub fn new(n: usize) -> Self {
        SymplecticForm { n }
    }

    pub fn matrix<T: Ring>(&self) -> Matrix<T> {
        let n = self.n;
        Matrix::from_fn(2 * n, 2 * n, |i, j| {
            if i < n && j == i + n {
                T::one().neg()
            } else if i >= n && j + n == i {
                T::one()
            } else {
                T::zero()
            }
        })
    }

    /// `Pf(J)`, which is `±1`.
    pub fn pfaffian(&self) -> i64 {
        let pf = pfaffian(&self.matrix::<Q>()).expect("J is alternating");
        if pf == Q::one() {
            1
        } else {
            -1
        }
    }
}

/// The upper-triangle coordinates `(i, j)`, `i < j`, of `Λ²V₁`, numbered row
/// by row; this is the variable order of [`defining_polys`].
pub fn alt_coordinates(n: usize) -> Vec<(usize, usize)> {
    let size = 2 * n;
    (0..size).flat_map(|i| (i + 1..size).map(move |j| (i, j))).collect()
}

fn hat(n: usize, k: usize) -> Weight {
    if k < n {
        Weight::eps(n, k + 1)
    } else {
        Weight::eps(n, k - n + 1).neg()
    }
}

/// Weight of the basis vector `e_k` of `V₁` (0-based).
pub fn v1_weight(n: usize, k: usize) -> Weight {
    hat(n, k)
}

/// Weight of the upper entry `(i, j)` of `Λ²V₁` (0-based).
pub fn v2_weight(n: usize, i: usize, j: usize) -> Weight {
    hat(n, i).add(&hat(n, j))
}

/// `P_1..P_n`: the coefficients of `t^{n−i}` in `Pf(tJ − X) / Pf(J)`, as
/// polynomials in the coordinates listed by [`alt_coordinates`].
pub fn defining_polys(n: usize) -> Vec<MultiPoly> {
    let size = 2 * n;
    let nv = size * size.saturating_sub(1) / 2;
    let x = symbolic_alternating(size);
    let t = MultiPoly::var(nv + 1, nv);
    let j = SymplecticForm::new(n).matrix::<Q>();
    let m = Matrix::from_fn(size, size, |a, b| Ring::sub(&t.scale(&j[(a, b)]), &x[(a, b)]));
    let pf = pfaffian(&m).expect("alternating by construction");
    let c0 = Q::from_integer(SymplecticForm::new(n).pfaffian().into());
    (1..=n).map(|i| pf.coefficient_of(nv, (n - i) as u32).scale(&c0.recip())).collect()
}

/// A point `(X₁, X₂)` of `𝕍` with rational coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ExoticVector {
    n: usize,
    x1: Vec<Q>,
    x2: Matrix<Q>,
}

impl ExoticVector {
    pub fn new(x1: Vec<Q>, x2: Matrix<Q>) -> Result<Self> {
        if x1.len() % 2 == 1 || x2.rows() != x1.len() || x2.cols() != x1.len() {
            return Err(Error::DimensionMismatch(format!(
                "x1 has length {} but x2 is {}x{}",
                x1.len(),
                x2.rows(),
                x2.cols()
            )));
        }
        if !x2.is_alternating() {
            return Err(Error::NotAlternating);
        }
        Ok(ExoticVector { n: x1.len() / 2, x1, x2 })
    }

    pub fn zero(n: usize) -> Self {
        ExoticVector { n, x1: vec![Q::zero(); 2 * n], x2: Matrix::zeros(2 * n, 2 * n) }
    }

    /// Sum of weight vectors `𝐯[λ]` with coefficient 1: each weight in
    /// `x1_weights` selects a basis vector of `V₁`, each in `x2_weights` an
    /// entry of `Λ²V₁`. The zero weight is rejected as ambiguous.
    pub fn from_weights(n: usize, x1_weights: &[Weight], x2_weights: &[Weight]) -> Result<Self> {
        let mut v = Self::zero(n);
        for w in x1_weights {
            let k = (0..2 * n)
                .find(|&k| v1_weight(n, k) == *w)
                .ok_or_else(|| Error::WeightOutsideAmbient(w.to_string()))?;
            v.x1[k] += Q::one();
        }
        for w in x2_weights {
            if w.is_zero() {
                return Err(Error::WeightOutsideAmbient(w.to_string()));
            }
            let (i, j) = alt_coordinates(n)
                .into_iter()
                .find(|&(i, j)| v2_weight(n, i, j) == *w)
                .ok_or_else(|| Error::WeightOutsideAmbient(w.to_string()))?;
            v.x2[(i, j)] += Q::one();
            v.x2[(j, i)] -= Q::one();
        }
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x1(&self) -> &[Q] {
        &self.x1
    }

    pub fn x2(&self) -> &Matrix<Q> {
        &self.x2
    }

    /// `(g·X₁, g·X₂·gᵀ)`.
    pub fn transform(&self, g: &Matrix<Q>) -> Self {
        ExoticVector { n: self.n, x1: g.mul_vec(&self.x1), x2: g.mul(&self.x2).mul(&g.transpose()) }
    }
}

impl fmt::Display for ExoticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x1: Vec<String> = self.x1.iter().map(format_q).collect();
        let x2: Vec<String> = alt_coordinates(self.n)
            .into_iter()
            .filter(|&(i, j)| !self.x2[(i, j)].is_zero())
            .map(|(i, j)| format!("({},{}): {}", i + 1, j + 1, format_q(&self.x2[(i, j)])))
            .collect();
        write!(f, "x1 = ({}), x2 = {{{}}}", x1.join(", "), x2.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VectorRepr {
    n: usize,
    x1: Vec<String>,
    x2_upper: Vec<(usize, usize, String)>,
}

impl Serialize for ExoticVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VectorRepr {
            n: self.n,
            x1: self.x1.iter().map(format_q).collect(),
            x2_upper: alt_coordinates(self.n)
                .into_iter()
                .filter(|&(i, j)| !self.x2[(i, j)].is_zero())
                .map(|(i, j)| (i + 1, j + 1, format_q(&self.x2[(i, j)])))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExoticVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = VectorRepr::deserialize(d)?;
        let size = 2 * r.n;
        if r.x1.len() != size {
            return Err(D::Error::custom(format!("x1 must have {size} entries")));
        }
        let x1 = r.x1.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>>>().map_err(D::Error::custom)?;
        let mut x2 = Matrix::zeros(size, size);
        for (i, j, c) in r.x2_upper {
            if !(1 <= i && i < j && j <= size) {
                return Err(D::Error::custom(format!("entry ({i},{j}) is not a 1-based upper entry")));
            }
            let c = parse_q(&c).map_err(D::Error::custom)?;
            x2[(i - 1, j - 1)] = c.clone();
            x2[(j - 1, i - 1)] = c.neg();
        }
        ExoticVector::new(x1, x2).map_err(D::Error::custom)
    }
}

/// `[P_0, P_1, .., P_n]` evaluated at `x2`, with `P_0 = 1`.
pub fn characteristic_coeffs(x2: &Matrix<Q>) -> Result<Vec<Q>> {
    if !x2.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let size = x2.rows();
    if size % 2 == 1 {
        return Err(Error::DimensionMismatch(format!("odd size {size}")));
    }
    let n = size / 2;
    let t = MultiPoly::var(1, 0);
    let j = SymplecticForm::new(n).matrix::<Q>();
    let m = Matrix::from_fn(size, size, |a, b| {
        Ring::sub(&t.scale(&j[(a, b)]), &MultiPoly::constant(1, x2[(a, b)].clone()))
    });
    let pf = pfaffian(&m)?;
    let c0 = Q::from_integer(SymplecticForm::new(n).pfaffian().into());
    Ok((0..=n).map(|i| pf.coeff(&Monomial(vec![(n - i) as u32])) / &c0).collect())
}

/// Whether all of `P_1..P_n` vanish at the `Λ²V₁` component.
pub fn is_in_nilcone(v: &ExoticVector) -> bool {
    characteristic_coeffs(&v.x2).expect("validated on construction").iter().skip(1).all(Ring::is_zero)
}

/// `M = X₂·J`, the endomorphism of `V₁` attached to `X₂`.
pub fn endomorphism_of(v: &ExoticVector) -> Matrix<Q> {
    v.x2.mul(&SymplecticForm::new(v.n).matrix())
}

/// Halves a Jordan type `(λ_1, λ_1, λ_2, λ_2, ..)`.
fn halve(t: &Partition) -> Result<Partition> {
    let parts = t.parts();
    if parts.len() % 2 == 1 || parts.chunks(2).any(|c| c[0] != c[1]) {
        return Err(Error::OddMultiplicities(t.to_string()));
    }
    Partition::new(parts.iter().step_by(2).copied().collect())
}

/// `λ` with `X₂·J` of Jordan type `(λ_1, λ_1, λ_2, λ_2, ..)`.
pub fn exotic_jordan(v: &ExoticVector) -> Result<Partition> {
    halve(&jordan_type(&endomorphism_of(v))?)
}

/// The marked partition of the orbit through `v`.
///
/// For each marking `a` of `λ = exotic_jordan(v)` the witness conditions are
/// `M^{λ_j} ξ(j) = 0`, `x1 = Σ_j M^{λ_j − a_j} ξ(j)` (over `j` with
/// `a_j ≠ 0`), and `M^{λ_j − 1} ξ(j) ∉ im M^{λ_j}`. The closed conditions
/// cut out an affine space; the open ones hold somewhere on it unless one
/// of them fails on all of it.
pub fn k_invariant(v: &ExoticVector) -> Result<MarkedPartition> {
    if !is_in_nilcone(v) {
        return Err(Error::NotInNilcone);
    }
    let m = endomorphism_of(v);
    let lambda = exotic_jordan(v)?;
    let top = lambda.part(1);
    let powers: Vec<Matrix<Q>> =
        std::iter::successors(Some(Matrix::identity(m.rows())), |p| Some(p.mul(&m))).take(top as usize + 1).collect();
    let passing: Vec<MarkedPartition> =
        enumerate_markings(&lambda).into_iter().filter(|mp| has_witnesses(&powers, &v.x1, mp)).collect();
    match passing.len() {
        0 => Err(Error::NoCandidate(lambda.to_string())),
        1 => Ok(passing.into_iter().next().expect("one element")),
        _ => Err(Error::MultipleCandidates(passing.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))),
    }
}

fn has_witnesses(powers: &[Matrix<Q>], x1: &[Q], mp: &MarkedPartition) -> bool {
    let size = x1.len();
    let lam = mp.lambda().parts();
    let a = mp.marks();
    let marked: Vec<usize> = (0..lam.len()).filter(|&j| a[j] != 0).collect();
    if marked.is_empty() {
        return x1.iter().all(Ring::is_zero);
    }
    let unknowns = size * marked.len();
    let mut sys = Matrix::zeros(size * (marked.len() + 1), unknowns);
    let last = size * marked.len();
    for (t, &j) in marked.iter().enumerate() {
        let kill = &powers[lam[j] as usize];
        let lift = &powers[(lam[j] - a[j]) as usize];
        for r in 0..size {
            for c in 0..size {
                sys[(t * size + r, t * size + c)] = kill[(r, c)].clone();
                sys[(last + r, t * size + c)] = lift[(r, c)].clone();
            }
        }
    }
    let mut rhs = vec![Q::zero(); last];
    rhs.extend_from_slice(x1);
    let Some((particular, kernel)) = sys.solve_affine(&rhs) else {
        return false;
    };
    marked.iter().enumerate().all(|(t, &j)| {
        let annihilator = powers[lam[j] as usize].left_nullspace();
        if annihilator.is_empty() {
            return false;
        }
        let test = Matrix::from_rows(annihilator).mul(&powers[lam[j] as usize - 1]);
        let moves = |v: &[Q]| test.mul_vec(&v[t * size..(t + 1) * size]).iter().any(|x| !x.is_zero());
        moves(&particular) || kernel.iter().any(|k| moves(k))
    })
}

/// A point of the orbit of `mp`: `X₂` has Jordan blocks of sizes `λ_i` on
/// consecutive positive indices, so `M e_{k+1} = e_k` inside each block,
/// and `X₁ = Σ_{a_i ≠ 0} e_{s_i + a_i}` where block `i` starts after `s_i`.
pub fn representative(mp: &MarkedPartition) -> ExoticVector {
    let n = mp.rank();
    let mut v = ExoticVector::zero(n);
    let mut start = 0;
    for (i, &len) in mp.lambda().parts().iter().enumerate() {
        let len = len as usize;
        for k in start..start + len - 1 {
            v.x2[(k, n + k + 1)] = Q::one();
            v.x2[(n + k + 1, k)] = -Q::one();
        }
        let a = mp.marks()[i] as usize;
        if a != 0 {
            v.x1[start + a - 1] += Q::one();
        }
        start += len;
    }
    v
}

/// `4 Σ_{i<j} (d_i − d_{i−1})(d_j − d_{j−1}) + 2|μ|`, with the d-sequence of
/// the unmarked `(λ, 0)`.
pub fn orbit_dim(mp: &MarkedPartition) -> u64 {
    let d = d_sequence(&MarkedPartition::unmarked(mp.lambda().clone()));
    let gaps: Vec<u64> = d.windows(2).map(|w| (w[1] - w[0]) as u64).collect();
    let mut cross = 0;
    for i in 0..gaps.len() {
        for j in i + 1..gaps.len() {
            cross += gaps[i] * gaps[j];
        }
    }
    4 * cross + 2 * mp.to_bipartition().mu.size() as u64
}

/// `dim 𝔑 = dim 𝕍 − n = 2n²`.
pub fn nilcone_dim(n: usize) -> u64 {
    2 * (n as u64) * (n as u64)
}
