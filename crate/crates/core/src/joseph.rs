//! Joseph polynomials from presentations of torus-stable subvarieties, and
//! the polynomials `D(μ, ν)` with the Weyl group modules they generate.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{LaurentChar, Monomial, MultiPoly, Ring, Q};
use crate::partitions::{BiPartition, MarkedPartition, Partition};
use crate::weyl::{all_elements, d_sequence, weight_set_n_plus, weight_set_v_plus, Weight, WeightSet};
use crate::{Error, Result};

/// Which weighted affine space a presentation lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ambient {
    /// `𝕍⁺`, with weights `Ψ(𝕍⁺)`.
    Exotic(usize),
    /// `𝔫`, with weights `R⁺`.
    Ordinary(usize),
    Weights(WeightSet),
}

impl Ambient {
    pub fn weights(&self) -> WeightSet {
        match self {
            Ambient::Exotic(n) => weight_set_v_plus(*n),
            Ambient::Ordinary(n) => weight_set_n_plus(*n),
            Ambient::Weights(w) => w.clone(),
        }
    }
}

/// A coordinate subspace of a weighted affine space, cut further by a
/// regular sequence of homogeneous equations of the given weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubvarietyPresentation {
    ambient: Ambient,
    span: WeightSet,
    equations: Vec<Weight>,
    rank: usize,
}

impl SubvarietyPresentation {
    pub fn new(ambient: Ambient, span: WeightSet, equations: Vec<Weight>) -> Result<Self> {
        let weights = ambient.weights();
        let rank = match &ambient {
            Ambient::Exotic(n) | Ambient::Ordinary(n) => *n,
            Ambient::Weights(w) => w.iter().chain(equations.iter()).map(Weight::rank).next().unwrap_or(0),
        };
        let bad = |m: String| Err(Error::InvalidPresentation(m));
        if weights.iter().chain(span.iter()).chain(equations.iter()).any(|w| w.rank() != rank) {
            return bad(format!("all weights must have rank {rank}"));
        }
        if !span.is_subset(&weights) {
            return bad(format!("span {} is not inside the ambient {}", span, weights));
        }
        if equations.len() > span.len() {
            return bad(format!("{} equations on a {}-dimensional span", equations.len(), span.len()));
        }
        if weights.difference(&span).iter().chain(equations.iter()).any(Weight::is_zero) {
            return Err(Error::ZeroWeight);
        }
        Ok(SubvarietyPresentation { ambient, span, equations, rank })
    }

    /// The coordinate subspace itself.
    pub fn subspace(ambient: Ambient, span: WeightSet) -> Result<Self> {
        Self::new(ambient, span, Vec::new())
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn span(&self) -> &WeightSet {
        &self.span
    }

    pub fn equations(&self) -> &[Weight] {
        &self.equations
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Weights of the factors `1 − e^{−λ}` of the K-polynomial: the
    /// coordinates cut to zero, then the equations.
    pub fn factor_weights(&self) -> Vec<Weight> {
        let mut out: Vec<Weight> = self.ambient.weights().difference(&self.span).iter().cloned().collect();
        out.extend(self.equations.iter().cloned());
        out
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum AmbientRepr {
    Named(String),
    Weights(Vec<Weight>),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationRepr {
    ambient: AmbientRepr,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    span: Vec<Weight>,
    #[serde(default)]
    eqs: Vec<Weight>,
}

impl Serialize for SubvarietyPresentation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (ambient, n) = match &self.ambient {
            Ambient::Exotic(n) => (AmbientRepr::Named("exotic".into()), Some(*n)),
            Ambient::Ordinary(n) => (AmbientRepr::Named("ordinary".into()), Some(*n)),
            Ambient::Weights(w) => (AmbientRepr::Weights(w.iter().cloned().collect()), None),
        };
        PresentationRepr { ambient, n, span: self.span.iter().cloned().collect(), eqs: self.equations.clone() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SubvarietyPresentation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = PresentationRepr::deserialize(d)?;
        let inferred = r.span.iter().chain(r.eqs.iter()).map(Weight::rank).next();
        let n = r.n.or(inferred);
        let ambient = match r.ambient {
            AmbientRepr::Named(name) => {
                let n = n.ok_or_else(|| D::Error::custom("rank \"n\" is needed for a named ambient"))?;
                match name.as_str() {
                    "exotic" => Ambient::Exotic(n),
                    "ordinary" => Ambient::Ordinary(n),
                    other => return Err(D::Error::custom(format!("unknown ambient {other:?}"))),
                }
            }
            AmbientRepr::Weights(w) => Ambient::Weights(w.into_iter().collect()),
        };
        SubvarietyPresentation::new(ambient, r.span.into_iter().collect(), r.eqs).map_err(D::Error::custom)
    }
}

/// `Π_{λ ∈ ambient ∖ span} (1 − e^{−λ}) · Π_{d ∈ equations} (1 − e^{−d})`.
pub fn k_polynomial(p: &SubvarietyPresentation) -> LaurentChar {
    p.factor_weights().iter().fold(LaurentChar::one(p.rank()), |acc, w| acc.mul(&LaurentChar::one_minus_exp_neg(&w.0)))
}

/// Lowest term of the K-polynomial. Each factor `1 − e^{−λ}` has lowest
/// term `λ` and lowest terms multiply, so this is the product of the factor
/// weights as linear forms; [`joseph_poly_by_expansion`] computes the same
/// value from the expanded character.
pub fn joseph_poly(p: &SubvarietyPresentation) -> MultiPoly {
    p.factor_weights().iter().fold(MultiPoly::one(p.rank()), |acc, w| Ring::mul(&acc, &w.linear_form()))
}

/// `lt(k_polynomial(p))`, expanding the whole character.
pub fn joseph_poly_by_expansion(p: &SubvarietyPresentation) -> Result<MultiPoly> {
    k_polynomial(p).lt()
}

/// `Π_{lo<k<l≤hi} (ε_k² − ε_l²)`, variables 1-based.
fn vandermonde_squares(n: usize, lo: usize, hi: usize) -> MultiPoly {
    let mut f = MultiPoly::one(n);
    for k in lo + 1..=hi {
        for l in k + 1..=hi {
            f = Ring::mul(&f, &Ring::sub(&MultiPoly::var(n, k - 1).pow(2), &MultiPoly::var(n, l - 1).pow(2)));
        }
    }
    f
}

/// `D(μ, ν) = Π_{i<μ_1} D⁰_i · Π_{μ_1 ≤ i < μ_1+ν_1} D⁺_i`, where
/// `D⁰_i = Π_{d_i<k<l≤d_{i+1}} (ε_k² − ε_l²)` and
/// `D⁺_i = D⁰_i · Π_{d_i<k≤d_{i+1}} ε_k`, over the d-sequence of the marked
/// partition corresponding to `(μ, ν)`.
pub fn d_poly(bp: &BiPartition) -> Result<MultiPoly> {
    let n = bp.weight() as usize;
    let d = d_sequence(&MarkedPartition::from_bipartition(bp)?);
    let m1 = bp.mu.part(1) as usize;
    let mut f = MultiPoly::one(n);
    for i in 0..d.len() - 1 {
        let (lo, hi) = (d[i] as usize, d[i + 1] as usize);
        f = Ring::mul(&f, &vandermonde_squares(n, lo, hi));
        if i >= m1 {
            for k in lo + 1..=hi {
                f = Ring::mul(&f, &MultiPoly::var(n, k - 1));
            }
        }
    }
    Ok(f)
}

/// `Π_{i>|μ|} ε_i · Π_i D⁰_i(μ) D⁺_i(μ, ν)` with blocks of size `μ_i` on
/// `1..|μ|` and blocks of size `ν_i` on `|μ|+1..n`.
pub fn d_poly_intro(mu: &Partition, nu: &Partition) -> MultiPoly {
    let m = mu.size() as usize;
    let n = m + nu.size() as usize;
    let mut f = MultiPoly::one(n);
    for i in m + 1..=n {
        f = Ring::mul(&f, &MultiPoly::var(n, i - 1));
    }
    for i in 1..=mu.len() {
        f = Ring::mul(&f, &vandermonde_squares(n, mu.sum_lt(i) as usize, mu.sum_le(i) as usize));
    }
    for i in 1..=nu.len() {
        f = Ring::mul(&f, &vandermonde_squares(n, m + nu.sum_lt(i) as usize, m + nu.sum_le(i) as usize));
    }
    f
}

/// Largest rank accepted by [`macdonald_span`]; the group has `2^n n!`
/// elements.
pub const MACDONALD_MAX_RANK: usize = 5;

/// Dimension and a reduced echelon basis of the span of the `W(C_n)`-orbit
/// of `seed`.
pub fn macdonald_span(seed: &MultiPoly, n: usize) -> Result<(usize, Vec<MultiPoly>)> {
    if n > MACDONALD_MAX_RANK {
        return Err(Error::TooLarge(format!("rank {n} exceeds {MACDONALD_MAX_RANK} for orbit spans")));
    }
    if seed.nvars() > n {
        return Err(Error::RankMismatch { expected: n, found: seed.nvars() });
    }
    let seed = seed.with_nvars(n);
    let images: Vec<MultiPoly> =
        all_elements(n).par_iter().map(|w| w.act_on_poly(&seed).expect("rank checked")).collect();
    let basis = echelon_span(&images);
    Ok((basis.len(), basis))
}

/// Reduced echelon basis of the span, each element monic in its graded-lex
/// leading term, ordered by descending leading monomial.
pub fn echelon_span(polys: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut pivots: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
    for f in polys {
        let mut f = f.clone();
        loop {
            let Some((lead, c)) = f.leading().map(|(m, c)| (m.clone(), c.clone())) else {
                break;
            };
            match pivots.get(&lead) {
                Some(b) => f = Ring::sub(&f, &b.scale(&c)),
                None => {
                    pivots.insert(lead, f.scale(&(Q::one() / c)));
                    break;
                }
            }
        }
    }
    let leads: Vec<Monomial> = pivots.keys().cloned().collect();
    for lead in &leads {
        let mut b = pivots[lead].clone();
        for other in &leads {
            if other == lead {
                continue;
            }
            let c = b.coeff(other);
            if !Ring::is_zero(&c) {
                b = Ring::sub(&b, &pivots[other].scale(&c));
            }
        }
        pivots.insert(lead.clone(), b);
    }
    pivots.into_values().rev().collect()
}

/// Dimension of the irreducible `W(C_n)`-module labelled by `bp`.
pub fn irrep_dim(bp: &BiPartition) -> u128 {
    bp.irrep_dim()
}

/// Behaviour under the sign changes `W_l ≅ (ℤ/2)^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WlStructure {
    /// A polynomial in `ε_1², .., ε_n²`.
    Invariant,
    /// `ε_1 ⋯ ε_n` times a polynomial in the squares.
    AntiInvariant,
    Neither,
}

pub fn wl_structure(f: &MultiPoly, n: usize) -> WlStructure {
    let f = f.with_nvars(n.max(f.nvars()));
    let exps = || f.terms().map(|(m, _)| m.0.iter().take(n));
    if exps().all(|mut e| e.all(|k| k % 2 == 0)) {
        WlStructure::Invariant
    } else if exps().all(|mut e| e.all(|k| k % 2 == 1)) {
        WlStructure::AntiInvariant
    } else {
        WlStructure::Neither
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn bp(mu: &[u32], nu: &[u32]) -> BiPartition {
        BiPartition::new(p(mu), p(nu))
    }

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    fn set(ws: &[&[i64]]) -> WeightSet {
        ws.iter().map(|x| w(x)).collect()
    }

    #[test]
    fn k_polynomial_examples() {
        let line = SubvarietyPresentation::subspace(Ambient::Weights(set(&[&[1]])), WeightSet::new()).unwrap();
        assert_eq!(k_polynomial(&line), LaurentChar::one_minus_exp_neg(&[1]));
        let dense = SubvarietyPresentation::subspace(Ambient::Exotic(2), weight_set_v_plus(2)).unwrap();
        assert_eq!(k_polynomial(&dense), LaurentChar::one(2));
        let quadric =
            SubvarietyPresentation::new(Ambient::Ordinary(2), set(&[&[2, 0], &[0, 2], &[1, 1]]), vec![w(&[2, 2])])
                .unwrap();
        let expected = LaurentChar::one_minus_exp_neg(&[1, -1]).mul(&LaurentChar::one_minus_exp_neg(&[2, 2]));
        assert_eq!(k_polynomial(&quadric), expected);
    }

    #[test]
    fn joseph_examples() {
        let lsign = SubvarietyPresentation::subspace(Ambient::Exotic(2), set(&[&[1, 1], &[1, -1]])).unwrap();
        assert_eq!(joseph_poly(&lsign).to_string(), "e1*e2");
        let sign = SubvarietyPresentation::subspace(Ambient::Ordinary(2), WeightSet::new()).unwrap();
        assert_eq!(joseph_poly(&sign).to_string(), "4*e1^3*e2 - 4*e1*e2^3");
        let ssign =
            SubvarietyPresentation::new(Ambient::Ordinary(2), set(&[&[2, 0], &[0, 2], &[1, 1]]), vec![w(&[2, 2])])
                .unwrap();
        assert_eq!(joseph_poly(&ssign).to_string(), "2*e1^2 - 2*e2^2");
        for pres in [&lsign, &sign, &ssign] {
            assert_eq!(joseph_poly_by_expansion(pres).unwrap(), joseph_poly(pres));
        }
    }

    #[test]
    fn presentation_validation() {
        let outside = SubvarietyPresentation::subspace(Ambient::Exotic(2), set(&[&[2, 0]]));
        assert!(matches!(outside, Err(Error::InvalidPresentation(_))));
        let too_many = SubvarietyPresentation::new(Ambient::Exotic(2), set(&[&[1, 0]]), vec![w(&[1, 0]), w(&[0, 1])]);
        assert!(matches!(too_many, Err(Error::InvalidPresentation(_))));
        let zero = SubvarietyPresentation::new(Ambient::Exotic(1), set(&[&[1]]), vec![w(&[0])]);
        assert_eq!(zero, Err(Error::ZeroWeight));
        let rank = SubvarietyPresentation::subspace(Ambient::Exotic(2), set(&[&[1]]));
        assert!(rank.is_err());
    }

    #[test]
    fn presentation_json() {
        let pres =
            SubvarietyPresentation::new(Ambient::Ordinary(2), set(&[&[2, 0], &[0, 2], &[1, 1]]), vec![w(&[2, 2])])
                .unwrap();
        let s = serde_json::to_string(&pres).unwrap();
        assert_eq!(s, r#"{"ambient":"ordinary","n":2,"span":[[0,2],[1,1],[2,0]],"eqs":[[2,2]]}"#);
        assert_eq!(serde_json::from_str::<SubvarietyPresentation>(&s).unwrap(), pres);
        let listed: SubvarietyPresentation =
            serde_json::from_str(r#"{"ambient":[[1,0],[0,1]],"span":[[1,0]],"eqs":[]}"#).unwrap();
        assert_eq!(joseph_poly(&listed).to_string(), "e2");
        assert!(serde_json::from_str::<SubvarietyPresentation>(r#"{"ambient":"exotic","span":[]}"#).is_err());
        assert!(serde_json::from_str::<SubvarietyPresentation>(r#"{"ambient":"other","n":1,"span":[]}"#).is_err());
    }

    #[test]
    fn d_poly_examples() {
        assert_eq!(d_poly(&bp(&[1, 1], &[])).unwrap().to_string(), "e1^2 - e2^2");
        assert_eq!(d_poly(&bp(&[], &[1, 1])).unwrap().to_string(), "e1^3*e2 - e1*e2^3");
        assert_eq!(d_poly(&bp(&[1], &[1])).unwrap().to_string(), "e2");
        assert_eq!(d_poly(&bp(&[2], &[])).unwrap().to_string(), "1");
        assert_eq!(d_poly(&bp(&[], &[])).unwrap().to_string(), "1");
    }

    #[test]
    fn d_poly_intro_examples() {
        assert_eq!(d_poly_intro(&p(&[2]), &p(&[])).to_string(), "e1^2 - e2^2");
        assert_eq!(d_poly_intro(&p(&[]), &p(&[2])).to_string(), "e1^3*e2 - e1*e2^3");
        assert_eq!(d_poly_intro(&p(&[]), &p(&[])).to_string(), "1");
    }

    #[test]
    fn orbit_span_examples() {
        assert_eq!(macdonald_span(&MultiPoly::var(2, 1), 2).unwrap().0, 2);
        let d = Ring::sub(&MultiPoly::var(2, 0).pow(2), &MultiPoly::var(2, 1).pow(2));
        assert_eq!(macdonald_span(&d, 2).unwrap().0, 1);
        assert_eq!(macdonald_span(&MultiPoly::one(0), 3).unwrap().0, 1);
        assert!(matches!(macdonald_span(&MultiPoly::one(0), 6), Err(Error::TooLarge(_))));
        let (_, basis) = macdonald_span(&MultiPoly::var(2, 1), 2).unwrap();
        assert_eq!(basis, vec![MultiPoly::var(2, 0), MultiPoly::var(2, 1)]);
    }

    #[test]
    fn wl_examples() {
        let e = |i| MultiPoly::var(2, i);
        let d = Ring::sub(&e(0).pow(2), &e(1).pow(2));
        assert_eq!(wl_structure(&d, 2), WlStructure::Invariant);
        assert_eq!(wl_structure(&Ring::mul(&Ring::mul(&e(0), &e(1)), &d), 2), WlStructure::AntiInvariant);
        assert_eq!(wl_structure(&e(1), 2), WlStructure::Neither);
    }
}
