use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ring::{format_q, parse_q, Ring, Q};
use crate::Error;

/// Exponent vector. Ordered by graded lexicographic order with
/// `e1 > e2 > ... > en`; vectors of different length compare as if
/// zero-padded.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn get(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    fn padded(&self, nvars: usize) -> Self {
        let mut e = self.0.clone();
        e.resize(nvars, 0);
        Monomial(e)
    }

    fn mul(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        Monomial((0..len).map(|i| self.get(i) + other.get(i)).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let len = self.0.len().max(other.0.len());
            (0..len).map(|i| self.get(i).cmp(&other.get(i))).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `nvars` commuting variables with rational coefficients.
///
/// Binary operations accept operands with different `nvars` and work in the
/// larger ring; equality ignores that difference.
#[derive(Debug, Clone)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        if !Zero::is_zero(&c) {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, <Q as One>::one())
    }

    /// The variable with 0-based index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::from_terms(nvars, [(Monomial(e), <Q as One>::one())])
    }

    /// The linear form `Σ c_i e_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                let mut e = vec![0; n];
                e[i] = 1;
                p.terms.insert(Monomial(e), Q::from_integer(c.into()));
            }
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert!(m.0.len() <= nvars, "monomial has more variables than the ring");
            p.add_term(m.padded(nvars), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if Zero::is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if Zero::is_zero(v) {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The same polynomial viewed in a ring with at least `nvars` variables.
    pub fn with_nvars(&self, nvars: usize) -> Self {
        if nvars == self.nvars {
            return self.clone();
        }
        assert!(nvars >= self.nvars, "cannot drop variables by padding");
        MultiPoly { nvars, terms: self.terms.iter().map(|(m, c)| (m.padded(nvars), c.clone())).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(&m.padded(self.nvars)).cloned().unwrap_or_else(<Q as Zero>::zero)
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, degree: u32) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if Zero::is_zero(c) {
            return Self::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = Ring::mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = Ring::mul(&base, &base);
            }
        }
        acc
    }

    /// Substitutes `e_i ↦ s_i · e_{π(i)}` for the pairs `(π(i), s_i)`, 0-based.
    pub fn substitute_signed(&self, image: &[(usize, i64)]) -> Self {
        assert!(image.len() >= self.nvars, "substitution misses variables");
        let nvars = self.nvars.max(image.len());
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            let mut negative = false;
            for (i, &k) in m.0.iter().enumerate() {
                let (j, s) = image[i];
                e[j] += k;
                if s < 0 && k % 2 == 1 {
                    negative = !negative;
                }
            }
            let c = if negative { -c.clone() } else { c.clone() };
            out.add_term(Monomial(e), c);
        }
        out
    }

    /// Coefficient of `x_var^power`, as a polynomial in the remaining
    /// variables (indices above `var` shift down by one).
    pub fn coefficient_of(&self, var: usize, power: u32) -> Self {
        assert!(var < self.nvars);
        let mut out = Self::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            if m.0[var] == power {
                let mut e = m.0.clone();
                e.remove(var);
                out.add_term(Monomial(e), c.clone());
            }
        }
        out
    }

    /// Evaluates at `point`, mapping each coefficient into the target ring.
    pub fn eval<R: Ring>(&self, point: &[R], coeff: impl Fn(&Q) -> R) -> R {
        assert!(point.len() >= self.nvars, "evaluation point too short");
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut t = coeff(c);
            for (i, &k) in m.0.iter().enumerate() {
                for _ in 0..k {
                    t = t.mul(&point[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Renders with custom variable names, terms in descending graded-lex
    /// order, e.g. `e1^2 - e2^2` or `4*e1^3*e2`.
    pub fn display_with(&self, name: impl Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                factors.push(format_q(&abs));
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(name(i)),
                    _ => factors.push(format!("{}^{}", name(i), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Whether `self = c · other` for some positive rational `c`.
    pub fn is_positive_multiple_of(&self, other: &Self) -> bool {
        match (self.leading(), other.leading()) {
            (None, None) => true,
            (Some((ma, ca)), Some((mb, cb))) => {
                if ma.padded(self.nvars.max(other.nvars)) != mb.padded(self.nvars.max(other.nvars)) {
                    return false;
                }
                let c = ca / cb;
                c.is_positive() && *self == other.scale(&c)
            }
            _ => false,
        }
    }
}

fn common(a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
    let n = a.nvars.max(b.nvars);
    (a.with_nvars(n), b.with_nvars(n))
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.nvars == other.nvars {
            return self.terms == other.terms;
        }
        let (a, b) = common(self, other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero(0)
    }
    fn one() -> Self {
        MultiPoly::one(0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let (mut a, b) = common(self, other);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }
    fn neg(&self) -> Self {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
    fn mul(&self, other: &Self) -> Self {
        let n = self.nvars.max(other.nvars);
        let mut out = MultiPoly::zero(n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb).padded(n), ca * cb);
            }
        }
        out
    }
    fn from_i64(k: i64) -> Self {
        MultiPoly::constant(0, Q::from_integer(k.into()))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(|i| format!("e{}", i + 1)))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    c: String,
    e: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            vars: self.nvars,
            terms: self.terms().map(|(m, c)| TermRepr { c: format_q(c), e: m.0.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = PolyRepr::deserialize(d)?;
        let mut terms = Vec::with_capacity(r.terms.len());
        for t in r.terms {
            if t.e.len() != r.vars {
                return Err(serde::de::Error::custom(Error::Parse(format!(
                    "exponent vector of length {} in a ring of {} variables",
                    t.e.len(),
                    r.vars
                ))));
            }
            let c = parse_q(&t.c).map_err(serde::de::Error::custom)?;
            terms.push((Monomial(t.e), c));
        }
        Ok(MultiPoly::from_terms(r.vars, terms))
    }
}
