use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::MultiPoly;
use super::ring::{Ring, Q};
use crate::{Error, Result};

/// Finite integer combination `Σ c_μ e^μ` of characters of an `n`-torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentChar {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentChar {
    pub fn zero(nvars: usize) -> Self {
        LaurentChar { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(&vec![0; nvars], BigInt::one())
    }

    pub fn monomial(weight: &[i64], c: BigInt) -> Self {
        let mut out = Self::zero(weight.len());
        out.add_term(weight.to_vec(), c);
        out
    }

    /// The factor `1 − e^{−λ}`.
    pub fn one_minus_exp_neg(weight: &[i64]) -> Self {
        let neg: Vec<i64> = weight.iter().map(|x| -x).collect();
        Self::one(weight.len()).sub(&Self::monomial(&neg, BigInt::one()))
    }

    fn add_term(&mut self, w: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "torus rank mismatch");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentChar { nvars: self.nvars, terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "torus rank mismatch");
        let mut out = Self::zero(self.nvars);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let w = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
                out.add_term(w, ca * cb);
            }
        }
        out
    }

    /// Homogeneous pieces of degrees `0..=max_degree` of the expansion
    /// `e^μ ↦ Σ_k ⟨μ, ε⟩^k / k!`.
    pub fn fx_graded(&self, max_degree: u32) -> Vec<MultiPoly> {
        let n = self.nvars;
        let mut pieces = vec![MultiPoly::zero(n); max_degree as usize + 1];
        for (w, c) in &self.terms {
            let lin = MultiPoly::linear(w);
            let mut power = MultiPoly::one(n);
            let mut factorial = BigInt::one();
            for k in 0..=max_degree {
                if k > 0 {
                    power = Ring::mul(&power, &lin);
                    factorial *= BigInt::from(k);
                }
                let coeff = Q::new(c.clone(), factorial.clone());
                pieces[k as usize] = Ring::add(&pieces[k as usize], &power.scale(&coeff));
            }
        }
        pieces
    }

    /// Lowest nonzero homogeneous piece of the expansion.
    ///
    /// A character with `m` distinct weights has a nonzero piece in degree
    /// below `m`, so the search is bounded.
    pub fn lt(&self) -> Result<MultiPoly> {
        if self.is_zero() {
            return Err(Error::ZeroCharacter);
        }
        let bound = self.terms.len() as u32;
        let mut cutoff = 1u32.min(bound);
        loop {
            let pieces = self.fx_graded(cutoff);
            if let Some(p) = pieces.into_iter().find(|p| !p.is_zero()) {
                return Ok(p);
            }
            if cutoff >= bound {
                unreachable!("nonzero character with vanishing expansion below degree {bound}");
            }
            cutoff = (cutoff * 2).min(bound);
        }
    }
}

impl fmt::Display for LaurentChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            let trivial = w.iter().all(|&x| x == 0);
            match (abs.is_one(), trivial) {
                (_, true) => write!(f, "{abs}")?,
                (true, false) => write!(f, "e^{w:?}")?,
                (false, false) => write!(f, "{abs}*e^{w:?}")?,
            }
        }
        Ok(())
    }
}
