//! Point counts over `F_2` and `F_4` for the map
//! `(X₁, X₂) ↦ X₁·X₁ᵀ + X₂` from `𝕍` to symmetric matrices.
//!
//! In characteristic 2 an alternating matrix is a symmetric one with zero
//! diagonal, so `X₂` ranges over those and the image lands in all symmetric
//! `2n × 2n` matrices. A symmetric `S` counts as nilpotent when `S·J` is.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Field, Ring, Q};
use crate::nilcone::{alt_coordinates, defining_polys};
use crate::{Error, Result};

/// Element of `F_4 = F_2[x]/(x² + x + 1)`, encoded as `b0 + b1·x`. The
/// elements `0` and `1` form `F_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf4(u8);

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const X: Gf4 = Gf4(2);
    pub const X1: Gf4 = Gf4(3);

    pub fn new(code: u8) -> Self {
        assert!(code < 4, "F_4 code {code} out of range");
        Gf4(code)
    }

    pub fn code(self) -> u8 {
        self.0
    }

    /// The elements of `F_q` for `q ∈ {2, 4}`.
    pub fn elements(q: u32) -> Result<Vec<Gf4>> {
        match q {
            2 => Ok(vec![Gf4(0), Gf4(1)]),
            4 => Ok((0..4).map(Gf4).collect()),
            _ => Err(Error::UnsupportedField(q)),
        }
    }

    pub fn frobenius(self) -> Self {
        self.mul_gf(self)
    }

    fn mul_gf(self, other: Self) -> Self {
        let (a, b) = (self.0, other.0);
        let mut r = 0u8;
        if b & 1 == 1 {
            r ^= a;
        }
        if b & 2 == 2 {
            r ^= a << 1;
        }
        if r & 4 == 4 {
            r ^= 0b111;
        }
        Gf4(r)
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["0", "1", "x", "x+1"][self.0 as usize])
    }
}

impl Ring for Gf4 {
    fn zero() -> Self {
        Gf4(0)
    }
    fn one() -> Self {
        Gf4(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Gf4(self.0 ^ other.0)
    }
    fn neg(&self) -> Self {
        *self
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_gf(*other)
    }
    fn from_i64(k: i64) -> Self {
        Gf4((k.rem_euclid(2)) as u8)
    }
}

impl Field for Gf4 {
    fn inv(&self) -> Option<Self> {
        (1..4).map(Gf4).find(|y| self.mul_gf(*y) == Gf4(1))
    }
}

/// Symmetric `2n × 2n` matrix over `F_4`, `n ≤ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymGMatrix {
    size: usize,
    entries: [[Gf4; 4]; 4],
}

impl SymGMatrix {
    pub fn zero(n: usize) -> Self {
        assert!(n <= 2, "characteristic 2 checks support n ≤ 2");
        SymGMatrix { size: 2 * n, entries: [[Gf4(0); 4]; 4] }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> Gf4 {
        self.entries[i][j]
    }

    /// Sets `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: Gf4) {
        self.entries[i][j] = v;
        self.entries[j][i] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.size).all(|i| self.entries[i][i].is_zero())
    }

    /// Base-`q` code of the upper triangle, row by row.
    fn encode(&self, q: u32) -> usize {
        let mut code = 0usize;
        for i in 0..self.size {
            for j in i..self.size {
                code = code * q as usize + self.entries[i][j].0 as usize;
            }
        }
        code
    }

    fn decode(n: usize, q: u32, mut code: usize) -> Self {
        let mut s = Self::zero(n);
        let cells: Vec<(usize, usize)> = (0..2 * n).flat_map(|i| (i..2 * n).map(move |j| (i, j))).collect();
        for &(i, j) in cells.iter().rev() {
            s.set(i, j, Gf4((code % q as usize) as u8));
            code /= q as usize;
        }
        s
    }
}

/// `X₁·X₁ᵀ + X₂`.
pub fn ml(x1: &[Gf4], x2: &SymGMatrix) -> SymGMatrix {
    assert_eq!(x1.len(), x2.size, "dimension mismatch");
    assert!(x2.has_zero_diagonal() && x2.is_symmetric(), "x2 must be alternating");
    let mut s = *x2;
    for i in 0..s.size {
        for j in 0..s.size {
            s.entries[i][j] = s.entries[i][j].add(&x1[i].mul(&x1[j]));
        }
    }
    s
}

/// Whether `S·J` is nilpotent; `J` reduces to `[[0, 1], [1, 0]]` blocks.
pub fn is_nilpotent_g(s: &SymGMatrix) -> bool {
    let size = s.size;
    let n = size / 2;
    let mut a = [[Gf4(0); 4]; 4];
    for i in 0..size {
        for j in 0..size {
            let col = if j < n { j + n } else { j - n };
            a[i][j] = s.entries[i][col];
        }
    }
    let mut p = a;
    for _ in 1..size {
        let mut next = [[Gf4(0); 4]; 4];
        for i in 0..size {
            for k in 0..size {
                if p[i][k].is_zero() {
                    continue;
                }
                for j in 0..size {
                    next[i][j] = next[i][j].add(&p[i][k].mul(&a[k][j]));
                }
            }
        }
        p = next;
    }
    (0..size).all(|i| (0..size).all(|j| p[i][j].is_zero()))
}

fn guard(n: usize, q: u32, long: bool) -> Result<()> {
    Gf4::elements(q)?;
    match (n, q) {
        (1, _) | (2, 2) => Ok(()),
        (2, 4) if long => Ok(()),
        (2, 4) => Err(Error::TooLarge("n = 2, q = 4 needs the long-running flag".into())),
        _ => Err(Error::TooLarge(format!("n = {n} is beyond exhaustive enumeration"))),
    }
}

fn reduce_mod_2(c: &Q) -> Gf4 {
    assert!(c.is_integer(), "invariant coefficients are integers");
    let r = c.numer() % num_bigint::BigInt::from(2);
    Gf4(if r == 0.into() { 0 } else { 1 })
}

/// All alternating `x2` over `F_q`, in base-`q` order of the upper entries.
fn alternating_points(n: usize, q: u32) -> impl ParallelIterator<Item = SymGMatrix> {
    let coords = alt_coordinates(n);
    let total = (q as usize).pow(coords.len() as u32);
    (0..total).into_par_iter().map(move |mut code| {
        let mut s = SymGMatrix::zero(n);
        for &(i, j) in coords.iter().rev() {
            s.set(i, j, Gf4((code % q as usize) as u8));
            code /= q as usize;
        }
        s
    })
}

fn is_invariant_zero(polys: &[crate::algebra::MultiPoly], coords: &[(usize, usize)], x2: &SymGMatrix) -> bool {
    let point: Vec<Gf4> = coords.iter().map(|&(i, j)| x2.get(i, j)).collect();
    polys.iter().all(|p| p.eval(&point, reduce_mod_2).is_zero())
}

/// `#{(x1, x2) ∈ 𝕍(F_q) : P_i(x2) = 0 for all i}`, with the integral
/// invariants reduced mod 2.
pub fn count_exotic_points(n: usize, q: u32, long: bool) -> Result<u64> {
    guard(n, q, long)?;
    let polys = defining_polys(n);
    let coords = alt_coordinates(n);
    let zeros = alternating_points(n, q).filter(|x2| is_invariant_zero(&polys, &coords, x2)).count() as u64;
    Ok(zeros * (q as u64).pow(2 * n as u32))
}

/// `#{S ∈ Sym(2n, F_q) : S·J nilpotent}`.
pub fn count_nilpotent_points(n: usize, q: u32, long: bool) -> Result<u64> {
    guard(n, q, long)?;
    let total = (q as usize).pow((n * (2 * n + 1)) as u32);
    Ok((0..total).into_par_iter().filter(|&c| is_nilpotent_g(&SymGMatrix::decode(n, q, c))).count() as u64)
}

/// Outcome of the transport check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransportReport {
    /// `ml` is a bijection `𝕍(F_q) → Sym(2n, F_q)`.
    pub bijective: bool,
    /// `ml` maps the invariant zeros exactly onto the nilpotent matrices.
    pub restricts: bool,
}

impl TransportReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.restricts
    }
}

/// Checks that `ml` is bijective on points and carries the common zeros of
/// the invariants onto the nilpotent symmetric matrices.
pub fn verify_ml_transport(n: usize, q: u32, long: bool) -> Result<TransportReport> {
    guard(n, q, long)?;
    let elements = Gf4::elements(q)?;
    let size = 2 * n;
    let total = (q as usize).pow((n * (2 * n + 1)) as u32);
    let polys = defining_polys(n);
    let coords = alt_coordinates(n);
    let x1_all: Vec<Vec<Gf4>> = (0..(q as usize).pow(size as u32))
        .map(|mut code| {
            let mut v = vec![Gf4(0); size];
            for k in (0..size).rev() {
                v[k] = elements[code % q as usize];
                code /= q as usize;
            }
            v
        })
        .collect();
    let images: Vec<(usize, bool)> = alternating_points(n, q)
        .flat_map_iter(|x2| {
            let zero = is_invariant_zero(&polys, &coords, &x2);
            x1_all.iter().map(move |x1| (ml(x1, &x2).encode(q), zero)).collect::<Vec<_>>()
        })
        .collect();
    let mut hit = vec![0u8; total];
    let mut from_zero = vec![false; total];
    for &(code, zero) in &images {
        hit[code] = hit[code].saturating_add(1);
        from_zero[code] |= zero;
    }
    let bijective = images.len() == total && hit.iter().all(|&h| h == 1);
    let restricts = (0..total).into_par_iter().all(|c| from_zero[c] == is_nilpotent_g(&SymGMatrix::decode(n, q, c)));
    Ok(TransportReport { bijective, restricts })
}

/// Summary emitted by the `count` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n: usize,
    pub q: u32,
    pub exotic: u64,
    pub nilpotent: u64,
    pub ml_bijective: bool,
}

pub fn count_report(n: usize, q: u32, long: bool) -> Result<CountReport> {
    Ok(CountReport {
        n,
        q,
        exotic: count_exotic_points(n, q, long)?,
        nilpotent: count_nilpotent_points(n, q, long)?,
        ml_bijective: verify_ml_transport(n, q, long)?.passed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        let all: Vec<Gf4> = (0..4).map(Gf4).collect();
        for &a in &all {
            assert_eq!(a.add(&a), Gf4::ZERO);
            if a != Gf4::ZERO {
                assert_eq!(a.mul(&a.inv().unwrap()), Gf4::ONE);
            }
            for &b in &all {
                assert_eq!(a.mul(&b), b.mul(&a));
                for &c in &all {
                    assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                    assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                }
            }
        }
        assert_eq!(Gf4::X.mul(&Gf4::X), Gf4::X1);
        let mut squares: Vec<Gf4> = all.iter().map(|a| a.frobenius()).collect();
        squares.sort();
        assert_eq!(squares, all);
        assert!(Gf4::elements(3).is_err());
    }

    #[test]
    fn ml_examples() {
        let zero = SymGMatrix::zero(1);
        assert_eq!(ml(&[Gf4::ZERO, Gf4::ZERO], &zero), zero);
        let s = ml(&[Gf4::ONE, Gf4::ZERO], &zero);
        assert_eq!((s.get(0, 0), s.get(0, 1), s.get(1, 1)), (Gf4::ONE, Gf4::ZERO, Gf4::ZERO));
    }

    #[test]
    fn nilpotency_examples() {
        assert!(is_nilpotent_g(&SymGMatrix::zero(2)));
        let mut s = SymGMatrix::zero(1);
        s.set(0, 0, Gf4::ONE);
        s.set(1, 1, Gf4::ONE);
        assert!(!is_nilpotent_g(&s));
        let count = (0..8).filter(|&c| is_nilpotent_g(&SymGMatrix::decode(1, 2, c))).count();
        assert_eq!(count, 4);
    }

    #[test]
    fn encoding_round_trip() {
        for c in 0..64 {
            assert_eq!(SymGMatrix::decode(1, 4, c).encode(4), c);
        }
    }

    #[test]
    fn rank_one_counts() {
        assert_eq!(count_exotic_points(1, 2, false).unwrap(), 4);
        assert_eq!(count_nilpotent_points(1, 2, false).unwrap(), 4);
        assert_eq!(count_exotic_points(1, 4, false).unwrap(), 16);
        assert_eq!(count_nilpotent_points(1, 4, false).unwrap(), 16);
        assert!(verify_ml_transport(1, 2, false).unwrap().passed());
        assert!(verify_ml_transport(1, 4, false).unwrap().passed());
    }

    #[test]
    fn guard_rejects_large_inputs() {
        assert!(matches!(count_exotic_points(2, 4, false), Err(Error::TooLarge(_))));
        assert!(matches!(count_exotic_points(3, 2, true), Err(Error::TooLarge(_))));
        assert_eq!(count_exotic_points(1, 3, false), Err(Error::UnsupportedField(3)));
    }
}
