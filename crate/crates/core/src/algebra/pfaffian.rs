use super::matrix::Matrix;
use super::poly::MultiPoly;
use super::ring::{Ring, Q};
use crate::{Error, Result};

/// Rings in which division by a positive integer is exact.
pub trait DivInt: Ring {
    fn div_int(&self, k: u64) -> Self;
}

impl DivInt for Q {
    fn div_int(&self, k: u64) -> Self {
        self / Q::from_integer(k.into())
    }
}

impl DivInt for MultiPoly {
    fn div_int(&self, k: u64) -> Self {
        self.scale(&Q::new(1.into(), k.into()))
    }
}

/// Pfaffian by expansion along the first row:
/// `Pf(A) = Σ_{j≥2} (−1)^j a_{1j} Pf(A with rows/cols 1, j removed)`.
pub fn pfaffian<T: Ring>(m: &Matrix<T>) -> Result<T> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    if !m.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let idx: Vec<usize> = (0..m.rows()).collect();
    Ok(pf_rec(m, &idx))
}

fn pf_rec<T: Ring>(m: &Matrix<T>, idx: &[usize]) -> T {
    match idx.len() {
        0 => return T::one(),
        k if k % 2 == 1 => return T::zero(),
        _ => {}
    }
    let first = idx[0];
    let mut acc = T::zero();
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let a = &m[(first, j)];
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx.iter().copied().filter(|&x| x != first && x != j).collect();
        let term = a.mul(&pf_rec(m, &rest));
        // pos is 0-based, so the 1-based column index is pos + 1
        acc = if pos % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Visits every permutation of `0..k` together with its sign.
fn for_each_permutation(k: usize, mut f: impl FnMut(&[usize], i64)) {
    fn rec(p: &mut Vec<usize>, start: usize, sign: i64, f: &mut dyn FnMut(&[usize], i64)) {
        if start == p.len() {
            f(p, sign);
            return;
        }
        for i in start..p.len() {
            p.swap(start, i);
            rec(p, start + 1, if i == start { sign } else { -sign }, f);
            p.swap(start, i);
        }
    }
    let mut p: Vec<usize> = (0..k).collect();
    rec(&mut p, 0, 1, &mut f);
}

/// Pfaffian from the permutation sum
/// `(1/n!) Σ sgn(σ) a_{σ(1)σ(2)} ⋯ a_{σ(2n−1)σ(2n)}` over `σ ∈ S_{2n}` with
/// `σ(2m−1) < σ(2m)`. Exponential; used as an independent check.
pub fn pfaffian_by_permutations<T: DivInt>(m: &Matrix<T>) -> Result<T> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    if !m.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let size = m.rows();
    if size % 2 == 1 {
        return Ok(T::zero());
    }
    let mut acc = T::zero();
    for_each_permutation(size, |s, sign| {
        if s.chunks(2).any(|c| c[0] > c[1]) {
            return;
        }
        let mut t = if sign > 0 { T::one() } else { T::one().neg() };
        for c in s.chunks(2) {
            t = t.mul(&m[(c[0], c[1])]);
        }
        acc = acc.add(&t);
    });
    let half = (size / 2) as u64;
    Ok(acc.div_int((1..=half).product::<u64>().max(1)))
}

/// Determinant by the Leibniz permutation sum, over any commutative ring.
pub fn det_leibniz<T: Ring>(m: &Matrix<T>) -> Result<T> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    let mut acc = T::zero();
    for_each_permutation(m.rows(), |s, sign| {
        let mut t = if sign > 0 { T::one() } else { T::one().neg() };
        for (i, &j) in s.iter().enumerate() {
            t = t.mul(&m[(i, j)]);
        }
        acc = acc.add(&t);
    });
    Ok(acc)
}

/// Generic alternating matrix whose upper entries are distinct variables,
/// numbered row by row.
pub fn symbolic_alternating(size: usize) -> Matrix<MultiPoly> {
    let nvars = size * size.saturating_sub(1) / 2;
    let index = |i: usize, j: usize| i * (2 * size - i - 1) / 2 + (j - i - 1);
    Matrix::from_fn(size, size, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => MultiPoly::var(nvars, index(i, j)),
        std::cmp::Ordering::Greater => MultiPoly::var(nvars, index(j, i)).neg(),
        std::cmp::Ordering::Equal => MultiPoly::zero(nvars),
    })
}
