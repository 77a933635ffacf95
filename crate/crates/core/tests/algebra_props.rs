use num_bigint::BigInt;
use proptest::prelude::*;

use exotic_core::algebra::{jordan_type, pfaffian, LaurentChar, Matrix, MultiPoly, Ring, Q};

fn q(k: i64) -> Q {
    Q::from_integer(k.into())
}

fn alternating(size: usize, entries: &[i64]) -> Matrix<Q> {
    let mut m = Matrix::zeros(size, size);
    let mut k = 0;
    for i in 0..size {
        for j in i + 1..size {
            m[(i, j)] = q(entries[k]);
            m[(j, i)] = q(-entries[k]);
            k += 1;
        }
    }
    m
}

fn alternating_strategy() -> impl Strategy<Value = Matrix<Q>> {
    (1usize..=4).prop_flat_map(|half| {
        let size = 2 * half;
        prop::collection::vec(-5i64..=5, size * (size - 1) / 2).prop_map(move |e| alternating(size, &e))
    })
}

fn weight_strategy(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=2, n).prop_filter("nonzero weight", |w| w.iter().any(|&c| c != 0))
}

fn character_strategy(n: usize) -> impl Strategy<Value = LaurentChar> {
    prop::collection::vec((prop::collection::vec(-2i64..=2, n), -3i64..=3), 1..4).prop_map(move |terms| {
        terms.into_iter().fold(LaurentChar::zero(n), |acc, (w, c)| acc.add(&LaurentChar::monomial(&w, BigInt::from(c))))
    })
}

/// Nilpotent strictly upper triangular matrix with the given entries.
fn strictly_upper(size: usize, entries: &[i64]) -> Matrix<Q> {
    let mut m = Matrix::zeros(size, size);
    let mut k = 0;
    for i in 0..size {
        for j in i + 1..size {
            m[(i, j)] = q(entries[k]);
            k += 1;
        }
    }
    m
}

proptest! {
    #[test]
    fn pfaffian_squares_to_determinant(m in alternating_strategy()) {
        let pf = pfaffian(&m).unwrap();
        prop_assert_eq!(Ring::mul(&pf, &pf), m.det());
    }

    #[test]
    fn pfaffian_scales_by_determinant(m in alternating_strategy(), entries in prop::collection::vec(-2i64..=2, 64)) {
        // Pf(g m gᵀ) = det(g) Pf(m).
        let size = m.rows();
        let g = Matrix::from_fn(size, size, |i, j| q(entries[i * 8 + j]));
        let lhs = pfaffian(&g.mul(&m).mul(&g.transpose())).unwrap();
        prop_assert_eq!(lhs, g.det() * pfaffian(&m).unwrap());
    }

    #[test]
    fn lowest_term_is_multiplicative(ws in prop::collection::vec(weight_strategy(3), 1..5)) {
        let product = ws.iter().fold(LaurentChar::one(3), |acc, w| acc.mul(&LaurentChar::one_minus_exp_neg(w)));
        let expected = ws.iter().fold(MultiPoly::one(3), |acc, w| {
            Ring::mul(&acc, &LaurentChar::one_minus_exp_neg(w).lt().unwrap())
        });
        prop_assert_eq!(product.lt().unwrap(), expected);
    }

    #[test]
    fn graded_expansion_is_multiplicative(a in character_strategy(2), b in character_strategy(2)) {
        let top = 4;
        let (fa, fb, fab) = (a.fx_graded(top), b.fx_graded(top), a.mul(&b).fx_graded(top));
        for k in 0..=top as usize {
            let conv = (0..=k).fold(MultiPoly::zero(2), |acc, i| Ring::add(&acc, &Ring::mul(&fa[i], &fb[k - i])));
            prop_assert_eq!(&fab[k], &conv);
        }
    }

    #[test]
    fn jordan_type_is_conjugation_invariant(
        size in 1usize..=5,
        entries in prop::collection::vec(-2i64..=2, 10),
        g_entries in prop::collection::vec(-3i64..=3, 25),
    ) {
        let m = strictly_upper(size, &entries);
        let g = Matrix::from_fn(size, size, |i, j| q(g_entries[i * 5 + j]));
        prop_assume!(!g.det().is_zero());
        let conj = g.mul(&m).mul(&g.inverse().unwrap());
        prop_assert_eq!(jordan_type(&conj).unwrap(), jordan_type(&m).unwrap());
        prop_assert_eq!(jordan_type(&m).unwrap().size() as usize, size);
    }
}
