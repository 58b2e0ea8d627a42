use num_bigint::BigInt;
use proptest::prelude::*;
use regtuple_core::{Ring, TruncatedSeries};

fn ring() -> impl Strategy<Value = Ring> {
    prop_oneof![
        Just(Ring::Integers),
        (2u64..1000).prop_map(Ring::Mod),
        (2u64..=1 << 32).prop_map(Ring::Mod),
        (2u64..1 << 40).prop_map(Ring::Mod),
        (2u64..500).prop_map(|m| Ring::BigMod(m.into())),
    ]
}

fn coeffs(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-1_000_000i64..1_000_000, 1..=len)
}

/// Sparse-ish vectors, so both multiplication kernels get exercised.
fn sparse_coeffs(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![4 => Just(0i64), 1 => -50i64..50], 1..=len)
}

fn series(r: &Ring, c: &[i64]) -> TruncatedSeries {
    TruncatedSeries::new(r.clone(), c).unwrap()
}

/// Plain O(n^2) Cauchy product over ℤ, truncated.
fn naive_product(a: &[i64], b: &[i64], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += BigInt::from(*x) * BigInt::from(*y);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_matches_naive(r in ring(), a in coeffs(300), b in sparse_coeffs(300)) {
        let len = a.len().min(b.len());
        let expect = TruncatedSeries::from_bigints(r.clone(), &naive_product(&a, &b, len)).unwrap();
        prop_assert_eq!(series(&r, &a).mul(&series(&r, &b)).unwrap(), expect);
    }

    #[test]
    fn product_commutes(r in ring(), a in coeffs(200), b in coeffs(200)) {
        let (sa, sb) = (series(&r, &a), series(&r, &b));
        prop_assert_eq!(sa.mul(&sb).unwrap(), sb.mul(&sa).unwrap());
    }

    #[test]
    fn product_associates(r in ring(), a in coeffs(120), b in sparse_coeffs(120), c in coeffs(120)) {
        let (sa, sb, sc) = (series(&r, &a), series(&r, &b), series(&r, &c));
        prop_assert_eq!(
            sa.mul(&sb).unwrap().mul(&sc).unwrap(),
            sa.mul(&sb.mul(&sc).unwrap()).unwrap()
        );
    }

    #[test]
    fn reduction_is_a_ring_map(m in 2u64..5000, a in coeffs(150), b in coeffs(150)) {
        let target = Ring::Mod(m);
        let (za, zb) = (series(&Ring::Integers, &a), series(&Ring::Integers, &b));
        let lhs = za.mul(&zb).unwrap().reduce(&target).unwrap();
        let rhs = za.reduce(&target).unwrap().mul(&zb.reduce(&target).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = za.add(&zb).unwrap().reduce(&target).unwrap();
        let rhs = za.reduce(&target).unwrap().add(&zb.reduce(&target).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduction_through_a_divisor(d in 2u64..60, k in 2u64..60, a in coeffs(100)) {
        let direct = series(&Ring::Integers, &a).reduce(&Ring::Mod(d)).unwrap();
        let staged = series(&Ring::Mod(d * k), &a).reduce(&Ring::Mod(d)).unwrap();
        prop_assert_eq!(direct, staged);
    }

    #[test]
    fn dilate_then_extract_is_truncation(r in ring(), a in coeffs(200), j in 1u64..12) {
        let s = series(&r, &a);
        let back = s.dilate(j).unwrap().extract_progression(j, 0).unwrap();
        prop_assert_eq!(back, s.truncate(s.order() / j as usize));
    }

    #[test]
    fn inverse_is_two_sided(r in ring(), mut a in coeffs(400)) {
        a[0] = 1;
        let s = series(&r, &a);
        let one = TruncatedSeries::one(r.clone(), s.order() as u64).unwrap();
        let inv = s.inv().unwrap();
        prop_assert_eq!(s.mul(&inv).unwrap(), one.clone());
        prop_assert_eq!(inv.mul(&s).unwrap(), one);
    }

    #[test]
    fn sparse_inverse_is_two_sided(r in ring(), mut a in sparse_coeffs(400)) {
        a[0] = -1;
        let s = series(&r, &a);
        let one = TruncatedSeries::one(r.clone(), s.order() as u64).unwrap();
        prop_assert_eq!(s.mul(&s.inv().unwrap()).unwrap(), one);
    }

    #[test]
    fn power_is_repeated_product(r in ring(), a in coeffs(60), e in 0u64..6) {
        let s = series(&r, &a);
        let mut expect = TruncatedSeries::one(r.clone(), s.order() as u64).unwrap();
        for _ in 0..e {
            expect = expect.mul(&s).unwrap();
        }
        prop_assert_eq!(s.pow(e), expect);
    }

    #[test]
    fn negate_q_is_an_involution_and_a_ring_map(r in ring(), a in coeffs(100), b in coeffs(100)) {
        let (sa, sb) = (series(&r, &a), series(&r, &b));
        prop_assert_eq!(sa.negate_q().negate_q(), sa.clone());
        prop_assert_eq!(sa.mul(&sb).unwrap().negate_q(), sa.negate_q().mul(&sb.negate_q()).unwrap());
    }

    #[test]
    fn product_coefficient_agrees(r in ring(), a in coeffs(100), b in coeffs(100), pick in any::<prop::sample::Index>()) {
        let (sa, sb) = (series(&r, &a), series(&r, &b));
        let full = sa.mul(&sb).unwrap();
        let n = pick.index(full.len());
        prop_assert_eq!(sa.product_coefficient(&sb, n).unwrap(), full.coeff(n));
    }
}

#[test]
fn long_dense_inverse_over_word_and_big_moduli() {
    // Long enough for the Newton path and the transform-based product.
    let a: Vec<i64> = (0..5000i64).map(|i| if i == 0 { 1 } else { (i * 7919) % 1013 - 506 }).collect();
    for r in [Ring::Mod(24), Ring::Mod((1 << 32) - 5), Ring::Mod((1 << 61) - 1), Ring::BigMod(24u32.into())] {
        let s = series(&r, &a);
        let one = TruncatedSeries::one(r.clone(), s.order() as u64).unwrap();
        assert_eq!(s.mul(&s.inv().unwrap()).unwrap(), one, "{r}");
    }
}

#[test]
fn long_integer_product_matches_naive() {
    let a: Vec<i64> = (0..1500i64).map(|i| (i * 7919) % 2001 - 1000).collect();
    let b: Vec<i64> = (0..1500i64).map(|i| ((i * 104_729) % 3001 - 1500) << 40).collect();
    let got = series(&Ring::Integers, &a).mul(&series(&Ring::Integers, &b)).unwrap();
    assert_eq!(got.coeffs(), naive_product(&a, &b, 1500));
}
