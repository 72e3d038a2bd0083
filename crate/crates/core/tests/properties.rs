use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rankmetric::bounds::covering_report;
use rankmetric::codes::io::{format_codebook, format_linear, parse, CodeFile};
use rankmetric::oracle::random_linear_code;
use rankmetric::rankgeom::kernels::gaussian;
use rankmetric::rankgeom::{
    decode_index, encode_index, hamming_weight, rank_distance, vec_add, vec_scale, DEFAULT_GUARD,
};
use rankmetric::wenum::{leibniz_derivative, leibniz_inv_derivative, macwilliams_qproduct};
use rankmetric::{macwilliams, rank_of, Field, LinearCode, ParametricPoly, RankEnumerator};

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        (1u32..=6).prop_map(|m| Field::gf(2, m)),
        (1u32..=4).prop_map(|m| Field::gf(3, m)),
        (1u32..=3).prop_map(|m| Field::gf(5, m)),
    ]
}

fn field_and_vec(max_n: usize) -> impl Strategy<Value = (Field, Vec<u32>)> {
    field().prop_flat_map(move |f| {
        let s = f.size();
        (Just(f), prop::collection::vec(0..s, 1..=max_n))
    })
}

fn field_and_pair(max_n: usize) -> impl Strategy<Value = (Field, Vec<u32>, Vec<u32>)> {
    field().prop_flat_map(move |f| {
        let s = f.size();
        (1..=max_n)
            .prop_flat_map(move |n| (Just(f.clone()), prop::collection::vec(0..s, n), prop::collection::vec(0..s, n)))
    })
}

// codes small enough that the code and its dual can both be listed
fn small_code() -> impl Strategy<Value = LinearCode> {
    (prop::sample::select(vec![(2u32, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)]), 1usize..=4, any::<u64>())
        .prop_filter("dual too large", |&((q, m), n, _)| (q as u64).pow(m * n as u32) <= 1 << 14)
        .prop_flat_map(|((q, m), n, seed)| (Just((q, m, n, seed)), 0..=n))
        .prop_map(|((q, m, n, seed), k)| random_linear_code(&Field::gf(q, m), n, k, seed).unwrap())
}

fn enumerator(c: &LinearCode) -> RankEnumerator {
    let f = c.field();
    RankEnumerator::from_counts(f.q(), f.m(), &c.rank_distribution(DEFAULT_GUARD).unwrap().counts).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mul_is_associative_and_matches_schoolbook(f in field(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let s = f.size();
        let (a, b, c) = (a % s, b % s, c % s);
        prop_assert_eq!(f.mul(a, b), f.mul_schoolbook(a, b));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn frobenius_and_trace(f in field(), a in any::<u32>(), b in any::<u32>()) {
        let (a, b) = (a % f.size(), b % f.size());
        prop_assert_eq!(f.frobenius(a, f.m() as u64), a);
        prop_assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
        prop_assert!(f.trace(a) < f.q());
        prop_assert_eq!(f.trace(f.add(a, b)), (f.trace(a) + f.trace(b)) % f.q());
    }

    #[test]
    fn expansion_round_trips((f, v) in field_and_vec(6)) {
        prop_assert_eq!(f.reassemble(&f.expand(&v)), v);
    }

    #[test]
    fn index_round_trips((f, v) in field_and_vec(6)) {
        let base = f.size() as u64;
        let mut out = vec![0; v.len()];
        decode_index(base, encode_index(base, &v), &mut out);
        prop_assert_eq!(out, v);
    }

    #[test]
    fn rank_bounds((f, v) in field_and_vec(6), c in 1u32..5) {
        let r = rank_of(&f, &v);
        prop_assert!(r <= (f.m() as usize).min(v.len()));
        prop_assert!(r <= hamming_weight(&v));
        prop_assert_eq!(r == 0, v.iter().all(|&x| x == 0));
        // scaling by a nonzero element keeps the rank
        let c = c % f.size();
        if c != 0 {
            prop_assert_eq!(rank_of(&f, &vec_scale(&f, c, &v)), r);
        }
    }

    #[test]
    fn rank_distance_is_a_metric((f, x, y) in field_and_pair(5), seed in any::<u32>()) {
        let z: Vec<u32> = x.iter().enumerate().map(|(i, &a)| (a ^ seed.rotate_left(i as u32 * 7)) % f.size()).collect();
        let d = |a: &[u32], b: &[u32]| rank_distance(&f, a, b);
        prop_assert_eq!(d(&x, &y), d(&y, &x));
        prop_assert!(d(&x, &z) <= d(&x, &y) + d(&y, &z));
        prop_assert!(rank_of(&f, &vec_add(&f, &x, &y)) <= rank_of(&f, &x) + rank_of(&f, &y));
    }

    #[test]
    fn gaussian_pascal(q in prop::sample::select(vec![2u32, 3, 5]), n in 1i64..12, k in 0i64..12) {
        let k = k.min(n);
        prop_assert_eq!(gaussian(q, n, k), gaussian(q, n, n - k));
        if k >= 1 {
            let lhs = gaussian(q, n, k);
            let rhs = gaussian(q, n - 1, k - 1) + rankmetric::rankgeom::kernels::pow(q, k as u64) * gaussian(q, n - 1, k);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn bounds_are_consistent(q in prop::sample::select(vec![2u32, 3, 5]), m in 1u32..8, n in 1u32..8, rho in 0u32..8) {
        let r = covering_report(q, m, n, rho).unwrap();
        prop_assert!(r.best_lower <= r.best_upper);
        let t = covering_report(q, n, m, rho).unwrap();
        prop_assert_eq!((r.best_lower, r.best_upper), (t.best_lower, t.best_upper));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn dual_is_an_involution(c in small_code()) {
        let d = c.dual();
        prop_assert_eq!(d.k(), c.n() - c.k());
        prop_assert!(d.dual().same_code(&c));
    }

    #[test]
    fn macwilliams_matches_the_dual(c in small_code()) {
        let a = enumerator(&c);
        let b = enumerator(&c.dual());
        prop_assert_eq!(&macwilliams(&a).unwrap(), &b);
        prop_assert_eq!(&macwilliams_qproduct(&a).unwrap(), &b);
        prop_assert_eq!(macwilliams(&b).unwrap(), a);
    }

    #[test]
    fn rank_never_exceeds_hamming_distance(c in small_code()) {
        let dr = c.min_rank_distance(DEFAULT_GUARD).unwrap();
        let dh = c.min_hamming_distance(DEFAULT_GUARD).unwrap();
        prop_assert!(dr <= dh);
    }

    #[test]
    fn code_files_round_trip(c in small_code()) {
        let CodeFile::Linear(back) = parse(&format_linear(&c)).unwrap() else { panic!("expected a linear code") };
        prop_assert!(back.same_code(&c));
        let book = c.to_codebook(DEFAULT_GUARD).unwrap();
        prop_assert_eq!(parse(&format_codebook(&book)).unwrap(), CodeFile::Book(book));
    }

    #[test]
    fn leibniz_rules(
        q in prop::sample::select(vec![2u32, 3]),
        f in prop::collection::vec(-4i64..5, 1..4),
        g in prop::collection::vec(-4i64..5, 1..4),
        nu in 0usize..4,
    ) {
        let (fp, gp) = (ParametricPoly::from_integers(q, &f), ParametricPoly::from_integers(q, &g));
        let prod = fp.q_product(&gp).unwrap();
        prop_assume!(nu <= prod.degree());
        let ms = -3i64..6;
        prop_assert!(prod.q_derivative(nu).unwrap().agrees_with(&leibniz_derivative(&fp, &gp, nu).unwrap(), ms.clone()));
        prop_assert!(prod.q_inv_derivative(nu).unwrap().agrees_with(&leibniz_inv_derivative(&fp, &gp, nu).unwrap(), ms));
    }

    #[test]
    fn q_product_is_associative(
        q in prop::sample::select(vec![2u32, 3, 5]),
        f in prop::collection::vec(-3i64..4, 1..4),
        g in prop::collection::vec(-3i64..4, 1..4),
        h in prop::collection::vec(-3i64..4, 1..4),
    ) {
        let [a, b, c] = [f, g, h].map(|v| ParametricPoly::from_integers(q, &v));
        let left = a.q_product(&b).unwrap().q_product(&c).unwrap();
        let right = a.q_product(&b.q_product(&c).unwrap()).unwrap();
        prop_assert!(left.agrees_with(&right, -2..5));
        let one = ParametricPoly::one(q);
        prop_assert!(a.q_product(&one).unwrap().agrees_with(&a, -2..5));
        prop_assert!(one.q_product(&a).unwrap().agrees_with(&a, -2..5));
    }
}

#[test]
fn enumerator_total_is_code_size() {
    let f = Field::gf(3, 2);
    for seed in 0..8 {
        let c = random_linear_code(&f, 3, 2, seed).unwrap();
        let e = enumerator(&c);
        assert_eq!(e.total(), BigInt::from(81));
        assert_eq!(e.dimension().unwrap(), 2);
        let s: BigRational =
            macwilliams(&e).unwrap().coeffs().iter().map(|x| BigRational::from_integer(x.clone())).sum();
        assert_eq!(s, BigRational::from_integer(9.into()));
    }
}
