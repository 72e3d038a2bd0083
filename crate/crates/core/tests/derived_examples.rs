//! Worked examples, each checked against a small oracle written here from scratch
//! (carryless GF(2^m) arithmetic, bit-row elimination, subset enumeration).

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use rankmetric::bounds::{covering_lower, singleton_max_cardinality};
use rankmetric::codes::construct::{
    delsarte_check, embed_code, gabidulin, mrd_els_check, transpose_code, transpose_vector,
};
use rankmetric::oracle::{exhaustive_min_covering, greedy_covering, max_code_search, Outcome, SearchBudget};
use rankmetric::rankgeom::balls::{intersection_by_distance, large_diameter_set};
use rankmetric::rankgeom::els::{complements, enumerate_els, project, support_els};
use rankmetric::rankgeom::kernels::{ball_counts, ball_volume_bounds, gaussian, sigma_q};
use rankmetric::rankgeom::DEFAULT_GUARD;
use rankmetric::wenum::{cartesian_extend, krawtchouk, macwilliams, moments, trivial_mrd_enumerator, ParametricPoly};
use rankmetric::{Basis, Codebook, Els, Field, LinearCode, RankEnumerator};

// ---- oracle arithmetic over GF(2^m) with an explicit modulus bit pattern

fn gmul(a: u32, b: u32, modulus: u32, m: u32) -> u32 {
    let mut acc = 0u32;
    for i in 0..m {
        if b >> i & 1 == 1 {
            acc ^= a << i;
        }
    }
    for i in (m..2 * m).rev() {
        if acc >> i & 1 == 1 {
            acc ^= modulus << (i - m);
        }
    }
    acc
}

const GF4: u32 = 0b111;
const GF8: u32 = 0b1011;

fn rank_bits(mut rows: Vec<u32>) -> usize {
    let mut r = 0;
    for bit in 0..32 {
        if let Some(p) = (r..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) {
            rows.swap(r, p);
            for i in 0..rows.len() {
                if i != r && rows[i] >> bit & 1 == 1 {
                    rows[i] ^= rows[r];
                }
            }
            r += 1;
        }
    }
    r
}

// rank of v in GF(2^m)^n: row i of the expansion holds bit i of every coordinate
fn rank2(v: &[u32], m: u32) -> usize {
    let rows = (0..m).map(|i| v.iter().enumerate().fold(0, |acc, (j, &x)| acc | ((x >> i & 1) << j))).collect();
    rank_bits(rows)
}

fn all_vecs(size: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v| (0..size).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

fn xor(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x ^ y).collect()
}

fn span_of(rows: &[u32]) -> BTreeSet<u32> {
    let mut s = BTreeSet::from([0u32]);
    for &r in rows {
        let add: Vec<u32> = s.iter().map(|x| x ^ r).collect();
        s.extend(add);
    }
    s
}

// all k-dimensional subspaces of GF(2)^n, as member sets
fn subspaces(n: u32, k: usize) -> BTreeSet<BTreeSet<u32>> {
    let vs: Vec<u32> = (1..1u32 << n).collect();
    let mut out = BTreeSet::new();
    let mut pick = vec![0usize; k];
    fn rec(i: usize, start: usize, vs: &[u32], pick: &mut Vec<usize>, out: &mut BTreeSet<BTreeSet<u32>>, k: usize) {
        if i == k {
            let rows: Vec<u32> = pick.iter().map(|&p| vs[p]).collect();
            if rank_bits(rows.clone()) == k {
                out.insert(span_of(&rows));
            }
            return;
        }
        for p in start..vs.len() {
            pick[i] = p;
            rec(i + 1, p + 1, vs, pick, out, k);
        }
    }
    rec(0, 0, &vs, &mut pick, &mut out, k);
    if k == 0 {
        out.insert(BTreeSet::from([0]));
    }
    out
}

fn els_bits(e: &Els) -> BTreeSet<u32> {
    let rows: Vec<u32> = e.basis().iter().map(|r| r.iter().enumerate().fold(0, |a, (j, &x)| a | (x << j))).collect();
    span_of(&rows)
}

fn gf4() -> Field {
    Field::gf(2, 2)
}

// ---- field

#[test]
fn field_examples() {
    // only irreducible quadratic: the one with no root in GF(2)
    let irreducible: Vec<u32> = (0..4u32)
        .filter(|c| {
            let p = |x: u32| (x * x + (c >> 1 & 1) * x + (c & 1)) % 2;
            p(0) != 0 && p(1) != 0
        })
        .collect();
    assert_eq!(irreducible, vec![3]);
    let f = gf4();
    assert_eq!(f.modulus(), &[1, 1, 1]);
    let alpha = 2;
    assert_eq!(f.mul(alpha, alpha), gmul(alpha, alpha, GF4, 2));
    assert_eq!(f.mul(alpha, alpha), 3);
    let inv = (1..4).find(|&y| gmul(alpha, y, GF4, 2) == 1).unwrap();
    assert_eq!(f.inv(alpha).unwrap(), inv);
    assert_eq!(f.frobenius(alpha, 1), gmul(alpha, alpha, GF4, 2));
    let tr = |x: u32| x ^ gmul(x, x, GF4, 2);
    assert_eq!(f.trace(alpha), tr(alpha));
    assert_eq!(f.trace(alpha), 1);
    assert_eq!(f.trace(1), tr(1));
    assert_eq!(f.trace(1), 0);
    // dual basis by exhausting every pair with tr(e_i p_j) = delta_ij
    let basis = [1u32, 2];
    let dual: Vec<(u32, u32)> = (1..4)
        .flat_map(|a| (1..4).map(move |b| (a, b)))
        .filter(|&(p0, p1)| {
            let p = [p0, p1];
            (0..2).all(|i| (0..2).all(|j| tr(gmul(basis[i], p[j], GF4, 2)) == (i == j) as u32))
        })
        .collect();
    assert_eq!(dual, vec![(3, 1)]);
    assert_eq!(f.dual_basis(&basis).unwrap(), vec![3, 1]);
    let v = [1, 2, 3];
    let rows: Vec<Vec<u32>> = (0..2).map(|i| v.iter().map(|x| x >> i & 1).collect()).collect();
    assert_eq!(f.expand(&v), rows);
    assert_eq!(rows, vec![vec![1, 0, 1], vec![0, 1, 1]]);
}

// ---- geometry

#[test]
fn rank_and_kernel_examples() {
    let f = gf4();
    assert_eq!(rankmetric::rank_of(&f, &[1, 2, 3]), rank2(&[1, 2, 3], 2));
    assert_eq!(rank2(&[1, 2, 3], 2), 2);
    assert_eq!(BigUint::from(subspaces(4, 2).len()), gaussian(2, 4, 2));
    assert_eq!(subspaces(4, 2).len(), 35);
    let s = sigma_q(2);
    assert!(s < 2.0 && (s - 1.7923).abs() < 1e-3);
    // the defining series, summed directly
    let direct: f64 = (1..200).map(|k| 1.0 / (k as f64 * (2f64.powi(k) - 1.0))).sum::<f64>() / 2f64.ln();
    assert!((s - direct).abs() < 1e-12);
    let counts = all_vecs(4, 2).iter().fold([0u64; 3], |mut h, v| {
        h[rank2(v, 2)] += 1;
        h
    });
    let (n1, v1) = ball_counts(2, 2, 2, 1).unwrap();
    assert_eq!((n1, v1.clone()), (BigUint::from(counts[1]), BigUint::from(counts[0] + counts[1])));
    assert_eq!(v1, BigUint::from(10u32));
    let b = ball_volume_bounds(2, 2, 2, 1).unwrap();
    assert_eq!(b.lower, BigUint::from(8u32));
    assert!((b.upper - 27.7).abs() < 0.05 && 10.0 < b.upper);
    let count8 = all_vecs(8, 3).iter().filter(|v| rank2(v, 3) <= 1).count();
    assert_eq!(count8, 50);
    assert_eq!(ball_volume_bounds(2, 3, 3, 1).unwrap().lower, BigUint::from(32u32));
}

#[test]
fn els_examples() {
    for v in [1usize, 2] {
        let got: BTreeSet<BTreeSet<u32>> = enumerate_els(2, 3, 3, v).unwrap().iter().map(els_bits).collect();
        assert_eq!(got, subspaces(3, v));
        assert_eq!(got.len(), 7);
    }
    let f = gf4();
    let s = support_els(&f, &[1, 2, 3]);
    assert_eq!(s.basis(), &[vec![1, 0, 1], vec![0, 1, 1]]);
    let holders = enumerate_els(2, 2, 3, 2).unwrap().into_iter().filter(|e| e.contains(&f, &[1, 2, 3])).count();
    assert_eq!(holders, 1);
    // complements of a line in GF(2)^3: planes... of dimension 2 meeting it trivially
    let whole = Els::new(2, 3, 3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
    let a = Els::new(2, 3, 3, &[vec![1, 1, 0]]).unwrap();
    let ab = els_bits(&a);
    let want = subspaces(3, 2).into_iter().filter(|p| p.intersection(&ab).count() == 1).count();
    assert_eq!(complements(&a, &whole).unwrap().len(), want);
    assert_eq!(want, 4);
}

#[test]
fn projection_examples() {
    let f = gf4();
    let whole = Els::new(2, 2, 2, &[vec![1, 0], vec![0, 1]]).unwrap();
    let lines = enumerate_els(2, 2, 2, 1).unwrap();
    for a in &lines {
        let comps = complements(a, &whole).unwrap();
        for u in all_vecs(4, 2).into_iter().filter(|u| rank2(u, 2) == 2) {
            let mut seen = BTreeSet::new();
            for b in &comps {
                let (ua, ub) = project(&f, &u, a, b).unwrap();
                assert_eq!(xor(&ua, &ub), u);
                assert!(a.contains(&f, &ua) && b.contains(&f, &ub));
                assert_eq!((rank2(&ua, 2), rank2(&ub, 2)), (1, 1));
                assert!(seen.insert(ua), "u_A repeats across complements");
            }
        }
    }
}

#[test]
fn intersection_examples() {
    let f = gf4();
    let vs = all_vecs(4, 2);
    let brute =
        |r: usize, s: usize, c: &[u32]| vs.iter().filter(|x| rank2(x, 2) <= r && rank2(&xor(x, c), 2) <= s).count();
    // case (i): r = 2 split as 1 + 1 at distance 2
    assert_eq!(brute(1, 1, &[1, 2]), 6);
    assert_eq!(intersection_by_distance(&f, 2, 1, 1, 2, DEFAULT_GUARD).unwrap(), 6);
    // case (ii): r = 1, distance 1
    assert_eq!(brute(1, 1, &[1, 0]), 1 + 2 + 3);
    assert_eq!(intersection_by_distance(&f, 2, 1, 1, 1, DEFAULT_GUARD).unwrap(), 6);

    let s = large_diameter_set(2, 3, 3, 1).unwrap();
    assert_eq!(s.len(), 64);
    let diam = s.iter().flat_map(|x| s.iter().map(move |y| rank2(&xor(x, y), 3))).max().unwrap();
    assert_eq!(diam, 2);
}

// ---- codes

fn words(c: &LinearCode) -> BTreeSet<Vec<u32>> {
    c.codewords(DEFAULT_GUARD).unwrap().collect()
}

#[test]
fn code_examples() {
    let f = gf4();
    let c = LinearCode::new(&f, 2, vec![vec![1, 2]]).unwrap();
    let multiples: BTreeSet<Vec<u32>> = (0..4).map(|s| vec![s, gmul(s, 2, GF4, 2)]).collect();
    assert_eq!(words(&c), multiples);
    // x + alpha y = 0
    let kernel: BTreeSet<Vec<u32>> = all_vecs(4, 2).into_iter().filter(|v| v[0] ^ gmul(2, v[1], GF4, 2) == 0).collect();
    assert_eq!(words(&c.dual()), kernel);
    assert_eq!(words(&LinearCode::new(&f, 2, vec![vec![2, 1]]).unwrap()), kernel);
    let mut dist = [0u64; 3];
    for w in &multiples {
        dist[rank2(w, 2)] += 1;
    }
    assert_eq!(c.rank_distribution(DEFAULT_GUARD).unwrap().counts, dist.to_vec());
    assert_eq!(dist, [1, 0, 3]);
    assert_eq!(c.min_rank_distance(DEFAULT_GUARD).unwrap(), Some(2));
}

#[test]
fn gabidulin_examples() {
    let f = Field::gf(2, 3);
    assert!((0..8).all(|a| (0..8).all(|b| f.mul(a, b) == gmul(a, b, GF8, 3))));
    let g = [1, 2, 4];
    for (k, d) in [(1, 3), (2, 2)] {
        let c = gabidulin(&f, &g, k, 1).unwrap();
        let ws = words(&c);
        assert_eq!(ws.len(), 8usize.pow(k as u32));
        let brute = ws.iter().filter(|w| w.iter().any(|&x| x != 0)).map(|w| rank2(w, 3)).min().unwrap();
        assert_eq!(brute, d);
    }
    let f4 = gf4();
    let base = gabidulin(&f4, &[1, 2], 1, 1).unwrap();
    let p = rankmetric::codes::construct::cartesian_power(&base, 2).unwrap();
    let ws = words(&p);
    assert_eq!(ws.len(), 16);
    assert_eq!(ws.iter().filter(|w| w.iter().any(|&x| x != 0)).map(|w| rank2(w, 2)).min(), Some(2));
}

#[test]
fn transpose_examples() {
    let from = Field::gf(2, 3);
    let to = Field::gf(2, 2);
    let mut seed = 7u64;
    for _ in 0..100 {
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let v = vec![(seed >> 33) as u32 % 8, (seed >> 40) as u32 % 8];
        let t = transpose_vector(&from, &to, &v);
        assert_eq!(rank2(&t, 2), rank2(&v, 3));
    }
    let f = gf4();
    let book = LinearCode::new(&f, 2, vec![vec![1, 2]]).unwrap().to_codebook(DEFAULT_GUARD).unwrap();
    let radius = |ws: &[Vec<u32>], size: u32, n: usize, m: u32| {
        all_vecs(size, n).iter().map(|x| ws.iter().map(|w| rank2(&xor(x, w), m)).min().unwrap()).max().unwrap()
    };
    let t = transpose_code(&book).unwrap();
    assert_eq!(radius(book.words(), 4, 2, 2), radius(t.words(), 4, 2, 2));
    assert_eq!(t.covering_radius(DEFAULT_GUARD).unwrap(), radius(t.words(), 4, 2, 2));
}

#[test]
fn embedding_examples() {
    let f = gf4();
    let mrd = gabidulin(&f, &[1, 2], 1, 1).unwrap().to_codebook(DEFAULT_GUARD).unwrap();
    let e = embed_code(&mrd, 1).unwrap();
    assert_eq!(e.len(), 4);
    let r = all_vecs(8, 2).iter().map(|x| e.words().iter().map(|w| rank2(&xor(x, w), 3)).min().unwrap()).max().unwrap();
    assert_eq!(r, 1);
    assert_eq!(e.covering_radius(DEFAULT_GUARD).unwrap(), 1);
    // the integer reinterpretation keeps every rank
    for v in all_vecs(4, 2) {
        assert_eq!(rank2(&v, 2), rank2(&v, 3));
        let b = Codebook::new(&Field::gf(2, 3), 2, vec![v.clone()]).unwrap();
        assert_eq!(rankmetric::rank_of(b.field(), &v), rank2(&v, 2));
    }
}

#[test]
fn mrd_els_examples() {
    let f = Field::gf(2, 3);
    let c = gabidulin(&f, &[1, 2, 4], 2, 1).unwrap();
    assert!(mrd_els_check(&c).unwrap());
    // direct sum with each of the 7 lines spanned by a nonzero binary vector
    let ws = words(&c);
    for e in 1..8u32 {
        let line: Vec<Vec<u32>> =
            (1..8).map(|s| (0..3).map(|j| if e >> j & 1 == 1 { s } else { 0 }).collect()).collect();
        assert!(line.iter().all(|x| !ws.contains(x)), "line {e:03b} meets the code");
    }
}

#[test]
fn delsarte_example() {
    let f = gf4();
    let c = LinearCode::new(&f, 2, vec![vec![1, 2]]).unwrap();
    let e = Basis::new(&f, &[1, 2]).unwrap();
    let p = Basis::new(&f, &[3, 1]).unwrap();
    assert!(delsarte_check(&c, &e, &p).unwrap());
    // the same identity by brute force over 2x2 binary matrices, as 4-bit masks
    let coords = |x: u32, b: &[u32; 2]| -> [u32; 2] {
        for c0 in 0..2 {
            for c1 in 0..2 {
                if (c0 * b[0]) ^ (c1 * b[1]) == x {
                    return [c0, c1];
                }
            }
        }
        unreachable!()
    };
    let mat = |w: &[u32], b: &[u32; 2]| -> u32 {
        let (a, d) = (coords(w[0], b), coords(w[1], b));
        a[0] | d[0] << 1 | a[1] << 2 | d[1] << 3
    };
    let dual_e: BTreeSet<u32> = words(&c.dual()).iter().map(|w| mat(w, &[1, 2])).collect();
    let code_p: Vec<u32> = words(&c).iter().map(|w| mat(w, &[3, 1])).collect();
    let perp: BTreeSet<u32> = (0..16u32).filter(|x| code_p.iter().all(|y| (x & y).count_ones() % 2 == 0)).collect();
    assert_eq!(dual_e, perp);
}

// ---- bounds

#[test]
fn bound_examples() {
    // max code in GF(4)^2 with d = 2, by trying every subset containing 0
    let vs = all_vecs(4, 2);
    let mut best = 0;
    for mask in 0u32..1 << 15 {
        let set: Vec<&Vec<u32>> =
            std::iter::once(&vs[0]).chain((0..15).filter(|i| mask >> i & 1 == 1).map(|i| &vs[i + 1])).collect();
        if set.len() > best
            && set.iter().enumerate().all(|(i, x)| set[i + 1..].iter().all(|y| rank2(&xor(x, y), 2) >= 2))
        {
            best = set.len();
        }
    }
    assert_eq!(best, 4);
    assert_eq!(singleton_max_cardinality(2, 2, 2, 2).unwrap(), BigUint::from(best));
    let budget = SearchBudget::default();
    assert_eq!(max_code_search(&gf4(), 2, 2, &budget).unwrap().done().unwrap().len(), best);

    // GF(8)^3, d = 3: the k = 1 Gabidulin code is maximal, and two words sharing
    // their first coordinate are never at distance 3, so 8 is the most possible
    let g = words(&gabidulin(&Field::gf(2, 3), &[1, 2, 4], 1, 1).unwrap());
    assert_eq!(g.len(), 8);
    let all = all_vecs(8, 3);
    assert!(all.iter().filter(|x| !g.contains(*x)).all(|x| g.iter().any(|w| rank2(&xor(x, w), 3) < 3)));
    assert!(all.iter().all(|x| all.iter().filter(|y| y[0] == x[0]).all(|y| rank2(&xor(x, y), 3) < 3)));
    assert_eq!(singleton_max_cardinality(2, 3, 3, 3).unwrap(), BigUint::from(8u32));

    // sphere covering 16/10, Cohen with A_R(4,2,3) = 1 and q^{1}[2 1] = 6, excess with eps = 2, delta = 12
    let l = covering_lower(2, 2, 2, 1).unwrap();
    let sphere = 16u32 / 10 + 1;
    let cohen = (16u32 - 6).div_ceil(10 - 6);
    let (eps, delta): (u32, u32) = (2, 10 + 2 * 2 - 1 - 1);
    assert_eq!(delta, 12);
    let excess = (16 * delta).div_ceil(10 * delta - eps * 9);
    assert_eq!((sphere, cohen, excess), (2, 3, 2));
    assert_eq!(l.sphere_covering, BigUint::from(sphere));
    assert_eq!(l.cohen, Some(BigUint::from(cohen)));
    assert_eq!(l.excess, Some(BigUint::from(excess)));
}

// ---- enumerators

fn int_coeffs(p: &ParametricPoly, m: i64) -> Vec<BigInt> {
    p.eval_integers(m).unwrap()
}

#[test]
fn enumerator_examples() {
    let whole = all_vecs(4, 2).iter().fold(vec![0i64; 3], |mut h, v| {
        h[rank2(v, 2)] += 1;
        h
    });
    let as_big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(int_coeffs(&ParametricPoly::a(2, 2), 2), as_big(&whole));
    // (x - y) * (x - y) by the coefficient rule, with s = 1: (1, -1) then (1, -1) shifted by q^{i}
    let by_hand = [1, -1 - 2, 2];
    assert_eq!(int_coeffs(&ParametricPoly::b(2, 2), 2), as_big(&by_hand));
    let xy = ParametricPoly::from_integers(2, &[1, -1]);
    assert_eq!(int_coeffs(&xy.q_product(&xy).unwrap(), 2), as_big(&by_hand));

    // P_j(i; 2, 2) expanded by hand
    let p = |j, i| krawtchouk(2, j, i, 2, 2).unwrap();
    assert_eq!(p(1, 0), BigInt::from(3 * 3));
    // i = 2, j = 1: l = 0 term [2 0][0 1] = 0; l = 1 term -[2 1] q^0 alpha(1, 0) = -3
    assert_eq!(p(1, 2), BigInt::from(-3));
    // i = 1, j = 2: l = 1 term [1 1][1 1] (-1) q^{1} alpha(1, 1) = -2
    assert_eq!(p(2, 1), BigInt::from(-2));

    let f = gf4();
    let c = LinearCode::new(&f, 2, vec![vec![1, 2]]).unwrap();
    let dual_counts = words(&c.dual()).iter().fold(vec![0u64; 3], |mut h, w| {
        h[rank2(w, 2)] += 1;
        h
    });
    let a = RankEnumerator::from_counts(2, 2, &[1, 0, 3]).unwrap();
    assert_eq!(macwilliams(&a).unwrap(), RankEnumerator::from_counts(2, 2, &dual_counts).unwrap());

    // (1/4)[(1,9,6) + 3(1,-3,2)] and the dual of a rank-2 vector
    let mix: Vec<i64> = whole.iter().zip(by_hand).map(|(x, y)| (x + 3 * y) / 4).collect();
    assert_eq!(mix, vec![1, 0, 3]);
    let mrd = trivial_mrd_enumerator(2, 2, 2).unwrap();
    assert_eq!(mrd.coeffs(), as_big(&mix).as_slice());
    let v = LinearCode::new(&f, 2, vec![vec![1, 2]]).unwrap();
    assert_eq!(
        mrd,
        RankEnumerator::from_counts(2, 2, &v.dual().rank_distribution(DEFAULT_GUARD).unwrap().counts).unwrap()
    );

    let one = RankEnumerator::from_counts(2, 2, &[1]).unwrap();
    assert_eq!(cartesian_extend(&one, 2).unwrap().coeffs(), as_big(&whole).as_slice());

    // nu = 1: sum_{i <= 1} [2-i 1] A_i = 3; q^0 sum_{j <= 1} [2-j 1] B_j = 3
    // sum_{i >= 1} [i 1] q^{2-i} A_i = 3 * 3 = 9; j = 0 term [2 1] alpha(2,1) = 9
    let mo = moments(&a, &a, 1).unwrap();
    let three = num_rational::BigRational::from_integer(3.into());
    let nine = num_rational::BigRational::from_integer(9.into());
    assert_eq!((&mo.lhs_37, &mo.rhs_37, &mo.lhs_38, &mo.rhs_38), (&three, &three, &nine, &nine));
}

// ---- searches

#[test]
fn search_examples() {
    let f = gf4();
    let budget = SearchBudget::default();
    let covers = |ws: &[Vec<u32>]| all_vecs(4, 2).iter().all(|x| ws.iter().any(|w| rank2(&xor(x, w), 2) <= 1));
    let four = exhaustive_min_covering(&f, 2, 1, 4, &budget).unwrap().done().unwrap().unwrap();
    assert!(covers(four.words()));
    // every pair of vectors, by brute force
    let vs = all_vecs(4, 2);
    let pair = vs.iter().any(|x| vs.iter().any(|y| covers(&[x.clone(), y.clone()])));
    assert!(!pair);
    assert_eq!(exhaustive_min_covering(&f, 2, 1, 2, &budget).unwrap(), Outcome::Done(None));
    let g = greedy_covering(&f, 2, 1, &budget).unwrap();
    assert!(covers(g.words()) && g.len() <= 4);
}
