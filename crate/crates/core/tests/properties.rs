use std::collections::HashSet;

use kmax_core::cross_heap::{max_sum_cross_heap, merge_top_k, select_top_k};
use kmax_core::kmax::{max_k_with, registry, KMaxOptions};
use kmax_core::max1::maximum_subarray;
use kmax_core::oracle::{brute_top_k_subarrays, brute_xy_top_k, kadane};
use kmax_core::xy_select::{diagonal_split, xy_kth_largest, xy_top_k_band, xy_top_k_values};
use kmax_core::{max_k, ImplicitSumMatrix, StaircaseBand, TopList, Value};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sorted_desc(mut v: Vec<Value>) -> Vec<Value> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn desc_array(max_len: usize, lo: Value, hi: Value) -> impl Strategy<Value = Vec<Value>> {
    prop::collection::vec(lo..=hi, 1..=max_len).prop_map(sorted_desc)
}

fn all_cells(m: &ImplicitSumMatrix) -> Vec<Value> {
    let (a, b) = (m.row_values(), m.col_values());
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x + y))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn band_counts_match_enumeration(
        a in desc_array(32, -20, 20),
        b in desc_array(32, -20, 20),
        p in 1usize..40,
        lo in -45i64..45,
        span in 0i64..30,
    ) {
        let m = ImplicitSumMatrix::new(&a, &b).unwrap();
        let header = StaircaseBand::header(&m, p);
        let band = header.restrict(lo..lo + span);
        for b in [&header, &band] {
            let values = b.enumerate();
            prop_assert_eq!(values.len(), b.cardinality());
            let cells: Vec<_> = b.cells().collect();
            let unique: HashSet<_> = cells.iter().collect();
            prop_assert_eq!(unique.len(), cells.len());
            for x in -45..=45 {
                prop_assert_eq!(b.count_ge(x), values.iter().filter(|&&v| v >= x).count());
                prop_assert_eq!(b.count_gt(x), values.iter().filter(|&&v| v > x).count());
            }
        }
        // Restriction filters the enumerated multiset.
        let expect: Vec<Value> = header
            .enumerate()
            .into_iter()
            .filter(|v| (lo..lo + span).contains(v))
            .collect();
        prop_assert_eq!(sorted_desc(band.enumerate()), sorted_desc(expect));
    }

    #[test]
    fn band_queries_evaluate_logarithmically_many_cells(
        a in desc_array(200, -1000, 1000),
        b in desc_array(200, -1000, 1000),
        p in 1usize..12,
        x in -2000i64..2000,
    ) {
        let m = ImplicitSumMatrix::new(&a, &b).unwrap();
        let header = StaircaseBand::header(&m, p);
        let intervals = (header.row_intervals().len() + header.col_intervals().len()) as u64;
        let log = (usize::BITS - a.len().max(b.len()).leading_zeros()) as u64;
        m.reset_evaluations();
        header.count_ge(x);
        prop_assert!(m.evaluations() <= intervals * log);
        m.reset_evaluations();
        header.restrict(x..x + 100);
        prop_assert!(m.evaluations() <= 2 * intervals * log);
    }

    #[test]
    fn max1_agrees_with_scans(a in prop::collection::vec(-50i64..50, 1..60)) {
        let s = maximum_subarray(&a).unwrap();
        prop_assert_eq!(s.max_sub.sum, kadane(&a).unwrap());
        prop_assert_eq!(s.max_sub.sum, a[s.max_sub.start..=s.max_sub.end].iter().sum::<Value>());
        let prefixes: Vec<Value> = a.iter().scan(0, |acc, v| { *acc += v; Some(*acc) }).collect();
        let suffixes: Vec<Value> = a.iter().rev().scan(0, |acc, v| { *acc += v; Some(*acc) }).collect();
        prop_assert_eq!(s.max_left.sum, *prefixes.iter().max().unwrap());
        prop_assert_eq!(s.max_right.sum, *suffixes.iter().max().unwrap());
        prop_assert_eq!(s.sum, a.iter().sum::<Value>());
        prop_assert_eq!(s.max_left.start, 0);
        prop_assert_eq!(s.max_right.end, a.len() - 1);
    }

    #[test]
    fn merge_and_select_agree(
        lists in prop::collection::vec(desc_array(20, -30, 30), 2..5),
        k in 1usize..50,
    ) {
        let tops: Vec<TopList> = lists.iter().map(|l| TopList::new(l.clone(), l.len()).unwrap()).collect();
        let flat: Vec<Value> = lists.concat();
        prop_assert_eq!(merge_top_k(&tops, k).unwrap(), select_top_k(&flat, k).unwrap());
    }

    #[test]
    fn xy_separation(a in desc_array(24, 0, 6), b in desc_array(24, 0, 6), seed in any::<u64>()) {
        let m = ImplicitSumMatrix::new(&a, &b).unwrap();
        let k = 1 + (seed as usize) % m.len();
        let band = xy_top_k_band(&m, k).unwrap();
        prop_assert_eq!(band.cardinality(), k);
        let inside: HashSet<_> = band.cells().collect();
        let min_in = band.min_value().unwrap();
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                if !inside.contains(&(i, j)) {
                    prop_assert!(x + y <= min_in);
                }
            }
        }
        prop_assert_eq!(xy_kth_largest(&m, k).unwrap(), min_in);
    }

    #[test]
    fn top_k_is_nested(a in prop::collection::vec(-9i64..9, 1..25), seed in any::<u64>()) {
        let total = a.len() * (a.len() + 1) / 2;
        let k = 1 + (seed as usize) % total;
        for s in registry() {
            let small = max_k(&a, k, *s).unwrap().max_sub;
            if k < total {
                let big = max_k(&a, k + 1, *s).unwrap().max_sub;
                prop_assert_eq!(&big[..k], &small[..]);
            }
        }
    }
}

#[test]
fn cross_heap_exhaustive_small() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let la = rng.gen_range(1..=32);
        let lb = rng.gen_range(1..=32);
        let a = sorted_desc((0..la).map(|_| rng.gen_range(-5..=5)).collect());
        let b = sorted_desc((0..lb).map(|_| rng.gen_range(-5..=5)).collect());
        let ta = TopList::new(a.clone(), la).unwrap();
        let tb = TopList::new(b.clone(), lb).unwrap();
        for k in 1..=la * lb {
            let got = max_sum_cross_heap(&ta, &tb, k).unwrap();
            assert_eq!(
                got,
                brute_xy_top_k(&a, &b, k).unwrap(),
                "a={a:?} b={b:?} k={k}"
            );
        }
    }
}

#[test]
fn select_matches_sort_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let values: Vec<Value> = (0..1000).map(|_| rng.gen_range(-500..500)).collect();
    let mut expect = values.clone();
    expect.sort_unstable_by(|a, b| b.cmp(a));
    expect.truncate(100);
    assert_eq!(select_top_k(&values, 100).unwrap().as_slice(), &expect[..]);
}

#[test]
fn xy_matches_brute_force_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for round in 0..3000 {
        let la = rng.gen_range(1..=64);
        let lb = rng.gen_range(1..=64);
        let hi = if round % 3 == 0 { 2 } else { 1000 };
        let a = sorted_desc((0..la).map(|_| rng.gen_range(0..=hi)).collect());
        let b = sorted_desc((0..lb).map(|_| rng.gen_range(0..=hi)).collect());
        let m = ImplicitSumMatrix::new(&a, &b).unwrap();
        let k = rng.gen_range(1..=la * lb);
        let got = sorted_desc(xy_top_k_values(&m, k).unwrap());
        assert_eq!(
            got,
            brute_xy_top_k(&a, &b, k).unwrap().into_vec(),
            "a={a:?} b={b:?} k={k}"
        );
    }
}

#[test]
fn xy_full_enumeration_n64() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let a = sorted_desc((0..64).map(|_| rng.gen_range(-10_000..10_000)).collect());
    let b = sorted_desc((0..64).map(|_| rng.gen_range(-10_000..10_000)).collect());
    let m = ImplicitSumMatrix::new(&a, &b).unwrap();
    let all = sorted_desc(all_cells(&m));
    for k in 1..=4096 {
        let got = sorted_desc(xy_top_k_values(&m, k).unwrap());
        assert_eq!(got, all[..k], "k={k}");
    }
}

#[test]
fn diagonal_search_sandwich() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..500 {
        let la = rng.gen_range(1..=40);
        let lb = rng.gen_range(1..=40);
        let a = sorted_desc((0..la).map(|_| rng.gen_range(0..=20)).collect());
        let b = sorted_desc((0..lb).map(|_| rng.gen_range(0..=20)).collect());
        let m = ImplicitSumMatrix::new(&a, &b).unwrap();
        let k = rng.gen_range(1..=la * lb);
        let split = diagonal_split(&m, k).unwrap();
        let lower = split.lower.cardinality();
        let upper = split.upper.cardinality();
        assert!(lower <= k);
        assert!(upper >= k);
        let diag = kmax_core::ceil_sqrt(k).min(la).min(lb);
        if let Some(i) = split.index {
            assert_eq!(split.lower.min_value(), Some(a[i] + b[i]));
        }
        let next = split.index.map_or(0, |i| i + 1);
        if next < diag {
            // A proper diagonal staircase above k.
            assert!(upper > k);
            assert_eq!(split.upper.min_value().unwrap(), a[next] + b[next]);
        }
    }
}

#[test]
fn kmax_matches_oracle_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..2000 {
        let n = rng.gen_range(1..=80);
        let a: Vec<Value> = (0..n).map(|_| rng.gen_range(-100..=100)).collect();
        let k = rng.gen_range(1..=n * (n + 1) / 2);
        let expect = brute_top_k_subarrays(&a, k).unwrap().into_vec();
        for s in registry() {
            let got = max_k(&a, k, *s).unwrap();
            assert_eq!(got.max_sub, expect, "strategy={} a={a:?} k={k}", s.name());
            // Root-level prefix/suffix lists match a direct scan.
            let mut pre: Vec<Value> = a
                .iter()
                .scan(0, |acc, v| {
                    *acc += v;
                    Some(*acc)
                })
                .collect();
            let mut suf: Vec<Value> = a
                .iter()
                .rev()
                .scan(0, |acc, v| {
                    *acc += v;
                    Some(*acc)
                })
                .collect();
            pre = sorted_desc(pre);
            suf = sorted_desc(suf);
            pre.truncate(k);
            suf.truncate(k);
            assert_eq!(got.max_left.as_slice(), &pre[..]);
            assert_eq!(got.max_right.as_slice(), &suf[..]);
            assert_eq!(got.sum, a.iter().sum::<Value>());
            assert!(got.max_sub[0] >= got.max_left.as_slice()[0]);
            assert!(got.max_sub[0] >= got.max_right.as_slice()[0]);
        }
    }
}

#[test]
fn kmax_exhaustive_ternary_n8() {
    // All 3^8 arrays over {-1,0,1}, a spread of k values.
    let n = 8;
    let total = n * (n + 1) / 2;
    for code in 0..3usize.pow(n as u32) {
        let mut c = code;
        let a: Vec<Value> = (0..n)
            .map(|_| {
                let v = (c % 3) as Value - 1;
                c /= 3;
                v
            })
            .collect();
        let full = brute_top_k_subarrays(&a, total).unwrap().into_vec();
        for k in [1, 2, 3, 5, 8, 13, 21, 36] {
            for s in registry() {
                assert_eq!(
                    max_k(&a, k, *s).unwrap().max_sub,
                    full[..k],
                    "a={a:?} k={k}"
                );
            }
        }
    }
}

#[test]
fn staircase_work_is_linear_in_n_sqrt_k() {
    // Fit C on small n, check larger n stays within 2C.
    let staircase = kmax_core::kmax::strategy("staircase").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let k = 256usize;
    let ratio = |n: usize, rng: &mut ChaCha8Rng| {
        let a: Vec<Value> = (0..n)
            .map(|_| rng.gen_range(-1_000_000..=1_000_000))
            .collect();
        let (_, ops) = max_k_with(&a, k, staircase, KMaxOptions { sort: false }).unwrap();
        ops.total() as f64 / (n as f64 * (k as f64).sqrt())
    };
    let c = [1024, 2048, 4096]
        .iter()
        .map(|&n| ratio(n, &mut rng))
        .fold(0.0, f64::max);
    for n in [16_384, 65_536] {
        let r = ratio(n, &mut rng);
        assert!(r <= 2.0 * c, "n={n}: {r} > 2 * {c}");
    }
}
