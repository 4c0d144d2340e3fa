//! Checks against independent, deliberately naive oracles.

use ktri_core::dyck::{
    catalan, dominates, dominates_by_steps, enumerate_paths, enumerate_tuples, from_exponents, determinant_count,
};
use ktri_core::gentree_k::enumerate_tree;
use ktri_core::polygon::{enumerate_brute, is_t_crossing};
use ktri_core::{Diagonal, Guard, PolygonContext};
use num_bigint::BigUint;

fn catalan_u128(m: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..m as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// `det(C_{n-i-j})` for `1 <= i, j <= k`, by cofactor expansion.
fn det_oracle(n: usize, k: usize) -> i128 {
    fn det(m: &[Vec<i128>]) -> i128 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|c| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| *v).collect())
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] * det(&minor)
            })
            .sum()
    }
    let m: Vec<Vec<i128>> = (1..=k)
        .map(|i| (1..=k).map(|j| catalan_u128(n - i - j) as i128).collect())
        .collect();
    det(&m)
}

#[test]
fn catalan_values() {
    for m in 0..30 {
        assert_eq!(catalan(m), BigUint::from(catalan_u128(m)));
    }
}

#[test]
fn two_by_two_closed_form() {
    let want = [1u128, 3, 14, 84, 594, 4719];
    for (n, w) in (5..=10).zip(want) {
        let c = |x| catalan_u128(x);
        assert_eq!(c(n - 2) * c(n - 4) - c(n - 3) * c(n - 3), w);
        assert_eq!(determinant_count(n, 2).unwrap(), BigUint::from(w));
    }
}

#[test]
fn determinant_matches_cofactor_expansion() {
    for k in 1..=4 {
        for n in 2 * k + 1..2 * k + 14 {
            let want = det_oracle(n, k);
            assert!(want > 0);
            assert_eq!(determinant_count(n, k).unwrap(), BigUint::from(want as u128), "n={n} k={k}");
        }
    }
    assert_eq!(determinant_count(7, 3).unwrap(), BigUint::from(1u32));
    assert_eq!(determinant_count(8, 3).unwrap(), BigUint::from(4u32));
}

fn pairwise_cross(x: &Diagonal, y: &Diagonal) -> bool {
    let (f, s) = if x.a < y.a { (x, y) } else { (y, x) };
    f.a < s.a && s.a < f.b && f.b < s.b
}

#[test]
fn crossing_matches_pairwise_oracle() {
    for n in 4..=10 {
        let all: Vec<Diagonal> = (1..=n).flat_map(|a| (a + 2..=n).map(move |b| Diagonal::new(a, b))).collect();
        for x in &all {
            for y in &all {
                if x != y {
                    assert_eq!(is_t_crossing(&[*x, *y]), pairwise_cross(x, y), "{x} {y}");
                }
            }
        }
        if n <= 8 {
            for (i, x) in all.iter().enumerate() {
                for (j, y) in all.iter().enumerate().skip(i + 1) {
                    for z in &all[j + 1..] {
                        let want = pairwise_cross(x, y) && pairwise_cross(x, z) && pairwise_cross(y, z);
                        assert_eq!(is_t_crossing(&[*x, *y, *z]), want);
                    }
                }
            }
        }
    }
}

#[test]
fn brute_force_counts() {
    for k in 1..=3 {
        for n in 2 * k + 1..=2 * k + 5 {
            let ctx = PolygonContext::new(n, k).unwrap();
            let all = enumerate_brute(ctx, &Guard::default()).unwrap();
            assert_eq!(BigUint::from(all.len()), determinant_count(n, k).unwrap(), "n={n} k={k}");
            if k == 1 {
                assert_eq!(all.len() as u128, catalan_u128(n - 2));
            }
            for t in &all {
                assert_eq!(t.len(), ctx.diagonal_count());
            }
        }
    }
}

#[test]
fn tree_and_brute_give_the_same_sets() {
    for (n, k) in [(8, 2), (9, 2), (9, 3), (10, 3)] {
        let tree = enumerate_tree(n, k, &Guard::default()).unwrap();
        let brute = enumerate_brute(PolygonContext::new(n, k).unwrap(), &Guard::default()).unwrap();
        assert_eq!(tree, brute, "n={n} k={k}");
    }
}

#[test]
fn tuple_counts() {
    for m in 1..=7 {
        assert_eq!(BigUint::from(enumerate_tuples(m, 1, &Guard::default()).unwrap().len()), catalan(m));
    }
    for k in 1..=3 {
        for n in 2 * k + 1..=2 * k + 5 {
            let tuples = enumerate_tuples(n - 2 * k, k, &Guard::default()).unwrap();
            assert_eq!(BigUint::from(tuples.len()), determinant_count(n, k).unwrap());
        }
    }
}

#[test]
fn exponent_round_trip() {
    for m in 0..=7 {
        for p in enumerate_paths(m) {
            assert_eq!(from_exponents(&p.to_exponents()), p);
        }
    }
}

#[test]
fn domination_is_a_partial_order() {
    for m in 1..=5 {
        let paths = enumerate_paths(m);
        let dom = |x, y| dominates(x, y).unwrap();
        for x in &paths {
            assert!(dom(x, x));
            for y in &paths {
                assert_eq!(dom(x, y), dominates_by_steps(x, y).unwrap());
                if dom(x, y) && dom(y, x) {
                    assert_eq!(x, y);
                }
                for z in &paths {
                    if dom(x, y) && dom(y, z) {
                        assert!(dom(x, z));
                    }
                }
            }
        }
    }
}
