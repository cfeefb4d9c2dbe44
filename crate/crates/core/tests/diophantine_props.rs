mod common;

use std::collections::HashMap;

use agglom_core::diophantine::{dedup_transfer, for_each_in_box, length_set_dm, DiophantineMonoid};
use agglom_core::Matrix;
use proptest::collection::vec;
use proptest::prelude::*;

fn in_kernel(rows: &[Vec<i64>], x: &[u64]) -> bool {
    rows.iter().all(|r| r.iter().zip(x).map(|(a, &b)| a * b as i64).sum::<i64>() == 0)
}

fn below(y: &[u64], x: &[u64]) -> bool {
    y.iter().zip(x).all(|(a, b)| a <= b)
}

fn minus(x: &[u64], y: &[u64]) -> Vec<u64> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// Every vector `y` with `0 <= y <= x`.
fn boxes_below(x: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for &b in x {
        out = out.into_iter().flat_map(|p| (0..=b).map(move |v| [p.clone(), vec![v]].concat())).collect();
    }
    out
}

/// Whether `x` is a sum of basis elements, by memoised search.
fn generated(basis: &[Vec<u64>], x: &[u64], memo: &mut HashMap<Vec<u64>, bool>) -> bool {
    if x.iter().all(|&v| v == 0) {
        return true;
    }
    if let Some(&r) = memo.get(x) {
        return r;
    }
    let r = basis.iter().any(|h| below(h, x) && generated(basis, &minus(x, h), memo));
    memo.insert(x.to_vec(), r);
    r
}

/// Integer matrices with `1..=4` rows and `1..=6` columns, entries in `[-2, 2]`.
fn arb_rows() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=6).prop_flat_map(|(r, c)| vec(vec(-2i64..=2, c), r))
}

/// As [`arb_rows`] with column `j` copied onto column `k`.
fn arb_rows_with_duplicate() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 2usize..=6).prop_flat_map(|(r, c)| (vec(vec(-2i64..=2, c), r), 0..c, 0..c)).prop_filter_map(
        "distinct columns",
        |(mut rows, j, k)| {
            if j == k {
                return None;
            }
            for row in &mut rows {
                row[k] = row[j];
            }
            Some(rows)
        },
    )
}

fn monoid(rows: &[Vec<i64>]) -> DiophantineMonoid {
    DiophantineMonoid::new(Matrix::from_rows(rows.to_vec(), None).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hilbert_basis_elements_are_atoms(rows in arb_rows()) {
        let m = monoid(&rows);
        prop_assume!(m.hilbert_basis().complete && !m.hilbert_basis().elements.is_empty());
        for h in &m.hilbert_basis().elements {
            prop_assert!(in_kernel(&rows, h) && h.iter().any(|&v| v > 0));
            let proper = boxes_below(h)
                .into_iter()
                .filter(|y| y.iter().any(|&v| v > 0) && y != h)
                .any(|y| in_kernel(&rows, &y) && in_kernel(&rows, &minus(h, &y)));
            prop_assert!(!proper, "{:?} decomposes", h);
        }
    }

    #[test]
    fn hilbert_basis_generates_the_box(rows in arb_rows()) {
        let m = monoid(&rows);
        prop_assume!(m.hilbert_basis().complete && !m.hilbert_basis().elements.is_empty());
        let basis = &m.hilbert_basis().elements;
        let mut memo = HashMap::new();
        let mut ok = true;
        for_each_in_box(rows[0].len(), 3, |x| {
            let xi: Vec<i64> = x.iter().map(|&v| v as i64).collect();
            let member = in_kernel(&rows, x);
            ok &= m.membership(&xi).unwrap() == member;
            ok &= !member || generated(basis, x, &mut memo);
        });
        prop_assert!(ok);
    }

    #[test]
    fn duplicate_columns_give_a_transfer(rows in arb_rows_with_duplicate()) {
        let m = monoid(&rows);
        prop_assume!(m.hilbert_basis().complete && !m.hilbert_basis().elements.is_empty());
        let t = dedup_transfer(&m);
        prop_assume!(t.target().hilbert_basis().complete);
        prop_assert!(!t.is_identity());
        let target_rows = t.target().matrix().rows();
        let n = rows[0].len();

        // Surjective on the target box, with the section as preimage.
        let mut ok = true;
        for_each_in_box(t.groups().len(), 3, |y| {
            if in_kernel(&target_rows, y) {
                let x = t.section(y);
                ok &= in_kernel(&rows, &x) && t.theta(&x) == y;
            }
        });
        prop_assert!(ok);

        for_each_in_box(n, 2, |x| {
            if !in_kernel(&rows, x) {
                return;
            }
            let tx = t.theta(x);
            ok &= tx.iter().any(|&v| v > 0) || x.iter().all(|&v| v == 0);
            // Every split of θ(x) lifts to a split of x.
            for s in boxes_below(&tx) {
                let rest = minus(&tx, &s);
                if !in_kernel(&target_rows, &s) || !in_kernel(&target_rows, &rest) {
                    continue;
                }
                ok &= boxes_below(x)
                    .iter()
                    .any(|u| t.theta(u) == s && in_kernel(&rows, u) && in_kernel(&rows, &minus(x, u)));
            }
            // Factorizations of θ(x) lift through the library as well.
            let zs = t.target().factorizations(&tx, None).unwrap();
            for z in &zs.items {
                let lifted = t.lift_indices(x, z).unwrap();
                let mut sum = vec![0u64; n];
                for &i in &lifted {
                    for (s, v) in sum.iter_mut().zip(&m.hilbert_basis().elements[i]) {
                        *s += v;
                    }
                }
                ok &= sum == x && lifted.len() == z.len();
            }
            ok &= length_set_dm(&m, x).unwrap() == length_set_dm(t.target(), &tx).unwrap();
        });
        prop_assert!(ok);
    }
}
