use bihom_core::exact_linalg::{kernel_basis, rank, rref, solve};
use bihom_core::{Mat, Rat};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use std::collections::HashSet;

fn big(x: &Rat) -> BigRational {
    BigRational::new(x.numer(), x.denom())
}

fn from_big(x: &BigRational) -> Rat {
    Rat::from_bigints(x.numer().clone(), x.denom().clone())
}

/// Plain Gauss-Jordan over `BigRational`, no pivoting heuristics.
fn big_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = BigRational::one() / m[r][c].clone();
        let pivot: Vec<BigRational> = m[r].iter().map(|x| x * &inv).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        m[r] = pivot;
        r += 1;
    }
    r
}

fn rows_of(m: &Mat) -> Vec<Vec<BigRational>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(big).collect()).collect()
}

fn mat(rows: usize, cols: usize, v: &[i64]) -> Mat {
    Mat::from_vec(rows, cols, (0..rows * cols).map(|i| Rat::from_int(v[i % v.len()])).collect())
}

fn arb_mat() -> impl Strategy<Value = Mat> {
    (1usize..6, 1usize..6, prop::collection::vec(-3i64..=3, 36), 0usize..3).prop_map(|(r, c, v, low)| {
        let mut m = mat(r, c, &v);
        // Duplicate rows now and then so rank deficiency is common.
        for i in 0..low.min(r.saturating_sub(1)) {
            for j in 0..c {
                let x = m[(i, j)].clone();
                m[(i + 1, j)] = x;
            }
        }
        m
    })
}

fn arb_rat() -> impl Strategy<Value = Rat> {
    prop_oneof![
        (-20i64..=20, 1i64..=20).prop_map(|(n, d)| Rat::new(n, d)),
        (any::<i64>(), 1i64..=i64::MAX).prop_map(|(n, d)| Rat::new(n, d)),
        Just(Rat::from_int(i64::MIN)),
        Just(Rat::from_int(i64::MAX)),
    ]
}

#[test]
fn display_and_parse() {
    assert_eq!(Rat::new(-6, 4).to_string(), "-3/2");
    assert_eq!(Rat::new(4, 2).to_string(), "2");
    assert_eq!(Rat::parse_canonical("-3/2").unwrap(), Rat::new(-3, 2));
    let err = Rat::parse_canonical("4/2").unwrap_err();
    assert_eq!(err.suggestion.as_deref(), Some("2"));
    for bad in ["+1", "-0", "3/1", "1/-2", "", "1.5", "2/0"] {
        assert!(Rat::parse_canonical(bad).is_err(), "{:?}", bad);
    }
    assert!("2/0".parse::<Rat>().is_err());
    assert_eq!("+4/6".parse::<Rat>().unwrap(), Rat::new(2, 3));
    let huge = "123456789012345678901234567891/2";
    assert_eq!(Rat::parse_canonical(huge).unwrap().to_string(), huge);
}

#[test]
fn overflow_promotes_and_demotes() {
    let m = Rat::from_int(i64::MAX);
    let sq = &m * &m;
    assert_eq!(big(&sq), big(&m) * big(&m));
    assert_eq!(&sq / &m, m);
    let back = &(&m + &Rat::one()) - &Rat::one();
    assert_eq!(back, m);
    let mut set = HashSet::new();
    set.insert(back);
    assert!(set.contains(&Rat::from_int(i64::MAX)));
    assert_eq!(-Rat::from_int(i64::MIN), &Rat::from_int(i64::MAX) + &Rat::one());
}

#[test]
fn small_matrices() {
    let a = Mat::from_ints(&[&[1, 2], &[2, 4]]);
    assert_eq!(rank(&a), 1);
    assert!(a.inverse().is_none());
    let k = kernel_basis(&a);
    assert_eq!(k.cols(), 1);
    assert!(a.mul(&k).is_zero());
    assert_eq!(solve(&a, &[Rat::from_int(1), Rat::from_int(2)]).map(|x| a.mul_vec(&x)), Some(vec![Rat::from_int(1), Rat::from_int(2)]));
    assert!(solve(&a, &[Rat::from_int(1), Rat::from_int(0)]).is_none());
    let b = Mat::from_ints(&[&[2, 1], &[1, 1]]);
    assert_eq!(b.inverse().unwrap(), Mat::from_ints(&[&[1, -1], &[-1, 2]]));
    assert_eq!(rank(&Mat::zeros(0, 3)), 0);
    assert_eq!(kernel_basis(&Mat::zeros(0, 3)).cols(), 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_operations_match_big_rationals(a in arb_rat(), b in arb_rat()) {
        prop_assert_eq!(big(&(&a + &b)), big(&a) + big(&b));
        prop_assert_eq!(big(&(&a - &b)), big(&a) - big(&b));
        prop_assert_eq!(big(&(&a * &b)), big(&a) * big(&b));
        if !b.is_zero() {
            prop_assert_eq!(big(&(&a / &b)), big(&a) / big(&b));
        }
        prop_assert_eq!(a.cmp(&b), big(&a).cmp(&big(&b)));
        prop_assert_eq!(from_big(&big(&a)), a.clone());
        prop_assert_eq!(Rat::parse_canonical(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn rank_matches_gauss_jordan(m in arb_mat()) {
        let r = rank(&m);
        prop_assert_eq!(r, big_rank(&rows_of(&m)));
        prop_assert_eq!(r, rank(&m.transpose()));
        let k = kernel_basis(&m);
        prop_assert_eq!(k.cols() + r, m.cols());
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(rank(&k), k.cols());
    }

    #[test]
    fn rref_is_reduced(m in arb_mat()) {
        let (e, pivots) = rref(&m);
        prop_assert_eq!(pivots.len(), rank(&m));
        for (i, &c) in pivots.iter().enumerate() {
            prop_assert!(e[(i, c)].is_one());
            for j in 0..e.rows() {
                if j != i {
                    prop_assert!(e[(j, c)].is_zero());
                }
            }
            prop_assert!((0..c).all(|cc| e[(i, cc)].is_zero()));
        }
        for i in pivots.len()..e.rows() {
            prop_assert!(e.row(i).iter().all(Rat::is_zero));
        }
        prop_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(rref(&e).0, e.clone());
        prop_assert_eq!(m.rref().0, e);
    }

    #[test]
    fn inverse_exactly_when_full_rank(n in 1usize..5, v in prop::collection::vec(-2i64..=2, 16)) {
        let m = mat(n, n, &v);
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(rank(&m), n);
                prop_assert!(m.mul(&inv).is_identity() && inv.mul(&m).is_identity());
            }
            None => prop_assert!(rank(&m) < n),
        }
    }

    #[test]
    fn solve_is_exact(m in arb_mat(), b in prop::collection::vec(-3i64..=3, 6)) {
        let rhs: Vec<Rat> = (0..m.rows()).map(|i| Rat::from_int(b[i])).collect();
        let aug = m.hstack(&Mat::from_columns(m.rows(), std::slice::from_ref(&rhs)));
        match solve(&m, &rhs) {
            Some(x) => prop_assert_eq!(m.mul_vec(&x), rhs),
            None => prop_assert!(rank(&aug) > rank(&m)),
        }
        let x0: Vec<Rat> = (0..m.cols()).map(|i| Rat::from_int(b[i] - 1)).collect();
        let y = m.mul_vec(&x0);
        let x = solve(&m, &y).expect("image vector");
        prop_assert_eq!(m.mul_vec(&x), y);
        prop_assert_eq!(big_rank(&rows_of(&aug)), rank(&aug));
    }
}
