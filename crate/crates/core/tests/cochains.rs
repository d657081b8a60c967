mod common;

use bihom_core::cochain_complex::{apply_delta, cohomology_dims, delta_matrix, equivariant_basis, is_coboundary, is_cocycle, Cochain, Complex};
use bihom_core::omega_algebra::{ExampleParams, OmegaAlgebra};
use bihom_core::omega_bimodule::{example_family_module, OmegaBimodule};
use bihom_core::{Mat, Monoid, Rat};
use common::*;
use proptest::prelude::*;

fn modules() -> Vec<(&'static str, OmegaBimodule)> {
    let t = Monoid::trivial();
    let reg = |a: &OmegaAlgebra| OmegaBimodule::regular(a, None).unwrap();
    vec![
        ("e0", reg(&OmegaAlgebra::ground_field())),
        ("e1", reg(&e1())),
        ("e1_module", example_family_module(&t, &ExampleParams::ones(&t)).unwrap()),
        ("c2", reg(&example(Monoid::cyclic(2)))),
        ("idempotent", reg(&example(Monoid::idempotent_pair()))),
        ("dual", reg(&dual_numbers())),
        ("zero2", reg(&OmegaAlgebra::zero(Monoid::cyclic(2), 2))),
    ]
}

#[test]
fn delta_agrees_with_pointwise_evaluation() {
    for (name, b) in modules() {
        for n in 0..=3 {
            let bs = equivariant_basis(&b, n);
            for j in 0..bs.dim() {
                let f = bs.element(j);
                assert_eq!(apply_delta(&b, &f).unwrap(), naive_delta(&b, &f), "{} degree {} basis {}", name, n, j);
            }
        }
    }
}

#[test]
fn delta_squares_to_zero_pointwise() {
    for (name, b) in modules() {
        for n in 0..=2 {
            let bs = equivariant_basis(&b, n);
            for j in 0..bs.dim() {
                let once = naive_delta(&b, &bs.element(j));
                assert!(naive_delta(&b, &once).is_zero(), "{} degree {} basis {}", name, n, j);
            }
        }
    }
}

#[test]
fn constraint_free_structure_maps_give_the_full_space() {
    let a = OmegaAlgebra::zero(Monoid::cyclic(2), 2);
    let b = OmegaBimodule::regular(&a, None).unwrap();
    for n in 0..=3 {
        assert_eq!(equivariant_basis(&b, n).dim(), 2usize.pow(n as u32) * 2usize.pow(n as u32) * 2);
    }
}

#[test]
fn delta_of_identity_is_the_product() {
    for a in [e1(), example(Monoid::cyclic(2)), dual_numbers()] {
        let b = OmegaBimodule::regular(&a, None).unwrap();
        let id = Cochain::identity(a.omega().size(), a.dim());
        assert_eq!(apply_delta(&b, &id).unwrap(), Cochain::from_products(a.omega().size(), a.mu_all()));
    }
}

#[test]
fn frozen_dimensions() {
    let reg = |a: &OmegaAlgebra| OmegaBimodule::regular(a, None).unwrap();
    // dim C¹ of E1 and the cohomology tables from the dense-rank oracle.
    assert_eq!(equivariant_basis(&reg(&e1()), 1).dim(), 2);
    let h = |b: &OmegaBimodule| cohomology_dims(b, 3).unwrap().h();
    assert_eq!(h(&reg(&OmegaAlgebra::ground_field())), [1, 0, 0, 0]);
    assert_eq!(h(&reg(&OmegaAlgebra::zero(Monoid::trivial(), 1))), [1, 1, 1, 1]);
    assert_eq!(h(&reg(&e1())), [0, 0, 2, 4]);
    assert_eq!(h(&reg(&example(Monoid::cyclic(2)))), [0, 0, 4, 16]);
    assert_eq!(h(&reg(&example(Monoid::idempotent_pair()))), [0, 0, 4, 16]);
    let t = Monoid::trivial();
    assert_eq!(h(&example_family_module(&t, &ExampleParams::ones(&t)).unwrap()), [1, 0, 0, 0]);
    let rep = cohomology_dims(&reg(&e1()), 2).unwrap();
    let cochains: Vec<_> = rep.degrees.iter().map(|d| d.cochains).collect();
    assert_eq!(cochains, [1, 2, 4]);
}

#[test]
fn ground_field_delta_matrices() {
    let b = OmegaBimodule::regular(&OmegaAlgebra::ground_field(), None).unwrap();
    assert_eq!(delta_matrix(&b, 0).unwrap(), Mat::zeros(1, 1));
    // δ¹f(a, b) = a f(b) − f(ab) + f(a) b = f(1)·ab on k, so δ¹ is [1].
    assert_eq!(delta_matrix(&b, 1).unwrap(), Mat::identity(1));
    assert_eq!(delta_matrix(&b, 2).unwrap(), Mat::zeros(1, 1));
}

#[test]
fn zero_algebra_differentials_vanish() {
    let b = OmegaBimodule::regular(&OmegaAlgebra::zero(Monoid::cyclic(2), 2), None).unwrap();
    for n in 0..=2 {
        assert!(delta_matrix(&b, n).unwrap().is_zero());
    }
}

#[test]
fn kernel_elements_satisfy_the_two_cocycle_identity() {
    let a = e1();
    let b = OmegaBimodule::regular(&a, None).unwrap();
    let c = Complex::new(&b, 3);
    let k = c.delta_matrix(2).unwrap().kernel_basis();
    assert!(k.cols() > 0);
    for j in 0..k.cols() {
        let h = c.basis(2).combine(&k.column(j));
        // p(x)·H(y, z) − H(xy, q z) + H(p x, yz) − H(x, y)·q(z) = 0
        for (x, y, z) in [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)] {
            let (ex, ey, ez) = (unit(2, x), unit(2, y), unit(2, z));
            let m = a.mu(0, 0);
            let hv = |u: &[Rat], v: &[Rat]| eval(&h, a.omega(), &[0, 0], &[u.to_vec(), v.to_vec()]);
            let px = mat_vec(a.p(0), &ex);
            let qz = mat_vec(a.q(0), &ez);
            let s = add(&sub(&bil(m, &px, &hv(&ey, &ez)), &hv(&bil(m, &ex, &ey), &qz)), &sub(&hv(&px, &bil(m, &ey, &ez)), &bil(m, &hv(&ex, &ey), &qz)));
            assert!(s.iter().all(Rat::is_zero), "kernel element {} at ({}, {}, {})", j, x, y, z);
        }
        assert!(is_cocycle(&b, &h).unwrap());
    }
}

#[test]
fn non_equivariant_input_is_refused() {
    let a = e1();
    let b = OmegaBimodule::regular(&a, None).unwrap();
    let mut f = Cochain::zeros(1, 1, 2, 2);
    f.block_mut(0)[0] = r(1);
    let err = apply_delta(&b, &f).unwrap_err();
    assert!(err.to_string().contains("equivariant"), "{}", err);
}

#[test]
fn zero_is_a_coboundary_of_zero() {
    let b = OmegaBimodule::regular(&e1(), None).unwrap();
    let z = Cochain::zeros(1, 2, 2, 2);
    assert!(is_cocycle(&b, &z).unwrap());
    assert_eq!(is_coboundary(&b, &z).unwrap(), Some(Cochain::zeros(1, 1, 2, 2)));
}

fn coeffs(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, n)
}

fn take(x: &[i64], dim: usize) -> Vec<Rat> {
    (0..dim).map(|i| r(x.get(i).copied().unwrap_or(0))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn delta_is_linear(which in 0usize..7, n in 0usize..3, x in coeffs(64), y in coeffs(64), s in -3i64..=3) {
        let (_, b) = modules().swap_remove(which);
        let bs = equivariant_basis(&b, n);
        let f = bs.combine(&take(&x, bs.dim()));
        let g = bs.combine(&take(&y, bs.dim()));
        let lhs = apply_delta(&b, &f.scale(&r(s)).add(&g)).unwrap();
        let rhs = apply_delta(&b, &f).unwrap().scale(&r(s)).add(&apply_delta(&b, &g).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coboundaries_have_preimages(which in 0usize..7, n in 0usize..3, x in coeffs(64)) {
        let (_, b) = modules().swap_remove(which);
        let bs = equivariant_basis(&b, n);
        let g = bs.combine(&take(&x, bs.dim()));
        let f = apply_delta(&b, &g).unwrap();
        let pre = is_coboundary(&b, &f).unwrap().expect("δg is a coboundary");
        prop_assert_eq!(apply_delta(&b, &pre).unwrap(), f);
    }
}
