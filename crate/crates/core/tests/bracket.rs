mod common;

use bihom_core::cochain_complex::{apply_delta, equivariant_basis, Cochain, EquivariantBasis};
use bihom_core::gerstenhaber::{bracket, circ_full, circ_i, delta_via_bracket, mc_residual};
use bihom_core::omega_algebra::{validate_algebra, OmegaAlgebra};
use bihom_core::omega_bimodule::OmegaBimodule;
use bihom_core::{Monoid, Rat};
use common::*;
use proptest::prelude::*;

fn algebras() -> Vec<OmegaAlgebra> {
    vec![e1(), example(Monoid::cyclic(2)), example(Monoid::idempotent_pair()), dual_numbers(), OmegaAlgebra::ground_field()]
}

fn mu_of(a: &OmegaAlgebra) -> Cochain {
    Cochain::from_products(a.omega().size(), a.mu_all())
}

fn sign(e: usize) -> Rat {
    if e.is_multiple_of(2) {
        r(1)
    } else {
        r(-1)
    }
}

#[test]
fn insertion_matches_pointwise_evaluation() {
    for a in algebras() {
        let b = OmegaBimodule::regular(&a, None).unwrap();
        let bases: Vec<EquivariantBasis> = (1..=3).map(|n| equivariant_basis(&b, n)).collect();
        for fb in &bases[..2] {
            for gb in &bases[..2] {
                for jf in 0..fb.dim().min(4) {
                    for jg in 0..gb.dim().min(4) {
                        let (f, g) = (fb.element(jf), gb.element(jg));
                        for i in 1..=f.degree() {
                            assert_eq!(circ_i(&a, &f, &g, i).unwrap(), naive_circ(&a, &f, &g, i));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn mu_circ_one_mu_on_e1() {
    let a = e1();
    let mu = mu_of(&a);
    let got = circ_i(&a, &mu, &mu, 1).unwrap();
    let want = tabulate(a.omega(), 3, 2, 2, |_, idx| {
        let (x, y, z) = (unit(2, idx[0]), unit(2, idx[1]), unit(2, idx[2]));
        bil(a.mu(0, 0), &bil(a.mu(0, 0), &x, &y), &mat_vec(a.q(0), &z))
    });
    assert_eq!(got, want);
    assert_eq!(circ_full(&a, &mu, &[mu.clone(), Cochain::identity(1, 2)]).unwrap(), got);
}

#[test]
fn identity_is_neutral_and_zero_absorbs() {
    for a in algebras() {
        let b = OmegaBimodule::regular(&a, None).unwrap();
        let id = Cochain::identity(a.omega().size(), a.dim());
        let f = equivariant_basis(&b, 2).combine(&vec![r(1); equivariant_basis(&b, 2).dim()]);
        for i in 1..=2 {
            assert_eq!(circ_i(&a, &f, &id, i).unwrap(), f);
            assert!(circ_i(&a, &f.scale(&r(0)), &id, i).unwrap().is_zero());
        }
        assert_eq!(circ_full(&a, &f, &[id.clone(), id.clone()]).unwrap(), f);
        assert!(circ_i(&a, &f, &id, 3).is_err());
    }
}

#[test]
fn bracket_of_mu_with_itself() {
    for a in algebras() {
        let mu = mu_of(&a);
        let two = r(2);
        let want = circ_i(&a, &mu, &mu, 1).unwrap().sub(&circ_i(&a, &mu, &mu, 2).unwrap()).scale(&two);
        assert_eq!(bracket(&a, &mu, &mu).unwrap(), want);
        assert!(mc_residual(a.omega(), a.p_all(), a.q_all(), &mu).unwrap().is_zero());
    }
}

#[test]
fn bracket_with_a_degree_three_cochain() {
    let a = e1();
    let b = OmegaBimodule::regular(&a, None).unwrap();
    let mu = mu_of(&a);
    let bs = equivariant_basis(&b, 3);
    for j in 0..bs.dim() {
        let f = bs.element(j);
        let c = |x: &Cochain, y: &Cochain, i| circ_i(&a, x, y, i).unwrap();
        let want = c(&mu, &f, 1).sub(&c(&f, &mu, 1)).add(&c(&mu, &f, 2)).add(&c(&f, &mu, 2)).sub(&c(&f, &mu, 3));
        // Five terms: the sign rule gives f ⋄₃ μ a minus sign.
        assert_eq!(bracket(&a, &mu, &f).unwrap(), want);
    }
}

#[test]
fn perturbed_product_is_not_maurer_cartan() {
    let a = e1();
    let mut mu = a.mu(0, 0).clone();
    mu.set(1, 1, 0, r(1));
    mu.set(1, 1, 1, r(0));
    let cand = Cochain::from_products(1, &[mu.clone()]);
    assert!(!mc_residual(a.omega(), a.p_all(), a.q_all(), &cand).unwrap().is_zero());
    assert!(validate_algebra(&a.with_mu(vec![mu]).unwrap()).is_err());
    let zero = Cochain::zeros(1, 2, 2, 2);
    assert!(mc_residual(a.omega(), a.p_all(), a.q_all(), &zero).unwrap().is_zero());
}

#[test]
fn bracket_form_of_the_coboundary() {
    for a in algebras() {
        let b = OmegaBimodule::regular(&a, None).unwrap();
        for n in 1..=3 {
            let bs = equivariant_basis(&b, n);
            for j in 0..bs.dim() {
                let f = bs.element(j);
                assert_eq!(delta_via_bracket(&a, &f).unwrap(), apply_delta(&b, &f).unwrap());
            }
        }
    }
}

fn pick(bs: &EquivariantBasis, c: &[i64]) -> Cochain {
    bs.combine(&(0..bs.dim()).map(|i| r(c.get(i).copied().unwrap_or(0))).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn graded_lie_laws(
        which in 0usize..4,
        degs in (1usize..=3, 1usize..=3, 1usize..=3),
        cf in prop::collection::vec(-2i64..=2, 16),
        cg in prop::collection::vec(-2i64..=2, 16),
        ch in prop::collection::vec(-2i64..=2, 16),
    ) {
        let a = algebras().swap_remove(which);
        let b = OmegaBimodule::regular(&a, None).unwrap();
        let f = pick(&equivariant_basis(&b, degs.0), &cf);
        let g = pick(&equivariant_basis(&b, degs.1), &cg);
        let h = pick(&equivariant_basis(&b, degs.2), &ch);
        let (x, y, z) = (degs.0 - 1, degs.1 - 1, degs.2 - 1);
        let br = |u: &Cochain, v: &Cochain| bracket(&a, u, v).unwrap();
        prop_assert!(br(&f, &g).add(&br(&g, &f).scale(&sign(x * y))).is_zero());
        let mut jac = br(&f, &br(&g, &h)).scale(&sign(x * z));
        jac.add_scaled(&sign(y * x), &br(&g, &br(&h, &f)));
        jac.add_scaled(&sign(z * y), &br(&h, &br(&f, &g)));
        prop_assert!(jac.is_zero());
    }
}
