mod common;

use bihom_core::cochain_complex::{apply_delta, equivariant_basis, Cochain};
use bihom_core::omega_algebra::{OmegaAlgebra, RotaBaxterFamily};
use bihom_core::omega_bimodule::{induced_module_star, validate_bimodule, validate_rbf_bimodule, OmegaBimodule};
use bihom_core::rbf_cohomology::{chain_map_check, d_combined, partial, partial_expanded, phi, rbfa_cohomology_dims, RbfContext};
use bihom_core::{Mat, Monoid, Rat};
use common::*;
use proptest::prelude::*;

fn contexts() -> Vec<(&'static str, OmegaBimodule, RotaBaxterFamily)> {
    let mut out = Vec::new();
    let a = e1();
    let rb = e1_searched_r();
    out.push(("e1", OmegaBimodule::regular_rbf(&a, &rb).unwrap(), rb));
    let k = OmegaAlgebra::ground_field();
    let rb = RotaBaxterFamily::minus_weight(&k, r(1));
    out.push(("e0", OmegaBimodule::regular_rbf(&k, &rb).unwrap(), rb));
    let z = OmegaAlgebra::zero(Monoid::trivial(), 2);
    let rb = RotaBaxterFamily::new(r(0), vec![Mat::from_ints(&[&[0, 1], &[0, 0]])]);
    out.push(("zero2", OmegaBimodule::regular_rbf(&z, &rb).unwrap(), rb));
    let c2 = example(Monoid::cyclic(2));
    let rb = RotaBaxterFamily::minus_weight(&c2, r(2));
    out.push(("c2", OmegaBimodule::regular_rbf(&c2, &rb).unwrap(), rb));
    out
}

#[test]
fn phi_matches_the_subset_sum() {
    for (name, b, rb) in contexts() {
        for n in 0..=3 {
            let bs = equivariant_basis(&b, n);
            for j in 0..bs.dim() {
                let f = bs.element(j);
                assert_eq!(phi(&b, &rb, &f).unwrap(), naive_phi(&b, &rb, &f), "{} degree {} basis {}", name, n, j);
            }
        }
    }
}

#[test]
fn partial_is_delta_over_the_star_structures() {
    for (name, b, rb) in contexts() {
        let star = induced_module_star(&b, &rb).unwrap();
        assert_eq!(validate_bimodule(&star), Ok(()));
        for n in 0..=3 {
            let bs = equivariant_basis(&b, n);
            for j in 0..bs.dim() {
                let f = bs.element(j);
                let p = partial(&b, &rb, &f).unwrap();
                assert_eq!(p, naive_delta(&star, &f), "{} degree {} basis {}", name, n, j);
                assert_eq!(p, partial_expanded(&b, &rb, &f).unwrap());
            }
        }
    }
}

#[test]
fn reduced_cases() {
    // R = 0, T = 0, λ = 1: ∂¹f(a, b) = −f(ab).
    let a = e1();
    let rb = RotaBaxterFamily::zero(&a, r(1));
    let b = OmegaBimodule::regular(&a, Some(vec![Mat::zeros(2, 2)])).unwrap();
    let bs = equivariant_basis(&b, 1);
    for j in 0..bs.dim() {
        let f = bs.element(j);
        let want = tabulate(a.omega(), 2, 2, 2, |_, idx| {
            let ab = bil(a.mu(0, 0), &unit(2, idx[0]), &unit(2, idx[1]));
            scale(&eval(&f, a.omega(), &[0], &[ab]), &r(-1))
        });
        assert_eq!(partial(&b, &rb, &f).unwrap(), want);
        assert!(phi(&b, &rb, &f).unwrap().is_zero());
    }
    // T = 0, λ = 0: Φ²f(a, b) = f(Ra, Rb).
    let z = OmegaAlgebra::zero(Monoid::trivial(), 2);
    let rb = RotaBaxterFamily::new(r(0), vec![Mat::from_ints(&[&[0, 1], &[0, 0]])]);
    let b = OmegaBimodule::regular(&z, Some(vec![Mat::zeros(2, 2)])).unwrap();
    let bs = equivariant_basis(&b, 2);
    for j in 0..bs.dim() {
        let f = bs.element(j);
        let want = tabulate(z.omega(), 2, 2, 2, |_, idx| {
            let (x, y) = (mat_vec(&rb.r[0], &unit(2, idx[0])), mat_vec(&rb.r[0], &unit(2, idx[1])));
            eval(&f, z.omega(), &[0, 0], &[x, y])
        });
        assert_eq!(phi(&b, &rb, &f).unwrap(), want);
    }
}

#[test]
fn chain_map_and_combined_square() {
    for (name, b, rb) in contexts() {
        let ctx = RbfContext::new(&b, &rb, 4).unwrap();
        assert_eq!(chain_map_check(&ctx, 3).unwrap(), Ok(()), "{}", name);
        for n in 0..=2 {
            let prod = ctx.combined_matrix(n + 1).unwrap().mul(&ctx.combined_matrix(n).unwrap());
            assert!(prod.is_zero(), "{}: d{}·d{}", name, n + 1, n);
        }
        assert_eq!(validate_rbf_bimodule(&b, &rb).unwrap(), Ok(()));
    }
}

#[test]
fn dropping_or_flipping_the_t_terms_breaks_the_chain_map() {
    let mut broken = [0usize; 2];
    for (_, b, rb) in contexts() {
        let star = induced_module_star(&b, &rb).unwrap();
        let b0 = b.with_t(Some(vec![Mat::zeros(b.dim(), b.dim()); b.omega().size()])).unwrap();
        // f(R, …, R) alone, and with the T-terms added instead of subtracted.
        let only_r = |f: &Cochain| naive_phi(&b0, &rb, f);
        let plus_t = |f: &Cochain| only_r(f).scale(&r(2)).sub(&naive_phi(&b, &rb, f));
        for n in 1..=2 {
            let bs = equivariant_basis(&b, n);
            for j in 0..bs.dim() {
                let f = bs.element(j);
                let df = naive_delta(&b, &f);
                assert_eq!(naive_delta(&star, &naive_phi(&b, &rb, &f)), naive_phi(&b, &rb, &df));
                broken[0] += usize::from(naive_delta(&star, &only_r(&f)) != only_r(&df));
                broken[1] += usize::from(naive_delta(&star, &plus_t(&f)) != plus_t(&df));
            }
        }
    }
    assert!(broken[0] > 0 && broken[1] > 0, "{:?}", broken);
}

#[test]
fn degree_one_pairs_component_wise() {
    for (name, b, rb) in contexts() {
        let ctx = RbfContext::new(&b, &rb, 2).unwrap();
        for j in 0..ctx.combined_dim(1) {
            let coeffs: Vec<Rat> = (0..ctx.combined_dim(1)).map(|i| if i == j { r(1) } else { r(0) }).collect();
            let x = ctx.combine(1, &coeffs);
            let d = d_combined(&ctx, &x).unwrap();
            let g = x.rbf.as_ref().unwrap();
            assert_eq!(d.alg, naive_delta(&b, &x.alg), "{}", name);
            let star = induced_module_star(&b, &rb).unwrap();
            let want = naive_delta(&star, g).add(&naive_phi(&b, &rb, &x.alg)).neg();
            assert_eq!(d.rbf.unwrap(), want, "{}", name);
        }
    }
}

#[test]
fn degree_zero_differential() {
    let (_, b, rb) = contexts().swap_remove(0);
    let ctx = RbfContext::new(&b, &rb, 1).unwrap();
    for j in 0..ctx.combined_dim(0) {
        let coeffs: Vec<Rat> = (0..ctx.combined_dim(0)).map(|i| if i == j { r(1) } else { r(0) }).collect();
        let x = ctx.combine(0, &coeffs);
        let d = d_combined(&ctx, &x).unwrap();
        assert_eq!(d.alg, apply_delta(&b, &x.alg).unwrap());
        assert_eq!(d.rbf.unwrap(), x.alg.neg());
    }
}

#[test]
fn frozen_combined_cohomology() {
    // Zero algebra k, R = 0, T = 0, λ = 1: every δ, ∂ and Φⁿ (n ≥ 1) vanishes,
    // only d⁰(m) = (0, −m) survives, so H_RBFA = (0, 1, 2, 2).
    let z = OmegaAlgebra::zero(Monoid::trivial(), 1);
    let b = OmegaBimodule::regular(&z, Some(vec![Mat::zeros(1, 1)])).unwrap();
    let ctx = RbfContext::new(&b, &RotaBaxterFamily::zero(&z, r(1)), 4).unwrap();
    let rep = rbfa_cohomology_dims(&ctx, 3).unwrap();
    assert_eq!(rep.rbfa.h(), [0, 1, 2, 2]);
    assert_eq!(rep.alg.h(), [1, 1, 1, 1]);
    assert_eq!(rep.rbf.h(), [1, 1, 1, 1]);
    for (n, d) in rep.rbfa.degrees.iter().enumerate() {
        assert_eq!(d.cochains, rep.alg.degrees[n].cochains + if n == 0 { 0 } else { rep.rbf.degrees[n - 1].cochains });
    }

    // k with R = −id, λ = 1, T = R: a ⋆ b = −ab, the induced actions vanish,
    // Φⁿ = 0 for n ≥ 1, and δ, ∂ alternate between [1] and [0] out of phase.
    let k = OmegaAlgebra::ground_field();
    let rb = RotaBaxterFamily::minus_weight(&k, r(1));
    let ctx = RbfContext::regular(&k, &rb, 3).unwrap();
    let rep = rbfa_cohomology_dims(&ctx, 2).unwrap();
    assert_eq!(rep.alg.h(), [1, 0, 0]);
    assert_eq!(rep.rbf.h(), [1, 0, 0]);
    assert_eq!(rep.rbfa.h(), [0, 0, 0]);
    for n in 1..=2 {
        assert!(ctx.phi_matrix(n).unwrap().is_zero());
    }
    assert_eq!(ctx.partial_matrix(1).unwrap(), Mat::identity(1));
    assert!(ctx.partial_matrix(2).unwrap().is_zero());
}

#[test]
fn zero_dimensional_coefficients() {
    let a = e1();
    let rb = e1_searched_r();
    let b = OmegaBimodule::trivial(&a, 0, vec![Mat::zeros(0, 0)], vec![Mat::zeros(0, 0)], Some(vec![Mat::zeros(0, 0)])).unwrap();
    let ctx = RbfContext::new(&b, &rb, 3).unwrap();
    let rep = rbfa_cohomology_dims(&ctx, 2).unwrap();
    assert_eq!(rep.rbfa.h(), [0, 0, 0]);
    assert_eq!(rep.alg.h(), [0, 0, 0]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn d_squared_on_random_pairs(which in 0usize..4, n in 0usize..3, c in prop::collection::vec(-2i64..=2, 64)) {
        let (_, b, rb) = contexts().swap_remove(which);
        let ctx = RbfContext::new(&b, &rb, 3).unwrap();
        let coeffs: Vec<Rat> = (0..ctx.combined_dim(n)).map(|i| r(c.get(i).copied().unwrap_or(0))).collect();
        let x = ctx.combine(n, &coeffs);
        let dx = d_combined(&ctx, &x).unwrap();
        prop_assert!(d_combined(&ctx, &dx).unwrap().is_zero());
    }

    #[test]
    fn kernel_splits_into_its_two_conditions(c in prop::collection::vec(-2i64..=2, 16)) {
        let (_, b, rb) = contexts().swap_remove(0);
        let ctx = RbfContext::new(&b, &rb, 3).unwrap();
        let ker = ctx.cocycle_basis(2).unwrap();
        let mut x = ctx.combine(2, &vec![r(0); ctx.combined_dim(2)]);
        for (k, v) in ker.iter().enumerate() {
            x = x.add(&v.scale(&r(c[k % c.len()])));
        }
        prop_assert!(apply_delta(&b, &x.alg).unwrap().is_zero());
        let h: &Cochain = x.rbf.as_ref().unwrap();
        let star = induced_module_star(&b, &rb).unwrap();
        prop_assert_eq!(apply_delta(&star, h).unwrap().add(&phi(&b, &rb, &x.alg).unwrap()), Cochain::zeros(1, 2, 2, 2));
    }
}
