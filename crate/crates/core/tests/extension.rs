mod common;

use bihom_core::cochain_complex::{equivariant_basis, Cochain};
use bihom_core::exact_linalg::solve;
use bihom_core::extension::{
    build_extension, check_extension_iso, compare_extensions, extract_cocycle, normalize, validate_presentation, CocyclePair,
};
use bihom_core::omega_algebra::{check_rota_baxter, validate_algebra, OmegaAlgebra, RotaBaxterFamily};
use bihom_core::omega_bimodule::{rbf_semidirect, semidirect_product, validate_bimodule, validate_rbf_bimodule, OmegaBimodule};
use bihom_core::rbf_cohomology::{d_combined, CombinedCochain, RbfContext};
use bihom_core::{Mat, Monoid, Rat};
use common::*;
use proptest::prelude::*;

fn contexts() -> Vec<RbfContext> {
    let k = OmegaAlgebra::ground_field();
    let z = OmegaAlgebra::zero(Monoid::trivial(), 2);
    vec![
        RbfContext::regular(&e1(), &e1_searched_r(), 3).unwrap(),
        RbfContext::regular(&k, &RotaBaxterFamily::minus_weight(&k, r(1)), 3).unwrap(),
        RbfContext::regular(&z, &RotaBaxterFamily::new(r(0), vec![Mat::from_ints(&[&[0, 1], &[0, 0]])]), 3).unwrap(),
    ]
}

fn shift_of(ctx: &RbfContext, eta: &Cochain) -> CombinedCochain {
    let b0 = ctx.rbf_complex().basis(0);
    let zero = b0.combine(&vec![r(0); b0.dim()]);
    d_combined(ctx, &CombinedCochain::new(eta.clone(), Some(zero)).unwrap()).unwrap()
}

fn semidirect_agrees(b: &OmegaBimodule, rb: &RotaBaxterFamily) -> bool {
    let module_ok = validate_bimodule(b).is_ok();
    let semi = semidirect_product(b);
    if validate_algebra(&semi).is_ok() != module_ok {
        return false;
    }
    if !module_ok {
        return true;
    }
    let (total, t_e) = rbf_semidirect(b, rb).unwrap();
    let rbf_ok = validate_rbf_bimodule(b, rb).unwrap().is_ok();
    let total_ok = check_rota_baxter(&total, &t_e).unwrap().is_ok();
    total_ok == rbf_ok
}

#[test]
fn named_modules_give_valid_semidirect_products() {
    for ctx in contexts() {
        assert!(semidirect_agrees(ctx.module(), ctx.rb()));
        let (total, t_e) = rbf_semidirect(ctx.module(), ctx.rb()).unwrap();
        assert_eq!(validate_algebra(&total), Ok(()));
        assert_eq!(check_rota_baxter(&total, &t_e).unwrap(), Ok(()));
    }
}

#[test]
fn zero_pair_builds_the_semidirect_product() {
    for ctx in contexts() {
        let built = build_extension(&ctx, &CocyclePair::zero(&ctx)).unwrap();
        assert!(built.total_validates && built.cocycle);
        let (semi, t_e) = rbf_semidirect(ctx.module(), ctx.rb()).unwrap();
        assert_eq!(built.extension.total, semi);
        assert_eq!(built.extension.t_e, t_e);
        assert_eq!(validate_presentation(&built.extension), Ok(()));
    }
}

#[test]
fn cocycles_round_trip_through_extensions() {
    for ctx in contexts() {
        for x in ctx.cocycle_basis(2).unwrap() {
            let pair = CocyclePair::from_combined(&x).unwrap();
            let built = build_extension(&ctx, &pair).unwrap();
            assert!(built.total_validates && built.cocycle);
            let ex = extract_cocycle(&built.extension).unwrap();
            assert_eq!(ex.pair, pair);
            assert_eq!(&ex.algebra, ctx.algebra());
            assert_eq!(&ex.rb, ctx.rb());
            assert_eq!(&ex.module, ctx.module());
        }
    }
}

#[test]
fn extension_product_on_the_cross_terms() {
    let ctx = contexts().swap_remove(0);
    let x = ctx.cocycle_basis(2).unwrap().swap_remove(0);
    let pair = CocyclePair::from_combined(&x).unwrap();
    let e = build_extension(&ctx, &pair).unwrap().extension;
    let (a, b) = (ctx.algebra(), ctx.module());
    let om = a.omega();
    let mu = e.total.mu(0, 0);
    for i in 0..2 {
        for j in 0..2 {
            let got = bil(mu, &unit(4, i), &unit(4, j));
            let mut want = bil(a.mu(0, 0), &unit(2, i), &unit(2, j));
            want.extend(eval(&pair.psi, om, &[0, 0], &[unit(2, i), unit(2, j)]));
            assert_eq!(got, want);
            let left = bil(mu, &unit(4, i), &unit(4, 2 + j));
            let mut want = vec![r(0); 2];
            want.extend(bil(b.left(0, 0), &unit(2, i), &unit(2, j)));
            assert_eq!(left, want);
            assert!(bil(mu, &unit(4, 2 + i), &unit(4, 2 + j)).iter().all(Rat::is_zero));
        }
    }
}

#[test]
fn section_shift_moves_the_pair_by_a_coboundary() {
    for ctx in contexts() {
        let bs = equivariant_basis(ctx.module(), 1);
        let pairs = ctx.cocycle_basis(2).unwrap();
        let base = pairs.first().map(|x| CocyclePair::from_combined(x).unwrap()).unwrap_or_else(|| CocyclePair::zero(&ctx));
        let e = build_extension(&ctx, &base).unwrap().extension;
        for j in 0..bs.dim() {
            let eta = bs.element(j);
            let shifted = e.with_section_shift(&eta).unwrap();
            assert_eq!(validate_presentation(&shifted), Ok(()));
            let ex = extract_cocycle(&shifted).unwrap();
            let d = shift_of(&ctx, &eta);
            assert_eq!(ex.pair.psi, base.psi.add(&d.alg));
            assert_eq!(ex.pair.chi, base.chi.add(d.rbf.as_ref().unwrap()));
            let cmp = compare_extensions(&e, &shifted).unwrap();
            assert!(cmp.cohomologous);
            let phi = cmp.iso.unwrap();
            assert_eq!(check_extension_iso(&e, &shifted, &phi).unwrap(), Ok(()));
            assert_eq!(extract_cocycle(&normalize(&shifted).unwrap()).unwrap().pair, ex.pair);
        }
    }
}

#[test]
fn non_cohomologous_pairs_are_told_apart() {
    let mut seen = 0;
    for ctx in contexts() {
        let zero = build_extension(&ctx, &CocyclePair::zero(&ctx)).unwrap().extension;
        let d1 = ctx.combined_matrix(1).unwrap();
        for x in ctx.cocycle_basis(2).unwrap() {
            let exact = solve(&d1, &ctx.coordinates(&x).unwrap()).is_some();
            let e = build_extension(&ctx, &CocyclePair::from_combined(&x).unwrap()).unwrap().extension;
            let cmp = compare_extensions(&zero, &e).unwrap();
            assert_eq!(cmp.cohomologous, exact);
            assert_eq!(cmp.iso.is_some(), exact);
            if !exact {
                seen += 1;
                let id: Vec<Mat> = vec![Mat::identity(zero.total.dim()); zero.total.omega().size()];
                assert!(check_extension_iso(&zero, &e, &id).unwrap().is_err());
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn iso_check_rejects_singular_maps() {
    let ctx = contexts().swap_remove(0);
    let e = build_extension(&ctx, &CocyclePair::zero(&ctx)).unwrap().extension;
    let n = e.total.dim();
    assert!(check_extension_iso(&e, &e, &[Mat::identity(n)]).unwrap().is_ok());
    assert!(check_extension_iso(&e, &e, &[Mat::zeros(n, n)]).unwrap().is_err());
}

#[test]
fn broken_presentations_are_refused() {
    let ctx = contexts().swap_remove(0);
    let e = build_extension(&ctx, &CocyclePair::zero(&ctx)).unwrap().extension;
    let mut bad = e.clone();
    bad.i[0] = bad.i[0].scale(&r(2));
    assert!(validate_presentation(&bad).is_err());
    assert!(extract_cocycle(&bad).is_err());
    let mut bad = e.clone();
    bad.s[0] = Mat::zeros(e.total.dim(), e.a_dim());
    assert!(validate_presentation(&bad).is_err());
    let mut bad = e;
    bad.t_e.r[0] = Mat::identity(bad.total.dim());
    assert!(validate_presentation(&bad).is_err());
}

fn take(x: &[i64], dim: usize) -> Vec<Rat> {
    (0..dim).map(|i| r(x.get(i).copied().unwrap_or(0))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn perturbed_modules_validate_iff_their_semidirect_product_does(
        side in 0usize..2, i in 0usize..2, j in 0usize..2, k in 0usize..2, v in -1i64..=1,
    ) {
        let ctx = contexts().swap_remove(0);
        let b = ctx.module();
        let (mut left, mut right) = (b.left_all().to_vec(), b.right_all().to_vec());
        if side == 0 {
            left[0].set(i, j, k, r(v));
        } else {
            right[0].set(i, j, k, r(v));
        }
        let pb = b.with_actions(left, right).unwrap();
        prop_assert!(semidirect_agrees(&pb, ctx.rb()));
    }

    #[test]
    fn extensions_validate_iff_the_pair_is_a_cocycle(which in 0usize..3, c in prop::collection::vec(-1i64..=1, 24)) {
        let ctx = contexts().swap_remove(which);
        let alg = ctx.alg_complex().basis(2);
        let rbf = ctx.rbf_complex().basis(1);
        let pair = CocyclePair::new(alg.combine(&take(&c, alg.dim())), rbf.combine(&take(&c[12..], rbf.dim()))).unwrap();
        let built = build_extension(&ctx, &pair).unwrap();
        prop_assert_eq!(built.total_validates, built.cocycle);
        if built.cocycle {
            prop_assert_eq!(extract_cocycle(&built.extension).unwrap().pair, pair);
        } else {
            prop_assert!(extract_cocycle(&built.extension).is_err());
        }
    }
}
