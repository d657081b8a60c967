//! The shipped fixtures, rebuilt from their definitions.
//!
//! Each fixture is derived: Rota-Baxter families and Nijenhuis families come
//! from the bounded search, cocycle pairs from the computed kernel basis, and
//! extensions from `build_extension`. `fixtures/*.json` must equal
//! `serialize(build(name))`.

use bihom_core::cochain_complex::Cochain;
use bihom_core::deformation::DeformationJet;
use bihom_core::extension::{build_extension, CocyclePair};
use bihom_core::omega_algebra::{build_example_family, Bilinear, ExampleParams, OmegaAlgebra, RotaBaxterFamily};
use bihom_core::omega_bimodule::example_family_module;
use bihom_core::rbf_cohomology::RbfContext;
use bihom_core::{Error, Mat, Monoid, Rat, Result};

use crate::format::{Twist, WorkbenchFile};
use crate::search::{first_non_scalar, is_scalar, search_nijenhuis, search_rbf, DEFAULT_CAP};

pub const NAMES: &[&str] = &[
    "e0",
    "e0_rbfa",
    "e1",
    "e1_broken",
    "e1_module",
    "e1_linear",
    "e1_nijenhuis",
    "e1_jet",
    "e1_pair",
    "e1_extension",
    "e1_extension_shifted",
    "zero1",
    "zero2_rbf",
    "c2_example",
    "idempotent_example",
    "dual_twist",
];

pub fn e1_algebra() -> OmegaAlgebra {
    let t = Monoid::trivial();
    build_example_family(&t, &ExampleParams::ones(&t)).expect("the example parameters are valid")
}

/// The first non-scalar weight-1 family with entries in `[−1, 1]`.
pub fn searched_family(a: &OmegaAlgebra) -> Result<RotaBaxterFamily> {
    let all = search_rbf(a, 1, &Rat::one(), DEFAULT_CAP)?;
    first_non_scalar(&all).cloned().ok_or_else(|| Error::precondition("no non-scalar Rota-Baxter family in the search box"))
}

fn with_rb(a: OmegaAlgebra, rb: RotaBaxterFamily) -> WorkbenchFile {
    let mut f = WorkbenchFile::new(a);
    f.rota_baxter = Some(rb);
    f
}

fn e1_context() -> Result<(OmegaAlgebra, RotaBaxterFamily, RbfContext)> {
    let a = e1_algebra();
    let rb = searched_family(&a)?;
    let ctx = RbfContext::regular(&a, &rb, 3)?;
    Ok((a, rb, ctx))
}

fn kernel_pair(ctx: &RbfContext) -> Result<CocyclePair> {
    let ker = ctx.cocycle_basis(2)?;
    let x = ker.last().ok_or_else(|| Error::precondition("ker d² is zero"))?;
    CocyclePair::from_combined(x)
}

fn dual_numbers() -> OmegaAlgebra {
    let mut mu = Bilinear::zeros(2, 2, 2);
    mu.set(0, 0, 0, Rat::one());
    mu.set(0, 1, 1, Rat::one());
    mu.set(1, 0, 1, Rat::one());
    OmegaAlgebra::constant(Monoid::trivial(), mu).expect("shapes match")
}

pub fn build(name: &str) -> Result<WorkbenchFile> {
    Ok(match name {
        "e0" => WorkbenchFile::new(OmegaAlgebra::ground_field()),
        "e0_rbfa" => {
            let a = OmegaAlgebra::ground_field();
            let rb = RotaBaxterFamily::minus_weight(&a, Rat::one());
            with_rb(a, rb)
        }
        "e1" => {
            let a = e1_algebra();
            let rb = searched_family(&a)?;
            with_rb(a, rb)
        }
        "e1_broken" => {
            let a = e1_algebra();
            let mut mu = a.mu(0, 0).clone();
            mu.set(1, 1, 0, Rat::one());
            mu.set(1, 1, 1, Rat::zero());
            WorkbenchFile::new(a.with_mu(vec![mu])?)
        }
        "e1_module" => {
            let t = Monoid::trivial();
            let mut f = WorkbenchFile::new(e1_algebra());
            f.bimodule = Some(example_family_module(&t, &ExampleParams::ones(&t))?);
            f
        }
        "e1_linear" => {
            let a = e1_algebra();
            let mut f = WorkbenchFile::new(a.clone());
            f.cochain = Some(Cochain::from_products(1, a.mu_all()));
            f
        }
        "e1_nijenhuis" => {
            let a = e1_algebra();
            let all = search_nijenhuis(&a, 1, DEFAULT_CAP)?;
            let n = all
                .into_iter()
                .find(|n| n.n.iter().any(|m| !is_scalar(m)))
                .ok_or_else(|| Error::precondition("no non-scalar Nijenhuis family in the search box"))?;
            let mut f = WorkbenchFile::new(a);
            f.nijenhuis = Some(n.n);
            f
        }
        "e1_jet" => {
            let (a, rb, ctx) = e1_context()?;
            let mut f = with_rb(a, rb);
            f.jet = Some(DeformationJet::from_pair(&kernel_pair(&ctx)?.to_combined())?);
            f
        }
        "e1_pair" => {
            let (a, rb, ctx) = e1_context()?;
            let mut f = with_rb(a, rb);
            f.cocycle_pair = Some(kernel_pair(&ctx)?);
            f
        }
        "e1_extension" | "e1_extension_shifted" => {
            let (a, rb, ctx) = e1_context()?;
            let built = build_extension(&ctx, &kernel_pair(&ctx)?)?;
            let mut e = built.extension;
            if name == "e1_extension_shifted" {
                let bs = ctx.alg_complex().basis(1);
                e = e.with_section_shift(&bs.element(0))?;
            }
            let mut f = with_rb(a, rb);
            f.extension = Some(e);
            f
        }
        "zero1" => WorkbenchFile::new(OmegaAlgebra::zero(Monoid::trivial(), 1)),
        "zero2_rbf" => {
            let a = OmegaAlgebra::zero(Monoid::trivial(), 2);
            let rb = RotaBaxterFamily::new(Rat::zero(), vec![Mat::from_ints(&[&[0, 1], &[0, 0]])]);
            with_rb(a, rb)
        }
        "c2_example" | "idempotent_example" => {
            let om = if name == "c2_example" { Monoid::cyclic(2) } else { Monoid::idempotent_pair() };
            let a = build_example_family(&om, &ExampleParams::ones(&om))?;
            let rb = searched_family(&a)?;
            with_rb(a, rb)
        }
        "dual_twist" => {
            let mut f = WorkbenchFile::new(dual_numbers());
            f.twist = Some(Twist { p: vec![Mat::from_ints(&[&[1, 0], &[0, 2]])], q: vec![Mat::from_ints(&[&[1, 0], &[0, -1]])] });
            f
        }
        _ => return Err(Error::malformed(format!("unknown fixture {:?}", name))),
    })
}

pub fn all() -> Result<Vec<(&'static str, WorkbenchFile)>> {
    NAMES.iter().map(|&n| build(n).map(|f| (n, f))).collect()
}
