//! Linear and trivial deformations, Nijenhuis families, and order-truncated
//! formal deformations of a Rota-Baxter family algebra `(μ, R)`.
//!
//! The formal parameter `t` never appears symbolically: a jet stores the
//! coefficients `μ¹, …, μᴷ` and `R¹, …, Rᴷ`, and every identity in `t` is
//! checked one coefficient at a time.

use alloc::format;
use alloc::vec::Vec;

use crate::cochain_complex::{compare_cochains, delta_raw, is_equivariant, Cochain};
use crate::error::{Check, Error, Result, Witness};
use crate::exact_linalg::{Mat, Rat};
use crate::gerstenhaber::circ_i;
use crate::omega_algebra::{check_rota_baxter, is_homomorphism, validate_algebra, OmegaAlgebra};
use crate::omega_bimodule::OmegaBimodule;
use crate::rbf_cohomology::{d_combined, rbfa_cohomology_dims, CombinedCochain, RbfContext};

fn mu_cochain(a: &OmegaAlgebra) -> Cochain {
    Cochain::from_products(a.omega().size(), a.mu_all())
}

fn check_product_shape(a: &OmegaAlgebra, f: &Cochain, degree: usize) -> Result<()> {
    if f.degree() != degree || f.omega_size() != a.omega().size() || f.arg_dim() != a.dim() || f.out_dim() != a.dim() {
        return Err(Error::malformed(format!("expected a degree-{} cochain on the algebra", degree)));
    }
    Ok(())
}

fn check_family(a: &OmegaAlgebra, maps: &[Mat], what: &str) -> Result<()> {
    if maps.len() != a.omega().size() || maps.iter().any(|m| m.rows() != a.dim() || m.cols() != a.dim()) {
        return Err(Error::malformed(format!("{} needs one {}×{} matrix per element of Ω", what, a.dim(), a.dim())));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LinearDeformationReport {
    /// `μ¹` commutes with `p` and `q`.
    pub equivariant: bool,
    /// `δ²μ¹ = 0`.
    pub cocycle: bool,
    /// `μ¹(μ¹(a, b), q c) = μ¹(p a, μ¹(b, c))`.
    pub self_associative: bool,
}

impl LinearDeformationReport {
    pub fn all(&self) -> bool {
        self.equivariant && self.cocycle && self.self_associative
    }
}

/// The three conditions for `μ + tμ¹` to be a linear deformation.
pub fn check_linear_deformation(a: &OmegaAlgebra, mu1: &Cochain) -> Result<LinearDeformationReport> {
    validate_algebra(a).map_err(|w| Error::precondition(format!("algebra does not validate: {}", w)))?;
    check_product_shape(a, mu1, 2)?;
    let b = OmegaBimodule::regular(a, None)?;
    let assoc = circ_i(a, mu1, mu1, 1)?.sub(&circ_i(a, mu1, mu1, 2)?);
    Ok(LinearDeformationReport {
        equivariant: is_equivariant(&b, mu1),
        cocycle: delta_raw(&b, mu1).is_zero(),
        self_associative: assoc.is_zero(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NijenhuisFamily {
    pub n: Vec<Mat>,
}

impl NijenhuisFamily {
    pub fn new(n: Vec<Mat>) -> NijenhuisFamily {
        NijenhuisFamily { n }
    }

    pub fn identity(a: &OmegaAlgebra) -> NijenhuisFamily {
        NijenhuisFamily { n: alloc::vec![Mat::identity(a.dim()); a.omega().size()] }
    }

    pub fn zero(a: &OmegaAlgebra) -> NijenhuisFamily {
        NijenhuisFamily { n: alloc::vec![Mat::zeros(a.dim(), a.dim()); a.omega().size()] }
    }
}

fn commutation(a: &OmegaAlgebra, nf: &NijenhuisFamily) -> Check {
    for w in 0..a.omega().size() {
        let n = &nf.n[w];
        if !n.commutes_with(a.p(w)) {
            return Err(Witness::new("nijenhuis-commutes-p", &[w], &[], n.mul(a.p(w)).entries().to_vec(), a.p(w).mul(n).entries().to_vec()));
        }
        if !n.commutes_with(a.q(w)) {
            return Err(Witness::new("nijenhuis-commutes-q", &[w], &[], n.mul(a.q(w)).entries().to_vec(), a.q(w).mul(n).entries().to_vec()));
        }
    }
    Ok(())
}

/// `μᴺ(a, b) = μ(N a, b) + μ(a, N b) − N μ(a, b)` for any map family `N`.
pub fn deformed_mu(a: &OmegaAlgebra, n: &[Mat]) -> Result<Cochain> {
    check_family(a, n, "N")?;
    let mu = mu_cochain(a);
    Ok(mu.map_slot(0, n).add(&mu.map_slot(1, n)).sub(&mu.map_output(a.omega(), n)))
}

/// Checks `N p = p N`, `N q = q N` and `μ(N a, N b) = N μᴺ(a, b)`.
pub fn check_nijenhuis(a: &OmegaAlgebra, nf: &NijenhuisFamily) -> Result<Check> {
    check_family(a, &nf.n, "N")?;
    if let Err(w) = commutation(a, nf) {
        return Ok(Err(w));
    }
    let mu = mu_cochain(a);
    let lhs = mu.map_slot(0, &nf.n).map_slot(1, &nf.n);
    let rhs = deformed_mu(a, &nf.n)?.map_output(a.omega(), &nf.n);
    Ok(compare_cochains("nijenhuis", a.omega(), &lhs, &rhs))
}

/// `(A, μᴺ, p, q)` together with the check that `N : (A, μᴺ) → (A, μ)` is a homomorphism.
pub fn deformed_product(a: &OmegaAlgebra, nf: &NijenhuisFamily) -> Result<(OmegaAlgebra, Check)> {
    check_nijenhuis(a, nf)?.map_err(|w| Error::precondition(format!("not a Nijenhuis family: {}", w)))?;
    let an = a.with_mu(deformed_mu(a, &nf.n)?.to_products())?;
    let hom = is_homomorphism(&nf.n, &an, a)?;
    Ok((an, hom))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialDeformationReport {
    /// `N p = p N` and `N q = q N`.
    pub commutes: Check,
    /// `μ¹ = μ(·, N·) + μ(N·, ·) − N μ`.
    pub first_order: Check,
    /// `N μ¹ = μ(N·, N·)`.
    pub second_order: Check,
}

impl TrivialDeformationReport {
    pub fn all(&self) -> bool {
        self.commutes.is_ok() && self.first_order.is_ok() && self.second_order.is_ok()
    }
}

/// Checks whether `id + tN` trivializes the linear deformation `μ + tμ¹`,
/// coefficient by coefficient.
pub fn check_trivial_deformation(a: &OmegaAlgebra, nf: &NijenhuisFamily, mu1: &Cochain) -> Result<TrivialDeformationReport> {
    check_family(a, &nf.n, "N")?;
    check_product_shape(a, mu1, 2)?;
    let mu = mu_cochain(a);
    let om = a.omega();
    Ok(TrivialDeformationReport {
        commutes: commutation(a, nf),
        first_order: compare_cochains("trivial-first-order", om, mu1, &deformed_mu(a, &nf.n)?),
        second_order: compare_cochains(
            "trivial-second-order",
            om,
            &mu1.map_output(om, &nf.n),
            &mu.map_slot(0, &nf.n).map_slot(1, &nf.n),
        ),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiReport {
    pub psi: Cochain,
    pub psi_zero: bool,
    pub nijenhuis: bool,
    pub deformed_validates: bool,
    pub psi_cocycle: bool,
}

impl PsiReport {
    /// `ψᴺ = 0 ⟺ N Nijenhuis` and `(A, μᴺ) validates ⟺ δ²ψᴺ = 0`.
    pub fn equivalences_hold(&self) -> bool {
        self.psi_zero == self.nijenhuis && self.deformed_validates == self.psi_cocycle
    }
}

/// `ψᴺ(a, b) = μ(N a, N b) − N μᴺ(a, b)` with both equivalences evaluated.
pub fn psi_n(a: &OmegaAlgebra, candidate: &[Mat]) -> Result<PsiReport> {
    check_family(a, candidate, "N")?;
    let nf = NijenhuisFamily::new(candidate.to_vec());
    commutation(a, &nf).map_err(|w| Error::precondition(format!("candidate does not commute with the structure maps: {}", w)))?;
    let om = a.omega();
    let mu = mu_cochain(a);
    let mun = deformed_mu(a, candidate)?;
    let psi = mu.map_slot(0, candidate).map_slot(1, candidate).sub(&mun.map_output(om, candidate));
    let b = OmegaBimodule::regular(a, None)?;
    let psi_cocycle = delta_raw(&b, &psi).is_zero();
    let deformed_validates = validate_algebra(&a.with_mu(mun.to_products())?).is_ok();
    let nijenhuis = check_nijenhuis(a, &nf)?.is_ok();
    Ok(PsiReport { psi_zero: psi.is_zero(), psi, nijenhuis, deformed_validates, psi_cocycle })
}

/// Coefficients `μ¹..μᴷ` and `R¹..Rᴷ` of a deformation truncated at order `K`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeformationJet {
    pub mu_orders: Vec<Cochain>,
    pub r_orders: Vec<Cochain>,
}

impl DeformationJet {
    pub fn new(mu_orders: Vec<Cochain>, r_orders: Vec<Cochain>) -> Result<DeformationJet> {
        if mu_orders.is_empty() || mu_orders.len() != r_orders.len() {
            return Err(Error::malformed("a jet needs the same positive number of μ and R coefficients"));
        }
        if mu_orders.iter().any(|m| m.degree() != 2) || r_orders.iter().any(|r| r.degree() != 1) {
            return Err(Error::malformed("jet coefficients must have degrees 2 (μ) and 1 (R)"));
        }
        Ok(DeformationJet { mu_orders, r_orders })
    }

    pub fn zero(ctx: &RbfContext, order: usize) -> DeformationJet {
        let a = ctx.algebra();
        let m = a.omega().size();
        DeformationJet {
            mu_orders: alloc::vec![Cochain::zeros(m, 2, a.dim(), a.dim()); order],
            r_orders: alloc::vec![Cochain::zeros(m, 1, a.dim(), a.dim()); order],
        }
    }

    /// Order-1 jet from a degree-2 combined cochain `(μ¹, R¹)`.
    pub fn from_pair(x: &CombinedCochain) -> Result<DeformationJet> {
        let r = x.rbf.clone().ok_or_else(|| Error::malformed("pair has no Rota-Baxter part"))?;
        DeformationJet::new(alloc::vec![x.alg.clone()], alloc::vec![r])
    }

    pub fn order(&self) -> usize {
        self.mu_orders.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderReport {
    pub order: usize,
    /// `Σ μⁱ(μⁿ⁻ⁱ ⊗ q) = Σ μⁱ(p ⊗ μⁿ⁻ⁱ)`.
    pub associativity: Check,
    /// The order-`n` coefficient of the Rota-Baxter family identity.
    pub rota_baxter: Check,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetReport {
    /// Orders `0..=K`; order 0 is the undeformed structure.
    pub orders: Vec<OrderReport>,
    /// `d²(μ¹, R¹) = 0`.
    pub infinitesimal_cocycle: bool,
}

impl JetReport {
    pub fn ok(&self) -> bool {
        self.orders.iter().all(|o| o.associativity.is_ok() && o.rota_baxter.is_ok())
    }

    pub fn ok_through(&self, n: usize) -> bool {
        self.orders.iter().take(n + 1).all(|o| o.associativity.is_ok() && o.rota_baxter.is_ok())
    }
}

/// Checks both deformation identities coefficient-wise for `n = 0..=K`. At
/// order 1 the identities must agree with `d²(μ¹, R¹) = 0`; a disagreement is
/// reported as an internal error.
pub fn check_jet(ctx: &RbfContext, jet: &DeformationJet) -> Result<JetReport> {
    let a = ctx.algebra();
    if jet.order() == 0 {
        return Err(Error::malformed("a jet needs at least one order"));
    }
    if *ctx.module() != OmegaBimodule::regular_rbf(a, ctx.rb())? {
        return Err(Error::precondition("jets live on the regular bimodule with T = R"));
    }
    for m in &jet.mu_orders {
        check_product_shape(a, m, 2)?;
        ctx.alg_complex().coordinates(m)?;
    }
    for r in &jet.r_orders {
        check_product_shape(a, r, 1)?;
        ctx.alg_complex().coordinates(r)?;
    }
    let om = a.omega();
    let lam = &ctx.rb().weight;
    let mut mus = alloc::vec![mu_cochain(a)];
    mus.extend(jet.mu_orders.iter().cloned());
    let mut rs: Vec<Vec<Mat>> = alloc::vec![ctx.rb().r.clone()];
    rs.extend(jet.r_orders.iter().map(Cochain::to_maps));
    let shape = |deg| Cochain::zeros(om.size(), deg, a.dim(), a.dim());
    let mut orders = Vec::with_capacity(jet.order() + 1);
    for n in 0..=jet.order() {
        let (mut lhs, mut rhs) = (shape(3), shape(3));
        for i in 0..=n {
            lhs.add_scaled(&Rat::one(), &circ_i(a, &mus[i], &mus[n - i], 1)?);
            rhs.add_scaled(&Rat::one(), &circ_i(a, &mus[i], &mus[n - i], 2)?);
        }
        let associativity = compare_cochains("jet-associativity", om, &lhs, &rhs);
        let (mut l2, mut r2) = (shape(2), shape(2));
        for i in 0..=n {
            for j in 0..=n - i {
                let k = n - i - j;
                l2.add_scaled(&Rat::one(), &mus[i].map_slot(0, &rs[j]).map_slot(1, &rs[k]));
                r2.add_scaled(&Rat::one(), &mus[j].map_slot(1, &rs[k]).map_output(om, &rs[i]));
                r2.add_scaled(&Rat::one(), &mus[j].map_slot(0, &rs[k]).map_output(om, &rs[i]));
            }
            r2.add_scaled(lam, &mus[n - i].map_output(om, &rs[i]));
        }
        let rota_baxter = compare_cochains("jet-rota-baxter", om, &l2, &r2);
        orders.push(OrderReport { order: n, associativity, rota_baxter });
    }
    if orders[0].associativity.is_ok() != validate_algebra(a).is_ok()
        || orders[0].rota_baxter.is_ok() != check_rota_baxter(a, ctx.rb())?.is_ok()
    {
        return Err(Error::internal("order-0 identities disagree with the undeformed checks"));
    }
    let pair = CombinedCochain::new(jet.mu_orders[0].clone(), Some(jet.r_orders[0].clone()))?;
    let infinitesimal_cocycle = d_combined(ctx, &pair)?.is_zero();
    let first = &orders[1];
    if (first.associativity.is_ok() && first.rota_baxter.is_ok()) != infinitesimal_cocycle {
        return Err(Error::internal("order-1 identities disagree with d²(μ¹, R¹) = 0"));
    }
    Ok(JetReport { orders, infinitesimal_cocycle })
}

/// `d¹(ψ¹) = (δ¹ψ¹, −Φ¹ψ¹)`: the change of `(μ¹, R¹)` under `id + tψ¹`.
pub fn equivalence_shift(ctx: &RbfContext, psi1: &Cochain) -> Result<CombinedCochain> {
    if psi1.degree() != 1 {
        return Err(Error::malformed("equivalence shifts start from a degree-1 cochain"));
    }
    let zero = ctx.rbf_complex().basis(0).combine(&alloc::vec![Rat::zero(); ctx.rbf_complex().basis(0).dim()]);
    d_combined(ctx, &CombinedCochain::new(psi1.clone(), Some(zero))?)
}

/// Checks the order-1 coefficients of `ψᵗ μ̄ᵗ = μᵗ(ψᵗ ⊗ ψᵗ)` and `ψᵗ R̄ᵗ = Rᵗ ψᵗ`
/// for `ψᵗ = id + tψ¹`, where `orig` holds `(μ¹, R¹)` and `shifted` holds `(μ̄¹, R̄¹)`.
pub fn equivalent_at_order_one(ctx: &RbfContext, orig: &CombinedCochain, shifted: &CombinedCochain, psi1: &Cochain) -> Result<bool> {
    let a = ctx.algebra();
    let om = a.omega();
    let mu = mu_cochain(a);
    let p1 = psi1.to_maps();
    let (r1, rbar) = match (&orig.rbf, &shifted.rbf) {
        (Some(x), Some(y)) => (x, y),
        _ => return Err(Error::malformed("order-1 pairs need both components")),
    };
    let lhs = mu.map_output(om, &p1).add(&shifted.alg);
    let rhs = orig.alg.add(&mu.map_slot(0, &p1)).add(&mu.map_slot(1, &p1));
    let r = Cochain::from_maps(&ctx.rb().r);
    let lhs_r = r.map_output(om, &p1).add(rbar);
    let rhs_r = r1.add(&psi1.map_output(om, &ctx.rb().r));
    Ok(lhs == rhs && lhs_r == rhs_r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RigidityReport {
    pub h2_dim: usize,
    /// `H²_RBFA = 0`, the sufficient condition for rigidity.
    pub rigid: bool,
}

pub fn rigidity_report(ctx: &RbfContext) -> Result<RigidityReport> {
    let rep = rbfa_cohomology_dims(ctx, 2)?;
    let h2_dim = rep.rbfa.degrees[2].cohomology;
    Ok(RigidityReport { h2_dim, rigid: h2_dim == 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::Monoid;
    use crate::omega_algebra::{build_example_family, ExampleParams, RotaBaxterFamily};

    fn e1() -> OmegaAlgebra {
        build_example_family(&Monoid::trivial(), &ExampleParams::ones(&Monoid::trivial())).unwrap()
    }

    fn e1_ctx() -> RbfContext {
        let a = e1();
        let rb = RotaBaxterFamily::new(Rat::one(), alloc::vec![Mat::from_ints(&[&[-1, -1], &[0, 0]])]);
        RbfContext::regular(&a, &rb, 3).unwrap()
    }

    #[test]
    fn linear_deformation_trivial_cases() {
        let a = e1();
        let mu = mu_cochain(&a);
        let z = Cochain::zeros(1, 2, 2, 2);
        assert!(check_linear_deformation(&a, &z).unwrap().all());
        assert!(check_linear_deformation(&a, &mu).unwrap().all());
    }

    #[test]
    fn identity_and_zero_are_nijenhuis() {
        let a = e1();
        for nf in [NijenhuisFamily::identity(&a), NijenhuisFamily::zero(&a)] {
            assert_eq!(check_nijenhuis(&a, &nf).unwrap(), Ok(()));
            let (an, hom) = deformed_product(&a, &nf).unwrap();
            assert_eq!(hom, Ok(()));
            assert_eq!(validate_algebra(&an), Ok(()));
            let rep = psi_n(&a, &nf.n).unwrap();
            assert!(rep.psi_zero && rep.equivalences_hold());
            let mun = deformed_mu(&a, &nf.n).unwrap();
            assert!(check_trivial_deformation(&a, &nf, &mun).unwrap().all());
        }
        let (an, _) = deformed_product(&a, &NijenhuisFamily::identity(&a)).unwrap();
        assert_eq!(an, a);
    }

    #[test]
    fn zero_jet_and_shift() {
        let ctx = e1_ctx();
        let rep = check_jet(&ctx, &DeformationJet::zero(&ctx, 2)).unwrap();
        assert!(rep.ok() && rep.infinitesimal_cocycle);
        let id = Cochain::identity(1, 2);
        let sh = equivalence_shift(&ctx, &id).unwrap();
        assert_eq!(sh.alg, mu_cochain(ctx.algebra()));
        assert!(d_combined(&ctx, &sh).unwrap().is_zero());
        let jet = DeformationJet::from_pair(&sh).unwrap();
        assert!(check_jet(&ctx, &jet).unwrap().ok());
        let zero = CombinedCochain::new(Cochain::zeros(1, 2, 2, 2), Some(Cochain::zeros(1, 1, 2, 2))).unwrap();
        assert!(equivalent_at_order_one(&ctx, &zero, &sh, &id).unwrap());
    }

    #[test]
    fn kernel_elements_are_infinitesimals() {
        let ctx = e1_ctx();
        for x in ctx.cocycle_basis(2).unwrap() {
            let rep = check_jet(&ctx, &DeformationJet::from_pair(&x).unwrap()).unwrap();
            assert!(rep.ok_through(1));
        }
        let r = rigidity_report(&ctx).unwrap();
        assert_eq!(r.rigid, r.h2_dim == 0);
    }
}
