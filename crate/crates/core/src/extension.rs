//! Abelian extensions `0 → M → E → A → 0` of Rota-Baxter family algebras,
//! presented in split coordinates `E = A ⊕ M`.

use alloc::format;
use alloc::vec::Vec;

use crate::cochain_complex::Cochain;
use crate::error::{Check, Error, Result, Witness};
use crate::exact_linalg::{solve, vecops, Mat};
use crate::monoid::Monoid;
use crate::omega_algebra::{check_rota_baxter, is_homomorphism, validate_algebra, Bilinear, OmegaAlgebra, RotaBaxterFamily};
use crate::omega_bimodule::{semidirect_product, validate_bimodule, validate_rbf_bimodule, OmegaBimodule};
use crate::rbf_cohomology::{d_combined, CombinedCochain, RbfContext};

/// `ψ ∈ C²_Ω(A, M)` and `χ ∈ C¹_RBF(A, M)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CocyclePair {
    pub psi: Cochain,
    pub chi: Cochain,
}

impl CocyclePair {
    pub fn new(psi: Cochain, chi: Cochain) -> Result<CocyclePair> {
        if psi.degree() != 2 || chi.degree() != 1 {
            return Err(Error::malformed("a cocycle pair has degrees (2, 1)"));
        }
        Ok(CocyclePair { psi, chi })
    }

    pub fn zero(ctx: &RbfContext) -> CocyclePair {
        let b = ctx.module();
        let (m, d, w) = (b.omega().size(), b.base().dim(), b.dim());
        CocyclePair { psi: Cochain::zeros(m, 2, d, w), chi: Cochain::zeros(m, 1, d, w) }
    }

    pub fn from_combined(x: &CombinedCochain) -> Result<CocyclePair> {
        let chi = x.rbf.clone().ok_or_else(|| Error::malformed("degree-0 cochain is not a pair"))?;
        CocyclePair::new(x.alg.clone(), chi)
    }

    pub fn to_combined(&self) -> CombinedCochain {
        CombinedCochain { alg: self.psi.clone(), rbf: Some(self.chi.clone()) }
    }

    pub fn sub(&self, o: &CocyclePair) -> CocyclePair {
        CocyclePair { psi: self.psi.sub(&o.psi), chi: self.chi.sub(&o.chi) }
    }
}

/// `E` with its Rota-Baxter family `Tᴱ`, and `i_α`, `ρ_α`, `s_α`, `t_α` per `α ∈ Ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionPresentation {
    pub total: OmegaAlgebra,
    pub t_e: RotaBaxterFamily,
    pub i: Vec<Mat>,
    pub rho: Vec<Mat>,
    pub s: Vec<Mat>,
    pub t: Vec<Mat>,
}

fn split_maps(m: usize, d: usize, w: usize) -> [Vec<Mat>; 4] {
    let i = Mat::zeros(d, w).vstack(&Mat::identity(w));
    let rho = Mat::identity(d).hstack(&Mat::zeros(d, w));
    let s = Mat::identity(d).vstack(&Mat::zeros(w, d));
    let t = Mat::zeros(w, d).hstack(&Mat::identity(w));
    [alloc::vec![i; m], alloc::vec![rho; m], alloc::vec![s; m], alloc::vec![t; m]]
}

impl ExtensionPresentation {
    pub fn a_dim(&self) -> usize {
        self.rho[0].rows()
    }

    pub fn m_dim(&self) -> usize {
        self.t[0].rows()
    }

    /// Replaces the section by `s + i∘η` and the retraction by `t − η∘ρ`
    /// for an equivariant `η : A → M`.
    pub fn with_section_shift(&self, eta: &Cochain) -> Result<ExtensionPresentation> {
        if eta.degree() != 1 || eta.arg_dim() != self.a_dim() || eta.out_dim() != self.m_dim() {
            return Err(Error::malformed("section shift needs a degree-1 cochain A → M"));
        }
        let maps = eta.to_maps();
        let mut e = self.clone();
        for w in 0..maps.len() {
            e.s[w] = self.s[w].add(&self.i[w].mul(&maps[w]));
            e.t[w] = self.t[w].sub(&maps[w].mul(&self.rho[w]));
        }
        Ok(e)
    }
}

fn expect_mat(eq: &'static str, w: usize, l: Mat, r: &Mat) -> Check {
    if l != *r {
        return Err(Witness::new(eq, &[w], &[], l.entries().to_vec(), r.entries().to_vec()));
    }
    Ok(())
}

/// The algebra `A` carried by a presentation: `μ = ρ μᴱ(s, s)`, `p = ρ pᴱ s`, `R = ρ Tᴱ s`.
fn quotient(e: &ExtensionPresentation) -> (OmegaAlgebra, RotaBaxterFamily) {
    let om = e.total.omega();
    let m = om.size();
    let d = e.a_dim();
    let mut mu = Vec::with_capacity(m * m);
    for al in 0..m {
        for be in 0..m {
            let ab = om.mul(al, be);
            let me = e.total.mu(al, be);
            mu.push(Bilinear::from_fn(d, d, d, |x, y| e.rho[ab].mul_vec(&me.apply(&e.s[al].column(x), &e.s[be].column(y)))));
        }
    }
    let conj = |maps: &[Mat], w: usize| e.rho[w].mul(&maps[w]).mul(&e.s[w]);
    let p = (0..m).map(|w| conj(e.total.p_all(), w)).collect();
    let q = (0..m).map(|w| conj(e.total.q_all(), w)).collect();
    let r = (0..m).map(|w| conj(&e.t_e.r, w)).collect();
    let a = OmegaAlgebra::new(om.clone(), d, mu, p, q).expect("shapes follow from the presentation");
    (a, RotaBaxterFamily::new(e.t_e.weight.clone(), r))
}

/// Every identity of an abelian extension with section: the splitting
/// identities, compatibility of `i`, `ρ`, `s` with the structure maps and with
/// `Tᴱ`, `μᴱ(M, M) = 0`, and that `E` and `A` themselves validate.
pub fn validate_presentation(e: &ExtensionPresentation) -> Check {
    let om = e.total.omega();
    let m = om.size();
    let (d, w) = (e.a_dim(), e.m_dim());
    let shapes_ok = e.i.len() == m
        && e.rho.len() == m
        && e.s.len() == m
        && e.t.len() == m
        && e.total.dim() == d + w
        && (0..m).all(|k| {
            (e.i[k].rows(), e.i[k].cols()) == (d + w, w)
                && (e.rho[k].rows(), e.rho[k].cols()) == (d, d + w)
                && (e.s[k].rows(), e.s[k].cols()) == (d + w, d)
                && (e.t[k].rows(), e.t[k].cols()) == (w, d + w)
        });
    if !shapes_ok {
        return Err(Witness::new("shapes", &[], &[], Vec::new(), Vec::new()));
    }
    validate_algebra(&e.total)?;
    if e.t_e.r.len() != m || check_rota_baxter(&e.total, &e.t_e).is_err() {
        return Err(Witness::new("rota-baxter-shape", &[], &[], Vec::new(), Vec::new()));
    }
    check_rota_baxter(&e.total, &e.t_e).expect("shape checked")?;
    for k in 0..m {
        expect_mat("rho-s", k, e.rho[k].mul(&e.s[k]), &Mat::identity(d))?;
        expect_mat("t-i", k, e.t[k].mul(&e.i[k]), &Mat::identity(w))?;
        expect_mat("t-s", k, e.t[k].mul(&e.s[k]), &Mat::zeros(w, d))?;
        expect_mat("splitting", k, e.i[k].mul(&e.t[k]).add(&e.s[k].mul(&e.rho[k])), &Mat::identity(d + w))?;
    }
    for k in 0..m {
        let (pe, qe) = (e.total.p(k), e.total.q(k));
        let (pm, qm) = (e.t[k].mul(pe).mul(&e.i[k]), e.t[k].mul(qe).mul(&e.i[k]));
        expect_mat("inclusion-p", k, pe.mul(&e.i[k]), &e.i[k].mul(&pm))?;
        expect_mat("inclusion-q", k, qe.mul(&e.i[k]), &e.i[k].mul(&qm))?;
        let (pa, qa) = (e.rho[k].mul(pe).mul(&e.s[k]), e.rho[k].mul(qe).mul(&e.s[k]));
        expect_mat("projection-p", k, e.rho[k].mul(pe), &pa.mul(&e.rho[k]))?;
        expect_mat("projection-q", k, e.rho[k].mul(qe), &qa.mul(&e.rho[k]))?;
        expect_mat("section-p", k, pe.mul(&e.s[k]), &e.s[k].mul(&pa))?;
        expect_mat("section-q", k, qe.mul(&e.s[k]), &e.s[k].mul(&qa))?;
        let te = &e.t_e.r[k];
        let tm = e.t[k].mul(te).mul(&e.i[k]);
        let ra = e.rho[k].mul(te).mul(&e.s[k]);
        expect_mat("inclusion-t", k, te.mul(&e.i[k]), &e.i[k].mul(&tm))?;
        expect_mat("projection-t", k, e.rho[k].mul(te), &ra.mul(&e.rho[k]))?;
    }
    let (a, rb) = quotient(e);
    for al in 0..m {
        for be in 0..m {
            let ab = om.mul(al, be);
            let me = e.total.mu(al, be);
            for x in 0..w {
                for y in 0..w {
                    let v = me.apply(&e.i[al].column(x), &e.i[be].column(y));
                    if !vecops::is_zero(&v) {
                        return Err(Witness::new("abelian", &[al, be], &[x, y], v, vecops::zero(d + w)));
                    }
                }
            }
            for x in 0..d + w {
                for y in 0..d + w {
                    let lhs = e.rho[ab].mul_vec(me.on_basis(x, y));
                    let rhs = a.mu(al, be).apply(&e.rho[al].column(x), &e.rho[be].column(y));
                    if lhs != rhs {
                        return Err(Witness::new("projection-product", &[al, be], &[x, y], lhs, rhs));
                    }
                }
            }
        }
    }
    validate_algebra(&a)?;
    check_rota_baxter(&a, &rb).expect("shape follows")?;
    Ok(())
}

/// `E = A ⊕ M` with `μ^ψ((a,m),(b,n)) = (ab, a▷n + m◁b + ψ(a,b))`,
/// `T^χ(a,m) = (R a, χ(a) + T m)` and `p`, `q` acting diagonally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuiltExtension {
    pub extension: ExtensionPresentation,
    pub total_validates: bool,
    pub cocycle: bool,
}

/// Builds the extension of a pair and checks that `E` validates exactly when
/// `d²(ψ, χ) = 0`; a disagreement is an internal error.
pub fn build_extension(ctx: &RbfContext, pair: &CocyclePair) -> Result<BuiltExtension> {
    let b = ctx.module();
    let a = b.base();
    let om = a.omega();
    let m = om.size();
    let (d, w) = (a.dim(), b.dim());
    let shape = |f: &Cochain, deg| f.degree() == deg && f.omega_size() == m && f.arg_dim() == d && f.out_dim() == w;
    if !shape(&pair.psi, 2) || !shape(&pair.chi, 1) {
        return Err(Error::malformed("cocycle pair does not match the bimodule"));
    }
    ctx.alg_complex().coordinates(&pair.psi)?;
    ctx.rbf_complex().coordinates(&pair.chi)?;
    let semi = semidirect_product(b);
    let psi = pair.psi.to_products();
    let mut mu = Vec::with_capacity(m * m);
    for k in 0..m * m {
        let base = semi.mu_all()[k].clone();
        let ps = &psi[k];
        mu.push(Bilinear::from_fn(d + w, d + w, d + w, |x, y| {
            let mut v = base.on_basis(x, y).to_vec();
            if x < d && y < d {
                vecops::add_assign(&mut v[d..], ps.on_basis(x, y));
            }
            v
        }));
    }
    let total = semi.with_mu(mu)?;
    let chi = pair.chi.to_maps();
    let t = b.t().expect("validated context");
    let r = (0..m).map(|k| ctx.rb().r[k].hstack(&Mat::zeros(d, w)).vstack(&chi[k].hstack(&t[k]))).collect();
    let t_e = RotaBaxterFamily::new(ctx.rb().weight.clone(), r);
    let total_validates = validate_algebra(&total).is_ok() && check_rota_baxter(&total, &t_e)?.is_ok();
    let cocycle = d_combined(ctx, &pair.to_combined())?.is_zero();
    if total_validates != cocycle {
        return Err(Error::internal(format!(
            "extension validates = {} but d²(ψ, χ) = 0 is {}",
            total_validates, cocycle
        )));
    }
    let [i, rho, s, tt] = split_maps(m, d, w);
    Ok(BuiltExtension { extension: ExtensionPresentation { total, t_e, i, rho, s, t: tt }, total_validates, cocycle })
}

/// The pair, bimodule and base algebra read off a presentation through its section.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extracted {
    pub pair: CocyclePair,
    pub algebra: OmegaAlgebra,
    pub rb: RotaBaxterFamily,
    pub module: OmegaBimodule,
}

/// `a ▷ m = μᴱ(s a, i m)`, `m ◁ a = μᴱ(i m, s a)`, `ψ = μᴱ(s, s) − s μ` and
/// `χ = Tᴱ s − s R`, all read through `t`. The pair is certified in `ker d²`.
pub fn extract_cocycle(e: &ExtensionPresentation) -> Result<Extracted> {
    validate_presentation(e).map_err(|w| Error::malformed(format!("malformed extension: {} fails ({})", w.equation, w)))?;
    let om = e.total.omega();
    let m = om.size();
    let (d, w) = (e.a_dim(), e.m_dim());
    let (a, rb) = quotient(e);
    let mut left = Vec::with_capacity(m * m);
    let mut right = Vec::with_capacity(m * m);
    let mut psi = Cochain::zeros(m, 2, d, w);
    for al in 0..m {
        for be in 0..m {
            let ab = om.mul(al, be);
            let me = e.total.mu(al, be);
            let tt = &e.t[ab];
            left.push(Bilinear::from_fn(d, w, w, |x, y| tt.mul_vec(&me.apply(&e.s[al].column(x), &e.i[be].column(y)))));
            right.push(Bilinear::from_fn(w, d, w, |y, x| tt.mul_vec(&me.apply(&e.i[al].column(y), &e.s[be].column(x)))));
            let blk = psi.block_mut(al * m + be);
            for x in 0..d {
                for y in 0..d {
                    let mut v = me.apply(&e.s[al].column(x), &e.s[be].column(y));
                    vecops::sub_assign(&mut v, &e.s[ab].mul_vec(a.mu(al, be).on_basis(x, y)));
                    blk[(x * d + y) * w..(x * d + y + 1) * w].clone_from_slice(&tt.mul_vec(&v));
                }
            }
        }
    }
    let conj = |maps: &[Mat], k: usize| e.t[k].mul(&maps[k]).mul(&e.i[k]);
    let pm = (0..m).map(|k| conj(e.total.p_all(), k)).collect();
    let qm = (0..m).map(|k| conj(e.total.q_all(), k)).collect();
    let tm = (0..m).map(|k| conj(&e.t_e.r, k)).collect();
    let module = OmegaBimodule::new(a.clone(), w, left, right, pm, qm, Some(tm))?;
    validate_bimodule(&module).map_err(|w| Error::internal(format!("induced bimodule fails: {}", w)))?;
    validate_rbf_bimodule(&module, &rb)?.map_err(|w| Error::internal(format!("induced bimodule fails: {}", w)))?;
    let chi_maps: Vec<Mat> = (0..m).map(|k| e.t[k].mul(&e.t_e.r[k].mul(&e.s[k]).sub(&e.s[k].mul(&rb.r[k])))).collect();
    let pair = CocyclePair { psi, chi: Cochain::from_maps(&chi_maps) };
    let ctx = RbfContext::new(&module, &rb, 2)?;
    if !d_combined(&ctx, &pair.to_combined())?.is_zero() {
        return Err(Error::internal("extracted pair is not a 2-cocycle"));
    }
    Ok(Extracted { pair, algebra: a, rb, module })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub cohomologous: bool,
    /// `φ_α` from `e1` to `e2`, in the coordinates of the two presentations.
    pub iso: Option<Vec<Mat>>,
}

/// Decides whether the two extracted pairs differ by `d¹(η¹, η⁰)` and, when
/// they do, builds `φ_α(a, m) = (a, (η¹_α + δ⁰η⁰_α)(a) + m)` and checks it.
pub fn compare_extensions(e1: &ExtensionPresentation, e2: &ExtensionPresentation) -> Result<Comparison> {
    let x1 = extract_cocycle(e1)?;
    let x2 = extract_cocycle(e2)?;
    if x1.algebra != x2.algebra || x1.rb != x2.rb || x1.module != x2.module {
        return Err(Error::precondition("extensions are over different algebras or bimodules"));
    }
    let ctx = RbfContext::new(&x1.module, &x1.rb, 2)?;
    let diff = x1.pair.sub(&x2.pair).to_combined();
    let target = ctx.coordinates(&diff)?;
    let Some(coeffs) = solve(&ctx.combined_matrix(1)?, &target) else {
        return Ok(Comparison { cohomologous: false, iso: None });
    };
    let eta = ctx.combine(1, &coeffs);
    let eta0 = eta.rbf.as_ref().expect("degree 1 has an Φ⁰ part");
    let theta = eta.alg.add(&ctx.alg_complex().delta(eta0)?).to_maps();
    let m = e1.total.omega().size();
    let (d, w) = (e1.a_dim(), e1.m_dim());
    let phi: Vec<Mat> = (0..m)
        .map(|k| {
            let split = Mat::identity(d).hstack(&Mat::zeros(d, w)).vstack(&theta[k].hstack(&Mat::identity(w)));
            let to_split = e1.rho[k].vstack(&e1.t[k]);
            let from_split = e2.s[k].hstack(&e2.i[k]);
            from_split.mul(&split).mul(&to_split)
        })
        .collect();
    check_extension_iso(e1, e2, &phi)?.map_err(|w| Error::internal(format!("constructed isomorphism fails: {}", w)))?;
    Ok(Comparison { cohomologous: true, iso: Some(phi) })
}

/// `φ` is invertible, an algebra homomorphism `E1 → E2`, commutes with `Tᴱ`,
/// and satisfies `φ i¹ = i²` and `ρ¹ = ρ² φ`.
pub fn check_extension_iso(e1: &ExtensionPresentation, e2: &ExtensionPresentation, phi: &[Mat]) -> Result<Check> {
    if let e @ Err(_) = is_homomorphism(phi, &e1.total, &e2.total)? {
        return Ok(e);
    }
    for (k, f) in phi.iter().enumerate() {
        if f.inverse().is_none() {
            return Ok(Err(Witness::new("iso-invertible", &[k], &[], f.entries().to_vec(), Vec::new())));
        }
        let c = (|| {
            expect_mat("iso-t", k, f.mul(&e1.t_e.r[k]), &e2.t_e.r[k].mul(f))?;
            expect_mat("iso-inclusion", k, f.mul(&e1.i[k]), &e2.i[k])?;
            expect_mat("iso-projection", k, e2.rho[k].mul(f), &e1.rho[k])
        })();
        if c.is_err() {
            return Ok(c);
        }
    }
    Ok(Ok(()))
}

/// Normalizes a presentation to split coordinates through `(ρ_α, t_α)`.
pub fn normalize(e: &ExtensionPresentation) -> Result<ExtensionPresentation> {
    validate_presentation(e).map_err(|w| Error::malformed(format!("malformed extension: {} fails ({})", w.equation, w)))?;
    let om: &Monoid = e.total.omega();
    let m = om.size();
    let (d, w) = (e.a_dim(), e.m_dim());
    let to: Vec<Mat> = (0..m).map(|k| e.rho[k].vstack(&e.t[k])).collect();
    let from: Vec<Mat> = (0..m).map(|k| e.s[k].hstack(&e.i[k])).collect();
    let mut mu = Vec::with_capacity(m * m);
    for al in 0..m {
        for be in 0..m {
            let ab = om.mul(al, be);
            let me = e.total.mu(al, be);
            mu.push(Bilinear::from_fn(d + w, d + w, d + w, |x, y| to[ab].mul_vec(&me.apply(&from[al].column(x), &from[be].column(y)))));
        }
    }
    let conj = |maps: &[Mat]| (0..m).map(|k| to[k].mul(&maps[k]).mul(&from[k])).collect::<Vec<_>>();
    let total = OmegaAlgebra::new(om.clone(), d + w, mu, conj(e.total.p_all()), conj(e.total.q_all()))?;
    let t_e = RotaBaxterFamily::new(e.t_e.weight.clone(), conj(&e.t_e.r));
    let [i, rho, s, t] = split_maps(m, d, w);
    Ok(ExtensionPresentation { total, t_e, i, rho, s, t })
}
