//! Bimodules over BiHom-Ω-associative algebras and the constructions built on them.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{expect_eq, Check, Error, Result, Witness};
use crate::exact_linalg::{vecops, Mat, Rat};
use crate::monoid::Monoid;
use crate::omega_algebra::{
    build_example_family, check_rota_baxter, star_product_unchecked, validate_algebra, Bilinear, ExampleParams, OmegaAlgebra,
    RotaBaxterFamily,
};

/// `(M, ▷_{α,β}, ◁_{α,β}, p^M_ω, q^M_ω)` over `base`, optionally with `T_ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaBimodule {
    base: OmegaAlgebra,
    dim: usize,
    left: Vec<Bilinear>,
    right: Vec<Bilinear>,
    p: Vec<Mat>,
    q: Vec<Mat>,
    t: Option<Vec<Mat>>,
}

fn check_maps(name: &str, maps: &[Mat], m: usize, dim: usize) -> Result<()> {
    if maps.len() != m || maps.iter().any(|x| x.rows() != dim || x.cols() != dim) {
        return Err(Error::malformed(format!("{} must hold {} maps of size {}x{}", name, m, dim, dim)));
    }
    Ok(())
}

impl OmegaBimodule {
    /// `left[α·|Ω|+β]` has shape `d × dimM × dimM`, `right[α·|Ω|+β]` has shape `dimM × d × dimM`.
    pub fn new(
        base: OmegaAlgebra,
        dim: usize,
        left: Vec<Bilinear>,
        right: Vec<Bilinear>,
        p: Vec<Mat>,
        q: Vec<Mat>,
        t: Option<Vec<Mat>>,
    ) -> Result<OmegaBimodule> {
        let m = base.omega().size();
        let d = base.dim();
        if left.len() != m * m || left.iter().any(|b| b.shape() != (d, dim, dim)) {
            return Err(Error::malformed(format!("left action must hold {} tensors of shape {}x{}x{}", m * m, d, dim, dim)));
        }
        if right.len() != m * m || right.iter().any(|b| b.shape() != (dim, d, dim)) {
            return Err(Error::malformed(format!("right action must hold {} tensors of shape {}x{}x{}", m * m, dim, d, dim)));
        }
        check_maps("pM", &p, m, dim)?;
        check_maps("qM", &q, m, dim)?;
        if let Some(t) = &t {
            check_maps("T", t, m, dim)?;
        }
        Ok(OmegaBimodule { base, dim, left, right, p, q, t })
    }

    /// `M = A` acting on itself by `mu`.
    pub fn regular(a: &OmegaAlgebra, t: Option<Vec<Mat>>) -> Result<OmegaBimodule> {
        OmegaBimodule::new(
            a.clone(),
            a.dim(),
            a.mu_all().to_vec(),
            a.mu_all().to_vec(),
            a.p_all().to_vec(),
            a.q_all().to_vec(),
            t,
        )
    }

    /// Regular bimodule with `T = R`.
    pub fn regular_rbf(a: &OmegaAlgebra, rb: &RotaBaxterFamily) -> Result<OmegaBimodule> {
        OmegaBimodule::regular(a, Some(rb.r.clone()))
    }

    /// Both actions zero.
    pub fn trivial(a: &OmegaAlgebra, dim: usize, p: Vec<Mat>, q: Vec<Mat>, t: Option<Vec<Mat>>) -> Result<OmegaBimodule> {
        let m = a.omega().size();
        let d = a.dim();
        OmegaBimodule::new(
            a.clone(),
            dim,
            vec![Bilinear::zeros(d, dim, dim); m * m],
            vec![Bilinear::zeros(dim, d, dim); m * m],
            p,
            q,
            t,
        )
    }

    pub fn base(&self) -> &OmegaAlgebra {
        &self.base
    }

    pub fn omega(&self) -> &Monoid {
        self.base.omega()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left(&self, a: usize, b: usize) -> &Bilinear {
        &self.left[a * self.omega().size() + b]
    }

    pub fn right(&self, a: usize, b: usize) -> &Bilinear {
        &self.right[a * self.omega().size() + b]
    }

    pub fn left_all(&self) -> &[Bilinear] {
        &self.left
    }

    pub fn right_all(&self) -> &[Bilinear] {
        &self.right
    }

    pub fn p(&self, w: usize) -> &Mat {
        &self.p[w]
    }

    pub fn q(&self, w: usize) -> &Mat {
        &self.q[w]
    }

    pub fn p_all(&self) -> &[Mat] {
        &self.p
    }

    pub fn q_all(&self) -> &[Mat] {
        &self.q
    }

    pub fn t(&self) -> Option<&[Mat]> {
        self.t.as_deref()
    }

    pub fn with_t(&self, t: Option<Vec<Mat>>) -> Result<OmegaBimodule> {
        OmegaBimodule::new(self.base.clone(), self.dim, self.left.clone(), self.right.clone(), self.p.clone(), self.q.clone(), t)
    }

    pub fn with_actions(&self, left: Vec<Bilinear>, right: Vec<Bilinear>) -> Result<OmegaBimodule> {
        OmegaBimodule::new(self.base.clone(), self.dim, left, right, self.p.clone(), self.q.clone(), self.t.clone())
    }

    pub(crate) fn require_t(&self) -> Result<&[Mat]> {
        self.t().ok_or_else(|| Error::precondition("bimodule carries no T family"))
    }
}

/// The one-dimensional bimodule `k{e3}` over the example family:
/// `a ▷ e3 = e3 ◁ a = (k1 + k2) c(α,β) e3`, `p^M = rmap`, `q^M = lmap`.
pub fn example_family_module(omega: &Monoid, params: &ExampleParams) -> Result<OmegaBimodule> {
    let a = build_example_family(omega, params)?;
    let m = omega.size();
    let mut left = Vec::with_capacity(m * m);
    let mut right = Vec::with_capacity(m * m);
    for c in &params.c {
        left.push(Bilinear::from_fn(2, 1, 1, |_, _| vec![c.clone()]));
        right.push(Bilinear::from_fn(1, 2, 1, |_, _| vec![c.clone()]));
    }
    let p = params.rmap.iter().map(|r| Mat::scalar(1, r)).collect();
    let q = params.lmap.iter().map(|l| Mat::scalar(1, l)).collect();
    OmegaBimodule::new(a, 1, left, right, p, q, None)
}

fn columns(maps: &[Mat]) -> Vec<Vec<Vec<Rat>>> {
    maps.iter().map(|m| (0..m.cols()).map(|j| m.column(j)).collect()).collect()
}

/// Checks the bimodule identities (commuting `p^M`, `q^M`; left and right
/// multiplicativity; left, right and two-sided associativity) in that order.
pub fn validate_bimodule(b: &OmegaBimodule) -> Check {
    let a = &b.base;
    let om = a.omega();
    let m = om.size();
    let d = a.dim();
    let n = b.dim;
    for al in 0..m {
        for be in 0..m {
            if !b.p[al].commutes_with(&b.q[be]) {
                return Err(Witness::new(
                    "module-commuting-structure-maps",
                    &[al, be],
                    &[],
                    b.p[al].mul(&b.q[be]).entries().to_vec(),
                    b.q[be].mul(&b.p[al]).entries().to_vec(),
                ));
            }
        }
    }
    let (pa, qa) = (columns(a.p_all()), columns(a.q_all()));
    let (pm, qm) = (columns(&b.p), columns(&b.q));
    for al in 0..m {
        for be in 0..m {
            let ab = om.mul(al, be);
            let l = b.left(al, be);
            let r = b.right(al, be);
            for i in 0..d {
                for j in 0..n {
                    let xm = l.on_basis(i, j);
                    expect_eq("left-action-p", &[al, be], &[i, j], b.p[ab].mul_vec(xm), l.apply(&pa[al][i], &pm[be][j]))?;
                    expect_eq("left-action-q", &[al, be], &[i, j], b.q[ab].mul_vec(xm), l.apply(&qa[al][i], &qm[be][j]))?;
                }
            }
            for j in 0..n {
                for i in 0..d {
                    let mx = r.on_basis(j, i);
                    expect_eq("right-action-p", &[al, be], &[j, i], b.p[ab].mul_vec(mx), r.apply(&pm[al][j], &pa[be][i]))?;
                    expect_eq("right-action-q", &[al, be], &[j, i], b.q[ab].mul_vec(mx), r.apply(&qm[al][j], &qa[be][i]))?;
                }
            }
        }
    }
    for al in 0..m {
        for be in 0..m {
            for ga in 0..m {
                let (ab, bg) = (om.mul(al, be), om.mul(be, ga));
                for x in 0..d {
                    for y in 0..d {
                        for k in 0..n {
                            let lhs = b.left(al, bg).apply(&pa[al][x], b.left(be, ga).on_basis(y, k));
                            let rhs = b.left(ab, ga).apply(a.mu(al, be).on_basis(x, y), &qm[ga][k]);
                            expect_eq("left-module", &[al, be, ga], &[x, y, k], lhs, rhs)?;
                        }
                    }
                }
                for k in 0..n {
                    for x in 0..d {
                        for y in 0..d {
                            let lhs = b.right(al, bg).apply(&pm[al][k], a.mu(be, ga).on_basis(x, y));
                            let rhs = b.right(ab, ga).apply(b.right(al, be).on_basis(k, x), &qa[ga][y]);
                            expect_eq("right-module", &[al, be, ga], &[k, x, y], lhs, rhs)?;
                        }
                    }
                }
                for x in 0..d {
                    for k in 0..n {
                        for y in 0..d {
                            let lhs = b.left(al, bg).apply(&pa[al][x], b.right(be, ga).on_basis(k, y));
                            let rhs = b.right(ab, ga).apply(b.left(al, be).on_basis(x, k), &qa[ga][y]);
                            expect_eq("bimodule", &[al, be, ga], &[x, k, y], lhs, rhs)?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Product on `A ⊕ M` (coordinates of `A` first); `bullet`, when given, is the
/// `M × M → M` part.
fn split_product(b: &OmegaBimodule, bullet: Option<&[Bilinear]>) -> OmegaAlgebra {
    let a = &b.base;
    let m = a.omega().size();
    let d = a.dim();
    let n = b.dim;
    let mut mu = Vec::with_capacity(m * m);
    for k in 0..m * m {
        let (al, be) = (k / m, k % m);
        mu.push(Bilinear::from_fn(d + n, d + n, d + n, |i, j| {
            let mut v = vecops::zero(d + n);
            match (i < d, j < d) {
                (true, true) => v[..d].clone_from_slice(a.mu(al, be).on_basis(i, j)),
                (true, false) => v[d..].clone_from_slice(b.left(al, be).on_basis(i, j - d)),
                (false, true) => v[d..].clone_from_slice(b.right(al, be).on_basis(i - d, j)),
                (false, false) => {
                    if let Some(bl) = bullet {
                        v[d..].clone_from_slice(bl[k].on_basis(i - d, j - d));
                    }
                }
            }
            v
        }));
    }
    let p = (0..m).map(|w| a.p(w).direct_sum(&b.p[w])).collect();
    let q = (0..m).map(|w| a.q(w).direct_sum(&b.q[w])).collect();
    OmegaAlgebra::new(a.omega().clone(), d + n, mu, p, q).expect("block shapes")
}

/// `(x, m) ∘ (x', m') = (x·x', x ▷ m' + m ◁ x')` with block-diagonal structure maps.
pub fn semidirect_product(b: &OmegaBimodule) -> OmegaAlgebra {
    split_product(b, None)
}

/// Products `m •_{α,β} m'`, indexed by `α·|Ω| + β`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimoduleAlgebraData {
    pub bullet: Vec<Bilinear>,
}

fn bullet_conditions(b: &OmegaBimodule, bullet: &[Bilinear]) -> Check {
    let a = &b.base;
    let om = a.omega();
    let m = om.size();
    let (d, n) = (a.dim(), b.dim);
    let (pa, qa) = (columns(a.p_all()), columns(a.q_all()));
    let (pm, qm) = (columns(&b.p), columns(&b.q));
    let bl = |x: usize, y: usize| &bullet[x * m + y];
    for al in 0..m {
        for be in 0..m {
            for ga in 0..m {
                let (ab, bg) = (om.mul(al, be), om.mul(be, ga));
                for x in 0..d {
                    for j in 0..n {
                        for k in 0..n {
                            let lhs = b.left(al, bg).apply(&pa[al][x], bl(be, ga).on_basis(j, k));
                            let rhs = bl(ab, ga).apply(b.left(al, be).on_basis(x, j), &qm[ga][k]);
                            expect_eq("bullet-left", &[al, be, ga], &[x, j, k], lhs, rhs)?;
                        }
                    }
                }
                for j in 0..n {
                    for k in 0..n {
                        for x in 0..d {
                            let lhs = bl(al, bg).apply(&pm[al][j], b.right(be, ga).on_basis(k, x));
                            let rhs = b.right(ab, ga).apply(bl(al, be).on_basis(j, k), &qa[ga][x]);
                            expect_eq("bullet-right", &[al, be, ga], &[j, k, x], lhs, rhs)?;
                        }
                    }
                }
                for j in 0..n {
                    for x in 0..d {
                        for k in 0..n {
                            let lhs = bl(al, bg).apply(&pm[al][j], b.left(be, ga).on_basis(x, k));
                            let rhs = bl(ab, ga).apply(b.right(al, be).on_basis(j, x), &qm[ga][k]);
                            expect_eq("bullet-middle", &[al, be, ga], &[j, x, k], lhs, rhs)?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Checks the bimodule identities, that `(M, •, p^M, q^M)` is BiHom-Ω-associative,
/// and the three mixed identities; the verdict is compared with validating the
/// product on `A ⊕ M` that includes `•`.
pub fn validate_bimodule_algebra(b: &OmegaBimodule, extra: &BimoduleAlgebraData) -> Result<Check> {
    let m = b.omega().size();
    let n = b.dim;
    if extra.bullet.len() != m * m || extra.bullet.iter().any(|x| x.shape() != (n, n, n)) {
        return Err(Error::malformed("bullet product has the wrong shape"));
    }
    let direct = (|| {
        validate_bimodule(b)?;
        let mm = OmegaAlgebra::new(b.omega().clone(), n, extra.bullet.clone(), b.p.clone(), b.q.clone()).expect("shapes");
        validate_algebra(&mm)?;
        bullet_conditions(b, &extra.bullet)
    })();
    let total = split_product(b, Some(&extra.bullet));
    let via_sum = validate_algebra(&total);
    if direct.is_ok() != via_sum.is_ok() {
        return Err(Error::internal(format!(
            "bimodule algebra routes disagree: direct {:?}, on A⊕M {:?}",
            direct.as_ref().err().map(|w| w.equation),
            via_sum.as_ref().err().map(|w| w.equation)
        )));
    }
    Ok(direct)
}

/// Checks that `T` commutes with `p^M` and `q^M` and the two Rota-Baxter family
/// bimodule identities.
pub fn validate_rbf_bimodule(b: &OmegaBimodule, rb: &RotaBaxterFamily) -> Result<Check> {
    let t = b.require_t()?;
    rb.check_shape(&b.base)?;
    let a = &b.base;
    let om = a.omega();
    let m = om.size();
    let (d, n) = (a.dim(), b.dim);
    for al in 0..m {
        if !b.p[al].commutes_with(&t[al]) {
            return Ok(Err(Witness::new("t-commutes-p", &[al], &[], b.p[al].mul(&t[al]).entries().to_vec(), t[al].mul(&b.p[al]).entries().to_vec())));
        }
        if !b.q[al].commutes_with(&t[al]) {
            return Ok(Err(Witness::new("t-commutes-q", &[al], &[], b.q[al].mul(&t[al]).entries().to_vec(), t[al].mul(&b.q[al]).entries().to_vec())));
        }
    }
    let rc = columns(&rb.r);
    let tc = columns(t);
    let lam = &rb.weight;
    let check = (|| {
        for al in 0..m {
            for be in 0..m {
                let ab = om.mul(al, be);
                let l = b.left(al, be);
                let r = b.right(al, be);
                for i in 0..d {
                    for j in 0..n {
                        let lhs = l.apply(&rc[al][i], &tc[be][j]);
                        let mut inner = l.apply(&vecops::unit(d, i), &tc[be][j]);
                        vecops::add_assign(&mut inner, &l.apply(&rc[al][i], &vecops::unit(n, j)));
                        vecops::axpy(&mut inner, lam, l.on_basis(i, j));
                        expect_eq("rota-baxter-left-action", &[al, be], &[i, j], lhs, t[ab].mul_vec(&inner))?;
                    }
                }
                for j in 0..n {
                    for i in 0..d {
                        let lhs = r.apply(&tc[al][j], &rc[be][i]);
                        let mut inner = r.apply(&vecops::unit(n, j), &rc[be][i]);
                        vecops::add_assign(&mut inner, &r.apply(&tc[al][j], &vecops::unit(d, i)));
                        vecops::axpy(&mut inner, lam, r.on_basis(j, i));
                        expect_eq("rota-baxter-right-action", &[al, be], &[j, i], lhs, t[ab].mul_vec(&inner))?;
                    }
                }
            }
        }
        Ok(())
    })();
    Ok(check)
}

/// Semi-direct product with `T⊕_ω(a, m) = (R_ω a, T_ω m)`.
pub fn rbf_semidirect(b: &OmegaBimodule, rb: &RotaBaxterFamily) -> Result<(OmegaAlgebra, RotaBaxterFamily)> {
    let t = b.require_t()?;
    rb.check_shape(&b.base)?;
    let total = semidirect_product(b);
    let r = rb.r.iter().zip(t).map(|(r, t)| r.direct_sum(t)).collect();
    Ok((total, RotaBaxterFamily::new(rb.weight.clone(), r)))
}

/// `M⋆` over `A⋆`: `a ▶ m = R(a) ▷ m - T(a ▷ m)`, `m ◀ a = m ◁ R(a) - T(m ◁ a)`.
pub fn induced_module_star(b: &OmegaBimodule, rb: &RotaBaxterFamily) -> Result<OmegaBimodule> {
    let req = |c: Check, what: &str| c.map_err(|w| Error::precondition(format!("{} does not validate: {}", what, w)));
    req(validate_algebra(&b.base), "algebra")?;
    req(check_rota_baxter(&b.base, rb)?, "Rota-Baxter family")?;
    req(validate_bimodule(b), "bimodule")?;
    req(validate_rbf_bimodule(b, rb)?, "Rota-Baxter family bimodule")?;
    Ok(induced_module_star_unchecked(b, rb))
}

pub(crate) fn induced_module_star_unchecked(b: &OmegaBimodule, rb: &RotaBaxterFamily) -> OmegaBimodule {
    let t = b.t().expect("T present");
    let a = &b.base;
    let m = a.omega().size();
    let (d, n) = (a.dim(), b.dim);
    let mut left = Vec::with_capacity(m * m);
    let mut right = Vec::with_capacity(m * m);
    for k in 0..m * m {
        let (al, be) = (k / m, k % m);
        let ab = a.omega().mul(al, be);
        let l = &b.left[k];
        let r = &b.right[k];
        left.push(Bilinear::from_fn(d, n, n, |i, j| {
            let v = l.apply(&rb.r[al].column(i), &vecops::unit(n, j));
            vecops::sub(&v, &t[ab].mul_vec(l.on_basis(i, j)))
        }));
        right.push(Bilinear::from_fn(n, d, n, |j, i| {
            let v = r.apply(&vecops::unit(n, j), &rb.r[be].column(i));
            vecops::sub(&v, &t[ab].mul_vec(r.on_basis(j, i)))
        }));
    }
    OmegaBimodule::new(star_product_unchecked(a, rb), n, left, right, b.p.clone(), b.q.clone(), b.t.clone()).expect("shapes preserved")
}
