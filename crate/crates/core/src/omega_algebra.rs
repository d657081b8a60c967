//! BiHom-Ω-associative algebras and Rota-Baxter families on them.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{expect_eq, Check, Error, Result, Witness};
use crate::exact_linalg::{vecops, Mat, Rat};
use crate::monoid::Monoid;

/// Bilinear map `k^l × k^r → k^o`; `get(i, j, k)` is the `e_k` coefficient of `B(e_i, e_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bilinear {
    left: usize,
    right: usize,
    out: usize,
    data: Vec<Rat>,
}

impl Bilinear {
    pub fn zeros(left: usize, right: usize, out: usize) -> Bilinear {
        Bilinear { left, right, out, data: vec![Rat::zero(); left * right * out] }
    }

    pub fn from_vec(left: usize, right: usize, out: usize, data: Vec<Rat>) -> Result<Bilinear> {
        if data.len() != left * right * out {
            return Err(Error::malformed(format!(
                "bilinear tensor has {} entries, expected {}x{}x{}",
                data.len(),
                left,
                right,
                out
            )));
        }
        Ok(Bilinear { left, right, out, data })
    }

    /// Builds the tensor from a function on basis pairs.
    pub fn from_fn(left: usize, right: usize, out: usize, mut f: impl FnMut(usize, usize) -> Vec<Rat>) -> Bilinear {
        let mut b = Bilinear::zeros(left, right, out);
        for i in 0..left {
            for j in 0..right {
                let v = f(i, j);
                assert_eq!(v.len(), out);
                b.data[(i * right + j) * out..(i * right + j + 1) * out].clone_from_slice(&v);
            }
        }
        b
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.left, self.right, self.out)
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.data[(i * self.right + j) * self.out + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rat) {
        self.data[(i * self.right + j) * self.out + k] = v;
    }

    /// `B(e_i, e_j)`.
    pub fn on_basis(&self, i: usize, j: usize) -> &[Rat] {
        let o = (i * self.right + j) * self.out;
        &self.data[o..o + self.out]
    }

    pub fn apply(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.left);
        assert_eq!(y.len(), self.right);
        let mut out = vecops::zero(self.out);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                vecops::axpy(&mut out, &(xi * yj), self.on_basis(i, j));
            }
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Bilinear {
        Bilinear { data: vecops::scale(&self.data, s), ..self.clone() }
    }

    pub fn add(&self, o: &Bilinear) -> Bilinear {
        assert_eq!(self.shape(), o.shape());
        Bilinear { data: vecops::add(&self.data, &o.data), ..self.clone() }
    }

    pub fn is_zero(&self) -> bool {
        vecops::is_zero(&self.data)
    }
}

fn check_family(name: &str, maps: &[Mat], count: usize, dim: usize) -> Result<()> {
    if maps.len() != count {
        return Err(Error::malformed(format!("{} has {} maps, expected {}", name, maps.len(), count)));
    }
    for (w, m) in maps.iter().enumerate() {
        if m.rows() != dim || m.cols() != dim {
            return Err(Error::malformed(format!(
                "{}[{}] is {}x{}, expected {}x{}",
                name,
                w,
                m.rows(),
                m.cols(),
                dim,
                dim
            )));
        }
    }
    Ok(())
}

/// `(A, ·_{α,β}, p_ω, q_ω)`: products indexed by Ω² and two families of structure maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaAlgebra {
    omega: Monoid,
    dim: usize,
    mu: Vec<Bilinear>,
    p: Vec<Mat>,
    q: Vec<Mat>,
}

impl OmegaAlgebra {
    /// `mu` is indexed by `α·|Ω| + β`. Only shapes are checked here.
    pub fn new(omega: Monoid, dim: usize, mu: Vec<Bilinear>, p: Vec<Mat>, q: Vec<Mat>) -> Result<OmegaAlgebra> {
        let m = omega.size();
        if mu.len() != m * m {
            return Err(Error::malformed(format!("mu has {} products, expected {}", mu.len(), m * m)));
        }
        for (k, b) in mu.iter().enumerate() {
            if b.shape() != (dim, dim, dim) {
                return Err(Error::malformed(format!("mu[{},{}] has shape {:?}", k / m, k % m, b.shape())));
            }
        }
        check_family("p", &p, m, dim)?;
        check_family("q", &q, m, dim)?;
        Ok(OmegaAlgebra { omega, dim, mu, p, q })
    }

    /// Same product for every index pair and identity structure maps.
    pub fn constant(omega: Monoid, mu: Bilinear) -> Result<OmegaAlgebra> {
        let d = mu.shape().0;
        let m = omega.size();
        OmegaAlgebra::new(omega, d, vec![mu; m * m], vec![Mat::identity(d); m], vec![Mat::identity(d); m])
    }

    pub fn zero(omega: Monoid, dim: usize) -> OmegaAlgebra {
        OmegaAlgebra::constant(omega, Bilinear::zeros(dim, dim, dim)).expect("shapes")
    }

    /// The one-dimensional algebra `k` with `1·1 = 1` over the trivial monoid.
    pub fn ground_field() -> OmegaAlgebra {
        OmegaAlgebra::constant(Monoid::trivial(), Bilinear::from_vec(1, 1, 1, vec![Rat::one()]).unwrap()).unwrap()
    }

    pub fn omega(&self) -> &Monoid {
        &self.omega
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mu(&self, a: usize, b: usize) -> &Bilinear {
        &self.mu[a * self.omega.size() + b]
    }

    pub fn mu_all(&self) -> &[Bilinear] {
        &self.mu
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

    pub fn mul(&self, a: usize, b: usize, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        self.mu(a, b).apply(x, y)
    }

    /// Same structure maps, new products.
    pub fn with_mu(&self, mu: Vec<Bilinear>) -> Result<OmegaAlgebra> {
        OmegaAlgebra::new(self.omega.clone(), self.dim, mu, self.p.clone(), self.q.clone())
    }

    pub fn with_maps(&self, p: Vec<Mat>, q: Vec<Mat>) -> Result<OmegaAlgebra> {
        OmegaAlgebra::new(self.omega.clone(), self.dim, self.mu.clone(), p, q)
    }

    fn basis_images(maps: &[Mat]) -> Vec<Vec<Vec<Rat>>> {
        maps.iter().map(|m| (0..m.cols()).map(|j| m.column(j)).collect()).collect()
    }
}

/// Checks `p_α q_β = q_β p_α`, multiplicativity of `p` and `q`, and
/// BiHom-Ω-associativity, in that order, scanning indices lexicographically.
pub fn validate_algebra(a: &OmegaAlgebra) -> Check {
    let m = a.omega.size();
    let d = a.dim;
    for al in 0..m {
        for be in 0..m {
            if !a.p[al].commutes_with(&a.q[be]) {
                return Err(Witness::new(
                    "commuting-structure-maps",
                    &[al, be],
                    &[],
                    a.p[al].mul(&a.q[be]).entries().to_vec(),
                    a.q[be].mul(&a.p[al]).entries().to_vec(),
                ));
            }
        }
    }
    let pc = OmegaAlgebra::basis_images(&a.p);
    let qc = OmegaAlgebra::basis_images(&a.q);
    for al in 0..m {
        for be in 0..m {
            let ab = a.omega.mul(al, be);
            let mu = a.mu(al, be);
            for i in 0..d {
                for j in 0..d {
                    let xy = mu.on_basis(i, j);
                    expect_eq("multiplicativity-p", &[al, be], &[i, j], a.p[ab].mul_vec(xy), mu.apply(&pc[al][i], &pc[be][j]))?;
                    expect_eq("multiplicativity-q", &[al, be], &[i, j], a.q[ab].mul_vec(xy), mu.apply(&qc[al][i], &qc[be][j]))?;
                }
            }
        }
    }
    for al in 0..m {
        for be in 0..m {
            for ga in 0..m {
                let bg = a.omega.mul(be, ga);
                let ab = a.omega.mul(al, be);
                let outer_l = a.mu(al, bg);
                let inner_l = a.mu(be, ga);
                let inner_r = a.mu(al, be);
                let outer_r = a.mu(ab, ga);
                for i in 0..d {
                    for j in 0..d {
                        for k in 0..d {
                            let lhs = outer_l.apply(&pc[al][i], inner_l.on_basis(j, k));
                            let rhs = outer_r.apply(inner_r.on_basis(i, j), &qc[ga][k]);
                            expect_eq("associativity", &[al, be, ga], &[i, j, k], lhs, rhs)?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Ω-indexed operators `R_ω` of weight `λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotaBaxterFamily {
    pub weight: Rat,
    pub r: Vec<Mat>,
}

impl RotaBaxterFamily {
    pub fn new(weight: Rat, r: Vec<Mat>) -> RotaBaxterFamily {
        RotaBaxterFamily { weight, r }
    }

    pub fn zero(a: &OmegaAlgebra, weight: Rat) -> RotaBaxterFamily {
        RotaBaxterFamily { weight, r: vec![Mat::zeros(a.dim(), a.dim()); a.omega().size()] }
    }

    /// `R_ω = -λ·id`, a solution for every algebra.
    pub fn minus_weight(a: &OmegaAlgebra, weight: Rat) -> RotaBaxterFamily {
        let r = vec![Mat::scalar(a.dim(), &-&weight); a.omega().size()];
        RotaBaxterFamily { weight, r }
    }

    pub fn check_shape(&self, a: &OmegaAlgebra) -> Result<()> {
        check_family("R", &self.r, a.omega().size(), a.dim())
    }
}

/// Checks `p_α R_α = R_α p_α`, `q_α R_α = R_α q_α` and the Rota-Baxter family identity.
pub fn check_rota_baxter(a: &OmegaAlgebra, rb: &RotaBaxterFamily) -> Result<Check> {
    rb.check_shape(a)?;
    let m = a.omega.size();
    let d = a.dim;
    for al in 0..m {
        if !a.p[al].commutes_with(&rb.r[al]) {
            return Ok(Err(Witness::new(
                "rota-baxter-commutes-p",
                &[al],
                &[],
                a.p[al].mul(&rb.r[al]).entries().to_vec(),
                rb.r[al].mul(&a.p[al]).entries().to_vec(),
            )));
        }
        if !a.q[al].commutes_with(&rb.r[al]) {
            return Ok(Err(Witness::new(
                "rota-baxter-commutes-q",
                &[al],
                &[],
                a.q[al].mul(&rb.r[al]).entries().to_vec(),
                rb.r[al].mul(&a.q[al]).entries().to_vec(),
            )));
        }
    }
    let rc = OmegaAlgebra::basis_images(&rb.r);
    for al in 0..m {
        for be in 0..m {
            let ab = a.omega.mul(al, be);
            let mu = a.mu(al, be);
            for i in 0..d {
                for j in 0..d {
                    let lhs = mu.apply(&rc[al][i], &rc[be][j]);
                    let mut inner = mu.apply(&rc[al][i], &vecops::unit(d, j));
                    vecops::add_assign(&mut inner, &mu.apply(&vecops::unit(d, i), &rc[be][j]));
                    vecops::axpy(&mut inner, &rb.weight, mu.on_basis(i, j));
                    let rhs = rb.r[ab].mul_vec(&inner);
                    if let e @ Err(_) = expect_eq("rota-baxter", &[al, be], &[i, j], lhs, rhs) {
                        return Ok(e);
                    }
                }
            }
        }
    }
    Ok(Ok(()))
}

fn require(check: Check, what: &str) -> Result<()> {
    check.map_err(|w| Error::precondition(format!("{} does not validate: {}", what, w)))
}

/// `x ⋆ y = x·R(y) + R(x)·y + λ x·y` on the same carrier and structure maps.
pub fn star_product(a: &OmegaAlgebra, rb: &RotaBaxterFamily) -> Result<OmegaAlgebra> {
    require(validate_algebra(a), "algebra")?;
    require(check_rota_baxter(a, rb)?, "Rota-Baxter family")?;
    Ok(star_product_unchecked(a, rb))
}

pub(crate) fn star_product_unchecked(a: &OmegaAlgebra, rb: &RotaBaxterFamily) -> OmegaAlgebra {
    let m = a.omega.size();
    let d = a.dim;
    let mut mu = Vec::with_capacity(m * m);
    for al in 0..m {
        for be in 0..m {
            let base = a.mu(al, be);
            mu.push(Bilinear::from_fn(d, d, d, |i, j| {
                let ri = rb.r[al].column(i);
                let rj = rb.r[be].column(j);
                let mut v = base.apply(&vecops::unit(d, i), &rj);
                vecops::add_assign(&mut v, &base.apply(&ri, &vecops::unit(d, j)));
                vecops::axpy(&mut v, &rb.weight, base.on_basis(i, j));
                v
            }));
        }
    }
    a.with_mu(mu).expect("shapes preserved")
}

/// Checks `p'f = fp`, `q'f = fq` and `f_{αβ}(x·y) = f_α(x)·' f_β(y)`.
pub fn is_homomorphism(f: &[Mat], src: &OmegaAlgebra, dst: &OmegaAlgebra) -> Result<Check> {
    let m = src.omega.size();
    if dst.omega != src.omega {
        return Err(Error::malformed("homomorphism between algebras over different monoids"));
    }
    if f.len() != m || f.iter().any(|x| x.rows() != dst.dim || x.cols() != src.dim) {
        return Err(Error::malformed("homomorphism family has the wrong shape"));
    }
    for al in 0..m {
        let (l, r) = (dst.p[al].mul(&f[al]), f[al].mul(&src.p[al]));
        if l != r {
            return Ok(Err(Witness::new("homomorphism-p", &[al], &[], l.entries().to_vec(), r.entries().to_vec())));
        }
        let (l, r) = (dst.q[al].mul(&f[al]), f[al].mul(&src.q[al]));
        if l != r {
            return Ok(Err(Witness::new("homomorphism-q", &[al], &[], l.entries().to_vec(), r.entries().to_vec())));
        }
    }
    let fc = OmegaAlgebra::basis_images(f);
    for al in 0..m {
        for be in 0..m {
            let ab = src.omega.mul(al, be);
            for i in 0..src.dim {
                for j in 0..src.dim {
                    let lhs = f[ab].mul_vec(src.mu(al, be).on_basis(i, j));
                    let rhs = dst.mu(al, be).apply(&fc[al][i], &fc[be][j]);
                    if let e @ Err(_) = expect_eq("homomorphism-product", &[al, be], &[i, j], lhs, rhs) {
                        return Ok(e);
                    }
                }
            }
        }
    }
    Ok(Ok(()))
}

/// `x ∗_{α,β} y = p_α(x) ·_{α,β} q_β(y)`; the returned algebra carries `p`, `q`
/// and the family `R` is passed through unchanged.
pub fn yau_twist(a: &OmegaAlgebra, rb: &RotaBaxterFamily, p: &[Mat], q: &[Mat]) -> Result<(OmegaAlgebra, RotaBaxterFamily)> {
    let m = a.omega.size();
    let d = a.dim;
    check_family("p", p, m, d)?;
    check_family("q", q, m, d)?;
    rb.check_shape(a)?;
    for (w, x) in p.iter().enumerate() {
        if x.inverse().is_none() {
            return Err(Error::precondition(format!("p[{}] is not invertible", w)));
        }
    }
    for (w, x) in q.iter().enumerate() {
        if x.inverse().is_none() {
            return Err(Error::precondition(format!("q[{}] is not invertible", w)));
        }
    }
    let mut mu = Vec::with_capacity(m * m);
    for al in 0..m {
        for be in 0..m {
            let base = a.mu(al, be);
            mu.push(Bilinear::from_fn(d, d, d, |i, j| base.apply(&p[al].column(i), &q[be].column(j))));
        }
    }
    let twisted = OmegaAlgebra::new(a.omega.clone(), d, mu, p.to_vec(), q.to_vec())?;
    Ok((twisted, rb.clone()))
}

/// Parameters of the two-dimensional example family `e_i ·_{α,β} e_j = c(α,β) e_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleParams {
    /// Indexed by `α·|Ω| + β`.
    pub c: Vec<Rat>,
    pub rmap: Vec<Rat>,
    pub lmap: Vec<Rat>,
}

impl ExampleParams {
    pub fn ones(omega: &Monoid) -> ExampleParams {
        let m = omega.size();
        ExampleParams { c: vec![Rat::one(); m * m], rmap: vec![Rat::one(); m], lmap: vec![Rat::one(); m] }
    }

    pub fn check(&self, omega: &Monoid) -> Result<()> {
        let m = omega.size();
        if self.c.len() != m * m || self.rmap.len() != m || self.lmap.len() != m {
            return Err(Error::malformed("example parameters have the wrong length"));
        }
        let c = |a: usize, b: usize| &self.c[a * m + b];
        for a in 0..m {
            for b in 0..m {
                let ab = omega.mul(a, b);
                if self.rmap[ab] != &self.rmap[a] * &self.rmap[b] {
                    return Err(Error::precondition(format!("rmap(αβ) = rmap(α)rmap(β) fails at ({}, {})", a, b)));
                }
                if self.lmap[ab] != &self.lmap[a] * &self.lmap[b] {
                    return Err(Error::precondition(format!("lmap(αβ) = lmap(α)lmap(β) fails at ({}, {})", a, b)));
                }
                for g in 0..m {
                    let bg = omega.mul(b, g);
                    let lhs = c(a, b) * &self.lmap[g] * c(ab, g);
                    let rhs = c(a, bg) * &self.rmap[a] * c(b, g);
                    if lhs != rhs {
                        return Err(Error::precondition(format!(
                            "c(α,β)·lmap(γ)·c(αβ,γ) = c(α,βγ)·rmap(α)·c(β,γ) fails at ({}, {}, {})",
                            a, b, g
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `(k1 e1 + k2 e2) ·_{α,β} (k3 e1 + k4 e2) = c(α,β)(k3 + k4)(k1 e1 + k2 e2)`,
/// `p_α = rmap(α)·id`, `q_α(k1 e1 + k2 e2) = (k1 + k2) lmap(α) e1`.
pub fn build_example_family(omega: &Monoid, params: &ExampleParams) -> Result<OmegaAlgebra> {
    params.check(omega)?;
    let m = omega.size();
    let mut mu = Vec::with_capacity(m * m);
    for k in 0..m * m {
        let c = params.c[k].clone();
        mu.push(Bilinear::from_fn(2, 2, 2, |i, _| vecops::scale(&vecops::unit(2, i), &c)));
    }
    let p = params.rmap.iter().map(|r| Mat::scalar(2, r)).collect();
    let q = params
        .lmap
        .iter()
        .map(|l| Mat::from_rows(&[vec![l.clone(), l.clone()], vec![Rat::zero(), Rat::zero()]]))
        .collect();
    OmegaAlgebra::new(omega.clone(), 2, mu, p, q)
}
