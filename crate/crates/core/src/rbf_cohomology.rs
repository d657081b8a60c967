//! The Rota-Baxter family complex `C•_RBF(A, M) = C•_Ω(A⋆, M⋆)` with its
//! differential `∂`, the chain map `Φ`, and the combined complex
//! `C^n_RBFA = C^n_Ω ⊕ C^{n−1}_RBF` with `d(f, g) = (δf, −∂g − Φf)`.

use alloc::format;
use alloc::vec::Vec;

use crate::cochain_complex::{delta_raw, family_power, Cochain, CohomologyReport, Complex};
use crate::error::{Check, Error, Result, Witness};
use crate::exact_linalg::{rank, vecops, Mat, Rat};
use crate::omega_algebra::{check_rota_baxter, star_product_unchecked, validate_algebra, OmegaAlgebra, RotaBaxterFamily};
use crate::omega_bimodule::{induced_module_star_unchecked, validate_bimodule, validate_rbf_bimodule, OmegaBimodule};

fn require(c: Check, what: &str) -> Result<()> {
    c.map_err(|w| Error::precondition(format!("{} does not validate: {}", what, w)))
}

fn validate_all(b: &OmegaBimodule, rb: &RotaBaxterFamily) -> Result<()> {
    require(validate_algebra(b.base()), "algebra")?;
    require(check_rota_baxter(b.base(), rb)?, "Rota-Baxter family")?;
    require(validate_bimodule(b), "bimodule")?;
    require(validate_rbf_bimodule(b, rb)?, "Rota-Baxter family bimodule")
}

fn check_shape(b: &OmegaBimodule, f: &Cochain) -> Result<()> {
    if f.omega_size() != b.omega().size() || f.arg_dim() != b.base().dim() || f.out_dim() != b.dim() {
        return Err(Error::malformed("cochain shape does not match the bimodule"));
    }
    Ok(())
}

/// `∂f`, computed as `δ` over `(A⋆, M⋆)` and checked against the expanded formula.
pub fn partial(b: &OmegaBimodule, rb: &RotaBaxterFamily, f: &Cochain) -> Result<Cochain> {
    validate_all(b, rb)?;
    check_shape(b, f)?;
    partial_checked_routes(b, &induced_module_star_unchecked(b, rb), rb, f)
}

fn partial_checked_routes(b: &OmegaBimodule, star: &OmegaBimodule, rb: &RotaBaxterFamily, f: &Cochain) -> Result<Cochain> {
    let via_star = delta_raw(star, f);
    let expanded = partial_expanded(b, rb, f)?;
    if via_star != expanded {
        return Err(Error::internal(format!("the two routes for ∂ disagree in degree {}", f.degree())));
    }
    Ok(via_star)
}

/// The expanded form of `∂`, written entirely with `·`, `▷`, `◁`, `R` and `T`.
/// Evaluated pointwise on basis arguments.
pub fn partial_expanded(b: &OmegaBimodule, rb: &RotaBaxterFamily, f: &Cochain) -> Result<Cochain> {
    check_shape(b, f)?;
    let t = b.require_t()?;
    let a = b.base();
    let om = a.omega();
    let (m, d, w) = (om.size(), a.dim(), b.dim());
    let n = f.degree();
    let u = om.unit();
    let r = &rb.r;
    let lam = &rb.weight;
    let e = |i: usize| vecops::unit(d, i);
    if n == 0 {
        let mv = f.data();
        let mut out = Cochain::zeros(m, 1, d, w);
        for al in 0..m {
            let l = b.left(al, u);
            let rt = b.right(u, al);
            let blk = out.block_mut(al);
            for i in 0..d {
                let ra = r[al].column(i);
                let mut v = l.apply(&ra, mv);
                vecops::sub_assign(&mut v, &t[al].mul_vec(&l.apply(&e(i), mv)));
                vecops::sub_assign(&mut v, &rt.apply(mv, &ra));
                vecops::add_assign(&mut v, &t[al].mul_vec(&rt.apply(mv, &e(i))));
                blk[i * w..(i + 1) * w].clone_from_slice(&v);
            }
        }
        return Ok(out);
    }
    let deg = n + 1;
    let pn = family_power(a.p_all(), n - 1);
    let qn = family_power(a.q_all(), n - 1);
    let mut out = Cochain::zeros(m, deg, d, w);
    let total_args = d.pow(deg as u32);
    let last_sign = if (n + 1).is_multiple_of(2) { Rat::one() } else { -Rat::one() };
    for ti in 0..out.tuple_count() {
        let tup = om.tuple(deg, ti);
        let all = om.fold(&tup);
        let rest_t = om.tuple_index(&tup[1..]);
        let head_t = om.tuple_index(&tup[..n]);
        let l = b.left(tup[0], om.fold(&tup[1..]));
        let rt = b.right(om.fold(&tup[..n]), tup[n]);
        let mut vals = Vec::with_capacity(total_args * w);
        for flat in 0..total_args {
            let mut idx = Vec::with_capacity(deg);
            let mut x = flat;
            for _ in 0..deg {
                idx.push(x % d);
                x /= d;
            }
            idx.reverse();
            let args: Vec<Vec<Rat>> = idx.iter().map(|&i| e(i)).collect();
            let eval = |tt: usize, vs: &[Vec<Rat>]| {
                let rs: Vec<&[Rat]> = vs.iter().map(|v| v.as_slice()).collect();
                f.eval(tt, &rs)
            };
            // R(p^{n-1} a1) ▷ f(…) − T(p^{n-1} a1 ▷ f(…))
            let x1 = pn[tup[0]].mul_vec(&args[0]);
            let fr = eval(rest_t, &args[1..]);
            let mut v = l.apply(&r[tup[0]].mul_vec(&x1), &fr);
            vecops::sub_assign(&mut v, &t[all].mul_vec(&l.apply(&x1, &fr)));
            for i in 0..n {
                let (ai, aj) = (tup[i], tup[i + 1]);
                let mu = a.mu(ai, aj);
                let mut star = mu.apply(&args[i], &r[aj].mul_vec(&args[i + 1]));
                vecops::add_assign(&mut star, &mu.apply(&r[ai].mul_vec(&args[i]), &args[i + 1]));
                vecops::axpy(&mut star, lam, &mu.apply(&args[i], &args[i + 1]));
                let mut vs = args[..i].to_vec();
                for (j, s) in vs.iter_mut().enumerate() {
                    *s = a.p(tup[j]).mul_vec(s);
                }
                vs.push(star);
                for j in i + 2..deg {
                    vs.push(a.q(tup[j]).mul_vec(&args[j]));
                }
                let mut mt = Vec::with_capacity(n);
                mt.extend_from_slice(&tup[..i]);
                mt.push(om.mul(ai, aj));
                mt.extend_from_slice(&tup[i + 2..]);
                let term = eval(om.tuple_index(&mt), &vs);
                let s = if (i + 1) % 2 == 0 { Rat::one() } else { -Rat::one() };
                vecops::axpy(&mut v, &s, &term);
            }
            // (−1)^{n+1} [f(…) ◁ R q^{n-1} a_{n+1} − T(f(…) ◁ q^{n-1} a_{n+1})]
            let fh = eval(head_t, &args[..n]);
            let y = qn[tup[n]].mul_vec(&args[n]);
            let mut last = rt.apply(&fh, &r[tup[n]].mul_vec(&y));
            vecops::sub_assign(&mut last, &t[all].mul_vec(&rt.apply(&fh, &y)));
            vecops::axpy(&mut v, &last_sign, &last);
            vals.extend(v);
        }
        out.block_mut(ti).clone_from_slice(&vals);
    }
    Ok(out)
}

/// `Φⁿf`: `f(R, …, R)` minus `λ^{n−k−1} T∘f` with `R` in exactly `k` chosen slots,
/// summed over `k < n`. `Φ⁰` is the identity.
pub fn phi(b: &OmegaBimodule, rb: &RotaBaxterFamily, f: &Cochain) -> Result<Cochain> {
    check_shape(b, f)?;
    let t = b.require_t()?;
    rb.check_shape(b.base())?;
    Ok(phi_terms(b.omega(), t, rb, f, true))
}

pub(crate) fn phi_terms(om: &crate::monoid::Monoid, t: &[Mat], rb: &RotaBaxterFamily, f: &Cochain, with_empty: bool) -> Cochain {
    let n = f.degree();
    if n == 0 {
        return f.clone();
    }
    let mut out = Cochain::zeros(f.omega_size(), n, f.arg_dim(), f.out_dim());
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k == 0 && n >= 2 && !with_empty {
            continue;
        }
        let mut g = f.clone();
        for s in 0..n {
            if mask & (1 << s) != 0 {
                g = g.map_slot(s, &rb.r);
            }
        }
        if k == n {
            out.add_scaled(&Rat::one(), &g);
        } else {
            let c = -rb.weight.pow((n - k - 1) as u32);
            if !c.is_zero() {
                out.add_scaled(&c, &g.map_output(om, t));
            }
        }
    }
    out
}

/// Everything needed for the combined complex, validated once.
#[derive(Debug, Clone)]
pub struct RbfContext {
    rb: RotaBaxterFamily,
    alg: Complex,
    rbf: Complex,
}

impl RbfContext {
    /// Validates the algebra, `R`, the bimodule and its `T`, and precomputes
    /// bases for degrees `0..=top`.
    pub fn new(b: &OmegaBimodule, rb: &RotaBaxterFamily, top: usize) -> Result<RbfContext> {
        validate_all(b, rb)?;
        let alg = Complex::new(b, top);
        let star = induced_module_star_unchecked(b, rb);
        let rbf = Complex::with_bases(&star, &alg)?;
        Ok(RbfContext { rb: rb.clone(), alg, rbf })
    }

    /// The regular bimodule with `T = R`.
    pub fn regular(a: &OmegaAlgebra, rb: &RotaBaxterFamily, top: usize) -> Result<RbfContext> {
        RbfContext::new(&OmegaBimodule::regular_rbf(a, rb)?, rb, top)
    }

    pub fn module(&self) -> &OmegaBimodule {
        self.alg.module()
    }

    pub fn algebra(&self) -> &OmegaAlgebra {
        self.alg.module().base()
    }

    pub fn rb(&self) -> &RotaBaxterFamily {
        &self.rb
    }

    pub fn star_module(&self) -> &OmegaBimodule {
        self.rbf.module()
    }

    pub fn star_algebra(&self) -> OmegaAlgebra {
        star_product_unchecked(self.algebra(), &self.rb)
    }

    pub fn alg_complex(&self) -> &Complex {
        &self.alg
    }

    pub fn rbf_complex(&self) -> &Complex {
        &self.rbf
    }

    pub fn top(&self) -> usize {
        self.alg.top()
    }

    pub fn t(&self) -> &[Mat] {
        self.module().t().expect("validated")
    }

    /// `∂f` with both routes compared.
    pub fn partial(&self, f: &Cochain) -> Result<Cochain> {
        self.rbf.coordinates(f)?;
        partial_checked_routes(self.module(), self.star_module(), &self.rb, f)
    }

    pub fn phi(&self, f: &Cochain) -> Result<Cochain> {
        self.alg.coordinates(f)?;
        Ok(phi_terms(self.module().omega(), self.t(), &self.rb, f, true))
    }

    /// dim `C^n_RBFA`.
    pub fn combined_dim(&self, n: usize) -> usize {
        self.alg.basis(n).dim() + if n == 0 { 0 } else { self.rbf.basis(n - 1).dim() }
    }

    /// Coordinates of `Φⁿ(basis_j)` in the degree-`n` basis.
    pub fn phi_matrix(&self, n: usize) -> Result<Mat> {
        self.map_matrix(n, n, |f| Ok(phi_terms(self.module().omega(), self.t(), &self.rb, f, true)))
    }

    /// Coordinates of `∂ⁿ(basis_j)`.
    pub fn partial_matrix(&self, n: usize) -> Result<Mat> {
        self.rbf.delta_matrix(n)
    }

    fn map_matrix(&self, src: usize, dst: usize, map: impl Fn(&Cochain) -> Result<Cochain>) -> Result<Mat> {
        let sb = self.alg.basis(src);
        let db = self.alg.basis(dst);
        let mut cols = Vec::with_capacity(sb.dim());
        for j in 0..sb.dim() {
            let img = map(&sb.element(j))?;
            let c = db
                .coordinates(&img)
                .ok_or_else(|| Error::internal(format!("image of degree-{} basis cochain {} is not equivariant", src, j)))?;
            cols.push(c);
        }
        Ok(Mat::from_columns(db.dim(), &cols))
    }

    /// `dⁿ` on the combined basis (algebra block first, then the RBF block).
    pub fn combined_matrix(&self, n: usize) -> Result<Mat> {
        let delta = self.alg.delta_matrix(n)?;
        let phi = self.phi_matrix(n)?.scale(&-Rat::one());
        if n == 0 {
            return Ok(delta.vstack(&phi));
        }
        let part = self.partial_matrix(n - 1)?.scale(&-Rat::one());
        let top = delta.hstack(&Mat::zeros(delta.rows(), part.cols()));
        Ok(top.vstack(&phi.hstack(&part)))
    }

    /// Splits combined coordinates into a cochain pair.
    pub fn combine(&self, n: usize, coeffs: &[Rat]) -> CombinedCochain {
        let k = self.alg.basis(n).dim();
        let alg = self.alg.basis(n).combine(&coeffs[..k]);
        let rbf = if n == 0 { None } else { Some(self.rbf.basis(n - 1).combine(&coeffs[k..])) };
        CombinedCochain { alg, rbf }
    }

    pub fn coordinates(&self, x: &CombinedCochain) -> Result<Vec<Rat>> {
        let mut c = self.alg.coordinates(&x.alg)?;
        if let Some(g) = &x.rbf {
            c.extend(self.rbf.coordinates(g)?);
        }
        Ok(c)
    }

    /// Basis of `ker dⁿ` as combined cochains.
    pub fn cocycle_basis(&self, n: usize) -> Result<Vec<CombinedCochain>> {
        let k = crate::exact_linalg::kernel_basis(&self.combined_matrix(n)?);
        Ok((0..k.cols()).map(|j| self.combine(n, &k.column(j))).collect())
    }
}

/// An element of `C^n_RBFA`: `(f, g)` with `g` of degree `n − 1`, or just `f` when `n = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CombinedCochain {
    pub alg: Cochain,
    pub rbf: Option<Cochain>,
}

impl CombinedCochain {
    pub fn new(alg: Cochain, rbf: Option<Cochain>) -> Result<CombinedCochain> {
        match (&rbf, alg.degree()) {
            (None, 0) => {}
            (Some(g), n) if n >= 1 && g.degree() == n - 1 => {}
            _ => return Err(Error::malformed("combined cochain components have inconsistent degrees")),
        }
        Ok(CombinedCochain { alg, rbf })
    }

    pub fn degree(&self) -> usize {
        self.alg.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.alg.is_zero() && self.rbf.as_ref().is_none_or(Cochain::is_zero)
    }

    pub fn add(&self, o: &CombinedCochain) -> CombinedCochain {
        let rbf = match (&self.rbf, &o.rbf) {
            (Some(a), Some(b)) => Some(a.add(b)),
            _ => None,
        };
        CombinedCochain { alg: self.alg.add(&o.alg), rbf }
    }

    pub fn sub(&self, o: &CombinedCochain) -> CombinedCochain {
        self.add(&o.scale(&-Rat::one()))
    }

    pub fn scale(&self, s: &Rat) -> CombinedCochain {
        CombinedCochain { alg: self.alg.scale(s), rbf: self.rbf.as_ref().map(|g| g.scale(s)) }
    }
}

/// `d(f, g) = (δf, −∂g − Φf)`; in degree 0, `d(m) = (δ⁰m, −m)`.
pub fn d_combined(ctx: &RbfContext, x: &CombinedCochain) -> Result<CombinedCochain> {
    let f = &x.alg;
    let df = ctx.alg.delta(f)?;
    let mut low = ctx.phi(f)?.neg();
    if let Some(g) = &x.rbf {
        low = low.sub(&ctx.partial(g)?);
    }
    Ok(CombinedCochain { alg: df, rbf: Some(low) })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RbfaReport {
    pub alg: CohomologyReport,
    pub rbf: CohomologyReport,
    pub rbfa: CohomologyReport,
}

/// Dimensions of `H•_Ω(A, M)`, `H•_RBF(A, M)` and `H•_RBFA(A, M)` up to `max_degree`.
pub fn rbfa_cohomology_dims(ctx: &RbfContext, max_degree: usize) -> Result<RbfaReport> {
    if ctx.top() < max_degree + 1 {
        return Err(Error::precondition(format!("context holds bases up to degree {}, need {}", ctx.top(), max_degree + 1)));
    }
    let alg = ctx.alg.cohomology(max_degree)?;
    let rbf = ctx.rbf.cohomology(max_degree)?;
    let dims: Vec<usize> = (0..=max_degree + 1).map(|n| ctx.combined_dim(n)).collect();
    let ranks = (0..=max_degree).map(|n| ctx.combined_matrix(n).map(|m| rank(&m))).collect::<Result<Vec<_>>>()?;
    Ok(RbfaReport { alg, rbf, rbfa: CohomologyReport::from_ranks(&dims, &ranks) })
}

/// `∂ⁿΦⁿ = Φⁿ⁺¹δⁿ` as matrices for `n = 0..=max_degree`.
pub fn chain_map_check(ctx: &RbfContext, max_degree: usize) -> Result<Check> {
    chain_map_check_with(ctx, max_degree, |f| ctx.phi(f))
}

pub(crate) fn chain_map_check_with(ctx: &RbfContext, max_degree: usize, phi: impl Fn(&Cochain) -> Result<Cochain>) -> Result<Check> {
    if ctx.top() < max_degree + 1 {
        return Err(Error::precondition(format!("context holds bases up to degree {}, need {}", ctx.top(), max_degree + 1)));
    }
    for n in 0..=max_degree {
        let delta = ctx.alg.delta_matrix(n)?;
        let phi_n = ctx.map_matrix(n, n, &phi)?;
        let phi_n1 = ctx.map_matrix(n + 1, n + 1, &phi)?;
        let lhs = ctx.partial_matrix(n)?.mul(&phi_n);
        let rhs = phi_n1.mul(&delta);
        for j in 0..lhs.cols() {
            let (l, r) = (lhs.column(j), rhs.column(j));
            if l != r {
                return Ok(Err(Witness::new("chain-map", &[], &[n, j], l, r)));
            }
        }
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::Monoid;
    use crate::omega_algebra::{build_example_family, ExampleParams};

    fn e1() -> OmegaAlgebra {
        build_example_family(&Monoid::trivial(), &ExampleParams::ones(&Monoid::trivial())).unwrap()
    }

    /// First non-scalar integer family in `[-1, 1]` passing the identity.
    fn searched(a: &OmegaAlgebra, lam: i64) -> RotaBaxterFamily {
        let vals = [-1i64, 0, 1];
        for code in 0..81usize {
            let mut c = code;
            let mut ent = [0i64; 4];
            for e in ent.iter_mut() {
                *e = vals[c % 3];
                c /= 3;
            }
            let r = Mat::from_ints(&[&ent[..2], &ent[2..]]);
            if r.is_zero() || (ent[1] == 0 && ent[2] == 0 && ent[0] == ent[3]) {
                continue;
            }
            let rb = RotaBaxterFamily::new(Rat::from_int(lam), alloc::vec![r]);
            if check_rota_baxter(a, &rb).unwrap().is_ok() {
                return rb;
            }
        }
        panic!("no family found")
    }

    #[test]
    fn routes_agree_on_basis() {
        for rb in [searched(&e1(), 1), RotaBaxterFamily::minus_weight(&e1(), Rat::from_int(2))] {
            let a = e1();
            let ctx = RbfContext::regular(&a, &rb, 3).unwrap();
            for n in 0..3 {
                let bs = ctx.rbf_complex().basis(n);
                for j in 0..bs.dim() {
                    ctx.partial(&bs.element(j)).unwrap();
                }
            }
        }
    }

    #[test]
    fn reduced_partial() {
        let a = e1();
        let rb = RotaBaxterFamily::zero(&a, Rat::one());
        let b = OmegaBimodule::regular(&a, Some(alloc::vec![Mat::zeros(2, 2)])).unwrap();
        let f = Cochain::identity(1, 2);
        let df = partial(&b, &rb, &f).unwrap();
        assert_eq!(df, Cochain::from_products(1, a.mu_all()).neg());
        for n in 1..3 {
            let ctx = RbfContext::new(&b, &rb, n).unwrap();
            let bs = ctx.alg_complex().basis(n);
            for j in 0..bs.dim() {
                assert!(ctx.phi(&bs.element(j)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn phi_weight_zero_without_t() {
        let a = OmegaAlgebra::zero(Monoid::trivial(), 2);
        let rb = RotaBaxterFamily::new(Rat::zero(), alloc::vec![Mat::from_ints(&[&[1, 2], &[0, -1]])]);
        let b = OmegaBimodule::regular(&a, Some(alloc::vec![Mat::zeros(2, 2)])).unwrap();
        let f = Cochain::from_vec(1, 2, 2, 2, (0..8).map(|i| Rat::from_int(i - 5)).collect()).unwrap();
        let got = phi(&b, &rb, &f).unwrap();
        assert_eq!(got, f.map_slot(0, &rb.r).map_slot(1, &rb.r));
    }

    #[test]
    fn chain_map_and_d_squared() {
        for rb in [searched(&e1(), 1), RotaBaxterFamily::zero(&e1(), Rat::zero())] {
            let a = e1();
            let ctx = RbfContext::regular(&a, &rb, 4).unwrap();
            assert_eq!(chain_map_check(&ctx, 3).unwrap(), Ok(()));
            for n in 0..3 {
                let prod = ctx.combined_matrix(n + 1).unwrap().mul(&ctx.combined_matrix(n).unwrap());
                assert!(prod.is_zero(), "d∘d at degree {}", n);
            }
        }
    }

    #[test]
    fn dropped_term_is_caught() {
        let a = e1();
        let rb = searched(&a, 1);
        let ctx = RbfContext::regular(&a, &rb, 3).unwrap();
        let w = chain_map_check_with(&ctx, 2, |f| Ok(phi_terms(ctx.module().omega(), ctx.t(), ctx.rb(), f, false)))
            .unwrap()
            .unwrap_err();
        assert_eq!(w.equation, "chain-map");
    }

    #[test]
    fn ground_field_minus_weight() {
        let a = OmegaAlgebra::ground_field();
        let rb = RotaBaxterFamily::minus_weight(&a, Rat::one());
        let ctx = RbfContext::regular(&a, &rb, 3).unwrap();
        let rep = rbfa_cohomology_dims(&ctx, 2).unwrap();
        assert_eq!(rep.alg.h(), alloc::vec![1, 0, 0]);
        for n in 0..3 {
            assert_eq!(rep.rbfa.degrees[n].cochains, ctx.combined_dim(n));
        }
    }
}
