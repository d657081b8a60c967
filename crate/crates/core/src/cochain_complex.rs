//! Equivariant cochains `C^n_Ω(A, M)`, the coboundary `δ`, and cohomology dimensions.
//!
//! A degree-`n` cochain is stored densely with coordinates ordered
//! lexicographically by (Ω-tuple, argument multi-index, output index).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Check, Error, Result, Witness};
use crate::exact_linalg::{kernel_from_rref, rank, rref, solve, vecops, Mat, Rat};
use crate::monoid::Monoid;
use crate::omega_algebra::Bilinear;
use crate::omega_bimodule::OmegaBimodule;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cochain {
    degree: usize,
    omega: usize,
    arg_dim: usize,
    out_dim: usize,
    data: Vec<Rat>,
}

fn ipow(b: usize, e: usize) -> usize {
    b.pow(e as u32)
}

/// `maps[ω]^k` for every ω.
pub fn family_power(maps: &[Mat], k: usize) -> Vec<Mat> {
    maps.iter().map(|m| m.pow(k)).collect()
}

impl Cochain {
    pub fn zeros(omega: usize, degree: usize, arg_dim: usize, out_dim: usize) -> Cochain {
        let len = ipow(omega, degree) * ipow(arg_dim, degree) * out_dim;
        Cochain { degree, omega, arg_dim, out_dim, data: vec![Rat::zero(); len] }
    }

    pub fn from_vec(omega: usize, degree: usize, arg_dim: usize, out_dim: usize, data: Vec<Rat>) -> Result<Cochain> {
        let len = ipow(omega, degree) * ipow(arg_dim, degree) * out_dim;
        if data.len() != len {
            return Err(Error::malformed(format!("degree-{} cochain needs {} coordinates, got {}", degree, len, data.len())));
        }
        Ok(Cochain { degree, omega, arg_dim, out_dim, data })
    }

    /// Degree-1 cochain `f_ω = maps[ω]`.
    pub fn from_maps(maps: &[Mat]) -> Cochain {
        let m = maps.len();
        let (out, d) = maps.first().map_or((0, 0), |x| (x.rows(), x.cols()));
        let mut f = Cochain::zeros(m, 1, d, out);
        for (w, x) in maps.iter().enumerate() {
            for j in 0..d {
                for o in 0..out {
                    f.data[(w * d + j) * out + o] = x[(o, j)].clone();
                }
            }
        }
        f
    }

    pub fn to_maps(&self) -> Vec<Mat> {
        assert_eq!(self.degree, 1);
        let (d, out) = (self.arg_dim, self.out_dim);
        (0..self.omega)
            .map(|w| {
                let mut x = Mat::zeros(out, d);
                for j in 0..d {
                    for o in 0..out {
                        x[(o, j)] = self.data[(w * d + j) * out + o].clone();
                    }
                }
                x
            })
            .collect()
    }

    /// Degree-2 cochain from products indexed by `α·|Ω| + β`.
    pub fn from_products(omega: usize, mu: &[Bilinear]) -> Cochain {
        assert_eq!(mu.len(), omega * omega);
        let (d, _, out) = mu[0].shape();
        let mut data = Vec::with_capacity(omega * omega * d * d * out);
        for b in mu {
            data.extend(b.entries().iter().cloned());
        }
        Cochain { degree: 2, omega, arg_dim: d, out_dim: out, data }
    }

    pub fn to_products(&self) -> Vec<Bilinear> {
        assert_eq!(self.degree, 2);
        let (d, out) = (self.arg_dim, self.out_dim);
        self.data
            .chunks(d * d * out)
            .map(|c| Bilinear::from_vec(d, d, out, c.to_vec()).expect("shape"))
            .collect()
    }

    pub fn from_vector(omega: usize, arg_dim: usize, v: Vec<Rat>) -> Cochain {
        let out = v.len();
        Cochain { degree: 0, omega, arg_dim, out_dim: out, data: v }
    }

    /// `f_ω = id` in degree 1.
    pub fn identity(omega: usize, d: usize) -> Cochain {
        Cochain::from_maps(&vec![Mat::identity(d); omega])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn omega_size(&self) -> usize {
        self.omega
    }

    pub fn arg_dim(&self) -> usize {
        self.arg_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn data(&self) -> &[Rat] {
        &self.data
    }

    pub fn raw_dim(&self) -> usize {
        self.data.len()
    }

    pub fn tuple_count(&self) -> usize {
        ipow(self.omega, self.degree)
    }

    pub fn block_len(&self) -> usize {
        ipow(self.arg_dim, self.degree) * self.out_dim
    }

    /// Values of `f_t` on basis arguments, `(argument multi-index, output)` ordered.
    pub fn block(&self, t: usize) -> &[Rat] {
        let l = self.block_len();
        &self.data[t * l..(t + 1) * l]
    }

    pub fn block_mut(&mut self, t: usize) -> &mut [Rat] {
        let l = self.block_len();
        &mut self.data[t * l..(t + 1) * l]
    }

    pub fn get(&self, t: usize, args: usize, o: usize) -> &Rat {
        &self.data[(t * ipow(self.arg_dim, self.degree) + args) * self.out_dim + o]
    }

    pub fn is_zero(&self) -> bool {
        vecops::is_zero(&self.data)
    }

    fn same_shape(&self, o: &Cochain) {
        assert_eq!(
            (self.degree, self.omega, self.arg_dim, self.out_dim),
            (o.degree, o.omega, o.arg_dim, o.out_dim),
            "cochain shapes differ"
        );
    }

    pub fn add(&self, o: &Cochain) -> Cochain {
        self.same_shape(o);
        Cochain { data: vecops::add(&self.data, &o.data), ..self.clone() }
    }

    pub fn sub(&self, o: &Cochain) -> Cochain {
        self.same_shape(o);
        Cochain { data: vecops::sub(&self.data, &o.data), ..self.clone() }
    }

    pub fn scale(&self, s: &Rat) -> Cochain {
        Cochain { data: vecops::scale(&self.data, s), ..self.clone() }
    }

    pub fn neg(&self) -> Cochain {
        self.scale(&-Rat::one())
    }

    pub fn add_scaled(&mut self, s: &Rat, o: &Cochain) {
        self.same_shape(o);
        vecops::axpy(&mut self.data, s, &o.data);
    }

    /// `f_t(v_1, …, v_n)` for arbitrary argument vectors, by successive contraction.
    pub fn eval(&self, t: usize, args: &[&[Rat]]) -> Vec<Rat> {
        assert_eq!(args.len(), self.degree);
        let mut cur = self.block(t).to_vec();
        let d = self.arg_dim;
        for v in args {
            assert_eq!(v.len(), d);
            let rest = cur.len() / d.max(1);
            let mut next = vecops::zero(rest);
            for (c, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    vecops::axpy(&mut next, x, &cur[c * rest..(c + 1) * rest]);
                }
            }
            cur = next;
        }
        cur
    }

    /// Precomposes argument `slot` (0-based) with `maps[α]`, where `α` is the
    /// Ω-index carried by that slot.
    pub fn map_slot(&self, slot: usize, maps: &[Mat]) -> Cochain {
        assert!(slot < self.degree);
        let d = self.arg_dim;
        let inner = ipow(d, self.degree - 1 - slot) * self.out_dim;
        let outer = ipow(d, slot);
        let mut out = Cochain::zeros(self.omega, self.degree, d, self.out_dim);
        let tuple_stride = ipow(self.omega, self.degree - 1 - slot);
        for t in 0..self.tuple_count() {
            let al = (t / tuple_stride) % self.omega;
            let mp = &maps[al];
            let src = self.block(t);
            if vecops::is_zero(src) {
                continue;
            }
            let dst = out.block_mut(t);
            for pre in 0..outer {
                for j in 0..d {
                    let to = (pre * d + j) * inner;
                    for c in 0..d {
                        let s = &mp[(c, j)];
                        if s.is_zero() {
                            continue;
                        }
                        let from = (pre * d + c) * inner;
                        vecops::axpy(&mut dst[to..to + inner], s, &src[from..from + inner]);
                    }
                }
            }
        }
        out
    }

    /// Postcomposes `f_t` with `maps[fold(t)]`; the output dimension becomes the row count of the maps.
    pub fn map_output(&self, omega: &Monoid, maps: &[Mat]) -> Cochain {
        let new_out = maps.first().map_or(self.out_dim, |m| m.rows());
        self.map_output_by(new_out, |t| &maps[omega.fold(&omega.tuple(self.degree, t))])
    }

    /// Postcomposes `f_t` with `pick(t)`.
    pub fn map_output_by<'m>(&self, new_out: usize, pick: impl Fn(usize) -> &'m Mat) -> Cochain {
        let args = ipow(self.arg_dim, self.degree);
        let mut out = Cochain::zeros(self.omega, self.degree, self.arg_dim, new_out);
        for t in 0..self.tuple_count() {
            let mp = pick(t);
            assert_eq!(mp.cols(), self.out_dim);
            let src = self.block(t);
            let dst = out.block_mut(t);
            for a in 0..args {
                let v = &src[a * self.out_dim..(a + 1) * self.out_dim];
                if vecops::is_zero(v) {
                    continue;
                }
                dst[a * new_out..(a + 1) * new_out].clone_from_slice(&mp.mul_vec(v));
            }
        }
        out
    }

    /// Plain insertion `f(…, g(a_slot, …, a_{slot+m-1}), …)` (0-based `slot`) with
    /// the merged Ω-index on `f`; `g` must take values in `f`'s argument space.
    pub fn insert(&self, omega: &Monoid, slot: usize, g: &Cochain) -> Cochain {
        assert!(slot < self.degree);
        assert_eq!(g.out_dim, self.arg_dim);
        assert_eq!(g.arg_dim, self.arg_dim);
        let (n, m, d) = (self.degree, g.degree, self.arg_dim);
        let deg = n + m - 1;
        let mut out = Cochain::zeros(self.omega, deg, d, self.out_dim);
        let inner = ipow(d, n - 1 - slot) * self.out_dim;
        let pre_count = ipow(d, slot);
        let gm = ipow(d, m);
        for r in 0..out.tuple_count() {
            let tup = omega.tuple(deg, r);
            let gt = &tup[slot..slot + m];
            let mut ft = Vec::with_capacity(n);
            ft.extend_from_slice(&tup[..slot]);
            ft.push(omega.fold(gt));
            ft.extend_from_slice(&tup[slot + m..]);
            let fb = self.block(omega.tuple_index(&ft));
            let gb = g.block(omega.tuple_index(gt));
            if vecops::is_zero(fb) || vecops::is_zero(gb) {
                continue;
            }
            let dst = out.block_mut(r);
            for pre in 0..pre_count {
                for j in 0..gm {
                    let to = (pre * gm + j) * inner;
                    for c in 0..d {
                        let s = &gb[j * d + c];
                        if s.is_zero() {
                            continue;
                        }
                        let from = (pre * d + c) * inner;
                        vecops::axpy(&mut dst[to..to + inner], s, &fb[from..from + inner]);
                    }
                }
            }
        }
        out
    }
}

/// First coordinate where two same-shaped cochains differ, as a Witness naming
/// the Ω-tuple and the argument basis indices.
pub(crate) fn compare_cochains(equation: &'static str, omega: &Monoid, lhs: &Cochain, rhs: &Cochain) -> Check {
    lhs.same_shape(rhs);
    let (n, d, w) = (lhs.degree, lhs.arg_dim, lhs.out_dim);
    for t in 0..lhs.tuple_count() {
        let (l, r) = (lhs.block(t), rhs.block(t));
        if l == r {
            continue;
        }
        for a in 0..ipow(d, n) {
            let (lv, rv) = (&l[a * w..(a + 1) * w], &r[a * w..(a + 1) * w]);
            if lv != rv {
                let mut basis = Vec::with_capacity(n);
                let mut x = a;
                for _ in 0..n {
                    basis.push(x % d);
                    x /= d;
                }
                basis.reverse();
                return Err(Witness::new(equation, &omega.tuple(n, t), &basis, lv.to_vec(), rv.to_vec()));
            }
        }
    }
    Ok(())
}

/// `p^M_{α1⋯αn} ∘ f = f ∘ (p_{α1} ⊗ ⋯ ⊗ p_{αn})` and the same for `q`.
pub fn is_equivariant(b: &OmegaBimodule, f: &Cochain) -> bool {
    let a = b.base();
    let om = a.omega();
    let mut pin = f.clone();
    let mut qin = f.clone();
    for s in 0..f.degree {
        pin = pin.map_slot(s, a.p_all());
        qin = qin.map_slot(s, a.q_all());
    }
    f.map_output(om, b.p_all()) == pin && f.map_output(om, b.q_all()) == qin
}

fn check_shape(b: &OmegaBimodule, f: &Cochain) -> Result<()> {
    if f.omega != b.omega().size() || f.arg_dim != b.base().dim() || f.out_dim != b.dim() {
        return Err(Error::malformed("cochain shape does not match the bimodule"));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Block {
    /// Columns span the equivariant part of one Ω-tuple block.
    basis: Mat,
    /// Free coordinate of each basis column (its entry there is 1, other free entries 0).
    free: Vec<usize>,
}

/// Basis of `C^n_Ω(A, M)` inside the raw coordinate space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantBasis {
    degree: usize,
    omega: usize,
    arg_dim: usize,
    out_dim: usize,
    blocks: Vec<Block>,
    offsets: Vec<usize>,
}

impl EquivariantBasis {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn raw_dim(&self) -> usize {
        self.blocks.len() * ipow(self.arg_dim, self.degree) * self.out_dim
    }

    /// Columns are basis cochains in raw coordinates.
    pub fn basis_matrix(&self) -> Mat {
        let cols: Vec<Vec<Rat>> = (0..self.dim()).map(|j| self.element(j).data).collect();
        Mat::from_columns(self.raw_dim(), &cols)
    }

    pub fn element(&self, j: usize) -> Cochain {
        let mut coeffs = vecops::zero(self.dim());
        coeffs[j] = Rat::one();
        self.combine(&coeffs)
    }

    pub fn combine(&self, coeffs: &[Rat]) -> Cochain {
        assert_eq!(coeffs.len(), self.dim());
        let mut f = Cochain::zeros(self.omega, self.degree, self.arg_dim, self.out_dim);
        for (t, blk) in self.blocks.iter().enumerate() {
            let c = &coeffs[self.offsets[t]..self.offsets[t + 1]];
            if vecops::is_zero(c) {
                continue;
            }
            f.block_mut(t).clone_from_slice(&blk.basis.mul_vec(c));
        }
        f
    }

    /// Coordinates in this basis, or `None` when `f` is not equivariant.
    pub fn coordinates(&self, f: &Cochain) -> Option<Vec<Rat>> {
        assert_eq!((f.degree, f.omega, f.arg_dim, f.out_dim), (self.degree, self.omega, self.arg_dim, self.out_dim));
        let mut out = Vec::with_capacity(self.dim());
        for (t, blk) in self.blocks.iter().enumerate() {
            let v = f.block(t);
            let c: Vec<Rat> = blk.free.iter().map(|&i| v[i].clone()).collect();
            if blk.basis.mul_vec(&c) != v {
                return None;
            }
            out.extend(c);
        }
        Some(out)
    }
}

fn kron_all(factors: &[Mat]) -> Mat {
    factors.iter().fold(Mat::identity(1), |acc, f| acc.kron(f))
}

/// Kernel of the stacked `p` and `q` constraint systems, block by Ω-tuple.
pub fn equivariant_basis(b: &OmegaBimodule, n: usize) -> EquivariantBasis {
    let a = b.base();
    let om = a.omega();
    let (d, w) = (a.dim(), b.dim());
    let pt: Vec<Mat> = a.p_all().iter().map(Mat::transpose).collect();
    let qt: Vec<Mat> = a.q_all().iter().map(Mat::transpose).collect();
    let args = ipow(d, n);
    let mut blocks = Vec::new();
    let mut offsets = vec![0];
    for t in 0..om.tuple_count(n) {
        let tup = om.tuple(n, t);
        let prod = om.fold(&tup);
        let constraint = |ins: &[Mat], outm: &Mat| {
            let mut fs: Vec<Mat> = tup.iter().map(|&x| ins[x].clone()).collect();
            fs.push(Mat::identity(w));
            let k_in = kron_all(&fs);
            let k_out = Mat::identity(args).kron(outm);
            k_out.sub(&k_in)
        };
        let sys = constraint(&pt, b.p(prod)).vstack(&constraint(&qt, b.q(prod)));
        let (r, piv) = rref(&sys);
        let basis = kernel_from_rref(&r, &piv);
        let mut is_piv = vec![false; args * w];
        for &p in &piv {
            is_piv[p] = true;
        }
        let free = (0..args * w).filter(|&c| !is_piv[c]).collect();
        offsets.push(offsets.last().unwrap() + basis.cols());
        blocks.push(Block { basis, free });
    }
    EquivariantBasis { degree: n, omega: om.size(), arg_dim: d, out_dim: w, blocks, offsets }
}

/// The coboundary on an arbitrary cochain, without the equivariance check.
pub(crate) fn delta_raw(b: &OmegaBimodule, f: &Cochain) -> Cochain {
    let a = b.base();
    let om = a.omega();
    let (m, d, w) = (om.size(), a.dim(), b.dim());
    let n = f.degree;
    let u = om.unit();
    if n == 0 {
        let mut out = Cochain::zeros(m, 1, d, w);
        for al in 0..m {
            let l = b.left(al, u);
            let r = b.right(u, al);
            for i in 0..d {
                let v = vecops::sub(&l.apply(&vecops::unit(d, i), &f.data), &r.apply(&f.data, &vecops::unit(d, i)));
                out.data[(al * d + i) * w..(al * d + i + 1) * w].clone_from_slice(&v);
            }
        }
        return out;
    }
    let deg = n + 1;
    let mut out = Cochain::zeros(m, deg, d, w);
    let args_n = ipow(d, n);
    let pn = family_power(a.p_all(), n - 1);
    let qn = family_power(a.q_all(), n - 1);
    // p^{n-1}(a_1) ▷ f(a_2, …) and (−1)^{n+1} f(a_1, …, a_n) ◁ q^{n-1}(a_{n+1})
    let last_sign = if n % 2 == 1 { Rat::one() } else { -Rat::one() };
    for r in 0..out.tuple_count() {
        let tup = om.tuple(deg, r);
        let rest = om.tuple_index(&tup[1..]);
        let head = om.tuple_index(&tup[..n]);
        let (al, ga) = (tup[0], tup[n]);
        let l = b.left(al, om.fold(&tup[1..]));
        let rt = b.right(om.fold(&tup[..n]), ga);
        let fr = f.block(rest);
        let fh = f.block(head);
        let dst = out.block_mut(r);
        for a1 in 0..d {
            let x = pn[al].column(a1);
            for i in 0..args_n {
                let v = &fr[i * w..(i + 1) * w];
                if vecops::is_zero(v) {
                    continue;
                }
                let y = l.apply(&x, v);
                vecops::add_assign(&mut dst[(a1 * args_n + i) * w..(a1 * args_n + i + 1) * w], &y);
            }
        }
        for i in 0..args_n {
            let v = &fh[i * w..(i + 1) * w];
            if vecops::is_zero(v) {
                continue;
            }
            for a2 in 0..d {
                let y = rt.apply(v, &qn[ga].column(a2));
                vecops::axpy(&mut dst[(i * d + a2) * w..(i * d + a2 + 1) * w], &last_sign, &y);
            }
        }
    }
    let mu = Cochain::from_products(m, a.mu_all());
    for i in 0..n {
        let mut g = f.clone();
        for s in 0..i {
            g = g.map_slot(s, a.p_all());
        }
        for s in i + 1..n {
            g = g.map_slot(s, a.q_all());
        }
        let term = g.insert(om, i, &mu);
        let sign = if (i + 1) % 2 == 0 { Rat::one() } else { -Rat::one() };
        out.add_scaled(&sign, &term);
    }
    out
}

/// `δⁿ f`; degree 0 gives `(δ⁰m)_α(a) = a ▷_{α,1} m − m ◁_{1,α} a`.
pub fn apply_delta(b: &OmegaBimodule, f: &Cochain) -> Result<Cochain> {
    check_shape(b, f)?;
    if !is_equivariant(b, f) {
        return Err(Error::precondition(format!("degree-{} cochain is not equivariant", f.degree)));
    }
    Ok(delta_raw(b, f))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DegreeDims {
    pub degree: usize,
    pub cochains: usize,
    pub cocycles: usize,
    pub coboundaries: usize,
    pub cohomology: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohomologyReport {
    pub degrees: Vec<DegreeDims>,
}

impl CohomologyReport {
    /// Builds the report from cochain dimensions `dims[0..=max+1]` and the ranks
    /// of the differentials `ranks[k] = rank(d_k)` for `k = 0..=max`.
    pub fn from_ranks(dims: &[usize], ranks: &[usize]) -> CohomologyReport {
        let degrees = (0..ranks.len())
            .map(|k| {
                let cocycles = dims[k] - ranks[k];
                let coboundaries = if k == 0 { 0 } else { ranks[k - 1] };
                DegreeDims { degree: k, cochains: dims[k], cocycles, coboundaries, cohomology: cocycles - coboundaries }
            })
            .collect();
        CohomologyReport { degrees }
    }

    pub fn h(&self) -> Vec<usize> {
        self.degrees.iter().map(|x| x.cohomology).collect()
    }
}

/// Equivariant bases of one bimodule, computed once for degrees `0..=top`.
#[derive(Debug, Clone)]
pub struct Complex {
    module: OmegaBimodule,
    bases: Vec<EquivariantBasis>,
}

impl Complex {
    pub fn new(b: &OmegaBimodule, top: usize) -> Complex {
        let bases = (0..=top).map(|n| equivariant_basis(b, n)).collect();
        Complex { module: b.clone(), bases }
    }

    /// Reuses `bases` for another bimodule with the same carrier and structure maps.
    pub fn with_bases(b: &OmegaBimodule, bases: &Complex) -> Result<Complex> {
        let o = &bases.module;
        let same = o.base().p_all() == b.base().p_all()
            && o.base().q_all() == b.base().q_all()
            && o.p_all() == b.p_all()
            && o.q_all() == b.q_all()
            && o.omega() == b.omega();
        if !same {
            return Err(Error::precondition("structure maps differ; bases cannot be shared"));
        }
        Ok(Complex { module: b.clone(), bases: bases.bases.clone() })
    }

    pub fn module(&self) -> &OmegaBimodule {
        &self.module
    }

    pub fn top(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn basis(&self, n: usize) -> &EquivariantBasis {
        &self.bases[n]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(EquivariantBasis::dim).collect()
    }

    pub fn coordinates(&self, f: &Cochain) -> Result<Vec<Rat>> {
        check_shape(&self.module, f)?;
        self.bases[f.degree]
            .coordinates(f)
            .ok_or_else(|| Error::precondition(format!("degree-{} cochain is not equivariant", f.degree)))
    }

    pub fn delta(&self, f: &Cochain) -> Result<Cochain> {
        self.coordinates(f)?;
        Ok(delta_raw(&self.module, f))
    }

    /// Column `j` holds the coordinates of `δ(basis_j)` in the degree-`n+1` basis.
    pub fn delta_matrix(&self, n: usize) -> Result<Mat> {
        let src = &self.bases[n];
        let dst = &self.bases[n + 1];
        let mut cols = Vec::with_capacity(src.dim());
        for j in 0..src.dim() {
            let img = delta_raw(&self.module, &src.element(j));
            let c = dst.coordinates(&img).ok_or_else(|| {
                Error::internal(format!("coboundary of degree-{} basis cochain {} is not equivariant", n, j))
            })?;
            cols.push(c);
        }
        Ok(Mat::from_columns(dst.dim(), &cols))
    }

    pub fn cohomology(&self, max_degree: usize) -> Result<CohomologyReport> {
        let ranks = (0..=max_degree).map(|k| self.delta_matrix(k).map(|m| rank(&m))).collect::<Result<Vec<_>>>()?;
        Ok(CohomologyReport::from_ranks(&self.dims(), &ranks))
    }

    pub fn is_cocycle(&self, f: &Cochain) -> Result<bool> {
        Ok(self.delta(f)?.is_zero())
    }

    /// A preimage under `δ` with free coordinates set to zero, or `None`.
    pub fn is_coboundary(&self, f: &Cochain) -> Result<Option<Cochain>> {
        if f.degree == 0 {
            return Err(Error::precondition("degree-0 cochains have no preimage degree"));
        }
        let c = self.coordinates(f)?;
        let dm = self.delta_matrix(f.degree - 1)?;
        Ok(solve(&dm, &c).map(|x| self.bases[f.degree - 1].combine(&x)))
    }
}

pub fn delta_matrix(b: &OmegaBimodule, n: usize) -> Result<Mat> {
    Complex::new(b, n + 1).delta_matrix(n)
}

pub fn cohomology_dims(b: &OmegaBimodule, max_degree: usize) -> Result<CohomologyReport> {
    Complex::new(b, max_degree + 1).cohomology(max_degree)
}

pub fn is_cocycle(b: &OmegaBimodule, f: &Cochain) -> Result<bool> {
    Ok(apply_delta(b, f)?.is_zero())
}

pub fn is_coboundary(b: &OmegaBimodule, f: &Cochain) -> Result<Option<Cochain>> {
    Complex::new(b, f.degree).is_coboundary(f)
}
