//! Seeded generators of valid instances.
//!
//! An instance starts from a small associative algebra `(A, μ₀)` with two
//! commuting automorphisms `φ`, `ψ`, sets `μ_{α,β}(x, y) = c(α,β) μ₀(φx, ψy)`,
//! `p = φ`, `q = ψ` for a scalar `c` with `c(α,β)c(αβ,γ) = c(α,βγ)c(β,γ)`, and
//! finally changes basis by a random unimodular matrix. Bimodules are the
//! regular one, a `φ,ψ`-stable ideal, or a trivial module.

use bihom_core::cochain_complex::{Cochain, EquivariantBasis};
use bihom_core::omega_algebra::{build_example_family, validate_algebra, Bilinear, ExampleParams, OmegaAlgebra};
use bihom_core::omega_bimodule::{example_family_module, validate_bimodule, OmegaBimodule};
use bihom_core::{Error, Mat, Monoid, Rat, Result};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    rand::SeedableRng::seed_from_u64(seed)
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub label: String,
    pub algebra: OmegaAlgebra,
    pub module: OmegaBimodule,
}

struct Base {
    name: &'static str,
    dim: usize,
    /// Nonzero products `e_i e_j = e_k` as `(i, j, k)`.
    table: &'static [(usize, usize, usize)],
    /// Diagonal weights: `e_i ↦ c^{w_i} e_i` is an automorphism for every `c ≠ 0`.
    weights: &'static [u32],
    /// The swap `e_0 ↔ e_1` is an automorphism.
    swap: bool,
    ideals: &'static [&'static [usize]],
}

const BASES: &[Base] = &[
    Base { name: "ground", dim: 1, table: &[(0, 0, 0)], weights: &[0], swap: false, ideals: &[&[0]] },
    Base { name: "zero1", dim: 1, table: &[], weights: &[1], swap: false, ideals: &[&[0]] },
    Base { name: "zero2", dim: 2, table: &[], weights: &[1, 2], swap: true, ideals: &[&[0], &[1], &[0, 1]] },
    Base { name: "zero3", dim: 3, table: &[], weights: &[1, 1, 2], swap: true, ideals: &[&[2], &[0, 1], &[1, 2]] },
    Base { name: "dual", dim: 2, table: &[(0, 0, 0), (0, 1, 1), (1, 0, 1)], weights: &[0, 1], swap: false, ideals: &[&[1]] },
    Base {
        name: "truncated3",
        dim: 3,
        table: &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (0, 2, 2), (2, 0, 2), (1, 1, 2)],
        weights: &[0, 1, 2],
        swap: false,
        ideals: &[&[1, 2], &[2]],
    },
    Base { name: "nil3", dim: 3, table: &[(0, 0, 1), (0, 1, 2), (1, 0, 2)], weights: &[1, 2, 3], swap: false, ideals: &[&[1, 2], &[2]] },
    Base { name: "split2", dim: 2, table: &[(0, 0, 0), (1, 1, 1)], weights: &[0, 0], swap: true, ideals: &[&[0], &[1]] },
    Base {
        name: "upper2",
        dim: 3,
        table: &[(0, 0, 0), (0, 1, 1), (1, 2, 1), (2, 2, 2)],
        weights: &[0, 1, 0],
        swap: false,
        ideals: &[&[1], &[0, 1], &[1, 2]],
    },
    Base { name: "left_unit", dim: 2, table: &[(0, 0, 0), (1, 0, 1)], weights: &[0, 1], swap: false, ideals: &[&[1]] },
    Base { name: "right_unit", dim: 2, table: &[(0, 0, 0), (0, 1, 1)], weights: &[0, 1], swap: false, ideals: &[&[1]] },
    Base {
        name: "ground_x_dual",
        dim: 3,
        table: &[(0, 0, 0), (1, 1, 1), (1, 2, 2), (2, 1, 2)],
        weights: &[0, 0, 1],
        swap: false,
        ideals: &[&[2], &[0], &[0, 2]],
    },
];

pub fn random_monoid(rng: &mut SeededRng, max_size: usize) -> Monoid {
    let choices: Vec<Monoid> = [Monoid::trivial(), Monoid::cyclic(2), Monoid::idempotent_pair()]
        .into_iter()
        .filter(|m| m.size() <= max_size.max(1))
        .collect();
    choices.choose(rng).expect("trivial monoid always fits").clone()
}

fn small_nonzero(rng: &mut SeededRng) -> Rat {
    Rat::from_int(*[1i64, -1, 2].choose(rng).expect("nonempty"))
}

/// `e_i ↦ c^{w_i} e_i`, composed with the swap of `e_0`, `e_1` when asked (both
/// then carry the weight of `e_0`).
fn automorphism(rng: &mut SeededRng, b: &Base, swap: bool) -> Mat {
    let c = small_nonzero(rng);
    let d = b.dim;
    let mut e = vec![Rat::zero(); d * d];
    for i in 0..d {
        let (w, j) = if swap && i < 2 { (b.weights[0], 1 - i) } else { (b.weights[i], i) };
        e[j * d + i] = c.pow(w);
    }
    Mat::from_vec(d, d, e)
}

fn scalars(rng: &mut SeededRng, om: &Monoid) -> Vec<Rat> {
    let m = om.size();
    for _ in 0..64 {
        let c: Vec<Rat> = (0..m * m).map(|_| Rat::from_int(*[1i64, -1, 2, 0].choose(rng).expect("nonempty"))).collect();
        let ok = (0..m).all(|a| {
            (0..m).all(|b| {
                (0..m).all(|g| &c[a * m + b] * &c[om.mul(a, b) * m + g] == &c[a * m + om.mul(b, g)] * &c[b * m + g])
            })
        });
        if ok && c.iter().any(|x| !x.is_zero()) {
            return c;
        }
    }
    vec![Rat::one(); m * m]
}

fn base_product(b: &Base) -> Bilinear {
    let mut mu = Bilinear::zeros(b.dim, b.dim, b.dim);
    for &(i, j, k) in b.table {
        mu.set(i, j, k, Rat::one());
    }
    mu
}

fn twisted(om: &Monoid, b: &Base, phi: &Mat, psi: &Mat, c: &[Rat]) -> Result<OmegaAlgebra> {
    let mu0 = base_product(b);
    let d = b.dim;
    let m = om.size();
    let mu = c
        .iter()
        .map(|s| Bilinear::from_fn(d, d, d, |i, j| mu0.apply(&phi.column(i), &psi.column(j)).iter().map(|x| x * s).collect()))
        .collect();
    OmegaAlgebra::new(om.clone(), d, mu, vec![phi.clone(); m], vec![psi.clone(); m])
}

/// A product of random elementary integer matrices and a permutation.
pub fn random_unimodular(rng: &mut SeededRng, n: usize) -> Mat {
    let mut m = Mat::identity(n);
    if n < 2 {
        return if rng.gen_bool(0.5) { m } else { m.scale(&-Rat::one()) };
    }
    for _ in 0..rng.gen_range(1..=3) {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let mut e = Mat::identity(n).entries().to_vec();
        e[i * n + j] = Rat::from_int(*[1i64, -1].choose(rng).expect("nonempty"));
        m = m.mul(&Mat::from_vec(n, n, e));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let p = Mat::from_vec(n, n, (0..n * n).map(|k| if perm[k / n] == k % n { Rat::one() } else { Rat::zero() }).collect());
    m.mul(&p)
}

/// `μ'(x, y) = P⁻¹ μ(P x, P y)`, `p' = P⁻¹ p P`, `q' = P⁻¹ q P`.
pub fn change_basis(a: &OmegaAlgebra, pm: &Mat) -> Result<OmegaAlgebra> {
    let inv = pm.inverse().ok_or_else(|| Error::precondition("basis change is not invertible"))?;
    let d = a.dim();
    let mu = a.mu_all().iter().map(|b| Bilinear::from_fn(d, d, d, |i, j| inv.mul_vec(&b.apply(&pm.column(i), &pm.column(j))))).collect();
    let conj = |maps: &[Mat]| maps.iter().map(|x| inv.mul(x).mul(pm)).collect();
    OmegaAlgebra::new(a.omega().clone(), d, mu, conj(a.p_all()), conj(a.q_all()))
}

/// The bimodule over `change_basis(A, P)` obtained by changing bases with `P` on `A` and `Q` on `M`.
pub fn change_module_basis(b: &OmegaBimodule, base: &OmegaAlgebra, pm: &Mat, qm: &Mat) -> Result<OmegaBimodule> {
    let qi = qm.inverse().ok_or_else(|| Error::precondition("basis change is not invertible"))?;
    let (d, w) = (base.dim(), b.dim());
    let left = b.left_all().iter().map(|x| Bilinear::from_fn(d, w, w, |i, j| qi.mul_vec(&x.apply(&pm.column(i), &qm.column(j))))).collect();
    let right = b.right_all().iter().map(|x| Bilinear::from_fn(w, d, w, |j, i| qi.mul_vec(&x.apply(&qm.column(j), &pm.column(i))))).collect();
    let conj = |maps: &[Mat]| maps.iter().map(|x| qi.mul(x).mul(qm)).collect::<Vec<_>>();
    let t = b.t().map(conj);
    OmegaBimodule::new(base.clone(), w, left, right, conj(b.p_all()), conj(b.q_all()), t)
}

fn stable(m: &Mat, ideal: &[usize]) -> bool {
    ideal.iter().all(|&j| (0..m.rows()).all(|i| ideal.contains(&i) || m.entries()[i * m.cols() + j].is_zero()))
}

/// The span of the basis vectors `ideal` as a bimodule by restriction.
fn ideal_module(a: &OmegaAlgebra, ideal: &[usize]) -> Result<OmegaBimodule> {
    let d = a.dim();
    let w = ideal.len();
    let restrict = |v: &[Rat]| -> Result<Vec<Rat>> {
        if (0..d).any(|i| !ideal.contains(&i) && !v[i].is_zero()) {
            return Err(Error::precondition("span is not an ideal"));
        }
        Ok(ideal.iter().map(|&i| v[i].clone()).collect())
    };
    let embed = |j: usize| -> Vec<Rat> { (0..d).map(|i| if i == ideal[j] { Rat::one() } else { Rat::zero() }).collect() };
    let mut left = Vec::new();
    let mut right = Vec::new();
    for mu in a.mu_all() {
        let mut l = Bilinear::zeros(d, w, w);
        let mut r = Bilinear::zeros(w, d, w);
        for x in 0..d {
            for y in 0..w {
                for (k, v) in restrict(&mu.apply(&embed_unit(d, x), &embed(y)))?.into_iter().enumerate() {
                    l.set(x, y, k, v);
                }
                for (k, v) in restrict(&mu.apply(&embed(y), &embed_unit(d, x)))?.into_iter().enumerate() {
                    r.set(y, x, k, v);
                }
            }
        }
        left.push(l);
        right.push(r);
    }
    let sub = |maps: &[Mat]| -> Result<Vec<Mat>> {
        maps.iter()
            .map(|x| {
                let cols = (0..w).map(|j| restrict(&x.mul_vec(&embed(j)))).collect::<Result<Vec<_>>>()?;
                Ok(Mat::from_columns(w, &cols))
            })
            .collect()
    };
    OmegaBimodule::new(a.clone(), w, left, right, sub(a.p_all())?, sub(a.q_all())?, None)
}

fn embed_unit(d: usize, i: usize) -> Vec<Rat> {
    (0..d).map(|k| if k == i { Rat::one() } else { Rat::zero() }).collect()
}

fn random_diagonal(rng: &mut SeededRng, n: usize) -> Mat {
    Mat::from_vec(n, n, (0..n * n).map(|k| if k / n == k % n { Rat::from_int(rng.gen_range(-1..=2)) } else { Rat::zero() }).collect())
}

fn trivial_module(rng: &mut SeededRng, a: &OmegaAlgebra, w: usize) -> Result<OmegaBimodule> {
    let m = a.omega().size();
    let p = random_diagonal(rng, w);
    let q = random_diagonal(rng, w);
    OmegaBimodule::trivial(a, w, vec![p; m], vec![q; m], None)
}

fn random_example_params(rng: &mut SeededRng, om: &Monoid) -> ExampleParams {
    for _ in 0..256 {
        let m = om.size();
        let pick = |rng: &mut SeededRng, xs: &[i64]| Rat::from_int(*xs.choose(rng).expect("nonempty"));
        let params = ExampleParams {
            c: (0..m * m).map(|_| pick(rng, &[1, -1, 2, 0])).collect(),
            rmap: (0..m).map(|_| pick(rng, &[1, -1, 0])).collect(),
            lmap: (0..m).map(|_| pick(rng, &[1, -1, 0])).collect(),
        };
        if params.check(om).is_ok() {
            return params;
        }
    }
    ExampleParams::ones(om)
}

/// A valid algebra of dimension at most `max_dim` over a random monoid of size at most `max_omega`.
pub fn random_algebra(rng: &mut SeededRng, max_dim: usize, max_omega: usize) -> Result<(OmegaAlgebra, String)> {
    random_algebra_with_ideal(rng, max_dim, max_omega).map(|(a, l, _)| (a, l))
}

fn random_algebra_with_ideal(rng: &mut SeededRng, max_dim: usize, max_omega: usize) -> Result<(OmegaAlgebra, String, Option<OmegaBimodule>)> {
    let om = random_monoid(rng, max_omega);
    if max_dim >= 2 && rng.gen_bool(0.2) {
        let params = random_example_params(rng, &om);
        let a = build_example_family(&om, &params)?;
        let module = example_family_module(&om, &params)?;
        return Ok((a, format!("example/|Ω|={}", om.size()), Some(module)));
    }
    let fits: Vec<&Base> = BASES.iter().filter(|b| b.dim <= max_dim).collect();
    let b = *fits.choose(rng).ok_or_else(|| Error::precondition("no base algebra fits the dimension bound"))?;
    let swap = b.swap && rng.gen_bool(0.3);
    let phi = automorphism(rng, b, swap);
    let swap_psi = swap && rng.gen_bool(0.5);
    let psi = automorphism(rng, b, swap_psi);
    let psi = if phi.commutes_with(&psi) { psi } else { phi.clone() };
    let c = scalars(rng, &om);
    let a = twisted(&om, b, &phi, &psi, &c)?;
    let ideals: Vec<&&[usize]> = b.ideals.iter().filter(|s| stable(&phi, s) && stable(&psi, s)).collect();
    let module = match ideals.choose(rng) {
        Some(s) if s.len() <= 2 => Some(ideal_module(&a, s)?),
        _ => None,
    };
    Ok((a, format!("{}/|Ω|={}", b.name, om.size()), module))
}

/// A validated `(algebra, bimodule)` pair with `dim A ≤ max_dim`, `dim M ≤ max_module`, `|Ω| ≤ max_omega`.
pub fn random_instance(rng: &mut SeededRng, max_dim: usize, max_module: usize, max_omega: usize) -> Result<Instance> {
    let (a, label, ideal) = random_algebra_with_ideal(rng, max_dim, max_omega)?;
    let choice = rng.gen_range(0..3);
    let (module, kind) = match (choice, ideal) {
        (0, _) if a.dim() <= max_module => (OmegaBimodule::regular(&a, None)?, "regular"),
        (1, Some(m)) if m.dim() <= max_module => (m, "ideal"),
        _ => {
            let w = rng.gen_range(1..=max_module.max(1));
            (trivial_module(rng, &a, w)?, "trivial")
        }
    };
    let pm = random_unimodular(rng, a.dim());
    let qm = random_unimodular(rng, module.dim());
    let a2 = change_basis(&a, &pm)?;
    let m2 = change_module_basis(&module, &a2, &pm, &qm)?;
    validate_algebra(&a2).map_err(|w| Error::internal(format!("generated algebra {} fails: {}", label, w)))?;
    validate_bimodule(&m2).map_err(|w| Error::internal(format!("generated {} bimodule over {} fails: {}", kind, label, w)))?;
    Ok(Instance { label: format!("{}+{}", label, kind), algebra: a2, module: m2 })
}

/// `Σ c_j b_j` with integer coefficients `c_j ∈ [−2, 2]`.
pub fn random_combination(rng: &mut SeededRng, basis: &EquivariantBasis) -> Cochain {
    let coeffs: Vec<Rat> = (0..basis.dim()).map(|_| Rat::from_int(rng.gen_range(-2..=2))).collect();
    basis.combine(&coeffs)
}
