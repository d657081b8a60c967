//! Direct-loop evaluators used as oracles. Everything here works on raw
//! structure constants with nested loops and shares nothing with the library
//! beyond the data accessors.
#![allow(dead_code, clippy::needless_range_loop)]

use bihom_core::cochain_complex::Cochain;
use bihom_core::omega_algebra::{build_example_family, Bilinear, ExampleParams, OmegaAlgebra, RotaBaxterFamily};
use bihom_core::omega_bimodule::OmegaBimodule;
use bihom_core::{Mat, Monoid, Rat};

pub fn r(n: i64) -> Rat {
    Rat::from_int(n)
}

pub fn e1() -> OmegaAlgebra {
    let t = Monoid::trivial();
    build_example_family(&t, &ExampleParams::ones(&t)).unwrap()
}

pub fn example(om: Monoid) -> OmegaAlgebra {
    build_example_family(&om, &ExampleParams::ones(&om)).unwrap()
}

pub fn dual_numbers() -> OmegaAlgebra {
    let mut mu = Bilinear::zeros(2, 2, 2);
    mu.set(0, 0, 0, r(1));
    mu.set(0, 1, 1, r(1));
    mu.set(1, 0, 1, r(1));
    OmegaAlgebra::constant(Monoid::trivial(), mu).unwrap()
}

/// The weight-1 family found first by the bounded search on E1.
pub fn e1_searched_r() -> RotaBaxterFamily {
    RotaBaxterFamily::new(r(1), vec![Mat::from_ints(&[&[-1, -1], &[0, 0]])])
}

pub fn unit(n: usize, i: usize) -> Vec<Rat> {
    (0..n).map(|k| if k == i { r(1) } else { r(0) }).collect()
}

pub fn mat_vec(m: &Mat, x: &[Rat]) -> Vec<Rat> {
    let mut out = vec![r(0); m.rows()];
    for (i, o) in out.iter_mut().enumerate() {
        for (j, xj) in x.iter().enumerate() {
            *o += &m[(i, j)] * xj;
        }
    }
    out
}

pub fn bil(b: &Bilinear, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
    let (l, rr, o) = b.shape();
    let mut out = vec![r(0); o];
    for i in 0..l {
        for j in 0..rr {
            let c = &x[i] * &y[j];
            if c.is_zero() {
                continue;
            }
            for (k, ok) in out.iter_mut().enumerate() {
                *ok += &c * b.get(i, j, k);
            }
        }
    }
    out
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rat], s: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * s).collect()
}

pub fn power(m: &Mat, k: usize) -> Mat {
    let mut out = Mat::identity(m.rows());
    for _ in 0..k {
        out = m.mul(&out);
    }
    out
}

/// Every multi-index in `0..d` of length `n`, first index slowest.
pub fn multi_indices(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..d).map(move |i| {
                    let mut q = p.clone();
                    q.push(i);
                    q
                })
            })
            .collect();
    }
    out
}

fn flat(idx: &[usize], d: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * d + i)
}

/// `f_ws(v_1, …, v_n)` by full multilinear expansion.
pub fn eval(f: &Cochain, om: &Monoid, ws: &[usize], vs: &[Vec<Rat>]) -> Vec<Rat> {
    let t = om.tuple_index(ws);
    let d = f.arg_dim();
    let mut out = vec![r(0); f.out_dim()];
    for idx in multi_indices(d, f.degree()) {
        let mut c = r(1);
        for (s, &i) in idx.iter().enumerate() {
            c *= &vs[s][i];
            if c.is_zero() {
                break;
            }
        }
        if c.is_zero() {
            continue;
        }
        let a = flat(&idx, d);
        for (o, x) in out.iter_mut().enumerate() {
            *x += &c * f.get(t, a, o);
        }
    }
    out
}

/// Builds a cochain from its values on basis tuples.
pub fn tabulate(om: &Monoid, n: usize, d: usize, m: usize, mut value: impl FnMut(&[usize], &[usize]) -> Vec<Rat>) -> Cochain {
    let mut data = Vec::new();
    for t in 0..om.tuple_count(n) {
        let ws = om.tuple(n, t);
        for idx in multi_indices(d, n) {
            let v = value(&ws, &idx);
            assert_eq!(v.len(), m);
            data.extend(v);
        }
    }
    Cochain::from_vec(om.size(), n, d, m, data).unwrap()
}

fn word(om: &Monoid, ws: &[usize]) -> usize {
    ws.iter().fold(om.unit(), |acc, &w| om.mul(acc, w))
}

/// The alternating-sum coboundary evaluated pointwise on basis tuples.
pub fn naive_delta(b: &OmegaBimodule, f: &Cochain) -> Cochain {
    let a = b.base();
    let om = a.omega();
    let (d, m, n) = (a.dim(), b.dim(), f.degree());
    if n == 0 {
        let v: Vec<Rat> = f.data().to_vec();
        let one = om.unit();
        return tabulate(om, 1, d, m, |ws, idx| {
            let x = unit(d, idx[0]);
            sub(&bil(b.left(ws[0], one), &x, &v), &bil(b.right(one, ws[0]), &v, &x))
        });
    }
    tabulate(om, n + 1, d, m, |ws, idx| {
        let args: Vec<Vec<Rat>> = idx.iter().map(|&i| unit(d, i)).collect();
        let first = mat_vec(&power(a.p(ws[0]), n - 1), &args[0]);
        let mut acc = bil(b.left(ws[0], word(om, &ws[1..])), &first, &eval(f, om, &ws[1..], &args[1..]));
        for i in 1..=n {
            let mut w2 = ws[..i - 1].to_vec();
            w2.push(om.mul(ws[i - 1], ws[i]));
            w2.extend_from_slice(&ws[i + 1..]);
            let mut vs = Vec::new();
            for s in 0..i - 1 {
                vs.push(mat_vec(a.p(ws[s]), &args[s]));
            }
            vs.push(bil(a.mu(ws[i - 1], ws[i]), &args[i - 1], &args[i]));
            for s in i + 1..=n {
                vs.push(mat_vec(a.q(ws[s]), &args[s]));
            }
            let term = eval(f, om, &w2, &vs);
            acc = if i % 2 == 1 { sub(&acc, &term) } else { add(&acc, &term) };
        }
        let last = mat_vec(&power(a.q(ws[n]), n - 1), &args[n]);
        let term = bil(b.right(word(om, &ws[..n]), ws[n]), &eval(f, om, &ws[..n], &args[..n]), &last);
        if (n + 1) % 2 == 1 {
            sub(&acc, &term)
        } else {
            add(&acc, &term)
        }
    })
}

/// `f ⋄_i g` (1-based `i`) over the regular bimodule, pointwise.
pub fn naive_circ(a: &OmegaAlgebra, f: &Cochain, g: &Cochain, i: usize) -> Cochain {
    let om = a.omega();
    let (d, n, mm) = (a.dim(), f.degree(), g.degree());
    tabulate(om, n + mm - 1, d, d, |ws, idx| {
        let args: Vec<Vec<Rat>> = idx.iter().map(|&k| unit(d, k)).collect();
        let mut fw = ws[..i - 1].to_vec();
        fw.push(word(om, &ws[i - 1..i - 1 + mm]));
        fw.extend_from_slice(&ws[i - 1 + mm..]);
        let mut vs = Vec::new();
        for s in 0..i - 1 {
            vs.push(mat_vec(&power(a.p(ws[s]), mm - 1), &args[s]));
        }
        vs.push(eval(g, om, &ws[i - 1..i - 1 + mm], &args[i - 1..i - 1 + mm]));
        for s in i - 1 + mm..ws.len() {
            vs.push(mat_vec(&power(a.q(ws[s]), mm - 1), &args[s]));
        }
        eval(f, om, &fw, &vs)
    })
}

/// `Φⁿ f` by enumerating every subset of slots that receive `R`.
pub fn naive_phi(b: &OmegaBimodule, rb: &RotaBaxterFamily, f: &Cochain) -> Cochain {
    let a = b.base();
    let om = a.omega();
    let (d, m, n) = (a.dim(), b.dim(), f.degree());
    if n == 0 {
        return f.clone();
    }
    let t = b.t().expect("Φ needs T");
    tabulate(om, n, d, m, |ws, idx| {
        let args: Vec<Vec<Rat>> = idx.iter().map(|&k| unit(d, k)).collect();
        let all_r: Vec<Vec<Rat>> = (0..n).map(|s| mat_vec(&rb.r[ws[s]], &args[s])).collect();
        let mut acc = eval(f, om, ws, &all_r);
        let tw = &t[word(om, ws)];
        for mask in 0u32..(1 << n) {
            let k = mask.count_ones() as usize;
            if k == n {
                continue;
            }
            let vs: Vec<Vec<Rat>> = (0..n).map(|s| if mask & (1 << s) != 0 { all_r[s].clone() } else { args[s].clone() }).collect();
            let c = rb.weight.pow((n - k - 1) as u32);
            acc = sub(&acc, &scale(&mat_vec(tw, &eval(f, om, ws, &vs)), &c));
        }
        acc
    })
}

/// First failing BiHom-Ω-associativity instance in `(α, β, γ, i, j, k)` order.
pub fn first_associativity_failure(a: &OmegaAlgebra) -> Option<([usize; 3], [usize; 3])> {
    let om = a.omega();
    let d = a.dim();
    for x in 0..om.size() {
        for y in 0..om.size() {
            for z in 0..om.size() {
                for i in 0..d {
                    for j in 0..d {
                        for k in 0..d {
                            let (ei, ej, ek) = (unit(d, i), unit(d, j), unit(d, k));
                            let lhs = bil(a.mu(x, om.mul(y, z)), &mat_vec(a.p(x), &ei), &bil(a.mu(y, z), &ej, &ek));
                            let rhs = bil(a.mu(om.mul(x, y), z), &bil(a.mu(x, y), &ei, &ej), &mat_vec(a.q(z), &ek));
                            if lhs != rhs {
                                return Some(([x, y, z], [i, j, k]));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Whether the Rota-Baxter family identity and the commuting conditions hold.
pub fn naive_rota_baxter(a: &OmegaAlgebra, rb: &RotaBaxterFamily) -> bool {
    let om = a.omega();
    let d = a.dim();
    for w in 0..om.size() {
        if a.p(w).mul(&rb.r[w]) != rb.r[w].mul(a.p(w)) || a.q(w).mul(&rb.r[w]) != rb.r[w].mul(a.q(w)) {
            return false;
        }
    }
    for x in 0..om.size() {
        for y in 0..om.size() {
            let rxy = &rb.r[om.mul(x, y)];
            for i in 0..d {
                for j in 0..d {
                    let (ei, ej) = (unit(d, i), unit(d, j));
                    let (ri, rj) = (mat_vec(&rb.r[x], &ei), mat_vec(&rb.r[y], &ej));
                    let mu = a.mu(x, y);
                    let lhs = bil(mu, &ri, &rj);
                    let inner = add(&add(&bil(mu, &ri, &ej), &bil(mu, &ei, &rj)), &scale(&bil(mu, &ei, &ej), &rb.weight));
                    if lhs != mat_vec(rxy, &inner) {
                        return false;
                    }
                }
            }
        }
    }
    true
}
