//! Insertion compositions and the graded bracket on `C•_Ω(A) = C•_Ω(A, A)`.
//!
//! A degree-`n` cochain has graded degree `|f| = n − 1`.

use alloc::format;
use alloc::vec::Vec;

use crate::cochain_complex::{family_power, Cochain};
use crate::error::{Error, Result};
use crate::exact_linalg::{Mat, Rat};
use crate::monoid::Monoid;
use crate::omega_algebra::OmegaAlgebra;

fn sign(e: usize) -> Rat {
    if e.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    }
}

fn check_regular(a: &OmegaAlgebra, f: &Cochain) -> Result<()> {
    if f.omega_size() != a.omega().size() || f.arg_dim() != a.dim() || f.out_dim() != a.dim() {
        return Err(Error::malformed("cochain does not live on the algebra's regular bimodule"));
    }
    if f.degree() == 0 {
        return Err(Error::precondition("insertions need cochains of degree at least 1"));
    }
    Ok(())
}

/// `f ⋄_i g` with 1-based `i`: `p^{m−1}` on the arguments before slot `i`,
/// `g` in slot `i` with merged Ω-index, `q^{m−1}` after.
pub fn circ_i(a: &OmegaAlgebra, f: &Cochain, g: &Cochain, i: usize) -> Result<Cochain> {
    check_regular(a, f)?;
    check_regular(a, g)?;
    let n = f.degree();
    if i == 0 || i > n {
        return Err(Error::precondition(format!("insertion position {} outside 1..={}", i, n)));
    }
    let k = g.degree() - 1;
    let pk = family_power(a.p_all(), k);
    let qk = family_power(a.q_all(), k);
    let mut h = f.clone();
    if k > 0 {
        for s in 0..i - 1 {
            h = h.map_slot(s, &pk);
        }
        for s in i..n {
            h = h.map_slot(s, &qk);
        }
    }
    Ok(h.insert(a.omega(), i - 1, g))
}

/// `f ⋄ (g_1, …, g_n)`: block `i` is `p^{Σ_{l>i}|g_l|} ∘ q^{Σ_{l<i}|g_l|} ∘ g_i`
/// with both powers taken at the merged Ω-index of the block.
pub fn circ_full(a: &OmegaAlgebra, f: &Cochain, gs: &[Cochain]) -> Result<Cochain> {
    check_regular(a, f)?;
    if gs.len() != f.degree() {
        return Err(Error::precondition(format!("{} insertions for a degree-{} cochain", gs.len(), f.degree())));
    }
    for g in gs {
        check_regular(a, g)?;
    }
    let grades: Vec<usize> = gs.iter().map(|g| g.degree() - 1).collect();
    let om: &Monoid = a.omega();
    let mut h = f.clone();
    // insert right to left so earlier slot positions stay put
    for i in (0..gs.len()).rev() {
        let after: usize = grades[i + 1..].iter().sum();
        let before: usize = grades[..i].iter().sum();
        let tw: Vec<Mat> = (0..om.size()).map(|w| a.p(w).pow(after).mul(&a.q(w).pow(before))).collect();
        let gi = gs[i].map_output(om, &tw);
        h = h.insert(om, i, &gi);
    }
    Ok(h)
}

/// `[f, g] = Σ_i (−1)^{|g|(i−1)} f ⋄_i g − (−1)^{|f||g|} Σ_i (−1)^{|f|(i−1)} g ⋄_i f`.
pub fn bracket(a: &OmegaAlgebra, f: &Cochain, g: &Cochain) -> Result<Cochain> {
    check_regular(a, f)?;
    check_regular(a, g)?;
    let (fd, gd) = (f.degree() - 1, g.degree() - 1);
    let mut out = Cochain::zeros(a.omega().size(), fd + gd + 1, a.dim(), a.dim());
    for i in 1..=f.degree() {
        out.add_scaled(&sign(gd * (i - 1)), &circ_i(a, f, g, i)?);
    }
    let outer = -sign(fd * gd);
    for i in 1..=g.degree() {
        out.add_scaled(&(&outer * &sign(fd * (i - 1))), &circ_i(a, g, f, i)?);
    }
    Ok(out)
}

/// `[μ, μ]` for the product `candidate` with structure maps `p`, `q`.
pub fn mc_residual(omega: &Monoid, p: &[Mat], q: &[Mat], candidate: &Cochain) -> Result<Cochain> {
    if candidate.degree() != 2 {
        return Err(Error::precondition("Maurer-Cartan candidates have degree 2"));
    }
    let a = OmegaAlgebra::new(omega.clone(), candidate.arg_dim(), candidate.to_products(), p.to_vec(), q.to_vec())?;
    let mu = Cochain::from_products(omega.size(), a.mu_all());
    bracket(&a, &mu, &mu)
}

/// `(−1)^{|f|}[μ, f]`.
pub fn delta_via_bracket(a: &OmegaAlgebra, f: &Cochain) -> Result<Cochain> {
    let mu = Cochain::from_products(a.omega().size(), a.mu_all());
    Ok(bracket(a, &mu, f)?.scale(&sign(f.degree() - 1)))
}
