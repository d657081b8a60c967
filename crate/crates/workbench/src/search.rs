//! Bounded enumeration of integer map families.

use bihom_core::deformation::{check_nijenhuis, NijenhuisFamily};
use bihom_core::omega_algebra::{check_rota_baxter, validate_algebra, OmegaAlgebra, RotaBaxterFamily};
use bihom_core::{Error, Mat, Rat, Result};

pub const DEFAULT_CAP: u64 = 2_000_000;

/// Number of candidate families with entries in `[−b, b]`, or `None` on overflow.
pub fn enumeration_size(a: &OmegaAlgebra, bound: u32) -> Option<u64> {
    let slots = (a.dim() * a.dim() * a.omega().size()) as u32;
    (2 * bound as u64 + 1).checked_pow(slots)
}

/// Calls `visit` on every family with integer entries in `[−b, b]`. Entries are
/// scanned row-major per matrix, matrices in Ω order, the first entry varying slowest.
pub fn for_each_family(a: &OmegaAlgebra, bound: u32, cap: u64, mut visit: impl FnMut(&[Mat]) -> Result<()>) -> Result<()> {
    match enumeration_size(a, bound) {
        Some(n) if n <= cap => {}
        _ => {
            return Err(Error::precondition(format!(
                "enumeration size (2·{}+1)^{} exceeds the cap of {}; use a smaller bound",
                bound,
                a.dim() * a.dim() * a.omega().size(),
                cap
            )))
        }
    }
    let (d, m) = (a.dim(), a.omega().size());
    let b = bound as i64;
    let mut digits = vec![-b; d * d * m];
    loop {
        let maps: Vec<Mat> = digits.chunks(d * d).map(|c| Mat::from_vec(d, d, c.iter().map(|&x| Rat::from_int(x)).collect())).collect();
        visit(&maps)?;
        let mut k = digits.len();
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            if digits[k] < b {
                digits[k] += 1;
                break;
            }
            digits[k] = -b;
        }
    }
}

/// All Rota-Baxter families of weight `λ` with entries in `[−b, b]`, in scan order.
pub fn search_rbf(a: &OmegaAlgebra, bound: u32, weight: &Rat, cap: u64) -> Result<Vec<RotaBaxterFamily>> {
    validate_algebra(a).map_err(|w| Error::precondition(format!("algebra does not validate: {}", w)))?;
    let mut out = Vec::new();
    for_each_family(a, bound, cap, |maps| {
        let rb = RotaBaxterFamily::new(weight.clone(), maps.to_vec());
        if check_rota_baxter(a, &rb)?.is_ok() {
            out.push(rb);
        }
        Ok(())
    })?;
    Ok(out)
}

/// All Nijenhuis families with entries in `[−b, b]`, in scan order.
pub fn search_nijenhuis(a: &OmegaAlgebra, bound: u32, cap: u64) -> Result<Vec<NijenhuisFamily>> {
    validate_algebra(a).map_err(|w| Error::precondition(format!("algebra does not validate: {}", w)))?;
    let mut out = Vec::new();
    for_each_family(a, bound, cap, |maps| {
        let nf = NijenhuisFamily::new(maps.to_vec());
        if check_nijenhuis(a, &nf)?.is_ok() {
            out.push(nf);
        }
        Ok(())
    })?;
    Ok(out)
}

/// The first family of the scan that is not a scalar multiple of the identity
/// in every component.
pub fn first_non_scalar(families: &[RotaBaxterFamily]) -> Option<&RotaBaxterFamily> {
    families.iter().find(|rb| rb.r.iter().any(|m| !is_scalar(m)))
}

pub fn is_scalar(m: &Mat) -> bool {
    let d = m.rows();
    d == 0 || *m == Mat::scalar(d, &m.entries()[0])
}
