//! The invariant battery behind `selftest` and the acceptance suite.
//!
//! Criteria are numbered 1 to 11; each one draws from its own stream derived
//! from the configured seed, so running a single criterion reproduces exactly
//! what the full battery did for it.

use std::path::PathBuf;

use bihom_core::cochain_complex::{apply_delta, equivariant_basis, Cochain, Complex};
use bihom_core::deformation::{
    check_jet, check_nijenhuis, check_trivial_deformation, deformed_mu, deformed_product, equivalence_shift,
    equivalent_at_order_one, psi_n, DeformationJet, NijenhuisFamily,
};
use bihom_core::extension::{build_extension, check_extension_iso, compare_extensions, extract_cocycle, validate_presentation, CocyclePair};
use bihom_core::gerstenhaber::{bracket, delta_via_bracket, mc_residual};
use bihom_core::omega_algebra::{is_homomorphism, star_product, validate_algebra, OmegaAlgebra, RotaBaxterFamily};
use bihom_core::omega_bimodule::{induced_module_star, validate_bimodule, OmegaBimodule};
use bihom_core::rbf_cohomology::{chain_map_check, d_combined, partial_expanded, CombinedCochain, RbfContext};
use bihom_core::{Error, Rat};
use rand::Rng;
use serde_json::Value;

use crate::fixtures::{self, e1_algebra, searched_family};
use crate::format::{parse, serialize, WorkbenchFile};
use crate::random::{self, random_algebra, random_combination, random_instance, SeededRng};
use crate::report::cohomology_value;

pub const DEFAULT_SEED: u64 = 0x5eed_2026;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatteryConfig {
    pub seed: u64,
    /// Percentage of the full random counts.
    pub scale: u32,
    /// JSON file of frozen oracle cohomology dimensions.
    pub oracle: Option<PathBuf>,
    /// Directory holding the shipped `*.json` fixtures.
    pub fixtures_dir: Option<PathBuf>,
}

impl Default for BatteryConfig {
    fn default() -> BatteryConfig {
        BatteryConfig { seed: DEFAULT_SEED, scale: 100, oracle: None, fixtures_dir: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub const NAMES: [&str; 11] = [
    "delta-squared",
    "graded-lie",
    "maurer-cartan",
    "bracket-coboundary",
    "chain-map",
    "star-structures",
    "nijenhuis",
    "hochschild-sanity",
    "extension-cocycle",
    "order-one-deformation",
    "determinism-round-trip",
];

type Step = Result<String, String>;

fn core(e: Error) -> String {
    e.to_string()
}

fn scaled(full: usize, cfg: &BatteryConfig) -> usize {
    (full * cfg.scale as usize / 100).max(1)
}

fn stream(cfg: &BatteryConfig, id: u8) -> SeededRng {
    random::rng(cfg.seed ^ (id as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

pub fn run(cfg: &BatteryConfig) -> Vec<Outcome> {
    (1..=11).map(|id| run_one(cfg, id)).collect()
}

pub fn run_one(cfg: &BatteryConfig, id: u8) -> Outcome {
    let step = match id {
        1 => delta_squared(cfg),
        2 => graded_lie(cfg),
        3 => maurer_cartan(cfg),
        4 => bracket_coboundary(),
        5 => chain_map(),
        6 => star_structures(),
        7 => nijenhuis(cfg),
        8 => hochschild_sanity(cfg),
        9 => extension_cocycle(cfg),
        10 => order_one(cfg),
        11 => determinism(cfg),
        _ => Err(format!("no criterion {}", id)),
    };
    let name = NAMES.get(id as usize - 1).copied().unwrap_or("unknown");
    match step {
        Ok(detail) => Outcome { id, name, passed: true, detail },
        Err(detail) => Outcome { id, name, passed: false, detail },
    }
}

fn all_fixtures() -> Result<Vec<(&'static str, WorkbenchFile)>, String> {
    fixtures::all().map_err(core)
}

/// `δ^{n+1}δⁿ = 0` for `n = 0..=3`: as a matrix product up to `n = 2` and by
/// applying `δ` twice to every basis cochain of `C³`.
pub fn delta_squared_on(b: &OmegaBimodule) -> Result<(), String> {
    let c = Complex::new(b, 4);
    for n in 0..=2 {
        let prod = c.delta_matrix(n + 1).map_err(core)?.mul(&c.delta_matrix(n).map_err(core)?);
        if !prod.is_zero() {
            return Err(format!("δ{}·δ{} ≠ 0", n + 1, n));
        }
    }
    let b3 = c.basis(3);
    for j in 0..b3.dim() {
        let once = apply_delta(b, &b3.element(j)).map_err(core)?;
        if !apply_delta(b, &once).map_err(core)?.is_zero() {
            return Err(format!("δ⁴δ³ ≠ 0 on basis cochain {}", j));
        }
    }
    Ok(())
}

fn delta_squared(cfg: &BatteryConfig) -> Step {
    let mut mods = Vec::new();
    for name in ["e0", "e1", "e1_module"] {
        let f = fixtures::build(name).map_err(core)?;
        let b = match f.bimodule {
            Some(b) => b,
            None => OmegaBimodule::regular(&f.algebra, None).map_err(core)?,
        };
        mods.push((name.to_string(), b));
    }
    let mut rng = stream(cfg, 1);
    for _ in 0..scaled(50, cfg) {
        let inst = random_instance(&mut rng, 3, 2, 2).map_err(core)?;
        mods.push((inst.label, inst.module));
    }
    for (label, b) in &mods {
        delta_squared_on(b).map_err(|e| format!("{}: {}", label, e))?;
    }
    Ok(format!("{} bimodules, degrees 0..3", mods.len()))
}

fn sign(e: usize) -> Rat {
    if e.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    }
}

fn graded_lie(cfg: &BatteryConfig) -> Step {
    let mut rng = stream(cfg, 2);
    let n = scaled(100, cfg);
    for k in 0..n {
        let (a, label) = random_algebra(&mut rng, 2, 2).map_err(core)?;
        let b = OmegaBimodule::regular(&a, None).map_err(core)?;
        let bases: Vec<_> = (1..=3).map(|d| equivariant_basis(&b, d)).collect();
        let pick = |rng: &mut SeededRng| {
            let d = rng.gen_range(1..=3);
            random_combination(rng, &bases[d - 1])
        };
        let (f, g, h) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let gr = |x: &Cochain| x.degree() - 1;
        let br = |x: &Cochain, y: &Cochain| bracket(&a, x, y).map_err(core);
        let skew = br(&f, &g)?.add(&br(&g, &f)?.scale(&sign(gr(&f) * gr(&g))));
        if !skew.is_zero() {
            return Err(format!("triple {} over {}: skew-symmetry fails", k, label));
        }
        let mut jac = br(&f, &br(&g, &h)?)?.scale(&sign(gr(&f) * gr(&h)));
        jac.add_scaled(&sign(gr(&g) * gr(&f)), &br(&g, &br(&h, &f)?)?);
        jac.add_scaled(&sign(gr(&h) * gr(&g)), &br(&h, &br(&f, &g)?)?);
        if !jac.is_zero() {
            return Err(format!("triple {} over {} (degrees {}, {}, {}): graded Jacobi fails", k, label, f.degree(), g.degree(), h.degree()));
        }
    }
    Ok(format!("{} random triples", n))
}

fn maurer_cartan(cfg: &BatteryConfig) -> Step {
    let mut rng = stream(cfg, 3);
    let n = scaled(200, cfg);
    let (mut valid, mut invalid) = (0, 0);
    for k in 0..n {
        let (a, label) = random_algebra(&mut rng, 3, 2).map_err(core)?;
        let om = a.omega();
        let mu = Cochain::from_products(om.size(), a.mu_all());
        let basis = equivariant_basis(&OmegaBimodule::regular(&a, None).map_err(core)?, 2);
        let cand = match k % 4 {
            0 => mu.scale(&Rat::from_int(rng.gen_range(-2..=2))),
            1 => random_combination(&mut rng, &basis),
            2 if basis.dim() > 0 => mu.add(&basis.element(rng.gen_range(0..basis.dim()))),
            _ if basis.dim() > 0 => basis.element(rng.gen_range(0..basis.dim())),
            _ => mu.clone(),
        };
        let residual = mc_residual(om, a.p_all(), a.q_all(), &cand).map_err(|e| format!("candidate {}: {}", k, e))?;
        let alg = a.with_mu(cand.to_products()).map_err(core)?;
        let ok = validate_algebra(&alg).is_ok();
        if residual.is_zero() != ok {
            return Err(format!("candidate {} over {}: [μ,μ] = 0 is {} but validation gives {}", k, label, residual.is_zero(), ok));
        }
        if ok {
            valid += 1;
        } else {
            invalid += 1;
        }
    }
    if valid == 0 || invalid == 0 {
        return Err(format!("one-sided sample: {} valid, {} invalid", valid, invalid));
    }
    Ok(format!("{} candidates ({} valid, {} invalid)", n, valid, invalid))
}

fn fixture_algebras() -> Result<Vec<(String, OmegaAlgebra)>, String> {
    let mut out: Vec<(String, OmegaAlgebra)> = Vec::new();
    for (name, f) in all_fixtures()? {
        let mut cands = vec![(name.to_string(), f.algebra.clone())];
        if let Some(e) = &f.extension {
            cands.push((format!("{}/total", name), e.total.clone()));
        }
        for (n, a) in cands {
            if validate_algebra(&a).is_ok() && !out.iter().any(|(_, b)| *b == a) {
                out.push((n, a));
            }
        }
    }
    Ok(out)
}

fn bracket_coboundary() -> Step {
    let algs = fixture_algebras()?;
    let mut checked = 0;
    for (name, a) in &algs {
        let b = OmegaBimodule::regular(a, None).map_err(core)?;
        for n in 1..=3 {
            let bs = equivariant_basis(&b, n);
            for j in 0..bs.dim() {
                let f = bs.element(j);
                if delta_via_bracket(a, &f).map_err(core)? != apply_delta(&b, &f).map_err(core)? {
                    return Err(format!("{}: degree {} basis cochain {}", name, n, j));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{} cochains over {} fixture algebras", checked, algs.len()))
}

/// Distinct `(module, R)` pairs from fixtures carrying a Rota-Baxter family.
pub fn rbf_fixtures() -> Result<Vec<(String, OmegaBimodule, RotaBaxterFamily)>, String> {
    let mut out: Vec<(String, OmegaBimodule, RotaBaxterFamily)> = Vec::new();
    for (name, f) in all_fixtures()? {
        let Some(rb) = &f.rota_baxter else { continue };
        let b = match &f.bimodule {
            Some(b) if b.t().is_some() => b.clone(),
            _ => OmegaBimodule::regular_rbf(&f.algebra, rb).map_err(core)?,
        };
        if !out.iter().any(|(_, c, r)| *c == b && r == rb) {
            out.push((name.to_string(), b, rb.clone()));
        }
    }
    Ok(out)
}

fn chain_map() -> Step {
    let fx = rbf_fixtures()?;
    let mut routes = 0;
    for (name, b, rb) in &fx {
        let ctx = RbfContext::new(b, rb, 4).map_err(core)?;
        chain_map_check(&ctx, 3).map_err(core)?.map_err(|w| format!("{}: {}", name, w))?;
        for n in 0..=3 {
            let bs = ctx.rbf_complex().basis(n);
            for j in 0..bs.dim() {
                let f = bs.element(j);
                let via_star = apply_delta(ctx.star_module(), &f).map_err(core)?;
                if via_star != partial_expanded(b, rb, &f).map_err(core)? {
                    return Err(format!("{}: the two routes for ∂ differ on degree-{} basis cochain {}", name, n, j));
                }
                routes += 1;
            }
        }
    }
    Ok(format!("{} RBF fixtures, {} basis cochains on both routes", fx.len(), routes))
}

fn star_structures() -> Step {
    let fx = rbf_fixtures()?;
    for (name, b, rb) in &fx {
        let a = b.base();
        let star = star_product(a, rb).map_err(core)?;
        validate_algebra(&star).map_err(|w| format!("{}: A⋆ fails {}", name, w))?;
        is_homomorphism(&rb.r, &star, a).map_err(core)?.map_err(|w| format!("{}: R is not a homomorphism: {}", name, w))?;
        let mstar = induced_module_star(b, rb).map_err(core)?;
        validate_bimodule(&mstar).map_err(|w| format!("{}: M⋆ fails {}", name, w))?;
    }
    Ok(format!("{} RBF fixtures", fx.len()))
}

fn nijenhuis_battery(a: &OmegaAlgebra, nf: &NijenhuisFamily) -> Result<(), String> {
    check_nijenhuis(a, nf).map_err(core)?.map_err(|w| format!("not Nijenhuis: {}", w))?;
    let (an, hom) = deformed_product(a, nf).map_err(core)?;
    validate_algebra(&an).map_err(|w| format!("μᴺ fails {}", w))?;
    hom.map_err(|w| format!("N is not a homomorphism: {}", w))?;
    let p = psi_n(a, &nf.n).map_err(core)?;
    if !p.psi_zero {
        return Err("ψᴺ ≠ 0".into());
    }
    let triv = check_trivial_deformation(a, nf, &deformed_mu(a, &nf.n).map_err(core)?).map_err(core)?;
    for (k, c) in [("tri-3", &triv.commutes), ("tri-4", &triv.first_order), ("tri-5", &triv.second_order)] {
        c.clone().map_err(|w| format!("{} fails: {}", k, w))?;
    }
    Ok(())
}

fn nijenhuis(cfg: &BatteryConfig) -> Step {
    let mut count = 0;
    for (name, a) in fixture_algebras()? {
        for nf in [NijenhuisFamily::zero(&a), NijenhuisFamily::identity(&a)] {
            nijenhuis_battery(&a, &nf).map_err(|e| format!("{}: {}", name, e))?;
            count += 1;
        }
    }
    let fx = fixtures::build("e1_nijenhuis").map_err(core)?;
    let n = fx.nijenhuis.ok_or("e1_nijenhuis has no nijenhuis block")?;
    nijenhuis_battery(&fx.algebra, &NijenhuisFamily::new(n)).map_err(|e| format!("e1_nijenhuis: {}", e))?;
    count += 1;
    let mut rng = stream(cfg, 7);
    let want = scaled(50, cfg);
    let (mut done, mut deformed_ok, mut tries) = (0, 0, 0);
    while done < want {
        tries += 1;
        if tries > 50 * want {
            return Err(format!("only {} non-Nijenhuis candidates after {} draws", done, tries));
        }
        let (a, label) = random_algebra(&mut rng, 3, 2).map_err(core)?;
        let basis = equivariant_basis(&OmegaBimodule::regular(&a, None).map_err(core)?, 1);
        let cand = random_combination(&mut rng, &basis).to_maps();
        if check_nijenhuis(&a, &NijenhuisFamily::new(cand.clone())).map_err(core)?.is_ok() {
            continue;
        }
        let p = psi_n(&a, &cand).map_err(core)?;
        if p.deformed_validates != p.psi_cocycle || p.psi_zero {
            return Err(format!(
                "{}: μᴺ validates = {} but δ²ψᴺ = 0 is {} (ψᴺ = 0: {})",
                label, p.deformed_validates, p.psi_cocycle, p.psi_zero
            ));
        }
        deformed_ok += usize::from(p.deformed_validates);
        done += 1;
    }
    Ok(format!("{} Nijenhuis families; {} random non-Nijenhuis ({} with associative μᴺ)", count, done, deformed_ok))
}

/// `(dim Cⁿ, dim Hⁿ)` for `n = 0..=3` on the fixture's bimodule (regular if absent).
fn regular_dims(name: &str) -> Result<(Vec<usize>, Vec<usize>), String> {
    let f = fixtures::build(name).map_err(core)?;
    let b = match f.bimodule {
        Some(b) => b,
        None => OmegaBimodule::regular(&f.algebra, None).map_err(core)?,
    };
    let rep = Complex::new(&b, 4).cohomology(3).map_err(core)?;
    Ok((rep.degrees.iter().map(|d| d.cochains).collect(), rep.h()))
}

fn oracle_dims(case: &Value, key: &str) -> Option<Vec<usize>> {
    serde_json::from_value(case.get(key)?.clone()).ok()
}

fn hochschild_sanity(cfg: &BatteryConfig) -> Step {
    let (_, e0) = regular_dims("e0")?;
    if e0 != [1, 0, 0, 0] {
        return Err(format!("E0 gives {:?}", e0));
    }
    let (_, z) = regular_dims("zero1")?;
    if z != [1, 1, 1, 1] {
        return Err(format!("the one-dimensional zero algebra gives {:?}", z));
    }
    let Some(path) = &cfg.oracle else { return Ok("E0 (1,0,0,0), zero algebra (1,1,1,1); no oracle file given".into()) };
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| format!("{}: {}", path.display(), e))?;
    if v.get("max_degree").and_then(Value::as_u64) != Some(3) {
        return Err("oracle file must cover degrees 0..3".into());
    }
    let cases = v.get("cases").and_then(Value::as_object).ok_or("oracle file has no \"cases\" object")?;
    for need in ["e0", "zero1"] {
        if !cases.contains_key(need) {
            return Err(format!("oracle file lacks case {}", need));
        }
    }
    for (name, case) in cases {
        let (Some(want_c), Some(want_h)) = (oracle_dims(case, "cochains"), oracle_dims(case, "h")) else {
            return Err(format!("oracle case {} needs \"cochains\" and \"h\" lists", name));
        };
        let (cochains, h) = regular_dims(name)?;
        if cochains != want_c || h != want_h {
            return Err(format!("{}: computed C {:?} H {:?}, oracle C {:?} H {:?}", name, cochains, h, want_c, want_h));
        }
    }
    Ok(format!("E0 (1,0,0,0), zero algebra (1,1,1,1); {} oracle cases agree", cases.len()))
}

fn e1_context() -> Result<RbfContext, String> {
    let a = e1_algebra();
    let rb = searched_family(&a).map_err(core)?;
    RbfContext::regular(&a, &rb, 3).map_err(core)
}

fn random_combined(rng: &mut SeededRng, ctx: &RbfContext, n: usize) -> CombinedCochain {
    let coeffs: Vec<Rat> = (0..ctx.combined_dim(n)).map(|_| Rat::from_int(rng.gen_range(-2..=2))).collect();
    ctx.combine(n, &coeffs)
}

fn extension_cocycle(cfg: &BatteryConfig) -> Step {
    let ctx = e1_context()?;
    let mut rng = stream(cfg, 9);
    let ker = ctx.cocycle_basis(2).map_err(core)?;
    for (j, x) in ker.iter().enumerate() {
        let pair = CocyclePair::from_combined(x).map_err(core)?;
        let built = build_extension(&ctx, &pair).map_err(core)?;
        if !built.total_validates {
            return Err(format!("kernel element {} gives a failing extension", j));
        }
        validate_presentation(&built.extension).map_err(|w| format!("kernel element {}: {}", j, w))?;
        let back = extract_cocycle(&built.extension).map_err(core)?;
        if back.pair != pair || back.module != *ctx.module() {
            return Err(format!("kernel element {}: extraction does not return the pair", j));
        }
    }
    let perturbed = scaled(20, cfg);
    let mut failed = 0;
    let mut k = 0;
    while failed < perturbed {
        k += 1;
        if k > 100 * perturbed {
            return Err("could not draw pairs outside ker d²".into());
        }
        let y = random_combined(&mut rng, &ctx, 2);
        if d_combined(&ctx, &y).map_err(core)?.is_zero() {
            continue;
        }
        let base = &ker[k % ker.len().max(1)];
        let pair = CocyclePair::from_combined(&base.add(&y)).map_err(core)?;
        let built = build_extension(&ctx, &pair).map_err(core)?;
        if built.total_validates || validate_presentation(&built.extension).is_ok() {
            return Err(format!("perturbed pair {} builds a valid extension", failed));
        }
        failed += 1;
    }
    let n_iso = scaled(10, cfg);
    for k in 0..n_iso {
        let coeffs: Vec<Rat> = (0..ker.len()).map(|_| Rat::from_int(rng.gen_range(-2..=2))).collect();
        let mut x = ctx.combine(2, &vec![Rat::zero(); ctx.combined_dim(2)]);
        for (c, v) in coeffs.iter().zip(&ker) {
            x = x.add(&v.scale(c));
        }
        let eta = random_combined(&mut rng, &ctx, 1);
        let x2 = x.add(&d_combined(&ctx, &eta).map_err(core)?);
        let e1 = build_extension(&ctx, &CocyclePair::from_combined(&x).map_err(core)?).map_err(core)?.extension;
        let e2 = build_extension(&ctx, &CocyclePair::from_combined(&x2).map_err(core)?).map_err(core)?.extension;
        let shifted = e1.with_section_shift(&random_combination(&mut rng, ctx.alg_complex().basis(1))).map_err(core)?;
        for (label, other) in [("coboundary", &e2), ("section", &shifted)] {
            let c = compare_extensions(&e1, other).map_err(core)?;
            let iso = c.iso.ok_or_else(|| format!("pair {} ({}): cohomologous pairs give no isomorphism", k, label))?;
            check_extension_iso(&e1, other, &iso).map_err(core)?.map_err(|w| format!("pair {} ({}): {}", k, label, w))?;
        }
    }
    Ok(format!("{} kernel pairs round-trip, {} perturbed pairs fail, {} isomorphisms verified", ker.len(), failed, 2 * n_iso))
}

fn regular_rbf_contexts() -> Result<Vec<(String, RbfContext)>, String> {
    let mut out = Vec::new();
    for (name, b, rb) in rbf_fixtures()? {
        if b == OmegaBimodule::regular_rbf(b.base(), &rb).map_err(core)? {
            out.push((name, RbfContext::new(&b, &rb, 3).map_err(core)?));
        }
    }
    Ok(out)
}

fn order_one(cfg: &BatteryConfig) -> Step {
    let mut rng = stream(cfg, 10);
    let ctxs = regular_rbf_contexts()?;
    let (mut kernel, mut images, mut shifts) = (0, 0, 0);
    for (name, ctx) in &ctxs {
        let ker = ctx.cocycle_basis(2).map_err(core)?;
        let mut samples = ker.clone();
        samples.push(random_combined(&mut rng, ctx, 2));
        for x in &ker {
            let jet = DeformationJet::from_pair(x).map_err(core)?;
            let rep = check_jet(ctx, &jet).map_err(core)?;
            if !rep.ok_through(1) || !rep.infinitesimal_cocycle {
                return Err(format!("{}: a kernel element fails the order-1 identities", name));
            }
            kernel += 1;
        }
        let m = ctx.combined_matrix(1).map_err(core)?;
        for j in 0..ctx.combined_dim(1) {
            let y = ctx.combine(1, &(0..ctx.combined_dim(1)).map(|i| if i == j { Rat::one() } else { Rat::zero() }).collect::<Vec<_>>());
            let img = d_combined(ctx, &y).map_err(core)?;
            if ctx.coordinates(&img).map_err(core)? != m.column(j) {
                return Err(format!("{}: d¹ disagrees with its matrix in column {}", name, j));
            }
            let rep = check_jet(ctx, &DeformationJet::from_pair(&img).map_err(core)?).map_err(core)?;
            if !rep.ok_through(1) {
                return Err(format!("{}: the image d¹(basis {}) fails the order-1 identities", name, j));
            }
            images += 1;
        }
        for _ in 0..scaled(10, cfg) {
            let psi1 = random_combination(&mut rng, ctx.alg_complex().basis(1));
            let shift = equivalence_shift(ctx, &psi1).map_err(core)?;
            if !d_combined(ctx, &shift).map_err(core)?.is_zero() {
                return Err(format!("{}: an equivalence shift leaves ker d²", name));
            }
            if let Some(orig) = ker.first() {
                if !equivalent_at_order_one(ctx, orig, &orig.add(&shift), &psi1).map_err(core)? {
                    return Err(format!("{}: shifted pair is not equivalent at order one", name));
                }
            }
            shifts += 1;
        }
    }
    Ok(format!("{} contexts: {} kernel elements, {} d¹-images, {} shifts", ctxs.len(), kernel, images, shifts))
}

fn cohomology_digest(cfg: &BatteryConfig) -> Result<String, String> {
    let mut rng = stream(cfg, 11);
    let mut parts = Vec::new();
    for _ in 0..scaled(5, cfg) {
        let inst = random_instance(&mut rng, 2, 2, 2).map_err(core)?;
        let table = Complex::new(&inst.module, 3).cohomology(2).map_err(core)?;
        parts.push(serde_json::json!({ "label": inst.label, "table": cohomology_value(&table) }));
    }
    Ok(serde_json::to_string(&parts).expect("values serialize"))
}

fn determinism(cfg: &BatteryConfig) -> Step {
    let mut files = 0;
    for (name, f) in all_fixtures()? {
        let s = serialize(&f);
        let back = parse(&s).map_err(|e| format!("{}: {}", name, e))?;
        if back != f || serialize(&back) != s {
            return Err(format!("{}: serialize∘parse is not stable", name));
        }
        if let Some(dir) = &cfg.fixtures_dir {
            let path = dir.join(format!("{}.json", name));
            let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {}", path.display(), e))?;
            let parsed = parse(&text).map_err(|e| format!("{}: {}", path.display(), e))?;
            if serialize(&parsed) != text {
                return Err(format!("{}: file is not byte-stable under serialize∘parse", path.display()));
            }
            if text != s {
                return Err(format!("{}: file differs from the rebuilt fixture", path.display()));
            }
            files += 1;
        }
    }
    if cohomology_digest(cfg)? != cohomology_digest(cfg)? {
        return Err("two runs with the same seed differ".into());
    }
    Ok(format!("{} fixtures round-trip ({} files compared), seeded runs agree", fixtures::NAMES.len(), files))
}
