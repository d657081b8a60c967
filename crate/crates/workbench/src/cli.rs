//! The `bihom` command line.

use std::path::{Path, PathBuf};
use std::time::Instant;

use bihom_core::cochain_complex::{Cochain, Complex};
use bihom_core::deformation::{
    check_jet, check_linear_deformation, check_nijenhuis, check_trivial_deformation, deformed_mu, deformed_product, psi_n,
    DeformationJet, NijenhuisFamily,
};
use bihom_core::extension::{build_extension, compare_extensions, extract_cocycle, validate_presentation};
use bihom_core::gerstenhaber::mc_residual;
use bihom_core::monoid::{validate_monoid, MonoidViolation};
use bihom_core::omega_algebra::{
    check_rota_baxter, is_homomorphism, star_product, validate_algebra, yau_twist, RotaBaxterFamily,
};
use bihom_core::omega_bimodule::{induced_module_star, validate_bimodule, validate_rbf_bimodule, OmegaBimodule};
use bihom_core::rbf_cohomology::{rbfa_cohomology_dims, RbfContext};
use bihom_core::{Check, Error, Rat, Witness};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::battery::{self, BatteryConfig};
use crate::format::{self, parse, WorkbenchFile};
use crate::report::{check_value, cohomology_value, Report};
use crate::search::{search_rbf, DEFAULT_CAP};

#[derive(Debug, Parser)]
#[command(name = "bihom", version, about = "Exact workbench for Rota-Baxter family BiHom-Ω-associative algebras")]
pub struct Cli {
    /// Omit the timing block so reports are byte-comparable.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComplexKind {
    Alg,
    Rbf,
    Rbfa,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the monoid, algebra, Rota-Baxter family and bimodule axioms.
    Validate { file: PathBuf },
    /// Cohomology dimensions of one of the three complexes.
    Cohomology {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "alg")]
        complex: ComplexKind,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Evaluate [μ, μ] and compare with the associativity check.
    McCheck { file: PathBuf },
    /// The star product A⋆, R as a homomorphism A⋆ → A, and M⋆ over A⋆.
    Star { file: PathBuf },
    /// Twist by the file's `twist` block.
    YauTwist { file: PathBuf },
    /// Check the file's `nijenhuis` block and the deformations it generates.
    Nijenhuis { file: PathBuf },
    /// Check the `jet` block through the given order, or the `cochain` block as a linear deformation.
    DeformCheck {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        order: usize,
    },
    /// Build the extension of the file's `cocycle_pair`.
    Extend { file: PathBuf },
    /// Read the cocycle pair off the file's `extension` block.
    ExtractCocycle { file: PathBuf },
    /// Decide whether two extensions are isomorphic and construct the isomorphism.
    CompareExt { first: PathBuf, second: PathBuf },
    /// Enumerate Rota-Baxter families with integer entries in [−bound, bound].
    SearchRbf {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        bound: u32,
        #[arg(long, default_value = "0")]
        weight: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Run the invariant battery on the built-in fixtures and seeded random instances.
    Selftest {
        #[arg(long, default_value_t = battery::DEFAULT_SEED)]
        seed: u64,
        /// Percentage of the full random counts to run.
        #[arg(long, default_value_t = 100)]
        scale: u32,
        /// Frozen oracle outputs to compare cohomology against.
        #[arg(long)]
        oracle: Option<PathBuf>,
        /// Directory of shipped fixtures to round-trip.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Cohomology { .. } => "cohomology",
            Command::McCheck { .. } => "mc-check",
            Command::Star { .. } => "star",
            Command::YauTwist { .. } => "yau-twist",
            Command::Nijenhuis { .. } => "nijenhuis",
            Command::DeformCheck { .. } => "deform-check",
            Command::Extend { .. } => "extend",
            Command::ExtractCocycle { .. } => "extract-cocycle",
            Command::CompareExt { .. } => "compare-ext",
            Command::SearchRbf { .. } => "search-rbf",
            Command::Selftest { .. } => "selftest",
        }
    }
}

/// Errors turned into `status: error` reports.
#[derive(Debug)]
enum Fail {
    Io(String),
    Core(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail::Core(e)
    }
}

type Outcome = Result<Report, Fail>;

fn load(path: &Path) -> Result<WorkbenchFile, Fail> {
    let text = std::fs::read_to_string(path).map_err(|e| Fail::Io(format!("cannot read {}: {}", path.display(), e)))?;
    parse(&text).map_err(|e| Fail::Io(format!("{}: {}", path.display(), e)))
}

fn need<'a, T>(x: &'a Option<T>, what: &str) -> Result<&'a T, Fail> {
    x.as_ref().ok_or_else(|| Fail::Core(Error::malformed(format!("the file has no {} block", what))))
}

fn first_failure(checks: &[(&str, Check)]) -> Check {
    checks.iter().find_map(|(_, c)| c.clone().err()).map_or(Ok(()), Err)
}

fn checks_value(checks: &[(&str, Check)]) -> Value {
    Value::Object(checks.iter().map(|(k, c)| (k.to_string(), check_value(c))).collect())
}

fn monoid_check(f: &WorkbenchFile) -> Check {
    validate_monoid(f.monoid()).map_err(|v| {
        let (eq, om): (&'static str, Vec<usize>) = match v {
            MonoidViolation::Unit(a) => ("monoid-unit", vec![a]),
            MonoidViolation::Associativity(a, b, c) => ("monoid-associativity", vec![a, b, c]),
        };
        Witness::new(eq, &om, &[], Vec::new(), Vec::new())
    })
}

/// The file's bimodule, or the regular one (with `T = R` when a family is present).
fn module_of(f: &WorkbenchFile) -> Result<OmegaBimodule, Error> {
    match (&f.bimodule, &f.rota_baxter) {
        (Some(b), _) => Ok(b.clone()),
        (None, Some(rb)) => OmegaBimodule::regular_rbf(&f.algebra, rb),
        (None, None) => OmegaBimodule::regular(&f.algebra, None),
    }
}

fn rbf_module_of(f: &WorkbenchFile, rb: &RotaBaxterFamily) -> Result<OmegaBimodule, Error> {
    match &f.bimodule {
        Some(b) if b.t().is_some() => Ok(b.clone()),
        Some(_) => Err(Error::malformed("the bimodule has no t family")),
        None => OmegaBimodule::regular_rbf(&f.algebra, rb),
    }
}

fn cmd_validate(f: &WorkbenchFile) -> Outcome {
    let mut checks: Vec<(&str, Check)> = vec![("monoid", monoid_check(f))];
    if checks[0].1.is_ok() {
        checks.push(("algebra", validate_algebra(&f.algebra)));
        if let Some(rb) = &f.rota_baxter {
            checks.push(("rota_baxter", check_rota_baxter(&f.algebra, rb)?));
        }
        if let Some(b) = &f.bimodule {
            checks.push(("bimodule", validate_bimodule(b)));
            if let (Some(rb), Some(_)) = (&f.rota_baxter, b.t()) {
                checks.push(("rbf_bimodule", validate_rbf_bimodule(b, rb)?));
            }
        }
        if let Some(e) = &f.extension {
            checks.push(("extension", validate_presentation(e)));
        }
    }
    Ok(Report::checked("validate", &first_failure(&checks), json!({ "checks": checks_value(&checks) })))
}

fn cmd_cohomology(f: &WorkbenchFile, kind: ComplexKind, max: usize) -> Outcome {
    let table = match kind {
        ComplexKind::Alg => Complex::new(&module_of(f)?, max + 1).cohomology(max)?,
        ComplexKind::Rbf | ComplexKind::Rbfa => {
            let rb = need(&f.rota_baxter, "rota_baxter")?;
            let ctx = RbfContext::new(&rbf_module_of(f, rb)?, rb, max + 1)?;
            let rep = rbfa_cohomology_dims(&ctx, max)?;
            if kind == ComplexKind::Rbf {
                rep.rbf
            } else {
                rep.rbfa
            }
        }
    };
    let name = match kind {
        ComplexKind::Alg => "alg",
        ComplexKind::Rbf => "rbf",
        ComplexKind::Rbfa => "rbfa",
    };
    Ok(Report::ok("cohomology", json!({ "complex": name, "dims": table.h(), "table": cohomology_value(&table) })))
}

/// The first nonzero entry of `f` as a witness against zero.
pub fn nonzero_witness(equation: &'static str, f: &Cochain) -> Check {
    let w = f.out_dim();
    let args = f.block_len() / w.max(1);
    for t in 0..f.tuple_count() {
        let blk = f.block(t);
        for i in 0..args {
            let v = &blk[i * w..(i + 1) * w];
            if v.iter().any(|x| !x.is_zero()) {
                let om = f.omega_size();
                let mut tup = vec![0; f.degree()];
                let mut idx = t;
                for s in tup.iter_mut().rev() {
                    *s = idx % om;
                    idx /= om;
                }
                let mut basis = vec![0; f.degree()];
                let mut idx = i;
                for s in basis.iter_mut().rev() {
                    *s = idx % f.arg_dim();
                    idx /= f.arg_dim();
                }
                return Err(Witness::new(equation, &tup, &basis, v.to_vec(), vec![Rat::zero(); w]));
            }
        }
    }
    Ok(())
}

fn cmd_mc_check(f: &WorkbenchFile) -> Outcome {
    let a = &f.algebra;
    let mu = Cochain::from_products(a.omega().size(), a.mu_all());
    let residual = mc_residual(a.omega(), a.p_all(), a.q_all(), &mu)?;
    let valid = validate_algebra(a);
    let equivariant = bihom_core::cochain_complex::is_equivariant(&OmegaBimodule::regular(a, None)?, &mu)
        && (0..a.omega().size()).all(|x| (0..a.omega().size()).all(|y| a.p(x).commutes_with(a.q(y))));
    if equivariant && residual.is_zero() != valid.is_ok() {
        return Err(Error::internal("[μ, μ] = 0 disagrees with validate_algebra").into());
    }
    let check = if equivariant { nonzero_witness("maurer-cartan", &residual) } else { valid.clone() };
    Ok(Report::checked(
        "mc-check",
        &check,
        json!({ "equivariant": equivariant, "residual_zero": residual.is_zero(), "validates": valid.is_ok() }),
    ))
}

fn cmd_star(f: &WorkbenchFile) -> Outcome {
    let rb = need(&f.rota_baxter, "rota_baxter")?;
    let star = star_product(&f.algebra, rb)?;
    let module = rbf_module_of(f, rb)?;
    let mstar = induced_module_star(&module, rb)?;
    let checks = vec![
        ("star_validates", validate_algebra(&star)),
        ("r_homomorphism", is_homomorphism(&rb.r, &star, &f.algebra)?),
        ("induced_module_validates", validate_bimodule(&mstar)),
    ];
    let mut out = WorkbenchFile::new(star);
    out.rota_baxter = Some(rb.clone());
    out.bimodule = f.bimodule.as_ref().map(|_| mstar);
    Ok(Report::checked("star", &first_failure(&checks), json!({ "checks": checks_value(&checks), "file": format::to_value(&out) })))
}

fn cmd_yau_twist(f: &WorkbenchFile) -> Outcome {
    let tw = need(&f.twist, "twist")?;
    let rb = f.rota_baxter.clone().unwrap_or_else(|| RotaBaxterFamily::zero(&f.algebra, Rat::zero()));
    let (twisted, rb2) = yau_twist(&f.algebra, &rb, &tw.p, &tw.q)?;
    let mut checks = vec![("twisted_validates", validate_algebra(&twisted))];
    if f.rota_baxter.is_some() {
        checks.push(("rota_baxter", check_rota_baxter(&twisted, &rb2)?));
    }
    let mut out = WorkbenchFile::new(twisted);
    out.rota_baxter = f.rota_baxter.as_ref().map(|_| rb2);
    Ok(Report::checked("yau-twist", &first_failure(&checks), json!({ "checks": checks_value(&checks), "file": format::to_value(&out) })))
}

fn cmd_nijenhuis(f: &WorkbenchFile) -> Outcome {
    let a = &f.algebra;
    let n = need(&f.nijenhuis, "nijenhuis")?;
    let nf = NijenhuisFamily::new(n.clone());
    let nij = check_nijenhuis(a, &nf)?;
    let mut result = json!({ "nijenhuis": check_value(&nij) });
    if nij.is_ok() {
        let (an, hom) = deformed_product(a, &nf)?;
        let mun = deformed_mu(a, n)?;
        let triv = check_trivial_deformation(a, &nf, &mun)?;
        result["deformed_validates"] = check_value(&validate_algebra(&an));
        result["homomorphism"] = check_value(&hom);
        result["trivial_deformation"] = json!({
            "commutes": check_value(&triv.commutes),
            "first_order": check_value(&triv.first_order),
            "second_order": check_value(&triv.second_order),
        });
    }
    match psi_n(a, n) {
        Ok(p) => {
            result["psi"] = json!({
                "deformed_validates": p.deformed_validates,
                "equivalences_hold": p.equivalences_hold(),
                "psi_cocycle": p.psi_cocycle,
                "psi_zero": p.psi_zero,
            });
            if !p.equivalences_hold() {
                return Err(Error::internal("ψᴺ equivalences fail").into());
            }
        }
        Err(e) => result["psi"] = json!({ "skipped": e.to_string() }),
    }
    Ok(Report::checked("nijenhuis", &nij, result))
}

fn order_value(o: &bihom_core::deformation::OrderReport) -> Value {
    json!({ "associativity": check_value(&o.associativity), "order": o.order, "rota_baxter": check_value(&o.rota_baxter) })
}

fn cmd_deform_check(f: &WorkbenchFile, order: usize) -> Outcome {
    if let Some(jet) = &f.jet {
        let rb = need(&f.rota_baxter, "rota_baxter")?;
        if order == 0 || order > jet.order() {
            return Err(Error::precondition(format!("order must lie in 1..={}", jet.order())).into());
        }
        let ctx = RbfContext::regular(&f.algebra, rb, 2)?;
        let cut = DeformationJet::new(jet.mu_orders[..order].to_vec(), jet.r_orders[..order].to_vec())?;
        let rep = check_jet(&ctx, &cut)?;
        let failure = rep.orders.iter().find_map(|o| o.associativity.clone().err().or(o.rota_baxter.clone().err()));
        return Ok(Report::checked(
            "deform-check",
            &failure.map_or(Ok(()), Err),
            json!({
                "infinitesimal_cocycle": rep.infinitesimal_cocycle,
                "orders": rep.orders.iter().map(order_value).collect::<Vec<_>>(),
            }),
        ));
    }
    let mu1 = need(&f.cochain, "jet or cochain")?;
    if order != 1 {
        return Err(Error::precondition("a cochain block describes a linear deformation; use --order 1").into());
    }
    let r = check_linear_deformation(&f.algebra, mu1)?;
    let check = if r.all() { Ok(()) } else { Err(Witness::new("linear-deformation", &[], &[], Vec::new(), Vec::new())) };
    Ok(Report::checked(
        "deform-check",
        &check,
        json!({ "cocycle": r.cocycle, "equivariant": r.equivariant, "self_associative": r.self_associative }),
    ))
}

fn cmd_extend(f: &WorkbenchFile) -> Outcome {
    let rb = need(&f.rota_baxter, "rota_baxter")?;
    let pair = need(&f.cocycle_pair, "cocycle_pair")?;
    let ctx = RbfContext::new(&rbf_module_of(f, rb)?, rb, 2)?;
    let built = build_extension(&ctx, pair)?;
    let check = validate_presentation(&built.extension);
    let mut out = WorkbenchFile::new(f.algebra.clone());
    out.rota_baxter = Some(rb.clone());
    out.bimodule = f.bimodule.clone();
    out.extension = Some(built.extension);
    Ok(Report::checked(
        "extend",
        &check,
        json!({ "cocycle": built.cocycle, "file": format::to_value(&out), "validates": built.total_validates }),
    ))
}

fn cmd_extract(f: &WorkbenchFile) -> Outcome {
    let e = need(&f.extension, "extension")?;
    let x = extract_cocycle(e)?;
    if x.algebra != f.algebra {
        return Err(Error::precondition("the extension is over a different algebra than the file's").into());
    }
    let om = f.monoid();
    Ok(Report::ok(
        "extract-cocycle",
        json!({
            "bimodule": format::bimodule_value(&x.module),
            "cocycle_pair": format::pair_value(om, &x.pair),
            "rota_baxter": format::rb_value(om, &x.rb),
        }),
    ))
}

fn cmd_compare(f1: &WorkbenchFile, f2: &WorkbenchFile) -> Outcome {
    let e1 = need(&f1.extension, "extension")?;
    let e2 = need(&f2.extension, "extension")?;
    let c = compare_extensions(e1, e2)?;
    let om = f1.monoid();
    let iso = c.iso.as_ref().map(|m| Value::Object((0..om.size()).map(|w| (w.to_string(), format::mat_value(&m[w]))).collect()));
    let check = if c.cohomologous { Ok(()) } else { Err(Witness::new("not-cohomologous", &[], &[], Vec::new(), Vec::new())) };
    Ok(Report::checked("compare-ext", &check, json!({ "cohomologous": c.cohomologous, "iso": iso })))
}

fn cmd_search(f: &WorkbenchFile, bound: u32, weight: &str, cap: u64) -> Outcome {
    let w = Rat::parse_canonical(weight).map_err(|e| Fail::Io(format!("--weight: {}", e)))?;
    let all = search_rbf(&f.algebra, bound, &w, cap)?;
    let om = f.monoid();
    Ok(Report::ok(
        "search-rbf",
        json!({ "count": all.len(), "families": all.iter().map(|rb| format::rb_value(om, rb)).collect::<Vec<_>>() }),
    ))
}

fn cmd_selftest(seed: u64, scale: u32, oracle: Option<PathBuf>, fixtures: Option<PathBuf>) -> Outcome {
    let cfg = BatteryConfig { seed, scale, oracle, fixtures_dir: fixtures };
    let outcomes = battery::run(&cfg);
    let failed = outcomes.iter().find(|o| !o.passed);
    let check = match failed {
        Some(o) => Err(Witness::new(o.name, &[], &[o.id as usize], Vec::new(), Vec::new())),
        None => Ok(()),
    };
    Ok(Report::checked(
        "selftest",
        &check,
        json!({
            "criteria": outcomes.iter().map(|o| json!({ "detail": o.detail, "id": o.id, "name": o.name, "passed": o.passed })).collect::<Vec<_>>(),
            "scale": scale,
            "seed": seed,
        }),
    ))
}

fn dispatch(cmd: &Command) -> Outcome {
    match cmd {
        Command::Validate { file } => cmd_validate(&load(file)?),
        Command::Cohomology { file, complex, max_degree } => cmd_cohomology(&load(file)?, *complex, *max_degree),
        Command::McCheck { file } => cmd_mc_check(&load(file)?),
        Command::Star { file } => cmd_star(&load(file)?),
        Command::YauTwist { file } => cmd_yau_twist(&load(file)?),
        Command::Nijenhuis { file } => cmd_nijenhuis(&load(file)?),
        Command::DeformCheck { file, order } => cmd_deform_check(&load(file)?, *order),
        Command::Extend { file } => cmd_extend(&load(file)?),
        Command::ExtractCocycle { file } => cmd_extract(&load(file)?),
        Command::CompareExt { first, second } => cmd_compare(&load(first)?, &load(second)?),
        Command::SearchRbf { file, bound, weight, cap } => cmd_search(&load(file)?, *bound, weight, *cap),
        Command::Selftest { seed, scale, oracle, fixtures } => cmd_selftest(*seed, *scale, oracle.clone(), fixtures.clone()),
    }
}

/// Runs one command; returns the rendered report (or usage text) and the exit code.
pub fn run<I, S>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (e.render().to_string(), code);
        }
    };
    let start = Instant::now();
    let name = cli.command.name();
    let mut report = match dispatch(&cli.command) {
        Ok(r) => r,
        Err(Fail::Io(msg)) => Report::error(name, msg),
        Err(Fail::Core(e)) => Report::from_core_error(name, &e),
    };
    if !cli.no_timing {
        report.timing = Some(start.elapsed());
    }
    (report.render(), report.status.exit_code())
}
