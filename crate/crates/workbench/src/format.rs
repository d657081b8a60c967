//! The on-disk JSON format.
//!
//! Every rational is a string in canonical form (`"2"`, `"-3/2"`). Families
//! indexed by Ω are objects keyed by the element (`"0"`, `"1"`), products and
//! actions are keyed by `"α,β"`, and cochain blocks by the comma-joined Ω-tuple
//! (the empty string in degree 0). Keys are written sorted and unknown keys are
//! rejected, so parse and serialize are inverse on canonical files.

use std::fmt;

use bihom_core::cochain_complex::Cochain;
use bihom_core::deformation::DeformationJet;
use bihom_core::extension::{CocyclePair, ExtensionPresentation};
use bihom_core::omega_algebra::{Bilinear, OmegaAlgebra, RotaBaxterFamily};
use bihom_core::omega_bimodule::OmegaBimodule;
use bihom_core::{Mat, Monoid, Rat};
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "bihom-workbench/1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    /// Dotted location of the offending value, e.g. `algebra.mu."0,1"`.
    pub path: String,
    pub message: String,
    pub suggestion: Option<String>,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", if self.path.is_empty() { "<root>" } else { &self.path }, self.message)?;
        if let Some(s) = &self.suggestion {
            write!(f, " (suggested: \"{}\")", s)?;
        }
        Ok(())
    }
}

impl std::error::Error for FormatError {}

type Parsed<T> = Result<T, FormatError>;

/// A pair of families `(p, q)` to twist by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Twist {
    pub p: Vec<Mat>,
    pub q: Vec<Mat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkbenchFile {
    pub algebra: OmegaAlgebra,
    pub rota_baxter: Option<RotaBaxterFamily>,
    pub bimodule: Option<OmegaBimodule>,
    pub cochain: Option<Cochain>,
    pub jet: Option<DeformationJet>,
    pub cocycle_pair: Option<CocyclePair>,
    pub extension: Option<ExtensionPresentation>,
    pub nijenhuis: Option<Vec<Mat>>,
    pub twist: Option<Twist>,
}

impl WorkbenchFile {
    pub fn new(algebra: OmegaAlgebra) -> WorkbenchFile {
        WorkbenchFile {
            algebra,
            rota_baxter: None,
            bimodule: None,
            cochain: None,
            jet: None,
            cocycle_pair: None,
            extension: None,
            nijenhuis: None,
            twist: None,
        }
    }

    pub fn monoid(&self) -> &Monoid {
        self.algebra.omega()
    }
}

struct Node<'a> {
    v: &'a Value,
    path: String,
}

fn join(path: &str, key: &str) -> String {
    let plain = !key.is_empty() && key.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    let k = if plain { key.to_string() } else { format!("{:?}", key) };
    if path.is_empty() {
        k
    } else {
        format!("{}.{}", path, k)
    }
}

impl<'a> Node<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Parsed<T> {
        Err(FormatError { path: self.path.clone(), message: msg.into(), suggestion: None })
    }

    fn object(&self, allowed: &[&str]) -> Parsed<&'a Map<String, Value>> {
        let Some(o) = self.v.as_object() else { return self.err("expected an object") };
        for k in o.keys() {
            if !allowed.contains(&k.as_str()) {
                return Err(FormatError { path: join(&self.path, k), message: "unknown key".into(), suggestion: None });
            }
        }
        Ok(o)
    }

    fn field(&self, o: &'a Map<String, Value>, key: &str) -> Parsed<Node<'a>> {
        match o.get(key) {
            Some(v) => Ok(Node { v, path: join(&self.path, key) }),
            None => self.err(format!("missing key \"{}\"", key)),
        }
    }

    fn opt(&self, o: &'a Map<String, Value>, key: &str) -> Option<Node<'a>> {
        o.get(key).map(|v| Node { v, path: join(&self.path, key) })
    }

    fn array(&self, len: Option<usize>) -> Parsed<Vec<Node<'a>>> {
        let Some(a) = self.v.as_array() else { return self.err("expected an array") };
        if let Some(n) = len {
            if a.len() != n {
                return self.err(format!("expected {} entries, found {}", n, a.len()));
            }
        }
        Ok(a.iter().enumerate().map(|(i, v)| Node { v, path: format!("{}[{}]", self.path, i) }).collect())
    }

    fn usize(&self) -> Parsed<usize> {
        match self.v.as_u64() {
            Some(n) => Ok(n as usize),
            None => self.err("expected a non-negative integer"),
        }
    }

    fn string(&self) -> Parsed<&'a str> {
        match self.v.as_str() {
            Some(s) => Ok(s),
            None => self.err("expected a string"),
        }
    }

    fn rat(&self) -> Parsed<Rat> {
        let s = match self.v {
            Value::String(s) => s,
            Value::Number(n) => {
                return Err(FormatError {
                    path: self.path.clone(),
                    message: "rationals are written as strings".into(),
                    suggestion: n.as_i64().map(|i| i.to_string()),
                })
            }
            _ => return self.err("expected a rational string"),
        };
        Rat::parse_canonical(s).map_err(|e| FormatError {
            path: self.path.clone(),
            message: e.reason.to_string(),
            suggestion: e.suggestion,
        })
    }

    fn vector(&self, len: usize) -> Parsed<Vec<Rat>> {
        self.array(Some(len))?.iter().map(Node::rat).collect()
    }

    fn mat(&self, rows: usize, cols: usize) -> Parsed<Mat> {
        let r = self.array(Some(rows))?.iter().map(|n| n.vector(cols)).collect::<Parsed<Vec<_>>>()?;
        Ok(if rows == 0 { Mat::zeros(0, cols) } else { Mat::from_rows(&r) })
    }

    fn bilinear(&self, l: usize, r: usize, out: usize) -> Parsed<Bilinear> {
        let mut data = Vec::with_capacity(l * r * out);
        for row in self.array(Some(l))? {
            for cell in row.array(Some(r))? {
                data.extend(cell.vector(out)?);
            }
        }
        Ok(Bilinear::from_vec(l, r, out, data).expect("length matches"))
    }

    /// An object with exactly the keys `keys`, in that order.
    fn keyed(&self, keys: &[String]) -> Parsed<Vec<Node<'a>>> {
        let refs: Vec<&str> = keys.iter().map(String::as_str).collect();
        let o = self.object(&refs)?;
        keys.iter().map(|k| self.field(o, k)).collect()
    }
}

fn tuple_key(t: &[usize]) -> String {
    t.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn tuple_keys(om: &Monoid, n: usize) -> Vec<String> {
    (0..om.tuple_count(n)).map(|i| tuple_key(&om.tuple(n, i))).collect()
}

fn family(n: &Node, om: &Monoid, rows: usize, cols: usize) -> Parsed<Vec<Mat>> {
    n.keyed(&tuple_keys(om, 1))?.iter().map(|x| x.mat(rows, cols)).collect()
}

fn products(n: &Node, om: &Monoid, l: usize, r: usize, out: usize) -> Parsed<Vec<Bilinear>> {
    n.keyed(&tuple_keys(om, 2))?.iter().map(|x| x.bilinear(l, r, out)).collect()
}

fn core_err<T>(n: &Node, r: bihom_core::Result<T>) -> Parsed<T> {
    r.map_err(|e| FormatError { path: n.path.clone(), message: e.message, suggestion: None })
}

fn parse_monoid(n: &Node) -> Parsed<Monoid> {
    let o = n.object(&["table", "unit"])?;
    let unit = n.field(o, "unit")?.usize()?;
    let rows = n.field(o, "table")?.array(None)?;
    let table = rows.iter().map(|r| r.array(None)?.iter().map(Node::usize).collect()).collect::<Parsed<Vec<Vec<_>>>>()?;
    core_err(n, Monoid::new(unit, table))
}

fn parse_algebra(n: &Node, om: &Monoid) -> Parsed<OmegaAlgebra> {
    let o = n.object(&["dim", "mu", "p", "q"])?;
    let d = n.field(o, "dim")?.usize()?;
    let mu = products(&n.field(o, "mu")?, om, d, d, d)?;
    let p = family(&n.field(o, "p")?, om, d, d)?;
    let q = family(&n.field(o, "q")?, om, d, d)?;
    core_err(n, OmegaAlgebra::new(om.clone(), d, mu, p, q))
}

fn parse_rb(n: &Node, om: &Monoid, d: usize) -> Parsed<RotaBaxterFamily> {
    let o = n.object(&["r", "weight"])?;
    let weight = n.field(o, "weight")?.rat()?;
    let r = family(&n.field(o, "r")?, om, d, d)?;
    Ok(RotaBaxterFamily::new(weight, r))
}

fn parse_bimodule(n: &Node, a: &OmegaAlgebra) -> Parsed<OmegaBimodule> {
    let om = a.omega();
    let d = a.dim();
    let o = n.object(&["dim", "left", "p", "q", "right", "t"])?;
    let w = n.field(o, "dim")?.usize()?;
    let left = products(&n.field(o, "left")?, om, d, w, w)?;
    let right = products(&n.field(o, "right")?, om, w, d, w)?;
    let p = family(&n.field(o, "p")?, om, w, w)?;
    let q = family(&n.field(o, "q")?, om, w, w)?;
    let t = n.opt(o, "t").map(|x| family(&x, om, w, w)).transpose()?;
    core_err(n, OmegaBimodule::new(a.clone(), w, left, right, p, q, t))
}

fn parse_cochain(n: &Node, om: &Monoid) -> Parsed<Cochain> {
    let o = n.object(&["arg_dim", "degree", "out_dim", "values"])?;
    let deg = n.field(o, "degree")?.usize()?;
    let d = n.field(o, "arg_dim")?.usize()?;
    let w = n.field(o, "out_dim")?.usize()?;
    if deg > 8 {
        return n.err("degree above 8 is not supported");
    }
    let block = d.pow(deg as u32) * w;
    let mut data = Vec::with_capacity(block * om.tuple_count(deg));
    for b in n.field(o, "values")?.keyed(&tuple_keys(om, deg))? {
        data.extend(b.vector(block)?);
    }
    core_err(n, Cochain::from_vec(om.size(), deg, d, w, data))
}

fn parse_cochains(n: &Node, om: &Monoid) -> Parsed<Vec<Cochain>> {
    n.array(None)?.iter().map(|x| parse_cochain(x, om)).collect()
}

fn parse_extension(n: &Node, om: &Monoid, d: usize) -> Parsed<ExtensionPresentation> {
    let o = n.object(&["i", "rho", "rota_baxter", "s", "t", "total"])?;
    let total = parse_algebra(&n.field(o, "total")?, om)?;
    let e = total.dim();
    if e < d {
        return n.err(format!("total dimension {} is below the algebra dimension {}", e, d));
    }
    let w = e - d;
    let t_e = parse_rb(&n.field(o, "rota_baxter")?, om, e)?;
    Ok(ExtensionPresentation {
        i: family(&n.field(o, "i")?, om, e, w)?,
        rho: family(&n.field(o, "rho")?, om, d, e)?,
        s: family(&n.field(o, "s")?, om, e, d)?,
        t: family(&n.field(o, "t")?, om, w, e)?,
        total,
        t_e,
    })
}

const TOP_KEYS: &[&str] = &[
    "algebra",
    "bimodule",
    "cochain",
    "cocycle_pair",
    "extension",
    "jet",
    "monoid",
    "nijenhuis",
    "rota_baxter",
    "schema",
    "twist",
];

pub fn parse_value(v: &Value) -> Parsed<WorkbenchFile> {
    let root = Node { v, path: String::new() };
    let o = root.object(TOP_KEYS)?;
    let schema = root.field(o, "schema")?;
    if schema.string()? != SCHEMA {
        return schema.err(format!("unsupported schema, expected \"{}\"", SCHEMA));
    }
    let om = parse_monoid(&root.field(o, "monoid")?)?;
    let algebra = parse_algebra(&root.field(o, "algebra")?, &om)?;
    let d = algebra.dim();
    let mut f = WorkbenchFile::new(algebra);
    f.rota_baxter = root.opt(o, "rota_baxter").map(|n| parse_rb(&n, &om, d)).transpose()?;
    f.bimodule = root.opt(o, "bimodule").map(|n| parse_bimodule(&n, &f.algebra)).transpose()?;
    f.cochain = root.opt(o, "cochain").map(|n| parse_cochain(&n, &om)).transpose()?;
    if let Some(n) = root.opt(o, "jet") {
        let jo = n.object(&["mu", "r"])?;
        let mu = parse_cochains(&n.field(jo, "mu")?, &om)?;
        let r = parse_cochains(&n.field(jo, "r")?, &om)?;
        f.jet = Some(core_err(&n, DeformationJet::new(mu, r))?);
    }
    if let Some(n) = root.opt(o, "cocycle_pair") {
        let po = n.object(&["chi", "psi"])?;
        let psi = parse_cochain(&n.field(po, "psi")?, &om)?;
        let chi = parse_cochain(&n.field(po, "chi")?, &om)?;
        f.cocycle_pair = Some(core_err(&n, CocyclePair::new(psi, chi))?);
    }
    f.extension = root.opt(o, "extension").map(|n| parse_extension(&n, &om, d)).transpose()?;
    f.nijenhuis = root.opt(o, "nijenhuis").map(|n| family(&n, &om, d, d)).transpose()?;
    if let Some(n) = root.opt(o, "twist") {
        let to = n.object(&["p", "q"])?;
        let p = family(&n.field(to, "p")?, &om, d, d)?;
        let q = family(&n.field(to, "q")?, &om, d, d)?;
        f.twist = Some(Twist { p, q });
    }
    Ok(f)
}

pub fn parse(text: &str) -> Parsed<WorkbenchFile> {
    let v: Value = serde_json::from_str(text).map_err(|e| FormatError {
        path: String::new(),
        message: format!("invalid JSON: {}", e),
        suggestion: None,
    })?;
    parse_value(&v)
}

pub fn rat_value(x: &Rat) -> Value {
    Value::String(x.to_string())
}

pub fn vector_value(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_value).collect())
}

pub fn mat_value(m: &Mat) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_value(m.row(i))).collect())
}

fn family_value(om: &Monoid, maps: &[Mat]) -> Value {
    let keys = tuple_keys(om, 1);
    Value::Object(keys.into_iter().zip(maps).map(|(k, m)| (k, mat_value(m))).collect())
}

fn bilinear_value(b: &Bilinear) -> Value {
    let (l, r, _) = b.shape();
    Value::Array((0..l).map(|i| Value::Array((0..r).map(|j| vector_value(b.on_basis(i, j))).collect())).collect())
}

fn products_value(om: &Monoid, mu: &[Bilinear]) -> Value {
    let keys = tuple_keys(om, 2);
    Value::Object(keys.into_iter().zip(mu).map(|(k, b)| (k, bilinear_value(b))).collect())
}

pub fn monoid_value(om: &Monoid) -> Value {
    json!({ "table": om.table(), "unit": om.unit() })
}

pub fn algebra_value(a: &OmegaAlgebra) -> Value {
    let om = a.omega();
    json!({
        "dim": a.dim(),
        "mu": products_value(om, a.mu_all()),
        "p": family_value(om, a.p_all()),
        "q": family_value(om, a.q_all()),
    })
}

pub fn rb_value(om: &Monoid, rb: &RotaBaxterFamily) -> Value {
    json!({ "r": family_value(om, &rb.r), "weight": rat_value(&rb.weight) })
}

pub fn bimodule_value(b: &OmegaBimodule) -> Value {
    let om = b.omega();
    let mut v = json!({
        "dim": b.dim(),
        "left": products_value(om, b.left_all()),
        "right": products_value(om, b.right_all()),
        "p": family_value(om, b.p_all()),
        "q": family_value(om, b.q_all()),
    });
    if let Some(t) = b.t() {
        v["t"] = family_value(om, t);
    }
    v
}

pub fn cochain_value(om: &Monoid, f: &Cochain) -> Value {
    let keys = tuple_keys(om, f.degree());
    let values: Map<String, Value> = keys.into_iter().enumerate().map(|(t, k)| (k, vector_value(f.block(t)))).collect();
    json!({
        "arg_dim": f.arg_dim(),
        "degree": f.degree(),
        "out_dim": f.out_dim(),
        "values": values,
    })
}

pub fn pair_value(om: &Monoid, p: &CocyclePair) -> Value {
    json!({ "chi": cochain_value(om, &p.chi), "psi": cochain_value(om, &p.psi) })
}

pub fn extension_value(om: &Monoid, e: &ExtensionPresentation) -> Value {
    json!({
        "i": family_value(om, &e.i),
        "rho": family_value(om, &e.rho),
        "rota_baxter": rb_value(om, &e.t_e),
        "s": family_value(om, &e.s),
        "t": family_value(om, &e.t),
        "total": algebra_value(&e.total),
    })
}

pub fn to_value(f: &WorkbenchFile) -> Value {
    let om = f.monoid();
    let mut v = json!({
        "algebra": algebra_value(&f.algebra),
        "monoid": monoid_value(om),
        "schema": SCHEMA,
    });
    if let Some(rb) = &f.rota_baxter {
        v["rota_baxter"] = rb_value(om, rb);
    }
    if let Some(b) = &f.bimodule {
        v["bimodule"] = bimodule_value(b);
    }
    if let Some(c) = &f.cochain {
        v["cochain"] = cochain_value(om, c);
    }
    if let Some(j) = &f.jet {
        v["jet"] = json!({
            "mu": j.mu_orders.iter().map(|c| cochain_value(om, c)).collect::<Vec<_>>(),
            "r": j.r_orders.iter().map(|c| cochain_value(om, c)).collect::<Vec<_>>(),
        });
    }
    if let Some(p) = &f.cocycle_pair {
        v["cocycle_pair"] = pair_value(om, p);
    }
    if let Some(e) = &f.extension {
        v["extension"] = extension_value(om, e);
    }
    if let Some(n) = &f.nijenhuis {
        v["nijenhuis"] = family_value(om, n);
    }
    if let Some(t) = &f.twist {
        v["twist"] = json!({ "p": family_value(om, &t.p), "q": family_value(om, &t.q) });
    }
    v
}

/// Pretty-printed with sorted keys and a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

pub fn serialize(f: &WorkbenchFile) -> String {
    to_canonical_string(&to_value(f))
}
