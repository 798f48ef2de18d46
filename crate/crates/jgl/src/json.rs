//! JSON documents for structures, points and flags.
//!
//! Every document carries `schema_version` and `kind`. Scalars are strings.
//! Readers walk a parsed [`Value`] and report the JSON path of the first
//! violation.

use std::fmt;

use jgl_core::geom::{DualPoint, GrassGeometry, Point};
use jgl_core::jordan::{JordanAlgebra, JordanPair, JordanTripleSystem, LieTripleSystem, Sign};
use jgl_core::kernel::tensor::Coeff;
use jgl_core::liealg::{GradedLieAlgebra, Grading};
use jgl_core::{Matrix, MultilinearMap, Ring, Scalar, Subspace};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemaError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

impl std::error::Error for SchemaError {}

pub type Parsed<T> = Result<T, SchemaError>;

/// A value together with its path from the document root.
#[derive(Clone)]
pub struct Node<'a> {
    pub value: &'a Value,
    pub path: String,
}

impl<'a> Node<'a> {
    pub fn root(value: &'a Value) -> Self {
        Node {
            value,
            path: "$".into(),
        }
    }

    pub fn err(&self, msg: impl Into<String>) -> SchemaError {
        SchemaError {
            path: self.path.clone(),
            message: msg.into(),
        }
    }

    pub fn opt(&self, key: &str) -> Option<Node<'a>> {
        self.value.get(key).filter(|v| !v.is_null()).map(|v| Node {
            value: v,
            path: format!("{}.{key}", self.path),
        })
    }

    pub fn get(&self, key: &str) -> Parsed<Node<'a>> {
        if !self.value.is_object() {
            return Err(self.err("expected an object"));
        }
        self.opt(key)
            .ok_or_else(|| self.err(format!("missing field `{key}`")))
    }

    /// Rejects keys outside `allowed`.
    pub fn only(&self, allowed: &[&str]) -> Parsed<()> {
        let obj = self
            .value
            .as_object()
            .ok_or_else(|| self.err("expected an object"))?;
        match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(self.err(format!("unknown field `{k}`"))),
            None => Ok(()),
        }
    }

    pub fn items(&self) -> Parsed<Vec<Node<'a>>> {
        let arr = self
            .value
            .as_array()
            .ok_or_else(|| self.err("expected an array"))?;
        Ok(arr
            .iter()
            .enumerate()
            .map(|(i, v)| Node {
                value: v,
                path: format!("{}[{i}]", self.path),
            })
            .collect())
    }

    pub fn usize(&self) -> Parsed<usize> {
        self.value
            .as_u64()
            .map(|n| n as usize)
            .ok_or_else(|| self.err("expected a non-negative integer"))
    }

    pub fn int(&self) -> Parsed<i64> {
        self.value
            .as_i64()
            .ok_or_else(|| self.err("expected an integer"))
    }

    pub fn str(&self) -> Parsed<&'a str> {
        self.value
            .as_str()
            .ok_or_else(|| self.err("expected a string"))
    }

    pub fn ring(&self) -> Parsed<Ring> {
        self.str()?.parse().map_err(|e| self.err(format!("{e}")))
    }

    pub fn scalar(&self, ring: Ring) -> Parsed<Scalar> {
        let s = self
            .str()
            .map_err(|_| self.err("scalars are written as strings"))?;
        ring.parse_scalar(s).map_err(|e| self.err(format!("{e}")))
    }

    pub fn vector(&self, ring: Ring, len: Option<usize>) -> Parsed<Vec<Scalar>> {
        let items = self.items()?;
        if let Some(n) = len {
            if items.len() != n {
                return Err(self.err(format!("expected {n} entries, found {}", items.len())));
            }
        }
        items.iter().map(|x| x.scalar(ring)).collect()
    }

    /// Rows of equal length; `cols` fixes the length when given.
    pub fn matrix(&self, ring: Ring, cols: Option<usize>) -> Parsed<Matrix> {
        let rows = self.items()?;
        if rows.is_empty() {
            return Err(self.err("expected at least one row"));
        }
        let mut width = cols;
        let mut data = Vec::new();
        for r in &rows {
            let v = r.vector(ring, width)?;
            width = Some(v.len());
            data.extend(v);
        }
        Ok(Matrix::new(ring, rows.len(), width.unwrap_or(0), data))
    }
}

pub fn parse(text: &str) -> Parsed<Value> {
    serde_json::from_str(text).map_err(|e| SchemaError {
        path: "$".into(),
        message: format!("malformed JSON: {e}"),
    })
}

/// Checks `schema_version` and returns `kind`.
pub fn header<'a>(root: &Node<'a>) -> Parsed<&'a str> {
    let v = root.get("schema_version")?;
    if v.value.as_u64() != Some(SCHEMA_VERSION) {
        return Err(v.err(format!(
            "unsupported schema version (expected {SCHEMA_VERSION})"
        )));
    }
    root.get("kind")?.str()
}

fn document(kind: &str, ring: Ring) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("kind".into(), json!(kind));
    m.insert("ring".into(), json!(ring.to_string()));
    m
}

// ------------------------------------------------------------ tensors

pub fn scalar_json(x: Scalar) -> Value {
    Value::String(x.to_string())
}

pub fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|&x| scalar_json(x)).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(m.row_vecs().iter().map(|r| vector_json(r)).collect())
}

/// `[i, j, (k,) t, "c"]` per nonzero structure constant.
pub fn coeffs_json(t: &MultilinearMap) -> Value {
    let arity = t.arity();
    let rows = t
        .coeffs()
        .iter()
        .map(|c| {
            let mut row: Vec<Value> = c.index[..arity].iter().map(|&i| json!(i)).collect();
            row.push(json!(c.target));
            row.push(scalar_json(c.value));
            Value::Array(row)
        })
        .collect();
    Value::Array(rows)
}

pub fn read_coeffs(
    node: &Node<'_>,
    ring: Ring,
    slot_dims: &[usize],
    target_dim: usize,
) -> Parsed<MultilinearMap> {
    let arity = slot_dims.len();
    let mut coeffs = Vec::new();
    for entry in node.items()? {
        let parts = entry.items()?;
        if parts.len() != arity + 2 {
            return Err(entry.err(format!("expected {} indices, a target and a value", arity)));
        }
        let mut index = [0usize; 3];
        for (s, &d) in slot_dims.iter().enumerate() {
            let i = parts[s].usize()?;
            if i >= d {
                return Err(
                    parts[s].err(format!("index {i} out of range for slot of dimension {d}"))
                );
            }
            index[s] = i;
        }
        let target = parts[arity].usize()?;
        if target >= target_dim {
            return Err(parts[arity].err(format!(
                "target {target} out of range for dimension {target_dim}"
            )));
        }
        let value = parts[arity + 1].scalar(ring)?;
        coeffs.push(Coeff {
            index,
            target,
            value,
        });
    }
    MultilinearMap::from_coeffs(ring, slot_dims, target_dim, coeffs)
        .map_err(|e| node.err(format!("{e}")))
}

pub fn tensor_json(t: &MultilinearMap) -> Value {
    let mut m = document("tensor", t.ring());
    m.insert("arity".into(), json!(t.arity()));
    m.insert("slot_dims".into(), json!(t.slot_dims()));
    m.insert("target_dim".into(), json!(t.target_dim()));
    m.insert("coeffs".into(), coeffs_json(t));
    Value::Object(m)
}

pub fn read_tensor(root: &Node<'_>) -> Parsed<MultilinearMap> {
    root.only(&[
        "schema_version",
        "kind",
        "ring",
        "arity",
        "slot_dims",
        "target_dim",
        "coeffs",
    ])?;
    let ring = root.get("ring")?.ring()?;
    let arity_node = root.get("arity")?;
    let arity = arity_node.usize()?;
    let dims_node = root.get("slot_dims")?;
    let dims: Vec<usize> = dims_node
        .items()?
        .iter()
        .map(|d| d.usize())
        .collect::<Parsed<_>>()?;
    if dims.len() != arity || !(2..=3).contains(&arity) {
        return Err(arity_node.err("arity must be 2 or 3 and match slot_dims"));
    }
    let target = root.get("target_dim")?.usize()?;
    read_coeffs(&root.get("coeffs")?, ring, &dims, target)
}

// --------------------------------------------------------- structures

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Pair(JordanPair),
    Jts(JordanTripleSystem),
    Lts(LieTripleSystem),
    Algebra(JordanAlgebra),
    Lie(GradedLieAlgebra),
}

impl Structure {
    pub fn ring(&self) -> Ring {
        match self {
            Structure::Pair(p) => p.ring(),
            Structure::Jts(t) => t.ring(),
            Structure::Lts(t) => t.ring(),
            Structure::Algebra(a) => a.ring(),
            Structure::Lie(g) => g.ring(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Structure::Pair(p) => pair_json(p),
            Structure::Jts(t) => {
                let mut m = document("jts", t.ring());
                m.insert("dim".into(), json!(t.dim()));
                m.insert("t".into(), coeffs_json(&t.t));
                Value::Object(m)
            }
            Structure::Lts(t) => {
                let mut m = document("lts", t.ring());
                m.insert("dim".into(), json!(t.dim()));
                m.insert("r".into(), coeffs_json(&t.r));
                Value::Object(m)
            }
            Structure::Algebra(a) => {
                let mut m = document("algebra", a.ring());
                m.insert("dim".into(), json!(a.dim()));
                m.insert("product".into(), coeffs_json(&a.product));
                if let Some(u) = &a.unit {
                    m.insert("unit".into(), vector_json(u));
                }
                Value::Object(m)
            }
            Structure::Lie(g) => lie_json(g),
        }
    }
}

pub fn pair_json(p: &JordanPair) -> Value {
    let (np, nm) = p.dims();
    let mut m = document("pair", p.ring());
    m.insert("dims".into(), json!({"vplus": np, "vminus": nm}));
    m.insert("tplus".into(), coeffs_json(p.t(Sign::Plus)));
    m.insert("tminus".into(), coeffs_json(p.t(Sign::Minus)));
    Value::Object(m)
}

pub fn lie_json(g: &GradedLieAlgebra) -> Value {
    let mut m = document("lie", g.ring());
    m.insert("dim".into(), json!(g.dim()));
    m.insert("bracket".into(), coeffs_json(&g.bracket));
    match &g.grading {
        Grading::Integer(_) => {
            let k = g.k() as i32;
            let blocks: Vec<Vec<usize>> = (-k..=k).map(|j| g.grading.block(j)).collect();
            m.insert("grading".into(), json!(blocks));
        }
        Grading::Parity(_) => {
            m.insert(
                "parity".into(),
                json!([g.grading.block(0), g.grading.block(1)]),
            );
        }
    }
    if let Some(e) = &g.euler {
        m.insert("euler".into(), vector_json(e));
    }
    Value::Object(m)
}

pub fn read_structure(text: &str) -> Parsed<Structure> {
    let value = parse(text)?;
    let root = Node::root(&value);
    let kind_node = root.get("kind")?;
    let kind = header(&root)?;
    let ring = root.get("ring")?.ring()?;
    let dim = || root.get("dim")?.usize();
    let common = ["schema_version", "kind", "ring"];
    let allow = |extra: &[&str]| {
        let keys: Vec<&str> = common.iter().chain(extra).copied().collect();
        root.only(&keys)
    };
    match kind {
        "pair" => {
            allow(&["dims", "tplus", "tminus"])?;
            let dims = root.get("dims")?;
            dims.only(&["vplus", "vminus"])?;
            let np = dims.get("vplus")?.usize()?;
            let nm = dims.get("vminus")?.usize()?;
            let tp = read_coeffs(&root.get("tplus")?, ring, &[np, nm, np], np)?;
            let tm = read_coeffs(&root.get("tminus")?, ring, &[nm, np, nm], nm)?;
            JordanPair::new(tp, tm)
                .map(Structure::Pair)
                .map_err(|e| root.err(format!("{e}")))
        }
        "jts" => {
            allow(&["dim", "t"])?;
            let n = dim()?;
            let t = read_coeffs(&root.get("t")?, ring, &[n, n, n], n)?;
            JordanTripleSystem::new(t)
                .map(Structure::Jts)
                .map_err(|e| root.err(format!("{e}")))
        }
        "lts" => {
            allow(&["dim", "r"])?;
            let n = dim()?;
            let r = read_coeffs(&root.get("r")?, ring, &[n, n, n], n)?;
            LieTripleSystem::new(r)
                .map(Structure::Lts)
                .map_err(|e| root.err(format!("{e}")))
        }
        "algebra" => {
            allow(&["dim", "product", "unit"])?;
            let n = dim()?;
            let p = read_coeffs(&root.get("product")?, ring, &[n, n], n)?;
            let unit = match root.opt("unit") {
                Some(u) => Some(u.vector(ring, Some(n))?),
                None => None,
            };
            JordanAlgebra::new(p, unit)
                .map(Structure::Algebra)
                .map_err(|e| root.err(format!("{e}")))
        }
        "lie" => {
            allow(&["dim", "bracket", "grading", "parity", "euler"])?;
            let n = dim()?;
            let bracket = read_coeffs(&root.get("bracket")?, ring, &[n, n], n)?;
            let grading = read_grading(&root, n)?;
            let euler = match root.opt("euler") {
                Some(e) => Some(e.vector(ring, Some(n))?),
                None => None,
            };
            GradedLieAlgebra::new(bracket, grading, euler)
                .map(Structure::Lie)
                .map_err(|e| root.err(format!("{e}")))
        }
        other => Err(kind_node.err(format!("unknown structure kind `{other}`"))),
    }
}

/// Blocks listed from degree `−k` to `k`, or `parity: [even, odd]`.
fn read_grading(root: &Node<'_>, n: usize) -> Parsed<Grading> {
    let mut seen = vec![None::<i32>; n];
    let mut assign = |node: &Node<'_>, deg: i32| -> Parsed<()> {
        for i in node.items()? {
            let idx = i.usize()?;
            if idx >= n {
                return Err(i.err(format!("basis index {idx} out of range")));
            }
            if seen[idx].replace(deg).is_some() {
                return Err(i.err(format!("basis index {idx} listed twice")));
            }
        }
        Ok(())
    };
    let parity = match (root.opt("grading"), root.opt("parity")) {
        (Some(g), None) => {
            let blocks = g.items()?;
            if blocks.len() % 2 == 0 {
                return Err(g.err("expected 2k+1 blocks, from degree -k to k"));
            }
            let k = (blocks.len() / 2) as i32;
            for (j, b) in blocks.iter().enumerate() {
                assign(b, j as i32 - k)?;
            }
            false
        }
        (None, Some(p)) => {
            let blocks = p.items()?;
            if blocks.len() != 2 {
                return Err(p.err("expected [even, odd] index lists"));
            }
            assign(&blocks[0], 0)?;
            assign(&blocks[1], 1)?;
            true
        }
        _ => return Err(root.err("exactly one of `grading` and `parity` is required")),
    };
    let degrees: Vec<i32> = match seen.iter().position(|d| d.is_none()) {
        Some(i) => return Err(root.err(format!("basis index {i} has no degree"))),
        None => seen.into_iter().map(|d| d.unwrap_or(0)).collect(),
    };
    Ok(match parity {
        true => Grading::Parity(degrees.iter().map(|&d| d == 1).collect()),
        false => Grading::Integer(degrees),
    })
}

// ------------------------------------------------------------- points

pub fn point_json(x: &Point) -> Value {
    json!({"rep": matrix_json(&x.rep())})
}

pub fn dual_json(a: &DualPoint) -> Value {
    json!({"rep": matrix_json(&a.rep())})
}

pub fn read_point(node: &Node<'_>, g: &GrassGeometry) -> Parsed<Point> {
    node.only(&["rep"])?;
    let rep = node.get("rep")?;
    let m = rep.matrix(g.ring, Some(g.a))?;
    if m.rows() != g.w {
        return Err(rep.err(format!("expected a {}x{} representative", g.w, g.a)));
    }
    g.make_point(&m).map_err(|e| rep.err(format!("{e}")))
}

pub fn read_dual(node: &Node<'_>, g: &GrassGeometry) -> Parsed<DualPoint> {
    node.only(&["rep"])?;
    let rep = node.get("rep")?;
    let m = rep.matrix(g.ring, Some(g.w))?;
    if m.rows() != g.a {
        return Err(rep.err(format!("expected a {}x{} representative", g.a, g.w)));
    }
    g.make_dual(&m).map_err(|e| rep.err(format!("{e}")))
}

// -------------------------------------------------------------- flags

pub fn subspace_json(s: &Subspace) -> Value {
    Value::Array(s.vectors().iter().map(|v| vector_json(v)).collect())
}

/// `{"ambient": n, "chain": [[basis rows], …]}`.
pub fn flag_json(ambient: usize, chain: &[Subspace]) -> Value {
    json!({"ambient": ambient, "chain": chain.iter().map(subspace_json).collect::<Vec<_>>()})
}

pub fn read_flag(node: &Node<'_>, ring: Ring) -> Parsed<Vec<Subspace>> {
    let n = node.get("ambient")?.usize()?;
    let mut out = Vec::new();
    for member in node.get("chain")?.items()? {
        let rows: Vec<Vec<Scalar>> = member
            .items()?
            .iter()
            .map(|r| r.vector(ring, Some(n)))
            .collect::<Parsed<_>>()?;
        out.push(Subspace::span(ring, n, &rows));
    }
    Ok(out)
}
