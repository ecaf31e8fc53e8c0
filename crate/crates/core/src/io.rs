//! JSON file formats.
//!
//! Module files: `{"ring": "Z" | {"Zmod": n}, "generators": g,
//! "relations": [[..], ..]}` with relation rows of length `g`.
//! Morphism files reference two module files (by path or inline) and give
//! `"matrix"` as rows indexed by target generators. Sequence files list the
//! modules from left end to right end plus one matrix per arrow, and are
//! validated on load.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::morphism::Morphism;
use crate::presentation::Presentation;
use crate::ring::RingSpec;
use crate::sequence::NExactSequence;
use num_bigint::BigInt;
use serde_json::{Map, Number, Value};
use std::path::Path;
use std::str::FromStr;

fn bad(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

fn int_from_value(v: &Value) -> Result<BigInt> {
    let Value::Number(n) = v else {
        return Err(bad(format!("expected an integer, got {v}")));
    };
    let s = n.to_string();
    if s.contains(['.', 'e', 'E']) {
        return Err(bad(format!("expected an integer, got {s}")));
    }
    BigInt::from_str(&s).map_err(|_| bad(format!("invalid integer {s}")))
}

fn int_to_value(b: &BigInt) -> Value {
    Value::Number(Number::from_str(&b.to_string()).expect("integer strings parse as numbers"))
}

fn grid_from_value(v: &Value, what: &str) -> Result<Vec<Vec<BigInt>>> {
    let Value::Array(rows) = v else {
        return Err(bad(format!("{what} must be an array of rows")));
    };
    rows.iter()
        .map(|row| {
            let Value::Array(cells) = row else {
                return Err(bad(format!("{what} rows must be arrays")));
            };
            cells.iter().map(int_from_value).collect()
        })
        .collect()
}

fn grid_to_value(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| int_to_value(m.get(i, j))).collect()))
            .collect(),
    )
}

fn ring_from_value(v: &Value) -> Result<RingSpec> {
    match v {
        Value::String(s) if s == "Z" => Ok(RingSpec::Integers),
        Value::Object(o) => {
            let n = o
                .get("Zmod")
                .ok_or_else(|| bad("ring object must have a \"Zmod\" field"))?;
            RingSpec::integers_mod(int_from_value(n)?)
        }
        other => Err(bad(format!(
            "ring must be \"Z\" or {{\"Zmod\": n}}, got {other}"
        ))),
    }
}

fn ring_to_value(r: &RingSpec) -> Value {
    match r {
        RingSpec::Integers => Value::String("Z".into()),
        RingSpec::IntegersMod(n) => {
            let mut o = Map::new();
            o.insert("Zmod".into(), int_to_value(n));
            Value::Object(o)
        }
    }
}

/// Parse a module from a JSON value.
pub fn module_from_json(v: &Value) -> Result<Presentation> {
    let Value::Object(o) = v else {
        return Err(bad("module file must be a JSON object"));
    };
    let ring = ring_from_value(o.get("ring").ok_or_else(|| bad("missing \"ring\""))?)?;
    let generators = int_from_value(
        o.get("generators")
            .ok_or_else(|| bad("missing \"generators\""))?,
    )?;
    let generators: usize = generators
        .try_into()
        .map_err(|_| bad("\"generators\" must be a non-negative machine integer"))?;
    let rows = grid_from_value(
        o.get("relations")
            .ok_or_else(|| bad("missing \"relations\""))?,
        "relations",
    )?;
    if rows.iter().any(|r| r.len() != generators) {
        return Err(bad(format!(
            "every relation row must have length {generators}"
        )));
    }
    let relations = if rows.is_empty() {
        Matrix::zero(ring.clone(), 0, generators)
    } else {
        Matrix::from_rows(ring.clone(), rows)
    };
    Presentation::new(ring, generators, relations)
}

pub fn module_to_json(p: &Presentation) -> Value {
    let mut o = Map::new();
    o.insert("ring".into(), ring_to_value(p.ring()));
    o.insert(
        "generators".into(),
        Value::Number(Number::from(p.generators() as u64)),
    );
    o.insert("relations".into(), grid_to_value(p.relations()));
    Value::Object(o)
}

/// A module reference inside a composite file: a path (relative to the
/// referencing file) or an inline module object.
fn module_from_ref(v: &Value, base: Option<&Path>) -> Result<Presentation> {
    match v {
        Value::String(path) => {
            let resolved = match base {
                Some(dir) => dir.join(path),
                None => Path::new(path).to_path_buf(),
            };
            load_module(&resolved)
        }
        other => module_from_json(other),
    }
}

pub fn load_module(path: &Path) -> Result<Presentation> {
    let text = std::fs::read_to_string(path)?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| bad(format!("{}: {e}", path.display())))?;
    module_from_json(&v)
}

pub fn save_module(path: &Path, p: &Presentation) -> Result<()> {
    std::fs::write(path, format!("{:#}\n", module_to_json(p)))?;
    Ok(())
}

/// Parse a morphism value (`source`, `target`, `matrix`).
pub fn morphism_from_json(v: &Value, base: Option<&Path>) -> Result<Morphism> {
    let Value::Object(o) = v else {
        return Err(bad("morphism file must be a JSON object"));
    };
    let source = module_from_ref(
        o.get("source").ok_or_else(|| bad("missing \"source\""))?,
        base,
    )?;
    let target = module_from_ref(
        o.get("target").ok_or_else(|| bad("missing \"target\""))?,
        base,
    )?;
    let rows = grid_from_value(
        o.get("matrix").ok_or_else(|| bad("missing \"matrix\""))?,
        "matrix",
    )?;
    let matrix = matrix_from_rows(
        source.ring().clone(),
        rows,
        target.generators(),
        source.generators(),
    )?;
    Morphism::new(source, target, matrix)
}

pub fn morphism_to_json(f: &Morphism) -> Value {
    let mut o = Map::new();
    o.insert("source".into(), module_to_json(f.source()));
    o.insert("target".into(), module_to_json(f.target()));
    o.insert("matrix".into(), grid_to_value(f.matrix()));
    Value::Object(o)
}

pub fn load_morphism(path: &Path) -> Result<Morphism> {
    let text = std::fs::read_to_string(path)?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| bad(format!("{}: {e}", path.display())))?;
    morphism_from_json(&v, path.parent())
}

fn matrix_from_rows(
    ring: RingSpec,
    rows: Vec<Vec<BigInt>>,
    want_rows: usize,
    want_cols: usize,
) -> Result<Matrix> {
    if rows.len() != want_rows || rows.iter().any(|r| r.len() != want_cols) {
        return Err(bad(format!(
            "matrix must be {want_rows}x{want_cols} (target generators x source generators)"
        )));
    }
    if rows.is_empty() || want_cols == 0 {
        return Ok(Matrix::zero(ring, want_rows, want_cols));
    }
    Ok(Matrix::from_rows(ring, rows))
}

/// Parse and validate a sequence file: `{"modules": [Y, E1, ..., X],
/// "arrows": [m0, ..., mn]}`.
pub fn sequence_from_json(v: &Value, base: Option<&Path>) -> Result<NExactSequence> {
    let Value::Object(o) = v else {
        return Err(bad("sequence file must be a JSON object"));
    };
    let Some(Value::Array(mods)) = o.get("modules") else {
        return Err(bad("missing \"modules\" array"));
    };
    let Some(Value::Array(arrows)) = o.get("arrows") else {
        return Err(bad("missing \"arrows\" array"));
    };
    if mods.len() < 3 {
        return Err(bad("a sequence needs at least three modules"));
    }
    if arrows.len() != mods.len() - 1 {
        return Err(bad(format!(
            "expected {} arrows for {} modules",
            mods.len() - 1,
            mods.len()
        )));
    }
    let modules: Vec<Presentation> = mods
        .iter()
        .map(|m| module_from_ref(m, base))
        .collect::<Result<_>>()?;
    let mut maps = Vec::with_capacity(arrows.len());
    for (k, a) in arrows.iter().enumerate() {
        let rows = grid_from_value(a, "arrow")?;
        let src = &modules[k];
        let tgt = &modules[k + 1];
        src.ring().same_ring(tgt.ring())?;
        let matrix =
            matrix_from_rows(src.ring().clone(), rows, tgt.generators(), src.generators())?;
        maps.push(Morphism::new(src.clone(), tgt.clone(), matrix)?);
    }
    NExactSequence::verify(maps)
}

pub fn sequence_to_json(s: &NExactSequence) -> Value {
    let mut mods = vec![module_to_json(s.left_end())];
    mods.extend(s.middles().iter().map(module_to_json));
    mods.push(module_to_json(s.right_end()));
    let arrows: Vec<Value> = s
        .arrows()
        .iter()
        .map(|f| grid_to_value(f.matrix()))
        .collect();
    let mut o = Map::new();
    o.insert("modules".into(), Value::Array(mods));
    o.insert("arrows".into(), Value::Array(arrows));
    Value::Object(o)
}

pub fn load_sequence(path: &Path) -> Result<NExactSequence> {
    let text = std::fs::read_to_string(path)?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| bad(format!("{}: {e}", path.display())))?;
    sequence_from_json(&v, path.parent())
}

pub fn save_sequence(path: &Path, s: &NExactSequence) -> Result<()> {
    std::fs::write(path, format!("{:#}\n", sequence_to_json(s)))?;
    Ok(())
}
