//! JSON interchange for module instances and DOT export for Hasse diagrams.
//!
//! Document shape (single `"format": 1` version field):
//!
//! ```json
//! {
//!   "format": 1,
//!   "scalars": {"kind": "integers", "exponent": 12}
//!          or {"kind": "table", "elements": [..], "add": [[..]],
//!              "mul": [[..]], "zero": 0, "one": 1},
//!   "elements": ["0", "1", ...],
//!   "add": [[..]],
//!   "action": [[..]]
//! }
//! ```
//!
//! Indices are `row = left operand`. The module's zero is derived from the
//! addition table. Loading validates every algebraic law; saving re-emits the
//! same canonical shape so `save(load(d)) == d` for canonical documents.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::module::FiniteModule;
use crate::order::PosetMatrix;
use crate::ring::FiniteRing;
use crate::scalar::ScalarRing;
use crate::table::OpTable;

fn schema_err(path: &str, detail: impl Into<String>) -> Error {
    Error::Schema { path: path.to_string(), detail: detail.into() }
}

fn as_object<'v>(v: &'v Value, path: &str) -> Result<&'v Map<String, Value>> {
    v.as_object().ok_or_else(|| schema_err(path, "expected an object"))
}

fn as_array<'v>(v: &'v Value, path: &str) -> Result<&'v Vec<Value>> {
    v.as_array().ok_or_else(|| schema_err(path, "expected an array"))
}

fn as_index(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| schema_err(path, "expected a non-negative integer"))
}

fn as_str<'v>(v: &'v Value, path: &str) -> Result<&'v str> {
    v.as_str().ok_or_else(|| schema_err(path, "expected a string"))
}

fn get<'v>(obj: &'v Map<String, Value>, key: &str, path: &str) -> Result<&'v Value> {
    obj.get(key).ok_or_else(|| schema_err(path, format!("missing key \"{key}\"")))
}

fn reject_unknown_keys(obj: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<()> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(schema_err(&format!("{path}.{key}"), "unexpected key"));
        }
    }
    Ok(())
}

fn names_from(v: &Value, path: &str) -> Result<Vec<String>> {
    let arr = as_array(v, path)?;
    let mut out = Vec::with_capacity(arr.len());
    for (i, item) in arr.iter().enumerate() {
        out.push(as_str(item, &format!("{path}[{i}]"))?.to_string());
    }
    Ok(out)
}

fn table_from(v: &Value, rows: usize, cols: usize, path: &str) -> Result<OpTable> {
    let outer = as_array(v, path)?;
    if outer.len() != rows {
        return Err(schema_err(path, format!("expected {rows} rows, found {}", outer.len())));
    }
    let mut flat: Vec<u32> = Vec::with_capacity(rows * cols);
    for (i, row) in outer.iter().enumerate() {
        let row_path = format!("{path}[{i}]");
        let inner = as_array(row, &row_path)?;
        if inner.len() != cols {
            return Err(schema_err(&row_path, format!("expected {cols} columns, found {}", inner.len())));
        }
        for (j, cell) in inner.iter().enumerate() {
            let value = as_index(cell, &format!("{row_path}[{j}]"))?;
            flat.push(u32::try_from(value)
                .map_err(|_| schema_err(&format!("{row_path}[{j}]"), "index too large"))?);
        }
    }
    Ok(OpTable::from_fn(rows, cols, |i, j| flat[i * cols + j]))
}

fn scalars_from(v: &Value, path: &str) -> Result<ScalarRing> {
    let obj = as_object(v, path)?;
    let kind = as_str(get(obj, "kind", path)?, &format!("{path}.kind"))?;
    match kind {
        "integers" => {
            reject_unknown_keys(obj, &["kind", "exponent"], path)?;
            let exponent = as_index(get(obj, "exponent", path)?, &format!("{path}.exponent"))?;
            if exponent == 0 {
                return Err(schema_err(&format!("{path}.exponent"), "exponent must be at least 1"));
            }
            Ok(ScalarRing::Integers { exponent })
        }
        "table" => {
            reject_unknown_keys(obj, &["kind", "elements", "add", "mul", "zero", "one"], path)?;
            let elements = names_from(get(obj, "elements", path)?, &format!("{path}.elements"))?;
            let n = elements.len();
            let add = table_from(get(obj, "add", path)?, n, n, &format!("{path}.add"))?;
            let mul = table_from(get(obj, "mul", path)?, n, n, &format!("{path}.mul"))?;
            let zero = as_index(get(obj, "zero", path)?, &format!("{path}.zero"))?;
            let one = as_index(get(obj, "one", path)?, &format!("{path}.one"))?;
            let ring = FiniteRing::new(elements, add, mul, zero, one)?;
            Ok(ScalarRing::Table(Arc::new(ring)))
        }
        other => Err(schema_err(
            &format!("{path}.kind"),
            format!("unknown scalar kind \"{other}\" (expected \"integers\" or \"table\")"),
        )),
    }
}

/// The additive identity implied by an addition table.
fn derive_zero(add: &OpTable, path: &str) -> Result<usize> {
    let n = add.rows();
    (0..n)
        .find(|&e| (0..n).all(|x| add.get(e, x) == x))
        .ok_or_else(|| schema_err(path, "addition table has no identity element"))
}

/// Parse and fully validate an instance document.
pub fn parse_instance(doc: &Value) -> Result<FiniteModule> {
    let obj = as_object(doc, "$")?;
    reject_unknown_keys(obj, &["format", "scalars", "elements", "add", "action"], "$")?;
    let format = as_index(get(obj, "format", "$")?, "$.format")?;
    if format != 1 {
        return Err(schema_err("$.format", format!("unsupported format {format} (expected 1)")));
    }
    let scalars = scalars_from(get(obj, "scalars", "$")?, "$.scalars")?;
    let elements = names_from(get(obj, "elements", "$")?, "$.elements")?;
    let n = elements.len();
    if n == 0 {
        return Err(schema_err("$.elements", "module must have at least one element"));
    }
    let add = table_from(get(obj, "add", "$")?, n, n, "$.add")?;
    let action = table_from(get(obj, "action", "$")?, n, scalars.reps(), "$.action")?;
    let zero = derive_zero(&add, "$.add")?;
    FiniteModule::new(scalars, elements, add, action, zero)
}

/// Parse an instance from JSON text.
pub fn load_instance_str(text: &str) -> Result<FiniteModule> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| schema_err("$", format!("invalid JSON: {e}")))?;
    parse_instance(&doc)
}

fn table_value(t: &OpTable) -> Value {
    Value::Array(
        (0..t.rows())
            .map(|i| Value::Array((0..t.cols()).map(|j| json!(t.get(i, j))).collect()))
            .collect(),
    )
}

fn scalars_value(s: &ScalarRing) -> Value {
    match s {
        ScalarRing::Integers { exponent } => json!({ "kind": "integers", "exponent": exponent }),
        ScalarRing::Table(ring) => json!({
            "kind": "table",
            "elements": ring.element_names(),
            "add": table_value(ring.add_table()),
            "mul": table_value(ring.mul_table()),
            "zero": ring.zero(),
            "one": ring.one(),
        }),
    }
}

/// Serialize an instance to its canonical document.
pub fn save_instance(m: &FiniteModule) -> Value {
    json!({
        "format": 1,
        "scalars": scalars_value(m.scalars()),
        "elements": m.element_names(),
        "add": table_value(m.add_table()),
        "action": table_value(m.action_table()),
    })
}

/// Serialize an instance to pretty JSON text.
pub fn save_instance_string(m: &FiniteModule) -> String {
    serde_json::to_string_pretty(&save_instance(m)).expect("instance documents serialize")
}

/// Quote a DOT identifier, escaping embedded quotes and backslashes.
fn dot_quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Render a partial order as a DOT digraph: one node per element (maximal
/// elements doubly circled), one edge per Hasse cover, drawn bottom-to-top.
pub fn export_dot(poset: &PosetMatrix, names: &[String]) -> Result<String> {
    if !poset.axioms.is_partial_order() {
        return Err(Error::NotAPartialOrder(format!(
            "{} does not satisfy the partial-order axioms on this instance",
            poset.relation.name()
        )));
    }
    let covers = poset.hasse.as_ref().expect("partial orders carry Hasse covers");
    let maximal = poset.maximal.as_ref().expect("partial orders carry maximal elements");
    let mut max_flags = vec![false; poset.size()];
    for &m in maximal {
        max_flags[m as usize] = true;
    }

    let mut out = String::new();
    out.push_str(&format!("digraph {} {{\n", dot_quote(poset.relation.name())));
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=ellipse];\n");
    for (i, name) in names.iter().enumerate().take(poset.size()) {
        let node = dot_quote(name);
        if max_flags[i] {
            out.push_str(&format!("  {node} [peripheries=2];\n"));
        } else {
            out.push_str(&format!("  {node};\n"));
        }
    }
    for &(lo, hi) in covers {
        out.push_str(&format!(
            "  {} -> {};\n",
            dot_quote(&names[lo as usize]),
            dot_quote(&names[hi as usize])
        ));
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_builtin;
    use crate::order::{relation_matrix, Rel};

    fn poset_of(name: &str, rel: Rel) -> (PosetMatrix, Vec<String>) {
        let ctx = build_builtin(name).unwrap();
        let homs = ctx.homs().unwrap();
        let dual = ctx.dual().unwrap();
        let p = relation_matrix(ctx.module(), &homs, &dual, rel).unwrap();
        (p, ctx.module().element_names().to_vec())
    }

    #[test]
    fn round_trip_is_canonical() {
        for name in ["zmod12", "ex3.7-z2", "z6"] {
            let ctx = build_builtin(name).unwrap();
            let doc = save_instance(ctx.module());
            let reloaded = parse_instance(&doc).unwrap();
            assert_eq!(save_instance(&reloaded), doc, "round trip for {name}");
            assert_eq!(reloaded.element_names(), ctx.module().element_names());
        }
    }

    #[test]
    fn save_zmod12_uses_integers_kind() {
        let ctx = build_builtin("zmod12").unwrap();
        let doc = save_instance(ctx.module());
        assert_eq!(doc["scalars"]["kind"], "integers");
        assert_eq!(doc["scalars"]["exponent"], 12);
        assert_eq!(doc["format"], 1);
    }

    #[test]
    fn schema_errors_carry_json_paths() {
        let bad = json!({
            "format": 1,
            "scalars": {"kind": "integers", "exponent": 2},
            "elements": ["0", "1"],
            "add": [[0, 1], [1, 0]],
            "action": [[0, 0], [0, "x"]],
        });
        match parse_instance(&bad) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "$.action[1][1]"),
            other => panic!("expected schema error, got {other:?}"),
        }

        let unknown_kind = json!({
            "format": 1,
            "scalars": {"kind": "weird"},
            "elements": ["0"],
            "add": [[0]],
            "action": [[0]],
        });
        match parse_instance(&unknown_kind) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "$.scalars.kind"),
            other => panic!("expected schema error, got {other:?}"),
        }

        let extra = json!({
            "format": 1,
            "scalars": {"kind": "integers", "exponent": 2},
            "elements": ["0", "1"],
            "add": [[0, 1], [1, 0]],
            "action": [[0, 0], [0, 1]],
            "color": "blue",
        });
        assert!(matches!(parse_instance(&extra), Err(Error::Schema { .. })));
    }

    #[test]
    fn invalid_algebra_is_rejected() {
        // Non-abelian "addition" (a left-zero table) has no identity.
        let bad = json!({
            "format": 1,
            "scalars": {"kind": "integers", "exponent": 2},
            "elements": ["0", "1"],
            "add": [[0, 0], [1, 1]],
            "action": [[0, 0], [0, 1]],
        });
        assert!(parse_instance(&bad).is_err());

        // Valid shapes but wrong action: 1·1 should be 1 for exponent 2.
        let bad_action = json!({
            "format": 1,
            "scalars": {"kind": "integers", "exponent": 2},
            "elements": ["0", "1"],
            "add": [[0, 1], [1, 0]],
            "action": [[0, 0], [0, 0]],
        });
        assert!(matches!(parse_instance(&bad_action), Err(Error::AxiomViolation { .. })));
    }

    #[test]
    fn dot_zmod5_is_a_star_from_zero() {
        let ctx = crate::context::Ctx::new(
            "z5",
            "Z_5 over the integers",
            FiniteModule::zmodule(5).unwrap(),
            None,
        );
        let homs = ctx.homs().unwrap();
        let dual = ctx.dual().unwrap();
        let p = relation_matrix(ctx.module(), &homs, &dual, Rel::Mitsch).unwrap();
        let dot = export_dot(&p, ctx.module().element_names()).unwrap();
        // Four covers out of 0, every nonzero element maximal.
        for m in 1..5 {
            assert!(dot.contains(&format!("\"0\" -> \"{m}\";")));
            assert!(dot.contains(&format!("\"{m}\" [peripheries=2];")));
        }
        assert_eq!(dot.matches("->").count(), 4);
    }

    #[test]
    fn dot_zmod12_contains_quoted_cover() {
        let (p, names) = poset_of("zmod12", Rel::Mitsch);
        let dot = export_dot(&p, &names).unwrap();
        assert!(dot.contains("\"6\" -> \"2\";"));
        assert!(dot.contains("rankdir=BT"));
        // Deterministic output.
        let again = export_dot(&p, &names).unwrap();
        assert_eq!(dot, again);
    }

    #[test]
    fn dot_refuses_preorders() {
        let (p, names) = poset_of("zmod12", Rel::Space);
        assert!(matches!(export_dot(&p, &names), Err(Error::NotAPartialOrder(_))));
    }
}
