//! Canonical JSON forms for the domain types and reports.
//!
//! Writers emit documents with keys in a fixed insertion order and numbers
//! rendered as decimal strings ("n" or "n/d" for rationals), so repeated
//! runs are byte-identical. Readers are lenient about `schema_version` but
//! strict about structure; errors carry a JSON-pointer-style path to the
//! offending field.

use std::fmt;
use std::str::FromStr;

use plethys_core::biring::TensorIvPoly;
use plethys_core::ivpoly::IvPoly;
use plethys_core::lambda::{
    BinCompareReport, BinFixedReport, LambdaTrunc,
};
use plethys_core::lattice::Lattice;
use plethys_core::modint::ModInt;
use plethys_core::multipoly::MultiRatPoly;
use plethys_core::plethory::{
    ClosureStatus, DenScale, FinOrder, WLowerOutcome, WpcVerdict,
};
use plethys_core::ratpoly::RatPoly;
use plethys_core::report::AxiomReport;
use plethys_core::witt::{CensusReport, EvalHom, PadicTrunc, TorsionReport};
use plethys_core::biring::ThetaReport;
use plethys_core::{BigInt, Rat};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

/// Sanity bound on degrees and exponents accepted from documents; anything
/// larger is a typo or an attack, not a workload.
pub const MAX_DEGREE: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonError {
    pub pointer: String,
    pub message: String,
}

impl JsonError {
    fn new(pointer: &str, message: impl Into<String>) -> Self {
        JsonError {
            pointer: pointer.to_string(),
            message: message.into(),
        }
    }
}

impl fmt::Display for JsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: {}", self.pointer, self.message)
    }
}

impl std::error::Error for JsonError {}

// ---- scalar helpers ----

pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}

pub fn rat_from_str(s: &str, pointer: &str) -> Result<Rat, JsonError> {
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s.trim())
                .map_err(|_| JsonError::new(pointer, format!("not an integer: {s:?}")))?;
            Ok(Rat::from(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim())
                .map_err(|_| JsonError::new(pointer, format!("bad numerator: {num:?}")))?;
            let d = BigInt::from_str(den.trim())
                .map_err(|_| JsonError::new(pointer, format!("bad denominator: {den:?}")))?;
            if d == BigInt::from(0) {
                return Err(JsonError::new(pointer, "zero denominator"));
            }
            Ok(Rat::new(n, d))
        }
    }
}

fn int_from_value(v: &Value, pointer: &str) -> Result<BigInt, JsonError> {
    match v {
        Value::String(s) => BigInt::from_str(s.trim())
            .map_err(|_| JsonError::new(pointer, format!("not an integer: {s:?}"))),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(JsonError::new(pointer, "not an integer number"))
            }
        }
        _ => Err(JsonError::new(pointer, "expected an integer string")),
    }
}

fn rat_from_value(v: &Value, pointer: &str) -> Result<Rat, JsonError> {
    match v {
        Value::String(s) => rat_from_str(s, pointer),
        Value::Number(_) => int_from_value(v, pointer).map(Rat::from),
        _ => Err(JsonError::new(pointer, "expected a fraction string")),
    }
}

fn as_object<'a>(v: &'a Value, pointer: &str) -> Result<&'a Map<String, Value>, JsonError> {
    v.as_object()
        .ok_or_else(|| JsonError::new(pointer, "expected an object"))
}

fn as_array<'a>(v: &'a Value, pointer: &str) -> Result<&'a Vec<Value>, JsonError> {
    v.as_array()
        .ok_or_else(|| JsonError::new(pointer, "expected an array"))
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str, pointer: &str) -> Result<&'a Value, JsonError> {
    obj.get(name)
        .ok_or_else(|| JsonError::new(&format!("{pointer}/{name}"), "missing field"))
}

fn usize_field(obj: &Map<String, Value>, name: &str, pointer: &str) -> Result<usize, JsonError> {
    let p = format!("{pointer}/{name}");
    field(obj, name, pointer)?
        .as_u64()
        .map(|v| v as usize)
        .ok_or_else(|| JsonError::new(&p, "expected a non-negative integer"))
}

fn rat_vec_to_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(rat_to_string(x))).collect())
}

fn rat_vec_from_json(v: &Value, pointer: &str) -> Result<Vec<Rat>, JsonError> {
    as_array(v, pointer)?
        .iter()
        .enumerate()
        .map(|(i, x)| rat_from_value(x, &format!("{pointer}/{i}")))
        .collect()
}

// ---- domain types ----

pub fn ratpoly_to_json(f: &RatPoly) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "coeffs": f.coeffs().iter().map(rat_to_string).collect::<Vec<_>>(),
    })
}

pub fn ratpoly_from_json(v: &Value) -> Result<RatPoly, JsonError> {
    let obj = as_object(v, "")?;
    let coeffs = rat_vec_from_json(field(obj, "coeffs", "")?, "/coeffs")?;
    Ok(RatPoly::from_coeffs(coeffs))
}

pub fn multipoly_to_json(f: &MultiRatPoly) -> Value {
    let terms: Vec<Value> = f
        .terms_graded_lex()
        .into_iter()
        .map(|(exp, c)| {
            json!({
                "exp": exp,
                "c": rat_to_string(c),
            })
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "arity": f.arity(),
        "terms": terms,
    })
}

pub fn multipoly_from_json(v: &Value) -> Result<MultiRatPoly, JsonError> {
    let obj = as_object(v, "")?;
    let arity = usize_field(obj, "arity", "")?;
    if arity == 0 {
        return Err(JsonError::new("/arity", "arity must be positive"));
    }
    let mut out = MultiRatPoly::zero(arity);
    for (i, term) in as_array(field(obj, "terms", "")?, "/terms")?.iter().enumerate() {
        let pointer = format!("/terms/{i}");
        let tobj = as_object(term, &pointer)?;
        let exp_val = field(tobj, "exp", &pointer)?;
        let exp: Vec<usize> = as_array(exp_val, &format!("{pointer}/exp"))?
            .iter()
            .enumerate()
            .map(|(j, e)| {
                e.as_u64()
                    .map(|x| x as usize)
                    .filter(|x| *x <= MAX_DEGREE)
                    .ok_or_else(|| JsonError::new(&format!("{pointer}/exp/{j}"), "bad exponent"))
            })
            .collect::<Result<_, _>>()?;
        if exp.len() != arity {
            return Err(JsonError::new(
                &format!("{pointer}/exp"),
                format!("exponent tuple length {} != arity {}", exp.len(), arity),
            ));
        }
        let c = rat_from_value(field(tobj, "c", &pointer)?, &format!("{pointer}/c"))?;
        out.add_term(exp, c);
    }
    Ok(out)
}

pub fn lattice_to_json(l: &Lattice) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "dim": l.dim(),
        "basis": l.basis().iter().map(|row| rat_vec_to_json(row)).collect::<Vec<_>>(),
    })
}

pub fn lattice_from_json(v: &Value) -> Result<Lattice, JsonError> {
    let obj = as_object(v, "")?;
    let dim = usize_field(obj, "dim", "")?;
    let rows: Vec<Vec<Rat>> = as_array(field(obj, "basis", "")?, "/basis")?
        .iter()
        .enumerate()
        .map(|(i, row)| rat_vec_from_json(row, &format!("/basis/{i}")))
        .collect::<Result<_, _>>()?;
    Lattice::from_generators(dim, &rows)
        .map_err(|e| JsonError::new("/basis", e.to_string()))
}

pub fn ivpoly_to_json(f: &IvPoly) -> Value {
    let mut coeffs = Map::new();
    for (n, c) in f.coeffs() {
        coeffs.insert(n.to_string(), Value::String(c.to_string()));
    }
    json!({
        "schema_version": SCHEMA_VERSION,
        "basis": "binomial",
        "coeffs": Value::Object(coeffs),
    })
}

pub fn ivpoly_from_json(v: &Value) -> Result<IvPoly, JsonError> {
    let obj = as_object(v, "")?;
    if let Some(basis) = obj.get("basis") {
        if basis.as_str() != Some("binomial") {
            return Err(JsonError::new("/basis", "expected \"binomial\""));
        }
    }
    let coeffs = as_object(field(obj, "coeffs", "")?, "/coeffs")?;
    let mut pairs = Vec::new();
    for (key, val) in coeffs {
        let pointer = format!("/coeffs/{key}");
        let n: usize = key
            .parse()
            .map_err(|_| JsonError::new(&pointer, "degree key must be a non-negative integer"))?;
        if n > MAX_DEGREE {
            return Err(JsonError::new(&pointer, format!("degree {n} exceeds {MAX_DEGREE}")));
        }
        pairs.push((n, int_from_value(val, &pointer)?));
    }
    Ok(IvPoly::from_coeffs(pairs))
}

pub fn tensor_to_json(t: &TensorIvPoly) -> Value {
    // lexicographic tuple order, directly from the canonical map
    let coeffs: Vec<Value> = t
        .coeffs()
        .iter()
        .map(|(deg, c)| json!({"deg": deg, "c": c.to_string()}))
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "arity": t.arity(),
        "coeffs": coeffs,
    })
}

pub fn tensor_from_json(v: &Value) -> Result<TensorIvPoly, JsonError> {
    let obj = as_object(v, "")?;
    let arity = usize_field(obj, "arity", "")?;
    let mut pairs = Vec::new();
    for (i, entry) in as_array(field(obj, "coeffs", "")?, "/coeffs")?.iter().enumerate() {
        let pointer = format!("/coeffs/{i}");
        let eobj = as_object(entry, &pointer)?;
        let deg: Vec<usize> = as_array(field(eobj, "deg", &pointer)?, &format!("{pointer}/deg"))?
            .iter()
            .enumerate()
            .map(|(j, d)| {
                d.as_u64()
                    .map(|x| x as usize)
                    .filter(|x| *x <= MAX_DEGREE)
                    .ok_or_else(|| JsonError::new(&format!("{pointer}/deg/{j}"), "bad degree"))
            })
            .collect::<Result<_, _>>()?;
        let c = int_from_value(field(eobj, "c", &pointer)?, &format!("{pointer}/c"))?;
        pairs.push((deg, c));
    }
    TensorIvPoly::from_coeffs(arity, pairs).map_err(|e| JsonError::new("/coeffs", e.to_string()))
}

pub fn modint_to_json(m: &ModInt) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "modulus": m.modulus().to_string(),
        "value": m.value().to_string(),
    })
}

pub fn fin_order_to_json(a: &FinOrder) -> Value {
    let table: Vec<Value> = a
        .table()
        .iter()
        .map(|row| Value::Array(row.iter().map(|e| rat_vec_to_json(e)).collect()))
        .collect();
    let den_scale = match a.den_scale() {
        None => Value::Null,
        Some(ds) => json!({
            "base": ds.base.to_string(),
            "max_power": ds.max_power,
        }),
    };
    json!({
        "schema_version": SCHEMA_VERSION,
        "rank": a.rank(),
        "mult_table": table,
        "lattice": lattice_to_json(a.lattice()),
        "generators": a.generators().iter().map(|g| rat_vec_to_json(g)).collect::<Vec<_>>(),
        "den_scale": den_scale,
    })
}

pub fn fin_order_from_json(v: &Value) -> Result<FinOrder, JsonError> {
    let obj = as_object(v, "")?;
    let rank = usize_field(obj, "rank", "")?;
    let table_val = as_array(field(obj, "mult_table", "")?, "/mult_table")?;
    if table_val.len() != rank {
        return Err(JsonError::new("/mult_table", "table size must equal rank"));
    }
    let mut table = Vec::with_capacity(rank);
    for (i, row) in table_val.iter().enumerate() {
        let prow = format!("/mult_table/{i}");
        let row = as_array(row, &prow)?;
        let mut out_row = Vec::with_capacity(rank);
        for (j, entry) in row.iter().enumerate() {
            out_row.push(rat_vec_from_json(entry, &format!("{prow}/{j}"))?);
        }
        table.push(out_row);
    }
    let lattice = lattice_from_json(field(obj, "lattice", "")?)
        .map_err(|e| JsonError::new(&format!("/lattice{}", e.pointer), e.message))?;
    let generators: Vec<Vec<Rat>> = as_array(field(obj, "generators", "")?, "/generators")?
        .iter()
        .enumerate()
        .map(|(i, g)| rat_vec_from_json(g, &format!("/generators/{i}")))
        .collect::<Result<_, _>>()?;
    let den_scale = match obj.get("den_scale") {
        None | Some(Value::Null) => None,
        Some(ds) => {
            let dobj = as_object(ds, "/den_scale")?;
            let base = int_from_value(field(dobj, "base", "/den_scale")?, "/den_scale/base")?;
            let max_power = field(dobj, "max_power", "/den_scale")?
                .as_u64()
                .ok_or_else(|| JsonError::new("/den_scale/max_power", "expected an integer"))?
                as u32;
            Some(DenScale { base, max_power })
        }
    };
    FinOrder::new(table, lattice, generators, den_scale)
        .map_err(|e| JsonError::new("", format!("invalid order: {e}")))
}

pub fn eval_hom_to_json(h: &EvalHom) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "p": h.prime(),
        "k": h.target_exp(),
        "d": h.degree_cap(),
        "alpha": {
            "precision": h.alpha().precision(),
            "residue": h.alpha().residue().to_string(),
        },
    })
}

pub fn eval_hom_from_json(v: &Value) -> Result<EvalHom, JsonError> {
    let obj = as_object(v, "")?;
    let p = field(obj, "p", "")?
        .as_u64()
        .ok_or_else(|| JsonError::new("/p", "expected a prime number"))?;
    let k = field(obj, "k", "")?
        .as_u64()
        .ok_or_else(|| JsonError::new("/k", "expected an exponent"))? as u32;
    let d = field(obj, "d", "")?
        .as_u64()
        .ok_or_else(|| JsonError::new("/d", "expected a degree"))? as u32;
    let alpha = as_object(field(obj, "alpha", "")?, "/alpha")?;
    let precision = field(alpha, "precision", "/alpha")?
        .as_u64()
        .ok_or_else(|| JsonError::new("/alpha/precision", "expected an integer"))?
        as u32;
    let residue = int_from_value(field(alpha, "residue", "/alpha")?, "/alpha/residue")?;
    let trunc = PadicTrunc::new(p, precision, residue)
        .map_err(|e| JsonError::new("/alpha", e.to_string()))?;
    EvalHom::new(trunc, k, d).map_err(|e| JsonError::new("", e.to_string()))
}

pub fn lambda_to_json(x: &LambdaTrunc) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "m": serde_json::Number::from_str(&x.modulus().to_string())
            .map(Value::Number)
            .unwrap_or_else(|_| Value::String(x.modulus().to_string())),
        "N": x.len(),
        "coeffs": x.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

pub fn lambda_from_json(v: &Value) -> Result<LambdaTrunc, JsonError> {
    let obj = as_object(v, "")?;
    let m = int_from_value(field(obj, "m", "")?, "/m")?;
    let n = usize_field(obj, "N", "")?;
    let coeffs: Vec<BigInt> = as_array(field(obj, "coeffs", "")?, "/coeffs")?
        .iter()
        .enumerate()
        .map(|(i, c)| int_from_value(c, &format!("/coeffs/{i}")))
        .collect::<Result<_, _>>()?;
    if coeffs.len() != n {
        return Err(JsonError::new("/coeffs", "length must equal N"));
    }
    LambdaTrunc::new(m, coeffs).map_err(|e| JsonError::new("", e.to_string()))
}

// ---- reports ----

pub fn wpc_verdict_to_json(v: &WpcVerdict, bound: usize) -> Value {
    match v {
        WpcVerdict::YesUpTo(n) => json!({
            "schema_version": SCHEMA_VERSION,
            "verdict": format!("yes-up-to-{n}"),
            "bound": n,
            "witness": Value::Null,
        }),
        WpcVerdict::No { generator, n, value } => json!({
            "schema_version": SCHEMA_VERSION,
            "verdict": "no",
            "bound": bound,
            "witness": {
                "generator": rat_vec_to_json(generator),
                "n": n,
                "value": rat_vec_to_json(value),
            },
        }),
        WpcVerdict::DenominatorCapExceeded { generator, n, value, needed } => json!({
            "schema_version": SCHEMA_VERSION,
            "verdict": "denominator-cap-exceeded",
            "bound": bound,
            "witness": {
                "generator": rat_vec_to_json(generator),
                "n": n,
                "value": rat_vec_to_json(value),
                "needed_power": needed,
            },
        }),
    }
}

pub fn w_lower_to_json(out: &WLowerOutcome, bound: usize, max_iters: usize) -> Value {
    let passes: Vec<Value> = out
        .passes
        .iter()
        .map(|p| {
            json!({
                "binomial_added": p.binomial_added.iter().map(|v| rat_vec_to_json(v)).collect::<Vec<_>>(),
                "product_added": p.product_added.iter().map(|v| rat_vec_to_json(v)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "status": match out.status {
            ClosureStatus::Stabilized => "stabilized",
            ClosureStatus::NotStabilized => "not-stabilized",
        },
        "bound": bound,
        "max_iters": max_iters,
        "order": fin_order_to_json(&out.order),
        "passes": passes,
        "denominators_seen": out
            .denominators_seen()
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>(),
    })
}

pub fn axiom_report_to_json(r: &AxiomReport) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "verdict": if r.pass() { "pass" } else { "fail" },
        "degree": r.degree,
        "checks": r
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "pass": c.pass}))
            .collect::<Vec<_>>(),
    })
}

pub fn theta_report_to_json(r: &ThetaReport) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "verdict": if r.pass() { "pass" } else { "fail" },
        "arity": r.arity,
        "degree": r.degree,
        "members_checked": r.members_checked,
        "doubled_grid_points": r.doubled_grid_points,
        "counterexample": r.counterexample.clone().map(Value::String).unwrap_or(Value::Null),
    })
}

pub fn census_to_json(r: &CensusReport) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "verdict": if r.pass() { "pass" } else { "fail" },
        "p": r.p,
        "k": r.k,
        "d": r.d,
        "base_range": r.base_range.to_string(),
        "count": r.count,
        "doubled_count": r.doubled_count,
        "stable_under_doubling": r.stable(),
        "min_precision": r.min_precision,
        "add_well_defined": r.add_well_defined,
        "mul_well_defined": r.mul_well_defined,
    })
}

pub fn torsion_to_json(r: &TorsionReport) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "verdict": if r.pass() { "pass" } else { "fail" },
        "p": r.p,
        "binomial_form": r.binomial_form.as_ref().map(ivpoly_to_json).unwrap_or(Value::Null),
        "cross_term_integral": r.cross_term_integral,
        "cross_term_constant_zero": r.cross_term_constant_zero,
        "scaling_identity": r.scaling_identity,
        "action_kills_zero": r.action_kills_zero,
    })
}

pub fn bin_fixed_to_json(r: &BinFixedReport) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "m": r.modulus,
        "N": r.len,
        "fixed_count": r.fixed_count(),
        "embedded_count": r.embedded_count(),
        "embedded_subset_of_fixed": r.embedded_subset_of_fixed,
        "sweep_range": r.sweep_range.to_string(),
        "fixed": r.fixed.iter().map(lambda_to_json).collect::<Vec<_>>(),
        "embedded": r.embedded.iter().map(lambda_to_json).collect::<Vec<_>>(),
    })
}

pub fn bin_compare_to_json(r: &BinCompareReport) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "verdict": if r.pass() { "pass" } else { "fail" },
        "p": r.p,
        "N": r.len,
        "embedded_count": r.embedded_count,
        "census_count": r.census_count,
        "indexing_consistent": r.indexing_consistent,
        "additive_ok": r.additive_ok,
        "multiplicative_ok": r.multiplicative_ok,
        "identities_ok": r.identities_ok,
    })
}

/// Serializes a document as a single line of minified JSON plus newline;
/// this is the byte-stable CLI output form.
pub fn to_output_string(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON serialization cannot fail");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use plethys_core::rng::SplitMix64;

    #[test]
    fn golden_ivpoly_format() {
        let f = IvPoly::from_coeffs([(0usize, BigInt::from(-3)), (2, BigInt::from(1)), (10, BigInt::from(7))]);
        let s = to_output_string(&ivpoly_to_json(&f));
        assert_eq!(
            s,
            "{\"schema_version\":1,\"basis\":\"binomial\",\"coeffs\":{\"0\":\"-3\",\"2\":\"1\",\"10\":\"7\"}}\n"
        );
        assert_eq!(ivpoly_from_json(&serde_json::from_str(&s).unwrap()).unwrap(), f);
    }

    #[test]
    fn golden_tensor_format() {
        let t = plethys_core::biring::coadd(&IvPoly::binomial(2));
        let s = to_output_string(&tensor_to_json(&t));
        assert_eq!(
            s,
            "{\"schema_version\":1,\"arity\":2,\"coeffs\":[{\"deg\":[0,2],\"c\":\"1\"},{\"deg\":[1,1],\"c\":\"1\"},{\"deg\":[2,0],\"c\":\"1\"}]}\n"
        );
        assert_eq!(tensor_from_json(&serde_json::from_str(&s).unwrap()).unwrap(), t);
    }

    #[test]
    fn golden_ratpoly_and_fractions() {
        let f = RatPoly::from_coeffs(vec![
            Rat::new(BigInt::from(0), BigInt::from(1)),
            Rat::new(BigInt::from(-1), BigInt::from(2)),
            Rat::new(BigInt::from(1), BigInt::from(2)),
        ]);
        let s = to_output_string(&ratpoly_to_json(&f));
        assert_eq!(s, "{\"schema_version\":1,\"coeffs\":[\"0\",\"-1/2\",\"1/2\"]}\n");
        assert_eq!(ratpoly_from_json(&serde_json::from_str(&s).unwrap()).unwrap(), f);
        // canonical reduction on read
        assert_eq!(
            rat_from_str("-3/6", "").unwrap(),
            Rat::new(BigInt::from(-1), BigInt::from(2))
        );
        assert!(rat_from_str("1/0", "").is_err());
    }

    #[test]
    fn fin_order_roundtrip() {
        for order in [
            FinOrder::integers(),
            FinOrder::gaussian_integers(),
            FinOrder::z_inverted(2),
            FinOrder::z_cross_z(),
        ] {
            let v = fin_order_to_json(&order);
            let back = fin_order_from_json(&v).unwrap();
            assert_eq!(back, order);
            // byte stability
            assert_eq!(to_output_string(&v), to_output_string(&fin_order_to_json(&back)));
        }
    }

    #[test]
    fn eval_hom_roundtrip() {
        let h = EvalHom::at_integer(2, 3, 2, &BigInt::from(5)).unwrap();
        let v = eval_hom_to_json(&h);
        assert_eq!(eval_hom_from_json(&v).unwrap(), h);
    }

    #[test]
    fn lambda_roundtrip() {
        let x = LambdaTrunc::new(BigInt::from(5), (0..4).map(BigInt::from)).unwrap();
        let v = lambda_to_json(&x);
        assert_eq!(lambda_from_json(&v).unwrap(), x);
    }

    #[test]
    fn schema_errors_carry_pointers() {
        let bad: Value = serde_json::from_str("{\"coeffs\": {\"x\": \"1\"}}").unwrap();
        let err = ivpoly_from_json(&bad).unwrap_err();
        assert_eq!(err.pointer, "/coeffs/x");

        let bad: Value =
            serde_json::from_str("{\"arity\": 2, \"terms\": [{\"exp\": [1], \"c\": \"1\"}]}")
                .unwrap();
        let err = multipoly_from_json(&bad).unwrap_err();
        assert_eq!(err.pointer, "/terms/0/exp");
    }

    #[test]
    fn absurd_degrees_are_rejected() {
        let bad: Value =
            serde_json::from_str("{\"basis\":\"binomial\",\"coeffs\":{\"99999999999\":\"1\"}}")
                .unwrap();
        assert!(ivpoly_from_json(&bad).is_err());
    }

    #[test]
    fn random_ivpoly_roundtrips() {
        let mut rng = SplitMix64::new(99);
        for _ in 0..100 {
            let f = IvPoly::from_coeffs(
                (0..=rng.usize_in(0, 12)).map(|n| (n, BigInt::from(rng.int_in(-50, 50)))),
            );
            let s1 = to_output_string(&ivpoly_to_json(&f));
            let back = ivpoly_from_json(&serde_json::from_str(&s1).unwrap()).unwrap();
            assert_eq!(back, f);
            let s2 = to_output_string(&ivpoly_to_json(&back));
            assert_eq!(s1, s2);
        }
    }

    #[test]
    fn random_multipoly_roundtrips() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..60 {
            let arity = rng.usize_in(1, 3);
            let mut f = MultiRatPoly::zero(arity);
            for _ in 0..rng.usize_in(0, 8) {
                let exp: Vec<usize> = (0..arity).map(|_| rng.usize_in(0, 5)).collect();
                f.add_term(
                    exp,
                    Rat::new(BigInt::from(rng.int_in(-9, 9)), BigInt::from(rng.int_in(1, 9))),
                );
            }
            let v = multipoly_to_json(&f);
            assert_eq!(multipoly_from_json(&v).unwrap(), f);
        }
    }
}
