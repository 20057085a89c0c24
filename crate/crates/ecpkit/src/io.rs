//! Text and file formats: field specs, elements, vectors, matrices, codes,
//! keys, ciphertexts, experiment CSV tables, and atomic file writes.
//!
//! Formats are plain text throughout. Fields serialize as `p:e` or
//! `p:e:modulus-coeffs` with coefficients low-degree first and the leading
//! monic coefficient included; extension-field elements as coefficient
//! tuples joined by `.`; vectors as comma-separated entries; matrices as
//! semicolon-separated rows. Structured objects (codes, keys) are JSON
//! envelopes over these texts, versioned for forward compatibility.

use crate::codes::LinearCode;
use crate::ecp::EcpPair;
use crate::error::{Error, Result};
use crate::field::{Embedding, FieldSpec};
use crate::linalg::Matrix;
use crate::pkc::{Ciphertext, PublicKey, Scheme, SecretKey};
use serde_json::{json, Map, Value};
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

pub const FORMAT_VERSION: u64 = 1;

pub fn format_field(spec: &FieldSpec) -> String {
    if spec.e() == 1 {
        return format!("{}:1", spec.p());
    }
    let mut coeffs: Vec<String> = spec.modulus().iter().map(|c| c.to_string()).collect();
    coeffs.push("1".into());
    format!("{}:{}:{}", spec.p(), spec.e(), coeffs.join(","))
}

pub fn parse_field(s: &str) -> Result<FieldSpec> {
    let parts: Vec<&str> = s.trim().split(':').collect();
    if parts.len() < 2 || parts.len() > 3 {
        return Err(Error::Parse(format!(
            "field spec {s:?} is not p:e or p:e:coefficients"
        )));
    }
    let p: u64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("characteristic {:?}", parts[0])))?;
    let e: usize = parts[1]
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("extension degree {:?}", parts[1])))?;
    let Some(tail) = parts.get(2) else {
        return FieldSpec::with_default_modulus(p, e);
    };
    let coeffs: Vec<u64> = tail
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("modulus coefficient {c:?}")))
        })
        .collect::<Result<_>>()?;
    if coeffs.len() != e + 1 {
        return Err(Error::Parse(format!(
            "modulus has {} coefficients, expected {}",
            coeffs.len(),
            e + 1
        )));
    }
    if coeffs[e] != 1 {
        return Err(Error::Parse("modulus must be monic".into()));
    }
    if e == 1 {
        if coeffs[0] != 0 {
            return Err(Error::Parse(
                "prime fields use the plain degree-one modulus".into(),
            ));
        }
        return FieldSpec::new(p, 1, &[]);
    }
    FieldSpec::new(p, e, &coeffs[..e])
}

pub fn format_element(spec: &FieldSpec, x: u64) -> String {
    if spec.e() == 1 {
        return x.to_string();
    }
    spec.coeffs(x)
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(".")
}

pub fn parse_element(spec: &FieldSpec, s: &str) -> Result<u64> {
    let s = s.trim();
    if spec.e() == 1 {
        let x: u64 =
            s.parse().map_err(|_| Error::Parse(format!("element {s:?}")))?;
        if x >= spec.q() {
            return Err(Error::Parse(format!("element {x} outside GF({})", spec.q())));
        }
        return Ok(x);
    }
    let coeffs: Vec<u64> = s
        .split('.')
        .map(|c| {
            c.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("element coefficient {c:?}")))
        })
        .collect::<Result<_>>()?;
    if coeffs.len() != spec.e() {
        return Err(Error::Parse(format!(
            "element {s:?} has {} coefficients, expected {}",
            coeffs.len(),
            spec.e()
        )));
    }
    spec.from_coeffs(&coeffs)
        .map_err(|_| Error::Parse(format!("element {s:?} outside the field")))
}

pub fn format_vector(spec: &FieldSpec, v: &[u64]) -> String {
    v.iter()
        .map(|&x| format_element(spec, x))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn parse_vector(spec: &FieldSpec, s: &str) -> Result<Vec<u64>> {
    s.trim()
        .split(',')
        .map(|part| parse_element(spec, part))
        .collect()
}

pub fn format_matrix(m: &Matrix) -> String {
    (0..m.rows())
        .map(|i| format_vector(m.spec(), m.row(i)))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn parse_matrix(spec: &FieldSpec, s: &str) -> Result<Matrix> {
    let rows: Vec<Vec<u64>> = s
        .trim()
        .split(';')
        .map(|row| parse_vector(spec, row))
        .collect::<Result<_>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse("matrix rows have unequal lengths".into()));
    }
    Matrix::from_rows(spec, cols, &rows)
}

fn as_object<'v>(v: &'v Value, what: &str) -> Result<&'v Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::Parse(format!("{what} is not a JSON object")))
}

fn get<'v>(obj: &'v Map<String, Value>, key: &str) -> Result<&'v Value> {
    obj.get(key)
        .ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

fn get_str<'v>(obj: &'v Map<String, Value>, key: &str) -> Result<&'v str> {
    get(obj, key)?
        .as_str()
        .ok_or_else(|| Error::Parse(format!("field {key:?} is not a string")))
}

fn get_usize(obj: &Map<String, Value>, key: &str) -> Result<usize> {
    get(obj, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::Parse(format!("field {key:?} is not an integer")))
}

fn parse_json(s: &str, what: &str) -> Result<Value> {
    serde_json::from_str(s).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn check_version(obj: &Map<String, Value>) -> Result<()> {
    let v = get(obj, "v")?
        .as_u64()
        .ok_or_else(|| Error::Parse("field \"v\" is not an integer".into()))?;
    if v != FORMAT_VERSION {
        return Err(Error::Version(v as u32));
    }
    Ok(())
}

pub fn code_to_value(code: &LinearCode) -> Value {
    json!({
        "field": format_field(code.spec()),
        "n": code.n(),
        "k": code.k(),
        "generator": format_matrix(code.generator()),
    })
}

pub fn code_from_value(v: &Value) -> Result<LinearCode> {
    let obj = as_object(v, "code")?;
    let spec = parse_field(get_str(obj, "field")?)?;
    let n = get_usize(obj, "n")?;
    let k = get_usize(obj, "k")?;
    let code = if k == 0 {
        LinearCode::from_rows(&spec, n, &[])?
    } else {
        let gen = parse_matrix(&spec, get_str(obj, "generator")?)?;
        if gen.rows() != k || gen.cols() != n {
            return Err(Error::Parse(format!(
                "generator is {}x{}, stated dimensions are {k}x{n}",
                gen.rows(),
                gen.cols()
            )));
        }
        LinearCode::from_rows(&spec, n, &gen.row_vecs())?
    };
    if code.k() != k {
        return Err(Error::Parse(format!(
            "generator has rank {}, stated dimension is {k}",
            code.k()
        )));
    }
    Ok(code)
}

pub fn code_to_json(code: &LinearCode) -> String {
    let mut s = serde_json::to_string_pretty(&code_to_value(code)).expect("plain JSON");
    s.push('\n');
    s
}

pub fn code_from_json(s: &str) -> Result<LinearCode> {
    code_from_value(&parse_json(s, "code file")?)
}

pub fn grs_spec_to_json(g: &crate::families::GrsSpec) -> String {
    let v = json!({
        "field": format_field(g.spec()),
        "a": format_vector(g.spec(), g.support()),
        "b": format_vector(g.spec(), g.multiplier()),
        "k": g.k(),
    });
    let mut s = serde_json::to_string_pretty(&v).expect("plain JSON");
    s.push('\n');
    s
}

pub fn grs_spec_from_json(s: &str) -> Result<crate::families::GrsSpec> {
    let v = parse_json(s, "spec file")?;
    let obj = as_object(&v, "spec")?;
    let spec = parse_field(get_str(obj, "field")?)?;
    let a = parse_vector(&spec, get_str(obj, "a")?)?;
    let b = parse_vector(&spec, get_str(obj, "b")?)?;
    let k = get_usize(obj, "k")?;
    crate::families::GrsSpec::new(&spec, &a, &b, k)
}

pub fn public_key_to_json(pk: &PublicKey) -> String {
    let v = json!({
        "v": FORMAT_VERSION,
        "scheme": pk.scheme().to_string(),
        "field": format_field(pk.spec()),
        "n": pk.n(),
        "k": pk.k(),
        "t": pk.t(),
        "matrix": format_matrix(pk.matrix()),
    });
    let mut s = serde_json::to_string_pretty(&v).expect("plain JSON");
    s.push('\n');
    s
}

pub fn public_key_from_json(s: &str) -> Result<PublicKey> {
    let v = parse_json(s, "public key file")?;
    let obj = as_object(&v, "public key")?;
    check_version(obj)?;
    let scheme: Scheme = get_str(obj, "scheme")?.parse()?;
    let spec = parse_field(get_str(obj, "field")?)?;
    let n = get_usize(obj, "n")?;
    let k = get_usize(obj, "k")?;
    let t = get_usize(obj, "t")?;
    let matrix = parse_matrix(&spec, get_str(obj, "matrix")?)?;
    PublicKey::new(scheme, &spec, n, k, t, matrix)
}

pub fn secret_key_to_json(sk: &SecretKey) -> String {
    let spec = sk.code().spec();
    let ext = sk.pair().extension().target();
    let mut obj = json!({
        "v": FORMAT_VERSION,
        "scheme": sk.scheme().to_string(),
        "field": format_field(spec),
        "S": format_matrix(sk.scrambler()),
        "P": sk.permutation(),
        "code": code_to_value(sk.code()),
        "ecp": {
            "A": code_to_value(sk.pair().a()),
            "B": code_to_value(sk.pair().b()),
            "t": sk.pair().t(),
            "extension": format_field(ext),
        },
    });
    if let Some(scale) = sk.scale() {
        obj["p_scale"] = Value::String(format_vector(spec, scale));
    }
    let mut s = serde_json::to_string_pretty(&obj).expect("plain JSON");
    s.push('\n');
    s
}

pub fn secret_key_from_json(s: &str) -> Result<SecretKey> {
    let v = parse_json(s, "secret key file")?;
    let obj = as_object(&v, "secret key")?;
    check_version(obj)?;
    let scheme: Scheme = get_str(obj, "scheme")?.parse()?;
    let spec = parse_field(get_str(obj, "field")?)?;
    let code = code_from_value(get(obj, "code")?)?;
    if code.spec() != &spec {
        return Err(Error::Parse("code field does not match the key field".into()));
    }
    let s_matrix = parse_matrix(&spec, get_str(obj, "S")?)?;
    let perm: Vec<usize> = get(obj, "P")?
        .as_array()
        .ok_or_else(|| Error::Parse("field \"P\" is not an array".into()))?
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|v| v as usize)
                .ok_or_else(|| Error::Parse("permutation entry is not an integer".into()))
        })
        .collect::<Result<_>>()?;
    let scale = match obj.get("p_scale") {
        Some(v) => Some(parse_vector(
            &spec,
            v.as_str()
                .ok_or_else(|| Error::Parse("field \"p_scale\" is not a string".into()))?,
        )?),
        None => None,
    };
    let ecp = as_object(get(obj, "ecp")?, "ecp")?;
    let ext = parse_field(get_str(ecp, "extension")?)?;
    let a = code_from_value(get(ecp, "A")?)?;
    let b = code_from_value(get(ecp, "B")?)?;
    let t = get_usize(ecp, "t")?;
    let embedding = Embedding::new(&spec, &ext)?;
    let pair = EcpPair::new(a, b, t, embedding)?;
    SecretKey::new(scheme, s_matrix, perm, scale, code, pair)
}

pub fn format_ciphertext(spec: &FieldSpec, c: &Ciphertext) -> String {
    format!("{}:{}\n", c.scheme, format_vector(spec, &c.body))
}

pub fn parse_ciphertext(spec: &FieldSpec, s: &str) -> Result<Ciphertext> {
    let line = s.trim();
    let Some((tag, body)) = line.split_once(':') else {
        return Err(Error::Parse("ciphertext has no scheme prefix".into()));
    };
    let scheme: Scheme = tag.trim().parse()?;
    let body = parse_vector(spec, body)?;
    Ok(Ciphertext { scheme, body })
}

/// One experiment table: the fixed header with the measurement column named
/// by `label`, then one row per trial in order.
pub fn experiment_csv<T: std::fmt::Display>(
    label: &str,
    seed: u64,
    q: u64,
    n: usize,
    k_or_st: usize,
    values: &[T],
) -> String {
    let mut out = format!("seed,q,n,k_or_st,trial,{label}\n");
    for (trial, v) in values.iter().enumerate() {
        writeln!(out, "{seed},{q},{n},{k_or_st},{trial},{v}").expect("string write");
    }
    out
}

/// Writes through a temporary file in the destination directory and renames
/// it into place, so failures never leave partial output at the target path.
pub fn atomic_write(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path).map_err(|e| Error::Io(e.to_string()))?;
    Ok(())
}
