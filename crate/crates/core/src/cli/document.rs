//! The JSON input format and its validation into library values.

use indexmap::IndexMap;
use num::{BigInt, BigRational, Integer, One, Signed};
use serde::{Deserialize, Serialize};

use super::CliError;
use crate::abcat::{identity, LinMap, VecObj};
use crate::cospan::{Cospan, Span};
use crate::cw::{mv_exactness_check, SimplicialComplex, SimplicialMap, SpaceCospan};
use crate::exactlin::{Field, Matrix, Scalar};

pub const VERSION: &str = "1";

/// `{"char": p}` with `p = 0` for the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    #[serde(rename = "char")]
    pub characteristic: u64,
}

/// A matrix entry: an integer, or a string `"a/b"` / `"a"` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Str(String),
}

/// A matrix given as row arrays, with an explicit shape when it has no entries,
/// or as an identity or zero map between named objects.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixSpec {
    Rows(Vec<Vec<Entry>>),
    Shaped {
        rows: usize,
        cols: usize,
        data: Vec<Vec<Entry>>,
    },
    Identity {
        identity: String,
    },
    Zero {
        zero: (String, String),
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CospanSpec {
    pub f0: String,
    pub f1: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpanSpec {
    pub g0: String,
    pub g1: String,
}

/// A pointed complex on vertices `0..vertices`, given by its maximal simplices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    pub src: String,
    pub dst: String,
    pub vertices: Vec<usize>,
}

/// Face lists of `K0`, `K1` and `T` inside the named complex `l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriadSpec {
    pub l: String,
    pub k0: Vec<Vec<usize>>,
    pub k1: Vec<Vec<usize>>,
    pub t: Vec<Vec<usize>>,
}

/// The raw document, exactly as serialized.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub version: String,
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub objects: IndexMap<String, usize>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub matrices: IndexMap<String, MatrixSpec>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub cospans: IndexMap<String, CospanSpec>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub spans: IndexMap<String, SpanSpec>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub complexes: IndexMap<String, ComplexSpec>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub maps: IndexMap<String, MapSpec>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub space_cospans: IndexMap<String, CospanSpec>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub triads: IndexMap<String, TriadSpec>,
}

#[derive(Clone, Debug)]
pub struct LoadedTriad {
    pub l: SimplicialComplex,
    pub k0: Vec<Vec<usize>>,
    pub k1: Vec<Vec<usize>>,
    pub t: Vec<Vec<usize>>,
}

/// A validated document: every reference resolved, every value constructed.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub field: Field,
    pub matrices: IndexMap<String, LinMap>,
    pub cospans: IndexMap<String, Cospan>,
    pub spans: IndexMap<String, Span>,
    pub complexes: IndexMap<String, SimplicialComplex>,
    pub maps: IndexMap<String, SimplicialMap>,
    pub space_cospans: IndexMap<String, SpaceCospan>,
    pub triads: IndexMap<String, LoadedTriad>,
}

pub fn parse(text: &str) -> Result<Document, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn load(path: &std::path::Path) -> Result<(Loaded, Vec<u8>), CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|e| CliError::Parse { line: 0, column: 0, message: e.to_string() })?;
    Ok((validate(&parse(&text)?)?, bytes))
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

fn lookup<'a, T>(map: &'a IndexMap<String, T>, kind: &str, name: &str, from: &str) -> Result<&'a T, CliError> {
    map.get(name)
        .ok_or_else(|| invalid(format!("{from}: unknown {kind} '{name}'")))
}

/// Parse `"a/b"` or `"a"`; the fraction must be in lowest terms with positive denominator.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| format!("bad rational '{s}'"))?;
    let den: BigInt = den.trim().parse().map_err(|_| format!("bad rational '{s}'"))?;
    if !den.is_positive() {
        return Err(format!("rational '{s}' must have a positive denominator"));
    }
    if !num.gcd(&den).is_one() && !(num == BigInt::from(0) && den.is_one()) {
        return Err(format!("rational '{s}' is not in lowest terms"));
    }
    Ok(BigRational::new_raw(num, den))
}

fn entry_scalar(field: Field, e: &Entry, at: &str) -> Result<Scalar, CliError> {
    match (field.is_rational(), e) {
        (true, Entry::Int(v)) => Ok(field.scalar_from_i64(*v)),
        (true, Entry::Str(s)) => parse_rational(s)
            .map(Scalar::Rational)
            .map_err(|m| invalid(format!("{at}: {m}"))),
        (false, Entry::Int(v)) => {
            if *v >= 0 && (*v as u64) < field.characteristic() {
                Ok(Scalar::Residue(*v as u32))
            } else {
                Err(invalid(format!("{at}: entry {v} is not in [0, {})", field.characteristic())))
            }
        }
        (false, Entry::Str(s)) => Err(invalid(format!("{at}: entry \"{s}\" must be an integer over {field}"))),
    }
}

fn build_matrix(field: Field, rows: usize, cols: usize, data: &[Vec<Entry>], at: &str) -> Result<Matrix, CliError> {
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(invalid(format!("{at}: rows must all have length {cols} and there must be {rows} of them")));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (i, row) in data.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            entries.push(entry_scalar(field, e, &format!("{at}[{i}][{j}]"))?);
        }
    }
    Matrix::from_scalars(field, rows, cols, entries).map_err(|e| invalid(format!("{at}: {e}")))
}

fn matrix_of(doc: &Document, field: Field, name: &str, spec: &MatrixSpec) -> Result<LinMap, CliError> {
    let at = format!("matrix '{name}'");
    let obj = |o: &str| -> Result<VecObj, CliError> {
        let dim = *lookup(&doc.objects, "object", o, &at)?;
        Ok(VecObj { field, dim })
    };
    Ok(match spec {
        MatrixSpec::Rows(data) => {
            if data.is_empty() {
                return Err(invalid(format!("{at}: an empty row list needs an explicit shape")));
            }
            LinMap::from_matrix(build_matrix(field, data.len(), data[0].len(), data, &at)?)
        }
        MatrixSpec::Shaped { rows, cols, data } => LinMap::from_matrix(build_matrix(field, *rows, *cols, data, &at)?),
        MatrixSpec::Identity { identity: a } => identity(obj(a)?),
        MatrixSpec::Zero { zero: (a, b) } => LinMap::zero(obj(a)?, obj(b)?),
    })
}

/// Resolve references and run every construction check.
pub fn validate(doc: &Document) -> Result<Loaded, CliError> {
    if doc.version != VERSION {
        return Err(invalid(format!("unsupported version '{}', expected '{VERSION}'", doc.version)));
    }
    let field = Field::new(doc.field.characteristic).map_err(|e| invalid(format!("field: {e}")))?;
    let mut matrices = IndexMap::new();
    for (name, spec) in &doc.matrices {
        matrices.insert(name.clone(), matrix_of(doc, field, name, spec)?);
    }
    let mut cospans = IndexMap::new();
    for (name, c) in &doc.cospans {
        let at = format!("cospan '{name}'");
        let f0 = lookup(&matrices, "matrix", &c.f0, &at)?.clone();
        let f1 = lookup(&matrices, "matrix", &c.f1, &at)?.clone();
        cospans.insert(name.clone(), Cospan::new(f0, f1).map_err(|e| invalid(format!("{at}: {e}")))?);
    }
    let mut spans = IndexMap::new();
    for (name, s) in &doc.spans {
        let at = format!("span '{name}'");
        let g0 = lookup(&matrices, "matrix", &s.g0, &at)?.clone();
        let g1 = lookup(&matrices, "matrix", &s.g1, &at)?.clone();
        spans.insert(name.clone(), Span::new(g0, g1).map_err(|e| invalid(format!("{at}: {e}")))?);
    }
    let mut complexes = IndexMap::new();
    for (name, c) in &doc.complexes {
        let k = SimplicialComplex::from_maximal(c.vertices, &c.facets)
            .map_err(|e| invalid(format!("complex '{name}': {e}")))?;
        complexes.insert(name.clone(), k);
    }
    let mut maps = IndexMap::new();
    for (name, m) in &doc.maps {
        let at = format!("map '{name}'");
        let src = lookup(&complexes, "complex", &m.src, &at)?.clone();
        let dst = lookup(&complexes, "complex", &m.dst, &at)?.clone();
        let f = SimplicialMap::new(src, dst, m.vertices.clone()).map_err(|e| invalid(format!("{at}: {e}")))?;
        maps.insert(name.clone(), f);
    }
    let mut space_cospans = IndexMap::new();
    for (name, c) in &doc.space_cospans {
        let at = format!("space cospan '{name}'");
        let f0 = lookup(&maps, "map", &c.f0, &at)?.clone();
        let f1 = lookup(&maps, "map", &c.f1, &at)?.clone();
        space_cospans.insert(name.clone(), SpaceCospan::new(f0, f1).map_err(|e| invalid(format!("{at}: {e}")))?);
    }
    let mut triads = IndexMap::new();
    for (name, t) in &doc.triads {
        let at = format!("triad '{name}'");
        let l = lookup(&complexes, "complex", &t.l, &at)?.clone();
        mv_exactness_check(&l, &t.k0, &t.k1, &t.t, 0, field).map_err(|e| invalid(format!("{at}: {e}")))?;
        triads.insert(
            name.clone(),
            LoadedTriad {
                l,
                k0: t.k0.clone(),
                k1: t.k1.clone(),
                t: t.t.clone(),
            },
        );
    }
    Ok(Loaded {
        field,
        matrices,
        cospans,
        spans,
        complexes,
        maps,
        space_cospans,
        triads,
    })
}
