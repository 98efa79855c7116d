//! Structure-constant file format.
//!
//! A JSON document with `dim`, `delta` entries `[i, j, k, c]`, `counit`, and
//! optionally `mult`, `unit`, `antipode` (`antipode[i][j]` is the coefficient
//! of `e_i` in `S(e_j)`). Scalars are `"p/q"` strings over Q; over Q(ζ_m)
//! (`scalar_field_degree` > 1 with `cyclotomic_order` m) each scalar is an
//! array of `"p/q"` coordinates in the power basis `1, ζ, ζ², …`.
//!
//! [`write_structure`] is canonical: sorted entries, zeros omitted, fixed
//! layout, so parse followed by write reproduces a written file byte for byte.

use std::fmt::Write as _;

use serde::Deserialize;
use thiserror::Error;

use crate::exactlin::{format_rational, parse_rational, Cyclotomic, Field, Matrix, Rational};

use super::data::{Algebra, CoalgebraData, HopfData};
use super::{AnyStructure, Structure, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed document: {0}")]
    Json(String),
    #[error("bad scalar {0:?}")]
    BadScalar(String),
    #[error("unsupported scalar field: degree {degree}, cyclotomic order {order:?}")]
    UnsupportedField { degree: usize, order: Option<usize> },
    #[error("incomplete Hopf data: {0}")]
    IncompleteHopf(&'static str),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawScalar {
    Text(String),
    Coords(Vec<String>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    dim: usize,
    #[serde(default)]
    scalar_field_degree: Option<usize>,
    #[serde(default)]
    cyclotomic_order: Option<usize>,
    delta: Vec<(usize, usize, usize, RawScalar)>,
    counit: Vec<RawScalar>,
    #[serde(default)]
    mult: Option<Vec<(usize, usize, usize, RawScalar)>>,
    #[serde(default)]
    unit: Option<Vec<RawScalar>>,
    #[serde(default)]
    antipode: Option<Vec<Vec<RawScalar>>>,
}

pub fn parse_structure(text: &str) -> Result<AnyStructure, FormatError> {
    let raw: RawFile = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    let degree = raw.scalar_field_degree.unwrap_or(1);
    match (degree, raw.cyclotomic_order) {
        (1, None | Some(1)) => Ok(AnyStructure::Rational(build::<Rational>(&raw)?)),
        (2, Some(3)) => Ok(AnyStructure::Cyclotomic3(build::<Cyclotomic<3>>(&raw)?)),
        (2, Some(4)) => Ok(AnyStructure::Cyclotomic4(build::<Cyclotomic<4>>(&raw)?)),
        (degree, order) => Err(FormatError::UnsupportedField { degree, order }),
    }
}

fn scalar<F: Field>(s: &RawScalar) -> Result<F, FormatError> {
    let coords = match s {
        RawScalar::Text(t) => {
            let q = parse_rational(t).ok_or_else(|| FormatError::BadScalar(t.clone()))?;
            if F::degree() == 1 {
                vec![q]
            } else {
                let mut v = vec![Rational::zero(); F::degree()];
                v[0] = q;
                v
            }
        }
        RawScalar::Coords(cs) => cs
            .iter()
            .map(|t| parse_rational(t).ok_or_else(|| FormatError::BadScalar(t.clone())))
            .collect::<Result<_, _>>()?,
    };
    F::from_coords(&coords).ok_or_else(|| FormatError::BadScalar(format!("{} coordinates for a degree {} field", coords.len(), F::degree())))
}

fn vector<F: Field>(v: &[RawScalar]) -> Result<Vec<F>, FormatError> {
    v.iter().map(scalar).collect()
}

fn build<F: Field>(raw: &RawFile) -> Result<Structure<F>, FormatError> {
    let n = raw.dim;
    let delta = raw.delta.iter().map(|(i, j, k, c)| Ok((*i, *j, *k, scalar::<F>(c)?))).collect::<Result<Vec<_>, FormatError>>()?;
    let coalgebra = CoalgebraData::from_entries(n, delta, vector(&raw.counit)?)?;
    match (&raw.mult, &raw.unit, &raw.antipode) {
        (None, None, None) => Ok(Structure::Coalgebra(coalgebra)),
        (Some(mult), Some(unit), Some(antipode)) => {
            let mult = mult.iter().map(|(i, j, k, c)| Ok((*i, *j, *k, scalar::<F>(c)?))).collect::<Result<Vec<_>, FormatError>>()?;
            let algebra = Algebra::from_entries(n, mult, vector(unit)?)?;
            if antipode.len() != n || antipode.iter().any(|row| row.len() != n) {
                return Err(StructureError::Shape(format!("antipode must be {n} x {n}")).into());
            }
            let rows = antipode.iter().map(|row| vector(row)).collect::<Result<Vec<_>, _>>()?;
            let s = if n == 0 { Matrix::zeros(0, 0) } else { Matrix::from_rows(rows) };
            Ok(Structure::Hopf(HopfData::new(coalgebra, algebra, s)?))
        }
        _ => Err(FormatError::IncompleteHopf("mult, unit and antipode must be given together")),
    }
}

fn write_scalar<F: Field>(out: &mut String, x: &F) {
    let coords = x.coords();
    if F::degree() == 1 {
        let _ = write!(out, "\"{}\"", format_rational(&coords[0]));
    } else {
        out.push('[');
        for (i, c) in coords.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "\"{}\"", format_rational(c));
        }
        out.push(']');
    }
}

fn write_vector<F: Field>(out: &mut String, v: &[F]) {
    out.push('[');
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        write_scalar(out, x);
    }
    out.push(']');
}

fn write_entries<F: Field>(out: &mut String, key: &str, entries: &[(usize, usize, usize, &F)]) {
    let _ = write!(out, "  \"{key}\": [");
    for (p, (i, j, k, c)) in entries.iter().enumerate() {
        out.push_str(if p == 0 { "\n    " } else { ",\n    " });
        let _ = write!(out, "[{i}, {j}, {k}, ");
        write_scalar(out, *c);
        out.push(']');
    }
    out.push_str(if entries.is_empty() { "]" } else { "\n  ]" });
}

fn write_typed<F: Field>(s: &Structure<F>) -> String {
    let c = s.coalgebra();
    let n = c.dim();
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"dim\": {n},");
    let _ = writeln!(out, "  \"scalar_field_degree\": {},", F::degree());
    if F::degree() > 1 {
        let _ = writeln!(out, "  \"cyclotomic_order\": {},", F::cyclotomic_order());
    }
    let delta: Vec<_> = (0..n).flat_map(|i| c.terms(i).map(move |(j, k, x)| (i, j, k, x))).collect();
    write_entries(&mut out, "delta", &delta);
    out.push_str(",\n  \"counit\": ");
    write_vector(&mut out, c.counit());
    if let Some(h) = s.hopf() {
        out.push_str(",\n");
        let a = &h.algebra;
        let mult: Vec<_> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .flat_map(|(i, j)| a.product_terms(i, j).map(move |(k, x)| (i, j, k, x)))
            .collect();
        write_entries(&mut out, "mult", &mult);
        out.push_str(",\n  \"unit\": ");
        write_vector(&mut out, a.unit());
        out.push_str(",\n  \"antipode\": [");
        for i in 0..n {
            out.push_str(if i == 0 { "\n    " } else { ",\n    " });
            write_vector(&mut out, h.antipode.row(i));
        }
        out.push_str(if n == 0 { "]" } else { "\n  ]" });
    }
    out.push_str("\n}\n");
    out
}

pub fn write_structure(s: &AnyStructure) -> String {
    crate::with_structure!(s, inner => write_typed(inner))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{corpus, CorpusItem, FieldChoice, FiniteGroup};

    #[test]
    fn round_trip_is_byte_exact() {
        for item in [
            CorpusItem::Sweedler,
            CorpusItem::Taft(3),
            CorpusItem::Taft(4),
            CorpusItem::DualGroupAlgebra(FiniteGroup::symmetric3()),
        ] {
            let s = corpus(&item, FieldChoice::Rational).unwrap();
            let text = write_structure(&s);
            let back = parse_structure(&text).unwrap();
            assert_eq!(back, s);
            assert_eq!(write_structure(&back), text);
        }
    }

    #[test]
    fn accepts_bare_integers_and_default_degree() {
        let text = r#"{"dim": 1, "delta": [[0, 0, 0, "1"]], "counit": ["1"]}"#;
        let s = parse_structure(text).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(s.validate().is_valid());
        assert!(write_structure(&s).contains("\"1/1\""));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_structure("{"), Err(FormatError::Json(_))));
        let zero_den = r#"{"dim": 1, "delta": [[0, 0, 0, "1/0"]], "counit": ["1"]}"#;
        assert!(matches!(parse_structure(zero_den), Err(FormatError::BadScalar(_))));
        let out_of_range = r#"{"dim": 1, "delta": [[0, 0, 3, "1"]], "counit": ["1"]}"#;
        assert!(matches!(parse_structure(out_of_range), Err(FormatError::Structure(_))));
        let field = r#"{"dim": 1, "scalar_field_degree": 4, "cyclotomic_order": 5, "delta": [], "counit": ["1"]}"#;
        assert!(matches!(parse_structure(field), Err(FormatError::UnsupportedField { .. })));
        let partial = r#"{"dim": 1, "delta": [], "counit": ["1"], "unit": ["1"]}"#;
        assert!(matches!(parse_structure(partial), Err(FormatError::IncompleteHopf(_))));
    }
}
