//! Parameter files (JSON), matrix files (Matrix Market array / CSV), and
//! elimination trace dumps.
//!
//! All files are UTF-8 with `\n` line endings. Matrix Market output uses the
//! dense `array` format, column-major, one value per line, emitting each
//! entry as the shortest decimal that round-trips its `f64` value; writing
//! an exact matrix therefore also writes a lossless `*.exact.csv` sidecar
//! next to it (the `.mtx` itself is lossless only for entries exactly
//! representable in `f64`, integers in particular). CSV matrix files are one
//! row per line with `,`-separated entries rendered exactly (`num/den` for
//! non-integer rationals), so CSV round-trips the exact field losslessly.

use crate::elimination::EliminationTrace;
use crate::model::{BrownianParams, DenseMatrix, ModelError, Variant};
use crate::scalar::{FieldTag, Rational, Scalar};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("IoError: {0}")]
    Io(#[from] std::io::Error),
    #[error("ParseError: {0}")]
    Parse(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("FormatUnsupported: {0}")]
    FormatUnsupported(String),
}

/// On-disk matrix encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFormat {
    MatrixMarket,
    Csv,
}

impl fmt::Display for MatrixFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixFormat::MatrixMarket => write!(f, "mm"),
            MatrixFormat::Csv => write!(f, "csv"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    variant: String,
    k: Vec<Rational>,
    a: Vec<Rational>,
    b: Vec<Rational>,
}

/// Parses a parameter set from its JSON form:
/// `{"variant": "A1", "k": [...], "a": [...], "b": [...]}` with entries as
/// integers or `"num/den"` / decimal strings.
pub fn parse_params(text: &str) -> Result<BrownianParams<Rational>, IoError> {
    let raw: RawParams =
        serde_json::from_str(text).map_err(|e| IoError::Parse(e.to_string()))?;
    let variant: Variant = raw.variant.parse()?;
    Ok(BrownianParams::new(variant, raw.k, raw.a, raw.b)?)
}

pub fn read_params(path: &Path) -> Result<BrownianParams<Rational>, IoError> {
    parse_params(&fs::read_to_string(path)?)
}

/// Serializes a parameter set as pretty JSON (exact entries).
pub fn params_to_json(p: &BrownianParams<Rational>) -> String {
    let raw = RawParams {
        variant: p.variant().to_string(),
        k: p.k().to_vec(),
        a: p.a().to_vec(),
        b: p.b().to_vec(),
    };
    let mut s = serde_json::to_string_pretty(&raw).expect("params serialize");
    s.push('\n');
    s
}

pub fn write_params(p: &BrownianParams<Rational>, path: &Path) -> Result<(), IoError> {
    fs::write(path, params_to_json(p))?;
    Ok(())
}

/// CSV body of a matrix: one row per line, entries rendered exactly.
pub fn matrix_to_csv<S: Scalar>(m: &DenseMatrix<S>) -> String {
    let n = m.order();
    let mut out = String::new();
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push(',');
            }
            out.push_str(&m[(i, j)].to_string());
        }
        out.push('\n');
    }
    out
}

/// Matrix Market dense-array body of a matrix (column-major, `f64` values).
pub fn matrix_to_matrix_market<S: Scalar>(m: &DenseMatrix<S>) -> String {
    let n = m.order();
    let mut out = String::from("%%MatrixMarket matrix array real general\n");
    out.push_str(&format!("{n} {n}\n"));
    for j in 0..n {
        for i in 0..n {
            out.push_str(&format!("{}\n", m[(i, j)].to_f64()));
        }
    }
    out
}

fn exact_sidecar(path: &Path) -> PathBuf {
    path.with_extension("exact.csv")
}

/// Writes a matrix in the requested format, returning the paths written.
/// Matrix Market output for an exact-field matrix adds a lossless
/// `*.exact.csv` sidecar.
pub fn write_matrix<S: Scalar>(
    m: &DenseMatrix<S>,
    path: &Path,
    format: MatrixFormat,
) -> Result<Vec<PathBuf>, IoError> {
    let mut written = Vec::new();
    match format {
        MatrixFormat::Csv => {
            fs::write(path, matrix_to_csv(m))?;
            written.push(path.to_path_buf());
        }
        MatrixFormat::MatrixMarket => {
            fs::write(path, matrix_to_matrix_market(m))?;
            written.push(path.to_path_buf());
            if S::FIELD == FieldTag::Exact {
                let side = exact_sidecar(path);
                fs::write(&side, matrix_to_csv(m))?;
                written.push(side);
            }
        }
    }
    Ok(written)
}

fn parse_cell(tok: &str, line_no: usize, field_no: usize) -> Result<Rational, IoError> {
    tok.trim().parse::<Rational>().map_err(|e| {
        IoError::Parse(format!("line {line_no}, field {field_no}: {e}"))
    })
}

/// Parses a matrix from either supported encoding, sniffing Matrix Market
/// by its `%%MatrixMarket` banner and treating anything else as CSV.
/// Decimal values are read exactly (as the rational the digits denote).
pub fn parse_matrix(text: &str) -> Result<DenseMatrix<Rational>, IoError> {
    if text.trim().is_empty() {
        return Err(IoError::Parse("empty matrix file".into()));
    }
    if text.trim_start().starts_with("%%MatrixMarket") {
        parse_matrix_market(text)
    } else {
        parse_csv_matrix(text)
    }
}

pub fn read_matrix(path: &Path) -> Result<DenseMatrix<Rational>, IoError> {
    parse_matrix(&fs::read_to_string(path)?)
}

fn parse_matrix_market(text: &str) -> Result<DenseMatrix<Rational>, IoError> {
    let mut lines = text.lines().enumerate();
    let (_, banner) = lines.next().expect("non-empty checked by caller");
    let toks: Vec<&str> = banner.split_whitespace().collect();
    if toks.len() != 5 || !toks[0].eq_ignore_ascii_case("%%MatrixMarket") {
        return Err(IoError::Parse(format!("line 1: malformed banner {banner:?}")));
    }
    if !toks[1].eq_ignore_ascii_case("matrix") {
        return Err(IoError::FormatUnsupported(format!(
            "Matrix Market object {:?} (only \"matrix\")",
            toks[1]
        )));
    }
    if !toks[2].eq_ignore_ascii_case("array") {
        return Err(IoError::FormatUnsupported(format!(
            "Matrix Market format {:?} (only dense \"array\")",
            toks[2]
        )));
    }
    if !(toks[3].eq_ignore_ascii_case("real") || toks[3].eq_ignore_ascii_case("integer")) {
        return Err(IoError::FormatUnsupported(format!(
            "Matrix Market field {:?} (only \"real\" or \"integer\")",
            toks[3]
        )));
    }
    if !toks[4].eq_ignore_ascii_case("general") {
        return Err(IoError::FormatUnsupported(format!(
            "Matrix Market symmetry {:?} (only \"general\")",
            toks[4]
        )));
    }

    let mut dims: Option<(usize, usize)> = None;
    let mut values: Vec<Rational> = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        let t = line.trim();
        if t.is_empty() || t.starts_with('%') {
            continue;
        }
        if dims.is_none() {
            let parts: Vec<&str> = t.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(IoError::Parse(format!(
                    "line {line_no}: expected \"rows cols\", found {t:?}"
                )));
            }
            let r: usize = parts[0]
                .parse()
                .map_err(|_| IoError::Parse(format!("line {line_no}: bad row count {t:?}")))?;
            let c: usize = parts[1]
                .parse()
                .map_err(|_| IoError::Parse(format!("line {line_no}: bad column count {t:?}")))?;
            if r != c {
                return Err(IoError::Parse(format!(
                    "line {line_no}: matrix must be square, found {r} x {c}"
                )));
            }
            dims = Some((r, c));
            continue;
        }
        for (fi, tok) in t.split_whitespace().enumerate() {
            values.push(parse_cell(tok, line_no, fi + 1)?);
        }
    }
    let (n, _) = dims.ok_or_else(|| IoError::Parse("missing size line".into()))?;
    if values.len() != n * n {
        return Err(IoError::Parse(format!(
            "expected {} values for a {n} x {n} array, found {}",
            n * n,
            values.len()
        )));
    }
    let mut m = DenseMatrix::zeros(n);
    let mut it = values.into_iter();
    for j in 0..n {
        for i in 0..n {
            m[(i, j)] = it.next().expect("length checked");
        }
    }
    Ok(m)
}

fn parse_csv_matrix(text: &str) -> Result<DenseMatrix<Rational>, IoError> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for (fi, tok) in t.split(',').enumerate() {
            row.push(parse_cell(tok, line_no, fi + 1)?);
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(IoError::Parse(format!(
                    "line {line_no}: expected {} fields, found {}",
                    first.len(),
                    row.len()
                )));
            }
        }
        rows.push(row);
    }
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(IoError::Parse(format!(
            "matrix must be square, found {n} rows of {} fields",
            rows[0].len()
        )));
    }
    Ok(DenseMatrix::from_rows(rows).expect("square checked"))
}

/// Dumps all four stages of a trace into `dir` as
/// `stage{1..4}_{working,multiplier}.mtx` (plus exact sidecars for exact
/// traces), returning every path written.
pub fn dump_trace<S: Scalar>(
    trace: &EliminationTrace<S>,
    dir: &Path,
) -> Result<Vec<PathBuf>, IoError> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for stage in 1..=4 {
        let snap = trace.stage(stage);
        written.extend(write_matrix(
            &snap.working,
            &dir.join(format!("stage{stage}_working.mtx")),
            MatrixFormat::MatrixMarket,
        )?);
        written.extend(write_matrix(
            &snap.multiplier,
            &dir.join(format!("stage{stage}_multiplier.mtx")),
            MatrixFormat::MatrixMarket,
        )?);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form;
    use crate::elimination::eliminate;
    use crate::model::random_params;

    fn ints(vals: &[i64]) -> Vec<Rational> {
        vals.iter().map(|&v| Rational::from_int(v)).collect()
    }

    fn frozen_inverse() -> DenseMatrix<Rational> {
        DenseMatrix::from_rows(vec![
            ints(&[2, -1, 0]),
            ints(&[-1, 2, -1]),
            ints(&[0, -1, 1]),
        ])
        .unwrap()
    }

    #[test]
    fn csv_bytes_are_stable() {
        assert_eq!(matrix_to_csv(&frozen_inverse()), "2,-1,0\n-1,2,-1\n0,-1,1\n");
    }

    #[test]
    fn params_json_round_trip() {
        let p = BrownianParams::new(
            Variant::A1,
            vec![
                Rational::from_int(1),
                Rational::new(1, 3).unwrap(),
                Rational::from_int(4),
            ],
            vec![Rational::new(-2, 7).unwrap(), Rational::from_int(1)],
            ints(&[1, 2, 3]),
        )
        .unwrap();
        let text = params_to_json(&p);
        assert!(text.contains("\"1/3\""), "fractions serialize as strings: {text}");
        assert!(text.ends_with('\n'));
        let back = parse_params(&text).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn params_accept_decimal_strings() {
        let p = parse_params(
            r#"{"variant": "a2", "k": [2, 1], "a": ["0.5"], "b": ["1e1", "-3/2"]}"#,
        )
        .unwrap();
        assert_eq!(p.variant(), Variant::A2);
        assert_eq!(p.a()[0], Rational::new(1, 2).unwrap());
        assert_eq!(p.b()[0], Rational::from_int(10));
        assert_eq!(p.b()[1], Rational::new(-3, 2).unwrap());
    }

    #[test]
    fn params_length_mismatch_names_array() {
        let err = parse_params(r#"{"variant": "A1", "k": [1], "a": [1], "b": [1]}"#).unwrap_err();
        match &err {
            IoError::Model(ModelError::LengthMismatch { array, expected, found }) => {
                assert_eq!(*array, "a");
                assert_eq!((*expected, *found), (0, 1));
            }
            other => panic!("expected length mismatch, got {other:?}"),
        }
        assert!(err.to_string().contains("\"a\""));
    }

    #[test]
    fn params_parse_errors_carry_location() {
        let err = parse_params("{\"variant\": \"A1\",\n  \"k\": [1, }").unwrap_err();
        let msg = err.to_string();
        assert!(msg.starts_with("ParseError:"), "{msg}");
        assert!(msg.contains("line 2"), "{msg}");

        let err = parse_params(r#"{"variant": "A3", "k": [1], "a": [], "b": [1]}"#).unwrap_err();
        assert!(err.to_string().contains("UnknownVariant"));

        let err =
            parse_params(r#"{"variant": "A1", "k": [1.5], "a": [], "b": [1]}"#).unwrap_err();
        assert!(err.to_string().contains("exact"), "floats are rejected: {err}");
    }

    #[test]
    fn empty_matrix_file_is_a_parse_error() {
        let err = parse_matrix("  \n \n").unwrap_err();
        assert!(err.to_string().contains("empty"));
    }

    #[test]
    fn coordinate_format_is_unsupported() {
        let err = parse_matrix("%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 1.0\n")
            .unwrap_err();
        match &err {
            IoError::FormatUnsupported(msg) => assert!(msg.contains("coordinate")),
            other => panic!("expected FormatUnsupported, got {other:?}"),
        }
        let err =
            parse_matrix("%%MatrixMarket matrix array pattern general\n1 1\n1\n").unwrap_err();
        assert!(matches!(err, IoError::FormatUnsupported(_)));
    }

    #[test]
    fn matrix_market_round_trips_integers_exactly() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("inv.mtx");
        let written = write_matrix(&frozen_inverse(), &path, MatrixFormat::MatrixMarket).unwrap();
        assert_eq!(written.len(), 2, "mtx plus exact sidecar");
        assert_eq!(written[1], dir.path().join("inv.exact.csv"));

        let text = fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("%%MatrixMarket matrix array real general\n3 3\n"));
        // Column-major: first column is 2, -1, 0.
        let body: Vec<&str> = text.lines().skip(2).collect();
        assert_eq!(&body[..3], &["2", "-1", "0"]);

        assert_eq!(read_matrix(&path).unwrap(), frozen_inverse());
        assert_eq!(read_matrix(&written[1]).unwrap(), frozen_inverse());
    }

    #[test]
    fn sidecar_preserves_what_mm_rounds() {
        let third = Rational::new(1, 3).unwrap();
        let mut m = DenseMatrix::zeros(2);
        m[(0, 0)] = third.clone();
        m[(1, 1)] = Rational::from_int(1);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.mtx");
        let written = write_matrix(&m, &path, MatrixFormat::MatrixMarket).unwrap();
        let lossy = read_matrix(&path).unwrap();
        assert_ne!(lossy[(0, 0)], third, "1/3 cannot survive a decimal round-trip");
        assert!((lossy[(0, 0)].to_f64() - 1.0 / 3.0).abs() < 1e-15);
        let exact = read_matrix(&written[1]).unwrap();
        assert_eq!(exact, m);
    }

    #[test]
    fn f64_matrices_round_trip_through_both_formats() {
        let p = random_params(Variant::A1, 6, 99).unwrap().to_f64();
        let m = closed_form::inverse(&p).unwrap();
        let dir = tempfile::tempdir().unwrap();
        for (name, fmt) in [("m.mtx", MatrixFormat::MatrixMarket), ("m.csv", MatrixFormat::Csv)] {
            let path = dir.path().join(name);
            let written = write_matrix(&m, &path, fmt).unwrap();
            assert_eq!(written.len(), 1, "no sidecar for floats");
            let back = read_matrix(&path).unwrap().to_f64();
            assert_eq!(back, m, "shortest-round-trip decimals are lossless for f64");
        }
    }

    #[test]
    fn csv_parse_reports_line_and_field() {
        let err = parse_matrix("1,2\n3,x\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 2"), "{msg}");
        assert!(msg.contains("field 2"), "{msg}");

        let err = parse_matrix("1,2\n3\n").unwrap_err();
        assert!(err.to_string().contains("expected 2 fields"));

        let err = parse_matrix("1,2\n").unwrap_err();
        assert!(err.to_string().contains("square"));
    }

    #[test]
    fn dump_trace_writes_all_stages() {
        let p = parse_params(r#"{"variant": "A1", "k": [1, 2, 3], "a": [1, 1], "b": [1, 1, 1]}"#)
            .unwrap();
        let t = eliminate(&p).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("trace");
        let written = dump_trace(&t, &out).unwrap();
        // 4 stages × 2 sides × (mtx + exact sidecar).
        assert_eq!(written.len(), 16);
        for stage in 1..=4 {
            for side in ["working", "multiplier"] {
                assert!(out.join(format!("stage{stage}_{side}.mtx")).exists());
            }
        }
        let final_mult = read_matrix(&out.join("stage4_multiplier.exact.csv")).unwrap();
        assert_eq!(final_mult, closed_form::inverse(&p).unwrap());
    }
}
