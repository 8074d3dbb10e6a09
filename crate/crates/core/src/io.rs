//! JSON documents. Rationals are strings (`"p"` or `"p/q"`), matrices are
//! row-major grids whose column `j` is the image of basis vector `j`, and
//! every document carries `"format": 1`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{HomLieAlgebra, StructureTensor};
use crate::error::{Error, Result};
use crate::linalg::{format_rat, parse_rat, Mat, Rat, Vector};
use crate::report::{CheckReport, Outcome, Witness};

pub const FORMAT: u32 = 1;

pub type Grid = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    /// `(k, c)`: `[e_i, e_j]` has coefficient `c` on `e_k`.
    pub coeffs: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub format: u32,
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub bracket: Vec<BracketEntry>,
    /// Absent means the identity.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<Grid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Grid>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub format: u32,
    pub rows: usize,
    pub cols: usize,
    pub entries: Grid,
}

/// A family of square matrices, such as the action of each basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixListDocument {
    pub format: u32,
    pub matrices: Vec<Grid>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDocument {
    pub indices: Vec<usize>,
    pub defect: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDocument {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDocument>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub format: u32,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub checks: Vec<CheckDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outputs: Option<Value>,
}

impl ReportDocument {
    pub fn new(command: impl Into<String>, inputs: Vec<InputDigest>, report: &CheckReport) -> Self {
        ReportDocument {
            format: FORMAT,
            command: command.into(),
            inputs,
            checks: report.checks.iter().map(check_document).collect(),
            outputs: None,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check_document(check: &crate::report::Check) -> CheckDocument {
    let (passed, skipped, witness) = match &check.outcome {
        Outcome::Pass => (true, None, None),
        Outcome::Skip(reason) => (true, Some(reason.clone()), None),
        Outcome::Fail(w) => (false, None, Some(witness_document(w))),
    };
    CheckDocument { name: check.name.clone(), passed, skipped, witness }
}

pub fn witness_document(w: &Witness) -> WitnessDocument {
    WitnessDocument { indices: w.indices.clone(), defect: w.defect.iter().map(format_rat).collect() }
}

pub fn vector_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

pub fn grid_of(m: &Mat) -> Grid {
    m.row_vectors().iter().map(|r| vector_strings(r)).collect()
}

pub fn mat_of_grid(grid: &Grid, rows: usize, cols: usize, what: &str) -> Result<Mat> {
    if grid.len() != rows {
        return Err(Error::Parse(format!("{what}: expected {rows} rows, found {}", grid.len())));
    }
    let mut parsed = Vec::with_capacity(rows);
    for (r, row) in grid.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::Parse(format!("{what}: row {r} has {} entries, expected {cols}", row.len())));
        }
        parsed.push(parse_vector(row)?);
    }
    Mat::from_rows(cols, parsed)
}

pub fn parse_vector<S: AsRef<str>>(items: &[S]) -> Result<Vector> {
    items.iter().map(|s| parse_rat(s.as_ref().trim())).collect()
}

fn check_format(format: u32) -> Result<()> {
    if format != FORMAT {
        return Err(Error::Parse(format!("unsupported format {format}, expected {FORMAT}")));
    }
    Ok(())
}

fn from_json<'a, T: Deserialize<'a>>(bytes: &'a [u8]) -> Result<T> {
    serde_json::from_slice(bytes).map_err(|e| Error::Parse(e.to_string()))
}

/// Canonical JSON: keys sorted, two-space indent, arrays of scalars on one
/// line, trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("documents serialize");
    let mut out = String::new();
    write_value(&mut out, &value, 0);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |out: &mut String, d: usize| out.extend(std::iter::repeat_n("  ", d));
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(is_scalar) => {
            out.push('[');
            for (i, x) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&x.to_string());
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                pad(out, depth + 1);
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                pad(out, depth + 1);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

impl AlgebraDocument {
    pub fn to_algebra(&self) -> Result<HomLieAlgebra> {
        check_format(self.format)?;
        let n = self.dim;
        if self.basis.len() != n {
            return Err(Error::Parse(format!("basis has {} names, expected {n}", self.basis.len())));
        }
        let mut bracket = StructureTensor::zero(n);
        let mut seen = std::collections::BTreeSet::new();
        for entry in &self.bracket {
            let (i, j) = (entry.i, entry.j);
            if i >= j || j >= n {
                return Err(Error::Parse(format!("bracket entry ({i}, {j}) needs i < j < {n}")));
            }
            if !seen.insert((i, j)) {
                return Err(Error::Parse(format!("bracket entry ({i}, {j}) appears twice")));
            }
            let mut terms = Vec::with_capacity(entry.coeffs.len());
            for (k, c) in &entry.coeffs {
                if *k >= n {
                    return Err(Error::Parse(format!("bracket entry ({i}, {j}): index {k} out of range")));
                }
                terms.push((*k, parse_rat(c)?));
            }
            // repeated k accumulate
            let mut v = vec![Rat::default(); n];
            for (k, c) in terms {
                v[k] += c;
            }
            bracket.set(i, j, v)?;
        }
        let twist = match &self.twist {
            Some(g) => mat_of_grid(g, n, n, "twist")?,
            None => Mat::identity(n),
        };
        let form = match &self.form {
            Some(g) => {
                let b = mat_of_grid(g, n, n, "form")?;
                if !b.is_symmetric() {
                    let (r, c) = (0..n)
                        .flat_map(|r| (0..n).map(move |c| (r, c)))
                        .find(|&(r, c)| b[(r, c)] != b[(c, r)])
                        .expect("asymmetric");
                    return Err(Error::Parse(format!("asymmetric form: entry ({r}, {c}) differs from ({c}, {r})")));
                }
                Some(b)
            }
            None => None,
        };
        HomLieAlgebra::new(self.name.clone(), self.basis.clone(), bracket, twist, form)
    }

    /// Canonical document: entries sorted, zero coefficients dropped, twist
    /// always written.
    pub fn from_algebra(a: &HomLieAlgebra) -> Self {
        let n = a.dim();
        let mut bracket = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let coeffs: Vec<(usize, String)> = a
                    .bracket()
                    .stored(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(k, c)| (k, format_rat(c)))
                    .collect();
                if !coeffs.is_empty() {
                    bracket.push(BracketEntry { i, j, coeffs });
                }
            }
        }
        AlgebraDocument {
            format: FORMAT,
            name: a.name().to_string(),
            dim: n,
            basis: a.basis_names().to_vec(),
            bracket,
            twist: Some(grid_of(a.twist())),
            form: a.form().map(grid_of),
        }
    }
}

impl MatrixDocument {
    pub fn new(m: &Mat) -> Self {
        MatrixDocument { format: FORMAT, rows: m.rows(), cols: m.cols(), entries: grid_of(m) }
    }

    pub fn to_mat(&self) -> Result<Mat> {
        check_format(self.format)?;
        mat_of_grid(&self.entries, self.rows, self.cols, "matrix")
    }
}

impl MatrixListDocument {
    pub fn new(ms: &[Mat]) -> Self {
        MatrixListDocument { format: FORMAT, matrices: ms.iter().map(grid_of).collect() }
    }

    /// Each matrix must be `dim x dim`.
    pub fn to_mats(&self, dim: usize) -> Result<Vec<Mat>> {
        check_format(self.format)?;
        self.matrices.iter().map(|g| mat_of_grid(g, dim, dim, "matrix")).collect()
    }
}

pub fn parse_algebra(bytes: &[u8]) -> Result<HomLieAlgebra> {
    from_json::<AlgebraDocument>(bytes)?.to_algebra()
}

pub fn serialize_algebra(a: &HomLieAlgebra) -> String {
    to_json(&AlgebraDocument::from_algebra(a))
}

pub fn parse_matrix(bytes: &[u8]) -> Result<Mat> {
    from_json::<MatrixDocument>(bytes)?.to_mat()
}

pub fn serialize_matrix(m: &Mat) -> String {
    to_json(&MatrixDocument::new(m))
}

pub fn parse_matrix_list(bytes: &[u8], dim: usize) -> Result<Vec<Mat>> {
    from_json::<MatrixListDocument>(bytes)?.to_mats(dim)
}

pub fn serialize_matrix_list(ms: &[Mat]) -> String {
    to_json(&MatrixListDocument::new(ms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example_one_dim, example_sl2};
    use crate::linalg::{frac, int};

    #[test]
    fn minimal_document() {
        let a = parse_algebra(br#"{"format": 1, "name": "e", "dim": 1, "basis": ["e"], "bracket": []}"#).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(a.bracket().is_abelian());
        assert_eq!(a.twist(), &Mat::identity(1));
        assert!(a.form().is_none());
    }

    #[test]
    fn round_trips() {
        for a in [example_sl2(int(1)), example_sl2(frac(-3, 4)), example_one_dim()] {
            let text = serialize_algebra(&a);
            let back = parse_algebra(text.as_bytes()).unwrap();
            assert_eq!(back, a);
            assert_eq!(serialize_algebra(&back), text);
        }
    }

    #[test]
    fn shipped_documents_match_constructors() {
        let sl2 = include_str!("../../../data/sl2_example.json");
        assert_eq!(parse_algebra(sl2.as_bytes()).unwrap(), example_sl2(int(1)));
        assert_eq!(serialize_algebra(&example_sl2(int(1))), sl2);
        let one = include_str!("../../../data/one_dim_example.json");
        assert_eq!(parse_algebra(one.as_bytes()).unwrap(), example_one_dim());
    }

    #[test]
    fn rejects_bad_documents() {
        let asym = br#"{"format": 1, "name": "a", "dim": 2, "basis": ["a", "b"], "bracket": [],
            "form": [["1", "1"], ["0", "1"]]}"#;
        let err = parse_algebra(asym).unwrap_err().to_string();
        assert!(err.contains("asymmetric form"), "{err}");
        let order = br#"{"format": 1, "name": "a", "dim": 2, "basis": ["a", "b"],
            "bracket": [{"i": 1, "j": 0, "coeffs": []}]}"#;
        assert!(parse_algebra(order).is_err());
        let range = br#"{"format": 1, "name": "a", "dim": 2, "basis": ["a", "b"],
            "bracket": [{"i": 0, "j": 1, "coeffs": [[2, "1"]]}]}"#;
        assert!(parse_algebra(range).is_err());
        let rat = br#"{"format": 1, "name": "a", "dim": 2, "basis": ["a", "b"],
            "bracket": [{"i": 0, "j": 1, "coeffs": [[0, "1/0"]]}]}"#;
        assert!(parse_algebra(rat).is_err());
        assert!(parse_algebra(b"{not json").is_err());
        let version = br#"{"format": 2, "name": "e", "dim": 1, "basis": ["e"], "bracket": []}"#;
        assert!(parse_algebra(version).is_err());
    }

    #[test]
    fn matrices_round_trip() {
        let m = Mat::from_fn(2, 3, |r, c| frac(r as i64 - c as i64, 3));
        assert_eq!(parse_matrix(serialize_matrix(&m).as_bytes()).unwrap(), m);
        let ms = vec![Mat::identity(2), Mat::zeros(2, 2)];
        assert_eq!(parse_matrix_list(serialize_matrix_list(&ms).as_bytes(), 2).unwrap(), ms);
        assert!(parse_matrix_list(serialize_matrix_list(&ms).as_bytes(), 3).is_err());
    }
}
