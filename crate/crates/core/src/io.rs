//! Text formats: algebra definition files, additive system files and
//! whitespace-separated fraction matrices.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::additive::{parse_complex, ComplexAdditiveMap, MapMatrix};
use crate::algebra::{AlgElement, AlgebraKind, FreeAlgebra};
use crate::builtin::{complex_algebra, octonion_algebra, quaternion_algebra, QuaternionParams};
use crate::error::{Error, Result};
use crate::linmap::LinearMap;
use crate::matrix::Matrix;
use crate::rational::Rational;

/// JSON form of an algebra: `{"dim", "labels", "unit"?, "constants": [[i, j, k, "p/q"], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<usize>,
    pub constants: Vec<(usize, usize, usize, Rational)>,
}

impl AlgebraFile {
    pub fn from_algebra(alg: &FreeAlgebra) -> Self {
        AlgebraFile {
            dim: alg.dim(),
            labels: alg.labels().to_vec(),
            unit: alg.unit_index(),
            constants: alg.constants().to_vec(),
        }
    }

    pub fn to_algebra(&self) -> Result<FreeAlgebra> {
        FreeAlgebra::new(self.dim, self.labels.clone(), self.constants.clone(), self.unit)
    }

    pub fn to_json(&self) -> String {
        let mut s = String::from("{\n");
        s += &format!("  \"dim\": {},\n", self.dim);
        s += &format!("  \"labels\": {},\n", serde_json::to_string(&self.labels).expect("strings serialize"));
        if let Some(u) = self.unit {
            s += &format!("  \"unit\": {u},\n");
        }
        s += "  \"constants\": [";
        for (n, (i, j, k, v)) in self.constants.iter().enumerate() {
            s += if n == 0 { "\n" } else { ",\n" };
            s += &format!("    [{i}, {j}, {k}, \"{v}\"]");
        }
        s += "\n  ]\n}\n";
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("algebra file: {e}")))
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Resolves a built-in name, falling back to an algebra file path.
///
/// Names: `complex`/`C`, `quaternion`/`E` (with `a`, `b`, default Hamilton),
/// `hamilton`/`H`, `octonion`/`O`.
pub fn load_algebra(spec: &str, a: Option<Rational>, b: Option<Rational>) -> Result<FreeAlgebra> {
    if let Some(alg) = builtin_algebra(spec, a, b)? {
        return Ok(alg);
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(Error::Parse(format!("`{spec}` is neither a built-in algebra nor a file")));
    }
    AlgebraFile::parse(&read(path)?)?.to_algebra()
}

pub fn builtin_algebra(name: &str, a: Option<Rational>, b: Option<Rational>) -> Result<Option<FreeAlgebra>> {
    let params = |a: Option<Rational>, b: Option<Rational>| {
        QuaternionParams::new(a.unwrap_or_else(|| Rational::from(-1)), b.unwrap_or_else(|| Rational::from(-1)))
    };
    Ok(Some(match name {
        "complex" | "C" => complex_algebra(),
        "quaternion" | "E" => quaternion_algebra(&params(a, b)?),
        "hamilton" | "H" => quaternion_algebra(&params(None, None)?),
        "octonion" | "O" => octonion_algebra(),
        _ => return Ok(None),
    }))
}

/// Rows of fraction strings separated by whitespace; blank lines and `#` comments are skipped.
pub fn parse_matrix_text(text: &str) -> Result<Matrix> {
    let rows: Vec<Vec<Rational>> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| l.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    if rows.is_empty() {
        return Err(Error::Parse("empty matrix".into()));
    }
    checked_rows(rows)
}

fn checked_rows(rows: Vec<Vec<Rational>>) -> Result<Matrix> {
    let cols = rows.first().map_or(0, Vec::len);
    if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
        return Err(Error::Parse(format!("row {} has {} entries, expected {cols}", bad + 1, rows[bad].len())));
    }
    Ok(Matrix::from_rows(rows))
}

pub fn read_matrix_file(path: &Path) -> Result<Matrix> {
    parse_matrix_text(&read(path)?)
}

pub fn format_matrix_text(m: &Matrix) -> String {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ") + "\n")
        .collect()
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum EntryDesc {
    Complex(String),
    Coords(Vec<Vec<Rational>>),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum ElementDesc {
    Complex(String),
    Coords(Vec<Rational>),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemFile {
    algebra: String,
    #[serde(default)]
    a: Option<Rational>,
    #[serde(default)]
    b: Option<Rational>,
    #[serde(default)]
    variables: Option<Vec<String>>,
    matrix: Vec<Vec<EntryDesc>>,
    rhs: Vec<ElementDesc>,
}

/// A square system `sum_j M[i][j](x_j) = rhs_i`.
#[derive(Debug, Clone)]
pub struct AdditiveSystem {
    pub algebra: FreeAlgebra,
    pub variables: Vec<String>,
    pub matrix: MapMatrix,
    pub rhs: Vec<AlgElement>,
}

fn is_complex(alg: &FreeAlgebra) -> bool {
    matches!(alg.kind(), AlgebraKind::Complex)
}

fn entry_map(alg: &FreeAlgebra, e: &EntryDesc, at: (usize, usize)) -> Result<LinearMap> {
    let place = |e: Error| Error::Parse(format!("matrix entry ({}, {}): {e}", at.0 + 1, at.1 + 1));
    match e {
        EntryDesc::Complex(s) if is_complex(alg) => {
            let f: ComplexAdditiveMap = s.parse().map_err(place)?;
            LinearMap::endo(alg, f.to_matrix())
        }
        EntryDesc::Complex(_) => Err(place(Error::Parse("string entries need the complex algebra".into()))),
        EntryDesc::Coords(rows) => LinearMap::endo(alg, checked_rows(rows.clone()).map_err(place)?).map_err(place),
    }
}

fn element(alg: &FreeAlgebra, e: &ElementDesc, at: usize) -> Result<AlgElement> {
    let place = |e: Error| Error::Parse(format!("rhs entry {}: {e}", at + 1));
    match e {
        ElementDesc::Complex(s) if is_complex(alg) => {
            AlgElement::new(alg, parse_complex(s).map_err(place)?.into_coords()).map_err(place)
        }
        ElementDesc::Complex(_) => Err(place(Error::Parse("string elements need the complex algebra".into()))),
        ElementDesc::Coords(v) => AlgElement::new(alg, v.clone()).map_err(place),
    }
}

impl AdditiveSystem {
    pub fn parse(text: &str, base: Option<&Path>) -> Result<Self> {
        let file: SystemFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("system file: {e}")))?;
        let algebra = match builtin_algebra(&file.algebra, file.a.clone(), file.b.clone())? {
            Some(a) => a,
            None => {
                let p = base.map_or_else(|| Path::new(&file.algebra).to_path_buf(), |b| b.join(&file.algebra));
                load_algebra(&p.to_string_lossy(), None, None)?
            }
        };
        let n = file.matrix.len();
        if n == 0 {
            return Err(Error::Parse("system has no equations".into()));
        }
        let rows = file
            .matrix
            .iter()
            .enumerate()
            .map(|(r, row)| {
                if row.len() != n {
                    return Err(Error::Parse(format!("row {} has {} entries; the system must be square ({n})", r + 1, row.len())));
                }
                row.iter().enumerate().map(|(c, e)| entry_map(&algebra, e, (r, c))).collect()
            })
            .collect::<Result<Vec<Vec<_>>>>()?;
        if file.rhs.len() != n {
            return Err(Error::Parse(format!("rhs has {} entries, expected {n}", file.rhs.len())));
        }
        let rhs = file.rhs.iter().enumerate().map(|(i, e)| element(&algebra, e, i)).collect::<Result<_>>()?;
        let variables = match file.variables {
            Some(v) if v.len() == n => v,
            Some(v) => return Err(Error::Parse(format!("{} variable names for {n} unknowns", v.len()))),
            None => (1..=n).map(|i| format!("x{i}")).collect(),
        };
        let matrix = MapMatrix::from_rows(&algebra, rows)?;
        Ok(AdditiveSystem { algebra, variables, matrix, rhs })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&read(path)?, path.parent())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::additive::solve_additive;
    use crate::rational::q;

    #[test]
    fn algebra_file_round_trip() {
        let o = octonion_algebra();
        let text = AlgebraFile::from_algebra(&o).to_json();
        let back = AlgebraFile::parse(&text).unwrap().to_algebra().unwrap();
        assert_eq!(back, o);
    }

    #[test]
    fn quaternion_params_reach_the_table() {
        let e = load_algebra("quaternion", Some(q(2, 1)), Some(q(-3, 1))).unwrap();
        let i = AlgElement::basis(&e, 1);
        assert_eq!((&i * &i).coords()[0], q(2, 1));
    }

    #[test]
    fn matrix_text() {
        let m = parse_matrix_text("1 -1/2\n# c\n\n0 3\n").unwrap();
        assert_eq!(m[(0, 1)], q(-1, 2));
        assert_eq!(parse_matrix_text(&format_matrix_text(&m)).unwrap(), m);
        assert!(parse_matrix_text("1 2\n3").is_err());
        assert!(parse_matrix_text("1 x").is_err());
    }

    #[test]
    fn worked_system_file() {
        let text = r#"{"algebra": "complex", "variables": ["z", "w"],
            "matrix": [["1", "2*I"], ["1", "-3"]], "rhs": ["1", "i"]}"#;
        let sys = AdditiveSystem::parse(text, None).unwrap();
        let x = solve_additive(&sys.matrix, &sys.rhs).unwrap();
        assert_eq!(x[0].to_string(), "3/5 - 2i");
        assert_eq!(x[1].to_string(), "1/5 - i");
    }

    #[test]
    fn coordinate_entries() {
        let text = r#"{"algebra": "H", "matrix": [[[["2","0","0","0"],["0","2","0","0"],["0","0","2","0"],["0","0","0","2"]]]],
            "rhs": [["4", "0", "2", "0"]]}"#;
        let sys = AdditiveSystem::parse(text, None).unwrap();
        let x = solve_additive(&sys.matrix, &sys.rhs).unwrap();
        assert_eq!(x[0].coords(), &[q(2, 1), q(0, 1), q(1, 1), q(0, 1)]);
    }

    #[test]
    fn bad_systems() {
        assert!(AdditiveSystem::parse(r#"{"algebra": "C", "matrix": [["1", "2"]], "rhs": ["1"]}"#, None).is_err());
        assert!(AdditiveSystem::parse(r#"{"algebra": "H", "matrix": [["1"]], "rhs": ["1"]}"#, None).is_err());
        assert!(AdditiveSystem::parse(r#"{"algebra": "nowhere.json", "matrix": [["1"]], "rhs": ["1"]}"#, None).is_err());
    }
}
