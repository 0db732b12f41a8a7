//! Fixture files: the on-disk JSON schema and its translation to and from
//! core values.
//!
//! All indices in files are 1-based (matching how bases are written on
//! paper); the translation layer shifts to the crate's 0-based indexing
//! and back. Every scalar is an exact rational written as a string
//! (`"1/3"`, `"-2"`) or a JSON integer; floats are rejected outright, and
//! so are unknown keys, so a typo fails loudly instead of silently
//! validating something else.

use std::fmt;
use std::fs;
use std::path::Path;

use avleib_core::{
    format_rat, parse_rat, AveragingOperator, Convention, FormalIsomorphism, LeibnizAlgebra,
    Matrix, MultilinearMap, Rat, Representation, TruncatedDeformation,
};
use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

/// Largest algebra dimension a fixture may declare. Everything downstream
/// is exact, so the bound exists to keep enumeration and matrix sizes
/// within interactive reach, not for numerical reasons.
pub const MAX_FIXTURE_DIM: usize = 6;

/// A parse or consistency failure, with enough context to name the
/// offending entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ParseError {}

fn err(msg: impl Into<String>) -> ParseError {
    ParseError(msg.into())
}

/// An exact rational in a fixture: serialized as a canonical string,
/// accepted as a string or an integer.
#[derive(Debug, Clone, PartialEq)]
pub struct JsonRat(pub Rat);

impl Serialize for JsonRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for JsonRat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct RatVisitor;
        impl Visitor<'_> for RatVisitor {
            type Value = JsonRat;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational as a string like \"1/3\" or an integer")
            }

            fn visit_str<E: de::Error>(self, s: &str) -> Result<JsonRat, E> {
                parse_rat(s).map(JsonRat).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, n: i64) -> Result<JsonRat, E> {
                Ok(JsonRat(Rat::from_integer(n.into())))
            }

            fn visit_u64<E: de::Error>(self, n: u64) -> Result<JsonRat, E> {
                Ok(JsonRat(Rat::from_integer(n.into())))
            }

            fn visit_f64<E: de::Error>(self, n: f64) -> Result<JsonRat, E> {
                Err(E::custom(format!(
                    "floats are not exact; write {n} as a rational string"
                )))
            }
        }
        deserializer.deserialize_any(RatVisitor)
    }
}

// ---- algebra files ------------------------------------------------------

/// One nonzero structure constant: `[e_i, e_j] ∋ c·e_k`, 1-based.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: JsonRat,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dimension: usize,
    pub brackets: Vec<BracketEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convention: Option<String>,
}

// ---- operator / representation / deformation / isomorphism files --------

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorFile {
    pub matrix: Vec<Vec<JsonRat>>,
}

/// One nonzero action entry: matrix `which` (the algebra index, 1-based),
/// position (row, col) in the module, value c.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionEntry {
    pub which: usize,
    pub row: usize,
    pub col: usize,
    pub c: JsonRat,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationFile {
    pub mdim: usize,
    pub l: Vec<ActionEntry>,
    pub r: Vec<ActionEntry>,
    #[serde(rename = "thetaM", skip_serializing_if = "Option::is_none")]
    pub theta_m: Option<Vec<Vec<JsonRat>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationFile {
    pub order: usize,
    /// Bilinear coefficients per order, `mu[0]` being the base bracket.
    pub mu: Vec<Vec<BracketEntry>>,
    /// Operator coefficients per order, `theta[0]` being the base operator.
    pub theta: Vec<Vec<Vec<JsonRat>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsomorphismFile {
    pub order: usize,
    pub psi: Vec<Vec<Vec<JsonRat>>>,
}

// ---- loading and translation --------------------------------------------

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, ParseError> {
    let text = fs::read_to_string(path)
        .map_err(|e| err(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| err(format!("{}: {e}", path.display())))
}

fn shift(index: usize, bound: usize, what: &str) -> Result<usize, ParseError> {
    if index == 0 || index > bound {
        return Err(err(format!(
            "{what} = {index} is out of range 1..={bound}"
        )));
    }
    Ok(index - 1)
}

fn check_dimension(dim: usize) -> Result<(), ParseError> {
    if dim == 0 || dim > MAX_FIXTURE_DIM {
        return Err(err(format!(
            "dimension {dim} is out of the supported range 1..={MAX_FIXTURE_DIM}"
        )));
    }
    Ok(())
}

fn matrix_from_file(rows: &[Vec<JsonRat>], what: &str) -> Result<Matrix<Rat>, ParseError> {
    let data: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.0.clone()).collect())
        .collect();
    Matrix::from_rows(data).map_err(|e| err(format!("{what}: {e}")))
}

fn matrix_to_file(m: &Matrix<Rat>) -> Vec<Vec<JsonRat>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| JsonRat(x.clone())).collect())
        .collect()
}

fn brackets_to_entries(
    entries: &[BracketEntry],
    dim: usize,
    what: &str,
) -> Result<Vec<(usize, usize, usize, Rat)>, ParseError> {
    entries
        .iter()
        .enumerate()
        .map(|(pos, e)| {
            Ok((
                shift(e.i, dim, &format!("{what}[{pos}].i"))?,
                shift(e.j, dim, &format!("{what}[{pos}].j"))?,
                shift(e.k, dim, &format!("{what}[{pos}].k"))?,
                e.c.0.clone(),
            ))
        })
        .collect()
}

/// Parsed algebra fixture: the algebra plus the file's convention request,
/// if any.
#[derive(Debug)]
pub struct AlgebraFixture {
    pub algebra: LeibnizAlgebra<Rat>,
    pub convention: Option<Convention>,
}

pub fn load_algebra(path: &Path) -> Result<AlgebraFixture, ParseError> {
    let file: AlgebraFile = read_json(path)?;
    check_dimension(file.dimension)?;
    let convention = match file.convention.as_deref() {
        None => None,
        Some("left") => Some(Convention::Left),
        Some("right") => Some(Convention::Right),
        Some(other) => {
            return Err(err(format!(
                "convention must be \"left\" or \"right\", not {other:?}"
            )))
        }
    };
    let entries = brackets_to_entries(&file.brackets, file.dimension, "brackets")?;
    let algebra = LeibnizAlgebra::from_entries(file.dimension, &entries)
        .map_err(|e| err(e.to_string()))?;
    Ok(AlgebraFixture { algebra, convention })
}

pub fn algebra_to_file(a: &LeibnizAlgebra<Rat>, convention: Option<Convention>) -> AlgebraFile {
    let mut brackets = Vec::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            for (k, c) in a.bracket_basis(i, j).iter().enumerate() {
                if !num_traits::Zero::is_zero(c) {
                    brackets.push(BracketEntry {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                        c: JsonRat(c.clone()),
                    });
                }
            }
        }
    }
    AlgebraFile {
        dimension: a.dim(),
        brackets,
        convention: convention.map(|c| {
            match c {
                Convention::Left => "left",
                Convention::Right => "right",
            }
            .to_string()
        }),
    }
}

pub fn load_operator(path: &Path, dim: usize) -> Result<AveragingOperator<Rat>, ParseError> {
    let file: OperatorFile = read_json(path)?;
    let m = matrix_from_file(&file.matrix, "matrix")?;
    if m.rows() != dim || m.cols() != dim {
        return Err(err(format!(
            "operator is {}x{} but the algebra has dimension {dim}",
            m.rows(),
            m.cols()
        )));
    }
    AveragingOperator::new(m).map_err(|e| err(e.to_string()))
}

pub fn load_representation(
    path: &Path,
    gdim: usize,
) -> Result<Representation<Rat>, ParseError> {
    let file: RepresentationFile = read_json(path)?;
    if file.mdim == 0 || file.mdim > MAX_FIXTURE_DIM {
        return Err(err(format!(
            "mdim {} is out of the supported range 1..={MAX_FIXTURE_DIM}",
            file.mdim
        )));
    }
    let mut l = vec![Matrix::zero(file.mdim, file.mdim); gdim];
    let mut r = vec![Matrix::zero(file.mdim, file.mdim); gdim];
    for (side, entries, mats) in [("l", &file.l, &mut l), ("r", &file.r, &mut r)] {
        for (pos, e) in entries.iter().enumerate() {
            let which = shift(e.which, gdim, &format!("{side}[{pos}].which"))?;
            let row = shift(e.row, file.mdim, &format!("{side}[{pos}].row"))?;
            let col = shift(e.col, file.mdim, &format!("{side}[{pos}].col"))?;
            mats[which].set(row, col, e.c.0.clone());
        }
    }
    let theta_m = match &file.theta_m {
        None => None,
        Some(rows) => {
            let m = matrix_from_file(rows, "thetaM")?;
            if m.rows() != file.mdim || m.cols() != file.mdim {
                return Err(err(format!(
                    "thetaM is {}x{} but mdim is {}",
                    m.rows(),
                    m.cols(),
                    file.mdim
                )));
            }
            Some(m)
        }
    };
    Representation::new(gdim, file.mdim, l, r, theta_m).map_err(|e| err(e.to_string()))
}

/// Loads a deformation over a given base, checking that the file's
/// order-0 coefficients reproduce the base exactly.
pub fn load_deformation(
    path: &Path,
    base_algebra: &LeibnizAlgebra<Rat>,
    base_operator: &AveragingOperator<Rat>,
) -> Result<TruncatedDeformation<Rat>, ParseError> {
    let file: DeformationFile = read_json(path)?;
    let g = base_algebra.dim();
    if file.mu.len() != file.order + 1 || file.theta.len() != file.order + 1 {
        return Err(err(format!(
            "order is {} but mu has {} entries and theta has {}",
            file.order,
            file.mu.len(),
            file.theta.len()
        )));
    }
    let mut mus = Vec::new();
    for (n, entries) in file.mu.iter().enumerate() {
        let mut map = MultilinearMap::<Rat>::zero(2, g, g).map_err(|e| err(e.to_string()))?;
        for (i, j, k, c) in brackets_to_entries(entries, g, &format!("mu[{n}]"))? {
            let current = map.eval(&[i, j]).map_err(|e| err(e.to_string()))?[k].clone();
            map.set(&[i, j], k, current + c).map_err(|e| err(e.to_string()))?;
        }
        mus.push(map);
    }
    let mut thetas = Vec::new();
    for (n, rows) in file.theta.iter().enumerate() {
        let m = matrix_from_file(rows, &format!("theta[{n}]"))?;
        if m.rows() != g || m.cols() != g {
            return Err(err(format!(
                "theta[{n}] is {}x{} but the algebra has dimension {g}",
                m.rows(),
                m.cols()
            )));
        }
        thetas.push(m);
    }
    let base_mu =
        avleib_core::bracket_cochain(base_algebra).map_err(|e| err(e.to_string()))?;
    if mus[0] != base_mu {
        return Err(err(
            "mu[0] does not match the base algebra's structure constants",
        ));
    }
    if &thetas[0] != base_operator.matrix() {
        return Err(err("theta[0] does not match the base operator"));
    }
    TruncatedDeformation::new(mus, thetas).map_err(|e| err(e.to_string()))
}

pub fn load_isomorphism(path: &Path, dim: usize) -> Result<FormalIsomorphism<Rat>, ParseError> {
    let file: IsomorphismFile = read_json(path)?;
    if file.psi.len() != file.order + 1 {
        return Err(err(format!(
            "order is {} but psi has {} entries",
            file.order,
            file.psi.len()
        )));
    }
    let mut psis = Vec::new();
    for (n, rows) in file.psi.iter().enumerate() {
        let m = matrix_from_file(rows, &format!("psi[{n}]"))?;
        if m.rows() != dim || m.cols() != dim {
            return Err(err(format!(
                "psi[{n}] is {}x{} but the algebra has dimension {dim}",
                m.rows(),
                m.cols()
            )));
        }
        psis.push(m);
    }
    FormalIsomorphism::new(psis).map_err(|e| err(e.to_string()))
}

pub fn operator_to_file(t: &AveragingOperator<Rat>) -> OperatorFile {
    OperatorFile {
        matrix: matrix_to_file(t.matrix()),
    }
}
