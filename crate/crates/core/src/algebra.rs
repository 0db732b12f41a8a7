//! Leibniz algebras given by structure constants, averaging operators,
//! the axiom validators, the induced brackets, and morphism checking.
//!
//! All validators enumerate basis tuples; multilinearity makes that a
//! complete check. Reports carry the first failing tuple per identity in
//! lexicographic order plus a total failure count.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{MorphismReport, ValidationReport, WitnessCollector};
use crate::scalar::Scalar;

/// Which Leibniz identity a bracket is measured against.
///
/// `Left` requires `[u,[v,w]] = [[u,v],w] + [v,[u,w]]`; `Right` requires
/// `[[u,v],w] = [[u,w],v] + [u,[v,w]]`. A Lie bracket satisfies both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    #[default]
    Left,
    Right,
}

/// Which bracket an averaging operator induces.
///
/// `Strict` is the left-lift `[u,v]* = [θu, v]`, the variant for which the
/// left Leibniz identity is provable from the averaging condition. `Sum` is
/// `[θu, v] + [u, θv]`, the combination the operator cochain differential
/// expands over. The two agree whenever `[θu, v] = [u, θv]` holds, which is
/// an audited claim rather than an assumption.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InducedMode {
    #[default]
    Strict,
    Sum,
}

/// A finite-dimensional algebra with bilinear bracket, stored as structure
/// constants: `c[i][j][k]` is the `e_k` coordinate of `[e_i, e_j]`.
///
/// Indices are 0-based throughout the library; the file formats accepted by
/// the CLI are 1-based and converted at the boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct LeibnizAlgebra<S> {
    dim: usize,
    /// Flat `g³` array, index `(i·g + j)·g + k`.
    c: Vec<S>,
}

impl<S: Scalar> LeibnizAlgebra<S> {
    pub fn zero(dim: usize) -> Self {
        LeibnizAlgebra {
            dim,
            c: vec![S::zero(); dim * dim * dim],
        }
    }

    /// Build from sparse entries `(i, j, k, coeff)` meaning `[e_i, e_j]`
    /// contains `coeff·e_k`. Repeated `(i, j, k)` entries accumulate.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, S)]) -> Result<Self> {
        let mut a = LeibnizAlgebra::<S>::zero(dim);
        for (i, j, k, v) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::invalid(format!(
                    "structure constant index ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            let idx = (i * dim + j) * dim + k;
            a.c[idx] = a.c[idx].clone() + v.clone();
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &S {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[S] {
        let off = (i * self.dim + j) * self.dim;
        &self.c[off..off + self.dim]
    }

    /// `[e_i, v]` for a coordinate vector `v`.
    pub fn bracket_left_basis(&self, i: usize, v: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for (j, x) in v.iter().enumerate() {
            if !x.is_zero() {
                accumulate(&mut out, self.bracket_basis(i, j), x);
            }
        }
        out
    }

    /// `[v, e_j]` for a coordinate vector `v`.
    pub fn bracket_right_basis(&self, v: &[S], j: usize) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                accumulate(&mut out, self.bracket_basis(i, j), x);
            }
        }
        out
    }

    /// Bilinear bracket of two coordinate vectors.
    pub fn bracket(&self, u: &[S], v: &[S]) -> Result<Vec<S>> {
        if u.len() != self.dim || v.len() != self.dim {
            return Err(Error::invalid(format!(
                "bracket arguments of length {} and {} against dimension {}",
                u.len(),
                v.len(),
                self.dim
            )));
        }
        let mut out = vec![S::zero(); self.dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let coeff = a.clone() * b.clone();
                accumulate(&mut out, self.bracket_basis(i, j), &coeff);
            }
        }
        Ok(out)
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
}

/// Adds `coeff · row` into `out` coordinatewise.
fn accumulate<S: Scalar>(out: &mut [S], row: &[S], coeff: &S) {
    for (o, r) in out.iter_mut().zip(row) {
        if !r.is_zero() {
            *o = o.clone() + coeff.clone() * r.clone();
        }
    }
}

/// A linear operator on the algebra, kept separate from plain matrices so
/// signatures say which argument is the candidate averaging operator.
#[derive(Debug, Clone, PartialEq)]
pub struct AveragingOperator<S> {
    matrix: Matrix<S>,
}

impl<S: Scalar> AveragingOperator<S> {
    pub fn new(matrix: Matrix<S>) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::invalid(format!(
                "operator matrix must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(AveragingOperator { matrix })
    }

    pub fn zero(dim: usize) -> Self {
        AveragingOperator {
            matrix: Matrix::zero(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        AveragingOperator {
            matrix: Matrix::identity(dim),
        }
    }

    pub fn diagonal(entries: &[S]) -> Self {
        AveragingOperator {
            matrix: Matrix::diagonal(entries),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    /// Image of the basis vector `e_i`, i.e. column `i` of the matrix.
    pub fn apply_basis(&self, i: usize) -> Vec<S> {
        self.matrix.col(i)
    }

    pub fn apply(&self, v: &[S]) -> Result<Vec<S>> {
        self.matrix.apply(v)
    }
}

/// Checks the chosen Leibniz identity on all `g³` basis triples. Witness
/// residuals are left-hand side minus right-hand side; the tag is `"left"`
/// or `"right"` after the convention.
pub fn validate_leibniz<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    conv: Convention,
) -> ValidationReport<S> {
    let g = a.dim();
    let tag = match conv {
        Convention::Left => "left",
        Convention::Right => "right",
    };
    let mut out = WitnessCollector::new();
    for i in 0..g {
        for j in 0..g {
            for k in 0..g {
                let residual = match conv {
                    // [e_i,[e_j,e_k]] − [[e_i,e_j],e_k] − [e_j,[e_i,e_k]]
                    Convention::Left => sub3(
                        a.bracket_left_basis(i, a.bracket_basis(j, k)),
                        a.bracket_right_basis(a.bracket_basis(i, j), k),
                        a.bracket_left_basis(j, a.bracket_basis(i, k)),
                    ),
                    // [[e_i,e_j],e_k] − [[e_i,e_k],e_j] − [e_i,[e_j,e_k]]
                    Convention::Right => sub3(
                        a.bracket_right_basis(a.bracket_basis(i, j), k),
                        a.bracket_right_basis(a.bracket_basis(i, k), j),
                        a.bracket_left_basis(i, a.bracket_basis(j, k)),
                    ),
                };
                if !residual.iter().all(|x| x.is_zero()) {
                    out.record(tag, vec![i, j, k], residual);
                }
            }
        }
    }
    out.finish()
}

fn sub3<S: Scalar>(lhs: Vec<S>, m1: Vec<S>, m2: Vec<S>) -> Vec<S> {
    lhs.into_iter()
        .zip(m1)
        .zip(m2)
        .map(|((a, b), c)| a - b - c)
        .collect()
}

/// Checks `[θu, θv] = θ[θu, v] = θ[u, θv]` on all basis pairs. The two
/// equalities are recorded separately: tag `"avg-left"` compares against
/// `θ[θu, v]` and `"avg-right"` against `θ[u, θv]`. The bracket is not
/// required to satisfy any Leibniz identity.
pub fn validate_averaging<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    t: &AveragingOperator<S>,
) -> Result<ValidationReport<S>> {
    if t.dim() != a.dim() {
        return Err(Error::invalid(format!(
            "operator of dimension {} on algebra of dimension {}",
            t.dim(),
            a.dim()
        )));
    }
    let g = a.dim();
    let mut out = WitnessCollector::new();
    for i in 0..g {
        for j in 0..g {
            let ti = t.apply_basis(i);
            let tj = t.apply_basis(j);
            let lhs = a.bracket(&ti, &tj)?;
            let mid = t.apply(&a.bracket_right_basis(&ti, j))?;
            let rhs = t.apply(&a.bracket_left_basis(i, &tj))?;
            let d_mid: Vec<S> = lhs.iter().zip(&mid).map(|(x, y)| x.clone() - y.clone()).collect();
            let d_rhs: Vec<S> = lhs.iter().zip(&rhs).map(|(x, y)| x.clone() - y.clone()).collect();
            if !d_mid.iter().all(|x| x.is_zero()) {
                out.record("avg-left", vec![i, j], d_mid);
            }
            if !d_rhs.iter().all(|x| x.is_zero()) {
                out.record("avg-right", vec![i, j], d_rhs);
            }
        }
    }
    Ok(out.finish())
}

/// The bracket induced by an averaging operator. The caller is responsible
/// for `t` actually being averaging on `a`; only dimensions are checked.
pub fn induced_algebra<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    t: &AveragingOperator<S>,
    mode: InducedMode,
) -> Result<LeibnizAlgebra<S>> {
    if t.dim() != a.dim() {
        return Err(Error::invalid(format!(
            "operator of dimension {} on algebra of dimension {}",
            t.dim(),
            a.dim()
        )));
    }
    let g = a.dim();
    let mut out = LeibnizAlgebra::zero(g);
    for i in 0..g {
        let ti = t.apply_basis(i);
        for j in 0..g {
            let mut row = a.bracket_right_basis(&ti, j);
            if mode == InducedMode::Sum {
                let extra = a.bracket_left_basis(i, &t.apply_basis(j));
                for (x, y) in row.iter_mut().zip(extra) {
                    *x = x.clone() + y;
                }
            }
            let off = (i * g + j) * g;
            out.c[off..off + g].clone_from_slice(&row);
        }
    }
    Ok(out)
}

/// Checks that `p` is a morphism of algebras-with-operator: it preserves
/// brackets (tag `"bracket"`, indexed by basis pairs) and intertwines the
/// operators, `θ'∘p = p∘θ` (tag `"intertwine"`, indexed by basis column).
/// The report also says whether `p` is an isomorphism (square of full rank).
pub fn check_morphism<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    a2: &LeibnizAlgebra<S>,
    t: &AveragingOperator<S>,
    t2: &AveragingOperator<S>,
    p: &Matrix<S>,
) -> Result<MorphismReport<S>> {
    if t.dim() != a.dim() || t2.dim() != a2.dim() {
        return Err(Error::invalid("operator dimension does not match its algebra"));
    }
    if p.rows() != a2.dim() || p.cols() != a.dim() {
        return Err(Error::invalid(format!(
            "morphism matrix must be {}x{}, got {}x{}",
            a2.dim(),
            a.dim(),
            p.rows(),
            p.cols()
        )));
    }
    let g = a.dim();
    let mut out = WitnessCollector::new();
    for i in 0..g {
        let pi = p.col(i);
        for j in 0..g {
            let lhs = p.apply(a.bracket_basis(i, j))?;
            let rhs = a2.bracket(&pi, &p.col(j))?;
            let d: Vec<S> = lhs.iter().zip(&rhs).map(|(x, y)| x.clone() - y.clone()).collect();
            if !d.iter().all(|x| x.is_zero()) {
                out.record("bracket", vec![i, j], d);
            }
        }
    }
    for j in 0..g {
        let lhs = t2.apply(&p.col(j))?;
        let rhs = p.apply(&t.apply_basis(j))?;
        let d: Vec<S> = lhs.iter().zip(&rhs).map(|(x, y)| x.clone() - y.clone()).collect();
        if !d.iter().all(|x| x.is_zero()) {
            out.record("intertwine", vec![j], d);
        }
    }
    let isomorphism = a.dim() == a2.dim() && p.rank() == a.dim();
    Ok(MorphismReport {
        report: out.finish(),
        isomorphism,
    })
}
