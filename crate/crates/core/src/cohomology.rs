//! Cochain complexes assembled from the differentials, exact validity
//! checking (`d∘d = 0` as a matrix identity), and cohomology dimensions by
//! rank/nullity over the exact scalars.
//!
//! A cohomology dimension is only ever reported for degrees where the
//! complex property has been verified on both sides; otherwise the value
//! is withheld. This matters because the sum-mode operator complex and the
//! mapping cone are not complexes for every input.

use crate::algebra::{AveragingOperator, InducedMode, LeibnizAlgebra};
use crate::cochain::{matrix_of, DifferentialOp, MAX_DEGREE};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::representation::Representation;
use crate::scalar::Scalar;

/// Which complex to assemble: the algebra complex, the operator complex,
/// or their mapping cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexKind {
    La,
    Alo,
    Al,
}

/// A fully specified complex: structures, mode, and how far to build it.
#[derive(Debug, Clone, Copy)]
pub struct ComplexSpec<'a, S> {
    pub kind: ComplexKind,
    pub mode: InducedMode,
    /// Highest degree whose differential is assembled; `1..=MAX_DEGREE`.
    pub max_degree: usize,
    pub algebra: &'a LeibnizAlgebra<S>,
    pub representation: &'a Representation<S>,
    pub operator: Option<&'a AveragingOperator<S>>,
}

impl<'a, S: Scalar> ComplexSpec<'a, S> {
    fn check(&self) -> Result<()> {
        if self.max_degree == 0 || self.max_degree > MAX_DEGREE {
            return Err(Error::invalid(format!(
                "max degree must lie in 1..={MAX_DEGREE}, got {}",
                self.max_degree
            )));
        }
        if self.kind != ComplexKind::La && self.operator.is_none() {
            return Err(Error::invalid(
                "operator and cone complexes need an averaging operator",
            ));
        }
        Ok(())
    }

    fn op(&self) -> DifferentialOp {
        match self.kind {
            ComplexKind::La => DifferentialOp::Delta,
            ComplexKind::Alo => DifferentialOp::PartialAvg,
            ComplexKind::Al => DifferentialOp::ConeDifferential,
        }
    }
}

/// Matrix of the chosen complex's differential at one degree (which may
/// exceed `max_degree` up to the global cap; that bound only limits how
/// far reports go).
pub fn differential_matrix<S: Scalar>(spec: &ComplexSpec<S>, degree: usize) -> Result<Matrix<S>> {
    spec.check()?;
    matrix_of(
        spec.op(),
        degree,
        spec.algebra,
        spec.representation,
        spec.operator,
        spec.mode,
    )
}

/// Validity verdict for one degree: whether `d^{n+1}∘dⁿ` vanished, and the
/// rank of the defect when it did not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeAudit {
    pub degree: usize,
    pub is_zero: bool,
    pub defect_rank: usize,
}

/// Per-degree dimensions. `dim_h` is withheld when validity is unknown or
/// failed at this degree or the one below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: usize,
    pub dim_cochain: usize,
    pub rank_d: usize,
    pub dim_kernel: usize,
    pub dim_h: Option<usize>,
}

/// Dimensions for degrees `0..=max_degree` plus the validity audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    pub degrees: Vec<DegreeReport>,
    pub validity: Vec<DegreeAudit>,
}

fn all_matrices<S: Scalar>(spec: &ComplexSpec<S>) -> Result<Vec<Matrix<S>>> {
    (0..=spec.max_degree)
        .map(|n| differential_matrix(spec, n))
        .collect()
}

fn audit_from_matrices<S: Scalar>(mats: &[Matrix<S>]) -> Result<Vec<DegreeAudit>> {
    let mut out = Vec::new();
    for n in 0..mats.len() - 1 {
        let product = mats[n + 1].matmul(&mats[n])?;
        let is_zero = product.is_zero();
        out.push(DegreeAudit {
            degree: n,
            is_zero,
            defect_rank: if is_zero { 0 } else { product.rank() },
        });
    }
    Ok(out)
}

/// Checks `d^{n+1}∘dⁿ = 0` exactly for every degree `n < max_degree`.
pub fn complex_audit<S: Scalar>(spec: &ComplexSpec<S>) -> Result<Vec<DegreeAudit>> {
    spec.check()?;
    audit_from_matrices(&all_matrices(spec)?)
}

/// Cohomology dimension at degree `n ≤ max_degree − 1`:
/// `dim ker dⁿ − rank d^{n−1}`. Fails with [`Error::ComplexInvalid`] when
/// the complex property does not hold at degree `n−1` or `n`.
pub fn betti<S: Scalar>(spec: &ComplexSpec<S>, n: usize) -> Result<usize> {
    spec.check()?;
    if n + 1 > spec.max_degree {
        return Err(Error::invalid(format!(
            "degree {n} needs max degree at least {}, got {}",
            n + 1,
            spec.max_degree
        )));
    }
    let dn = differential_matrix(spec, n)?;
    let dnext = differential_matrix(spec, n + 1)?;
    let up = dnext.matmul(&dn)?;
    if !up.is_zero() {
        return Err(Error::ComplexInvalid {
            degree: n,
            defect_rank: up.rank(),
        });
    }
    let rank_prev = if n == 0 {
        0
    } else {
        let dprev = differential_matrix(spec, n - 1)?;
        let down = dn.matmul(&dprev)?;
        if !down.is_zero() {
            return Err(Error::ComplexInvalid {
                degree: n - 1,
                defect_rank: down.rank(),
            });
        }
        dprev.rank()
    };
    Ok(dn.cols() - dn.rank() - rank_prev)
}

/// Builds every differential once and reports dimensions for all degrees
/// `0..=max_degree` together with the validity audit. `dim_h` at degree
/// `max_degree` is always withheld (the next differential is not built),
/// and likewise wherever the audit found a nonzero product.
pub fn cohomology_report<S: Scalar>(spec: &ComplexSpec<S>) -> Result<CohomologyReport> {
    spec.check()?;
    let mats = all_matrices(spec)?;
    let validity = audit_from_matrices(&mats)?;
    let ranks: Vec<usize> = mats.iter().map(Matrix::rank).collect();
    let ok_at = |n: usize| validity.get(n).map(|a| a.is_zero).unwrap_or(false);
    let mut degrees = Vec::new();
    for n in 0..=spec.max_degree {
        let dim_cochain = mats[n].cols();
        let rank_d = ranks[n];
        let dim_kernel = dim_cochain - rank_d;
        let valid_here = ok_at(n) && (n == 0 || ok_at(n - 1));
        let dim_h = valid_here.then(|| dim_kernel - if n == 0 { 0 } else { ranks[n - 1] });
        degrees.push(DegreeReport {
            degree: n,
            dim_cochain,
            rank_d,
            dim_kernel,
            dim_h,
        });
    }
    Ok(CohomologyReport { degrees, validity })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representation::self_representation;
    use crate::Rat;

    fn qi(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    fn lie2() -> LeibnizAlgebra<Rat> {
        LeibnizAlgebra::from_entries(2, &[(0, 1, 0, qi(1)), (1, 0, 0, qi(-1))]).unwrap()
    }

    fn spec<'a>(
        kind: ComplexKind,
        mode: InducedMode,
        max_degree: usize,
        a: &'a LeibnizAlgebra<Rat>,
        rep: &'a Representation<Rat>,
        t: Option<&'a AveragingOperator<Rat>>,
    ) -> ComplexSpec<'a, Rat> {
        ComplexSpec {
            kind,
            mode,
            max_degree,
            algebra: a,
            representation: rep,
            operator: t,
        }
    }

    #[test]
    fn abelian_algebra_cohomology_is_the_whole_cochain_space() {
        let a: LeibnizAlgebra<Rat> = LeibnizAlgebra::zero(2);
        let rep = self_representation(&a, None);
        let s = spec(ComplexKind::La, InducedMode::Strict, 3, &a, &rep, None);
        assert_eq!(betti(&s, 0).unwrap(), 2);
        assert_eq!(betti(&s, 1).unwrap(), 4);
        assert_eq!(betti(&s, 2).unwrap(), 8);
    }

    #[test]
    fn cone_dimensions_for_one_dimensional_abelian_zero_operator() {
        let a: LeibnizAlgebra<Rat> = LeibnizAlgebra::zero(1);
        let t = AveragingOperator::zero(1);
        let rep = self_representation(&a, Some(&t));
        let s = spec(ComplexKind::Al, InducedMode::Strict, 4, &a, &rep, Some(&t));
        let h: Vec<usize> = (0..=3).map(|n| betti(&s, n).unwrap()).collect();
        assert_eq!(h, vec![0, 1, 2, 2]);
        assert!(complex_audit(&s).unwrap().iter().all(|d| d.is_zero));
    }

    #[test]
    fn lie2_has_no_degree_zero_cohomology() {
        let a = lie2();
        let rep = self_representation(&a, None);
        let s = spec(ComplexKind::La, InducedMode::Strict, 1, &a, &rep, None);
        assert_eq!(betti(&s, 0).unwrap(), 0);
    }

    #[test]
    fn strict_operator_complex_audit_is_clean() {
        let a = lie2();
        let t = AveragingOperator::identity(2);
        let rep = self_representation(&a, Some(&t));
        let s = spec(ComplexKind::Alo, InducedMode::Strict, 3, &a, &rep, Some(&t));
        assert!(complex_audit(&s).unwrap().iter().all(|d| d.is_zero));
    }

    #[test]
    fn invalid_cone_is_refused_not_quantified() {
        let a = lie2();
        let t = AveragingOperator::identity(2);
        let rep = self_representation(&a, Some(&t));
        let s = spec(ComplexKind::Al, InducedMode::Strict, 2, &a, &rep, Some(&t));
        let audit = complex_audit(&s).unwrap();
        assert!(!audit[0].is_zero);
        assert!(audit[0].defect_rank > 0);
        match betti(&s, 0) {
            Err(Error::ComplexInvalid { degree: 0, defect_rank }) => assert!(defect_rank > 0),
            other => panic!("expected complex-invalid, got {other:?}"),
        }
        let report = cohomology_report(&s).unwrap();
        assert_eq!(report.degrees[0].dim_h, None);
        assert_eq!(report.degrees[1].dim_h, None);
    }

    #[test]
    fn report_matches_betti_and_shapes() {
        let a: LeibnizAlgebra<Rat> = LeibnizAlgebra::zero(1);
        let t = AveragingOperator::identity(1);
        let rep = self_representation(&a, Some(&t));
        let s = spec(ComplexKind::Al, InducedMode::Strict, 3, &a, &rep, Some(&t));
        let report = cohomology_report(&s).unwrap();
        // dim Cⁿ_AL = m·gⁿ + m·g^{n−1} for n ≥ 1 and m for n = 0.
        assert_eq!(
            report.degrees.iter().map(|d| d.dim_cochain).collect::<Vec<_>>(),
            vec![1, 2, 2, 2]
        );
        for n in 0..=2 {
            assert_eq!(report.degrees[n].dim_h, Some(betti(&s, n).unwrap()));
        }
        // The identity operator contributes a one-dimensional class in
        // degree 2 here, unlike the zero operator.
        assert_eq!(report.degrees[2].dim_h, Some(1));
        assert_eq!(report.degrees[3].dim_h, None);
        assert_eq!(report.validity.len(), 3);
    }

    #[test]
    fn degree_bounds_are_checked() {
        let a = lie2();
        let rep = self_representation(&a, None);
        let s = spec(ComplexKind::La, InducedMode::Strict, 2, &a, &rep, None);
        assert!(betti(&s, 2).is_err());
        let bad = spec(ComplexKind::La, InducedMode::Strict, 0, &a, &rep, None);
        assert!(complex_audit(&bad).is_err());
        let no_op = spec(ComplexKind::Alo, InducedMode::Strict, 2, &a, &rep, None);
        assert!(complex_audit(&no_op).is_err());
    }
}
