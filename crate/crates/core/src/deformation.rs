//! Truncated formal deformations of an averaging Leibniz algebra: the
//! order-by-order deformation equations, the infinitesimal cocycle check
//! against the mapping-cone differential, equivalences along formal
//! isomorphisms, trivializer search by exact linear solving, and the
//! rigidity verdict.
//!
//! A deformation is the pair of truncated series `μ_t = Σ μᵢ tⁱ` and
//! `θ_t = Σ θᵢ tⁱ`, kept as finite lists with the base structure at index
//! zero. Passing a check at order `N` certifies the equations for
//! coefficients of `tⁿ`, `n ≤ N`, and says nothing beyond the truncation.

use crate::algebra::{AveragingOperator, InducedMode, LeibnizAlgebra};
use crate::cochain::{
    basis_tuples, cone_differential, matrix_of, ConeCochain, DifferentialOp, MultilinearMap,
};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{ValidationReport, WitnessCollector};
use crate::representation::self_representation;
use crate::scalar::Scalar;

/// Truncated deformation data: `μ₀…μ_N` as bilinear cochains on the
/// algebra and `θ₀…θ_N` as matrices, with index 0 holding the base
/// structure.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedDeformation<S> {
    mus: Vec<MultilinearMap<S>>,
    thetas: Vec<Matrix<S>>,
}

impl<S: Scalar> TruncatedDeformation<S> {
    pub fn new(mus: Vec<MultilinearMap<S>>, thetas: Vec<Matrix<S>>) -> Result<Self> {
        if mus.is_empty() || mus.len() != thetas.len() {
            return Err(Error::invalid(format!(
                "need equally many bracket and operator coefficients from order 0, got {} and {}",
                mus.len(),
                thetas.len()
            )));
        }
        let g = mus[0].gdim();
        for mu in &mus {
            if mu.arity() != 2 || mu.gdim() != g || mu.mdim() != g {
                return Err(Error::invalid(
                    "bracket coefficients must be bilinear maps from the algebra to itself",
                ));
            }
        }
        for th in &thetas {
            if th.rows() != g || th.cols() != g {
                return Err(Error::invalid(format!(
                    "operator coefficients must be {g}x{g} matrices"
                )));
            }
        }
        Ok(TruncatedDeformation { mus, thetas })
    }

    /// The constant deformation of a base pair: all higher coefficients
    /// vanish.
    pub fn constant(
        a: &LeibnizAlgebra<S>,
        t: &AveragingOperator<S>,
        order: usize,
    ) -> Result<Self> {
        let g = a.dim();
        let mut mus = vec![bracket_cochain(a)?];
        let mut thetas = vec![t.matrix().clone()];
        for _ in 0..order {
            mus.push(MultilinearMap::zero(2, g, g)?);
            thetas.push(Matrix::zero(g, g));
        }
        TruncatedDeformation::new(mus, thetas)
    }

    pub fn order(&self) -> usize {
        self.mus.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.mus[0].gdim()
    }

    pub fn mu(&self, i: usize) -> &MultilinearMap<S> {
        &self.mus[i]
    }

    pub fn theta(&self, i: usize) -> &Matrix<S> {
        &self.thetas[i]
    }

    /// Drops coefficients above the given order.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order >= self.mus.len() {
            return Err(Error::invalid(format!(
                "cannot truncate an order-{} deformation to order {order}",
                self.order()
            )));
        }
        TruncatedDeformation::new(
            self.mus[..=order].to_vec(),
            self.thetas[..=order].to_vec(),
        )
    }

    /// Smallest positive order with a nonzero coefficient pair, if any —
    /// the index making the deformation an "n-infinitesimal".
    pub fn first_nonzero_order(&self) -> Option<usize> {
        (1..self.mus.len()).find(|&i| !self.mus[i].is_zero() || !self.thetas[i].is_zero())
    }
}

/// The base bracket as a bilinear cochain with values in the algebra.
pub fn bracket_cochain<S: Scalar>(a: &LeibnizAlgebra<S>) -> Result<MultilinearMap<S>> {
    let g = a.dim();
    let mut mu = MultilinearMap::zero(2, g, g)?;
    for i in 0..g {
        for j in 0..g {
            for (k, c) in a.bracket_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    mu.set(&[i, j], k, c.clone())?;
                }
            }
        }
    }
    Ok(mu)
}

/// A formal isomorphism truncated at some order: `ψ₀…ψ_N` with `ψ₀` the
/// identity.
#[derive(Debug, Clone, PartialEq)]
pub struct FormalIsomorphism<S> {
    psis: Vec<Matrix<S>>,
}

impl<S: Scalar> FormalIsomorphism<S> {
    pub fn new(psis: Vec<Matrix<S>>) -> Result<Self> {
        let Some(first) = psis.first() else {
            return Err(Error::invalid("need coefficients from order 0"));
        };
        let g = first.rows();
        if psis.iter().any(|p| p.rows() != g || p.cols() != g) {
            return Err(Error::invalid("isomorphism coefficients must be square and equal-sized"));
        }
        if !first.is_identity() {
            return Err(Error::invalid("the order-0 coefficient must be the identity"));
        }
        Ok(FormalIsomorphism { psis })
    }

    /// The identity isomorphism at the given order.
    pub fn identity(dim: usize, order: usize) -> Self {
        let mut psis = vec![Matrix::identity(dim)];
        for _ in 0..order {
            psis.push(Matrix::zero(dim, dim));
        }
        FormalIsomorphism { psis }
    }

    pub fn order(&self) -> usize {
        self.psis.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.psis[0].rows()
    }

    pub fn psi(&self, i: usize) -> &Matrix<S> {
        &self.psis[i]
    }
}

fn basis_vec<S: Scalar>(dim: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); dim];
    v[i] = S::one();
    v
}

fn vec_sub_assign<S: Scalar>(out: &mut [S], rhs: &[S]) {
    for (o, x) in out.iter_mut().zip(rhs) {
        if !x.is_zero() {
            *o = o.clone() - x.clone();
        }
    }
}

fn vec_add_assign<S: Scalar>(out: &mut [S], rhs: &[S]) {
    for (o, x) in out.iter_mut().zip(rhs) {
        if !x.is_zero() {
            *o = o.clone() + x.clone();
        }
    }
}

/// Checks the deformation equations order by order: for every `n ≤ N` and
/// all basis tuples, the `tⁿ` coefficient of the left Leibniz identity
/// (tag `eq1[n=..]`, on triples) and both equalities of the averaging
/// chain (tags `eq2-left-mid[n=..]` and `eq2-left-right[n=..]`, on pairs).
///
/// The induced mode is accepted for signature uniformity with the other
/// checkers; the order conditions do not depend on it.
pub fn check_deformation_order<S: Scalar>(
    d: &TruncatedDeformation<S>,
    _mode: InducedMode,
) -> Result<ValidationReport<S>> {
    let g = d.dim();
    let mut out = WitnessCollector::new();
    for n in 0..=d.order() {
        // Eq (1): Σ_{i+j=n} μᵢ(u, μⱼ(v,w)) − μᵢ(μⱼ(u,v), w) − μᵢ(v, μⱼ(u,w)).
        for triple in basis_tuples(g, 3) {
            let (u, v, w) = (triple[0], triple[1], triple[2]);
            let eu = basis_vec::<S>(g, u);
            let ev = basis_vec::<S>(g, v);
            let ew = basis_vec::<S>(g, w);
            let mut residual = vec![S::zero(); g];
            for i in 0..=n {
                let j = n - i;
                let inner_vw = d.mu(j).eval(&[v, w])?;
                vec_add_assign(&mut residual, &d.mu(i).eval_linear(&[&eu, inner_vw])?);
                let inner_uv = d.mu(j).eval(&[u, v])?;
                vec_sub_assign(&mut residual, &d.mu(i).eval_linear(&[inner_uv, &ew])?);
                let inner_uw = d.mu(j).eval(&[u, w])?;
                vec_sub_assign(&mut residual, &d.mu(i).eval_linear(&[&ev, inner_uw])?);
            }
            if !residual.iter().all(|x| x.is_zero()) {
                out.record(&format!("eq1[n={n}]"), triple.clone(), residual);
            }
        }
        // Eq (2): Σ_{i+j+k=n} μᵢ(θⱼu, θₖv) against both θ-chains.
        for pair in basis_tuples(g, 2) {
            let (u, v) = (pair[0], pair[1]);
            let eu = basis_vec::<S>(g, u);
            let ev = basis_vec::<S>(g, v);
            let mut left = vec![S::zero(); g];
            let mut mid = vec![S::zero(); g];
            let mut right = vec![S::zero(); g];
            for i in 0..=n {
                for j in 0..=n - i {
                    let k = n - i - j;
                    let tju = d.theta(j).apply(&eu)?;
                    let tkv = d.theta(k).apply(&ev)?;
                    vec_add_assign(&mut left, &d.mu(i).eval_linear(&[&tju, &tkv])?);
                    // middle: θᵢ(μⱼ(θₖu, v)); right: θᵢ(μⱼ(u, θₖv)).
                    let tku = d.theta(k).apply(&eu)?;
                    let m = d.mu(j).eval_linear(&[&tku, &ev])?;
                    vec_add_assign(&mut mid, &d.theta(i).apply(&m)?);
                    let tkv2 = d.theta(k).apply(&ev)?;
                    let r = d.mu(j).eval_linear(&[&eu, &tkv2])?;
                    vec_add_assign(&mut right, &d.theta(i).apply(&r)?);
                }
            }
            let dm: Vec<S> = left.iter().zip(&mid).map(|(a, b)| a.clone() - b.clone()).collect();
            if !dm.iter().all(|x| x.is_zero()) {
                out.record(&format!("eq2-left-mid[n={n}]"), pair.clone(), dm);
            }
            let dr: Vec<S> = left.iter().zip(&right).map(|(a, b)| a.clone() - b.clone()).collect();
            if !dr.iter().all(|x| x.is_zero()) {
                out.record(&format!("eq2-left-right[n={n}]"), pair.clone(), dr);
            }
        }
    }
    Ok(out.finish())
}

/// Checks that the infinitesimal `(μ₁, θ₁)` is a degree-2 cocycle of the
/// mapping cone over the base: `d²(μ₁, θ₁) = (δ²μ₁, −φ²μ₁ − ∂¹θ₁) = 0`.
/// The two components are reported separately under the tags `"bracket"`
/// and `"operator"`, each witnessed by its first nonzero tuple.
pub fn check_cocycle<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    t: &AveragingOperator<S>,
    mu1: &MultilinearMap<S>,
    theta1: &Matrix<S>,
    mode: InducedMode,
) -> Result<ValidationReport<S>> {
    let rep = self_representation(a, Some(t));
    let x = ConeCochain::new(
        mu1.clone(),
        Some(MultilinearMap::from_linear_matrix(theta1)?),
    )?;
    let dx = cone_differential(a, &rep, t, mode, &x)?;
    let mut out = WitnessCollector::new();
    for (tag, component) in [("bracket", dx.f()), ("operator", dx.h().unwrap())] {
        for tuple in basis_tuples(component.gdim(), component.arity()) {
            let value = component.eval(&tuple)?;
            if !value.iter().all(|x| x.is_zero()) {
                out.record(tag, tuple, value.to_vec());
            }
        }
    }
    Ok(out.finish())
}

/// Checks that the isomorphism intertwines the two deformations order by
/// order: for every `n ≤ N`, the bracket relation on all basis pairs (tag
/// `eq5[n=..]`) obtained from `Σ ψᵢ(μ'ⱼ(u,v)) = Σ μᵢ(ψⱼu, ψₖv)` and the
/// operator relation `Σ ψᵢ∘θ'ⱼ = Σ θᵢ∘ψⱼ` as a matrix identity, recorded
/// per column (tag `eq6[n=..]`).
pub fn check_equivalence<S: Scalar>(
    d: &TruncatedDeformation<S>,
    d2: &TruncatedDeformation<S>,
    p: &FormalIsomorphism<S>,
    _mode: InducedMode,
) -> Result<ValidationReport<S>> {
    if d.order() != d2.order() || d.order() != p.order() {
        return Err(Error::invalid(format!(
            "orders disagree: {}, {}, and {}",
            d.order(),
            d2.order(),
            p.order()
        )));
    }
    if d.dim() != d2.dim() || d.dim() != p.dim() {
        return Err(Error::invalid("dimensions disagree"));
    }
    let g = d.dim();
    let mut out = WitnessCollector::new();
    for n in 0..=d.order() {
        for pair in basis_tuples(g, 2) {
            let (u, v) = (pair[0], pair[1]);
            let eu = basis_vec::<S>(g, u);
            let ev = basis_vec::<S>(g, v);
            let mut lhs = vec![S::zero(); g];
            for i in 0..=n {
                let j = n - i;
                let m = d2.mu(j).eval(&[u, v])?;
                vec_add_assign(&mut lhs, &p.psi(i).apply(m)?);
            }
            let mut rhs = vec![S::zero(); g];
            for i in 0..=n {
                for j in 0..=n - i {
                    let k = n - i - j;
                    let pju = p.psi(j).apply(&eu)?;
                    let pkv = p.psi(k).apply(&ev)?;
                    vec_add_assign(&mut rhs, &d.mu(i).eval_linear(&[&pju, &pkv])?);
                }
            }
            let diff: Vec<S> = lhs.iter().zip(&rhs).map(|(a, b)| a.clone() - b.clone()).collect();
            if !diff.iter().all(|x| x.is_zero()) {
                out.record(&format!("eq5[n={n}]"), pair.clone(), diff);
            }
        }
        let mut lhs = Matrix::zero(g, g);
        let mut rhs = Matrix::zero(g, g);
        for i in 0..=n {
            let j = n - i;
            lhs = lhs.add(&p.psi(i).matmul(d2.theta(j))?)?;
            rhs = rhs.add(&d.theta(i).matmul(p.psi(j))?)?;
        }
        let diff = lhs.sub(&rhs)?;
        for col in 0..g {
            let c = diff.col(col);
            if !c.iter().all(|x| x.is_zero()) {
                out.record(&format!("eq6[n={n}]"), vec![col], c);
            }
        }
    }
    Ok(out.finish())
}

/// A certificate that `(μ₁, θ₁)` is a coboundary: `d¹(ψ₁, u) = (μ₁, θ₁)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trivializer<S> {
    pub psi1: Matrix<S>,
    pub u: Vec<S>,
}

/// Solves `d¹(ψ₁, u) = (μ₁, θ₁)` exactly over the mapping cone of the
/// base, returning `None` when the infinitesimal is not a coboundary. Any
/// solution is acceptable; the solver's canonical choice (free variables
/// zero) makes the result deterministic.
pub fn find_trivializer<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    t: &AveragingOperator<S>,
    mu1: &MultilinearMap<S>,
    theta1: &Matrix<S>,
    mode: InducedMode,
) -> Result<Option<Trivializer<S>>> {
    let g = a.dim();
    if mu1.arity() != 2 || mu1.gdim() != g || mu1.mdim() != g {
        return Err(Error::invalid("the bracket part must be bilinear on the algebra"));
    }
    if theta1.rows() != g || theta1.cols() != g {
        return Err(Error::invalid("the operator part must be a square matrix on the algebra"));
    }
    let rep = self_representation(a, Some(t));
    let d1 = matrix_of(DifferentialOp::ConeDifferential, 1, a, &rep, Some(t), mode)?;
    let mut b = mu1.coeffs().to_vec();
    b.extend(MultilinearMap::from_linear_matrix(theta1)?.coeffs().iter().cloned());
    let Some(x) = d1.solve(&b)? else {
        return Ok(None);
    };
    let psi_coeffs = &x[..g * g];
    let mut psi1 = Matrix::zero(g, g);
    for j in 0..g {
        for p in 0..g {
            psi1.set(p, j, psi_coeffs[j * g + p].clone());
        }
    }
    Ok(Some(Trivializer {
        psi1,
        u: x[g * g..].to_vec(),
    }))
}

/// Outcome of the rigidity criterion. `Rigid` is only claimed when the
/// cone is a genuine complex through degree 2 and its second cohomology
/// vanishes; a nonzero dimension proves nothing in either direction, hence
/// `Inconclusive`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RigidityVerdict {
    Rigid,
    Inconclusive(usize),
    ComplexInvalid { degree: usize, defect_rank: usize },
}

/// Applies the cohomological rigidity criterion to a base pair: validity
/// of the cone at degrees 0–2, then `dim H²`.
pub fn rigidity_report<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    t: &AveragingOperator<S>,
    mode: InducedMode,
) -> Result<RigidityVerdict> {
    use crate::cohomology::{betti, complex_audit, ComplexKind, ComplexSpec};
    let rep = self_representation(a, Some(t));
    let spec = ComplexSpec {
        kind: ComplexKind::Al,
        mode,
        max_degree: 3,
        algebra: a,
        representation: &rep,
        operator: Some(t),
    };
    for audit in complex_audit(&spec)? {
        if !audit.is_zero {
            return Ok(RigidityVerdict::ComplexInvalid {
                degree: audit.degree,
                defect_rank: audit.defect_rank,
            });
        }
    }
    match betti(&spec, 2)? {
        0 => Ok(RigidityVerdict::Rigid),
        dim => Ok(RigidityVerdict::Inconclusive(dim)),
    }
}
