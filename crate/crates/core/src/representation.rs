//! Representations of Leibniz algebras: the two action tensors, the
//! compatibility operator on the module, validators for the plain and
//! averaging axioms, the self-representation, and the induced actions.
//!
//! Actions are stored as one matrix per algebra basis element so that the
//! cochain differentials reduce to matrix-column arithmetic: `l[i]` is the
//! matrix of `a ↦ l(e_i, a)` and `r[j]` the matrix of `a ↦ r(a, e_j)`.

use crate::algebra::{AveragingOperator, InducedMode, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{ValidationReport, WitnessCollector};
use crate::scalar::Scalar;

/// A module `M` with left and right actions of the algebra, and optionally
/// a compatibility operator `θ_M` on `M`.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation<S> {
    gdim: usize,
    mdim: usize,
    l: Vec<Matrix<S>>,
    r: Vec<Matrix<S>>,
    theta_m: Option<Matrix<S>>,
}

impl<S: Scalar> Representation<S> {
    pub fn new(
        gdim: usize,
        mdim: usize,
        l: Vec<Matrix<S>>,
        r: Vec<Matrix<S>>,
        theta_m: Option<Matrix<S>>,
    ) -> Result<Self> {
        if l.len() != gdim || r.len() != gdim {
            return Err(Error::invalid(format!(
                "expected {gdim} action matrices, got {} left and {} right",
                l.len(),
                r.len()
            )));
        }
        for m in l.iter().chain(&r) {
            if m.rows() != mdim || m.cols() != mdim {
                return Err(Error::invalid(format!(
                    "action matrices must be {mdim}x{mdim}, got {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if let Some(tm) = &theta_m {
            if tm.rows() != mdim || tm.cols() != mdim {
                return Err(Error::invalid(format!(
                    "module operator must be {mdim}x{mdim}, got {}x{}",
                    tm.rows(),
                    tm.cols()
                )));
            }
        }
        Ok(Representation {
            gdim,
            mdim,
            l,
            r,
            theta_m,
        })
    }

    pub fn zero(gdim: usize, mdim: usize) -> Self {
        Representation {
            gdim,
            mdim,
            l: vec![Matrix::zero(mdim, mdim); gdim],
            r: vec![Matrix::zero(mdim, mdim); gdim],
            theta_m: None,
        }
    }

    pub fn gdim(&self) -> usize {
        self.gdim
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    /// Matrix of `a ↦ l(e_i, a)`.
    pub fn l(&self, i: usize) -> &Matrix<S> {
        &self.l[i]
    }

    /// Matrix of `a ↦ r(a, e_j)`.
    pub fn r(&self, j: usize) -> &Matrix<S> {
        &self.r[j]
    }

    pub fn theta_m(&self) -> Option<&Matrix<S>> {
        self.theta_m.as_ref()
    }

    pub fn with_theta_m(mut self, theta_m: Option<Matrix<S>>) -> Self {
        self.theta_m = theta_m;
        self
    }

    /// `l(u, a)` for coordinate vectors `u` in the algebra, `a` in `M`.
    pub fn l_action(&self, u: &[S], a: &[S]) -> Result<Vec<S>> {
        self.combine(&self.l, u, a)
    }

    /// `r(a, v)` for coordinate vectors `a` in `M`, `v` in the algebra.
    pub fn r_action(&self, a: &[S], v: &[S]) -> Result<Vec<S>> {
        self.combine(&self.r, v, a)
    }

    fn combine(&self, mats: &[Matrix<S>], weights: &[S], a: &[S]) -> Result<Vec<S>> {
        if weights.len() != self.gdim {
            return Err(Error::invalid(format!(
                "algebra vector of length {} against dimension {}",
                weights.len(),
                self.gdim
            )));
        }
        let mut out = vec![S::zero(); self.mdim];
        for (i, w) in weights.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            let img = mats[i].apply(a)?;
            for (o, x) in out.iter_mut().zip(img) {
                if !x.is_zero() {
                    *o = o.clone() + w.clone() * x;
                }
            }
        }
        Ok(out)
    }
}

/// The algebra acting on itself by its own bracket: `l(u, a) = [u, a]` and
/// `r(a, v) = [a, v]`, with the operator carried over as `θ_M` when given.
pub fn self_representation<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    t: Option<&AveragingOperator<S>>,
) -> Representation<S> {
    let g = a.dim();
    let mut l = vec![Matrix::zero(g, g); g];
    let mut r = vec![Matrix::zero(g, g); g];
    for i in 0..g {
        for b in 0..g {
            for k in 0..g {
                let lv = a.structure_constant(i, b, k);
                if !lv.is_zero() {
                    l[i].set(k, b, lv.clone());
                }
                let rv = a.structure_constant(b, i, k);
                if !rv.is_zero() {
                    r[i].set(k, b, rv.clone());
                }
            }
        }
    }
    Representation {
        gdim: g,
        mdim: g,
        l,
        r,
        theta_m: t.map(|op| op.matrix().clone()),
    }
}

/// Checks the three representation identities on all `(u, v, p)` basis
/// tuples, with `u, v` in the algebra and `p` in the module. Witnesses are
/// tagged `"rep-1"`, `"rep-2"`, `"rep-3"` by identity:
///
/// 1. `l(u, l(v, a)) = l([u,v], a) + l(v, l(u, a))`
/// 2. `l(u, r(a, v)) = r(l(u, a), v) + r(a, [u,v])`
/// 3. `r(a, [u,v]) = r(r(a, u), v) + l(u, r(a, v))`
pub fn validate_representation<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    rep: &Representation<S>,
) -> Result<ValidationReport<S>> {
    if rep.gdim() != a.dim() {
        return Err(Error::invalid(format!(
            "representation over dimension {} used with algebra of dimension {}",
            rep.gdim(),
            a.dim()
        )));
    }
    let g = a.dim();
    let m = rep.mdim();
    let mut out = WitnessCollector::new();
    for u in 0..g {
        for v in 0..g {
            let br = a.bracket_basis(u, v);
            for p in 0..m {
                let ep: Vec<S> = Matrix::<S>::identity(m).col(p);
                let l_u_p = rep.l[u].col(p);
                let l_v_p = rep.l[v].col(p);
                let r_v_p = rep.r[v].col(p);
                let r_u_p = rep.r[u].col(p);

                let mut i1 = rep.l[u].apply(&l_v_p)?;
                sub_assign(&mut i1, &rep.combine(&rep.l, br, &ep)?);
                sub_assign(&mut i1, &rep.l[v].apply(&l_u_p)?);
                if !i1.iter().all(|x| x.is_zero()) {
                    out.record("rep-1", vec![u, v, p], i1);
                }

                let mut i2 = rep.l[u].apply(&r_v_p)?;
                sub_assign(&mut i2, &rep.r[v].apply(&l_u_p)?);
                sub_assign(&mut i2, &rep.combine(&rep.r, br, &ep)?);
                if !i2.iter().all(|x| x.is_zero()) {
                    out.record("rep-2", vec![u, v, p], i2);
                }

                let mut i3 = rep.combine(&rep.r, br, &ep)?;
                sub_assign(&mut i3, &rep.r[v].apply(&r_u_p)?);
                sub_assign(&mut i3, &rep.l[u].apply(&r_v_p)?);
                if !i3.iter().all(|x| x.is_zero()) {
                    out.record("rep-3", vec![u, v, p], i3);
                }
            }
        }
    }
    Ok(out.finish())
}

fn sub_assign<S: Scalar>(out: &mut [S], rhs: &[S]) {
    for (o, x) in out.iter_mut().zip(rhs) {
        if !x.is_zero() {
            *o = o.clone() - x.clone();
        }
    }
}

/// Checks the two compatibility chains between the operator on the algebra
/// and `θ_M` on the module, four equalities over all `(u, p)` basis pairs:
///
/// - `l(θu, θ_M a) = θ_M l(θu, a)` (tag `"l-chain-mid"`) and
///   `l(θu, θ_M a) = θ_M l(u, θ_M a)` (tag `"l-chain-right"`);
/// - `r(θ_M a, θu) = θ_M r(θ_M a, u)` (tag `"r-chain-mid"`) and
///   `r(θ_M a, θu) = θ_M r(a, θu)` (tag `"r-chain-right"`).
pub fn validate_averaging_representation<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    rep: &Representation<S>,
    t: &AveragingOperator<S>,
) -> Result<ValidationReport<S>> {
    if rep.gdim() != a.dim() || t.dim() != a.dim() {
        return Err(Error::invalid("algebra, representation, and operator dimensions disagree"));
    }
    let Some(tm) = rep.theta_m() else {
        return Err(Error::invalid(
            "averaging-representation check requires the module operator",
        ));
    };
    let g = a.dim();
    let m = rep.mdim();
    let mut out = WitnessCollector::new();
    for u in 0..g {
        let tu = t.apply_basis(u);
        for p in 0..m {
            let ta = tm.col(p);
            let lhs_l = rep.l_action(&tu, &ta)?;
            let mid_l = tm.apply(&rep.l[u].apply(&ta)?)?;
            let tu_on_p = rep.combine(&rep.l, &tu, &Matrix::<S>::identity(m).col(p))?;
            let right_l = tm.apply(&tu_on_p)?;
            record_diff(&mut out, "l-chain-right", u, p, &lhs_l, &right_l);
            record_diff(&mut out, "l-chain-mid", u, p, &lhs_l, &mid_l);

            let lhs_r = rep.r_action(&ta, &tu)?;
            let mid_r = tm.apply(&rep.r[u].apply(&ta)?)?;
            let p_on_tu = rep.combine(&rep.r, &tu, &Matrix::<S>::identity(m).col(p))?;
            let right_r = tm.apply(&p_on_tu)?;
            record_diff(&mut out, "r-chain-right", u, p, &lhs_r, &right_r);
            record_diff(&mut out, "r-chain-mid", u, p, &lhs_r, &mid_r);
        }
    }
    Ok(out.finish())
}

fn record_diff<S: Scalar>(
    out: &mut WitnessCollector<S>,
    tag: &str,
    u: usize,
    p: usize,
    lhs: &[S],
    rhs: &[S],
) {
    let d: Vec<S> = lhs.iter().zip(rhs).map(|(x, y)| x.clone() - y.clone()).collect();
    if !d.iter().all(|x| x.is_zero()) {
        out.record(tag, vec![u, p], d);
    }
}

/// The representation induced along the operator. In `Strict` mode the new
/// actions are `l'(e_i, ·) = l(θe_i, ·)` and `r'(·, e_j) = r(·, θe_j)`; in
/// `Sum` mode each is corrected by `−θ_M` applied to the original action,
/// matching the action terms of the operator cochain differential. The
/// module operator is carried over unchanged.
pub fn induced_representation<S: Scalar>(
    rep: &Representation<S>,
    t: &AveragingOperator<S>,
    mode: InducedMode,
) -> Result<Representation<S>> {
    if t.dim() != rep.gdim() {
        return Err(Error::invalid(format!(
            "operator of dimension {} on representation over dimension {}",
            t.dim(),
            rep.gdim()
        )));
    }
    let g = rep.gdim();
    let m = rep.mdim();
    let tm = match mode {
        InducedMode::Strict => rep.theta_m(),
        InducedMode::Sum => Some(rep.theta_m().ok_or_else(|| {
            Error::invalid("sum-mode induced representation requires the module operator")
        })?),
    };
    let mut l = Vec::with_capacity(g);
    let mut r = Vec::with_capacity(g);
    for i in 0..g {
        let mut li = Matrix::zero(m, m);
        let mut ri = Matrix::zero(m, m);
        for (s, w) in t.apply_basis(i).iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            li = li.add(&rep.l[s].scale(w))?;
            ri = ri.add(&rep.r[s].scale(w))?;
        }
        if mode == InducedMode::Sum {
            let tm = tm.unwrap();
            li = li.sub(&tm.matmul(&rep.l[i])?)?;
            ri = ri.sub(&tm.matmul(&rep.r[i])?)?;
        }
        l.push(li);
        r.push(ri);
    }
    Ok(Representation {
        gdim: g,
        mdim: m,
        l,
        r,
        theta_m: rep.theta_m.clone(),
    })
}
