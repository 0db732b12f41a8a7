//! Multilinear cochains and the differentials built on them: the algebra
//! coboundary, the operator coboundary, the comparison map between the two
//! complexes, and the mapping-cone differential that pairs them.
//!
//! A cochain `g^{⊗n} → M` is stored densely: the coefficient of output
//! coordinate `p` at the basis tuple `(i₁,…,i_n)` sits at index
//! `rank·mdim + p`, where `rank` treats the tuple as a base-`gdim` numeral
//! with `i₁` most significant. All differentials scatter contributions from
//! nonzero input coefficients into the output array, which keeps sparse
//! inputs (such as basis cochains during matrix assembly) cheap.

use crate::algebra::{
    induced_algebra, AveragingOperator, InducedMode, LeibnizAlgebra,
};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::representation::{induced_representation, Representation};
use crate::scalar::Scalar;

/// Largest arity a cochain may be stored at.
pub const MAX_ARITY: usize = 5;

/// Largest input degree accepted by the degree-raising differentials and
/// by [`matrix_of`]; their outputs then reach [`MAX_ARITY`].
pub const MAX_DEGREE: usize = MAX_ARITY - 1;

/// Rank of a basis tuple in lexicographic order.
fn tuple_rank(tuple: &[usize], gdim: usize) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * gdim + i)
}

/// Inverse of [`tuple_rank`] for tuples of length `n`.
fn tuple_unrank(mut rank: usize, gdim: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in (0..n).rev() {
        out[slot] = rank % gdim;
        rank /= gdim;
    }
    out
}

/// All basis tuples of length `n` over `gdim` indices, lexicographically.
pub fn basis_tuples(gdim: usize, n: usize) -> Vec<Vec<usize>> {
    (0..gdim.pow(n as u32))
        .map(|r| tuple_unrank(r, gdim, n))
        .collect()
}

/// `(−1)^k`.
fn sign<S: Scalar>(k: usize) -> S {
    if k % 2 == 0 {
        S::one()
    } else {
        -S::one()
    }
}

/// A multilinear map `g^{⊗n} → M` in coordinates. Arity 0 is allowed and
/// stores a single vector of `M` (the value on the empty tuple).
#[derive(Debug, Clone, PartialEq)]
pub struct MultilinearMap<S> {
    arity: usize,
    gdim: usize,
    mdim: usize,
    coeffs: Vec<S>,
}

impl<S: Scalar> MultilinearMap<S> {
    pub fn zero(arity: usize, gdim: usize, mdim: usize) -> Result<Self> {
        if arity > MAX_ARITY {
            return Err(Error::DegreeTooLarge {
                degree: arity,
                cap: MAX_ARITY,
            });
        }
        if gdim == 0 || mdim == 0 {
            return Err(Error::invalid("cochain spaces must have positive dimension"));
        }
        Ok(MultilinearMap {
            arity,
            gdim,
            mdim,
            coeffs: vec![S::zero(); mdim * gdim.pow(arity as u32)],
        })
    }

    /// The basis cochain sending `tuple ↦ e_p` and all other tuples to zero.
    pub fn basis(arity: usize, gdim: usize, mdim: usize, tuple: &[usize], p: usize) -> Result<Self> {
        let mut f = MultilinearMap::zero(arity, gdim, mdim)?;
        f.check_tuple(tuple)?;
        if p >= mdim {
            return Err(Error::invalid(format!(
                "output coordinate {p} out of range for module dimension {mdim}"
            )));
        }
        let idx = tuple_rank(tuple, gdim) * mdim + p;
        f.coeffs[idx] = S::one();
        Ok(f)
    }

    /// An arity-0 cochain holding one module vector.
    pub fn constant(gdim: usize, value: Vec<S>) -> Result<Self> {
        if gdim == 0 || value.is_empty() {
            return Err(Error::invalid("cochain spaces must have positive dimension"));
        }
        Ok(MultilinearMap {
            arity: 0,
            gdim,
            mdim: value.len(),
            coeffs: value,
        })
    }

    /// An arity-1 cochain from the matrix of a linear map `g → M` whose
    /// columns are the images of basis vectors.
    pub fn from_linear_matrix(mat: &Matrix<S>) -> Result<Self> {
        let gdim = mat.cols();
        let mdim = mat.rows();
        let mut f = MultilinearMap::zero(1, gdim, mdim)?;
        for j in 0..gdim {
            for p in 0..mdim {
                f.coeffs[j * mdim + p] = mat.get(p, j).clone();
            }
        }
        Ok(f)
    }

    /// Matrix of an arity-1 cochain (columns are images of basis vectors).
    pub fn to_linear_matrix(&self) -> Result<Matrix<S>> {
        if self.arity != 1 {
            return Err(Error::invalid(format!(
                "expected an arity-1 cochain, got arity {}",
                self.arity
            )));
        }
        let mut out = Matrix::zero(self.mdim, self.gdim);
        for j in 0..self.gdim {
            for p in 0..self.mdim {
                out.set(p, j, self.coeffs[j * self.mdim + p].clone());
            }
        }
        Ok(out)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn gdim(&self) -> usize {
        self.gdim
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    /// Flat coefficient array, tuple rank outermost, output coordinate
    /// innermost.
    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    fn check_tuple(&self, tuple: &[usize]) -> Result<()> {
        if tuple.len() != self.arity {
            return Err(Error::invalid(format!(
                "tuple of length {} against arity {}",
                tuple.len(),
                self.arity
            )));
        }
        if let Some(&bad) = tuple.iter().find(|&&i| i >= self.gdim) {
            return Err(Error::invalid(format!(
                "basis index {bad} out of range for dimension {}",
                self.gdim
            )));
        }
        Ok(())
    }

    /// Value on a basis tuple, as a borrowed coordinate slice of `M`.
    pub fn eval(&self, tuple: &[usize]) -> Result<&[S]> {
        self.check_tuple(tuple)?;
        let base = tuple_rank(tuple, self.gdim) * self.mdim;
        Ok(&self.coeffs[base..base + self.mdim])
    }

    pub fn set(&mut self, tuple: &[usize], p: usize, value: S) -> Result<()> {
        self.check_tuple(tuple)?;
        if p >= self.mdim {
            return Err(Error::invalid(format!(
                "output coordinate {p} out of range for module dimension {}",
                self.mdim
            )));
        }
        let idx = tuple_rank(tuple, self.gdim) * self.mdim + p;
        self.coeffs[idx] = value;
        Ok(())
    }

    /// Value on arbitrary coordinate vectors, expanded by multilinearity.
    pub fn eval_linear(&self, args: &[&[S]]) -> Result<Vec<S>> {
        if args.len() != self.arity {
            return Err(Error::invalid(format!(
                "{} arguments against arity {}",
                args.len(),
                self.arity
            )));
        }
        if let Some(bad) = args.iter().find(|a| a.len() != self.gdim) {
            return Err(Error::invalid(format!(
                "argument of length {} against dimension {}",
                bad.len(),
                self.gdim
            )));
        }
        let mut out = vec![S::zero(); self.mdim];
        self.eval_rec(args, 0, &S::one(), 0, &mut out);
        Ok(out)
    }

    fn eval_rec(&self, args: &[&[S]], pos: usize, coeff: &S, rank: usize, out: &mut [S]) {
        if pos == args.len() {
            let base = rank * self.mdim;
            for (p, o) in out.iter_mut().enumerate() {
                let x = &self.coeffs[base + p];
                if !x.is_zero() {
                    *o = o.clone() + coeff.clone() * x.clone();
                }
            }
            return;
        }
        for (idx, w) in args[pos].iter().enumerate() {
            if !w.is_zero() {
                let c = coeff.clone() * w.clone();
                self.eval_rec(args, pos + 1, &c, rank * self.gdim + idx, out);
            }
        }
    }

    fn check_shape(&self, other: &MultilinearMap<S>) -> Result<()> {
        if self.arity != other.arity || self.gdim != other.gdim || self.mdim != other.mdim {
            return Err(Error::invalid(format!(
                "cochain shape mismatch: arity {}/{} over {}x{} vs {}x{}",
                self.arity, other.arity, self.gdim, self.mdim, other.gdim, other.mdim
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &MultilinearMap<S>) -> Result<MultilinearMap<S>> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (o, x) in out.coeffs.iter_mut().zip(&other.coeffs) {
            if !x.is_zero() {
                *o = o.clone() + x.clone();
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultilinearMap<S>) -> Result<MultilinearMap<S>> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (o, x) in out.coeffs.iter_mut().zip(&other.coeffs) {
            if !x.is_zero() {
                *o = o.clone() - x.clone();
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> MultilinearMap<S> {
        let mut out = self.clone();
        for o in out.coeffs.iter_mut() {
            if !o.is_zero() {
                *o = -o.clone();
            }
        }
        out
    }

    pub fn scale(&self, c: &S) -> MultilinearMap<S> {
        let mut out = self.clone();
        for o in out.coeffs.iter_mut() {
            if !o.is_zero() {
                *o = c.clone() * o.clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|x| x.is_zero())
    }

    /// First nonzero coefficient as `(tuple, coordinate, value)`, if any —
    /// the canonical witness when a cochain identity fails.
    pub fn first_nonzero(&self) -> Option<(Vec<usize>, usize, &S)> {
        self.coeffs.iter().enumerate().find(|(_, x)| !x.is_zero()).map(|(idx, x)| {
            let rank = idx / self.mdim;
            (tuple_unrank(rank, self.gdim, self.arity), idx % self.mdim, x)
        })
    }
}

/// An element of the mapping-cone complex in degree `n`: a degree-`n`
/// algebra cochain together with a degree-`n−1` operator cochain. Degree 0
/// has no operator component.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeCochain<S> {
    f: MultilinearMap<S>,
    h: Option<MultilinearMap<S>>,
}

impl<S: Scalar> ConeCochain<S> {
    pub fn new(f: MultilinearMap<S>, h: Option<MultilinearMap<S>>) -> Result<Self> {
        match (&f.arity(), &h) {
            (0, Some(_)) => Err(Error::invalid("degree-0 cone cochains have no second component")),
            (n, None) if *n > 0 => Err(Error::invalid(
                "positive-degree cone cochains need a second component",
            )),
            (n, Some(hh)) if *n > 0 => {
                if hh.arity() + 1 != *n || hh.gdim() != f.gdim() || hh.mdim() != f.mdim() {
                    Err(Error::invalid(format!(
                        "second component of arity {} does not fit first component of arity {n}",
                        hh.arity()
                    )))
                } else {
                    Ok(ConeCochain { f, h })
                }
            }
            _ => Ok(ConeCochain { f, h }),
        }
    }

    pub fn degree(&self) -> usize {
        self.f.arity()
    }

    pub fn f(&self) -> &MultilinearMap<S> {
        &self.f
    }

    pub fn h(&self) -> Option<&MultilinearMap<S>> {
        self.h.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.h.as_ref().is_none_or(MultilinearMap::is_zero)
    }
}

fn check_compat<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    rep: &Representation<S>,
    f: &MultilinearMap<S>,
) -> Result<()> {
    if rep.gdim() != a.dim() {
        return Err(Error::invalid("representation and algebra dimensions disagree"));
    }
    if f.gdim() != a.dim() || f.mdim() != rep.mdim() {
        return Err(Error::invalid(format!(
            "cochain over {}x{} used with algebra dimension {} and module dimension {}",
            f.gdim(),
            f.mdim(),
            a.dim(),
            rep.mdim()
        )));
    }
    Ok(())
}

/// The algebra coboundary. On an `n`-cochain `f`,
///
/// ```text
/// (δf)(u₁,…,u_{n+1}) =  Σ_{i≤n}  (−1)^{i+1} l(u_i, f(…,û_i,…))
///                     + (−1)^{n+1} r(f(u₁,…,u_n), u_{n+1})
///                     + Σ_{i<j}   (−1)^i  f(…,û_i,…,[u_i,u_j],…)
/// ```
///
/// with the bracket substituted in slot `j` and indices 1-based in the
/// display. Arity-0 cochains are module vectors, sent to `a ↦ −r(a, ·)`.
pub fn delta<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    rep: &Representation<S>,
    f: &MultilinearMap<S>,
) -> Result<MultilinearMap<S>> {
    check_compat(a, rep, f)?;
    if f.arity() > MAX_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: f.arity(),
            cap: MAX_DEGREE,
        });
    }
    let n = f.arity();
    let g = f.gdim();
    let m = f.mdim();
    let mut out = MultilinearMap::zero(n + 1, g, m)?;

    // Bracket support grouped by the output coordinate: for each k, the
    // pairs (i, j) with a nonzero e_k coefficient in [e_i, e_j].
    let mut bracket_by_k: Vec<Vec<(usize, usize, S)>> = vec![Vec::new(); g];
    for i in 0..g {
        for j in 0..g {
            for (k, c) in a.bracket_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    bracket_by_k[k].push((i, j, c.clone()));
                }
            }
        }
    }

    for rank_s in 0..g.pow(n as u32) {
        let s = tuple_unrank(rank_s, g, n);
        for p in 0..m {
            let v = &f.coeffs[rank_s * m + p];
            if v.is_zero() {
                continue;
            }
            // Action terms: u_i acts from the left at each insertion slot,
            // and u_{n+1} from the right after the stored tuple.
            for slot in 0..n {
                let sgn: S = sign(slot); // (−1)^{i+1} with i = slot+1
                for act in 0..g {
                    let t = insert(&s, slot, act);
                    let base = tuple_rank(&t, g) * m;
                    scatter_column(&mut out.coeffs[base..base + m], rep.l(act), p, &(sgn.clone() * v.clone()));
                }
            }
            let sgn: S = sign(n + 1);
            for act in 0..g {
                let mut t = s.clone();
                t.push(act);
                let base = tuple_rank(&t, g) * m;
                scatter_column(&mut out.coeffs[base..base + m], rep.r(act), p, &(sgn.clone() * v.clone()));
            }
            // Substitution terms: the stored slot σ of f received a bracket
            // [u_i, u_j]; undoing the substitution, u_i was deleted at
            // position i−1 ≤ σ and u_j sat where the bracket landed.
            for slot in 0..n {
                let sgn: S = sign(slot + 1); // (−1)^i with i = slot+1
                for sigma in slot..n {
                    let k = s[sigma];
                    for (bi, bj, c) in &bracket_by_k[k] {
                        let mut s2 = s.clone();
                        s2[sigma] = *bj;
                        let t = insert(&s2, slot, *bi);
                        let idx = tuple_rank(&t, g) * m + p;
                        out.coeffs[idx] =
                            out.coeffs[idx].clone() + sgn.clone() * v.clone() * c.clone();
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Adds `coeff · (column p of mat)` into `out`.
fn scatter_column<S: Scalar>(out: &mut [S], mat: &Matrix<S>, p: usize, coeff: &S) {
    if coeff.is_zero() {
        return;
    }
    for (row, o) in out.iter_mut().enumerate() {
        let x = mat.get(row, p);
        if !x.is_zero() {
            *o = o.clone() + coeff.clone() * x.clone();
        }
    }
}

fn insert(s: &[usize], pos: usize, val: usize) -> Vec<usize> {
    let mut t = Vec::with_capacity(s.len() + 1);
    t.extend_from_slice(&s[..pos]);
    t.push(val);
    t.extend_from_slice(&s[pos..]);
    t
}

/// The operator coboundary: the algebra coboundary taken over the induced
/// bracket and induced actions of the chosen mode. In `Sum` mode this
/// reproduces, term by term, the expansion whose action coefficients are
/// `l(θu_i, ·) − θ_M l(u_i, ·)` and whose substitution slot carries
/// `[θu_i, u_j] + [u_i, θu_j]`.
pub fn partial_avg<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    rep: &Representation<S>,
    t: &AveragingOperator<S>,
    mode: InducedMode,
    f: &MultilinearMap<S>,
) -> Result<MultilinearMap<S>> {
    let (ia, ir) = induced_pair(a, rep, t, mode)?;
    delta(&ia, &ir, f)
}

fn induced_pair<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    rep: &Representation<S>,
    t: &AveragingOperator<S>,
    mode: InducedMode,
) -> Result<(LeibnizAlgebra<S>, Representation<S>)> {
    Ok((
        induced_algebra(a, t, mode)?,
        induced_representation(rep, t, mode)?,
    ))
}

/// The comparison map from algebra cochains to operator cochains:
///
/// ```text
/// (φf)(u₁,…,u_n) = f(θu₁,…,θu_n) − Σ_k θ_M f(θu₁,…,u_k,…,θu_n)
/// ```
///
/// Arity 0 has no correction terms, so `φ` is the identity there.
pub fn phi<S: Scalar>(
    rep: &Representation<S>,
    t: &AveragingOperator<S>,
    f: &MultilinearMap<S>,
) -> Result<MultilinearMap<S>> {
    if f.gdim() != t.dim() || f.mdim() != rep.mdim() {
        return Err(Error::invalid("cochain does not match operator and module dimensions"));
    }
    let tm = rep
        .theta_m()
        .ok_or_else(|| Error::invalid("comparison map requires the module operator"))?;
    let n = f.arity();
    let g = f.gdim();
    let m = f.mdim();

    // Row supports of θ: scattering f(θ·,…) over output tuples walks, for
    // each stored index s_i, the nonzero entries of row s_i.
    let row_support: Vec<Vec<(usize, S)>> = (0..g)
        .map(|r| {
            (0..g)
                .filter(|&c| !t.matrix().get(r, c).is_zero())
                .map(|c| (c, t.matrix().get(r, c).clone()))
                .collect()
        })
        .collect();

    let mut out = MultilinearMap::<S>::zero(n, g, m)?;
    for rank_s in 0..g.pow(n as u32) {
        let s = tuple_unrank(rank_s, g, n);
        for p in 0..m {
            let v = &f.coeffs[rank_s * m + p];
            if v.is_zero() {
                continue;
            }
            // Main term: weight ∏_i θ[s_i, T_i] lands on coordinate p.
            let supports: Vec<&[(usize, S)]> =
                s.iter().map(|&si| row_support[si].as_slice()).collect();
            scatter_products(&supports, g, v, &mut |t_rank, w| {
                let idx = t_rank * m + p;
                out.coeffs[idx] = out.coeffs[idx].clone() + w;
            });
            // Correction k: position k is pinned to s_k and the output is
            // pushed through θ_M.
            let tm_col: Vec<S> = tm.col(p);
            for k in 0..n {
                let pinned = [(s[k], S::one())];
                let mut supports: Vec<&[(usize, S)]> =
                    s.iter().map(|&si| row_support[si].as_slice()).collect();
                supports[k] = &pinned;
                scatter_products(&supports, g, v, &mut |t_rank, w| {
                    let base = t_rank * m;
                    for (row, tv) in tm_col.iter().enumerate() {
                        if !tv.is_zero() {
                            let idx = base + row;
                            out.coeffs[idx] = out.coeffs[idx].clone() - w.clone() * tv.clone();
                        }
                    }
                });
            }
        }
    }
    Ok(out)
}

/// Visits every tuple in the product of the supports, passing its rank and
/// the accumulated weight times `scale`.
fn scatter_products<S: Scalar>(
    supports: &[&[(usize, S)]],
    gdim: usize,
    scale: &S,
    visit: &mut impl FnMut(usize, S),
) {
    fn rec<S: Scalar>(
        supports: &[&[(usize, S)]],
        gdim: usize,
        pos: usize,
        rank: usize,
        weight: S,
        visit: &mut impl FnMut(usize, S),
    ) {
        if pos == supports.len() {
            visit(rank, weight);
            return;
        }
        for (idx, w) in supports[pos] {
            rec(
                supports,
                gdim,
                pos + 1,
                rank * gdim + idx,
                weight.clone() * w.clone(),
                visit,
            );
        }
    }
    rec(supports, gdim, 0, 0, scale.clone(), visit);
}

/// The mapping-cone differential `d(f, h) = (δf, −φf − ∂h)`; in degree 0
/// the second component is just `−φ⁰f = −f`.
pub fn cone_differential<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    rep: &Representation<S>,
    t: &AveragingOperator<S>,
    mode: InducedMode,
    x: &ConeCochain<S>,
) -> Result<ConeCochain<S>> {
    let df = delta(a, rep, x.f())?;
    let pf = phi(rep, t, x.f())?;
    let second = match x.h() {
        Some(h) => pf.neg().sub(&partial_avg(a, rep, t, mode, h)?)?,
        None => pf.neg(),
    };
    ConeCochain::new(df, Some(second))
}

/// The chain-map defect `φ(δf) − ∂(φf)` of a single cochain. Zero on all
/// basis cochains at consecutive degrees certifies that `φ` intertwines
/// the two coboundaries there.
pub fn chain_map_residual<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    rep: &Representation<S>,
    t: &AveragingOperator<S>,
    mode: InducedMode,
    f: &MultilinearMap<S>,
) -> Result<MultilinearMap<S>> {
    let left = phi(rep, t, &delta(a, rep, f)?)?;
    let right = partial_avg(a, rep, t, mode, &phi(rep, t, f)?)?;
    left.sub(&right)
}

/// Which linear operator on cochains to turn into a matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DifferentialOp {
    Delta,
    PartialAvg,
    Phi,
    ConeDifferential,
}

/// Matrix of the chosen operator at the given input degree, in the
/// canonical cochain bases (tuple rank outermost, output coordinate
/// innermost). For the cone the input basis is the concatenation of the
/// degree-`n` algebra block and the degree-`n−1` operator block, and rows
/// likewise stack the two output components.
///
/// The operator argument is unused for `Delta` but required for the other
/// three variants.
pub fn matrix_of<S: Scalar>(
    op: DifferentialOp,
    degree: usize,
    a: &LeibnizAlgebra<S>,
    rep: &Representation<S>,
    t: Option<&AveragingOperator<S>>,
    mode: InducedMode,
) -> Result<Matrix<S>> {
    if degree > MAX_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree,
            cap: MAX_DEGREE,
        });
    }
    if rep.gdim() != a.dim() {
        return Err(Error::invalid("representation and algebra dimensions disagree"));
    }
    let need_t = || t.ok_or_else(|| Error::invalid("this operator requires the averaging operator"));
    match op {
        DifferentialOp::Delta => columns_of(a, rep, degree, |f| delta(a, rep, f)),
        DifferentialOp::PartialAvg => {
            let (ia, ir) = induced_pair(a, rep, need_t()?, mode)?;
            columns_of(a, rep, degree, |f| delta(&ia, &ir, f))
        }
        DifferentialOp::Phi => {
            let t = need_t()?;
            columns_of_shape(a, rep, degree, degree, |f| phi(rep, t, f))
        }
        DifferentialOp::ConeDifferential => {
            let t = need_t()?;
            let top_left = matrix_of(DifferentialOp::Delta, degree, a, rep, None, mode)?;
            let lower_left = matrix_of(DifferentialOp::Phi, degree, a, rep, Some(t), mode)?.neg();
            let g = a.dim();
            let m = rep.mdim();
            let top_rows = g.pow(degree as u32 + 1) * m;
            let mid_rows = g.pow(degree as u32) * m;
            let left_cols = mid_rows;
            let right_cols = if degree == 0 {
                0
            } else {
                g.pow(degree as u32 - 1) * m
            };
            let mut out = Matrix::zero(top_rows + mid_rows, left_cols + right_cols);
            copy_block(&mut out, &top_left, 0, 0);
            copy_block(&mut out, &lower_left, top_rows, 0);
            if degree >= 1 {
                let lower_right =
                    matrix_of(DifferentialOp::PartialAvg, degree - 1, a, rep, Some(t), mode)?.neg();
                copy_block(&mut out, &lower_right, top_rows, left_cols);
            }
            Ok(out)
        }
    }
}

/// Assemble the matrix of a degree-raising operator column by column.
fn columns_of<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    rep: &Representation<S>,
    degree: usize,
    apply: impl Fn(&MultilinearMap<S>) -> Result<MultilinearMap<S>>,
) -> Result<Matrix<S>> {
    columns_of_shape(a, rep, degree, degree + 1, apply)
}

fn columns_of_shape<S: Scalar>(
    a: &LeibnizAlgebra<S>,
    rep: &Representation<S>,
    degree: usize,
    out_degree: usize,
    apply: impl Fn(&MultilinearMap<S>) -> Result<MultilinearMap<S>>,
) -> Result<Matrix<S>> {
    let g = a.dim();
    let m = rep.mdim();
    let cols = g.pow(degree as u32) * m;
    let rows = g.pow(out_degree as u32) * m;
    let mut out = Matrix::zero(rows, cols);
    for rank_s in 0..g.pow(degree as u32) {
        let s = tuple_unrank(rank_s, g, degree);
        for p in 0..m {
            let image = apply(&MultilinearMap::basis(degree, g, m, &s, p)?)?;
            let col = rank_s * m + p;
            for (row, x) in image.coeffs().iter().enumerate() {
                if !x.is_zero() {
                    out.set(row, col, x.clone());
                }
            }
        }
    }
    Ok(out)
}

fn copy_block<S: Scalar>(out: &mut Matrix<S>, block: &Matrix<S>, row0: usize, col0: usize) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let x = block.get(i, j);
            if !x.is_zero() {
                out.set(row0 + i, col0 + j, x.clone());
            }
        }
    }
}
