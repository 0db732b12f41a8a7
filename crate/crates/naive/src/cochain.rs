//! Cochains as tuple-keyed maps and the three differentials transcribed
//! term by term from their defining expansions.

use std::collections::BTreeMap;

use crate::alg::{induced, induced_rep, NAlg, NOp, NRep};
use crate::lin::*;
use num_traits::Zero;

/// An argument to a multilinear map: either a basis index or a coordinate
/// vector to be expanded by linearity.
#[derive(Clone, Debug)]
pub enum Arg {
    E(usize),
    V(Vec<Q>),
}

/// A multilinear map `g^{⊗n} → M`, stored pointwise on basis tuples.
#[derive(Clone, Debug)]
pub struct NMap {
    pub n: usize,
    pub gdim: usize,
    pub mdim: usize,
    pub vals: BTreeMap<Vec<usize>, Vec<Q>>,
}

impl NMap {
    pub fn zero(n: usize, gdim: usize, mdim: usize) -> Self {
        NMap {
            n,
            gdim,
            mdim,
            vals: BTreeMap::new(),
        }
    }

    /// The basis map sending `tuple ↦ e_p` and every other tuple to zero.
    pub fn basis(n: usize, gdim: usize, mdim: usize, tuple: &[usize], p: usize) -> Self {
        let mut m = NMap::zero(n, gdim, mdim);
        m.set(tuple.to_vec(), basis_vec(mdim, p));
        m
    }

    /// A 1-cochain from the matrix of a linear map (columns are images).
    pub fn from_matrix(gdim: usize, mdim: usize, mat: &[Vec<Q>]) -> Self {
        let mut m = NMap::zero(1, gdim, mdim);
        for j in 0..gdim {
            m.set(vec![j], mat_col(mat, j));
        }
        m
    }

    pub fn get(&self, tuple: &[usize]) -> Vec<Q> {
        self.vals
            .get(tuple)
            .cloned()
            .unwrap_or_else(|| zeros(self.mdim))
    }

    pub fn set(&mut self, tuple: Vec<usize>, v: Vec<Q>) {
        if vec_is_zero(&v) {
            self.vals.remove(&tuple);
        } else {
            self.vals.insert(tuple, v);
        }
    }

    /// Evaluate with vector arguments expanded by multilinearity.
    pub fn eval_mixed(&self, args: &[Arg]) -> Vec<Q> {
        if let Some(pos) = args.iter().position(|a| matches!(a, Arg::V(_))) {
            let Arg::V(v) = &args[pos] else { unreachable!() };
            let mut out = zeros(self.mdim);
            for (k, coeff) in v.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let mut inner = args.to_vec();
                inner[pos] = Arg::E(k);
                out = vec_add(&out, &vec_scale(coeff, &self.eval_mixed(&inner)));
            }
            out
        } else {
            let tuple: Vec<usize> = args
                .iter()
                .map(|a| match a {
                    Arg::E(i) => *i,
                    Arg::V(_) => unreachable!(),
                })
                .collect();
            self.get(&tuple)
        }
    }

    pub fn add(&self, other: &NMap) -> NMap {
        let mut out = self.clone();
        for (t, v) in &other.vals {
            out.set(t.clone(), vec_add(&out.get(t), v));
        }
        out
    }

    pub fn sub(&self, other: &NMap) -> NMap {
        let mut out = self.clone();
        for (t, v) in &other.vals {
            out.set(t.clone(), vec_sub(&out.get(t), v));
        }
        out
    }

    pub fn neg(&self) -> NMap {
        let mut out = NMap::zero(self.n, self.gdim, self.mdim);
        for (t, v) in &self.vals {
            out.set(t.clone(), vec_neg(v));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.vals.values().all(|v| vec_is_zero(v))
    }

    pub fn equals(&self, other: &NMap) -> bool {
        self.sub(other).is_zero()
    }
}

/// All index tuples of the given length in lexicographic order.
pub fn tuples(gdim: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for t in &out {
            for i in 0..gdim {
                let mut t2 = t.clone();
                t2.push(i);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

fn sign(k: usize) -> Q {
    if k % 2 == 0 {
        qi(1)
    } else {
        qi(-1)
    }
}

/// The coboundary, transcribed with 1-based summation indices:
///
/// ```text
/// (δf)(u_1..u_{n+1}) =  Σ_{i=1..n} (-1)^{i+1} l(u_i, f(.. û_i ..))
///                     + (-1)^{n+1} r(f(u_1..u_n), u_{n+1})
///                     + Σ_{i<j}    (-1)^i f(.. û_i .. [u_i,u_j] at slot j ..)
/// ```
pub fn delta(a: &NAlg, rep: &NRep, f: &NMap) -> NMap {
    let n = f.n;
    let g = a.dim;
    let mut out = NMap::zero(n + 1, g, rep.mdim);
    for t in tuples(g, n + 1) {
        let mut acc = zeros(rep.mdim);
        for i in 1..=n {
            let mut rest = t.clone();
            rest.remove(i - 1);
            let v = f.get(&rest);
            let lv = rep.l_apply(&basis_vec(g, t[i - 1]), &v);
            acc = vec_add(&acc, &vec_scale(&sign(i + 1), &lv));
        }
        let v = f.get(&t[..n]);
        let rv = rep.r_apply(&v, &basis_vec(g, t[n]));
        acc = vec_add(&acc, &vec_scale(&sign(n + 1), &rv));
        for i in 1..=n {
            for j in (i + 1)..=(n + 1) {
                let br = a.bracket_basis(t[i - 1], t[j - 1]);
                let mut args: Vec<Arg> = t.iter().map(|&x| Arg::E(x)).collect();
                args[j - 1] = Arg::V(br);
                args.remove(i - 1);
                let v = f.eval_mixed(&args);
                acc = vec_add(&acc, &vec_scale(&sign(i), &v));
            }
        }
        out.set(t, acc);
    }
    out
}

/// The operator coboundary written out as its five displayed groups
/// (actions lifted through `T`, their `theta_m` corrections, and the summed
/// bracket in the substitution slot).
pub fn partial_sum_literal(a: &NAlg, rep: &NRep, t_op: &NOp, f: &NMap) -> NMap {
    let n = f.n;
    let g = a.dim;
    let tm = rep.theta_m.as_ref().expect("needs theta_m");
    let mut out = NMap::zero(n + 1, g, rep.mdim);
    for t in tuples(g, n + 1) {
        let mut acc = zeros(rep.mdim);
        for i in 1..=n {
            let mut rest = t.clone();
            rest.remove(i - 1);
            let v = f.get(&rest);
            let term = rep.l_apply(&t_op.col(t[i - 1]), &v);
            acc = vec_add(&acc, &vec_scale(&sign(i + 1), &term));
            let corr = mat_vec(tm, &rep.l_apply(&basis_vec(g, t[i - 1]), &v));
            acc = vec_sub(&acc, &vec_scale(&sign(i + 1), &corr));
        }
        let v = f.get(&t[..n]);
        let term = rep.r_apply(&v, &t_op.col(t[n]));
        acc = vec_add(&acc, &vec_scale(&sign(n + 1), &term));
        let corr = mat_vec(tm, &rep.r_apply(&v, &basis_vec(g, t[n])));
        acc = vec_sub(&acc, &vec_scale(&sign(n + 1), &corr));
        for i in 1..=n {
            for j in (i + 1)..=(n + 1) {
                let br = vec_add(
                    &a.bracket(&t_op.col(t[i - 1]), &basis_vec(g, t[j - 1])),
                    &a.bracket(&basis_vec(g, t[i - 1]), &t_op.col(t[j - 1])),
                );
                let mut args: Vec<Arg> = t.iter().map(|&x| Arg::E(x)).collect();
                args[j - 1] = Arg::V(br);
                args.remove(i - 1);
                let v = f.eval_mixed(&args);
                acc = vec_add(&acc, &vec_scale(&sign(i), &v));
            }
        }
        out.set(t, acc);
    }
    out
}

/// Operator coboundary for either mode; strict mode is the coboundary of
/// the induced pair, sum mode the literal expansion above.
pub fn partial(a: &NAlg, rep: &NRep, t: &NOp, sum: bool, f: &NMap) -> NMap {
    if sum {
        partial_sum_literal(a, rep, t, f)
    } else {
        delta(&induced(a, t, false), &induced_rep(rep, t, false), f)
    }
}

/// The comparison map:
/// `φ(f)(u_1..u_n) = f(Tu_1..Tu_n) − Σ_k θ_M f(Tu_1.. u_k ..Tu_n)`.
pub fn phi(t: &NOp, theta_m: &[Vec<Q>], f: &NMap) -> NMap {
    let n = f.n;
    let g = f.gdim;
    let mut out = NMap::zero(n, g, f.mdim);
    for tup in tuples(g, n) {
        let th_args: Vec<Arg> = tup.iter().map(|&x| Arg::V(t.col(x))).collect();
        let mut acc = f.eval_mixed(&th_args);
        for k in 0..n {
            let mut args = th_args.clone();
            args[k] = Arg::E(tup[k]);
            acc = vec_sub(&acc, &mat_vec(theta_m, &f.eval_mixed(&args)));
        }
        out.set(tup, acc);
    }
    out
}

/// Mapping-cone differential `d(f, h) = (δf, −φf − ∂h)`; `h` is absent in
/// degree 0, where the second component is `−φ⁰f = −f`.
pub fn cone_d(
    a: &NAlg,
    rep: &NRep,
    t: &NOp,
    sum: bool,
    f: &NMap,
    h: Option<&NMap>,
) -> (NMap, NMap) {
    let tm = rep.theta_m.as_ref().expect("needs theta_m");
    let df = delta(a, rep, f);
    let pf = if f.n == 0 { f.clone() } else { phi(t, tm, f) };
    let second = match h {
        Some(h) => pf.neg().sub(&partial(a, rep, t, sum, h)),
        None => pf.neg(),
    };
    (df, second)
}

/// Chain-map defect `φ(δf) − ∂(φf)` for one cochain.
pub fn chain_residual(a: &NAlg, rep: &NRep, t: &NOp, sum: bool, f: &NMap) -> NMap {
    let tm = rep.theta_m.as_ref().expect("needs theta_m");
    let pf = if f.n == 0 { f.clone() } else { phi(t, tm, f) };
    phi(t, tm, &delta(a, rep, f)).sub(&partial(a, rep, t, sum, &pf))
}

/// Matrix of a linear operator on cochains, columns indexed by basis maps
/// `(tuple, p)` with the tuple outermost, rows likewise for the output.
pub fn op_matrix<F>(n_in: usize, n_out: usize, gdim: usize, mdim: usize, op: F) -> Vec<Vec<Q>>
where
    F: Fn(&NMap) -> NMap,
{
    let cols_tuples = tuples(gdim, n_in);
    let rows_tuples = tuples(gdim, n_out);
    let mut cols: Vec<Vec<Q>> = Vec::new();
    for t in &cols_tuples {
        for p in 0..mdim {
            let image = op(&NMap::basis(n_in, gdim, mdim, t, p));
            let mut col = Vec::new();
            for rt in &rows_tuples {
                col.extend(image.get(rt));
            }
            cols.push(col);
        }
    }
    let rows = rows_tuples.len() * mdim;
    (0..rows)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect()
}

/// Cone-complex matrix at degree `n` over the concatenated basis
/// (f-block, then h-block).
pub fn cone_matrix(a: &NAlg, rep: &NRep, t: &NOp, sum: bool, n: usize) -> Vec<Vec<Q>> {
    let g = a.dim;
    let m = rep.mdim;
    let out_rows = tuples(g, n + 1).len() * m + tuples(g, n).len() * m;
    let pack = |df: &NMap, second: &NMap| -> Vec<Q> {
        let mut col = Vec::new();
        for rt in tuples(g, n + 1) {
            col.extend(df.get(&rt));
        }
        for rt in tuples(g, n) {
            col.extend(second.get(&rt));
        }
        col
    };
    let mut cols: Vec<Vec<Q>> = Vec::new();
    for tup in tuples(g, n) {
        for p in 0..m {
            let f = NMap::basis(n, g, m, &tup, p);
            let h = if n == 0 {
                None
            } else {
                Some(NMap::zero(n - 1, g, m))
            };
            let (df, second) = cone_d(a, rep, t, sum, &f, h.as_ref());
            cols.push(pack(&df, &second));
        }
    }
    if n >= 1 {
        for tup in tuples(g, n - 1) {
            for p in 0..m {
                let f = NMap::zero(n, g, m);
                let h = NMap::basis(n - 1, g, m, &tup, p);
                let (df, second) = cone_d(a, rep, t, sum, &f, Some(&h));
                cols.push(pack(&df, &second));
            }
        }
    }
    (0..out_rows)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect()
}

/// Which complex a matrix/betti request refers to.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Kind {
    La,
    Alo,
    Al,
}

/// Matrix of the chosen complex's differential at degree `n`.
pub fn complex_matrix(
    kind: Kind,
    a: &NAlg,
    rep: &NRep,
    t: &NOp,
    sum: bool,
    n: usize,
) -> Vec<Vec<Q>> {
    match kind {
        Kind::La => op_matrix(n, n + 1, a.dim, rep.mdim, |f| delta(a, rep, f)),
        Kind::Alo => op_matrix(n, n + 1, a.dim, rep.mdim, |f| partial(a, rep, t, sum, f)),
        Kind::Al => cone_matrix(a, rep, t, sum, n),
    }
}

/// Cohomology dimension at degree `n`, or `None` when the complex fails
/// `d∘d = 0` at degree `n-1` or `n`.
pub fn betti(kind: Kind, a: &NAlg, rep: &NRep, t: &NOp, sum: bool, n: usize) -> Option<usize> {
    let dn = complex_matrix(kind, a, rep, t, sum, n);
    let dnext = complex_matrix(kind, a, rep, t, sum, n + 1);
    if !mat_is_zero(&mat_mul(&dnext, &dn)) {
        return None;
    }
    let rank_prev = if n == 0 {
        0
    } else {
        let dprev = complex_matrix(kind, a, rep, t, sum, n - 1);
        if !mat_is_zero(&mat_mul(&dn, &dprev)) {
            return None;
        }
        rank(&dprev)
    };
    let cols = if dn.is_empty() { 0 } else { dn[0].len() };
    Some(cols - rank(&dn) - rank_prev)
}
