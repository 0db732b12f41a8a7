//! Order-by-order deformation equations and the order-1 compatibility
//! readings, each transcribed directly as the displayed sums.

use crate::alg::{NAlg, NOp};
use crate::cochain::{Arg, NMap};
use crate::lin::*;

/// A truncated deformation: coefficient lists `mu[0..=N]` (bilinear maps)
/// and `theta[0..=N]` (operators).
#[derive(Clone, Debug)]
pub struct NDef {
    pub mus: Vec<NMap>,
    pub thetas: Vec<NOp>,
}

impl NDef {
    pub fn order(&self) -> usize {
        self.mus.len() - 1
    }
}

/// Bilinear map from an algebra's structure constants.
pub fn mu_of(a: &NAlg) -> NMap {
    let mut m = NMap::zero(2, a.dim, a.dim);
    for i in 0..a.dim {
        for j in 0..a.dim {
            m.set(vec![i, j], a.bracket_basis(i, j));
        }
    }
    m
}

/// Residual of the order-`n` bracket equation at a basis triple:
/// `Σ_{i+j=n} μ_i(u, μ_j(v,w)) − μ_i(μ_j(u,v), w) − μ_i(v, μ_j(u,w))`.
pub fn eq1_residual(d: &NDef, n: usize, u: usize, v: usize, w: usize) -> Vec<Q> {
    let g = d.mus[0].gdim;
    let mut acc = zeros(g);
    for i in 0..=n {
        let j = n - i;
        if i > d.order() || j > d.order() {
            continue;
        }
        let mi = &d.mus[i];
        let mj = &d.mus[j];
        let t1 = mi.eval_mixed(&[Arg::E(u), Arg::V(mj.get(&[v, w]))]);
        let t2 = mi.eval_mixed(&[Arg::V(mj.get(&[u, v])), Arg::E(w)]);
        let t3 = mi.eval_mixed(&[Arg::E(v), Arg::V(mj.get(&[u, w]))]);
        acc = vec_add(&acc, &vec_sub(&t1, &vec_add(&t2, &t3)));
    }
    acc
}

/// Residuals of the order-`n` operator equation at a basis pair: the
/// left-hand sum minus the middle sum, and minus the right sum:
///
/// ```text
/// Σ_{i+j+k=n} μ_i(θ_j u, θ_k v)  vs  Σ θ_i(μ_j(θ_k u, v))  vs  Σ θ_i(μ_j(u, θ_k v))
/// ```
pub fn eq2_residuals(d: &NDef, n: usize, u: usize, v: usize) -> (Vec<Q>, Vec<Q>) {
    let g = d.mus[0].gdim;
    let mut left = zeros(g);
    let mut middle = zeros(g);
    let mut right = zeros(g);
    for i in 0..=n {
        for j in 0..=(n - i) {
            let k = n - i - j;
            if i > d.order() || j > d.order() || k > d.order() {
                continue;
            }
            left = vec_add(
                &left,
                &d.mus[i].eval_mixed(&[Arg::V(d.thetas[j].col(u)), Arg::V(d.thetas[k].col(v))]),
            );
            middle = vec_add(
                &middle,
                &d.thetas[i]
                    .apply(&d.mus[j].eval_mixed(&[Arg::V(d.thetas[k].col(u)), Arg::E(v)])),
            );
            right = vec_add(
                &right,
                &d.thetas[i]
                    .apply(&d.mus[j].eval_mixed(&[Arg::E(u), Arg::V(d.thetas[k].col(v))])),
            );
        }
    }
    (vec_sub(&left, &middle), vec_sub(&left, &right))
}

/// Do all orders `n ≤ N` pass both equations?
pub fn def_ok(d: &NDef) -> bool {
    let g = d.mus[0].gdim;
    for n in 0..=d.order() {
        for u in 0..g {
            for v in 0..g {
                for w in 0..g {
                    if !vec_is_zero(&eq1_residual(d, n, u, v, w)) {
                        return false;
                    }
                }
                let (r1, r2) = eq2_residuals(d, n, u, v);
                if !vec_is_zero(&r1) || !vec_is_zero(&r2) {
                    return false;
                }
            }
        }
    }
    true
}

/// The printed nine-term order-1 compatibility display, term by term with
/// the printed signs (reading its one stray `x_2` as `u_2`):
///
/// ```text
///   μ1(Tu, Tv) + μ0(T1 u, Tv) + μ0(Tu, T1 v)
/// − T1 μ0(Tu, v) − T μ0(T1 u, v) − T μ1(Tu, v)
/// − T1 μ0(u, Tv) − T μ1(u, Tv) − T μ0(u, T1 v)
/// ```
pub fn reading3_residual(
    mu0: &NMap,
    t0: &NOp,
    mu1: &NMap,
    t1: &NOp,
    u: usize,
    v: usize,
) -> Vec<Q> {
    let tu = t0.col(u);
    let tv = t0.col(v);
    let t1u = t1.col(u);
    let t1v = t1.col(v);
    let mut acc = mu1.eval_mixed(&[Arg::V(tu.clone()), Arg::V(tv.clone())]);
    acc = vec_add(
        &acc,
        &mu0.eval_mixed(&[Arg::V(t1u.clone()), Arg::V(tv.clone())]),
    );
    acc = vec_add(
        &acc,
        &mu0.eval_mixed(&[Arg::V(tu.clone()), Arg::V(t1v.clone())]),
    );
    acc = vec_sub(
        &acc,
        &t1.apply(&mu0.eval_mixed(&[Arg::V(tu.clone()), Arg::E(v)])),
    );
    acc = vec_sub(
        &acc,
        &t0.apply(&mu0.eval_mixed(&[Arg::V(t1u), Arg::E(v)])),
    );
    acc = vec_sub(&acc, &t0.apply(&mu1.eval_mixed(&[Arg::V(tu), Arg::E(v)])));
    acc = vec_sub(
        &acc,
        &t1.apply(&mu0.eval_mixed(&[Arg::E(u), Arg::V(tv.clone())])),
    );
    acc = vec_sub(&acc, &t0.apply(&mu1.eval_mixed(&[Arg::E(u), Arg::V(tv)])));
    acc = vec_sub(&acc, &t0.apply(&mu0.eval_mixed(&[Arg::E(u), Arg::V(t1v)])));
    acc
}

/// Order-n equivalence residual for the bracket sides:
/// `Σ_{i+j=n} ψ_i(μ'_j(u,v)) − Σ_{i+j+k=n} μ_i(ψ_j u, ψ_k v)`.
pub fn eq5_residual(
    d: &NDef,
    d2: &NDef,
    psis: &[NOp],
    n: usize,
    u: usize,
    v: usize,
) -> Vec<Q> {
    let g = d.mus[0].gdim;
    let top = psis.len() - 1;
    let mut lhs = zeros(g);
    for i in 0..=n {
        let j = n - i;
        if i > top || j > d2.order() {
            continue;
        }
        lhs = vec_add(&lhs, &psis[i].apply(&d2.mus[j].get(&[u, v])));
    }
    let mut rhs = zeros(g);
    for i in 0..=n {
        for j in 0..=(n - i) {
            let k = n - i - j;
            if i > d.order() || j > top || k > top {
                continue;
            }
            rhs = vec_add(
                &rhs,
                &d.mus[i].eval_mixed(&[Arg::V(psis[j].col(u)), Arg::V(psis[k].col(v))]),
            );
        }
    }
    vec_sub(&lhs, &rhs)
}

/// Order-n equivalence residual for the operator sides, as a matrix:
/// `Σ_{i+j=n} ψ_i∘θ'_j − Σ_{i+j=n} θ_i∘ψ_j`.
pub fn eq6_residual(d: &NDef, d2: &NDef, psis: &[NOp], n: usize) -> Vec<Vec<Q>> {
    let g = d.mus[0].gdim;
    let top = psis.len() - 1;
    let mut acc = mat_zero(g, g);
    for i in 0..=n {
        let j = n - i;
        if i <= top && j <= d2.order() {
            acc = mat_add(&acc, &mat_mul(&psis[i].0, &d2.thetas[j].0));
        }
        if i <= d.order() && j <= top {
            acc = mat_sub(&acc, &mat_mul(&d.thetas[i].0, &psis[j].0));
        }
    }
    acc
}
