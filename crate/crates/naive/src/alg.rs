//! Algebras, operators, and representations with every check spelled out as
//! a loop over basis tuples.

use crate::lin::*;
use num_traits::Zero;

/// A bracket given by structure constants: `c[i][j]` is the coordinate
/// vector of `[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct NAlg {
    pub dim: usize,
    pub c: Vec<Vec<Vec<Q>>>,
}

impl NAlg {
    pub fn zero(dim: usize) -> Self {
        NAlg {
            dim,
            c: vec![vec![zeros(dim); dim]; dim],
        }
    }

    /// Build from 0-based `(i, j, k, coeff)` entries.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Q)]) -> Self {
        let mut a = NAlg::zero(dim);
        for (i, j, k, v) in entries {
            a.c[*i][*j][*k] = v.clone();
        }
        a
    }

    /// Bracket of two coordinate vectors, expanded by bilinearity.
    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = zeros(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let coeff = &x[i] * &y[j];
                out = vec_add(&out, &vec_scale(&coeff, &self.c[i][j]));
            }
        }
        out
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Q> {
        self.c[i][j].clone()
    }
}

/// A linear operator as a dense square matrix (list of rows).
#[derive(Clone, Debug, PartialEq)]
pub struct NOp(pub Vec<Vec<Q>>);

impl NOp {
    pub fn id(n: usize) -> Self {
        NOp(mat_id(n))
    }

    pub fn zero(n: usize) -> Self {
        NOp(mat_zero(n, n))
    }

    pub fn diag(entries: &[Q]) -> Self {
        let n = entries.len();
        let mut m = mat_zero(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[i][i] = e.clone();
        }
        NOp(m)
    }

    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        mat_vec(&self.0, x)
    }

    /// Image of the basis vector `e_j`.
    pub fn col(&self, j: usize) -> Vec<Q> {
        mat_col(&self.0, j)
    }
}

/// Residual of the left Leibniz identity at a basis triple:
/// `[u,[v,w]] - [[u,v],w] - [v,[u,w]]`.
pub fn left_leibniz_residual(a: &NAlg, u: usize, v: usize, w: usize) -> Vec<Q> {
    let eu = basis_vec(a.dim, u);
    let ev = basis_vec(a.dim, v);
    let ew = basis_vec(a.dim, w);
    let lhs = a.bracket(&eu, &a.bracket(&ev, &ew));
    let r1 = a.bracket(&a.bracket(&eu, &ev), &ew);
    let r2 = a.bracket(&ev, &a.bracket(&eu, &ew));
    vec_sub(&lhs, &vec_add(&r1, &r2))
}

/// Residual of the right Leibniz identity at a basis triple:
/// `[[u,v],w] - [[u,w],v] - [u,[v,w]]`.
pub fn right_leibniz_residual(a: &NAlg, u: usize, v: usize, w: usize) -> Vec<Q> {
    let eu = basis_vec(a.dim, u);
    let ev = basis_vec(a.dim, v);
    let ew = basis_vec(a.dim, w);
    let lhs = a.bracket(&a.bracket(&eu, &ev), &ew);
    let r1 = a.bracket(&a.bracket(&eu, &ew), &ev);
    let r2 = a.bracket(&eu, &a.bracket(&ev, &ew));
    vec_sub(&lhs, &vec_add(&r1, &r2))
}

/// All failing triples for the chosen convention, lexicographically.
pub fn leibniz_failures(a: &NAlg, left: bool) -> Vec<([usize; 3], Vec<Q>)> {
    let mut out = Vec::new();
    for u in 0..a.dim {
        for v in 0..a.dim {
            for w in 0..a.dim {
                let res = if left {
                    left_leibniz_residual(a, u, v, w)
                } else {
                    right_leibniz_residual(a, u, v, w)
                };
                if !vec_is_zero(&res) {
                    out.push(([u, v, w], res));
                }
            }
        }
    }
    out
}

/// Residuals of the two averaging equalities at a basis pair:
/// `[Tu,Tv] - T[Tu,v]` and `[Tu,Tv] - T[u,Tv]`.
pub fn averaging_residuals(a: &NAlg, t: &NOp, u: usize, v: usize) -> (Vec<Q>, Vec<Q>) {
    let eu = basis_vec(a.dim, u);
    let ev = basis_vec(a.dim, v);
    let tu = t.col(u);
    let tv = t.col(v);
    let lhs = a.bracket(&tu, &tv);
    let mid = t.apply(&a.bracket(&tu, &ev));
    let rhs = t.apply(&a.bracket(&eu, &tv));
    (vec_sub(&lhs, &mid), vec_sub(&lhs, &rhs))
}

pub fn averaging_ok(a: &NAlg, t: &NOp) -> bool {
    for u in 0..a.dim {
        for v in 0..a.dim {
            let (r1, r2) = averaging_residuals(a, t, u, v);
            if !vec_is_zero(&r1) || !vec_is_zero(&r2) {
                return false;
            }
        }
    }
    true
}

/// Induced bracket: `[Te_i, e_j]`, plus `[e_i, Te_j]` when `sum` is set.
pub fn induced(a: &NAlg, t: &NOp, sum: bool) -> NAlg {
    let mut out = NAlg::zero(a.dim);
    for i in 0..a.dim {
        for j in 0..a.dim {
            let mut v = a.bracket(&t.col(i), &basis_vec(a.dim, j));
            if sum {
                v = vec_add(&v, &a.bracket(&basis_vec(a.dim, i), &t.col(j)));
            }
            out.c[i][j] = v;
        }
    }
    out
}

/// Does `p` carry brackets of `a` to brackets of `a2` and intertwine the
/// operators?
pub fn is_morphism(a: &NAlg, a2: &NAlg, t: &NOp, t2: &NOp, p: &[Vec<Q>]) -> bool {
    for i in 0..a.dim {
        for j in 0..a.dim {
            let lhs = mat_vec(p, &a.bracket_basis(i, j));
            let rhs = a2.bracket(&mat_col(p, i), &mat_col(p, j));
            if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
                return false;
            }
        }
    }
    mat_is_zero(&mat_sub(&mat_mul(&t2.0, p), &mat_mul(p, &t.0)))
}

/// Actions stored as one matrix per algebra basis element: `l[i]` is the
/// matrix of `a ↦ l(e_i, a)` and `r[j]` of `a ↦ r(a, e_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NRep {
    pub gdim: usize,
    pub mdim: usize,
    pub l: Vec<Vec<Vec<Q>>>,
    pub r: Vec<Vec<Vec<Q>>>,
    pub theta_m: Option<Vec<Vec<Q>>>,
}

impl NRep {
    /// `l(x, v)` for a coordinate vector `x` on the algebra side.
    pub fn l_apply(&self, x: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = zeros(self.mdim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                out = vec_add(&out, &vec_scale(xi, &mat_vec(&self.l[i], v)));
            }
        }
        out
    }

    /// `r(v, x)` for a coordinate vector `x` on the algebra side.
    pub fn r_apply(&self, v: &[Q], x: &[Q]) -> Vec<Q> {
        let mut out = zeros(self.mdim);
        for (j, xj) in x.iter().enumerate() {
            if !xj.is_zero() {
                out = vec_add(&out, &vec_scale(xj, &mat_vec(&self.r[j], v)));
            }
        }
        out
    }
}

/// Self-representation: both actions are the bracket, `theta_m` is the
/// averaging operator when given.
pub fn self_rep(a: &NAlg, t: Option<&NOp>) -> NRep {
    let g = a.dim;
    let mut l = vec![mat_zero(g, g); g];
    let mut r = vec![mat_zero(g, g); g];
    for i in 0..g {
        for b in 0..g {
            for k in 0..g {
                // column b of l[i] is [e_i, e_b]; column b of r[j] is [e_b, e_j]
                l[i][k][b] = a.c[i][b][k].clone();
                r[i][k][b] = a.c[b][i][k].clone();
            }
        }
    }
    NRep {
        gdim: g,
        mdim: g,
        l,
        r,
        theta_m: t.map(|op| op.0.clone()),
    }
}

/// The three representation identities checked on every basis tuple.
pub fn rep_ok(a: &NAlg, rep: &NRep) -> bool {
    for u in 0..a.dim {
        for v in 0..a.dim {
            for p in 0..rep.mdim {
                let ea = basis_vec(rep.mdim, p);
                let eu = basis_vec(a.dim, u);
                let ev = basis_vec(a.dim, v);
                let br = a.bracket(&eu, &ev);
                // l(u, l(v, a)) = l([u,v], a) + l(v, l(u, a))
                let i1 = vec_sub(
                    &rep.l_apply(&eu, &rep.l_apply(&ev, &ea)),
                    &vec_add(
                        &rep.l_apply(&br, &ea),
                        &rep.l_apply(&ev, &rep.l_apply(&eu, &ea)),
                    ),
                );
                // l(u, r(a, v)) = r(l(u, a), v) + r(a, [u,v])
                let i2 = vec_sub(
                    &rep.l_apply(&eu, &rep.r_apply(&ea, &ev)),
                    &vec_add(
                        &rep.r_apply(&rep.l_apply(&eu, &ea), &ev),
                        &rep.r_apply(&ea, &br),
                    ),
                );
                // r(a, [u,v]) = r(r(a, u), v) + l(u, r(a, v))
                let i3 = vec_sub(
                    &rep.r_apply(&ea, &br),
                    &vec_add(
                        &rep.r_apply(&rep.r_apply(&ea, &eu), &ev),
                        &rep.l_apply(&eu, &rep.r_apply(&ea, &ev)),
                    ),
                );
                if !vec_is_zero(&i1) || !vec_is_zero(&i2) || !vec_is_zero(&i3) {
                    return false;
                }
            }
        }
    }
    true
}

/// The four averaging-representation equalities (two three-way chains).
pub fn avg_rep_ok(a: &NAlg, rep: &NRep, t: &NOp) -> bool {
    let Some(tm) = &rep.theta_m else {
        return false;
    };
    for u in 0..a.dim {
        for p in 0..rep.mdim {
            let tu = t.col(u);
            let eu = basis_vec(a.dim, u);
            let ea = basis_vec(rep.mdim, p);
            let ta = mat_col(tm, p);
            // l(Tu, Ta) = Tm l(Tu, a) = Tm l(u, Ta)
            let lhs = rep.l_apply(&tu, &ta);
            let m1 = mat_vec(tm, &rep.l_apply(&tu, &ea));
            let m2 = mat_vec(tm, &rep.l_apply(&eu, &ta));
            // r(Ta, Tu) = Tm r(Ta, u) = Tm r(a, Tu)
            let rhs = rep.r_apply(&ta, &tu);
            let n1 = mat_vec(tm, &rep.r_apply(&ta, &eu));
            let n2 = mat_vec(tm, &rep.r_apply(&ea, &tu));
            if !vec_is_zero(&vec_sub(&lhs, &m1))
                || !vec_is_zero(&vec_sub(&lhs, &m2))
                || !vec_is_zero(&vec_sub(&rhs, &n1))
                || !vec_is_zero(&vec_sub(&rhs, &n2))
            {
                return false;
            }
        }
    }
    true
}

/// Induced actions: `l'(e_i,·) = l(Te_i,·)` and `r'(·,e_j) = r(·,Te_j)`,
/// each minus the `theta_m`-composed original action when `sum` is set.
pub fn induced_rep(rep: &NRep, t: &NOp, sum: bool) -> NRep {
    let g = rep.gdim;
    let m = rep.mdim;
    let mut l = vec![mat_zero(m, m); g];
    let mut r = vec![mat_zero(m, m); g];
    for i in 0..g {
        for (s, coeff) in t.col(i).iter().enumerate() {
            if !coeff.is_zero() {
                for row in 0..m {
                    for colm in 0..m {
                        l[i][row][colm] += coeff * &rep.l[s][row][colm];
                        r[i][row][colm] += coeff * &rep.r[s][row][colm];
                    }
                }
            }
        }
        if sum {
            let tm = rep.theta_m.as_ref().expect("sum mode needs theta_m");
            l[i] = mat_sub(&l[i], &mat_mul(tm, &rep.l[i]));
            r[i] = mat_sub(&r[i], &mat_mul(tm, &rep.r[i]));
        }
    }
    NRep {
        gdim: g,
        mdim: m,
        l,
        r,
        theta_m: rep.theta_m.clone(),
    }
}
