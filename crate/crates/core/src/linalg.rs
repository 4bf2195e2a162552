//! Gaussian elimination over a field context. Matrices are flat row-major
//! slices of [`Fe`]; linear algebra over the subfield F_q is the same code
//! applied to entries that happen to lie in F_q.

use crate::gf::{Fe, FieldCtx};

/// Reduce to reduced row echelon form in place. Returns the pivot columns.
pub fn rref(ctx: &FieldCtx, data: &mut [Fe], rows: usize, cols: usize) -> Vec<usize> {
    debug_assert_eq!(data.len(), rows * cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !data[i * cols + c].is_zero()) else {
            continue;
        };
        if pr != r {
            for k in 0..cols {
                data.swap(pr * cols + k, r * cols + k);
            }
        }
        let inv = ctx.inv_nz(data[r * cols + c]);
        for k in c..cols {
            data[r * cols + k] = ctx.mul(data[r * cols + k], inv);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = data[i * cols + c];
            if f.is_zero() {
                continue;
            }
            for k in c..cols {
                let t = ctx.mul(f, data[r * cols + k]);
                data[i * cols + k] = ctx.sub(data[i * cols + k], t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank by forward elimination only; destroys `data`.
pub fn rank_in_place(ctx: &FieldCtx, data: &mut [Fe], rows: usize, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !data[i * cols + c].is_zero()) else {
            continue;
        };
        if pr != r {
            for k in c..cols {
                data.swap(pr * cols + k, r * cols + k);
            }
        }
        let inv = ctx.inv_nz(data[r * cols + c]);
        for i in r + 1..rows {
            let lead = data[i * cols + c];
            if lead.is_zero() {
                continue;
            }
            let f = ctx.mul(lead, inv);
            for k in c + 1..cols {
                let t = ctx.mul(f, data[r * cols + k]);
                data[i * cols + k] = ctx.sub(data[i * cols + k], t);
            }
            data[i * cols + c] = Fe::ZERO;
        }
        r += 1;
    }
    r
}

pub fn rank(ctx: &FieldCtx, data: &[Fe], rows: usize, cols: usize) -> usize {
    let mut m = data.to_vec();
    rank_in_place(ctx, &mut m, rows, cols)
}

/// Inverse of a square matrix.
pub fn inverse(ctx: &FieldCtx, m: &[Fe], n: usize) -> Option<Vec<Fe>> {
    let w = 2 * n;
    let mut aug = vec![Fe::ZERO; n * w];
    for i in 0..n {
        aug[i * w..i * w + n].copy_from_slice(&m[i * n..i * n + n]);
        aug[i * w + n + i] = Fe::ONE;
    }
    let pivots = rref(ctx, &mut aug, n, w);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let mut out = vec![Fe::ZERO; n * n];
    for i in 0..n {
        out[i * n..i * n + n].copy_from_slice(&aug[i * w + n..i * w + w]);
    }
    Some(out)
}

/// Basis of {v : M v = 0}, normalized to reduced row echelon form
/// (leading entry 1, ordered by pivot).
pub fn nullspace(ctx: &FieldCtx, m: &[Fe], rows: usize, cols: usize) -> Vec<Vec<Fe>> {
    let mut a = m.to_vec();
    let pivots = rref(ctx, &mut a, rows, cols);
    let mut is_pivot = vec![None; cols];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = vec![Fe::ZERO; cols];
        v[free] = Fe::ONE;
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = ctx.neg(a[r * cols + free]);
        }
        basis.push(v);
    }
    row_reduce(ctx, basis, cols)
}

/// Reduced row echelon form of a list of row vectors, zero rows dropped.
pub fn row_reduce(ctx: &FieldCtx, vecs: Vec<Vec<Fe>>, cols: usize) -> Vec<Vec<Fe>> {
    let rows = vecs.len();
    let mut flat: Vec<Fe> = vecs.into_iter().flatten().collect();
    let pivots = rref(ctx, &mut flat, rows, cols);
    flat.chunks(cols.max(1))
        .take(pivots.len())
        .map(<[Fe]>::to_vec)
        .collect()
}

/// One solution of M x = b, if any.
pub fn solve(ctx: &FieldCtx, m: &[Fe], rows: usize, cols: usize, b: &[Fe]) -> Option<Vec<Fe>> {
    let w = cols + 1;
    let mut aug = vec![Fe::ZERO; rows * w];
    for i in 0..rows {
        aug[i * w..i * w + cols].copy_from_slice(&m[i * cols..i * cols + cols]);
        aug[i * w + cols] = b[i];
    }
    let pivots = rref(ctx, &mut aug, rows, w);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Fe::ZERO; cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r * w + cols];
    }
    Some(x)
}

/// Incrementally maintained echelon basis of a subspace of F^cols.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Fe>] {
        &self.rows
    }

    /// Residual of `v` after elimination against the current rows.
    pub fn reduce(&self, ctx: &FieldCtx, v: &[Fe]) -> Vec<Fe> {
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = v[c];
            if f.is_zero() {
                continue;
            }
            for k in c..self.cols {
                v[k] = ctx.sub(v[k], ctx.mul(f, row[k]));
            }
        }
        v
    }

    pub fn contains(&self, ctx: &FieldCtx, v: &[Fe]) -> bool {
        self.reduce(ctx, v).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, ctx: &FieldCtx, v: &[Fe]) -> bool {
        let mut r = self.reduce(ctx, v);
        let Some(c) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = ctx.inv_nz(r[c]);
        for x in r.iter_mut() {
            *x = ctx.mul(*x, inv);
        }
        // keep fully reduced
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            let f = row[c];
            if f.is_zero() {
                continue;
            }
            for k in 0..self.cols {
                row[k] = ctx.sub(row[k], ctx.mul(f, r[k]));
            }
        }
        let at = self.pivots.partition_point(|&p| p < c);
        self.pivots.insert(at, c);
        self.rows.insert(at, r);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    #[test]
    fn inverse_roundtrip_over_f9() {
        let ctx = FieldCtx::build(FieldSpec::canonical(3, 2, 1).unwrap()).unwrap();
        let m: Vec<Fe> = [1u32, 5, 0, 7].iter().map(|&i| Fe(i)).collect();
        let inv = inverse(&ctx, &m, 2).expect("invertible");
        let mut prod = vec![Fe::ZERO; 4];
        for i in 0..2 {
            for j in 0..2 {
                prod[i * 2 + j] = (0..2).fold(Fe::ZERO, |acc, k| {
                    ctx.add(acc, ctx.mul(m[i * 2 + k], inv[k * 2 + j]))
                });
            }
        }
        assert_eq!(prod, vec![Fe::ONE, Fe::ZERO, Fe::ZERO, Fe::ONE]);
    }

    #[test]
    fn nullspace_of_rank_deficient_matrix() {
        let ctx = FieldCtx::build(FieldSpec::canonical(5, 1, 1).unwrap()).unwrap();
        let f = |v: &[u32]| v.iter().map(|&i| Fe(i)).collect::<Vec<_>>();
        // rows (1 2 3), (2 4 0): rank 2, kernel dim 1
        let m = f(&[1, 2, 3, 2, 4, 0]);
        let ns = nullspace(&ctx, &m, 2, 3);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        for r in 0..2 {
            let dot = (0..3).fold(Fe::ZERO, |acc, k| ctx.add(acc, ctx.mul(m[r * 3 + k], v[k])));
            assert!(dot.is_zero());
        }
        assert_eq!(rank(&ctx, &m, 2, 3), 2);
    }

    #[test]
    fn echelon_membership() {
        let ctx = FieldCtx::build(FieldSpec::canonical(2, 1, 1).unwrap()).unwrap();
        let mut e = Echelon::new(3);
        assert!(e.insert(&ctx, &[Fe(1), Fe(1), Fe(0)]));
        assert!(e.insert(&ctx, &[Fe(0), Fe(1), Fe(1)]));
        assert!(!e.insert(&ctx, &[Fe(1), Fe(0), Fe(1)]));
        assert!(!e.contains(&ctx, &[Fe(1), Fe(0), Fe(0)]));
        assert_eq!(e.dim(), 2);
    }
}
