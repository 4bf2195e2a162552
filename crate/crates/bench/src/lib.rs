//! Benchmark inputs shared by the bench targets.

use std::sync::Arc;

use rankmetric::{Fe, FieldCtx, LinPoly};

/// Deterministic pseudo-random elements of `ctx`.
pub fn elements(ctx: &FieldCtx, count: usize) -> Vec<Fe> {
    let order = ctx.order() as u64;
    let mut x = 0x9e37_79b9_7f4a_7c15u64;
    (0..count)
        .map(|_| {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            ctx.elem(x % order).expect("index below order")
        })
        .collect()
}

/// Deterministic q-polynomials over `ctx`.
pub fn polys(ctx: &Arc<FieldCtx>, count: usize) -> Vec<LinPoly> {
    let n = ctx.n();
    elements(ctx, count * n)
        .chunks(n)
        .map(|c| LinPoly::new(ctx, c.to_vec()).expect("n coefficients"))
        .collect()
}
