use serde::Serialize;

use super::{DistanceOptions, RankCode, Side, Strategy};
use crate::error::{Error, Result};
use crate::gf::Fe;
use crate::linalg;
use crate::linpoly::LinPoly;

/// Largest idealiser (in elements) that will be classified by enumeration.
pub const IDEALISER_CAP: u64 = 1 << 20;

#[derive(Clone, Debug, Serialize)]
pub struct IdealiserReport {
    pub side: Side,
    pub dimension: usize,
    pub basis: Vec<LinPoly>,
    /// Every nonzero element has full rank.
    pub is_field: bool,
    pub field_order: Option<u128>,
    pub closed_under_composition: bool,
    pub contains_identity: bool,
}

impl RankCode {
    /// {phi : phi ∘ f in C for all f in C} (left) or f ∘ phi (right), as a code.
    pub fn idealiser_space(&self, side: Side) -> RankCode {
        let ctx = &self.ctx;
        let n = ctx.n();
        let nn = n * n;
        let dual = self.delsarte_dual();
        let rows = self.dim() * dual.dim();
        let mut m = vec![Fe::ZERO; rows * nn];
        for i in 0..n {
            for (mi, &b) in ctx.basis().iter().enumerate() {
                let unit = LinPoly::monomial(ctx, b, i);
                let col = i * n + mi;
                for (j, f) in self.basis.iter().enumerate() {
                    let w = match side {
                        Side::Left => unit.compose(f),
                        Side::Right => f.compose(&unit),
                    }
                    .expect("same field");
                    for (h, g) in dual.basis().iter().enumerate() {
                        m[(j * dual.dim() + h) * nn + col] = w.bilinear(g).expect("same field");
                    }
                }
            }
        }
        let basis: Vec<LinPoly> = linalg::nullspace(ctx, &m, rows, nn)
            .iter()
            .map(|v| LinPoly::from_fq_coords(ctx, v))
            .collect();
        RankCode::from_basis(ctx, basis).expect("nullspace basis is independent")
    }

    pub fn left_idealiser(&self) -> Result<IdealiserReport> {
        self.idealiser(Side::Left, IDEALISER_CAP)
    }

    pub fn right_idealiser(&self) -> Result<IdealiserReport> {
        self.idealiser(Side::Right, IDEALISER_CAP)
    }

    /// The idealiser with its classification; refuses when q^m exceeds `cap`.
    pub fn idealiser(&self, side: Side, cap: u64) -> Result<IdealiserReport> {
        let space = self.idealiser_space(side);
        let m = space.dim();
        let n = self.ctx.n();
        let size = (self.ctx.q() as u128).pow(m as u32);
        if size > cap as u128 {
            return Err(Error::TooLarge {
                what: "idealiser classification",
                size,
                cap: cap as u128,
            });
        }
        let contains_identity = space.contains(&LinPoly::identity(&self.ctx));
        let closed = space.basis().iter().all(|a| {
            space
                .basis()
                .iter()
                .all(|b| space.contains(&a.compose(b).expect("same field")))
        });
        assert!(closed, "idealiser is not closed under composition");
        assert!(contains_identity, "idealiser misses the identity");
        let is_field = if m == 0 {
            false
        } else {
            let opts = DistanceOptions {
                strategy: Strategy::Full,
                early_exit: Some(n - 1),
                cap,
            };
            space.min_distance_with(opts)?.witness_rank == Some(n)
        };
        Ok(IdealiserReport {
            side,
            dimension: m,
            basis: space.basis().to_vec(),
            is_field,
            field_order: is_field.then_some(size),
            closed_under_composition: closed,
            contains_identity,
        })
    }
}
