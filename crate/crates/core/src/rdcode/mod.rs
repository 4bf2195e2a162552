//! Rank-distance codes: F_q-subspaces of L_{n,q}.

mod distance;
mod idealiser;
pub mod subspaces;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Fe, FieldCtx, FieldSpec};
use crate::linalg::{self, Echelon};
use crate::linpoly::LinPoly;

pub use distance::{
    CodeWordIterator, DistanceOptions, DistanceReport, MrdReport, Strategy, FULL_CAP, SCAN_CAP,
};
pub use idealiser::{IdealiserReport, IDEALISER_CAP};

/// Which scalar action the generators carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// x -> lambda * g(x)
    Left,
    /// x -> g(lambda * x)
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semilinear {
    pub side: Side,
    pub gens: Vec<LinPoly>,
}

impl Semilinear {
    /// The F_q-spanning set {b_m g} (or {g ∘ b_m x}), generator-major.
    fn expand(&self, ctx: &Arc<FieldCtx>) -> Vec<LinPoly> {
        let mut out = Vec::with_capacity(self.gens.len() * ctx.n());
        for g in &self.gens {
            for &b in ctx.basis() {
                out.push(match self.side {
                    Side::Left => g.scale(b),
                    Side::Right => g
                        .compose(&LinPoly::monomial(ctx, b, 0))
                        .expect("same field"),
                });
            }
        }
        out
    }
}

/// An F_q-linear rank-distance code in L_{n,q}.
#[derive(Clone, Debug)]
pub struct RankCode {
    ctx: Arc<FieldCtx>,
    basis: Vec<LinPoly>,
    echelon: Echelon,
    semilinear: Option<Semilinear>,
}

impl RankCode {
    /// A code from an F_q-independent list.
    pub fn from_basis(ctx: &Arc<FieldCtx>, basis: Vec<LinPoly>) -> Result<Self> {
        let mut echelon = Echelon::new(ctx.n() * ctx.n());
        for f in &basis {
            if !f.ctx().same(ctx) {
                return Err(Error::ContextMismatch);
            }
            if !echelon.insert(ctx, &f.fq_coords()) {
                return Err(Error::DependentGenerators);
            }
        }
        Ok(RankCode {
            ctx: Arc::clone(ctx),
            basis,
            echelon,
            semilinear: None,
        })
    }

    /// The F_q-span of an arbitrary list; the basis is the reduced echelon form.
    pub fn span(ctx: &Arc<FieldCtx>, polys: &[LinPoly]) -> Result<Self> {
        let mut echelon = Echelon::new(ctx.n() * ctx.n());
        for f in polys {
            if !f.ctx().same(ctx) {
                return Err(Error::ContextMismatch);
            }
            echelon.insert(ctx, &f.fq_coords());
        }
        let basis = echelon
            .rows()
            .iter()
            .map(|r| LinPoly::from_fq_coords(ctx, r))
            .collect();
        Ok(RankCode {
            ctx: Arc::clone(ctx),
            basis,
            echelon,
            semilinear: None,
        })
    }

    /// The F_{q^n}-span ⟨G⟩ under left scalar multiplication.
    pub fn from_semilinear(gens: Vec<LinPoly>) -> Result<Self> {
        Self::from_semilinear_side(gens, Side::Left)
    }

    pub fn from_semilinear_side(gens: Vec<LinPoly>, side: Side) -> Result<Self> {
        let ctx = Arc::clone(
            gens.first()
                .ok_or_else(|| Error::InvalidParameter("no generators".into()))?
                .ctx(),
        );
        let sl = Semilinear { side, gens };
        let mut code = Self::from_basis(&ctx, sl.expand(&ctx))?;
        code.semilinear = Some(sl);
        Ok(code)
    }

    pub fn zero(ctx: &Arc<FieldCtx>) -> Self {
        Self::span(ctx, &[]).expect("empty span")
    }

    /// All of L_{n,q}.
    pub fn full(ctx: &Arc<FieldCtx>) -> Self {
        let gens = (0..ctx.n())
            .map(|i| LinPoly::monomial(ctx, Fe::ONE, i))
            .collect();
        Self::from_semilinear(gens).expect("monomials are independent")
    }

    /// Attach generators after checking that they span this code.
    fn with_semilinear(mut self, sl: Semilinear) -> Result<Self> {
        let words = sl.expand(&self.ctx);
        if words.len() != self.dim() || !words.iter().all(|w| self.contains(w)) {
            return Err(Error::Contradiction(
                "semilinear generators do not span the code".into(),
            ));
        }
        self.semilinear = Some(sl);
        Ok(self)
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    /// Dimension over F_q.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LinPoly] {
        &self.basis
    }

    pub fn semilinear(&self) -> Option<&Semilinear> {
        self.semilinear.as_ref()
    }

    pub fn semilinear_gens(&self) -> Option<&[LinPoly]> {
        self.semilinear.as_ref().map(|s| s.gens.as_slice())
    }

    pub fn contains(&self, f: &LinPoly) -> bool {
        f.ctx().same(&self.ctx) && self.echelon.contains(&self.ctx, &f.fq_coords())
    }

    /// Equality as subspaces.
    pub fn equal(&self, other: &RankCode) -> bool {
        self.ctx.same(&other.ctx)
            && self.dim() == other.dim()
            && other.basis.iter().all(|f| self.contains(f))
    }

    /// The Delsarte dual under b(f, g) = Tr(sum a_i b_i).
    pub fn delsarte_dual(&self) -> RankCode {
        let ctx = &self.ctx;
        let n = ctx.n();
        let nn = n * n;
        let k = self.dim();
        let mut m = vec![Fe::ZERO; k * nn];
        for (r, f) in self.basis.iter().enumerate() {
            for (i, &a) in f.coeffs().iter().enumerate() {
                for (j, &b) in ctx.basis().iter().enumerate() {
                    m[r * nn + i * n + j] = ctx.tr(ctx.mul(a, b));
                }
            }
        }
        let basis: Vec<LinPoly> = linalg::nullspace(ctx, &m, k, nn)
            .iter()
            .map(|v| LinPoly::from_fq_coords(ctx, v))
            .collect();
        let dual = RankCode::from_basis(ctx, basis).expect("nullspace basis is independent");
        debug_assert_eq!(dual.dim() + k, nn);
        match &self.semilinear {
            None => dual,
            Some(sl) => {
                let gens = match sl.side {
                    Side::Left => coefficient_nullspace(ctx, &sl.gens),
                    Side::Right => {
                        let hats: Vec<LinPoly> = sl.gens.iter().map(LinPoly::adjoint).collect();
                        coefficient_nullspace(ctx, &hats)
                            .iter()
                            .map(LinPoly::adjoint)
                            .collect()
                    }
                };
                if gens.is_empty() {
                    return dual;
                }
                dual.with_semilinear(Semilinear {
                    side: sl.side,
                    gens,
                })
                .expect("dual of a semilinear code is semilinear")
            }
        }
    }

    /// C^T = {adjoint(f) : f in C}.
    pub fn adjoint_code(&self) -> RankCode {
        RankCode {
            ctx: Arc::clone(&self.ctx),
            basis: self.basis.iter().map(LinPoly::adjoint).collect(),
            echelon: {
                let mut e = Echelon::new(self.ctx.n() * self.ctx.n());
                for f in &self.basis {
                    e.insert(&self.ctx, &f.adjoint().fq_coords());
                }
                e
            },
            semilinear: self.semilinear.as_ref().map(|sl| Semilinear {
                side: sl.side.flip(),
                gens: sl.gens.iter().map(LinPoly::adjoint).collect(),
            }),
        }
    }

    /// x^{q^i} ∘ C ∘ x^{q^j}.
    pub fn frobenius_twist(&self, i: usize, j: usize) -> RankCode {
        let basis: Vec<LinPoly> = self.basis.iter().map(|f| f.twist(i, j)).collect();
        let mut out = RankCode::from_basis(&self.ctx, basis).expect("twists are invertible");
        out.semilinear = self.semilinear.as_ref().map(|sl| Semilinear {
            side: sl.side,
            gens: sl.gens.iter().map(|g| g.twist(i, j)).collect(),
        });
        out
    }

    /// The same code with a different transport map f -> a ∘ f ∘ b applied.
    pub fn map(&self, a: &LinPoly, b: &LinPoly) -> Result<RankCode> {
        let words = self
            .basis
            .iter()
            .map(|f| a.compose(f)?.compose(b))
            .collect::<Result<Vec<_>>>()?;
        RankCode::span(&self.ctx, &words)
    }

    pub fn to_file(&self) -> CodeFile {
        CodeFile {
            field: self.ctx.spec().clone(),
            semilinear_gens: self
                .semilinear
                .as_ref()
                .map(|sl| sl.gens.iter().map(indices).collect()),
            semilinear_side: self.semilinear.as_ref().map(|sl| sl.side),
            basis: self.basis.iter().map(indices).collect(),
        }
    }

    pub fn from_file(file: &CodeFile, cap: u64) -> Result<Self> {
        let ctx = FieldCtx::build_with_cap(file.field.clone(), cap)?;
        Self::from_file_in(&ctx, file)
    }

    /// Decode a code file inside an existing context with the same spec.
    pub fn from_file_in(ctx: &Arc<FieldCtx>, file: &CodeFile) -> Result<Self> {
        if ctx.spec() != &file.field {
            return Err(Error::ContextMismatch);
        }
        let polys = |rows: &[Vec<u64>]| {
            rows.iter()
                .map(|r| LinPoly::from_indices(ctx, r))
                .collect::<Result<Vec<_>>>()
        };
        let basis = polys(&file.basis)?;
        match &file.semilinear_gens {
            None => Self::from_basis(ctx, basis),
            Some(g) => {
                let gens = polys(g)?;
                let side = file.semilinear_side.unwrap_or(Side::Left);
                let code = Self::from_semilinear_side(gens, side)?;
                if !basis.is_empty() && !code.equal(&Self::from_basis(ctx, basis)?) {
                    return Err(Error::Malformed(
                        "basis and semilinear generators span different codes".into(),
                    ));
                }
                Ok(code)
            }
        }
    }
}

fn indices(f: &LinPoly) -> Vec<u64> {
    f.coeffs().iter().map(|c| c.index() as u64).collect()
}

/// F_{q^n}-basis of {h : sum_i g_i h_i = 0 for every g}.
fn coefficient_nullspace(ctx: &Arc<FieldCtx>, gens: &[LinPoly]) -> Vec<LinPoly> {
    let n = ctx.n();
    let m: Vec<Fe> = gens
        .iter()
        .flat_map(|g| g.coeffs().iter().copied())
        .collect();
    linalg::nullspace(ctx, &m, gens.len(), n)
        .into_iter()
        .map(|v| LinPoly::new(ctx, v).expect("length n"))
        .collect()
}

/// The bilinear form b(f, g) = Tr(sum a_i b_i).
pub fn bilinear(f: &LinPoly, g: &LinPoly) -> Result<Fe> {
    f.bilinear(g)
}

/// On-disk code description; elements are integer indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semilinear_gens: Option<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semilinear_side: Option<Side>,
    #[serde(default)]
    pub basis: Vec<Vec<u64>>,
}
