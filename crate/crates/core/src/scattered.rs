//! Graph subspaces U_f = {(x, f(x))} of F_{q^n} x F_{q^n} and the linear sets
//! they define on PG(1, q^n).

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{gcd, Fe, FieldCtx};
use crate::linpoly::{compose_raw, LinPoly};
use crate::rdcode::{RankCode, Side};

/// Largest q^n for a full slope scan.
pub const LINEAR_SET_CAP: u64 = 1 << 20;

/// Largest q^n for the stabiliser scan over q^{2n} pairs.
pub const STABILISER_CAP: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedSubspace {
    f: LinPoly,
}

#[derive(Clone, Debug, Serialize)]
pub struct LinearSetReport {
    pub size: u64,
    /// weight -> number of points of that weight
    pub weight_spectrum: BTreeMap<usize, u64>,
    pub is_scattered: bool,
    pub is_maximum_scattered: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StabiliserReport {
    pub order: u64,
    /// Up to five elements [m00, m01, m10, m11], lexicographically smallest.
    pub sample_elements: Vec<[Fe; 4]>,
}

/// A family member together with conditions that were not checked.
#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub subspace: PointedSubspace,
    pub warnings: Vec<String>,
}

impl PointedSubspace {
    pub fn new(f: LinPoly) -> Self {
        PointedSubspace { f }
    }

    pub fn f(&self) -> &LinPoly {
        &self.f
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        self.f.ctx()
    }

    fn check_cap(&self, cap: u64, what: &'static str) -> Result<()> {
        let q_n = self.ctx().order() as u64;
        if q_n > cap {
            return Err(Error::TooLarge {
                what,
                size: q_n as u128,
                cap: cap as u128,
            });
        }
        Ok(())
    }

    /// Dense fiber counts of x -> f(x)/x, indexed by element.
    fn slope_counts(&self) -> Vec<u32> {
        let ctx = &**self.ctx();
        let mut counts = vec![0u32; ctx.order() as usize];
        for x in ctx.elements().skip(1) {
            let s = ctx.mul(self.f.eval(x), ctx.inv_nz(x));
            counts[s.index() as usize] += 1;
        }
        counts
    }

    /// Every attained slope with its fiber size.
    pub fn slopes(&self) -> Result<BTreeMap<Fe, u64>> {
        self.check_cap(LINEAR_SET_CAP, "slope scan")?;
        Ok(self
            .slope_counts()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (Fe(i as u32), c as u64))
            .collect())
    }

    pub fn linear_set(&self) -> Result<LinearSetReport> {
        self.check_cap(LINEAR_SET_CAP, "linear set scan")?;
        let ctx = self.ctx();
        let q = ctx.q() as u64;
        let n = ctx.n();
        let counts = self.slope_counts();
        let mut spectrum = BTreeMap::new();
        let mut size = 0;
        for (i, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let s = Fe(i as u32);
            let w = n - self.f.sub(&LinPoly::identity(ctx).scale(s))?.rank();
            assert_eq!(
                c as u64,
                q.pow(w as u32) - 1,
                "fiber size disagrees with kernel"
            );
            *spectrum.entry(w).or_insert(0) += 1;
            size += 1;
        }
        let points = (q.pow(n as u32) - 1) / (q - 1);
        let weighted: u64 = spectrum
            .iter()
            .map(|(&w, &k)| k * ((q.pow(w as u32) - 1) / (q - 1)))
            .sum();
        assert_eq!(weighted, points, "weight sum identity");
        let is_scattered = spectrum.keys().all(|&w| w == 1);
        Ok(LinearSetReport {
            size,
            weight_spectrum: spectrum,
            is_scattered,
            is_maximum_scattered: size == points,
        })
    }

    pub fn stabiliser_order(&self) -> Result<StabiliserReport> {
        self.stabiliser_order_with_cap(STABILISER_CAP)
    }

    /// Counts invertible [[m00, m01], [m10, m11]] mapping U_f onto itself.
    pub fn stabiliser_order_with_cap(&self, cap: u64) -> Result<StabiliserReport> {
        self.check_cap(cap, "stabiliser scan")?;
        let ctx = &**self.ctx();
        let n = ctx.n();
        let order = ctx.order();
        let f = self.f.coeffs();
        let pivot = (1..n).find(|&i| !f[i].is_zero());

        let per_row: Vec<(u64, Vec<[Fe; 4]>)> = (0..order)
            .into_par_iter()
            .map(|a| {
                let m00 = Fe(a);
                let mut g = vec![Fe::ZERO; n];
                let mut p = vec![Fe::ZERO; n];
                let mut count = 0u64;
                let mut samples = Vec::new();
                let mut record = |m: [Fe; 4], count: &mut u64| {
                    let det = ctx.sub(ctx.mul(m[0], m[3]), ctx.mul(m[1], m[2]));
                    if !det.is_zero() {
                        *count += 1;
                        if samples.len() < 5 {
                            samples.push(m);
                        }
                    }
                };
                for b in 0..order {
                    let m01 = Fe(b);
                    for i in 0..n {
                        g[i] = ctx.mul(m01, f[i]);
                    }
                    g[0] = ctx.add(g[0], m00);
                    compose_raw(ctx, f, &g, &mut p);
                    match pivot {
                        Some(k) => {
                            let m11 = ctx.mul(p[k], ctx.inv_nz(f[k]));
                            if (1..n).all(|i| p[i] == ctx.mul(m11, f[i])) {
                                let m10 = ctx.sub(p[0], ctx.mul(m11, f[0]));
                                record([m00, m01, m10, m11], &mut count);
                            }
                        }
                        None => {
                            if p[1..].iter().all(|c| c.is_zero()) {
                                for m11 in ctx.elements() {
                                    let m10 = ctx.sub(p[0], ctx.mul(m11, f[0]));
                                    record([m00, m01, m10, m11], &mut count);
                                }
                            }
                        }
                    }
                }
                (count, samples)
            })
            .collect();

        let total: u64 = per_row.iter().map(|r| r.0).sum();
        let mut samples: Vec<[Fe; 4]> = per_row.into_iter().flat_map(|r| r.1).collect();
        samples.sort();
        samples.truncate(5);
        let q = ctx.q() as u64;
        let big = order as u128;
        assert_eq!(total % (q - 1), 0, "F_q scalars must stabilise U_f");
        assert_eq!(
            ((big * big - 1) * (big * big - big)) % total as u128,
            0,
            "stabiliser order must divide |GL(2, q^n)|"
        );
        Ok(StabiliserReport {
            order: total,
            sample_elements: samples,
        })
    }
}

/// ⟨x, f⟩ over F_{q^n}.
pub fn code_of(u: &PointedSubspace) -> Result<RankCode> {
    RankCode::from_semilinear(vec![LinPoly::identity(u.ctx()), u.f.clone()])
}

/// Inverse of [`code_of`].
pub fn subspace_of(c: &RankCode) -> Result<PointedSubspace> {
    let sl = c.semilinear().ok_or(Error::NotGraphForm)?;
    if sl.side != Side::Left || sl.gens.len() != 2 || sl.gens[0] != LinPoly::identity(c.ctx()) {
        return Err(Error::NotGraphForm);
    }
    Ok(PointedSubspace::new(sl.gens[1].clone()))
}

fn monomial_sum(ctx: &Arc<FieldCtx>, terms: &[(Fe, usize)]) -> LinPoly {
    terms.iter().fold(LinPoly::zero(ctx), |acc, &(a, i)| {
        acc.add(&LinPoly::monomial(ctx, a, i)).expect("same field")
    })
}

/// U^{1,n}_s: f = x^{q^s}.
pub fn family_u1(ctx: &Arc<FieldCtx>, s: usize) -> Result<FamilyMember> {
    let n = ctx.n();
    if gcd(s as u64, n as u64) != 1 {
        return Err(Error::InvalidParameter(format!(
            "U1: gcd(s, n) = gcd({s}, {n}) must be 1"
        )));
    }
    Ok(FamilyMember {
        subspace: PointedSubspace::new(LinPoly::monomial(ctx, Fe::ONE, s)),
        warnings: Vec::new(),
    })
}

/// U^{2,n}_{s,δ}: f = δ x^{q^s} + x^{q^{n-s}}.
pub fn family_u2(ctx: &Arc<FieldCtx>, s: usize, delta: Fe) -> Result<FamilyMember> {
    let n = ctx.n();
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "U2: needs n >= 4, got {n}"
        )));
    }
    if gcd(s as u64, n as u64) != 1 {
        return Err(Error::InvalidParameter(format!(
            "U2: gcd(s, n) = gcd({s}, {n}) must be 1"
        )));
    }
    let norm = ctx.norm(delta, 1)?;
    if norm.is_zero() || norm == Fe::ONE {
        return Err(Error::InvalidParameter(format!(
            "U2: N(delta) = {} must not be 0 or 1",
            norm.index()
        )));
    }
    Ok(FamilyMember {
        subspace: PointedSubspace::new(monomial_sum(ctx, &[(delta, s), (Fe::ONE, n - s)])),
        warnings: vec!["U2: further conditions on delta and q are not checked".into()],
    })
}

/// U^{3,n}_{s,δ}: f = δ x^{q^s} + x^{q^{s+n/2}}, n in {6, 8}.
pub fn family_u3(ctx: &Arc<FieldCtx>, s: usize, delta: Fe) -> Result<FamilyMember> {
    let n = ctx.n();
    if n != 6 && n != 8 {
        return Err(Error::InvalidParameter(format!(
            "U3: needs n in {{6, 8}}, got {n}"
        )));
    }
    let h = n / 2;
    if gcd(s as u64, h as u64) != 1 {
        return Err(Error::InvalidParameter(format!(
            "U3: gcd(s, n/2) = gcd({s}, {h}) must be 1"
        )));
    }
    let norm = ctx.norm(delta, h)?;
    if norm.is_zero() || norm == Fe::ONE {
        return Err(Error::InvalidParameter(format!(
            "U3: N_{{q^n/q^(n/2)}}(delta) = {} must not be 0 or 1",
            norm.index()
        )));
    }
    Ok(FamilyMember {
        subspace: PointedSubspace::new(monomial_sum(ctx, &[(delta, s), (Fe::ONE, s + h)])),
        warnings: vec!["U3: further conditions on delta and q are not checked".into()],
    })
}

/// U^4_c: f = x^q + x^{q^3} + c x^{q^5} with c^2 + c = 1.
pub fn family_u4(ctx: &Arc<FieldCtx>, c: Fe) -> Result<FamilyMember> {
    if ctx.n() != 6 {
        return Err(Error::InvalidParameter(format!(
            "U4: needs n = 6, got {}",
            ctx.n()
        )));
    }
    if ctx.add(ctx.mul(c, c), c) != Fe::ONE {
        return Err(Error::InvalidParameter(format!(
            "U4: c = {} does not satisfy c^2 + c = 1",
            c.index()
        )));
    }
    Ok(FamilyMember {
        subspace: PointedSubspace::new(monomial_sum(ctx, &[(Fe::ONE, 1), (Fe::ONE, 3), (c, 5)])),
        warnings: Vec::new(),
    })
}
