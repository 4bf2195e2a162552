use serde::Serialize;

use super::{
    build_instance, even_construction, solution_of_codeword, system_rel_check, PaperInstance,
};
use crate::error::Result;
use crate::gf::{Fe, FieldSpec};
use crate::linpoly::LinPoly;
use crate::rdcode::{DistanceOptions, IdealiserReport, RankCode, Side, IDEALISER_CAP};
use crate::scattered::{code_of, family_u4};

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Skip any scan whose estimated size exceeds this.
    pub scan_cap: u64,
    pub idealiser_cap: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            scan_cap: 1 << 26,
            idealiser_cap: IDEALISER_CAP,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealiserSummary {
    pub side: Side,
    pub dimension: usize,
    pub is_field: bool,
    pub field_order: Option<u128>,
}

impl From<&IdealiserReport> for IdealiserSummary {
    fn from(r: &IdealiserReport) -> Self {
        IdealiserSummary {
            side: r.side,
            dimension: r.dimension,
            is_field: r.is_field,
            field_order: r.field_order,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyMainReport {
    pub q: u64,
    pub field: FieldSpec,
    pub c: Fe,
    pub dimension: usize,
    pub min_distance: usize,
    /// A codeword of minimum rank when that rank is below 5.
    pub witness: Option<LinPoly>,
    pub is_mrd: bool,
    pub adjoint_min_distance: usize,
    pub left_idealiser: Option<IdealiserSummary>,
    pub right_idealiser: Option<IdealiserSummary>,
    pub scattered: Option<bool>,
    pub maximum_scattered: Option<bool>,
    pub dual_dimension: usize,
    pub dual_min_distance: Option<usize>,
    pub dual_is_mrd: Option<bool>,
    /// Frobenius twists (i, j) with x^{q^i} ∘ C^⊥ ∘ x^{q^j} = D.
    pub twist_matches: Vec<(usize, usize)>,
    /// A kernel-4 word of D read as (α, β, γ) and checked against the system.
    pub dual_witness_in_system: Option<bool>,
    /// Whether the γ = 0 construction solved the system.
    pub even_construction: bool,
    pub consistent: bool,
    pub inconsistencies: Vec<String>,
    pub skipped: Vec<String>,
}

pub fn verify_main(q: u64) -> Result<VerifyMainReport> {
    verify_main_with(&build_instance(q)?, VerifyOptions::default())
}

pub fn verify_main_with(inst: &PaperInstance, opts: VerifyOptions) -> Result<VerifyMainReport> {
    let c = &inst.code_c;
    let n = inst.ctx.n();
    let mut skipped = Vec::new();
    let mut bad = Vec::new();
    let dist_opts = DistanceOptions {
        cap: opts.scan_cap,
        ..DistanceOptions::default()
    };

    let dist = c.min_distance_with(dist_opts)?;
    let d = dist.min_distance.expect("exact scan");
    let is_mrd = d == n - c.dim() / n + 1;
    let adjoint_d = c
        .adjoint_code()
        .min_distance_with(dist_opts)?
        .min_distance
        .expect("exact scan");
    if adjoint_d != d {
        bad.push(format!("adjoint distance {adjoint_d} != {d}"));
    }

    let ideal = |side| match c.idealiser(side, opts.idealiser_cap) {
        Ok(r) => Some(IdealiserSummary::from(&r)),
        Err(_) => None,
    };
    let left = ideal(Side::Left);
    let right = ideal(Side::Right);
    if left.is_none() || right.is_none() {
        skipped.push("idealiser classification".into());
    }

    let u = family_u4(&inst.ctx, inst.c)?.subspace;
    let (scattered, maximum) = match u.linear_set() {
        Ok(r) => (Some(r.is_scattered), Some(r.is_maximum_scattered)),
        Err(_) => {
            skipped.push("linear set".into());
            (None, None)
        }
    };
    if let Some(m) = maximum {
        if m != is_mrd {
            bad.push("MRD and maximum scattered disagree".into());
        }
        if !code_of(&u)?.equal(c) {
            bad.push("code of U4 differs from C".into());
        }
    }

    let dual = c.delsarte_dual();
    let (dual_d, dual_mrd, dual_witness_ok) = match dual.min_distance_with(dist_opts) {
        Ok(r) => {
            let dd = r.min_distance.expect("exact scan");
            let mrd = dd == n - dual.dim() / n + 1;
            // a kernel-4 word of the dual transported onto D must solve the system
            let witness_ok = if mrd {
                None
            } else {
                r.witness.as_ref().and_then(|w| {
                    twist_onto_d(inst, &dual, w).map(|f| {
                        solution_of_codeword(inst, &f)
                            .is_some_and(|s| system_rel_check(inst, &s).holds)
                    })
                })
            };
            (Some(dd), Some(mrd), witness_ok)
        }
        Err(_) => {
            skipped.push("dual minimum distance".into());
            (None, None, None)
        }
    };
    if let Some(m) = dual_mrd {
        if m != is_mrd {
            bad.push("C and its dual disagree on MRD".into());
        }
    }
    if dual_witness_ok == Some(false) {
        bad.push("kernel-4 dual word does not solve the system".into());
    }
    if !dual.delsarte_dual().equal(c) {
        bad.push("dual is not an involution".into());
    }

    let twist_matches: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| dual.frobenius_twist(i, j).equal(&inst.code_d))
        .collect();

    let even = even_construction(inst)?.is_some();
    if even == is_mrd {
        bad.push("gamma = 0 construction disagrees with the MRD verdict".into());
    }

    Ok(VerifyMainReport {
        q: inst.q,
        field: inst.ctx.spec().clone(),
        c: inst.c,
        dimension: c.dim(),
        min_distance: d,
        witness: if d < 5 { dist.witness } else { None },
        is_mrd,
        adjoint_min_distance: adjoint_d,
        left_idealiser: left,
        right_idealiser: right,
        scattered,
        maximum_scattered: maximum,
        dual_dimension: dual.dim(),
        dual_min_distance: dual_d,
        dual_is_mrd: dual_mrd,
        twist_matches,
        dual_witness_in_system: dual_witness_ok,
        even_construction: even,
        consistent: bad.is_empty(),
        inconsistencies: bad,
        skipped,
    })
}

/// Image of a dual word in D under the first matching twist, if any.
fn twist_onto_d(inst: &PaperInstance, dual: &RankCode, w: &LinPoly) -> Option<LinPoly> {
    let n = inst.ctx.n();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| dual.frobenius_twist(i, j).equal(&inst.code_d))
        .map(|(i, j)| w.twist(i, j))
}
