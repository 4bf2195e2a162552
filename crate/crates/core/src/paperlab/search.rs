//! Searches for MRD codes ⟨x, f⟩ over F_{q^{2n}} with
//! f = x^q + sum_{i=1}^{n-1} a_{2i+1} x^{q^{2i+1}}.
//!
//! Random mode draws candidates from a 64-bit multiplicative congruential
//! generator: the stream for trial t starts at splitmix64(seed ^ splitmix64(t)) | 1
//! and advances by x <- x * 0xd1342543de82ef95 mod 2^64. A value below m is
//! taken from the high 32 bits of the next state h as (h * m) >> 32.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Fe, FieldCtx, FieldSpec, DEFAULT_TABLE_CAP};
use crate::linpoly::{rank_of_values, LinPoly};
use crate::rdcode::{DistanceOptions, RankCode, Side, Strategy};

const MCG_MULTIPLIER: u64 = 0xd134_2543_de82_ef95;

/// Largest candidate count accepted in exhaustive mode.
pub const EXHAUSTIVE_CAP: u128 = 1 << 24;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Clone, Debug)]
pub struct Mcg {
    state: u64,
}

impl Mcg {
    pub fn for_trial(seed: u64, trial: u64) -> Self {
        Mcg {
            state: splitmix64(seed ^ splitmix64(trial)) | 1,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MCG_MULTIPLIER);
        self.state
    }

    /// Uniform-ish value in [0, m), m <= 2^32.
    pub fn below(&mut self, m: u64) -> u64 {
        debug_assert!(m <= 1 << 32);
        ((self.next_u64() >> 32) * m) >> 32
    }
}

/// One odd-position coefficient of the pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coef {
    /// An integer, reduced into the prime field.
    Fixed(i64),
    /// Free variable number v.
    Var(usize),
    /// The k-th power of free variable v.
    Power(usize, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Random { seed: u64, trials: u64 },
}

#[derive(Clone, Debug)]
pub struct SearchJob {
    /// Half the extension degree: the code lives in L_{2n,q}.
    pub n: usize,
    pub q: u64,
    /// Coefficients of x^q, x^{q^3}, ..., x^{q^{2n-1}}.
    pub pattern: Vec<Coef>,
    pub mode: SearchMode,
    /// Reject a candidate on the first word with kernel at least this.
    pub reject_kernel: usize,
    /// Stop after this many hits (in candidate order).
    pub first_k: Option<usize>,
    pub cap: u64,
}

impl SearchJob {
    pub fn new(n: usize, q: u64, pattern: Vec<Coef>) -> Self {
        SearchJob {
            n,
            q,
            pattern,
            mode: SearchMode::Exhaustive,
            reject_kernel: 2,
            first_k: None,
            cap: DEFAULT_TABLE_CAP,
        }
    }

    pub fn vars(&self) -> usize {
        self.pattern
            .iter()
            .filter_map(|c| match *c {
                Coef::Var(v) | Coef::Power(v, _) => Some(v + 1),
                Coef::Fixed(_) => None,
            })
            .max()
            .unwrap_or(0)
    }

    fn validate(&self) -> Result<()> {
        if self.pattern.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "pattern has {} coefficients, expected {}",
                self.pattern.len(),
                self.n
            )));
        }
        if self.pattern.first() != Some(&Coef::Fixed(1)) {
            return Err(Error::InvalidParameter(
                "the x^q coefficient must be 1".into(),
            ));
        }
        Ok(())
    }
}

/// A pattern from the table: (n, pattern) for rows 1..=6.
pub fn table1_row(row: usize) -> Result<(usize, Vec<Coef>)> {
    use Coef::*;
    Ok(match row {
        1 => (3, vec![Fixed(1), Fixed(1), Var(0)]),
        2 => (3, vec![Fixed(1), Fixed(-1), Var(0)]),
        3 => (3, vec![Fixed(1), Var(0), Power(0, 2)]),
        4 => (4, vec![Fixed(1), Fixed(1), Fixed(1), Fixed(-1)]),
        5 => (4, vec![Fixed(1), Power(0, 2), Var(0), Fixed(1)]),
        6 => (5, vec![Fixed(1), Var(0), Var(1), Var(2), Var(3)]),
        _ => return Err(Error::InvalidParameter(format!("no table row {row}"))),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchHit {
    /// Candidate number (exhaustive) or trial number (random).
    pub index: u64,
    pub vars: Vec<Fe>,
    /// Coefficients of x^{q^{2i+1}}, i = 0..n-1.
    pub coeffs: Vec<Fe>,
    /// For each variable, the degrees s | 2n with the value in F_{q^s}.
    pub subfields: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub field: FieldSpec,
    pub candidates: u64,
    pub examined: u64,
    pub hits: Vec<SearchHit>,
}

struct Prepared {
    ctx: Arc<FieldCtx>,
    basis_vals: Vec<Fe>,
}

fn coeff_values(ctx: &FieldCtx, pattern: &[Coef], vars: &[Fe]) -> Vec<Fe> {
    pattern
        .iter()
        .map(|c| match *c {
            Coef::Fixed(k) => ctx.from_int(k),
            Coef::Var(v) => vars[v],
            Coef::Power(v, k) => ctx.pow(vars[v], k as u128),
        })
        .collect()
}

fn poly_of(ctx: &Arc<FieldCtx>, odd: &[Fe]) -> LinPoly {
    let mut c = vec![Fe::ZERO; ctx.n()];
    for (i, &a) in odd.iter().enumerate() {
        c[2 * i + 1] = a;
    }
    LinPoly::new(ctx, c).expect("length 2n")
}

/// True when no word of ⟨x, f⟩ has kernel >= `reject`. Serial, stops at the
/// first bad representative (1, μ) in index order, then (0, 1).
fn survives(p: &Prepared, f: &LinPoly, reject: usize, buf: &mut [Fe]) -> bool {
    let ctx = &*p.ctx;
    let n = ctx.n();
    let (w, m) = buf.split_at_mut(n);
    let fv: Vec<Fe> = ctx.basis().iter().map(|&b| f.eval(b)).collect();
    w.copy_from_slice(&fv);
    if n - rank_of_values(ctx, w, m) >= reject {
        return false;
    }
    for mu in 0..ctx.order() {
        let mu = Fe(mu);
        for j in 0..n {
            w[j] = ctx.add(p.basis_vals[j], ctx.mul(mu, fv[j]));
        }
        if n - rank_of_values(ctx, w, m) >= reject {
            return false;
        }
    }
    true
}

pub fn table1_search(job: &SearchJob) -> Result<SearchReport> {
    job.validate()?;
    let spec = FieldSpec::for_q(job.q, 2 * job.n as u32)?;
    let ctx = FieldCtx::build_with_cap(spec, job.cap)?;
    let k = job.vars();
    let values = ctx.order() as u64 - 1;
    let candidates: u64 = match job.mode {
        SearchMode::Exhaustive => {
            let total = (values as u128).pow(k as u32);
            if total > EXHAUSTIVE_CAP {
                return Err(Error::TooLarge {
                    what: "exhaustive candidate space",
                    size: total,
                    cap: EXHAUSTIVE_CAP,
                });
            }
            total as u64
        }
        SearchMode::Random { trials, .. } => trials,
    };
    let prep = Prepared {
        basis_vals: ctx.basis().to_vec(),
        ctx: Arc::clone(&ctx),
    };
    let n2 = ctx.n();
    let decode = |idx: u64| -> Vec<Fe> {
        match job.mode {
            SearchMode::Exhaustive => {
                let mut rest = idx;
                let mut v = vec![Fe::ZERO; k];
                for slot in v.iter_mut().rev() {
                    *slot = Fe((1 + rest % values) as u32);
                    rest /= values;
                }
                v
            }
            SearchMode::Random { seed, .. } => {
                let mut g = Mcg::for_trial(seed, idx);
                (0..k).map(|_| Fe(1 + g.below(values) as u32)).collect()
            }
        }
    };

    const CHUNK: u64 = 1 << 10;
    let mut hits = Vec::new();
    let mut examined = 0;
    let mut start = 0;
    let limit = job.first_k.unwrap_or(usize::MAX);
    while start < candidates && hits.len() < limit {
        let end = (start + CHUNK).min(candidates);
        let mut found: Vec<SearchHit> = (start..end)
            .into_par_iter()
            .map_init(
                || vec![Fe::ZERO; n2 + n2 * n2],
                |buf, idx| {
                    let vars = decode(idx);
                    let coeffs = coeff_values(&ctx, &job.pattern, &vars);
                    let f = poly_of(&ctx, &coeffs);
                    survives(&prep, &f, job.reject_kernel, buf).then(|| SearchHit {
                        index: idx,
                        subfields: vars
                            .iter()
                            .map(|&v| {
                                (1..=n2)
                                    .filter(|s| n2 % s == 0 && ctx.in_subfield(v, *s))
                                    .collect()
                            })
                            .collect(),
                        vars,
                        coeffs,
                    })
                },
            )
            .flatten()
            .collect();
        found.sort_by_key(|h| h.index);
        hits.extend(found);
        examined = end;
        start = end;
    }
    hits.truncate(limit);
    Ok(SearchReport {
        field: ctx.spec().clone(),
        candidates,
        examined,
        hits,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub field: FieldSpec,
    pub coeffs: Vec<Fe>,
    pub is_mrd: bool,
    pub min_distance: usize,
    pub witness: Option<LinPoly>,
    pub left_idealiser_dim: usize,
    pub right_idealiser_dim: usize,
}

/// Full minimum distance of ⟨x, f⟩ for a fully specified coefficient tuple.
pub fn table1_verify(n: usize, q: u64, coeffs: &[Fe]) -> Result<VerifyReport> {
    if coeffs.len() != n {
        return Err(Error::CoefficientCount {
            expected: n,
            got: coeffs.len(),
        });
    }
    let spec = FieldSpec::for_q(q, 2 * n as u32)?;
    let ctx = FieldCtx::build(spec)?;
    for c in coeffs {
        ctx.elem(c.index() as u64)?;
    }
    let f = poly_of(&ctx, coeffs);
    let code = RankCode::from_semilinear(vec![LinPoly::identity(&ctx), f])?;
    let r =
        code.min_distance_with(DistanceOptions::default().with_strategy(Strategy::Projective))?;
    let d = r.min_distance.expect("exact scan");
    let n2 = 2 * n;
    Ok(VerifyReport {
        field: ctx.spec().clone(),
        coeffs: coeffs.to_vec(),
        is_mrd: d == n2 - 1,
        min_distance: d,
        witness: (d < n2 - 1).then_some(r.witness).flatten(),
        left_idealiser_dim: code.idealiser_space(Side::Left).dim(),
        right_idealiser_dim: code.idealiser_space(Side::Right).dim(),
    })
}

/// Integer coefficients reduced into the prime field of F_{q^{2n}}.
pub fn integer_coeffs(n: usize, q: u64, ints: &[i64]) -> Result<Vec<Fe>> {
    let ctx = FieldCtx::for_q(q, 2 * n as u32)?;
    Ok(ints.iter().map(|&k| ctx.from_int(k)).collect())
}
