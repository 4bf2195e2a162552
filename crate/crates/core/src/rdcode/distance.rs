//! Minimum rank distance by exhaustive scans.
//!
//! Three enumerations are available. `Full` walks every nonzero F_q-combination
//! of the basis. `Projective` walks one representative per point of
//! PG(s-1, q^n) in the F_{q^n}-span of the generators. `Subspace` looks for the
//! largest t such that some t-dimensional F_q-subspace S is annihilated by a
//! nonzero word, which happens exactly when the s x t matrix (g_l(s_j)) has
//! F_{q^n}-rank below s.
//!
//! Scans run over fixed-size blocks in index order; inside a block the work
//! is parallel and the result is the smallest (rank, index) pair, so the
//! witness does not depend on the number of workers.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::subspaces::{gaussian_binomial, SubspaceIndex};
use super::{RankCode, Side};
use crate::error::{Error, Result};
use crate::gf::{Fe, FieldCtx};
use crate::linalg;
use crate::linpoly::{rank_of_values, LinPoly};

const BLOCK: u64 = 1 << 13;

/// Largest number of words the full strategy will visit.
pub const FULL_CAP: u64 = 1 << 24;

/// Default cap on projective points or subspaces visited.
pub const SCAN_CAP: u64 = 1 << 27;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Auto,
    Full,
    Projective,
    Subspace,
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "full" => Ok(Strategy::Full),
            "proj" | "projective" => Ok(Strategy::Projective),
            "subspace" => Ok(Strategy::Subspace),
            other => Err(Error::InvalidParameter(format!(
                "unknown strategy {other:?}"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DistanceOptions {
    pub strategy: Strategy,
    /// Stop at the first block containing a word of rank at most this value.
    pub early_exit: Option<usize>,
    pub cap: u64,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            strategy: Strategy::Auto,
            early_exit: None,
            cap: SCAN_CAP,
        }
    }
}

impl DistanceOptions {
    pub fn with_strategy(mut self, s: Strategy) -> Self {
        self.strategy = s;
        self
    }

    pub fn with_early_exit(mut self, t: Option<usize>) -> Self {
        self.early_exit = t;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DistanceReport {
    pub strategy: Strategy,
    /// The exact minimum distance; `None` when the scan stopped early.
    pub min_distance: Option<usize>,
    /// A word of smallest rank among those visited.
    pub witness: Option<LinPoly>,
    pub witness_rank: Option<usize>,
    pub early_exit: Option<usize>,
    pub stopped_early: bool,
    /// Words, points or subspaces examined.
    pub checked: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct MrdReport {
    pub is_mrd: bool,
    pub dimension: usize,
    /// n - k/n + 1 when n divides k.
    pub target_distance: Option<usize>,
    pub distance: Option<DistanceReport>,
}

struct ScanOutcome {
    best: Option<(usize, u64)>,
    stopped: bool,
    checked: u64,
}

/// Smallest (score, index) over 0..total, stopping after the first block whose
/// minimum is at most `stop_at`.
fn scan<F>(total: u64, stop_at: Option<usize>, scratch: usize, eval: F) -> ScanOutcome
where
    F: Fn(u64, &mut [Fe]) -> usize + Sync,
{
    let mut best: Option<(usize, u64)> = None;
    let mut start = 0;
    while start < total {
        let end = (start + BLOCK).min(total);
        let block = (start..end)
            .into_par_iter()
            .map_init(|| vec![Fe::ZERO; scratch], |buf, i| (eval(i, buf), i))
            .min();
        best = match (best, block) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        start = end;
        if let (Some(t), Some((r, _))) = (stop_at, best) {
            if r <= t {
                return ScanOutcome {
                    best,
                    stopped: end < total,
                    checked: end,
                };
            }
        }
    }
    ScanOutcome {
        best,
        stopped: false,
        checked: total,
    }
}

/// Decode the projective point `idx` of PG(s-1, Q): leading coordinate 1,
/// leading position 0 first, remaining coordinates as base-Q digits.
pub(crate) fn projective_point(mut idx: u64, s: usize, order: u64, out: &mut [Fe]) {
    for lead in 0..s {
        let size = order.pow((s - 1 - lead) as u32);
        if idx < size {
            out[..lead].iter_mut().for_each(|x| *x = Fe::ZERO);
            out[lead] = Fe::ONE;
            for pos in (lead + 1..s).rev() {
                out[pos] = Fe((idx % order) as u32);
                idx /= order;
            }
            return;
        }
        idx -= size;
    }
    unreachable!("projective index out of range");
}

pub(crate) fn projective_count(s: usize, order: u64) -> u128 {
    (0..s).map(|i| (order as u128).pow(i as u32)).sum()
}

/// Values g(b_j) on the power basis for each polynomial, flattened.
fn basis_values(ctx: &FieldCtx, polys: &[LinPoly]) -> Vec<Fe> {
    polys
        .iter()
        .flat_map(|g| ctx.basis().iter().map(move |&b| g.eval(b)))
        .collect()
}

impl RankCode {
    pub fn min_distance(&self) -> Result<usize> {
        let r = self.min_distance_with(DistanceOptions::default())?;
        Ok(r.min_distance.expect("no early exit requested"))
    }

    /// Estimated work for each applicable strategy.
    pub fn strategy_costs(&self) -> Vec<(Strategy, u128)> {
        let q = self.ctx.q() as u128;
        let n = self.ctx.n();
        let mut out = Vec::new();
        let k = self.dim() as u32;
        out.push((Strategy::Full, q.saturating_pow(k).saturating_sub(1)));
        if let Some(sl) = self.semilinear() {
            let s = sl.gens.len();
            out.push((
                Strategy::Projective,
                projective_count(s, self.ctx.order() as u64),
            ));
            if s <= n {
                out.push((Strategy::Subspace, gaussian_binomial(n, s, q as u64)));
            }
        }
        out
    }

    fn resolve(&self, opts: &DistanceOptions) -> Result<Strategy> {
        let costs = self.strategy_costs();
        let cost_of = |s: Strategy| costs.iter().find(|c| c.0 == s).map(|c| c.1);
        let cap_for = |s: Strategy| {
            if s == Strategy::Full {
                FULL_CAP.min(opts.cap)
            } else {
                opts.cap
            }
        };
        let pick = match opts.strategy {
            Strategy::Auto => costs
                .iter()
                .filter(|(s, c)| *c <= cap_for(*s) as u128)
                .min_by_key(|(s, c)| (*c, *s != Strategy::Projective))
                .map(|c| c.0)
                .ok_or_else(|| Error::TooLarge {
                    what: "codeword scan",
                    size: costs.iter().map(|c| c.1).min().unwrap_or(0),
                    cap: opts.cap as u128,
                })?,
            s => {
                let cost = cost_of(s).ok_or_else(|| {
                    Error::InvalidParameter(format!("{s:?} strategy needs semilinear generators"))
                })?;
                if cost > cap_for(s) as u128 {
                    return Err(Error::TooLarge {
                        what: "codeword scan",
                        size: cost,
                        cap: cap_for(s) as u128,
                    });
                }
                s
            }
        };
        Ok(pick)
    }

    pub fn min_distance_with(&self, opts: DistanceOptions) -> Result<DistanceReport> {
        if self.dim() == 0 {
            return Err(Error::InvalidParameter(
                "the zero code has no minimum distance".into(),
            ));
        }
        if let Some(sl) = self.semilinear() {
            if sl.side == Side::Right && opts.strategy != Strategy::Full {
                // rank is preserved by the adjoint, which makes the structure left-sided
                let mut r = self.adjoint_code().min_distance_with(opts)?;
                r.witness = r.witness.map(|w| w.adjoint());
                return Ok(r);
            }
        }
        let strategy = self.resolve(&opts)?;
        let mut report = match strategy {
            Strategy::Full => self.scan_full(opts.early_exit),
            Strategy::Projective => self.scan_projective(opts.early_exit),
            Strategy::Subspace => self.scan_subspaces(opts.early_exit),
            Strategy::Auto => unreachable!(),
        };
        report.strategy = strategy;
        report.early_exit = opts.early_exit;
        Ok(report)
    }

    fn finish(&self, out: ScanOutcome, word: impl Fn(u64) -> LinPoly) -> DistanceReport {
        let (rank, idx) = out.best.expect("nonempty scan");
        let witness = word(idx);
        debug_assert_eq!(witness.rank(), rank);
        DistanceReport {
            strategy: Strategy::Auto,
            min_distance: (!out.stopped).then_some(rank),
            witness: Some(witness),
            witness_rank: Some(rank),
            early_exit: None,
            stopped_early: out.stopped,
            checked: out.checked,
        }
    }

    fn scan_full(&self, early: Option<usize>) -> DistanceReport {
        let ctx = &*self.ctx;
        let n = ctx.n();
        let k = self.dim();
        let q = ctx.q() as u64;
        let fq = ctx.fq_elements();
        let vals = basis_values(ctx, &self.basis);
        let total = q.pow(k as u32) - 1;
        let out = scan(total, early, n + n * n, |idx, buf| {
            let (w, m) = buf.split_at_mut(n);
            w.iter_mut().for_each(|x| *x = Fe::ZERO);
            let mut code = idx + 1;
            let mut i = 0;
            while code != 0 {
                let d = fq[(code % q) as usize];
                code /= q;
                if !d.is_zero() {
                    for j in 0..n {
                        w[j] = ctx.add(w[j], ctx.mul(d, vals[i * n + j]));
                    }
                }
                i += 1;
            }
            rank_of_values(ctx, w, m)
        });
        self.finish(out, |idx| self.full_word(idx))
    }

    pub(crate) fn full_word(&self, idx: u64) -> LinPoly {
        let ctx = &self.ctx;
        let q = ctx.q() as u64;
        let fq = ctx.fq_elements();
        let mut w = LinPoly::zero(ctx);
        let mut code = idx + 1;
        let mut i = 0;
        while code != 0 {
            let d = fq[(code % q) as usize];
            code /= q;
            w = w.add(&self.basis[i].scale(d)).expect("same field");
            i += 1;
        }
        w
    }

    fn scan_projective(&self, early: Option<usize>) -> DistanceReport {
        let ctx = &*self.ctx;
        let n = ctx.n();
        let gens = &self.semilinear().expect("semilinear").gens;
        let s = gens.len();
        let order = ctx.order() as u64;
        let vals = basis_values(ctx, gens);
        let total = projective_count(s, order) as u64;
        let out = scan(total, early, s + n + n * n, |idx, buf| {
            let (lam, rest) = buf.split_at_mut(s);
            let (w, m) = rest.split_at_mut(n);
            projective_point(idx, s, order, lam);
            w.iter_mut().for_each(|x| *x = Fe::ZERO);
            for (l, &c) in lam.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for j in 0..n {
                    w[j] = ctx.add(w[j], ctx.mul(c, vals[l * n + j]));
                }
            }
            rank_of_values(ctx, w, m)
        });
        self.finish(out, |idx| self.projective_word(idx))
    }

    pub(crate) fn projective_word(&self, idx: u64) -> LinPoly {
        let ctx = &self.ctx;
        let gens = &self.semilinear().expect("semilinear").gens;
        let mut lam = vec![Fe::ZERO; gens.len()];
        projective_point(idx, gens.len(), ctx.order() as u64, &mut lam);
        combine(ctx, gens, &lam)
    }

    fn scan_subspaces(&self, early: Option<usize>) -> DistanceReport {
        let ctx = &*self.ctx;
        let n = ctx.n();
        let q = ctx.q() as usize;
        let fq = ctx.fq_elements();
        let gens = &self.semilinear().expect("semilinear").gens;
        let s = gens.len();
        let vals = basis_values(ctx, gens);
        let target = early.map(|t| n.saturating_sub(t));
        let mut checked = 0u64;

        // a word vanishing on a given (s-1)-space always exists
        let mut best_t = s - 1;
        let mut best_space: Vec<usize> = identity_rows(s - 1, n);
        let mut stopped = false;

        if target.is_none_or(|kt| kt > s - 1) {
            for t in s..=n {
                let index = SubspaceIndex::new(n, t, q);
                let out = scan(index.len(), Some(0), t * n + s * t, |idx, buf| {
                    let (digits, m) = buf.split_at_mut(t * n);
                    index.decode_mapped(idx, fq, digits);
                    fill_eval_matrix(ctx, &vals, digits, s, t, m);
                    usize::from(linalg::rank_in_place(ctx, m, s, t) >= s)
                });
                checked += out.checked;
                match out.best {
                    Some((0, idx)) => {
                        best_t = t;
                        best_space = vec![0; t * n];
                        index.decode(idx, &mut best_space);
                        if target.is_some_and(|kt| t >= kt) {
                            stopped = t < n;
                            break;
                        }
                    }
                    _ => break,
                }
            }
        } else {
            stopped = true;
        }

        let digits: Vec<Fe> = best_space.iter().map(|&d| fq[d]).collect();
        let t = best_t;
        let witness = if t == 0 {
            gens[0].clone()
        } else {
            let mut m = vec![Fe::ZERO; s * t];
            fill_eval_matrix(ctx, &vals, &digits, s, t, &mut m);
            // left kernel of m: nullspace of its transpose
            let mut mt = vec![Fe::ZERO; t * s];
            for l in 0..s {
                for j in 0..t {
                    mt[j * s + l] = m[l * t + j];
                }
            }
            let lam = &linalg::nullspace(ctx, &mt, t, s)[0];
            combine(&self.ctx, gens, lam)
        };
        let rank = witness.rank();
        debug_assert!(rank <= n - t);
        DistanceReport {
            strategy: Strategy::Subspace,
            min_distance: (!stopped).then_some(rank),
            witness: Some(witness),
            witness_rank: Some(rank),
            early_exit: None,
            stopped_early: stopped,
            checked,
        }
    }

    /// The MRD test against the Singleton-like bound, with early exit on the
    /// first word of rank below the target distance.
    pub fn is_mrd(&self) -> Result<MrdReport> {
        self.is_mrd_with(DistanceOptions::default())
    }

    pub fn is_mrd_with(&self, opts: DistanceOptions) -> Result<MrdReport> {
        let n = self.ctx.n();
        let k = self.dim();
        if k == 0 {
            return Ok(MrdReport {
                is_mrd: false,
                dimension: 0,
                target_distance: None,
                distance: None,
            });
        }
        if !k.is_multiple_of(n) {
            let d = self.min_distance_with(opts.with_early_exit(None))?;
            return Ok(MrdReport {
                is_mrd: false,
                dimension: k,
                target_distance: None,
                distance: Some(d),
            });
        }
        let target = n - k / n + 1;
        if target == 1 {
            return Ok(MrdReport {
                is_mrd: true,
                dimension: k,
                target_distance: Some(1),
                distance: None,
            });
        }
        let d = self.min_distance_with(opts.with_early_exit(Some(target - 1)))?;
        let is_mrd = d.witness_rank.is_some_and(|r| r >= target);
        Ok(MrdReport {
            is_mrd,
            dimension: k,
            target_distance: Some(target),
            distance: Some(d),
        })
    }

    /// Iterate nonzero codewords (full) or projective representatives.
    pub fn codewords(&self, strategy: Strategy) -> Result<CodeWordIterator<'_>> {
        let total = match strategy {
            Strategy::Full => {
                let c = (self.ctx.q() as u128).pow(self.dim() as u32) - 1;
                u64::try_from(c).map_err(|_| Error::TooLarge {
                    what: "codeword enumeration",
                    size: c,
                    cap: u64::MAX as u128,
                })?
            }
            Strategy::Projective => {
                let sl = self.semilinear().ok_or_else(|| {
                    Error::InvalidParameter(
                        "projective enumeration needs semilinear generators".into(),
                    )
                })?;
                if sl.side != Side::Left {
                    return Err(Error::InvalidParameter(
                        "projective enumeration needs left semilinear generators".into(),
                    ));
                }
                projective_count(sl.gens.len(), self.ctx.order() as u64) as u64
            }
            s => {
                return Err(Error::InvalidParameter(format!(
                    "cannot iterate with {s:?}"
                )))
            }
        };
        Ok(CodeWordIterator {
            code: self,
            strategy,
            next: 0,
            total,
        })
    }
}

fn identity_rows(t: usize, n: usize) -> Vec<usize> {
    let mut m = vec![0; t * n];
    for r in 0..t {
        m[r * n + r] = 1;
    }
    m
}

/// m[l][j] = g_l(s_j) where s_j has power-basis coordinates digits[j].
fn fill_eval_matrix(ctx: &FieldCtx, vals: &[Fe], digits: &[Fe], s: usize, t: usize, m: &mut [Fe]) {
    let n = ctx.n();
    for l in 0..s {
        for j in 0..t {
            let mut acc = Fe::ZERO;
            for i in 0..n {
                let d = digits[j * n + i];
                if !d.is_zero() {
                    acc = ctx.add(acc, ctx.mul(d, vals[l * n + i]));
                }
            }
            m[l * t + j] = acc;
        }
    }
}

fn combine(ctx: &std::sync::Arc<FieldCtx>, gens: &[LinPoly], lam: &[Fe]) -> LinPoly {
    gens.iter()
        .zip(lam)
        .fold(LinPoly::zero(ctx), |acc, (g, &l)| {
            acc.add(&g.scale(l)).expect("same field")
        })
}

/// Codewords in scan order.
pub struct CodeWordIterator<'a> {
    code: &'a RankCode,
    strategy: Strategy,
    next: u64,
    total: u64,
}

impl CodeWordIterator<'_> {
    pub fn strategy(&self) -> Strategy {
        self.strategy
    }
}

impl Iterator for CodeWordIterator<'_> {
    type Item = LinPoly;

    fn next(&mut self) -> Option<LinPoly> {
        if self.next >= self.total {
            return None;
        }
        let i = self.next;
        self.next += 1;
        Some(match self.strategy {
            Strategy::Full => self.code.full_word(i),
            _ => self.code.projective_word(i),
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = (self.total - self.next) as usize;
        (r, Some(r))
    }
}
