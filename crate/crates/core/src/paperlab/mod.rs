//! The trinomial code ⟨x, x^q + x^{q^3} + c x^{q^5}⟩ over F_{q^6} with
//! c^2 + c = 1, its dual, and the polynomial systems that decide whether it
//! is MRD.

mod search;
mod verify;

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{prime_power, Fe, FieldCtx, DEFAULT_TABLE_CAP};
use crate::linpoly::LinPoly;
use crate::rdcode::RankCode;

pub use search::{
    integer_coeffs, table1_row, table1_search, table1_verify, Coef, Mcg, SearchHit, SearchJob,
    SearchMode, SearchReport, VerifyReport, EXHAUSTIVE_CAP,
};
pub use verify::{
    verify_main, verify_main_with, IdealiserSummary, VerifyMainReport, VerifyOptions,
};

/// All roots of x^2 + x - 1 in F_{q^6}, in index order.
pub fn find_c(ctx: &FieldCtx) -> Vec<Fe> {
    ctx.subfield_elements(2)
        .into_iter()
        .filter(|&c| ctx.add(ctx.mul(c, c), c) == Fe::ONE)
        .collect()
}

#[derive(Clone, Debug)]
pub struct PaperInstance {
    pub q: u64,
    pub ctx: Arc<FieldCtx>,
    pub c: Fe,
    /// ⟨x, x^q + x^{q^3} + c x^{q^5}⟩
    pub code_c: RankCode,
    /// ⟨x^q, x^{q^3}, -x + x^{q^2}, c x - x^{q^4}⟩
    pub code_d: RankCode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelSolution {
    pub alpha: Fe,
    pub beta: Fe,
    pub gamma: Fe,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelCheck {
    pub holds: bool,
    /// 1-based indices of the conditions that fail.
    pub failed: Vec<usize>,
}

pub fn build_instance(q: u64) -> Result<PaperInstance> {
    build_instance_with(q, 0, DEFAULT_TABLE_CAP)
}

/// `root` selects among the roots of x^2 + x - 1 in index order.
pub fn build_instance_with(q: u64, root: usize, cap: u64) -> Result<PaperInstance> {
    if prime_power(q).is_none() {
        return Err(Error::InvalidParameter(format!(
            "q = {q} is not a prime power"
        )));
    }
    let spec = crate::gf::FieldSpec::for_q(q, 6)?;
    let ctx = FieldCtx::build_with_cap(spec, cap)?;
    let roots = find_c(&ctx);
    let c = *roots.get(root).ok_or_else(|| {
        Error::InvalidParameter(format!("only {} roots of x^2 + x - 1", roots.len()))
    })?;
    let m = |a: Fe, i: usize| LinPoly::monomial(&ctx, a, i);
    let sum = |ps: &[LinPoly]| {
        ps.iter()
            .skip(1)
            .fold(ps[0].clone(), |acc, p| acc.add(p).expect("same field"))
    };
    let one = Fe::ONE;
    let minus = ctx.neg(one);
    let f = sum(&[m(one, 1), m(one, 3), m(c, 5)]);
    let code_c = RankCode::from_semilinear(vec![LinPoly::identity(&ctx), f])?;
    let code_d = RankCode::from_semilinear(vec![
        m(one, 1),
        m(one, 3),
        sum(&[m(minus, 0), m(one, 2)]),
        sum(&[m(c, 0), m(minus, 4)]),
    ])?;
    Ok(PaperInstance {
        q,
        ctx,
        c,
        code_c,
        code_d,
    })
}

impl PaperInstance {
    pub fn q_odd(&self) -> bool {
        self.q % 2 == 1
    }

    /// The trinomial x^q + x^{q^3} + c x^{q^5}.
    pub fn f(&self) -> &LinPoly {
        &self.code_c.semilinear_gens().expect("semilinear")[1]
    }

    /// a^(sum of q^i over `pows`).
    fn qp(&self, a: Fe, pows: &[u32]) -> Fe {
        let q = self.q as u128;
        self.ctx.pow(a, pows.iter().map(|&i| q.pow(i)).sum())
    }

    fn big(&self) -> u128 {
        self.ctx.order() as u128 - 1
    }
}

/// All six conditions of the system characterising kernel-4 dual words.
pub fn system_rel_check(inst: &PaperInstance, sol: &RelSolution) -> RelCheck {
    let k = &*inst.ctx;
    let q = inst.q as u128;
    let RelSolution { alpha, beta, gamma } = *sol;
    let u = k.add(k.neg(gamma), inst.c);
    let p = |a: Fe, pows: &[u32]| inst.qp(a, pows);
    let mut failed = Vec::new();

    if alpha.is_zero() {
        failed.push(1);
    }
    if k.pow(u, inst.big() / (q - 1)) != Fe::ONE {
        failed.push(2);
    }
    let bracket = k.add(
        k.add(
            k.neg(p(u, &[4, 2])),
            k.mul(p(beta, &[5, 4]), p(u, &[4, 3, 2])),
        ),
        p(beta, &[2, 1]),
    );
    if k.mul(u, bracket) != Fe::ONE {
        failed.push(3);
    }
    if alpha != k.neg(k.mul(p(u, &[1, 0]), p(beta, &[2]))) {
        failed.push(4);
    }
    let rhs5 = k.add(
        k.neg(p(u, &[2, 0])),
        k.mul(p(beta, &[3, 2]), p(u, &[2, 1, 0])),
    );
    if gamma != rhs5 {
        failed.push(5);
    }
    let rhs6 = k.sub(
        k.add(
            k.mul(p(u, &[3, 2, 0]), p(beta, &[4])),
            k.mul(p(beta, &[2]), p(u, &[3, 1, 0])),
        ),
        k.mul(p(beta, &[4, 3, 2]), p(u, &[3, 2, 1, 0])),
    );
    if beta != rhs6 {
        failed.push(6);
    }
    RelCheck {
        holds: failed.is_empty(),
        failed,
    }
}

/// (-γ+c) x + α x^q + γ x^{q^2} + β x^{q^3} - x^{q^4}.
pub fn dual_codeword(inst: &PaperInstance, sol: &RelSolution) -> LinPoly {
    let k = &inst.ctx;
    let coeffs = vec![
        k.add(k.neg(sol.gamma), inst.c),
        sol.alpha,
        sol.gamma,
        sol.beta,
        k.neg(Fe::ONE),
        Fe::ZERO,
    ];
    LinPoly::new(k, coeffs).expect("six coefficients")
}

/// Reads (α, β, γ) off a word of D whose x^{q^4} coefficient is nonzero.
pub fn solution_of_codeword(inst: &PaperInstance, f: &LinPoly) -> Option<RelSolution> {
    let k = &*inst.ctx;
    let a = f.coeffs();
    if a[4].is_zero() || !inst.code_d.contains(f) {
        return None;
    }
    let g = f.scale(k.div(k.neg(Fe::ONE), a[4]).expect("nonzero"));
    let b = g.coeffs();
    debug_assert_eq!(b[0], k.add(k.neg(b[2]), inst.c));
    Some(RelSolution {
        alpha: b[1],
        beta: b[3],
        gamma: b[2],
    })
}

/// Every (α, β, γ) with α forced by the fourth condition solving the system.
/// Exhaustive over (β, γ); refuses when q^12 exceeds `cap`.
pub fn system_rel_scan(inst: &PaperInstance, cap: u64) -> Result<Vec<RelSolution>> {
    let k = &*inst.ctx;
    let order = k.order() as u64;
    if order.saturating_mul(order) > cap {
        return Err(Error::TooLarge {
            what: "(beta, gamma) scan",
            size: (order as u128).pow(2),
            cap: cap as u128,
        });
    }
    let mut hits: Vec<RelSolution> = (0..order as u32)
        .into_par_iter()
        .flat_map_iter(|g| {
            let gamma = Fe(g);
            let u = k.add(k.neg(gamma), inst.c);
            let up = inst.qp(u, &[1, 0]);
            (0..order as u32).filter_map(move |b| {
                let beta = Fe(b);
                let alpha = k.neg(k.mul(up, inst.qp(beta, &[2])));
                let sol = RelSolution { alpha, beta, gamma };
                system_rel_check(inst, &sol).holds.then_some(sol)
            })
        })
        .collect();
    hits.sort_by_key(|s| (s.gamma, s.beta));
    Ok(hits)
}

/// First and second conditions of the one-variable reduced system.
pub fn rel4_holds(inst: &PaperInstance, gamma: Fe) -> bool {
    let k = &*inst.ctx;
    let q = inst.q as u128;
    let u = k.add(k.neg(gamma), inst.c);
    let first = k.neg(k.mul(k.pow(gamma, q - 1), u));
    k.pow(first, q * q + q + 1) == Fe::ONE && second_condition(inst, gamma)
}

/// The fixed-point form of the first condition, with the same second condition.
pub fn rel3_holds(inst: &PaperInstance, gamma: Fe) -> bool {
    let k = &*inst.ctx;
    let u = k.add(k.neg(gamma), inst.c);
    let rhs = k.neg(k.mul(inst.qp(gamma, &[3]), inst.qp(u, &[2, 1, 0])));
    gamma == rhs && second_condition(inst, gamma)
}

fn second_condition(inst: &PaperInstance, gamma: Fe) -> bool {
    let k = &*inst.ctx;
    let q = inst.q as u128;
    let u = k.add(k.neg(gamma), inst.c);
    let Ok(inv) = k.inv(u) else {
        return false;
    };
    let v = k.sub(inv, inst.qp(gamma, &[2]));
    k.pow(v, inst.big() / (q + 1)) == Fe::ONE
}

/// The subgroup {λ : λ^{q^2+q+1} = 1} of F_{q^3}^*, in index order.
pub fn lambda_subgroup(inst: &PaperInstance) -> Vec<Fe> {
    let q = inst.q;
    inst.ctx
        .solve_power(q * q + q + 1, Fe::ONE)
        .expect("one is nonzero")
}

#[derive(Clone, Debug, Serialize)]
pub struct FormCandidate {
    pub lambda: Fe,
    /// `None` when the denominator vanishes.
    pub x: Option<Fe>,
    pub satisfies_rel4: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FormsolutionReport {
    pub q: u64,
    pub lambdas: usize,
    pub candidates: Vec<FormCandidate>,
    pub any_solution: bool,
}

/// x = 2 / (λ^{q^2+q}(c+2) - λ^{q^2} c + c) for each λ, tested against rel4.
pub fn formsolution_scan(inst: &PaperInstance) -> Result<FormsolutionReport> {
    if !inst.q_odd() {
        return Err(Error::InvalidParameter(
            "the parameterisation needs q odd".into(),
        ));
    }
    let k = &*inst.ctx;
    let two = k.from_int(2);
    let lambdas = lambda_subgroup(inst);
    let candidates: Vec<FormCandidate> = lambdas
        .iter()
        .map(|&l| {
            let x = k.div(two, form_denominator(inst, l)).ok();
            FormCandidate {
                lambda: l,
                x,
                satisfies_rel4: x.is_some_and(|x| rel4_holds(inst, x)),
            }
        })
        .collect();
    Ok(FormsolutionReport {
        q: inst.q,
        lambdas: lambdas.len(),
        any_solution: candidates.iter().any(|c| c.satisfies_rel4),
        candidates,
    })
}

fn form_denominator(inst: &PaperInstance, l: Fe) -> Fe {
    let k = &*inst.ctx;
    let c = inst.c;
    let a = k.mul(inst.qp(l, &[2, 1]), k.add(c, k.from_int(2)));
    let b = k.mul(inst.qp(l, &[2]), c);
    k.add(k.sub(a, b), c)
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaScanReport {
    pub q: u64,
    pub candidates: u64,
    pub rel3_solutions: Vec<Fe>,
    pub rel4_solutions: Vec<Fe>,
}

/// Every nonzero γ tested against rel3 and rel4.
pub fn full_gamma_scan(inst: &PaperInstance) -> GammaScanReport {
    let k = &*inst.ctx;
    let hits: Vec<(Fe, bool, bool)> = k
        .elements()
        .skip(1)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|g| (g, rel3_holds(inst, g), rel4_holds(inst, g)))
        .filter(|h| h.1 || h.2)
        .collect();
    GammaScanReport {
        q: inst.q,
        candidates: k.order() as u64 - 1,
        rel3_solutions: hits.iter().filter(|h| h.1).map(|h| h.0).collect(),
        rel4_solutions: hits.iter().filter(|h| h.2).map(|h| h.0).collect(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HirschfeldReport {
    pub lambda: Fe,
    /// N_{q^6/q}(-λc)
    pub norm: Fe,
    pub solutions: Vec<Fe>,
    /// (c + λ^{q^2+q}(c+2) - c λ^{q^2}) / 2
    pub simplified: Fe,
    /// sum_k λ^{q^k} (-λc)^{q^{k+1} + ... + q^5}, read with the missing '+' restored
    pub orbit_sum: Fe,
    /// The same six terms with the fourth and fifth multiplied.
    pub orbit_product: Fe,
    /// orbit_sum / (1 - norm)
    pub orbit_solution: Option<Fe>,
    pub simplified_matches: bool,
    pub orbit_sum_matches: bool,
    pub orbit_product_matches: bool,
    pub orbit_solution_matches: bool,
}

/// Solves T^q + cλT = λ three ways and compares.
pub fn hirschfeld_solve(inst: &PaperInstance, lambda: Fe) -> Result<HirschfeldReport> {
    if !inst.q_odd() {
        return Err(Error::InvalidParameter("needs q odd".into()));
    }
    let k = &*inst.ctx;
    let q = inst.q;
    if k.pow(lambda, (q * q + q + 1) as u128) != Fe::ONE {
        return Err(Error::InvalidParameter(format!(
            "lambda = {} is not in the (q^2+q+1)-subgroup",
            lambda.index()
        )));
    }
    let mu = k.neg(k.mul(lambda, inst.c));
    let norm = k.norm(mu, 1)?;
    if norm == Fe::ONE {
        return Err(Error::Contradiction(
            "N(-lambda c) = 1; the equation has no unique solution".into(),
        ));
    }
    let eq = LinPoly::new(
        &inst.ctx,
        vec![
            k.mul(inst.c, lambda),
            Fe::ONE,
            Fe::ZERO,
            Fe::ZERO,
            Fe::ZERO,
            Fe::ZERO,
        ],
    )?;
    let solutions = eq.solve_affine(lambda);
    let two_inv = k.inv(k.from_int(2))?;
    let simplified = k.mul(
        k.sub(
            k.add(
                inst.c,
                k.mul(inst.qp(lambda, &[2, 1]), k.add(inst.c, k.from_int(2))),
            ),
            k.mul(inst.c, inst.qp(lambda, &[2])),
        ),
        two_inv,
    );
    let terms: Vec<Fe> = (0..6u32)
        .map(|i| {
            let pows: Vec<u32> = (i + 1..6).collect();
            k.mul(inst.qp(lambda, &[i]), inst.qp(mu, &pows))
        })
        .collect();
    let orbit_sum = terms.iter().fold(Fe::ZERO, |acc, &t| k.add(acc, t));
    let orbit_product = [
        terms[0],
        terms[1],
        terms[2],
        k.mul(terms[3], terms[4]),
        terms[5],
    ]
    .iter()
    .fold(Fe::ZERO, |acc, &t| k.add(acc, t));
    let orbit_solution = k.div(orbit_sum, k.sub(Fe::ONE, norm)).ok();
    let unique = (solutions.len() == 1).then(|| solutions[0]);
    Ok(HirschfeldReport {
        lambda,
        norm,
        simplified_matches: unique == Some(simplified),
        orbit_sum_matches: unique == Some(orbit_sum),
        orbit_product_matches: unique == Some(orbit_product),
        orbit_solution_matches: unique.is_some() && unique == orbit_solution,
        solutions,
        simplified,
        orbit_sum,
        orbit_product,
        orbit_solution,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct EvenReport {
    pub q: u64,
    pub solution: RelSolution,
    /// The three reduced conditions at γ = 0.
    pub reduced_conditions: [bool; 3],
    pub check: RelCheck,
    pub codeword: LinPoly,
    pub kernel_dim: usize,
}

/// The three conditions of the γ = 0 reduction.
pub fn reduced_even_conditions(inst: &PaperInstance, beta: Fe) -> [bool; 3] {
    let k = &*inst.ctx;
    let c = inst.c;
    let q = inst.q as u128;
    let p = |a: Fe, pows: &[u32]| inst.qp(a, pows);
    let e1 = k.mul(
        c,
        k.add(
            k.add(p(c, &[4, 2]), k.mul(p(beta, &[5, 4]), p(c, &[4, 3, 2]))),
            p(beta, &[2, 1]),
        ),
    ) == Fe::ONE;
    let e2 = k.mul(p(beta, &[3, 2]), p(c, &[1])) == Fe::ONE;
    let e3 = beta
        == k.add(
            k.add(
                k.mul(k.pow(c, q + 2), p(beta, &[4])),
                k.mul(p(beta, &[2]), k.pow(c, 2 * q + 1)),
            ),
            k.mul(p(beta, &[4, 3, 2]), k.pow(c, 2 * (q + 1))),
        );
    [e1, e2, e3]
}

/// Tries γ = 0, β^{q+1} = c^{-q}, α = c^{q+1} β^{q^2} for every admissible β;
/// returns the first β (by index) that solves the full system.
pub fn even_construction(inst: &PaperInstance) -> Result<Option<EvenReport>> {
    let k = &*inst.ctx;
    let q = inst.q;
    let target = k.inv(inst.qp(inst.c, &[1]))?;
    for beta in k.solve_power(q + 1, target)? {
        let alpha = k.mul(inst.qp(inst.c, &[1, 0]), inst.qp(beta, &[2]));
        let solution = RelSolution {
            alpha,
            beta,
            gamma: Fe::ZERO,
        };
        let check = system_rel_check(inst, &solution);
        if !check.holds {
            continue;
        }
        let codeword = dual_codeword(inst, &solution);
        let kernel_dim = codeword.kernel().len();
        return Ok(Some(EvenReport {
            q,
            solution,
            reduced_conditions: reduced_even_conditions(inst, beta),
            check,
            codeword,
            kernel_dim,
        }));
    }
    Ok(None)
}

/// The even-q solution with γ = 0 and its kernel-4 dual word.
pub fn even_counterexample(inst: &PaperInstance) -> Result<EvenReport> {
    if inst.q_odd() {
        return Err(Error::InvalidParameter("needs q even".into()));
    }
    let k = &*inst.ctx;
    if k.pow(inst.c, 3) != Fe::ONE {
        return Err(Error::Contradiction("c^3 != 1 for even q".into()));
    }
    let q = inst.q;
    let target = k.inv(inst.qp(inst.c, &[1]))?;
    let betas = k.solve_power(q + 1, target)?;
    let Some(&beta) = betas.first() else {
        return Err(Error::Contradiction(
            "beta^(q+1) = c^(-q) has no solution".into(),
        ));
    };
    let alpha = k.mul(inst.qp(inst.c, &[1, 0]), inst.qp(beta, &[2]));
    let solution = RelSolution {
        alpha,
        beta,
        gamma: Fe::ZERO,
    };
    let check = system_rel_check(inst, &solution);
    let codeword = dual_codeword(inst, &solution);
    let kernel_dim = codeword.kernel().len();
    Ok(EvenReport {
        q,
        solution,
        reduced_conditions: reduced_even_conditions(inst, beta),
        check,
        codeword,
        kernel_dim,
    })
}

#[cfg(test)]
mod tests;
