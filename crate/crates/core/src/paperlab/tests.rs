use super::*;
use crate::gf::FieldSpec;

fn inst(q: u64) -> PaperInstance {
    build_instance(q).unwrap()
}

#[test]
fn roots_of_c() {
    let k = FieldCtx::for_q(5, 6).unwrap();
    assert_eq!(find_c(&k), vec![k.from_int(2)]);

    let k = FieldCtx::for_q(3, 6).unwrap();
    let roots = find_c(&k);
    assert_eq!(roots.len(), 2);
    for &c in &roots {
        assert!(k.in_subfield(c, 2) && !k.in_subfield(c, 1));
        assert_eq!(
            k.frobenius(c, 1),
            if c == roots[0] { roots[1] } else { roots[0] }
        );
        assert_eq!(k.pow(c, 4), k.neg(Fe::ONE));
        assert_eq!(k.add(c, k.frobenius(c, 1)), k.neg(Fe::ONE));
    }

    for q in [2, 4, 8] {
        let k = FieldCtx::for_q(q, 6).unwrap();
        let roots = find_c(&k);
        assert_eq!(roots.len(), 2);
        for c in roots {
            assert_ne!(c, Fe::ONE);
            assert_eq!(k.pow(c, 3), Fe::ONE);
        }
    }
}

#[test]
fn roots_in_prime_field_when_q_is_one_mod_five() {
    let k = FieldCtx::for_q(11, 6).unwrap();
    let roots = find_c(&k);
    assert_eq!(roots.len(), 2);
    assert!(roots.iter().all(|&c| k.in_subfield(c, 1)));
}

#[test]
fn instance_dimensions() {
    for q in [2, 3] {
        let i = inst(q);
        assert_eq!(i.code_c.dim(), 12);
        assert_eq!(i.code_d.dim(), 24);
    }
}

#[test]
fn zero_alpha_fails_first_condition() {
    let i = inst(3);
    let sol = RelSolution {
        alpha: Fe::ZERO,
        beta: Fe(5),
        gamma: Fe(7),
    };
    let r = system_rel_check(&i, &sol);
    assert!(!r.holds);
    assert!(r.failed.contains(&1));
}

#[test]
fn simple_dual_word_has_small_kernel() {
    let i = inst(3);
    let sol = RelSolution {
        alpha: Fe::ONE,
        beta: Fe::ZERO,
        gamma: Fe::ZERO,
    };
    let w = dual_codeword(&i, &sol);
    assert!(i.code_d.contains(&w));
    assert!(w.kernel().len() <= 4);
}

#[test]
fn even_counterexamples() {
    for q in [2, 4, 8] {
        let i = inst(q);
        let r = even_counterexample(&i).unwrap();
        assert!(r.check.holds, "q = {q}: {:?}", r.check.failed);
        assert_eq!(r.reduced_conditions, [true; 3]);
        assert_eq!(r.kernel_dim, 4);
        assert!(i.code_d.contains(&r.codeword));
        assert!(even_construction(&i).unwrap().is_some());
    }
}

#[test]
fn even_construction_fails_for_odd_q() {
    for q in [3, 5, 7] {
        assert!(even_construction(&inst(q)).unwrap().is_none(), "q = {q}");
    }
    assert!(even_counterexample(&inst(3)).is_err());
}

/// At q = 2 every word of D with nonzero x^{q^4} coefficient normalises to
/// some (α, β, γ); kernel dimension 4 must match the system exactly.
#[test]
fn system_matches_kernel_brute_force_q2() {
    let i = inst(2);
    let mut both = 0;
    for a in 0..64 {
        for b in 0..64 {
            for g in 0..64 {
                let sol = RelSolution {
                    alpha: Fe(a),
                    beta: Fe(b),
                    gamma: Fe(g),
                };
                let w = dual_codeword(&i, &sol);
                let in_d = i.code_d.contains(&w);
                let k4 = in_d && w.kernel().len() == 4;
                let holds = system_rel_check(&i, &sol).holds;
                assert_eq!(k4, holds, "({a}, {b}, {g})");
                both += holds as usize;
            }
        }
    }
    assert!(both > 0);
    let scan = system_rel_scan(&i, 1 << 24).unwrap();
    assert_eq!(scan.len(), both);
}

#[test]
fn relscan_empty_for_q3() {
    let i = inst(3);
    assert!(system_rel_scan(&i, 1 << 24).unwrap().is_empty());
}

#[test]
fn formsolution_q3_and_q7() {
    let r = formsolution_scan(&inst(3)).unwrap();
    assert_eq!(r.lambdas, 13);
    assert!(!r.any_solution);
    let r = formsolution_scan(&inst(7)).unwrap();
    assert_eq!(r.lambdas, 57);
    assert!(!r.any_solution);
    assert!(formsolution_scan(&inst(2)).is_err());
}

#[test]
fn full_gamma_scan_agrees_q3() {
    let g = full_gamma_scan(&inst(3));
    assert_eq!(g.candidates, 728);
    assert!(g.rel3_solutions.is_empty());
    assert!(g.rel4_solutions.is_empty());
}

#[test]
fn hirschfeld_q3() {
    let i = inst(3);
    let k = &*i.ctx;
    let lambdas = lambda_subgroup(&i);
    assert_eq!(lambdas.len(), 13);
    for l in lambdas {
        let r = hirschfeld_solve(&i, l).unwrap();
        assert_eq!(r.norm, k.neg(Fe::ONE));
        assert_eq!(r.solutions.len(), 1);
        assert!(r.simplified_matches);
        assert!(r.orbit_solution_matches);
        // the plain orbit sum is (1 - N) T = 2T
        assert_eq!(r.orbit_sum, k.mul(k.from_int(2), r.solutions[0]));
    }
    let product_hits = lambda_subgroup(&i)
        .into_iter()
        .filter(|&l| hirschfeld_solve(&i, l).unwrap().orbit_product_matches)
        .count();
    assert!(product_hits < 13);
    let outside = k
        .elements()
        .find(|&x| !x.is_zero() && k.pow(x, 13) != Fe::ONE)
        .unwrap();
    assert!(hirschfeld_solve(&i, outside).is_err());
}

#[test]
fn both_roots_give_mrd_at_q3() {
    for root in 0..2 {
        let i = build_instance_with(3, root, DEFAULT_TABLE_CAP).unwrap();
        assert!(i.code_c.is_mrd().unwrap().is_mrd);
        assert!(!formsolution_scan(&i).unwrap().any_solution);
    }
}

#[test]
fn verify_main_q3() {
    let r = verify_main(3).unwrap();
    assert!(r.consistent, "{:?}", r.inconsistencies);
    assert!(r.is_mrd);
    assert_eq!(r.min_distance, 5);
    assert_eq!(r.left_idealiser.as_ref().unwrap().field_order, Some(729));
    assert_eq!(r.right_idealiser.as_ref().unwrap().field_order, Some(9));
    assert_eq!(r.scattered, Some(true));
    assert_eq!(r.dual_dimension, 24);
    assert_eq!(r.dual_is_mrd, Some(true));
    assert!(!r.twist_matches.is_empty());
}

#[test]
fn verify_main_q4() {
    let r = verify_main(4).unwrap();
    assert!(r.consistent, "{:?}", r.inconsistencies);
    assert!(!r.is_mrd);
    assert!(r.min_distance <= 4);
    assert!(r.witness.is_some());
    assert_eq!(r.scattered, Some(false));
    assert!(r.even_construction);
}

#[test]
fn mcg_is_reproducible() {
    let mut a = Mcg::for_trial(7, 3);
    let mut b = Mcg::for_trial(7, 3);
    let xs: Vec<u64> = (0..8).map(|_| a.below(100)).collect();
    let ys: Vec<u64> = (0..8).map(|_| b.below(100)).collect();
    assert_eq!(xs, ys);
    assert!(xs.iter().all(|&x| x < 100));
    assert_ne!(
        Mcg::for_trial(7, 4).next_u64(),
        Mcg::for_trial(7, 3).next_u64()
    );
}

#[test]
fn table1_rows_small() {
    for (row, q) in [(1, 4), (2, 3), (3, 3)] {
        let (n, pattern) = table1_row(row).unwrap();
        let mut job = SearchJob::new(n, q, pattern);
        job.first_k = Some(1);
        let r = table1_search(&job).unwrap();
        assert_eq!(r.hits.len(), 1, "row {row}");
        let hit = &r.hits[0];
        let v = table1_verify(n, q, &hit.coeffs).unwrap();
        assert!(v.is_mrd, "row {row}");
    }
}

/// Oracle: full enumeration of all 4095 nonzero words for every a_5.
#[test]
fn table1_row1_q2_has_no_mrd_member() {
    let (n, pattern) = table1_row(1).unwrap();
    let r = table1_search(&SearchJob::new(n, 2, pattern)).unwrap();
    assert_eq!(r.candidates, 63);
    assert!(r.hits.is_empty());
    let k = FieldCtx::for_q(2, 6).unwrap();
    for a in 1..64 {
        let f = LinPoly::from_indices(&k, &[0, 1, 0, 1, 0, a]).unwrap();
        let code = RankCode::from_semilinear(vec![LinPoly::identity(&k), f.clone()]).unwrap();
        let opts =
            crate::rdcode::DistanceOptions::default().with_strategy(crate::rdcode::Strategy::Full);
        assert!(code.min_distance_with(opts).unwrap().min_distance.unwrap() < 5);
        // second oracle: some word λx + f(x) or f(x) has at least four roots
        let roots = |l: Option<Fe>| {
            k.elements()
                .filter(|&x| match l {
                    Some(l) => k.add(k.mul(l, x), f.eval(x)).is_zero(),
                    None => f.eval(x).is_zero(),
                })
                .count()
        };
        let small = roots(None) >= 4 || k.elements().any(|l| roots(Some(l)) >= 4);
        assert!(small, "a5 = {a}");
    }
}

#[test]
fn table1_search_is_sorted_and_complete() {
    let (n, pattern) = table1_row(1).unwrap();
    let r = table1_search(&SearchJob::new(n, 4, pattern)).unwrap();
    assert_eq!(r.candidates, 4095);
    assert_eq!(r.hits.len(), 48);
    assert!(r.hits.windows(2).all(|w| w[0].index < w[1].index));
    for h in r.hits.iter().take(4) {
        assert!(table1_verify(n, 4, &h.coeffs).unwrap().is_mrd);
    }
    assert!(r.hits.iter().all(|h| h.subfields[0].last() == Some(&6)));
}

#[test]
fn table1_random_mode_reproducible() {
    let (n, pattern) = table1_row(2).unwrap();
    let mut job = SearchJob::new(n, 3, pattern);
    job.mode = SearchMode::Random {
        seed: 11,
        trials: 64,
    };
    let a = table1_search(&job).unwrap();
    let b = table1_search(&job).unwrap();
    assert_eq!(a.hits.len(), b.hits.len());
    assert!(a
        .hits
        .iter()
        .zip(&b.hits)
        .all(|(x, y)| x.coeffs == y.coeffs));
}

#[test]
fn table1_verify_main_code_and_row4() {
    let ctx = FieldCtx::for_q(3, 6).unwrap();
    let c = find_c(&ctx)[0];
    let v = table1_verify(3, 3, &[Fe::ONE, Fe::ONE, c]).unwrap();
    assert!(v.is_mrd);
    assert_eq!(v.min_distance, 5);

    let coeffs = integer_coeffs(4, 3, &[1, 1, 1, -1]).unwrap();
    let v = table1_verify(4, 3, &coeffs).unwrap();
    assert!(v.is_mrd);
    assert_eq!(v.field, FieldSpec::for_q(3, 8).unwrap());
}

#[test]
fn exhaustive_cap_enforced() {
    let (n, pattern) = table1_row(6).unwrap();
    let err = table1_search(&SearchJob::new(n, 3, pattern)).unwrap_err();
    assert!(matches!(err, Error::TooLarge { .. }));
    let bad = SearchJob::new(3, 2, vec![Coef::Fixed(2), Coef::Fixed(1), Coef::Var(0)]);
    assert!(table1_search(&bad).is_err());
}
