use super::*;

fn f9_t2_plus_1() -> Arc<FieldCtx> {
    FieldCtx::build(FieldSpec {
        p: 3,
        e: 1,
        n: 2,
        modulus: vec![1, 0, 1],
    })
    .unwrap()
}

/// Multiplicative order by repeated multiplication.
fn brute_order(ctx: &FieldCtx, a: Fe) -> u32 {
    let mut x = a;
    let mut k = 1;
    while x != Fe::ONE {
        x = ctx.mul(x, a);
        k += 1;
    }
    k
}

fn digits_to_index(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

#[test]
fn builds_f729_and_f4096() {
    let ctx = FieldCtx::for_q(3, 6).unwrap();
    assert_eq!(ctx.order(), 729);
    assert_eq!(ctx.exp.len(), 728);
    let ctx = FieldCtx::for_q(4, 6).unwrap();
    assert_eq!(ctx.order(), 4096);
    assert_eq!(ctx.q(), 4);
    assert_eq!(ctx.spec().e, 2);
}

#[test]
fn generator_of_f9_has_order_8() {
    let ctx = f9_t2_plus_1();
    let g = ctx.generator();
    assert_eq!(brute_order(&ctx, g), 8);
    // smallest primitive index: 3 = t has order 4, 4 = t + 1 is primitive
    assert_eq!(brute_order(&ctx, Fe(3)), 4);
    assert_eq!(g, Fe(4));
}

#[test]
fn generator_is_deterministic() {
    let a = FieldCtx::for_q(5, 6).unwrap();
    let b = FieldCtx::for_q(5, 6).unwrap();
    assert_eq!(a.generator(), b.generator());
    assert!(a.same(&b));
}

#[test]
fn elementary_arithmetic() {
    let ctx = f9_t2_plus_1();
    let t = Fe(3);
    assert_eq!(ctx.mul(Fe::ZERO, t), Fe::ZERO);
    assert_eq!(ctx.inv(Fe::ONE).unwrap(), Fe::ONE);
    assert_eq!(ctx.mul(t, t), Fe(2));
    assert_eq!(ctx.inv(Fe::ZERO), Err(Error::DivisionByZero));
    assert_eq!(ctx.div(t, Fe::ZERO), Err(Error::DivisionByZero));
}

#[test]
fn table_arithmetic_matches_polynomial_arithmetic() {
    for (q, n) in [(2u64, 6u32), (3, 3), (4, 3), (9, 1), (5, 2)] {
        let ctx = FieldCtx::for_q(q, n).unwrap();
        let p = ctx.p();
        let m = ctx.spec().modulus.clone();
        for a in ctx.elements() {
            for b in ctx.elements() {
                let da = ctx.digits(a);
                let db = ctx.digits(b);
                let mut prod = poly::mul_mod(&da, &db, &m, p);
                prod.resize(ctx.degree(), 0);
                assert_eq!(
                    ctx.mul(a, b).index(),
                    digits_to_index(&prod, p),
                    "q={q} n={n}"
                );
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                assert_eq!(ctx.add(a, b).index(), digits_to_index(&sum, p));
            }
        }
    }
}

#[test]
fn noncanonical_modulus_uses_generic_table_path() {
    // t^4 + t^3 + t^2 + t + 1 is irreducible over F_2 but t has order 5.
    let ctx = FieldCtx::build(FieldSpec {
        p: 2,
        e: 1,
        n: 4,
        modulus: vec![1, 1, 1, 1, 1],
    })
    .unwrap();
    assert_eq!(brute_order(&ctx, ctx.generator()), 15);
    for a in ctx.elements().skip(1) {
        assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), Fe::ONE);
    }
}

#[test]
fn construction_errors() {
    let reducible = FieldSpec {
        p: 5,
        e: 1,
        n: 2,
        modulus: vec![1, 0, 1],
    };
    assert_eq!(
        FieldCtx::build(reducible).unwrap_err(),
        Error::ReducibleModulus { p: 5 }
    );
    let wrong_degree = FieldSpec {
        p: 3,
        e: 1,
        n: 3,
        modulus: vec![1, 0, 1],
    };
    assert!(matches!(
        FieldCtx::build(wrong_degree).unwrap_err(),
        Error::ModulusDegree { expected: 3, .. }
    ));
    let big = FieldSpec::canonical(2, 1, 12).unwrap();
    assert!(matches!(
        FieldCtx::build_with_cap(big, 1 << 10).unwrap_err(),
        Error::FieldTooLarge { size: 4096, .. }
    ));
    assert!(FieldSpec::canonical(4, 1, 2).is_err());
}

#[test]
fn frobenius_basics() {
    let ctx = FieldCtx::for_q(3, 6).unwrap();
    for a in ctx.elements() {
        assert_eq!(ctx.frobenius(a, 0), a);
        assert_eq!(ctx.frobenius(ctx.frobenius(a, 1), 5), a);
        assert_eq!(ctx.frobenius(a, -1), ctx.frobenius(a, 5));
        assert_eq!(ctx.frobenius(a, 1), ctx.pow(a, 3));
    }
    assert_eq!(ctx.frobenius(Fe::ZERO, 4), Fe::ZERO);
}

#[test]
fn trace_and_norm_examples() {
    let ctx = FieldCtx::for_q(3, 6).unwrap();
    assert_eq!(ctx.trace(Fe::ZERO, 1).unwrap(), Fe::ZERO);
    assert_eq!(ctx.norm(Fe::ONE, 1).unwrap(), Fe::ONE);
    assert_eq!(ctx.trace(Fe::ONE, 1).unwrap(), Fe::ZERO);
    assert_eq!(
        ctx.trace(Fe::ONE, 4),
        Err(Error::NotADivisor { sub: 4, n: 6 })
    );
    for q in [3u64, 4, 5] {
        let ctx = FieldCtx::for_q(q, 6).unwrap();
        let ng = ctx.norm(ctx.generator(), 1).unwrap();
        assert_eq!(brute_order(&ctx, ng) as u64, q - 1, "q={q}");
    }
}

#[test]
fn subfield_membership() {
    let ctx = FieldCtx::for_q(3, 6).unwrap();
    assert!(ctx.in_subfield(Fe::ZERO, 3));
    assert!(!ctx.in_subfield(ctx.generator(), 1));
    let f9 = ctx.subfield_elements(2);
    let roots: Vec<Fe> = f9
        .iter()
        .copied()
        .filter(|&c| ctx.sub(ctx.add(ctx.mul(c, c), c), Fe::ONE).is_zero())
        .collect();
    assert_eq!(roots.len(), 2);
    for c in roots {
        assert!(ctx.in_subfield(c, 2));
        assert!(!ctx.in_subfield(c, 1));
    }
}

#[test]
fn solve_power_examples() {
    let ctx = FieldCtx::for_q(3, 6).unwrap();
    let a = Fe(100);
    assert_eq!(ctx.solve_power(1, a).unwrap(), vec![a]);
    let all = ctx.solve_power(ctx.order() as u64 - 1, Fe::ONE).unwrap();
    assert_eq!(all, ctx.elements().skip(1).collect::<Vec<_>>());
    assert_eq!(ctx.solve_power(2, Fe::ZERO), Err(Error::ZeroPower));

    // q = 2: the element c with c^2 + c + 1 = 0 admits beta^3 = c^-2.
    let ctx = FieldCtx::for_q(2, 6).unwrap();
    let c = ctx
        .subfield_elements(2)
        .into_iter()
        .find(|&c| ctx.add(ctx.add(ctx.mul(c, c), c), Fe::ONE).is_zero())
        .unwrap();
    let rhs = ctx.inv(ctx.mul(c, c)).unwrap();
    let sols = ctx.solve_power(3, rhs).unwrap();
    assert!(!sols.is_empty());
    for b in sols {
        assert_eq!(ctx.pow(b, 3), rhs);
    }
}

#[test]
fn solve_power_matches_brute_force() {
    for (q, n) in [(2u64, 6u32), (3, 4), (4, 3), (2, 12)] {
        let ctx = FieldCtx::for_q(q, n).unwrap();
        let group = ctx.order() as u64 - 1;
        let tested = match n {
            12 => vec![3u64, 5, 65],
            _ => vec![2, 3, 4, 6, 7, 9, 13],
        };
        for m in tested {
            let g = gcd(m, group);
            for a in ctx.elements().skip(1).step_by(if n == 12 { 97 } else { 1 }) {
                let brute: Vec<Fe> = ctx
                    .elements()
                    .skip(1)
                    .filter(|&x| ctx.pow(x, m as u128) == a)
                    .collect();
                let got = ctx.solve_power(m, a).unwrap();
                assert_eq!(got, brute, "q={q} m={m} a={a}");
                let la = ctx.log(a).unwrap() as u64;
                let expected = if la.is_multiple_of(g) { g as usize } else { 0 };
                assert_eq!(got.len(), expected);
            }
        }
    }
}

#[test]
fn enumeration_sizes() {
    let ctx = f9_t2_plus_1();
    assert_eq!(ctx.elements().count(), 9);
    let ctx = FieldCtx::for_q(3, 6).unwrap();
    assert_eq!(ctx.subfield_elements(1), vec![Fe(0), Fe(1), Fe(2)]);
    assert_eq!(ctx.fq_elements(), &[Fe(0), Fe(1), Fe(2)]);
    let f9 = ctx.subfield_elements(2);
    assert_eq!(f9.len(), 9);
    for x in f9 {
        assert_eq!(ctx.frobenius(x, 2), x);
    }
}

#[test]
fn field_axioms_exhaustive_small() {
    for (q, n) in [(2u64, 4u32), (3, 3), (4, 2), (7, 1)] {
        let ctx = FieldCtx::for_q(q, n).unwrap();
        let els: Vec<Fe> = ctx.elements().collect();
        for &a in &els {
            assert_eq!(ctx.add(a, ctx.neg(a)), Fe::ZERO);
            if !a.is_zero() {
                assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), Fe::ONE);
            }
            for &b in &els {
                assert_eq!(ctx.add(a, b), ctx.add(b, a));
                assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
                for &c in &els {
                    assert_eq!(ctx.add(ctx.add(a, b), c), ctx.add(a, ctx.add(b, c)));
                    assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
                    assert_eq!(
                        ctx.mul(a, ctx.add(b, c)),
                        ctx.add(ctx.mul(a, b), ctx.mul(a, c))
                    );
                }
            }
        }
    }
}

#[test]
fn trace_is_linear_and_surjective() {
    for q in [2u64, 3, 4] {
        let ctx = FieldCtx::for_q(q, 3).unwrap();
        let fq = ctx.fq_elements().to_vec();
        let mut hits = std::collections::BTreeSet::new();
        for a in ctx.elements() {
            let t = ctx.tr(a);
            assert!(fq.contains(&t));
            hits.insert(t);
            for &l in &fq {
                assert_eq!(ctx.tr(ctx.mul(l, a)), ctx.mul(l, t));
            }
        }
        assert_eq!(hits.len(), q as usize);
    }
}

#[test]
fn trace_transitivity() {
    for q in [2u64, 3] {
        let ctx = FieldCtx::for_q(q, 6).unwrap();
        for a in ctx.elements() {
            let inner = ctx.trace(a, 2).unwrap();
            // Tr_{q^2/q} of an element of F_{q^2}: x + x^q
            let outer = ctx.add(inner, ctx.frob(inner, 1));
            assert_eq!(outer, ctx.trace(a, 1).unwrap());
            let norm3 = ctx.norm(a, 3).unwrap();
            assert!(ctx.in_subfield(norm3, 3));
        }
    }
}

#[test]
fn coordinates_roundtrip() {
    for (q, n) in [(3u64, 6u32), (4, 6), (2, 6), (5, 2)] {
        let ctx = FieldCtx::for_q(q, n).unwrap();
        for x in ctx.elements() {
            let c = ctx.coords(x);
            assert!(c.iter().all(|&ci| ctx.in_subfield(ci, 1)));
            assert_eq!(ctx.from_coords(&c), x);
        }
        for (i, &b) in ctx.basis().iter().enumerate() {
            let mut unit = vec![Fe::ZERO; n as usize];
            unit[i] = Fe::ONE;
            assert_eq!(ctx.coords(b), unit);
        }
    }
}

#[test]
fn prime_power_decomposition() {
    assert_eq!(prime_power(9), Some((3, 2)));
    assert_eq!(prime_power(64), Some((2, 6)));
    assert_eq!(prime_power(12), None);
    assert_eq!(prime_power(1), None);
}

#[test]
fn field_spec_json_shape() {
    let spec = FieldSpec::canonical(3, 1, 2).unwrap();
    let json = serde_json::to_value(&spec).unwrap();
    assert_eq!(
        json,
        serde_json::json!({"p": 3, "e": 1, "n": 2, "modulus": [2, 2, 1]})
    );
    let back: FieldSpec = serde_json::from_value(json).unwrap();
    assert_eq!(back, spec);
}
