mod common;

use sepcode::{
    averaging_attack, coalition_feasible_set, correlate, embed, make_context, threshold, Coalition,
    Code, EmbeddingContext, FeasibleSet,
};

fn pipeline(ctx: &EmbeddingContext, code: &Code, members: &[usize]) -> (Vec<f64>, FeasibleSet) {
    let copies: Vec<Vec<f64>> = members
        .iter()
        .map(|&i| embed(ctx, &code.words()[i]).unwrap())
        .collect();
    let y = averaging_attack(&copies).unwrap();
    let stats = correlate(ctx, &y).unwrap();
    let r = threshold(&stats, 1e-6).unwrap();
    (stats.0, r)
}

#[test]
fn pair_correlates_to_halves() {
    let code = common::weight1();
    let ctx = make_context(16, 3, 0.1, 1).unwrap();
    let (t, r) = pipeline(&ctx, &code, &[1, 2]);
    for (got, want) in t.iter().zip([0.5, 0.5, 0.0]) {
        assert!((got - want).abs() <= 1e-9, "{t:?}");
    }
    assert_eq!(r, FeasibleSet::from_pattern("**0").unwrap());
}

#[test]
fn embedding_projects_back_to_bits() {
    let mut rng = common::rng(61);
    for round in 0..20 {
        let n = 3 + round % 10;
        let code = common::random_code(&mut rng, n, 6, 2);
        let alpha = [0.1, 1.0, 3.5][round % 3];
        let ctx = make_context(n + round % 7, n, alpha, round as u64).unwrap();
        assert!(ctx.orthonormality_error() < 1e-9);
        for w in code.words() {
            let y = embed(&ctx, w).unwrap();
            for (u, &b) in ctx.basis().iter().zip(w.symbols()) {
                let proj: f64 = y
                    .iter()
                    .zip(ctx.host())
                    .zip(u)
                    .map(|((y, x), u)| (y - x) / alpha * u)
                    .sum();
                assert!((proj - f64::from(b)).abs() <= 1e-9);
            }
        }
    }
}

#[test]
fn signal_feasible_set_matches_combinatorial_one() {
    let mut rng = common::rng(67);
    for round in 0..12 {
        let n = 4 + round % 6;
        let code = common::random_code(&mut rng, n, 4 + round % 6, 2);
        let ctx = make_context(2 * n, n, 0.1, 100 + round as u64).unwrap();
        for s in common::subsets_up_to(code.size(), 5) {
            let (t, r) = pipeline(&ctx, &code, &s);
            let want =
                coalition_feasible_set(&code, &Coalition::new(&code, s.clone()).unwrap()).unwrap();
            assert_eq!(r, want, "{code:?} {s:?}");
            // each statistic sits on a multiple of 1/|S|
            let k = s.len() as f64;
            for v in t {
                assert!(((v * k).round() - v * k).abs() / k <= 1e-6);
            }
        }
    }
}

#[test]
fn runs_are_bitwise_reproducible() {
    let code = common::random_code(&mut common::rng(71), 10, 12, 2);
    let a = make_context(24, 10, 0.25, 9).unwrap();
    let b = make_context(24, 10, 0.25, 9).unwrap();
    assert_eq!(a, b);
    let (ta, ra) = pipeline(&a, &code, &[0, 3, 7]);
    let (tb, rb) = pipeline(&b, &code, &[0, 3, 7]);
    assert_eq!(ra, rb);
    let bits = |v: &[f64]| v.iter().map(|x| x.to_bits()).collect::<Vec<_>>();
    assert_eq!(bits(&ta), bits(&tb));
}
