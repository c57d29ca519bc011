mod common;

use sepcode::{
    desc_cap_bound, forbidden_type_scan, is_fpc, is_sc, is_ssc, is_ssc_naive, shortened_sc_check,
    Code, Verdict,
};

fn check_witness(code: &Code, t: usize, v: &Verdict) {
    assert_eq!(v.holds(), v.witness().is_none());
    if let Some(w) = v.witness() {
        assert!(
            common::witness_is_valid(code, t, w),
            "bad witness {w:?} for {code:?}"
        );
    }
}

#[test]
fn verdicts_match_brute_force_definitions() {
    let mut rng = common::rng(3);
    for round in 0..300 {
        let n = 1 + round % 4;
        let q = 2 + (round % 2) as u32;
        let m = 1 + round % 8;
        let code = common::random_code(&mut rng, n, m, q);
        let fpc = is_fpc(&code, 2).unwrap();
        let sc = is_sc(&code, 2).unwrap();
        let ssc = is_ssc(&code, 2).unwrap();
        let naive = is_ssc_naive(&code, 2).unwrap();
        assert_eq!(fpc.holds(), common::oracle_fpc(&code, 2), "{code:?}");
        assert_eq!(sc.holds(), common::oracle_sc(&code, 2), "{code:?}");
        assert_eq!(ssc.holds(), common::oracle_ssc(&code, 2), "{code:?}");
        assert_eq!(naive.holds(), ssc.holds(), "{code:?}");
        for v in [&fpc, &sc, &ssc, &naive] {
            check_witness(&code, 2, v);
        }
    }
}

#[test]
fn strength_three_matches_brute_force() {
    let mut rng = common::rng(5);
    for round in 0..80 {
        let n = 2 + round % 3;
        let code = common::random_code(&mut rng, n, 3 + round % 6, 2 + (round % 2) as u32);
        let ssc = is_ssc(&code, 3).unwrap();
        assert_eq!(ssc.holds(), common::oracle_ssc(&code, 3), "{code:?}");
        assert_eq!(is_ssc_naive(&code, 3).unwrap().holds(), ssc.holds());
        assert_eq!(
            is_sc(&code, 3).unwrap().holds(),
            common::oracle_sc(&code, 3)
        );
        assert_eq!(
            is_fpc(&code, 3).unwrap().holds(),
            common::oracle_fpc(&code, 3)
        );
        check_witness(&code, 3, &ssc);
    }
}

#[test]
fn length_three_characterizations() {
    let mut rng = common::rng(17);
    let mut forbidden_seen = 0;
    for round in 0..400 {
        let q = 2 + (round % 3) as u32;
        let code = common::random_code(&mut rng, 3, 2 + round % 10, q);
        let sc = is_sc(&code, 2).unwrap();
        let short = shortened_sc_check(&code).unwrap();
        assert_eq!(short.holds(), sc.holds(), "{code:?}");
        check_witness(&code, 2, &short);
        let ssc = is_ssc(&code, 2).unwrap();
        if sc.holds() {
            let scan = forbidden_type_scan(&code).unwrap();
            assert_eq!(scan.holds(), ssc.holds(), "{code:?}");
            check_witness(&code, 2, &scan);
            forbidden_seen += usize::from(!scan.holds());
        }
        if desc_cap_bound(&code).unwrap() <= 3 {
            assert!(ssc.holds(), "{code:?}");
        }
    }
    assert!(
        forbidden_seen > 0,
        "sample never exercised a forbidden configuration"
    );
}

#[test]
fn witnesses_are_deterministic_across_thread_counts() {
    let mut rng = common::rng(23);
    let codes: Vec<Code> = (0..40)
        .map(|i| common::random_code(&mut rng, 3, 6 + i % 6, 3))
        .collect();
    let run = || -> Vec<(Verdict, Verdict)> {
        codes
            .iter()
            .map(|c| (is_fpc(c, 2).unwrap(), is_ssc(c, 2).unwrap()))
            .collect()
    };
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(run);
    let many = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap()
        .install(run);
    assert_eq!(single, many);
}
