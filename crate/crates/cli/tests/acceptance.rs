//! Acceptance gate: one test per criterion, each printing a pass line with
//! its runtime (run with `--nocapture` to see them).

use eids_cli::corpus;
use eids_cli::render::{kv_tokens, parse_machine_report, report_all, token_get};
use eids_core::eids::{slice, EidsDescriptor};
use eids_core::groebner::{colength, Colength, Ideal, PolyMatrix};
use eids_core::invariants::{
    milnor_hypersurface, milnor_icis, milnor_orlik_oracle, multiplicity_m0, nu_vanishing,
    nu_with_md, polar_multiplicity_md, IcisPresentation, InvariantName, Provenance,
};
use eids_core::limits::ResourceLimits;
use eids_core::obstruction::{chi_bar_generic_link, eu_dispatch, eu_n_ge_7, DispatchOptions, Regime};
use eids_core::poly::{
    parse_poly, quasihomogeneous_weights, LinearForm, MonomialOrder, VarContext,
};
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

fn criterion(n: u32, title: &str, budget: Duration, body: impl FnOnce()) {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    match result {
        Ok(()) => {
            println!("criterion {n} ({title}): PASS ({:.1}s)", elapsed.as_secs_f64());
            assert!(
                elapsed <= budget,
                "criterion {n} exceeded its {:.0}s budget: took {:.1}s",
                budget.as_secs_f64(),
                elapsed.as_secs_f64()
            );
        }
        Err(panic) => {
            println!("criterion {n} ({title}): FAIL ({:.1}s)", elapsed.as_secs_f64());
            resume_unwind(panic);
        }
    }
}

fn ctx(names: &[&str]) -> VarContext {
    VarContext::new(names.iter().copied()).unwrap()
}

fn descriptor(names: &[&str], rows: &[&[&str]], t: usize) -> EidsDescriptor {
    let c = ctx(names);
    let rows: Vec<Vec<_>> = rows
        .iter()
        .map(|r| r.iter().map(|e| parse_poly(&c, e).unwrap()).collect())
        .collect();
    EidsDescriptor::new(&c, PolyMatrix::new(&c, rows).unwrap(), t).unwrap()
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[test]
fn criterion_1_generic_link_table() {
    criterion(1, "generic link characteristic table", Duration::from_secs(1), || {
        for n in 1..=6usize {
            for m in 1..=n {
                for t in 1..=m {
                    let sign = if t % 2 == 0 { 1 } else { -1 };
                    let expected = sign * binomial(m as i64 - 1, t as i64 - 1);
                    assert_eq!(
                        chi_bar_generic_link(m, n, t).unwrap(),
                        expected,
                        "({m},{n},{t})"
                    );
                    // The arguments canonicalize, so the transpose agrees.
                    assert_eq!(
                        chi_bar_generic_link(n, m, t).unwrap(),
                        expected,
                        "transposed ({n},{m},{t})"
                    );
                }
            }
        }
        assert_eq!(chi_bar_generic_link(2, 3, 2).unwrap(), 1);
    });
}

#[test]
fn criterion_2_twisted_surface_pipeline() {
    criterion(2, "polar multiplicity of the twisted surface", Duration::from_secs(60), || {
        let x = descriptor(
            &["x", "y", "z", "w"],
            &[&["z", "y+w", "x"], &["w", "x", "y"]],
            2,
        );
        let p = LinearForm::coordinate(4, 3);
        let limits = ResourceLimits::default();
        assert_eq!(polar_multiplicity_md(&x, &p, 0, &limits).unwrap(), 3);

        let sliced = slice(&x, &p).unwrap();
        assert_eq!(nu_vanishing(&sliced, 0, &ResourceLimits::default()).unwrap(), 2);

        // The vanishing characteristic drops out of the two numbers above,
        // and for a smoothable surface it is the Milnor number.
        let (nu, md) = nu_with_md(&x, 0, &ResourceLimits::default()).unwrap();
        assert_eq!((nu, md), (1, 3));
    });
}

#[test]
fn criterion_3_smoothable_surface_obstruction() {
    criterion(3, "smoothable surface obstruction", Duration::from_secs(60), || {
        let x = descriptor(
            &["x", "y", "z", "w"],
            &[&["x", "y", "z"], &["y", "z", "w"]],
            2,
        );
        let (nu, md) = nu_with_md(&x, 0, &ResourceLimits::default()).unwrap();
        assert_eq!((nu, md), (1, 3));
        let r = eu_dispatch(
            &x,
            0,
            &[],
            &DispatchOptions::default(),
            &ResourceLimits::default(),
        )
        .unwrap();
        assert_eq!((r.value, r.regime), (-1, Regime::Smoothable));
    });
}

#[test]
fn criterion_4_corank1_routes_agree() {
    criterion(4, "corank-1 routes agree", Duration::from_secs(120), || {
        let x = descriptor(
            &["x1", "x2", "x3", "x4", "x5", "y1", "y2", "y3"],
            &[&["x1", "x2", "x3"], &["x4", "x5", "x1+y1^2-y2^2+y3^2"]],
            2,
        );
        let fast = eu_dispatch(
            &x,
            0,
            &[],
            &DispatchOptions::default(),
            &ResourceLimits::default(),
        )
        .unwrap();
        assert_eq!((fast.value, fast.regime), (2, Regime::Corank1FastPath));

        let long = eu_dispatch(
            &x,
            0,
            &[],
            &DispatchOptions { skip_fast_path: true },
            &ResourceLimits::default(),
        )
        .unwrap();
        assert_eq!((long.value, long.regime), (2, Regime::NGe7Type232));
        let mu = long
            .inputs
            .iter()
            .find(|r| r.name == InvariantName::Mu)
            .expect("the long route reports the singular-set Milnor number");
        assert_eq!(mu.value, 1);
        assert!(matches!(mu.provenance, Provenance::Computed { .. }));
        assert_eq!(fast.value, long.value, "the two routes must agree");
    });
}

#[test]
fn criterion_5_sign_cancellation() {
    criterion(5, "high-dimension cancellation", Duration::from_secs(10), || {
        for n in 7..=12usize {
            let chi_sign = if (n - 2) % 2 == 0 { 1 } else { -1 };
            for mu in 0..=10u64 {
                let chi = chi_sign * mu as i64;
                assert_eq!(eu_n_ge_7(n, mu, chi).unwrap(), 2, "n={n}, mu={mu}");
            }
        }
    });
}

#[test]
fn criterion_6_milnor_oracle() {
    criterion(6, "hypersurface Milnor oracle", Duration::from_secs(120), || {
        let limits = ResourceLimits::default();
        let compare = |names: &[&str], text: &str, label: &str| -> u64 {
            let c = ctx(names);
            let g = parse_poly(&c, text).unwrap();
            let (g, _) = g.restrict_to_support();
            let (weights, _) = quasihomogeneous_weights(&g)
                .unwrap_or_else(|| panic!("{label}: `{text}` should be quasi-homogeneous"));
            let oracle = milnor_orlik_oracle(&weights)
                .unwrap_or_else(|e| panic!("{label}: oracle failed: {e}"));
            let direct = milnor_hypersurface(&g, &limits)
                .unwrap_or_else(|e| panic!("{label}: direct computation failed: {e}"));
            assert_eq!(direct, oracle, "{label}: `{text}`");
            direct
        };

        for k in 1..=8u32 {
            let mu = compare(&["x", "y"], &format!("x^{}+y^2", k + 1), "A-series");
            assert_eq!(mu, k as u64);
        }
        for k in 4..=8u32 {
            let mu = compare(&["x", "y"], &format!("x*y^2+x^{}", k - 1), "D-series");
            assert_eq!(mu, k as u64);
        }
        assert_eq!(compare(&["x", "y"], "x^3+y^4", "E6"), 6);
        assert_eq!(compare(&["x", "y"], "x^3+x*y^3", "E7"), 7);
        assert_eq!(compare(&["x", "y"], "x^3+y^5", "E8"), 8);

        // Every quasi-homogeneous matrix entry of the bundled tables at
        // minimal parameters.
        let mut compared = 0u32;
        for row in corpus::builtin_rows() {
            if row.flag == Some(corpus::RowFlag::ParseExempt) {
                continue;
            }
            let binding = &row.instantiations()[0];
            let c = ctx(&row.vars.iter().map(String::as_str).collect::<Vec<_>>());
            for template in row.matrix.iter().flatten() {
                let text = eids_cli::document::instantiate(template, binding).unwrap();
                let g = parse_poly(&c, &text).unwrap();
                let (g, _) = g.restrict_to_support();
                let Some((weights, _)) = quasihomogeneous_weights(&g) else {
                    continue;
                };
                let oracle = milnor_orlik_oracle(&weights)
                    .unwrap_or_else(|e| panic!("row {} `{text}`: oracle failed: {e}", row.id));
                let direct = milnor_hypersurface(&g, &limits)
                    .unwrap_or_else(|e| panic!("row {} `{text}`: direct failed: {e}", row.id));
                assert_eq!(direct, oracle, "row {} entry `{text}`", row.id);
                compared += 1;
            }
        }
        assert!(compared >= 20, "only {compared} quasi-homogeneous entries compared");
    });
}

#[test]
fn criterion_7_bundled_corpus_run() {
    criterion(7, "bundled corpus run", Duration::from_secs(1200), || {
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_eids"))
            .args(["corpus-run", "--machine", "--seed", "0"])
            .output()
            .expect("binary launches");
        let stdout = String::from_utf8(out.stdout).unwrap();
        assert_eq!(out.status.code(), Some(0), "{stdout}");
        let fields = parse_machine_report(&stdout).unwrap();

        let entries: Vec<Vec<(String, String)>> =
            report_all(&fields, "entry").into_iter().map(kv_tokens).collect();
        assert!(!entries.is_empty());

        let verdict_of = |e: &[(String, String)]| token_get(e, "verdict").unwrap().to_string();
        assert!(
            entries.iter().all(|e| verdict_of(e) != "MISMATCH"),
            "unflagged mismatch present:\n{stdout}"
        );

        let mut good_ids: Vec<&str> = entries
            .iter()
            .filter(|e| {
                let v = verdict_of(e);
                v == "MATCH" || v == "SUPPLIED-MATCH"
            })
            .map(|e| token_get(e, "id").unwrap())
            .collect();
        good_ids.sort_unstable();
        good_ids.dedup();
        assert!(
            good_ids.len() >= 8,
            "only {} distinct rows reached MATCH/SUPPLIED-MATCH:\n{stdout}",
            good_ids.len()
        );

        // Supplied matches consume the bundled value, with its provenance.
        let supplied_ids: Vec<&str> = entries
            .iter()
            .filter(|e| verdict_of(e) == "SUPPLIED-MATCH")
            .map(|e| token_get(e, "id").unwrap())
            .collect();
        let corpus_inputs: Vec<Vec<(String, String)>> = report_all(&fields, "entry-input")
            .into_iter()
            .map(kv_tokens)
            .filter(|t| token_get(t, "prov") == Some("corpus"))
            .collect();
        assert!(
            corpus_inputs
                .iter()
                .any(|t| supplied_ids.contains(&token_get(t, "id").unwrap())),
            "no SUPPLIED-MATCH entry consumed a bundled value:\n{stdout}"
        );

        let suspect = entries
            .iter()
            .find(|e| token_get(e, "id") == Some("t1r03"))
            .expect("suspect row appears in the report");
        assert_eq!(token_get(suspect, "verdict"), Some("SKIPPED(suspect)"));
        assert!(token_get(suspect, "note").is_some());
    });
}

#[test]
fn criterion_8_property_spot_checks() {
    criterion(8, "property spot-checks", Duration::from_secs(300), || {
        // Ring axioms and the Leibniz rule.
        let c3 = ctx(&["x", "y", "z"]);
        let a = parse_poly(&c3, "x^2-3*y+z").unwrap();
        let b = parse_poly(&c3, "y^3+x*z-2").unwrap();
        let c = parse_poly(&c3, "z^2+x+y").unwrap();
        assert_eq!(a.add(&b), b.add(&a));
        assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        assert_eq!(a.add(&a.neg()), eids_core::poly::Poly::zero(&c3));
        for i in 0..3 {
            let left = a.mul(&b).partial_derivative(i);
            let right = a.mul(&b.partial_derivative(i)).add(&b.mul(&a.partial_derivative(i)));
            assert_eq!(left, right, "Leibniz in variable {i}");
        }

        // Staircase colength vs direct enumeration on monomial ideals.
        let mut state = 0x5DEECE66Du64;
        let mut next = move |bound: u64| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state % bound
        };
        let names = ["x", "y", "z", "w"];
        for case in 0..12 {
            let nvars = 1 + (case % 4);
            let c = ctx(&names[..nvars]);
            let bounds: Vec<u32> = (0..nvars).map(|_| 1 + next(6) as u32).collect();
            let mut gens: Vec<String> = bounds
                .iter()
                .enumerate()
                .map(|(i, d)| format!("{}^{d}", names[i]))
                .collect();
            for _ in 0..next(4) {
                let exps: Vec<u32> =
                    bounds.iter().map(|&d| next(d as u64 + 1) as u32).collect();
                if exps.iter().sum::<u32>() == 0 || exps.iter().sum::<u32>() > 6 {
                    continue;
                }
                let mono = exps
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| format!("{}^{e}", names[i]))
                    .collect::<Vec<_>>()
                    .join("*");
                gens.push(mono);
            }
            let gen_exps: Vec<Vec<u32>> = gens
                .iter()
                .map(|g| {
                    let p = parse_poly(&c, g).unwrap();
                    p.terms()[0].0.exponents().to_vec()
                })
                .collect();
            // Direct count of standard monomials inside the bounding box.
            let mut count = 0u64;
            let mut point = vec![0u32; nvars];
            'points: loop {
                let standard = !gen_exps
                    .iter()
                    .any(|g| g.iter().zip(&point).all(|(ge, pe)| ge <= pe));
                if standard {
                    count += 1;
                }
                for i in 0..nvars {
                    point[i] += 1;
                    if point[i] < bounds[i] {
                        continue 'points;
                    }
                    point[i] = 0;
                }
                break;
            }
            let ideal = Ideal::new(
                &c,
                gens.iter().map(|g| parse_poly(&c, g).unwrap()).collect(),
            );
            for order in [MonomialOrder::LocalNegDegRevLex, MonomialOrder::GlobalDegRevLex] {
                assert_eq!(
                    colength(&ideal, order, &ResourceLimits::default()).unwrap(),
                    Colength::Finite(count),
                    "case {case}: {gens:?}"
                );
            }
        }

        // Seed stability of the seeded invariants.
        let c2 = ctx(&["x", "y"]);
        let cusp = Ideal::new(&c2, vec![parse_poly(&c2, "y^2-x^3").unwrap()]);
        assert_eq!(
            multiplicity_m0(&cusp, 1, 0, &ResourceLimits::default()).unwrap(),
            multiplicity_m0(&cusp, 1, 7, &ResourceLimits::default()).unwrap(),
        );
        let twisted = descriptor(
            &["x", "y", "z", "w"],
            &[&["z", "y+w", "x"], &["w", "x", "y"]],
            2,
        );
        assert_eq!(
            nu_with_md(&twisted, 0, &ResourceLimits::default()).unwrap(),
            nu_with_md(&twisted, 7, &ResourceLimits::default()).unwrap(),
        );
        let c3b = ctx(&["x", "y", "z"]);
        let icis = IcisPresentation::new(
            &c3b,
            vec![parse_poly(&c3b, "x^2+y^2+z^2").unwrap()],
            1,
        )
        .unwrap();
        assert_eq!(
            milnor_icis(&icis, 0, &ResourceLimits::default()).unwrap(),
            milnor_icis(&icis, 7, &ResourceLimits::default()).unwrap(),
        );

        // Smooth-point normalization in every regime.
        let limits = ResourceLimits::default();
        let cases: Vec<(EidsDescriptor, Regime)> = vec![
            (descriptor(&["x", "y"], &[&["x"]], 1), Regime::Smoothable),
            (
                descriptor(
                    &["x", "y", "z", "w", "v", "u"],
                    &[&["1", "0", "0"], &["0", "x", "y"]],
                    2,
                ),
                Regime::NEquals6,
            ),
            (
                descriptor(
                    &["x", "y", "z", "w", "v", "u", "q"],
                    &[&["1", "0", "0"], &["0", "x", "y"]],
                    2,
                ),
                Regime::NGe7Type232,
            ),
            (
                descriptor(
                    &["a", "b", "c", "d", "e", "f", "g", "h", "i"],
                    &[&["1", "0", "0"], &["0", "a", "b"], &["0", "c", "d"]],
                    2,
                ),
                Regime::GeneralThreeStrata,
            ),
        ];
        for (x, regime) in cases {
            let r = eu_dispatch(&x, 0, &[], &DispatchOptions::default(), &limits).unwrap();
            assert_eq!((r.value, r.regime), (1, regime));
        }
    });
}
