//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use slopekit::bracket::{jones, StateSumConfig};
use slopekit::diagram::LinkDiagram;
use slopekit::fixtures::FixtureSet;
use slopekit::fox::{alexander_knot, alexander_link2_with, fox_matrix_knot, fox_matrix_link2, link_quotient, wirtinger};
use slopekit::laurent::{LPoly1, LPoly2};
use slopekit::surgery::{first_homology, slope_after_twist, FramedLink, Slope};
use slopekit::twistfam::{check_cor26, dual_polynomial, family_alexander, twisted_alexander, TwistFamily};
use slopekit::verify::{random_walk, run_checks, Status};

type Verdict = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Verdict {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(s: &str) -> LPoly1 {
    LPoly1::parse_with_vars(s, ['q']).unwrap()
}

fn same_up_to_mirror(a: &LPoly1, b: &LPoly1) -> bool {
    a.equal_up_to_units(b) || a.mirror().equal_up_to_units(b)
}

/// Runs `f` and fails it when it takes longer than `budget`.
fn timed(budget: Duration, f: impl FnOnce() -> Verdict) -> Verdict {
    let start = Instant::now();
    let res = f();
    let took = start.elapsed();
    res?;
    ensure(took <= budget, || format!("took {took:?}, budget {budget:?}"))
}

const ONE_S: Duration = Duration::from_secs(1);

fn alexander_golden(f: &FixtureSet) -> Verdict {
    for (name, want) in [
        ("pretzel_-5_-3_3", "-2*t^-1 + 5 - 2*t"),
        ("9_42", "-1*t^-2 + 2*t^-1 - 1 + 2*t - 1*t^2"),
        ("8_6", "2*t^-2 - 6*t^-1 + 7 - 6*t + 2*t^2"),
    ] {
        let d = f.diagram(name).map_err(|e| e.to_string())?;
        timed(ONE_S, || {
            let got = alexander_knot(&d).map_err(|e| e.to_string())?;
            ensure(got.equal_up_to_units(&want.parse().unwrap()), || format!("{name}: got {got}, want {want}"))
        })?;
    }
    Ok(())
}

fn jones_golden(f: &FixtureSet) -> Verdict {
    for (name, want) in [
        ("9_42", "q^-3 - q^-2 + q^-1 - 1 + q - q^2 + q^3"),
        ("8_6", "q^-7 - 2*q^-6 + 3*q^-5 - 4*q^-4 + 4*q^-3 - 4*q^-2 + 3*q^-1 - 1 + q"),
    ] {
        let d = f.diagram(name).map_err(|e| e.to_string())?;
        timed(Duration::from_secs(5), || {
            let v = jones(&d, &StateSumConfig::default()).map_err(|e| e.to_string())?;
            let got = v.q_form.ok_or("no q-form")?;
            ensure(same_up_to_mirror(&got, &q(want)), || format!("{name}: got {got}, want {want}"))
        })?;
    }
    Ok(())
}

fn jones_distinctness() -> Verdict {
    let k1 = q("q^-7 - 2*q^-6 + 3*q^-5 - 4*q^-4 + 4*q^-3 - 4*q^-2 + 3*q^-1 - 1 + q");
    let big_k1 = q("-q^-15 + q^-14 + q^-11 - q^-8 + q^-7 - 3*q^-6 + 3*q^-5 - 4*q^-4 + 5*q^-3 - 4*q^-2 + 3*q^-1");
    let big_km1 = q("-q^-21 + q^-20 + q^-17 - q^-14 + q^-13 - 2*q^-12 + q^-11 - q^-10 + q^-9 - q^-8 + q^-7 - q^-6 + 2*q^-5 - 3*q^-4 + 4*q^-3 - 3*q^-2 + 2*q^-1");
    let j1 = q("q^-3 - q^-2 + q^-1 - 1 + q - q^2 + q^3");
    let jm1 = q("q^-1 + q^-3 - q^-6 - q^-8 + q^-9 - q^-10 + q^-11");
    timed(ONE_S, || {
        for (a, b) in [(&k1, &big_k1), (&k1, &big_km1), (&big_k1, &big_km1), (&j1, &jm1)] {
            ensure(!same_up_to_mirror(a, b), || format!("{a} and {b} agree"))?;
        }
        Ok(())
    })
}

fn two_routes(f: &FixtureSet) -> Verdict {
    timed(Duration::from_secs(10), || {
        let pairs = f.pairs().map_err(|e| e.to_string())?;
        ensure(!pairs.is_empty(), || "no pairs".into())?;
        for (name, pair) in pairs {
            let pair = pair.with_positive_omega().map_err(|e| e.to_string())?;
            let fam = TwistFamily::from_pair(&pair).map_err(|e| e.to_string())?;
            for n in -3..=3 {
                let a = twisted_alexander(&pair, n).map_err(|e| e.to_string())?;
                let b = family_alexander(&fam, n).map_err(|e| e.to_string())?;
                ensure(a.equal_up_to_units(&b), || format!("{name} n={n}: {a} vs {b}"))?;
            }
        }
        Ok(())
    })
}

fn duality(f: &FixtureSet) -> Verdict {
    timed(ONE_S, || {
        for name in ["family1", "family2"] {
            let fam = f.family(name).map_err(|e| e.to_string())?;
            let report = check_cor26(&fam, -5..=5).map_err(|e| e.to_string())?;
            ensure(report.all_pass() && report.rows.len() == 11, || format!("{name}: {:?}", report.rows))?;
            ensure(dual_polynomial(&fam.delta2).equal_up_to_units(&fam.delta2), || format!("{name} not fixed"))?;
        }
        Ok(())
    })
}

fn homology() -> Verdict {
    timed(ONE_S, || {
        for lk in -5..=5i64 {
            let fl = FramedLink::two_component(lk, Slope::integer(0), Slope::integer(0));
            let h = first_homology(&fl).map_err(|e| e.to_string())?;
            ensure(h.is_empty() == (lk.abs() == 1), || format!("lk={lk}: {h:?}"))?;
        }
        for m in -5..=5 {
            for n in -5..=5 {
                let a = slope_after_twist(Slope::integer(0), n, 1).map_err(|e| e.to_string())?;
                let b = slope_after_twist(Slope::integer(m), n, 1).map_err(|e| e.to_string())?;
                ensure(a == Slope::integer(n) && b == Slope::integer(m + n), || format!("m={m} n={n}"))?;
            }
        }
        Ok(())
    })
}

/// Alexander polynomial for knots and the unordered pair of two-variable
/// polynomials for 2-component links, with the Jones polynomial.
fn walk_key(d: &LinkDiagram) -> Result<(Vec<LPoly2>, Option<LPoly1>, LPoly1), String> {
    let v = jones(d, &StateSumConfig::default()).map_err(|e| e.to_string())?.a_form;
    Ok(match d.component_count() {
        1 => (Vec::new(), Some(alexander_knot(d).map_err(|e| e.to_string())?), v),
        _ => {
            let mut both: Vec<LPoly2> = (0..2)
                .map(|x| alexander_link2_with(d, x).map(|p| p.normalize_units().poly))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            both.sort_by_key(|p| p.to_string());
            (both, None, v)
        }
    })
}

fn invariance(f: &FixtureSet) -> Verdict {
    timed(Duration::from_secs(30), || {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut moves = 0;
        for name in ["3_1", "4_1", "whitehead", "hopf", "trefoil_meridian"] {
            let d = f.diagram(name).map_err(|e| e.to_string())?;
            let before = walk_key(&d)?;
            for e in random_walk(&d, 50, &mut rng) {
                moves += 1;
                ensure(walk_key(&e)? == before, || format!("{name}: changed at {e}"))?;
            }
        }
        ensure(moves >= 200, || format!("only {moves} moves"))?;

        let names: Vec<String> = f.diagram_names().into_iter().chain(f.pair_names()).collect();
        for name in &names {
            let d = f.diagram(name).map_err(|e| e.to_string())?;
            let mu = d.component_count();
            let v1 = jones(&d, &StateSumConfig::default()).map_err(|e| e.to_string())?.value_at_one();
            ensure(v1 == BigInt::from(-2).pow(mu as u32 - 1), || format!("{name}: V(1) = {v1}"))?;
            if d.components().iter().any(|c| c.is_loop) {
                continue;
            }
            let p = wirtinger(&d).map_err(|e| e.to_string())?;
            let m = fox_matrix_knot(&p);
            ensure(m.row_identity_holds(), || format!("{name}: Fox rows"))?;
            let n = d.crossing_count();
            if mu == 1 {
                let a1 = alexander_knot(&d).map_err(|e| e.to_string())?.evaluate_unit(1);
                ensure(a1 == BigInt::from(1) || a1 == BigInt::from(-1), || format!("{name}: Δ(1) = {a1}"))?;
                if n <= 11 {
                    let base = m.minor_det(0, 0);
                    for i in 0..n {
                        for j in 0..n {
                            ensure(m.minor_det(i, j).equal_up_to_units(&base), || format!("{name}: minor {i},{j}"))?;
                        }
                    }
                }
            } else if mu == 2 {
                let m2 = fox_matrix_link2(&p, 0).map_err(|e| e.to_string())?;
                ensure(m2.row_identity_holds(), || format!("{name}: Fox rows in x, y"))?;
                if n <= 11 {
                    let base = link_quotient(&m2, 0, 0).map_err(|e| e.to_string())?;
                    for i in 0..n {
                        for j in 0..n {
                            let qj = link_quotient(&m2, i, j).map_err(|e| e.to_string())?;
                            ensure(qj.equal_up_to_units(&base), || format!("{name}: quotient {i},{j}"))?;
                        }
                    }
                }
            }
        }
        Ok(())
    })
}

fn exclusions(f: &FixtureSet) -> Verdict {
    let listed = run_checks(f, Some("exclusions"));
    ensure(listed.len() == 4 && listed.iter().all(|c| c.status == Status::Excluded), || format!("{listed:?}"))
}

fn main() -> ExitCode {
    let f = FixtureSet::embedded();
    let criteria: [(&str, Box<dyn Fn() -> Verdict>); 8] = [
        ("1 alexander golden values", Box::new(|| alexander_golden(&f))),
        ("2 jones golden values", Box::new(|| jones_golden(&f))),
        ("3 jones distinctness", Box::new(jones_distinctness)),
        ("4 two-route agreement", Box::new(|| two_routes(&f))),
        ("5 duality", Box::new(|| duality(&f))),
        ("6 homology and slopes", Box::new(homology)),
        ("7 invariance", Box::new(|| invariance(&f))),
        ("8 exclusions listed, not verified", Box::new(|| exclusions(&f))),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (name, run) in &criteria {
        let t = Instant::now();
        let res = run();
        let ms = t.elapsed().as_millis();
        match res {
            Ok(()) => println!("PASS  {name} ({ms} ms)"),
            Err(e) => {
                failed += 1;
                println!("FAIL  {name} ({ms} ms): {e}");
            }
        }
    }
    let total = start.elapsed();
    if total > Duration::from_secs(60) {
        failed += 1;
        println!("FAIL  total time {total:?} over 60 s");
    } else {
        println!("PASS  total time {} ms", total.as_millis());
    }
    println!("acceptance: {} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
