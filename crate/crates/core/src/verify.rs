//! Golden-value checks over the fixture set.
//!
//! Every check has an id `tag.name`, a time budget, and reports what it
//! expected and what it got. Exclusions are listed but not run.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bracket::{jones, StateSumConfig};
use crate::diagram::{LinkDiagram, MoveSpec};
use crate::fixtures::FixtureSet;
use crate::fox::{
    alexander_knot, alexander_link2_with, fox_matrix_knot, fox_matrix_link2, link_quotient, wirtinger,
    AlexanderMatrix,
};
use crate::laurent::{LPoly, LPoly1, LPoly2};
use crate::surgery::{first_homology, slope_after_twist, FramedLink, Slope};
use crate::twistfam::{check_cor26, dual_polynomial, family_alexander, twisted_alexander};

pub const TAGS: [&str; 8] = ["alex", "jones", "distinct", "tworoute", "duality", "homology", "invariance", "exclusions"];

/// Seed for the random Reidemeister walks.
pub const MOVE_SEED: u64 = 0x5107e;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Excluded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Excluded => "EXCLUDED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub got: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl CheckResult {
    pub fn tag(&self) -> &str {
        self.id.split('.').next().unwrap_or("")
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\texpected: {}\tgot: {}\t{}ms",
            self.id,
            self.status,
            self.expected,
            self.got,
            self.elapsed.as_millis()
        )
    }
}

/// What a check body reports: whether it held, and the two sides.
struct Outcome {
    ok: bool,
    expected: String,
    got: String,
}

fn outcome(ok: bool, expected: impl ToString, got: impl ToString) -> Outcome {
    Outcome { ok, expected: expected.to_string(), got: got.to_string() }
}

/// A sweep passes when nothing in `bad` went wrong.
fn sweep<T: fmt::Debug>(bad: &[T], expected: impl ToString, what: &str) -> Outcome {
    let expected = expected.to_string();
    let got = if bad.is_empty() { expected.clone() } else { format!("{what} {bad:?}") };
    Outcome { ok: bad.is_empty(), expected, got }
}

type Body = fn(&FixtureSet) -> Result<Outcome, String>;

struct Check {
    id: &'static str,
    budget_ms: u64,
    body: Option<Body>,
    note: &'static str,
}

const fn run(id: &'static str, budget_ms: u64, body: Body) -> Check {
    Check { id, budget_ms, body: Some(body), note: "" }
}

const fn excluded(id: &'static str, note: &'static str) -> Check {
    Check { id, budget_ms: 0, body: None, note }
}

const CHECKS: &[Check] = &[
    run("alex.pretzel_-5_-3_3", 1000, |f| alex_golden(f, "pretzel_-5_-3_3", "family1_formula", 0)),
    run("alex.9_42", 1000, |f| alex_golden(f, "9_42", "family1_formula", 1)),
    run("alex.8_6", 1000, |f| alex_golden(f, "8_6", "family2_formula", 1)),
    run("alex.family1_formula", 1000, |f| family_formula(f, "family1", "family1_formula")),
    run("alex.family2_formula", 1000, |f| family_formula(f, "family2", "family2_formula")),
    run("jones.9_42", 5000, |f| jones_golden(f, "9_42", "jones_9_42")),
    run("jones.8_6", 5000, |f| jones_golden(f, "8_6", "jones_8_6")),
    run("distinct.family1", 1000, |f| jones_distinct(f, &["jones_9_42", "jones_family1_m1"])),
    run("distinct.family2", 1000, |f| {
        jones_distinct(f, &["jones_8_6", "jones_family2_dual_1", "jones_family2_dual_m1"])
    }),
    run("tworoute.pairs", 10_000, two_route),
    run("duality.family1", 1000, |f| duality(f, "family1")),
    run("duality.family2", 1000, |f| duality(f, "family2")),
    run("duality.symmetric_fixed", 1000, symmetric_fixed),
    run("homology.lk_sweep", 1000, |_| Ok(lk_sweep())),
    run("homology.slope_twist", 1000, |_| slope_twist()),
    run("invariance.moves", 20_000, random_moves),
    run("invariance.delta_at_one", 2000, delta_at_one),
    run("invariance.jones_at_one", 3000, jones_at_one),
    run("invariance.fox_rows", 2000, fox_rows),
    run("invariance.deletion", 3000, deletion),
    excluded("exclusions.hyperbolicity", "hyperbolic structures are not computed"),
    excluded("exclusions.census", "census identification is not attempted"),
    excluded("exclusions.seifert_surgery", "Seifert fibered surgeries are not recognized"),
    excluded("exclusions.jsj", "JSJ decompositions are not computed"),
];

/// Ids of every check, in report order.
pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

fn selected(id: &str, only: Option<&str>) -> bool {
    match only {
        None => true,
        Some(o) => id == o || id.split('.').next() == Some(o),
    }
}

/// Runs the checks whose tag or full id equals `only` (all when `None`).
pub fn run_checks(fixtures: &FixtureSet, only: Option<&str>) -> Vec<CheckResult> {
    CHECKS.iter().filter(|c| selected(c.id, only)).map(|c| run_one(fixtures, c)).collect()
}

fn run_one(fixtures: &FixtureSet, c: &Check) -> CheckResult {
    let budget = Duration::from_millis(c.budget_ms);
    let Some(body) = c.body else {
        return CheckResult {
            id: c.id.into(),
            status: Status::Excluded,
            expected: "not verified".into(),
            got: c.note.into(),
            elapsed: Duration::ZERO,
            budget,
        };
    };
    let start = Instant::now();
    let res = body(fixtures);
    let elapsed = start.elapsed();
    let (status, expected, mut got) = match res {
        Ok(o) => (if o.ok { Status::Pass } else { Status::Fail }, o.expected, o.got),
        Err(e) => (Status::Fail, "no error".into(), format!("error: {e}")),
    };
    let status = if status == Status::Pass && elapsed > budget {
        got = format!("{got} (over budget of {}ms)", c.budget_ms);
        Status::Fail
    } else {
        status
    };
    CheckResult { id: c.id.into(), status, expected, got, elapsed, budget }
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

fn units_eq<const N: usize>(a: &LPoly<N>, b: &LPoly<N>) -> bool {
    a.equal_up_to_units(b)
}

/// Value of a `t u` formula fixture with `u = t^n`.
fn formula_at(f: &FixtureSet, formula: &str, n: i64) -> Result<LPoly1, String> {
    let p: LPoly2 = f.polynomial(formula).map_err(err)?;
    Ok(p.specialize(1, n))
}

fn alex_golden(f: &FixtureSet, diagram: &str, formula: &str, n: i64) -> Result<Outcome, String> {
    let expected = formula_at(f, formula, n)?;
    let got = alexander_knot(&f.diagram(diagram).map_err(err)?).map_err(err)?;
    Ok(outcome(units_eq(&expected, &got), expected, got))
}

fn family_formula(f: &FixtureSet, family: &str, formula: &str) -> Result<Outcome, String> {
    let fam = f.family(family).map_err(err)?;
    let mut bad = Vec::new();
    for n in -5..=5 {
        if !units_eq(&family_alexander(&fam, n).map_err(err)?, &formula_at(f, formula, n)?) {
            bad.push(n);
        }
    }
    Ok(sweep(&bad, "agreement for n in -5..=5", "mismatches at"))
}

fn jones_golden(f: &FixtureSet, diagram: &str, poly: &str) -> Result<Outcome, String> {
    let expected: LPoly1 = f.polynomial(poly).map_err(err)?;
    let v = jones(&f.diagram(diagram).map_err(err)?, &StateSumConfig::default()).map_err(err)?;
    let ok = v.q_form.as_ref().is_some_and(|q| same_jones_class(q, &expected));
    Ok(outcome(ok, expected, v))
}

/// Equal up to units and `q ↦ q⁻¹`.
pub fn same_jones_class(a: &LPoly1, b: &LPoly1) -> bool {
    units_eq(a, b) || units_eq(&a.mirror(), b)
}

fn jones_distinct(f: &FixtureSet, names: &[&str]) -> Result<Outcome, String> {
    let polys: Vec<LPoly1> = names.iter().map(|n| f.polynomial(n)).collect::<Result<_, _>>().map_err(err)?;
    let mut equal = Vec::new();
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            if same_jones_class(&polys[i], &polys[j]) {
                equal.push(format!("{}={}", names[i], names[j]));
            }
        }
    }
    Ok(outcome(equal.is_empty(), "pairwise distinct", if equal.is_empty() { "pairwise distinct".into() } else { equal.join(", ") }))
}

fn two_route(f: &FixtureSet) -> Result<Outcome, String> {
    let pairs = f.pairs().map_err(err)?;
    let mut checked = 0;
    let mut bad = Vec::new();
    for (name, pair) in &pairs {
        let pair = pair.with_positive_omega().map_err(err)?;
        let fam = crate::twistfam::TwistFamily::from_pair(&pair).map_err(err)?;
        let ns: Vec<i64> = (-3..=3).collect();
        let rows = crate::par_map(&ns, |&n| -> Result<bool, String> {
            let a = twisted_alexander(&pair, n).map_err(err)?;
            let b = family_alexander(&fam, n).map_err(err)?;
            Ok(units_eq(&a, &b))
        });
        for (n, ok) in ns.iter().zip(rows) {
            checked += 1;
            if !ok? {
                bad.push(format!("{name}@{n}"));
            }
        }
    }
    Ok(sweep(&bad, format!("{checked} agreements"), "mismatches at"))
}

fn duality(f: &FixtureSet, family: &str) -> Result<Outcome, String> {
    let fam = f.family(family).map_err(err)?;
    let report = check_cor26(&fam, -5..=5).map_err(err)?;
    let bad: Vec<i64> = report.rows.iter().filter(|r| !r.pass).map(|r| r.n).collect();
    debug_assert_eq!(bad.is_empty(), report.all_pass());
    Ok(sweep(&bad, "n and dual -n agree for n in -5..=5", "mismatches at"))
}

fn symmetric_fixed(f: &FixtureSet) -> Result<Outcome, String> {
    let mut bad = Vec::new();
    for name in ["family1", "family2"] {
        let p = f.family(name).map_err(err)?.delta2;
        if dual_polynomial(&p) != p {
            bad.push(name);
        }
    }
    Ok(sweep(&bad, "family1, family2 fixed", "not fixed:"))
}

fn lk_sweep() -> Outcome {
    let mut bad = Vec::new();
    for lk in -5..=5i64 {
        let fl = FramedLink::two_component(lk, Slope::integer(0), Slope::integer(0));
        let trivial = first_homology(&fl).map(|h| h.is_empty()).unwrap_or(false);
        if trivial != (lk.abs() == 1) {
            bad.push(lk);
        }
    }
    sweep(&bad, "trivial exactly at lk = ±1", "wrong at lk")
}

fn slope_twist() -> Result<Outcome, String> {
    let mut bad = Vec::new();
    for m in -5..=5i64 {
        for n in -5..=5i64 {
            let from_zero = slope_after_twist(Slope::integer(0), n, 1).map_err(err)?;
            let from_m = slope_after_twist(Slope::integer(m), n, 1).map_err(err)?;
            if from_zero != Slope::integer(n) || from_m != Slope::integer(m + n) {
                bad.push((m, n));
            }
        }
    }
    Ok(sweep(&bad, "0 -> n and m -> m+n", "wrong at (m, n)"))
}

/// Invariants compared along a Reidemeister walk. Component order is not
/// intrinsic, so the two-variable polynomial is kept together with its swap.
#[derive(Debug, PartialEq, Eq)]
struct WalkInvariants {
    alexander: Vec<String>,
    jones: LPoly1,
}

fn walk_invariants(d: &LinkDiagram) -> Result<WalkInvariants, String> {
    let jones = jones(d, &StateSumConfig::default()).map_err(err)?.a_form;
    let alexander = match d.component_count() {
        1 => vec![alexander_knot(d).map_err(err)?.to_string()],
        2 => {
            let p = alexander_link2_with(d, 0).map_err(err)?;
            let mut both = vec![p.normalize_units().poly.to_string(), p.swap_vars().normalize_units().poly.to_string()];
            both.sort();
            both
        }
        _ => Vec::new(),
    };
    Ok(WalkInvariants { alexander, jones })
}

/// Walk length per starting diagram.
pub const WALK_STEPS: usize = 60;
/// Above this size only moves that do not add crossings are chosen.
const WALK_CAP: usize = 12;

/// Applies `steps` random legal moves, returning the diagrams visited.
pub fn random_walk(start: &LinkDiagram, steps: usize, rng: &mut ChaCha8Rng) -> Vec<LinkDiagram> {
    let mut d = start.clone();
    let mut out = Vec::with_capacity(steps);
    for _ in 0..steps {
        let mut moves = d.legal_moves();
        if d.crossing_count() >= WALK_CAP {
            let shrinking: Vec<MoveSpec> = moves.iter().filter(|m| m.crossing_delta() <= 0).cloned().collect();
            if !shrinking.is_empty() {
                moves = shrinking;
            }
        }
        let Some(m) = moves.choose(rng) else { break };
        d = d.apply_move(m).expect("listed moves are legal");
        out.push(d.clone());
    }
    out
}

fn random_moves(f: &FixtureSet) -> Result<Outcome, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(MOVE_SEED);
    let mut total = 0;
    let mut bad = Vec::new();
    for name in ["3_1", "4_1", "whitehead", "trefoil_meridian"] {
        let start = f.diagram(name).map_err(err)?;
        let before = walk_invariants(&start)?;
        let walk = random_walk(&start, WALK_STEPS, &mut rng);
        let after = crate::par_map(&walk, walk_invariants);
        for (i, inv) in after.into_iter().enumerate() {
            total += 1;
            if inv? != before {
                bad.push(format!("{name}#{}", i + 1));
            }
        }
    }
    if total < 200 {
        return Ok(outcome(false, ">= 200 moves", format!("{total} moves")));
    }
    Ok(sweep(&bad, format!("invariants unchanged over {total} moves"), "changed at"))
}

fn all_diagrams(f: &FixtureSet) -> Result<Vec<(String, LinkDiagram)>, String> {
    f.diagram_names()
        .into_iter()
        .chain(f.pair_names())
        .map(|n| f.diagram(&n).map(|d| (n, d)).map_err(err))
        .collect()
}

fn has_loops(d: &LinkDiagram) -> bool {
    d.components().iter().any(|c| c.is_loop)
}

fn delta_at_one(f: &FixtureSet) -> Result<Outcome, String> {
    let mut bad = Vec::new();
    let mut count = 0;
    for (name, d) in all_diagrams(f)? {
        if d.component_count() != 1 || has_loops(&d) {
            continue;
        }
        count += 1;
        let v = alexander_knot(&d).map_err(err)?.evaluate_unit(1);
        if v != BigInt::from(1) && v != BigInt::from(-1) {
            bad.push(format!("{name}={v}"));
        }
    }
    Ok(sweep(&bad, format!("±1 on {count} knots"), "other values"))
}

fn jones_at_one(f: &FixtureSet) -> Result<Outcome, String> {
    let mut bad = Vec::new();
    let diagrams = all_diagrams(f)?;
    let values = crate::par_map(&diagrams, |(_, d)| jones(d, &StateSumConfig::default()).map(|v| v.value_at_one()));
    for ((name, d), v) in diagrams.iter().zip(values) {
        let v = v.map_err(err)?;
        let expected = BigInt::from(-2).pow(d.component_count() as u32 - 1);
        if v != expected {
            bad.push(format!("{name}={v}"));
        }
    }
    Ok(sweep(&bad, "(-2)^(components-1)", "other values"))
}

fn fox_matrices(d: &LinkDiagram) -> Result<(Option<AlexanderMatrix<1>>, Option<AlexanderMatrix<2>>), String> {
    let p = wirtinger(d).map_err(err)?;
    Ok(match d.component_count() {
        1 => (Some(fox_matrix_knot(&p)), None),
        2 => (Some(fox_matrix_knot(&p)), Some(fox_matrix_link2(&p, 0).map_err(err)?)),
        _ => (Some(fox_matrix_knot(&p)), None),
    })
}

fn fox_rows(f: &FixtureSet) -> Result<Outcome, String> {
    let mut bad = Vec::new();
    let mut count = 0;
    for (name, d) in all_diagrams(f)? {
        if has_loops(&d) {
            continue;
        }
        let (m1, m2) = fox_matrices(&d)?;
        count += m1.is_some() as usize + m2.is_some() as usize;
        if m1.is_some_and(|m| !m.row_identity_holds()) || m2.is_some_and(|m| !m.row_identity_holds()) {
            bad.push(name);
        }
    }
    Ok(sweep(&bad, format!("identity on {count} matrices"), "fails on"))
}

/// Largest diagram whose every minor is compared.
const DELETION_MAX: usize = 11;

fn deletion(f: &FixtureSet) -> Result<Outcome, String> {
    let mut bad = Vec::new();
    let mut count = 0;
    for (name, d) in all_diagrams(f)? {
        if has_loops(&d) || d.crossing_count() > DELETION_MAX {
            continue;
        }
        let (m1, m2) = fox_matrices(&d)?;
        let n = d.crossing_count();
        let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        let ok = match (d.component_count(), m1, m2) {
            (1, Some(m), _) => {
                let base = m.minor_det(0, 0);
                crate::par_map(&cells, |&(i, j)| units_eq(&m.minor_det(i, j), &base)).into_iter().all(|b| b)
            }
            (2, _, Some(m)) => {
                let base = link_quotient(&m, 0, 0).map_err(err)?;
                crate::par_map(&cells, |&(i, j)| link_quotient(&m, i, j).is_ok_and(|q| units_eq(&q, &base)))
                    .into_iter()
                    .all(|b| b)
            }
            _ => continue,
        };
        count += 1;
        if !ok {
            bad.push(name);
        }
    }
    Ok(sweep(&bad, format!("all minors agree on {count} diagrams"), "differ on"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_tagged_and_unique() {
        let ids = check_ids();
        for id in &ids {
            assert!(TAGS.contains(&id.split('.').next().unwrap()), "{id}");
        }
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
    }

    #[test]
    fn filtering() {
        let f = FixtureSet::embedded();
        let r = run_checks(&f, Some("alex"));
        assert_eq!(r.len(), 5);
        assert!(r.iter().all(|c| c.tag() == "alex" && c.status == Status::Pass), "{r:?}");
        assert_eq!(run_checks(&f, Some("jones.8_6")).len(), 1);
        assert!(run_checks(&f, Some("nothing")).is_empty());
        assert!(run_checks(&f, Some("exclusions")).iter().all(|c| c.status == Status::Excluded));
    }

    #[test]
    fn walks_are_reproducible() {
        let start = crate::diagram::parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]").unwrap();
        let a = random_walk(&start, 10, &mut ChaCha8Rng::seed_from_u64(1));
        let b = random_walk(&start, 10, &mut ChaCha8Rng::seed_from_u64(1));
        assert_eq!(a, b);
        assert_eq!(a.len(), 10);
    }
}
