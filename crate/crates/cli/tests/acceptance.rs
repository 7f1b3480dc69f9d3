//! Acceptance criteria 1-9, one PASS/FAIL line each.
//!
//! Criteria listed in `KNOWN_RED` print FAIL without failing the target;
//! any other FAIL exits nonzero.

use std::process::{Command, ExitCode};
use std::time::Instant;

use num_traits::Zero;
use rodrigues_core::exact::{factorial, gen_binom, rat, rint};
use rodrigues_core::families::{
    associated_component, classical_limit_drift, cp, cp_all, legendre_norm, Family, FamilySpec,
};
use rodrigues_core::verify::{CheckId, CheckReport, GridConfig, GridPoint, Runner, Status};
use rodrigues_core::{suite_passed, CheckClass, Poly, Rational};

/// The stated special value of the hypergeometric family at `x = 0`
/// disagrees with the polynomials its own definition produces.
const KNOWN_RED: &[u32] = &[2];

type Criterion<'a> = (u32, &'static str, Box<dyn Fn() -> Verdict + 'a>);

struct Verdict {
    ok: bool,
    note: String,
}

fn verdict(ok: bool, note: impl Into<String>) -> Verdict {
    Verdict { ok, note: note.into() }
}

fn fact(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

/// Every (spec, nu_max) table of the default grid.
fn grid_tables(g: &GridConfig) -> Vec<(FamilySpec, u32)> {
    let mut out: Vec<(FamilySpec, u32)> = (0..=g.legendre_l_max).map(|l| (FamilySpec::legendre(l), l)).collect();
    for c in &g.confluent_c {
        out.extend((0..=g.confluent_l_max).map(|l| (FamilySpec::confluent(c.clone(), l), g.confluent_nu_max)));
    }
    for (a, b, c) in &g.hypergeometric_abc {
        out.extend(
            (0..=g.hypergeometric_l_max)
                .map(|l| (FamilySpec::hypergeometric(a.clone(), b.clone(), c.clone(), l), g.hypergeometric_nu_max)),
        );
    }
    for n in &g.rel_hermite_n {
        out.push((FamilySpec::rel_hermite(n.clone()).unwrap(), g.rel_hermite_nu_max));
    }
    for n in &g.pre_laguerre_n {
        out.extend(
            (0..=g.pre_laguerre_l_max)
                .map(|l| (FamilySpec::pre_laguerre(n.clone(), l).unwrap(), g.pre_laguerre_nu_max)),
        );
    }
    out
}

fn route_equivalence(g: &GridConfig) -> Verdict {
    let mut instances = 0;
    let mut bad = Vec::new();
    for (spec, nu_max) in grid_tables(g) {
        let tables: Vec<_> = spec.family().routes().iter().map(|r| (r, cp_all(&spec, nu_max, *r))).collect();
        instances += nu_max as usize + 1;
        let first = &tables[0].1;
        if first.is_err() || tables.iter().any(|(_, t)| t != first) {
            bad.push(format!("{} l={} {:?}", spec.family(), spec.l, spec.named_params()));
        }
    }
    verdict(bad.is_empty(), format!("{instances} polynomial instances, {} disagreeing tables {bad:?}", bad.len()))
}

fn anchored_values(g: &GridConfig) -> Verdict {
    let zero = rint(0);
    let mut failures: Vec<String> = Vec::new();
    let mut clause = |name: &str, ok: bool| {
        if !ok {
            failures.push(name.to_string());
        }
    };

    let mut first = true;
    for n in &g.pre_laguerre_n {
        for l in 0..=g.pre_laguerre_l_max {
            let spec = FamilySpec::pre_laguerre(n.clone(), l).unwrap();
            let ps = cp_all(&spec, g.pre_laguerre_nu_max, spec.family().routes()[0]).unwrap();
            let lr = rint(l as i64);
            let p1 = Poly::new(vec![lr.clone(), &lr / n - rint(1)]);
            first &= ps[1] == p1;
            for (nu, p) in ps.iter().enumerate() {
                let nu = nu as u32;
                let at0 = if nu <= l { fact(nu) * gen_binom(&lr, nu) } else { zero.clone() };
                first &= p.eval(&zero) == at0;
                let sign = if nu.is_multiple_of(2) { rint(1) } else { rint(-1) };
                first &= p.eval(&-n) == fact(nu) * sign * gen_binom(&-n, nu);
            }
        }
    }
    clause("pre-Laguerre P_1, P(0), P(-N)", first);

    let mut confluent = true;
    for c in &g.confluent_c {
        for l in 0..=g.confluent_l_max {
            let spec = FamilySpec::confluent(c.clone(), l);
            let alpha = c - rint(1) + rint(l as i64);
            for (nu, p) in cp_all(&spec, g.confluent_nu_max, spec.family().routes()[0]).unwrap().iter().enumerate() {
                confluent &= p.eval(&zero) == fact(nu as u32) * gen_binom(&alpha, nu as u32);
            }
        }
    }
    clause("confluent P(0)", confluent);

    let mut legendre = true;
    for l in 0..=g.legendre_l_max {
        let ps = cp_all(&FamilySpec::legendre(l), l, spec_route(Family::Legendre)).unwrap();
        for (k, p) in ps.iter().enumerate() {
            let expected = if k % 2 == 1 {
                zero.clone()
            } else {
                let nu = (k / 2) as u32;
                let sign = if nu.is_multiple_of(2) { rint(1) } else { rint(-1) };
                sign * fact(2 * nu) * gen_binom(&rint(l as i64), nu)
            };
            legendre &= p.eval(&zero) == expected;
        }
    }
    clause("Legendre P(0)", legendre);

    // printed: nu! C(l + C - 1, nu) with C = l - nu + c
    let mut printed = true;
    let mut witness = None;
    for (a, b, c) in &g.hypergeometric_abc {
        for l in 0..=g.hypergeometric_l_max {
            let spec = FamilySpec::hypergeometric(a.clone(), b.clone(), c.clone(), l);
            let ps = cp_all(&spec, g.hypergeometric_nu_max, spec_route(Family::Hypergeometric)).unwrap();
            for (nu, p) in ps.iter().enumerate() {
                let (nu, lr) = (nu as u32, rint(l as i64));
                let big_c = &lr - rint(nu as i64) + c;
                let expected = fact(nu) * gen_binom(&(&lr + &big_c - rint(1)), nu);
                let got = p.eval(&zero);
                if got != expected {
                    printed = false;
                    witness.get_or_insert(format!("(a,b,c,l,nu)=({a},{b},{c},{l},{nu}): {got} vs {expected}"));
                }
            }
        }
    }
    clause(
        &format!("hypergeometric P(0) with C = l - nu + c, first mismatch {}", witness.unwrap_or_default()),
        printed,
    );

    verdict(failures.is_empty(), if failures.is_empty() { "all clauses hold".into() } else { failures.join("; ") })
}

fn spec_route(f: Family) -> rodrigues_core::Route {
    f.routes()[0]
}

fn ids_pass(reports: &[CheckReport], ids: &[&str]) -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;
    for id in ids {
        let mine: Vec<_> = reports.iter().filter(|r| r.id == *id).collect();
        let failed = mine.iter().filter(|r| r.status == Status::Fail).count();
        ok &= !mine.is_empty() && failed == 0;
        notes.push(format!("{id} {}/{}", mine.len() - failed, mine.len()));
    }
    verdict(ok, notes.join(", "))
}

fn normalization_chain() -> Verdict {
    let mut count = 0;
    let mut ok = true;
    for l in 0..=10 {
        for m in 0..=l {
            let lhs = cp(&FamilySpec::legendre(l), l - m, spec_route(Family::Legendre)).unwrap();
            let rhs = associated_component(l, m).unwrap().scale(&legendre_norm(l, m).unwrap());
            ok &= lhs == rhs;
            count += 1;
        }
    }
    let n = |l, m| legendre_norm(l, m).unwrap();
    ok &= n(2, 0) == rint(8) && n(2, 1) == rat(4, 3) && n(1, 1) == rint(-1);
    verdict(ok, format!("{count} (l, m) pairs; N_2^0 = {}, N_2^1 = {}, N_1^1 = {}", n(2, 0), n(2, 1), n(1, 1)))
}

fn classical_limits(g: &GridConfig, reports: &[CheckReport]) -> Verdict {
    let exact = classical_limit_drift(Family::RelHermite, 2, &[rint(10), rint(100)]).unwrap();
    let mut ok = exact.iter().all(|(n, dev)| *dev == rint(2) / n);
    let mut worst = (rint(1), rint(0));
    for family in [Family::RelHermite, Family::PreLaguerre] {
        for n in 1..=6 {
            let drift = classical_limit_drift(family, n, &g.limit_n).unwrap();
            for pair in drift.windows(2) {
                if pair[0].1.is_zero() {
                    ok &= pair[1].1.is_zero();
                    continue;
                }
                let ratio = &pair[1].1 / &pair[0].1;
                ok &= ratio >= rat(1, 20) && ratio <= rat(1, 5);
                worst = (worst.0.clone().min(ratio.clone()), worst.1.clone().max(ratio));
            }
        }
    }
    let suite = ids_pass(reports, &["R3", "P7"]);
    ok &= suite.ok;
    let devs: Vec<String> = exact.iter().map(|(n, d)| format!("N={n}: {d}")).collect();
    verdict(
        ok,
        format!("H_2 deviation {}; decay ratios in [{}, {}]; {}", devs.join(", "), worst.0, worst.1, suite.note),
    )
}

fn find<'a>(reports: &'a [CheckReport], id: &str, point: &GridPoint) -> Option<&'a CheckReport> {
    reports.iter().find(|r| r.id == id && &r.point == point)
}

fn diagnostics(reports: &[CheckReport]) -> Verdict {
    let at = |nu| GridPoint::new("hypergeometric").param("a", "0").param("b", "0").param("c", "1/2").l(2).nu(nu);
    let h6 = find(reports, "H6", &at(1));
    let h6_ok = h6.is_some_and(|r| {
        r.status == Status::Residual
            && r.details.get("printed").map(String::as_str) == Some("-1")
            && r.details.get("actual").map(String::as_str) == Some("-3")
    });
    let h7 = find(reports, "H7", &at(1));
    let h7_residual = h7.and_then(|r| r.details.get("residual")).cloned().unwrap_or_default();
    let h7_ok =
        h7.is_some_and(|r| r.status == Status::Residual) && h7_residual == Poly::from_ints(&[5, -10]).to_string();
    let g2 = reports.iter().find(|r| r.id == "G2" && r.point.l == Some(0));
    let g2_approx: f64 = g2.and_then(|r| r.details.get("residual_approx")).and_then(|s| s.parse().ok()).unwrap_or(0.0);
    let g2_ok = g2.is_some_and(|r| r.status == Status::Residual) && (g2_approx - 0.102).abs() < 5e-4;
    let never_fail = reports.iter().filter(|r| r.class == CheckClass::Diagnose).all(|r| r.status != Status::Fail)
        && suite_passed(reports);
    verdict(
        h6_ok && h7_ok && g2_ok && never_fail,
        format!(
            "H6 printed/actual {:?}/{:?}; H7 residual {h7_residual}; G2 residual ~ {g2_approx:.6}; run passes: {never_fail}",
            h6.and_then(|r| r.details.get("printed")),
            h6.and_then(|r| r.details.get("actual")),
        ),
    )
}

fn mutation_soundness(runner: &Runner) -> Verdict {
    let outcomes = runner.mutation_audit(&CheckId::all());
    let missed: Vec<String> = outcomes.iter().filter(|o| !o.caught).map(|o| format!("{}:{}", o.id, o.slot)).collect();
    let checks = outcomes.iter().map(|o| o.id).collect::<std::collections::BTreeSet<_>>().len();
    let asserts = CheckId::all().iter().filter(|c| c.class == CheckClass::Assert).count();
    verdict(
        missed.is_empty() && checks == asserts,
        format!("{} mutations over {checks}/{asserts} assert checks, missed {missed:?}", outcomes.len()),
    )
}

fn determinism() -> Verdict {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_rodrigues")).args(["check", "--suite", "all"]).output().expect("binary runs")
    };
    let (a, b) = (run(), run());
    let ok = a.status.success() && b.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();
    verdict(ok, format!("{} bytes, exit codes {:?}/{:?}", a.stdout.len(), a.status.code(), b.status.code()))
}

fn main() -> ExitCode {
    let grid = GridConfig::default();
    let runner = Runner::new(grid.clone()).expect("default grid is valid");
    let started = Instant::now();
    let reports = runner.run(&CheckId::all());
    eprintln!("suite: {} reports in {:.1?}", reports.len(), started.elapsed());

    let criteria: Vec<Criterion> = vec![
        (1, "route equivalence", Box::new(|| route_equivalence(&grid))),
        (2, "anchored exact values", Box::new(|| anchored_values(&grid))),
        (3, "ODE residuals and hypergeometric matches", Box::new(|| ids_pass(&reports, &["C2", "C5", "H3"]))),
        (4, "normalization chain", Box::new(normalization_chain)),
        (
            5,
            "composition and addition laws",
            Box::new(|| ids_pass(&reports, &["C6", "C7", "C8", "L4", "L5", "H4", "P3", "P4"])),
        ),
        (6, "classical limits", Box::new(|| classical_limits(&grid, &reports))),
        (7, "diagnostics reproduced", Box::new(|| diagnostics(&reports))),
        (8, "mutation soundness", Box::new(|| mutation_soundness(&runner))),
        (9, "determinism", Box::new(determinism)),
    ];

    let mut unexpected = Vec::new();
    for (n, name, f) in &criteria {
        let started = Instant::now();
        let v = f();
        let mark = if v.ok { "PASS" } else { "FAIL" };
        let known = if !v.ok && KNOWN_RED.contains(n) { " [known]" } else { "" };
        println!("criterion {n} {mark}{known}: {name} ({}) [{:.1?}]", v.note, started.elapsed());
        if !v.ok && !KNOWN_RED.contains(n) {
            unexpected.push(*n);
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
