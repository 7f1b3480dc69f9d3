use std::sync::Arc;

use super::confluent::composition;
use super::ctx::{assert_report, at, diagnose_report, fact, point_of, routes_agree, Ctx, Tally};
use super::report::{CheckReport, GridPoint};
use crate::error::{Error, Result};
use crate::exact::{gen_binom, rint, Poly, RatFunc, Rational};
use crate::families::{gauss_poly, FamilySpec, Route};
use crate::symdiff::{pearson_check, FactoredTerm, PearsonForm};

type Abc = (Rational, Rational, Rational);

fn specs(ctx: &Ctx) -> Vec<(Abc, FamilySpec)> {
    let g = ctx.grid;
    g.hypergeometric_abc
        .iter()
        .flat_map(|abc| {
            (0..=g.hypergeometric_l_max).map(move |l| {
                let (a, b, c) = abc.clone();
                (abc.clone(), FamilySpec::hypergeometric(a, b, c, l))
            })
        })
        .collect()
}

fn cps(ctx: &Ctx, spec: &FamilySpec) -> Result<Arc<Vec<Poly>>> {
    ctx.cps(spec, Route::Rodrigues, ctx.grid.hypergeometric_nu_max + 1)
}

fn nus(ctx: &Ctx) -> std::ops::RangeInclusive<i64> {
    0..=ctx.grid.hypergeometric_nu_max as i64
}

fn per_spec(ctx: &Ctx, id: &str, f: impl Fn(&mut Tally, &Abc, &FamilySpec, &[Poly]) -> Result<()>) -> Vec<CheckReport> {
    specs(ctx).into_iter().map(|(abc, s)| assert_report(id, point_of(&s), |t| f(t, &abc, &s, &cps(ctx, &s)?))).collect()
}

/// `x (1 - x)`
fn sigma() -> Poly {
    Poly::from_ints(&[0, 1, -1])
}

pub fn h1(ctx: &Ctx) -> Vec<CheckReport> {
    specs(ctx)
        .into_iter()
        .map(|(_, s)| assert_report("H1", point_of(&s), |t| routes_agree(ctx, t, &s, ctx.grid.hypergeometric_nu_max)))
        .collect()
}

/// `P_{nu+1}` from the four-term recursion; `last` is the index of the
/// final term, `nu - 1` as derived from the PDE in `y`, `nu - 2` as printed.
fn rec1_rhs(ctx: Option<&Ctx>, abc: &Abc, l: &Rational, ps: &[Poly], nu: i64, last: i64) -> Poly {
    let k = |slot: &'static str, v: i64| ctx.map_or(rint(v), |c| c.ki(slot, v));
    let (a, b, c) = abc;
    let n = rint(nu);
    let lin = Poly::linear(
        l + c - &n - k("c0_one", 1),
        -(k("c1_two_l", 2) * l - k("c1_two_nu", 2) * &n + a + b - k("c1_one", 1)),
    );
    let k1 = (k("m_two_l", 2) * l + a + b - k("m_one", 1)) * &n;
    let k2 = &n * (&n - k("last_one", 1)) * k("last_scale", 1);
    &(&(&lin * &ps[nu as usize]) - &(&sigma() * &at(ps, nu - 1)).scale(&k1)) + &(&sigma() * &at(ps, last)).scale(&k2)
}

pub fn h2(ctx: &Ctx) -> Vec<CheckReport> {
    // P_{nu+1} = [l+c-nu-1 - x(2l-2nu+a+b-1)] P_nu
    //            - (2l+a+b-1) x(1-x) nu P_{nu-1} + nu(nu-1) x(1-x) P_{nu-1}
    per_spec(ctx, "H2", |t, abc, s, ps| {
        for nu in nus(ctx) {
            let rhs = rec1_rhs(Some(ctx), abc, &s.l_rat(), ps, nu, nu - 1);
            t.eq_poly(|| format!("nu={nu}"), &ps[nu as usize + 1], &rhs);
        }
        Ok(())
    })
}

pub fn h3(ctx: &Ctx) -> Vec<CheckReport> {
    per_spec(ctx, "H3", |t, (a, b, c), s, ps| {
        let l = s.l_rat();
        let mut skipped = Vec::new();
        for nu in nus(ctx) {
            let n = rint(nu);
            let p = &ps[nu as usize];
            // x(1-x) P'' + [(l-nu)(1-2x) + c - (a+b+1)x] P' + nu(2l-nu+a+b) P = 0
            let lm = &l - &n;
            let tau = Poly::linear(&lm + c, -(ctx.ki("ode_two", 2) * &lm) - (a + b + ctx.ki("ode_one", 1)));
            let eigen = &n * (ctx.ki("ode_two_l", 2) * &l - &n + a + b);
            let res = &(&(&sigma() * &p.nth_derivative(2)) + &(&tau * &p.derivative())) + &p.scale(&eigen);
            t.zero(|| format!("ODE nu={nu}"), &res);
            // P_nu = P_nu(0) F(-nu, B; C; x), B = 2l - nu + a + b, C = l - nu + c
            let big_b = ctx.ki("B_two", 2) * &l - &n + a + b;
            let big_c = &l - ctx.ki("C_nu", 1) * &n + c;
            match gauss_poly(nu as u32, &big_b, &big_c) {
                Err(Error::Degenerate(_)) => skipped.push(nu.to_string()),
                other => t.eq_poly(|| format!("Gauss nu={nu}"), p, &other?.scale(&p.eval(&rint(0)))),
            }
            // P'_nu = -nu (2l + a + b - nu) P_{nu-1}
            let k = ctx.ki("dr_sign", -1) * &n * (ctx.ki("dr_two", 2) * &l + a + b - &n);
            t.eq_poly(|| format!("differential recursion nu={nu}"), &p.derivative(), &at(ps, nu - 1).scale(&k));
            // P_nu(0) = nu! C(l + c - 1, nu)
            let want = fact(nu as u32) * gen_binom(&(&l + c - ctx.ki("value_one", 1)), nu as u32);
            t.eq_rat(|| format!("P_{nu}(0)"), &p.eval(&rint(0)), &want);
        }
        if !skipped.is_empty() {
            t.detail("gauss_skipped_nu", skipped.join(","));
        }
        // x(1-x) w' = [c - 1 - (a+b-1) x] w with w = x^{c-1} (1-x)^{a+b-c}
        let w = FactoredTerm::new(
            Poly::one(),
            vec![(Poly::x(), c - rint(1)), (Poly::from_ints(&[1, -1]), a + b - c)],
            Poly::zero(),
        )?;
        let rhs = RatFunc::from(Poly::linear(c - ctx.ki("pearson_one", 1), -(a + b - ctx.ki("pearson_x_one", 1))));
        t.holds(|| "Pearson equation".into(), pearson_check(&sigma(), &w, &rhs, PearsonForm::WeightDerivative)?);
        Ok(())
    })
}

pub fn h4(ctx: &Ctx) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let m = ctx.grid.composition_l_max;
    for (a, b, c) in &ctx.grid.hypergeometric_abc {
        for l1 in 0..=m {
            for l2 in l1..=m {
                let base = point_of(&FamilySpec::hypergeometric(a.clone(), b.clone(), c.clone(), 0));
                let point = GridPoint { l: None, ..base }.param("l1", l1).param("l2", l2);
                let spec_at = |l: u32| FamilySpec::hypergeometric(a.clone(), b.clone(), c.clone(), l);
                out.push(assert_report("H4", point, |t| {
                    composition(ctx, t, &spec_at, l1, l2, ctx.grid.hypergeometric_nu_max)
                }));
            }
        }
    }
    out
}

pub fn h5(ctx: &Ctx) -> Vec<CheckReport> {
    // P(-y, 1-x, l; a, b, c) = P(y, x, l; a, b, a+b-c+1)
    per_spec(ctx, "H5", |t, (a, b, c), s, ps| {
        let dual_c = a + b - c + ctx.ki("dual_one", 1);
        let dual = FamilySpec::hypergeometric(a.clone(), b.clone(), dual_c, s.l);
        let reflect = Poly::linear(ctx.ki("reflect_one", 1), rint(-1));
        let k = ctx.grid.hypergeometric_nu_max as usize + 2;
        let lhs = ctx.gf(s, k)?.negate_y().compose_x(&reflect)?;
        t.eq_series(|| "GF symmetry".into(), &lhs, &*ctx.gf(&dual, k)?);
        let qs = cps(ctx, &dual)?;
        let base = ctx.ki("sign_base", -1);
        for nu in nus(ctx) {
            let sign = num_traits::pow(base.clone(), nu as usize);
            let lhs = ps[nu as usize].compose(&reflect).scale(&sign);
            t.eq_poly(|| format!("nu={nu}"), &lhs, &qs[nu as usize]);
        }
        Ok(())
    })
}

fn per_nu_diagnose(
    ctx: &Ctx,
    id: &str,
    f: impl Fn(&mut Tally, &Abc, &FamilySpec, &[Poly], i64) -> Result<Option<String>>,
) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (abc, s) in specs(ctx) {
        for nu in 1..=ctx.grid.hypergeometric_nu_max as i64 {
            out.push(diagnose_report(id, point_of(&s).nu(nu as u32), |t| f(t, &abc, &s, &cps(ctx, &s)?, nu)));
        }
    }
    out
}

pub fn h6(ctx: &Ctx) -> Vec<CheckReport> {
    // As printed: P'_nu = nu (nu - a - b - 2) P_{nu-1}
    per_nu_diagnose(ctx, "H6", |t, (a, b, _), _, ps, nu| {
        let n = rint(nu);
        let printed = at(ps, nu - 1).scale(&(&n * (&n - a - b - rint(2))));
        let actual = ps[nu as usize].derivative();
        t.detail("printed", &printed);
        t.detail("actual", &actual);
        let residual = &actual - &printed;
        t.detail("residual", &residual);
        Ok((!residual.is_zero()).then(|| format!("derivative {actual} vs printed {printed}")))
    })
}

pub fn h7(ctx: &Ctx) -> Vec<CheckReport> {
    // As printed: (nu+2l-2) P_nu + nu[(nu-a-b-2)(1-2x) + l+a+b-c - x(2l+a+b-1)] P_{nu-1}
    //             - nu(nu-1)(nu-a-b-3) x(1-x) P_{nu-2} = 0
    per_nu_diagnose(ctx, "H7", |t, (a, b, c), s, ps, nu| {
        let (n, l) = (rint(nu), s.l_rat());
        let k = &n - a - b - rint(2);
        let bracket = Poly::linear(&k + &l + a + b - c, -(rint(2) * &k) - (rint(2) * &l + a + b - rint(1)));
        let residual = &(&ps[nu as usize].scale(&(&n + rint(2) * &l - rint(2)))
            + &(&bracket * &at(ps, nu - 1)).scale(&n))
            - &(&sigma() * &at(ps, nu - 2)).scale(&(&n * (&n - rint(1)) * (&n - a - b - rint(3))));
        t.detail("residual", &residual);
        Ok((!residual.is_zero()).then(|| format!("residual {residual}")))
    })
}

pub fn h8(ctx: &Ctx) -> Vec<CheckReport> {
    // As printed, with nu(nu-1) x(1-x) P_{nu-2} as the last term
    per_nu_diagnose(ctx, "H8", |t, abc, s, ps, nu| {
        let residual = &ps[nu as usize + 1] - &rec1_rhs(None, abc, &s.l_rat(), ps, nu, nu - 2);
        t.detail("residual", &residual);
        Ok((!residual.is_zero()).then(|| format!("residual {residual}")))
    })
}
