use std::sync::Arc;

use super::ctx::{assert_report, at, cst, fact, point_of, routes_agree, yseries, Ctx, Tally};
use super::report::CheckReport;
use crate::error::{Error, Result};
use crate::exact::{binomial, gen_binom, rint, Poly, RatFunc, Rational};
use crate::families::{kummer_poly, FamilySpec, Route};
use crate::genfun::SeriesY;
use crate::symdiff::{pearson_check, FactoredTerm, PearsonForm};

fn specs(ctx: &Ctx) -> Vec<FamilySpec> {
    let g = ctx.grid;
    g.confluent_c
        .iter()
        .flat_map(|c| (0..=g.confluent_l_max).map(move |l| FamilySpec::confluent(c.clone(), l)))
        .collect()
}

fn c_of(spec: &FamilySpec) -> Rational {
    spec.named_params()[0].1.clone()
}

/// Rodrigues table through `nu_max + 1`.
fn cps(ctx: &Ctx, spec: &FamilySpec) -> Result<Arc<Vec<Poly>>> {
    ctx.cps(spec, Route::Rodrigues, ctx.grid.confluent_nu_max + 1)
}

fn order(ctx: &Ctx) -> usize {
    ctx.grid.confluent_nu_max as usize + 2
}

fn per_spec(ctx: &Ctx, id: &str, f: impl Fn(&mut Tally, &FamilySpec, &[Poly]) -> Result<()>) -> Vec<CheckReport> {
    specs(ctx).into_iter().map(|s| assert_report(id, point_of(&s), |t| f(t, &s, &cps(ctx, &s)?))).collect()
}

fn nus(ctx: &Ctx) -> std::ops::RangeInclusive<i64> {
    0..=ctx.grid.confluent_nu_max as i64
}

pub fn c1(ctx: &Ctx) -> Vec<CheckReport> {
    specs(ctx)
        .into_iter()
        .map(|s| assert_report("C1", point_of(&s), |t| routes_agree(ctx, t, &s, ctx.grid.confluent_nu_max)))
        .collect()
}

pub fn c2(ctx: &Ctx) -> Vec<CheckReport> {
    per_spec(ctx, "C2", |t, s, ps| {
        let (c, l) = (c_of(s), s.l_rat());
        for nu in nus(ctx) {
            let n = rint(nu);
            // x P'' + (l - nu + c - x) P' + nu P = 0
            let p = &ps[nu as usize];
            let tau = Poly::linear(&l - ctx.ki("ode_nu", 1) * &n + &c, -ctx.ki("ode_x", 1));
            let res = &(&(&Poly::monomial(ctx.ki("ode_lead", 1), 1) * &p.nth_derivative(2))
                + &(&tau * &p.derivative()))
                + &p.scale(&(ctx.ki("ode_eigen", 1) * &n));
            t.zero(|| format!("ODE nu={nu}"), &res);
            // P_nu(0) = nu! C(c - 1 + l, nu)
            let want = fact(nu as u32) * gen_binom(&(&c - ctx.ki("value_one", 1) + &l), nu as u32);
            t.eq_rat(|| format!("P_{nu}(0)"), &p.eval(&rint(0)), &want);
        }
        // x w' = (c - 1 - x) w with w = x^{c-1} e^{-x}
        let w = FactoredTerm::new(Poly::one(), vec![(Poly::x(), &c - rint(1))], Poly::from_ints(&[0, -1]))?;
        let rhs = RatFunc::from(Poly::linear(&c - ctx.ki("pearson_one", 1), -ctx.ki("pearson_x", 1)));
        t.holds(|| "Pearson equation".into(), pearson_check(&Poly::x(), &w, &rhs, PearsonForm::WeightDerivative)?);
        Ok(())
    })
}

pub fn c3(ctx: &Ctx) -> Vec<CheckReport> {
    per_spec(ctx, "C3", |t, s, ps| {
        let (c, l) = (c_of(s), s.l_rat());
        for nu in nus(ctx) {
            // (c - 1 + l - nu - x) P_nu = nu x P_{nu-1} + P_{nu+1}
            let n = rint(nu);
            let lin = Poly::linear(&c - ctx.ki("one", 1) + &l - ctx.ki("nu", 1) * &n, -ctx.ki("x", 1));
            let lhs = &lin * &ps[nu as usize];
            let rhs = &Poly::monomial(ctx.ki("mid", 1) * &n, 1) * &at(ps, nu - 1);
            let rhs = &rhs + &ps[nu as usize + 1].scale(&ctx.ki("next", 1));
            t.eq_poly(|| format!("nu={nu}"), &lhs, &rhs);
        }
        // (1 + y) dP/dy = [c - 1 + l - x (1 + y)] P
        let k = order(ctx);
        let g = ctx.gf(s, k)?;
        let one_plus_y = yseries(vec![cst(rint(1)), cst(ctx.ki("pde_y", 1))], k);
        let bracket = yseries(
            vec![Poly::linear(&c - ctx.ki("pde_one", 1) + &l, rint(-1)), Poly::monomial(-ctx.ki("pde_xy", 1), 1)],
            k,
        );
        t.eq_series(|| "PDE in y".into(), &(&one_plus_y * &g.diff_y()), &(&bracket * &g));
        Ok(())
    })
}

pub fn c4(ctx: &Ctx) -> Vec<CheckReport> {
    per_spec(ctx, "C4", |t, s, ps| {
        for nu in nus(ctx) {
            // P'_nu = -nu P_{nu-1}
            let k = ctx.ki("sign", -1) * rint(nu);
            t.eq_poly(|| format!("nu={nu}"), &ps[nu as usize].derivative(), &at(ps, nu - 1).scale(&k));
        }
        // dP/dx = -y P
        let k = order(ctx);
        let g = ctx.gf(s, k)?;
        let minus_y = yseries(vec![Poly::zero(), cst(ctx.ki("pde_sign", -1))], k);
        t.eq_series(|| "PDE in x".into(), &g.diff_x(), &(&minus_y * &g));
        Ok(())
    })
}

pub fn c5(ctx: &Ctx) -> Vec<CheckReport> {
    per_spec(ctx, "C5", |t, s, ps| {
        let (c, l) = (c_of(s), s.l_rat());
        let mut skipped = Vec::new();
        for nu in nus(ctx) {
            // P_nu = P_nu(0) M(-nu, l - nu + c, x)
            let big_c = ctx.ki("C_l", 1) * &l - ctx.ki("C_nu", 1) * rint(nu) + ctx.ki("C_c", 1) * &c;
            match kummer_poly(nu as u32, &big_c) {
                Err(Error::Degenerate(_)) => skipped.push(nu.to_string()),
                other => {
                    let p = &ps[nu as usize];
                    t.eq_poly(|| format!("nu={nu}"), p, &other?.scale(&p.eval(&rint(0))));
                }
            }
        }
        if !skipped.is_empty() {
            t.detail("skipped_nu", skipped.join(","));
        }
        Ok(())
    })
}

/// `sum_{nu1} weight(nu1) C(nu, nu1) a_{nu1} b_{nu-nu1}`
fn binomial_convolution(a: &[Poly], b: &[Poly], nu: u32, scale: &Rational) -> Poly {
    (0..=nu).fold(Poly::zero(), |acc, n1| {
        let w = Rational::from_integer(binomial(nu, n1)) * scale;
        &acc + &(&a[n1 as usize] * &b[(nu - n1) as usize]).scale(&w)
    })
}

fn composition_pairs(ctx: &Ctx) -> Vec<(u32, u32)> {
    let m = ctx.grid.composition_l_max;
    (0..=m).flat_map(|a| (a..=m).map(move |b| (a, b))).collect()
}

/// Composition laws shared with the hypergeometric family:
/// `P(l1) P(l2) = P(l1 + l2 - l) P(l)` at GF and coefficient level.
pub fn composition(
    ctx: &Ctx,
    t: &mut Tally,
    spec_at: &dyn Fn(u32) -> FamilySpec,
    l1: u32,
    l2: u32,
    nu_max: u32,
) -> Result<()> {
    let k = nu_max as usize + 2;
    let table = |l: u32| ctx.cps(&spec_at(l), Route::Rodrigues, nu_max + 1);
    let lhs_gf = &*ctx.gf(&spec_at(l1), k)? * &*ctx.gf(&spec_at(l2), k)?;
    let (p1, p2) = (table(l1)?, table(l2)?);
    let scale = ctx.ki("binom_scale", 1);
    for l in 0..=l1 + l2 {
        let shifted = rint((l1 + l2) as i64) - ctx.ki("l_coeff", 1) * rint(l as i64);
        let Some(m) = shifted.to_integer().try_into().ok().filter(|_| shifted.is_integer()) else {
            t.holds(|| format!("index {shifted} is not a degree"), false);
            continue;
        };
        let rhs_gf = &*ctx.gf(&spec_at(m), k)? * &*ctx.gf(&spec_at(l), k)?;
        t.eq_series(|| format!("GF l={l}"), &lhs_gf, &rhs_gf);
        let (q1, q2) = (table(m)?, table(l)?);
        for nu in 0..=nu_max {
            let lhs = binomial_convolution(&p1, &p2, nu, &scale);
            let rhs = binomial_convolution(&q1, &q2, nu, &rint(1));
            t.eq_poly(|| format!("l={l} nu={nu}"), &lhs, &rhs);
        }
    }
    Ok(())
}

pub fn c6(ctx: &Ctx) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for c in &ctx.grid.confluent_c {
        for (l1, l2) in composition_pairs(ctx) {
            let point = point_of(&FamilySpec::confluent(c.clone(), 0)).param("l1", l1).param("l2", l2);
            let point = super::report::GridPoint { l: None, ..point };
            let spec_at = |l: u32| FamilySpec::confluent(c.clone(), l);
            out.push(assert_report("C6", point, |t| composition(ctx, t, &spec_at, l1, l2, ctx.grid.confluent_nu_max)));
        }
    }
    out
}

/// `P_lambda(x + x2)` for every `lambda`.
fn shifted(ps: &[Poly], x2: &Rational) -> Vec<Poly> {
    ps.iter().map(|p| p.shift(x2)).collect()
}

fn values(ps: &[Poly], x2: &Rational) -> Vec<Poly> {
    ps.iter().map(|p| Poly::constant(p.eval(x2))).collect()
}

fn one_plus_y_pow(alpha: &Rational, k: usize) -> Result<SeriesY> {
    SeriesY::binpow(&SeriesY::y(k), alpha, k)
}

pub fn c7(ctx: &Ctx) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for s in specs(ctx) {
        for x2 in &ctx.grid.addition_x2 {
            out.push(assert_report("C7", point_of(&s).param("x2", x2), |t| {
                let (c, l) = (c_of(&s), s.l_rat());
                let ps = cps(ctx, &s)?;
                let alpha = &c - ctx.ki("one", 1) + &l;
                // (1+y)^{c-1+l} P(y, x + x2, l) = P(y, x, l) P(y, x2, l)
                let k = order(ctx);
                let g = ctx.gf(&s, k)?;
                let lhs = &one_plus_y_pow(&alpha, k)? * &g.shift_x(x2)?;
                t.eq_series(|| "GF addition law".into(), &lhs, &(&*g * &g.eval_x(x2)?));
                // sum C(c-1+l, nu-lambda) nu!/lambda! P_lambda(x1 + x2)
                //   = sum C(nu, nu1) P_{nu1}(x1) P_{nu-nu1}(x2)
                let (sh, vals) = (shifted(&ps, x2), values(&ps, x2));
                for nu in 0..=ctx.grid.confluent_nu_max {
                    let lhs = (0..=nu).fold(Poly::zero(), |acc, lam| {
                        let w = gen_binom(&alpha, nu - lam) * fact(nu) / fact(lam) * ctx.ki("lhs_scale", 1);
                        &acc + &sh[lam as usize].scale(&w)
                    });
                    t.eq_poly(|| format!("nu={nu}"), &lhs, &binomial_convolution(&ps, &vals, nu, &rint(1)));
                }
                Ok(())
            }));
        }
    }
    out
}

/// `sum_{nu1 + nu2 <= nu} C(alpha, nu - nu1 - nu2) nu!/(nu1! nu2!) a_{nu1} b_{nu2}`
fn trinomial(a: &[Poly], b: &[Poly], alpha: &Rational, nu: u32) -> Poly {
    let mut acc = Poly::zero();
    for n1 in 0..=nu {
        for n2 in 0..=nu - n1 {
            let w = gen_binom(alpha, nu - n1 - n2) * fact(nu) / (fact(n1) * fact(n2));
            acc = &acc + &(&a[n1 as usize] * &b[n2 as usize]).scale(&w);
        }
    }
    acc
}

pub fn c8(ctx: &Ctx) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let k = order(ctx);
    let nu_max = ctx.grid.confluent_nu_max;
    for s in specs(ctx) {
        for x2 in &ctx.grid.addition_x2 {
            let point = point_of(&s).param("law", "inversion").param("x2", x2);
            out.push(assert_report("C8", point, |t| {
                // P(y, x1 + x2, l) = (1+y)^{1-c-l} P(y, x1, l) P(y, x2, l)
                let (c, l) = (c_of(&s), s.l_rat());
                let alpha = ctx.ki("inv_one", 1) - &c - &l;
                let g = ctx.gf(&s, k)?;
                let rhs = &one_plus_y_pow(&alpha, k)? * &(&*g * &g.eval_x(x2)?);
                t.eq_series(|| "GF inversion".into(), &g.shift_x(x2)?, &rhs);
                let ps = cps(ctx, &s)?;
                let (sh, vals) = (shifted(&ps, x2), values(&ps, x2));
                for nu in 0..=nu_max {
                    t.eq_poly(|| format!("nu={nu}"), &sh[nu as usize], &trinomial(&ps, &vals, &alpha, nu));
                }
                Ok(())
            }));
        }
    }
    for c in &ctx.grid.confluent_c {
        for (l1, l2) in composition_pairs(ctx) {
            for x2 in &ctx.grid.addition_x2 {
                let base = point_of(&FamilySpec::confluent(c.clone(), 0));
                let point = super::report::GridPoint { l: None, ..base }
                    .param("law", "full")
                    .param("l1", l1)
                    .param("l2", l2)
                    .param("x2", x2);
                out.push(assert_report("C8", point, |t| {
                    // P(y, x1 + x2, l1 + l2) = (1+y)^{1-c} P(y, x1, l1) P(y, x2, l2)
                    let (s1, s2, s12) = (
                        FamilySpec::confluent(c.clone(), l1),
                        FamilySpec::confluent(c.clone(), l2),
                        FamilySpec::confluent(c.clone(), l1 + l2),
                    );
                    let alpha = ctx.ki("full_one", 1) - c;
                    let rhs = &one_plus_y_pow(&alpha, k)? * &(&*ctx.gf(&s1, k)? * &ctx.gf(&s2, k)?.eval_x(x2)?);
                    t.eq_series(|| "GF full addition".into(), &ctx.gf(&s12, k)?.shift_x(x2)?, &rhs);
                    let (p1, p2, p12) = (cps(ctx, &s1)?, cps(ctx, &s2)?, cps(ctx, &s12)?);
                    let (sh, vals) = (shifted(&p12, x2), values(&p2, x2));
                    for nu in 0..=nu_max {
                        t.eq_poly(|| format!("nu={nu}"), &sh[nu as usize], &trinomial(&p1, &vals, &alpha, nu));
                    }
                    Ok(())
                }));
            }
        }
    }
    out
}
