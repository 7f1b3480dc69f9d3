use super::ctx::{assert_report, at, cst, diagnose_report, fact, int_of, point_of, routes_agree, yseries, Ctx};
use super::report::CheckReport;
use crate::error::Result;
use crate::exact::{binomial, double_fact, factorial, rat, rint, Poly, Rational};
use crate::families::{classical_legendre, legendre_lift_spec, legendre_norm, FamilySpec, Route};
use crate::genfun::SeriesY;
use crate::symdiff::rodrigues_cp;

fn specs(ctx: &Ctx) -> Vec<FamilySpec> {
    (0..=ctx.grid.legendre_l_max).map(FamilySpec::legendre).collect()
}

fn cps(ctx: &Ctx, l: u32) -> Result<std::sync::Arc<Vec<Poly>>> {
    ctx.cps(&FamilySpec::legendre(l), Route::Rodrigues, l)
}

fn classical(ctx: &Ctx, l: u32) -> Result<std::sync::Arc<Poly>> {
    ctx.cache.memo(format!("legendre-classical|{l}"), || classical_legendre(l))
}

fn per_l(ctx: &Ctx, id: &str, f: impl Fn(&mut super::ctx::Tally, u32) -> Result<()>) -> Vec<CheckReport> {
    specs(ctx).into_iter().map(|s| assert_report(id, point_of(&s), |t| f(t, s.l))).collect()
}

pub fn l1(ctx: &Ctx) -> Vec<CheckReport> {
    per_l(ctx, "L1", |t, l| {
        let spec = FamilySpec::legendre(l);
        routes_agree(ctx, t, &spec, l)?;
        // (-1)^l 2^l l! P_l = d^{l-nu} [(1-x^2)^{l-nu} P_nu]
        let ps = cps(ctx, l)?;
        let mut scale = fact(l) * Rational::from_integer(num_bigint::BigInt::from(2).pow(l));
        if l % 2 == 1 {
            scale = -scale;
        }
        let target = classical(ctx, l)?.scale(&ctx.k("lift_scale", scale));
        for nu in 0..=l {
            let lifted = ctx.cache.memo(format!("legendre-lift|{l}|{nu}"), || {
                rodrigues_cp(&legendre_lift_spec(l, &ps[nu as usize], nu)?, l - nu)
            })?;
            t.eq_poly(|| format!("lift from nu={nu}"), &lifted, &target);
        }
        Ok(())
    })
}

pub fn l2(ctx: &Ctx) -> Vec<CheckReport> {
    // P'_nu = -nu (2l - nu + 1) P_{nu-1}
    per_l(ctx, "L2", |t, l| {
        let ps = cps(ctx, l)?;
        for nu in 1..=l {
            let (n, lr) = (rint(nu as i64), rint(l as i64));
            let k = ctx.ki("sign", -1) * &n * (ctx.ki("two", 2) * &lr - &n + ctx.ki("one", 1));
            t.eq_poly(|| format!("nu={nu}"), &ps[nu as usize].derivative(), &at(&ps, nu as i64 - 1).scale(&k));
        }
        Ok(())
    })
}

pub fn l3(ctx: &Ctx) -> Vec<CheckReport> {
    // P_nu - 2(nu-1-l) x P_{nu-1} = (nu-1)(nu-2l-2)(1-x^2) P_{nu-2}
    per_l(ctx, "L3", |t, l| {
        let ps = cps(ctx, l)?;
        let lr = rint(l as i64);
        for nu in 1..=l as i64 {
            let n = rint(nu);
            let a = ctx.ki("two_a", 2) * (&n - ctx.ki("one_a", 1) - &lr);
            let lhs = &ps[nu as usize].scale(&ctx.ki("lead", 1)) - &(&Poly::x() * &at(&ps, nu - 1)).scale(&a);
            let b = (&n - ctx.ki("one_b", 1)) * (&n - ctx.ki("two_b", 2) * &lr - ctx.ki("two_c", 2));
            let s = Poly::new(vec![ctx.ki("one_c", 1), rint(0), -ctx.ki("one_d", 1)]);
            let rhs = (&s * &at(&ps, nu - 2)).scale(&b);
            t.eq_poly(|| format!("nu={nu}"), &lhs, &rhs);
        }
        Ok(())
    })
}

pub fn l4(ctx: &Ctx) -> Vec<CheckReport> {
    // [(1-xy)^2 - y^2] P(y,x,l) = P(y,x,l+1)
    per_l(ctx, "L4", |t, l| {
        let order = l as usize + 2;
        let lower = ctx.gf(&FamilySpec::legendre(l), order)?;
        let upper = ctx.gf(&FamilySpec::legendre(l + 1), order)?;
        let one_minus_xy = yseries(vec![cst(ctx.ki("one_a", 1)), Poly::monomial(-ctx.ki("one_b", 1), 1)], order);
        let y2 = yseries(vec![Poly::zero(), Poly::zero(), cst(ctx.ki("one_c", 1))], order);
        let factor = &(&one_minus_xy * &one_minus_xy) - &y2;
        t.eq_series(|| "GF law".into(), &(&factor * &lower), &upper);
        t.detail("order", order);
        Ok(())
    })
}

pub fn l5(ctx: &Ctx) -> Vec<CheckReport> {
    // P_nu(l+1) = P_nu(l) - 2 x nu P_{nu-1}(l) - (1-x^2) nu(nu-1) P_{nu-2}(l)
    per_l(ctx, "L5", |t, l| {
        let ps = cps(ctx, l)?;
        let up = cps(ctx, l + 1)?;
        for nu in 0..=l as i64 {
            let n = rint(nu);
            let s = Poly::new(vec![ctx.ki("one_a", 1), rint(0), -ctx.ki("one_b", 1)]);
            let rhs = &(&ps[nu as usize].scale(&ctx.ki("lead", 1))
                - &(&Poly::x() * &at(&ps, nu - 1)).scale(&(ctx.ki("two", 2) * &n)))
                - &(&s * &at(&ps, nu - 2)).scale(&(&n * (&n - ctx.ki("one_c", 1))));
            t.eq_poly(|| format!("nu={nu}"), &up[nu as usize], &rhs);
        }
        Ok(())
    })
}

/// `(cos^2(theta/2), sin^2(theta/2)) = ((1+x)/2, (1-x)/2)` at exact sample
/// points `(x, sqrt(1-x^2))`.
const TRIG_POINTS: [(i64, i64, i64); 2] = [(3, 4, 5), (5, 12, 13)];

fn half_angles(ctx: Option<&Ctx>, x: &Rational) -> (Rational, Rational) {
    let two = ctx.map_or(rint(2), |c| c.ki("half", 2));
    ((rint(1) + x) / &two, (rint(1) - x) / two)
}

/// `(1 - two_c y c2)^l (1 + sign_b two_s y s2)^l`
fn trig_series(
    two: (Rational, Rational),
    c2: &Rational,
    s2: &Rational,
    sign_b: Rational,
    l: u32,
    order: usize,
) -> Result<SeriesY> {
    let a = yseries(vec![Poly::zero(), cst(-two.0 * c2)], order);
    let b = yseries(vec![Poly::zero(), cst(sign_b * two.1 * s2)], order);
    let l = rint(l as i64);
    Ok(&SeriesY::binpow(&a, &l, order)? * &SeriesY::binpow(&b, &l, order)?)
}

pub fn l6(ctx: &Ctx) -> Vec<CheckReport> {
    per_l(ctx, "L6", |t, l| {
        let order = l as usize + 2;
        let gf = ctx.gf(&FamilySpec::legendre(l), order)?;
        // P(y, 0, l) = (1 - y^2)^l
        let y2 = yseries(vec![Poly::zero(), Poly::zero(), cst(-ctx.ki("y2", 1))], order);
        t.eq_series(|| "x=0".into(), &gf.eval_x(&rint(0))?, &SeriesY::binpow(&y2, &rint(l as i64), order)?);
        // P_{2nu}(0) = (-1)^nu (2nu)! C(l, nu); odd entries vanish
        let ps = cps(ctx, l)?;
        let base = ctx.ki("sign_base", -1);
        for (i, p) in ps.iter().enumerate() {
            let v = p.eval(&rint(0));
            if i % 2 == 1 {
                t.eq_rat(|| format!("P_{i}(0)"), &v, &rint(0));
            } else {
                let nu = (i / 2) as u32;
                let want =
                    num_traits::pow(base.clone(), nu as usize) * fact(2 * nu) * Rational::from_integer(binomial(l, nu));
                t.eq_rat(|| format!("P_{i}(0)"), &v, &want);
            }
        }
        // (1 - 2y cos^2(theta/2))^l (1 + 2y sin^2(theta/2))^l
        for (a, b, c) in TRIG_POINTS {
            let (x, s) = (rat(a, c), rat(b, c));
            t.eq_rat(|| "pythagorean sample".into(), &(&x * &x + &s * &s), &rint(1));
            let (c2, s2) = half_angles(Some(ctx), &x);
            let trig =
                trig_series((ctx.ki("two_cos", 2), ctx.ki("two_sin", 2)), &c2, &s2, ctx.ki("sin_sign", 1), l, order)?;
            t.eq_series(|| format!("trig form at x={x}"), &trig, &gf.eval_x(&x)?);
        }
        Ok(())
    })
}

fn norm_formula(ctx: &Ctx, l: u32, m: u32) -> Result<Rational> {
    let even = |l: i64, m: i64| -> Result<Rational> {
        let lm = l - m;
        let sign = num_traits::pow(ctx.ki("sign_base", -1), m.rem_euclid(2) as usize);
        let top = Rational::from_integer(binomial(l as u32, (lm / 2) as u32) * double_fact(lm)? * factorial(lm as u32));
        let bottom = Rational::from_integer(double_fact(l + m - int_of(&ctx.ki("one_a", 1)))?);
        Ok(sign * top / bottom)
    };
    let (l, m) = (l as i64, m as i64);
    if (l - m) % 2 == 0 {
        even(l, m)
    } else {
        // N_l^{m} = N_l^{m-1} / ((l-m+1)(l+m))
        let d = (rint(l - m) + ctx.ki("one_b", 1)) * rint(l + m);
        Ok(even(l, m - 1)? / d)
    }
}

pub fn l7(ctx: &Ctx) -> Vec<CheckReport> {
    // P_{l-m}(x, l) = N_l^m (-1)^m d^m P_l
    per_l(ctx, "L7", |t, l| {
        let ps = cps(ctx, l)?;
        let pl = classical(ctx, l)?;
        for m in 0..=l {
            let n = norm_formula(ctx, l, m)?;
            t.eq_rat(|| format!("N_{l}^{m} closed form vs library"), &n, &legendre_norm(l, m)?);
            let assoc = pl.nth_derivative(m as usize);
            let sign = num_traits::pow(ctx.ki("assoc_sign", -1), m as usize);
            t.eq_poly(|| format!("m={m}"), &ps[(l - m) as usize], &assoc.scale(&(n.clone() * sign)));
            t.detail(format!("N_{l}^{m}"), n);
        }
        Ok(())
    })
}

pub fn l8(ctx: &Ctx) -> Vec<CheckReport> {
    // nu P_nu - nu(nu-1) x P_{nu-1} = x P'_nu + nu (1-x^2) P'_{nu-1}
    per_l(ctx, "L8", |t, l| {
        let ps = cps(ctx, l)?;
        for nu in 0..=l as i64 {
            let n = rint(nu);
            let lhs = &ps[nu as usize].scale(&(ctx.ki("lead", 1) * &n))
                - &(&Poly::x() * &at(&ps, nu - 1)).scale(&(&n * (&n - ctx.ki("one_a", 1))));
            let s = Poly::new(vec![ctx.ki("one_b", 1), rint(0), -ctx.ki("one_c", 1)]);
            let rhs = &(&Poly::monomial(ctx.ki("x_coeff", 1), 1) * &ps[nu as usize].derivative())
                + &(&s * &at(&ps, nu - 1).derivative()).scale(&n);
            t.eq_poly(|| format!("nu={nu}"), &lhs, &rhs);
        }
        Ok(())
    })
}

pub fn l9(ctx: &Ctx) -> Vec<CheckReport> {
    // The trig form as printed: (1 - 2y cos^2(theta/2))^l (1 - 2y sin^2(theta/2))^l
    let mut out = Vec::new();
    for s in specs(ctx) {
        for (a, _, c) in TRIG_POINTS {
            let x = rat(a, c);
            let point = point_of(&s).param("x", &x);
            out.push(diagnose_report("L9", point, |t| {
                let order = s.l as usize + 2;
                let (c2, s2) = half_angles(None, &x);
                let printed = trig_series((rint(2), rint(2)), &c2, &s2, rint(-1), s.l, order)?;
                let actual = ctx.gf(&s, order)?.eval_x(&x)?;
                let diff = &printed - &actual;
                Ok(diff.first_nonzero().map(|(k, v)| {
                    t.detail("first_power", k);
                    t.detail("printed", printed.coeff(k));
                    t.detail("actual", actual.coeff(k));
                    format!("y^{k} coefficient {v}")
                }))
            }));
        }
    }
    out
}
