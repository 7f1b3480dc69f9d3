use super::ctx::{assert_report, point_of, routes_agree, Ctx};
use super::limits::limit_check;
use super::report::CheckReport;
use crate::exact::{rint, Poly};
use crate::families::{rel_hermite_lift_spec, Family, FamilySpec, Route};
use crate::symdiff::rodrigues_cp;

fn specs(ctx: &Ctx) -> Vec<FamilySpec> {
    ctx.grid.rel_hermite_n.iter().filter_map(|n| FamilySpec::rel_hermite(n.clone()).ok()).collect()
}

pub fn r1(ctx: &Ctx) -> Vec<CheckReport> {
    let nu_max = ctx.grid.rel_hermite_nu_max;
    specs(ctx).into_iter().map(|s| assert_report("R1", point_of(&s), |t| routes_agree(ctx, t, &s, nu_max))).collect()
}

pub fn r2(ctx: &Ctx) -> Vec<CheckReport> {
    let nu_max = ctx.grid.rel_hermite_nu_max;
    specs(ctx)
        .into_iter()
        .map(|s| {
            assert_report("R2", point_of(&s), |t| {
                let big_n = s.named_params()[0].1.clone();
                // H_n - (2x/N)(N+n-1) H_{n-1} + (1 + x^2/N) H'_{n-1} = 0
                for route in [Route::Rodrigues, Route::GenFunc] {
                    let hs = ctx.cps(&s, route, nu_max)?;
                    for n in 1..=nu_max as usize {
                        let k = ctx.ki("two", 2) * (&big_n + rint(n as i64) - ctx.ki("one", 1)) / &big_n;
                        let w = Poly::new(vec![ctx.ki("w_one", 1), rint(0), ctx.ki("w_x2", 1) / &big_n]);
                        let res = &(&hs[n].scale(&ctx.ki("lead", 1)) - &(&Poly::x() * &hs[n - 1]).scale(&k))
                            + &(&w * &hs[n - 1].derivative());
                        t.zero(|| format!("{route} n={n}"), &res);
                    }
                }
                // H_n = (-1)^{n-nu} (1+x^2/N)^{N+n} d^{n-nu} [H_nu (1+x^2/N)^{-N-nu}]
                let hs = ctx.cps(&s, Route::Rodrigues, nu_max)?;
                for n in 1..=nu_max {
                    for nu in 0..n {
                        let lifted = ctx.cache.memo(format!("relh-lift|{big_n}|{nu}|{n}"), || {
                            rodrigues_cp(&rel_hermite_lift_spec(&big_n, &hs[nu as usize], nu)?, n - nu)
                        })?;
                        t.eq_poly(
                            || format!("lift nu={nu} -> n={n}"),
                            &lifted,
                            &hs[n as usize].scale(&ctx.ki("lift", 1)),
                        );
                    }
                }
                Ok(())
            })
        })
        .collect()
}

pub fn r3(ctx: &Ctx) -> Vec<CheckReport> {
    limit_check(ctx, "R3", Family::RelHermite, (2, "two", 2))
}
