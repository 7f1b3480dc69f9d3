use super::ctx::{assert_report, diagnose_report, point_of, Ctx};
use super::probe::probe_translation;
use super::report::{CheckReport, GridPoint};
use crate::exact::{rat, rint};
use crate::families::{
    cp_all, family_framework, framework_gf, framework_rodrigues_unshifted, gf_spec, Family, FamilySpec, Framework,
    Route,
};
use crate::symdiff::rodrigues_cp_all;

/// One spec per family parameter point, at a fixed small `l`.
fn family_samples(ctx: &Ctx) -> Vec<FamilySpec> {
    let g = ctx.grid;
    let mut out = Vec::new();
    for l in 0..=g.general_l_max {
        out.push(FamilySpec::legendre(l));
        out.extend(g.confluent_c.iter().map(|c| FamilySpec::confluent(c.clone(), l)));
        out.extend(
            g.hypergeometric_abc.iter().map(|(a, b, c)| FamilySpec::hypergeometric(a.clone(), b.clone(), c.clone(), l)),
        );
        out.extend(g.pre_laguerre_n.iter().filter_map(|n| FamilySpec::pre_laguerre(n.clone(), l).ok()));
    }
    out.extend(g.rel_hermite_n.iter().filter_map(|n| FamilySpec::rel_hermite(n.clone()).ok()));
    out
}

fn framework_point(fw: &Framework, l: u32) -> GridPoint {
    let p = GridPoint::new(Family::General.name());
    let p = match fw {
        Framework::Weighted { sigma, w, n } => {
            p.param("kind", "weighted").param("sigma", sigma).param("w", w).param("N", n)
        }
        Framework::HypergeometricType { w, sigma, a, b, exp_arg } => p
            .param("kind", "hypergeometric-type")
            .param("w", w)
            .param("sigma", sigma)
            .param("a", a)
            .param("b", b)
            .param("q", exp_arg),
    };
    p.l(l)
}

pub fn g1(ctx: &Ctx) -> Vec<CheckReport> {
    let nu_max = ctx.grid.general_nu_max;
    let mut out: Vec<CheckReport> = family_samples(ctx)
        .into_iter()
        .map(|s| {
            assert_report("G1", point_of(&s).param("source", "family"), |t| {
                let (fw, flip) = family_framework(&s).expect("family has a framework");
                let mut gf = framework_gf(&fw, s.l)?;
                if flip {
                    gf = gf.negate_y();
                }
                t.holds(|| "GF factors differ".into(), gf.canonical() == gf_spec(&s)?.canonical());
                let nu = s.nu_cap().map_or(nu_max, |c| c.min(nu_max));
                let general = FamilySpec::general(fw, s.l)?;
                let via = ctx.cps(&general, Route::Rodrigues, nu)?;
                let own = ctx.cps(&s, Route::Rodrigues, nu)?;
                let base = if flip { ctx.ki("flip_base", -1) } else { rint(1) };
                for k in 0..=nu as usize {
                    let sign = num_traits::pow(base.clone(), k);
                    t.eq_poly(|| format!("nu={k}"), &via[k].scale(&sign), &own[k].scale(&ctx.ki("family", 1)));
                }
                Ok(())
            })
        })
        .collect();
    for fw in &ctx.grid.general_samples {
        for l in 0..=ctx.grid.general_l_max {
            out.push(assert_report("G1", framework_point(fw, l).param("source", "sample"), |t| {
                let spec = FamilySpec::general(fw.clone(), l)?;
                let rod = ctx.cps(&spec, Route::Rodrigues, nu_max)?;
                let gf = ctx.cps(&spec, Route::GenFunc, nu_max)?;
                for k in 0..=nu_max as usize {
                    t.eq_poly(
                        || format!("nu={k}"),
                        &rod[k].scale(&ctx.ki("rodrigues", 1)),
                        &gf[k].scale(&ctx.ki("genfunc", 1)),
                    );
                }
                Ok(())
            }));
        }
    }
    out
}

pub fn g2(_ctx: &Ctx) -> Vec<CheckReport> {
    let (h, x, terms) = (rat(1, 10), rat(1, 2), 40);
    (0..=2)
        .map(|l| {
            let point = GridPoint::new("legendre").param("h", &h).param("x", &x).param("terms", terms).l(l);
            diagnose_report("G2", point, |t| {
                let p = probe_translation(l, &h, &x, terms);
                t.detail("lhs", &p.lhs);
                t.detail("rhs", &p.rhs);
                t.detail("residual", &p.residual);
                t.detail("lhs_approx", format!("{:.6}", p.lhs_approx));
                t.detail("rhs_approx", format!("{:.6}", p.rhs_approx));
                t.detail("residual_approx", format!("{:.6}", p.residual_approx));
                Ok((p.residual != "0").then(|| format!("residual {:.6}", p.residual_approx)))
            })
        })
        .collect()
}

/// The complementary set with the prefactor `w^{nu-a} sigma^{nu-b}`, as
/// printed for the hypergeometric-type framework, against the family.
pub fn g3(ctx: &Ctx) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let mut cases: Vec<FamilySpec> = (0..=ctx.grid.general_l_max).map(FamilySpec::legendre).collect();
    if let Some((a, b, c)) = ctx.grid.hypergeometric_abc.first() {
        cases.extend(
            (0..=ctx.grid.general_l_max).map(|l| FamilySpec::hypergeometric(a.clone(), b.clone(), c.clone(), l)),
        );
    }
    for s in cases {
        let (fw, _) = family_framework(&s).expect("family has a framework");
        let Framework::HypergeometricType { w, sigma, a, b, .. } = fw else { continue };
        out.push(diagnose_report("G3", point_of(&s), |t| {
            let nu = s.nu_cap().unwrap_or(ctx.grid.general_nu_max).min(ctx.grid.general_nu_max);
            let own = cp_all(&s, nu, Route::Rodrigues)?;
            let printed = rodrigues_cp_all(&framework_rodrigues_unshifted(&w, &sigma, &a, &b, s.l)?, nu)?;
            let mut first = None;
            for (k, (p, q)) in printed.iter().zip(own.iter()).enumerate() {
                if p != q && first.is_none() {
                    t.detail("nu", k);
                    t.detail("printed", p);
                    t.detail("actual", q);
                    first = Some(format!("nu={k}: residual {}", p - q));
                }
            }
            Ok(first)
        }));
    }
    out
}
