use super::ctx::{assert_report, Ctx};
use super::report::{CheckReport, GridPoint};
use crate::exact::{rat, Rational};
use crate::families::{classical_limit_drift, Family};

/// Deviation from the classical limit for each degree. `exact` is a degree
/// whose deviation is `coeff / N` on the nose.
pub fn limit_check(ctx: &Ctx, id: &str, family: Family, exact: (u32, &'static str, i64)) -> Vec<CheckReport> {
    let ns = &ctx.grid.limit_n;
    (0..=ctx.grid.limit_degree_max)
        .map(|n| {
            let point = GridPoint::new(family.name()).nu(n);
            assert_report(id, point, |t| {
                let drift = classical_limit_drift(family, n, ns)?;
                for (big_n, d) in &drift {
                    t.detail(format!("deviation_N={big_n}"), d);
                }
                if n == exact.0 {
                    for (big_n, d) in &drift {
                        let want = ctx.ki(exact.1, exact.2) / big_n;
                        t.eq_rat(|| format!("deviation at N={big_n}"), d, &want);
                    }
                }
                for w in drift.windows(2) {
                    let ((n0, d0), (n1, d1)) = (&w[0], &w[1]);
                    if d0 == &Rational::from_integer(0.into()) {
                        t.eq_rat(|| format!("vanishing deviation at N={n1}"), d1, d0);
                        continue;
                    }
                    let ratio = d1 / d0;
                    t.detail(format!("ratio_N={n0}->{n1}"), &ratio);
                    t.holds(
                        || format!("ratio {ratio} outside [1/20, 1/5] for N={n0}->{n1}"),
                        ratio >= rat(1, 20) && ratio <= rat(1, 5),
                    );
                }
                Ok(())
            })
        })
        .collect()
}
