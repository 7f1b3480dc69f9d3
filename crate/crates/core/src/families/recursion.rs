//! Constructive recursions, seeded with `P_0 = 1` and `P_{-1} = P_{-2} = 0`.

use super::rodrigues::{one_minus_x, one_plus_x2_over, one_plus_x_over};
use super::spec::{FamilyParams, FamilySpec};
use crate::error::{Error, Result};
use crate::exact::{rint, Poly, Rational};

fn prev(ps: &[Poly], back: usize) -> Poly {
    ps.len().checked_sub(back).map(|i| ps[i].clone()).unwrap_or_else(Poly::zero)
}

fn k(p: &Poly, c: Rational) -> Poly {
    p.scale(&c)
}

pub fn recursion_all(spec: &FamilySpec, nu_max: u32) -> Result<Vec<Poly>> {
    let l = spec.l_rat();
    let x = Poly::x();
    let mut ps = vec![Poly::one()];
    for nu in 1..=nu_max {
        let n = rint(nu as i64);
        let next = match &spec.params {
            FamilyParams::Legendre => {
                // P_nu = 2(nu-1-l) x P_{nu-1} + (nu-1)(nu-2l-2)(1-x^2) P_{nu-2}
                let a = rint(2) * (&n - rint(1) - &l);
                let b = (&n - rint(1)) * (&n - rint(2) * &l - rint(2));
                &k(&(&x * &prev(&ps, 1)), a) + &k(&(&Poly::from_ints(&[1, 0, -1]) * &prev(&ps, 2)), b)
            }
            FamilyParams::Confluent { c } => {
                // P_{m+1} = (c-1+l-m-x) P_m - m x P_{m-1}, m = nu-1
                let m = &n - rint(1);
                let lin = Poly::linear(c - rint(1) + &l - &m, rint(-1));
                &(&lin * &prev(&ps, 1)) - &k(&(&x * &prev(&ps, 2)), m)
            }
            FamilyParams::Hypergeometric { a, b, c } => {
                // P_{m+1} = [l+c-m-1 - x(2l-2m+a+b-1)] P_m
                //           - (2l+a+b-1) x(1-x) m P_{m-1} + m(m-1) x(1-x) P_{m-1}
                let m = &n - rint(1);
                let lin = Poly::linear(&l + c - &m - rint(1), -(rint(2) * &l - rint(2) * &m + a + b - rint(1)));
                let s = &x * &one_minus_x();
                let t1 = &lin * &prev(&ps, 1);
                let t2 = k(&(&s * &prev(&ps, 2)), -(rint(2) * &l + a + b - &m) * &m);
                &t1 + &t2
            }
            FamilyParams::RelHermite { n: big_n } => {
                // H_nu = (2x/N)(N+nu-1) H_{nu-1} - (1+x^2/N) H'_{nu-1}
                let h = prev(&ps, 1);
                let a = rint(2) * (big_n + &n - rint(1)) / big_n;
                &k(&(&x * &h), a) - &(&one_plus_x2_over(big_n) * &h.derivative())
            }
            FamilyParams::PreLaguerre { n: big_n } => {
                // P_{m+1} = [(1+x/N)(l-m) - (1+m/N)x] P_m + x(1+x/N) P_m'
                let m = &n - rint(1);
                let w = one_plus_x_over(big_n);
                let lin = &k(&w, &l - &m) - &k(&x, rint(1) + &m / big_n);
                let p = prev(&ps, 1);
                &(&lin * &p) + &(&(&x * &w) * &p.derivative())
            }
            FamilyParams::General(_) => {
                return Err(Error::UnavailableRoute { family: "general".into(), route: "recursion".into() })
            }
        };
        ps.push(next);
    }
    Ok(ps)
}
