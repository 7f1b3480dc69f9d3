use std::any::Any;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use super::grid::GridConfig;
use super::report::{CheckClass, CheckReport, GridPoint, Status};
use crate::error::Result;
use crate::exact::{factorial, rint, Poly, Rational};
use crate::families::{cp_all, gf_spec, FamilySpec, Route};
use crate::genfun::ypoly;
use crate::genfun::SeriesY;

type Entry = Arc<dyn Any + Send + Sync>;

/// Memo of slot-independent intermediate results, shared across runs.
#[derive(Default)]
pub struct Cache {
    map: Mutex<HashMap<String, Entry>>,
}

impl Cache {
    pub fn memo<T: Any + Send + Sync>(&self, key: String, f: impl FnOnce() -> Result<T>) -> Result<Arc<T>> {
        if let Some(hit) = self.map.lock().unwrap().get(&key) {
            return Ok(hit.clone().downcast::<T>().expect("cache key reused with another type"));
        }
        let value = Arc::new(f()?);
        self.map.lock().unwrap().insert(key, value.clone());
        Ok(value)
    }
}

/// Evaluation context of one check run: the grid, the shared cache and an
/// optional mutated slot. Every rational coefficient of an identity's
/// statement passes through [`Ctx::k`]; the targeted slot is shifted by 1.
pub struct Ctx<'a> {
    pub grid: &'a GridConfig,
    pub cache: &'a Cache,
    target: Option<&'a str>,
    seen: Mutex<BTreeSet<&'static str>>,
}

impl<'a> Ctx<'a> {
    pub fn new(grid: &'a GridConfig, cache: &'a Cache, target: Option<&'a str>) -> Self {
        Ctx { grid, cache, target, seen: Mutex::new(BTreeSet::new()) }
    }

    pub fn k(&self, slot: &'static str, value: Rational) -> Rational {
        self.seen.lock().unwrap().insert(slot);
        if self.target == Some(slot) {
            value + rint(1)
        } else {
            value
        }
    }

    pub fn ki(&self, slot: &'static str, value: i64) -> Rational {
        self.k(slot, rint(value))
    }

    pub fn slots(&self) -> Vec<&'static str> {
        self.seen.lock().unwrap().iter().copied().collect()
    }

    /// `[P_0, ..., P_nu_max]` by a route, memoized.
    pub fn cps(&self, spec: &FamilySpec, route: Route, nu_max: u32) -> Result<Arc<Vec<Poly>>> {
        let key = format!("cps|{:?}|{}|{route}|{nu_max}", spec.params, spec.l);
        self.cache.memo(key, || cp_all(spec, nu_max, route))
    }

    /// The family generating function truncated after `y^order`, memoized.
    pub fn gf(&self, spec: &FamilySpec, order: usize) -> Result<Arc<SeriesY>> {
        let key = format!("gf|{:?}|{}|{order}", spec.params, spec.l);
        self.cache.memo(key, || gf_spec(spec)?.series(order))
    }
}

/// Outcome of one grid point: the first failing witness plus details.
#[derive(Default)]
pub struct Tally {
    failed: bool,
    witness: Option<String>,
    pub details: BTreeMap<String, String>,
}

impl Tally {
    pub fn holds(&mut self, label: impl FnOnce() -> String, ok: bool) {
        if !ok && !self.failed {
            self.failed = true;
            self.witness = Some(label());
        }
    }

    pub fn zero(&mut self, label: impl FnOnce() -> String, residual: &Poly) {
        if !residual.is_zero() && !self.failed {
            self.failed = true;
            self.witness = Some(format!("{}: residual {}", label(), residual));
        }
    }

    pub fn eq_poly(&mut self, label: impl FnOnce() -> String, lhs: &Poly, rhs: &Poly) {
        self.zero(label, &(lhs - rhs));
    }

    pub fn eq_rat(&mut self, label: impl FnOnce() -> String, lhs: &Rational, rhs: &Rational) {
        if lhs != rhs && !self.failed {
            self.failed = true;
            self.witness = Some(format!("{}: {} != {}", label(), lhs, rhs));
        }
    }

    pub fn zero_series(&mut self, label: impl FnOnce() -> String, residual: &SeriesY) {
        if let Some((k, c)) = residual.first_nonzero() {
            if !self.failed {
                self.failed = true;
                self.witness = Some(format!("{}: y^{k} coefficient {c}", label()));
            }
        }
    }

    pub fn eq_series(&mut self, label: impl FnOnce() -> String, lhs: &SeriesY, rhs: &SeriesY) {
        self.zero_series(label, &(lhs - rhs));
    }

    pub fn detail(&mut self, key: impl Into<String>, value: impl ToString) {
        self.details.insert(key.into(), value.to_string());
    }
}

/// Turns a per-point computation into a report. Errors count as failures.
pub fn assert_report(id: &str, point: GridPoint, run: impl FnOnce(&mut Tally) -> Result<()>) -> CheckReport {
    let mut tally = Tally::default();
    let outcome = run(&mut tally);
    let (status, witness) = match outcome {
        Err(e) => (Status::Fail, Some(format!("error: {e}"))),
        Ok(()) if tally.failed => (Status::Fail, tally.witness),
        Ok(()) => (Status::Pass, None),
    };
    CheckReport { id: id.into(), class: CheckClass::Assert, point, status, witness, details: tally.details }
}

/// A diagnose report: a nonzero residual is reported, never failed.
pub fn diagnose_report(
    id: &str,
    point: GridPoint,
    run: impl FnOnce(&mut Tally) -> Result<Option<String>>,
) -> CheckReport {
    let mut tally = Tally::default();
    let (status, witness) = match run(&mut tally) {
        Err(e) => (Status::Residual, Some(format!("error: {e}"))),
        Ok(Some(w)) => (Status::Residual, Some(w)),
        Ok(None) => (Status::Pass, None),
    };
    CheckReport { id: id.into(), class: CheckClass::Diagnose, point, status, witness, details: tally.details }
}

/// Grid point for a family spec, listing its named parameters and `l`.
pub fn point_of(spec: &FamilySpec) -> GridPoint {
    let mut p = GridPoint::new(spec.family().name());
    for (name, value) in spec.named_params() {
        p = p.param(name, value);
    }
    p.l(spec.l)
}

pub fn fact(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `ps[i]`, zero for negative or missing indices.
pub fn at(ps: &[Poly], i: i64) -> Poly {
    usize::try_from(i).ok().and_then(|i| ps.get(i).cloned()).unwrap_or_else(Poly::zero)
}

pub fn cst(c: Rational) -> Poly {
    Poly::constant(c)
}

/// A polynomial in `y` with polynomial coefficients, as a series.
pub fn yseries(coeffs: Vec<Poly>, order: usize) -> SeriesY {
    SeriesY::new(ypoly(coeffs), order)
}

pub fn route_slot(route: Route) -> &'static str {
    match route {
        Route::Rodrigues => "rodrigues",
        Route::GenFunc => "genfunc",
        Route::Recursion => "recursion",
        Route::Explicit => "explicit",
    }
}

/// `k_r * P^{(r)}_nu - k_rodrigues * P^{(rodrigues)}_nu = 0` for every route.
pub fn routes_agree(ctx: &Ctx, t: &mut Tally, spec: &FamilySpec, nu_max: u32) -> Result<()> {
    let reference = ctx.cps(spec, Route::Rodrigues, nu_max)?;
    for &route in spec.family().routes().iter().filter(|r| **r != Route::Rodrigues) {
        let other = ctx.cps(spec, route, nu_max)?;
        for nu in 0..=nu_max as usize {
            let lhs = reference[nu].scale(&ctx.ki("rodrigues", 1));
            let rhs = other[nu].scale(&ctx.ki(route_slot(route), 1));
            t.eq_poly(|| format!("nu={nu} rodrigues vs {route}"), &lhs, &rhs);
        }
    }
    t.detail("routes", spec.family().routes().iter().map(|r| r.name()).collect::<Vec<_>>().join(","));
    Ok(())
}

/// Integer value of an integral rational.
pub fn int_of(r: &Rational) -> i64 {
    num_traits::ToPrimitive::to_i64(&r.to_integer()).expect("small integer")
}
