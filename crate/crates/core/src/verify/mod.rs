//! Identity suite: every identity becomes a named check over a finite grid.
//!
//! Assert-class checks must hold exactly. Diagnose-class checks evaluate
//! formulas known to disagree with the constructions and report residuals
//! without ever failing. Every rational coefficient in an assert-class
//! statement is routed through a named slot so the suite can audit itself:
//! shifting any one slot by 1 must make the check fail.

mod confluent;
mod ctx;
mod general;
mod grid;
mod hyper;
mod legendre;
mod limits;
mod prelaguerre;
mod probe;
mod relhermite;
mod report;

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

pub use ctx::Cache;
pub use grid::GridConfig;
pub use probe::{legendre_values, probe_translation, TranslationProbe};
pub use report::{CheckClass, CheckReport, GridPoint, Status};

use crate::error::{Error, Result};
use ctx::Ctx;

type CheckFn = fn(&Ctx) -> Vec<CheckReport>;

struct CheckDef {
    id: &'static str,
    class: CheckClass,
    summary: &'static str,
    run: CheckFn,
}

const fn def(id: &'static str, class: CheckClass, summary: &'static str, run: CheckFn) -> CheckDef {
    CheckDef { id, class, summary, run }
}

use CheckClass::{Assert as A, Diagnose as D};

static CATALOG: &[CheckDef] = &[
    def("L1", A, "Legendre: routes agree; recursive definition recovers P_l", legendre::l1),
    def("L2", A, "Legendre: P'_nu = -nu(2l-nu+1) P_{nu-1}", legendre::l2),
    def("L3", A, "Legendre: three-term recursion", legendre::l3),
    def("L4", A, "Legendre: [(1-xy)^2 - y^2] P(y,x,l) = P(y,x,l+1)", legendre::l4),
    def("L5", A, "Legendre: P_nu(l+1) in terms of P(l)", legendre::l5),
    def("L6", A, "Legendre: values at x = 0 and the half-angle form", legendre::l6),
    def("L7", A, "Legendre: P_{l-m}(x,l) = N_l^m P_l^m", legendre::l7),
    def("L8", A, "Legendre: nu P_nu - nu(nu-1) x P_{nu-1} = x P'_nu + nu(1-x^2) P'_{nu-1}", legendre::l8),
    def("L9", D, "Legendre: half-angle form with (1 - 2y sin^2) as printed", legendre::l9),
    def("C1", A, "Confluent: routes agree", confluent::c1),
    def("C2", A, "Confluent: ODE, value at 0, Pearson equation", confluent::c2),
    def("C3", A, "Confluent: three-term recursion and its PDE", confluent::c3),
    def("C4", A, "Confluent: P'_nu = -nu P_{nu-1} and its PDE", confluent::c4),
    def("C5", A, "Confluent: P_nu = P_nu(0) M(-nu, l-nu+c, x)", confluent::c5),
    def("C6", A, "Confluent: composition laws", confluent::c6),
    def("C7", A, "Confluent: addition law", confluent::c7),
    def("C8", A, "Confluent: inverted and full addition laws", confluent::c8),
    def("H1", A, "Hypergeometric: routes agree", hyper::h1),
    def("H2", A, "Hypergeometric: four-term recursion, last term derived from the PDE in y", hyper::h2),
    def("H3", A, "Hypergeometric: ODE, Gauss match, differential recursion, value at 0, Pearson", hyper::h3),
    def("H4", A, "Hypergeometric: composition laws", hyper::h4),
    def("H5", A, "Hypergeometric: reflection symmetry x -> 1-x, y -> -y", hyper::h5),
    def("H6", D, "Hypergeometric: differential recursion with nu(nu-a-b-2) as printed", hyper::h6),
    def("H7", D, "Hypergeometric: second recursion as printed", hyper::h7),
    def("H8", D, "Hypergeometric: four-term recursion with P_{nu-2} in the last term as printed", hyper::h8),
    def("R1", A, "Relativistic Hermite: routes agree", relhermite::r1),
    def("R2", A, "Relativistic Hermite: differential recursion and recursive definition", relhermite::r2),
    def("R3", A, "Relativistic Hermite: 1/N approach to Hermite", relhermite::r3),
    def("P1", A, "Pre-Laguerre: routes agree; recursive definitions", prelaguerre::p1),
    def("P2", A, "Pre-Laguerre: three-term recursion", prelaguerre::p2),
    def("P3", A, "Pre-Laguerre: recursive formula against (1+x/N)^nu", prelaguerre::p3),
    def("P4", A, "Pre-Laguerre: composition laws", prelaguerre::p4),
    def("P5", A, "Pre-Laguerre: P_1 and values at 0 and -N", prelaguerre::p5),
    def("P6", A, "Pre-Laguerre: Pearson equation (x w)' = tau w", prelaguerre::p6),
    def("P7", A, "Pre-Laguerre: 1/N approach to the Laguerre-type limit", prelaguerre::p7),
    def("G1", A, "General frameworks reproduce every family; sample frameworks close", general::g1),
    def("G2", D, "Legendre translation formula, exact partial sums", general::g2),
    def("G3", D, "Hypergeometric-type complementary set with prefactor w^{nu-a} sigma^{nu-b}", general::g3),
];

/// A catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CheckId {
    pub id: &'static str,
    pub class: CheckClass,
}

impl CheckId {
    pub fn all() -> Vec<CheckId> {
        CATALOG.iter().map(|d| CheckId { id: d.id, class: d.class }).collect()
    }

    pub fn parse(s: &str) -> Result<CheckId> {
        CATALOG
            .iter()
            .find(|d| d.id == s)
            .map(|d| CheckId { id: d.id, class: d.class })
            .ok_or_else(|| Error::UnknownCheck(s.into()))
    }

    /// Comma-separated ids, or `all`.
    pub fn parse_list(s: &str) -> Result<Vec<CheckId>> {
        if s.trim() == "all" {
            return Ok(CheckId::all());
        }
        s.split(',').map(|p| CheckId::parse(p.trim())).collect()
    }

    pub fn summary(self) -> &'static str {
        self.def().summary
    }

    fn def(self) -> &'static CheckDef {
        CATALOG.iter().find(|d| d.id == self.id).expect("catalog id")
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id)
    }
}

/// Result of shifting one coefficient slot of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MutationOutcome {
    pub id: &'static str,
    pub slot: &'static str,
    pub caught: bool,
    pub witness: Option<String>,
}

/// Runs checks over a grid, sharing intermediate results between runs.
pub struct Runner {
    grid: GridConfig,
    cache: Cache,
}

impl Runner {
    pub fn new(grid: GridConfig) -> Result<Self> {
        grid.validate()?;
        Ok(Runner { grid, cache: Cache::default() })
    }

    pub fn grid(&self) -> &GridConfig {
        &self.grid
    }

    fn execute(&self, id: CheckId, target: Option<&str>) -> (Vec<CheckReport>, Vec<&'static str>) {
        let ctx = Ctx::new(&self.grid, &self.cache, target);
        let reports = (id.def().run)(&ctx);
        (reports, ctx.slots())
    }

    /// Reports sorted by `(id, grid point)`.
    pub fn run(&self, ids: &[CheckId]) -> Vec<CheckReport> {
        let mut out: Vec<CheckReport> = ids.par_iter().flat_map(|id| self.execute(*id, None).0).collect();
        out.sort_by(|a, b| (&a.id, &a.point).cmp(&(&b.id, &b.point)));
        out.dedup();
        out
    }

    /// Coefficient slots of a check's statement.
    pub fn slots(&self, id: CheckId) -> Vec<&'static str> {
        self.execute(id, None).1
    }

    /// Reports with one slot shifted by 1.
    pub fn run_mutated(&self, id: CheckId, slot: &str) -> Vec<CheckReport> {
        self.execute(id, Some(slot)).0
    }

    /// Shifts every slot of every assert-class check in turn.
    pub fn mutation_audit(&self, ids: &[CheckId]) -> Vec<MutationOutcome> {
        let jobs: Vec<(CheckId, &'static str)> = ids
            .iter()
            .filter(|id| id.class == CheckClass::Assert)
            .flat_map(|id| self.slots(*id).into_iter().map(move |s| (*id, s)))
            .collect();
        let mut out: Vec<MutationOutcome> = jobs
            .par_iter()
            .map(|(id, slot)| {
                let reports = self.run_mutated(*id, slot);
                let failed = reports.iter().find(|r| r.status == Status::Fail);
                MutationOutcome {
                    id: id.id,
                    slot,
                    caught: failed.is_some(),
                    witness: failed.and_then(|r| r.witness.clone()),
                }
            })
            .collect();
        out.sort_by(|a, b| (a.id, a.slot).cmp(&(b.id, b.slot)));
        out
    }
}

/// Runs the listed checks over the grid.
pub fn run_suite(ids: &[CheckId], grid: &GridConfig) -> Result<Vec<CheckReport>> {
    if ids.is_empty() {
        return Err(Error::InvalidGrid("no checks selected".into()));
    }
    Ok(Runner::new(grid.clone())?.run(ids))
}

/// True when no assert-class report failed.
pub fn suite_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.class == CheckClass::Diagnose || r.status != Status::Fail)
}
