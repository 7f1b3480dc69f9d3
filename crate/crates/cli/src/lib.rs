//! Command-line surface for `rodrigues-core`.
//!
//! Every command renders its whole output into memory first; `main`
//! writes it once. Exit codes: 0 success, 1 assert failure, 2 usage or
//! parameter error.

pub mod args;
pub mod record;
pub mod render;

use rodrigues_core::families::{cp, cp_all, gf_spec, legendre_norm, Family, FamilySpec, Framework, Route};
use rodrigues_core::genfun::expand_gf;
use rodrigues_core::verify::{probe_translation, CheckId, GridConfig, Runner};
use rodrigues_core::{suite_passed, Error, Poly};

pub use args::{Cli, Command};
pub use record::{ChecksDoc, MutationsDoc, NormRow, NormsDoc, OutputRecord, ProbeDoc, RecordsDoc, VERSION};

use args::{CheckArgs, EvalArgs, FamilyArgs, Format, GenArgs, ProbeCommand, TableCommand};

/// What a command produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::usage(e)
    }
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Gen(a) => gen(&a),
        Command::Eval(a) => eval(&a),
        Command::Check(a) => check(&a),
        Command::Audit(a) => audit(&a),
        Command::Table { table: TableCommand::LegendreNorms { l_max, format } } => norms(l_max, format),
        Command::Probe { probe: ProbeCommand::Translation { l, h, x, terms } } => {
            let probe = probe_translation(l, &h, &x, terms);
            Ok(Outcome::ok(render::json(&ProbeDoc { version: VERSION, probe })))
        }
    };
    result.unwrap_or_else(|o| o)
}

fn missing(flag: &str) -> Outcome {
    Outcome::usage(format!("missing --{flag}"))
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T, Outcome> {
    v.clone().ok_or_else(|| missing(flag))
}

/// Builds the family from flags, naming the first missing parameter.
pub fn family_spec(a: &FamilyArgs) -> Result<FamilySpec, Outcome> {
    let family =
        Family::from_name(&a.family).ok_or_else(|| Outcome::usage(format!("unknown family {:?}", a.family)))?;
    let l = || need(&a.l, "l");
    let spec = match family {
        Family::Legendre => FamilySpec::legendre(l()?),
        Family::Confluent => FamilySpec::confluent(need(&a.c, "c")?, l()?),
        Family::Hypergeometric => {
            FamilySpec::hypergeometric(need(&a.a, "a")?, need(&a.b, "b")?, need(&a.c, "c")?, l()?)
        }
        Family::RelHermite => {
            if a.l.is_some_and(|l| l != 0) {
                return Err(Outcome::usage("relhermite is defined at l = 0 only"));
            }
            FamilySpec::rel_hermite(need(&a.n, "N")?)?
        }
        Family::PreLaguerre => FamilySpec::pre_laguerre(need(&a.n, "N")?, l()?)?,
        Family::General => {
            let sigma = need(&a.sigma, "sigma")?;
            let w = need(&a.w, "w")?;
            let framework = match a.framework.as_deref().unwrap_or("weighted") {
                "weighted" => Framework::Weighted { sigma, w, n: need(&a.n, "N")? },
                "hypergeometric" => Framework::HypergeometricType {
                    w,
                    sigma,
                    a: need(&a.a, "a")?,
                    b: need(&a.b, "b")?,
                    exp_arg: a.q.clone().unwrap_or_else(Poly::zero),
                },
                other => return Err(Outcome::usage(format!("unknown framework {other:?}"))),
            };
            FamilySpec::general(framework, l()?)?
        }
    };
    Ok(spec)
}

fn route_of(name: &str) -> Result<Route, Outcome> {
    Route::from_name(name).ok_or_else(|| Outcome::usage(format!("unknown route {name:?}")))
}

fn gen(a: &GenArgs) -> Result<Outcome, Outcome> {
    let spec = family_spec(&a.family)?;
    let route = route_of(&a.route)?;
    let polys = match a.order {
        None => cp_all(&spec, a.nu_max, route)?,
        Some(order) => {
            if route != Route::GenFunc {
                return Err(Outcome::usage("--order applies to the genfunc route only"));
            }
            if order < a.nu_max {
                return Err(Outcome::usage(format!("--order {order} is below --nu-max {}", a.nu_max)));
            }
            // validates the cap and route
            cp_all(&spec, a.nu_max, route)?;
            let mut all = expand_gf(&gf_spec(&spec)?, order as usize)?;
            all.truncate(a.nu_max as usize + 1);
            all
        }
    };
    let records: Vec<OutputRecord> =
        polys.iter().enumerate().map(|(nu, p)| OutputRecord::new(&spec, nu as u32, route, p)).collect();
    let text = match a.format {
        Format::Json => render::json(&RecordsDoc { version: VERSION, records }),
        Format::Csv => render::records_csv(&records),
        Format::Latex => render::latex(&polys),
    };
    Ok(Outcome::ok(text))
}

fn eval(a: &EvalArgs) -> Result<Outcome, Outcome> {
    let spec = family_spec(&a.family)?;
    let p = cp(&spec, a.nu, route_of(&a.route)?)?;
    Ok(Outcome::ok(format!("{}\n", p.eval(&a.x))))
}

fn runner(a: &CheckArgs) -> Result<(Runner, Vec<CheckId>), Outcome> {
    let ids = CheckId::parse_list(&a.suite)?;
    let grid = GridConfig::by_name(&a.grid).ok_or_else(|| Outcome::usage(format!("unknown grid {:?}", a.grid)))?;
    Ok((Runner::new(grid)?, ids))
}

fn check(a: &CheckArgs) -> Result<Outcome, Outcome> {
    let (runner, ids) = runner(a)?;
    let checks = runner.run(&ids);
    let code = if suite_passed(&checks) { 0 } else { 1 };
    let stdout = render::json(&ChecksDoc { version: VERSION, checks });
    Ok(Outcome { code, stdout, stderr: String::new() })
}

fn audit(a: &CheckArgs) -> Result<Outcome, Outcome> {
    let (runner, ids) = runner(a)?;
    let mutations = runner.mutation_audit(&ids);
    let code = if mutations.iter().all(|m| m.caught) { 0 } else { 1 };
    let stdout = render::json(&MutationsDoc { version: VERSION, mutations });
    Ok(Outcome { code, stdout, stderr: String::new() })
}

fn norms(l_max: u32, format: Format) -> Result<Outcome, Outcome> {
    let mut norms = Vec::new();
    for l in 0..=l_max {
        for m in 0..=l {
            norms.push(NormRow { l, m, norm: legendre_norm(l, m)?.to_string() });
        }
    }
    Ok(Outcome::ok(match format {
        Format::Json => render::json(&NormsDoc { version: VERSION, norms }),
        Format::Csv => render::norms_csv(&norms),
        Format::Latex => render::norms_latex(&norms),
    }))
}
