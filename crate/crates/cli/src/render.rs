use num_traits::{One, Signed, Zero};
use rodrigues_core::{Poly, Rational};
use serde::Serialize;

use crate::record::{NormRow, OutputRecord};

/// Pretty JSON with a trailing newline.
pub fn json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable document");
    s.push('\n');
    s
}

/// One row per `(nu, degree, coefficient)`.
pub fn records_csv(records: &[OutputRecord]) -> String {
    let mut out = String::from("family,params,l,nu,route,degree,coefficient\n");
    for r in records {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut params = params.join(";");
        if params.contains(',') {
            params = format!("\"{params}\"");
        }
        for (k, c) in r.coeffs.iter().enumerate() {
            out += &format!("{},{params},{},{},{},{k},{c}\n", r.family, r.l, r.nu, r.route);
        }
    }
    out
}

pub fn norms_csv(rows: &[NormRow]) -> String {
    let mut out = String::from("l,m,norm\n");
    for r in rows {
        out += &format!("{},{},{}\n", r.l, r.m, r.norm);
    }
    out
}

fn latex_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// Descending LaTeX form, e.g. `12x^{2} - 4`.
pub fn latex_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out += if c.is_negative() { " - " } else { " + " };
        }
        let mag = c.abs();
        if k == 0 || !mag.is_one() {
            out += &latex_rational(&mag);
        }
        match k {
            0 => {}
            1 => out.push('x'),
            _ => out += &format!("x^{{{k}}}"),
        }
    }
    out
}

pub fn latex(polys: &[Poly]) -> String {
    let mut out = String::from("\\begin{align*}\n");
    let rows: Vec<String> =
        polys.iter().enumerate().map(|(nu, p)| format!("\\mathcal{{P}}_{{{nu}}}(x) &= {}", latex_poly(p))).collect();
    out += &rows.join(" \\\\\n");
    out += "\n\\end{align*}\n";
    out
}

pub fn norms_latex(rows: &[NormRow]) -> String {
    let mut out = String::from("\\begin{tabular}{rrr}\n$l$ & $m$ & $N_l^m$ \\\\\n\\hline\n");
    for r in rows {
        let n: Rational = rodrigues_core::exact::parse_rational(&r.norm).expect("norm text");
        let sign = if n.is_negative() { "-" } else { "" };
        out += &format!("{} & {} & ${sign}{}$ \\\\\n", r.l, r.m, latex_rational(&n.abs()));
    }
    out += "\\end{tabular}\n";
    out
}
