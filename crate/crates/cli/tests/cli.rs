use std::process::{Command, Output};

use rodrigues_cli::{ChecksDoc, NormsDoc, RecordsDoc};

fn rodrigues(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rodrigues")).args(args.split_whitespace()).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn records(args: &str) -> RecordsDoc {
    let o = rodrigues(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn gen_legendre_json() {
    let doc = records("gen --family legendre --l 2 --nu-max 2 --format json");
    assert_eq!(doc.version, 1);
    let coeffs: Vec<Vec<&str>> = doc.records.iter().map(|r| r.coeffs.iter().map(|s| s.as_str()).collect()).collect();
    assert_eq!(coeffs, vec![vec!["1"], vec!["0", "-4"], vec!["-4", "0", "12"]]);
    assert!(doc.records.iter().all(|r| r.route == "genfunc" && r.l == 2));
}

#[test]
fn gen_prelaguerre_first_polynomial() {
    let doc = records("gen --family prelaguerre --N 2 --l 2 --nu-max 1");
    assert_eq!(doc.records.last().unwrap().coeffs, vec!["2"]);
    assert_eq!(doc.records[0].params["N"], "2");
}

#[test]
fn gen_routes_agree() {
    let base = "gen --family hypergeometric --a 1/2 --b -1 --c 3/2 --l 3 --nu-max 4 --route";
    let tables: Vec<Vec<Vec<String>>> = ["rodrigues", "genfunc", "recursion", "explicit"]
        .iter()
        .map(|r| records(&format!("{base} {r}")).records.into_iter().map(|r| r.coeffs).collect())
        .collect();
    assert!(tables.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn gen_over_expansion_matches() {
    let plain = records("gen --family confluent --c 1/3 --l 2 --nu-max 3");
    let over = records("gen --family confluent --c 1/3 --l 2 --nu-max 3 --order 7");
    assert_eq!(plain, over);
}

#[test]
fn gen_latex_and_csv() {
    let latex = stdout(&rodrigues("gen --family legendre --l 2 --nu-max 2 --format latex"));
    assert!(latex.contains("12x^{2} - 4"));
    let csv = stdout(&rodrigues("gen --family legendre --l 2 --nu-max 2 --format csv"));
    assert!(csv.lines().any(|l| l == "legendre,,2,2,genfunc,2,12"));
    let general =
        stdout(&rodrigues("gen --family general --sigma 1,0,1 --w 1,1 --N 3/2 --l 1 --nu-max 1 --format csv"));
    assert!(general.lines().skip(1).all(|l| l.starts_with("general,\"N=3/2;sigma=1,0,1;w=1,1\",1,")));
}

#[test]
fn usage_errors_exit_two() {
    let o = rodrigues("gen --family confluent --l 2 --nu-max 1");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing --c"));
    for args in [
        "gen --family hypergeometric --a 0 --c 1 --l 2 --nu-max 1",
        "gen --family prelaguerre --N 0 --l 1 --nu-max 1",
        "gen --family legendre --l 2 --nu-max 3",
        "gen --family relhermite --N 2 --nu-max 2 --route explicit",
        "gen --family nope --l 1 --nu-max 1",
        "gen --family confluent --c 1/0 --l 1 --nu-max 1",
        "eval --family legendre --l 2 --nu 1",
        "check --suite NOPE",
        "check --grid huge",
        "table legendre-norms --l-max 2 --m 1",
        "frobnicate",
    ] {
        assert_eq!(rodrigues(args).status.code(), Some(2), "{args}");
    }
}

#[test]
fn eval_examples() {
    let eval = |args: &str| stdout(&rodrigues(&format!("eval {args}"))).trim().to_string();
    assert_eq!(eval("--family legendre --l 2 --nu 2 --x 0"), "-4");
    assert_eq!(eval("--family prelaguerre --N 2 --l 2 --nu 2 --x -2"), "6");
    for family in ["--family legendre --l 3", "--family confluent --c 1/2 --l 2", "--family relhermite --N 7/2"] {
        assert_eq!(eval(&format!("{family} --nu 0 --x 5/3")), "1");
    }
}

#[test]
fn legendre_norm_table() {
    let o = rodrigues("table legendre-norms --l-max 2");
    let doc: NormsDoc = serde_json::from_str(&stdout(&o)).unwrap();
    let has = |l, m, n: &str| doc.norms.iter().any(|r| r.l == l && r.m == m && r.norm == n);
    assert!(has(2, 0, "8") && has(2, 1, "4/3") && has(1, 1, "-1"));
    assert_eq!(doc.norms.len(), 6);
}

#[test]
fn translation_probe_reports_residual() {
    let o = rodrigues("probe translation --l 0 --h 1/10 --x 1/2 --terms 40");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_ne!(v["probe"]["residual"], "0");
    assert!((v["probe"]["residual_approx"].as_f64().unwrap() - 0.102).abs() < 1e-3);
}

#[test]
fn check_single_suite() {
    let o = rodrigues("check --suite L7,H6 --grid small");
    assert_eq!(o.status.code(), Some(0));
    let doc: ChecksDoc = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(doc.checks.iter().any(|c| c.id == "H6" && c.details.contains_key("printed")));
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", stdout(&o));
}
