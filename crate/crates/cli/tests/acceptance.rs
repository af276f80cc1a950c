//! One line per acceptance criterion; the test fails if any criterion does.

use dihedral_core::diagram::Diagram;
use dihedral_core::family::FamilyConfig;
use dihedral_core::verify::{
    suite_agreement, suite_basis, suite_bicyclic, suite_center, suite_diagram, suite_idempotents, suite_oracle,
    suite_p2, suite_relations, SuiteReport,
};
use std::io::Write;
use std::process::Command;
use std::time::Instant;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Result<String, String> + 'a>);

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_dihedral")).args(args).output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr).trim()));
    }
    Ok(String::from_utf8_lossy(&out.stdout).trim_end().to_string())
}

fn expect(args: &[&str], want: &str) -> Result<(), String> {
    let got = cli(args)?;
    if got == want {
        Ok(())
    } else {
        Err(format!("{args:?}: got {got:?}, want {want:?}"))
    }
}

fn suites(reports: Vec<dihedral_core::Result<SuiteReport>>) -> Result<String, String> {
    let mut counts = Vec::new();
    for r in reports {
        let r = r.map_err(|e| e.to_string())?;
        if let Some(c) = r.checks.iter().find(|c| !c.passed) {
            return Err(format!("{}: {} {:?}", r.suite, c.name, c.counterexample));
        }
        counts.push(format!("{} checks in {}", r.checks.len(), r.suite));
    }
    Ok(counts.join(", "))
}

fn worked_examples() -> Result<String, String> {
    expect(
        &["act", "ind5*res5*ind3*res3", "V(1,1;15)"],
        "V(1,1;15) + W(1;15) + W(2;15) + W(3;15) + W(4;15) + W(5;15) + W(6;15) + W(7;15)",
    )?;
    expect(&["act", "ind3*res3*ind5*res5", "V(1,1;15)"], &cli(&["act", "ind5*res5*ind3*res3", "V(1,1;15)"])?)?;
    expect(&["act", "ind3*ind5*res3*res5", "V(1,1;15)"], "0")?;
    expect(&["translate", "phi", "--prime", "3", "--base", "5", "--steps", "1", "V(1,1;15)"], "V(1,1;45)")?;
    expect(&["translate", "phi-inv", "--prime", "3", "--base", "5", "--steps", "1", "W(15;45)"], "W(5;15)")?;
    expect(&["translate", "psi", "--prime", "3", "--k", "1", "--base", "5", "--k2", "5", "--steps", "1", "W(4;15)"], "W(10;45)")?;
    expect(&["translate", "address", "--prime", "3", "W(4;15)"], "W(1;5) [2]")?;
    expect(&["translate", "address", "--prime", "3", "W(10;45)"], "W(5;15) [2]")?;
    let cases = [
        ("ind3*res5^2*res3*ind5", "2*(res3*ind3)*ind3*res3*res5 - ind3*res3*res5"),
        ("ind3*res3*ind5*res3*ind3*res5*ind3*res3", "4*(res3*ind3)*ind3*res3*ind5*res5 - 3*ind3*res3*ind5*res5"),
        ("res5*res7*res3*ind5*ind7*ind5", "17*(res3*ind3)*res3*ind5 - 16*res3*ind5"),
        ("res7*ind3*res3^2*ind7", "1/5*(res3*ind3)*res5*ind3*res3^2*ind5 + 4/5*res5*ind3*res3^2*ind5"),
        ("res3*ind5*ind3*res5*ind3*res5", "(res3*ind3)*ind5*res5^2*ind3"),
        ("res3*ind5*res3*res5*ind3*res5", "(res3*ind3)*res3*ind5*res5^2"),
    ];
    for (input, want) in cases {
        expect(&["normalform", input, "--primes", "3,5,7", "--seeds", "1", "--method", "both"], want)?;
    }
    Ok("8-term sum, 5 translations, 6 normal forms".into())
}

fn diagram_components() -> Result<String, String> {
    suites(vec![suite_diagram(5, 3, 3)])?;
    let d = Diagram::from_levels(&[5, 15, 45], &[3]);
    let json = cli(&["diagram", "45", "--primes", "3", "--seeds", "5", "--format", "json"])?;
    let v: serde_json::Value = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    if v["components"] != 3 || d.component_count() != 3 {
        return Err(format!("components: cli {}, library {}", v["components"], d.component_count()));
    }
    Ok(format!("{} vertices, 3 components", d.vertices.len()))
}

#[test]
fn acceptance() {
    let odd = FamilyConfig::default_odd();
    let nfs = FamilyConfig::default_no_full_support();
    let criteria: Vec<Criterion> = vec![
        ("oracle equivalence, n <= 200, p in {2,3,5,7,11}", Box::new(|| suites(vec![suite_oracle(200, &[2, 3, 5, 7, 11])]))),
        ("worked examples through the CLI", Box::new(worked_examples)),
        ("relation suite on T(cfg, 3)", Box::new(|| suites(vec![suite_relations(&odd, 3)]))),
        (
            "basis independence, exponents <= 2, both regimes",
            Box::new(|| suites(vec![suite_basis(&odd, 2, 20, 1), suite_basis(&nfs, 2, 20, 2)])),
        ),
        ("idempotent decomposition, 50 random elements", Box::new(|| suites(vec![suite_idempotents(&odd, 50, 3)]))),
        ("center and the res2*ind2 witness", Box::new(|| suites(vec![suite_center(&odd, 3)]))),
        ("prime 2 identities, even n <= 192", Box::new(|| suites(vec![suite_p2(192)]))),
        ("bicyclic products, 100 random pairs", Box::new(|| suites(vec![suite_bicyclic(&nfs, 100, 4)]))),
        (
            "rewriting agrees with solving, words of length <= 5",
            Box::new(|| suites(vec![suite_agreement(&odd, 5), suite_agreement(&nfs, 5)])),
        ),
        ("diagram of m=5, p=3, 3 levels", Box::new(diagram_components)),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        let line = match &result {
            Ok(detail) => format!("criterion {:>2}: PASS  {name} ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed.push(i + 1);
                format!("criterion {:>2}: FAIL  {name}: {why} ({secs:.1}s)", i + 1)
            }
        };
        // straight to the handle so the line shows without --nocapture
        writeln!(std::io::stderr(), "{line}").ok();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
