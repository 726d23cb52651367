//! Acceptance suite. Runs every criterion, prints one line per criterion and
//! exits non-zero if any of them fails.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use moessner::{
    GridOutcome, GridRange, IdentityId, Mutation, TriangleModel, Verifier, VerifyOptions,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn run(args: &[&str]) -> (Output, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_moessner"))
        .args(args)
        .output()
        .expect("binary runs");
    (out, start.elapsed())
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Every line of a plain `verify` run is a pass record.
fn all_pass(o: &Output) -> Result<usize, String> {
    ensure(
        o.status.code() == Some(0),
        format!("exit {:?}", o.status.code()),
    )?;
    let text = stdout(o);
    let lines: Vec<&str> = text.lines().collect();
    ensure(!lines.is_empty(), "no records")?;
    if let Some(bad) = lines.iter().find(|l| !l.ends_with(" pass")) {
        return Err(format!("record not passing: {bad}"));
    }
    Ok(lines.len())
}

fn theorem_reproduction() -> Check {
    let (o, took) = run(&[
        "verify",
        "--identities",
        "I1",
        "--k-max",
        "50",
        "--n-max",
        "10",
    ]);
    let count = all_pass(&o)?;
    ensure(count == 51 * 11, format!("{count} records, expected 561"))?;
    ensure(took < Duration::from_secs(10), format!("took {took:?}"))?;
    Ok(format!("{count} cells exact in {took:.2?}"))
}

fn prefix_goldens() -> Check {
    let (squares, _) = run(&["sieve", "--n", "0", "--take", "5"]);
    let (cubes, _) = run(&["sieve", "--n", "1", "--take", "5"]);
    for (o, want) in [
        (&squares, "1\n4\n9\n16\n25\n"),
        (&cubes, "1\n8\n27\n64\n125\n"),
    ] {
        ensure(o.status.code() == Some(0), "non-zero exit")?;
        ensure(
            stdout(o) == want,
            format!("got {:?}, want {want:?}", stdout(o)),
        )?;
    }
    Ok("squares and cubes match".into())
}

fn decomposition_equivalence() -> Check {
    let start = Instant::now();
    let mut v = Verifier::new();
    let grid = GridRange::new(8, 8);
    let mut cells = 0;
    for k in 0..=8 {
        for n in 0..=8 {
            let r = v
                .verify_identity(IdentityId::I2, &moessner::Cell::kn(k, n))
                .map_err(|e| e.to_string())?;
            let oracle = moessner::power_oracle(k, n);
            ensure(
                r.pass && r.lhs == oracle,
                format!("k={k},n={n}: sieve {} oracle {oracle} A+B {}", r.lhs, r.rhs),
            )?;
            cells += 1;
        }
    }
    let (o, _) = run(&[
        "verify",
        "--identities",
        "I2",
        "--k-max",
        "8",
        "--n-max",
        "8",
    ]);
    let cli_cells = all_pass(&o)?;
    ensure(
        cli_cells == grid.cells(IdentityId::I2).len(),
        "cli cell count",
    )?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(30), format!("took {took:?}"))?;
    Ok(format!("{cells} cells agree three ways in {took:.2?}"))
}

fn identity_suite() -> Check {
    let ids: Vec<IdentityId> = IdentityId::ALL[2..].to_vec();
    let mut v = Verifier::new();
    let grid = GridRange::new(8, 8);
    let mut checked = 0;
    let mut skipped = 0;
    for o in v.verify_grid(&ids, &grid, VerifyOptions::default()) {
        match o {
            GridOutcome::Checked(r) => {
                ensure(
                    r.pass,
                    format!("{} at {}: {} != {}", r.identity, r.cell, r.lhs, r.rhs),
                )?;
                checked += 1;
            }
            GridOutcome::Skipped(s) => {
                let documented =
                    s.identity.domain().is_some() && s.cell.m.unwrap_or(0) > s.cell.n.unwrap_or(0);
                ensure(
                    documented,
                    format!("undocumented skip {} at {}", s.identity, s.cell),
                )?;
                skipped += 1;
            }
        }
    }
    for id in &ids {
        let any = Verifier::new()
            .verify_grid(&[*id], &grid, VerifyOptions::default())
            .iter()
            .any(|o| matches!(o, GridOutcome::Checked(_)));
        ensure(any, format!("{id} checked no cells"))?;
    }
    Ok(format!(
        "{checked} checks pass, {skipped} documented skips (m > n)"
    ))
}

fn mutation_sensitivity() -> Check {
    let ids = [
        IdentityId::I2,
        IdentityId::I9,
        IdentityId::I11,
        IdentityId::I13,
    ];
    let mut notes = Vec::new();
    for mutation in [Mutation::ShiftedFBase, Mutation::NoCrossBlockTerm] {
        let mut v = Verifier::with_model(TriangleModel::mutated(mutation));
        let mut failed: Vec<IdentityId> = v
            .verify_grid(&ids, &GridRange::new(8, 8), VerifyOptions::default())
            .into_iter()
            .filter_map(|o| match o {
                GridOutcome::Checked(r) if !r.pass => Some(r.identity),
                _ => None,
            })
            .collect();
        failed.dedup();
        ensure(!failed.is_empty(), format!("{mutation:?} went undetected"))?;
        let names: Vec<&str> = failed.iter().map(|id| id.name()).collect();
        notes.push(format!("{mutation:?} caught by {}", names.join("/")));
    }
    Ok(notes.join("; "))
}

fn exactness_at_scale() -> Check {
    const EXPECTED: &str = "390877006486250192896";
    ensure(EXPECTED.len() == 21, "golden is 21 digits")?;
    let (o, _) = run(&["value", "--k", "50", "--n", "10"]);
    ensure(
        o.status.code() == Some(0),
        format!("exit {:?}", o.status.code()),
    )?;
    let text = stdout(&o);
    for key in ["M", "oracle", "A+B"] {
        let line = format!("{key}={EXPECTED}");
        ensure(text.lines().any(|l| l == line), format!("missing `{line}`"))?;
    }
    Ok(format!("sieve, oracle and A+B all print {EXPECTED}"))
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("AC1 theorem reproduction k<=50 n<=10", theorem_reproduction),
        ("AC2 prefix goldens", prefix_goldens),
        (
            "AC3 decomposition equivalence k,n<=8",
            decomposition_equivalence,
        ),
        ("AC4 identity suite I3-I14 k,n<=8", identity_suite),
        ("AC5 mutation sensitivity", mutation_sensitivity),
        ("AC6 exactness at scale", exactness_at_scale),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failures += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
