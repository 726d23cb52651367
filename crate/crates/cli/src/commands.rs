use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::ValueEnum;
use moessner::{
    a_term, moessner_sieve, power_oracle, GridOutcome, GridRange, IdentityId, Nat, TriangleKind,
    TriangleModel, Verifier, VerifyOptions,
};

use crate::output::{Field, OutputFormat, Table};

fn emit(table: &Table, format: OutputFormat) -> Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    table.write(format, &mut out)?;
    out.flush()?;
    Ok(())
}

fn join(values: &[Nat]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn strings(values: &[Nat]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

pub fn sieve(n: u64, take: u64, format: OutputFormat) -> Result<ExitCode> {
    let count = usize::try_from(take)?;
    let values = moessner_sieve(n).stream.take(count);
    let mut table = Table::new("sieve", vec!["position", "value"])
        .param("n", n)
        .param("take", take);
    for (p, v) in values.iter().enumerate() {
        table.push(vec![(p + 1).into(), v.into()]);
        table.line(v.to_string());
    }
    emit(&table, format)?;
    Ok(ExitCode::SUCCESS)
}

/// Everything `value` reports for one `(k, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub sieve: Nat,
    pub oracle: Nat,
    pub a: Nat,
    pub b: Nat,
    pub deltas: Vec<Nat>,
}

impl Decomposition {
    pub fn compute(k: u64, n: u64) -> Self {
        let mut model = TriangleModel::new();
        let deltas: Vec<Nat> = (0..=k).map(|i| model.delta(i, n)).collect();
        Self {
            sieve: moessner_sieve(n).value(k),
            oracle: power_oracle(k, n),
            a: a_term(k, n),
            b: deltas.iter().sum(),
            deltas,
        }
    }

    pub fn a_plus_b(&self) -> Nat {
        &self.a + &self.b
    }

    pub fn consistent(&self) -> bool {
        self.sieve == self.oracle && self.oracle == self.a_plus_b()
    }
}

pub fn value(k: u64, n: u64, format: OutputFormat) -> Result<ExitCode> {
    let d = Decomposition::compute(k, n);
    let mut table = Table::new(
        "value",
        vec!["M", "oracle", "A", "B", "A+B", "deltas", "consistent"],
    )
    .param("k", k)
    .param("n", n);
    table.push(vec![
        (&d.sieve).into(),
        (&d.oracle).into(),
        (&d.a).into(),
        (&d.b).into(),
        d.a_plus_b().into(),
        Field::List(strings(&d.deltas)),
        Field::Bool(d.consistent()),
    ]);
    table.line(format!("M={}", d.sieve));
    table.line(format!("oracle={}", d.oracle));
    table.line(format!("A={}", d.a));
    table.line(format!("B={}", d.b));
    table.line(format!("A+B={}", d.a_plus_b()));
    table.line(format!("deltas={}", join(&d.deltas)));
    emit(&table, format)?;
    if d.consistent() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("mismatch: sieve, oracle and A+B disagree");
        Ok(ExitCode::from(1))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    F,
    Delta,
    H,
}

#[derive(Debug, Clone, Copy)]
pub struct TriangleArgs {
    pub kind: Kind,
    pub i: Option<u64>,
    pub n: u64,
}

impl TriangleArgs {
    fn resolve(self) -> Result<TriangleKind> {
        let n = self.n;
        Ok(match (self.kind, self.i) {
            (Kind::F, None) => TriangleKind::F { n },
            (Kind::F, Some(_)) => bail!("--kind f takes no --i"),
            (Kind::Delta, Some(i)) => TriangleKind::Delta { i, n },
            (Kind::H, Some(0)) => bail!("--kind h requires --i >= 1"),
            (Kind::H, Some(i)) => TriangleKind::H { i, n },
            (_, None) => bail!("--kind delta and --kind h require --i"),
        })
    }
}

pub fn triangle(args: TriangleArgs, format: OutputFormat) -> Result<ExitCode> {
    let kind = args.resolve()?;
    let staircase = TriangleModel::new().staircase(kind)?;
    let name = match args.kind {
        Kind::F => "f",
        Kind::Delta => "delta",
        Kind::H => "h",
    };
    let mut table = Table::new("triangle", vec!["row", "values", "sum"])
        .param("kind", name)
        .param("n", args.n);
    if let Some(i) = args.i {
        table = table.param("i", i);
    }
    for (m, (row, sum)) in staircase.rows.iter().zip(staircase.row_sums()).enumerate() {
        table.push(vec![m.into(), Field::List(strings(row)), (&sum).into()]);
        table.line(format!("{} | {}", join(row), sum));
    }
    let total = staircase.total();
    table.push(vec![
        "total".into(),
        Field::List(Vec::new()),
        (&total).into(),
    ]);
    table.line(format!("total {total}"));
    emit(&table, format)?;
    Ok(ExitCode::SUCCESS)
}

/// Identities named on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySelection(pub Vec<IdentityId>);

pub fn parse_identities(s: &str) -> Result<IdentitySelection, String> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(IdentitySelection(IdentityId::ALL.to_vec()));
    }
    let mut ids = Vec::new();
    for part in s.split(',') {
        let id: IdentityId = part.parse().map_err(|_| {
            format!(
                "unknown identity `{}` (expected I1..I14 or all)",
                part.trim()
            )
        })?;
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    Ok(IdentitySelection(ids))
}

#[derive(Debug, Clone)]
pub struct VerifyArgs {
    pub identities: IdentitySelection,
    pub k_max: Option<u64>,
    pub n_max: Option<u64>,
    pub m_max: Option<u64>,
    pub x_max: Option<u64>,
    pub i_max: Option<u64>,
    pub fail_fast: bool,
}

impl VerifyArgs {
    fn grid_for(&self, id: IdentityId) -> GridRange {
        let default = GridRange::default_for(id);
        GridRange {
            k_max: self.k_max.unwrap_or(default.k_max),
            n_max: self.n_max.unwrap_or(default.n_max),
            m_max: self.m_max,
            x_max: self.x_max,
            i_max: self.i_max,
        }
    }
}

pub fn verify(args: VerifyArgs, format: OutputFormat) -> Result<ExitCode> {
    let names: Vec<&str> = args.identities.0.iter().map(|id| id.name()).collect();
    let mut table = Table::new("verify", vec!["identity", "cell", "lhs", "rhs", "status"])
        .param("identities", names.join(","))
        .param("fail_fast", args.fail_fast);
    for (name, bound) in [
        ("k_max", args.k_max),
        ("n_max", args.n_max),
        ("m_max", args.m_max),
        ("x_max", args.x_max),
        ("i_max", args.i_max),
    ] {
        if let Some(v) = bound {
            table = table.param(name, v);
        }
    }

    let mut verifier = Verifier::new();
    let options = VerifyOptions {
        fail_fast: args.fail_fast,
    };
    let (mut checked, mut failed, mut skipped) = (0usize, 0usize, 0usize);
    'ids: for &id in &args.identities.0 {
        let mut skipped_here = 0usize;
        let outcomes = verifier.verify_grid(&[id], &args.grid_for(id), options);
        for outcome in outcomes {
            match outcome {
                GridOutcome::Checked(r) => {
                    checked += 1;
                    let status = if r.pass { "pass" } else { "FAIL" };
                    if !r.pass {
                        failed += 1;
                    }
                    table.line(format!(
                        "{} {} {} {} {}",
                        r.identity, r.cell, r.lhs, r.rhs, status
                    ));
                    table.push(vec![
                        r.identity.into(),
                        r.cell.into(),
                        r.lhs.into(),
                        r.rhs.into(),
                        status.into(),
                    ]);
                    if args.fail_fast && !r.pass {
                        break 'ids;
                    }
                }
                GridOutcome::Skipped(_) => skipped_here += 1,
            }
        }
        if skipped_here > 0 {
            let bound = id.domain().unwrap_or("an in-domain cell");
            eprintln!("skip {id}: {skipped_here} cells outside the domain (requires {bound})");
            skipped += skipped_here;
        }
    }
    emit(&table, format)?;
    eprintln!("checked {checked}, failed {failed}, skipped {skipped}");
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
