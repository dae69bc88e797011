use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use nakayama::endo::{drop_check, end_algebra, gldim_over, mueller_domdim, CappedDim, DEFAULT_CAP};
use nakayama::hom_ext::{ext_dim, hom_dim, oracle_ext1_dim, oracle_hom_dim};
use nakayama::suites::{parse_suites, run_suite, SuiteConfig};
use nakayama::sweep::{run_sweep, Filter, SweepSpec};
use nakayama::tilting::{
    build_cc, build_tc, classify, criterion, drop_side_conditions, pd_tau_tc, q_tilde, qc_pc_sets,
    verify_cotilting, verify_tilting, x_set_and_omega, ClassificationReport,
};
use nakayama::{AdmissibleSequence, Kind, ModuleSum};

#[derive(Parser)]
#[command(name = "nakayama", version, about = "Homological invariants of Nakayama algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant and classification report for one algebra
    Classify {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long)]
        json: bool,
    },
    /// Q_c/P_c split, the subcategory C, T_C and C_C
    Tilting {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long)]
        json: bool,
    },
    /// End(X)^op as a structure-constant algebra and its global dimension
    Endo {
        #[command(flatten)]
        alg: AlgebraArg,
        /// Basic module sum such as `M(1,2)+M(3,3)`; defaults to T_C
        #[arg(long)]
        x: Option<String>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Include the multiplication table in the JSON output
        #[arg(long)]
        table: bool,
        #[arg(long)]
        json: bool,
    },
    /// Classify every admissible sequence within bounds
    Enumerate(EnumerateArgs),
    /// Run a seeded property suite
    Check(CheckArgs),
    /// Compare Hom and Ext^1 with the quiver-representation oracle
    Oracle {
        #[command(flatten)]
        alg: OptionalAlgebraArg,
        /// Grid bounds used when no algebra is given
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 6)]
        c_max: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct AlgebraArg {
    /// Cyclic admissible sequence, e.g. 3,2,3,4,3
    #[arg(long, value_name = "C1,...,CN")]
    cyclic: Option<String>,
    /// Linear admissible sequence, e.g. 1,2,2,2,2
    #[arg(long, value_name = "C1,...,CN")]
    linear: Option<String>,
}

impl AlgebraArg {
    fn parse(&self) -> Result<AdmissibleSequence> {
        parse_algebra(self.cyclic.as_deref(), self.linear.as_deref())?.context("no algebra given")
    }
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct OptionalAlgebraArg {
    #[arg(long, value_name = "C1,...,CN")]
    cyclic: Option<String>,
    #[arg(long, value_name = "C1,...,CN")]
    linear: Option<String>,
}

fn parse_algebra(cyclic: Option<&str>, linear: Option<&str>) -> Result<Option<AdmissibleSequence>> {
    let (kind, s) = match (cyclic, linear) {
        (Some(s), None) => (Kind::Cyclic, s),
        (None, Some(s)) => (Kind::Linear, s),
        _ => return Ok(None),
    };
    let c = nakayama::algebra::parse_lengths(s)?;
    Ok(Some(AdmissibleSequence::new(kind, c)?))
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, default_value = "cyclic")]
    kind: Kind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    max_c: usize,
    /// `key`, `!key`, `key>=N`, `key<=N` or `key=N` over report keys; repeatable
    #[arg(long = "filter")]
    filters: Vec<Filter>,
    #[arg(long)]
    elementary: bool,
    #[arg(long)]
    absolutely_elementary: bool,
    #[arg(long)]
    up_to_rotation: bool,
    #[arg(long)]
    up_to_difference_class: bool,
    #[arg(long, default_value_t = 100_000)]
    row_cap: usize,
    #[arg(long, conflicts_with = "json")]
    csv: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CheckArgs {
    /// tilting, oracle, structural, drop, endo, it or all
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, default_value_t = 12)]
    c_max: usize,
    /// Exhaustive grid bound on n
    #[arg(long, default_value_t = 4)]
    grid_n: usize,
    /// Exhaustive grid bound on the entries
    #[arg(long, default_value_t = 6)]
    grid_c: usize,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

/// `Ok(false)` means the command ran but a check failed.
fn run(cmd: Command) -> Result<bool> {
    let mut out = io::stdout().lock();
    match cmd {
        Command::Classify { alg, json } => {
            let r = classify(&alg.parse()?);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?;
            } else {
                print_report(&mut out, &r)?;
            }
            Ok(true)
        }
        Command::Tilting { alg, json } => tilting(&mut out, &alg.parse()?, json),
        Command::Endo { alg, x, cap, table, json } => endo(&mut out, &alg.parse()?, x.as_deref(), cap, table, json),
        Command::Enumerate(args) => enumerate(&mut out, args),
        Command::Check(args) => check(&mut out, args),
        Command::Oracle { alg, n_max, c_max, json } => {
            match parse_algebra(alg.cyclic.as_deref(), alg.linear.as_deref())? {
                Some(a) => oracle_one(&mut out, &a, json),
                None => {
                    let cfg = SuiteConfig { samples: 0, grid_n: n_max, grid_c: c_max, ..SuiteConfig::default() };
                    let r = run_suite(nakayama::suites::Suite::Oracle, &cfg)?;
                    if json {
                        writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?;
                    } else {
                        write!(out, "{r}")?;
                    }
                    Ok(r.passed())
                }
            }
        }
    }
}

fn opt_sum(m: &Option<ModuleSum>) -> String {
    m.as_ref().map_or_else(|| "none".to_string(), ToString::to_string)
}

fn print_report(out: &mut impl Write, r: &ClassificationReport) -> Result<()> {
    let c: Vec<String> = r.c.iter().map(ToString::to_string).collect();
    let m_aus = r.m_auslander.map_or_else(|| "none".to_string(), |m| m.to_string());
    let rows: [(&str, String); 16] = [
        ("kind", r.kind.to_string()),
        ("c", c.join(",")),
        ("gldim", r.gldim.to_string()),
        ("domdim", r.domdim.to_string()),
        ("id_left", r.id_left.to_string()),
        ("id_right", r.id_right.to_string()),
        ("gdim", r.gdim.to_string()),
        ("selfinjective", r.selfinjective.to_string()),
        ("auslander", r.auslander.to_string()),
        ("m_auslander", m_aus),
        ("one_aus_gorenstein", r.one_aus_gorenstein.to_string()),
        ("dtr_selfinjective", r.dtr_selfinjective.to_string()),
        ("tilting_exists", r.tilting_exists.to_string()),
        ("t_c", opt_sum(&r.t_c)),
        ("c_c", opt_sum(&r.c_c)),
        ("tilting_cotilting", r.tilting_cotilting.to_string()),
    ];
    for (k, v) in rows {
        writeln!(out, "{k:<20} {v}")?;
    }
    Ok(())
}

fn tilting(out: &mut impl Write, alg: &AdmissibleSequence, json: bool) -> Result<bool> {
    let split = qc_pc_sets(alg);
    let omega = x_set_and_omega(alg);
    let tc = build_tc(alg);
    let cc = build_cc(alg);
    let verified_t = tc.as_ref().map(|t| verify_tilting(alg, t)).transpose()?;
    let verified_c = cc.as_ref().map(|c| verify_cotilting(alg, c)).transpose()?;
    let pd_tau = tc.is_some().then(|| pd_tau_tc(alg)).transpose()?;
    let side = if tc.is_some() && nakayama::hom_ext::gldim(alg).is_finite() {
        Some(drop_side_conditions(alg)?)
    } else {
        None
    };
    if json {
        let v = json!({
            "algebra": alg.to_string(),
            "qc": split.qc,
            "pc": split.pc,
            "criterion": criterion(alg),
            "q_tilde": q_tilde(alg),
            "x": omega.x,
            "omega": omega.images,
            "omega_bijection": omega.is_bijection,
            "t_c": tc,
            "c_c": cc,
            "t_c_tilting": verified_t,
            "c_c_cotilting": verified_c,
            "pd_tau_t_c": pd_tau,
            "drop_conditions": side,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
        return Ok(true);
    }
    let list = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    writeln!(out, "algebra          {alg}")?;
    writeln!(out, "Q_c              {{{}}}", list(&split.qc))?;
    writeln!(out, "P_c              {{{}}}", list(&split.pc))?;
    writeln!(out, "criterion        {}", criterion(alg))?;
    writeln!(out, "Q~               {}", q_tilde(alg))?;
    for (u, p) in &omega.images {
        writeln!(out, "omega            {u} -> {p}")?;
    }
    writeln!(out, "omega bijective  {}", omega.is_bijection)?;
    writeln!(out, "T_C              {}", opt_sum(&tc))?;
    writeln!(out, "C_C              {}", opt_sum(&cc))?;
    if let Some(t) = verified_t {
        writeln!(out, "T_C tilting      {t}")?;
    }
    if let Some(c) = verified_c {
        writeln!(out, "C_C cotilting    {c}")?;
    }
    if let Some(p) = pd_tau {
        writeln!(out, "pd tau T_C       {p}")?;
    }
    if let Some(s) = side {
        writeln!(out, "drop conditions  {s:?}")?;
    }
    Ok(true)
}

fn endo(
    out: &mut impl Write,
    alg: &AdmissibleSequence,
    x: Option<&str>,
    cap: usize,
    table: bool,
    json: bool,
) -> Result<bool> {
    let is_tc = x.is_none();
    let x: ModuleSum = match x {
        Some(s) => s.parse()?,
        None => build_tc(alg).with_context(|| format!("{alg} has no tilting module T_C; pass --x"))?,
    };
    let b = end_algebra(alg, &x)?;
    let gl: CappedDim = gldim_over(&b, cap)?;
    let mueller = mueller_domdim(alg, &x).ok();
    let drop = if is_tc && nakayama::hom_ext::gldim(alg).is_finite() { Some(drop_check(alg, cap)?) } else { None };
    if json {
        let mut v = json!({
            "algebra": alg.to_string(),
            "x": x,
            "dim": b.dim(),
            "gldim": gl,
            "mueller_domdim": mueller,
            "drop": drop,
        });
        if table {
            v["structure"] = b.to_json();
        }
        writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
        return Ok(true);
    }
    writeln!(out, "algebra          {alg}")?;
    writeln!(out, "X                {x}")?;
    writeln!(out, "dim End(X)^op    {}", b.dim())?;
    writeln!(out, "gldim End(X)^op  {gl}")?;
    if let Some(m) = mueller {
        writeln!(out, "domdim End(X)^op {m}")?;
    }
    if let Some(d) = drop {
        writeln!(out, "gldim            {}", d.gldim_lambda)?;
        writeln!(out, "pd tau T_C       {}", d.pd_tau_tc)?;
        let show = |o: Option<bool>| o.map_or_else(|| "unknown (cap reached)".to_string(), |b| b.to_string());
        writeln!(out, "drop holds       {}", show(d.theorem_drop_holds))?;
        writeln!(out, "bounds hold      {}", show(d.bounds_hold))?;
    }
    Ok(true)
}

const CSV_HEADER: [&str; 10] =
    ["kind", "n", "c", "gldim", "domdim", "gdim", "selfinjective", "auslander", "one_AG", "tilting_exists"];

fn enumerate(out: &mut impl Write, a: EnumerateArgs) -> Result<bool> {
    let spec = SweepSpec {
        kind: a.kind,
        n: a.n,
        max_c: a.max_c,
        filters: a.filters,
        elementary: a.elementary,
        absolutely_elementary: a.absolutely_elementary,
        up_to_rotation: a.up_to_rotation,
        up_to_difference_class: a.up_to_difference_class,
        row_cap: a.row_cap,
    };
    let res = run_sweep(&spec)?;
    let marker = format!("# truncated: {} of {} matching rows shown", res.rows.len(), res.matched);
    if a.json {
        let v = json!({ "rows": res.rows, "matched": res.matched, "truncated": res.truncated });
        writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
        return Ok(true);
    }
    let fields = |r: &ClassificationReport| -> Vec<String> {
        let c: Vec<String> = r.c.iter().map(ToString::to_string).collect();
        vec![
            r.kind.to_string(),
            r.c.len().to_string(),
            c.join(","),
            r.gldim.to_string(),
            r.domdim.to_string(),
            r.gdim.to_string(),
            r.selfinjective.to_string(),
            r.auslander.to_string(),
            r.one_aus_gorenstein.to_string(),
            r.tilting_exists.to_string(),
        ]
    };
    if a.csv {
        let mut w = csv::Writer::from_writer(&mut *out);
        w.write_record(CSV_HEADER)?;
        for r in &res.rows {
            w.write_record(fields(r))?;
        }
        w.flush()?;
        drop(w);
        if res.truncated {
            eprintln!("{marker}");
        }
        return Ok(true);
    }
    writeln!(out, "{}", CSV_HEADER.join("\t"))?;
    for r in &res.rows {
        writeln!(out, "{}", fields(r).join("\t"))?;
    }
    if res.truncated {
        writeln!(out, "{marker}")?;
    }
    writeln!(out, "# {} rows", res.rows.len())?;
    Ok(true)
}

fn check(out: &mut impl Write, a: CheckArgs) -> Result<bool> {
    let suites = parse_suites(&a.suite)?;
    let cfg = SuiteConfig {
        samples: a.samples,
        seed: a.seed,
        n_max: a.n_max,
        c_max: a.c_max,
        grid_n: a.grid_n,
        grid_c: a.grid_c,
        cap: a.cap,
    };
    let mut reports = Vec::new();
    for s in suites {
        reports.push(run_suite(s, &cfg)?);
    }
    let ok = reports.iter().all(|r| r.passed());
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&json!({ "config": cfg, "suites": reports, "passed": ok }))?)?;
    } else {
        for r in &reports {
            write!(out, "{r}")?;
        }
        writeln!(out, "{}", if ok { "all properties passed" } else { "some properties FAILED" })?;
    }
    Ok(ok)
}

fn oracle_one(out: &mut impl Write, alg: &AdmissibleSequence, json: bool) -> Result<bool> {
    let mods = alg.indecomposables();
    let mut mismatches = Vec::new();
    for &u in &mods {
        for &v in &mods {
            let h = (hom_dim(alg, u, v), oracle_hom_dim(alg, u, v));
            let e = (ext_dim(alg, u, v, 1), oracle_ext1_dim(alg, u, v));
            if h.0 != h.1 || e.0 != e.1 {
                mismatches.push(json!({
                    "u": u, "v": v, "hom": h.0, "oracle_hom": h.1, "ext1": e.0, "oracle_ext1": e.1,
                }));
            }
        }
    }
    let pairs = mods.len() * mods.len();
    if json {
        let v = json!({ "algebra": alg.to_string(), "pairs": pairs, "mismatches": mismatches });
        writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
    } else {
        writeln!(out, "{alg}: {pairs} pairs, {} mismatches", mismatches.len())?;
        for m in &mismatches {
            writeln!(out, "  {m}")?;
        }
    }
    Ok(mismatches.is_empty())
}
