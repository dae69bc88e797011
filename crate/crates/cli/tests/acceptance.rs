//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use nakayama::endo::{drop_check, end_algebra, gldim_over, CappedDim};
use nakayama::hom_ext::gldim;
use nakayama::suites::{run_suite, Suite, SuiteConfig, SuiteReport};
use nakayama::sweep::{run_sweep, Filter, SweepSpec};
use nakayama::tilting::{build_cc, build_tc, classify, it_phi_psi, pd_tau_tc, verify_cotilting, verify_tilting};
use nakayama::{AdmissibleSequence, ExtendedNat, Kind, ModuleSum, Uniserial};

const SEED: u64 = 42;
const CAP: usize = 30;

type Outcome = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Outcome {
    ensure(got == want, || format!("{what}: got {got:?}, expected {want:?}"))
}

fn m(top: usize, len: usize) -> Uniserial {
    Uniserial::new(top, len)
}

fn set(m: &ModuleSum) -> BTreeSet<Uniserial> {
    m.iter().copied().collect()
}

fn suite_passes(r: &SuiteReport, min_checked: usize) -> Outcome {
    for p in &r.properties {
        ensure(p.checked >= min_checked, || format!("{}: only {} instances checked", p.name, p.checked))?;
        ensure(p.passed(), || {
            format!("{}: {} of {} failed, first {:?}", p.name, p.failed, p.checked, p.first_counterexample)
        })?;
    }
    Ok(())
}

/// Cyclic n = 3 sequences with domdim >= 2 up to rotation. Entries of a
/// cyclic sequence differ by at most n - 1, so `max_c = 2n` covers every
/// sequence with minimum at most n + 1.
fn elementary_table(absolutely: bool) -> Result<BTreeSet<Vec<usize>>, String> {
    let mut spec = SweepSpec::new(Kind::Cyclic, 3, 6);
    spec.elementary = !absolutely;
    spec.absolutely_elementary = absolutely;
    spec.up_to_rotation = true;
    spec.filters = vec!["domdim>=2".parse::<Filter>().map_err(|e| e.to_string())?];
    let res = run_sweep(&spec).map_err(|e| e.to_string())?;
    ensure(!res.truncated, || "sweep truncated".into())?;
    Ok(res.rows.into_iter().map(|r| r.c).collect())
}

fn criterion_1() -> Outcome {
    let abs = elementary_table(true)?;
    let want_abs: BTreeSet<Vec<usize>> = [vec![2, 2, 2], vec![2, 2, 3]].into();
    eq("absolutely elementary", abs, want_abs)?;

    // The binary must print the same rows as the library sweep.
    let out = Command::new(env!("CARGO_BIN_EXE_nakayama"))
        .args(["enumerate", "--n", "3", "--max-c", "6", "--absolutely-elementary", "--filter", "domdim>=2"])
        .args(["--up-to-rotation", "--csv"])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    eq("CLI exit status", out.status.success(), true)?;
    eq("CLI rows", text.lines().skip(1).count(), 2)?;

    let el = elementary_table(false)?;
    let want_el: BTreeSet<Vec<usize>> =
        [vec![2, 2, 2], vec![3, 3, 3], vec![4, 4, 4], vec![2, 2, 3], vec![3, 3, 4]].into();
    let extra: Vec<_> = el.difference(&want_el).collect();
    let missing: Vec<_> = want_el.difference(&el).collect();
    ensure(extra.is_empty() && missing.is_empty(), || {
        format!("elementary table: extra {extra:?}, missing {missing:?}")
    })
}

fn criterion_2() -> Outcome {
    let a = AdmissibleSequence::cyclic(&[3, 2, 3, 4, 3]).map_err(|e| e.to_string())?;
    let r = classify(&a);
    eq("domdim", r.domdim, ExtendedNat::Finite(2))?;
    eq("gldim", r.gldim, ExtendedNat::Finite(4))?;
    let tc = build_tc(&a).ok_or("no T_C")?;
    let want = [a.projective(1), a.projective(4), a.projective(5), m(4, 2), m(4, 1)];
    eq("T_C", set(&tc), want.into_iter().collect())?;
    eq("pd tau T_C", pd_tau_tc(&a).map_err(|e| e.to_string())?, ExtendedNat::Finite(4))?;
    let d = drop_check(&a, CAP).map_err(|e| e.to_string())?;
    eq("gldim B_C", d.gldim_bc, CappedDim::Finite(4))?;
    eq("drop biconditional", d.theorem_drop_holds, Some(true))
}

fn criterion_3() -> Outcome {
    let a = AdmissibleSequence::cyclic(&[3, 2, 2, 3, 3]).map_err(|e| e.to_string())?;
    let r = classify(&a);
    eq("id_left", r.id_left, ExtendedNat::Finite(2))?;
    eq("id_right", r.id_right, ExtendedNat::Finite(2))?;
    eq("domdim", r.domdim, ExtendedNat::Finite(2))?;
    let tc = build_tc(&a).ok_or("no T_C")?;
    let cc = build_cc(&a).ok_or("no C_C")?;
    let want = [a.projective(1), a.projective(2), a.projective(4), a.projective(5), a.simple(4)];
    eq("T_C", set(&tc), want.into_iter().collect())?;
    eq("C_C", set(&cc), want.into_iter().collect())?;
    eq("T_C tilting", verify_tilting(&a, &tc).map_err(|e| e.to_string())?, true)?;
    eq("C_C cotilting", verify_cotilting(&a, &cc).map_err(|e| e.to_string())?, true)?;
    eq("1-AG", r.one_aus_gorenstein, true)?;
    eq("Auslander", r.auslander, false)?;
    eq("gldim", r.gldim, ExtendedNat::Infinite)
}

fn criterion_4() -> Outcome {
    let a = AdmissibleSequence::linear(&[1, 2, 2, 2, 2]).map_err(|e| e.to_string())?;
    let r = classify(&a);
    eq("gldim", r.gldim, ExtendedNat::Finite(4))?;
    eq("domdim", r.domdim, ExtendedNat::Finite(4))?;
    eq("pd tau T_C", pd_tau_tc(&a).map_err(|e| e.to_string())?, ExtendedNat::Finite(0))?;
    let d = drop_check(&a, CAP).map_err(|e| e.to_string())?;
    eq("gldim B_C", d.gldim_bc, CappedDim::Finite(3))
}

fn criterion_5() -> Outcome {
    let a = AdmissibleSequence::cyclic(&[2, 2, 3]).map_err(|e| e.to_string())?;
    let r = classify(&a);
    eq("gldim", r.gldim, ExtendedNat::Finite(3))?;
    eq("domdim", r.domdim, ExtendedNat::Finite(3))?;
    let tc = build_tc(&a).ok_or("no T_C")?;
    eq("T_C", set(&tc), [m(1, 2), m(3, 3), m(3, 1)].into_iter().collect())
}

fn sweep_config() -> SuiteConfig {
    SuiteConfig { samples: 10_000, seed: SEED, n_max: 8, c_max: 12, grid_n: 5, grid_c: 7, cap: CAP }
}

fn criterion_6() -> Outcome {
    let r = run_suite(Suite::Tilting, &sweep_config()).map_err(|e| e.to_string())?;
    suite_passes(&r, 1000)
}

fn criterion_7() -> Outcome {
    let cfg = SuiteConfig { samples: 0, grid_n: 4, grid_c: 6, ..SuiteConfig::default() };
    let r = run_suite(Suite::Oracle, &cfg).map_err(|e| e.to_string())?;
    suite_passes(&r, 10_000)
}

fn criterion_8() -> Outcome {
    let r = run_suite(Suite::Structural, &sweep_config()).map_err(|e| e.to_string())?;
    suite_passes(&r, 1000)
}

fn criterion_9() -> Outcome {
    let a2 = AdmissibleSequence::linear(&[1, 2]).map_err(|e| e.to_string())?;
    let x = ModuleSum::new(a2.vertices().flat_map(|i| [a2.projective(i), a2.injective(i)])).basic_part();
    let b = end_algebra(&a2, &x).map_err(|e| e.to_string())?;
    eq("dim End(A + DA)", b.dim(), 5)?;
    eq("gldim End(A + DA)", gldim_over(&b, CAP).map_err(|e| e.to_string())?, CappedDim::Finite(2))?;
    ensure(gldim(&a2) == ExtendedNat::Finite(1), || "linear [1,2] is not hereditary".into())?;
    let cfg = SuiteConfig { samples: 200, seed: SEED, n_max: 8, c_max: 12, grid_n: 0, grid_c: 0, cap: CAP };
    let r = run_suite(Suite::Endo, &cfg).map_err(|e| e.to_string())?;
    suite_passes(&r, 20)?;
    for name in ["dim End Hom(T_C, Q~) = dim End Q~", "pd over B_C = pd - 1"] {
        let p = r.property(name).ok_or_else(|| format!("missing property {name}"))?;
        ensure(p.checked >= 50, || format!("{name}: only {} pairs", p.checked))?;
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let cfg = SuiteConfig { samples: 1000, seed: SEED, n_max: 8, c_max: 12, grid_n: 0, grid_c: 0, cap: CAP };
    let r = run_suite(Suite::It, &cfg).map_err(|e| e.to_string())?;
    suite_passes(&r, 1)?;
    let p = r.property("finite pd => (phi, psi) = (pd, pd)").ok_or("missing property")?;
    eq("finite-pd samples", p.checked, 1000)?;
    let a = AdmissibleSequence::cyclic(&[2, 2]).map_err(|e| e.to_string())?;
    let s = ModuleSum::new([a.simple(1), a.simple(2)]);
    eq("(phi, psi) of S_1 + S_2", it_phi_psi(&a, &s).map_err(|e| e.to_string())?, (0, 0))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("n=3 elementary tables", Duration::from_secs(1), criterion_1),
        ("cyclic [3,2,3,4,3]", Duration::from_secs(60), criterion_2),
        ("1-AG cyclic [3,2,2,3,3]", Duration::from_secs(1), criterion_3),
        ("linear [1,2,2,2,2]", Duration::from_secs(30), criterion_4),
        ("2-Auslander cyclic [2,2,3]", Duration::from_secs(1), criterion_5),
        ("tilting suite", Duration::from_secs(300), criterion_6),
        ("hom/ext oracle", Duration::from_secs(300), criterion_7),
        ("structural suite", Duration::from_secs(300), criterion_8),
        ("endo suite", Duration::from_secs(600), criterion_9),
        ("IT functions", Duration::from_secs(60), criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, budget, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let took = start.elapsed();
        let res = res.and_then(|()| {
            ensure(took <= *budget, || format!("took {took:.2?}, budget {budget:?}"))
        });
        match res {
            Ok(()) => println!("PASS {:>2} {name} ({took:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({took:.2?}): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
