//! End-to-end acceptance run: one PASS/FAIL line per criterion.

mod common;

use std::collections::{BTreeMap, HashSet};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use tabkit::coeff::{f_coeff, g_coeff, lrs_tableaux, modified_lrs_tableaux, verify_identities, Identity};
use tabkit::evacuation::{check_thm_jswitch, evacuate, j_operation};
use tabkit::jdt::{rectify, rectify_with};
use tabkit::lattice::{is_lattice, is_lrs_word};
use tabkit::modified::mswitch_tableaux;
use tabkit::switching::{switch_pair, switch_tableaux, PathType, Switched};
use tabkit::{Mode, Order, ShiftedTableau, StrictPartition};

/// Largest outer shape in the exhaustive involution sweep.
const INVOLUTION_MAX_OUTER: usize = 10;
const INVOLUTION_MAX_CELLS: usize = 8;
const RANDOM_PAIRS: usize = 10_000;
/// Letters allowed in the inner tableaux of the preservation sweep.
const PRESERVATION_MAX_ENTRY: usize = 4;
/// Letters allowed on both sides of the J-switch sweep.
const JSWITCH_MAX_ENTRY: usize = 3;

/// Path types seen by criteria 1 to 5, and paths that had none.
#[derive(Default)]
struct PathLog {
    counts: Mutex<BTreeMap<PathType, usize>>,
    untyped: AtomicUsize,
}

impl PathLog {
    fn record(&self, out: &Switched) {
        let mut local: BTreeMap<PathType, usize> = BTreeMap::new();
        for p in &out.paths {
            match p.path_type() {
                Some(t) => *local.entry(t).or_default() += 1,
                None => {
                    self.untyped.fetch_add(1, Ordering::Relaxed);
                }
            }
        }
        let mut counts = self.counts.lock().unwrap();
        for (t, n) in local {
            *counts.entry(t).or_default() += n;
        }
    }
}

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1(log: &PathLog) -> Outcome {
    let out = switch_pair(&pair_a(), &pair_b()).map_err(|e| e.to_string())?;
    log.record(&out);
    check(out.inner == pair_inner(), || format!("^AB differs:\n{}", out.inner.render()))?;
    check(out.outer == pair_outer(), || format!("A_B differs:\n{}", out.outer.render()))?;
    let kinds: Vec<_> = out.steps.iter().map(|s| s.kind).collect();
    check(kinds == pair_kinds(), || format!("switch sequence {kinds:?}"))?;
    Ok(format!("{} switches", kinds.len()))
}

fn criterion_2(log: &PathLog) -> Outcome {
    let out = switch_tableaux(&stack_s(), &stack_t(), Order::Standard).map_err(|e| e.to_string())?;
    log.record(&out);
    check(out.inner == stack_inner() && out.outer == stack_outer(), || "plain switching differs from the expected tableaux".into())?;
    let m = mswitch_tableaux(&stack_s(), &stack_t(), Order::Standard).map_err(|e| e.to_string())?;
    log.record(&m);
    check(m.inner == stack_modified_inner() && m.outer == stack_modified_outer(), || "modified switching differs from the expected tableaux".into())?;
    Ok("plain and modified runs match".into())
}

fn criterion_3() -> Outcome {
    let (nu, la, mu) = lr_triple();
    let got: HashSet<ShiftedTableau> = lrs_tableaux(&nu, &la, &mu).into_iter().collect();
    let want: HashSet<ShiftedTableau> = lr_tableaux(&LRS_WORDS).into_iter().collect();
    check(got == want, || format!("LRS set has {} tableaux", got.len()))?;
    let got: HashSet<ShiftedTableau> = modified_lrs_tableaux(&nu, &la, &mu).into_iter().collect();
    let want: HashSet<ShiftedTableau> = lr_tableaux(&MODIFIED_LRS_WORDS).into_iter().collect();
    check(got == want, || format!("modified LRS set has {} tableaux", got.len()))?;
    let (f, g) = (f_coeff(&nu, &la, &mu), g_coeff(&nu, &la, &mu));
    check(f == 4 && g == 8 && g == f << (la.len() + mu.len() - nu.len()), || format!("f={f} g={g}"))?;
    Ok(format!("f={f} g={g}"))
}

fn criterion_4() -> Outcome {
    check(rectify(&jdt_example()).map_err(|e| e.to_string())? == jdt_rect(), || "example rectification differs".into())?;
    let mut rng = StdRng::seed_from_u64(4);
    let mut inputs = Vec::new();
    while inputs.len() < 500 {
        let (_, t) = random_pair(&mut rng, 2..=14, 4, Mode::Syt);
        if (1..=8).contains(&t.len()) && !t.shape().inner().is_empty() {
            inputs.push((t, rng.gen::<u64>()));
        }
    }
    let failures: Vec<String> = inputs
        .par_iter()
        .filter_map(|(t, seed)| {
            let mut rng = StdRng::seed_from_u64(*seed);
            let base = rectify(t).ok()?;
            (0..50)
                .any(|_| rectify_with(t, |cs| rng.gen_range(0..cs.len())).map(|(r, _)| r) != Ok(base.clone()))
                .then(|| t.render())
        })
        .collect();
    check(failures.is_empty(), || format!("{} inputs not confluent, first:\n{}", failures.len(), failures[0]))?;
    Ok(format!("{} inputs x 50 orders", inputs.len()))
}

fn involution_failure(s: &ShiftedTableau, t: &ShiftedTableau, modified: bool, log: &PathLog) -> Option<String> {
    let run = |a: &ShiftedTableau, b: &ShiftedTableau| {
        if modified {
            mswitch_tableaux(a, b, Order::Standard)
        } else {
            switch_tableaux(a, b, Order::Standard)
        }
    };
    let describe = |why: String| format!("{why}\nS:\n{}T:\n{}", s.render(), t.render());
    let out = match run(s, t) {
        Ok(o) => o,
        Err(e) => return Some(describe(e.to_string())),
    };
    log.record(&out);
    let back = match run(&out.inner, &out.outer) {
        Ok(o) => o,
        Err(e) => return Some(describe(format!("second pass: {e}"))),
    };
    log.record(&back);
    (back.inner != *s || back.outer != *t).then(|| describe("not an involution".into()))
}

fn criterion_5(log: &PathLog) -> Outcome {
    let triples = nested_triples(INVOLUTION_MAX_OUTER, INVOLUTION_MAX_CELLS);
    let mut summary = Vec::new();
    for (modified, mode) in [(false, Mode::Syt), (true, Mode::Ssyt)] {
        let cases = AtomicUsize::new(0);
        let failures: Vec<String> = triples
            .par_iter()
            .flat_map_iter(|(rho, lambda, nu)| {
                let ss = all_tableaux(rho, lambda, 2, mode);
                let ts = all_tableaux(lambda, nu, 2, mode);
                cases.fetch_add(ss.len() * ts.len(), Ordering::Relaxed);
                let mut fails = Vec::new();
                for s in &ss {
                    for t in &ts {
                        if let Some(f) = involution_failure(s, t, modified, log) {
                            fails.push(f);
                        }
                    }
                }
                fails
            })
            .collect();
        let name = if modified { "modified" } else { "plain" };
        check(failures.is_empty(), || format!("{name}: {} failures, first: {}", failures.len(), failures[0]))?;
        let random_failures: Vec<String> = (0..RANDOM_PAIRS as u64)
            .into_par_iter()
            .filter_map(|seed| {
                let mut rng = StdRng::seed_from_u64(seed ^ if modified { 0xabc } else { 0x123 });
                let (s, t) = random_pair(&mut rng, 9..=16, 4, mode);
                involution_failure(&s, &t, modified, log)
            })
            .collect();
        check(random_failures.is_empty(), || format!("{name} random: {} failures, first: {}", random_failures.len(), random_failures[0]))?;
        summary.push(format!("{name}: {} exhaustive + {RANDOM_PAIRS} random", cases.into_inner()));
    }
    Ok(summary.join("; "))
}

fn criterion_6() -> Outcome {
    let normal: Vec<StrictPartition> = strict_upto(6).into_iter().filter(|p| !p.is_empty()).collect();
    let evac_cases: Vec<ShiftedTableau> = normal.iter().flat_map(|l| all_tableaux(&StrictPartition::empty(), l, 3, Mode::Syt)).collect();
    let bad: Vec<String> = evac_cases
        .par_iter()
        .filter(|s| evacuate(s).ok() != j_operation(s).ok() || evacuate(s).is_err())
        .map(|s| s.render())
        .collect();
    check(bad.is_empty(), || format!("S^E != S^J for {} tableaux, first:\n{}", bad.len(), bad[0]))?;

    let mut pairs = Vec::new();
    for nu in strict_upto(7) {
        for lambda in nu.subpartitions() {
            pairs.push((lambda, nu.clone()));
        }
    }
    let cases = AtomicUsize::new(0);
    let bad: Vec<String> = pairs
        .par_iter()
        .flat_map_iter(|(lambda, nu)| {
            let ss = all_tableaux(&StrictPartition::empty(), lambda, JSWITCH_MAX_ENTRY, Mode::Syt);
            let ts = all_tableaux(lambda, nu, JSWITCH_MAX_ENTRY, Mode::Syt);
            cases.fetch_add(ss.len() * ts.len(), Ordering::Relaxed);
            let mut fails = Vec::new();
            for s in &ss {
                for t in &ts {
                    match check_thm_jswitch(s, t) {
                        Ok(r) if r.holds() && r.diagram_commutes() => {}
                        Ok(_) => fails.push(format!("identity fails\nS:\n{}T:\n{}", s.render(), t.render())),
                        Err(e) => fails.push(format!("{e}\nS:\n{}T:\n{}", s.render(), t.render())),
                    }
                }
            }
            fails
        })
        .collect();
    check(bad.is_empty(), || format!("{} J-switch failures, first: {}", bad.len(), bad[0]))?;
    Ok(format!("{} evacuations, {} J-switch pairs", evac_cases.len(), cases.into_inner()))
}

fn criterion_7() -> Outcome {
    let report = verify_identities(9, &Identity::ALL);
    check(report.is_ok(), || format!("{} failures, first: {}", report.failures.len(), report.failures[0]))?;
    Ok(format!("{} cases", report.total_cases()))
}

/// Every `(ν, λ, μ)` with `|ν| ≤ n`, `λ ⊆ ν`, `|μ| = |ν/λ|`.
fn lr_triples(n: usize) -> Vec<(StrictPartition, StrictPartition, StrictPartition)> {
    let mut out = Vec::new();
    for nu in strict_upto(n) {
        for lambda in nu.subpartitions() {
            for mu in StrictPartition::all_of_size(nu.size() - lambda.size()) {
                out.push((nu.clone(), lambda.clone(), mu));
            }
        }
    }
    out
}

fn criterion_8() -> Outcome {
    let triples = lr_triples(8);
    let checked = AtomicUsize::new(0);
    let bad: Vec<String> = triples
        .par_iter()
        .flat_map_iter(|(nu, lambda, mu)| {
            let mut fails = Vec::new();
            for (modified, ts) in [(false, lrs_tableaux(nu, lambda, mu)), (true, modified_lrs_tableaux(nu, lambda, mu))] {
                if ts.is_empty() {
                    continue;
                }
                let mode = if modified { Mode::Ssyt } else { Mode::Syt };
                for rho in lambda.subpartitions() {
                    let ss = all_tableaux(&rho, lambda, PRESERVATION_MAX_ENTRY, mode);
                    for t in &ts {
                        for s in &ss {
                            checked.fetch_add(1, Ordering::Relaxed);
                            let out = if modified { mswitch_tableaux(s, t, Order::Standard) } else { switch_tableaux(s, t, Order::Standard) };
                            let ok = match &out {
                                Ok(o) => {
                                    let w = o.inner.reading_word();
                                    let good = if modified { is_lattice(&w).lattice } else { is_lrs_word(&w) };
                                    good && o.inner.weight().ok().as_deref() == Some(mu.parts())
                                }
                                Err(_) => false,
                            };
                            if !ok {
                                fails.push(format!("({nu},{lambda},{mu}) modified={modified}\nS:\n{}T:\n{}", s.render(), t.render()));
                            }
                        }
                    }
                }
            }
            fails
        })
        .collect();
    check(bad.is_empty(), || format!("{} failures, first: {}", bad.len(), bad[0]))?;

    // The other side: S an LR tableau, T any compatible outer tableau.
    let outer_checked = AtomicUsize::new(0);
    let bad: Vec<String> = triples
        .par_iter()
        .flat_map_iter(|(lambda, rho, weight)| {
            let mut fails = Vec::new();
            for (modified, ss) in [(false, lrs_tableaux(lambda, rho, weight)), (true, modified_lrs_tableaux(lambda, rho, weight))] {
                if ss.is_empty() {
                    continue;
                }
                let mode = if modified { Mode::Ssyt } else { Mode::Syt };
                for nu in strict_upto(8).into_iter().filter(|nu| nu.contains(lambda)) {
                    let ts = all_tableaux(lambda, &nu, PRESERVATION_MAX_ENTRY, mode);
                    for s in &ss {
                        for t in &ts {
                            outer_checked.fetch_add(1, Ordering::Relaxed);
                            let out = if modified { mswitch_tableaux(s, t, Order::Standard) } else { switch_tableaux(s, t, Order::Standard) };
                            let ok = out.is_ok_and(|o| {
                                let w = o.outer.reading_word();
                                if modified { is_lattice(&w).lattice } else { is_lrs_word(&w) }
                            });
                            if !ok {
                                fails.push(format!("outer side ({lambda},{rho},{weight}) modified={modified}\nS:\n{}T:\n{}", s.render(), t.render()));
                            }
                        }
                    }
                }
            }
            fails
        })
        .collect();
    check(bad.is_empty(), || format!("{} failures, first: {}", bad.len(), bad[0]))?;
    Ok(format!("{} inner-side and {} outer-side switchings", checked.into_inner(), outer_checked.into_inner()))
}

fn criterion_9(log: &PathLog) -> Outcome {
    let counts = log.counts.lock().unwrap().clone();
    let untyped = log.untyped.load(Ordering::Relaxed);
    let total: usize = counts.values().sum();
    check(untyped == 0 && total > 0, || format!("{untyped} paths without a type"))?;
    Ok(format!("{total} paths: {counts:?}"))
}

type Criterion<'a> = (usize, &'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let log = PathLog::default();
    let criteria: Vec<Criterion> = vec![
        (1, "perforated pair switch", Duration::from_millis(10), Box::new(|| criterion_1(&log))),
        (2, "tableau switch, plain and modified", Duration::from_millis(10), Box::new(|| criterion_2(&log))),
        (3, "coefficients f=4, g=8", Duration::from_secs(1), Box::new(criterion_3)),
        (4, "rectification and confluence", Duration::from_secs(30), Box::new(criterion_4)),
        (5, "involutions", Duration::from_secs(300), Box::new(|| criterion_5(&log))),
        (6, "evacuation and J-switch", Duration::from_secs(300), Box::new(criterion_6)),
        (7, "oracle identities", Duration::from_secs(600), Box::new(criterion_7)),
        (8, "LRS preservation", Duration::from_secs(600), Box::new(criterion_8)),
        (9, "path discipline", Duration::from_secs(1), Box::new(|| criterion_9(&log))),
    ];
    let mut failed = 0;
    for (n, name, limit, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *limit => Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {n} PASS  {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("criterion {n} FAIL  {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
