//! End-to-end acceptance run: one PASS/FAIL line per criterion, each with
//! its own time limit. Exits non-zero if any criterion fails.

mod common;

use bhr_core::arith::{gcd, Ratio};
use bhr_core::constructions::omega::omega;
use bhr_core::constructions::{construct_any, omega_realization, Verdict};
use bhr_core::equivalence::{
    large_y_simplified, large_y_threshold, region_bounds, three_tx_residue, tx_residue_large_clause,
    tx_residue_threshold, BoundRule,
};
use bhr_core::search::region::{Rule, DEFAULT_PIPELINE};
use bhr_core::search::{dfs_realize, enumerate_region, sweep_support, SearchOutcome, SearchTask};
use bhr_core::verify::{admissibility, verify};
use bhr_core::{EdgeMultiset, Mode};
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn figures() -> Outcome {
    let built = common::figure_realizations();
    let failures: Vec<String> = built.iter().filter_map(|(want, r)| common::figure_failure(want, r)).collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("{} figure multisets verified", built.len()))
}

fn instance_accounting() -> Outcome {
    let pipeline = [Rule::SumBound, Rule::OddX];
    let r = enumerate_region(5, 32, 243, &pipeline).map_err(|e| e.to_string())?;
    let got = (r.total_candidates, r.per_rule[0].covered, r.residual.len());
    ensure(got == (666, 530, 136), || format!("v=243 gave {got:?}"))?;
    let r = enumerate_region(5, 32, 247, &pipeline).map_err(|e| e.to_string())?;
    ensure(r.residual.is_empty(), || format!("v=247 residual {}", r.residual.len()))?;
    Ok("666/530/136 at v=243, none at v=247".into())
}

fn sweep() -> Outcome {
    let s = sweep_support(6, 18, 2..=239, &DEFAULT_PIPELINE).map_err(|e| e.to_string())?;
    ensure(s.unresolved == [47, 49, 59], || format!("unresolved {:?}", s.unresolved))?;
    let r = enumerate_region(6, 18, 59, &DEFAULT_PIPELINE).map_err(|e| e.to_string())?;
    ensure(r.residual.len() == 15, || format!("v=59 residual {}", r.residual.len()))?;
    let missing: Vec<_> = common::V59_PUBLISHED.iter().filter(|t| !r.residual.contains(t)).collect();
    ensure(missing.is_empty(), || format!("v=59 residual lacks {missing:?}"))?;
    Ok("unresolved {47, 49, 59}; 15 left at v=59 including the 10 listed".into())
}

fn bound_certification() -> Outcome {
    let b = region_bounds(7, 13, 97, BoundRule::Plain).map_err(|e| e.to_string())?;
    ensure(b.threshold_sum == Some(69) && b.certified, || format!("{{1,7,13}}@97: {b:?}"))?;
    let b = region_bounds(10, 13, 97, BoundRule::Plain).map_err(|e| e.to_string())?;
    ensure(b.threshold_sum == Some(122) && !b.certified, || format!("{{1,10,13}}@97: {b:?}"))?;
    ensure(b.thresholds[0] == Some(23) && b.thresholds[1] == Some(40), || format!("{{1,10,13}}@97: {b:?}"))?;
    let b = region_bounds(6, 18, 131, BoundRule::Refined).map_err(|e| e.to_string())?;
    let got = (b.max_a, b.max_b, b.max_c);
    ensure(got == (Some(16), Some(23), Some(92)), || format!("{{1,6,18}}@131 maxima {got:?}, expected (16, 23, 92)"))?;
    Ok("69 < 99 certified; 122 not; v=131 maxima (16, 23, 92)".into())
}

fn omega_tightness() -> Outcome {
    let mut built = 0;
    for y in 2..=12 {
        for c in 1..=60 {
            let r = omega_realization(y, c).map_err(|e| format!("ω({y},{c}): {e}"))?;
            let want = EdgeMultiset::from_pairs([(1, omega(y, c)), (y, c)]);
            ensure(r.target == want && verify(&r.path, &want, Mode::Linear).matches_target, || {
                format!("ω({y},{c}) does not verify")
            })?;
            built += 1;
        }
    }
    let mut refuted = 0;
    for y in 3..=7 {
        for c in 1..=12 {
            let w = omega(y, c);
            let target = EdgeMultiset::from_pairs([(1, w - 1), (y, c)]);
            let task = SearchTask::new(target, w + c, Mode::Linear).standard();
            let rep = dfs_realize(&task).map_err(|e| e.to_string())?;
            ensure(rep.outcome == SearchOutcome::Exhausted, || {
                format!("{{1^{},{y}^{c}}}: {:?}", w - 1, rep.outcome)
            })?;
            refuted += 1;
        }
    }
    Ok(format!("{built} ω-realizations verified, {refuted} one-fewer cases exhausted"))
}

fn oracle_agreement() -> Outcome {
    let (mut instances, mut constructive) = (0, 0);
    for v in 4..=16 {
        for x in 2..=v / 2 {
            for y in x + 1..=v / 2 {
                if gcd(x, v) != 1 || gcd(y, v) != 1 {
                    continue;
                }
                for a in 1..v - 2 {
                    for b in 1..v - 1 - a {
                        let c = v - 1 - a - b;
                        let l = EdgeMultiset::triple(x, y, a, b, c);
                        if !admissibility(&l, v).map_err(|e| e.to_string())?.strongly_admissible {
                            continue;
                        }
                        instances += 1;
                        let rep = dfs_realize(&SearchTask::new(l.clone(), v, Mode::Cyclic)).map_err(|e| e.to_string())?;
                        let found = rep.found().is_some_and(|p| verify(p, &l, Mode::Cyclic).matches_target);
                        ensure(found, || format!("search finds no realization of {l} at v={v}: {:?}", rep.outcome))?;
                        if let Verdict::Constructive { path, .. } = construct_any(&l, v).map_err(|e| e.to_string())? {
                            ensure(verify(&path, &l, Mode::Cyclic).matches_target, || format!("{l} at v={v}"))?;
                            constructive += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{instances} strongly admissible instances realized, {constructive} constructive verdicts confirmed"))
}

fn property_suites() -> Outcome {
    let suites: [(&str, fn(u32) -> common::PropResult, u32); 6] = [
        ("complement", common::complement_invariance, 1000),
        ("concatenation", common::concatenation_additivity, 1000),
        ("post-verification", common::constructions_verify, 256),
        ("hop bound", common::hop_bound_on_oracle, 500),
        ("equivalence closure", common::equivalence_closure, 1000),
        ("unit scaling", common::admissibility_scaling, 1000),
    ];
    let failures: Vec<String> =
        suites.iter().filter_map(|(name, f, n)| f(*n).err().map(|e| format!("{name}: {e}"))).collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("{} suites, 0 failures", suites.len()))
}

fn arithmetic_predicates() -> Outcome {
    ensure(3 * 7 + 3 * 7 + 3 == 45 && tx_residue_large_clause(7, 7), || "t = x = 7".into())?;
    let mut points = 0;
    for t in 2..=41usize {
        for x in 3..=27usize {
            if (t, x) == (2, 3) {
                continue;
            }
            let (ti, xi) = (t as i128, x as i128);
            let den = ti * xi - ti - xi - 1;
            let direct = Ratio::new(ti * ti * xi * xi + ti * ti * xi + ti * xi * xi + ti + xi + 1, den);
            let got = tx_residue_threshold(t, x).map_err(|e| e.to_string())?;
            ensure(got == direct, || format!("threshold at t={t}, x={x}"))?;
            let k_below_two = ti * xi + ti + xi + 1 < 2 * den;
            ensure(tx_residue_large_clause(t, x) == k_below_two, || format!("clause at t={t}, x={x}"))?;
            points += 1;
        }
    }
    for t in 3..=1002usize {
        let ti = t as i128;
        let exact = tx_residue_threshold(t, 3).map_err(|e| e.to_string())?;
        let split = Ratio::int(6 * ti + 17) + Ratio::new(36, ti - 2);
        ensure(exact == split, || format!("x = 3 threshold at t={t}"))?;
        let stated = three_tx_residue(t, 1).threshold;
        ensure(stated == Ratio::int(6 * ti + 53) && exact <= stated, || format!("6t+53 at t={t}"))?;
        points += 1;
    }
    for x in 3..=1002usize {
        let xi = x as i128;
        let exact = large_y_threshold(x).map_err(|e| e.to_string())?;
        ensure(exact == Ratio::int(2 * xi + 6) + Ratio::new(13, xi - 2), || format!("large-y at x={x}"))?;
        let simple = Ratio::int(large_y_simplified(x) as i128);
        ensure(simple == Ratio::int(2 * xi + 19) && exact <= simple, || format!("2x+19 at x={x}"))?;
        points += 1;
    }
    Ok(format!("{points} grid points agree"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 8] = [
        ("figure reproduction", figures, Duration::from_secs(1)),
        ("instance accounting", instance_accounting, Duration::from_secs(1)),
        ("support sweep", sweep, Duration::from_secs(10)),
        ("bound certification", bound_certification, Duration::from_secs(1)),
        ("omega tightness", omega_tightness, Duration::from_secs(60)),
        ("oracle agreement", oracle_agreement, Duration::from_secs(600)),
        ("property suites", property_suites, Duration::from_secs(600)),
        ("arithmetic predicates", arithmetic_predicates, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if took <= *limit {
                Ok(msg)
            } else {
                Err(format!("{msg}, but took {took:.2?} (limit {limit:?})"))
            }
        });
        match outcome {
            Ok(msg) => println!("PASS {} {name} [{took:.2?}]: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name} [{took:.2?}]: {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
