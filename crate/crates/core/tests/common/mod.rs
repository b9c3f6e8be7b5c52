//! Shared test oracles and property checks. The oracle here deliberately
//! shares no code with the library search.
#![allow(dead_code)]

use bhr_core::constructions::library::standard_1x;
use bhr_core::constructions::multiple_tx::tx_hypotheses;
use bhr_core::constructions::*;
use bhr_core::constructions::shared;
use bhr_core::equivalence::{equivalent_forms, f_bound};
use bhr_core::path::{complement, concatenate, lengths};
use bhr_core::search::{dfs_realize, SearchTask};
use bhr_core::verify::{admissibility, verify};
use bhr_core::{EdgeMultiset, Mode, PathSeq};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

/// Walks vertex orderings in lexicographic order, extending a prefix only
/// while its length counts stay within the target.
pub fn permutation_filter(target: &EdgeMultiset, v: usize, cyclic: bool, first: Option<usize>) -> Option<Vec<usize>> {
    let want: Vec<(usize, usize)> = target.iter().collect();
    let mut need = vec![0usize; v + 1];
    for &(l, c) in &want {
        if l > v {
            return None;
        }
        need[l] = c;
    }
    fn rec(v: usize, cyclic: bool, need: &mut [usize], seq: &mut Vec<usize>, taken: &mut [bool]) -> bool {
        if seq.len() == v {
            return true;
        }
        let u = *seq.last().unwrap();
        for w in 0..v {
            if taken[w] {
                continue;
            }
            let d = u.abs_diff(w);
            let d = if cyclic { d.min(v - d) } else { d };
            if need[d] == 0 {
                continue;
            }
            need[d] -= 1;
            taken[w] = true;
            seq.push(w);
            if rec(v, cyclic, need, seq, taken) {
                return true;
            }
            seq.pop();
            taken[w] = false;
            need[d] += 1;
        }
        false
    }
    let starts: Vec<usize> = match first {
        Some(s) => vec![s],
        None => (0..v).collect(),
    };
    for s in starts {
        let mut taken = vec![false; v];
        taken[s] = true;
        let mut seq = vec![s];
        if rec(v, cyclic, &mut need, &mut seq, &mut taken) {
            return Some(seq);
        }
    }
    None
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() })
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn permutation(max_v: usize) -> impl Strategy<Value = Vec<usize>> {
    (2..=max_v).prop_flat_map(|v| Just((0..v).collect::<Vec<_>>()).prop_shuffle())
}

fn standard_perm(max_v: usize) -> impl Strategy<Value = PathSeq> {
    (1..=max_v).prop_flat_map(|v| {
        Just((1..v).collect::<Vec<_>>()).prop_shuffle().prop_map(move |mut rest| {
            rest.insert(0, 0);
            PathSeq::new(v, rest).unwrap()
        })
    })
}

pub type PropResult = Result<(), String>;

fn run<S: Strategy>(cases: u32, s: S, f: impl Fn(S::Value) -> Result<(), TestCaseError>) -> PropResult
where
    S::Value: std::fmt::Debug,
{
    runner(cases).run(&s, f).map_err(|e| e.to_string())
}

/// Complementing a path leaves both length multisets unchanged.
pub fn complement_invariance(cases: u32) -> PropResult {
    run(cases, permutation(40), |vs| {
        let p = PathSeq::spanning(vs).unwrap();
        let c = complement(&p).unwrap();
        for mode in [Mode::Linear, Mode::Cyclic] {
            check(lengths(&p, mode).unwrap() == lengths(&c, mode).unwrap(), || format!("{p:?}"))?;
        }
        Ok(())
    })
}

/// Concatenation realizes the union, and is standard exactly when the
/// second factor is perfect.
pub fn concatenation_additivity(cases: u32) -> PropResult {
    run(cases, (standard_perm(12), standard_perm(12)), |(g, h)| {
        let joined = concatenate(&g, &h, 0).unwrap();
        let want = lengths(&g, Mode::Linear).unwrap().union(&lengths(&h, Mode::Linear).unwrap());
        check(lengths(&joined, Mode::Linear).unwrap() == want, || format!("{g:?} {h:?}"))?;
        check(joined.is_hamiltonian(), || "not Hamiltonian".into())?;
        check(joined.is_standard() == h.is_perfect(), || format!("standardness of {joined:?}"))?;
        if g.is_perfect() && h.is_perfect() {
            check(joined.is_perfect(), || "perfect ∘ perfect".into())?;
        }
        Ok(())
    })
}

fn verified(r: &Realization, x: usize, y: usize) -> Result<(), TestCaseError> {
    let rep = verify(&r.path, &r.target, Mode::Linear);
    check(rep.matches_target, || format!("{} fails verification: {:?}", r.certificate.rule, rep.first_mismatch))?;
    let (a, b, c) = (r.target.count(1), r.target.count(x), r.target.count(y));
    check(c == 0 || a + b + 1 >= y, || format!("hop bound violated by {}", r.target))
}

/// Every construction whose hypotheses hold succeeds and verifies.
pub fn constructions_verify(cases: u32) -> PropResult {
    run(cases, (2usize..=14, 1usize..=80), |(y, c)| {
        let r = omega_realization(y, c).map_err(|e| TestCaseError::fail(e.to_string()))?;
        verified(&r, 1, y)
    })?;
    // Stretching any library guide.
    run(cases, (2usize..=6, 0usize..=6, 1usize..=5, prop::bool::ANY), |(x, extra, k, one)| {
        let y = x + 1 + extra + (x - 1);
        let b = (extra + 1).min(y - 1);
        let a = y - 1 - b;
        let Some(g) = standard_1x(x, a, b) else { return Ok(()) };
        let c = k * y + usize::from(one);
        let r = stretch_y(x, y, &g, c).map_err(|e| TestCaseError::fail(e.to_string()))?;
        verified(&r, x, y)
    })?;
    // Odd x, whenever its hypotheses hold.
    run(cases, (1usize..=3, 0usize..=12, 0usize..=24, 0usize..=30, 1usize..=60), |(h, dy, a, b, c)| {
        let x = 2 * h + 1;
        let y = 2 * x - 1 + dy;
        if !shared::odd_x_applies(x, y, a, b) {
            return Ok(());
        }
        let r = odd_x(x, y, a, b, c).map_err(|e| TestCaseError::fail(format!("odd_x({x},{y},{a},{b},{c}): {e}")))?;
        verified(&r, x, y)
    })?;
    // At or above the refined bound; even x is only partly constructive.
    run(cases, (1usize..=4, 1usize..=12, 0usize..=3, 0usize..=20, 1usize..=60), |(h, dy, da, b, c)| {
        let x = 2 * h + 1;
        let y = x + dy;
        let a = f_bound(x, y) + da;
        let r = near_bound(x, y, a, b, c)
            .map_err(|e| TestCaseError::fail(format!("near_bound({x},{y},{a},{b},{c}): {e}")))?;
        verified(&r, x, y)
    })?;
    // Odd x, even y, both shapes.
    run(cases, (1usize..=8, 1usize..=40, 0usize..=6, 0usize..=6, prop::bool::ANY), |(h, c, da, db, exact)| {
        let x = 2 * h + 1;
        for y in (x + 2..=2 * x).filter(|y| y % 2 == 0) {
            let (a, b) = if exact {
                let d = 2 * (db % (y - x + 1).div_ceil(2));
                if d >= y - x {
                    continue;
                }
                (y - 1 - d, d)
            } else {
                (2 * x + da, y - x - 1 + db)
            };
            let r = odd_x_even_y(x, y, a, b, c)
                .map_err(|e| TestCaseError::fail(format!("odd_x_even_y({x},{y},{a},{b},{c}): {e}")))?;
            verified(&r, x, y)?;
        }
        Ok(())
    })?;
    // Multiples: whenever a published hypothesis holds.
    run(cases, (1usize..=4, 2usize..=4, 0usize..=3, 0usize..=40, 1usize..=40), |(h, t, da, b, c)| {
        let x = 2 * h + 1;
        let a = bhr_core::constructions::omega::omega(x, b + c) + da;
        if !tx_hypotheses(x, t, a, b, c).any() {
            return Ok(());
        }
        let r = multiple_tx(x, t, a, b, c)
            .map_err(|e| TestCaseError::fail(format!("multiple_tx({x},{t},{a},{b},{c}): {e}")))?;
        verified(&r, x, t * x)
    })?;
    // Perfect even-x cores.
    run(cases, (1usize..=6, 0usize..=6, prop::bool::ANY), |(h, s, a)| {
        let x = 2 * h;
        let variant = if a { PerfectVariant::A } else { PerfectVariant::B };
        match perfect_even_x(x, s, variant) {
            Ok(r) => {
                check(r.path.is_perfect(), || "not perfect".into())?;
                verified(&r, x, x)
            }
            Err(_) => check((a && s == 0) || (!a && x < 4), || format!("perfect_even_x({x},{s},{variant:?})")),
        }
    })
}

/// Every linear realization the oracle finds satisfies `a + b ≥ y - 1`.
pub fn hop_bound_on_oracle(cases: u32) -> PropResult {
    run(cases, (2usize..=4, 1usize..=4, 0usize..=6, 0usize..=6, 1usize..=4), |(x, dy, a, b, c)| {
        let y = x + dy;
        let v = a + b + c + 1;
        let target = EdgeMultiset::triple(x, y, a, b, c);
        let mut task = SearchTask::new(target, v, Mode::Linear);
        task.hop_prune = false;
        let rep = dfs_realize(&task).unwrap();
        if rep.found().is_some() {
            check(a + b + 1 >= y, || format!("oracle realized {{1^{a},{x}^{b},{y}^{c}}}"))?;
        }
        Ok(())
    })
}

/// Transforming a form again gives back the same three supports.
pub fn equivalence_closure(cases: u32) -> PropResult {
    run(cases, (10usize..=300, 2usize..=60, 3usize..=80), |(v, x, y)| {
        let (x, y) = (x.min(y), x.max(y));
        if x == y || y > v / 2 {
            return Ok(());
        }
        let Ok(e) = equivalent_forms(x, y, v) else { return Ok(()) };
        let mut base: Vec<(usize, usize)> = e.all().iter().map(|f| (f.x, f.y)).collect();
        base.sort();
        for f in [e.form_a, e.form_b] {
            if f.degenerate {
                continue;
            }
            let again = equivalent_forms(f.x, f.y, v).unwrap();
            let mut sup: Vec<(usize, usize)> = again.all().iter().map(|g| (g.x, g.y)).collect();
            sup.sort();
            check(sup == base, || format!("v={v}: {base:?} vs {sup:?}"))?;
        }
        Ok(())
    })
}

/// Scaling by a unit preserves (strong) admissibility.
pub fn admissibility_scaling(cases: u32) -> PropResult {
    let strat = (3usize..=60).prop_flat_map(|v| {
        (Just(v), prop::collection::vec(1..=v / 2, v - 1), 1..v)
    });
    run(cases, strat, |(v, lens, s)| {
        if bhr_core::arith::gcd(s, v) != 1 {
            return Ok(());
        }
        let l: EdgeMultiset = lens.iter().copied().collect();
        let scaled: EdgeMultiset = lens.iter().map(|&g| bhr_core::arith::reduced_form(g * s % v, v).unwrap()).collect();
        let (p, q) = (admissibility(&l, v).unwrap(), admissibility(&scaled, v).unwrap());
        check(p.admissible == q.admissible && p.strongly_admissible == q.strongly_admissible, || format!("v={v} s={s}"))
    })
}

fn substitution_case() -> impl Strategy<Value = (usize, usize, usize, PathSeq)> {
    (1usize..=3, 3usize..=24, 1usize..=5).prop_flat_map(|(h, b, w)| {
        let x = 2 * h + 1;
        let m = Just((1..=w).collect::<Vec<_>>()).prop_shuffle().prop_map(move |mut rest| {
            rest.insert(0, 0);
            PathSeq::new(w + 1, rest).unwrap()
        });
        (Just(x), Just(b), 0usize..64, m)
    })
}

/// Substitution keeps both ends for pairs and internal runs, the start for
/// terminal runs, and turns only x-edges into multiples of x.
pub fn substitution_endpoints(cases: u32) -> PropResult {
    run(cases, substitution_case(), |(x, b, start, m)| {
        let Some(host) = standard_1x(x, 2 * x + 4, b) else { return Ok(()) };
        let start = start % host.len();
        let before = lengths(&host, Mode::Linear).unwrap();
        for kind in [SubstitutionKind::Internal, SubstitutionKind::Pair, SubstitutionKind::Terminal] {
            let Ok(out) = substitute_fauxset(&host, x, start, &m, kind) else { continue };
            check(out.is_hamiltonian(), || "lost a vertex".into())?;
            check(out.first() == host.first(), || format!("{kind:?} moved the start"))?;
            if kind != SubstitutionKind::Terminal {
                check(out.last() == host.last(), || format!("{kind:?} moved the end"))?;
            }
            let after = lengths(&out, Mode::Linear).unwrap();
            check(after.count(1) == before.count(1), || format!("{kind:?} changed the 1-edges"))?;
            check(after.iter().all(|(l, _)| l == 1 || l % x == 0), || format!("{kind:?} made {after}"))?;
            check(after.size() == before.size(), || "edge count changed".into())?;
        }
        Ok(())
    })
}

/// The dispatcher rejects exactly the inadmissible inputs, and its
/// constructive verdicts always verify cyclically.
pub fn dispatcher_soundness(cases: u32) -> PropResult {
    run(cases, (2usize..=8, 1usize..=10, 0usize..=20, 0usize..=12, 0usize..=40), |(x, dy, a, b, c)| {
        let y = x + dy;
        let v = a + b + c + 1;
        if y > v / 2 {
            return Ok(());
        }
        let l = EdgeMultiset::triple(x, y, a, b, c);
        let verdict = construct_any(&l, v).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let adm = admissibility(&l, v).unwrap();
        match &verdict {
            Verdict::Constructive { path, .. } => {
                check(verify(path, &l, Mode::Cyclic).matches_target, || format!("{l} at {v}"))?;
            }
            Verdict::Rejected { .. } => check(!adm.admissible, || format!("admissible {l} at {v} rejected"))?,
            _ => check(adm.admissible, || format!("inadmissible {l} at {v} accepted"))?,
        }
        Ok(())
    })
}

/// Every illustrated multiset, each built by the construction that draws it.
pub fn figure_realizations() -> Vec<(EdgeMultiset, bhr_core::Result<Realization>)> {
    use bhr_core::constructions::near_bound::single_x_sweep;
    use bhr_core::constructions::stretch::guide_search;
    let t = EdgeMultiset::triple;
    let guide = PathSeq::new(7, vec![0, 3, 6, 5, 2, 1, 4]).unwrap();
    vec![
        (EdgeMultiset::from_pairs([(1, 7), (8, 22)]), omega_realization(8, 22)),
        (t(5, 8, 5, 2, 21), odd_x_even_y(5, 8, 5, 2, 21)),
        (EdgeMultiset::from_pairs([(1, 6), (7, 18)]), omega_realization(7, 18)),
        (EdgeMultiset::from_pairs([(1, 9), (9, 23)]), omega_realization(9, 23)),
        (t(3, 7, 2, 4, 15), stretch_y(3, 7, &guide, 15)),
        (t(3, 9, 3, 5, 22), guide_search(3, 9, 3, 5, 22)),
        (t(3, 16, 5, 10, 42), shared_fauxset(3, 16, SharedSplit { a1: 3, b1: 6, a2: 2, b2: 4 }, 42, false)),
        (t(3, 16, 5, 11, 42), shared_fauxset(3, 16, SharedSplit { a1: 3, b1: 3, a2: 2, b2: 7 }, 42, true)),
        (t(5, 9, 7, 1, 25), single_x_sweep(5, 9, 25, false)),
        (t(11, 16, 11, 4, 36), odd_x_even_y(11, 16, 11, 4, 36)),
        (t(7, 14, 6, 8, 10), multiple_tx(7, 2, 6, 8, 10)),
        (t(9, 18, 9, 14, 9), multiple_tx(9, 2, 9, 14, 9)),
        (EdgeMultiset::from_pairs([(1, 7), (6, 12)]), perfect_even_x(6, 1, PerfectVariant::B)),
        (EdgeMultiset::from_pairs([(1, 8), (6, 20)]), perfect_even_x(6, 2, PerfectVariant::A)),
    ]
}

/// `None` when the realization is a verified linear realization of exactly `want`.
pub fn figure_failure(want: &EdgeMultiset, r: &bhr_core::Result<Realization>) -> Option<String> {
    match r {
        Err(e) => Some(format!("{want}: {e}")),
        Ok(r) if &r.target != want => Some(format!("{want}: built {}", r.target)),
        Ok(r) => {
            let rep = verify(&r.path, want, Mode::Linear);
            (!rep.matches_target).then(|| format!("{want}: mismatch {:?}", rep.first_mismatch))
        }
    }
}

/// The residual triples listed for `{1, 6, 18}` at `v = 59`.
pub const V59_PUBLISHED: [(usize, usize, usize); 10] = [
    (13, 6, 39),
    (14, 5, 39),
    (14, 6, 38),
    (15, 4, 39),
    (15, 5, 38),
    (15, 6, 37),
    (16, 3, 39),
    (16, 4, 38),
    (16, 5, 37),
    (16, 6, 36),
];
