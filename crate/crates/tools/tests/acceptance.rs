//! The eight acceptance criteria, run in order with one PASS/FAIL line each.
//! Criteria run sequentially in a single test so wall-clock limits are not
//! distorted by other tests sharing the machine.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use braidcat::derive::derived_pair;
use braidcat::examples::{b1, b2, b3, b4};
use braidcat::fincat::instances::{cyclic_discrete, signed_cyclic, truncated_sum};
use braidcat::fincat::{
    check_enriched, check_kfold, check_monoidal, check_symmetry, enriched_tables_equal, eta_from_symmetry,
    product_enriched, unit_enriched, verify_theorem41, Cell, EnrichedCell, FinEnrichedCategory, FinMonoidalInstance,
};
use braidcat::lk::LkRepresentation;
use braidcat::relations::shuffle;
use braidcat::{
    braids_equal, check, derived_braid, handle_equal, left_normal_form, underlying_permutation, BraidWord, CheckKind,
    DerivedKind, HandleVerdict, Letter, DEFAULT_FUEL,
};
use braidcat_tools::{fuzz, scans, search};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn criterion_1() -> Outcome {
    let rep = LkRepresentation::new(6).map_err(|e| e.to_string())?;
    let bs = [b1(), b2(), b3(), b4()];
    let mut table = Vec::new();
    for (kind, expect) in [(CheckKind::Assoc, [true, false, true, false]), (CheckKind::Funct, [true, true, false, false])] {
        for (b, want) in bs.iter().zip(expect) {
            let (x, y) = derived_pair(b, kind).map_err(|e| e.to_string())?;
            let nf = braids_equal(&x, &y);
            let handle = handle_equal(&x, &y, DEFAULT_FUEL).map_err(|e| e.to_string())?;
            let lk = rep.equal(&x, &y).map_err(|e| e.to_string())?;
            ensure!(handle != HandleVerdict::BudgetExhausted, "handle budget exhausted on [{b}] {kind:?}");
            ensure!((handle == HandleVerdict::Equal) == nf && lk == nf, "oracles disagree on [{b}] {kind:?}");
            ensure!(check(b, kind).map_err(|e| e.to_string())? == nf, "check disagrees with oracles");
            ensure!(nf == want, "[{b}] {kind:?}: got {nf}, expected {want}");
            table.push(if nf { 'T' } else { 'F' });
        }
    }
    let t: String = table.iter().collect();
    Ok(format!("assoc {} funct {}, 3 oracles agree on 8 pairs", &t[..4], &t[4..]))
}

fn criterion_2() -> Outcome {
    let w = |s: &[i32]| BraidWord::from_signed(6, s);
    for (kind, want) in [
        (DerivedKind::L, w(&[2, 4, 3])),
        (DerivedKind::R, w(&[4, 2, 3])),
        (DerivedKind::FL, w(&[3, 2, 4])),
        (DerivedKind::FR, w(&[3, 4, 2])),
    ] {
        let got = derived_braid(&b1(), kind).map_err(|e| e.to_string())?;
        ensure!(braids_equal(&got, &want), "{kind:?}(σ2) = [{got}], expected [{want}]");
    }
    Ok("L, R, FL, FR of σ2 match".into())
}

fn criterion_3() -> Outcome {
    let r = scans::coset_scan(3, 0).map_err(|e| e.to_string())?;
    ensure!(r.total == 343, "{} coset elements", r.total);
    ensure!(r.failures.is_empty(), "failures at {:?}", r.failures);
    Ok(format!("{}/{} coset elements have L = R", r.passed, r.total))
}

fn criterion_4() -> Outcome {
    let r = scans::obstruction_scan(10, 0).map_err(|e| e.to_string())?;
    ensure!(r.witnesses.is_empty(), "witnesses: {:?}", r.witnesses);
    Ok(format!("{} words, {} classes, 0 witnesses", r.words_enumerated, r.classes))
}

fn criterion_5() -> Outcome {
    let r = search::conjecture_search(6, 0).map_err(|e| e.to_string())?;
    let s2 = BraidWord::from_signed(4, &[2]);
    for target in [s2.clone(), s2.invert()] {
        let found = r.survivors.iter().any(|s| braids_equal(&BraidWord::parse(&s.word, 4).unwrap(), &target));
        ensure!(found, "class of [{target}] missing from survivors");
    }
    ensure!(r.survivors.iter().all(|s| s.assoc && s.funct && s.oracles_agree), "unconfirmed survivor");
    ensure!(
        r.survivors.iter().all(|s| underlying_permutation(&BraidWord::parse(&s.word, 4).unwrap())
            == braidcat::derive::candidate_permutation()),
        "survivor with the wrong permutation"
    );
    Ok(format!(
        "{} classes, {} survivors, {} additional (triple-confirmed)",
        r.classes_after_dedup,
        r.survivors.len(),
        r.counterexamples
    ))
}

fn criterion_6() -> Outcome {
    let r = fuzz::oracle_fuzz(1000, 1, 0).map_err(|e| e.to_string())?;
    ensure!(r.disagreements.is_empty(), "{} disagreements, first {:?}", r.disagreements.len(), r.disagreements[0]);
    Ok(format!("1000 pairs ({} equal, {} unequal), 0 disagreements", r.equal_pairs, r.unequal_pairs))
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.random_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let i = rng.random_range(1..n);
            if rng.random_bool(0.5) {
                Letter::pos(i)
            } else {
                Letter::neg(i)
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for case in 0..500 {
        let n = rng.random_range(2..=6);
        let w = random_word(&mut rng, n, 12);
        let v = shuffle(&w, 20, |k| rng.random_range(0..k));
        ensure!(left_normal_form(&w) == left_normal_form(&v), "shuffle case {case}: [{w}] vs [{v}]");
    }
    for case in 0..500 {
        let n = rng.random_range(2..=6);
        let (a, b) = (random_word(&mut rng, n, 12), random_word(&mut rng, n, 12));
        let lhs = a.compose(&b).unwrap().rot180();
        let rhs = b.rot180().compose(&a.rot180()).unwrap();
        ensure!(braids_equal(&lhs, &rhs), "rot180 case {case}: [{a}] [{b}]");
    }
    for case in 0..500 {
        let n = rng.random_range(2..=6);
        let (a, b) = (random_word(&mut rng, n, 12), random_word(&mut rng, n, 12));
        let (pa, pb) = (underlying_permutation(&a), underlying_permutation(&b));
        let p = underlying_permutation(&a.compose(&b).unwrap());
        ensure!((0..n).all(|i| p.apply(i) == pb.apply(pa.apply(i))), "σ case {case}: [{a}] [{b}]");
    }
    Ok("3 × 500 cases".into())
}

fn random_quasi_metric(rng: &mut ChaCha8Rng, n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut d: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| if a == b { 0 } else { rng.random_range(1..=max) }).collect())
        .collect();
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                d[a][b] = d[a][b].min(d[a][k] + d[k][b]);
            }
        }
    }
    d
}

fn potential_category(v: &FinMonoidalInstance, phi: &[usize], n: usize) -> FinEnrichedCategory {
    let k = phi.len();
    let hom = (0..k).flat_map(|a| (0..k).map(move |b| (phi[b] + n - phi[a]) % n)).collect();
    FinEnrichedCategory::induced(v, k, hom).unwrap()
}

/// Products over every valid index, unit laws, and the functor obligations.
fn theorem_checks(v: &FinMonoidalInstance, k: usize, samples: &[FinEnrichedCategory]) -> Result<usize, String> {
    let kf = check_kfold(v, k).map_err(|e| e.to_string())?;
    ensure!(kf.passed(), "{k}-fold check failed: {kf}");
    let u = unit_enriched(v);
    let mut products = 0;
    for (t, a) in samples.iter().enumerate() {
        ensure!(check_enriched(v, a).map_err(|e| e.to_string())?.passed(), "sample {t} is not enriched");
        let b = &samples[(t + 1) % samples.len()];
        for i in 1..k {
            let p = product_enriched(v, a, b, i).map_err(|e| e.to_string())?;
            let r = check_enriched(v, &p).map_err(|e| e.to_string())?;
            ensure!(r.passed(), "product ⊗{i} of samples {t}: {r}");
            products += 1;
            for (side, q) in [("left", product_enriched(v, &u, a, i)), ("right", product_enriched(v, a, &u, i))] {
                let q = q.map_err(|e| e.to_string())?;
                ensure!(enriched_tables_equal(v, &q, a), "{side} unit law ⊗{i} fails for sample {t}");
            }
        }
    }
    let r = verify_theorem41(v, k, samples).map_err(|e| e.to_string())?;
    ensure!(r.passed(), "{r}");
    Ok(products)
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let metric_v = eta_from_symmetry(&truncated_sum(100), 2).map_err(|e| e.to_string())?;
    let metrics: Vec<_> = (0..50)
        .map(|_| FinEnrichedCategory::quasi_metric(&metric_v, &random_quasi_metric(&mut rng, 5, 60)).unwrap())
        .collect();
    let p1 = theorem_checks(&metric_v, 2, &metrics)?;

    let discrete_v = eta_from_symmetry(&cyclic_discrete(4), 3).map_err(|e| e.to_string())?;
    let potentials: Vec<_> = [&[0, 1][..], &[2, 3, 1], &[0, 2], &[1, 1, 3], &[3, 0], &[0, 1, 2, 3]]
        .iter()
        .map(|phi| potential_category(&discrete_v, phi, 4))
        .collect();
    let p2 = theorem_checks(&discrete_v, 3, &potentials)?;

    // Mutations: enriched cells of the metric samples, sign flips in the
    // signed 3-fold instance, and interchange cells seen through the
    // product construction.
    let mut detected = 0;
    let m = metric_v.base().morphisms();
    for sample in &metrics[..25] {
        let mut a = sample.clone();
        let cell = if rng.random_bool(0.8) {
            EnrichedCell::Comp { a: rng.random_range(0..5), b: rng.random_range(0..5), c: rng.random_range(0..5) }
        } else {
            EnrichedCell::Unit { a: rng.random_range(0..5) }
        };
        let old = a.get_cell(&metric_v, cell).unwrap();
        a.set_cell(cell, (old + rng.random_range(1..m)) % m).unwrap();
        ensure!(!check_enriched(&metric_v, &a).unwrap().passed(), "undetected enriched mutation {cell:?}");
        detected += 1;
    }
    let signed = eta_from_symmetry(&signed_cyclic(4).unwrap(), 3).map_err(|e| e.to_string())?;
    for _ in 0..25 {
        let o: Vec<usize> = (0..4).map(|_| rng.random_range(0..4)).collect();
        let (i, j) = [(1, 2), (1, 3), (2, 3)][rng.random_range(0..3)];
        let cell = match rng.random_range(0..4) {
            0 => Cell::Alpha { i: 1, u: o[0], v: o[1], w: o[2] },
            1 => Cell::Symmetry { x: o[0], y: o[1] },
            2 => Cell::Tensor { i: 1, f: rng.random_range(0..8), g: rng.random_range(0..8) },
            _ => Cell::Eta { i, j, a: o[0], b: o[1], c: o[2], d: o[3] },
        };
        let mut bad = signed.clone();
        let old = bad.get_cell(cell).unwrap();
        bad.set_cell(cell, old ^ 1).unwrap();
        let caught = !check_monoidal(&bad).passed()
            || !check_symmetry(&bad).unwrap().passed()
            || !check_kfold(&bad, 3).unwrap().passed();
        ensure!(caught, "undetected sign flip {cell:?}");
        detected += 1;
    }
    // Hom values reachable from the first window of four potentials.
    for [a, b, c, d] in [[0, 0, 0, 0], [1, 2, 2, 2], [3, 1, 0, 2], [0, 3, 2, 0], [1, 1, 0, 0]] {
        let mut bad = discrete_v.clone();
        let cell = Cell::Eta { i: 2, j: 3, a, b, c, d };
        let old = bad.get_cell(cell).unwrap();
        bad.set_cell(cell, discrete_v.base().id((old + 1) % 4)).unwrap();
        let r = verify_theorem41(&bad, 3, &potentials).unwrap();
        let e = r.first_failure().ok_or(format!("undetected interchange mutation {cell:?}"))?;
        ensure!(e.name.contains("giant hexagon"), "interchange mutation surfaced as {}", e.name);
        detected += 1;
    }
    Ok(format!(
        "50 metrics at K=100 ({p1} products), discrete k=3 ({p2} products), {detected}/{detected} mutations detected"
    ))
}

#[test]
fn acceptance() {
    type Criterion = (usize, &'static str, fn() -> Outcome, Duration);
    let criteria: [Criterion; 8] = [
        (1, "truth table with three oracles", criterion_1, Duration::from_secs(5)),
        (2, "derived braids of σ2", criterion_2, Duration::from_secs(1)),
        (3, "coset range 3", criterion_3, Duration::from_secs(60)),
        (4, "obstruction scan to length 10", criterion_4, Duration::from_secs(600)),
        (5, "conjecture search to length 6", criterion_5, Duration::from_secs(900)),
        (6, "oracle fuzz, 1000 pairs, seed 1", criterion_6, Duration::from_secs(120)),
        (7, "property suites", criterion_7, Duration::from_secs(120)),
        (8, "product construction at finite scale", criterion_8, Duration::from_secs(120)),
    ];
    let mut failed = Vec::new();
    for (n, name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > limit => Err(format!("{msg}; over time limit")),
            o => o,
        };
        let (tag, msg) = match &outcome {
            Ok(m) => ("PASS", m.clone()),
            Err(m) => ("FAIL", m.clone()),
        };
        // Written to the raw handle so the line survives libtest's capture.
        let line = format!("criterion {n} {tag} [{:.2}s / {}s] {name}: {msg}\n", took.as_secs_f64(), limit.as_secs());
        std::io::stderr().write_all(line.as_bytes()).unwrap();
        if outcome.is_err() {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
