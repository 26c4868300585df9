//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use twodom::bounds::{construct_2dominating, gamma2};
use twodom::cylinder::{
    is_2dominating, is_border_2dominating, random_2dominating, random_border_set, region_partition,
    wasted_2domination,
};
use twodom::omega::{omega_table, run_pipeline, DEFAULT_MAX_EXPLICIT};
use twodom::oracle::{gamma2_oracle, omega2_oracle_range};
use twodom::transfer::{build_transfer_digraph, build_transfer_matrix};
use twodom::tropical::{find_shift_periodicity, tpow};
use twodom::words::{
    generate_word_table, label_border_set, path_to_border_set, RuleEntry, WordTable,
};
use twodom::{CylinderSpec, Rules, TropicalValue};

use common::{geometric_follow, min_walk_weight, random_digraph};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Check {
    let table = generate_word_table().map_err(|e| e.to_string())?;
    ensure(table.len() == 111, || format!("{} words", table.len()))?;
    Ok("111 suitable words".into())
}

fn criterion_2() -> Check {
    let a = build_transfer_matrix::<i32>(&build_transfer_digraph().map_err(|e| e.to_string())?);
    let start = Instant::now();
    let cert = find_shift_periodicity(&a, 60).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(cert.triple() == (45, 1, 2), || {
        format!("certificate {:?}", cert.triple())
    })?;
    ensure(cert.verify(), || "certificate does not verify".into())?;
    ensure(elapsed < Duration::from_secs(10), || {
        format!("search took {elapsed:?}")
    })?;
    Ok(format!("(n0, a, b) = (45, 1, 2) in {elapsed:.2?}"))
}

fn criterion_3() -> Check {
    let table = omega_table().map_err(|e| e.to_string())?;
    for n in 16..=60usize {
        let expected = match n {
            16 => 33,
            19 => 39,
            _ => 2 * n as i64,
        };
        let got = table.omega2(n).map_err(|e| e.to_string())?;
        ensure(got == expected, || {
            format!("omega2({n}) = {got}, expected {expected}")
        })?;
    }
    Ok(table.describe())
}

fn criterion_4() -> Check {
    let table = omega_table().map_err(|e| e.to_string())?;
    let oracle = omega2_oracle_range(16, 24).map_err(|e| e.to_string())?;
    for (n, v) in &oracle {
        let pipeline = table.omega2(*n).map_err(|e| e.to_string())?;
        ensure(*v == pipeline, || {
            format!("n = {n}: oracle {v}, pipeline {pipeline}")
        })?;
    }
    let listed: Vec<String> = oracle.iter().map(|(n, v)| format!("{n}:{v}")).collect();
    Ok(format!(
        "oracle agrees on n = 16..24 ({})",
        listed.join(" ")
    ))
}

fn criterion_5() -> Check {
    for (m, n, expected) in [(8, 6, 20), (8, 9, 30)] {
        let got = gamma2_oracle(m, n).map_err(|e| e.to_string())?;
        ensure(got == expected, || {
            format!("gamma2({m}, {n}) = {got}, expected {expected}")
        })?;
    }
    Ok("gamma2(8, 6) = 20, gamma2(8, 9) = 30".into())
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let mut count = 0;
    for m in 13..=30usize {
        for n in [18usize, 21, 24, 27, 30] {
            let set = construct_2dominating(m, n).map_err(|e| format!("({m}, {n}): {e}"))?;
            ensure(is_2dominating(&set), || {
                format!("({m}, {n}) not 2-dominating")
            })?;
            ensure(set.len() == (m + 2) * n / 3, || {
                format!("({m}, {n}) has size {}", set.len())
            })?;
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{count} constructions valid with size (m+2)n/3"))
}

fn criterion_7() -> Check {
    let mut bracketed = 0;
    let cases = (8..=16usize)
        .flat_map(|m| [3usize, 6, 9].map(|n| (m, n)))
        .chain([(8, 12), (9, 12)]);
    for (m, n) in cases {
        let exact = gamma2_oracle(m, n).map_err(|e| e.to_string())? as i64;
        let r = gamma2(m, n);
        ensure(r.lower.is_none_or(|l| l <= exact), || {
            format!("({m}, {n}): lower {:?} > {exact}", r.lower)
        })?;
        ensure(r.upper.is_none_or(|u| exact <= u), || {
            format!("({m}, {n}): {exact} > upper {:?}", r.upper)
        })?;
        ensure(r.exact.is_none_or(|e| e == exact), || {
            format!("({m}, {n}): formula {:?}, oracle {exact}", r.exact)
        })?;
        bracketed += 1;
    }
    let table = omega_table().map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut sampled = 0;
    for n in 16..=24usize {
        let spec = CylinderSpec::new(13, n).unwrap();
        let bound = table.omega2(n).map_err(|e| e.to_string())?;
        for i in 0..200 {
            let r = if i % 2 == 0 {
                random_border_set(spec, rng.gen_range(0.3..0.9), &mut rng)
            } else {
                random_2dominating(spec, &mut rng).restrict_rows(1, 5)
            };
            ensure(is_border_2dominating(&r), || {
                format!("n = {n}: sample is not a border set")
            })?;
            let omega = wasted_2domination(&r).map_err(|e| e.to_string())?.omega;
            ensure(omega >= bound, || {
                format!("n = {n}: sampled omega {omega} < {bound}")
            })?;
            sampled += 1;
        }
    }
    Ok(format!(
        "{bracketed} exact instances bracketed, {sampled} border samples above omega2(n)"
    ))
}

fn criterion_8() -> Check {
    let digraph = build_transfer_digraph().map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checked = 0;
    for m in [13usize, 14] {
        for n in 16..=20usize {
            let spec = CylinderSpec::new(m, n).unwrap();
            for _ in 0..100 {
                let s = random_2dominating(spec, &mut rng);
                let report = region_partition(&s).map_err(|e| e.to_string())?;
                ensure(report.coverage_holds(), || {
                    format!(
                        "({m}, {n}): coverage inequality fails {:?}",
                        report.coverage_sides()
                    )
                })?;
                ensure(report.waste_holds(), || {
                    format!(
                        "({m}, {n}): waste inequality fails {:?}",
                        report.waste_sides()
                    )
                })?;
                for r in [s.restrict_rows(1, 5), s.restrict_rows(m - 4, m).reflect()] {
                    ensure(is_border_2dominating(&r), || {
                        format!("({m}, {n}): border part fails")
                    })?;
                    let words = label_border_set(&r).map_err(|e| e.to_string())?;
                    let back = path_to_border_set(&words, m).map_err(|e| e.to_string())?;
                    ensure(back == r, || format!("({m}, {n}): roundtrip mismatch"))?;
                    let weight = digraph
                        .closed_walk_weight(&words)
                        .map_err(|e| e.to_string())?;
                    let omega = wasted_2domination(&r).map_err(|e| e.to_string())?.omega;
                    ensure(weight == omega, || {
                        format!("({m}, {n}): walk weight {weight} != {omega}")
                    })?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} random 2-dominating sets"))
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let graphs = 60;
    for g in 0..graphs {
        let a = random_digraph(&mut rng);
        for len in 1..=6 {
            let p = tpow(&a, len).map_err(|e| e.to_string())?;
            for i in 0..a.order() {
                for j in 0..a.order() {
                    let brute = min_walk_weight(&a, i, j, len);
                    ensure(p.get(i, j) == brute, || {
                        format!(
                            "graph {g}, length {len}, ({i}, {j}): {:?} vs {brute:?}",
                            p.get(i, j)
                        )
                    })?;
                }
            }
        }
    }
    Ok(format!("{graphs} random digraphs, walk lengths 1..=6"))
}

struct ControlResult {
    words_ok: bool,
    certificate_ok: bool,
    oracle_ok: bool,
    differential_ok: bool,
}

impl ControlResult {
    fn caught_by_criteria(&self) -> bool {
        !(self.words_ok && self.certificate_ok && self.oracle_ok)
    }
}

fn run_control(rules: &Rules, oracle: &[(usize, i64)]) -> Result<ControlResult, String> {
    let table = WordTable::from_rules(rules);
    let run = run_pipeline(rules, DEFAULT_MAX_EXPLICIT).map_err(|e| e.to_string())?;
    let certificate_ok = matches!(&run.certificate, Ok(c) if c.triple() == (45, 1, 2));
    let oracle_ok = oracle
        .iter()
        .all(|&(n, v)| run.minimum(n) == Some(TropicalValue::Finite(v as i32)));
    let words = table.words();
    let differential_ok = words.iter().all(|q| {
        words
            .iter()
            .all(|p| rules.can_follow(p, q) == geometric_follow(q, p))
    });
    Ok(ControlResult {
        words_ok: table.len() == 111,
        certificate_ok,
        oracle_ok,
        differential_ok,
    })
}

fn criterion_10() -> Check {
    let oracle = omega2_oracle_range(16, 24).map_err(|e| e.to_string())?;
    let standard = Rules::standard();
    let baseline = run_control(&standard, &oracle)?;
    ensure(
        baseline.words_ok
            && baseline.certificate_ok
            && baseline.oracle_ok
            && baseline.differential_ok,
        || "uncorrupted tables fail the checks".into(),
    )?;
    let mut factor_count = 0;
    for entry in standard.forbidden_factors() {
        let r = run_control(&standard.without(entry), &oracle)?;
        ensure(r.caught_by_criteria(), || {
            format!("dropping [{entry}] goes unnoticed")
        })?;
        factor_count += 1;
    }
    let mut follow_count = 0;
    let mut differential_only = Vec::new();
    for entry in standard.entries() {
        if !matches!(entry, RuleEntry::Follow { .. }) {
            continue;
        }
        let r = run_control(&standard.without(entry), &oracle)?;
        ensure(r.caught_by_criteria() || !r.differential_ok, || {
            format!("dropping [{entry}] goes unnoticed, even by the geometric check")
        })?;
        if !r.caught_by_criteria() {
            differential_only.push(entry.to_string());
        }
        follow_count += 1;
    }
    Ok(format!(
        "all {factor_count} factor deletions caught; {follow_count} follow-option deletions caught, {} only by the geometric check ({})",
        differential_only.len(),
        differential_only.join("; ")
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("suitable-word count", criterion_1),
        ("periodicity certificate", criterion_2),
        ("omega2 table", criterion_3),
        ("independent omega2 oracle", criterion_4),
        ("exact gamma2 at desk scale", criterion_5),
        ("construction validity", criterion_6),
        ("bound sandwich", criterion_7),
        ("structural inequalities and bijection", criterion_8),
        ("min-plus powers vs path enumeration", criterion_9),
        ("negative control", criterion_10),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {name} [{elapsed:.2?}]: {detail}",
                i + 1
            ),
            Err(detail) => {
                failures += 1;
                println!(
                    "criterion {:>2} FAIL  {name} [{elapsed:.2?}]: {detail}",
                    i + 1
                );
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
