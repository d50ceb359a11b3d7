//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.
//!
//! Runs without the libtest harness so the lines are always printed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::One;
use posgroup_core::arith::{divides, is_prime};
use posgroup_core::poscheck::is_power_of_three;
use posgroup_core::theorems::{
    assign_case, factorial_residue, verify_dihedral_range, verify_four_blocks, verify_quaternion_range,
    verify_three_blocks, verify_two_blocks, verify_z2_power, LemmaReport, Outcome,
};
use posgroup_core::{check_pos, spectrum_bruteforce, spectrum_closed_form, GroupSpec};

type Check = std::result::Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn symmetric_verdicts() -> Check {
    let s3 = check_pos(&GroupSpec::symmetric(3).unwrap()).map_err(|e| e.to_string())?;
    ensure(s3.is_pos, || "S_3 not POS".into())?;
    for n in 4..=12 {
        let spec = GroupSpec::symmetric(n).unwrap();
        let verdict = check_pos(&spec).map_err(|e| e.to_string())?;
        ensure(!verdict.is_pos, || format!("S_{n} reported POS"))?;
    }
    let s4 = spectrum_closed_form(&GroupSpec::symmetric(4).unwrap()).unwrap();
    let s5 = spectrum_closed_form(&GroupSpec::symmetric(5).unwrap()).unwrap();
    ensure(s4.count_or_zero(2) == BigUint::from(9u32), || format!("S_4 order-2 count {}", s4.count_or_zero(2)))?;
    ensure(s5.count_or_zero(2) == BigUint::from(25u32), || format!("S_5 order-2 count {}", s5.count_or_zero(2)))?;
    Ok("S_3 POS; S_4..S_12 non-POS; order-2 counts 9 and 25".into())
}

fn oracle_equivalence() -> Check {
    let mut specs = Vec::new();
    specs.extend((1..=9).map(|n| GroupSpec::symmetric(n).unwrap()));
    specs.extend((2..=500).map(|n| GroupSpec::dihedral(n).unwrap()));
    specs.extend((3..=16).map(|n| GroupSpec::quaternion(n).unwrap()));
    specs.extend((1..=2000).map(|m| GroupSpec::cyclic(m).unwrap()));
    for alpha in 1..=20u32 {
        for t in 1..=20 / alpha {
            specs.push(GroupSpec::z2_power(alpha, t).unwrap());
        }
    }
    for spec in &specs {
        let closed = spectrum_closed_form(spec).map_err(|e| format!("{spec}: {e}"))?;
        let brute = spectrum_bruteforce(spec).map_err(|e| format!("{spec}: {e}"))?;
        ensure(closed == brute, || format!("{spec}: closed {closed} vs brute {brute}"))?;
    }
    Ok(format!("{} groups agree entrywise", specs.len()))
}

fn dihedral_theorem() -> Check {
    let summary = verify_dihedral_range(2187).map_err(|e| e.to_string())?;
    let expected = vec![3, 9, 27, 81, 243, 729, 2187];
    ensure(summary.pos_values == expected, || format!("POS at {:?}", summary.pos_values))?;
    ensure(summary.holds(), || format!("counterexamples {:?}", summary.counterexamples))?;
    ensure((2..=2187).filter(|&n| is_power_of_three(n)).eq(expected.iter().copied()), || {
        "power-of-three predicate".into()
    })?;
    Ok(format!("POS exactly at {expected:?}"))
}

fn displayed_fraction() -> Check {
    let report = verify_four_blocks(3).map_err(|e| e.to_string())?;
    ensure(report.ratio.numerator == BigUint::from(3840u32), || format!("numerator {}", report.ratio.numerator))?;
    ensure(report.ratio.denominator == BigUint::from(7060u32), || {
        format!("denominator {}", report.ratio.denominator)
    })?;
    ensure(report.m == BigUint::from(7060u32), || format!("M = {}", report.m))?;
    ensure(!report.ratio.is_integral(), || "C integral".into())?;
    Ok(format!("C = {} non-integral", report.ratio))
}

fn odd_primes(max: u64) -> impl Iterator<Item = u64> {
    (3..=max).filter(|&p| is_prime(p))
}

fn lemma_suite() -> Check {
    let mut confirmed = 0u64;
    let mut anomalies = Vec::new();
    let expect_confirmed = |report: &LemmaReport| -> std::result::Result<(), String> {
        ensure(report.outcome() == Outcome::Confirmed, || report.summary_line())?;
        ensure(report.residues.iter().all(|r| r.holds()), || report.summary_line())?;
        ensure(report.gcd_claim_holds, || report.summary_line())
    };
    for p in odd_primes(199) {
        for r in 0..p {
            let two = verify_two_blocks(p, r).map_err(|e| e.to_string())?;
            if (p, r) == (3, 0) {
                ensure(two.outcome() == Outcome::KnownAnomaly, || two.summary_line())?;
                ensure(two.d == BigUint::from(80u32) && two.divides && !two.inequality_holds, || {
                    two.summary_line()
                })?;
                ensure(divides(&two.d, &BigUint::from(720u32)), || "80 ∤ 720?".into())?;
                anomalies.push((p, r));
            } else {
                expect_confirmed(&two)?;
                confirmed += 1;
            }
            let three = verify_three_blocks(p, r).map_err(|e| e.to_string())?;
            expect_confirmed(&three)?;
            confirmed += 1;
        }
        let four = verify_four_blocks(p).map_err(|e| e.to_string())?;
        expect_confirmed(&four)?;
        ensure(four.residues.iter().any(|r| r.label == "M" && r.residue == 1), || four.summary_line())?;
        confirmed += 1;
    }
    ensure(anomalies == [(3, 0)], || format!("anomalies {anomalies:?}"))?;
    Ok(format!("{confirmed} cases confirmed; KNOWN-ANOMALY at (3,0) with d = 80 | 720"))
}

fn coverage() -> Check {
    let mut by_shape = [0u64; 3];
    for n in 8..=100_000u64 {
        let case = assign_case(n).map_err(|e| format!("n = {n}: {e}"))?;
        ensure(case.m == n / 4 && case.m < case.p && case.p < 2 * case.m && is_prime(case.p), || {
            format!("n = {n}: bad prime {case:?}")
        })?;
        ensure(case.r < case.p && case.lemma.blocks() * case.p + case.r == n, || format!("n = {n}: {case:?}"))?;
        by_shape[case.lemma.blocks() as usize - 2] += 1;
    }
    Ok(format!(
        "99993 values assigned (2p+r: {}, 3p+r: {}, 4p: {})",
        by_shape[0], by_shape[1], by_shape[2]
    ))
}

fn wilson() -> Check {
    let (mut primes, mut composites) = (0, 0);
    for k in 2..=10_000u64 {
        let congruent = factorial_residue(k) == k - 1;
        if is_prime(k) {
            ensure(congruent, || format!("prime {k} fails"))?;
            primes += 1;
        } else {
            ensure(!congruent, || format!("composite {k} satisfies the congruence"))?;
            composites += 1;
        }
    }
    Ok(format!("{primes} primes satisfy, {composites} composites fail"))
}

fn quaternion_and_z2() -> Check {
    let reports = verify_quaternion_range(3, 16, true).map_err(|e| e.to_string())?;
    for q in &reports {
        let expected = (BigUint::one() << (q.n - 1)) + 2u32;
        ensure(q.order4_count == expected && q.holds(), || format!("{q:?}"))?;
    }
    let mut tested = 0;
    for alpha in 1..=10u32 {
        for t in 2..=20 / alpha {
            let report = verify_z2_power(alpha, t, true).map_err(|e| e.to_string())?;
            ensure(report.holds(), || format!("{report:?}"))?;
            tested += 1;
        }
    }
    Ok(format!("Q_3..Q_16 order-4 counts 2^(n-1)+2; {tested} (alpha, t) pairs non-POS"))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "symmetric verdicts", limit: Duration::from_secs(5), run: symmetric_verdicts },
        Criterion { id: 2, name: "oracle equivalence", limit: Duration::from_secs(60), run: oracle_equivalence },
        Criterion { id: 3, name: "dihedral classification", limit: Duration::from_secs(10), run: dihedral_theorem },
        Criterion { id: 4, name: "4p fraction at p=3", limit: Duration::from_secs(1), run: displayed_fraction },
        Criterion { id: 5, name: "lemma suite p <= 199", limit: Duration::from_secs(600), run: lemma_suite },
        Criterion { id: 6, name: "case coverage 8..100000", limit: Duration::from_secs(60), run: coverage },
        Criterion { id: 7, name: "wilson congruence <= 10000", limit: Duration::from_secs(30), run: wilson },
        Criterion { id: 8, name: "quaternion and z2-power counts", limit: Duration::from_secs(30), run: quaternion_and_z2 },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(detail) if elapsed <= c.limit => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("{detail}; took {elapsed:.2?}, limit {:?}", c.limit)),
            Err(msg) => ("FAIL", msg),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("{status} criterion {} ({}): {detail} [{elapsed:.2?}]", c.id, c.name);
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
