//! Verification checks that append their results to a [`ReportEnvelope`].


use serde_json::json;

use super::fixtures::{reference_bad_primes, D_MATRIX_L5};
use super::report::{CheckResult, Discrepancy, ReportEnvelope, Status};
use crate::coset::{gko_verify, table1_check};
use crate::exact::{is_prime, rat, BigRational};
use crate::virasoro::{
    gram_matrix, irreducibility_probe, kac_vanishing_check, VermaModule, VermaParams, Verdict,
};
use crate::weights::{
    bad_primes, canonical_labels, d_matrix, g_set, g_union, verify_exceptional, verify_prop_h,
    verify_prop_x,
};
use crate::Result;

pub(crate) fn format_set(values: &[u64]) -> String {
    let parts: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn range_label(ells: &[u64]) -> String {
    match (ells.first(), ells.last()) {
        (Some(a), Some(b)) if a == b => format!("l={a}"),
        (Some(a), Some(b)) => format!("l={a}..{b}"),
        _ => "l=none".to_string(),
    }
}

pub fn bad_primes_check(env: &mut ReportEnvelope, ell: u64) -> Result<Vec<u64>> {
    let computed = bad_primes(ell)?;
    env.push(
        CheckResult::new(format!("bad-primes l={ell}"), Status::Info, format_set(&computed))
            .with_detail(&computed),
    );
    env.note(Discrepancy::EvenPrime);
    env.note(Discrepancy::DegenerateWeights);
    if let Some(reference) = reference_bad_primes(ell) {
        let listed = reference.listed();
        let primes_only: Vec<u64> = listed.iter().copied().filter(|&p| is_prime(p)).collect();
        let ok = primes_only == computed;
        let mut summary = format!("reference {}", format_set(&listed));
        if primes_only.len() != listed.len() {
            summary.push_str(" (non-primes dropped)");
            env.note(Discrepancy::NonPrimeNine);
        }
        env.push(CheckResult::new(
            format!("bad-primes-reference l={ell}"),
            Status::from_bool(ok),
            summary,
        ));
    }
    Ok(computed)
}

pub fn prop_x_check(env: &mut ReportEnvelope, ells: &[u64]) -> Result<()> {
    let mut failures = Vec::new();
    for &ell in ells {
        if !verify_prop_x(ell)?.passed {
            failures.push(ell);
        }
    }
    let summary = if failures.is_empty() {
        format!("{}: enumerated B_l equals interval form; max and second max match", range_label(ells))
    } else {
        format!("failed at {}", format_set(&failures))
    };
    env.push(
        CheckResult::new("prop-x", Status::from_bool(failures.is_empty()), summary)
            .with_detail(json!({ "levels": ells.len(), "failures": failures })),
    );
    Ok(())
}

pub fn prop_h_check(env: &mut ReportEnvelope, ells: &[u64]) -> Result<()> {
    let mut failures = Vec::new();
    let mut checked = 0;
    for &ell in ells {
        let r = verify_prop_h(ell)?;
        checked += r.checked.len();
        if !r.passed {
            failures.push(ell);
        }
    }
    let summary = if failures.is_empty() {
        format!("{}: all {checked} primes in (2l^2+l-3, 2l^2+3l] are good", range_label(ells))
    } else {
        format!("bad prime above the bound at {}", format_set(&failures))
    };
    env.push(
        CheckResult::new("prop-h", Status::from_bool(failures.is_empty()), summary)
            .with_detail(json!({ "primes_checked": checked, "failures": failures })),
    );
    Ok(())
}

pub fn d_matrix_reference_check(env: &mut ReportEnvelope) -> Result<()> {
    let d = d_matrix(5)?;
    let expected: Vec<Vec<u64>> = D_MATRIX_L5.iter().map(|r| r.to_vec()).collect();
    let ok = d.entries == expected;
    env.push(
        CheckResult::new(
            "d-matrix l=5",
            Status::from_bool(ok),
            format!("9x6 table, first row {:?}, bottom-right {}", d.entries[0], d.entries[8][5]),
        )
        .with_detail(&d),
    );
    Ok(())
}

pub fn g_identity_check(env: &mut ReportEnvelope, ells: &[u64]) -> Result<()> {
    let mut failures = Vec::new();
    let mut short_range_failures = Vec::new();
    for &ell in ells {
        let union = g_union(ell)?;
        if g_set(ell, true)? != union {
            failures.push(ell);
        }
        if g_set(ell, false)? != union {
            short_range_failures.push(ell);
        }
    }
    env.push(CheckResult::new(
        "g-identity (range 2l^2+2l-3)",
        Status::from_bool(failures.is_empty()),
        if failures.is_empty() {
            format!("{}: [1, 2l^2+2l-3] \\ B_l equals the union of G_l(a)", range_label(ells))
        } else {
            format!("failed at {}", format_set(&failures))
        },
    ));
    let summary = if short_range_failures.is_empty() {
        format!("{}: identity also holds on [1, 2l^2+l-3]", range_label(ells))
    } else {
        let mut s = format!(
            "identity on [1, 2l^2+l-3] fails at {} l values",
            short_range_failures.len()
        );
        if ells.contains(&2) {
            let missing: Vec<u64> = g_union(2)?.expand().difference(&g_set(2, false)?.expand()).copied().collect();
            s.push_str(&format!("; at l=2 it misses {}", format_set(&missing)));
        }
        s
    };
    env.push(
        CheckResult::new("g-identity (range 2l^2+l-3)", Status::Info, summary)
            .with_detail(json!({ "failing_levels": short_range_failures })),
    );
    if !short_range_failures.is_empty() {
        env.note(Discrepancy::GRange);
    }
    Ok(())
}

pub fn exceptional_check(env: &mut ReportEnvelope, ells: &[u64]) -> Result<()> {
    let mut failures = Vec::new();
    let mut neighbour_primes = 0;
    for &ell in ells {
        let r = verify_exceptional(ell)?;
        neighbour_primes += r.neighbour_primes.len();
        if !r.passed {
            failures.push(ell);
        }
    }
    env.push(CheckResult::new(
        "exceptional-primes",
        Status::from_bool(failures.is_empty()),
        if failures.is_empty() {
            format!(
                "{}: (l+1)^2, (l+2)^2 outside B_l; all {neighbour_primes} prime l+1 / l+2 are good",
                range_label(ells)
            )
        } else {
            format!("failed at {}", format_set(&failures))
        },
    ));
    Ok(())
}

/// Fixed `(c, h)` sample points for closed-form comparisons.
fn sample_points() -> Vec<(BigRational, BigRational)> {
    vec![
        (rat(1, 2), rat(1, 16)),
        (rat(17, 5), rat(23, 7)),
        (rat(-3, 11), rat(9, 4)),
        (rat(25, 1), rat(-2, 3)),
        (rat(7, 10), rat(3, 80)),
    ]
}

pub fn gram_closed_form_check(env: &mut ReportEnvelope) -> Result<()> {
    let mut ok = true;
    for (c, h) in sample_points() {
        let p = VermaParams::rational(c.clone(), h.clone());
        let two = gram_matrix(&p, 2).to_rows();
        let six_h = rat(6, 1) * &h;
        let expected = vec![
            vec![rat(4, 1) * &h + &c / rat(2, 1), six_h.clone()],
            vec![six_h, rat(8, 1) * &h * &h + rat(4, 1) * &h],
        ];
        ok &= two == expected;
        ok &= gram_matrix(&p, 1).to_rows() == vec![vec![rat(2, 1) * &h]];
        let mut cached = VermaModule::new(p.clone());
        let mut plain = VermaModule::without_memo(p);
        for level in 0..=4 {
            let g = cached.gram_matrix(level);
            ok &= g.is_symmetric() && g == plain.gram_matrix(level);
        }
    }
    env.push(CheckResult::new(
        "gram-closed-forms",
        Status::from_bool(ok),
        "levels 1-2 match closed forms at 5 points; symmetric and cache-independent to level 4",
    ));
    Ok(())
}

pub fn kac_check(env: &mut ReportEnvelope, ells: &[u64], max_level: usize) -> Result<()> {
    let mut rows = Vec::new();
    let mut ok = true;
    for &ell in ells {
        for label in canonical_labels(ell)? {
            let r = kac_vanishing_check(label, max_level)?;
            ok &= r.passed;
            rows.push(json!({
                "ell": ell,
                "label": label.to_string(),
                "first_singular_level": r.first_singular_level,
                "passed": r.passed,
            }));
        }
    }
    env.push(
        CheckResult::new(
            "kac-vanishing",
            Status::from_bool(ok),
            format!(
                "{}: det Gram_N = 0 exactly for N >= min(mn, (l+1-m)(l+2-n)), N <= {max_level}",
                range_label(ells)
            ),
        )
        .with_detail(rows),
    );
    Ok(())
}

/// Probe at `l = 2` for primes above the bound (expected consistent) and the
/// bad prime 7 (recorded only).
pub fn probe_evidence_check(env: &mut ReportEnvelope, max_level: usize) -> Result<()> {
    let mut ok = true;
    let mut rows = Vec::new();
    for p in [11u64, 13, 101] {
        for label in canonical_labels(2)? {
            let v = irreducibility_probe(label, p, max_level)?;
            ok &= v.verdict == Verdict::Consistent;
            rows.push(json!({ "label": label.to_string(), "prime": p, "verdict": v.verdict }));
        }
    }
    env.push(
        CheckResult::new(
            "probe l=2 p in {11,13,101}",
            Status::from_bool(ok),
            format!("rank over F_p equals rank over Q at every level <= {max_level}"),
        )
        .with_detail(rows),
    );
    let mut experiment = Vec::new();
    for label in canonical_labels(2)? {
        let v = irreducibility_probe(label, 7, max_level)?;
        let text = match v.verdict {
            Verdict::Consistent => format!("{label}: consistent"),
            Verdict::RankDropAtLevel(k) => format!("{label}: rank drop at level {k}"),
        };
        experiment.push(text);
    }
    env.push(CheckResult::new("probe l=2 p=7 (experiment)", Status::Info, experiment.join("; ")));
    env.note(Discrepancy::IntegralForm);
    Ok(())
}

pub fn gko_check(env: &mut ReportEnvelope, ells: &[u64]) -> Result<()> {
    let mut failures = Vec::new();
    let mut total = 0;
    for &ell in ells {
        let r = gko_verify(ell)?;
        total += r.total_summands;
        if !r.passed() {
            failures.push(ell);
        }
    }
    env.push(CheckResult::new(
        "gko",
        Status::from_bool(failures.is_empty()),
        if failures.is_empty() {
            format!(
                "{}: index partition, canonical labels, integer depths >= 0, multiplicity-free, \
                 l(l+1) summands ({total} total)",
                range_label(ells)
            )
        } else {
            format!("failed at {}", format_set(&failures))
        },
    ));
    env.note(Discrepancy::CosetDepth);
    Ok(())
}

pub fn table1_audit(env: &mut ReportEnvelope) {
    let rows = table1_check();
    let ok = rows.iter().all(|r| r.below_bound);
    let pairs: Vec<String> = rows.iter().map(|r| format!("{}<{}", r.p_max_known, r.bound)).collect();
    env.push(
        CheckResult::new("table1", Status::from_bool(ok), pairs.join(", ")).with_detail(&rows),
    );
}
