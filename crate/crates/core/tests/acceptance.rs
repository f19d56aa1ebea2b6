//! Acceptance suite. Each criterion prints one `PASS`/`FAIL` line; run with
//! `--nocapture` to see them.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};

use moonshine::cli::{run_cli_with, EXIT_VERIFY_FAILED};
use moonshine::corpus::{emit_checksums, emit_corpus, parse_corpus, parse_degrees, CorpusFile};
use moonshine::decomp::{
    column_from_multiplicities, common_level, convolve_with_partitions, first_singular_heights,
    level_lcm, multiplicities_from_column, thompson_prefix_from_column, trivial_vacuum_series,
    weight_half_form, LevelRecord, TABLE_DEPTH,
};
use moonshine::series::{
    delta_from_eisenstein, delta_series, eta_series, euler_function, partition_numbers,
};
use moonshine::virasoro::{classify_module, feigin_fuchs_solutions, Verdict};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn criterion(n: u8, title: &str, body: impl FnOnce() -> Result<(), String>) {
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|p| {
        Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panicked".into()))
    });
    match outcome {
        Ok(()) => println!("PASS criterion {n}: {title}"),
        Err(why) => {
            println!("FAIL criterion {n}: {title}: {why}");
            panic!("criterion {n} failed: {why}");
        }
    }
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().copied().map(BigInt::from).collect()
}

fn corpus() -> CorpusFile {
    parse_corpus(&common::fixture_bytes("corpus.csv")).expect("fixture parses")
}

#[test]
fn criterion_1_vacuum_table() {
    criterion(1, "vacuum character table a_h1", || {
        let got = trivial_vacuum_series(13).to_integers().map_err(|e| e.to_string())?;
        let want = ints(&[1, 0, 1, 1, 2, 2, 4, 4, 7, 8, 12, 14, 21]);
        ensure(got == want, || format!("got {got:?}"))
    });
}

#[test]
fn criterion_2_trivial_multiplicities() {
    criterion(2, "c_h1 reconstruction from the trivial column", || {
        let c = corpus();
        let col = c.column(1).ok_or("chi=1 missing")?;
        let want = ints(&[1, 0, 1, 1, 2, 2, 4, 4, 7, 8, 12, 14, 22]);
        let got = convolve_with_partitions(&col.coeffs[..13]);
        ensure(got == want, || format!("library convolution gave {got:?}"))?;

        let p: Vec<BigInt> = (0..13)
            .map(|n| BigInt::from(common::brute_force_partitions(n)))
            .collect();
        let oracle = common::convolve(&col.coeffs[..13], &p);
        ensure(oracle[..13] == want[..], || format!("oracle gave {oracle:?}"))?;

        let seq = multiplicities_from_column(col, 13).map_err(|e| e.to_string())?;
        ensure(seq.values == want, || format!("sequence gave {:?}", seq.values))
    });
}

#[test]
fn criterion_3_singular_heights() {
    criterion(3, "d-table for h <= 30", || {
        let c = corpus();
        let got: Vec<(usize, BigInt)> = first_singular_heights(c.column(1).ok_or("chi=1 missing")?)
            .into_iter()
            .filter(|(h, _)| *h <= 30)
            .collect();
        let want: Vec<(usize, BigInt)> = [
            (12, 1),
            (16, 1),
            (18, 1),
            (20, 1),
            (22, 1),
            (24, 3),
            (26, 2),
            (27, 1),
            (28, 4),
            (29, 2),
            (30, 6),
        ]
        .into_iter()
        .map(|(h, d)| (h, BigInt::from(d)))
        .collect();
        ensure(got == want, || format!("got {got:?}"))
    });
}

#[test]
fn criterion_4_eta_relation_roundtrip() {
    criterion(4, "eta relation and roundtrip on every column", || {
        let c = corpus();
        ensure(c.columns.len() >= 100, || {
            format!("only {} columns", c.columns.len())
        })?;
        let eta = eta_series(TABLE_DEPTH);
        for col in &c.columns {
            let chi = col.chi;
            let half = weight_half_form(col, TABLE_DEPTH).map_err(|e| format!("chi={chi}: {e}"))?;
            let rebuilt = thompson_prefix_from_column(col, TABLE_DEPTH)
                .map_err(|e| format!("chi={chi}: {e}"))?
                .mul(&eta);
            ensure(
                rebuilt.offset24() == half.offset24()
                    && rebuilt.order() == TABLE_DEPTH
                    && half.order() == TABLE_DEPTH
                    && rebuilt.agrees_with(&half),
                || format!("chi={chi}: eta relation"),
            )?;
            let seq =
                multiplicities_from_column(col, TABLE_DEPTH).map_err(|e| format!("chi={chi}: {e}"))?;
            let back = column_from_multiplicities(&seq, col.is_trivial(), TABLE_DEPTH)
                .map_err(|e| format!("chi={chi}: {e}"))?;
            ensure(back.coeffs == col.coeffs, || format!("chi={chi}: roundtrip"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_5_dimension_identity() {
    criterion(5, "dimension identity for h = 2..5", || {
        let c = corpus();
        let degrees: BTreeMap<u16, BigUint> = parse_degrees(&common::fixture_bytes("degrees.csv"))
            .map_err(|e| e.to_string())?
            .entries;
        let listed: Vec<u64> = degrees.values().map(|d| u64::try_from(d).unwrap()).collect();
        ensure(
            listed == [1, 196883, 21296876, 842609326, 18538750076, 19360062527],
            || format!("degree fixture {listed:?}"),
        )?;
        let j = common::big_j(7);
        let want = ints(&[196884, 21493760, 864299970, 20245856256]);
        for (h, expected) in (2..=5).zip(&want) {
            ensure(&j[h] == expected, || format!("oracle J at h={h} is {}", j[h]))?;
            let mut total = BigInt::zero();
            for (chi, deg) in &degrees {
                let col = c.column(*chi).ok_or_else(|| format!("chi={chi} missing"))?;
                let seq = multiplicities_from_column(col, h + 1).map_err(|e| e.to_string())?;
                total += &seq.values[h] * BigInt::from(deg.clone());
            }
            ensure(&total == expected, || format!("h={h}: sum {total}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_6_structure_theorem() {
    criterion(6, "classification of M(h,24) for h = 0..1000", || {
        // the two relations in plain integers
        let summed = |a: &BigInt, b: &BigInt, h: i64| {
            BigInt::from(72) * a * a + BigInt::from(132) * a * b + BigInt::from(49) * b * b
                == BigInt::from(253 - 264 * h)
        };
        let difference = |a: &BigInt, b: &BigInt, h: i64| {
            BigInt::from(-12) * a * b - BigInt::from(11) * b * b == BigInt::from(24 * h - 23)
        };

        ensure(classify_module(0) == Verdict::UniqueSubmoduleHeightOne, || {
            "h=0 verdict".into()
        })?;
        let r0 = feigin_fuchs_solutions(0);
        let plus = r0.branch(1).ok_or("h=0: no delta=+1 branch")?;
        let mut betas: Vec<BigInt> = plus.solutions.iter().map(|s| s.beta.clone()).collect();
        betas.sort();
        ensure(betas == ints(&[-1, 1]), || format!("h=0 betas {betas:?}"))?;
        ensure(
            plus.solutions.iter().all(|s| s.alpha == s.beta),
            || "h=0: alpha != beta".into(),
        )?;
        let minus = r0.branch(-1).ok_or("h=0: no delta=-1 branch")?;
        ensure(minus.solutions.is_empty(), || "h=0: delta=-1 has solutions".into())?;
        ensure(r0.derived_verdict() == Some(Verdict::UniqueSubmoduleHeightOne), || {
            "h=0 derived verdict".into()
        })?;

        for h in 0..=1000u64 {
            let r = feigin_fuchs_solutions(h);
            let hi = h as i64;
            for branch in &r.branches {
                for s in &branch.solutions {
                    ensure(
                        s.identities_hold
                            && summed(&s.alpha, &s.beta, hi)
                            && difference(&s.alpha, &s.beta, hi),
                        || format!("h={h}: identities fail for ({}, {})", s.alpha, s.beta),
                    )?;
                }
            }
            if h == 0 {
                continue;
            }
            ensure(classify_module(h) == Verdict::Irreducible, || {
                format!("h={h} verdict")
            })?;
            let plus = r.branch(1).ok_or_else(|| format!("h={h}: no delta=+1 branch"))?;
            ensure(
                plus.beta_squared.is_negative() && plus.solutions.is_empty(),
                || format!("h={h}: delta=+1 beta^2 = {}", plus.beta_squared),
            )?;
            ensure(r.derived_verdict() == Some(Verdict::Irreducible), || {
                format!("h={h} derived verdict")
            })?;
        }
        Ok(())
    });
}

#[test]
fn criterion_7_series_oracles() {
    criterion(7, "partition, Euler and Delta oracles", || {
        let table = partition_numbers(40);
        for n in 0..=40u32 {
            let want = BigInt::from(common::brute_force_partitions(n));
            ensure(table.get(i64::from(n)) == want, || format!("p({n})"))?;
        }
        let euler = euler_function(200).to_integers().map_err(|e| e.to_string())?;
        ensure(euler == common::euler_product(200), || "Euler function".into())?;
        let eta24 = delta_series(200);
        ensure(eta24.agrees_with(&delta_from_eisenstein(200)), || {
            "eta^24 vs Eisenstein".into()
        })?;
        let coeffs = eta24.to_integers().map_err(|e| e.to_string())?;
        ensure(coeffs == common::delta_over_q(200), || "eta^24 vs oracle".into())
    });
}

#[test]
fn criterion_8_level_arithmetic() {
    criterion(8, "level lcm for chi166 and the common level", || {
        let rec = |n| LevelRecord {
            n,
            h_divisor: 1,
            chi_nonzero: true,
        };
        let n166 = level_lcm(&[rec(64), rec(9), rec(7)]);
        ensure(n166 == BigUint::from(4032u32), || format!("N_166 = {n166}"))?;

        let powers = [64u64, 27, 25, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71];
        let product = powers.iter().fold(BigUint::one(), |acc, &p| acc * p);
        let n0 = level_lcm(&powers.map(rec));
        ensure(n0 == product, || format!("N_0 = {n0}"))?;
        ensure(common_level() == product, || format!("common level {}", common_level()))
    });
}

#[test]
fn criterion_9_fault_detection() {
    criterion(9, "single +-1 perturbations are located by verify", || {
        let base = corpus();
        let checksums = emit_checksums(&base);
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let corpus_path = dir.path().join("corpus.csv");
        std::fs::write(dir.path().join("corpus.checksums.csv"), checksums)
            .map_err(|e| e.to_string())?;
        let path = corpus_path.to_str().ok_or("non-utf8 tempdir")?.to_string();

        let mut rng = StdRng::seed_from_u64(0x5eed_2400);
        for trial in 0..100 {
            let mut c = base.clone();
            let i = rng.gen_range(0..c.columns.len());
            let h = rng.gen_range(0..TABLE_DEPTH);
            let bump: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
            let chi = c.columns[i].chi;
            c.columns[i].coeffs[h] += bump;
            std::fs::write(&corpus_path, emit_corpus(&c)).map_err(|e| e.to_string())?;

            let mut out = Vec::new();
            let mut err = Vec::new();
            let code = run_cli_with(
                ["moonshine", "verify", "--corpus", path.as_str()],
                &mut out,
                &mut err,
            );
            let text = String::from_utf8_lossy(&out);
            let needle = format!("chi={chi} h={h} status=fail");
            ensure(code == EXIT_VERIFY_FAILED, || {
                format!("trial {trial} (chi={chi}, h={h}, {bump:+}): exit {code}")
            })?;
            ensure(text.lines().any(|l| l.contains(&needle)), || {
                format!("trial {trial}: no failure names chi={chi} h={h}")
            })?;
        }
        Ok(())
    });
}
