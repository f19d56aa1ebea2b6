//! Decomposition of the Monster module into Virasoro highest-weight modules,
//! one Monster character at a time.
//!
//! For a character `χ_k` the column `a_0, a_1, …` lists how many copies of
//! `χ_k` worth of new singular vectors appear at each height. Convolving with
//! the partition numbers gives the multiplicities `c_{hk}` of `χ_k` in `𝕍_h`;
//! multiplying by the Euler function undoes it. For the trivial character the
//! column carries `a_0 = 1, a_1 = -1`, which folds the vacuum quotient
//! `M(0,24)/M(1,24)` into the same convolution.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::series::{
    big_j_series, eta_power, eta_series, euler_function, GradedSeries, PartitionTable,
    SeriesError, GRID,
};

/// Number of irreducible characters of the Monster.
pub const CHARACTER_COUNT: u16 = 194;

/// Depth of the published coefficient table.
pub const TABLE_DEPTH: usize = 52;

/// `p(h) - p(h-1)` for `h = 0..=12`.
pub const VACUUM_TABLE: [u32; 13] = [1, 0, 1, 1, 2, 2, 4, 4, 7, 8, 12, 14, 21];

/// Multiplicity of the trivial character in `𝕍_h`, `h = 0..=12`.
pub const TRIVIAL_MULTIPLICITIES: [u32; 13] = [1, 0, 1, 1, 2, 2, 4, 4, 7, 8, 12, 14, 22];

/// Heights `h ≤ 30` carrying trivial-character singular vectors, with counts.
pub const TRIVIAL_SINGULAR_HEIGHTS: [(usize, u32); 11] = [
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
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("character index {0} outside 1..=194")]
    InvalidChi(u16),
    #[error("chi={chi}: a_{h} = {value} violates the column sign pattern")]
    Sign { chi: u16, h: usize, value: BigInt },
    #[error("chi={chi}: c_{h} = {value} is negative")]
    NegativeMultiplicity { chi: u16, h: usize, value: BigInt },
    #[error("chi={chi}: c_1 = {value}, but the weight-one space is zero")]
    HeightOne { chi: u16, value: BigInt },
    #[error("chi={chi}: c_0 = {value}, expected {expected}")]
    Vacuum { chi: u16, value: BigInt, expected: u8 },
    #[error("chi={chi}: not a valid singular-vector series (a_{h} = {value})")]
    NotSingularSeries { chi: u16, h: usize, value: BigInt },
    #[error("chi={chi}: {requested} terms requested, {available} available")]
    TooFewTerms {
        chi: u16,
        requested: usize,
        available: usize,
    },
    #[error("chi={0}: degree missing")]
    MissingDegree(u16),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Singular-vector counts for one Monster character, normalized by its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterColumn {
    pub chi: u16,
    pub degree: Option<BigUint>,
    pub coeffs: Vec<BigInt>,
}

impl CharacterColumn {
    /// Builds a column and checks its sign pattern.
    pub fn new(chi: u16, coeffs: Vec<BigInt>) -> Result<Self, DecompError> {
        let col = Self::unchecked(chi, coeffs);
        col.validate()?;
        Ok(col)
    }

    /// Builds a column without checking signs. Verification uses this so a
    /// corrupted entry becomes a report line instead of a parse failure.
    pub fn unchecked(chi: u16, coeffs: Vec<BigInt>) -> Self {
        Self {
            chi,
            degree: None,
            coeffs,
        }
    }

    pub fn with_degree(mut self, degree: BigUint) -> Self {
        self.degree = Some(degree);
        self
    }

    pub fn is_trivial(&self) -> bool {
        self.chi == 1
    }

    /// Entries breaking the sign pattern: `a_0 = 1, a_1 = -1` and the rest
    /// nonnegative for the trivial character; `a_0 = 0` and all nonnegative
    /// otherwise.
    pub fn sign_violations(&self) -> Vec<(usize, BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(h, a)| !self.slot_ok(*h, a))
            .map(|(h, a)| (h, a.clone()))
            .collect()
    }

    /// Description of what slot `h` must hold.
    pub fn slot_rule(&self, h: usize) -> &'static str {
        match (self.is_trivial(), h) {
            (true, 0) => "1",
            (true, 1) => "-1",
            (false, 0) => "0",
            _ => ">= 0",
        }
    }

    fn slot_ok(&self, h: usize, a: &BigInt) -> bool {
        match (self.is_trivial(), h) {
            (true, 0) => a.is_one(),
            (true, 1) => *a == BigInt::from(-1),
            (false, 0) => a.is_zero(),
            _ => !a.is_negative(),
        }
    }

    pub fn validate(&self) -> Result<(), DecompError> {
        if self.chi == 0 || self.chi > CHARACTER_COUNT {
            return Err(DecompError::InvalidChi(self.chi));
        }
        match self.sign_violations().into_iter().next() {
            Some((h, value)) => Err(DecompError::Sign {
                chi: self.chi,
                h,
                value,
            }),
            None => Ok(()),
        }
    }

    fn prefix(&self, n: usize) -> Result<&[BigInt], DecompError> {
        self.coeffs.get(..n).ok_or(DecompError::TooFewTerms {
            chi: self.chi,
            requested: n,
            available: self.coeffs.len(),
        })
    }
}

/// Multiplicities `c_0, c_1, …` of one character in the graded pieces of 𝕍.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicitySequence {
    pub chi: u16,
    pub values: Vec<BigInt>,
}

/// `c_h = Σ_i a_i p(h - i)`.
pub fn convolve_with_partitions(coeffs: &[BigInt]) -> Vec<BigInt> {
    if coeffs.is_empty() {
        return Vec::new();
    }
    let p = PartitionTable::new(coeffs.len() - 1);
    (0..coeffs.len())
        .map(|h| {
            coeffs[..=h]
                .iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(|(i, a)| a * p.get((h - i) as i64))
                .sum()
        })
        .collect()
}

/// `a = c · ∏(1 - q^m)`, the inverse of [`convolve_with_partitions`].
pub fn deconvolve_with_euler(values: &[BigInt]) -> Vec<BigInt> {
    let series = GradedSeries::from_integers(0, values.iter().cloned());
    euler_function(values.len())
        .mul(&series)
        .to_integers()
        .expect("integer inputs stay integral")
}

pub fn multiplicities_from_column(
    col: &CharacterColumn,
    n: usize,
) -> Result<MultiplicitySequence, DecompError> {
    col.validate()?;
    let values = convolve_with_partitions(col.prefix(n)?);
    if let Some((h, v)) = values.iter().enumerate().find(|(_, v)| v.is_negative()) {
        return Err(DecompError::NegativeMultiplicity {
            chi: col.chi,
            h,
            value: v.clone(),
        });
    }
    Ok(MultiplicitySequence {
        chi: col.chi,
        values,
    })
}

pub fn column_from_multiplicities(
    c: &MultiplicitySequence,
    is_trivial: bool,
    n: usize,
) -> Result<CharacterColumn, DecompError> {
    let values = c.values.get(..n).ok_or(DecompError::TooFewTerms {
        chi: c.chi,
        requested: n,
        available: c.values.len(),
    })?;
    if let Some(c1) = values.get(1) {
        if !c1.is_zero() {
            return Err(DecompError::HeightOne {
                chi: c.chi,
                value: c1.clone(),
            });
        }
    }
    if let Some(c0) = values.first() {
        let expected = u8::from(is_trivial);
        if *c0 != BigInt::from(expected) {
            return Err(DecompError::Vacuum {
                chi: c.chi,
                value: c0.clone(),
                expected,
            });
        }
    }
    let coeffs = deconvolve_with_euler(values);
    let bad = coeffs
        .iter()
        .enumerate()
        .find(|(h, a)| a.is_negative() && !(is_trivial && *h == 1));
    if let Some((h, a)) = bad {
        return Err(DecompError::NotSingularSeries {
            chi: c.chi,
            h,
            value: a.clone(),
        });
    }
    Ok(CharacterColumn::unchecked(c.chi, coeffs))
}

/// `t_χ` normalized by `deg χ`: `q^{-1} (Σ a_h q^h) / ∏(1 - q^m)`, offset `-1`.
pub fn thompson_prefix_from_column(
    col: &CharacterColumn,
    n: usize,
) -> Result<GradedSeries, DecompError> {
    let g = GradedSeries::from_integers(0, col.prefix(n)?.iter().cloned());
    let inv = euler_function(n).invert(n)?;
    Ok(g.mul(&inv).shift(-GRID))
}

/// `q^{-23/24} G^χ(q) / deg χ`.
pub fn weight_half_form(col: &CharacterColumn, n: usize) -> Result<GradedSeries, DecompError> {
    Ok(GradedSeries::from_integers(
        -23,
        col.prefix(n)?.iter().cloned(),
    ))
}

/// `q^{-23/24} G^χ(q) η(q)^23 / deg χ`; starts at `q^0`.
pub fn weight_twelve_form(col: &CharacterColumn, n: usize) -> Result<GradedSeries, DecompError> {
    Ok(weight_half_form(col, n)?.mul(&eta_power(23, n)))
}

/// Character of the vacuum module, `Σ (p(h) - p(h-1)) q^h`.
pub fn trivial_vacuum_series(n: usize) -> GradedSeries {
    if n == 0 {
        return GradedSeries::zero(0, 0);
    }
    let p = PartitionTable::new(n - 1);
    GradedSeries::from_integers(0, (0..n as i64).map(|h| p.get(h) - p.get(h - 1)))
}

/// Nonzero `(h, a_h)` for `h ≥ 2`.
pub fn first_singular_heights(col: &CharacterColumn) -> Vec<(usize, BigInt)> {
    col.coeffs
        .iter()
        .enumerate()
        .skip(2)
        .filter(|(_, a)| !a.is_zero())
        .map(|(h, a)| (h, a.clone()))
        .collect()
}

/// Degree-weighted total over all characters, `q J(q) ∏(1 - q^m)`, with the
/// trivial-character slots `1, -1` at `q^0, q^1`.
pub fn total_singular_series(n: usize) -> GradedSeries {
    big_j_series(n).shift(GRID).mul(&euler_function(n))
}

/// Checks `Σ_k c_{hk} deg χ_k = [q^{h-1}] J` for `h = 2..=h_max`.
pub fn dimension_identity_check(
    columns: &[CharacterColumn],
    h_max: usize,
) -> Result<VerificationReport, DecompError> {
    let n = h_max + 1;
    let mut totals = vec![BigInt::zero(); n];
    for col in columns {
        let degree = col
            .degree
            .as_ref()
            .ok_or(DecompError::MissingDegree(col.chi))?;
        let degree = BigInt::from(degree.clone());
        let c = convolve_with_partitions(col.prefix(n)?);
        for (t, v) in totals.iter_mut().zip(&c) {
            *t += v * &degree;
        }
    }
    // J starts at q^-1, so [q^{h-1}] J sits at index h
    let j = big_j_series(n).to_integers()?;
    let mut report = VerificationReport::default();
    for h in 2..n {
        report.push(CheckEntry::compare(
            "dimension_identity",
            None,
            Some(h),
            &j[h],
            &totals[h],
        ));
    }
    Ok(report)
}

/// One conjugacy-class contribution to a level: the class has type `n|h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LevelRecord {
    pub n: u64,
    pub h_divisor: u64,
    /// Whether the character is nonzero on the class.
    pub chi_nonzero: bool,
}

/// `lcm{ n_g h_g : χ(g) ≠ 0 }`; `1` for an empty selection.
pub fn level_lcm(records: &[LevelRecord]) -> BigUint {
    records
        .iter()
        .filter(|r| r.chi_nonzero)
        .map(|r| BigUint::from(r.n) * BigUint::from(r.h_divisor))
        .fold(BigUint::one(), num_integer::lcm)
}

/// Common level of every McKay–Thompson series:
/// `2^6 3^3 5^2 7 11 13 17 19 23 29 31 41 47 59 71`.
pub fn common_level() -> BigUint {
    [
        64u64, 27, 25, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71,
    ]
    .into_iter()
    .map(BigUint::from)
    .product()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<u16>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<usize>,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<String>,
}

impl CheckEntry {
    pub fn pass(name: &str, chi: Option<u16>) -> Self {
        Self {
            name: name.to_owned(),
            chi,
            h: None,
            status: CheckStatus::Pass,
            expected: None,
            actual: None,
        }
    }

    pub fn fail(
        name: &str,
        chi: Option<u16>,
        h: Option<usize>,
        expected: impl ToString,
        actual: impl ToString,
    ) -> Self {
        Self {
            name: name.to_owned(),
            chi,
            h,
            status: CheckStatus::Fail,
            expected: Some(expected.to_string()),
            actual: Some(actual.to_string()),
        }
    }

    pub fn compare<T: PartialEq + ToString>(
        name: &str,
        chi: Option<u16>,
        h: Option<usize>,
        expected: &T,
        actual: &T,
    ) -> Self {
        let status = if expected == actual {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        Self {
            name: name.to_owned(),
            chi,
            h,
            status,
            expected: Some(expected.to_string()),
            actual: Some(actual.to_string()),
        }
    }

    fn sort_key(&self) -> (&str, Option<u16>, Option<usize>) {
        (&self.name, self.chi, self.h)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<CheckEntry>,
    pub warnings: Vec<String>,
}

impl VerificationReport {
    pub fn push(&mut self, entry: CheckEntry) {
        self.checks.push(entry);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        self.warnings.extend(other.warnings);
    }

    pub fn overall(&self) -> CheckStatus {
        if self.passed() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    /// Orders entries by `(name, chi, h)`.
    pub fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    }
}

/// Plain and height-weighted sums of a column: `Σ a_h` and `Σ h a_h`.
///
/// A single corrupted entry `a_h → a_h + d` shifts them by `d` and `h d`,
/// which pins down `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowChecksum {
    pub sum: BigInt,
    pub weighted_sum: BigInt,
}

impl RowChecksum {
    pub fn of(coeffs: &[BigInt]) -> Self {
        Self {
            sum: coeffs.iter().sum(),
            weighted_sum: coeffs
                .iter()
                .enumerate()
                .map(|(h, a)| a * BigInt::from(h))
                .sum(),
        }
    }

    /// Height of a single-entry discrepancy between `self` (recorded) and
    /// `actual`, when the difference is consistent with one.
    pub fn locate(&self, actual: &RowChecksum, len: usize) -> Option<usize> {
        let ds = &actual.sum - &self.sum;
        let dw = &actual.weighted_sum - &self.weighted_sum;
        if ds.is_zero() || !(&dw % &ds).is_zero() {
            return None;
        }
        let h = usize::try_from(dw / ds).ok()?;
        (h < len).then_some(h)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub terms: usize,
    /// Highest height for the dimension identity.
    pub dimension_h_max: usize,
    pub checksums: Option<BTreeMap<u16, RowChecksum>>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            terms: TABLE_DEPTH,
            dimension_h_max: 5,
            checksums: None,
        }
    }
}

/// Runs every consistency check over a set of columns.
///
/// Failures are report entries; this never errors.
pub fn verify_corpus(
    columns: &[CharacterColumn],
    degrees: Option<&BTreeMap<u16, BigUint>>,
    options: &VerifyOptions,
) -> VerificationReport {
    let mut report = VerificationReport::default();
    if columns.is_empty() {
        report.warnings.push("corpus contains no columns".to_owned());
        return report;
    }

    let per_column: Vec<VerificationReport> = columns
        .par_iter()
        .map(|col| column_checks(col, options))
        .collect();
    for r in per_column {
        report.extend(r);
    }

    if let Some(sums) = &options.checksums {
        for chi in sums.keys() {
            if !columns.iter().any(|c| c.chi == *chi) {
                report.push(CheckEntry::fail(
                    "checksum",
                    Some(*chi),
                    None,
                    "row present",
                    "row missing",
                ));
            }
        }
    }

    match columns.iter().find(|c| c.is_trivial()) {
        Some(col) => report.extend(trivial_checks(col)),
        None => report
            .warnings
            .push("trivial character column absent; table checks skipped".to_owned()),
    }

    if let Some(degrees) = degrees {
        report.extend(degree_checks(columns, degrees, options.dimension_h_max));
    }

    report.sort();
    report
}

fn column_checks(col: &CharacterColumn, options: &VerifyOptions) -> VerificationReport {
    let chi = Some(col.chi);
    let mut r = VerificationReport::default();

    if col.chi == 0 || col.chi > CHARACTER_COUNT {
        r.push(CheckEntry::fail("chi_range", chi, None, "1..=194", col.chi));
    }

    let violations = col.sign_violations();
    if violations.is_empty() {
        r.push(CheckEntry::pass("column_signs", chi));
    }
    for (h, value) in violations {
        r.push(CheckEntry::fail(
            "column_signs",
            chi,
            Some(h),
            col.slot_rule(h),
            value,
        ));
    }

    if let Some(sums) = &options.checksums {
        let actual = RowChecksum::of(&col.coeffs);
        match sums.get(&col.chi) {
            None => r.push(CheckEntry::fail(
                "checksum",
                chi,
                None,
                "checksum row",
                "none",
            )),
            Some(expected) if *expected == actual => r.push(CheckEntry::pass("checksum", chi)),
            Some(expected) => r.push(CheckEntry::fail(
                "checksum",
                chi,
                expected.locate(&actual, col.coeffs.len()),
                format!("{}/{}", expected.sum, expected.weighted_sum),
                format!("{}/{}", actual.sum, actual.weighted_sum),
            )),
        }
    }

    let n = options.terms.min(col.coeffs.len());
    if n < options.terms {
        r.push(CheckEntry::fail(
            "column_length",
            chi,
            None,
            options.terms,
            col.coeffs.len(),
        ));
    }
    let coeffs = &col.coeffs[..n];

    let c = convolve_with_partitions(coeffs);
    let mut bad_c = c
        .iter()
        .enumerate()
        .filter(|(h, v)| v.is_negative() || (*h == 1 && !v.is_zero()))
        .peekable();
    if bad_c.peek().is_none() {
        r.push(CheckEntry::pass("multiplicities", chi));
    }
    for (h, v) in bad_c {
        let rule = if h == 1 { "0" } else { ">= 0" };
        r.push(CheckEntry::fail("multiplicities", chi, Some(h), rule, v));
    }

    let back = deconvolve_with_euler(&c);
    match back.iter().zip(coeffs).position(|(x, y)| x != y) {
        None => r.push(CheckEntry::pass("roundtrip", chi)),
        Some(h) => r.push(CheckEntry::fail("roundtrip", chi, Some(h), &coeffs[h], &back[h])),
    }

    // These cannot fail on the prefix bounds since n ≤ coeffs.len().
    let half = weight_half_form(col, n).expect("prefix in range");
    let thompson = thompson_prefix_from_column(col, n).expect("prefix in range");
    let rebuilt = thompson.mul(&eta_series(n));
    if rebuilt.offset24() == half.offset24() && rebuilt.agrees_with(&half) {
        r.push(CheckEntry::pass("eta_relation", chi));
    } else {
        let h = half
            .terms()
            .zip(rebuilt.terms())
            .position(|((_, a), (_, b))| a != b);
        r.push(CheckEntry::fail(
            "eta_relation",
            chi,
            h,
            "weight-1/2 form",
            "mismatch",
        ));
    }

    let twelve = weight_twelve_form(col, n).expect("prefix in range");
    if twelve.offset24() == 0 && twelve.is_integral() {
        r.push(CheckEntry::pass("weight_twelve_form", chi));
    } else {
        r.push(CheckEntry::fail(
            "weight_twelve_form",
            chi,
            None,
            "integral at offset 0",
            format!("offset24 {}", twelve.offset24()),
        ));
    }
    r
}

fn trivial_checks(col: &CharacterColumn) -> VerificationReport {
    let chi = Some(col.chi);
    let mut r = VerificationReport::default();

    let vacuum = trivial_vacuum_series(VACUUM_TABLE.len())
        .to_integers()
        .expect("vacuum character is integral");
    push_table(&mut r, "vacuum_table", chi, &VACUUM_TABLE, &vacuum);

    let depth = TRIVIAL_MULTIPLICITIES.len().min(col.coeffs.len());
    let c = convolve_with_partitions(&col.coeffs[..depth]);
    push_table(
        &mut r,
        "trivial_multiplicities",
        chi,
        &TRIVIAL_MULTIPLICITIES[..depth],
        &c,
    );

    let heights: Vec<(usize, BigInt)> = first_singular_heights(col)
        .into_iter()
        .filter(|(h, _)| *h <= 30)
        .collect();
    let expected: Vec<(usize, BigInt)> = TRIVIAL_SINGULAR_HEIGHTS
        .iter()
        .map(|&(h, d)| (h, BigInt::from(d)))
        .collect();
    if heights == expected {
        r.push(CheckEntry::pass("singular_heights", chi));
    } else {
        let at = |list: &[(usize, BigInt)], h: usize| {
            list.iter()
                .find(|(k, _)| *k == h)
                .map(|(_, d)| d.clone())
                .unwrap_or_default()
        };
        for h in 2..=30 {
            let (e, a) = (at(&expected, h), at(&heights, h));
            if e != a {
                r.push(CheckEntry::fail("singular_heights", chi, Some(h), e, a));
            }
        }
    }
    r
}

fn push_table(
    r: &mut VerificationReport,
    name: &str,
    chi: Option<u16>,
    expected: &[u32],
    actual: &[BigInt],
) {
    let mismatches: Vec<usize> = (0..expected.len())
        .filter(|&h| BigInt::from(expected[h]) != actual[h])
        .collect();
    if mismatches.is_empty() {
        r.push(CheckEntry::pass(name, chi));
    }
    for h in mismatches {
        r.push(CheckEntry::fail(name, chi, Some(h), expected[h], &actual[h]));
    }
}

fn degree_checks(
    columns: &[CharacterColumn],
    degrees: &BTreeMap<u16, BigUint>,
    h_max: usize,
) -> VerificationReport {
    let mut r = VerificationReport::default();
    let n = h_max + 1;
    let mut with_degree = Vec::new();
    for col in columns {
        match degrees.get(&col.chi) {
            Some(d) => with_degree.push(col.clone().with_degree(d.clone())),
            None => {
                // the identity only closes if characters without a degree vanish up to h_max
                let c = convolve_with_partitions(&col.coeffs[..n.min(col.coeffs.len())]);
                if let Some(h) = c.iter().position(|v| !v.is_zero()) {
                    r.push(CheckEntry::fail(
                        "dimension_coverage",
                        Some(col.chi),
                        Some(h),
                        "degree",
                        "missing",
                    ));
                }
            }
        }
    }
    for chi in degrees.keys() {
        if !columns.iter().any(|c| c.chi == *chi) {
            r.warnings
                .push(format!("degree given for chi={chi} without a column"));
        }
    }
    match dimension_identity_check(&with_degree, h_max) {
        Ok(dims) => r.extend(dims),
        Err(e) => r.push(CheckEntry::fail(
            "dimension_identity",
            None,
            None,
            "computable",
            e,
        )),
    }
    r
}
