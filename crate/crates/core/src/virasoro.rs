//! Virasoro characters at c = 24 and the integer analysis of embeddings
//! between Verma modules.
//!
//! A singular vector in `M(h, 24)` corresponds to integers `α, β` with
//! `(α - εβ)² = 4εh + (ε - 1)²`, where `ε` and its conjugate `ε̄` are the
//! non-real roots of `t + 1/t = -11/6`. Only the rational symmetric functions
//! of `ε, ε̄` are needed: adding the equation to its conjugate and dividing
//! the difference by `ε - ε̄` gives two integer quadratic relations, and
//! eliminating `αβ` between them forces `α² = β²`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::series::{partition_series, GradedSeries, GRID};

pub const CENTRAL_CHARGE: i64 = 24;

/// Character of the Verma module `M(h, 24)`.
#[derive(Clone, Debug)]
pub struct VermaCharacter {
    pub height: u64,
    pub series: GradedSeries,
}

/// `x^h Σ p(m) x^m` to `n` terms.
pub fn verma_character(height: u64, n: usize) -> VermaCharacter {
    VermaCharacter {
        height,
        series: partition_series(n).shift(GRID * height as i64),
    }
}

/// Character of the irreducible `L(h, 24)`: the vacuum quotient
/// `M(0,24)/M(1,24)` at `h = 0`, the Verma module itself otherwise.
pub fn irreducible_character(height: u64, n: usize) -> GradedSeries {
    let verma = verma_character(height, n).series;
    if height > 0 {
        return verma;
    }
    // M(1,24) is known one slot further than M(0,24), so the difference keeps n terms.
    let sub = verma_character(1, n).series;
    verma.sub(&sub).expect("both characters sit on the integer grid")
}

/// Rational symmetric functions of the conjugate pair `ε, ε̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonInvariants {
    pub product: BigRational,
    pub sum: BigRational,
    pub power_sum: BigRational,
}

pub fn epsilon_invariants() -> EpsilonInvariants {
    EpsilonInvariants {
        product: BigRational::one(),
        sum: ratio(-11, 6),
        power_sum: ratio(49, 36),
    }
}

impl EpsilonInvariants {
    /// Newton's identity `ε² + ε̄² = (ε + ε̄)² - 2εε̄`.
    pub fn is_consistent(&self) -> bool {
        self.power_sum == &self.sum * &self.sum - BigRational::from_integer(2.into()) * &self.product
    }
}

/// `a α² + b αβ + c β² = d h + e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticRelation {
    pub alpha_sq: BigInt,
    pub alpha_beta: BigInt,
    pub beta_sq: BigInt,
    pub height: BigInt,
    pub constant: BigInt,
}

impl QuadraticRelation {
    /// Clears denominators and removes the common content.
    fn from_rationals(c: [BigRational; 5]) -> Self {
        let lcm = c
            .iter()
            .fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
        let ints: Vec<BigInt> = c.iter().map(|x| (x * &lcm).to_integer()).collect();
        let gcd = ints
            .iter()
            .fold(BigInt::zero(), |acc, x| num_integer::gcd(acc, x.clone()));
        let ints: Vec<BigInt> = if gcd.is_zero() {
            ints
        } else {
            ints.into_iter().map(|x| x / &gcd).collect()
        };
        Self {
            alpha_sq: ints[0].clone(),
            alpha_beta: ints[1].clone(),
            beta_sq: ints[2].clone(),
            height: ints[3].clone(),
            constant: ints[4].clone(),
        }
    }

    pub fn holds(&self, alpha: &BigInt, beta: &BigInt, h: u64) -> bool {
        let h = BigInt::from(h);
        &self.alpha_sq * alpha * alpha + &self.alpha_beta * alpha * beta + &self.beta_sq * beta * beta
            == &self.height * h + &self.constant
    }

    fn combine(&self, other: &Self, factor: &BigInt) -> Self {
        Self {
            alpha_sq: &self.alpha_sq + factor * &other.alpha_sq,
            alpha_beta: &self.alpha_beta + factor * &other.alpha_beta,
            beta_sq: &self.beta_sq + factor * &other.beta_sq,
            height: &self.height + factor * &other.height,
            constant: &self.constant + factor * &other.constant,
        }
    }
}

/// Sum of the equation and its conjugate:
/// `2α² - 2s αβ + P β² = 4s h + P - 2s + 2` with `s = ε + ε̄`, `P = ε² + ε̄²`.
pub fn summed_relation(inv: &EpsilonInvariants) -> QuadraticRelation {
    let two = BigRational::from_integer(2.into());
    let four = BigRational::from_integer(4.into());
    let s = &inv.sum;
    let p = &inv.power_sum;
    QuadraticRelation::from_rationals([
        two.clone(),
        -(&two * s),
        p.clone(),
        &four * s,
        p - &two * s + &two,
    ])
}

/// Difference of the equation and its conjugate, divided by `ε - ε̄`:
/// `-2 αβ + s β² = 4h + s - 2`.
pub fn difference_relation(inv: &EpsilonInvariants) -> QuadraticRelation {
    let s = &inv.sum;
    QuadraticRelation::from_rationals([
        BigRational::zero(),
        BigRational::from_integer((-2).into()),
        s.clone(),
        BigRational::from_integer(4.into()),
        s - BigRational::from_integer(2.into()),
    ])
}

/// Eliminates `αβ` between the two relations. At c = 24 the height and
/// constant terms cancel as well, leaving `α² - β² = 0`.
pub fn eliminated_relation(inv: &EpsilonInvariants) -> QuadraticRelation {
    let sum = summed_relation(inv);
    let diff = difference_relation(inv);
    let factor = -(&sum.alpha_beta / &diff.alpha_beta);
    debug_assert!((&sum.alpha_beta % &diff.alpha_beta).is_zero());
    let combined = sum.combine(&diff, &factor);
    let content = num_integer::gcd(combined.alpha_sq.clone(), combined.beta_sq.clone());
    if content.is_zero() {
        return combined;
    }
    QuadraticRelation {
        alpha_sq: &combined.alpha_sq / &content,
        alpha_beta: &combined.alpha_beta / &content,
        beta_sq: &combined.beta_sq / &content,
        height: &combined.height / &content,
        constant: &combined.constant / &content,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    /// `M(0,24)` contains exactly one proper submodule, isomorphic to `M(1,24)`.
    UniqueSubmoduleHeightOne,
    Irreducible,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::UniqueSubmoduleHeightOne => f.write_str("unique submodule"),
            Verdict::Irreducible => f.write_str("irreducible"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub alpha: BigInt,
    pub beta: BigInt,
    /// Both integer relations hold for this pair at the report's height.
    pub identities_hold: bool,
}

impl Solution {
    pub fn product(&self) -> BigInt {
        &self.alpha * &self.beta
    }
}

/// One `α = δβ` branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub delta: i8,
    pub beta_squared: BigRational,
    pub solutions: Vec<Solution>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub height: u64,
    pub branches: Vec<Branch>,
    pub verdict: Verdict,
}

impl EmbeddingReport {
    pub fn branch(&self, delta: i8) -> Option<&Branch> {
        self.branches.iter().find(|b| b.delta == delta)
    }

    /// Heights `h + αβ` of Verma modules embedded via solutions with
    /// `αβ > 0`, deduplicated and sorted.
    pub fn embedded_heights(&self) -> Vec<BigInt> {
        let h = BigInt::from(self.height);
        let mut out: Vec<BigInt> = self
            .branches
            .iter()
            .flat_map(|b| b.solutions.iter())
            .filter(|s| s.identities_hold && s.product().is_positive())
            .map(|s| &h + s.product())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// The verdict implied by the arithmetic alone, or `None` for an
    /// embedding pattern that c = 24 does not produce.
    pub fn derived_verdict(&self) -> Option<Verdict> {
        match self.embedded_heights().as_slice() {
            [] => Some(Verdict::Irreducible),
            [single] if self.height == 0 && single.is_one() => {
                Some(Verdict::UniqueSubmoduleHeightOne)
            }
            _ => None,
        }
    }
}

impl fmt::Display for EmbeddingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = self.height;
        writeln!(f, "height {h}")?;
        for b in &self.branches {
            let sign = if b.delta > 0 { "+1" } else { "-1" };
            write!(f, "  delta={sign}: beta^2 = {}", b.beta_squared)?;
            if b.solutions.is_empty() {
                let why = if b.beta_squared.is_negative() {
                    "negative"
                } else if !b.beta_squared.is_integer() {
                    "not an integer"
                } else {
                    "not a perfect square"
                };
                writeln!(f, " ({why}); no integer solutions")?;
                continue;
            }
            writeln!(f)?;
            for s in &b.solutions {
                let p = s.product();
                let rel = if p.is_positive() { ">" } else { "<" };
                writeln!(
                    f,
                    "    alpha={} beta={} alpha*beta={} {} 0 identities={}",
                    s.alpha,
                    s.beta,
                    p,
                    rel,
                    if s.identities_hold { "hold" } else { "fail" }
                )?;
            }
        }
        match self.verdict {
            Verdict::UniqueSubmoduleHeightOne => writeln!(
                f,
                "  verdict: M({h},24) has a unique submodule, isomorphic to M(1,24)"
            ),
            Verdict::Irreducible => writeln!(f, "  verdict: M({h},24) is irreducible"),
        }
    }
}

/// `β²` on the branch `α = δβ`, read off the difference relation.
pub fn beta_squared(height: u64, delta: i8) -> BigRational {
    let rel = difference_relation(&epsilon_invariants());
    let d = BigInt::from(delta);
    let denom = &rel.alpha_sq * &d * &d + &rel.alpha_beta * &d + &rel.beta_sq;
    let num = &rel.height * BigInt::from(height) + &rel.constant;
    BigRational::new(num, denom)
}

/// Integer solutions `(α, β)` of the embedding system at height `h`, per branch.
pub fn feigin_fuchs_solutions(height: u64) -> EmbeddingReport {
    let inv = epsilon_invariants();
    let summed = summed_relation(&inv);
    let difference = difference_relation(&inv);
    let branches = [1i8, -1]
        .into_iter()
        .map(|delta| {
            let beta_squared = beta_squared(height, delta);
            let solutions = integer_sqrt(&beta_squared)
                .map(|root| {
                    let mut betas = vec![root.clone()];
                    if !root.is_zero() {
                        betas.push(-root);
                    }
                    betas
                        .into_iter()
                        .map(|beta| {
                            let alpha = BigInt::from(delta) * &beta;
                            let identities_hold = summed.holds(&alpha, &beta, height)
                                && difference.holds(&alpha, &beta, height);
                            Solution {
                                alpha,
                                beta,
                                identities_hold,
                            }
                        })
                        .collect()
                })
                .unwrap_or_default();
            Branch {
                delta,
                beta_squared,
                solutions,
            }
        })
        .collect();
    EmbeddingReport {
        height,
        branches,
        verdict: classify_module(height),
    }
}

/// Structure of `M(h, 24)`: the vacuum Verma module has the single
/// submodule `M(1, 24)`; every positive height is irreducible.
pub fn classify_module(height: u64) -> Verdict {
    if height == 0 {
        Verdict::UniqueSubmoduleHeightOne
    } else {
        Verdict::Irreducible
    }
}

fn integer_sqrt(x: &BigRational) -> Option<BigInt> {
    if !x.is_integer() || x.is_negative() {
        return None;
    }
    let n = x.to_integer();
    let r = n.sqrt();
    (&r * &r == n).then_some(r)
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
