//! Exact truncated q-series with exponents on the (1/24)·Z lattice.
//!
//! A [`GradedSeries`] stores a leading exponent `offset24` (in units of 1/24)
//! and a run of exact rational coefficients spaced one integer power of `q`
//! apart. Coefficient `i` multiplies `q^((offset24 + 24 i) / 24)`. The number
//! of stored coefficients is the truncation order: nothing is known about the
//! series from exponent `offset24 + 24 * order` onwards, and no operation ever
//! pretends otherwise.

mod modular;
mod partition;

pub use modular::{
    big_j_series, delta_from_eisenstein, delta_series, eisenstein_series, eta_power, eta_series,
    euler_function, j_series, partition_series,
};
pub use partition::{partition_numbers, PartitionTable};

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Number of grading slots per integer power of `q`.
pub const GRID: i64 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series offsets {0}/24 and {1}/24 do not lie on a common integer grid")]
    IncompatibleGrid(i64, i64),
    #[error("non-unit series: leading coefficient is zero")]
    NonUnit,
    #[error("cannot produce {requested} terms from a series truncated at {available}")]
    TruncationExceeded { requested: usize, available: usize },
    #[error("coefficient of q^{} is not an integer", format_exponent(*.0))]
    NotIntegral(i64),
    #[error("unsupported Eisenstein weight {0} (expected 4 or 6)")]
    UnsupportedWeight(u32),
    #[error("series must have at least one term")]
    Empty,
}

/// Truncated formal series `Σ c_i q^((offset24 + 24 i)/24)`.
#[derive(Clone, Debug)]
pub struct GradedSeries {
    offset24: i64,
    coeffs: Vec<BigRational>,
}

impl GradedSeries {
    pub fn new(offset24: i64, coeffs: Vec<BigRational>) -> Self {
        Self { offset24, coeffs }
    }

    pub fn from_integers<I, T>(offset24: i64, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self {
            offset24,
            coeffs: coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        }
    }

    pub fn zero(offset24: i64, order: usize) -> Self {
        Self {
            offset24,
            coeffs: vec![BigRational::zero(); order],
        }
    }

    /// The constant `1` known to `order` terms.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(0, order);
        if let Some(c) = s.coeffs.first_mut() {
            *c = BigRational::one();
        }
        s
    }

    pub fn offset24(&self) -> i64 {
        self.offset24
    }

    /// Truncation order: the number of valid terms.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// First exponent (in 1/24 units) past the valid range.
    pub fn end24(&self) -> i64 {
        self.offset24 + GRID * self.coeffs.len() as i64
    }

    /// Coefficient of `q^(exp24/24)`.
    ///
    /// Exponents below the offset are known zeros; exponents off the grid are
    /// zero as well. Returns `None` only past the truncation order.
    pub fn coeff_at(&self, exp24: i64) -> Option<BigRational> {
        if exp24 >= self.end24() {
            return None;
        }
        let delta = exp24 - self.offset24;
        if delta < 0 || delta % GRID != 0 {
            return Some(BigRational::zero());
        }
        Some(self.coeffs[(delta / GRID) as usize].clone())
    }

    /// Iterates `(exponent24, coefficient)` over the valid range.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.offset24 + GRID * i as i64, c))
    }

    fn check_grid(&self, other: &Self) -> Result<(), SeriesError> {
        if (self.offset24 - other.offset24).rem_euclid(GRID) != 0 {
            return Err(SeriesError::IncompatibleGrid(self.offset24, other.offset24));
        }
        Ok(())
    }

    /// Sum on the common valid range. The result starts at the smaller offset
    /// and stops where the first operand's truncation does.
    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_grid(other)?;
        let start = self.offset24.min(other.offset24);
        let end = self.end24().min(other.end24());
        let len = if end > start {
            ((end - start) / GRID) as usize
        } else {
            0
        };
        let coeffs = (0..len)
            .map(|i| {
                let e = start + GRID * i as i64;
                // both lookups are inside the valid ranges since e < end
                self.coeff_at(e).unwrap() + other.coeff_at(e).unwrap()
            })
            .collect();
        Ok(Self::new(start, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::new(
            self.offset24,
            self.coeffs.iter().map(|c| c * factor).collect(),
        )
    }

    /// Multiplies by `q^(delta24/24)`.
    pub fn shift(&self, delta24: i64) -> Self {
        Self::new(self.offset24 + delta24, self.coeffs.clone())
    }

    /// Keeps the first `n` terms; never extends.
    pub fn truncate(&self, n: usize) -> Result<Self, SeriesError> {
        if n > self.order() {
            return Err(SeriesError::TruncationExceeded {
                requested: n,
                available: self.order(),
            });
        }
        Ok(Self::new(self.offset24, self.coeffs[..n].to_vec()))
    }

    /// Cauchy product. Offsets add; the order is the smaller of the two.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let offset24 = self.offset24 + other.offset24;
        if let (Some(a), Some(b)) = (self.integer_coeffs(), other.integer_coeffs()) {
            let c = convolve_integers(&a[..n], &b[..n]);
            return Self::from_integers(offset24, c);
        }
        let mut out = vec![BigRational::zero(); n];
        for (i, ai) in self.coeffs[..n].iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] += ai * bj;
            }
        }
        Self::new(offset24, out)
    }

    /// `self^k` for `k ≥ 0`, by repeated squaring.
    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Multiplicative inverse to `n` terms. The result has offset `-offset24`.
    pub fn invert(&self, n: usize) -> Result<Self, SeriesError> {
        if n > self.order() {
            return Err(SeriesError::TruncationExceeded {
                requested: n,
                available: self.order(),
            });
        }
        let lead = self.coeffs.first().ok_or(SeriesError::Empty)?;
        if lead.is_zero() {
            return Err(SeriesError::NonUnit);
        }
        let support: Vec<usize> = (1..n).filter(|&i| !self.coeffs[i].is_zero()).collect();

        if let Some(a) = self.integer_coeffs() {
            if a[0].abs().is_one() {
                let unit = a[0].clone();
                let mut b: Vec<BigInt> = Vec::with_capacity(n);
                b.push(unit.clone());
                for k in 1..n {
                    let mut acc = BigInt::zero();
                    for &i in support.iter().take_while(|&&i| i <= k) {
                        acc += &a[i] * &b[k - i];
                    }
                    // 1/unit == unit for unit = ±1
                    b.push(-(acc * &unit));
                }
                return Ok(Self::from_integers(-self.offset24, b));
            }
        }

        let inv_lead = lead.recip();
        let mut b: Vec<BigRational> = Vec::with_capacity(n);
        b.push(inv_lead.clone());
        for k in 1..n {
            let mut acc = BigRational::zero();
            for &i in support.iter().take_while(|&&i| i <= k) {
                acc += &self.coeffs[i] * &b[k - i];
            }
            b.push(-(acc * &inv_lead));
        }
        Ok(Self::new(-self.offset24, b))
    }

    fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integrality assertion: all coefficients as integers, or the exponent
    /// of the first offender.
    pub fn to_integers(&self) -> Result<Vec<BigInt>, SeriesError> {
        self.terms()
            .map(|(e, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(SeriesError::NotIntegral(e))
                }
            })
            .collect()
    }

    /// Equality up to the common truncation order.
    pub fn agrees_with(&self, other: &Self) -> bool {
        if self.check_grid(other).is_err() {
            return false;
        }
        let start = self.offset24.min(other.offset24);
        let end = self.end24().min(other.end24());
        (start..end)
            .step_by(GRID as usize)
            .all(|e| self.coeff_at(e) == other.coeff_at(e))
    }
}

impl Neg for &GradedSeries {
    type Output = GradedSeries;

    fn neg(self) -> GradedSeries {
        GradedSeries::new(self.offset24, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for GradedSeries {
    type Output = GradedSeries;

    fn neg(self) -> GradedSeries {
        -&self
    }
}

impl Mul for &GradedSeries {
    type Output = GradedSeries;

    fn mul(self, rhs: &GradedSeries) -> GradedSeries {
        GradedSeries::mul(self, rhs)
    }
}

impl fmt::Display for GradedSeries {
    /// One `q^e: c` line per valid term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in self.terms() {
            writeln!(f, "q^{}: {}", format_exponent(e), c)?;
        }
        Ok(())
    }
}

/// Renders `exp24/24` in lowest terms: `-1`, `0`, `1/24`, `-23/24`.
pub fn format_exponent(exp24: i64) -> String {
    let g = exp24.gcd(&GRID);
    let (num, den) = (exp24 / g, GRID / g);
    if den == 1 {
        num.to_string()
    } else {
        format!("{num}/{den}")
    }
}

fn convolve_integers(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().min(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, ai) in a[..n].iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b[..n - i].iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}
