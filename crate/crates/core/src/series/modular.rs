//! Standard q-expansions: partition series, Euler function, eta powers,
//! Eisenstein series, the discriminant and the modular invariant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{GradedSeries, PartitionTable, SeriesError, GRID};

/// `Σ_{m<n} p(m) q^m`.
pub fn partition_series(n: usize) -> GradedSeries {
    if n == 0 {
        return GradedSeries::zero(0, 0);
    }
    PartitionTable::new(n - 1).to_series()
}

/// `∏_{m≥1} (1 - q^m)` to `n` terms, from the pentagonal number theorem:
/// `1 + Σ_{k≥1} (-1)^k (q^{k(3k-1)/2} + q^{k(3k+1)/2})`.
pub fn euler_function(n: usize) -> GradedSeries {
    let mut coeffs = vec![0i8; n];
    if let Some(c) = coeffs.first_mut() {
        *c = 1;
    }
    for k in 1usize.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let g1 = k * (3 * k - 1) / 2;
        if g1 >= n {
            break;
        }
        coeffs[g1] = sign;
        let g2 = k * (3 * k + 1) / 2;
        if g2 < n {
            coeffs[g2] = sign;
        }
    }
    GradedSeries::from_integers(0, coeffs.into_iter().map(i64::from))
}

/// Dedekind eta `q^{1/24} ∏ (1 - q^m)` to `n` terms.
pub fn eta_series(n: usize) -> GradedSeries {
    euler_function(n).shift(1)
}

/// `η^k` to `n` terms; offset `k/24`.
pub fn eta_power(k: u32, n: usize) -> GradedSeries {
    euler_function(n).pow(k).shift(i64::from(k))
}

/// `Δ = η^24 = q ∏ (1 - q^m)^24`.
pub fn delta_series(n: usize) -> GradedSeries {
    eta_power(24, n)
}

/// `Δ = (E4^3 - E6^2) / 1728`, independent of the product formula.
pub fn delta_from_eisenstein(n: usize) -> GradedSeries {
    // E4^3 - E6^2 has zero constant term, so one extra term keeps n after the shift.
    let e4 = eisenstein_series(4, n + 1).expect("weight 4 is supported");
    let e6 = eisenstein_series(6, n + 1).expect("weight 6 is supported");
    let diff = e4
        .pow(3)
        .sub(&e6.mul(&e6))
        .expect("both at integer offsets");
    let scaled = diff.scale(&BigRational::new(BigInt::one(), BigInt::from(1728)));
    GradedSeries::new(GRID, scaled.coeffs()[1..].to_vec())
}

/// Normalized Eisenstein series `E4 = 1 + 240 Σ σ3(m) q^m` and
/// `E6 = 1 - 504 Σ σ5(m) q^m`.
pub fn eisenstein_series(weight: u32, n: usize) -> Result<GradedSeries, SeriesError> {
    let (power, factor) = match weight {
        4 => (3u32, BigInt::from(240)),
        6 => (5u32, BigInt::from(-504)),
        w => return Err(SeriesError::UnsupportedWeight(w)),
    };
    let mut coeffs: Vec<BigInt> = vec![BigInt::zero(); n];
    if n > 0 {
        coeffs[0] = BigInt::one();
    }
    // sieve the divisor sums: every d contributes d^power to each multiple
    for d in 1..n {
        let dp = BigInt::from(d).pow(power);
        let term = &factor * &dp;
        for m in (d..n).step_by(d) {
            coeffs[m] += &term;
        }
    }
    Ok(GradedSeries::from_integers(0, coeffs))
}

/// `j = E4^3 / Δ` to `n` terms, starting at `q^{-1}`.
pub fn j_series(n: usize) -> GradedSeries {
    let e4 = eisenstein_series(4, n).expect("weight 4 is supported");
    let delta_inv = delta_series(n)
        .invert(n)
        .expect("the discriminant has leading coefficient 1");
    e4.pow(3).mul(&delta_inv)
}

/// `J = j - 744`.
pub fn big_j_series(n: usize) -> GradedSeries {
    let j = j_series(n);
    let mut coeffs = j.coeffs().to_vec();
    if let Some(c) = coeffs.get_mut(1) {
        *c -= BigRational::from_integer(BigInt::from(744));
    }
    GradedSeries::new(j.offset24(), coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &GradedSeries) -> Vec<BigInt> {
        s.to_integers().unwrap()
    }

    fn small(s: &GradedSeries) -> Vec<i64> {
        ints(s).iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn euler_first_terms() {
        assert_eq!(small(&euler_function(8)), vec![1, -1, -1, 0, 0, 1, 0, 1]);
        let e = euler_function(16);
        assert_eq!(small(&e)[12], -1);
        assert_eq!(small(&e)[15], -1);
    }

    #[test]
    fn euler_times_partition_is_one() {
        let prod = euler_function(60).mul(&partition_series(60));
        assert!(prod.agrees_with(&GradedSeries::one(60)));
    }

    #[test]
    fn partition_is_inverse_of_euler() {
        let inv = euler_function(40).invert(40).unwrap();
        assert!(inv.agrees_with(&partition_series(40)));
    }

    #[test]
    fn eta_offsets() {
        assert_eq!(eta_series(4).offset24(), 1);
        let e23 = eta_power(23, 10);
        assert_eq!(e23.offset24(), 23);
        assert_eq!(small(&eta_power(1, 3)), vec![1, -1, -1]);
        assert!(e23.mul(&eta_series(10)).agrees_with(&eta_power(24, 10)));
    }

    #[test]
    fn delta_leading_coefficients() {
        let d = delta_series(4);
        assert_eq!(d.offset24(), 24);
        assert_eq!(small(&d), vec![1, -24, 252, -1472]);
        assert!(delta_from_eisenstein(30).agrees_with(&delta_series(30)));
    }

    #[test]
    fn eisenstein_leading_coefficients() {
        assert_eq!(small(&eisenstein_series(4, 3).unwrap()), vec![1, 240, 2160]);
        assert_eq!(
            small(&eisenstein_series(6, 3).unwrap()),
            vec![1, -504, -16632]
        );
        assert_eq!(
            eisenstein_series(8, 3).unwrap_err(),
            SeriesError::UnsupportedWeight(8)
        );
    }

    #[test]
    fn big_j_leading_coefficients() {
        let j = big_j_series(5);
        assert_eq!(j.offset24(), -24);
        assert_eq!(small(&j), vec![1, 0, 196884, 21493760, 864299970]);
        let diff = j_series(5).sub(&j).unwrap();
        assert_eq!(small(&diff), vec![0, 744, 0, 0, 0]);
    }

    #[test]
    fn big_j_one_term() {
        assert_eq!(small(&big_j_series(1)), vec![1]);
    }
}
