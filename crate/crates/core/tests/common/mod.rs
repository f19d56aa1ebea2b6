//! Independent oracles shared by the integration suites. Nothing here calls
//! into the library's series arithmetic.

#![allow(dead_code)]

use std::path::PathBuf;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn fixture_bytes(name: &str) -> Vec<u8> {
    std::fs::read(fixture(name)).expect("fixture present")
}

/// Counts partitions of `n` by walking every nonincreasing sequence of parts.
pub fn brute_force_partitions(n: u32) -> u64 {
    fn walk(remaining: u32, max_part: u32) -> u64 {
        if remaining == 0 {
            return 1;
        }
        (1..=max_part.min(remaining))
            .map(|part| walk(remaining - part, part))
            .sum()
    }
    walk(n, n)
}

/// `∏_{m=1}^{n-1} (1 - q^m)` by multiplying the factors in one at a time.
pub fn euler_product(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); n];
    if n > 0 {
        c[0] = BigInt::one();
    }
    for m in 1..n {
        for i in (m..n).rev() {
            let prev = c[i - m].clone();
            c[i] -= prev;
        }
    }
    c
}

pub fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|k| (0..=k).map(|i| &a[i] * &b[k - i]).sum())
        .collect()
}

/// Power series inverse for a leading coefficient of 1.
pub fn invert_monic(a: &[BigInt]) -> Vec<BigInt> {
    assert!(a[0].is_one());
    let mut b: Vec<BigInt> = vec![BigInt::one()];
    for k in 1..a.len() {
        let s: BigInt = (1..=k).map(|i| &a[i] * &b[k - i]).sum();
        b.push(-s);
    }
    b
}

fn sigma(m: u64, k: u32) -> BigInt {
    (1..=m)
        .filter(|d| m % d == 0)
        .map(|d| BigInt::from(d).pow(k))
        .sum()
}

pub fn e4(n: usize) -> Vec<BigInt> {
    (0..n as u64)
        .map(|m| if m == 0 { BigInt::one() } else { 240 * sigma(m, 3) })
        .collect()
}

pub fn e6(n: usize) -> Vec<BigInt> {
    (0..n as u64)
        .map(|m| if m == 0 { BigInt::one() } else { -504 * sigma(m, 5) })
        .collect()
}

/// `Δ/q` from `(E4³ - E6²)/1728`, `n` terms.
pub fn delta_over_q(n: usize) -> Vec<BigInt> {
    let a = e4(n + 1);
    let b = e6(n + 1);
    let a3 = convolve(&convolve(&a, &a), &a);
    let b2 = convolve(&b, &b);
    (1..=n)
        .map(|i| {
            let d: BigInt = &a3[i] - &b2[i];
            assert!((&d % BigInt::from(1728)).is_zero());
            d / 1728
        })
        .collect()
}

/// Coefficients of `J = E4³/Δ - 744` from `q^{-1}` on, `n` terms.
pub fn big_j(n: usize) -> Vec<BigInt> {
    let a = e4(n);
    let a3 = convolve(&convolve(&a, &a), &a);
    let mut j = convolve(&a3, &invert_monic(&delta_over_q(n)));
    if n > 1 {
        j[1] -= 744;
    }
    j
}
