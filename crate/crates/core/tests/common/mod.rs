//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use skeinpos_core::sequences::UniPoly;
use skeinpos_core::LaurentPoly;

fn binom(n: i128, k: i128) -> i128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Integer coefficients of `T_n`, lowest degree first, from the closed form
/// `T_n(t) = Σ_j (-1)^j n/(n-j) C(n-j, j) t^(n-2j)`.
pub fn chebyshev_closed_form(n: usize) -> Vec<i128> {
    let mut out = vec![0i128; n + 1];
    if n == 0 {
        out[0] = 1;
        return out;
    }
    let n = n as i128;
    for j in 0..=n / 2 {
        let c = n * binom(n - j, j) / (n - j);
        out[(n - 2 * j) as usize] = if j % 2 == 0 { c } else { -c };
    }
    out
}

/// Schoolbook product of dense integer coefficient vectors.
pub fn dense_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn dense_add(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

pub fn to_unipoly(c: &[i128]) -> UniPoly {
    UniPoly::from_coeffs(c.iter().map(|&x| LaurentPoly::constant(x)).collect())
}

/// Coefficients of `T_n(x + 1/x)` as a Laurent polynomial in `x`, expanded
/// from the closed form by binomial powers. Should equal `x^n + x^-n`.
pub fn chebyshev_at_x_plus_inverse(n: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (d, c) in chebyshev_closed_form(n).into_iter().enumerate() {
        for i in 0..=d {
            // (x + 1/x)^d contributes C(d, i) x^(d - 2i)
            let coeff = c * binom(d as i128, i as i128);
            out += LaurentPoly::monomial(coeff as i64, d as i64 - 2 * i as i64);
        }
    }
    out
}
