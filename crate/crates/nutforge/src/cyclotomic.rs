//! Cyclotomic polynomials and cyclotomic divisibility of integer polynomials.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num::{BigInt, Zero};

use crate::intpoly::IntPolynomial;

/// All divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Prime factorization by trial division, `(prime, exponent)` pairs ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

fn x_pow_minus_one(n: u64) -> IntPolynomial {
    &IntPolynomial::monomial(1, n as usize) - &IntPolynomial::one()
}

static PHI_CACHE: OnceLock<Mutex<HashMap<u64, IntPolynomial>>> = OnceLock::new();

/// The cyclotomic polynomial of index `b`, computed exactly by dividing
/// `x^b - 1` by the product of the cyclotomic polynomials of the proper
/// divisors of `b`. Results are memoized behind a lock, so concurrent use is
/// safe.
pub fn phi_poly(b: u64) -> IntPolynomial {
    assert!(b >= 1);
    let cache = PHI_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(hit) = guard.get(&b) {
        return hit.clone();
    }
    for d in divisors(b) {
        if guard.contains_key(&d) {
            continue;
        }
        let mut product = IntPolynomial::one();
        for e in divisors(d) {
            if e < d {
                product = &product * &guard[&e];
            }
        }
        let (quotient, remainder) = x_pow_minus_one(d)
            .divrem_monic(&product)
            .expect("product of monic polynomials is monic");
        debug_assert!(remainder.is_zero());
        guard.insert(d, quotient);
    }
    guard[&b].clone()
}

/// Whether the cyclotomic polynomial of index `b` divides `p`, i.e. whether a
/// primitive `b`-th root of unity is among the roots of `p`.
pub fn divides_phi(b: u64, p: &IntPolynomial) -> bool {
    let (_, remainder) = p
        .divrem_monic(&phi_poly(b))
        .expect("cyclotomic polynomials are monic");
    remainder.is_zero()
}

/// Candidate reduced indices for the prime-cancellation step on lacunary
/// polynomials: if a polynomial with `term_count` nonzero terms is divisible
/// by the index-`b` cyclotomic polynomial and the distinct primes `p` of `b`
/// satisfy `sum(p - 2) > term_count - 2`, then at least one of the returned
/// indices `b / p^e` (with `p^e` the full prime power in `b`) also divides
/// it. The result must therefore be treated disjunctively: if no returned
/// index yields a divisor, index `b` cannot either. Empty when the prime
/// inequality fails.
pub fn filaseta_reduce(b: u64, term_count: usize) -> Vec<u64> {
    assert!(b >= 1 && term_count >= 1);
    let factors = factorize(b);
    let total: u64 = factors.iter().map(|&(p, _)| p - 2).sum();
    if factors.is_empty() || (total as i128) <= term_count as i128 - 2 {
        return Vec::new();
    }
    let mut out: Vec<u64> = factors.iter().map(|&(p, e)| b / p.pow(e)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Every `b <= max_b` whose cyclotomic polynomial divides `p`, found by
/// exhaustive testing over the indices whose degree does not exceed `deg p`.
pub fn cyclotomic_divisors_upto(p: &IntPolynomial, max_b: u64) -> Vec<u64> {
    let deg = p.degree().expect("polynomial must be nonzero") as u64;
    (1..=max_b)
        .filter(|&b| totient(b) <= deg && divides_phi(b, p))
        .collect()
}

/// Remainders `x^k mod phi_b` for `k = 0, ..., count - 1`, built
/// incrementally. Entry `k` equals `divrem_monic(x^k, phi_b).1` exactly.
pub fn power_remainders(b: u64, count: usize) -> Vec<IntPolynomial> {
    let phi = phi_poly(b);
    let d = phi.degree().expect("cyclotomic polynomials are nonzero");
    let mut cur = vec![BigInt::zero(); d];
    if d > 0 {
        cur[0] = BigInt::from(1);
    }
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(IntPolynomial::from_coeffs(cur.clone()));
        mul_x_mod(&mut cur, phi.coeffs());
    }
    out
}

/// In-place `cur <- (cur * x) mod phi` on a fixed-width coefficient window;
/// `phi` must be monic of degree `cur.len()`.
pub(crate) fn mul_x_mod(cur: &mut [BigInt], phi: &[BigInt]) {
    let d = cur.len();
    if d == 0 {
        return;
    }
    let top = std::mem::take(&mut cur[d - 1]);
    cur.rotate_right(1);
    if !top.is_zero() {
        for (c, m) in cur.iter_mut().zip(phi.iter().take(d)) {
            if !m.is_zero() {
                *c -= &top * m;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.iter().copied())
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(8), vec![1, 2, 4, 8]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn totient_examples() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        for p in [3u64, 5, 7, 11, 13, 97] {
            assert_eq!(totient(2 * p), p - 1);
        }
    }

    #[test]
    fn phi_small_indices() {
        assert_eq!(phi_poly(1), p(&[-1, 1]));
        assert_eq!(phi_poly(2), p(&[1, 1]));
        assert_eq!(phi_poly(3), p(&[1, 1, 1]));
        assert_eq!(phi_poly(4), p(&[1, 0, 1]));
        assert_eq!(phi_poly(6), p(&[1, -1, 1]));
        assert_eq!(phi_poly(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_105_has_coefficient_minus_two() {
        // first index whose cyclotomic polynomial has a coefficient outside
        // {-1, 0, 1}
        let phi = phi_poly(105);
        assert_eq!(phi.degree(), Some(totient(105) as usize));
        assert_eq!(phi.coeff(7), BigInt::from(-2));
    }

    #[test]
    fn phi_product_over_divisors() {
        for n in 1..=60u64 {
            let mut prod = IntPolynomial::one();
            for d in divisors(n) {
                prod = &prod * &phi_poly(d);
            }
            assert_eq!(prod, x_pow_minus_one(n), "n = {n}");
        }
    }

    #[test]
    fn phi_degree_is_totient() {
        for b in 1..=120u64 {
            assert_eq!(phi_poly(b).degree(), Some(totient(b) as usize));
        }
    }

    #[test]
    fn phi_prime_power_substitution() {
        for b in 1..=120u64 {
            for (pr, e) in factorize(b) {
                if e >= 2 {
                    assert_eq!(
                        phi_poly(b),
                        phi_poly(b / pr).compose_power(pr as usize),
                        "b = {b}, p = {pr}"
                    );
                }
            }
        }
    }

    #[test]
    fn phi_prime_and_twice_prime_shapes() {
        for pr in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 97] {
            let expect_p = IntPolynomial::from_coeffs(vec![1i64; pr as usize]);
            let alternating: Vec<i64> = (0..pr).map(|j| if j % 2 == 0 { 1 } else { -1 }).collect();
            assert_eq!(phi_poly(pr), expect_p);
            assert_eq!(phi_poly(2 * pr), IntPolynomial::from_coeffs(alternating));
        }
    }

    #[test]
    fn divides_phi_examples() {
        assert!(divides_phi(4, &p(&[-1, 0, 0, 0, 1])));
        // z4 = 3x^4 - 2x^2 + 3 leaves -2x^2 mod phi_8
        let z4 = p(&[3, 0, -2, 0, 3]);
        assert!(!divides_phi(8, &z4));
        let (_, r) = z4.divrem_monic(&phi_poly(8)).unwrap();
        assert_eq!(r, p(&[0, 0, -2]));
        assert!(!divides_phi(2, &p(&[-1, 1])));
        assert!(divides_phi(5, &IntPolynomial::zero()));
    }

    #[test]
    fn filaseta_reduce_examples() {
        // 78 = 2 * 3 * 13 and 13 - 2 > 10 - 2
        let r = filaseta_reduce(78, 10);
        assert!(r.contains(&6));
        assert_eq!(r, vec![6, 26, 39]);
        assert!(filaseta_reduce(6, 10).is_empty());
        // 105 = 3 * 5 * 7 and (3-2) + (5-2) + (7-2) = 9 > 8
        assert_eq!(filaseta_reduce(105, 10), vec![15, 21, 35]);
    }

    #[test]
    fn cyclotomic_divisors_examples() {
        assert_eq!(cyclotomic_divisors_upto(&p(&[-1, 0, 0, 0, 1]), 10), vec![1, 2, 4]);
        assert_eq!(cyclotomic_divisors_upto(&phi_poly(8), 16), vec![8]);
        // z9 has no root of unity among its roots
        let z9 = p(&[2, 2, -1, 2, -2, 2, -1, 2, 2]);
        assert!(cyclotomic_divisors_upto(&z9, 30).is_empty());
    }

    #[test]
    fn power_remainders_match_divrem() {
        for b in [1u64, 2, 3, 8, 12, 45] {
            let phi = phi_poly(b);
            let table = power_remainders(b, 2 * b as usize);
            for (k, entry) in table.iter().enumerate() {
                let (_, r) = IntPolynomial::monomial(1, k).divrem_monic(&phi).unwrap();
                assert_eq!(entry, &r, "b = {b}, k = {k}");
            }
        }
    }
}
