//! Elementary integer arithmetic: factorization, totient, Möbius, divisors,
//! primality, and linear sieves. Deterministic trial division throughout,
//! bounded at 10^9.

use crate::error::{ensure, Result};

pub const FACTOR_BOUND: u64 = 1_000_000_000;

/// Prime factorization `n = Π p^e` by trial division, `1 ≤ n ≤ 10^9`.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    ensure!(n >= 1 && n <= FACTOR_BOUND, "1 ≤ n ≤ 10⁹ (trial-division bound)");
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2u64;
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
    Ok(out)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut p = 3u64;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 2;
    }
    true
}

/// Euler totient of `n ≥ 1`.
pub fn totient(n: u64) -> Result<u64> {
    let mut phi = 1u64;
    for (p, e) in factorize(n)? {
        phi *= (p - 1) * p.pow(e - 1);
    }
    Ok(phi)
}

/// Möbius function of `n ≥ 1`.
pub fn mobius(n: u64) -> Result<i64> {
    let f = factorize(n)?;
    if f.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if f.len() % 2 == 0 { 1 } else { -1 })
}

/// `(φ(n), μ(n))` in one call.
pub fn totient_mobius(n: u64) -> Result<(u64, i64)> {
    Ok((totient(n)?, mobius(n)?))
}

/// Divisors of `n ≥ 1` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num::integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num::integer::lcm(a, b)
}

/// `φ` for every index `0..=n` (index 0 unused, set to 0).
pub fn totient_sieve(n: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for p in 2..=n {
        if phi[p] == p as u64 {
            // p prime
            let mut k = p;
            while k <= n {
                phi[k] -= phi[k] / p as u64;
                k += p;
            }
        }
    }
    if n >= 1 {
        phi[1] = 1;
    }
    phi
}

/// `μ` for every index `0..=n` (index 0 unused, set to 0).
pub fn mobius_sieve(n: usize) -> Vec<i64> {
    let mut mu = vec![1i64; n + 1];
    let mut is_comp = vec![false; n + 1];
    let mut primes = Vec::new();
    if n >= 1 {
        mu[0] = 0;
    }
    for i in 2..=n {
        if !is_comp[i] {
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            if i * p > n {
                break;
            }
            is_comp[i * p] = true;
            if i % p == 0 {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    mu
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_basics() {
        assert_eq!(factorize(1).unwrap(), vec![]);
        assert_eq!(factorize(12).unwrap(), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(97).unwrap(), vec![(97, 1)]);
        assert!(factorize(0).is_err());
        assert!(factorize(FACTOR_BOUND + 1).is_err());
    }

    #[test]
    fn totient_mobius_examples() {
        assert_eq!(totient_mobius(1).unwrap(), (1, 1));
        assert_eq!(totient_mobius(6).unwrap(), (2, 1));
        assert_eq!(totient_mobius(4).unwrap(), (2, 0));
        assert_eq!(totient_mobius(30).unwrap(), (8, -1));
    }

    #[test]
    fn sieves_match_pointwise() {
        let n = 500;
        let phi = totient_sieve(n);
        let mu = mobius_sieve(n);
        for k in 1..=n {
            assert_eq!(phi[k], totient(k as u64).unwrap(), "phi({k})");
            assert_eq!(mu[k], mobius(k as u64).unwrap(), "mu({k})");
        }
    }

    #[test]
    fn divisors_ascending() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(999999937));
        assert!(!is_prime(1));
        assert!(!is_prime(1000000000));
    }
}
