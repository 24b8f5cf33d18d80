//! Small integer helpers: prime factorizations, modular powers and inverses.

use std::fmt;

pub use num_integer::{gcd, lcm};

/// Prime factorization of a positive integer as `(p, e)` pairs sorted by `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeFactorization {
    pairs: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    /// Factors `n` by trial division. `n = 1` yields the empty factorization.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn of(mut n: u64) -> Self {
        assert!(n > 0, "cannot factor zero");
        let mut pairs = Vec::new();
        let mut p = 2u64;
        while p * p <= n {
            if n.is_multiple_of(p) {
                let mut e = 0;
                while n.is_multiple_of(p) {
                    n /= p;
                    e += 1;
                }
                pairs.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if n > 1 {
            pairs.push((n, 1));
        }
        Self { pairs }
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// The set of prime divisors, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    /// `p^e` where `p^e` exactly divides the factored integer (1 if `p` does not divide it).
    pub fn p_part(&self, p: u64) -> u64 {
        self.pairs
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(1, |&(q, e)| q.pow(e))
    }

    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn is_square_free(&self) -> bool {
        self.pairs.iter().all(|&(_, e)| e == 1)
    }
}

impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// The p-part of `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut q = 1;
    let mut n = n;
    while n.is_multiple_of(p) {
        n /= p;
        q *= p;
    }
    q
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && PrimeFactorization::of(n).pairs == [(n, 1)]
}

/// True iff `n` is a power of `p` (including `p^0 = 1`).
pub fn is_power_of(n: u64, p: u64) -> bool {
    n > 0 && p_part(n, p) == n
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    result
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(m as i128) as u64)
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_basics() {
        let f = PrimeFactorization::of(360);
        assert_eq!(f.pairs(), &[(2, 3), (3, 2), (5, 1)]);
        assert_eq!(f.value(), 360);
        assert_eq!(f.p_part(3), 9);
        assert_eq!(f.p_part(7), 1);
        assert!(!f.is_square_free());
        assert!(PrimeFactorization::of(210).is_square_free());
        assert!(PrimeFactorization::of(1).pairs().is_empty());
        assert_eq!(PrimeFactorization::of(97).pairs(), &[(97, 1)]);
        assert_eq!(f.to_string(), "2^3·3^2·5");
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(pow_mod(2, 10, 1000), 24);
        assert_eq!(pow_mod(3, 3, 7), 6);
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(2, 4), None);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert!(is_prime(2) && is_prime(13) && !is_prime(1) && !is_prime(15));
        assert!(is_power_of(8, 2) && is_power_of(1, 3) && !is_power_of(12, 2));
    }
}
