//! Elementary number theory on small integers: gcd/lcm, Euler's totient,
//! and prime-power recognition.

/// Greatest common divisor. `gcd(0, 0) == 0`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least common multiple of two positive integers.
pub fn lcm(a: u64, b: u64) -> u64 {
    assert!(a >= 1 && b >= 1, "lcm requires positive arguments");
    a / gcd(a, b) * b
}

/// Euler's totient: the number of integers in `[1, n]` coprime to `n`.
///
/// Computed by trial-division factorization, so it stays exact for any
/// `u64` input at the group orders this crate handles.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi is undefined for n = 0");
    let mut phi = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

/// If `n = p^k` for a prime `p` and `k >= 1`, returns `Some(p)`.
///
/// `n = 1` yields `None`: the order-1 case is always handled separately by
/// callers, which branch on the identity element first.
pub fn prime_power_base(n: u64) -> Option<u64> {
    assert!(n >= 1, "prime_power_base is undefined for n = 0");
    if n == 1 {
        return None;
    }
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            return if m == 1 { Some(p) } else { None };
        }
        p += 1;
    }
    // m is prime
    Some(m)
}

/// True iff `n` is a prime power `p^k` with `k >= 1` (so `1` is excluded).
pub fn is_prime_power(n: u64) -> bool {
    prime_power_base(n).is_some()
}
