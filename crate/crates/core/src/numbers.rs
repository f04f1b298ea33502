//! Small elementary number theory on machine integers.

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = base as u128 % m128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

pub fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    use num_integer::Integer;
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

/// Least `d >= 1` with `r^d ≡ 1 (mod n)`; callers guarantee `gcd(r, n) = 1`.
pub(crate) fn multiplicative_order_unchecked(r: u64, n: u64) -> u64 {
    if n <= 1 {
        return 1;
    }
    let r = r % n;
    let mut x = r;
    let mut d = 1;
    while x != 1 {
        x = (x as u128 * r as u128 % n as u128) as u64;
        d += 1;
        debug_assert!(d <= n, "r is not a unit mod n");
    }
    d
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
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
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn is_prime_power_of(n: u64, p: u64) -> bool {
    let mut n = n;
    while n > 1 && n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Squarefree part of a positive integer: `n / s^2` for the largest square `s^2 | n`.
pub fn squarefree_part(n: u64) -> u64 {
    factorize(n)
        .iter()
        .filter(|&&(_, e)| e % 2 == 1)
        .map(|&(p, _)| p)
        .product()
}
