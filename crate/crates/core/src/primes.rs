//! The prime enumeration `p_0 = 2, p_1 = 3, p_2 = 5, ...`.
//!
//! Small primes come from a sieve; larger ones from the prime-counting
//! function followed by a segmented sieve. Primes above [`MAX_PRIME`] are out
//! of range.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

pub const MAX_PRIME: u64 = 100_000_000_000;
/// `π(MAX_PRIME)`, so the largest supported index is one less.
pub const PRIMES_UP_TO_MAX: u64 = 4_118_054_813;

const SIEVE_LIMIT: u64 = 1 << 24;
const SEGMENT: u64 = 1 << 20;

fn small_primes() -> &'static [u64] {
    static SMALL: OnceLock<Vec<u64>> = OnceLock::new();
    SMALL.get_or_init(|| sieve(SIEVE_LIMIT))
}

fn large_cache() -> &'static Mutex<HashMap<u64, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Primes `≤ limit`.
pub fn sieve(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// `π(x)`, the number of primes `≤ x`.
pub fn prime_pi(x: u64) -> u64 {
    if x <= SIEVE_LIMIT {
        return small_primes().partition_point(|&p| p <= x) as u64;
    }
    lucy_pi(x)
}

/// Lucy Hedgehog's prime count in `O(x^{3/4})`: `small[v]` and `large[i]`
/// hold the count of survivors `≤ v` and `≤ x / i` while sieving by each prime.
fn lucy_pi(x: u64) -> u64 {
    let r = x.isqrt();
    let mut small: Vec<u64> = (0..=r).map(|v| v.saturating_sub(1)).collect();
    let mut large: Vec<u64> = (0..=r)
        .map(|i| x.checked_div(i).map_or(0, |q| q - 1))
        .collect();
    for p in 2..=r {
        if small[p as usize] == small[(p - 1) as usize] {
            continue;
        }
        let sp = small[(p - 1) as usize];
        let p2 = p * p;
        for i in 1..=r.min(x / p2) {
            let d = i * p;
            let s = if d <= r {
                large[d as usize]
            } else {
                small[(x / d) as usize]
            };
            large[i as usize] -= s - sp;
        }
        if p2 <= r {
            for v in (p2..=r).rev() {
                small[v as usize] -= small[(v / p) as usize] - sp;
            }
        }
    }
    large[1]
}

/// A value `p_k` strictly exceeds (Rosser: `p_n > n ln n` for the 1-based `n`).
pub fn prime_lower_bound(k: u64) -> u64 {
    let n = (k + 1) as f64;
    let bound = n * n.ln() * (1.0 - 1e-12);
    if bound >= u64::MAX as f64 {
        u64::MAX
    } else {
        bound as u64
    }
}

/// Whether `p_k > x`, computing `p_k` only when the cheap bound is inconclusive.
pub fn prime_exceeds(k: u64, x: u64) -> Result<bool> {
    if prime_lower_bound(k) >= x {
        return Ok(true);
    }
    Ok(nth_prime(k)? > x)
}

/// `p_k`, 0-based.
pub fn nth_prime(k: u64) -> Result<u64> {
    let small = small_primes();
    if let Some(&p) = small.get(k as usize) {
        return Ok(p);
    }
    if k >= PRIMES_UP_TO_MAX {
        return Err(Error::PrimeRange(format!("p_{k} exceeds {MAX_PRIME}")));
    }
    if let Some(&p) = large_cache().lock().expect("prime cache").get(&k) {
        return Ok(p);
    }
    let p = nth_prime_uncached(k + 1);
    large_cache().lock().expect("prime cache").insert(k, p);
    Ok(p)
}

/// The `n`-th prime, 1-based, for `n` beyond the sieve.
fn nth_prime_uncached(n: u64) -> u64 {
    let nf = n as f64;
    let (ln, lnln) = (nf.ln(), nf.ln().ln());
    let estimate = (nf * (ln + lnln - 1.0 + (lnln - 2.0) / ln)) as u64;
    let mut start = estimate.min(MAX_PRIME);
    let mut step = (estimate / 1000).max(1 << 16);
    let mut count = prime_pi(start);
    while count >= n {
        start = start.saturating_sub(step);
        step *= 2;
        count = prime_pi(start);
    }
    let base = small_primes();
    let mut lo = start + 1;
    loop {
        let hi = lo + SEGMENT;
        let mut composite = vec![false; SEGMENT as usize];
        for &q in base {
            if q * q >= hi {
                break;
            }
            let mut j = (lo.div_ceil(q) * q).max(q * q);
            while j < hi {
                composite[(j - lo) as usize] = true;
                j += q;
            }
        }
        for (off, &c) in composite.iter().enumerate() {
            if !c {
                count += 1;
                if count == n {
                    return lo + off as u64;
                }
            }
        }
        lo = hi;
    }
}

/// `k` with `p_k = p`, or `None` if `p` is not prime.
pub fn prime_index(p: u64) -> Result<Option<u64>> {
    if !num_prime::nt_funcs::is_prime64(p) {
        return Ok(None);
    }
    if p > MAX_PRIME {
        return Err(Error::PrimeRange(format!(
            "index of {p} needs primes beyond {MAX_PRIME}"
        )));
    }
    Ok(Some(prime_pi(p) - 1))
}
