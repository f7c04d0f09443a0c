//! The countable random graph on `{2, 3, 4, ...}` with `m ~ n` iff
//! `p_m | n` or `p_n | m`, its extension property, and greedy embeddings of
//! finite graphs into it.

use std::collections::BTreeSet;
use std::fmt;

use num_prime::nt_funcs::factorize64;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::primes::{nth_prime, prime_exceeds, prime_index};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RadoVertex(u64);

impl RadoVertex {
    pub fn new(value: u64) -> Result<RadoVertex> {
        if value < 2 {
            return Err(Error::InvalidRadoVertex(value));
        }
        Ok(RadoVertex(value))
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl fmt::Display for RadoVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `p_m | n` or `p_n | m`; a vertex is never adjacent to itself.
pub fn adjacent(m: u64, n: u64) -> Result<bool> {
    RadoVertex::new(m)?;
    RadoVertex::new(n)?;
    if m == n {
        return Ok(false);
    }
    let (lo, hi) = if m < n { (m, n) } else { (n, m) };
    // p_hi > hi > lo, so only p_lo | hi can hold
    if prime_exceeds(lo, hi)? {
        return Ok(false);
    }
    Ok(hi % nth_prime(lo)? == 0)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn satisfies(x: u64, a: &BTreeSet<u64>, b: &BTreeSet<u64>) -> Result<bool> {
    if a.contains(&x) || b.contains(&x) {
        return Ok(false);
    }
    for &y in a {
        if !adjacent(x, y)? {
            return Ok(false);
        }
    }
    for &z in b {
        if adjacent(x, z)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Least `x` in the open interval `(lo, hi)` satisfying the extension
/// condition; `hi = None` means unbounded.
fn least_in_interval(
    lo: u64,
    hi: Option<u64>,
    a: &BTreeSet<u64>,
    b: &BTreeSet<u64>,
) -> Result<Option<u64>> {
    let first = lo + 1;
    if hi.is_some_and(|h| first >= h) {
        return Ok(None);
    }
    let a_above: Vec<u64> = a.iter().copied().filter(|&y| y > lo).collect();
    if !a_above.is_empty() {
        // x < y forces p_x | y, so p_x divides every element of A above x
        let g = a_above.iter().fold(0, |acc, &y| gcd(acc, y));
        let mut candidates = Vec::new();
        for q in factorize64(g).into_keys() {
            if let Some(x) = prime_index(q)? {
                if x >= first && hi.is_none_or(|h| x < h) {
                    candidates.push(x);
                }
            }
        }
        candidates.sort_unstable();
        for x in candidates {
            if satisfies(x, a, b)? {
                return Ok(Some(x));
            }
        }
        return Ok(None);
    }
    // every y ∈ A is below x, so p_y | x for all of them
    let mut modulus: u64 = 1;
    for &y in a {
        modulus = modulus
            .checked_mul(nth_prime(y)?)
            .ok_or_else(|| Error::PrimeRange("product of required primes overflows u64".into()))?;
    }
    let mut x = first.div_ceil(modulus) * modulus;
    while hi.is_none_or(|h| x < h) {
        if satisfies(x, a, b)? {
            return Ok(Some(x));
        }
        x = x
            .checked_add(modulus)
            .ok_or_else(|| Error::PrimeRange("witness search overflows u64".into()))?;
    }
    Ok(None)
}

/// The least `x ≥ 2` outside `A ∪ B` adjacent to all of `A` and to none of `B`.
pub fn extension_witness(a: &BTreeSet<u64>, b: &BTreeSet<u64>) -> Result<u64> {
    for &v in a.iter().chain(b) {
        RadoVertex::new(v)?;
    }
    if let Some(&v) = a.intersection(b).next() {
        return Err(Error::OverlappingSets(v));
    }
    let mut cuts: Vec<u64> = a.union(b).copied().collect();
    cuts.sort_unstable();
    let mut lo = 1;
    for &c in &cuts {
        if let Some(x) = least_in_interval(lo, Some(c), a, b)? {
            return Ok(x);
        }
        lo = c;
    }
    Ok(least_in_interval(lo, None, a, b)?.expect("the last interval always holds a witness"))
}

/// Vertex `v` goes to the extension witness for the images of its earlier
/// neighbours and non-neighbours.
pub fn embed_graph(t: &Graph) -> Result<Vec<u64>> {
    let mut images = Vec::with_capacity(t.n());
    for v in 0..t.n() {
        let mut a = BTreeSet::new();
        let mut b = BTreeSet::new();
        for (u, &img) in images.iter().enumerate() {
            if t.adjacent(u, v) {
                a.insert(img);
            } else {
                b.insert(img);
            }
        }
        images.push(extension_witness(&a, &b)?);
    }
    Ok(images)
}
