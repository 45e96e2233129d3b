//! Dimensions of free graded Lie algebras from the Poincaré–Birkhoff–Witt
//! identity `T(V) ≅ U(L(V))`, solved length by length.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::tensor::Letter;

/// `(length, degree, weight)`.
pub type Key = (u32, u32, u32);

type Series = BTreeMap<Key, BigInt>;

fn add_key(a: Key, b: Key) -> Key {
    (a.0 + b.0, a.1 + b.1, a.2 + b.2)
}

fn binomial(n: &BigInt, j: u32) -> BigInt {
    let mut c = BigInt::from(1);
    for i in 0..j {
        c = c * (n - BigInt::from(i)) / BigInt::from(i + 1);
    }
    c
}

fn in_range(k: Key, max_len: u32, max_deg: Option<u32>) -> bool {
    k.0 <= max_len && max_deg.is_none_or(|d| k.1 <= d)
}

/// Multiplies by `(1 + t^k)^m` (odd `k`) or `(1 - t^k)^{-m}` (even `k`).
fn mul_power(s: &mut Series, k: Key, m: usize, odd: bool, max_len: u32, max_deg: Option<u32>) {
    let m = BigInt::from(m);
    let mut coeffs = vec![BigInt::from(1)];
    let mut j = 1u32;
    loop {
        let key = (k.0 * j, k.1 * j, k.2 * j);
        if !in_range(key, max_len, max_deg) || (odd && BigInt::from(j) > m) {
            break;
        }
        coeffs.push(if odd { binomial(&m, j) } else { binomial(&(&m + BigInt::from(j) - 1), j) });
        j += 1;
    }
    let mut out: Series = BTreeMap::new();
    for (key, v) in s.iter() {
        for (j, c) in coeffs.iter().enumerate() {
            let j = j as u32;
            let nk = add_key(*key, (k.0 * j, k.1 * j, k.2 * j));
            if !in_range(nk, max_len, max_deg) {
                break;
            }
            *out.entry(nk).or_insert_with(BigInt::zero) += v * c;
        }
    }
    *s = out;
}

/// Dimensions of the free graded Lie algebra on `letters` per
/// `(length, degree, weight)` up to length `max_len`.
pub fn witt_dims_full(letters: &[Letter], max_len: u32) -> BTreeMap<Key, usize> {
    witt_dims_bounded(letters, max_len, None)
}

/// As [`witt_dims_full`], dropping everything above `max_deg`.
pub fn witt_dims_bounded(letters: &[Letter], max_len: u32, max_deg: Option<u32>) -> BTreeMap<Key, usize> {
    // word counts of the tensor algebra
    let mut t: Series = BTreeMap::new();
    t.insert((0, 0, 0), BigInt::from(1));
    let mut layer: Series = t.clone();
    for _ in 1..=max_len {
        let mut next: Series = BTreeMap::new();
        for (key, v) in &layer {
            for l in letters {
                let nk = add_key(*key, (1, l.degree, l.weight));
                if in_range(nk, max_len, max_deg) {
                    *next.entry(nk).or_insert_with(BigInt::zero) += v;
                }
            }
        }
        for (k, v) in &next {
            t.insert(*k, v.clone());
        }
        layer = next;
    }
    let mut p: Series = BTreeMap::new();
    p.insert((0, 0, 0), BigInt::from(1));
    let mut out = BTreeMap::new();
    for len in 1..=max_len {
        let keys: Vec<Key> = t.keys().copied().filter(|k| k.0 == len).collect();
        let mut found = Vec::new();
        for key in keys {
            let d = &t[&key] - p.get(&key).cloned().unwrap_or_default();
            assert!(!d.is_negative(), "negative Lie dimension at {key:?}");
            let d = d.to_usize().expect("dimension fits");
            if d > 0 {
                out.insert(key, d);
                found.push((key, d));
            }
        }
        for (key, d) in found {
            mul_power(&mut p, key, d, key.1 % 2 == 1, max_len, max_deg);
        }
    }
    out
}

/// Dimensions per `(degree, length)`.
pub fn witt_dims(letters: &[Letter], max_len: u32) -> BTreeMap<(u32, u32), usize> {
    let mut out = BTreeMap::new();
    for ((l, d, _), n) in witt_dims_full(letters, max_len) {
        *out.entry((d, l)).or_insert(0) += n;
    }
    out
}

/// Classical necklace count `(1/n) Σ_{d|n} μ(d) r^{n/d}` for ungraded
/// letters.
pub fn necklace(r: u64, n: u64) -> u64 {
    let mut total: i128 = 0;
    for d in 1..=n {
        if n.is_multiple_of(d) {
            total += mobius(d) as i128 * (r as i128).pow((n / d) as u32);
        }
    }
    (total / n as i128) as u64
}

fn mobius(mut n: u64) -> i64 {
    let mut m = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            m = -m;
        }
        p += 1;
    }
    if n > 1 {
        m = -m;
    }
    m
}
