//! Plain brute-force counters over explicitly enumerated words. They share no
//! code with `gvbounds`, so its closed forms and oracles are checked against
//! something other than themselves.

use std::collections::{BTreeMap, BTreeSet};

pub fn popcount(x: u64) -> u64 {
    x.count_ones() as u64
}

/// Per-weight degree sets and edge count of the binary sphere graph of radius `r`.
pub fn binary_sphere(n: u64, r: u64) -> (BTreeMap<u64, BTreeSet<u64>>, u64) {
    let verts: Vec<u64> = (1..1u64 << n).filter(|&x| popcount(x) <= r).collect();
    let mut degrees: BTreeMap<u64, BTreeSet<u64>> = BTreeMap::new();
    let mut twice = 0;
    for &v in &verts {
        let deg = verts.iter().filter(|&&u| u != v && popcount(u ^ v) <= r).count() as u64;
        degrees.entry(popcount(v)).or_default().insert(deg);
        twice += deg;
    }
    (degrees, twice / 2)
}

pub fn qary_words(n: u64, q: u64) -> Vec<Vec<u8>> {
    let total = q.pow(n as u32);
    (0..total)
        .map(|mut x| {
            let mut w = vec![0u8; n as usize];
            for s in w.iter_mut().rev() {
                *s = (x % q) as u8;
                x /= q;
            }
            w
        })
        .collect()
}

pub fn hamming(a: &[u8], b: &[u8]) -> u64 {
    a.iter().zip(b).filter(|(x, y)| x != y).count() as u64
}

/// Edge count of the q-ary sphere graph of radius `r`.
pub fn qary_sphere_edges(n: u64, r: u64, q: u64) -> u64 {
    let verts: Vec<Vec<u8>> = qary_words(n, q)
        .into_iter()
        .filter(|w| {
            let wt = w.iter().filter(|&&s| s != 0).count() as u64;
            (1..=r).contains(&wt)
        })
        .collect();
    let mut edges = 0;
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            if hamming(&verts[i], &verts[j]) <= r {
                edges += 1;
            }
        }
    }
    edges
}

pub fn weight_words(n: u64, w: u64) -> Vec<u64> {
    (0..1u64 << n).filter(|&x| popcount(x) == w).collect()
}

/// `p^k_{i,j}` in `J(n,w)` by direct counting; `None` if no pair sits at
/// Johnson distance `k`.
pub fn johnson_p(n: u64, w: u64, i: u64, j: u64, k: u64) -> Option<u64> {
    let words = weight_words(n, w);
    let u = *words.first()?;
    let v = *words.iter().find(|&&v| popcount(u ^ v) == 2 * k)?;
    Some(
        words
            .iter()
            .filter(|&&x| popcount(x ^ u) == 2 * i && popcount(x ^ v) == 2 * j)
            .count() as u64,
    )
}

/// Edges of the constant-weight sphere graph of Johnson radius `r` around the
/// lowest weight-`w` word.
pub fn johnson_sphere_edges(n: u64, r: u64, w: u64) -> u64 {
    let words = weight_words(n, w);
    let centre = words[0];
    let verts: Vec<u64> = words
        .iter()
        .copied()
        .filter(|&x| (1..=r).contains(&(popcount(x ^ centre) / 2)))
        .collect();
    let mut edges = 0;
    for a in 0..verts.len() {
        for b in a + 1..verts.len() {
            if popcount(verts[a] ^ verts[b]) / 2 <= r {
                edges += 1;
            }
        }
    }
    edges
}

/// Largest binary code of length `n` and minimum distance `d`, by plain
/// backtracking with the first word fixed to zero. Only for tiny `n`.
pub fn brute_max_code(n: u64, d: u64) -> usize {
    fn go(cands: &[u64], d: u64, size: usize, best: &mut usize) {
        if size + cands.len() <= *best {
            return;
        }
        if cands.is_empty() {
            *best = size;
            return;
        }
        for (k, &x) in cands.iter().enumerate() {
            if size + cands.len() - k <= *best {
                return;
            }
            let rest: Vec<u64> = cands[k + 1..]
                .iter()
                .copied()
                .filter(|&y| popcount(x ^ y) >= d)
                .collect();
            go(&rest, d, size + 1, best);
        }
    }
    let cands: Vec<u64> = (1..1u64 << n).filter(|&y| popcount(y) >= d).collect();
    let mut best = 1;
    go(&cands, d, 1, &mut best);
    best
}

pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub fn volume(n: u64, r: u64) -> u128 {
    (0..=r.min(n)).map(|i| binom(n, i)).sum()
}
