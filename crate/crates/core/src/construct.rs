//! Constructions: the greedy lexicode, a triangle-removal independent-set
//! procedure, first-fit colouring of hypercube powers, and code verification.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use crate::codebook::{min_distance, Codebook, Word};
use crate::error::{Error, Result};
use crate::oracle::{vertex_triangle_counts, BallWalker, ExplicitGraph};
use crate::params::CodeParams;

/// Default number of randomized greedy trials per seed.
pub const DEFAULT_TRIALS: usize = 32;

fn space_budget(n: u64, q: u64, budget: u64) -> Result<u64> {
    let size = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > budget as u128 {
        return Err(Error::BudgetExceeded {
            what: "words enumerated",
            needed: size,
            budget: budget as u128,
        });
    }
    Ok(size as u64)
}

/// Admits words in lexicographic order whenever they keep distance `≥ d`
/// (`≥ 2d` among weight-`w` words) to every admitted word.
pub fn greedy_lexicode(params: &CodeParams, budget: u64) -> Result<Codebook> {
    let (n, q) = (params.n(), params.q());
    let size = space_budget(n, q, budget)?;
    let radius = match params.w() {
        Some(_) => 2 * params.d() - 1,
        None => params.d() - 1,
    };
    let walker = BallWalker::new(n as usize, radius as usize, q);
    let mut covered = vec![false; size as usize];
    let mut words = Vec::new();
    for idx in 0..size {
        if covered[idx as usize] {
            continue;
        }
        let word = Word::from_index(idx, n as usize, q);
        if params.w().is_some_and(|w| word.weight() != w) {
            continue;
        }
        walker.for_each(idx, |j| covered[j as usize] = true);
        words.push(word);
    }
    Codebook::new(*params, words)
}

/// Recomputes the minimum distance of `book` and stores it.
pub fn verify_code(book: &mut Codebook) -> Result<u64> {
    let p = book.params;
    book.min_distance = min_distance(&book.words, p.n(), p.q(), p.w())?;
    Ok(book.min_distance)
}

/// The triangle-free part of a graph left after repeatedly deleting the
/// vertex in the most triangles (ties to the lowest index).
#[derive(Clone, Debug)]
pub struct TriangleFreeRemainder {
    pub alive: Vec<bool>,
    pub deleted: usize,
}

impl TriangleFreeRemainder {
    pub fn new(g: &ExplicitGraph) -> TriangleFreeRemainder {
        let nv = g.n_vertices();
        let mut count = vertex_triangle_counts(g);
        let mut alive = vec![true; nv];
        let words = nv.div_ceil(64);
        let rows: Vec<Vec<u64>> = (0..nv)
            .map(|v| {
                let mut row = vec![0u64; words];
                for &u in g.neighbors(v) {
                    row[u as usize / 64] |= 1 << (u % 64);
                }
                row
            })
            .collect();
        let mut alive_bits = vec![u64::MAX; words];
        if !nv.is_multiple_of(64) {
            alive_bits[words - 1] = (1u64 << (nv % 64)) - 1;
        }
        let mut heap: BinaryHeap<(u64, Reverse<usize>)> =
            (0..nv).filter(|&v| count[v] > 0).map(|v| (count[v], Reverse(v))).collect();
        let mut deleted = 0;
        while let Some((c, Reverse(v))) = heap.pop() {
            if !alive[v] || count[v] == 0 {
                continue;
            }
            if c != count[v] {
                heap.push((count[v], Reverse(v)));
                continue;
            }
            alive[v] = false;
            alive_bits[v / 64] &= !(1 << (v % 64));
            deleted += 1;
            let live_nbrs: Vec<u64> = rows[v].iter().zip(&alive_bits).map(|(a, b)| a & b).collect();
            for &b in g.neighbors(v) {
                let b = b as usize;
                if alive[b] {
                    let lost: u64 = rows[b]
                        .iter()
                        .zip(&live_nbrs)
                        .map(|(x, y)| (x & y).count_ones() as u64)
                        .sum();
                    count[b] -= lost;
                }
            }
            count[v] = 0;
        }
        TriangleFreeRemainder { alive, deleted }
    }

    pub fn len(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Outcome of [`hl_run`]: the best set and how it was reached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HlOutcome {
    /// Sorted vertex indices, independent in the input graph.
    pub vertices: Vec<usize>,
    pub seed: u64,
    pub trials: usize,
    /// Vertices deleted to reach a triangle-free graph.
    pub deleted: usize,
    /// Size of the best trial's set inside the triangle-free remainder.
    pub from_remainder: usize,
}

/// Random-order greedy trials on the triangle-free remainder, each extended
/// to a maximal independent set of the whole graph in index order. Keeps the
/// largest result, ties to the lexicographically smallest index list.
pub fn hl_run(g: &ExplicitGraph, remainder: &TriangleFreeRemainder, seed: u64, trials: usize) -> HlOutcome {
    let nv = g.n_vertices();
    let pool: Vec<usize> = (0..nv).filter(|&v| remainder.alive[v]).collect();
    let best = (0..trials.max(1))
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial as u64);
            let mut order = pool.clone();
            order.shuffle(&mut rng);
            let mut blocked = vec![false; nv];
            let mut chosen = Vec::new();
            let admit = |v: usize, blocked: &mut Vec<bool>, chosen: &mut Vec<usize>| {
                if !blocked[v] {
                    blocked[v] = true;
                    chosen.push(v);
                    for &u in g.neighbors(v) {
                        blocked[u as usize] = true;
                    }
                }
            };
            for &v in &order {
                admit(v, &mut blocked, &mut chosen);
            }
            let from_remainder = chosen.len();
            for v in 0..nv {
                admit(v, &mut blocked, &mut chosen);
            }
            chosen.sort_unstable();
            (chosen, from_remainder)
        })
        .reduce_with(|a, b| {
            if b.0.len() > a.0.len() || (b.0.len() == a.0.len() && b.0 < a.0) {
                b
            } else {
                a
            }
        })
        .expect("at least one trial");
    HlOutcome {
        vertices: best.0,
        seed,
        trials: trials.max(1),
        deleted: remainder.deleted,
        from_remainder: best.1,
    }
}

/// Triangle removal followed by [`hl_run`], returned as a verified codebook
/// carrying the seed.
pub fn hl_independent_set(g: &ExplicitGraph, seed: u64, trials: usize) -> Result<Codebook> {
    let remainder = TriangleFreeRemainder::new(g);
    let outcome = hl_run(g, &remainder, seed, trials);
    Ok(g.to_codebook(&outcome.vertices)?.with_seed(seed))
}

/// A colouring of the words of length `n` indexed lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub n: u64,
    pub d: u64,
    pub colors: Vec<u32>,
    pub n_colors: u32,
}

impl Coloring {
    pub fn color_of(&self, word: &Word) -> u32 {
        self.colors[word.to_index(2) as usize]
    }

    /// Exhaustive check that words within distance `d` differ in colour.
    pub fn is_proper(&self) -> bool {
        let walker = BallWalker::new(self.n as usize, self.d as usize, 2);
        (0..self.colors.len() as u64).into_par_iter().all(|x| {
            let mut ok = true;
            walker.for_each(x, |y| ok &= self.colors[y as usize] != self.colors[x as usize]);
            ok
        })
    }
}

/// First-fit colouring of the graph joining binary words at distance `≤ d`,
/// visiting words in lexicographic order.
pub fn greedy_distance_coloring(n: u64, d: u64, budget: u64) -> Result<Coloring> {
    let size = space_budget(n, 2, budget)?;
    let walker = BallWalker::new(n as usize, d as usize, 2);
    let mut colors = vec![u32::MAX; size as usize];
    let mut used = Vec::new();
    let mut n_colors = 0;
    for x in 0..size {
        used.clear();
        used.resize(n_colors as usize + 1, false);
        walker.for_each(x, |y| {
            let c = colors[y as usize];
            if c != u32::MAX {
                used[c as usize] = true;
            }
        });
        let c = used.iter().position(|&u| !u).expect("one slot beyond the palette") as u32;
        colors[x as usize] = c;
        n_colors = n_colors.max(c + 1);
    }
    Ok(Coloring { n, d, colors, n_colors })
}
