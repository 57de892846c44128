//! Brute-force ground truth: explicit Gilbert and sphere graphs, their
//! degree, edge and triangle statistics, and an exact maximum independent
//! set solver for small graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::codebook::{Codebook, Word};
use crate::error::{invalid, Error, Result};
use crate::num::Count;
use crate::params::CodeParams;

/// Default cap on the number of words enumerated to build a graph.
pub const DEFAULT_VERTEX_BUDGET: u64 = 1 << 20;
/// Cap on stored adjacency entries (sum of degrees).
pub const ADJACENCY_BUDGET: u64 = 1 << 28;
/// Largest graph handed to the exact independent-set solver.
pub const EXACT_VERTEX_LIMIT: usize = 256;
const BITSET_LIMIT: usize = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GraphKind {
    Gilbert,
    Sphere,
    Abstract,
}

/// A graph on words, vertices in lexicographic order, adjacency as sorted
/// neighbour lists.
#[derive(Clone, Debug)]
pub struct ExplicitGraph {
    kind: GraphKind,
    params: Option<CodeParams>,
    labels: Vec<Word>,
    neighbors: Vec<Vec<u32>>,
    centre: Option<Word>,
}

impl ExplicitGraph {
    /// Abstract graph on `n_vertices` vertices. Labels are the binary
    /// expansions of the indices; such graphs carry no code parameters.
    pub fn from_edges(n_vertices: usize, edges: &[(usize, usize)]) -> Result<ExplicitGraph> {
        let mut neighbors = vec![Vec::new(); n_vertices];
        for &(u, v) in edges {
            if u == v || u >= n_vertices || v >= n_vertices {
                return Err(invalid(format!("bad edge ({u}, {v})")));
            }
            neighbors[u].push(v as u32);
            neighbors[v].push(u as u32);
        }
        for list in &mut neighbors {
            list.sort_unstable();
            list.dedup();
        }
        let bits = (usize::BITS - n_vertices.saturating_sub(1).leading_zeros()).max(1) as usize;
        let labels = (0..n_vertices as u64).map(|i| Word::from_index(i, bits, 2)).collect();
        Ok(ExplicitGraph {
            kind: GraphKind::Abstract,
            params: None,
            labels,
            neighbors,
            centre: None,
        })
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn params(&self) -> Option<&CodeParams> {
        self.params.as_ref()
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn n_edges(&self) -> u64 {
        self.neighbors.iter().map(|l| l.len() as u64).sum::<u64>() / 2
    }

    pub fn label(&self, v: usize) -> &Word {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[Word] {
        &self.labels
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors[u].binary_search(&(v as u32)).is_ok()
    }

    /// Gilbert graphs are vertex-transitive (translations, or coordinate
    /// permutations for constant weight).
    pub fn is_vertex_transitive(&self) -> bool {
        self.kind == GraphKind::Gilbert
    }

    /// Distance class of a sphere-graph vertex: its weight, or for the
    /// constant-weight variant its Johnson distance from the centre.
    pub fn shell(&self, v: usize) -> Option<u64> {
        if self.kind != GraphKind::Sphere {
            return None;
        }
        let params = self.params.as_ref()?;
        Some(match (params.w(), &self.centre) {
            (Some(_), Some(c)) => self.labels[v].distance(c) / 2,
            _ => self.labels[v].weight(),
        })
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        let set: BTreeSet<usize> = vertices.iter().copied().collect();
        set.len() == vertices.len()
            && vertices
                .iter()
                .all(|&v| self.neighbors[v].iter().all(|&u| !set.contains(&(u as usize))))
    }

    /// Codebook of the words at `vertices`, sorted lexicographically.
    pub fn to_codebook(&self, vertices: &[usize]) -> Result<Codebook> {
        let params = self
            .params
            .ok_or_else(|| invalid("abstract graph has no code parameters"))?;
        let mut idx = vertices.to_vec();
        idx.sort_unstable();
        Codebook::new(params, idx.into_iter().map(|v| self.labels[v].clone()).collect())
    }

    /// Header `n_vertices n_edges`, then one `u v` line per edge with `u < v`.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "{} {}", self.n_vertices(), self.n_edges())?;
        for (u, list) in self.neighbors.iter().enumerate() {
            for &v in list.iter().filter(|&&v| v as usize > u) {
                writeln!(out, "{u} {v}")?;
            }
        }
        Ok(())
    }

    fn bit_rows(&self) -> Vec<Vec<u64>> {
        let words = self.n_vertices().div_ceil(64);
        self.neighbors
            .iter()
            .map(|list| {
                let mut row = vec![0u64; words];
                for &u in list {
                    row[u as usize / 64] |= 1 << (u % 64);
                }
                row
            })
            .collect()
    }
}

fn space_size(params: &CodeParams, budget: u64) -> Result<u64> {
    let (n, q) = (params.n(), params.q());
    let size = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > budget as u128 {
        return Err(Error::BudgetExceeded {
            what: "oracle vertices",
            needed: size,
            budget: budget as u128,
        });
    }
    Ok(size as u64)
}

fn check_adjacency(entries: u128) -> Result<()> {
    if entries > ADJACENCY_BUDGET as u128 {
        return Err(Error::BudgetExceeded {
            what: "adjacency entries",
            needed: entries,
            budget: ADJACENCY_BUDGET as u128,
        });
    }
    Ok(())
}

/// All words of the space in lexicographic order, keeping those that pass `keep`.
fn enumerate(params: &CodeParams, budget: u64, keep: impl Fn(&Word) -> bool + Sync) -> Result<Vec<Word>> {
    let size = space_size(params, budget)?;
    let (n, q) = (params.n() as usize, params.q());
    Ok((0..size)
        .into_par_iter()
        .map(|i| Word::from_index(i, n, q))
        .filter(|w| keep(w))
        .collect())
}

/// Adjacency by pairwise distance test over `labels`.
fn pairwise(labels: &[Word], q: u64, adjacent: impl Fn(u64) -> bool + Sync) -> Vec<Vec<u32>> {
    if q == 2 && labels.first().is_none_or(|w| w.len() <= 64) {
        let packed: Vec<u64> = labels.iter().map(Word::pack_binary).collect();
        (0..packed.len())
            .into_par_iter()
            .map(|i| {
                (0..packed.len())
                    .filter(|&j| j != i && adjacent((packed[i] ^ packed[j]).count_ones() as u64))
                    .map(|j| j as u32)
                    .collect()
            })
            .collect()
    } else {
        (0..labels.len())
            .into_par_iter()
            .map(|i| {
                (0..labels.len())
                    .filter(|&j| j != i && adjacent(labels[i].distance(&labels[j])))
                    .map(|j| j as u32)
                    .collect()
            })
            .collect()
    }
}

/// Enumerates, for a word given by its lexicographic index, the indices of
/// all words at distance `1..=r`.
pub(crate) struct BallWalker {
    n: usize,
    q: u64,
    place: Vec<u64>,
    masks: Vec<u64>,
    patterns: Vec<Vec<(usize, u64)>>,
}

impl BallWalker {
    pub(crate) fn new(n: usize, r: usize, q: u64) -> BallWalker {
        fn extend(start: usize, n: usize, r: usize, q: u64, cur: &mut Vec<(usize, u64)>, out: &mut Vec<Vec<(usize, u64)>>) {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            if cur.len() == r {
                return;
            }
            for pos in start..n {
                for shift in 1..q {
                    cur.push((pos, shift));
                    extend(pos + 1, n, r, q, cur, out);
                    cur.pop();
                }
            }
        }
        let mut patterns = Vec::new();
        extend(0, n, r.min(n), q, &mut Vec::new(), &mut patterns);
        let place: Vec<u64> = (0..n).map(|p| q.pow((n - 1 - p) as u32)).collect();
        let masks = if q == 2 {
            patterns
                .iter()
                .map(|pat| pat.iter().fold(0u64, |m, &(pos, _)| m | place[pos]))
                .collect()
        } else {
            Vec::new()
        };
        BallWalker { n, q, place, masks, patterns }
    }

    /// Number of neighbours of every word.
    pub(crate) fn len(&self) -> usize {
        self.patterns.len()
    }

    pub(crate) fn for_each(&self, index: u64, mut f: impl FnMut(u64)) {
        if self.q == 2 {
            for &m in &self.masks {
                f(index ^ m);
            }
            return;
        }
        let word = Word::from_index(index, self.n, self.q);
        for pat in &self.patterns {
            f(pat.iter().fold(index, |acc, &(pos, shift)| {
                let s = word.0[pos] as u64;
                acc - s * self.place[pos] + ((s + shift) % self.q) * self.place[pos]
            }));
        }
    }
}

/// The Gilbert graph of `params`: all qⁿ words joined when `1 ≤ d(u,v) ≤ d-1`.
/// With `w` set, the weight-`w` words joined when `2 ≤ d(u,v) ≤ 2d'`.
pub fn build_gilbert_graph(params: &CodeParams, budget: u64) -> Result<ExplicitGraph> {
    let (n, q, r) = (params.n() as usize, params.q(), params.d_prime() as usize);
    let (labels, neighbors) = match params.w() {
        Some(w) => {
            let labels = enumerate(params, budget, |x| x.weight() == w)?;
            check_adjacency((labels.len() as u128).pow(2))?;
            let neighbors = pairwise(&labels, q, |dist| dist >= 2 && dist <= 2 * r as u64);
            (labels, neighbors)
        }
        None => {
            let size = space_size(params, budget)?;
            let walker = BallWalker::new(n, r, q);
            check_adjacency(size as u128 * walker.len() as u128)?;
            let labels: Vec<Word> = (0..size).map(|i| Word::from_index(i, n, q)).collect();
            let neighbors = (0..size)
                .into_par_iter()
                .map(|i| {
                    let mut list = Vec::with_capacity(walker.len());
                    walker.for_each(i, |j| list.push(j as u32));
                    list.sort_unstable();
                    list
                })
                .collect();
            (labels, neighbors)
        }
    };
    Ok(ExplicitGraph {
        kind: GraphKind::Gilbert,
        params: Some(*params),
        labels,
        neighbors,
        centre: None,
    })
}

/// The sphere graph of `params`: the Gilbert graph restricted to the words at
/// distance `1..=d'` from the zero word (Johnson distance from `1^w 0^{n-w}`
/// for the constant-weight variant).
pub fn build_sphere_graph(params: &CodeParams, budget: u64) -> Result<ExplicitGraph> {
    let (n, q, r) = (params.n() as usize, params.q(), params.d_prime());
    let (labels, centre, neighbors) = match params.w() {
        Some(w) => {
            let centre = Word((0..n).map(|p| (p < w as usize) as u8).collect());
            let labels = enumerate(params, budget, |x| {
                let k = x.distance(&centre);
                x.weight() == w && k >= 2 && k <= 2 * r
            })?;
            check_adjacency((labels.len() as u128).pow(2))?;
            let neighbors = pairwise(&labels, q, |dist| dist >= 2 && dist <= 2 * r);
            (labels, Some(centre), neighbors)
        }
        None => {
            let labels = enumerate(params, budget, |x| (1..=r).contains(&x.weight()))?;
            check_adjacency((labels.len() as u128).pow(2))?;
            let neighbors = pairwise(&labels, q, |dist| dist >= 1 && dist <= r);
            (labels, None, neighbors)
        }
    };
    Ok(ExplicitGraph {
        kind: GraphKind::Sphere,
        params: Some(*params),
        labels,
        neighbors,
        centre,
    })
}

/// Exact statistics: Δ, the largest neighbourhood edge count t, and T.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SphereGraphStats {
    pub n_vertices: Count,
    pub n_edges: Count,
    pub max_degree: Count,
    pub neighborhood_edges_max: Count,
    pub triangle_count: Count,
}

/// Number of edges inside each vertex's neighbourhood, i.e. the number of
/// triangles through it.
pub fn vertex_triangle_counts(g: &ExplicitGraph) -> Vec<u64> {
    let nv = g.n_vertices();
    if nv <= BITSET_LIMIT {
        let rows = g.bit_rows();
        (0..nv)
            .into_par_iter()
            .map(|v| {
                let twice: u64 = g.neighbors[v]
                    .iter()
                    .map(|&u| {
                        rows[u as usize]
                            .iter()
                            .zip(&rows[v])
                            .map(|(a, b)| (a & b).count_ones() as u64)
                            .sum::<u64>()
                    })
                    .sum();
                twice / 2
            })
            .collect()
    } else {
        (0..nv)
            .into_par_iter()
            .map(|v| {
                let mine = &g.neighbors[v];
                let twice: u64 = mine
                    .iter()
                    .map(|&u| sorted_intersection(&g.neighbors[u as usize], mine))
                    .sum();
                twice / 2
            })
            .collect()
    }
}

fn sorted_intersection(a: &[u32], b: &[u32]) -> u64 {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

pub fn graph_stats(g: &ExplicitGraph) -> SphereGraphStats {
    let per_vertex = vertex_triangle_counts(g);
    let sum: u64 = per_vertex.iter().sum();
    debug_assert_eq!(sum % 3, 0);
    SphereGraphStats {
        n_vertices: Count::from(g.n_vertices()),
        n_edges: Count::from(g.n_edges()),
        max_degree: Count::from((0..g.n_vertices()).map(|v| g.degree(v)).max().unwrap_or(0)),
        neighborhood_edges_max: Count::from(per_vertex.iter().copied().max().unwrap_or(0)),
        triangle_count: Count::from(sum / 3),
    }
}

/// Distinct degrees observed in each shell of a sphere graph.
pub fn degree_profile(g: &ExplicitGraph) -> BTreeMap<u64, BTreeSet<u64>> {
    let mut out: BTreeMap<u64, BTreeSet<u64>> = BTreeMap::new();
    for v in 0..g.n_vertices() {
        if let Some(shell) = g.shell(v) {
            out.entry(shell).or_default().insert(g.degree(v) as u64);
        }
    }
    out
}

/// Counts words `x` with `d(x,u) = i` and `d(x,v) = j`, where `u = 0` and `v`
/// has its first `w` symbols equal to 1.
pub fn brute_intersection_counts(n: u64, q: u64, w: u64, i: u64, j: u64, budget: u64) -> Result<Count> {
    if w > n {
        return Err(invalid(format!("centre distance w={w} exceeds n={n}")));
    }
    let params = CodeParams::qary(n, 1, q)?;
    let size = space_size(&params, budget)?;
    let v = Word((0..n).map(|p| (p < w) as u8).collect());
    let count = (0..size)
        .into_par_iter()
        .filter(|&idx| {
            let x = Word::from_index(idx, n as usize, q);
            x.weight() == i && x.distance(&v) == j
        })
        .count();
    Ok(Count::from(count))
}

type Set = [u64; 4];

fn set_insert(s: &mut Set, v: usize) {
    s[v / 64] |= 1 << (v % 64);
}

fn set_remove(s: &mut Set, v: usize) {
    s[v / 64] &= !(1 << (v % 64));
}

fn set_and(a: &Set, b: &Set) -> Set {
    [a[0] & b[0], a[1] & b[1], a[2] & b[2], a[3] & b[3]]
}

fn set_is_empty(s: &Set) -> bool {
    s.iter().all(|&x| x == 0)
}

fn set_first(s: &Set) -> Option<usize> {
    s.iter()
        .enumerate()
        .find(|(_, &x)| x != 0)
        .map(|(i, &x)| i * 64 + x.trailing_zeros() as usize)
}

/// Maximum clique search in the complement graph with greedy colouring bounds.
struct CliqueSearch {
    /// Complement adjacency over relabelled vertices.
    comp: Vec<Set>,
    /// Original adjacency over relabelled vertices.
    adj: Vec<Set>,
    best: Vec<usize>,
}

impl CliqueSearch {
    fn colour_order(&self, p: &Set) -> Vec<(usize, usize)> {
        let mut uncoloured = *p;
        let mut order = Vec::new();
        let mut colour = 0;
        while !set_is_empty(&uncoloured) {
            colour += 1;
            let mut class = uncoloured;
            while let Some(v) = set_first(&class) {
                set_remove(&mut class, v);
                set_remove(&mut uncoloured, v);
                class = set_and(&class, &self.adj[v]);
                order.push((v, colour));
            }
        }
        order
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut p: Set) {
        let order = self.colour_order(&p);
        for &(v, colour) in order.iter().rev() {
            if current.len() + colour <= self.best.len() {
                return;
            }
            current.push(v);
            let next = set_and(&p, &self.comp[v]);
            if set_is_empty(&next) {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            set_remove(&mut p, v);
        }
    }
}

fn greedy_min_degree(g: &ExplicitGraph, candidates: &[usize]) -> Vec<usize> {
    let mut order = candidates.to_vec();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut blocked = vec![false; g.n_vertices()];
    let mut out = Vec::new();
    for v in order {
        if !blocked[v] {
            out.push(v);
            for &u in g.neighbors(v) {
                blocked[u as usize] = true;
            }
        }
    }
    out
}

/// Largest independent set among `candidates` (which must avoid `forced`),
/// or `None` when none beats `floor` vertices.
fn search_within(g: &ExplicitGraph, candidates: &[usize], floor: usize) -> Option<Vec<usize>> {
    let k = candidates.len();
    let mut induced = vec![0usize; k];
    let mut pairs = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            if g.has_edge(candidates[a], candidates[b]) {
                induced[a] += 1;
                induced[b] += 1;
                pairs.push((a, b));
            }
        }
    }
    // Complement-degree descending, so the colouring sees dense vertices first.
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&a| (induced[a], a));
    let mut rank = vec![0usize; k];
    for (r, &a) in order.iter().enumerate() {
        rank[a] = r;
    }
    let mut adj = vec![[0u64; 4]; k];
    let mut all = [0u64; 4];
    for r in 0..k {
        set_insert(&mut all, r);
    }
    for &(a, b) in &pairs {
        set_insert(&mut adj[rank[a]], rank[b]);
        set_insert(&mut adj[rank[b]], rank[a]);
    }
    let comp = (0..k)
        .map(|r| {
            let mut c = all;
            set_remove(&mut c, r);
            [c[0] & !adj[r][0], c[1] & !adj[r][1], c[2] & !adj[r][2], c[3] & !adj[r][3]]
        })
        .collect();
    let seed = greedy_min_degree(g, candidates);
    let position: BTreeMap<usize, usize> = candidates.iter().enumerate().map(|(a, &v)| (v, rank[a])).collect();
    let seed: Vec<usize> = if seed.len() > floor {
        seed.iter().map(|v| position[v]).collect()
    } else {
        vec![usize::MAX; floor]
    };
    let mut search = CliqueSearch { comp, adj, best: seed };
    if k > 0 {
        search.expand(&mut Vec::new(), all);
    }
    if search.best.len() <= floor || search.best.contains(&usize::MAX) {
        return None;
    }
    Some(search.best.iter().map(|&r| candidates[order[r]]).collect())
}

/// Levels of orbit branching before handing over to the clique search.
const ORBIT_DEPTH: usize = 2;

type OrbitSignature = Vec<(Vec<u8>, u8, usize)>;

/// Orbit signature of `word` under the coordinate permutations fixing every
/// word of `forced`: symbol counts within each class of equal columns.
fn orbit_signature(g: &ExplicitGraph, forced: &[usize], word: usize) -> OrbitSignature {
    let mut counts: BTreeMap<(Vec<u8>, u8), usize> = BTreeMap::new();
    for pos in 0..g.labels[word].len() {
        let column: Vec<u8> = forced.iter().map(|&f| g.labels[f].0[pos]).collect();
        *counts.entry((column, g.labels[word].0[pos])).or_default() += 1;
    }
    counts.into_iter().map(|((c, s), k)| (c, s, k)).collect()
}

/// Branch and bound over the full space, with `forced` in the set and the
/// remaining vertices drawn from `pool`. `pool` must be invariant under the
/// coordinate permutations fixing `forced`, so one vertex per orbit suffices.
fn orbit_search(g: &ExplicitGraph, forced: &mut Vec<usize>, pool: &[usize], depth: usize, best: &mut Vec<usize>) {
    if forced.len() > best.len() {
        *best = forced.clone();
    }
    if pool.is_empty() {
        return;
    }
    if depth == 0 {
        let floor = best.len() - forced.len();
        if let Some(rest) = search_within(g, pool, floor) {
            *best = forced.iter().copied().chain(rest).collect();
        }
        return;
    }
    let mut orbits: BTreeMap<OrbitSignature, Vec<usize>> = BTreeMap::new();
    for &v in pool {
        orbits.entry(orbit_signature(g, forced, v)).or_default().push(v);
    }
    let mut dropped = BTreeSet::new();
    for members in orbits.values() {
        let rep = members[0];
        let next: Vec<usize> = pool
            .iter()
            .copied()
            .filter(|&u| u != rep && !dropped.contains(&u) && !g.has_edge(rep, u))
            .collect();
        forced.push(rep);
        orbit_search(g, forced, &next, depth - 1, best);
        forced.pop();
        dropped.extend(members.iter().copied());
    }
}

/// Indices of a maximum independent set, found by exact branch and bound.
///
/// Vertex-transitive graphs are solved with vertex 0 forced into the set. A
/// full-space Gilbert graph additionally branches on the smallest nonzero
/// weight `m` of the set, forcing `1^m 0^{n-m}` and discarding lighter words,
/// then on orbits of the coordinate permutations fixing the chosen words.
pub fn max_independent_set_vertices(g: &ExplicitGraph) -> Result<Vec<usize>> {
    let nv = g.n_vertices();
    if nv > EXACT_VERTEX_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "exact independent-set vertices",
            needed: nv as u128,
            budget: EXACT_VERTEX_LIMIT as u128,
        });
    }
    if nv == 0 {
        return Ok(Vec::new());
    }
    let full_space = g.is_vertex_transitive() && g.params.is_some_and(|p| p.w().is_none());
    let mut best = if full_space {
        let p = g.params.expect("checked above");
        let (n, q) = (p.n() as usize, p.q());
        let mut best = vec![0];
        for m in p.d() as usize..=n {
            let pivot = Word((0..n).map(|i| (i < m) as u8).collect()).to_index(q) as usize;
            let pool: Vec<usize> = (1..nv)
                .filter(|&v| {
                    v != pivot
                        && g.labels[v].weight() >= m as u64
                        && !g.has_edge(0, v)
                        && !g.has_edge(pivot, v)
                })
                .collect();
            orbit_search(g, &mut vec![0, pivot], &pool, ORBIT_DEPTH, &mut best);
        }
        best
    } else if g.is_vertex_transitive() {
        let candidates: Vec<usize> = (1..nv).filter(|&v| !g.has_edge(0, v)).collect();
        let rest = search_within(g, &candidates, 0).unwrap_or_default();
        std::iter::once(0).chain(rest).collect()
    } else {
        let all: Vec<usize> = (0..nv).collect();
        search_within(g, &all, 0).unwrap_or_default()
    };
    best.sort_unstable();
    debug_assert!(g.is_independent(&best));
    Ok(best)
}

/// A maximum independent set as a verified codebook.
pub fn exact_max_independent_set(g: &ExplicitGraph) -> Result<Codebook> {
    let vertices = max_independent_set_vertices(g)?;
    g.to_codebook(&vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::hamming_volume;

    const B: u64 = DEFAULT_VERTEX_BUDGET;

    fn bin(n: u64, d: u64) -> CodeParams {
        CodeParams::binary(n, d).unwrap()
    }

    #[test]
    fn small_graphs() {
        let g = build_gilbert_graph(&bin(3, 2), B).unwrap();
        assert_eq!(g.n_vertices(), 8);
        assert!((0..8).all(|v| g.degree(v) == 3));
        let s = build_sphere_graph(&bin(4, 3), B).unwrap();
        assert_eq!((s.n_vertices(), s.n_edges()), (10, 30));
        let s = build_sphere_graph(&CodeParams::qary(3, 2, 3).unwrap(), B).unwrap();
        assert_eq!((s.n_vertices(), s.n_edges()), (6, 3));
        assert_eq!(build_sphere_graph(&bin(4, 2), B).unwrap().n_edges(), 0);
    }

    #[test]
    fn gilbert_graph_regular_and_transitive() {
        for (n, d) in [(4, 3), (6, 3), (7, 4)] {
            let p = bin(n, d);
            let g = build_gilbert_graph(&p, B).unwrap();
            let delta = hamming_volume(n, d as i64 - 1).to_u64().unwrap() - 1;
            assert!((0..g.n_vertices()).all(|v| g.degree(v) as u64 == delta));
            let per = vertex_triangle_counts(&g);
            let sphere_edges = build_sphere_graph(&p, B).unwrap().n_edges();
            assert!(per.iter().all(|&t| t == sphere_edges));
            let st = graph_stats(&g);
            assert_eq!(
                st.triangle_count.to_u64().unwrap() * 3,
                g.n_vertices() as u64 * sphere_edges
            );
        }
    }

    #[test]
    fn qary_gilbert_graph_matches_pairwise() {
        let p = CodeParams::qary(4, 3, 3).unwrap();
        let g = build_gilbert_graph(&p, B).unwrap();
        let direct = pairwise(g.labels(), 3, |dist| (1..=2).contains(&dist));
        assert_eq!(g.neighbors, direct);
    }

    #[test]
    fn exact_solver_small_values() {
        let size = |n, d| exact_max_independent_set(&build_gilbert_graph(&bin(n, d), B).unwrap()).unwrap().len();
        assert_eq!(size(4, 3), 2);
        assert_eq!(size(5, 3), 4);
        assert_eq!(size(6, 3), 8);
        assert_eq!(size(7, 3), 16);
        assert_eq!(size(6, 4), 4);
        let edgeless = ExplicitGraph::from_edges(5, &[]).unwrap();
        assert_eq!(max_independent_set_vertices(&edgeless).unwrap().len(), 5);
        let k4: Vec<(usize, usize)> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        let complete = ExplicitGraph::from_edges(4, &k4).unwrap();
        assert_eq!(max_independent_set_vertices(&complete).unwrap().len(), 1);
        let cycle = ExplicitGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(max_independent_set_vertices(&cycle).unwrap().len(), 2);
    }

    #[test]
    fn exact_solver_budget() {
        let g = build_gilbert_graph(&bin(9, 3), B).unwrap();
        assert!(matches!(
            max_independent_set_vertices(&g),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(build_gilbert_graph(&bin(21, 3), B).is_err());
    }

    #[test]
    fn intersection_counts() {
        assert_eq!(brute_intersection_counts(4, 2, 2, 1, 1, B).unwrap(), Count::from(2u64));
        for n in 1..=6 {
            for w in 0..=n {
                assert_eq!(brute_intersection_counts(n, 3, w, 0, w, B).unwrap(), Count::one());
            }
        }
    }

    #[test]
    fn edge_list_dump() {
        let g = ExplicitGraph::from_edges(3, &[(0, 1), (2, 1)]).unwrap();
        let mut buf = Vec::new();
        g.write_edge_list(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "3 2\n0 1\n1 2\n");
    }
}
