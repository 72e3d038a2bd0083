//! Brute-force certifiers: covering-code search, maximum-code search, random codes.
//!
//! Vectors are handled by their index in GF(q^m)^n (coordinate 0 least
//! significant, base q^m). Coverings are translation invariant, so exhaustive
//! search always puts the zero vector in the code.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::codes::{Codebook, LinearCode};
use crate::error::{Error, Result};
use crate::ffield::Field;
use crate::linalg;
use crate::rankgeom::{all_vectors, decode_index, encode_index, rank_of, space_size, vec_add};

/// Largest space for exhaustive covering search (one ball bitset per vector).
pub mod suites;

pub const EXHAUSTIVE_SPACE_LIMIT: u64 = 1 << 12;
/// Largest space for maximum-code search.
pub const CLIQUE_SPACE_LIMIT: u64 = 1 << 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest q^{mn} a scan may touch.
    pub max_space: u64,
    /// Search-tree nodes allowed per top-level branch.
    pub max_nodes: u64,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_space: 1 << 20, max_nodes: 50_000_000, seed: 0 }
    }
}

/// Result of a search that may run out of budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Done(T),
    Inconclusive { nodes: u64 },
}

impl<T> Outcome<T> {
    pub fn done(self) -> Option<T> {
        match self {
            Outcome::Done(t) => Some(t),
            Outcome::Inconclusive { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn or(&mut self, o: &Bits) {
        self.0.iter_mut().zip(&o.0).for_each(|(a, b)| *a |= b);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> u64 {
        self.0.iter().map(|w| w.count_ones() as u64).sum()
    }
    fn first_zero(&self, len: usize) -> Option<usize> {
        self.0.iter().enumerate().find_map(|(w, &x)| {
            let i = w * 64 + (!x).trailing_zeros() as usize;
            (x != u64::MAX && i < len).then_some(i)
        })
    }
    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &x)| {
            let mut x = x;
            std::iter::from_fn(move || {
                (x != 0).then(|| {
                    let b = x.trailing_zeros() as usize;
                    x &= x - 1;
                    w * 64 + b
                })
            })
        })
    }
}

// Space indexing shared by the searches.
struct Space {
    field: Field,
    n: usize,
    size: usize,
    base: u64,
}

impl Space {
    fn new(field: &Field, n: usize, limit: u64) -> Result<Space> {
        let size = space_size(field, n, limit)? as usize;
        Ok(Space { field: field.clone(), n, size, base: field.size() as u64 })
    }
    fn vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.n];
        decode_index(self.base, i as u64, &mut v);
        v
    }
    fn index(&self, v: &[u32]) -> usize {
        encode_index(self.base, v) as usize
    }
    /// Indices of the vectors of rank at most rho.
    fn ball_offsets(&self, rho: usize) -> Vec<Vec<u32>> {
        (0..self.size).map(|i| self.vector(i)).filter(|v| rank_of(&self.field, v) <= rho).collect()
    }
    fn ball(&self, center: usize, offsets: &[Vec<u32>]) -> Vec<usize> {
        let c = self.vector(center);
        offsets.iter().map(|o| self.index(&vec_add(&self.field, &c, o))).collect()
    }
    fn codebook(&self, idx: &[usize]) -> Result<Codebook> {
        Codebook::new(&self.field, self.n, idx.iter().map(|&i| self.vector(i)).collect())
    }
}

struct CoverSearch<'a> {
    balls: &'a [Bits],
    size: usize,
    ball_size: u64,
    nodes: u64,
    max_nodes: u64,
}

impl CoverSearch<'_> {
    // true: found (chosen holds the witness); false: none below this node.
    fn dfs(&mut self, covered: &Bits, chosen: &mut Vec<usize>, k: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return None;
        }
        let Some(u) = covered.first_zero(self.size) else {
            return Some(true);
        };
        let left = (k - chosen.len()) as u64;
        if left == 0 || left * self.ball_size < self.size as u64 - covered.count() {
            return Some(false);
        }
        // every code covering u has a center in the ball around u
        for c in self.balls[u].ones() {
            let mut next = covered.clone();
            next.or(&self.balls[c]);
            chosen.push(c);
            match self.dfs(&next, chosen, k) {
                Some(false) => {
                    chosen.pop();
                }
                r => return r,
            }
        }
        Some(false)
    }
}

/// Whether some K codewords cover GF(q^m)^n with radius rho; a witness when they do.
pub fn exhaustive_min_covering(
    field: &Field,
    n: usize,
    rho: usize,
    k: usize,
    budget: &SearchBudget,
) -> Result<Outcome<Option<Codebook>>> {
    let sp = Space::new(field, n, budget.max_space.min(EXHAUSTIVE_SPACE_LIMIT))?;
    if k == 0 {
        return Ok(Outcome::Done(None));
    }
    let offsets = sp.ball_offsets(rho);
    let balls: Vec<Bits> = (0..sp.size)
        .into_par_iter()
        .map(|c| {
            let mut b = Bits::new(sp.size);
            sp.ball(c, &offsets).into_iter().for_each(|i| b.set(i));
            b
        })
        .collect();
    let mut start = Bits::new(sp.size);
    start.or(&balls[0]);
    let Some(u) = start.first_zero(sp.size) else {
        return Ok(Outcome::Done(Some(sp.codebook(&[0])?)));
    };
    if k == 1 {
        return Ok(Outcome::Done(None));
    }
    let first: Vec<usize> = balls[u].ones().collect();
    let results: Vec<(Option<Vec<usize>>, bool, u64)> = first
        .par_iter()
        .map(|&c| {
            let mut s = CoverSearch {
                balls: &balls,
                size: sp.size,
                ball_size: offsets.len() as u64,
                nodes: 0,
                max_nodes: budget.max_nodes,
            };
            let mut covered = start.clone();
            covered.or(&balls[c]);
            let mut chosen = vec![0, c];
            match s.dfs(&covered, &mut chosen, k) {
                Some(true) => (Some(chosen), false, s.nodes),
                Some(false) => (None, false, s.nodes),
                None => (None, true, s.nodes),
            }
        })
        .collect();
    let nodes = results.iter().map(|r| r.2).sum();
    if let Some(w) = results.iter().find_map(|r| r.0.clone()) {
        return Ok(Outcome::Done(Some(sp.codebook(&w)?)));
    }
    if results.iter().any(|r| r.1) {
        return Ok(Outcome::Inconclusive { nodes });
    }
    Ok(Outcome::Done(None))
}

/// Smallest K for which a covering exists, scanning K = lo, lo+1, ..., hi.
pub fn min_covering_size(
    field: &Field,
    n: usize,
    rho: usize,
    lo: usize,
    hi: usize,
    budget: &SearchBudget,
) -> Result<Outcome<Option<(usize, Codebook)>>> {
    for k in lo..=hi {
        match exhaustive_min_covering(field, n, rho, k, budget)? {
            Outcome::Done(Some(w)) => return Ok(Outcome::Done(Some((k, w)))),
            Outcome::Done(None) => {}
            Outcome::Inconclusive { nodes } => return Ok(Outcome::Inconclusive { nodes }),
        }
    }
    Ok(Outcome::Done(None))
}

/// Greedy covering: repeatedly add the vector covering the most uncovered
/// vectors, ties to the smallest index.
pub fn greedy_covering(field: &Field, n: usize, rho: usize, budget: &SearchBudget) -> Result<Codebook> {
    let sp = Space::new(field, n, budget.max_space)?;
    let offsets = sp.ball_offsets(rho);
    let mut gain = vec![offsets.len() as u32; sp.size];
    let mut covered = vec![false; sp.size];
    let mut left = sp.size;
    let mut code = Vec::new();
    while left > 0 {
        let best = (0..sp.size).max_by_key(|&c| (gain[c], std::cmp::Reverse(c))).expect("nonempty space");
        code.push(best);
        for u in sp.ball(best, &offsets) {
            if covered[u] {
                continue;
            }
            covered[u] = true;
            left -= 1;
            for c in sp.ball(u, &offsets) {
                gain[c] -= 1;
            }
        }
    }
    sp.codebook(&code)
}

struct Clique<'a> {
    adj: &'a [Bits],
    best: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
}

impl Clique<'_> {
    // greedy colouring gives an upper bound on the clique inside `cand`
    fn colour_order(&self, cand: &Bits) -> Vec<(usize, usize)> {
        let mut rest: Vec<usize> = cand.ones().collect();
        let mut out = Vec::with_capacity(rest.len());
        let mut colour = 0;
        while !rest.is_empty() {
            colour += 1;
            let mut class: Vec<usize> = Vec::new();
            rest.retain(|&v| {
                if class.iter().all(|&w| !self.adj[v].get(w)) {
                    class.push(v);
                    false
                } else {
                    true
                }
            });
            out.extend(class.into_iter().map(|v| (v, colour)));
        }
        out
    }

    fn expand(&mut self, current: &mut Vec<usize>, cand: Bits) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return false;
        }
        let order = self.colour_order(&cand);
        let mut cand = cand;
        for &(v, colour) in order.iter().rev() {
            if current.len() + colour <= self.best.len() {
                return true;
            }
            current.push(v);
            let next = cand.and(&self.adj[v]);
            if next.count() == 0 {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else if !self.expand(current, next) {
                return false;
            }
            current.pop();
            cand.0[v / 64] &= !(1 << (v % 64));
        }
        true
    }
}

/// Largest code in GF(q^m)^n with minimum rank distance at least d, with a witness.
pub fn max_code_search(field: &Field, n: usize, d: usize, budget: &SearchBudget) -> Result<Outcome<Codebook>> {
    let sp = Space::new(field, n, budget.max_space.min(CLIQUE_SPACE_LIMIT))?;
    if d <= 1 {
        return Ok(Outcome::Done(sp.codebook(&(0..sp.size).collect::<Vec<_>>())?));
    }
    let vecs = all_vectors(field, n, sp.size as u64)?;
    let adj: Vec<Bits> = (0..sp.size)
        .map(|i| {
            let mut b = Bits::new(sp.size);
            for j in 0..sp.size {
                if i != j && rank_of(field, &crate::rankgeom::vec_sub(field, &vecs[i], &vecs[j])) >= d {
                    b.set(j);
                }
            }
            b
        })
        .collect();
    let mut s = Clique { adj: &adj, best: vec![0], nodes: 0, max_nodes: budget.max_nodes };
    let mut current = vec![0];
    let cand = adj[0].clone();
    if cand.count() > 0 && !s.expand(&mut current, cand) {
        return Ok(Outcome::Inconclusive { nodes: s.nodes });
    }
    Ok(Outcome::Done(sp.codebook(&s.best)?))
}

/// Uniformly random k-dimensional code of length n, by rejection on the generator rank.
pub fn random_linear_code(field: &Field, n: usize, k: usize, seed: u64) -> Result<LinearCode> {
    if k > n {
        return Err(Error::OutOfRange(format!("dimension {k} above length {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let g: Vec<Vec<u32>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..field.size())).collect()).collect();
        if linalg::rank(field, &g) == k {
            return LinearCode::new(field, n, g);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rankgeom::DEFAULT_GUARD;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn covering_examples() {
        let f = Field::gf(2, 2);
        let w = exhaustive_min_covering(&f, 2, 1, 4, &budget()).unwrap().done().unwrap().unwrap();
        assert!(w.covers(1, DEFAULT_GUARD).unwrap());
        assert!(w.words().contains(&vec![0, 0]));
        assert_eq!(exhaustive_min_covering(&f, 2, 1, 2, &budget()).unwrap(), Outcome::Done(None));
        let one = exhaustive_min_covering(&f, 2, 2, 1, &budget()).unwrap().done().unwrap().unwrap();
        assert_eq!(one.len(), 1);
        let (k, w) = min_covering_size(&f, 2, 1, 1, 4, &budget()).unwrap().done().unwrap().unwrap();
        assert_eq!(k, 3);
        assert!(w.covers(1, DEFAULT_GUARD).unwrap());
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let f = Field::gf(2, 2);
        let b = SearchBudget { max_nodes: 1, ..budget() };
        assert!(matches!(exhaustive_min_covering(&f, 2, 1, 3, &b).unwrap(), Outcome::Inconclusive { .. }));
        let f = Field::gf(2, 3);
        assert!(exhaustive_min_covering(&f, 5, 1, 2, &budget()).is_err());
    }

    #[test]
    fn greedy_examples() {
        let f = Field::gf(2, 2);
        let g = greedy_covering(&f, 2, 1, &budget()).unwrap();
        assert!(g.len() <= 4);
        assert!(g.covers(1, DEFAULT_GUARD).unwrap());
        assert_eq!(greedy_covering(&f, 2, 2, &budget()).unwrap().len(), 1);
        assert_eq!(greedy_covering(&f, 2, 1, &budget()).unwrap(), g);
    }

    #[test]
    fn max_code_examples() {
        let f = Field::gf(2, 2);
        let size = |d| max_code_search(&f, 2, d, &budget()).unwrap().done().unwrap().len();
        assert_eq!(size(1), 16);
        assert_eq!(size(2), 4);
        assert_eq!(size(3), 1);
        let c = max_code_search(&f, 2, 2, &budget()).unwrap().done().unwrap();
        assert!(c.min_rank_distance().unwrap() >= 2);
    }

    #[test]
    fn random_codes() {
        let f = Field::gf(3, 2);
        assert_eq!(random_linear_code(&f, 3, 0, 1).unwrap().k(), 0);
        let c = random_linear_code(&f, 3, 3, 5).unwrap();
        assert!(c.same_code(&LinearCode::whole_space(&f, 3)));
        assert_eq!(random_linear_code(&f, 3, 2, 9).unwrap(), random_linear_code(&f, 3, 2, 9).unwrap());
        assert!(random_linear_code(&f, 2, 3, 0).is_err());
    }
}
