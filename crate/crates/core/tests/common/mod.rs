//! Random presentations and brute-force oracles shared by the integration
//! suites. Nothing here calls the BFS norm code or the builders' closure
//! logic, so the oracles stay independent of what they check.

#![allow(dead_code)]

use std::collections::HashMap;

use catgeo_core::{ArrowIx, Basis, Edge, FiniteCategory};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

#[derive(Debug, Clone)]
pub struct Presentation {
    pub objects: Vec<String>,
    pub edges: Vec<Edge>,
}

impl Presentation {
    pub fn thin(&self) -> FiniteCategory {
        FiniteCategory::thin(&self.objects, &self.edges).expect("random DAG builds thin")
    }

    pub fn free(&self) -> FiniteCategory {
        FiniteCategory::free(&self.objects, &self.edges).expect("random DAG builds free")
    }

    fn index(&self, name: &str) -> usize {
        self.objects.iter().position(|o| o == name).unwrap()
    }
}

/// A random DAG on up to `max_objects` objects with up to `max_edges` edges.
/// Edges follow a random topological order; `multi` allows parallel edges.
pub fn random_dag(rng: &mut StdRng, max_objects: usize, max_edges: usize, multi: bool) -> Presentation {
    let n = rng.gen_range(1..=max_objects);
    let objects: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((order[i], order[j]));
        }
    }
    let mut edges = Vec::new();
    if !pairs.is_empty() {
        let count = rng.gen_range(0..=max_edges);
        if multi {
            for k in 0..count {
                let (a, b) = pairs[rng.gen_range(0..pairs.len())];
                edges.push(Edge::new(format!("g{k}"), &objects[a], &objects[b]));
            }
        } else {
            pairs.shuffle(rng);
            for (k, &(a, b)) in pairs.iter().take(count).enumerate() {
                edges.push(Edge::new(format!("g{k}"), &objects[a], &objects[b]));
            }
        }
    }
    Presentation { objects, edges }
}

/// The generated corpus used by the property and acceptance suites.
pub struct Corpus {
    pub thin: Vec<(Presentation, FiniteCategory)>,
    pub free: Vec<(Presentation, FiniteCategory)>,
}

impl Corpus {
    pub fn generate(seed: u64, thin_count: usize, free_count: usize) -> Self {
        let mut rng = StdRng::seed_from_u64(seed);
        let thin = (0..thin_count)
            .map(|_| {
                let p = random_dag(&mut rng, 8, 14, false);
                let c = p.thin();
                (p, c)
            })
            .collect();
        let free = (0..free_count)
            .map(|_| {
                let p = random_dag(&mut rng, 6, 9, true);
                let c = p.free();
                (p, c)
            })
            .collect();
        Corpus { thin, free }
    }

    pub fn categories(&self) -> impl Iterator<Item = &FiniteCategory> {
        self.thin.iter().chain(&self.free).map(|(_, c)| c)
    }
}

/// Ordered pairs `a != b` connected by a nonempty path, by Warshall's
/// algorithm on the adjacency matrix.
pub fn closure_pairs(p: &Presentation) -> usize {
    let n = p.objects.len();
    let mut r = vec![vec![false; n]; n];
    for e in &p.edges {
        r[p.index(&e.dom)][p.index(&e.cod)] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && r[i][j])
        .count()
}

/// Number of nonempty directed paths, by brute-force enumeration of edge
/// sequences.
pub fn path_count(p: &Presentation) -> usize {
    fn extend(p: &Presentation, end: &str) -> usize {
        p.edges
            .iter()
            .filter(|e| e.dom == end)
            .map(|e| 1 + extend(p, &e.cod))
            .sum()
    }
    p.edges.iter().map(|e| 1 + extend(p, &e.cod)).sum()
}

/// Minimum number of basis arrows whose composite is each arrow, found by
/// enumerating every composable basis sequence of length at most `bound`.
pub fn brute_force_norms(c: &FiniteCategory, basis: &Basis, bound: usize) -> HashMap<ArrowIx, usize> {
    fn walk(
        c: &FiniteCategory,
        basis: &[ArrowIx],
        product: ArrowIx,
        len: usize,
        bound: usize,
        best: &mut HashMap<ArrowIx, usize>,
    ) {
        if !c.is_identity(product) {
            let slot = best.entry(product).or_insert(usize::MAX);
            *slot = (*slot).min(len);
        }
        if len == bound {
            return;
        }
        for &e in basis {
            if c.cod(product) != c.dom(e) {
                continue;
            }
            if let Some(next) = c.composite(product, e) {
                walk(c, basis, next, len + 1, bound, best);
            }
        }
    }
    let members: Vec<ArrowIx> = basis.iter().collect();
    let mut best = HashMap::new();
    for &e in &members {
        walk(c, &members, e, 1, bound, &mut best);
    }
    best
}
