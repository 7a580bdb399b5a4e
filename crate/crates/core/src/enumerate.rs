//! Exhaustive enumeration of small signed graphs up to isomorphism and
//! switching, plus the argmax machinery the verification pipelines use to
//! rank candidates by Estrada index.
//!
//! Underlying graphs are deduplicated with a brute-force canonical form:
//! the minimum adjacency bitstring over all relabelings that respect the
//! iterated neighbor-color refinement of the vertex set. That search is
//! exponential in the largest color class, which is why every entry point
//! is gated behind [`Guards`].

use std::collections::HashSet;

use crate::estrada::estrada_index;
use crate::families::complete_bipartite;
use crate::graph::SignedGraph;
use crate::{Error, Result};

/// Size limits for the exhaustive searches. `max_n` bounds the vertex count
/// of general enumeration; `max_bipartite_product` bounds m * n for
/// complete bipartite sign patterns, whose class count is 2^((m-1)(n-1)).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    pub max_n: usize,
    pub max_bipartite_product: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards { max_n: 10, max_bipartite_product: 20 }
    }
}

/// Largest n the u64 adjacency bitstring and the permutation search accept.
const MAX_CANONICAL_N: usize = 11;

fn check_canonical_n(n: usize) -> Result<()> {
    if n > MAX_CANONICAL_N {
        return Err(Error::BadParameter(format!(
            "canonical forms support n <= {MAX_CANONICAL_N}, got {n}"
        )));
    }
    Ok(())
}

fn pair_bit(n: usize, u: usize, v: usize) -> u32 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    (a * n - a * (a + 1) / 2 + (b - a - 1)) as u32
}

/// Stable vertex coloring refined from degrees by repeatedly hashing each
/// vertex's color together with its sorted neighbor colors. Hash collisions
/// only coarsen the partition, which costs permutations but never breaks
/// label invariance.
fn refined_colors(n: usize, adj: &[Vec<usize>]) -> Vec<u64> {
    let mut color: Vec<u64> = adj.iter().map(|a| a.len() as u64).collect();
    let mut distinct = count_distinct(&color);
    loop {
        let mut next = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<u64> = adj[v].iter().map(|&u| color[u]).collect();
            nb.sort_unstable();
            let mut h = 0xcbf29ce484222325u64 ^ color[v];
            for x in nb {
                h = (h ^ x).wrapping_mul(0x100000001b3);
            }
            next.push(h);
        }
        let d = count_distinct(&next);
        if d == distinct {
            return color;
        }
        distinct = d;
        color = next;
    }
}

fn count_distinct(xs: &[u64]) -> usize {
    let mut s = xs.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

/// Vertex classes grouped by refined color, ordered by color value so the
/// grouping is identical for isomorphic graphs.
fn color_classes(n: usize, adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let color = refined_colors(n, adj);
    let mut order: Vec<u64> = color.clone();
    order.sort_unstable();
    order.dedup();
    let mut classes = vec![Vec::new(); order.len()];
    for v in 0..n {
        let k = order.binary_search(&color[v]).unwrap();
        classes[k].push(v);
    }
    classes
}

struct CanonicalSearch<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    classes: &'a [Vec<usize>],
    starts: Vec<usize>,
    perm: Vec<usize>,
    used: Vec<bool>,
    best: u64,
    minimizers: Option<Vec<Vec<usize>>>,
}

impl<'a> CanonicalSearch<'a> {
    fn key_of_perm(&self) -> u64 {
        let top = (self.n * (self.n - 1) / 2) as u32;
        let mut key = 0u64;
        for &(u, v) in self.edges {
            key |= 1u64 << (top - 1 - pair_bit(self.n, self.perm[u], self.perm[v]));
        }
        key
    }

    fn descend(&mut self, class: usize, slot: usize) {
        if class == self.classes.len() {
            let key = self.key_of_perm();
            if key < self.best {
                self.best = key;
                if let Some(m) = self.minimizers.as_mut() {
                    m.clear();
                    m.push(self.perm.clone());
                }
            } else if key == self.best {
                if let Some(m) = self.minimizers.as_mut() {
                    m.push(self.perm.clone());
                }
            }
            return;
        }
        let members = &self.classes[class];
        if slot == members.len() {
            self.descend(class + 1, 0);
            return;
        }
        let label = self.starts[class] + slot;
        for i in 0..members.len() {
            let v = members[i];
            if self.used[i + self.starts[class]] {
                continue;
            }
            self.used[i + self.starts[class]] = true;
            self.perm[v] = label;
            self.descend(class, slot + 1);
            self.used[i + self.starts[class]] = false;
        }
    }
}

/// Minimum adjacency bitstring over color-respecting relabelings, and, when
/// requested, every relabeling that attains it.
fn canonical_underlying_raw(
    n: usize,
    edges: &[(usize, usize)],
    collect_minimizers: bool,
) -> (u64, Vec<Vec<usize>>) {
    if n == 0 {
        return (0, vec![Vec::new()]);
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let classes = color_classes(n, &adj);
    let mut starts = Vec::with_capacity(classes.len());
    let mut acc = 0;
    for c in &classes {
        starts.push(acc);
        acc += c.len();
    }
    let mut search = CanonicalSearch {
        n,
        edges,
        classes: &classes,
        starts,
        perm: vec![0; n],
        used: vec![false; n],
        best: u64::MAX,
        minimizers: collect_minimizers.then(Vec::new),
    };
    search.descend(0, 0);
    (search.best, search.minimizers.unwrap_or_default())
}

/// Isomorphism invariant of the underlying graph; equal keys imply equal
/// unsigned isomorphism classes for graphs with the same vertex count.
pub fn canonical_underlying_key(g: &SignedGraph) -> Result<u64> {
    check_canonical_n(g.n())?;
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v, _)| (u, v)).collect();
    Ok(canonical_underlying_raw(g.n(), &edges, false).0)
}

/// Invariant of the signed graph under both relabeling and switching: the
/// underlying key paired with the minimum switching normal form over all
/// relabelings that attain the underlying minimum.
pub fn canonical_signed_key(g: &SignedGraph) -> Result<(u64, u64)> {
    check_canonical_n(g.n())?;
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v, _)| (u, v)).collect();
    let (ukey, perms) = canonical_underlying_raw(g.n(), &edges, true);
    let mut best_signs = u64::MAX;
    for perm in &perms {
        let relabeled: Vec<(usize, usize, i8)> =
            g.edges().iter().map(|&(u, v, s)| (perm[u], perm[v], s)).collect();
        let h = SignedGraph::from_edge_list(g.n(), &relabeled)?;
        let normal = h.switching_normal_signs();
        let mut bits = 0u64;
        for (i, &s) in normal.iter().enumerate() {
            if s < 0 {
                bits |= 1u64 << (normal.len() - 1 - i);
            }
        }
        best_signs = best_signs.min(bits);
    }
    Ok((ukey, best_signs))
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// One all-positive representative of every isomorphism class of connected
/// graphs with n vertices and m edges, sorted by canonical key.
pub fn connected_underlying_graphs(
    n: usize,
    m: usize,
    guards: &Guards,
) -> Result<Vec<SignedGraph>> {
    if n == 0 {
        return Err(Error::BadParameter("enumeration needs n >= 1".into()));
    }
    if n > guards.max_n {
        return Err(Error::GuardExceeded { n, guard: guards.max_n });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    if m > pairs.len() {
        return Err(Error::BadParameter(format!(
            "m = {m} exceeds the {} vertex pairs on {n} vertices",
            pairs.len()
        )));
    }
    if m + 1 < n {
        return Ok(Vec::new());
    }

    let mut seen = HashSet::new();
    let mut found: Vec<(u64, SignedGraph)> = Vec::new();
    let mut idx: Vec<usize> = (0..m).collect();
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    loop {
        edges.clear();
        edges.extend(idx.iter().map(|&i| pairs[i]));

        let mut dsu = Dsu::new(n);
        let mut parts = n;
        for &(u, v) in &edges {
            if dsu.union(u, v) {
                parts -= 1;
            }
        }
        if parts == 1 {
            let (key, _) = canonical_underlying_raw(n, &edges, false);
            if seen.insert(key) {
                let signed: Vec<(usize, usize, i8)> =
                    edges.iter().map(|&(u, v)| (u, v, 1)).collect();
                found.push((key, SignedGraph::from_edge_list(n, &signed)?));
            }
        }

        // Next m-combination of pair indices, or stop.
        let mut i = m;
        loop {
            if i == 0 {
                found.sort_by_key(|(k, _)| *k);
                return Ok(found.into_iter().map(|(_, g)| g).collect());
            }
            i -= 1;
            if idx[i] != pairs.len() - m + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..m {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// How many sign patterns a co-tree enumeration may expand.
const MAX_COTREE: usize = 24;

/// One representative per switching class of the underlying graph of `g`
/// (input signs are ignored): spanning-forest edges stay positive and the
/// remaining m - n + c edges take every sign pattern. Representatives are
/// pairwise inequivalent and cover all classes.
pub fn switching_class_representatives(g: &SignedGraph) -> Result<Vec<SignedGraph>> {
    let n = g.n();
    let adj = g.adjacency_list();
    let mut in_forest = vec![false; g.m()];
    let mut visited = vec![false; n];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &adj[u] {
                if !visited[v] {
                    visited[v] = true;
                    in_forest[g.edge_index(u, v).unwrap()] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    let cotree: Vec<usize> = (0..g.m()).filter(|&i| !in_forest[i]).collect();
    if cotree.len() > MAX_COTREE {
        return Err(Error::BadParameter(format!(
            "co-tree has {} edges; refusing to expand more than {MAX_COTREE}",
            cotree.len()
        )));
    }
    let mut reps = Vec::with_capacity(1 << cotree.len());
    for mask in 0u64..(1u64 << cotree.len()) {
        let mut edges: Vec<(usize, usize, i8)> =
            g.edges().iter().map(|&(u, v, _)| (u, v, 1)).collect();
        for (bit, &ei) in cotree.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                edges[ei].2 = -1;
            }
        }
        reps.push(SignedGraph::from_edge_list(n, &edges)?);
    }
    Ok(reps)
}

/// Every unbalanced switching class of the complete bipartite graph with
/// parts of size m and n, one representative each. The balanced class is
/// the all-positive pattern and is excluded.
pub fn complete_bipartite_unbalanced_classes(
    m: usize,
    n: usize,
    guards: &Guards,
) -> Result<Vec<SignedGraph>> {
    if m == 0 || n == 0 {
        return Err(Error::BadParameter("both parts need at least one vertex".into()));
    }
    if m * n > guards.max_bipartite_product {
        return Err(Error::GuardExceeded { n: m * n, guard: guards.max_bipartite_product });
    }
    let full = complete_bipartite(m, n, &[])?;
    Ok(switching_class_representatives(&full)?
        .into_iter()
        .filter(|g| !g.is_balanced())
        .collect())
}

/// Keeps only the candidates whose spectrum is symmetric about zero.
pub fn filter_pairing(candidates: Vec<SignedGraph>) -> Vec<SignedGraph> {
    candidates.into_iter().filter(|g| g.has_pairing_property()).collect()
}

/// Outcome of ranking candidates by Estrada index.
#[derive(Debug, Clone)]
pub struct ExtremalResult {
    /// One representative per signed class within `tie_tol` of the maximum,
    /// ordered by canonical signed key.
    pub winners: Vec<SignedGraph>,
    pub max: f64,
    /// Best index among candidates more than `tie_tol` below the maximum.
    pub runner_up: Option<f64>,
    /// Gap between `max` and `runner_up`.
    pub margin: Option<f64>,
    /// Number of candidates examined.
    pub candidates: usize,
}

/// Ranks candidates by Estrada index. Candidates within `tie_tol` of the
/// maximum count as tied and are deduplicated up to relabeling and
/// switching before being reported as winners.
pub fn argmax_ee(
    candidates: &[SignedGraph],
    tie_tol: f64,
    tol: f64,
) -> Result<ExtremalResult> {
    if candidates.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    let mut ee = Vec::with_capacity(candidates.len());
    for g in candidates {
        ee.push(estrada_index(g, tol)?.value);
    }
    let max = ee.iter().cloned().fold(f64::NEG_INFINITY, f64::max);

    let mut tied: Vec<((u64, u64), &SignedGraph)> = Vec::new();
    let mut runner_up: Option<f64> = None;
    for (g, &e) in candidates.iter().zip(&ee) {
        if e > max - tie_tol {
            let key = canonical_signed_key(g)?;
            if !tied.iter().any(|(k, _)| *k == key) {
                tied.push((key, g));
            }
        } else if runner_up.map_or(true, |r| e > r) {
            runner_up = Some(e);
        }
    }
    tied.sort_by_key(|(k, _)| *k);
    Ok(ExtremalResult {
        winners: tied.into_iter().map(|(_, g)| g.clone()).collect(),
        max,
        runner_up,
        margin: runner_up.map(|r| max - r),
        candidates: candidates.len(),
    })
}
