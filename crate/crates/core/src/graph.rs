//! Signed-graph data model: construction, adjacency, switching, balance,
//! cycle signs, induced subgraphs and the pairing property.

use crate::{Error, Result};

/// A simple graph with each edge labeled -1 or +1.
///
/// Edges are stored with `u < v` in lexicographic order, so two structurally
/// equal graphs have identical representations and `==` is structural
/// equality. Values are immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<(usize, usize, i8)>,
}

/// A vertex subset `Z`; switching negates every edge with exactly one
/// endpoint in `Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingCertificate {
    in_z: Vec<bool>,
}

impl SwitchingCertificate {
    pub fn from_set(n: usize, verts: &[usize]) -> Result<Self> {
        let mut in_z = vec![false; n];
        for &v in verts {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            in_z[v] = true;
        }
        Ok(Self { in_z })
    }

    pub fn order(&self) -> usize {
        self.in_z.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.in_z.get(v).copied().unwrap_or(false)
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.in_z.len()).filter(|&v| self.in_z[v]).collect()
    }
}

/// Symmetric integer matrix with zero diagonal; entries lie in {-1, 0, 1}
/// when built from a [`SignedGraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    a: Vec<i64>,
}

impl IntMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    /// Row-major copy of the entries as floats.
    pub fn to_f64(&self) -> Vec<f64> {
        self.a.iter().map(|&x| x as f64).collect()
    }
}

impl SignedGraph {
    /// Builds a graph from an edge list, normalizing each edge to `u < v`
    /// and sorting. Rejects self-loops, out-of-range endpoints, duplicate
    /// edges (regardless of orientation) and signs outside {-1, +1}.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize, i8)]) -> Result<Self> {
        let mut norm: Vec<(usize, usize, i8)> = Vec::with_capacity(edges.len());
        for &(u, v, sign) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { v: u });
            }
            if sign != 1 && sign != -1 {
                return Err(Error::BadSign { u, v, sign });
            }
            norm.push((u.min(v), u.max(v), sign));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
                return Err(Error::DuplicateEdge { u: w[1].0, v: w[1].1 });
            }
        }
        Ok(Self { n, edges: norm })
    }

    /// Graph with no edges.
    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize, i8)] {
        &self.edges
    }

    /// Sign of edge `{u, v}` if present.
    pub fn sign_of(&self, u: usize, v: usize) -> Option<i8> {
        self.edge_index(u, v).map(|i| self.edges[i].2)
    }

    /// Position of edge `{u, v}` in [`Self::edges`] if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search_by_key(&key, |&(a, b, _)| (a, b))
            .ok()
    }

    /// Neighbor lists with edge signs, indexed by vertex.
    pub fn adjacency_list(&self) -> Vec<Vec<(usize, i8)>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v, s) in &self.edges {
            adj[u].push((v, s));
            adj[v].push((u, s));
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b, _)| a == v || b == v)
            .count()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.n];
        for &(u, v, _) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut a = vec![0i64; self.n * self.n];
        for &(u, v, s) in &self.edges {
            a[u * self.n + v] = s as i64;
            a[v * self.n + u] = s as i64;
        }
        IntMatrix { n: self.n, a }
    }

    /// Same underlying graph with every edge positive.
    pub fn all_positive(&self) -> SignedGraph {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v, _)| (u, v, 1)).collect();
        Self { n: self.n, edges }
    }

    /// Same underlying graph with every edge negative.
    pub fn all_negative(&self) -> SignedGraph {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v, _)| (u, v, -1)).collect();
        Self { n: self.n, edges }
    }

    /// True if both graphs have the same labeled underlying graph.
    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.n == other.n
            && self.m() == other.m()
            && self
                .edges
                .iter()
                .zip(&other.edges)
                .all(|(&(a, b, _), &(c, d, _))| a == c && b == d)
    }

    /// Negates every edge in the cut between `Z` and its complement. The
    /// underlying graph is unchanged; applying the same certificate twice
    /// restores the original.
    pub fn switch(&self, cert: &SwitchingCertificate) -> Result<SignedGraph> {
        if cert.order() != self.n {
            return Err(Error::BadParameter(format!(
                "certificate covers {} vertices, graph has {}",
                cert.order(),
                self.n
            )));
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v, s)| {
                if cert.contains(u) != cert.contains(v) {
                    (u, v, -s)
                } else {
                    (u, v, s)
                }
            })
            .collect();
        Ok(Self { n: self.n, edges })
    }

    /// Product of edge signs along a simple cycle given as a vertex
    /// sequence (closed implicitly from last back to first).
    pub fn cycle_sign(&self, cycle: &[usize]) -> Result<i8> {
        if cycle.len() < 3 {
            return Err(Error::NotACycle {
                reason: format!("length {} < 3", cycle.len()),
            });
        }
        let mut seen = vec![false; self.n];
        for &v in cycle {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
            if seen[v] {
                return Err(Error::NotACycle {
                    reason: format!("vertex {v} repeated"),
                });
            }
            seen[v] = true;
        }
        let mut sign = 1i8;
        for i in 0..cycle.len() {
            let u = cycle[i];
            let v = cycle[(i + 1) % cycle.len()];
            match self.sign_of(u, v) {
                Some(s) => sign *= s,
                None => return Err(Error::NotAnEdge { u, v }),
            }
        }
        Ok(sign)
    }

    /// Vertex marks from spanning-forest propagation: BFS from the lowest
    /// unvisited vertex, choosing each mark so the discovering tree edge
    /// becomes positive under `s * mark[u] * mark[v]`.
    fn forest_marks(&self) -> Vec<i8> {
        let adj = self.adjacency_list();
        let mut mark = vec![0i8; self.n];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..self.n {
            if mark[root] != 0 {
                continue;
            }
            mark[root] = 1;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &(v, s) in &adj[u] {
                    if mark[v] == 0 {
                        mark[v] = mark[u] * s;
                        queue.push_back(v);
                    }
                }
            }
        }
        mark
    }

    /// Edge signs after switching by the forest-mark set; spanning-forest
    /// edges come out positive, so the result is constant on each switching
    /// class of a fixed labeled graph.
    pub(crate) fn switching_normal_signs(&self) -> Vec<i8> {
        let mark = self.forest_marks();
        self.edges
            .iter()
            .map(|&(u, v, s)| s * mark[u] * mark[v])
            .collect()
    }

    /// Returns a certificate `Z` with `switch(self, Z)` all-positive when
    /// every cycle is positive, `None` otherwise.
    pub fn balance_certificate(&self) -> Option<SwitchingCertificate> {
        let mark = self.forest_marks();
        let balanced = self
            .edges
            .iter()
            .all(|&(u, v, s)| s * mark[u] * mark[v] == 1);
        if balanced {
            let in_z = mark.iter().map(|&m| m == -1).collect();
            Some(SwitchingCertificate { in_z })
        } else {
            None
        }
    }

    pub fn is_balanced(&self) -> bool {
        self.balance_certificate().is_some()
    }

    /// True iff the graphs share a labeled underlying graph and one can be
    /// switched into the other.
    pub fn is_switching_equivalent(&self, other: &SignedGraph) -> bool {
        self.same_underlying(other)
            && self.switching_normal_signs() == other.switching_normal_signs()
    }

    /// Subgraph induced on `verts`, relabeled to 0..verts.len() in the given
    /// order, preserving edge signs.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<SignedGraph> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v, s) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v], s));
            }
        }
        SignedGraph::from_edge_list(verts.len(), &edges)
    }

    /// True iff the spectrum is symmetric about zero with matching
    /// multiplicities. Tested exactly: in phi(x) = sum a_i x^(n-i), every
    /// odd-indexed coefficient must vanish.
    pub fn has_pairing_property(&self) -> bool {
        let cp = crate::spectra::char_poly(self);
        cp.is_spectrally_symmetric()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_ids().iter().all(|&c| c == 0)
    }

    /// Component index per vertex, numbered by first appearance.
    pub fn component_ids(&self) -> Vec<usize> {
        let adj = self.adjacency_list();
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for root in 0..self.n {
            if comp[root] != usize::MAX {
                continue;
            }
            comp[root] = next;
            stack.push(root);
            while let Some(u) = stack.pop() {
                for &(v, _) in &adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = next;
                        stack.push(v);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.component_ids().iter().max().map_or(0, |&c| c + 1)
    }

    /// True iff the underlying graph admits a proper 2-coloring.
    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency_list();
        let mut color = vec![-1i8; self.n];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..self.n {
            if color[root] != -1 {
                continue;
            }
            color[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &(v, _) in &adj[u] {
                    if color[v] == -1 {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff the underlying graph contains an odd cycle.
    pub fn has_odd_cycle(&self) -> bool {
        !self.is_bipartite()
    }
}

/// Disjoint union with the second graph's vertices shifted past the first.
pub fn disjoint_union(g1: &SignedGraph, g2: &SignedGraph) -> SignedGraph {
    let shift = g1.n();
    let mut edges = g1.edges().to_vec();
    edges.extend(g2.edges().iter().map(|&(u, v, s)| (u + shift, v + shift, s)));
    SignedGraph::from_edge_list(g1.n() + g2.n(), &edges).expect("disjoint parts cannot collide")
}
