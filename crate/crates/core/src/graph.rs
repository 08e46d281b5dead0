//! Simple labeled graphs on at most 64 vertices.
//!
//! Vertices are stored 0-based (`0..n`); every textual or serialized form
//! (JSON, DOT, `Display`) uses the 1-based labels `1..=n`.

use std::fmt;

use itertools::Itertools;

use crate::error::{param, Error, Result};

/// Largest supported vertex count; adjacency rows are single `u64` masks.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph with bitmask adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Result of [`Graph::induced_subgraph`]: the relabeled graph plus the map back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `mapping[i]` is the original vertex that became vertex `i`.
    pub mapping: Vec<usize>,
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Bitmask of a vertex list.
pub fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0u64, |m, &v| m | (1u64 << v))
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// All `k`-element subsets of `0..n` as masks, in increasing numeric order
/// (Gosper's hack). Increasing numeric order is colexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n == 64 { None } else { Some(1u64 << n) };
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some(full_mask(k))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let nx = (((r ^ cur) >> 2) / c) | r;
                match limit {
                    Some(l) if nx >= l => None,
                    _ => Some(nx),
                }
            }
        };
        Some(cur)
    })
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return param(format!("vertex count {n} exceeds {MAX_VERTICES}"));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 0-based edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency masks, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return param(format!("vertex count {n} exceeds {MAX_VERTICES}"));
        }
        for (u, &row) in adj.iter().enumerate() {
            if row & !full_mask(n) != 0 {
                return param(format!("vertex {} has a neighbor outside 1..{n}", u + 1));
            }
            if row >> u & 1 == 1 {
                return param(format!("self-loop at vertex {}", u + 1));
            }
            for v in bits(row) {
                if adj[v] >> u & 1 == 0 {
                    return param(format!("adjacency not symmetric at {{{}, {}}}", u + 1, v + 1));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let g = Graph::empty(n)?;
        Ok(g.complement())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return param(format!(
                "edge {{{}, {}}} has an endpoint outside 1..{}",
                u + 1,
                v + 1,
                self.n
            ));
        }
        if u == v {
            return param(format!("self-loop at vertex {}", u + 1));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbor set of `v` as a bitmask.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n);
        let adj = (0..self.n)
            .map(|u| !self.adj[u] & full & !(1u64 << u))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on `vertices` (0-based), relabeled in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<InducedSubgraph> {
        if vertices.is_empty() {
            return param("induced subgraph needs a nonempty vertex set");
        }
        let mut seen = 0u64;
        for &v in vertices {
            if v >= self.n {
                return param(format!("vertex {} outside 1..{}", v + 1, self.n));
            }
            if seen >> v & 1 == 1 {
                return param(format!("vertex {} listed twice", v + 1));
            }
            seen |= 1 << v;
        }
        let k = vertices.len();
        let mut adj = vec![0u64; k];
        for i in 0..k {
            for j in 0..k {
                if self.has_edge(vertices[i], vertices[j]) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Ok(InducedSubgraph {
            graph: Graph { n: k, adj },
            mapping: vertices.to_vec(),
        })
    }

    /// Induced subgraph on the vertices of `mask`, in increasing order.
    pub fn induced_on_mask(&self, mask: u64) -> Result<InducedSubgraph> {
        let verts: Vec<usize> = bits(mask & full_mask(self.n)).collect();
        self.induced_subgraph(&verts)
    }

    /// Relabels the graph: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return param("relabeling has the wrong length");
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// Whether the subgraph induced by `mask` is connected. The empty set
    /// counts as connected.
    pub fn is_connected_within(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = 1u64 << mask.trailing_zeros();
        let mut reached = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= mask & !reached;
            reached |= next;
            frontier = next;
        }
        reached == mask
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(full_mask(self.n))
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut left = full_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let start = 1u64 << left.trailing_zeros();
            let mut reached = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0u64;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                next &= !reached;
                reached |= next;
                frontier = next;
            }
            out.push(reached);
            left &= !reached;
        }
        out
    }

    /// Cut vertices of a connected graph (empty if disconnected, matching the
    /// definition that a cut vertex needs a connected host).
    pub fn cut_vertices(&self) -> Vec<usize> {
        if !self.is_connected() {
            return Vec::new();
        }
        let full = full_mask(self.n);
        (0..self.n)
            .filter(|&v| !self.is_connected_within(full & !(1u64 << v)))
            .collect()
    }

    /// Biconnectivity with the cut-vertex list. Connected graphs on at most
    /// two vertices count as biconnected.
    pub fn is_biconnected(&self) -> (bool, Vec<usize>) {
        if !self.is_connected() {
            return (false, Vec::new());
        }
        let cuts = self.cut_vertices();
        (cuts.is_empty(), cuts)
    }

    /// A 2-coloring `(A, B)` if the graph is bipartite. In each component the
    /// smallest vertex goes to `A`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        let a = (0..self.n).filter(|&v| color[v] == 0).collect();
        let b = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Whether `mask` is a bipartition side: every edge has exactly one end in it.
    pub fn is_bipartition_side(&self, mask: u64) -> bool {
        self.edges()
            .iter()
            .all(|&(u, v)| ((mask >> u) ^ (mask >> v)) & 1 == 1)
    }

    fn closed_neighborhood(&self, v: usize) -> u64 {
        self.adj[v] | (1u64 << v)
    }

    pub fn is_dominating(&self, mask: u64) -> bool {
        let mut covered = 0u64;
        for v in bits(mask) {
            covered |= self.closed_neighborhood(v);
        }
        covered == full_mask(self.n)
    }

    /// A minimum dominating set, found by subset search in increasing size.
    pub fn minimum_dominating_set(&self) -> Vec<usize> {
        for t in 0..=self.n {
            if let Some(m) = k_subsets(self.n, t).find(|&m| self.is_dominating(m)) {
                return bits(m).collect();
            }
        }
        unreachable!("the full vertex set dominates")
    }

    pub fn domination_number(&self) -> usize {
        self.minimum_dominating_set().len()
    }

    /// True iff no dominating set has fewer than `t` vertices.
    pub fn domination_at_least(&self, t: usize) -> bool {
        (0..t.min(self.n + 1)).all(|s| !k_subsets(self.n, s).any(|m| self.is_dominating(m)))
    }

    pub fn has_triangle(&self) -> bool {
        self.edges()
            .iter()
            .any(|&(u, v)| self.adj[u] & self.adj[v] != 0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Degree sequence, non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Every `k`-vertex induced subgraph is connected.
    pub fn all_k_subsets_connected(&self, k: usize) -> Result<bool> {
        if k == 0 || k > self.n {
            return param(format!("subset size {k} outside 1..{}", self.n));
        }
        Ok(k_subsets(self.n, k).all(|m| self.is_connected_within(m)))
    }

    /// First `k`-subset, in lexicographic order, inducing a disconnected graph.
    pub fn first_disconnected_k_subset(&self, k: usize) -> Option<Vec<usize>> {
        (0..self.n)
            .combinations(k)
            .find(|c| !self.is_connected_within(mask_of(c)))
    }

    /// Whether the graph is 2-regular and connected, i.e. a cycle.
    pub fn is_cycle_graph(&self) -> bool {
        self.n >= 3 && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    /// Whether the graph is a tree.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Searches for a (not necessarily induced) subgraph isomorphic to the
    /// spider with the given leg lengths. Returns the center and the legs
    /// (each listed outward from the center) when found.
    pub fn find_spider_subgraph(&self, legs: &[usize]) -> Option<(usize, Vec<Vec<usize>>)> {
        if legs.contains(&0) {
            return None;
        }
        let mut sorted = legs.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let need: usize = sorted.iter().sum::<usize>() + 1;
        if need > self.n {
            return None;
        }
        for c in 0..self.n {
            if self.degree(c) < sorted.len() {
                continue;
            }
            let mut found = Vec::with_capacity(sorted.len());
            if self.extend_legs(c, &sorted, 1u64 << c, &mut found) {
                return Some((c, found));
            }
        }
        None
    }

    fn extend_legs(&self, c: usize, legs: &[usize], used: u64, found: &mut Vec<Vec<usize>>) -> bool {
        let Some((&len, rest)) = legs.split_first() else {
            return true;
        };
        let mut path = Vec::with_capacity(len);
        for first in bits(self.adj[c] & !used) {
            path.clear();
            path.push(first);
            if self.extend_path(&mut path, len, used | (1u64 << first), c, rest, found) {
                return true;
            }
        }
        false
    }

    fn extend_path(
        &self,
        path: &mut Vec<usize>,
        len: usize,
        used: u64,
        c: usize,
        rest: &[usize],
        found: &mut Vec<Vec<usize>>,
    ) -> bool {
        if path.len() == len {
            found.push(path.clone());
            if self.extend_legs(c, rest, used, found) {
                return true;
            }
            found.pop();
            return false;
        }
        let last = *path.last().expect("path is nonempty");
        for next in bits(self.adj[last] & !used) {
            path.push(next);
            if self.extend_path(path, len, used | (1u64 << next), c, rest, found) {
                return true;
            }
            path.pop();
        }
        false
    }

    pub fn contains_spider_subgraph(&self, legs: &[usize]) -> bool {
        self.find_spider_subgraph(legs).is_some()
    }

    /// Adds a new vertex `n` joined to `attach` (the pendant extension).
    pub fn with_pendant(&self, attach: usize) -> Result<Graph> {
        if attach >= self.n {
            return param(format!("attachment vertex {} outside 1..{}", attach + 1, self.n));
        }
        let mut adj = self.adj.clone();
        adj.push(0);
        let mut g = Graph::from_adjacency(adj)?;
        g.add_edge(attach, self.n)?;
        Ok(g)
    }

    /// Disjoint union, with `other`'s vertices shifted past this graph's.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    /// Whether two graphs are isomorphic (exhaustive canonical form, `n <= 8`).
    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        if self.degree_sequence() != other.degree_sequence() {
            return Ok(false);
        }
        Ok(crate::enumerate::canonical_form(self)? == crate::enumerate::canonical_form(other)?)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", u + 1, v + 1)?;
        }
        write!(f, "])")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Named graph families with their fixed labelings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    /// Center is vertex 1, leaves 2..=n.
    Star(usize),
    Complete(usize),
    Empty(usize),
    /// Center is vertex 1; legs are laid out consecutively in the given order,
    /// each leg starting next to the center.
    Spider(Vec<usize>),
    /// Spider with `k-1` legs of length 1 and one leg of length `n-k`
    /// (the long leg comes first).
    Dandelion { k: usize, n: usize },
    /// Vertex set `[n]`, edges `{1,n-1}`, `{1,n}` and `{i,i+1}` for `i` in `[n-2]`.
    Fruit(usize),
    /// Hubs 1 and 2 joined by the paths 1-3-4-2, 1-5-6-2 and 1-7-2.
    Theta0,
    Complement(Box<FamilySpec>),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let check_n = |n: usize, min: usize, name: &str| {
            if n < min {
                param(format!("{name} requires n >= {min}, got {n}"))
            } else if n > MAX_VERTICES {
                param(format!("{name} requires n <= {MAX_VERTICES}, got {n}"))
            } else {
                Ok(())
            }
        };
        match self {
            FamilySpec::Path(n) => check_n(*n, 1, "path"),
            FamilySpec::Cycle(n) => check_n(*n, 3, "cycle"),
            FamilySpec::Star(n) => check_n(*n, 1, "star"),
            FamilySpec::Complete(n) => check_n(*n, 1, "complete"),
            FamilySpec::Empty(n) => check_n(*n, 1, "empty"),
            FamilySpec::Spider(legs) => {
                if legs.is_empty() {
                    return param("spider requires at least one leg");
                }
                if legs.contains(&0) {
                    return param("spider leg lengths must be positive");
                }
                check_n(legs.iter().sum::<usize>() + 1, 2, "spider")
            }
            FamilySpec::Dandelion { k, n } => {
                if *k < 2 {
                    return param(format!("dandelion requires k >= 2, got k = {k}"));
                }
                if n < k {
                    return param(format!("dandelion requires n >= k, got k = {k}, n = {n}"));
                }
                check_n(*n, 2, "dandelion")
            }
            FamilySpec::Fruit(n) => check_n(*n, 4, "fruit graph"),
            FamilySpec::Theta0 => Ok(()),
            FamilySpec::Complement(inner) => inner.validate(),
        }
    }

    /// Vertex count of the generated graph.
    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Star(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Empty(n)
            | FamilySpec::Fruit(n)
            | FamilySpec::Dandelion { n, .. } => *n,
            FamilySpec::Spider(legs) => legs.iter().sum::<usize>() + 1,
            FamilySpec::Theta0 => 7,
            FamilySpec::Complement(inner) => inner.vertex_count(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::Spider(legs) => write!(f, "spider:{}", join(legs)),
            FamilySpec::Dandelion { k, n } => write!(f, "dand:{k},{n}"),
            FamilySpec::Fruit(n) => write!(f, "fruit:{n}"),
            FamilySpec::Theta0 => write!(f, "theta0"),
            FamilySpec::Complement(inner) => write!(f, "co({inner})"),
        }
    }
}

impl std::str::FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |why: &str| Error::Parse(format!("bad family spec {s:?}: {why}"));
        if let Some(inner) = s.strip_prefix("co(").and_then(|r| r.strip_suffix(')')) {
            return Ok(FamilySpec::Complement(Box::new(inner.parse()?)));
        }
        if s == "theta0" {
            return Ok(FamilySpec::Theta0);
        }
        let (kind, args) = s.split_once(':').ok_or_else(|| bad("expected kind:args"))?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("arguments must be non-negative integers"))?;
        let one = || -> Result<usize> {
            match nums.as_slice() {
                [n] => Ok(*n),
                _ => Err(bad("expected exactly one argument")),
            }
        };
        let spec = match kind {
            "path" => FamilySpec::Path(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "star" => FamilySpec::Star(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "empty" => FamilySpec::Empty(one()?),
            "fruit" => FamilySpec::Fruit(one()?),
            "spider" => FamilySpec::Spider(nums.clone()),
            "dand" => match nums.as_slice() {
                [k, n] => FamilySpec::Dandelion { k: *k, n: *n },
                _ => return Err(bad("dandelion takes k,n")),
            },
            _ => return Err(bad("unknown family")),
        };
        Ok(spec)
    }
}

/// Builds the graph of a family spec with its documented labeling.
pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match spec {
        FamilySpec::Path(n) => Graph::from_edges(*n, &(1..*n).map(|i| (i - 1, i)).collect::<Vec<_>>()),
        FamilySpec::Cycle(n) => {
            let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(*n, &edges)
        }
        FamilySpec::Star(n) => Graph::from_edges(*n, &(1..*n).map(|i| (0, i)).collect::<Vec<_>>()),
        FamilySpec::Complete(n) => Graph::complete(*n),
        FamilySpec::Empty(n) => Graph::empty(*n),
        FamilySpec::Spider(legs) => spider(legs),
        FamilySpec::Dandelion { k, n } => {
            let mut legs = Vec::with_capacity(*k);
            if n > k {
                legs.push(n - k);
            }
            legs.extend(std::iter::repeat_n(1, k - 1));
            spider(&legs)
        }
        FamilySpec::Fruit(n) => {
            let n = *n;
            // 1-based: {1,n-1}, {1,n}, {i,i+1} for i in [n-2]
            let mut edges = vec![(0, n - 2), (0, n - 1)];
            edges.extend((0..n - 2).map(|i| (i, i + 1)).filter(|&(_, b)| b < n - 1));
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Theta0 => Graph::from_edges(
            7,
            &[(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 1)],
        ),
        FamilySpec::Complement(inner) => Ok(make_family(inner)?.complement()),
    }
}

fn spider(legs: &[usize]) -> Result<Graph> {
    let n = legs.iter().sum::<usize>() + 1;
    let mut g = Graph::empty(n)?;
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            g.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> Graph {
        make_family(&s.parse().unwrap()).unwrap()
    }

    fn one_based(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect()
    }

    #[test]
    fn fruit_edges_match_labeling() {
        let mut want = vec![(1, 4), (1, 5), (1, 2), (2, 3), (3, 4)];
        want.sort();
        assert_eq!(one_based(&fam("fruit:5")), want);
    }

    #[test]
    fn theta0_shape() {
        let t = fam("theta0");
        assert_eq!(t.n(), 7);
        assert_eq!(t.edge_count(), 8);
        assert_eq!(t.degree_sequence(), vec![3, 3, 2, 2, 2, 2, 2]);
        assert!(t.is_biconnected().0);
        // hub-to-hub path lengths 3, 3, 2 close a 5-cycle
        assert!(t.bipartition().is_none());
    }

    #[test]
    fn theta0_minus_hub_is_a_tree() {
        let t = fam("theta0");
        let sub = t.induced_subgraph(&[1, 2, 3, 4, 5, 6]).unwrap().graph;
        assert!(sub.is_connected());
        assert!(sub.is_tree());
    }

    #[test]
    fn dandelion_two_is_a_path() {
        let d = fam("dand:2,5");
        assert!(d.is_isomorphic(&fam("path:5")).unwrap());
    }

    #[test]
    fn family_parameter_errors() {
        for bad in ["cycle:2", "fruit:3", "dand:1,4", "dand:5,4", "spider:2,0"] {
            let spec: FamilySpec = bad.parse().unwrap();
            assert!(matches!(make_family(&spec), Err(Error::Parameter(_))), "{bad}");
        }
        assert!(matches!("blob:3".parse::<FamilySpec>(), Err(Error::Parse(_))));
    }

    #[test]
    fn spec_round_trips_through_display() {
        for s in ["path:5", "cycle:8", "star:7", "spider:3,2,2", "dand:3,8", "fruit:7", "theta0", "co(co(cycle:6))"] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn complement_cases() {
        assert_eq!(fam("complete:4").complement().edge_count(), 0);
        let c6 = fam("cycle:6");
        assert_eq!(c6.complement().complement(), c6);
        assert!(fam("cycle:5").complement().is_isomorphic(&fam("cycle:5")).unwrap());
        assert_eq!(fam("co(cycle:9)").min_degree(), 6);
    }

    #[test]
    fn induced_subgraphs() {
        let p = fam("path:5").induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p.graph, fam("path:3"));
        let e = fam("cycle:6").induced_subgraph(&[0, 2, 4]).unwrap();
        assert_eq!(e.graph.edge_count(), 0);
        assert_eq!(e.mapping, vec![0, 2, 4]);
        assert!(fam("path:3").induced_subgraph(&[]).is_err());
        assert!(fam("path:3").induced_subgraph(&[3]).is_err());
    }

    #[test]
    fn biconnectivity() {
        let (ok, cuts) = fam("path:4").is_biconnected();
        assert!(!ok);
        assert_eq!(cuts, vec![1, 2]);
        assert!(fam("cycle:5").is_biconnected().0);
        assert!(fam("path:2").is_biconnected().0);
        assert!(!Graph::empty(2).unwrap().is_biconnected().0);
    }

    #[test]
    fn bipartitions() {
        let (a, b) = fam("cycle:6").bipartition().unwrap();
        assert_eq!(a, vec![0, 2, 4]);
        assert_eq!(b, vec![1, 3, 5]);
        assert!(fam("cycle:5").bipartition().is_none());
    }

    #[test]
    fn domination() {
        assert_eq!(fam("star:8").domination_number(), 1);
        assert_eq!(fam("cycle:6").domination_number(), 2);
        assert_eq!(fam("dand:3,8").domination_number(), 3);
        assert!(fam("dand:3,8").domination_at_least(3));
        assert!(!fam("dand:3,8").domination_at_least(4));
    }

    #[test]
    fn triangles_and_degrees() {
        assert!(fam("complete:3").has_triangle());
        assert!(!fam("dand:3,8").has_triangle());
        for n in 4..10 {
            assert_eq!(fam(&format!("co(cycle:{n})")).min_degree(), n - 3);
        }
    }

    #[test]
    fn k_subset_connectivity() {
        assert!(fam("complete:5").all_k_subsets_connected(3).unwrap());
        assert!(!fam("path:5").all_k_subsets_connected(2).unwrap());
        assert!(fam("co(cycle:7)").all_k_subsets_connected(4).unwrap());
        assert!(!fam("co(cycle:7)").all_k_subsets_connected(3).unwrap());
        assert!(fam("path:3").all_k_subsets_connected(0).is_err());
    }

    #[test]
    fn k_subsets_enumerates_binomial() {
        assert_eq!(k_subsets(6, 3).count(), 20);
        assert_eq!(k_subsets(5, 0).count(), 1);
        assert_eq!(k_subsets(5, 5).count(), 1);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert!(k_subsets(7, 3).all(|m| m.count_ones() == 3 && m < 128));
    }

    #[test]
    fn spider_subgraphs() {
        assert!(fam("star:9").contains_spider_subgraph(&[1, 1, 1, 1, 1, 1]));
        assert!(!fam("cycle:8").contains_spider_subgraph(&[1, 1, 1]));
        let (center, legs) = fam("theta0").find_spider_subgraph(&[2, 2, 1]).unwrap();
        assert!(center <= 1);
        assert_eq!(legs.iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 2, 1]);
        assert!(fam("spider:4,3,1").contains_spider_subgraph(&[4, 3, 1]));
        assert!(!fam("spider:4,3,1").contains_spider_subgraph(&[4, 2, 2]));
    }

    #[test]
    fn pendant_extension() {
        let g = fam("star:4").with_pendant(1).unwrap();
        assert_eq!(g.n(), 5);
        assert!(g.has_edge(1, 4));
        assert!(g.is_isomorphic(&fam("spider:2,1,1")).unwrap());
    }
}
