//! The friends-and-strangers graph `FS(X, Y)`, built implicitly over all
//! `n!` arrangements.
//!
//! An arrangement `σ` places person `σ(c)` in chair `c`. Chairs are the
//! vertices of `X`, people the vertices of `Y`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::enumerate::canonical_form;
use crate::error::{param, Error, Result};
use crate::graph::{make_family, FamilySpec, Graph};
use crate::perm::{factorial, next_permutation, rank_of, unrank_into, Permutation};

/// Default census budget: `10!` arrangements.
pub const DEFAULT_BUDGET: u64 = 3_628_800;

/// Unordered pair of people exchanged by a friendly swap.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeLabel {
    lo: usize,
    hi: usize,
}

impl EdgeLabel {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return param(format!("edge label needs two distinct people, got {}{}", a + 1, b + 1));
        }
        Ok(EdgeLabel { lo: a.min(b), hi: a.max(b) })
    }

    #[inline]
    pub fn lo(self) -> usize {
        self.lo
    }

    #[inline]
    pub fn hi(self) -> usize {
        self.hi
    }

    #[inline]
    pub fn contains(self, p: usize) -> bool {
        self.lo == p || self.hi == p
    }

    #[inline]
    pub fn is_disjoint(self, other: EdgeLabel) -> bool {
        !self.contains(other.lo) && !self.contains(other.hi)
    }

    /// The person shared with `other`, if exactly one is shared.
    pub fn common(self, other: EdgeLabel) -> Option<usize> {
        if self == other {
            return None;
        }
        if other.contains(self.lo) {
            Some(self.lo)
        } else if other.contains(self.hi) {
            Some(self.hi)
        } else {
            None
        }
    }

    /// The partner of `p` in this label.
    pub fn other(self, p: usize) -> Option<usize> {
        if p == self.lo {
            Some(self.hi)
        } else if p == self.hi {
            Some(self.lo)
        } else {
            None
        }
    }

    #[inline]
    pub fn mask(self) -> u64 {
        (1u64 << self.lo) | (1u64 << self.hi)
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.hi < 9 {
            write!(f, "{}{}", self.lo + 1, self.hi + 1)
        } else {
            write!(f, "{}-{}", self.lo + 1, self.hi + 1)
        }
    }
}

impl fmt::Debug for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for EdgeLabel {
    type Err = Error;

    /// Accepts `"12"` (single digits) or `"3-11"`, 1-based.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad edge label {s:?}"));
        let (a, b) = match s.split_once('-') {
            Some((a, b)) => (a.trim(), b.trim()),
            None if s.len() == 2 && s.is_char_boundary(1) => (&s[..1], &s[1..]),
            None => return Err(bad()),
        };
        let a: usize = a.parse().map_err(|_| bad())?;
        let b: usize = b.parse().map_err(|_| bad())?;
        if a == 0 || b == 0 {
            return Err(bad());
        }
        EdgeLabel::new(a - 1, b - 1).map_err(|_| bad())
    }
}

impl Serialize for EdgeLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lo + 1, self.hi + 1].serialize(s)
    }
}

impl<'de> Deserialize<'de> for EdgeLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[usize; 2]>::deserialize(d)?;
        if a == 0 || b == 0 {
            return Err(serde::de::Error::custom("edge labels are 1-based"));
        }
        EdgeLabel::new(a - 1, b - 1).map_err(serde::de::Error::custom)
    }
}

fn same_size(x: &Graph, y: &Graph) -> Result<usize> {
    if x.n() != y.n() {
        return param(format!(
            "FS(X, Y) needs |V(X)| = |V(Y)|, got {} and {}",
            x.n(),
            y.n()
        ));
    }
    Ok(x.n())
}

/// Number of arrangements, or a capability error when it exceeds `budget`.
pub fn check_budget(n: usize, budget: u64) -> Result<u64> {
    match factorial(n) {
        Some(total) if total <= budget && total <= u32::MAX as u64 => Ok(total),
        other => {
            let need = other.map(|t| t.saturating_mul(4));
            let need = match need {
                Some(bytes) => format!("about {} MiB", bytes.div_ceil(1 << 20)),
                None => "more than 2^64 bytes".to_string(),
            };
            Err(Error::Capability(format!(
                "FS census on n = {n} needs {n}! arrangements ({need} of union-find state), \
                 over the budget of {budget}"
            )))
        }
    }
}

/// Friendly swaps from `sigma`: one entry per `X`-edge `{a, b}` whose
/// occupants are adjacent in `Y`, sorted by `X`-edge.
pub fn fs_neighbors(x: &Graph, y: &Graph, sigma: &Permutation) -> Result<Vec<(Permutation, EdgeLabel)>> {
    let n = same_size(x, y)?;
    if sigma.n() != n {
        return param(format!("arrangement has {} entries, expected {n}", sigma.n()));
    }
    let mut out = Vec::new();
    for (a, b) in x.edges() {
        let (p, q) = (sigma.get(a), sigma.get(b));
        if y.has_edge(p, q) {
            out.push((sigma.swap_positions(a, b), EdgeLabel::new(p, q)?));
        }
    }
    Ok(out)
}

/// Component count, sizes and minimum-rank representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCensus {
    pub count: usize,
    /// Sizes aligned with `reps`.
    pub sizes: Vec<u64>,
    /// Minimum-rank arrangement of each component, in increasing rank.
    pub reps: Vec<Permutation>,
}

impl ComponentCensus {
    /// Sizes sorted in decreasing order.
    pub fn size_multiset(&self) -> Vec<u64> {
        let mut s = self.sizes.clone();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        UnionFind { parent: (0..len as u32).collect() }
    }

    #[inline]
    fn find(&mut self, mut v: u32) -> u32 {
        while self.parent[v as usize] != v {
            let gp = self.parent[self.parent[v as usize] as usize];
            self.parent[v as usize] = gp;
            v = gp;
        }
        v
    }

    // The smaller root wins, so every root is its component's minimum.
    #[inline]
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.parent[rb as usize] = ra;
        } else if rb < ra {
            self.parent[ra as usize] = rb;
        }
    }
}

/// Root (minimum rank in the component) for every rank `0..n!`.
fn component_roots(x: &Graph, y: &Graph, budget: u64) -> Result<Vec<u32>> {
    let n = same_size(x, y)?;
    let total = check_budget(n, budget)? as usize;
    let mut uf = UnionFind::new(total);
    let chair_edges = x.edges();
    let mut p: Vec<u8> = (0..n as u8).collect();
    let mut r: u32 = 0;
    loop {
        for &(a, b) in &chair_edges {
            let (u, v) = (p[a], p[b]);
            // Only look forward: swapping an ascending pair raises the rank.
            if u < v && y.has_edge(u as usize, v as usize) {
                p.swap(a, b);
                let s = rank_of(&p) as u32;
                p.swap(a, b);
                uf.union(r, s);
            }
        }
        r += 1;
        if !next_permutation(&mut p) {
            break;
        }
    }
    for v in 0..total as u32 {
        let root = uf.find(v);
        uf.parent[v as usize] = root;
    }
    Ok(uf.parent)
}

pub fn fs_components(x: &Graph, y: &Graph) -> Result<ComponentCensus> {
    fs_components_with_budget(x, y, DEFAULT_BUDGET)
}

/// Exact census by union-find over Lehmer ranks.
pub fn fs_components_with_budget(x: &Graph, y: &Graph, budget: u64) -> Result<ComponentCensus> {
    let n = x.n();
    let roots = component_roots(x, y, budget)?;
    let mut size_of_root = vec![0u64; roots.len()];
    for &r in &roots {
        size_of_root[r as usize] += 1;
    }
    let mut sizes = Vec::new();
    let mut reps = Vec::new();
    for (r, &root) in roots.iter().enumerate() {
        if root as usize == r {
            sizes.push(size_of_root[r]);
            reps.push(Permutation::unrank(n, r as u64)?);
        }
    }
    Ok(ComponentCensus { count: reps.len(), sizes, reps })
}

pub fn fs_is_connected(x: &Graph, y: &Graph) -> Result<bool> {
    fs_is_connected_with_budget(x, y, DEFAULT_BUDGET)
}

pub fn fs_is_connected_with_budget(x: &Graph, y: &Graph, budget: u64) -> Result<bool> {
    let n = same_size(x, y)?;
    check_budget(n, budget)?;
    // A disconnected X or Y with an isolated person short-circuits nothing
    // useful in general, so always run the census.
    Ok(fs_components_with_budget(x, y, budget)?.count == 1)
}

/// Wilson's classification of `FS(Star_n, Y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum StarPrediction {
    NotBiconnected,
    /// `Y` is the exceptional theta graph: six components.
    ThetaSix,
    /// `Y` is a cycle: components are the `(n-2)!` cyclic orders of the leaves.
    CyclicOrders { count: u64, size: u64 },
    /// `Y` is bipartite (and not a cycle): two components of `n!/2`.
    TwoHalves,
    Connected,
}

impl StarPrediction {
    /// Predicted `(count, sizes)`, when the classification determines them.
    pub fn predicted_shape(&self, n: usize) -> Option<(usize, Vec<u64>)> {
        let total = factorial(n)?;
        match self {
            StarPrediction::NotBiconnected => None,
            StarPrediction::ThetaSix => Some((6, vec![total / 6; 6])),
            StarPrediction::CyclicOrders { count, size } => Some((*count as usize, vec![*size; *count as usize])),
            StarPrediction::TwoHalves => Some((2, vec![total / 2; 2])),
            StarPrediction::Connected => Some((1, vec![total])),
        }
    }
}

/// Whether `y` is isomorphic to the theta graph `θ0`.
pub fn is_theta0(y: &Graph) -> Result<bool> {
    if y.n() != 7 || y.edge_count() != 8 {
        return Ok(false);
    }
    let theta = make_family(&FamilySpec::Theta0)?;
    Ok(canonical_form(y)? == canonical_form(&theta)?)
}

/// Predicts the component structure of `FS(Star_n, y)` without a census.
pub fn star_components_predicted(y: &Graph) -> Result<StarPrediction> {
    let n = y.n();
    if n < 3 {
        return param(format!("star prediction needs n >= 3, got {n}"));
    }
    if !y.is_biconnected().0 {
        return Ok(StarPrediction::NotBiconnected);
    }
    if is_theta0(y)? {
        return Ok(StarPrediction::ThetaSix);
    }
    if y.is_cycle_graph() {
        let count = factorial(n - 2).ok_or_else(|| Error::Capability("n too large".into()))?;
        return Ok(StarPrediction::CyclicOrders { count, size: (n * (n - 1)) as u64 });
    }
    if y.is_bipartite() {
        return Ok(StarPrediction::TwoHalves);
    }
    Ok(StarPrediction::Connected)
}

/// The parity invariant `p(σ) = |σ(A_X) ∩ A_Y| + (sgn σ + 1)/2 (mod 2)` for
/// bipartite `x` and `y` with chosen sides `a_x`, `a_y`.
pub fn bipartite_parity(x: &Graph, y: &Graph, a_x: &[usize], a_y: &[usize], sigma: &Permutation) -> Result<u8> {
    let n = same_size(x, y)?;
    if sigma.n() != n {
        return param(format!("arrangement has {} entries, expected {n}", sigma.n()));
    }
    let to_mask = |side: &[usize], name: &str| -> Result<u64> {
        let mut m = 0u64;
        for &v in side {
            if v >= n {
                return param(format!("{name} contains vertex {} outside 1..{n}", v + 1));
            }
            m |= 1 << v;
        }
        Ok(m)
    };
    let mx = to_mask(a_x, "A_X")?;
    let my = to_mask(a_y, "A_Y")?;
    if !x.is_bipartition_side(mx) {
        return param("A_X is not a side of a bipartition of X");
    }
    if !y.is_bipartition_side(my) {
        return param("A_Y is not a side of a bipartition of Y");
    }
    let hits = (0..n).filter(|&c| mx >> c & 1 == 1 && my >> sigma.get(c) & 1 == 1).count();
    let sign_term = if sigma.sign() == 1 { 1 } else { 0 };
    Ok(((hits + sign_term) % 2) as u8)
}

/// An edge of an explicit component; `u < v` index into `vertices`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FsEdge {
    pub u: usize,
    pub v: usize,
    pub label: EdgeLabel,
    /// Index into `chair_edges` of the `X`-edge whose occupants swapped.
    pub chair_edge: usize,
}

/// A connected component of `FS(X, Y)` with stable vertex and edge indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitComponent {
    pub n: usize,
    /// Edges of `X`, sorted; `FsEdge::chair_edge` indexes this list.
    pub chair_edges: Vec<(usize, usize)>,
    /// Vertices sorted by rank.
    pub vertices: Vec<Permutation>,
    pub ranks: Vec<u64>,
    /// Sorted by `(u, v)`, i.e. by (lower rank, higher rank).
    pub edges: Vec<FsEdge>,
    /// Per vertex: `(neighbor, edge index)` sorted by neighbor.
    pub adjacency: Vec<Vec<(usize, usize)>>,
}

impl ExplicitComponent {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Index of the vertex with the given rank.
    pub fn index_of_rank(&self, rank: u64) -> Option<usize> {
        self.ranks.binary_search(&rank).ok()
    }

    pub fn index_of(&self, sigma: &Permutation) -> Option<usize> {
        self.index_of_rank(sigma.rank().ok()?)
    }

    /// Index of the edge joining vertices `a` and `b`.
    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        let row = &self.adjacency[a];
        row.binary_search_by_key(&b, |&(nb, _)| nb).ok().map(|i| row[i].1)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertices.len()
    }
}

fn build_component(x: &Graph, y: &Graph, mut ranks: Vec<u64>) -> Result<ExplicitComponent> {
    let n = x.n();
    ranks.sort_unstable();
    let chair_edges = x.edges();
    let mut vertices = Vec::with_capacity(ranks.len());
    let mut p = vec![0u8; n];
    let mut edges = Vec::new();
    for (i, &r) in ranks.iter().enumerate() {
        unrank_into(r, &mut p);
        vertices.push(Permutation::new(p.iter().map(|&v| v as usize).collect())?);
        let mut found: Vec<FsEdge> = Vec::new();
        for (ce, &(a, b)) in chair_edges.iter().enumerate() {
            let (u, v) = (p[a], p[b]);
            if u < v && y.has_edge(u as usize, v as usize) {
                p.swap(a, b);
                let s = rank_of(&p);
                p.swap(a, b);
                let j = ranks.binary_search(&s).map_err(|_| {
                    Error::Internal(format!("component not closed: rank {s} missing"))
                })?;
                found.push(FsEdge { u: i, v: j, label: EdgeLabel::new(u as usize, v as usize)?, chair_edge: ce });
            }
        }
        found.sort_by_key(|e| e.v);
        edges.extend(found);
    }
    let mut adjacency = vec![Vec::new(); ranks.len()];
    for (idx, e) in edges.iter().enumerate() {
        adjacency[e.u].push((e.v, idx));
        adjacency[e.v].push((e.u, idx));
    }
    for row in &mut adjacency {
        row.sort_unstable();
    }
    Ok(ExplicitComponent { n, chair_edges, vertices, ranks, edges, adjacency })
}

/// Breadth-first closure of `sigma` in `FS(x, y)`.
pub fn fs_component_of(x: &Graph, y: &Graph, sigma: &Permutation) -> Result<ExplicitComponent> {
    fs_component_of_with_budget(x, y, sigma, DEFAULT_BUDGET)
}

pub fn fs_component_of_with_budget(
    x: &Graph,
    y: &Graph,
    sigma: &Permutation,
    budget: u64,
) -> Result<ExplicitComponent> {
    let n = same_size(x, y)?;
    if sigma.n() != n {
        return param(format!("arrangement has {} entries, expected {n}", sigma.n()));
    }
    check_budget(n, budget)?;
    let chair_edges = x.edges();
    let start = sigma.rank()?;
    let mut seen = std::collections::HashSet::from([start]);
    let mut queue = std::collections::VecDeque::from([start]);
    let mut p = vec![0u8; n];
    while let Some(r) = queue.pop_front() {
        unrank_into(r, &mut p);
        for &(a, b) in &chair_edges {
            if y.has_edge(p[a] as usize, p[b] as usize) {
                p.swap(a, b);
                let s = rank_of(&p);
                p.swap(a, b);
                if seen.insert(s) {
                    queue.push_back(s);
                }
            }
        }
    }
    build_component(x, y, seen.into_iter().collect())
}

/// Every component of `FS(x, y)`, ordered by representative rank.
pub fn all_components(x: &Graph, y: &Graph, budget: u64) -> Result<Vec<ExplicitComponent>> {
    let roots = component_roots(x, y, budget)?;
    let mut groups: std::collections::BTreeMap<u32, Vec<u64>> = std::collections::BTreeMap::new();
    for (r, &root) in roots.iter().enumerate() {
        groups.entry(root).or_default().push(r as u64);
    }
    drop(roots);
    groups.into_values().map(|ranks| build_component(x, y, ranks)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fam(s: &str) -> Graph {
        make_family(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn label_parse_and_display() {
        let l: EdgeLabel = "21".parse().unwrap();
        assert_eq!((l.lo(), l.hi()), (0, 1));
        assert_eq!(l.to_string(), "12");
        let big: EdgeLabel = "3-11".parse().unwrap();
        assert_eq!(big.to_string(), "3-11");
        assert!("11".parse::<EdgeLabel>().is_err());
        assert!("1".parse::<EdgeLabel>().is_err());
        assert_eq!(serde_json::to_string(&l).unwrap(), "[1,2]");
    }

    #[test]
    fn neighbor_examples() {
        let k3 = fam("complete:3");
        assert_eq!(fs_neighbors(&k3, &k3, &Permutation::identity(3)).unwrap().len(), 3);
        let e3 = fam("empty:3");
        assert!(fs_neighbors(&fam("path:3"), &e3, &Permutation::identity(3)).unwrap().is_empty());
        for n in 4..9 {
            let f = fam(&format!("fruit:{n}"));
            let id = Permutation::identity(n);
            assert!(fs_neighbors(&f, &f.complement(), &id).unwrap().is_empty(), "n = {n}");
        }
        assert!(matches!(
            fs_neighbors(&fam("path:3"), &fam("path:4"), &Permutation::identity(3)),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn census_small_cases() {
        let c = fs_components(&fam("star:5"), &fam("complete:5")).unwrap();
        assert_eq!(c.count, 1);
        assert_eq!(c.sizes, vec![120]);
        assert!(!fs_is_connected(&fam("path:4"), &fam("cycle:4")).unwrap());
        let c = fs_components(&fam("path:3"), &fam("complete:3")).unwrap();
        assert_eq!(c.count, 1);
    }

    #[test]
    fn census_json_shape() {
        let c = fs_components(&fam("path:3"), &fam("path:3")).unwrap();
        let v: serde_json::Value = serde_json::to_value(&c).unwrap();
        assert_eq!(v["count"], c.count);
        assert_eq!(v["reps"][0], serde_json::json!([1, 2, 3]));
    }

    #[test]
    fn budget_is_enforced() {
        let err = fs_components_with_budget(&fam("path:6"), &fam("path:6"), 100).unwrap_err();
        match err {
            Error::Capability(msg) => assert!(msg.contains("MiB"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn star_dispatch() {
        assert_eq!(star_components_predicted(&fam("complete:4")).unwrap(), StarPrediction::Connected);
        assert_eq!(
            star_components_predicted(&fam("cycle:5")).unwrap(),
            StarPrediction::CyclicOrders { count: 6, size: 20 }
        );
        assert_eq!(star_components_predicted(&fam("theta0")).unwrap(), StarPrediction::ThetaSix);
        assert_eq!(star_components_predicted(&fam("path:4")).unwrap(), StarPrediction::NotBiconnected);
        assert_eq!(
            star_components_predicted(&fam("co(cycle:4)").complement()).unwrap(),
            StarPrediction::CyclicOrders { count: 2, size: 12 }
        );
        assert!(star_components_predicted(&fam("path:2")).is_err());
    }

    #[test]
    fn cycle_prediction_matches_census() {
        let c = fs_components(&fam("star:5"), &fam("cycle:5")).unwrap();
        assert_eq!(c.count, 6);
        assert!(c.sizes.iter().all(|&s| s == 20));
    }

    #[test]
    fn parity_identity_even_side() {
        let c4 = fam("cycle:4");
        let bit = bipartite_parity(&c4, &c4, &[0, 2], &[0, 2], &Permutation::identity(4)).unwrap();
        assert_eq!(bit, 1);
        assert!(bipartite_parity(&c4, &c4, &[0, 1], &[0, 2], &Permutation::identity(4)).is_err());
    }

    #[test]
    fn isolated_and_full_components() {
        let f = fam("fruit:6");
        let comp = fs_component_of(&f, &f.complement(), &Permutation::identity(6)).unwrap();
        assert_eq!(comp.vertex_count(), 1);
        assert_eq!(comp.edge_count(), 0);
        let k4 = fam("complete:4");
        let comp = fs_component_of(&fam("star:4"), &k4, &Permutation::new(vec![2, 0, 3, 1]).unwrap()).unwrap();
        assert_eq!(comp.vertex_count(), 24);
        assert_eq!(comp.edge_count(), 24 * 3 / 2);
    }

    #[test]
    fn explicit_components_partition_the_vertices() {
        let x = fam("cycle:5");
        let y = fam("dand:3,5");
        let census = fs_components(&x, &y).unwrap();
        let comps = all_components(&x, &y, DEFAULT_BUDGET).unwrap();
        assert_eq!(comps.len(), census.count);
        for (c, (&size, rep)) in comps.iter().zip(census.sizes.iter().zip(&census.reps)) {
            assert_eq!(c.vertex_count() as u64, size);
            assert_eq!(&c.vertices[0], rep);
            assert!(c.is_connected());
            assert!(c.edges.windows(2).all(|w| (w[0].u, w[0].v) < (w[1].u, w[1].v)));
            let via_bfs = fs_component_of(&x, &y, rep).unwrap();
            assert_eq!(&via_bfs, c);
        }
    }

    fn arb_pair(max_n: usize) -> impl Strategy<Value = (Graph, Graph)> {
        (3..=max_n).prop_flat_map(|n| {
            let m = n * (n - 1) / 2;
            (
                proptest::collection::vec(any::<bool>(), m),
                proptest::collection::vec(any::<bool>(), m),
            )
                .prop_map(move |(a, b)| (graph_from_bits(n, &a), graph_from_bits(n, &b)))
        })
    }

    fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if bits[k] {
                    g.add_edge(u, v).unwrap();
                }
                k += 1;
            }
        }
        g
    }

    /// Plain BFS over all arrangements, independent of the union-find.
    fn bfs_census(x: &Graph, y: &Graph) -> Vec<u64> {
        let n = x.n();
        let total = factorial(n).unwrap();
        let mut comp = vec![usize::MAX; total as usize];
        let mut sizes = Vec::new();
        for s in 0..total {
            if comp[s as usize] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            comp[s as usize] = id;
            let mut size = 0;
            let mut queue = vec![Permutation::unrank(n, s).unwrap()];
            while let Some(p) = queue.pop() {
                size += 1;
                for (q, _) in fs_neighbors(x, y, &p).unwrap() {
                    let r = q.rank().unwrap() as usize;
                    if comp[r] == usize::MAX {
                        comp[r] = id;
                        queue.push(q);
                    }
                }
            }
            sizes.push(size);
        }
        sizes
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn census_matches_bfs((x, y) in arb_pair(6)) {
            let c = fs_components(&x, &y).unwrap();
            prop_assert_eq!(c.sizes, bfs_census(&x, &y));
        }

        #[test]
        fn adjacency_is_symmetric((x, y) in arb_pair(6), r in any::<u64>()) {
            let n = x.n();
            let sigma = Permutation::unrank(n, r % factorial(n).unwrap()).unwrap();
            for (tau, label) in fs_neighbors(&x, &y, &sigma).unwrap() {
                let back = fs_neighbors(&x, &y, &tau).unwrap();
                prop_assert!(back.iter().any(|(s, l)| s == &sigma && *l == label));
            }
        }

        #[test]
        fn swapping_roles_inverts((x, y) in arb_pair(6)) {
            let a = fs_components(&x, &y).unwrap();
            let b = fs_components(&y, &x).unwrap();
            prop_assert_eq!(a.count, b.count);
            prop_assert_eq!(a.size_multiset(), b.size_multiset());
        }
    }
}
