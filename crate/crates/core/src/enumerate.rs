//! Canonical forms and exhaustive generation of small graphs up to isomorphism.
//!
//! The canonical code of a graph is its lexicographically smallest adjacency
//! string over all relabelings, where the upper triangle is read column by
//! column: `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`, first bit most
//! significant. Reading column-wise means the first `j + 1` labels fix the
//! first `j(j+1)/2` bits, so the minimum can be found level by level.

use std::collections::{HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Largest `n` handled by [`canonical_form`] and the generic enumerator.
pub const MAX_CANONICAL_N: usize = 8;

/// Canonical code plus the vertex count it belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    pub n: usize,
    pub code: u64,
}

fn capability(n: usize) -> Error {
    Error::Capability(format!(
        "generic canonical form supports n <= {MAX_CANONICAL_N}, got n = {n}; \
         use the dedicated generators (max-degree-2 complements, trees) for larger n"
    ))
}

/// Lexicographically minimal column-wise adjacency code over all relabelings.
pub fn canonical_form(g: &Graph) -> Result<CanonicalCode> {
    let n = g.n();
    if n > MAX_CANONICAL_N {
        return Err(capability(n));
    }
    if n <= 1 {
        return Ok(CanonicalCode { n, code: 0 });
    }
    // Each partial labeling is (order so far, used mask). All survivors share
    // the same (minimal) code prefix.
    let mut level: Vec<(Vec<usize>, u64)> = (0..n).map(|v| (vec![v], 1u64 << v)).collect();
    let mut code = 0u64;
    for j in 1..n {
        let mut best = u64::MAX;
        let mut next = Vec::new();
        for (order, used) in &level {
            for v in bits(!used & crate::graph::full_mask(n)) {
                let nb = g.neighbor_mask(v);
                let mut col = 0u64;
                for &u in order {
                    col = (col << 1) | (nb >> u & 1);
                }
                if col < best {
                    best = col;
                    next.clear();
                }
                if col == best {
                    let mut o = order.clone();
                    o.push(v);
                    next.push((o, used | (1u64 << v)));
                }
            }
        }
        code = (code << j) | best;
        level = next;
    }
    Ok(CanonicalCode { n, code })
}

/// Rebuilds the graph whose column-wise adjacency code is `code`.
pub fn graph_from_code(c: CanonicalCode) -> Graph {
    let n = c.n;
    let total = n * n.saturating_sub(1) / 2;
    let mut g = Graph::empty(n).expect("n <= 64");
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if c.code >> (total - 1 - pos) & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
            pos += 1;
        }
    }
    g
}

fn canonical_classes(n: usize) -> &'static [CanonicalCode] {
    static CACHE: OnceLock<Mutex<HashMap<usize, &'static [CanonicalCode]>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&found) = cache.lock().expect("cache lock").get(&n) {
        return found;
    }
    let built: Vec<CanonicalCode> = if n <= 1 {
        vec![CanonicalCode { n, code: 0 }]
    } else {
        let parents = canonical_classes(n - 1);
        let mut seen: HashSet<u64> = HashSet::new();
        for p in parents {
            let base = graph_from_code(*p);
            for attach in 0..(1u64 << (n - 1)) {
                let mut adj: Vec<u64> = (0..n - 1).map(|v| base.neighbor_mask(v) | (attach >> v & 1) << (n - 1)).collect();
                adj.push(attach);
                let g = Graph::from_adjacency(adj).expect("valid augmentation");
                seen.insert(canonical_form(&g).expect("n <= 8").code);
            }
        }
        let mut codes: Vec<u64> = seen.into_iter().collect();
        codes.sort_unstable();
        codes.into_iter().map(|code| CanonicalCode { n, code }).collect()
    };
    let leaked: &'static [CanonicalCode] = Box::leak(built.into_boxed_slice());
    cache.lock().expect("cache lock").entry(n).or_insert(leaked)
}

/// One representative per isomorphism class on `n` vertices (`n <= 8`),
/// ordered by canonical code, filtered by `filter`.
pub fn enumerate_small_graphs<F>(n: usize, filter: F) -> Result<Vec<Graph>>
where
    F: Fn(&Graph) -> bool,
{
    if n > MAX_CANONICAL_N {
        return Err(capability(n));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(canonical_classes(n)
        .iter()
        .map(|&c| graph_from_code(c))
        .filter(|g| filter(g))
        .collect())
}

/// Number of isomorphism classes on `n` vertices (`n <= 8`).
pub fn class_count(n: usize) -> Result<usize> {
    if n > MAX_CANONICAL_N {
        return Err(capability(n));
    }
    Ok(canonical_classes(n).len())
}

/// A component of a max-degree-2 graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Piece {
    /// Path on this many vertices (1 = isolated vertex).
    Path(usize),
    /// Cycle on this many vertices (at least 3).
    Cycle(usize),
}

impl Piece {
    fn size(self) -> usize {
        match self {
            Piece::Path(m) | Piece::Cycle(m) => m,
        }
    }
}

fn pieces_up_to(n: usize) -> Vec<Piece> {
    let mut all: Vec<Piece> = (1..=n).map(Piece::Path).collect();
    all.extend((3..=n).map(Piece::Cycle));
    all.sort();
    all
}

fn multisets(left: usize, pieces: &[Piece], from: usize, cur: &mut Vec<Piece>, out: &mut Vec<Vec<Piece>>) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    for idx in from..pieces.len() {
        let p = pieces[idx];
        if p.size() <= left {
            cur.push(p);
            multisets(left - p.size(), pieces, idx, cur, out);
            cur.pop();
        }
    }
}

fn assemble(n: usize, parts: &[Piece]) -> Graph {
    let mut g = Graph::empty(n).expect("n <= 64");
    let mut next = 0;
    for &p in parts {
        let m = p.size();
        for i in 0..m.saturating_sub(1) {
            g.add_edge(next + i, next + i + 1).expect("in range");
        }
        if let Piece::Cycle(_) = p {
            g.add_edge(next, next + m - 1).expect("in range");
        }
        next += m;
    }
    g
}

/// All graphs on `n` vertices with maximum degree at most 2, one per
/// isomorphism class: disjoint unions of paths and cycles.
pub fn max_degree_two_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return Err(Error::Parameter(format!("n must be in 1..=64, got {n}")));
    }
    let mut out = Vec::new();
    multisets(n, &pieces_up_to(n), 0, &mut Vec::new(), &mut out);
    Ok(out.iter().map(|parts| assemble(n, parts)).collect())
}

/// All graphs on `n` vertices with minimum degree at least `n - 3`, one per
/// isomorphism class (complements of [`max_degree_two_graphs`]).
pub fn min_degree_n_minus_3_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(max_degree_two_graphs(n)?.iter().map(Graph::complement).collect())
}

/// The connected members of [`min_degree_n_minus_3_graphs`].
pub fn connected_min_degree_n_minus_3_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(min_degree_n_minus_3_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}

/// AHU encoding of the tree `g` rooted at `root`.
fn rooted_code(g: &Graph, root: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = g
        .neighbors(root)
        .filter(|&c| Some(c) != parent)
        .map(|c| rooted_code(g, c, Some(root)))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = n;
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while alive > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            alive -= 1;
            for u in g.neighbors(v) {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// Isomorphism invariant for trees: the smaller AHU code over the centers.
pub fn tree_code(g: &Graph) -> Result<String> {
    if !g.is_tree() {
        return Err(Error::Parameter("tree code requested for a non-tree".into()));
    }
    Ok(tree_centers(g)
        .into_iter()
        .map(|c| rooted_code(g, c, None))
        .min()
        .expect("a tree has a center"))
}

/// All unlabeled trees on `n` vertices, built by leaf addition and
/// deduplicated by center-rooted AHU codes. Output is sorted by code.
pub fn trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return Err(Error::Parameter(format!("n must be in 1..=64, got {n}")));
    }
    let mut level = vec![Graph::empty(1)?];
    for _ in 1..n {
        let mut by_code: HashMap<String, Graph> = HashMap::new();
        for t in &level {
            for v in 0..t.n() {
                let grown = t.with_pendant(v)?;
                by_code.entry(tree_code(&grown)?).or_insert(grown);
            }
        }
        let mut next: Vec<(String, Graph)> = by_code.into_iter().collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_family;
    use proptest::prelude::*;

    fn fam(s: &str) -> Graph {
        make_family(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn class_counts_small() {
        let want = [1, 2, 4, 11, 34, 156, 1044];
        for (i, &w) in want.iter().enumerate() {
            assert_eq!(class_count(i + 1).unwrap(), w, "n = {}", i + 1);
        }
    }

    #[test]
    fn code_round_trip() {
        for g in enumerate_small_graphs(5, |_| true).unwrap() {
            let c = canonical_form(&g).unwrap();
            assert_eq!(graph_from_code(c), g);
        }
    }

    #[test]
    fn biconnected_four_vertex_graphs() {
        let found = enumerate_small_graphs(4, |g| g.n() >= 3 && g.is_biconnected().0).unwrap();
        assert_eq!(found.len(), 3);
        let mut edge_counts: Vec<usize> = found.iter().map(Graph::edge_count).collect();
        edge_counts.sort();
        assert_eq!(edge_counts, vec![4, 5, 6]);
        assert!(found.iter().any(|g| g.is_isomorphic(&fam("cycle:4")).unwrap()));
        assert!(found.iter().any(|g| g.is_isomorphic(&fam("complete:4")).unwrap()));
    }

    #[test]
    fn too_large_is_a_capability_error() {
        assert!(matches!(canonical_form(&fam("path:9")), Err(Error::Capability(_))));
        assert!(matches!(enumerate_small_graphs(9, |_| true), Err(Error::Capability(_))));
    }

    #[test]
    fn max_degree_two_counts() {
        // Partitions into paths (any size) and cycles (size >= 3).
        let counts: Vec<usize> = (1..=7).map(|n| max_degree_two_graphs(n).unwrap().len()).collect();
        for (i, &c) in counts.iter().enumerate() {
            let n = i + 1;
            let brute = enumerate_small_graphs(n, |g| g.max_degree() <= 2).unwrap().len();
            assert_eq!(c, brute, "n = {n}");
        }
    }

    #[test]
    fn min_degree_filters_on_named_complements() {
        let members = min_degree_n_minus_3_graphs(7).unwrap();
        assert!(members.iter().any(|m| m.is_isomorphic(&fam("co(cycle:7)")).unwrap()));
        // the fruit graph has a degree-3 vertex, so its complement has min degree 3
        assert_eq!(fam("co(fruit:7)").min_degree(), 3);
        let contains = |list: &[Graph], spec: &str| list.iter().any(|m| m.is_isomorphic(&fam(spec)).unwrap());
        let deg3 = enumerate_small_graphs(7, |g| g.min_degree() >= 3).unwrap();
        assert!(contains(&deg3, "co(cycle:7)"));
        assert!(contains(&deg3, "co(fruit:7)"));
        let deg4 = enumerate_small_graphs(7, |g| g.min_degree() >= 4).unwrap();
        assert!(contains(&deg4, "co(cycle:7)"));
        assert!(!contains(&deg4, "co(fruit:7)"));
        assert_eq!(deg4.len(), members.len());
    }

    #[test]
    fn tree_counts() {
        let want = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &w) in want.iter().enumerate() {
            assert_eq!(trees(i + 1).unwrap().len(), w, "n = {}", i + 1);
        }
        let brute = enumerate_small_graphs(7, Graph::is_tree).unwrap().len();
        assert_eq!(brute, 11);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (2..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
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
            })
        })
    }

    proptest! {
        #[test]
        fn canonical_form_is_relabeling_invariant(
            (g, perm) in arb_graph(7).prop_flat_map(|g| {
                let n = g.n();
                (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            }),
        ) {
            let h = g.relabel(&perm).unwrap();
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        }

        #[test]
        fn canonical_code_is_minimal_over_swaps(g in arb_graph(6)) {
            let c = canonical_form(&g).unwrap();
            let rep = graph_from_code(c);
            for a in 0..g.n() {
                for b in a + 1..g.n() {
                    let mut p: Vec<usize> = (0..g.n()).collect();
                    p.swap(a, b);
                    let swapped = rep.relabel(&p).unwrap();
                    prop_assert!(raw_code(&swapped) >= c.code);
                }
            }
        }
    }

    fn raw_code(g: &Graph) -> u64 {
        let mut code = 0u64;
        for j in 1..g.n() {
            for i in 0..j {
                code = (code << 1) | g.has_edge(i, j) as u64;
            }
        }
        code
    }
}
