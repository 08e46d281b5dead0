//! Executable connectivity criteria for `FS(X, Y)`.
//!
//! Each criterion returns a [`TheoremVerdict`]: the closed-form or
//! structural prediction, optionally the census result, and a witness when
//! the prediction fires.

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::enumerate::{max_degree_two_graphs, min_degree_n_minus_3_graphs};
use crate::error::{param, Error, Result};
use crate::fs::{check_budget, fs_components_with_budget, star_components_predicted, StarPrediction, DEFAULT_BUDGET};
use crate::graph::{make_family, mask_of, FamilySpec, Graph};

fn one_based<S: Serializer>(v: &[usize], s: S) -> std::result::Result<S::Ok, S::Error> {
    v.iter().map(|x| x + 1).collect::<Vec<_>>().serialize(s)
}

/// Supporting structure for a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A `k`-vertex induced subgraph `Y0` with `FS(Star_k, Y0)` connected.
    StarConnectedSubset {
        #[serde(serialize_with = "one_based")]
        vertices: Vec<usize>,
    },
    /// A vertex subset inducing a disconnected subgraph.
    DisconnectedSubset {
        #[serde(serialize_with = "one_based")]
        vertices: Vec<usize>,
    },
    /// A spider found as a (not necessarily induced) subgraph.
    Spider {
        legs: Vec<usize>,
        #[serde(serialize_with = "one_based_scalar")]
        center: usize,
        #[serde(serialize_with = "one_based_nested")]
        paths: Vec<Vec<usize>>,
    },
    /// Family members on `n + 1` vertices that were checked by census.
    FamilyMembers { checked: usize },
}

fn one_based_scalar<S: Serializer>(v: &usize, s: S) -> std::result::Result<S::Ok, S::Error> {
    (v + 1).serialize(s)
}

fn one_based_nested<S: Serializer>(v: &[Vec<usize>], s: S) -> std::result::Result<S::Ok, S::Error> {
    v.iter()
        .map(|p| p.iter().map(|x| x + 1).collect::<Vec<_>>())
        .collect::<Vec<_>>()
        .serialize(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    /// The criterion's prediction (its meaning is documented per criterion).
    pub predicate: bool,
    /// Connectivity of the relevant `FS` graph by census, when computed.
    pub oracle: Option<bool>,
    pub witness: Option<Witness>,
}

impl TheoremVerdict {
    fn new(predicate: bool, witness: Option<Witness>) -> Self {
        TheoremVerdict { predicate, oracle: None, witness }
    }
}

/// How a verdict's predicate relates to the census.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Predicate true iff connected.
    Equivalence,
    /// Predicate true implies connected.
    Sufficient,
    /// Predicate true implies disconnected.
    Necessary,
}

impl Direction {
    /// Whether a (predicate, census-connected) pair is consistent.
    pub fn consistent(self, predicate: bool, connected: bool) -> bool {
        match self {
            Direction::Equivalence => predicate == connected,
            Direction::Sufficient => !predicate || connected,
            Direction::Necessary => !predicate || !connected,
        }
    }
}

/// Whether `FS(Star_k, y0)` is connected, read off Wilson's classification.
/// For `k = 2` this is simply whether `y0` is an edge.
pub fn star_connected(y0: &Graph) -> Result<bool> {
    match y0.n() {
        0 => param("empty graph"),
        1 => Ok(true),
        2 => Ok(y0.has_edge(0, 1)),
        _ => Ok(match star_components_predicted(y0)? {
            StarPrediction::Connected => true,
            StarPrediction::CyclicOrders { count, .. } => count == 1,
            _ => false,
        }),
    }
}

/// First `k`-subset in lexicographic order whose induced subgraph `Y0` has
/// `FS(Star_k, Y0)` connected.
pub fn find_star_connected_subset(y: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    if k == 0 || k > y.n() {
        return param(format!("subset size {k} outside 1..{}", y.n()));
    }
    for c in (0..y.n()).combinations(k) {
        if !y.is_connected_within(mask_of(&c)) {
            continue;
        }
        let sub = y.induced_subgraph(&c)?.graph;
        if star_connected(&sub)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

fn same_n(x: &Graph, y: &Graph) -> Result<usize> {
    if x.n() != y.n() {
        return param(format!("graphs have {} and {} vertices", x.n(), y.n()));
    }
    Ok(x.n())
}

/// Sufficient condition for connectivity with `k` the maximum degree of `x`:
/// every `k`-subset of `y` induces a connected graph and some `k`-subset
/// `Y0` has `FS(Star_k, Y0)` connected. Predicate true means "connected".
pub fn sufficient_spider_condition(x: &Graph, y: &Graph) -> Result<TheoremVerdict> {
    same_n(x, y)?;
    if !x.is_connected() || !y.is_connected() {
        return param("sufficient spider condition needs X and Y connected");
    }
    let k = x.max_degree();
    if k < 2 {
        return param(format!("sufficient spider condition needs max degree k >= 2, got {k}"));
    }
    if !y.all_k_subsets_connected(k)? {
        return Ok(TheoremVerdict::new(false, None));
    }
    Ok(match find_star_connected_subset(y, k)? {
        Some(vertices) => TheoremVerdict::new(true, Some(Witness::StarConnectedSubset { vertices })),
        None => TheoremVerdict::new(false, None),
    })
}

/// Searches for `Y0` as above when every `k`-subset of `y` is connected.
/// For `n >= 2k - 1` a missing witness is reported as a theorem violation.
pub fn wilsonian_existence(y: &Graph, k: usize) -> Result<TheoremVerdict> {
    let n = y.n();
    if k < 3 || k > n {
        return param(format!("Wilsonian search needs 3 <= k <= n, got k = {k}, n = {n}"));
    }
    if let Some(bad) = y.first_disconnected_k_subset(k) {
        return param(format!(
            "hypothesis fails: the {k}-subset {:?} induces a disconnected graph",
            bad.iter().map(|v| v + 1).collect::<Vec<_>>()
        ));
    }
    match find_star_connected_subset(y, k)? {
        Some(vertices) => Ok(TheoremVerdict::new(true, Some(Witness::StarConnectedSubset { vertices }))),
        None if n + 1 >= 2 * k => Err(Error::TheoremViolation(format!(
            "no {k}-vertex induced subgraph Y0 with FS(Star_{k}, Y0) connected in {y:?}, although n = {n} >= 2k - 1"
        ))),
        None => Ok(TheoremVerdict::new(false, None)),
    }
}

/// Sorts a partition into non-increasing order after checking its entries.
pub fn normalize_partition(lambda: &[usize]) -> Result<Vec<usize>> {
    if lambda.is_empty() {
        return param("partition must have at least one part");
    }
    if lambda.contains(&0) {
        return param("partition parts must be positive");
    }
    let mut l = lambda.to_vec();
    l.sort_unstable_by(|a, b| b.cmp(a));
    Ok(l)
}

/// Necessary condition for a spider: predicate true means "`FS(Spider(λ), y)`
/// is disconnected", certified by a disconnected induced subgraph on
/// `n - λ1` vertices.
pub fn necessary_spider_condition(lambda: &[usize], y: &Graph) -> Result<TheoremVerdict> {
    let l = normalize_partition(lambda)?;
    let n = l.iter().sum::<usize>() + 1;
    if y.n() != n {
        return param(format!("Spider{l:?} has {n} vertices but Y has {}", y.n()));
    }
    Ok(match y.first_disconnected_k_subset(n - l[0]) {
        Some(vertices) => TheoremVerdict::new(true, Some(Witness::DisconnectedSubset { vertices })),
        None => TheoremVerdict::new(false, None),
    })
}

/// Dandelion characterization for `n >= 2k - 1`: `FS(Dand_{k,n}, y)` is
/// connected iff every `k`-subset of `y` is connected. The census oracle is
/// attached when `n!` fits in the default budget.
pub fn dandelion_characterization(k: usize, n: usize, y: &Graph) -> Result<TheoremVerdict> {
    dandelion_characterization_with_budget(k, n, y, DEFAULT_BUDGET)
}

pub fn dandelion_characterization_with_budget(k: usize, n: usize, y: &Graph, budget: u64) -> Result<TheoremVerdict> {
    if k < 2 {
        return param(format!("dandelion needs k >= 2, got {k}"));
    }
    if n + 1 < 2 * k {
        return param(format!("dandelion characterization needs n >= 2k - 1, got k = {k}, n = {n}"));
    }
    if y.n() != n {
        return param(format!("Y has {} vertices, expected {n}", y.n()));
    }
    let mut verdict = match y.first_disconnected_k_subset(k) {
        Some(vertices) => TheoremVerdict::new(false, Some(Witness::DisconnectedSubset { vertices })),
        None => {
            let w = find_star_connected_subset(y, k)?.map(|vertices| Witness::StarConnectedSubset { vertices });
            TheoremVerdict::new(true, w)
        }
    };
    if check_budget(n, budget).is_ok() {
        let x = make_family(&FamilySpec::Dandelion { k, n })?;
        verdict.oracle = Some(fs_components_with_budget(&x, y, budget)?.count == 1);
    }
    Ok(verdict)
}

const CO_CYCLE_EXCEPTIONS: [&[usize]; 7] = [
    &[1, 1, 1, 1],
    &[2, 2, 1],
    &[2, 2, 2],
    &[3, 2, 1],
    &[3, 3, 1],
    &[4, 2, 1],
    &[5, 2, 1],
];

/// Closed form for `FS(Spider(λ), complement(Cycle_n))` being connected.
/// Spiders with at most two legs are paths, never connected here for `n >= 4`.
pub fn spider_vs_complement_cycle(lambda: &[usize]) -> Result<bool> {
    let l = normalize_partition(lambda)?;
    let n = l.iter().sum::<usize>() + 1;
    if n < 4 {
        return param(format!("needs n >= 4, got n = {n}"));
    }
    if l.len() <= 2 {
        return Ok(false);
    }
    let hook = l.len() == 3 && l[1] == 1 && l[2] == 1;
    Ok(!hook && !CO_CYCLE_EXCEPTIONS.contains(&l.as_slice()))
}

/// Closed form for `FS(Spider(λ), complement(fruit_n))` being connected
/// (`k >= 3` legs).
pub fn spider_vs_complement_fruit(lambda: &[usize]) -> Result<bool> {
    let l = normalize_partition(lambda)?;
    let k = l.len();
    if k < 3 {
        return param(format!("fruit criterion needs k >= 3 legs, got {k}"));
    }
    let disconnected = (k == 4 && l[1] == 1) || (k == 3 && l[2] == 1) || l == [2, 2, 2];
    Ok(!disconnected)
}

/// Spiders whose presence in `X` suffices when `Y` has min degree `>= n - 3`.
pub const MIN_DEGREE_SPIDERS: [&[usize]; 6] = [
    &[1, 1, 1, 1, 1, 1],
    &[2, 1, 1, 1, 1],
    &[2, 2, 1, 1],
    &[3, 3, 2],
    &[4, 2, 2],
    &[4, 3, 1],
];

/// Predicate true means "connected": `y` has min degree `>= n - 3`, `x` is
/// connected and contains one of [`MIN_DEGREE_SPIDERS`].
pub fn min_degree_sufficient(x: &Graph, y: &Graph) -> Result<TheoremVerdict> {
    let n = same_n(x, y)?;
    if y.min_degree() + 3 < n || !x.is_connected() {
        return Ok(TheoremVerdict::new(false, None));
    }
    for legs in MIN_DEGREE_SPIDERS {
        if let Some((center, paths)) = x.find_spider_subgraph(legs) {
            return Ok(TheoremVerdict::new(
                true,
                Some(Witness::Spider { legs: legs.to_vec(), center, paths }),
            ));
        }
    }
    Ok(TheoremVerdict::new(false, None))
}

/// Hereditary families used to grow connected `FS` graphs by pendant vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HereditaryFamily {
    /// Induced subgraphs of complements of cycles.
    CoCycle,
    /// Induced subgraphs of complements of fruit graphs.
    CoFruit,
    /// Graphs whose complements have maximum degree at most 2.
    MinDeg3,
}

/// `n`-vertex members of a hereditary family, one per isomorphism class
/// where the generator is exact (duplicates are harmless for checking).
pub fn hereditary_members(family: HereditaryFamily, n: usize) -> Result<Vec<Graph>> {
    if n < 5 {
        return param(format!("hereditary families are used from n = 5 on, got {n}"));
    }
    let forests: Vec<Graph> = max_degree_two_graphs(n)?
        .into_iter()
        .filter(|g| g.edge_count() + g.component_masks().len() == n)
        .collect();
    let cycle = make_family(&FamilySpec::Cycle(n))?;
    let complements = |gs: Vec<Graph>| gs.iter().map(Graph::complement).collect::<Vec<_>>();
    match family {
        HereditaryFamily::CoCycle => {
            let mut gs = forests;
            gs.push(cycle);
            Ok(complements(gs))
        }
        HereditaryFamily::CoFruit => {
            // A fruit minus some vertices is the whole fruit, its cycle, or a
            // path forest with at most one Spider(a, b, 1) component.
            let mut gs = forests.clone();
            gs.push(cycle);
            gs.push(make_family(&FamilySpec::Fruit(n))?);
            for spider_size in 4..=n {
                let spiders = spider_shapes(spider_size);
                let rest = n - spider_size;
                let tails: Vec<Graph> = if rest == 0 {
                    vec![Graph::empty(0)?]
                } else {
                    max_degree_two_graphs(rest)?
                        .into_iter()
                        .filter(|g| g.edge_count() + g.component_masks().len() == rest)
                        .collect()
                };
                for s in &spiders {
                    for t in &tails {
                        gs.push(s.disjoint_union(t)?);
                    }
                }
            }
            Ok(complements(gs))
        }
        HereditaryFamily::MinDeg3 => min_degree_n_minus_3_graphs(n),
    }
}

/// Spiders `(a, b, 1)` on `size` vertices with `a >= b >= 1`.
fn spider_shapes(size: usize) -> Vec<Graph> {
    let legs_total = size - 1;
    let mut out = Vec::new();
    for b in 1..legs_total {
        let a = legs_total - 1 - b;
        if a >= b {
            out.push(make_family(&FamilySpec::Spider(vec![a, b, 1])).expect("valid spider"));
        }
    }
    out
}

/// Checks the pendant-extension step: verifies the base hypothesis by census,
/// then checks `FS(X', Y')` for every `(n+1)`-vertex family member `Y'`,
/// where `X'` is `base_x` with a new leaf at `attach_at`.
pub fn hereditary_extension_check(
    base_x: &Graph,
    attach_at: usize,
    family: HereditaryFamily,
) -> Result<TheoremVerdict> {
    hereditary_extension_check_with_budget(base_x, attach_at, family, DEFAULT_BUDGET)
}

pub fn hereditary_extension_check_with_budget(
    base_x: &Graph,
    attach_at: usize,
    family: HereditaryFamily,
    budget: u64,
) -> Result<TheoremVerdict> {
    let n = base_x.n();
    let base_ys: Vec<Graph> = match family {
        HereditaryFamily::CoCycle => {
            if n < 5 {
                return param("co-cycle extension needs n >= 5");
            }
            vec![make_family(&FamilySpec::Complement(Box::new(FamilySpec::Cycle(n))))?]
        }
        HereditaryFamily::CoFruit => {
            if n < 5 {
                return param("co-fruit extension needs n >= 5");
            }
            vec![
                make_family(&FamilySpec::Complement(Box::new(FamilySpec::Cycle(n))))?,
                make_family(&FamilySpec::Complement(Box::new(FamilySpec::Fruit(n))))?,
            ]
        }
        HereditaryFamily::MinDeg3 => {
            if n < 4 {
                return param("min-degree extension needs n >= 4");
            }
            min_degree_n_minus_3_graphs(n)?
        }
    };
    for y in &base_ys {
        let census = fs_components_with_budget(base_x, y, budget)?;
        if census.count != 1 {
            return param(format!(
                "base hypothesis fails: FS(X, {y:?}) has {} components (sizes {:?})",
                census.count, census.sizes
            ));
        }
    }
    let x2 = base_x.with_pendant(attach_at)?;
    let members = hereditary_members(family, n + 1)?;
    let mut all_connected = true;
    for y in &members {
        if fs_components_with_budget(&x2, y, budget)?.count != 1 {
            all_connected = false;
            break;
        }
    }
    Ok(TheoremVerdict {
        predicate: true,
        oracle: Some(all_connected),
        witness: Some(Witness::FamilyMembers { checked: members.len() }),
    })
}

/// Partitions of `total` into at least `min_parts` positive parts, each in
/// non-increasing order, listed in reverse lexicographic order.
pub fn partitions(total: usize, min_parts: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            go(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if total > 0 {
        go(total, total, &mut Vec::new(), &mut out);
    }
    out.retain(|p| p.len() >= min_parts);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fs::fs_is_connected;

    fn fam(s: &str) -> Graph {
        make_family(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn partition_listing() {
        assert_eq!(partitions(4, 1).len(), 5);
        assert_eq!(partitions(6, 3), vec![
            vec![4, 1, 1],
            vec![3, 2, 1],
            vec![3, 1, 1, 1],
            vec![2, 2, 2],
            vec![2, 2, 1, 1],
            vec![2, 1, 1, 1, 1],
            vec![1, 1, 1, 1, 1, 1],
        ]);
    }

    #[test]
    fn sufficient_on_complete() {
        let v = sufficient_spider_condition(&fam("star:5"), &fam("complete:5")).unwrap();
        assert!(v.predicate);
        assert_eq!(v.witness, Some(Witness::StarConnectedSubset { vertices: vec![0, 1, 2, 3] }));
        assert!(sufficient_spider_condition(&fam("star:5"), &fam("empty:5")).is_err());
    }

    #[test]
    fn sufficient_on_co_cycle_with_degree_three_tree() {
        let y = fam("co(cycle:7)");
        // three consecutive cycle vertices: the middle one is isolated
        assert!(!y.all_k_subsets_connected(3).unwrap());
        let v = sufficient_spider_condition(&fam("spider:2,2,2"), &y).unwrap();
        assert!(!v.predicate);
    }

    #[test]
    fn wilsonian_examples() {
        let v = wilsonian_existence(&fam("complete:7"), 4).unwrap();
        assert!(v.predicate);
        let v = wilsonian_existence(&fam("co(cycle:9)"), 4).unwrap();
        assert!(v.predicate);
        assert!(wilsonian_existence(&fam("path:7"), 3).is_err());
        assert!(wilsonian_existence(&fam("complete:5"), 2).is_err());
    }

    #[test]
    fn wilsonian_below_bound_is_not_a_violation() {
        // n = 2k - 2: every k-subset connected, no witness is allowed.
        // K_{3,3} minus nothing: every 4-subset of K_{3,3} is connected and
        // every 4-vertex induced subgraph is bipartite.
        let k33 = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        let v = wilsonian_existence(&k33, 4).unwrap();
        assert!(!v.predicate);
    }

    #[test]
    fn necessary_examples() {
        for n in 5..9 {
            let v = necessary_spider_condition(&[n - 4, 1, 1, 1], &fam(&format!("fruit:{n}"))).unwrap();
            assert!(v.predicate, "n = {n}");
            match v.witness {
                Some(Witness::DisconnectedSubset { vertices }) => assert_eq!(vertices.len(), 4),
                other => panic!("{other:?}"),
            }
            let co = necessary_spider_condition(&[n - 4, 1, 1, 1], &fam(&format!("co(fruit:{n})"))).unwrap();
            assert!(co.predicate, "complement, n = {n}");
        }
        for l in partitions(6, 1) {
            assert!(!necessary_spider_condition(&l, &fam("complete:7")).unwrap().predicate);
        }
        assert!(necessary_spider_condition(&[2, 2], &fam("complete:4")).is_err());
    }

    #[test]
    fn dandelion_low_k_readings() {
        for y in crate::enumerate::enumerate_small_graphs(5, |_| true).unwrap() {
            let v2 = dandelion_characterization(2, 5, &y).unwrap();
            assert_eq!(v2.predicate, y.edge_count() == 10);
            let v3 = dandelion_characterization(3, 5, &y).unwrap();
            assert_eq!(v3.predicate, y.min_degree() >= 3);
            assert_eq!(v3.oracle, Some(v3.predicate));
        }
        assert!(dandelion_characterization(4, 6, &fam("complete:6")).is_err());
    }

    #[test]
    fn co_cycle_closed_form() {
        assert!(!spider_vs_complement_cycle(&[2, 2, 1]).unwrap());
        assert!(spider_vs_complement_cycle(&[6, 2, 1]).unwrap());
        assert!(!spider_vs_complement_cycle(&[7, 1, 1]).unwrap());
        assert!(!spider_vs_complement_cycle(&[1, 1, 1, 1]).unwrap());
        assert!(spider_vs_complement_cycle(&[1, 2, 1, 1]).unwrap());
        assert!(!spider_vs_complement_cycle(&[3, 2]).unwrap());
        assert!(spider_vs_complement_cycle(&[3, 2, 2]).unwrap());
        assert!(spider_vs_complement_cycle(&[1, 1]).is_err());
    }

    #[test]
    fn co_fruit_closed_form() {
        assert!(!spider_vs_complement_fruit(&[2, 2, 2]).unwrap());
        assert!(spider_vs_complement_fruit(&[2, 2, 1, 1]).unwrap());
        assert!(!spider_vs_complement_fruit(&[3, 2, 1]).unwrap());
        assert!(!spider_vs_complement_fruit(&[5, 1, 1, 1]).unwrap());
        assert!(spider_vs_complement_fruit(&[3, 3, 2]).unwrap());
        assert!(spider_vs_complement_fruit(&[4, 3]).is_err());
    }

    #[test]
    fn min_degree_examples() {
        let v = min_degree_sufficient(&fam("star:7"), &fam("co(cycle:7)")).unwrap();
        assert!(v.predicate);
        assert!(matches!(v.witness, Some(Witness::Spider { ref legs, .. }) if legs == &vec![1; 6]));
        assert!(!min_degree_sufficient(&fam("cycle:9"), &fam("co(cycle:9)")).unwrap().predicate);
        assert!(min_degree_sufficient(&fam("cycle:9"), &fam("cycle:8")).is_err());
    }

    #[test]
    fn spider_witness_serializes_one_based() {
        let v = min_degree_sufficient(&fam("star:7"), &fam("co(cycle:7)")).unwrap();
        let j = serde_json::to_value(&v).unwrap();
        assert_eq!(j["witness"]["center"], 1);
        assert_eq!(j["witness"]["kind"], "spider");
    }

    fn brute_induced_members(n: usize, hosts: &[Graph]) -> Vec<crate::enumerate::CanonicalCode> {
        let mut out = std::collections::BTreeSet::new();
        for h in hosts {
            for c in (0..h.n()).combinations(n) {
                let g = h.induced_subgraph(&c).unwrap().graph;
                out.insert(crate::enumerate::canonical_form(&g).unwrap());
            }
        }
        out.into_iter().collect()
    }

    fn codes(gs: &[Graph]) -> Vec<crate::enumerate::CanonicalCode> {
        let set: std::collections::BTreeSet<_> = gs.iter().map(|g| crate::enumerate::canonical_form(g).unwrap()).collect();
        set.into_iter().collect()
    }

    #[test]
    fn hereditary_members_match_induced_subgraphs() {
        for n in 5..=7 {
            let co_cycles: Vec<Graph> = (n..=2 * n + 1).map(|m| fam(&format!("co(cycle:{m})"))).collect();
            assert_eq!(
                codes(&hereditary_members(HereditaryFamily::CoCycle, n).unwrap()),
                brute_induced_members(n, &co_cycles),
                "co-cycle n = {n}"
            );
            let co_fruits: Vec<Graph> = (n..=2 * n + 2).map(|m| fam(&format!("co(fruit:{m})"))).collect();
            assert_eq!(
                codes(&hereditary_members(HereditaryFamily::CoFruit, n).unwrap()),
                brute_induced_members(n, &co_fruits),
                "co-fruit n = {n}"
            );
        }
    }

    #[test]
    fn hereditary_extension_examples() {
        // (2,2,2) is an exception for the complemented cycle, so the base fails
        let base = fam("spider:2,2,2");
        assert!(!fs_is_connected(&base, &fam("co(cycle:7)")).unwrap());
        assert!(matches!(
            hereditary_extension_check(&base, 6, HereditaryFamily::CoCycle),
            Err(Error::Parameter(_))
        ));
        let base = fam("spider:2,1,1,1");
        assert!(fs_is_connected(&base, &fam("co(cycle:6)")).unwrap());
        for attach in 0..6 {
            let v = hereditary_extension_check(&base, attach, HereditaryFamily::CoCycle).unwrap();
            assert_eq!(v.oracle, Some(true), "attach at {}", attach + 1);
        }
        let v = hereditary_extension_check(&fam("spider:2,2,1,1"), 0, HereditaryFamily::CoFruit).unwrap();
        assert_eq!(v.oracle, Some(true));
    }
}
