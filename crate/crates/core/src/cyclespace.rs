//! Cycle spaces of explicit `FS` components over GF(2).
//!
//! Edge indices are those of [`ExplicitComponent::edges`], i.e. ordered by
//! (lower endpoint rank, higher endpoint rank).

use std::collections::{BTreeMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::fs::{EdgeLabel, ExplicitComponent};
use crate::gf2;

/// Longest cycle the generic enumerator looks for by default.
pub const GENERIC_MAX_LEN: usize = 8;
/// Largest component (in edges) the generic enumerator accepts.
pub const GENERIC_MAX_EDGES: usize = 50_000;

const NONE: u32 = u32::MAX;

/// An even-degree edge subset of a component, stored as sorted edge indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CycleVector {
    edges: Vec<u32>,
}

impl CycleVector {
    /// Validates range, duplicates and the even-degree condition.
    pub fn new(c: &ExplicitComponent, mut edges: Vec<usize>) -> Result<CycleVector> {
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Validation("cycle vector lists an edge twice".into()));
        }
        if let Some(&e) = edges.iter().find(|&&e| e >= c.edge_count()) {
            return Err(Error::Validation(format!("edge index {e} out of range")));
        }
        let v = CycleVector { edges: edges.into_iter().map(|e| e as u32).collect() };
        v.check_even(c)?;
        Ok(v)
    }

    fn from_sorted(edges: Vec<u32>) -> CycleVector {
        CycleVector { edges }
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().map(|&e| e as usize)
    }

    pub fn weight(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&(e as u32)).is_ok()
    }

    pub fn symmetric_difference(&self, other: &CycleVector) -> CycleVector {
        CycleVector::from_sorted(gf2::xor_sorted(&self.edges, &other.edges))
    }

    /// Fails unless every vertex meets an even number of the edges.
    pub fn check_even(&self, c: &ExplicitComponent) -> Result<()> {
        let mut odd: HashSet<usize> = HashSet::new();
        for e in self.edges() {
            let Some(edge) = c.edges.get(e) else {
                return Err(Error::Validation(format!("edge index {e} out of range")));
            };
            for v in [edge.u, edge.v] {
                if !odd.remove(&v) {
                    odd.insert(v);
                }
            }
        }
        match odd.into_iter().min() {
            None => Ok(()),
            Some(v) => Err(Error::Validation(format!(
                "not an even-degree edge set: vertex {} has odd degree",
                c.vertices[v]
            ))),
        }
    }
}

/// A simple cycle with its vertices and edges in cyclic order; `edges[i]`
/// joins `vertices[i]` and `vertices[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedCycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl OrderedCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vector(&self) -> CycleVector {
        let mut e: Vec<u32> = self.edges.iter().map(|&e| e as u32).collect();
        e.sort_unstable();
        CycleVector::from_sorted(e)
    }
}

fn require_connected(c: &ExplicitComponent) -> Result<()> {
    if !c.is_connected() {
        return param("component is empty or disconnected");
    }
    Ok(())
}

/// `|E| - |V| + 1`.
pub fn cycle_space_dimension(c: &ExplicitComponent) -> Result<usize> {
    require_connected(c)?;
    Ok(c.edge_count() + 1 - c.vertex_count())
}

/// Breadth-first spanning tree from vertex 0: `(parent edge per vertex, is-tree flag per edge)`.
fn bfs_tree(c: &ExplicitComponent) -> (Vec<u32>, Vec<bool>) {
    let mut parent = vec![NONE; c.vertex_count()];
    let mut in_tree = vec![false; c.edge_count()];
    let mut seen = vec![false; c.vertex_count()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for &(w, e) in &c.adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = e as u32;
                in_tree[e] = true;
                queue.push_back(w);
            }
        }
    }
    (parent, in_tree)
}

/// One fundamental cycle per non-tree edge of a breadth-first spanning tree.
pub fn fundamental_basis(c: &ExplicitComponent) -> Result<Vec<CycleVector>> {
    require_connected(c)?;
    let (parent, in_tree) = bfs_tree(c);
    let depth = bfs_distances(c, 0);
    let up = |v: usize| {
        let e = &c.edges[parent[v] as usize];
        (if e.u == v { e.v } else { e.u }, parent[v])
    };
    let mut basis = Vec::new();
    for (idx, edge) in c.edges.iter().enumerate() {
        if in_tree[idx] {
            continue;
        }
        let mut set = vec![idx as u32];
        let (mut a, mut b) = (edge.u, edge.v);
        while a != b {
            if depth[a] >= depth[b] {
                let (p, e) = up(a);
                set.push(e);
                a = p;
            } else {
                let (p, e) = up(b);
                set.push(e);
                b = p;
            }
        }
        set.sort_unstable();
        basis.push(CycleVector::from_sorted(set));
    }
    Ok(basis)
}

/// `slot[v * m + chair_edge]` is the component edge swapping that chair edge at `v`.
fn slot_table(c: &ExplicitComponent) -> Vec<u32> {
    let m = c.chair_edges.len();
    let mut slot = vec![NONE; c.vertex_count() * m];
    for (idx, e) in c.edges.iter().enumerate() {
        slot[e.u * m + e.chair_edge] = idx as u32;
        slot[e.v * m + e.chair_edge] = idx as u32;
    }
    slot
}

fn across(c: &ExplicitComponent, v: usize, e: u32) -> usize {
    let edge = &c.edges[e as usize];
    if edge.u == v {
        edge.v
    } else {
        edge.u
    }
}

fn chairs_disjoint(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
}

/// Commutation squares: two swaps on disjoint chair edges available at a common vertex.
pub fn enumerate_squares(c: &ExplicitComponent) -> Vec<CycleVector> {
    let m = c.chair_edges.len();
    let slot = slot_table(c);
    let mut found: HashSet<[u32; 4]> = HashSet::new();
    for v in 0..c.vertex_count() {
        let row = &slot[v * m..(v + 1) * m];
        for c1 in 0..m {
            if row[c1] == NONE {
                continue;
            }
            for c2 in c1 + 1..m {
                if row[c2] == NONE || !chairs_disjoint(c.chair_edges[c1], c.chair_edges[c2]) {
                    continue;
                }
                let (e1, e2) = (row[c1], row[c2]);
                let v1 = across(c, v, e1);
                let v2 = across(c, v, e2);
                let f2 = slot[v1 * m + c2];
                let f1 = slot[v2 * m + c1];
                let mut key = [e1, e2, f1, f2];
                key.sort_unstable();
                found.insert(key);
            }
        }
    }
    let mut out: Vec<CycleVector> = found.into_iter().map(|k| CycleVector::from_sorted(k.to_vec())).collect();
    out.sort();
    out
}

/// Yang-Baxter hexagons: chair edges `pq`, `qr` whose three occupants are
/// pairwise friends, giving labels `ab, ac, bc` one way round and
/// `bc, ac, ab` the other.
pub fn enumerate_hexagons(c: &ExplicitComponent) -> Vec<CycleVector> {
    let m = c.chair_edges.len();
    let slot = slot_table(c);
    let step = |v: usize, ce: usize| -> Option<(usize, u32)> {
        let e = slot[v * m + ce];
        (e != NONE).then(|| (across(c, v, e), e))
    };
    let mut found: HashSet<[u32; 6]> = HashSet::new();
    for v in 0..c.vertex_count() {
        for c1 in 0..m {
            for c2 in c1 + 1..m {
                if chairs_disjoint(c.chair_edges[c1], c.chair_edges[c2]) {
                    continue;
                }
                let walk = |first: usize, second: usize| -> Option<(usize, [u32; 3])> {
                    let (a, e1) = step(v, first)?;
                    let (b, e2) = step(a, second)?;
                    let (d, e3) = step(b, first)?;
                    Some((d, [e1, e2, e3]))
                };
                let (Some((d1, p)), Some((d2, q))) = (walk(c1, c2), walk(c2, c1)) else {
                    continue;
                };
                if d1 != d2 {
                    continue;
                }
                let mut key = [p[0], p[1], p[2], q[0], q[1], q[2]];
                key.sort_unstable();
                found.insert(key);
            }
        }
    }
    let mut out: Vec<CycleVector> = found.into_iter().map(|k| CycleVector::from_sorted(k.to_vec())).collect();
    out.sort();
    out
}

/// Every simple cycle of length at most `max_len`, found by depth-first
/// search from each cycle's smallest vertex. Independent of the structural
/// enumerators; used as their oracle.
pub fn generic_short_cycles(c: &ExplicitComponent, max_len: usize) -> Result<Vec<OrderedCycle>> {
    if max_len < 3 {
        return param("cycle length bound must be at least 3");
    }
    if c.edge_count() > GENERIC_MAX_EDGES {
        return Err(Error::Capability(format!(
            "generic cycle search is limited to {GENERIC_MAX_EDGES} edges, component has {}",
            c.edge_count()
        )));
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; c.vertex_count()];
    for s in 0..c.vertex_count() {
        let mut verts = vec![s];
        let mut edges: Vec<usize> = Vec::new();
        on_path[s] = true;
        extend(c, s, max_len, &mut verts, &mut edges, &mut on_path, &mut out);
        on_path[s] = false;
    }
    Ok(out)
}

fn extend(
    c: &ExplicitComponent,
    s: usize,
    max_len: usize,
    verts: &mut Vec<usize>,
    edges: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<OrderedCycle>,
) {
    let v = *verts.last().unwrap();
    for &(w, e) in &c.adjacency[v] {
        if w == s && verts.len() >= 3 && verts[1] < v {
            let mut cyc_edges = edges.clone();
            cyc_edges.push(e);
            let mut cyc_verts = verts.clone();
            cyc_verts.push(s);
            out.push(OrderedCycle { vertices: cyc_verts, edges: cyc_edges });
        }
        if w > s && !on_path[w] && verts.len() < max_len {
            on_path[w] = true;
            verts.push(w);
            edges.push(e);
            extend(c, s, max_len, verts, edges, on_path, out);
            edges.pop();
            verts.pop();
            on_path[w] = false;
        }
    }
}

/// GF(2) rank of the generators, after validating each one.
pub fn cycle_rank(generators: &[CycleVector], c: &ExplicitComponent) -> Result<usize> {
    require_connected(c)?;
    for g in generators {
        g.check_even(c)?;
    }
    // Restricting to non-tree coordinates is injective on the cycle space.
    let (_, in_tree) = bfs_tree(c);
    let mut column = vec![NONE; c.edge_count()];
    let mut next = 0u32;
    for (e, &t) in in_tree.iter().enumerate() {
        if !t {
            column[e] = next;
            next += 1;
        }
    }
    let rows: Vec<Vec<u32>> = generators
        .iter()
        .map(|g| {
            let mut r: Vec<u32> = g.edges().map(|e| column[e]).filter(|&x| x != NONE).collect();
            r.sort_unstable();
            r
        })
        .collect();
    Ok(gf2::rank(&rows, next as usize))
}

/// Whether the generators span the whole cycle space.
pub fn spans(generators: &[CycleVector], c: &ExplicitComponent) -> Result<bool> {
    Ok(cycle_rank(generators, c)? == cycle_space_dimension(c)?)
}

/// Breadth-first distances from `src`; unreachable vertices get `u32::MAX`.
pub fn bfs_distances(c: &ExplicitComponent, src: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; c.vertex_count()];
    let mut queue = VecDeque::from([src]);
    dist[src] = 0;
    while let Some(v) = queue.pop_front() {
        for &(w, _) in &c.adjacency[v] {
            if dist[w] == u32::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Edge indices along a vertex walk, or a validation error naming the bad step.
pub fn walk_edges(c: &ExplicitComponent, walk: &[usize]) -> Result<Vec<usize>> {
    if walk.is_empty() {
        return Err(Error::Validation("walk has no vertices".into()));
    }
    if let Some(&v) = walk.iter().find(|&&v| v >= c.vertex_count()) {
        return Err(Error::Validation(format!("vertex index {v} out of range")));
    }
    walk.windows(2)
        .enumerate()
        .map(|(i, w)| {
            c.edge_between(w[0], w[1])
                .ok_or_else(|| Error::Validation(format!("walk step {i} is not an edge")))
        })
        .collect()
}

/// Length equals the breadth-first distance between the endpoints.
pub fn is_geodesic(c: &ExplicitComponent, walk: &[usize]) -> Result<bool> {
    let edges = walk_edges(c, walk)?;
    let d = bfs_distances(c, walk[0])[*walk.last().unwrap()];
    Ok(edges.len() as u32 == d)
}

/// No label is used twice along the walk.
pub fn labels_distinct(c: &ExplicitComponent, walk: &[usize]) -> Result<bool> {
    let edges = walk_edges(c, walk)?;
    let mut seen = HashSet::new();
    Ok(edges.iter().all(|&e| seen.insert(c.edges[e].label)))
}

/// Checks that every shortest path out of `src` uses distinct labels, by
/// propagating the label sets of all geodesics along the breadth-first DAG.
/// Returns the first vertex reached by a geodesic with a repeated label.
pub fn geodesic_label_violation(c: &ExplicitComponent, src: usize) -> Result<Option<usize>> {
    if c.n > 11 {
        return param("geodesic label sets are limited to n <= 11");
    }
    let bit = |l: EdgeLabel| 1u64 << (l.hi() * (l.hi() - 1) / 2 + l.lo());
    let dist = bfs_distances(c, src);
    let mut order: Vec<usize> = (0..c.vertex_count()).filter(|&v| dist[v] != u32::MAX).collect();
    order.sort_by_key(|&v| dist[v]);
    let mut sets: Vec<Vec<u64>> = vec![Vec::new(); c.vertex_count()];
    sets[src].push(0);
    for &v in &order {
        let mut here = std::mem::take(&mut sets[v]);
        here.sort_unstable();
        here.dedup();
        for &(w, e) in &c.adjacency[v] {
            if dist[w] != dist[v] + 1 {
                continue;
            }
            let b = bit(c.edges[e].label);
            for &mask in &here {
                if mask & b != 0 {
                    return Ok(Some(w));
                }
                sets[w].push(mask | b);
            }
        }
        sets[v] = here;
    }
    Ok(None)
}

/// Cyclic order of a simple cycle, starting at its lowest edge and heading
/// to that edge's lower endpoint's other cycle edge.
pub fn cycle_order(c: &ExplicitComponent, cycle: &CycleVector) -> Result<OrderedCycle> {
    cycle.check_even(c)?;
    let Some(first) = cycle.edges().next() else {
        return Err(Error::Validation("empty edge set is not a simple cycle".into()));
    };
    let mut incident: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in cycle.edges() {
        incident.entry(c.edges[e].u).or_default().push(e);
        incident.entry(c.edges[e].v).or_default().push(e);
    }
    if incident.values().any(|es| es.len() != 2) {
        return Err(Error::Validation("edge set has a vertex of degree above 2".into()));
    }
    let start = c.edges[first].v;
    let mut vertices = vec![start];
    let mut edges = vec![first];
    let mut at = c.edges[first].u;
    let mut via = first;
    while at != start {
        vertices.push(at);
        let es = &incident[&at];
        let next = if es[0] == via { es[1] } else { es[0] };
        edges.push(next);
        let e = &c.edges[next];
        at = if e.u == at { e.v } else { e.u };
        via = next;
    }
    if edges.len() != cycle.weight() {
        return Err(Error::Validation("edge set is a union of several cycles".into()));
    }
    vertices.push(start);
    Ok(OrderedCycle { vertices, edges })
}

/// How often each label appears on a simple cycle.
pub fn cycle_label_multiplicity(c: &ExplicitComponent, cycle: &CycleVector) -> Result<BTreeMap<EdgeLabel, usize>> {
    cycle_order(c, cycle)?;
    let mut counts = BTreeMap::new();
    for e in cycle.edges() {
        *counts.entry(c.edges[e].label).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Two edges share a label exactly when they sit opposite each other.
pub fn opposite_label_check(c: &ExplicitComponent, cycle: &OrderedCycle) -> bool {
    let len = cycle.len();
    (0..len).all(|i| {
        (i + 1..len).all(|j| {
            let same = c.edges[cycle.edges[i]].label == c.edges[cycle.edges[j]].label;
            same == (2 * (j - i) == len)
        })
    })
}

/// Within-cycle distances agree with component distances for every pair.
pub fn is_isometric(c: &ExplicitComponent, cycle: &OrderedCycle) -> bool {
    let len = cycle.len();
    (0..len).all(|i| {
        let dist = bfs_distances(c, cycle.vertices[i]);
        (i + 1..len).all(|j| {
            let along = (j - i).min(len - (j - i)) as u32;
            dist[cycle.vertices[j]] == along
        })
    })
}
