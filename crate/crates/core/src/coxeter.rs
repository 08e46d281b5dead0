//! Walks in `FS(Cycle_n, Y)` as label sequences, Coxeter moves on them, and
//! the reduction of repetition-free anchored walks to trivial or complete
//! form.
//!
//! Move positions are 0-based indices into a walk's label list.

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};
use crate::fs::EdgeLabel;
use crate::graph::Graph;
use crate::perm::Permutation;

/// Default cap on the number of moves a single reduction may perform.
pub const DEFAULT_MOVE_CAP: usize = 1_000_000;

/// A walk given by its starting arrangement and its label sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LabeledWalk {
    pub start: Permutation,
    pub labels: Vec<EdgeLabel>,
}

/// A walk whose first and last labels coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AnchoredWalk {
    pub walk: LabeledWalk,
}

impl AnchoredWalk {
    pub fn new(walk: LabeledWalk) -> Result<AnchoredWalk> {
        match (walk.labels.first(), walk.labels.last()) {
            (Some(f), Some(l)) if walk.labels.len() >= 2 && f == l => Ok(AnchoredWalk { walk }),
            _ => Err(Error::Validation("anchored walk needs at least two labels, first equal to last".into())),
        }
    }

    pub fn anchor(&self) -> EdgeLabel {
        self.walk.labels[0]
    }

    pub fn labels(&self) -> &[EdgeLabel] {
        &self.walk.labels
    }

    pub fn is_trivial(&self) -> bool {
        self.walk.labels.len() == 2
    }

    /// All labels distinct apart from the two anchors.
    pub fn is_repetition_free(&self) -> bool {
        let inner = &self.walk.labels[..self.walk.labels.len() - 1];
        let mut seen = HashSet::new();
        inner.iter().all(|l| seen.insert(*l))
    }

    /// Matches `ab, au_1, ..., au_k, bu_{k+1}, ..., bu_{n-2}, ab` for either orientation of the anchor.
    pub fn is_complete(&self) -> bool {
        let n = self.walk.start.n();
        let l = &self.walk.labels;
        if l.len() != n || !self.is_repetition_free() {
            return false;
        }
        let anchor = self.anchor();
        [(anchor.lo(), anchor.hi()), (anchor.hi(), anchor.lo())].into_iter().any(|(a, b)| {
            let inner = &l[1..l.len() - 1];
            let split = inner.iter().take_while(|e| e.contains(a) && !e.contains(b)).count();
            let mut seen: HashSet<usize> = HashSet::from([a, b]);
            inner[..split].iter().all(|e| seen.insert(e.other(a).unwrap()))
                && inner[split..].iter().all(|e| e.contains(b) && !e.contains(a) && seen.insert(e.other(b).unwrap()))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    SquareDelete { i: usize },
    SquareInsert { i: usize, label: EdgeLabel },
    Commute { i: usize },
    YangBaxter { i: usize },
}

/// Moves in order, with per-label square insertion and deletion counts.
/// Labels left outside the anchors are listed in `trimmed`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MoveLog {
    pub moves: Vec<Move>,
    #[serde(serialize_with = "label_counts")]
    pub insertions: BTreeMap<EdgeLabel, usize>,
    #[serde(serialize_with = "label_counts")]
    pub deletions: BTreeMap<EdgeLabel, usize>,
    pub trimmed: Vec<EdgeLabel>,
}

fn label_counts<S: serde::Serializer>(m: &BTreeMap<EdgeLabel, usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(m.len()))?;
    for (l, c) in m {
        map.serialize_entry(&format!("{}-{}", l.lo() + 1, l.hi() + 1), c)?;
    }
    map.end()
}

impl MoveLog {
    /// Every label is square-inserted at most as often as it is square-deleted.
    pub fn respects_discipline(&self) -> bool {
        self.insertions
            .iter()
            .all(|(l, &c)| c <= self.deletions.get(l).copied().unwrap_or(0))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Trivial,
    Complete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrefixMode {
    Strong,
    Weak,
}

fn cycle_adjacent(n: usize, p: usize, q: usize) -> bool {
    let d = p.abs_diff(q);
    d == 1 || d == n - 1
}

/// Executes the walk on `Cycle_n` and returns every vertex visited.
pub fn validate_walk(y: &Graph, w: &LabeledWalk) -> Result<Vec<Permutation>> {
    let n = y.n();
    if n < 3 {
        return param("walks live in FS(Cycle_n, Y) with n >= 3");
    }
    if w.start.n() != n {
        return param(format!("start has {} entries, Y has {n} vertices", w.start.n()));
    }
    let mut chair_of = w.start.inverse().as_slice().to_vec();
    let mut cur = w.start.clone();
    let mut out = vec![cur.clone()];
    for (i, l) in w.labels.iter().enumerate() {
        let (a, b) = (l.lo(), l.hi());
        if b >= n {
            return Err(Error::Validation(format!("step {i}: label {l} names a person outside 1..{n}")));
        }
        let (pa, pb) = (chair_of[a], chair_of[b]);
        if !cycle_adjacent(n, pa, pb) {
            return Err(Error::Validation(format!("step {i}: {} and {} are not on adjacent chairs", a + 1, b + 1)));
        }
        if !y.has_edge(a, b) {
            return Err(Error::Validation(format!("step {i}: {} and {} are not adjacent in Y", a + 1, b + 1)));
        }
        chair_of.swap(a, b);
        cur = cur.swap_positions(pa, pb);
        out.push(cur.clone());
    }
    Ok(out)
}

fn is_yang_baxter(l: &[EdgeLabel]) -> bool {
    let (p, q, r) = (l[0], l[1], l[2]);
    let (Some(a), Some(b), Some(c)) = (p.common(q), p.common(r), q.common(r)) else {
        return false;
    };
    a != b && b != c && a != c
}

fn move_err(m: &Move, w: &[EdgeLabel], why: &str) -> Error {
    let shown: Vec<String> = w.iter().map(|l| l.to_string()).collect();
    Error::Move(format!("{m:?} on [{}]: {why}", shown.join(",")))
}

/// Applies one Coxeter move; the result is validated before returning.
pub fn apply_move(y: &Graph, w: &LabeledWalk, m: &Move) -> Result<LabeledWalk> {
    let l = &w.labels;
    let mut labels = l.clone();
    match *m {
        Move::SquareDelete { i } => {
            if i + 1 >= l.len() || l[i] != l[i + 1] {
                return Err(move_err(m, l, "needs two equal consecutive labels"));
            }
            labels.drain(i..i + 2);
        }
        Move::SquareInsert { i, label } => {
            if i > l.len() {
                return Err(move_err(m, l, "position past the end"));
            }
            let head = LabeledWalk { start: w.start.clone(), labels: l[..i].to_vec() };
            let at = validate_walk(y, &head)?.pop().unwrap();
            let probe = LabeledWalk { start: at, labels: vec![label] };
            if validate_walk(y, &probe).is_err() {
                return Err(move_err(m, l, "inserted label is not a friendly swap there"));
            }
            labels.splice(i..i, [label, label]);
        }
        Move::Commute { i } => {
            if i + 1 >= l.len() || !l[i].is_disjoint(l[i + 1]) {
                return Err(move_err(m, l, "needs two consecutive disjoint labels"));
            }
            labels.swap(i, i + 1);
        }
        Move::YangBaxter { i } => {
            if i + 2 >= l.len() || !is_yang_baxter(&l[i..i + 3]) {
                return Err(move_err(m, l, "needs the pattern ab, ac, bc"));
            }
            labels.swap(i, i + 2);
        }
    }
    let out = LabeledWalk { start: w.start.clone(), labels };
    validate_walk(y, &out).map_err(|e| Error::Internal(format!("{m:?} produced a non-executable walk: {e}")))?;
    Ok(out)
}

/// Anchors normalized with `a < b`, plus the partners on each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialPrefix {
    pub a: usize,
    pub b: usize,
    /// `x_1..x_k`, partners of `a`.
    pub xs: Vec<usize>,
    /// `y_1..y_l`, partners of `b`.
    pub ys: Vec<usize>,
    /// Number of `c d` labels drawn from the `x`s and `y`s (weak mode only).
    pub extra: usize,
}

impl EssentialPrefix {
    /// Labels in the prefix, counting the first anchor.
    pub fn len(&self) -> usize {
        1 + self.xs.len() + self.ys.len() + self.extra
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

fn scan_prefix(anchor: EdgeLabel, inner: &[EdgeLabel], mode: PrefixMode) -> EssentialPrefix {
    let (a, b) = (anchor.lo(), anchor.hi());
    let mut used: HashSet<usize> = HashSet::from([a, b]);
    let mut i = 0;
    let mut xs = Vec::new();
    while i < inner.len() && inner[i].contains(a) && !used.contains(&inner[i].other(a).unwrap()) {
        let x = inner[i].other(a).unwrap();
        used.insert(x);
        xs.push(x);
        i += 1;
    }
    let mut ys = Vec::new();
    while i < inner.len() && inner[i].contains(b) && !used.contains(&inner[i].other(b).unwrap()) {
        let y = inner[i].other(b).unwrap();
        used.insert(y);
        ys.push(y);
        i += 1;
    }
    let mut extra = 0;
    if mode == PrefixMode::Weak {
        let inside = |p: usize| xs.contains(&p) || ys.contains(&p);
        while i < inner.len() && inside(inner[i].lo()) && inside(inner[i].hi()) {
            extra += 1;
            i += 1;
        }
    }
    EssentialPrefix { a, b, xs, ys, extra }
}

/// Splits the label sequence into essential prefix and suffix. The second
/// anchor always opens the suffix.
pub fn essential_prefix(w: &AnchoredWalk, mode: PrefixMode) -> Result<(EssentialPrefix, Vec<EdgeLabel>, Vec<EdgeLabel>)> {
    if !w.is_repetition_free() {
        return Err(Error::Validation("anchored walk is not repetition-free".into()));
    }
    let l = w.labels();
    let p = scan_prefix(w.anchor(), &l[1..l.len() - 1], mode);
    let cut = p.len();
    Ok((p, l[..cut].to_vec(), l[cut..].to_vec()))
}

fn anchored_hypotheses(w: &AnchoredWalk, y: &Graph) -> Result<()> {
    if y.domination_number() < 2 {
        return param("Y must have domination number at least 2");
    }
    walk_hypotheses(w, y)
}

fn walk_hypotheses(w: &AnchoredWalk, y: &Graph) -> Result<()> {
    if w.walk.start.n() != y.n() {
        return param("walk and Y have different sizes");
    }
    if !w.is_repetition_free() {
        return Err(Error::Validation("anchored walk is not repetition-free".into()));
    }
    validate_walk(y, &w.walk)?;
    Ok(())
}

/// Trivial iff some `z` outside the anchor meets both or neither anchor person.
pub fn classify_prediction(w: &AnchoredWalk, y: &Graph) -> Result<Classification> {
    anchored_hypotheses(w, y)?;
    let (a, b) = (w.anchor().lo(), w.anchor().hi());
    let labels: HashSet<EdgeLabel> = w.labels().iter().copied().collect();
    let has = |p: usize, z: usize| labels.contains(&EdgeLabel::new(p, z).unwrap());
    let trivial = (0..y.n()).filter(|&z| z != a && z != b).any(|z| has(a, z) == has(b, z));
    Ok(if trivial { Classification::Trivial } else { Classification::Complete })
}

/// Output of [`reduce_anchored`].
#[derive(Clone, Debug, Serialize)]
pub struct Reduction {
    pub classification: Classification,
    pub log: MoveLog,
    /// The anchored walk between the original anchors after all moves.
    pub result: AnchoredWalk,
    /// The whole transformed walk, trimmed labels included; replaying the
    /// log on the input yields exactly this.
    pub full: LabeledWalk,
}

pub fn reduce_anchored(w: &AnchoredWalk, y: &Graph) -> Result<Reduction> {
    reduce_anchored_with_cap(w, y, DEFAULT_MOVE_CAP)
}

pub fn reduce_anchored_with_cap(w: &AnchoredWalk, y: &Graph, cap: usize) -> Result<Reduction> {
    anchored_hypotheses(w, y)?;
    run_reduction(w, y, cap)
}

/// Runs the reduction without requiring domination number 2. The result is
/// still checked to be a valid trivial or complete walk; when the procedure
/// gets stuck the error is a parameter error rather than an internal breach.
pub fn attempt_reduction(w: &AnchoredWalk, y: &Graph, cap: usize) -> Result<Reduction> {
    walk_hypotheses(w, y)?;
    run_reduction(w, y, cap).map_err(|e| match e {
        Error::Internal(m) => Error::Parameter(format!("reduction does not apply outside its hypotheses: {m}")),
        e => e,
    })
}

fn run_reduction(w: &AnchoredWalk, y: &Graph, cap: usize) -> Result<Reduction> {
    let mut r = Reducer::new(w, y, cap);
    let (left, right) = (0, (w.labels().len() - 1) as u32);
    r.reduce_top(left, right)?;
    let (lp, rp) = (r.pos(left), r.pos(right));
    let vertices = validate_walk(y, &r.full_walk())?;
    let result = AnchoredWalk {
        walk: LabeledWalk { start: vertices[lp].clone(), labels: r.toks[lp..=rp].iter().map(|t| t.label).collect() },
    };
    let mut log = std::mem::take(&mut r.log);
    log.trimmed = r.toks[..lp].iter().chain(&r.toks[rp + 1..]).map(|t| t.label).collect();
    let classification = if result.is_trivial() {
        Classification::Trivial
    } else if result.is_complete() {
        Classification::Complete
    } else {
        return Err(r.fatal("reduction ended in a walk that is neither trivial nor complete"));
    };
    if !log.respects_discipline() {
        return Err(r.fatal("square insertions outnumber deletions for some label"));
    }
    Ok(Reduction { classification, log, result, full: r.full_walk() })
}

/// Replays a move log on a walk, validating every intermediate walk.
pub fn replay(y: &Graph, w: &LabeledWalk, log: &MoveLog) -> Result<LabeledWalk> {
    log.moves.iter().try_fold(w.clone(), |cur, m| apply_move(y, &cur, m))
}

#[derive(Clone, Copy, Debug)]
struct Tok {
    id: u32,
    label: EdgeLabel,
}

/// Works on the whole walk as a token list so that anchors of nested
/// sub-walks can be tracked by identity while labels move around them.
struct Reducer<'a> {
    y: &'a Graph,
    start: Permutation,
    toks: Vec<Tok>,
    next_id: u32,
    log: MoveLog,
    cap: usize,
}

impl<'a> Reducer<'a> {
    fn new(w: &AnchoredWalk, y: &'a Graph, cap: usize) -> Self {
        let toks: Vec<Tok> = w.labels().iter().enumerate().map(|(i, &label)| Tok { id: i as u32, label }).collect();
        Reducer { y, start: w.walk.start.clone(), next_id: toks.len() as u32, toks, log: MoveLog::default(), cap }
    }

    fn full_walk(&self) -> LabeledWalk {
        LabeledWalk { start: self.start.clone(), labels: self.toks.iter().map(|t| t.label).collect() }
    }

    fn fatal(&self, why: &str) -> Error {
        let walk: Vec<String> = self.toks.iter().map(|t| t.label.to_string()).collect();
        let log = serde_json::to_string(&self.log.moves).unwrap_or_default();
        Error::Internal(format!("{why}; start {}; walk [{}]; moves {log}", self.start, walk.join(",")))
    }

    fn pos(&self, id: u32) -> usize {
        self.toks.iter().position(|t| t.id == id).expect("token present")
    }

    fn label(&self, id: u32) -> EdgeLabel {
        self.toks[self.pos(id)].label
    }

    fn apply(&mut self, m: Move) -> Result<()> {
        if self.log.moves.len() >= self.cap {
            return Err(self.fatal(&format!("move cap {} reached", self.cap)));
        }
        let before = self.full_walk();
        let after = match apply_move(self.y, &before, &m) {
            Ok(w) => w,
            Err(e) => return Err(self.fatal(&e.to_string())),
        };
        match m {
            Move::SquareDelete { i } => {
                *self.log.deletions.entry(self.toks[i].label).or_insert(0) += 1;
                self.toks.drain(i..i + 2);
            }
            Move::SquareInsert { i, label } => {
                *self.log.insertions.entry(label).or_insert(0) += 1;
                let (p, q) = (self.next_id, self.next_id + 1);
                self.next_id += 2;
                self.toks.splice(i..i, [Tok { id: p, label }, Tok { id: q, label }]);
            }
            Move::Commute { i } => self.toks.swap(i, i + 1),
            Move::YangBaxter { i } => self.toks.swap(i, i + 2),
        }
        debug_assert_eq!(after, self.full_walk());
        self.log.moves.push(m);
        Ok(())
    }

    /// Inserts `label` twice before the token at `at`; returns the new ids.
    fn insert_before(&mut self, at: u32, label: EdgeLabel) -> Result<(u32, u32)> {
        let i = self.pos(at);
        self.apply(Move::SquareInsert { i, label })?;
        Ok((self.toks[i].id, self.toks[i + 1].id))
    }

    fn yang_baxter_at(&mut self, first: u32) -> Result<()> {
        let i = self.pos(first);
        self.apply(Move::YangBaxter { i })
    }

    /// Commutes `id` leftwards until it sits immediately after `target`.
    fn move_after(&mut self, id: u32, target: u32) -> Result<()> {
        while self.pos(id) > self.pos(target) + 1 {
            let i = self.pos(id) - 1;
            self.apply(Move::Commute { i })?;
        }
        Ok(())
    }

    /// Commutes `id` leftwards past `left`.
    fn expel_left(&mut self, id: u32, left: u32) -> Result<()> {
        while self.pos(id) > self.pos(left) {
            let i = self.pos(id) - 1;
            self.apply(Move::Commute { i })?;
        }
        Ok(())
    }

    /// Commutes `id` rightwards past `right`.
    fn expel_right(&mut self, id: u32, right: u32) -> Result<()> {
        while self.pos(id) < self.pos(right) {
            let i = self.pos(id);
            self.apply(Move::Commute { i })?;
        }
        Ok(())
    }

    fn delete_pair(&mut self, first: u32) -> Result<()> {
        let i = self.pos(first);
        self.apply(Move::SquareDelete { i })
    }

    fn inner(&self, left: u32, right: u32) -> Result<Vec<Tok>> {
        let (lp, rp) = (self.pos(left), self.pos(right));
        if lp >= rp || self.toks[lp].label != self.toks[rp].label {
            return Err(self.fatal("anchors out of order or unequal"));
        }
        let inner = self.toks[lp + 1..rp].to_vec();
        let mut seen = HashSet::from([self.toks[lp].label]);
        if !inner.iter().all(|t| seen.insert(t.label)) {
            return Err(self.fatal("sub-walk is not repetition-free"));
        }
        Ok(inner)
    }

    /// Token of the label `{p, q}` strictly between `from` and `right`.
    fn find_after(&self, from: u32, right: u32, p: usize, q: usize) -> Result<u32> {
        let target = EdgeLabel::new(p, q)?;
        let (fp, rp) = (self.pos(from), self.pos(right));
        self.toks[fp + 1..rp]
            .iter()
            .find(|t| t.label == target)
            .map(|t| t.id)
            .ok_or_else(|| self.fatal(&format!("expected label {target} later in the walk")))
    }

    /// Reduces the anchored sub-walk between `left` and `right` to a trivial
    /// one, given a person who never swaps with either anchor person there.
    fn reduce_with_barrier(&mut self, left: u32, right: u32) -> Result<()> {
        loop {
            let inner = self.inner(left, right)?;
            let anchor = self.label(left);
            let (a, b) = (anchor.lo(), anchor.hi());
            let barrier = (0..self.y.n()).any(|z| {
                z != a
                    && z != b
                    && !inner.iter().any(|t| t.label == EdgeLabel::new(a, z).unwrap() || t.label == EdgeLabel::new(b, z).unwrap())
            });
            if !barrier {
                return Err(self.fatal(&format!("no person avoids both {} and {}", a + 1, b + 1)));
            }
            let labels: Vec<EdgeLabel> = inner.iter().map(|t| t.label).collect();
            let p = scan_prefix(anchor, &labels, PrefixMode::Strong);
            let cut = p.len() - 1;
            if cut == inner.len() {
                if !inner.is_empty() {
                    return Err(self.fatal("strong suffix is the anchor but the walk is not trivial"));
                }
                return Ok(());
            }
            let uv = inner[cut];
            let x_id = |j: usize| inner[j].id;
            let y_id = |j: usize| inner[p.xs.len() + j].id;
            self.step(left, right, uv, &p, &x_id, &y_id, false)?;
        }
    }

    /// One step of the case analysis on the first suffix label `uv`.
    /// In weak mode the Yang-Baxter cases are handed back to the caller.
    #[allow(clippy::too_many_arguments)]
    fn step(
        &mut self,
        left: u32,
        right: u32,
        uv: Tok,
        p: &EssentialPrefix,
        x_id: &dyn Fn(usize) -> u32,
        y_id: &dyn Fn(usize) -> u32,
        weak: bool,
    ) -> Result<()> {
        let (a, b) = (p.a, p.b);
        let (k, l) = (p.xs.len(), p.ys.len());
        let (u0, v0) = (uv.label.lo(), uv.label.hi());
        let in_x = |q: usize| p.xs.contains(&q);
        let in_y = |q: usize| p.ys.contains(&q);
        let in_p = |q: usize| q == a || q == b || in_x(q) || in_y(q);
        if !in_p(u0) && !in_p(v0) {
            return self.expel_left(uv.id, left);
        }
        if !(in_x(u0) || in_y(u0) || in_x(v0) || in_y(v0)) {
            if uv.label.contains(a) {
                let target = if k > 0 { x_id(k - 1) } else { left };
                return self.move_after(uv.id, target);
            }
            let target = if l > 0 { y_id(l - 1) } else if k > 0 { x_id(k - 1) } else { left };
            return self.move_after(uv.id, target);
        }
        if weak {
            return Err(self.fatal("label meets the prefix block outside the cases covered"));
        }
        if in_y(u0) || in_y(v0) {
            let t = (0..l).rev().find(|&j| uv.label.contains(p.ys[j])).unwrap();
            let u = uv.label.other(p.ys[t]).unwrap();
            if t >= 1 {
                if u != p.ys[t - 1] {
                    return Err(self.fatal("expected the label y_{t-1} y_t"));
                }
                self.move_after(uv.id, y_id(t))?;
                self.yang_baxter_at(y_id(t - 1))?;
                return self.expel_left(uv.id, left);
            }
            if k == 0 {
                if u != a {
                    return Err(self.fatal("expected the label a y_1"));
                }
                self.move_after(uv.id, y_id(0))?;
                return self.yang_baxter_at(left);
            }
            if u != p.xs[0] {
                return Err(self.fatal("expected the label x_1 y_1"));
            }
            let (by1, ax1) = (y_id(0), x_id(0));
            self.move_after(by1, ax1)?;
            self.move_after(uv.id, by1)?;
            let (_, c2) = self.insert_before(by1, EdgeLabel::new(b, p.xs[0])?)?;
            self.yang_baxter_at(left)?;
            self.yang_baxter_at(c2)?;
            let i = self.pos(left);
            self.apply(Move::Commute { i })?;
            let mut prev = left;
            for j in 1..k {
                self.move_after(x_id(j), prev)?;
                prev = x_id(j);
            }
            let orig = self.find_after(c2, right, b, p.xs[0])?;
            self.reduce_with_barrier(c2, orig)?;
            return self.delete_pair(c2);
        }
        // Mirror of the previous branch with the roles of a/b and x/y exchanged.
        let t = (0..k).rev().find(|&j| uv.label.contains(p.xs[j])).unwrap();
        let u = uv.label.other(p.xs[t]).unwrap();
        if t >= 1 {
            if u != p.xs[t - 1] {
                return Err(self.fatal("expected the label x_{t-1} x_t"));
            }
            self.move_after(uv.id, x_id(t))?;
            self.yang_baxter_at(x_id(t - 1))?;
            return self.expel_left(uv.id, left);
        }
        if l == 0 && u == b {
            self.move_after(uv.id, x_id(0))?;
            return self.yang_baxter_at(left);
        }
        Err(self.fatal("expected the label b x_1"))
    }

    /// Top-level reduction: a barrier person if one exists, else the weak-prefix loop.
    fn reduce_top(&mut self, left: u32, right: u32) -> Result<()> {
        let anchor = self.label(left);
        let (a, b) = (anchor.lo(), anchor.hi());
        let inner = self.inner(left, right)?;
        let has = |z: usize| {
            let (az, bz) = (EdgeLabel::new(a, z).unwrap(), EdgeLabel::new(b, z).unwrap());
            (inner.iter().any(|t| t.label == az), inner.iter().any(|t| t.label == bz))
        };
        if (0..self.y.n()).any(|z| z != a && z != b && has(z) == (false, false)) {
            return self.reduce_with_barrier(left, right);
        }
        loop {
            let inner = self.inner(left, right)?;
            let labels: Vec<EdgeLabel> = inner.iter().map(|t| t.label).collect();
            let p = scan_prefix(anchor, &labels, PrefixMode::Weak);
            let (k, l) = (p.xs.len(), p.ys.len());
            let cut = p.len() - 1;
            if cut == inner.len() {
                let extras: Vec<u32> = inner[k + l..].iter().map(|t| t.id).collect();
                for id in extras.into_iter().rev() {
                    self.expel_right(id, right)?;
                }
                return Ok(());
            }
            let uv = inner[cut];
            if k >= 1 && uv.label.contains(b) && p.xs.contains(&uv.label.other(b).unwrap_or(usize::MAX)) {
                return self.clear_opener(left, right, &inner, &p, uv, true);
            }
            if l >= 1 && uv.label.contains(a) && p.ys.contains(&uv.label.other(a).unwrap_or(usize::MAX)) {
                return self.clear_opener(left, right, &inner, &p, uv, false);
            }
            let x_id = |j: usize| inner[j].id;
            let y_id = |j: usize| inner[k + j].id;
            self.step(left, right, uv, &p, &x_id, &y_id, true)?;
        }
    }

    /// With `first`, the suffix opens with `b x_i`; otherwise with `a y_i`.
    fn clear_opener(&mut self, left: u32, right: u32, inner: &[Tok], p: &EssentialPrefix, opener: Tok, first: bool) -> Result<()> {
        let (a, b) = (p.a, p.b);
        let k = p.xs.len();
        let far = if first { b } else { a };
        let u = opener.label.other(far).unwrap();
        let side: Vec<u32> = if first {
            inner[..k].iter().map(|t| t.id).collect()
        } else {
            inner[k..k + p.ys.len()].iter().map(|t| t.id).collect()
        };
        let partners: &[usize] = if first { &p.xs } else { &p.ys };
        let i = partners.iter().position(|&q| q == u).unwrap();
        let near_u = side[i];
        let mut pending: Vec<(u32, usize)> = Vec::new();
        for j in (0..i).rev() {
            let prev = side[j];
            self.move_after(near_u, prev)?;
            let (c1, c2) = self.insert_before(prev, EdgeLabel::new(partners[j], u)?)?;
            self.yang_baxter_at(c2)?;
            self.expel_left(c1, left)?;
            pending.push((c2, partners[j]));
        }
        self.move_after(near_u, left)?;
        for (c2, q) in pending.into_iter().rev() {
            let orig = self.find_after(c2, right, q, u)?;
            self.reduce_with_barrier(c2, orig)?;
            self.delete_pair(c2)?;
        }
        let (_, d2) = self.insert_before(left, EdgeLabel::new(far, u)?)?;
        self.yang_baxter_at(d2)?;
        let orig = self.find_after(d2, right, far, u)?;
        self.reduce_with_barrier(d2, orig)?;
        self.delete_pair(d2)?;
        self.reduce_with_barrier(left, right)
    }
}

/// Seeded non-backtracking random walks in `FS(Cycle_n, Y)`, scanned for
/// repetition-free anchored factors. `budget` counts walk steps.
pub fn find_anchored_walks(y: &Graph, n: usize, budget: usize, seed: u64) -> Result<Vec<AnchoredWalk>> {
    if y.n() != n {
        return param(format!("Y has {} vertices, expected {n}", y.n()));
    }
    if n < 3 {
        return param("walks live in FS(Cycle_n, Y) with n >= 3");
    }
    if y.domination_number() < 2 {
        return param("Y must have domination number at least 2");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let segment = 10 * n;
    let mut spent = 0;
    while spent < budget {
        let mut arrangement: Vec<usize> = (0..n).collect();
        arrangement.shuffle(&mut rng);
        let start = Permutation::new(arrangement.clone())?;
        let mut labels: Vec<EdgeLabel> = Vec::new();
        let mut trail = vec![start.clone()];
        let mut last_chair: Option<usize> = None;
        while labels.len() < segment && spent < budget {
            spent += 1;
            let moves: Vec<usize> = (0..n)
                .filter(|&c| y.has_edge(arrangement[c], arrangement[(c + 1) % n]))
                .collect();
            let fresh: Vec<usize> = moves.iter().copied().filter(|&c| Some(c) != last_chair).collect();
            let pick = match (fresh.is_empty(), moves.is_empty()) {
                (false, _) => fresh[rng.gen_range(0..fresh.len())],
                (true, false) => moves[0],
                (true, true) => break,
            };
            let d = (pick + 1) % n;
            labels.push(EdgeLabel::new(arrangement[pick], arrangement[d])?);
            arrangement.swap(pick, d);
            trail.push(Permutation::new(arrangement.clone())?);
            last_chair = Some(pick);
        }
        // Factors labels[i..=j] with labels[i] == labels[j], all others distinct.
        let mut last: BTreeMap<EdgeLabel, usize> = BTreeMap::new();
        let mut window_start = 0;
        for j in 0..labels.len() {
            if let Some(&i) = last.get(&labels[j]) {
                if i + 1 >= window_start && j - i >= 2 {
                    let walk = LabeledWalk { start: trail[i].clone(), labels: labels[i..=j].to_vec() };
                    if seen.insert(walk.clone()) {
                        out.push(AnchoredWalk { walk });
                    }
                }
                window_start = window_start.max(i + 1);
            }
            last.insert(labels[j], j);
        }
    }
    Ok(out)
}

/// The complete walk `ab, a u_1, ..., b u_{n-2}, ab` with `a` moving clockwise
/// past `ahead` and `b` anticlockwise past the rest, if `Y` allows it.
pub fn complete_walk(y: &Graph, a: usize, b: usize, ahead: &[usize]) -> Result<AnchoredWalk> {
    let n = y.n();
    let behind: Vec<usize> = (0..n).filter(|&z| z != a && z != b && !ahead.contains(&z)).collect();
    let mut arrangement = vec![a, b];
    arrangement.extend(ahead);
    arrangement.extend(behind.iter().rev());
    let mut labels = vec![EdgeLabel::new(a, b)?];
    for &u in ahead {
        labels.push(EdgeLabel::new(a, u)?);
    }
    for &u in &behind {
        labels.push(EdgeLabel::new(b, u)?);
    }
    labels.push(EdgeLabel::new(a, b)?);
    let w = AnchoredWalk::new(LabeledWalk { start: Permutation::new(arrangement)?, labels })?;
    validate_walk(y, &w.walk)?;
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_family;
    use proptest::prelude::*;

    fn fam(s: &str) -> Graph {
        make_family(&s.parse().unwrap()).unwrap()
    }

    fn lab(s: &str) -> Vec<EdgeLabel> {
        s.split(',').map(|t| t.parse().unwrap()).collect()
    }

    fn walk(start: &str, labels: &str) -> LabeledWalk {
        LabeledWalk { start: Permutation::parse_one_line(start).unwrap(), labels: lab(labels) }
    }

    #[test]
    fn validate_examples() {
        let k5 = fam("complete:5");
        let empty = LabeledWalk { start: Permutation::identity(5), labels: vec![] };
        assert_eq!(validate_walk(&k5, &empty).unwrap().len(), 1);
        let back = validate_walk(&k5, &walk("1,2,3,4,5", "12,12")).unwrap();
        assert_eq!(back[0], back[2]);
        let wrap = validate_walk(&k5, &walk("1,2,3,4,5", "15")).unwrap();
        assert_eq!(wrap[1].to_string(), "5,2,3,4,1");
        let err = validate_walk(&k5, &walk("1,2,3,4,5", "12,14")).unwrap_err();
        assert!(matches!(&err, Error::Validation(m) if m.contains("step 1")), "{err}");
        let err = validate_walk(&fam("path:5"), &walk("1,2,3,4,5", "12,12,15")).unwrap_err();
        assert!(matches!(&err, Error::Validation(m) if m.contains("step 2") && m.contains("in Y")), "{err}");
    }

    #[test]
    fn move_examples() {
        let k5 = fam("complete:5");
        let w = walk("1,2,3,4,5", "12,13,23");
        let yb = apply_move(&k5, &w, &Move::YangBaxter { i: 0 }).unwrap();
        assert_eq!(yb.labels, lab("23,13,12"));
        assert_eq!(apply_move(&k5, &yb, &Move::YangBaxter { i: 0 }).unwrap(), w);
        let ins = apply_move(&k5, &w, &Move::SquareInsert { i: 1, label: "45".parse().unwrap() }).unwrap();
        assert_eq!(ins.labels, lab("12,45,45,13,23"));
        assert_eq!(apply_move(&k5, &ins, &Move::SquareDelete { i: 1 }).unwrap(), w);
        assert!(matches!(apply_move(&k5, &w, &Move::Commute { i: 0 }), Err(Error::Move(_))));
        let c = walk("1,2,3,4,5", "12,45");
        let swapped = apply_move(&k5, &c, &Move::Commute { i: 0 }).unwrap();
        assert_eq!(swapped.labels, lab("45,12"));
        assert!(matches!(
            apply_move(&k5, &w, &Move::SquareInsert { i: 0, label: "13".parse().unwrap() }),
            Err(Error::Move(_))
        ));
    }

    #[test]
    fn prefixes() {
        // a=1, b=2, x1=3, y1=4; the final swap closes up only on a 4-cycle.
        let w = AnchoredWalk::new(walk("4,1,2,3", "12,13,24,34,12")).unwrap();
        validate_walk(&fam("complete:4"), &w.walk).unwrap();
        let (sp, _, ss) = essential_prefix(&w, PrefixMode::Strong).unwrap();
        assert_eq!((sp.xs.clone(), sp.ys.clone()), (vec![2], vec![3]));
        assert_eq!(ss, lab("34,12"));
        let (_, _, ws) = essential_prefix(&w, PrefixMode::Weak).unwrap();
        assert_eq!(ws, lab("12"));
        let t = AnchoredWalk::new(walk("1,2,3,4", "12,12")).unwrap();
        let (_, pre, suf) = essential_prefix(&t, PrefixMode::Strong).unwrap();
        assert_eq!((pre.len(), suf.len()), (1, 1));
        let rep = AnchoredWalk::new(walk("1,2,3,4,5", "12,13,13,12")).unwrap();
        assert!(matches!(essential_prefix(&rep, PrefixMode::Strong), Err(Error::Validation(_))));
    }

    #[test]
    fn classification_examples() {
        let c6 = fam("cycle:6");
        let k5 = fam("complete:5");
        assert!(classify_prediction(&AnchoredWalk::new(walk("1,2,3,4,5", "12,12")).unwrap(), &k5).is_err());
        let y = fam("co(cycle:6)");
        let t = AnchoredWalk::new(walk("1,3,2,4,5,6", "13,13")).unwrap();
        assert_eq!(classify_prediction(&t, &y).unwrap(), Classification::Trivial);
        let _ = c6;
    }

    #[test]
    fn yang_baxter_reduction() {
        let k5 = fam("complete:5");
        let w = AnchoredWalk::new(walk("1,2,3,4,5", "12,13,23,12")).unwrap();
        // K5 has domination number 1, so use a graph where {1,2,3} are
        // pairwise friends but nobody dominates.
        assert!(matches!(reduce_anchored(&w, &k5), Err(Error::Parameter(_))));
        let forced = attempt_reduction(&w, &k5, DEFAULT_MOVE_CAP).unwrap();
        assert_eq!(forced.classification, Classification::Trivial);
        assert_eq!(forced.log.moves, vec![Move::YangBaxter { i: 0 }]);
        let y = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(y.domination_number() >= 2);
        let r = reduce_anchored(&w, &y).unwrap();
        assert_eq!(r.classification, Classification::Trivial);
        assert_eq!(r.log.moves, vec![Move::YangBaxter { i: 0 }]);
        assert_eq!(r.result.labels(), lab("12,12").as_slice());
        assert_eq!(r.log.trimmed, lab("23,13"));
        assert_eq!(replay(&y, &w.walk, &r.log).unwrap(), r.full);
    }

    #[test]
    fn trivial_walk_reduces_to_itself() {
        let y = fam("cycle:5");
        let w = AnchoredWalk::new(walk("1,2,3,4,5", "12,12")).unwrap();
        let r = reduce_anchored(&w, &y).unwrap();
        assert_eq!(r.classification, Classification::Trivial);
        assert!(r.log.moves.is_empty());
        assert_eq!(r.result, w);
    }

    #[test]
    fn complete_walks_stay_complete() {
        let y = fam("co(cycle:6)");
        // In co-C6 the friends 1 and 4 dominate.
        let w = complete_walk(&y, 0, 3, &[2, 4]).unwrap();
        assert!(w.is_complete());
        assert_eq!(classify_prediction(&w, &y).unwrap(), Classification::Complete);
        let r = reduce_anchored(&w, &y).unwrap();
        assert_eq!(r.classification, Classification::Complete);
        assert!(r.result.is_complete());
    }

    fn check_reduction(y: &Graph, w: &AnchoredWalk) -> std::result::Result<(), TestCaseError> {
        let r = reduce_anchored(w, y).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(r.classification, classify_prediction(w, y).unwrap());
        prop_assert!(r.log.respects_discipline());
        prop_assert_eq!(&replay(y, &w.walk, &r.log).unwrap(), &r.full);
        if r.classification == Classification::Complete {
            let anchor = r.result.anchor();
            prop_assert!(y.is_dominating(crate::graph::mask_of(&[anchor.lo(), anchor.hi()])));
        }
        Ok(())
    }

    #[test]
    fn generator_postconditions() {
        let y = fam("co(cycle:6)");
        assert!(find_anchored_walks(&y, 6, 0, 1).unwrap().is_empty());
        let walks = find_anchored_walks(&y, 6, 2000, 7).unwrap();
        assert!(!walks.is_empty());
        for w in &walks {
            validate_walk(&y, &w.walk).unwrap();
            assert!(w.is_repetition_free());
        }
        assert_eq!(walks, find_anchored_walks(&y, 6, 2000, 7).unwrap());
        assert!(find_anchored_walks(&fam("complete:5"), 5, 10, 1).is_err());
    }

    #[test]
    fn random_corpus_reduces() {
        for (spec, n) in [("co(cycle:5)", 5), ("cycle:6", 6), ("co(cycle:6)", 6), ("co(path:7)", 7)] {
            let y = fam(spec);
            for w in find_anchored_walks(&y, n, 3000, 11).unwrap() {
                check_reduction(&y, &w).unwrap();
            }
        }
    }

    fn arb_walk() -> impl Strategy<Value = (LabeledWalk, Vec<(u8, u8)>)> {
        (Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(), proptest::collection::vec((0u8..6, 0u8..6), 0..12))
            .prop_map(|(p, steps)| {
                let y = fam("complete:6");
                let mut labels = Vec::new();
                let mut arr = p.clone();
                for &(c, _) in &steps {
                    let (c, d) = (c as usize, (c as usize + 1) % 6);
                    labels.push(EdgeLabel::new(arr[c], arr[d]).unwrap());
                    arr.swap(c, d);
                }
                let w = LabeledWalk { start: Permutation::new(p).unwrap(), labels };
                validate_walk(&y, &w).unwrap();
                (w, steps)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn moves_preserve_endpoints((w, picks) in arb_walk()) {
            let y = fam("complete:6");
            let end = validate_walk(&y, &w).unwrap().pop().unwrap();
            let mut cur = w;
            for (i, kind) in picks {
                let len = cur.labels.len();
                let i = i as usize % (len + 1);
                let m = match kind % 3 {
                    0 => Move::Commute { i },
                    1 => Move::YangBaxter { i },
                    _ => Move::SquareDelete { i },
                };
                if let Ok(next) = apply_move(&y, &cur, &m) {
                    prop_assert_eq!(validate_walk(&y, &next).unwrap().pop().unwrap(), end.clone());
                    if let Move::Commute { .. } | Move::YangBaxter { .. } = m {
                        prop_assert_eq!(&apply_move(&y, &next, &m).unwrap(), &cur);
                    }
                    cur = next;
                }
            }
        }

        #[test]
        fn insert_then_delete_is_identity((w, picks) in arb_walk()) {
            let y = fam("complete:6");
            let verts = validate_walk(&y, &w).unwrap();
            for (i, c) in picks {
                let i = i as usize % verts.len();
                let c = c as usize;
                let s = &verts[i];
                let label = EdgeLabel::new(s.get(c), s.get((c + 1) % 6)).unwrap();
                let ins = apply_move(&y, &w, &Move::SquareInsert { i, label }).unwrap();
                prop_assert_eq!(&apply_move(&y, &ins, &Move::SquareDelete { i }).unwrap(), &w);
            }
        }
    }
}
