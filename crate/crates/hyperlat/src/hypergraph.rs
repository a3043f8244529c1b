//! Hypergraphs on the ground set `[n] = {1, …, n}`.
//!
//! Every hypergraph here contains all singletons, and edges are stored as
//! bitmasks in a canonical order (sorted by minimum, then maximum, then
//! lexicographic membership). Interval hypergraphs are a refinement where
//! every edge is a contiguous range `[lo, hi]`; the structural predicates
//! that control lattice properties of the orientation poset live on that
//! refinement.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use serde::Deserialize;
use thiserror::Error;

/// Vertices are 1-based and small; `u8` is plenty under the ground-set cap.
pub type Vertex = u8;

/// Default cap on the ground-set size. Keeps every edge in a `u16` bitmask
/// and orientation tuples in a handful of machine words.
pub const DEFAULT_MAX_GROUND_SET: u8 = 12;

/// Absolute capacity of the bitmask representation.
const BITMASK_CAPACITY: u8 = 16;

/// Default cap for exhaustive enumeration of interval hypergraphs.
pub const DEFAULT_ENUMERATION_BOUND: u8 = 5;

/// Configured ground-set cap: `HYPERLAT_MAX_N` overrides the default, and is
/// clamped to what the bitmask representation can hold.
pub fn max_ground_set() -> u8 {
    match std::env::var("HYPERLAT_MAX_N") {
        Ok(raw) => match raw.trim().parse::<u8>() {
            Ok(n) if n >= 1 => n.min(BITMASK_CAPACITY),
            _ => DEFAULT_MAX_GROUND_SET,
        },
        Err(_) => DEFAULT_MAX_GROUND_SET,
    }
}

#[derive(Debug, Error)]
pub enum HypergraphError {
    #[error("ground-set size {n} out of bounds 1..={max}")]
    GroundSetSize { n: usize, max: u8 },
    #[error("empty hyperedge")]
    EmptyEdge,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: u8 },
    #[error("invalid interval [{lo},{hi}]")]
    InvalidInterval { lo: Vertex, hi: Vertex },
    #[error("edge {0} is not an interval")]
    NotAnInterval(String),
    #[error("enumeration of interval hypergraphs on [{n}] exceeds the bound {bound}")]
    EnumerationBound { n: u8, bound: u8 },
    #[error("internal node of a plane tree needs at least two children, got {0}")]
    TreeArity(usize),
    #[error("hypergraph JSON must carry at most one of \"edges\" and \"intervals\"")]
    AmbiguousJson,
    #[error("invalid hypergraph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("edge description {0:?} is not a digit string over 1..=9")]
    BadDigits(String),
}

/// A subset of `[n]`, stored as a bitmask with bit `v - 1` for vertex `v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet(u16);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1 << (v - 1))
    }

    /// The interval `{lo, lo+1, …, hi}`; requires `lo <= hi`.
    pub fn interval(lo: Vertex, hi: Vertex) -> Self {
        debug_assert!(1 <= lo && lo <= hi);
        let width = hi - lo + 1;
        VertexSet(((1u32 << width) - 1) as u16) << (lo - 1)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, v: Vertex) -> bool {
        v >= 1 && self.0 & (1 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1 << (v - 1);
    }

    pub fn min_vertex(self) -> Vertex {
        debug_assert!(!self.is_empty());
        self.0.trailing_zeros() as Vertex + 1
    }

    pub fn max_vertex(self) -> Vertex {
        debug_assert!(!self.is_empty());
        16 - self.0.leading_zeros() as Vertex
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn inter(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn without(self, v: Vertex) -> Self {
        VertexSet(self.0 & !(1 << (v - 1)))
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// True when the members form a contiguous range.
    pub fn is_contiguous(self) -> bool {
        if self.0 == 0 {
            return false;
        }
        let shifted = self.0 >> self.0.trailing_zeros();
        shifted & (shifted + 1) == 0
    }

    /// Ascending iterator over members.
    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as Vertex + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Elementwise image under `v ↦ n - v + 1`.
    pub fn reflect(self, n: Vertex) -> Self {
        let mut out = VertexSet::EMPTY;
        for v in self.iter() {
            out.insert(n - v + 1);
        }
        out
    }

    /// Canonical edge order: by minimum, then maximum, then lexicographic
    /// comparison of the ascending member sequences.
    pub fn canonical_cmp(self, other: Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        (self.min_vertex(), self.max_vertex())
            .cmp(&(other.min_vertex(), other.max_vertex()))
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl std::ops::Shl<u8> for VertexSet {
    type Output = VertexSet;
    fn shl(self, rhs: u8) -> VertexSet {
        VertexSet(self.0 << rhs)
    }
}

impl fmt::Display for VertexSet {
    /// Digit-string form (`123` for `{1,2,3}`) when all members are < 10,
    /// braced list otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        if self.max_vertex() <= 9 {
            for v in self.iter() {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let members: Vec<String> = self.iter().map(|v| v.to_string()).collect();
            write!(f, "{{{}}}", members.join(","))
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A contiguous edge `[lo, hi]` of an interval hypergraph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Interval {
    pub lo: Vertex,
    pub hi: Vertex,
}

#[allow(clippy::len_without_is_empty)] // an interval is never empty
impl Interval {
    pub fn new(lo: Vertex, hi: Vertex) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn len(self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn set(self) -> VertexSet {
        VertexSet::interval(self.lo, self.hi)
    }

    pub fn is_singleton(self) -> bool {
        self.lo == self.hi
    }

    pub fn reflect(self, n: Vertex) -> Self {
        Interval::new(n - self.hi + 1, n - self.lo + 1)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// A hypergraph on `[n]` containing all singletons, edges in canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: Vertex,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Build a hypergraph from explicit edges. Singletons are inserted
    /// automatically and duplicates collapse.
    pub fn new<E: AsRef<[Vertex]>>(n: usize, edges: &[E]) -> Result<Self, HypergraphError> {
        let max = max_ground_set();
        if n == 0 || n > max as usize {
            return Err(HypergraphError::GroundSetSize { n, max });
        }
        let n = n as Vertex;
        let mut all: Vec<VertexSet> = (1..=n).map(VertexSet::singleton).collect();
        for edge in edges {
            let members = edge.as_ref();
            if members.is_empty() {
                return Err(HypergraphError::EmptyEdge);
            }
            let mut set = VertexSet::EMPTY;
            for &v in members {
                if v == 0 || v > n {
                    return Err(HypergraphError::VertexOutOfRange {
                        vertex: v as usize,
                        n,
                    });
                }
                set.insert(v);
            }
            all.push(set);
        }
        all.sort_by(|a, b| a.canonical_cmp(*b));
        all.dedup();
        Ok(Hypergraph { n, edges: all })
    }

    /// Convenience constructor from digit strings, e.g. `["123", "134"]`.
    pub fn from_digits(n: usize, edges: &[&str]) -> Result<Self, HypergraphError> {
        let mut parsed: Vec<Vec<Vertex>> = Vec::with_capacity(edges.len());
        for text in edges {
            let mut members = Vec::with_capacity(text.len());
            for c in text.chars() {
                match c.to_digit(10) {
                    Some(d) if d >= 1 => members.push(d as Vertex),
                    _ => return Err(HypergraphError::BadDigits(text.to_string())),
                }
            }
            parsed.push(members);
        }
        Hypergraph::new(n, &parsed)
    }

    pub fn n(&self) -> Vertex {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> VertexSet {
        self.edges[index]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Position of an edge in the canonical order.
    pub fn edge_index(&self, set: VertexSet) -> Option<usize> {
        self.edges
            .binary_search_by(|e| e.canonical_cmp(set))
            .ok()
    }

    /// Indices of edges with at least two vertices, in canonical order.
    pub fn non_singleton_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(|&k| self.edges[k].len() > 1)
    }

    /// Elementwise image under `v ↦ n - v + 1`; an involution.
    pub fn reflect(&self) -> Hypergraph {
        let mut edges: Vec<VertexSet> = self.edges.iter().map(|e| e.reflect(self.n)).collect();
        edges.sort_by(|a, b| a.canonical_cmp(*b));
        Hypergraph { n: self.n, edges }
    }

    pub fn is_interval_hypergraph(&self) -> bool {
        self.edges.iter().all(|e| e.is_contiguous())
    }

    /// The interval view, if every edge is contiguous.
    pub fn as_interval(&self) -> Option<IntervalHypergraph> {
        if !self.is_interval_hypergraph() {
            return None;
        }
        Some(IntervalHypergraph::from_hypergraph(self.clone()))
    }

    /// Parse the JSON input format: `{"n": 4, "edges": [[1,2,3],[1,3,4]]}` or
    /// `{"n": 4, "intervals": [[1,3],[2,4]]}`. Singletons are implicit.
    pub fn from_json(text: &str) -> Result<Self, HypergraphError> {
        #[derive(Deserialize)]
        struct File {
            n: usize,
            #[serde(default)]
            edges: Option<Vec<Vec<Vertex>>>,
            #[serde(default)]
            intervals: Option<Vec<(Vertex, Vertex)>>,
        }
        let file: File = serde_json::from_str(text)?;
        match (file.edges, file.intervals) {
            (Some(_), Some(_)) => Err(HypergraphError::AmbiguousJson),
            (Some(edges), None) => Hypergraph::new(file.n, &edges),
            (None, Some(intervals)) => {
                Ok(IntervalHypergraph::new(file.n, &intervals)?.into_hypergraph())
            }
            (None, None) => Hypergraph::new::<[Vertex; 0]>(file.n, &[]),
        }
    }

    /// JSON in the `edges` form, non-singleton edges only.
    pub fn to_json(&self) -> String {
        let edges: Vec<Vec<Vertex>> = self
            .non_singleton_indices()
            .map(|k| self.edges[k].iter().collect())
            .collect();
        serde_json::json!({ "n": self.n, "edges": edges }).to_string()
    }

    /// Non-singleton edges in display form, e.g. `{123, 134}`.
    pub fn non_singleton_summary(&self) -> String {
        let parts: Vec<String> = self
            .non_singleton_indices()
            .map(|k| self.edges[k].to_string())
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, {})", self.n, self)
    }
}

/// A hypergraph whose every edge is an interval, with the spans cached in
/// canonical order alongside the generic representation.
#[derive(Clone, PartialEq, Eq)]
pub struct IntervalHypergraph {
    hg: Hypergraph,
    spans: Vec<Interval>,
    /// `span_table[lo - 1]` has bit `hi - 1` set when `[lo, hi]` is an edge.
    span_table: Vec<u16>,
}

impl IntervalHypergraph {
    pub fn new(n: usize, intervals: &[(Vertex, Vertex)]) -> Result<Self, HypergraphError> {
        let max = max_ground_set();
        if n == 0 || n > max as usize {
            return Err(HypergraphError::GroundSetSize { n, max });
        }
        for &(lo, hi) in intervals {
            if lo == 0 || lo > hi || hi > n as Vertex {
                return Err(HypergraphError::InvalidInterval { lo, hi });
            }
        }
        let edges: Vec<Vec<Vertex>> = intervals
            .iter()
            .map(|&(lo, hi)| (lo..=hi).collect())
            .collect();
        let hg = Hypergraph::new(n, &edges)?;
        Ok(IntervalHypergraph::from_hypergraph(hg))
    }

    /// Caller guarantees every edge is contiguous.
    fn from_hypergraph(hg: Hypergraph) -> Self {
        debug_assert!(hg.is_interval_hypergraph());
        let spans: Vec<Interval> = hg
            .edges
            .iter()
            .map(|e| Interval::new(e.min_vertex(), e.max_vertex()))
            .collect();
        let mut span_table = vec![0u16; hg.n as usize];
        for s in &spans {
            span_table[(s.lo - 1) as usize] |= 1 << (s.hi - 1);
        }
        IntervalHypergraph {
            hg,
            spans,
            span_table,
        }
    }

    /// All intervals of `[n]`: the richest instance on its ground set.
    pub fn all_intervals(n: usize) -> Result<Self, HypergraphError> {
        let mut spans = Vec::new();
        for lo in 1..=n as Vertex {
            for hi in lo..=n as Vertex {
                spans.push((lo, hi));
            }
        }
        IntervalHypergraph::new(n, &spans)
    }

    /// All initial intervals `[1, i]`.
    pub fn initial_intervals(n: usize) -> Result<Self, HypergraphError> {
        let spans: Vec<(Vertex, Vertex)> = (1..=n as Vertex).map(|i| (1, i)).collect();
        IntervalHypergraph::new(n, &spans)
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hg
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.hg
    }

    /// All edge spans in canonical order, singletons included.
    pub fn spans(&self) -> &[Interval] {
        &self.spans
    }

    pub fn span(&self, index: usize) -> Interval {
        self.spans[index]
    }

    pub fn contains_span(&self, lo: Vertex, hi: Vertex) -> bool {
        self.span_table[(lo - 1) as usize] & (1 << (hi - 1)) != 0
    }

    pub fn reflect(&self) -> IntervalHypergraph {
        IntervalHypergraph::from_hypergraph(self.hg.reflect())
    }

    /// JSON in the `intervals` form, non-singleton spans only.
    pub fn to_json(&self) -> String {
        let intervals: Vec<(Vertex, Vertex)> = self
            .non_singleton_spans()
            .map(|s| (s.lo, s.hi))
            .collect();
        serde_json::json!({ "n": self.n(), "intervals": intervals }).to_string()
    }

    pub fn non_singleton_spans(&self) -> impl Iterator<Item = Interval> + '_ {
        self.spans.iter().copied().filter(|s| !s.is_singleton())
    }

    /// Closed under intersection: overlapping edges intersect inside the
    /// edge set.
    pub fn intersection_closed(&self) -> bool {
        let spans = &self.spans;
        for (k, a) in spans.iter().enumerate() {
            for b in &spans[k + 1..] {
                let lo = a.lo.max(b.lo);
                let hi = a.hi.min(b.hi);
                if lo <= hi && !self.contains_span(lo, hi) {
                    return false;
                }
            }
        }
        true
    }

    /// Every crossing pair intersects inside the edge set, and the
    /// intersection is initial or final in every edge containing it.
    pub fn is_distributive_hypergraph(&self) -> bool {
        let spans = &self.spans;
        for (k, a) in spans.iter().enumerate() {
            for b in &spans[k + 1..] {
                let lo = a.lo.max(b.lo);
                let hi = a.hi.min(b.hi);
                if lo > hi {
                    continue;
                }
                // Skip nested pairs.
                if (a.lo <= b.lo && b.hi <= a.hi) || (b.lo <= a.lo && a.hi <= b.hi) {
                    continue;
                }
                if !self.contains_span(lo, hi) {
                    return false;
                }
                for c in spans.iter() {
                    if c.lo <= lo && hi <= c.hi && c.lo != lo && c.hi != hi {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Join semidistributivity at the hypergraph level: intersection closure
    /// plus a witness edge for every interlocking quadruple.
    ///
    /// The witness condition is `v < s` and `s' <= v' < t'`: the lower bound
    /// on `v'` is inclusive, which is what the exhaustive cross-check against
    /// the lattice-level oracle confirms on every instance with n <= 5.
    pub fn is_join_sd_hypergraph(&self) -> bool {
        if !self.intersection_closed() {
            return false;
        }
        let spans = &self.spans;
        for r in spans.iter() {
            for s in spans.iter() {
                // r < s <= r' < s'
                if !(r.lo < s.lo && s.lo <= r.hi && r.hi < s.hi) {
                    continue;
                }
                for t in spans.iter() {
                    // r < t <= s' < t'
                    if !(r.lo < t.lo && t.lo <= s.hi && s.hi < t.hi) {
                        continue;
                    }
                    for u in spans.iter() {
                        // u < min(s, t), s' < u'
                        if !(u.lo < s.lo.min(t.lo) && s.hi < u.hi) {
                            continue;
                        }
                        let witness = spans
                            .iter()
                            .any(|v| v.lo < s.lo && s.hi <= v.hi && v.hi < t.hi);
                        if !witness {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Meet semidistributivity, by symmetry of the reflection.
    pub fn is_meet_sd_hypergraph(&self) -> bool {
        self.reflect().is_join_sd_hypergraph()
    }

    /// `[i,k]` in the edge set implies `[i,j]` for each `i < j < k`.
    pub fn initial_subinterval_closed(&self) -> bool {
        self.spans.iter().all(|s| {
            (s.lo + 1..s.hi).all(|j| self.contains_span(s.lo, j))
        })
    }

    /// `[i,k]` in the edge set implies `[j,k]` for each `i < j < k`.
    pub fn final_subinterval_closed(&self) -> bool {
        self.spans.iter().all(|s| {
            (s.lo + 1..s.hi).all(|j| self.contains_span(j, s.hi))
        })
    }

    pub fn subinterval_closed(&self) -> bool {
        self.initial_subinterval_closed() && self.final_subinterval_closed()
    }

    /// Any two edges are nested or disjoint.
    pub fn is_schroeder(&self) -> bool {
        let spans = &self.spans;
        for (k, a) in spans.iter().enumerate() {
            for b in &spans[k + 1..] {
                let overlap = a.lo.max(b.lo) <= a.hi.min(b.hi);
                let nested =
                    (a.lo <= b.lo && b.hi <= a.hi) || (b.lo <= a.lo && a.hi <= b.hi);
                if overlap && !nested {
                    return false;
                }
            }
        }
        true
    }

    /// Maximal edges under inclusion, in canonical order.
    pub fn maximal_spans(&self) -> Vec<Interval> {
        self.spans
            .iter()
            .copied()
            .filter(|a| {
                !self
                    .spans
                    .iter()
                    .any(|b| b != a && b.lo <= a.lo && a.hi <= b.hi)
            })
            .collect()
    }
}

impl Deref for IntervalHypergraph {
    type Target = Hypergraph;
    fn deref(&self) -> &Hypergraph {
        &self.hg
    }
}

impl fmt::Display for IntervalHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.hg, f)
    }
}

impl fmt::Debug for IntervalHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.hg, f)
    }
}

/// A rooted plane tree whose internal nodes have at least two children.
/// Leaves are implicitly labeled left to right.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchroederTree {
    children: Vec<SchroederTree>,
}

impl SchroederTree {
    pub fn leaf() -> Self {
        SchroederTree { children: vec![] }
    }

    pub fn node(children: Vec<SchroederTree>) -> Result<Self, HypergraphError> {
        if children.len() < 2 {
            return Err(HypergraphError::TreeArity(children.len()));
        }
        Ok(SchroederTree { children })
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn leaf_count(&self) -> usize {
        if self.is_leaf() {
            1
        } else {
            self.children.iter().map(SchroederTree::leaf_count).sum()
        }
    }

    /// Left comb with `n` leaves: every internal node hangs a new leaf to the
    /// right of the previous comb.
    pub fn left_comb(n: usize) -> Self {
        let mut tree = SchroederTree::leaf();
        for _ in 1..n {
            tree = SchroederTree {
                children: vec![tree, SchroederTree::leaf()],
            };
        }
        tree
    }

    /// The interval hypergraph formed by all singletons plus the leaf set of
    /// every node of the tree.
    pub fn interval_hypergraph(&self) -> Result<IntervalHypergraph, HypergraphError> {
        let n = self.leaf_count();
        let mut spans = Vec::new();
        self.collect_spans(1, &mut spans);
        IntervalHypergraph::new(n, &spans)
    }

    /// Returns the first label after this subtree.
    fn collect_spans(&self, first: Vertex, spans: &mut Vec<(Vertex, Vertex)>) -> Vertex {
        if self.is_leaf() {
            return first + 1;
        }
        let mut next = first;
        for child in &self.children {
            next = child.collect_spans(next, spans);
        }
        spans.push((first, next - 1));
        next
    }
}

/// Number of interval hypergraphs on `[n]` (all subsets of the non-singleton
/// intervals; singletons always present).
pub fn interval_hypergraph_count(n: u8) -> u64 {
    1u64 << (n as u32 * (n as u32 - 1) / 2)
}

/// Non-singleton intervals of `[n]` in canonical order.
pub fn non_singleton_intervals(n: u8) -> Vec<Interval> {
    let mut out = Vec::new();
    for lo in 1..=n {
        for hi in lo + 1..=n {
            out.push(Interval::new(lo, hi));
        }
    }
    out
}

/// The `index`-th interval hypergraph on `[n]`: bit `k` of `index` selects
/// the `k`-th non-singleton interval.
pub fn interval_hypergraph_at(n: u8, index: u64) -> IntervalHypergraph {
    let all = non_singleton_intervals(n);
    debug_assert!(index < interval_hypergraph_count(n));
    let spans: Vec<(Vertex, Vertex)> = all
        .iter()
        .enumerate()
        .filter(|(k, _)| index >> k & 1 == 1)
        .map(|(_, s)| (s.lo, s.hi))
        .collect();
    IntervalHypergraph::new(n as usize, &spans).expect("selected intervals are valid")
}

/// Stream of all interval hypergraphs on `[n]` in index order, guarded by an
/// explicit enumeration bound.
pub fn interval_hypergraphs_bounded(
    n: u8,
    bound: u8,
) -> Result<impl Iterator<Item = IntervalHypergraph>, HypergraphError> {
    if n == 0 || n > bound {
        return Err(HypergraphError::EnumerationBound { n, bound });
    }
    Ok((0..interval_hypergraph_count(n)).map(move |index| interval_hypergraph_at(n, index)))
}

/// Stream of all interval hypergraphs on `[n]` under the default bound.
pub fn interval_hypergraphs(
    n: u8,
) -> Result<impl Iterator<Item = IntervalHypergraph>, HypergraphError> {
    interval_hypergraphs_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_closure_and_canonical_order() {
        let hg = Hypergraph::from_digits(4, &["123", "134"]).unwrap();
        let shown: Vec<String> = hg.edges().iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, ["1", "123", "134", "2", "3", "4"]);
        assert_eq!(hg.to_string(), "{1, 123, 134, 2, 3, 4}");

        let lone = Hypergraph::new::<[Vertex; 0]>(1, &[]).unwrap();
        assert_eq!(lone.edge_count(), 1);

        let dup = Hypergraph::from_digits(3, &["123", "123"]).unwrap();
        assert_eq!(dup.edge_count(), 4);
    }

    #[test]
    fn constructor_errors() {
        assert!(matches!(
            Hypergraph::new(0, &[vec![1u8]]),
            Err(HypergraphError::GroundSetSize { .. })
        ));
        assert!(matches!(
            Hypergraph::new(20, &[vec![1u8]]),
            Err(HypergraphError::GroundSetSize { .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, &[vec![]]),
            Err(HypergraphError::EmptyEdge)
        ));
        assert!(matches!(
            Hypergraph::new(3, &[vec![4u8]]),
            Err(HypergraphError::VertexOutOfRange { vertex: 4, n: 3 })
        ));
    }

    #[test]
    fn interval_view() {
        let hg = Hypergraph::from_digits(4, &["123", "134"]).unwrap();
        assert!(hg.as_interval().is_none());

        let hg = Hypergraph::from_digits(4, &["123", "23", "234", "1234"]).unwrap();
        let iv = hg.as_interval().unwrap();
        let spans: Vec<Interval> = iv.non_singleton_spans().collect();
        assert_eq!(
            spans,
            [
                Interval::new(1, 3),
                Interval::new(1, 4),
                Interval::new(2, 3),
                Interval::new(2, 4)
            ]
        );

        let tiny = Hypergraph::new::<[Vertex; 0]>(2, &[]).unwrap();
        let iv = tiny.as_interval().unwrap();
        assert_eq!(iv.spans().len(), 2);
    }

    #[test]
    fn reflection_is_an_involution() {
        let hg = Hypergraph::from_digits(4, &["12", "123"]).unwrap();
        let refl = hg.reflect();
        assert_eq!(refl, Hypergraph::from_digits(4, &["34", "234"]).unwrap());
        assert_eq!(refl.reflect(), hg);

        let symmetric = Hypergraph::from_digits(4, &["12", "23", "34", "1234"]).unwrap();
        assert_eq!(symmetric.reflect(), symmetric);
    }

    #[test]
    fn intersection_closure_examples() {
        let open = Hypergraph::from_digits(4, &["123", "234"]).unwrap();
        assert!(!open.as_interval().unwrap().intersection_closed());

        let tamari3 = IntervalHypergraph::all_intervals(3).unwrap();
        assert!(tamari3.intersection_closed());

        let singles = IntervalHypergraph::new(3, &[]).unwrap();
        assert!(singles.intersection_closed());
    }

    #[test]
    fn distributive_predicate_examples() {
        let cube = Hypergraph::from_digits(4, &["123", "23", "234"]).unwrap();
        assert!(cube.as_interval().unwrap().is_distributive_hypergraph());

        let pentagon = Hypergraph::from_digits(3, &["12", "23", "123"]).unwrap();
        assert!(!pentagon.as_interval().unwrap().is_distributive_hypergraph());

        let nested = Hypergraph::from_digits(4, &["123", "1234"]).unwrap();
        assert!(nested.as_interval().unwrap().is_distributive_hypergraph());
    }

    #[test]
    fn semidistributive_predicate_examples() {
        let not_join = Hypergraph::from_digits(4, &["12", "23", "234", "1234"]).unwrap();
        let not_join = not_join.as_interval().unwrap();
        assert!(!not_join.is_join_sd_hypergraph());
        assert!(not_join.is_meet_sd_hypergraph());

        let tamari3 = IntervalHypergraph::all_intervals(3).unwrap();
        assert!(tamari3.is_join_sd_hypergraph());
        assert!(tamari3.is_meet_sd_hypergraph());

        let tamari4 = IntervalHypergraph::all_intervals(4).unwrap();
        assert!(tamari4.is_join_sd_hypergraph());
        assert!(tamari4.is_meet_sd_hypergraph());

        let sd = Hypergraph::from_digits(4, &["123", "23", "234", "1234"]).unwrap();
        let sd = sd.as_interval().unwrap();
        assert!(sd.is_join_sd_hypergraph());
        assert!(sd.is_meet_sd_hypergraph());

        let neither = Hypergraph::from_digits(4, &["12", "23", "34", "1234"]).unwrap();
        let neither = neither.as_interval().unwrap();
        assert!(!neither.is_join_sd_hypergraph());
        assert!(!neither.is_meet_sd_hypergraph());
    }

    #[test]
    fn subinterval_closure_examples() {
        let tamari = IntervalHypergraph::all_intervals(4).unwrap();
        assert!(tamari.initial_subinterval_closed());
        assert!(tamari.final_subinterval_closed());

        let nested = Hypergraph::from_digits(4, &["123", "1234"]).unwrap();
        assert!(!nested.as_interval().unwrap().initial_subinterval_closed());

        let initial = IntervalHypergraph::initial_intervals(4).unwrap();
        assert!(initial.initial_subinterval_closed());
        assert!(!initial.final_subinterval_closed());
    }

    #[test]
    fn reflection_swaps_subinterval_closures() {
        let initial = IntervalHypergraph::initial_intervals(5).unwrap();
        let refl = initial.reflect();
        assert!(refl.final_subinterval_closed());
        assert!(!refl.initial_subinterval_closed());
    }

    #[test]
    fn schroeder_examples() {
        let comb = SchroederTree::left_comb(4);
        let hg = comb.interval_hypergraph().unwrap();
        assert_eq!(hg.hypergraph(), IntervalHypergraph::initial_intervals(4).unwrap().hypergraph());
        assert!(hg.is_schroeder());

        let nested = Hypergraph::from_digits(4, &["123", "1234"]).unwrap();
        assert!(nested.as_interval().unwrap().is_schroeder());

        let pentagon = Hypergraph::from_digits(3, &["12", "23", "123"]).unwrap();
        assert!(!pentagon.as_interval().unwrap().is_schroeder());

        assert!(matches!(
            SchroederTree::node(vec![SchroederTree::leaf()]),
            Err(HypergraphError::TreeArity(1))
        ));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(interval_hypergraphs(2).unwrap().count(), 2);
        assert_eq!(interval_hypergraphs(4).unwrap().count(), 64);
        assert_eq!(interval_hypergraphs(5).unwrap().count(), 1024);
        assert!(interval_hypergraphs(6).is_err());
        assert_eq!(
            interval_hypergraphs_bounded(6, 6).unwrap().count(),
            32768
        );
    }

    #[test]
    fn json_round_trip() {
        let hg = Hypergraph::from_json(r#"{"n": 4, "edges": [[1,2,3],[1,3,4]]}"#).unwrap();
        assert_eq!(hg, Hypergraph::from_digits(4, &["123", "134"]).unwrap());

        let iv = Hypergraph::from_json(r#"{"n": 4, "intervals": [[1,3],[2,4]]}"#).unwrap();
        assert_eq!(iv, Hypergraph::from_digits(4, &["123", "234"]).unwrap());

        let reparsed = Hypergraph::from_json(&hg.to_json()).unwrap();
        assert_eq!(reparsed, hg);

        assert!(Hypergraph::from_json(r#"{"n": 2, "edges": [[1]], "intervals": [[1,2]]}"#).is_err());

        let bare = Hypergraph::from_json(r#"{"n": 2}"#).unwrap();
        assert_eq!(bare.edge_count(), 2);
    }
}
