//! Orientations: the choice of one source vertex per edge, the acyclicity
//! test that picks out polytope vertices, increasing flips between them, and
//! the vertex order induced by an acyclic orientation.

use std::fmt;

use thiserror::Error;

use crate::hypergraph::{Hypergraph, IntervalHypergraph, Vertex, VertexSet};

#[derive(Debug, Error)]
pub enum OrientationError {
    #[error("expected {expected} choices (one per non-singleton edge), got {got}")]
    BadArity { expected: usize, got: usize },
    #[error("vertex {vertex} is not a member of edge {edge}")]
    ChoiceOutsideEdge { vertex: Vertex, edge: String },
    #[error("cannot parse orientation tuple {0:?}")]
    BadTuple(String),
}

/// One chosen vertex per edge, indexed like the hypergraph's canonical edge
/// order (singletons included; their choice is forced).
///
/// The derived `Ord` is lexicographic on the choice tuple and is used for
/// deterministic enumeration; the poset order on acyclic orientations is a
/// different relation (see the lattice module).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    choice: Vec<Vertex>,
}

impl Orientation {
    pub fn choices(&self) -> &[Vertex] {
        &self.choice
    }

    pub fn choice(&self, edge_index: usize) -> Vertex {
        self.choice[edge_index]
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Orientation{:?}", self.choice)
    }
}

impl Hypergraph {
    /// Build an orientation from the choices on non-singleton edges, in
    /// canonical order, mirroring the display form.
    pub fn orientation_from_tuple(
        &self,
        choices: &[Vertex],
    ) -> Result<Orientation, OrientationError> {
        let slots: Vec<usize> = self.non_singleton_indices().collect();
        if choices.len() != slots.len() {
            return Err(OrientationError::BadArity {
                expected: slots.len(),
                got: choices.len(),
            });
        }
        let mut choice: Vec<Vertex> = self.edges().iter().map(|e| e.min_vertex()).collect();
        for (&k, &v) in slots.iter().zip(choices) {
            if !self.edge(k).contains(v) {
                return Err(OrientationError::ChoiceOutsideEdge {
                    vertex: v,
                    edge: self.edge(k).to_string(),
                });
            }
            choice[k] = v;
        }
        Ok(Orientation { choice })
    }

    /// Parse the display form `(1,4,3,4)`.
    pub fn parse_orientation(&self, text: &str) -> Result<Orientation, OrientationError> {
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| OrientationError::BadTuple(text.to_string()))?;
        let mut choices = Vec::new();
        if !inner.trim().is_empty() {
            for part in inner.split(',') {
                let v: Vertex = part
                    .trim()
                    .parse()
                    .map_err(|_| OrientationError::BadTuple(text.to_string()))?;
                choices.push(v);
            }
        }
        self.orientation_from_tuple(&choices)
    }

    /// Display form: choices on non-singleton edges, e.g. `(1,4,3,4)`.
    pub fn orientation_tuple(&self, o: &Orientation) -> String {
        let parts: Vec<String> = self
            .non_singleton_indices()
            .map(|k| o.choice[k].to_string())
            .collect();
        format!("({})", parts.join(","))
    }

    /// Acyclicity in the general sense: the digraph on edges with an arc
    /// `e -> f` whenever the source of `f` lies in `e` away from `e`'s own
    /// source has no directed cycle.
    pub fn is_acyclic(&self, o: &Orientation) -> bool {
        let nodes: Vec<usize> = self.non_singleton_indices().collect();
        // Arcs between positions in `nodes`.
        let arcs: Vec<Vec<usize>> = nodes
            .iter()
            .map(|&e| {
                nodes
                    .iter()
                    .enumerate()
                    .filter(|&(_, &f)| {
                        f != e && self.edge(e).without(o.choice[e]).contains(o.choice[f])
                    })
                    .map(|(pos, _)| pos)
                    .collect()
            })
            .collect();
        // Iterative three-color depth-first search.
        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;
        let mut color = vec![WHITE; nodes.len()];
        for start in 0..nodes.len() {
            if color[start] != WHITE {
                continue;
            }
            let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
            color[start] = GRAY;
            while let Some(top) = stack.last_mut() {
                let node = top.0;
                if top.1 < arcs[node].len() {
                    let succ = arcs[node][top.1];
                    top.1 += 1;
                    match color[succ] {
                        GRAY => return false,
                        WHITE => {
                            color[succ] = GRAY;
                            stack.push((succ, 0));
                        }
                        _ => {}
                    }
                } else {
                    color[node] = BLACK;
                    stack.pop();
                }
            }
        }
        true
    }

    /// No pair of edges points into each other. Equivalent to full
    /// acyclicity on interval hypergraphs only.
    pub(crate) fn two_cycle_free(&self, o: &Orientation) -> bool {
        let nodes: Vec<usize> = self.non_singleton_indices().collect();
        for (a, &e) in nodes.iter().enumerate() {
            for &f in &nodes[a + 1..] {
                if self.edge(e).without(o.choice[e]).contains(o.choice[f])
                    && self.edge(f).without(o.choice[f]).contains(o.choice[e])
                {
                    return false;
                }
            }
        }
        true
    }

    /// All acyclic orientations, in lexicographic order of the choice tuple.
    ///
    /// Backtracks over edges in canonical order, pruning any partial
    /// assignment containing a two-edge cycle (sound for every hypergraph,
    /// complete for interval ones); leaves get the full acyclicity test
    /// unless the hypergraph is interval.
    pub fn acyclic_orientations(&self) -> Vec<Orientation> {
        let interval = self.is_interval_hypergraph();
        let slots: Vec<usize> = self.non_singleton_indices().collect();
        let mut choice: Vec<Vertex> = self.edges().iter().map(|e| e.min_vertex()).collect();
        let mut out = Vec::new();
        self.enumerate_rec(&slots, 0, &mut choice, interval, &mut out);
        out
    }

    fn enumerate_rec(
        &self,
        slots: &[usize],
        depth: usize,
        choice: &mut Vec<Vertex>,
        interval: bool,
        out: &mut Vec<Orientation>,
    ) {
        if depth == slots.len() {
            let candidate = Orientation {
                choice: choice.clone(),
            };
            if interval || self.is_acyclic(&candidate) {
                out.push(candidate);
            }
            return;
        }
        let edge = self.edge(slots[depth]);
        for v in edge.iter() {
            choice[slots[depth]] = v;
            let clash = slots[..depth].iter().any(|&e| {
                self.edge(e).without(choice[e]).contains(v)
                    && edge.without(v).contains(choice[e])
            });
            if !clash {
                self.enumerate_rec(slots, depth + 1, choice, interval, out);
            }
        }
        choice[slots[depth]] = edge.min_vertex();
    }

    /// Replace source `i` by `j` on every edge containing both whose source
    /// is `i`. The result may be cyclic; equality with the input means the
    /// flip has empty support.
    pub fn flip(&self, a: &Orientation, i: Vertex, j: Vertex) -> Orientation {
        let mut choice = a.choice.clone();
        for (k, edge) in self.edges().iter().enumerate() {
            if choice[k] == i && edge.contains(i) && edge.contains(j) {
                choice[k] = j;
            }
        }
        Orientation { choice }
    }

    /// All increasing flips out of an acyclic orientation: triples
    /// `(i, j, target)` with `i < j`, sorted by `(i, j)`.
    pub fn increasing_flip_targets(
        &self,
        a: &Orientation,
    ) -> Vec<(Vertex, Vertex, Orientation)> {
        assert!(self.is_acyclic(a), "flip targets need an acyclic orientation");
        let mut out = Vec::new();
        for i in 1..=self.n() {
            for j in i + 1..=self.n() {
                let b = self.flip(a, i, j);
                if b != *a && self.is_acyclic(&b) {
                    out.push((i, j, b));
                }
            }
        }
        out
    }

    /// Coordinates of the polytope vertex: component `v` counts the edges
    /// whose source is `v`, singletons included.
    pub fn vertex_coordinates(&self, o: &Orientation) -> Vec<u32> {
        let mut coords = vec![0u32; self.n() as usize];
        for &v in &o.choice {
            coords[(v - 1) as usize] += 1;
        }
        coords
    }

    /// The orientation induced on the reflected hypergraph, mapping each
    /// source through `v ↦ n - v + 1`.
    pub fn reflect_orientation(&self, o: &Orientation) -> Orientation {
        let n = self.n();
        let refl = self.reflect();
        let mut choice: Vec<Vertex> = refl.edges().iter().map(|e| e.min_vertex()).collect();
        for (k, edge) in self.edges().iter().enumerate() {
            let target = refl
                .edge_index(edge.reflect(n))
                .expect("reflection permutes the edge set");
            choice[target] = n - o.choice[k] + 1;
        }
        Orientation { choice }
    }

    /// The partial order on vertices generated by putting each edge's source
    /// below the rest of the edge. Requires acyclicity.
    pub fn vertex_poset(&self, a: &Orientation) -> VertexPoset {
        assert!(self.is_acyclic(a), "vertex order needs an acyclic orientation");
        let n = self.n();
        let mut above: Vec<VertexSet> = (1..=n).map(VertexSet::singleton).collect();
        for (k, edge) in self.edges().iter().enumerate() {
            let src = a.choice[k];
            above[(src - 1) as usize] = above[(src - 1) as usize].union(edge.without(src));
        }
        // Reflexive-transitive closure.
        for mid in 1..=n {
            for v in 0..n as usize {
                if above[v].contains(mid) {
                    above[v] = above[v].union(above[(mid - 1) as usize]);
                }
            }
        }
        VertexPoset { n, above }
    }
}

/// A partial order on `[n]`, stored as the up-set of each vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexPoset {
    n: Vertex,
    above: Vec<VertexSet>,
}

impl VertexPoset {
    pub fn n(&self) -> Vertex {
        self.n
    }

    pub fn leq(&self, a: Vertex, b: Vertex) -> bool {
        self.above[(a - 1) as usize].contains(b)
    }

    pub fn lt(&self, a: Vertex, b: Vertex) -> bool {
        a != b && self.leq(a, b)
    }

    /// Up-set of a vertex, itself included.
    pub fn up_set(&self, a: Vertex) -> VertexSet {
        self.above[(a - 1) as usize]
    }

    /// All linear extensions as words on `[n]`, backtracking over the
    /// available minimal vertices in increasing order, so the output is
    /// lexicographic.
    pub fn linear_extension_words(&self) -> Vec<Vec<Vertex>> {
        let n = self.n as usize;
        let mut placed = VertexSet::EMPTY;
        let mut word = Vec::with_capacity(n);
        let mut out = Vec::new();
        self.extend_rec(&mut placed, &mut word, &mut out);
        out
    }

    fn extend_rec(
        &self,
        placed: &mut VertexSet,
        word: &mut Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        if word.len() == self.n as usize {
            out.push(word.clone());
            return;
        }
        for v in 1..=self.n {
            if placed.contains(v) {
                continue;
            }
            // Every vertex strictly below v must already be placed.
            let ready = (1..=self.n).all(|u| u == v || !self.lt(u, v) || placed.contains(u));
            if ready {
                placed.insert(v);
                word.push(v);
                self.extend_rec(placed, word, out);
                word.pop();
                *placed = placed.without(v);
            }
        }
    }
}

impl IntervalHypergraph {
    /// Acyclicity via the pairwise pattern: no two edges point into each
    /// other. On interval hypergraphs this agrees with the general test.
    pub fn is_acyclic_pairwise(&self, o: &Orientation) -> bool {
        self.hypergraph().two_cycle_free(o)
    }

    /// Whether the increasing flip of `i` to `j` from `a` stays acyclic,
    /// decided locally: with `k` the furthest reach of the edges sourced at
    /// `i`, the flip is legal iff no edge contains `j` away from its source
    /// while its source lies in `]i, k]`.
    ///
    /// Requires `a` acyclic with a nonempty flip support for `(i, j)`.
    pub fn flip_is_legal(&self, a: &Orientation, i: Vertex, j: Vertex) -> bool {
        debug_assert!(self.is_acyclic_pairwise(a));
        let reach = self
            .spans()
            .iter()
            .enumerate()
            .filter(|(k, _)| a.choice[*k] == i)
            .map(|(_, s)| s.hi)
            .max()
            .expect("flip support is nonempty");
        debug_assert!(
            self.spans()
                .iter()
                .enumerate()
                .any(|(k, s)| a.choice[k] == i && s.contains(j)),
            "flip support is nonempty"
        );
        !self.spans().iter().enumerate().any(|(k, s)| {
            let src = a.choice[k];
            s.contains(j) && src != j && i < src && src <= reach
        })
    }

    /// Whether a legal increasing flip of `i` to `j` is a cover relation of
    /// the orientation poset.
    ///
    /// Every edge of the flip support contains all of `[i, j]`, so in an
    /// acyclic orientation strictly between the two endpoints the support
    /// edges share a single source `c` in `]i, j[`, and such a `c` is ruled
    /// out exactly by the edges outside the support whose source stays in
    /// `[i, j]`. The flip is a cover when those edges sweep the whole gap.
    pub fn is_cover(&self, a: &Orientation, i: Vertex, j: Vertex) -> bool {
        debug_assert!(self.flip_is_legal(a, i, j));
        if j - i <= 1 {
            return true;
        }
        let mut swept = VertexSet::EMPTY;
        for (k, s) in self.spans().iter().enumerate() {
            let src = a.choice(k);
            if src < i || j < src {
                continue;
            }
            let in_support = src == i && s.contains(j);
            if !in_support {
                swept = swept.union(s.set().without(src));
            }
        }
        VertexSet::interval(i + 1, j - 1).is_subset(swept)
    }
}
