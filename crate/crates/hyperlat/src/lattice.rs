//! Order structure on acyclic orientations: the flip-closure poset for
//! arbitrary hypergraphs, the componentwise source order that describes it on
//! interval hypergraphs, closed-form joins and meets when the edge set is
//! closed under intersection, the explicit join-irreducible orientations,
//! and the brute-force semilattice-morphism tests against the weak order.

use std::collections::VecDeque;

use crate::hypergraph::{Hypergraph, Interval, IntervalHypergraph, Vertex, VertexSet};
use crate::orientation::Orientation;
use crate::poset::Poset;
use crate::weak::{weak_join, weak_leq, weak_meet, WeakOrderTables};

/// Componentwise comparison of sources. On interval hypergraphs this is
/// exactly the reachability order of increasing flips.
pub fn leq_source(a: &Orientation, b: &Orientation) -> bool {
    debug_assert_eq!(a.choices().len(), b.choices().len());
    a.choices().iter().zip(b.choices()).all(|(x, y)| x <= y)
}

/// The poset of acyclic orientations together with its element list, which
/// is sorted lexicographically so indices can be recovered by search.
pub struct HypergraphPoset {
    pub elements: Vec<Orientation>,
    pub poset: Poset,
}

impl HypergraphPoset {
    pub fn index_of(&self, o: &Orientation) -> Option<usize> {
        self.elements.binary_search(o).ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

fn labels_for(hg: &Hypergraph, elements: &[Orientation]) -> Vec<String> {
    elements.iter().map(|o| hg.orientation_tuple(o)).collect()
}

/// Transitive closure of the increasing flip graph. Works for every
/// hypergraph; this is the defining construction.
pub fn flip_closure_poset(hg: &Hypergraph) -> HypergraphPoset {
    let elements = hg.acyclic_orientations();
    let mut pairs = Vec::new();
    for (a, orientation) in elements.iter().enumerate() {
        for (_, _, target) in hg.increasing_flip_targets(orientation) {
            let b = elements.binary_search(&target).expect("flip target is acyclic");
            pairs.push((a, b));
        }
    }
    let poset = Poset::from_relation(elements.len(), &pairs, Some(labels_for(hg, &elements)))
        .expect("increasing flips cannot close a cycle");
    HypergraphPoset { elements, poset }
}

/// The same poset built from the componentwise source order; valid on
/// interval hypergraphs.
pub fn source_order_poset(iv: &IntervalHypergraph) -> HypergraphPoset {
    let elements = iv.acyclic_orientations();
    let poset = Poset::from_leq(
        elements.len(),
        Some(labels_for(iv.hypergraph(), &elements)),
        |a, b| leq_source(&elements[a], &elements[b]),
    );
    HypergraphPoset { elements, poset }
}

impl Hypergraph {
    /// The orientation poset, via the source order when every edge is an
    /// interval and via flip closure otherwise.
    pub fn orientation_poset(&self) -> HypergraphPoset {
        match self.as_interval() {
            Some(iv) => source_order_poset(&iv),
            None => flip_closure_poset(self),
        }
    }

    /// Breadth-first reachability of `b` from `a` along increasing flips.
    pub fn flip_reachable(&self, a: &Orientation, b: &Orientation) -> bool {
        if a == b {
            return true;
        }
        let mut seen = std::collections::HashSet::new();
        let mut queue = VecDeque::from([a.clone()]);
        seen.insert(a.clone());
        while let Some(current) = queue.pop_front() {
            for (_, _, next) in self.increasing_flip_targets(&current) {
                if next == *b {
                    return true;
                }
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        false
    }

    /// The minimum orientation: every edge sourced at its smallest member.
    pub fn minimum_orientation(&self) -> Orientation {
        let choices: Vec<Vertex> = self
            .non_singleton_indices()
            .map(|k| self.edge(k).min_vertex())
            .collect();
        self.orientation_from_tuple(&choices).expect("minima are members")
    }
}

/// The four equivalent comparisons between acyclic orientations of an
/// interval hypergraph closed under intersection.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OrderConditions {
    /// Reachability along increasing flips.
    pub flip_reachable: bool,
    /// Componentwise source comparison.
    pub source_leq: bool,
    /// Weak-order comparison of the fiber bounds: min fiber of the first
    /// below max fiber of the second.
    pub weak_bounds: bool,
    /// No pair `i < j` is forced downward by the first vertex order while
    /// forced upward by the second.
    pub inversion_compatible: bool,
}

impl OrderConditions {
    pub fn all_agree(&self) -> bool {
        self.flip_reachable == self.source_leq
            && self.source_leq == self.weak_bounds
            && self.weak_bounds == self.inversion_compatible
    }
}

/// Weak-order comparison of fiber bounds, meaningful on any interval
/// hypergraph.
pub fn weak_bounds_leq(iv: &IntervalHypergraph, a: &Orientation, b: &Orientation) -> bool {
    let (lo_a, _) = iv.fiber_bounds(a);
    let (_, hi_b) = iv.fiber_bounds(b);
    weak_leq(&lo_a, &hi_b)
}

/// Condition on the two vertex orders: `j` below `i` in the first forbids
/// `i` below `j` in the second, for every `i < j`.
pub fn inversion_compatible(hg: &Hypergraph, a: &Orientation, b: &Orientation) -> bool {
    let va = hg.vertex_poset(a);
    let vb = hg.vertex_poset(b);
    for i in 1..=hg.n() {
        for j in i + 1..=hg.n() {
            if va.lt(j, i) && vb.lt(i, j) {
                return false;
            }
        }
    }
    true
}

/// Evaluate all four order conditions; they agree exactly when the edge set
/// is closed under intersection, which is required here.
pub fn order_equivalences(
    iv: &IntervalHypergraph,
    a: &Orientation,
    b: &Orientation,
) -> OrderConditions {
    assert!(
        iv.intersection_closed(),
        "the order equivalences need intersection closure"
    );
    OrderConditions {
        flip_reachable: iv.hypergraph().flip_reachable(a, b),
        source_leq: leq_source(a, b),
        weak_bounds: weak_bounds_leq(iv, a, b),
        inversion_compatible: inversion_compatible(iv.hypergraph(), a, b),
    }
}

/// Join of any nonempty family of acyclic orientations, computed edgewise:
/// each edge takes the smallest member not excluded by a half-open prefix
/// `[min(J), source(J))` of some edge `J` sourced inside it.
///
/// Requires intersection closure; the result is then acyclic and is the
/// least upper bound in the orientation poset.
pub fn hyp_join(iv: &IntervalHypergraph, parts: &[Orientation]) -> Orientation {
    assert!(!parts.is_empty(), "join of an empty family");
    assert!(
        iv.intersection_closed(),
        "the join formula needs intersection closure"
    );
    let spans = iv.spans();
    let choices: Vec<Vertex> = iv
        .non_singleton_indices()
        .map(|k| {
            let target = spans[k];
            let mut excluded = VertexSet::EMPTY;
            for part in parts {
                for (l, span) in spans.iter().enumerate() {
                    let source = part.choice(l);
                    if target.contains(source) && span.lo < source {
                        excluded = excluded.union(VertexSet::interval(span.lo, source - 1));
                    }
                }
            }
            target
                .set()
                .minus(excluded)
                .min_vertex()
        })
        .collect();
    iv.orientation_from_tuple(&choices)
        .expect("join formula stays inside each edge")
}

/// Meet, as the reflected join of the reflected family.
pub fn hyp_meet(iv: &IntervalHypergraph, parts: &[Orientation]) -> Orientation {
    let reflected = iv.reflect();
    let parts_reflected: Vec<Orientation> = parts
        .iter()
        .map(|o| iv.hypergraph().reflect_orientation(o))
        .collect();
    let join = hyp_join(&reflected, &parts_reflected);
    reflected.hypergraph().reflect_orientation(&join)
}

/// Binary join through the weak order: project the join of the fiber minima.
pub fn join_via_weak_order(
    iv: &IntervalHypergraph,
    a: &Orientation,
    b: &Orientation,
) -> Orientation {
    let (lo_a, _) = iv.fiber_bounds(a);
    let (lo_b, _) = iv.fiber_bounds(b);
    iv.orient(&weak_join(&lo_a, &lo_b))
}

/// Binary meet through the weak order: project the meet of the fiber maxima.
pub fn meet_via_weak_order(
    iv: &IntervalHypergraph,
    a: &Orientation,
    b: &Orientation,
) -> Orientation {
    let (_, hi_a) = iv.fiber_bounds(a);
    let (_, hi_b) = iv.fiber_bounds(b);
    iv.orient(&weak_meet(&hi_a, &hi_b))
}

/// A join-irreducible orientation indexed by a single vertex `j`: the
/// orientation that pulls `j` below the start of its core interval.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct VertexIrreducible {
    /// The indexing vertex, drawn from the union of edges minus their minima.
    pub vertex: Vertex,
    /// Intersection of all edges containing the vertex away from their
    /// minimum; an edge by intersection closure.
    pub core: Interval,
}

/// The vertex index set with its core intervals, ascending by vertex.
/// Requires intersection closure.
pub fn vertex_irreducibles(iv: &IntervalHypergraph) -> Vec<VertexIrreducible> {
    assert!(iv.intersection_closed());
    let mut out = Vec::new();
    for j in 1..=iv.n() {
        let mut core: Option<Interval> = None;
        for span in iv.spans() {
            if span.contains(j) && span.lo < j {
                core = Some(match core {
                    None => *span,
                    Some(c) => Interval::new(c.lo.max(span.lo), c.hi.min(span.hi)),
                });
            }
        }
        if let Some(core) = core {
            debug_assert!(iv.contains_span(core.lo, core.hi));
            out.push(VertexIrreducible { vertex: j, core });
        }
    }
    out
}

/// Comparison of vertex irreducibles: same core, smaller vertex first.
pub fn vertex_preceq(a: &VertexIrreducible, b: &VertexIrreducible) -> bool {
    a.core == b.core && a.vertex <= b.vertex
}

/// The orientation attached to a vertex index: `j` sources every edge that
/// contains it and starts exactly at the core minimum.
pub fn vertex_irreducible_orientation(
    iv: &IntervalHypergraph,
    j: Vertex,
) -> Option<Orientation> {
    let item = vertex_irreducibles(iv).into_iter().find(|x| x.vertex == j)?;
    let choices: Vec<Vertex> = iv
        .non_singleton_indices()
        .map(|k| {
            let span = iv.span(k);
            if span.contains(j) && span.lo == item.core.lo {
                j
            } else {
                span.lo
            }
        })
        .collect();
    Some(
        iv.orientation_from_tuple(&choices)
            .expect("choices are members"),
    )
}

/// A join-irreducible orientation indexed by a pair `from < to`: the unique
/// cover flip into it raises `from` to `to`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PairIrreducible {
    pub from: Vertex,
    pub to: Vertex,
    /// Intersection of all edges containing both indices.
    pub core: Interval,
}

impl PairIrreducible {
    pub fn pair(&self) -> (Vertex, Vertex) {
        (self.from, self.to)
    }
}

/// All pair indices: `from` must be the largest vertex of the prefix of the
/// core not absorbed by edges strictly inside it. Sorted by `(to, from)`.
/// Requires intersection closure.
pub fn pair_irreducibles(iv: &IntervalHypergraph) -> Vec<PairIrreducible> {
    assert!(iv.intersection_closed());
    let mut out = Vec::new();
    for to in 2..=iv.n() {
        for from in 1..to {
            let mut core: Option<Interval> = None;
            for span in iv.spans() {
                if span.contains(from) && span.contains(to) {
                    core = Some(match core {
                        None => *span,
                        Some(c) => Interval::new(c.lo.max(span.lo), c.hi.min(span.hi)),
                    });
                }
            }
            let Some(core) = core else { continue };
            let mut free = VertexSet::interval(core.lo, to - 1);
            for span in iv.spans() {
                if core.lo <= span.lo && span.hi < to {
                    free = free.minus(span.set().without(span.lo));
                }
            }
            if free.max_vertex() == from {
                out.push(PairIrreducible { from, to, core });
            }
        }
    }
    out
}

/// Order on pair indices matching the source order of their orientations:
/// `a`'s target cannot exceed `b`'s, and every edge that `a`'s orientation
/// sources at its target strictly above the edge minimum must be sourced at
/// `b`'s target too. (Comparing just the cores is not enough: an edge inside
/// `a`'s core that misses `b`'s target breaks the comparison.)
pub fn pair_preceq(iv: &IntervalHypergraph, a: &PairIrreducible, b: &PairIrreducible) -> bool {
    a.to <= b.to
        && iv.spans().iter().all(|span| {
            let raised_by_a = span.contains(a.to) && a.core.lo <= span.lo && span.lo < a.to;
            !raised_by_a || (span.contains(b.to) && span.lo >= b.core.lo)
        })
}

/// The orientation attached to a pair index: `to` sources every edge that
/// contains it and starts at or after the core minimum.
pub fn pair_irreducible_orientation(
    iv: &IntervalHypergraph,
    from: Vertex,
    to: Vertex,
) -> Option<Orientation> {
    let item = pair_irreducibles(iv)
        .into_iter()
        .find(|x| x.from == from && x.to == to)?;
    Some(pair_orientation(iv, &item))
}

fn pair_orientation(iv: &IntervalHypergraph, item: &PairIrreducible) -> Orientation {
    let choices: Vec<Vertex> = iv
        .non_singleton_indices()
        .map(|k| {
            let span = iv.span(k);
            if span.contains(item.to) && span.lo >= item.core.lo {
                item.to
            } else {
                span.lo
            }
        })
        .collect();
    iv.orientation_from_tuple(&choices)
        .expect("choices are members")
}

/// Orientations of all pair indices, aligned with `pair_irreducibles`.
pub fn pair_irreducible_orientations(iv: &IntervalHypergraph) -> Vec<(PairIrreducible, Orientation)> {
    pair_irreducibles(iv)
        .into_iter()
        .map(|item| {
            let o = pair_orientation(iv, &item);
            (item, o)
        })
        .collect()
}

/// The vertex indices whose irreducible orientation sits below the given
/// one; for distributive edge sets this is one direction of a bijection with
/// lower sets.
pub fn irreducibles_below(iv: &IntervalHypergraph, a: &Orientation) -> Vec<Vertex> {
    assert!(iv.is_distributive_hypergraph());
    vertex_irreducibles(iv)
        .iter()
        .filter(|item| {
            let candidate = vertex_irreducible_orientation(iv, item.vertex)
                .expect("vertex is an index");
            leq_source(&candidate, a)
        })
        .map(|item| item.vertex)
        .collect()
}

/// Inverse direction: the join of the irreducibles selected by a lower set,
/// with the empty set mapping to the minimum orientation.
pub fn orientation_from_lower_set(iv: &IntervalHypergraph, set: &[Vertex]) -> Orientation {
    assert!(iv.is_distributive_hypergraph());
    if set.is_empty() {
        return iv.minimum_orientation();
    }
    let parts: Vec<Orientation> = set
        .iter()
        .map(|&j| vertex_irreducible_orientation(iv, j).expect("lower set of indices"))
        .collect();
    hyp_join(iv, &parts)
}

/// Predicted size of a distributive orientation poset: the vertex indices
/// split into chains by their core, and each chain of length `c`
/// contributes a factor `c + 1`.
pub fn chain_size_product(iv: &IntervalHypergraph) -> u64 {
    let items = vertex_irreducibles(iv);
    let mut cores: Vec<Interval> = items.iter().map(|x| x.core).collect();
    cores.sort_unstable();
    cores.dedup();
    cores
        .iter()
        .map(|c| items.iter().filter(|x| x.core == *c).count() as u64 + 1)
        .product()
}

/// Catalan numbers, enough of them for the ground-set cap.
pub fn catalan(k: usize) -> u64 {
    let mut values = vec![1u64; k + 1];
    for i in 1..=k {
        values[i] = (0..i).map(|l| values[l] * values[i - 1 - l]).sum();
    }
    values[k]
}

/// Predicted size when the edge set is closed under subintervals and its
/// maximal edges pairwise share at most one vertex: the poset splits as a
/// product over the maximal edges, each contributing a Catalan factor.
/// `None` outside that regime.
pub fn tamari_size_product(iv: &IntervalHypergraph) -> Option<u64> {
    if !iv.subinterval_closed() {
        return None;
    }
    let maximal = iv.maximal_spans();
    for (k, a) in maximal.iter().enumerate() {
        for b in &maximal[k + 1..] {
            let lo = a.lo.max(b.lo);
            let hi = a.hi.min(b.hi);
            if lo < hi {
                return None;
            }
        }
    }
    Some(maximal.iter().map(|m| catalan(m.len())).product())
}

/// Whether projecting permutations onto orientations preserves all meets.
/// Brute force over every pair of permutations.
pub fn projection_is_meet_morphism(iv: &IntervalHypergraph, tables: &WeakOrderTables) -> bool {
    morphism_holds(iv, tables, None, true)
}

/// Whether the projection preserves all joins.
pub fn projection_is_join_morphism(iv: &IntervalHypergraph, tables: &WeakOrderTables) -> bool {
    morphism_holds(iv, tables, None, false)
}

/// Same tests restricted to sampled rank pairs.
pub fn projection_is_meet_morphism_on_pairs(
    iv: &IntervalHypergraph,
    tables: &WeakOrderTables,
    pairs: &[(usize, usize)],
) -> bool {
    morphism_holds(iv, tables, Some(pairs), true)
}

pub fn projection_is_join_morphism_on_pairs(
    iv: &IntervalHypergraph,
    tables: &WeakOrderTables,
    pairs: &[(usize, usize)],
) -> bool {
    morphism_holds(iv, tables, Some(pairs), false)
}

fn morphism_holds(
    iv: &IntervalHypergraph,
    tables: &WeakOrderTables,
    pairs: Option<&[(usize, usize)]>,
    meets: bool,
) -> bool {
    assert!(iv.intersection_closed(), "morphism tests need a lattice");
    assert_eq!(tables.n(), iv.n());
    let elements = iv.acyclic_orientations();
    let index_of = |o: &Orientation| elements.binary_search(o).expect("orientations enumerate");
    // Orientation of every permutation, by rank.
    let oriented: Vec<usize> = tables
        .permutations()
        .iter()
        .map(|p| index_of(&iv.orient(p)))
        .collect();
    // Pairwise lattice operation on orientations, by element index.
    let m = elements.len();
    let mut table = vec![0u32; m * m];
    for a in 0..m {
        for b in a..m {
            let parts = [elements[a].clone(), elements[b].clone()];
            let result = if meets {
                hyp_meet(iv, &parts)
            } else {
                hyp_join(iv, &parts)
            };
            let r = index_of(&result) as u32;
            table[a * m + b] = r;
            table[b * m + a] = r;
        }
    }
    let check = |ra: usize, rb: usize| {
        let weak_result = if meets {
            tables.meet_rank(ra, rb)
        } else {
            tables.join_rank(ra, rb)
        };
        oriented[weak_result] == table[oriented[ra] * m + oriented[rb]] as usize
    };
    match pairs {
        Some(pairs) => pairs.iter().all(|&(ra, rb)| check(ra, rb)),
        None => (0..tables.len()).all(|ra| (0..tables.len()).all(|rb| check(ra, rb))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::IntervalHypergraph;

    fn interval(n: usize, edges: &[&str]) -> IntervalHypergraph {
        Hypergraph::from_digits(n, edges)
            .unwrap()
            .as_interval()
            .unwrap()
    }

    #[test]
    fn source_order_examples() {
        let iv = interval(4, &["123", "23", "234", "1234"]);
        let lo = iv.orientation_from_tuple(&[1, 1, 2, 2]).unwrap();
        let hi = iv.orientation_from_tuple(&[3, 3, 3, 3]).unwrap();
        assert!(leq_source(&lo, &hi));
        assert!(!leq_source(&hi, &lo));
        for o in iv.acyclic_orientations() {
            assert!(leq_source(&o, &o));
        }
    }

    #[test]
    fn poset_constructions_coincide_on_intervals() {
        let cases: Vec<(usize, Vec<&str>)> = vec![
            (4, vec!["123", "23", "234", "1234"]),
            (3, vec!["12", "23", "123"]),
            (4, vec!["123", "234"]),
            (4, vec!["12", "123", "1234", "234", "34"]),
        ];
        for (n, edges) in cases {
            let iv = interval(n, &edges);
            let by_source = source_order_poset(&iv);
            let by_flips = flip_closure_poset(iv.hypergraph());
            assert_eq!(by_source.elements, by_flips.elements);
            assert_eq!(by_source.poset, by_flips.poset);
        }
    }

    #[test]
    fn figure_poset_shapes() {
        let fig1 = Hypergraph::from_digits(4, &["123", "134"]).unwrap();
        let hp = fig1.orientation_poset();
        assert_eq!(hp.len(), 7);
        assert_eq!(hp.poset.covers().len(), 8);

        let tamari4 = IntervalHypergraph::all_intervals(4).unwrap();
        assert_eq!(tamari4.hypergraph().orientation_poset().len(), 14);

        let singles = Hypergraph::new::<[Vertex; 0]>(3, &[]).unwrap();
        assert_eq!(singles.orientation_poset().len(), 1);
    }

    #[test]
    fn lattice_verdicts_on_figures() {
        let not_lattice = interval(4, &["123", "234"]);
        assert!(!not_lattice.hypergraph().orientation_poset().poset.is_lattice());

        let freehedron = interval(4, &["12", "123", "1234", "234", "34"]);
        let hp = freehedron.hypergraph().orientation_poset();
        assert_eq!(hp.len(), 12);
        assert!(!hp.poset.is_lattice());

        let chainish = interval(3, &["12", "123"]);
        assert!(chainish.hypergraph().orientation_poset().poset.is_lattice());
    }

    #[test]
    fn general_hypergraphs_escape_the_interval_characterizations() {
        // Lattice despite missing intersections: a non-interval effect.
        let hg = Hypergraph::new(
            5,
            &[
                vec![1u8, 2, 3, 4],
                vec![2, 3, 4, 5],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4],
            ],
        )
        .unwrap();
        assert!(hg.as_interval().is_none());
        assert!(hg.orientation_poset().poset.is_lattice());

        // Closed under intersection yet not a lattice: graph edges only.
        let zono = Hypergraph::new(4, &[vec![1u8, 2], vec![1, 3], vec![2, 4], vec![3, 4]]).unwrap();
        assert!(!zono.orientation_poset().poset.is_lattice());
    }

    #[test]
    fn order_equivalences_agree_when_closed() {
        let iv = interval(4, &["123", "23", "234", "1234"]);
        let elements = iv.acyclic_orientations();
        for a in &elements {
            for b in &elements {
                let cond = order_equivalences(&iv, a, b);
                assert!(cond.all_agree(), "{a:?} vs {b:?}: {cond:?}");
            }
        }
        let same = order_equivalences(&iv, &elements[0], &elements[0]);
        assert!(same.flip_reachable && same.source_leq);
    }

    #[test]
    fn order_equivalences_negative_control() {
        // Not closed under intersection: source order holds but the weak
        // bound comparison fails.
        let iv = interval(4, &["123", "234"]);
        let a = iv.orientation_from_tuple(&[1, 3]).unwrap();
        let c = iv.orientation_from_tuple(&[2, 4]).unwrap();
        assert!(iv.is_acyclic(&a) && iv.is_acyclic(&c));
        assert!(leq_source(&a, &c));
        assert!(iv.hypergraph().flip_reachable(&a, &c));
        let (lo_a, _) = iv.fiber_bounds(&a);
        let (_, hi_c) = iv.fiber_bounds(&c);
        assert_eq!((lo_a.to_string(), hi_c.to_string()), ("1324".into(), "4231".into()));
        assert!(!weak_bounds_leq(&iv, &a, &c));
    }

    #[test]
    fn join_and_meet_examples() {
        let iv = interval(4, &["123", "23", "234", "1234"]);
        let a = iv.orientation_from_tuple(&[2, 2, 2, 2]).unwrap();
        let b = iv.orientation_from_tuple(&[1, 1, 3, 3]).unwrap();
        let join = hyp_join(&iv, &[a.clone(), b.clone()]);
        assert_eq!(iv.orientation_tuple(&join), "(3,3,3,3)");
        let meet = hyp_meet(&iv, &[a.clone(), b.clone()]);
        assert_eq!(iv.orientation_tuple(&meet), "(1,1,2,2)");

        assert_eq!(hyp_join(&iv, std::slice::from_ref(&a)), a);
        assert_eq!(join_via_weak_order(&iv, &a, &b), join);
        assert_eq!(meet_via_weak_order(&iv, &a, &b), meet);
    }

    #[test]
    fn join_routes_agree_with_brute_force() {
        let iv = interval(4, &["123", "23", "234", "1234"]);
        let hp = source_order_poset(&iv);
        for (x, a) in hp.elements.iter().enumerate() {
            for (y, b) in hp.elements.iter().enumerate() {
                let join = hyp_join(&iv, &[a.clone(), b.clone()]);
                let meet = hyp_meet(&iv, &[a.clone(), b.clone()]);
                assert_eq!(hp.poset.join_of(x, y), hp.index_of(&join));
                assert_eq!(hp.poset.meet_of(x, y), hp.index_of(&meet));
            }
        }
    }

    #[test]
    fn vertex_irreducible_examples() {
        let square = interval(3, &["12", "123"]);
        let items = vertex_irreducibles(&square);
        let shown: Vec<(Vertex, Interval)> = items.iter().map(|x| (x.vertex, x.core)).collect();
        assert_eq!(shown, vec![(2, Interval::new(1, 2)), (3, Interval::new(1, 3))]);
        let a2 = vertex_irreducible_orientation(&square, 2).unwrap();
        let a3 = vertex_irreducible_orientation(&square, 3).unwrap();
        assert_eq!(square.orientation_tuple(&a2), "(2,2)");
        assert_eq!(square.orientation_tuple(&a3), "(1,3)");
        assert!(!leq_source(&a2, &a3) && !leq_source(&a3, &a2));
        assert!(vertex_irreducible_orientation(&square, 1).is_none());

        let nested = interval(4, &["123", "1234"]);
        let a2 = vertex_irreducible_orientation(&nested, 2).unwrap();
        let a3 = vertex_irreducible_orientation(&nested, 3).unwrap();
        assert!(leq_source(&a2, &a3));
    }

    #[test]
    fn pair_irreducible_examples() {
        let pentagon = interval(3, &["12", "23", "123"]);
        let pairs: Vec<(Vertex, Vertex)> =
            pair_irreducibles(&pentagon).iter().map(|x| x.pair()).collect();
        assert_eq!(pairs, vec![(1, 2), (1, 3), (2, 3)]);
        let a13 = pair_irreducible_orientation(&pentagon, 1, 3).unwrap();
        assert_eq!(pentagon.orientation_tuple(&a13), "(1,3,3)");

        let semi = interval(4, &["123", "23", "234", "1234"]);
        let pairs: Vec<(Vertex, Vertex)> =
            pair_irreducibles(&semi).iter().map(|x| x.pair()).collect();
        assert_eq!(pairs, vec![(1, 2), (2, 3), (1, 4), (2, 4)]);

        let fan = interval(4, &["23", "34", "1234"]);
        let pairs: Vec<(Vertex, Vertex)> =
            pair_irreducibles(&fan).iter().map(|x| x.pair()).collect();
        assert_eq!(pairs, vec![(1, 2), (2, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn pair_order_matches_source_order() {
        for edges in [
            vec!["12", "23", "123"],
            vec!["123", "23", "234", "1234"],
            vec!["23", "34", "1234"],
            vec!["12", "23", "34", "123", "234", "1234"],
        ] {
            let n = edges.iter().flat_map(|e| e.chars()).map(|c| c.to_digit(10).unwrap()).max().unwrap() as usize;
            let iv = interval(n, &edges);
            let items = pair_irreducible_orientations(&iv);
            for (p, op) in &items {
                for (q, oq) in &items {
                    assert_eq!(
                        pair_preceq(&iv, p, q),
                        leq_source(op, oq),
                        "{:?} vs {:?}",
                        p.pair(),
                        q.pair()
                    );
                }
            }
        }
    }

    #[test]
    fn tamari3_pair_order_has_the_nested_relation() {
        let pentagon = interval(3, &["12", "23", "123"]);
        let items = pair_irreducible_orientations(&pentagon);
        let find = |pair: (Vertex, Vertex)| {
            items
                .iter()
                .find(|(p, _)| p.pair() == pair)
                .map(|(p, _)| *p)
                .unwrap()
        };
        assert!(pair_preceq(&pentagon, &find((2, 3)), &find((1, 3))));
        assert!(!pair_preceq(&pentagon, &find((1, 3)), &find((2, 3))));
        assert!(pair_preceq(&pentagon, &find((1, 2)), &find((1, 2))));
    }

    #[test]
    fn lower_set_bijection_on_the_cube() {
        let cube = interval(4, &["123", "23", "234"]);
        let hp = source_order_poset(&cube);
        assert_eq!(hp.len(), 8);
        let mut images = Vec::new();
        for o in &hp.elements {
            let below = irreducibles_below(&cube, o);
            assert_eq!(&orientation_from_lower_set(&cube, &below), o);
            images.push(below);
        }
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 8);
        assert_eq!(
            orientation_from_lower_set(&cube, &[]),
            cube.minimum_orientation()
        );
    }

    #[test]
    fn chain_product_sizes() {
        let nested = interval(4, &["123", "1234"]);
        assert_eq!(chain_size_product(&nested), 6);
        let cube = interval(4, &["123", "23", "234"]);
        assert_eq!(chain_size_product(&cube), 8);
    }

    #[test]
    fn catalan_values() {
        let values: Vec<u64> = (0..=6).map(catalan).collect();
        assert_eq!(values, vec![1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn tamari_products() {
        let tamari4 = IntervalHypergraph::all_intervals(4).unwrap();
        assert_eq!(tamari_size_product(&tamari4), Some(14));

        // Two blocks sharing one vertex: factors stay independent.
        let shared = interval(3, &["12", "23"]);
        assert_eq!(tamari_size_product(&shared), Some(4));
        assert_eq!(shared.hypergraph().orientation_poset().len(), 4);

        // Maximal edges overlapping in two vertices: outside the product
        // regime even though closed under subintervals.
        let crossing = interval(4, &["12", "23", "34", "123", "234"]);
        assert!(crossing.subinterval_closed());
        assert_eq!(tamari_size_product(&crossing), None);
        assert_eq!(crossing.hypergraph().orientation_poset().len(), 12);

        let open = interval(4, &["123", "1234"]);
        assert_eq!(tamari_size_product(&open), None);
    }

    #[test]
    fn morphism_tests_match_subinterval_closure() {
        let tables = WeakOrderTables::new(3);
        let tamari3 = IntervalHypergraph::all_intervals(3).unwrap();
        assert!(projection_is_meet_morphism(&tamari3, &tables));
        assert!(projection_is_join_morphism(&tamari3, &tables));

        let gap = interval(3, &["123"]);
        assert!(!projection_is_meet_morphism(&gap, &tables));
        assert!(!projection_is_join_morphism(&gap, &tables));

        let tables4 = WeakOrderTables::new(4);
        let initial = IntervalHypergraph::initial_intervals(4).unwrap();
        assert!(projection_is_meet_morphism(&initial, &tables4));
        assert!(!projection_is_join_morphism(&initial, &tables4));
    }
}
