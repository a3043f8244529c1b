//! Permutations of `[n]` under the weak order, and the projection that sends
//! a permutation to the orientation picking, in each edge, the member that
//! appears earliest.
//!
//! The weak order is handled through inversion sets: comparison is inclusion,
//! the join closes the union transitively, and the meet goes through the
//! value-complement symmetry.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::hypergraph::{Hypergraph, IntervalHypergraph, Vertex};
use crate::orientation::{Orientation, VertexPoset};

#[derive(Debug, Error)]
pub enum PermutationError {
    #[error("word {0:?} is not a permutation of 1..=n")]
    NotAPermutation(String),
    #[error("cannot parse permutation {0:?}")]
    Parse(String),
}

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<Vertex>,
}

impl Permutation {
    pub fn identity(n: Vertex) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn from_word(word: Vec<Vertex>) -> Result<Self, PermutationError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(PermutationError::NotAPermutation(format!("{word:?}")));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { word })
    }

    pub fn n(&self) -> Vertex {
        self.word.len() as Vertex
    }

    pub fn word(&self) -> &[Vertex] {
        &self.word
    }

    /// 0-based position of a value in the word.
    pub fn position_of(&self, v: Vertex) -> usize {
        self.word.iter().position(|&x| x == v).expect("value in range")
    }

    /// Map every value through `v ↦ n - v + 1`, keeping positions. An
    /// order-reversing involution of the weak order.
    pub fn value_complement(&self) -> Permutation {
        let n = self.n();
        Permutation {
            word: self.word.iter().map(|&v| n - v + 1).collect(),
        }
    }

    /// Pairs `(b, a)` with `a < b` such that `b` precedes `a`.
    pub fn inversions(&self) -> InversionSet {
        let n = self.n();
        let mut inv = InversionSet::empty(n);
        for (pos, &b) in self.word.iter().enumerate() {
            for &a in &self.word[pos + 1..] {
                if a < b {
                    inv.insert(a, b);
                }
            }
        }
        inv
    }

    /// Pattern containment for short patterns: some index subsequence is
    /// order-isomorphic to the pattern.
    pub fn avoids(&self, pattern: &Permutation) -> bool {
        let k = pattern.word.len();
        assert!(k == 3, "pattern scan implemented for length-3 patterns");
        let w = &self.word;
        let p = &pattern.word;
        for x in 0..w.len() {
            for y in x + 1..w.len() {
                for z in y + 1..w.len() {
                    let triple = [w[x], w[y], w[z]];
                    let mut rank = [0u8; 3];
                    for a in 0..3 {
                        rank[a] = 1 + triple.iter().filter(|&&v| v < triple[a]).count() as u8;
                    }
                    if rank == [p[0], p[1], p[2]] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for Permutation {
    /// Digit string for n <= 9 (`4132`), comma-separated beyond.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = PermutationError;

    fn from_str(text: &str) -> Result<Self, PermutationError> {
        let text = text.trim();
        let word: Vec<Vertex> = if text.contains(',') {
            text.split(',')
                .map(|p| p.trim().parse::<Vertex>())
                .collect::<Result<_, _>>()
                .map_err(|_| PermutationError::Parse(text.to_string()))?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d >= 1)
                        .map(|d| d as Vertex)
                        .ok_or_else(|| PermutationError::Parse(text.to_string()))
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::from_word(word).map_err(|_| PermutationError::Parse(text.to_string()))
    }
}

/// An inversion set over `[n]`: bit for each pair `(a, b)` with `a < b`,
/// set when `b` precedes `a`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct InversionSet {
    n: Vertex,
    bits: u128,
}

impl InversionSet {
    pub fn empty(n: Vertex) -> Self {
        InversionSet { n, bits: 0 }
    }

    fn index(a: Vertex, b: Vertex) -> u32 {
        debug_assert!(a < b);
        (b as u32 - 1) * (b as u32 - 2) / 2 + (a as u32 - 1)
    }

    pub fn n(&self) -> Vertex {
        self.n
    }

    /// Whether the pair `a < b` is inverted.
    pub fn contains(&self, a: Vertex, b: Vertex) -> bool {
        self.bits >> Self::index(a, b) & 1 == 1
    }

    pub fn insert(&mut self, a: Vertex, b: Vertex) {
        self.bits |= 1 << Self::index(a, b);
    }

    pub fn len(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_subset(&self, other: &InversionSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &InversionSet) -> InversionSet {
        debug_assert_eq!(self.n, other.n);
        InversionSet {
            n: self.n,
            bits: self.bits | other.bits,
        }
    }

    /// Close under composition of descents: inverted `(b, c)` and `(a, b)`
    /// force `(a, c)` for `a < b < c`.
    pub fn transitive_closure(&self) -> InversionSet {
        let mut out = *self;
        for mid in 1..=self.n {
            for a in 1..mid {
                if out.contains(a, mid) {
                    for c in mid + 1..=self.n {
                        if out.contains(mid, c) {
                            out.insert(a, c);
                        }
                    }
                }
            }
        }
        out
    }

    /// The unique permutation with this inversion set. Panics when the set
    /// is not realizable (possible only on inputs that are not transitively
    /// closed and co-closed).
    pub fn to_permutation(&self) -> Permutation {
        let n = self.n;
        let mut placed = vec![false; n as usize + 1];
        let mut word = Vec::with_capacity(n as usize);
        for _ in 0..n {
            let mut chosen = None;
            'next: for v in 1..=n {
                if placed[v as usize] {
                    continue;
                }
                for u in 1..=n {
                    if u == v || placed[u as usize] {
                        continue;
                    }
                    let u_first = if u < v {
                        !self.contains(u, v)
                    } else {
                        self.contains(v, u)
                    };
                    if u_first {
                        continue 'next;
                    }
                }
                chosen = Some(v);
                break;
            }
            let v = chosen.expect("inversion set is realizable");
            placed[v as usize] = true;
            word.push(v);
        }
        let out = Permutation { word };
        debug_assert_eq!(out.inversions(), *self);
        out
    }
}

impl fmt::Debug for InversionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pairs = Vec::new();
        for b in 2..=self.n {
            for a in 1..b {
                if self.contains(a, b) {
                    pairs.push(format!("({b},{a})"));
                }
            }
        }
        write!(f, "{{{}}}", pairs.join(", "))
    }
}

/// Weak-order comparison: inclusion of inversion sets.
pub fn weak_leq(s: &Permutation, t: &Permutation) -> bool {
    assert_eq!(s.n(), t.n());
    s.inversions().is_subset(&t.inversions())
}

/// Least upper bound in the weak order: transitive closure of the union of
/// the inversion sets.
pub fn weak_join(s: &Permutation, t: &Permutation) -> Permutation {
    assert_eq!(s.n(), t.n());
    s.inversions()
        .union(&t.inversions())
        .transitive_closure()
        .to_permutation()
}

/// Greatest lower bound, as the join under the value-complement symmetry.
pub fn weak_meet(s: &Permutation, t: &Permutation) -> Permutation {
    weak_join(&s.value_complement(), &t.value_complement()).value_complement()
}

impl Hypergraph {
    /// Project a permutation to the orientation selecting from each edge the
    /// member that appears earliest. Always acyclic.
    pub fn orient(&self, pi: &Permutation) -> Orientation {
        assert_eq!(pi.n(), self.n());
        let mut position = vec![0usize; self.n() as usize + 1];
        for (pos, &v) in pi.word().iter().enumerate() {
            position[v as usize] = pos;
        }
        let choices: Vec<Vertex> = self
            .non_singleton_indices()
            .map(|k| {
                self.edge(k)
                    .iter()
                    .min_by_key(|&v| position[v as usize])
                    .expect("edges are nonempty")
            })
            .collect();
        self.orientation_from_tuple(&choices)
            .expect("projection picks members")
    }

    /// All permutations projecting to the given acyclic orientation: the
    /// linear extensions of its vertex order, in lexicographic order.
    pub fn fiber(&self, a: &Orientation) -> Vec<Permutation> {
        self.vertex_poset(a)
            .linear_extension_words()
            .into_iter()
            .map(|word| Permutation { word })
            .collect()
    }
}

impl VertexPoset {
    /// Minimal and maximal linear extensions in the weak order, built from
    /// the inversion sets the vertex order forces and permits.
    pub fn extension_bounds(&self) -> (Permutation, Permutation) {
        let n = self.n();
        let mut forced = InversionSet::empty(n);
        let mut allowed = InversionSet::empty(n);
        for a in 1..=n {
            for b in a + 1..=n {
                if self.lt(b, a) {
                    forced.insert(a, b);
                }
                if !self.lt(a, b) {
                    allowed.insert(a, b);
                }
            }
        }
        (forced.to_permutation(), allowed.to_permutation())
    }
}

impl IntervalHypergraph {
    /// Minimum and maximum of the fiber of an acyclic orientation in the
    /// weak order. The fiber is a full weak-order interval between them.
    pub fn fiber_bounds(&self, a: &Orientation) -> (Permutation, Permutation) {
        self.hypergraph().vertex_poset(a).extension_bounds()
    }
}

/// All permutations of `[n]` in lexicographic order, with rank lookup and
/// precomputed join and meet tables. Shared by the brute-force morphism
/// scans so each pair costs two table reads.
pub struct WeakOrderTables {
    n: Vertex,
    perms: Vec<Permutation>,
    join: Vec<u32>,
    meet: Vec<u32>,
}

impl WeakOrderTables {
    /// Quadratic in `n!`; capped where the pair scans stay desk-sized.
    pub fn new(n: Vertex) -> Self {
        assert!(n <= 6, "weak-order tables are capped at n = 6 (518k pairs)");
        let perms = all_permutations(n);
        let count = perms.len();
        let mut join = vec![0u32; count * count];
        let mut meet = vec![0u32; count * count];
        for (a, s) in perms.iter().enumerate() {
            for (b, t) in perms.iter().enumerate().skip(a) {
                let j = lex_rank(&weak_join(s, t));
                let m = lex_rank(&weak_meet(s, t));
                join[a * count + b] = j;
                join[b * count + a] = j;
                meet[a * count + b] = m;
                meet[b * count + a] = m;
            }
        }
        WeakOrderTables {
            n,
            perms,
            join,
            meet,
        }
    }

    pub fn n(&self) -> Vertex {
        self.n
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn permutation(&self, rank: usize) -> &Permutation {
        &self.perms[rank]
    }

    pub fn permutations(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn rank(&self, pi: &Permutation) -> usize {
        lex_rank(pi) as usize
    }

    pub fn join_rank(&self, a: usize, b: usize) -> usize {
        self.join[a * self.perms.len() + b] as usize
    }

    pub fn meet_rank(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.perms.len() + b] as usize
    }
}

/// All permutations of `[n]`, lexicographically.
pub fn all_permutations(n: Vertex) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word: Vec<Vertex> = Vec::with_capacity(n as usize);
    let mut used = vec![false; n as usize + 1];
    fn rec(
        n: Vertex,
        word: &mut Vec<Vertex>,
        used: &mut Vec<bool>,
        out: &mut Vec<Permutation>,
    ) {
        if word.len() == n as usize {
            out.push(Permutation { word: word.clone() });
            return;
        }
        for v in 1..=n {
            if !used[v as usize] {
                used[v as usize] = true;
                word.push(v);
                rec(n, word, used, out);
                word.pop();
                used[v as usize] = false;
            }
        }
    }
    rec(n, &mut word, &mut used, &mut out);
    out
}

/// Rank in the lexicographic order of all permutations of the same size.
fn lex_rank(pi: &Permutation) -> u32 {
    let n = pi.n() as usize;
    let mut factorial = vec![1u32; n + 1];
    for k in 1..=n {
        factorial[k] = factorial[k - 1] * k as u32;
    }
    let word = pi.word();
    let mut rank = 0u32;
    for (pos, &v) in word.iter().enumerate() {
        let smaller_later = word[pos + 1..].iter().filter(|&&u| u < v).count() as u32;
        rank += smaller_later * factorial[n - 1 - pos];
    }
    rank
}
