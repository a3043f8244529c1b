//! Finite posets as bit-matrix order relations, with the definitional
//! lattice-property tests used as oracles: joins and meets by scanning bound
//! sets, distributivity and semidistributivity by triple loops over
//! precomputed tables, join irreducibles by cover counting.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PosetError {
    #[error("relation pair ({0}, {1}) out of range")]
    PairOutOfRange(usize, usize),
    #[error("cycle detected: transitive closure violates antisymmetry")]
    CycleDetected,
    #[error("operation requires a lattice")]
    NotALattice,
}

const WORD: usize = 64;

fn row_words(m: usize) -> usize {
    m.div_ceil(WORD)
}

/// A finite poset on `{0, …, m-1}` with display labels. `up[a]` stores the
/// principal filter of `a` as a bitset, `down[a]` the principal ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poset {
    labels: Vec<String>,
    up: Vec<Vec<u64>>,
    down: Vec<Vec<u64>>,
}

fn get(row: &[u64], b: usize) -> bool {
    row[b / WORD] >> (b % WORD) & 1 == 1
}

fn set(row: &mut [u64], b: usize) {
    row[b / WORD] |= 1 << (b % WORD);
}

fn or_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

fn iter_bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &bits)| {
        let mut bits = bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * WORD + b)
            }
        })
    })
}

impl Poset {
    /// Reflexive-transitive closure of the given strict pairs `(a, b)`
    /// meaning `a <= b`. Fails if the closure has a two-way comparison.
    pub fn from_relation(
        m: usize,
        pairs: &[(usize, usize)],
        labels: Option<Vec<String>>,
    ) -> Result<Self, PosetError> {
        let words = row_words(m);
        let mut up = vec![vec![0u64; words]; m];
        for (a, row) in up.iter_mut().enumerate() {
            set(row, a);
        }
        for &(a, b) in pairs {
            if a >= m || b >= m {
                return Err(PosetError::PairOutOfRange(a, b));
            }
            set(&mut up[a], b);
        }
        // Warshall closure over bitrows.
        for mid in 0..m {
            for a in 0..m {
                if a != mid && get(&up[a], mid) {
                    let (row_a, row_mid) = if a < mid {
                        let (lo, hi) = up.split_at_mut(mid);
                        (&mut lo[a], &hi[0])
                    } else {
                        let (lo, hi) = up.split_at_mut(a);
                        (&mut hi[0], &lo[mid])
                    };
                    or_into(row_a, row_mid);
                }
            }
        }
        for a in 0..m {
            for b in a + 1..m {
                if get(&up[a], b) && get(&up[b], a) {
                    return Err(PosetError::CycleDetected);
                }
            }
        }
        Ok(Poset::finish(m, up, labels))
    }

    /// Build from a comparison function that is already a partial order.
    pub fn from_leq<F: Fn(usize, usize) -> bool>(
        m: usize,
        labels: Option<Vec<String>>,
        leq: F,
    ) -> Self {
        let words = row_words(m);
        let mut up = vec![vec![0u64; words]; m];
        for (a, row) in up.iter_mut().enumerate() {
            for b in 0..m {
                if a == b || leq(a, b) {
                    set(row, b);
                }
            }
        }
        let poset = Poset::finish(m, up, labels);
        debug_assert!(poset.is_partial_order());
        poset
    }

    fn finish(m: usize, up: Vec<Vec<u64>>, labels: Option<Vec<String>>) -> Self {
        let words = row_words(m);
        let mut down = vec![vec![0u64; words]; m];
        for (a, row) in up.iter().enumerate() {
            for b in iter_bits(row) {
                set(&mut down[b], a);
            }
        }
        let labels = labels.unwrap_or_else(|| (0..m).map(|k| k.to_string()).collect());
        assert_eq!(labels.len(), m);
        Poset { labels, up, down }
    }

    fn is_partial_order(&self) -> bool {
        let m = self.len();
        for a in 0..m {
            if !self.leq(a, a) {
                return false;
            }
            for b in 0..m {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return false;
                }
                if self.leq(a, b) {
                    for c in iter_bits(&self.up[b]) {
                        if !self.leq(a, c) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        get(&self.up[a], b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Hasse edges `(a, b)` with `b` covering `a`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let m = self.len();
        let mut out = Vec::new();
        for a in 0..m {
            for b in iter_bits(&self.up[a]) {
                if b == a {
                    continue;
                }
                let has_middle = iter_bits(&self.up[a]).any(|c| c != a && c != b && self.lt(c, b));
                if !has_middle {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Least upper bound of a pair, when it exists.
    pub fn join_of(&self, a: usize, b: usize) -> Option<usize> {
        let bound: Vec<u64> = self.up[a]
            .iter()
            .zip(&self.up[b])
            .map(|(x, y)| x & y)
            .collect();
        let least =
            iter_bits(&bound).find(|&u| bound.iter().zip(&self.up[u]).all(|(x, y)| x & !y == 0));
        least
    }

    /// Greatest lower bound of a pair, when it exists.
    pub fn meet_of(&self, a: usize, b: usize) -> Option<usize> {
        let bound: Vec<u64> = self.down[a]
            .iter()
            .zip(&self.down[b])
            .map(|(x, y)| x & y)
            .collect();
        let greatest =
            iter_bits(&bound).find(|&u| bound.iter().zip(&self.down[u]).all(|(x, y)| x & !y == 0));
        greatest
    }

    /// Full pairwise join table, `None` when some pair has no join.
    pub fn join_table(&self) -> Option<Vec<u32>> {
        let m = self.len();
        let mut table = vec![0u32; m * m];
        for a in 0..m {
            for b in a..m {
                let j = self.join_of(a, b)? as u32;
                table[a * m + b] = j;
                table[b * m + a] = j;
            }
        }
        Some(table)
    }

    /// Full pairwise meet table, `None` when some pair has no meet.
    pub fn meet_table(&self) -> Option<Vec<u32>> {
        let m = self.len();
        let mut table = vec![0u32; m * m];
        for a in 0..m {
            for b in a..m {
                let w = self.meet_of(a, b)? as u32;
                table[a * m + b] = w;
                table[b * m + a] = w;
            }
        }
        Some(table)
    }

    /// Every pair has a join and a meet. (For finite posets this also gives
    /// bounds, hence joins and meets of all subsets.)
    pub fn is_lattice(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        self.join_table().is_some() && self.meet_table().is_some()
    }

    /// Both distributive identities over all triples. Requires a lattice.
    pub fn is_distributive(&self) -> bool {
        let m = self.len();
        let join = self.join_table().expect("distributivity needs a lattice");
        let meet = self.meet_table().expect("distributivity needs a lattice");
        let j = |a: usize, b: usize| join[a * m + b] as usize;
        let w = |a: usize, b: usize| meet[a * m + b] as usize;
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if j(a, w(b, c)) != w(j(a, b), j(a, c)) {
                        return false;
                    }
                    if w(a, j(b, c)) != j(w(a, b), w(a, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `a ∨ b = a ∨ c  ⇒  a ∨ (b ∧ c) = a ∨ b` over all triples.
    pub fn is_join_semidistributive(&self) -> bool {
        let m = self.len();
        let join = self.join_table().expect("semidistributivity needs a lattice");
        let meet = self.meet_table().expect("semidistributivity needs a lattice");
        let j = |a: usize, b: usize| join[a * m + b] as usize;
        let w = |a: usize, b: usize| meet[a * m + b] as usize;
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if j(a, b) == j(a, c) && j(a, w(b, c)) != j(a, b) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Dual of the join version.
    pub fn is_meet_semidistributive(&self) -> bool {
        let m = self.len();
        let join = self.join_table().expect("semidistributivity needs a lattice");
        let meet = self.meet_table().expect("semidistributivity needs a lattice");
        let j = |a: usize, b: usize| join[a * m + b] as usize;
        let w = |a: usize, b: usize| meet[a * m + b] as usize;
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if w(a, b) == w(a, c) && w(a, j(b, c)) != w(a, b) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Elements covering exactly one element.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        let covers = self.covers();
        let mut covered_count = vec![0usize; self.len()];
        for &(_, b) in &covers {
            covered_count[b] += 1;
        }
        (0..self.len()).filter(|&x| covered_count[x] == 1).collect()
    }

    /// Unique minimum, if the poset has one.
    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&a| (0..self.len()).all(|b| self.leq(a, b)))
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&a| (0..self.len()).all(|b| self.leq(b, a)))
    }

    /// Each element has at most one cover and at most one cocover; the Hasse
    /// diagram is then a disjoint union of paths.
    pub fn is_disjoint_union_of_chains(&self) -> bool {
        let covers = self.covers();
        let mut outdeg = vec![0usize; self.len()];
        let mut indeg = vec![0usize; self.len()];
        for &(a, b) in &covers {
            outdeg[a] += 1;
            indeg[b] += 1;
        }
        outdeg.iter().all(|&d| d <= 1) && indeg.iter().all(|&d| d <= 1)
    }

    /// All down-closed subsets, as sorted element lists. Exponential; meant
    /// for the small irreducible posets.
    pub fn lower_sets(&self) -> Vec<Vec<usize>> {
        self.lower_set_masks()
            .into_iter()
            .map(|mask| (0..self.len()).filter(|&x| mask >> x & 1 == 1).collect())
            .collect()
    }

    pub(crate) fn lower_set_masks(&self) -> Vec<u64> {
        let m = self.len();
        assert!(m <= 24, "lower-set enumeration is exponential in size");
        let down_masks: Vec<u64> = (0..m)
            .map(|x| iter_bits(&self.down[x]).fold(0u64, |acc, y| acc | 1 << y))
            .collect();
        (0u64..1 << m)
            .filter(|&mask| {
                (0..m).all(|x| mask >> x & 1 == 0 || down_masks[x] & !mask == 0)
            })
            .collect()
    }

    /// Subposet induced on the given elements, which become `0..k` in order.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let labels = elements.iter().map(|&x| self.labels[x].clone()).collect();
        Poset::from_leq(elements.len(), Some(labels), |a, b| {
            self.leq(elements[a], elements[b])
        })
    }

    /// DOT digraph of the Hasse diagram, cover edges pointing upward.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=box];\n");
        for (k, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {k} [label=\"{label}\"];");
        }
        for (a, b) in self.covers() {
            let _ = writeln!(out, "  {a} -> {b};");
        }
        out.push_str("}\n");
        out
    }

    /// JSON form `{"elements": […], "covers": [[a,b],…]}`.
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "elements": self.labels,
            "covers": self.covers(),
        })
        .to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(k: usize) -> Poset {
        let pairs: Vec<(usize, usize)> = (0..k.saturating_sub(1)).map(|a| (a, a + 1)).collect();
        Poset::from_relation(k, &pairs, None).unwrap()
    }

    fn antichain(k: usize) -> Poset {
        Poset::from_relation(k, &[], None).unwrap()
    }

    /// The boolean lattice on `bits` atoms.
    fn boolean(bits: usize) -> Poset {
        Poset::from_leq(1 << bits, None, |a, b| a & !b == 0)
    }

    #[test]
    fn closure_and_covers() {
        let p = chain(3);
        assert!(p.leq(0, 2));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(antichain(4).covers().len(), 0);
        assert!(matches!(
            Poset::from_relation(3, &[(0, 1), (1, 2), (2, 0)], None),
            Err(PosetError::CycleDetected)
        ));
        assert!(matches!(
            Poset::from_relation(2, &[(0, 5)], None),
            Err(PosetError::PairOutOfRange(0, 5))
        ));
    }

    #[test]
    fn closure_of_reduction_is_identity() {
        let b = boolean(3);
        let again = Poset::from_relation(b.len(), &b.covers(), None).unwrap();
        assert_eq!(b, again);
    }

    #[test]
    fn lattice_oracles_on_known_posets() {
        assert!(chain(4).is_lattice());
        assert!(!antichain(2).is_lattice());
        let b = boolean(3);
        assert!(b.is_lattice());
        assert!(b.is_distributive());
        assert!(b.is_join_semidistributive() && b.is_meet_semidistributive());

        // Diamond M3: three incomparable middles between bottom and top.
        let m3 = Poset::from_relation(
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
            None,
        )
        .unwrap();
        assert!(m3.is_lattice());
        assert!(!m3.is_distributive());
        assert!(!m3.is_join_semidistributive() && !m3.is_meet_semidistributive());

        // Pentagon N5: semidistributive but not distributive.
        let n5 = Poset::from_relation(5, &[(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)], None).unwrap();
        assert!(n5.is_lattice());
        assert!(!n5.is_distributive());
        assert!(n5.is_join_semidistributive() && n5.is_meet_semidistributive());
    }

    #[test]
    fn join_and_meet_partiality() {
        // Two incomparable tops: joins of the bottoms are ambiguous.
        let p = Poset::from_relation(4, &[(0, 2), (0, 3), (1, 2), (1, 3)], None).unwrap();
        assert_eq!(p.join_of(0, 1), None);
        assert_eq!(p.meet_of(2, 3), None);
        assert!(!p.is_lattice());

        let b = boolean(2);
        assert_eq!(b.join_of(1, 2), Some(3));
        assert_eq!(b.meet_of(1, 2), Some(0));
    }

    #[test]
    fn irreducibles_and_chains() {
        assert_eq!(chain(5).join_irreducibles(), vec![1, 2, 3, 4]);
        let b = boolean(3);
        assert_eq!(b.join_irreducibles(), vec![1, 2, 4]);
        assert!(antichain(3).is_disjoint_union_of_chains());
        assert!(chain(4).is_disjoint_union_of_chains());
        assert!(!boolean(2).is_disjoint_union_of_chains());
    }

    #[test]
    fn lower_sets_of_small_posets() {
        assert_eq!(antichain(3).lower_sets().len(), 8);
        assert_eq!(chain(3).lower_sets().len(), 4);
        let v = Poset::from_relation(3, &[(0, 1), (0, 2)], None).unwrap();
        let sets = v.lower_sets();
        assert_eq!(sets.len(), 5);
        assert!(sets.contains(&vec![0, 1]));
        assert!(!sets.iter().any(|s| s == &vec![1]));
    }

    #[test]
    fn minimum_and_maximum() {
        let b = boolean(2);
        assert_eq!(b.minimum(), Some(0));
        assert_eq!(b.maximum(), Some(3));
        assert_eq!(antichain(2).minimum(), None);
    }

    #[test]
    fn birkhoff_at_small_scale() {
        // For a distributive lattice, mapping each element to the set of
        // irreducibles below it is an order isomorphism onto the lower sets
        // of the irreducible subposet.
        let b = boolean(3);
        let irr = b.join_irreducibles();
        let sub = b.induced(&irr);
        let mut images: Vec<Vec<usize>> = (0..b.len())
            .map(|x| {
                (0..irr.len())
                    .filter(|&k| b.leq(irr[k], x))
                    .collect::<Vec<usize>>()
            })
            .collect();
        for (x, sx) in images.iter().enumerate() {
            for (y, sy) in images.iter().enumerate() {
                let subset = sx.iter().all(|k| sy.contains(k));
                assert_eq!(b.leq(x, y), subset);
            }
        }
        images.sort();
        images.dedup();
        let mut lower = sub.lower_sets();
        lower.sort();
        assert_eq!(images, lower);
    }

    #[test]
    fn exports_are_consistent() {
        let p = chain(3);
        let dot = p.to_dot();
        assert!(dot.contains("0 -> 1;") && dot.contains("1 -> 2;"));
        let json: serde_json::Value = serde_json::from_str(&p.to_json()).unwrap();
        assert_eq!(json["covers"].as_array().unwrap().len(), 2);
        assert_eq!(json["elements"].as_array().unwrap().len(), 3);
    }
}
