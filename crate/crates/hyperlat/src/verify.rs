//! The exhaustive cross-checking harness: for each interval hypergraph it
//! evaluates every structural characterization next to the definitional
//! oracle it describes, and reports the verdict pairs. Zero mismatches over
//! a sweep is the machine check of the characterization theorems at that
//! size.

use std::collections::HashMap;
use std::time::Instant;

use serde_json::{json, Value};

use crate::hypergraph::{
    interval_hypergraph_at, interval_hypergraph_count, Hypergraph, HypergraphError,
    IntervalHypergraph, Vertex,
};
use crate::lattice::{
    chain_size_product, hyp_join, hyp_meet, irreducibles_below, join_via_weak_order, leq_source,
    meet_via_weak_order, orientation_from_lower_set, pair_irreducible_orientations, pair_preceq,
    projection_is_join_morphism, projection_is_join_morphism_on_pairs,
    projection_is_meet_morphism, projection_is_meet_morphism_on_pairs, source_order_poset,
    tamari_size_product, vertex_irreducible_orientation, vertex_irreducibles,
};
use crate::orientation::Orientation;
use crate::weak::{all_permutations, weak_leq, WeakOrderTables};

/// One verdict pair: what the brute-force oracle said, and what the
/// closed-form characterization said.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub oracle: Value,
    pub characterization: Value,
}

impl Check {
    fn bools(name: &'static str, oracle: bool, characterization: bool) -> Self {
        Check {
            name,
            oracle: Value::Bool(oracle),
            characterization: Value::Bool(characterization),
        }
    }

    fn counts(name: &'static str, oracle: u64, characterization: u64) -> Self {
        Check {
            name,
            oracle: json!(oracle),
            characterization: json!(characterization),
        }
    }

    pub fn matches(&self) -> bool {
        self.oracle == self.characterization
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "oracle": self.oracle,
            "characterization": self.characterization,
            "match": self.matches(),
        })
    }
}

/// Renders a verdict for the text report: booleans as YES/NO, counts as is.
pub fn verdict_text(v: &Value) -> String {
    match v {
        Value::Bool(true) => "YES".to_string(),
        Value::Bool(false) => "NO".to_string(),
        other => other.to_string(),
    }
}

/// Report for one instance.
#[derive(Clone, Debug)]
pub struct InstanceReport {
    pub n: Vertex,
    pub index: u64,
    pub intervals: Vec<(Vertex, Vertex)>,
    pub label: String,
    pub checks: Vec<Check>,
    pub ms: u128,
}

impl InstanceReport {
    pub fn all_match(&self) -> bool {
        self.checks.iter().all(Check::matches)
    }

    pub fn mismatches(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.matches()).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "instance": { "n": self.n, "intervals": self.intervals },
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<Value>>(),
            "ms": self.ms as u64,
        })
    }
}

/// How to run the brute-force semilattice-morphism comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismMode {
    /// Every pair of permutations.
    Exhaustive,
    /// A seeded sample of rank pairs.
    SampledPairs { seed: u64, count: usize },
    Skip,
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub morphism: MorphismMode,
    /// Pairwise joins and meets: formula vs weak-order route vs brute force.
    pub joins: bool,
    /// Fibers partition the permutations, are weak-order intervals with the
    /// predicted bounds, and the bounds avoid the predicted patterns.
    pub fibers: bool,
    /// Join-irreducible count, set equality, and order agreement.
    pub irreducibles: bool,
    /// Every pending source admits an increasing flip.
    pub flippability: bool,
    /// Pairwise two-cycle test agrees with full acyclicity on every
    /// orientation of the instance.
    pub acyclicity: bool,
    /// Cover predicate agrees with the transitive reduction.
    pub covers: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            morphism: MorphismMode::Exhaustive,
            joins: true,
            fibers: true,
            irreducibles: true,
            flippability: true,
            acyclicity: true,
            covers: true,
        }
    }
}

impl CheckOptions {
    /// Only the four theorem checks.
    pub fn theorems_only() -> Self {
        CheckOptions {
            morphism: MorphismMode::Exhaustive,
            joins: false,
            fibers: false,
            irreducibles: false,
            flippability: false,
            acyclicity: false,
            covers: false,
        }
    }
}

/// Deterministic 64-bit generator for the sampling modes.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Run every configured cross-check on one interval hypergraph. When the
/// morphism mode needs the weak-order tables and none are passed, they are
/// built locally.
pub fn check_instance(
    iv: &IntervalHypergraph,
    tables: Option<&WeakOrderTables>,
    opts: &CheckOptions,
) -> InstanceReport {
    let start = Instant::now();
    let n = iv.n();
    let local_tables;
    let tables = match (tables, opts.morphism) {
        (Some(t), _) => Some(t),
        (None, MorphismMode::Skip) => None,
        (None, _) => {
            local_tables = WeakOrderTables::new(n);
            Some(&local_tables)
        }
    };

    let hp = source_order_poset(iv);
    let closed = iv.intersection_closed();
    let join_table = hp.poset.join_table();
    let meet_table = hp.poset.meet_table();
    let lattice = !hp.is_empty() && join_table.is_some() && meet_table.is_some();

    let mut checks = vec![
        Check::bools("thm1-lattice", lattice, closed),
        Check::bools(
            "thm2-distributive",
            lattice && hp.poset.is_distributive(),
            iv.is_distributive_hypergraph(),
        ),
        Check::bools(
            "thm3-join-semidistributive",
            lattice && hp.poset.is_join_semidistributive(),
            iv.is_join_sd_hypergraph(),
        ),
        Check::bools(
            "thm3-meet-semidistributive",
            lattice && hp.poset.is_meet_semidistributive(),
            iv.is_meet_sd_hypergraph(),
        ),
    ];

    if closed && lattice {
        if let (Some(tables), false) = (tables, opts.morphism == MorphismMode::Skip) {
            let (meet_ok, join_ok) = match opts.morphism {
                MorphismMode::Exhaustive => (
                    projection_is_meet_morphism(iv, tables),
                    projection_is_join_morphism(iv, tables),
                ),
                MorphismMode::SampledPairs { seed, count } => {
                    let mut rng = SplitMix64(seed ^ (n as u64) << 32);
                    let ranks = tables.len() as u64;
                    let pairs: Vec<(usize, usize)> = (0..count)
                        .map(|_| (rng.below(ranks) as usize, rng.below(ranks) as usize))
                        .collect();
                    (
                        projection_is_meet_morphism_on_pairs(iv, tables, &pairs),
                        projection_is_join_morphism_on_pairs(iv, tables, &pairs),
                    )
                }
                MorphismMode::Skip => unreachable!(),
            };
            checks.push(Check::bools(
                "thm4-meet-morphism",
                meet_ok,
                iv.initial_subinterval_closed(),
            ));
            checks.push(Check::bools(
                "thm4-join-morphism",
                join_ok,
                iv.final_subinterval_closed(),
            ));
        }

        if opts.joins {
            checks.push(join_meet_formula_check(iv, &hp));
        }
        if opts.irreducibles {
            let (count_check, bijection_check) = irreducible_checks(iv, &hp);
            checks.push(count_check);
            checks.push(bijection_check);
            if iv.is_distributive_hypergraph() {
                checks.push(lower_set_check(iv, &hp));
                checks.push(Check::counts(
                    "chain-product-count",
                    hp.len() as u64,
                    chain_size_product(iv),
                ));
            } else {
                checks.push(extra_irreducible_check(iv, &hp));
            }
        }
        if let Some(expected) = tamari_size_product(iv) {
            checks.push(Check::counts(
                "tamari-product-count",
                hp.len() as u64,
                expected,
            ));
        }
    }

    if opts.fibers {
        checks.push(fiber_check(iv, &hp));
    }
    if opts.flippability {
        checks.push(flip_existence_check(iv, &hp));
    }
    if opts.acyclicity {
        checks.push(acyclicity_agreement_check(iv));
    }
    if opts.covers {
        checks.push(cover_criterion_check(iv, &hp));
    }

    InstanceReport {
        n,
        index: 0,
        intervals: iv.non_singleton_spans().map(|s| (s.lo, s.hi)).collect(),
        label: iv.non_singleton_summary(),
        checks,
        ms: start.elapsed().as_millis(),
    }
}

fn join_meet_formula_check(
    iv: &IntervalHypergraph,
    hp: &crate::lattice::HypergraphPoset,
) -> Check {
    let mut agree = true;
    'outer: for (x, a) in hp.elements.iter().enumerate() {
        for (y, b) in hp.elements.iter().enumerate() {
            let brute_join = hp.poset.join_of(x, y);
            let brute_meet = hp.poset.meet_of(x, y);
            let pair = [a.clone(), b.clone()];
            let formula_join = hp.index_of(&hyp_join(iv, &pair));
            let formula_meet = hp.index_of(&hyp_meet(iv, &pair));
            let weak_join = hp.index_of(&join_via_weak_order(iv, a, b));
            let weak_meet = hp.index_of(&meet_via_weak_order(iv, a, b));
            if brute_join != formula_join
                || brute_join != weak_join
                || brute_meet != formula_meet
                || brute_meet != weak_meet
            {
                agree = false;
                break 'outer;
            }
        }
    }
    Check::bools("join-meet-formulas", true, agree)
}

fn irreducible_checks(
    iv: &IntervalHypergraph,
    hp: &crate::lattice::HypergraphPoset,
) -> (Check, Check) {
    let from_poset = hp.poset.join_irreducibles();
    let constructed = pair_irreducible_orientations(iv);
    let count_check = Check::counts(
        "irreducible-count",
        from_poset.len() as u64,
        constructed.len() as u64,
    );

    let mut indices: Vec<usize> = constructed
        .iter()
        .filter_map(|(_, o)| hp.index_of(o))
        .collect();
    indices.sort_unstable();
    let distinct = indices.windows(2).all(|w| w[0] != w[1]);
    let same_set = indices == from_poset && indices.len() == constructed.len();
    let order_agrees = constructed.iter().all(|(p, op)| {
        constructed
            .iter()
            .all(|(q, oq)| pair_preceq(iv, p, q) == leq_source(op, oq))
    });
    let bijection_check = Check::bools(
        "irreducible-bijection",
        true,
        distinct && same_set && order_agrees,
    );
    (count_check, bijection_check)
}

fn lower_set_check(iv: &IntervalHypergraph, hp: &crate::lattice::HypergraphPoset) -> Check {
    let items = vertex_irreducibles(iv);
    let index_poset = crate::poset::Poset::from_leq(items.len(), None, |a, b| {
        crate::lattice::vertex_preceq(&items[a], &items[b])
    });
    let lower_sets: Vec<Vec<Vertex>> = index_poset
        .lower_sets()
        .into_iter()
        .map(|set| set.into_iter().map(|k| items[k].vertex).collect())
        .collect();

    // Orientations -> lower sets -> back, and lower sets -> orientations ->
    // back, both identities; and the image sets are exactly the lower sets.
    let mut ok = hp.len() == lower_sets.len();
    if ok {
        for o in &hp.elements {
            let below = irreducibles_below(iv, o);
            if !lower_sets.contains(&below) || orientation_from_lower_set(iv, &below) != *o {
                ok = false;
                break;
            }
        }
    }
    if ok {
        for set in &lower_sets {
            if &irreducibles_below(iv, &orientation_from_lower_set(iv, set)) != set {
                ok = false;
                break;
            }
        }
    }
    // The irreducible subposet splits into chains.
    let irr = hp.poset.join_irreducibles();
    ok = ok && hp.poset.induced(&irr).is_disjoint_union_of_chains();
    Check::bools("irreducible-lower-sets", true, ok)
}

fn extra_irreducible_check(
    iv: &IntervalHypergraph,
    hp: &crate::lattice::HypergraphPoset,
) -> Check {
    // Closed but not distributive: some join irreducible escapes every
    // single-vertex construction.
    let vertex_indices: Vec<usize> = vertex_irreducibles(iv)
        .iter()
        .map(|item| {
            let o = vertex_irreducible_orientation(iv, item.vertex).expect("index set");
            hp.index_of(&o).expect("irreducible orientation is acyclic")
        })
        .collect();
    let exists = hp
        .poset
        .join_irreducibles()
        .into_iter()
        .any(|x| vertex_indices.iter().all(|&j| !hp.poset.leq(x, j)));
    Check::bools("extra-irreducible", exists, true)
}

fn fiber_check(iv: &IntervalHypergraph, hp: &crate::lattice::HypergraphPoset) -> Check {
    let hg = iv.hypergraph();
    let perms = all_permutations(iv.n());
    let mut grouped: HashMap<Orientation, Vec<usize>> = HashMap::new();
    for (rank, pi) in perms.iter().enumerate() {
        grouped.entry(hg.orient(pi)).or_default().push(rank);
    }
    // Surjectivity onto the acyclic orientations, and acyclicity of every
    // image.
    let oracle = grouped.keys().all(|o| hp.index_of(o).is_some())
        && hp.elements.iter().all(|o| grouped.contains_key(o))
        && grouped.values().map(Vec::len).sum::<usize>() == perms.len();

    let mut ok = true;
    'outer: for o in &hp.elements {
        // Report a missing fiber as a violation rather than panicking.
        let Some(members) = grouped.get(o) else {
            ok = false;
            break;
        };
        // Enumerated fiber equals the group.
        let fiber = hg.fiber(o);
        if fiber.len() != members.len()
            || !fiber
                .iter()
                .zip(members)
                .all(|(pi, &rank)| pi == &perms[rank])
        {
            ok = false;
            break;
        }
        let (lo, hi) = iv.fiber_bounds(o);
        if !lo.avoids(&"231".parse().unwrap()) || !hi.avoids(&"213".parse().unwrap()) {
            ok = false;
            break;
        }
        // The fiber is exactly the weak-order interval between its bounds.
        for (rank, pi) in perms.iter().enumerate() {
            let inside = weak_leq(&lo, pi) && weak_leq(pi, &hi);
            if inside != members.contains(&rank) {
                ok = false;
                break 'outer;
            }
        }
    }
    Check::bools("fiber-intervals", oracle, ok && oracle)
}

fn flip_existence_check(iv: &IntervalHypergraph, hp: &crate::lattice::HypergraphPoset) -> Check {
    let hg = iv.hypergraph();
    let mut ok = true;
    'outer: for a in &hp.elements {
        for i in 1..=iv.n() {
            let pending = iv
                .spans()
                .iter()
                .enumerate()
                .any(|(k, s)| a.choice(k) == i && i < s.hi);
            if !pending {
                continue;
            }
            let found = (i + 1..=iv.n()).any(|j| {
                let b = hg.flip(a, i, j);
                b != *a && iv.is_acyclic_pairwise(&b)
            });
            if !found {
                ok = false;
                break 'outer;
            }
        }
    }
    Check::bools("flip-existence", ok, true)
}

fn acyclicity_agreement_check(iv: &IntervalHypergraph) -> Check {
    let hg = iv.hypergraph();
    let slots: Vec<usize> = hg.non_singleton_indices().collect();
    let mut choice: Vec<Vertex> = hg.edges().iter().map(|e| e.min_vertex()).collect();
    let mut agree = true;
    fn rec(
        hg: &Hypergraph,
        iv: &IntervalHypergraph,
        slots: &[usize],
        depth: usize,
        choice: &mut Vec<Vertex>,
        agree: &mut bool,
    ) {
        if !*agree {
            return;
        }
        if depth == slots.len() {
            let o = hg
                .orientation_from_tuple(
                    &slots.iter().map(|&k| choice[k]).collect::<Vec<Vertex>>(),
                )
                .expect("members");
            if hg.is_acyclic(&o) != iv.is_acyclic_pairwise(&o) {
                *agree = false;
            }
            return;
        }
        for v in hg.edge(slots[depth]).iter() {
            choice[slots[depth]] = v;
            rec(hg, iv, slots, depth + 1, choice, agree);
        }
    }
    rec(hg, iv, &slots, 0, &mut choice, &mut agree);
    Check::bools("acyclicity-pairwise", true, agree)
}

fn cover_criterion_check(iv: &IntervalHypergraph, hp: &crate::lattice::HypergraphPoset) -> Check {
    let hg = iv.hypergraph();
    let hasse: std::collections::HashSet<(usize, usize)> =
        hp.poset.covers().into_iter().collect();
    let mut ok = true;
    'outer: for (x, a) in hp.elements.iter().enumerate() {
        for (i, j, target) in hg.increasing_flip_targets(a) {
            let y = hp.index_of(&target).expect("flip target is acyclic");
            if iv.is_cover(a, i, j) != hasse.contains(&(x, y)) {
                ok = false;
                break 'outer;
            }
        }
    }
    Check::bools("cover-criterion", true, ok)
}

/// Sweep all interval hypergraphs on `[n]`, fanning instances over `jobs`
/// workers; reports come back in enumeration order.
pub fn verify_sweep(
    n: Vertex,
    bound: Vertex,
    jobs: usize,
    opts: &CheckOptions,
) -> Result<Vec<InstanceReport>, HypergraphError> {
    if n == 0 || n > bound {
        return Err(HypergraphError::EnumerationBound { n, bound });
    }
    let total = interval_hypergraph_count(n);
    let tables = if opts.morphism == MorphismMode::Skip {
        None
    } else {
        Some(WeakOrderTables::new(n))
    };
    let jobs = jobs.max(1);
    let mut reports: Vec<Option<InstanceReport>> = Vec::with_capacity(total as usize);
    reports.resize_with(total as usize, || None);

    std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(jobs);
        for worker in 0..jobs {
            let tables = tables.as_ref();
            let opts = opts.clone();
            handles.push(scope.spawn(move || {
                let mut out = Vec::new();
                let mut index = worker as u64;
                while index < total {
                    let iv = interval_hypergraph_at(n, index);
                    let mut report = check_instance(&iv, tables, &opts);
                    report.index = index;
                    out.push(report);
                    index += jobs as u64;
                }
                out
            }));
        }
        for handle in handles {
            for report in handle.join().expect("worker panicked") {
                let slot = report.index as usize;
                reports[slot] = Some(report);
            }
        }
    });
    Ok(reports.into_iter().map(|r| r.expect("all indices visited")).collect())
}
