//! Exhaustive and branch-and-bound search for extremal families.
//!
//! A family whose pairwise distances all lie in a prescribed set `allowed`
//! is precisely a clique of the graph on all `q^n` words that joins two
//! words exactly when their Hamming distance is in `allowed`. This module
//! builds that graph explicitly (bitset adjacency rows), finds maximum
//! cliques by branch and bound with greedy-coloring upper bounds, and
//! packages the result next to the bound that applies to the *realized*
//! distance set of the winner.
//!
//! On top of the single-search primitive sit three surveys:
//!
//! * [`sharpness_survey`] runs one search per Hamming-symmetric distance
//!   set and tabulates max size against the proven (q = 2) or conjectured
//!   (q > 2) bound;
//! * [`conjecture_explorer`] does the same across all `n ≤ n_max` for a
//!   q-ary alphabet and attaches a per-row verdict;
//! * [`exhaustive_family_sweep`] abandons cliques entirely and checks the
//!   bounds against every single subfamily of `2^[n]` for tiny `n` — an
//!   oracle that trusts nothing but the definitions.
//!
//! Everything here is sequential and deterministic: reruns produce
//! byte-identical reports, and among maximum cliques the one with the
//! lexicographically smallest member sequence is reported.

use std::fmt;

use num_bigint::BigInt;

use crate::bitset::BitSet;
use crate::bounds::{self, BoundResult};
use crate::error::{Error, Result};
use crate::family::{hamming_distance, DistanceSet, GroundSet, QaryFamily, SetFamily};

/// Default branch-node budget for a single clique search.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Default cap on the number of graph vertices (`q^n`).
pub const DEFAULT_MAX_VERTICES: usize = 4096;

/// Resource limits for a search. `node_budget` counts branch-and-bound
/// tree nodes, so a budgeted result is reproducible across machines;
/// `max_vertices` caps the size of the explicit distance graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_budget: u64,
    pub max_vertices: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: DEFAULT_NODE_BUDGET,
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

/// Graph on all `q^n` words joining two words iff their Hamming distance
/// lies in an allowed set. Vertices are numbered `0..q^n`; for `q = 2`
/// vertex `v` *is* the subset word `v`, and for `q > 2` vertex `v` encodes
/// its digit string big-endian (so ascending vertex numbers agree with
/// lexicographic order on digit strings).
#[derive(Debug)]
pub struct DistanceGraph {
    ground: GroundSet,
    q: u32,
    allowed: DistanceSet,
    adjacency: Vec<BitSet>,
    /// Digit strings for q > 2 (empty for q = 2, where words are u64s).
    digits: Vec<Vec<u8>>,
}

impl DistanceGraph {
    /// Builds the full adjacency structure. The vertex count `q^n` must
    /// not exceed `max_vertices`.
    pub fn build(
        ground: GroundSet,
        q: u32,
        allowed: &DistanceSet,
        max_vertices: usize,
    ) -> Result<Self> {
        if q < 2 {
            return Err(Error::domain(format!("alphabet size q = {q} must be at least 2")));
        }
        if q > 256 {
            return Err(Error::domain(format!(
                "alphabet size q = {q} exceeds the supported maximum of 256"
            )));
        }
        if allowed.ground() != ground {
            return Err(Error::domain(
                "allowed distance set is defined over a different ground set",
            ));
        }
        let n = ground.n();
        let mut count: u128 = 1;
        for _ in 0..n {
            count *= q as u128;
            if count > max_vertices as u128 {
                return Err(Error::resource(format!(
                    "graph on q^n = {q}^{n} words exceeds the vertex cap {max_vertices}"
                )));
            }
        }
        let vertices = count as usize;

        // Membership of a distance in `allowed`, as one bit per distance.
        let mut allowed_mask: u128 = 0;
        for d in allowed.iter() {
            allowed_mask |= 1u128 << d;
        }

        let digits: Vec<Vec<u8>> = if q == 2 {
            Vec::new()
        } else {
            (0..vertices)
                .map(|v| {
                    let mut w = v;
                    let mut ds = vec![0u8; n as usize];
                    for i in (0..n as usize).rev() {
                        ds[i] = (w % q as usize) as u8;
                        w /= q as usize;
                    }
                    ds
                })
                .collect()
        };

        let mut adjacency = vec![BitSet::empty(vertices); vertices];
        for u in 0..vertices {
            for w in (u + 1)..vertices {
                let d = if q == 2 {
                    hamming_distance(u as u64, w as u64)
                } else {
                    QaryFamily::word_distance(&digits[u], &digits[w])
                };
                if allowed_mask >> d & 1 == 1 {
                    adjacency[u].insert(w);
                    adjacency[w].insert(u);
                }
            }
        }

        Ok(DistanceGraph { ground, q, allowed: allowed.clone(), adjacency, digits })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn allowed(&self) -> &DistanceSet {
        &self.allowed
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Converts a vertex list (ascending) into an explicit family.
    fn family_of(&self, vertices: &[usize]) -> Result<FamilyWitness> {
        if self.q == 2 {
            let members = vertices.iter().map(|&v| v as u64).collect();
            Ok(FamilyWitness::Binary(SetFamily::new(self.ground, members)?))
        } else {
            let members = vertices.iter().map(|&v| self.digits[v].clone()).collect();
            Ok(FamilyWitness::Qary(QaryFamily::new(self.ground, self.q, members)?))
        }
    }
}

/// The family a search produced: plain set family for q = 2, word list
/// otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyWitness {
    Binary(SetFamily),
    Qary(QaryFamily),
}

impl FamilyWitness {
    pub fn len(&self) -> usize {
        match self {
            FamilyWitness::Binary(f) => f.len(),
            FamilyWitness::Qary(f) => f.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn distance_set(&self) -> DistanceSet {
        match self {
            FamilyWitness::Binary(f) => f.distance_set(),
            FamilyWitness::Qary(f) => f.distance_set(),
        }
    }

    /// The underlying set family, when binary.
    pub fn as_binary(&self) -> Option<&SetFamily> {
        match self {
            FamilyWitness::Binary(f) => Some(f),
            FamilyWitness::Qary(_) => None,
        }
    }
}

/// Outcome of one maximum-family search, with the bound that applies to
/// the realized distance set.
#[derive(Debug, Clone)]
pub struct SearchReport {
    ground: GroundSet,
    q: u32,
    target: DistanceSet,
    witness: FamilyWitness,
    realized: DistanceSet,
    realized_symmetric: bool,
    bound: BoundResult,
    slack: BigInt,
    exhaustive: bool,
    nodes: u64,
}

impl SearchReport {
    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// The prescribed distance set the search was confined to.
    pub fn target(&self) -> &DistanceSet {
        &self.target
    }

    /// A maximum family (lexicographically smallest member sequence when
    /// the search was exhaustive).
    pub fn witness(&self) -> &FamilyWitness {
        &self.witness
    }

    pub fn max_size(&self) -> usize {
        self.witness.len()
    }

    /// Distance set actually attained by the witness; always a subset of
    /// the target.
    pub fn realized(&self) -> &DistanceSet {
        &self.realized
    }

    pub fn realized_symmetric(&self) -> bool {
        self.realized_symmetric
    }

    /// The bound selected for the realized distance set: the parity-split
    /// bound when q = 2 and the realized set is symmetric, its conjectured
    /// q-ary analogue when q > 2 and symmetric, and the distance-count
    /// bound otherwise.
    pub fn bound(&self) -> &BoundResult {
        &self.bound
    }

    /// bound − size. Negative slack on a symmetric row is a
    /// counterexample finding and is never clamped.
    pub fn slack(&self) -> &BigInt {
        &self.slack
    }

    /// True iff the whole search tree was closed within budget, i.e. the
    /// reported size is proved maximal.
    pub fn exhaustive(&self) -> bool {
        self.exhaustive
    }

    /// Branch nodes explored (diagnostic; deterministic).
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// A symmetric realized set whose maximum family exceeds its bound.
    pub fn is_counterexample(&self) -> bool {
        self.realized_symmetric && self.slack < BigInt::from(0)
    }

    /// One `key=value` line, stable field order, for machine consumption.
    pub fn record_line(&self) -> String {
        format!(
            "n={} q={} D={} max_size={} realized_D={} symmetric={} bound_id={} bound_value={} slack={} exhaustive={}",
            self.ground.n(),
            self.q,
            self.target,
            self.max_size(),
            self.realized,
            self.realized_symmetric,
            self.bound.formula().as_str(),
            self.bound.value(),
            self.slack,
            self.exhaustive,
        )
    }
}

/// Sequential branch-and-bound maximum-clique solver over bitset
/// adjacency rows. Candidates are ordered by a greedy coloring; a branch
/// is cut when `|clique| + color ≤ best`. Node accounting makes budgeted
/// runs reproducible.
struct CliqueSolver<'a> {
    adjacency: &'a [BitSet],
    node_budget: u64,
    nodes: u64,
    truncated: bool,
    best: usize,
    best_clique: Vec<usize>,
    /// Stop as soon as a clique of this size is found (decision mode).
    stop_at: Option<usize>,
}

impl<'a> CliqueSolver<'a> {
    fn new(adjacency: &'a [BitSet], node_budget: u64) -> Self {
        CliqueSolver {
            adjacency,
            node_budget,
            nodes: 0,
            truncated: false,
            best: 0,
            best_clique: Vec::new(),
            stop_at: None,
        }
    }

    fn done(&self) -> bool {
        self.truncated || self.stop_at.is_some_and(|t| self.best >= t)
    }

    fn record(&mut self, clique: &[usize]) {
        if clique.len() > self.best {
            self.best = clique.len();
            self.best_clique = clique.to_vec();
        }
    }

    /// Greedy coloring of the candidate set. Returns candidates grouped
    /// by color class, with `colors[i]` = 1-based color of `order[i]`;
    /// branching in reverse order tries high-color vertices first.
    fn color_sort(&self, candidates: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut class_sets: Vec<BitSet> = Vec::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let capacity = self.adjacency.len();
        for v in candidates.iter() {
            let mut placed = false;
            for (i, class) in class_sets.iter_mut().enumerate() {
                if !class.intersects(&self.adjacency[v]) {
                    class.insert(v);
                    classes[i].push(v);
                    placed = true;
                    break;
                }
            }
            if !placed {
                let mut class = BitSet::empty(capacity);
                class.insert(v);
                class_sets.push(class);
                classes.push(vec![v]);
            }
        }
        let mut order = Vec::new();
        let mut colors = Vec::new();
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                order.push(v);
                colors.push(i + 1);
            }
        }
        (order, colors)
    }

    fn search(&mut self, clique: &mut Vec<usize>, candidates: BitSet) {
        if self.nodes >= self.node_budget {
            self.truncated = true;
            return;
        }
        self.nodes += 1;
        if candidates.is_empty() {
            self.record(clique);
            return;
        }
        let (order, colors) = self.color_sort(&candidates);
        let mut remaining = candidates;
        for i in (0..order.len()).rev() {
            if self.done() {
                return;
            }
            // Every clique inside `remaining` needs at most colors[i] more
            // vertices, so this whole level is dominated once it can no
            // longer beat the incumbent.
            if clique.len() + colors[i] <= self.best {
                return;
            }
            let v = order[i];
            clique.push(v);
            let next = remaining.intersection(&self.adjacency[v]);
            if next.is_empty() {
                self.record(clique);
            } else {
                self.search(clique, next);
            }
            clique.pop();
            remaining.remove(v);
        }
    }

    /// Is there a clique of size ≥ `target` inside `candidates`?
    /// `None` when the budget ran out before deciding.
    fn decide(&mut self, candidates: BitSet, target: usize) -> Option<bool> {
        debug_assert!(target >= 1);
        self.best = target - 1;
        self.best_clique.clear();
        self.stop_at = Some(target);
        let mut clique = Vec::new();
        self.search(&mut clique, candidates);
        if self.best >= target {
            Some(true)
        } else if self.truncated {
            None
        } else {
            Some(false)
        }
    }
}

/// Among all maximum cliques containing vertex 0, finds the one whose
/// sorted member sequence is lexicographically smallest, by repeatedly
/// committing the smallest vertex that still extends to a full-size
/// clique. Returns `None` if a decision search hits the node budget
/// (the caller then falls back to the incumbent).
fn lex_smallest_max_clique(
    adjacency: &[BitSet],
    omega: usize,
    node_budget: u64,
) -> Option<Vec<usize>> {
    let mut clique = vec![0usize];
    let mut candidates = adjacency[0].clone();
    while clique.len() < omega {
        let need = omega - clique.len() - 1;
        let mut chosen = None;
        for v in candidates.iter() {
            // Restricting later choices to vertices above v is sound: the
            // lex-smallest completion never needs a vertex below v once v
            // is the smallest valid extension.
            let ok = if need == 0 {
                true
            } else {
                let mut restricted = candidates.intersection(&adjacency[v]);
                restricted.remove_below(v + 1);
                let mut solver = CliqueSolver::new(adjacency, node_budget);
                solver.decide(restricted, need)?
            };
            if ok {
                chosen = Some(v);
                break;
            }
        }
        let v = chosen?;
        clique.push(v);
        candidates = candidates.intersection(&adjacency[v]);
        candidates.remove_below(v + 1);
    }
    Some(clique)
}

/// Selects the bound applicable to a realized distance set: parity-split
/// for symmetric binary sets, its conjectured analogue for symmetric
/// q-ary sets, and the distance-count bound otherwise.
fn applicable_bound(realized: &DistanceSet, q: u32, symmetric: bool) -> Result<BoundResult> {
    let n = realized.ground().n() as u64;
    let s = realized.len() as u64;
    if symmetric {
        let half_in = realized.contains_half();
        if q == 2 {
            bounds::symmetric_family_bound(n, s, half_in)
        } else {
            bounds::conjecture_bound(n, s, q as u64, half_in)
        }
    } else {
        // A non-symmetric set is nonempty, so s ≥ 1 here.
        bounds::delsarte_bound(n, s, q as u64)
    }
}

/// Finds a maximum family over `[n]`-words (alphabet size `q`) whose
/// pairwise distances all lie in `allowed`, by exhaustive clique search
/// with the all-zeros word fixed into the clique — sound because
/// distances are invariant under coordinate-wise translation, which acts
/// transitively on words. The report pairs the winner with the bound for
/// its realized distance set.
pub fn max_family(
    ground: GroundSet,
    allowed: &DistanceSet,
    q: u32,
    config: &SearchConfig,
) -> Result<SearchReport> {
    let graph = DistanceGraph::build(ground, q, allowed, config.max_vertices)?;
    max_family_on(&graph, config)
}

/// As [`max_family`], reusing a prebuilt graph.
fn max_family_on(graph: &DistanceGraph, config: &SearchConfig) -> Result<SearchReport> {
    let mut solver = CliqueSolver::new(&graph.adjacency, config.node_budget);
    let mut clique = vec![0usize];
    // Seed the incumbent with the forced vertex alone, so even a
    // zero-progress budgeted run reports a valid (singleton) family.
    solver.record(&clique);
    let seed_candidates = graph.adjacency[0].clone();
    if !seed_candidates.is_empty() {
        solver.search(&mut clique, seed_candidates);
    }
    debug_assert!(solver.best >= 1);

    let exhaustive = !solver.truncated;
    let vertices = if exhaustive {
        // Reconstruction reuses decision searches with a fresh budget
        // each; if one is truncated (not observed at supported sizes),
        // the incumbent is still a valid maximum clique.
        lex_smallest_max_clique(&graph.adjacency, solver.best, config.node_budget)
            .unwrap_or_else(|| {
                let mut c = solver.best_clique.clone();
                c.sort_unstable();
                c
            })
    } else {
        let mut c = solver.best_clique.clone();
        c.sort_unstable();
        c
    };

    let witness = graph.family_of(&vertices)?;

    // The solver is not trusted: re-verify every pairwise distance from
    // the family itself.
    let realized = witness.distance_set();
    assert!(
        realized.is_subset_of(&graph.allowed),
        "solver returned a vertex set that is not a clique"
    );
    assert_eq!(witness.len(), vertices.len());

    let realized_symmetric = realized.is_hamming_symmetric();
    let bound = applicable_bound(&realized, graph.q, realized_symmetric)?;
    let slack = BigInt::from(bound.value().clone()) - BigInt::from(witness.len());

    Ok(SearchReport {
        ground: graph.ground,
        q: graph.q,
        target: graph.allowed.clone(),
        witness,
        realized,
        realized_symmetric,
        bound,
        slack,
        exhaustive,
        nodes: solver.nodes,
    })
}

/// All distance sets `D ⊆ [n−1]` closed under `d ↦ n − d`, the empty set
/// included, ordered by (size, then ascending lexicographic member list).
/// There are `2^⌈(n−1)/2⌉` of them: one independent choice per orbit
/// pair `{d, n−d}`.
pub fn enumerate_symmetric_distance_sets(ground: GroundSet) -> Result<Vec<DistanceSet>> {
    let n = ground.n();
    if n > 24 {
        return Err(Error::resource(format!(
            "enumerating symmetric distance sets for n = {n} exceeds the n ≤ 24 cap"
        )));
    }
    let mut orbits: Vec<Vec<u32>> = Vec::new();
    for d in 1..=(n - 1) / 2 {
        orbits.push(vec![d, n - d]);
    }
    if n % 2 == 0 && n >= 2 {
        orbits.push(vec![n / 2]);
    }
    let mut sets = Vec::with_capacity(1 << orbits.len());
    for mask in 0u32..(1 << orbits.len()) {
        let mut distances: Vec<u32> = Vec::new();
        for (i, orbit) in orbits.iter().enumerate() {
            if mask >> i & 1 == 1 {
                distances.extend_from_slice(orbit);
            }
        }
        distances.sort_unstable();
        sets.push(distances);
    }
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets.into_iter().map(|ds| DistanceSet::new(ground, ds)).collect()
}

/// Runs [`max_family`] once per symmetric distance set over `[n]` and
/// collects the reports. Rows where the realized set is symmetric and the
/// slack is negative are counterexample findings; callers escalate them
/// via [`SearchReport::is_counterexample`].
pub fn sharpness_survey(ground: GroundSet, q: u32, config: &SearchConfig) -> Result<Vec<SearchReport>> {
    let targets = enumerate_symmetric_distance_sets(ground)?;
    let mut reports = Vec::with_capacity(targets.len());
    for target in &targets {
        reports.push(max_family(ground, target, q, config)?);
    }
    Ok(reports)
}

/// Plain-text table over survey reports: one row per report, aligned
/// columns, same fields as [`SearchReport::record_line`].
pub fn format_survey_table(reports: &[SearchReport]) -> String {
    const HEADERS: [&str; 10] = [
        "n", "q", "D", "max_size", "realized_D", "symmetric", "bound_id", "bound_value",
        "slack", "exhaustive",
    ];
    let mut rows: Vec<[String; 10]> = Vec::with_capacity(reports.len());
    for r in reports {
        rows.push([
            r.ground.n().to_string(),
            r.q.to_string(),
            r.target.to_string(),
            r.max_size().to_string(),
            r.realized.to_string(),
            r.realized_symmetric.to_string(),
            r.bound.formula().as_str().to_string(),
            r.bound.value().to_string(),
            r.slack.to_string(),
            r.exhaustive.to_string(),
        ]);
    }
    let mut widths: Vec<usize> = HEADERS.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[&str]| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < cells.len() {
                for _ in cell.len()..widths[i] {
                    line.push(' ');
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    emit(&mut out, &HEADERS);
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        emit(&mut out, &cells);
    }
    out
}

/// One `key=value` line per report.
pub fn format_survey_records(reports: &[SearchReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.record_line());
        out.push('\n');
    }
    out
}

/// Verdict attached to one explorer row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowVerdict {
    Consistent,
    Counterexample,
    InconclusiveBudget,
}

impl RowVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            RowVerdict::Consistent => "consistent",
            RowVerdict::Counterexample => "counterexample",
            RowVerdict::InconclusiveBudget => "inconclusive(budget)",
        }
    }
}

impl fmt::Display for RowVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One explorer row: a survey report plus, when it differs from the
/// report's own bound, the bound read off the *prescribed* distance set
/// (s = |target|, half-membership from the realized set). The maximum
/// family for a target may realize a strict subset, and the conjectured
/// inequality can be read against either set; the explorer checks both
/// rather than pick silently.
#[derive(Debug, Clone)]
pub struct ConjectureRow {
    report: SearchReport,
    prescribed: Option<(BoundResult, BigInt)>,
    verdict: RowVerdict,
}

impl ConjectureRow {
    pub fn report(&self) -> &SearchReport {
        &self.report
    }

    /// Bound and slack for the prescribed target set, when that reading
    /// differs from the realized one.
    pub fn prescribed(&self) -> Option<(&BoundResult, &BigInt)> {
        self.prescribed.as_ref().map(|(b, s)| (b, s))
    }

    pub fn verdict(&self) -> RowVerdict {
        self.verdict
    }

    /// The report's record line plus verdict (and the prescribed-bound
    /// fields when present).
    pub fn record_line(&self) -> String {
        let mut line = self.report.record_line();
        if let Some((bound, slack)) = &self.prescribed {
            line.push_str(&format!(
                " prescribed_bound_id={} prescribed_bound_value={} prescribed_slack={}",
                bound.formula().as_str(),
                bound.value(),
                slack
            ));
        }
        line.push_str(&format!(" verdict={}", self.verdict));
        line
    }
}

/// Surveys every symmetric distance set for every `1 ≤ n ≤ n_max` over a
/// q-ary alphabet (q ≥ 3) and attaches a verdict per row: `consistent`
/// when no applicable bound is violated, `counterexample` when one is,
/// `inconclusive(budget)` when the search did not close. Absence of
/// counterexamples in this range proves nothing and is reported as such.
pub fn conjecture_explorer(
    n_max: u32,
    q: u32,
    config: &SearchConfig,
) -> Result<Vec<ConjectureRow>> {
    if q < 3 {
        return Err(Error::domain(format!(
            "conjecture exploration requires q ≥ 3 (the q = 2 case is proven; got q = {q})"
        )));
    }
    if n_max < 1 {
        return Err(Error::domain("n_max must be at least 1"));
    }
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let ground = GroundSet::new(n)?;
        for report in sharpness_survey(ground, q, config)? {
            rows.push(classify_row(report)?);
        }
    }
    Ok(rows)
}

fn classify_row(report: SearchReport) -> Result<ConjectureRow> {
    // Prescribed reading: bound with s = |target|, half-membership taken
    // from the realized set. Computed only when it differs from the
    // report's own (realized) reading. Targets are symmetric by
    // construction, so the conjectured bound always applies to them.
    let target = report.target();
    let prescribed = if target.len() != report.realized().len() || !report.realized_symmetric() {
        let n = report.ground().n() as u64;
        let half_in = report.realized().contains_half();
        let bound = bounds::conjecture_bound(n, target.len() as u64, report.q() as u64, half_in)?;
        let slack = BigInt::from(bound.value().clone()) - BigInt::from(report.max_size());
        Some((bound, slack))
    } else {
        None
    };

    let verdict = if !report.exhaustive() {
        RowVerdict::InconclusiveBudget
    } else if report.is_counterexample()
        || prescribed.as_ref().is_some_and(|(_, slack)| *slack < BigInt::from(0))
    {
        RowVerdict::Counterexample
    } else {
        RowVerdict::Consistent
    };

    Ok(ConjectureRow { report, prescribed, verdict })
}

/// A family that beat a bound it was subject to. Expected never to exist;
/// any instance is a finding to escalate, not an error to swallow.
#[derive(Debug, Clone)]
pub struct SweepViolation {
    pub members: Vec<u64>,
    pub realized: DistanceSet,
    pub size: usize,
    pub bound: BoundResult,
}

/// Checks the bounds against every one of the `2^(2^n)` subfamilies of
/// `2^[n]` (n ≤ 4): symmetric realized sets against the parity-split
/// bound, and every family with at least one distinct pair against the
/// distance-count bound. Returns all violations found (expected: none).
pub fn exhaustive_family_sweep(ground: GroundSet) -> Result<Vec<SweepViolation>> {
    let n = ground.n();
    if n > 4 {
        return Err(Error::domain(format!(
            "sweep iterates all 2^(2^n) subfamilies; n = {n} exceeds the n ≤ 4 cap"
        )));
    }
    let universe: usize = 1 << n;

    // Pairwise distances between words, and per-family realized distance
    // sets as bitmasks over 1..=n.
    let mut dist = vec![vec![0u8; universe]; universe];
    for (a, row) in dist.iter_mut().enumerate() {
        for (b, d) in row.iter_mut().enumerate() {
            *d = hamming_distance(a as u64, b as u64) as u8;
        }
    }

    // Bounds are tiny here (≤ 16); precompute per (s, half_in) and per s.
    let mut symmetric_bound: Vec<[Option<(u64, BoundResult)>; 2]> =
        vec![[None, None]; n as usize + 1];
    let mut count_bound: Vec<Option<(u64, BoundResult)>> = vec![None; n as usize + 1];
    for s in 0..=n as u64 {
        for (h, half_in) in [(0usize, false), (1usize, true)] {
            if half_in && (n % 2 != 0 || s == 0) {
                continue;
            }
            let b = bounds::symmetric_family_bound(n as u64, s, half_in)?;
            let small: u64 = b.value().try_into().expect("bound fits in u64 for n ≤ 4");
            symmetric_bound[s as usize][h] = Some((small, b));
        }
        if s >= 1 {
            let b = bounds::delsarte_bound(n as u64, s, 2)?;
            let small: u64 = b.value().try_into().expect("bound fits in u64 for n ≤ 4");
            count_bound[s as usize] = Some((small, b));
        }
    }

    let half = n / 2;
    let mut violations = Vec::new();
    let family_count: u64 = 1u64 << universe;
    for mask in 0..family_count {
        let mut words: Vec<usize> = Vec::with_capacity(universe);
        let mut m = mask;
        while m != 0 {
            words.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        let size = words.len() as u64;

        let mut realized_mask: u32 = 0;
        for (i, &a) in words.iter().enumerate() {
            for &b in &words[i + 1..] {
                realized_mask |= 1 << dist[a][b];
            }
        }
        let s = realized_mask.count_ones();

        // d ∈ D ⇒ n − d ∈ D, over d ∈ 1..=n (bit 0 is never set).
        let mut symmetric = true;
        for d in 1..=n {
            if realized_mask >> d & 1 == 1 && (d >= n || realized_mask >> (n - d) & 1 == 0) {
                symmetric = false;
                break;
            }
        }

        let record = |bound: &(u64, BoundResult), violations: &mut Vec<SweepViolation>| {
            if size > bound.0 {
                violations.push(SweepViolation {
                    members: words.iter().map(|&w| w as u64).collect(),
                    realized: DistanceSet::new(
                        ground,
                        (1..=n).filter(|&d| realized_mask >> d & 1 == 1),
                    )
                    .expect("realized distances are in 1..=n"),
                    size: size as usize,
                    bound: bound.1.clone(),
                });
            }
        };

        if symmetric {
            let half_in = n % 2 == 0 && realized_mask >> half & 1 == 1;
            let b = symmetric_bound[s as usize][half_in as usize]
                .as_ref()
                .expect("symmetric bound precomputed for every reachable (s, half_in)");
            record(b, &mut violations);
        }
        if s >= 1 {
            let b = count_bound[s as usize].as_ref().expect("count bound precomputed");
            record(b, &mut violations);
        }
    }
    Ok(violations)
}
