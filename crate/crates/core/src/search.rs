//! Exhaustive, isomorph-free enumeration of exact covering systems at small
//! parameters, used to confirm the rate-optimality and uniqueness statements
//! computationally, plus brute-force oracles that back the faster
//! implementations elsewhere in the crate.
//!
//! Systems are generated by orderly search: subsets are added in ascending
//! tuple-lexicographic order, each extension must keep the partial system
//! lexicographically minimal under point relabeling, and every emitted
//! system is therefore the canonical representative of its isomorphism
//! class. Guards are hard errors, never silent truncation, because a
//! non-exhausted report would invalidate a uniqueness claim.

use crate::code::{LinearCode, WeightEnumerator};
use crate::constructions::{incidence_matrix, CoveringSystem, SimpleGraph};
use crate::guards::Guards;
use crate::{Error, Result};
use num::rational::Ratio;
use std::cmp::Ordering;
use std::collections::VecDeque;

/// Subset order used throughout: ascending tuple-lexicographic order of the
/// sorted point lists. On masks, the subset containing the lowest differing
/// point is the smaller one.
fn mask_cmp(a: u64, b: u64) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let low = (a ^ b).trailing_zeros();
    if (a >> low) & 1 == 1 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

fn mask_bits(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// State of the lexicographic-minimality search: an incremental attempt to
/// relabel points so that the sorted relabeled system compares below the
/// original.
struct LexSearch<'a> {
    masks: &'a [u64],
    n: usize,
    old_to_new: Vec<Option<usize>>,
    new_used: u64,
    used_subsets: u64,
    automorphisms: u64,
    found_smaller: bool,
}

impl<'a> LexSearch<'a> {
    fn new(masks: &'a [u64], n: usize) -> Self {
        LexSearch {
            masks,
            n,
            old_to_new: vec![None; n],
            new_used: 0,
            used_subsets: 0,
            automorphisms: 0,
            found_smaller: false,
        }
    }

    /// Minimal achievable image of subset `j` under the current partial
    /// relabeling: known images plus the smallest free labels, or None when
    /// a known image collides (cannot happen here since labels are assigned
    /// injectively).
    fn min_image(&self, j: usize) -> (u64, usize) {
        let mut known = 0u64;
        let mut unassigned = 0usize;
        for p in mask_bits(self.masks[j]) {
            match self.old_to_new[p] {
                Some(q) => known |= 1 << q,
                None => unassigned += 1,
            }
        }
        let mut image = known;
        let mut taken = 0;
        for q in 0..self.n {
            if taken == unassigned {
                break;
            }
            if self.new_used & (1 << q) == 0 {
                image |= 1 << q;
                taken += 1;
            }
        }
        (image, unassigned)
    }

    fn run(&mut self, position: usize) {
        if self.found_smaller {
            return;
        }
        if position == self.masks.len() {
            self.automorphisms += 1;
            return;
        }
        let target = self.masks[position];
        for j in 0..self.masks.len() {
            if self.used_subsets & (1 << j) != 0 {
                continue;
            }
            let (min_image, _) = self.min_image(j);
            match mask_cmp(min_image, target) {
                Ordering::Less => {
                    self.found_smaller = true;
                    return;
                }
                Ordering::Greater => continue,
                Ordering::Equal => {
                    let unassigned: Vec<usize> = mask_bits(self.masks[j])
                        .into_iter()
                        .filter(|&p| self.old_to_new[p].is_none())
                        .collect();
                    let needed: Vec<usize> = mask_bits(target)
                        .into_iter()
                        .filter(|&q| self.new_used & (1 << q) == 0)
                        .collect();
                    debug_assert_eq!(unassigned.len(), needed.len());
                    self.used_subsets |= 1 << j;
                    self.assign_and_recurse(position, &unassigned, &needed, 0);
                    self.used_subsets &= !(1 << j);
                    if self.found_smaller {
                        return;
                    }
                }
            }
        }
    }

    /// Branches over every bijection of the subset's unassigned points onto
    /// the labels the target still needs.
    fn assign_and_recurse(
        &mut self,
        position: usize,
        unassigned: &[usize],
        needed: &[usize],
        depth: usize,
    ) {
        if self.found_smaller {
            return;
        }
        if depth == unassigned.len() {
            self.run(position + 1);
            return;
        }
        let p = unassigned[depth];
        for &q in needed {
            if self.new_used & (1 << q) != 0 {
                continue;
            }
            self.old_to_new[p] = Some(q);
            self.new_used |= 1 << q;
            self.assign_and_recurse(position, unassigned, needed, depth + 1);
            self.old_to_new[p] = None;
            self.new_used &= !(1 << q);
            if self.found_smaller {
                return;
            }
        }
    }
}

/// True when no point relabeling makes the sorted system compare strictly
/// below itself.
fn is_lex_min(masks: &[u64], n: usize) -> bool {
    let mut search = LexSearch::new(masks, n);
    search.run(0);
    !search.found_smaller
}

/// Automorphism count of a canonical system (relabelings that fix the sorted
/// subset sequence). Only meaningful when `masks` is canonical.
#[cfg(test)]
fn automorphism_count(masks: &[u64], n: usize) -> u64 {
    let mut search = LexSearch::new(masks, n);
    search.run(0);
    assert!(!search.found_smaller, "system must be canonical");
    search.automorphisms
}

/// The canonical (lexicographically minimal) relabeled form of a system, by
/// positional branch and bound: at every position only the minimal
/// achievable image can start the minimal completion.
pub fn canonical_form(system: &CoveringSystem) -> CoveringSystem {
    let n = system.n();
    let mut masks: Vec<u64> = system
        .subsets()
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &p| m | (1 << (p - 1))))
        .collect();
    masks.sort_by(|&a, &b| mask_cmp(a, b));
    let mut best: Option<Vec<u64>> = None;
    let mut state = LexSearch::new(&masks, n);
    let mut prefix = Vec::with_capacity(masks.len());
    canonical_dfs(&mut state, &mut prefix, &mut best);
    let best = best.expect("every system has a canonical form");
    CoveringSystem::new(
        n,
        best.iter()
            .map(|&m| mask_bits(m).into_iter().map(|p| p + 1).collect())
            .collect(),
    )
    .expect("canonical relabeling preserves validity")
}

fn canonical_dfs(state: &mut LexSearch, prefix: &mut Vec<u64>, best: &mut Option<Vec<u64>>) {
    let position = prefix.len();
    if position == state.masks.len() {
        if best
            .as_ref()
            .is_none_or(|b| seq_cmp(prefix, b) == Ordering::Less)
        {
            *best = Some(prefix.clone());
        }
        return;
    }
    // Prune against the incumbent: a prefix that already compares above it
    // cannot produce the minimum.
    if let Some(b) = best {
        match prefix_cmp(prefix, b) {
            Ordering::Greater => return,
            Ordering::Less | Ordering::Equal => {}
        }
    }
    // Positional minimum over all unused subsets.
    let mut minimum: Option<u64> = None;
    for j in 0..state.masks.len() {
        if state.used_subsets & (1 << j) != 0 {
            continue;
        }
        let (image, _) = state.min_image(j);
        if minimum.is_none_or(|m| mask_cmp(image, m) == Ordering::Less) {
            minimum = Some(image);
        }
    }
    let Some(target) = minimum else { return };
    for j in 0..state.masks.len() {
        if state.used_subsets & (1 << j) != 0 {
            continue;
        }
        let (image, _) = state.min_image(j);
        if image != target {
            continue;
        }
        let unassigned: Vec<usize> = mask_bits(state.masks[j])
            .into_iter()
            .filter(|&p| state.old_to_new[p].is_none())
            .collect();
        let needed: Vec<usize> = mask_bits(target)
            .into_iter()
            .filter(|&q| state.new_used & (1 << q) == 0)
            .collect();
        state.used_subsets |= 1 << j;
        prefix.push(target);
        canonical_assign(state, &unassigned, &needed, 0, prefix, best);
        prefix.pop();
        state.used_subsets &= !(1 << j);
    }
}

fn canonical_assign(
    state: &mut LexSearch,
    unassigned: &[usize],
    needed: &[usize],
    depth: usize,
    prefix: &mut Vec<u64>,
    best: &mut Option<Vec<u64>>,
) {
    if depth == unassigned.len() {
        canonical_dfs(state, prefix, best);
        return;
    }
    let p = unassigned[depth];
    for &q in needed {
        if state.new_used & (1 << q) != 0 {
            continue;
        }
        state.old_to_new[p] = Some(q);
        state.new_used |= 1 << q;
        canonical_assign(state, unassigned, needed, depth + 1, prefix, best);
        state.old_to_new[p] = None;
        state.new_used &= !(1 << q);
    }
}

fn seq_cmp(a: &[u64], b: &[u64]) -> Ordering {
    for (&x, &y) in a.iter().zip(b) {
        match mask_cmp(x, y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

fn prefix_cmp(prefix: &[u64], full: &[u64]) -> Ordering {
    for (&x, &y) in prefix.iter().zip(full) {
        match mask_cmp(x, y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn search_guard(n: usize, t: usize, guards: &Guards) -> Result<()> {
    let limit = if t <= 2 {
        guards.search_points_t2
    } else {
        guards.search_points_t3
    };
    guards.check("search points n", n, limit)
}

/// Enumerates every exact covering system on [n] for (r,t), exactly once up
/// to point relabeling, as canonical representatives in a deterministic
/// order.
pub fn enumerate_exact_covering_systems(
    n: usize,
    r: usize,
    t: usize,
    guards: &Guards,
) -> Result<Vec<CoveringSystem>> {
    let mut out = Vec::new();
    visit_exact_covering_systems(n, r, t, guards, |system| out.push(system.clone()))?;
    Ok(out)
}

/// Visitor form of the enumeration.
pub fn visit_exact_covering_systems(
    n: usize,
    r: usize,
    t: usize,
    guards: &Guards,
    mut visit: impl FnMut(&CoveringSystem),
) -> Result<()> {
    if r < 1 || t < 1 || n < 1 {
        return Err(Error::InvalidParameter(
            "search needs n, r, t all >= 1".into(),
        ));
    }
    if !(n * t).is_multiple_of(r + 1) {
        return Err(Error::InvalidParameter(format!(
            "subset count nt/(r+1) = {}*{}/{} is not integral",
            n,
            t,
            r + 1
        )));
    }
    search_guard(n, t, guards)?;
    let subset_count = n * t / (r + 1);
    if r + 1 > n {
        return Ok(()); // no (r+1)-subset fits in [n]
    }
    let mut state = EnumState {
        n,
        r,
        t,
        subset_count,
        coverage: vec![0; n],
        pair_used: vec![false; n * n],
        chosen: Vec::with_capacity(subset_count),
        max_point_used: 0,
    };
    enumerate_dfs(&mut state, &mut |masks| {
        let system = CoveringSystem::new(
            n,
            masks
                .iter()
                .map(|&m| mask_bits(m).into_iter().map(|p| p + 1).collect())
                .collect(),
        )
        .expect("generated subsets are valid");
        visit(&system);
    });
    Ok(())
}

struct EnumState {
    n: usize,
    r: usize,
    t: usize,
    subset_count: usize,
    coverage: Vec<usize>,
    pair_used: Vec<bool>,
    chosen: Vec<u64>,
    max_point_used: usize,
}

/// Orderly generation. Invariants maintained along the branch:
/// - subsets ascend in tuple-lexicographic order;
/// - the next subset starts at the smallest point whose coverage is below t
///   (in a sorted complete system the minimum of subset d+1 is exactly that
///   point, so this loses nothing);
/// - new points enter in consecutive ascending order (canonical labelings
///   have first-use order 1, 2, ..., n);
/// - every partial system must itself be lexicographically minimal, which is
///   sound because prefixes of canonical systems are canonical.
fn enumerate_dfs(state: &mut EnumState, emit: &mut impl FnMut(&[u64])) {
    if state.chosen.len() == state.subset_count {
        // Coverage sums force every point to exactly t at full depth.
        debug_assert!(state.coverage.iter().all(|&c| c == state.t));
        emit(&state.chosen);
        return;
    }
    let Some(anchor) = (0..state.n).find(|&p| state.coverage[p] < state.t) else {
        return;
    };
    let mut members = vec![anchor];
    extend_subset(state, anchor, &mut members, emit);
}

fn extend_subset(
    state: &mut EnumState,
    last_member: usize,
    members: &mut Vec<usize>,
    emit: &mut impl FnMut(&[u64]),
) {
    if members.len() == state.r + 1 {
        let mask = members.iter().fold(0u64, |m, &p| m | (1 << p));
        if let Some(&last) = state.chosen.last() {
            if mask_cmp(mask, last) != Ordering::Greater {
                return;
            }
        }
        state.chosen.push(mask);
        if is_lex_min(&state.chosen, state.n) {
            let saved_max = state.max_point_used;
            state.max_point_used = state.max_point_used.max(members[state.r] + 1);
            for w in members.windows(2) {
                debug_assert!(w[0] < w[1]);
            }
            enumerate_dfs(state, emit);
            state.max_point_used = saved_max;
        }
        state.chosen.pop();
        return;
    }
    // Candidate next members, ascending; a point beyond everything used so
    // far must be the next unused label (first-use order).
    let frontier = state
        .max_point_used
        .max(members.iter().map(|&p| p + 1).max().unwrap_or(0));
    for q in (last_member + 1)..=frontier.min(state.n - 1) {
        if state.coverage[q] >= state.t {
            continue;
        }
        if members.iter().any(|&p| state.pair_used[p * state.n + q]) {
            continue;
        }
        for &p in members.iter() {
            state.pair_used[p * state.n + q] = true;
        }
        state.coverage[q] += 1;
        if members.len() == 1 {
            // First extension also covers the anchor point.
            state.coverage[members[0]] += 1;
        }
        members.push(q);
        extend_subset(state, q, members, emit);
        members.pop();
        if members.len() == 1 {
            state.coverage[members[0]] -= 1;
        }
        state.coverage[q] -= 1;
        for &p in members.iter() {
            state.pair_used[p * state.n + q] = false;
        }
    }
}

/// Exact rational p/q.
pub type Rate = Ratio<u64>;

/// A maximizing system and the construction it is isomorphic to, when the
/// classifier recognizes one.
#[derive(Clone, Debug)]
pub struct Maximizer {
    pub system: CoveringSystem,
    pub isomorphic_to: Option<String>,
}

/// Result of an exhaustive rate-optimality search.
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub n: usize,
    pub r: usize,
    pub t: usize,
    /// Canonical isomorphism classes enumerated.
    pub class_count: usize,
    /// 1 - rank/n maximized over all systems; None if no system exists.
    pub max_dual_rate: Option<Rate>,
    pub optima: Vec<Maximizer>,
    /// True when the enumeration ran to completion (guards make this always
    /// true on success).
    pub exhausted: bool,
}

impl SearchReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "r": self.r,
            "t": self.t,
            "class_count": self.class_count,
            "max_dual_rate": self.max_dual_rate.map(|q| format!("{}/{}", q.numer(), q.denom())),
            "exhausted": self.exhausted,
            "optima_count": self.optima.len(),
            "optima": self.optima.iter().map(|m| serde_json::json!({
                "subsets": m.system.subsets(),
                "isomorphic_to": m.isomorphic_to.as_deref().unwrap_or("unclassified"),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Enumerates all systems at (n, r, t), ranks their spans, and classifies
/// every maximizer of the dual rate 1 - rank/n by canonical-form comparison
/// against the named constructions.
pub fn verify_rate_optimal_unique(
    n: usize,
    r: usize,
    t: usize,
    guards: &Guards,
) -> Result<SearchReport> {
    let mut class_count = 0usize;
    let mut best_rank: Option<usize> = None;
    let mut optima: Vec<CoveringSystem> = Vec::new();
    visit_exact_covering_systems(n, r, t, guards, |system| {
        class_count += 1;
        let rank = system.to_matrix().rank();
        match best_rank {
            Some(b) if rank > b => {}
            Some(b) if rank == b => optima.push(system.clone()),
            _ => {
                best_rank = Some(rank);
                optima = vec![system.clone()];
            }
        }
    })?;
    let max_dual_rate = best_rank.map(|rank| Rate::new((n - rank) as u64, n as u64));
    let optima = optima
        .into_iter()
        .map(|system| {
            let isomorphic_to = classify_construction(&system);
            Maximizer {
                system,
                isomorphic_to,
            }
        })
        .collect();
    Ok(SearchReport {
        n,
        r,
        t,
        class_count,
        max_dual_rate,
        optima,
        exhausted: true,
    })
}

/// Identifies a covering system as a named construction or a direct sum of
/// them: per connected component of the intersection graph, the component is
/// matched (by canonical form) against the vertex-star system of a complete
/// graph ("complete:q") or the Fano plane ("fano"). Multi-component systems
/// report the sorted component labels joined by " + ". Returns None when any
/// component is unrecognized.
pub fn classify_construction(system: &CoveringSystem) -> Option<String> {
    let graph = crate::availability::intersection_graph(system);
    let mut labels = Vec::new();
    for component in &graph.components {
        let subsets: Vec<Vec<usize>> = component
            .iter()
            .map(|&i| system.subsets()[i].clone())
            .collect();
        // Reindex the component's points to 1..m.
        let mut points: Vec<usize> = subsets.iter().flatten().copied().collect();
        points.sort_unstable();
        points.dedup();
        let renumber: std::collections::HashMap<usize, usize> = points
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, i + 1))
            .collect();
        let induced = CoveringSystem::new(
            points.len(),
            subsets
                .iter()
                .map(|s| s.iter().map(|p| renumber[p]).collect())
                .collect(),
        )
        .ok()?;
        labels.push(classify_component(&induced)?);
    }
    labels.sort();
    Some(labels.join(" + "))
}

fn classify_component(induced: &CoveringSystem) -> Option<String> {
    let m = induced.n();
    let count = induced.len();
    let canonical = canonical_form(induced);
    // Vertex stars of K_q: q subsets of size q-1 on q(q-1)/2 points.
    if count >= 3 && m == count * (count - 1) / 2 {
        let q = count;
        let stars = CoveringSystem::from_matrix(&incidence_matrix(&SimpleGraph::complete(q)))
            .expect("complete-graph stars are a valid system");
        if canonical == canonical_form(&stars) {
            return Some(format!("complete:{q}"));
        }
    }
    if m == 7 && count == 7 {
        let fano = crate::constructions::fano_covering_system();
        if canonical == canonical_form(&fano) {
            return Some("fano".to_string());
        }
    }
    None
}

/// Independent weight-enumerator oracle: iterates all 2^n vectors and keeps
/// the ones satisfying every parity check. Quadratic and slow on purpose.
pub fn oracle_weight_enumerator(code: &LinearCode, guards: &Guards) -> Result<WeightEnumerator> {
    let n = code.n();
    guards.check("oracle length n", n, guards.oracle_length)?;
    let checks: Vec<u64> = code
        .parity()
        .row_iter()
        .map(|row| row.support().iter().fold(0u64, |m, &j| m | (1 << j)))
        .collect();
    let mut counts = vec![0u64; n + 1];
    for v in 0u64..(1u64 << n) {
        if checks.iter().all(|&h| (h & v).count_ones() % 2 == 0) {
            counts[v.count_ones() as usize] += 1;
        }
    }
    Ok(WeightEnumerator { n, counts })
}

/// Independent covering-radius oracle: the largest distance from any of the
/// 2^n vectors to the code, via breadth-first search outward from all
/// codewords over the full hypercube.
pub fn oracle_covering_radius(code: &LinearCode, guards: &Guards) -> Result<usize> {
    let n = code.n();
    guards.check("oracle length n", n, guards.oracle_length)?;
    let mut distance = vec![u8::MAX; 1usize << n];
    let mut queue = VecDeque::new();
    {
        let mut enqueue = |mask: u64| {
            if distance[mask as usize] == u8::MAX {
                distance[mask as usize] = 0;
                queue.push_back(mask);
            }
        };
        // All codewords, via the parity filter to stay independent of the
        // generator walk.
        let checks: Vec<u64> = code
            .parity()
            .row_iter()
            .map(|row| row.support().iter().fold(0u64, |m, &j| m | (1 << j)))
            .collect();
        for v in 0u64..(1u64 << n) {
            if checks.iter().all(|&h| (h & v).count_ones() % 2 == 0) {
                enqueue(v);
            }
        }
    }
    let mut radius = 0usize;
    while let Some(v) = queue.pop_front() {
        let d = distance[v as usize];
        radius = radius.max(d as usize);
        for b in 0..n {
            let w = v ^ (1 << b);
            if distance[w as usize] == u8::MAX {
                distance[w as usize] = d + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(radius)
}

/// Straight labeled count of exact covering systems (no isomorphism
/// reduction), used to cross-check the orderly enumeration: summing
/// n!/|Aut| over the canonical classes must reproduce it.
#[cfg(test)]
fn count_labeled_systems(n: usize, r: usize, t: usize) -> u64 {
    if !(n * t).is_multiple_of(r + 1) {
        return 0;
    }
    let subset_count = n * t / (r + 1);
    let mut coverage = vec![0usize; n];
    let mut pair_used = vec![false; n * n];
    let mut chosen: Vec<u64> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn dfs(
        n: usize,
        r: usize,
        t: usize,
        subset_count: usize,
        coverage: &mut Vec<usize>,
        pair_used: &mut Vec<bool>,
        chosen: &mut Vec<u64>,
        count: &mut u64,
    ) {
        if chosen.len() == subset_count {
            if coverage.iter().all(|&c| c == t) {
                *count += 1;
            }
            return;
        }
        let Some(anchor) = (0..n).find(|&p| coverage[p] < t) else {
            return;
        };
        let mut members = vec![anchor];
        extend(
            n,
            r,
            t,
            subset_count,
            anchor,
            &mut members,
            coverage,
            pair_used,
            chosen,
            count,
        );
    }
    #[allow(clippy::too_many_arguments)]
    fn extend(
        n: usize,
        r: usize,
        t: usize,
        subset_count: usize,
        last: usize,
        members: &mut Vec<usize>,
        coverage: &mut Vec<usize>,
        pair_used: &mut Vec<bool>,
        chosen: &mut Vec<u64>,
        count: &mut u64,
    ) {
        if members.len() == r + 1 {
            let mask = members.iter().fold(0u64, |m, &p| m | (1 << p));
            if let Some(&prev) = chosen.last() {
                if mask_cmp(mask, prev) != Ordering::Greater {
                    return;
                }
            }
            chosen.push(mask);
            dfs(n, r, t, subset_count, coverage, pair_used, chosen, count);
            chosen.pop();
            return;
        }
        for q in (last + 1)..n {
            if coverage[q] >= t || members.iter().any(|&p| pair_used[p * n + q]) {
                continue;
            }
            for &p in members.iter() {
                pair_used[p * n + q] = true;
            }
            coverage[q] += 1;
            if members.len() == 1 {
                coverage[members[0]] += 1;
            }
            members.push(q);
            extend(
                n,
                r,
                t,
                subset_count,
                q,
                members,
                coverage,
                pair_used,
                chosen,
                count,
            );
            members.pop();
            if members.len() == 1 {
                coverage[members[0]] -= 1;
            }
            coverage[q] -= 1;
            for &p in members.iter() {
                pair_used[p * n + q] = false;
            }
        }
    }
    let mut count = 0;
    dfs(
        n,
        r,
        t,
        subset_count,
        &mut coverage,
        &mut pair_used,
        &mut chosen,
        &mut count,
    );
    count
}
