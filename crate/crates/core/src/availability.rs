//! (r,t)-availability certificates and the covering-system machinery behind
//! them: repair-codeword search, exact-covering validation, intersection
//! graphs, component rank bounds, and maximum disjoint subsets.
//!
//! A bit i of a code C has (r,t)-availability exactly when the dual code
//! contains t codewords of weight at most r+1 whose supports pairwise
//! intersect in {i} alone. Certificates store those witnesses and are
//! re-validated before they are returned.

use crate::bits::{gray_walk, BitVector};
use crate::code::LinearCode;
use crate::constructions::CoveringSystem;
use crate::guards::Guards;
use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;

/// One repair group: bit i is the sum of the members.
#[derive(Clone, Debug, Serialize)]
pub struct RepairGroup {
    /// 1-based point index of the repaired bit.
    pub bit: usize,
    /// 1-based members, disjoint from `bit`, at most r of them.
    pub members: Vec<usize>,
}

/// t repair codewords for one bit, pairwise intersecting exactly in the bit.
#[derive(Clone, Debug)]
pub struct AvailabilityCertificate {
    pub bit: usize,
    pub groups: Vec<RepairGroup>,
    /// The dual codewords witnessing each group (weight <= r+1, containing
    /// the bit).
    pub witnesses: Vec<BitVector>,
}

impl AvailabilityCertificate {
    pub fn t(&self) -> usize {
        self.groups.len()
    }

    /// Size of the largest repair group; the locality this certificate
    /// exhibits.
    pub fn locality(&self) -> usize {
        self.groups
            .iter()
            .map(|g| g.members.len())
            .max()
            .unwrap_or(0)
    }
}

fn check_bit_index(code: &LinearCode, bit: usize) -> Result<()> {
    if bit < 1 || bit > code.n() {
        return Err(Error::IndexOutOfRange {
            index: bit,
            len: code.n(),
        });
    }
    Ok(())
}

fn check_rt(code: &LinearCode, r: usize, t: usize) -> Result<()> {
    if r < 1 {
        return Err(Error::InvalidParameter("locality r must be >= 1".into()));
    }
    if r >= code.n() {
        return Err(Error::InvalidParameter(format!(
            "locality r = {r} cannot reach n = {}",
            code.n()
        )));
    }
    if t < 1 {
        return Err(Error::InvalidParameter(
            "availability t must be >= 1".into(),
        ));
    }
    Ok(())
}

/// All dual codewords of weight <= max_weight, ascending by support
/// (tuple-lexicographic order).
///
/// Two strategies: when the dual dimension is small enough, walk the whole
/// dual; otherwise enumerate candidate supports of bounded weight and keep
/// the ones orthogonal to the generator.
fn low_weight_dual_words(
    code: &LinearCode,
    max_weight: usize,
    guards: &Guards,
) -> Result<Vec<BitVector>> {
    let mut words = Vec::new();
    if code.redundancy() <= guards.dual_walk_redundancy {
        gray_walk(code.parity(), |w| {
            let wt = w.weight();
            if wt > 0 && wt <= max_weight {
                words.push(w.clone());
            }
        });
    } else {
        guards.check(
            "candidate support weight r+1",
            max_weight,
            SUPPORT_WEIGHT_LIMIT,
        )?;
        let n = code.n();
        let mut support = Vec::new();
        enumerate_supports(n, max_weight, 0, &mut support, &mut |s| {
            let v = BitVector::from_indices(n, s);
            if !v.is_zero() && code.dual_contains(&v) {
                words.push(v);
            }
        });
    }
    words.sort_by_cached_key(|w| w.support());
    Ok(words)
}

/// Cap on the candidate-support weight when the dual is too large to walk;
/// C(n, w) enumeration stays tractable below it.
const SUPPORT_WEIGHT_LIMIT: usize = 16;

fn enumerate_supports(
    n: usize,
    remaining: usize,
    start: usize,
    current: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    visit(current);
    if remaining == 0 {
        return;
    }
    for i in start..n {
        current.push(i);
        enumerate_supports(n, remaining - 1, i + 1, current, visit);
        current.pop();
    }
}

/// Searches for t dual codewords of weight <= r+1 through `bit` whose
/// supports pairwise intersect exactly in {bit}, by backtracking set packing
/// over candidates in lexicographic support order. Deterministic: the first
/// feasible packing in that order is returned.
pub fn find_repair_groups(
    code: &LinearCode,
    bit: usize,
    r: usize,
    t: usize,
    guards: &Guards,
) -> Result<Option<AvailabilityCertificate>> {
    check_bit_index(code, bit)?;
    check_rt(code, r, t)?;
    let words = low_weight_dual_words(code, r + 1, guards)?;
    Ok(pack_certificate(code, &words, bit, r, t))
}

/// Packing step shared by the verification entry points. `words` must be the
/// low-weight dual words in lexicographic support order.
fn pack_certificate(
    code: &LinearCode,
    words: &[BitVector],
    bit: usize,
    r: usize,
    t: usize,
) -> Option<AvailabilityCertificate> {
    let col = bit - 1;
    let candidates: Vec<&BitVector> = words.iter().filter(|w| w.get(col)).collect();
    if candidates.len() < t {
        return None;
    }
    // Supports minus the shared bit; a valid packing is pairwise disjoint.
    let reduced: Vec<BitVector> = candidates
        .iter()
        .map(|w| {
            let mut v = (*w).clone();
            v.set(col, false);
            v
        })
        .collect();
    let mut chosen = Vec::new();
    if !pack(&reduced, 0, t, &mut chosen) {
        return None;
    }
    let witnesses: Vec<BitVector> = chosen.iter().map(|&i| candidates[i].clone()).collect();
    let groups = witnesses
        .iter()
        .map(|w| RepairGroup {
            bit,
            members: w
                .support()
                .into_iter()
                .filter(|&j| j != col)
                .map(|j| j + 1)
                .collect(),
        })
        .collect();
    let cert = AvailabilityCertificate {
        bit,
        groups,
        witnesses,
    };
    validate_certificate(code, &cert, r, t);
    Some(cert)
}

fn pack(reduced: &[BitVector], start: usize, need: usize, chosen: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    if reduced.len() - start < need {
        return false;
    }
    for i in start..reduced.len() {
        if chosen.iter().any(|&j| reduced[j].intersects(&reduced[i])) {
            continue;
        }
        chosen.push(i);
        if pack(reduced, i + 1, need - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Certificates are re-validated before being handed out: witnesses must be
/// dual codewords of weight <= r+1 containing the bit, pairwise meeting in
/// the bit alone.
fn validate_certificate(code: &LinearCode, cert: &AvailabilityCertificate, r: usize, t: usize) {
    assert_eq!(cert.witnesses.len(), t);
    let col = cert.bit - 1;
    for w in &cert.witnesses {
        assert!(code.dual_contains(w), "witness fails a generator check");
        assert!(w.weight() <= r + 1, "witness weight exceeds r+1");
        assert!(w.get(col), "witness misses the repaired bit");
    }
    for i in 0..t {
        for j in i + 1..t {
            assert_eq!(
                cert.witnesses[i].and_weight(&cert.witnesses[j]),
                1,
                "witness supports must intersect exactly in the bit"
            );
        }
    }
}

/// Per-bit verdicts for one (r,t) requirement.
#[derive(Clone, Debug)]
pub struct AvailabilityReport {
    pub r: usize,
    pub t: usize,
    pub bits: Vec<Option<AvailabilityCertificate>>,
    pub all_available: bool,
}

/// Runs [`find_repair_groups`] for every bit. The per-bit searches are
/// independent and run in parallel; the report is deterministic.
pub fn verify_availability(
    code: &LinearCode,
    r: usize,
    t: usize,
    guards: &Guards,
) -> Result<AvailabilityReport> {
    check_rt(code, r, t)?;
    let words = low_weight_dual_words(code, r + 1, guards)?;
    let bits: Vec<Option<AvailabilityCertificate>> = (1..=code.n())
        .into_par_iter()
        .map(|bit| pack_certificate(code, &words, bit, r, t))
        .collect();
    let all_available = bits.iter().all(Option::is_some);
    Ok(AvailabilityReport {
        r,
        t,
        bits,
        all_available,
    })
}

/// For each bit, the largest t for which a certificate exists at locality r,
/// found by binary search over t (feasibility is monotone in t). The search
/// is capped at floor((n-1)/r): disjoint groups cannot exceed that.
pub fn availability_profile(code: &LinearCode, r: usize, guards: &Guards) -> Result<Vec<usize>> {
    check_rt(code, r, 1)?;
    let words = low_weight_dual_words(code, r + 1, guards)?;
    let cap = (code.n() - 1) / r;
    let profile = (1..=code.n())
        .into_par_iter()
        .map(|bit| {
            let (mut lo, mut hi) = (0usize, cap);
            while lo < hi {
                let mid = (lo + hi).div_ceil(2);
                if pack_certificate(code, &words, bit, r, mid).is_some() {
                    lo = mid;
                } else {
                    hi = mid - 1;
                }
            }
            lo
        })
        .collect();
    Ok(profile)
}

/// Violation categories of [`check_exact_covering`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    RowWeight,
    ColumnWeight,
    PairIntersection,
    Count,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    /// 1-based subset or point indices pinpointing the violation.
    pub indices: Vec<usize>,
}

/// Outcome of validating a covering system against the exact-covering
/// conditions for (r,t): N = nt/(r+1) subsets, uniform subset size r+1,
/// every point covered exactly t times, pairwise intersections <= 1.
#[derive(Clone, Debug, Serialize)]
pub struct ExactCoveringReport {
    pub valid: bool,
    pub n: usize,
    pub subset_count: usize,
    pub r: usize,
    pub t: usize,
    pub violations: Vec<Violation>,
}

pub fn check_exact_covering(system: &CoveringSystem, r: usize, t: usize) -> ExactCoveringReport {
    let n = system.n();
    let subsets = system.subsets();
    let mut violations = Vec::new();

    if n * t != subsets.len() * (r + 1) {
        violations.push(Violation {
            kind: ViolationKind::Count,
            indices: vec![subsets.len()],
        });
    }
    for (i, s) in subsets.iter().enumerate() {
        if s.len() != r + 1 {
            violations.push(Violation {
                kind: ViolationKind::RowWeight,
                indices: vec![i + 1],
            });
        }
    }
    let mut coverage = vec![0usize; n + 1];
    for s in subsets {
        for &p in s {
            coverage[p] += 1;
        }
    }
    for (p, &count) in coverage.iter().enumerate().skip(1) {
        if count != t {
            violations.push(Violation {
                kind: ViolationKind::ColumnWeight,
                indices: vec![p],
            });
        }
    }
    let masks = system.to_matrix();
    for i in 0..subsets.len() {
        for j in i + 1..subsets.len() {
            if masks.row(i).and_weight(masks.row(j)) > 1 {
                violations.push(Violation {
                    kind: ViolationKind::PairIntersection,
                    indices: vec![i + 1, j + 1],
                });
            }
        }
    }
    ExactCoveringReport {
        valid: violations.is_empty(),
        n,
        subset_count: subsets.len(),
        r,
        t,
        violations,
    }
}

/// One vertex per subset, an edge whenever two subsets intersect, plus the
/// partition into connected components.
#[derive(Clone, Debug)]
pub struct IntersectionGraph {
    pub adjacency: Vec<Vec<usize>>,
    /// Components as sorted lists of 0-based subset indices, ordered by their
    /// smallest member.
    pub components: Vec<Vec<usize>>,
}

impl IntersectionGraph {
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_regular(&self) -> Option<usize> {
        let mut degrees = self.adjacency.iter().map(Vec::len);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

pub fn intersection_graph(system: &CoveringSystem) -> IntersectionGraph {
    let count = system.len();
    let masks = system.to_matrix();
    let mut adjacency = vec![Vec::new(); count];
    for i in 0..count {
        for j in i + 1..count {
            if masks.row(i).intersects(masks.row(j)) {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }
    let mut component_of = vec![usize::MAX; count];
    let mut components = Vec::new();
    for start in 0..count {
        if component_of[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = Vec::new();
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            if component_of[v] != usize::MAX {
                continue;
            }
            component_of[v] = id;
            members.push(v);
            stack.extend(adjacency[v].iter().copied());
        }
        members.sort_unstable();
        components.push(members);
    }
    IntersectionGraph {
        adjacency,
        components,
    }
}

/// Lower bound on the span dimension from the component structure, next to
/// the exact GF(2) rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankBound {
    /// N - (number of connected components of the intersection graph).
    pub bound: usize,
    pub rank: usize,
}

/// Requires every point to be covered exactly twice; under that premise a
/// minimal dependency spans a whole component, so dropping one subset per
/// component leaves an independent set and bound <= rank always holds.
pub fn component_rank_bound(system: &CoveringSystem) -> Result<RankBound> {
    let mut coverage = vec![0usize; system.n() + 1];
    for s in system.subsets() {
        for &p in s {
            coverage[p] += 1;
        }
    }
    if let Some(p) = (1..=system.n()).find(|&p| coverage[p] != 2) {
        return Err(Error::PreconditionViolated(format!(
            "point {p} is covered {} times, expected exactly 2",
            coverage[p]
        )));
    }
    let graph = intersection_graph(system);
    let bound = system.len() - graph.components.len();
    let rank = system.to_matrix().rank();
    debug_assert!(bound <= rank);
    Ok(RankBound { bound, rank })
}

/// Exact maximum set of pairwise disjoint subsets (a maximum independent set
/// in the intersection graph) by branch and bound, with the witness indices
/// (0-based, lexicographically first optimum).
pub fn max_disjoint_subsets(
    system: &CoveringSystem,
    guards: &Guards,
) -> Result<(usize, Vec<usize>)> {
    let count = system.len();
    guards.check("packing subsets", count, guards.packing_subsets)?;
    let graph = intersection_graph(system);
    // Conflict masks over u128: bit j set when subsets i and j intersect.
    let conflicts: Vec<u128> = (0..count)
        .map(|i| {
            graph.adjacency[i]
                .iter()
                .fold(0u128, |m, &j| m | (1u128 << j))
        })
        .collect();
    let mut best: (usize, Vec<usize>) = (0, Vec::new());
    let mut chosen = Vec::new();
    fn branch(
        idx: usize,
        count: usize,
        excluded: u128,
        conflicts: &[u128],
        chosen: &mut Vec<usize>,
        best: &mut (usize, Vec<usize>),
    ) {
        if chosen.len() > best.0 {
            *best = (chosen.len(), chosen.clone());
        }
        if idx >= count || chosen.len() + (count - idx) <= best.0 {
            return;
        }
        for i in idx..count {
            if excluded & (1 << i) != 0 {
                continue;
            }
            if chosen.len() + (count - i) <= best.0 {
                break;
            }
            chosen.push(i);
            branch(
                i + 1,
                count,
                excluded | conflicts[i],
                conflicts,
                chosen,
                best,
            );
            chosen.pop();
        }
    }
    branch(0, count, 0, &conflicts, &mut chosen, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        complete_graph_code, fano_covering_system, graph_code, incidence_matrix, platonic,
        simplex_code, PlatonicSolid, SimpleGraph,
    };

    fn g() -> Guards {
        Guards::default()
    }

    #[test]
    fn simplex_certificate_is_the_three_fano_lines() {
        let code = simplex_code(3).unwrap();
        let cert = find_repair_groups(&code, 1, 2, 3, &g()).unwrap().unwrap();
        assert_eq!(cert.t(), 3);
        assert_eq!(cert.locality(), 2);
        let supports: Vec<Vec<usize>> = cert
            .witnesses
            .iter()
            .map(|w| w.support().iter().map(|&j| j + 1).collect())
            .collect();
        assert_eq!(supports, vec![vec![1, 2, 3], vec![1, 4, 5], vec![1, 6, 7]]);
    }

    #[test]
    fn tetrahedron_certificates_come_from_vertex_stars() {
        let code = graph_code(platonic(PlatonicSolid::Tetrahedron).graph());
        for bit in 1..=6 {
            let cert = find_repair_groups(&code, bit, 2, 2, &g()).unwrap().unwrap();
            assert_eq!(cert.t(), 2);
            assert!(cert.witnesses.iter().all(|w| w.weight() == 3));
        }
    }

    #[test]
    fn full_space_has_no_repair_codewords() {
        let full = LinearCode::from_generator(&crate::BitMatrix::identity(3)).unwrap();
        assert!(find_repair_groups(&full, 1, 2, 1, &g()).unwrap().is_none());
    }

    #[test]
    fn degenerate_parameters_are_rejected() {
        let code = simplex_code(3).unwrap();
        assert!(find_repair_groups(&code, 0, 2, 1, &g()).is_err());
        assert!(find_repair_groups(&code, 8, 2, 1, &g()).is_err());
        assert!(find_repair_groups(&code, 1, 0, 1, &g()).is_err());
        assert!(find_repair_groups(&code, 1, 7, 1, &g()).is_err());
        assert!(find_repair_groups(&code, 1, 2, 0, &g()).is_err());
    }

    #[test]
    fn octahedron_availability() {
        let code = graph_code(platonic(PlatonicSolid::Octahedron).graph());
        assert!(
            verify_availability(&code, 3, 2, &g())
                .unwrap()
                .all_available
        );
        let report = verify_availability(&code, 2, 2, &g()).unwrap();
        assert!(!report.all_available);
        assert!(report.bits.iter().all(Option::is_none));
    }

    #[test]
    fn simplex_fails_t_4() {
        let code = simplex_code(3).unwrap();
        assert!(
            !verify_availability(&code, 2, 4, &g())
                .unwrap()
                .all_available
        );
    }

    #[test]
    fn availability_is_monotone() {
        let code = graph_code(platonic(PlatonicSolid::Octahedron).graph());
        // (3,2) holds, so (3,1) and (4,2) must hold as well.
        assert!(
            verify_availability(&code, 3, 1, &g())
                .unwrap()
                .all_available
        );
        assert!(
            verify_availability(&code, 4, 2, &g())
                .unwrap()
                .all_available
        );
    }

    #[test]
    fn profiles() {
        let simplex = simplex_code(3).unwrap();
        assert_eq!(availability_profile(&simplex, 2, &g()).unwrap(), vec![3; 7]);
        let dodeca = graph_code(platonic(PlatonicSolid::Dodecahedron).graph());
        assert_eq!(availability_profile(&dodeca, 2, &g()).unwrap(), vec![2; 30]);
        let repetition = complete_graph_code(3).unwrap();
        assert_eq!(
            availability_profile(&repetition, 1, &g()).unwrap(),
            vec![2; 3]
        );
    }

    #[test]
    fn direct_sum_of_simplex_codes_keeps_availability() {
        let simplex = simplex_code(3).unwrap();
        let sum = crate::code::direct_sum(&[simplex.clone(), simplex]).unwrap();
        assert_eq!((sum.n(), sum.k()), (14, 6));
        assert!(verify_availability(&sum, 2, 3, &g()).unwrap().all_available);
    }

    #[test]
    fn high_redundancy_duals_use_the_support_enumeration_path() {
        // Two dodecahedron blocks: n = 60, n - k = 38, beyond the dual-walk
        // threshold, so candidate supports are enumerated and filtered by
        // syndrome. The certificates must match the star structure exactly.
        let dodeca = graph_code(platonic(PlatonicSolid::Dodecahedron).graph());
        let sum = crate::code::direct_sum(&[dodeca.clone(), dodeca]).unwrap();
        assert_eq!((sum.n(), sum.k()), (60, 22));
        assert!(sum.redundancy() > g().dual_walk_redundancy);
        let cert = find_repair_groups(&sum, 31, 2, 2, &g()).unwrap().unwrap();
        assert_eq!(cert.t(), 2);
        assert_eq!(cert.locality(), 2);
        assert!(verify_availability(&sum, 2, 2, &g()).unwrap().all_available);
    }

    #[test]
    fn exact_covering_fano() {
        let report = check_exact_covering(&fano_covering_system(), 2, 3);
        assert!(report.valid);
        assert_eq!(report.subset_count, 7);
    }

    #[test]
    fn exact_covering_k4_stars() {
        let stars =
            CoveringSystem::from_matrix(&incidence_matrix(&SimpleGraph::complete(4))).unwrap();
        let report = check_exact_covering(&stars, 2, 2);
        assert!(report.valid);
        assert_eq!(report.subset_count, 4);
    }

    #[test]
    fn exact_covering_rejects_repeated_triple() {
        let s = CoveringSystem::new(3, vec![vec![1, 2, 3], vec![1, 2, 3]]).unwrap();
        let report = check_exact_covering(&s, 2, 2);
        assert!(!report.valid);
        assert!(report
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::PairIntersection));
    }

    #[test]
    fn intersection_graph_examples() {
        let stars =
            CoveringSystem::from_matrix(&incidence_matrix(&SimpleGraph::complete(4))).unwrap();
        let graph = intersection_graph(&stars);
        assert_eq!(graph.components.len(), 1);
        assert_eq!(graph.is_regular(), Some(3)); // K4

        let fano = intersection_graph(&fano_covering_system());
        assert_eq!(fano.components.len(), 1);
        assert_eq!(fano.is_regular(), Some(6)); // K7

        let disjoint = CoveringSystem::new(6, vec![vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        let graph = intersection_graph(&disjoint);
        assert_eq!(graph.components.len(), 2);
        assert!(graph.adjacency.iter().all(Vec::is_empty));
    }

    #[test]
    fn component_rank_bound_examples() {
        let stars =
            CoveringSystem::from_matrix(&incidence_matrix(&SimpleGraph::complete(4))).unwrap();
        assert_eq!(
            component_rank_bound(&stars).unwrap(),
            RankBound { bound: 3, rank: 3 }
        );

        // Two disjoint copies of the K4 star system on 12 points.
        let mut subsets = stars.subsets().to_vec();
        subsets.extend(
            stars
                .subsets()
                .iter()
                .map(|s| s.iter().map(|&p| p + 6).collect::<Vec<_>>()),
        );
        let double = CoveringSystem::new(12, subsets).unwrap();
        assert_eq!(
            component_rank_bound(&double).unwrap(),
            RankBound { bound: 6, rank: 6 }
        );

        // Hexagon: edges of the 6-cycle as 2-subsets.
        let hexagon =
            CoveringSystem::new(6, (1..=6).map(|i| vec![i, i % 6 + 1]).collect()).unwrap();
        assert_eq!(
            component_rank_bound(&hexagon).unwrap(),
            RankBound { bound: 5, rank: 5 }
        );

        let fano = fano_covering_system();
        assert!(component_rank_bound(&fano).is_err()); // covered thrice
    }

    #[test]
    fn max_disjoint_examples() {
        let fano = fano_covering_system();
        assert_eq!(max_disjoint_subsets(&fano, &g()).unwrap().0, 1);

        // Two Fano blocks side by side.
        let mut subsets = fano.subsets().to_vec();
        subsets.extend(
            fano.subsets()
                .iter()
                .map(|s| s.iter().map(|&p| p + 7).collect::<Vec<_>>()),
        );
        let double = CoveringSystem::new(14, subsets).unwrap();
        assert_eq!(max_disjoint_subsets(&double, &g()).unwrap().0, 2);

        let disjoint = CoveringSystem::new(6, vec![vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        let (count, witness) = max_disjoint_subsets(&disjoint, &g()).unwrap();
        assert_eq!(count, 2);
        assert_eq!(witness, vec![0, 1]);
    }

    #[test]
    fn transpose_of_exact_covering_has_swapped_parameters() {
        // K4 stars form a (2,2) exact covering; the transpose is a (1,3)
        // exact covering of a length-4 code.
        let h = incidence_matrix(&SimpleGraph::complete(4));
        let ht = crate::constructions::transpose_transform(&h).unwrap();
        let system = CoveringSystem::from_matrix(&ht).unwrap();
        assert!(check_exact_covering(&system, 1, 3).valid);
        let code = LinearCode::from_parity(&ht).unwrap();
        assert!(
            verify_availability(&code, 1, 3, &g())
                .unwrap()
                .all_available
        );

        // (n, r, t) -> (nt/(r+1), t-1, r+1) across the built-in systems.
        for (system, r, t) in [
            (fano_covering_system(), 2, 3),
            (
                crate::constructions::projective_line_system(4).unwrap(),
                2,
                7,
            ),
        ] {
            assert!(check_exact_covering(&system, r, t).valid);
            let transposed =
                crate::constructions::transpose_transform(&system.to_matrix()).unwrap();
            let out = CoveringSystem::from_matrix(&transposed).unwrap();
            assert_eq!(out.n(), system.n() * t / (r + 1));
            assert!(check_exact_covering(&out, t - 1, r + 1).valid);
        }
    }
}
