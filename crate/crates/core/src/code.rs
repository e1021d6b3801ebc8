//! Binary linear codes: construction from either basis, duality, direct
//! sums, weight enumeration, the MacWilliams transform, and coset-leader
//! analysis.

use crate::bits::{gray_walk, BitMatrix, BitVector};
use crate::guards::Guards;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::fmt;

/// An [n, k] code over GF(2), carrying a generator basis and a parity-check
/// basis that are kept mutually consistent. Both bases are stored in reduced
/// row echelon form, so structural equality of two `LinearCode`s is row-space
/// equality.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    n: usize,
    k: usize,
    generator: BitMatrix,
    parity: BitMatrix,
}

impl LinearCode {
    /// Code with the row space of `h` as parity checks, i.e. the kernel of `h`.
    /// `k = cols - rank(h)`; a zero-dimensional result is a valid degenerate
    /// code, not an error.
    pub fn from_parity(h: &BitMatrix) -> Result<LinearCode> {
        if h.cols() == 0 {
            return Err(Error::InvalidParameter("code length must be >= 1".into()));
        }
        let (parity, _) = h.rref();
        let generator = h.nullspace_basis().rref().0;
        Ok(Self::from_reduced_bases(generator, parity))
    }

    /// Code spanned by the rows of `g`.
    pub fn from_generator(g: &BitMatrix) -> Result<LinearCode> {
        if g.cols() == 0 {
            return Err(Error::InvalidParameter("code length must be >= 1".into()));
        }
        let (generator, _) = g.rref();
        let parity = g.nullspace_basis().rref().0;
        Ok(Self::from_reduced_bases(generator, parity))
    }

    fn from_reduced_bases(generator: BitMatrix, parity: BitMatrix) -> LinearCode {
        let n = generator.cols();
        let k = generator.rows();
        assert_eq!(parity.cols(), n);
        assert_eq!(parity.rows(), n - k, "dim(code) + dim(dual) must equal n");
        assert!(
            generator.mul_transpose(&parity).is_zero(),
            "generator and parity bases are not orthogonal"
        );
        LinearCode {
            n,
            k,
            generator,
            parity,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    pub fn parity(&self) -> &BitMatrix {
        &self.parity
    }

    /// The degenerate {0} code.
    pub fn is_zero_code(&self) -> bool {
        self.k == 0
    }

    pub fn is_full_space(&self) -> bool {
        self.k == self.n
    }

    /// Swaps the generator and parity roles.
    pub fn dual(&self) -> LinearCode {
        LinearCode {
            n: self.n,
            k: self.n - self.k,
            generator: self.parity.clone(),
            parity: self.generator.clone(),
        }
    }

    /// Membership test: v satisfies every parity check.
    pub fn contains(&self, v: &BitVector) -> bool {
        v.len() == self.n && self.parity.row_iter().all(|h| !h.dot(v))
    }

    /// Membership in the dual code: v is orthogonal to every generator row.
    pub fn dual_contains(&self, v: &BitVector) -> bool {
        v.len() == self.n && self.generator.row_iter().all(|g| !g.dot(v))
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{}, {}]", self.n, self.k)
    }
}

/// Block-diagonal combination: coordinates and parity structure are disjoint
/// unions, so n and k both add up.
pub fn direct_sum(codes: &[LinearCode]) -> Result<LinearCode> {
    if codes.is_empty() {
        return Err(Error::InvalidParameter(
            "direct sum needs at least one code".into(),
        ));
    }
    if codes.len() == 1 {
        return Ok(codes[0].clone());
    }
    let n: usize = codes.iter().map(LinearCode::n).sum();
    let mut gen_rows = Vec::new();
    let mut par_rows = Vec::new();
    let mut offset = 0;
    for code in codes {
        for row in code.generator.row_iter() {
            let mut v = BitVector::zeros(n);
            for j in row.support() {
                v.set(offset + j, true);
            }
            gen_rows.push(v);
        }
        for row in code.parity.row_iter() {
            let mut v = BitVector::zeros(n);
            for j in row.support() {
                v.set(offset + j, true);
            }
            par_rows.push(v);
        }
        offset += code.n;
    }
    let generator = BitMatrix::from_rows_with_cols(gen_rows, n).rref().0;
    let parity = BitMatrix::from_rows_with_cols(par_rows, n).rref().0;
    Ok(LinearCode::from_reduced_bases(generator, parity))
}

/// True iff the generator row spaces coincide (canonical reduced-row-echelon
/// comparison). Errors if the lengths differ.
pub fn codes_equal(a: &LinearCode, b: &LinearCode) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::LengthMismatch {
            left: a.n,
            right: b.n,
        });
    }
    Ok(a.generator == b.generator)
}

/// Codeword counts by Hamming weight: A_0 .. A_n.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WeightEnumerator {
    pub n: usize,
    pub counts: Vec<u64>,
}

impl WeightEnumerator {
    pub fn sum(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest w > 0 with A_w != 0.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..=self.n).find(|&w| self.counts[w] != 0)
    }

    /// Renders e.g. "1 + 4z^3 + 3z^4".
    pub fn polynomial(&self) -> String {
        let terms: Vec<String> = self
            .counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(w, &c)| match w {
                0 => format!("{c}"),
                1 => format!("{c}z"),
                _ => format!("{c}z^{w}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// Exact weight enumerator by a Gray-code walk over all 2^k codewords.
pub fn weight_enumerator(code: &LinearCode, guards: &Guards) -> Result<WeightEnumerator> {
    guards.check(
        "enumeration dimension k",
        code.k,
        guards.enumeration_dimension,
    )?;
    let mut counts = vec![0u64; code.n + 1];
    gray_walk(&code.generator, |cw| counts[cw.weight()] += 1);
    Ok(WeightEnumerator { n: code.n, counts })
}

/// Smallest nonzero codeword weight; requires k >= 1.
pub fn min_distance(code: &LinearCode, guards: &Guards) -> Result<usize> {
    if code.k == 0 {
        return Err(Error::InvalidParameter(
            "minimum distance of the zero code is undefined".into(),
        ));
    }
    guards.check(
        "enumeration dimension k",
        code.k,
        guards.enumeration_dimension,
    )?;
    let mut best = code.n + 1;
    gray_walk(&code.generator, |cw| {
        let w = cw.weight();
        if w > 0 && w < best {
            best = w;
        }
    });
    Ok(best)
}

/// MacWilliams transform: given the enumerator of a k-dimensional code,
/// returns the enumerator of its dual. Applying the transform twice returns
/// the input.
pub fn macwilliams(w: &WeightEnumerator, k: usize) -> Result<WeightEnumerator> {
    let n = w.n;
    assert!(n <= 64, "macwilliams limited to n <= 64");
    let total: u64 = w.sum();
    if k >= 64 || total != 1u64 << k {
        return Err(Error::InconsistentEnumerator { sum: total, k });
    }
    // A'_j = 2^-k sum_w A_w K_j(w) with the binary Krawtchouk polynomial
    // K_j(w) = sum_i (-1)^i C(w,i) C(n-w,j-i).
    let binom = binomial_table(n);
    let mut counts = vec![0u64; n + 1];
    for j in 0..=n {
        let mut acc: i128 = 0;
        for (wt, &a) in w.counts.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let mut kraw: i128 = 0;
            for i in 0..=j.min(wt) {
                if j - i > n - wt {
                    continue;
                }
                let term = (binom[wt][i] as i128) * (binom[n - wt][j - i] as i128);
                kraw += if i % 2 == 0 { term } else { -term };
            }
            acc += (a as i128) * kraw;
        }
        let denom = 1i128 << k;
        if acc < 0 || acc % denom != 0 {
            return Err(Error::InconsistentEnumerator { sum: total, k });
        }
        counts[j] = (acc / denom) as u64;
    }
    Ok(WeightEnumerator { n, counts })
}

fn binomial_table(n: usize) -> Vec<Vec<u64>> {
    let mut t = vec![vec![0u64; n + 1]; n + 1];
    t[0][0] = 1;
    for i in 1..=n {
        t[i][0] = 1;
        for j in 1..=i {
            t[i][j] = t[i - 1][j - 1] + if j < i { t[i - 1][j] } else { 0 };
        }
    }
    t
}

/// Coset-leader weights indexed by syndrome, and their maximum.
#[derive(Clone, Debug)]
pub struct CosetAnalysis {
    /// The analyzed code.
    pub code: LinearCode,
    /// Leader weight for each of the 2^(n-k) syndromes; the syndrome bits are
    /// packed little-endian over the parity rows, so index 0 is the code
    /// itself.
    pub leader_weights: Vec<u8>,
    pub covering_radius: usize,
}

/// Coset-leader analysis by breadth-first sweep: syndromes are explored in
/// order of increasing leader weight, adding one parity-check column per
/// step, until all 2^(n-k) syndromes have been reached.
pub fn covering_radius(code: &LinearCode, guards: &Guards) -> Result<CosetAnalysis> {
    let redundancy = code.redundancy();
    guards.check("coset redundancy n-k", redundancy, guards.coset_redundancy)?;
    // Column j of the parity matrix, packed as a syndrome integer.
    let columns: Vec<u64> = (0..code.n)
        .map(|j| {
            let mut s = 0u64;
            for (i, row) in code.parity.row_iter().enumerate() {
                if row.get(j) {
                    s |= 1 << i;
                }
            }
            s
        })
        .collect();
    let size = 1usize << redundancy;
    let mut weights = vec![u8::MAX; size];
    weights[0] = 0;
    let mut queue = VecDeque::with_capacity(size);
    queue.push_back(0u64);
    let mut reached = 1usize;
    while let Some(s) = queue.pop_front() {
        if reached == size {
            break;
        }
        let w = weights[s as usize];
        for &c in &columns {
            let next = s ^ c;
            if weights[next as usize] == u8::MAX {
                weights[next as usize] = w + 1;
                reached += 1;
                queue.push_back(next);
            }
        }
    }
    assert_eq!(
        reached, size,
        "parity basis has full rank, so every syndrome is reachable"
    );
    let covering_radius = weights.iter().copied().max().unwrap_or(0) as usize;
    Ok(CosetAnalysis {
        code: code.clone(),
        leader_weights: weights,
        covering_radius,
    })
}

/// Outcome of the equivalence test in [`equivalent_up_to_permutation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    /// `perm[i] = j` maps coordinate i of the first code to coordinate j of
    /// the second; permuting the first code's coordinates this way yields
    /// exactly the second code.
    Equivalent(Vec<usize>),
    NotEquivalent,
    /// The block lengths exceed the search guard; the weight enumerators
    /// agree, which is necessary but not sufficient.
    ConsistentWithEquivalence,
}

/// Decides code equivalence up to coordinate permutation for n within the
/// guard, by backtracking over coordinate images with projection-multiset
/// pruning. Beyond the guard only weight-enumerator equality is checked and
/// the verdict is `ConsistentWithEquivalence`.
pub fn equivalent_up_to_permutation(
    a: &LinearCode,
    b: &LinearCode,
    guards: &Guards,
) -> Result<Equivalence> {
    if a.n != b.n {
        return Err(Error::LengthMismatch {
            left: a.n,
            right: b.n,
        });
    }
    if a.k != b.k {
        return Ok(Equivalence::NotEquivalent);
    }
    let we_a = weight_enumerator(a, guards)?;
    let we_b = weight_enumerator(b, guards)?;
    if we_a != we_b {
        return Ok(Equivalence::NotEquivalent);
    }
    if a.n > guards.equivalence_length {
        return Ok(Equivalence::ConsistentWithEquivalence);
    }

    // Codeword sets as n-bit masks.
    let words_a = codeword_masks(a);
    let mut words_b = codeword_masks(b);
    words_b.sort_unstable();
    let n = a.n;
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(&words_a, &words_b, n, 0, &mut perm, &mut used) {
        Ok(Equivalence::Equivalent(perm))
    } else {
        Ok(Equivalence::NotEquivalent)
    }
}

fn codeword_masks(code: &LinearCode) -> Vec<u64> {
    let mut out = Vec::with_capacity(1 << code.k);
    gray_walk(&code.generator, |cw| {
        let mut m = 0u64;
        for j in cw.support() {
            m |= 1 << j;
        }
        out.push(m);
    });
    out
}

fn assign(
    words_a: &[u64],
    words_b_sorted: &[u64],
    n: usize,
    depth: usize,
    perm: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == n {
        let mut mapped: Vec<u64> = words_a.iter().map(|&w| apply_perm(w, perm, n)).collect();
        mapped.sort_unstable();
        return mapped == words_b_sorted;
    }
    for image in 0..n {
        if used[image] {
            continue;
        }
        perm[depth] = image;
        used[image] = true;
        if projections_match(words_a, words_b_sorted, perm, depth + 1)
            && assign(words_a, words_b_sorted, n, depth + 1, perm, used)
        {
            return true;
        }
        used[image] = false;
        perm[depth] = usize::MAX;
    }
    false
}

fn apply_perm(word: u64, perm: &[usize], n: usize) -> u64 {
    let mut out = 0u64;
    for (i, &p) in perm.iter().enumerate().take(n) {
        if (word >> i) & 1 == 1 {
            out |= 1 << p;
        }
    }
    out
}

/// Prune: the multiset of codeword projections onto the first `depth`
/// coordinates of `a` must match the multiset of projections of `b` onto
/// their images.
fn projections_match(words_a: &[u64], words_b: &[u64], perm: &[usize], depth: usize) -> bool {
    let mut proj_a: Vec<u32> = words_a
        .iter()
        .map(|&w| {
            let mut p = 0u32;
            for (i, _) in perm.iter().enumerate().take(depth) {
                if (w >> i) & 1 == 1 {
                    p |= 1 << i;
                }
            }
            p
        })
        .collect();
    let mut proj_b: Vec<u32> = words_b
        .iter()
        .map(|&w| {
            let mut p = 0u32;
            for (i, &img) in perm.iter().enumerate().take(depth) {
                if (w >> img) & 1 == 1 {
                    p |= 1 << i;
                }
            }
            p
        })
        .collect();
    proj_a.sort_unstable();
    proj_b.sort_unstable();
    proj_a == proj_b
}

/// JSON form of a code: n, k, and at least one of the two bases as
/// '0'/'1' strings with coordinate 1 first.
#[derive(Serialize, Deserialize)]
pub struct CodeJson {
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parity: Option<Vec<String>>,
}

impl LinearCode {
    pub fn to_json(&self) -> CodeJson {
        CodeJson {
            n: self.n,
            k: self.k,
            generator: Some(self.generator.to_bitstrings()),
            parity: Some(self.parity.to_bitstrings()),
        }
    }

    /// Reconstructs a code from its JSON form. The missing basis is derived;
    /// when both are present they are checked against each other.
    pub fn from_json(json: &CodeJson) -> Result<LinearCode> {
        let code = match (&json.generator, &json.parity) {
            (Some(g), _) => {
                let gm = BitMatrix::parse_bitstrings(g)?;
                if gm.cols() != json.n {
                    return Err(Error::LengthMismatch {
                        left: gm.cols(),
                        right: json.n,
                    });
                }
                LinearCode::from_generator(&gm)?
            }
            (None, Some(h)) => {
                let hm = BitMatrix::parse_bitstrings(h)?;
                if hm.cols() != json.n {
                    return Err(Error::LengthMismatch {
                        left: hm.cols(),
                        right: json.n,
                    });
                }
                LinearCode::from_parity(&hm)?
            }
            (None, None) => {
                return Err(Error::Parse(
                    "code JSON needs a generator or a parity matrix".into(),
                ))
            }
        };
        if code.k != json.k {
            return Err(Error::Parse(format!(
                "declared k = {} but the basis has rank {}",
                json.k, code.k
            )));
        }
        if let (Some(_), Some(h)) = (&json.generator, &json.parity) {
            let hm = BitMatrix::parse_bitstrings(h)?;
            if hm.cols() != json.n || !code.generator.mul_transpose(&hm).is_zero() {
                return Err(Error::Parse(
                    "generator and parity matrices are inconsistent".into(),
                ));
            }
            if hm.rank() != code.n - code.k {
                return Err(Error::Parse("parity matrix has the wrong rank".into()));
            }
        }
        Ok(code)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&str]) -> BitMatrix {
        BitMatrix::parse_bitstrings(&rows.iter().map(|s| s.to_string()).collect::<Vec<_>>())
            .unwrap()
    }

    fn tetrahedron_parity() -> BitMatrix {
        mat(&["110010", "011001", "101100", "000111"])
    }

    #[test]
    fn code_from_parity_tetrahedron() {
        let code = LinearCode::from_parity(&tetrahedron_parity()).unwrap();
        assert_eq!((code.n(), code.k()), (6, 3));
        assert!(!code.is_zero_code());
    }

    #[test]
    fn code_from_single_parity_check() {
        let code = LinearCode::from_parity(&mat(&["111"])).unwrap();
        assert_eq!((code.n(), code.k()), (3, 2));
        let we = weight_enumerator(&code, &Guards::default()).unwrap();
        assert_eq!(we.counts, vec![1, 0, 3, 0]);
    }

    #[test]
    fn zero_code_is_degenerate_not_an_error() {
        let code = LinearCode::from_parity(&BitMatrix::identity(4)).unwrap();
        assert_eq!(code.k(), 0);
        assert!(code.is_zero_code());
        let we = weight_enumerator(&code, &Guards::default()).unwrap();
        assert_eq!(we.counts, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn full_space_dual_is_zero_code() {
        let full = LinearCode::from_generator(&BitMatrix::identity(5)).unwrap();
        assert!(full.is_full_space());
        let dual = full.dual();
        assert_eq!((dual.n(), dual.k()), (5, 0));
    }

    #[test]
    fn dual_of_dual_is_identity() {
        let code = LinearCode::from_parity(&tetrahedron_parity()).unwrap();
        assert!(codes_equal(&code.dual().dual(), &code).unwrap());
    }

    #[test]
    fn direct_sum_parameters() {
        let tetra = LinearCode::from_parity(&tetrahedron_parity()).unwrap();
        let sum = direct_sum(&[tetra.clone(), tetra.clone()]).unwrap();
        assert_eq!((sum.n(), sum.k()), (12, 6));
        let single = direct_sum(std::slice::from_ref(&tetra)).unwrap();
        assert!(codes_equal(&single, &tetra).unwrap());
    }

    #[test]
    fn weight_enumerator_tetrahedron() {
        let code = LinearCode::from_parity(&tetrahedron_parity()).unwrap();
        let we = weight_enumerator(&code, &Guards::default()).unwrap();
        assert_eq!(we.polynomial(), "1 + 4z^3 + 3z^4");
        assert_eq!(we.sum(), 8);
    }

    #[test]
    fn min_distance_examples() {
        let g = &Guards::default();
        let tetra = LinearCode::from_parity(&tetrahedron_parity()).unwrap();
        assert_eq!(min_distance(&tetra, g).unwrap(), 3);
        let simplex = crate::constructions::simplex_code(3).unwrap();
        assert_eq!(min_distance(&simplex, g).unwrap(), 4);
        let octa = crate::constructions::graph_code(
            crate::constructions::platonic(crate::constructions::PlatonicSolid::Octahedron).graph(),
        );
        assert_eq!(min_distance(&octa, g).unwrap(), 3);
        let zero = LinearCode::from_parity(&BitMatrix::identity(3)).unwrap();
        assert!(min_distance(&zero, g).is_err());
    }

    #[test]
    fn equivalence_beyond_guard_reports_consistency() {
        let simplex = crate::constructions::simplex_code(3).unwrap();
        let sum = direct_sum(&[simplex.clone(), simplex]).unwrap();
        assert_eq!(
            equivalent_up_to_permutation(&sum, &sum, &Guards::default()).unwrap(),
            Equivalence::ConsistentWithEquivalence
        );
    }

    #[test]
    fn guard_exceeded_reports_dimension() {
        let guards = Guards {
            enumeration_dimension: 2,
            ..Guards::default()
        };
        let code = LinearCode::from_parity(&tetrahedron_parity()).unwrap();
        match weight_enumerator(&code, &guards) {
            Err(Error::GuardExceeded {
                actual: 3,
                limit: 2,
                ..
            }) => {}
            other => panic!("expected guard error, got {other:?}"),
        }
    }

    #[test]
    fn macwilliams_is_an_involution() {
        let code = LinearCode::from_parity(&tetrahedron_parity()).unwrap();
        let we = weight_enumerator(&code, &Guards::default()).unwrap();
        let dual = macwilliams(&we, code.k()).unwrap();
        let back = macwilliams(&dual, code.redundancy()).unwrap();
        assert_eq!(back, we);
    }

    #[test]
    fn macwilliams_full_space_to_zero_code() {
        let full = WeightEnumerator {
            n: 3,
            counts: vec![1, 3, 3, 1],
        };
        let zero = macwilliams(&full, 3).unwrap();
        assert_eq!(zero.counts, vec![1, 0, 0, 0]);
    }

    #[test]
    fn macwilliams_rejects_inconsistent_input() {
        let bad = WeightEnumerator {
            n: 3,
            counts: vec![1, 1, 0, 0],
        };
        assert!(matches!(
            macwilliams(&bad, 2),
            Err(Error::InconsistentEnumerator { sum: 2, k: 2 })
        ));
    }

    #[test]
    fn covering_radius_repetition() {
        let rep = LinearCode::from_generator(&mat(&["111"])).unwrap();
        let analysis = covering_radius(&rep, &Guards::default()).unwrap();
        assert_eq!(analysis.covering_radius, 1);
        assert_eq!(analysis.leader_weights[0], 0);
    }

    #[test]
    fn covering_radius_full_space_is_zero() {
        let full = LinearCode::from_generator(&BitMatrix::identity(4)).unwrap();
        assert_eq!(
            covering_radius(&full, &Guards::default())
                .unwrap()
                .covering_radius,
            0
        );
    }

    #[test]
    fn codes_equal_requires_same_length() {
        let a = LinearCode::from_parity(&mat(&["111"])).unwrap();
        let b = LinearCode::from_parity(&mat(&["1111"])).unwrap();
        assert!(codes_equal(&a, &b).is_err());
    }

    #[test]
    fn codes_equal_ignores_row_order() {
        let a = LinearCode::from_generator(&mat(&["1100", "0011"])).unwrap();
        let b = LinearCode::from_generator(&mat(&["0011", "1111"])).unwrap();
        assert!(codes_equal(&a, &b).unwrap());
    }

    #[test]
    fn equivalence_detects_permuted_code() {
        // Swap coordinates 0 and 5 of the tetrahedron code.
        let code = LinearCode::from_parity(&tetrahedron_parity()).unwrap();
        let mut permuted_rows = Vec::new();
        for row in code.generator().row_iter() {
            let mut s: Vec<char> = row.to_bitstring().chars().collect();
            s.swap(0, 5);
            permuted_rows.push(s.into_iter().collect::<String>());
        }
        let permuted = LinearCode::from_generator(&mat(&permuted_rows
            .iter()
            .map(String::as_str)
            .collect::<Vec<_>>()))
        .unwrap();
        match equivalent_up_to_permutation(&code, &permuted, &Guards::default()).unwrap() {
            Equivalence::Equivalent(_) => {}
            other => panic!("expected equivalence, got {other:?}"),
        }
    }

    #[test]
    fn equivalence_rejects_different_dimensions() {
        let a = LinearCode::from_parity(&mat(&["111111"])).unwrap();
        let b = LinearCode::from_parity(&tetrahedron_parity()).unwrap();
        assert_eq!(
            equivalent_up_to_permutation(&a, &b, &Guards::default()).unwrap(),
            Equivalence::NotEquivalent
        );
    }

    #[test]
    fn json_round_trip_and_derivation() {
        let code = LinearCode::from_parity(&tetrahedron_parity()).unwrap();
        let full = serde_json::to_string(&code.to_json()).unwrap();
        let parsed: CodeJson = serde_json::from_str(&full).unwrap();
        let back = LinearCode::from_json(&parsed).unwrap();
        assert!(codes_equal(&code, &back).unwrap());

        // Parity only: generator is derived.
        let parity_only = CodeJson {
            n: 6,
            k: 3,
            generator: None,
            parity: Some(tetrahedron_parity().to_bitstrings()),
        };
        let derived = LinearCode::from_json(&parity_only).unwrap();
        assert!(codes_equal(&code, &derived).unwrap());

        let neither = CodeJson {
            n: 6,
            k: 3,
            generator: None,
            parity: None,
        };
        assert!(LinearCode::from_json(&neither).is_err());
    }
}
