//! Enumeration guards.
//!
//! Every exhaustive sweep in this crate is bounded by an explicit guard and
//! fails with [`Error::GuardExceeded`](crate::Error::GuardExceeded) rather
//! than silently truncating. Defaults are sized so the full verification
//! suite runs in seconds; raise them per call or through the
//! `LRC_GUARD_OVERRIDE` environment variable.

/// Limits for the exhaustive sweeps.
#[derive(Debug, Clone)]
pub struct Guards {
    /// Max code dimension k for full codeword walks (weight enumerators,
    /// minimum distance): 2^k steps.
    pub enumeration_dimension: usize,
    /// Max redundancy n-k for coset-leader sweeps: 2^(n-k) syndromes.
    pub coset_redundancy: usize,
    /// Max point count for exhaustive covering-system search with t <= 2.
    pub search_points_t2: usize,
    /// Max point count for exhaustive covering-system search with t >= 3.
    pub search_points_t3: usize,
    /// Max number of subsets for the exact maximum-disjoint-set search.
    pub packing_subsets: usize,
    /// Max block length for the brute-force oracles (2^n vectors).
    pub oracle_length: usize,
    /// Max block length for deciding code equivalence by permutation search.
    pub equivalence_length: usize,
    /// Redundancy threshold below which all dual codewords are enumerated
    /// when searching for repair codewords; above it, candidate supports of
    /// bounded weight are enumerated instead.
    pub dual_walk_redundancy: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            enumeration_dimension: 28,
            coset_redundancy: 28,
            search_points_t2: 10,
            search_points_t3: 9,
            packing_subsets: 64,
            oracle_length: 20,
            equivalence_length: 12,
            dual_walk_redundancy: 20,
        }
    }
}

impl Guards {
    /// Defaults, raised by `LRC_GUARD_OVERRIDE` if set.
    ///
    /// The variable is either a single integer, which raises every guard to
    /// at least that value, or a comma-separated list of `key=value` pairs
    /// with keys `enum-k`, `coset`, `search-n`, `packing`, `oracle-n`,
    /// `equiv-n`. Unknown keys and malformed entries are ignored.
    pub fn from_env() -> Self {
        match std::env::var("LRC_GUARD_OVERRIDE") {
            Ok(raw) => Self::with_override(&raw),
            Err(_) => Guards::default(),
        }
    }

    /// Applies an override string to the defaults; the same syntax as the
    /// environment variable.
    pub fn with_override(raw: &str) -> Self {
        let mut g = Guards::default();
        if let Ok(v) = raw.trim().parse::<usize>() {
            g.raise_all(v);
            return g;
        }
        for part in raw.split(',') {
            let Some((key, value)) = part.split_once('=') else {
                continue;
            };
            let Ok(v) = value.trim().parse::<usize>() else {
                continue;
            };
            match key.trim() {
                "enum-k" => g.enumeration_dimension = g.enumeration_dimension.max(v),
                "coset" => g.coset_redundancy = g.coset_redundancy.max(v),
                "search-n" => {
                    g.search_points_t2 = g.search_points_t2.max(v);
                    g.search_points_t3 = g.search_points_t3.max(v);
                }
                "packing" => g.packing_subsets = g.packing_subsets.max(v),
                "oracle-n" => g.oracle_length = g.oracle_length.max(v),
                "equiv-n" => g.equivalence_length = g.equivalence_length.max(v),
                _ => {}
            }
        }
        g
    }

    fn raise_all(&mut self, v: usize) {
        self.enumeration_dimension = self.enumeration_dimension.max(v);
        self.coset_redundancy = self.coset_redundancy.max(v);
        self.search_points_t2 = self.search_points_t2.max(v);
        self.search_points_t3 = self.search_points_t3.max(v);
        self.packing_subsets = self.packing_subsets.max(v);
        self.oracle_length = self.oracle_length.max(v);
        self.equivalence_length = self.equivalence_length.max(v);
    }

    pub(crate) fn check(
        &self,
        what: &'static str,
        actual: usize,
        limit: usize,
    ) -> crate::Result<()> {
        if actual > limit {
            Err(crate::Error::GuardExceeded {
                what,
                actual,
                limit,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn override_single_integer_raises_everything() {
        let g = Guards::with_override("40");
        assert_eq!(g.enumeration_dimension, 40);
        assert_eq!(g.coset_redundancy, 40);
        assert_eq!(g.search_points_t2, 40);
        assert_eq!(g.search_points_t3, 40);
    }

    #[test]
    fn override_keyed_pairs() {
        let g = Guards::with_override("search-n=12, enum-k=30");
        assert_eq!(g.search_points_t2, 12);
        assert_eq!(g.search_points_t3, 12);
        assert_eq!(g.enumeration_dimension, 30);
        assert_eq!(g.coset_redundancy, Guards::default().coset_redundancy);
    }

    #[test]
    fn override_never_lowers_a_guard() {
        let g = Guards::with_override("2");
        assert_eq!(
            g.enumeration_dimension,
            Guards::default().enumeration_dimension
        );
    }

    #[test]
    fn override_ignores_junk() {
        let g = Guards::with_override("nonsense,search-n=eleven,=5");
        assert_eq!(g.search_points_t2, Guards::default().search_points_t2);
    }
}
