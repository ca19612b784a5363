//! Exhaustive search over balanced generator sets of a given order and degree.
//!
//! Candidates are the `d/2`-element subsets of `{1, ..., n/2 - 1}` in
//! lexicographic order, filtered to balanced parity before the spectral test.
//! The parallel entry points preserve the lexicographic order of results, so
//! they are drop-in replacements for the `_seq` baselines.

use itertools::Itertools;

use crate::circulant::CirculantSpec;
use crate::nutcheck::spectral_nut_test;

/// Number of `d/2`-subsets of `{1, ..., n/2 - 1}`, saturating at `u128::MAX`.
pub fn candidate_subset_count(n: u64, d: u64) -> u128 {
    if d % 2 != 0 {
        return 0;
    }
    let h = (n / 2).saturating_sub(1);
    let k = d / 2;
    if k > h {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(h - k) {
        acc = match acc.checked_mul((h - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

fn balanced(gens: &[u64]) -> bool {
    let odd = gens.iter().filter(|g| *g % 2 == 1).count();
    odd * 2 == gens.len() && odd > 0
}

/// All balanced candidate specs in lexicographic generator order.
pub fn balanced_candidates(n: u64, d: u64) -> Vec<CirculantSpec> {
    if d == 0 || d % 2 != 0 || n < 4 {
        return Vec::new();
    }
    let h = n / 2 - 1;
    let k = (d / 2) as usize;
    (1..=h)
        .combinations(k)
        .filter(|gens| balanced(gens))
        .map(|gens| CirculantSpec::new(n, gens).expect("generators stay below n/2"))
        .collect()
}

fn passes(spec: &CirculantSpec) -> bool {
    spectral_nut_test(spec)
        .expect("candidates have n >= 4 and no half-order generator")
        .verdict()
}

/// Every balanced generator set passing the spectral test, lexicographic.
pub fn nut_sets(n: u64, d: u64) -> Vec<CirculantSpec> {
    let candidates = balanced_candidates(n, d);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        candidates.into_par_iter().filter(passes).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        candidates.into_iter().filter(passes).collect()
    }
}

/// Sequential baseline for [`nut_sets`].
pub fn nut_sets_seq(n: u64, d: u64) -> Vec<CirculantSpec> {
    balanced_candidates(n, d).into_iter().filter(passes).collect()
}

pub fn count_nuts(n: u64, d: u64) -> u64 {
    nut_sets(n, d).len() as u64
}

pub fn count_nuts_seq(n: u64, d: u64) -> u64 {
    nut_sets_seq(n, d).len() as u64
}

/// Lexicographically first balanced generator set passing the spectral test.
pub fn first_nut(n: u64, d: u64) -> Option<CirculantSpec> {
    let candidates = balanced_candidates(n, d);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        candidates.into_par_iter().find_first(passes)
    }
    #[cfg(not(feature = "parallel"))]
    {
        candidates.into_iter().find(passes)
    }
}

/// Sequential baseline for [`first_nut`].
pub fn first_nut_seq(n: u64, d: u64) -> Option<CirculantSpec> {
    balanced_candidates(n, d).into_iter().find(passes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_counts() {
        assert_eq!(candidate_subset_count(16, 8), 35);
        assert_eq!(candidate_subset_count(14, 8), 15);
        assert_eq!(candidate_subset_count(10, 4), 6);
        assert_eq!(candidate_subset_count(4, 4), 0);
        assert_eq!(candidate_subset_count(10, 3), 0);
    }

    #[test]
    fn order_16_degree_8_has_no_nut() {
        assert_eq!(count_nuts(16, 8), 0);
        assert_eq!(count_nuts_seq(16, 8), 0);
    }

    #[test]
    fn order_14_degree_8_has_a_nut() {
        let count = count_nuts(14, 8);
        assert!(count >= 1);
        assert_eq!(count, count_nuts_seq(14, 8));
    }

    #[test]
    fn first_nut_is_lexicographic_and_matches_seq() {
        let a = first_nut(10, 4).unwrap();
        let b = first_nut_seq(10, 4).unwrap();
        assert_eq!(a, b);
        let all = nut_sets(10, 4);
        assert_eq!(all.first(), Some(&a));
        assert_eq!(all, nut_sets_seq(10, 4));
    }

    #[test]
    fn candidates_are_lexicographic_and_balanced() {
        let c = balanced_candidates(12, 4);
        assert!(c.windows(2).all(|w| w[0].gens() < w[1].gens()));
        assert!(c.iter().all(|s| s.balanced_parity()));
    }
}
