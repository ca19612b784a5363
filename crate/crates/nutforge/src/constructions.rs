//! Generator-set constructions for every admissible (order, degree) pair,
//! the membership predicate over such pairs, and a total dispatcher.

use std::fmt;

use thiserror::Error;

use crate::circulant::CirculantSpec;
use crate::enumerate;

/// Which construction produced a generator set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionCase {
    /// Odd t with 4 | n.
    Thm2,
    /// n = 2 (mod 4).
    Thm3,
    /// Order 4t + 8, 4 | t.
    Lem4t8Div4,
    /// Order 4t + 8, t = 2 (mod 4).
    Lem4t8Mod2,
    /// 8 | n with n >= 4t + 16.
    SPrime,
    /// n = 4 (mod 8) with n >= 4t + 12.
    SDoublePrime,
    /// Alternative route for odd t >= 3 (not used by the dispatcher).
    Thm1,
    /// Degree 8 with 4 | n, found by bounded exhaustive search.
    SearchD8,
}

impl fmt::Display for ConstructionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            ConstructionCase::Thm2 => "THM2",
            ConstructionCase::Thm3 => "THM3",
            ConstructionCase::Lem4t8Div4 => "LEM-4t8-4|t",
            ConstructionCase::Lem4t8Mod2 => "LEM-4t8-t≡₄2",
            ConstructionCase::SPrime => "THM-S′",
            ConstructionCase::SDoublePrime => "THM-S″",
            ConstructionCase::Thm1 => "THM1",
            ConstructionCase::SearchD8 => "SEARCH-d8",
        };
        write!(f, "{tag}")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{0}")]
    Preconditions(String),
    #[error("no construction case applies to admissible pair ({n}, {d}); dispatcher bug")]
    DispatcherGap { n: u64, d: u64 },
}

fn preconditions(msg: String) -> ConstructionError {
    ConstructionError::Preconditions(msg)
}

/// Whether a d-regular circulant nut graph of order n exists:
/// none unless 4 | d and d > 0; for d = 4 (mod 8), every even n >= d + 4;
/// for d = 8, order 14 plus every even n >= 18; for larger multiples of 8,
/// every even n >= d + 6.
pub fn membership(n: u64, d: u64) -> bool {
    if d == 0 || d % 4 != 0 {
        return false;
    }
    if d % 8 == 4 {
        return n % 2 == 0 && n >= d + 4;
    }
    if d == 8 {
        return n == 14 || (n % 2 == 0 && n >= 18);
    }
    n % 2 == 0 && n >= d + 6
}

fn block(range: std::ops::RangeInclusive<u64>) -> Vec<u64> {
    range.collect()
}

/// `{1..t-1} ∪ {n/4, n/4 + 1} ∪ {n/2 - (t-1)..n/2 - 1}` for odd t, 4 | n,
/// n >= 4t + 4.
pub fn thm2_set(t: u64, n: u64) -> Result<CirculantSpec, ConstructionError> {
    if t % 2 == 0 || t == 0 || n % 4 != 0 || n < 4 * t + 4 {
        return Err(preconditions(format!(
            "thm2_set needs odd t >= 1, 4 | n and n >= 4t + 4 (got t = {t}, n = {n})"
        )));
    }
    let mut gens = block(1..=t - 1);
    gens.extend([n / 4, n / 4 + 1]);
    gens.extend(block(n / 2 - (t - 1)..=n / 2 - 1));
    Ok(CirculantSpec::new(n, gens).expect("blocks are disjoint and below n/2"))
}

/// `{1..t-1} ∪ {(n+2)/4, (n+6)/4} ∪ {n/2 - (t-1)..n/2 - 1}` for t >= 1,
/// n = 2 (mod 4), n >= 4t + 6.
pub fn thm3_set(t: u64, n: u64) -> Result<CirculantSpec, ConstructionError> {
    if t == 0 || n % 4 != 2 || n < 4 * t + 6 {
        return Err(preconditions(format!(
            "thm3_set needs t >= 1, n = 2 (mod 4) and n >= 4t + 6 (got t = {t}, n = {n})"
        )));
    }
    let mut gens = block(1..=t - 1);
    gens.extend([(n + 2) / 4, (n + 6) / 4]);
    gens.extend(block(n / 2 - (t - 1)..=n / 2 - 1));
    Ok(CirculantSpec::new(n, gens).expect("blocks are disjoint and below n/2"))
}

/// Order 4t + 8 for even t >= 4: `{1..2t+3}` minus `{t+1, t+3, t+4}` when
/// 4 | t, minus `{t-2, t+1, t+3}` when t = 2 (mod 4).
pub fn lemma_4t8_set(t: u64) -> Result<CirculantSpec, ConstructionError> {
    if t % 2 != 0 || t < 4 {
        return Err(preconditions(format!(
            "lemma_4t8_set needs even t >= 4 (got t = {t})"
        )));
    }
    let removed: [u64; 3] = if t % 4 == 0 {
        [t + 1, t + 3, t + 4]
    } else {
        [t - 2, t + 1, t + 3]
    };
    let gens = (1..=2 * t + 3).filter(|g| !removed.contains(g));
    Ok(CirculantSpec::new(4 * t + 8, gens).expect("set stays below n/2"))
}

/// `{1..t-3} ∪ {t-1, t} ∪ {n/4, n/4 + 2} ∪ {n/2 - t, n/2 - (t-1)} ∪
/// {n/2 - (t-3)..n/2 - 1}` for even t >= 4, 8 | n, n >= 4t + 16.
pub fn thm_sprime_set(t: u64, n: u64) -> Result<CirculantSpec, ConstructionError> {
    if t % 2 != 0 || t < 4 || n % 8 != 0 || n < 4 * t + 16 {
        return Err(preconditions(format!(
            "thm_sprime_set needs even t >= 4, 8 | n and n >= 4t + 16 (got t = {t}, n = {n})"
        )));
    }
    let mut gens = block(1..=t - 3);
    gens.extend([t - 1, t]);
    gens.extend([n / 4, n / 4 + 2]);
    gens.extend([n / 2 - t, n / 2 - (t - 1)]);
    gens.extend(block(n / 2 - (t - 3)..=n / 2 - 1));
    Ok(CirculantSpec::new(n, gens).expect("blocks are disjoint and below n/2"))
}

/// `{1..t-1} ∪ {n/4 - 1, n/4 + 3} ∪ {n/2 - (t-1)..n/2 - 1}` for even
/// t >= 4, n = 4 (mod 8), n >= 4t + 12.
pub fn thm_sdprime_set(t: u64, n: u64) -> Result<CirculantSpec, ConstructionError> {
    if t % 2 != 0 || t < 4 || n % 8 != 4 || n < 4 * t + 12 {
        return Err(preconditions(format!(
            "thm_sdprime_set needs even t >= 4, n = 4 (mod 8) and n >= 4t + 12 (got t = {t}, n = {n})"
        )));
    }
    let mut gens = block(1..=t - 1);
    gens.extend([n / 4 - 1, n / 4 + 3]);
    gens.extend(block(n / 2 - (t - 1)..=n / 2 - 1));
    Ok(CirculantSpec::new(n, gens).expect("blocks are disjoint and below n/2"))
}

/// `{1..2t+1} \ {t}` for odd t >= 3 with t != 1 (mod 10) and t != 15
/// (mod 18), even n >= 4t + 4. Kept as an alternative route; the dispatcher
/// covers odd t through [`thm2_set`] and [`thm3_set`].
pub fn thm1_set(t: u64, n: u64) -> Result<CirculantSpec, ConstructionError> {
    if t % 2 == 0 || t < 3 || t % 10 == 1 || t % 18 == 15 || n % 2 != 0 || n < 4 * t + 4 {
        return Err(preconditions(format!(
            "thm1_set needs odd t >= 3 with t != 1 (mod 10), t != 15 (mod 18), even n >= 4t + 4 \
             (got t = {t}, n = {n})"
        )));
    }
    let gens = (1..=2 * t + 1).filter(|&g| g != t);
    Ok(CirculantSpec::new(n, gens).expect("set stays below n/2"))
}

/// Total dispatcher: `None` exactly when [`membership`] is false, otherwise a
/// generator set passing the spectral nut test, chosen by the first matching
/// case: odd t with 4 | n; n = 2 (mod 4); order 4t + 8 for even t >= 4; 8 | n
/// with n >= 4t + 16; n = 4 (mod 8) with n >= 4t + 12; and for degree 8 with
/// 4 | n, lexicographic exhaustive search.
pub fn construct(
    n: u64,
    d: u64,
) -> Result<Option<(CirculantSpec, ConstructionCase)>, ConstructionError> {
    if !membership(n, d) {
        return Ok(None);
    }
    let t = d / 4;
    let found = if t % 2 == 1 && n % 4 == 0 {
        (thm2_set(t, n)?, ConstructionCase::Thm2)
    } else if n % 4 == 2 {
        (thm3_set(t, n)?, ConstructionCase::Thm3)
    } else if t % 2 == 0 && t >= 4 && n == 4 * t + 8 {
        let case = if t % 4 == 0 {
            ConstructionCase::Lem4t8Div4
        } else {
            ConstructionCase::Lem4t8Mod2
        };
        (lemma_4t8_set(t)?, case)
    } else if t % 2 == 0 && t >= 4 && n % 8 == 0 && n >= 4 * t + 16 {
        (thm_sprime_set(t, n)?, ConstructionCase::SPrime)
    } else if t % 2 == 0 && t >= 4 && n % 8 == 4 && n >= 4 * t + 12 {
        (thm_sdprime_set(t, n)?, ConstructionCase::SDoublePrime)
    } else if d == 8 && n % 4 == 0 && n >= 20 {
        match enumerate::first_nut(n, 8) {
            Some(spec) => (spec, ConstructionCase::SearchD8),
            None => return Err(ConstructionError::DispatcherGap { n, d }),
        }
    } else {
        return Err(ConstructionError::DispatcherGap { n, d });
    };
    Ok(Some(found))
}
