//! Circulant graphs described by an order and a generator set.

use thiserror::Error;

use crate::intpoly::IntPolynomial;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CirculantError {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("generator {gen} out of range 1..={max} for order {n}")]
    GeneratorOutOfRange { gen: u64, max: u64, n: u64 },
    #[error("duplicate generator {0}")]
    DuplicateGenerator(u64),
    #[error(
        "generator {half} equals n/2, which contributes a single neighbour; \
         the eigenvalue-polynomial route does not apply, use the kernel test"
    )]
    HalfOrderGenerator { half: u64 },
}

/// Order `n` together with a strictly increasing generator set drawn from
/// `1..=n/2`. Vertex `i` is adjacent to `i +- s (mod n)` for each generator
/// `s`, so the graph is simple and undirected by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CirculantSpec {
    n: u64,
    gens: Vec<u64>,
}

impl CirculantSpec {
    /// Validates and canonicalizes (sorts) the generator set. Out-of-range or
    /// duplicate generators are rejected rather than silently fixed.
    pub fn new(n: u64, gens: impl IntoIterator<Item = u64>) -> Result<Self, CirculantError> {
        if n == 0 {
            return Err(CirculantError::ZeroOrder);
        }
        let mut gens: Vec<u64> = gens.into_iter().collect();
        gens.sort_unstable();
        let max = n / 2;
        for w in gens.windows(2) {
            if w[0] == w[1] {
                return Err(CirculantError::DuplicateGenerator(w[0]));
            }
        }
        if let Some(&g) = gens.iter().find(|&&g| g == 0 || g > max) {
            return Err(CirculantError::GeneratorOutOfRange { gen: g, max, n });
        }
        Ok(Self { n, gens })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn gens(&self) -> &[u64] {
        &self.gens
    }

    /// Whether the set contains the generator n/2 (only possible for even n).
    pub fn contains_half_order(&self) -> bool {
        self.n % 2 == 0 && self.gens.last() == Some(&(self.n / 2))
    }

    /// Vertex degree: every generator contributes two neighbours except n/2,
    /// which contributes one.
    pub fn degree(&self) -> u64 {
        let d = 2 * self.gens.len() as u64;
        if self.contains_half_order() {
            d - 1
        } else {
            d
        }
    }

    /// Whether the generators all lie strictly below n/2 and split evenly
    /// into odd and even values, with at least one of each.
    pub fn balanced_parity(&self) -> bool {
        if self.contains_half_order() {
            return false;
        }
        let odd = self.gens.iter().filter(|g| *g % 2 == 1).count();
        let even = self.gens.len() - odd;
        odd == even && odd > 0
    }

    /// Materializes the full 0/1 adjacency matrix.
    pub fn adjacency(&self) -> AdjacencyMatrix {
        let n = self.n as usize;
        let mut in_set = vec![false; n / 2 + 1];
        for &g in &self.gens {
            in_set[g as usize] = true;
        }
        let row0: Vec<i64> = (0..n)
            .map(|d| i64::from(in_set[d.min(n - d)]))
            .collect();
        let rows = (0..n)
            .map(|r| (0..n).map(|c| row0[(c + n - r) % n]).collect())
            .collect();
        AdjacencyMatrix { n, rows }
    }

    /// The integer polynomial whose values at the n-th roots of unity are the
    /// graph's eigenvalues: coefficient 1 at powers `s` and `n - s` for each
    /// generator `s`. Requires every generator strictly below n/2.
    pub fn eigen_poly(&self) -> Result<IntPolynomial, CirculantError> {
        if self.contains_half_order() {
            return Err(CirculantError::HalfOrderGenerator { half: self.n / 2 });
        }
        let n = self.n as usize;
        let mut coeffs = vec![0i64; n];
        for &g in &self.gens {
            coeffs[g as usize] = 1;
            coeffs[n - g as usize] = 1;
        }
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}

/// Square 0/1 matrix; symmetric with zero diagonal when built from a spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    rows: Vec<Vec<i64>>,
}

impl AdjacencyMatrix {
    /// The edgeless graph on `n` vertices.
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            rows: vec![vec![0; n]; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn entry(&self, r: usize, c: usize) -> i64 {
        self.rows[r][c]
    }
}
