//! Two independent routes to the nut-graph verdict.
//!
//! The spectral route follows the root-of-unity criterion: an even order, a
//! generator set with balanced parity, and an eigenvalue polynomial with no
//! cyclotomic divisor of index b >= 3 dividing the order. The kernel route
//! computes the exact rational null space of the adjacency matrix by
//! fraction-free elimination and inspects it directly. [`cross_check`] runs
//! both and treats any disagreement as an implementation bug.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::circulant::{AdjacencyMatrix, CirculantSpec};
use crate::cyclotomic::{divides_phi, divisors};

/// First violated nut condition, with the offending cyclotomic index when the
/// eigenvalue polynomial vanishes at a root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NutFailure {
    OddOrder,
    UnbalancedGenerators,
    VanishingAt(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Spectral,
    Kernel,
    Both,
}

/// Verdict plus witness. Serializes to the JSON object
/// `{verdict, failure?, method, n, gens}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NutCertificate {
    verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<NutFailure>,
    method: Method,
    n: u64,
    gens: Vec<u64>,
}

impl NutCertificate {
    pub fn verdict(&self) -> bool {
        self.verdict
    }

    pub fn failure(&self) -> Option<&NutFailure> {
        self.failure.as_ref()
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn gens(&self) -> &[u64] {
        &self.gens
    }
}

/// Exact rational basis of the null space of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasis {
    rank: usize,
    vectors: Vec<Vec<BigRational>>,
}

impl KernelBasis {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nullity(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<BigRational>] {
        &self.vectors
    }

    /// Basis vectors scaled to coprime integers with positive first nonzero
    /// entry.
    pub fn primitive_integer_vectors(&self) -> Vec<Vec<BigInt>> {
        self.vectors
            .iter()
            .map(|v| {
                let lcm = v
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * &lcm / x.denom()).collect();
                let gcd = ints
                    .iter()
                    .fold(BigInt::zero(), |acc, x| acc.gcd(x));
                if !gcd.is_zero() && !gcd.is_one() {
                    for x in &mut ints {
                        *x /= &gcd;
                    }
                }
                if ints.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
                    for x in &mut ints {
                        *x = -&*x;
                    }
                }
                ints
            })
            .collect()
    }
}

#[derive(Debug, Error)]
pub enum NutcheckError {
    #[error("spectral test requires order n >= 2, got {0}")]
    OrderTooSmall(u64),
    #[error(transparent)]
    Circulant(#[from] crate::circulant::CirculantError),
    #[error("oracle disagreement on Circ({n}, {gens:?}): spectral = {spectral_verdict}, kernel = {kernel_verdict}")]
    Disagreement {
        n: u64,
        gens: Vec<u64>,
        spectral_verdict: bool,
        kernel_verdict: bool,
        spectral: Box<NutCertificate>,
        kernel: Box<NutCertificate>,
    },
}

/// Spectral nut test. The verdict is true iff the order is even, the
/// generator parity is balanced, and for every divisor b >= 3 of n the
/// index-b cyclotomic polynomial does not divide the eigenvalue polynomial.
/// Those indices are exactly the orders of the n-th roots of unity other
/// than 1 and -1, so the last condition restates "no eigenvalue other than
/// the trivial two vanishes".
///
/// Reports the smallest failing index. Specs containing the generator n/2
/// fall outside this criterion's hypothesis and are rejected; use
/// [`kernel_nut_test`] for those.
pub fn spectral_nut_test(spec: &CirculantSpec) -> Result<NutCertificate, NutcheckError> {
    if spec.n() < 2 {
        return Err(NutcheckError::OrderTooSmall(spec.n()));
    }
    let failure = if spec.n() % 2 == 1 {
        Some(NutFailure::OddOrder)
    } else if !spec.balanced_parity() {
        if spec.contains_half_order() {
            return Err(crate::circulant::CirculantError::HalfOrderGenerator {
                half: spec.n() / 2,
            }
            .into());
        }
        Some(NutFailure::UnbalancedGenerators)
    } else {
        let p = spec.eigen_poly().expect("balanced spec has no half-order generator");
        divisors(spec.n())
            .into_iter()
            .filter(|&b| b >= 3)
            .find(|&b| divides_phi(b, &p))
            .map(NutFailure::VanishingAt)
    };
    Ok(NutCertificate {
        verdict: failure.is_none(),
        failure,
        method: Method::Spectral,
        n: spec.n(),
        gens: spec.gens().to_vec(),
    })
}

/// Exact null-space basis of a square integer matrix via fraction-free
/// (Bareiss) elimination followed by rational back-substitution. No floating
/// point anywhere.
pub fn kernel_oracle(matrix: &AdjacencyMatrix) -> KernelBasis {
    let n = matrix.n();
    let mut m: Vec<Vec<BigInt>> = matrix
        .rows()
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();

    // Forward elimination. After step k every entry below-right of the pivot
    // is a minor of the (row-permuted) input, so the division by the previous
    // pivot is exact.
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..n {
        if row == n {
            break;
        }
        let Some(pr) = (row..n).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, pr);
        let pivot = m[row][col].clone();
        let (pivot_row, below) = {
            let (a, b) = m.split_at_mut(row + 1);
            (&a[row], b)
        };
        for target in below.iter_mut() {
            let factor = std::mem::replace(&mut target[col], BigInt::zero());
            for j in col + 1..n {
                let num = &pivot * &target[j] - &factor * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "fraction-free step must divide");
                target[j] = num / &prev;
            }
        }
        pivots.push((row, col));
        prev = pivot;
        row += 1;
    }

    let rank = pivots.len();
    let pivot_col = {
        let mut v = vec![false; n];
        for &(_, c) in &pivots {
            v[c] = true;
        }
        v
    };

    // One basis vector per free column: unit at the free column, zero at the
    // other free columns, pivot entries solved bottom-up over the rationals.
    let mut vectors = Vec::with_capacity(n - rank);
    for f in (0..n).filter(|&c| !pivot_col[c]) {
        let mut v = vec![BigRational::zero(); n];
        v[f] = BigRational::one();
        for &(r, c) in pivots.iter().rev() {
            let mut sum = BigRational::zero();
            for j in c + 1..n {
                if !m[r][j].is_zero() && !v[j].is_zero() {
                    sum += BigRational::from_integer(m[r][j].clone()) * &v[j];
                }
            }
            v[c] = -sum / BigRational::from_integer(m[r][c].clone());
        }
        vectors.push(v);
    }
    KernelBasis { rank, vectors }
}

/// Kernel nut test: true iff the order is at least 2 and the adjacency
/// null space is spanned by a single vector with no zero entry.
pub fn kernel_nut_test(spec: &CirculantSpec) -> NutCertificate {
    let basis = kernel_oracle(&spec.adjacency());
    let verdict = spec.n() >= 2
        && basis.nullity() == 1
        && basis.vectors[0].iter().all(|x| !x.is_zero());
    NutCertificate {
        verdict,
        failure: None,
        method: Method::Kernel,
        n: spec.n(),
        gens: spec.gens().to_vec(),
    }
}

/// Runs both tests and returns the shared verdict (with the spectral witness
/// on failure). A verdict mismatch is never a valid state; it is reported as
/// an error carrying both certificates.
pub fn cross_check(spec: &CirculantSpec) -> Result<NutCertificate, NutcheckError> {
    let spectral = spectral_nut_test(spec)?;
    let kernel = kernel_nut_test(spec);
    if spectral.verdict != kernel.verdict {
        return Err(NutcheckError::Disagreement {
            n: spec.n(),
            gens: spec.gens().to_vec(),
            spectral_verdict: spectral.verdict,
            kernel_verdict: kernel.verdict,
            spectral: Box::new(spectral),
            kernel: Box::new(kernel),
        });
    }
    Ok(NutCertificate {
        verdict: spectral.verdict,
        failure: spectral.failure,
        method: Method::Both,
        n: spec.n(),
        gens: spec.gens().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::totient;

    fn spec(n: u64, gens: &[u64]) -> CirculantSpec {
        CirculantSpec::new(n, gens.iter().copied()).unwrap()
    }

    /// A * v must vanish exactly for every basis vector.
    fn assert_kernel_annihilated(m: &AdjacencyMatrix, basis: &KernelBasis) {
        for v in basis.vectors() {
            for row in m.rows() {
                let mut sum = BigRational::zero();
                for (a, x) in row.iter().zip(v) {
                    if *a != 0 {
                        sum += BigRational::from_integer(BigInt::from(*a)) * x;
                    }
                }
                assert!(sum.is_zero());
            }
        }
    }

    #[test]
    fn spectral_examples() {
        let cert = spectral_nut_test(&spec(8, &[2, 3])).unwrap();
        assert!(cert.verdict());
        assert_eq!(cert.failure(), None);

        // 4-regular graph of order 6 vanishes at the primitive sixth roots
        let cert = spectral_nut_test(&spec(6, &[1, 2])).unwrap();
        assert!(!cert.verdict());
        assert_eq!(cert.failure(), Some(&NutFailure::VanishingAt(6)));

        let cert = spectral_nut_test(&spec(9, &[1, 2])).unwrap();
        assert_eq!(cert.failure(), Some(&NutFailure::OddOrder));

        let cert = spectral_nut_test(&spec(8, &[1, 3])).unwrap();
        assert_eq!(cert.failure(), Some(&NutFailure::UnbalancedGenerators));

        assert!(matches!(
            spectral_nut_test(&spec(1, &[])),
            Err(NutcheckError::OrderTooSmall(1))
        ));
        assert!(spectral_nut_test(&spec(8, &[4])).is_err());
    }

    #[test]
    fn kernel_oracle_examples() {
        let b = kernel_oracle(&spec(2, &[1]).adjacency());
        assert_eq!((b.rank(), b.nullity()), (2, 0));

        let m = spec(8, &[2, 3]).adjacency();
        let b = kernel_oracle(&m);
        assert_eq!((b.rank(), b.nullity()), (7, 1));
        assert_kernel_annihilated(&m, &b);
        let prim = b.primitive_integer_vectors();
        let expect: Vec<BigInt> = (0..8).map(|k| BigInt::from(if k % 2 == 0 { 1 } else { -1 })).collect();
        assert_eq!(prim[0], expect);

        let z = AdjacencyMatrix::zero(3);
        let b = kernel_oracle(&z);
        assert_eq!((b.rank(), b.nullity()), (0, 3));
    }

    #[test]
    fn kernel_nut_examples() {
        assert!(kernel_nut_test(&spec(8, &[2, 3])).verdict());
        // the 4-cycle has nullity 2
        assert!(!kernel_nut_test(&spec(4, &[1])).verdict());
        assert!(!kernel_nut_test(&spec(2, &[1])).verdict());
        // K_1 is trivial, never a nut
        assert!(!kernel_nut_test(&spec(1, &[])).verdict());
    }

    #[test]
    fn cross_check_examples() {
        let cert = cross_check(&spec(8, &[2, 3])).unwrap();
        assert!(cert.verdict());
        assert_eq!(cert.method(), Method::Both);

        let cert = cross_check(&spec(16, &[1, 2, 3, 4])).unwrap();
        assert!(!cert.verdict());

        // agreement is the point, whatever the shared verdict is
        cross_check(&spec(14, &[1, 2, 5, 6])).unwrap();
    }

    #[test]
    fn vanishing_index_forces_nullity() {
        // spectral failure at index b contributes phi(b) zero eigenvalues
        let s = spec(6, &[1, 2]);
        let cert = spectral_nut_test(&s).unwrap();
        let Some(NutFailure::VanishingAt(b)) = cert.failure().cloned() else {
            panic!("expected a vanishing index");
        };
        let basis = kernel_oracle(&s.adjacency());
        assert!(basis.nullity() as u64 >= totient(b));
    }

    #[test]
    fn balanced_specs_have_degree_divisible_by_four() {
        for (n, gens) in [(8u64, vec![2u64, 3]), (14, vec![1, 2, 5, 6]), (12, vec![1, 2, 3, 4])] {
            let s = spec(n, &gens);
            if s.balanced_parity() {
                assert_eq!(s.degree() % 4, 0);
            }
        }
    }

    #[test]
    fn certificate_serializes_to_contract_shape() {
        let cert = spectral_nut_test(&spec(6, &[1, 2])).unwrap();
        let json = serde_json::to_value(&cert).unwrap();
        assert_eq!(json["verdict"], serde_json::json!(false));
        assert_eq!(json["failure"], serde_json::json!({ "vanishing-at": 6 }));
        assert_eq!(json["method"], serde_json::json!("spectral"));
        assert_eq!(json["n"], serde_json::json!(6));
        assert_eq!(json["gens"], serde_json::json!([1, 2]));

        let cert = cross_check(&spec(8, &[2, 3])).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        assert!(!json.contains("failure"));
    }
}
