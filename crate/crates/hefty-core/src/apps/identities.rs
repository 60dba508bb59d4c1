//! Eulerian numbers, hypersimplex volumes, and the two classical identities
//! connecting them.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::numeric::Scalar;

/// Exact binomial coefficient; zero when k > n.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient as usize; panics on overflow (desk scale only).
pub fn binomial_usize(n: usize, k: usize) -> usize {
    usize::try_from(&binomial(n, k)).expect("binomial fits in usize at desk scale")
}

/// Eulerian numbers A(d, k) for 0 <= k <= d-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianTable {
    pub d: usize,
    pub values: Vec<BigInt>,
}

impl EulerianTable {
    pub fn value(&self, k: usize) -> &BigInt {
        &self.values[k]
    }
}

/// A(d, k) = number of permutations of 1..d with exactly k descents, via the
/// standard recurrence A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1).
pub fn eulerian(d: usize) -> EulerianTable {
    assert!(d >= 1, "Eulerian numbers need d >= 1");
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for n in 2..=d {
        let mut next = vec![BigInt::zero(); n];
        for (k, slot) in next.iter_mut().enumerate() {
            let mut v = BigInt::zero();
            if k < row.len() {
                v += BigInt::from(k + 1) * &row[k];
            }
            if k >= 1 && k - 1 < row.len() {
                v += BigInt::from(n - k) * &row[k - 1];
            }
            *slot = v;
        }
        row = next;
    }
    EulerianTable { d, values: row }
}

/// Cumulative slab volume of the unit cube: vol{x in [0,1]^d : sum x_i <= t}
/// for integer t, by inclusion-exclusion: (1/d!) sum_j (-1)^j C(d,j) (t-j)^d.
fn cube_slab_cumulative(d: usize, t: usize) -> Scalar {
    let mut acc = BigInt::zero();
    for j in 0..=t.min(d) {
        let term = binomial(d, j) * BigInt::from(t - j).pow(d as u32);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let mut dfact = BigInt::one();
    for i in 2..=d {
        dfact *= BigInt::from(i);
    }
    Scalar::new(acc, dfact)
}

/// Relative volume v(d, p) of the order-p hypersimplex of a d-simplex:
/// the cube slab {p-1 <= sum x_i <= p}, affinely equivalent to the
/// hypersimplex, normalized by the simplex volume 1/d!. Always an integer.
pub fn hypersimplex_relative_volume(d: usize, p: usize) -> Scalar {
    assert!(d >= 1 && (1..=d).contains(&p), "need 1 <= p <= d");
    let mut dfact = BigInt::one();
    for i in 2..=d {
        dfact *= BigInt::from(i);
    }
    let slab = cube_slab_cumulative(d, p) - cube_slab_cumulative(d, p - 1);
    slab * Scalar::from_integer(dfact)
}

/// Worpitzky's identity at x = n: sum_k A(d,k) C(n+k, d) = n^d.
pub fn worpitzky_check(d: usize, n: usize) -> bool {
    let table = eulerian(d);
    let mut lhs = BigInt::zero();
    for (k, a) in table.values.iter().enumerate() {
        lhs += a * binomial(n + k, d);
    }
    lhs == BigInt::from(n).pow(d as u32)
}

/// The hypersimplex volume identity: sum_p v(d,p) C(n+d-p, n-p) = n^d, with
/// the binomial read as zero when n < p.
pub fn hypersimplex_identity_check(d: usize, n: usize) -> bool {
    let mut lhs = Scalar::zero();
    for p in 1..=d {
        if n < p {
            continue;
        }
        let c = Scalar::from_integer(binomial(n + d - p, n - p));
        lhs += hypersimplex_relative_volume(d, p) * c;
    }
    lhs == Scalar::from_integer(BigInt::from(n).pow(d as u32))
}
