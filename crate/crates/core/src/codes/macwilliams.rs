use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::WeightDistribution;
use crate::error::{invalid, Error, Result};

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binary Krawtchouk polynomial `K_j(w; n) = Σ_s (-1)^s C(w, s) C(n - w, j - s)`.
pub fn krawtchouk(j: usize, w: usize, n: usize) -> BigInt {
    (0..=j)
        .map(|s| {
            let term = binom(w, s) * binom(n - w, j - s);
            if s % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Dual weight distribution `A'_j = 2^-k Σ_w A_w K_j(w; n)`.
///
/// Fails unless the input sums to `2^k` and every output is a nonnegative
/// integer.
pub fn macwilliams_transform(wd: &WeightDistribution, k: usize) -> Result<WeightDistribution> {
    let n = wd.len();
    let size = BigInt::from(1) << k;
    if BigInt::from(wd.total()) != size {
        return Err(Error::InconsistentInput(format!(
            "distribution sums to {}, expected 2^{k}",
            wd.total()
        )));
    }
    let kraw: Vec<Vec<BigInt>> = (0..=n)
        .map(|j| (0..=n).map(|w| krawtchouk(j, w, n)).collect())
        .collect();
    let counts = (0..=n)
        .map(|j| {
            let sum: BigInt = wd
                .nonzero()
                .map(|(w, a)| BigInt::from(a) * &kraw[j][w])
                .sum();
            let zero = BigInt::from(0);
            if &sum % &size != zero || sum < zero {
                return Err(Error::InconsistentInput(format!(
                    "dual count for weight {j} is {sum}/2^{k}, not a nonnegative integer"
                )));
            }
            u64::try_from(sum / &size).map_err(|_| {
                Error::InconsistentInput(format!("dual count for weight {j} overflows u64"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    WeightDistribution::new(n, counts)
}

/// Verdict of the Assmus–Mattson test for strength `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssmusMattson {
    pub applies: bool,
    /// Nonzero dual weights in `1..=n-t`.
    pub nonzero_dual_weights: usize,
    /// `d - t`, the largest count for which the theorem applies.
    pub bound: usize,
}

/// Whether the dual distribution has at most `d - t` nonzero weights in
/// `1..=n-t`, in which case the weight-`d` words hold a `t`-design.
pub fn assmus_mattson_check(
    n: usize,
    d: usize,
    t: usize,
    dual_wd: &WeightDistribution,
) -> Result<AssmusMattson> {
    if t == 0 || t >= d {
        return Err(invalid(format!("need 1 <= t < d, got t = {t}, d = {d}")));
    }
    if t > n {
        return Err(invalid(format!("strength {t} exceeds length {n}")));
    }
    let count = dual_wd
        .nonzero()
        .filter(|&(w, _)| w >= 1 && w <= n - t)
        .count();
    Ok(AssmusMattson {
        applies: count <= d - t,
        nonzero_dual_weights: count,
        bound: d - t,
    })
}
