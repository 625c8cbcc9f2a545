//! Integer-exact recurrences, closed forms, and rank bounds.
//!
//! `R_k(n)` is the separator recurrence: `R_k(n) = n` for `n <= k`, otherwise
//! `k + R_k(ceil((n - k) / 2))`. `N_k(r)` is its adjoint, the least `n` with
//! `R_k(n) >= r`. All logarithms are binary, and every bound predicate is
//! decided with big-integer arithmetic; floating point only appears in
//! display values.

mod audit;
mod hypercube;

pub use audit::{
    audit_claims, AuditBounds, AuditFinding, AuditSummary, AuditValue, ClaimId, ClaimTally,
};
pub use hypercube::{hypercube_report, HypercubeReport};

use std::cmp::Ordering;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{domain, Result, WidthError};

fn require_k(k: u64) -> Result<()> {
    if k < 1 {
        Err(domain("recurrence parameter k must be at least 1"))
    } else {
        Ok(())
    }
}

/// `R_k(n)`, evaluated by unrolling the recurrence.
pub fn recurrence(k: u64, n: u64) -> Result<u64> {
    require_k(k)?;
    let mut acc = 0;
    let mut m = n;
    while m > k {
        acc += k;
        m = (m - k).div_ceil(2);
    }
    Ok(acc + m)
}

/// `R_k(n)` from the explicit two-branch formula, with `floor(log(1 + n/k))`
/// taken as the largest `j` such that `k * 2^j <= n + k`.
pub fn recurrence_explicit(k: u64, n: u64) -> Result<u64> {
    require_k(k)?;
    if k + 1 >= n {
        return Ok(n);
    }
    let total = n as u128 + k as u128;
    let mut j = 0u32;
    while (k as u128) << (j + 1) <= total {
        j += 1;
    }
    Ok(k * (j as u64 - 1) + total.div_ceil(1u128 << j) as u64)
}

/// Contiguous table of `R_k(0..=n_max)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecurrenceTable {
    pub k: u64,
    pub values: Vec<u64>,
}

impl RecurrenceTable {
    pub fn new(k: u64, n_max: u64) -> Result<Self> {
        require_k(k)?;
        let len = usize::try_from(n_max).map_err(|_| WidthError::Overflow("recurrence table"))? + 1;
        let mut values = Vec::with_capacity(len);
        for n in 0..len as u64 {
            let v = if n <= k {
                n
            } else {
                k + values[(n - k).div_ceil(2) as usize]
            };
            values.push(v);
        }
        Ok(RecurrenceTable { k, values })
    }

    pub fn get(&self, n: u64) -> Option<u64> {
        self.values.get(n as usize).copied()
    }
}

/// `N_k(r)`: the least `n` with `R_k(n) >= r`, with `N_k(0) = 0`.
///
/// Found by doubling then bisection over `R_k`, which relies on `R_k` being
/// nondecreasing.
pub fn adjoint(k: u64, r: u64) -> Result<u64> {
    require_k(k)?;
    if r == 0 {
        return Ok(0);
    }
    // R_k(n) <= n, so the answer is at least r
    let mut lo = r;
    if recurrence(k, lo)? >= r {
        return Ok(lo);
    }
    let mut hi = lo;
    while recurrence(k, hi)? < r {
        lo = hi;
        hi = hi
            .checked_mul(2)
            .ok_or(WidthError::Overflow("adjoint search"))?;
    }
    // invariant: R(lo) < r <= R(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if recurrence(k, mid)? >= r {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Contiguous table of `N_k(0..=r_max)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjointTable {
    pub k: u64,
    pub values: Vec<u64>,
}

impl AdjointTable {
    pub fn new(k: u64, r_max: u64) -> Result<Self> {
        let values = (0..=r_max).map(|r| adjoint(k, r)).collect::<Result<_>>()?;
        Ok(AdjointTable { k, values })
    }

    /// Backward difference `N_k(j) - N_k(j - 1)` for `j >= 1`.
    pub fn backward_difference(&self, j: u64) -> Option<u64> {
        let j = j as usize;
        if j == 0 || j >= self.values.len() {
            return None;
        }
        Some(self.values[j] - self.values[j - 1])
    }
}

fn require_claim_domain(k: u64, index: u64, name: &str) -> Result<()> {
    if k < 2 {
        return Err(domain(format!("{name} is stated for k >= 2, got k = {k}")));
    }
    if index < 1 {
        return Err(domain(format!("{name} is stated for indices >= 1")));
    }
    Ok(())
}

fn pow2(e: u64, what: &'static str) -> Result<u64> {
    u32::try_from(e)
        .ok()
        .and_then(|e| 1u64.checked_shl(e))
        .filter(|&v| v != 0 && e < 64)
        .ok_or(WidthError::Overflow(what))
}

/// Printed backward-difference formula: `2^(i-1)` for the window `(i-1)k < j <= ik`.
pub fn claim61_value(k: u64, j: u64) -> Result<u64> {
    require_claim_domain(k, j, "backward-difference formula")?;
    let i = j.div_ceil(k);
    pow2(i - 1, "backward-difference formula")
}

/// Printed closed form `(k + r mod k) * 2^((r - r mod k) / k) - k`.
pub fn claim62_value(k: u64, r: u64) -> Result<u64> {
    require_claim_domain(k, r, "adjoint closed form")?;
    let t = r % k;
    let s = (r - t) / k;
    let scaled = (k + t)
        .checked_mul(pow2(s, "adjoint closed form")?)
        .ok_or(WidthError::Overflow("adjoint closed form"))?;
    Ok(scaled - k)
}

/// The printed lower bound `k * (2^(r/k) - 1)` on `N_k(r)`, kept exact.
///
/// `x >= k * (2^(r/k) - 1)` is decided as `(x + k)^k >= k^k * 2^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AdjointLowerBound {
    pub k: u64,
    pub r: u64,
}

impl AdjointLowerBound {
    /// Orders `x` against the bound.
    pub fn compare(&self, x: u64) -> Ordering {
        let k = self.k as u32;
        let lhs = BigUint::from(x + self.k).pow(k);
        let rhs = BigUint::from(self.k).pow(k) << self.r;
        lhs.cmp(&rhs)
    }

    /// Exact integer value, when `k` divides `r`.
    pub fn as_integer(&self) -> Option<u64> {
        self.r
            .is_multiple_of(self.k)
            .then(|| pow2(self.r / self.k, "adjoint lower bound").ok())
            .flatten()
            .and_then(|p| self.k.checked_mul(p - 1))
    }

    pub fn approx(&self) -> f64 {
        self.k as f64 * ((self.r as f64 / self.k as f64).exp2() - 1.0)
    }
}

pub fn claim63_lower(k: u64, r: u64) -> Result<AdjointLowerBound> {
    require_claim_domain(k, r, "adjoint lower bound")?;
    if k > u32::MAX as u64 {
        return Err(WidthError::Overflow("adjoint lower bound"));
    }
    Ok(AdjointLowerBound { k, r })
}

/// Orders the interpolant `f(x) = (k + x) * 2^((r - x)/k) - k` at integer
/// points `a` and `b`. Raising both sides to the `k`-th power shows the
/// comparison is `(k+a)^k 2^(r-a) <=> (k+b)^k 2^(r-b)`, in which `r` cancels.
pub fn interpolant_cmp(k: u64, a: u64, b: u64) -> Ordering {
    let kk = k as u32;
    let top = a.max(b);
    let lhs = BigUint::from(k + a).pow(kk) << (top - a);
    let rhs = BigUint::from(k + b).pow(kk) << (top - b);
    lhs.cmp(&rhs)
}

/// Integer point in `[0, k-1]` minimizing the interpolant (smallest on ties).
pub fn interpolant_argmin(k: u64) -> u64 {
    (0..k).fold(0, |best, x| {
        if interpolant_cmp(k, x, best) == Ordering::Less {
            x
        } else {
            best
        }
    })
}

/// Stationary point `k * (1/ln 2 - 1)` of the interpolant. Display only.
pub fn interpolant_stationary_point(k: u64) -> f64 {
    k as f64 * (1.0 / std::f64::consts::LN_2 - 1.0)
}

/// Upper bounds on a rank value `r`, each decided exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum RankBound {
    /// `k * (1 + log(n / k))`; zero when `k = 0`.
    Refined { k: u64, n: u64 },
    /// `k * log(n / k)`, the refined bound without its leading `1 +`.
    RefinedWithoutOffset { k: u64, n: u64 },
    /// `1 + s * log n`.
    Classic { s: u64, n: u64 },
}

impl RankBound {
    /// Orders `r` against the bound value.
    pub fn compare(&self, r: u64) -> Ordering {
        match *self {
            RankBound::Refined { k, n } => {
                // r <=> k + k log(n/k)  iff  k^k 2^r <=> 2^k n^k
                let lhs = BigUint::from(k).pow(k as u32) << r;
                let rhs = BigUint::from(n).pow(k as u32) << k;
                lhs.cmp(&rhs)
            }
            RankBound::RefinedWithoutOffset { k, n } => {
                let lhs = BigUint::from(k).pow(k as u32) << r;
                let rhs = BigUint::from(n).pow(k as u32);
                lhs.cmp(&rhs)
            }
            RankBound::Classic { s, n } => {
                // r <=> 1 + s log n  iff  2^r <=> 2 n^s
                let lhs = BigUint::from(1u32) << r;
                let rhs = BigUint::from(n).pow(s as u32) << 1u32;
                lhs.cmp(&rhs)
            }
        }
    }

    pub fn holds(&self, r: u64) -> bool {
        self.compare(r) != Ordering::Greater
    }

    pub fn is_tight(&self, r: u64) -> bool {
        self.compare(r) == Ordering::Equal
    }

    pub fn approx(&self) -> f64 {
        match *self {
            RankBound::Refined { k, n } if k > 0 => k as f64 * (1.0 + (n as f64 / k as f64).log2()),
            RankBound::RefinedWithoutOffset { k, n } if k > 0 => {
                k as f64 * (n as f64 / k as f64).log2()
            }
            RankBound::Refined { .. } | RankBound::RefinedWithoutOffset { .. } => 0.0,
            RankBound::Classic { s, n } => 1.0 + s as f64 * (n as f64).log2(),
        }
    }
}

/// `R_k(n) <= k * (1 + log(n / k))` as an exact predicate object.
pub fn bound_thm6(k: u64, n: u64) -> Result<RankBound> {
    require_k(k)?;
    if n < 1 {
        return Err(domain("bound requires n >= 1"));
    }
    Ok(RankBound::Refined { k, n })
}

/// Whether `n = k * (2^j - 1)` for some `j >= 1`.
pub fn is_mersenne_multiple(k: u64, n: u64) -> bool {
    k > 0 && n.is_multiple_of(k) && {
        let q = n / k + 1;
        q >= 2 && q.is_power_of_two()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HarperVariant {
    /// `sum_{i=0}^{d} C(d, floor(d/2))`, the summand not depending on `i`.
    Printed,
    /// `sum_{i=0}^{d-1} C(i, floor(i/2))`.
    Standard,
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn harper_bandwidth(d: u64, variant: HarperVariant) -> Result<u64> {
    if d < 1 {
        return Err(domain("hypercube dimension must be at least 1"));
    }
    if d > 60 {
        return Err(WidthError::Overflow("Harper sum"));
    }
    Ok(match variant {
        HarperVariant::Printed => (d + 1) * binomial(d, d / 2),
        HarperVariant::Standard => (0..d).map(|i| binomial(i, i / 2)).sum(),
    })
}
