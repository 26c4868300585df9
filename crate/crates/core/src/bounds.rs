//! Lower bound from the wasted 2-domination of the borders, the matching
//! diagonal construction, and a dispatcher reporting `γ2(P_m □ C_n)` where it
//! is known.

use num_rational::Ratio;
use serde::Serialize;
use serde_json::json;

use crate::cylinder::{
    deficient_vertices, is_2dominating, CylinderSpec, Vertex, VertexSet, MIN_BORDER_M,
};
use crate::error::{Error, Result};
use crate::omega::{omega_table, MIN_N};

/// Smallest `m` for which `γ2 = (m+2)n/3` holds whenever `3 | n`.
pub const MIN_EXACT_M: usize = 8;
/// Smallest `n` accepted by the construction.
pub const MIN_CONSTRUCT_N: usize = 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundStatus {
    Exact,
    LowerBoundOnly,
    OutsideRange,
}

impl BoundStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundStatus::Exact => "exact",
            BoundStatus::LowerBoundOnly => "lower_bound_only",
            BoundStatus::OutsideRange => "outside_range",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundResult {
    pub m: usize,
    pub n: usize,
    /// `(mn + ω2(n)) / 3`.
    pub lower_rational: Option<Ratio<i64>>,
    /// Ceiling of `lower_rational`.
    pub lower: Option<i64>,
    pub upper: Option<i64>,
    pub exact: Option<i64>,
    pub witness: Option<VertexSet>,
    pub status: BoundStatus,
}

impl BoundResult {
    fn empty(m: usize, n: usize, status: BoundStatus) -> Self {
        BoundResult {
            m,
            n,
            lower_rational: None,
            lower: None,
            upper: None,
            exact: None,
            witness: None,
            status,
        }
    }

    /// JSON object with keys `m, n, lower_rational, lower, upper, exact,
    /// status`; the rational is written as `"p/q"` or `"p"`.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "m": self.m,
            "n": self.n,
            "lower_rational": self.lower_rational.map(|r| r.to_string()),
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "status": self.status,
        })
    }

    /// Checks `lower <= exact <= upper` and the witness size.
    pub fn is_consistent(&self) -> bool {
        let ordered = |a: Option<i64>, b: Option<i64>| match (a, b) {
            (Some(a), Some(b)) => a <= b,
            _ => true,
        };
        let witness_ok = match (&self.witness, self.upper) {
            (Some(w), Some(u)) => is_2dominating(w) && w.len() as i64 == u,
            (Some(_), None) => false,
            (None, _) => true,
        };
        ordered(self.lower, self.exact)
            && ordered(self.exact, self.upper)
            && ordered(self.lower, self.upper)
            && witness_ok
    }
}

/// `γ2(P_m □ C_n) >= (mn + ω2(n)) / 3`.
pub fn lower_bound(m: usize, n: usize) -> Result<BoundResult> {
    if m < MIN_BORDER_M {
        return Err(Error::BadDimensions {
            m,
            n,
            reason: "lower bound needs m >= 13",
        });
    }
    if n < MIN_N {
        return Err(Error::BadDimensions {
            m,
            n,
            reason: "lower bound needs n >= 16",
        });
    }
    let omega = omega_table()?.omega2(n)?;
    let mn = i64::try_from(m * n).map_err(|_| Error::Overflow)?;
    let rational = Ratio::new(mn + omega, 3);
    let mut result = BoundResult::empty(m, n, BoundStatus::LowerBoundOnly);
    result.lower = Some(rational.ceil().to_integer());
    result.lower_rational = Some(rational);
    Ok(result)
}

fn check_construct_range(m: usize, n: usize) -> Result<CylinderSpec> {
    if m < MIN_BORDER_M {
        return Err(Error::BadDimensions {
            m,
            n,
            reason: "construction needs m >= 13",
        });
    }
    if n < MIN_CONSTRUCT_N || !n.is_multiple_of(3) {
        return Err(Error::BadDimensions {
            m,
            n,
            reason: "construction needs n >= 18 and n divisible by 3",
        });
    }
    CylinderSpec::new(m, n)
}

/// Row `i` holds the columns `j ≡ i (mod 3)`.
pub fn diagonal_pattern(m: usize, n: usize) -> Result<VertexSet> {
    if !n.is_multiple_of(3) {
        return Err(Error::BadDimensions {
            m,
            n,
            reason: "n must be divisible by 3",
        });
    }
    let spec = CylinderSpec::new(m, n)?;
    VertexSet::from_vertices(
        spec,
        (1..=m).flat_map(|i| {
            (1..=n)
                .filter(move |j| j % 3 == i % 3)
                .map(move |j| Vertex::new(i, j))
        }),
    )
}

/// The diagonal pattern plus every vertex it leaves under-dominated.
pub fn construct_2dominating(m: usize, n: usize) -> Result<VertexSet> {
    check_construct_range(m, n)?;
    let mut set = diagonal_pattern(m, n)?;
    let gray = deficient_vertices(&set);
    for row in [1, m] {
        let count = gray.iter().filter(|v| v.row == row).count();
        if count != n / 3 {
            return Err(Error::Construction(format!(
                "row {row} has {count} deficient vertices, expected {}",
                n / 3
            )));
        }
    }
    if let Some(v) = gray.iter().find(|v| v.row != 1 && v.row != m) {
        return Err(Error::Construction(format!(
            "deficient vertex ({}, {}) outside the boundary rows",
            v.row, v.col
        )));
    }
    for v in gray {
        set.insert(v)?;
    }
    if !is_2dominating(&set) {
        return Err(Error::Construction(
            "repaired set is not 2-dominating".into(),
        ));
    }
    Ok(set)
}

/// What is known about `γ2(P_m □ C_n)`: the exact value `(m+2)n/3` when
/// `m >= 8` and `3 | n`, otherwise the lower bound for `m >= 13, n >= 16`.
pub fn gamma2(m: usize, n: usize) -> BoundResult {
    let lower = if m >= MIN_BORDER_M && n >= MIN_N {
        lower_bound(m, n).ok()
    } else {
        None
    };
    if m >= MIN_EXACT_M && n >= 3 && n.is_multiple_of(3) {
        let value = ((m + 2) * n / 3) as i64;
        let mut result = lower.unwrap_or_else(|| BoundResult::empty(m, n, BoundStatus::Exact));
        result.status = BoundStatus::Exact;
        result.exact = Some(value);
        result.upper = Some(value);
        if m >= MIN_BORDER_M && n >= MIN_CONSTRUCT_N {
            result.witness = construct_2dominating(m, n).ok();
        }
        return result;
    }
    match lower {
        Some(result) => result,
        None => BoundResult::empty(m, n, BoundStatus::OutsideRange),
    }
}
