//! The (min,+) semiring over signed integers extended with `+∞`, and dense
//! square matrices over it.
//!
//! Addition of semiring elements is `min` (identity `∞`); multiplication is
//! ordinary integer addition (identity `0`, absorbing element `∞`). Every
//! finite addition is checked, so an overflow surfaces as [`Error::Overflow`]
//! instead of wrapping.
//!
//! Matrices are immutable; every operation returns a fresh matrix.

use std::fmt;
use std::str::FromStr;

use num_traits::{CheckedAdd, CheckedSub, NumCast, PrimInt, Signed};

use crate::error::{Error, Result};

/// Integer carrier for tropical values.
///
/// Blanket-implemented for the signed primitive integers.
pub trait TropicalScalar:
    PrimInt
    + Signed
    + CheckedAdd
    + CheckedSub
    + NumCast
    + FromStr
    + fmt::Display
    + fmt::Debug
    + std::hash::Hash
    + Send
    + Sync
    + 'static
{
}

impl<T> TropicalScalar for T where
    T: PrimInt
        + Signed
        + CheckedAdd
        + CheckedSub
        + NumCast
        + FromStr
        + fmt::Display
        + fmt::Debug
        + std::hash::Hash
        + Send
        + Sync
        + 'static
{
}

/// An integer or `+∞`. `Infinity` compares greater than every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropicalValue<T> {
    Finite(T),
    Infinity,
}

impl<T: TropicalScalar> TropicalValue<T> {
    /// The multiplicative identity `0`.
    pub fn one() -> Self {
        TropicalValue::Finite(T::zero())
    }

    pub fn is_finite(self) -> bool {
        matches!(self, TropicalValue::Finite(_))
    }

    pub fn finite(self) -> Option<T> {
        match self {
            TropicalValue::Finite(v) => Some(v),
            TropicalValue::Infinity => None,
        }
    }

    /// Semiring addition, `min(self, other)`.
    pub fn min_plus_add(self, other: Self) -> Self {
        self.min(other)
    }

    /// Semiring multiplication, `self + other` with `∞` absorbing.
    pub fn min_plus_mul(self, other: Self) -> Result<Self> {
        match (self, other) {
            (TropicalValue::Finite(a), TropicalValue::Finite(b)) => a
                .checked_add(&b)
                .map(TropicalValue::Finite)
                .ok_or(Error::Overflow),
            _ => Ok(TropicalValue::Infinity),
        }
    }
}

impl<T> From<T> for TropicalValue<T> {
    fn from(v: T) -> Self {
        TropicalValue::Finite(v)
    }
}

impl<T: fmt::Display> fmt::Display for TropicalValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropicalValue::Finite(v) => write!(f, "{v}"),
            TropicalValue::Infinity => f.write_str("inf"),
        }
    }
}

impl<T: TropicalScalar> FromStr for TropicalValue<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" {
            return Ok(TropicalValue::Infinity);
        }
        s.parse::<T>()
            .map(TropicalValue::Finite)
            .map_err(|_| Error::Parse(format!("bad tropical entry {s:?}")))
    }
}

/// Dense square matrix over the (min,+) semiring, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropicalMatrix<T> {
    order: usize,
    entries: Vec<TropicalValue<T>>,
}

impl<T: TropicalScalar> TropicalMatrix<T> {
    pub fn new(order: usize, entries: Vec<TropicalValue<T>>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Parse("matrix order must be positive".into()));
        }
        if entries.len() != order * order {
            return Err(Error::DimensionMismatch {
                left: order * order,
                right: entries.len(),
            });
        }
        Ok(Self { order, entries })
    }

    pub fn from_rows(rows: Vec<Vec<TropicalValue<T>>>) -> Result<Self> {
        let order = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != order) {
            return Err(Error::DimensionMismatch {
                left: order,
                right: bad.len(),
            });
        }
        Self::new(order, rows.into_iter().flatten().collect())
    }

    /// Matrix filled with `∞`.
    pub fn infinite(order: usize) -> Self {
        Self {
            order,
            entries: vec![TropicalValue::Infinity; order * order],
        }
    }

    /// `0` on the diagonal, `∞` elsewhere.
    pub fn identity(order: usize) -> Self {
        let mut m = Self::infinite(order);
        for i in 0..order {
            m.entries[i * order + i] = TropicalValue::one();
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> TropicalValue<T> {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[TropicalValue<T>] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn entries(&self) -> &[TropicalValue<T>] {
        &self.entries
    }

    pub fn finite_count(&self) -> usize {
        self.entries.iter().filter(|v| v.is_finite()).count()
    }

    /// Returns a copy with entry `(i, j)` replaced.
    pub fn with_entry(&self, i: usize, j: usize, v: TropicalValue<T>) -> Self {
        let mut out = self.clone();
        out.entries[i * self.order + j] = v;
        out
    }

    /// `(self ⊠ rhs)_ij = min_k (self_ik + rhs_kj)`.
    pub fn tmul(&self, rhs: &Self) -> Result<Self> {
        tmul(self, rhs)
    }

    /// Entrywise `≤` with `∞` as top.
    pub fn le_entrywise(&self, rhs: &Self) -> bool {
        self.order == rhs.order && self.entries.iter().zip(&rhs.entries).all(|(a, b)| a <= b)
    }

    /// Renders the matrix as `order=<s>` followed by one comma-separated row
    /// per line, `inf` for `∞`.
    pub fn to_csv(&self) -> String {
        let mut out = format!("order={}\n", self.order);
        for i in 0..self.order {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let order: usize = header
            .trim()
            .strip_prefix("order=")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad matrix header {header:?}")))?;
        let mut entries = Vec::with_capacity(order * order);
        let mut rows = 0;
        for line in lines {
            let row = line
                .split(',')
                .map(str::parse::<TropicalValue<T>>)
                .collect::<Result<Vec<_>>>()?;
            if row.len() != order {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {order}",
                    rows + 1,
                    row.len()
                )));
            }
            entries.extend(row);
            rows += 1;
        }
        if rows != order {
            return Err(Error::Parse(format!("{rows} rows, expected {order}")));
        }
        Self::new(order, entries)
    }
}

/// Tropical matrix product.
pub fn tmul<T: TropicalScalar>(
    a: &TropicalMatrix<T>,
    b: &TropicalMatrix<T>,
) -> Result<TropicalMatrix<T>> {
    if a.order != b.order {
        return Err(Error::DimensionMismatch {
            left: a.order,
            right: b.order,
        });
    }
    let s = a.order;
    let mut out = vec![TropicalValue::Infinity; s * s];
    for i in 0..s {
        let out_row = &mut out[i * s..(i + 1) * s];
        for k in 0..s {
            let TropicalValue::Finite(aik) = a.entries[i * s + k] else {
                continue;
            };
            for (slot, bkj) in out_row.iter_mut().zip(b.row(k)) {
                if let TropicalValue::Finite(bkj) = *bkj {
                    let sum = aik.checked_add(&bkj).ok_or(Error::Overflow)?;
                    if TropicalValue::Finite(sum) < *slot {
                        *slot = TropicalValue::Finite(sum);
                    }
                }
            }
        }
    }
    Ok(TropicalMatrix {
        order: s,
        entries: out,
    })
}

/// `(α ⊠ A)_ij = α + a_ij`; `∞` entries stay `∞`.
pub fn scalar_tmul<T: TropicalScalar>(
    alpha: T,
    a: &TropicalMatrix<T>,
) -> Result<TropicalMatrix<T>> {
    let entries = a
        .entries
        .iter()
        .map(|v| v.min_plus_mul(TropicalValue::Finite(alpha)))
        .collect::<Result<Vec<_>>>()?;
    Ok(TropicalMatrix {
        order: a.order,
        entries,
    })
}

/// `A^n`, the n-fold tropical product.
pub fn tpow<T: TropicalScalar>(a: &TropicalMatrix<T>, n: usize) -> Result<TropicalMatrix<T>> {
    Ok(powers(a, n)?.pop().expect("n >= 1"))
}

/// All powers `[A^1, A^2, ..., A^n]`, computed by successive left
/// multiplication by `A`.
pub fn powers<T: TropicalScalar>(
    a: &TropicalMatrix<T>,
    n: usize,
) -> Result<Vec<TropicalMatrix<T>>> {
    if n == 0 {
        return Err(Error::BadExponent { min: 1, got: 0 });
    }
    let mut out = Vec::with_capacity(n);
    out.push(a.clone());
    for _ in 1..n {
        let next = tmul(a, out.last().expect("nonempty"))?;
        out.push(next);
    }
    Ok(out)
}

pub fn min_diagonal<T: TropicalScalar>(a: &TropicalMatrix<T>) -> TropicalValue<T> {
    (0..a.order)
        .map(|i| a.get(i, i))
        .min()
        .unwrap_or(TropicalValue::Infinity)
}

/// Witness that `A^(n0+a) = b ⊠ A^n0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicityCertificate<T> {
    pub n0: usize,
    pub a: usize,
    pub b: T,
    pub power_at_n0: TropicalMatrix<T>,
    pub power_at_n0_plus_a: TropicalMatrix<T>,
}

impl<T: TropicalScalar> PeriodicityCertificate<T> {
    /// Re-checks the certificate by direct comparison of the embedded powers.
    pub fn verify(&self) -> bool {
        scalar_tmul(self.b, &self.power_at_n0)
            .map(|m| m == self.power_at_n0_plus_a)
            .unwrap_or(false)
    }

    /// `(n0, a, b)`.
    pub fn triple(&self) -> (usize, usize, T) {
        (self.n0, self.a, self.b)
    }
}

/// Returns `Some(b)` when `hi = b ⊠ lo`. Matrices with no finite entry at all
/// report `b = 0`.
pub fn shift_between<T: TropicalScalar>(
    lo: &TropicalMatrix<T>,
    hi: &TropicalMatrix<T>,
) -> Result<Option<T>> {
    if lo.order != hi.order {
        return Err(Error::DimensionMismatch {
            left: lo.order,
            right: hi.order,
        });
    }
    let mut shift: Option<T> = None;
    for (x, y) in lo.entries.iter().zip(&hi.entries) {
        match (x, y) {
            (TropicalValue::Infinity, TropicalValue::Infinity) => {}
            (TropicalValue::Finite(x), TropicalValue::Finite(y)) => {
                let d = y.checked_sub(x).ok_or(Error::Overflow)?;
                match shift {
                    None => shift = Some(d),
                    Some(b) if b == d => {}
                    Some(_) => return Ok(None),
                }
            }
            _ => return Ok(None),
        }
    }
    Ok(Some(shift.unwrap_or_else(T::zero)))
}

/// Searches precomputed powers `[A^1, ..., A^N]` for the first `(n0, a)`,
/// ordered by `a` then `n0`, with `A^(n0+a) = b ⊠ A^n0`.
pub fn find_shift_periodicity_in<T: TropicalScalar>(
    powers: &[TropicalMatrix<T>],
) -> Result<PeriodicityCertificate<T>> {
    let max_exponent = powers.len();
    for a in 1..max_exponent {
        for n0 in 1..=max_exponent - a {
            let lo = &powers[n0 - 1];
            let hi = &powers[n0 + a - 1];
            if let Some(b) = shift_between(lo, hi)? {
                return Ok(PeriodicityCertificate {
                    n0,
                    a,
                    b,
                    power_at_n0: lo.clone(),
                    power_at_n0_plus_a: hi.clone(),
                });
            }
        }
    }
    Err(Error::PeriodicityNotFound { max_exponent })
}

pub fn find_shift_periodicity<T: TropicalScalar>(
    a: &TropicalMatrix<T>,
    max_exponent: usize,
) -> Result<PeriodicityCertificate<T>> {
    if max_exponent < 2 {
        return Err(Error::BadExponent {
            min: 2,
            got: max_exponent,
        });
    }
    find_shift_periodicity_in(&powers(a, max_exponent)?)
}
