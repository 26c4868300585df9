//! `ω2(n)`, the least wasted 2-domination of a border set on a cycle of
//! length `n`, read off the diagonals of the powers of the transfer matrix.
//!
//! Powers are computed up to a fixed bound and searched for a shift
//! periodicity `A^(n0+a) = b ⊠ A^n0`. Once found, `ω2(n + a) = ω2(n) + b`
//! for every `n >= n0`, which extends the table to all `n`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::transfer::{build_transfer_matrix, TransferDigraph};
use crate::tropical::{
    find_shift_periodicity_in, min_diagonal, powers, PeriodicityCertificate, TropicalValue,
};
use crate::words::{Rules, SUITABLE_WORD_COUNT};

/// Smallest cycle length covered.
pub const MIN_N: usize = 16;
pub const DEFAULT_MAX_EXPLICIT: usize = 60;

/// Raw output of the word → digraph → matrix → powers pipeline, for any rule
/// set.
#[derive(Clone, Debug)]
pub struct PipelineRun {
    pub word_count: usize,
    pub arc_count: usize,
    /// `minima[k - 1] = min_p (A^k)_pp` for `k = 1..=max_exponent`.
    pub minima: Vec<TropicalValue<i32>>,
    pub certificate: Result<PeriodicityCertificate<i32>>,
}

impl PipelineRun {
    pub fn minimum(&self, n: usize) -> Option<TropicalValue<i32>> {
        n.checked_sub(1).and_then(|i| self.minima.get(i)).copied()
    }
}

pub fn run_pipeline(rules: &Rules, max_exponent: usize) -> Result<PipelineRun> {
    if max_exponent < 2 {
        return Err(Error::BadExponent {
            min: 2,
            got: max_exponent,
        });
    }
    let digraph = TransferDigraph::from_rules(rules);
    let matrix = build_transfer_matrix::<i32>(&digraph);
    let pows = powers(&matrix, max_exponent)?;
    let minima = pows.iter().map(min_diagonal).collect();
    let certificate = match find_shift_periodicity_in(&pows) {
        Err(Error::Overflow) => return Err(Error::Overflow),
        other => other,
    };
    Ok(PipelineRun {
        word_count: digraph.order(),
        arc_count: digraph.arc_count(),
        minima,
        certificate,
    })
}

/// `ω2(n) = base[(n - n0) mod a] + b ⌊(n - n0) / a⌋`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub n0: usize,
    pub a: usize,
    pub b: i64,
    /// `ω2(n0), ..., ω2(n0 + a - 1)`.
    pub base: Vec<i64>,
}

impl ClosedForm {
    pub fn eval(&self, n: usize) -> i64 {
        let offset = n as i64 - self.n0 as i64;
        let a = self.a as i64;
        self.base[offset.rem_euclid(a) as usize] + self.b * offset.div_euclid(a)
    }

    /// `(slope, intercept)` when the form is a single line `slope n +
    /// intercept`.
    pub fn as_line(&self) -> Option<(i64, i64)> {
        if self.b % self.a as i64 != 0 {
            return None;
        }
        let slope = self.b / self.a as i64;
        let intercept = self.base[0] - slope * self.n0 as i64;
        self.base
            .iter()
            .enumerate()
            .all(|(r, v)| *v == slope * (self.n0 + r) as i64 + intercept)
            .then_some((slope, intercept))
    }
}

#[derive(Clone, Debug)]
pub struct OmegaTable {
    explicit: BTreeMap<usize, i64>,
    certificate: PeriodicityCertificate<i32>,
    closed_form: ClosedForm,
    exceptions: Vec<(usize, i64)>,
}

impl OmegaTable {
    /// Diagonal minima for `16 <= n <= max_explicit`.
    pub fn explicit(&self) -> &BTreeMap<usize, i64> {
        &self.explicit
    }

    pub fn certificate(&self) -> &PeriodicityCertificate<i32> {
        &self.certificate
    }

    pub fn closed_form(&self) -> &ClosedForm {
        &self.closed_form
    }

    /// `(n, ω2(n) - closed_form(n))` for each explicit `n` off the closed
    /// form.
    pub fn exceptions(&self) -> &[(usize, i64)] {
        &self.exceptions
    }

    pub fn omega2(&self, n: usize) -> Result<i64> {
        if n < MIN_N {
            return Err(Error::BadDimensions {
                m: 0,
                n,
                reason: "omega2 is only defined for n >= 16",
            });
        }
        Ok(match self.explicit.get(&n) {
            Some(v) => *v,
            None => self.closed_form.eval(n),
        })
    }

    pub fn describe(&self) -> String {
        let exceptions = if self.exceptions.is_empty() {
            String::new()
        } else {
            let list: Vec<String> = self
                .exceptions
                .iter()
                .map(|(n, d)| format!("n = {n} ({d:+})"))
                .collect();
            format!(", except {}", list.join(", "))
        };
        match self.closed_form.as_line() {
            Some((slope, 0)) => format!("omega2(n) = {slope}n for n >= {MIN_N}{exceptions}"),
            Some((slope, c)) => format!("omega2(n) = {slope}n {c:+} for n >= {MIN_N}{exceptions}"),
            None => format!(
                "omega2(n + {}) = omega2(n) + {} for n >= {}{exceptions}",
                self.closed_form.a, self.closed_form.b, self.closed_form.n0
            ),
        }
    }
}

/// Runs the whole pipeline with powers up to `max_explicit`.
pub fn build_omega_table(max_explicit: usize) -> Result<OmegaTable> {
    if max_explicit < 46 {
        return Err(Error::BadExponent {
            min: 46,
            got: max_explicit,
        });
    }
    let run = run_pipeline(Rules::standard_ref(), max_explicit)?;
    if run.word_count != SUITABLE_WORD_COUNT {
        return Err(Error::WordCount {
            found: run.word_count,
        });
    }
    let certificate = run.certificate.clone()?;
    let finite = |n: usize| -> Result<i64> {
        run.minimum(n)
            .and_then(TropicalValue::finite)
            .map(i64::from)
            .ok_or_else(|| Error::Construction(format!("no closed walk of length {n}")))
    };
    let explicit = (MIN_N..=max_explicit)
        .map(|n| Ok((n, finite(n)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let (n0, a, b) = certificate.triple();
    let closed_form = ClosedForm {
        n0,
        a,
        b: i64::from(b),
        base: (n0..n0 + a).map(finite).collect::<Result<_>>()?,
    };
    let exceptions = explicit
        .iter()
        .filter(|(&n, &v)| v != closed_form.eval(n))
        .map(|(&n, &v)| (n, v - closed_form.eval(n)))
        .collect();
    Ok(OmegaTable {
        explicit,
        certificate,
        closed_form,
        exceptions,
    })
}

/// Shared table built with [`DEFAULT_MAX_EXPLICIT`].
pub fn omega_table() -> Result<&'static OmegaTable> {
    static TABLE: OnceLock<std::result::Result<OmegaTable, Error>> = OnceLock::new();
    TABLE
        .get_or_init(|| build_omega_table(DEFAULT_MAX_EXPLICIT))
        .as_ref()
        .map_err(Clone::clone)
}

pub fn omega2(n: usize) -> Result<i64> {
    omega_table()?.omega2(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_eval() {
        let f = ClosedForm {
            n0: 45,
            a: 1,
            b: 2,
            base: vec![90],
        };
        assert_eq!(f.eval(45), 90);
        assert_eq!(f.eval(1000), 2000);
        assert_eq!(f.eval(16), 32);
        assert_eq!(f.as_line(), Some((2, 0)));
        let g = ClosedForm {
            n0: 3,
            a: 2,
            b: 3,
            base: vec![5, 6],
        };
        assert_eq!(
            (g.eval(3), g.eval(4), g.eval(5), g.eval(6), g.eval(1)),
            (5, 6, 8, 9, 2)
        );
        assert_eq!(g.as_line(), None);
    }

    #[test]
    fn table_values() {
        let t = omega_table().unwrap();
        assert_eq!(t.omega2(16).unwrap(), 33);
        assert_eq!(t.omega2(19).unwrap(), 39);
        assert_eq!(t.omega2(45).unwrap(), 90);
        assert_eq!(t.omega2(46).unwrap(), 92);
        assert_eq!(t.omega2(1000).unwrap(), 2000);
        assert!(t.omega2(15).is_err());
        assert_eq!(t.certificate().triple(), (45, 1, 2));
        assert_eq!(t.exceptions(), &[(16, 1), (19, 1)]);
        assert_eq!(
            t.describe(),
            "omega2(n) = 2n for n >= 16, except n = 16 (+1), n = 19 (+1)"
        );
    }

    #[test]
    fn explicit_agrees_with_closed_form_beyond_n0() {
        let t = omega_table().unwrap();
        let f = t.closed_form();
        for (&n, &v) in t.explicit() {
            if n >= f.n0 {
                assert_eq!(v, f.eval(n));
            }
        }
        for n in 45..200 {
            assert_eq!(t.omega2(n + 1).unwrap() - t.omega2(n).unwrap(), 2);
        }
    }

    #[test]
    fn rebuild_is_deterministic() {
        let a = build_omega_table(50).unwrap();
        let b = build_omega_table(50).unwrap();
        assert_eq!(a.explicit(), b.explicit());
        assert_eq!(a.certificate(), b.certificate());
        assert!(matches!(
            build_omega_table(45),
            Err(Error::BadExponent { .. })
        ));
    }
}
