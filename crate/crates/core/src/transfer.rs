//! The labeled digraph on suitable words and its (min,+) matrix.
//!
//! There is an arc `q -> p` whenever `p` can follow `q`. Its label
//! `ℓ = 4d - (2 nd2 + nd1)` charges the arc with the vertices that become
//! dominating, 2-dominated and 1-dominated when column `p` is appended after
//! column `q`, so that the weight of the closed walk of a border set equals
//! its wasted 2-domination.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tropical::{TropicalMatrix, TropicalScalar, TropicalValue};
use crate::words::{generate_word_table_with, Rules, Word, WordTable, WORD_LEN};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ArcStats {
    /// Zeros of `p`.
    pub d: u8,
    /// Ones of `p`, plus twos of `q` sitting next to a zero of `p`.
    pub nd2: u8,
    /// Inner-row vertices of `q` left with one neighbor, plus the vertex
    /// below an inner-row zero of `p`.
    pub nd1: u8,
    pub label: i32,
}

fn stats_unchecked(q: &Word, p: &Word) -> ArcStats {
    let last = WORD_LEN - 1;
    let d = p.zeros() as u8;
    let ones = (0..WORD_LEN).filter(|&k| p.at(k) == 1).count() as u8;
    let finished_twos = (0..WORD_LEN)
        .filter(|&k| q.at(k) == 2 && p.at(k) == 0)
        .count() as u8;
    let nd2 = ones + finished_twos;
    let nd1 = u8::from(q.at(last) == 3)
        + u8::from(q.at(last) == 2 && p.at(last) != 0)
        + u8::from(p.at(last) == 0);
    let label = 4 * i32::from(d) - (2 * i32::from(nd2) + i32::from(nd1));
    ArcStats { d, nd2, nd1, label }
}

/// Statistics of the arc `q -> p`; `p` must be able to follow `q`.
pub fn arc_stats(q: &Word, p: &Word) -> Result<ArcStats> {
    if !crate::words::can_follow(p, q) {
        return Err(Error::InvalidWalk(format!("{p} cannot follow {q}")));
    }
    Ok(stats_unchecked(q, p))
}

#[derive(Clone, Debug)]
pub struct TransferDigraph {
    table: WordTable,
    arcs: Vec<Option<ArcStats>>,
}

impl TransferDigraph {
    /// Digraph for an arbitrary rule set, without checking the word count.
    pub fn from_rules(rules: &Rules) -> Self {
        Self::from_table(WordTable::from_rules(rules), rules)
    }

    fn from_table(table: WordTable, rules: &Rules) -> Self {
        let s = table.len();
        let mut arcs = vec![None; s * s];
        for (qi, q) in table.words().iter().enumerate() {
            for (pi, p) in table.words().iter().enumerate() {
                if rules.can_follow(p, q) {
                    let st = stats_unchecked(q, p);
                    debug_assert_eq!(
                        st.label,
                        4 * st.d as i32 - 2 * st.nd2 as i32 - st.nd1 as i32
                    );
                    arcs[qi * s + pi] = Some(st);
                }
            }
        }
        TransferDigraph { table, arcs }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn word_table(&self) -> &WordTable {
        &self.table
    }

    /// Arc from word index `q` to word index `p`.
    pub fn arc(&self, q: usize, p: usize) -> Option<ArcStats> {
        self.arcs[q * self.order() + p]
    }

    pub fn arc_between(&self, q: &Word, p: &Word) -> Option<ArcStats> {
        self.arc(self.table.index_of(q)?, self.table.index_of(p)?)
    }

    /// `(q, p, stats)` for every arc, in row-major index order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, ArcStats)> + '_ {
        let s = self.order();
        self.arcs
            .iter()
            .enumerate()
            .filter_map(move |(i, a)| a.map(|st| (i / s, i % s, st)))
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.iter().filter(|a| a.is_some()).count()
    }

    /// `ℓ(Q)` of the closed walk `w1 -> w2 -> ... -> wn -> w1`.
    pub fn closed_walk_weight(&self, walk: &[Word]) -> Result<i64> {
        let mut total = 0i64;
        for (j, q) in walk.iter().enumerate() {
            let p = &walk[(j + 1) % walk.len()];
            let st = self
                .arc_between(q, p)
                .ok_or_else(|| Error::InvalidWalk(format!("no arc {q} -> {p}")))?;
            total += i64::from(st.label);
        }
        Ok(total)
    }

    /// One `q p d nd2 nd1 label` line per arc.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (q, p, st) in self.arcs() {
            let _ = writeln!(
                out,
                "{} {} {} {} {} {}",
                self.table.get(q),
                self.table.get(p),
                st.d,
                st.nd2,
                st.nd1,
                st.label
            );
        }
        out
    }
}

/// The digraph over the 111 suitable words.
pub fn build_transfer_digraph() -> Result<TransferDigraph> {
    let rules = Rules::standard_ref();
    Ok(TransferDigraph::from_table(
        generate_word_table_with(rules)?,
        rules,
    ))
}

/// `A(D)`: arc labels where arcs exist, `∞` elsewhere, indexed in word-table
/// order.
pub fn build_transfer_matrix<T: TropicalScalar>(d: &TransferDigraph) -> TropicalMatrix<T> {
    let s = d.order();
    let entries = d
        .arcs
        .iter()
        .map(|a| match a {
            Some(st) => TropicalValue::Finite(
                <T as num_traits::NumCast>::from(st.label).expect("label fits scalar"),
            ),
            None => TropicalValue::Infinity,
        })
        .collect();
    TropicalMatrix::new(s, entries).expect("square by construction")
}
