//! Column words for the top border.
//!
//! Each column of a border-2-dominating set `R ⊆ V1` is written as a word
//! `p1 p2 p3 p4 p5` over `{0, 1, 2, 3}`, one letter per row:
//!
//! * `0` the vertex is in `R`;
//! * `1` it has at least two neighbors in `R` within its own column or the
//!   previous one;
//! * `2` exactly one such neighbor;
//! * `3` none.
//!
//! Which words can occur and which word may come next are governed by the
//! rule tables in [`Rules`]. They are kept as plain data so that every
//! clause can be audited, and corrupted on purpose in negative-control runs.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::cylinder::{
    border_side, is_border_2dominating, Border, CylinderSpec, Vertex, VertexSet, BORDER_ROWS,
};
use crate::error::{Error, Result};

pub const WORD_LEN: usize = BORDER_ROWS;
pub const ALPHABET: u8 = 4;
pub const SUITABLE_WORD_COUNT: usize = 111;

/// Five letters over `{0, 1, 2, 3}`, top row first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word([u8; WORD_LEN]);

impl Word {
    pub fn new(letters: [u8; WORD_LEN]) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l >= ALPHABET) {
            return Err(Error::BadLetter(
                char::from_digit(bad as u32, 36).unwrap_or('?'),
            ));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> [u8; WORD_LEN] {
        self.0
    }

    /// Letter in row `k`, 0-based.
    pub fn at(&self, k: usize) -> u8 {
        self.0[k]
    }

    pub fn zeros(&self) -> usize {
        self.0.iter().filter(|&&l| l == 0).count()
    }

    /// All `4^5` words in lexicographic order.
    pub fn all() -> impl Iterator<Item = Word> {
        (0..(ALPHABET as usize).pow(WORD_LEN as u32)).map(|mut code| {
            let mut letters = [0u8; WORD_LEN];
            for slot in letters.iter_mut().rev() {
                *slot = (code % ALPHABET as usize) as u8;
                code /= ALPHABET as usize;
            }
            Word(letters)
        })
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.trim().chars().collect();
        if chars.len() != WORD_LEN {
            return Err(Error::BadWordLength(s.to_string()));
        }
        let mut letters = [0u8; WORD_LEN];
        for (slot, ch) in letters.iter_mut().zip(chars) {
            *slot = match ch.to_digit(10) {
                Some(d) if d < ALPHABET as u32 => d as u8,
                _ => return Err(Error::BadLetter(ch)),
            };
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Forbidden factors of suitable words. Letter `3` is additionally banned
/// from rows 1..=4 (not a factor rule, so not listed here).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuitabilityRules {
    /// Forbidden values of `p1 p2`.
    pub leading: Vec<[u8; 2]>,
    /// Forbidden values of `p4 p5`.
    pub trailing: Vec<[u8; 2]>,
    /// Forbidden values of `p_k p_{k+1} p_{k+2}` for `k = 1, 2, 3`.
    pub triples: Vec<[u8; 3]>,
}

/// Constraint on a letter adjacent (in the same column) to the one being
/// placed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Adjacent {
    Any,
    Zero,
    NonZero,
}

impl Adjacent {
    fn admits(self, letter: Option<u8>) -> bool {
        match self {
            Adjacent::Any => true,
            Adjacent::Zero => letter == Some(0),
            Adjacent::NonZero => letter.is_some_and(|l| l != 0),
        }
    }
}

/// One admissible choice for `p_k`, given the letter `q_k` it follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FollowOption {
    pub letter: u8,
    /// Constraint on `p_{k-1}`.
    pub above: Adjacent,
    /// Constraint on `p_{k+1}`.
    pub below: Adjacent,
}

const fn opt(letter: u8, above: Adjacent, below: Adjacent) -> FollowOption {
    FollowOption {
        letter,
        above,
        below,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RowClass {
    First,
    Middle,
    Last,
}

impl RowClass {
    pub fn of(k: usize) -> Self {
        match k {
            0 => RowClass::First,
            k if k == WORD_LEN - 1 => RowClass::Last,
            _ => RowClass::Middle,
        }
    }
}

/// For each row class and each letter `q_k`, the admissible `p_k`. A letter
/// with no options cannot be followed at all in that row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FollowRules {
    pub first: [Vec<FollowOption>; 4],
    pub middle: [Vec<FollowOption>; 4],
    pub last: [Vec<FollowOption>; 4],
}

impl FollowRules {
    pub fn options(&self, class: RowClass, q: u8) -> &[FollowOption] {
        let table = match class {
            RowClass::First => &self.first,
            RowClass::Middle => &self.middle,
            RowClass::Last => &self.last,
        };
        &table[q as usize]
    }

    fn options_mut(&mut self, class: RowClass, q: u8) -> &mut Vec<FollowOption> {
        let table = match class {
            RowClass::First => &mut self.first,
            RowClass::Middle => &mut self.middle,
            RowClass::Last => &mut self.last,
        };
        &mut table[q as usize]
    }
}

/// Identifies one entry of the rule tables, for negative-control runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleEntry {
    Leading([u8; 2]),
    Trailing([u8; 2]),
    Triple([u8; 3]),
    Follow {
        class: RowClass,
        q: u8,
        option: FollowOption,
    },
}

impl fmt::Display for RuleEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let adj = |a: Adjacent| match a {
            Adjacent::Any => "*",
            Adjacent::Zero => "0",
            Adjacent::NonZero => "!0",
        };
        match self {
            RuleEntry::Leading([a, b]) => write!(f, "p1p2 != {a}{b}"),
            RuleEntry::Trailing([a, b]) => write!(f, "p4p5 != {a}{b}"),
            RuleEntry::Triple([a, b, c]) => write!(f, "triple != {a}{b}{c}"),
            RuleEntry::Follow { class, q, option } => write!(
                f,
                "{class:?}: q={q} -> p={} (above {}, below {})",
                option.letter,
                adj(option.above),
                adj(option.below)
            ),
        }
    }
}

/// The complete rule set: which words are suitable and which may follow
/// which.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rules {
    pub suitability: SuitabilityRules,
    pub follow: FollowRules,
}

impl Rules {
    pub fn standard() -> Self {
        use Adjacent::{Any, NonZero, Zero};
        Rules {
            suitability: SuitabilityRules {
                leading: vec![[1, 2], [1, 1]],
                trailing: vec![[2, 1], [1, 1], [0, 3]],
                triples: vec![
                    [0, 2, 0],
                    [1, 1, 1],
                    [1, 1, 2],
                    [2, 1, 1],
                    [2, 1, 2],
                    [1, 1, 3],
                    [2, 1, 3],
                ],
            },
            follow: FollowRules {
                first: [
                    vec![opt(0, Any, Any), opt(1, Any, Any), opt(2, Any, NonZero)],
                    vec![opt(0, Any, Any), opt(2, Any, Zero)],
                    vec![opt(0, Any, Any)],
                    vec![],
                ],
                middle: [
                    vec![opt(0, Any, Any), opt(1, Any, Any), opt(2, NonZero, NonZero)],
                    vec![
                        opt(0, Any, Any),
                        opt(1, Zero, Zero),
                        opt(2, Zero, Any),
                        opt(2, Any, Zero),
                    ],
                    vec![opt(0, Any, Any)],
                    vec![],
                ],
                last: [
                    vec![opt(0, Any, Any), opt(1, Any, Any), opt(2, NonZero, Any)],
                    vec![opt(0, Any, Any), opt(2, Zero, Any), opt(3, Any, Any)],
                    vec![opt(0, Any, Any), opt(2, Zero, Any), opt(3, Any, Any)],
                    vec![opt(0, Any, Any)],
                ],
            },
        }
    }

    /// Shared instance of [`Rules::standard`].
    pub fn standard_ref() -> &'static Rules {
        static RULES: OnceLock<Rules> = OnceLock::new();
        RULES.get_or_init(Rules::standard)
    }

    pub fn is_suitable(&self, w: &Word) -> bool {
        let p = w.0;
        let s = &self.suitability;
        p[..WORD_LEN - 1].iter().all(|&l| l != 3)
            && !s.leading.contains(&[p[0], p[1]])
            && !s.trailing.contains(&[p[WORD_LEN - 2], p[WORD_LEN - 1]])
            && p.windows(3)
                .all(|t| !s.triples.contains(&[t[0], t[1], t[2]]))
    }

    /// Whether `p` may be the column right after `q`.
    pub fn can_follow(&self, p: &Word, q: &Word) -> bool {
        (0..WORD_LEN).all(|k| {
            let above = k.checked_sub(1).map(|i| p.0[i]);
            let below = p.0.get(k + 1).copied();
            self.follow
                .options(RowClass::of(k), q.0[k])
                .iter()
                .any(|o| o.letter == p.0[k] && o.above.admits(above) && o.below.admits(below))
        })
    }

    /// Every entry of the tables, in a fixed order.
    pub fn entries(&self) -> Vec<RuleEntry> {
        let s = &self.suitability;
        let mut out: Vec<RuleEntry> = s.leading.iter().map(|&f| RuleEntry::Leading(f)).collect();
        out.extend(s.trailing.iter().map(|&f| RuleEntry::Trailing(f)));
        out.extend(s.triples.iter().map(|&f| RuleEntry::Triple(f)));
        for class in [RowClass::First, RowClass::Middle, RowClass::Last] {
            for q in 0..ALPHABET {
                for &option in self.follow.options(class, q) {
                    out.push(RuleEntry::Follow { class, q, option });
                }
            }
        }
        out
    }

    /// Forbidden-factor entries only.
    pub fn forbidden_factors(&self) -> Vec<RuleEntry> {
        self.entries()
            .into_iter()
            .filter(|e| !matches!(e, RuleEntry::Follow { .. }))
            .collect()
    }

    /// A copy with one entry deleted.
    pub fn without(&self, entry: RuleEntry) -> Rules {
        let mut out = self.clone();
        let s = &mut out.suitability;
        match entry {
            RuleEntry::Leading(f) => s.leading.retain(|x| *x != f),
            RuleEntry::Trailing(f) => s.trailing.retain(|x| *x != f),
            RuleEntry::Triple(f) => s.triples.retain(|x| *x != f),
            RuleEntry::Follow { class, q, option } => {
                out.follow.options_mut(class, q).retain(|o| *o != option)
            }
        }
        out
    }
}

pub fn is_suitable(w: &Word) -> bool {
    Rules::standard_ref().is_suitable(w)
}

pub fn can_follow(p: &Word, q: &Word) -> bool {
    Rules::standard_ref().can_follow(p, q)
}

/// Suitable words in lexicographic order, with a reverse index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordTable {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl WordTable {
    /// All words accepted by `rules`, without checking the count.
    pub fn from_rules(rules: &Rules) -> Self {
        let words: Vec<Word> = Word::all().filter(|w| rules.is_suitable(w)).collect();
        let index = words.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        WordTable { words, index }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn get(&self, i: usize) -> Word {
        self.words[i]
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }
}

/// The table of suitable words; fails unless exactly 111 survive.
pub fn generate_word_table() -> Result<WordTable> {
    generate_word_table_with(Rules::standard_ref())
}

pub fn generate_word_table_with(rules: &Rules) -> Result<WordTable> {
    let table = WordTable::from_rules(rules);
    if table.len() != SUITABLE_WORD_COUNT {
        return Err(Error::WordCount { found: table.len() });
    }
    Ok(table)
}

/// The column words of a border-2-dominating set `r ⊆ V1`, column 1 first.
pub fn label_border_set(r: &VertexSet) -> Result<Vec<Word>> {
    if !is_border_2dominating(r) {
        return Err(Error::NotBorderDominating("cannot label".into()));
    }
    if border_side(r) != Some(Border::Top) {
        return Err(Error::NotBorderDominating(
            "labels are defined for the top border; reflect first".into(),
        ));
    }
    let spec = r.spec();
    let inside = |row: usize, col: usize| {
        (1..=BORDER_ROWS).contains(&row) && r.contains(Vertex::new(row, col))
    };
    let words = (1..=spec.n)
        .map(|col| {
            let prev = spec.prev_col(col);
            let mut letters = [0u8; WORD_LEN];
            for (k, slot) in letters.iter_mut().enumerate() {
                let row = k + 1;
                if inside(row, col) {
                    continue;
                }
                let count = usize::from(inside(row, prev))
                    + usize::from(row > 1 && inside(row - 1, col))
                    + usize::from(inside(row + 1, col));
                *slot = match count {
                    0 => 3,
                    1 => 2,
                    _ => 1,
                };
            }
            Word(letters)
        })
        .collect();
    Ok(words)
}

/// The set `R ⊆ V1` of `P_m □ C_n` (n = number of words) whose columns are
/// the given closed walk.
pub fn path_to_border_set(words: &[Word], m: usize) -> Result<VertexSet> {
    let spec = CylinderSpec::new(m, words.len())?;
    if m < crate::cylinder::MIN_BORDER_M {
        return Err(Error::BordersOverlap { m });
    }
    if let Some(w) = words.iter().find(|w| !is_suitable(w)) {
        return Err(Error::NotSuitable(w.to_string()));
    }
    for (j, q) in words.iter().enumerate() {
        let p = &words[(j + 1) % words.len()];
        if !can_follow(p, q) {
            return Err(Error::InvalidWalk(format!(
                "{p} cannot follow {q} (columns {} -> {})",
                j + 1,
                (j + 1) % words.len() + 1
            )));
        }
    }
    let mut r = VertexSet::empty(spec);
    for (j, w) in words.iter().enumerate() {
        for k in 0..WORD_LEN {
            if w.0[k] == 0 {
                r.insert(Vertex::new(k + 1, j + 1))?;
            }
        }
    }
    Ok(r)
}
