//! Exact ground truth for small instances, independent of the word and
//! transfer-matrix machinery.
//!
//! * [`brute_gamma2`] enumerates every subset of a tiny cylinder.
//! * [`gamma2_oracle`] runs a dynamic program row by row along the path. Each
//!   row is a full cycle, so there is no wraparound to close.
//! * [`min_wasted_border`] runs a cyclic dynamic program over pairs of
//!   consecutive five-row border columns.

use crate::cylinder::{is_2dominating, CylinderSpec, Vertex, VertexSet, BORDER_ROWS};
use crate::error::{Error, Result};

pub const BRUTE_MAX_ORDER: usize = 24;
pub const DP_MAX_N: usize = 12;
pub const DP_MAX_M: usize = 64;
pub const BORDER_DP_MAX_N: usize = 64;
pub const OMEGA_ORACLE_RANGE: (usize, usize) = (16, 24);

/// `γ2` and a minimum 2-dominating set, over all `2^(mn)` subsets.
pub fn brute_gamma2_witness(m: usize, n: usize) -> Result<(usize, VertexSet)> {
    let spec = CylinderSpec::new(m, n)?;
    let order = spec.order();
    if order > BRUTE_MAX_ORDER {
        return Err(Error::TooLarge(format!(
            "brute force needs mn <= {BRUTE_MAX_ORDER}, got {order}"
        )));
    }
    let nb: Vec<u32> = spec
        .vertices()
        .map(|v| {
            let up = (v.row > 1).then(|| Vertex::new(v.row - 1, v.col));
            let down = (v.row < m).then(|| Vertex::new(v.row + 1, v.col));
            let left = Some(Vertex::new(v.row, spec.prev_col(v.col)));
            let right = Some(Vertex::new(v.row, spec.next_col(v.col)));
            [up, down, left, right]
                .into_iter()
                .flatten()
                .fold(0u32, |acc, u| acc | 1 << ((u.row - 1) * n + u.col - 1))
        })
        .collect();
    let mut best = (order + 1, 0u32);
    for s in 0..(1u32 << order) {
        let size = s.count_ones() as usize;
        if size >= best.0 {
            continue;
        }
        let ok = (0..order).all(|i| s >> i & 1 == 1 || (nb[i] & s).count_ones() >= 2);
        if ok {
            best = (size, s);
        }
    }
    let witness = VertexSet::from_vertices(
        spec,
        (0..order)
            .filter(|i| best.1 >> i & 1 == 1)
            .map(|i| Vertex::new(i / n + 1, i % n + 1)),
    )?;
    Ok((best.0, witness))
}

pub fn brute_gamma2(m: usize, n: usize) -> Result<usize> {
    brute_gamma2_witness(m, n).map(|(v, _)| v)
}

/// Row state: the row's members `x` and the non-members `need` that still
/// require a neighbor from the next row. A non-member left with no neighbor
/// before the next row can never be 2-dominated, so no other demand occurs.
struct RowDp {
    n: usize,
    full: u32,
    /// Base-3 digit sum of a mask: `pow3[x]` has digit 1 at each set bit.
    pow3: Vec<u32>,
}

impl RowDp {
    fn new(n: usize) -> Self {
        let full = (1u32 << n) - 1;
        let mut pow3 = vec![0u32; 1 << n];
        for mask in 1..=full as usize {
            let low = mask.trailing_zeros();
            pow3[mask] = pow3[mask & (mask - 1)] + 3u32.pow(low);
        }
        RowDp { n, full, pow3 }
    }

    fn states(&self) -> usize {
        3usize.pow(self.n as u32)
    }

    fn encode(&self, x: u32, need: u32) -> usize {
        (2 * self.pow3[x as usize] + self.pow3[need as usize]) as usize
    }

    fn rotl(&self, x: u32) -> u32 {
        ((x << 1) | (x >> (self.n - 1))) & self.full
    }

    fn rotr(&self, x: u32) -> u32 {
        ((x >> 1) | (x << (self.n - 1))) & self.full
    }

    /// Next-row demand after choosing `next` below a row with members `x`,
    /// or `None` if some non-member of `next` has no neighbor so far.
    fn step(&self, x: u32, need: u32, next: u32) -> Option<u32> {
        if need & !next != 0 {
            return None;
        }
        let (a, b, c) = (x, self.rotl(next), self.rotr(next));
        let outside = !next & self.full;
        let any = a | b | c;
        if outside & !any != 0 {
            return None;
        }
        let two = (a & b) | (a & c) | (b & c);
        Some(outside & !two)
    }

    /// Visits every `(x, need)` pair with `need ⊆ ¬x`.
    fn for_each_state(&self, mut f: impl FnMut(u32, u32)) {
        for x in 0..=self.full {
            let free = !x & self.full;
            let mut need = free;
            loop {
                f(x, need);
                if need == 0 {
                    break;
                }
                need = (need - 1) & free;
            }
        }
    }
}

const UNREACHED: u16 = u16::MAX;

fn check_dp_range(m: usize, n: usize) -> Result<CylinderSpec> {
    let spec = CylinderSpec::new(m, n)?;
    if n > DP_MAX_N || m > DP_MAX_M {
        return Err(Error::TooLarge(format!(
            "row dynamic program needs n <= {DP_MAX_N} and m <= {DP_MAX_M}, got m={m}, n={n}"
        )));
    }
    Ok(spec)
}

/// Runs the row DP, returning the cost layer after each row.
fn row_layers(m: usize, n: usize, keep: bool) -> Vec<Vec<u16>> {
    let dp = RowDp::new(n);
    let mut layers = Vec::new();
    // Row 0 is a virtual empty row with no demand.
    let mut cur = vec![UNREACHED; dp.states()];
    cur[0] = 0;
    for _ in 0..m {
        let mut next = vec![UNREACHED; dp.states()];
        dp.for_each_state(|x, need| {
            let cost = cur[dp.encode(x, need)];
            if cost == UNREACHED {
                return;
            }
            let free = !need & dp.full;
            let mut extra = free;
            loop {
                let row = need | extra;
                if let Some(next_need) = dp.step(x, need, row) {
                    let idx = dp.encode(row, next_need);
                    let c = cost + row.count_ones() as u16;
                    if c < next[idx] {
                        next[idx] = c;
                    }
                }
                if extra == 0 {
                    break;
                }
                extra = (extra - 1) & free;
            }
        });
        if keep {
            layers.push(std::mem::replace(&mut cur, next));
        } else {
            cur = next;
        }
    }
    layers.push(cur);
    layers
}

/// Exact `γ2(P_m □ C_n)` by dynamic programming over rows.
pub fn gamma2_oracle(m: usize, n: usize) -> Result<usize> {
    check_dp_range(m, n)?;
    let dp = RowDp::new(n);
    let last = row_layers(m, n, false).pop().expect("one layer");
    (0..=dp.full)
        .map(|x| last[dp.encode(x, 0)])
        .min()
        .filter(|&c| c != UNREACHED)
        .map(usize::from)
        .ok_or_else(|| Error::Construction(format!("no 2-dominating set found for m={m}, n={n}")))
}

/// [`gamma2_oracle`] together with a minimum 2-dominating set.
pub fn gamma2_oracle_witness(m: usize, n: usize) -> Result<(usize, VertexSet)> {
    let spec = check_dp_range(m, n)?;
    let dp = RowDp::new(n);
    // layers[r] holds costs after r rows, r = 0..=m.
    let layers = row_layers(m, n, true);
    let (mut x, mut need) = (0..=dp.full)
        .map(|x| (x, 0u32))
        .min_by_key(|&(x, need)| layers[m][dp.encode(x, need)])
        .expect("at least one row state");
    let value = layers[m][dp.encode(x, need)];
    if value == UNREACHED {
        return Err(Error::Construction(format!(
            "no 2-dominating set found for m={m}, n={n}"
        )));
    }
    let mut rows = vec![0u32; m];
    for r in (1..=m).rev() {
        rows[r - 1] = x;
        let target = layers[r][dp.encode(x, need)] - x.count_ones() as u16;
        let mut found = None;
        dp.for_each_state(|px, pneed| {
            if found.is_none()
                && layers[r - 1][dp.encode(px, pneed)] == target
                && dp.step(px, pneed, x) == Some(need)
            {
                found = Some((px, pneed));
            }
        });
        (x, need) = found.ok_or_else(|| Error::Construction("row DP backtrack failed".into()))?;
    }
    let witness = VertexSet::from_vertices(
        spec,
        rows.iter().enumerate().flat_map(|(r, &mask)| {
            (0..n)
                .filter(move |c| mask >> c & 1 == 1)
                .map(move |c| Vertex::new(r + 1, c + 1))
        }),
    )?;
    if !is_2dominating(&witness) || witness.len() != usize::from(value) {
        return Err(Error::Construction(
            "row DP witness failed the checker".into(),
        ));
    }
    Ok((usize::from(value), witness))
}

const BORDER_MASKS: usize = 1 << BORDER_ROWS;
const INFEASIBLE: i32 = i32::MAX;

/// Contribution of the middle column `c` of the window `(l, c, r)` to
/// `4|R| - 2|A^R| - |B^R|`, counting the five border rows and the row just
/// below them. Bit `k` of a mask is row `k + 1`.
fn column_contribution(l: usize, c: usize, r: usize) -> i32 {
    let bit = |mask: usize, k: usize| mask >> k & 1;
    let mut total = 0;
    for k in 0..BORDER_ROWS {
        if bit(c, k) == 1 {
            total += 4;
            continue;
        }
        let above = if k > 0 { bit(c, k - 1) } else { 0 };
        let below = if k + 1 < BORDER_ROWS {
            bit(c, k + 1)
        } else {
            0
        };
        let count = above + below + bit(l, k) + bit(r, k);
        let required = if k + 1 < BORDER_ROWS { 2 } else { 1 };
        if count < required {
            return INFEASIBLE;
        }
        total -= if count >= 2 { 2 } else { 1 };
    }
    // The vertex below the border only sees the border's last row.
    if bit(c, BORDER_ROWS - 1) == 1 {
        total -= 1;
    }
    total
}

struct BorderDp {
    contrib: Vec<i32>,
}

impl BorderDp {
    fn new() -> Self {
        let mut contrib = vec![INFEASIBLE; BORDER_MASKS.pow(3)];
        for l in 0..BORDER_MASKS {
            for c in 0..BORDER_MASKS {
                for r in 0..BORDER_MASKS {
                    contrib[(l * BORDER_MASKS + c) * BORDER_MASKS + r] =
                        column_contribution(l, c, r);
                }
            }
        }
        BorderDp { contrib }
    }

    fn contrib(&self, l: usize, c: usize, r: usize) -> i32 {
        self.contrib[(l * BORDER_MASKS + c) * BORDER_MASKS + r]
    }

    /// One step of the linear DP: state `(prev, cur)` moves to `(cur, next)`,
    /// charging column `cur`.
    fn advance(&self, layer: &[i32]) -> Vec<i32> {
        let mut next = vec![INFEASIBLE; BORDER_MASKS * BORDER_MASKS];
        for prev in 0..BORDER_MASKS {
            for cur in 0..BORDER_MASKS {
                let cost = layer[prev * BORDER_MASKS + cur];
                if cost == INFEASIBLE {
                    continue;
                }
                for nx in 0..BORDER_MASKS {
                    let w = self.contrib(prev, cur, nx);
                    if w == INFEASIBLE {
                        continue;
                    }
                    let slot = &mut next[cur * BORDER_MASKS + nx];
                    *slot = (*slot).min(cost + w);
                }
            }
        }
        next
    }

    fn close(&self, layer: &[i32], first: usize, second: usize) -> i32 {
        let mut best = INFEASIBLE;
        for prev in 0..BORDER_MASKS {
            for last in 0..BORDER_MASKS {
                let cost = layer[prev * BORDER_MASKS + last];
                if cost == INFEASIBLE {
                    continue;
                }
                let a = self.contrib(prev, last, first);
                let b = self.contrib(last, first, second);
                if a != INFEASIBLE && b != INFEASIBLE {
                    best = best.min(cost + a + b);
                }
            }
        }
        best
    }

    /// `result[k]` is the minimum over border sets on a cycle of length
    /// `k + 3`, for `k + 3 <= max_n`.
    fn minima_up_to(&self, max_n: usize) -> Vec<i32> {
        let mut best = vec![INFEASIBLE; max_n - 2];
        for first in 0..BORDER_MASKS {
            for second in 0..BORDER_MASKS {
                let mut layer = vec![INFEASIBLE; BORDER_MASKS * BORDER_MASKS];
                layer[first * BORDER_MASKS + second] = 0;
                // After the k-th advance the last chosen column is k + 2.
                for slot in best.iter_mut() {
                    layer = self.advance(&layer);
                    *slot = (*slot).min(self.close(&layer, first, second));
                }
            }
        }
        best
    }

    fn witness(&self, n: usize) -> Option<(i32, Vec<usize>)> {
        let target = *self.minima_up_to(n).last()?;
        if target == INFEASIBLE {
            return None;
        }
        for first in 0..BORDER_MASKS {
            for second in 0..BORDER_MASKS {
                let mut layers = vec![vec![INFEASIBLE; BORDER_MASKS * BORDER_MASKS]];
                layers[0][first * BORDER_MASKS + second] = 0;
                for _ in 2..n {
                    let next = self.advance(layers.last().expect("nonempty"));
                    layers.push(next);
                }
                if self.close(layers.last().expect("nonempty"), first, second) != target {
                    continue;
                }
                return Some((target, self.backtrack(&layers, first, second, target)));
            }
        }
        None
    }

    fn backtrack(
        &self,
        layers: &[Vec<i32>],
        first: usize,
        second: usize,
        target: i32,
    ) -> Vec<usize> {
        let n = layers.len() + 1;
        let mut cols = vec![0usize; n];
        cols[0] = first;
        cols[1] = second;
        let last_layer = layers.last().expect("nonempty");
        let (mut prev, mut cur) = (0..BORDER_MASKS * BORDER_MASKS)
            .map(|s| (s / BORDER_MASKS, s % BORDER_MASKS))
            .find(|&(p, l)| {
                let cost = last_layer[p * BORDER_MASKS + l];
                let a = self.contrib(p, l, first);
                let b = self.contrib(l, first, second);
                cost != INFEASIBLE && a != INFEASIBLE && b != INFEASIBLE && cost + a + b == target
            })
            .expect("closing state exists");
        for k in (1..layers.len()).rev() {
            // layers[k] ends at column k + 2 (1-based), i.e. cols[k + 1].
            cols[k + 1] = cur;
            let cost = layers[k][prev * BORDER_MASKS + cur];
            let before = (0..BORDER_MASKS)
                .find(|&pp| {
                    let c0 = layers[k - 1][pp * BORDER_MASKS + prev];
                    let w = self.contrib(pp, prev, cur);
                    c0 != INFEASIBLE && w != INFEASIBLE && c0 + w == cost
                })
                .expect("predecessor exists");
            cur = prev;
            prev = before;
        }
        cols
    }
}

fn check_border_range(n: usize) -> Result<()> {
    if !(3..=BORDER_DP_MAX_N).contains(&n) {
        return Err(Error::TooLarge(format!(
            "border DP needs 3 <= n <= {BORDER_DP_MAX_N}, got {n}"
        )));
    }
    Ok(())
}

/// Minimum wasted 2-domination over border sets on every cycle length
/// `3..=max_n`, as `(n, value)` pairs; `None` where no border set exists.
pub fn min_wasted_border_upto(max_n: usize) -> Result<Vec<(usize, Option<i64>)>> {
    check_border_range(max_n)?;
    let minima = BorderDp::new().minima_up_to(max_n);
    Ok(minima
        .into_iter()
        .enumerate()
        .map(|(k, v)| (k + 3, (v != INFEASIBLE).then_some(i64::from(v))))
        .collect())
}

pub fn min_wasted_border(n: usize) -> Result<Option<i64>> {
    Ok(min_wasted_border_upto(n)?.pop().and_then(|(_, v)| v))
}

/// A border set in rows `1..=5` of `P_m □ C_n` attaining
/// [`min_wasted_border`].
pub fn min_wasted_border_witness(m: usize, n: usize) -> Result<(i64, VertexSet)> {
    check_border_range(n)?;
    let spec = CylinderSpec::new(m, n)?;
    let (value, cols) = BorderDp::new()
        .witness(n)
        .ok_or_else(|| Error::Construction(format!("no border set on a cycle of length {n}")))?;
    let set = VertexSet::from_vertices(
        spec,
        cols.iter().enumerate().flat_map(|(j, &mask)| {
            (0..BORDER_ROWS)
                .filter(move |k| mask >> k & 1 == 1)
                .map(move |k| Vertex::new(k + 1, j + 1))
        }),
    )?;
    Ok((i64::from(value), set))
}

fn check_omega_range(n: usize) -> Result<()> {
    let (lo, hi) = OMEGA_ORACLE_RANGE;
    if !(lo..=hi).contains(&n) {
        return Err(Error::TooLarge(format!(
            "omega2 oracle covers {lo} <= n <= {hi}, got {n}"
        )));
    }
    Ok(())
}

/// Exact `ω2(n)` for `16 <= n <= 24` straight from the border conditions.
pub fn omega2_oracle(n: usize) -> Result<i64> {
    check_omega_range(n)?;
    min_wasted_border(n)?.ok_or_else(|| Error::Construction(format!("no border set for n = {n}")))
}

/// [`omega2_oracle`] for every `n` in `lo..=hi`.
pub fn omega2_oracle_range(lo: usize, hi: usize) -> Result<Vec<(usize, i64)>> {
    check_omega_range(lo)?;
    check_omega_range(hi)?;
    min_wasted_border_upto(hi)?
        .into_iter()
        .filter(|(n, _)| (lo..=hi).contains(n))
        .map(|(n, v)| {
            v.map(|v| (n, v))
                .ok_or_else(|| Error::Construction(format!("no border set for n = {n}")))
        })
        .collect()
}
