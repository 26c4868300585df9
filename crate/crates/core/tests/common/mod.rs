#![allow(dead_code)]

use rand::Rng;
use twodom::{TropicalMatrix, TropicalValue, Word};

/// Frozen minimum sizes of 2-dominating sets of `P_m □ C_n`, computed once by
/// a separate exhaustive search.
pub const FROZEN_GAMMA2: [((usize, usize), usize); 7] = [
    ((2, 3), 3),
    ((3, 4), 6),
    ((2, 4), 4),
    ((3, 3), 4),
    ((2, 5), 5),
    ((4, 4), 8),
    ((3, 5), 7),
];

/// Neighbors of a row inside the five border rows, seen from one column.
fn vertical_members(members: &[bool; 5], k: usize) -> usize {
    let above = k > 0 && members[k - 1];
    let below = k < 4 && members[k + 1];
    usize::from(above) + usize::from(below)
}

/// Whether column `p` can come right after column `q`, decided from the
/// geometry of the two columns rather than from rule tables:
///
/// * the labels of `p` must be what its members, the members of `q` and the
///   in-column neighbors produce, and
/// * every non-member of `q` must reach its quota (two neighbors in rows
///   1..=4, one in row 5) once `p` is known, since nothing to its right can
///   help it afterwards.
pub fn geometric_follow(q: &Word, p: &Word) -> bool {
    let qm: [bool; 5] = std::array::from_fn(|k| q.at(k) == 0);
    let pm: [bool; 5] = std::array::from_fn(|k| p.at(k) == 0);
    for k in 0..5 {
        if pm[k] {
            continue;
        }
        let seen = vertical_members(&pm, k) + usize::from(qm[k]);
        let expected = match seen {
            0 => 3,
            1 => 2,
            _ => 1,
        };
        if p.at(k) != expected {
            return false;
        }
    }
    for k in 0..5 {
        if qm[k] {
            continue;
        }
        let so_far = match q.at(k) {
            1 => 2,
            2 => 1,
            _ => 0,
        };
        let quota = if k < 4 { 2 } else { 1 };
        if so_far + usize::from(pm[k]) < quota {
            return false;
        }
    }
    true
}

/// Minimum weight over all walks of exactly `len` arcs from `i` to `j`, by
/// enumerating every sequence of intermediate vertices.
pub fn min_walk_weight(
    a: &TropicalMatrix<i64>,
    i: usize,
    j: usize,
    len: usize,
) -> TropicalValue<i64> {
    let s = a.order();
    let inner = len - 1;
    let mut best = TropicalValue::Infinity;
    let mut seq = vec![0usize; inner];
    let total = s.pow(inner as u32);
    for code in 0..total {
        let mut c = code;
        for slot in seq.iter_mut() {
            *slot = c % s;
            c /= s;
        }
        let mut path = Vec::with_capacity(len + 1);
        path.push(i);
        path.extend_from_slice(&seq);
        path.push(j);
        let mut weight = 0i64;
        let mut ok = true;
        for w in path.windows(2) {
            match a.get(w[0], w[1]) {
                TropicalValue::Finite(x) => weight += x,
                TropicalValue::Infinity => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && TropicalValue::Finite(weight) < best {
            best = TropicalValue::Finite(weight);
        }
    }
    best
}

/// Random labeled digraph on `1..=6` vertices with labels in `-5..=5`.
pub fn random_digraph<R: Rng>(rng: &mut R) -> TropicalMatrix<i64> {
    let s = rng.gen_range(1..=6);
    let density = rng.gen_range(0.2..=1.0);
    let entries = (0..s * s)
        .map(|_| {
            if rng.gen_bool(density) {
                TropicalValue::Finite(rng.gen_range(-5..=5))
            } else {
                TropicalValue::Infinity
            }
        })
        .collect();
    TropicalMatrix::new(s, entries).unwrap()
}
