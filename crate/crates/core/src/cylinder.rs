//! The cylinder `P_m □ C_n`: vertices `v_ij` with rows `1..=m` along the path
//! and columns `1..=n` around the cycle (column `n` is adjacent to column 1).
//!
//! Besides plain 2-domination checks this module knows about the two five-row
//! borders (`V1` = rows 1..=5, `V3` = rows m-4..=m) and the centre `V2` in
//! between, which only make sense for `m >= 13`.

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rows in each border.
pub const BORDER_ROWS: usize = 5;

/// Smallest `m` for which the borders and the centre are disjoint and the
/// centre is nonempty.
pub const MIN_BORDER_M: usize = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CylinderSpec {
    pub m: usize,
    pub n: usize,
}

/// A vertex `v_ij`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub row: usize,
    pub col: usize,
}

impl Vertex {
    pub const fn new(row: usize, col: usize) -> Self {
        Vertex { row, col }
    }
}

impl From<(usize, usize)> for Vertex {
    fn from((row, col): (usize, usize)) -> Self {
        Vertex { row, col }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Top,
    Centre,
    Bottom,
}

impl CylinderSpec {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::BadDimensions {
                m,
                n,
                reason: "m must be at least 2",
            });
        }
        if n < 3 {
            return Err(Error::BadDimensions {
                m,
                n,
                reason: "n must be at least 3",
            });
        }
        Ok(CylinderSpec { m, n })
    }

    pub fn order(&self) -> usize {
        self.m * self.n
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (1..=self.m).contains(&v.row) && (1..=self.n).contains(&v.col)
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                row: v.row,
                col: v.col,
                m: self.m,
                n: self.n,
            })
        }
    }

    pub(crate) fn index(&self, v: Vertex) -> usize {
        (v.row - 1) * self.n + (v.col - 1)
    }

    pub(crate) fn vertex(&self, idx: usize) -> Vertex {
        Vertex::new(idx / self.n + 1, idx % self.n + 1)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.order()).map(|i| self.vertex(i))
    }

    /// Column `col - 1`, wrapping 1 to `n`.
    pub fn prev_col(&self, col: usize) -> usize {
        if col == 1 {
            self.n
        } else {
            col - 1
        }
    }

    pub fn next_col(&self, col: usize) -> usize {
        if col == self.n {
            1
        } else {
            col + 1
        }
    }

    /// Which of `V1`, `V2`, `V3` a row belongs to. Only meaningful for
    /// `m >= 13`.
    pub fn region(&self, row: usize) -> Region {
        if row <= BORDER_ROWS {
            Region::Top
        } else if row + BORDER_ROWS > self.m {
            Region::Bottom
        } else {
            Region::Centre
        }
    }

    fn neighbor_indices(&self, idx: usize) -> impl Iterator<Item = usize> {
        let v = self.vertex(idx);
        let spec = *self;
        let horizontal = [
            Some(Vertex::new(v.row, spec.prev_col(v.col))),
            Some(Vertex::new(v.row, spec.next_col(v.col))),
        ];
        let vertical = [
            (v.row > 1).then(|| Vertex::new(v.row - 1, v.col)),
            (v.row < spec.m).then(|| Vertex::new(v.row + 1, v.col)),
        ];
        horizontal
            .into_iter()
            .chain(vertical)
            .flatten()
            .map(move |u| spec.index(u))
    }
}

/// Neighbors of `v`: the two cycle neighbors in its row, then the path
/// neighbors in its column.
pub fn neighbors(spec: CylinderSpec, v: Vertex) -> Result<Vec<Vertex>> {
    spec.check(v)?;
    Ok(spec
        .neighbor_indices(spec.index(v))
        .map(|i| spec.vertex(i))
        .collect())
}

/// A subset of the vertices of one cylinder.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    spec: CylinderSpec,
    members: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct VertexSetFile {
    m: usize,
    n: usize,
    members: Vec<[usize; 2]>,
}

impl VertexSet {
    pub fn empty(spec: CylinderSpec) -> Self {
        VertexSet {
            spec,
            members: vec![false; spec.order()],
        }
    }

    pub fn full(spec: CylinderSpec) -> Self {
        VertexSet {
            spec,
            members: vec![true; spec.order()],
        }
    }

    pub fn from_vertices<I, V>(spec: CylinderSpec, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vertex>,
    {
        let mut set = Self::empty(spec);
        for v in vertices {
            set.insert(v.into())?;
        }
        Ok(set)
    }

    /// All vertices in rows `lo..=hi`.
    pub fn rows(spec: CylinderSpec, lo: usize, hi: usize) -> Self {
        let mut set = Self::empty(spec);
        for (i, slot) in set.members.iter_mut().enumerate() {
            let row = i / spec.n + 1;
            *slot = (lo..=hi).contains(&row);
        }
        set
    }

    pub fn spec(&self) -> CylinderSpec {
        self.spec
    }

    pub fn insert(&mut self, v: Vertex) -> Result<bool> {
        self.spec.check(v)?;
        let slot = &mut self.members[self.spec.index(v)];
        let fresh = !*slot;
        *slot = true;
        Ok(fresh)
    }

    pub fn remove(&mut self, v: Vertex) -> Result<bool> {
        self.spec.check(v)?;
        let slot = &mut self.members[self.spec.index(v)];
        let was = *slot;
        *slot = false;
        Ok(was)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.spec.contains(v) && self.members[self.spec.index(v)]
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&b| b)
    }

    /// Members in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| self.spec.vertex(i))
    }

    pub fn to_btree(&self) -> BTreeSet<Vertex> {
        self.iter().collect()
    }

    /// Members restricted to rows `lo..=hi`.
    pub fn restrict_rows(&self, lo: usize, hi: usize) -> Self {
        let mut out = self.clone();
        for (i, slot) in out.members.iter_mut().enumerate() {
            let row = i / self.spec.n + 1;
            if !(lo..=hi).contains(&row) {
                *slot = false;
            }
        }
        out
    }

    /// Mirror image under `i -> m + 1 - i`.
    pub fn reflect(&self) -> Self {
        let spec = self.spec;
        let mut out = Self::empty(spec);
        for v in self.iter() {
            out.members[spec.index(Vertex::new(spec.m + 1 - v.row, v.col))] = true;
        }
        out
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        if self.spec != other.spec {
            return Err(Error::Parse(
                "vertex sets live on different cylinders".into(),
            ));
        }
        let members = self
            .members
            .iter()
            .zip(&other.members)
            .map(|(a, b)| *a || *b)
            .collect();
        Ok(VertexSet {
            spec: self.spec,
            members,
        })
    }

    /// Number of neighbors of `v` that are members.
    pub fn neighbor_count(&self, v: Vertex) -> usize {
        self.count_at(self.spec.index(v))
    }

    pub(crate) fn count_at(&self, idx: usize) -> usize {
        self.spec
            .neighbor_indices(idx)
            .filter(|&u| self.members[u])
            .count()
    }

    pub fn to_json(&self) -> String {
        let file = VertexSetFile {
            m: self.spec.m,
            n: self.spec.n,
            members: self.iter().map(|v| [v.row, v.col]).collect(),
        };
        serde_json::to_string(&file).expect("vertex set serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: VertexSetFile = serde_json::from_str(text)?;
        let spec = CylinderSpec::new(file.m, file.n)?;
        Self::from_vertices(spec, file.members.iter().map(|&[r, c]| Vertex::new(r, c)))
    }

    /// One line per row, `#` for members and `.` otherwise.
    pub fn render_grid(&self) -> String {
        let mut out = String::with_capacity(self.spec.order() + self.spec.m);
        for row in 1..=self.spec.m {
            for col in 1..=self.spec.n {
                out.push(if self.contains(Vertex::new(row, col)) {
                    '#'
                } else {
                    '.'
                });
            }
            out.push('\n');
        }
        out
    }

    pub fn from_grid(text: &str) -> Result<Self> {
        let rows: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect();
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.chars().count());
        let spec = CylinderSpec::new(m, n)?;
        let mut set = Self::empty(spec);
        for (i, line) in rows.iter().enumerate() {
            if line.chars().count() != n {
                return Err(Error::Parse(format!(
                    "grid row {} has the wrong width",
                    i + 1
                )));
            }
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '#' => {
                        set.insert(Vertex::new(i + 1, j + 1))?;
                    }
                    '.' => {}
                    other => return Err(Error::Parse(format!("unexpected grid cell {other:?}"))),
                }
            }
        }
        Ok(set)
    }
}

/// Every vertex outside `s` has at least two neighbors in `s`.
pub fn is_2dominating(s: &VertexSet) -> bool {
    (0..s.spec.order()).all(|i| s.members[i] || s.count_at(i) >= 2)
}

/// Non-members with fewer than two neighbors in `s`.
pub fn deficient_vertices(s: &VertexSet) -> Vec<Vertex> {
    (0..s.spec.order())
        .filter(|&i| !s.members[i] && s.count_at(i) < 2)
        .map(|i| s.spec.vertex(i))
        .collect()
}

/// Sizes of `S_k`, `A^S_k` and `B^S_k` for `k = 1, 2, 3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub m: usize,
    pub n: usize,
    pub s_size: usize,
    pub s: [usize; 3],
    pub a: [usize; 3],
    pub b: [usize; 3],
}

impl PartitionReport {
    /// `(2(mn - |S|), 2 Σ|A_k| + Σ|B_k|)`.
    pub fn coverage_sides(&self) -> (i64, i64) {
        let outside = (self.m * self.n - self.s_size) as i64;
        let a: usize = self.a.iter().sum();
        let b: usize = self.b.iter().sum();
        (2 * outside, 2 * a as i64 + b as i64)
    }

    pub fn coverage_holds(&self) -> bool {
        let (l, r) = self.coverage_sides();
        l <= r
    }

    /// `(4|S| - 2(mn - |S|), Σ_{k=1,3} 4|S_k| - (2|A_k| + |B_k|))`.
    pub fn waste_sides(&self) -> (i64, i64) {
        let outside = (self.m * self.n - self.s_size) as i64;
        let lhs = 4 * self.s_size as i64 - 2 * outside;
        let rhs = [0usize, 2]
            .iter()
            .map(|&k| 4 * self.s[k] as i64 - (2 * self.a[k] as i64 + self.b[k] as i64))
            .sum();
        (lhs, rhs)
    }

    pub fn waste_holds(&self) -> bool {
        let (l, r) = self.waste_sides();
        l >= r
    }
}

pub fn region_partition(s: &VertexSet) -> Result<PartitionReport> {
    let spec = s.spec;
    if spec.m < MIN_BORDER_M {
        return Err(Error::BordersOverlap { m: spec.m });
    }
    let region_index = |idx: usize| match spec.region(spec.vertex(idx).row) {
        Region::Top => 0,
        Region::Centre => 1,
        Region::Bottom => 2,
    };
    let mut report = PartitionReport {
        m: spec.m,
        n: spec.n,
        s_size: 0,
        s: [0; 3],
        a: [0; 3],
        b: [0; 3],
    };
    for idx in 0..spec.order() {
        if s.members[idx] {
            report.s_size += 1;
            report.s[region_index(idx)] += 1;
            continue;
        }
        let mut per_region = [0usize; 3];
        for u in spec.neighbor_indices(idx) {
            if s.members[u] {
                per_region[region_index(u)] += 1;
            }
        }
        for (k, count) in per_region.iter().enumerate() {
            match count {
                0 => {}
                1 => report.b[k] += 1,
                _ => {
                    debug_assert_eq!(region_index(idx), k, "A^S_k must lie in V_k");
                    report.a[k] += 1;
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Border {
    /// `V1`, rows 1..=5.
    Top,
    /// `V3`, rows m-4..=m.
    Bottom,
}

/// Which border `r` lies in, if any. The empty set reports `Top`.
pub fn border_side(r: &VertexSet) -> Option<Border> {
    let m = r.spec.m;
    if m < MIN_BORDER_M {
        return None;
    }
    if r.iter().all(|v| v.row <= BORDER_ROWS) {
        Some(Border::Top)
    } else if r.iter().all(|v| v.row + BORDER_ROWS > m) {
        Some(Border::Bottom)
    } else {
        None
    }
}

fn top_border_failure(r: &VertexSet) -> Option<String> {
    let spec = r.spec;
    for row in 1..=BORDER_ROWS {
        let need = if row < BORDER_ROWS { 2 } else { 1 };
        for col in 1..=spec.n {
            let v = Vertex::new(row, col);
            if !r.contains(v) && r.neighbor_count(v) < need {
                return Some(format!(
                    "vertex ({row}, {col}) has {} of the {need} required neighbors",
                    r.neighbor_count(v)
                ));
            }
        }
    }
    None
}

fn border_failure(r: &VertexSet) -> Option<String> {
    if r.spec.m < MIN_BORDER_M {
        return Some(format!("m = {} is below {MIN_BORDER_M}", r.spec.m));
    }
    match border_side(r) {
        None => Some("set is contained in neither border".into()),
        Some(Border::Top) => top_border_failure(r),
        Some(Border::Bottom) => top_border_failure(&r.reflect()),
    }
}

/// `r` lies in one border, its four outer rows are 2-dominated by `r` and its
/// inner row is 1-dominated. Always false for `m < 13`.
pub fn is_border_2dominating(r: &VertexSet) -> bool {
    border_failure(r).is_none()
}

/// `ω2(R) = 4|R| - (2|A^R| + |B^R|)` together with its ingredients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WastedReport {
    pub r_size: usize,
    pub a_size: usize,
    pub b_size: usize,
    pub omega: i64,
}

/// `A^R` and `B^R` are taken over the whole cylinder, so the row just inside
/// the border contributes to `B^R`.
pub fn wasted_2domination(r: &VertexSet) -> Result<WastedReport> {
    if let Some(why) = border_failure(r) {
        return Err(Error::NotBorderDominating(why));
    }
    let mut report = WastedReport {
        r_size: 0,
        a_size: 0,
        b_size: 0,
        omega: 0,
    };
    for idx in 0..r.spec.order() {
        if r.members[idx] {
            report.r_size += 1;
        } else {
            match r.count_at(idx) {
                0 => {}
                1 => report.b_size += 1,
                _ => report.a_size += 1,
            }
        }
    }
    report.omega = 4 * report.r_size as i64 - (2 * report.a_size as i64 + report.b_size as i64);
    Ok(report)
}

/// Uniform random subset at density 1/2, then every deficient vertex (in
/// row-major order) is added to the set.
pub fn random_2dominating<R: Rng + ?Sized>(spec: CylinderSpec, rng: &mut R) -> VertexSet {
    let mut s = VertexSet {
        spec,
        members: (0..spec.order()).map(|_| rng.gen_bool(0.5)).collect(),
    };
    for idx in 0..spec.order() {
        if !s.members[idx] && s.count_at(idx) < 2 {
            s.members[idx] = true;
        }
    }
    debug_assert!(is_2dominating(&s));
    s
}

/// Random subset of `V1` at the given density, repaired into a
/// border-2-dominating set. Requires `m >= 13`.
pub fn random_border_set<R: Rng + ?Sized>(
    spec: CylinderSpec,
    density: f64,
    rng: &mut R,
) -> VertexSet {
    let mut r = VertexSet::empty(spec);
    for row in 1..=BORDER_ROWS {
        for col in 1..=spec.n {
            if rng.gen_bool(density) {
                r.members[spec.index(Vertex::new(row, col))] = true;
            }
        }
    }
    for row in 1..=BORDER_ROWS {
        let need = if row < BORDER_ROWS { 2 } else { 1 };
        for col in 1..=spec.n {
            let idx = spec.index(Vertex::new(row, col));
            if !r.members[idx] && r.count_at(idx) < need {
                r.members[idx] = true;
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn set_of(vs: &[(usize, usize)]) -> BTreeSet<Vertex> {
        vs.iter().map(|&v| v.into()).collect()
    }

    fn nbrs(m: usize, n: usize, v: (usize, usize)) -> BTreeSet<Vertex> {
        neighbors(CylinderSpec::new(m, n).unwrap(), v.into())
            .unwrap()
            .into_iter()
            .collect()
    }

    #[test]
    fn adjacency_examples() {
        assert_eq!(nbrs(3, 4, (1, 1)), set_of(&[(1, 2), (1, 4), (2, 1)]));
        assert_eq!(
            nbrs(3, 4, (2, 2)),
            set_of(&[(2, 1), (2, 3), (1, 2), (3, 2)])
        );
        assert_eq!(
            nbrs(13, 16, (13, 16)),
            set_of(&[(13, 15), (13, 1), (12, 16)])
        );
    }

    #[test]
    fn adjacency_errors() {
        let spec = CylinderSpec::new(3, 4).unwrap();
        assert!(neighbors(spec, Vertex::new(0, 1)).is_err());
        assert!(neighbors(spec, Vertex::new(4, 1)).is_err());
        assert!(neighbors(spec, Vertex::new(1, 5)).is_err());
        assert!(CylinderSpec::new(1, 5).is_err());
        assert!(CylinderSpec::new(4, 2).is_err());
    }

    #[test]
    fn degrees_and_symmetry() {
        for (m, n) in [(2, 3), (3, 4), (13, 16), (7, 5)] {
            let spec = CylinderSpec::new(m, n).unwrap();
            for v in spec.vertices() {
                let ns = neighbors(spec, v).unwrap();
                let expected = 4 - usize::from(v.row == 1) - usize::from(v.row == m);
                assert_eq!(ns.len(), expected);
                assert_eq!(ns.iter().collect::<BTreeSet<_>>().len(), expected);
                for u in ns {
                    assert!(neighbors(spec, u).unwrap().contains(&v));
                }
            }
        }
    }

    #[test]
    fn trivial_domination() {
        let spec = CylinderSpec::new(4, 5).unwrap();
        assert!(is_2dominating(&VertexSet::full(spec)));
        assert!(!is_2dominating(&VertexSet::empty(spec)));
    }

    #[test]
    fn regions_partition_vertices() {
        for m in 13..20 {
            let spec = CylinderSpec::new(m, 16).unwrap();
            let mut counts = [0usize; 3];
            for v in spec.vertices() {
                counts[match spec.region(v.row) {
                    Region::Top => 0,
                    Region::Centre => 1,
                    Region::Bottom => 2,
                }] += 1;
            }
            assert_eq!(counts, [80, (m - 10) * 16, 80]);
        }
    }

    #[test]
    fn partition_of_full_set() {
        let spec = CylinderSpec::new(13, 16).unwrap();
        let r = region_partition(&VertexSet::full(spec)).unwrap();
        assert_eq!(r.s, [80, 48, 80]);
        assert_eq!(r.a, [0; 3]);
        assert_eq!(r.b, [0; 3]);
        let small = CylinderSpec::new(12, 16).unwrap();
        assert_eq!(
            region_partition(&VertexSet::full(small)),
            Err(Error::BordersOverlap { m: 12 })
        );
    }

    #[test]
    fn border_checks() {
        let spec = CylinderSpec::new(13, 16).unwrap();
        let v1 = VertexSet::rows(spec, 1, 5);
        assert!(is_border_2dominating(&v1));
        assert!(is_border_2dominating(&VertexSet::rows(spec, 9, 13)));
        assert!(!is_border_2dominating(&VertexSet::empty(spec)));
        // spans both borders
        assert!(!is_border_2dominating(&VertexSet::full(spec)));
        // (1, 2) is left with a single neighbor in R
        let mut r = v1.clone();
        for col in 1..=3 {
            r.remove(Vertex::new(1, col)).unwrap();
        }
        assert!(!is_border_2dominating(&r));
        let tiny = CylinderSpec::new(12, 16).unwrap();
        assert!(!is_border_2dominating(&VertexSet::rows(tiny, 1, 5)));
    }

    #[test]
    fn wasted_of_whole_border() {
        // Frozen from direct counting: every row-6 vertex has exactly one
        // neighbor (row 5) in R = V1, nothing else lies outside R with a
        // neighbor inside. |R| = 80, |A| = 0, |B| = 16.
        let spec = CylinderSpec::new(13, 16).unwrap();
        let w = wasted_2domination(&VertexSet::rows(spec, 1, 5)).unwrap();
        assert_eq!((w.r_size, w.a_size, w.b_size, w.omega), (80, 0, 16, 304));
        let bottom = wasted_2domination(&VertexSet::rows(spec, 9, 13)).unwrap();
        assert_eq!(bottom, w);
        assert!(matches!(
            wasted_2domination(&VertexSet::empty(spec)),
            Err(Error::NotBorderDominating(_))
        ));
    }

    #[test]
    fn random_sets_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let spec = CylinderSpec::new(13, 17).unwrap();
            let s = random_2dominating(spec, &mut rng);
            assert!(is_2dominating(&s));
            let report = region_partition(&s).unwrap();
            assert!(report.coverage_holds());
            assert!(report.waste_holds());
            let top = s.restrict_rows(1, 5);
            let bottom = s.restrict_rows(9, 13);
            assert!(is_border_2dominating(&top));
            assert!(is_border_2dominating(&bottom));
            // B^R lives in rows 5 and 6 only
            for r in [top.clone(), bottom.reflect()] {
                for v in spec.vertices() {
                    if !r.contains(v) && r.neighbor_count(v) == 1 {
                        assert!(v.row == 5 || v.row == 6, "{v:?}");
                    }
                }
            }
            let b = random_border_set(spec, 0.3, &mut rng);
            assert!(is_border_2dominating(&b));
        }
    }

    #[test]
    fn json_and_grid_roundtrip() {
        let spec = CylinderSpec::new(3, 4).unwrap();
        let s = VertexSet::from_vertices(spec, [(1, 1), (2, 3), (3, 4)]).unwrap();
        let json = s.to_json();
        assert_eq!(json, r#"{"m":3,"n":4,"members":[[1,1],[2,3],[3,4]]}"#);
        assert_eq!(VertexSet::from_json(&json).unwrap(), s);
        let grid = s.render_grid();
        assert_eq!(grid, "#...\n..#.\n...#\n");
        assert_eq!(VertexSet::from_grid(&grid).unwrap(), s);
        assert!(VertexSet::from_json(r#"{"m":3,"n":4,"members":[[4,1]]}"#).is_err());
    }
}
