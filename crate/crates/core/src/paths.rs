//! Piecewise-linear paths in weight space and the Littelmann raising and
//! lowering root operators, all over exact rationals.
//!
//! A path is stored as its breakpoint sequence `b_0 = 0, b_1, …, b_m`,
//! quotiented by reparametrization: consecutive duplicate breakpoints are
//! dropped and consecutive segments pointing in the same direction are
//! merged. Two paths are equal iff their canonical breakpoint sequences are
//! equal. All "time" computations (the cut parameters of the root operators)
//! are per-segment exact rational linear solves.

use std::fmt;

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rat::{self, Rat};
use crate::rootsys::{CartanMatrix, Weight};

/// A canonical piecewise-linear path starting at the origin.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    breakpoints: Vec<Weight>,
}

/// A path or the formal null symbol absorbed by the root operators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MaybePath {
    Null,
    Path(Path),
}

impl Path {
    /// Canonicalizes an arbitrary breakpoint list. The first breakpoint must
    /// be the origin.
    pub fn from_breakpoints(points: Vec<Weight>) -> Path {
        assert!(!points.is_empty(), "a path needs at least one breakpoint");
        assert!(points[0].is_zero(), "paths start at the origin");
        Path {
            breakpoints: canonicalize(points),
        }
    }

    /// The straight-line path to `lam`; the trivial path when `lam = 0`.
    pub fn straight(lam: &Weight) -> Path {
        let rank = lam.rank();
        Path::from_breakpoints(vec![Weight::zero(rank), lam.clone()])
    }

    pub fn trivial(rank: usize) -> Path {
        Path {
            breakpoints: vec![Weight::zero(rank)],
        }
    }

    pub fn breakpoints(&self) -> &[Weight] {
        &self.breakpoints
    }

    pub fn rank(&self) -> usize {
        self.breakpoints[0].rank()
    }

    /// The endpoint `π(1)`.
    pub fn weight(&self) -> Weight {
        self.breakpoints.last().unwrap().clone()
    }

    /// Concatenation `self ⋆ other`: the second path translated to start at
    /// the endpoint of the first.
    pub fn concat(&self, other: &Path) -> Path {
        let end = self.weight();
        let mut pts = self.breakpoints.clone();
        pts.extend(other.breakpoints.iter().skip(1).map(|b| &end + b));
        Path {
            breakpoints: canonicalize(pts),
        }
    }

    /// Breakpoint-wise simple reflection `s_j`.
    pub fn reflected(&self, cm: &CartanMatrix, j: usize) -> Path {
        Path {
            breakpoints: canonicalize(self.breakpoints.iter().map(|b| cm.reflect(b, j)).collect()),
        }
    }

    /// The values `⟨b_k, α_j∨⟩` at the breakpoints; the height function is
    /// their piecewise-linear interpolation.
    pub fn height_profile(&self, cm: &CartanMatrix, j: usize) -> Vec<Rat> {
        self.breakpoints.iter().map(|b| cm.pairing(b, j)).collect()
    }

    /// `Q`, the smallest integer attained by the height function. The image
    /// is an interval containing 0, so `Q = ceil(min) <= 0`.
    pub fn q_min(&self, cm: &CartanMatrix, j: usize) -> i64 {
        let min = self.height_profile(cm, j).into_iter().min().unwrap();
        rat::ceil(&min)
    }

    /// `P`, the number of times the lowering operator applies before null:
    /// the integral part of `h(1) − Q`.
    pub fn lower_threshold(&self, cm: &CartanMatrix, j: usize) -> i64 {
        let end = cm.pairing(&self.weight(), j);
        rat::floor(&(end - rat::rat(self.q_min(cm, j))))
    }
}

impl MaybePath {
    pub fn path(&self) -> Option<&Path> {
        match self {
            MaybePath::Null => None,
            MaybePath::Path(p) => Some(p),
        }
    }

    pub fn is_null(&self) -> bool {
        matches!(self, MaybePath::Null)
    }

    pub fn unwrap(self) -> Path {
        match self {
            MaybePath::Null => panic!("unexpected null path"),
            MaybePath::Path(p) => p,
        }
    }

    /// Concatenation with null acting as the identity on either side. The
    /// paper's convention only fixes `π ⋆ O := π`; the left case is the
    /// symmetric extension.
    pub fn concat(&self, other: &MaybePath) -> MaybePath {
        match (self, other) {
            (MaybePath::Null, q) => q.clone(),
            (p, MaybePath::Null) => p.clone(),
            (MaybePath::Path(p), MaybePath::Path(q)) => MaybePath::Path(p.concat(q)),
        }
    }

    /// The raising operator `e_{α_j}`.
    pub fn raise(&self, cm: &CartanMatrix, j: usize) -> MaybePath {
        let p = match self {
            MaybePath::Null => return MaybePath::Null,
            MaybePath::Path(p) => p,
        };
        let level = p.q_min(cm, j);
        if level == 0 {
            return MaybePath::Null;
        }
        let q_pos = first_at(p, cm, j, rat::rat(level));
        let y_pos = last_before(p, cm, j, rat::rat(level + 1), &q_pos);
        let (head, middle, tail) = split3(p, &y_pos, &q_pos);
        rejoin(cm, j, head, middle, tail)
    }

    /// The lowering operator `f_{α_j}`.
    pub fn lower(&self, cm: &CartanMatrix, j: usize) -> MaybePath {
        let p = match self {
            MaybePath::Null => return MaybePath::Null,
            MaybePath::Path(p) => p,
        };
        if p.lower_threshold(cm, j) == 0 {
            return MaybePath::Null;
        }
        let level = p.q_min(cm, j);
        let p_pos = last_at(p, cm, j, rat::rat(level));
        let x_pos = first_after(p, cm, j, rat::rat(level + 1), &p_pos);
        let (head, middle, tail) = split3(p, &p_pos, &x_pos);
        rejoin(cm, j, head, middle, tail)
    }

    /// `x`-fold lowering, short-circuiting on null.
    pub fn lower_power(&self, cm: &CartanMatrix, j: usize, x: u64) -> MaybePath {
        let mut cur = self.clone();
        for _ in 0..x {
            if cur.is_null() {
                return MaybePath::Null;
            }
            cur = cur.lower(cm, j);
        }
        cur
    }

    /// `x`-fold raising, short-circuiting on null.
    pub fn raise_power(&self, cm: &CartanMatrix, j: usize, x: u64) -> MaybePath {
        let mut cur = self.clone();
        for _ in 0..x {
            if cur.is_null() {
                return MaybePath::Null;
            }
            cur = cur.raise(cm, j);
        }
        cur
    }
}

impl From<Path> for MaybePath {
    fn from(p: Path) -> Self {
        MaybePath::Path(p)
    }
}

/// A point on the path: the index of the segment it lies on and its exact
/// location in weight space.
struct Pos {
    seg: usize,
    point: Weight,
}

/// The point of `[wa, wb]` at height `level`, if any. `take_last` picks the
/// segment end on a constant-height segment; crossings are unique otherwise.
fn segment_hit(
    wa: &Weight,
    ha: &Rat,
    wb: &Weight,
    hb: &Rat,
    level: &Rat,
    take_last: bool,
) -> Option<Weight> {
    if ha == hb {
        if ha == level {
            Some(if take_last { wb.clone() } else { wa.clone() })
        } else {
            None
        }
    } else {
        let t = (level - ha) / (hb - ha);
        if t >= Rat::zero() && t <= rat::rat(1) {
            Some(wa + &(wb - wa).scale(&t))
        } else {
            None
        }
    }
}

/// Earliest point of the whole path at the given height. Callers only invoke
/// this when the height is attained.
fn first_at(p: &Path, cm: &CartanMatrix, j: usize, level: Rat) -> Pos {
    let h = p.height_profile(cm, j);
    let b = p.breakpoints();
    for seg in 0..b.len() - 1 {
        if let Some(point) = segment_hit(&b[seg], &h[seg], &b[seg + 1], &h[seg + 1], &level, false)
        {
            return Pos { seg, point };
        }
    }
    unreachable!("height level {} not attained", level)
}

/// Latest point of the whole path at the given height.
fn last_at(p: &Path, cm: &CartanMatrix, j: usize, level: Rat) -> Pos {
    let h = p.height_profile(cm, j);
    let b = p.breakpoints();
    for seg in (0..b.len() - 1).rev() {
        if let Some(point) = segment_hit(&b[seg], &h[seg], &b[seg + 1], &h[seg + 1], &level, true) {
            return Pos { seg, point };
        }
    }
    unreachable!("height level {} not attained", level)
}

/// Latest point at the given height at or before `limit` (scans backwards
/// from `limit`, starting with the partial segment ending at it).
fn last_before(p: &Path, cm: &CartanMatrix, j: usize, level: Rat, limit: &Pos) -> Pos {
    let h = p.height_profile(cm, j);
    let b = p.breakpoints();
    let h_limit = cm.pairing(&limit.point, j);
    if let Some(point) = segment_hit(
        &b[limit.seg],
        &h[limit.seg],
        &limit.point,
        &h_limit,
        &level,
        true,
    ) {
        return Pos {
            seg: limit.seg,
            point,
        };
    }
    for seg in (0..limit.seg).rev() {
        if let Some(point) = segment_hit(&b[seg], &h[seg], &b[seg + 1], &h[seg + 1], &level, true) {
            return Pos { seg, point };
        }
    }
    unreachable!("height level {} not attained before cut", level)
}

/// Earliest point at the given height at or after `limit`.
fn first_after(p: &Path, cm: &CartanMatrix, j: usize, level: Rat, limit: &Pos) -> Pos {
    let h = p.height_profile(cm, j);
    let b = p.breakpoints();
    let h_limit = cm.pairing(&limit.point, j);
    if let Some(point) = segment_hit(
        &limit.point,
        &h_limit,
        &b[limit.seg + 1],
        &h[limit.seg + 1],
        &level,
        false,
    ) {
        return Pos {
            seg: limit.seg,
            point,
        };
    }
    for seg in limit.seg + 1..b.len() - 1 {
        if let Some(point) = segment_hit(&b[seg], &h[seg], &b[seg + 1], &h[seg + 1], &level, false)
        {
            return Pos { seg, point };
        }
    }
    unreachable!("height level {} not attained after cut", level)
}

/// Cuts the path at two ordered points into three raw breakpoint lists, each
/// translated to start at the origin.
fn split3(p: &Path, a: &Pos, b: &Pos) -> (Vec<Weight>, Vec<Weight>, Vec<Weight>) {
    debug_assert!(a.seg < b.seg || (a.seg == b.seg && a.point != b.point));
    let bp = p.breakpoints();
    let mut head: Vec<Weight> = bp[..=a.seg].to_vec();
    head.push(a.point.clone());

    let mut middle: Vec<Weight> = vec![a.point.clone()];
    middle.extend(bp[a.seg + 1..=b.seg].iter().cloned());
    middle.push(b.point.clone());
    let middle = middle.iter().map(|w| w - &a.point).collect();

    let mut tail: Vec<Weight> = vec![b.point.clone()];
    tail.extend(bp[b.seg + 1..].iter().cloned());
    let tail = tail.iter().map(|w| w - &b.point).collect();

    (head, middle, tail)
}

/// Reassembles `head ⋆ s_j(middle) ⋆ tail` into a canonical path.
fn rejoin(
    cm: &CartanMatrix,
    j: usize,
    head: Vec<Weight>,
    middle: Vec<Weight>,
    tail: Vec<Weight>,
) -> MaybePath {
    let head = Path::from_breakpoints(head);
    let middle = Path::from_breakpoints(middle).reflected(cm, j);
    let tail = Path::from_breakpoints(tail);
    MaybePath::Path(head.concat(&middle).concat(&tail))
}

/// Drops consecutive duplicates and merges consecutive segments whose
/// directions are positive multiples of one another.
fn canonicalize(points: Vec<Weight>) -> Vec<Weight> {
    let mut out: Vec<Weight> = Vec::with_capacity(points.len());
    for p in points {
        if let Some(last) = out.last() {
            if *last == p {
                continue;
            }
        }
        while out.len() >= 2 {
            let d1 = &out[out.len() - 1] - &out[out.len() - 2];
            let d2 = &p - &out[out.len() - 1];
            if same_direction(&d1, &d2) {
                out.pop();
            } else {
                break;
            }
        }
        out.push(p);
    }
    out
}

/// True iff `d2 = c · d1` for some `c > 0` (both assumed nonzero).
fn same_direction(d1: &Weight, d2: &Weight) -> bool {
    let i = match d1.coords().iter().position(|c| !c.is_zero()) {
        Some(i) => i,
        None => return false,
    };
    let c = d2.coords()[i] / d1.coords()[i];
    c > Rat::zero() && *d2 == d1.scale(&c)
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.breakpoints.iter().enumerate() {
            if k > 0 {
                write!(f, " -> ")?;
            }
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl Serialize for Path {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            breakpoints: Vec<Vec<String>>,
        }
        let breakpoints = self
            .breakpoints
            .iter()
            .map(|b| b.coords().iter().map(rat::to_string).collect())
            .collect();
        Repr { breakpoints }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Path {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            breakpoints: Vec<Vec<String>>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.breakpoints.is_empty() {
            return Err(D::Error::custom("a path needs at least one breakpoint"));
        }
        let mut pts = Vec::with_capacity(repr.breakpoints.len());
        for row in &repr.breakpoints {
            let coords = row
                .iter()
                .map(|s| rat::parse(s).map_err(D::Error::custom))
                .collect::<Result<Vec<Rat>, _>>()?;
            pts.push(Weight::new(coords));
        }
        if !pts[0].is_zero() {
            return Err(D::Error::custom("paths start at the origin"));
        }
        Ok(Path::from_breakpoints(pts))
    }
}

impl Serialize for MaybePath {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            MaybePath::Null => serializer.serialize_none(),
            MaybePath::Path(p) => p.serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for MaybePath {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let opt = Option::<Path>::deserialize(deserializer)?;
        Ok(match opt {
            None => MaybePath::Null,
            Some(p) => MaybePath::Path(p),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use crate::rootsys::CartanMatrix;

    fn a2() -> CartanMatrix {
        CartanMatrix::builtin("A2").unwrap()
    }

    fn w(coords: &[i64]) -> Weight {
        Weight::from_ints(coords)
    }

    fn straight_m(p: &MaybePath) -> MaybePath {
        p.clone()
    }

    #[test]
    fn straight_paths() {
        let pi = Path::straight(&w(&[1, 0]));
        assert_eq!(pi.breakpoints(), &[w(&[0, 0]), w(&[1, 0])]);
        assert_eq!(pi.weight(), w(&[1, 0]));
        let trivial = Path::straight(&w(&[0, 0]));
        assert_eq!(trivial.breakpoints(), &[w(&[0, 0])]);
    }

    #[test]
    fn concat_null_and_merge() {
        let pi = MaybePath::Path(Path::straight(&w(&[1, 0])));
        assert_eq!(pi.concat(&MaybePath::Null), pi);
        assert_eq!(MaybePath::Null.concat(&pi), pi);
        let twice = pi.concat(&pi).unwrap();
        assert_eq!(twice.breakpoints(), &[w(&[0, 0]), w(&[2, 0])]);
        let trivial = MaybePath::Path(Path::trivial(2));
        assert_eq!(trivial.concat(&pi), pi);
        assert_eq!(pi.concat(&trivial), pi);
    }

    #[test]
    fn concat_adds_weights() {
        let cm = a2();
        let p1 = Path::straight(&w(&[1, 0]));
        let p2 = Path::straight(&cm.reflect(&w(&[0, 1]), 2));
        let cat = p1.concat(&p2);
        assert_eq!(cat.weight(), &p1.weight() + &p2.weight());
    }

    #[test]
    fn reflect_path_examples() {
        let cm = a2();
        let pi1 = Path::straight(&w(&[1, 0]));
        assert_eq!(pi1.reflected(&cm, 1), Path::straight(&w(&[-1, 1])));
        assert_eq!(pi1.reflected(&cm, 1).reflected(&cm, 1), pi1);
        let pi2 = Path::straight(&w(&[0, 1]));
        assert_eq!(pi2.reflected(&cm, 1), pi2);
        assert_eq!(pi2.reflected(&cm, 1).weight(), cm.reflect(&pi2.weight(), 1));
    }

    #[test]
    fn height_profiles() {
        let cm = a2();
        assert_eq!(
            Path::straight(&w(&[2, 0])).height_profile(&cm, 1),
            vec![rat(0), rat(2)]
        );
        assert_eq!(
            Path::straight(&w(&[0, 1])).height_profile(&cm, 1),
            vec![rat(0), rat(0)]
        );
        let p = Path::from_breakpoints(vec![w(&[0, 0]), w(&[-1, 1]), w(&[1, 1])]);
        assert_eq!(p.height_profile(&cm, 1), vec![rat(0), rat(-1), rat(1)]);
    }

    #[test]
    fn q_min_examples() {
        let cm = a2();
        assert_eq!(Path::straight(&w(&[3, 0])).q_min(&cm, 1), 0);
        let dipping = Path::from_breakpoints(vec![w(&[0, 0]), w(&[-1, 1]), w(&[1, 1])]);
        assert_eq!(dipping.q_min(&cm, 1), -1);
        // Profile minimum -1/2: smallest attained integer is 0.
        let half = Path::from_breakpoints(vec![
            w(&[0, 0]),
            Weight::new(vec![Rat::new(-1, 2), rat(0)]),
            w(&[1, 0]),
        ]);
        assert_eq!(half.q_min(&cm, 1), 0);
    }

    #[test]
    fn lower_of_straight_dominant() {
        // f^x(π^{mϖ_β}) = π^{x(ϖ_β−β)} ⋆ π^{(m−x)ϖ_β}
        let cm = a2();
        let m = 4i64;
        for beta in 1..=2usize {
            let omega = Weight::fundamental(2, beta, 1);
            let lowered_dir = &omega - &cm.simple_root(beta);
            let start = MaybePath::Path(Path::straight(&omega.scale(&rat(m))));
            for x in 0..=m {
                let got = start.lower_power(&cm, beta, x as u64);
                let expect = MaybePath::Path(
                    Path::straight(&lowered_dir.scale(&rat(x)))
                        .concat(&Path::straight(&omega.scale(&rat(m - x)))),
                );
                assert_eq!(got, expect, "beta={} x={}", beta, x);
            }
            assert!(start.lower_power(&cm, beta, (m + 1) as u64).is_null());
        }
    }

    #[test]
    fn raise_of_straight_dominant_is_null() {
        let cm = a2();
        for m in 0..4 {
            let p = MaybePath::Path(Path::straight(&Weight::fundamental(2, 1, m)));
            assert!(p.raise(&cm, 1).is_null());
        }
    }

    #[test]
    fn raise_lower_partial_inverses() {
        let cm = a2();
        let p = MaybePath::Path(Path::straight(&w(&[2, 0])).concat(&Path::straight(&w(&[0, 1]))));
        for j in 1..=2 {
            let down = p.lower(&cm, j);
            if !down.is_null() {
                assert_eq!(down.raise(&cm, j), p);
            }
            let up = p.raise(&cm, j);
            if !up.is_null() {
                assert_eq!(up.lower(&cm, j), p);
            }
        }
    }

    #[test]
    fn weight_shifts_by_simple_root() {
        let cm = a2();
        let base =
            MaybePath::Path(Path::straight(&w(&[1, 1])).concat(&Path::straight(&w(&[1, 0]))));
        for j in 1..=2usize {
            let alpha = cm.simple_root(j);
            let down = base.lower(&cm, j);
            if let Some(p) = down.path() {
                assert_eq!(p.weight(), &base.path().unwrap().weight() - &alpha);
            }
        }
    }

    #[test]
    fn nullity_thresholds() {
        let cm = a2();
        let p = MaybePath::Path(Path::straight(&w(&[2, 0])));
        // P = 2: the third lowering goes null.
        assert!(!p.lower_power(&cm, 1, 2).is_null());
        assert!(p.lower_power(&cm, 1, 3).is_null());
        assert_eq!(
            p.lower_power(&cm, 1, 2).unwrap().weight(),
            &w(&[2, 0]) - &cm.simple_root(1).scale(&rat(2))
        );
        // After lowering twice, Q = -2: raising three times goes null.
        let bottom = p.lower_power(&cm, 1, 2);
        assert_eq!(bottom.path().unwrap().q_min(&cm, 1), -2);
        assert_eq!(bottom.raise_power(&cm, 1, 2), p);
        assert!(bottom.raise_power(&cm, 1, 3).is_null());
    }

    #[test]
    fn lower_power_identity() {
        let cm = a2();
        let p = MaybePath::Path(Path::straight(&w(&[2, 0])));
        assert_eq!(p.lower_power(&cm, 1, 0), straight_m(&p));
        assert!(MaybePath::Null.lower_power(&cm, 1, 0).is_null());
    }

    #[test]
    fn canonicalization_idempotent() {
        let pts = vec![w(&[0, 0]), w(&[1, 0]), w(&[1, 0]), w(&[2, 0]), w(&[1, 1])];
        let p = Path::from_breakpoints(pts);
        assert_eq!(p.breakpoints(), &[w(&[0, 0]), w(&[2, 0]), w(&[1, 1])]);
        let again = Path::from_breakpoints(p.breakpoints().to_vec());
        assert_eq!(again, p);
    }

    #[test]
    fn backtracking_segments_not_merged() {
        let pts = vec![w(&[0, 0]), w(&[2, 0]), w(&[1, 0])];
        let p = Path::from_breakpoints(pts.clone());
        assert_eq!(p.breakpoints(), &pts[..]);
    }

    #[test]
    fn serialization() {
        let cm = a2();
        let p = MaybePath::Path(Path::straight(&w(&[2, 0]))).lower(&cm, 1);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"{"breakpoints":[["0/1","0/1"],["-1/1","1/1"],["0/1","1/1"]]}"#
        );
        let back: MaybePath = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        let null: MaybePath = serde_json::from_str("null").unwrap();
        assert!(null.is_null());
        assert_eq!(serde_json::to_string(&MaybePath::Null).unwrap(), "null");
    }
}
