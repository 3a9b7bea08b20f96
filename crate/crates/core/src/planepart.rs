//! Plane partitions with bounded column height, their boxes, contents and the
//! rational function `psi_pi(u)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::config::ModelConfig;
use crate::error::{Error, Result, ScalarError};
use crate::scalar::Coeff;
use crate::urational::{cancel_roots, URational};

/// A unit cube at zero-based coordinates.
///
/// Boxes are ordered by `(z, x, y)`; this is the order in which the canonical
/// path of a partition adds them.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Box3 {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Box3 {
    pub fn new(x: u32, y: u32, z: u32) -> Self {
        Box3 { x, y, z }
    }

    fn key(&self) -> (u32, u32, u32) {
        (self.z, self.x, self.y)
    }
}

impl Ord for Box3 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Box3 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Box3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// Column heights `heights[x][y]`, rows and columns nonincreasing, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct PlanePartition {
    heights: Vec<Vec<u32>>,
}

impl TryFrom<Vec<Vec<u32>>> for PlanePartition {
    type Error = Error;
    fn try_from(v: Vec<Vec<u32>>) -> Result<Self> {
        PlanePartition::new(v)
    }
}

impl From<PlanePartition> for Vec<Vec<u32>> {
    fn from(p: PlanePartition) -> Self {
        p.heights
    }
}

impl PlanePartition {
    pub fn empty() -> Self {
        PlanePartition::default()
    }

    pub fn new(mut heights: Vec<Vec<u32>>) -> Result<Self> {
        for row in heights.iter_mut() {
            while row.last() == Some(&0) {
                row.pop();
            }
        }
        while heights.last().map(|r| r.is_empty()).unwrap_or(false) {
            heights.pop();
        }
        let p = PlanePartition { heights };
        for (x, row) in p.heights.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidPartition(format!("{p}: empty row {x} above a nonempty row")));
            }
            for (y, &h) in row.iter().enumerate() {
                if y > 0 && row[y - 1] < h {
                    return Err(Error::InvalidPartition(format!("{p}: row {x} increases")));
                }
                if x > 0 && p.height(x - 1, y) < h {
                    return Err(Error::InvalidPartition(format!("{p}: column {y} increases")));
                }
            }
        }
        Ok(p)
    }

    pub fn heights(&self) -> &[Vec<u32>] {
        &self.heights
    }

    pub fn height(&self, x: usize, y: usize) -> u32 {
        self.heights.get(x).and_then(|r| r.get(y)).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.heights.iter().flatten().map(|&h| h as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    pub fn max_height(&self) -> u32 {
        self.heights.first().and_then(|r| r.first()).copied().unwrap_or(0)
    }

    pub fn contains(&self, b: &Box3) -> bool {
        b.z < self.height(b.x as usize, b.y as usize)
    }

    /// All boxes in `(z, x, y)` order.
    pub fn boxes(&self) -> Vec<Box3> {
        let mut out = Vec::with_capacity(self.size());
        for (x, row) in self.heights.iter().enumerate() {
            for (y, &h) in row.iter().enumerate() {
                for z in 0..h {
                    out.push(Box3::new(x as u32, y as u32, z));
                }
            }
        }
        out.sort();
        out
    }

    /// Boxes that can be added keeping heights at most `n_max`.
    pub fn addable(&self, n_max: usize) -> Vec<Box3> {
        let mut out = Vec::new();
        let rows = self.heights.len();
        for x in 0..=rows {
            let len = self.heights.get(x).map(|r| r.len()).unwrap_or(0);
            for y in 0..=len {
                let z = self.height(x, y);
                if z as usize >= n_max {
                    continue;
                }
                let ok_x = x == 0 || self.height(x - 1, y) > z;
                let ok_y = y == 0 || self.height(x, y - 1) > z;
                if ok_x && ok_y {
                    out.push(Box3::new(x as u32, y as u32, z));
                }
            }
        }
        out.sort();
        out
    }

    pub fn removable(&self) -> Vec<Box3> {
        let mut out = Vec::new();
        for (x, row) in self.heights.iter().enumerate() {
            for (y, &h) in row.iter().enumerate() {
                if h > 0 && self.height(x + 1, y) < h && self.height(x, y + 1) < h {
                    out.push(Box3::new(x as u32, y as u32, h - 1));
                }
            }
        }
        out.sort();
        out
    }

    pub fn add_box(&self, b: &Box3) -> Result<Self> {
        let (x, y) = (b.x as usize, b.y as usize);
        let ok = self.height(x, y) == b.z
            && (x == 0 || self.height(x - 1, y) > b.z)
            && (y == 0 || self.height(x, y - 1) > b.z);
        if !ok {
            return Err(Error::NotAddable { partition: self.to_string(), bx: b.to_string() });
        }
        let mut h = self.heights.clone();
        if h.len() <= x {
            h.resize(x + 1, Vec::new());
        }
        if h[x].len() <= y {
            h[x].resize(y + 1, 0);
        }
        h[x][y] += 1;
        Ok(PlanePartition { heights: h })
    }

    pub fn remove_box(&self, b: &Box3) -> Result<Self> {
        if !self.removable().contains(b) {
            return Err(Error::NotRemovable { partition: self.to_string(), bx: b.to_string() });
        }
        let mut h = self.heights.clone();
        h[b.x as usize][b.y as usize] -= 1;
        PlanePartition::new(h)
    }

    /// The parent in the canonical tree: remove the last box in `(z, x, y)` order.
    pub fn canonical_parent(&self) -> Option<(PlanePartition, Box3)> {
        let last = *self.boxes().last()?;
        let parent = self.remove_box(&last).expect("the (z,x,y)-maximal box is removable");
        Some((parent, last))
    }

    /// Transpose the x and y axes.
    pub fn transpose(&self) -> Self {
        let cols = self.heights.first().map(|r| r.len()).unwrap_or(0);
        let h = (0..cols)
            .map(|y| (0..self.heights.len()).map(|x| self.height(x, y)).collect())
            .collect();
        PlanePartition::new(h).expect("transpose of a plane partition")
    }

    /// A 2D partition (single layer) from its row lengths.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        PlanePartition::new(rows.iter().map(|&r| vec![1; r as usize]).collect())
    }

    /// Row lengths when every height is at most one.
    pub fn as_young_rows(&self) -> Option<Vec<u32>> {
        if self.max_height() > 1 {
            return None;
        }
        Some(self.heights.iter().map(|r| r.len() as u32).collect())
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.heights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let r: Vec<String> = row.iter().map(|h| h.to_string()).collect();
            write!(f, "[{}]", r.join(","))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PlanePartition {
    type Err = Error;

    /// Accepts `[[2,1],[1]]`, `[]`, with optional spaces.
    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<Vec<u32>> =
            serde_json::from_str(s.trim()).map_err(|e| Error::Parse(format!("plane partition `{s}`: {e}")))?;
        PlanePartition::new(rows)
    }
}

/// All plane partitions of `n` with heights at most `n_max`, sorted ascending.
pub fn enumerate(n: usize, n_max: usize) -> Vec<PlanePartition> {
    let mut level: BTreeSet<PlanePartition> = BTreeSet::new();
    level.insert(PlanePartition::empty());
    for _ in 0..n {
        let mut next = BTreeSet::new();
        for p in &level {
            for b in p.addable(n_max) {
                next.insert(p.add_box(&b).expect("addable"));
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// `h1 y + h2 x + h3 z`.
pub fn content<F: Coeff>(b: &Box3, cfg: &ModelConfig<F>) -> F {
    let mut acc = F::zero();
    for (k, h) in [(b.y, &cfg.h1), (b.x, &cfg.h2), (b.z, &cfg.h3)] {
        if k > 0 {
            acc += &h.scale_i64(k as i64);
        }
    }
    acc
}

/// `phi(t) = (t+h1)(t+h2)(t+h3) / ((t-h1)(t-h2)(t-h3))`.
pub fn phi_at<F: Coeff>(t: &F, cfg: &ModelConfig<F>) -> std::result::Result<F, ScalarError> {
    let mut num = F::one();
    let mut den = F::one();
    for h in [&cfg.h1, &cfg.h2, &cfg.h3] {
        num *= &(t.clone() + h);
        den *= &(t.clone() - h);
    }
    num.checked_div(&den)
}

/// Numerator and denominator roots of `psi_pi(u)` after cancellation (leading coefficient 1).
pub fn psi_roots<F: Coeff>(pi: &PlanePartition, cfg: &ModelConfig<F>) -> (Vec<F>, Vec<F>) {
    let mut num = vec![-(cfg.sigma3.clone() * &cfg.psi0)];
    let mut den = vec![F::zero()];
    for b in pi.boxes() {
        let h = content(&b, cfg);
        for hi in [&cfg.h1, &cfg.h2, &cfg.h3] {
            num.push(h.clone() - hi);
            den.push(h.clone() + hi);
        }
    }
    cancel_roots(&num, &den)
}

/// `psi_0(u) * prod phi(u - h_box)`.
pub fn psi_pi<F: Coeff>(pi: &PlanePartition, cfg: &ModelConfig<F>) -> URational<F> {
    let (n, d) = psi_roots(pi, cfg);
    URational::from_linear_factors(F::one(), &n, &d)
}

/// `(1/sigma3) res_{u = h_box} psi_pi(u)`, the squared transition amplitude.
pub fn amp_sq<F: Coeff>(pi: &PlanePartition, b: &Box3, cfg: &ModelConfig<F>) -> Result<F> {
    if !pi.addable(cfg.n).contains(b) {
        return Err(Error::NotAddable { partition: pi.to_string(), bx: b.to_string() });
    }
    let p = content(b, cfg);
    let (num, den) = psi_roots(pi, cfg);
    let hits = den.iter().filter(|r| **r == p).count();
    match hits {
        0 => return Ok(F::zero()),
        1 => {}
        k => {
            return Err(Error::Consistency(format!(
                "pole of order {k} of psi_{pi}(u) at the addable box {b}"
            )))
        }
    }
    let mut val = F::one();
    for r in &num {
        val *= &(p.clone() - r);
    }
    let mut dv = F::one();
    for r in den.iter().filter(|r| **r != p) {
        dv *= &(p.clone() - r);
    }
    Ok(val.checked_div(&dv)?.checked_div(&cfg.sigma3)?)
}

/// Cartan eigenvalues `psi_0 .. psi_{count-1}` of `|pi>`.
pub fn eigenvalues<F: Coeff>(pi: &PlanePartition, cfg: &ModelConfig<F>, count: usize) -> Result<Vec<F>> {
    let s = psi_pi(pi, cfg).u_series(count)?;
    s.into_iter().map(|c| c.checked_div(&cfg.sigma3).map_err(Error::from)).collect()
}

/// `6 sum h_box + 2 sigma3 psi0 |pi|`, the closed form of the `psi_3` eigenvalue.
pub fn psi3_eigenvalue<F: Coeff>(pi: &PlanePartition, cfg: &ModelConfig<F>) -> F {
    let mut s = F::zero();
    for b in pi.boxes() {
        s += &content(&b, cfg);
    }
    s.scale_i64(6) + cfg.sigma3.clone() * &cfg.psi0 * &F::from_i64(2 * pi.size() as i64)
}

/// Boxes in the order the canonical path adds them.
pub fn canonical_path(pi: &PlanePartition) -> Vec<Box3> {
    pi.boxes()
}

/// Gauge factor on the edge `pi -> pi + b` of the e-action:
/// `prod phi(h_b - h_c)` over boxes `c` of `pi` that come after `b` in `(z, x, y)` order.
pub fn gauge_c<F: Coeff>(pi: &PlanePartition, b: &Box3, cfg: &ModelConfig<F>) -> Result<F> {
    let hb = content(b, cfg);
    let mut acc = F::one();
    for c in pi.boxes().iter().filter(|c| *c > b) {
        let t = hb.clone() - &content(c, cfg);
        acc *= &phi_at(&t, cfg).map_err(|_| {
            Error::Consistency(format!("gauge factor of {b} on {pi} has a pole (box {c})"))
        })?;
    }
    Ok(acc)
}

/// `R(p, q) = prod phi(h_v - h_w)` over pairs with `w` before `v` in `p` and `v` before `w` in `q`.
///
/// The vector reached from the empty diagram by applying `e_0` along the box
/// order `p` is `R(p, canonical) J_pi` in the gauge of [`gauge_c`].
pub fn path_ratio<F: Coeff>(p: &[Box3], q: &[Box3], cfg: &ModelConfig<F>) -> Result<F> {
    let pos_q = |b: &Box3| q.iter().position(|c| c == b);
    let mut acc = F::one();
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            let (w, v) = (&p[i], &p[j]);
            let (qw, qv) = match (pos_q(w), pos_q(v)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(Error::Consistency("paths cover different boxes".into())),
            };
            if qv < qw {
                let t = content(v, cfg) - &content(w, cfg);
                acc *= &phi_at(&t, cfg)?;
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::RatFunc;
    use num_traits::{One, Zero};

    fn pp(s: &str) -> PlanePartition {
        s.parse().unwrap()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate(0, 3), vec![PlanePartition::empty()]);
        assert_eq!(enumerate(2, 2).len(), 3);
        assert_eq!(enumerate(4, 4).len(), 13);
    }

    #[test]
    fn addable_removable_examples() {
        assert_eq!(PlanePartition::empty().addable(1), vec![Box3::new(0, 0, 0)]);
        let one = pp("[[1]]");
        let mut a = one.addable(2);
        a.sort_by_key(|b| (b.x, b.y, b.z));
        assert_eq!(a, vec![Box3::new(0, 0, 1), Box3::new(0, 1, 0), Box3::new(1, 0, 0)]);
        assert_eq!(pp("[[1],[1]]").removable(), vec![Box3::new(1, 0, 0)]);
        assert!(pp("[[2]]").addable(2).iter().all(|b| b.z < 2));
    }

    #[test]
    fn text_form_roundtrip() {
        for s in ["[]", "[[1,1]]", "[[2,1],[1]]"] {
            assert_eq!(pp(s).to_string(), s);
        }
        assert!("[[1],[2]]".parse::<PlanePartition>().is_err());
    }

    #[test]
    fn contents() {
        let cfg = ModelConfig::symbolic(3).unwrap();
        assert!(content(&Box3::new(0, 0, 0), &cfg).is_zero());
        assert_eq!(content(&Box3::new(1, 0, 0), &cfg), RatFunc::h2());
        assert_eq!(content(&Box3::new(0, 0, 1), &cfg), RatFunc::h3());
    }

    #[test]
    fn amp_sq_vacuum_is_psi0() {
        let cfg = ModelConfig::symbolic(2).unwrap();
        assert_eq!(amp_sq(&PlanePartition::empty(), &Box3::new(0, 0, 0), &cfg).unwrap(), cfg.psi0);
        assert!(amp_sq(&PlanePartition::empty(), &Box3::new(1, 0, 0), &cfg).is_err());
    }

    #[test]
    fn psi3_closed_form_matches_series() {
        let cfg = ModelConfig::symbolic(2).unwrap();
        for n in 0..=3 {
            for p in enumerate(n, 2) {
                let ev = eigenvalues(&p, &cfg, 4).unwrap();
                assert_eq!(ev[0], cfg.psi0);
                assert!(ev[1].is_zero());
                assert_eq!(ev[2], RatFunc::from_i64(2 * n as i64));
                assert_eq!(ev[3], psi3_eigenvalue(&p, &cfg));
            }
        }
    }

    #[test]
    fn gauge_is_one_on_tree_edges() {
        let cfg = ModelConfig::symbolic(3).unwrap();
        for n in 1..=4 {
            for p in enumerate(n, 3) {
                let (parent, b) = p.canonical_parent().unwrap();
                assert!(gauge_c(&parent, &b, &cfg).unwrap().is_one());
            }
        }
    }
}
