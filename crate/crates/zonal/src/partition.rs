//! Partitions and their combinatorial statistics: conjugation, dominance
//! order, arm/leg lengths, the two hook products `d'_kappa` and `h_kappa`,
//! derived partitions (`2 kappa`, `kappa^2`, the box complement `kappa^s`),
//! and the generalized Pochhammer symbol — all in exact rational arithmetic.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{rat_int, Rat};
use crate::{Error, Result};

/// A partition: weakly decreasing positive integer parts. The empty
/// partition is allowed. Canonicalized on construction (zeros stripped,
/// monotonicity verified), so equal partitions compare equal as map keys.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts, stripping zeros. Errors unless the
    /// nonzero parts are weakly decreasing.
    pub fn new(parts: impl AsRef<[u32]>) -> Result<Self> {
        let parts: Vec<u32> = parts.as_ref().iter().copied().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|kappa|`, the sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `kappa_i` with 1-based `i`; zero beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// Conjugate partition `kappa'` (rows and columns of the diagram
    /// interchanged): `kappa'_j = #{i : kappa_i >= j}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1) as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `2 kappa`: every part doubled.
    pub fn double(&self) -> Partition {
        Partition { parts: self.parts.iter().map(|&p| 2 * p).collect() }
    }

    /// `kappa^2`: every part repeated twice.
    pub fn square(&self) -> Partition {
        let mut parts = Vec::with_capacity(2 * self.parts.len());
        for &p in &self.parts {
            parts.push(p);
            parts.push(p);
        }
        Partition { parts }
    }

    /// Inverse of [`double`](Self::double): `Some(kappa)` if `self = 2 kappa`.
    pub fn halve(&self) -> Option<Partition> {
        if self.parts.iter().all(|&p| p % 2 == 0) {
            Some(Partition { parts: self.parts.iter().map(|&p| p / 2).collect() })
        } else {
            None
        }
    }

    /// Inverse of [`square`](Self::square): `Some(kappa)` if `self = kappa^2`.
    pub fn unsquare(&self) -> Option<Partition> {
        if self.parts.len() % 2 != 0 {
            return None;
        }
        let mut parts = Vec::with_capacity(self.parts.len() / 2);
        for pair in self.parts.chunks(2) {
            if pair[0] != pair[1] {
                return None;
            }
            parts.push(pair[0]);
        }
        Some(Partition { parts })
    }

    /// Dominance order `self <= other`: all partial sums of `self` bounded by
    /// those of `other`. Only defined for equal weights.
    pub fn dominance_le(&self, other: &Partition) -> Result<bool> {
        if self.weight() != other.weight() {
            return Err(Error::IncomparableWeights);
        }
        let l = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 1..=l {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Diagram containment (`self` fits inside `other`).
    pub fn contained_in(&self, other: &Partition) -> bool {
        (1..=self.len()).all(|i| self.part(i) <= other.part(i))
    }

    /// Arm length of cell `(i, j)` (1-based): cells strictly to its right.
    pub fn arm(&self, i: usize, j: usize) -> Result<u32> {
        self.check_cell(i, j)?;
        Ok(self.part(i) - j as u32)
    }

    /// Leg length of cell `(i, j)` (1-based): cells strictly below.
    pub fn leg(&self, i: usize, j: usize) -> Result<u32> {
        self.check_cell(i, j)?;
        Ok(self.parts.iter().skip(i).filter(|&&p| p as usize >= j).count() as u32)
    }

    fn check_cell(&self, i: usize, j: usize) -> Result<()> {
        if i >= 1 && j >= 1 && j as u32 <= self.part(i) {
            Ok(())
        } else {
            Err(Error::CellOutsideDiagram(i, j))
        }
    }

    /// All cells `(i, j)` of the diagram, 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i0, &p)| (1..=p as usize).map(move |j| (i0 + 1, j)))
    }

    /// Box complement `kappa^s = (s - kappa_N, ..., s - kappa_1)` inside the
    /// `s x N` box, trailing zeros stripped. Requires `kappa` to fit the box.
    pub fn complement(&self, s: u32, n: usize) -> Result<Partition> {
        if self.len() > n || self.part(1) > s {
            return Err(Error::ComplementUndefined);
        }
        let parts: Vec<u32> = (1..=n).rev().map(|i| s - self.part(i)).collect();
        Partition::new(parts)
    }

    /// All partitions of weight `w` with at most `max_len` parts, each part
    /// at most `max_part`; descending lexicographic order.
    pub fn enumerate(w: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        fn rec(rem: u32, max_next: u32, slots: usize, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: stack.clone() });
                return;
            }
            if slots == 0 || max_next == 0 {
                return;
            }
            let hi = rem.min(max_next);
            // skip sizes too small to fit the remainder into the slots left
            let lo = rem.div_ceil(slots as u32);
            for p in (lo..=hi).rev() {
                stack.push(p);
                rec(rem - p, p, slots - 1, stack, out);
                stack.pop();
            }
        }
        rec(w, max_part, max_len, &mut stack, &mut out);
        out
    }

    /// All partitions fitting in the `max_part x max_len` box (all weights,
    /// including the empty partition), ordered by weight.
    pub fn enumerate_box(max_part: u32, max_len: usize) -> Vec<Partition> {
        (0..=max_part * max_len as u32)
            .flat_map(|w| Partition::enumerate(w, max_len, max_part))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// The Jack parameter `alpha`, a strictly positive rational. The
/// distinguished instances 2, 1, 1/2 give the three zonal normalizations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct JackParam {
    alpha: Rat,
}

impl JackParam {
    pub fn new(alpha: Rat) -> Result<Self> {
        use num_traits::Signed;
        if alpha.is_positive() {
            Ok(JackParam { alpha })
        } else {
            Err(Error::NonPositiveAlpha)
        }
    }

    pub fn of(num: i64, den: i64) -> Self {
        JackParam::new(crate::rational::rat(num, den)).expect("positive alpha")
    }

    pub fn as_rat(&self) -> &Rat {
        &self.alpha
    }

    /// `1/alpha`.
    pub fn inverse(&self) -> JackParam {
        JackParam { alpha: self.alpha.clone().recip() }
    }
}

impl fmt::Display for JackParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::rational::rat_to_string(&self.alpha))
    }
}

/// Upper hook product `d'_kappa = prod_cells (alpha (arm+1) + leg)`;
/// `d'_empty = 1`.
pub fn hook_upper(kappa: &Partition, alpha: &JackParam) -> Rat {
    let conj = kappa.conjugate();
    let mut acc = rat_int(1);
    for (i, j) in kappa.cells() {
        let arm = kappa.part(i) - j as u32;
        let leg = conj.part(j) - i as u32;
        acc *= alpha.as_rat() * rat_int(arm as i64 + 1) + rat_int(leg as i64);
    }
    acc
}

/// Lower hook product `h_kappa = prod_cells (alpha arm + leg + 1)`;
/// `h_empty = 1`.
pub fn hook_lower(kappa: &Partition, alpha: &JackParam) -> Rat {
    let conj = kappa.conjugate();
    let mut acc = rat_int(1);
    for (i, j) in kappa.cells() {
        let arm = kappa.part(i) - j as u32;
        let leg = conj.part(j) - i as u32;
        acc *= alpha.as_rat() * rat_int(arm as i64) + rat_int(leg as i64 + 1);
    }
    acc
}

/// Generalized Pochhammer symbol
/// `[u]_kappa^(alpha) = prod_j prod_{i=0}^{kappa_j - 1} (u - (j-1)/alpha + i)`,
/// the gamma-free product form (each gamma ratio collapses to a rising
/// factorial, so the value is an exact rational with no poles).
pub fn gen_pochhammer(u: &Rat, kappa: &Partition, alpha: &JackParam) -> Rat {
    let mut acc = rat_int(1);
    for (j0, &kj) in kappa.parts().iter().enumerate() {
        let base = u - rat_int(j0 as i64) / alpha.as_rat();
        acc *= crate::rational::rising(&base, kj);
    }
    acc
}
