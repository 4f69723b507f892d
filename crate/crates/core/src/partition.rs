use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Type tag of the algebra: `B` has ε = 1, `C` has ε = 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Eps {
    B,
    C,
}

impl Eps {
    pub fn value(self) -> u32 {
        match self {
            Eps::B => 1,
            Eps::C => 2,
        }
    }

    pub fn from_value(e: u32) -> Result<Eps> {
        match e {
            1 => Ok(Eps::B),
            2 => Ok(Eps::C),
            _ => Err(Error::BadEpsilon(e)),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Eps::B => 'b',
            Eps::C => 'c',
        }
    }
}

impl FromStr for Eps {
    type Err = Error;
    fn from_str(s: &str) -> Result<Eps> {
        match s.trim() {
            "b" | "B" | "1" => Ok(Eps::B),
            "c" | "C" | "2" => Ok(Eps::C),
            other => Err(Error::Parse(format!("unknown type tag '{other}' (use b or c)"))),
        }
    }
}

/// A partition stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// Builds a partition, dropping trailing zeros. Fails if the parts increase.
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub(crate) fn raw(parts: Vec<usize>) -> Partition {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && parts.last() != Some(&0));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The i-th part, 0-based, with zeros beyond the length.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.get(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect();
        Partition(parts)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.get(i) <= self.get(i))
    }

    pub fn is_in_px(&self, eps: Eps) -> bool {
        let e = eps.value() as usize;
        self.0.iter().all(|p| p % e == 0)
    }

    /// Whether (λ, n) is dominant: 2λ₁ ≤ εn.
    pub fn is_dominant_at(&self, n: u32, eps: Eps) -> bool {
        2 * self.first() as u64 <= eps.value() as u64 * n as u64
    }

    pub fn scaled(&self, k: usize) -> Partition {
        Partition(self.0.iter().map(|p| p * k).collect())
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions with at most `rows` parts, each at most `cols`.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        rec(rows, cols, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Partitions of `n` inside `outer` that contain `inner`.
    pub fn between(inner: &Partition, outer: &Partition, n: usize) -> Vec<Partition> {
        Partition::all_of_size(n)
            .into_iter()
            .filter(|p| outer.contains(p) && p.contains(inner))
            .collect()
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).expect("weakly decreasing parts")
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(parts: [usize; N]) -> Partition {
        Partition::new(parts.to_vec()).expect("weakly decreasing parts")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    /// Comma separated parts; "0" or "" is the empty partition.
    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("'{t}': {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<SkewShape> {
        if !outer.contains(&inner) {
            return Err(Error::ShapeMismatch(format!("{inner} is not inside {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> SkewShape {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugates() {
        assert_eq!(Partition::from([5, 3, 2]).conjugate(), Partition::from([3, 3, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::from([4, 3, 2]).conjugate(), Partition::from([3, 3, 2, 1]));
    }

    #[test]
    fn px_membership() {
        assert!(Partition::from([3, 1]).is_in_px(Eps::B));
        assert!(!Partition::from([3, 1]).is_in_px(Eps::C));
        assert!(Partition::from([4, 2, 2]).is_in_px(Eps::C));
    }

    #[test]
    fn parse_and_print() {
        let p: Partition = "3,1,0".parse().unwrap();
        assert_eq!(p, Partition::from([3, 1]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p.to_string(), "3,1");
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn counts() {
        let sizes: Vec<usize> = (0..8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        // binomial(2+2, 2)
        assert_eq!(Partition::all_in_box(2, 2).len(), 6);
    }
}
