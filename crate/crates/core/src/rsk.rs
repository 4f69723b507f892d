//! RSK on matrices with rows in Z>0 and columns in the dual alphabet,
//! the gl crystal on both sides, and the folded version.
//!
//! A column index `j` stands for the dual letter -j^v; these are ordered
//! -1^v < -2^v < ..., so dual tableaux store `j` directly.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Letter, Ordinary};
use crate::crystal::CrystalVertex;
use crate::error::{Error, Result};
use crate::partition::Eps;
use crate::signature::{acting_position, bracket, Dir, Sign};
use crate::tableau::{recording_from_cells, Tableau};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SupportMatrix {
    entries: BTreeMap<(u32, u32), u32>,
}

impl SupportMatrix {
    pub fn zero() -> SupportMatrix {
        SupportMatrix::default()
    }

    pub fn from_triples(triples: &[(u32, u32, u32)]) -> Result<SupportMatrix> {
        let mut a = SupportMatrix::zero();
        for &(i, j, c) in triples {
            if i == 0 || j == 0 {
                return Err(Error::Parse(format!("indices start at 1, got ({i},{j})")));
            }
            a.add(i, j, c);
        }
        Ok(a)
    }

    pub fn get(&self, i: u32, j: u32) -> u32 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: u32, j: u32, c: u32) {
        if c > 0 {
            *self.entries.entry((i, j)).or_insert(0) += c;
        }
    }

    /// Removes one unit at (i, j); false if the entry is zero.
    pub fn take(&mut self, i: u32, j: u32) -> bool {
        match self.entries.get_mut(&(i, j)) {
            Some(c) => {
                *c -= 1;
                if *c == 0 {
                    self.entries.remove(&(i, j));
                }
                true
            }
            None => false,
        }
    }

    pub fn triples(&self) -> Vec<(u32, u32, u32)> {
        self.entries.iter().map(|(&(i, j), &c)| (i, j, c)).collect()
    }

    pub fn support(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.entries.keys().copied()
    }

    pub fn total(&self) -> u32 {
        self.entries.values().sum()
    }

    pub fn transpose(&self) -> SupportMatrix {
        SupportMatrix { entries: self.entries.iter().map(|(&(i, j), &c)| ((j, i), c)).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries.iter().all(|(&(i, j), &c)| self.get(j, i) == c)
    }

    /// Biword pairs (i, j) in increasing order: by j, then by decreasing i.
    pub fn biword(&self) -> Vec<(u32, u32)> {
        let mut keys: Vec<(u32, u32)> = self.entries.keys().copied().collect();
        keys.sort_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));
        let mut out = Vec::with_capacity(self.total() as usize);
        for (i, j) in keys {
            for _ in 0..self.get(i, j) {
                out.push((i, j));
            }
        }
        out
    }

    /// The top word w(A).
    pub fn word(&self) -> Vec<Letter> {
        self.biword().into_iter().map(|(i, _)| i).collect()
    }
}

impl fmt::Display for SupportMatrix {
    /// One "i j count" triple per line, sorted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j, c) in self.triples() {
            writeln!(f, "{i} {j} {c}")?;
        }
        Ok(())
    }
}

impl FromStr for SupportMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<SupportMatrix> {
        let mut triples = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let nums: Vec<u32> = line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|e| Error::Parse(format!("'{t}': {e}"))))
                .collect::<Result<_>>()?;
            if nums.len() != 3 {
                return Err(Error::Parse(format!("expected 'i j count', got '{line}'")));
            }
            triples.push((nums[0], nums[1], nums[2]));
        }
        SupportMatrix::from_triples(&triples)
    }
}

fn insert_all(w: &[Letter]) -> Tableau {
    let mut t = Tableau::empty();
    t.insert_word(w, &Ordinary);
    t
}

/// κ(A) = ((w(A) → ∅), (w(A^t) → ∅)).
pub fn rsk(a: &SupportMatrix) -> (Tableau, Tableau) {
    (insert_all(&a.word()), insert_all(&a.transpose().word()))
}

/// Inserting w(A) while recording the column index of each letter.
pub fn recording_by_columns(a: &SupportMatrix) -> Tableau {
    let mut p = Tableau::empty();
    let mut cells = HashMap::new();
    for (i, j) in a.biword() {
        cells.insert(p.insert_letter(i, &Ordinary), j);
    }
    recording_from_cells(p.outer(), &crate::partition::Partition::empty(), &cells)
}

/// Converts the dual-side tableau of κ into [`recording_by_columns`]:
/// insert the reversed column word under the reversed order.
pub fn recording_from_dual(q: &Tableau) -> Tableau {
    let m = q.max_entry() + 1;
    let mut w = q.col_word();
    w.reverse();
    let flipped: Vec<Letter> = w.iter().map(|&j| m - j).collect();
    let t = insert_all(&flipped);
    let rows = t.rows().iter().map(|r| r.iter().map(|&x| m - x).collect()).collect();
    Tableau::from_rows(rows).expect("straight shape")
}

/// Inverse of [`rsk`].
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<SupportMatrix> {
    if p.outer() != q.outer() || !p.is_straight() || !q.is_straight() {
        return Err(Error::ShapeMismatch(format!("shapes {} and {} differ", p.outer(), q.outer())));
    }
    let mut rows: Vec<Vec<Letter>> = p.rows().to_vec();
    let mut rec: Vec<Vec<Letter>> = recording_from_dual(q).rows().to_vec();
    let mut a = SupportMatrix::zero();
    while !rows.is_empty() {
        // the newest cell carries the largest column index, leftmost among ties
        let mut best: Option<(u32, usize, usize)> = None;
        for (r, row) in rec.iter().enumerate() {
            let c = row.len();
            let j = row[0];
            let better = match best {
                None => true,
                Some((bj, _, bc)) => j > bj || (j == bj && c > bc),
            };
            // only corner cells can be removed
            let corner = r + 1 == rec.len() || rec[r + 1].len() < c;
            if better && corner {
                best = Some((j, r, c));
            }
        }
        let (j, r, _) = best.expect("nonempty tableau");
        rec[r].remove(0);
        let mut x = rows[r].remove(0);
        if rows[r].is_empty() {
            rows.pop();
            rec.pop();
        }
        for rr in (0..r).rev() {
            let row = &mut rows[rr];
            let p = row.iter().take_while(|&&y| y <= x).count();
            if p == row.len() {
                return Err(Error::BadTableau("reverse bumping failed; P is not semistandard".into()));
            }
            std::mem::swap(&mut row[p], &mut x);
        }
        a.add(x, j, 1);
    }
    Ok(a)
}

/// ẽ_i / f̃_i on matrices for i ∈ Z: i > 0 acts on w(A), i < 0 on w(A^t),
/// and i = 0 adds or removes E_{1,-1^v}.
pub fn gl_op(a: &SupportMatrix, i: i32, dir: Dir) -> Option<SupportMatrix> {
    if i < 0 {
        return gl_op(&a.transpose(), -i, dir).map(|b| b.transpose());
    }
    let mut b = a.clone();
    if i == 0 {
        return match dir {
            Dir::Lower => {
                b.add(1, 1, 1);
                Some(b)
            }
            Dir::Raise => b.take(1, 1).then_some(b),
        };
    }
    let bw = a.biword();
    let w: Vec<Letter> = bw.iter().map(|p| p.0).collect();
    let pos = acting_position(&w, i as Letter, dir)?;
    let (r, j) = bw[pos];
    b.take(r, j);
    let r2 = match dir {
        Dir::Lower => r + 1,
        Dir::Raise => r - 1,
    };
    b.add(r2, j, 1);
    Some(b)
}

pub fn gl_eps0(a: &SupportMatrix) -> u32 {
    a.get(1, 1)
}

/// The same operators on pairs (P, Q) of equal shape: i > 0 on P, i < 0 on Q,
/// and i = 0 by the signs of the column tops of both tableaux.
pub fn bitableau_op(p: &Tableau, q: &Tableau, i: i32, dir: Dir) -> Option<(Tableau, Tableau)> {
    if i > 0 {
        return p.crystal_op(i as Letter, dir).map(|p2| (p2, q.clone()));
    }
    if i < 0 {
        return q.crystal_op((-i) as Letter, dir).map(|q2| (p.clone(), q2));
    }
    let width = p.outer().first();
    let mut signs = vec![Sign::Plus];
    for k in (1..=width).rev() {
        let s = p.column_top(k).unwrap();
        let t = q.column_top(k).unwrap();
        signs.push(if s == 1 && t == 1 {
            Sign::Minus
        } else if s > 1 && t > 1 {
            Sign::Plus
        } else {
            Sign::Dot
        });
    }
    let alive = bracket(&signs, Sign::Minus);
    let n = signs.len();
    let pos = match dir {
        Dir::Raise => (0..n).find(|&x| alive[x] && signs[x] == Sign::Minus)?,
        Dir::Lower => (0..n).rev().find(|&x| alive[x] && signs[x] == Sign::Plus)?,
    };
    let k = n - pos;
    let height = p.column(k).len();
    let edit = |t: &Tableau| {
        let mut rows = t.rows().to_vec();
        match dir {
            Dir::Raise => {
                rows[height - 1].remove(0);
                if rows[height - 1].is_empty() {
                    rows.pop();
                }
            }
            Dir::Lower => {
                if height == rows.len() {
                    rows.push(Vec::new());
                }
                rows[height].insert(0, 1);
            }
        }
        Tableau::from_rows(rows).expect("corner edit keeps the shape")
    };
    Some((edit(p), edit(q)))
}

/// A symmetric matrix with diagonal divisible by ε.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FoldedMatrix {
    pub base: SupportMatrix,
    pub eps: Eps,
}

impl FoldedMatrix {
    pub fn new(base: SupportMatrix, eps: Eps) -> Result<FoldedMatrix> {
        if !base.is_symmetric() {
            return Err(Error::BadTableau("matrix is not symmetric".into()));
        }
        let e = eps.value();
        if base.support().any(|(i, j)| i == j && !base.get(i, i).is_multiple_of(e)) {
            return Err(Error::BadTableau("diagonal must be divisible by ε".into()));
        }
        Ok(FoldedMatrix { base, eps })
    }

    pub fn zero(eps: Eps) -> FoldedMatrix {
        FoldedMatrix { base: SupportMatrix::zero(), eps }
    }

    fn op(&self, i: usize, dir: Dir) -> Option<FoldedMatrix> {
        let mut b = self.base.clone();
        if i == 0 {
            for _ in 0..self.eps.value() {
                b = gl_op(&b, 0, dir)?;
            }
        } else {
            b = gl_op(&b, -(i as i32), dir)?;
            b = gl_op(&b, i as i32, dir)?;
        }
        Some(FoldedMatrix { base: b, eps: self.eps })
    }

    fn string(&self, i: usize, dir: Dir) -> usize {
        let mut a = self.clone();
        let mut k = 0;
        while let Some(b) = a.op(i, dir) {
            a = b;
            k += 1;
        }
        k
    }
}

/// An element (A, T) of M^x(λ).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FoldedElement {
    pub a: FoldedMatrix,
    pub t: Tableau,
}

/// Ẽ_0 = ẽ_0^ε on A; Ẽ_i = ẽ_i ẽ_{-i} on A tensored with ẽ_i on T.
pub fn folded_op(m: &FoldedElement, i: usize, dir: Dir) -> Option<FoldedElement> {
    if i == 0 {
        return m.a.op(0, dir).map(|a| FoldedElement { a, t: m.t.clone() });
    }
    let phi_a = m.a.string(i, Dir::Lower);
    let eps_t = crate::signature::word_eps(&m.t.col_word(), i as Letter);
    let on_a = match dir {
        Dir::Lower => phi_a > eps_t,
        Dir::Raise => phi_a >= eps_t,
    };
    if on_a {
        m.a.op(i, dir).map(|a| FoldedElement { a, t: m.t.clone() })
    } else {
        m.t.crystal_op(i as Letter, dir).map(|t| FoldedElement { a: m.a.clone(), t })
    }
}

/// (A, T) ↦ (S, T) where κ(A) = (S, S*).
pub fn kappa_x(m: &FoldedElement, level: u32) -> CrystalVertex {
    let (s, _) = rsk(&m.a.base);
    CrystalVertex { s, t: m.t.clone(), eps: m.a.eps, level }
}

/// Longest weakly decreasing subword of `w` using letters at most `bound`.
fn longest_decreasing_below(w: &[Letter], bound: Letter) -> usize {
    let mut best = vec![0usize; w.len()];
    let mut top = 0;
    for p in 0..w.len() {
        if w[p] > bound {
            continue;
        }
        let mut b = 1;
        for q in 0..p {
            if w[q] >= w[p] && w[q] <= bound {
                b = b.max(best[q] + 1);
            }
        }
        best[p] = b;
        top = top.max(b);
    }
    top
}

/// ε·L(m).
///
/// A weakly decreasing w(A') is a symmetric chain in supp(A), ordered by
/// rows weakly down and columns weakly up; its half below the diagonal
/// determines it, ending at most at one diagonal entry.
pub fn l_scaled(m: &FoldedElement) -> usize {
    let a = &m.a.base;
    let wt = m.t.col_word();
    let mut pts: Vec<(u32, u32)> = a.support().filter(|&(i, j)| i >= j).collect();
    // chain order: larger rows first, then smaller columns
    pts.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
    let mut gain = vec![0usize; pts.len()];
    for p in (0..pts.len()).rev() {
        let (i, j) = pts[p];
        let own = if i == j { a.get(i, i) as usize } else { 2 * a.get(i, j) as usize };
        let mut tail = 0;
        if i != j {
            for q in p + 1..pts.len() {
                let (i2, j2) = pts[q];
                if i2 <= i && j2 >= j {
                    tail = tail.max(gain[q]);
                }
            }
        }
        gain[p] = own + tail;
    }
    let mut best = 2 * longest_decreasing_below(&wt, Letter::MAX);
    for (p, &(_, j)) in pts.iter().enumerate() {
        best = best.max(gain[p] + 2 * longest_decreasing_below(&wt, j));
    }
    best
}

pub fn l_statistic(m: &FoldedElement) -> usize {
    let s = l_scaled(m);
    debug_assert_eq!(s % m.a.eps.value() as usize, 0);
    s / m.a.eps.value() as usize
}

/// T* built by raising T to H_λ and replaying the lowering word on the dual side.
pub fn dual_by_replay(t: &Tableau) -> Tableau {
    let mut path = Vec::new();
    let mut cur = t.clone();
    let max = t.max_entry().max(1);
    'outer: loop {
        for i in 1..max {
            if let Some(u) = cur.crystal_op(i, Dir::Raise) {
                path.push(i);
                cur = u;
                continue 'outer;
            }
        }
        break;
    }
    // operators on the dual alphabet move -i^v to -(i+1)^v, i.e. j=i to j=i+1
    let mut d = Tableau::highest(t.outer());
    for &i in path.iter().rev() {
        d = d.crystal_op(i, Dir::Lower).expect("replayed word is defined");
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn m(t: &[(u32, u32, u32)]) -> SupportMatrix {
        SupportMatrix::from_triples(t).unwrap()
    }

    #[test]
    fn rsk_examples() {
        assert_eq!(rsk(&SupportMatrix::zero()), (Tableau::empty(), Tableau::empty()));
        let (p, q) = rsk(&m(&[(1, 1, 2)]));
        assert_eq!(p.rows(), &[vec![1, 1]]);
        assert_eq!(q.rows(), &[vec![1, 1]]);
        let h = Tableau::highest(&Partition::from([2, 1]));
        assert_eq!(rsk(&m(&[(1, 1, 2), (2, 2, 1)])), (h.clone(), h));
    }

    #[test]
    fn inverse_round_trips() {
        for a in [
            SupportMatrix::zero(),
            m(&[(1, 1, 2)]),
            m(&[(1, 1, 2), (2, 2, 1)]),
            m(&[(1, 2, 1), (2, 1, 1), (3, 1, 2), (1, 3, 1), (2, 3, 2)]),
        ] {
            let (p, q) = rsk(&a);
            assert_eq!(rsk_inverse(&p, &q).unwrap(), a);
            assert_eq!(recording_by_columns(&a), recording_from_dual(&q));
        }
    }

    #[test]
    fn zero_ops() {
        let o = SupportMatrix::zero();
        assert_eq!(gl_op(&o, 0, Dir::Lower), Some(m(&[(1, 1, 1)])));
        assert_eq!(gl_op(&o, 0, Dir::Raise), None);
        assert_eq!(gl_eps0(&m(&[(1, 1, 3)])), 3);
    }

    #[test]
    fn folded_basics() {
        let lam = Partition::from([2, 1]);
        for eps in [Eps::B, Eps::C] {
            let o = FoldedElement { a: FoldedMatrix::zero(eps), t: Tableau::highest(&lam) };
            let f = folded_op(&o, 0, Dir::Lower).unwrap();
            assert_eq!(f.a.base, m(&[(1, 1, eps.value())]));
            for i in 0..4 {
                assert!(folded_op(&o, i, Dir::Raise).is_none());
            }
            let v = kappa_x(&f, 5);
            assert_eq!(v.s.rows(), &[vec![1; eps.value() as usize]]);
            assert_eq!(kappa_x(&o, 5), CrystalVertex::highest(&lam, eps, 5));
        }
    }

    #[test]
    fn l_examples() {
        let o = FoldedElement { a: FoldedMatrix::zero(Eps::B), t: Tableau::empty() };
        assert_eq!(l_statistic(&o), 0);
        let d = FoldedElement { a: FoldedMatrix::new(m(&[(1, 1, 4), (2, 2, 2)]), Eps::C).unwrap(), t: Tableau::empty() };
        assert_eq!(l_statistic(&d), 2);
        let mut x = FoldedElement { a: FoldedMatrix::zero(Eps::C), t: Tableau::empty() };
        for k in 1..5 {
            x = folded_op(&x, 0, Dir::Lower).unwrap();
            assert_eq!(l_statistic(&x), k);
        }
    }

    #[test]
    fn replayed_dual_is_entrywise() {
        let t: Tableau = "2,3,3,4\n1,2,2\n1\n".parse().unwrap();
        assert!(t.is_semistandard(&Ordinary));
        assert_eq!(dual_by_replay(&t), t);
    }
}
