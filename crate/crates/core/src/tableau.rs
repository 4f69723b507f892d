//! Tableaux drawn with row 1 at the bottom, rows right-justified, columns
//! numbered from the right. Row `r` (0-based here) holds its cells left to
//! right; the cell at position `p` sits in column `outer[r] - p`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alphabet::{GradedAlphabet, Grading, Letter, Ordinary, Word};
use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};
use crate::signature::{self, Dir};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReadMode {
    Row,
    #[default]
    Col,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTableau")]
pub struct Tableau {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<Letter>>,
}

#[derive(Deserialize)]
struct RawTableau {
    outer: Partition,
    #[serde(default)]
    inner: Partition,
    rows: Vec<Vec<Letter>>,
}

impl TryFrom<RawTableau> for Tableau {
    type Error = Error;
    fn try_from(r: RawTableau) -> Result<Tableau> {
        Tableau::new(r.outer, r.inner, r.rows)
    }
}

impl Tableau {
    pub fn new(outer: Partition, inner: Partition, rows: Vec<Vec<Letter>>) -> Result<Tableau> {
        if !outer.contains(&inner) {
            return Err(Error::ShapeMismatch(format!("{inner} is not inside {outer}")));
        }
        if rows.len() != outer.len() {
            return Err(Error::BadTableau(format!("{} rows for outer shape {outer}", rows.len())));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != outer.get(r) - inner.get(r) {
                return Err(Error::BadTableau(format!("row {} has {} cells", r + 1, row.len())));
            }
            if row.contains(&0) {
                return Err(Error::BadTableau("entries must be positive".into()));
            }
        }
        Ok(Tableau { outer, inner, rows })
    }

    /// A straight-shape tableau from its rows, bottom row first.
    pub fn from_rows(rows: Vec<Vec<Letter>>) -> Result<Tableau> {
        let outer = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        if outer.len() != rows.len() {
            return Err(Error::BadTableau("empty row below a nonempty one".into()));
        }
        Tableau::new(outer, Partition::empty(), rows)
    }

    pub fn empty() -> Tableau {
        Tableau { outer: Partition::empty(), inner: Partition::empty(), rows: Vec::new() }
    }

    /// The tableau of shape τ/τ with no cells.
    pub fn empty_skew(tau: &Partition) -> Tableau {
        Tableau { outer: tau.clone(), inner: tau.clone(), rows: vec![Vec::new(); tau.len()] }
    }

    /// H_λ: the k-th entry from the top of every column is k.
    pub fn highest(lambda: &Partition) -> Tableau {
        let rows = (0..lambda.len())
            .map(|r| {
                let width = lambda.get(r);
                (0..width)
                    .map(|p| {
                        let c = width - p;
                        let height = lambda.parts().iter().filter(|&&x| x >= c).count();
                        (height - r) as Letter
                    })
                    .collect()
            })
            .collect();
        Tableau { outer: lambda.clone(), inner: Partition::empty(), rows }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape { outer: self.outer.clone(), inner: self.inner.clone() }
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.num_cells() == 0
    }

    /// Entry in 0-based row `r` and 1-based column `c` counted from the right.
    pub fn entry(&self, r: usize, c: usize) -> Option<Letter> {
        let width = self.outer.get(r);
        if c == 0 || c > width || c <= self.inner.get(r) {
            return None;
        }
        Some(self.rows[r][width - c])
    }

    /// Entries of column c, top to bottom.
    pub fn column(&self, c: usize) -> Vec<Letter> {
        (0..self.outer.len()).rev().filter_map(|r| self.entry(r, c)).collect()
    }

    /// Topmost entry of column c.
    pub fn column_top(&self, c: usize) -> Option<Letter> {
        (0..self.outer.len()).rev().find_map(|r| self.entry(r, c))
    }

    /// Cells (row, column) in reading order.
    pub fn reading_cells(&self, mode: ReadMode) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_cells());
        match mode {
            ReadMode::Col => {
                for c in 1..=self.outer.first() {
                    for r in (0..self.outer.len()).rev() {
                        if self.entry(r, c).is_some() {
                            out.push((r, c));
                        }
                    }
                }
            }
            ReadMode::Row => {
                for r in (0..self.outer.len()).rev() {
                    for c in self.inner.get(r) + 1..=self.outer.get(r) {
                        out.push((r, c));
                    }
                }
            }
        }
        out
    }

    pub fn reading_word(&self, mode: ReadMode) -> Word {
        self.reading_cells(mode).into_iter().map(|(r, c)| self.entry(r, c).unwrap()).collect()
    }

    pub fn col_word(&self) -> Word {
        self.reading_word(ReadMode::Col)
    }

    /// Same cells, refilled from a word in reading order.
    pub fn refill(&self, word: &[Letter], mode: ReadMode) -> Tableau {
        let mut t = self.clone();
        for ((r, c), &a) in self.reading_cells(mode).into_iter().zip(word) {
            let width = t.outer.get(r);
            t.rows[r][width - c] = a;
        }
        t
    }

    pub fn is_semistandard<G: Grading>(&self, g: &G) -> bool {
        for r in 0..self.rows.len() {
            let row = &self.rows[r];
            for w in row.windows(2) {
                if w[0] > w[1] || (w[0] == w[1] && g.is_odd(w[0])) {
                    return false;
                }
            }
            if r + 1 < self.rows.len() {
                for c in 1..=self.outer.get(r + 1) {
                    if let (Some(top), Some(bottom)) = (self.entry(r + 1, c), self.entry(r, c)) {
                        if top > bottom || (top == bottom && !g.is_odd(top)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// m_a(T) for every letter, indexed by letter (index 0 unused).
    pub fn content(&self) -> Vec<usize> {
        let max = self.max_entry() as usize;
        let mut m = vec![0; max + 1];
        for row in &self.rows {
            for &a in row {
                m[a as usize] += 1;
            }
        }
        m
    }

    pub fn count(&self, a: Letter) -> usize {
        self.rows.iter().flatten().filter(|&&x| x == a).count()
    }

    pub fn max_entry(&self) -> Letter {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Schensted insertion of one letter, bottom row first.
    ///
    /// An even letter bumps the rightmost entry smaller than it, an odd letter
    /// the rightmost entry not larger than it; with nothing to bump the letter
    /// goes to the left end of the row. Returns the new cell (row, column).
    pub fn insert_letter<G: Grading>(&mut self, a: Letter, g: &G) -> (usize, usize) {
        assert!(self.is_straight(), "insertion needs a straight shape");
        let mut a = a;
        let mut r = 0;
        loop {
            if r == self.rows.len() {
                self.rows.push(vec![a]);
                self.sync_outer();
                return (r, 1);
            }
            let odd = g.is_odd(a);
            let row = &mut self.rows[r];
            let smaller = row.iter().take_while(|&&x| if odd { x <= a } else { x < a }).count();
            if smaller == 0 {
                row.insert(0, a);
                let c = row.len();
                self.sync_outer();
                return (r, c);
            }
            std::mem::swap(&mut row[smaller - 1], &mut a);
            r += 1;
        }
    }

    fn sync_outer(&mut self) {
        self.outer = Partition::raw(self.rows.iter().map(|r| r.len()).collect());
    }

    pub fn insert_word<G: Grading>(&mut self, w: &[Letter], g: &G) {
        for &a in w {
            self.insert_letter(a, g);
        }
    }

    /// Ordinary-alphabet convenience for [`Tableau::insert_letter`].
    pub fn row_insert(&self, a: Letter) -> Tableau {
        let mut t = self.clone();
        t.insert_letter(a, &Ordinary);
        t
    }

    /// Tableau crystal operator through the column word.
    pub fn crystal_op(&self, i: Letter, dir: Dir) -> Option<Tableau> {
        let w = self.col_word();
        signature::word_op(&w, i, dir).map(|w2| self.refill(&w2, ReadMode::Col))
    }

    /// Rows joined by '/', bottom row first; "-" for no rows.
    pub fn compact(&self) -> String {
        if self.rows.is_empty() {
            return "-".into();
        }
        self.to_string().trim_end().replace('\n', "/")
    }

    pub fn parse_compact(s: &str) -> Result<Tableau> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Tableau::empty());
        }
        s.replace('/', "\n").parse()
    }

    /// Rows printed from the top with the English orientation.
    pub fn english(&self) -> String {
        let mut s = String::new();
        for r in 0..self.rows.len() {
            let width = self.outer.get(r);
            let cells: Vec<String> = (1..=width)
                .map(|c| self.entry(r, c).map_or(".".to_string(), |a| a.to_string()))
                .collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s
    }
}

/// (w → S) for the reading word of T, together with (T → S)_R.
///
/// The cell created by the k-th letter records the row of T that letter came from.
pub fn insert_tableau<G: Grading>(s: &Tableau, t: &Tableau, mode: ReadMode, g: &G) -> (Tableau, Tableau) {
    let mut p = s.clone();
    let mut rec: HashMap<(usize, usize), Letter> = HashMap::new();
    for (r, c) in t.reading_cells(mode) {
        let a = t.entry(r, c).unwrap();
        let cell = p.insert_letter(a, g);
        rec.insert(cell, r as Letter + 1);
    }
    let recording = recording_from_cells(&p.outer, &s.outer, &rec);
    (p, recording)
}

pub(crate) fn recording_from_cells(
    outer: &Partition,
    inner: &Partition,
    cells: &HashMap<(usize, usize), Letter>,
) -> Tableau {
    let rows = (0..outer.len())
        .map(|r| (inner.get(r) + 1..=outer.get(r)).rev().map(|c| cells[&(r, c)]).collect())
        .collect();
    Tableau { outer: outer.clone(), inner: inner.clone(), rows }
}

/// Ordinary-alphabet convenience for [`insert_tableau`] with the column word.
pub fn insert(s: &Tableau, t: &Tableau) -> (Tableau, Tableau) {
    insert_tableau(s, t, ReadMode::Col, &Ordinary)
}

/// All semistandard tableaux of a shape with letters 1..=max, in reading-word order.
pub fn enumerate_sst_with<G: Grading + Sync>(shape: &SkewShape, max: Letter, g: &G) -> Vec<Tableau> {
    let outer = &shape.outer;
    let inner = &shape.inner;
    let mut rows: Vec<Vec<Letter>> = (0..outer.len()).map(|r| vec![0; outer.get(r) - inner.get(r)]).collect();
    let mut out = Vec::new();
    fill(outer, inner, max, g, 0, 0, &mut rows, &mut out);
    out.sort_by_cached_key(|t| t.col_word());
    out
}

#[allow(clippy::too_many_arguments)]
fn fill<G: Grading>(
    outer: &Partition,
    inner: &Partition,
    max: Letter,
    g: &G,
    r: usize,
    p: usize,
    rows: &mut Vec<Vec<Letter>>,
    out: &mut Vec<Tableau>,
) {
    if r == rows.len() {
        out.push(Tableau { outer: outer.clone(), inner: inner.clone(), rows: rows.clone() });
        return;
    }
    if p == rows[r].len() {
        fill(outer, inner, max, g, r + 1, 0, rows, out);
        return;
    }
    let c = outer.get(r) - p;
    let left = if p > 0 { Some(rows[r][p - 1]) } else { None };
    let below = if r > 0 && c > inner.get(r - 1) { Some(rows[r - 1][outer.get(r - 1) - c]) } else { None };
    let lo = left.unwrap_or(1).max(1);
    let hi = below.unwrap_or(max).min(max);
    for x in lo..=hi {
        if let Some(l) = left {
            if x == l && g.is_odd(x) {
                continue;
            }
        }
        if let Some(b) = below {
            if x == b && !g.is_odd(x) {
                continue;
            }
        }
        rows[r][p] = x;
        fill(outer, inner, max, g, r, p + 1, rows, out);
    }
}

pub fn enumerate_sst(shape: &SkewShape, alphabet: &GradedAlphabet) -> Vec<Tableau> {
    enumerate_sst_with(shape, alphabet.len() as Letter, alphabet)
}

/// Ordinary tableaux with entries at most k.
pub fn enumerate_sst_upto(shape: &SkewShape, k: Letter) -> Vec<Tableau> {
    enumerate_sst_with(shape, k, &Ordinary)
}

impl fmt::Display for Tableau {
    /// One line per row, bottom row first; inner cells are dots.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            let mut cells: Vec<String> = row.iter().map(|a| a.to_string()).collect();
            cells.extend(std::iter::repeat_n(".".to_string(), self.inner.get(r)));
            writeln!(f, "{}", cells.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Tableau> {
        let mut rows = Vec::new();
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let toks: Vec<&str> = line.split(',').map(str::trim).collect();
            let dots = toks.iter().rev().take_while(|t| **t == ".").count();
            let mut row = Vec::new();
            for t in &toks[..toks.len() - dots] {
                let a: Letter = t.parse().map_err(|e| Error::Parse(format!("entry '{t}': {e}")))?;
                row.push(a);
            }
            outer.push(toks.len());
            inner.push(dots);
            rows.push(row);
        }
        let outer = Partition::new(outer)?;
        let inner = Partition::new(inner)?;
        if outer.len() != rows.len() {
            return Err(Error::BadTableau("empty row".into()));
        }
        Tableau::new(outer, inner, rows)
    }
}
