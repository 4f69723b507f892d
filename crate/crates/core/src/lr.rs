//! Littlewood–Richardson tableaux and the ♯ bijection.

use serde::{Deserialize, Serialize};

use crate::alphabet::{Letter, Ordinary};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::{insert_tableau, ReadMode, Tableau};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LrTableau {
    pub base: Tableau,
    pub content: Partition,
}

impl LrTableau {
    pub fn new(base: Tableau) -> Result<LrTableau> {
        if !is_lr(&base) {
            return Err(Error::BadTableau("not a Littlewood-Richardson tableau".into()));
        }
        let content = content_partition(&base).expect("lattice words have partition content");
        Ok(LrTableau { base, content })
    }

    /// Shape λ/μ with μ below and to the right.
    pub fn outer(&self) -> &Partition {
        self.base.outer()
    }

    pub fn inner(&self) -> &Partition {
        self.base.inner()
    }
}

fn content_partition(t: &Tableau) -> Option<Partition> {
    let m = t.content();
    Partition::new(m.into_iter().skip(1).collect()).ok()
}

/// Every prefix has at least as many i's as (i+1)'s.
pub fn is_lattice(w: &[Letter]) -> bool {
    let mut count: Vec<usize> = vec![0; w.iter().copied().max().unwrap_or(0) as usize + 2];
    for &a in w {
        let a = a as usize;
        count[a] += 1;
        if a > 1 && count[a] > count[a - 1] {
            return false;
        }
    }
    true
}

pub fn is_lr(t: &Tableau) -> bool {
    t.is_semistandard(&Ordinary) && is_lattice(&t.col_word())
}

/// All LR tableaux of shape λ/μ and content ν.
pub fn enumerate_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<LrTableau> {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return Vec::new();
    }
    let shape = Tableau::new(
        lambda.clone(),
        mu.clone(),
        (0..lambda.len()).map(|r| vec![1; lambda.get(r) - mu.get(r)]).collect(),
    )
    .expect("μ ⊆ λ");
    let cells = shape.reading_cells(ReadMode::Col);
    let mut grid: Vec<Vec<Letter>> = (0..lambda.len()).map(|r| vec![0; lambda.get(r) + 1]).collect();
    let mut count = vec![0usize; nu.len() + 2];
    let mut out = Vec::new();
    lr_fill(lambda, mu, nu, &cells, 0, &mut grid, &mut count, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn lr_fill(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    cells: &[(usize, usize)],
    k: usize,
    grid: &mut Vec<Vec<Letter>>,
    count: &mut Vec<usize>,
    out: &mut Vec<LrTableau>,
) {
    if k == cells.len() {
        let rows = (0..lambda.len())
            .map(|r| (mu.get(r) + 1..=lambda.get(r)).rev().map(|c| grid[r][c]).collect())
            .collect();
        let base = Tableau::new(lambda.clone(), mu.clone(), rows).expect("shape fixed");
        out.push(LrTableau { base, content: nu.clone() });
        return;
    }
    let (r, c) = cells[k];
    let is_cell = |r: usize, c: usize| c >= 1 && c <= lambda.get(r) && c > mu.get(r);
    let hi = if c > 1 && is_cell(r, c - 1) { grid[r][c - 1] as usize } else { nu.len() };
    let lo = if r + 1 < lambda.len() && is_cell(r + 1, c) { grid[r + 1][c] as usize + 1 } else { 1 };
    for x in lo..=hi.min(nu.len()) {
        if count[x] + 1 > nu.get(x - 1) || (x > 1 && count[x] + 1 > count[x - 1]) {
            continue;
        }
        count[x] += 1;
        grid[r][c] = x as Letter;
        lr_fill(lambda, mu, nu, cells, k + 1, grid, count, out);
        count[x] -= 1;
    }
}

pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> usize {
    enumerate_lr(lambda, mu, nu).len()
}

/// U^♯: row i holds each k as many times as row k of U holds i.
pub fn sharp(u: &LrTableau) -> Tableau {
    let nu = &u.content;
    let rows: Vec<Vec<Letter>> = (0..nu.len())
        .map(|i| {
            let mut row = Vec::with_capacity(nu.get(i));
            for (k, urow) in u.base.rows().iter().enumerate() {
                let m = urow.iter().filter(|&&x| x as usize == i + 1).count();
                row.extend(std::iter::repeat_n(k as Letter + 1, m));
            }
            row
        })
        .collect();
    Tableau::from_rows(rows).expect("row lengths are the content")
}

/// The LR tableau (V → H_μ)_R, provided V inserted into H_μ gives some H_λ.
pub fn sharp_inverse(v: &Tableau, mu: &Partition) -> Result<LrTableau> {
    let h = Tableau::highest(mu);
    let (p, rec) = insert_tableau(&h, v, ReadMode::Col, &Ordinary);
    if p != Tableau::highest(p.outer()) {
        return Err(Error::NotHighestWeight(format!("V inserted into H_{mu} is not highest weight")));
    }
    let content = Partition::new(v.rows().iter().map(|r| r.len()).collect())?;
    Ok(LrTableau { base: rec, content })
}

/// #k's in row i of V equals #i's in row k of U, for all i, k.
pub fn row_count_duality(u: &LrTableau, v: &Tableau) -> bool {
    let rows_u = u.base.rows().len();
    let rows_v = v.rows().len();
    let max_u = u.base.max_entry() as usize;
    let max_v = v.max_entry() as usize;
    for i in 1..=rows_v.max(max_u) {
        for k in 1..=rows_u.max(max_v) {
            let in_v = v.rows().get(i - 1).map_or(0, |r| r.iter().filter(|&&x| x as usize == k).count());
            let in_u = u.base.rows().get(k - 1).map_or(0, |r| r.iter().filter(|&&x| x as usize == i).count());
            if in_u != in_v {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_u() -> Tableau {
        "2,3,.,.,.\n1,2,3,.\n1,1,2\n1\n".parse().unwrap()
    }

    #[test]
    fn example_u_is_lr() {
        assert!(is_lr(&example_u()));
        let single: Tableau = "2\n".parse().unwrap();
        assert!(!is_lr(&single));
        assert!(is_lr(&Tableau::highest(&Partition::from([3, 1]))));
    }

    #[test]
    fn small_coefficients() {
        assert_eq!(lr_coefficient(&[2, 1].into(), &[1].into(), &[1, 1].into()), 1);
        assert_eq!(lr_coefficient(&[3, 2, 1].into(), &[2, 1].into(), &[2, 1].into()), 2);
        let all = enumerate_lr(&[5, 4, 3, 1].into(), &[3, 1].into(), &[4, 3, 2].into());
        assert!(all.iter().any(|u| u.base == example_u()));
        assert!(enumerate_lr(&[2].into(), &[1].into(), &[2].into()).is_empty());
    }

    #[test]
    fn sharp_on_example() {
        let u = LrTableau::new(example_u()).unwrap();
        let v = sharp(&u);
        assert_eq!(v, "2,3,3,4\n1,2,3\n1,2\n".parse::<Tableau>().unwrap());
        assert!(row_count_duality(&u, &v));
        assert_eq!(sharp_inverse(&v, &[3, 1].into()).unwrap(), u);
    }

    #[test]
    fn sharp_of_highest() {
        let lam = Partition::from([3, 2, 2]);
        let u = LrTableau::new(Tableau::highest(&lam)).unwrap();
        assert_eq!(sharp(&u), Tableau::highest(&lam));
    }

    #[test]
    fn sharp_inverse_rejects_non_highest() {
        let v: Tableau = "2\n".parse().unwrap();
        assert!(sharp_inverse(&v, &Partition::empty()).is_err());
    }
}
