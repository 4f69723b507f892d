//! The crystal of pairs (S, T) with S of shape in P_x.

use serde::{Deserialize, Serialize};

use crate::alphabet::{Letter, Ordinary};
use crate::error::{Error, Result};
use crate::partition::{Eps, Partition};
use crate::signature::{bracket, word_op, Dir, Sign};
use crate::stats::{delta_at_most, delta_scaled};
use crate::tableau::{insert, ReadMode, Tableau};
use crate::weight::{dominant_weight, WeightVector};

/// Signs of the zero node, listed left to right as (…, σ₂, σ₁).
///
/// The first entry stands for the infinite run of + over the empty columns.
/// For ε = 1 entry k is a column, for ε = 2 a pair of columns (2k, 2k-1).
pub fn zero_signs(s: &Tableau, eps: Eps) -> Vec<Sign> {
    let width = s.outer().first();
    let mut signs = vec![Sign::Plus];
    match eps {
        Eps::B => {
            for k in (1..=width).rev() {
                let top = s.column_top(k).expect("nonempty column");
                signs.push(if top == 1 { Sign::Minus } else { Sign::Plus });
            }
        }
        Eps::C => {
            for k in (1..=width / 2).rev() {
                let left = s.column_top(2 * k).expect("nonempty column");
                let right = s.column_top(2 * k - 1).expect("nonempty column");
                signs.push(match (left, right) {
                    (1, 1) => Sign::Minus,
                    (l, r) if l >= 2 && r >= 2 => Sign::Plus,
                    _ => Sign::Dot,
                });
            }
        }
    }
    signs
}

/// Display position p in [`zero_signs`] refers to column (or pair) `count - p`.
fn zero_target(s: &Tableau, eps: Eps, dir: Dir) -> Option<usize> {
    let signs = zero_signs(s, eps);
    let alive = bracket(&signs, Sign::Minus);
    let n = signs.len();
    let pos = match dir {
        Dir::Raise => (0..n).find(|&p| alive[p] && signs[p] == Sign::Minus)?,
        Dir::Lower => (0..n).rev().find(|&p| alive[p] && signs[p] == Sign::Plus)?,
    };
    Some(n - pos)
}

/// Ẽ₀ on the first component: removes a 1 (ε = 1) or a 1-1 domino (ε = 2).
pub fn e0_tableau(s: &Tableau, eps: Eps) -> Option<Tableau> {
    let k = zero_target(s, eps, Dir::Raise)?;
    let col = match eps {
        Eps::B => k,
        Eps::C => 2 * k,
    };
    let height = s.column(col).len();
    let r = height - 1;
    let mut rows = s.rows().to_vec();
    let cells = eps.value() as usize;
    debug_assert_eq!(s.outer().get(r), col, "removed cells must be at the left end of a row");
    rows[r].drain(..cells);
    if rows[r].is_empty() {
        rows.pop();
    }
    Some(Tableau::from_rows(rows).expect("removal keeps a partition shape"))
}

/// F̃₀ on the first component: adds a 1 or a 1-1 domino on top of the target column.
pub fn f0_tableau(s: &Tableau, eps: Eps) -> Option<Tableau> {
    let k = zero_target(s, eps, Dir::Lower)?;
    let col = match eps {
        Eps::B => k,
        Eps::C => 2 * k,
    };
    let height = s.column(col).len();
    let mut rows = s.rows().to_vec();
    if height == rows.len() {
        rows.push(Vec::new());
    }
    let cells = eps.value() as usize;
    for _ in 0..cells {
        rows[height].insert(0, 1);
    }
    Tableau::from_rows(rows).ok()
}

/// A vertex (S, T) at level n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CrystalVertex {
    pub s: Tableau,
    pub t: Tableau,
    pub eps: Eps,
    pub level: u32,
}

impl CrystalVertex {
    pub fn new(s: Tableau, t: Tableau, eps: Eps, level: u32) -> Result<CrystalVertex> {
        if !s.is_straight() || !t.is_straight() {
            return Err(Error::ShapeMismatch("S and T must have straight shapes".into()));
        }
        if !s.outer().is_in_px(eps) {
            return Err(Error::NotInPx(s.outer().to_string()));
        }
        if !s.is_semistandard(&Ordinary) || !t.is_semistandard(&Ordinary) {
            return Err(Error::BadTableau("S and T must be semistandard".into()));
        }
        Ok(CrystalVertex { s, t, eps, level })
    }

    /// (∅, H_λ).
    pub fn highest(lambda: &Partition, eps: Eps, level: u32) -> CrystalVertex {
        CrystalVertex { s: Tableau::empty(), t: Tableau::highest(lambda), eps, level }
    }

    pub fn lambda(&self) -> &Partition {
        self.t.outer()
    }

    /// (T → S)_R.
    pub fn recording(&self) -> Tableau {
        insert(&self.s, &self.t).1
    }

    /// ε·Δ of the recording tableau.
    pub fn delta_scaled(&self) -> usize {
        delta_scaled(&self.recording())
    }

    /// Membership in T(λ, level).
    pub fn is_member(&self) -> bool {
        delta_at_most(&self.recording(), self.eps, self.level)
    }

    /// wt(S,T) + level·Λ₀.
    pub fn weight(&self) -> WeightVector {
        let mut w = WeightVector::zero(self.eps);
        w.level = self.level as i64;
        for tab in [&self.s, &self.t] {
            for &a in tab.rows().iter().flatten() {
                *w.coeffs.entry(a as usize).or_insert(0) += 1;
            }
        }
        w
    }

    pub fn max_entry(&self) -> Letter {
        self.s.max_entry().max(self.t.max_entry())
    }

    pub fn size(&self) -> usize {
        self.s.num_cells() + self.t.num_cells()
    }

    pub fn e0(&self) -> Option<CrystalVertex> {
        let s = e0_tableau(&self.s, self.eps)?;
        Some(CrystalVertex { s, ..self.clone() })
    }

    pub fn f0(&self) -> Option<CrystalVertex> {
        let s = f0_tableau(&self.s, self.eps)?;
        Some(CrystalVertex { s, ..self.clone() })
    }

    /// Ẽ_i / F̃_i for i ≥ 1, acting on w(S)⊗w(T).
    pub fn levi(&self, i: usize, dir: Dir) -> Option<CrystalVertex> {
        let ws = self.s.col_word();
        let mut w = ws.clone();
        w.extend(self.t.col_word());
        let w2 = word_op(&w, i as Letter, dir)?;
        let (a, b) = w2.split_at(ws.len());
        Some(CrystalVertex {
            s: self.s.refill(a, ReadMode::Col),
            t: self.t.refill(b, ReadMode::Col),
            ..self.clone()
        })
    }

    /// The operator on T(λ) (no level restriction).
    pub fn op(&self, i: usize, dir: Dir) -> Option<CrystalVertex> {
        match (i, dir) {
            (0, Dir::Raise) => self.e0(),
            (0, Dir::Lower) => self.f0(),
            _ => self.levi(i, dir),
        }
    }

    /// The operator on T(λ, level): results outside the level are zero.
    pub fn op_at_level(&self, i: usize, dir: Dir) -> Option<CrystalVertex> {
        self.op(i, dir).filter(|v| v.is_member())
    }

    /// ε_i by iterating Ẽ_i.
    pub fn eps_i(&self, i: usize) -> usize {
        let mut v = self.clone();
        let mut k = 0;
        while let Some(w) = v.op(i, Dir::Raise) {
            v = w;
            k += 1;
        }
        k
    }

    /// (ε_i, φ_i) with φ_i = ⟨wt, ĥ_i⟩ + ε_i.
    pub fn eps_phi(&self, i: usize) -> (usize, i64) {
        let e = self.eps_i(i);
        (e, self.weight().pairing(i) + e as i64)
    }
}

/// Λ(λ, n) after checking dominance.
pub fn highest_weight(lambda: &Partition, n: u32, eps: Eps) -> Result<WeightVector> {
    dominant_weight(lambda, n, eps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn example_b() {
        let v = CrystalVertex::new(tab("1,2,3,4,5\n1,3,3\n1\n"), tab("2,3\n2\n"), Eps::B, 10).unwrap();
        let signs: String = zero_signs(&v.s, Eps::B).iter().map(|s| s.symbol()).collect();
        assert_eq!(signs, "+-+-+-");
        assert_eq!(v.e0().unwrap().s, tab("1,2,3,4,5\n1,3,3\n"));
        assert_eq!(v.f0().unwrap().s, tab("1,1,2,3,4,5\n1,3,3\n1\n"));
        assert_eq!(v.eps_i(0), 1);
    }

    #[test]
    fn example_c() {
        let v = CrystalVertex::new(tab("1,1,1,2,2,3,4,5\n1,1,3,3\n"), tab("2,3\n2\n"), Eps::C, 10).unwrap();
        let signs: String = zero_signs(&v.s, Eps::C).iter().map(|s| s.symbol()).collect();
        assert_eq!(signs, "+-.-+");
        assert_eq!(v.e0().unwrap().s, tab("1,2,2,3,4,5\n1,1,3,3\n"));
        assert_eq!(v.f0().unwrap().s, tab("1,1,1,1,1,2,2,3,4,5\n1,1,3,3\n"));
    }

    #[test]
    fn highest_vertex() {
        let lam = Partition::from([2, 1]);
        let h = CrystalVertex::highest(&lam, Eps::B, 2);
        assert!(h.e0().is_none());
        for i in 1..5 {
            assert!(h.levi(i, Dir::Raise).is_none());
            assert_eq!(h.eps_i(i), 0);
        }
        let h1 = CrystalVertex::highest(&Partition::from([1]), Eps::B, 2);
        assert_eq!(h1.eps_phi(0), (0, 0));
        let f = h1.levi(1, Dir::Lower).unwrap();
        assert_eq!(f.t, tab("2\n"));
    }
}
