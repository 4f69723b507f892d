//! The statistics Δ and ∇ on LR tableaux.

use num_rational::Rational64;

use crate::crystal;
use crate::error::{Error, Result};
use crate::lr::{sharp, LrTableau};
use crate::partition::Eps;
use crate::tableau::{ReadMode, Tableau};

/// ε·Δ(U): the largest μ_k + 2r over weakly decreasing cell chains of length r
/// starting in row k, where rows weakly decrease and columns strictly increase
/// along the chain. The empty chain gives μ₁.
pub fn delta_scaled(u: &Tableau) -> usize {
    let cells = u.reading_cells(ReadMode::Col);
    let inner = u.inner();
    // chain lengths from each cell, visiting columns from the left
    let mut best: Vec<usize> = vec![1; cells.len()];
    let mut value = inner.first();
    for a in (0..cells.len()).rev() {
        let (ra, ca) = cells[a];
        let xa = u.entry(ra, ca).unwrap();
        for b in a + 1..cells.len() {
            let (rb, cb) = cells[b];
            if cb > ca && rb <= ra && u.entry(rb, cb).unwrap() <= xa {
                best[a] = best[a].max(best[b] + 1);
            }
        }
        value = value.max(inner.get(ra) + 2 * best[a]);
    }
    value
}

pub fn delta(u: &Tableau, eps: Eps) -> Rational64 {
    Rational64::new(delta_scaled(u) as i64, eps.value() as i64)
}

pub fn delta_lr(u: &LrTableau, eps: Eps) -> Rational64 {
    delta(&u.base, eps)
}

/// Δ(U) ≤ n.
pub fn delta_at_most(u: &Tableau, eps: Eps, n: u32) -> bool {
    delta_scaled(u) as u64 <= eps.value() as u64 * n as u64
}

/// ∇(U): how often Ẽ₀ can remove from U^♯.
pub fn nabla(u: &LrTableau, eps: Eps) -> Result<usize> {
    if !u.content.is_in_px(eps) {
        return Err(Error::NotInPx(u.content.to_string()));
    }
    let mut v = sharp(u);
    let mut k = 0;
    while let Some(w) = crystal::e0_tableau(&v, eps) {
        v = w;
        k += 1;
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    #[test]
    fn delta_examples() {
        let u: Tableau = "1,4,.,.,.\n2,3,.,.\n1,2\n1\n".parse().unwrap();
        assert_eq!(u.col_word(), vec![1, 2, 1, 3, 2, 4, 1]);
        assert_eq!(delta(&u, Eps::B), Rational64::from_integer(8));
        let u2: Tableau = "2,3,.,.,.,.\n2,.,.\n1,1\n".parse().unwrap();
        assert_eq!(delta(&u2, Eps::C), Rational64::from_integer(4));
        let h = Tableau::highest(&Partition::from([2, 1]));
        assert_eq!(delta(&h, Eps::B), Rational64::from_integer(4));
        let e = Tableau::empty_skew(&Partition::from([4, 2]));
        assert_eq!(delta(&e, Eps::C), Rational64::from_integer(2));
    }

    #[test]
    fn nabla_examples() {
        let u = LrTableau::new("2,3,.,.,.\n1,2,3,.\n1,1,2\n1\n".parse().unwrap()).unwrap();
        assert_eq!(nabla(&u, Eps::B).unwrap(), 1);
        let h = LrTableau::new(Tableau::highest(&Partition::from([2, 1]))).unwrap();
        assert_eq!(nabla(&h, Eps::B).unwrap(), 2);
        let empty = LrTableau::new(Tableau::empty_skew(&Partition::from([2]))).unwrap();
        assert_eq!(nabla(&empty, Eps::B).unwrap(), 0);
        assert!(nabla(&h, Eps::C).is_err());
    }
}
