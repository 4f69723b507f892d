//! Tensor product multiplicities, LR pairs and Levi branching.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::CrystalGraph;
use crate::lr::{enumerate_lr, sharp, LrTableau};
use crate::partition::{Eps, Partition};
use crate::stats::{delta_at_most, nabla};
use crate::tableau::insert;
use crate::weight::dominant_weight;

/// Multiplicities keyed by (λ, level).
pub type Decomposition = BTreeMap<(Partition, u32), usize>;

/// Highest weight elements u ⊗ b₂ of B1 ⊗ B2, where u is the source of B1:
/// those b₂ with ε_i(b₂) ≤ ⟨wt u, ĥ_i⟩ for every i < rank.
pub fn tensor_decompose(b1: &CrystalGraph, b2: &CrystalGraph) -> Result<Decomposition> {
    if b1.eps != b2.eps {
        return Err(Error::EpsilonMismatch);
    }
    if b1.rank != b2.rank {
        return Err(Error::BadRank(format!("ranks {} and {} differ", b1.rank, b2.rank)));
    }
    let top = b1.vertices[b1.highest].weight();
    let mut out = Decomposition::new();
    for v in &b2.vertices {
        if (0..b1.rank).all(|i| v.eps_i(i) as i64 <= top.pairing(i)) {
            let w = top.add(&v.weight())?;
            let key = w.as_partition_level().expect("highest weights are dominant");
            *out.entry(key).or_insert(0) += 1;
        }
    }
    Ok(out)
}

fn check_dominant(lambda: &Partition, n: u32, eps: Eps) -> Result<()> {
    dominant_weight(lambda, n, eps).map(|_| ())
}

/// Pairs (U, V) ∈ LR^η_{μτ} × LR^λ_{ην} with τ ∈ P_x, ∇(U) ≤ m - 2μ₁/ε and
/// Δ((V^♯ → U^♯)_R) ≤ n.
pub fn enumerate_lr_pairs(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    m: u32,
    n: u32,
    eps: Eps,
) -> Result<Vec<(LrTableau, LrTableau)>> {
    check_dominant(lambda, m + n, eps)?;
    check_dominant(mu, m, eps)?;
    check_dominant(nu, n, eps)?;
    let mut out = Vec::new();
    let Some(t) = lambda.size().checked_sub(mu.size() + nu.size()) else {
        return Ok(out);
    };
    let e = eps.value() as usize;
    let nabla_bound = e * m as usize - 2 * mu.first();
    for tau in Partition::all_of_size(t).into_iter().filter(|p| p.is_in_px(eps)) {
        for eta in Partition::between(mu, lambda, mu.size() + t) {
            let us: Vec<LrTableau> = enumerate_lr(&eta, mu, &tau)
                .into_iter()
                .filter(|u| e * nabla(u, eps).expect("τ ∈ P_x") <= nabla_bound)
                .collect();
            if us.is_empty() {
                continue;
            }
            let vs = enumerate_lr(lambda, &eta, nu);
            for u in &us {
                let us_sharp = sharp(u);
                for v in &vs {
                    let rec = insert(&us_sharp, &sharp(v)).1;
                    if delta_at_most(&rec, eps, n) {
                        out.push((u.clone(), v.clone()));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// c^{(λ,m+n)}_{(μ,m)(ν,n)}.
pub fn lr_pair_count(lambda: &Partition, mu: &Partition, nu: &Partition, m: u32, n: u32, eps: Eps) -> Result<usize> {
    Ok(enumerate_lr_pairs(lambda, mu, nu, m, n, eps)?.len())
}

/// All λ with ℓ(λ) ≤ k and (λ, level) dominant, with nonzero LR-pair count.
pub fn lr_pair_decomposition(mu: &Partition, m: u32, nu: &Partition, n: u32, eps: Eps, k: usize) -> Result<Decomposition> {
    let width = (eps.value() * (m + n) / 2) as usize;
    let mut out = Decomposition::new();
    for lambda in Partition::all_in_box(k, width) {
        let c = lr_pair_count(&lambda, mu, nu, m, n, eps)?;
        if c > 0 {
            out.insert((lambda, m + n), c);
        }
    }
    Ok(out)
}

/// U ∈ LR^σ_{τλ} with τ ∈ P_x and Δ(U) ≤ n.
pub fn branch_levi(lambda: &Partition, n: u32, eps: Eps, sigma: &Partition) -> Result<Vec<LrTableau>> {
    check_dominant(lambda, n, eps)?;
    let mut out = Vec::new();
    let Some(t) = sigma.size().checked_sub(lambda.size()) else {
        return Ok(out);
    };
    for tau in Partition::all_of_size(t).into_iter().filter(|p| p.is_in_px(eps)) {
        for u in enumerate_lr(sigma, &tau, lambda) {
            if delta_at_most(&u.base, eps, n) {
                out.push(u);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_crystal;

    #[test]
    fn spin_squared() {
        let b = generate_crystal(&Partition::empty(), 1, Eps::B, 2).unwrap();
        let d = tensor_decompose(&b, &b).unwrap();
        let expected: Decomposition = [
            ((Partition::empty(), 2), 1),
            ((Partition::from([1]), 2), 1),
            ((Partition::from([1, 1]), 2), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(d, expected);
        assert_eq!(lr_pair_decomposition(&Partition::empty(), 1, &Partition::empty(), 1, Eps::B, 2).unwrap(), expected);
    }

    #[test]
    fn trivial_factor() {
        let b = generate_crystal(&Partition::from([1]), 2, Eps::C, 2).unwrap();
        let triv = generate_crystal(&Partition::empty(), 0, Eps::C, 2).unwrap();
        assert_eq!(triv.len(), 1);
        let d = tensor_decompose(&b, &triv).unwrap();
        assert_eq!(d, [((Partition::from([1]), 2), 1)].into_iter().collect());
    }

    #[test]
    fn multiplicity_free_pairs() {
        for lambda in [Partition::empty(), Partition::from([1]), Partition::from([1, 1])] {
            let pairs = enumerate_lr_pairs(&lambda, &Partition::empty(), &Partition::empty(), 1, 1, Eps::B).unwrap();
            assert_eq!(pairs.len(), 1);
        }
    }

    #[test]
    fn stable_examples() {
        let one = Partition::from([1]);
        // c^{(2)}_{(1)(1)} over η,τ in the stable range
        let c = lr_pair_count(&Partition::from([2]), &one, &one, 4, 4, Eps::B).unwrap();
        assert_eq!(c, 1);
        assert_eq!(branch_levi(&one, 4, Eps::B, &Partition::from([2])).unwrap().len(), 1);
        assert_eq!(branch_levi(&one, 4, Eps::B, &one).unwrap().len(), 1);
        assert_eq!(branch_levi(&Partition::empty(), 1, Eps::C, &Partition::from([2])).unwrap().len(), 1);
    }
}
