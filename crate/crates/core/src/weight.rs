use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Eps, Partition};

/// `level * Λ₀ + Σ coeffs[i] * ε̂_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    pub level: i64,
    pub coeffs: BTreeMap<usize, i64>,
    pub eps: Eps,
}

impl WeightVector {
    pub fn zero(eps: Eps) -> WeightVector {
        WeightVector { level: 0, coeffs: BTreeMap::new(), eps }
    }

    pub fn lambda0(eps: Eps) -> WeightVector {
        WeightVector { level: 1, ..WeightVector::zero(eps) }
    }

    pub fn eps_hat(i: usize, eps: Eps) -> WeightVector {
        let mut w = WeightVector::zero(eps);
        w.coeffs.insert(i, 1);
        w
    }

    /// α̂₀ = -ε ε̂₁ and α̂_i = ε̂_i - ε̂_{i+1}.
    pub fn simple_root(i: usize, eps: Eps) -> WeightVector {
        let mut w = WeightVector::zero(eps);
        if i == 0 {
            w.coeffs.insert(1, -(eps.value() as i64));
        } else {
            w.coeffs.insert(i, 1);
            w.coeffs.insert(i + 1, -1);
        }
        w
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    fn combine(&self, other: &WeightVector, sign: i64) -> Result<WeightVector> {
        if self.eps != other.eps {
            return Err(Error::EpsilonMismatch);
        }
        let mut coeffs = self.coeffs.clone();
        for (&i, &c) in &other.coeffs {
            *coeffs.entry(i).or_insert(0) += sign * c;
        }
        coeffs.retain(|_, c| *c != 0);
        Ok(WeightVector { level: self.level + sign * other.level, coeffs, eps: self.eps })
    }

    pub fn add(&self, other: &WeightVector) -> Result<WeightVector> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &WeightVector) -> Result<WeightVector> {
        self.combine(other, -1)
    }

    /// ⟨self, ĥ_i⟩.
    pub fn pairing(&self, i: usize) -> i64 {
        if i == 0 {
            // 2/ε is 2 for b and 1 for c.
            self.level - (2 / self.eps.value() as i64) * self.coeff(1)
        } else {
            self.coeff(i) - self.coeff(i + 1)
        }
    }

    /// Rewrite a weight of the rank-k truncation so that ε̂_k has coefficient 0.
    ///
    /// Uses that ε̂_1 + ... + ε̂_k and (2/ε)Λ₀ pair identically with ĥ_0..ĥ_{k-1}.
    pub fn normalize_rank(&self, k: usize) -> WeightVector {
        let ck = self.coeff(k);
        let mut coeffs = BTreeMap::new();
        for i in 1..=k {
            let c = self.coeff(i) - ck;
            if c != 0 {
                coeffs.insert(i, c);
            }
        }
        WeightVector { level: self.level - (2 / self.eps.value() as i64) * ck, coeffs, eps: self.eps }
    }

    /// The pair (λ, n) if this weight is Λ(λ,n) for a partition λ.
    pub fn as_partition_level(&self) -> Option<(Partition, u32)> {
        if self.level < 0 || self.coeffs.values().any(|&c| c < 0) {
            return None;
        }
        let max = self.coeffs.keys().next_back().copied().unwrap_or(0);
        let parts: Vec<usize> = (1..=max).map(|i| self.coeff(i) as usize).collect();
        let p = Partition::new(parts).ok()?;
        Some((p, self.level as u32))
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}L0", self.level)?;
        for (i, c) in &self.coeffs {
            write!(f, "{}{}e{}", if *c >= 0 { "+" } else { "-" }, c.abs(), i)?;
        }
        Ok(())
    }
}

/// Λ(λ,n) = nΛ₀ + Σ λ_i ε̂_i, defined when 2λ₁ ≤ εn.
pub fn dominant_weight(lambda: &Partition, n: u32, eps: Eps) -> Result<WeightVector> {
    if !lambda.is_dominant_at(n, eps) {
        return Err(Error::NotDominant { lambda1: lambda.first(), n, eps: eps.value() });
    }
    let coeffs = lambda.parts().iter().enumerate().map(|(i, &p)| (i + 1, p as i64)).collect();
    Ok(WeightVector { level: n as i64, coeffs, eps })
}

/// Sends fundamental-weight coefficients (a₁..a_k) of the rank-k dual algebra
/// to (λ, n) with λ = (a₁+..+a_{k-1}, .., a₁+a₂, a₁).
pub fn dagger_dictionary(a: &[u32], eps: Eps) -> (Partition, u32) {
    let k = a.len();
    if k == 0 {
        return (Partition::empty(), 0);
    }
    let lambda: Vec<usize> = (1..k).map(|j| a[..k - j].iter().map(|&x| x as usize).sum()).collect();
    let head: u32 = a[..k - 1].iter().sum();
    let n = match eps {
        Eps::B => 2 * head + a[k - 1],
        Eps::C => head + a[k - 1],
    };
    (Partition::new(lambda).expect("partial sums decrease"), n)
}

/// Inverse of [`dagger_dictionary`] at rank k.
pub fn dagger_inverse(lambda: &Partition, n: u32, k: usize, eps: Eps) -> Result<Vec<u32>> {
    if k < 1 || lambda.len() + 1 > k {
        return Err(Error::BadRank(format!("need ℓ(λ) ≤ k-1, got ℓ({lambda}) = {} with k = {k}", lambda.len())));
    }
    if !lambda.is_dominant_at(n, eps) {
        return Err(Error::NotDominant { lambda1: lambda.first(), n, eps: eps.value() });
    }
    let mut a = vec![0u32; k];
    for j in 1..k {
        a[k - j - 1] = (lambda.get(j - 1) - lambda.get(j)) as u32;
    }
    a[k - 1] = match eps {
        Eps::B => n - 2 * lambda.first() as u32,
        Eps::C => n - lambda.first() as u32,
    };
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominant_examples() {
        let w = dominant_weight(&Partition::from([1]), 2, Eps::B).unwrap();
        assert_eq!(w.level, 2);
        assert_eq!(w.coeffs, BTreeMap::from([(1, 1)]));
        let w = dominant_weight(&Partition::empty(), 1, Eps::C).unwrap();
        assert_eq!(w.level, 1);
        assert!(w.coeffs.is_empty());
        assert!(dominant_weight(&Partition::from([2]), 1, Eps::B).is_err());
    }

    #[test]
    fn cartan_pairings() {
        for eps in [Eps::B, Eps::C] {
            let e = eps.value() as i64;
            let a0 = WeightVector::simple_root(0, eps);
            let a1 = WeightVector::simple_root(1, eps);
            let a2 = WeightVector::simple_root(2, eps);
            assert_eq!(a0.pairing(0), 2);
            assert_eq!(a1.pairing(1), 2);
            assert_eq!(a0.pairing(1), -e);
            assert_eq!(a1.pairing(0), -2 / e);
            assert_eq!(a1.pairing(2), -1);
            assert_eq!(a2.pairing(1), -1);
            assert_eq!(a0.pairing(2), 0);
        }
    }

    #[test]
    fn mismatched_types() {
        assert_eq!(
            WeightVector::zero(Eps::B).add(&WeightVector::zero(Eps::C)),
            Err(Error::EpsilonMismatch)
        );
    }

    #[test]
    fn dictionary_examples() {
        assert_eq!(dagger_dictionary(&[0, 1], Eps::B), (Partition::empty(), 1));
        assert_eq!(dagger_dictionary(&[1, 0], Eps::B), (Partition::from([1]), 2));
        assert_eq!(dagger_dictionary(&[0, 1], Eps::C), (Partition::empty(), 1));
    }

    #[test]
    fn dictionary_is_a_bijection_on_a_box() {
        for eps in [Eps::B, Eps::C] {
            for k in 1..=4usize {
                let mut seen = std::collections::HashSet::new();
                let total = 4usize.pow(k as u32);
                for code in 0..total {
                    let a: Vec<u32> = (0..k).map(|i| ((code / 4usize.pow(i as u32)) % 4) as u32).collect();
                    let (lambda, n) = dagger_dictionary(&a, eps);
                    assert!(lambda.len() < k.max(1));
                    assert!(lambda.is_dominant_at(n, eps));
                    assert_eq!(dagger_inverse(&lambda, n, k, eps).unwrap(), a);
                    assert!(seen.insert((lambda, n)));
                }
            }
        }
    }

    #[test]
    fn dominant_pairings_nonnegative() {
        for eps in [Eps::B, Eps::C] {
            for lambda in Partition::all_in_box(3, 3) {
                for n in 0..8 {
                    if let Ok(w) = dominant_weight(&lambda, n, eps) {
                        for i in 0..5 {
                            assert!(w.pairing(i) >= 0);
                        }
                    }
                }
            }
        }
    }
}
