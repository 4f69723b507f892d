//! Truncated characters over graded alphabets, and the Weyl dimension formula.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde_json::json;

use crate::alphabet::{GradedAlphabet, Letter};
use crate::decompose::{branch_levi, lr_pair_count};
use crate::error::Result;
use crate::partition::{Eps, Partition, SkewShape};
use crate::stats::delta_at_most;
use crate::tableau::{enumerate_sst, insert_tableau, ReadMode, Tableau};
use crate::weight::dominant_weight;

/// Monomial key: (q exponent, exponent of each letter).
pub type Monomial = (u32, Vec<u32>);

/// Σ c · q^n · x^e, trusted up to total x-degree `cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterPoly {
    terms: BTreeMap<Monomial, BigInt>,
    nvars: usize,
    cutoff: usize,
}

impl CharacterPoly {
    pub fn zero(nvars: usize, cutoff: usize) -> CharacterPoly {
        CharacterPoly { terms: BTreeMap::new(), nvars, cutoff }
    }

    pub fn one(nvars: usize, cutoff: usize) -> CharacterPoly {
        CharacterPoly::monomial(nvars, cutoff, 0, vec![0; nvars], BigInt::from(1))
    }

    pub fn monomial(nvars: usize, cutoff: usize, q: u32, exps: Vec<u32>, coeff: BigInt) -> CharacterPoly {
        let mut p = CharacterPoly::zero(nvars, cutoff);
        p.add_term(q, exps, coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, q: u32, exps: &[u32]) -> BigInt {
        self.terms.get(&(q, exps.to_vec())).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Adds a term; terms above the cutoff are dropped.
    pub fn add_term(&mut self, q: u32, exps: Vec<u32>, coeff: BigInt) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if exps.iter().sum::<u32>() as usize > self.cutoff || coeff == BigInt::from(0) {
            return;
        }
        let key = (q, exps);
        let c = self.terms.entry(key.clone()).or_default();
        *c += coeff;
        if *c == BigInt::from(0) {
            self.terms.remove(&key);
        }
    }

    /// Lowers the cutoff, dropping terms above it.
    pub fn truncate(&self, cutoff: usize) -> CharacterPoly {
        let cutoff = cutoff.min(self.cutoff);
        let mut p = CharacterPoly::zero(self.nvars, cutoff);
        for ((q, e), c) in &self.terms {
            p.add_term(*q, e.clone(), c.clone());
        }
        p
    }

    pub fn add(&self, other: &CharacterPoly) -> CharacterPoly {
        let mut p = self.truncate(other.cutoff);
        for ((q, e), c) in &other.terms {
            p.add_term(*q, e.clone(), c.clone());
        }
        p
    }

    pub fn scale(&self, k: &BigInt) -> CharacterPoly {
        let mut p = CharacterPoly::zero(self.nvars, self.cutoff);
        for ((q, e), c) in &self.terms {
            p.add_term(*q, e.clone(), c * k);
        }
        p
    }

    pub fn mul(&self, other: &CharacterPoly) -> CharacterPoly {
        assert_eq!(self.nvars, other.nvars, "variable count");
        let mut p = CharacterPoly::zero(self.nvars, self.cutoff.min(other.cutoff));
        for ((q1, e1), c1) in &self.terms {
            for ((q2, e2), c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(q1 + q2, e, c1 * c2);
            }
        }
        p
    }

    pub fn shift_q(&self, n: u32) -> CharacterPoly {
        let mut p = CharacterPoly::zero(self.nvars, self.cutoff);
        for ((q, e), c) in &self.terms {
            p.add_term(q + n, e.clone(), c.clone());
        }
        p
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|((q, e), c)| json!({ "coeff": c.to_string(), "q": q, "exps": e }))
            .collect();
        serde_json::Value::Array(terms)
    }
}

impl fmt::Display for CharacterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((q, e), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if *q > 0 {
                write!(f, " * q^{q}")?;
            }
            for (v, &x) in e.iter().enumerate() {
                if x > 0 {
                    write!(f, " * x{}^{x}", v + 1)?;
                }
            }
        }
        Ok(())
    }
}

fn content_exps(t: &Tableau, nvars: usize) -> Vec<u32> {
    let mut e = vec![0u32; nvars];
    for &a in t.rows().iter().flatten() {
        e[a as usize - 1] += 1;
    }
    e
}

/// S_{λ/μ}(x_A).
pub fn super_schur(shape: &SkewShape, alphabet: &GradedAlphabet, cutoff: usize) -> CharacterPoly {
    let nv = alphabet.len();
    let mut p = CharacterPoly::zero(nv, cutoff);
    if shape.size() > cutoff {
        return p;
    }
    for t in enumerate_sst(shape, alphabet) {
        p.add_term(0, content_exps(&t, nv), BigInt::from(1));
    }
    p
}

/// S^x_{(λ,n)}(x_A) through x-degree `cutoff`.
pub fn super_character_sx(lambda: &Partition, n: u32, eps: Eps, alphabet: &GradedAlphabet, cutoff: usize) -> Result<CharacterPoly> {
    dominant_weight(lambda, n, eps)?;
    let nv = alphabet.len();
    let mut p = CharacterPoly::zero(nv, cutoff);
    if lambda.size() > cutoff {
        return Ok(p);
    }
    let ts = enumerate_sst(&SkewShape::straight(lambda.clone()), alphabet);
    for size in 0..=cutoff - lambda.size() {
        for tau in Partition::all_of_size(size).into_iter().filter(|t| t.is_in_px(eps)) {
            for s in enumerate_sst(&SkewShape::straight(tau.clone()), alphabet) {
                let es = content_exps(&s, nv);
                for t in &ts {
                    let rec = insert_tableau(&s, t, ReadMode::Col, alphabet).1;
                    if delta_at_most(&rec, eps, n) {
                        let e: Vec<u32> = es.iter().zip(content_exps(t, nv)).map(|(a, b)| a + b).collect();
                        p.add_term(n, e, BigInt::from(1));
                    }
                }
            }
        }
    }
    Ok(p)
}

/// q^n Σ_σ c^σ_{(λ,n)} S_σ(x_A) through degree `cutoff`.
pub fn branching_side(lambda: &Partition, n: u32, eps: Eps, alphabet: &GradedAlphabet, cutoff: usize) -> Result<CharacterPoly> {
    let nv = alphabet.len();
    let mut p = CharacterPoly::zero(nv, cutoff);
    for size in lambda.size()..=cutoff {
        for sigma in Partition::all_of_size(size) {
            let c = branch_levi(lambda, n, eps, &sigma)?.len();
            if c > 0 {
                let s = super_schur(&SkewShape::straight(sigma), alphabet, cutoff);
                p = p.add(&s.scale(&BigInt::from(c)).shift_q(n));
            }
        }
    }
    Ok(p)
}

pub fn verify_branching_expansion(lambda: &Partition, n: u32, eps: Eps, alphabet: &GradedAlphabet, cutoff: usize) -> Result<bool> {
    Ok(super_character_sx(lambda, n, eps, alphabet, cutoff)? == branching_side(lambda, n, eps, alphabet, cutoff)?)
}

/// S^x_{(μ,m)} S^x_{(ν,n)} against Σ_λ c^{(λ,m+n)}_{(μ,m)(ν,n)} S^x_{(λ,m+n)}.
pub fn verify_product_expansion(
    mu: &Partition,
    m: u32,
    nu: &Partition,
    n: u32,
    eps: Eps,
    alphabet: &GradedAlphabet,
    cutoff: usize,
) -> Result<bool> {
    let lhs = super_character_sx(mu, m, eps, alphabet, cutoff)?.mul(&super_character_sx(nu, n, eps, alphabet, cutoff)?);
    let mut rhs = CharacterPoly::zero(alphabet.len(), cutoff);
    for size in 0..=cutoff {
        for lambda in Partition::all_of_size(size) {
            if !lambda.is_dominant_at(m + n, eps) {
                continue;
            }
            let c = lr_pair_count(&lambda, mu, nu, m, n, eps)?;
            if c > 0 {
                let s = super_character_sx(&lambda, m + n, eps, alphabet, cutoff)?;
                rhs = rhs.add(&s.scale(&BigInt::from(c)));
            }
        }
    }
    Ok(lhs == rhs)
}

/// Σ_{τ ∈ P_x} s_τ(x_1..x_v) through degree `cutoff`.
pub fn littlewood_sum(v: usize, eps: Eps, cutoff: usize) -> CharacterPoly {
    let alphabet = GradedAlphabet::standard(v);
    let mut p = CharacterPoly::zero(v, cutoff);
    for size in 0..=cutoff {
        for tau in Partition::all_of_size(size).into_iter().filter(|t| t.is_in_px(eps) && t.len() <= v) {
            p = p.add(&super_schur(&SkewShape::straight(tau), &alphabet, cutoff));
        }
    }
    p
}

/// 1 / (∏_i (1 - x_i^ε) ∏_{i<j} (1 - x_i x_j)) through degree `cutoff`.
pub fn littlewood_product(v: usize, eps: Eps, cutoff: usize) -> CharacterPoly {
    let geometric = |exps: Vec<u32>| {
        let step: u32 = exps.iter().sum();
        let mut g = CharacterPoly::zero(v, cutoff);
        let mut k = 0u32;
        while (k * step) as usize <= cutoff {
            g.add_term(0, exps.iter().map(|e| e * k).collect(), BigInt::from(1));
            k += 1;
        }
        g
    };
    let mut p = CharacterPoly::one(v, cutoff);
    for i in 0..v {
        let mut e = vec![0; v];
        e[i] = eps.value();
        p = p.mul(&geometric(e));
        for j in i + 1..v {
            let mut e = vec![0; v];
            e[i] = 1;
            e[j] = 1;
            p = p.mul(&geometric(e));
        }
    }
    p
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Positive roots of B_k (ε = 1) or C_k (ε = 2) from the simple roots
/// e_i - e_{i+1} and ε e_k, closed under simple reflections.
pub fn positive_roots(k: usize, eps: Eps) -> Vec<Vec<i64>> {
    let mut simple = Vec::new();
    for i in 0..k - 1 {
        let mut a = vec![0; k];
        a[i] = 1;
        a[i + 1] = -1;
        simple.push(a);
    }
    let mut last = vec![0; k];
    last[k - 1] = eps.value() as i64;
    simple.push(last);
    let mut roots: std::collections::BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut frontier: Vec<Vec<i64>> = simple.clone();
    while let Some(b) = frontier.pop() {
        for a in &simple {
            let c = 2 * dot(&b, a) / dot(a, a);
            let r: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - c * y).collect();
            if roots.insert(r.clone()) {
                frontier.push(r);
            }
        }
    }
    roots
        .into_iter()
        .filter(|r| r.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
        .collect()
}

/// dim V(Σ a_i ω_i) by the Weyl dimension formula.
pub fn weyl_dimension(k: usize, eps: Eps, a: &[u32]) -> BigInt {
    assert!(k >= 1 && a.len() == k, "need k coefficients");
    // weights doubled so that the spin weight is integral
    let omega = |i: usize| -> Vec<i64> {
        if i + 1 == k {
            vec![eps.value() as i64; k]
        } else {
            (0..k).map(|j| if j <= i { 2 } else { 0 }).collect()
        }
    };
    let mut rho = vec![0i64; k];
    let mut lam = vec![0i64; k];
    for i in 0..k {
        let w = omega(i);
        for j in 0..k {
            rho[j] += w[j];
            lam[j] += a[i] as i64 * w[j];
        }
    }
    let shifted: Vec<i64> = lam.iter().zip(&rho).map(|(x, y)| x + y).collect();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for r in positive_roots(k, eps) {
        num *= dot(&shifted, &r);
        den *= dot(&rho, &r);
    }
    num / den
}

/// Exponent vector of a single letter.
pub fn letter_exps(a: Letter, nvars: usize) -> Vec<u32> {
    let mut e = vec![0; nvars];
    e[a as usize - 1] = 1;
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schur_examples() {
        let a2 = GradedAlphabet::standard(2);
        let s1 = super_schur(&SkewShape::straight(Partition::from([1])), &a2, 5);
        assert_eq!(s1.to_string(), "1 * x2^1 + 1 * x1^1");
        let s21 = super_schur(&SkewShape::straight(Partition::from([2, 1])), &GradedAlphabet::standard(3), 5);
        assert_eq!(s21.total(), BigInt::from(8));
        let mixed = GradedAlphabet::mixed(1, 1);
        let s2 = super_schur(&SkewShape::straight(Partition::from([2])), &mixed, 5);
        assert_eq!(s2.terms().len(), 2);
        assert_eq!(s2.coeff(0, &[2, 0]), BigInt::from(1));
        assert_eq!(s2.coeff(0, &[1, 1]), BigInt::from(1));
    }

    #[test]
    fn weyl_examples() {
        assert_eq!(weyl_dimension(2, Eps::B, &[0, 1]), BigInt::from(4));
        assert_eq!(weyl_dimension(2, Eps::C, &[0, 1]), BigInt::from(5));
        assert_eq!(weyl_dimension(2, Eps::B, &[1, 0]), BigInt::from(5));
        for k in 2..6 {
            assert_eq!(weyl_dimension(k, Eps::B, &vec![0; k]), BigInt::from(1));
            let mut spin = vec![0; k];
            spin[k - 1] = 1;
            assert_eq!(weyl_dimension(k, Eps::B, &spin), BigInt::from(1u64 << k));
            assert_eq!(positive_roots(k, Eps::C).len(), k * k);
        }
    }

    #[test]
    fn character_examples() {
        let a = GradedAlphabet::standard(2);
        let triv = super_character_sx(&Partition::empty(), 0, Eps::B, &a, 4).unwrap();
        assert_eq!(triv, CharacterPoly::one(2, 4));
        let c = super_character_sx(&Partition::empty(), 1, Eps::C, &a, 6).unwrap();
        assert_eq!(c.total(), BigInt::from(5));
        assert!(verify_branching_expansion(&Partition::empty(), 1, Eps::C, &a, 6).unwrap());
        assert!(verify_branching_expansion(&Partition::from([1]), 2, Eps::B, &GradedAlphabet::mixed(2, 1), 5).unwrap());
        assert!(verify_product_expansion(&Partition::empty(), 1, &Partition::empty(), 1, Eps::B, &a, 4).unwrap());
    }

    #[test]
    fn littlewood() {
        for eps in [Eps::B, Eps::C] {
            assert_eq!(littlewood_sum(3, eps, 5), littlewood_product(3, eps, 5));
        }
    }
}
