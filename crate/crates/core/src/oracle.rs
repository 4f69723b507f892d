//! Slow reference implementations used to cross-check the fast paths.

use std::collections::{BTreeMap, HashMap};

use crate::alphabet::{Letter, Ordinary};
use crate::decompose::Decomposition;
use crate::error::{Error, Result};
use crate::graph::CrystalGraph;
use crate::partition::{Partition, SkewShape};
use crate::rsk::{FoldedElement, SupportMatrix};
use crate::signature::Sign;
use crate::tableau::{enumerate_sst_upto, insert, ReadMode, Tableau};

/// ε·Δ(U) by trying every weakly decreasing subword of the chosen reading word.
pub fn delta_scaled_brute(u: &Tableau, mode: ReadMode) -> usize {
    let cells = u.reading_cells(mode);
    let vals: Vec<Letter> = cells.iter().map(|&(r, c)| u.entry(r, c).unwrap()).collect();
    // longest[p]: longest weakly decreasing subword starting at p, by exhaustive search
    fn search(vals: &[Letter], p: usize) -> usize {
        let mut best = 1;
        for q in p + 1..vals.len() {
            if vals[q] <= vals[p] {
                best = best.max(1 + search(vals, q));
            }
        }
        best
    }
    let inner = u.inner();
    let mut value = inner.first();
    for p in 0..cells.len() {
        value = value.max(inner.get(cells[p].0) + 2 * search(&vals, p));
    }
    value
}

/// The bracketing by repeated literal deletion of adjacent (opener, closer) pairs.
pub fn bracket_rewrite(signs: &[Sign], opener: Sign) -> Vec<bool> {
    let mut live: Vec<usize> = (0..signs.len()).filter(|&p| signs[p] != Sign::Dot).collect();
    loop {
        let hit = live.windows(2).position(|w| signs[w[0]] == opener && signs[w[1]] != opener);
        match hit {
            Some(k) => {
                live.drain(k..k + 2);
            }
            None => break,
        }
    }
    let mut alive = vec![false; signs.len()];
    for p in live {
        alive[p] = true;
    }
    alive
}

/// c^λ_{μν} as the number of T ∈ SST(ν) with (T → H_μ) = H_λ.
pub fn lr_coefficient_brute(lambda: &Partition, mu: &Partition, nu: &Partition) -> usize {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return 0;
    }
    let h_mu = Tableau::highest(mu);
    let h_lambda = Tableau::highest(lambda);
    enumerate_sst_upto(&SkewShape::straight(nu.clone()), lambda.len().max(1) as Letter)
        .into_iter()
        .filter(|t| insert(&h_mu, t).0 == h_lambda)
        .count()
}

/// Connected components of B1 ⊗ B2 built edge by edge from the tensor rule,
/// keyed by the weight of each component's source.
pub fn tensor_components(b1: &CrystalGraph, b2: &CrystalGraph) -> Result<Decomposition> {
    if b1.eps != b2.eps {
        return Err(Error::EpsilonMismatch);
    }
    let rank = b1.rank;
    let lower = |g: &CrystalGraph| {
        let mut f: HashMap<(usize, usize), usize> = HashMap::new();
        for e in &g.edges {
            f.insert((e.from, e.i), e.to);
        }
        f
    };
    let string = |f: &HashMap<(usize, usize), usize>, v: usize, i: usize| {
        let mut k = 0;
        let mut x = v;
        while let Some(&y) = f.get(&(x, i)) {
            x = y;
            k += 1;
        }
        k
    };
    let f1 = lower(b1);
    let f2 = lower(b2);
    let mut up: HashMap<(usize, usize), usize> = HashMap::new();
    for e in &b2.edges {
        up.insert((e.to, e.i), e.from);
    }
    let n2 = b2.len();
    let id = |x: usize, y: usize| x * n2 + y;
    let total = b1.len() * n2;
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut c = x;
        while p[c] != r {
            let n = p[c];
            p[c] = r;
            c = n;
        }
        r
    }
    let mut has_in = vec![false; total];
    for x in 0..b1.len() {
        for y in 0..n2 {
            for i in 0..rank {
                let phi1 = string(&f1, x, i);
                let mut eps2 = 0;
                let mut z = y;
                while let Some(&w) = up.get(&(z, i)) {
                    z = w;
                    eps2 += 1;
                }
                let target = if phi1 > eps2 {
                    f1.get(&(x, i)).map(|&x2| id(x2, y))
                } else {
                    f2.get(&(y, i)).map(|&y2| id(x, y2))
                };
                if let Some(t) = target {
                    has_in[t] = true;
                    let (a, b) = (find(&mut parent, id(x, y)), find(&mut parent, t));
                    parent[a] = b;
                }
            }
        }
    }
    let mut sources: BTreeMap<usize, usize> = BTreeMap::new();
    for v in 0..total {
        if !has_in[v] {
            let root = find(&mut parent, v);
            if sources.insert(root, v).is_some() {
                return Err(Error::BadTableau("component with two sources".into()));
            }
        }
    }
    let mut out = Decomposition::new();
    for (_, v) in sources {
        let w = b1.vertices[v / n2].weight().add(&b2.vertices[v % n2].weight())?;
        let key = w.as_partition_level().ok_or_else(|| Error::NotHighestWeight(w.to_string()))?;
        *out.entry(key).or_insert(0) += 1;
    }
    Ok(out)
}

fn is_weakly_decreasing(w: &[Letter]) -> bool {
    w.windows(2).all(|p| p[0] >= p[1])
}

/// ε·L(m) straight from the definition: every symmetric A' ≤ A with ε-divisible
/// diagonal, every subword of w(T).
pub fn l_scaled_brute(m: &FoldedElement) -> usize {
    let a = &m.a.base;
    let e = m.a.eps.value();
    let slots: Vec<(u32, u32, u32)> = a.triples().into_iter().filter(|&(i, j, _)| i <= j).collect();
    let wt = m.t.col_word();
    let mut best = 0;
    let mut choice = vec![0u32; slots.len()];
    loop {
        let mut sub = SupportMatrix::zero();
        for (s, &(i, j, _)) in slots.iter().enumerate() {
            sub.add(i, j, choice[s]);
            if i != j {
                sub.add(j, i, choice[s]);
            }
        }
        let w1 = sub.word();
        if is_weakly_decreasing(&w1) {
            let bound = w1.last().copied().unwrap_or(Letter::MAX);
            for mask in 0u64..(1u64 << wt.len()) {
                let w2: Vec<Letter> = (0..wt.len()).filter(|&p| mask >> p & 1 == 1).map(|p| wt[p]).collect();
                if is_weakly_decreasing(&w2) && w2.first().is_none_or(|&x| x <= bound) {
                    best = best.max(w1.len() + 2 * w2.len());
                }
            }
        }
        // next choice: diagonal steps by ε
        let mut s = 0;
        loop {
            if s == slots.len() {
                return best;
            }
            let (i, j, c) = slots[s];
            let step = if i == j { e } else { 1 };
            if choice[s] + step <= c {
                choice[s] += step;
                break;
            }
            choice[s] = 0;
            s += 1;
        }
    }
}

/// Checks that insertion never breaks semistandardness for the ordinary alphabet.
pub fn insertion_is_valid(t: &Tableau, w: &[Letter]) -> bool {
    let mut s = t.clone();
    for &a in w {
        s.insert_letter(a, &Ordinary);
        if !s.is_semistandard(&Ordinary) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_crystal;
    use crate::partition::Eps;
    use crate::rsk::FoldedMatrix;

    #[test]
    fn delta_brute_matches_examples() {
        let u: Tableau = "1,4,.,.,.\n2,3,.,.\n1,2\n1\n".parse().unwrap();
        assert_eq!(delta_scaled_brute(&u, ReadMode::Col), 8);
        assert_eq!(delta_scaled_brute(&u, ReadMode::Row), 8);
    }

    #[test]
    fn rewrite_agrees() {
        use Sign::*;
        let s = [Plus, Minus, Dot, Plus, Plus, Minus, Minus, Minus, Plus];
        for o in [Plus, Minus] {
            assert_eq!(bracket_rewrite(&s, o), crate::signature::bracket(&s, o));
        }
    }

    #[test]
    fn lr_brute() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(lr_coefficient_brute(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coefficient_brute(&p(&[2]), &p(&[1]), &p(&[1])), 1);
    }

    #[test]
    fn components_of_spin_square() {
        let b = generate_crystal(&Partition::empty(), 1, Eps::B, 2).unwrap();
        let d = tensor_components(&b, &b).unwrap();
        assert_eq!(d.values().sum::<usize>(), 3);
        assert_eq!(d, crate::decompose::tensor_decompose(&b, &b).unwrap());
    }

    #[test]
    fn l_brute_small() {
        let a = SupportMatrix::from_triples(&[(1, 1, 4), (2, 2, 2)]).unwrap();
        let m = FoldedElement { a: FoldedMatrix::new(a, Eps::C).unwrap(), t: Tableau::empty() };
        assert_eq!(l_scaled_brute(&m), 4);
    }
}
