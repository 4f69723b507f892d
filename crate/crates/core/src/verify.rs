//! The acceptance checks, numbered 1 to 10, as library functions.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::alphabet::GradedAlphabet;
use crate::characters::{littlewood_product, littlewood_sum, verify_branching_expansion, verify_product_expansion, weyl_dimension};
use crate::crystal::CrystalVertex;
use crate::decompose::{branch_levi, lr_pair_count, lr_pair_decomposition, tensor_decompose, Decomposition};
use crate::graph::{generate_crystal, CrystalGraph};
use crate::lr::{row_count_duality, sharp, sharp_inverse, LrTableau};
use crate::oracle::{l_scaled_brute, lr_coefficient_brute, tensor_components};
use crate::partition::{Eps, Partition};
use crate::random;
use crate::rsk::{
    bitableau_op, folded_op, gl_op, kappa_x, l_scaled, recording_by_columns, recording_from_dual, rsk, rsk_inverse,
    FoldedElement, FoldedMatrix, SupportMatrix,
};
use crate::signature::Dir;
use crate::stats::delta_scaled;
use crate::tableau::{enumerate_sst_upto, Tableau};
use crate::weight::{dagger_inverse, dominant_weight};

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Report {
    pub fn line(&self) -> String {
        format!("criterion {:>2} [{}] {}: {}", self.id, if self.passed { "PASS" } else { "FAIL" }, self.title, self.detail)
    }
}

/// Collects failure messages, keeping only the first few.
#[derive(Default)]
struct Failures {
    count: usize,
    first: Vec<String>,
}

impl Failures {
    fn push(&mut self, msg: String) {
        self.count += 1;
        if self.first.len() < 5 {
            self.first.push(msg);
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.push(msg());
        }
    }

    fn merge(&mut self, other: Failures) {
        self.count += other.count;
        for m in other.first {
            if self.first.len() < 5 {
                self.first.push(m);
            }
        }
    }

    fn report(self, id: u8, title: &'static str, summary: String) -> Report {
        let detail = if self.count == 0 { summary } else { format!("{summary}; {} failures: {}", self.count, self.first.join(" | ")) };
        Report { id, title, passed: self.count == 0, detail }
    }
}

fn tab(s: &str) -> Tableau {
    s.parse().expect("built-in tableau")
}

fn best_time<F: FnMut()>(mut f: F) -> Duration {
    (0..20)
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed()
        })
        .min()
        .unwrap()
}

pub fn criterion_1() -> Report {
    let mut bad = Failures::default();
    let u = tab("1,4,.,.,.\n2,3,.,.\n1,2\n1\n");
    let u2 = tab("2,3,.,.,.,.\n2,.,.\n1,1\n");
    let d1 = delta_scaled(&u) as f64 / 1.0;
    let d2 = delta_scaled(&u2) as f64 / 2.0;
    bad.check(delta_scaled(&u) == 8, || format!("Δ_b = {d1}, expected 8"));
    bad.check(delta_scaled(&u2) == 8, || format!("Δ_c = {d2}, expected 4"));
    let t1 = best_time(|| {
        std::hint::black_box(delta_scaled(std::hint::black_box(&u)));
    });
    let t2 = best_time(|| {
        std::hint::black_box(delta_scaled(std::hint::black_box(&u2)));
    });
    let limit = Duration::from_millis(1);
    bad.check(t1 < limit && t2 < limit, || format!("too slow: {t1:?}, {t2:?}"));
    bad.report(1, "Δ on the worked examples", format!("Δ_b = {d1}, Δ_c = {d2}, times {t1:?} / {t2:?}"))
}

pub fn criterion_2() -> Report {
    let mut bad = Failures::default();
    let cases = [
        (Eps::B, "1,2,3,4,5\n1,3,3\n1\n", "1,2,3,4,5\n1,3,3\n", "1,1,2,3,4,5\n1,3,3\n1\n"),
        (Eps::C, "1,1,1,2,2,3,4,5\n1,1,3,3\n", "1,2,2,3,4,5\n1,1,3,3\n", "1,1,1,1,1,2,2,3,4,5\n1,1,3,3\n"),
    ];
    for (eps, s, e, f) in cases {
        let v = CrystalVertex::new(tab(s), tab("2,3\n2\n"), eps, 10).expect("valid vertex");
        let got_e = v.e0().map(|w| w.s.to_string()).unwrap_or_default();
        let got_f = v.f0().map(|w| w.s.to_string()).unwrap_or_default();
        bad.check(got_e == e, || format!("{eps:?} E0 gave {got_e:?}"));
        bad.check(got_f == f, || format!("{eps:?} F0 gave {got_f:?}"));
    }
    bad.report(2, "zero-node operators on the worked examples", "E0/F0 outputs match for b and c".into())
}

pub fn criterion_3(seed: u64) -> Report {
    let mut bad = Failures::default();
    let u = LrTableau::new(tab("2,3,.,.,.\n1,2,3,.\n1,1,2\n1\n")).expect("LR tableau");
    let v = tab("2,3,3,4\n1,2,3\n1,2\n");
    bad.check(sharp(&u) == v, || "U ↦ U♯ differs".into());
    bad.check(sharp_inverse(&v, u.inner()).ok().as_ref() == Some(&u), || "U♯ ↦ U differs".into());
    bad.check(row_count_duality(&u, &v), || "row-count duality fails on the example".into());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<LrTableau> = (0..200).map(|_| random::lr_tableau(&mut rng, 8)).collect();
    for s in &samples {
        let w = sharp(s);
        bad.check(row_count_duality(s, &w), || format!("duality fails on\n{}", s.base));
        bad.check(sharp_inverse(&w, s.inner()).ok().as_ref() == Some(s), || format!("round trip fails on\n{}", s.base));
    }
    bad.report(3, "♯ bijection", "example both ways, duality on it and 200 random LR tableaux".into())
}

/// Parameter grid of the finite-rank census.
pub fn census_grid() -> Vec<(Partition, u32, Eps, usize)> {
    let mut out = Vec::new();
    for eps in [Eps::B, Eps::C] {
        for k in 2..=3 {
            for size in 0..=2 {
                for lambda in Partition::all_of_size(size).into_iter().filter(|l| l.len() < k) {
                    for n in 0..=3 {
                        if lambda.is_dominant_at(n, eps) {
                            out.push((lambda.clone(), n, eps, k));
                        }
                    }
                }
            }
        }
    }
    out
}

fn weyl_of(lambda: &Partition, n: u32, eps: Eps, k: usize) -> BigInt {
    weyl_dimension(k, eps, &dagger_inverse(lambda, n, k, eps).expect("grid is valid"))
}

pub fn criterion_4() -> Report {
    let grid = census_grid();
    let results: Vec<Failures> = grid
        .par_iter()
        .map(|(lambda, n, eps, k)| {
            let mut bad = Failures::default();
            let g = generate_crystal(lambda, *n, *eps, *k).expect("grid is valid");
            let w = weyl_of(lambda, *n, *eps, *k);
            bad.check(BigInt::from(g.len()) == w, || format!("{eps:?} k={k} λ={lambda} n={n}: {} vertices, Weyl {w}", g.len()));
            bad
        })
        .collect();
    let mut bad = Failures::default();
    for r in results {
        bad.merge(r);
    }
    for (lambda, n, eps, want) in [(Partition::empty(), 1, Eps::B, 4), (Partition::empty(), 1, Eps::C, 5), (Partition::from([1]), 2, Eps::B, 5)] {
        let got = generate_crystal(&lambda, n, eps, 2).map(|g| g.len()).unwrap_or(0);
        bad.check(got == want, || format!("|T_2({lambda},{n})| = {got}, expected {want}"));
    }
    bad.report(4, "finite-rank census against Weyl dimensions", format!("{} parameter sets", grid.len()))
}

/// Dimension of the rank-k module of a raw (λ, level) weight.
pub fn component_dimension(lambda: &Partition, level: u32, eps: Eps, k: usize) -> Option<BigInt> {
    let w = dominant_weight(lambda, level, eps).ok()?.normalize_rank(k);
    let (l2, n2) = w.as_partition_level()?;
    Some(weyl_of(&l2, n2, eps, k))
}

fn decomposition_dims(d: &Decomposition, eps: Eps, k: usize) -> Option<BigInt> {
    let mut total = BigInt::from(0);
    for ((l, n), &c) in d {
        total += component_dimension(l, *n, eps, k)? * c;
    }
    Some(total)
}

pub fn multiplicity_free_grid() -> Vec<(u32, u32, usize, Eps)> {
    vec![
        (1, 1, 3, Eps::B),
        (1, 2, 2, Eps::B),
        (2, 1, 2, Eps::B),
        (2, 2, 2, Eps::B),
        (1, 3, 2, Eps::B),
        (1, 1, 2, Eps::C),
        (1, 2, 2, Eps::C),
        (2, 1, 2, Eps::C),
        (2, 2, 2, Eps::C),
        (1, 1, 3, Eps::C),
    ]
}

pub fn criterion_5() -> Report {
    let mut bad = Failures::default();
    let empty = Partition::empty();
    let spin = generate_crystal(&empty, 1, Eps::B, 2).expect("spin crystal");
    let d = tensor_decompose(&spin, &spin).expect("same type");
    let expected: Decomposition = [((empty.clone(), 2), 1), ((Partition::from([1]), 2), 1), ((Partition::from([1, 1]), 2), 1)].into_iter().collect();
    bad.check(d == expected, || format!("spin⊗spin = {d:?}"));
    let dims: Vec<BigInt> = d.keys().filter_map(|(l, n)| component_dimension(l, *n, Eps::B, 2)).collect();
    let total = decomposition_dims(&d, Eps::B, 2);
    bad.check(total == Some(BigInt::from(16)), || format!("dimensions {dims:?}"));
    let results: Vec<Failures> = multiplicity_free_grid()
        .par_iter()
        .map(|&(m, n, k, eps)| {
            let mut bad = Failures::default();
            let b1 = generate_crystal(&empty, m, eps, k).expect("valid");
            let b2 = generate_crystal(&empty, n, eps, k).expect("valid");
            let hw = tensor_decompose(&b1, &b2).expect("valid");
            let tag = format!("(m,n,k,ε)=({m},{n},{k},{})", eps.value());
            bad.check(hw.values().all(|&c| c == 1), || format!("{tag}: multiplicities {hw:?}"));
            let comps = tensor_components(&b1, &b2);
            bad.check(comps.as_ref().ok() == Some(&hw), || format!("{tag}: components {comps:?} vs {hw:?}"));
            let pairs = lr_pair_decomposition(&empty, m, &empty, n, eps, k).expect("valid");
            bad.check(pairs == hw, || format!("{tag}: LR pairs {pairs:?} vs {hw:?}"));
            let dims = decomposition_dims(&hw, eps, k);
            bad.check(dims == Some(BigInt::from(b1.len() * b2.len())), || format!("{tag}: dims {dims:?}"));
            bad
        })
        .collect();
    for r in results {
        bad.merge(r);
    }
    bad.report(5, "tensor products", "spin⊗spin = (0)+(1)+(1,1), dims 1+5+10; 10 multiplicity-free products agree three ways".into())
}

fn stable_levels(parts: &[&Partition], eps: Eps) -> Vec<u32> {
    let top = parts.iter().map(|p| p.first()).max().unwrap_or(0) as u32;
    let base = (2 * top).div_ceil(eps.value());
    vec![base, base + 1]
}

pub fn criterion_6() -> Report {
    let small: Vec<Partition> = (0..=4).flat_map(Partition::all_of_size).collect();
    let mut jobs = Vec::new();
    for eps in [Eps::B, Eps::C] {
        for lambda in &small {
            for mu in &small {
                for nu in &small {
                    if mu.size() + nu.size() <= lambda.size() {
                        jobs.push((eps, lambda.clone(), mu.clone(), nu.clone()));
                    }
                }
            }
        }
    }
    let results: Vec<(usize, Failures)> = jobs
        .par_iter()
        .map(|(eps, lambda, mu, nu)| {
            let mut bad = Failures::default();
            let mut count = 0;
            let e = eps.value() as usize;
            let px: Vec<Partition> = (0..=lambda.size()).flat_map(Partition::all_of_size).filter(|t| t.is_in_px(*eps)).collect();
            let rhs: usize = {
                let mut total = 0;
                for tau in px.iter().filter(|t| t.size() + mu.size() + nu.size() == lambda.size()) {
                    for eta in Partition::all_of_size(mu.size() + tau.size()) {
                        let a = lr_coefficient_brute(&eta, mu, tau);
                        if a > 0 {
                            total += a * lr_coefficient_brute(lambda, &eta, nu);
                        }
                    }
                }
                total
            };
            for m in stable_levels(&[lambda, mu], *eps) {
                for n in stable_levels(&[lambda, nu], *eps) {
                    debug_assert!(2 * lambda.first() <= e * m as usize);
                    let lhs = lr_pair_count(lambda, mu, nu, m, n, *eps).expect("stable range is dominant");
                    count += 1;
                    bad.check(lhs == rhs, || format!("ε={e} λ={lambda} μ={mu} ν={nu} m={m} n={n}: {lhs} vs {rhs}"));
                }
            }
            (count, bad)
        })
        .collect();
    let mut branch_jobs = Vec::new();
    for eps in [Eps::B, Eps::C] {
        for lambda in &small {
            for sigma in &small {
                branch_jobs.push((eps, lambda.clone(), sigma.clone()));
            }
        }
    }
    let branch: Vec<(usize, Failures)> = branch_jobs
        .par_iter()
        .map(|(eps, lambda, sigma)| {
            let mut bad = Failures::default();
            let mut count = 0;
            let rhs: usize = (0..=sigma.size())
                .flat_map(Partition::all_of_size)
                .filter(|t| t.is_in_px(*eps))
                .map(|tau| lr_coefficient_brute(sigma, &tau, lambda))
                .sum();
            for n in stable_levels(&[lambda, sigma], *eps) {
                let lhs = branch_levi(lambda, n, *eps, sigma).expect("stable range is dominant").len();
                count += 1;
                bad.check(lhs == rhs, || format!("ε={} λ={lambda} σ={sigma} n={n}: {lhs} vs {rhs}", eps.value()));
            }
            (count, bad)
        })
        .collect();
    let mut bad = Failures::default();
    let (mut c1, mut c2) = (0, 0);
    for (c, r) in results {
        c1 += c;
        bad.merge(r);
    }
    for (c, r) in branch {
        c2 += c;
        bad.merge(r);
    }
    bad.report(6, "stable limits", format!("{c1} product instances, {c2} branching instances"))
}

pub fn criterion_7(seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mats: Vec<SupportMatrix> = (0..500).map(|_| random::matrix(&mut rng, 6, 4, 0.3)).collect();
    let ops: Vec<SupportMatrix> = (0..500).map(|_| random::matrix(&mut rng, 5, 3, 0.3)).collect();
    let mut folded = Vec::new();
    for eps in [Eps::B, Eps::C] {
        for _ in 0..250 {
            let lam = random::partition(&mut rng, 5, 3);
            folded.push(random::folded_element(&mut rng, 4, 3, eps, &lam));
        }
    }
    let mut bad = Failures::default();
    for r in mats.par_iter().map(|a| {
        let mut bad = Failures::default();
        let (p, q) = rsk(a);
        bad.check(p.outer() == q.outer(), || format!("shapes differ for {:?}", a.triples()));
        bad.check(rsk_inverse(&p, &q).ok().as_ref() == Some(a), || format!("round trip fails for {:?}", a.triples()));
        bad.check(recording_by_columns(a) == recording_from_dual(&q), || format!("recording mismatch for {:?}", a.triples()));
        bad
    }).collect::<Vec<_>>() {
        bad.merge(r);
    }
    let defined: usize = ops.iter().map(|a| (-3..=3).filter(|&i| gl_op(a, i, Dir::Raise).is_some()).count()).sum();
    for r in ops.par_iter().map(|a| {
        let mut bad = Failures::default();
        let (p, q) = rsk(a);
        for i in -3..=3 {
            for d in [Dir::Raise, Dir::Lower] {
                let l = gl_op(a, i, d).map(|b| rsk(&b));
                let r = bitableau_op(&p, &q, i, d);
                bad.check(l == r, || format!("κ and {d:?}_{i} disagree on {:?}", a.triples()));
            }
        }
        bad
    }).collect::<Vec<_>>() {
        bad.merge(r);
    }
    for r in folded.par_iter().map(|m| {
        let mut bad = Failures::default();
        let v = kappa_x(m, 0);
        for i in 0..=2 {
            for d in [Dir::Raise, Dir::Lower] {
                let l = folded_op(m, i, d).map(|x| kappa_x(&x, 0));
                bad.check(l == v.op(i, d), || format!("κ^x and {d:?}_{i} disagree on {:?} with\n{}", m.a.base.triples(), m.t));
            }
        }
        bad
    }).collect::<Vec<_>>() {
        bad.merge(r);
    }
    bad.report(
        7,
        "RSK and its crystal structure",
        format!("500 round trips, 500 gl samples ({defined} defined raisings), {} folded samples", folded.len()),
    )
}

/// Every folded matrix with indices at most `max_index` and at most `budget` letters.
pub fn all_folded_matrices(max_index: u32, budget: usize, eps: Eps) -> Vec<(FoldedMatrix, usize)> {
    let slots: Vec<(u32, u32)> = (1..=max_index).flat_map(|i| (i..=max_index).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    fn rec(slots: &[(u32, u32)], s: usize, left: usize, cur: &mut SupportMatrix, used: usize, eps: Eps, out: &mut Vec<(FoldedMatrix, usize)>) {
        if s == slots.len() {
            out.push((FoldedMatrix { base: cur.clone(), eps }, used));
            return;
        }
        let (i, j) = slots[s];
        let (step, cost) = if i == j { (eps.value(), eps.value() as usize) } else { (1, 2) };
        let mut c = 0;
        loop {
            let mut next = cur.clone();
            if c > 0 {
                next.add(i, j, c);
                if i != j {
                    next.add(j, i, c);
                }
            }
            let spent = (c / step) as usize * cost;
            rec(slots, s + 1, left - spent, &mut next, used + spent, eps, out);
            c += step;
            if (c / step) as usize * cost > left {
                break;
            }
        }
    }
    rec(&slots, 0, budget, &mut SupportMatrix::zero(), 0, eps, &mut out);
    out
}

/// All (A, T) with |A| + |T| ≤ `budget` and letters at most `max_index`.
pub fn all_folded_elements(max_index: u32, budget: usize, eps: Eps) -> Vec<FoldedElement> {
    let mut out = Vec::new();
    for (a, used) in all_folded_matrices(max_index, budget, eps) {
        for size in 0..=budget - used {
            for lam in Partition::all_of_size(size).into_iter().filter(|l| l.len() <= max_index as usize) {
                for t in enumerate_sst_upto(&crate::partition::SkewShape::straight(lam), max_index) {
                    out.push(FoldedElement { a: a.clone(), t });
                }
            }
        }
    }
    out
}

fn l_equals_delta(m: &FoldedElement, brute: bool) -> Option<String> {
    let l = l_scaled(m);
    let d = kappa_x(m, 0).delta_scaled();
    if l != d {
        return Some(format!("εL = {l} but εΔ = {d} for {:?} with\n{}", m.a.base.triples(), m.t));
    }
    if brute {
        let b = l_scaled_brute(m);
        if b != l {
            return Some(format!("εL = {l} but brute force gives {b} for {:?}", m.a.base.triples()));
        }
    }
    None
}

pub fn criterion_8(seed: u64) -> Report {
    let mut bad = Failures::default();
    let mut exhaustive = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::new();
    for eps in [Eps::B, Eps::C] {
        let all = all_folded_elements(6, 6, eps);
        exhaustive += all.len();
        for r in all.par_iter().filter_map(|m| l_equals_delta(m, true)).collect::<Vec<_>>() {
            bad.push(r);
        }
        for _ in 0..500 {
            let lam = random::partition(&mut rng, 6, 4);
            samples.push(random::folded_element(&mut rng, 5, 3, eps, &lam));
        }
    }
    for r in samples.par_iter().filter_map(|m| l_equals_delta(m, false)).collect::<Vec<_>>() {
        bad.push(r);
    }
    bad.report(8, "L equals Δ", format!("{exhaustive} exhaustive elements (letters ≤ 6, size ≤ 6), {} random", samples.len()))
}

pub fn criterion_9(seed: u64) -> Report {
    let mut bad = Failures::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::new();
    for eps in [Eps::B, Eps::C] {
        for _ in 0..300 {
            let lam = random::partition(&mut rng, 5, 3);
            let k = rng.gen_range(1..=4);
            samples.push((random::folded_element(&mut rng, 4, 3, eps, &lam), k));
        }
    }
    let mut levi_checks = 0;
    for (m, k) in &samples {
        let l = l_scaled(m);
        for i in 1..=3 {
            if let Some(f) = folded_op(m, i, Dir::Lower) {
                levi_checks += 1;
                let lf = l_scaled(&f);
                bad.check(lf == l, || format!("L changes under F_{i}: {l} -> {lf} on {:?}", m.a.base.triples()));
            }
        }
        let a = &m.a.base;
        let e = m.a.eps.value() as usize;
        let row1: usize = a.triples().iter().filter(|t| t.0 == 1 && t.1 >= 2).map(|t| t.2 as usize).sum();
        let formula = a.get(1, 1) as usize + 2 * row1 + 2 * m.t.count(1) + e * k;
        let mut f = m.clone();
        for _ in 0..*k {
            f = folded_op(&f, 0, Dir::Lower).expect("F0 on matrices is never zero");
        }
        let got = l_scaled(&f);
        bad.check(got == l.max(formula), || format!("growth law: εL(F0^{k} m) = {got}, expected max({l}, {formula})"));
        if let Some(r) = folded_op(m, 0, Dir::Raise) {
            let lr = l_scaled(&r);
            bad.check(lr <= l, || format!("L grows under E0: {l} -> {lr} on {:?}", a.triples()));
        }
    }
    let grid = census_grid();
    let graph_bad: Vec<String> = grid
        .par_iter()
        .flat_map(|(lambda, n, eps, k)| {
            let g: CrystalGraph = generate_crystal(lambda, *n, *eps, *k).expect("grid is valid");
            g.check().into_iter().map(|v| format!("{eps:?} k={k} λ={lambda} n={n}: {v}")).collect::<Vec<_>>()
        })
        .collect();
    for v in graph_bad {
        bad.push(v);
    }
    bad.report(
        9,
        "normality",
        format!("{levi_checks} Levi steps, {} growth-law samples, {} graphs checked", samples.len(), grid.len()),
    )
}

/// Branching configurations: (λ, n, ε, even letters, odd letters, cutoff).
pub fn branching_grid() -> Vec<(Partition, u32, Eps, usize, usize, usize)> {
    vec![
        (Partition::from([1]), 2, Eps::B, 2, 1, 5),
        (Partition::empty(), 1, Eps::C, 2, 0, 6),
        (Partition::from([1]), 2, Eps::B, 2, 2, 5),
        (Partition::empty(), 2, Eps::C, 2, 2, 5),
        (Partition::from([1, 1]), 2, Eps::C, 3, 0, 5),
        (Partition::from([2]), 4, Eps::B, 1, 1, 5),
        (Partition::from([1]), 3, Eps::B, 2, 0, 0),
    ]
}

/// Product configurations: (μ, m, ν, n, ε, even, odd, cutoff).
pub fn product_grid() -> Vec<(Partition, u32, Partition, u32, Eps, usize, usize, usize)> {
    let e = Partition::empty();
    let one = Partition::from([1]);
    vec![
        (e.clone(), 1, e.clone(), 1, Eps::B, 2, 0, 4),
        (one.clone(), 2, e.clone(), 1, Eps::B, 2, 0, 4),
        (e.clone(), 0, one.clone(), 2, Eps::C, 2, 0, 4),
        (e.clone(), 1, e.clone(), 1, Eps::C, 2, 2, 4),
        (one.clone(), 2, e.clone(), 1, Eps::B, 2, 2, 4),
        (e.clone(), 1, one.clone(), 1, Eps::C, 1, 1, 4),
    ]
}

pub fn criterion_10() -> Report {
    let mut bad = Failures::default();
    for eps in [Eps::B, Eps::C] {
        let ok = littlewood_sum(4, eps, 6) == littlewood_product(4, eps, 6);
        bad.check(ok, || format!("Littlewood identity fails for ε={}", eps.value()));
    }
    let branching: Vec<Option<String>> = branching_grid()
        .into_par_iter()
        .map(|(l, n, eps, even, odd, d)| {
            let a = GradedAlphabet::mixed(even, odd);
            match verify_branching_expansion(&l, n, eps, &a, d) {
                Ok(true) => None,
                other => Some(format!("branching λ={l} n={n} ε={} ({even}|{odd}) D={d}: {other:?}", eps.value())),
            }
        })
        .collect();
    let products: Vec<Option<String>> = product_grid()
        .into_par_iter()
        .map(|(mu, m, nu, n, eps, even, odd, d)| {
            let a = GradedAlphabet::mixed(even, odd);
            match verify_product_expansion(&mu, m, &nu, n, eps, &a, d) {
                Ok(true) => None,
                other => Some(format!("product ({mu},{m})·({nu},{n}) ε={} ({even}|{odd}) D={d}: {other:?}", eps.value())),
            }
        })
        .collect();
    let total = branching.len() + products.len();
    for f in branching.into_iter().chain(products).flatten() {
        bad.push(f);
    }
    bad.report(10, "character identities", format!("Littlewood (4 variables, degree 6, both types), {total} expansions"))
}

pub fn run(id: u8, seed: u64) -> Option<Report> {
    Some(match id {
        1 => criterion_1(),
        2 => criterion_2(),
        3 => criterion_3(seed),
        4 => criterion_4(),
        5 => criterion_5(),
        6 => criterion_6(),
        7 => criterion_7(seed),
        8 => criterion_8(seed),
        9 => criterion_9(seed),
        10 => criterion_10(),
        _ => return None,
    })
}

pub fn run_all(seed: u64) -> Vec<Report> {
    (1..=10).map(|i| run(i, seed).expect("valid id")).collect()
}

pub const DEFAULT_SEED: u64 = 7;
