//! Seeded random instances for property checks.

use rand::Rng;

use crate::alphabet::Letter;
use crate::lr::{enumerate_lr, LrTableau};
use crate::partition::{Eps, Partition};
use crate::rsk::{FoldedElement, FoldedMatrix, SupportMatrix};
use crate::signature::Dir;
use crate::tableau::Tableau;

/// Support inside size × size, each cell nonzero with probability `density`.
pub fn matrix<R: Rng>(rng: &mut R, size: u32, max_entry: u32, density: f64) -> SupportMatrix {
    let mut a = SupportMatrix::zero();
    for i in 1..=size {
        for j in 1..=size {
            if rng.gen_bool(density) {
                a.add(i, j, rng.gen_range(1..=max_entry));
            }
        }
    }
    a
}

pub fn folded_matrix<R: Rng>(rng: &mut R, size: u32, max_entry: u32, density: f64, eps: Eps) -> FoldedMatrix {
    let mut a = SupportMatrix::zero();
    for i in 1..=size {
        for j in i..=size {
            if rng.gen_bool(density) {
                let c = rng.gen_range(1..=max_entry);
                if i == j {
                    a.add(i, i, c * eps.value());
                } else {
                    a.add(i, j, c);
                    a.add(j, i, c);
                }
            }
        }
    }
    FoldedMatrix { base: a, eps }
}

pub fn partition<R: Rng>(rng: &mut R, max_size: usize, max_len: usize) -> Partition {
    let n = rng.gen_range(0..=max_size);
    let all: Vec<Partition> = Partition::all_of_size(n).into_iter().filter(|p| p.len() <= max_len).collect();
    if all.is_empty() {
        return Partition::empty();
    }
    all[rng.gen_range(0..all.len())].clone()
}

/// A semistandard tableau of shape λ with entries at most `max`, reached by
/// random lowering walks from H_λ.
pub fn sst<R: Rng>(rng: &mut R, lambda: &Partition, max: Letter, steps: usize) -> Tableau {
    let mut t = Tableau::highest(lambda);
    if max < 2 {
        return t;
    }
    for _ in 0..steps {
        let i = rng.gen_range(1..max);
        if let Some(u) = t.crystal_op(i, Dir::Lower) {
            t = u;
        }
    }
    t
}

pub fn folded_element<R: Rng>(rng: &mut R, size: u32, max_entry: u32, eps: Eps, lambda: &Partition) -> FoldedElement {
    let a = folded_matrix(rng, size, max_entry, 0.35, eps);
    let t = sst(rng, lambda, size + 1, 30);
    FoldedElement { a, t }
}

/// A uniformly chosen LR tableau among those of random small shapes.
pub fn lr_tableau<R: Rng>(rng: &mut R, max_size: usize) -> LrTableau {
    loop {
        let mu = partition(rng, max_size / 2, 4);
        let nu = partition(rng, max_size / 2, 4);
        let outers: Vec<Partition> = Partition::between(&mu, &Partition::new(vec![8; 8]).unwrap(), mu.size() + nu.size());
        let mut all = Vec::new();
        for lam in &outers {
            all.extend(enumerate_lr(lam, &mu, &nu));
        }
        if !all.is_empty() {
            return all.swap_remove(rng.gen_range(0..all.len()));
        }
    }
}
