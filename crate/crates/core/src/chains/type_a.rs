//! Type A: `J → a′_μ` by a diagonal torus, then `a′_μ → a_μ` by a
//! permutation of the standard basis.

use super::ie::solve_ie;
use super::{Chain, ChainStep};
use crate::deform::DeformationStep;
use crate::error::{Error, Result};
use crate::ideals::{ideal_a, ideal_a_prime, Partition};
use crate::liealg::LieModel;

/// One-based images of the permutation sending `a′_μ` to `a_μ`.
///
/// Rows `1..μ₁` are reversed. The column `μ₁ + Σ_{i>k} μ_i + 1` of the
/// `k`-th block goes to `n − k + 2`; the remaining columns keep their order
/// and fill `μ₁+1 ..= n−l+1`.
pub fn permutation_images(mu: &Partition) -> Vec<usize> {
    let p = mu.parts();
    let n = mu.size();
    let l = p.len();
    let m1 = p[0];
    let mut images = vec![0; n + 1];
    for (x, img) in images.iter_mut().enumerate().take(m1) {
        *img = m1 - x;
    }
    let special: Vec<usize> = (0..l).map(|k| m1 + p[k + 1..].iter().sum::<usize>() + 1).collect();
    for (k, &c) in special.iter().enumerate() {
        images[c - 1] = n - k + 1;
    }
    let mut next = m1 + 1;
    for c in m1 + 1..=n + 1 {
        if !special.contains(&c) {
            images[c - 1] = next;
            next += 1;
        }
    }
    images
}

pub fn chain_a(model: &LieModel, jordan: &crate::deform::Subspace, mu: &Partition) -> Result<Chain> {
    let sys = model.sys();
    if mu.size() != sys.rank() {
        return Err(Error::Unsupported(format!("{mu} is not a partition of {}", sys.rank())));
    }
    let sol = solve_ie(mu)?;
    let prime = ideal_a_prime(mu, sys)?.subspace(model);
    let target = ideal_a(mu, sys)?.subspace(model);
    Ok(Chain {
        start: jordan.clone(),
        steps: vec![
            ChainStep { step: DeformationStep::DiagMatrix { w: sol.w }, target: prime },
            ChainStep { step: DeformationStep::Permutation { images: permutation_images(mu) }, target },
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_is_bijective() {
        for n in 1..=8 {
            for mu in Partition::all(n) {
                let mut img = permutation_images(&mu);
                img.sort();
                assert_eq!(img, (1..=n + 1).collect::<Vec<_>>(), "{mu}");
            }
        }
    }

    #[test]
    fn single_row_reverses() {
        assert_eq!(permutation_images(&Partition(vec![3])), vec![3, 2, 1, 4]);
    }
}
